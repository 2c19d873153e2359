import sys

from tendonplan.cli import run

sys.exit(run())
