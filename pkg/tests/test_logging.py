import json
import pathlib
import subprocess
import sys
import textwrap

import pytest

from tendonplan.utils.logging import configure_logging, logger


@pytest.fixture(autouse=True)
def _restore():
    yield
    configure_logging("warning")


def test_json_lines_to_file(tmp_path):
    target = tmp_path / "run.log"
    configure_logging("info", "json", str(target))
    logger.info("bench.start", groups=15, runs=100)
    logger.debug("ga.generation", generation=1)
    records = [json.loads(line) for line in target.read_text(encoding="utf-8").splitlines()]
    assert len(records) == 1
    assert records[0]["event"] == "bench.start"
    assert records[0]["groups"] == 15
    assert records[0]["level"] == "info"


def test_level_filters(tmp_path):
    target = tmp_path / "run.log"
    configure_logging("error", "json", str(target))
    logger.warning("plan.done")
    assert target.read_text(encoding="utf-8") == ""


def test_bad_arguments():
    with pytest.raises(ValueError):
        configure_logging("loud")
    with pytest.raises(ValueError):
        configure_logging("info", "xml")


def test_import_keeps_host_logging():
    script = textwrap.dedent(
        """
        import logging

        host = logging.StreamHandler()
        root = logging.getLogger()
        root.addHandler(host)
        root.setLevel(logging.DEBUG)

        import tendonplan

        print(host in root.handlers, logging.getLevelName(root.level), len(root.handlers))
        """
    )
    done = subprocess.run(
        [sys.executable, "-c", script],
        capture_output=True,
        text=True,
        check=True,
        cwd=pathlib.Path(__file__).resolve().parents[1],
    )
    assert done.stdout.split() == ["True", "DEBUG", "1"]
