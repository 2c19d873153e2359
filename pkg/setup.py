"""
tendonplan: resilient path planning for tendon-driven continuum robots
"""

from setuptools import setup, find_packages

# Read README.md for the long description
with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name="tendonplan",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    entry_points={"console_scripts": ["tendonplan=tendonplan.cli:run"]},
    description="Wear-aware path planning for two-section tendon-driven continuum robots",
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=[
        "pydantic>=2",
        "pyyaml",
        "optuna",
        "numpy",
        "structlog",
        "pandas",
        "sqlalchemy>=2",
        "rich",
        "tqdm",
    ],
    extras_require={"test": ["pytest", "networkx"]},
    python_requires=">=3.8.10",
    keywords=[
        "continuum robot",
        "path planning",
        "genetic algorithm",
        "a-star",
        "ahp",
    ],
)
