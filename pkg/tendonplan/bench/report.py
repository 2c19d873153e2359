import io
from typing import Dict, List, Literal, Optional

import pandas as pd
from pydantic import BaseModel, Field

from tendonplan.types import Mode
from tendonplan.utils import write_text

ReportFormat = Literal["csv", "json"]

CSV_COLUMNS = (
    "group",
    "algo",
    "mode",
    "runs",
    "mean_time_us",
    "best_pct",
    "equal_pct",
    "distinct_paths",
)

CRITERIA_COLUMNS = ("group", "algo", "lower_path", "upper_path", "total")


class AlgoStats(BaseModel):
    """
    Aggregates of one algorithm variant over the runs of one group.

    Comparisons are per run with tolerance 1e-9. ``equal_pct``, ``astar_better_pct``
    and ``astar_worse_pct`` compare against improved A* on the same run and add
    up to 100; they are ``None`` when improved A* was not part of the bench.

    Attributes:
        algo (str): ``ga`` or ``astar``.
        mode (Mode): ``improved`` or ``classical``.
        runs (int): Number of runs aggregated.
        mean_time_us (float): Mean planning wall time in microseconds.
        best_pct (float): Share of runs where this variant attains the run's best total.
        equal_pct (Optional[float]): Share of runs tied with improved A*.
        astar_better_pct (Optional[float]): Share of runs where improved A* is strictly better.
        astar_worse_pct (Optional[float]): Share of runs where improved A* is strictly worse.
        distinct_paths (int): Distinct (lower, upper) path pairs across the runs.
    """

    algo: str
    mode: Mode
    runs: int
    mean_time_us: float
    best_pct: float = Field(ge=0, le=100)
    equal_pct: Optional[float] = Field(default=None, ge=0, le=100)
    astar_better_pct: Optional[float] = Field(default=None, ge=0, le=100)
    astar_worse_pct: Optional[float] = Field(default=None, ge=0, le=100)
    distinct_paths: int


class GroupStats(BaseModel):
    group_index: int = Field(ge=1, le=15)
    algos: List[AlgoStats] = Field(default_factory=list)


class BenchReport(BaseModel):
    runs: int = 0
    use_alternatives: bool = False
    rng_seed: Optional[int] = None
    groups: List[GroupStats] = Field(default_factory=list)

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {"group": g.group_index, **stats.model_dump()}
            for g in self.groups
            for stats in g.algos
        ]
        return pd.DataFrame(rows, columns=list(CSV_COLUMNS))


class CriteriaRow(BaseModel):
    group: int
    algo: str
    lower_path: str
    upper_path: str
    total: float


class CriteriaAnalysis(BaseModel):
    """Path per criteria group and algorithm, plus distinct-path counts per algorithm."""

    rows: List[CriteriaRow] = Field(default_factory=list)
    distinct: Dict[str, int] = Field(default_factory=dict)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [row.model_dump() for row in self.rows], columns=list(CRITERIA_COLUMNS)
        )


def _frame_csv(frame: pd.DataFrame) -> str:
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def render_report(report: BenchReport, format: ReportFormat = "csv") -> str:
    if format == "csv":
        return _frame_csv(report.to_frame())
    if format == "json":
        return report.model_dump_json(indent=2) + "\n"
    raise ValueError(f"unknown report format {format!r}")


def emit_report(report: BenchReport, format: ReportFormat = "csv", out: str = "-") -> None:
    """
    Write a bench report as CSV (one row per group and algorithm variant) or JSON.

    Args:
        report (BenchReport): The report.
        format (ReportFormat): ``csv`` or ``json``.
        out (str): File path, or ``-`` for standard output.

    Raises:
        ValueError: If ``format`` is unknown.
        OSError: If ``out`` cannot be written.
    """
    write_text(render_report(report, format), out)


def render_criteria(analysis: CriteriaAnalysis, format: ReportFormat = "csv") -> str:
    if format == "csv":
        return _frame_csv(analysis.to_frame())
    if format == "json":
        return analysis.model_dump_json(indent=2) + "\n"
    raise ValueError(f"unknown report format {format!r}")


def emit_criteria(
    analysis: CriteriaAnalysis, format: ReportFormat = "csv", out: str = "-"
) -> None:
    write_text(render_criteria(analysis, format), out)
