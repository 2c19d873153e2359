from .bench import ALL_GROUPS, EQUAL_TOL, criteria_analysis, plan, run_bench
from .report import (
    CRITERIA_COLUMNS,
    CSV_COLUMNS,
    AlgoStats,
    BenchReport,
    CriteriaAnalysis,
    CriteriaRow,
    GroupStats,
    emit_criteria,
    emit_report,
    render_criteria,
    render_report,
)
from .request import PlanRequest

__all__ = [
    "ALL_GROUPS",
    "AlgoStats",
    "BenchReport",
    "CRITERIA_COLUMNS",
    "CSV_COLUMNS",
    "CriteriaAnalysis",
    "CriteriaRow",
    "EQUAL_TOL",
    "GroupStats",
    "PlanRequest",
    "criteria_analysis",
    "emit_criteria",
    "emit_report",
    "plan",
    "render_criteria",
    "render_report",
    "run_bench",
]
