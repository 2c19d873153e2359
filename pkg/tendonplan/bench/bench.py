import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple

import pandas as pd
import tqdm

from tendonplan.bench.report import (
    AlgoStats,
    BenchReport,
    CriteriaAnalysis,
    CriteriaRow,
    GroupStats,
)
from tendonplan.bench.request import PlanRequest
from tendonplan.env import GlobalEnv, alternative_goals, build_global_env
from tendonplan.planner import Planner, get_planner
from tendonplan.types import ALGOS
from tendonplan.types.plan import PlanResult, SectionPlan
from tendonplan.types.weights import CriteriaWeights
from tendonplan.utils import derive_seed, format_path, logger
from tendonplan.wear.wear_state import WearState

EQUAL_TOL: float = 1e-9

ALL_GROUPS: Tuple[int, ...] = tuple(range(1, 16))


def _plan_section(
    planner: Planner,
    env: GlobalEnv,
    section: int,
    start: int,
    goal: int,
    weights: CriteriaWeights,
    wear: WearState,
    use_alternatives: bool,
) -> SectionPlan:
    section_env = env.section(section)
    candidates = [goal]
    if use_alternatives:
        candidates += alternative_goals(section_env, goal)
    plans = [
        planner.plan_section(
            section_env, start, candidate, weights, wear, section=section, intended_goal=goal
        )
        for candidate in candidates
    ]
    # The intended goal comes first, so it wins ties.
    return min(plans, key=lambda p: p.total)


def plan(
    req: PlanRequest,
    wear: Optional[WearState] = None,
    env: Optional[GlobalEnv] = None,
) -> PlanResult:
    """
    Plan the lower and then the upper section of a request.

    With ``use_alternatives`` each section is planned to its intended goal and to
    the 3 nodes nearest it, and the candidate with the lowest total (accuracy
    measured against the intended goal) is kept.

    Args:
        req (PlanRequest): The request.
        wear (Optional[WearState]): Wear snapshot; a pristine robot when omitted.
        env (Optional[GlobalEnv]): Environment; the standard lattice when omitted.

    Returns:
        PlanResult: Both section plans and their summed breakdown.
    """
    begin = time.perf_counter()
    wear = wear or WearState.zero()
    env = env or build_global_env()
    weights = req.resolved_weights()
    planner = get_planner(req.algo, req.ga_config())

    lower = _plan_section(
        planner, env, 0, req.lower_start, req.lower_goal, weights, wear, req.use_alternatives
    )
    upper = _plan_section(
        planner, env, 1, req.upper_start, req.upper_goal, weights, wear, req.use_alternatives
    )
    elapsed = time.perf_counter() - begin
    result = PlanResult(
        algo=req.algo,
        lower=lower,
        upper=upper,
        breakdown=lower.breakdown.combine(upper.breakdown),
        elapsed=elapsed,
    )
    logger.debug(
        "plan.done",
        algo=req.algo,
        chosen_goal=result.chosen_goal,
        total=result.total,
        elapsed=elapsed,
    )
    return result


def _split_algo(algo: str) -> Tuple[str, str]:
    name, _, suffix = algo.partition("-")
    return name, "classical" if suffix else "improved"


def _run_cell(
    template: PlanRequest,
    group: int,
    run: int,
    algos: Sequence[str],
    wear: WearState,
    env: GlobalEnv,
) -> List[dict]:
    seed = derive_seed(template.rng_seed, group, run)
    records = []
    for algo in algos:
        result = plan(template.for_run(algo, group, seed), wear, env)
        records.append(
            {
                "group": group,
                "run": run,
                "variant": algo,
                "elapsed": result.elapsed,
                "total": result.total,
                "path": result.path_key(),
            }
        )
    return records


def _group_stats(group: int, frame: pd.DataFrame, algos: Sequence[str]) -> GroupStats:
    totals = frame.pivot(index="run", columns="variant", values="total")
    best = totals.min(axis=1)
    reference = totals["astar"] if "astar" in totals.columns else None

    stats = []
    for algo in algos:
        rows = frame[frame["variant"] == algo]
        column = totals[algo]
        name, mode = _split_algo(algo)
        comparison = {}
        if reference is not None:
            comparison = {
                "equal_pct": 100.0 * float(((reference - column).abs() <= EQUAL_TOL).mean()),
                "astar_better_pct": 100.0 * float((reference < column - EQUAL_TOL).mean()),
                "astar_worse_pct": 100.0 * float((reference > column + EQUAL_TOL).mean()),
            }
        stats.append(
            AlgoStats(
                algo=name,
                mode=mode,
                runs=len(rows),
                mean_time_us=float(rows["elapsed"].mean()) * 1e6,
                best_pct=100.0 * float((column <= best + EQUAL_TOL).mean()),
                distinct_paths=int(rows["path"].nunique()),
                **comparison,
            )
        )
    return GroupStats(group_index=group, algos=stats)


def run_bench(
    groups: Iterable[int] = ALL_GROUPS,
    template: Optional[PlanRequest] = None,
    runs: Optional[int] = None,
    *,
    algos: Sequence[str] = ALGOS,
    wear: Optional[WearState] = None,
    workers: int = 1,
    progress: bool = False,
) -> BenchReport:
    """
    Run every algorithm variant on every group for ``runs`` repetitions.

    Each (group, repetition) cell plans with a seed derived from the template
    seed, the group and the repetition, so all variants of a cell share it.
    The wear snapshot is fixed for the whole bench.

    Args:
        groups (Iterable[int]): Criteria groups to run.
        template (Optional[PlanRequest]): Starts, goals, alternatives, GA settings and base seed.
        runs (Optional[int]): Repetitions per group; defaults to ``template.runs``.
        algos (Sequence[str]): Variants to run.
        wear (Optional[WearState]): Wear snapshot; a pristine robot when omitted.
        workers (int): Threads for the repetitions.
        progress (bool): Show a progress bar on stderr.

    Returns:
        BenchReport: Per-group, per-variant aggregates.
    """
    template = template or PlanRequest(group_index=1)
    runs = template.runs if runs is None else runs
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    unknown = [a for a in algos if a not in ALGOS]
    if unknown:
        raise ValueError(f"unknown algorithms {unknown}; expected a subset of {list(ALGOS)}")
    groups = list(groups)
    for group in groups:
        if group not in ALL_GROUPS:
            raise ValueError(f"group index must be in 1..15, got {group}")

    wear = wear or WearState.zero()
    env = build_global_env()
    cells = [(group, run) for group in groups for run in range(runs)]
    logger.info("bench.start", groups=len(groups), runs=runs, algos=list(algos), workers=workers)

    def work(cell: Tuple[int, int]) -> List[dict]:
        return _run_cell(template, cell[0], cell[1], algos, wear, env)

    with tqdm.tqdm(total=len(cells), disable=not progress, leave=False) as pbar:
        if workers == 1:
            results = []
            for cell in cells:
                results.append(work(cell))
                pbar.update(1)
        else:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                results = []
                for records in executor.map(work, cells):
                    results.append(records)
                    pbar.update(1)

    frame = pd.DataFrame([record for records in results for record in records])
    report = BenchReport(
        runs=runs, use_alternatives=template.use_alternatives, rng_seed=template.rng_seed
    )
    for group in groups:
        report.groups.append(_group_stats(group, frame[frame["group"] == group], algos))
    logger.info("bench.done", cells=len(cells))
    return report


def criteria_analysis(
    template: Optional[PlanRequest] = None,
    groups: Iterable[int] = ALL_GROUPS,
    algos: Sequence[str] = ("ga", "astar"),
    wear: Optional[WearState] = None,
) -> CriteriaAnalysis:
    """
    Plan once per criteria group and algorithm and tabulate the paths.

    GA runs of group ``g`` use the seed derived from the template seed and ``g``.
    ``distinct`` counts the different (lower, upper) path pairs each algorithm
    produced across the groups.
    """
    template = template or PlanRequest(group_index=1)
    wear = wear or WearState.zero()
    env = build_global_env()
    analysis = CriteriaAnalysis()
    seen = {algo: set() for algo in algos}
    for group in groups:
        seed = derive_seed(template.rng_seed, group)
        for algo in algos:
            result = plan(template.for_run(algo, group, seed), wear, env)
            seen[algo].add(result.path_key())
            analysis.rows.append(
                CriteriaRow(
                    group=group,
                    algo=algo,
                    lower_path=format_path(result.lower_path.nodes),
                    upper_path=format_path(result.upper_path.nodes),
                    total=result.total,
                )
            )
    analysis.distinct = {algo: len(paths) for algo, paths in seen.items()}
    return analysis
