import random

import pytest

from tendonplan.bench import (
    CRITERIA_COLUMNS,
    CSV_COLUMNS,
    BenchReport,
    PlanRequest,
    criteria_analysis,
    emit_report,
    plan,
    render_criteria,
    render_report,
    run_bench,
)
from tendonplan.env import build_section_env
from tendonplan.planner.ga import GaConfig
from tendonplan.types import ALGOS
from tendonplan.types.weights import CriteriaWeights
from tendonplan.wear import WearState

SMALL_GA = GaConfig(population_size=10, generations=2)


def test_request_defaults():
    req = PlanRequest(group_index=1)
    assert (req.lower_start, req.lower_goal, req.upper_start, req.upper_goal) == (50, 3, 47, 14)
    assert req.resolved_weights().w == pytest.approx((0.75, 1 / 12, 1 / 12, 1 / 12), abs=1e-3)


def test_request_validation():
    with pytest.raises(ValueError):
        PlanRequest()
    with pytest.raises(ValueError):
        PlanRequest(group_index=1, weights=CriteriaWeights.equal())
    with pytest.raises(ValueError):
        PlanRequest(group_index=1, lower_goal=61)
    with pytest.raises(ValueError):
        PlanRequest(group_index=1, runs=0)
    assert PlanRequest(weights=CriteriaWeights.equal()).resolved_weights() == CriteriaWeights.equal()


def test_astar_plan_matches_oracle(oracle):
    env = build_section_env()
    wear = WearState.random(12)
    req = PlanRequest(group_index=1)
    result = plan(req, wear)
    weights = req.resolved_weights()
    lower, _ = oracle(env, 50, 3, weights, wear, 0)
    upper, _ = oracle(env, 47, 14, weights, wear, 1)
    assert result.lower.total == pytest.approx(lower, abs=1e-9)
    assert result.upper.total == pytest.approx(upper, abs=1e-9)
    assert result.total == pytest.approx(lower + upper, abs=1e-9)
    assert result.chosen_goal == (3, 14)
    assert result.lower_path.section == 0
    assert result.upper_path.section == 1


def test_alternatives_keep_intended_goal_when_accuracy_dominates():
    result = plan(PlanRequest(group_index=4, use_alternatives=True))
    assert result.chosen_goal == (3, 14)


def test_alternatives_can_pick_nearby_goal():
    single = plan(PlanRequest(group_index=1))
    multi = plan(PlanRequest(group_index=1, use_alternatives=True))
    assert multi.total <= single.total + 1e-9
    assert multi.lower.intended_goal == 3
    assert multi.lower.breakdown.f_accuracy == pytest.approx(
        build_section_env().distance(multi.lower.target_goal, 3) / 700
    )


def test_alternatives_never_worse():
    rng = random.Random(17)
    size = len(build_section_env())
    for trial in range(100):
        algo = "astar" if trial % 4 else "ga"
        fields = dict(
            lower_start=rng.randrange(size),
            lower_goal=rng.randrange(size),
            upper_start=rng.randrange(size),
            upper_goal=rng.randrange(size),
            group_index=rng.randint(1, 15),
            algo=algo,
            rng_seed=trial,
            ga=SMALL_GA,
        )
        wear = WearState.random(trial)
        single = plan(PlanRequest(**fields), wear)
        multi = plan(PlanRequest(**fields, use_alternatives=True), wear)
        assert multi.total <= single.total + 1e-9


def test_ga_plan_is_reproducible():
    req = PlanRequest(group_index=9, algo="ga", rng_seed=5)
    a, b = plan(req), plan(req)
    assert a.to_output() == b.to_output()


def test_start_equals_goal():
    result = plan(PlanRequest(group_index=2, lower_start=30, lower_goal=30, upper_start=7, upper_goal=7))
    assert result.total == 0.0
    assert result.lower_path.nodes == (30,)


def _check_dominance(groups, runs, seed):
    template = PlanRequest(group_index=1, rng_seed=seed, ga=SMALL_GA)
    report = run_bench(groups, template, runs, wear=WearState.random(seed))
    for group in report.groups:
        for stats in group.algos:
            assert stats.runs == runs
            assert stats.astar_worse_pct == 0.0
            assert stats.equal_pct + stats.astar_better_pct + stats.astar_worse_pct == pytest.approx(100.0)
        astar = next(s for s in group.algos if s.algo == "astar" and s.mode == "improved")
        assert astar.best_pct == 100.0
        assert astar.equal_pct == 100.0


def test_dominance_small():
    _check_dominance([1, 5, 15], 3, seed=1)


@pytest.mark.slow
def test_dominance_full():
    _check_dominance(range(1, 16), 100, seed=2024)


def test_single_run_report():
    report = run_bench([7], PlanRequest(group_index=1, rng_seed=0, ga=SMALL_GA), 1)
    assert [g.group_index for g in report.groups] == [7]
    stats = report.groups[0].algos
    assert [(s.algo, s.mode) for s in stats] == [
        ("astar", "improved"),
        ("ga", "improved"),
        ("astar", "classical"),
        ("ga", "classical"),
    ]
    assert all(s.runs == 1 and s.mean_time_us > 0 and s.distinct_paths == 1 for s in stats)


def test_subset_without_astar_has_no_comparison():
    report = run_bench([1], PlanRequest(group_index=1, rng_seed=0, ga=SMALL_GA), 2, algos=["ga"])
    stats = report.groups[0].algos[0]
    assert stats.equal_pct is None
    assert stats.best_pct == 100.0


def test_workers_do_not_change_results():
    template = PlanRequest(group_index=1, rng_seed=3, ga=SMALL_GA)
    serial = run_bench([2, 3], template, 4)
    threaded = run_bench([2, 3], template, 4, workers=3)
    for a, b in zip(serial.groups, threaded.groups):
        for x, y in zip(a.algos, b.algos):
            assert x.model_dump(exclude={"mean_time_us"}) == y.model_dump(exclude={"mean_time_us"})


def test_bench_argument_checks():
    with pytest.raises(ValueError):
        run_bench([16], PlanRequest(group_index=1), 1)
    with pytest.raises(ValueError):
        run_bench([1], PlanRequest(group_index=1), 0)
    with pytest.raises(ValueError):
        run_bench([1], PlanRequest(group_index=1), 1, algos=["bfs"])


def test_csv_header_and_rows():
    report = run_bench([1, 2], PlanRequest(group_index=1, rng_seed=0, ga=SMALL_GA), 1)
    lines = render_report(report, "csv").splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[0] == "group,algo,mode,runs,mean_time_us,best_pct,equal_pct,distinct_paths"
    assert len(lines) == 1 + 2 * len(ALGOS)
    assert lines[1].startswith("1,astar,improved,1,")


def test_empty_report_is_header_only():
    assert render_report(BenchReport(), "csv") == ",".join(CSV_COLUMNS) + "\n"


def test_json_round_trip():
    report = run_bench([4], PlanRequest(group_index=1, rng_seed=0, ga=SMALL_GA), 2)
    assert BenchReport.model_validate_json(render_report(report, "json")) == report


def test_emit_report_is_deterministic(tmp_path):
    report = run_bench([4], PlanRequest(group_index=1, rng_seed=0, ga=SMALL_GA), 1)
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    emit_report(report, "csv", str(first))
    emit_report(report, "csv", str(second))
    assert first.read_bytes() == second.read_bytes()
    with pytest.raises(ValueError):
        emit_report(report, "xml", str(first))


def test_criteria_analysis():
    analysis = criteria_analysis(PlanRequest(group_index=1, rng_seed=0))
    assert len(analysis.rows) == 30
    assert {row.algo for row in analysis.rows} == {"ga", "astar"}
    assert analysis.distinct["ga"] >= analysis.distinct["astar"]
    lines = render_criteria(analysis, "csv").splitlines()
    assert lines[0] == ",".join(CRITERIA_COLUMNS)
    assert lines[1].split(",")[2].startswith("50-")


@pytest.mark.slow
def test_timing_ordering():
    template = PlanRequest(group_index=1, rng_seed=0)
    single = run_bench(range(1, 16), template, 20, algos=["astar", "ga"])
    for group in single.groups:
        astar, ga = group.algos
        assert astar.mean_time_us < ga.mean_time_us

    multi = run_bench(
        [1], template.model_copy(update={"use_alternatives": True}), 20, algos=["astar", "ga"]
    )
    for one, four in zip(single.groups[0].algos, multi.groups[0].algos):
        assert 2.0 * one.mean_time_us <= four.mean_time_us <= 6.0 * one.mean_time_us
