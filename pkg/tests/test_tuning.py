import pytest

from tendonplan.bench import PlanRequest
from tendonplan.planner.ga import GaConfig
from tendonplan.planner.tuning import GENERATION_RANGE, POPULATION_RANGE, tune_ga


def test_tune_ga_small_study():
    request = PlanRequest(group_index=5, ga=GaConfig(max_len=12))
    result = tune_ga(request, n_trials=3, runs=1, seed=0)
    assert len(result.trials) == 3
    assert result.value == min(t.value for t in result.trials)
    config = result.config
    assert POPULATION_RANGE[0] <= config.population_size <= POPULATION_RANGE[1]
    assert GENERATION_RANGE[0] <= config.generations <= GENERATION_RANGE[1]
    assert 0.0 <= config.mutation_rate <= 1.0
    assert config.max_len == 12


def test_tune_ga_is_seeded():
    request = PlanRequest(group_index=1)
    a = tune_ga(request, n_trials=2, runs=1, seed=4)
    b = tune_ga(request, n_trials=2, runs=1, seed=4)
    assert a == b


def test_tune_ga_arguments():
    with pytest.raises(ValueError):
        tune_ga(PlanRequest(group_index=1), n_trials=0)
