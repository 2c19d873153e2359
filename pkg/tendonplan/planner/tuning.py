from statistics import fmean
from typing import List, Optional

import optuna
from pydantic import BaseModel, Field

from tendonplan.bench import PlanRequest, plan
from tendonplan.planner.ga import GaConfig
from tendonplan.utils import derive_seed, logger
from tendonplan.wear.wear_state import WearState

POPULATION_RANGE = (10, 100)
GENERATION_RANGE = (1, 10)


class TuningTrial(BaseModel):
    number: int
    config: GaConfig
    value: float


class TuningResult(BaseModel):
    """
    Outcome of a GA parameter search.

    Attributes:
        config (GaConfig): Best settings found.
        value (float): Mean improved-GA total of ``config``.
        trials (List[TuningTrial]): Every trial in order.
    """

    config: GaConfig
    value: float
    trials: List[TuningTrial] = Field(default_factory=list)


def tune_ga(
    request: PlanRequest,
    n_trials: int = 20,
    runs: int = 5,
    seed: Optional[int] = None,
    wear: Optional[WearState] = None,
) -> TuningResult:
    """
    Search GA settings that minimize the mean improved-GA total of ``request``.

    A TPE study samples ``mutation_rate`` in [0, 1], ``population_size`` in
    [10, 100] and ``generations`` in [1, 10]. Each trial plans the request
    ``runs`` times with seeds derived from ``seed`` and the repetition, so all
    trials face the same repetitions.

    Args:
        request (PlanRequest): Starts, goals and weights to tune for; ``algo`` is ignored.
        n_trials (int): Number of study trials.
        runs (int): Repetitions averaged per trial.
        seed (Optional[int]): Seed of the sampler and the repetitions.
        wear (Optional[WearState]): Wear snapshot.

    Returns:
        TuningResult: The best settings and the trial log.
    """
    if n_trials < 1 or runs < 1:
        raise ValueError("n_trials and runs must be at least 1")
    wear = wear or WearState.zero()
    seeds = [derive_seed(seed, run) for run in range(runs)]
    trials: List[TuningTrial] = []

    def objective(trial: optuna.Trial) -> float:
        config = request.ga.model_copy(
            update={
                "mutation_rate": trial.suggest_float("mutation_rate", 0.0, 1.0),
                "population_size": trial.suggest_int("population_size", *POPULATION_RANGE),
                "generations": trial.suggest_int("generations", *GENERATION_RANGE),
            }
        )
        totals = [
            plan(
                request.model_copy(update={"algo": "ga", "ga": config, "rng_seed": s}),
                wear,
            ).total
            for s in seeds
        ]
        value = fmean(totals)
        trials.append(TuningTrial(number=trial.number, config=config, value=value))
        logger.info("tuning.trial", number=trial.number, value=value, **trial.params)
        return value

    study: optuna.Study = optuna.create_study(
        direction="minimize",
        sampler=optuna.samplers.TPESampler(seed=seed),
    )
    study.optimize(objective, n_trials=n_trials)

    best = trials[study.best_trial.number]
    return TuningResult(config=best.config, value=best.value, trials=trials)
