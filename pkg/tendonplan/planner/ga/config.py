from typing import Optional

from pydantic import BaseModel, Field


class GaConfig(BaseModel):
    """
    Settings of the genetic planner.

    Attributes:
        population_size (int): Chromosomes per generation. Default is 50.
        generations (int): Number of evolve steps after initialization. Default is 3.
        mutation_rate (float): Probability that an offspring is mutated. Default is 0.1.
        max_len (int): Longest walk, in edges, drawn at initialization. Default is 40.
        rng_seed (Optional[int]): Seed of the run's random generator. Default is None.
    """

    population_size: int = Field(default=50, ge=2)
    generations: int = Field(default=3, ge=1)
    mutation_rate: float = Field(default=0.1, ge=0.0, le=1.0)
    max_len: int = Field(default=40, ge=0)
    rng_seed: Optional[int] = None
