import random

import pytest

from tendonplan.ahp import group_weights
from tendonplan.env import SectionEnv
from tendonplan.errors import UnknownNodeError, UnreachableGoalError
from tendonplan.fitness import MultiFitness
from tendonplan.planner import AStarPlanner, heuristic, run_astar
from tendonplan.types.node import Node
from tendonplan.types.weights import CriteriaWeights


def test_oracle_optimality(env, random_wear, oracle):
    rng = random.Random(2024)
    for instance in range(500):
        start, goal = rng.randrange(len(env)), rng.randrange(len(env))
        weights = group_weights(rng.randint(1, 15))
        wear = random_wear(instance)
        section = instance % 2
        result = run_astar(env, start, goal, weights, wear, section=section)
        expected, _ = oracle(env, start, goal, weights, wear, section)

        costs = MultiFitness.build(weights, wear, goal, section, env)
        nodes = result.path.nodes
        assert nodes[0] == start and nodes[-1] == goal
        assert costs.path_edge_cost(nodes) == pytest.approx(expected, abs=1e-9)
        assert costs.path_edge_cost(nodes) + costs.terminal_cost(goal) == pytest.approx(
            result.total, abs=1e-9
        )


def test_heuristic_is_admissible(env, zero_wear, oracle):
    weights = group_weights(1)
    for goal in (0, 3, 14, 30, 60):
        for n in range(len(env)):
            remaining, _ = oracle(env, n, goal, weights, zero_wear)
            assert heuristic(n, goal, weights, env) <= remaining + 1e-12
            assert heuristic(n, goal, weights, env, "manhattan") <= remaining + 1e-12


def test_start_is_goal(env, zero_wear):
    result = run_astar(env, 30, 30, group_weights(4), zero_wear)
    assert result.path.nodes == (30,)
    assert result.total == 0.0


def test_classical_mode_is_shortest(env, random_wear):
    weights = group_weights(2)
    wear = random_wear(3)
    classical = run_astar(env, 50, 3, weights, wear, "classical")
    improved = run_astar(env, 50, 3, weights, wear)
    assert classical.path.num_edges == env.hop_distances(3)[50]
    # Both breakdowns are under the request weights, so improved never loses.
    assert improved.total <= classical.total + 1e-9


def test_intended_goal_accuracy(env, zero_wear):
    weights = group_weights(4)
    result = run_astar(env, 30, 31, weights, zero_wear, intended_goal=32)
    assert result.target_goal == 31
    assert result.intended_goal == 32
    assert result.breakdown.f_accuracy == pytest.approx(70 / 700)


def test_manhattan_metric_same_cost(env, random_wear):
    weights = group_weights(11)
    wear = random_wear(9)
    a = run_astar(env, 47, 14, weights, wear, metric="euclidean")
    b = run_astar(env, 47, 14, weights, wear, metric="manhattan")
    assert a.total == pytest.approx(b.total, abs=1e-9)


def test_unknown_nodes(env, zero_wear):
    with pytest.raises(UnknownNodeError):
        run_astar(env, 61, 3, CriteriaWeights.equal(), zero_wear)
    with pytest.raises(UnknownNodeError):
        run_astar(env, 3, 3, CriteriaWeights.equal(), zero_wear, intended_goal=-1)


def test_unreachable_goal(zero_wear):
    # Two nodes with no edge between them.
    env = SectionEnv(nodes=(Node.at(0, 0, 0), Node.at(1, 2, 0)), adjacency={0: (), 1: ()})
    with pytest.raises(UnreachableGoalError):
        run_astar(env, 0, 1, CriteriaWeights.equal(), zero_wear)


def test_planner_interface(env, zero_wear):
    planner = AStarPlanner(mode="classical")
    assert planner.algo == "astar-classical"
    result = planner.plan_section(env, 47, 14, group_weights(1), zero_wear, section=1)
    assert result.section == 1
    assert result.path.section == 1
    assert result.expanded >= 1


def test_distance_led_weights_match_classical(env, zero_wear):
    # Without wear every edge costs the same, so both modes find fewest-hop routes.
    weights = group_weights(1)
    for start in range(len(env)):
        for goal in range(len(env)):
            improved = run_astar(env, start, goal, weights, zero_wear)
            classical = run_astar(env, start, goal, weights, zero_wear, "classical")
            assert improved.total == pytest.approx(classical.total, abs=1e-9)
