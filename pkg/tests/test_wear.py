import pytest
from pydantic import ValidationError

from tendonplan.errors import InvalidPathError
from tendonplan.types.path import Path
from tendonplan.wear import NUM_MOTORS, WearState, apply_path, motor_for, segment_key


def test_zero_state():
    state = WearState.zero()
    assert state.motor_steps == {0: 0, 1: 0, 2: 0, 3: 0}
    assert state.segment_use == {}
    assert state.total_steps == 0


def test_motor_mapping():
    assert [motor_for(s, a) for s in (0, 1) for a in (0, 1)] == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        motor_for(2, 0)


def test_segment_key_is_unordered():
    assert segment_key(1, 31, 30) == segment_key(1, 30, 31) == (1, 30, 31)


def test_apply_path_counts(zero_wear):
    # 29 -> 30 -> 31 moves along X twice, 31 -> 21 along Y once.
    state = apply_path(zero_wear, 0, [29, 30, 31, 21])
    assert state.motor_steps == {0: 140, 1: 70, 2: 0, 3: 0}
    assert state.segment_count(0, 29, 30) == 1
    assert state.segment_count(0, 31, 30) == 1
    assert state.segment_count(0, 21, 31) == 1
    assert state.segment_count(1, 29, 30) == 0
    assert zero_wear.total_steps == 0


def test_apply_path_additivity(random_wear):
    start = random_wear(7)
    first = [50, 51, 43, 42]
    second = [42, 32, 31, 30]
    state = apply_path(apply_path(start, 1, first), 1, second)

    x_edges = y_edges = 0
    for nodes in (first, second):
        for a, b in zip(nodes, nodes[1:]):
            if abs(a - b) == 1:
                x_edges += 1
            else:
                y_edges += 1
    assert state.motor(2) == start.motor(2) + 70 * x_edges
    assert state.motor(3) == start.motor(3) + 70 * y_edges
    assert state.motor(0) == start.motor(0)
    assert state.segment_count(1, 50, 51) == start.segment_count(1, 50, 51) + 1
    assert state.segment_count(1, 42, 43) == start.segment_count(1, 42, 43) + 1


def test_round_trip_through_same_segment(zero_wear):
    state = apply_path(zero_wear, 0, [30, 31, 30, 31])
    assert state.segment_count(0, 30, 31) == 3
    assert state.motor(0) == 210


def test_single_node_path_is_noop(zero_wear):
    assert apply_path(zero_wear, 0, [30]) == zero_wear


def test_apply_path_errors(zero_wear):
    with pytest.raises(InvalidPathError):
        apply_path(zero_wear, 0, [30, 32])
    with pytest.raises(InvalidPathError):
        apply_path(zero_wear, 2, [30, 31])
    with pytest.raises(InvalidPathError):
        apply_path(zero_wear, 0, Path(section=1, nodes=(30, 31)))


def test_state_validation():
    with pytest.raises(ValidationError):
        WearState(motor_steps={0: 0, 1: 0, 2: 0})
    with pytest.raises(ValidationError):
        WearState(motor_steps={m: -1 for m in range(NUM_MOTORS)})
    with pytest.raises(ValidationError):
        WearState(segment_use={(0, 30, 32): 1})
    with pytest.raises(ValidationError):
        WearState(segment_use={(0, 31, 30): 1})
    with pytest.raises(ValidationError):
        WearState(segment_use={(2, 30, 31): 1})


def test_random_state_is_seeded():
    assert WearState.random(3) == WearState.random(3)
    assert WearState.random(3) != WearState.random(4)
    state = WearState.random(3)
    assert len(state.segment_use) == 200
    assert all(0 <= v <= 80_000 for v in state.motor_steps.values())
