import math

import pytest
from hypothesis import given, strategies as st

from kexnet.errors import InvalidSizeError
from kexnet.oracle import chromatic_index_lower_bound, min_steps_bruteforce
from kexnet.protocols import (
    generate_fcn_full,
    generate_fcn_single,
    generate_lch,
    generate_star,
    merge_budget,
    raw_distance_steps,
    sbep_formula,
)
from kexnet.schedule import validate_schedule
from kexnet.topology import TopologyKind

# Published step counts for star networks of 2..20 hosts.
STEP_TABLE = {
    2: 1, 3: 3, 4: 3, 5: 6, 6: 6, 7: 8, 8: 8, 9: 12, 10: 12,
    11: 14, 12: 14, 13: 17, 14: 17, 15: 19, 16: 19, 17: 22,
    18: 22, 19: 24, 20: 24,
}


@pytest.mark.parametrize("n,expected", sorted(STEP_TABLE.items()))
def test_formula_matches_table(n, expected):
    assert sbep_formula(n) == expected


def test_formula_rejects_tiny():
    with pytest.raises(InvalidSizeError):
        sbep_formula(1)


@pytest.mark.parametrize("n", range(5, 50, 2))
def test_formula_odd_even_parity(n):
    assert sbep_formula(n) == sbep_formula(n + 1)


def test_star_reproduces_worked_example():
    steps = [
        [(e.initiator, e.responder) for e in step.exchanges]
        for step in generate_star(5).steps
    ]
    assert steps == [
        [(1, 2), (3, 4)],
        [(2, 3), (4, 5)],
        [(5, 1)],
        [(1, 3), (2, 4)],
        [(3, 5), (4, 1)],
        [(5, 2)],
    ]


def test_star_smallest():
    s = generate_star(2)
    assert len(s.steps) == 1
    assert [(e.initiator, e.responder) for e in s.steps[0].exchanges] == [(1, 2)]


def circ_distance(n, a, b):
    return min((a - b) % n, (b - a) % n)


def test_star_7_has_one_merged_residual():
    s = generate_star(7)
    assert len(s.steps) == 8
    mixed = [
        step
        for step in s.steps
        if len({circ_distance(7, e.initiator, e.responder) for e in step.exchanges}) > 1
    ]
    assert len(mixed) == 1
    assert len({circ_distance(7, e.initiator, e.responder) for e in mixed[0].exchanges}) == 2


def test_star_12():
    s = generate_star(12)
    assert len(s.steps) == 14
    assert validate_schedule(s).ok


@pytest.mark.parametrize("n", range(2, 51))
def test_star_valid_and_counted(n):
    s = generate_star(n)
    assert validate_schedule(s).ok
    assert len(s.steps) == sbep_formula(n)


def test_fcn_full():
    s = generate_fcn_full(3)
    assert [(e.initiator, e.responder) for e in s.steps[0].exchanges] == [
        (1, 2), (1, 3), (2, 3)
    ]
    s6 = generate_fcn_full(6)
    assert len(s6.steps) == 1
    assert len(s6.steps[0].exchanges) == 15
    assert len(generate_fcn_full(2).steps) == 1


@pytest.mark.parametrize("n,steps", [(2, 1), (4, 3), (5, 5)])
def test_fcn_single_counts(n, steps):
    s = generate_fcn_single(n)
    assert len(s.steps) == steps
    assert validate_schedule(s).ok


@pytest.mark.parametrize("n", range(2, 31))
def test_fcn_single_matches_chromatic_bound(n):
    assert len(generate_fcn_single(n).steps) == chromatic_index_lower_bound(n)


@pytest.mark.parametrize("n", range(2, 9))
def test_fcn_single_meets_oracle_minimum(n):
    minimum = min_steps_bruteforce(TopologyKind.FCN_SINGLE, n).min_steps
    assert len(generate_fcn_single(n).steps) == minimum


def test_lch_small():
    assert len(generate_lch(2).steps) == 1
    assert len(generate_lch(3).steps) == 2


def test_lch_8_bounds():
    count = len(generate_lch(8).steps)
    lower = math.ceil(math.comb(9, 3) / 7)
    assert lower <= count <= 28


def test_lch_quadratic_growth():
    from kexnet.analysis import fit_linear

    ns = [8, 16, 32, 64]
    counts = [len(generate_lch(n).steps) for n in ns]
    fit = fit_linear([(math.log(n), math.log(c)) for n, c in zip(ns, counts)])
    assert 1.7 <= fit.slope <= 2.3


def test_raw_distance_steps_examples():
    assert raw_distance_steps(5) == [(1, 3), (2, 3)]
    assert raw_distance_steps(4) == [(1, 2), (2, 1)]
    assert raw_distance_steps(8) == [(1, 2), (2, 3), (3, 3), (4, 1)]


def test_merge_budget_examples():
    assert merge_budget(7) == 1
    assert merge_budget(5) == 0
    assert merge_budget(19) == 3


@pytest.mark.parametrize("n", range(2, 51))
def test_merge_budget_nonnegative(n):
    assert merge_budget(n) >= 0


@given(n=st.integers(min_value=2, max_value=50))
def test_star_never_beats_chromatic_bound(n):
    overhead = len(generate_star(n).steps) - len(generate_fcn_single(n).steps)
    assert overhead >= 0


@pytest.mark.parametrize(
    "gen", [generate_star, generate_fcn_full, generate_fcn_single, generate_lch]
)
@pytest.mark.parametrize("n", [2, 7, 20])
def test_generators_deterministic(gen, n):
    assert gen(n) == gen(n) == gen(n)
