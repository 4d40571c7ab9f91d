import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverlimits.closedform import (
    closed_limit,
    coeff_A,
    coeff_b,
    enumerate_admissible,
    has_cycle,
    is_admissible,
)
from quiverlimits.exact import gen_binomial
from quiverlimits.series import QuiverSpec, classical_limit_oracle


def dfs_has_cycle(pairs):
    graph = {}
    for i, j in pairs:
        graph.setdefault(i, []).append(j)
    state = {}

    def visit(v):
        state[v] = 1
        for w in graph.get(v, []):
            if state.get(w) == 1 or (w not in state and visit(w)):
                return True
        state[v] = 2
        return False

    return any(v not in state and visit(v) for v in list(graph))


def brute_admissible(m, k):
    all_pairs = [(i, j) for i in range(m) for j in range(m)]
    out = []
    for subset in combinations(all_pairs, k):
        targets = [j for _, j in subset]
        if len(set(targets)) == k and not dfs_has_cycle(subset):
            out.append(tuple(sorted(subset)))
    return sorted(out)


def test_admissible_two_vertices():
    assert enumerate_admissible(2, 1) == [((0, 1),), ((1, 0),)]
    assert enumerate_admissible(3, 0) == [()]


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_admissible_matches_brute_force(m):
    for k in range(m):
        assert enumerate_admissible(m, k) == brute_admissible(m, k)


def test_admissible_three_two_count():
    assert len(enumerate_admissible(3, 2)) == len(brute_admissible(3, 2)) == 9


def test_cycle_detection():
    assert has_cycle([(0, 0)])
    assert has_cycle([(0, 1), (1, 2), (2, 0)])
    assert not has_cycle([(0, 1), (1, 2), (0, 3)])
    assert not is_admissible([(0, 1), (2, 1)])


@settings(max_examples=100)
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=6, unique=True))
def test_peel_matches_dfs(pairs):
    assert has_cycle(pairs) == dfs_has_cycle(pairs)


def test_coeff_A_two_vertices():
    rng = random.Random(3)
    for _ in range(30):
        a, b, g = (rng.randint(-4, 4) for _ in range(3))
        M, N = rng.randint(0, 4), rng.randint(0, 4)
        i, j = rng.randint(0, 4), rng.randint(0, 4)
        A = coeff_A(QuiverSpec([[a, b], [b, g]], [M, N]), (i, j))
        assert A(0) == M * b * i + N * b * j + M * N


def test_coeff_A_zero_index():
    spec = QuiverSpec([[1, 2, 0], [2, -1, 3], [0, 3, 2]], [2, 3, 5])
    assert coeff_A(spec, (0, 0, 0))(0) == 30


def three_vertex_numerator(al, be, ga, de, ep, ph, M, N, P, i, j, k):
    # the displayed 3x3 numerator, with the linear i-term carrying its factor M
    return (
        be * i * j * (N * de + M * ep)
        + de * i * k * (P * be + M * ep)
        + ep * j * k * (P * be + N * de)
        + M * be * de * i * i
        + M * i * (P * be + N * de)
        + N * be * ep * j * j
        + N * j * (P * be + M * ep)
        + P * de * ep * k * k
        + P * k * (N * de + M * ep)
        + M * N * P
    )


def test_coeff_A_three_vertices():
    rng = random.Random(11)
    for _ in range(40):
        al, be, ga, de, ep, ph = (rng.randint(-5, 5) for _ in range(6))
        M, N, P = (rng.randint(0, 4) for _ in range(3))
        i, j, k = (rng.randint(0, 3) for _ in range(3))
        spec = QuiverSpec([[al, be, de], [be, ga, ep], [de, ep, ph]], [M, N, P])
        assert coeff_A(spec, (i, j, k))(0) == three_vertex_numerator(al, be, ga, de, ep, ph, M, N, P, i, j, k)


def test_coeff_A_three_vertices_printed_form_at_unit_first_level():
    # with M = 1 the printed numerator is literal, including "i (P beta + N delta)"
    be, de, ep, N, P = 2, -1, 3, 2, 5
    i, j, k = 1, 1, 0
    spec = QuiverSpec([[0, be, de], [be, 0, ep], [de, ep, 0]], [1, N, P])
    printed = (
        be * i * j * (N * de + 1 * ep)
        + de * i * k * (P * be + 1 * ep)
        + ep * j * k * (P * be + N * de)
        + 1 * be * de * i * i
        + i * (P * be + N * de)
        + N * be * ep * j * j
        + N * j * (P * be + 1 * ep)
        + P * de * ep * k * k
        + P * k * (N * de + 1 * ep)
        + 1 * N * P
    )
    assert coeff_A(spec, (i, j, k))(0) == printed


@pytest.mark.parametrize("f", range(-3, 5))
@pytest.mark.parametrize("N", [1, 2, 3])
def test_coeff_b_single_vertex(f, N):
    spec = QuiverSpec([[f]], [N])
    for i in range(6):
        top = f * i + N
        if top == 0:
            continue
        sign = -1 if (f + 1) * i % 2 else 1
        assert coeff_b(spec, (i,)) == sign * Fraction(N, top) * gen_binomial(top, i)


def test_coeff_b_zero_index():
    spec = QuiverSpec([[1, -2, 0], [-2, 3, 1], [0, 1, -1]], [2, 1, 3])
    assert coeff_b(spec, (0, 0, 0)) == 1


def test_coeff_b_two_vertex_point():
    spec = QuiverSpec([[0, 1], [1, 0]], [1, 1])
    assert coeff_b(spec, (1, 1)) == classical_limit_oracle(spec, 2)[(1, 1)]


def test_coeff_b_regularizes_vanishing_top():
    # T_2 = N + beta * i = 0 at l = (1, 0)
    spec = QuiverSpec([[0, -1], [-1, 0]], [1, 1])
    y = classical_limit_oracle(spec, 3)
    assert coeff_b(spec, (1, 0)) == y[(1, 0)]


def random_spec(rng, m, levels):
    C = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            C[i][j] = C[j][i] = rng.randint(-3, 3)
    return QuiverSpec(C, [rng.choice(levels) for _ in range(m)])


@pytest.mark.parametrize("seed", range(12))
def test_closed_matches_oracle(seed):
    rng = random.Random(seed)
    spec = random_spec(rng, rng.randint(1, 3), [1, 2, 3])
    assert closed_limit(spec, 5) == classical_limit_oracle(spec, 5)


@pytest.mark.parametrize("seed", range(8))
def test_level_zero_consistency(seed):
    rng = random.Random(100 + seed)
    spec = random_spec(rng, rng.randint(2, 3), [0, 1, 2])
    if all(spec.levels):
        spec = spec.with_levels((0,) + spec.levels[1:])
    if not any(spec.levels):
        spec = spec.with_levels(spec.levels[:-1] + (1,))
    caps = [3 if n == 0 else None for n in spec.levels]
    assert closed_limit(spec, 4, caps) == classical_limit_oracle(spec, 4, caps)
