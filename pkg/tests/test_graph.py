from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from radixgraph.errors import CapacityError, ValidationError
from radixgraph.graph import (
    GraphParams,
    build_graph,
    census,
    cycle_length_of,
    cycle_of,
    iterate,
    reverse_step,
    step,
)
from radixgraph.numtheory import euler_phi


def test_params_modulus():
    assert GraphParams(10, 4).modulus == 39
    assert GraphParams(12, 3).modulus == 35
    assert GraphParams(2, 1).modulus == 1


def test_params_validate():
    with pytest.raises(ValidationError):
        GraphParams(1, 4)
    with pytest.raises(ValidationError):
        GraphParams(10, 0)


@pytest.mark.parametrize(
    "base,n,x,want",
    [(10, 4, 25, 16), (10, 4, 0, 0), (10, 4, 4, 1), (12, 3, 7, 14), (10, 4, 13, 13)],
)
def test_step_examples(base, n, x, want):
    assert step(GraphParams(base, n), x) == want


def test_step_rejects_out_of_range():
    with pytest.raises(ValidationError):
        step(GraphParams(10, 4), 39)
    with pytest.raises(ValidationError):
        step(GraphParams(10, 4), -1)


def test_iterate_examples():
    p = GraphParams(10, 4)
    assert iterate(p, 1, 3) == 25
    assert iterate(p, 1, 0) == 1
    assert iterate(p, 7, 0) == 7
    # d = 17 vertices sit on a 16-cycle, so 16 steps close the loop
    assert iterate(GraphParams(10, 12), 7, 16) == 7
    assert iterate(p, 1, 6) == 1


def test_iterate_validates():
    with pytest.raises(ValidationError):
        iterate(GraphParams(10, 4), 1, -1)


def test_reverse_step_examples():
    p = GraphParams(10, 4)
    assert reverse_step(p, 1) == 4
    assert reverse_step(p, 0) == 0
    q = GraphParams(12, 3)
    assert reverse_step(q, 7) == 21
    assert step(q, 21) == 7


def test_cycle_of_examples():
    assert cycle_of(GraphParams(10, 4), 1) == [1, 10, 22, 25, 16, 4]
    assert cycle_of(GraphParams(10, 4), 0) == [0]
    assert cycle_of(GraphParams(12, 3), 7) == [7, 14, 28, 21]
    assert cycle_of(GraphParams(10, 4), 13) == [13]


@pytest.mark.parametrize(
    "base,n,x,want",
    [(10, 4, 13, 1), (10, 4, 0, 1), (10, 4, 1, 6), (10, 12, 17, 6), (10, 12, 7, 16), (12, 3, 7, 4)],
)
def test_cycle_length_examples(base, n, x, want):
    assert cycle_length_of(GraphParams(base, n), x) == want


def test_census_small():
    rows = census(GraphParams(10, 4))
    assert [(r.d, r.order, r.phi, r.cycle_count, r.cycle_length) for r in rows] == [
        (1, 1, 1, 1, 1),
        (3, 1, 2, 2, 1),
        (13, 6, 12, 2, 6),
        (39, 6, 24, 4, 6),
    ]


def test_census_trivial_graph():
    assert [(r.d, r.cycle_count) for r in census(GraphParams(2, 1))] == [(1, 1)]


def test_census_vertex_total():
    for base, n in [(10, 4), (10, 12), (12, 3), (2, 8), (16, 40)]:
        rows = census(GraphParams(base, n))
        assert sum(r.phi for r in rows) == base * n - 1
        assert sum(r.cycle_count * r.cycle_length for r in rows) == base * n - 1


def test_build_graph_small():
    g = build_graph(GraphParams(10, 4))
    assert len(g.successor) == 39
    assert g.cycles[0] == (0,)
    assert (1, 10, 22, 25, 16, 4) in g.cycles
    assert (13,) in g.cycles and (26,) in g.cycles
    assert sorted(g.cycle_lengths()) == [1, 1, 1, 6, 6, 6, 6, 6, 6]


def test_build_graph_canonical_order():
    g = build_graph(GraphParams(12, 3))
    assert sorted(g.cycle_lengths()) == [1, 4, 6, 12, 12]
    starts = [c[0] for c in g.cycles]
    assert starts == sorted(starts)
    for c in g.cycles:
        assert c[0] == min(c)


def test_build_graph_successor_matches_step():
    p = GraphParams(12, 3)
    g = build_graph(p)
    for x in range(p.modulus):
        assert g.successor[x] == step(p, x)


def test_build_graph_cap():
    with pytest.raises(CapacityError):
        build_graph(GraphParams(10, 200), cap=100)


@st.composite
def params_and_vertex(draw, max_modulus=5000):
    base = draw(st.integers(2, 16))
    n = draw(st.integers(1, max(1, (max_modulus + 1) // base)))
    p = GraphParams(base, n)
    x = draw(st.integers(0, p.modulus - 1))
    return p, x


@given(params_and_vertex())
def test_iterate_agrees_with_repeated_step(pv):
    p, x = pv
    i = x % 40
    y = x
    for _ in range(i):
        y = step(p, y)
    assert iterate(p, x, i) == y


@given(params_and_vertex())
def test_reverse_step_inverts_step(pv):
    p, x = pv
    assert reverse_step(p, step(p, x)) == x
    assert step(p, reverse_step(p, x)) == x


@given(params_and_vertex())
def test_cycle_contains_x_and_has_predicted_length(pv):
    p, x = pv
    cyc = cycle_of(p, x)
    assert cyc[0] == x
    assert len(cyc) == cycle_length_of(p, x)
    assert len(set(cyc)) == len(cyc)


@given(st.integers(2, 16), st.integers(1, 150))
@settings(deadline=None)
def test_graph_is_permutation_and_census_agrees(base, n):
    p = GraphParams(base, n)
    g = build_graph(p)
    assert sorted(g.successor) == list(range(p.modulus))
    # every vertex in exactly one cycle, and cycles follow the successor map
    seen = [v for c in g.cycles for v in c]
    assert sorted(seen) == list(range(p.modulus))
    for c in g.cycles:
        for i, v in enumerate(c):
            assert g.successor[v] == c[(i + 1) % len(c)]
    # analytic census predicts the materialized cycle length multiset
    predicted = Counter()
    for row in census(p):
        predicted[row.cycle_length] += row.cycle_count
    assert predicted == Counter(g.cycle_lengths())


@given(st.integers(2, 16), st.integers(1, 400))
def test_census_phi_sum(base, n):
    p = GraphParams(base, n)
    rows = census(p)
    assert sum(r.phi for r in rows) == p.modulus
    assert [r.phi for r in rows] == [euler_phi(r.d) for r in rows]
    assert all(r.phi == r.cycle_count * r.cycle_length for r in rows)
