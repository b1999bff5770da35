from math import comb

import pytest
from hypothesis import given, strategies as st

from oimod.combinatorics import (
    DegreeCapError,
    IncreasingMap,
    compose,
    decompose_shifted,
    embed_prefix,
    enumerate_maps,
    get_degree_cap,
    hat,
    identity,
    iota,
    map_index,
    rank_map,
    set_degree_cap,
    sigma_lift,
    subsets_by_size,
    unrank_map,
)


@st.composite
def maps(draw, max_target=9):
    n = draw(st.integers(0, max_target))
    m = draw(st.integers(0, n))
    vals = draw(st.lists(st.integers(1, n), min_size=m, max_size=m, unique=True)) if n else []
    return IncreasingMap(n, tuple(sorted(vals)))


def test_examples():
    assert [a.values for a in enumerate_maps(2, 3)] == [(1, 2), (1, 3), (2, 3)]
    assert enumerate_maps(0, 4) == (IncreasingMap(4, ()),)
    assert enumerate_maps(3, 2) == ()
    assert iota(3).values == (2, 3, 4)
    assert sigma_lift(IncreasingMap(3, (1, 3))).values == (1, 2, 4)
    assert hat(IncreasingMap(6, (3, 5))) == (3, IncreasingMap(4, (1, 3)))
    assert embed_prefix(IncreasingMap(3, (2,)), (1,), 2).values == (1, 4)


def test_invalid_maps_rejected():
    for vals, n in [((2, 2), 3), ((3, 1), 3), ((4,), 3), ((0,), 3)]:
        with pytest.raises(ValueError):
            IncreasingMap(n, vals)


def test_counts_and_ranks_exhaustive():
    for n in range(9):
        for m in range(n + 1):
            ms = enumerate_maps(m, n)
            assert len(ms) == comb(n, m)
            for i, a in enumerate(ms):
                assert rank_map(a) == map_index(a) == i
                assert unrank_map(m, n, i) == a
            with pytest.raises(IndexError):
                unrank_map(m, n, len(ms))


@pytest.mark.parametrize("m,k,n", [(1, 2, 4), (2, 3, 5), (0, 2, 3), (2, 2, 6)])
def test_vandermonde_via_composites(m, k, n):
    # every map [m] -> [n] factors through [k] in exactly C(n-m, k-m) ways
    counts = {}
    for a in enumerate_maps(m, k):
        for b in enumerate_maps(k, n):
            g = compose(b, a)
            counts[g] = counts.get(g, 0) + 1
    assert set(counts) == set(enumerate_maps(m, n))
    assert set(counts.values()) == {comb(n - m, k - m)}


@given(maps(), st.data())
def test_compose_associative_and_unital(a, data):
    k = data.draw(st.integers(a.target, a.target + 3))
    n = data.draw(st.integers(k, k + 3))
    b = data.draw(st.sampled_from(enumerate_maps(a.target, k)))
    c = data.draw(st.sampled_from(enumerate_maps(k, n)))
    assert compose(c, compose(b, a)) == compose(compose(c, b), a)
    assert compose(identity(a.target), a) == a == compose(a, identity(a.source))


@given(maps(), st.data())
def test_sigma_is_functorial(a, data):
    n = data.draw(st.integers(a.target, a.target + 3))
    b = data.draw(st.sampled_from(enumerate_maps(a.target, n)))
    assert sigma_lift(compose(b, a)) == compose(sigma_lift(b), sigma_lift(a))
    assert sigma_lift(identity(a.source)) == identity(a.source + 1)


@given(maps())
def test_hat_normalises_first_value(a):
    if a.source == 0:
        with pytest.raises(ValueError):
            hat(a)
        return
    ell, h = hat(a)
    assert h.values[0] == 1 and ell == a.values[0]
    assert tuple(v + ell - 1 for v in h.values) == a.values


def test_shift_bijection_exhaustive():
    for m in range(4):
        for r in range(4):
            for n in range(7):
                seen = set()
                for E in subsets_by_size(r, m):
                    for a in enumerate_maps(m - len(E), n):
                        g = embed_prefix(a, E, r)
                        assert decompose_shifted(g, r) == (E, a)
                        seen.add(g)
                assert seen == set(enumerate_maps(m, n + r))


def test_subsets_order():
    assert subsets_by_size(3, 2) == ((), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3))
    assert subsets_by_size(2, 5)[-1] == (1, 2)


def test_degree_cap():
    old = get_degree_cap()
    try:
        set_degree_cap(5)
        enumerate_maps(2, 5)
        with pytest.raises(DegreeCapError):
            enumerate_maps(2, 6)
    finally:
        set_degree_cap(old)
