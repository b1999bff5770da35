import pytest

from oimod.combinatorics import IncreasingMap
from oimod.functors import (
    HypothesisError,
    ZeroModuleError,
    check_kappa_vbar,
    delta_dim,
    delta_h0_dim,
    kappa_dim,
    projected_vbar_presentation,
    shift_eval_dim,
    shift_presentation,
    shifted_decomposition,
    vbar_presentation,
    verify_what_span,
    what_generators,
)
from oimod.homology import h0_dims, h1_dims, prd, t0
from oimod.io import fixture
from oimod.linalg import QQ
from oimod.module import (
    Element,
    FreeModule,
    Presentation,
    dim_at,
    free_presentation,
    hilbert,
    relation_space,
    submodule_below_dim,
    zero_presentation,
)


def test_shifted_decomposition():
    dec = shifted_decomposition(FreeModule((1, 0)), 2)
    assert dec.summand_index == ((0, ()), (0, (1,)), (0, (2,)), (1, ()))
    assert dec.new_generator_degrees == (1, 0, 0, 0)
    with pytest.raises(ValueError):
        shifted_decomposition(FreeModule((1,)), -1)


def test_shift_fixtures():
    S, _ = shift_presentation(fixture("example42"), 2)
    assert S.free.generator_degrees == (1, 0, 0, 0)
    assert hilbert(S, 0, 6) == [n + 3 for n in range(7)]
    S, _ = shift_presentation(fixture("ramos"), 3)
    assert hilbert(S, 0, 6) == [1] * 7
    assert shift_presentation(fixture("M2"), 2)[0].free.generator_degrees == (2, 1, 1, 0)


def test_shift_matches_degreewise(gen_corpus):
    for P in gen_corpus[:50]:
        for r in range(3):
            S, _ = shift_presentation(P, r)
            assert hilbert(S, 0, 6) == [shift_eval_dim(P, r, n) for n in range(7)]


def test_shift_does_not_raise_t0(gen_corpus):
    for P in gen_corpus[:50]:
        seq = [t0(shift_presentation(P, r)[0]) for r in range(4)]
        assert all(b <= a for a, b in zip(seq, seq[1:]))


def test_kappa_delta_ramos():
    R = fixture("ramos")
    assert [kappa_dim(R, n) for n in range(8)] == [0] * 8
    assert [delta_dim(R, n) for n in range(8)] == [1] + [0] * 7


def test_kappa_delta_count(gen_corpus):
    # 0 -> kappa V -> V -> Sigma V -> Delta V -> 0
    for P in gen_corpus:
        for n in range(5):
            assert dim_at(P, n) - kappa_dim(P, n) == dim_at(P, n + 1) - delta_dim(P, n)


def test_delta_h0_free():
    # Delta M(m) = M(m-1), generated in degree m-1
    for m in range(1, 4):
        M = free_presentation([m])
        assert [delta_h0_dim(M, n) for n in range(5)] == [int(n == m - 1) for n in range(5)]
        assert [delta_dim(M, n) for n in range(5)] == [dim_at(free_presentation([m - 1]), n) for n in range(5)]


def test_what_generators_invariants(shift_cases):
    for P in shift_cases:
        for r in (prd(P), prd(P) + 1):
            data = what_generators(P, r)
            assert data.search_bound <= r
            V = vbar_presentation(P, r)
            assert V.free.generator_degrees == (data.d,) * len(data.top_generators)
            assert V.max_relation_degree <= r
            if data.d >= 1:
                assert all(a.values[0] == 1 for w in data.what_generators for _, a, _ in w.terms)


def test_delta_lowers_generation_degree(gen_corpus, shift_cases):
    for P in gen_corpus:
        d = t0(P)
        if d >= 0:
            assert all(delta_h0_dim(P, n) == 0 for n in range(d, d + 4))
    for P in shift_cases:
        d = t0(P)
        V = vbar_presentation(P, prd(P))
        assert all(delta_h0_dim(V, n) == 0 for n in range(d, d + 4))


def test_vbar_dims_are_shift_minus_lower_part(shift_cases):
    for P in shift_cases:
        r = prd(P)
        d = t0(P)
        V = vbar_presentation(P, r)
        S, _ = shift_presentation(P, r)
        for n in range(7):
            assert dim_at(V, n) == dim_at(S, n) - submodule_below_dim(S, d, n), (P, n)


def test_vbar_fixtures():
    V = vbar_presentation(fixture("example42"), 1)
    assert hilbert(V, 0, 6) == list(range(7))
    assert h1_dims(V).is_empty()
    for r in (2, 3, 4):
        V = vbar_presentation(fixture("ramos"), r)
        assert hilbert(V, 0, 8) == [0] + [1] * 8
        assert h1_dims(V).dims == {2: 1}


def test_vbar_degree_zero_generators():
    # V = M(0) / (empty-map relation in degree 2): dims 1, 1, 0, 0, ...
    F = FreeModule((0,))
    P = Presentation(QQ, F, (Element.build(QQ, 2, [(0, IncreasingMap(2, ()), 1)], F),))
    assert hilbert(P, 0, 4) == [1, 1, 0, 0, 0]
    r = prd(P)
    assert verify_what_span(P, r, 6).passed
    assert check_kappa_vbar(P, r, 6).passed


def test_vbar_rejections():
    with pytest.raises(ZeroModuleError):
        vbar_presentation(zero_presentation(), 1)
    F = FreeModule((0, 1))
    # the degree-1 generator is killed, so t0 = 0 is below the top generator degree
    P = Presentation(QQ, F, (Element.build(QQ, 1, [(1, IncreasingMap(1, (1,)), 1)], F),))
    assert t0(P) == 0
    with pytest.raises(ValueError):
        vbar_presentation(P, 1)


def test_check_kappa_vbar_hypothesis():
    R = fixture("ramos")
    with pytest.raises(HypothesisError):
        check_kappa_vbar(R, 1, 5)
    cert = check_kappa_vbar(R, 1, 5, force=True)
    assert cert.exploratory
    assert cert.to_dict()["exploratory"] == "hypothesis unmet"
    ok = check_kappa_vbar(R, 2, 10).to_dict()
    assert ok == {"check": "kappa-vbar-vanishes", "params": {"r": 2, "prd": 2}, "window": 10,
                  "pass": True, "first_failure": None}


def test_h0_of_vbar_sits_in_top_degree(shift_cases):
    for P in shift_cases[:25]:
        V = vbar_presentation(P, prd(P))
        assert set(h0_dims(V).dims) <= {t0(P)}


def test_whats_agree_with_direct_projection(shift_cases):
    for P in shift_cases:
        r = prd(P)
        A = vbar_presentation(P, r)
        B = projected_vbar_presentation(P, r)
        assert A.free == B.free
        for n in range(7):
            assert relation_space(A, n) == relation_space(B, n), (P, n)


def test_vbar_below_prd_uses_definition(shift_cases):
    for P in shift_cases[:25]:
        d = t0(P)
        for r in range(prd(P)):
            V = vbar_presentation(P, r)
            S, _ = shift_presentation(P, r)
            for n in range(6):
                assert dim_at(V, n) == dim_at(S, n) - submodule_below_dim(S, d, n)
