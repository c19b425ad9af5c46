import pytest

from simplicial_spectra.complex import ComplexError, canonical_form, is_isomorphic
from simplicial_spectra.extremal import check_condition_cond, gen_remark_k1, gen_tented
from simplicial_spectra.search import search_cond
from simplicial_spectra.spectral import q_spectral_radius


def test_n4_single_simplex():
    out = search_cond(4, 3, "exhaustive")
    assert out.exhaustive and len(out.classes) == 1
    assert out.classes[0].facets == ((1, 2, 3, 4),)


def test_n5_only_tented():
    out = search_cond(5, 3, "exhaustive")
    assert len(out.classes) == 1 and is_isomorphic(out.classes[0], gen_tented(5, 3))


def test_n6_exhaustive():
    out = search_cond(6, 3, "exhaustive")
    assert out.nodes_explored == 2**15 - 1
    assert sorted(canonical_form(K) for K in out.classes) == sorted(
        [canonical_form(gen_tented(6, 3)), canonical_form(gen_remark_k1())]
    )
    assert sorted(len(K.facets) for K in out.classes) == [10, 12]
    for K in out.classes:
        assert q_spectral_radius(K, 2).value == pytest.approx(10, abs=1e-8)


@pytest.mark.parametrize("n,r", [(4, 1), (5, 1), (5, 2), (6, 2), (5, 3), (6, 3)])
def test_backtracking_matches_exhaustive(n, r):
    a = search_cond(n, r, "exhaustive")
    b = search_cond(n, r, "backtracking")
    assert b.exhaustive
    assert [canonical_form(K) for K in a.classes] == [canonical_form(K) for K in b.classes]


@pytest.mark.parametrize("n,r", [(5, 2), (6, 2), (7, 2), (6, 4), (7, 4)])
def test_even_dimension_only_tented(n, r):
    out = search_cond(n, r, "backtracking", budget=60)
    assert out.exhaustive
    assert len(out.classes) == 1 and is_isomorphic(out.classes[0], gen_tented(n, r))


def test_graphs_are_complete_bipartite():
    for n in (4, 5, 6):
        out = search_cond(n, 1, "backtracking")
        for K in out.classes:
            assert check_condition_cond(K)
            assert q_spectral_radius(K, 0).value == pytest.approx(n, abs=1e-8)


def test_exhaustive_guard():
    with pytest.raises(ComplexError):
        search_cond(7, 3, "exhaustive")


def test_budget_exhaustion_is_reported():
    out = search_cond(8, 3, "backtracking", budget=0.0)
    assert not out.exhaustive


def test_unknown_mode():
    with pytest.raises(ValueError):
        search_cond(5, 3, "greedy")
