"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary."""

import itertools
import time
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from simplicial_spectra.boundary import (
    FaceVector,
    laplacian_signed,
    q_down,
    q_up,
    quadratic_form,
    signed_boundary,
)
from simplicial_spectra.complex import (
    boundary_faces,
    canonical_form,
    from_facets,
    is_path_connected,
)
from simplicial_spectra.extremal import (
    bound_face_count,
    check_condition_cond,
    contains_delta,
    gen_complete,
    gen_remark_k1,
    gen_remark_k2,
    gen_rhombic,
    gen_tented,
    turan_upper_corollary,
    turan_upper_direct,
)
from simplicial_spectra.homology import betti, is_basic_hole
from simplicial_spectra.search import search_cond
from simplicial_spectra.spectral import numeric_nullity, q_spectral_radius, spectral_radius

from conftest import random_complexes

pytestmark = pytest.mark.acceptance


def test_c1_tented_spectra():
    """1: tented radius rn - r^2 + 1 for r <= 4, n <= 10 (1e-8, < 10 s)"""
    start = time.monotonic()
    for r in range(1, 5):
        for n in range(r + 1, 11):
            q = q_spectral_radius(gen_tented(n, r), r - 1).value
            assert abs(q - (r * n - r * r + 1)) <= 1e-8, (n, r, q)
    assert time.monotonic() - start < 10


def test_c2_remark_reproduction():
    """2: remark radii, facet counts, Betti numbers, condition, bounds (< 5 s)"""
    start = time.monotonic()
    T6, K1, T7, K2 = gen_tented(6, 3), gen_remark_k1(), gen_tented(7, 3), gen_remark_k2()
    for K, q, m, b in ((T6, 10, 10, 0), (K1, 10, 12, 2), (T7, 13, 20, 0), (K2, 13, 28, 8)):
        assert abs(q_spectral_radius(K, 2).value - q) <= 1e-8
        assert len(K.facets) == m
        assert betti(K)[3] == b
    for K in (K1, K2):
        assert check_condition_cond(K)
        assert contains_delta(K, 3) is None
    assert turan_upper_direct(6, 4) == Fraction(25, 2)
    assert turan_upper_direct(7, 4) == Fraction(455, 16)
    assert bound_face_count(T6, 2).value == Fraction(25, 2)
    assert int(turan_upper_direct(6, 4)) == len(K1.facets) == 12
    assert int(turan_upper_direct(7, 4)) == len(K2.facets) == 28
    assert time.monotonic() - start < 5


def test_c3_exhaustive_n6():
    """3: exhaustive n = 6 search gives exactly the tented complex and K1 (< 120 s)"""
    out = search_cond(6, 3, "exhaustive")
    assert out.exhaustive and out.nodes_explored == 2**15 - 1
    assert sorted(canonical_form(K) for K in out.classes) == sorted(
        [canonical_form(gen_tented(6, 3)), canonical_form(gen_remark_k1())]
    )
    assert out.wall_time < 120


def test_c4_n7_witnesses(capsys):
    """4: n = 7 backtracking (600 s budget) contains the tented complex and K2"""
    out = search_cond(7, 3, "backtracking", budget=600)
    forms = {canonical_form(K) for K in out.classes}
    assert canonical_form(gen_tented(7, 3)) in forms
    assert canonical_form(gen_remark_k2()) in forms
    for K in out.classes:
        assert check_condition_cond(K)
    assert isinstance(out.exhaustive, bool)
    with capsys.disabled():
        print(f"\n  n=7 search: {len(out.classes)} classes, exhaustive={out.exhaustive}, "
              f"{out.nodes_explored} nodes, {out.wall_time:.2f}s")


def _monotonicity_instances(count, seed):
    rng = np.random.default_rng(seed)
    out = []
    for K in random_complexes(10 * count, seed=seed):
        r = K.dim
        if not is_path_connected(K, r - 1):
            continue
        ridges = set(K.faces(r - 1))
        extra = [F for F in itertools.combinations(K.vertices, r + 1)
                 if F not in K.facets and any(g in ridges for g in boundary_faces(F))]
        if extra:
            out.append((K, extra[int(rng.integers(len(extra)))]))
        if len(out) == count:
            break
    return out


def test_c5_property_suite():
    """5: randomized property suite, >= 50 instances per property (< 60 s)"""
    start = time.monotonic()
    N = 50
    rng = np.random.default_rng(2024)
    base = random_complexes(N, seed=500, n_range=(4, 8), r_range=(1, 3))

    for K in base:
        for i in range(1, K.dim):
            assert not (signed_boundary(K, i).toarray() @ signed_boundary(K, i + 1).toarray()).any()

    for K in base:
        i = K.dim - 1
        a = q_up(K, i).toarray()
        f = FaceVector(K.faces(i), rng.normal(size=a.shape[0]))
        want = f.values @ a @ f.values
        assert abs(quadratic_form(K, i, f) - want) <= 1e-12 * max(1.0, abs(want))

    for K in base:
        r = K.dim
        assert abs(q_spectral_radius(K, r - 1).value - spectral_radius(q_down(K, r)).value) <= 1e-8

    for K in base:
        b = betti(K)
        for i in range(K.dim + 1):
            assert numeric_nullity(laplacian_signed(K, i), 1e-8) == b[i]
        assert sum((-1) ** i * len(K.faces(i)) for i in range(K.dim + 1)) == sum(
            (-1) ** i * x for i, x in enumerate(b)
        )

    delta_free = random_complexes(N, seed=501, n_range=(4, 8), r_range=(1, 3),
                                  keep=lambda K: contains_delta(K) is None)
    for K in delta_free:
        r = K.dim
        assert q_spectral_radius(K, r - 1).value <= r * K.n - r * r + 1 + 1e-8

    def betti_in_range(K):
        t = betti(K)[K.dim]
        return 1 <= t <= K.n - K.dim - 1

    with_holes = random_complexes(N, seed=502, n_range=(4, 8), r_range=(1, 3), keep=betti_in_range)
    for K in with_holes:
        r, t = K.dim, betti(K)[K.dim]
        assert q_spectral_radius(K, r - 1).value <= r * K.n - r * r + t + 1 + 1e-8

    mono = _monotonicity_instances(N, seed=503)
    assert len(mono) == N
    for K, F in mono:
        r = K.dim
        bigger = from_facets(K.n, list(K.facets) + [F])
        assert q_spectral_radius(bigger, r - 1).value > q_spectral_radius(K, r - 1).value + 1e-9

    full = random_complexes(N, seed=504, n_range=(4, 7), r_range=(1, 3),
                            keep=lambda K: len(K.faces(K.dim - 1)) == comb(K.n, K.dim))
    for K in full:
        rep = bound_face_count(K, K.dim - 1)
        assert rep.achieved <= float(rep.value) + 1e-9

    assert time.monotonic() - start < 60


def _complete_bipartite(n, edges):
    es = set(edges)
    for k in range(1, n):
        for A in itertools.combinations(range(1, n + 1), k):
            B = [v for v in range(1, n + 1) if v not in A]
            if es == {tuple(sorted((a, b))) for a in A for b in B}:
                return True
    return False


def test_c6_bipartite_equality():
    """6: triangle-free graphs on 4..6 vertices reach radius n iff complete bipartite (< 60 s)"""
    start = time.monotonic()
    for n in (4, 5, 6):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        attaining, bipartite = set(), set()
        for mask in range(1, 1 << len(pairs)):
            edges = tuple(p for k, p in enumerate(pairs) if mask >> k & 1)
            es = set(edges)
            if any({(a, b), (a, c), (b, c)} <= es for a, b, c in itertools.combinations(range(1, n + 1), 3)):
                continue
            q = q_spectral_radius(from_facets(n, edges), 0).value
            if abs(q - n) <= 1e-8:
                attaining.add(edges)
            if _complete_bipartite(n, edges):
                bipartite.add(edges)
        assert attaining == bipartite
        assert len(bipartite) == 2 ** (n - 1) - 1
    assert time.monotonic() - start < 60


def _lemma_hole_conclusions(K):
    r = K.dim
    if not is_path_connected(K, r - 1):
        return False
    if min(K.degree(F) for F in K.faces(r - 1)) < 2:
        return False
    for F in K.facets:
        rest = from_facets(K.n, [f for f in K.facets if f != F] + list(K.faces(r - 1)))
        if not is_path_connected(rest, r - 1):
            return False
    return True


def test_c7_basic_holes():
    """7: spheres and rhombic complexes certify as basic holes, K1 does not (< 10 s)"""
    start = time.monotonic()
    holes = [gen_complete(4, 3)] + [gen_complete(r + 2, r + 1) for r in (1, 2, 3)]
    holes += [gen_rhombic(r) for r in (2, 3)]
    for K in holes:
        assert is_basic_hole(K), K.facets
        assert _lemma_hole_conclusions(K)
    assert not is_basic_hole(gen_remark_k1())
    assert time.monotonic() - start < 10


def test_c8_density_substitute():
    """8: asymptotic results excluded; Turan-density grid check at n = 10^4 (0.01)"""
    n, r = 10**4, 3
    assert abs(turan_upper_corollary(n, r) / comb(n, r) - Fraction(r - 1, r)) < 0.01
