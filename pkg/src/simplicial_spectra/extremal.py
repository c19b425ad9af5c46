"""Extremal complexes, forbidden-subcomplex detectors and spectral/Turan bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .complex import Complex, ComplexError, Face, boundary_faces, from_facets
from .homology import betti
from .spectral import SNAP_TOL, integer_snap, q_spectral_radius

EQUALITY_TOL = 1e-6


# -- generators -------------------------------------------------------------

def gen_tented(n: int, r: int) -> Complex:
    """Cone with apex n over all r-subsets of 1..n-1."""
    if r < 0 or n <= r:
        raise ComplexError(f"tented complex needs n > r >= 0, got n={n}, r={r}")
    return from_facets(n, [F + (n,) for F in itertools.combinations(range(1, n), r)])


def gen_rhombic(r: int) -> Complex:
    """Suspension, with apexes r+2 and r+3, of the boundary of the simplex on 1..r+1."""
    if r < 1:
        raise ComplexError(f"rhombic complex needs r >= 1, got {r}")
    base = list(itertools.combinations(range(1, r + 2), r))
    return from_facets(r + 3, [F + (apex,) for apex in (r + 2, r + 3) for F in base])


def gen_complete(n: int, r: int) -> Complex:
    """All r-subsets of 1..n as facets (the complete r-graph as an (r-1)-complex)."""
    if r < 1 or n < r:
        raise ComplexError(f"complete complex needs n >= r >= 1, got n={n}, r={r}")
    return from_facets(n, itertools.combinations(range(1, n + 1), r))


K1_MISSING = ((1, 2, 5, 6), (2, 3, 4, 5), (1, 3, 4, 6))
K2_MISSING = K1_MISSING + ((1, 2, 4, 7), (1, 3, 5, 7), (2, 3, 6, 7), (4, 5, 6, 7))


def gen_remark_k1() -> Complex:
    return from_facets(
        6, [F for F in itertools.combinations(range(1, 7), 4) if F not in K1_MISSING]
    )


def gen_remark_k2() -> Complex:
    return from_facets(
        7, [F for F in itertools.combinations(range(1, 8), 4) if F not in K2_MISSING]
    )


# -- detectors ----------------------------------------------------------------

def _require_pure(K: Complex) -> int:
    if not K.is_pure:
        raise ComplexError("expected a pure complex")
    return K.dim


def contains_delta(K: Complex, r: Optional[int] = None) -> Optional[Face]:
    """An (r+2)-set all of whose (r+1)-subsets are facets, or None."""
    dim = _require_pure(K)
    r = dim if r is None else r
    if r != dim:
        raise ComplexError(f"complex has dimension {dim}, not {r}")
    facets = set(K.facets)
    for S in itertools.combinations(K.vertices, r + 2):
        if all(g in facets for g in boundary_faces(S)):
            return S
    return None


@dataclass(frozen=True)
class RhombicWitness:
    base: Face
    apexes: tuple[int, int]

    def facets(self) -> list[Face]:
        return sorted(
            tuple(sorted(g + (a,))) for a in self.apexes for g in boundary_faces(self.base)
        )


def contains_rhombic(K: Complex) -> Optional[RhombicWitness]:
    """Embedding of the rhombic complex of matching dimension, or None.

    Searches every base (r+1)-set and unordered apex pair outside it.
    """
    r = _require_pure(K)
    if r < 1:
        return None
    facets = set(K.facets)
    for base in itertools.combinations(K.vertices, r + 1):
        ridges = boundary_faces(base)
        apexes = [
            u for u in K.vertices
            if u not in base and all(tuple(sorted(g + (u,))) in facets for g in ridges)
        ]
        if len(apexes) >= 2:
            return RhombicWitness(base, (apexes[0], apexes[1]))
    return None


@dataclass(frozen=True)
class CondResult:
    holds: bool
    witness: Optional[tuple[Face, int]] = None
    count: Optional[int] = None

    def __bool__(self) -> bool:
        return self.holds


def check_condition_cond(K: Complex) -> CondResult:
    """Whether |N^d(F, u)| = r for every top face F and vertex u outside F.

    On failure the first offending (F, u) in lexicographic order is returned
    together with its count.
    """
    r = _require_pure(K)
    for F in K.faces(r):
        for u in K.vertices:
            if u in F:
                continue
            c = len(K.down_neighbors_via(F, u))
            if c != r:
                return CondResult(False, (F, u), c)
    return CondResult(True)


# -- bounds -------------------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    value: Fraction
    achieved: Optional[float] = None
    equality: bool = False
    in_hypothesis: bool = True
    notes: dict = field(default_factory=dict)

    @property
    def holds(self) -> Optional[bool]:
        if self.achieved is None:
            return None
        return self.achieved <= float(self.value) + 1e-8

    def to_dict(self) -> dict:
        return {
            "bound": self.bound_name,
            "value": str(self.value),
            "value_float": float(self.value),
            "achieved": self.achieved,
            "holds": self.holds,
            "equality": self.equality,
            "in_hypothesis": self.in_hypothesis,
            **({"notes": self.notes} if self.notes else {}),
        }


def _with_measured(name: str, value: Fraction, achieved: Optional[float], **kw) -> BoundReport:
    equality = achieved is not None and abs(achieved - float(value)) < EQUALITY_TOL
    return BoundReport(name, value, achieved, equality, **kw)


def bound_theorem_main(n: int, r: int, K: Optional[Complex] = None) -> BoundReport:
    """Largest q_{r-1} over Delta-free pure r-complexes on n vertices: rn - r^2 + 1."""
    if r < 1 or n < r + 1:
        raise ComplexError(f"bound needs n >= r + 1 >= 2, got n={n}, r={r}")
    value = Fraction(r * n - r * r + 1)
    achieved = q_spectral_radius(K, r - 1).value if K is not None else None
    return _with_measured("delta_free_radius", value, achieved)


def bound_betti_t(n: int, r: int, t: int, K: Optional[Complex] = None) -> BoundReport:
    """rn - r^2 + t + 1, stated for top Betti number 1 <= t <= n - r - 1."""
    value = Fraction(r * n - r * r + t + 1)
    achieved = q_spectral_radius(K, r - 1).value if K is not None else None
    return _with_measured(
        "betti_radius", value, achieved, in_hypothesis=1 <= t <= n - r - 1
    )


def exact_radius(q: float) -> Fraction:
    k = integer_snap(q, SNAP_TOL)
    return Fraction(k) if k is not None else Fraction(q)


def bound_face_count(K: Complex, i: int) -> BoundReport:
    """Facet count bound q_i(K) * C(n, i+1) / (i+2)^2 for a pure (i+1)-complex
    with every possible i-face. ``achieved`` is the facet count."""
    if not K.is_pure or K.dim != i + 1:
        raise ComplexError(f"face-count bound needs a pure {i + 1}-dimensional complex")
    full = comb(K.n, i + 1)
    if len(K.faces(i)) != full:
        raise ComplexError(f"complex lacks some of the {full} possible {i}-faces")
    q = q_spectral_radius(K, i).value
    value = exact_radius(q) * full / (i + 2) ** 2
    report = _with_measured(
        "face_count", value, float(len(K.faces(i + 1))), notes={"radius": q}
    )
    if report.achieved > float(value) + 1e-9:
        raise AssertionError(f"face count {report.achieved} exceeds bound {value}")
    return report


def _check_uniformity(n: int, r: int) -> None:
    if r < 2 or n <= r:
        raise ComplexError(f"Turan bound needs n > r >= 2, got n={n}, r={r}")


def turan_upper_corollary(n: int, r: int) -> Fraction:
    """((r-1)(n-r+1)+1) / (r(n-r)) * C(n, r), as printed for ex(n, Delta_{r+1}^r)."""
    _check_uniformity(n, r)
    return Fraction((r - 1) * (n - r + 1) + 1, r * (n - r)) * comb(n, r)


def turan_upper_direct(n: int, r: int) -> Fraction:
    """Face-count bound applied at the extremal radius: ((r-1)(n-r+1)+1) C(n, r-1) / r^2."""
    _check_uniformity(n, r)
    return Fraction(((r - 1) * (n - r + 1) + 1) * comb(n, r - 1), r * r)


def turan_conjecture_value(n: int) -> int:
    """Conjectured ex(n, Delta_4^3)."""
    if n < 3:
        raise ValueError(f"needs n >= 3, got {n}")
    t, rem = divmod(n, 3)
    if rem == 0:
        num = t * t * (5 * t - 3)
    elif rem == 1:
        num = t * (5 * t * t + 2 * t - 1)
    else:
        num = t * (t + 1) * (5 * t + 2)
    return num // 2


# -- remark reproduction -----------------------------------------------------

@dataclass(frozen=True)
class Claim:
    name: str
    expected: object
    observed: object
    passed: bool


@dataclass
class RemarkReport:
    claims: list[Claim]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    @property
    def first_failure(self) -> Optional[Claim]:
        return next((c for c in self.claims if not c.passed), None)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "n_passed": sum(c.passed for c in self.claims),
            "n_claims": len(self.claims),
            "claims": [
                {"name": c.name, "expected": _jsonable(c.expected),
                 "observed": _jsonable(c.observed), "passed": c.passed}
                for c in self.claims
            ],
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def verify_remark(k1: Optional[Complex] = None, k2: Optional[Complex] = None) -> RemarkReport:
    """Recompute the n = 6 and n = 7, r = 3 extremal examples.

    Sixteen claims: four radii, four facet counts, four top Betti numbers,
    the equality condition for K1/K2, their Delta-freeness, and for n = 6, 7
    the face-count bound together with the Turan number it pins down.
    """
    k1 = gen_remark_k1() if k1 is None else k1
    k2 = gen_remark_k2() if k2 is None else k2
    named = {"T6": gen_tented(6, 3), "K1": k1, "T7": gen_tented(7, 3), "K2": k2}
    claims: list[Claim] = []

    radii = {k: q_spectral_radius(K, 2).value for k, K in named.items()}
    for k, want in zip(named, (10, 10, 13, 13)):
        claims.append(Claim(f"radius {k}", want, radii[k], abs(radii[k] - want) <= 1e-8))
    for k, want in zip(named, (10, 12, 20, 28)):
        got = len(named[k].faces(3))
        claims.append(Claim(f"facet count {k}", want, got, got == want))
    for k, want in zip(named, (0, 2, 0, 8)):
        b = betti(named[k])
        got = b[3] if len(b) > 3 else 0
        claims.append(Claim(f"beta_3 {k}", want, got, got == want))

    conds = [bool(check_condition_cond(k1)), bool(check_condition_cond(k2))]
    claims.append(Claim("equality condition K1, K2", [True, True], conds, all(conds)))
    free = [contains_delta(K, 3) is None if K.is_pure and K.dim == 3 else False for K in (k1, k2)]
    claims.append(Claim("Delta_5^4-free K1, K2", [True, True], free, all(free)))

    for n, want_bound, K, want_ex in ((6, Fraction(25, 2), k1, 12), (7, Fraction(455, 16), k2, 28)):
        bound = turan_upper_direct(n, 4)
        count = len(K.faces(3))
        ex = int(bound) if count == int(bound) else None
        ok = bound == want_bound and ex == want_ex and free[n - 6]
        claims.append(
            Claim(f"ex({n}, Delta_5^4)", [want_bound, want_ex], [bound, ex], ok)
        )
    return RemarkReport(claims)


def random_pure_complex(n: int, r: int, p: float, rng) -> Optional[Complex]:
    """Each (r+1)-subset of 1..n becomes a facet with probability ``p``.

    ``rng`` is a ``numpy.random.Generator``; returns None when no facet is drawn.
    """
    facets = [F for F in itertools.combinations(range(1, n + 1), r + 1) if rng.random() < p]
    return from_facets(n, facets) if facets else None
