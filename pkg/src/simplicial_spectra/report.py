"""Analysis report for a single complex."""

from __future__ import annotations

from dataclasses import replace
from math import comb

from .complex import Complex, is_path_connected
from .extremal import (
    bound_betti_t,
    bound_face_count,
    bound_theorem_main,
    check_condition_cond,
    contains_delta,
    contains_rhombic,
)
from .homology import betti, is_basic_hole
from .spectral import integer_snap, q_spectral_radius

SCHEMA_VERSION = "1"


def analyze(K: Complex, tol: float = 1e-10) -> dict:
    d = K.dim
    b = betti(K)
    radii = []
    for i in range(d):
        res = q_spectral_radius(K, i, tol=tol)
        radii.append({
            "i": i,
            "value": res.value,
            "integer": integer_snap(res.value),
            "residual": res.residual,
            "iterations": res.iterations,
            "converged": res.converged,
            "tol": tol,
        })

    report = {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "n": K.n,
            "dim": d,
            "facet_count": len(K.facets),
            "pure": K.is_pure,
            "normalized": K.normalized,
        },
        "face_counts": [len(K.faces(i)) for i in range(d + 1)],
        "path_connected": [is_path_connected(K, i) for i in range(d + 1)],
        "betti": list(b),
        "radii": radii,
        "bounds": [],
        "detectors": {},
    }
    if not (K.is_pure and d >= 1):
        return report

    r, n = d, K.n
    delta = contains_delta(K, r)
    rhombic = contains_rhombic(K)
    cond = check_condition_cond(K)

    if n > r:
        main = replace(bound_theorem_main(n, r, K), in_hypothesis=delta is None)
        report["bounds"].append(main.to_dict())
        report["bounds"].append(bound_betti_t(n, r, b[r], K).to_dict())
    if len(K.faces(r - 1)) == comb(n, r):
        report["bounds"].append(bound_face_count(K, r - 1).to_dict())

    report["detectors"] = {
        "delta": list(delta) if delta else None,
        "delta_free": delta is None,
        "rhombic": (
            {"base": list(rhombic.base), "apexes": list(rhombic.apexes)} if rhombic else None
        ),
        "condition": {
            "holds": cond.holds,
            "witness": (
                {"face": list(cond.witness[0]), "u": cond.witness[1], "count": cond.count}
                if cond.witness else None
            ),
        },
        "basic_hole": is_basic_hole(K),
    }
    return report


def format_text(report: dict) -> str:
    inp = report["input"]
    lines = [
        f"n = {inp['n']}, dim = {inp['dim']}, facets = {inp['facet_count']}, "
        f"pure = {inp['pure']}" + (" (normalized input)" if inp["normalized"] else ""),
        "face counts: " + " ".join(map(str, report["face_counts"])),
        "path connected: " + " ".join("yes" if c else "no" for c in report["path_connected"]),
        "betti: " + " ".join(map(str, report["betti"])),
    ]
    for rad in report["radii"]:
        snap = f" (= {rad['integer']})" if rad["integer"] is not None else ""
        flag = "" if rad["converged"] else " NOT CONVERGED"
        lines.append(
            f"q_{rad['i']} = {rad['value']:.12g}{snap}  residual {rad['residual']:.2e}{flag}"
        )
    for bnd in report["bounds"]:
        hyp = "" if bnd["in_hypothesis"] else " [outside hypothesis]"
        eq = " equality" if bnd["equality"] else ""
        lines.append(
            f"bound {bnd['bound']}: {bnd['value']}, measured {bnd['achieved']:.12g}, "
            f"holds = {bnd['holds']}{eq}{hyp}"
        )
    det = report["detectors"]
    if det:
        lines.append(f"Delta-free: {det['delta_free']}" + (f" (witness {det['delta']})" if det["delta"] else ""))
        lines.append(f"rhombic: {det['rhombic']}")
        cond = det["condition"]
        lines.append(f"equality condition: {cond['holds']}" + (f" (fails at {cond['witness']})" if cond["witness"] else ""))
        lines.append(f"basic hole: {det['basic_hole']}")
    return "\n".join(lines)
