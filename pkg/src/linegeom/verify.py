"""The acceptance suite behind ``linegeom verify``.

Each check builds its fixture, runs the construction and returns a
:class:`CheckResult` with a JSON-ready ``detail`` dict.  Fixtures are fixed
here so that runs are reproducible.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List

from .poly import variables

__all__ = ["CheckResult", "CHECKS", "run_checks", "ROMAN_PLANES", "ROMAN_TANGENT_U",
           "NOETHER_FIXTURE", "FRESNEL_TRIPLES", "REGULUS_FIXTURE", "CROSS_RATIO_LINES"]

ROMAN_PLANES = ((1, 2, 5, -1), (2, -1, 3, 1), (1, 3, -2, 4), (3, 1, 1, -2), (-1, 4, 2, 3))
ROMAN_TANGENT_U = (1, 2, 5)
NOETHER_FIXTURE = ((1, 2, 3, 1, -1, 2), (2, -1, 0, 1, 3, 1))
FRESNEL_TRIPLES = ((4, 2, 1), (9, 4, 1), (5, 3, 2), (Fraction(7, 2), 2, Fraction(1, 3)), (10, 7, 3))
REGULUS_FIXTURE = (((1, 0, 0, 0), (0, 1, 2, 0)), ((0, 0, 1, 0), (1, 0, 0, 3)), ((0, 1, 0, 1), (2, 0, 1, 1)))
CROSS_RATIO_LINES = (((1, 1, 1, 1), (1, 2, 3, 4)), ((2, -1, 3, 1), (1, 4, -2, 5)),
                     ((1, 3, 0, 2), (3, 1, 2, 0)), ((1, -1, 2, -3), (2, 5, 1, 1)),
                     ((4, 1, 7, 2), (1, 6, 2, 3)))


@dataclass
class CheckResult:
    key: str
    title: str
    passed: bool
    seconds: float
    budget: float
    detail: Dict = field(default_factory=dict)

    @property
    def within_budget(self) -> bool:
        return self.seconds <= self.budget

    def line(self) -> str:
        tag = "PASS" if self.passed and self.within_budget else "FAIL"
        return f"[{tag}] {self.key} {self.title} ({self.seconds:.2f}s / {self.budget:.0f}s)"

    def to_json(self) -> dict:
        return {"key": self.key, "title": self.title, "passed": self.passed,
                "seconds": round(self.seconds, 3), "budget": self.budget, "detail": self.detail}


def _lie_sweep() -> dict:
    from .steiner import fit_hypersurface, lie_sweep, roman_surface, sweep_parameters

    S = roman_surface()
    out = {"planes": []}
    ok = True
    for k, Pi in enumerate(ROMAN_PLANES):
        res = lie_sweep(S, Pi, sweep_parameters(45, seed=k))
        fit = [p for s in res.samples[:40] for p in s.poles]
        held = [p for s in res.samples[40:] for p in s.poles][:10]
        quartics = fit_hypersurface(fit, 4)
        residuals = [str(q(p)) for q in quartics for p in held]
        good = len(res.samples) >= 45 and len(quartics) >= 1 and len(held) == 10 \
            and all(r == "0" for r in residuals)
        ok &= good
        out["planes"].append({"plane": list(Pi), "poles": len(fit), "kernel_dim": len(quartics),
                              "held_out": len(held), "held_out_residuals": residuals, "ok": good})
    out["ok"] = ok
    return out


def _lie_tangent() -> dict:
    from .steiner import fit_hypersurface, lie_sweep, roman_surface, sweep_parameters, tangent_plane

    S = roman_surface()
    Pi = list(tangent_plane(S, ROMAN_TANGENT_U))
    us = [u for u in sweep_parameters(14, seed=11) if u != ROMAN_TANGENT_U]
    res = lie_sweep(S, Pi, us)
    fit = [p for s in res.samples[:10] for p in s.poles]
    held = [p for s in res.samples[10:] for p in s.poles]
    quadrics = fit_hypersurface(fit, 2)
    residuals = [str(q(p)) for q in quadrics for p in held]
    ok = len(quadrics) == 1 and bool(held) and all(r == "0" for r in residuals)
    return {"ok": ok, "plane": [str(x) for x in Pi], "kernel_dim": len(quadrics),
            "quadric": str(quadrics[0]) if quadrics else None, "held_out_residuals": residuals}


def _tetrahedral() -> dict:
    from .complexes import TetrahedralComplex, singularity_surface

    F = singularity_surface(TetrahedralComplex((1, 2, 4)))
    x0, x1, x2, x3 = variables(4)
    mono = x0 * x1 * x2 * x3
    c = F.coeff((1, 1, 1, 1))
    ok = c != 0 and F == mono * c
    return {"ok": ok, "surface": str(F)}


def _kummer_nodes(state) -> dict:
    from .complexes import diagonal_complex
    from .kummer import RESIDUAL_TOL, class_formula, kummer_from_complex

    k = kummer_from_complex(diagonal_complex())
    state["kummer"] = k
    res = k.nodes
    ok = (k.F.degree() == 4 and len(res) == 16 and float(res.residuals.max()) < RESIDUAL_TOL
          and class_formula(4, len(res)) == 4)
    return {"ok": ok, "degree": k.F.degree(), "nodes": len(res), "real": int(res.is_real.sum()),
            "max_residual": float(res.residuals.max()), "class": class_formula(4, len(res))}


def _kummer_config(state) -> dict:
    from .complexes import diagonal_complex
    from .kummer import configuration_check, kummer_from_complex

    k = state.get("kummer") or kummer_from_complex(diagonal_complex())
    cert = configuration_check(k)
    return {"ok": cert.ok and len(k.tropes) == 16, "tropes": len(k.tropes), "row_sums": cert.row_sums,
            "col_sums": cert.col_sums, "offending": cert.offending}


def _pluecker() -> dict:
    from .complexes import diagonal_complex
    from .pluecker_surface import complex_surface
    from .projective import line_from_points, points_on_line

    g = line_from_points((1, 0, 0, 0), (0, 1, 0, 0))
    s = complex_surface(diagonal_complex(), g)
    A, B = points_on_line(g)
    (t,) = variables(1)
    line = [A[i] + t * B[i] for i in range(4)]
    vanish = s.F.subs(line).is_zero() and all(d.subs(line).is_zero() for d in s.F.gradient())
    disc = s.discriminant
    ok = s.F.degree() == 4 and vanish and len(disc) == 5 and disc[4] != 0
    return {"ok": ok, "surface": str(s.F), "vanishes_on_g": vanish,
            "discriminant": [str(c) for c in disc]}


def _noether() -> dict:
    from .complexes import LinearComplex
    from .noether import complex_lines, congruence_image, lines_meeting, noether_chart, \
        noether_forward, noether_inverse, tangent_plane_certificate

    a, b = NOETHER_FIXTURE
    K1 = LinearComplex(a)
    l0 = complex_lines(K1, 1, seed=5)[0]
    ch = noether_chart(K1, l0)
    lines = complex_lines(K1, 50, seed=1)
    trip = sum(noether_inverse(ch, noether_forward(ch, l).point) == l for l in lines)
    meet = lines_meeting(ch, 10, seed=2)
    on_c2 = sum(ch.on_c2(noether_forward(ch, l).point) for l in meet)
    _, tangency = tangent_plane_certificate(ch, meet[0])
    cong = congruence_image(ch, b)
    ok = (trip == 50 and on_c2 == 10 and tangency == 1 and len(cong.quadrics) == 1
          and cong.contains_c2 and cong.held_out_ok)
    return {"ok": ok, "round_trip": trip, "on_c2": on_c2, "tangency_rank": tangency,
            "congruence_quadrics": len(cong.quadrics), "contains_c2": cong.contains_c2,
            "held_out_ok": cong.held_out_ok}


def _line_sphere() -> dict:
    from .liesphere import build_line_sphere_map, cyclide_check, line_to_sphere, opposite_regulus, \
        regulus_through
    from .projective import line_from_points
    from .samples import RationalSequence

    m = build_line_sphere_map()
    seq = RationalSequence(3, 9)
    defects = 0
    for _ in range(100):
        p = line_from_points(seq.vector(4), seq.vector(4))
        q = line_from_points(seq.vector(4), seq.vector(4))
        defects += m.pairing_defect(p, q) != 0
    reg = regulus_through(*(line_from_points(P, Q) for P, Q in REGULUS_FIXTURE))
    opp = opposite_regulus(reg)
    ts = [Fraction(k, 2) for k in range(-2, 3)]
    tangent = sum(line_to_sphere(m, reg(a)).touches(line_to_sphere(m, opp(b))) for a in ts for b in ts)
    grid = [Fraction(k, 3) for k in range(-5, 5)]
    cert = cyclide_check(m, reg, grid, grid)
    ok = defects == 0 and tangent == 25 and cert.ok
    return {"ok": ok, "pairs": 100, "pairing_defects": defects, "cross_tangent": f"{tangent}/25",
            "contact_points": len(cert.points), "quartic_kernel": len(cert.quartics),
            "leading_form_ok": cert.leading_ok, "held_out_ok": cert.held_out_ok}


def _fresnel() -> dict:
    from .kummer import RESIDUAL_TOL, fresnel_real_nodes, fresnel_surface

    out = {"triples": []}
    ok = True
    for a2, b2, c2 in FRESNEL_TRIPLES:
        res = fresnel_real_nodes(fresnel_surface(a2, b2, c2))
        real = res.real_points
        r = float(res.residuals.max())
        good = len(real) == 4 and r < RESIDUAL_TOL
        ok &= good
        out["triples"].append({"params": [str(a2), str(b2), str(c2)], "nodes": len(res),
                               "real": len(real), "max_residual": r, "ok": good})
    out["ok"] = ok
    return out


def _cross_ratio() -> dict:
    from .complexes import scaling_action, tetra_cross_ratio
    from .projective import line_from_points
    from .samples import RationalSequence

    seq = RationalSequence(7, 9)
    scalings = [tuple(seq.vector(3, nonzero_entries=True)) for _ in range(20)]
    bad = 0
    values = []
    for P, Q in CROSS_RATIO_LINES:
        line = line_from_points(P, Q)
        lam = tetra_cross_ratio(line)
        values.append(str(lam))
        bad += sum(tetra_cross_ratio(scaling_action(*s, line)) != lam for s in scalings)
    return {"ok": bad == 0, "lines": 5, "scalings": 20, "mismatches": bad, "values": values}


# key, title, budget (s), function
CHECKS: List[tuple] = [
    ("AC1", "Roman surface: pole sweep lies on a quartic", 60, lambda st: _lie_sweep()),
    ("AC2", "Roman surface: tangent plane gives a quadric", 10, lambda st: _lie_tangent()),
    ("AC3", "Tetrahedral complex: singularity surface is four planes", 5, lambda st: _tetrahedral()),
    ("AC4", "Kummer surface: 16 nodes, class 4", 300, _kummer_nodes),
    ("AC5", "Kummer surface: (16,6) configuration", 300, _kummer_config),
    ("AC6", "Pluecker surface: double line and four pinch points", 30, lambda st: _pluecker()),
    ("AC7", "Noether map: round trip, C2, tangent planes, congruence", 30, lambda st: _noether()),
    ("AC8", "Line-sphere map: form transport, tangency, cyclide", 60, lambda st: _line_sphere()),
    ("AC9", "Fresnel surface: four real nodes", 60, lambda st: _fresnel()),
    ("AC10", "Tetrahedral cross ratio invariant under scaling", 5, lambda st: _cross_ratio()),
]


def run_checks(keys=None, echo: Callable[[str], None] = None) -> List[CheckResult]:
    state: dict = {}
    out = []
    for key, title, budget, fn in CHECKS:
        if keys and key not in keys:
            continue
        t0 = time.perf_counter()
        try:
            detail = fn(state)
            passed = bool(detail.get("ok"))
        except Exception as exc:  # reported, never swallowed silently
            detail = {"ok": False, "error": f"{type(exc).__name__}: {exc}"}
            passed = False
        res = CheckResult(key, title, passed, time.perf_counter() - t0, budget, detail)
        if echo:
            echo(res.line())
        out.append(res)
    return out
