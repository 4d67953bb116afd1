"""``linegeom`` command line.

Every subcommand prints (or writes with ``--out``) a JSON certificate.
Exit codes: 0 success, 1 verification failure, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction

from .errors import LineGeomError
from .scalar import encode_scalar

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _scalars(text: str) -> list:
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad scalar list {text!r}: {exc}") from None


def _enc(xs) -> list:
    return [encode_scalar(x) for x in xs]


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _need(values, n: int, what: str):
    if values is None or len(values) != n:
        raise InputError(f"{what} needs {n} values")
    return values


# -- subcommands -------------------------------------------------------------------------------

def cmd_steiner(args) -> int:
    from .steiner import fit_hypersurface, lie_sweep, roman_surface, sweep_parameters, \
        tangent_section_split

    S = roman_surface()
    if args.action == "split":
        sec = tangent_section_split(S, _need(args.u, 3, "--u"))
        _emit(args, {"delta": sec.delta, "lines": [_enc(L) for L in sec.lines],
                     "conics": [{"plane": _enc(c.plane), "matrix": [_enc(r) for r in c.matrix]} for c in sec]})
        return EXIT_OK
    Pi = _need(args.plane, 4, "--plane")
    res = lie_sweep(S, Pi, sweep_parameters(args.samples, seed=args.seed))
    poles = res.poles
    quartics = fit_hypersurface(poles, 4)
    quadrics = fit_hypersurface(poles, 2)
    # branch labels are arbitrary (conic order); reported, not asserted
    per_branch = [len(fit_hypersurface([s.poles[b] for s in res.samples], 4)) for b in (0, 1)]
    _emit(args, {"plane": _enc(Pi), "samples": len(res.samples), "skipped": [[str(u), r] for u, r in res.skipped],
                 "poles": [_enc(p) for p in poles], "quartic_kernel": [q.to_json() for q in quartics],
                 "quadric_kernel": [q.to_json() for q in quadrics], "branch_quartic_kernel_dims": per_branch})
    return EXIT_OK if quartics else EXIT_FAIL


def _complex_from_args(args):
    from .complexes import TetrahedralComplex, complex_from_json, diagonal_complex

    if getattr(args, "tetrahedral", None):
        return TetrahedralComplex(_need(args.tetrahedral, 3, "--tetrahedral"))
    if getattr(args, "diagonal", None):
        return diagonal_complex(_need(args.diagonal, 6, "--diagonal"))
    if getattr(args, "json", None):
        with open(args.json) as fh:
            return complex_from_json(json.load(fh))
    raise InputError("give --tetrahedral, --diagonal or --json")


def cmd_complex(args) -> int:
    from .complexes import complex_to_json, is_irreducible_over_q, singularity_surface, tetra_cross_ratio
    from .projective import PlueckerLine

    if args.action == "cross-ratio":
        line = PlueckerLine(_need(args.line, 6, "--line"))
        _emit(args, {"line": _enc(line), "cross_ratio": encode_scalar(tetra_cross_ratio(line))})
        return EXIT_OK
    K = _complex_from_args(args)
    F = singularity_surface(K)
    _emit(args, {"complex": complex_to_json(K), "surface": F.to_json(), "text": str(F),
                 "degree": F.degree(), "irreducible": is_irreducible_over_q(F) if F.degree() == 4 else None})
    return EXIT_OK


def cmd_kummer(args) -> int:
    from .kummer import RESIDUAL_TOL, class_formula, configuration_check, find_nodes, \
        fresnel_circles, fresnel_surface, kummer_from_complex

    if args.action == "class":
        _emit(args, {"n": args.n, "d": args.d, "class": class_formula(args.n, args.d)})
        return EXIT_OK
    if args.fresnel:
        f = fresnel_surface(*_need(args.fresnel, 3, "--fresnel"))
        nodes = find_nodes(f.F, seed=args.seed)
        circles = fresnel_circles(f, nodes)
        ok = len(nodes.real_points) == 4 and float(nodes.residuals.max()) < RESIDUAL_TOL
        _emit(args, {"surface": f.F.to_json(), "nodes": len(nodes), "real_nodes": nodes.real_points.real.tolist(),
                     "max_residual": float(nodes.residuals.max()),
                     "real_tropes": [{"plane": list(map(float, p)), "circle": c, "defect": d} for p, c, d in circles],
                     "ok": ok})
        return EXIT_OK if ok else EXIT_FAIL
    k = kummer_from_complex(_complex_from_args(args), seed=args.seed)
    payload = {"surface": k.F.to_json(), "nodes": len(k.nodes),
               "node_points": [[[z.real, z.imag] for z in p] for p in k.nodes.points],
               "residuals": k.nodes.residuals.tolist(), "tropes": len(k.tropes)}
    ok = len(k.nodes) == 16 and float(k.nodes.residuals.max()) < RESIDUAL_TOL
    if len(k.nodes):
        cert = configuration_check(k)
        payload["configuration"] = cert.to_json()
        ok = ok and cert.ok
    payload["ok"] = ok
    _emit(args, payload)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_pluecker(args) -> int:
    from .pluecker_surface import complex_surface, pinch_points

    K = _complex_from_args(args)
    s = complex_surface(K, _need(args.g, 6, "--g"))
    pts = pinch_points(s)
    disc = s.discriminant
    ok = disc[4] != 0 and sum(p.root.multiplicity for p in pts) == 4
    _emit(args, {"surface": s.F.to_json(), "text": str(s.F), "discriminant": _enc(disc),
                 "pinch_points": [{"parameter": str(p.parameter), "multiplicity": p.root.multiplicity,
                                   "point": _enc(p.point) if p.point is not None and all(
                                       not isinstance(x, complex) for x in p.point) else None} for p in pts],
                 "ok": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_noether(args) -> int:
    from .complexes import LinearComplex
    from .noether import complex_lines, congruence_image, lines_meeting, noether_chart, noether_forward, \
        noether_inverse, tangent_plane_certificate

    K1 = LinearComplex(_need(args.complex, 6, "--complex"))
    l0 = _need(args.l0, 6, "--l0") if args.l0 else complex_lines(K1, 1, seed=args.seed + 5)[0]
    ch = noether_chart(K1, l0)
    lines = complex_lines(K1, args.samples, seed=args.seed)
    trip = sum(noether_inverse(ch, noether_forward(ch, l).point) == l for l in lines)
    meet = lines_meeting(ch, 10, seed=args.seed + 1)
    on_c2 = sum(ch.on_c2(noether_forward(ch, l).point) for l in meet)
    plane, tangency = tangent_plane_certificate(ch, meet[0])
    payload = {"l0": _enc(ch.l0), "screen_frame": [_enc(F) for F in ch.frame], "exceptional_plane": _enc(ch.exceptional),
               "c2_gram": [_enc(r) for r in ch.gram], "round_trip": f"{trip}/{len(lines)}",
               "on_c2": f"{on_c2}/10", "tangent_plane": _enc(plane), "tangency_rank": tangency}
    ok = trip == len(lines) and on_c2 == 10 and tangency == 1
    if args.second:
        img = congruence_image(ch, _need(args.second, 6, "--second"))
        payload["congruence"] = {"quadrics": [q.to_json() for q in img.quadrics], "contains_c2": img.contains_c2,
                                 "planes": [q.to_json() for q in img.planes], "held_out_ok": img.held_out_ok}
        ok = ok and img.held_out_ok and (bool(img.planes) or bool(img.contains_c2))
    payload["ok"] = ok
    _emit(args, payload)
    return EXIT_OK if ok else EXIT_FAIL


def _sphere_json(s):
    return s.to_json()


def cmd_liesphere(args) -> int:
    from .liesphere import build_line_sphere_map, cyclide_certificate, cyclide_check, line_to_sphere, \
        regulus_through, torus_families
    from .projective import PlueckerLine, line_from_points
    from .samples import RationalSequence

    m = build_line_sphere_map()
    if args.action == "map":
        _emit(args, {"M": [_enc(r) for r in m.M], "M_inverse": [_enc(r) for r in m.Minv],
                     "kappa": encode_scalar(m.kappa)})
        return EXIT_OK
    if args.action == "line":
        s = line_to_sphere(m, PlueckerLine(_need(args.line, 6, "--line")))
        _emit(args, {"sphere": _sphere_json(s)})
        return EXIT_OK
    grid = [Fraction(k, 3) for k in range(-(args.grid // 2), args.grid - args.grid // 2)]
    if args.action == "torus":
        fa, fb = torus_families(args.R, args.rho, grid, [g / 2 for g in grid])
        cert = cyclide_certificate(fa, fb, rational=True)
    else:
        seq = RationalSequence(args.seed, 5)
        lines = []
        while len(lines) < 3:
            try:
                lines.append(line_from_points(seq.vector(4), seq.vector(4)))
            except LineGeomError:
                continue
        cert = cyclide_check(m, regulus_through(*lines), grid, grid)
    _emit(args, {"tangencies": cert.tangencies, "cross_tangent": cert.tangent_all, "contact_points": len(cert.points),
                 "quartics": [q.to_json() for q in cert.quartics], "leading_form_ok": cert.leading_ok,
                 "held_out_ok": cert.held_out_ok, "ok": cert.ok})
    return EXIT_OK if cert.ok else EXIT_FAIL


def _model_surface(name: str, args):
    from .complexes import diagonal_complex, singularity_surface
    from .kummer import fresnel_surface
    from .pluecker_surface import complex_surface
    from .poly import MultiPoly, variables
    from .steiner import roman_surface

    if name == "roman":
        return roman_surface().F
    if name == "kummer":
        return singularity_surface(diagonal_complex())
    if name == "fresnel":
        return fresnel_surface(4, 2, 1).F
    if name == "pluecker":
        return complex_surface(diagonal_complex(), (1, 0, 0, 0, 0, 0)).F
    if name == "sphere":
        x, y, z, w = variables(4)
        return x * x + y * y + z * z - w * w
    with open(name) as fh:
        return MultiPoly.from_json(json.load(fh))


def cmd_mesh(args) -> int:
    from .mesh import boundary_edges, euler_characteristic, mesh_surface, write_obj

    lo, hi = _need(args.box, 2, "--box")
    if not hi > lo or args.res < 2:
        raise InputError("resolution must be >= 2 and the box nondegenerate")
    F = _model_surface(args.surface, args)
    if F.degree() > 4:
        raise InputError("meshing is limited to degree <= 4")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        V, T = mesh_surface(F, float(lo), float(hi), args.res, args.chart)
    write_obj(args.obj, V, T)
    payload = {"obj": args.obj, "vertices": len(V), "triangles": len(T),
               "euler_characteristic": euler_characteristic(V, T) if len(T) else None,
               "boundary_edges": boundary_edges(T), "warnings": [str(w.message) for w in caught]}
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _emit(args, payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import CHECKS, run_checks

    keys = None if args.which == ["all"] else set(args.which)
    known = {k for k, *_ in CHECKS}
    if keys and not keys <= known:
        raise InputError(f"unknown checks {sorted(keys - known)}; choose from {sorted(known)} or 'all'")
    results = run_checks(keys, echo=lambda s: print(s, file=sys.stderr))
    ok = all(r.passed and r.within_budget for r in results)
    _emit(args, {"ok": ok, "results": [r.to_json() for r in results]})
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linegeom", description="Exact line geometry constructions and certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write the JSON certificate here instead of stdout")
        sp.add_argument("--seed", type=int, default=0, help="index into the deterministic sample sequence")

    def complex_flags(sp):
        sp.add_argument("--tetrahedral", type=_scalars, help="mu1,mu2,mu3")
        sp.add_argument("--diagonal", type=_scalars, help="six diagonal values")
        sp.add_argument("--json", help="complex JSON file")

    s = sub.add_parser("steiner", help="Roman surface: tangent sections and pole sweeps")
    s.add_argument("action", choices=["lie-sweep", "split"])
    s.add_argument("--plane", type=_scalars, default=[Fraction(v) for v in (1, 2, 5, -1)])
    s.add_argument("--samples", type=int, default=40)
    s.add_argument("--u", type=_scalars, help="parameter point a,b,c for split")
    common(s)
    s.set_defaults(func=cmd_steiner)

    s = sub.add_parser("complex", help="singularity surfaces and tetrahedral cross ratios")
    s.add_argument("action", choices=["singular", "cross-ratio"])
    complex_flags(s)
    s.add_argument("--line", type=_scalars, help="Pluecker coordinates for cross-ratio")
    common(s)
    s.set_defaults(func=cmd_complex)

    s = sub.add_parser("kummer", help="class formula, nodes, tropes, configuration")
    s.add_argument("action", choices=["class", "nodes"])
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--d", type=int, default=16)
    s.add_argument("--fresnel", type=_scalars, help="a^2,b^2,c^2 for the wave surface")
    complex_flags(s)
    common(s)
    s.set_defaults(func=cmd_kummer)

    s = sub.add_parser("pluecker", help="complex surface of the planes through a line")
    complex_flags(s)
    s.add_argument("--g", type=_scalars, default=[Fraction(v) for v in (1, 0, 0, 0, 0, 0)])
    common(s)
    s.set_defaults(func=cmd_pluecker)

    s = sub.add_parser("noether", help="lines of a linear complex as points of space")
    s.add_argument("--complex", type=_scalars, default=[Fraction(v) for v in (1, 2, 3, 1, -1, 2)])
    s.add_argument("--l0", type=_scalars)
    s.add_argument("--second", type=_scalars, help="second complex for a congruence image")
    s.add_argument("--samples", type=int, default=50)
    common(s)
    s.set_defaults(func=cmd_noether)

    s = sub.add_parser("liesphere", help="line-sphere map, reguli and cyclides")
    s.add_argument("action", choices=["map", "line", "cyclide", "torus"])
    s.add_argument("--line", type=_scalars)
    s.add_argument("--grid", type=int, default=10)
    s.add_argument("--R", type=Fraction, default=Fraction(3))
    s.add_argument("--rho", type=Fraction, default=Fraction(1))
    common(s)
    s.set_defaults(func=cmd_liesphere)

    s = sub.add_parser("mesh", help="OBJ mesh of a model surface or a polynomial JSON file")
    s.add_argument("surface", help="roman, kummer, fresnel, pluecker, sphere, or a MultiPoly JSON path")
    s.add_argument("--obj", required=True)
    s.add_argument("--box", type=_scalars, default=[Fraction(-2), Fraction(2)])
    s.add_argument("--res", type=int, default=40)
    s.add_argument("--chart", type=int, default=3, choices=range(4))
    common(s)
    s.set_defaults(func=cmd_mesh)

    s = sub.add_parser("verify", help="run acceptance checks ('all' or keys like AC4)")
    s.add_argument("which", nargs="+")
    common(s)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, LineGeomError, ValueError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
