"""Command-line surface: evaluation and verification subcommands with JSON I/O.

Exit codes: 0 success, 1 validation error, 2 numerical non-convergence,
3 failed check.  Complex numbers serialize as [re, im]; angles are accepted
as rational multiples of pi ("1/3").  Identical command lines with identical
--seed produce byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import charged, groupoid, partition, pentagon, qdilog, wgz
from .errors import NonConvergent, QdlabError
from .faddeev import ThetaParam, phi_theta, phi_zero
from .lca import LcaPoint, Modulus, QuadratureSpec, gauss_gamma
from .qdilog import QdParams
from .triangulation import (
    FIG8_CANONICAL_FACE,
    ShapedTriangulation,
    balanced_perturbation,
    builtin_census,
    gauge_direction,
    pachner_23,
    parse_triangulation,
    positivity_margin,
)


def _c(z: complex) -> list:
    return [float(np.real(z)), float(np.imag(z))]


def _emit(payload: dict, args) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _theta(args) -> ThetaParam:
    return ThetaParam.from_pi_fraction(Fraction(args.theta_arg))


def _params(args) -> QdParams:
    return QdParams(_theta(args), Modulus(args.N), getattr(args, "M_residue", 0))


def _spec(args) -> QuadratureSpec:
    kw = {}
    if getattr(args, "grid", None):
        kw["M"] = args.grid
    if getattr(args, "tol", None):
        kw["tol"] = args.tol
    return QuadratureSpec(**kw)


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    return complex(float(parts[0]), float(parts[1]))


def _parse_point(text: str) -> LcaPoint:
    re, n = text.split(",")
    return LcaPoint(float(re), int(n))


def _parse_charges(text: str) -> charged.ChargeTriple:
    a, b, c = (float(v) for v in text.split(","))
    return charged.ChargeTriple(a, b, c)


def _load_triangulation(args) -> ShapedTriangulation:
    if getattr(args, "inp", None):
        with open(args.inp) as fh:
            return parse_triangulation(fh.read())
    return builtin_census(args.name, N=args.N, theta_arg_over_pi=args.theta_arg)


def cmd_phi(args):
    th = _theta(args)
    z = _parse_complex(args.z)
    _emit({"value": _c(phi_theta(z, th, _spec(args))), "phi_zero": _c(phi_zero(th))}, args)
    return 0


def cmd_dtheta(args):
    p = _params(args)
    v = qdilog.dtheta(_parse_complex(args.z), args.n, p, _spec(args))
    _emit({"value": _c(v)}, args)
    return 0


def cmd_gamma(args):
    _emit({"value": _c(gauss_gamma(Modulus(args.N)))}, args)
    return 0


def cmd_psi(args):
    p = _params(args)
    ch = _parse_charges(args.charges)
    v = charged.psi_charged(ch, _parse_complex(args.z), args.n, p, _spec(args))
    _emit({"value": _c(v)}, args)
    return 0


def cmd_kernel(args):
    p = _params(args)
    ch = _parse_charges(args.charges)
    mu = _parse_point(args.mu) if args.mu else LcaPoint(0.0, 0)
    wkp = charged.WeightKernelParams(ch, p, mu)
    v = charged.weight_kernel(wkp, _parse_point(args.x), _parse_point(args.y), _spec(args))
    _emit({"value": _c(v)}, args)
    return 0


def cmd_partition(args):
    X = _load_triangulation(args)
    spec = _spec(args)
    res = partition.partition_function(X, spec, target=args.target)
    doc = res.to_document()
    doc["params"] = {"N": X.N.N, "grid": spec.M, "tets": len(X.tets)}
    _emit(doc, args)
    return 0


def cmd_pachner(args):
    X = _load_triangulation(args)
    face = tuple(int(v) for v in args.face.split(","))
    Y = pachner_23(X, face)
    _emit(Y.to_document(), args)
    return 0


def cmd_census(args):
    _emit(builtin_census(args.name, N=args.N, theta_arg_over_pi=args.theta_arg).to_document(), args)
    return 0


def cmd_wgz(args):
    k = args.k
    b = _parse_complex(args.b) if args.b else complex(np.sqrt((k + 1j) / 2))
    rng = np.random.default_rng(args.seed)
    rows = [list(rng.uniform(-1, 1, j + 1)) for j in range(k)]
    f = wgz.gauss_poly_vector(rows)
    M = args.grid or 240
    M -= M % k  # inverse needs k | M
    s = wgz.wgz_forward(f, k, M)
    us = np.arange(-M // 4, M // 4) / M
    rec = wgz.wgz_inverse(s, k, us)
    orig = np.array([f(j, us) for j in range(k)])
    round_trip = float(np.max(np.abs(rec - orig)))
    qp = wgz.quasi_periodicity_residual(f, k, 32, args.seed)
    comm = {}
    for pair in (("U", "V"), ("U", "Vt"), ("V", "Ut"), ("V", "Vt")):
        try:
            comm["*".join(pair)] = _c(wgz.commutation_phase(*pair, b, k))
        except ValueError:
            comm["*".join(pair)] = "non-proportional"
    ok = round_trip < 1e-10 and qp < 1e-10
    _emit(
        {
            "k": k,
            "round_trip_sup_error": round_trip,
            "quasi_periodicity_residual": qp,
            "commutation_phases": comm,
            "pass": bool(ok),
        },
        args,
    )
    return 0 if ok else 3


def cmd_check(args):
    rng = np.random.default_rng(args.seed)
    kind = args.kind
    spec = _spec(args)
    if kind == "inversion":
        p = _params(args)
        res = max(
            qdilog.inversion_residual(rng.uniform(-2.5, 2.5), int(rng.integers(0, p.N.N)), p, spec)
            for _ in range(args.samples)
        )
        ok = res < 1e-9
        _emit({"max_residual": res, "pass": bool(ok)}, args)
        return 0 if ok else 3
    if kind == "fourier":
        p = _params(args)
        res = 0.0
        for _ in range(args.samples):
            y = rng.uniform(-1.0, 1.0)
            n = int(rng.integers(0, p.N.N))
            if abs(y) < 0.05 and n == 0:
                y = 0.5
            res = max(res, qdilog.fourier_formula_residual(y, n, p, spec))
        ok = res < 1e-6
        _emit({"max_residual": res, "pass": bool(ok)}, args)
        return 0 if ok else 3
    if kind == "charged":
        p = _params(args)
        ch = _parse_charges(args.charges) if args.charges else charged.ChargeTriple(0.5, 0.2, 0.3)
        quad = max(
            abs(
                charged.psi_forward_transform(ch, x, n, p, spec, "closed_form")
                - charged.psi_forward_transform(ch, x, n, p, spec, "quadrature")
            )
            for (x, n) in [
                (rng.uniform(-1.2, 1.2), int(rng.integers(0, p.N.N)))
                for _ in range(max(2, args.samples // 4))
            ]
        )
        sam = [(rng.uniform(-2, 2), int(rng.integers(0, p.N.N))) for _ in range(args.samples)]
        rep = charged.charged_identity_residuals(ch, sam, p, spec)
        ok = quad < 1e-6 and rep["f2_max"] < 1e-8 and rep["f3_max"] < 1e-8
        _emit(
            {
                "f1_closed_vs_quadrature": quad,
                "f2_max": rep["f2_max"],
                "f3_max": rep["f3_max"],
                "pass": bool(ok),
            },
            args,
        )
        return 0 if ok else 3
    if kind == "pentagon":
        p = _params(args)
        pc = pentagon.PentagonCharges.solve(
            charged.ChargeTriple.equal(), charged.ChargeTriple(0.4, 0.25, 0.35)
        )
        parity = 2 if p.N.N % 2 == 0 else 1
        sam = [
            tuple(
                LcaPoint(rng.uniform(-0.8, 0.8), parity * int(rng.integers(0, p.N.N)) % p.N.N)
                for _ in range(4)
            )
            for _ in range(args.samples)
        ]
        rep = pentagon.check_charged_beta_pentagon(pc, sam, p, spec)
        ok = rep["max_residual"] < 1e-4
        _emit({**rep, "pass": bool(ok)}, args)
        return 0 if ok else 3
    if kind == "faddeev-type":
        p = _params(args)
        pc = pentagon.PentagonCharges.solve(
            charged.ChargeTriple.equal(), charged.ChargeTriple(0.4, 0.25, 0.35)
        )
        sam = [
            (
                LcaPoint(rng.uniform(-0.6, 0.6), int(rng.integers(0, p.N.N))),
                LcaPoint(rng.uniform(-0.6, 0.6), int(rng.integers(0, p.N.N))),
            )
            for _ in range(args.samples)
        ]
        rep = pentagon.check_faddeev_type(pc, sam, p, spec)
        ok = rep["max_residual"] < 1e-4
        _emit({**rep, "pass": bool(ok)}, args)
        return 0 if ok else 3
    if kind == "groupoid":
        triples = [tuple(groupoid.random_point(rng) for _ in range(3)) for _ in range(args.samples)]
        pairs = [tuple(groupoid.random_point(rng) for _ in range(2)) for _ in range(args.samples)]
        rep = {
            "pentagon": groupoid.verify_pentagon_exact(triples),
            "inversion": groupoid.verify_inversion_exact(pairs),
            "form": groupoid.form_preservation_check(pairs[: max(10, args.samples // 2)]),
        }
        ok = all(rep[k]["pass"] for k in rep)
        payload = {k: {kk: vv for kk, vv in v.items() if kk != "witness"} for k, v in rep.items()}
        payload["pass"] = bool(ok)
        _emit(payload, args)
        return 0 if ok else 3
    if kind == "descent":
        X = _load_triangulation(args)
        from .lca import CircleVar

        res = 0.0
        for _ in range(args.samples):
            st = tuple(CircleVar(rng.uniform(0, X.N.sqrt)) for _ in X.edge_classes)
            for e in range(len(X.edge_classes)):
                res = max(res, partition.descent_residual(X, st, e, k=X.N.N, spec=spec))
        ok = res < 1e-8
        _emit({"max_residual": res, "pass": bool(ok)}, args)
        return 0 if ok else 3
    if kind == "gauge":
        X = _load_triangulation(args)
        d = gauge_direction(X, 0)
        eps = positivity_margin(X, d) / 2
        Xp = balanced_perturbation(X, d, eps)
        z0 = partition.partition_function(X, spec, target=1.0)
        z1 = partition.partition_function(Xp, spec, target=1.0)
        rel = abs(z0.abs - z1.abs) / z0.abs
        ok = rel < 1e-3
        _emit({"abs_base": z0.abs, "abs_perturbed": z1.abs, "rel_change": rel, "pass": bool(ok)}, args)
        return 0 if ok else 3
    raise ValueError(f"unknown check {kind!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qdlab", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, theta=True, modulus=True):
        if theta:
            p.add_argument("--theta-arg", default="1/3", help="theta = e^{i pi p/q}")
        if modulus:
            p.add_argument("--N", type=int, default=1)
        p.add_argument("--grid", type=int, default=None, help="grid points M")
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--threads", type=int, default=1,
                       help="accepted for interface compatibility; evaluation is sequential")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="write JSON here instead of stdout")

    p = sub.add_parser("phi", help="evaluate Faddeev's quantum dilogarithm")
    common(p, modulus=False)
    p.add_argument("--z", required=True, help="complex as re,im")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("dtheta", help="evaluate D_theta(x, n) over R x Z/N")
    common(p)
    p.add_argument("--z", required=True)
    p.add_argument("--n", type=int, default=0)
    p.set_defaults(func=cmd_dtheta)

    p = sub.add_parser("gamma", help="the Gaussian-integral constant of A_N")
    common(p, theta=False)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("psi", help="evaluate the charged function psi_{A,C}")
    common(p)
    p.add_argument("--charges", required=True, help="a,b,c summing to 1")
    p.add_argument("--z", required=True)
    p.add_argument("--n", type=int, default=0)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("kernel", help="evaluate the two-variable weight kernel")
    common(p)
    p.add_argument("--charges", required=True)
    p.add_argument("--x", required=True, help="point of A_N as xr,n")
    p.add_argument("--y", required=True)
    p.add_argument("--mu", default=None)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("partition", help="state-integral partition function")
    common(p)
    p.add_argument("--in", dest="inp", default=None, help="triangulation document")
    p.add_argument("--name", default="fig8_2tet")
    p.add_argument("--target", type=float, default=1.0, help="relative two-grid target")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("pachner", help="apply the 2-3 move and print the new document")
    common(p)
    p.add_argument("--in", dest="inp", default=None)
    p.add_argument("--name", default="fig8_2tet")
    p.add_argument("--face", default=f"{FIG8_CANONICAL_FACE[0]},{FIG8_CANONICAL_FACE[1]}")
    p.set_defaults(func=cmd_pachner)

    p = sub.add_parser("census", help="emit a built-in triangulation document")
    common(p)
    p.add_argument("--name", required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("wgz", help="Weil-Gel'fand-Zak round-trip and commutation report")
    common(p, theta=False, modulus=False)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--b", default=None, help="level parameter b as re,im (2 Re b^2 = k)")
    p.set_defaults(func=cmd_wgz)

    p = sub.add_parser("check", help="run a verification and report pass/fail JSON")
    p.add_argument(
        "kind",
        choices=[
            "inversion",
            "fourier",
            "charged",
            "pentagon",
            "faddeev-type",
            "groupoid",
            "descent",
            "gauge",
        ],
    )
    common(p)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--charges", default=None)
    p.add_argument("--in", dest="inp", default=None)
    p.add_argument("--name", default="fig8_2tet")
    p.set_defaults(func=cmd_check)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.threads < 1:
        print("--threads must be >= 1", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except NonConvergent as e:
        print(f"non-convergent: {e}", file=sys.stderr)
        return 2
    except (QdlabError, ValueError, OSError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
