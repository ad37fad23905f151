#!/usr/bin/env python3
"""Scan |Z| over the balanced shape space of the two-tet figure-eight complex.

Walks the gauge (leading-trailing) directions, along which |Z| is constant,
and one non-gauge balanced direction, along which |Z| genuinely varies: the
balanced variety is three-dimensional here while the gauge orbits span two.

Usage: python scripts/gauge_scan.py [--grid 64] [--steps 5]
"""

import argparse

import numpy as np

from qdlab.errors import NonConvergent
from qdlab.lca import QuadratureSpec
from qdlab.partition import partition_function
from qdlab.triangulation import (
    balance_kernel,
    balanced_perturbation,
    builtin_census,
    gauge_direction,
    positivity_margin,
)


def scan(X, direction, label, steps, spec):
    margin = positivity_margin(X, direction)
    print(f"\n{label} (positivity margin {margin:.3f})")
    for s in np.linspace(-0.5, 0.5, steps):
        eps = s * margin
        Xp = balanced_perturbation(X, direction, eps)
        try:
            z = partition_function(Xp, spec, target=1e-2)
        except NonConvergent as e:
            print(f"  eps = {eps:+.4f}   (grid too coarse: {e})")
            continue
        print(f"  eps = {eps:+.4f}   |Z| = {z.abs:.10f}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", type=int, default=64)
    ap.add_argument("--steps", type=int, default=5)
    args = ap.parse_args()
    X = builtin_census("fig8_2tet")
    spec = QuadratureSpec(M=args.grid)

    for e in range(len(X.edge_classes)):
        scan(X, gauge_direction(X, e), f"gauge direction of edge {e}", args.steps, spec)

    ker = balance_kernel(X)
    g = np.array([gauge_direction(X, e) for e in range(len(X.edge_classes))])
    # project a kernel vector off the gauge span to expose a shape direction
    v = ker[0]
    for row in g:
        if np.linalg.norm(row) > 0:
            v = v - row * (v @ row) / (row @ row)
    if np.linalg.norm(v) > 1e-9:
        scan(X, v / np.linalg.norm(v), "non-gauge balanced direction", args.steps, spec)


if __name__ == "__main__":
    main()
