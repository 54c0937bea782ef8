"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--calls 300] [--n 4096]

Each kernel is called on the same seeded inputs by both paths; the first
numba call (compilation) is excluded.  Results are checked to agree before
timings are reported.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from apollonian import _kernels, sampling


def _cases(rng, calls, n):
    poly = sampling.convex_polygon(rng)
    disk = list(zip(sampling.disk_points(rng, calls, 0.95), sampling.disk_points(rng, calls, 0.95)))
    half = list(zip(sampling.halfplane_points(rng, calls), sampling.halfplane_points(rng, calls)))
    inside = sampling.polygon_points_inside(rng, poly, 2 * calls).reshape(calls, 2)
    verts = poly.array
    return {
        "circle_max": (lambda k, x, y: k.circle_max(x, y, n, 1e-12), disk),
        "segment_max": (lambda k, x, y: k.segment_max(x, y, -40.0 + 0j, 1.0 + 0j, 80.0, n, 1e-12), half),
        "polygon_max": (lambda k, x, y: k.polygon_max(x, y, verts, n, 1e-12), [tuple(p) for p in inside]),
        "poisson_max": (lambda k, x, y: k.poisson_max(x, y, n), disk),
    }


def _time(fn, impl, pairs):
    out = []
    t0 = time.perf_counter()
    for x, y in pairs:
        r = fn(impl, complex(x), complex(y))
        out.append(r[0] if isinstance(r, tuple) else r)
    return time.perf_counter() - t0, np.array(out)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--calls", type=int, default=300)
    ap.add_argument("--n", type=int, default=4096, help="boundary samples per call")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if _kernels.numba_impl is None:
        raise SystemExit("numba is not installed; nothing to compare")
    cases = _cases(np.random.default_rng(args.seed), args.calls, args.n)

    print(f"{'kernel':<13}{'numpy ms':>11}{'numba ms':>11}{'speedup':>9}{'max |diff|':>13}")
    for name, (fn, pairs) in cases.items():
        fn(_kernels.numba_impl, complex(pairs[0][0]), complex(pairs[0][1]))  # compile
        t_np, v_np = _time(fn, _kernels.numpy_impl, pairs)
        t_nb, v_nb = _time(fn, _kernels.numba_impl, pairs)
        per_np, per_nb = 1e3 * t_np / len(pairs), 1e3 * t_nb / len(pairs)
        diff = float(np.max(np.abs(v_np - v_nb)))
        print(f"{name:<13}{per_np:>11.3f}{per_nb:>11.3f}{per_np / per_nb:>8.1f}x{diff:>13.1e}")


if __name__ == "__main__":
    main()
