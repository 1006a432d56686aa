"""Timing comparison between the pure-Python and compiled kernel backends.

Runs each kernel on a fixed mid-size workload with both backends and
prints a table of wall-clock times and speedups.  If the compiled
extension is not importable the script still runs the pure backend
and reports the compiled column as unavailable.

Usage:  python3 benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

from fqspheres._kernels import _pykernels
from fqspheres.generators import generate_points, parse_shape
from fqspheres.field import make_field

try:
    from fqspheres._kernels import _ckernels
except ImportError:
    _ckernels = None


def _full_plane_flat(q: int, d: int) -> list[int]:
    field = make_field(q)
    pts = generate_points(field, d, parse_shape("full"), seed=0)
    return pts.flat()


def _all_spheres_flat(q: int, d: int) -> list[int]:
    flat = []
    for cid in range(q**d):
        rest, coords = cid, []
        for _ in range(d):
            rest, c = divmod(rest, q)
            coords.append(c)
        coords.reverse()
        for lam in range(q):
            flat.extend(coords)
            flat.append(lam)
    return flat


def _random_flat(q: int, d: int, n: int, seed: int) -> list[int]:
    field = make_field(q)
    pts = generate_points(field, d, parse_shape(f"random:{n}"), seed=seed)
    return pts.flat()


def build_workloads() -> list[tuple[str, str, tuple]]:
    """Return (kernel name, workload label, args) triples."""
    pts_13 = _full_plane_flat(13, 2)
    sph_13 = _all_spheres_flat(13, 2)
    pts_7_3 = _full_plane_flat(7, 3)
    sph_7_3 = _all_spheres_flat(7, 3)
    pts_rand = _random_flat(13, 2, 100, seed=7)
    pts_31 = _full_plane_flat(31, 2)
    return [
        ("incidences_naive", "q=13 d=2 full x all", (13, 2, pts_13, sph_13)),
        ("incidences_bucketed", "q=7 d=3 full x all", (7, 3, pts_7_3, sph_7_3)),
        ("incidences_lifted", "q=13 d=2 full x all", (13, 2, pts_13, sph_13)),
        ("paraboloid_diff_table", "q=31 d=2", (31, 2)),
        ("determined_circle_ids", "q=13 n=100", (13, pts_rand)),
        ("circle_point_counts", "q=31 full plane", (31, pts_31)),
    ]


def time_call(fn, args, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=3, help="timing repeats per cell (best is kept)")
    args = ap.parse_args()

    if _ckernels is None:
        print("compiled backend not available; timing pure backend only\n")

    header = f"{'kernel':<24} {'workload':<22} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, label, call_args in build_workloads():
        pure_fn = getattr(_pykernels, name)
        t_pure = time_call(pure_fn, call_args, args.repeats)
        if _ckernels is not None:
            comp_fn = getattr(_ckernels, name)
            got_pure = pure_fn(*call_args)
            got_comp = comp_fn(*call_args)
            if got_pure != got_comp:
                raise SystemExit(f"backend mismatch in {name}: {got_pure!r} vs {got_comp!r}")
            t_comp = time_call(comp_fn, call_args, args.repeats)
            print(f"{name:<24} {label:<22} {t_pure:>10.4f} {t_comp:>13.4f} {t_pure / t_comp:>7.1f}x")
        else:
            print(f"{name:<24} {label:<22} {t_pure:>10.4f} {'n/a':>13} {'n/a':>8}")


if __name__ == "__main__":
    main()
