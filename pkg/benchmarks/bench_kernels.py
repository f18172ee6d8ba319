"""Compare the compiled and pure-Python polynomial kernels.

Two measurements:

* micro: ``pi_terms``, ``phi_terms`` and ``mul_terms`` from both kernel
  modules on the same inputs (results are checked to be identical);
* end to end: a fixed workload (a k-Schur Catalan function, a rotation
  evaluation and a Macdonald polynomial) run in fresh interpreters with and
  without ``NSCATALAN_PURE=1``.

Run with ``python benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import os
import subprocess
import sys
import timeit

from nscatalan import _kernels_py
from nscatalan.catalan import catalan_recursive
from nscatalan.hecke import longest
from nscatalan.rootideals import full

try:
    from nscatalan import _kernels as _kernels_c
except ImportError:  # pragma: no cover
    _kernels_c = None

WORKLOAD = """
import time
t = time.perf_counter()
from nscatalan.exactpoly import BACKEND
from nscatalan.catalan import kschur, catalan_rotation
from nscatalan.rootideals import parse_nr
from nscatalan.hecke import longest
from nscatalan.macdonald import tE
kschur((2, 2, 2, 1, 1), 3)
catalan_rotation(parse_nr("2,2,2,2,1"), (3, 2, 2, 1, 1), longest(5))
tE((0, 3, 1, 2))
print(BACKEND, time.perf_counter() - t)
"""


def sample_data() -> dict:
    """A realistic term dictionary: a Hall-Littlewood Catalan function in 4 variables."""
    return dict(catalan_recursive(full(4), (3, 2, 1, 0), longest(4)).raw())


def micro(repeat: int = 5) -> tuple[list[tuple[str, float, float]], int]:
    data = sample_data()
    small = {k: v for k, v in list(data.items())[:40]}
    cases = [
        ("pi_terms", lambda m: [m.pi_terms(data, i) for i in (1, 2, 3)]),
        ("phi_terms", lambda m: m.phi_terms(data)),
        ("mul_terms", lambda m: m.mul_terms(small, small)),
    ]
    rows = []
    for name, fn in cases:
        t_py = min(timeit.repeat(lambda: fn(_kernels_py), number=20, repeat=repeat))
        if _kernels_c is None:
            rows.append((name, t_py, float("nan")))
            continue
        assert fn(_kernels_py) == fn(_kernels_c), f"{name}: kernels disagree"
        t_c = min(timeit.repeat(lambda: fn(_kernels_c), number=20, repeat=repeat))
        rows.append((name, t_py, t_c))
    return rows, len(data)


def end_to_end() -> dict[str, float]:
    out = {}
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("NSCATALAN_PURE", None)
        if pure:
            env["NSCATALAN_PURE"] = "1"
        res = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
        backend, secs = res.stdout.split()
        out[backend] = float(secs)
    return out


def main() -> None:
    rows, size = micro()
    print(f"micro benchmarks (20 calls, best of 5; input with {size} terms)")
    print(f"{'kernel':<12}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, t_py, t_c in rows:
        print(f"{name:<12}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>10.2f}")
    e2e = end_to_end()
    print("\nend-to-end workload (fresh interpreter)")
    for backend, secs in sorted(e2e.items()):
        print(f"  {backend:<8}{secs:8.3f} s")
    if "cython" in e2e and "python" in e2e:
        print(f"  speedup {e2e['python'] / e2e['cython']:.2f}x")


if __name__ == "__main__":
    main()
