"""Compare the compiled kernel with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernel.py [--repeat N] [--seed S]

Kernel functions are timed directly on identical inputs.  The end-to-end
row runs one suite check in a subprocess under each backend.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from artifact import _pykernel

try:
    from artifact import _ckernel
except ImportError:
    _ckernel = None


def _cases(rng: random.Random) -> list[tuple[str, str, tuple]]:
    n = 9
    braid = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(60))
    free = tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(4000))
    images = [tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(5)) for _ in range(n)]
    return [
        ("signature, 60 letters on 9 strands", "signature", (n, braid)),
        ("reduce, 4000 letters", "reduce", (free,)),
        ("substitute, 4000 letters", "substitute", (free, images)),
        ("act_word, 4000 letters by 10 letters", "act_word", (free, braid[:10])),
    ]


def _time(fn, args, repeat: int) -> float:
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def _suite_seconds(pure: bool, check: str) -> float:
    env = dict(os.environ)
    if pure:
        env["ARTIFACT_PURE_PYTHON"] = "1"
    else:
        env.pop("ARTIFACT_PURE_PYTHON", None)
    code = (
        "import time; from artifact.suite import run_suite; "
        f"t = time.perf_counter(); run_suite(threads=1, filter_ids=('{check}',)); "
        "print(time.perf_counter() - t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout.strip())


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--check", default="AC03", help="suite check for the end-to-end row")
    args = parser.parse_args()

    if _ckernel is None:
        print("compiled kernel not built; run: pip install -e . --no-build-isolation")
        return 1

    rng = random.Random(args.seed)
    rows = []
    for label, name, fargs in _cases(rng):
        assert getattr(_ckernel, name)(*fargs) == getattr(_pykernel, name)(*fargs), name
        py = _time(getattr(_pykernel, name), fargs, args.repeat)
        cy = _time(getattr(_ckernel, name), fargs, args.repeat)
        rows.append((label, py, cy))
    py = _suite_seconds(True, args.check)
    cy = _suite_seconds(False, args.check)
    rows.append((f"suite check {args.check} (end to end)", py, cy))

    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  {'python':>12}  {'cython':>12}  {'speedup':>8}")
    for label, py, cy in rows:
        print(f"{label:<{width}}  {py * 1e3:>10.3f}ms  {cy * 1e3:>10.3f}ms  {py / cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
