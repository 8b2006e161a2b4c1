"""Benchmark the compiled kernels against the pure-Python fallback.

Run:  python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from novikov._kernels import pure

try:
    from novikov._kernels import _fast as fast
except ImportError:
    fast = None


def timeit(fn, *args, repeat=1):
    t0 = time.perf_counter()
    for _ in range(repeat):
        out = fn(*args)
    return (time.perf_counter() - t0) / repeat, out


def bench_enumeration():
    rows = []
    for p in (2, 3, 5):
        tp, np_ = timeit(pure.enumerate_novikov_dim2, p)
        row = {"task": f"enumerate dim-2 tables F_{p}", "pure_s": tp, "count": len(np_)}
        if fast is not None:
            tf, nf = timeit(fast.enumerate_novikov_dim2, p)
            assert nf == np_
            row["fast_s"] = tf
        rows.append(row)
    if fast is not None:
        tf, nf = timeit(fast.enumerate_novikov_dim2, 7)
        rows.append({"task": "enumerate dim-2 tables F_7", "fast_s": tf, "count": len(nf)})
    return rows


def bench_residual_sweep(trials=20000, seed=11):
    rng = random.Random(seed)
    p, n = 5, 2
    cases = []
    for _ in range(trials):
        mul = tuple(rng.randrange(p) for _ in range(8))
        t = tuple(rng.randrange(p) for _ in range(4))
        r = tuple(rng.randrange(p) for _ in range(4))
        cases.append((mul, t, r))

    def sweep(mod):
        hits = 0
        for mul, t, r in cases:
            if mod.rb_ok(mul, n, p, t, 1):
                hits += 1
            if mod.nybe_ok(mul, n, p, r):
                hits += 1
            if mod.hkappa_ok(mul, n, p, t, 1, 3):
                hits += 1
        return hits

    tp, hp = timeit(sweep, pure)
    row = {"task": f"{trials} random residual triples F_5", "pure_s": tp, "count": hp}
    if fast is not None:
        tf, hf = timeit(sweep, fast)
        assert hf == hp
        row["fast_s"] = tf
    return [row]


def main():
    rows = bench_enumeration() + bench_residual_sweep()
    print(f"{'task':42s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for row in rows:
        tp = row.get("pure_s")
        tf = row.get("fast_s")
        pure_s = f"{tp:9.3f}s" if tp is not None else "      n/a"
        fast_s = f"{tf:9.3f}s" if tf is not None else "      n/a"
        speed = f"{tp / tf:7.1f}x" if tp and tf else "     n/a"
        print(f"{row['task']:42s} {pure_s:>10s} {fast_s:>10s} {speed:>8s}")
    if fast is None:
        print("\ncompiled backend unavailable; timed the pure fallback only")


if __name__ == "__main__":
    main()
