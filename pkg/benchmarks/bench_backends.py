"""Compare the compiled and pure-Python arithmetic kernels.

Runs the same workloads under every available backend and prints the
best-of-N wall times side by side.  Checksums guard against the two
backends silently computing different answers.

    python benchmarks/bench_backends.py [--repeat N] [--seed S]
"""

import argparse
import random
import time

from fpdec import kernels
from fpdec.groebner import Ideal, buchberger
from fpdec.mpoly import PolyRing
from fpdec.oracle import point_ideal
from fpdec.primdec import primary_decomposition


def _random_terms(rng, p, nvars, count, max_exp):
    seen = {}
    for _ in range(count):
        exps = tuple(rng.randrange(max_exp) for _ in range(nvars))
        seen[exps] = rng.randrange(1, p)
    return sorted(seen.items(), key=lambda t: t[0], reverse=True)


def bench_rref(rng):
    p = 10007
    rows = [[rng.randrange(p) for _ in range(80)] for _ in range(80)]
    reduced, pivots = kernels.rref([list(r) for r in rows], p)
    return len(pivots), sum(sum(r) for r in reduced) % p


def bench_poly_mul(rng):
    p = 65537
    a = _random_terms(rng, p, 3, 120, 8)
    b = _random_terms(rng, p, 3, 120, 8)
    prod = kernels.poly_mul(a, b, p, 0, (0, 1, 2))
    return len(prod), sum(c for _, c in prod) % p


def bench_groebner(rng):
    ring = PolyRing(5, ["x", "y", "z"], "lex")
    gens = [
        ring.parse("y^2 - x*z"),
        ring.parse("z^2 - x^2*y"),
        ring.parse("x + y + z - 1"),
    ]
    gb = buchberger(gens)
    return tuple(str(g) for g in gb)


def bench_decompose(rng):
    ring = PolyRing(7, ["x", "y", "z"], "lex")
    points = set()
    while len(points) < 5:
        points.add(tuple(rng.randrange(7) for _ in range(3)))
    d = primary_decomposition(point_ideal(ring, sorted(points)))
    return tuple(tuple(str(g) for g in c.groebner_basis()) for c in d.components)


WORKLOADS = [
    ("rref 80x80 (F_10007)", bench_rref),
    ("poly_mul 120x120 terms", bench_poly_mul),
    ("groebner slice ideal", bench_groebner),
    ("decompose 5 points F_7^3", bench_decompose),
]


def run(repeat, seed):
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (best of {repeat})")
    width = max(len(name) for name, _ in WORKLOADS)
    header = "workload".ljust(width) + "".join(f"  {b:>10}" for b in backends)
    if len(backends) > 1:
        header += "   speedup"
    print(header)
    for name, fn in WORKLOADS:
        times = {}
        checksums = set()
        for backend in backends:
            previous = kernels.use_backend(backend)
            try:
                best = float("inf")
                for _ in range(repeat):
                    rng = random.Random(seed)
                    t0 = time.perf_counter()
                    checksums.add(fn(rng))
                    best = min(best, time.perf_counter() - t0)
                times[backend] = best
            finally:
                kernels.use_backend(previous)
        if len(checksums) != 1:
            raise SystemExit(f"backend results disagree on {name!r}")
        line = name.ljust(width)
        for backend in backends:
            line += f"  {times[backend] * 1000:>8.2f}ms"
        if len(backends) > 1:
            line += f"   {times['python'] / times['c']:>6.1f}x"
        print(line)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    parser.add_argument("--seed", type=int, default=2026, help="workload RNG seed")
    args = parser.parse_args(argv)
    run(args.repeat, args.seed)


if __name__ == "__main__":
    main()
