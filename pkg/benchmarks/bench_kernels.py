#!/usr/bin/env python3
"""Benchmark: compiled evaluation kernel vs the pure-Python fallback.

Times the two operations that dominate the oracle, full-table evaluation
and entailment checking with early exit, over random formulas of growing
vocabulary.  Run from the repository root:

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from htcraig import _core_py
from htcraig.formula import And, Atom, Falsum, Imp, Nh, Not, Or, Verum, voc
from htcraig.semantics import compile_program

try:
    from htcraig import _core
except ImportError:
    _core = None


def random_formula(rng, depth, atoms):
    k = rng.random()
    if depth <= 0 or k < 0.3:
        if k < 0.04:
            return rng.choice((Falsum(), Verum()))
        return Atom(rng.choice(atoms))
    if k < 0.45:
        return Not(random_formula(rng, depth - 1, atoms))
    if k < 0.55:
        return Nh(Atom(rng.choice(atoms)))
    op = rng.choice((And, Or, Imp))
    return op(
        random_formula(rng, depth - 1, atoms),
        random_formula(rng, depth - 1, atoms),
    )


def bench(kernel, progs, n_atoms, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        for pa, pb in progs:
            kernel.first_entail_fail(pa, pb, n_atoms)
            kernel.table(pa, n_atoms)
    return time.perf_counter() - t0


def main():
    rng = random.Random(12345)
    print(f"{'atoms':>5} {'rows':>7} {'pure (s)':>9} {'compiled (s)':>13} {'speedup':>8}")
    for n_atoms in (4, 6, 8, 10):
        atoms = tuple(f"a{i}" for i in range(n_atoms))
        index = {name: i for i, name in enumerate(atoms)}
        pairs = []
        while len(pairs) < 12:
            a = random_formula(rng, 6, atoms)
            b = random_formula(rng, 6, atoms)
            if len(voc(a) | voc(b)) == n_atoms:
                pairs.append((compile_program(a, index), compile_program(b, index)))
        repeat = max(1, 2 ** (12 - n_atoms))
        t_pure = bench(_core_py, pairs, n_atoms, repeat)
        if _core is None:
            print(f"{n_atoms:>5} {3**n_atoms:>7} {t_pure:>9.3f} {'(not built)':>13}")
            continue
        t_fast = bench(_core, pairs, n_atoms, repeat)
        print(
            f"{n_atoms:>5} {3**n_atoms:>7} {t_pure:>9.3f} {t_fast:>13.3f}"
            f" {t_pure / t_fast:>7.1f}x"
        )


if __name__ == "__main__":
    main()
