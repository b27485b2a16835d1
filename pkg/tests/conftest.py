"""Shared formula generators for the test suite.

All randomized tests use seeded random.Random instances so that every
run sees the same corpus; hypothesis-based properties manage their own
generation.
"""

from __future__ import annotations

import random
from itertools import product

from htcraig.formula import And, Atom, Falsum, Formula, Imp, Nh, Not, Or, Verum

ATOMS4 = ("p", "q", "r", "s")


def random_ht(rng: random.Random, depth: int, atoms=ATOMS4, p_const=0.08) -> Formula:
    """Random implication-only formula of the given maximum depth."""
    k = rng.random()
    if depth <= 0 or k < 0.32:
        if k < p_const / 2:
            return Falsum()
        if k < p_const:
            return Verum()
        return Atom(rng.choice(atoms))
    if k < 0.5:
        return Not(random_ht(rng, depth - 1, atoms, p_const))
    op = rng.choice((And, Or, Imp))
    return op(
        random_ht(rng, depth - 1, atoms, p_const),
        random_ht(rng, depth - 1, atoms, p_const),
    )


def random_nh(rng: random.Random, depth: int, atoms=ATOMS4, negated=False, in_nh=False) -> Formula:
    """Random implication-free formula with nh in positive positions only.

    nh is never nested inside another nh argument, matching what the
    normalization accepts.
    """
    k = rng.random()
    if depth <= 0 or k < 0.3:
        if k < 0.04:
            return Falsum()
        if k < 0.08:
            return Verum()
        return Atom(rng.choice(atoms))
    if k < 0.5:
        return Not(random_nh(rng, depth - 1, atoms, not negated, in_nh))
    if k < 0.6 and not negated and not in_nh:
        return Nh(random_nh(rng, depth - 1, atoms, False, True))
    op = rng.choice((And, Or))
    return op(
        random_nh(rng, depth - 1, atoms, negated, in_nh),
        random_nh(rng, depth - 1, atoms, negated, in_nh),
    )


def random_nh_nnf(rng: random.Random, depth: int, atoms=ATOMS4) -> Formula:
    """Random formula in nh negation normal form."""
    if depth <= 0 or rng.random() < 0.35:
        a = Atom(rng.choice(atoms))
        return rng.choice(
            [a, Not(a), Not(Not(a)), Nh(a), Falsum(), Verum(), a, Not(a), Nh(a)]
        )
    op = And if rng.random() < 0.5 else Or
    return op(random_nh_nnf(rng, depth - 1, atoms), random_nh_nnf(rng, depth - 1, atoms))


def ht_formulas_up_to(max_size: int, atoms=("p", "q")) -> list[Formula]:
    """Every implication-only formula with at most max_size nodes.

    Leaves are the given atoms (no constants); connectives are the full
    nh-free set.  Used as the exhaustive small corpus.
    """
    by_size: dict[int, list[Formula]] = {1: [Atom(a) for a in atoms]}
    for n in range(2, max_size + 1):
        layer: list[Formula] = [Not(f) for f in by_size[n - 1]]
        for i in range(1, n - 1):
            j = n - 1 - i
            for left in by_size[i]:
                for right in by_size[j]:
                    layer.append(And(left, right))
                    layer.append(Or(left, right))
                    layer.append(Imp(left, right))
        by_size[n] = layer
    out: list[Formula] = []
    for n in range(1, max_size + 1):
        out.extend(by_size[n])
    return out


def assignments_over(atoms: tuple[str, ...]):
    """All assignments over the atoms, values 0,1,2, lexicographic."""
    for values in product((0, 1, 2), repeat=len(atoms)):
        yield dict(zip(atoms, values))
