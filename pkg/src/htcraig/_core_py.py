"""Pure-Python evaluation kernel.

Formulas are compiled (in htcraig.semantics) to postfix programs over a
stack machine; truth values are the ints 0 (F), 1 (NF), 2 (T).  The
compiled sibling htcraig._core implements the same four functions; this
module is the fallback used when the extension is unavailable.

Opcodes: a non-negative entry pushes the value of that atom index, the
negative entries are the operators below.
"""

from __future__ import annotations

from collections.abc import Sequence

OP_BOT = -1
OP_TOP = -2
OP_NOT = -3
OP_NH = -4
OP_AND = -5
OP_OR = -6
OP_IMP = -7


def eval_one(prog: Sequence[int], values: Sequence[int]) -> int:
    """Run one program under one assignment (atom index -> values[i])."""
    stack: list[int] = []
    push = stack.append
    for op in prog:
        if op >= 0:
            push(values[op])
        elif op == OP_BOT:
            push(0)
        elif op == OP_TOP:
            push(2)
        elif op == OP_NOT:
            stack[-1] = 2 if stack[-1] == 0 else 0
        elif op == OP_NH:
            stack[-1] = 0 if stack[-1] == 2 else 2
        else:
            b = stack.pop()
            a = stack[-1]
            if op == OP_AND:
                stack[-1] = a if a < b else b
            elif op == OP_OR:
                stack[-1] = a if a > b else b
            else:  # OP_IMP
                stack[-1] = 2 if a <= b else b
    return stack[0]


def _assignments(n_atoms: int):
    """All value vectors over n_atoms, lexicographic with F < NF < T.

    The first atom is the most significant digit, so vector i of the
    enumeration equals the base-3 digits of i.
    """
    values = [0] * n_atoms
    total = 3**n_atoms
    for idx in range(total):
        yield idx, values
        for pos in range(n_atoms - 1, -1, -1):
            if values[pos] < 2:
                values[pos] += 1
                break
            values[pos] = 0


def first_entail_fail(prog_a: Sequence[int], prog_b: Sequence[int], n_atoms: int) -> int:
    """Index of the first assignment where a evaluates above b, or -1."""
    for idx, values in _assignments(n_atoms):
        if eval_one(prog_a, values) > eval_one(prog_b, values):
            return idx
    return -1


def first_equiv_fail(prog_a: Sequence[int], prog_b: Sequence[int], n_atoms: int) -> int:
    """Index of the first assignment where a and b differ, or -1."""
    for idx, values in _assignments(n_atoms):
        if eval_one(prog_a, values) != eval_one(prog_b, values):
            return idx
    return -1


def table(prog: Sequence[int], n_atoms: int) -> bytes:
    """Values of the program under all 3**n_atoms assignments, in order."""
    out = bytearray(3**n_atoms)
    for idx, values in _assignments(n_atoms):
        out[idx] = eval_one(prog, values)
    return bytes(out)
