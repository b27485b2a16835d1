# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernel; see htcraig._core_py for the contract.

Same opcode encoding and the same four entry points as the pure-Python
fallback, but the assignment enumeration loops run in C.
"""

from libc.stdlib cimport calloc, free

# Opcodes, kept in sync with htcraig._core_py.
DEF OP_BOT = -1
DEF OP_TOP = -2
DEF OP_NOT = -3
DEF OP_NH = -4
DEF OP_AND = -5
DEF OP_OR = -6
DEF OP_IMP = -7


cdef inline int _eval(const int* prog, Py_ssize_t n, const signed char* vals, int* stack) noexcept nogil:
    cdef Py_ssize_t i
    cdef int sp = 0
    cdef int op, a, b
    for i in range(n):
        op = prog[i]
        if op >= 0:
            stack[sp] = vals[op]
            sp += 1
        elif op == OP_BOT:
            stack[sp] = 0
            sp += 1
        elif op == OP_TOP:
            stack[sp] = 2
            sp += 1
        elif op == OP_NOT:
            stack[sp - 1] = 2 if stack[sp - 1] == 0 else 0
        elif op == OP_NH:
            stack[sp - 1] = 0 if stack[sp - 1] == 2 else 2
        else:
            sp -= 1
            b = stack[sp]
            a = stack[sp - 1]
            if op == OP_AND:
                stack[sp - 1] = a if a < b else b
            elif op == OP_OR:
                stack[sp - 1] = a if a > b else b
            else:
                stack[sp - 1] = 2 if a <= b else b
    return stack[0]


cdef inline bint _advance(signed char* vals, Py_ssize_t n_atoms) noexcept nogil:
    cdef Py_ssize_t pos
    for pos in range(n_atoms - 1, -1, -1):
        if vals[pos] < 2:
            vals[pos] += 1
            return True
        vals[pos] = 0
    return False


def eval_one(int[::1] prog, signed char[::1] values):
    cdef int* stack = <int*> calloc(prog.shape[0] + 1, sizeof(int))
    if stack is NULL:
        raise MemoryError()
    cdef const signed char* vals = NULL
    if values.shape[0] > 0:
        vals = &values[0]
    cdef int result = _eval(&prog[0], prog.shape[0], vals, stack)
    free(stack)
    return result


def first_entail_fail(int[::1] prog_a, int[::1] prog_b, int n_atoms):
    cdef long long total = 1
    cdef int i
    for i in range(n_atoms):
        total *= 3
    cdef signed char* vals = <signed char*> calloc(n_atoms + 1, 1)
    cdef int* stack_a = <int*> calloc(prog_a.shape[0] + 1, sizeof(int))
    cdef int* stack_b = <int*> calloc(prog_b.shape[0] + 1, sizeof(int))
    if vals is NULL or stack_a is NULL or stack_b is NULL:
        free(vals); free(stack_a); free(stack_b)
        raise MemoryError()
    cdef const int* pa = &prog_a[0]
    cdef const int* pb = &prog_b[0]
    cdef Py_ssize_t na = prog_a.shape[0], nb = prog_b.shape[0]
    cdef long long idx, found = -1
    with nogil:
        for idx in range(total):
            if _eval(pa, na, vals, stack_a) > _eval(pb, nb, vals, stack_b):
                found = idx
                break
            _advance(vals, n_atoms)
    free(vals); free(stack_a); free(stack_b)
    return found


def first_equiv_fail(int[::1] prog_a, int[::1] prog_b, int n_atoms):
    cdef long long total = 1
    cdef int i
    for i in range(n_atoms):
        total *= 3
    cdef signed char* vals = <signed char*> calloc(n_atoms + 1, 1)
    cdef int* stack_a = <int*> calloc(prog_a.shape[0] + 1, sizeof(int))
    cdef int* stack_b = <int*> calloc(prog_b.shape[0] + 1, sizeof(int))
    if vals is NULL or stack_a is NULL or stack_b is NULL:
        free(vals); free(stack_a); free(stack_b)
        raise MemoryError()
    cdef const int* pa = &prog_a[0]
    cdef const int* pb = &prog_b[0]
    cdef Py_ssize_t na = prog_a.shape[0], nb = prog_b.shape[0]
    cdef long long idx, found = -1
    with nogil:
        for idx in range(total):
            if _eval(pa, na, vals, stack_a) != _eval(pb, nb, vals, stack_b):
                found = idx
                break
            _advance(vals, n_atoms)
    free(vals); free(stack_a); free(stack_b)
    return found


def table(int[::1] prog, int n_atoms):
    cdef long long total = 1
    cdef int i
    for i in range(n_atoms):
        total *= 3
    out = bytearray(total)
    cdef unsigned char[::1] view = out
    cdef signed char* vals = <signed char*> calloc(n_atoms + 1, 1)
    cdef int* stack = <int*> calloc(prog.shape[0] + 1, sizeof(int))
    if vals is NULL or stack is NULL:
        free(vals); free(stack)
        raise MemoryError()
    cdef const int* p = &prog[0]
    cdef Py_ssize_t np = prog.shape[0]
    cdef long long idx
    with nogil:
        for idx in range(total):
            view[idx] = <unsigned char> _eval(p, np, vals, stack)
            _advance(vals, n_atoms)
    free(vals); free(stack)
    return bytes(out)
