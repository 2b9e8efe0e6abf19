"""Smith normal form over the integers.

Python integers are arbitrary precision, so no entry can wrap around; the
overflow contract is met by construction.
"""
from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(D, U, V)`` with ``U @ M @ V == D`` and U, V unimodular.

    The diagonal of ``D`` is non-negative with ``d1 | d2 | ...``.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for row in R:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):  # row_dst += c * row_src
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, c):  # col_dst += c * col_src
        for R in (A, V):
            for row in R:
                row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # the pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return A, U, V


def diagonal(D: Matrix) -> list[int]:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def _dense_factors(rows: list[dict[int, int]]) -> list[int]:
    cols = sorted({c for r in rows for c in r})
    if not cols:
        return []
    pos = {c: i for i, c in enumerate(cols)}
    dense = [[0] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for c, v in r.items():
            dense[i][pos[c]] = v
    D, _, _ = smith_normal_form(dense)
    return [d for d in diagonal(D) if d]


def invariant_factors(entries: dict[tuple[int, int], int] | Sequence[Sequence[int]]) -> list[int]:
    """Non-zero invariant factors of a (sparse) integer matrix.

    Accepts either a dense matrix or a ``{(row, col): value}`` dict.  Unit
    pivots are eliminated sparsely first; the residue goes through the
    dense Smith form.
    """
    rows: dict[int, dict[int, int]] = {}
    if isinstance(entries, dict):
        for (r, c), v in entries.items():
            if v:
                rows.setdefault(r, {})[c] = v
    else:
        for r, row in enumerate(entries):
            for c, v in enumerate(row):
                if v:
                    rows.setdefault(r, {})[c] = int(v)
    colrows: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            colrows.setdefault(c, set()).add(r)

    units = 0
    progress = True
    while progress:
        progress = False
        for pr in list(rows):
            prow = rows.get(pr)
            if prow is None:
                continue
            pc = None
            for c, v in prow.items():
                if v in (1, -1) and (pc is None or len(colrows[c]) < len(colrows[pc])):
                    pc = c
            if pc is None:
                continue
            del rows[pr]
            pv = prow[pc]
            for c in prow:
                colrows[c].discard(pr)
            for r in list(colrows[pc]):
                row = rows[r]
                factor = row[pc] * pv  # pv is a unit, so pv == 1/pv
                for c, v in prow.items():
                    nv = row.get(c, 0) - factor * v
                    if nv:
                        if c not in row:
                            colrows[c].add(r)
                        row[c] = nv
                    elif c in row:
                        del row[c]
                        colrows[c].discard(r)
                if not row:
                    del rows[r]
            units += 1
            progress = True
    rest = _dense_factors([row for row in rows.values() if row])
    return [1] * units + sorted(rest, key=abs)
