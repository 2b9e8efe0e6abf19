"""Small builders shared by the test modules."""
from __future__ import annotations

from itertools import combinations

from simplicat.simpset import DegenerateRef, TruncatedSSet


def complex_sset(facets, level: int) -> TruncatedSSet:
    """Ordered simplicial complex generated by ``facets`` (tuples of vertex labels)."""
    simplices = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            simplices.update(combinations(f, k))
    cells = [sorted(s for s in simplices if len(s) == k + 1) for k in range(level + 1)]
    faces = {}
    for layer in cells[1:]:
        for s in layer:
            faces[s] = [DegenerateRef(s[:i] + s[i + 1:]) for i in range(len(s))]
    return TruncatedSSet(level, cells, faces)


def dense_boundaries(X: TruncatedSSet) -> tuple[dict, dict]:
    """Normalized boundary matrices read straight off the face table."""
    dims = {k: len(X.cells[k]) for k in range(X.level + 1)}
    mats = {}
    for k in range(1, X.level + 1):
        rows = {x: i for i, x in enumerate(X.cells[k - 1])}
        m = [[0] * dims[k] for _ in range(dims[k - 1])]
        for j, x in enumerate(X.cells[k]):
            for i, ref in enumerate(X.faces[x]):
                if not ref.degeneracies:
                    m[rows[ref.base]][j] += (-1) ** i
        mats[k] = m
    return mats, dims


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def all_simplex_count(X: TruncatedSSet, k: int) -> int:
    """Every k-simplex, degenerate or not: a non-degenerate m-cell contributes C(k, m)."""
    from math import comb
    return sum(len(X.cells[m]) * comb(k, m) for m in range(min(k, X.level) + 1))


def sparse_square_is_zero(cc) -> bool:
    """``d_{k-1} d_k = 0`` for every degree of a sparse chain complex."""
    for k in range(2, cc.top + 1):
        lo, hi = cc.diffs.get(k - 1, {}), cc.diffs.get(k, {})
        rows_of: dict = {}
        for (r, c), v in lo.items():
            rows_of.setdefault(c, []).append((r, v))
        acc: dict = {}
        for (m, c), v in hi.items():
            for r, w in rows_of.get(m, ()):
                acc[(r, c)] = acc.get((r, c), 0) + w * v
        if any(acc.values()):
            return False
    return True
