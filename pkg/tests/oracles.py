"""Independent brute-force oracles used to freeze expected values.

Nothing here imports the package under test.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd


def _det(rows):
    n = len(rows)
    m = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    assert det.denominator == 1
    return int(det)


def determinantal_divisors(matrix):
    """gcd of all k x k minors, for k = 1..min(rows, cols)."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in combinations(range(rows), k):
            for ci in combinations(range(cols), k):
                g = gcd(g, _det([[matrix[r][c] for c in ci] for r in ri]))
        out.append(g)
    return out


def invariant_factors_oracle(matrix):
    """Diagonal of the Smith form from quotients of determinantal divisors."""
    divs = determinantal_divisors(matrix)
    out = []
    prev = 1
    for d in divs:
        if d == 0:
            break
        out.append(d // prev)
        prev = d
    return out


def homology_oracle(boundaries, dims, k):
    """(rank, torsion) of H_k from explicit dense boundary matrices.

    ``boundaries[k]`` maps k-chains to (k-1)-chains (rows = (k-1)-cells),
    ``dims[k]`` is the number of k-cells.
    """
    def rank_and_torsion(m):
        if not m or not m[0]:
            return 0, []
        f = invariant_factors_oracle(m)
        return len(f), [x for x in f if x > 1]

    r_out, _ = rank_and_torsion(boundaries.get(k)) if k > 0 else (0, [])
    r_in, tors = rank_and_torsion(boundaries.get(k + 1))
    return dims[k] - r_out - r_in, tors
