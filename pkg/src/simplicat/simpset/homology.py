"""Normalized chains, integral homology and connected components."""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import CellId, DegenerateRef, InsufficientTruncation, SimplicialMap, TruncatedSSet
from .snf import invariant_factors


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank`` plus the cyclic torsion summands ``Z/t``."""

    rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def boundary_matrix(X: TruncatedSSet, k: int) -> dict[tuple[int, int], int]:
    """Sparse ``d_k``: rows index (k-1)-cells, columns index k-cells."""
    if k > X.level:
        raise InsufficientTruncation(k, X.level)
    out: dict[tuple[int, int], int] = {}
    if k == 0:
        return out
    for col, x in enumerate(X.cells[k]):
        for i, f in enumerate(X.faces[x]):
            if f.degeneracies:
                continue
            key = (X.index(f.base), col)
            v = out.get(key, 0) + (-1 if i % 2 else 1)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


@dataclass
class ChainComplex:
    """A bounded complex given by sparse differentials.

    ``ranks[k]`` is the rank of ``C_k``; ``diffs[k]`` maps ``C_k -> C_{k-1}``.
    The top degree is only a source of boundaries.
    """

    ranks: list[int]
    diffs: dict[int, dict[tuple[int, int], int]] = field(default_factory=dict)

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def homology(self, k: int) -> AbelianGroup:
        if k + 1 > self.top:
            raise InsufficientTruncation(k + 1, self.top)
        out_rank = len(invariant_factors(self.diffs.get(k, {}))) if k > 0 else 0
        incoming = invariant_factors(self.diffs.get(k + 1, {}))
        torsion = tuple(t for t in incoming if t > 1)
        return AbelianGroup(self.ranks[k] - out_rank - len(incoming), torsion)


def chain_complex(X: TruncatedSSet, top: int | None = None) -> ChainComplex:
    top = X.level if top is None else top
    if top > X.level:
        raise InsufficientTruncation(top, X.level)
    return ChainComplex(
        [len(X.cells[k]) for k in range(top + 1)],
        {k: boundary_matrix(X, k) for k in range(1, top + 1)},
    )


def homology(X: TruncatedSSet, k_max: int) -> list[AbelianGroup]:
    """``H_0 .. H_{k_max}`` of the normalized chain complex of ``X``."""
    if k_max > X.level - 1:
        raise InsufficientTruncation(k_max + 1, X.level)
    C = chain_complex(X, k_max + 1)
    return [C.homology(k) for k in range(k_max + 1)]


def chain_map_matrix(f: SimplicialMap, k: int) -> dict[tuple[int, int], int]:
    """``f_#`` on normalized k-chains (degenerate images vanish)."""
    out = {}
    for col, x in enumerate(f.source.cells[k]):
        img = f.assignment[x]
        if not img.degeneracies:
            out[(f.target.index(img.base), col)] = 1
    return out


def cone_complex(source: ChainComplex, target: ChainComplex,
                 chain_map: dict[int, dict[tuple[int, int], int]], top: int) -> ChainComplex:
    """Cone of a chain map ``phi``: ``C_k = T_k + S_{k-1}``, ``d(t, s) = (dt + phi s, -ds)``.

    ``chain_map[k]`` is the sparse matrix of ``phi`` in degree ``k``.
    """
    if top > target.top or top - 1 > source.top:
        raise InsufficientTruncation(top, min(target.top, source.top + 1))
    ranks = []
    diffs = {}
    for k in range(top + 1):
        nt = target.ranks[k]
        ranks.append(nt + (source.ranks[k - 1] if k >= 1 else 0))
        if k == 0:
            continue
        nt_low = target.ranks[k - 1]
        d = dict(target.diffs.get(k, {}))
        for (r, c), v in chain_map.get(k - 1, {}).items():
            d[(r, nt + c)] = v
        if k >= 2:
            for (r, c), v in source.diffs.get(k - 1, {}).items():
                d[(nt_low + r, nt + c)] = -v
        diffs[k] = d
    return ChainComplex(ranks, diffs)


def mapping_cone(f: SimplicialMap, top: int) -> ChainComplex:
    """Cone of ``f_#``: ``C_k = Y_k + X_{k-1}``, ``d(y, x) = (dy + f x, -dx)``."""
    X, Y = f.source, f.target
    if top > Y.level or top - 1 > X.level:
        raise InsufficientTruncation(top, min(Y.level, X.level + 1))
    return cone_complex(chain_complex(X, top - 1), chain_complex(Y, top),
                        {k: chain_map_matrix(f, k) for k in range(top)}, top)


# -- tensor products of chains --------------------------------------------

def tensor_basis(X: TruncatedSSet, Y: TruncatedSSet, k: int) -> list[tuple]:
    """Basis ``x (x) y`` of ``(C X (x) C Y)_k`` as ``(p, x, y)``, in a fixed order."""
    return [(p, x, y) for p in range(k + 1) for x in X.cells[p] for y in Y.cells[k - p]]


def tensor_complex(X: TruncatedSSet, Y: TruncatedSSet, top: int) -> ChainComplex:
    """``C X (x) C Y`` through degree ``top``, with ``d(x (x) y) = dx (x) y + (-1)^p x (x) dy``."""
    if top > min(X.level, Y.level):
        raise InsufficientTruncation(top, min(X.level, Y.level))
    bases = [tensor_basis(X, Y, k) for k in range(top + 1)]
    index = [{b: i for i, b in enumerate(B)} for B in bases]
    diffs = {}
    for k in range(1, top + 1):
        dX = {p: boundary_matrix(X, p) for p in range(1, k + 1)}
        dY = {q: boundary_matrix(Y, q) for q in range(1, k + 1)}
        cols_X = {p: _columns(dX[p]) for p in dX}
        cols_Y = {q: _columns(dY[q]) for q in dY}
        d: dict[tuple[int, int], int] = {}
        for col, (p, x, y) in enumerate(bases[k]):
            q = k - p
            if p:
                for r, v in cols_X[p].get(X.index(x), ()):
                    _add(d, (index[k - 1][(p - 1, X.cells[p - 1][r], y)], col), v)
            if q:
                sign = -1 if p % 2 else 1
                for r, v in cols_Y[q].get(Y.index(y), ()):
                    _add(d, (index[k - 1][(p, x, Y.cells[q - 1][r])], col), sign * v)
        diffs[k] = d
    return ChainComplex([len(B) for B in bases], diffs)


def _columns(m: dict[tuple[int, int], int]) -> dict[int, list[tuple[int, int]]]:
    out: dict[int, list] = {}
    for (r, c), v in m.items():
        out.setdefault(c, []).append((r, v))
    return out


def _add(d: dict, key, v: int) -> None:
    v = d.get(key, 0) + v
    if v:
        d[key] = v
    else:
        d.pop(key, None)


def alexander_whitney_matrix(f: SimplicialMap, k: int, index: dict) -> dict[tuple[int, int], int]:
    """``AW o f_#`` in degree ``k`` for a map into a product ``X x Y``.

    ``AW(a, b) = sum_p (front p-face of a) (x) (back (k-p)-face of b)``;
    terms with a degenerate factor vanish on normalized chains.
    """
    P = f.target
    X, Y = P.left, P.right
    out: dict[tuple[int, int], int] = {}
    for col, s in enumerate(f.source.cells[k]):
        img = f.assignment[s]
        if img.degeneracies:
            continue
        a, b = P.split(img)
        for p in range(k + 1):
            front = X.operate(a, tuple(range(p + 1)))
            if front.degeneracies:
                continue
            back = Y.operate(b, tuple(range(p, k + 1)))
            if back.degeneracies:
                continue
            _add(out, (index[(p, front.base, back.base)], col), 1)
    return out


def components(X: TruncatedSSet) -> list[list[CellId]]:
    """Connected components as vertex lists, ordered by first vertex."""
    parent = {v: v for v in X.vertices()}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    if X.level >= 1:
        for e in X.cells[1]:
            a, b = (find(f.base) for f in X.faces[e])
            if a != b:
                if X.index(a) < X.index(b):
                    parent[b] = a
                else:
                    parent[a] = b
    groups: dict = {}
    for v in X.vertices():
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda g: X.index(g[0]))


def pi0(X: TruncatedSSet) -> list[list[CellId]]:
    if X.level < 1 and X.cells[0]:
        raise InsufficientTruncation(1, X.level)
    return components(X)


def component_of(X: TruncatedSSet, vertex: CellId) -> TruncatedSSet:
    """The connected component containing ``vertex`` as a sub-simplicial set."""
    comp = next(c for c in components(X) if vertex in c)
    keep = set(comp)
    for k in range(1, X.level + 1):
        for x in X.cells[k]:
            if X.operate(DegenerateRef(x), (0,)).base in keep:
                keep.add(x)
    return X.restrict(keep)


def pi0_map(f: SimplicialMap) -> dict[int, int]:
    """Component index map induced by ``f``."""
    src = components(f.source)
    tgt = components(f.target)
    where = {v: i for i, c in enumerate(tgt) for v in c}
    return {i: where[f.assignment[c[0]].base] for i, c in enumerate(src)}
