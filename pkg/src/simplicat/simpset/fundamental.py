"""Edge-path presentations of the fundamental group and Tietze reduction."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Sequence

from ..verdict import Verdict
from .core import DegenerateRef, InsufficientTruncation, SimplicialError, TruncatedSSet
from .homology import AbelianGroup
from .snf import invariant_factors

Letter = tuple[Hashable, int]


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple[tuple[Letter, ...], ...]

    def __post_init__(self):
        gens = set(self.generators)
        for word in self.relators:
            for g, e in word:
                if g not in gens or e not in (1, -1):
                    raise ValueError(f"bad letter {(g, e)!r} in relator")

    def abelianization(self) -> AbelianGroup:
        col = {g: i for i, g in enumerate(self.generators)}
        entries: dict[tuple[int, int], int] = {}
        for r, word in enumerate(self.relators):
            for g, e in word:
                key = (r, col[g])
                entries[key] = entries.get(key, 0) + e
        factors = invariant_factors({k: v for k, v in entries.items() if v})
        return AbelianGroup(len(self.generators) - len(factors),
                            tuple(f for f in factors if f > 1))

    def to_dict(self) -> dict:
        return {
            "generators": [repr(g) for g in self.generators],
            "relators": [[[repr(g), e] for g, e in w] for w in self.relators],
        }


def pi1_presentation(X: TruncatedSSet, basepoint) -> GroupPresentation:
    """Edge-path group of the basepoint's component.

    The spanning tree is grown breadth-first from the basepoint, visiting
    edges in cell order.  Each non-degenerate 2-simplex contributes the word
    ``d2 . d0 . d1^-1`` with tree edges and degenerate edges erased.
    """
    if basepoint not in X or X.dim(basepoint) != 0:
        raise SimplicialError(f"basepoint {basepoint!r} is not a vertex")
    if X.level < 2:
        raise InsufficientTruncation(2, X.level)
    incident: dict = {v: [] for v in X.vertices()}
    ends = {}
    for e in X.cells[1]:
        t, s = X.faces[e][0].base, X.faces[e][1].base
        ends[e] = (s, t)
        incident[s].append(e)
        if t != s:
            incident[t].append(e)
    seen = {basepoint}
    tree = set()
    comp_edges = []
    queue = deque([basepoint])
    while queue:
        v = queue.popleft()
        for e in sorted(incident[v], key=X.index):
            s, t = ends[e]
            w = t if s == v else s
            if w not in seen:
                seen.add(w)
                tree.add(e)
                queue.append(w)
    for e in X.cells[1]:
        if ends[e][0] in seen and e not in tree:
            comp_edges.append(e)

    def letter(ref: DegenerateRef, sign: int):
        if ref.degeneracies or ref.base in tree:
            return []
        return [(ref.base, sign)]

    relators = []
    for x in X.cells[2]:
        d0, d1, d2 = X.faces[x]
        if X.operate(DegenerateRef(x), (0,)).base not in seen:
            continue
        relators.append(tuple(letter(d2, 1) + letter(d0, 1) + letter(d1, -1)))
    return GroupPresentation(tuple(comp_edges), tuple(relators))


def _free_reduce(word: list[int]) -> list[int]:
    out: list[int] = []
    for a in word:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return out


def _cyclic_reduce(word: list[int]) -> list[int]:
    word = _free_reduce(word)
    i, j = 0, len(word) - 1
    while i < j and word[i] == -word[j]:
        i += 1
        j -= 1
    return word[i:j + 1]


def _inverse(word: Sequence[int]) -> list[int]:
    return [-a for a in reversed(word)]


def tietze_trivial(P: GroupPresentation, budget: int, max_length: int = 200_000) -> Verdict:
    """Try to reduce ``P`` to the empty presentation.

    Refuted when the abelianization is non-trivial; certified when
    relator-driven generator elimination empties the presentation within
    ``budget`` moves; inconclusive otherwise.
    """
    ab = P.abelianization()
    if not ab.is_trivial:
        return Verdict.refuted(1, invariant="abelianization", value=ab.to_dict())
    code = {g: i + 1 for i, g in enumerate(P.generators)}
    alive = set(code.values())
    rels = [_cyclic_reduce([code[g] * e for g, e in w]) for w in P.relators]
    moves = 0
    while True:
        rels = [r for r in rels if r]
        rels = list(dict.fromkeys(tuple(r) for r in rels))
        rels = [list(r) for r in rels]
        if not alive:
            return Verdict.certified(1, moves=moves)
        if moves >= budget:
            return Verdict.inconclusive(1, reason="budget exhausted", moves=moves,
                                        generators_left=len(alive), relators_left=len(rels))
        if sum(len(r) for r in rels) > max_length:
            return Verdict.inconclusive(1, reason="word length cap", moves=moves,
                                        generators_left=len(alive), relators_left=len(rels))
        best = None
        for ri, r in enumerate(rels):
            counts: dict[int, int] = {}
            for a in r:
                counts[abs(a)] = counts.get(abs(a), 0) + 1
            for g, c in counts.items():
                if c == 1:
                    key = (len(r), g, ri)
                    if best is None or key < best:
                        best = key
        if best is None:
            return Verdict.inconclusive(1, reason="no eliminable generator", moves=moves,
                                        generators_left=len(alive), relators_left=len(rels))
        _, g, ri = best
        r = rels.pop(ri)
        pos = next(i for i, a in enumerate(r) if abs(a) == g)
        rotated = r[pos:] + r[:pos]
        rest = rotated[1:]
        # g^e . rest = 1  =>  g = rest^-1 (e = 1) or g = rest (e = -1)
        value = _inverse(rest) if rotated[0] > 0 else list(rest)
        inv_value = _inverse(value)
        new_rels = []
        for w in rels:
            if g not in map(abs, w):
                new_rels.append(w)
                continue
            out: list[int] = []
            for a in w:
                if a == g:
                    out.extend(value)
                elif a == -g:
                    out.extend(inv_value)
                else:
                    out.append(a)
            new_rels.append(_cyclic_reduce(out))
        rels = new_rels
        alive.discard(g)
        moves += 1
