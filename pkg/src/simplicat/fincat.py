"""Finite categories, functors, nerves and comma categories."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Hashable, Iterable, Mapping

from .simpset import DegenerateRef, SimplicialMap, TruncatedSSet

Obj = Hashable
Mor = Hashable


class CategoryError(ValueError):
    pass


class FinCat:
    """A finite category given by its full composition table.

    ``compose[(g, f)]`` is ``g o f`` and is defined exactly when
    ``target(f) == source(g)``.
    """

    __slots__ = ("objects", "morphisms", "identities", "composition", "_out", "_hom", "name")

    def __init__(
        self,
        objects: Iterable[Obj],
        morphisms: Mapping[Mor, tuple[Obj, Obj]],
        identities: Mapping[Obj, Mor],
        composition: Mapping[tuple[Mor, Mor], Mor],
        name: str = "",
    ):
        self.objects: tuple = tuple(objects)
        self.morphisms: dict = dict(morphisms)
        self.identities: dict = dict(identities)
        self.composition: dict = dict(composition)
        self.name = name
        self._out: dict = {a: [] for a in self.objects}
        self._hom: dict = {}
        for f, (s, t) in self.morphisms.items():
            if s in self._out:
                self._out[s].append(f)
            self._hom.setdefault((s, t), []).append(f)

    # -- queries -------------------------------------------------------
    def src(self, f: Mor) -> Obj:
        return self.morphisms[f][0]

    def tgt(self, f: Mor) -> Obj:
        return self.morphisms[f][1]

    def hom(self, a: Obj, b: Obj) -> list:
        return self._hom.get((a, b), [])

    def out(self, a: Obj) -> list:
        return self._out[a]

    def compose(self, g: Mor, f: Mor) -> Mor:
        return self.composition[(g, f)]

    def is_identity(self, f: Mor) -> bool:
        return self.identities.get(self.src(f)) == f

    def __len__(self) -> int:
        return len(self.objects)

    def __repr__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"FinCat({label}{len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def same_as(self, other: "FinCat") -> bool:
        return (
            set(self.objects) == set(other.objects)
            and self.morphisms == other.morphisms
            and self.identities == other.identities
            and self.composition == other.composition
        )


def validate_category(C: FinCat) -> list[str]:
    report = []
    objs = set(C.objects)
    if len(objs) != len(C.objects):
        report.append("duplicate object ids")
    clash = objs & set(C.morphisms)
    if clash:
        report.append(f"ids used for both objects and morphisms: {sorted(map(repr, clash))}")
    for f, (s, t) in C.morphisms.items():
        if s not in objs or t not in objs:
            report.append(f"morphism {f!r} has unknown endpoints")
    for a in C.objects:
        i = C.identities.get(a)
        if i is None:
            report.append(f"object {a!r} has no identity")
        elif C.morphisms.get(i) != (a, a):
            report.append(f"identity of {a!r} is not an endomorphism of it")
    if report:
        return report
    for (g, f), h in C.composition.items():
        if g not in C.morphisms or f not in C.morphisms:
            report.append(f"composite of unknown morphisms ({g!r}, {f!r})")
        elif C.tgt(f) != C.src(g):
            report.append(f"composite {g!r} o {f!r} is not composable")
        elif h not in C.morphisms or C.morphisms[h] != (C.src(f), C.tgt(g)):
            report.append(f"composite {g!r} o {f!r} = {h!r} has the wrong type")
    if report:
        return report
    for f, (s, t) in C.morphisms.items():
        for g in C.out(t):
            if (g, f) not in C.composition:
                report.append(f"missing composite {g!r} o {f!r}")
    if report:
        return report
    for f, (s, t) in C.morphisms.items():
        if C.composition[(f, C.identities[s])] != f:
            report.append(f"right unit fails for {f!r}")
        if C.composition[(C.identities[t], f)] != f:
            report.append(f"left unit fails for {f!r}")
    for f, (a, b) in C.morphisms.items():
        for g in C.out(b):
            gf = C.composition[(g, f)]
            for h in C.out(C.tgt(g)):
                if C.composition[(h, gf)] != C.composition[(C.composition[(h, g)], f)]:
                    report.append(f"associativity fails for ({h!r}, {g!r}, {f!r})")
    return report


def close_generators(objects, generators: Mapping[Mor, tuple[Obj, Obj]],
                     equations: Mapping[tuple[Mor, ...], tuple[Mor, ...]] = (),
                     name: str = "", max_length: int = 12) -> FinCat:
    """Category presented by generators and word equations.

    Words are tuples of generators read in composition order (``(g, f)``
    means ``g o f``).  Equations rewrite left to right; the rewriting system
    must terminate and be confluent on the words that occur, which is the
    caller's responsibility.  Morphism ids are the normal-form words, with
    ``()``-words replaced by ``id_<object>``.
    """
    equations = dict(equations)

    def normalize(word):
        changed = True
        while changed:
            changed = False
            for lhs, rhs in equations.items():
                n = len(lhs)
                for i in range(len(word) - n + 1):
                    if word[i:i + n] == lhs:
                        word = word[:i] + tuple(rhs) + word[i + n:]
                        changed = True
                        break
                if changed:
                    break
        return word

    morphisms = {}
    identities = {}
    words: dict = {}
    for a in objects:
        ident = f"id_{a}"
        identities[a] = ident
        morphisms[ident] = (a, a)
        words[(a, ())] = ident
    frontier = [((g,), s, t) for g, (s, t) in generators.items()]
    while frontier:
        nxt = []
        for w, s, t in frontier:
            w = normalize(w)
            if not w:
                continue
            if len(w) > max_length:
                raise CategoryError("generator closure does not terminate within the length cap")
            if (s, w) in words:
                continue
            mid = "".join(w) if all(isinstance(x, str) for x in w) else w
            words[(s, w)] = mid
            morphisms[mid] = (s, t)
            for g, (gs, gt) in generators.items():
                if gs == t:
                    nxt.append(((g,) + w, s, gt))
        frontier = nxt
    name_to_word = {v: k for k, v in words.items()}
    composition = {}
    for f, (s, t) in morphisms.items():
        for g, (s2, t2) in morphisms.items():
            if s2 != t:
                continue
            w = normalize(name_to_word[g][1] + name_to_word[f][1])
            composition[(g, f)] = words[(s, w)]
    return FinCat(objects, morphisms, identities, composition, name=name)


def opposite(C: FinCat) -> FinCat:
    return FinCat(
        C.objects,
        {f: (t, s) for f, (s, t) in C.morphisms.items()},
        C.identities,
        {(f, g): h for (g, f), h in C.composition.items()},
        name=f"{C.name}^op" if C.name else "",
    )


def product_cat(C: FinCat, D: FinCat) -> FinCat:
    morphisms = {
        (f, g): ((C.src(f), D.src(g)), (C.tgt(f), D.tgt(g)))
        for f in C.morphisms for g in D.morphisms
    }
    composition = {}
    for (f2, f1), f in C.composition.items():
        for (g2, g1), g in D.composition.items():
            composition[((f2, g2), (f1, g1))] = (f, g)
    return FinCat(
        [(a, b) for a in C.objects for b in D.objects],
        morphisms,
        {(a, b): (C.identities[a], D.identities[b]) for a in C.objects for b in D.objects},
        composition,
    )


@dataclass
class FunctorData:
    source: FinCat
    target: FinCat
    on_objects: dict
    on_morphisms: dict

    def validate(self) -> list[str]:
        S, T = self.source, self.target
        report = []
        for a in S.objects:
            if self.on_objects.get(a) not in set(T.objects):
                report.append(f"object {a!r} has no image")
        for f, (s, t) in S.morphisms.items():
            img = self.on_morphisms.get(f)
            if img not in T.morphisms:
                report.append(f"morphism {f!r} has no image")
            elif T.morphisms[img] != (self.on_objects[s], self.on_objects[t]):
                report.append(f"image of {f!r} has the wrong endpoints")
        if report:
            return report
        for a in S.objects:
            if self.on_morphisms[S.identities[a]] != T.identities[self.on_objects[a]]:
                report.append(f"identity of {a!r} not preserved")
        for (g, f), h in S.composition.items():
            if T.compose(self.on_morphisms[g], self.on_morphisms[f]) != self.on_morphisms[h]:
                report.append(f"composite {g!r} o {f!r} not preserved")
        return report

    def compose(self, inner: "FunctorData") -> "FunctorData":
        return FunctorData(
            inner.source, self.target,
            {a: self.on_objects[b] for a, b in inner.on_objects.items()},
            {f: self.on_morphisms[g] for f, g in inner.on_morphisms.items()},
        )


def identity_functor(C: FinCat) -> FunctorData:
    return FunctorData(C, C, {a: a for a in C.objects}, {f: f for f in C.morphisms})


def diagonal(C: FinCat) -> FunctorData:
    CC = product_cat(C, C)
    return FunctorData(C, CC, {a: (a, a) for a in C.objects}, {f: (f, f) for f in C.morphisms})


def projection_functor(CD: FinCat, C: FinCat, side: int) -> FunctorData:
    return FunctorData(
        CD, C,
        {p: p[side] for p in CD.objects},
        {f: f[side] for f in CD.morphisms},
    )


# -- nerves ---------------------------------------------------------------

def _chain_ref(C: FinCat, chain: tuple, start: Obj) -> DegenerateRef:
    """Normal form of a chain that may contain identities."""
    kept = tuple(f for f in chain if not C.is_identity(f))
    degs = tuple(i for i in range(len(chain) - 1, -1, -1) if C.is_identity(chain[i]))
    if not kept:
        return DegenerateRef((start,), degs)
    return DegenerateRef(kept, degs)


def nerve(C: FinCat, level: int) -> TruncatedSSet:
    """Truncated nerve; a vertex is ``(object,)``, a k-cell a k-chain ``(f1, ..., fk)``.

    Chains are read left to right, ``f1: c0 -> c1``, ``f2: c1 -> c2``, ...
    """
    nonid_out = {a: [f for f in C.out(a) if not C.is_identity(f)] for a in C.objects}
    cells = [[(a,) for a in C.objects]]
    faces = {}
    layer = [((f,), C.tgt(f)) for a in C.objects for f in nonid_out[a]]
    for k in range(1, level + 1):
        ids = []
        for chain, end in layer:
            ids.append(chain)
            if k == 1:
                f = chain[0]
                faces[chain] = (DegenerateRef((C.tgt(f),)), DegenerateRef((C.src(f),)))
                continue
            fs = [_chain_ref(C, chain[1:], C.tgt(chain[0]))]
            for i in range(1, k):
                merged = chain[:i - 1] + (C.compose(chain[i], chain[i - 1]),) + chain[i + 1:]
                fs.append(_chain_ref(C, merged, C.src(chain[0])))
            fs.append(_chain_ref(C, chain[:-1], C.src(chain[0])))
            faces[chain] = tuple(fs)
        cells.append(ids)
        if k < level:
            layer = [(chain + (g,), C.tgt(g)) for chain, end in layer for g in nonid_out[end]]
    return TruncatedSSet(level, cells, faces)


def nerve_map(F: FunctorData, source: TruncatedSSet, target: TruncatedSSet) -> SimplicialMap:
    S, T = F.source, F.target
    assignment = {}
    for x in source.all_cells():
        if source.dim(x) == 0:
            assignment[x] = DegenerateRef((F.on_objects[x[0]],))
        else:
            chain = tuple(F.on_morphisms[f] for f in x)
            assignment[x] = _chain_ref(T, chain, F.on_objects[S.src(x[0])])
    return SimplicialMap(source, target, assignment)


# -- comma categories -----------------------------------------------------

def comma_under_functor(F: FunctorData, L: Obj) -> FinCat:
    """``L | F``: objects ``(a, u: L -> F a)``, morphisms ``(alpha, src, tgt)``."""
    A, B = F.source, F.target
    objects = [(a, u) for a in A.objects for u in B.hom(L, F.on_objects[a])]
    morphisms = {}
    for (a, u) in objects:
        for alpha in A.out(a):
            tgt = (A.tgt(alpha), B.compose(F.on_morphisms[alpha], u))
            morphisms[(alpha, (a, u), tgt)] = ((a, u), tgt)
    return _comma_category(A, objects, morphisms, lambda o: o[0])


def _comma_category(A: FinCat, objects, morphisms, base) -> FinCat:
    identities = {o: (A.identities[base(o)], o, o) for o in objects}
    outgoing: dict = {o: [] for o in objects}
    for g, (s, t) in morphisms.items():
        outgoing[s].append((g, t))
    composition = {}
    for f, (s, t) in morphisms.items():
        for g, t2 in outgoing[t]:
            composition[(g, f)] = (A.compose(g[0], f[0]), s, t2)
    return FinCat(objects, morphisms, identities, composition)


def comma_over_diagonal(C: FinCat, d1: Obj, d2: Obj) -> FinCat:
    """``(d1, d2) | Diagonal``: cospans ``(c, f1: d1 -> c, f2: d2 -> c)``."""
    objects = [(c, f1, f2) for c in C.objects for f1 in C.hom(d1, c) for f2 in C.hom(d2, c)]
    morphisms = {}
    for o in objects:
        c, f1, f2 = o
        for g in C.out(c):
            t = (C.tgt(g), C.compose(g, f1), C.compose(g, f2))
            morphisms[(g, o, t)] = (o, t)
    return _comma_category(C, objects, morphisms, lambda o: o[0])


def under_category(C: FinCat, d: Obj) -> FinCat:
    """``d | C``: objects are morphisms out of ``d``."""
    objects = list(C.out(d))
    morphisms = {}
    for u in objects:
        for g in C.out(C.tgt(u)):
            t = C.compose(g, u)
            morphisms[(g, u, t)] = (u, t)
    return _comma_category(C, objects, morphisms, C.tgt)


def under_functor(C: FinCat, f: Mor, source: FinCat, target: FinCat) -> FunctorData:
    """For ``f: d -> d'`` the functor ``(d' | C) -> (d | C)`` precomposing with ``f``."""
    return FunctorData(
        source, target,
        {u: C.compose(u, f) for u in source.objects},
        {m: (m[0], C.compose(m[1], f), C.compose(m[2], f)) for m in source.morphisms},
    )


# -- shape predicates -----------------------------------------------------

def connected_components(C: FinCat) -> list[list[Obj]]:
    parent = {a: a for a in C.objects}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for f, (s, t) in C.morphisms.items():
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[rt] = rs
    groups: dict = {}
    for a in C.objects:
        groups.setdefault(find(a), []).append(a)
    return list(groups.values())


def is_connected(C: FinCat) -> bool:
    return len(connected_components(C)) == 1


def has_initial(C: FinCat):
    """The first object with exactly one morphism to every object, else None."""
    for a in C.objects:
        if all(len(C.hom(a, b)) == 1 for b in C.objects):
            return a
    return None


def has_terminal(C: FinCat):
    for a in C.objects:
        if all(len(C.hom(b, a)) == 1 for b in C.objects):
            return a
    return None


def has_binary_coproducts(C: FinCat) -> tuple[bool, dict]:
    """Coproduct cospans for every ordered pair, or the first pair lacking one."""
    witnesses = {}
    for d1, d2 in iproduct(C.objects, repeat=2):
        init = has_initial(comma_over_diagonal(C, d1, d2))
        if init is None:
            return False, {"pair": (d1, d2)}
        witnesses[(d1, d2)] = init
    return True, witnesses


def is_filtered(C: FinCat) -> tuple[bool, dict]:
    if not C.objects:
        return False, {"reason": "empty"}
    for a, b in iproduct(C.objects, repeat=2):
        if not any(C.hom(a, c) and C.hom(b, c) for c in C.objects):
            return False, {"reason": "no cospan", "pair": (a, b)}
    for (a, b), fs in C._hom.items():
        for f in fs:
            for g in fs:
                if f == g:
                    continue
                if not any(C.compose(u, f) == C.compose(u, g) for u in C.out(b)):
                    return False, {"reason": "no coequalizing arrow", "pair": (f, g)}
    return True, {}


def is_final_functor(F: FunctorData) -> tuple[bool, dict]:
    """Every ``L | F`` is non-empty and connected."""
    for L in F.target.objects:
        K = comma_under_functor(F, L)
        n = len(connected_components(K))
        if n != 1:
            return False, {"object": L, "components": n}
    return True, {}
