"""Simplicially enriched algebraic theories presented by generators.

One sort; the objects are the powers ``X_0 .. X_cap``.  ``hom(X_n, X_1)``
is materialized as a truncated simplicial set and ``hom(X_n, X_k)`` is its
k-fold power, handled as tuples.

Terms are nested tuples::

    ('x', i)                     variable i (1-based)
    ('op', name, args)           an operation vertex
    ('cell', name, p, args)      a 1-cell generator carrying a jump label

In a d-simplex every cell node is labelled by a non-constant monotone map
``[d] -> [1]``, recorded as its jump ``p`` in ``1..d`` (the map is
``v |-> [v >= p]``).  A constant label collapses the node to the source
(all zeros) or target (all ones) of its generator.  The hom spaces are the
free closure of the generators, bounded by a weight cap: each operation
node weighs 1 and a cell node weighs the larger of its endpoints.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .simpset import (
    DegenerateRef,
    SimplicialMap,
    TruncatedSSet,
    components,
    constant_map,
    identity_map,
    map_from_vertices,
    pair_ref,
    power,
    power_projections,
    product,
    standard_simplex,
    surjection,
    tuple_map,
    validate,
)
from .verdict import Verdict, aggregate
from .weq import DEFAULT_BUDGET, certify_weq


class TheoryError(ValueError):
    pass


class ResourceLimit(RuntimeError):
    """An enumeration exceeded its configured size budget."""


def var(i: int) -> tuple:
    return ("x", i)


def op(name: str, *args) -> tuple:
    return ("op", name, tuple(args))


def variables(term) -> set:
    if term[0] == "x":
        return {term[1]}
    out = set()
    for a in term[-1]:
        out |= variables(a)
    return out


def occurrences(term) -> list:
    if term[0] == "x":
        return [term[1]]
    return [i for a in term[-1] for i in occurrences(a)]


def substitute(term, args):
    """Replace variable ``i`` by ``args[i - 1]``."""
    kind = term[0]
    if kind == "x":
        return args[term[1] - 1]
    sub = tuple(substitute(a, args) for a in term[-1])
    return term[:-1] + (sub,)


def jumps(term) -> set:
    if term[0] == "x":
        return set()
    out = {term[2]} if term[0] == "cell" else set()
    for a in term[-1]:
        out |= jumps(a)
    return out


def _map_jumps(term, fn):
    if term[0] == "x":
        return term
    args = tuple(_map_jumps(a, fn) for a in term[-1])
    if term[0] == "cell":
        return ("cell", term[1], fn(term[2]), args)
    return ("op", term[1], args)


@dataclass(frozen=True)
class CellGenerator:
    """A 1-cell from ``source`` to ``target`` in ``hom(X_arity, X_1)``."""

    name: str
    arity: int
    source: tuple
    target: tuple


class EnrichedTheory:
    """Free simplicial enrichment of operations and 1-cell generators."""

    def __init__(self, name: str, operations: dict, cells=(), associative=(),
                 arity_cap: int = 4, weight_cap: int = 3, level: int = 2):
        self.name = name
        self.operations = dict(operations)
        self.cell_generators = {c.name: c for c in cells}
        self.associative = frozenset(associative)
        self.arity_cap = arity_cap
        self.weight_cap = weight_cap
        self.level = level
        self.projections: dict = {(n, i): var(i) for n in range(arity_cap + 1)
                                  for i in range(1, n + 1)}
        clash = set(self.operations) & set(self.cell_generators)
        if clash:
            raise TheoryError(f"names used for both operations and cells: {sorted(clash)}")
        for c in self.cell_generators.values():
            for t in (c.source, c.target):
                occ = occurrences(t)
                if len(occ) != len(set(occ)) or not set(occ) <= set(range(1, c.arity + 1)):
                    raise TheoryError(f"cell {c.name!r}: endpoints must use each variable at most once")
                if jumps(t):
                    raise TheoryError(f"cell {c.name!r}: endpoints must be vertices")
        self._cell_weight = {c.name: max(self.weight(c.source), self.weight(c.target))
                             for c in self.cell_generators.values()}
        self.homs = {n: self._build_hom(n) for n in range(arity_cap + 1)}

    def __repr__(self) -> str:
        return f"EnrichedTheory({self.name!r}, arity_cap={self.arity_cap}, weight_cap={self.weight_cap})"

    # -- terms ---------------------------------------------------------
    @property
    def objects(self) -> list[int]:
        return list(range(self.arity_cap + 1))

    def sort(self, n: int) -> tuple:
        return ("X",) * n

    def identity(self, n: int) -> tuple:
        return tuple(var(i) for i in range(1, n + 1))

    def weight(self, term) -> int:
        kind = term[0]
        if kind == "x":
            return 0
        w = sum(self.weight(a) for a in term[-1])
        if kind == "op":
            return w + 1
        return w + self._cell_weight[term[1]]

    def normalize(self, term):
        """Right-nest associative operations."""
        if term[0] == "x" or not self.associative:
            return term
        args = tuple(self.normalize(a) for a in term[-1])
        if term[0] == "op" and term[1] in self.associative:
            a, b = args
            if a[0] == "op" and a[1] == term[1]:
                inner = self.normalize(("op", term[1], (a[2][1], b)))
                return ("op", term[1], (a[2][0], inner))
        return term[:-1] + (args,)

    def _expand_constants(self, term, d: int):
        """Collapse cell nodes whose label is constant in dimension ``d``."""
        if term[0] == "x":
            return term
        args = tuple(self._expand_constants(a, d) for a in term[-1])
        if term[0] == "cell":
            p = term[2]
            gen = self.cell_generators[term[1]]
            if p <= 0:
                return self.normalize(substitute(gen.target, args))
            if p > d:
                return self.normalize(substitute(gen.source, args))
            return ("cell", term[1], p, args)
        return self.normalize(("op", term[1], args))

    def normal_ref(self, term, d: int) -> DegenerateRef:
        """Eilenberg-Zilber form of a labelled term living in dimension ``d``."""
        term = self._expand_constants(term, d)
        used = sorted(jumps(term))
        rank = {p: r + 1 for r, p in enumerate(used)}
        base = _map_jumps(term, rank.__getitem__)
        degs = tuple(q - 1 for q in range(d, 0, -1) if q not in rank)
        return DegenerateRef(base, degs)

    def expand(self, ref: DegenerateRef, d: int):
        """Labelled term of a (possibly degenerate) d-simplex."""
        if not ref.degeneracies:
            return ref.base
        sigma = surjection(ref.degeneracies, d)
        first = {}
        for v, w in enumerate(sigma):
            first.setdefault(w, v)
        return _map_jumps(ref.base, first.__getitem__)

    # -- hom spaces ------------------------------------------------------
    def _terms(self, n: int) -> list[list]:
        """Terms over ``n`` variables by exact weight, cells carrying a placeholder label."""
        cap = self.weight_cap
        by_weight: list[list] = [[] for _ in range(cap + 1)]
        by_weight[0] = [var(i) for i in range(1, n + 1)]
        seen = set(by_weight[0])

        def arg_tuples(arity, budget):
            if arity == 0:
                if budget == 0:
                    yield ()
                return
            for w in range(budget + 1):
                for t in by_weight[w]:
                    for rest in arg_tuples(arity - 1, budget - w):
                        yield (t,) + rest

        for w in range(1, cap + 1):
            layer = []
            for name, arity in self.operations.items():
                for args in arg_tuples(arity, w - 1):
                    t = self.normalize(("op", name, args))
                    if t not in seen:
                        seen.add(t)
                        layer.append(t)
            for name, gen in self.cell_generators.items():
                cw = self._cell_weight[name]
                if cw > w:
                    continue
                for args in arg_tuples(gen.arity, w - cw):
                    t = ("cell", name, 0, args)
                    if t not in seen:
                        seen.add(t)
                        layer.append(t)
            by_weight[w] = layer
        return by_weight

    def _build_hom(self, n: int) -> TruncatedSSet:
        K = self.level
        cells: list[list] = [[] for _ in range(K + 1)]
        for layer in self._terms(n):
            for t in layer:
                slots = _count_cells(t)
                if slots == 0:
                    cells[0].append(t)
                    continue
                for k in range(1, min(slots, K) + 1):
                    for labels in iproduct(range(1, k + 1), repeat=slots):
                        if len(set(labels)) == k:
                            cells[k].append(_label(t, labels))
        faces = {}
        for k in range(1, K + 1):
            for t in cells[k]:
                faces[t] = tuple(
                    self.normal_ref(_map_jumps(t, lambda p, i=i: p - 1 if i < p else p), k - 1)
                    for i in range(k + 1)
                )
        return TruncatedSSet(K, cells, faces)

    def hom(self, n: int) -> TruncatedSSet:
        """``hom(X_n, X_1)``."""
        return self.homs[n]

    def face(self, n: int, ref: DegenerateRef, i: int) -> DegenerateRef:
        return self.homs[n].face(ref, i)

    # -- composition -------------------------------------------------------
    def compose(self, t: DegenerateRef, s: tuple, d: int) -> DegenerateRef | None:
        """``t o (s_1, .., s_k)`` for d-simplices; ``None`` past the weight cap."""
        args = tuple(self.expand(r, d) for r in s)
        term = self.normalize(substitute(self.expand(t, d), args))
        if self.weight(term) > self.weight_cap:
            return None
        return self.normal_ref(term, d)

    def compose_tuple(self, g: tuple, f: tuple, d: int) -> tuple | None:
        out = []
        for t in g:
            r = self.compose(t, f, d)
            if r is None:
                return None
            out.append(r)
        return tuple(out)


def _count_cells(term) -> int:
    if term[0] == "x":
        return 0
    return (term[0] == "cell") + sum(_count_cells(a) for a in term[-1])


def _label(term, labels):
    it = iter(labels)

    def go(t):
        if t[0] == "x":
            return t
        if t[0] == "cell":
            p = next(it)
            return ("cell", t[1], p, tuple(go(a) for a in t[-1]))
        return ("op", t[1], tuple(go(a) for a in t[-1]))

    return go(term)


# -- standard theories -----------------------------------------------------

def assoc_endpoints() -> tuple:
    x1, x2, x3 = var(1), var(2), var(3)
    return op("m", op("m", x1, x2), x3), op("m", x1, op("m", x2, x3))


def build_T0(arity_cap: int = 4, weight_cap: int = 3, level: int = 2) -> EnrichedTheory:
    """One binary operation, discrete homs."""
    return EnrichedTheory("T0", {"m": 2}, arity_cap=arity_cap, weight_cap=weight_cap, level=level)


def build_T1(arity_cap: int = 4, weight_cap: int = 3, level: int = 2) -> EnrichedTheory:
    """One binary operation with an associativity 1-cell ``h``."""
    src, tgt = assoc_endpoints()
    h = CellGenerator("h", 3, src, tgt)
    return EnrichedTheory("T1", {"m": 2}, [h], arity_cap=arity_cap, weight_cap=weight_cap,
                          level=level)


def build_T2(arity_cap: int = 4, weight_cap: int = 3, level: int = 2) -> EnrichedTheory:
    """One strictly associative binary operation (words), discrete homs."""
    return EnrichedTheory("T2", {"m": 2}, associative=["m"], arity_cap=arity_cap,
                          weight_cap=weight_cap, level=level)


def trivial_theory(level: int = 2) -> EnrichedTheory:
    return EnrichedTheory("trivial", {}, arity_cap=1, weight_cap=0, level=level)


def validate_theory(T: EnrichedTheory, sample_arity: int = 3) -> list[str]:
    """Structural checks, unit and associativity laws, and projections.

    Unit laws and the face compatibility of composition are checked on every
    cell of ``hom(X_n, X_1)`` for ``n <= sample_arity``.  Associativity is
    checked on every cell ``t`` there against all pairs of projection or
    generator tuples whose composites stay under the weight cap.
    """
    report = []
    for n, H in T.homs.items():
        report += [f"hom(X{n}, X1): {msg}" for msg in validate(H)]
    for (n, i), p in T.projections.items():
        if not (1 <= i <= n) or p not in T.homs[n] or T.homs[n].dim(p) != 0:
            report.append(f"projection p{i} of X{n} is not a vertex of hom(X{n}, X1)")
    for n in T.objects:
        for i in range(1, n + 1):
            if (n, i) not in T.projections:
                report.append(f"missing projection p{i} of X{n}")
    if report:
        return report
    top = min(sample_arity, T.arity_cap)
    basics = {n: _basic_vertices(T, n) for n in T.objects}
    for n in range(top + 1):
        H = T.homs[n]
        for d, layer in enumerate(H.cells):
            for x in layer:
                t = DegenerateRef(x)
                ident = tuple(_degen(DegenerateRef(T.projections[(n, i)]), d)
                              for i in range(1, n + 1))
                if T.compose(t, ident, d) != t:
                    report.append(f"right unit fails on {x!r}")
                for i in range(1, n + 1):
                    s = tuple(_degen(DegenerateRef(v), d) for v in _tuple_of(basics[n], n, i))
                    got = T.compose(_degen(DegenerateRef(T.projections[(n, i)]), d), s, d)
                    if got != s[i - 1]:
                        report.append(f"projection p{i} does not extract component {i}")
                for i in range(d + 1) if d else ():
                    ft = H.face(t, i)
                    ident_f = tuple(_degen(DegenerateRef(T.projections[(n, j)]), d - 1)
                                    for j in range(1, n + 1))
                    if T.compose(ft, ident_f, d - 1) != ft:
                        report.append(f"face {i} of {x!r} breaks the unit law")
                for m in range(top + 1):
                    for s in _tuples(basics[m], n, limit=16):
                        sd = tuple(_degen(DegenerateRef(v), d) for v in s)
                        ts = T.compose(t, sd, d)
                        if ts is None:
                            continue
                        if d:
                            for i in range(d + 1):
                                lhs = T.homs[m].face(ts, i)
                                rhs = T.compose(H.face(t, i),
                                                tuple(_degen(DegenerateRef(v), d - 1) for v in s),
                                                d - 1)
                                if lhs != rhs:
                                    report.append(f"composition does not commute with d{i} at {x!r}")
                        for r in _tuples(basics[min(m, 2)], m, limit=4):
                            rd = tuple(_degen(DegenerateRef(v), d) for v in r)
                            sr = T.compose_tuple(sd, rd, d)
                            a = T.compose(ts, rd, d)
                            if sr is None or a is None:
                                continue
                            if a != T.compose(t, sr, d):
                                report.append(f"associativity fails at {x!r}")
    return report


def _degen(ref: DegenerateRef, d: int) -> DegenerateRef:
    """A vertex reference degenerated up to dimension ``d``."""
    return DegenerateRef(ref.base, tuple(range(d - 1, -1, -1))) if d else ref


def _basic_vertices(T: EnrichedTheory, n: int) -> list:
    """Projections plus each operation applied to leading variables."""
    out = [var(i) for i in range(1, n + 1)]
    for name, arity in T.operations.items():
        if arity <= n:
            out.append(T.normalize(("op", name, tuple(var(i) for i in range(1, arity + 1)))))
    return out


def _tuples(pool: list, k: int, limit: int = 64):
    """Deterministic bounded sample of k-tuples from ``pool``."""
    if k == 0:
        return [()]
    out = []
    for i, t in enumerate(iproduct(pool, repeat=k)):
        if i >= limit:
            break
        out.append(t)
    return out


def _tuple_of(pool: list, n: int, i: int) -> tuple:
    rot = pool[i % len(pool):] + pool[:i % len(pool)] if pool else []
    return tuple(rot[j % len(rot)] for j in range(n))


def vertex_classes(T: EnrichedTheory, n: int) -> list[list]:
    """Connected components of ``hom(X_n, X_1)``: the vertex-level quotient by the cells."""
    H = T.homs[n]
    if H.level < 1:
        return [[v] for v in H.vertices()]
    return components(H)


# -- mapping spaces ---------------------------------------------------------

def _all_refs(Y: TruncatedSSet, k: int) -> list[DegenerateRef]:
    out = []
    for e in range(min(k, Y.level) + 1):
        for x in Y.cells[e]:
            for degs in _words(e, k):
                out.append(DegenerateRef(x, degs))
    return out


def _words(e: int, k: int) -> list[tuple]:
    from itertools import combinations

    return [tuple(sorted(c, reverse=True)) for c in combinations(range(k), k - e)]


def enumerate_maps(X: TruncatedSSet, Y: TruncatedSSet, budget: int = 100_000):
    """All simplicial maps ``X -> Y``, by backtracking over cells in order."""
    top = min(X.level, Y.level)
    order = [x for k in range(X.level + 1) for x in X.cells[k]]
    candidates = {k: _all_refs(Y, k) for k in range(X.level + 1)}
    found = 0
    assignment: dict = {}

    def consistent(x, img) -> bool:
        k = X.dim(x)
        if k == 0 or k > top:
            return True
        for i, f in enumerate(X.faces[x]):
            fi = f.base
            want = assignment[fi]
            if f.degeneracies:
                want = Y.degenerate(want, surjection(f.degeneracies, k - 1))
            if Y.face(img, i) != want:
                return False
        return True

    def go(pos):
        nonlocal found
        if pos == len(order):
            found += 1
            if found > budget:
                raise ResourceLimit(f"more than {budget} maps enumerated")
            yield SimplicialMap(X, Y, dict(assignment))
            return
        x = order[pos]
        for img in candidates[X.dim(x)]:
            if consistent(x, img):
                assignment[x] = img
                yield from go(pos + 1)
                del assignment[x]

    yield from go(0)


def operator_map(theta: tuple, k: int, level: int) -> SimplicialMap:
    """``Delta_e -> Delta_k`` induced by a monotone ``theta: [e] -> [k]``."""
    e = len(theta) - 1
    return map_from_vertices(standard_simplex(e, level), standard_simplex(k, level),
                             lambda v: (theta[v[0]],))


def precompose(phi: SimplicialMap, X: TruncatedSSet, theta: tuple, k: int,
               cache: dict | None = None) -> SimplicialMap:
    """``phi o (id x theta)`` for ``phi: X x Delta_k -> Y``."""
    e = len(theta) - 1
    key = (e, k, theta)
    if cache is not None and key in cache:
        inner = cache[key]
    else:
        P = product(X, standard_simplex(e, X.level))
        inner = _id_times(X, operator_map(theta, k, X.level), P, phi.source)
        if cache is not None:
            cache[key] = inner
    return phi.compose(inner)


def _id_times(X, g, source, target) -> SimplicialMap:
    assignment = {}
    for c in source.all_cells():
        x, jx, y, jy = c
        assignment[c] = pair_ref(target.left, target.right, DegenerateRef(x, jx),
                                 g(DegenerateRef(y, jy)))
    return SimplicialMap(source, target, assignment)


def mapping_space(X: TruncatedSSet, Y: TruncatedSSet, K: int, budget: int = 20_000
                  ) -> TruncatedSSet:
    """``Map(X, Y)`` truncated at ``K``: k-cells are maps ``X x Delta_k -> Y``.

    Raises :class:`ResourceLimit` when more than ``budget`` maps would be
    enumerated in total.
    """
    cells: list[list] = []
    faces = {}
    by_key: dict = {}
    total = 0
    cache: dict = {}
    for k in range(K + 1):
        layer = []
        P = product(X, standard_simplex(k, X.level))
        order = list(P.all_cells())
        for phi in enumerate_maps(P, Y, budget - total):
            total += 1
            key = tuple(phi.assignment[c] for c in order)
            if k and _degenerate_direction(phi, X, k, cache) is not None:
                continue
            cid = (k, key)
            by_key[cid] = phi
            layer.append(cid)
        cells.append(layer)
        if k:
            for cid in layer:
                phi = by_key[cid]
                faces[cid] = tuple(
                    _normal_cell(precompose(phi, X, _coface(k, i), k, cache), X, k - 1, cache)
                    for i in range(k + 1)
                )
    return TruncatedSSet(K, cells, faces)


def restrict_to_vertex(phi: SimplicialMap, X: TruncatedSSet, v: int) -> SimplicialMap:
    """``x |-> phi(x, v)`` for ``phi: X x Delta_k -> Y``."""
    P = phi.source
    assignment = {}
    for x in X.all_cells():
        d = X.dim(x)
        point = DegenerateRef((v,), tuple(range(d - 1, -1, -1)))
        assignment[x] = phi(P.pair(DegenerateRef(x), point))
    return SimplicialMap(X, phi.target, assignment)


def _coface(k: int, i: int) -> tuple:
    return tuple(v for v in range(k + 1) if v != i)


def _codegeneracy(k: int, j: int) -> tuple:
    """``sigma_j: [k] -> [k - 1]``."""
    return tuple(v if v <= j else v - 1 for v in range(k + 1))


def _degenerate_direction(phi, X, k, cache) -> int | None:
    for j in range(k):
        face = precompose(phi, X, _coface(k, j), k, cache)
        back = precompose(face, X, _codegeneracy(k, j), k - 1, cache)
        if back.equals(phi):
            return j
    return None


def _normal_cell(phi, X, k, cache) -> DegenerateRef:
    """Eilenberg-Zilber form of a map ``X x Delta_k -> Y`` as a mapping-space simplex."""
    degs = []
    for j in range(k):
        face = precompose(phi, X, _coface(k, j), k, cache)
        if precompose(face, X, _codegeneracy(k, j), k - 1, cache).equals(phi):
            degs.append(j)
    keep = tuple(v for v in range(k + 1) if v - 1 not in degs)
    base = precompose(phi, X, keep, k, cache) if degs else phi
    order = list(base.source.all_cells())
    return DegenerateRef((len(keep) - 1, tuple(base.assignment[c] for c in order)),
                         tuple(sorted(degs, reverse=True)))


# -- algebras -----------------------------------------------------------------

@dataclass
class AlgebraData:
    """A functor from a theory to spaces, given on generating morphisms.

    ``actions`` maps ``(n, terms)`` to a simplicial map.  ``terms`` is a tuple
    of terms in ``hom(X_n, X_1)`` naming a morphism ``X_n -> X_k``.  Vertex
    morphisms act by maps ``carrier(n) -> carrier(k)``; a 1-cell acts by a
    map ``carrier(n) x Delta_1 -> carrier(k)``, an edge of the mapping space.
    """

    theory: EnrichedTheory
    carriers: dict
    actions: dict = field(default_factory=dict)

    def dimension_of(self, key) -> int:
        n, terms = key
        return max((len(jumps(t)) for t in terms), default=0)

    def evaluate(self, n: int, terms: tuple) -> SimplicialMap | None:
        """Action of a vertex morphism, derived from the given actions where possible."""
        key = (n, tuple(terms))
        if key in self.actions:
            return self.actions[key]
        if len(terms) != 1:
            return None
        t = terms[0]
        if t[0] != "op":
            return None
        args = t[2]
        arity = len(args)
        gen = self.actions.get((arity, (("op", t[1], tuple(var(i) for i in range(1, arity + 1))),)))
        inner = self.evaluate(n, args)
        if gen is None or inner is None:
            return None
        return gen.compose(inner)

    def projection_maps(self, n: int) -> list[SimplicialMap] | None:
        out = []
        for i in range(1, n + 1):
            m = self.actions.get((n, (var(i),)))
            if m is None:
                return None
            out.append(m)
        return out

    def validate(self) -> list[str]:
        T = self.theory
        report = []
        for n in T.objects:
            if n not in self.carriers:
                report.append(f"no carrier for X{n}")
        if report:
            return report
        for n, X in self.carriers.items():
            report += [f"carrier X{n}: {msg}" for msg in validate(X)]
        for key, m in self.actions.items():
            n, terms = key
            d = self.dimension_of(key)
            k = len(terms)
            for t in terms:
                ref = T.normal_ref(t, d)
                if ref.base not in T.homs[n]:
                    report.append(f"action key {key!r} is not a morphism of the theory")
            src = self.carriers[n] if d == 0 else None
            if d == 0 and not (m.source.same_as(src) and m.target.same_as(self.carriers[k])):
                report.append(f"action of {key!r} has the wrong source or target")
                continue
            if d == 1 and not m.target.same_as(self.carriers[k]):
                report.append(f"action of {key!r} has the wrong target")
                continue
            if d > 1:
                report.append(f"action of {key!r}: only vertices and 1-cells may be specified")
                continue
            report += [f"action of {key!r}: {msg}" for msg in m.validate()]
        if report:
            return report
        # identities
        for n in T.objects:
            ident = self.actions.get((n, T.identity(n)))
            if ident is not None and not ident.equals(identity_map(self.carriers[n])):
                report.append(f"identity of X{n} does not act as the identity")
        # composition squares among vertex actions
        vertex_keys = [k for k in self.actions if self.dimension_of(k) == 0]
        for f in vertex_keys:
            n, fs = f
            for g in vertex_keys:
                k, gs = g
                if k != len(fs):
                    continue
                comp = T.compose_tuple(tuple(DegenerateRef(t) for t in gs),
                                       tuple(DegenerateRef(t) for t in fs), 0)
                if comp is None:
                    continue
                terms = tuple(r.base for r in comp)
                expected = self.evaluate(n, terms)
                if expected is None:
                    continue
                if not self.actions[g].compose(self.actions[f]).equals(expected):
                    report.append(f"composite of {g!r} and {f!r} does not act as {terms!r}")
        # endpoints of cell actions
        for key, m in self.actions.items():
            if self.dimension_of(key) != 1:
                continue
            for side, endpoint in self._endpoint_maps(key, m).items():
                n, terms = key
                faced = tuple(T.normal_ref(_map_jumps(t, lambda p, s=side: p - 1 if s < p else p), 0).base
                              for t in terms)
                expected = self.evaluate(n, faced)
                if expected is not None and not endpoint.equals(expected):
                    report.append(f"d{side} of the action of {key!r} is not the action of {faced!r}")
        return report

    def _endpoint_maps(self, key, m) -> dict:
        """``{i: d_i}`` of a cell action, as maps out of the carrier itself."""
        n, _ = key
        return {i: restrict_to_vertex(m, self.carriers[n], 1 - i) for i in (0, 1)}

    def witness(self, cell_name: str) -> dict:
        """Check that the action of a cell generator joins the actions of its endpoints."""
        T = self.theory
        gen = T.cell_generators[cell_name]
        key = (gen.arity, (("cell", cell_name, 1, tuple(var(i) for i in range(1, gen.arity + 1))),))
        m = self.actions.get(key)
        if m is None:
            return {"cell": cell_name, "present": False}
        ends = self._endpoint_maps(key, m)
        src = self.evaluate(gen.arity, (gen.source,))
        tgt = self.evaluate(gen.arity, (gen.target,))
        return {
            "cell": cell_name,
            "present": True,
            "source_matches": src is not None and ends[1].equals(src),
            "target_matches": tgt is not None and ends[0].equals(tgt),
            "nondegenerate": not ends[0].equals(ends[1]),
        }


def comparison_map(A: AlgebraData, n: int) -> SimplicialMap:
    """``A(X_n) -> A(X_1)^n`` built from the actions of the projections."""
    X1 = A.carriers[1]
    target = power(X1, n)
    if n == 0:
        return constant_map(A.carriers[0], target, target.vertices()[0])
    projs = A.projection_maps(n)
    if projs is None:
        raise TheoryError(f"the projections of X{n} have no specified action")
    return tuple_map(projs, target)


def check_homotopy_algebra(A: AlgebraData, n: int = 2, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Certify every product comparison ``A(X_k) -> A(X_1)^k`` through level ``n``."""
    bad = A.validate()
    if bad:
        return Verdict.refuted(n, reason="algebra does not validate", violations=bad)
    verdicts = []
    per_object = []
    for k in A.theory.objects:
        v = certify_weq(comparison_map(A, k), n, budget)
        verdicts.append(v)
        per_object.append({"object": f"X{k}", **v.to_dict()})
    evidence = {"comparisons": per_object}
    witnesses = [A.witness(c) for c in A.theory.cell_generators]
    if witnesses:
        evidence["witnesses"] = witnesses
    return aggregate(verdicts, n, **evidence)


# -- sample algebras ----------------------------------------------------------

def _power_coords(P: TruncatedSSet, n: int):
    projs = power_projections(P, n) if n else []

    def coords(v):
        return tuple(p.assignment[v].base[0] for p in projs)

    return coords


def _power_vertex(P: TruncatedSSet, n: int, coords) -> dict:
    f = _power_coords(P, n)
    return {f(v): v for v in P.vertices()}


def strict_power_algebra(T: EnrichedTheory, base: TruncatedSSet, mult, extra=()) -> AlgebraData:
    """Carrier ``base^n`` at ``X_n`` with strict projections.

    ``base`` must have simplices determined by their vertices, and
    ``mult(a, b)`` must be monotone in the vertex order of ``base``.
    ``extra`` lists additional vertex morphisms ``(n, terms)`` to act on.
    """
    carriers = {n: power(base, n) for n in T.objects}
    coords = {n: _power_coords(carriers[n], n) for n in T.objects}
    lookup = {n: _power_vertex(carriers[n], n, None) for n in T.objects}
    actions = {}

    def eval_term(t, xs):
        if t[0] == "x":
            return xs[t[1] - 1]
        a, b = (eval_term(s, xs) for s in t[2])
        return mult(a, b)

    def vertex_action(n, terms):
        k = len(terms)

        def fn(v):
            xs = coords[n](v)
            ys = tuple(eval_term(t, xs) for t in terms)
            if k == 1:
                return (ys[0],)
            return lookup[k][ys]

        return map_from_vertices(carriers[n], carriers[k], fn)

    for n in T.objects:
        for i, p in enumerate(power_projections(carriers[n], n) if n else (), start=1):
            actions[(n, (var(i),))] = p
    for name, arity in T.operations.items():
        key = (arity, (op(name, *(var(i) for i in range(1, arity + 1))),))
        actions[key] = vertex_action(*key)
    for key in extra:
        actions[key] = vertex_action(*key)
    A = AlgebraData(T, carriers, actions)
    A._eval_term = eval_term  # used by cell builders below
    A._coords = coords
    return A


def strict_cube_algebra(T: EnrichedTheory | None = None) -> AlgebraData:
    """A homotopy-associative but not associative algebra on ``Delta_2``.

    The carrier at ``X_n`` is the strict n-fold cube of ``Delta_2`` and
    ``m(a, b) = min(2, b + 1)``.  Here ``m(m(a, b), c) <= m(a, m(b, c))``
    pointwise, so the straight-line homotopy over ``Delta_1`` between them is
    a simplicial map; it is the action of ``h``.
    """
    if T is None:
        T = build_T1()
    S = standard_simplex(2, 3)
    x1, x2, x3 = var(1), var(2), var(3)
    src, tgt = assoc_endpoints()
    extra = [
        (3, (op("m", x1, x2), x3)),
        (3, (x1, op("m", x2, x3))),
    ]
    A = strict_power_algebra(T, S, lambda a, b: min(2, b + 1), extra)
    if "h" in T.cell_generators:
        X3 = A.carriers[3]
        P = product(X3, standard_simplex(1, X3.level))
        coords3 = A._coords[3]

        def fn(v):
            x, _, t, _ = v
            xs = coords3(x)
            t = t[0]
            return (A._eval_term(src if t == 0 else tgt, xs),)

        cell = ("cell", "h", 1, (x1, x2, x3))
        A.actions[(3, (cell,))] = map_from_vertices(P, A.carriers[1], fn)
    return A


def point_algebra(T: EnrichedTheory) -> AlgebraData:
    """The strict algebra on ``Delta_0``."""
    A = strict_power_algebra(T, standard_simplex(0, 3), lambda a, b: 0)
    for name, gen in T.cell_generators.items():
        X = A.carriers[gen.arity]
        P = product(X, standard_simplex(1, X.level))
        cell = ("cell", name, 1, tuple(var(i) for i in range(1, gen.arity + 1)))
        A.actions[(gen.arity, (cell,))] = constant_map(P, A.carriers[1], (0,))
    return A


def mismatch_algebra(T: EnrichedTheory | None = None) -> AlgebraData:
    """Carrier of ``X_1`` two points while every other carrier is a point."""
    if T is None:
        T = build_T0()
    from .simpset import discrete_sset

    pt = standard_simplex(0, 3)
    two = discrete_sset(["a", "b"], 3)
    carriers = {n: (two if n == 1 else pt) for n in T.objects}
    actions = {}
    for n in T.objects:
        for i in range(1, n + 1):
            if n == 1:
                actions[(n, (var(i),))] = identity_map(two)
            else:
                actions[(n, (var(i),))] = constant_map(pt, two, "a")
    for name, arity in T.operations.items():
        key = (arity, (op(name, *(var(i) for i in range(1, arity + 1))),))
        actions[key] = constant_map(carriers[arity], two, "a")
    return AlgebraData(T, carriers, actions)
