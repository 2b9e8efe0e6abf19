"""Products, coproducts and quotients of truncated simplicial sets."""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .core import (
    DegenerateRef,
    SimplicialError,
    SimplicialMap,
    TruncatedSSet,
    degeneracies_of,
    surjection,
)


class ProductSSet(TruncatedSSet):
    """``X x Y``; a cell id is ``(x, J, y, K)`` meaning the pair ``(s_J x, s_K y)``.

    Dimensions, membership and faces are computed from the factors, so maps
    into a product can be built without listing its cells.  The cell table
    is enumerated on first use of ``cells``/``faces``.
    """

    __slots__ = ("left", "right", "_table")

    def __init__(self, X: TruncatedSSet, Y: TruncatedSSet, level: int | None = None):
        self.left = X
        self.right = Y
        self.level = min(X.level, Y.level) if level is None else level
        self._table = None

    def _build(self):
        if self._table is None:
            X, Y = self.left, self.right
            cells: list[list] = [[] for _ in range(self.level + 1)]
            faces = {}
            for k, a, b in product_cells(X, Y, self.level):
                cid = (a.base, a.degeneracies, b.base, b.degeneracies)
                cells[k].append(cid)
                if k:
                    faces[cid] = tuple(
                        pair_ref(X, Y, X.face(a, i), Y.face(b, i)) for i in range(k + 1)
                    )
            dims, index = {}, {}
            for k, layer in enumerate(cells):
                for i, x in enumerate(layer):
                    dims[x] = k
                    index[x] = i
            self._table = (tuple(tuple(c) for c in cells), faces, dims, index)
        return self._table

    cells = property(lambda self: self._build()[0])
    faces = property(lambda self: self._build()[1])
    _dim = property(lambda self: self._build()[2])
    _index = property(lambda self: self._build()[3])

    @property
    def is_materialized(self) -> bool:
        return self._table is not None

    def dim(self, x) -> int:
        return self.left.dim(x[0]) + len(x[1])

    def ref_dim(self, ref: DegenerateRef) -> int:
        return self.dim(ref.base) + len(ref.degeneracies)

    def __contains__(self, x) -> bool:
        try:
            a, J, b, K = x
        except (TypeError, ValueError):
            return False
        if a not in self.left or b not in self.right:
            return False
        k = self.left.dim(a) + len(J)
        if k != self.right.dim(b) + len(K) or k > self.level or set(J) & set(K):
            return False
        return all(_normal_word(w, k) for w in (J, K))

    def is_empty(self) -> bool:
        return self.left.is_empty() or self.right.is_empty()

    def counts(self) -> tuple[int, ...]:
        if self._table is not None:
            return super().counts()
        # (J, K) disjoint with |J| = k - p, |K| = k - q: C(k, p) * C(p, k - q) choices
        X, Y = self.left, self.right
        out = []
        for k in range(self.level + 1):
            total = 0
            for p in range(min(k, X.level) + 1):
                for q in range(k - p, min(k, Y.level) + 1):
                    total += len(X.cells[p]) * len(Y.cells[q]) * comb(k, p) * comb(p, k - q)
            out.append(total)
        return tuple(out)

    def size(self) -> int:
        return sum(self.counts())

    def face(self, ref: DegenerateRef, i: int) -> DegenerateRef:
        if self._table is not None:
            return super().face(ref, i)
        m = self.ref_dim(ref)
        if not 0 <= i <= m or m == 0:
            raise SimplicialError(f"face d_{i} undefined in dimension {m}")
        a, b = self.split(ref)
        return pair_ref(self.left, self.right, self.left.face(a, i), self.right.face(b, i))

    def pair(self, a: DegenerateRef, b: DegenerateRef) -> DegenerateRef:
        """The simplex ``(a, b)`` of the product in normal form."""
        return pair_ref(self.left, self.right, a, b)

    def split(self, ref: DegenerateRef) -> tuple[DegenerateRef, DegenerateRef]:
        """Inverse of :meth:`pair`."""
        x, jx, y, jy = ref.base
        a, b = DegenerateRef(x, jx), DegenerateRef(y, jy)
        if not ref.degeneracies:
            return a, b
        s = surjection(ref.degeneracies, self.ref_dim(ref))
        return self.left.degenerate(a, s), self.right.degenerate(b, s)


def _normal_word(word, k: int) -> bool:
    return all(0 <= j < k for j in word) and all(x > y for x, y in zip(word, word[1:]))


def pair_ref(X: TruncatedSSet, Y: TruncatedSSet, a: DegenerateRef, b: DegenerateRef) -> DegenerateRef:
    m = X.ref_dim(a)
    if Y.ref_dim(b) != m:
        raise SimplicialError("paired simplices must have equal dimension")
    sa = surjection(a.degeneracies, m)
    sb = surjection(b.degeneracies, m)
    common = [v for v in range(m) if sa[v] == sa[v + 1] and sb[v] == sb[v + 1]]
    if not common:
        return DegenerateRef((a.base, a.degeneracies, b.base, b.degeneracies))
    collapse = surjection(sorted(common, reverse=True), m)
    first = {}
    for v, w in enumerate(collapse):
        first.setdefault(w, v)
    ja = degeneracies_of([sa[first[w]] for w in range(len(first))])
    jb = degeneracies_of([sb[first[w]] for w in range(len(first))])
    return DegenerateRef((a.base, ja, b.base, jb), tuple(sorted(common, reverse=True)))


def _degeneracy_words(p: int, k: int) -> list[tuple[int, ...]]:
    return [tuple(sorted(c, reverse=True)) for c in combinations(range(k), k - p)]


def product_cells(X: TruncatedSSet, Y: TruncatedSSet, level: int | None = None
                  ) -> Iterator[tuple[int, DegenerateRef, DegenerateRef]]:
    """Non-degenerate cells of ``X x Y`` as ``(dim, a, b)``, in a fixed order."""
    top = min(X.level, Y.level) if level is None else level
    for k in range(top + 1):
        for p in range(k + 1):
            xs = X.cells[p] if p <= X.level else ()
            if not xs:
                continue
            words_p = _degeneracy_words(p, k)
            for q in range(k + 1):
                ys = Y.cells[q] if q <= Y.level else ()
                if not ys:
                    continue
                words_q = _degeneracy_words(q, k)
                pairs = [(J, K) for J in words_p for K in words_q if not set(J) & set(K)]
                if not pairs:
                    continue
                for x in xs:
                    for y in ys:
                        for J, K in pairs:
                            yield k, DegenerateRef(x, J), DegenerateRef(y, K)


def product(X: TruncatedSSet, Y: TruncatedSSet) -> ProductSSet:
    """Levelwise product, truncated at the smaller level."""
    return ProductSSet(X, Y)


def projection(P: ProductSSet, side: int) -> SimplicialMap:
    """Projection of a binary product onto its left (0) or right (1) factor."""
    target = P.left if side == 0 else P.right
    assignment = {}
    for c in P.all_cells():
        x, jx, y, jy = c
        assignment[c] = DegenerateRef(x, jx) if side == 0 else DegenerateRef(y, jy)
    return SimplicialMap(P, target, assignment)


def pair_maps(f: SimplicialMap, g: SimplicialMap, target: ProductSSet | None = None) -> SimplicialMap:
    """``(f, g): Z -> X x Y``."""
    if target is None:
        target = product(f.target, g.target)
    assignment = {
        z: pair_ref(target.left, target.right, f.assignment[z], g.assignment[z])
        for z in f.source.all_cells()
    }
    return SimplicialMap(f.source, target, assignment)


def product_map(f: SimplicialMap, g: SimplicialMap,
                source: ProductSSet | None = None,
                target: ProductSSet | None = None) -> SimplicialMap:
    """``f x g: X x Y -> X' x Y'``."""
    source = source if source is not None else product(f.source, g.source)
    target = target if target is not None else product(f.target, g.target)
    assignment = {}
    for c in source.all_cells():
        x, jx, y, jy = c
        assignment[c] = pair_ref(target.left, target.right,
                                 f(DegenerateRef(x, jx)), g(DegenerateRef(y, jy)))
    return SimplicialMap(source, target, assignment)


def power(X: TruncatedSSet, n: int) -> TruncatedSSet:
    """Left-nested ``X^n``; ``X^0`` is a point and ``X^1`` is ``X`` itself."""
    from .core import standard_simplex

    if n == 0:
        return standard_simplex(0, X.level)
    out = X
    for _ in range(n - 1):
        out = product(out, X)
    return out


def power_projections(P: TruncatedSSet, n: int) -> list[SimplicialMap]:
    """The ``n`` projections of a :func:`power` onto its base factor."""
    if n == 1:
        from .core import identity_map

        return [identity_map(P)]
    inner = power_projections(P.left, n - 1)
    left = projection(P, 0)
    return [p.compose(left) for p in inner] + [projection(P, 1)]


def tuple_map(maps: Sequence[SimplicialMap], target: TruncatedSSet) -> SimplicialMap:
    """Pair ``n`` maps into a :func:`power` built from their common target."""
    if len(maps) == 1:
        return maps[0]
    head = tuple_map(maps[:-1], target.left)
    return pair_maps(head, maps[-1], target)


class CoproductSSet(TruncatedSSet):
    """Disjoint union; a cell id is ``(tag, original id)``."""

    __slots__ = ("summands",)

    def inclusion(self, tag) -> SimplicialMap:
        X = self.summands[tag]
        return SimplicialMap(
            X, self,
            {x: DegenerateRef((tag, x)) for x in X.all_cells()},
        )


def coproduct_of(summands: Mapping[Hashable, TruncatedSSet], level: int | None = None) -> CoproductSSet:
    tags = list(summands)
    if level is None:
        level = min((summands[t].level for t in tags), default=0)
    cells: list[list] = [[] for _ in range(level + 1)]
    faces = {}
    for t in tags:
        X = summands[t]
        for k in range(min(level, X.level) + 1):
            for x in X.cells[k]:
                cells[k].append((t, x))
                if k:
                    faces[(t, x)] = tuple(
                        DegenerateRef((t, f.base), f.degeneracies) for f in X.faces[x]
                    )
    C = CoproductSSet(level, cells, faces)
    C.summands = dict(summands)
    return C


def coproduct(X: TruncatedSSet, Y: TruncatedSSet) -> CoproductSSet:
    return coproduct_of({0: X, 1: Y})


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, a):
        self.parent.setdefault(a, a)

    def find(self, a):
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _as_ref(r) -> DegenerateRef:
    return r if isinstance(r, DegenerateRef) else DegenerateRef(r)


def quotient(X: TruncatedSSet, relation: Iterable[tuple]) -> tuple[TruncatedSSet, SimplicialMap]:
    """Quotient by the smallest simplicial congruence containing ``relation``.

    Each class of non-degenerate cells that is not collapsed onto a
    degenerate simplex keeps the id of its earliest member.
    """
    by_dim: list[set] = [set() for _ in range(X.level + 1)]
    stack = []
    for a, b in relation:
        a, b = _as_ref(a), _as_ref(b)
        if X.ref_dim(a) != X.ref_dim(b):
            raise SimplicialError(f"related simplices {a!r}, {b!r} differ in dimension")
        if a != b:
            stack.append((a, b))
    while stack:
        a, b = stack.pop()
        k = X.ref_dim(a)
        key = (a, b) if repr(a) <= repr(b) else (b, a)
        if key in by_dim[k]:
            continue
        by_dim[k].add(key)
        if k:
            for i in range(k + 1):
                fa, fb = X.face(a, i), X.face(b, i)
                if fa != fb:
                    stack.append((fa, fb))

    image: dict = {}
    q_cells: list[list] = [[] for _ in range(X.level + 1)]
    q_faces: dict = {}
    # The quotient is still a sub-structure of X's ids, so faces resolve in
    # the partially built result via this helper.
    def lift(ref: DegenerateRef) -> DegenerateRef:
        img = image[ref.base]
        if not ref.degeneracies:
            return img
        m = X.ref_dim(ref)
        inner = surjection(img.degeneracies, q_dim[img.base] + len(img.degeneracies))
        return DegenerateRef(img.base, degeneracies_of(
            tuple(inner[v] for v in surjection(ref.degeneracies, m))))

    q_dim: dict = {}
    for k in range(X.level + 1):
        uf = _UnionFind()
        for x in X.cells[k]:
            uf.add(("c", x))
        for a, b in sorted(by_dim[k], key=repr):
            na = ("c", a.base) if not a.degeneracies else ("d", lift(a))
            nb = ("c", b.base) if not b.degeneracies else ("d", lift(b))
            uf.add(na)
            uf.add(nb)
            uf.union(na, nb)
        classes: dict = {}
        for node in uf.parent:
            classes.setdefault(uf.find(node), []).append(node)
        for members in classes.values():
            degen = {n[1] for n in members if n[0] == "d"}
            cells = [n[1] for n in members if n[0] == "c"]
            if len(degen) > 1:
                raise SimplicialError(f"inconsistent congruence in dimension {k}: {degen!r}")
            if degen:
                target = degen.pop()
                for x in cells:
                    image[x] = target
                continue
            rep = min(cells, key=X.index)
            for x in cells:
                image[x] = DegenerateRef(rep)
        for x in X.cells[k]:
            if image[x] == DegenerateRef(x):
                q_cells[k].append(x)
                q_dim[x] = k
                if k:
                    q_faces[x] = tuple(lift(X.face(DegenerateRef(x), i)) for i in range(k + 1))
    Q = TruncatedSSet(X.level, q_cells, q_faces)
    return Q, SimplicialMap(X, Q, image)


def descend(proj: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """The map out of a quotient induced by ``f``; raises if ``f`` does not factor."""
    Q = proj.target
    induced = SimplicialMap(Q, f.target, {c: f.assignment[c] for c in Q.all_cells()})
    for x, img in proj.assignment.items():
        if induced(img) != f.assignment[x]:
            raise SimplicialError(f"map does not respect the identification of {x!r}")
    return induced


def opposite_sset(X: TruncatedSSet) -> TruncatedSSet:
    """Reverse the vertex order of every simplex (``d_i`` becomes ``d_{k-i}``)."""
    def flip(ref: DegenerateRef, k: int) -> DegenerateRef:
        s = surjection(ref.degeneracies, k)
        top = s[-1]
        return DegenerateRef(ref.base, degeneracies_of([top - s[k - v] for v in range(k + 1)]))

    faces = {}
    for k in range(1, X.level + 1):
        for x in X.cells[k]:
            fs = X.faces[x]
            faces[x] = tuple(flip(fs[k - i], k - 1) for i in range(k + 1))
    return TruncatedSSet(X.level, X.cells, faces)
