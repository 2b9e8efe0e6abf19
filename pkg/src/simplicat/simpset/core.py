"""Truncated simplicial sets presented by their non-degenerate simplices.

Every simplex, degenerate or not, is written in Eilenberg-Zilber normal form
``s_{j1} ... s_{jr} x`` with ``j1 > ... > jr`` and ``x`` non-degenerate.
Simplicial operators are handled as monotone maps ``[m] -> [n]`` given as
tuples of length ``m + 1``; a degeneracy word is the same thing as a
monotone surjection.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

CellId = Hashable


class SimplicialError(ValueError):
    """Malformed simplicial data."""


class InsufficientTruncation(SimplicialError):
    """A computation needs cells above the truncation level."""

    def __init__(self, needed: int, level: int):
        super().__init__(f"insufficient truncation: need level {needed}, have {level}")
        self.needed = needed
        self.level = level


@dataclass(frozen=True, order=False)
class DegenerateRef:
    """A simplex ``s_{j1} ... s_{jr} base`` with ``j1 > ... > jr``."""

    base: CellId
    degeneracies: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.degeneracies, tuple):
            object.__setattr__(self, "degeneracies", tuple(self.degeneracies))

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degeneracies)

    def __repr__(self) -> str:
        if not self.degeneracies:
            return f"<{self.base!r}>"
        ops = "".join(f"s{j}" for j in self.degeneracies)
        return f"<{ops} {self.base!r}>"


def surjection(degeneracies: Sequence[int], total_dim: int) -> tuple[int, ...]:
    """Monotone surjection ``[total_dim] -> [total_dim - r]`` of a normal-form word."""
    return _surjection(tuple(degeneracies), total_dim)


@lru_cache(maxsize=None)
def _surjection(degeneracies: tuple, total_dim: int) -> tuple[int, ...]:
    return tuple(v - sum(1 for j in degeneracies if j < v) for v in range(total_dim + 1))


def degeneracies_of(surj: Sequence[int]) -> tuple[int, ...]:
    """Normal-form degeneracy word of a monotone surjection."""
    return _degeneracies_of(tuple(surj))


@lru_cache(maxsize=None)
def _degeneracies_of(surj: tuple) -> tuple[int, ...]:
    return tuple(v for v in range(len(surj) - 2, -1, -1) if surj[v] == surj[v + 1])


@lru_cache(maxsize=None)
def _face_plan(degeneracies: tuple, p: int, i: int):
    """How ``d_i`` acts on ``s_J x`` with ``dim x = p``.

    Returns ``(None, word)`` when the result is ``s_word x``, otherwise
    ``(r, squeeze)``: take ``d_r x`` and precompose with ``squeeze``.
    """
    m = p + len(degeneracies)
    sigma = _surjection(degeneracies, m)
    psi = sigma[:i] + sigma[i + 1:]
    if len(set(psi)) == p + 1:
        return None, _degeneracies_of(psi)
    missing = next(v for v in range(p + 1) if v not in psi)
    image = [v for v in range(p + 1) if v != missing]
    return missing, tuple(image.index(v) for v in psi)


def compose_surjections(outer: Sequence[int], inner: Sequence[int]) -> tuple[int, ...]:
    """``outer o inner`` for monotone maps given as tuples."""
    return tuple(outer[v] for v in inner)


class TruncatedSSet:
    """A simplicial set truncated at ``level``.

    ``cells[k]`` lists the non-degenerate k-simplices in a fixed order (the
    order drives every deterministic choice downstream).  ``faces[x]`` holds
    ``d_0 x, ..., d_k x`` as normal-form references for each cell of
    dimension ``k >= 1``.  Instances are treated as immutable.
    """

    __slots__ = ("level", "cells", "faces", "_dim", "_index")

    def __init__(
        self,
        level: int,
        cells: Sequence[Iterable[CellId]],
        faces: Mapping[CellId, Sequence[DegenerateRef]],
    ):
        if level < 0:
            raise SimplicialError("truncation level must be >= 0")
        cells = [tuple(c) for c in cells]
        if len(cells) > level + 1:
            raise SimplicialError("cells given above the truncation level")
        cells += [()] * (level + 1 - len(cells))
        self.level = level
        self.cells: tuple[tuple[CellId, ...], ...] = tuple(cells)
        self.faces: dict[CellId, tuple[DegenerateRef, ...]] = {
            x: tuple(fs) for x, fs in faces.items()
        }
        self._dim: dict[CellId, int] = {}
        self._index: dict[CellId, int] = {}
        for k, layer in enumerate(self.cells):
            for i, x in enumerate(layer):
                if x in self._dim:
                    raise SimplicialError(f"cell id {x!r} used twice")
                self._dim[x] = k
                self._index[x] = i

    # -- basic queries -------------------------------------------------
    def dim(self, x: CellId) -> int:
        return self._dim[x]

    def index(self, x: CellId) -> int:
        return self._index[x]

    def __contains__(self, x: CellId) -> bool:
        return x in self._dim

    def counts(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def size(self) -> int:
        return len(self._dim)

    def is_empty(self) -> bool:
        return not self.cells[0]

    def vertices(self) -> tuple[CellId, ...]:
        return self.cells[0]

    def all_cells(self) -> Iterable[CellId]:
        for layer in self.cells:
            yield from layer

    def ref_dim(self, ref: DegenerateRef) -> int:
        return self._dim[ref.base] + len(ref.degeneracies)

    def __repr__(self) -> str:
        return f"TruncatedSSet(level={self.level}, counts={self.counts()})"

    def same_as(self, other: "TruncatedSSet") -> bool:
        return (
            self.level == other.level
            and self.cells == other.cells
            and self.faces == other.faces
        )

    # -- simplicial operators ------------------------------------------
    def face(self, ref: DegenerateRef, i: int) -> DegenerateRef:
        """``d_i`` of an arbitrary simplex, returned in normal form."""
        p = self._dim[ref.base]
        m = p + len(ref.degeneracies)
        if not 0 <= i <= m or m == 0:
            raise SimplicialError(f"face d_{i} undefined in dimension {m}")
        missing, plan = _face_plan(ref.degeneracies, p, i)
        if missing is None:
            return DegenerateRef(ref.base, plan)
        lower = self.faces[ref.base][missing]
        if not lower.degeneracies:
            return DegenerateRef(lower.base, _degeneracies_of(plan))
        inner = _surjection(lower.degeneracies, self.ref_dim(lower))
        return DegenerateRef(lower.base, _degeneracies_of(tuple(inner[v] for v in plan)))

    def operate(self, ref: DegenerateRef, theta: Sequence[int]) -> DegenerateRef:
        """``theta^* ref`` for a monotone map ``theta: [q] -> [dim ref]``."""
        p = self.dim(ref.base)
        m = p + len(ref.degeneracies)
        sigma = surjection(ref.degeneracies, m)
        psi = tuple(sigma[t] for t in theta)
        image = sorted(set(psi))
        y = DegenerateRef(ref.base)
        for r in sorted(set(range(p + 1)) - set(image), reverse=True):
            y = self.face(y, r)
        squeeze = tuple(image.index(v) for v in psi)
        inner = surjection(y.degeneracies, self.ref_dim(y))
        return DegenerateRef(y.base, degeneracies_of(compose_surjections(inner, squeeze)))

    def degenerate(self, ref: DegenerateRef, surj: Sequence[int]) -> DegenerateRef:
        """Precompose ``ref`` with a monotone surjection onto its dimension."""
        inner = surjection(ref.degeneracies, self.ref_dim(ref))
        return DegenerateRef(ref.base, degeneracies_of(compose_surjections(inner, surj)))

    def vertex_sequence(self, ref: DegenerateRef) -> tuple[CellId, ...]:
        m = self.ref_dim(ref)
        out = []
        for v in range(m + 1):
            out.append(self.operate(ref, (v,)).base)
        return tuple(out)

    def truncate(self, level: int) -> "TruncatedSSet":
        if level >= self.level:
            return self
        keep = self.cells[: level + 1]
        faces = {x: self.faces[x] for layer in keep[1:] for x in layer}
        return TruncatedSSet(level, keep, faces)

    def restrict(self, keep: Iterable[CellId]) -> "TruncatedSSet":
        """Sub-simplicial set on a face-closed set of cells."""
        keep = set(keep)
        cells = [[x for x in layer if x in keep] for layer in self.cells]
        faces = {x: self.faces[x] for layer in cells[1:] for x in layer}
        return TruncatedSSet(self.level, cells, faces)


def empty_sset(level: int) -> TruncatedSSet:
    return TruncatedSSet(level, [], {})


def discrete_sset(points: Iterable[CellId], level: int) -> TruncatedSSet:
    return TruncatedSSet(level, [list(points)], {})


def standard_simplex(n: int, level: int) -> TruncatedSSet:
    """Delta_n truncated at ``level``; cells are increasing vertex tuples."""
    if n < 0 or level < 0:
        raise SimplicialError("standard_simplex needs n >= 0 and level >= 0")
    cells = [list(combinations(range(n + 1), k + 1)) for k in range(min(n, level) + 1)]
    faces = {
        s: tuple(DegenerateRef(s[:i] + s[i + 1:]) for i in range(len(s)))
        for layer in cells[1:]
        for s in layer
    }
    return TruncatedSSet(level, cells, faces)


def boundary_simplex(n: int, level: int) -> TruncatedSSet:
    """The boundary of Delta_n.  For ``n == 0`` this is the empty set."""
    if n == 0:
        return empty_sset(level)
    full = standard_simplex(n, level)
    top = tuple(range(n + 1))
    return full.restrict(x for x in full.all_cells() if x != top)


def validate(X: TruncatedSSet) -> list[str]:
    """Every violated invariant of ``X``; empty when ``X`` is well formed."""
    report: list[str] = []
    for k, layer in enumerate(X.cells):
        for x in layer:
            if k == 0:
                if X.faces.get(x):
                    report.append(f"vertex {x!r} carries faces")
                continue
            fs = X.faces.get(x)
            if fs is None or len(fs) != k + 1:
                report.append(f"cell {x!r} of dim {k} needs {k + 1} faces")
                continue
            for i, f in enumerate(fs):
                report.extend(_check_ref(X, f, k - 1, f"d{i} {x!r}"))
    for x in X.faces:
        if x not in X:
            report.append(f"faces given for unknown cell {x!r}")
    if report:
        return report
    for k in range(2, X.level + 1):
        for x in X.cells[k]:
            ref = DegenerateRef(x)
            for j in range(k + 1):
                dj = X.face(ref, j)
                for i in range(j):
                    lhs = X.face(dj, i)
                    rhs = X.face(X.face(ref, i), j - 1)
                    if lhs != rhs:
                        report.append(
                            f"identity d{i}d{j} = d{j - 1}d{i} fails on {x!r}: {lhs!r} != {rhs!r}"
                        )
    return report


def _check_ref(X: TruncatedSSet, ref: DegenerateRef, dim: int, where: str) -> list[str]:
    if not isinstance(ref, DegenerateRef):
        return [f"{where}: not a simplex reference"]
    if ref.base not in X:
        return [f"{where}: unknown base {ref.base!r}"]
    degs = ref.degeneracies
    if any(a <= b for a, b in zip(degs, degs[1:])) or any(j < 0 for j in degs):
        return [f"{where}: degeneracies {degs} not strictly decreasing"]
    if X.dim(ref.base) + len(degs) != dim:
        return [f"{where}: has dimension {X.ref_dim(ref)}, expected {dim}"]
    if degs and degs[0] > dim - 1:
        return [f"{where}: degeneracy index {degs[0]} out of range"]
    return []


class SimplicialMap:
    """A simplicial map given on non-degenerate source cells."""

    __slots__ = ("source", "target", "assignment")

    def __init__(self, source: TruncatedSSet, target: TruncatedSSet,
                 assignment: Mapping[CellId, DegenerateRef]):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)

    def __call__(self, ref) -> DegenerateRef:
        if not isinstance(ref, DegenerateRef):
            ref = DegenerateRef(ref)
        img = self.assignment[ref.base]
        if not ref.degeneracies:
            return img
        m = self.source.ref_dim(ref)
        return self.target.degenerate(img, surjection(ref.degeneracies, m))

    def __repr__(self) -> str:
        return f"SimplicialMap({self.source!r} -> {self.target!r})"

    def validate(self) -> list[str]:
        report = []
        for x in self.source.all_cells():
            if x not in self.assignment:
                report.append(f"no image for {x!r}")
                continue
            img = self.assignment[x]
            if img.base not in self.target:
                report.append(f"image of {x!r} has unknown base {img.base!r}")
                continue
            if self.target.ref_dim(img) != self.source.dim(x):
                report.append(f"image of {x!r} has wrong dimension")
        if report:
            return report
        top = min(self.source.level, self.target.level)
        for k in range(1, top + 1):
            for x in self.source.cells[k]:
                ref = DegenerateRef(x)
                for i in range(k + 1):
                    a = self(self.source.face(ref, i))
                    b = self.target.face(self.assignment[x], i)
                    if a != b:
                        report.append(f"d{i} of {x!r} not preserved: {a!r} != {b!r}")
        return report

    def compose(self, inner: "SimplicialMap") -> "SimplicialMap":
        """``self o inner``."""
        return SimplicialMap(
            inner.source, self.target,
            {x: self(img) for x, img in inner.assignment.items()},
        )

    def equals(self, other: "SimplicialMap") -> bool:
        return self.assignment == other.assignment

    def is_isomorphism(self) -> bool:
        """Bijective on non-degenerate cells, dimension by dimension."""
        if self.source.counts() != self.target.counts():
            return False
        seen = set()
        for img in self.assignment.values():
            if img.degeneracies or img.base in seen:
                return False
            seen.add(img.base)
        return len(seen) == self.target.size()


def identity_map(X: TruncatedSSet) -> SimplicialMap:
    return SimplicialMap(X, X, {x: DegenerateRef(x) for x in X.all_cells()})


def constant_map(X: TruncatedSSet, Y: TruncatedSSet, vertex: CellId) -> SimplicialMap:
    return SimplicialMap(
        X, Y,
        {x: DegenerateRef(vertex, tuple(range(X.dim(x) - 1, -1, -1))) for x in X.all_cells()},
    )


def map_from_vertices(X: TruncatedSSet, Y: TruncatedSSet, on_vertices) -> SimplicialMap:
    """Extend a vertex function to a simplicial map.

    Only valid when every simplex of ``Y`` is determined by its vertex
    sequence (nerves of posets, standard simplices and their products).
    """
    lookup: dict[tuple, DegenerateRef] = {}
    for x in Y.all_cells():
        ref = DegenerateRef(x)
        seq = Y.vertex_sequence(ref)
        if seq in lookup:
            raise SimplicialError("target simplices are not determined by their vertices")
        lookup[seq] = ref
    assignment = {}
    for x in X.all_cells():
        seq = tuple(on_vertices(v) for v in X.vertex_sequence(DegenerateRef(x)))
        runs = [seq[0]]
        surj = [0]
        for v in seq[1:]:
            if v != runs[-1]:
                runs.append(v)
            surj.append(len(runs) - 1)
        base = lookup.get(tuple(runs))
        if base is None:
            raise SimplicialError(f"no simplex of the target with vertices {tuple(runs)!r}")
        assignment[x] = DegenerateRef(base.base, degeneracies_of(surj))
    return SimplicialMap(X, Y, assignment)
