"""Line-delimited JSON documents: loading, cross-reference resolution, serialization.

Each line is one document::

    {"kind": "sset", "id": "S", "format_version": "1", "body": {...}}

JSON arrays inside identifiers are read back as tuples, so cell and
morphism ids may be nested.  Unknown fields are rejected everywhere.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import FORMAT_VERSION
from .fincat import FinCat, close_generators, nerve, validate_category
from .hocolim import (
    DiagramData,
    WeightData,
    constant_diagram,
    constant_weight,
    hocolim_weight,
    point_diagram,
    representable_diagram,
    representable_weight,
)
from .simpset import (
    DegenerateRef,
    SimplicialError,
    SimplicialMap,
    TruncatedSSet,
    boundary_simplex,
    discrete_sset,
    map_from_vertices,
    power,
    product,
    standard_simplex,
    validate,
)
from .theories import AlgebraData, CellGenerator, EnrichedTheory, validate_theory

KINDS = ("category", "sset", "map", "diagram", "weight", "theory", "algebra")
FIXTURES = Path(__file__).parent / "fixtures"


class DocumentError(Exception):
    exit_code = 1


class ParseError(DocumentError):
    exit_code = 2


class ResolutionError(DocumentError):
    exit_code = 3


class InvariantError(DocumentError):
    exit_code = 4

    def __init__(self, message: str, violations: list[str] | None = None):
        super().__init__(message)
        self.violations = violations or []


def tuplify(v):
    if isinstance(v, list):
        return tuple(tuplify(x) for x in v)
    return v


def listify(v):
    if isinstance(v, tuple):
        return [listify(x) for x in v]
    if isinstance(v, DegenerateRef):
        return [listify(v.base), list(v.degeneracies)]
    return v


def _fields(body, where: str, required=(), optional=()) -> dict:
    if not isinstance(body, dict):
        raise ParseError(f"{where}: expected an object")
    unknown = set(body) - set(required) - set(optional)
    if unknown:
        raise ParseError(f"{where}: unknown fields {sorted(unknown)}")
    missing = [k for k in required if k not in body]
    if missing:
        raise ParseError(f"{where}: missing fields {missing}")
    return body


def _int(v, where: str, minimum: int = 0) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise ParseError(f"{where}: expected an integer >= {minimum}")
    return v


def _ref(v, where: str) -> DegenerateRef:
    if not (isinstance(v, list) and len(v) == 2 and isinstance(v[1], list)):
        raise ParseError(f"{where}: a simplex reference is [base, [degeneracies]]")
    try:
        return DegenerateRef(tuplify(v[0]), tuple(v[1]))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from None


@dataclass
class Document:
    kind: str
    id: str
    body: dict
    source: str = ""

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "id": self.id, "format_version": FORMAT_VERSION,
                           "body": self.body}, sort_keys=True, separators=(",", ":"))


def parse_lines(text: str, source: str = "<string>") -> list[Document]:
    docs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        where = f"{source}:{lineno}"
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{where}: invalid JSON ({exc.msg})") from None
        _fields(raw, where, ("kind", "id", "format_version", "body"))
        if raw["kind"] not in KINDS:
            raise ParseError(f"{where}: unknown kind {raw['kind']!r}")
        if not isinstance(raw["id"], str) or not raw["id"]:
            raise ParseError(f"{where}: id must be a non-empty string")
        if raw["format_version"] != FORMAT_VERSION:
            raise ParseError(f"{where}: unsupported format_version {raw['format_version']!r}")
        docs.append(Document(raw["kind"], raw["id"], raw["body"], where))
    return docs


def resolve_path(path: str) -> Path:
    """``fixture:NAME`` names a bundled fixture file."""
    if path.startswith("fixture:"):
        return FIXTURES / (path[len("fixture:"):] + ".jsonl")
    return Path(path)


class Workspace:
    """Documents from one or more files, built lazily and cached by id."""

    def __init__(self):
        self.docs: dict[str, Document] = {}
        self.order: list[str] = []
        self._built: dict[str, object] = {}
        self._building: set[str] = set()

    @classmethod
    def load(cls, *paths: str) -> "Workspace":
        ws = cls()
        for p in paths:
            path = resolve_path(p)
            try:
                text = path.read_text()
            except OSError as exc:
                raise ParseError(f"{p}: cannot read ({exc.strerror})") from None
            ws.add(parse_lines(text, p))
        return ws

    @classmethod
    def from_text(cls, text: str) -> "Workspace":
        ws = cls()
        ws.add(parse_lines(text))
        return ws

    def add(self, docs):
        for d in docs:
            old = self.docs.get(d.id)
            if old is not None:
                if (old.kind, old.body) != (d.kind, d.body):
                    raise ResolutionError(f"{d.source}: id {d.id!r} already used by {old.source}")
                continue
            self.docs[d.id] = d
            self.order.append(d.id)

    def last_of(self, kind: str) -> str:
        for i in reversed(self.order):
            if self.docs[i].kind == kind:
                return i
        raise ResolutionError(f"no {kind} document found")

    def get(self, ident: str, kind: str | None = None):
        doc = self.docs.get(ident)
        if doc is None:
            raise ResolutionError(f"unknown id {ident!r}")
        if kind is not None and doc.kind != kind:
            raise ResolutionError(f"{ident!r} is a {doc.kind}, expected a {kind}")
        if ident in self._built:
            return self._built[ident]
        if ident in self._building:
            raise ResolutionError(f"cyclic reference through {ident!r}")
        self._building.add(ident)
        try:
            obj = BUILDERS[doc.kind](self, doc)
        finally:
            self._building.discard(ident)
        self._built[ident] = obj
        return obj

    def validate(self, ident: str) -> list[str]:
        """Invariant violations of one document (after building it)."""
        obj = self.get(ident)
        kind = self.docs[ident].kind
        if kind == "category":
            return validate_category(obj)
        if kind == "sset":
            return validate(obj)
        if kind == "map":
            return obj.validate()
        if kind in ("diagram", "weight"):
            return obj.validate()
        if kind == "theory":
            return validate_theory(obj)
        return obj.validate()


# -- builders --------------------------------------------------------------

def _build_category(ws: Workspace, doc: Document) -> FinCat:
    b = doc.body
    where = doc.source
    if "generators" in b:
        _fields(b, where, ("objects", "generators"), ("equations",))
        gens = {}
        for g in b["generators"]:
            if not (isinstance(g, list) and len(g) == 3):
                raise ParseError(f"{where}: a generator is [id, source, target]")
            gens[tuplify(g[0])] = (tuplify(g[1]), tuplify(g[2]))
        eqs = {}
        for e in b.get("equations", []):
            if not (isinstance(e, list) and len(e) == 2):
                raise ParseError(f"{where}: an equation is [word, word]")
            eqs[tuplify(e[0])] = tuplify(e[1])
        try:
            return close_generators([tuplify(o) for o in b["objects"]], gens, eqs, name=doc.id)
        except ValueError as exc:
            raise InvariantError(f"{where}: {exc}") from None
    _fields(b, where, ("objects", "morphisms", "identities", "composition"))
    objects = [tuplify(o) for o in b["objects"]]
    morphisms = {}
    for m in b["morphisms"]:
        if not (isinstance(m, list) and len(m) == 3):
            raise ParseError(f"{where}: a morphism is [id, source, target]")
        morphisms[tuplify(m[0])] = (tuplify(m[1]), tuplify(m[2]))
    identities = {}
    for pair in b["identities"]:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError(f"{where}: an identity is [object, morphism]")
        identities[tuplify(pair[0])] = tuplify(pair[1])
    composition = {}
    for c in b["composition"]:
        if not (isinstance(c, list) and len(c) == 3):
            raise ParseError(f"{where}: a composite is [g, f, g o f]")
        composition[(tuplify(c[0]), tuplify(c[1]))] = tuplify(c[2])
    # composites with identities may be left implicit
    ident_ids = set(identities.values())
    for f, (s, t) in morphisms.items():
        if t in identities:
            composition.setdefault((identities[t], f), f)
        if s in identities:
            composition.setdefault((f, identities[s]), f)
    for i in ident_ids:
        composition.setdefault((i, i), i)
    return FinCat(objects, morphisms, identities, composition, name=doc.id)


def _build_sset(ws: Workspace, doc: Document) -> TruncatedSSet:
    b = doc.body
    where = doc.source
    if "construct" in b:
        _fields(b, where, ("construct",))
        c = b["construct"]
        kind = c.get("type") if isinstance(c, dict) else None
        if kind in ("standard_simplex", "boundary_simplex"):
            _fields(c, where, ("type", "n", "level"))
            fn = standard_simplex if kind == "standard_simplex" else boundary_simplex
            return fn(_int(c["n"], where), _int(c["level"], where))
        if kind == "discrete":
            _fields(c, where, ("type", "points", "level"))
            return discrete_sset([tuplify(p) for p in c["points"]], _int(c["level"], where))
        if kind == "product":
            _fields(c, where, ("type", "left", "right"))
            return product(ws.get(c["left"], "sset"), ws.get(c["right"], "sset"))
        if kind == "power":
            _fields(c, where, ("type", "base", "n"))
            return power(ws.get(c["base"], "sset"), _int(c["n"], where))
        if kind == "nerve":
            _fields(c, where, ("type", "category", "level"))
            return nerve(ws.get(c["category"], "category"), _int(c["level"], where))
        raise ParseError(f"{where}: unknown construction {kind!r}")
    _fields(b, where, ("level", "cells", "faces"))
    level = _int(b["level"], where)
    cells = [[tuplify(x) for x in layer] for layer in b["cells"]]
    faces = {}
    for entry in b["faces"]:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ParseError(f"{where}: a face entry is [cell, [refs]]")
        faces[tuplify(entry[0])] = tuple(_ref(r, where) for r in entry[1])
    try:
        X = TruncatedSSet(level, cells, faces)
    except SimplicialError as exc:
        raise InvariantError(f"{where}: {exc}") from None
    missing = [x for layer in X.cells[1:] for x in layer if x not in X.faces
               or len(X.faces[x]) != X.dim(x) + 1]
    if missing:
        raise InvariantError(f"{where}: wrong or missing faces for {missing[:3]!r}")
    return X


def _build_map(ws: Workspace, doc: Document) -> SimplicialMap:
    b = doc.body
    where = doc.source
    if "vertices" in b:
        _fields(b, where, ("source", "target", "vertices"))
    else:
        _fields(b, where, ("source", "target", "assignment"))
    X = ws.get(b["source"], "sset")
    Y = ws.get(b["target"], "sset")
    if "vertices" in b:
        table = {}
        for pair in b["vertices"]:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise ParseError(f"{where}: a vertex entry is [vertex, image]")
            table[tuplify(pair[0])] = tuplify(pair[1])
        missing = [v for v in X.vertices() if v not in table]
        if missing:
            raise InvariantError(f"{where}: no image for vertices {missing[:3]!r}")
        try:
            return map_from_vertices(X, Y, table.__getitem__)
        except SimplicialError as exc:
            raise InvariantError(f"{where}: {exc}") from None
    assignment = {}
    for pair in b["assignment"]:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError(f"{where}: an assignment entry is [cell, ref]")
        assignment[tuplify(pair[0])] = _ref(pair[1], where)
    return SimplicialMap(X, Y, assignment)


def _functor_data(ws, doc, cls, builtins):
    b = doc.body
    where = doc.source
    if "builtin" in b:
        _fields(b, where, ("shape", "builtin"))
        C = ws.get(b["shape"], "category")
        spec = b["builtin"]
        kind = spec.get("type") if isinstance(spec, dict) else None
        if kind not in builtins:
            raise ParseError(f"{where}: unknown builtin {kind!r}")
        return builtins[kind](C, spec, where)
    _fields(b, where, ("shape", "values", "actions"))
    C = ws.get(b["shape"], "category")
    values = {}
    for pair in b["values"]:
        obj = tuplify(pair[0])
        if obj not in C.objects:
            raise ResolutionError(f"{where}: {obj!r} is not an object of {b['shape']!r}")
        values[obj] = ws.get(pair[1], "sset")
    actions = {}
    for pair in b["actions"]:
        mor = tuplify(pair[0])
        if mor not in C.morphisms:
            raise ResolutionError(f"{where}: {mor!r} is not a morphism of {b['shape']!r}")
        actions[mor] = ws.get(pair[1], "map")
    return cls(C, values, actions)


def _object(C, spec, where):
    obj = tuplify(spec.get("object"))
    if obj not in C.objects:
        raise ResolutionError(f"{where}: {obj!r} is not an object of the shape")
    return obj


def _diagram_builtins(ws):
    def constant(C, spec, where):
        _fields(spec, where, ("type", "value"))
        return constant_diagram(C, ws.get(spec["value"], "sset"))

    def point(C, spec, where):
        _fields(spec, where, ("type", "level"))
        return point_diagram(C, _int(spec["level"], where))

    def rep(C, spec, where):
        _fields(spec, where, ("type", "object", "level"))
        return representable_diagram(C, _object(C, spec, where), _int(spec["level"], where))

    return {"constant": constant, "constant_point": point, "representable": rep}


def _weight_builtins(ws):
    def hoc(C, spec, where):
        _fields(spec, where, ("type", "level"))
        return hocolim_weight(C, _int(spec["level"], where))

    def point(C, spec, where):
        _fields(spec, where, ("type", "level"))
        return constant_weight(C, _int(spec["level"], where))

    def rep(C, spec, where):
        _fields(spec, where, ("type", "object", "level"))
        return representable_weight(C, _object(C, spec, where), _int(spec["level"], where))

    return {"hocolim": hoc, "constant_point": point, "representable": rep}


def _build_diagram(ws, doc):
    return _functor_data(ws, doc, DiagramData, _diagram_builtins(ws))


def _build_weight(ws, doc):
    return _functor_data(ws, doc, WeightData, _weight_builtins(ws))


def parse_term(v, where: str, names: set | None = None):
    """``3`` is the variable x3; ``["m", t1, t2]`` applies ``m``."""
    if isinstance(v, int) and not isinstance(v, bool):
        return ("x", _int(v, where, 1))
    if isinstance(v, list) and v and isinstance(v[0], str):
        return ("op", v[0], tuple(parse_term(a, where) for a in v[1:]))
    raise ParseError(f"{where}: bad term {v!r}")


def term_json(t):
    if t[0] == "x":
        return t[1]
    if t[0] == "op":
        return [t[1]] + [term_json(a) for a in t[2]]
    return [t[1]] + [term_json(a) for a in t[3]]


def _build_theory(ws, doc) -> EnrichedTheory:
    b = _fields(doc.body, doc.source, ("operations",),
                ("cells", "associative", "arity_cap", "weight_cap", "level"))
    where = doc.source
    ops = b["operations"]
    if not isinstance(ops, dict):
        raise ParseError(f"{where}: operations map names to arities")
    ops = {k: _int(v, where) for k, v in ops.items()}
    cells = []
    for c in b.get("cells", []):
        _fields(c, where, ("name", "arity", "source", "target"))
        cells.append(CellGenerator(c["name"], _int(c["arity"], where),
                                   parse_term(c["source"], where), parse_term(c["target"], where)))
    for c in cells:
        for t in (c.source, c.target):
            _check_ops(t, ops, where)
    try:
        return EnrichedTheory(doc.id, ops, cells, b.get("associative", []),
                              arity_cap=_int(b.get("arity_cap", 4), where),
                              weight_cap=_int(b.get("weight_cap", 3), where),
                              level=_int(b.get("level", 2), where))
    except ValueError as exc:
        raise InvariantError(f"{where}: {exc}") from None


def _check_ops(t, ops, where):
    if t[0] == "op":
        if t[1] not in ops or len(t[2]) != ops[t[1]]:
            raise InvariantError(f"{where}: {t[1]!r} is not an operation of that arity")
        for a in t[2]:
            _check_ops(a, ops, where)


def _build_algebra(ws, doc) -> AlgebraData:
    b = _fields(doc.body, doc.source, ("theory", "carriers", "actions"))
    where = doc.source
    T = ws.get(b["theory"], "theory")
    carriers = {}
    for pair in b["carriers"]:
        carriers[_int(pair[0], where)] = ws.get(pair[1], "sset")
    actions = {}
    for a in b["actions"]:
        _fields(a, where, ("source", "morphism", "map"))
        n = _int(a["source"], where)
        terms = []
        for t in a["morphism"]:
            if isinstance(t, list) and t and t[0] in T.cell_generators:
                gen = T.cell_generators[t[0]]
                args = tuple(parse_term(x, where) for x in t[1:])
                if len(args) != gen.arity:
                    raise InvariantError(f"{where}: {t[0]!r} takes {gen.arity} arguments")
                terms.append(("cell", t[0], 1, args))
            else:
                terms.append(parse_term(t, where))
        actions[(n, tuple(terms))] = ws.get(a["map"], "map")
    return AlgebraData(T, carriers, actions)


BUILDERS = {
    "category": _build_category,
    "sset": _build_sset,
    "map": _build_map,
    "diagram": _build_diagram,
    "weight": _build_weight,
    "theory": _build_theory,
    "algebra": _build_algebra,
}


# -- serialization ---------------------------------------------------------

def sset_document(ident: str, X: TruncatedSSet) -> Document:
    body = {
        "level": X.level,
        "cells": [[listify(x) for x in layer] for layer in X.cells],
        "faces": [[listify(x), [listify(f) for f in X.faces[x]]]
                  for layer in X.cells[1:] for x in layer],
    }
    return Document("sset", ident, body)


def category_document(ident: str, C: FinCat) -> Document:
    body = {
        "objects": [listify(o) for o in C.objects],
        "morphisms": [[listify(f), listify(s), listify(t)] for f, (s, t) in C.morphisms.items()],
        "identities": [[listify(a), listify(i)] for a, i in C.identities.items()],
        "composition": [[listify(g), listify(f), listify(h)]
                        for (g, f), h in C.composition.items()
                        if not (C.is_identity(g) or C.is_identity(f))],
    }
    return Document("category", ident, body)


def map_document(ident: str, f: SimplicialMap, source: str, target: str) -> Document:
    body = {"source": source, "target": target,
            "assignment": [[listify(x), listify(r)] for x, r in f.assignment.items()]}
    return Document("map", ident, body)


def write_documents(path, docs) -> None:
    Path(path).write_text("".join(d.to_json() + "\n" for d in docs))
