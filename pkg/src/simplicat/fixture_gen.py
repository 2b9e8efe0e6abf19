"""Regenerate the bundled fixtures: ``python -m simplicat.fixture_gen [DIR]``."""
from __future__ import annotations

import sys
from pathlib import Path

from .corpus import named_categories
from .documents import FIXTURES, Document, category_document, listify, sset_document, term_json
from .simpset import boundary_simplex
from .theories import (
    EnrichedTheory,
    build_T0,
    build_T1,
    build_T2,
    mismatch_algebra,
    strict_cube_algebra,
)


def _doc(kind, ident, body) -> Document:
    return Document(kind, ident, body)


def theory_document(T: EnrichedTheory) -> Document:
    body = {
        "operations": dict(T.operations),
        "arity_cap": T.arity_cap,
        "weight_cap": T.weight_cap,
        "level": T.level,
    }
    if T.cell_generators:
        body["cells"] = [{"name": c.name, "arity": c.arity, "source": term_json(c.source),
                          "target": term_json(c.target)} for c in T.cell_generators.values()]
    if T.associative:
        body["associative"] = sorted(T.associative)
    return _doc("theory", T.name, body)


def _vertex_map(ident, f, source, target) -> Document:
    return _doc("map", ident, {
        "source": source, "target": target,
        "vertices": [[listify(v), listify(f.assignment[v].base)] for v in f.source.vertices()],
    })


def algebra_documents(name: str, A, carrier_docs: list, carrier_ids: dict) -> list[Document]:
    """Serialize an algebra whose carriers are already described by ``carrier_docs``."""
    docs = list(carrier_docs)
    actions = []
    for idx, ((n, terms), f) in enumerate(A.actions.items()):
        is_cell = any(t[0] == "cell" for t in terms)
        source = carrier_ids[n]
        if is_cell:
            source = f"{name}_cyl{n}"
            if source not in {d.id for d in docs}:
                docs.append(_doc("sset", source, {"construct": {
                    "type": "product", "left": carrier_ids[n], "right": f"{name}_interval"}}))
        map_id = f"{name}_act{idx}"
        docs.append(_vertex_map(map_id, f, source, carrier_ids[len(terms)]))
        actions.append({"source": n, "morphism": [term_json(t) for t in terms], "map": map_id})
    docs.append(_doc("algebra", name, {
        "theory": A.theory.name,
        "carriers": [[n, carrier_ids[n]] for n in sorted(carrier_ids)],
        "actions": actions,
    }))
    return docs


def cube_documents() -> list[Document]:
    A = strict_cube_algebra()
    name = "strict_cube"
    docs = [
        _doc("sset", f"{name}_S", {"construct": {"type": "standard_simplex", "n": 2, "level": 3}}),
        _doc("sset", f"{name}_interval",
             {"construct": {"type": "standard_simplex", "n": 1, "level": 3}}),
    ]
    ids = {}
    for n in A.carriers:
        ids[n] = f"{name}_X{n}"
        docs.append(_doc("sset", ids[n], {"construct": {"type": "power", "base": f"{name}_S", "n": n}}))
    return algebra_documents(name, A, docs, ids)


def mismatch_documents() -> list[Document]:
    A = mismatch_algebra()
    name = "mismatch"
    docs = [
        _doc("sset", f"{name}_point", {"construct": {"type": "standard_simplex", "n": 0, "level": 3}}),
        _doc("sset", f"{name}_two", {"construct": {"type": "discrete", "points": ["a", "b"],
                                                   "level": 3}}),
    ]
    ids = {n: f"{name}_two" if n == 1 else f"{name}_point" for n in A.carriers}
    return algebra_documents(name, A, docs, ids)


def diagram(ident, shape, builtin) -> Document:
    return _doc("diagram", ident, {"shape": shape, "builtin": builtin})


def fixture_files() -> dict[str, list[Document]]:
    cats = named_categories()
    R = category_document("reflexive_pair", cats["reflexive_pair"])
    R_gen = _doc("category", "reflexive_pair", {
        "objects": ["A", "B"],
        "generators": [["h", "A", "B"], ["k", "A", "B"], ["m", "B", "A"]],
        "equations": [[["h", "m"], []], [["k", "m"], []]],
    })
    join = category_document("join_poset", cats["cospan"])
    terminal = category_document("terminal", cats["terminal"])
    arrow = category_document("arrow", cats["arrow"])
    files = {
        "reflexive_pair": [R_gen],
        "reflexive_pair_table": [R],
        "join_poset": [join],
        "discrete_2": [category_document("discrete_2", cats["discrete_2"])],
        "span": [category_document("span", cats["span"])],
        "Z2": [category_document("Z2", cats["Z/2"])],
        "boundary_delta3": [sset_document("boundary_delta3", boundary_simplex(3, 3))],
        "arrow_point_diagram": [arrow, diagram("arrow_point", "arrow",
                                               {"type": "constant_point", "level": 3})],
        "span_point_diagram": [category_document("span", cats["span"]),
                               diagram("span_point", "span",
                                       {"type": "constant_point", "level": 3})],
        "join_point_diagram": [join, diagram("join_point", "join_poset",
                                             {"type": "constant_point", "level": 3})],
        "terminal_diagram": [
            terminal,
            _doc("sset", "segment", {"construct": {"type": "standard_simplex", "n": 1, "level": 3}}),
            diagram("terminal_segment", "terminal", {"type": "constant", "value": "segment"}),
        ],
        "reflexive_pair_rep_A": [R_gen, diagram("rep_A", "reflexive_pair",
                                                {"type": "representable", "object": "A",
                                                 "level": 3})],
        "join_rep": [join, diagram("join_rep_b", "join_poset",
                                   {"type": "representable", "object": "b", "level": 3})],
        "T0": [theory_document(build_T0())],
        "T1": [theory_document(build_T1())],
        "T2": [theory_document(build_T2())],
        "strict_cube_algebra": cube_documents(),
        "mismatch_algebra": mismatch_documents(),
        "broken_composition": [_broken_composition()],
        "dangling_reference": [arrow, _doc("diagram", "dangling", {
            "shape": "arrow", "values": [[0, "nowhere"], [1, "nowhere"]], "actions": []})],
    }
    return files


def _broken_composition() -> Document:
    doc = category_document("broken", named_categories()["chain_3"])
    # send the composite 0 -> 1 -> 2 to the wrong morphism
    for entry in doc.body["composition"]:
        entry[2] = [1, 2]
    return doc


def write_fixtures(directory: Path = FIXTURES) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, docs in fixture_files().items():
        path = directory / f"{name}.jsonl"
        path.write_text("".join(d.to_json() + "\n" for d in docs))
        written.append(path)
    return written


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else FIXTURES
    for p in write_fixtures(target):
        print(p)
