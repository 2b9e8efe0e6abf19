"""Command-line interface.

Exit codes: 0 ok (including inconclusive verdicts), 2 parse error,
3 reference error, 4 invariant violation, 5 resource limit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import FORMAT_VERSION, __version__
from .documents import (
    DocumentError,
    InvariantError,
    ParseError,
    Workspace,
    sset_document,
)
from .fincat import has_terminal, nerve
from .hocolim import (
    DiagramError,
    comparison_to_product,
    hocolim,
    nerve_projection,
    value_inclusion,
)
from .shape import homotopy_sifted, is_sifted
from .simpset import InsufficientTruncation, SimplicialError, homology
from .theories import ResourceLimit, TheoryError, check_homotopy_algebra
from .weq import DEFAULT_BUDGET, certify_weq

EXIT_OK, EXIT_PARSE, EXIT_REFERENCE, EXIT_INVARIANT, EXIT_RESOURCE = 0, 2, 3, 4, 5
BUDGET_ENV = "SIMPLICAT_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def _json_safe(v):
    if isinstance(v, dict):
        return {str(k): _json_safe(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_safe(x) for x in v]
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if hasattr(v, "to_dict"):
        return _json_safe(v.to_dict())
    return repr(v)


def _any_inconclusive(v) -> bool:
    if isinstance(v, dict):
        if v.get("status") == "inconclusive":
            return True
        return any(_any_inconclusive(x) for x in v.values())
    if isinstance(v, list):
        return any(_any_inconclusive(x) for x in v)
    return False


def _pick(ws: Workspace, ident: str | None, kind: str) -> str:
    return ident if ident is not None else ws.last_of(kind)


def _checked(ws: Workspace, ident: str):
    bad = ws.validate(ident)
    if bad:
        raise InvariantError(f"{ident!r} violates its invariants", bad)
    return ws.get(ident)


# -- commands ----------------------------------------------------------------

def cmd_validate(args) -> dict:
    ws = Workspace.load(*args.paths)
    results = []
    failed = False
    for ident in ws.order:
        bad = ws.validate(ident)
        failed |= bool(bad)
        results.append({"id": ident, "kind": ws.docs[ident].kind, "valid": not bad,
                        "violations": bad})
    out = {"documents": results, "valid": not failed}
    if failed:
        out["_exit"] = EXIT_INVARIANT
    return out


def cmd_nerve(args) -> dict:
    ws = Workspace.load(args.path)
    ident = _pick(ws, args.id, "category")
    C = _checked(ws, ident)
    X = nerve(C, args.truncate)
    return {"category": ident, "counts": list(X.counts()),
            "document": json.loads(sset_document(f"nerve_{ident}", X).to_json())}


def cmd_homology(args) -> dict:
    ws = Workspace.load(args.path)
    ident = _pick(ws, args.id, "sset")
    X = _checked(ws, ident)
    groups = homology(X, args.max_dim)
    return {"sset": ident, "counts": list(X.counts()),
            "homology": [{"degree": k, **H.to_dict(), "group": str(H)}
                         for k, H in enumerate(groups)]}


def cmd_check_sifted(args) -> dict:
    ws = Workspace.load(args.path)
    ident = _pick(ws, args.id, "category")
    C = _checked(ws, ident)
    ok, info = is_sifted(C)
    return {"category": ident, "sifted": ok, "witness": info}


def cmd_check_hsifted(args) -> dict:
    ws = Workspace.load(args.path)
    ident = _pick(ws, args.id, "category")
    C = _checked(ws, ident)
    ok, info = is_sifted(C)
    v = homotopy_sifted(C, args.level, args.budget)
    return {"category": ident, "sifted": ok, "sifted_witness": info, "verdict": v.to_dict()}


def cmd_hocolim(args) -> dict:
    ws = Workspace.load(args.path)
    ident = _pick(ws, args.id, "diagram")
    D = _checked(ws, ident)
    N = args.truncate
    if D.level < N:
        raise InsufficientTruncation(N, D.level)
    H = hocolim(D, N)
    n = min(args.level, N - 1)
    out = {"diagram": ident, "truncate": N, "counts": list(H.space.counts()),
           "document": json.loads(sset_document(f"hocolim_{ident}", H.space).to_json())}
    if all(X.size() == 1 for X in D.values.values()):
        out["nerve_comparison"] = certify_weq(nerve_projection(H), n, args.budget).to_dict()
    t = has_terminal(D.shape)
    if t is not None:
        f = value_inclusion(H, t, (D.shape.identities[t],))
        out["terminal_value_comparison"] = {
            "object": repr(t),
            "isomorphism": f.is_isomorphism(),
            **certify_weq(f, n, args.budget).to_dict(),
        }
    return out


def cmd_compare_products(args) -> dict:
    ws = Workspace.load(args.path1, args.path2)
    id1 = args.id1 or Workspace.load(args.path1).last_of("diagram")
    id2 = args.id2 or Workspace.load(args.path2).last_of("diagram")
    D1, D2 = _checked(ws, id1), _checked(ws, id2)
    N = args.truncate if args.truncate is not None else args.level + 1
    f, v = comparison_to_product(D1, D2, N, args.level, args.budget)
    return {"diagrams": [id1, id2], "truncate": N,
            "source_counts": list(f.source.counts()), "target_counts": list(f.target.counts()),
            "verdict": v.to_dict()}


def cmd_check_halg(args) -> dict:
    ws = Workspace.load(args.theory_path, args.algebra_path)
    ident = args.id or Workspace.load(args.algebra_path).last_of("algebra")
    A = ws.get(ident, "algebra")
    v = check_homotopy_algebra(A, args.level, args.budget)
    return {"algebra": ident, "theory": A.theory.name, "verdict": v.to_dict()}


# -- report emission -----------------------------------------------------------

def _human(report: dict) -> str:
    lines = [f"simplicat {report['toolkit_version']} (format {report['format_version']})",
             f"command: {' '.join(report['command'])}"]
    if "error" in report:
        lines.append(f"error [{report['error']['class']}]: {report['error']['message']}")
        for v in report["error"].get("violations", []):
            lines.append(f"  - {v}")
        return "\n".join(lines) + "\n"
    for key, value in report["result"].items():
        if key == "document":
            lines.append(f"{key}: <{value['kind']} {value['id']}>")
        elif isinstance(value, dict) and "status" in value:
            lines.append(f"{key}: {value['status'].upper()} at level {value['level']}")
            for k, x in value["evidence"].items():
                if k != "certificates":
                    lines.append(f"  {k}: {json.dumps(x, sort_keys=True)}")
        elif key == "homology":
            for H in value:
                lines.append(f"H{H['degree']} = {H['group']}")
        else:
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
    if report.get("inconclusive"):
        lines.append("note: at least one verdict is inconclusive (budget exhausted)")
    return "\n".join(lines) + "\n"


def emit(report: dict, fmt: str, out_path: str | None) -> None:
    if fmt == "machine":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        text = _human(report)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


COMMANDS = {
    "validate": cmd_validate,
    "nerve": cmd_nerve,
    "homology": cmd_homology,
    "check-sifted": cmd_check_sifted,
    "check-hsifted": cmd_check_hsifted,
    "hocolim": cmd_hocolim,
    "compare-products": cmd_compare_products,
    "check-halg": cmd_check_halg,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human")
    common.add_argument("--out", help="write the report to this file")
    common.add_argument("--budget", type=int, default=None,
                        help=f"Tietze move budget (default: ${BUDGET_ENV} or {DEFAULT_BUDGET})")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing")

    p = argparse.ArgumentParser(prog="simplicat", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"simplicat {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="load and validate documents")
    s.add_argument("paths", nargs="+")

    s = sub.add_parser("nerve", parents=[common], help="nerve of a category document")
    s.add_argument("path")
    s.add_argument("--id")
    s.add_argument("--truncate", type=int, default=3)

    s = sub.add_parser("homology", parents=[common], help="integral homology of a simplicial set")
    s.add_argument("path")
    s.add_argument("--id")
    s.add_argument("--max-dim", type=int, default=2)

    s = sub.add_parser("check-sifted", parents=[common], help="siftedness of a category")
    s.add_argument("path")
    s.add_argument("--id")

    s = sub.add_parser("check-hsifted", parents=[common], help="bounded homotopy siftedness")
    s.add_argument("path")
    s.add_argument("--id")
    s.add_argument("--level", type=int, default=2)

    s = sub.add_parser("hocolim", parents=[common], help="homotopy colimit of a diagram")
    s.add_argument("path")
    s.add_argument("--id")
    s.add_argument("--truncate", type=int, default=3)
    s.add_argument("--level", type=int, default=2)

    s = sub.add_parser("compare-products", parents=[common],
                       help="hocolim(D1 x D2) -> hocolim D1 x hocolim D2")
    s.add_argument("path1")
    s.add_argument("path2")
    s.add_argument("--id1")
    s.add_argument("--id2")
    s.add_argument("--level", type=int, default=2)
    s.add_argument("--truncate", type=int, default=None)

    s = sub.add_parser("check-halg", parents=[common], help="homotopy-algebra condition")
    s.add_argument("theory_path")
    s.add_argument("algebra_path")
    s.add_argument("--id")
    s.add_argument("--level", type=int, default=2)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    argv = list(sys.argv[1:] if argv is None else argv)
    report = {"command": argv, "toolkit_version": __version__, "format_version": FORMAT_VERSION}
    code = EXIT_OK
    start = time.perf_counter()
    try:
        if args.budget is None:
            args.budget = default_budget()
        result = COMMANDS[args.command](args)
        code = result.pop("_exit", EXIT_OK)
        report["result"] = _json_safe(result)
        # inconclusive verdicts still exit 0; flag them at top level
        report["inconclusive"] = _any_inconclusive(report["result"])
    except DocumentError as exc:
        code = exc.exit_code
        report["error"] = {"class": type(exc).__name__, "message": str(exc),
                           "violations": getattr(exc, "violations", [])}
    except ResourceLimit as exc:
        code = EXIT_RESOURCE
        report["error"] = {"class": "ResourceLimit", "message": str(exc)}
    except (InsufficientTruncation, DiagramError, TheoryError, SimplicialError) as exc:
        code = EXIT_INVARIANT
        report["error"] = {"class": type(exc).__name__, "message": str(exc)}
    except RecursionError:
        code = EXIT_RESOURCE
        report["error"] = {"class": "ResourceLimit", "message": "recursion limit reached"}
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 3)
    report["exit_code"] = code
    emit(report, args.format, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
