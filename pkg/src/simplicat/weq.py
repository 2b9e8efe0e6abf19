"""Bounded certification of contractibility and weak equivalences.

A certificate at level ``n`` means: connected components match, integral
homology agrees through degree ``n`` (via the induced map), and every
component is simply connected by an explicit Tietze reduction.  For
simply connected spaces this gives n-connectedness of the map by the
Hurewicz and Whitehead theorems.  Nothing stronger is claimed.
"""
from __future__ import annotations

from .simpset import (
    InsufficientTruncation,
    ProductSSet,
    SimplicialMap,
    TruncatedSSet,
    component_of,
    alexander_whitney_matrix,
    chain_complex,
    components,
    cone_complex,
    homology,
    mapping_cone,
    pi0_map,
    pi1_presentation,
    standard_simplex,
    tensor_basis,
    tensor_complex,
    tietze_trivial,
)
from .simpset.core import constant_map
from .verdict import Verdict

DEFAULT_BUDGET = 10_000


def _check_level(n: int, *spaces: TruncatedSSet) -> None:
    level = min(X.level for X in spaces)
    if n > level - 1:
        raise InsufficientTruncation(n + 1, level)


def _simply_connected(X: TruncatedSSet, budget: int) -> tuple[bool | None, list]:
    """True if every component is Tietze-certified, False if one is refuted."""
    results = []
    outcome: bool | None = True
    for comp in components(X):
        v = tietze_trivial(pi1_presentation(X, comp[0]), budget)
        results.append({"basepoint": repr(comp[0]), **v.to_dict()})
        if v.is_refuted:
            outcome = False
        elif v.is_inconclusive and outcome:
            outcome = None
    return outcome, results


def certify_contractible(X: TruncatedSSet, n: int, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Certify that ``X`` is n-connected (weakly contractible through level n)."""
    _check_level(n, X)
    if X.is_empty():
        return Verdict.refuted(n, invariant="pi0", value=0, degree=0)
    comps = components(X)
    if len(comps) != 1:
        return Verdict.refuted(n, invariant="pi0", value=len(comps), degree=0)
    groups = homology(X, n) if n >= 1 else []
    for k, H in enumerate(groups):
        if k and not H.is_trivial:
            return Verdict.refuted(n, invariant=f"H{k}", value=H.to_dict(), degree=k)
    if n == 0:
        return Verdict.certified(0, components=1)
    v = tietze_trivial(pi1_presentation(X, comps[0][0]), budget)
    if v.is_refuted:
        return Verdict.refuted(n, invariant="pi1", value=v.evidence["value"], degree=1)
    evidence = {
        "components": 1,
        "homology": [H.to_dict() for H in groups],
        "pi1": v.to_dict(),
    }
    if v.is_inconclusive:
        return Verdict.inconclusive(n, reason="pi1 triviality search exhausted", **evidence)
    return Verdict.certified(n, **evidence)


def certify_weq(f: SimplicialMap, n: int, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Certify that ``f`` is a weak equivalence through level ``n``.

    Homology is compared through the mapping cone: ``H_k(cone) = 0`` for
    ``k <= n`` means ``f_*`` is an isomorphism below ``n`` and onto in degree
    ``n``; a surjection between isomorphic finitely generated abelian groups
    is an isomorphism, which settles degree ``n`` exactly.
    """
    X, Y = f.source, f.target
    _check_level(n, X, Y)
    if f.is_isomorphism():
        return Verdict.certified(n, method="isomorphism")
    if isinstance(Y, ProductSSet):
        return _certify_into_product(f, n, budget)
    cx, cy = components(X), components(Y)
    pmap = pi0_map(f)
    if len(cx) != len(cy) or len(set(pmap.values())) != len(cy):
        return Verdict.refuted(n, invariant="pi0", value=[len(cx), len(cy)], degree=0)
    if n == 0:
        return Verdict.certified(0, method="pi0 bijection")
    C = mapping_cone(f, n + 1)
    for k in range(n + 1):
        H = C.homology(k)
        if not H.is_trivial:
            return Verdict.refuted(n, invariant=f"cone H{k}", value=H.to_dict(), degree=k)
    hx, hy = homology(X, n), homology(Y, n)
    if hx[n] != hy[n]:
        return Verdict.refuted(n, invariant=f"H{n}", value=[hx[n].to_dict(), hy[n].to_dict()],
                               degree=n)
    sx, ex = _simply_connected(X, budget)
    sy, ey = _simply_connected(Y, budget)
    evidence = {
        "method": "mapping cone",
        "homology": [H.to_dict() for H in hy],
        "pi1_source": ex,
        "pi1_target": ey,
    }
    if sx and sy:
        return Verdict.certified(n, **evidence)
    return Verdict.inconclusive(n, reason="pi1 not certified trivial on every component", **evidence)


def _certify_into_product(f: SimplicialMap, n: int, budget: int) -> Verdict:
    """:func:`certify_weq` for a map into ``Y1 x Y2`` without listing the product.

    Components and simple connectivity of a product are read off the
    factors.  Homology goes through the Alexander-Whitney map into
    ``C Y1 (x) C Y2``, a natural chain homotopy equivalence on normalized
    chains, so its cone is acyclic exactly when that of ``f`` is.
    """
    X, P = f.source, f.target
    Y1, Y2 = P.left, P.right
    cx = components(X)
    c1, c2 = components(Y1), components(Y2)
    where1 = {v: i for i, c in enumerate(c1) for v in c}
    where2 = {v: i for i, c in enumerate(c2) for v in c}
    hit = set()
    for comp in cx:
        a, b = P.split(f.assignment[comp[0]])
        hit.add((where1[a.base], where2[b.base]))
    if len(cx) != len(c1) * len(c2) or len(hit) != len(cx):
        return Verdict.refuted(n, invariant="pi0", value=[len(cx), len(c1) * len(c2)], degree=0)
    if n == 0:
        return Verdict.certified(0, method="pi0 bijection")
    top = n + 1
    T = tensor_complex(Y1, Y2, top)
    index = [{b: i for i, b in enumerate(tensor_basis(Y1, Y2, k))} for k in range(top + 1)]
    phi = {k: alexander_whitney_matrix(f, k, index[k]) for k in range(top)}
    C = cone_complex(chain_complex(X, top - 1), T, phi, top)
    for k in range(n + 1):
        H = C.homology(k)
        if not H.is_trivial:
            return Verdict.refuted(n, invariant=f"cone H{k}", value=H.to_dict(), degree=k)
    hx = homology(X, n)
    hy = [T.homology(k) for k in range(n + 1)]
    if hx[n] != hy[n]:
        return Verdict.refuted(n, invariant=f"H{n}", value=[hx[n].to_dict(), hy[n].to_dict()],
                               degree=n)
    sx, ex = _simply_connected(X, budget)
    s1, e1 = _simply_connected(Y1, budget)
    s2, e2 = _simply_connected(Y2, budget)
    evidence = {
        "method": "mapping cone via Alexander-Whitney",
        "homology": [H.to_dict() for H in hy],
        "pi1_source": ex,
        "pi1_target": e1 + e2,
    }
    if sx and s1 and s2:
        return Verdict.certified(n, **evidence)
    return Verdict.inconclusive(n, reason="pi1 not certified trivial on every component", **evidence)


def map_to_point(X: TruncatedSSet) -> SimplicialMap:
    pt = standard_simplex(0, X.level)
    return constant_map(X, pt, (0,))


__all__ = ["certify_contractible", "certify_weq", "map_to_point", "component_of", "DEFAULT_BUDGET"]
