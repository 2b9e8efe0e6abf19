"""Siftedness and bounded homotopy-siftedness of finite categories."""
from __future__ import annotations

from itertools import product as iproduct

from .fincat import (
    FinCat,
    comma_over_diagonal,
    connected_components,
    has_initial,
    has_terminal,
    nerve,
)
from .simpset import components, homology, pi1_presentation, tietze_trivial
from .verdict import Status, Verdict
from .weq import DEFAULT_BUDGET, certify_contractible

DEFAULT_LEVEL = 2


def is_sifted(C: FinCat) -> tuple[bool, dict]:
    """Non-empty with every ``(d1, d2) | Diagonal`` non-empty and connected."""
    if not C.objects:
        return False, {"reason": "empty category"}
    for d1, d2 in iproduct(C.objects, repeat=2):
        n = len(connected_components(comma_over_diagonal(C, d1, d2)))
        if n != 1:
            return False, {"pair": [d1, d2], "components": n}
    return True, {}


def aspherical_certificate(C: FinCat, n: int = DEFAULT_LEVEL,
                           budget: int = DEFAULT_BUDGET) -> Verdict:
    """Certify that the nerve of ``C`` is n-connected.

    Categories with an initial or terminal object are certified directly;
    otherwise the nerve truncated at ``n + 1`` is examined.
    """
    a = has_initial(C)
    if a is not None:
        return Verdict.certified(n, method="initial object", witness=a)
    a = has_terminal(C)
    if a is not None:
        return Verdict.certified(n, method="terminal object", witness=a)
    if not C.objects:
        return Verdict.refuted(n, invariant="pi0", value=0, degree=0)
    v = certify_contractible(nerve(C, n + 1), n, budget)
    return Verdict(v.status, n, {"method": "nerve", "objects": len(C.objects), **v.evidence})


def homotopy_sifted(C: FinCat, n: int = DEFAULT_LEVEL, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Bounded homotopy siftedness: every ``(d1, d2) | Diagonal`` is n-connected."""
    if not C.objects:
        return Verdict.refuted(n, reason="empty category")
    certificates = []
    refuted = None
    inconclusive = False
    for d1, d2 in iproduct(C.objects, repeat=2):
        v = aspherical_certificate(comma_over_diagonal(C, d1, d2), n, budget)
        certificates.append({"pair": [d1, d2], **v.to_dict()})
        if v.is_refuted and refuted is None:
            refuted = (d1, d2, v)
        inconclusive |= v.is_inconclusive
    if refuted is not None:
        d1, d2, v = refuted
        return Verdict.refuted(n, pair=[d1, d2], failing=v.evidence,
                               certificates=certificates)
    if inconclusive:
        return Verdict.inconclusive(n, certificates=certificates)
    return Verdict.certified(n, certificates=certificates)


def reverify(C: FinCat, verdict: Verdict, pair: tuple) -> bool:
    """Recompute the invariant cited by a refutation of ``homotopy_sifted``."""
    if verdict.status is not Status.REFUTED:
        return False
    failing = verdict.evidence["failing"]
    K = comma_over_diagonal(C, *pair)
    X = nerve(K, verdict.level + 1)
    inv = failing["invariant"]
    if inv == "pi0":
        return len(components(X)) == failing["value"]
    if inv == "pi1":
        ab = pi1_presentation(X, X.vertices()[0]).abelianization()
        return ab.to_dict() == failing["value"] and tietze_trivial(
            pi1_presentation(X, X.vertices()[0]), 1).is_refuted
    k = int(inv[1:])
    return homology(X, k)[k].to_dict() == failing["value"]
