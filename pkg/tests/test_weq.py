import pytest

from simplicat.corpus import corpus, named_categories
from simplicat.fincat import nerve
from simplicat.simpset import (
    DegenerateRef,
    InsufficientTruncation,
    SimplicialMap,
    boundary_simplex,
    constant_map,
    coproduct,
    identity_map,
    quotient,
    standard_simplex,
)
from simplicat.weq import certify_contractible, certify_weq, map_to_point

CATS = named_categories()


def test_contractible_examples():
    assert certify_contractible(standard_simplex(2, 2), 1).is_certified
    v = certify_contractible(boundary_simplex(2, 2), 1)
    assert v.is_refuted
    assert v.evidence["invariant"] == "H1" and v.evidence["value"]["rank"] == 1
    v = certify_contractible(nerve(CATS["idempotent"], 3), 2)
    assert v.is_certified and v.level == 2


def test_contractible_requires_truncation():
    with pytest.raises(InsufficientTruncation):
        certify_contractible(standard_simplex(2, 2), 2)


def test_weq_examples():
    X = boundary_simplex(3, 3)
    assert certify_weq(identity_map(X), 2).is_certified
    D1 = standard_simplex(1, 3)
    assert certify_weq(map_to_point(D1), 2).is_certified
    S = boundary_simplex(2, 2)
    f = constant_map(standard_simplex(0, 2), S, (0,))
    v = certify_weq(f, 1)
    assert v.is_refuted and v.evidence["degree"] == 1


def test_weq_pi0_mismatch():
    two = coproduct(standard_simplex(0, 2), standard_simplex(0, 2))
    v = certify_weq(map_to_point(two), 1)
    assert v.is_refuted and v.evidence["invariant"] == "pi0"


def test_weq_torsion_detected():
    X = nerve(CATS["Z/2"], 3)
    v = certify_weq(map_to_point(X), 2)
    assert v.is_refuted


def test_weq_non_simply_connected_is_inconclusive():
    S = boundary_simplex(2, 2)
    # wrap the triangle once around the one-vertex circle: a homology
    # isomorphism between spaces whose pi_1 cannot be certified trivial
    C, _ = quotient(standard_simplex(1, 2), [((0,), (1,))])
    pt, loop = C.vertices()[0], C.cells[1][0]
    assignment = {v: DegenerateRef(pt) for v in S.vertices()}
    for e in S.cells[1]:
        assignment[e] = DegenerateRef(loop) if e == (0, 1) else DegenerateRef(pt, (0,))
    f = SimplicialMap(S, C, assignment)
    assert f.validate() == []
    v = certify_weq(f, 1)
    assert v.is_inconclusive


@pytest.mark.parametrize("name", sorted(n for n, C in corpus().items() if C.objects))
def test_contractible_iff_map_to_point(name):
    X = nerve(corpus()[name], 3)
    a = certify_contractible(X, 2)
    b = certify_weq(map_to_point(X), 2)
    if a.is_certified or b.is_certified:
        assert a.status == b.status
    if a.is_refuted and len(X.vertices()) and a.evidence["invariant"] != "pi0":
        assert b.is_refuted


def test_isomorphisms_certified_at_all_levels():
    for name in ("reflexive_pair", "Z/3", "circle_poset"):
        X = nerve(CATS[name], 3)
        for n in range(3):
            assert certify_weq(identity_map(X), n).is_certified


def test_two_out_of_three_audit():
    # f: point -> Delta_2 -> point; f and g o f certified, so g must not be refuted
    pt = standard_simplex(0, 3)
    D2 = standard_simplex(2, 3)
    f = constant_map(pt, D2, (1,))
    g = map_to_point(D2)
    assert certify_weq(f, 2).is_certified
    assert certify_weq(g.compose(f), 2).is_certified
    assert not certify_weq(g, 2).is_refuted
    for name in ("idempotent", "chain_4", "diamond"):
        X = nerve(CATS[name], 3)
        f = constant_map(pt, X, X.vertices()[0])
        g = map_to_point(X)
        if certify_weq(f, 2).is_certified:
            assert not certify_weq(g, 2).is_refuted


def test_refutation_evidence_recomputes():
    from simplicat.simpset import mapping_cone
    S = boundary_simplex(2, 2)
    f = constant_map(standard_simplex(0, 2), S, (0,))
    v = certify_weq(f, 1)
    k = v.evidence["degree"]
    assert mapping_cone(f, 2).homology(k).to_dict() == v.evidence["value"]


# -- maps into products: the Alexander-Whitney route -----------------------

def _materialized(f):
    from simplicat.simpset import SimplicialMap, TruncatedSSet
    P = f.target
    Q = TruncatedSSet(P.level, P.cells, P.faces)
    return SimplicialMap(f.source, Q, f.assignment)


def _diagonal(X):
    from simplicat.simpset import pair_maps
    return pair_maps(identity_map(X), identity_map(X))


def _key(v):
    return v.status, v.evidence.get("invariant"), v.evidence.get("value")


@pytest.mark.parametrize("X", [
    standard_simplex(2, 3),
    boundary_simplex(2, 3),
    boundary_simplex(3, 3),
    nerve(CATS["Z/2"], 3),
], ids=["simplex", "circle", "sphere", "rp"])
def test_product_route_agrees_with_generic(X):
    f = _diagonal(X)
    a = certify_weq(f, 2)
    b = certify_weq(_materialized(f), 2)
    assert a.status == b.status
    if not a.is_certified:
        assert _key(a) == _key(b)
    if a.is_certified:
        assert a.evidence["method"] in ("isomorphism", "mapping cone via Alexander-Whitney")


def test_product_route_on_comparison_maps():
    from simplicat.hocolim import comparison_to_product, point_diagram, representable_diagram
    for name, d in [("reflexive_pair", "A"), ("span", "a"), ("Z/2", "*")]:
        C = CATS[name]
        for D in (representable_diagram(C, d, 3), point_diagram(C, 3)):
            f, v = comparison_to_product(D, D, 3)
            w = certify_weq(_materialized(f), 2)
            assert v.status == w.status
            if v.is_refuted:
                assert _key(v) == _key(w)


def test_tensor_complex_is_a_complex():
    from helpers import sparse_square_is_zero
    from simplicat.simpset import chain_complex, homology, product, tensor_complex
    X, Y = boundary_simplex(2, 3), nerve(CATS["Z/2"], 3)
    T = tensor_complex(X, Y, 3)
    assert sparse_square_is_zero(T)
    assert sparse_square_is_zero(chain_complex(X, 3))
    # Kunneth: H(S1 x RP) through degree 2
    got = [T.homology(k) for k in range(3)]
    assert got == homology(product(X, Y), 2)
