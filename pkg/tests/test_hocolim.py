import pytest

from simplicat.corpus import corpus, named_categories
from simplicat.fincat import nerve, opposite
from simplicat.hocolim import (
    DiagramData,
    DiagramError,
    NatTransData,
    comparison_to_product,
    constant_diagram,
    constant_weight,
    coyoneda_map,
    distributivity_map,
    hocolim,
    hocolim_s,
    hocolim_weight,
    induced_between,
    induced_map,
    nerve_projection,
    over_diagram,
    point_diagram,
    representable_diagram,
    representable_weight,
    tensor_diagrams,
    tensor_projection,
    value_inclusion,
    weighted_colimit,
)
from simplicat.simpset import (
    boundary_simplex,
    homology,
    identity_map,
    pi0,
    standard_simplex,
    validate,
)
from simplicat.weq import certify_contractible, certify_weq

CATS = named_categories()
CORPUS = {k: C for k, C in corpus().items() if C.objects}


def test_weight_examples():
    W = hocolim_weight(CATS["terminal"], 3)
    assert W.values["*"].counts() == (1, 0, 0, 0)
    W = hocolim_weight(CATS["arrow"], 3)
    assert W.values[0].counts() == (2, 1, 0, 0)
    assert W.values[1].counts() == (1, 0, 0, 0)
    W = hocolim_weight(CATS["discrete_2"], 3)
    assert all(X.counts() == (1, 0, 0, 0) for X in W.values.values())


@pytest.mark.parametrize("name", ["reflexive_pair", "span", "Z/2", "left_zero", "diamond"])
def test_weights_and_diagrams_are_functors(name):
    C = CATS[name]
    assert hocolim_weight(C, 3).validate() == []
    assert over_diagram(C, 3).validate() == []
    for a in C.objects:
        assert representable_diagram(C, a, 3).validate() == []
        assert representable_weight(C, a, 3).validate() == []


def test_broken_diagram_is_reported():
    C = CATS["arrow"]
    D = point_diagram(C, 2)
    values = dict(D.values)
    values[1] = boundary_simplex(2, 2)
    bad = DiagramData(C, values, D.actions)
    assert bad.validate()


def test_coyoneda_examples():
    C = CATS["reflexive_pair"]
    for d0 in C.objects:
        D = over_diagram(C, 3)
        colim = weighted_colimit(representable_weight(C, d0, 3), D)
        assert coyoneda_map(colim, d0).is_isomorphism()


def test_constant_weight_gives_ordinary_colimit():
    for name in ("span", "zigzag", "reflexive_pair"):
        C = CATS[name]
        colim = weighted_colimit(constant_weight(C, 2), point_diagram(C, 2))
        assert colim.space.counts() == (1, 0, 0)
    C = CATS["discrete_2"]
    colim = weighted_colimit(constant_weight(C, 2), point_diagram(C, 2))
    assert colim.space.counts() == (2, 0, 0)


def test_shape_mismatch():
    with pytest.raises(DiagramError):
        weighted_colimit(hocolim_weight(CATS["arrow"], 2), point_diagram(CATS["span"], 2))
    with pytest.raises(DiagramError):
        tensor_diagrams(point_diagram(CATS["arrow"], 2), point_diagram(CATS["span"], 2))


def test_hocolim_examples():
    T = CATS["terminal"]
    D = constant_diagram(T, boundary_simplex(3, 3))
    H = hocolim(D, 3)
    f = value_inclusion(H, "*", (T.identities["*"],))
    assert f.is_isomorphism()
    S = hocolim_s(point_diagram(CATS["span"], 3), 3)
    assert certify_contractible(S, 2).is_certified


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_constant_point_hocolim_vs_nerve(name):
    C = CORPUS[name]
    H = hocolim(point_diagram(C, 3), 3)
    assert validate(H.space) == []
    assert H.coend_violations() == []
    v = certify_weq(nerve_projection(H), 2)
    assert v.is_certified
    # and the same invariants as the nerve of C itself
    assert homology(H.space, 2) == homology(nerve(C, 3), 2)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_coyoneda_everywhere(name):
    C = CORPUS[name]
    D = over_diagram(C, 2)
    for d0 in C.objects:
        colim = weighted_colimit(representable_weight(C, d0, 2), D)
        assert coyoneda_map(colim, d0).is_isomorphism()


@pytest.mark.parametrize("name", ["reflexive_pair", "span", "Z/2", "left_zero"])
def test_coend_relations(name):
    C = CATS[name]
    for D in (over_diagram(C, 2), representable_diagram(C, C.objects[0], 2)):
        assert hocolim(D, 2).coend_violations() == []


def test_descend_rejects_non_cocone():
    C = CATS["arrow"]
    H = hocolim(representable_diagram(C, 0, 2), 2)
    X = H.space
    # send everything over object 1 to the wrong place: legs disagree on the relation
    cocone = {d: H.inclusions[d] for d in C.objects}
    ok = H.descend(cocone)
    assert ok.is_isomorphism()
    from simplicat.simpset import SimplicialError, constant_map
    two = standard_simplex(1, 2)
    bad = {0: constant_map(H.products[0], two, (0,)), 1: constant_map(H.products[1], two, (1,))}
    with pytest.raises(SimplicialError):
        H.descend(bad)
    assert X.level == 2


def test_tensor_sizes():
    C = CATS["reflexive_pair"]
    D = representable_diagram(C, "A", 3)
    T = tensor_diagrams(D, D)
    assert T.values["A"].counts()[0] == 9
    assert T.values["B"].counts()[0] == 4
    assert T.validate() == []
    P = point_diagram(C, 3)
    TP = tensor_diagrams(D, P)
    for d in C.objects:
        assert TP.values[d].counts() == D.values[d].counts()


def test_induced_maps():
    C = CATS["split_idempotent"]
    D = over_diagram(C, 3)
    ident = NatTransData(D, D, {d: identity_map(D.values[d]) for d in C.objects})
    assert ident.validate() == []
    f = induced_map(ident, 3)
    assert f.is_isomorphism()
    assert all(img.base == x for x, img in f.assignment.items())
    D2 = over_diagram(C, 2)
    T = tensor_diagrams(D2, D2)
    for side in (0, 1):
        t = tensor_projection(T, D2, side)
        assert t.validate() == []
        g = induced_map(t, 2)
        assert g.validate() == []


def test_induced_maps_compose():
    C = CATS["span"]
    D = over_diagram(C, 2)
    T = tensor_diagrams(D, D)
    TT = tensor_diagrams(T, D)
    t1 = tensor_projection(TT, T, 0)
    t2 = tensor_projection(T, D, 0)
    comp = NatTransData(TT, D, {d: t2.components[d].compose(t1.components[d])
                                for d in C.objects})
    hTT, hT, hD = hocolim(TT, 2), hocolim(T, 2), hocolim(D, 2)
    lhs = induced_between(comp, hTT, hD)
    rhs = induced_between(t2, hT, hD).compose(induced_between(t1, hTT, hT))
    assert lhs.equals(rhs)


def test_comparison_examples():
    T = CATS["terminal"]
    f, v = comparison_to_product(point_diagram(T, 3), point_diagram(T, 3), 3)
    assert f.is_isomorphism() and v.is_certified
    join = CATS["arrow"]
    _, v = comparison_to_product(point_diagram(join, 3), point_diagram(join, 3), 3)
    assert v.is_certified and v.level == 2


def test_comparison_refuted_on_reflexive_pair():
    C = CATS["reflexive_pair"]
    D = representable_diagram(C, "A", 3)
    f, v = comparison_to_product(D, D, 3)
    assert v.is_refuted
    assert v.evidence["degree"] <= 2
    # the source has the homotopy type of the (A, A) comma category
    assert len(pi0(f.source)) == 1


def test_comparison_certified_on_discrete_target():
    C = CATS["discrete_2"]
    D = representable_diagram(C, 0, 3)
    f, v = comparison_to_product(D, D, 3)
    assert v.is_certified


@pytest.mark.parametrize("left,right", [
    ("arrow", "span"),
    ("discrete_2", "arrow"),
    ("Z/2", "arrow"),
    ("split_idempotent", "cospan"),
])
def test_distributivity_over_distinct_shapes(left, right):
    C1, C2 = CATS[left], CATS[right]
    for D1, D2 in [
        (point_diagram(C1, 3), point_diagram(C2, 3)),
        (representable_diagram(C1, C1.objects[0], 3), over_diagram(C2, 3)),
    ]:
        f, v = distributivity_map(D1, D2, 3)
        assert f.validate() == []
        assert v.is_certified


def test_weight_of_opposite_is_over_diagram():
    C = CATS["span"]
    W = hocolim_weight(opposite(C), 2)
    D = over_diagram(C, 2)
    assert set(W.values) == set(D.values)
