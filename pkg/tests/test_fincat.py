import pytest

from simplicat.corpus import (
    corpus,
    join_semilattices,
    named_categories,
    poset_category,
    reflexive_pair,
)
from simplicat.fincat import (
    FinCat,
    FunctorData,
    comma_over_diagonal,
    comma_under_functor,
    connected_components,
    diagonal,
    has_binary_coproducts,
    has_initial,
    has_terminal,
    identity_functor,
    is_filtered,
    is_final_functor,
    nerve,
    nerve_map,
    opposite,
    product_cat,
    projection_functor,
    under_category,
    validate_category,
)
from simplicat.simpset import homology, pi1_presentation, tietze_trivial, validate

CATS = named_categories()


def test_terminal_is_valid():
    assert validate_category(CATS["terminal"]) == []


def test_reflexive_pair_closure():
    R = reflexive_pair()
    assert validate_category(R) == []
    assert len(R.morphisms) == 7
    assert len(R.hom("A", "A")) == 3
    assert len(R.hom("A", "B")) == 2
    assert len(R.hom("B", "A")) == 1
    assert len(R.hom("B", "B")) == 1


def test_broken_unit_is_reported():
    C = CATS["arrow"]
    comp = dict(C.composition)
    f = (0, 1)
    comp[(f, C.identities[0])] = C.identities[1]
    broken = FinCat(C.objects, C.morphisms, C.identities, comp)
    assert validate_category(broken)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_corpus_categories_are_valid(name):
    assert validate_category(corpus()[name]) == []


def test_opposite():
    for C in CATS.values():
        assert opposite(opposite(C)).same_as(C)
    T = CATS["terminal"]
    assert opposite(T).same_as(T)
    A = opposite(CATS["arrow"])
    assert A.morphisms[(0, 1)] == (1, 0)


def test_product_cat():
    A = CATS["arrow"]
    P = product_cat(A, A)
    assert len(P.morphisms) == 9
    assert len(P.objects) == 4
    assert validate_category(P) == []
    TC = product_cat(CATS["terminal"], CATS["reflexive_pair"])
    assert len(TC.objects) == 2 and len(TC.morphisms) == 7


def test_diagonal():
    T = CATS["terminal"]
    dT = diagonal(T)
    assert len(dT.target.objects) == 1 and len(dT.on_morphisms) == 1
    R = CATS["reflexive_pair"]
    dR = diagonal(R)
    for side in (0, 1):
        pr = projection_functor(dR.target, R, side)
        composite = pr.compose(dR)
        assert composite.on_objects == identity_functor(R).on_objects
        assert composite.on_morphisms == identity_functor(R).on_morphisms
    d2 = diagonal(CATS["discrete_2"])
    assert len(set(d2.on_objects.values())) == 2
    assert len(d2.target.objects) == 4


def test_nerve_examples():
    assert nerve(CATS["terminal"], 3).counts() == (1, 0, 0, 0)
    assert nerve(CATS["arrow"], 3).counts() == (2, 1, 0, 0)
    assert nerve(CATS["idempotent"], 3).counts() == (1, 1, 1, 1)


@pytest.mark.parametrize("name", sorted(CATS))
def test_nerves_validate(name):
    assert validate(nerve(CATS[name], 3)) == []


def test_nerve_functoriality():
    R = CATS["reflexive_pair"]
    F = diagonal(R)
    f = nerve_map(F, nerve(R, 3), nerve(F.target, 3))
    assert f.validate() == []
    P = CATS["arrow_squared"]
    for side in (0, 1):
        pr = projection_functor(P, CATS["arrow"], side)
        assert nerve_map(pr, nerve(P, 3), nerve(CATS["arrow"], 3)).validate() == []


def test_nerve_of_opposite_is_reversed():
    for name in ("reflexive_pair", "span", "left_zero", "Z/3"):
        C = CATS[name]
        X, Y = nerve(C, 3), nerve(opposite(C), 3)
        assert X.counts() == Y.counts()
        # reversal: the chain (f1..fk) of C is the chain (fk..f1) of C^op
        for k in range(1, 4):
            assert {tuple(reversed(x)) for x in X.cells[k]} == set(Y.cells[k])


def test_comma_examples():
    assert comma_over_diagonal(CATS["discrete_2"], 0, 1).objects == ()
    K = comma_over_diagonal(CATS["reflexive_pair"], "A", "A")
    assert len(K.objects) == 13
    assert sum(1 for o in K.objects if o[0] == "A") == 9
    assert validate_category(K) == []
    K = comma_over_diagonal(CATS["arrow"], 0, 0)
    assert len(K.objects) == 2
    assert sum(1 for f in K.morphisms if not K.is_identity(f)) == 1
    assert has_initial(K) is not None


def test_comma_agrees_with_general_comma():
    for name in ("reflexive_pair", "span", "Z/2", "diamond"):
        C = CATS[name]
        D = diagonal(C)
        for d1 in C.objects:
            for d2 in C.objects:
                K1 = comma_over_diagonal(C, d1, d2)
                K2 = comma_under_functor(D, (d1, d2))
                assert len(K1.objects) == len(K2.objects)
                assert len(K1.morphisms) == len(K2.morphisms)
                assert len(connected_components(K1)) == len(connected_components(K2))


def test_under_category_examples():
    U = under_category(CATS["terminal"], "*")
    assert len(U.objects) == 1
    U = under_category(CATS["arrow"], 0)
    assert len(U.objects) == 2
    assert has_initial(U) == CATS["arrow"].identities[0]
    assert len(under_category(CATS["discrete_2"], 0).objects) == 1


def test_initial_and_coproducts():
    join = poset_category([0, 1], [(0, 1)])
    ok, witness = has_binary_coproducts(join)
    assert ok and witness[(0, 1)][0] == 1
    # hom(B, A) = {m} and hom(B, B) = {id}, so B is initial; A is not
    assert has_initial(CATS["reflexive_pair"]) == "B"
    assert has_initial(CATS["parallel_pair"]) is None
    assert has_initial(CATS["discrete_2"]) is None
    assert has_initial(CATS["terminal"]) == "*"
    assert not has_binary_coproducts(CATS["discrete_2"])[0]


def test_filtered():
    for name, C in corpus().items():
        if has_terminal(C) is not None:
            assert is_filtered(C)[0], name
    assert not is_filtered(CATS["discrete_2"])[0]
    ok, info = is_filtered(CATS["reflexive_pair"])
    assert not ok and info["reason"] == "no coequalizing arrow"


def test_final_functor():
    for C in CATS.values():
        if C.objects:
            assert is_final_functor(identity_functor(C))[0]
    assert not is_final_functor(diagonal(CATS["discrete_2"]))[0]
    assert is_final_functor(diagonal(CATS["reflexive_pair"]))[0]


def test_initial_object_nerves_are_contractible():
    for name, C in corpus().items():
        if has_initial(C) is None:
            continue
        X = nerve(C, 3)
        H = homology(X, 2)
        assert H[1].is_trivial and H[2].is_trivial, name
        P = pi1_presentation(X, X.vertices()[0])
        assert tietze_trivial(P, 10_000).is_certified, name


def test_join_semilattice_counts():
    counts = {}
    for L in join_semilattices(5):
        counts[len(L.objects)] = counts.get(len(L.objects), 0) + 1
        assert has_binary_coproducts(L)[0]
    # number of lattices up to isomorphism on n+1 elements, bottom adjoined
    assert counts == {1: 1, 2: 1, 3: 2, 4: 5, 5: 15}


def test_functor_validation_catches_bad_map():
    A = CATS["arrow"]
    F = FunctorData(A, A, {0: 1, 1: 0}, {m: m for m in A.morphisms})
    assert F.validate()


def test_corpus_size():
    C = corpus()
    assert len(C) >= 30
    assert any(name.startswith("random_poset") for name in C)
    assert any(name.startswith("random_monoid") for name in C)
