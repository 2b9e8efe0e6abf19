import pytest

from simplicat.corpus import corpus, join_semilattices, named_categories, poset_category
from simplicat.fincat import (
    comma_over_diagonal,
    has_binary_coproducts,
    has_terminal,
    is_filtered,
)
from simplicat.shape import aspherical_certificate, homotopy_sifted, is_sifted, reverify
from simplicat.verdict import Status

CATS = named_categories()
CORPUS = corpus()


def test_is_sifted_examples():
    assert is_sifted(CATS["reflexive_pair"])[0]
    ok, witness = is_sifted(CATS["discrete_2"])
    assert not ok
    assert witness["components"] == 0
    join = poset_category([0, 1], [(0, 1)])
    assert is_sifted(join)[0]
    assert not is_sifted(CATS["empty"])[0]


def test_aspherical_certificate_examples():
    v = aspherical_certificate(CATS["chain_3"], 3)
    assert v.is_certified and v.level == 3
    assert v.evidence["method"] == "initial object"
    assert aspherical_certificate(CATS["empty"], 2).is_refuted
    K = comma_over_diagonal(CATS["reflexive_pair"], "A", "A")
    assert len(K.objects) == 13
    v = aspherical_certificate(K, 2)
    assert v.is_refuted
    assert v.evidence["degree"] <= 2


def test_aspherical_without_shortcut():
    # the zigzag has no initial or terminal object but a contractible nerve
    v = aspherical_certificate(CATS["zigzag"], 2)
    assert v.is_certified and v.evidence["method"] == "nerve"
    v = aspherical_certificate(CATS["circle_poset"], 2)
    assert v.is_refuted and v.evidence["invariant"] == "H1"


def test_homotopy_sifted_examples():
    join = poset_category([0, 1], [(0, 1)])
    assert homotopy_sifted(join, 3).is_certified
    v = homotopy_sifted(CATS["reflexive_pair"], 2)
    assert v.is_refuted
    assert v.evidence["pair"] == ["A", "A"]
    assert homotopy_sifted(CATS["empty"], 2).is_refuted


def test_reflexive_pair_failure_is_in_degree_one():
    v = homotopy_sifted(CATS["reflexive_pair"], 2)
    failing = v.evidence["failing"]
    assert failing["invariant"] == "H1"
    assert failing["value"] == {"rank": 2, "torsion": []}
    assert reverify(CATS["reflexive_pair"], v, ("A", "A"))


def test_evidence_has_one_certificate_per_pair():
    C = CATS["diamond"]
    v = homotopy_sifted(C, 2)
    assert len(v.evidence["certificates"]) == len(C.objects) ** 2


@pytest.mark.parametrize("name", sorted(n for n, C in CORPUS.items() if has_terminal(C) is not None))
def test_terminal_object_shapes_certified_at_three(name):
    assert homotopy_sifted(CORPUS[name], 3).is_certified


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_implication_audit(name):
    C = CORPUS[name]
    v = homotopy_sifted(C, 2)
    if v.is_certified:
        assert is_sifted(C)[0]
    if is_filtered(C)[0]:
        assert not v.is_refuted
    ok, _ = has_binary_coproducts(C)
    if ok and C.objects:
        assert v.is_certified
        assert all(c["evidence"]["method"] == "initial object"
                   for c in v.evidence["certificates"])
    if v.is_refuted and "failing" in v.evidence:
        assert reverify(C, v, tuple(v.evidence["pair"]))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_monotone_in_level(name):
    C = CORPUS[name]
    v = homotopy_sifted(C, 2)
    if v.is_certified:
        for k in (0, 1):
            assert homotopy_sifted(C, k).is_certified


def test_join_semilattices_certified_at_three():
    for L in join_semilattices(4):
        v = homotopy_sifted(L, 3)
        assert v.status is Status.CERTIFIED


def test_verdict_serializes():
    v = homotopy_sifted(CATS["reflexive_pair"], 2)
    d = v.to_dict()
    assert d["status"] == "refuted" and d["level"] == 2


def test_nontrivial_group_is_not_sifted():
    # Z/2 acts freely on the four cospans, leaving two components
    v = homotopy_sifted(CATS["Z/2"], 2)
    assert v.is_refuted
    assert v.evidence["failing"]["invariant"] == "pi0"
    assert v.evidence["failing"]["value"] == 2
    assert not is_sifted(CATS["Z/2"])[0]
