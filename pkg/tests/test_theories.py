import pytest

from simplicat.simpset import (
    DegenerateRef,
    boundary_simplex,
    pi0,
    standard_simplex,
)
from simplicat.theories import (
    CellGenerator,
    EnrichedTheory,
    ResourceLimit,
    TheoryError,
    assoc_endpoints,
    build_T0,
    build_T1,
    build_T2,
    check_homotopy_algebra,
    mapping_space,
    mismatch_algebra,
    op,
    point_algebra,
    strict_cube_algebra,
    trivial_theory,
    validate_theory,
    var,
    vertex_classes,
)


@pytest.fixture(scope="module")
def T1():
    return build_T1()


@pytest.fixture(scope="module")
def cube(T1):
    return strict_cube_algebra(T1)


def test_T0_and_T2_validate():
    for T in (build_T0(), build_T2()):
        assert validate_theory(T) == []
        assert all(H.counts()[1:] == (0, 0) for H in T.homs.values())


def test_T1_validates(T1):
    assert validate_theory(T1) == []


def test_trivial_theory():
    T = trivial_theory()
    assert validate_theory(T) == []
    assert T.homs[1].counts() == (1, 0, 0)
    assert T.homs[0].counts() == (0, 0, 0)


def test_missing_projection_is_reported():
    T = build_T0(arity_cap=2)
    del T.projections[(2, 1)]
    report = validate_theory(T)
    assert any("missing projection p1 of X2" in r for r in report)


def test_bad_projection_is_reported():
    T = build_T0(arity_cap=2)
    T.projections[(2, 1)] = op("m", var(1), var(2))
    assert validate_theory(T)


def test_cell_endpoints_are_checked():
    x1 = var(1)
    with pytest.raises(TheoryError):
        EnrichedTheory("bad", {"m": 2}, [CellGenerator("c", 1, op("m", x1, x1), x1)])
    with pytest.raises(TheoryError):
        EnrichedTheory("clash", {"m": 2}, [CellGenerator("m", 1, x1, x1)])


def test_associator_edge(T1):
    src, tgt = assoc_endpoints()
    H = T1.homs[3]
    cell = T1.normal_ref(("cell", "h", 1, (var(1), var(2), var(3))), 1)
    assert H.ref_dim(cell) == 1
    assert H.face(cell, 1) == DegenerateRef(T1.normalize(src))
    assert H.face(cell, 0) == DegenerateRef(T1.normalize(tgt))


def test_vertex_classes_match_strict_associativity(T1):
    # up to the weight cap, components of hom(X_n, X_1) in T1 are the
    # bracketing-free words of T2
    T2 = build_T2()
    for n in T1.objects:
        assert len(vertex_classes(T1, n)) == len(T2.homs[n].vertices())
        assert len(pi0(T1.homs[n])) == len(vertex_classes(T1, n))


def test_mapping_space_examples():
    Y = boundary_simplex(2, 2)
    M = mapping_space(standard_simplex(0, 2), Y, 1)
    assert M.counts() == Y.counts()[:2]
    M = mapping_space(standard_simplex(1, 2), standard_simplex(0, 2), 1)
    assert M.counts() == (1, 0)
    M = mapping_space(standard_simplex(1, 2), standard_simplex(1, 2), 1)
    assert M.counts()[0] == 3
    # the edges are the homotopies of the three order-preserving maps
    assert M.counts()[1] == 3


def test_mapping_space_budget():
    with pytest.raises(ResourceLimit):
        mapping_space(standard_simplex(2, 2), standard_simplex(2, 2), 2, budget=5)


def test_cube_algebra_certified(cube):
    assert cube.validate() == []
    v = check_homotopy_algebra(cube, 2)
    assert v.is_certified
    (w,) = v.evidence["witnesses"]
    assert w["present"] and w["source_matches"] and w["target_matches"]
    assert w["nondegenerate"]
    assert len(v.evidence["comparisons"]) == len(cube.theory.objects)


def test_cube_algebra_is_not_strictly_associative(cube):
    src, tgt = assoc_endpoints()
    a = cube.evaluate(3, (src,))
    b = cube.evaluate(3, (tgt,))
    assert a is not None and b is not None
    assert not a.equals(b)


def test_mismatch_algebra_refuted():
    A = mismatch_algebra()
    v = check_homotopy_algebra(A, 2)
    assert v.is_refuted


def test_point_algebra_certified():
    for T in (build_T0(), build_T2()):
        v = check_homotopy_algebra(point_algebra(T), 2)
        assert v.is_certified
