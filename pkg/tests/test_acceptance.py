"""The ten acceptance criteria, one test each, with their time limits.

Every test records a PASS/FAIL line that is printed at the end of the run.
"""
import json
import random
import time
from contextlib import contextmanager

import pytest
import sympy

from conftest import ACCEPTANCE
from helpers import dense_boundaries, matmul, sparse_square_is_zero
from oracles import homology_oracle
from simplicat import cli
from simplicat.corpus import corpus, cyclic_monoid, join_semilattices, named_categories
from simplicat.fincat import (
    comma_over_diagonal,
    has_initial,
    has_terminal,
    is_filtered,
    nerve,
    opposite,
)
from simplicat.hocolim import (
    comparison_to_product,
    coyoneda_map,
    hocolim,
    nerve_projection,
    over_diagram,
    point_diagram,
    representable_diagram,
    representable_weight,
    weighted_colimit,
)
from simplicat.shape import homotopy_sifted, is_sifted
from simplicat.simpset import (
    AbelianGroup,
    DegenerateRef,
    boundary_simplex,
    chain_complex,
    homology,
    opposite_sset,
    pi1_presentation,
    product,
    quotient,
    smith_normal_form,
    standard_simplex,
    tietze_trivial,
)
from simplicat.theories import (
    build_T1,
    check_homotopy_algebra,
    mismatch_algebra,
    strict_cube_algebra,
    validate_theory,
)
from simplicat.weq import certify_weq

CATS = named_categories()
CORPUS = corpus()


@contextmanager
def criterion(num, title, limit=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        secs = time.perf_counter() - start
        if ok and limit is not None and secs >= limit:
            ok = False
        ACCEPTANCE.append((num, title, ok, secs))
        print(f"criterion {num}: {'PASS' if ok else 'FAIL'} ({secs:.1f} s)")
    assert limit is None or secs < limit, f"criterion {num} took {secs:.1f} s (limit {limit} s)"


def test_criterion_01_siftedness_separation():
    with criterion(1, "reflexive pair: sifted, not homotopy sifted", 60):
        R = CATS["reflexive_pair"]
        assert is_sifted(R)[0]
        v = homotopy_sifted(R, 2)
        assert v.is_refuted
        assert v.evidence["pair"] == ["A", "A"]
        assert len(comma_over_diagonal(R, "A", "A").objects) == 13
        failing = v.evidence["failing"]
        assert failing["degree"] <= 2
        assert failing["objects"] == 13
        # a nonzero homology group in low degree
        assert failing["invariant"] == "H1"
        assert failing["value"]["rank"] > 0 or failing["value"]["torsion"]


def test_criterion_02_coproducts_imply_homotopy_sifted():
    with criterion(2, "join-semilattices with <= 5 elements certified at 3", 120):
        lattices = list(join_semilattices(5))
        assert len(lattices) == 24
        for L in lattices:
            v = homotopy_sifted(L, 3)
            assert v.is_certified, L.name
            assert all(c["evidence"]["method"] == "initial object"
                       for c in v.evidence["certificates"])


def test_criterion_03_filtered_imply_homotopy_sifted():
    with criterion(3, "filtered corpus shapes are not refuted", 120):
        shapes = [C for C in CORPUS.values()
                  if has_terminal(C) is not None and len(C.objects) <= 4]
        assert shapes
        for C in shapes:
            assert is_filtered(C)[0], C.name
            assert not homotopy_sifted(C, 2).is_refuted, C.name


def test_criterion_04_implication_audit():
    with criterion(4, "no homotopy-sifted category fails to be sifted"):
        assert len(CORPUS) >= 30
        assert any(n.startswith("random_poset") for n in CORPUS)
        assert any(n.startswith("random_monoid") for n in CORPUS)
        for name, C in CORPUS.items():
            if homotopy_sifted(C, 2).is_certified:
                assert is_sifted(C)[0], name


def _reversal_matches(C):
    """B(C^op) is B(C) with every simplex read backwards."""
    X, Y = opposite_sset(nerve(C, 3)), nerve(opposite(C), 3)

    def rev(cell):
        return cell if len(cell) == 1 and cell[0] in C.objects else tuple(reversed(cell))

    if [sorted(map(rev, layer), key=repr) for layer in X.cells] != \
            [sorted(layer, key=repr) for layer in Y.cells]:
        return False
    return all(Y.faces[rev(x)] == tuple(DegenerateRef(rev(r.base), r.degeneracies)
                                        for r in X.faces[x])
               for x in X.faces)


def test_criterion_05_hocolim_correctness():
    with criterion(5, "hocolim of the point is the nerve; co-Yoneda collapse", 120):
        shapes = {n: C for n, C in CORPUS.items() if C.objects}
        assert len(shapes) >= 10
        for name, C in shapes.items():
            H = hocolim(point_diagram(C, 3), 3)
            assert certify_weq(nerve_projection(H), 2).is_certified, name
            assert _reversal_matches(C), name
            assert homology(H.space, 2) == homology(nerve(C, 3), 2), name
            D = over_diagram(C, 2)
            for d0 in C.objects:
                colim = weighted_colimit(representable_weight(C, d0, 2), D)
                assert coyoneda_map(colim, d0).is_isomorphism(), (name, d0)


def test_criterion_06_distributivity():
    with criterion(6, "products commute with hocolims over homotopy-sifted shapes", 180):
        shapes = [C for C in CORPUS.values() if C.objects and homotopy_sifted(C, 2).is_certified]
        assert len(shapes) >= 10
        for C in shapes:
            P = point_diagram(C, 3)
            assert comparison_to_product(P, P, 3)[1].is_certified, C.name
            for d in C.objects:
                D = representable_diagram(C, d, 3)
                assert comparison_to_product(D, D, 3)[1].is_certified, (C.name, d)
        R = CATS["reflexive_pair"]
        D = representable_diagram(R, "A", 3)
        assert comparison_to_product(D, D, 3)[1].is_refuted


def _oracle(X, kmax):
    mats, dims = dense_boundaries(X)
    return [homology_oracle(mats, dims, k) for k in range(kmax + 1)]


def test_criterion_07_homology_battery():
    with criterion(7, "homology battery agrees with the brute-force oracle"):
        circle = quotient(standard_simplex(1, 2), [((0,), (1,))])[0]
        battery = [
            (boundary_simplex(2, 2), 1, [(1, []), (1, [])]),
            (boundary_simplex(3, 3), 2, [(1, []), (0, []), (1, [])]),
            (circle, 1, [(1, []), (1, [])]),
            (nerve(cyclic_monoid(2), 3), 2, [(1, []), (0, [2]), (0, [])]),
        ]
        for X, kmax, expected in battery:
            got = [(H.rank, list(H.torsion)) for H in homology(X, kmax)]
            assert got == expected
            assert got == _oracle(X, kmax)


def test_criterion_08_pi1_battery():
    with criterion(8, "fundamental group battery"):
        P = pi1_presentation(boundary_simplex(2, 2), (0,))
        assert len(P.generators) == 1 and P.relators == ()
        X = nerve(CATS["Z/2"], 3)
        P = pi1_presentation(X, X.vertices()[0])
        assert P.abelianization() == AbelianGroup(0, (2,))
        assert tietze_trivial(P, 10_000).is_refuted
        count = 0
        for name, C in CORPUS.items():
            if has_initial(C) is None:
                continue
            X = nerve(C, 3)
            P = pi1_presentation(X, X.vertices()[0])
            assert tietze_trivial(P, 10_000).is_certified, name
            count += 1
        assert count > 0


def test_criterion_09_homotopy_algebra():
    with criterion(9, "T1 validates; cube algebra certified; mismatch refuted", 120):
        T1 = build_T1()
        assert validate_theory(T1) == []
        A = strict_cube_algebra(T1)
        v = check_homotopy_algebra(A, 2)
        assert v.is_certified and v.level == 2
        (w,) = v.evidence["witnesses"]
        assert w["present"] and w["source_matches"] and w["target_matches"]
        assert w["nondegenerate"]
        assert check_homotopy_algebra(mismatch_algebra(), 2).is_refuted


def _machine(capsys, *argv):
    cli.main(list(argv) + ["--format", "machine"])
    return capsys.readouterr().out


def test_criterion_10_infrastructure(capsys):
    with criterion(10, "d^2 = 0, SNF factor identity, byte-identical reports"):
        spaces = [nerve(C, 3) for C in CORPUS.values()]
        spaces += [boundary_simplex(3, 3), product(boundary_simplex(2, 3), nerve(CATS["Z/2"], 3))]
        spaces += [hocolim(representable_diagram(CATS["reflexive_pair"], "A", 3), 3).space]
        for X in spaces:
            assert sparse_square_is_zero(chain_complex(X, X.level))
        rng = random.Random(1000)
        for _ in range(1000):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
            D, U, V = smith_normal_form(M)
            assert matmul(matmul(U, M), V) == D
            assert abs(sympy.Matrix(U).det()) == 1 and abs(sympy.Matrix(V).det()) == 1
        for argv in (("check-hsifted", "fixture:reflexive_pair"),
                     ("homology", "fixture:boundary_delta3"),
                     ("compare-products", "fixture:join_point_diagram",
                      "fixture:join_point_diagram")):
            first, second = _machine(capsys, *argv), _machine(capsys, *argv)
            assert first == second
            json.loads(first)


pytestmark = pytest.mark.slow
