import pytest

from qhkit.ideals import (IdealError, check_condition_ma, hom_space, ideal_from_generator,
                          module_radical, morphism_tests, opposite_transport, surjects)
from qhkit.algebra import radical
from qhkit.linalg import Subspace, sum_all

from conftest import BAD, GOOD, case, elt, span, up_size


@pytest.fixture
def ex():
    return case("exampleB_L1")


def ideal(c, text):
    return ideal_from_generator(c.B, elt(c, text))


def test_generated_ideals(ex):
    X = ideal(ex, "x")
    assert X.space == span(ex, "x", "x^2", "x^3") and X.two_sided
    assert ideal(ex, "1").space == Subspace.full(ex.B.field, 6)
    soc = ideal(ex, "x^3")
    assert soc.dim == 1 and module_radical(soc).dim == 0
    assert module_radical(X) == span(ex, "x^2", "x^3")
    assert module_radical(ideal(ex, "1")) == radical(ex.B)
    with pytest.raises(IdealError):
        ideal(ex, "x - x")


def test_morphism_directions(ex):
    X, Y, X2 = ideal(ex, "x"), ideal(ex, "y"), ideal(ex, "x^2")
    assert morphism_tests(X, X2).surjection_exists
    assert not surjects(X, Y)
    t = morphism_tests(X, X)
    assert t.surjection_exists and t.injection_exists
    assert morphism_tests(X2, X).injection_exists and not morphism_tests(X, X2).injection_exists


def test_hom_dims(ex):
    B1, X, Y = ideal(ex, "1"), ideal(ex, "x"), ideal(ex, "y")
    assert hom_space(X, Y).dim == 1
    assert hom_space(B1, B1).dim == 6
    assert hom_space(X, B1).dim == 3


def test_hom_maps_are_linear_over_B(ex):
    X, B1 = ideal(ex, "x"), ideal(ex, "1")
    H = hom_space(X, B1)
    f = ex.B.field
    for mat in H.basis:
        for b in range(ex.B.dim):
            e = ex.B.basis_vector(b)
            for v in X.space.basis:
                assert H.apply(mat, ex.B.multiply(e, v)) == ex.B.multiply(e, H.apply(mat, v))


@pytest.mark.parametrize("name", GOOD)
def test_good_fixtures_pass(name):
    c = case(name)
    assert c.ma.passed, c.ma.failed()
    assert not c.ma.witnesses


def test_dims_follow_up_sets(good):
    P = good.poset
    assert [M.dim for M in good.L] == [up_size(P, i) for i in range(1, P.n + 1)]


def test_hom_dims_follow_up_sets(good):
    P = good.poset
    for j in range(1, P.n + 1):
        for k in range(1, P.n + 1):
            want = len(P.up(j) & P.up(k))
            assert hom_space(good.L[j - 1], good.L[k - 1]).dim == want, (j, k)


def test_members_two_sided_from_generator(good):
    from qhkit.ideals import right_orbit
    for M in good.L:
        assert right_orbit(good.B, M.generator) == M.space


def test_radical_from_covers_of_minimum(good):
    P = good.poset
    above = [good.L[i - 1].space for i in sorted(P.up(1)) if P.lt(1, i)
             and not any(P.lt(1, k) and P.lt(k, i) for k in P.up(1))]
    assert sum_all(good.B.field, good.B.dim, above) == radical(good.B)


@pytest.mark.parametrize("name", GOOD + BAD + ["bad_broken_b"])
def test_opposite_transport_agrees(name):
    c = case(name)
    assert opposite_transport(c.B, c.L, c.poset).passed == c.ma.passed


def test_commutative_transport_is_identical(ex):
    assert opposite_transport(ex.B, ex.L, ex.poset).to_dict() == ex.ma.to_dict()


def test_swapped_generators_witness():
    ma = case("bad_swapped").ma
    assert not ma.passed and "condition_b" in ma.failed()
    wb = [w for w in ma.witnesses if w["check"] == "condition_b"]
    assert wb[0]["i"] == 2 and wb[0]["dim_rad"] == 1 and wb[0]["dim_sum_above"] == 3
    wa = {tuple(w["pair"]) for w in ma.witnesses if w["check"] == "condition_a"}
    assert wa == {(2, 4), (4, 2)}


def test_broken_b_witness():
    ma = case("bad_broken_b").ma
    assert ma.failed() == ["condition_a", "condition_b"]
    w = [w for w in ma.witnesses if w["check"] == "condition_b"][0]
    assert w["i"] == 3 and not w["rad_in_sum"] and not w["sum_in_rad"]


def test_L1_and_labeling_witnesses():
    ma = case("bad_L1_not_B").ma
    assert ma.witnesses[0] == {"check": "L1_eq_B", "dim_L1": 3, "dim_B": 6}
    ma = case("bad_mislabeled_min").ma
    assert ma.check("labeling").detail["minima"] == [2]
    assert not ma.check("L1_eq_B").passed


def test_size_mismatch(ex):
    with pytest.raises(IdealError):
        check_condition_ma(ex.B, ex.L[:5], ex.poset)


def test_dual_numbers_fail_on_size():
    # one vertex but dim B = 2, so rad L(1) = <x> is not the empty sum either
    assert case("dual_numbers").ma.failed() == ["dim_B_eq_n", "condition_b"]
