import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qhkit.algebra import (FreePresentation, NotNilpotent, PresentationError, classify_local_selfinjective,
                           evaluate_word, from_free_presentation, is_commutative, multiply, opposite,
                           radical_chain, socle)
from qhkit.algebra_core import FiniteAlgebra
from qhkit.expr import normalize, parse_expression
from qhkit.field import FieldSpec

Q = FieldSpec.rationals()
F13 = FieldSpec.prime(13)


def present(gens, rels, field=Q, cap=12, commutative=False):
    return FreePresentation(field, gens, [list(normalize(parse_expression(r, gens), field)) for r in rels],
                            commutative, cap)


def algebra(gens, rels, field=Q, **kw):
    return from_free_presentation(present(gens, rels, field, **kw))


def ex127(field=Q):
    return algebra(["x", "y"], ["x*y", "y*x", "x^3 - y^3"], field)


def ex412():
    return algebra(["x", "y"], ["x*y", "y*x", "x^4 - y^2"])


def b4(c):
    # x_i x_j relations of the noncommutative family with parameter matrix c (indices 2, 3)
    rels = []
    idx = [2, 3]
    for i in idx:
        for j in idx:
            for m in idx:
                for k in idx:
                    if (i, j) != (m, k):
                        cij, cmk = c[i - 2][j - 2], c[m - 2][k - 2]
                        rels.append(f"{cmk}*x{i}*x{j} - {cij}*x{m}*x{k}")
    return algebra(["x2", "x3"], rels + ["x2^3", "x3^3"])


def vec(B, label):
    return B.basis_vector(B.labels.index(label))


def test_example_bases():
    B = ex127()
    assert B.dim == 6 and B.labels == ["1", "x", "y", "x^2", "y^2", "x^3"]
    B = ex412()
    assert B.dim == 6 and B.labels == ["1", "x", "y", "x^2", "x^3", "x^4"]
    assert multiply(B, vec(B, "y"), vec(B, "y")) == vec(B, "x^4")
    D = algebra(["x"], ["x^2"])
    assert D.dim == 2 and D.labels == ["1", "x"]


def test_multiplication_examples():
    B = ex127()
    x, y = vec(B, "x"), vec(B, "y")
    assert multiply(B, B.unit, x) == x
    assert not any(multiply(B, x, y))
    assert multiply(B, vec(B, "x^2"), x) == vec(B, "x^3")
    assert evaluate_word(B, [1, 1, 1]) == vec(B, "x^3")


def _sympy_check(B, rels, field_mod=None):
    """Every structure constant is correct modulo a Groebner basis computed by sympy."""
    x, y = sympy.symbols("x y")
    opts = {"modulus": field_mod} if field_mod else {}
    G = sympy.groebner(rels(x, y), x, y, order="grevlex", **opts)
    mono = [x ** w.count(0) * y ** w.count(1) for w in B.words]
    # dimension: standard monomials of the Groebner basis
    lead = [sympy.Poly(g, x, y).monoms(order="grevlex")[0] for g in G.exprs]
    std = [(a, b) for a in range(12) for b in range(12)
           if not any(a >= la and b >= lb for la, lb in lead)]
    assert len(std) == B.dim
    for i in range(B.dim):
        for j in range(B.dim):
            prod = B.multiply(B.basis_vector(i), B.basis_vector(j))
            coeff = (lambda c: int(c)) if field_mod else (lambda c: sympy.Rational(B.field.to_str(c)))
            expr = mono[i] * mono[j] - sum(coeff(c) * m for c, m in zip(prod, mono) if c)
            assert G.reduce(sympy.expand(expr))[1] == 0


def test_structure_constants_against_groebner_oracle():
    _sympy_check(ex127(), lambda x, y: [x * y, x ** 3 - y ** 3])
    _sympy_check(ex412(), lambda x, y: [x * y, x ** 4 - y ** 2])
    _sympy_check(ex127(F13), lambda x, y: [x * y, x ** 3 - y ** 3], 13)


def test_radical_chains():
    chain, idx = radical_chain(ex127())
    assert [s.dim for s in chain] == [5, 3, 1, 0] and idx == 4
    chain, idx = radical_chain(algebra(["x"], ["x^2"]))
    assert [s.dim for s in chain] == [1, 0] and idx == 2
    chain, idx = radical_chain(ex412())
    assert [s.dim for s in chain] == [5, 3, 2, 1, 0] and idx == 5


def test_socles():
    B = ex127()
    assert socle(B) == socle(B, "right")
    assert socle(B).dim == 1 and socle(B).contains(vec(B, "x^3"))
    K = algebra([], [])
    assert K.dim == 1 and socle(K).dim == 1
    B = ex412()
    assert socle(B).dim == 1 and socle(B).contains(vec(B, "x^4"))
    with pytest.raises(ValueError):
        socle(B, "middle")


def test_classification():
    r = classify_local_selfinjective(ex127())
    assert r.is_local and r.is_self_injective and r.top_dim == 1 and r.nilpotency_index == 4
    r = classify_local_selfinjective(algebra(["x"], ["x^2"]))
    assert r.is_local and r.is_self_injective
    # K<x,y>/(x^2, y^2, xy): socle {x, yx} is 2-dimensional
    B = algebra(["x", "y"], ["x^2", "y^2", "x*y"])
    r = classify_local_selfinjective(B)
    assert B.dim == 4 and r.is_local and not r.is_self_injective and r.socle.dim == 2


def test_non_local_structure_constants():
    # K x K as a table: idempotents (1,0), (0,1); radical chain from the generator e is not nilpotent
    B = FiniteAlgebra(Q, ["1", "e"], [[((0, Q(1)),), ((1, Q(1)),)], [((1, Q(1)),), ((1, Q(1)),)]],
                      [Q(1), Q(0)])
    with pytest.raises(NotNilpotent):
        radical_chain(B, [B.basis_vector(1)])
    assert not classify_local_selfinjective(B, [B.basis_vector(1)]).is_local


def test_opposite_and_commutativity():
    B = ex127()
    assert is_commutative(B) and opposite(B) == B
    N = b4([[1, 1], [0, 1]])
    assert N.dim == 4 and not is_commutative(N)
    Nop = opposite(N)
    x2, x3 = vec(N, "x2"), vec(N, "x3")
    assert N.multiply(x2, x3) == Nop.multiply(x3, x2)
    assert not any(N.multiply(x3, x2))
    assert opposite(Nop) == N
    assert is_commutative(b4([[1, 0], [0, 1]]))
    assert is_commutative(algebra([], []))


def test_commutative_sugar():
    B = algebra(["x", "y"], ["x^2", "y^2"], commutative=True)
    assert B.dim == 4 and is_commutative(B)


def test_presentation_errors():
    with pytest.raises(PresentationError):
        algebra(["x", "y"], ["x*y - y*x"], cap=6)   # polynomial ring: infinite
    with pytest.raises(PresentationError):
        algebra(["x"], ["x - x^2"])                  # not in the square of the augmentation ideal
    with pytest.raises(PresentationError):
        from_free_presentation(FreePresentation(Q, ["x"], [[(1, (0, 5))]], False, 4))


def test_construction_checks():
    from qhkit.algebra_core import AlgebraError
    one = Q(1)
    t = [[((0, one),), ((1, one),)], [((1, one),), ((0, one),)]]
    FiniteAlgebra(Q, ["1", "g"], t, [one, Q(0)])  # group algebra of C2
    with pytest.raises(AlgebraError):  # wrong unit
        FiniteAlgebra(Q, ["1", "g"], t, [Q(0), one])
    # a*a = b, a*b = 0, b*a = a: (aa)a = a but a(aa) = 0
    t = [[((0, one),), ((1, one),), ((2, one),)],
         [((1, one),), ((2, one),), ()],
         [((2, one),), ((1, one),), ()]]
    with pytest.raises(AlgebraError):
        FiniteAlgebra(Q, ["1", "a", "b"], t, [one, Q(0), Q(0)])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=6, max_size=6), st.lists(st.integers(0, 5), min_size=6, max_size=6),
       st.lists(st.integers(0, 5), min_size=6, max_size=6))
def test_random_associativity_and_opposite(a, b, c):
    N = b4([[1, 1], [0, 1]])
    a, b, c = (Q.vector(v[:4]) for v in (a, b, c))
    assert N.multiply(N.multiply(a, b), c) == N.multiply(a, N.multiply(b, c))
    Nop = opposite(N)
    assert Nop.multiply(a, b) == N.multiply(b, a)


def test_local_dimension_law():
    for B in (ex127(), ex412(), b4([[1, 1], [0, 1]])):
        chain, _ = radical_chain(B)
        assert chain[0].dim == B.dim - 1
        dims = [s.dim for s in chain]
        assert dims == sorted(dims, reverse=True) and dims[-1] == 0
