from fractions import Fraction

import pytest

import gerstalg as g

SYMPLECTIC = "(cochain 2 (term 1 (0 0) (1 0) (0 1)) (term -1 (0 0) (0 1) (1 0)))"
LINEAR = "(cochain 2 (term 1 (1 0) (1 0) (0 1)) (term -1 (1 0) (0 1) (1 0)))"


def poly(text):
    return g.Polynomial(text)


def test_round_trip_and_coefficients():
    c = g.Cochain("(cochain 2 (term 2/4 (1 0) (0 1)) (term 1/2 (1 0) (0 1)))")
    assert c == g.Cochain(str(c))
    assert g.coefficients(c) == {((1, 0), ((0, 1),)): Fraction(1)}
    assert c.arity == 1 and c.dimension == 2


def test_euler_eigenvalue_and_weights():
    t = g.Cochain("(cochain 2 (term 1 (2 0) (1 0)))")
    assert g.bracket(g.euler_field(2, 1), t) == t
    assert g.bracket(g.euler_field(2, 2), t).is_zero()
    assert list(g.weight_decomposition(t)) == [(1, 0)]


def test_delta():
    m = g.multiplication(2)
    assert g.delta(m).is_zero()
    d12 = g.Cochain("(cochain 2 (term 1 (0 0) (1 1)))")
    assert g.delta(d12) == g.delta_via_bracket(d12)
    assert g.solve_delta(g.delta(d12)) == d12


def test_apply():
    pi = g.Cochain(SYMPLECTIC)
    x1, x2 = poly("(poly 2 (term 1 (1 0)))"), poly("(poly 2 (term 1 (0 1)))")
    assert g.coefficients(g.apply(pi, [x1, x2])) == {(0, 0): Fraction(1)}
    with pytest.raises(g.GerstError):
        g.apply(pi, [x1])


def test_semigroups_and_theta():
    assert g.semigroup_member([[-1, -1]], [-3, -3])["certificate"] == [3]
    assert g.semigroup_member([[-1, -1]], [1, 1])["status"] == "no"
    pi = g.Cochain(LINEAR)
    assert g.in_c_delta(pi, [[0, -1]]) == "yes"
    assert g.in_ideal(pi, [[0, -1]], 2) == "no"
    plus, minus = g.theta_split(pi, [2])
    assert plus.is_zero() and minus == pi
    assert g.theta(pi, [2]) == -pi
    with pytest.raises(g.InconclusiveError):
        g.project_c_delta(g.Cochain(SYMPLECTIC), [[1, 0], [-1, 0], [0, -2], [1, -3]], cap=4)


def test_star_product():
    d = g.mc_solve(g.Cochain(LINEAR), 4, delta=[[0, -1]])
    assert d.order == 4
    for k in range(2, 5):
        assert g.delta(d.term(k)) == d.obstruction(k)
        assert g.in_ideal(d.term(k), [[0, -1]], 2) == "yes"
    f, h = poly("(poly 2 (term 1 (2 1)))"), poly("(poly 2 (term 3 (1 2)) (term 1 (0 1)))")
    assert all(p.is_zero() for p in g.associativity_defect(d, f, h, f))
    assert g.star_apply(d, f, h)[0] == f * h
    assert g.Deformation(str(d)) == d


def test_parse_error():
    with pytest.raises(g.ParseError):
        g.Cochain("(cochain 2 (term 1 (0 0)")


def test_verify_axioms():
    results = g.verify_axioms(seed=3, trials=5)
    assert results and all(passed for _, passed, _ in results)
