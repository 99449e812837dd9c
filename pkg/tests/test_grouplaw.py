import random
from fractions import Fraction as Q

import pytest

from wonderful import matexp
from wonderful.grouplaw import NilpotentRep, RepresentationError, group_law
from wonderful.poly import Poly
from wonderful.reps import a2_full_rep, abelian_rep, g2_rep, so_odd_rep, so_odd_spin_rep, sp_rep


def rand_coords(rng, k):
    return [Q(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(k)]


def test_abelian_law_is_addition():
    rep = abelian_rep(3)
    law = rep.law()
    for name, u_name, z in zip(rep.names, rep.u_names, law):
        assert z == Poly.var(name) + Poly.var(u_name)


def test_a2_law_matches_commutator_formula():
    rep = a2_full_rep()
    z1, z2, z3 = rep.law()
    u1, u2, u3 = (Poly.var(n) for n in rep.u_names)
    x1, x2, x3 = (Poly.var(n) for n in rep.names)
    assert z1 == u1 + x1
    assert z2 == u2 + x2
    assert z3 == u3 + x3 + Q(1, 2) * (u1 * x2 - u2 * x1)


def test_a2_law_agrees_with_matrix_product():
    rep = a2_full_rep()
    rng = random.Random(3)
    law = rep.law()
    for _ in range(20):
        u = rand_coords(rng, 3)
        x = rand_coords(rng, 3)
        via_matrices = rep.multiply(u, x)
        values = dict(zip(rep.u_names, u)) | dict(zip(rep.names, x))
        via_law = [z.evaluate(values) for z in law]
        assert via_matrices == via_law


@pytest.mark.parametrize("make", [a2_full_rep, lambda: so_odd_rep(2), lambda: so_odd_rep(3),
                                  lambda: sp_rep(3), g2_rep, lambda: so_odd_spin_rep(2)])
def test_group_axioms_on_random_triples(make):
    rep = make()
    rng = random.Random(len(rep.names))
    k = len(rep.names)
    zero = [Q(0)] * k
    for _ in range(100):
        a = rand_coords(rng, k)
        b = rand_coords(rng, k)
        c = rand_coords(rng, k)
        assert rep.multiply(zero, a) == a
        assert rep.multiply(a, zero) == a
        assert rep.multiply(a, rep.inverse_coords(a)) == zero
        left = rep.multiply(rep.multiply(a, b), c)
        right = rep.multiply(a, rep.multiply(b, c))
        assert left == right


def test_group_law_function_dispatch():
    rep = a2_full_rep()
    assert group_law(rep, rep.u_names, rep.names) == rep.law()
    assert group_law(rep, [1, 0, 0], [0, 1, 0]) == [Q(1), Q(1), Q(1, 2)]


def test_inconsistent_basis_rejected():
    # these two matrices do not close under bracket inside their span
    e12 = [[0, 1, 0], [0, 0, 0], [0, 0, 0]]
    e23 = [[0, 0, 0], [0, 0, 1], [0, 0, 0]]
    with pytest.raises(RepresentationError):
        NilpotentRep(["x1", "x2"], [None, None], [e12, e23])


def test_dependent_basis_rejected():
    e = [[0, 1], [0, 0]]
    with pytest.raises(RepresentationError):
        NilpotentRep(["x1", "x2"], [None, None], [e, e])


def test_law_substitution_matches_matrices():
    rep = so_odd_rep(2)
    rng = random.Random(5)
    for _ in range(5):
        u = rand_coords(rng, 4)
        z = rep.substituted_law(u)
        x = rand_coords(rng, 4)
        values = dict(zip(rep.names, x))
        assert [p.evaluate(values) for p in z] == rep.multiply(u, x)
