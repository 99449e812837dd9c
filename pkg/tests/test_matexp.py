import random
from fractions import Fraction as Q

import pytest

from wonderful import matexp
from wonderful.poly import Poly


def random_strictly_upper(rng, n):
    m = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = Q(rng.randint(-5, 5), rng.randint(1, 4))
    return m


def test_exp_of_zero_is_identity():
    assert matexp.nilpotent_exp(matexp.zeros(4)) == matexp.identity(4)


def test_single_superdiagonal_entry():
    x = Poly.var("x")
    m = [[Poly(), x], [Poly(), Poly()]]
    e = matexp.nilpotent_exp(m)
    assert e[0][0] == 1 and e[1][1] == 1 and e[0][1] == x and e[1][0] == 0


def test_roundtrip_on_random_nilpotent_matrices():
    rng = random.Random(7)
    for trial in range(100):
        n = rng.randint(2, 8)
        m = random_strictly_upper(rng, n)
        u = matexp.nilpotent_exp(m)
        back = matexp.unipotent_log(u)
        assert back == m
        again = matexp.nilpotent_exp(back)
        assert again == u


def test_exp_minus_identity_is_nilpotent():
    rng = random.Random(11)
    for _ in range(10):
        n = rng.randint(2, 6)
        m = random_strictly_upper(rng, n)
        u = matexp.nilpotent_exp(m)
        diff = matexp.mat_sub(u, matexp.identity(n))
        idx = matexp.nilpotency_index(diff)
        assert idx is not None and idx <= n


def test_non_nilpotent_rejected():
    with pytest.raises(ValueError):
        matexp.nilpotent_exp([[Q(1), Q(0)], [Q(0), Q(0)]])
    with pytest.raises(ValueError):
        matexp.unipotent_log([[Q(2), Q(0)], [Q(0), Q(1)]])


def test_symbolic_log_of_exp():
    x, y = Poly.var("x"), Poly.var("y")
    m = [[Poly(), x, y], [Poly(), Poly(), x], [Poly(), Poly(), Poly()]]
    assert matexp.unipotent_log(matexp.nilpotent_exp(m)) == m
