"""Square matrices over an exact ring (Fraction or Poly entries).

Provides the finite exponential of a nilpotent matrix and the logarithm of a
unipotent one; both are polynomial identities, so everything stays exact.
"""

from __future__ import annotations

from fractions import Fraction as Q

from .poly import Poly


def _is_zero_entry(e) -> bool:
    if isinstance(e, Poly):
        return e.is_zero()
    return e == 0


def zeros(n: int) -> list[list]:
    return [[Q(0)] * n for _ in range(n)]


def identity(n: int) -> list[list]:
    return [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    return [[x * s for x in row] for row in a]


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(p):
            acc = None
            for k in range(m):
                x = ai[k]
                if _is_zero_entry(x):
                    continue
                y = b[k][j]
                if _is_zero_entry(y):
                    continue
                term = x * y
                acc = term if acc is None else acc + term
            row.append(Q(0) if acc is None else acc)
        out.append(row)
    return out


def is_zero_matrix(a) -> bool:
    return all(_is_zero_entry(x) for row in a for x in row)


def matrix_power(a, k: int):
    out = identity(len(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def nilpotency_index(a) -> int | None:
    """Smallest k with a^k = 0, or None if a is not nilpotent."""
    n = len(a)
    power = identity(n)
    for k in range(1, n + 1):
        power = mat_mul(power, a)
        if is_zero_matrix(power):
            return k
    return None


def nilpotent_exp(a) -> list[list]:
    """exp of a nilpotent matrix as the finite sum sum_k a^k / k!."""
    n = len(a)
    idx = nilpotency_index(a)
    if idx is None:
        raise ValueError("matrix is not nilpotent")
    out = identity(n)
    power = identity(n)
    fact = 1
    for k in range(1, idx):
        power = mat_mul(power, a)
        fact *= k
        out = mat_add(out, mat_scale(power, Q(1, fact)))
    return out


def unipotent_log(u) -> list[list]:
    """log of a unipotent matrix: sum_{k>=1} (-1)^(k+1) (u-1)^k / k."""
    n = len(u)
    m = mat_sub(u, identity(n))
    idx = nilpotency_index(m)
    if idx is None:
        raise ValueError("matrix is not unipotent")
    out = zeros(n)
    power = identity(n)
    for k in range(1, idx):
        power = mat_mul(power, m)
        out = mat_add(out, mat_scale(power, Q((-1) ** (k + 1), k)))
    return out
