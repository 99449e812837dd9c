"""Concrete root-space matrix models used by the case verifications.

All bases follow the bilinear-form conventions fixed in the case analysis:
odd orthogonal algebras are skew around the antidiagonal, symplectic ones use
the antidiagonal pairing with a sign split, and the exceptional case uses an
explicit embedding into an 8x8 orthogonal algebra.  Coordinate names follow
the per-case tables (x1.. in the documented order).
"""

from __future__ import annotations

from fractions import Fraction as Q
from itertools import combinations

from .grouplaw import NilpotentRep
from .rootsys import Weight, root_system, chart_coordinates


def _zeros(n):
    return [[Q(0)] * n for _ in range(n)]


# -- type B: so(2n+1), vector and spin models ---------------------------------


def _b_eps(n: int, i: int) -> Weight:
    """e_i of B_n in the simple-root basis (1-based i)."""
    return Weight([Q(1) if i <= k + 1 else Q(0) for k in range(n)])


def b_root(n: int, kind: str, i: int, j: int = 0) -> Weight:
    if kind == "e-e":
        return _b_eps(n, i) - _b_eps(n, j)
    if kind == "e+e":
        return _b_eps(n, i) + _b_eps(n, j)
    if kind == "e":
        return _b_eps(n, i)
    raise ValueError(kind)


def _so_odd_matrix(n: int, kind: str, i: int, j: int = 0):
    """Root vector of so(2n+1), skew around the antidiagonal."""
    size = 2 * n + 1
    m = _zeros(size)

    def put(r, c, v):
        m[r - 1][c - 1] = Q(v)

    if kind == "e-e":
        put(i, j, 1)
        put(size + 1 - j, size + 1 - i, -1)
    elif kind == "e+e":
        put(i, size + 1 - j, 1)
        put(j, size + 1 - i, -1)
    elif kind == "e":
        put(i, n + 1, 1)
        put(n + 1, size + 1 - i, -1)
    else:
        raise ValueError(kind)
    return m


def so_odd_chart_roots(n: int) -> list[tuple[str, Weight, tuple]]:
    """Chart coordinates for the two-colour odd orthogonal case.

    The first 2n-1 names run along the first matrix row; the rest follow the
    canonical (height, lex) order.
    """
    first_row = (
        [("e-e", 1, j) for j in range(2, n + 1)]
        + [("e", 1, 0)]
        + [("e+e", 1, j) for j in range(n, 1, -1)]
    )
    rs = root_system("B", n)
    sp = set(range(2, n)) if n > 2 else set()
    chart = chart_coordinates(rs, sp)
    chosen = [b_root(n, *spec) for spec in first_row]
    rest = [r for r in chart if r not in set(chosen)]
    out = []
    for idx, spec in enumerate(first_row, start=1):
        out.append(("x%d" % idx, b_root(n, *spec), spec))
    remaining_specs = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            remaining_specs[b_root(n, "e-e", i, j)] = ("e-e", i, j)
            remaining_specs[b_root(n, "e+e", i, j)] = ("e+e", i, j)
        remaining_specs[b_root(n, "e", i)] = ("e", i, 0)
    for idx, r in enumerate(rest, start=len(first_row) + 1):
        out.append(("x%d" % idx, r, remaining_specs[r]))
    return out


def so_odd_rep(n: int) -> NilpotentRep:
    if n < 2:
        raise ValueError("odd orthogonal case needs rank at least 2")
    table = so_odd_chart_roots(n)
    names = [t[0] for t in table]
    roots = [t[1] for t in table]
    basis = [_so_odd_matrix(n, *t[2]) for t in table]
    return NilpotentRep(names, roots, basis)


def _spin_operator(n: int, kind: str, i: int, j: int = 0):
    """Root vector of so(2n+1) acting on the 2^n-dimensional spin module."""
    subsets = sorted((frozenset(s) for k in range(n + 1) for s in combinations(range(1, n + 1), k)),
                     key=lambda s: (len(s), tuple(sorted(s))))
    index = {s: a for a, s in enumerate(subsets)}
    dim = len(subsets)
    m = [[Q(0)] * dim for _ in range(dim)]

    def wedge(k, s):
        if k in s:
            return None
        sign = (-1) ** sum(1 for t in s if t < k)
        return sign, s | {k}

    def contract(k, s):
        if k not in s:
            return None
        sign = (-1) ** sum(1 for t in s if t < k)
        return sign, s - {k}

    for s in subsets:
        col = index[s]
        if kind == "e-e":
            step = contract(j, s)
            if step is None:
                continue
            sg1, s1 = step
            step = wedge(i, s1)
            if step is None:
                continue
            sg2, s2 = step
            m[index[s2]][col] += Q(sg1 * sg2)
        elif kind == "e+e":
            step = wedge(j, s)
            if step is None:
                continue
            sg1, s1 = step
            step = wedge(i, s1)
            if step is None:
                continue
            sg2, s2 = step
            m[index[s2]][col] += Q(sg1 * sg2, 2)
        elif kind == "e":
            parity = (-1) ** len(s)
            step = wedge(i, s)
            if step is None:
                continue
            sg, s1 = step
            m[index[s1]][col] += Q(sg * parity, 2)
        else:
            raise ValueError(kind)
    return m


def so_odd_spin_rep(n: int) -> NilpotentRep:
    """The same chart coordinates acting on the spin module."""
    table = so_odd_chart_roots(n)
    names = [t[0] for t in table]
    roots = [t[1] for t in table]
    basis = [_spin_operator(n, *t[2]) for t in table]
    return NilpotentRep(names, roots, basis)


def spin_lowest_index(n: int) -> int:
    return 0  # the empty subset comes first in the (size, tuple) order


def spin_highest_index(n: int) -> int:
    return 2 ** n - 1  # the full subset comes last


# -- type C: sp(2n) ------------------------------------------------------------


def _c_eps(n: int, i: int) -> Weight:
    """e_i of C_n: alpha_i + .. + alpha_{n-1} + alpha_n/2 (1-based i)."""
    coords = [Q(1) if i <= k + 1 <= n - 1 else Q(0) for k in range(n)]
    coords[n - 1] = Q(1, 2)
    return Weight(coords)


def c_root(n: int, kind: str, i: int, j: int = 0) -> Weight:
    if kind == "e-e":
        return _c_eps(n, i) - _c_eps(n, j)
    if kind == "e+e":
        return _c_eps(n, i) + _c_eps(n, j)
    if kind == "2e":
        return 2 * _c_eps(n, i)
    raise ValueError(kind)


def _sp_matrix(n: int, kind: str, i: int, j: int = 0):
    size = 2 * n
    m = _zeros(size)

    def put(r, c, v):
        m[r - 1][c - 1] = Q(v)

    if kind == "e-e":
        put(i, j, 1)
        put(size + 1 - j, size + 1 - i, -1)
    elif kind == "e+e":
        put(i, size + 1 - j, 1)
        put(j, size + 1 - i, 1)
    elif kind == "2e":
        put(i, size + 1 - i, 1)
    else:
        raise ValueError(kind)
    return m


def sp_chart_roots(n: int) -> list[tuple[str, Weight, tuple]]:
    """Chart coordinates for the two-colour symplectic case (first two rows)."""
    first_row = (
        [("e-e", 1, j) for j in range(2, n + 1)]
        + [("e+e", 1, j) for j in range(n, 1, -1)]
        + [("2e", 1, 0)]
    )
    second_row = (
        [("e-e", 2, j) for j in range(3, n + 1)]
        + [("e+e", 2, j) for j in range(n, 2, -1)]
        + [("2e", 2, 0)]
    )
    out = []
    for idx, spec in enumerate(first_row + second_row, start=1):
        out.append(("x%d" % idx, c_root(n, *spec), spec))
    return out


def sp_rep(n: int) -> NilpotentRep:
    if n < 3:
        raise ValueError("the symplectic case starts at rank 3")
    table = sp_chart_roots(n)
    names = [t[0] for t in table]
    roots = [t[1] for t in table]
    basis = [_sp_matrix(n, *t[2]) for t in table]
    return NilpotentRep(names, roots, basis)


# -- the exceptional case: G2 inside so(8) --------------------------------------


_G2_ENTRIES = {
    # coordinate name -> ((row, col, value), ...) from the displayed embedding
    "x1": ((2, 6, 1), (3, 7, -1)),
    "x2": ((1, 3, 1), (6, 8, -1)),
    "x3": ((1, 7, 1), (2, 8, -1)),
    "x4": ((1, 4, -1), (1, 5, 1), (2, 3, 1), (4, 8, -1), (5, 8, 1), (6, 7, -1)),
    "x5": ((1, 6, 1), (2, 4, -1), (2, 5, 1), (3, 8, -1), (4, 7, -1), (5, 7, 1)),
    "x6": ((2, 1, 1), (3, 4, 1), (3, 5, -1), (4, 6, 1), (5, 6, -1), (8, 7, -1)),
}

_G2_ROOTS = {
    "x1": (3, 1),
    "x2": (0, 1),
    "x3": (3, 2),
    "x4": (1, 1),
    "x5": (2, 1),
    "x6": (1, 0),
}


def g2_cartan_element(a1, a2):
    """The diagonal part of the embedded Cartan subalgebra."""
    d = [a1, a1 + a2, a2, 0, 0, -a2, -a1 - a2, -a1]
    m = _zeros(8)
    for i in range(8):
        m[i][i] = Q(d[i])
    return m


def g2_root_functional(root: Weight, a1, a2):
    """root evaluated on g2_cartan_element(a1, a2): alpha1 -> a2, alpha2 -> a1 - a2."""
    c1, c2 = root.coords
    return c1 * Q(a2) + c2 * (Q(a1) - Q(a2))


def g2_rep() -> NilpotentRep:
    names = ["x%d" % i for i in range(1, 7)]
    roots = [Weight([Q(a), Q(b)]) for a, b in (_G2_ROOTS[n] for n in names)]
    basis = []
    for n in names:
        m = _zeros(8)
        for r, c, v in _G2_ENTRIES[n]:
            m[r - 1][c - 1] = Q(v)
        basis.append(m)
    return NilpotentRep(names, roots, basis)


# -- small generic models for tests ---------------------------------------------


def a2_full_rep() -> NilpotentRep:
    """Full strictly upper triangular 3x3: the rank-two special linear toy."""
    rs = root_system("A", 2)
    e12, e23, e13 = _zeros(3), _zeros(3), _zeros(3)
    e12[0][1] = Q(1)
    e23[1][2] = Q(1)
    e13[0][2] = Q(1)
    names = ["x1", "x2", "x3"]
    roots = [rs.simple_root(1), rs.simple_root(2), rs.simple_root(1) + rs.simple_root(2)]
    return NilpotentRep(names, roots, [e12, e23, e13])


def abelian_rep(k: int) -> NilpotentRep:
    """Direct sum of k commuting 2x2 blocks (an abelian unipotent group)."""
    rs = root_system("A", 1)
    basis = []
    for i in range(k):
        m = _zeros(2 * k)
        m[2 * i][2 * i + 1] = Q(1)
        basis.append(m)
    names = ["x%d" % (i + 1) for i in range(k)]
    roots = [rs.simple_root(1)] * k
    return NilpotentRep(names, roots, basis)
