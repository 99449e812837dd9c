"""Finite irreducible root systems with exact weight-lattice arithmetic.

Everything is expressed in the simple-root basis over Fraction; simple roots
are numbered 1..rank in the Bourbaki convention.  The longest Weyl element
acts through a cached reduced word obtained by anti-dominance descent.
"""

from __future__ import annotations

from fractions import Fraction as Q
from functools import lru_cache

from . import linalg

FAMILIES = "ABCDEFG"


class Weight:
    """Element of the rational weight lattice in the simple-root basis."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(Q(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other):
        return Weight(a + b for a, b in zip(self.coords, other.coords, strict=True))

    def __sub__(self, other):
        return Weight(a - b for a, b in zip(self.coords, other.coords, strict=True))

    def __neg__(self):
        return Weight(-a for a in self.coords)

    def __mul__(self, scalar):
        q = Q(scalar)
        return Weight(q * a for a in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def height(self) -> Q:
        return sum(self.coords, Q(0))

    def support(self) -> frozenset[int]:
        """1-based indices of the simple roots appearing in this vector."""
        return frozenset(i + 1 for i, a in enumerate(self.coords) if a != 0)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coords)

    def __repr__(self):
        return "Weight(%s)" % (tuple(str(c) for c in self.coords),)


def _simple_root_vectors(family: str, rank: int) -> list[list[Q]]:
    """Simple roots as vectors in an ambient euclidean space (Bourbaki)."""
    n = rank

    def e(i, m):
        v = [Q(0)] * m
        v[i] = Q(1)
        return v

    def sub(a, b):
        return [x - y for x, y in zip(a, b)]

    if family == "A":
        m = n + 1
        return [sub(e(i, m), e(i + 1, m)) for i in range(n)]
    if family == "B":
        roots = [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)]
        roots.append(e(n - 1, n))
        return roots
    if family == "C":
        roots = [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)]
        roots.append([Q(2) * x for x in e(n - 1, n)])
        return roots
    if family == "D":
        roots = [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)]
        roots.append([x + y for x, y in zip(e(n - 2, n), e(n - 1, n))])
        return roots
    if family == "E":
        half = Q(1, 2)
        a1 = [half, -half, -half, -half, -half, -half, -half, half]
        a2 = [Q(1), Q(1)] + [Q(0)] * 6
        rest = [sub(e(i, 8), e(i - 1, 8)) for i in range(1, 7)]  # alpha_{i+2} = e_{i+1} - e_i
        return ([a1, a2] + rest)[:n]
    if family == "F":
        return [
            sub(e(1, 4), e(2, 4)),
            sub(e(2, 4), e(3, 4)),
            e(3, 4),
            [Q(1, 2), -Q(1, 2), -Q(1, 2), -Q(1, 2)],
        ]
    if family == "G":
        return [
            [Q(1), Q(-1), Q(0)],
            [Q(-2), Q(1), Q(1)],
        ]
    raise ValueError("unknown family %r" % family)


_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class RootSystem:
    """Irreducible root system: Cartan matrix, positive roots, weights.

    cartan[i][j] = <alpha_j, alpha_i^vee>, so the i-th row pairs against the
    i-th simple coroot.  Positive roots are sorted by (height, coefficient
    tuple), which fixes the chart-coordinate order everywhere downstream.
    """

    def __init__(self, family: str, rank: int):
        if family not in FAMILIES or not _VALID_RANKS.get(family, lambda n: False)(rank):
            raise ValueError("invalid root system type %s%d" % (family, rank))
        self.family = family
        self.rank = rank
        vectors = _simple_root_vectors(family, rank)

        def dot(a, b):
            return sum(x * y for x, y in zip(a, b))

        self.cartan: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(2 * dot(vectors[i], vectors[j]) / dot(vectors[i], vectors[i])) for j in range(rank))
            for i in range(rank)
        )
        self.positive_roots: tuple[Weight, ...] = self._generate_positive_roots()
        expected = _POSITIVE_COUNT[family](rank)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                "positive root generation for %s%d gave %d roots, expected %d"
                % (family, rank, len(self.positive_roots), expected)
            )
        inv = linalg.inverse([[Q(c) for c in row] for row in self.cartan])
        # omega_i = sum_k inv[k][i] alpha_k  solves <omega_i, alpha_j^vee> = delta_ij
        self.fundamental_weights: tuple[Weight, ...] = tuple(
            Weight(inv[k][i] for k in range(rank)) for i in range(rank)
        )
        self._w0_word: tuple[int, ...] | None = None

    # -- basic pairings ------------------------------------------------

    def pairing(self, w: Weight, i: int) -> Q:
        """<w, alpha_i^vee> for the 1-based simple root index i."""
        row = self.cartan[i - 1]
        return sum(c * Q(a) for c, a in zip(w.coords, row))

    def simple_root(self, i: int) -> Weight:
        return Weight(Q(1) if k == i - 1 else Q(0) for k in range(self.rank))

    def reflect(self, w: Weight, i: int) -> Weight:
        return w - self.pairing(w, i) * self.simple_root(i)

    def is_dominant(self, w: Weight) -> bool:
        return all(self.pairing(w, i) >= 0 for i in range(1, self.rank + 1))

    def is_root(self, w: Weight) -> bool:
        return w in self._positive_root_set or -w in self._positive_root_set

    # -- positive roots ------------------------------------------------

    def _generate_positive_roots(self) -> tuple[Weight, ...]:
        simples = [Weight(Q(1) if k == i else Q(0) for k in range(self.rank)) for i in range(self.rank)]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(1, self.rank + 1):
                    img = self.reflect(w, i)
                    if img not in seen and img.is_nonnegative() and not img.is_zero():
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        self._positive_root_set = seen
        return tuple(sorted(seen, key=lambda w: (w.height(), w.coords)))

    # -- longest Weyl element -------------------------------------------

    def w0_word(self) -> tuple[int, ...]:
        """Reduced word for w0, found by anti-dominance descent from rho."""
        if self._w0_word is None:
            v = Weight([Q(0)] * self.rank)
            for om in self.fundamental_weights:
                v = v + om
            word = []
            while True:
                i = next((i for i in range(1, self.rank + 1) if self.pairing(v, i) > 0), None)
                if i is None:
                    break
                v = self.reflect(v, i)
                word.append(i)
            self._w0_word = tuple(word)
        return self._w0_word

    def w0(self, w: Weight) -> Weight:
        for i in self.w0_word():
            w = self.reflect(w, i)
        return w


@lru_cache(maxsize=None)
def root_system(family: str, rank: int) -> RootSystem:
    """Shared immutable instance of the given irreducible type."""
    return RootSystem(family, rank)


def sub_system(rs: RootSystem, subset) -> frozenset[Weight]:
    """Positive roots supported on the given set of 1-based indices."""
    subset = frozenset(subset)
    return frozenset(r for r in rs.positive_roots if r.support() <= subset)


def chart_coordinates(rs: RootSystem, sp) -> tuple[Weight, ...]:
    """Positive roots outside the sub-system on sp, by (height, lex) order."""
    excluded = sub_system(rs, sp)
    return tuple(r for r in rs.positive_roots if r not in excluded)
