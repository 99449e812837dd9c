"""Exact multivariate polynomials over the rationals, with optional T-weights.

Dense map representation: exponent tuple (aligned to a sorted variable tuple)
-> Fraction.  No zero coefficients are stored; all arithmetic is exact.  The
canonical term order is graded lexicographic on the exponent tuple, which also
fixes the text rendering used by golden tests.
"""

from __future__ import annotations

import re
from fractions import Fraction as Q

_NUM_SUFFIX = re.compile(r"^(.*?)(\d+)$")


def _var_key(name: str):
    m = _NUM_SUFFIX.match(name)
    if m:
        return (m.group(1), int(m.group(2)), name)
    return (name, -1, name)


def _sort_vars(names) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=_var_key))


class NotTHomogeneous(ValueError):
    """Raised when a polynomial has terms of different T-weights."""

    def __init__(self, term_a, term_b):
        self.witness = (term_a, term_b)
        super().__init__("terms %s and %s have different T-weights" % (term_a, term_b))


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        object.__setattr__(self, "vars", tuple(vars))
        object.__setattr__(self, "terms", dict(terms or {}))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def const(c) -> "Poly":
        c = Q(c)
        if c == 0:
            return Poly()
        return Poly((), {(): c})

    @staticmethod
    def var(name: str) -> "Poly":
        return Poly((name,), {(1,): Q(1)})

    @staticmethod
    def monomial(exps: dict, coeff=1) -> "Poly":
        coeff = Q(coeff)
        if coeff == 0:
            return Poly()
        names = _sort_vars(exps)
        key = tuple(exps[v] for v in names)
        return Poly(names, {key: coeff})

    # -- variable alignment ----------------------------------------------

    def _on_vars(self, vars: tuple[str, ...]) -> dict:
        if vars == self.vars:
            return self.terms
        pos = {v: i for i, v in enumerate(vars)}
        idx = [pos[v] for v in self.vars]
        out = {}
        for key, c in self.terms.items():
            nk = [0] * len(vars)
            for p, e in zip(idx, key):
                nk[p] = e
            out[tuple(nk)] = c
        return out

    def _unify(self, other: "Poly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vars = _sort_vars(self.vars + other.vars)
        return vars, self._on_vars(vars), other._on_vars(vars)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        vars, a, b = self._unify(other)
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, Q(0)) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return Poly(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            q = Q(other)
            if q == 0:
                return Poly()
            return Poly(self.vars, {k: c * q for k, c in self.terms.items()})
        vars, a, b = self._unify(other)
        out: dict = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                s = out.get(k, Q(0)) + ca * cb
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        return Poly(vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            vars, a, b = self._unify(other)
            return a == b
        return self.terms == ({} if Q(other) == 0 else {(): Q(other)})

    def __hash__(self):
        reduced = tuple(sorted((k, c) for k, c in self._trimmed().terms.items()))
        return hash(reduced)

    def is_zero(self) -> bool:
        return not self.terms

    # -- calculus ---------------------------------------------------------

    def diff(self, name: str) -> "Poly":
        if name not in self.vars:
            raise KeyError("unknown variable %r" % name)
        i = self.vars.index(name)
        out = {}
        for k, c in self.terms.items():
            if k[i] == 0:
                continue
            nk = list(k)
            nk[i] -= 1
            out[tuple(nk)] = c * k[i]
        return Poly(self.vars, out)

    def subs(self, mapping: dict) -> "Poly":
        """Substitute variables by polynomials or scalars (composition)."""
        for name in mapping:
            if name not in self.vars:
                raise KeyError("unknown variable %r" % name)
        repl = {}
        for v in self.vars:
            r = mapping.get(v, None)
            repl[v] = Poly.var(v) if r is None else (r if isinstance(r, Poly) else Poly.const(r))
        powers: dict[tuple[str, int], Poly] = {}

        def power(v, e):
            key = (v, e)
            if key not in powers:
                powers[key] = repl[v] ** e
            return powers[key]

        acc = Poly()
        for k, c in self.terms.items():
            term = Poly.const(c)
            for v, e in zip(self.vars, k):
                if e:
                    term = term * power(v, e)
            acc = acc + term
        return acc

    def map_vars(self, rename: dict) -> "Poly":
        """Rename variables (a bijection on the ones that occur)."""
        names = [rename.get(v, v) for v in self.vars]
        if len(set(names)) != len(names):
            raise ValueError("renaming collides")
        order = _sort_vars(names)
        pos = {v: i for i, v in enumerate(order)}
        out = {}
        for k, c in self.terms.items():
            nk = [0] * len(order)
            for v, e in zip(names, k):
                nk[pos[v]] = e
            out[tuple(nk)] = c
        return Poly(order, out)

    def const_term(self) -> Q:
        return self.terms.get((0,) * len(self.vars), Q(0))

    def evaluate(self, values: dict) -> Q:
        """Evaluate at a full rational point (missing names default to 0)."""
        total = Q(0)
        for k, c in self.terms.items():
            prod = c
            for v, e in zip(self.vars, k):
                if e:
                    prod *= Q(values.get(v, 0)) ** e
            total += prod
        return total

    # -- structure ----------------------------------------------------------

    def _trimmed(self) -> "Poly":
        used = [i for i, v in enumerate(self.vars) if any(k[i] for k in self.terms)]
        if len(used) == len(self.vars):
            return self
        vars = tuple(self.vars[i] for i in used)
        return Poly(vars, {tuple(k[i] for i in used): c for k, c in self.terms.items()})

    def total_degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max((k[i] for k in self.terms), default=0)

    def coefficient(self, exps: dict) -> Q:
        """Coefficient of the monomial with exactly the given exponents."""
        p = self._trimmed()
        names = _sort_vars(exps)
        if any(n not in p.vars for n in names if exps[n]):
            return Q(0)
        key = tuple(exps.get(v, 0) for v in p.vars)
        return p.terms.get(key, Q(0))

    def coefficient_in(self, name: str, power: int) -> "Poly":
        """The polynomial coefficient of name**power."""
        if name not in self.vars:
            return self if power == 0 else Poly()
        i = self.vars.index(name)
        out = {}
        for k, c in self.terms.items():
            if k[i] == power:
                nk = list(k)
                nk[i] = 0
                out[tuple(nk)] = c
        return Poly(self.vars, out)._trimmed()

    def sorted_terms(self):
        """Terms in descending graded-lex order: [(exps, vars, coeff)]."""
        p = self._trimmed()
        keys = sorted(p.terms, key=lambda k: (sum(k), k), reverse=True)
        return [(k, p.vars, p.terms[k]) for k in keys]

    def leading_coefficient(self) -> Q:
        if self.is_zero():
            return Q(0)
        return self.sorted_terms()[0][2]

    def monic(self) -> "Poly":
        """Scale so the leading coefficient (graded lex) is one."""
        lc = self.leading_coefficient()
        if lc == 0:
            return self
        return self * (Q(1) / lc)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, vars, c in self.sorted_terms():
            factors = []
            for v, e in zip(vars, k):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append("%s^%d" % (v, e))
            body = "*".join(factors)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = "%s*%s" % (abs(c), body)
            sign = "-" if c < 0 else "+"
            parts.append((sign, text))
        first_sign, first = parts[0]
        rendered = ("-" + first) if first_sign == "-" else first
        for sign, text in parts[1:]:
            rendered += " %s %s" % (sign, text)
        return rendered

    def __repr__(self):
        return "Poly(%s)" % self


def t_weight(p: Poly, weights: dict):
    """Common T-weight of a homogeneous polynomial.

    Variable x_alpha carries weight -alpha; the weight of a monomial is the
    sum over its variables.  Raises NotTHomogeneous with a witness pair of
    terms if two monomials disagree, KeyError if a variable has no weight.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no T-weight")
    p = p._trimmed()
    for v in p.vars:
        if v not in weights:
            raise KeyError("variable %r has no assigned weight" % v)
    seen = None
    seen_key = None
    for k in sorted(p.terms):
        w = None
        for v, e in zip(p.vars, k):
            if e:
                contrib = e * weights[v]
                w = contrib if w is None else w + contrib
        if w is None:  # constant term: weight zero of the ambient lattice
            some = next(iter(weights.values()))
            w = 0 * some
        if seen is None:
            seen, seen_key = w, k
        elif w != seen:
            a = Poly(p.vars, {seen_key: p.terms[seen_key]})
            b = Poly(p.vars, {k: p.terms[k]})
            raise NotTHomogeneous(str(a), str(b))
    return seen
