"""Unipotent groups in exponential coordinates of the first kind.

A NilpotentRep is a basis of root-space matrices E_1..E_k spanning a nilpotent
Lie algebra; group elements are exp(sum x_i E_i).  The multiplication is
computed exactly as coordinates of log(exp(u) exp(x)), which is a finite
polynomial law.
"""

from __future__ import annotations

from fractions import Fraction as Q

from . import linalg, matexp
from .poly import Poly
from .rootsys import Weight


def _vec(m):
    return [e for row in m for e in row]


class RepresentationError(ValueError):
    pass


class NilpotentRep:
    """Nilpotent matrix Lie algebra with a distinguished (root) basis.

    names: coordinate names, conventionally "x1".."xk"; roots: the T-weight
    (a positive root) attached to each coordinate; basis: constant rational
    matrices.  Construction verifies nilpotency and bracket closure.
    """

    def __init__(self, names, roots, basis, check: bool = True):
        self.names = tuple(names)
        self.roots = tuple(roots)
        self.basis = [[[Q(x) for x in row] for row in mat] for mat in basis]
        if not (len(self.names) == len(self.roots) == len(self.basis)):
            raise RepresentationError("names, roots and basis must be aligned")
        self.dim = len(self.basis[0])
        self.k = len(self.basis)
        if any(not n.startswith("x") for n in self.names):
            raise RepresentationError("coordinate names must look like x1..xk")
        self.u_names = tuple("u" + n[1:] for n in self.names)
        cols = [_vec(m) for m in self.basis]
        m = [[cols[j][i] for j in range(self.k)] for i in range(self.dim ** 2)]
        gram = [[sum(m[i][a] * m[i][b] for i in range(self.dim ** 2)) for b in range(self.k)] for a in range(self.k)]
        try:
            gram_inv = linalg.inverse(gram)
        except ValueError:
            raise RepresentationError("basis matrices are linearly dependent")
        # T with T . vec(E_j) = e_j: exact coordinate extraction
        self._extract = [
            [sum(gram_inv[a][b] * m[i][b] for b in range(self.k)) for i in range(self.dim ** 2)]
            for a in range(self.k)
        ]
        self._law: list[Poly] | None = None
        self._jac: list[list[Poly]] | None = None
        self._fields: list[list[Poly]] | None = None
        if check:
            self._check_structure()

    def _check_structure(self):
        for name, mat in zip(self.names, self.basis):
            if matexp.nilpotency_index(mat) is None:
                raise RepresentationError("basis matrix for %s is not nilpotent" % name)
        for a in range(self.k):
            for b in range(a + 1, self.k):
                br = matexp.mat_sub(
                    matexp.mat_mul(self.basis[a], self.basis[b]),
                    matexp.mat_mul(self.basis[b], self.basis[a]),
                )
                self.coords_of(br)  # raises if the bracket leaves the span

    # -- coordinates -------------------------------------------------------

    def coords_of(self, mat) -> list:
        """Coefficients of mat in the basis; exact, with consistency check."""
        v = _vec(mat)
        coords = []
        for row in self._extract:
            acc = None
            for c, e in zip(row, v):
                if c == 0:
                    continue
                term = c * e
                acc = term if acc is None else acc + term
            coords.append(Q(0) if acc is None else acc)
        for i in range(self.dim):
            for j in range(self.dim):
                acc = Q(0)
                for z, mat_b in zip(coords, self.basis):
                    if mat_b[i][j] != 0:
                        acc = acc + z * mat_b[i][j]
                if not acc == mat[i][j]:
                    raise RepresentationError("matrix does not lie in the span of the basis")
        return coords

    def algebra_element(self, coefficients) -> list[list]:
        """sum coefficients[i] * E_i with Poly or Fraction coefficients."""
        n = self.dim
        out = [[Q(0)] * n for _ in range(n)]
        for c, mat in zip(coefficients, self.basis):
            for i in range(n):
                for j in range(n):
                    if mat[i][j] != 0:
                        out[i][j] = out[i][j] + c * mat[i][j]
        return out

    def exp_symbolic(self, names=None) -> list[list[Poly]]:
        names = self.names if names is None else tuple(names)
        x = self.algebra_element([Poly.var(n) for n in names])
        return matexp.nilpotent_exp(x)

    # -- the group law -------------------------------------------------------

    def law(self) -> list[Poly]:
        """z(u, x) with exp(sum z E) = exp(sum u E) exp(sum x E)."""
        if self._law is None:
            u = self.exp_symbolic(self.u_names)
            x = self.exp_symbolic(self.names)
            product = matexp.mat_mul(u, x)
            log = matexp.unipotent_log(product)
            self._law = [p if isinstance(p, Poly) else Poly.const(p) for p in self.coords_of(log)]
        return self._law

    def multiply(self, left_values, right_values) -> list:
        """Numeric product in coordinates, via matrices (no symbolic law)."""
        l = matexp.nilpotent_exp(self.algebra_element([Q(v) for v in left_values]))
        r = matexp.nilpotent_exp(self.algebra_element([Q(v) for v in right_values]))
        return self.coords_of(matexp.unipotent_log(matexp.mat_mul(l, r)))

    def inverse_coords(self, values) -> list:
        """exp(sum x E)^-1 = exp(-sum x E): negation in these coordinates."""
        return [-Q(v) for v in values]

    def substituted_law(self, u_values) -> list[Poly]:
        """z(u0, x) for a fixed rational left factor u0, as polynomials in x."""
        vals = {n: Q(v) for n, v in zip(self.u_names, u_values)}
        return [z.subs({n: vals[n] for n in z.vars if n in vals}) for z in self.law()]

    def law_x_jacobian_at_zero(self) -> list[list[Poly]]:
        """J[b][g] = d z_b / d x_g at x = 0, a polynomial in u."""
        if self._jac is None:
            law = self.law()
            zero_x = {n: 0 for n in self.names}
            jac = []
            for zb in law:
                row = []
                for xg in self.names:
                    if xg in zb.vars:
                        d = zb.diff(xg)
                        row.append(d.subs({n: 0 for n in d.vars if n in zero_x}))
                    else:
                        row.append(Poly())
                jac.append(row)
            self._jac = jac
        return self._jac

    def invariance_fields(self) -> list[list[Poly]]:
        """V[b][g] = d z_g / d u_b at u = 0, a polynomial in x.

        Row b is the derivation of the left translation by exp(t E_b).
        """
        if self._fields is None:
            law = self.law()
            fields = []
            for ub in self.u_names:
                row = []
                for zg in law:
                    if ub in zg.vars:
                        d = zg.diff(ub)
                        row.append(d.subs({n: 0 for n in d.vars if n.startswith("u")}))
                    else:
                        row.append(Poly())
                fields.append(row)
            self._fields = fields
        return self._fields


def group_law(rep: NilpotentRep, u_coords, x_coords) -> list:
    """Coordinates of exp(sum u E) exp(sum x E).

    Accepts rational coordinate vectors (matrix route) or returns the cached
    symbolic law when both arguments are the reps' own variable names.
    """
    if list(u_coords) == list(rep.u_names) and list(x_coords) == list(rep.names):
        return rep.law()
    return rep.multiply(u_coords, x_coords)
