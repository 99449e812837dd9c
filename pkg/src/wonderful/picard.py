"""Line-bundle calculus on a wonderful descriptor.

The Picard group is free on the colours; positivity of the coefficients
decides ampleness, restriction to the closed orbit produces the canonical
weight, and the weights of the global sections are enumerated exactly from
the colour pairings against the spherical roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .classify import InstantiatedEntry
from .descriptor import WonderfulDescriptor
from .rootsys import Weight


@dataclass(frozen=True)
class LineBundle:
    coeffs: dict

    def coefficient(self, colour_id: str) -> int:
        return self.coeffs[colour_id]


class UnboundedSectionEnumeration(ValueError):
    def __init__(self, gamma_index: int):
        self.gamma_index = gamma_index
        super().__init__(
            "no colour bounds the coefficient of spherical root %d; "
            "the section enumeration would be infinite" % gamma_index
        )


def _check_bundle(d: WonderfulDescriptor, bundle: LineBundle):
    ids = {c.id for c in d.colours}
    if set(bundle.coeffs) != ids:
        raise ValueError("bundle coefficients must be indexed by the colours %s" % sorted(ids))


def classify_bundle(d: WonderfulDescriptor, bundle: LineBundle) -> str:
    """"ample", "globally_generated" or "neither"."""
    _check_bundle(d, bundle)
    values = [bundle.coeffs[c.id] for c in d.colours]
    if all(v > 0 for v in values):
        return "ample"
    if all(v >= 0 for v in values):
        return "globally_generated"
    return "neither"


def colour_multiplicity(d: WonderfulDescriptor, colour_id: str) -> int:
    """2 when some moving root alpha of the colour has 2 alpha among the
    spherical roots, 1 otherwise."""
    colour = next(c for c in d.colours if c.id == colour_id)
    n = d.diagram.rank
    for i in colour.moving:
        doubled = Weight([Q(2) if k == i - 1 else Q(0) for k in range(n)])
        if any(g == doubled for g in d.sigma):
            return 2
    return 1


def restrict_to_Z(d: WonderfulDescriptor, colour_id: str) -> Weight:
    """The weight of the colour's intersection with the closed orbit."""
    colour = next(c for c in d.colours if c.id == colour_id)
    moving = sorted(colour.moving)
    if len(moving) == 2:
        return d.diagram.fundamental_weight(moving[0]) + d.diagram.fundamental_weight(moving[1])
    om = d.diagram.fundamental_weight(moving[0])
    return colour_multiplicity(d, colour_id) * om


def canonical_weight(d: WonderfulDescriptor, bundle: LineBundle) -> Weight:
    """The weight of the canonical section, sum of the colour restrictions."""
    if classify_bundle(d, bundle) == "neither":
        raise ValueError("the canonical weight is defined for effective bundles")
    total = d.diagram.zero()
    for c in d.colours:
        total = total + bundle.coeffs[c.id] * restrict_to_Z(d, c.id)
    return total


# -- section weights ----------------------------------------------------------


def _fourier_motzkin_bound(ineqs: list[tuple[list[Q], Q]], r: int, var: int) -> Q | None:
    """Maximum of x_var subject to A x <= b and x >= 0, or None if unbounded.

    Classic elimination; sizes here are tiny (rank x colours).
    """
    system = [(list(a), Q(b)) for a, b in ineqs]
    for j in range(r):
        system.append(([Q(-1) if k == j else Q(0) for k in range(r)], Q(0)))
    for j in range(r):
        if j == var:
            continue
        pos = [(a, b) for a, b in system if a[j] > 0]
        neg = [(a, b) for a, b in system if a[j] < 0]
        rest = [(a, b) for a, b in system if a[j] == 0]
        combined = []
        for ap, bp in pos:
            for an, bn in neg:
                scale_p, scale_n = -an[j], ap[j]
                row = [scale_p * x + scale_n * y for x, y in zip(ap, an)]
                combined.append((row, scale_p * bp + scale_n * bn))
        system = rest + combined
    best: Q | None = None
    for a, b in system:
        if a[var] > 0:
            bound = b / a[var]
            best = bound if best is None else min(best, bound)
    return best


def section_weights(d: WonderfulDescriptor, bundle: LineBundle) -> set[Weight]:
    """Highest weights of the simple modules among the global sections.

    These are the dominant weights chi + xi with xi a non-positive integral
    combination of the spherical roots subject to <rho(D), xi> + n_D >= 0 for
    every colour D.  The pairings must bound the enumeration; otherwise the
    offending spherical root is reported.
    """
    kind = classify_bundle(d, bundle)
    if kind == "neither":
        raise ValueError("sections are enumerated for effective bundles only")
    chi = canonical_weight(d, bundle)
    r = len(d.sigma)
    if r == 0:
        return {chi}
    ineqs = []
    for c in d.colours:
        ineqs.append(([Q(v) for v in c.rho], Q(bundle.coeffs[c.id])))
    bounds = []
    for i in range(r):
        b = _fourier_motzkin_bound(ineqs, r, i)
        if b is None:
            raise UnboundedSectionEnumeration(i)
        bounds.append(int(b))
    out = set()

    def rec(i, c_vec):
        if i == r:
            for a, b in ineqs:
                if sum(x * y for x, y in zip(a, c_vec)) > b:
                    return
            w = chi
            for c, g in zip(c_vec, d.sigma):
                w = w - c * g
            if d.diagram.is_dominant(w):
                out.add(w)
            return
        for c in range(bounds[i] + 1):
            rec(i + 1, c_vec + [c])

    rec(0, [])
    return out


def very_ample_witness(entry: InstantiatedEntry, bundle: LineBundle) -> bool:
    """Whether the distinguished rational section with simple poles along the
    colours lies among the global sections of the given ample bundle.

    Only meaningful for the non-strict cuspidal entries with recorded pole
    data; strict entries are handled by the immersion criterion instead.
    """
    if entry.entry.normalizer_quotient == 1:
        raise ValueError(
            "entry %s is strict; very-ampleness follows from the immersion criterion"
            % entry.label
        )
    ids = {c.id for c in entry.colours}
    if set(bundle.coeffs) != ids:
        raise ValueError("bundle coefficients must be indexed by the colours %s" % sorted(ids))
    if not all(v > 0 for v in bundle.coeffs.values()):
        raise ValueError("the witness test applies to ample bundles")
    for c in entry.colours:
        if c.pole is None:
            raise ValueError("entry %s has no recorded pole order for colour %s"
                             % (entry.label, c.id))
        if bundle.coeffs[c.id] - c.pole < 0:
            return False
    return True
