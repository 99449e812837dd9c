"""The top-level decision procedure: strictness and simple immersions.

A wonderful variety admits an equivariant closed immersion into the
projective space of a simple module precisely when the centre acts trivially
and no spherical root has a doubled rank-one partner with the same sp in the
classification; the certificate reports the witnessing entry when one exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import picard
from .classify import ClassificationTable, lookup
from .descriptor import WonderfulDescriptor, validate
from .picard import LineBundle
from .rootsys import Weight


@dataclass(frozen=True)
class RootVerdict:
    index: int
    gamma: Weight
    passed: bool
    witnesses: tuple[str, ...]


@dataclass(frozen=True)
class ImmersionVerdict:
    admissible: bool
    adjoint: bool
    roots: tuple[RootVerdict, ...]

    @property
    def failing(self) -> list[RootVerdict]:
        return [r for r in self.roots if not r.passed]


def check_R_prime(d: WonderfulDescriptor, table: ClassificationTable) -> tuple[RootVerdict, ...]:
    """Per-spherical-root check: no rank-one entry with the doubled root and
    the same sp may exist.  Only entries with adjoint action can witness."""
    problems = validate(d)
    if problems:
        raise ValueError("descriptor is invalid: %s" % "; ".join(map(str, problems)))
    out = []
    for k, gamma in enumerate(d.sigma):
        doubled = 2 * gamma
        hits = [inst for inst in lookup(table, d.diagram, doubled, d.sp)
                if inst.entry.adjoint_action]
        out.append(RootVerdict(k, gamma, not hits, tuple(h.label for h in hits)))
    return tuple(out)


def is_simply_immersible(d: WonderfulDescriptor, table: ClassificationTable) -> ImmersionVerdict:
    roots = check_R_prime(d, table)
    ok = d.adjoint_action and all(r.passed for r in roots)
    return ImmersionVerdict(ok, d.adjoint_action, roots)


def admissible_module_weights(d: WonderfulDescriptor, table: ClassificationTable,
                              coefficient_bound: int) -> set[Weight]:
    """Canonical weights of the ample bundles with coefficients up to the
    bound; each weight labels one simple module admitting the immersion."""
    verdict = is_simply_immersible(d, table)
    if not verdict.admissible:
        reasons = []
        if not verdict.adjoint:
            reasons.append("the centre does not act trivially")
        reasons.extend("root %d has witness %s" % (r.index, "/".join(r.witnesses))
                       for r in verdict.failing)
        raise ValueError("no simple immersion exists: " + "; ".join(reasons))
    out = set()
    ids = [c.id for c in d.colours]

    def rec(i, coeffs):
        if i == len(ids):
            out.add(picard.canonical_weight(d, LineBundle(dict(coeffs))))
            return
        for v in range(1, coefficient_bound + 1):
            coeffs[ids[i]] = v
            rec(i + 1, coeffs)
        if ids:
            coeffs.pop(ids[i], None)

    if coefficient_bound >= 1:
        rec(0, {})
    return out
