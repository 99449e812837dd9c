"""The combinatorial model of a wonderful variety of arbitrary rank.

A descriptor records the group diagram, the spherical roots, the simple roots
of the parabolic stabilizing the open Borel orbit, and the colours with their
moving roots and pairings against the spherical roots.  Validation reports
violations as data; it never raises on semantically bad descriptors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction as Q
from pathlib import Path

from .diagram import Diagram, parse_diagram
from .rootsys import Weight


@dataclass(frozen=True)
class Colour:
    id: str
    moving: frozenset[int]
    rho: tuple[Q, ...]  # pairing against each spherical root, in sigma order


@dataclass(frozen=True)
class WonderfulDescriptor:
    diagram: Diagram
    sigma: tuple[Weight, ...]
    sp: frozenset[int]
    colours: tuple[Colour, ...]
    adjoint_action: bool = True

    @property
    def rank(self) -> int:
        return len(self.sigma)


@dataclass(frozen=True)
class Violation:
    field: str
    rule: str

    def __str__(self):
        return "%s: %s" % (self.field, self.rule)


def validate(d: WonderfulDescriptor, strictness_candidate: bool = False) -> list[Violation]:
    """Invariant check; empty list means the descriptor is well formed.

    With strictness_candidate the rule that distinct colours have disjoint
    moving sets is enforced as well (it holds for strict varieties but not,
    for example, for the product of two lines).
    """
    out: list[Violation] = []
    n = d.diagram.rank
    if not d.sp <= set(range(1, n + 1)):
        out.append(Violation("sp", "contains indices outside the diagram"))
    for k, g in enumerate(d.sigma):
        if len(g) != n:
            out.append(Violation("sigma[%d]" % k, "wrong coordinate length"))
            continue
        if g.is_zero():
            out.append(Violation("sigma[%d]" % k, "spherical root is zero"))
        if not g.is_nonnegative():
            out.append(Violation("sigma[%d]" % k, "negative coefficient"))
    seen_ids = set()
    for c in d.colours:
        tag = "colour %s" % c.id
        if c.id in seen_ids:
            out.append(Violation(tag, "duplicate colour id"))
        seen_ids.add(c.id)
        if len(c.moving) not in (1, 2):
            out.append(Violation(tag, "a colour is moved by one or two simple roots"))
        if not c.moving <= set(range(1, n + 1)):
            out.append(Violation(tag, "moving root outside the diagram"))
            continue
        if len(c.moving) == 2:
            i, j = sorted(c.moving)
            if d.diagram.cartan(i, j) != 0:
                out.append(Violation(tag, "two moving roots must be orthogonal"))
        if c.moving & d.sp:
            out.append(Violation(tag, "moving root lies in sp"))
        if len(c.rho) != len(d.sigma):
            out.append(Violation(tag, "rho must pair against every spherical root"))
    if strictness_candidate:
        for a in range(len(d.colours)):
            for b in range(a + 1, len(d.colours)):
                if d.colours[a].moving & d.colours[b].moving:
                    out.append(Violation(
                        "colours %s,%s" % (d.colours[a].id, d.colours[b].id),
                        "one simple root moves two colours",
                    ))
    return out


def rank1_slice(d: WonderfulDescriptor, gamma_index: int) -> WonderfulDescriptor:
    """The rank-one sub-descriptor attached to one spherical root.

    Keeps sp, restricts sigma to the chosen root, and keeps the colours that
    pair nontrivially against it or are moved inside its support.
    """
    if not 0 <= gamma_index < len(d.sigma):
        raise IndexError("spherical root index out of range")
    g = d.sigma[gamma_index]
    supp = g.support()
    kept = []
    for c in d.colours:
        if c.rho[gamma_index] != 0 or (c.moving & supp):
            kept.append(Colour(c.id, c.moving, (c.rho[gamma_index],)))
    return WonderfulDescriptor(d.diagram, (g,), d.sp, tuple(kept), d.adjoint_action)


# -- JSON interface ------------------------------------------------------------


def _weight_from_json(coords, rank: int) -> Weight:
    if len(coords) != rank:
        raise ValueError("spherical root has %d coefficients, diagram rank is %d" % (len(coords), rank))
    return Weight([Q(str(c)) for c in coords])


def descriptor_from_dict(data: dict) -> WonderfulDescriptor:
    diagram = parse_diagram(data["diagram"])
    sigma = tuple(_weight_from_json(c, diagram.rank) for c in data["sigma"])
    sp = frozenset(int(i) for i in data.get("sp", ()))
    colours = []
    for c in data.get("colours", ()):
        rho = tuple(Q(str(v)) for v in c["rho"])
        colours.append(Colour(str(c["id"]), frozenset(int(i) for i in c["moving"]), rho))
    return WonderfulDescriptor(diagram, sigma, sp, tuple(colours),
                               bool(data.get("adjoint", True)))


def descriptor_to_dict(d: WonderfulDescriptor) -> dict:
    return {
        "diagram": str(d.diagram),
        "sigma": [[str(c) for c in g.coords] for g in d.sigma],
        "sp": sorted(d.sp),
        "colours": [
            {"id": c.id, "moving": sorted(c.moving), "rho": [str(v) for v in c.rho]}
            for c in d.colours
        ],
        "adjoint": d.adjoint_action,
    }


def load_descriptor(path) -> WonderfulDescriptor:
    return descriptor_from_dict(json.loads(Path(path).read_text()))
