"""Semisimple Dynkin diagrams as ordered sums of irreducible components.

Most of the library works with a single irreducible type, but the rank-one
classification contains one entry over a product group, so descriptors accept
composite diagrams.  Simple roots are numbered 1..rank globally, component by
component.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache

from .rootsys import RootSystem, Weight, root_system


@dataclass(frozen=True)
class Diagram:
    components: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for fam, rk in self.components:
            root_system(fam, rk)  # validates the pair

    @property
    def rank(self) -> int:
        return sum(rk for _, rk in self.components)

    @property
    def is_irreducible(self) -> bool:
        return len(self.components) == 1

    def __str__(self):
        return "+".join("%s%d" % (f, r) for f, r in self.components)

    # -- indexing ---------------------------------------------------------

    def component_of(self, i: int) -> tuple[int, int]:
        """(component index, 1-based local index) for global index i."""
        offset = 0
        for ci, (_, rk) in enumerate(self.components):
            if i <= offset + rk:
                return ci, i - offset
            offset += rk
        raise IndexError("simple root index %d out of range" % i)

    def systems(self) -> list[RootSystem]:
        return [root_system(f, r) for f, r in self.components]

    def cartan(self, i: int, j: int) -> int:
        ci, li = self.component_of(i)
        cj, lj = self.component_of(j)
        if ci != cj:
            return 0
        rs = self.systems()[ci]
        return rs.cartan[li - 1][lj - 1]

    def cartan_submatrix(self, indices) -> list[list[int]]:
        idx = list(indices)
        return [[self.cartan(i, j) for j in idx] for i in idx]

    # -- weights ------------------------------------------------------------

    def _split(self, w: Weight) -> list[Weight]:
        parts = []
        offset = 0
        for _, rk in self.components:
            parts.append(Weight(w.coords[offset:offset + rk]))
            offset += rk
        return parts

    def _join(self, parts) -> Weight:
        coords: list[Q] = []
        for p in parts:
            coords.extend(p.coords)
        return Weight(coords)

    def zero(self) -> Weight:
        return Weight([Q(0)] * self.rank)

    def fundamental_weight(self, i: int) -> Weight:
        ci, li = self.component_of(i)
        parts = []
        for k, rs in enumerate(self.systems()):
            if k == ci:
                parts.append(rs.fundamental_weights[li - 1])
            else:
                parts.append(Weight([Q(0)] * rs.rank))
        return self._join(parts)

    def pairing(self, w: Weight, i: int) -> Q:
        ci, li = self.component_of(i)
        return self.systems()[ci].pairing(self._split(w)[ci], li)

    def is_dominant(self, w: Weight) -> bool:
        return all(self.pairing(w, i) >= 0 for i in range(1, self.rank + 1))

    def w0(self, w: Weight) -> Weight:
        parts = [rs.w0(p) for rs, p in zip(self.systems(), self._split(w))]
        return self._join(parts)

    def positive_roots(self) -> list[Weight]:
        out = []
        for k, rs in enumerate(self.systems()):
            for r in rs.positive_roots:
                parts = [Weight([Q(0)] * s.rank) for s in self.systems()]
                parts[k] = r
                out.append(self._join(parts))
        return out


@lru_cache(maxsize=None)
def _parse_cached(text: str) -> Diagram:
    comps = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if len(chunk) < 2 or not chunk[0].isalpha():
            raise ValueError("cannot parse diagram component %r" % chunk)
        comps.append((chunk[0].upper(), int(chunk[1:])))
    return Diagram(tuple(comps))


def parse_diagram(spec) -> Diagram:
    """Accepts "B3", "A1+A1", ("B", 3), or {"family": .., "rank": ..}."""
    if isinstance(spec, Diagram):
        return spec
    if isinstance(spec, str):
        return _parse_cached(spec)
    if isinstance(spec, dict):
        if "components" in spec:
            return Diagram(tuple((f.upper(), int(r)) for f, r in spec["components"]))
        return Diagram(((spec["family"].upper(), int(spec["rank"])),))
    family, rank = spec
    return Diagram(((family.upper(), int(rank)),))
