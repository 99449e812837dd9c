"""The rank-one cuspidal classification table.

Entries are rank patterns (families like B_n, n >= 2, or fixed small-rank
cases) carrying the spherical root, the simple roots of the generic-orbit
parabolic, the colours with their pairings and pole orders, and the
normalizer data.  Matching against a descriptor is diagram-local: it happens
on the sub-diagram spanned by the root's support and sp, up to diagram
automorphism, which is what makes cross-family coincidences (such as the
rank-two orthogonal/symplectic overlap) come out right.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction as Q
from importlib import resources
from pathlib import Path

from .descriptor import Colour, WonderfulDescriptor
from .diagram import Diagram, parse_diagram
from .rootsys import Weight

SCHEMA_VERSION = 1

_INDEX_RE = re.compile(r"^\s*(?:(\d+)|n\s*(?:(-|\+)\s*(\d+))?)\s*$")


class TableValidationError(ValueError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join("[%s] %s: %s" % p for p in self.problems))


def _eval_index(expr: str, n: int) -> int:
    m = _INDEX_RE.match(str(expr))
    if not m:
        raise ValueError("cannot parse index expression %r" % expr)
    if m.group(1) is not None:
        return int(m.group(1))
    if m.group(2) is None:
        return n
    off = int(m.group(3))
    return n - off if m.group(2) == "-" else n + off


def _eval_segment(expr: str, n: int) -> list[int]:
    if ".." in expr:
        lo, hi = expr.split("..")
        return list(range(_eval_index(lo, n), _eval_index(hi, n) + 1))
    return [_eval_index(expr, n)]


@dataclass(frozen=True)
class ColourSpec:
    id: str
    moving: tuple[str, ...]
    rho_gamma: Q
    pole: int | None


@dataclass(frozen=True)
class Rank1Entry:
    label: str
    family: str
    rank_min: int
    rank_max: int | None
    gamma: tuple[tuple[str, Q], ...]  # (segment, coefficient)
    sp: tuple[str, ...]
    colours: tuple[ColourSpec, ...]
    self_normalizing: bool
    normalizer_quotient: int
    adjoint_action: bool
    coincides_with: str | None
    source: str

    @property
    def base_label(self) -> str:
        return self.label.split("(")[0]

    @property
    def canonical_label(self) -> str:
        return self.coincides_with or self.base_label

    @property
    def rank_param(self) -> bool:
        return self.rank_max is None

    def allows_rank(self, rank: int) -> bool:
        return rank >= self.rank_min and (self.rank_max is None or rank <= self.rank_max)

    def diagram_at(self, rank: int) -> Diagram:
        if self.family == "A1+A1":
            return parse_diagram("A1+A1")
        return parse_diagram((self.family, rank))

    def instantiate(self, rank: int | None = None) -> "InstantiatedEntry":
        rank = self.rank_min if rank is None else rank
        if not self.allows_rank(rank):
            raise ValueError("entry %s does not exist at rank %d" % (self.label, rank))
        diagram = self.diagram_at(rank)
        coords = [Q(0)] * diagram.rank
        for seg, coeff in self.gamma:
            for i in _eval_segment(seg, rank):
                if not 1 <= i <= diagram.rank:
                    raise ValueError("entry %s: gamma index %d out of range" % (self.label, i))
                coords[i - 1] = coeff
        sp = set()
        for seg in self.sp:
            for i in _eval_segment(seg, rank):
                sp.add(i)
        colours = tuple(
            InstantiatedColour(
                c.id,
                frozenset(_eval_index(e, rank) for e in c.moving),
                c.rho_gamma,
                c.pole,
            )
            for c in self.colours
        )
        return InstantiatedEntry(self, rank, diagram, Weight(coords), frozenset(sp), colours)


@dataclass(frozen=True)
class InstantiatedColour:
    id: str
    moving: frozenset[int]
    rho_gamma: Q
    pole: int | None


@dataclass(frozen=True)
class InstantiatedEntry:
    entry: Rank1Entry
    rank: int
    diagram: Diagram
    gamma: Weight
    sp: frozenset[int]
    colours: tuple[InstantiatedColour, ...]

    @property
    def label(self) -> str:
        return self.entry.label

    def as_descriptor(self) -> WonderfulDescriptor:
        cols = tuple(Colour(c.id, c.moving, (c.rho_gamma,)) for c in self.colours)
        return WonderfulDescriptor(self.diagram, (self.gamma,), self.sp, cols,
                                   self.entry.adjoint_action)


@dataclass(frozen=True)
class ClassificationTable:
    entries: tuple[Rank1Entry, ...]

    def by_label(self, label: str) -> Rank1Entry:
        for e in self.entries:
            if e.label == label or e.base_label == label:
                return e
        raise KeyError("no entry labelled %r" % label)

    def labels(self) -> list[str]:
        return [e.label for e in self.entries]


# -- loading and validation -------------------------------------------------------


def _entry_from_dict(raw: dict) -> Rank1Entry:
    gamma = tuple((str(seg), Q(str(c))) for seg, c in raw["gamma"].items())
    colours = tuple(
        ColourSpec(
            str(c["id"]),
            tuple(str(m) for m in c["moving"]),
            Q(str(c["rho_gamma"])),
            None if c.get("pole") is None else int(c["pole"]),
        )
        for c in raw["colours"]
    )
    return Rank1Entry(
        label=str(raw["label"]),
        family=str(raw["family"]),
        rank_min=int(raw["rank_min"]),
        rank_max=None if raw.get("rank_max") is None else int(raw["rank_max"]),
        gamma=gamma,
        sp=tuple(str(s) for s in raw.get("sp", ())),
        colours=colours,
        self_normalizing=bool(raw["self_normalizing"]),
        normalizer_quotient=int(raw.get("normalizer_quotient", 1)),
        adjoint_action=bool(raw.get("adjoint_action", True)),
        coincides_with=raw.get("coincides_with"),
        source=str(raw.get("source", "")),
    )


def _sample_ranks(entry: Rank1Entry) -> list[int]:
    top = entry.rank_min + 2 if entry.rank_max is None else min(entry.rank_max, entry.rank_min + 2)
    return list(range(entry.rank_min, top + 1))


def load_table(source=None) -> ClassificationTable:
    """Load and validate the classification data.

    source may be bytes, a JSON string, a path, a parsed dict, or None for
    the packaged table.  Violations are collected and raised together.
    """
    if source is None:
        data = json.loads(resources.files("wonderful.data").joinpath("rank1_table.json").read_text())
    elif isinstance(source, dict):
        data = source
    elif isinstance(source, bytes):
        data = json.loads(source.decode("utf-8"))
    elif isinstance(source, str) and source.lstrip().startswith("{"):
        data = json.loads(source)
    else:
        data = json.loads(Path(source).read_text())

    problems: list[tuple[str, str, str]] = []
    if data.get("schema_version") != SCHEMA_VERSION:
        problems.append(("table", "schema_version", "expected %d" % SCHEMA_VERSION))
        raise TableValidationError(problems)

    entries = []
    for raw in data.get("entries", ()):
        label = str(raw.get("label", "?"))
        try:
            entries.append(_entry_from_dict(raw))
        except (KeyError, ValueError) as exc:
            problems.append((label, "schema", str(exc)))
    if problems:
        raise TableValidationError(problems)

    seen = set()
    for e in entries:
        if e.label in seen:
            problems.append((e.label, "label", "duplicate label"))
        seen.add(e.label)
        if e.self_normalizing != (e.normalizer_quotient == 1):
            problems.append((e.label, "self_normalizing", "inconsistent with normalizer_quotient"))
        for rank in _sample_ranks(e):
            try:
                inst = e.instantiate(rank)
            except ValueError as exc:
                problems.append((e.label, "instantiation", str(exc)))
                continue
            if inst.gamma.is_zero():
                problems.append((e.label, "gamma", "zero spherical root"))
            if not inst.gamma.is_nonnegative():
                problems.append((e.label, "gamma", "negative coefficient"))
            for c in inst.colours:
                if c.moving & inst.sp:
                    problems.append((e.label, "colour %s" % c.id, "moving root lies in sp"))
            moved: dict[int, str] = {}
            for c in inst.colours:
                for i in c.moving:
                    # a simple root that is itself the spherical root moves a
                    # pair of colours; in every other situation one root moves
                    # at most one colour
                    alpha = Weight([Q(1) if k == i - 1 else Q(0) for k in range(inst.diagram.rank)])
                    if i in moved and inst.gamma != alpha:
                        problems.append((e.label, "colour %s" % c.id,
                                         "simple root %d moves two colours" % i))
                    moved[i] = c.id
            covered = inst.gamma.support() | inst.sp
            if covered != set(range(1, inst.diagram.rank + 1)):
                problems.append((e.label, "cuspidality",
                                 "support of gamma plus sp must cover the diagram"))
    if problems:
        raise TableValidationError(problems)
    return ClassificationTable(tuple(entries))


# -- diagram-local matching ---------------------------------------------------------


def _cartan_isomorphisms(a: list[list[int]], b: list[list[int]]):
    """All bijections sigma with a[i][j] == b[sigma(i)][sigma(j)]."""
    n = len(a)
    if len(b) != n:
        return
    sigma: list[int] = []
    used = [False] * n

    def rec(i):
        if i == n:
            yield tuple(sigma)
            return
        for t in range(n):
            if used[t] or a[i][i] != b[t][t]:
                continue
            ok = True
            for j in range(i):
                if a[i][j] != b[t][sigma[j]] or a[j][i] != b[sigma[j]][t]:
                    ok = False
                    break
            if ok:
                used[t] = True
                sigma.append(t)
                yield from rec(i + 1)
                sigma.pop()
                used[t] = False

    yield from rec(0)


def lookup(table: ClassificationTable, diagram, gamma: Weight, sp) -> list[InstantiatedEntry]:
    """Entries whose (gamma, sp) match the given data on the sub-diagram
    spanned by supp(gamma) and sp, up to diagram automorphism."""
    diagram = parse_diagram(diagram)
    sp = frozenset(sp)
    support = sorted(gamma.support() | sp)
    if not support:
        return []
    sub = diagram.cartan_submatrix(support)
    g_res = [gamma.coords[i - 1] for i in support]
    sp_pos = {k for k, i in enumerate(support) if i in sp}
    out = []
    for entry in table.entries:
        rank = len(support)
        if entry.family == "A1+A1" and rank != 2:
            continue
        if not entry.allows_rank(rank):
            continue
        inst = entry.instantiate(rank)
        target = [[inst.diagram.cartan(i, j) for j in range(1, rank + 1)] for i in range(1, rank + 1)]
        sp_target = {i - 1 for i in inst.sp}
        for sigma in _cartan_isomorphisms(sub, target):
            if all(g_res[k] == inst.gamma.coords[sigma[k]] for k in range(rank)) \
                    and {sigma[k] for k in sp_pos} == sp_target:
                out.append(inst)
                break
    return out


def non_strict_entries(table: ClassificationTable) -> list[Rank1Entry]:
    """The entries that fail strictness as varieties with adjoint action.

    Entries whose normalizer quotient is nontrivial but on which the centre
    acts nontrivially are excluded: those are not comparable as varieties of
    the adjoint group.
    """
    return [e for e in table.entries if not e.self_normalizing and e.adjoint_action]


def nontrivial_normalizer_labels(table: ClassificationTable) -> set[str]:
    """Canonical labels of all entries with a nontrivial normalizer quotient."""
    return {e.canonical_label for e in table.entries if e.normalizer_quotient > 1}
