"""Levi-type enumeration and the Harish-Chandra series bounding query.

A 1-split Levi subgroup is determined up to type by a node subset of the
ambient Dynkin diagram: connected components away from the distinguished
end are type-A factors, the component holding the B/C end (or both fork
nodes, for D) is the classical factor.  The fork pair alone is the
classical factor D_2, which sits differently from a pair of line nodes
and is kept distinct; a fork component of three nodes is type A_3 and is
folded into the A-factors.  For 2D only subsets stable under the
fork-swapping automorphism are kept, and a stable fork component of j
nodes is the twisted factor 2D_j.

The bounding query lists the cuspidal pairs (L, lambda) that can carry a
unipotent Brauer character of a-value at most a_max, by filtering:

  (i)   the minimal dual a-value summed over the factors of L must not
        exceed a_max;
  (ii)  every factor must carry a cuspidal Brauer character from the
        built-in data table whose cyclotomic condition is active;
  (iii) the series-floor rules: when the matched factors of L grow into a
        bigger Levi that exists in the ambient group, the known floor on
        a-values in that series applies.

Data rows and floor rules live in data/hc_tables.json, one record per
reference-table row, each with a source string.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import product

from .cuspidal import a_min_closed_form
from .cyclotomic import EllClass, condition_text
from .groups import GroupSpec

__all__ = [
    "LeviType",
    "CuspidalDatum",
    "SeriesRow",
    "enumerate_levi_types",
    "cuspidal_brauer_data",
    "hc_series_bound",
]

_MAX_ENUM_RANK = 20


@dataclass(frozen=True)
class LeviType:
    """Semisimple type of a 1-split Levi: classical factor + A-factor ranks."""

    classical: tuple[str, int] | None
    a_ranks: tuple[int, ...]

    def factors(self) -> tuple[tuple[str, int], ...]:
        """Factor list, classical factor first, A-factors by descending rank."""
        out = []
        if self.classical is not None:
            out.append(self.classical)
        out.extend(("A", r) for r in self.a_ranks)
        return tuple(out)

    def display(self) -> str:
        if self.classical is None and not self.a_ranks:
            return "∅"
        parts = []
        if self.classical is not None:
            fam, rank = self.classical
            parts.append(f"{fam}_{rank}")
        for r, count in sorted(Counter(self.a_ranks).items(), reverse=True):
            parts.append(f"A_{r}" + (f"^{count}" if count > 1 else ""))
        return "".join(parts)

    def total_rank(self) -> int:
        base = self.classical[1] if self.classical else 0
        return base + sum(self.a_ranks)

    def sort_key(self):
        classical = self.classical or ("", 0)
        return (self.total_rank(), classical, self.a_ranks)

    @classmethod
    def from_factors(cls, factors) -> "LeviType":
        classical = [f for f in factors if f[0] != "A"]
        assert len(classical) <= 1, factors
        a_ranks = tuple(sorted((r for fam, r in factors if fam == "A"), reverse=True))
        return cls(classical[0] if classical else None, a_ranks)


def _classify_line(present: list[bool], end_family: str | None) -> list[tuple[str, int]]:
    # connected runs of a line diagram; the run holding the last node is the
    # end factor for B/C (size 1 degenerates to A_1)
    factors = []
    i = 0
    n = len(present)
    while i < n:
        if not present[i]:
            i += 1
            continue
        j = i
        while j < n and present[j]:
            j += 1
        size = j - i
        if end_family and j == n and size >= 2:
            factors.append((end_family, size))
        else:
            factors.append(("A", size))
        i = j
    return factors


def _fork_levi_factors(line: list[bool], forks: int, family: str) -> list[tuple[str, int]]:
    """Factor list for a D/2D diagram subset.

    line is the presence list for nodes 1..m-2; forks counts the present
    fork nodes (for 2D always 0 or 2).  With both fork nodes present, the
    glued component is the fork pair plus the trailing run of the line.
    """
    n = len(line)
    factors = []
    if forks == 2:
        t = 0
        while t < n and line[n - 1 - t]:
            t += 1
        j = 2 + t
        if family == "2D":
            factors.append(("2D", j))
        elif j == 3:
            factors.append(("A", 3))
        else:
            factors.append(("D", j))
        factors.extend(_classify_line(line[: n - t], None))
    elif forks == 1:
        t = 0
        while t < n and line[n - 1 - t]:
            t += 1
        factors.append(("A", 1 + t))
        factors.extend(_classify_line(line[: n - t], None))
    else:
        factors.extend(_classify_line(line, None))
    return factors


@lru_cache(maxsize=None)
def enumerate_levi_types(g: GroupSpec) -> tuple[LeviType, ...]:
    """All 1-split Levi types of g (torus through the improper Levi)."""
    m = g.rank
    if m > _MAX_ENUM_RANK:
        raise ValueError(f"enumeration bound exceeded: rank {m} > {_MAX_ENUM_RANK}")
    fam = g.family
    if fam == "2A":
        raise ValueError("Levi enumeration not provided for family 2A")
    seen = set()
    if fam in ("A", "B", "C"):
        end = fam if fam in ("B", "C") else None
        for mask in range(2**m):
            present = [bool(mask >> i & 1) for i in range(m)]
            seen.add(LeviType.from_factors(_classify_line(present, end)))
    else:
        line_n = m - 2
        fork_choices = ((0, 0), (1, 0), (0, 1), (1, 1)) if fam == "D" else ((0, 0), (1, 1))
        for mask in range(2**line_n):
            line = [bool(mask >> i & 1) for i in range(line_n)]
            for f1, f2 in fork_choices:
                factors = _fork_levi_factors(line, f1 + f2, fam)
                seen.add(LeviType.from_factors(factors))
    return tuple(sorted(seen, key=LeviType.sort_key))


@dataclass(frozen=True)
class CuspidalDatum:
    """One cuspidal Brauer character of a Levi factor, with its condition."""

    factor: tuple[str, int]
    label: str
    a: int
    tags: tuple[str, ...]
    source: str
    derived: bool = False


@dataclass(frozen=True)
class SeriesFloorRule:
    match: tuple[tuple[tuple[str, int], str], ...]
    tags: tuple[str, ...]
    embed: tuple[tuple[str, int], ...]
    min_a: int
    source: str


def _parse_factor(key: str) -> tuple[str, int]:
    fam = key.rstrip("0123456789")
    return (fam, int(key[len(fam):]))


@lru_cache(maxsize=1)
def _load_tables() -> tuple[tuple[CuspidalDatum, ...], tuple[SeriesFloorRule, ...]]:
    raw = json.loads(
        resources.files("unipotent").joinpath("data/hc_tables.json").read_text()
    )
    assert raw["version"] == 1
    data = tuple(
        CuspidalDatum(
            factor=_parse_factor(rec["factor"]),
            label=rec["label"],
            a=rec["a"],
            tags=tuple(rec["ell"]),
            source=rec["source"],
            derived=rec.get("derived", False),
        )
        for rec in raw["cuspidal_data"]
    )
    rules = tuple(
        SeriesFloorRule(
            match=tuple((_parse_factor(f), lab) for f, lab in rec["match"]),
            tags=tuple(rec["ell"]),
            embed=tuple(_parse_factor(f) for f in rec["embed"]),
            min_a=rec["min_a"],
            source=rec["source"],
        )
        for rec in raw["series_floor_rules"]
    )
    return data, rules


def cuspidal_brauer_data(ell: EllClass) -> tuple[CuspidalDatum, ...]:
    """The data rows whose cyclotomic condition is implied by ell."""
    data, _ = _load_tables()
    return tuple(d for d in data if ell.satisfies(d.tags))


@dataclass(frozen=True)
class SeriesRow:
    """A surviving cuspidal pair (L, lambda) with its combined a-value."""

    levi: LeviType
    data: tuple[CuspidalDatum, ...]
    a: int
    floor: int

    def label(self) -> str:
        if not self.data:
            return "1"
        return "⊗".join(d.label for d in self.data)

    def condition_tags(self, ell: EllClass) -> tuple[str, ...]:
        tags = set()
        for d in self.data:
            tags.update(t for t in d.tags if ell.is_active(t))
        return tuple(sorted(tags))

    def condition(self, ell: EllClass) -> str:
        return condition_text(self.condition_tags(ell))

    def display(self, ell: EllClass) -> str:
        return f"({self.levi.display()},{self.label()})"


def _data_by_factor(ell: EllClass) -> dict[tuple[str, int], list[CuspidalDatum]]:
    table: dict[tuple[str, int], list[CuspidalDatum]] = {}
    for d in cuspidal_brauer_data(ell):
        table.setdefault(d.factor, []).append(d)
    return table


def _factor_a_min(factor: tuple[str, int]) -> int:
    fam, rank = factor
    if fam == "A":
        return rank * (rank + 1) // 2
    if (fam, rank) == ("D", 2):
        return 2  # adjoint D_2 is A_1 x A_1
    return a_min_closed_form(GroupSpec(fam, rank))


def hc_series_bound(g: GroupSpec, a_max: int, ell: EllClass) -> tuple[SeriesRow, ...]:
    """Cuspidal pairs of g surviving the three bounding filters under ell."""
    if g.family not in ("B", "D", "2D"):
        raise ValueError(f"bounding query supports families B, D, 2D; got {g.family}")
    cap = 4 if g.family == "B" else 3
    if not 0 <= a_max <= cap:
        raise ValueError(f"a_max {a_max} out of supported range 0..{cap} for {g.family}")
    if g.family in ("D", "2D") and g.rank < 4:
        raise ValueError(f"bounding query needs rank >= 4 in family {g.family}")
    if g.family == "B" and ell.is_active("e2"):
        raise ValueError("series for ℓ|(q+1) in family B are not tabulated")

    levis = enumerate_levi_types(g)
    levi_set = set(levis)
    by_factor = _data_by_factor(ell)
    _, rules = _load_tables()
    active_rules = [r for r in rules if all(ell.is_active(t) for t in r.tags)]

    rows = []
    for levi in levis:
        factors = levi.factors()
        if sum(_factor_a_min(f) for f in factors) > a_max:
            continue
        choices = [by_factor.get(f, ()) for f in factors]
        if any(not c for c in choices):
            continue
        for combo in product(*choices):
            total = sum(d.a for d in combo)
            if total > a_max:
                continue
            floor = _series_floor(levi, combo, total, active_rules, levi_set)
            if floor > a_max:
                continue
            rows.append(SeriesRow(levi, combo, total, floor))

    rows.sort(key=lambda r: (r.a, r.levi.sort_key(), r.label()))
    assert all(
        sum(_factor_a_min(f) for f in r.levi.factors()) <= a_max for r in rows
    )
    return tuple(rows)


def _series_floor(levi, combo, total, active_rules, levi_set) -> int:
    """Best known lower bound for a-values in the series (L, lambda)."""
    floor = total
    have = Counter((d.factor, d.label) for d in combo)
    a_of = {(d.factor, d.label): d.a for d in combo}
    for rule in active_rules:
        need = Counter(rule.match)
        if any(have[key] < cnt for key, cnt in need.items()):
            continue
        grown = Counter(levi.factors())
        for (factor, _), cnt in need.items():
            grown[factor] -= cnt
        grown.update(rule.embed)
        candidate = LeviType.from_factors(
            [f for f, cnt in grown.items() for _ in range(cnt)]
        )
        if candidate not in levi_set:
            continue
        matched_a = sum(a_of[key] * cnt for key, cnt in need.items())
        floor = max(floor, total - matched_a + rule.min_a)
    return floor
