"""Cuspidal unipotent classes of classical groups and their a-values.

Class labels are Jordan-type partitions of the carrier.  This module holds
the family-wise cuspidality criteria, exhaustive enumeration of cuspidal
labels, the dominance-minimal cuspidal class, centraliser dimensions,
Springer-fibre a-values, duality by partition conjugation (families
A/2A/B/C only; D/2D duality goes through symbols, see symbols_d), the
closed-form minimal a-values per family, and the static minimal values
for exceptional types.

Cuspidality criteria on the label:

    A    the regular class only, label (m+1)
    2A   distinct parts
    B    odd parts, each occurring at most twice
    C    even parts, each occurring at most twice
    D    odd parts, each at most twice, and label != (m, m)
    2D   odd parts, each at most twice

The closed forms are expressed through the rank split (s, d) of the
group; conjugating the minimal cuspidal label and evaluating the
centraliser-dimension formulas reproduces them exactly (this is checked
wholesale by the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groups import GroupSpec, rank_decompose
from .partitions import Partition, all_partitions

__all__ = [
    "ClassLabel",
    "is_cuspidal",
    "enumerate_cuspidal",
    "minimal_cuspidal",
    "centralizer_dim",
    "a_value",
    "dual_class",
    "a_min_closed_form",
    "a_min_exceptional",
    "EXCEPTIONAL_MINIMAL",
]


@dataclass(frozen=True)
class ClassLabel:
    """A unipotent class of a classical group, named by its Jordan type."""

    group: GroupSpec
    partition: Partition

    def __post_init__(self):
        if self.partition.size != self.group.carrier_size():
            raise ValueError(
                f"invalid label: partition of {self.partition.size} for "
                f"{self.group} (carrier {self.group.carrier_size()})"
            )

    def __str__(self) -> str:
        return f"({self.group}, {self.partition.compact()})"


def is_cuspidal(label: ClassLabel) -> bool:
    """Family-wise cuspidality criterion on the Jordan type."""
    fam = label.group.family
    parts = label.partition.parts
    mults = label.partition.multiplicities()
    if fam == "A":
        return parts == (label.group.rank + 1,)
    if fam == "2A":
        return all(r == 1 for r in mults.values())
    if fam == "B":
        return all(p % 2 == 1 for p in parts) and all(r <= 2 for r in mults.values())
    if fam == "C":
        return all(p % 2 == 0 for p in parts) and all(r <= 2 for r in mults.values())
    # D / 2D
    if not (all(p % 2 == 1 for p in parts) and all(r <= 2 for r in mults.values())):
        return False
    if fam == "D" and parts == (label.group.rank, label.group.rank):
        return False
    return True


@lru_cache(maxsize=None)
def enumerate_cuspidal(g: GroupSpec) -> tuple[ClassLabel, ...]:
    """All cuspidal class labels of g, sorted descending (dominance-compatible).

    Descending lexicographic order on parts refines the dominance order,
    so comparable labels appear larger-first.
    """
    found = [
        ClassLabel(g, p)
        for p in all_partitions(g.carrier_size())
        if is_cuspidal(ClassLabel(g, p))
    ]
    found.sort(key=lambda c: c.partition.parts, reverse=True)
    return tuple(found)


def minimal_cuspidal(g: GroupSpec) -> ClassLabel:
    """The unique cuspidal label dominated by every other cuspidal label."""
    labels = enumerate_cuspidal(g)
    if not labels:
        raise ValueError(f"no cuspidal class for {g}")
    minima = [
        c
        for c in labels
        if all(o is c or o.partition.dominates(c.partition) for o in labels)
    ]
    if len(minima) != 1:
        raise ValueError(f"minimality violated for {g}: {minima}")
    return minima[0]


def centralizer_dim(family: str, rank: int, mu: Partition) -> int:
    """Dimension of the centraliser of a unipotent element of Jordan type mu.

    With c = conjugate(mu) (so c_i = r_i + r_{i+1} + ... in the exponential
    form of mu) and o = number of odd parts of mu:

        A, 2A      sum c_i^2 - 1
        C          (sum c_i^2 + o) / 2
        B, D, 2D   (sum c_i^2 - o) / 2

    Halves must come out integral; a failure signals a Jordan type that is
    not valid for the family.
    """
    expected = GroupSpec(family, rank).carrier_size()
    if mu.size != expected:
        raise ValueError(
            f"partition of {mu.size} is not a {family}{rank} Jordan type "
            f"(carrier {expected})"
        )
    sq = sum(c * c for c in mu.conjugate())
    if family in ("A", "2A"):
        return sq - 1
    odd = mu.odd_part_count()
    num = sq + odd if family == "C" else sq - odd
    if num % 2:
        raise ValueError(f"invalid Jordan type {mu} for family {family}")
    return num // 2


def a_value(family: str, rank: int, mu: Partition) -> int:
    """Springer-fibre dimension at mu: (centraliser dim - rank) / 2."""
    dim = centralizer_dim(family, rank, mu)
    if (dim - rank) % 2:
        raise ValueError(f"invalid Jordan type {mu} for {family}{rank}")
    a = (dim - rank) // 2
    assert a >= 0, (family, rank, mu)
    return a


def dual_class(label: ClassLabel) -> ClassLabel:
    """Duality on class labels by partition conjugation (families A/2A/B/C).

    The conjugation rule is exact on the special classes these modules
    produce; families D/2D have no such elementary rule and are handled
    through their symbols instead.
    """
    if label.group.family in ("D", "2D"):
        raise ValueError(
            f"no conjugation duality for {label.group.family}: use the symbol route"
        )
    return ClassLabel(label.group, label.partition.conjugate())


def a_min_closed_form(g: GroupSpec) -> int:
    """Minimal a-value over duals of cuspidal classes, in closed form."""
    m = g.rank
    if g.family == "A":
        return m * (m + 1) // 2
    dec = rank_decompose(g)
    s, d = dec.s, dec.d
    if g.family == "2A":
        return s * (s * s - 1) // 6 + d * (2 * s + 1 - d) // 2
    if g.family == "B":
        base = s * (s + 1) * (4 * s - 1) // 6
        tail = d * (2 * s + 1 - d) if d <= s else d * (4 * s + 2 - d) - s * (2 * s + 1)
        return base + tail
    if g.family == "C":
        base = s * (s + 1) * (4 * s - 1) // 6
        tail = (
            d * (2 * s + 2 - d)
            if d <= s + 1
            else d * (4 * s + 3 - d) - (s + 1) * (2 * s + 1)
        )
        return base + tail
    # D / 2D
    base = s * (s - 1) * (4 * s + 1) // 6
    tail = d * (2 * s + 1 - d) if d <= s else d * (4 * s - d) - s * (2 * s - 1)
    return base + tail


# Exceptional types: minimal cuspidal class, its dual a-value, and the
# a-values of cuspidal unipotent characters of proper Levi subgroups.
EXCEPTIONAL_MINIMAL = {
    "G2": ("G_2(a_1)", 1, (0, 1)),
    "F4": ("F_4(a_3)", 4, (0, 1, 4)),
    "E6": ("D_4(a_1)", 7, (0, 3, 4, 7)),
    "2E6": ("D_4(a_1)", 7, (0, 3, 4, 7)),
    "E7": ("A_4+A_1", 11, (0, 3, 7, 11)),
    "E8": ("E_8(a_7)", 16, (0, 3, 7, 11, 16)),
}


def a_min_exceptional(tag: str) -> tuple[str, int]:
    """(class name, minimal a-value) for an exceptional type tag."""
    key = tag.strip().upper().replace("_", "")
    if key not in EXCEPTIONAL_MINIMAL:
        raise ValueError(f"unknown exceptional type {tag!r}")
    name, amin, _ = EXCEPTIONAL_MINIMAL[key]
    return name, amin
