"""Classical group bookkeeping: family tags, carrier sizes, rank splits.

A group is identified by a family tag (A, 2A, B, C, D, 2D) and its rank m.
The carrier size is the size of the natural matrix representation whose
Jordan types label unipotent classes: m+1 for A/2A, 2m+1 for B, 2m for
C/D/2D.  Each family also has a canonical staircase-plus-remainder split
of the rank, the pair (s, d) in which the closed-form minimal a-values
are expressed.

D_2 and D_3 are rejected as group specs (they are not simple of type D),
while 2D_2 and 2D_3 are accepted; the twisted forms use the same rank
split as type D.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import isqrt

__all__ = ["FAMILIES", "GroupSpec", "RankDecomposition", "parse_group", "rank_decompose"]

FAMILIES = ("A", "2A", "B", "C", "D", "2D")

_MIN_RANK = {"A": 1, "2A": 1, "B": 2, "C": 2, "D": 4, "2D": 2}

_GROUP_RE = re.compile(r"^(2?)([ABCD])[_ ]?(\d+)$", re.IGNORECASE)


@dataclass(frozen=True)
class GroupSpec:
    """A classical family tag together with a rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"rank {self.rank} too small for family {self.family} "
                f"(minimum {_MIN_RANK[self.family]})"
            )

    def carrier_size(self) -> int:
        """Size of the natural representation carrying the Jordan type."""
        if self.family in ("A", "2A"):
            return self.rank + 1
        if self.family == "B":
            return 2 * self.rank + 1
        return 2 * self.rank

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_group(text: str) -> GroupSpec:
    """Parse group names like "B7", "2D5", "2a9" (case-insensitive)."""
    m = _GROUP_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse group name {text!r}")
    family = ("2" if m.group(1) else "") + m.group(2).upper()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r} in {text!r}")
    return GroupSpec(family, int(m.group(3)))


@dataclass(frozen=True)
class RankDecomposition:
    """The unique split of a rank under its family's scheme.

    scheme "2A":  m+1 = s(s+1)/2 + d  with 0 <= d <= s      (also type A)
    scheme "BC":  m   = s(s+1) + d    with 0 <= d <= 2s+1
    scheme "D":   m   = s^2 + d       with 0 <= d <= 2s
    """

    s: int
    d: int
    scheme: str


def rank_decompose(g: GroupSpec) -> RankDecomposition:
    """The (s, d) split of g's rank; total and unique on valid specs."""
    m = g.rank
    if g.family in ("A", "2A"):
        n = m + 1
        s = (isqrt(8 * n + 1) - 1) // 2  # largest s with s(s+1)/2 <= n
        d = n - s * (s + 1) // 2
        assert 0 <= d <= s, (g, s, d)
        return RankDecomposition(s, d, "2A")
    if g.family in ("B", "C"):
        s = (isqrt(4 * m + 1) - 1) // 2  # largest s with s(s+1) <= m
        d = m - s * (s + 1)
        assert 0 <= d <= 2 * s + 1, (g, s, d)
        return RankDecomposition(s, d, "BC")
    s = isqrt(m)
    d = m - s * s
    assert 0 <= d <= 2 * s, (g, s, d)
    return RankDecomposition(s, d, "D")
