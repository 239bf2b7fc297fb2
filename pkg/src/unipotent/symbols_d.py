"""Two-row symbols for type D/2D and the a-value of the dual class.

There is no conjugation rule for duality in types D and 2D, so the dual
a-value of a cuspidal class is computed through its symbol: a cuspidal
label with 2l nonzero parts lambda_1 >= ... >= lambda_{2l} has symbol
entries

    a_i = (lambda_{2l+1-i} - 1)/2 + floor(i/2),   1 <= i <= 2l,

split into a top row (odd i) and bottom row (even i).  The symbol is
special exactly when the interleaved entries are weakly increasing.  For
a symbol S with 2s entries on a group of rank m,

    A(S) = sum_{i<j} max(a_i, a_j) - sum_{i=1}^{s-1} C(2i, 2)
           - 2 sum_{i=1}^{2s} C(a_i + 1, 2) + m^2,

and the dual class has a-value m(m-1) - A(S).  The minimal cuspidal class
has an explicit symbol built from the rank split (s, d): both rows step
by 2 except at a single position.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .cuspidal import ClassLabel
from .groups import GroupSpec, rank_decompose

__all__ = [
    "DSymbol",
    "springer_symbol",
    "a_dual_via_symbol",
    "s_min_symbol",
]


@dataclass(frozen=True)
class DSymbol:
    """Two equal-length rows of nonnegative integers, strictly increasing."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if len(self.top) != len(self.bottom) or not self.top:
            raise ValueError(f"rows must be nonempty and of equal length: {self}")
        for row in (self.top, self.bottom):
            if any(e < 0 for e in row):
                raise ValueError(f"negative symbol entry in {row}")
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError(f"row entries must strictly increase: {row}")

    def entries(self) -> tuple[int, ...]:
        """Interleaved sequence a_1, a_2, ..., a_{2s}."""
        out = []
        for t, b in zip(self.top, self.bottom):
            out.append(t)
            out.append(b)
        return tuple(out)

    def is_special(self) -> bool:
        ent = self.entries()
        return all(ent[i] <= ent[i + 1] for i in range(len(ent) - 1))

    def A_value(self) -> int:
        """The a-value attached to the symbol's principal-series character."""
        ent = self.entries()
        s = len(self.top)
        m = self.rank
        pair_max = sum(
            max(ent[i], ent[j]) for i in range(len(ent)) for j in range(i + 1, len(ent))
        )
        corr = sum(comb(2 * i, 2) for i in range(1, s))
        tri = sum(comb(a + 1, 2) for a in ent)
        return pair_max - corr - 2 * tri + m * m

    def render(self) -> str:
        top = ",".join(str(e) for e in self.top)
        bottom = ",".join(str(e) for e in self.bottom)
        return f"({top} | {bottom})"


def springer_symbol(label: ClassLabel) -> DSymbol:
    """Symbol of a cuspidal class label of family D or 2D."""
    if label.group.family not in ("D", "2D"):
        raise ValueError(f"symbols only defined for D/2D, not {label.group.family}")
    parts = label.partition.parts
    if len(parts) % 2:
        raise ValueError(f"not a cuspidal D-type label (odd part count): {parts}")
    if any(p % 2 == 0 for p in parts):
        raise ValueError(f"invalid parity for a D-type symbol: {parts}")
    two_l = len(parts)
    # a_i for i = 1..2l, with lambda_{2l+1-i} = parts[two_l - i]
    ent = [(parts[two_l - i] - 1) // 2 + i // 2 for i in range(1, two_l + 1)]
    return DSymbol(tuple(ent[0::2]), tuple(ent[1::2]), label.group.rank)


def a_dual_via_symbol(label: ClassLabel) -> int:
    """a-value of the dual class: m(m-1) - A(symbol)."""
    m = label.group.rank
    a = m * (m - 1) - springer_symbol(label).A_value()
    assert a >= 0, label
    return a


def s_min_symbol(g: GroupSpec) -> DSymbol:
    """The symbol of the minimal cuspidal class, from the rank split.

    For m = s^2 + d: with 0 <= d <= s the top row is 0, 2, ..., 2(s-1) and
    the bottom row runs 1, 3, ..., 2(s-d)-1 then 2(s-d+1), ..., 2s; with
    s <= d <= 2s the top row runs 0, 2, ..., 2(2s-d-1) then 2(2s-d)+1,
    ..., 2s-1 and the bottom row is 2, 4, ..., 2s.
    """
    if g.family not in ("D", "2D"):
        raise ValueError(f"minimal symbol only defined for D/2D, not {g.family}")
    dec = rank_decompose(g)
    s, d = dec.s, dec.d
    if d <= s:
        top = tuple(range(0, 2 * s, 2))
        bottom = tuple(range(1, 2 * (s - d), 2)) + tuple(
            range(2 * (s - d + 1), 2 * s + 1, 2)
        )
    else:
        top = tuple(range(0, 2 * (2 * s - d) - 1, 2)) + tuple(
            range(2 * (2 * s - d) + 1, 2 * s, 2)
        )
        bottom = tuple(range(2, 2 * s + 1, 2))
    return DSymbol(top, bottom, g.rank)
