"""Integer partitions: conjugation, dominance order, multiplicity form.

Partitions are the universal labels for the conjugacy classes handled by
this package, and every formula downstream reduces to exact arithmetic on
them: conjugation (column counts), dominance comparison via prefix sums,
the exponential form (1^{r_1}, 2^{r_2}, ..., h^{r_h}), and bounded
exhaustive enumeration.

Accepted input forms: separated ("5,3,1,1" or "5+3+1+1") and the compact
class-label form ("531^2", where "^" repeats the preceding single-digit
part; parts of ten or more are joined with dots, as in "13.1").
Canonical output is comma-separated decreasing integers.
"""

from __future__ import annotations

from itertools import groupby
from typing import Iterator, Sequence

__all__ = ["Partition", "all_partitions"]


class Partition:
    """A weakly decreasing sequence of positive integers.

    The empty sequence is the unique partition of 0.  Instances are
    immutable, hashable and freely shareable.
    """

    __slots__ = ("_parts", "_size")

    def __init__(self, parts: Sequence[int] = ()) -> None:
        tup = tuple(int(p) for p in parts)
        for i, p in enumerate(tup):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {tup}")
            if i > 0 and tup[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {tup}")
        self._parts = tup
        self._size = sum(tup)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        return self._size

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def part(self, i: int) -> int:
        """The i-th part (0-indexed), reading missing parts as 0."""
        return self._parts[i] if 0 <= i < len(self._parts) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self._parts)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram: result_i = #{j : part_j >= i}."""
        if not self._parts:
            return Partition()
        cols = [0] * self._parts[0]
        for p in self._parts:
            for i in range(p):
                cols[i] += 1
        return Partition(cols)

    def dominates(self, other: "Partition") -> bool:
        """Whether every prefix sum of self is >= that of other.

        Only defined between partitions of the same integer; zero-padding
        happens only inside the prefix comparison.
        """
        if self._size != other._size:
            raise ValueError(
                f"incomparable sizes: {self._size} vs {other._size}"
            )
        acc_s = acc_o = 0
        for i in range(max(len(self._parts), len(other._parts))):
            acc_s += self.part(i)
            acc_o += other.part(i)
            if acc_s < acc_o:
                return False
        return True

    def multiplicities(self) -> dict[int, int]:
        """Exponential form: map part -> multiplicity r_part."""
        return {p: len(list(g)) for p, g in groupby(self._parts)}

    def odd_part_count(self) -> int:
        """Number of odd parts (with multiplicity)."""
        return sum(1 for p in self._parts if p % 2 == 1)

    def compact(self) -> str:
        """Class-label form: "531^2", "3^21", "13.1"; "-" for the empty one."""
        if not self._parts:
            return "-"
        toks = []
        for p, g in groupby(self._parts):
            mult = len(list(g))
            toks.append(f"{p}^{mult}" if mult > 1 else str(p))
        if self._parts[0] >= 10:
            return ".".join(toks)
        return "".join(toks)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse any accepted text form; forgiving about part order."""
        s = text.strip().replace(" ", "")
        if s in ("", "-", "()"):
            return cls()
        if "," in s or "+" in s:
            toks = [t for t in s.replace("+", ",").split(",") if t]
            parts = [int(t) for t in toks]
        elif "." in s:
            parts = []
            for tok in s.split("."):
                parts.extend(_parse_powered(tok))
        else:
            parts = _scan_compact(s)
        return cls(sorted(parts, reverse=True))


def _parse_powered(tok: str) -> list[int]:
    # "11" -> [11], "5^2" -> [5, 5]
    if "^" in tok:
        base, exp = tok.split("^")
        return [int(base)] * int(exp)
    return [int(tok)]


def _scan_compact(s: str) -> list[int]:
    # single-digit parts, "^" followed by a single-digit multiplicity
    parts = []
    i = 0
    while i < len(s):
        if not s[i].isdigit():
            raise ValueError(f"cannot parse partition {s!r}")
        p = int(s[i])
        i += 1
        mult = 1
        if i < len(s) and s[i] == "^":
            if i + 1 >= len(s) or not s[i + 1].isdigit():
                raise ValueError(f"cannot parse partition {s!r}")
            mult = int(s[i + 1])
            i += 2
        parts.extend([p] * mult)
    return parts


def all_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n (parts bounded by max_part), descending lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition()
        return
    top = n if max_part is None or max_part > n else max_part
    for head in range(top, 0, -1):
        for tail in all_partitions(n - head, head):
            yield Partition((head,) + tail.parts)
