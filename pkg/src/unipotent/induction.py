"""Induction of class labels along same-family maximal-Levi chains.

Inducing a class from the maximal same-family Levi (rank m-1, or m-2 for
2A where carriers grow by 2 per step) adds 2 to the largest part of the
label; cuspidality is preserved, as is the a-value at the class.  For
type A the regular class is the induction fixed point at every rank.

Inductions from classical Levi subgroups into exceptional groups are a
finite lookup, stored here exactly as printed in the reference table;
blank cells stay blank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cuspidal import ClassLabel
from .groups import GroupSpec
from .partitions import Partition

__all__ = [
    "InductionStep",
    "induce_same_family",
    "exceptional_induction",
    "EXCEPTIONAL_INDUCTION_BLOCKS",
]


@dataclass(frozen=True)
class InductionStep:
    source: ClassLabel
    target_rank: int
    result: ClassLabel


def induce_same_family(label: ClassLabel, target_rank: int) -> ClassLabel:
    """Label of the induced class in the same family at target_rank.

    One application of the first-part+2 rule per maximal-Levi step; type
    2A steps move the rank by 2, all other families by 1.  Type A is the
    regular-class special case.
    """
    g = label.group
    if target_rank < g.rank:
        raise ValueError(f"target rank {target_rank} below source rank {g.rank}")
    if g.family == "A":
        target = GroupSpec("A", target_rank)
        return ClassLabel(target, Partition((target_rank + 1,)))
    if g.family == "2A":
        if (target_rank - g.rank) % 2:
            raise ValueError("type 2A induction moves in rank steps of 2")
        apps = (target_rank - g.rank) // 2
    else:
        apps = target_rank - g.rank
    parts = list(label.partition.parts)
    assert parts, label
    parts[0] += 2 * apps
    return ClassLabel(GroupSpec(g.family, target_rank), Partition(parts))


# Each block: (target group, ((levi tag, row cells), ...), target cells).
# Cells are read column by column; None marks a printed blank.
EXCEPTIONAL_INDUCTION_BLOCKS = (
    (
        "F_4",
        (
            ("B3", ("7", "51^2", "3^21")),
            ("C3", ("6", "42", None)),
        ),
        ("F_4", "F_4(a_1)", "F_4(a_2)"),
    ),
    (
        "E_6",
        (("D5", ("91", "73", "531^2")),),
        ("E_6", "E_6(a_1)", "E_6(a_3)"),
    ),
    (
        "2E_6",
        (
            ("2A5", ("6", "51", "42", None, "321")),
            ("2D4", ("71", "53", None, "3^21^2", None)),
        ),
        ("E_6", "E_6(a_1)", "D_5", "E_6(a_3)", "D_5(a_1)"),
    ),
    (
        "E_7",
        (
            ("D6", ("11.1", "93", "75", "731^2", "5^21^2", "53^21", None)),
            ("E6", ("E_6", "E_6(a_1)", None, "E_6(a_3)", None, None, "D_4(a_1)")),
        ),
        ("E_7", "E_7(a_1)", "E_7(a_2)", "E_7(a_3)", "E_6(a_1)", "E_7(a_4)", "E_7(a_5)"),
    ),
    (
        "E_8",
        (
            ("D7", ("13.1", "11.3", "95", "931^2", "751^2", "73^21", "5^231", None, None)),
            ("E7", ("E_7", "E_7(a_1)", "E_7(a_2)", "E_7(a_3)", "E_6(a_1)", "E_7(a_4)", None, "E_7(a_5)", "A_4+A_1")),
        ),
        ("E_8", "E_8(a_1)", "E_8(a_2)", "E_8(a_3)", "E_8(a_4)", "E_8(b_4)", "E_8(a_5)", "E_8(b_5)", "E_6(a_1)+A_1"),
    ),
)


def _canonical_cell(levi_tag: str, cell: str) -> str:
    # classical labels are normalised through the partition parser;
    # exceptional class names pass through verbatim
    if cell[0].isdigit():
        return Partition.parse(cell).compact()
    return cell


def _build_lookup() -> dict[tuple[str, str], str]:
    table = {}
    for _, levi_rows, targets in EXCEPTIONAL_INDUCTION_BLOCKS:
        for levi_tag, cells in levi_rows:
            assert len(cells) == len(targets), levi_tag
            for cell, target in zip(cells, targets):
                if cell is None:
                    continue
                key = (levi_tag, _canonical_cell(levi_tag, cell))
                assert key not in table, key
                table[key] = target
    return table


_LOOKUP = _build_lookup()


def exceptional_induction(levi_tag: str, class_label: str) -> str:
    """Induced exceptional class for a printed (Levi, label) cell."""
    tag = levi_tag.strip().upper().replace("_", "")
    key = (tag, _canonical_cell(tag, class_label.strip()))
    if key not in _LOOKUP:
        raise ValueError(f"no induction entry for {levi_tag!r}, {class_label!r}")
    return _LOOKUP[key]
