"""Command-line surface over the library operations.

Every verb maps onto exactly one library operation or table emitter; no
arithmetic happens here.  Each verb takes --format text|records, where
records are JSON lines with sorted keys, carrying the same data as the
text rendering.  The goldens verb regenerates the canonical reference
tables as files for diffing.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .cuspidal import (
    EXCEPTIONAL_MINIMAL,
    ClassLabel,
    a_min_closed_form,
    a_min_exceptional,
    dual_class,
    enumerate_cuspidal,
    minimal_cuspidal,
)
from .cyclotomic import EllClass, condition_text, ell_class_from
from .dectables import DecMatrix, dec_small, dec_table, dec_template, degree_gap_bound
from .groups import GroupSpec, parse_group
from .hc_bound import hc_series_bound
from .induction import (
    EXCEPTIONAL_INDUCTION_BLOCKS,
    exceptional_induction,
    induce_same_family,
)
from .partitions import Partition
from .symbols_d import a_dual_via_symbol, springer_symbol

__all__ = ["main", "console_main", "regenerate_goldens"]

_EXC_TAGS = ("G2", "F4", "E6", "2E6", "E7", "E8")


def _parse_ell(text: str | None) -> EllClass:
    if not text or text == "none":
        return EllClass()
    return EllClass.of(*[t.strip() for t in text.split(",") if t.strip()])


def _emit(args, records, text_lines) -> None:
    if args.format == "records":
        for rec in records:
            print(json.dumps(rec, sort_keys=True, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# table renderers (shared by verbs and goldens)

def _aligned(rows: list[list[str]], sep: str = "  ") -> list[str]:
    widths = [0] * max(len(r) for r in rows)
    for row in rows:
        for j, cell in enumerate(row):
            widths[j] = max(widths[j], len(cell))
    return [sep.join(c.ljust(widths[j]) for j, c in enumerate(row)).rstrip() for row in rows]


_TABLE1_ROWS = (
    ("A_m", "A", 1),
    ("2A_m", "2A", 2),
    ("B_m", "B", 2),
    ("C_m", "C", 2),
    ("D_m,2D_m", "D", 4),
)


def table1_records(max_rank: int) -> list[dict]:
    recs = []
    for header, family, min_rank in _TABLE1_ROWS:
        for m in range(1, max_rank + 1):
            value = a_min_closed_form(GroupSpec(family, m)) if m >= min_rank else None
            recs.append({"row": header, "m": m, "a_min": value})
    return recs


def table1_lines(max_rank: int) -> list[str]:
    recs = table1_records(max_rank)
    grid = [["m"] + [str(m) for m in range(1, max_rank + 1)]]
    for header, _, _ in _TABLE1_ROWS:
        cells = [str(r["a_min"]) if r["a_min"] is not None else "-"
                 for r in recs if r["row"] == header]
        grid.append([header] + cells)
    return _aligned(grid)


def _dec_matrix_lines(mat: DecMatrix) -> list[str]:
    flag_text = " ".join(f"{f}={v}" for f, v in mat.flags)
    head = f"# {mat.kind}  n={mat.n}  k={mat.k}  {flag_text}"
    col_break = set()
    acc = 0
    for b in mat.blocks[:-1]:
        acc += b
        col_break.add(acc)
    rows = []
    for i in range(mat.size()):
        cells = [mat.labels[i], str(mat.a_rho[i])]
        for j in range(mat.size()):
            v = mat.entries[i][j]
            cells.append(str(v) if v else ".")
        rows.append(cells)
    series_cells = ["HC-series", ""] + list(mat.series)
    widths = [0] * (mat.size() + 2)
    for row in rows + [series_cells]:
        for j, c in enumerate(row):
            widths[j] = max(widths[j], len(c))

    def fmt(cells):
        out = f"{cells[0]:<{widths[0]}}  {cells[1]:>{widths[1]}} |"
        for j, c in enumerate(cells[2:]):
            out += f" {c:>{widths[j + 2]}}"
            if j + 1 in col_break:
                out += " |"
        return out.rstrip()

    lines = [head]
    row_break = col_break
    for i, cells in enumerate(rows):
        lines.append(fmt(cells))
        if i + 1 in row_break and i + 1 < mat.size():
            lines.append("-" * len(lines[1]))
    lines.append(fmt(series_cells))
    return lines


def _dec_matrix_records(mat: DecMatrix) -> list[dict]:
    recs = [{
        "kind": mat.kind, "n": mat.n, "k": mat.k,
        "flags": {f: v for f, v in mat.flags},
        "series": list(mat.series), "blocks": list(mat.blocks),
    }]
    for i in range(mat.size()):
        recs.append({
            "row": i + 1,
            "label": mat.labels[i],
            "a_rho": mat.a_rho[i],
            "entries": list(mat.entries[i][: i + 1]),
            "series": mat.series[i],
        })
    return recs


def _hc_rows_records(rows, ell: EllClass) -> list[dict]:
    return [
        {
            "levi": r.levi.display(),
            "label": r.label(),
            "a": r.a,
            "condition": r.condition(ell),
        }
        for r in rows
    ]


# ---------------------------------------------------------------------------
# goldens

_HC_BLOCKS = {
    "D": ((4, 6), 3, ("e2", "e4", "e3", "e6")),
    "2D": ((4, 5, 6, 7), 3, ("e2", "e4", "e3", "e6")),
    "B": ((2, 3, 5, 6), 4, ("e4", "e3", "e6")),
}


def _hc_block_lines(family: str) -> list[str]:
    reps, a_max, tags = _HC_BLOCKS[family]
    lines = [f"[{family}_n]"]
    cases = [((), EllClass())] + [((t,), EllClass.of(t)) for t in tags]
    unrestricted, restricted = [], []
    for case_tags, ell in cases:
        per_key: dict[tuple[str, str], dict] = {}
        for n in reps:
            for row in hc_series_bound(GroupSpec(family, n), a_max, ell):
                if case_tags and not row.condition_tags(ell):
                    continue  # always-rows are listed once, under their own case
                key = (row.levi.display(), row.label())
                slot = per_key.setdefault(key, {"row": row, "reps": set()})
                slot["reps"].add(n)
        full, partial = {}, {}
        for key, slot in per_key.items():
            (full if slot["reps"] == set(reps) else partial)[key] = slot
        cond = condition_text(case_tags)
        if full:
            cells = sorted(full.values(), key=lambda s: (s["row"].a, s["row"].levi.sort_key()))
            unrestricted.append(
                " ; ".join(f"({s['row'].levi.display()},{s['row'].label()})" for s in cells)
                + f"  |  {cond}"
            )
        by_reps: dict[tuple[int, ...], list] = {}
        for key, slot in partial.items():
            by_reps.setdefault(tuple(sorted(slot["reps"])), []).append(slot)
        for reps_present in sorted(by_reps):
            cells = sorted(by_reps[reps_present], key=lambda s: (s["row"].a, s["row"].levi.sort_key()))
            note = ",".join(f"n={n}" for n in reps_present)
            restricted.append(
                " ; ".join(f"({s['row'].levi.display()},{s['row'].label()})" for s in cells)
                + f"  |  {cond}, {note}"
            )
    return lines + unrestricted + restricted


def _cuspidal_brauer_lines(prefix: str) -> list[str]:
    from .hc_bound import _load_tables

    data, _ = _load_tables()
    rows = [["factor", "label", "a", "condition"]]
    for d in data:
        if not d.source.startswith(prefix):
            continue
        fam, rank = d.factor
        rows.append([f"{fam}_{rank}", d.label, str(d.a), condition_text(d.tags)])
    return _aligned(rows)


def _exceptional_amin_lines() -> list[str]:
    rows = [["type", "class", "a_min", "levi cuspidal a-values"]]
    for tag in _EXC_TAGS:
        name, amin, possible = EXCEPTIONAL_MINIMAL[tag]
        rows.append([tag, name, str(amin), ",".join(str(a) for a in possible)])
    return _aligned(rows)


def _exceptional_induction_lines() -> list[str]:
    lines = []
    for target, levi_rows, targets in EXCEPTIONAL_INDUCTION_BLOCKS:
        if lines:
            lines.append("")
        lines.append(f"-> {target}")
        grid = [[tag] + [c if c is not None else "" for c in cells] for tag, cells in levi_rows]
        grid.append(["=>"] + list(targets))
        lines.extend(_aligned(grid, sep=" | "))
    return lines


_GOLDEN_DEC_CASES = {
    "D+": ("none", "e3", "e4", "e5", "e6", "e8"),
    "D-": ("none", "e3", "e4", "e6", "e8", "e10"),
    "B": ("none", "e3", "e4", "e6", "e8"),
}
_GOLDEN_KIND_SLUG = {"D+": "Dplus", "D-": "Dminus", "B": "B"}


def regenerate_goldens(out_dir: Path) -> list[Path]:
    """Write every canonical reference table under out_dir."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    files: dict[str, list[str]] = {
        "amin_classical.txt": table1_lines(10),
        "amin_exceptional.txt": _exceptional_amin_lines(),
        "induced_exceptional.txt": _exceptional_induction_lines(),
        "cuspidal_brauer_d.txt": _cuspidal_brauer_lines("cuspidal-brauer-D"),
        "cuspidal_brauer_b.txt": _cuspidal_brauer_lines("cuspidal-brauer-B"),
        "hc_series_d.txt": _hc_block_lines("D") + [""] + _hc_block_lines("2D"),
        "hc_series_b.txt": _hc_block_lines("B"),
    }
    for kind, cases in _GOLDEN_DEC_CASES.items():
        n0 = dec_template(kind).n_min
        for case in cases:
            ell = EllClass() if case == "none" else EllClass.of(case)
            name = f"dec_{_GOLDEN_KIND_SLUG[kind]}_k0_{case}.txt"
            files[name] = _dec_matrix_lines(dec_table(kind, n0, ell))
    written = []
    for name in sorted(files):
        path = out_dir / name
        path.write_text("\n".join(files[name]) + "\n", encoding="utf-8")
        written.append(path)
    return written


# ---------------------------------------------------------------------------
# verb implementations

def _cmd_cuspidal(args) -> None:
    g = parse_group(args.group)
    labels = enumerate_cuspidal(g)
    recs = [{"group": str(g), "partition": str(c.partition), "compact": c.partition.compact()}
            for c in labels]
    _emit(args, recs, [", ".join(c.partition.compact() for c in labels)])


def _cmd_amin(args) -> None:
    key = args.target.strip().upper().replace("_", "")
    if key in _EXC_TAGS:
        name, amin = a_min_exceptional(key)
        _emit(args, [{"target": key, "class": name, "a_min": amin}],
              [f"{amin} ({name})"])
        return
    g = parse_group(args.target)
    value = a_min_closed_form(g)
    cls = minimal_cuspidal(g)
    _emit(args, [{"target": str(g), "class": cls.partition.compact(), "a_min": value}],
          [str(value)])


def _cmd_table1(args) -> None:
    _emit(args, table1_records(args.max_rank), table1_lines(args.max_rank))


def _cmd_dual(args) -> None:
    g = parse_group(args.group)
    label = ClassLabel(g, Partition.parse(args.partition))
    dual = dual_class(label)
    _emit(args, [{"group": str(g), "partition": str(label.partition),
                  "dual": str(dual.partition)}], [str(dual.partition)])


def _cmd_symbol(args) -> None:
    g = parse_group(args.group)
    if args.partition:
        label = ClassLabel(g, Partition.parse(args.partition))
    else:
        label = minimal_cuspidal(g)
    sym = springer_symbol(label)
    rec = {
        "group": str(g),
        "partition": str(label.partition),
        "symbol": sym.render(),
        "A_value": sym.A_value(),
        "a_dual": a_dual_via_symbol(label),
        "special": sym.is_special(),
    }
    _emit(args, [rec], [
        sym.render(),
        f"A = {rec['A_value']}",
        f"a_dual = {rec['a_dual']}",
        f"special = {'yes' if rec['special'] else 'no'}",
    ])


def _cmd_induce(args) -> None:
    if args.exceptional:
        name = exceptional_induction(args.group, args.partition)
        _emit(args, [{"levi": args.group, "partition": args.partition, "result": name}],
              [name])
        return
    if args.rank is None:
        raise ValueError("induce needs --rank R or --exceptional")
    g = parse_group(args.group)
    label = ClassLabel(g, Partition.parse(args.partition))
    result = induce_same_family(label, args.rank)
    _emit(args, [{
        "group": str(g), "partition": str(label.partition), "target_rank": args.rank,
        "result_group": str(result.group), "result_partition": str(result.partition),
    }], [str(result)])


def _cmd_hc_bound(args) -> None:
    g = parse_group(args.group)
    a_max = args.amax if args.amax is not None else (4 if g.family == "B" else 3)
    ell = _parse_ell(args.ell)
    rows = hc_series_bound(g, a_max, ell)
    recs = _hc_rows_records(rows, ell)
    _emit(args, recs,
          [f"({r['levi']},{r['label']})  a={r['a']}  {r['condition']}" for r in recs])


def _cmd_dectable(args) -> None:
    mat = dec_table(args.kind, args.n, _parse_ell(args.ell))
    _emit(args, _dec_matrix_records(mat), _dec_matrix_lines(mat))


def _cmd_dec_small(args) -> None:
    mat = dec_small(args.kind, args.n, args.q, args.ell, args.sign)
    recs = [{
        "kind": mat.kind, "n": args.n, "q": args.q, "ell": args.ell,
        "sign": args.sign, "params": {k: v for k, v in mat.params},
        "rows": [list(r) for r in mat.entries], "labels": list(mat.labels),
    }]
    param_text = " ".join(f"{k}={v}" for k, v in mat.params)
    width = max(len(lab) for lab in mat.labels)
    lines = [param_text] + [
        f"{lab:<{width}} | " + " ".join(str(v) if v else "." for v in row[: i + 1])
        for i, (lab, row) in enumerate(zip(mat.labels, mat.entries))
    ]
    _emit(args, recs, lines)


def _cmd_ellclass(args) -> None:
    ell = ell_class_from(args.q, args.ell)
    tags = ell.sorted_tags()
    text = "none" if not tags else f"{','.join(tags)}  {condition_text(tags)}"
    _emit(args, [{"q": args.q, "ell": args.ell, "tags": list(tags)}], [text])


def _cmd_gap_bound(args) -> None:
    poly = degree_gap_bound(args.kind, args.n)
    rec = {"kind": args.kind, "n": args.n, "poly": poly.text()}
    lines = [poly.text()]
    if args.at is not None:
        value = poly.evaluate(args.at)
        rec["at"] = args.at
        rec["value"] = str(value)
        lines.append(f"= {value}")
    _emit(args, [rec], lines)


def _cmd_goldens(args) -> None:
    written = regenerate_goldens(Path(args.out))
    _emit(args, [{"file": str(p)} for p in written], [str(p) for p in written])


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default="text",
                        help="text rendering or JSON-lines records")
    parser = argparse.ArgumentParser(
        prog="unipotent",
        description="exact combinatorics of unipotent classes in finite classical groups",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("cuspidal", parents=[common], help="cuspidal class labels of a group")
    p.add_argument("group")
    p.set_defaults(func=_cmd_cuspidal)

    p = sub.add_parser("amin", parents=[common], help="minimal dual a-value of a group")
    p.add_argument("target", help="group name (D8) or exceptional tag (F4, 2E6, ...)")
    p.set_defaults(func=_cmd_amin)

    p = sub.add_parser("table1", parents=[common], help="grid of minimal a-values")
    p.add_argument("--max-rank", type=int, default=10)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("dual", parents=[common], help="dual class label by conjugation")
    p.add_argument("group")
    p.add_argument("partition")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("symbol", parents=[common],
                       help="symbol and dual a-value of a D/2D class")
    p.add_argument("group")
    p.add_argument("partition", nargs="?")
    p.set_defaults(func=_cmd_symbol)

    p = sub.add_parser("induce", parents=[common], help="induce a class label")
    p.add_argument("group")
    p.add_argument("partition")
    p.add_argument("--rank", type=int, help="target rank, same family")
    p.add_argument("--exceptional", action="store_true",
                   help="look up the exceptional-group induction table")
    p.set_defaults(func=_cmd_induce)

    p = sub.add_parser("hc-bound", parents=[common],
                       help="cuspidal pairs that can carry small a-values")
    p.add_argument("group")
    p.add_argument("--amax", type=int)
    p.add_argument("--ell", help="comma-separated condition tags, e.g. e2")
    p.set_defaults(func=_cmd_hc_bound)

    p = sub.add_parser("dectable", parents=[common],
                       help="approximate decomposition matrix template, evaluated")
    p.add_argument("kind", choices=("D+", "D-", "B"))
    p.add_argument("n", type=int)
    p.add_argument("--ell", help="comma-separated condition tags")
    p.set_defaults(func=_cmd_dectable)

    p = sub.add_parser("dec-small", parents=[common],
                       help="small decomposition matrix with divisibility indicators")
    p.add_argument("kind", choices=("Dpm", "B"))
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("ell", type=int)
    p.add_argument("--sign", choices=("+", "-"))
    p.set_defaults(func=_cmd_dec_small)

    p = sub.add_parser("ellclass", parents=[common],
                       help="active cyclotomic condition tags of (q, ell)")
    p.add_argument("q", type=int)
    p.add_argument("ell", type=int)
    p.set_defaults(func=_cmd_ellclass)

    p = sub.add_parser("gap-bound", parents=[common], help="degree-gap threshold polynomial")
    p.add_argument("kind", choices=("D+", "D-", "B"))
    p.add_argument("n", type=int)
    p.add_argument("--at", type=int, help="evaluate at this q")
    p.set_defaults(func=_cmd_gap_bound)

    p = sub.add_parser("goldens", parents=[common], help="regenerate canonical table files")
    p.add_argument("--out", default="goldens")
    p.set_defaults(func=_cmd_goldens)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
