"""Parameterised approximate decomposition matrices and degree thresholds.

Three template families are shipped, for the split/non-split
even-dimensional and the odd-dimensional spin groups.  Rows carry a
label (a symbol or a bipartition in n), an a-value, and entries that are
integer expressions in the indicator flags a..e and the rank excess k
(k = n-5 for the even templates, k = n-4 for the odd one; the offsets
are deliberately not normalised).  Exactly one flag is set, according to
which cyclotomic value ell divides, or none.

Entry expressions are a tiny explicit tree (constants, variables, sums,
products, binom(k,2)) evaluated in exact integers, so the templates can
be checked wholesale for lower-unitriangularity and nonnegativity.

Also here: the 3x3/5x5 small decomposition matrices with divisibility
indicators, and the degree-gap threshold polynomials (exact rationals).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cyclotomic import EllClass, _is_prime, ell_class_from

__all__ = [
    "Expr",
    "DecTemplate",
    "DecMatrix",
    "dec_template",
    "dec_table",
    "dec_small",
    "SmallDecMatrix",
    "degree_gap_bound",
    "QPoly",
    "ell_class_from",
]


# ---------------------------------------------------------------------------
# entry expressions

class Expr:
    def eval(self, env: dict[str, int]) -> int:
        raise NotImplementedError

    def text(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Const(Expr):
    value: int

    def eval(self, env):
        return self.value

    def text(self):
        return str(self.value)


@dataclass(frozen=True)
class Var(Expr):
    name: str

    def eval(self, env):
        return env[self.name]

    def text(self):
        return self.name


@dataclass(frozen=True)
class Add(Expr):
    terms: tuple[Expr, ...]

    def eval(self, env):
        return sum(t.eval(env) for t in self.terms)

    def text(self):
        parts = [t.text() for t in self.terms]
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


@dataclass(frozen=True)
class Mul(Expr):
    factors: tuple[Expr, ...]

    def eval(self, env):
        out = 1
        for f in self.factors:
            out *= f.eval(env)
        return out

    def text(self):
        return "".join(
            f"({f.text()})" if isinstance(f, Add) else f.text() for f in self.factors
        )


@dataclass(frozen=True)
class Binom2(Expr):
    arg: Expr

    def eval(self, env):
        return comb(self.arg.eval(env), 2)

    def text(self):
        return f"binom({self.arg.text()},2)"


_A, _B, _C, _D, _E, _K = (Var(x) for x in "abcdek")
_ONE, _ZERO = Const(1), Const(0)
_BK2 = Binom2(_K)


def _add(*terms):
    return Add(tuple(terms))


def _mul(*factors):
    return Mul(tuple(factors))


# ---------------------------------------------------------------------------
# row labels: symbols (top|bottom) and bipartitions (alpha;beta); items are
# plain integers or n-offsets encoded as ("n", offset)

def _item_value(item, n: int) -> int:
    if isinstance(item, tuple):
        return n + item[1]
    return item


def _render_parts(items, n: int, collapse: bool) -> str:
    vals = [_item_value(i, n) for i in items]
    if not vals:
        return "-"
    if not collapse:
        return ",".join(str(v) for v in vals)
    toks = []
    i = 0
    while i < len(vals):
        j = i
        while j < len(vals) and vals[j] == vals[i]:
            j += 1
        toks.append(f"{vals[i]}^{j - i}" if j - i > 1 else str(vals[i]))
        i = j
    return ",".join(toks)


@dataclass(frozen=True)
class RowSpec:
    kind: str  # "symbol" | "bipartition"
    first: tuple
    second: tuple
    a_rho: int
    entries: tuple[Expr, ...]

    def label(self, n: int) -> str:
        if self.kind == "symbol":
            top = _render_parts(self.first, n, collapse=False)
            bottom = _render_parts(self.second, n, collapse=False)
            return f"({top}|{bottom})"
        alpha = _render_parts(self.first, n, collapse=True)
        beta = _render_parts(self.second, n, collapse=True)
        return f"({alpha};{beta})"


@dataclass(frozen=True)
class DecTemplate:
    kind: str
    n_min: int
    k_offset: int
    flag_tags: tuple[tuple[str, str], ...]  # (flag, cyclotomic tag), in order
    rows: tuple[RowSpec, ...]
    series: tuple[str, ...]
    conditional_series: tuple[tuple[int, str, str], ...]  # (column, tag, label)
    series_note: str
    blocks: tuple[int, ...]

    def flags_from(self, ell: EllClass) -> dict[str, int]:
        env = {flag: 0 for flag in "abcde"}
        for flag, tag in self.flag_tags:
            if ell.is_active(tag):
                env[flag] = 1
        assert sum(env.values()) <= 1, env
        return env


def _n(offset: int = 0):
    return ("n", offset)


_DPLUS = DecTemplate(
    kind="D+",
    n_min=5,
    k_offset=5,
    flag_tags=(("a", "e3"), ("b", "e4"), ("c", "e5"), ("d", "e6"), ("e", "e8")),
    rows=(
        RowSpec("symbol", (_n(),), (0,), 0, (_ONE,)),
        RowSpec("symbol", (_n(-1),), (1,), 1, (_add(_E, _K), _ONE)),
        RowSpec("symbol", (1, _n()), (0, 1), 2, (_add(_C, _K), _ZERO, _ONE)),
        RowSpec(
            "symbol", (3,), (2,), 2,
            (_add(_B, _D, _mul(_K, _E), _BK2), _add(_B, _K), _ZERO, _ONE),
        ),
        RowSpec("symbol", (0, 1, 2, _n(-1)), (), 3, (_ZERO, _ZERO, _ZERO, _ZERO, _ONE)),
        RowSpec(
            "symbol", (0, _n(-1)), (1, 2), 3,
            (_add(_mul(_K, _E), _BK2), _add(_E, _K), _ZERO, _ZERO, _ZERO, _ONE),
        ),
        RowSpec(
            "symbol", (1, _n(-1)), (0, 2), 3,
            (
                _mul(_K, _add(_C, _E, _K, Const(-1))),
                _add(_B, _K),
                _add(_D, _K),
                _B,
                _ZERO,
                _ZERO,
                _ONE,
            ),
        ),
        RowSpec(
            "symbol", (2, _n(-1)), (0, 1), 3,
            (
                _add(_B, _mul(_K, _C), _BK2),
                _ZERO,
                _add(_A, _K),
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ONE,
            ),
        ),
    ),
    series=("ps", "ps", "ps", "ps", "D_4", "ps", "ps", "ps"),
    conditional_series=(),
    series_note="",
    blocks=(3, 1, 4),
)

_DMINUS = DecTemplate(
    kind="D-",
    n_min=5,
    k_offset=5,
    flag_tags=(("a", "e3"), ("b", "e4"), ("c", "e6"), ("d", "e8"), ("e", "e10")),
    rows=(
        RowSpec("bipartition", (_n(-1),), (), 0, (_ONE,)),
        RowSpec("bipartition", (_n(-2), 1), (), 1, (_add(_B, _K), _ONE)),
        RowSpec("bipartition", (_n(-2),), (1,), 2, (_add(_E, _K), _ZERO, _ONE)),
        RowSpec(
            "bipartition", (_n(-3), 2), (), 2,
            (_add(_A, _mul(_K, _B), _BK2), _K, _ZERO, _ONE),
        ),
        RowSpec(
            "bipartition", (_n(-3), 1, 1), (), 3,
            (_add(_mul(_K, _B), _BK2), _add(_B, _K), _ZERO, _ZERO, _ONE),
        ),
        RowSpec(
            "bipartition", (_n(-3), 1), (1,), 3,
            (
                _mul(_K, _add(_B, _E, _K, Const(-1))),
                _add(_D, _K),
                _add(_A, _K),
                _B,
                _ZERO,
                _ONE,
            ),
        ),
        RowSpec(
            "bipartition", (_n(-3),), (2,), 3,
            (_add(_D, _mul(_K, _E), _BK2), _ZERO, _add(_C, _K), _ZERO, _ZERO, _ZERO, _ONE),
        ),
        RowSpec(
            "bipartition", (), (_n(-1),), 3,
            (_B, _ZERO, _ZERO, _ZERO, _ZERO, _ZERO, _ZERO, _ONE),
        ),
    ),
    series=("ps", "ps", "ps", "ps", "ps", "ps", "ps", "ps/2D_2"),
    conditional_series=((8, "e4", "2D_2"),),
    series_note="all eight projectives lie in the principal series, except "
    "that the eighth moves to the 2D_2-series when e4 is active",
    blocks=(3, 1, 4),
)

_B_ODD = DecTemplate(
    kind="B",
    n_min=4,
    k_offset=4,
    flag_tags=(("a", "e3"), ("b", "e4"), ("c", "e6"), ("d", "e8")),
    rows=(
        RowSpec("symbol", (_n(),), (), 0, (_ONE,)),
        RowSpec("symbol", (0, 1, _n()), (), 1, (_ZERO, _ONE)),
        RowSpec("symbol", (0, 1), (_n(),), 1, (_ZERO, _ZERO, _ONE)),
        RowSpec("symbol", (1, _n()), (0,), 1, (_add(_B, _K), _ZERO, _ZERO, _ONE)),
        RowSpec("symbol", (0, _n()), (1,), 1, (_add(_D, _K), _ZERO, _ZERO, _ZERO, _ONE)),
        RowSpec(
            "symbol", (0, 2, _n(-1)), (), 2,
            (_ZERO, _K, _ZERO, _ZERO, _ZERO, _ONE),
        ),
        RowSpec(
            "symbol", (0, 2), (_n(-1),), 2,
            (_B, _ZERO, _add(_B, _K), _ZERO, _ZERO, _ZERO, _ONE),
        ),
        RowSpec(
            "symbol", (2, _n(-1)), (0,), 2,
            (_add(_A, _mul(_K, _B), _BK2), _ZERO, _ZERO, _K, _ZERO, _ZERO, _ZERO, _ONE),
        ),
        RowSpec(
            "symbol", (0, _n(-1)), (2,), 2,
            (
                _add(_C, _mul(_K, _D), _BK2),
                _ZERO,
                _ZERO,
                _ZERO,
                _add(_B, _K),
                _ZERO,
                _ZERO,
                _ZERO,
                _ONE,
            ),
        ),
        RowSpec(
            "symbol", (1, _n(-1)), (1,), 3,
            (
                _mul(_K, _add(_B, _D, _K, Const(-1))),
                _ZERO,
                _ZERO,
                _add(_C, _K),
                _add(_A, _K),
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ONE,
            ),
        ),
        RowSpec(
            "symbol", (0, 1, 2, _n()), (1,), 4,
            (
                _ZERO,
                _add(_D, _K),
                _ZERO,
                _ZERO,
                _ZERO,
                _B,
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ONE,
            ),
        ),
        RowSpec(
            "symbol", (0, 1, 2), (1, _n()), 4,
            (
                _ZERO,
                _ZERO,
                _add(_B, _K),
                _ZERO,
                _ZERO,
                _ZERO,
                _B,
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ONE,
            ),
        ),
        RowSpec(
            "symbol", (1, 2, _n()), (0, 1), 4,
            (
                _add(_mul(_K, _B), _BK2),
                _ZERO,
                _ZERO,
                _add(_B, _K),
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ONE,
            ),
        ),
        RowSpec(
            "symbol", (0, 1, _n()), (1, 2), 4,
            (
                _add(_mul(_K, _D), _BK2),
                _ZERO,
                _ZERO,
                _ZERO,
                _add(_D, _K),
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ZERO,
                _ONE,
            ),
        ),
    ),
    series=("ps", "B_2", "ps", "ps", "ps", "B_2", "ps", "ps", "ps", "ps", "B_2",
            "ps/.1^2", "ps", "ps"),
    conditional_series=((12, "e4", ".1^2"),),
    series_note="the twelfth projective is in the principal series unless e4 "
    "is active, when it carries the B_2-class character -.1^2",
    blocks=(1, 4, 4, 1, 4),
)

_TEMPLATES = {"D+": _DPLUS, "D-": _DMINUS, "B": _B_ODD}


def dec_template(kind: str) -> DecTemplate:
    if kind not in _TEMPLATES:
        raise ValueError(f"unknown template kind {kind!r} (use D+, D-, B)")
    return _TEMPLATES[kind]


@dataclass(frozen=True)
class DecMatrix:
    """A template evaluated at concrete (n, ell)."""

    kind: str
    n: int
    k: int
    flags: tuple[tuple[str, int], ...]
    labels: tuple[str, ...]
    a_rho: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]  # square, zeros above the diagonal
    series: tuple[str, ...]
    blocks: tuple[int, ...]

    def size(self) -> int:
        return len(self.labels)


def dec_table(kind: str, n: int, ell: EllClass) -> DecMatrix:
    """Evaluate a template at rank n under the condition class ell."""
    tpl = dec_template(kind)
    if n < tpl.n_min:
        raise ValueError(f"{kind} template needs n >= {tpl.n_min}, got {n}")
    if ell.is_active("e2"):
        raise ValueError("templates assume ℓ does not divide q+1")
    env = tpl.flags_from(ell)
    env["k"] = n - tpl.k_offset
    size = len(tpl.rows)
    full = []
    for i, row in enumerate(tpl.rows):
        assert len(row.entries) == i + 1, (kind, i)
        vals = [e.eval(env) for e in row.entries]
        assert vals[-1] == 1 and all(v >= 0 for v in vals), (kind, i, vals)
        full.append(tuple(vals) + (0,) * (size - i - 1))
    series = list(tpl.series)
    for col, tag, label in tpl.conditional_series:
        series[col - 1] = label if ell.is_active(tag) else "ps"
    return DecMatrix(
        kind=kind,
        n=n,
        k=env["k"],
        flags=tuple((f, env[f]) for f, _ in tpl.flag_tags),
        labels=tuple(row.label(n) for row in tpl.rows),
        a_rho=tuple(row.a_rho for row in tpl.rows),
        entries=tuple(full),
        series=tuple(series),
        blocks=tpl.blocks,
    )


# ---------------------------------------------------------------------------
# small decomposition matrices

@dataclass(frozen=True)
class SmallDecMatrix:
    kind: str
    labels: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]
    params: tuple[tuple[str, int], ...]


def _kappa(ell: int, m: int) -> int:
    return 1 if m % ell == 0 else 0


def _check_q_ell(q: int, ell: int, *, odd_ell_only: bool) -> None:
    from .cyclotomic import _is_prime_power

    if q < 3 or q % 2 == 0 or not _is_prime_power(q):
        raise ValueError(f"q must be an odd prime power >= 3, got {q}")
    if not _is_prime(ell):
        raise ValueError(f"ℓ must be prime, got {ell}")
    if odd_ell_only and ell == 2:
        raise ValueError("ℓ must be odd")
    if q % ell == 0:
        raise ValueError(f"ℓ divides q: {ell} | {q}")
    if (q + 1) % ell == 0:
        raise ValueError(f"ℓ divides q+1: {ell} | {q + 1}")


def dec_small(kind: str, n: int, q: int, ell: int, sign: str | None = None) -> SmallDecMatrix:
    """The small decomposition matrices with divisibility indicators.

    kind "Dpm": 3 rows, n >= 3, sign "+" or "-" selecting the split or
    non-split form (a tests ell | q^(n-1) +- 1, b tests ell | q^n -+ 1).
    kind "B": 5 rows, n >= 2; a = [ell | q^n - 1] and b = 1 - a when
    ell | (q^(2n)-1)/(q-1), else a = b = 0.
    """
    if kind == "Dpm":
        if n < 3:
            raise ValueError(f"kind Dpm needs n >= 3, got {n}")
        if sign not in ("+", "-"):
            raise ValueError("sign must be '+' or '-'")
        _check_q_ell(q, ell, odd_ell_only=False)
        eps = 1 if sign == "+" else -1
        a = _kappa(ell, q ** (n - 1) + eps)
        b = _kappa(ell, q**n - eps)
        return SmallDecMatrix(
            kind="Dpm",
            labels=("1", "rho_2", "rho_3"),
            entries=((1, 0, 0), (a, 1, 0), (b, 0, 1)),
            params=(("a", a), ("b", b)),
        )
    if kind == "B":
        if n < 2:
            raise ValueError(f"kind B needs n >= 2, got {n}")
        if sign is not None:
            raise ValueError("kind B takes no sign")
        _check_q_ell(q, ell, odd_ell_only=True)
        if ((q ** (2 * n) - 1) // (q - 1)) % ell == 0:
            a = _kappa(ell, q**n - 1)
            b = 1 - a
        else:
            a = b = 0
        return SmallDecMatrix(
            kind="B",
            labels=("1", "rho_2", "rho_3", "rho_4", "rho_5"),
            entries=(
                (1, 0, 0, 0, 0),
                (0, 1, 0, 0, 0),
                (0, 0, 1, 0, 0),
                (a, 0, 0, 1, 0),
                (b, 0, 0, 0, 1),
            ),
            params=(("a", a), ("b", b)),
        )
    raise ValueError(f"unknown small-matrix kind {kind!r} (use Dpm, B)")


# ---------------------------------------------------------------------------
# degree-gap thresholds

@dataclass(frozen=True)
class QPoly:
    """A sparse polynomial in q with exact rational coefficients."""

    terms: tuple[tuple[int, Fraction], ...]  # (exponent, coefficient), desc

    def evaluate(self, q: int) -> Fraction:
        return sum((c * q**e for e, c in self.terms), Fraction(0))

    def text(self) -> str:
        out = []
        for e, c in self.terms:
            mag = f"q^{e}" if abs(c) == 1 else f"({abs(c)})q^{e}"
            out.append(("- " if c < 0 else "+ " if out else "") + mag)
        return " ".join(out) if out else "0"


def degree_gap_bound(kind: str, n: int) -> QPoly:
    """Degree threshold below which a Brauer constituent is already small."""
    if kind == "D+":
        if n < 5:
            raise ValueError(f"kind D+ needs n >= 5, got {n}")
        return QPoly(((4 * n - 10, Fraction(1)),))
    if kind == "D-":
        if n < 5:
            raise ValueError(f"kind D- needs n >= 5, got {n}")
        return QPoly(((4 * n - 10, Fraction(1)), (9, Fraction(-1))))
    if kind == "B":
        if n < 4:
            raise ValueError(f"kind B needs n >= 4, got {n}")
        return QPoly(((4 * n - 6, Fraction(1, 2)), (3 * n - 3, Fraction(-1))))
    raise ValueError(f"unknown threshold kind {kind!r} (use D+, D-, B)")
