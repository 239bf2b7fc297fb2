"""Cyclotomic divisibility conditions on a prime ell relative to q.

The case splits downstream are driven by which cyclotomic value at q the
prime ell divides.  The fixed vocabulary of condition tags:

    e1   q - 1                e5   q^4 + q^3 + q^2 + q + 1
    e2   q + 1                e6   q^2 - q + 1
    e3   q^2 + q + 1          e8   q^4 + 1
    e4   q^2 + 1              e10  q^4 - q^3 + q^2 - q + 1

For a prime ell > 5 not dividing q, at most one tag can be active
(distinct cyclotomic values at q share no common prime factor above 5 in
this range); this is asserted whenever a condition set is derived from a
concrete (q, ell).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

__all__ = ["CONDITIONS", "CONDITION_TAGS", "EllClass", "ell_class_from", "condition_text"]

CONDITIONS = (
    ("e1", "q-1", lambda q: q - 1),
    ("e2", "q+1", lambda q: q + 1),
    ("e3", "q^2+q+1", lambda q: q * q + q + 1),
    ("e4", "q^2+1", lambda q: q * q + 1),
    ("e5", "q^4+q^3+q^2+q+1", lambda q: q**4 + q**3 + q * q + q + 1),
    ("e6", "q^2-q+1", lambda q: q * q - q + 1),
    ("e8", "q^4+1", lambda q: q**4 + 1),
    ("e10", "q^4-q^3+q^2-q+1", lambda q: q**4 - q**3 + q * q - q + 1),
)

CONDITION_TAGS = tuple(tag for tag, _, _ in CONDITIONS)
_POLY_TEXT = {tag: text for tag, text, _ in CONDITIONS}
_TAG_ORDER = {tag: i for i, tag in enumerate(CONDITION_TAGS)}


@dataclass(frozen=True)
class EllClass:
    """A set of active condition tags, optionally recording its (q, ell)."""

    active: frozenset[str] = field(default_factory=frozenset)
    source: tuple[int, int] | None = None

    def __post_init__(self):
        unknown = set(self.active) - set(CONDITION_TAGS)
        if unknown:
            raise ValueError(f"unknown condition tags {sorted(unknown)}")

    @classmethod
    def of(cls, *tags: str) -> "EllClass":
        return cls(frozenset(tags))

    def is_active(self, tag: str) -> bool:
        return tag in self.active

    def satisfies(self, tags_any_of) -> bool:
        """True for an empty requirement, else if any listed tag is active."""
        tags = tuple(tags_any_of)
        return not tags or any(t in self.active for t in tags)

    def sorted_tags(self) -> tuple[str, ...]:
        return tuple(sorted(self.active, key=_TAG_ORDER.__getitem__))

    def __str__(self) -> str:
        return ",".join(self.sorted_tags()) or "none"


def condition_text(tags_any_of) -> str:
    """Render a product condition like "ℓ|(q+1)(q^2+1)"; "always" if empty."""
    tags = sorted(tags_any_of, key=_TAG_ORDER.__getitem__)
    if not tags:
        return "always"
    return "ℓ|" + "".join(f"({_POLY_TEXT[t]})" for t in tags)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for anything that survives the small sieve
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = None
    for cand in range(2, isqrt(n) + 1):
        if n % cand == 0:
            p = cand
            break
    if p is None:
        return True  # n itself is prime
    while n % p == 0:
        n //= p
    return n == 1


def ell_class_from(q: int, ell: int) -> EllClass:
    """Active condition tags of a prime ell relative to q, exactly.

    Requires q an odd prime power >= 3 and ell a prime > 5 dividing
    neither q nor q+1.  Each violated precondition is reported
    individually.
    """
    if q < 3:
        raise ValueError(f"q must be at least 3, got {q}")
    if q % 2 == 0:
        raise ValueError(f"q must be odd, got {q}")
    if not _is_prime_power(q):
        raise ValueError(f"q must be a prime power, got {q}")
    if not _is_prime(ell):
        raise ValueError(f"ℓ must be prime, got {ell}")
    if ell <= 5:
        raise ValueError(f"ℓ ≤ 5: got {ell}")
    if q % ell == 0:
        raise ValueError(f"ℓ divides q: {ell} | {q}")
    if (q + 1) % ell == 0:
        raise ValueError(f"ℓ divides q+1: {ell} | {q + 1}")
    active = frozenset(tag for tag, _, value in CONDITIONS if value(q) % ell == 0)
    assert len(active) <= 1, (q, ell, sorted(active))
    return EllClass(active, source=(q, ell))
