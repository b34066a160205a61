"""Generalized Lyndon words and the unique nonincreasing factorization.

A nonempty word w is generalized Lyndon (for a given order schedule) when
w^omega is smaller than (vu)^omega for every nontrivial factorization
w = uv.  Two equivalent characterizations exist: u^omega < v^omega for
every split, and w^omega < v^omega for every split; all three are
implemented and must agree.

Every word factors uniquely as a nonincreasing product of generalized
Lyndon words.  The factorizer strips the last factor (the shortest
nontrivial suffix with minimal omega-power) repeatedly; this is quadratic
in the number of comparisons by design, since no linear-time algorithm is
known for arbitrary schedules.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from .core import (
    Alphabet,
    Ordering,
    OrderSchedule,
    Word,
    _omega_mismatch,
    _require_nonempty,
    compare_omega,
    parse_order_spec,
    primitive_root,
)


class LyndonMethod(enum.Enum):
    """Which of the three equivalent membership tests to run."""

    ROTATIONS = "rotations"
    SPLIT_COMPARE = "split"
    SUFFIX_COMPARE = "suffix"


def _mismatch_is_less(
    ba: bytes, ia: int, la: int, bb: bytes, ib: int, lb: int, schedule: OrderSchedule
) -> bool:
    """True when the first omega-power is strictly smaller than the second."""
    m = _omega_mismatch(ba, ia, la, bb, ib, lb)
    if m < 0:
        return False
    order = schedule.order_at(m + 1)
    return order.rank_of[ba[ia + m % la]] < order.rank_of[bb[ib + m % lb]]


def is_generalized_lyndon(
    w: Word,
    schedule: OrderSchedule,
    method: LyndonMethod = LyndonMethod.SPLIT_COMPARE,
) -> bool:
    """Membership test for generalized Lyndon words.

    All three methods agree on every input; SPLIT_COMPARE is the default
    because it compares the shortest pair of words per split.
    """
    _require_nonempty(w)
    a = w.letters
    n = len(a)
    if method is LyndonMethod.ROTATIONS:
        for i in range(1, n):
            rot = a[i:] + a[:i]
            if not _mismatch_is_less(a, 0, n, rot, 0, n, schedule):
                return False
    elif method is LyndonMethod.SPLIT_COMPARE:
        for i in range(1, n):
            if not _mismatch_is_less(a, 0, i, a, i, n - i, schedule):
                return False
    elif method is LyndonMethod.SUFFIX_COMPARE:
        for i in range(1, n):
            if not _mismatch_is_less(a, 0, n, a, i, n - i, schedule):
                return False
    else:
        raise ValueError(f"unknown method {method!r}")
    return True


def _last_factor_start(a: bytes, n: int, schedule: OrderSchedule) -> int:
    # Scan suffixes of a[:n] from shortest to longest, keeping the current
    # omega-minimum and replacing it only on a strictly smaller suffix, so
    # the shortest minimizer wins.  First letters settle most comparisons.
    rank1 = schedule.order_at(1).rank_of
    best = n - 1
    for i in range(n - 2, -1, -1):
        c = a[i]
        d = a[best]
        if c != d:
            if rank1[c] < rank1[d]:
                best = i
            continue
        la = n - i
        lb = n - best
        m = _omega_mismatch(a, i, la, a, best, lb)
        if m >= 0:
            order = schedule.order_at(m + 1)
            if order.rank_of[a[i + m % la]] < order.rank_of[a[best + m % lb]]:
                best = i
    return best


def last_factor(w: Word, schedule: OrderSchedule) -> Word:
    """The shortest nontrivial suffix of w with minimal omega-power.

    This suffix is always a generalized Lyndon word and is the final factor
    of the nonincreasing factorization.
    """
    _require_nonempty(w)
    return w[_last_factor_start(w.letters, len(w.letters), schedule):]


def longest_lyndon_suffix(w: Word, schedule: OrderSchedule) -> Word:
    """The longest suffix of w that is a generalized Lyndon word.

    Computed by direct downward scan; coincides with ``last_factor`` but
    deliberately does not share its implementation.
    """
    _require_nonempty(w)
    for length in range(len(w), 0, -1):
        s = w.suffix(length)
        if is_generalized_lyndon(s, schedule):
            return s
    raise AssertionError("unreachable: single letters are generalized Lyndon")


@dataclass(frozen=True)
class Factorization:
    """A word written as a product of generalized Lyndon factors.

    Valid instances are nonincreasing: each factor's omega-power is >= the
    next one's.  The empty word carries an empty factor list.
    """

    word: Word
    schedule: OrderSchedule
    factors: tuple[Word, ...]

    def to_text(self) -> str:
        return "".join(f"({f})" for f in self.factors)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "word": str(self.word),
            "order": self.schedule.to_spec(self.word.alphabet),
            "factors": [str(f) for f in self.factors],
        }

    @classmethod
    def from_json_dict(
        cls,
        data: dict[str, Any],
        alphabet: Alphabet | None = None,
        sep: str | None = None,
    ) -> "Factorization":
        schedule, alphabet = parse_order_spec(data["order"], alphabet)
        word = alphabet.word(data["word"], sep)
        factors = tuple(alphabet.word(f, sep) for f in data["factors"])
        return cls(word=word, schedule=schedule, factors=factors)


def factorize(w: Word, schedule: OrderSchedule) -> Factorization:
    """The unique nonincreasing factorization into generalized Lyndon words.

    Strips the last factor repeatedly.  The empty word yields an empty
    factor list.
    """
    a = w.letters
    spans = []
    n = len(a)
    while n > 0:
        start = _last_factor_start(a, n, schedule)
        spans.append((start, n))
        n = start
    spans.reverse()
    factors = tuple(Word(w.alphabet, a[s:e]) for s, e in spans)
    return Factorization(word=w, schedule=schedule, factors=factors)


def first_factor(w: Word, schedule: OrderSchedule) -> Word:
    """The leading factor of the nonincreasing factorization."""
    _require_nonempty(w)
    return factorize(w, schedule).factors[0]


def verify_factorization(f: Factorization) -> bool:
    """Check every invariant: factors concatenate to the word, each factor
    is a nonempty primitive generalized Lyndon word, and consecutive
    omega-powers never increase."""
    joined = b"".join(x.letters for x in f.factors)
    if joined != f.word.letters:
        return False
    for x in f.factors:
        if x.is_empty or x.alphabet != f.word.alphabet:
            return False
        if not is_generalized_lyndon(x, f.schedule):
            return False
        if primitive_root(x)[1] != 1:
            return False
    for x, y in zip(f.factors, f.factors[1:]):
        if compare_omega(x, y, f.schedule) is Ordering.LESS:
            return False
    return True
