"""Alternating-order specializations and the continued-fraction bridge.

The alternating order uses a base order at odd positions and its reverse at
even positions.  Its Lyndon-style words ("Galois words") are exactly the
words whose continued-fraction interpretation is minimal among rotations:
over positive integer labels, comparing omega-powers under the alternating
order agrees with comparing the real values of the periodic continued
fractions whose partial quotients they spell.  The bridge is implemented
with exact integer convergent arithmetic, nested intervals, and a depth cap
that is asserted never to trip.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Alphabet,
    AlternatingOrder,
    Ordering,
    PositionOrder,
    Word,
    _require_nonempty,
    borders,
    compare_omega,
    comparison_position,
)
from .lyndon import Factorization, LyndonMethod, factorize, is_generalized_lyndon


@dataclass(frozen=True)
class GaloisContext:
    """A base order whose alternating schedule defines the Galois words."""

    base: PositionOrder

    @property
    def schedule(self) -> AlternatingOrder:
        return AlternatingOrder(self.base)


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, n: int) -> "Parity":
        return cls.EVEN if n % 2 == 0 else cls.ODD


def is_galois(
    w: Word, ctx: GaloisContext, method: LyndonMethod = LyndonMethod.SPLIT_COMPARE
) -> bool:
    """Generalized Lyndon membership under the alternating schedule."""
    return is_generalized_lyndon(w, ctx.schedule, method)


def parity_prefix_check(w: Word, ctx: GaloisContext) -> bool:
    """Prefix criterion for Galois words: every nontrivial prefix p has
    p^omega < w^omega when |p| is even and p^omega > w^omega when odd."""
    _require_nonempty(w)
    schedule = ctx.schedule
    for i in range(1, len(w)):
        cmp = compare_omega(w[:i], w, schedule)
        want = Ordering.LESS if i % 2 == 0 else Ordering.GREATER
        if cmp is not want:
            return False
    return True


def multiplicity(f: Factorization) -> int:
    """How many factors equal the first one."""
    if not f.factors:
        raise ValueError("multiplicity of an empty factorization")
    head = f.factors[0]
    return sum(1 for g in f.factors if g == head)


@dataclass(frozen=True)
class StarReport:
    """Outcome of the parity prefix condition for one prefix."""

    prefix: Word
    parity: Parity
    holds: bool


def star_condition(p: Word, w: Word, ctx: GaloisContext) -> StarReport:
    """Evaluate the parity condition for a nontrivial prefix p of w:
    p^omega >= w^omega when |p| is even, p^omega <= w^omega when odd.

    The equivalent suffix form (w = ps with s empty or p^omega >= s^omega)
    is computed as well; the two must agree on every input.
    """
    _require_nonempty(p)
    if not w.letters.startswith(p.letters) or p.alphabet != w.alphabet:
        raise ValueError("p must be a nontrivial prefix of w")
    schedule = ctx.schedule
    parity = Parity.of(len(p))
    cw = compare_omega(p, w, schedule)
    if parity is Parity.EVEN:
        holds = cw is not Ordering.LESS
    else:
        holds = cw is not Ordering.GREATER
    s = w[len(p):]
    by_suffix = s.is_empty or compare_omega(p, s, schedule) is not Ordering.LESS
    if holds != by_suffix:
        raise RuntimeError("parity and suffix forms of the prefix condition disagree")
    return StarReport(prefix=p, parity=parity, holds=holds)


def galois_first_prefix(w: Word, ctx: GaloisContext) -> Word:
    """The shortest nontrivial prefix satisfying the parity condition.

    Computed from the factorization: with first factor g, multiplicity m
    and n factors in total, the answer is g squared when |g| is odd, m is
    even and m < n, and g itself otherwise.
    """
    _require_nonempty(w)
    f = factorize(w, ctx.schedule)
    g1 = f.factors[0]
    m = multiplicity(f)
    n = len(f.factors)
    if len(g1) % 2 == 1 and m % 2 == 0 and m < n:
        return g1 + g1
    return g1


def border_parity_witness(w: Word, ctx: GaloisContext) -> bool:
    """True unless w is a bordered Galois word of even length (none exist)."""
    _require_nonempty(w)
    if len(w) % 2 == 1:
        return True
    if not borders(w):
        return True
    return not is_galois(w, ctx)


# --- continued fractions ------------------------------------------------------

def integer_alphabet(k: int) -> Alphabet:
    """The alphabet with labels "1".."k", rank i-1 for label i."""
    if k < 1:
        raise ValueError("need at least one quotient value")
    return Alphabet(tuple(str(i) for i in range(1, k + 1)))


def natural_order(alphabet: Alphabet) -> PositionOrder:
    """The order that sorts integer labels by numeric value."""
    values = [int(lab) for lab in alphabet.labels]
    by_value = sorted(range(len(values)), key=lambda c: values[c])
    rank = [0] * len(values)
    for r, c in enumerate(by_value):
        rank[c] = r
    return PositionOrder(tuple(rank))


def natural_alternating_schedule(alphabet: Alphabet) -> AlternatingOrder:
    return AlternatingOrder(natural_order(alphabet))


def _quotients(w: Word) -> list[int]:
    out = []
    for c in w.letters:
        lab = w.alphabet.labels[c]
        try:
            q = int(lab)
        except ValueError:
            raise ValueError(f"label {lab!r} is not a positive integer quotient") from None
        if q < 1:
            raise ValueError(f"quotient {q} must be positive")
        out.append(q)
    return out


@dataclass(frozen=True)
class CfInterval:
    """An exact rational interval known to contain a continued-fraction value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


@dataclass(frozen=True)
class CfComparisonReport:
    """Result of a continued-fraction comparison with its witnessing data."""

    ordering: Ordering
    depth: int
    u_interval: CfInterval | None
    v_interval: CfInterval | None


class _ConvergentState:
    """Exact-integer convergent recurrence h_n = a_n h_{n-1} + h_{n-2}.

    Even-indexed convergents (0-based) approach the value from below,
    odd-indexed from above; an infinite continued fraction never equals a
    convergent, so after two steps the value lies strictly between the two
    most recent ones.
    """

    __slots__ = ("h2", "k2", "h1", "k1", "steps")

    def __init__(self):
        self.h2, self.k2 = 0, 1
        self.h1, self.k1 = 1, 0
        self.steps = 0

    def push(self, a: int) -> None:
        self.h2, self.h1 = self.h1, a * self.h1 + self.h2
        self.k2, self.k1 = self.k1, a * self.k1 + self.k2
        self.steps += 1

    def bounds(self) -> tuple[tuple[int, int], tuple[int, int]]:
        # (lo, hi) as integer pairs; needs steps >= 2
        cur, prev = (self.h1, self.k1), (self.h2, self.k2)
        return (cur, prev) if (self.steps - 1) % 2 == 0 else (prev, cur)

    def interval(self) -> CfInterval:
        (ln, ld), (hn, hd) = self.bounds()
        return CfInterval(Fraction(ln, ld), Fraction(hn, hd))


def _frac_le(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] * b[1] <= b[0] * a[1]


def cf_comparison_report(u: Word, v: Word) -> CfComparisonReport:
    """Compare the real values of the infinite continued fractions whose
    partial quotients are u^omega and v^omega.

    Equality is decided first from the quotient sequences themselves;
    otherwise nested convergent intervals are refined until they separate,
    which is guaranteed before the depth cap of 4(|u|+|v|)+16.
    """
    _require_nonempty(u, v)
    qu = _quotients(u)
    qv = _quotients(v)
    if comparison_position(u, v) is None:
        return CfComparisonReport(Ordering.EQUAL, 0, None, None)
    su, sv = _ConvergentState(), _ConvergentState()
    cap = 4 * (len(qu) + len(qv)) + 16
    for depth in range(1, cap + 1):
        su.push(qu[(depth - 1) % len(qu)])
        sv.push(qv[(depth - 1) % len(qv)])
        if depth < 2:
            continue
        ulo, uhi = su.bounds()
        vlo, vhi = sv.bounds()
        if _frac_le(uhi, vlo):
            return CfComparisonReport(Ordering.LESS, depth, su.interval(), sv.interval())
        if _frac_le(vhi, ulo):
            return CfComparisonReport(Ordering.GREATER, depth, su.interval(), sv.interval())
    raise RuntimeError("convergent refinement exceeded its depth cap")


def cf_compare(u: Word, v: Word) -> Ordering:
    """Order of the continued-fraction values spelled by u^omega and v^omega.

    Agrees with omega-power comparison under the alternating schedule over
    the natural order of the integer labels.
    """
    return cf_comparison_report(u, v).ordering
