"""Words, alphabets, and position-dependent lexicographic orders.

A *generalized* lexicographic order assigns each position n >= 1 its own
total order on the alphabet; two words are compared by the order at the
position of their first mismatch.  Infinite words are represented
exclusively as omega-powers w^omega of finite nonempty words, which is
enough to decide every comparison this library needs: two distinct
omega-powers differ within the first |u| + |v| - gcd(|u|, |v|) positions
(Fine and Wilf), so all comparisons terminate.

Letters are integer ranks 0..k-1 under a fixed alphabet and are stored as
``bytes``, which gives O(1) letter access, cheap slicing, and C-speed
mismatch scanning for words up to the supported length of 2**20.
Positions are 1-based throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable, Sequence

MAX_WORD_LEN = 1 << 20
MAX_ALPHABET = 255


class OrderSpecError(ValueError):
    """Raised for a malformed order-spec string."""


class GuardExceeded(RuntimeError):
    """Raised when a configurable search-space or length guard trips."""


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def reverse(self) -> "Ordering":
        return Ordering(-self.value)

    @property
    def symbol(self) -> str:
        return {-1: "<", 0: "=", 1: ">"}[self.value]


@dataclass(frozen=True)
class Alphabet:
    """A finite ordered symbol set; letters are the ranks 0..k-1."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if not (1 <= len(self.labels) <= MAX_ALPHABET):
            raise ValueError(f"alphabet size must be 1..{MAX_ALPHABET}")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("alphabet labels must be pairwise distinct")

    @classmethod
    def from_labels(cls, labels: Iterable[str] | str) -> "Alphabet":
        return cls(tuple(labels))

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"letter {label!r} outside alphabet {''.join(self.labels)!r}") from None

    def word(self, text: str, sep: str | None = None) -> "Word":
        """Parse a label string into a Word.

        With ``sep=None`` every character is one label; otherwise the text is
        split on the separator (an empty text is the empty word either way).
        """
        if text == "":
            return Word(self, b"")
        parts = list(text) if sep is None else text.split(sep)
        return Word(self, bytes(self.index(p) for p in parts))

    def from_ranks(self, ranks: Iterable[int]) -> "Word":
        return Word(self, bytes(ranks))


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters over a fixed alphabet.

    The empty word is valid and acts as the identity for concatenation.
    """

    alphabet: Alphabet
    letters: bytes

    def __post_init__(self):
        if len(self.letters) > MAX_WORD_LEN:
            raise ValueError(f"word longer than supported maximum {MAX_WORD_LEN}")
        if self.letters and max(self.letters) >= self.alphabet.size:
            raise ValueError("letter rank outside alphabet")

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.alphabet, self.letters[i])
        return self.letters[i]

    def __add__(self, other: "Word") -> "Word":
        _check_same_alphabet(self, other)
        return Word(self.alphabet, self.letters + other.letters)

    def __mul__(self, e: int) -> "Word":
        return Word(self.alphabet, self.letters * e)

    def __str__(self) -> str:
        return self.text()

    def text(self, sep: str = "") -> str:
        return sep.join(self.alphabet.labels[c] for c in self.letters)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def rotation(self, i: int) -> "Word":
        """The cyclic rotation vu of w = uv with |u| = i."""
        i %= max(len(self.letters), 1)
        return Word(self.alphabet, self.letters[i:] + self.letters[:i])

    def prefix(self, n: int) -> "Word":
        return Word(self.alphabet, self.letters[:n])

    def suffix(self, n: int) -> "Word":
        """The suffix of length n."""
        return Word(self.alphabet, self.letters[len(self.letters) - n:])


def _check_same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise ValueError("words are over different alphabets")


def _require_nonempty(*words: Word) -> None:
    for w in words:
        if not w.letters:
            raise ValueError("word must be nonempty")


@dataclass(frozen=True)
class PositionOrder:
    """One total order on the alphabet: rank_of[letter] = rank, 0 smallest."""

    rank_of: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.rank_of) != list(range(len(self.rank_of))):
            raise ValueError("rank_of must be a permutation of 0..k-1")

    @classmethod
    def identity(cls, k: int) -> "PositionOrder":
        return cls(tuple(range(k)))

    @classmethod
    def from_labels(cls, alphabet: Alphabet, labels: Sequence[str]) -> "PositionOrder":
        """Order in which ``labels[0]`` is smallest, ``labels[1]`` next, ..."""
        if sorted(labels) != sorted(alphabet.labels):
            raise OrderSpecError(
                f"order {''.join(labels)!r} is not a permutation of alphabet {''.join(alphabet.labels)!r}"
            )
        rank = [0] * alphabet.size
        for r, lab in enumerate(labels):
            rank[alphabet.index(lab)] = r
        return cls(tuple(rank))

    def reversed(self) -> "PositionOrder":
        k = len(self.rank_of)
        return PositionOrder(tuple(k - 1 - r for r in self.rank_of))

    def less(self, a: int, b: int) -> bool:
        return self.rank_of[a] < self.rank_of[b]

    def sorted_letters(self) -> list[int]:
        """Letters from smallest to largest under this order."""
        return sorted(range(len(self.rank_of)), key=lambda c: self.rank_of[c])

    def labels_in_order(self, alphabet: Alphabet) -> str:
        return "".join(alphabet.labels[c] for c in self.sorted_letters())


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class OrderSchedule:
    """A position-indexed family of total orders on the alphabet.

    ``order_at(n)`` must be deterministic for every position n >= 1;
    ``opposite()`` reverses the order at every position.  All realizations
    are immutable and safe to share between threads.
    """

    def order_at(self, n: int) -> PositionOrder:
        raise NotImplementedError

    def opposite(self) -> "OrderSchedule":
        raise NotImplementedError

    def to_spec(self, alphabet: Alphabet) -> str:
        """The order-spec string for this schedule (see ``parse_order_spec``)."""
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantOrder(OrderSchedule):
    """The same order at every position (the classical case)."""

    base: PositionOrder

    def order_at(self, n: int) -> PositionOrder:
        return self.base

    def opposite(self) -> "ConstantOrder":
        return ConstantOrder(self.base.reversed())

    def to_spec(self, alphabet: Alphabet) -> str:
        return "lex:" + self.base.labels_in_order(alphabet)


@dataclass(frozen=True)
class AlternatingOrder(OrderSchedule):
    """Base order at odd positions, reversed base at even positions."""

    base: PositionOrder
    _flipped: PositionOrder = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_flipped", self.base.reversed())

    def order_at(self, n: int) -> PositionOrder:
        return self.base if n % 2 == 1 else self._flipped

    def opposite(self) -> "AlternatingOrder":
        return AlternatingOrder(self.base.reversed())

    def to_spec(self, alphabet: Alphabet) -> str:
        return "alt:" + self.base.labels_in_order(alphabet)


@dataclass(frozen=True)
class EventuallyPeriodicOrder(OrderSchedule):
    """An explicit preperiod of orders followed by a repeating period."""

    preperiod: tuple[PositionOrder, ...]
    period: tuple[PositionOrder, ...]

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")

    def order_at(self, n: int) -> PositionOrder:
        if n < 1:
            raise ValueError("positions are 1-based")
        if n <= len(self.preperiod):
            return self.preperiod[n - 1]
        return self.period[(n - len(self.preperiod) - 1) % len(self.period)]

    def opposite(self) -> "EventuallyPeriodicOrder":
        return EventuallyPeriodicOrder(
            tuple(p.reversed() for p in self.preperiod),
            tuple(p.reversed() for p in self.period),
        )

    def to_spec(self, alphabet: Alphabet) -> str:
        pre = ",".join(p.labels_in_order(alphabet) for p in self.preperiod)
        per = ",".join(p.labels_in_order(alphabet) for p in self.period)
        return f"periodic:{''.join(alphabet.labels)};{pre}|{per}"


@dataclass(frozen=True)
class PredicateFlipOrder(OrderSchedule):
    """Reversed base exactly at the positions satisfying a predicate.

    The predicate must be deterministic and reentrant.  Only the built-in
    primality flip has an order-spec form; ad-hoc predicates cannot be
    serialized.
    """

    base: PositionOrder
    predicate: Callable[[int], bool]
    name: str | None = None
    _flipped: PositionOrder = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_flipped", self.base.reversed())

    def order_at(self, n: int) -> PositionOrder:
        return self._flipped if self.predicate(n) else self.base

    def opposite(self) -> "PredicateFlipOrder":
        return PredicateFlipOrder(self.base.reversed(), self.predicate, self.name)

    def to_spec(self, alphabet: Alphabet) -> str:
        if self.name != "primeflip":
            raise OrderSpecError("custom predicate schedules have no spec form")
        return "primeflip:" + self.base.labels_in_order(alphabet)


def prime_flip(base: PositionOrder) -> PredicateFlipOrder:
    """The order that reverses ``base`` exactly at prime positions."""
    return PredicateFlipOrder(base, _is_prime, name="primeflip")


def order_at(schedule: OrderSchedule, n: int) -> PositionOrder:
    """The total order used at position n (1-based)."""
    if n < 1:
        raise ValueError("positions are 1-based")
    return schedule.order_at(n)


def opposite(schedule: OrderSchedule) -> OrderSchedule:
    return schedule.opposite()


# --- order-spec grammar -----------------------------------------------------
#
#   lex:<labels>        constant; label sequence is the order
#   anti:<labels>       constant; reverse of the label sequence
#   alt:<labels>        alternating; label sequence at odd positions
#   primeflip:<labels>  label sequence everywhere except prime positions
#   periodic:<labels>;<perm>,...|<perm>,...
#                       preperiod before '|', repeating period after;
#                       perms are label sequences over <labels>
#
# When no alphabet is supplied, the <labels> part also fixes the alphabet
# (in the listed order).  With an explicit alphabet the labels only name
# the order and must be a permutation of the alphabet.

def parse_order_spec(spec: str, alphabet: Alphabet | None = None) -> tuple[OrderSchedule, Alphabet]:
    kind, _, rest = spec.partition(":")
    if not rest:
        raise OrderSpecError(f"malformed order spec {spec!r}")

    if kind == "periodic":
        labels_part, _, tail = rest.partition(";")
        if alphabet is None:
            alphabet = Alphabet.from_labels(labels_part)
        pre_part, bar, per_part = tail.partition("|")
        if not bar:
            raise OrderSpecError("periodic spec needs '<preperiod>|<period>'")
        pre = tuple(
            PositionOrder.from_labels(alphabet, p) for p in pre_part.split(",") if p
        )
        per = tuple(
            PositionOrder.from_labels(alphabet, p) for p in per_part.split(",") if p
        )
        if not per:
            raise OrderSpecError("periodic spec needs a nonempty period")
        return EventuallyPeriodicOrder(pre, per), alphabet

    if alphabet is None:
        alphabet = Alphabet.from_labels(rest)
    base = PositionOrder.from_labels(alphabet, rest)
    if kind == "lex":
        return ConstantOrder(base), alphabet
    if kind == "anti":
        return ConstantOrder(base.reversed()), alphabet
    if kind == "alt":
        return AlternatingOrder(base), alphabet
    if kind == "primeflip":
        return prime_flip(base), alphabet
    raise OrderSpecError(f"unknown order kind {kind!r}")


# --- omega-power machinery ---------------------------------------------------

def _periodic_window(buf: bytes, start: int, plen: int, p: int, q: int) -> bytes:
    """Positions [p, q) of (buf[start:start+plen])^omega, as bytes."""
    if q <= plen:
        return buf[start + p : start + q]
    block = buf[start : start + plen]
    return (block * (q // plen + 1))[p:q]


def _omega_mismatch(ba: bytes, ia: int, la: int, bb: bytes, ib: int, lb: int) -> int:
    """First position (0-based) where the omega-powers of two buffer
    suffixes differ, or -1 if they are equal.

    Scans in growing windows so the common short-circuit case costs O(1)
    extra memory; never looks past the Fine-Wilf bound la+lb-gcd(la,lb).
    """
    limit = la + lb - gcd(la, lb)
    pos, win = 0, 64
    while pos < limit:
        end = min(pos + win, limit)
        xa = _periodic_window(ba, ia, la, pos, end)
        xb = _periodic_window(bb, ib, lb, pos, end)
        if xa != xb:
            for t in range(len(xa)):
                if xa[t] != xb[t]:
                    return pos + t
        pos = end
        win = min(win * 2, 8192)
    return -1


def compare_finite(u: Word, v: Word, schedule: OrderSchedule) -> Ordering:
    """Compare two finite words under a generalized lexicographic order.

    A proper prefix is smaller; otherwise the order at the first mismatch
    position decides.
    """
    _check_same_alphabet(u, v)
    a, b = u.letters, v.letters
    if a == b:
        return Ordering.EQUAL
    n = min(len(a), len(b))
    if a[:n] == b[:n]:
        return Ordering.LESS if len(a) < len(b) else Ordering.GREATER
    m = next(t for t in range(n) if a[t] != b[t])
    order = schedule.order_at(m + 1)
    return Ordering.LESS if order.rank_of[a[m]] < order.rank_of[b[m]] else Ordering.GREATER


def compare_omega(u: Word, v: Word, schedule: OrderSchedule) -> Ordering:
    """Compare u^omega and v^omega under a generalized lexicographic order.

    Equal exactly when u and v are powers of a common word; otherwise the
    first mismatch lies within |u|+|v|-gcd(|u|,|v|) positions and the order
    there decides.
    """
    _check_same_alphabet(u, v)
    _require_nonempty(u, v)
    a, b = u.letters, v.letters
    m = _omega_mismatch(a, 0, len(a), b, 0, len(b))
    if m < 0:
        return Ordering.EQUAL
    order = schedule.order_at(m + 1)
    ca = a[m % len(a)]
    cb = b[m % len(b)]
    return Ordering.LESS if order.rank_of[ca] < order.rank_of[cb] else Ordering.GREATER


def comparison_position(u: Word, v: Word) -> int | None:
    """1-based position of the first difference between u^omega and v^omega,
    or None when the two omega-powers coincide.

    The position never depends on any order schedule, and never exceeds
    |u|+|v|-gcd(|u|,|v|).
    """
    _check_same_alphabet(u, v)
    _require_nonempty(u, v)
    a, b = u.letters, v.letters
    m = _omega_mismatch(a, 0, len(a), b, 0, len(b))
    return None if m < 0 else m + 1


@dataclass(frozen=True)
class FractionalExponent:
    """An exponent r = k + num/den with 0 <= num < den, in lowest terms."""

    k: int
    num: int
    den: int

    @property
    def value(self) -> Fraction:
        return self.k + Fraction(self.num, self.den)

    @property
    def strict(self) -> bool:
        """Whether r >= 1, i.e. the base word is a prefix of the power."""
        return self.k >= 1

    def __str__(self) -> str:
        f = self.value
        return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def fractional_exponent(v: Word, u: Word) -> FractionalExponent | None:
    """The r with v = u^r, when v is a prefix of u^omega; None otherwise."""
    _check_same_alphabet(u, v)
    _require_nonempty(u)
    a, b = u.letters, v.letters
    lu, lv = len(a), len(b)
    if lv <= lu:
        if a[:lv] != b:
            return None
    elif _periodic_window(a, 0, lu, 0, lv) != b:
        return None
    rem = Fraction(lv % lu, lu)
    return FractionalExponent(lv // lu, rem.numerator, rem.denominator)


def is_fractional_power(v: Word, u: Word) -> bool:
    return fractional_exponent(v, u) is not None


def _failure_table(a: bytes) -> list[int]:
    pi = [0] * len(a)
    k = 0
    for i in range(1, len(a)):
        while k and a[i] != a[k]:
            k = pi[k - 1]
        if a[i] == a[k]:
            k += 1
        pi[i] = k
    return pi


def borders(w: Word) -> list[int]:
    """All border lengths of w, increasing; empty means unbordered.

    A border is simultaneously a nontrivial proper prefix and suffix.
    """
    a = w.letters
    if len(a) < 2:
        return []
    pi = _failure_table(a)
    out = []
    b = pi[-1]
    while b > 0:
        out.append(b)
        b = pi[b - 1]
    out.reverse()
    return out


def has_nontrivial_period(w: Word) -> bool:
    """Whether some 0 < p < |w| satisfies w[i] = w[i+p] for all valid i."""
    return bool(borders(w))


def primitive_root(w: Word) -> tuple[Word, int]:
    """The shortest x and maximal e with w = x^e; w is primitive iff e = 1."""
    _require_nonempty(w)
    a = w.letters
    n = len(a)
    p = n - _failure_table(a)[-1]
    if n % p:
        return w, 1
    return Word(w.alphabet, a[:p]), n // p


def is_primitive(w: Word) -> bool:
    return primitive_root(w)[1] == 1


def rotations(w: Word) -> list[Word]:
    """All |w| cyclic rotations vu of w = uv, in rotation-index order."""
    return [w.rotation(i) for i in range(len(w))]
