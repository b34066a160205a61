"""Brute-force reference implementations and the pinned regression corpus.

Everything here trades speed for obviousness: enumeration tests the
membership predicate on every word, factorizations are found by trying all
2^(n-1) cut sets, and the regression corpus re-executes the worked
examples and counterexamples that motivated the library.  Guards keep the
search spaces at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any

from .core import (
    Alphabet,
    GuardExceeded,
    Ordering,
    OrderSchedule,
    OrderSpecError,
    Word,
    borders,
    compare_finite,
    compare_omega,
    fractional_exponent,
    parse_order_spec,
    rotations,
)
from .lyndon import (
    Factorization,
    LyndonMethod,
    factorize,
    first_factor,
    is_generalized_lyndon,
    last_factor,
    verify_factorization,
)
from .classical import (
    ClassicalContext,
    classical_first_prefix,
    duval_factorize,
    is_lyndon_classical,
    lyndon_conjugate,
    ufnarovskij_check,
)
from .galois import GaloisContext, galois_first_prefix, is_galois, star_condition

DEFAULT_SEARCH_GUARD = 10**8
BRUTE_FORCE_MAX_LEN = 16


def _check_search_guard(k: int, depth: int, guard: int) -> None:
    if k**depth > guard:
        raise GuardExceeded(f"search space {k}^{depth} exceeds guard {guard}")


def _all_words(alphabet: Alphabet, length: int):
    for tup in product(range(alphabet.size), repeat=length):
        yield Word(alphabet, bytes(tup))


@dataclass(frozen=True)
class EnumerationReport:
    """All generalized Lyndon words up to a length, grouped by length."""

    order_spec: str
    alphabet: Alphabet
    max_len: int
    words_by_length: tuple[tuple[Word, ...], ...]

    @property
    def counts(self) -> list[int]:
        return [len(group) for group in self.words_by_length]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def words_of_length(self, n: int) -> tuple[Word, ...]:
        return self.words_by_length[n - 1]

    def all_words(self) -> list[Word]:
        return [w for group in self.words_by_length for w in group]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "order": self.order_spec,
            "alphabet": list(self.alphabet.labels),
            "max_len": self.max_len,
            "words": [[str(w) for w in group] for group in self.words_by_length],
            "counts": self.counts,
            "total": self.total,
        }

    @classmethod
    def from_json_dict(cls, data: dict[str, Any], sep: str | None = None) -> "EnumerationReport":
        alphabet = Alphabet(tuple(data["alphabet"]))
        groups = tuple(
            tuple(alphabet.word(t, sep) for t in group) for group in data["words"]
        )
        return cls(
            order_spec=data["order"],
            alphabet=alphabet,
            max_len=data["max_len"],
            words_by_length=groups,
        )


def enumerate_lyndon(
    schedule: OrderSchedule,
    alphabet: Alphabet,
    max_len: int,
    guard: int = DEFAULT_SEARCH_GUARD,
) -> EnumerationReport:
    """Every generalized Lyndon word of length <= max_len, by full search.

    Words are visited in length-then-rank order, so output is deterministic.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    _check_search_guard(alphabet.size, max_len, guard)
    groups = []
    for length in range(1, max_len + 1):
        groups.append(
            tuple(w for w in _all_words(alphabet, length) if is_generalized_lyndon(w, schedule))
        )
    try:
        spec = schedule.to_spec(alphabet)
    except OrderSpecError:
        spec = repr(schedule)
    return EnumerationReport(
        order_spec=spec,
        alphabet=alphabet,
        max_len=max_len,
        words_by_length=tuple(groups),
    )


def lyndon_prefixes_of_length(
    schedule: OrderSchedule,
    alphabet: Alphabet,
    n: int,
    extension_bound: int,
    guard: int = DEFAULT_SEARCH_GUARD,
) -> list[Word]:
    """Words of length n that prefix some generalized Lyndon word of length
    <= extension_bound.

    Bounded verification: whether a word prefixes *any* generalized Lyndon
    word is not decidable by finite search, so the extension bound is part
    of the answer's meaning.
    """
    if extension_bound < n:
        raise ValueError("extension_bound must be >= n")
    _check_search_guard(alphabet.size, extension_bound, guard)
    found: set[bytes] = set()
    for length in range(n, extension_bound + 1):
        for w in _all_words(alphabet, length):
            if w.letters[:n] in found:
                continue
            if is_generalized_lyndon(w, schedule):
                found.add(w.letters[:n])
    return [Word(alphabet, b) for b in sorted(found)]


@dataclass(frozen=True)
class CutFactorization:
    """One way of cutting a word into generalized Lyndon factors."""

    factors: tuple[Word, ...]
    nonincreasing: bool


def brute_force_factorizations(w: Word, schedule: OrderSchedule) -> list[CutFactorization]:
    """Every cut of w into generalized Lyndon factors, each tagged with
    whether consecutive omega-powers never increase.

    Exactly one entry per word is nonincreasing.
    """
    n = len(w)
    if n > BRUTE_FORCE_MAX_LEN:
        raise GuardExceeded(f"brute force factorization capped at length {BRUTE_FORCE_MAX_LEN}")
    if n == 0:
        return []
    lyndon_memo: dict[tuple[int, int], bool] = {}

    def seg_is_lyndon(i: int, j: int) -> bool:
        r = lyndon_memo.get((i, j))
        if r is None:
            r = is_generalized_lyndon(w[i:j], schedule)
            lyndon_memo[(i, j)] = r
        return r

    out = []
    for mask in range(1 << (n - 1)):
        cuts = [0]
        cuts.extend(t + 1 for t in range(n - 1) if mask >> t & 1)
        cuts.append(n)
        if not all(seg_is_lyndon(i, j) for i, j in zip(cuts, cuts[1:])):
            continue
        factors = tuple(w[i:j] for i, j in zip(cuts, cuts[1:]))
        noninc = all(
            compare_omega(x, y, schedule) is not Ordering.LESS
            for x, y in zip(factors, factors[1:])
        )
        out.append(CutFactorization(factors, noninc))
    return out


def _mobius(n: int) -> int:
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def witt_lyndon_count(k: int, n: int) -> int:
    """Number of classical Lyndon words of length n over k letters:
    (1/n) * sum over divisors d of n of mobius(d) * k^(n/d)."""
    total = sum(_mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)
    assert total % n == 0
    return total // n


# --- pinned regression corpus -------------------------------------------------

@dataclass(frozen=True)
class RegressionItem:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class RegressionReport:
    items: tuple[RegressionItem, ...]

    @property
    def all_passed(self) -> bool:
        return all(item.passed for item in self.items)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "all_passed": self.all_passed,
            "items": [
                {"name": i.name, "passed": i.passed, "detail": i.detail} for i in self.items
            ],
        }


def _chain(schedule: OrderSchedule, words: list[Word], rels: str) -> bool:
    """Check a chain like u < v = w of omega-power comparisons."""
    symbols = {"<": Ordering.LESS, "=": Ordering.EQUAL, ">": Ordering.GREATER}
    return all(
        compare_omega(u, v, schedule) is symbols[r] for u, v, r in zip(words, words[1:], rels)
    )


def run_regressions() -> RegressionReport:  # noqa: C901 - a flat checklist
    """Re-execute the pinned corpus of worked examples and counterexamples."""
    ab = Alphabet(("a", "b"))
    abc = Alphabet(("a", "b", "c"))
    primeflip, _ = parse_order_spec("primeflip:ab")
    lex_ab, _ = parse_order_spec("lex:ab")
    alt_ab, _ = parse_order_spec("alt:ab")
    lex_abc, _ = parse_order_spec("lex:abc")
    alt_abc, _ = parse_order_spec("alt:abc")
    W = ab.word
    W3 = abc.word

    items: list[RegressionItem] = []

    def add(name, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # a raising item is a failing item
            ok, detail = False, f"raised {exc!r}"
        items.append(RegressionItem(name, ok, detail))

    def primeflip_finite_chain():
        ws = ["aba", "abaaa", "aab", "bab", "baab"]
        ok = all(
            compare_finite(W(u), W(v), primeflip) is Ordering.LESS
            for u, v in zip(ws, ws[1:])
        )
        return ok, " < ".join(ws)

    add("primeflip-finite-order-chain", primeflip_finite_chain)

    add(
        "primeflip-omega-order-chain",
        lambda: (
            _chain(primeflip, [W("ab"), W("a"), W("b"), W("ba")], "<<<"),
            "(ab)^w < a^w < b^w < (ba)^w",
        ),
    )

    add(
        "primeflip-prefix-can-reverse-omega",
        lambda: (
            compare_finite(W("ab"), W("aba"), primeflip) is Ordering.LESS
            and compare_omega(W("aba"), W("ab"), primeflip) is Ordering.LESS,
            "ab < aba finitely, yet (aba)^w < (ab)^w",
        ),
    )

    def opposite_is_anti():
        anti, _ = parse_order_spec("anti:ab")
        flipped = lex_ab.opposite()
        ok = all(flipped.order_at(i) == anti.order_at(i) for i in range(1, 9))
        return ok, "reversing the constant a<b order gives b<a everywhere"

    add("opposite-of-lex-is-anti", opposite_is_anti)

    def opposite_reverses_chain():
        ws = [W("aba"), W("aab"), W("bab"), W("baa")]
        fwd = _chain(primeflip, ws, "<<<")
        bwd = _chain(primeflip.opposite(), list(reversed(ws)), "<<<")
        return fwd and bwd, "(aba)^w < (aab)^w < (bab)^w < (baa)^w, reversed under the opposite order"

    add("primeflip-opposite-reverses-chain", opposite_reverses_chain)

    def primeflip_rotation_chain():
        w = W("abba")
        ok = all(is_generalized_lyndon(w, primeflip, m) for m in LyndonMethod)
        ok = ok and _chain(primeflip, [W("abba"), W("aabb"), W("bbaa"), W("baab")], "<<<")
        return ok, "abba beats all of its rotations"

    add("primeflip-rotation-chain", primeflip_rotation_chain)

    add(
        "primeflip-split-comparisons",
        lambda: (
            _chain(primeflip, [W("abb"), W("a")], "<")
            and _chain(primeflip, [W("abba"), W("a")], "<"),
            "(abb)^w < a^w and (abba)^w < a^w",
        ),
    )

    def primeflip_factorization():
        f = factorize(W("aabaabaabb"), primeflip)
        ok = f.to_text() == "(a)(aba)(aba)(abb)"
        ok = ok and str(last_factor(W("aabaabaabb"), primeflip)) == "abb"
        ok = ok and str(first_factor(W("aabaabaabb"), primeflip)) == "a"
        return ok, f"aabaabaabb -> {f.to_text()}"

    add("primeflip-factorization", primeflip_factorization)

    def lex_prefix_chain():
        ctx = ClassicalContext(lex_ab.order_at(1))
        w = W("aabab")
        ok = is_lyndon_classical(w, ctx) and ufnarovskij_check(w, ctx)
        ok = ok and _chain(lex_ab, [W("a"), W("aa"), W("aaba"), W("aab"), w], "=<<<")
        return ok, "aabab: a^w = (aa)^w < (aaba)^w < (aab)^w < w^w"

    add("lex-prefix-chain-aabab", lex_prefix_chain)

    def lex_factorization():
        ctx = ClassicalContext(lex_ab.order_at(1))
        w = W("ababaab")
        f = factorize(w, lex_ab)
        ok = f.to_text() == "(ab)(ab)(aab)"
        ok = ok and duval_factorize(w, ctx).factors == f.factors
        ok = ok and _chain(lex_ab, [W("ab"), w, W("abaab")], ">>")
        ok = ok and _chain(lex_ab, [W("a"), w, W("babaab")], "<<")
        ok = ok and str(classical_first_prefix(w, ctx)) == "ab"
        return ok, f"ababaab -> {f.to_text()}, bounded by (ab)^w above and a^w below"

    add("lex-factorization-ababaab", lex_factorization)

    add(
        "alt-omega-order-chain",
        lambda: (
            _chain(alt_ab, [W("ab"), W("a"), W("b"), W("ba")], "<<<"),
            "(ab)^w < a^w < b^w < (ba)^w under the alternating order",
        ),
    )

    def alt_ternary_members():
        ctx = GaloisContext(alt_abc.order_at(1))
        members = ["b", "ac", "bc", "aba", "abb", "abaa", "acab"]
        ok = all(is_galois(W3(t), ctx) for t in members)
        return ok, "b, ac, bc, aba, abb, abaa, acab are all alternating-order Lyndon words"

    add("alt-ternary-galois-members", alt_ternary_members)

    def alt_parity_of_prepend():
        # A mismatch after an even-length common prefix keeps the base
        # direction; after an odd-length one it flips.
        ok = compare_finite(W("aba"), W("abb"), alt_ab) is Ordering.LESS
        ok = ok and compare_finite(W("ba"), W("bb"), alt_ab) is Ordering.GREATER
        ok = ok and compare_omega(W("a"), W("b"), alt_ab) is Ordering.LESS
        return ok, "appending after ab keeps a<b; after b it reverses"

    add("alt-parity-of-prepend", alt_parity_of_prepend)

    def alt_first_prefix_squared():
        ctx = GaloisContext(alt_ab.order_at(1))
        w = W("abbabbabaa")
        f = factorize(w, alt_ab)
        ok = f.to_text() == "(abb)(abb)(abaa)"
        ok = ok and compare_omega(W("abbabb"), w, alt_ab) is Ordering.GREATER
        p = galois_first_prefix(w, ctx)
        ok = ok and str(p) == "abbabb"
        ok = ok and star_condition(p, w, ctx).holds
        ok = ok and all(
            not star_condition(w[:i], w, ctx).holds for i in range(1, len(p))
        )
        return ok, f"abbabbabaa -> {f.to_text()}; shortest parity-condition prefix is (abb)^2"

    add("alt-first-prefix-squared", alt_first_prefix_squared)

    def alt_conjugate_missing_from_square():
        galois_ctx = GaloisContext(alt_ab.order_at(1))
        classical_ctx = ClassicalContext(lex_ab.order_at(1))
        w = W("baa")
        galois_rotations = [r for r in rotations(w) if is_galois(r, galois_ctx)]
        ok = [str(r) for r in galois_rotations] == ["aba"]
        f = factorize(W("baabaa"), alt_ab)
        ok = ok and f.to_text() == "(b)(a)(abaa)"
        ok = ok and W("aba") not in f.factors
        # the classical analogue does hold
        g = duval_factorize(W("baabaa"), classical_ctx)
        ok = ok and lyndon_conjugate(w, classical_ctx) in g.factors
        return ok, "baa's unique alternating-Lyndon rotation aba is not a factor of (baa)^2"

    add("alt-conjugate-missing-from-square", alt_conjugate_missing_from_square)

    def alt_leading_factor_not_prefix_maximal():
        f = factorize(W("abab"), alt_ab)
        ok = f.to_text() == "(ab)(ab)"
        ok = ok and compare_omega(W("a"), W("ab"), alt_ab) is Ordering.GREATER
        return ok, "abab = (ab)(ab) yet a^w > (ab)^w"

    add("alt-leading-factor-not-prefix-maximal", alt_leading_factor_not_prefix_maximal)

    def alt_longer_galois_prefix_exists():
        ctx = GaloisContext(alt_ab.order_at(1))
        ok = is_galois(W("aba"), ctx) and is_galois(W("ab"), ctx)
        ok = ok and first_factor(W("abab"), alt_ab) == W("ab")
        return ok, "aba is a longer alternating-Lyndon prefix of abab than the first factor ab"

    add("alt-longer-galois-prefix-exists", alt_longer_galois_prefix_exists)

    def alt_shorter_factorization_exists():
        w = W("ababab")
        f = factorize(w, alt_ab)
        ok = f.to_text() == "(ab)(ab)(ab)"
        cuts = brute_force_factorizations(w, alt_ab)
        shorter = [c for c in cuts if [str(x) for x in c.factors] == ["ababa", "b"]]
        ok = ok and len(shorter) == 1 and not shorter[0].nonincreasing
        ok = ok and verify_factorization(f)
        return ok, "(ababa)(b) also cuts ababab into alternating-Lyndon words, with fewer factors"

    add("alt-shorter-galois-factorization-exists", alt_shorter_factorization_exists)

    def counting_asymmetry():
        classical = enumerate_lyndon(lex_abc, abc, 2)
        ok = [str(w) for w in classical.all_words()] == ["a", "b", "c", "ab", "ac", "bc"]
        cpref = lyndon_prefixes_of_length(lex_abc, abc, 2, 6)
        ok = ok and [str(w) for w in cpref] == ["aa", "ab", "ac", "bb", "bc"]
        galois = enumerate_lyndon(alt_abc, abc, 2)
        ok = ok and [str(w) for w in galois.all_words()] == ["a", "b", "c", "ab", "ac", "bc"]
        gpref = lyndon_prefixes_of_length(alt_abc, abc, 2, 6)
        ok = ok and [str(w) for w in gpref] == ["ab", "ac", "bc"]
        ok = ok and classical.total == len(cpref) + 1 and galois.total != len(gpref) + 1
        return ok, "6 = 5 + 1 classically; 6 != 3 + 1 under the alternating order"

    add("counting-classical-vs-alternating", counting_asymmetry)

    def fractional_power_values():
        alph = Alphabet(tuple("abcdef"))
        u = alph.word("abcdef")
        r1 = fractional_exponent(alph.word("abcd"), u)
        r2 = fractional_exponent(alph.word("abcdefabcd"), u)
        ok = r1 is not None and str(r1) == "2/3" and not r1.strict
        ok = ok and r2 is not None and str(r2) == "5/3" and r2.strict
        return ok, "abcd = u^(2/3) and abcdefabcd = u^(5/3) for u = abcdef"

    add("fractional-power-values", fractional_power_values)

    def bordered_galois_words_are_odd():
        ctx = GaloisContext(alt_ab.order_at(1))
        ok = is_galois(W("aba"), ctx) and borders(W("aba")) == [1] and len(W("aba")) % 2 == 1
        return ok, "aba is a bordered alternating-Lyndon word of odd length"

    add("bordered-galois-words-are-odd", bordered_galois_words_are_odd)

    return RegressionReport(tuple(items))
