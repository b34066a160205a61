"""Constant-schedule (classical) specializations.

Under a constant order schedule the generalized Lyndon words are the usual
Lyndon words for that base order, and the factorization admits Duval's
linear-time algorithm.  Everything here takes the base order as data, so
"classical" means any fixed total order on the alphabet, not just the
naming order of the labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ConstantOrder,
    Ordering,
    PositionOrder,
    Word,
    _require_nonempty,
    compare_finite,
    compare_omega,
    is_primitive,
    rotations,
)
from .lyndon import Factorization, _mismatch_is_less

try:
    import numpy as _np
    from numba import njit as _njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

# Below this length the JIT call overhead outweighs the loop.
_NUMBA_THRESHOLD = 4096


@dataclass(frozen=True)
class ClassicalContext:
    """A fixed base order used at every position."""

    base: PositionOrder

    @property
    def schedule(self) -> ConstantOrder:
        return ConstantOrder(self.base)


def _rank_translation(base: PositionOrder) -> bytes:
    k = len(base.rank_of)
    return bytes(base.rank_of[c] if c < k else 0 for c in range(256))


def _duval_bounds_py(s: bytes) -> list[int]:
    # Duval's algorithm over rank bytes; emits factor end positions.
    n = len(s)
    out = []
    i = 0
    while i < n:
        j = i + 1
        k = i
        while j < n and s[k] <= s[j]:
            if s[k] < s[j]:
                k = i
            else:
                k += 1
            j += 1
        p = j - k
        while i <= k:
            i += p
            out.append(i)
    return out


if _HAVE_NUMBA:

    @_njit(cache=True)
    def _duval_bounds_nb(s, out):  # pragma: no cover - exercised via wrapper
        n = s.shape[0]
        cnt = 0
        i = 0
        while i < n:
            j = i + 1
            k = i
            while j < n and s[k] <= s[j]:
                if s[k] < s[j]:
                    k = i
                else:
                    k += 1
                j += 1
            p = j - k
            while i <= k:
                i += p
                out[cnt] = i
                cnt += 1
        return cnt


def _duval_bounds(s: bytes) -> list[int]:
    if _HAVE_NUMBA and len(s) >= _NUMBA_THRESHOLD:
        arr = _np.frombuffer(s, dtype=_np.uint8)
        out = _np.empty(len(s), dtype=_np.int64)
        cnt = _duval_bounds_nb(arr, out)
        return out[:cnt].tolist()
    return _duval_bounds_py(s)


def duval_factorize(w: Word, ctx: ClassicalContext) -> Factorization:
    """The nonincreasing Lyndon factorization in O(|w|) time.

    Produces the identical factor list to the generic factorizer under
    ``constant(base)``, by a completely different route.
    """
    ranks = w.letters.translate(_rank_translation(ctx.base))
    bounds = _duval_bounds(ranks)
    factors = []
    start = 0
    for end in bounds:
        factors.append(w[start:end])
        start = end
    return Factorization(word=w, schedule=ctx.schedule, factors=tuple(factors))


def is_lyndon_classical(w: Word, ctx: ClassicalContext) -> bool:
    """True when w is smaller than each of its nontrivial proper suffixes."""
    _require_nonempty(w)
    schedule = ctx.schedule
    for i in range(1, len(w)):
        if compare_finite(w, w[i:], schedule) is not Ordering.LESS:
            return False
    return True


def ufnarovskij_check(w: Word, ctx: ClassicalContext) -> bool:
    """Prefix criterion: p^omega < w^omega for every nontrivial split w = ps.

    Agrees with ``is_lyndon_classical`` on every word.
    """
    _require_nonempty(w)
    a = w.letters
    n = len(a)
    schedule = ctx.schedule
    for i in range(1, n):
        if not _mismatch_is_less(a, 0, i, a, 0, n, schedule):
            return False
    return True


def classical_first_prefix(w: Word, ctx: ClassicalContext) -> Word:
    """The shortest nontrivial prefix p of w = ps with s empty or
    p^omega >= s^omega; this is the first Lyndon factor of w."""
    _require_nonempty(w)
    schedule = ctx.schedule
    n = len(w)
    for i in range(1, n):
        if compare_omega(w[:i], w[i:], schedule) is not Ordering.LESS:
            return w[:i]
    return w


def bergman_chain_check(u: Word, v: Word, ctx: ClassicalContext) -> bool:
    """Verify u^omega < (uv)^omega < (vu)^omega < v^omega.

    Requires u^omega < v^omega; the chain must then hold under any
    constant schedule.
    """
    _require_nonempty(u, v)
    schedule = ctx.schedule
    if compare_omega(u, v, schedule) is not Ordering.LESS:
        raise ValueError("bergman_chain_check requires u^omega < v^omega")
    uv = u + v
    vu = v + u
    return (
        compare_omega(u, uv, schedule) is Ordering.LESS
        and compare_omega(uv, vu, schedule) is Ordering.LESS
        and compare_omega(vu, v, schedule) is Ordering.LESS
    )


def lyndon_conjugate(w: Word, ctx: ClassicalContext) -> Word:
    """The unique rotation of a primitive word that is a Lyndon word."""
    _require_nonempty(w)
    if not is_primitive(w):
        raise ValueError("lyndon_conjugate requires a primitive word")
    for r in rotations(w):
        if is_lyndon_classical(r, ctx):
            return r
    raise AssertionError("unreachable: every primitive word has a Lyndon conjugate")
