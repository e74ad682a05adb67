"""The central-interval construction S_T and its integer-side conditions.

For a modulus n and target size s with t = (n - 3s + 1) / 2 a positive
integer, every subset T of [0, 2t - 1] yields the symmetric set

    S_T = [n - 2s + 1, 2s - 1]  u  (s + T)  u  -(s + T)   (mod n).

Whether S_T is sum-free or complete reduces to plain integer conditions on
T; this module provides the construction, the two conditions, and an
exhaustive verifier that replays the reduction against the group-side
predicates for every candidate T.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from ._bits import iter_bits, reverse_mask
from ._parallel import run_sharded
from .errors import BudgetExceededError, DomainError, ParameterError
from .zn_core import CyclicSet, _negate_bits, _sumset_bits, interval

__all__ = [
    "STParameters",
    "TCandidate",
    "EquivalenceReport",
    "build_st",
    "st_sum_free_condition",
    "st_completeness_condition",
    "verify_st_equivalence",
    "DEFAULT_EQUIV_BUDGET",
]

# 4**t candidates; the default admits t <= 12
DEFAULT_EQUIV_BUDGET = 1 << 24


@dataclass(frozen=True)
class STParameters:
    """A (modulus, size) pair for which the offset window is well-defined."""

    n: int
    s: int

    def __post_init__(self):
        if self.n < 1 or self.s < 1:
            raise ParameterError(f"n and s must be positive, got n={self.n}, s={self.s}")
        if (self.n - 3 * self.s + 1) % 2 != 0:
            raise ParameterError(
                f"n - 3s + 1 = {self.n - 3 * self.s + 1} is odd; no integer offset window"
            )
        if self.n - 3 * self.s + 1 <= 0:
            raise ParameterError(
                f"n - 3s + 1 = {self.n - 3 * self.s + 1} <= 0; offset window is empty"
            )

    @property
    def t(self) -> int:
        return (self.n - 3 * self.s + 1) // 2

    @property
    def definition_valid(self) -> bool:
        """The construction itself is well-formed (n <= 4s - 3)."""
        return self.n <= 4 * self.s - 3

    @property
    def theorem_valid(self) -> bool:
        """The completeness reduction applies (n <= 7s/2 - 1)."""
        return 2 * self.n <= 7 * self.s - 2

    def require_definition_valid(self) -> None:
        if not self.definition_valid:
            raise ParameterError(
                f"n = {self.n} > 4s - 3 = {4 * self.s - 3}; construction undefined"
            )


@dataclass(frozen=True)
class TCandidate:
    """A plain integer subset of [0, 2t - 1], stored as a 2t-bit mask."""

    t: int
    mask: int

    def __post_init__(self):
        if self.t < 1:
            raise ParameterError(f"t must be >= 1, got {self.t}")
        if not 0 <= self.mask < (1 << (2 * self.t)):
            raise ParameterError(f"mask {self.mask} outside [0, 2t - 1] for t = {self.t}")

    @classmethod
    def from_members(cls, t: int, members: Iterable[int]) -> "TCandidate":
        mask = 0
        for x in members:
            if not 0 <= x < 2 * t:
                raise ParameterError(f"member {x} outside [0, {2 * t - 1}]")
            mask |= 1 << x
        return cls(t, mask)

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def min_member(self) -> int:
        if self.mask == 0:
            raise DomainError("empty candidate has no minimum")
        return (self.mask & -self.mask).bit_length() - 1


def _self_sumset_mask(mask: int) -> int:
    """T + T over the integers (repetition allowed), as a bit mask."""
    acc = 0
    m = mask
    while m:
        lsb = m & -m
        acc |= mask << (lsb.bit_length() - 1)
        m ^= lsb
    return acc


def _sum_free_condition_mask(mask: int, t: int) -> bool:
    # 2t - 1 in T+T+T  <=>  (T+T) meets the mirror of T within [0, 2t-1]
    return _self_sumset_mask(mask) & reverse_mask(mask, 2 * t) == 0


def _completeness_condition_mask(mask: int, t: int) -> bool:
    low = (mask & -mask).bit_length() - 1
    required = (1 << (2 * t + low)) - 1
    mirrored = reverse_mask(mask, 2 * t)
    return required & ~mirrored & ~_self_sumset_mask(mask) == 0


def st_sum_free_condition(T: TCandidate) -> bool:
    """True iff 2t - 1 is not a sum of three members (repetition allowed)."""
    return _sum_free_condition_mask(T.mask, T.t)


def st_completeness_condition(T: TCandidate) -> bool:
    """True iff [0, 2t - 1 + min T] minus (2t - 1 - T) is covered by T + T.

    Undefined for empty T, which has no minimum.
    """
    if T.mask == 0:
        raise DomainError("completeness condition is undefined for an empty candidate")
    return _completeness_condition_mask(T.mask, T.t)


def build_st(params: STParameters, T: TCandidate) -> CyclicSet:
    """Assemble S_T = central interval u (s + T) u -(s + T) in Z_n."""
    if T.t != params.t:
        raise ParameterError(f"candidate has t = {T.t}, parameters have t = {params.t}")
    params.require_definition_valid()
    n, s = params.n, params.s
    central = interval(n, n - 2 * s + 1, 2 * s - 1)
    right = T.mask << s  # s + (2t - 1) = n - 2s < n, so no wrap
    bits = central.bits | right | _negate_bits(right, n)
    result = CyclicSet(n, bits)
    # the three pieces are pairwise disjoint whenever the parameters are valid
    assert len(result) == 4 * s - n - 1 + 2 * T.size
    return result


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of replaying the T-side conditions against the group side."""

    n: int
    s: int
    t: int
    candidates: int
    special_count: int
    counterexamples: Tuple[Tuple[int, ...], ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _is_special_mask(mask: int, t: int) -> bool:
    return (
        mask.bit_count() == t
        and _sum_free_condition_mask(mask, t)
        and _completeness_condition_mask(mask, t)
    )


def _verify_chunk(n: int, s: int, lo: int, hi: int) -> Tuple[int, list]:
    params = STParameters(n, s)
    t = params.t
    central = interval(n, n - 2 * s + 1, 2 * s - 1).bits
    neg_bit = [1 << (n - s - i) for i in range(2 * t)]
    group_mask = (1 << n) - 1
    special_count = 0
    counterexamples = []
    for mask in range(lo, hi):
        special = _is_special_mask(mask, t)
        if special:
            special_count += 1
        bits = central | (mask << s)
        for i in iter_bits(mask):
            bits |= neg_bit[i]
        ss = _sumset_bits(bits, bits, n)
        group_side = (
            ss & bits == 0
            and (bits | ss) == group_mask
            and bits.bit_count() == s
        )
        if special != group_side:
            counterexamples.append(tuple(iter_bits(mask)))
    return special_count, counterexamples


def verify_st_equivalence(
    n: int,
    s: int,
    *,
    budget: Optional[int] = None,
    workers: int = 1,
) -> EquivalenceReport:
    """Check, for every T, that the integer conditions match the group predicates.

    Requires parameters in the range where the reduction is proven
    (theorem-valid), and walks all 4**t candidates.
    """
    params = STParameters(n, s)
    if not params.theorem_valid:
        raise ParameterError(
            f"(n, s) = ({n}, {s}) outside the proven range 2n <= 7s - 2"
        )
    params.require_definition_valid()
    t = params.t
    total = 1 << (2 * t)
    limit = DEFAULT_EQUIV_BUDGET if budget is None else budget
    if total > limit:
        raise BudgetExceededError(
            f"equivalence sweep needs {total} candidates, budget is {limit}",
            required=total,
            limit=limit,
        )
    shards = []
    chunk = max(1, total // max(workers, 1))
    lo = 0
    while lo < total:
        hi = min(total, lo + chunk)
        shards.append((n, s, lo, hi))
        lo = hi
    results = run_sharded(_verify_chunk, shards, workers)
    special_count = sum(r[0] for r in results)
    counterexamples: list = []
    for r in results:
        counterexamples.extend(r[1])
    return EquivalenceReport(
        n=n,
        s=s,
        t=t,
        candidates=total,
        special_count=special_count,
        counterexamples=tuple(sorted(counterexamples)),
    )
