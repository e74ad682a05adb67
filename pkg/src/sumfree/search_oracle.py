"""Brute-force ground truth for the constructions.

Exhaustive catalogs of symmetric complete sum-free sets for small moduli,
literal re-enumeration of the special offset windows, maximum sum-free sets
for small primes, and evidence reports comparing catalogs against the
dilation closure of the central-interval construction.  Everything here
favours obviousness over speed; the constructions are tested against it,
never the other way round.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from ._parallel import run_sharded
from ._primes import is_prime
from .errors import BudgetExceededError, DomainError
from .special_sets import (
    PredictedCount,
    SpecialEnumeration,
    enumerate_special,
    predicted_scsf_count,
)
from .st_family import STParameters, TCandidate, build_st
from .zn_core import (
    CyclicSet,
    canonical_dilation_class,
    classify,
    dilate,
    units,
)

__all__ = [
    "Catalog",
    "MaxSumFreeCatalog",
    "DilationClass",
    "ProbeReport",
    "exhaustive_scsf",
    "brute_special",
    "exhaustive_max_sum_free",
    "characterization_probe",
    "DEFAULT_SCSF_BUDGET",
    "DEFAULT_BRUTE_BUDGET",
    "DEFAULT_MAX_PRIME",
]

# 2^(n//2) symmetric candidates: n <= 44 by default
DEFAULT_SCSF_BUDGET = 1 << 22
# 4^t unpruned subsets: t <= 8 by default
DEFAULT_BRUTE_BUDGET = 1 << 16
DEFAULT_MAX_PRIME = 43


@dataclass(frozen=True)
class DilationClass:
    """One orbit of the unit-dilation action, named by its canonical form."""

    representative: CyclicSet
    orbit_size: int


def _group_into_classes(members: Tuple[CyclicSet, ...]) -> Tuple[DilationClass, ...]:
    buckets: Dict[int, List[CyclicSet]] = {}
    reps: Dict[int, CyclicSet] = {}
    for member in members:
        rep = canonical_dilation_class(member)
        buckets.setdefault(rep.bits, []).append(member)
        reps[rep.bits] = rep
    return tuple(
        DilationClass(reps[bits], len(bucket))
        for bits, bucket in sorted(buckets.items())
    )


@dataclass(frozen=True)
class Catalog:
    """Every symmetric complete sum-free subset of Z_n, in bit order."""

    n: int
    size_filter: Optional[int]
    members: Tuple[CyclicSet, ...]
    classes: Tuple[DilationClass, ...]


@dataclass(frozen=True)
class MaxSumFreeCatalog:
    """Every maximum-size sum-free subset of Z_p, in bit order.

    Unlike Catalog, members need not be symmetric or complete; the class
    decomposition is still by unit dilation.
    """

    p: int
    max_size: int
    members: Tuple[CyclicSet, ...]
    classes: Tuple[DilationClass, ...]


def _pair_orbits(n: int) -> List[int]:
    """Bit masks of the negation orbits {x, n-x}, smallest x first."""
    orbits = [(1 << x) | (1 << (n - x)) for x in range(1, (n + 1) // 2)]
    if n % 2 == 0 and n >= 2:
        orbits.append(1 << (n // 2))
    return orbits


def _rot(bits: int, r: int, n: int) -> int:
    return ((bits << r) | (bits >> (n - r))) & ((1 << n) - 1)


def _scsf_dfs(
    n: int,
    orbits: List[int],
    suffix: List[int],
    index: int,
    s_bits: int,
    ss_bits: int,
    size_filter: Optional[int],
    out: List[int],
) -> None:
    if size_filter is not None:
        size = s_bits.bit_count()
        if size > size_filter or size + suffix[index] < size_filter:
            return
    if index == len(orbits):
        if size_filter is not None and s_bits.bit_count() != size_filter:
            return
        if s_bits | ss_bits == (1 << n) - 1:
            out.append(s_bits)
        return
    orbit = orbits[index]
    # skip this orbit
    _scsf_dfs(n, orbits, suffix, index + 1, s_bits, ss_bits, size_filter, out)
    # take it; S and S+S only grow, so a sum-free violation is permanent
    new_s = s_bits | orbit
    new_ss = ss_bits
    for x in _orbit_shifts(orbit, n):
        new_ss |= _rot(new_s, x, n)
    if new_s & new_ss == 0:
        _scsf_dfs(n, orbits, suffix, index + 1, new_s, new_ss, size_filter, out)


def _orbit_shifts(orbit: int, n: int) -> Tuple[int, ...]:
    x = (orbit & -orbit).bit_length() - 1
    return (x,) if orbit == 1 << x else (x, n - x)


def _scsf_shard(
    n: int,
    orbits_prefix_len: int,
    prefix_choice: int,
    size_filter: Optional[int],
) -> List[int]:
    """Run the search with the first orbits fixed by the choice bitmap."""
    orbits = _pair_orbits(n)
    suffix = [0] * (len(orbits) + 1)
    for i in range(len(orbits) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + orbits[i].bit_count()
    s_bits, ss_bits = 0, 0
    for i in range(orbits_prefix_len):
        if not prefix_choice >> i & 1:
            continue
        s_bits |= orbits[i]
        for x in _orbit_shifts(orbits[i], n):
            ss_bits |= _rot(s_bits, x, n)
        if s_bits & ss_bits:
            return []
    out: List[int] = []
    _scsf_dfs(n, orbits, suffix, orbits_prefix_len, s_bits, ss_bits, size_filter, out)
    return out


def exhaustive_scsf(
    n: int,
    size_filter: Optional[int] = None,
    *,
    budget: Optional[int] = None,
    workers: int = 1,
) -> Catalog:
    """Enumerate all symmetric complete sum-free subsets of Z_n.

    Candidates are subsets of the negation orbits (0 is never sum-free),
    searched depth-first with the partial sumset carried along; sum-free
    failures prune, completeness is checked at the leaves.
    """
    if n < 1:
        raise DomainError(f"modulus must be positive, got {n}")
    cost = 1 << (n // 2)
    limit = DEFAULT_SCSF_BUDGET if budget is None else budget
    if cost > limit:
        raise BudgetExceededError(
            f"exhaustive search at n = {n} means {cost} symmetric candidates, "
            f"budget is {limit}",
            required=cost,
            limit=limit,
        )
    orbits = _pair_orbits(n)
    if workers <= 1 or len(orbits) < 4:
        found = _scsf_shard(n, 0, 0, size_filter)
    else:
        prefix = min(6, len(orbits))
        shards = [(n, prefix, choice, size_filter) for choice in range(1 << prefix)]
        found = []
        for part in run_sharded(_scsf_shard, shards, workers):
            found.extend(part)
    members = tuple(CyclicSet(n, bits) for bits in sorted(found))
    for member in members:
        props = classify(member)
        assert props.symmetric and props.sum_free and props.complete
    return Catalog(n, size_filter, members, _group_into_classes(members))


def brute_special(t: int, *, budget: Optional[int] = None) -> SpecialEnumeration:
    """Re-enumerate the special windows straight from the definition.

    Every subset of [0, 2t-1] is tested with plain set arithmetic: size t,
    no triple summing to 2t-1, and coverage of [0, 2t-1+min T] outside the
    mirror 2t-1-T by pair sums.  Quadratically slower than the bit-mask
    route, which is the point.
    """
    if t < 1:
        raise DomainError(f"t must be >= 1, got {t}")
    cost = 1 << (2 * t)
    limit = DEFAULT_BRUTE_BUDGET if budget is None else budget
    if cost > limit:
        raise BudgetExceededError(
            f"brute enumeration at t = {t} means {cost} subsets, budget is {limit}",
            required=cost,
            limit=limit,
        )
    width = 2 * t
    found = []
    for mask in range(1 << width):
        members = [i for i in range(width) if mask >> i & 1]
        if len(members) != t:
            continue
        triples = {a + b + c for a, b, c in product(members, repeat=3)}
        if 2 * t - 1 in triples:
            continue
        pair_sums = {a + b for a, b in product(members, repeat=2)}
        mirror = {2 * t - 1 - x for x in members}
        needed = range(2 * t + min(members))
        if all(v in pair_sums for v in needed if v not in mirror):
            found.append(TCandidate(t, mask))
    return SpecialEnumeration(t, tuple(found))


def _max_sum_free_extend(
    p: int,
    inv2: int,
    s_bits: int,
    neg_bits: int,
    size: int,
    allowed: int,
    best: List[int],
    out: List[Tuple[int, int]],
) -> None:
    if size + allowed.bit_count() < best[0]:
        return
    if allowed == 0:
        # no element can join, so every maximum set shows up exactly here
        if size > best[0]:
            best[0] = size
        out.append((size, s_bits))
        return
    rest = allowed
    while rest:
        low = rest & -rest
        x = low.bit_length() - 1
        rest ^= low
        new_s = s_bits | low
        new_neg = neg_bits | (1 << (p - x))
        forbidden = (
            _rot(new_s, x, p)
            | _rot(new_s, p - x, p)
            | _rot(new_neg, x, p)
            | (1 << (inv2 * x % p))
        )
        # only explore y > x to the right; smaller y belong to earlier branches
        _max_sum_free_extend(
            p, inv2, new_s, new_neg, size + 1, rest & ~forbidden, best, out
        )
        if size + rest.bit_count() < best[0]:
            return


def exhaustive_max_sum_free(
    p: int, *, budget: Optional[int] = None
) -> MaxSumFreeCatalog:
    """All maximum-size sum-free subsets of Z_p, p an odd prime.

    Depth-first over elements in increasing order, carrying the mask of
    elements that can still individually join; cardinality against the best
    size found so far prunes.  The budget is the largest prime accepted.
    """
    limit = DEFAULT_MAX_PRIME if budget is None else budget
    if not is_prime(p) or p == 2:
        raise DomainError(f"p must be an odd prime, got {p}")
    if p > limit:
        raise BudgetExceededError(
            f"exhaustive maximum-sum-free search accepts p <= {limit}, got {p}",
            required=p,
            limit=limit,
        )
    inv2 = pow(2, -1, p)
    best = [0]
    leaves: List[Tuple[int, int]] = []
    _max_sum_free_extend(p, inv2, 0, 0, 0, ((1 << p) - 1) & ~1, best, leaves)
    max_size = best[0]
    members = tuple(
        CyclicSet(p, bits) for size, bits in sorted(leaves) if size == max_size
    )
    return MaxSumFreeCatalog(p, max_size, members, _group_into_classes(members))


@dataclass(frozen=True)
class ProbeReport:
    """Desk-scale evidence about the dilation characterization at one (p, s).

    Compares the exhaustive catalog of symmetric complete sum-free sets of
    size s against all unit dilations of the central-interval construction
    over special windows.  Mismatches are data, not failures: the theorems
    compared against are asymptotic in p.
    """

    p: int
    s: int
    t: Optional[int]
    definition_valid: bool
    theorem_valid: bool
    special_count: int
    catalog_count: int
    construction_count: int
    matched_count: int
    catalog_only: Tuple[CyclicSet, ...]
    construction_only: Tuple[CyclicSet, ...]
    predicted: Optional[PredictedCount]

    @property
    def exact_match(self) -> bool:
        return not self.catalog_only and not self.construction_only


def characterization_probe(
    p: int,
    s: int,
    *,
    budget: Optional[int] = None,
    workers: int = 1,
) -> ProbeReport:
    """Catalog-versus-construction comparison for Z_p at size s."""
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    catalog = exhaustive_scsf(p, size_filter=s, budget=budget, workers=workers)
    catalog_bits = {member.bits for member in catalog.members}

    double_t = p - 3 * s + 1
    t = double_t // 2 if double_t > 0 and double_t % 2 == 0 else None
    construction_bits = set()
    special_count = 0
    definition_valid = theorem_valid = False
    predicted: Optional[PredictedCount] = None
    if t is not None and t >= 1:
        params = STParameters(p, s)
        definition_valid = params.definition_valid
        theorem_valid = params.theorem_valid
        specials = enumerate_special(t, budget=budget, workers=workers)
        special_count = specials.g
        if definition_valid:
            for T in specials.sets:
                base = build_st(params, T)
                for u in units(p):
                    construction_bits.add(dilate(base, u).bits)
        if p % 3 == 1 and t % 3 == 1 and t >= 4:
            predicted = predicted_scsf_count(p, (t - 1) // 3, budget=budget)
        elif p % 3 == 2 and t % 3 == 0:
            predicted = predicted_scsf_count(p, t // 3, budget=budget)

    matched = catalog_bits & construction_bits
    catalog_only = tuple(
        CyclicSet(p, bits) for bits in sorted(catalog_bits - construction_bits)
    )
    construction_only = tuple(
        CyclicSet(p, bits) for bits in sorted(construction_bits - catalog_bits)
    )
    return ProbeReport(
        p=p,
        s=s,
        t=t,
        definition_valid=definition_valid,
        theorem_valid=theorem_valid,
        special_count=special_count,
        catalog_count=len(catalog_bits),
        construction_count=len(construction_bits),
        matched_count=len(matched),
        catalog_only=catalog_only,
        construction_only=construction_only,
        predicted=predicted,
    )
