"""Nilpotency, supersolvability, and solvability of enumerated groups."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from sympy import factorint, isprime

from .groups import (
    QUOTIENT_THRESHOLD,
    Group,
    GroupError,
    SubgroupSet,
    derived_subgroup,
    is_normal,
    quotient,
)

__all__ = [
    "ClassificationReport",
    "classify_group",
    "derived_series",
    "is_nilpotent",
    "is_solvable",
    "is_supersolvable",
    "supersolvable_chain",
    "prime_order_normal_subgroups",
]


def _is_prime_power_of(o, p):
    while o % p == 0:
        o //= p
    return o == 1


def is_nilpotent(group):
    """Element-counting criterion: for each p | n the number of elements of
    p-power order must equal the p-part of n (all Sylow subgroups normal)."""
    n = len(group)
    counts = Counter(group.orders())
    for p, e in factorint(n).items():
        have = sum(m for o, m in counts.items() if _is_prime_power_of(o, p))
        if have != p**e:
            return False
    return True


def derived_series(group):
    """Iterated commutator subgroups until the series stabilises."""
    series = [SubgroupSet(group, tuple(range(len(group))))]
    while len(series[-1]) > 1:
        nxt = derived_subgroup(group, series[-1].members)
        if len(nxt) == len(series[-1]):
            break
        series.append(nxt)
    return series


def is_solvable(group):
    return len(derived_series(group)[-1]) == 1


def _cyclic_members(group, i):
    out = [0]
    x = i
    while x != 0:
        out.append(x)
        x = group.mul(x, i)
    return frozenset(out)


def prime_order_normal_subgroups(group):
    """All distinct normal subgroups of prime order, in index order."""
    seen = set()
    found = []
    for i in range(1, len(group)):
        if isprime(group.order_of(i)):
            members = _cyclic_members(group, i)
            if members in seen:
                continue
            seen.add(members)
            sub = SubgroupSet(group, tuple(sorted(members)))
            if is_normal(group, sub):
                found.append(sub)
    return found


def supersolvable_chain(group):
    """Primes consumed along a chain of prime-order normal subgroups, or None.

    A group is supersolvable exactly when it is trivial or has a normal
    subgroup of prime order with supersolvable quotient; the search
    backtracks over all candidates and memoises quotients by their
    structural fingerprint.
    """
    if len(group) > QUOTIENT_THRESHOLD:
        raise GroupError(f"group order {len(group)} exceeds threshold {QUOTIENT_THRESHOLD}")
    memo = {}

    def rec(g):
        if len(g) == 1:
            return ()
        fp = g.fingerprint()
        if fp in memo:
            return memo[fp]
        result = None
        for sub in prime_order_normal_subgroups(g):
            tail = rec(quotient(g, sub))
            if tail is not None:
                result = (len(sub),) + tail
                break
        memo[fp] = result
        return result

    return rec(group)


def is_supersolvable(group):
    return supersolvable_chain(group) is not None


@dataclass(frozen=True)
class ClassificationReport:
    order: int
    nilpotent: bool
    supersolvable: bool
    solvable: bool
    chain: tuple | None  # primes of the supersolvable witness chain
    derived_orders: tuple  # subgroup sizes along the derived series

    def __post_init__(self):
        if self.nilpotent and not self.supersolvable:
            raise GroupError("inconsistent report: nilpotent but not supersolvable")
        if self.supersolvable and not self.solvable:
            raise GroupError("inconsistent report: supersolvable but not solvable")


def classify_group(group):
    chain = supersolvable_chain(group)
    series = derived_series(group)
    return ClassificationReport(
        order=len(group),
        nilpotent=is_nilpotent(group),
        supersolvable=chain is not None,
        solvable=len(series[-1]) == 1,
        chain=chain,
        derived_orders=tuple(len(s) for s in series),
    )
