"""Order sequences as run-length-encoded multisets, and their calculus.

A sequence is stored as ascending (order, multiplicity) pairs; the fully
expanded non-decreasing list exists only for tests and tiny corpora.
Canonical text form (used by fixtures, the cache, and the CLI, bit-exact):
``n=<total>; (o1,m1)(o2,m2)...``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from sympy import divisors, factorint, totient

__all__ = [
    "SequenceError",
    "OrderSequence",
    "Verdict",
    "os_of_group",
    "os_cyclic",
    "psi",
    "compare",
    "os_product",
    "is_plausible",
    "nilpotent_from_os",
    "format_sequence",
    "format_pairs",
    "parse_pairs",
    "parse_sequence",
]


class SequenceError(ValueError):
    """Malformed order sequence or undefined sequence operation."""


@dataclass(frozen=True)
class OrderSequence:
    """Ascending (order, multiplicity) pairs; multiplicities >= 1."""

    entries: tuple

    def __post_init__(self):
        last = 0
        for pair in self.entries:
            o, m = pair
            if o <= last:
                raise SequenceError("orders must be strictly increasing")
            if m < 1:
                raise SequenceError("multiplicities must be positive")
            last = o

    @property
    def total(self):
        return sum(m for _, m in self.entries)

    def expand(self):
        out = []
        for o, m in self.entries:
            out.extend([o] * m)
        return out

    def __str__(self):
        return format_sequence(self)


def _from_counts(counts):
    return OrderSequence(tuple(sorted((int(o), int(m)) for o, m in counts.items())))


def os_of_group(group):
    """Element orders of the whole table, run-length encoded."""
    return _from_counts(Counter(group.orders()))


def os_cyclic(n):
    """Closed form for the cyclic group: one entry (d, phi(d)) per divisor."""
    if n < 1:
        raise SequenceError("group order must be >= 1")
    return OrderSequence(tuple((d, int(totient(d))) for d in divisors(n)))


def psi(seq):
    """Sum of element orders."""
    return sum(o * m for o, m in seq.entries)


class Verdict(Enum):
    EQUAL = "Equal"
    PROPERLY_DOMINATES = "ProperlyDominates"
    PROPERLY_DOMINATED_BY = "ProperlyDominatedBy"
    INCOMPARABLE = "Incomparable"

    def mirror(self):
        if self is Verdict.PROPERLY_DOMINATES:
            return Verdict.PROPERLY_DOMINATED_BY
        if self is Verdict.PROPERLY_DOMINATED_BY:
            return Verdict.PROPERLY_DOMINATES
        return self


def compare(a, b):
    """Domination verdict via cumulative counting functions, no expansion.

    With F_s(t) = #{elements of order <= t}, sequence a dominates b exactly
    when F_a(t) <= F_b(t) at every breakpoint.
    """
    if a.total != b.total:
        raise SequenceError("sequences of different totals are not comparable")
    if a.entries == b.entries:
        return Verdict.EQUAL
    breaks = sorted({o for o, _ in a.entries} | {o for o, _ in b.entries})
    ea, eb = a.entries, b.entries
    fa = fb = 0
    ia = ib = 0
    a_low = b_low = True
    for t in breaks:
        while ia < len(ea) and ea[ia][0] <= t:
            fa += ea[ia][1]
            ia += 1
        while ib < len(eb) and eb[ib][0] <= t:
            fb += eb[ib][1]
            ib += 1
        if fa > fb:
            a_low = False
        if fb > fa:
            b_low = False
    if a_low and b_low:
        return Verdict.EQUAL
    if a_low:
        return Verdict.PROPERLY_DOMINATES
    if b_low:
        return Verdict.PROPERLY_DOMINATED_BY
    return Verdict.INCOMPARABLE


def os_product(a, b):
    """All pairwise order products, merged on equal values."""
    counts = Counter()
    for o1, m1 in a.entries:
        for o2, m2 in b.entries:
            counts[o1 * o2] += m1 * m2
    return _from_counts(counts)


def is_plausible(seq, n):
    """Necessary conditions for being the order sequence of a group of order n.

    Returns (ok, reason); reason names the first violated condition.
    """
    if seq.total != n:
        return False, f"total {seq.total} does not equal n={n}"
    if not seq.entries or seq.entries[0] != (1, 1):
        return False, "identity entry (1,1) missing or with multiplicity != 1"
    for o, _ in seq.entries:
        if n % o:
            return False, f"order {o} does not divide n={n}"
    for o, m in seq.entries:
        t = int(totient(o))
        if m % t:
            return False, f"phi({o})={t} does not divide multiplicity {m}"
    return True, None


def _is_prime_power_of(o, p):
    while o % p == 0:
        o //= p
    return o == 1


def nilpotent_from_os(seq):
    """Nilpotency decided from the sequence alone.

    For every prime p dividing n, the number of elements of p-power order
    must equal the largest power of p dividing n.
    """
    ok, reason = is_plausible(seq, seq.total)
    if not ok:
        raise SequenceError(f"implausible sequence: {reason}")
    n = seq.total
    for p, e in factorint(n).items():
        count = sum(m for o, m in seq.entries if _is_prime_power_of(o, p))
        if count != p**e:
            return False
    return True


# -- canonical text form ---------------------------------------------------

_PAIR_RE = re.compile(r"\((\d+),(\d+)\)")


def format_pairs(seq):
    return "".join(f"({o},{m})" for o, m in seq.entries)


def format_sequence(seq):
    return f"n={seq.total}; {format_pairs(seq)}"


def parse_pairs(text):
    compact = re.sub(r"\s+", "", text)
    if not re.fullmatch(r"(?:\(\d+,\d+\))+", compact):
        raise SequenceError(f"malformed sequence text: {text!r}")
    return OrderSequence(tuple((int(o), int(m)) for o, m in _PAIR_RE.findall(compact)))


def parse_sequence(text):
    m = re.fullmatch(r"n=(\d+);\s*(.*)", text.strip())
    if not m:
        raise SequenceError(f"malformed canonical sequence: {text!r}")
    seq = parse_pairs(m.group(2))
    if seq.total != int(m.group(1)):
        raise SequenceError(f"declared total {m.group(1)} does not match entries")
    return seq
