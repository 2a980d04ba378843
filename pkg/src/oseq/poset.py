"""Domination posets over labelled corpora of order sequences of one total."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .order_sequence import SequenceError, Verdict, compare

__all__ = [
    "CorpusEntry",
    "Corpus",
    "PosetResult",
    "build_poset",
    "domination_pairs",
    "to_dot",
    "to_csv",
]


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    seq: object
    tags: frozenset = field(default_factory=frozenset)


class Corpus:
    """Labelled sequences sharing one total; labels are unique."""

    def __init__(self, entries):
        entries = tuple(entries)
        labels = [e.label for e in entries]
        if len(set(labels)) != len(labels):
            raise SequenceError("corpus labels must be unique")
        totals = {e.seq.total for e in entries}
        if len(totals) > 1:
            raise SequenceError(f"corpus mixes totals {sorted(totals)}")
        self.entries = entries
        self.n = totals.pop() if totals else None

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class PosetResult:
    labels: tuple
    verdicts: tuple  # verdicts[i][j] = compare(seq_i, seq_j), four-valued
    hasse: tuple  # covering pairs (dominator, dominated)
    minimal: frozenset
    maximal: frozenset


def build_poset(corpus):
    """All-pairs verdict matrix, Hasse reduction, and the extreme elements.

    A label is minimal when it properly dominates nothing, maximal when
    nothing properly dominates it.
    """
    labels = tuple(e.label for e in corpus)
    seqs = [e.seq for e in corpus]
    k = len(labels)
    verdicts = [[Verdict.EQUAL] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j:
                verdicts[i][j] = compare(seqs[i], seqs[j])
    above = {
        (i, j)
        for i in range(k)
        for j in range(k)
        if verdicts[i][j] is Verdict.PROPERLY_DOMINATES
    }
    hasse = tuple(
        (labels[i], labels[j])
        for i, j in sorted(above)
        if not any((i, t) in above and (t, j) in above for t in range(k))
    )
    minimal = frozenset(labels[i] for i in range(k) if not any((i, j) in above for j in range(k)))
    maximal = frozenset(labels[j] for j in range(k) if not any((i, j) in above for i in range(k)))
    return PosetResult(labels, tuple(tuple(row) for row in verdicts), hasse, minimal, maximal)


def _as_predicate(spec):
    if spec is None:
        return lambda tags: True
    if callable(spec):
        return spec
    return lambda tags, _want=spec: _want in tags


def domination_pairs(corpus, dominator=None, dominated=None):
    """Ordered (dominator, dominated) label pairs, filtered by tag predicates."""
    dom_pred = _as_predicate(dominator)
    sub_pred = _as_predicate(dominated)
    out = []
    entries = list(corpus)
    for a in entries:
        if not dom_pred(a.tags):
            continue
        for b in entries:
            if a.label == b.label or not sub_pred(b.tags):
                continue
            if compare(a.seq, b.seq) is Verdict.PROPERLY_DOMINATES:
                out.append((a.label, b.label))
    return out


def to_dot(result):
    """Hasse diagram; edges run from dominated up to dominator."""
    lines = ["digraph domination {"]
    for label in result.labels:
        lines.append(f'  "{label}";')
    for dominator, dominated in result.hasse:
        lines.append(f'  "{dominated}" -> "{dominator}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(result):
    """Four-valued relation matrix, one row per label."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", *result.labels])
    for label, row in zip(result.labels, result.verdicts):
        writer.writerow([label, *(v.value for v in row)])
    return buf.getvalue()
