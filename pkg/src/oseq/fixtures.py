"""Fixture records: labelled printed order sequences with classification tags.

File format, one record per line:

    <label> | <n> | (o,m)(o,m)... | tag,tag

Blank lines and ``#`` comments are skipped.  Every fixture must pass the
plausibility filter; a violation is a hard error so transcription slips
surface immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .order_sequence import SequenceError, is_plausible, parse_pairs
from .poset import Corpus, CorpusEntry

__all__ = ["Fixture", "FixtureError", "parse_fixture_lines", "load_fixtures",
           "default_fixtures", "fixtures_by_label", "corpus_for_order"]


class FixtureError(ValueError):
    """Malformed or implausible fixture data."""


@dataclass(frozen=True)
class Fixture:
    label: str
    n: int
    seq: object
    tags: frozenset

    def corpus_entry(self):
        return CorpusEntry(self.label, self.seq, self.tags)


def parse_fixture_lines(lines, source="<fixtures>"):
    records = []
    seen = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 4:
            raise FixtureError(f"{source}:{lineno}: expected 4 '|'-separated fields")
        label, n_text, pairs_text, tags_text = parts
        if not label:
            raise FixtureError(f"{source}:{lineno}: empty label")
        if label in seen:
            raise FixtureError(f"{source}:{lineno}: duplicate label {label!r}")
        seen.add(label)
        try:
            n = int(n_text)
        except ValueError:
            raise FixtureError(f"{source}:{lineno}: bad order {n_text!r}") from None
        try:
            seq = parse_pairs(pairs_text)
        except SequenceError as exc:
            raise FixtureError(f"{source}:{lineno}: {exc}") from None
        ok, reason = is_plausible(seq, n)
        if not ok:
            raise FixtureError(f"{source}:{lineno}: implausible sequence: {reason}")
        tags = frozenset(t.strip() for t in tags_text.split(",") if t.strip())
        records.append(Fixture(label, n, seq, tags))
    return records


def load_fixtures(path):
    with open(path, encoding="utf-8") as handle:
        return parse_fixture_lines(handle, source=str(path))


@lru_cache(maxsize=None)
def default_fixtures():
    text = resources.files("oseq").joinpath("data/fixtures.txt").read_text(encoding="utf-8")
    return tuple(parse_fixture_lines(text.splitlines(), source="data/fixtures.txt"))


def fixtures_by_label(fixtures):
    return {f.label: f for f in fixtures}


def corpus_for_order(fixtures, n):
    return Corpus(f.corpus_entry() for f in fixtures if f.n == n)
