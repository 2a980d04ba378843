import pytest

from oseq.fixtures import default_fixtures, corpus_for_order
from oseq.order_sequence import SequenceError, Verdict, os_of_group
from oseq.poset import Corpus, CorpusEntry, build_poset, domination_pairs, to_csv, to_dot
from oseq.verify import order12_corpus_groups


def _order12_corpus():
    entries = []
    for label, group in order12_corpus_groups():
        tags = frozenset({"nilpotent"} if label in ("C12", "C2xC6") else {"nonnilpotent"})
        entries.append(CorpusEntry(label, os_of_group(group), tags))
    return Corpus(entries)


def test_order12_poset():
    result = build_poset(_order12_corpus())
    assert "A4" in result.minimal
    assert "C12" not in result.minimal and "C2xC6" not in result.minimal
    assert result.maximal == {"C12"}
    assert result.minimal == {"A4", "D12"}


def test_hasse_transitive_closure_reproduces_relation():
    corpus = _order12_corpus()
    result = build_poset(corpus)
    labels = result.labels
    strict = {(labels[i], labels[j])
              for i in range(len(labels)) for j in range(len(labels))
              if result.verdicts[i][j] is Verdict.PROPERLY_DOMINATES}
    closure = set(result.hasse)
    changed = True
    while changed:
        changed = False
        for a, b in list(closure):
            for c, d in list(closure):
                if b == c and (a, d) not in closure:
                    closure.add((a, d))
                    changed = True
    assert closure == strict


def test_singleton_corpus():
    corpus = Corpus([CorpusEntry("only", os_of_group(order12_corpus_groups()[0][1]))])
    result = build_poset(corpus)
    assert result.minimal == {"only"} == result.maximal
    assert result.hasse == ()


def test_empty_corpus():
    corpus = Corpus([])
    assert domination_pairs(corpus) == []


def test_corpus_validation():
    entries = [CorpusEntry("a", os_of_group(order12_corpus_groups()[0][1])),
               CorpusEntry("b", os_of_group(order12_corpus_groups()[0][1]))]
    Corpus(entries)  # same total is fine
    with pytest.raises(SequenceError):
        Corpus([CorpusEntry("a", os_of_group(order12_corpus_groups()[0][1])),
                CorpusEntry("a", os_of_group(order12_corpus_groups()[1][1]))])


def test_order300_fixture_pair():
    fixtures = default_fixtures()
    corpus = corpus_for_order(fixtures, 300)
    result = build_poset(corpus)
    assert result.minimal == {"SG300_23"}
    assert result.maximal == {"SG300_22"}


def test_order900_domination_pairs():
    corpus = corpus_for_order(default_fixtures(), 900)
    pairs = domination_pairs(corpus, dominator="nonsolvable", dominated="solvable")
    assert len(pairs) == 14
    assert all(top == "SG900_88" for top, _ in pairs)


def test_order72_fixture_pairs_are_equal_only():
    corpus = corpus_for_order(default_fixtures(), 72)
    assert domination_pairs(corpus) == []
    result = build_poset(corpus)
    assert result.verdicts[0][1] is Verdict.EQUAL


def test_domination_pairs_with_callable_filter():
    corpus = _order12_corpus()
    pairs = domination_pairs(corpus, dominator=lambda tags: "nilpotent" in tags)
    assert ("C12", "A4") in pairs and ("C2xC6", "A4") in pairs
    assert all(top in ("C12", "C2xC6") for top, _ in pairs)


def test_dot_output():
    result = build_poset(_order12_corpus())
    dot = to_dot(result)
    assert dot.startswith("digraph domination {")
    # edges run from dominated up to dominator
    assert '"A4" -> "C12";' in dot or '"A4" -> "Dic12";' in dot
    for label, _ in order12_corpus_groups():
        assert f'"{label}";' in dot


def test_csv_output():
    result = build_poset(_order12_corpus())
    rows = to_csv(result).strip().splitlines()
    assert rows[0].split(",")[0] == "label"
    assert len(rows) == 1 + len(result.labels)
    assert "Incomparable" in to_csv(result)
