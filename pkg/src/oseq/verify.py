"""Verification suites: rebuild the table groups and check the printed claims.

Each suite returns a list of Check records; a runner prints one line per
check.  Suites: table1, table2, table3, thm23, thm25, thm29, simple, props.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from sympy import isprime

from .classify import is_nilpotent, is_solvable, is_supersolvable
from .construct import (
    alternating,
    catalog,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    psl2,
    suzuki8,
    symmetric,
)
from .fixtures import default_fixtures, fixtures_by_label
from .order_sequence import (
    OrderSequence,
    Verdict,
    compare,
    format_sequence,
    is_plausible,
    nilpotent_from_os,
    os_cyclic,
    os_of_group,
    os_product,
    psi,
)

__all__ = [
    "Check",
    "SuiteUsageError",
    "SUITE_NAMES",
    "DEFAULT_PRIMES",
    "run_suite",
    "catalog_sample",
    "order12_corpus_groups",
]


class SuiteUsageError(ValueError):
    """Bad suite name or primes violating a theorem's hypotheses."""


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _eq(name, computed, expected):
    ok = computed == expected
    detail = f"computed {computed}" if ok else f"computed {computed}, expected {expected}"
    return Check(name, ok, detail)


def _verdict(name, a, b, expected):
    v = compare(a, b)
    return _eq(name, v.value, expected.value)


SUITE_NAMES = ("table1", "table2", "table3", "thm23", "thm25", "thm29", "simple", "props")

DEFAULT_PRIMES = {
    "thm23": (3, 7, 13, 17),
    "thm25": (11, 17, 23),
    "thm29": (5, 7, 11),
}

_PRIME_GUARDS = {
    "thm23": lambda p: isprime(p) and p % 2 == 1 and p != 5 and p % 5 != 1,
    "thm25": lambda p: isprime(p) and p >= 11 and p % 3 != 1,
    "thm29": lambda p: isprime(p) and p >= 5,
}

_GUARD_TEXT = {
    "thm23": "odd primes p != 5 with p % 5 != 1",
    "thm25": "primes p >= 11 with p % 3 != 1",
    "thm29": "primes p >= 5",
}


def _check_primes(suite, primes):
    guard = _PRIME_GUARDS[suite]
    for p in primes:
        if not guard(p):
            raise SuiteUsageError(f"{suite} requires {_GUARD_TEXT[suite]}; got {p}")
    return tuple(primes)


# -- table suites -------------------------------------------------------------

_TABLE1_CONSTRUCTIBLE = (
    ("C5xA5", "SG300_22"),
    ("C7xA5", "SG420_13"),
    ("C13xA5", "SG780_13"),
    ("C15xA5", "SG900_88"),
    ("SD_300_23", "SG300_23"),
)

_TABLE1_DOMINATIONS = (
    ("SG300_22", "SG300_23"),
    ("SG420_13", "SG420_16"),
    ("SG780_13", "SG780_16"),
    ("SG780_13", "SG780_17"),
    ("SG780_13", "SG780_20"),
    ("SG900_88", "SG900_89"),
    ("SG900_88", "SG900_90"),
    ("SG900_88", "SG900_91"),
    ("SG900_88", "SG900_92"),
    ("SG900_88", "SG900_94"),
    ("SG900_88", "SG900_95"),
    ("SG900_88", "SG900_96"),
    ("SG900_88", "SG900_97"),
    ("SG900_88", "SG900_100"),
    ("SG900_88", "SG900_101"),
    ("SG900_88", "SG900_103"),
    ("SG900_88", "SG900_119"),
    ("SG900_88", "SG900_120"),
    ("SG900_88", "SG900_129"),
)

_TABLE3_ROWS = (
    (72, ("SG72_40",), ("SG72_35",)),
    (144, ("SG144_119",), ("SG144_99",)),
    (144, ("SG144_116",), ("SG144_174",)),
    (144, ("SG144_186",), ("SG144_177",)),
    (216, ("SG216_100", "SG216_168"), ("SG216_34", "SG216_36", "SG216_131")),
    (216, ("SG216_157",), ("SG216_60", "SG216_72", "SG216_144")),
)


def suite_table1(fixtures=None):
    by_label = fixtures_by_label(fixtures or default_fixtures())
    checks = []
    for cat_name, label in _TABLE1_CONSTRUCTIBLE:
        seq = os_of_group(catalog(cat_name))
        checks.append(
            _eq(f"os({cat_name}) == {label}", format_sequence(seq), format_sequence(by_label[label].seq))
        )
    for top, low in _TABLE1_DOMINATIONS:
        checks.append(
            _verdict(f"{top} > {low}", by_label[top].seq, by_label[low].seq, Verdict.PROPERLY_DOMINATES)
        )
    return checks


def suite_table2(fixtures=None):
    by_label = fixtures_by_label(fixtures or default_fixtures())
    groups = {name: catalog(name) for name in
              ("C4xF8", "C22xF8", "C24xD14", "C7xA5", "C35xA4", "C5xC7A4", "D10xF7")}
    seqs = {name: os_of_group(g) for name, g in groups.items()}
    checks = [
        _eq("order(C4xF8)", len(groups["C4xF8"]), 224),
        _eq("order(C22xF8)", len(groups["C22xF8"]), 224),
        _eq("order(C24xD14)", len(groups["C24xD14"]), 224),
        _eq("order(C7xA5)", len(groups["C7xA5"]), 420),
        _eq("order(C35xA4)", len(groups["C35xA4"]), 420),
        _eq("order(C5xC7A4)", len(groups["C5xC7A4"]), 420),
        _eq("order(D10xF7)", len(groups["D10xF7"]), 420),
        _verdict("C4xF8 > C24xD14", seqs["C4xF8"], seqs["C24xD14"], Verdict.PROPERLY_DOMINATES),
        _verdict("C22xF8 > C24xD14", seqs["C22xF8"], seqs["C24xD14"], Verdict.PROPERLY_DOMINATES),
        _verdict("C7xA5 > D10xF7", seqs["C7xA5"], seqs["D10xF7"], Verdict.PROPERLY_DOMINATES),
        _verdict("C35xA4 > D10xF7", seqs["C35xA4"], seqs["D10xF7"], Verdict.PROPERLY_DOMINATES),
        _verdict("C5xC7A4 > D10xF7", seqs["C5xC7A4"], seqs["D10xF7"], Verdict.PROPERLY_DOMINATES),
        _eq("os(C7xA5) == SG420_13", format_sequence(seqs["C7xA5"]), format_sequence(by_label["SG420_13"].seq)),
        _eq("os(D10xF7) == SG420_16", format_sequence(seqs["D10xF7"]), format_sequence(by_label["SG420_16"].seq)),
        _eq("supersolvable(C24xD14)", is_supersolvable(groups["C24xD14"]), True),
        _eq("supersolvable(D10xF7)", is_supersolvable(groups["D10xF7"]), True),
        _eq("supersolvable(C4xF8)", is_supersolvable(groups["C4xF8"]), False),
        _eq("supersolvable(C22xF8)", is_supersolvable(groups["C22xF8"]), False),
        _eq("supersolvable(C35xA4)", is_supersolvable(groups["C35xA4"]), False),
        _eq("supersolvable(C5xC7A4)", is_supersolvable(groups["C5xC7A4"]), False),
        _eq("solvable(C7xA5)", is_solvable(groups["C7xA5"]), False),
    ]
    return checks


def suite_table3(fixtures=None):
    by_label = fixtures_by_label(fixtures or default_fixtures())
    checks = []
    for n, h_labels, g_labels in _TABLE3_ROWS:
        labels = (*h_labels, *g_labels)
        base = by_label[labels[0]].seq
        for other in labels[1:]:
            checks.append(
                _verdict(f"{labels[0]} == {other} (order {n})", base, by_label[other].seq, Verdict.EQUAL)
            )
    wreath = catalog("S3wrC2")
    twisted = catalog("SD_72_35")
    checks.append(_eq("os(S3wrC2) == SG72_40", format_sequence(os_of_group(wreath)),
                      format_sequence(by_label["SG72_40"].seq)))
    checks.append(_eq("os(SD_72_35) == SG72_35", format_sequence(os_of_group(twisted)),
                      format_sequence(by_label["SG72_35"].seq)))
    checks.append(_eq("supersolvable(S3wrC2)", is_supersolvable(wreath), False))
    checks.append(_eq("supersolvable(SD_72_35)", is_supersolvable(twisted), True))
    return checks


# -- theorem families ----------------------------------------------------------


def suite_thm23(primes=None):
    primes = _check_primes("thm23", primes or DEFAULT_PRIMES["thm23"])
    base_h = os_of_group(catalog("C5xA5"))
    base_g = os_of_group(catalog("SD_300_23"))
    checks = []
    for p in primes:
        h = os_of_group(catalog("C5pxA5", p))
        g = os_of_group(catalog("CpxSD300", p))
        checks.append(_verdict(f"C{5 * p}xA5 > CpxSD300 (p={p})", h, g, Verdict.PROPERLY_DOMINATES))
        if gcd(p, 300) == 1:
            cp = os_cyclic(p)
            checks.append(_eq(f"os(C{5 * p}xA5) == os(Cp)os(C5xA5) (p={p})",
                              format_sequence(h), format_sequence(os_product(cp, base_h))))
            checks.append(_eq(f"os(CpxSD300) == os(Cp)os(SD_300_23) (p={p})",
                              format_sequence(g), format_sequence(os_product(cp, base_g))))
    return checks


def _thm25_expected_h(p):
    return OrderSequence(((1, 1), (2, 3), (3, 8), (p, p - 1), (2 * p, 3 * p - 3), (3 * p, 8 * p - 8)))


def _thm25_expected_g(p):
    return OrderSequence(
        ((1, 1), (2, 4 * p + 3), (3, 2), (6, 2 * p), (p, p - 1), (2 * p, 3 * p - 3), (3 * p, 2 * p - 2))
    )


def suite_thm25(primes=None):
    primes = _check_primes("thm25", primes or DEFAULT_PRIMES["thm25"])
    checks = []
    for p in primes:
        h = os_of_group(catalog("CpxA4", p))
        g = os_of_group(catalog("S3xD2p", p))
        checks.append(_eq(f"os(CpxA4) closed form (p={p})",
                          format_sequence(h), format_sequence(_thm25_expected_h(p))))
        checks.append(_eq(f"os(S3xD2p) closed form (p={p})",
                          format_sequence(g), format_sequence(_thm25_expected_g(p))))
        checks.append(_verdict(f"CpxA4 > S3xD2p (p={p})", h, g, Verdict.PROPERLY_DOMINATES))
    return checks


def suite_thm29(primes=None):
    primes = _check_primes("thm29", primes or DEFAULT_PRIMES["thm29"])
    printed = OrderSequence(((1, 1), (2, 21), (3, 8), (4, 18), (6, 24)))
    wreath_seq = os_of_group(catalog("S3wrC2"))
    twisted_seq = os_of_group(catalog("SD_72_35"))
    checks = [
        _eq("os(S3wrC2) == printed", format_sequence(wreath_seq), format_sequence(printed)),
        _eq("os(SD_72_35) == printed", format_sequence(twisted_seq), format_sequence(printed)),
    ]
    for p in primes:
        h_grp = catalog("CpxS3wrC2", p)
        g_grp = catalog("CpxSD72", p)
        h, g = os_of_group(h_grp), os_of_group(g_grp)
        checks.append(_eq(f"os equality at order {72 * p}", format_sequence(h), format_sequence(g)))
        checks.append(_eq(f"os == os(Cp)os(base) (p={p})",
                          format_sequence(h), format_sequence(os_product(os_cyclic(p), printed))))
        checks.append(_eq(f"supersolvable(CpxS3wrC2) (p={p})", is_supersolvable(h_grp), False))
        checks.append(_eq(f"supersolvable(CpxSD72) (p={p})", is_supersolvable(g_grp), True))
    return checks


# -- simple-group block ---------------------------------------------------------


def suite_simple(fixtures=None, features=frozenset()):
    by_label = fixtures_by_label(fixtures or default_fixtures())
    l2_fix = by_label["L2_64"].seq
    sz_fix = by_label["C32xSz8"].seq
    computed = os_of_group(psl2(64))
    checks = [
        _eq("os(PSL2(64)) == L2_64", format_sequence(computed), format_sequence(l2_fix)),
        _verdict("L2_64 vs C32xSz8", l2_fix, sz_fix, Verdict.INCOMPARABLE),
        _eq("psi(L2_64)", psi(l2_fix), 12106687),
        _eq("psi(C32xSz8)", psi(sz_fix), 5482775),
        _eq("psi(C32xSz8) < psi(L2_64)", psi(sz_fix) < psi(l2_fix), True),
    ]
    if "sz8" in features:
        product = direct_product(elementary_abelian(3, 2), suzuki8())
        checks.append(_eq("os(C3^2 x Sz8) == C32xSz8",
                          format_sequence(os_of_group(product)), format_sequence(sz_fix)))
    return checks


# -- property suites -------------------------------------------------------------

_COPRIME_PAIRS = (
    ("C2", lambda: cyclic(2), "C3", lambda: cyclic(3)),
    ("C2", lambda: cyclic(2), "C9", lambda: cyclic(9)),
    ("C3", lambda: cyclic(3), "C4", lambda: cyclic(4)),
    ("C4", lambda: cyclic(4), "C9", lambda: cyclic(9)),
    ("C5", lambda: cyclic(5), "S3", lambda: symmetric(3)),
    ("C7", lambda: cyclic(7), "A4", lambda: alternating(4)),
    ("C5", lambda: cyclic(5), "D8", lambda: dihedral(8)),
    ("C9", lambda: cyclic(9), "D8", lambda: dihedral(8)),
    ("C5", lambda: cyclic(5), "A4", lambda: alternating(4)),
    ("C7", lambda: cyclic(7), "Dic12", lambda: dicyclic(12)),
    ("C25", lambda: cyclic(25), "S4", lambda: symmetric(4)),
)

_CONGRUENCE_TRIPLES = (
    ("C5", lambda: cyclic(5), "C12", lambda: cyclic(12), "A4", lambda: alternating(4)),
    ("C5", lambda: cyclic(5), "C12", lambda: cyclic(12), "D12", lambda: dihedral(12)),
    ("C7", lambda: cyclic(7), "C12", lambda: cyclic(12), "Dic12", lambda: dicyclic(12)),
    ("C7", lambda: cyclic(7), "C4", lambda: cyclic(4), "C2^2", lambda: elementary_abelian(2, 2)),
    ("C11", lambda: cyclic(11), "C6", lambda: cyclic(6), "S3", lambda: symmetric(3)),
    ("C5", lambda: cyclic(5), "C8", lambda: cyclic(8), "D8", lambda: dihedral(8)),
)


def order12_corpus_groups():
    return (
        ("C12", cyclic(12)),
        ("C2xC6", direct_product(cyclic(2), cyclic(6))),
        ("D12", dihedral(12)),
        ("A4", alternating(4)),
        ("Dic12", dicyclic(12)),
    )


def catalog_sample():
    """The catalog groups used by the classification-wide property suites."""
    named = [
        "C5xA5", "C7xA5", "C13xA5", "C15xA5", "SD_300_23", "SD_72_35", "S3wrC2",
        "C4xF8", "C22xF8", "C24xD14", "D10xF7", "C35xA4", "C5xC7A4",
    ]
    sample = [(name, catalog(name)) for name in named]
    sample.append(("CpxA4(11)", catalog("CpxA4", 11)))
    sample.append(("CpxA4(17)", catalog("CpxA4", 17)))
    sample.append(("S3xD2p(11)", catalog("S3xD2p", 11)))
    return tuple(sample)


def suite_props():
    checks = []
    fixed = {}  # share constructed groups across checks

    def get(name, maker):
        if name not in fixed:
            fixed[name] = maker()
        return fixed[name]

    pair_count = 0
    for name_a, make_a, name_b, make_b in _COPRIME_PAIRS:
        a, b = get(name_a, make_a), get(name_b, make_b)
        if gcd(len(a), len(b)) != 1:
            continue
        pair_count += 1
        left = os_of_group(direct_product(a, b))
        right = os_product(os_of_group(a), os_of_group(b))
        checks.append(_eq(f"product law {name_a} x {name_b}",
                          format_sequence(left), format_sequence(right)))
    checks.append(_eq("coprime pairs checked >= 10", pair_count >= 10, True))

    c2 = os_of_group(cyclic(2))
    square = os_product(c2, c2)
    left = os_of_group(direct_product(cyclic(2), cyclic(2)))
    checks.append(_eq("product law fails for C2 x C2", left.entries != square.entries, True))
    ok, reason = is_plausible(square, 4)
    checks.append(Check("os(C2)^2 rejected with the phi(4) reason",
                        (not ok) and "phi(4)" in (reason or ""), reason or ""))

    for name_h, make_h, name_a, make_a, name_b, make_b in _CONGRUENCE_TRIPLES:
        h, a, b = get(name_h, make_h), get(name_a, make_a), get(name_b, make_b)
        inner = compare(os_of_group(a), os_of_group(b))
        outer = compare(os_product(os_of_group(h), os_of_group(a)),
                        os_product(os_of_group(h), os_of_group(b)))
        ok = inner is Verdict.PROPERLY_DOMINATES and outer is Verdict.PROPERLY_DOMINATES
        checks.append(Check(f"domination congruence {name_h} * ({name_a} > {name_b})", ok,
                            f"inner {inner.value}, outer {outer.value}"))

    groups12 = dict(order12_corpus_groups())
    for g_name in ("C12", "C2xC6"):
        for h_name in ("D12", "A4", "Dic12"):
            checks.append(_verdict(f"nilpotent dominates: {g_name} > {h_name}",
                                   os_of_group(groups12[g_name]), os_of_group(groups12[h_name]),
                                   Verdict.PROPERLY_DOMINATES))

    for name, group in catalog_sample():
        checks.append(_eq(f"sequence nilpotency test agrees on {name}",
                          nilpotent_from_os(os_of_group(group)), is_nilpotent(group)))
    return checks


_SUITES = {
    "table1": lambda fixtures, primes, features: suite_table1(fixtures),
    "table2": lambda fixtures, primes, features: suite_table2(fixtures),
    "table3": lambda fixtures, primes, features: suite_table3(fixtures),
    "thm23": lambda fixtures, primes, features: suite_thm23(primes),
    "thm25": lambda fixtures, primes, features: suite_thm25(primes),
    "thm29": lambda fixtures, primes, features: suite_thm29(primes),
    "simple": lambda fixtures, primes, features: suite_simple(fixtures, features),
    "props": lambda fixtures, primes, features: suite_props(),
}


def run_suite(name, fixtures=None, primes=None, features=frozenset()):
    if name not in _SUITES:
        raise SuiteUsageError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return _SUITES[name](fixtures, primes, features)
