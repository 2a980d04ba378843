import os

import pytest

from oseq.construct import (
    ActionMap,
    ConstructionError,
    PresentationSpec,
    alternating,
    catalog,
    catalog_names,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    find_action_by_relations,
    frobenius42,
    frobenius56,
    general_linear,
    heisenberg,
    psl2,
    semidirect_product,
    suzuki8,
    symmetric,
    trivial_action,
    validate_action,
    wreath_square,
)
from oseq.finite_field import field_make
from oseq.groups import PermBacking, derived_subgroup, enumerate_group
from oseq.order_sequence import os_of_group, parse_pairs


@pytest.mark.parametrize(
    "maker,order",
    [
        (lambda: cyclic(1), 1),
        (lambda: cyclic(12), 12),
        (lambda: dihedral(4), 4),
        (lambda: dihedral(12), 12),
        (lambda: dicyclic(8), 8),
        (lambda: dicyclic(12), 12),
        (lambda: symmetric(4), 24),
        (lambda: symmetric(1), 1),
        (lambda: alternating(3), 3),
        (lambda: alternating(5), 60),
        (lambda: alternating(6), 360),
        (lambda: heisenberg(3), 27),
        (lambda: elementary_abelian(2, 4), 16),
        (lambda: frobenius42(), 42),
        (lambda: frobenius56(), 56),
    ],
)
def test_advertised_orders(maker, order):
    assert len(maker()) == order


def test_constructor_parameter_errors():
    for bad in (lambda: cyclic(0), lambda: dihedral(7), lambda: dihedral(2),
                lambda: dicyclic(10), lambda: heisenberg(2), lambda: heisenberg(4)):
        with pytest.raises(ConstructionError):
            bad()


class _Dic12Model:
    """Normal-form oracle: pairs (i, eps) with a^i b^eps and the textbook rules."""

    def elements(self):
        return [(i, e) for i in range(6) for e in range(2)]

    def mul(self, x, y):
        (i, e), (j, f) = x, y
        if e == 0:
            return ((i + j) % 6, f)
        if f == 0:
            return ((i - j) % 6, 1)
        return ((i - j + 3) % 6, 0)

    def order(self, x):
        acc, n = x, 1
        while acc != (0, 0):
            acc = self.mul(acc, x)
            n += 1
        return n


def test_dicyclic_against_normal_form_model():
    model = _Dic12Model()
    expected = sorted(model.order(x) for x in model.elements())
    assert sorted(dicyclic(12).orders()) == expected
    assert os_of_group(dicyclic(12)).entries == ((1, 1), (2, 1), (3, 2), (4, 6), (6, 2))


def test_heisenberg_exponent():
    he3 = heisenberg(3)
    assert all(he3.order_of(i) == 3 for i in range(1, 27))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_heisenberg_matches_elementary_abelian_sequence(p):
    assert os_of_group(heisenberg(p)).entries == os_of_group(elementary_abelian(p, 3)).entries


def test_direct_product():
    assert os_of_group(direct_product(cyclic(2), cyclic(3))).entries == ((1, 1), (2, 1), (3, 2), (6, 2))
    g = direct_product(cyclic(5), alternating(5))
    assert len(g) == 300
    assert os_of_group(g).entries == ((1, 1), (2, 15), (3, 20), (5, 124), (10, 60), (15, 80))


def test_trivial_semidirect_equals_direct():
    for n, h in ((cyclic(5), symmetric(3)), (cyclic(3), dihedral(8))):
        twisted = semidirect_product(n, h, trivial_action(n, h))
        straight = direct_product(n, h)
        assert os_of_group(twisted).entries == os_of_group(straight).entries


def test_semidirect_rejects_bogus_action():
    n, h = cyclic(5), cyclic(2)
    swap_two = tuple(range(len(n)))
    bogus = (swap_two, (0, 2, 1, 3, 4))  # not an automorphism of C5
    with pytest.raises(ConstructionError):
        semidirect_product(n, h, ActionMap(h, n, bogus))


def test_frobenius42_against_affine_permutations():
    # independent model: x -> x + 1 and x -> 3x on 7 points
    backing = PermBacking(7)
    shift = backing.pack((i + 1) % 7 for i in range(7))
    scale = backing.pack((3 * i) % 7 for i in range(7))
    affine = enumerate_group(backing, [shift, scale])
    assert os_of_group(frobenius42()).entries == os_of_group(affine).entries
    assert os_of_group(frobenius42()).entries == ((1, 1), (2, 7), (3, 14), (6, 14), (7, 6))


def test_frobenius56_against_affine_permutations():
    # independent model: translations and the multiplier acting on 8 field points
    f8 = field_make(2, 3)
    backing = PermBacking(8)
    shift = backing.pack(f8.add(v, 1) for v in range(8))
    scale = backing.pack(f8.mul(v, 2) for v in range(8))
    affine = enumerate_group(backing, [shift, scale])
    assert os_of_group(frobenius56()).entries == os_of_group(affine).entries
    assert os_of_group(frobenius56()).entries == ((1, 1), (2, 7), (7, 48))


def test_wreath_square():
    w = wreath_square(symmetric(3))
    assert len(w) == 72
    assert os_of_group(w).entries == ((1, 1), (2, 21), (3, 8), (4, 18), (6, 24))
    small = wreath_square(cyclic(2))
    assert sorted(small.orders()).count(2) == 5
    assert os_of_group(small).entries == os_of_group(dihedral(8)).entries


@pytest.mark.parametrize(
    "q,order",
    [(2, 6), (3, 12), (4, 60), (5, 60), (7, 168), (8, 504), (9, 360), (13, 1092)],
)
def test_psl2_orders(q, order):
    assert len(psl2(q)) == order


def test_psl2_5_matches_a5():
    assert os_of_group(psl2(5)).entries == os_of_group(alternating(5)).entries
    assert os_of_group(psl2(4)).entries == os_of_group(alternating(5)).entries


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
def test_psl2_is_perfect(q):
    g = psl2(q)
    assert len(derived_subgroup(g)) == len(g)


def test_psl2_rejects_bad_q():
    with pytest.raises(ConstructionError):
        psl2(6)
    with pytest.raises(ConstructionError):
        psl2(128)


def test_general_linear_sizes():
    assert len(general_linear(field_make(3), 2)) == 48
    assert len(general_linear(field_make(5), 2)) == 480


def test_find_action_trivial_presentation():
    pres = PresentationSpec(1, ((1,),), 1)
    actions = find_action_by_relations(pres, 1, 5)
    assert len(actions) == 1
    assert actions[0].perms == (tuple(range(5)),)


def test_find_action_dic12_with_oracle():
    oracle = parse_pairs("(1,1)(2,25)(3,50)(4,150)(5,24)(6,50)")
    pres = PresentationSpec(2, ((1,) * 6, (2, 2, -1, -1, -1), (-2, 1, 2, 1)), 12)
    actions = find_action_by_relations(pres, 2, 5, oracle=oracle)
    assert actions
    built = semidirect_product(actions[0].target, actions[0].acting, actions[0])
    assert os_of_group(built).entries == oracle.entries


def test_find_action_d8_with_oracle():
    oracle = parse_pairs("(1,1)(2,21)(3,8)(4,18)(6,24)")
    pres = PresentationSpec(2, ((1,) * 4, (2, 2), (-2, 1, 2, 1)), 8)
    actions = find_action_by_relations(pres, 2, 3, oracle=oracle)
    assert actions


def test_find_action_reports_failure():
    pres = PresentationSpec(1, ((1, 1, 1),), 3)
    with pytest.raises(ConstructionError):
        find_action_by_relations(pres, 1, 2, oracle=parse_pairs("(1,1)(2,1)"))


def test_validate_action_on_matrix_searches():
    oracle = parse_pairs("(1,1)(2,21)(3,8)(4,18)(6,24)")
    pres = PresentationSpec(2, ((1,) * 4, (2, 2), (-2, 1, 2, 1)), 8)
    action = find_action_by_relations(pres, 2, 3, oracle=oracle)[0]
    validate_action(action)


def test_catalog_entries():
    assert len(catalog("C15xA5")) == 900
    assert os_of_group(catalog("C15xA5")).entries == (
        (1, 1), (2, 15), (3, 62), (5, 124), (6, 30), (10, 60), (15, 488), (30, 120))
    assert os_of_group(catalog("CpxA4", 11)).entries == (
        (1, 1), (2, 3), (3, 8), (11, 10), (22, 30), (33, 80))
    assert len(catalog("S3xD2p", 11)) == 132
    assert len(catalog("C5xC7A4")) == 420
    assert len(catalog("C24xD14")) == 224


def test_catalog_name_errors():
    with pytest.raises(ConstructionError):
        catalog("NoSuchGroup")
    with pytest.raises(ConstructionError):
        catalog("CpxA4")
    with pytest.raises(ConstructionError):
        catalog("CpxA4", 12)
    with pytest.raises(ConstructionError):
        catalog("C5xA5", 7)


def test_catalog_names_stable():
    names = catalog_names()
    for required in ("C5xA5", "SD_300_23", "SD_72_35", "S3wrC2", "CpxA4", "S3xD2p"):
        assert required in names


def test_oracle_matched_entries():
    assert os_of_group(catalog("SD_300_23")).entries == parse_pairs(
        "(1,1)(2,25)(3,50)(4,150)(5,24)(6,50)").entries
    assert os_of_group(catalog("SD_72_35")).entries == parse_pairs(
        "(1,1)(2,21)(3,8)(4,18)(6,24)").entries


@pytest.mark.skipif(os.environ.get("OSEQ_SKIP_SZ8") == "1", reason="sz8 disabled by env")
def test_suzuki8():
    sz = suzuki8()
    assert len(sz) == 29120
    assert sorted(set(sz.orders())) == [1, 2, 4, 5, 7, 13]
    # factor the printed composite display by the coprime C3^2 part
    assert os_of_group(sz).entries == (
        (1, 1), (2, 455), (4, 3640), (5, 5824), (7, 12480), (13, 6720))
