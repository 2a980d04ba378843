#!/usr/bin/env python3
"""Exploratory recipes for the two order-224 constructions with unpinned actions.

The supersolvable order-224 row names C2^4 : D14 and C2^2 x (C7 : D8)
without printing sequences or specifying the actions, so no candidate here
is endorsed as "the" group; this script enumerates the plausible action
classes, prints each candidate's order sequence and classification, and
shows how the candidates compare against the three constructible order-224
groups of the same block.
"""

from oseq.classify import classify_group
from oseq.construct import (
    ActionMap,
    catalog,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    general_linear,
    semidirect_product,
)
from oseq.finite_field import Matrix, field_make, mat_mul
from oseq.groups import subgroup_closure
from oseq.order_sequence import compare, format_sequence, os_of_group


def gf2_rank(rows):
    rows = [int("".join(map(str, r)), 2) for r in rows]
    rank = 0
    for bit in range(3, -1, -1):
        pivot = next((r for r in rows if r >> bit & 1), None)
        if pivot is None:
            continue
        rows = [r ^ pivot if r >> bit & 1 else r for r in rows if r is not pivot]
        rank += 1
    return rank


def c7_rtimes_d8_candidates():
    """D8 acting on C7 through each of its three index-2 quotients."""
    n = cyclic(7)
    h = dihedral(8)
    rot, ref = h.generators
    invert = tuple((-i) % 7 for i in range(7))
    ident = tuple(range(7))
    kernels = {
        "kernel <r>": subgroup_closure(h, [rot]),
        "kernel <r2, s>": subgroup_closure(h, [h.mul(rot, rot), ref]),
        "kernel <r2, rs>": subgroup_closure(h, [h.mul(rot, rot), h.mul(rot, ref)]),
    }
    for name, kernel in kernels.items():
        members = set(kernel.members)
        perms = tuple(ident if j in members else invert for j in range(len(h)))
        yield name, semidirect_product(n, h, ActionMap(h, n, perms))


def c24_rtimes_d14_candidates():
    """D14 on C2^4: the rotation cannot be inverted by any involution of
    GL(4,2) (the two order-7 rational forms are not conjugate to their
    inverses), so every nontrivial action factors through the C2 quotient;
    one candidate per involution class rank."""
    spec = field_make(2)
    gl = general_linear(spec, 4)
    involutions = [m for m in gl if mat_mul(m, m) == Matrix.identity(spec, 4)
                   and m != Matrix.identity(spec, 4)]
    by_rank = {}
    for m in involutions:
        shifted = tuple(tuple((a + (1 if i == j else 0)) % 2 for j, a in enumerate(row))
                        for i, row in enumerate(m.rows))
        by_rank.setdefault(gf2_rank(shifted), m)
    print(f"GL(4,2): {len(involutions)} involutions in {len(by_rank)} classes "
          f"(rank of T+I: {sorted(by_rank)})")

    n = elementary_abelian(2, 4)
    h = dihedral(14)
    rot, ref = h.generators
    c7 = set(subgroup_closure(h, [rot]).members)
    ident = tuple(range(len(n)))
    for rank, t in sorted(by_rank.items()):
        perm = tuple(n.index[tuple(sum(r * v for r, v in zip(row, vec)) % 2 for row in t.rows)]
                     for vec in n.table)
        perms = tuple(ident if j in c7 else perm for j in range(len(h)))
        yield f"reflection acts with rank(T+I)={rank}", semidirect_product(n, h, ActionMap(h, n, perms))


def report(label, group, references):
    seq = os_of_group(group)
    rep = classify_group(group)
    print(f"\n{label}: order {len(group)}")
    print(f"  {format_sequence(seq)}")
    print(f"  supersolvable={rep.supersolvable} solvable={rep.solvable}")
    for ref_name, ref_seq in references:
        print(f"  vs {ref_name}: {compare(ref_seq, seq).value}")


def main():
    print("order-56 candidates for C7 : D8 (three quotient actions)")
    candidates56 = list(c7_rtimes_d8_candidates())
    for name, grp in candidates56:
        print(f"  {name}: {format_sequence(os_of_group(grp))}")

    references = [(name, os_of_group(catalog(name))) for name in ("C4xF8", "C22xF8", "C24xD14")]

    print("\norder-224 candidates C2^2 x (C7 : D8)")
    for name, grp in candidates56:
        big = direct_product(elementary_abelian(2, 2), grp)
        report(f"C2^2 x (C7:D8, {name})", big, references)

    print("\norder-224 candidates C2^4 : D14")
    for name, grp in c24_rtimes_d14_candidates():
        report(f"C2^4 : D14, {name}", grp, references)

    print("\nExploratory output only: no candidate is pinned to a table row.")


if __name__ == "__main__":
    main()
