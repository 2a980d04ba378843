"""Enumerated finite groups: indexed element tables over exchangeable backings.

A Group owns a full element list (index -> canonical element), the reverse
index, and a backing that multiplies raw elements.  No n-by-n
multiplication table is ever materialised; products go through the backing
and back through the element index.  Enumeration is breadth-first from the
identity with generators applied in declared order (FIFO), so two runs
assign identical indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .finite_field import Matrix, mat_inv, mat_mul

__all__ = [
    "GroupError",
    "Group",
    "SubgroupSet",
    "PermBacking",
    "MatrixBacking",
    "VectorBacking",
    "DirectProductBacking",
    "SemidirectBacking",
    "CosetBacking",
    "enumerate_group",
    "element_order",
    "subgroup_closure",
    "is_normal",
    "quotient",
    "derived_subgroup",
    "DEFAULT_CLOSURE_CAP",
    "QUOTIENT_THRESHOLD",
]


class GroupError(ValueError):
    """Invalid group construction or query."""


DEFAULT_CLOSURE_CAP = 500_000
QUOTIENT_THRESHOLD = 20_000


class PermBacking:
    """Permutations of a fixed degree; packed as bytes up to degree 255."""

    __slots__ = ("degree", "_bytes")

    def __init__(self, degree):
        if degree < 1:
            raise GroupError("permutation degree must be >= 1")
        self.degree = degree
        self._bytes = degree <= 255

    def pack(self, images):
        images = tuple(images)
        if sorted(images) != list(range(self.degree)):
            raise GroupError(f"not a permutation of 0..{self.degree - 1}")
        return bytes(images) if self._bytes else images

    def identity(self):
        return bytes(range(self.degree)) if self._bytes else tuple(range(self.degree))

    def mul(self, a, b):
        # (a*b)(i) = a(b(i))
        if self._bytes:
            return bytes(map(a.__getitem__, b))
        return tuple(map(a.__getitem__, b))

    def inv(self, a):
        out = [0] * self.degree
        for i, j in enumerate(a):
            out[j] = i
        return bytes(out) if self._bytes else tuple(out)

    def fast_order(self, a):
        seen = [False] * self.degree
        o = 1
        for i in range(self.degree):
            if not seen[i]:
                length = 0
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = a[j]
                    length += 1
                o = lcm(o, length)
        return o

    def token(self):
        return ("perm", self.degree)


class MatrixBacking:
    """Square matrices over a field, optionally normalised modulo scalars."""

    __slots__ = ("spec", "dim", "projective")

    def __init__(self, spec, dim, projective=False):
        self.spec = spec
        self.dim = dim
        self.projective = projective

    def normalize(self, m):
        if not self.projective:
            return m
        for row in m.rows:
            for e in row:
                if e:
                    if e == 1:
                        return m
                    f = self.spec.inv(e)
                    return Matrix(
                        self.spec,
                        tuple(tuple(self.spec.mul(f, x) for x in r) for r in m.rows),
                    )
        raise GroupError("zero matrix has no projective normal form")

    def identity(self):
        return Matrix.identity(self.spec, self.dim)

    def mul(self, a, b):
        return self.normalize(mat_mul(a, b))

    def inv(self, a):
        return self.normalize(mat_inv(a))

    def fast_order(self, a):
        return None

    def token(self):
        return ("matrix", self.spec.p, self.spec.k, self.spec.modulus, self.dim, self.projective)


class VectorBacking:
    """GF(p)^k written additively; elements are coefficient tuples."""

    __slots__ = ("p", "k")

    def __init__(self, p, k):
        self.p = p
        self.k = k

    def identity(self):
        return (0,) * self.k

    def mul(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def inv(self, a):
        p = self.p
        return tuple((p - x) % p for x in a)

    def fast_order(self, a):
        return 1 if not any(a) else self.p

    def token(self):
        return ("vector", self.p, self.k)


class DirectProductBacking:
    """Component-wise pairs of indices into two enumerated groups."""

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def identity(self):
        return (0, 0)

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def inv(self, a):
        return (self.left.inv(a[0]), self.right.inv(a[1]))

    def fast_order(self, a):
        return lcm(self.left.order_of(a[0]), self.right.order_of(a[1]))

    def token(self):
        return ("product", self.left.fingerprint(), self.right.fingerprint())


class SemidirectBacking:
    """Pairs (x, h): h twists the first coordinate through fixed permutations."""

    __slots__ = ("normal", "acting", "perms")

    def __init__(self, normal, acting, perms):
        self.normal = normal
        self.acting = acting
        self.perms = perms

    def identity(self):
        return (0, 0)

    def mul(self, a, b):
        x1, h1 = a
        x2, h2 = b
        return (self.normal.mul(x1, self.perms[h1][x2]), self.acting.mul(h1, h2))

    def inv(self, a):
        x, h = a
        hi = self.acting.inv(h)
        return (self.perms[hi][self.normal.inv(x)], hi)

    def fast_order(self, a):
        return None

    def token(self):
        return ("semidirect", self.normal.fingerprint(), self.acting.fingerprint(), self.perms)


class CosetBacking:
    """Cosets of a normal subgroup; elements are least-index representatives."""

    __slots__ = ("parent", "coset_of", "reps")

    def __init__(self, parent, coset_of, reps):
        self.parent = parent
        self.coset_of = coset_of
        self.reps = reps

    def identity(self):
        return self.reps[0]

    def mul(self, a, b):
        return self.reps[self.coset_of[self.parent.mul(a, b)]]

    def inv(self, a):
        return self.reps[self.coset_of[self.parent.inv(a)]]

    def fast_order(self, a):
        return None

    def token(self):
        return ("coset", self.parent.fingerprint())


def _element_order_by_powers(backing, g):
    ident = backing.identity()
    x, o = g, 1
    while x != ident:
        x = backing.mul(x, g)
        o += 1
    return o


class Group:
    """A fully enumerated finite group; index 0 is the identity."""

    __slots__ = ("backing", "table", "index", "generators", "name", "_orders", "_invs", "_fp")

    def __init__(self, backing, table, generator_elements=(), name="", index=None):
        self.backing = backing
        self.table = list(table)
        if index is None:
            index = {e: i for i, e in enumerate(self.table)}
        if len(index) != len(self.table):
            raise GroupError("duplicate elements in table")
        self.index = index
        if self.table and self.table[0] != backing.identity():
            raise GroupError("identity must sit at index 0")
        self.generators = tuple(dict.fromkeys(self.index[g] for g in generator_elements))
        self.name = name
        self._orders = None
        self._invs = None
        self._fp = None

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        return f"Group({self.name or self.backing.token()[0]!s}, order={len(self.table)})"

    def mul(self, i, j):
        return self.index[self.backing.mul(self.table[i], self.table[j])]

    def inv(self, i):
        invs = self._invs
        if invs is None:
            invs = self._invs = [-1] * len(self.table)
        v = invs[i]
        if v < 0:
            v = invs[i] = self.index[self.backing.inv(self.table[i])]
        return v

    def order_of(self, i):
        orders = self._orders
        if orders is None:
            orders = self._orders = [0] * len(self.table)
        o = orders[i]
        if o == 0:
            elem = self.table[i]
            o = self.backing.fast_order(elem)
            if o is None:
                o = _element_order_by_powers(self.backing, elem)
            orders[i] = o
        return o

    def orders(self):
        return [self.order_of(i) for i in range(len(self.table))]

    def fingerprint(self):
        """Deterministic structural key; equal keys mean equal multiplication."""
        if self._fp is None:
            self._fp = (self.backing.token(), tuple(self.table))
        return self._fp


def element_order(group, i):
    return group.order_of(i)


def enumerate_group(backing, generators, cap=DEFAULT_CLOSURE_CAP, name=""):
    """BFS closure of the generators; deterministic indexing, identity first."""
    generators = list(generators)
    ident = backing.identity()
    table = [ident]
    index = {ident: 0}
    bmul = backing.mul
    head = 0
    while head < len(table):
        x = table[head]
        head += 1
        for g in generators:
            y = bmul(x, g)
            if y not in index:
                if len(table) >= cap:
                    raise GroupError(f"closure exceeded cap {cap}")
                index[y] = len(table)
                table.append(y)
    return Group(backing, table, generator_elements=generators, name=name, index=index)


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup of an enumerated group, as a sorted index tuple."""

    group: Group
    members: tuple

    def __post_init__(self):
        if not self.members or self.members[0] != 0:
            raise GroupError("subgroup must contain the identity index 0")

    def __len__(self):
        return len(self.members)


def subgroup_closure(group, seed):
    """Smallest subgroup containing the seed indices."""
    gens = sorted({int(i) for i in seed} - {0})
    elems = [0]
    seen = {0}
    for s in gens:
        if s not in seen:
            seen.add(s)
            elems.append(s)
    head = 0
    while head < len(elems):
        x = elems[head]
        head += 1
        for s in gens:
            y = group.mul(x, s)
            if y not in seen:
                seen.add(y)
                elems.append(y)
    return SubgroupSet(group, tuple(sorted(seen)))


def is_normal(group, sub):
    """Conjugation check against the group's generators."""
    if sub.group is not group:
        raise GroupError("subgroup belongs to a different group")
    members = set(sub.members)
    for g in group.generators:
        gi = group.inv(g)
        for h in sub.members:
            if group.mul(group.mul(g, h), gi) not in members:
                return False
    return True


def quotient(group, sub):
    """Coset group of a normal subgroup; representatives are least indices."""
    if len(group) > QUOTIENT_THRESHOLD:
        raise GroupError(f"group order {len(group)} exceeds quotient threshold {QUOTIENT_THRESHOLD}")
    if not is_normal(group, sub):
        raise GroupError("cannot form the quotient by a non-normal subgroup")
    n = len(group)
    coset_of = [-1] * n
    reps = []
    for i in range(n):
        if coset_of[i] < 0:
            cid = len(reps)
            reps.append(i)
            for h in sub.members:
                coset_of[group.mul(i, h)] = cid
    backing = CosetBacking(group, coset_of, reps)
    gen_elems = [reps[coset_of[g]] for g in group.generators]
    return Group(backing, reps, generator_elements=gen_elems, name=f"{group.name}/N")


def derived_subgroup(group, members=None):
    """Closure of all pairwise commutators within `members` (default: everything)."""
    if len(group) > QUOTIENT_THRESHOLD:
        raise GroupError(f"group order {len(group)} exceeds threshold {QUOTIENT_THRESHOLD}")
    idxs = range(len(group)) if members is None else members
    backing = group.backing
    bmul = backing.mul
    table = group.table
    elems = [table[i] for i in idxs]
    invs = [backing.inv(e) for e in elems]
    comm = set()
    # [x,y]^-1 = [y,x], so the j >= i half seeds the same closure
    for i in range(len(elems)):
        xi, x = invs[i], elems[i]
        for j in range(i, len(elems)):
            comm.add(bmul(bmul(xi, invs[j]), bmul(x, elems[j])))
    return subgroup_closure(group, (group.index[c] for c in comm))
