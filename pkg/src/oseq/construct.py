"""Constructors for the group zoo: standard families, products, PSL(2,q),
Frobenius and Heisenberg groups, relation-driven action searches in GL(k,p),
and the named catalog behind the CLI.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from sympy import factorint, isprime

from .finite_field import (
    Matrix,
    companion_matrix,
    field_make,
    mat_det,
    mat_inv,
    mat_mul,
    projective_line,
)
from .groups import (
    DEFAULT_CLOSURE_CAP,
    DirectProductBacking,
    Group,
    GroupError,
    MatrixBacking,
    PermBacking,
    SemidirectBacking,
    VectorBacking,
    derived_subgroup,
    enumerate_group,
    quotient,
    subgroup_closure,
)
from .order_sequence import os_of_group, parse_pairs

__all__ = [
    "ConstructionError",
    "ActionMap",
    "PresentationSpec",
    "cyclic",
    "dihedral",
    "dicyclic",
    "symmetric",
    "alternating",
    "heisenberg",
    "elementary_abelian",
    "frobenius42",
    "frobenius56",
    "direct_product",
    "semidirect_product",
    "trivial_action",
    "matrix_action",
    "validate_action",
    "wreath_square",
    "psl2",
    "suzuki8",
    "general_linear",
    "find_action_by_relations",
    "catalog",
    "catalog_names",
    "CATALOG_PARAMETRIZED",
]


class ConstructionError(ValueError):
    """A constructor was given bad parameters or could not be realised."""


# -- standard families -------------------------------------------------------


@lru_cache(maxsize=None)
def cyclic(n):
    """C_n as the rotation of n points; index i holds the i-th power."""
    if n < 1:
        raise ConstructionError("cyclic group order must be >= 1")
    backing = PermBacking(n)
    gens = [] if n == 1 else [backing.pack((i + 1) % n for i in range(n))]
    return enumerate_group(backing, gens, name=f"C{n}")


@lru_cache(maxsize=None)
def dihedral(n):
    """Dihedral group of order n (order-subscript convention: D12 has 12 elements)."""
    if n < 4 or n % 2:
        raise ConstructionError("dihedral order must be an even integer >= 4")
    m = n // 2
    if m == 2:
        backing = PermBacking(4)
        gens = [backing.pack((1, 0, 3, 2)), backing.pack((2, 3, 0, 1))]
    else:
        backing = PermBacking(m)
        rot = backing.pack((i + 1) % m for i in range(m))
        ref = backing.pack((m - i) % m for i in range(m))
        gens = [rot, ref]
    return enumerate_group(backing, gens, name=f"D{n}")


@lru_cache(maxsize=None)
def dicyclic(n):
    """Dicyclic group of order n = 4m: <a,b | a^(2m)=1, b^2=a^m, b^-1 a b=a^-1>.

    Realised as 2x2 matrices over GF(q) for the smallest prime q = 1 mod 2m.
    """
    if n < 8 or n % 4:
        raise ConstructionError("dicyclic order must be a multiple of 4, at least 8")
    half = n // 2
    q = half + 1
    while not (isprime(q) and (q - 1) % half == 0):
        q += 1
    spec = field_make(q)
    zeta = next(x for x in range(2, q) if spec.element_order(x) == half)
    a = Matrix(spec, ((zeta, 0), (0, spec.inv(zeta))))
    b = Matrix(spec, ((0, 1), (spec.neg(1), 0)))
    grp = enumerate_group(MatrixBacking(spec, 2), [a, b], name=f"Dic{n}")
    if len(grp) != n:
        raise ConstructionError(f"dicyclic construction produced order {len(grp)}")
    return grp


@lru_cache(maxsize=None)
def symmetric(k):
    if k < 1:
        raise ConstructionError("symmetric degree must be >= 1")
    backing = PermBacking(k)
    gens = []
    if k >= 2:
        gens.append(backing.pack((1, 0, *range(2, k))))
    if k >= 3:
        gens.append(backing.pack((*range(1, k), 0)))
    return enumerate_group(backing, gens, name=f"S{k}")


@lru_cache(maxsize=None)
def alternating(k):
    if k < 1:
        raise ConstructionError("alternating degree must be >= 1")
    backing = PermBacking(k)
    gens = []
    if k >= 3:
        gens.append(backing.pack((1, 2, 0, *range(3, k))))
    if k >= 4:
        if k % 2:
            gens.append(backing.pack((*range(1, k), 0)))
        else:
            gens.append(backing.pack((0, *range(2, k), 1)))
    return enumerate_group(backing, gens, name=f"A{k}")


@lru_cache(maxsize=None)
def heisenberg(p):
    """Non-abelian group of order p^3 and exponent p, as unitriangular matrices."""
    if p == 2 or not isprime(p):
        raise ConstructionError("heisenberg group needs an odd prime")
    spec = field_make(p)
    x = Matrix(spec, ((1, 1, 0), (0, 1, 0), (0, 0, 1)))
    y = Matrix(spec, ((1, 0, 0), (0, 1, 1), (0, 0, 1)))
    grp = enumerate_group(MatrixBacking(spec, 3), [x, y], name=f"He{p}")
    if len(grp) != p**3:
        raise ConstructionError("heisenberg construction produced a wrong order")
    return grp


@lru_cache(maxsize=None)
def elementary_abelian(p, k):
    """GF(p)^k as an additive group; the table lists coefficient tuples."""
    if not isprime(p) or k < 1:
        raise ConstructionError("elementary abelian group needs a prime and k >= 1")
    backing = VectorBacking(p, k)
    gens = [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]
    return enumerate_group(backing, gens, name=f"C{p}^{k}")


@lru_cache(maxsize=None)
def frobenius42():
    """Order-42 Frobenius group: C7 with its full automorphism group C6 on top."""
    n = cyclic(7)
    h = cyclic(6)
    perms = tuple(tuple((i * pow(3, j, 7)) % 7 for i in range(7)) for j in range(6))
    grp = semidirect_product(n, h, ActionMap(h, n, perms))
    grp.name = "F7"
    return grp


@lru_cache(maxsize=None)
def frobenius56():
    """Order-56 Frobenius group: C2^3 with a fixed-point-free C7 on top."""
    n = elementary_abelian(2, 3)
    h = cyclic(7)
    spec = field_make(2)
    m = companion_matrix(spec, (1, 1, 0, 1))
    perms = []
    power = Matrix.identity(spec, 3)
    for _ in range(7):
        perms.append(tuple(n.index[_matvec(spec, power.rows, v)] for v in n.table))
        power = mat_mul(power, m)
    grp = semidirect_product(n, h, ActionMap(h, n, tuple(perms)))
    grp.name = "F8"
    return grp


# -- products ----------------------------------------------------------------


def direct_product(g, h):
    """Component-wise product; the table is row-major over index pairs."""
    n = len(g) * len(h)
    if n > DEFAULT_CLOSURE_CAP:
        raise GroupError(f"product order {n} exceeds closure cap {DEFAULT_CLOSURE_CAP}")
    backing = DirectProductBacking(g, h)
    width = len(h)
    table = [(i, j) for i in range(len(g)) for j in range(width)]
    index = {pair: pair[0] * width + pair[1] for pair in table}
    gens = [(i, 0) for i in g.generators] + [(0, j) for j in h.generators]
    return Group(backing, table, generator_elements=gens, name=f"{g.name}x{h.name}", index=index)


@dataclass(frozen=True)
class ActionMap:
    """Automorphic action: one permutation of the target's indices per acting element."""

    acting: Group
    target: Group
    perms: tuple


def trivial_action(n, h):
    ident = tuple(range(len(n)))
    return ActionMap(h, n, (ident,) * len(h))


def matrix_action(vectors, mats):
    """Each matrix of an enumerated matrix group acting linearly on a vector group."""
    spec = mats.backing.spec
    perms = tuple(
        tuple(vectors.index[_matvec(spec, m.rows, v)] for v in vectors.table) for m in mats.table
    )
    return ActionMap(mats, vectors, perms)


def _matvec(spec, rows, v):
    mul, add = spec.mul, spec.add
    out = []
    for row in rows:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = add(acc, mul(x, y))
        out.append(acc)
    return tuple(out)


def validate_action(action):
    """Check the ActionMap invariants; raises ConstructionError on failure.

    Generator images are verified to be automorphisms in full; the
    homomorphism law is checked for every element against every generator,
    which pins all remaining images by induction.
    """
    h, n, perms = action.acting, action.target, action.perms
    size = len(n)
    if len(perms) != len(h):
        raise ConstructionError("action must map every acting element")
    ident = tuple(range(size))
    if tuple(perms[0]) != ident:
        raise ConstructionError("identity must act trivially")
    for g in h.generators:
        perm = perms[g]
        if sorted(perm) != list(range(size)) or perm[0] != 0:
            raise ConstructionError("generator image is not an identity-fixing permutation")
        for i in range(size):
            for j in range(size):
                if perm[n.mul(i, j)] != n.mul(perm[i], perm[j]):
                    raise ConstructionError("generator image is not an automorphism")
    for g in h.generators:
        pg = perms[g]
        for i in range(len(h)):
            pi = perms[i]
            expected = tuple(pi[pg[x]] for x in range(size))
            if tuple(perms[h.mul(i, g)]) != expected:
                raise ConstructionError("action is not a homomorphism")


def semidirect_product(n, h, action):
    """Pairs (x, h) with (x1,h1)(x2,h2) = (x1 * a(h1)(x2), h1 h2)."""
    if action.acting is not h or action.target is not n:
        raise ConstructionError("action does not match the given factor groups")
    validate_action(action)
    order = len(n) * len(h)
    if order > DEFAULT_CLOSURE_CAP:
        raise GroupError(f"product order {order} exceeds closure cap {DEFAULT_CLOSURE_CAP}")
    backing = SemidirectBacking(n, h, action.perms)
    width = len(h)
    table = [(x, j) for x in range(len(n)) for j in range(width)]
    index = {pair: pair[0] * width + pair[1] for pair in table}
    gens = [(x, 0) for x in n.generators] + [(0, j) for j in h.generators]
    return Group(backing, table, generator_elements=gens, name=f"{n.name}:{h.name}", index=index)


def wreath_square(g):
    """(G x G) : C2 with the coordinate swap on top."""
    size = len(g)
    if 2 * size * size > DEFAULT_CLOSURE_CAP:
        raise GroupError("wreath square exceeds the closure cap")
    base = direct_product(g, g)
    two = cyclic(2)
    ident = tuple(range(len(base)))
    swap = tuple((t % size) * size + (t // size) for t in range(len(base)))
    grp = semidirect_product(base, two, ActionMap(two, base, (ident, swap)))
    grp.name = f"Wr2({g.name})"
    return grp


# -- matrix-born groups --------------------------------------------------------


def _prime_power(q):
    fac = factorint(q)
    if len(fac) != 1:
        raise ConstructionError(f"{q} is not a prime power")
    ((p, k),) = fac.items()
    return p, k


@lru_cache(maxsize=None)
def psl2(q):
    """PSL(2,q) as the permutation group induced by SL(2,q) on the projective line."""
    if q < 2 or q > 64:
        raise ConstructionError("psl2 supports 2 <= q <= 64")
    p, k = _prime_power(q)
    spec = field_make(p, k)
    alpha = next(x for x in range(1, spec.q) if spec.element_order(x) == spec.q - 1)
    mats = [
        Matrix(spec, ((1, 1), (0, 1))),
        Matrix(spec, ((1, 0), (alpha, 1))),
        Matrix(spec, ((alpha, 0), (0, spec.inv(alpha)))),
    ]
    points, act = projective_line(spec)
    backing = PermBacking(len(points))
    gens = [backing.pack(act(m, pt) for pt in points) for m in mats]
    grp = enumerate_group(backing, gens, name=f"PSL(2,{q})")
    expected = q * (q * q - 1) // gcd(2, q - 1)
    if len(grp) != expected:
        raise ConstructionError(f"PSL(2,{q}) closure has order {len(grp)}, expected {expected}")
    return grp


@lru_cache(maxsize=None)
def suzuki8():
    """Sz(8) as 4x4 matrices over GF(8), from the standard generator triple.

    The unipotent family uses the twist t(x) = x^4 (t(t(x)) = x^2 on GF(8));
    the torus element carries weights (3, 2, -2, -3), and the antidiagonal
    involution swaps the flag.
    """
    spec = field_make(2, 3)
    th = lambda x: spec.pow(x, 4)
    mul, add = spec.mul, spec.add

    def unipotent(a, b):
        r2 = add(mul(a, th(a)), b)  # a^(1+t) + b
        r3 = add(add(mul(mul(a, a), th(a)), mul(a, b)), th(b))  # a^(2+t) + ab + b^t
        return Matrix(spec, ((1, 0, 0, 0), (a, 1, 0, 0), (r2, th(a), 1, 0), (r3, b, a, 1)))

    alpha = 2  # the class of x, a multiplicative generator
    torus = Matrix(
        spec,
        (
            (spec.pow(alpha, 3), 0, 0, 0),
            (0, spec.pow(alpha, 2), 0, 0),
            (0, 0, spec.pow(alpha, -2), 0),
            (0, 0, 0, spec.pow(alpha, -3)),
        ),
    )
    tau = Matrix(spec, ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)))
    gens = [unipotent(1, 0), unipotent(0, 1), torus, tau]
    grp = enumerate_group(MatrixBacking(spec, 4), gens, name="Sz(8)")
    if len(grp) != 29120:
        raise ConstructionError(f"Sz(8) closure has order {len(grp)}, expected 29120")
    return grp


# -- relation-driven action searches ------------------------------------------


@dataclass(frozen=True)
class PresentationSpec:
    """Generators-and-relators data plus the intended group order.

    Relators are words of signed 1-based generator indices; the order field
    pins the size a faithful image must have.
    """

    generators: int
    relators: tuple
    order: int

    def __post_init__(self):
        if self.generators not in (1, 2):
            raise ConstructionError("presentations are limited to at most 2 generators")
        if not self.relators or any(not w for w in self.relators):
            raise ConstructionError("relators must be non-empty words")


_GL_ORDER_CAP = 10**6


def general_linear(spec, dim):
    """All invertible dim x dim matrices, in lexicographic entry order."""
    q = spec.q
    order = 1
    for i in range(dim):
        order *= q**dim - q**i
    if order > _GL_ORDER_CAP:
        raise ConstructionError(f"GL({dim},{q}) order {order} exceeds search cap")
    out = []
    for entries in itertools.product(range(q), repeat=dim * dim):
        rows = tuple(entries[i * dim : (i + 1) * dim] for i in range(dim))
        m = Matrix(spec, rows)
        if mat_det(m) != 0:
            out.append(m)
    return out


def _word_value(images, inverses, word, ident):
    m = ident
    for s in word:
        m = mat_mul(m, images[s - 1] if s > 0 else inverses[-s - 1])
    return m


def find_action_by_relations(pres, dim, p, oracle=None):
    """Search GL(dim,p) for faithful generator images of a presented group.

    Returns the actions on GF(p)^dim, deduplicated by the order sequence of
    the semidirect product they induce; if an oracle sequence is given only
    matching actions survive.  Raises ConstructionError when nothing fits.
    """
    spec = field_make(p)
    gl = general_linear(spec, dim)
    ident = Matrix.identity(spec, dim)
    inv_of = {m: mat_inv(m) for m in gl}
    vectors = elementary_abelian(p, dim)

    if pres.generators == 1:
        first_only, rest = pres.relators, ()
    else:
        first_only = tuple(w for w in pres.relators if all(abs(s) == 1 for s in w))
        rest = tuple(w for w in pres.relators if any(abs(s) == 2 for s in w))

    def candidates():
        for a in gl:
            ia = inv_of[a]
            if not all(_word_value([a], [ia], w, ident) == ident for w in first_only):
                continue
            if pres.generators == 1:
                yield [a]
                continue
            for b in gl:
                images, inverses = [a, b], [ia, inv_of[b]]
                if all(_word_value(images, inverses, w, ident) == ident for w in rest):
                    yield images

    results = []
    seen_subgroups = set()
    seen_sequences = set()
    backing = MatrixBacking(spec, dim)
    for images in candidates():
        try:
            image = enumerate_group(backing, images, cap=pres.order)
        except GroupError:
            continue
        if len(image) != pres.order:
            continue
        key = frozenset(image.table)
        if key in seen_subgroups:
            continue
        seen_subgroups.add(key)
        action = matrix_action(vectors, image)
        seq = os_of_group(semidirect_product(vectors, image, action))
        if seq.entries in seen_sequences:
            continue
        seen_sequences.add(seq.entries)
        if oracle is not None and seq.entries != oracle.entries:
            continue
        results.append(action)
    if not results:
        raise ConstructionError("no action satisfying the relations (and oracle) was found")
    return results


# -- the named catalog ---------------------------------------------------------

_DIC12_PRESENTATION = PresentationSpec(2, ((1, 1, 1, 1, 1, 1), (2, 2, -1, -1, -1), (-2, 1, 2, 1)), 12)
_D8_PRESENTATION = PresentationSpec(2, ((1, 1, 1, 1), (2, 2), (-2, 1, 2, 1)), 8)

# Sequences that pin which semidirect action is intended when several exist.
_PINNED_SEQUENCES = {
    "SD_300_23": parse_pairs("(1,1)(2,25)(3,50)(4,150)(5,24)(6,50)"),
    "SD_72_35": parse_pairs("(1,1)(2,21)(3,8)(4,18)(6,24)"),
}


@lru_cache(maxsize=None)
def _oracle_matched(name, pres, dim, p):
    action = find_action_by_relations(pres, dim, p, oracle=_PINNED_SEQUENCES[name])[0]
    grp = semidirect_product(action.target, action.acting, action)
    grp.name = name
    return grp


@lru_cache(maxsize=None)
def _sd_72_35():
    """The supersolvable order-72 companion of the wreath square of S3.

    Both groups are C3^2 : D8 semidirect products with identical order
    sequences, so a sequence oracle cannot separate them; this one acts
    through the quotient of D8 by the Klein subgroup generated by the
    half-turn and a reflection, with the rotation inverting every vector.
    That action fixes every line, which forces supersolvability.
    """
    from .classify import is_supersolvable

    n = elementary_abelian(3, 2)
    h = dihedral(8)
    rot, ref = h.generators
    kernel = set(subgroup_closure(h, (h.mul(rot, rot), ref)).members)
    ident = tuple(range(len(n)))
    negate = tuple(n.index[tuple((3 - x) % 3 for x in v)] for v in n.table)
    perms = tuple(ident if j in kernel else negate for j in range(len(h)))
    grp = semidirect_product(n, h, ActionMap(h, n, perms))
    grp.name = "SD_72_35"
    if os_of_group(grp).entries != _PINNED_SEQUENCES["SD_72_35"].entries:
        raise ConstructionError("SD_72_35 produced a wrong order sequence")
    if not is_supersolvable(grp):
        raise ConstructionError("SD_72_35 must be supersolvable")
    return grp


@lru_cache(maxsize=None)
def _c7_rtimes_a4():
    """C7 : A4 acting through the unique order-3 quotient of A4."""
    n = cyclic(7)
    h = alternating(4)
    v = derived_subgroup(h)
    q = quotient(h, v)
    coset_of = q.backing.coset_of
    perms = tuple(
        tuple((i * pow(2, coset_of[j], 7)) % 7 for i in range(7)) for j in range(len(h))
    )
    grp = semidirect_product(n, h, ActionMap(h, n, perms))
    grp.name = "C7:A4"
    return grp


CATALOG_PARAMETRIZED = frozenset({"CpxA4", "S3xD2p", "C5pxA5", "CpxSD300", "CpxS3wrC2", "CpxSD72"})

_CATALOG_FIXED = {
    "C5xA5": lambda: direct_product(cyclic(5), alternating(5)),
    "C7xA5": lambda: direct_product(cyclic(7), alternating(5)),
    "C13xA5": lambda: direct_product(cyclic(13), alternating(5)),
    "C15xA5": lambda: direct_product(cyclic(15), alternating(5)),
    "SD_300_23": lambda: _oracle_matched("SD_300_23", _DIC12_PRESENTATION, 2, 5),
    "SD_72_35": _sd_72_35,
    "S3wrC2": lambda: wreath_square(symmetric(3)),
    "C4xF8": lambda: direct_product(cyclic(4), frobenius56()),
    "C22xF8": lambda: direct_product(elementary_abelian(2, 2), frobenius56()),
    "C24xD14": lambda: direct_product(elementary_abelian(2, 4), dihedral(14)),
    "D10xF7": lambda: direct_product(dihedral(10), frobenius42()),
    "C35xA4": lambda: direct_product(cyclic(35), alternating(4)),
    "C5xC7A4": lambda: direct_product(cyclic(5), _c7_rtimes_a4()),
}

_CATALOG_PRIME = {
    "CpxA4": lambda p: direct_product(cyclic(p), alternating(4)),
    "S3xD2p": lambda p: direct_product(symmetric(3), dihedral(2 * p)),
    "C5pxA5": lambda p: direct_product(cyclic(5 * p), alternating(5)),
    "CpxSD300": lambda p: direct_product(cyclic(p), catalog("SD_300_23")),
    "CpxS3wrC2": lambda p: direct_product(cyclic(p), catalog("S3wrC2")),
    "CpxSD72": lambda p: direct_product(cyclic(p), catalog("SD_72_35")),
}


def catalog_names():
    return tuple(sorted(_CATALOG_FIXED)) + tuple(sorted(CATALOG_PARAMETRIZED))


@lru_cache(maxsize=None)
def catalog(name, prime=None):
    """Catalog entry by stable name; parametrized names take a prime."""
    if name in _CATALOG_FIXED:
        if prime is not None:
            raise ConstructionError(f"catalog entry {name!r} takes no prime argument")
        return _CATALOG_FIXED[name]()
    if name in _CATALOG_PRIME:
        if prime is None:
            raise ConstructionError(f"catalog entry {name!r} requires a prime argument")
        if not isprime(prime):
            raise ConstructionError(f"{prime} is not prime")
        return _CATALOG_PRIME[name](prime)
    raise ConstructionError(f"unknown catalog name {name!r}")
