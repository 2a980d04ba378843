"""Exact arithmetic in GF(p) and GF(p^k), plus square matrices over them.

Field elements are canonically encoded as integers in [0, p^k): the base-p
packing of the coefficient vector of the residue polynomial, least
significant digit = constant term.  That encoding is the element key used
for hashing everywhere else in the package.  Moduli are pinned so the
encoding is identical across runs.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from sympy import isprime

__all__ = [
    "FieldError",
    "FieldSpec",
    "FieldElement",
    "Matrix",
    "field_make",
    "mat_mul",
    "mat_pow",
    "mat_inv",
    "mat_det",
    "mat_order",
    "companion_matrix",
    "projective_line",
    "projective_action",
    "MATRIX_ORDER_CAP",
]


class FieldError(ValueError):
    """Bad field parameters or an undefined field operation."""


MAX_EXTENSION_DEGREE = 8
MAX_FIELD_SIZE = 4096
MATRIX_ORDER_CAP = 10**6
_TABLE_LIMIT = 256  # full add/mul tables up to this field size

# Pinned irreducible moduli (ascending coefficients, monic).
_PINNED_MODULI = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (2, 6): (1, 1, 0, 0, 0, 0, 1),  # x^6 + x + 1
}


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_rem(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            f = (c * inv_lead) % p
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    return _trim(a[:db])


def _is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree <= k/2."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _poly_rem(modulus, (*tail, 1), p):
                return False
    return True


@lru_cache(maxsize=None)
def _search_modulus(p, k):
    """First irreducible monic of degree k, by coefficient-tuple order."""
    for tail in itertools.product(range(p), repeat=k):
        cand = (*tail, 1)
        if _is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible modulus of degree {k} over GF({p}) found")


class FieldSpec:
    """GF(p^k) with a pinned modulus.

    Immutable after construction; all operations are pure functions of
    int-encoded elements and safe for concurrent use.
    """

    __slots__ = ("p", "k", "q", "modulus", "_add", "_mul", "_inv")

    def __init__(self, p, k, modulus):
        if not isprime(p):
            raise FieldError(f"p={p} is not prime")
        if not 1 <= k <= MAX_EXTENSION_DEGREE:
            raise FieldError(f"extension degree {k} outside 1..{MAX_EXTENSION_DEGREE}")
        q = p**k
        if q > MAX_FIELD_SIZE:
            raise FieldError(f"field size {q} exceeds supported maximum {MAX_FIELD_SIZE}")
        modulus = _trim(modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1 or any(not 0 <= c < p for c in modulus):
            raise FieldError("modulus must be monic of degree k with coefficients in [0, p)")
        if k > 1 and not _is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is not irreducible over GF({p})")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = modulus
        if q <= _TABLE_LIMIT:
            self._build_tables()
        else:
            self._add = self._mul = self._inv = None

    # -- encoding ---------------------------------------------------------

    def coeffs(self, a):
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return tuple(out)

    def encode(self, coeffs):
        x = 0
        for c in reversed(tuple(coeffs)):
            x = x * self.p + (c % self.p)
        return x

    def elements(self):
        return range(self.q)

    # -- arithmetic on int-encoded elements -------------------------------

    def _build_tables(self):
        q, p = self.q, self.p
        dec = [self.coeffs(a) for a in range(q)]
        add = [0] * (q * q)
        mul = [0] * (q * q)
        for a in range(q):
            ca = dec[a]
            for b in range(a, q):
                cb = dec[b]
                s = self.encode((x + y) % p for x, y in zip(ca, cb))
                add[a * q + b] = add[b * q + a] = s
                m = self.encode_poly(_poly_mul(ca, cb, p))
                mul[a * q + b] = mul[b * q + a] = m
        inv = [0] * q
        for a in range(1, q):
            row = a * q
            for b in range(1, q):
                if mul[row + b] == 1:
                    inv[a] = b
                    break
        self._add, self._mul, self._inv = add, mul, inv

    def encode_poly(self, poly):
        poly = _poly_rem(poly, self.modulus, self.p) if len(poly) > self.k else poly
        return self.encode(poly + (0,) * (self.k - len(poly)))

    def add(self, a, b):
        if self._add is not None:
            return self._add[a * self.q + b]
        p = self.p
        return self.encode((x + y) % p for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a):
        p = self.p
        return self.encode((p - c) % p for c in self.coeffs(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul is not None:
            return self._mul[a * self.q + b]
        return self.encode_poly(_poly_mul(self.coeffs(a), self.coeffs(b), self.p))

    def inv(self, a):
        if a == 0:
            raise FieldError("zero has no multiplicative inverse")
        if self._inv is not None:
            return self._inv[a]
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def element_order(self, a):
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        x, o = a, 1
        while x != 1:
            x = self.mul(x, a)
            o += 1
        return o

    def element(self, value):
        return FieldElement(self, value)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"


@lru_cache(maxsize=None)
def field_make(p, k=1):
    """GF(p^k) with the pinned modulus table; prime fields use modulus x."""
    if k == 1:
        modulus = (0, 1)
    elif (p, k) in _PINNED_MODULI:
        modulus = _PINNED_MODULI[p, k]
    else:
        if not isprime(p):
            raise FieldError(f"p={p} is not prime")
        if not 1 <= k <= MAX_EXTENSION_DEGREE:
            raise FieldError(f"extension degree {k} outside 1..{MAX_EXTENSION_DEGREE}")
        modulus = _search_modulus(p, k)
    return FieldSpec(p, k, modulus)


class FieldElement:
    """Element of a FieldSpec, wrapping the canonical integer encoding."""

    __slots__ = ("spec", "value")

    def __init__(self, spec, value):
        if not 0 <= value < spec.q:
            raise FieldError(f"encoding {value} outside [0, {spec.q})")
        self.spec = spec
        self.value = value

    @classmethod
    def from_coeffs(cls, spec, coeffs):
        return cls(spec, spec.encode(coeffs))

    @property
    def coeffs(self):
        return self.spec.coeffs(self.value)

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise FieldError("operands from different fields")
        return other.value

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.value, self._check(other)))

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.value, self._check(other)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.value, self._check(other)))

    def __truediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self.value, self._check(other)))

    def __pow__(self, e):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.spec, self.spec.inv(self.value))

    def order(self):
        return self.spec.element_order(self.value)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.spec == self.spec
            and other.value == self.value
        )

    def __hash__(self):
        return hash((self.value, self.spec.q))

    def __repr__(self):
        return f"FieldElement({self.spec!r}, {self.value})"


class Matrix:
    """Square matrix over a FieldSpec; rows hold int-encoded entries."""

    __slots__ = ("spec", "rows", "_hash")

    def __init__(self, spec, rows):
        rows = tuple(tuple(r) for r in rows)
        d = len(rows)
        if d == 0 or any(len(r) != d for r in rows):
            raise FieldError("matrix must be square and non-empty")
        self.spec = spec
        self.rows = rows
        self._hash = None

    @classmethod
    def identity(cls, spec, dim):
        return cls(spec, tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)))

    @property
    def dim(self):
        return len(self.rows)

    def element(self, i, j):
        return FieldElement(self.spec, self.rows[i][j])

    def __mul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, Matrix) and other.rows == self.rows and other.spec == self.spec

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash(self.rows)
        return h

    def __repr__(self):
        return f"Matrix({self.spec!r}, {self.rows})"


def _check_pair(a, b):
    if a.spec != b.spec:
        raise FieldError("matrices over different fields")
    if a.dim != b.dim:
        raise FieldError("matrix dimension mismatch")


def mat_mul(a, b):
    _check_pair(a, b)
    spec = a.spec
    mul, add = spec.mul, spec.add
    cols = tuple(zip(*b.rows))
    out = []
    for row in a.rows:
        line = []
        for col in cols:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = add(acc, mul(x, y))
            line.append(acc)
        out.append(tuple(line))
    return Matrix(spec, out)


def mat_pow(a, e):
    if e < 0:
        a, e = mat_inv(a), -e
    r = Matrix.identity(a.spec, a.dim)
    while e:
        if e & 1:
            r = mat_mul(r, a)
        a = mat_mul(a, a)
        e >>= 1
    return r


def mat_det(a):
    spec = a.spec
    rows = [list(r) for r in a.rows]
    d = a.dim
    det = 1
    for c in range(d):
        piv = next((r for r in range(c, d) if rows[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = spec.neg(det)
        pivot = rows[c][c]
        det = spec.mul(det, pivot)
        pinv = spec.inv(pivot)
        for r in range(c + 1, d):
            f = spec.mul(rows[r][c], pinv)
            if f:
                for j in range(c, d):
                    rows[r][j] = spec.sub(rows[r][j], spec.mul(f, rows[c][j]))
    return det


def mat_inv(a):
    spec = a.spec
    d = a.dim
    rows = [list(r) + [1 if i == j else 0 for j in range(d)] for i, r in enumerate(a.rows)]
    for c in range(d):
        piv = next((r for r in range(c, d) if rows[r][c]), None)
        if piv is None:
            raise FieldError("singular matrix")
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
        pinv = spec.inv(rows[c][c])
        rows[c] = [spec.mul(pinv, x) for x in rows[c]]
        for r in range(d):
            if r != c and rows[r][c]:
                f = rows[r][c]
                rows[r] = [spec.sub(x, spec.mul(f, y)) for x, y in zip(rows[r], rows[c])]
    return Matrix(spec, tuple(tuple(row[d:]) for row in rows))


def mat_order(a, cap=MATRIX_ORDER_CAP):
    """Least m >= 1 with a^m = identity, by iteration."""
    ident = Matrix.identity(a.spec, a.dim)
    x, m = a, 1
    while x != ident:
        x = mat_mul(x, a)
        m += 1
        if m > cap:
            raise FieldError(f"matrix order exceeds cap {cap}")
    return m


def companion_matrix(spec, poly):
    """Companion matrix of a monic polynomial (ascending coefficients)."""
    poly = tuple(poly)
    d = len(poly) - 1
    if d < 1 or poly[-1] != 1:
        raise FieldError("companion matrix needs a monic polynomial of degree >= 1")
    rows = []
    for i in range(d):
        row = [0] * d
        if i > 0:
            row[i - 1] = 1
        row[d - 1] = spec.neg(poly[i])
        rows.append(tuple(row))
    return Matrix(spec, rows)


def _proj_apply(spec, rows, point):
    (a, b), (c, d) = rows
    if point == 0:  # [1:0]
        num, den = a, c
    else:
        x = point - 1
        num = spec.add(spec.mul(a, x), b)
        den = spec.add(spec.mul(c, x), d)
    if den == 0:
        return 0
    return 1 + spec.mul(num, spec.inv(den))


def projective_line(spec):
    """Points of the projective line over the field plus the matrix action.

    Point 0 is [1:0]; point 1+x is [x:1] for the element encoded x.
    Scalar matrices act trivially.
    """
    points = list(range(spec.q + 1))

    def action(m, point):
        return projective_action(m, point)

    return points, action


def projective_action(m, point):
    if m.dim != 2:
        raise FieldError("projective line action needs a 2x2 matrix")
    if mat_det(m) == 0:
        raise FieldError("singular matrix cannot act on the projective line")
    return _proj_apply(m.spec, m.rows, point)
