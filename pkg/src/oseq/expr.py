"""Expression DSL naming groups: recursive-descent parser, AST, evaluation.

Grammar (ASCII, whitespace insignificant):

    expr := term ('x' term)*          left-associative direct product
    term := atom ('^' INT)*
    atom := NAME '(' args ')' | NAME

Names: C, D, Dic, S, A, He, F7, F8, PSL2, Sz8, Wr2, Cat.  ``C(5)^2`` is
C5 x C5; ``Cat(name[, prime])`` resolves through the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import construct
from .construct import ConstructionError

__all__ = [
    "ParseError",
    "Cyclic",
    "CyclicPower",
    "Dihedral",
    "Dicyclic",
    "Sym",
    "Alt",
    "Heisenberg",
    "Frob42",
    "Frob56",
    "Psl2",
    "Suzuki8",
    "Product",
    "WreathSquare",
    "CatalogRef",
    "parse",
    "print_expr",
    "build",
]


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class CyclicPower:
    n: int
    k: int


@dataclass(frozen=True)
class Dihedral:
    order: int


@dataclass(frozen=True)
class Dicyclic:
    order: int


@dataclass(frozen=True)
class Sym:
    k: int


@dataclass(frozen=True)
class Alt:
    k: int


@dataclass(frozen=True)
class Heisenberg:
    p: int


@dataclass(frozen=True)
class Frob42:
    pass


@dataclass(frozen=True)
class Frob56:
    pass


@dataclass(frozen=True)
class Psl2:
    q: int


@dataclass(frozen=True)
class Suzuki8:
    pass


@dataclass(frozen=True)
class Product:
    left: object
    right: object


@dataclass(frozen=True)
class WreathSquare:
    inner: object


@dataclass(frozen=True)
class CatalogRef:
    name: str
    prime: int | None = None


def _lex(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "(),^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word == "x":
                tokens.append(("x", "x", i))
                i = j
            elif word[0] == "x" and len(word) > 1:
                tokens.append(("x", "x", i))
                i += 1  # re-lex the rest of the word
            else:
                tokens.append(("name", word, i))
                i = j
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


_INT_ARG = {
    "C": Cyclic,
    "D": Dihedral,
    "Dic": Dicyclic,
    "S": Sym,
    "A": Alt,
    "He": Heisenberg,
    "PSL2": Psl2,
}
_BARE = {"F7": Frob42, "F8": Frob56, "Sz8": Suzuki8}


class _Parser:
    def __init__(self, text):
        self.tokens = _lex(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] == "x":
            self.take()
            node = Product(node, self.term())
        return node

    def term(self):
        node = self.atom()
        while self.peek()[0] == "^":
            at = self.take()[2]
            k = self.take("int")[1]
            node = self._power(node, k, at)
        return node

    @staticmethod
    def _power(node, k, pos):
        if k < 1:
            raise ParseError("exponent must be >= 1", pos)
        if k == 1:
            return node
        if isinstance(node, Cyclic):
            return CyclicPower(node.n, k)
        if isinstance(node, CyclicPower):
            return CyclicPower(node.n, node.k * k)
        out = node
        for _ in range(k - 1):
            out = Product(out, node)
        return out

    def atom(self):
        kind, word, at = self.take("name") if self.peek()[0] == "name" else self.take()
        if kind != "name":
            raise ParseError(f"expected a constructor name, found {word!r}", at)
        if word in _BARE:
            if self.peek()[0] == "(":
                self.take()
                self.take(")")
            return _BARE[word]()
        if word in _INT_ARG:
            self.take("(")
            value = self.take("int")[1]
            self.take(")")
            return _INT_ARG[word](value)
        if word == "Wr2":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return WreathSquare(inner)
        if word == "Cat":
            self.take("(")
            name = self.take("name")[1]
            prime = None
            if self.peek()[0] == ",":
                self.take()
                prime = self.take("int")[1]
            self.take(")")
            return CatalogRef(name, prime)
        raise ParseError(f"unknown constructor {word!r}", at)


def parse(text):
    return _Parser(text).parse()


def print_expr(node):
    """Canonical text; parse(print_expr(e)) == e on canonical forms."""
    if isinstance(node, Cyclic):
        return f"C({node.n})"
    if isinstance(node, CyclicPower):
        return f"C({node.n})^{node.k}"
    if isinstance(node, Dihedral):
        return f"D({node.order})"
    if isinstance(node, Dicyclic):
        return f"Dic({node.order})"
    if isinstance(node, Sym):
        return f"S({node.k})"
    if isinstance(node, Alt):
        return f"A({node.k})"
    if isinstance(node, Heisenberg):
        return f"He({node.p})"
    if isinstance(node, Frob42):
        return "F7"
    if isinstance(node, Frob56):
        return "F8"
    if isinstance(node, Psl2):
        return f"PSL2({node.q})"
    if isinstance(node, Suzuki8):
        return "Sz8"
    if isinstance(node, Product):
        return f"{print_expr(node.left)} x {print_expr(node.right)}"
    if isinstance(node, WreathSquare):
        return f"Wr2({print_expr(node.inner)})"
    if isinstance(node, CatalogRef):
        if node.prime is None:
            return f"Cat({node.name})"
        return f"Cat({node.name}, {node.prime})"
    raise TypeError(f"not an expression node: {node!r}")


def build(node, features=frozenset()):
    """Evaluate an expression to an enumerated group."""
    if isinstance(node, Cyclic):
        return construct.cyclic(node.n)
    if isinstance(node, CyclicPower):
        out = construct.cyclic(node.n)
        for _ in range(node.k - 1):
            out = construct.direct_product(out, construct.cyclic(node.n))
        return out
    if isinstance(node, Dihedral):
        return construct.dihedral(node.order)
    if isinstance(node, Dicyclic):
        return construct.dicyclic(node.order)
    if isinstance(node, Sym):
        return construct.symmetric(node.k)
    if isinstance(node, Alt):
        return construct.alternating(node.k)
    if isinstance(node, Heisenberg):
        return construct.heisenberg(node.p)
    if isinstance(node, Frob42):
        return construct.frobenius42()
    if isinstance(node, Frob56):
        return construct.frobenius56()
    if isinstance(node, Psl2):
        return construct.psl2(node.q)
    if isinstance(node, Suzuki8):
        if "sz8" not in features:
            raise ConstructionError("Sz8 is gated behind the sz8 feature flag")
        return construct.suzuki8()
    if isinstance(node, Product):
        return construct.direct_product(build(node.left, features), build(node.right, features))
    if isinstance(node, WreathSquare):
        return construct.wreath_square(build(node.inner, features))
    if isinstance(node, CatalogRef):
        return construct.catalog(node.name, node.prime)
    raise TypeError(f"not an expression node: {node!r}")
