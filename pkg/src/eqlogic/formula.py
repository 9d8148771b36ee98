"""Formula trees, the text grammar, and formula enumeration.

Only five node kinds exist: ``Bot``, ``Atom``, ``And``, ``Or`` and ``Implies``.
Negation and truth are sugar resolved by the parser (``~a`` is ``a -> _|_``,
``T`` is ``_|_ -> _|_``) and re-sugared by :func:`render`.

Grammar, loosest binding first::

    imp   := disj ( '->' imp )?           right associative
    disj  := conj ( '|' conj )*           left associative
    conj  := unary ( '&' unary )*         left associative
    unary := ( '~' | 'not' ) unary | primary
    primary := ATOM | '_|_' | 'bot' | 'T' | 'top' | '(' imp ')'

The Unicode symbols ⊥ ⊤ ¬ ∧ ∨ → are accepted as aliases.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .core import Signature


class Formula:
    __slots__ = ()

    def __str__(self):
        return render(self)


@dataclass(frozen=True, eq=True)
class Bot(Formula):
    def __hash__(self):
        return 0x0B07


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((type(self).__name__, self.left, self.right)))

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=True)
class And(_Binary):
    __hash__ = _Binary.__hash__


@dataclass(frozen=True, eq=True)
class Or(_Binary):
    __hash__ = _Binary.__hash__


@dataclass(frozen=True, eq=True)
class Implies(_Binary):
    __hash__ = _Binary.__hash__


BOT = Bot()
TOP = Implies(BOT, BOT)


def neg(f: Formula) -> Implies:
    return Implies(f, BOT)


def conj(parts: Sequence[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``T``."""
    if not parts:
        return TOP
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts: Sequence[Formula]) -> Formula:
    """Left-nested disjunction; the empty disjunction is ``_|_``."""
    if not parts:
        return BOT
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def iff(a: Formula, b: Formula) -> Formula:
    return And(Implies(a, b), Implies(b, a))


def is_negation(f: Formula) -> bool:
    return isinstance(f, Implies) and isinstance(f.right, Bot) and not isinstance(f.left, Bot)


# -- structure


def atom_names(f: Formula) -> set[str]:
    out: set[str] = set()
    stack = [f]
    visited: set[int] = set()
    while stack:
        g = stack.pop()
        if id(g) in visited:
            continue
        visited.add(id(g))
        if isinstance(g, Atom):
            out.add(g.name)
        elif isinstance(g, _Binary):
            stack.append(g.left)
            stack.append(g.right)
    return out


def atoms(*fs: Formula) -> Signature:
    """Alphabetical signature of every atom occurring in the given formulas."""
    names: set[str] = set()
    for f in fs:
        names |= atom_names(f)
    return Signature(tuple(sorted(names)))


def subformulas(f: Formula) -> list[Formula]:
    """Every node of the tree in post-order (children before parents)."""
    out: list[Formula] = []

    def walk(g):
        if isinstance(g, _Binary):
            walk(g.left)
            walk(g.right)
        out.append(g)

    walk(f)
    return out


def size(f: Formula) -> int:
    if isinstance(f, _Binary):
        return 1 + size(f.left) + size(f.right)
    return 1


# -- parsing


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at offset {pos}")
        self.pos = pos


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<bot>_\|_|⊥)
  | (?P<imp>->|→)
  | (?P<not>~|¬)
  | (?P<and>&|∧)
  | (?P<or>\||∨)
  | (?P<top>⊤)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<ident>[a-zA-Z][a-zA-Z0-9_]*)
    """,
    re.VERBOSE,
)

_KEYWORDS = {"bot": "bot", "top": "top", "T": "top", "not": "not"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "ident":
            kind = _KEYWORDS.get(m.group(), "ident")
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self.imp()
        kind, val, pos = self.peek()
        if kind == "rpar":
            raise ParseError("unmatched ')'", pos)
        if kind != "eof":
            raise ParseError(f"unexpected {val!r}", pos)
        return f

    def imp(self) -> Formula:
        left = self.disj()
        if self.peek()[0] == "imp":
            self.take()
            return Implies(left, self.imp())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek()[0] == "or":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek()[0] == "and":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.peek()[0] == "not":
            self.take()
            return neg(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        kind, val, pos = self.take()
        if kind == "ident":
            return Atom(val)
        if kind == "bot":
            return BOT
        if kind == "top":
            return TOP
        if kind == "lpar":
            f = self.imp()
            k2, v2, p2 = self.take()
            if k2 != "rpar":
                if k2 == "eof":
                    raise ParseError("unclosed '('", pos)
                raise ParseError(f"expected ')' but found {v2!r}", p2)
            return f
        if kind == "eof":
            raise ParseError("expected a formula but input ended", pos)
        raise ParseError(f"expected a formula but found {val!r}", pos)


def parse(text: str) -> Formula:
    return _Parser(text).parse()


# -- rendering

_PREC_IMP, _PREC_OR, _PREC_AND, _PREC_ATOM = 1, 2, 3, 4


def _prec(f: Formula) -> int:
    if isinstance(f, Implies):
        return _PREC_ATOM if (f == TOP or is_negation(f)) else _PREC_IMP
    if isinstance(f, Or):
        return _PREC_OR
    if isinstance(f, And):
        return _PREC_AND
    return _PREC_ATOM


def render(f: Formula) -> str:
    """ASCII text that :func:`parse` maps back to ``f``, with minimal parentheses."""

    def wrap(g, ok):
        s = render(g)
        return s if ok else f"({s})"

    if isinstance(f, Bot):
        return "_|_"
    if isinstance(f, Atom):
        return f.name
    if f == TOP:
        return "T"
    if is_negation(f):
        return "~" + wrap(f.left, _prec(f.left) == _PREC_ATOM)
    p = _prec(f)
    op = {And: "&", Or: "|", Implies: "->"}[type(f)]
    if isinstance(f, Implies):
        left = wrap(f.left, _prec(f.left) > p)
        right = wrap(f.right, _prec(f.right) >= p)
    else:
        left = wrap(f.left, _prec(f.left) >= p)
        right = wrap(f.right, _prec(f.right) > p)
    return f"{left} {op} {right}"


# -- enumeration


_CONNECTIVES = (And, Or, Implies)


@lru_cache(maxsize=None)
def _exact(names: tuple[str, ...], nodes: int, kinds: tuple[type, ...]) -> tuple[Formula, ...]:
    if nodes == 1:
        return (BOT,) + tuple(Atom(a) for a in names)
    out = []
    for k in kinds:
        for left_n in range(1, nodes - 1):
            for left in _exact(names, left_n, kinds):
                for right in _exact(names, nodes - 1 - left_n, kinds):
                    out.append(k(left, right))
    return tuple(out)


def enumerate_formulas(
    names: Sequence[str], max_nodes: int, connectives: Sequence[type] = _CONNECTIVES
) -> Iterator[Formula]:
    """Every formula over ``names`` with at most ``max_nodes`` tree nodes, smallest first."""
    kinds = tuple(connectives)
    for n in range(1, max_nodes + 1):
        yield from _exact(tuple(names), n, kinds)


def random_formula(rng: random.Random, names: Sequence[str], max_nodes: int) -> Formula:
    """Random tree with an odd node count drawn uniformly from [1, max_nodes]."""
    nodes = rng.randrange(1, max_nodes + 1, 2)

    def build(k):
        if k == 1:
            return rng.choice([BOT] + [Atom(a) for a in names])
        left = rng.randrange(1, k - 1, 2)
        return rng.choice(_CONNECTIVES)(build(left), build(k - 1 - left))

    return build(nodes)
