"""Propositional syntax and exact truth-table semantics.

Sentences over a small fixed vocabulary are parsed into ASTs and evaluated
into *truth masks*: unsigned integers of width 2^n whose bit v is set iff
the sentence is true under valuation index v. Bit j of the valuation index
v gives the truth value of the j-th vocabulary variable, so with vocabulary
(p, b, f) the index is v = p + 2*b + 4*f and mask(p) = 0xAA.

Logically equivalent sentences have identical masks; the mask is the
semantic identity used everywhere else in the package. Classical
entailment is the bit-subset test: a entails b iff a & ~b == 0.

Grammar (ASCII and Unicode spellings both accepted; `render` emits ASCII):

    formula     := implication
    implication := disjunction ( '->' implication )?        right-associative
    disjunction := conjunction ( '|' conjunction )*         left-associative
    conjunction := negation ( '&' negation )*               left-associative
    negation    := ( '!' | '~' | '¬' ) negation | atom
    atom        := 'true' | '⊤' | 'false' | '⊥' | IDENT | '(' formula ')'

Precedence: ¬ > ∧ > ∨ > →. Identifiers match [a-z_][a-z0-9_]*.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .errors import FormulaSyntaxError, UnknownVariableError, VocabularyTooLargeError

IDENT_RE = re.compile(r"[a-z_][a-z0-9_]*")

#: Hard cap on vocabulary size in exact mode. n=5 (2^32-element algebra)
#: is permitted only with an explicit flag; nothing larger ever is.
DEFAULT_MAX_VARS = 4
ABSOLUTE_MAX_VARS = 5

#: Full-algebra enumeration (2^(2^n) masks) is capped separately.
ENUMERATION_MAX_VARS = 4


@dataclass(frozen=True)
class Vocabulary:
    """An ordered tuple of distinct variable names fixing the language."""

    names: tuple[str, ...]

    def __init__(self, names, allow_large: bool = False):
        names = tuple(names)
        if not names:
            raise ValueError("vocabulary must contain at least one variable")
        limit = ABSOLUTE_MAX_VARS if allow_large else DEFAULT_MAX_VARS
        if len(names) > limit:
            raise VocabularyTooLargeError(
                f"{len(names)} variables exceeds the cap of {limit}"
                + ("" if allow_large else " (pass allow_large=True for n=5)"))
        seen = set()
        for name in names:
            if not IDENT_RE.fullmatch(name) or name in ("true", "false"):
                raise ValueError(f"bad variable name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name {name!r}")
            seen.add(name)
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def width(self) -> int:
        """Number of valuations, 2^n; masks are ints of this bit width."""
        return 1 << len(self.names)

    @property
    def full(self) -> int:
        """Mask of ⊤: all valuations."""
        return (1 << self.width) - 1

    @property
    def size(self) -> int:
        """Number of algebra elements, 2^(2^n)."""
        return 1 << self.width

    def var_mask(self, j: int) -> int:
        """Mask of the j-th variable: bits at valuations whose bit j is set."""
        return sum(1 << v for v in range(self.width) if (v >> j) & 1)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(name, self.names) from None

    # mask algebra -------------------------------------------------

    def complement(self, a: int) -> int:
        return self.full & ~a

    def meet(self, a: int, b: int) -> int:
        return a & b

    def join(self, a: int, b: int) -> int:
        return a | b

    def arrow(self, a: int, b: int) -> int:
        return self.complement(a) | b

    def entails(self, a: int, b: int) -> bool:
        """Classical consequence: every model of a models b."""
        return (a & self.complement(b)) == 0

    def enumerate_algebra(self) -> Iterator[int]:
        """All 2^(2^n) masks in ascending numeric order.

        Raises VocabularyTooLargeError beyond the enumeration cap: the
        full algebra at n=5 has 2^32 elements and is never scanned.
        """
        if self.n > ENUMERATION_MAX_VARS:
            raise VocabularyTooLargeError(
                f"cannot enumerate 2^{self.width} algebra elements at n={self.n}")
        return iter(range(self.size))

    def hex(self, mask: int) -> str:
        """Fixed-width hex rendering of a mask, e.g. 0x5d at n=3."""
        digits = max(1, self.width // 4)
        return f"0x{mask:0{digits}x}"


def entails(a: int, b: int, vocab: Vocabulary) -> bool:
    return vocab.entails(a, b)


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Formula:
    pass


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<arrow>->|→)
  | (?P<and>&|∧)
  | (?P<or>\||∨)
  | (?P<not>!|~|¬)
  | (?P<top>true\b|⊤)
  | (?P<bot>false\b|⊥)
  | (?P<ident>[a-z_][a-z0-9_]*)
""", re.VERBOSE)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, vocab: Vocabulary):
        self.tokens = tokens
        self.vocab = vocab
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, expected):
        tok = self.take()
        if tok[0] != kind:
            raise FormulaSyntaxError(f"unexpected {tok[1]!r or 'end of input'}",
                                     tok[2], expected)
        return tok

    def parse(self) -> Formula:
        f = self.implication()
        tok = self.peek()
        if tok[0] != "eof":
            raise FormulaSyntaxError(f"unexpected {tok[1]!r}", tok[2],
                                     ("end of input",))
        return f

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek()[0] == "arrow":
            self.take()
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek()[0] == "or":
            self.take()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.negation()
        while self.peek()[0] == "and":
            self.take()
            f = And(f, self.negation())
        return f

    def negation(self) -> Formula:
        if self.peek()[0] == "not":
            self.take()
            return Not(self.negation())
        return self.atom()

    def atom(self) -> Formula:
        kind, text, pos = self.take()
        if kind == "top":
            return Top()
        if kind == "bot":
            return Bottom()
        if kind == "ident":
            if text not in self.vocab.names:
                raise UnknownVariableError(text, self.vocab.names)
            return Var(text)
        if kind == "lpar":
            f = self.implication()
            self.expect("rpar", ("')'",))
            return f
        raise FormulaSyntaxError(
            "unexpected " + (repr(text) if text else "end of input"), pos,
            ("'true'", "'false'", "variable", "'!'", "'('"))


def parse(text: str, vocab: Vocabulary) -> Formula:
    """Parse a sentence; raises FormulaSyntaxError or UnknownVariableError."""
    return _Parser(_tokenize(text), vocab).parse()


# ---------------------------------------------------------------------------
# Renderer: canonical ASCII with minimal parentheses
# ---------------------------------------------------------------------------

_PREC = {Implies: 1, Or: 2, And: 3, Not: 4}


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), 5)


def render(f: Formula) -> str:
    """Canonical ASCII form. parse(render(t)) reproduces the tree t exactly,
    so same-precedence children on the non-associating side keep parens."""
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Not):
        inner = render(f.operand)
        if _prec(f.operand) < _PREC[Not]:
            inner = f"({inner})"
        return "!" + inner
    if isinstance(f, (And, Or)):
        op = " & " if isinstance(f, And) else " | "
        me = _prec(f)
        lhs = render(f.left)
        if _prec(f.left) < me:
            lhs = f"({lhs})"
        rhs = render(f.right)
        if _prec(f.right) <= me:
            rhs = f"({rhs})"
        return lhs + op + rhs
    if isinstance(f, Implies):
        me = _prec(f)
        lhs = render(f.left)
        if _prec(f.left) <= me:
            lhs = f"({lhs})"
        rhs = render(f.right)
        if _prec(f.right) < me:
            rhs = f"({rhs})"
        return lhs + " -> " + rhs
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Semantics
# ---------------------------------------------------------------------------

def truth_mask(f: Formula, vocab: Vocabulary) -> int:
    """Exact semantics of f as a truth mask over vocab's valuations."""
    if isinstance(f, Top):
        return vocab.full
    if isinstance(f, Bottom):
        return 0
    if isinstance(f, Var):
        return vocab.var_mask(vocab.index(f.name))
    if isinstance(f, Not):
        return vocab.complement(truth_mask(f.operand, vocab))
    if isinstance(f, And):
        return truth_mask(f.left, vocab) & truth_mask(f.right, vocab)
    if isinstance(f, Or):
        return truth_mask(f.left, vocab) | truth_mask(f.right, vocab)
    if isinstance(f, Implies):
        return vocab.arrow(truth_mask(f.left, vocab), truth_mask(f.right, vocab))
    raise TypeError(f"not a formula: {f!r}")


def mask_formula(mask: int, vocab: Vocabulary) -> Formula:
    """Canonical formula for a mask: disjunction of its minterms.

    Deterministic (valuations ascending), so rendered reports are diffable.
    """
    if mask == 0:
        return Bottom()
    if mask == vocab.full:
        return Top()
    disjuncts = []
    for v in range(vocab.width):
        if not (mask >> v) & 1:
            continue
        term: Formula | None = None
        for j, name in enumerate(vocab.names):
            lit: Formula = Var(name) if (v >> j) & 1 else Not(Var(name))
            term = lit if term is None else And(term, lit)
        disjuncts.append(term)
    out = disjuncts[0]
    for d in disjuncts[1:]:
        out = Or(out, d)
    return out


def render_mask(mask: int, vocab: Vocabulary) -> str:
    return render(mask_formula(mask, vocab))
