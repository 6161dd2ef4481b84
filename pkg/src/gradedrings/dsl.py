"""Ring-presentation files and element expressions.

The file format is a minimal fixture language, one or more blocks:

    ring L6 {
      base Z/6
      grading Z
      gen x deg 1 invertible
    }

Statements: ``base Z | Q | Z/n``; ``grading Z | Z^k | Z/m``;
``gen NAME deg GRADE [invertible]`` with GRADE an integer or a tuple like
``(1, 0)``; ``rel EXPR``; ``reduction monic | linear | none``.  Expressions
use integer literals (rationals like ``1/3`` only over base Q), generator
names, ``+ - * ^`` with ``^`` binding tightest, unary minus, parentheses,
and explicit ``*`` for products.  ``#`` starts a comment.

Parsing yields a :class:`RingFileAST` whose printed form re-parses to an
equal AST; syntax errors carry line and column.  Semantic validation (grade
homogeneity of relations, reduction feasibility) happens in
:func:`build_rings`, which turns blocks into PresentedRing handles.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Generator, PresentedRing
from .errors import ParseError
from .grading import GradingGroup
from .scalars import QQ, ZZ, Zmod

KEYWORDS = {"ring", "base", "grading", "gen", "deg", "invertible", "rel",
            "reduction"}

# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: object  # int or Fraction
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class BaseSpec:
    kind: str        # "Z" | "Q" | "Zmod"
    modulus: int = 0


@dataclass(frozen=True)
class GradingSpec:
    kind: str        # "free" | "cyclic"
    value: int = 1   # rank or modulus


@dataclass(frozen=True)
class GenStmt:
    name: str
    grade: object    # int or tuple of ints
    invertible: bool = False
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class RelStmt:
    expr: object
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class RingBlock:
    name: str
    base: BaseSpec
    grading: GradingSpec
    gens: tuple
    rels: tuple
    reduction: str = ""  # "" means automatic
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class RingFileAST:
    blocks: tuple

    def to_text(self) -> str:
        return "\n".join(_print_block(b) for b in self.blocks)


# -- tokenizer --------------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>[{}()+\-*^/,])
""", re.VERBOSE)


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "nl":
            line += 1
            col = 1
        elif kind in ("ws", "comment"):
            col += len(value)
        else:
            tokens.append((kind, value, line, col))
            col += len(value)
        i = m.end()
    tokens.append(("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message):
        _, _, line, col = self.peek()
        raise ParseError(message, line, col)

    def expect(self, kind, value=None):
        k, v, line, col = self.peek()
        if k != kind or (value is not None and v != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {v or 'end of file'!r}",
                             line, col)
        return self.next()

    def at(self, kind, value=None):
        k, v, _, _ = self.peek()
        return k == kind and (value is None or v == value)

    # -- file level

    def parse_file(self) -> RingFileAST:
        blocks = []
        while not self.at("eof"):
            blocks.append(self.parse_block())
        if not blocks:
            self.error("no ring blocks")
        return RingFileAST(tuple(blocks))

    def parse_block(self) -> RingBlock:
        _, _, line, col = self.peek()
        self.expect("name", "ring")
        name = self._name("ring name")
        self.expect("sym", "{")
        base = grading = None
        gens, rels = [], []
        reduction = ""
        while not self.at("sym", "}"):
            k, v, sline, scol = self.peek()
            if k != "name":
                self.error("expected a statement keyword")
            if v == "base":
                self.next()
                if base is not None:
                    raise ParseError("duplicate base statement", sline, scol)
                base = self.parse_base()
            elif v == "grading":
                self.next()
                if grading is not None:
                    raise ParseError("duplicate grading statement", sline, scol)
                grading = self.parse_grading()
            elif v == "gen":
                self.next()
                gens.append(self.parse_gen((sline, scol)))
            elif v == "rel":
                self.next()
                rels.append(RelStmt(self.parse_expr(), (sline, scol)))
            elif v == "reduction":
                self.next()
                _, _, rline, rcol = self.peek()
                reduction = self._name("reduction kind")
                if reduction not in ("monic", "linear", "none"):
                    raise ParseError(
                        f"unknown reduction {reduction!r}", rline, rcol)
            else:
                raise ParseError(f"unknown statement {v!r}", sline, scol)
        self.expect("sym", "}")
        if base is None:
            raise ParseError(f"ring {name} has no base statement", line, col)
        if grading is None:
            grading = GradingSpec("free", 1)
        block = RingBlock(name, base, grading, tuple(gens), tuple(rels),
                          reduction, (line, col))
        _check_rational_literals(block)
        return block

    def _name(self, what) -> str:
        k, v, line, col = self.peek()
        if k != "name":
            raise ParseError(f"expected a {what}", line, col)
        if v in KEYWORDS:
            raise ParseError(f"{v!r} is a keyword", line, col)
        self.next()
        return v

    def parse_base(self) -> BaseSpec:
        k, v, line, col = self.next()
        if k == "name" and v == "Q":
            return BaseSpec("Q")
        if k == "name" and v == "Z":
            if self.at("sym", "/"):
                self.next()
                n = int(self.expect("int")[1])
                if n < 2:
                    raise ParseError("modulus must be at least 2", line, col)
                return BaseSpec("Zmod", n)
            return BaseSpec("Z")
        raise ParseError(f"unknown base {v!r}", line, col)

    def parse_grading(self) -> GradingSpec:
        k, v, line, col = self.next()
        if k != "name" or v != "Z":
            raise ParseError(f"unknown grading group {v!r}", line, col)
        if self.at("sym", "/"):
            self.next()
            m = int(self.expect("int")[1])
            if m < 2:
                raise ParseError("cyclic modulus must be at least 2", line, col)
            return GradingSpec("cyclic", m)
        if self.at("sym", "^"):
            self.next()
            rank = int(self.expect("int")[1])
            if rank < 1:
                raise ParseError("rank must be at least 1", line, col)
            return GradingSpec("free", rank)
        return GradingSpec("free", 1)

    def parse_gen(self, pos) -> GenStmt:
        name = self._name("generator name")
        self.expect("name", "deg")
        grade = self.parse_grade()
        invertible = False
        if self.at("name", "invertible"):
            self.next()
            invertible = True
        return GenStmt(name, grade, invertible, pos)

    def parse_grade(self):
        if self.at("sym", "("):
            self.next()
            parts = [self._signed_int()]
            while self.at("sym", ","):
                self.next()
                parts.append(self._signed_int())
            self.expect("sym", ")")
            return tuple(parts)
        return self._signed_int()

    def _signed_int(self) -> int:
        sign = 1
        if self.at("sym", "-"):
            self.next()
            sign = -1
        return sign * int(self.expect("int")[1])

    # -- expressions: expr := term (("+" | "-") term)*

    def parse_expr(self):
        node = self.parse_term()
        while self.at("sym", "+") or self.at("sym", "-"):
            op = self.next()[1]
            rhs = self.parse_term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def parse_term(self):
        node = self.parse_unary()
        while self.at("sym", "*"):
            self.next()
            node = Mul(node, self.parse_unary())
        return node

    def parse_unary(self):
        if self.at("sym", "-"):
            self.next()
            return Neg(self.parse_unary())
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.at("sym", "^"):
            self.next()
            return Pow(base, self._signed_int())
        return base

    def parse_atom(self):
        k, v, line, col = self.peek()
        if k == "int":
            self.next()
            if self.at("sym", "/"):
                self.next()
                den = int(self.expect("int")[1])
                if den == 0:
                    raise ParseError("zero denominator", line, col)
                return Lit(Fraction(int(v), den), (line, col))
            return Lit(int(v), (line, col))
        if k == "name" and v not in KEYWORDS:
            self.next()
            return Var(v, (line, col))
        if k == "sym" and v == "(":
            self.next()
            node = self.parse_expr()
            self.expect("sym", ")")
            return node
        raise ParseError(f"expected an expression, found {v!r}", line, col)


def _check_rational_literals(block: RingBlock) -> None:
    if block.base.kind == "Q":
        return
    def walk(node):
        if isinstance(node, Lit):
            if isinstance(node.value, Fraction) and node.value.denominator != 1:
                raise ParseError(
                    "rational literals are only allowed over base Q",
                    node.pos[0], node.pos[1])
        elif isinstance(node, Neg):
            walk(node.arg)
        elif isinstance(node, (Add, Sub, Mul)):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Pow):
            walk(node.base)
    for rel in block.rels:
        walk(rel.expr)


def parse_ring_file(text: str) -> RingFileAST:
    return _Parser(_tokenize(text)).parse_file()


def parse_expression(text: str):
    p = _Parser(_tokenize(text))
    node = p.parse_expr()
    if not p.at("eof"):
        p.error("trailing input after the expression")
    return node


# -- printing ---------------------------------------------------------------------

_PREC = {Add: 1, Sub: 1, Mul: 2, Neg: 3, Pow: 4, Lit: 5, Var: 5}


def print_expr(node, parent_prec: int = 0) -> str:
    prec = _PREC[type(node)]
    if isinstance(node, Lit):
        text = str(node.value)
    elif isinstance(node, Var):
        text = node.name
    elif isinstance(node, Neg):
        text = "-" + print_expr(node.arg, prec)
    elif isinstance(node, Add):
        text = f"{print_expr(node.left, prec)} + {print_expr(node.right, prec + 1)}"
    elif isinstance(node, Sub):
        text = f"{print_expr(node.left, prec)} - {print_expr(node.right, prec + 1)}"
    elif isinstance(node, Mul):
        text = f"{print_expr(node.left, prec)}*{print_expr(node.right, prec + 1)}"
    elif isinstance(node, Pow):
        text = f"{print_expr(node.base, prec + 1)}^{node.exponent}"
    else:
        raise TypeError(f"not an expression node: {node!r}")
    if prec < parent_prec:
        return f"({text})"
    return text


def _print_grade(grade) -> str:
    if isinstance(grade, tuple):
        return "(" + ", ".join(str(x) for x in grade) + ")"
    return str(grade)


def _print_block(b: RingBlock) -> str:
    lines = [f"ring {b.name} {{"]
    if b.base.kind == "Zmod":
        lines.append(f"  base Z/{b.base.modulus}")
    else:
        lines.append(f"  base {b.base.kind}")
    if b.grading.kind == "cyclic":
        lines.append(f"  grading Z/{b.grading.value}")
    elif b.grading.value != 1:
        lines.append(f"  grading Z^{b.grading.value}")
    else:
        lines.append("  grading Z")
    for g in b.gens:
        inv = " invertible" if g.invertible else ""
        lines.append(f"  gen {g.name} deg {_print_grade(g.grade)}{inv}")
    for r in b.rels:
        lines.append(f"  rel {print_expr(r.expr)}")
    if b.reduction:
        lines.append(f"  reduction {b.reduction}")
    lines.append("}")
    return "\n".join(lines)


# -- semantics ----------------------------------------------------------------------


def _build_base(spec: BaseSpec):
    if spec.kind == "Z":
        return ZZ
    if spec.kind == "Q":
        return QQ
    return Zmod(spec.modulus)


def _build_grading(spec: GradingSpec) -> GradingGroup:
    if spec.kind == "cyclic":
        return GradingGroup.cyclic(spec.value)
    return GradingGroup.free_lex(spec.value)


def eval_expression(ring, node):
    """Evaluate an expression AST (or source text) to a ring element."""
    if isinstance(node, str):
        node = parse_expression(node)
    def ev(n):
        if isinstance(n, Lit):
            return ring.scalar(ring.base.normalize(n.value))
        if isinstance(n, Var):
            try:
                return ring.gen(n.name)
            except Exception:
                raise ParseError(f"unknown generator {n.name!r}",
                                 n.pos[0], n.pos[1]) from None
        if isinstance(n, Neg):
            return ring.zero() - ev(n.arg)
        if isinstance(n, Add):
            return ev(n.left) + ev(n.right)
        if isinstance(n, Sub):
            return ev(n.left) - ev(n.right)
        if isinstance(n, Mul):
            return ev(n.left) * ev(n.right)
        if isinstance(n, Pow):
            return ev(n.base) ** n.exponent
        raise TypeError(f"not an expression node: {n!r}")
    return ev(node)


def build_rings(ast: RingFileAST) -> dict:
    """PresentedRing handles for every block, in file order."""
    out = {}
    for b in ast.blocks:
        if b.name in out:
            raise ParseError(f"duplicate ring name {b.name!r}",
                             b.pos[0], b.pos[1])
        base = _build_base(b.base)
        grading = _build_grading(b.grading)
        gens = [Generator(g.name, grading.grade(g.grade), g.invertible)
                for g in b.gens]
        free = PresentedRing(base, grading, gens)
        if b.rels:
            rels = [dict(eval_expression(free, r.expr).terms) for r in b.rels]
            ring = free.quotient(rels, reduction=b.reduction or "auto")
        else:
            ring = free
        out[b.name] = ring
    return out
