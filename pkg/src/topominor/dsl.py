"""Text syntax for trees, sequences and presentations.

::

    expr    := fin | seq | spine | sord | comb | sf
    fin     := '(' fin* ')'
    seq     := 'seq' '(' 'prefix' ':' list ';' 'cycle' ':' list ')'
    spine   := 'spine' '[' ('attach' | 'glue') ']' '(' body ')'
    body    := 'prefix' ':' list ';' 'cycle' ':' list
             | 'ramp' ':' ordinal
             | 'vramp'
    sord    := 'S' '(' ordinal ')'
    comb    := ('comb' | 'hairycomb') '(' (int | 'w') ')'
    sf      := 'sf' '(' expr ',' natspec ')'
    natspec := 'ppow' '(' int ')'
             | 'natseq' '(' 'prefix' ':' ints ';' 'cycle' ':' ints ')'
    ordinal := term ('+' term)*
    term    := 'w' ('^' int)? ('*' int)? | int

Spine lists hold expressions or ``empty``.  Whitespace is insignificant.
``print_expr(parse(text))`` equals ``text`` up to whitespace whenever the
text is already in printed form.
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass
from typing import Union

from .errors import ParseError
from .finite_tree import FiniteTree, to_parens
from .natseq import ONES, PeriodicNat, PrimePowers, is_prime
from .ordinal import Ordinal, is_limit, to_text
from .seq_order import EPSeq
from .spined import (
    ATTACH,
    GLUE,
    Fin,
    OrdinalRamp,
    Periodic,
    SOrd,
    Spine,
    VRamp,
    expand,
    make_comb,
)

# -- syntax tree ------------------------------------------------------------------


@dataclass(frozen=True)
class FinE:
    tree: FiniteTree


@dataclass(frozen=True)
class EmptyE:
    pass


@dataclass(frozen=True)
class SeqE:
    prefix: tuple
    cycle: tuple


@dataclass(frozen=True)
class SpineE:
    mode: str
    prefix: tuple
    cycle: tuple


@dataclass(frozen=True)
class RampE:
    mode: str
    alpha: Ordinal


@dataclass(frozen=True)
class VRampE:
    mode: str


@dataclass(frozen=True)
class SOrdE:
    alpha: Ordinal


@dataclass(frozen=True)
class CombE:
    hairy: bool
    n: Union[int, str]


@dataclass(frozen=True)
class PPowE:
    p: int


@dataclass(frozen=True)
class NatSeqE:
    prefix: tuple
    cycle: tuple


@dataclass(frozen=True)
class SfE:
    base: object
    lengths: Union[PPowE, NatSeqE]


Expr = Union[FinE, SeqE, SpineE, RampE, VRampE, SOrdE, CombE, SfE]

# -- lexer ------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z_]+)|(?P<punct>[()\[\]:;,+*^]))")


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _location(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _lex(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            toks.append(_Tok("eof", "", pos))
            return toks
        m = _TOKEN.match(text, pos)
        if not m:
            line, col = _location(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col, (pos, pos + 1))
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()


# -- parser -----------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _lex(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None, end: int | None = None):
        tok = tok or self.peek()
        line, col = _location(self.text, tok.pos)
        span = (tok.pos, end if end is not None else tok.pos + max(len(tok.text), 1))
        return ParseError(msg, line, col, span)

    def next(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> _Tok:
        tok = self.peek()
        if tok.text != text:
            found = tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.next()

    def integer(self) -> int:
        tok = self.peek()
        if tok.kind != "int":
            raise self.error(f"expected integer, found {tok.text or 'end of input'!r}")
        self.next()
        return int(tok.text)

    # expressions

    def expr(self):
        tok = self.peek()
        if tok.text == "(":
            return FinE(self.fin())
        if tok.kind != "word":
            raise self.error(f"expected expression, found {tok.text or 'end of input'!r}")
        handler = {
            "seq": self.seq,
            "spine": self.spine,
            "S": self.sord,
            "comb": self.comb,
            "hairycomb": self.comb,
            "sf": self.sf,
        }.get(tok.text)
        if handler is None:
            raise self.error(f"unknown form {tok.text!r}")
        return handler()

    def fin(self) -> FiniteTree:
        # iterative so deep paths do not hit the recursion limit
        self.expect("(")
        stack: list[list[FiniteTree]] = [[]]
        while stack:
            tok = self.peek()
            if tok.text == "(":
                self.next()
                stack.append([])
            elif tok.text == ")":
                self.next()
                node = FiniteTree(tuple(stack.pop()))
                if not stack:
                    return node
                stack[-1].append(node)
            else:
                raise self.error(f"expected '(' or ')', found {tok.text or 'end of input'!r}")
        raise AssertionError("unreachable")

    def lists(self, item):
        self.expect("prefix")
        self.expect(":")
        prefix = self.bracketed(item)
        self.expect(";")
        self.expect("cycle")
        self.expect(":")
        start = self.peek()
        cycle = self.bracketed(item)
        if not cycle:
            raise self.error("cycle must be nonempty", start, self.peek().pos)
        return prefix, cycle

    def bracketed(self, item) -> tuple:
        self.expect("[")
        out = []
        if self.peek().text != "]":
            out.append(item())
            while self.peek().text == ",":
                self.next()
                out.append(item())
        self.expect("]")
        return tuple(out)

    def seq(self):
        self.expect("seq")
        self.expect("(")

        def tree():
            if self.peek().text != "(":
                raise self.error("sequence entries must be finite trees")
            return FinE(self.fin())

        prefix, cycle = self.lists(tree)
        self.expect(")")
        return SeqE(prefix, cycle)

    def entry(self):
        tok = self.peek()
        if tok.text == "empty":
            self.next()
            return EmptyE()
        if tok.text == "seq":
            raise self.error("a sequence cannot be a spine attachment")
        return self.expr()

    def spine(self):
        self.expect("spine")
        self.expect("[")
        tok = self.peek()
        if tok.text not in (ATTACH, GLUE):
            raise self.error(f"expected 'attach' or 'glue', found {tok.text or 'end of input'!r}")
        mode = self.next().text
        self.expect("]")
        self.expect("(")
        tok = self.peek()
        if tok.text == "ramp":
            self.next()
            self.expect(":")
            start = self.peek()
            alpha = self.ordinal()
            if not is_limit(alpha):
                raise self.error(
                    f"ramp needs a limit ordinal, got {to_text(alpha)}", start, self.peek().pos
                )
            out = RampE(mode, alpha)
        elif tok.text == "vramp":
            self.next()
            out = VRampE(mode)
        else:
            prefix, cycle = self.lists(self.entry)
            out = SpineE(mode, prefix, cycle)
        self.expect(")")
        return out

    def sord(self):
        self.expect("S")
        self.expect("(")
        alpha = self.ordinal()
        self.expect(")")
        return SOrdE(alpha)

    def comb(self):
        hairy = self.next().text == "hairycomb"
        self.expect("(")
        tok = self.peek()
        if tok.text == "w":
            self.next()
            n: int | str = "w"
        else:
            n = self.integer()
            low = 1 if hairy else 2
            if n < low:
                raise self.error(f"comb size must be at least {low}", tok)
        self.expect(")")
        return CombE(hairy, n)

    def sf(self):
        self.expect("sf")
        self.expect("(")
        start = self.peek()
        base = self.expr()
        if isinstance(base, (FinE, SeqE, SfE)) or (isinstance(base, SOrdE) and base.alpha == Ordinal(())):
            raise self.error("sf needs a spine presentation as its base", start, self.peek().pos)
        self.expect(",")
        tok = self.peek()
        if tok.text == "ppow":
            self.next()
            self.expect("(")
            ptok = self.peek()
            p = self.integer()
            if not is_prime(p):
                raise self.error(f"{p} is not prime", ptok)
            self.expect(")")
            lengths: PPowE | NatSeqE = PPowE(p)
        elif tok.text == "natseq":
            self.next()
            self.expect("(")

            def positive():
                itok = self.peek()
                v = self.integer()
                if v < 1:
                    raise self.error("edge lengths must be positive", itok)
                return v

            prefix, cycle = self.lists(positive)
            self.expect(")")
            lengths = NatSeqE(prefix, cycle)
        else:
            raise self.error(f"expected 'ppow' or 'natseq', found {tok.text or 'end of input'!r}")
        self.expect(")")
        return SfE(base, lengths)

    def ordinal(self) -> Ordinal:
        terms: list[tuple[int, int]] = []
        while True:
            tok = self.peek()
            if tok.text == "w":
                self.next()
                exp, coeff = 1, 1
                if self.peek().text == "^":
                    self.next()
                    exp = self.integer()
                if self.peek().text == "*":
                    self.next()
                    coeff = self.integer()
            elif tok.kind == "int":
                exp, coeff = 0, self.integer()
            else:
                raise self.error(f"expected ordinal term, found {tok.text or 'end of input'!r}")
            if coeff == 0 and exp > 0:
                raise self.error("zero coefficient", tok)
            if coeff:
                if terms and exp >= terms[-1][0]:
                    raise self.error("ordinal terms out of normal-form order", tok)
                terms.append((exp, coeff))
            if self.peek().text != "+":
                return Ordinal(tuple(terms))
            self.next()


def parse(text: str) -> Expr:
    p = _Parser(text)
    out = p.expr()
    if p.peek().kind != "eof":
        raise p.error(f"unexpected trailing input {p.peek().text!r}")
    return out


# -- printer ------------------------------------------------------------------------


def _print_list(items) -> str:
    return "[" + ", ".join(print_expr(x) for x in items) + "]"


def _print_ints(items) -> str:
    return "[" + ", ".join(str(x) for x in items) + "]"


def print_expr(e) -> str:
    if isinstance(e, FinE):
        return to_parens(e.tree)
    if isinstance(e, EmptyE):
        return "empty"
    if isinstance(e, SeqE):
        return f"seq(prefix: {_print_list(e.prefix)}; cycle: {_print_list(e.cycle)})"
    if isinstance(e, SpineE):
        return f"spine[{e.mode}](prefix: {_print_list(e.prefix)}; cycle: {_print_list(e.cycle)})"
    if isinstance(e, RampE):
        return f"spine[{e.mode}](ramp: {to_text(e.alpha)})"
    if isinstance(e, VRampE):
        return f"spine[{e.mode}](vramp)"
    if isinstance(e, SOrdE):
        return f"S({to_text(e.alpha)})"
    if isinstance(e, CombE):
        return f"{'hairycomb' if e.hairy else 'comb'}({e.n})"
    if isinstance(e, PPowE):
        return f"ppow({e.p})"
    if isinstance(e, NatSeqE):
        return f"natseq(prefix: {_print_ints(e.prefix)}; cycle: {_print_ints(e.cycle)})"
    if isinstance(e, SfE):
        return f"sf({print_expr(e.base)}, {print_expr(e.lengths)})"
    raise TypeError(f"not an expression: {e!r}")


# -- evaluation -----------------------------------------------------------------------


def evaluate(e):
    """Library value of an expression: a spined tree or an ``EPSeq``."""
    if isinstance(e, FinE):
        return Fin(e.tree)
    if isinstance(e, EmptyE):
        return None
    if isinstance(e, SeqE):
        return EPSeq(tuple(x.tree for x in e.prefix), tuple(x.tree for x in e.cycle))
    if isinstance(e, SpineE):
        return Spine(
            e.mode, Periodic(tuple(map(evaluate, e.prefix)), tuple(map(evaluate, e.cycle)))
        )
    if isinstance(e, RampE):
        return Spine(e.mode, OrdinalRamp(e.alpha))
    if isinstance(e, VRampE):
        return Spine(e.mode, VRamp())
    if isinstance(e, SOrdE):
        return SOrd(e.alpha)
    if isinstance(e, CombE):
        return make_comb(e.n, e.hairy)
    if isinstance(e, PPowE):
        return PrimePowers(e.p)
    if isinstance(e, NatSeqE):
        return PeriodicNat(e.prefix, e.cycle)
    if isinstance(e, SfE):
        return dataclasses.replace(expand(evaluate(e.base)), edge_lengths=evaluate(e.lengths))
    raise TypeError(f"not an expression: {e!r}")


def parse_value(text: str):
    return evaluate(parse(text))


def to_expr(v):
    """An expression evaluating to ``v`` (combs come back in spine form)."""
    if v is None:
        return EmptyE()
    if isinstance(v, FiniteTree):
        return FinE(v)
    if isinstance(v, Fin):
        return FinE(v.tree)
    if isinstance(v, SOrd):
        return SOrdE(v.alpha)
    if isinstance(v, EPSeq):
        return SeqE(tuple(map(FinE, v.prefix)), tuple(map(FinE, v.cycle)))
    if isinstance(v, PrimePowers):
        return PPowE(v.p)
    if isinstance(v, PeriodicNat):
        return NatSeqE(v.prefix, v.cycle)
    if isinstance(v, Spine):
        gen = v.gen
        if isinstance(gen, Periodic):
            base = SpineE(v.mode, tuple(map(to_expr, gen.prefix)), tuple(map(to_expr, gen.cycle)))
        elif isinstance(gen, OrdinalRamp):
            base = RampE(v.mode, gen.alpha)
        else:
            base = VRampE(v.mode)
        if v.edge_lengths == ONES:
            return base
        return SfE(base, to_expr(v.edge_lengths))
    raise TypeError(f"no expression for {v!r}")


def to_text_value(v) -> str:
    return print_expr(to_expr(v))
