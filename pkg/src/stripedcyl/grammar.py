"""
Text syntax for words.

    expr  := term (("." | ";") term)*
    term  := atom ("^" INT)?
    atom  := NAME "(" INT ("," INT)* ")" | "(" expr ")"

``f . g`` is mathematical composition (``g`` runs first) and ``f ; g`` is
application order (``f`` runs first); both associate to the left and bind
equally. ``^p`` repeats an endomorphism. Whitespace is ignored.

The cylinder language has tokens ``id(k)``, ``tw(k)``, ``tw'(k)``,
``b(k,i)``, ``d(k,i)``. The bridge languages reuse the same shape with
their own token tables (see :data:`LAMBDA`, :data:`SQRT_LAMBDA`, :data:`ATL`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .cyclic import A, AtlWord, B, Cyc, CyclicWord, Degen, FaceD, LoopId, SqrtCyc, SqrtCyclicWord, T
from .errors import ArityMismatch, InvalidGenerator, NotEndomorphism, ParseError
from .words import Birth, Death, GeneratorWord, Id, Tw, TwInv

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*'?)|(?P<int>-?\d+)|(?P<punct>[().,;^]))")


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    start: int
    end: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind), m.end()))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text), len(text)))
    return toks


@dataclass(frozen=True)
class Language:
    """A token table plus the word type it builds."""

    name: str
    tokens: dict[str, tuple[int, Callable]]  # name -> (arity, constructor)
    make: Callable  # (gens, n_in) -> word
    identity_tokens: tuple[str, ...] = ("id",)


def _cyl_identity(k):
    return GeneratorWord((Id(k),), k)


CYL = Language(
    "cyl",
    {"tw": (1, Tw), "tw'": (1, TwInv), "b": (2, Birth), "d": (2, Death)},
    lambda gens, n_in: GeneratorWord(gens, n_in),
)

LAMBDA = Language("lambda", {"t": (1, Cyc), "dl": (2, FaceD), "s": (2, Degen)}, lambda g, n: CyclicWord(g, n))
SQRT_LAMBDA = Language(
    "sqrtlambda", {"sqrt_t": (1, SqrtCyc), "dl": (2, FaceD), "s": (2, Degen)}, lambda g, n: SqrtCyclicWord(g, n)
)
ATL = Language(
    "atl",
    {"a": (2, A), "bb": (2, B), "T": (1, T), "loopid": (3, LoopId)},
    lambda g, n: AtlWord(g, n),
)

LANGUAGES = {lang.name: lang for lang in (CYL, LAMBDA, SQRT_LAMBDA, ATL)}


class _Parser:
    def __init__(self, text: str, lang: Language):
        self.text = text
        self.lang = lang
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def take(self, text: str | None = None, kind: str | None = None) -> _Tok:
        tok = self.peek()
        if (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            want = repr(text) if text is not None else kind
            got = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise ParseError(f"expected {want}, found {got}", self.text, tok.start, max(tok.end, tok.start + 1))
        self.pos += 1
        return tok

    def parse(self):
        if self.peek().kind == "eof":
            raise ParseError("empty expression", self.text, 0)
        w, _ = self.expr()
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(f"unexpected {tok.text!r}", self.text, tok.start, tok.end)
        return w

    def _compose(self, first, second, span):
        try:
            return first.then(second)
        except ArityMismatch as e:
            raise ArityMismatch(
                e.left, e.right,
                f"cannot compose at {self.text[span[0]:span[1]].strip()!r}: output arity {e.left} feeds input arity {e.right}",
            ) from None

    def expr(self):
        w, start = self.term()
        while self.peek().text in (".", ";"):
            op = self.take().text
            rhs, _ = self.term()
            span = (start, self.toks[self.pos - 1].end)
            w = self._compose(rhs, w, span) if op == "." else self._compose(w, rhs, span)
        return w, start

    def term(self):
        w, start = self.atom()
        if self.peek().text == "^":
            self.take("^")
            tok = self.take(kind="int")
            p = int(tok.text)
            if p < 0:
                raise ParseError("negative power", self.text, tok.start, tok.end)
            if w.n_in != w.n_out:
                raise NotEndomorphism(
                    f"{self.text[start:tok.end].strip()!r}: cannot raise a map {w.n_in} -> {w.n_out} to a power"
                )
            w = self.lang.make(tuple(w.gens) * p, w.n_in)
        return w, start

    def atom(self):
        tok = self.peek()
        if tok.text == "(":
            self.take("(")
            w, _ = self.expr()
            self.take(")")
            return w, tok.start
        name = self.take(kind="name")
        self.take("(")
        args = [int(self.take(kind="int").text)]
        while self.peek().text == ",":
            self.take(",")
            args.append(int(self.take(kind="int").text))
        close = self.take(")")
        span = (name.start, close.end)
        if name.text in self.lang.identity_tokens:
            if len(args) != 1 or args[0] < 0:
                raise ParseError("id takes one non-negative arity", self.text, *span)
            return self.lang.make((), args[0]), name.start
        entry = self.lang.tokens.get(name.text)
        if entry is None:
            raise ParseError(f"unknown token {name.text!r}", self.text, name.start, name.end)
        arity, ctor = entry
        if len(args) != arity:
            raise ParseError(f"{name.text} takes {arity} argument(s), got {len(args)}", self.text, *span)
        try:
            g = ctor(*args)
        except InvalidGenerator as e:
            raise ParseError(str(e), self.text, *span) from None
        return self.lang.make((g,), None), name.start


def parse_word(text: str, language: str | Language = CYL):
    """Parse ``text``; raises :class:`ParseError` or a typing error."""
    lang = LANGUAGES[language] if isinstance(language, str) else language
    return _Parser(text, lang).parse()
