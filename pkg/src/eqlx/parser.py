"""Text syntax for formulas, theories, programs and interpretations.

The surface syntax is ASCII: ``bot``, ``top``, ``~`` (explicit negation),
``not`` or ``!`` (default negation), ``&``, ``|``, ``->`` and the expanding
abbreviations ``<->`` and ``<=>``.  Unicode spellings of the connectives are
accepted on input but never emitted.  ``%`` starts a line comment.  Programs
and theories are sequences of statements terminated by ``.``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .core import (
    BOT,
    TOP,
    And,
    Atom,
    AtomRef,
    DNeg,
    ExplicitLiteral,
    Formula,
    Impl,
    Interpretation,
    Or,
    Program,
    Rule,
    Theory,
    XNeg,
    iff,
    strong_iff,
)

__all__ = [
    "SourceSpan",
    "ParseError",
    "parse_formula",
    "parse_theory",
    "parse_program",
    "parse_interpretation",
]


@dataclass(frozen=True)
class SourceSpan:
    """1-based position of a token in the input text."""

    line: int
    column: int
    length: int


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"line {span.line}, column {span.column}: {message}")
        self.message = message
        self.span = span


# Single-character Unicode aliases, normalised during lexing.
_UNICODE_ALIASES = {
    "∼": "~",      # tilde operator
    "¬": "not",
    "∧": "&",
    "∨": "|",
    "→": "->",
    "⊤": "top",
    "⊥": "bot",
    "↔": "<->",
    "⇔": "<=>",
    "⟺": "<=>",
}

_KEYWORDS = {"bot", "top", "not"}


@dataclass(frozen=True)
class _Token:
    kind: str  # one of: atom bot top not ~ & | -> <-> <=> ( ) { } , . EOF
    text: str
    span: SourceSpan


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)

    def emit(kind: str, tok_text: str, length: Optional[int] = None):
        tokens.append(_Token(kind, tok_text, SourceSpan(line, col, length or len(tok_text))))

    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
                col += 1
            continue
        if ch in _UNICODE_ALIASES:
            alias = _UNICODE_ALIASES[ch]
            emit(alias, alias, length=1)
            col += 1
            i += 1
            continue
        if text.startswith("<->", i):
            emit("<->", "<->")
            col += 3
            i += 3
            continue
        if text.startswith("<=>", i):
            emit("<=>", "<=>")
            col += 3
            i += 3
            continue
        if text.startswith("->", i):
            emit("->", "->")
            col += 2
            i += 2
            continue
        if ch in "~&|(){},.":
            emit(ch, ch)
            col += 1
            i += 1
            continue
        if ch == "!":
            emit("not", "!")
            col += 1
            i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = word if word in _KEYWORDS else "atom"
            emit(kind, word)
            col += j - i
            i = j
            continue
        raise ParseError(f"lexical error: unexpected character {ch!r}",
                         SourceSpan(line, col, 1))
    tokens.append(_Token("EOF", "", SourceSpan(line, col, 1)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    # -- token plumbing ----------------------------------------------------

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: Optional[str] = None) -> _Token:
        tok = self.tokens[self.pos]
        if kind is not None and tok.kind != kind:
            raise ParseError(self._expected_message(kind, tok), tok.span)
        self.pos += 1
        return tok

    @staticmethod
    def _expected_message(kind: str, tok: _Token) -> str:
        shown = tok.text or "end of input"
        if kind == ")":
            return f"unbalanced parenthesis: expected ')' before {shown!r}"
        return f"unexpected token {shown!r}: expected {kind!r}"

    def _unexpected(self, tok: _Token) -> ParseError:
        shown = tok.text or "end of input"
        return ParseError(f"unexpected token {shown!r}", tok.span)

    # -- formula grammar ----------------------------------------------------
    #
    # equivalence := implication (("<->" | "<=>") implication)*
    # implication := disjunction ("->" implication)?
    # disjunction := conjunction ("|" conjunction)*
    # conjunction := prefix ("&" prefix)*
    # prefix      := ("~" | "not") prefix | primary
    # primary     := "bot" | "top" | atom | "(" expr ")"

    def formula(self, nested: bool = False) -> Formula:
        if nested:
            f = self._disjunction(nested=True)
            self._reject_rule_operators()
            return f
        return self._equivalence()

    def _reject_rule_operators(self) -> None:
        tok = self.peek()
        if tok.kind in ("->", "<->", "<=>"):
            raise ParseError("implication nested inside rule body/head", tok.span)

    def _equivalence(self) -> Formula:
        left = self._implication()
        while self.peek().kind in ("<->", "<=>"):
            op = self.take()
            right = self._implication()
            left = iff(left, right) if op.kind == "<->" else strong_iff(left, right)
        return left

    def _implication(self) -> Formula:
        left = self._disjunction(nested=False)
        if self.peek().kind == "->":
            self.take()
            return Impl(left, self._implication())
        return left

    def _disjunction(self, nested: bool) -> Formula:
        left = self._conjunction(nested)
        while self.peek().kind == "|":
            self.take()
            left = Or(left, self._conjunction(nested))
        return left

    def _conjunction(self, nested: bool) -> Formula:
        left = self._prefix(nested)
        while self.peek().kind == "&":
            self.take()
            left = And(left, self._prefix(nested))
        return left

    def _prefix(self, nested: bool) -> Formula:
        tok = self.peek()
        if tok.kind == "~":
            self.take()
            return XNeg(self._prefix(nested))
        if tok.kind == "not":
            self.take()
            return DNeg(self._prefix(nested))
        return self._primary(nested)

    def _primary(self, nested: bool) -> Formula:
        tok = self.peek()
        if tok.kind == "bot":
            self.take()
            return BOT
        if tok.kind == "top":
            self.take()
            return TOP
        if tok.kind == "atom":
            self.take()
            try:
                return AtomRef(Atom(tok.text))
            except ValueError as exc:
                raise ParseError(str(exc), tok.span) from None
        if tok.kind == "(":
            self.take()
            inner = self.formula(nested=nested)
            if self.peek().kind != ")":
                bad = self.peek()
                if nested and bad.kind in ("->", "<->", "<=>"):
                    raise ParseError("implication nested inside rule body/head", bad.span)
                raise ParseError(self._expected_message(")", bad), bad.span)
            self.take(")")
            return inner
        raise self._unexpected(tok)

    # -- statements ----------------------------------------------------------

    def rule_statement(self) -> Rule:
        first = self._disjunction(nested=True)
        tok = self.peek()
        if tok.kind in ("<->", "<=>"):
            raise ParseError("implication nested inside rule body/head", tok.span)
        if tok.kind == "->":
            self.take()
            head = self.formula(nested=True)
            self.take(".")
            return Rule(first, head)
        self.take(".")
        return Rule(TOP, first)

    def theory_statement(self) -> Formula:
        f = self.formula()
        self.take(".")
        return f

    def at_eof(self) -> bool:
        return self.peek().kind == "EOF"

    def expect_eof(self) -> None:
        if not self.at_eof():
            raise self._unexpected(self.peek())


def parse_formula(text: str) -> Formula:
    """Parse one formula; the whole input must be consumed."""
    p = _Parser(text)
    f = p.formula()
    p.expect_eof()
    return f


def parse_theory(text: str) -> Theory:
    """Parse a sequence of ``FORMULA.`` statements into a theory."""
    p = _Parser(text)
    formulas = []
    while not p.at_eof():
        formulas.append(p.theory_statement())
    return Theory(formulas)


def parse_program(text: str) -> Program:
    """Parse ``BODY -> HEAD.`` and bare ``HEAD.`` statements into a program.

    Both sides of a rule must be nested expressions; an inner ``->`` is
    reported as an error at its own position.
    """
    p = _Parser(text)
    rules = []
    while not p.at_eof():
        rules.append(p.rule_statement())
    return Program(rules)


def parse_interpretation(text: str) -> Interpretation:
    """Parse a literal set such as ``{~bird, flies}``; braces are optional."""
    p = _Parser(text)
    braced = False
    if p.peek().kind == "{":
        p.take()
        braced = True
    literals = []
    while p.peek().kind in ("~", "atom") or (p.peek().kind in _KEYWORDS):
        negated = False
        if p.peek().kind == "~":
            p.take()
            negated = True
        tok = p.peek()
        if tok.kind != "atom":
            raise ParseError(f"reserved word used as atom: {tok.text!r}", tok.span)
        p.take()
        try:
            literals.append(ExplicitLiteral(Atom(tok.text), negated))
        except ValueError as exc:
            raise ParseError(str(exc), tok.span) from None
        if p.peek().kind == ",":
            p.take()
            continue
        break
    if braced:
        p.take("}")
    p.expect_eof()
    return Interpretation(literals)
