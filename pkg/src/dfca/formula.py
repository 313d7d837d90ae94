"""Compound attributes: negation, conjunction, disjunction over attribute names.

Grammar:

    formula := disj ;
    disj    := conj { "|" conj } ;
    conj    := neg { "&" neg } ;
    neg     := "!" neg | atom ;
    atom    := IDENT | QUOTED | "(" formula ")" .

IDENT matches ``[A-Za-z_][A-Za-z0-9_.-]*``; any other attribute name goes in
double quotes, with ``\\"`` and ``\\\\`` escapes. ``!`` binds tighter than
``&``, which binds tighter than ``|``; both binary connectives associate to
the left. A ``#`` outside quotes starts a comment running to the end of the
input.

Statements pair two formulas: ``phi |~ psi`` is a defeasible conditional,
``phi -> psi`` a classical implication.
"""

import re
from dataclasses import dataclass
from typing import Union

from .errors import BindingError, FormulaSyntaxError


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Not:
    operand: "Formula"

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return format_formula(self)


Formula = Union[Atom, Not, And, Or]

DEFEASIBLE = "defeasible"
CLASSICAL = "classical"


@dataclass(frozen=True)
class Conditional:
    """phi |~ psi (defeasible) or phi -> psi (classical)."""

    antecedent: Formula
    consequent: Formula
    kind: str = DEFEASIBLE

    def __post_init__(self):
        if self.kind not in (DEFEASIBLE, CLASSICAL):
            raise ValueError(f"unknown conditional kind {self.kind!r}")

    @classmethod
    def defeasible(cls, antecedent, consequent):
        return cls(antecedent, consequent, DEFEASIBLE)

    @classmethod
    def classical(cls, antecedent, consequent):
        return cls(antecedent, consequent, CLASSICAL)

    def __str__(self):
        arrow = "|~" if self.kind == DEFEASIBLE else "->"
        return (
            f"{format_formula(self.antecedent)} {arrow} "
            f"{format_formula(self.consequent)}"
        )


# --- lexer, shared with the propositional module -------------------------

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*")

IDENT = "IDENT"
QUOTED = "QUOTED"
BANG = "BANG"
AMP = "AMP"
PIPE = "PIPE"
LPAREN = "LPAREN"
RPAREN = "RPAREN"
ARROW = "ARROW"
DARROW = "DARROW"
SQUIGGLE = "SQUIGGLE"
END = "END"

_TOKEN_LABEL = {
    IDENT: "an attribute name",
    QUOTED: "a quoted name",
    BANG: "'!'",
    AMP: "'&'",
    PIPE: "'|'",
    LPAREN: "'('",
    RPAREN: "')'",
    ARROW: "'->'",
    DARROW: "'<->'",
    SQUIGGLE: "'|~'",
    END: "end of input",
}


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    offset: int


def tokenize(text):
    """Token list for a formula or statement, ending with an END token."""
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "#":
            break
        if ch == "!":
            tokens.append(Token(BANG, ch, pos))
            pos += 1
        elif ch == "&":
            tokens.append(Token(AMP, ch, pos))
            pos += 1
        elif ch == "(":
            tokens.append(Token(LPAREN, ch, pos))
            pos += 1
        elif ch == ")":
            tokens.append(Token(RPAREN, ch, pos))
            pos += 1
        elif ch == "|":
            if text.startswith("|~", pos):
                tokens.append(Token(SQUIGGLE, "|~", pos))
                pos += 2
            else:
                tokens.append(Token(PIPE, ch, pos))
                pos += 1
        elif ch == "-":
            if text.startswith("->", pos):
                tokens.append(Token(ARROW, "->", pos))
                pos += 2
            else:
                raise FormulaSyntaxError(
                    f"unexpected character {ch!r}", pos, expected="'->'"
                )
        elif ch == "<":
            if text.startswith("<->", pos):
                tokens.append(Token(DARROW, "<->", pos))
                pos += 3
            else:
                raise FormulaSyntaxError(
                    f"unexpected character {ch!r}", pos, expected="'<->'"
                )
        elif ch == '"':
            start = pos
            value, pos = _scan_quoted(text, start)
            tokens.append(Token(QUOTED, value, start))
        else:
            match = IDENT_RE.match(text, pos)
            if match is None:
                raise FormulaSyntaxError(
                    f"unexpected character {ch!r}",
                    pos,
                    expected="an attribute name, operator, or parenthesis",
                )
            end = match.end()
            # back off a trailing '-' so "a->b" lexes as a, ->, b
            if end < n and text[end] == ">" and text[end - 1] == "-" and end - 1 > pos:
                end -= 1
            tokens.append(Token(IDENT, text[pos:end], pos))
            pos = end
    tokens.append(Token(END, "", n))
    return tokens


def _scan_quoted(text, start):
    pos = start + 1
    parts = []
    while pos < len(text):
        ch = text[pos]
        if ch == '"':
            return "".join(parts), pos + 1
        if ch == "\\":
            if pos + 1 >= len(text) or text[pos + 1] not in ('"', "\\"):
                raise FormulaSyntaxError(
                    "bad escape in quoted name", pos, expected="'\\\"' or '\\\\'"
                )
            parts.append(text[pos + 1])
            pos += 2
        else:
            parts.append(ch)
            pos += 1
    raise FormulaSyntaxError("unterminated quoted name", start, expected="closing '\"'")


class TokenStream:
    """Cursor over a token list with error-reporting helpers."""

    def __init__(self, tokens):
        self._tokens = tokens
        self._pos = 0

    def peek(self):
        return self._tokens[self._pos]

    def advance(self):
        token = self._tokens[self._pos]
        if token.kind != END:
            self._pos += 1
        return token

    def expect(self, kind):
        token = self.peek()
        if token.kind != kind:
            raise self.error(token, _TOKEN_LABEL[kind])
        return self.advance()

    @staticmethod
    def error(token, expected):
        found = _TOKEN_LABEL.get(token.kind, repr(token.value))
        if token.kind in (IDENT, QUOTED):
            found = repr(token.value)
        return FormulaSyntaxError(
            f"unexpected {found}", token.offset, expected=expected
        )


def _parse_disj(stream, atom_parser):
    left = _parse_conj(stream, atom_parser)
    while stream.peek().kind == PIPE:
        stream.advance()
        left = Or(left, _parse_conj(stream, atom_parser))
    return left


def _parse_conj(stream, atom_parser):
    left = _parse_neg(stream, atom_parser)
    while stream.peek().kind == AMP:
        stream.advance()
        left = And(left, _parse_neg(stream, atom_parser))
    return left


def _parse_neg(stream, atom_parser):
    if stream.peek().kind == BANG:
        stream.advance()
        return Not(_parse_neg(stream, atom_parser))
    return atom_parser(stream)


def _parse_atom(stream):
    token = stream.peek()
    if token.kind in (IDENT, QUOTED):
        stream.advance()
        return Atom(token.value)
    if token.kind == LPAREN:
        stream.advance()
        inner = _parse_disj(stream, _parse_atom)
        stream.expect(RPAREN)
        return inner
    raise stream.error(token, "an attribute name, '!', or '('")


def parse_formula(text):
    """Parse one compound attribute."""
    stream = TokenStream(tokenize(text))
    result = _parse_disj(stream, _parse_atom)
    stream.expect(END)
    return result


def parse_conditional(text):
    """Parse ``phi |~ psi`` or ``phi -> psi``."""
    stream = TokenStream(tokenize(text))
    antecedent = _parse_disj(stream, _parse_atom)
    token = stream.peek()
    if token.kind == SQUIGGLE:
        kind = DEFEASIBLE
    elif token.kind == ARROW:
        kind = CLASSICAL
    else:
        raise stream.error(token, "'|~' or '->'")
    stream.advance()
    consequent = _parse_disj(stream, _parse_atom)
    stream.expect(END)
    return Conditional(antecedent, consequent, kind)


# --- printing -------------------------------------------------------------

_OR_PREC = 1
_AND_PREC = 2
_NOT_PREC = 3


def format_atom_name(name, *, reserved=()):
    if IDENT_RE.fullmatch(name) and name not in reserved:
        return name
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def format_formula(formula):
    """Canonical text form; parse_formula inverts it."""
    return _format(formula, 0, False)


def _format(formula, parent_prec, right_side):
    if isinstance(formula, Atom):
        return format_atom_name(formula.name)
    if isinstance(formula, Not):
        text = "!" + _format(formula.operand, _NOT_PREC, False)
        prec = _NOT_PREC
    elif isinstance(formula, And):
        text = (
            _format(formula.left, _AND_PREC, False)
            + " & "
            + _format(formula.right, _AND_PREC, True)
        )
        prec = _AND_PREC
    elif isinstance(formula, Or):
        text = (
            _format(formula.left, _OR_PREC, False)
            + " | "
            + _format(formula.right, _OR_PREC, True)
        )
        prec = _OR_PREC
    else:
        raise TypeError(f"not a formula: {formula!r}")
    if prec < parent_prec or (prec == parent_prec and right_side):
        return f"({text})"
    return text


# --- semantics ------------------------------------------------------------


def atom_names(formula):
    """Set of attribute names the formula mentions."""
    if isinstance(formula, Atom):
        return {formula.name}
    if isinstance(formula, Not):
        return atom_names(formula.operand)
    if isinstance(formula, (And, Or)):
        return atom_names(formula.left) | atom_names(formula.right)
    raise TypeError(f"not a formula: {formula!r}")


def bind(context, formula):
    """Check every atom names an attribute of the context; return the formula."""
    for name in atom_names(formula):
        context.attribute_index(name)
    return formula


def extension(context, formula):
    """Objects satisfying the formula, as a bitset over the context."""
    if isinstance(formula, Atom):
        return context.column(context.attribute_index(formula.name))
    if isinstance(formula, Not):
        return context.object_universe ^ extension(context, formula.operand)
    if isinstance(formula, And):
        return extension(context, formula.left) & extension(context, formula.right)
    if isinstance(formula, Or):
        return extension(context, formula.left) | extension(context, formula.right)
    raise TypeError(f"not a formula: {formula!r}")


def materialise(conditional):
    """The material form: not antecedent, or consequent."""
    return Or(Not(conditional.antecedent), conditional.consequent)
