# ABOUTME: Wordlang services - parser and printer for linear combinations of words.
# ABOUTME: One-pass recursive descent over a small token stream; positions are 0-based offsets.

import re
from dataclasses import dataclass
from enum import Enum, auto

from autobots_qgauss.common.errors import IndexRangeError, LetterKindError, WordSyntaxError
from autobots_qgauss.domains.targets.groups import GroupTarget
from autobots_qgauss.domains.words.services import Element, Letter, Word

# expr   := term (('+'|'-') term)*
# term   := [scalar '*'] word
# word   := letter (ws letter)* | '1'
# letter := 'u' ['*'] '(' int ',' int ')' | 'g' ['-'] '(' int ')'
# scalar := decimal | '(' decimal ',' decimal ')'


class TokenKind(Enum):
    NUMBER = auto()
    U = auto()
    G = auto()
    STAR = auto()
    PLUS = auto()
    MINUS = auto()
    LPAREN = auto()
    RPAREN = auto()
    COMMA = auto()
    EOF = auto()


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    pos: int


_NUMBER = re.compile(r"\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?")

_SINGLE = {
    "u": TokenKind.U,
    "g": TokenKind.G,
    "*": TokenKind.STAR,
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ",": TokenKind.COMMA,
}


def tokenize(text: str) -> list[Token]:
    """Split text into tokens; whitespace only separates.

    Raises:
        WordSyntaxError: On a character outside the language.
    """
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        match = _NUMBER.match(text, pos)
        if match:
            tokens.append(Token(TokenKind.NUMBER, match.group(), pos))
            pos = match.end()
            continue
        if ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, pos))
            pos += 1
            continue
        raise WordSyntaxError(f"unexpected character {ch!r}", pos)
    tokens.append(Token(TokenKind.EOF, "", len(text)))
    return tokens


# --- AST ---


@dataclass(frozen=True)
class LetterNode:
    letter: Letter
    pos: int


@dataclass(frozen=True)
class TermNode:
    """scalar · (product of letters); an empty product is the unit word."""

    scalar: complex
    letters: tuple[LetterNode, ...]


@dataclass(frozen=True)
class ExprAST:
    terms: tuple[TermNode, ...]


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def _advance(self) -> Token:
        token = self.current
        if token.kind is not TokenKind.EOF:
            self.index += 1
        return token

    def _expect(self, kind: TokenKind, what: str) -> Token:
        token = self.current
        if token.kind is not kind:
            found = token.text or "end of input"
            raise WordSyntaxError(f"expected {what}, found {found!r}", token.pos)
        return self._advance()

    def parse_expr(self) -> ExprAST:
        first = self.current
        if first.kind is TokenKind.NUMBER and self._peek().kind is TokenKind.EOF and float(first.text) == 0:
            # the printed form of the zero element
            return ExprAST(())
        terms = [self._parse_term(sign=1)]
        while self.current.kind in (TokenKind.PLUS, TokenKind.MINUS):
            sign = 1 if self._advance().kind is TokenKind.PLUS else -1
            terms.append(self._parse_term(sign))
        if self.current.kind is not TokenKind.EOF:
            raise WordSyntaxError(f"unexpected {self.current.text!r}", self.current.pos)
        return ExprAST(tuple(terms))

    def _parse_term(self, sign: int) -> TermNode:
        scalar: complex = 1
        token = self.current
        if token.kind is TokenKind.MINUS and self.index == 0:
            # leading sign of the whole expression
            self._advance()
            sign = -sign
            token = self.current
        if token.kind is TokenKind.LPAREN:
            scalar = self._parse_complex()
            self._expect(TokenKind.STAR, "'*' after scalar")
        elif token.kind is TokenKind.NUMBER and self._peek().kind is TokenKind.STAR:
            scalar = float(self._advance().text)
            self._advance()
        return TermNode(sign * scalar, self._parse_word())

    def _parse_signed(self) -> float:
        negative = False
        if self.current.kind in (TokenKind.PLUS, TokenKind.MINUS):
            negative = self._advance().kind is TokenKind.MINUS
        value = float(self._expect(TokenKind.NUMBER, "a decimal").text)
        return -value if negative else value

    def _parse_complex(self) -> complex:
        self._expect(TokenKind.LPAREN, "'('")
        re_part = self._parse_signed()
        self._expect(TokenKind.COMMA, "','")
        im_part = self._parse_signed()
        self._expect(TokenKind.RPAREN, "')'")
        return complex(re_part, im_part)

    def _parse_word(self) -> tuple[LetterNode, ...]:
        token = self.current
        if token.kind is TokenKind.NUMBER:
            if token.text != "1":
                raise WordSyntaxError(f"expected a letter or '1', found {token.text!r}", token.pos)
            self._advance()
            return ()
        letters = [self._parse_letter()]
        while self.current.kind in (TokenKind.U, TokenKind.G):
            letters.append(self._parse_letter())
        return tuple(letters)

    def _parse_index(self) -> int:
        token = self._expect(TokenKind.NUMBER, "an index")
        if not token.text.isdigit():
            raise WordSyntaxError(f"index must be an integer, found {token.text!r}", token.pos)
        return int(token.text)

    def _parse_letter(self) -> LetterNode:
        token = self.current
        if token.kind is TokenKind.U:
            self._advance()
            starred = self.current.kind is TokenKind.STAR
            if starred:
                self._advance()
            self._expect(TokenKind.LPAREN, "'('")
            i = self._parse_index()
            self._expect(TokenKind.COMMA, "','")
            j = self._parse_index()
            self._expect(TokenKind.RPAREN, "')'")
            return LetterNode(Letter.u(i, j, starred), token.pos)
        if token.kind is TokenKind.G:
            self._advance()
            inverse = self.current.kind is TokenKind.MINUS
            if inverse:
                self._advance()
            self._expect(TokenKind.LPAREN, "'('")
            i = self._parse_index()
            self._expect(TokenKind.RPAREN, "')'")
            return LetterNode(Letter.g(i, inverse), token.pos)
        found = token.text or "end of input"
        raise WordSyntaxError(f"expected a letter, found {found!r}", token.pos)


def parse_ast(text: str) -> ExprAST:
    """Syntax tree of an expression, without index or kind checks."""
    return _Parser(text).parse_expr()


def _check_letter(node: LetterNode, target: GroupTarget) -> None:
    letter = node.letter
    if letter.is_group:
        if not target.is_free_group:
            raise LetterKindError(f"group letter {letter} not allowed for target {target.kind}", node.pos)
        bound, indices = target.n, (letter.i,)
    else:
        if target.is_free_group:
            raise LetterKindError(f"letter {letter} not allowed for target {target.kind}", node.pos)
        bound, indices = target.dim, (letter.i, letter.j)
    if any(not 1 <= k <= bound for k in indices):
        raise IndexRangeError(f"index out of range 1..{bound} in {letter}", node.pos)


def parse(text: str, target: GroupTarget) -> Element:
    """Parse an expression into an Element, validating indices and letter kinds.

    Raises:
        WordSyntaxError: On malformed input.
        IndexRangeError: If an index falls outside 1..N (1..2N for sp_plus).
        LetterKindError: If a letter kind does not belong to the target.
    """
    ast = parse_ast(text)
    terms: list[tuple[Word, complex]] = []
    for term in ast.terms:
        for node in term.letters:
            _check_letter(node, target)
        terms.append((tuple(node.letter for node in term.letters), term.scalar))
    return Element(terms)


def _format_part(x: float) -> str:
    if x == 0:
        return "0"
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def format_scalar(c: complex) -> str:
    return f"({_format_part(c.real)},{_format_part(c.imag)})"


def print_element(x: Element) -> str:
    """Canonical text: terms in graded lexicographic order, coefficient 1 left implicit."""
    if x.is_zero():
        return "0"
    parts = []
    for word, coeff in x.items():
        body = " ".join(str(letter) for letter in word) if word else "1"
        parts.append(body if coeff == 1 else f"{format_scalar(coeff)}*{body}")
    return " + ".join(parts)
