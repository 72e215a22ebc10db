# ABOUTME: Words services - the free *-algebra of words in the generators with its Hopf structure.
# ABOUTME: Letters, words, linear combinations, counit, star, coproduct and antipode.

import itertools
import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import IntEnum

from autobots_qgauss.common.errors import ExpansionLimitError

DEFAULT_GUARD = 1_000_000


class LetterKind(IntEnum):
    FUNDAMENTAL = 0
    GROUP = 1


@dataclass(frozen=True, order=True)
class Letter:
    """u_ij / u_ij* (fundamental) or g_i / g_i^-1 (group); indices are 1-based.

    For group letters `j` is unused (0) and `starred` means inverse.
    """

    kind: LetterKind
    i: int
    j: int = 0
    starred: bool = False

    @classmethod
    def u(cls, i: int, j: int, starred: bool = False) -> "Letter":
        return cls(LetterKind.FUNDAMENTAL, i, j, starred)

    @classmethod
    def g(cls, i: int, inverse: bool = False) -> "Letter":
        return cls(LetterKind.GROUP, i, 0, inverse)

    @property
    def is_group(self) -> bool:
        return self.kind is LetterKind.GROUP

    def star(self) -> "Letter":
        return Letter(self.kind, self.i, self.j, not self.starred)

    def counit(self) -> int:
        if self.is_group:
            return 1
        return 1 if self.i == self.j else 0

    def antipode(self) -> "Letter":
        """S(u_ij) = u_ji*, S(u_ij*) = u_ji, S(g) = g^-1."""
        if self.is_group:
            return self.star()
        return Letter(self.kind, self.j, self.i, not self.starred)

    def __str__(self) -> str:
        if self.is_group:
            return f"g-({self.i})" if self.starred else f"g({self.i})"
        return f"u{'*' if self.starred else ''}({self.i},{self.j})"


Word = tuple[Letter, ...]

UNIT: Word = ()


def word_key(word: Word) -> tuple[int, Word]:
    """Graded lexicographic order: shorter words first, then letter by letter."""
    return (len(word), word)


def word_counit(word: Word) -> int:
    return math.prod(letter.counit() for letter in word)


def word_star(word: Word) -> Word:
    return tuple(letter.star() for letter in reversed(word))


def antipode(word: Word) -> Word:
    """Anti-multiplicative extension of the letter antipode (no sign, coefficient 1)."""
    return tuple(letter.antipode() for letter in reversed(word))


def word_str(word: Word) -> str:
    return " ".join(str(letter) for letter in word) if word else "1"


class Element:
    """Finite complex linear combination of words; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, complex] | Iterable[tuple[Word, complex]] = ()) -> None:
        acc: dict[Word, complex] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, coeff in items:
            acc[word] = acc.get(word, 0j) + complex(coeff)
        self._terms = {w: c for w, c in acc.items() if c != 0}

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def unit(cls, coeff: complex = 1) -> "Element":
        return cls({UNIT: coeff})

    @classmethod
    def of(cls, *letters: Letter, coeff: complex = 1) -> "Element":
        return cls({tuple(letters): coeff})

    @classmethod
    def from_word(cls, word: Word, coeff: complex = 1) -> "Element":
        return cls({word: coeff})

    @property
    def terms(self) -> Mapping[Word, complex]:
        return dict(self._terms)

    def items(self) -> list[tuple[Word, complex]]:
        """Terms in graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda item: word_key(item[0]))

    def __iter__(self) -> Iterator[tuple[Word, complex]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, word: Word) -> complex:
        return self._terms.get(word, 0j)

    def letters(self) -> set[Letter]:
        return {letter for word in self._terms for letter in word}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Element") -> "Element":
        return Element(itertools.chain(self._terms.items(), other._terms.items()))

    def __neg__(self) -> "Element":
        return Element({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, other: "Element | complex | float | int") -> "Element":
        if isinstance(other, Element):
            return Element(
                (w1 + w2, c1 * c2)
                for w1, c1 in self._terms.items()
                for w2, c2 in other._terms.items()
            )
        return Element({w: c * other for w, c in self._terms.items()})

    def __rmul__(self, scalar: complex | float | int) -> "Element":
        return Element({w: scalar * c for w, c in self._terms.items()})

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{word_str(w)}" for w, c in self.items()) or "0"
        return f"Element({body})"


def letter_element(letter: Letter) -> Element:
    return Element.of(letter)


def centered(letter: Letter) -> Element:
    """letter - ε(letter)·1, an element of ker ε."""
    return Element.of(letter) - Element.unit(letter.counit())


def counit(x: Element) -> complex:
    """ε, multiplicative on words and linear on elements."""
    return sum((c * word_counit(w) for w, c in x.items()), 0j)


def star(x: Element) -> Element:
    """Reverse each word, star each letter, conjugate each coefficient."""
    return Element((word_star(w), c.conjugate()) for w, c in x.items())


def antipode_element(x: Element) -> Element:
    return Element((antipode(w), c) for w, c in x.items())


def _letter_legs(letter: Letter, dim: int, legs: int) -> list[tuple[Letter, ...]]:
    """All tensor legs of the (legs-1)-fold coproduct of one letter."""
    if legs == 1:
        return [(letter,)]
    if letter.is_group:
        return [(letter,) * legs]
    out = []
    for inner in itertools.product(range(1, dim + 1), repeat=legs - 1):
        path = (letter.i, *inner, letter.j)
        out.append(
            tuple(Letter.u(path[t], path[t + 1], letter.starred) for t in range(legs))
        )
    return out


def expansion_size(word: Word, dim: int, legs: int = 2) -> int:
    return math.prod(1 if letter.is_group else dim ** (legs - 1) for letter in word)


def iterated_coproduct(
    word: Word, dim: int, legs: int, guard: int = DEFAULT_GUARD
) -> list[tuple[tuple[Word, ...], complex]]:
    """Δ^(legs-1)(word) as a list of (leg words, coefficient).

    Multiplicative extension of Δ(u_ij) = Σ_k u_ik ⊗ u_kj, Δ(u_ij*) = Σ_k u_ik* ⊗ u_kj*,
    Δ(g) = g ⊗ g. legs = 1 returns the word itself.

    Raises:
        ExpansionLimitError: If the number of terms exceeds the guard.
    """
    if legs < 1:
        raise ValueError("legs must be at least 1")
    size = expansion_size(word, dim, legs)
    if size > guard:
        raise ExpansionLimitError(size, guard)
    per_letter = [_letter_legs(letter, dim, legs) for letter in word]
    terms: list[tuple[tuple[Word, ...], complex]] = []
    for choice in itertools.product(*per_letter):
        terms.append((tuple(tuple(parts[t] for parts in choice) for t in range(legs)), 1 + 0j))
    return terms


def coproduct(
    word: Word, dim: int, guard: int = DEFAULT_GUARD
) -> list[tuple[Word, Word, complex]]:
    """Δ(word) as (left, right, coefficient) triples; Δ(1) = 1 ⊗ 1."""
    return [(legs[0], legs[1], coeff) for legs, coeff in iterated_coproduct(word, dim, 2, guard)]


def coproduct_element(
    x: Element, dim: int, guard: int = DEFAULT_GUARD
) -> dict[tuple[Word, Word], complex]:
    acc: dict[tuple[Word, Word], complex] = {}
    for word, c in x.items():
        for left, right, coeff in coproduct(word, dim, guard):
            acc[(left, right)] = acc.get((left, right), 0j) + c * coeff
    return {k: v for k, v in acc.items() if v != 0}


def generators(dim: int, with_stars: bool = True) -> list[Letter]:
    """u_ij (and u_ij*) for 1 ≤ i, j ≤ dim, in letter order."""
    letters = [Letter.u(i, j) for i in range(1, dim + 1) for j in range(1, dim + 1)]
    if with_stars:
        letters += [letter.star() for letter in letters]
    return sorted(letters)


def group_generators(n: int, with_inverses: bool = True) -> list[Letter]:
    letters = [Letter.g(i) for i in range(1, n + 1)]
    if with_inverses:
        letters += [letter.star() for letter in letters]
    return sorted(letters)


def words_up_to(letters: Iterable[Letter], length: int) -> list[Word]:
    """Every word of length 1..length over the given letters."""
    alphabet = sorted(letters)
    out: list[Word] = []
    for ell in range(1, length + 1):
        out.extend(itertools.product(alphabet, repeat=ell))
    return out
