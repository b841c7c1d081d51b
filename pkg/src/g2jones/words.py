"""Words in the five twist generators c1..c5.

A word is a freely reduced sequence of (generator, exponent) letters.
The expression grammar is

    word   := atom+
    atom   := base power?
    base   := 'c' digit | '(' word ')' | '[' word ',' word ']'
    power  := '^' '-'? digits

with whitespace allowed between tokens.  Brackets are group commutators:
[x, y] = x y x^-1 y^-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadGeneratorError, ParseError
from .matrices import SquareMatrix, matrix_inverse

NUM_GENERATORS = 5


@dataclass(frozen=True)
class MCGWord:
    """Freely reduced word; letters are (generator index, nonzero exponent)."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for gen, exp in self.letters:
            if not 1 <= gen <= NUM_GENERATORS:
                raise ValueError(f"generator index {gen} outside 1..{NUM_GENERATORS}")
            if exp == 0:
                raise ValueError("zero exponent in letter")
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def identity(cls) -> "MCGWord":
        return cls(())

    @classmethod
    def generator(cls, index: int, exponent: int = 1) -> "MCGWord":
        return cls(((index, exponent),))

    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: "MCGWord") -> "MCGWord":
        if not isinstance(other, MCGWord):
            return NotImplemented
        return MCGWord(self.letters + other.letters)

    def inverse(self) -> "MCGWord":
        return MCGWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "MCGWord":
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        return MCGWord(base.letters * abs(n))

    def commutator(self, other: "MCGWord") -> "MCGWord":
        return self * other * self.inverse() * other.inverse()

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def syllable_length(self) -> int:
        return len(self.letters)

    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "()"
        return " ".join(
            f"c{g}" if e == 1 else f"c{g}^{e}" for g, e in self.letters
        )


def _reduce(letters):
    out: list[list[int]] = []
    for gen, exp in letters:
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([gen, exp])
    return tuple((g, e) for g, e in out)


def abelianization_class(word: MCGWord) -> int:
    """Image in the abelianization Z/10: total exponent mod 10."""
    return word.exponent_sum() % 10


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, cls=ParseError):
        raise cls(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse_word(self, closers: str = "") -> MCGWord:
        atoms = []
        self.skip_ws()
        while True:
            ch = self.peek()
            if not ch or ch in closers:
                break
            atoms.append(self.parse_atom())
            self.skip_ws()
        if not atoms:
            self.error("expected a word")
        result = atoms[0]
        for atom in atoms[1:]:
            result = result * atom
        return result

    def parse_atom(self) -> MCGWord:
        base = self.parse_base()
        self.skip_ws()
        if self.peek() == "^":
            self.pos += 1
            return base ** self.parse_int()
        return base

    def parse_base(self) -> MCGWord:
        ch = self.peek()
        if ch == "c":
            self.pos += 1
            digit = self.peek()
            if not digit.isdigit():
                self.error("expected a generator digit after 'c'")
            if digit not in "12345":
                self.error(f"generator c{digit} outside c1..c5", BadGeneratorError)
            self.pos += 1
            return MCGWord.generator(int(digit))
        if ch == "(":
            self.pos += 1
            inner = self.parse_word(closers=")")
            if self.peek() != ")":
                self.error("unclosed '('")
            self.pos += 1
            return inner
        if ch == "[":
            self.pos += 1
            left = self.parse_word(closers=",")
            if self.peek() != ",":
                self.error("expected ',' in commutator")
            self.pos += 1
            right = self.parse_word(closers="]")
            if self.peek() != "]":
                self.error("unclosed '['")
            self.pos += 1
            return left.commutator(right)
        self.error("expected 'c', '(' or '['")

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        if not self.peek().isdigit():
            self.error("expected an integer exponent")
        while self.peek().isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])


def parse_word(text: str) -> MCGWord:
    """Parse a word expression; see the module docstring for the grammar."""
    parser = _Parser(text)
    word = parser.parse_word()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("unexpected trailing input")
    return word


def evaluate_word(word: MCGWord, generators) -> SquareMatrix:
    """Multiply out a word in the given generator matrices.

    Inverses are computed exactly (adjugate over the determinant) and
    cached per call, so long words with repeated inverse letters stay
    cheap.
    """
    gens = tuple(generators)
    if len(gens) != NUM_GENERATORS:
        raise ValueError(f"expected {NUM_GENERATORS} generator matrices")
    dim = gens[0].dim
    inverses: dict[int, SquareMatrix] = {}
    result = SquareMatrix.identity(dim)
    for gen, exp in word.letters:
        if exp > 0:
            base = gens[gen - 1]
        else:
            if gen not in inverses:
                inverses[gen] = matrix_inverse(gens[gen - 1])
            base = inverses[gen]
        result = result * base ** abs(exp)
    return result
