"""Word algebra and the expression parser."""

import random

import pytest
from hypothesis import given, strategies as st

from g2jones import MCGWord, abelianization_class, evaluate_word, parse_word, symplectic_generators
from g2jones.errors import BadGeneratorError, ParseError
from g2jones.matrices import SquareMatrix, matrix_inverse

C = [None] + [MCGWord.generator(i) for i in range(1, 6)]  # 1-based


letters_strategy = st.lists(
    st.tuples(
        st.integers(min_value=1, max_value=5),
        st.integers(min_value=-4, max_value=4).filter(lambda e: e != 0),
    ),
    max_size=12,
)


def rand_word(rng, length=8):
    w = MCGWord.identity()
    for _ in range(rng.randint(0, length)):
        w = w * MCGWord.generator(rng.randint(1, 5), rng.choice((-2, -1, 1, 2)))
    return w


class TestWordAlgebra:
    def test_free_reduction(self):
        assert C[1] * C[1].inverse() == MCGWord.identity()
        assert (C[1] ** 2) * C[1].inverse() == C[1]
        assert MCGWord(((1, 2), (1, -1), (2, 1))).letters == ((1, 1), (2, 1))
        assert MCGWord(((1, 1), (2, 1), (2, -1), (1, -1))).is_identity()

    def test_rejects_bad_letters(self):
        with pytest.raises(ValueError):
            MCGWord(((0, 1),))
        with pytest.raises(ValueError):
            MCGWord(((6, 1),))
        with pytest.raises(ValueError):
            MCGWord(((3, 0),))

    def test_group_laws(self):
        rng = random.Random(20260105)
        e = MCGWord.identity()
        for _ in range(200):
            x, y, z = rand_word(rng), rand_word(rng), rand_word(rng)
            assert (x * y) * z == x * (y * z)
            assert x * e == x and e * x == x
            assert x * x.inverse() == e
            assert x.inverse().inverse() == x
            assert (x * y).inverse() == y.inverse() * x.inverse()

    def test_powers(self):
        x = C[1] * C[2]
        assert x ** 0 == MCGWord.identity()
        assert x ** 3 == x * x * x
        assert x ** -2 == (x.inverse()) ** 2
        assert str(C[3] ** -4) == "c3^-4"

    def test_commutator(self):
        x, y = C[1], C[2]
        assert x.commutator(y) == x * y * x.inverse() * y.inverse()
        assert x.commutator(x).is_identity()

    def test_exponent_sum_and_lengths(self):
        w = parse_word("c1^2 c2^-3 c1")
        assert w.exponent_sum() == 0
        assert w.syllable_length() == 3
        assert w.letter_length() == 6

    def test_abelianization(self):
        assert abelianization_class(C[1]) == 1
        assert abelianization_class(parse_word("c1 c2")) == 2
        assert abelianization_class(parse_word("(c1 c2)^6")) == 2
        assert abelianization_class(parse_word("[c1, c2]")) == 0
        assert abelianization_class(parse_word("c1^-1")) == 9


class TestParser:
    def test_basic_forms(self):
        assert parse_word("c1") == C[1]
        assert parse_word("c1 c2") == C[1] * C[2]
        assert parse_word("c1^-3") == MCGWord.generator(1, -3)
        assert parse_word("  c4   c5  ") == C[4] * C[5]

    def test_grouping_and_powers(self):
        assert parse_word("(c1 c2)^6") == (C[1] * C[2]) ** 6
        assert parse_word("(c1 c2)^-1") == (C[1] * C[2]).inverse()
        assert parse_word("((c1))") == C[1]
        assert parse_word("(c1 c2^2)^2") == C[1] * C[2] ** 2 * C[1] * C[2] ** 2

    def test_commutator_brackets(self):
        x, y = (C[1] * C[2]) ** 6, (C[2] * C[3]) ** 6
        assert parse_word("[(c1 c2)^6, (c2 c3)^6]") == x.commutator(y)
        assert parse_word("[c1, c2]^2") == (C[1].commutator(C[2])) ** 2
        assert parse_word("[[c1, c2], c3]") == C[1].commutator(C[2]).commutator(C[3])

    def test_parse_of_str_is_identity(self):
        rng = random.Random(20260106)
        for _ in range(300):
            w = rand_word(rng, length=10)
            if w.is_identity():
                continue  # "()" is not an expression; empty words do not print back
            assert parse_word(str(w)) == w

    @given(letters_strategy)
    def test_parse_of_str_is_identity_hypothesis(self, letters):
        w = MCGWord(tuple(letters))
        if not w.is_identity():
            assert parse_word(str(w)) == w

    def test_bad_generator_index(self):
        for text in ("c0", "c6", "c9", "c1 c7"):
            with pytest.raises(BadGeneratorError):
                parse_word(text)

    def test_parse_errors_carry_position(self):
        cases = ["", "c", "(c1", "c1^", "c1)", "[c1 c2]", "c1 & c2", "^2", "[c1, ]"]
        for text in cases:
            with pytest.raises(ParseError) as info:
                parse_word(text)
            assert info.value.position >= 0

    def test_bad_generator_is_a_parse_error(self):
        assert issubclass(BadGeneratorError, ParseError)


class TestEvaluation:
    def test_identity_word_gives_identity_matrix(self):
        gens = symplectic_generators()
        assert evaluate_word(MCGWord.identity(), gens) == SquareMatrix.identity(4)

    def test_homomorphism_property(self):
        gens = symplectic_generators()
        rng = random.Random(20260107)
        for _ in range(40):
            x, y = rand_word(rng, 6), rand_word(rng, 6)
            assert evaluate_word(x * y, gens) == evaluate_word(x, gens) * evaluate_word(y, gens)

    def test_inverse_word(self):
        gens = symplectic_generators()
        rng = random.Random(20260108)
        for _ in range(20):
            x = rand_word(rng, 6)
            assert evaluate_word(x.inverse(), gens) == matrix_inverse(evaluate_word(x, gens))

    def test_generator_lookup(self):
        gens = symplectic_generators()
        for i in range(1, 6):
            assert evaluate_word(C[i], gens) == gens[i - 1]
