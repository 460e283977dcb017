import pytest
import sys
import os

# Add the parent directory to the sys.path to allow importing the package
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from twobridge.errors import DomainError, WordParseError
from twobridge.rational import cf_expand, cf_value, parse_slope, predecessor, slopes_up_to
from twobridge.word import (
    ZERO_SLOPE_WORD,
    CyclicWord,
    Word,
    cyclic_reduce,
    cyclically_equal,
    exponent_signs,
    flip_b,
    free_reduce,
    is_cyclically_alternating,
    least_rotation,
    relator,
)


class TestWord:
    def test_construction_reduces(self):
        assert Word("abBa") == "aa"
        assert Word("aAbB") == ""
        assert len(free_reduce([])) == 0
        assert Word([1, 2, -2, 1]) == Word("aa")

    def test_unknown_letters_are_rejected(self):
        with pytest.raises(WordParseError):
            Word("abc")
        with pytest.raises(WordParseError):
            Word([3])

    def test_product_and_inverse(self):
        w = Word("abAB")
        assert w.inverse() == "baBA"
        assert ~w == w.inverse()
        assert w * w.inverse() == ""
        assert Word("ab") * Word("Ba") == "aa"

    def test_rotation_and_slicing(self):
        w = Word("abAB")
        assert w.rotate(1) == "bABa"
        assert w.rotate(-1) == "BabA"
        assert w[1:3] == "bA"
        assert w[0] == 1 and w[-1] == -2

    def test_tokens(self):
        assert Word("aB").tokens() == ["a", "b^-1"]

    def test_cyclically_reduced(self):
        assert Word("abAB").is_cyclically_reduced()
        assert not Word("abA").is_cyclically_reduced()


class TestCyclicWord:
    def test_conjugating_ends_are_stripped(self):
        assert cyclic_reduce("Babb").representative == "ab"
        assert CyclicWord("abA").representative == "b"

    def test_equality_up_to_rotation(self):
        assert cyclically_equal(CyclicWord("ab"), CyclicWord("ba"))
        assert not cyclically_equal(CyclicWord("ab"), CyclicWord("aB"))
        u = relator(parse_slope("2/5"))
        assert CyclicWord(u) == CyclicWord(u.rotate(3))
        assert hash(CyclicWord(u)) == hash(CyclicWord(u.rotate(7)))

    def test_equality_is_an_equivalence_relation(self):
        words = [CyclicWord(text) for text in ["ab", "ba", "aB", "Ba", "abAB", "bABa", "ABab", "aabAB", "abAAB"]]
        for slope in ("2/5", "3/7"):
            u = relator(parse_slope(slope))
            words += [CyclicWord(u), CyclicWord(u.rotate(3)), CyclicWord(u.inverse())]
        for x in words:
            assert cyclically_equal(x, x)
            for y in words:
                assert cyclically_equal(x, y) == cyclically_equal(y, x)
                for z in words:
                    if cyclically_equal(x, y) and cyclically_equal(y, z):
                        assert cyclically_equal(x, z)

    def test_equality_is_invariant_under_simultaneous_rotation(self):
        u = relator(parse_slope("5/17"))
        pairs = [(Word("abAB"), Word("ABab")), (Word("abAB"), Word("aBAb")), (u, u.rotate(11)), (u, u.inverse())]
        for x, y in pairs:
            expected = cyclically_equal(CyclicWord(x), CyclicWord(y))
            for k in range(len(x)):
                assert cyclically_equal(CyclicWord(x.rotate(k)), CyclicWord(y.rotate(k))) == expected

    def test_reverse_is_not_identified(self):
        assert CyclicWord("aabAB") != CyclicWord("BAbaa")
        assert CyclicWord("abAB") != CyclicWord("abAB").inverse()

    def test_canonical_rotation_is_least(self):
        assert CyclicWord("bABa").canonical == "abAB"
        assert least_rotation([3, 1, 2]) == 1
        assert least_rotation([]) == 0


class TestRelator:
    @pytest.mark.parametrize("slope, word", [
        ("1/1", "aB"),
        ("1/2", "abAB"),
        ("2/5", "abaBAbabAB"),
        ("3/5", "abABaBAbaB"),
        ("1/3", "abaBAB"),
    ])
    def test_examples(self, slope, word):
        assert relator(parse_slope(slope)) == word

    def test_exponent_signs(self):
        assert exponent_signs(parse_slope("2/5")) == [1, 1, -1, -1]

    @pytest.mark.parametrize("slope", ["0", "3/2", "inf", "-1/2"])
    def test_rejects_slopes_outside_unit_interval(self, slope):
        with pytest.raises(DomainError):
            relator(parse_slope(slope))

    def test_shape_for_all_small_slopes(self):
        for r in slopes_up_to(60):
            u = relator(r)
            p = r.denominator
            assert len(u) == 2 * p
            assert u[0] == 1
            assert is_cyclically_alternating(u)
            signs = [1 if x > 0 else -1 for x in u.letters[1:p]]
            assert signs == exponent_signs(r)

    def test_zero_slope_word(self):
        assert ZERO_SLOPE_WORD == "ab"


class TestAlternation:
    def test_examples(self):
        assert is_cyclically_alternating(CyclicWord("abAB"))
        assert not is_cyclically_alternating(CyclicWord("aba"))
        assert not is_cyclically_alternating(Word("aba"))

    def test_empty_word_is_rejected(self):
        with pytest.raises(DomainError):
            is_cyclically_alternating(Word(""))


class TestFlip:
    def test_substitution(self):
        assert flip_b(Word("abAB")) == "aBAb"

    def test_involution(self):
        u = relator(parse_slope("2/5"))
        assert flip_b(flip_b(u)) == u

    def test_flip_of_two_fifths_is_three_fifths(self):
        flipped = flip_b(CyclicWord(relator(parse_slope("2/5"))))
        target = CyclicWord(relator(parse_slope("3/5")))
        assert cyclically_equal(flipped, target) or cyclically_equal(flipped, target.inverse())

    def test_flip_carries_predecessor_relator(self):
        for r in slopes_up_to(40):
            cf = cf_expand(r)
            if len(cf) < 2 or cf[0] != 1:
                continue
            flipped = CyclicWord(flip_b(relator(cf_value(predecessor(cf)))))
            target = CyclicWord(relator(r))
            assert cyclically_equal(flipped, target) or cyclically_equal(flipped, target.inverse())
