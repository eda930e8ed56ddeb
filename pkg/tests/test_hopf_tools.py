import pytest

from core.combinatorics import Composition, Permutation, compositions_up_to
from core.errors import EvaluationError, SizeGuardError
from core.freealg import LinComb
from core.hopf_tools import algebra_for, antipode_axiom_sides, degree_statistics, get_algebra, takeuchi_antipode
from core.parser import parse_pattern
from core.word_iso import IntWord


def C(*parts):
    return Composition(parts)


class TestAntipode:
    def test_single_block(self):
        assert takeuchi_antipode(C(2)) == -1 * LinComb.basis(C(2))

    def test_two_blocks(self):
        assert takeuchi_antipode(C(2, 2)) == LinComb([(C(2, 2), 1), (C(3), 2), (C(2), 1)])

    def test_unit(self):
        assert takeuchi_antipode(Composition()) == LinComb.basis(Composition())

    def test_other_algebras(self):
        assert takeuchi_antipode(Permutation((2, 1))) == -1 * LinComb.basis(Permutation((2, 1)))
        assert takeuchi_antipode(parse_pattern("1|")) == -1 * LinComb.basis(parse_pattern("1|"))
        assert takeuchi_antipode(IntWord((3,))) == -1 * LinComb.basis(IntWord((3,)))

    @pytest.mark.parametrize("s", compositions_up_to(4, 1))
    def test_involution(self, s):
        assert takeuchi_antipode(takeuchi_antipode(s)) == LinComb.basis(s)

    def test_linear(self):
        x = LinComb([(C(2), 3), (C(1, 1), -1)])
        assert takeuchi_antipode(x) == 3 * takeuchi_antipode(C(2)) - takeuchi_antipode(C(1, 1))

    def test_size_guard_applies_after_caching(self, monkeypatch):
        takeuchi_antipode(C(2, 1))
        monkeypatch.setenv("VINC_SIZE_GUARD", "2")
        with pytest.raises(SizeGuardError):
            takeuchi_antipode(C(2, 1))
        assert takeuchi_antipode(Composition()) == LinComb.basis(Composition())


class TestAxioms:
    @pytest.mark.parametrize("b", [C(1), C(2, 1), C(1, 1, 2), Permutation((1, 3, 2)), Permutation((2, 1)),
                                   parse_pattern("21|"), parse_pattern("1|2"), IntWord((1, 2)), Composition()])
    def test_both_sides_vanish_off_the_unit(self, b):
        left, right, expected = antipode_axiom_sides(b)
        assert left == expected
        assert right == expected

    def test_explicit_algebra(self):
        left, right, expected = antipode_axiom_sides(C(2), "partition_qspart")
        assert left == right == expected == LinComb.zero()


class TestRegistry:
    def test_lookup(self):
        assert algebra_for(C(1)).name == "partition_qspart"
        assert get_algebra("vincular_qsgen").unit == parse_pattern("|")
        with pytest.raises(EvaluationError):
            get_algebra("nosuch")
        with pytest.raises(EvaluationError):
            algebra_for(3)

    def test_degree_statistics(self):
        assert degree_statistics(takeuchi_antipode(C(2, 2))) == {"max_size": 4, "max_block_count": 2}
