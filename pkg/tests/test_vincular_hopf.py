import math

import pytest

from core.combinatorics import Composition, Permutation, compositions_up_to
from core.errors import DimensionError
from core.freealg import LinComb, Tensor, coproduct_left, coproduct_right, tensor_map, tensor_multiply
from core.parser import parse_pattern
from core.partition_hopf import coqspart, deconc, qspart
from core.perm_hopf import superinfiltration
from core.vincular_hopf import (EMPTY_PATTERN, VincularPattern, coqsgen, counit, deconcgen, deconcgen_coproduct,
                                embed_phi, embed_psi, genconc, phi, psi, qsgen, qsgen_product)


def V(text):
    return parse_pattern(text)


def T(a, b):
    return Tensor(V(a), V(b))


def L(*terms):
    return LinComb([(V(p), c) for p, c in terms])


class TestPatternType:
    def test_size_mismatch(self):
        with pytest.raises(DimensionError):
            VincularPattern(Composition((2,)), Permutation((1,)))

    @pytest.mark.parametrize("pattern, text", [
        (VincularPattern.of((2, 1), (2, 1, 3)), "21|3"),
        (VincularPattern.of((2,), (1, 2)), "12|"),
        (EMPTY_PATTERN, "|"),
        (VincularPattern.of((2, 9), (10, 2, 1, 3, 4, 5, 6, 7, 8, 9, 11)), "10,2|1,3,4,5,6,7,8,9,11"),
    ])
    def test_strings(self, pattern, text):
        assert str(pattern) == text
        assert V(text) == pattern


class TestConcatenation:
    def test_glued_blocks(self):
        assert genconc(V("12|"), V("21|")) == VincularPattern.of((2, 2), (1, 2, 4, 3))
        assert genconc(V("1|"), V("1|")) == V("1|2")
        assert genconc(EMPTY_PATTERN, V("21|3")) == V("21|3")

    def test_deconcatenation(self):
        assert deconcgen(V("12|")) == LinComb([(T("|", "12|"), 1), (T("12|", "|"), 1)])
        assert deconcgen(V("1|2")) == LinComb([(T("|", "1|2"), 1), (T("1|", "1|"), 1), (T("1|2", "|"), 1)])
        assert deconcgen(V("2|1")) == LinComb([(T("|", "2|1"), 1), (T("2|1", "|"), 1)])
        assert deconcgen(EMPTY_PATTERN) == LinComb.basis(T("|", "|"))


class TestGluingCoproduct:
    def test_separated_points(self):
        expected = LinComb([(T("|", "1|2"), 1), (T("1|2", "|"), 1), (T("1|", "1|"), 2), (T("1|", "1|2"), 2),
                            (T("1|2", "1|"), 2), (T("1|2", "1|2"), 1)])
        assert coqsgen(V("1|2")) == expected

    def test_empty(self):
        assert coqsgen(EMPTY_PATTERN) == LinComb.basis(T("|", "|"))

    @pytest.mark.parametrize("text", ["1|", "12|", "21|", "1|2", "132|", "1|32", "2|1|3", "12|34"])
    def test_coassociative(self, text):
        delta = coqsgen(V(text))
        assert coproduct_left(delta, coqsgen) == coproduct_right(delta, coqsgen)

    @pytest.mark.parametrize("x, y", [("1|", "1|"), ("12|", "1|"), ("21|", "1|2"), ("1|2", "1|")])
    def test_bialgebra(self, x, y):
        assert coqsgen(genconc(V(x), V(y))) == tensor_multiply(coqsgen(V(x)), coqsgen(V(y)), genconc)

    def test_partition_marginal(self):
        # every permutation contributes one term per gluing pair of the blocks
        for s in compositions_up_to(3):
            marginal = {}
            for pat in embed_psi(s):
                for t, c in coqsgen(pat).items():
                    key = Tensor(t[0].blocks, t[1].blocks)
                    marginal[key] = marginal.get(key, 0) + c
            assert LinComb(marginal) == math.factorial(s.size) * coqspart(s)


class TestQuasiShuffle:
    def test_points(self):
        assert qsgen(V("1|"), V("1|")) == L(("1|2", 2), ("2|1", 2), ("1|", 1))

    def test_glued_increasing_pairs(self):
        expected = L(("12|", 1), ("123|", 2), ("12|34", 2), ("13|24", 2), ("14|23", 2), ("23|14", 2),
                     ("24|13", 2), ("34|12", 2))
        assert qsgen(V("12|"), V("12|")) == expected

    def test_glued_increasing_and_decreasing(self):
        result = qsgen(V("12|"), V("21|"))
        assert sum(1 for p in result if p.size == 3) == 4
        assert sum(1 for p in result if p.size == 4) == 12
        assert {str(p) for p in result if p.size == 3} == {"132|", "213|", "231|", "312|"}
        assert all(c == 1 for p, c in result.items() if p.size == 3)

    def test_glued_decreasing_and_point(self):
        expected = L(("21|", 2), ("21|3", 1), ("31|2", 1), ("32|1", 1),
                     ("1|32", 1), ("2|31", 1), ("3|21", 1))
        assert qsgen(V("21|"), V("1|")) == expected

    @pytest.mark.parametrize("x, y", [("1|", "1|"), ("21|", "1|"), ("12|", "21|"), ("1|2", "1|")])
    def test_methods_agree(self, x, y):
        assert qsgen(V(x), V(y), method="interleave") == qsgen(V(x), V(y), method="brute")

    def test_commutative_with_unit(self):
        assert qsgen(V("21|"), V("1|2")) == qsgen(V("1|2"), V("21|"))
        assert qsgen(EMPTY_PATTERN, V("21|3")) == LinComb.basis(V("21|3"))

    def test_counit(self):
        assert counit(qsgen(EMPTY_PATTERN, EMPTY_PATTERN)) == 1


class TestEmbeddings:
    def test_psi(self):
        assert embed_psi(Composition()) == LinComb.basis(EMPTY_PATTERN)
        assert embed_psi(Composition((2,))) == L(("12|", 1), ("21|", 1))

    def test_phi(self):
        assert embed_phi(Permutation()) == EMPTY_PATTERN
        assert embed_phi(Permutation((2, 1))) == V("2|1")

    @pytest.mark.parametrize("s, t", [((1,), (1,)), ((2,), (1,)), ((1, 1), (1,)), ((2,), (2,))])
    def test_psi_homomorphism(self, s, t):
        s, t = Composition(s), Composition(t)
        assert psi(qspart(s, t)) == qsgen_product(psi(LinComb.basis(s)), psi(LinComb.basis(t)))

    @pytest.mark.parametrize("s", [(), (1,), (2,), (1, 1), (2, 1), (1, 2), (3,), (1, 1, 2)])
    def test_psi_carries_deconcatenation(self, s):
        s = Composition(s)
        assert deconcgen_coproduct(embed_psi(s)) == tensor_map(deconc(s), embed_psi, embed_psi)

    @pytest.mark.parametrize("a, b", [((1,), (1,)), ((2, 1), (1,)), ((1, 2), (2, 1))])
    def test_phi_homomorphism(self, a, b):
        a, b = Permutation(a), Permutation(b)
        assert phi(superinfiltration(a, b)) == qsgen_product(phi(LinComb.basis(a)), phi(LinComb.basis(b)))
