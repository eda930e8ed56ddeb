import pytest

import config as app_config
from core.combinatorics import (Composition, compositions_up_to, glue, interval_subpartitions,
                                standardize_partition)
from core.errors import SizeGuardError
from core.freealg import LinComb, Tensor, coproduct_left, coproduct_right, swap
from core.partition_hopf import (EMPTY, conc, coqspart, counit, deconc, gluing_pairs, qspart, qspart_via_sections,
                                 section_coefficient, shuffle_coproduct, single_block_product, unit)


def C(*parts):
    return Composition(parts)


def T(a, b):
    return Tensor(a, b)


def L(*terms):
    return LinComb(terms)


class TestConcatenation:
    def test_examples(self):
        assert conc(C(2), C(1, 1)) == C(2, 1, 1)
        assert conc(EMPTY, C(2, 1)) == C(2, 1)
        assert conc(C(1, 2), C(3)) == C(1, 2, 3)
        assert conc(conc(C(1), C(2)), C(3)) == conc(C(1), conc(C(2), C(3)))


class TestGluingCoproduct:
    def test_single_block(self):
        expected = L((T(EMPTY, C(2)), 1), (T(C(1), C(2)), 2), (T(C(2), EMPTY), 1), (T(C(2), C(1)), 2),
                     (T(C(2), C(2)), 1), (T(C(1, 1), C(2)), 1), (T(C(2), C(1, 1)), 1))
        assert coqspart(C(2)) == expected

    def test_two_singletons(self):
        expected = L((T(EMPTY, C(1, 1)), 1), (T(C(1), C(1)), 2), (T(C(1), C(1, 1)), 2),
                     (T(C(1, 1), EMPTY), 1), (T(C(1, 1), C(1)), 2), (T(C(1, 1), C(1, 1)), 1))
        assert coqspart(C(1, 1)) == expected

    def test_empty(self):
        assert coqspart(EMPTY) == LinComb.basis(T(EMPTY, EMPTY))

    @pytest.mark.parametrize("s", compositions_up_to(4))
    def test_coassociative_and_cocommutative(self, s):
        delta = coqspart(s)
        assert coproduct_left(delta, coqspart) == coproduct_right(delta, coqspart)
        assert swap(delta) == delta

    def test_size_guard(self, monkeypatch):
        monkeypatch.setenv("VINC_SIZE_GUARD", "2")
        with pytest.raises(SizeGuardError):
            coqspart(C(1, 2))

    @pytest.mark.parametrize("disjoint", [False, True])
    @pytest.mark.parametrize("s", compositions_up_to(4))
    def test_gluing_pairs_match_pairwise_search(self, s, disjoint):
        full = (1 << s.size) - 1
        options = interval_subpartitions(s)
        expected = sorted(
            (str(standardize_partition(I)), mask_i, str(standardize_partition(J)), mask_j)
            for I, mask_i in options for J, mask_j in options
            if mask_i | mask_j == full and not (disjoint and mask_i & mask_j) and glue(I, J) == s.canonical())
        found = sorted((str(std_i), mask_i, str(std_j), mask_j)
                       for std_i, mask_i, std_j, mask_j in gluing_pairs(s, disjoint))
        assert found == expected

    @pytest.mark.parametrize("n, expected", [(1, 3), (2, 9), (3, 33), (4, 123), (5, 459), (8, 23859)])
    def test_single_block_pair_counts(self, n, expected):
        assert len(gluing_pairs(C(n))) == expected
        assert sum(c for _, c in coqspart(C(n)).items()) == expected

    def test_default_guard_bounds_the_enumeration(self):
        limit = app_config.DEFAULT_SIZE_GUARDS["coqspart"]
        assert sum(c for _, c in coqspart(C(limit)).items()) == 332313
        with pytest.raises(SizeGuardError):
            coqspart(C(limit + 1))


class TestShuffleCoproduct:
    def test_examples(self):
        assert shuffle_coproduct(C(1, 1)) == L((T(EMPTY, C(1, 1)), 1), (T(C(1, 1), EMPTY), 1), (T(C(1), C(1)), 2))
        assert shuffle_coproduct(C(2)) == L((T(EMPTY, C(2)), 1), (T(C(2), EMPTY), 1))
        assert shuffle_coproduct(EMPTY) == LinComb.basis(T(EMPTY, EMPTY))


class TestQuasiShuffle:
    def test_two_single_blocks(self):
        assert qspart(C(2), C(2)) == L((C(2, 2), 2), (C(3), 2), (C(2), 1))

    def test_block_with_singletons(self):
        expected = L((C(2), 1), (C(2, 1), 2), (C(1, 2), 2), (C(1, 1, 2), 1), (C(1, 2, 1), 1), (C(2, 1, 1), 1))
        assert qspart(C(2), C(1, 1)) == expected

    def test_unit(self):
        for s in compositions_up_to(3):
            assert qspart(EMPTY, s) == LinComb.basis(s)
            assert qspart(s, EMPTY) == LinComb.basis(s)

    def test_grading(self):
        s, t = C(1, 2), C(2, 1)
        for g in qspart(s, t):
            assert max(s.size, t.size) <= g.size <= s.size + t.size
            assert g.block_count <= s.block_count + t.block_count

    @pytest.mark.parametrize("s", compositions_up_to(3))
    @pytest.mark.parametrize("t", compositions_up_to(3))
    def test_section_oracle(self, s, t):
        assert qspart(s, t) == qspart_via_sections(s, t)

    def test_section_coefficients(self):
        assert section_coefficient(C(1), C(2), C(2)) == 2
        assert section_coefficient(C(1), C(1), C(1, 1)) == 2
        for g in compositions_up_to(3):
            assert section_coefficient(EMPTY, g, g) == 1

    @pytest.mark.parametrize("m", range(1, 6))
    @pytest.mark.parametrize("n", range(1, 6))
    def test_single_block_closed_form(self, m, n):
        assert single_block_product(m, n) == qspart(C(m), C(n))


class TestDeconcatenation:
    def test_examples(self):
        assert deconc(C(2, 1)) == L((T(EMPTY, C(2, 1)), 1), (T(C(2), C(1)), 1), (T(C(2, 1), EMPTY), 1))
        assert deconc(C(2, 2)) == L((T(EMPTY, C(2, 2)), 1), (T(C(2), C(2)), 1), (T(C(2, 2), EMPTY), 1))
        assert deconc(EMPTY) == LinComb.basis(T(EMPTY, EMPTY))

    def test_unit_and_counit(self):
        assert unit() == LinComb.basis(EMPTY)
        assert counit(2 * unit() + LinComb.basis(C(1))) == 2
