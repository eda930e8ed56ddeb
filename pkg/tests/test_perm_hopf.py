import pytest

from core.combinatorics import Permutation, permutations_of
from core.errors import SizeGuardError
from core.freealg import LinComb, Tensor, pairing, tensor
from core.perm_hopf import (EMPTY_PERM, counit, delta_conc, delta_star, delta_superinfiltration, mr_star,
                            mr_star_prime, order_compatible_permutations, pc_count, perm_concat,
                            superinfiltration, supershuffle)


def P(digits):
    return Permutation(tuple(int(ch) for ch in digits)) if digits else EMPTY_PERM


def T(a, b):
    return Tensor(P(a), P(b))


def L(*terms):
    return LinComb([(P(p) if isinstance(p, str) else p, c) for p, c in terms])


class TestSuperinfiltration:
    def test_points(self):
        assert superinfiltration(P("1"), P("1")) == L(("1", 1), ("12", 2), ("21", 2))

    def test_unit(self):
        assert superinfiltration(EMPTY_PERM, P("231")) == LinComb.basis(P("231"))

    def test_coefficient_on_12(self):
        assert superinfiltration(P("12"), P("1")).coefficient(P("12")) == 2

    @pytest.mark.parametrize("method", ["brute", "interleave"])
    def test_methods_agree(self, method):
        assert superinfiltration(P("21"), P("12"), method=method) == superinfiltration(P("21"), P("12"), "brute")

    def test_coproduct(self):
        expected = LinComb([(T("", "21"), 1), (T("1", "1"), 2), (T("1", "21"), 2), (T("21", ""), 1),
                            (T("21", "1"), 2), (T("21", "21"), 1)])
        assert delta_superinfiltration(P("21")) == expected
        assert delta_superinfiltration(EMPTY_PERM) == LinComb.basis(T("", ""))

    def test_duality(self):
        # <sigma (x) tau, Delta(gamma)> is the coefficient of gamma in sigma * tau
        for sigma in (P("1"), P("12"), P("21")):
            for tau in (P("1"), P("21")):
                product = superinfiltration(sigma, tau)
                for n in range(0, 5):
                    for gamma in permutations_of(n):
                        dual = pairing(tensor(LinComb.basis(sigma), LinComb.basis(tau)),
                                       delta_superinfiltration(gamma))
                        assert product.coefficient(gamma) == dual

    def test_size_guard(self, monkeypatch):
        monkeypatch.setenv("VINC_SIZE_GUARD", "3")
        with pytest.raises(SizeGuardError):
            superinfiltration(P("12"), P("21"))


class TestConcatenation:
    def test_examples(self):
        assert perm_concat(P("21"), P("12")) == P("2134")
        assert perm_concat(EMPTY_PERM, P("21")) == P("21")
        assert perm_concat(P("1"), P("1")) == P("12")

    def test_coproduct(self):
        assert delta_conc(P("12")) == LinComb([(T("", "12"), 1), (T("1", "1"), 1), (T("12", ""), 1)])
        assert delta_conc(P("21")) == LinComb([(T("", "21"), 1), (T("21", ""), 1)])
        assert delta_conc(P("2134")).coefficient(T("21", "12")) == 1


class TestSupershuffle:
    def test_twenty_terms(self):
        expected = L(("1243", 1), ("1324", 1), ("1342", 2), ("1423", 2), ("1432", 3), ("2134", 1),
                     ("2314", 2), ("2341", 3), ("2413", 1), ("2431", 2), ("3124", 2), ("3142", 1),
                     ("3214", 3), ("3241", 2), ("3421", 1), ("4123", 3), ("4132", 2), ("4213", 2),
                     ("4231", 1), ("4312", 1))
        result = supershuffle(P("12"), P("21"))
        assert len(result) == 20
        assert result == expected

    def test_points_and_unit(self):
        assert supershuffle(P("1"), P("1")) == L(("12", 2), ("21", 2))
        assert supershuffle(EMPTY_PERM, P("12")) == LinComb.basis(P("12"))


class TestMalvenutoReutenauer:
    def test_star(self):
        assert mr_star(P("12"), P("21")) == L(("1243", 1), ("1342", 1), ("1432", 1), ("2341", 1),
                                              ("2431", 1), ("3421", 1))

    def test_star_prime(self):
        assert mr_star_prime(P("12"), P("21")) == L(("1243", 1), ("1423", 1), ("4123", 1), ("1432", 1),
                                                    ("4312", 1), ("4132", 1))

    def test_delta_star(self):
        expected = LinComb([(T("", "1243"), 1), (T("1", "132"), 1), (T("12", "21"), 1), (T("123", "1"), 1),
                            (T("1243", ""), 1)])
        assert delta_star(P("1243")) == expected


class TestPatternCounts:
    def test_worked_example(self):
        host = P("132")
        assert pc_count(host, P("1")) == 3
        assert pc_count(host, P("12")) == 2
        assert pc_count(host, P("21")) == 1
        assert pc_count(host, host) == 1
        assert pc_count(host, EMPTY_PERM) == 1

    def test_character_on_points(self):
        host = P("132")
        product = superinfiltration(P("1"), P("1"))
        assert sum(c * pc_count(host, g) for g, c in product.items()) == pc_count(host, P("1")) ** 2

    def test_order_compatible_permutations(self):
        found = set(order_compatible_permutations(3, [((1, 3), (2, 1))]))
        assert found == {(2, 3, 1), (3, 1, 2), (3, 2, 1)}

    def test_counit(self):
        assert counit(superinfiltration(EMPTY_PERM, EMPTY_PERM)) == 1
