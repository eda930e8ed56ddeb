from fractions import Fraction

import pytest

from core.combinatorics import Composition
from core.freealg import (LinComb, Tensor, bilinear_extend, linear_extend, multiply_legs, pairing, render,
                          swap, tensor, tensor_map)
from core.partition_hopf import conc, deconc


def C(*parts):
    return Composition(parts)


def L(*terms):
    return LinComb(terms)


class TestLinComb:
    def test_add_zero_is_identity(self):
        x = L((C(2), 3), (C(1, 1), -1))
        assert x + LinComb.zero() == x
        assert x + 0 == x
        assert sum([x, x]) == 2 * x

    def test_coefficients_accumulate(self):
        assert LinComb.basis(C(2), 2) + LinComb.basis(C(2), 3) == LinComb.basis(C(2), 5)

    def test_cancellation_drops_terms(self):
        x = L((C(2), 1), (C(1), 4))
        assert (x + (-1) * x).is_zero()
        assert x - x == 0
        assert len(x - x) == 0

    def test_rational_coefficients_normalize(self):
        half = Fraction(1, 2) * LinComb.basis(C(2))
        total = half + half
        assert total.coefficient(C(2)) == 1
        assert isinstance(total.coefficient(C(2)), int)

    def test_rejects_inexact_coefficients(self):
        with pytest.raises(TypeError):
            LinComb.basis(C(1), 0.5)
        with pytest.raises(TypeError):
            LinComb.basis(C(1), True)

    def test_iterates_in_canonical_order(self):
        x = L((C(1, 1), 1), (C(3), 1), (C(2), 1), (C(), 1))
        assert list(x) == [C(), C(1, 1), C(2), C(3)]

    def test_tensors_order_leg_by_leg(self):
        x = L((Tensor(C(2), C(1)), 1), (Tensor(C(1), C(3)), 1))
        assert list(x) == [Tensor(C(1), C(3)), Tensor(C(2), C(1))]
        assert list(deconc(C(1, 1))) == [Tensor(C(), C(1, 1)), Tensor(C(1), C(1)), Tensor(C(1, 1), C())]
        assert render(deconc(C(2))) == "1*([] (x) [2]) + 1*([2] (x) [])"

    def test_immutable_equality_and_hash(self):
        x = L((C(2), 1), (C(1), 2))
        y = L((C(1), 2), (C(2), 1))
        assert x == y
        assert hash(x) == hash(y)


class TestRender:
    def test_render_terms(self):
        x = L((C(2), 1), (C(3), 2), (C(2, 2), 2))
        assert render(x) == "1*[2] + 2*[3] + 2*[2,2]"

    def test_render_negative_and_zero(self):
        assert render(L((C(1), -1), (C(2), 3))) == "- 1*[1] + 3*[2]"
        assert render(LinComb.zero()) == "0"
        assert render(LinComb.basis(C(1), Fraction(1, 2))) == "1/2*[1]"

    def test_render_wraps_tensors(self):
        assert render(deconc(C())) == "1*([] (x) [])"


class TestPairing:
    def test_basis_pairing(self):
        s, t = C(2), C(1, 1)
        assert pairing(LinComb.basis(s), LinComb.basis(s)) == 1
        assert pairing(LinComb.basis(s), LinComb.basis(t)) == 0

    def test_bilinear(self):
        s, t = LinComb.basis(C(2)), LinComb.basis(C(1, 1))
        assert pairing(2 * s + t, s - t) == 1


class TestExtensions:
    def test_linear_extend(self):
        double = linear_extend(lambda b: LinComb.basis(conc(b, b)))
        assert double(L((C(1), 2), (C(2), 1))) == L((C(1, 1), 2), (C(2, 2), 1))

    def test_bilinear_extend(self):
        product = bilinear_extend(conc)
        x = L((C(1), 1), (C(2), 1))
        assert product(x, LinComb.basis(C(3))) == L((C(1, 3), 1), (C(2, 3), 1))

    def test_tensor_and_swap(self):
        t = tensor(L((C(1), 2)), L((C(2), 1), (C(3), 1)))
        assert t == L((Tensor(C(1), C(2)), 2), (Tensor(C(1), C(3)), 2))
        assert swap(t) == L((Tensor(C(2), C(1)), 2), (Tensor(C(3), C(1)), 2))
        assert str(Tensor(C(1), C(2))) == "[1] (x) [2]"

    def test_tensor_map_and_multiply_legs(self):
        t = LinComb.basis(Tensor(C(1), C(2)))
        mapped = tensor_map(t, None, lambda b: LinComb.basis(conc(b, b)))
        assert mapped == LinComb.basis(Tensor(C(1), C(2, 2)))
        assert multiply_legs(mapped, conc) == LinComb.basis(C(1, 2, 2))

    def test_tensor_map_arity_mismatch(self):
        with pytest.raises(ValueError):
            tensor_map(LinComb.basis(Tensor(C(1), C(2))), None)
