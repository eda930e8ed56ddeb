"""
Generic connected filtered Hopf algebra machinery: the Takeuchi antipode and
the antipode axiom check, over any registered (product, coproduct, unit).
"""
import logging
import os
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.combinatorics import Composition, Permutation
from core.config import check_size_guard
from core.errors import EvaluationError
from core.freealg import LinComb, Tensor, as_lincomb, bilinear_extend, multiply_legs, tensor_map
from core import partition_hopf, perm_hopf, vincular_hopf, word_iso

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HopfAlgebra:
    name: str
    basis_type: type
    product: Callable
    coproduct: Callable
    unit: object

    def counit(self, x) -> int:
        return as_lincomb(x).coefficient(self.unit)

    def multiply(self, x, y) -> LinComb:
        return bilinear_extend(self.product)(x, y)


ALGEBRAS: Dict[str, HopfAlgebra] = {
    "partition_qspart": HopfAlgebra("partition_qspart", Composition, partition_hopf.qspart,
                                    partition_hopf.deconc, partition_hopf.EMPTY),
    "vincular_qsgen": HopfAlgebra("vincular_qsgen", vincular_hopf.VincularPattern, vincular_hopf.qsgen,
                                  vincular_hopf.deconcgen, vincular_hopf.EMPTY_PATTERN),
    "permutation_superinf": HopfAlgebra("permutation_superinf", Permutation, perm_hopf.superinfiltration,
                                        perm_hopf.delta_conc, perm_hopf.EMPTY_PERM),
    "word_qswrd": HopfAlgebra("word_qswrd", word_iso.IntWord, word_iso.qswrd,
                              word_iso.word_deconc, word_iso.EMPTY_WORD),
}


def get_algebra(algebra) -> HopfAlgebra:
    if isinstance(algebra, HopfAlgebra):
        return algebra
    if algebra not in ALGEBRAS:
        raise EvaluationError(f"Unknown Hopf algebra: {algebra} (known: {', '.join(sorted(ALGEBRAS))})")
    return ALGEBRAS[algebra]


def algebra_for(basis_element) -> HopfAlgebra:
    """Infer the Hopf algebra from a basis element's type"""
    for alg in ALGEBRAS.values():
        if type(basis_element) is alg.basis_type:
            return alg
    raise EvaluationError(f"No Hopf algebra is registered for {type(basis_element).__name__}")


def takeuchi_antipode(x, algebra=None) -> LinComb:
    """
    S = sum_k (-1)^k m^(k-1) (id - u e)^(x)k Delta^(k-1).

    On a basis element of size d the k-th term vanishes for k > d; the term
    k = d+1 is still computed and must be empty.
    """
    x = as_lincomb(x)
    total = LinComb.zero()
    for b, c in x.items():
        alg = get_algebra(algebra) if algebra is not None else algebra_for(b)
        if b != alg.unit:
            check_size_guard("antipode", b.size)
        total = total + c * _antipode_basis(alg.name, b)
    return total


@lru_cache(maxsize=4096)
def _antipode_basis(name: str, b) -> LinComb:
    alg = ALGEBRAS[name]
    if b == alg.unit:
        return LinComb.basis(alg.unit)

    degree = b.size
    chains = {(b,): 1}
    total = LinComb.zero()
    for k in range(1, degree + 2):
        if k > 1:
            chains = _split_last(alg, chains)
        if not chains:
            break
        if k > degree:
            raise ArithmeticError(f"Takeuchi series for {b} did not truncate at degree {degree}")
        term = multiply_legs(LinComb({Tensor(*legs): c for legs, c in chains.items()}), alg.product)
        total = total + (-1) ** k * term
    logger.debug(f"[ANTIPODE] {name} {b}: {len(total)} terms")
    return total


def _split_last(alg: HopfAlgebra, chains: dict) -> dict:
    """Apply the reduced coproduct to the last leg, dropping terms with a unit leg"""
    out = {}
    for legs, c in chains.items():
        for t, d in alg.coproduct(legs[-1]).items():
            left, right = t.legs
            if left == alg.unit or right == alg.unit:
                continue
            key = legs[:-1] + (left, right)
            out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}


def antipode_axiom_sides(b, algebra=None):
    """
    (m(S (x) id)Delta(b), m(id (x) S)Delta(b), u e(b)); a correct antipode makes
    all three equal.
    """
    alg = get_algebra(algebra) if algebra is not None else algebra_for(b)
    delta = alg.coproduct(b)
    antipode = lambda y: takeuchi_antipode(y, alg)
    left = multiply_legs(tensor_map(delta, antipode, None), alg.product)
    right = multiply_legs(tensor_map(delta, None, antipode), alg.product)
    expected = LinComb.basis(alg.unit, alg.counit(b)) if alg.counit(b) else LinComb.zero()
    return left, right, expected


def degree_statistics(x) -> dict:
    """Largest size and largest block count among the terms of x"""
    max_size = 0
    max_blocks = 0
    for b in as_lincomb(x):
        legs = b.legs if isinstance(b, Tensor) else (b,)
        max_size = max(max_size, b.size)
        max_blocks = max(max_blocks, sum(_block_count(leg) for leg in legs))
    return {"max_size": max_size, "max_block_count": max_blocks}


def _block_count(b) -> int:
    if hasattr(b, "block_count"):
        return b.block_count
    return b.size
