"""Words on positive integers and the relabeling isomorphism to compositions"""
import os
import sys
from dataclasses import dataclass

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.combinatorics import Composition
from core.freealg import LinComb, Tensor, bilinear_extend, linear_extend
from core.partition_hopf import qspart


@dataclass(frozen=True)
class IntWord(Composition):
    """A word n1.n2...nk; shares its data with the composition (n1,...,nk)"""

    @property
    def letters(self):
        return self.parts

    def __str__(self):
        if not self.parts:
            return "."
        if len(self.parts) == 1:
            return f"{self.parts[0]}."
        return ".".join(str(p) for p in self.parts)


EMPTY_WORD = IntWord()


def phi(w: IntWord) -> Composition:
    return Composition(w.parts)


def phi_inverse(s: Composition) -> IntWord:
    return IntWord(s.parts)


def word_concat(u: IntWord, v: IntWord) -> IntWord:
    return IntWord(u.parts + v.parts)


def word_deconc(w: IntWord) -> LinComb:
    return LinComb([(Tensor(IntWord(w.parts[:i]), IntWord(w.parts[i:])), 1)
                    for i in range(len(w.parts) + 1)])


def qswrd(u: IntWord, v: IntWord) -> LinComb:
    """Quasi-shuffle of words, transported from compositions through phi"""
    return LinComb((phi_inverse(g), c) for g, c in qspart(phi(u), phi(v)).items())


phi_linear = linear_extend(phi)
phi_inverse_linear = linear_extend(phi_inverse)
qswrd_product = bilinear_extend(qswrd)
