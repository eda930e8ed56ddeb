"""
Hopf algebra on vincular patterns: pairs (composition, permutation) of equal size.

The composition marks which chosen positions must be adjacent in a host;
the permutation fixes their relative order.
"""
import itertools
import logging
import os
import sys
from dataclasses import dataclass, field
from functools import lru_cache

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.combinatorics import Composition, Permutation, mask_elements, permutations_of, restricted_ranks
from core.config import check_size_guard, get_enumeration_method
from core.errors import DimensionError
from core.freealg import LinComb, Tensor, as_lincomb, bilinear_extend, linear_extend
from core.partition_hopf import gluing_pairs, quasi_shuffle_covers
from core.perm_hopf import order_compatible_permutations, perm_concat

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VincularPattern:
    blocks: Composition = field(default_factory=Composition)
    perm: Permutation = field(default_factory=Permutation)

    def __post_init__(self):
        if self.blocks.size != self.perm.size:
            raise DimensionError(
                f"Blocks {self.blocks} cover {self.blocks.size} positions but the permutation has {self.perm.size}")

    @classmethod
    def of(cls, parts, one_line) -> "VincularPattern":
        return cls(Composition(tuple(parts)), Permutation(tuple(one_line)))

    @property
    def size(self) -> int:
        return self.perm.size

    @property
    def block_count(self) -> int:
        return self.blocks.block_count

    def block_entries(self):
        entries = self.perm.one_line
        out = []
        offset = 0
        for p in self.blocks.parts:
            out.append(entries[offset:offset + p])
            offset += p
        return out

    def __str__(self):
        if self.size == 0:
            return "|"
        sep = "," if self.size > 9 else ""
        text = "|".join(sep.join(str(v) for v in chunk) for chunk in self.block_entries())
        if self.block_count == 1:
            text += "|"
        return text


EMPTY_PATTERN = VincularPattern()


def genconc(x: VincularPattern, y: VincularPattern) -> VincularPattern:
    return VincularPattern(Composition(x.blocks.parts + y.blocks.parts), perm_concat(x.perm, y.perm))


def deconcgen(x: VincularPattern) -> LinComb:
    """Simultaneous splits of the blocks and the permutation"""
    parts, one_line = x.blocks.parts, x.perm.one_line
    terms = []
    cut = 0
    for i in range(len(parts) + 1):
        if i > 0:
            cut += parts[i - 1]
        if max(one_line[:cut], default=0) != cut:
            continue
        left = VincularPattern(Composition(parts[:i]), Permutation(one_line[:cut]))
        right = VincularPattern(Composition(parts[i:]), Permutation(tuple(v - cut for v in one_line[cut:])))
        terms.append((Tensor(left, right), 1))
    return LinComb(terms)


def coqsgen(x: VincularPattern) -> LinComb:
    """
    Gluing coproduct on patterns: each gluing pair (I, I') of the blocks
    contributes (std(I), st(perm|A)) (x) (std(I'), st(perm|A')).
    """
    check_size_guard("coqsgen", x.size)
    return _coqsgen(x)


@lru_cache(maxsize=4096)
def _coqsgen(x: VincularPattern) -> LinComb:
    one_line = x.perm.one_line
    terms = {}
    for std_i, mask_i, std_j, mask_j in gluing_pairs(x.blocks):
        left = VincularPattern(std_i, Permutation(restricted_ranks(one_line, mask_elements(mask_i))))
        right = VincularPattern(std_j, Permutation(restricted_ranks(one_line, mask_elements(mask_j))))
        key = Tensor(left, right)
        terms[key] = terms.get(key, 0) + 1
    return LinComb(terms)


def qsgen(x: VincularPattern, y: VincularPattern, method: str = None) -> LinComb:
    """
    Quasi-shuffle product of patterns.

    Covers (A, A') are those of the composition quasi-shuffle; for each, every
    gamma in S_n with st(gamma|A) = perm_x and st(gamma|A') = perm_y gives the
    term (glued blocks, gamma).
    """
    check_size_guard("qsgen", x.size + y.size)
    return _qsgen(x, y, method or get_enumeration_method())


@lru_cache(maxsize=4096)
def _qsgen(x: VincularPattern, y: VincularPattern, method: str) -> LinComb:
    sigma, tau = x.perm.one_line, y.perm.one_line
    by_size = {}
    for n, A, B, g in quasi_shuffle_covers(x.blocks, y.blocks):
        by_size.setdefault(n, []).append((A, B, g))

    terms = {}
    for n, cover_list in sorted(by_size.items()):
        if method == "interleave":
            for A, B, g in cover_list:
                for gamma in order_compatible_permutations(n, [(A, sigma), (B, tau)]):
                    key = VincularPattern(g, Permutation(gamma))
                    terms[key] = terms.get(key, 0) + 1
        else:
            for gamma in itertools.permutations(range(1, n + 1)):
                for A, B, g in cover_list:
                    if restricted_ranks(gamma, A) == sigma and restricted_ranks(gamma, B) == tau:
                        key = VincularPattern(g, Permutation(gamma))
                        terms[key] = terms.get(key, 0) + 1
    logger.debug(f"[QSGEN] {x} * {y}: {len(terms)} terms via {method}")
    return LinComb(terms)


def embed_psi(s: Composition) -> LinComb:
    """s -> sum over all sigma of (s, sigma)"""
    check_size_guard("psi", s.size)
    return LinComb((VincularPattern(s, sigma), 1) for sigma in permutations_of(s.size))


def embed_phi(sigma: Permutation) -> VincularPattern:
    """sigma -> (singletons, sigma)"""
    return VincularPattern(Composition((1,) * sigma.size), sigma)


def counit(x) -> int:
    return as_lincomb(x).coefficient(EMPTY_PATTERN)


genconc_product = bilinear_extend(genconc)
qsgen_product = bilinear_extend(qsgen)
deconcgen_coproduct = linear_extend(deconcgen)
coqsgen_coproduct = linear_extend(coqsgen)
psi = linear_extend(embed_psi)
phi = linear_extend(embed_phi)
