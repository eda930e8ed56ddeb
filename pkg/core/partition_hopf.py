"""
The two bialgebra structures on standardized interval partitions (compositions).

(conc, coqspart): concatenation with the gluing coproduct.
(qspart, deconc): the dual quasi-shuffle product with deconcatenation.
"""
import itertools
import logging
import os
import sys
from functools import lru_cache
from typing import List, Tuple

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.combinatorics import (Composition, composition_concat, compositions_up_to, fit_composition,
                                glue, standardize_partition)
from core.config import check_size_guard
from core.freealg import LinComb, Tensor, as_lincomb, bilinear_extend, linear_extend

logger = logging.getLogger(__name__)

EMPTY = Composition()


def conc(s: Composition, t: Composition) -> Composition:
    return composition_concat(s, t)


conc_product = bilinear_extend(conc)


def coqspart(s: Composition) -> LinComb:
    """
    Gluing coproduct: sum over covers A u A' = [n] and interval partitions I of A,
    I' of A' whose gluing is s, of std(I) (x) std(I').

    Blocks of I and I' always lie inside blocks of s, so only those candidates
    are enumerated; a pair counts when it covers [n] and glues back to s.
    """
    check_size_guard("coqspart", s.size)
    return _coqspart(s, disjoint=False)


def shuffle_coproduct(s: Composition) -> LinComb:
    """The co-shuffle part of coqspart: only disjoint covers A + A' = [n]"""
    check_size_guard("coqspart", s.size)
    return _coqspart(s, disjoint=True)


# per-position state of one side while enumerating gluing pairs
_ABSENT, _NEW, _CONT = 0, 1, 2


@lru_cache(maxsize=1024)
def gluing_pairs(s: Composition, disjoint: bool = False) -> Tuple[Tuple[Composition, int, Composition, int], ...]:
    """
    Every (std(I), mask(I), std(I'), mask(I')) with glue(I, I') = canonical(s)
    and the ground sets covering [n] (disjointly when asked).

    Built position by position: each side either skips x, opens a block at x,
    or extends its block ending at x-1. Blocks never cross a block of s, and
    inside a block of s every step x-1 -> x must be carried by some block,
    which is exactly the condition for the glued components to be the blocks of s.
    """
    n = s.size
    block_starts = {b.start for b in s.canonical().blocks}
    i_parts: List[int] = []
    j_parts: List[int] = []
    pairs = []

    def side_states(prev_present: bool, at_start: bool):
        yield _ABSENT
        yield _NEW
        if prev_present and not at_start:
            yield _CONT

    def walk(x: int, mask_i: int, mask_j: int, i_prev: bool, j_prev: bool):
        if x > n:
            pairs.append((Composition(tuple(i_parts)), mask_i, Composition(tuple(j_parts)), mask_j))
            return
        at_start = x in block_starts
        bit = 1 << (x - 1)
        for si in side_states(i_prev, at_start):
            for sj in side_states(j_prev, at_start):
                if si == _ABSENT and sj == _ABSENT:
                    continue
                if disjoint and si != _ABSENT and sj != _ABSENT:
                    continue
                if not at_start and si != _CONT and sj != _CONT:
                    continue
                _apply(i_parts, si)
                _apply(j_parts, sj)
                walk(x + 1,
                     mask_i | bit if si != _ABSENT else mask_i,
                     mask_j | bit if sj != _ABSENT else mask_j,
                     si != _ABSENT, sj != _ABSENT)
                _undo(i_parts, si)
                _undo(j_parts, sj)

    walk(1, 0, 0, False, False)
    return tuple(pairs)


def _apply(parts: List[int], state: int):
    if state == _NEW:
        parts.append(1)
    elif state == _CONT:
        parts[-1] += 1


def _undo(parts: List[int], state: int):
    if state == _NEW:
        parts.pop()
    elif state == _CONT:
        parts[-1] -= 1


@lru_cache(maxsize=4096)
def _coqspart(s: Composition, disjoint: bool) -> LinComb:
    terms = {}
    for std_i, _, std_j, _ in gluing_pairs(s, disjoint):
        key = Tensor(std_i, std_j)
        terms[key] = terms.get(key, 0) + 1
    logger.debug(f"[COQSPART] {s}: {len(terms)} terms")
    return LinComb(terms)


quasi_coproduct = linear_extend(coqspart)


def qspart(s: Composition, t: Composition) -> LinComb:
    """
    Quasi-shuffle product of two compositions.

    For every n from max(|s|,|t|) to |s|+|t| and every cover A u A' = [n]
    where A splits into runs shaped like s and A' into runs shaped like t,
    the glued partition contributes one term.
    """
    check_size_guard("qspart", s.size + t.size)
    return _qspart(s, t)


@lru_cache(maxsize=1024)
def quasi_shuffle_covers(s: Composition, t: Composition) -> Tuple[Tuple[int, Tuple[int, ...], Tuple[int, ...], Composition], ...]:
    """
    Every (n, A, A', g): A u A' = [n], A fits s, A' fits t, g = std(glue(I, I')).
    """
    m, k = s.size, t.size
    out = []
    for n in range(max(m, k), m + k + 1):
        ground = set(range(1, n + 1))
        for A in itertools.combinations(range(1, n + 1), m):
            I = fit_composition(A, s)
            if I is None:
                continue
            rest = tuple(sorted(ground.difference(A)))
            extra = k - len(rest)
            if extra < 0:
                continue
            for shared in itertools.combinations(A, extra):
                B = tuple(sorted(rest + shared))
                J = fit_composition(B, t)
                if J is None:
                    continue
                out.append((n, A, B, standardize_partition(glue(I, J))))
    return tuple(out)


@lru_cache(maxsize=4096)
def _qspart(s: Composition, t: Composition) -> LinComb:
    terms = {}
    for _, _, _, g in quasi_shuffle_covers(s, t):
        terms[g] = terms.get(g, 0) + 1
    return LinComb(terms)


quasi_shuffle = bilinear_extend(qspart)


def deconc(s: Composition) -> LinComb:
    """All splits s = a . b at the k+1 block boundaries"""
    parts = s.parts
    return LinComb([(Tensor(Composition(parts[:i]), Composition(parts[i:])), 1)
                    for i in range(len(parts) + 1)])


deconcatenation = linear_extend(deconc)


def section_coefficient(s: Composition, t: Composition, g: Composition) -> int:
    """<s (x) t, coqspart(g)>, the multiplicity of g in s * t"""
    return coqspart(g).coefficient(Tensor(s, t))


def qspart_via_sections(s: Composition, t: Composition) -> LinComb:
    """qspart computed from section coefficients over every candidate g"""
    lo, hi = max(s.size, t.size), s.size + t.size
    terms = {}
    for g in compositions_up_to(hi, lo):
        c = section_coefficient(s, t, g)
        if c:
            terms[g] = c
    return LinComb(terms)


def single_block_product(m: int, n: int) -> LinComb:
    """Closed form of (m) * (n) for two single-block compositions"""
    if m < 1 or n < 1:
        raise ValueError(f"Single blocks need positive sizes, got {m} and {n}")
    lo, hi = min(m, n), max(m, n)
    terms = [(Composition((m, n)), 1), (Composition((n, m)), 1)]
    terms += [(Composition((m + n - i,)), 2) for i in range(1, lo)]
    terms.append((Composition((hi,)), hi - lo + 1))
    return LinComb(terms)


def counit(x) -> int:
    return as_lincomb(x).coefficient(EMPTY)


def unit(c=1) -> LinComb:
    return LinComb.basis(EMPTY, c)
