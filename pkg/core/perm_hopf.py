"""
Permutation-side operations: the superinfiltration bialgebra, the supershuffle,
the three comparison operations on permutations, and permutation pattern counts.
"""
import itertools
import logging
import os
import sys
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.combinatorics import Permutation, restricted_ranks, standardize
from core.config import check_size_guard, get_enumeration_method
from core.freealg import LinComb, Tensor, as_lincomb, bilinear_extend, linear_extend

logger = logging.getLogger(__name__)

EMPTY_PERM = Permutation()

Cover = Tuple[Tuple[int, ...], Tuple[int, ...]]


def perm_concat(alpha: Permutation, beta: Permutation) -> Permutation:
    """alpha_1...alpha_m (beta_1+m)...(beta_n+m)"""
    m = alpha.size
    return Permutation(alpha.one_line + tuple(v + m for v in beta.one_line))


def delta_conc(sigma: Permutation) -> LinComb:
    """Sum over the splittings sigma = alpha . beta"""
    one_line = sigma.one_line
    terms = []
    for i in range(len(one_line) + 1):
        if max(one_line[:i], default=0) == i:
            alpha = Permutation(one_line[:i])
            beta = Permutation(tuple(v - i for v in one_line[i:]))
            terms.append((Tensor(alpha, beta), 1))
    return LinComb(terms)


def covers(n: int, m: int, k: int, disjoint: bool = False) -> List[Cover]:
    """Pairs (A, B) of position sets with |A| = m, |B| = k and A u B = [n]"""
    out = []
    ground = set(range(1, n + 1))
    for A in itertools.combinations(range(1, n + 1), m):
        rest = tuple(sorted(ground.difference(A)))
        extra = k - len(rest)
        if extra < 0 or (disjoint and extra > 0):
            continue
        for shared in itertools.combinations(A, extra):
            out.append((A, tuple(sorted(rest + shared))))
    return out


def order_compatible_permutations(n: int, constraints: Sequence[Tuple[Sequence[int], Sequence[int]]]) -> Iterator[Tuple[int, ...]]:
    """
    Every gamma in S_n with st(gamma|positions) = perm for each (positions, perm).

    Each constraint is a chain on positions ordered by value; the results are
    the linear extensions of the union of the chains, built by handing out
    values 1..n to positions whose chain predecessors already hold a value.
    """
    preds = {pos: set() for pos in range(1, n + 1)}
    for positions, perm in constraints:
        chain = [positions[i] for i in sorted(range(len(perm)), key=lambda i: perm[i])]
        for lower, upper in zip(chain, chain[1:]):
            preds[upper].add(lower)

    values = [0] * n
    assigned = set()

    def walk(v):
        if v > n:
            yield tuple(values)
            return
        for pos in range(1, n + 1):
            if pos not in assigned and preds[pos] <= assigned:
                values[pos - 1] = v
                assigned.add(pos)
                yield from walk(v + 1)
                assigned.discard(pos)

    yield from walk(1)


def restriction_products(sigma: Tuple[int, ...], tau: Tuple[int, ...], sizes, disjoint: bool, method: str) -> dict:
    """
    Count gamma over every cover (A, B) of [n] with st(gamma|A) = sigma and
    st(gamma|B) = tau, for n in `sizes`. Returns {gamma one-line: multiplicity}.
    """
    counts = {}
    m, k = len(sigma), len(tau)
    for n in sizes:
        cover_list = covers(n, m, k, disjoint)
        if not cover_list:
            continue
        if method == "interleave":
            for A, B in cover_list:
                for gamma in order_compatible_permutations(n, [(A, sigma), (B, tau)]):
                    counts[gamma] = counts.get(gamma, 0) + 1
        else:
            for gamma in itertools.permutations(range(1, n + 1)):
                for A, B in cover_list:
                    if restricted_ranks(gamma, A) == sigma and restricted_ranks(gamma, B) == tau:
                        counts[gamma] = counts.get(gamma, 0) + 1
    return counts


def superinfiltration(sigma: Permutation, tau: Permutation, method: str = None) -> LinComb:
    check_size_guard("superinfiltration", sigma.size + tau.size)
    return _superinfiltration(sigma, tau, method or get_enumeration_method())


@lru_cache(maxsize=4096)
def _superinfiltration(sigma: Permutation, tau: Permutation, method: str) -> LinComb:
    m, k = sigma.size, tau.size
    counts = restriction_products(sigma.one_line, tau.one_line, range(max(m, k), m + k + 1), False, method)
    logger.debug(f"[SUPERINF] {sigma} * {tau}: {len(counts)} terms via {method}")
    return LinComb((Permutation(g), c) for g, c in counts.items())


def supershuffle(sigma: Permutation, tau: Permutation, method: str = None) -> LinComb:
    """Disjoint-cover version of superinfiltration"""
    check_size_guard("supershuffle", sigma.size + tau.size)
    return _supershuffle(sigma, tau, method or get_enumeration_method())


@lru_cache(maxsize=4096)
def _supershuffle(sigma: Permutation, tau: Permutation, method: str) -> LinComb:
    n = sigma.size + tau.size
    counts = restriction_products(sigma.one_line, tau.one_line, (n,), True, method)
    return LinComb((Permutation(g), c) for g, c in counts.items())


def delta_superinfiltration(sigma: Permutation) -> LinComb:
    """Sum over covers A u B = [m] of st(sigma|A) (x) st(sigma|B)"""
    check_size_guard("delta_superinfiltration", sigma.size)
    return _delta_superinfiltration(sigma)


@lru_cache(maxsize=4096)
def _delta_superinfiltration(sigma: Permutation) -> LinComb:
    m = sigma.size
    terms = {}
    for assignment in itertools.product((0, 1, 2), repeat=m):
        A = tuple(i + 1 for i, a in enumerate(assignment) if a != 1)
        B = tuple(i + 1 for i, a in enumerate(assignment) if a != 0)
        key = Tensor(Permutation(restricted_ranks(sigma.one_line, A)),
                     Permutation(restricted_ranks(sigma.one_line, B)))
        terms[key] = terms.get(key, 0) + 1
    return LinComb(terms)


def mr_star(sigma: Permutation, tau: Permutation) -> LinComb:
    """gamma in S_{m+n} whose first m letters standardize to sigma and last n to tau"""
    m, n = sigma.size, tau.size
    check_size_guard("mr", m + n)
    terms = []
    for low in itertools.combinations(range(1, m + n + 1), m):
        high = sorted(set(range(1, m + n + 1)).difference(low))
        gamma = tuple(low[v - 1] for v in sigma.one_line) + tuple(high[v - 1] for v in tau.one_line)
        terms.append((Permutation(gamma), 1))
    return LinComb(terms)


def mr_star_prime(sigma: Permutation, tau: Permutation) -> LinComb:
    """Word shuffle of sigma with tau shifted by |sigma|"""
    m, n = sigma.size, tau.size
    check_size_guard("mr", m + n)
    shifted = [v + m for v in tau.one_line]
    terms = []
    for slots in itertools.combinations(range(m + n), m):
        slot_set = set(slots)
        left, right = iter(sigma.one_line), iter(shifted)
        gamma = tuple(next(left) if i in slot_set else next(right) for i in range(m + n))
        terms.append((Permutation(gamma), 1))
    return LinComb(terms)


def delta_star(sigma: Permutation) -> LinComb:
    one_line = sigma.one_line
    return LinComb([(Tensor(standardize(one_line[:i]), standardize(one_line[i:])), 1)
                    for i in range(len(one_line) + 1)])


def pc_count(host: Permutation, sigma: Permutation) -> int:
    """Number of |sigma|-subsets A of positions with st(host|A) = sigma"""
    target = sigma.one_line
    return sum(1 for A in itertools.combinations(range(1, host.size + 1), sigma.size)
               if restricted_ranks(host.one_line, A) == target)


def counit(x) -> int:
    return as_lincomb(x).coefficient(EMPTY_PERM)


concat_product = bilinear_extend(perm_concat)
superinf_product = bilinear_extend(superinfiltration)
supershuffle_product = bilinear_extend(supershuffle)
conc_coproduct = linear_extend(delta_conc)
superinf_coproduct = linear_extend(delta_superinfiltration)
