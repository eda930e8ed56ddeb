"""
Counting signatures: IPC on interval partitions, PC on permutations and GPC on
vincular patterns, with brute-force, closed-form and Chen-identity evaluators.
"""
import itertools
import logging
import math
import os
import sys
from functools import lru_cache
from typing import Dict, List, Optional, Sequence

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.combinatorics import (Composition, Permutation, is_coarser_or_equal,
                                partition_of_composition_restriction, refinements, restricted_ranks,
                                standardize_series)
from core.config import check_size_guard
from core.errors import DimensionError
from core.freealg import LinComb, as_lincomb
from core.perm_hopf import delta_conc, order_compatible_permutations, pc_count
from core.vincular_hopf import EMPTY_PATTERN, VincularPattern, deconcgen

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Interval partitions
# ---------------------------------------------------------------------------

def ipc_count(L: Composition, s: Composition) -> int:
    """#{A inside [size(L)] : std(L(A)) >= s}, counted over |s|-subsets only"""
    return sum(1 for A in itertools.combinations(range(1, L.size + 1), s.size)
               if is_coarser_or_equal(partition_of_composition_restriction(L, A), s))


def ipc_single_block(N: int, s: Composition) -> int:
    """Closed form for a single host block of length N"""
    if N < s.size:
        return 0
    k = s.block_count
    return math.comb(N - s.size + k, k)


def ipc_chen_eval(L: Composition, s: Composition) -> int:
    """
    Split s across the blocks of L at every weakly increasing sequence of cut
    points and multiply the single-block counts of the pieces.
    """
    parts, k, m = s.parts, s.block_count, L.block_count

    @lru_cache(maxsize=None)
    def ways(block: int, start: int) -> int:
        if block == m:
            return 1 if start == k else 0
        total = 0
        for stop in range(start, k + 1):
            piece = Composition(parts[start:stop])
            single = ipc_single_block(L.parts[block], piece)
            if single:
                total += single * ways(block + 1, stop)
        return total

    return ways(0, 0)


def ipc_signature(L: Composition, depth: int) -> LinComb:
    """Every <IPC(L), s> with size(s) <= depth, in one pass over the subsets"""
    counts: Dict = {}
    for k in range(0, min(depth, L.size) + 1):
        for A in itertools.combinations(range(1, L.size + 1), k):
            for s in refinements(partition_of_composition_restriction(L, A)):
                counts[s] = counts.get(s, 0) + 1
    return LinComb(counts)


def ipc_pairing(L: Composition, x) -> int:
    """<IPC(L), x> extended linearly"""
    return sum(c * ipc_count(L, s) for s, c in as_lincomb(x).items())


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------

def pc_signature(host: Permutation, depth: int) -> LinComb:
    counts: Dict = {}
    for k in range(0, min(depth, host.size) + 1):
        for A in itertools.combinations(range(1, host.size + 1), k):
            key = Permutation(restricted_ranks(host.one_line, A))
            counts[key] = counts.get(key, 0) + 1
    return LinComb(counts)


def pc_pairing(host: Permutation, x) -> int:
    return sum(c * pc_count(host, sigma) for sigma, c in as_lincomb(x).items())


def pc_chen_eval(hosts: Sequence[Permutation], sigma: Permutation) -> int:
    """PC of the concatenated hosts, evaluated through repeated delta_conc"""
    if len(hosts) == 1:
        return pc_count(hosts[0], sigma)
    return sum(c * pc_count(hosts[0], t[0]) * pc_chen_eval(hosts[1:], t[1])
               for t, c in delta_conc(sigma).items())


# ---------------------------------------------------------------------------
# Vincular patterns
# ---------------------------------------------------------------------------

def _check_host(L: Composition, host: Permutation):
    if L.size != host.size:
        raise DimensionError(f"Partition {L} has size {L.size} but the host permutation has {host.size} entries")


def gpc_count(L: Composition, host: Permutation, pat: VincularPattern) -> int:
    """#{A inside [N] : std(L(A)) >= blocks(pat), st(host|A) = perm(pat)}"""
    _check_host(L, host)
    target = pat.perm.one_line
    count = 0
    for A in itertools.combinations(range(1, host.size + 1), pat.size):
        if restricted_ranks(host.one_line, A) != target:
            continue
        if is_coarser_or_equal(partition_of_composition_restriction(L, A), pat.blocks):
            count += 1
    return count


def gpc(host: VincularPattern, pat: VincularPattern) -> int:
    return gpc_count(host.blocks, host.perm, pat)


def gpc_pairing(host: VincularPattern, x) -> int:
    return sum(c * gpc(host, p) for p, c in as_lincomb(x).items())


def gpc_signature(L: Composition, host: Permutation, depth: int) -> LinComb:
    """
    Every <GPC((L, host)), (s, sigma)> with |sigma| <= depth. Each subset A is
    counted for st(host|A) and for every refinement of std(L(A)).
    """
    _check_host(L, host)
    counts: Dict = {}
    for k in range(0, min(depth, host.size) + 1):
        for A in itertools.combinations(range(1, host.size + 1), k):
            sigma = Permutation(restricted_ranks(host.one_line, A))
            for s in refinements(partition_of_composition_restriction(L, A)):
                key = VincularPattern(s, sigma)
                counts[key] = counts.get(key, 0) + 1
    return LinComb(counts)


def gpc_chen_eval(hosts: Sequence[VincularPattern], pat: VincularPattern) -> int:
    """GPC of the concatenated hosts, evaluated through repeated deconcgen"""
    if not hosts:
        return 1 if pat == EMPTY_PATTERN else 0
    if len(hosts) == 1:
        return gpc(hosts[0], pat)
    return sum(c * gpc(hosts[0], t[0]) * gpc_chen_eval(hosts[1:], t[1])
               for t, c in deconcgen(pat).items())


def gpc_block_contributions(hosts: Sequence[VincularPattern], pat: VincularPattern) -> dict:
    """Occurrences lying inside each host factor, and those spanning several"""
    blocks = [gpc(h, pat) for h in hosts]
    total = gpc_chen_eval(hosts, pat)
    return {"blocks": blocks, "cross": total - sum(blocks), "total": total}


# ---------------------------------------------------------------------------
# Delays
# ---------------------------------------------------------------------------

def fixed_delay_gaps(order: int, delay: int) -> tuple:
    if delay < 1:
        raise ValueError(f"Delay must be >= 1, got {delay}")
    return (delay - 1,) * max(order - 1, 0)


def _delay_offsets(sigma: Permutation, gaps: Sequence[int]) -> List[int]:
    if len(gaps) != max(sigma.size - 1, 0):
        raise DimensionError(f"Pattern {sigma} needs {max(sigma.size - 1, 0)} gaps, got {len(gaps)}")
    if any(g < 0 for g in gaps):
        raise ValueError(f"Gaps must be >= 0, got {tuple(gaps)}")
    offsets = [0]
    for g in gaps:
        offsets.append(offsets[-1] + g + 1)
    return offsets


def delay_pattern(sigma: Permutation, gaps: Sequence[int]) -> LinComb:
    """
    Single-block patterns whose chosen positions sit exactly `gaps` apart:
    the gap slots are filled with every value arrangement compatible with sigma.
    """
    if sigma.size == 0:
        return LinComb.basis(EMPTY_PATTERN)
    offsets = _delay_offsets(sigma, gaps)
    n = offsets[-1] + 1
    check_size_guard("delay", n)
    positions = tuple(o + 1 for o in offsets)
    block = Composition((n,))
    return LinComb((VincularPattern(block, Permutation(gamma)), 1)
                   for gamma in order_compatible_permutations(n, [(positions, sigma.one_line)]))


def gpc_delay_count(L: Composition, host: Permutation, sigma: Permutation, gaps: Sequence[int]) -> int:
    _check_host(L, host)
    return sum(c * gpc_count(L, host, p) for p, c in delay_pattern(sigma, gaps).items())


def delay_count_direct(L: Composition, host: Permutation, sigma: Permutation, gaps: Sequence[int]) -> int:
    """Scan every start position; the whole window must sit inside one block of L"""
    _check_host(L, host)
    if sigma.size == 0:
        return 1
    offsets = _delay_offsets(sigma, gaps)
    span = offsets[-1]
    block_of = [k for k, p in enumerate(L.parts) for _ in range(p)]
    count = 0
    for start in range(1, host.size - span + 1):
        if block_of[start - 1] != block_of[start + span - 1]:
            continue
        positions = [start + o for o in offsets]
        if restricted_ranks(host.one_line, positions) == sigma.one_line:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Numeric series
# ---------------------------------------------------------------------------

def pattern_count_in_series(series, pat: VincularPattern, partition: Optional[Composition] = None) -> int:
    """Standardize the series (ties left to right) and count pat in it"""
    host = standardize_series(series)
    if partition is None:
        partition = Composition((host.size,)) if host.size else Composition()
    elif partition.size != host.size:
        raise DimensionError(f"Partition {partition} sums to {partition.size} but the series has {host.size} values")
    count = gpc_count(partition, host, pat)
    logger.debug(f"[SERIES] {pat} occurs {count} times in a series of length {host.size}")
    return count
