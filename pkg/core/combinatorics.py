"""
Interval partitions, compositions, permutations and the set operations they rest on.

A standardized interval partition of [n] is stored as a Composition (its ordered
block sizes). Labeled interval partitions keep explicit blocks and are used where
the ground set matters: restriction, gluing and refinement.
"""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Interval:
    """The integer interval {start, ..., start+length-1}"""
    start: int
    length: int

    def __post_init__(self):
        if self.start < 1:
            raise ValueError(f"Interval start must be >= 1, got {self.start}")
        if self.length < 1:
            raise ValueError(f"Interval length must be >= 1, got {self.length}")

    @property
    def end(self) -> int:
        return self.start + self.length - 1

    def elements(self) -> range:
        return range(self.start, self.end + 1)

    def __str__(self):
        return "{" + ",".join(str(x) for x in self.elements()) + "}"


@dataclass(frozen=True)
class LabeledIntervalPartition:
    """Pairwise-disjoint intervals of positive integers, sorted by start"""
    blocks: Tuple[Interval, ...] = ()

    def __post_init__(self):
        blocks = tuple(sorted(self.blocks, key=lambda b: b.start))
        for left, right in zip(blocks, blocks[1:]):
            if right.start <= left.end:
                raise ValueError(f"Blocks {left} and {right} are not disjoint")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> "LabeledIntervalPartition":
        blocks = []
        for s in sets:
            elements = sorted(set(s))
            if not elements:
                continue
            if elements[-1] - elements[0] + 1 != len(elements):
                raise ValueError(f"Block {elements} is not an interval")
            blocks.append(Interval(elements[0], len(elements)))
        return cls(tuple(blocks))

    def ground_set(self) -> Tuple[int, ...]:
        return tuple(x for b in self.blocks for x in b.elements())

    def mask(self) -> int:
        m = 0
        for x in self.ground_set():
            m |= 1 << (x - 1)
        return m

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __str__(self):
        return "{" + ",".join(str(b) for b in self.blocks) + "}"


@dataclass(frozen=True)
class Composition:
    """Ordered positive block sizes; the empty composition is the unit"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"Composition parts must be >= 1, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def block_count(self) -> int:
        return len(self.parts)

    def cuts(self) -> frozenset:
        """Positions after which a block ends, excluding the last one"""
        return frozenset(itertools.accumulate(self.parts[:-1]))

    def canonical(self) -> LabeledIntervalPartition:
        blocks = []
        start = 1
        for p in self.parts:
            blocks.append(Interval(start, p))
            start += p
        return LabeledIntervalPartition(tuple(blocks))

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True)
class Permutation:
    """A bijection of [n] in one-line notation"""
    one_line: Tuple[int, ...] = ()

    def __post_init__(self):
        one_line = tuple(int(v) for v in self.one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ValueError(f"Not a permutation: {one_line}")
        object.__setattr__(self, "one_line", one_line)

    @property
    def size(self) -> int:
        return len(self.one_line)

    def __len__(self):
        return len(self.one_line)

    def __str__(self):
        if not self.one_line:
            return "()"
        if len(self.one_line) <= 9:
            return "".join(str(v) for v in self.one_line)
        return "(" + " ".join(str(v) for v in self.one_line) + ")"


class PartialOrderResult(Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by rank"""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        if self.parent[x] != x:
            self.parent[x] = self.find(self.parent[x])
        return self.parent[x]

    def union(self, x: int, y: int) -> None:
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return
        if self.rank[x_root] < self.rank[y_root]:
            self.parent[x_root] = y_root
        elif self.rank[x_root] > self.rank[y_root]:
            self.parent[y_root] = x_root
        else:
            self.parent[y_root] = x_root
            self.rank[x_root] += 1

    def is_same(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)


# ---------------------------------------------------------------------------
# Set operations on interval partitions
# ---------------------------------------------------------------------------

def cliques(A: Iterable[int]) -> LabeledIntervalPartition:
    """Maximal runs of consecutive integers in A (the coarsest interval partition of A)"""
    elements = sorted(set(A))
    if elements and elements[0] < 1:
        raise ValueError(f"Elements must be >= 1, got {elements[0]}")
    blocks = []
    for x in elements:
        if blocks and blocks[-1][1] == x - 1:
            blocks[-1][1] = x
        else:
            blocks.append([x, x])
    return LabeledIntervalPartition(tuple(Interval(a, b - a + 1) for a, b in blocks))


def restrict(I: LabeledIntervalPartition, A: Iterable[int]) -> LabeledIntervalPartition:
    """Blocks of I intersected with the cliques of A, empty pieces dropped"""
    A = set(A)
    pieces = []
    for block in I.blocks:
        inside = [x for x in block.elements() if x in A]
        pieces.extend(cliques(inside).blocks)
    return LabeledIntervalPartition(tuple(pieces))


def standardize_partition(I: LabeledIntervalPartition) -> Composition:
    return Composition(tuple(b.length for b in I.blocks))


def glue(I: LabeledIntervalPartition, J: LabeledIntervalPartition) -> LabeledIntervalPartition:
    """
    Merge the blocks of I and J into overlap-connected components.

    Blocks are swept by start; a block joins the current component when it
    starts at or before the furthest end seen so far. Adjacent blocks that
    do not share an element stay apart.
    """
    combined = sorted(I.blocks + J.blocks, key=lambda b: (b.start, b.end))
    if not combined:
        return LabeledIntervalPartition()

    uf = UnionFind(len(combined))
    holder = 0
    max_end = combined[0].end
    for idx in range(1, len(combined)):
        block = combined[idx]
        if block.start <= max_end:
            uf.union(idx, holder)
            if block.end > max_end:
                max_end = block.end
                holder = idx
        else:
            holder = idx
            max_end = block.end

    spans = {}
    for idx, block in enumerate(combined):
        root = uf.find(idx)
        lo, hi = spans.get(root, (block.start, block.end))
        spans[root] = (min(lo, block.start), max(hi, block.end))
    return LabeledIntervalPartition(tuple(Interval(lo, hi - lo + 1) for lo, hi in spans.values()))


def _refines(I: LabeledIntervalPartition, J: LabeledIntervalPartition) -> bool:
    # assumes equal ground sets
    j_blocks = J.blocks
    k = 0
    for block in I.blocks:
        while j_blocks[k].end < block.start:
            k += 1
        if block.end > j_blocks[k].end:
            return False
    return True


def compare(I: LabeledIntervalPartition, J: LabeledIntervalPartition) -> PartialOrderResult:
    """Refinement order on labeled interval partitions with the same ground set"""
    if I == J:
        return PartialOrderResult.EQUAL
    if I.ground_set() != J.ground_set():
        return PartialOrderResult.INCOMPARABLE
    if _refines(I, J):
        return PartialOrderResult.LESS
    if _refines(J, I):
        return PartialOrderResult.GREATER
    return PartialOrderResult.INCOMPARABLE


def compare_compositions(s: Composition, t: Composition) -> PartialOrderResult:
    """s < t when t's parts are sums of consecutive runs of s's parts"""
    if s == t:
        return PartialOrderResult.EQUAL
    if s.size != t.size:
        return PartialOrderResult.INCOMPARABLE
    s_cuts, t_cuts = s.cuts(), t.cuts()
    if t_cuts <= s_cuts:
        return PartialOrderResult.LESS
    if s_cuts <= t_cuts:
        return PartialOrderResult.GREATER
    return PartialOrderResult.INCOMPARABLE


def is_coarser_or_equal(t: Composition, s: Composition) -> bool:
    """t >= s in the refinement order"""
    return t.size == s.size and t.cuts() <= s.cuts()


def refine_to(I: LabeledIntervalPartition, s: Composition) -> Optional[LabeledIntervalPartition]:
    """The unique refinement of I standardizing to s, or None when std(I) is not >= s"""
    if not is_coarser_or_equal(standardize_partition(I), s):
        return None
    elements = I.ground_set()
    blocks = []
    offset = 0
    for p in s.parts:
        chunk = elements[offset:offset + p]
        blocks.append(Interval(chunk[0], p))
        offset += p
    return LabeledIntervalPartition(tuple(blocks))


def composition_concat(s: Composition, t: Composition) -> Composition:
    return Composition(s.parts + t.parts)


def partition_of_composition_restriction(s: Composition, A: Iterable[int]) -> Composition:
    """std(s(A)) computed on block sizes, without building the labeled partition"""
    elements = sorted(set(A))
    if not elements:
        return Composition()
    if elements[0] < 1 or elements[-1] > s.size:
        raise IndexError(f"Subset {elements} is not inside [{s.size}]")
    block_of = _block_index(s)
    parts = []
    prev = None
    for x in elements:
        if prev is not None and x == prev + 1 and block_of[x - 1] == block_of[prev - 1]:
            parts[-1] += 1
        else:
            parts.append(1)
        prev = x
    return Composition(tuple(parts))


@lru_cache(maxsize=1024)
def _block_index(s: Composition) -> Tuple[int, ...]:
    return tuple(k for k, p in enumerate(s.parts) for _ in range(p))


def fit_composition(A: Sequence[int], s: Composition) -> Optional[LabeledIntervalPartition]:
    """
    The interval partition I of the sorted set A with std(I) = s, if there is one.

    A must split, in increasing order, into consecutive-integer runs whose
    lengths are exactly the parts of s; the split is then unique.
    """
    if len(A) != s.size:
        return None
    blocks = []
    offset = 0
    for p in s.parts:
        first = A[offset]
        if A[offset + p - 1] - first != p - 1:
            return None
        blocks.append(Interval(first, p))
        offset += p
    return LabeledIntervalPartition(tuple(blocks))


def _block_subpartitions(start: int, end: int) -> List[Tuple[Interval, ...]]:
    out = []
    blocks = []

    def walk(pos):
        if pos > end:
            out.append(tuple(blocks))
            return
        walk(pos + 1)
        for stop in range(pos, end + 1):
            blocks.append(Interval(pos, stop - pos + 1))
            walk(stop + 1)
            blocks.pop()

    walk(start)
    return out


@lru_cache(maxsize=256)
def interval_subpartitions(s: Composition) -> Tuple[Tuple[LabeledIntervalPartition, int], ...]:
    """
    Every labeled interval partition whose blocks each sit inside one block of s,
    paired with the bitmask of its ground set. The empty partition is included.
    """
    per_block = [_block_subpartitions(b.start, b.end) for b in s.canonical().blocks]
    result = []
    for combo in itertools.product(*per_block):
        blocks = tuple(b for piece in combo for b in piece)
        mask = 0
        for b in blocks:
            mask |= ((1 << b.length) - 1) << (b.start - 1)
        result.append((LabeledIntervalPartition(blocks), mask))
    return tuple(result)


def mask_elements(mask: int) -> Tuple[int, ...]:
    out = []
    x = 1
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# Standardization of words and permutations
# ---------------------------------------------------------------------------

def standardize(word: Sequence) -> Permutation:
    """Relative order of the letters, ties broken left to right"""
    return Permutation(_ranks(word))


def _ranks(word: Sequence) -> Tuple[int, ...]:
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    ranks = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        ranks[i] = rank
    return tuple(ranks)


def subword_standardize(word: Sequence, A: Iterable[int]) -> Permutation:
    """st(w|_A) for 1-based positions A"""
    positions = sorted(set(A))
    for i in positions:
        if i < 1 or i > len(word):
            raise IndexError(f"Position {i} is outside a word of length {len(word)}")
    return Permutation(_ranks([word[i - 1] for i in positions]))


def restricted_ranks(one_line: Sequence[int], positions: Sequence[int]) -> Tuple[int, ...]:
    """Fast st(w|_A) on distinct values, returning the raw one-line tuple"""
    values = [one_line[i - 1] for i in positions]
    order = sorted(values)
    rank = {v: r for r, v in enumerate(order, start=1)}
    return tuple(rank[v] for v in values)


def standardize_series(values) -> Permutation:
    """Rank a numeric series into a permutation; equal values rank left to right"""
    arr = np.asarray(values, dtype=float).flatten()
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(len(arr), dtype=int)
    ranks[order] = np.arange(1, len(arr) + 1)
    return Permutation(tuple(int(r) for r in ranks))


# ---------------------------------------------------------------------------
# Enumeration helpers
# ---------------------------------------------------------------------------

def compositions(n: int) -> Iterator[Composition]:
    """All compositions of n, ordered by their cut sets"""
    if n == 0:
        yield Composition()
        return
    for cut_mask in range(1 << (n - 1)):
        parts = []
        run = 1
        for i in range(n - 1):
            if cut_mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield Composition(tuple(parts))


def compositions_up_to(max_size: int, min_size: int = 0) -> List[Composition]:
    return [c for n in range(min_size, max_size + 1) for c in compositions(n)]


def permutations_of(n: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def refinements(s: Composition) -> List[Composition]:
    """Every composition that is finer than or equal to s"""
    per_part = [list(compositions(p)) for p in s.parts]
    return [Composition(tuple(x for c in combo for x in c.parts))
            for combo in itertools.product(*per_part)]
