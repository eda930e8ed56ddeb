"""
Permutation entropy of numeric series.

Consecutive mode counts the ordinal pattern of every window of `order` values
(spaced `delay` apart); vincular mode tabulates the counts of a user-given list
of vincular patterns. Frequencies stay exact fractions; only the entropy is a float.
"""
import logging
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence

import numpy as np

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.combinatorics import Composition, Permutation, standardize_series
from core.errors import DimensionError
from core.freealg import basis_key
from core.signatures import pattern_count_in_series
from core.vincular_hopf import VincularPattern

logger = logging.getLogger(__name__)


@dataclass
class EntropyReport:
    """Result of a permutation entropy computation."""
    mode: str                       # "consecutive" or "vincular"
    order: Optional[int]            # window length (consecutive mode)
    delay: int
    counts: Dict = field(default_factory=dict)        # pattern -> occurrences
    frequencies: Dict = field(default_factory=dict)   # pattern -> Fraction
    entropy: float = 0.0
    base: Optional[float] = None    # None means nats
    normalized_entropy: Optional[float] = None        # entropy / log(order!)

    @property
    def dominant_pattern(self):
        if not self.counts:
            return None
        return max(sorted(self.counts, key=basis_key), key=lambda p: self.counts[p])

    def to_dict(self) -> dict:
        ordered = sorted(self.counts, key=basis_key)
        return {
            "mode": self.mode,
            "order": self.order,
            "delay": self.delay,
            "base": "e" if self.base is None else self.base,
            "counts": {str(p): self.counts[p] for p in ordered},
            "frequencies": {str(p): str(self.frequencies[p]) for p in ordered if p in self.frequencies},
            "entropy": self.entropy,
            "normalized_entropy": self.normalized_entropy,
            "dominant_pattern": None if self.dominant_pattern is None else str(self.dominant_pattern),
        }


def ordinal_counts(series, order: int, delay: int = 1) -> Dict[Permutation, int]:
    """Ordinal pattern of each window x[i], x[i+delay], ..., x[i+(order-1)delay]"""
    if order < 1:
        raise ValueError(f"Order must be >= 1, got {order}")
    if delay < 1:
        raise ValueError(f"Delay must be >= 1, got {delay}")
    signal = np.asarray(series, dtype=float).flatten()
    n_windows = len(signal) - (order - 1) * delay
    if n_windows < 1:
        raise DimensionError(
            f"Series of length {len(signal)} is too short for order {order} with delay {delay}")

    counts: Dict[Permutation, int] = {}
    for i in range(n_windows):
        pattern = standardize_series(signal[i:i + (order - 1) * delay + 1:delay])
        counts[pattern] = counts.get(pattern, 0) + 1
    return counts


def _frequencies(counts: Dict) -> Dict:
    total = sum(counts.values())
    if total == 0:
        return {}
    return {p: Fraction(c, total) for p, c in counts.items() if c}


def ordinal_distribution(series, order: int, delay: int = 1) -> Dict[Permutation, Fraction]:
    return _frequencies(ordinal_counts(series, order, delay))


def shannon_entropy(frequencies: Dict, base: Optional[float] = None) -> float:
    """-sum p log p, in nats unless a base is given"""
    probs = np.array([float(p) for p in frequencies.values() if p > 0])
    if probs.size == 0:
        return 0.0
    h = float(-np.sum(probs * np.log(probs)))
    if base is not None:
        if base <= 0 or base == 1:
            raise ValueError(f"Logarithm base must be positive and not 1, got {base}")
        h /= float(np.log(base))
    return h + 0.0


def permutation_entropy(series, order: int, delay: int = 1, base: Optional[float] = None) -> EntropyReport:
    counts = ordinal_counts(series, order, delay)
    frequencies = _frequencies(counts)
    h = shannon_entropy(frequencies, base)
    max_h = math.log(math.factorial(order))
    if base is not None:
        max_h /= math.log(base)
    normalized = h / max_h if max_h > 0 else 0.0
    logger.info(f"[ENTROPY] order={order} delay={delay}: {len(counts)} patterns, H={h:.6f}")
    return EntropyReport(mode="consecutive", order=order, delay=delay, counts=counts,
                         frequencies=frequencies, entropy=h, base=base, normalized_entropy=normalized)


def vincular_counts(series, patterns: Sequence[VincularPattern], partition: Optional[Composition] = None) -> Dict:
    if not patterns:
        raise ValueError("Vincular mode needs at least one pattern")
    return {pat: pattern_count_in_series(series, pat, partition) for pat in dict.fromkeys(patterns)}


def vincular_distribution(series, patterns: Sequence[VincularPattern],
                          partition: Optional[Composition] = None) -> Dict[VincularPattern, Fraction]:
    """Each pattern's count over the total count of all given patterns"""
    return _frequencies(vincular_counts(series, patterns, partition))


def vincular_entropy(series, patterns: Sequence[VincularPattern], partition: Optional[Composition] = None,
                     base: Optional[float] = None) -> EntropyReport:
    """Entropy of the relative frequencies of the given patterns' counts"""
    counts = vincular_counts(series, patterns, partition)
    frequencies = _frequencies(counts)
    h = shannon_entropy(frequencies, base)
    logger.info(f"[ENTROPY] vincular over {len(patterns)} patterns, H={h:.6f}")
    return EntropyReport(mode="vincular", order=None, delay=1, counts=counts,
                         frequencies=frequencies, entropy=h, base=base)
