# Command handlers shared by the CLI and the local agent. Each returns a JSON-ready dict.

import logging
import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import config as app_config
from core.combinatorics import Composition
from core.entropy import permutation_entropy, vincular_entropy
from core.errors import DimensionError, EvaluationError
from core.freealg import LinComb
from core.laws import LAWS, verify_law
from core.parser import evaluate_expression, parse_composition, parse_pattern, render_value
from core.signatures import pattern_count_in_series

logger = logging.getLogger(__name__)


def parse_partition(text, series_length):
    """`[1,2,2]` or `1,2,2`; must sum to the series length"""
    if text is None:
        return None
    text = text.strip()
    partition = parse_composition(text if text.startswith("[") else f"[{text}]")
    if partition.size != series_length:
        raise DimensionError(
            f"Partition {partition} sums to {partition.size} but the series has {series_length} values")
    return partition


def cmd_count(series, pattern_text, partition_text=None):
    pattern = parse_pattern(pattern_text)
    partition = parse_partition(partition_text, len(series))
    count = pattern_count_in_series(series, pattern, partition)
    if partition is None:
        partition = Composition((len(series),)) if len(series) else Composition()
    return {
        "pattern": str(pattern),
        "partition": str(partition),
        "series_length": len(series),
        "count": count,
    }


def cmd_entropy(series, order=None, delay=1, base=None, mode="consecutive", patterns=None, partition_text=None):
    if delay is None or delay < 1:
        raise EvaluationError(f"Delay must be >= 1, got {delay}")
    if base is not None and (base <= 0 or base == 1):
        raise EvaluationError(f"Logarithm base must be positive and not 1, got {base}")
    if mode == "consecutive":
        if order is None or order < 1:
            raise EvaluationError(f"Consecutive mode needs an order >= 1, got {order}")
        report = permutation_entropy(series, order, delay, base)
    elif mode == "vincular":
        if not patterns:
            raise EvaluationError("Vincular mode needs at least one --pattern")
        parsed = [parse_pattern(p) for p in patterns]
        report = vincular_entropy(series, parsed, parse_partition(partition_text, len(series)), base)
    else:
        raise EvaluationError(f"Unknown entropy mode: {mode}")

    result = report.to_dict()
    result["entropy"] = round(result["entropy"], app_config.ENTROPY_DECIMALS)
    if result["normalized_entropy"] is not None:
        result["normalized_entropy"] = round(result["normalized_entropy"], app_config.ENTROPY_DECIMALS)
    result["series_length"] = len(series)
    return result


def cmd_eval(expression):
    value = evaluate_expression(expression)
    return {
        "expression": expression,
        "kind": "element" if isinstance(value, LinComb) else "scalar",
        "result": render_value(value),
    }


def cmd_verify(law, max_size, seed=None, spot_checks=None):
    if law not in LAWS:
        raise EvaluationError(f"Unknown law: {law} (known: {', '.join(sorted(LAWS))})")
    if max_size < 0:
        raise EvaluationError(f"Size bound must be >= 0, got {max_size}")
    report = verify_law(law, max_size, seed=seed, spot_checks=spot_checks)
    report["passed"] = not report["failures"]
    return report


def list_laws():
    return [{"name": name, "description": LAWS[name].description, "exhaustive_cap": LAWS[name].exhaustive_cap}
            for name in sorted(LAWS)]
