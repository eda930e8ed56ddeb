# Text and JSON renderings of command results. Both are byte-deterministic.

import json
import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import config as app_config


def to_json(result):
    return json.dumps(result, sort_keys=True, indent=2)


def format_count(result):
    return str(result["count"])


def _decimal(value):
    return f"{value:.{app_config.ENTROPY_DECIMALS}f}"


def format_entropy(result):
    lines = []
    if result["mode"] == "consecutive":
        lines.append(f"order {result['order']}, delay {result['delay']}, {result['series_length']} values")
    else:
        lines.append(f"vincular patterns, {result['series_length']} values")
    width = max((len(p) for p in result["counts"]), default=0)
    for pattern, count in result["counts"].items():
        freq = result["frequencies"].get(pattern, "0")
        lines.append(f"  {pattern.ljust(width)}  {count}  {freq}")
    unit = "nats" if result["base"] == "e" else f"base {result['base']}"
    lines.append(f"entropy: {_decimal(result['entropy'])} ({unit})")
    if result.get("normalized_entropy") is not None:
        lines.append(f"normalized: {_decimal(result['normalized_entropy'])}")
    return "\n".join(lines)


def format_eval(result):
    return result["result"]


def format_verify(result):
    status = "PASS" if not result["failures"] else "FAIL"
    lines = [f"[{status}] {result['law']} (bound {result['bound']}): "
             f"{result['checked']} inputs checked, {len(result['failures'])} failures"]
    for failure in result["failures"]:
        lines.append(f"  inputs: {', '.join(failure['inputs'])}")
        lines.append(f"    lhs: {failure['lhs']}")
        lines.append(f"    rhs: {failure['rhs']}")
    if "statistics" in result:
        stats = ", ".join(f"{k}={v}" for k, v in sorted(result["statistics"].items()))
        lines.append(f"  statistics: {stats}")
    return "\n".join(lines)


def format_laws(laws):
    width = max(len(law["name"]) for law in laws)
    return "\n".join(f"{law['name'].ljust(width)}  {law['description']}" for law in laws)
