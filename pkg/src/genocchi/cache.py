"""Disk cache for Bernoulli tables.

The format is a single JSON object: format_version (currently 1),
max_index, and one entry per index with numerator and denominator as
decimal strings, so arbitrarily large values survive any JSON parser.
Loading validates the shape and re-derives five randomly chosen entries
from the ones below them; a file that fails any of this raises
CacheCorruptionError naming the file and the offending entry instead of
returning bad numbers.
"""

from __future__ import annotations

import json
import os
import random
from fractions import Fraction
from math import comb, gcd
from pathlib import Path

from .special import BernoulliTable, bernoulli_table

CACHE_FORMAT_VERSION = 1
SPOT_CHECK_COUNT = 5


class CacheCorruptionError(Exception):
    """A cache file failed validation; the message names the file and, where
    it applies, the entry index."""


def save_bernoulli_cache(path, table: BernoulliTable) -> None:
    """Write the table to path atomically (temp file, then replace)."""
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "format_version": CACHE_FORMAT_VERSION,
        "max_index": table.max_index,
        "entries": [
            {"index": i, "num": str(v.numerator), "den": str(v.denominator)}
            for i, v in enumerate(table.values)
        ],
    }
    tmp = p.with_suffix(p.suffix + ".tmp")
    tmp.write_text(json.dumps(payload, indent=1), encoding="ascii")
    os.replace(tmp, p)


def _entry_value(path: Path, entry, expect_index: int) -> Fraction:
    try:
        index = entry["index"]
        numerator = int(entry["num"])
        denominator = int(entry["den"])
    except (TypeError, KeyError, ValueError) as exc:
        raise CacheCorruptionError(
            f"cache file {path}: malformed entry {expect_index}: {exc}"
        ) from exc
    if index != expect_index:
        raise CacheCorruptionError(
            f"cache file {path}: entry {expect_index} carries index {index}"
        )
    if denominator <= 0:
        raise CacheCorruptionError(
            f"cache file {path}: entry {expect_index} has denominator {denominator}"
        )
    if gcd(numerator, denominator) != 1:
        raise CacheCorruptionError(
            f"cache file {path}: entry {expect_index} is not in lowest terms"
        )
    return Fraction(numerator, denominator)


def _rederive(values: list[Fraction], i: int) -> Fraction:
    # B_i from the entries below it, via sum_{k<=n} C(n+1,k) B_k = 0
    if i == 0:
        return Fraction(1)
    acc = Fraction(0)
    for k in range(i):
        acc += comb(i + 1, k) * values[k]
    return -acc / (i + 1)


def load_bernoulli_cache(path) -> BernoulliTable:
    """Read and validate a cache file. Spot-checks five random entries by
    re-deriving them from the entries below."""
    p = Path(path)
    try:
        raw = json.loads(p.read_text(encoding="ascii"))
    except (OSError, ValueError) as exc:
        raise CacheCorruptionError(f"cache file {p}: unreadable: {exc}") from exc
    if not isinstance(raw, dict) or raw.get("format_version") != CACHE_FORMAT_VERSION:
        raise CacheCorruptionError(
            f"cache file {p}: format_version {raw.get('format_version')!r} "
            f"is not {CACHE_FORMAT_VERSION}"
        )
    max_index = raw.get("max_index")
    entries = raw.get("entries")
    if not isinstance(max_index, int) or not isinstance(entries, list):
        raise CacheCorruptionError(f"cache file {p}: missing max_index or entries")
    if len(entries) != max_index + 1:
        raise CacheCorruptionError(
            f"cache file {p}: {len(entries)} entries for max_index {max_index}"
        )
    values = [_entry_value(p, entry, i) for i, entry in enumerate(entries)]
    for i in random.sample(range(len(values)), min(SPOT_CHECK_COUNT, len(values))):
        if _rederive(values, i) != values[i]:
            raise CacheCorruptionError(
                f"cache file {p}: entry {i} fails re-derivation"
            )
    try:
        return BernoulliTable(tuple(values))
    except ValueError as exc:
        raise CacheCorruptionError(f"cache file {p}: {exc}") from exc


def get_or_build(path, max_index: int) -> BernoulliTable:
    """Table from cache when it already covers max_index; otherwise build at
    max_index and persist. A corrupt file raises rather than being rebuilt
    silently."""
    p = Path(path)
    if p.exists():
        table = load_bernoulli_cache(p)
        if table.max_index >= max_index:
            return table
    table = bernoulli_table(max_index)
    save_bernoulli_cache(p, table)
    return table
