"""Exact counts |U_{2k+1}(patterns)| and the saved reference table."""

from __future__ import annotations

import csv
import os
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from typing import Iterable, NamedTuple, Optional, Sequence

from ..perm_core import Perm, ResourceLimitError, format_perm, normalize, parse_patterns
from ..stacksort import UNRESTRICTED_MAX_K, enumerate_uniquely_sorted, env_limit

RESTRICTED_MAX_K = 6

# Pattern pairs whose counts are conjectured to match OEIS entries, and the
# sequence whose first ten terms were published with the classification.
TABLE_CLASSES: tuple[tuple[str, str], ...] = (
    ("312;1432", "A001764"),
    ("312;2431", "A001764"),
    ("312;3421", "A001764"),
    ("132;3412", "A001764"),
    ("231;1423", "A001764"),
    ("312;1243", "A122368"),
    ("132;3421", "A001700"),
    ("132;4312", "A001700"),
    ("231;1243", "A001700"),
    ("132;2341", "A109081"),
    ("132;4123", "A109081"),
    ("312;2341", "A006605"),
    ("312;3241", "A279569"),
    ("312;4321", "A063020"),
    ("132;4231", "A071725"),
    ("231;1432", "A001003"),
    ("231;4312", "A127632"),
    ("231;4321", "A056010"),
)
A307346_CLASS = "231;4123"
A307346_PRINTED = (1, 1, 3, 10, 36, 138, 553, 2288, 9699, 41908)

REFERENCE_FILE = "reference.csv"


class SequenceRecord(NamedTuple):
    patterns: str
    k: int
    count: int


def class_name(pats: Iterable[Sequence[int]]) -> str:
    return ";".join(format_perm(p) for p in pats)


def default_guard(pats: Sequence[Sequence[int]]) -> int:
    """Largest k enumerated without an explicit override.

    A pattern of length at most 3 keeps the avoider class Catalan-sized,
    so those classes may go one step further than the rest."""
    if any(len(p) <= 3 for p in pats):
        return RESTRICTED_MAX_K
    return UNRESTRICTED_MAX_K


def _count(args: tuple[int, tuple[Perm, ...], Optional[int]]) -> int:
    k, pats, first = args
    return sum(1 for _ in enumerate_uniquely_sorted(k, pats, limit=k, first=first))


def count_unique(k: int, pats: Sequence[Sequence[int]], parallel: int = 1) -> int:
    pats = tuple(normalize(p) for p in pats)
    n = 2 * k + 1
    if parallel <= 1 or n < 5:
        return _count((k, pats, None))
    jobs = [(k, pats, first) for first in range(1, n + 1)]
    with ProcessPoolExecutor(max_workers=parallel) as pool:
        return sum(pool.map(_count, jobs))


def compute_sequence(
    pats: Sequence[Sequence[int]] | str,
    max_k: int,
    limit: Optional[int] = None,
    parallel: int = 1,
) -> list[SequenceRecord]:
    """Counts for k = 0..max_k; refuses k beyond the guard unless raised."""
    if isinstance(pats, str):
        pats = parse_patterns(pats)
    pats = [normalize(p) for p in pats]
    cap = limit if limit is not None else (env_limit() or default_guard(pats))
    if max_k > cap:
        raise ResourceLimitError(
            f"k={max_k} for class {{{class_name(pats)}}} exceeds guard k <= {cap}; raise it with --limit"
        )
    name = class_name(pats)
    return [SequenceRecord(name, k, count_unique(k, pats, parallel)) for k in range(max_k + 1)]


# ---------------------------------------------------------------------------
# reference file


class ReferenceRow(NamedTuple):
    patterns: str
    k: int
    count: int
    provenance: str


HEADER = (
    "# |U_(2k+1)(patterns)| reference values. provenance=derived: exhaustive "
    "enumeration by this package; provenance=printed: values published with "
    "the A307346 class. The OEIS ids are conjectural matches, not the source of the counts."
)


def reference_path() -> str:
    return str(resources.files("uniqsort") / "data" / REFERENCE_FILE)


def build_reference(max_k: int = 5, parallel: int = 1) -> list[ReferenceRow]:
    rows: list[ReferenceRow] = []
    for name, _ in TABLE_CLASSES:
        for rec in compute_sequence(name, max_k, parallel=parallel):
            rows.append(ReferenceRow(name, rec.k, rec.count, "derived"))
    for k, v in enumerate(A307346_PRINTED):
        rows.append(ReferenceRow(A307346_CLASS, k, v, "printed"))
    return rows


def write_reference(rows: Iterable[ReferenceRow], path: Optional[str] = None) -> str:
    path = path or reference_path()
    with open(path, "w", newline="") as fh:
        fh.write(HEADER + "\n")
        w = csv.writer(fh)
        w.writerow(["class", "k", "count", "provenance"])
        for r in rows:
            w.writerow([r.patterns, r.k, r.count, r.provenance])
    return path


def load_reference(path: Optional[str] = None) -> list[ReferenceRow]:
    path = path or reference_path()
    if not os.path.exists(path):
        return []
    with open(path, newline="") as fh:
        lines = [ln for ln in fh if not ln.startswith("#")]
    return [
        ReferenceRow(r["class"], int(r["k"]), int(r["count"]), r["provenance"])
        for r in csv.DictReader(lines)
    ]


def reference_drift(max_k: int = 5, path: Optional[str] = None, parallel: int = 1) -> list[str]:
    """Recompute every saved row with k <= max_k; report mismatches."""
    cache: dict[str, list[SequenceRecord]] = {}
    drift = []
    for row in load_reference(path):
        if row.k > max_k:
            continue
        if row.patterns not in cache:
            top = max(r.k for r in load_reference(path) if r.patterns == row.patterns)
            cache[row.patterns] = compute_sequence(row.patterns, min(max_k, top), parallel=parallel)
        got = cache[row.patterns][row.k].count
        if got != row.count:
            drift.append(f"{row.patterns} k={row.k}: saved {row.count}, computed {got}")
    return drift
