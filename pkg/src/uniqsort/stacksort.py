"""West's stack-sorting map, fertility, and canonical hook configurations."""

from __future__ import annotations

import functools
import itertools
import os
from collections import Counter
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .perm_core import (
    Perm,
    PreconditionError,
    ResourceLimitError,
    direct_sum,
    enumerate_avoiders,
    find_occurrence,
    format_perm,
    identity,
    is_normalized,
)

FERTILITY_BRUTE_MAX_N = 11
UNRESTRICTED_MAX_K = 5


def env_limit() -> Optional[int]:
    """Guard override from ``UNIQSORT_LIMIT`` (mirrors the CLI ``--limit``)."""
    raw = os.environ.get("UNIQSORT_LIMIT")
    return int(raw) if raw else None


def stack_sort(p: Sequence[int]) -> Perm:
    """s(LnR) = s(L) s(R) n, computed with a single stack pass."""
    out: list[int] = []
    stack: list[int] = []
    for x in p:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def stack_sort_recursive(p: Sequence[int]) -> Perm:
    """Literal recursive definition; kept as an oracle for :func:`stack_sort`."""
    if not p:
        return ()
    i = max(range(len(p)), key=p.__getitem__)
    return stack_sort_recursive(p[:i]) + stack_sort_recursive(p[i + 1 :]) + (p[i],)


@functools.lru_cache(maxsize=2)
def fertility_census(n: int) -> Counter:
    """Multiplicity of every image of s over S_n."""
    return Counter(stack_sort(q) for q in itertools.permutations(range(1, n + 1)))


def fertility(p: Sequence[int], method: str = "census", limit: Optional[int] = None) -> int:
    """|s^{-1}(p)| by exhaustive search over S_n."""
    if not is_normalized(p):
        raise PreconditionError(f"fertility requires a normalized permutation, got {tuple(p)}")
    n = len(p)
    cap = limit if limit is not None else (env_limit() or FERTILITY_BRUTE_MAX_N)
    if n > cap:
        raise ResourceLimitError(f"fertility over S_{n} exceeds guard n <= {cap}")
    p = tuple(p)
    if method == "brute":
        return sum(1 for q in itertools.permutations(range(1, n + 1)) if stack_sort(q) == p)
    if method == "census":
        return fertility_census(n)[p]
    raise ValueError(f"unknown fertility method {method!r}")


class Hook(NamedTuple):
    """A hook between 0-based positions ``sw`` < ``ne``."""

    sw: int
    ne: int


def canonical_hooks(p: Sequence[int]) -> Optional[tuple[Hook, ...]]:
    """Canonical hook configuration of ``p``, one hook per descent in
    descent order, or None if some descent top finds no northeast endpoint.

    Northeast endpoints are chosen from the last descent backwards: each is
    the leftmost point above and to the right of its descent top that is not
    weakly below a hook already placed.
    """
    n = len(p)
    tops = [i for i in range(n - 1) if p[i] > p[i + 1]]
    placed: list[Hook] = []
    ne_of: dict[int, int] = {}
    for d in reversed(tops):
        h = p[d]
        found = -1
        for j in range(d + 1, n):
            if p[j] <= h:
                continue
            blocked = False
            for sw, ne in placed:
                if j == ne or (sw < j < ne and p[j] < p[ne]):
                    blocked = True
                    break
            if not blocked:
                found = j
                break
        if found < 0:
            return None
        placed.append(Hook(d, found))
        ne_of[d] = found
    return tuple(Hook(d, ne_of[d]) for d in tops)


def is_sorted(p: Sequence[int]) -> bool:
    """True iff p has a canonical hook configuration (positive fertility)."""
    return canonical_hooks(p) is not None


def is_uniquely_sorted(p: Sequence[int]) -> bool:
    n = len(p)
    if n % 2 == 0:
        return False
    d = sum(1 for i in range(n - 1) if p[i] > p[i + 1])
    if 2 * d != n - 1:
        return False
    return canonical_hooks(p) is not None


def deficiency(p: Sequence[int]) -> int:
    """Least l >= 0 such that p (+) 12...l is sorted."""
    ell = 0
    while not is_sorted(direct_sum(p, identity(ell))):
        ell += 1
    return ell


def _balanced_prefix(prefix: list[int], n: int) -> bool:
    # In a uniquely sorted permutation every non-descent-bottom position >= 2
    # is a northeast endpoint whose hook starts at an earlier descent top, so
    # ascents never outnumber descents in a prefix, and neither exceeds k.
    k = (n - 1) // 2
    L = len(prefix)
    d = 0
    for i in range(L - 1):
        if prefix[i] > prefix[i + 1]:
            d += 1
    a = L - 1 - d
    if d > k or a > d:
        return False
    if L == n:
        return prefix[-1] == n
    return True


def enumerate_uniquely_sorted(
    k: int,
    pats: Iterable[Sequence[int]] = (),
    limit: Optional[int] = None,
    prune: bool = True,
    first: Optional[int] = None,
) -> Iterator[Perm]:
    """Yield U_{2k+1}(pats) in lexicographic order.

    With ``prune`` the avoider search also cuts prefixes that cannot be
    uniquely sorted (descent/ascent balance); the output is the same as
    filtering the unpruned stream.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    pats = [tuple(t) for t in pats]
    if not pats:
        cap = limit if limit is not None else (env_limit() or UNRESTRICTED_MAX_K)
        if k > cap:
            raise ResourceLimitError(f"unrestricted U_(2k+1) enumeration at k={k} exceeds guard k <= {cap}")
    n = 2 * k + 1
    filt = _balanced_prefix if prune else None
    for p in enumerate_avoiders(n, pats, prefix_filter=filt, first=first):
        if is_uniquely_sorted(p):
            yield p


def require_uniquely_sorted(p: Sequence[int], pats: Iterable[Sequence[int]] = ()) -> Perm:
    """Return ``p`` as a tuple if it lies in U_n(pats); otherwise raise a
    PreconditionError naming what went wrong."""
    p = tuple(p)
    if not is_normalized(p):
        raise PreconditionError(f"{format_perm(p)} is not a normalized permutation")
    for pat in pats:
        occ = find_occurrence(p, pat)
        if occ is not None:
            vals = ",".join(str(p[i]) for i in occ)
            pos = ",".join(str(i + 1) for i in occ)
            raise PreconditionError(
                f"{format_perm(p)} contains {format_perm(pat)} at positions {pos} (entries {vals})"
            )
    if not is_uniquely_sorted(p):
        n = len(p)
        d = sum(1 for i in range(n - 1) if p[i] > p[i + 1])
        if n % 2 == 0 or 2 * d != n - 1:
            why = f"has {d} descents but length {n}"
        else:
            why = "has no canonical hook configuration"
        raise PreconditionError(f"{format_perm(p)} is not uniquely sorted: it {why}")
    return p
