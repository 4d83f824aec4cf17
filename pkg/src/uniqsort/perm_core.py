"""Permutations in one-line notation and the operations shared by every
other module: normalization, plot symmetries, direct/skew sums, descents and
classical pattern containment.

A permutation is a plain ``tuple`` of distinct positive integers.  Values
and reported positions are 1-based like the usual one-line notation;
list indices inside the code are 0-based.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Optional, Sequence

Perm = tuple[int, ...]


class PreconditionError(ValueError):
    """An input is outside the domain an operation is defined on."""


class ResourceLimitError(RuntimeError):
    """An exhaustive computation was asked for beyond its size guard."""


def perm(entries: Iterable[int]) -> Perm:
    p = tuple(int(x) for x in entries)
    if len(set(p)) != len(p):
        raise PreconditionError(f"repeated entries in {p}")
    if any(x < 1 for x in p):
        raise PreconditionError(f"entries must be positive: {p}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse ``"3,5,2,4,1"`` or the bare digit word ``"35241"``."""
    text = text.strip()
    if not text:
        return ()
    if "," in text or " " in text:
        parts = [t for t in text.replace(" ", ",").split(",") if t]
        return perm(int(t) for t in parts)
    if not text.isdigit():
        raise PreconditionError(f"cannot parse permutation {text!r}")
    return perm(int(c) for c in text)


def parse_patterns(text: str) -> list[Perm]:
    """Parse a pattern set; patterns are separated by ``;`` (or ``,`` when
    every pattern is written as a bare digit word)."""
    text = text.strip()
    if not text:
        return []
    if ";" in text:
        chunks = [c for c in text.split(";") if c.strip()]
    else:
        chunks = [c for c in text.split(",") if c.strip()]
    pats = [parse_perm(c) for c in chunks]
    for pat in pats:
        if not pat or not is_normalized(pat):
            raise PreconditionError(f"pattern {pat} must be a nonempty normalized permutation")
    return pats


def format_perm(p: Sequence[int]) -> str:
    if all(x <= 9 for x in p):
        return "".join(str(x) for x in p)
    return ",".join(str(x) for x in p)


def is_normalized(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def normalize(p: Sequence[int]) -> Perm:
    """Replace the i-th smallest entry by i."""
    rank = {v: i + 1 for i, v in enumerate(sorted(p))}
    return tuple(rank[v] for v in p)


def unnormalize(q: Sequence[int], like: Sequence[int]) -> Perm:
    """Map a normalized ``q`` back onto the entry set of ``like``."""
    values = sorted(like)
    return tuple(values[v - 1] for v in q)


def _require_normalized(p: Sequence[int], what: str) -> None:
    if not is_normalized(p):
        raise PreconditionError(f"{what} requires a normalized permutation, got {tuple(p)}")


def descents(p: Sequence[int]) -> frozenset[int]:
    """1-based indices i with p_i > p_{i+1}."""
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def des(p: Sequence[int]) -> int:
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def reverse(p: Sequence[int]) -> Perm:
    return tuple(reversed(p))


def inverse(p: Sequence[int]) -> Perm:
    _require_normalized(p, "inverse")
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def rot(p: Sequence[int]) -> Perm:
    """Rotate the plot 90 degrees counterclockwise; equals reverse(inverse(p))."""
    return reverse(inverse(p))


def rot_inverse(p: Sequence[int]) -> Perm:
    """Rotate the plot 90 degrees clockwise."""
    return inverse(reverse(p))


SYMMETRIES: dict[str, Callable[[Sequence[int]], Perm]] = {
    "reverse": reverse,
    "inverse": inverse,
    "rot": rot,
    "rot_inverse": rot_inverse,
}


def symmetry(p: Sequence[int], which: str) -> Perm:
    try:
        f = SYMMETRIES[which]
    except KeyError:
        raise ValueError(f"unknown symmetry {which!r}") from None
    return f(p)


def direct_sum(mu: Sequence[int], lam: Sequence[int]) -> Perm:
    """mu (+) lam: the plot of lam above and to the right of mu."""
    m = len(mu)
    return tuple(mu) + tuple(x + m for x in lam)


def skew_sum(mu: Sequence[int], lam: Sequence[int]) -> Perm:
    """mu (-) lam: the plot of lam below and to the right of mu."""
    m = len(lam)
    return tuple(x + m for x in mu) + tuple(lam)


def compose_sum(mu: Sequence[int], lam: Sequence[int], kind: str) -> Perm:
    _require_normalized(mu, kind)
    _require_normalized(lam, kind)
    if kind == "direct_sum":
        return direct_sum(mu, lam)
    if kind == "skew_sum":
        return skew_sum(mu, lam)
    raise ValueError(f"unknown sum kind {kind!r}")


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Perm:
    return tuple(range(n, 0, -1))


# ---------------------------------------------------------------------------
# pattern containment


def find_occurrence(p: Sequence[int], pat: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Return 0-based indices of the leftmost-lexicographic occurrence of
    ``pat`` in ``p``, or None.

    Backtracking assigns pattern letters left to right; each new letter is
    checked against all letters already placed, so a dead prefix is dropped
    as soon as its relative order disagrees with the pattern.
    """
    m, n = len(pat), len(p)
    if m == 0:
        return ()
    if m > n:
        return None
    chosen: list[int] = []

    def extend(start: int) -> bool:
        t = len(chosen)
        if t == m:
            return True
        for i in range(start, n - (m - t) + 1):
            v = p[i]
            ok = True
            for s in range(t):
                if (p[chosen[s]] < v) != (pat[s] < pat[t]):
                    ok = False
                    break
            if ok:
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


def contains(p: Sequence[int], pat: Sequence[int]) -> bool:
    return find_occurrence(p, pat) is not None


def avoids(p: Sequence[int], pat: Sequence[int]) -> bool:
    return find_occurrence(p, pat) is None


def avoids_all(p: Sequence[int], pats: Iterable[Sequence[int]]) -> bool:
    return all(avoids(p, pat) for pat in pats)


PrefixFilter = Callable[[list[int], int], bool]


def _occurrences_ending_at(prefix: Sequence[int], head: Sequence[int]) -> Iterator[list[int]]:
    """All occurrences of ``head`` in ``prefix`` that use the last entry of
    ``prefix`` as their last letter (as lists of values)."""
    m = len(head)
    n = len(prefix)
    x = prefix[-1]
    if m == 1:
        yield [x]
        return
    last = head[-1]
    side = [head[s] < last for s in range(m - 1)]
    chosen: list[int] = []

    def extend(start: int) -> Iterator[list[int]]:
        t = len(chosen)
        if t == m - 1:
            yield [prefix[i] for i in chosen] + [x]
            return
        want_below = side[t]
        for i in range(start, n - 1 - (m - 1 - t) + 1):
            y = prefix[i]
            if (y < x) != want_below:
                continue
            if all((prefix[chosen[s]] < y) == (head[s] < head[t]) for s in range(t)):
                chosen.append(i)
                yield from extend(i + 1)
                chosen.pop()

    yield from extend(0)


def _gap_mask(values: list[int], rank: int, n: int) -> int:
    """Bitmask of the values strictly between the (rank-1)-th and rank-th
    smallest of ``values`` (bits 1..n)."""
    w = sorted(values)
    lo = w[rank - 2] if rank >= 2 else 0
    hi = w[rank - 1] if rank - 1 < len(w) else n + 1
    return _interval(lo, hi)


def _interval(lo: int, hi: int) -> int:
    if hi - lo <= 1:
        return 0
    return ((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1)


def _pair_gaps(prefix: Sequence[int], below: bool, rank: int, n: int) -> int:
    """Union of :func:`_gap_mask` over all two-letter occurrences ending at
    the last entry; the union collapses to one interval."""
    x = prefix[-1]
    if below:
        ys = [y for y in prefix[:-1] if y < x]
    else:
        ys = [y for y in prefix[:-1] if y > x]
    if not ys:
        return 0
    if rank == 2:
        return _interval(min(ys), x) if below else _interval(x, max(ys))
    if rank == 1:
        return _interval(0, max(ys)) if below else _interval(0, x)
    return _interval(x, n + 1) if below else _interval(min(ys), n + 1)


def enumerate_avoiders(
    n: int,
    pats: Iterable[Sequence[int]] = (),
    prefix_filter: Optional[PrefixFilter] = None,
    first: Optional[int] = None,
) -> Iterator[Perm]:
    """Yield Av_n(pats) in lexicographic order.

    Permutations are grown one entry at a time, values tried in increasing
    order.  Each search node carries the bitmask of values that would
    complete a pattern occurrence if appended next; it grows only by the
    occurrences of a pattern-minus-its-last-letter that end at the entry
    just placed, so no pattern is ever searched for from scratch.

    ``prefix_filter(prefix, n)`` may prune further; it is called after each
    extension and must only reject prefixes with no wanted completion.
    ``first`` restricts to permutations starting with that value, which is
    how counting work is split across processes.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    pats = [normalize(t) for t in pats]
    if any(len(t) == 0 for t in pats):
        return
    if n == 0:
        yield ()
        return
    if any(len(t) == 1 for t in pats):
        return
    heads = [(normalize(t[:-1]), t[-1]) for t in pats]
    full = ((1 << (n + 1)) - 1) ^ 1
    prefix: list[int] = []

    def rec(free: int, forbidden: int) -> Iterator[Perm]:
        if not free:
            yield tuple(prefix)
            return
        options = free & ~forbidden
        if not prefix and first is not None:
            options &= 1 << first
        v = 0
        while options:
            low = options & -options
            options ^= low
            v = low.bit_length() - 1
            prefix.append(v)
            if prefix_filter is None or prefix_filter(prefix, n):
                mask = forbidden
                for head, rank in heads:
                    if len(head) == 2:
                        mask |= _pair_gaps(prefix, head[0] < head[1], rank, n)
                    else:
                        for occ in _occurrences_ending_at(prefix, head):
                            mask |= _gap_mask(occ, rank, n)
                yield from rec(free ^ low, mask)
            prefix.pop()

    yield from rec(full, 0)
