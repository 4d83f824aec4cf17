"""Dyck paths as ``U``/``D`` words, longevity sequences, and the Stanley,
Tamari, Pallo comb and antichain orders on paths of a fixed semilength."""

from __future__ import annotations

from typing import Iterator, NamedTuple, Sequence

from .perm_core import PreconditionError, ResourceLimitError

KINDS = ("stanley", "tamari", "pallo", "antichain")
PAIRWISE_MAX_K = 9


def is_dyck(word: str) -> bool:
    h = 0
    for c in word:
        if c == "U":
            h += 1
        elif c == "D":
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def dyck(word: str) -> str:
    """Validate and return a path word."""
    word = word.strip().upper()
    if not is_dyck(word):
        raise PreconditionError(f"{word!r} is not a Dyck path")
    return word


def semilength(word: str) -> int:
    return len(word) // 2


def gamma_decomposition(word: str) -> tuple[int, ...]:
    """(g_1, ..., g_k) with word = U D^g_1 U D^g_2 ... U D^g_k."""
    gammas: list[int] = []
    for c in word:
        if c == "U":
            gammas.append(0)
        else:
            gammas[-1] += 1
    return tuple(gammas)


def from_gammas(gammas: Sequence[int]) -> str:
    return "".join("U" + "D" * g for g in gammas)


def longevity(word: str) -> tuple[int, ...]:
    """lon_j = least t >= 0 with g_j + ... + g_{j+t} > t."""
    g = gamma_decomposition(word)
    k = len(g)
    out = []
    for j in range(k):
        total = 0
        for t in range(k - j):
            total += g[j + t]
            if total > t:
                out.append(t)
                break
        else:  # pragma: no cover - unreachable for valid paths
            raise PreconditionError(f"{word!r} is not a Dyck path")
    return tuple(out)


def _u_prefix_counts(word: str) -> list[int]:
    counts, u = [], 0
    for c in word:
        u += c == "U"
        counts.append(u)
    return counts


def stanley_leq(a: str, b: str) -> bool:
    return all(x <= y for x, y in zip(_u_prefix_counts(a), _u_prefix_counts(b)))


def _tamari_lon(la: Sequence[int], lb: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(la, lb))


def _pallo_lon(la: Sequence[int], lb: Sequence[int]) -> bool:
    if not _tamari_lon(la, lb):
        return False
    for j in range(1, len(la) + 1):
        if la[j - 1] < lb[j - 1]:
            for ell in range(1, j):
                if la[ell - 1] > j - ell - 1:
                    return False
    return True


def leq(a: str, b: str, kind: str) -> bool:
    if len(a) != len(b):
        raise PreconditionError(f"semilength mismatch: {a!r} vs {b!r}")
    if kind == "stanley":
        return stanley_leq(a, b)
    if kind == "tamari":
        return _tamari_lon(longevity(a), longevity(b))
    if kind == "pallo":
        return _pallo_lon(longevity(a), longevity(b))
    if kind == "antichain":
        return a == b
    raise ValueError(f"unknown poset kind {kind!r}; expected one of {KINDS}")


def enumerate_paths(k: int) -> Iterator[str]:
    """All Dyck paths of semilength k, lexicographically with U < D."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    buf: list[str] = []

    def rec(up: int, down: int) -> Iterator[str]:
        if down == k:
            yield "".join(buf)
            return
        if up < k:
            buf.append("U")
            yield from rec(up + 1, down)
            buf.pop()
        if down < up:
            buf.append("D")
            yield from rec(up, down + 1)
            buf.pop()

    yield from rec(0, 0)


class DyckInterval(NamedTuple):
    lower: str
    upper: str
    kind: str = "stanley"

    def __str__(self) -> str:
        return f"{self.lower};{self.upper}"


def parse_interval(text: str, kind: str = "stanley") -> DyckInterval:
    lo, hi = text.split(";")
    lo, hi = dyck(lo), dyck(hi)
    if not leq(lo, hi, kind):
        raise PreconditionError(f"({lo}, {hi}) is not an interval of the {kind} order")
    return DyckInterval(lo, hi, kind)


def intervals(k: int, kind: str, limit: int | None = None) -> Iterator[DyckInterval]:
    """Every ordered pair (a, b) with a <= b, by a full pairwise scan."""
    cap = PAIRWISE_MAX_K if limit is None else limit
    if k > cap:
        raise ResourceLimitError(f"pairwise interval scan at k={k} exceeds guard k <= {cap}")
    paths = list(enumerate_paths(k))
    if kind == "antichain":
        for a in paths:
            yield DyckInterval(a, a, kind)
        return
    if kind == "stanley":
        keys = [_u_prefix_counts(a) for a in paths]
        rel = lambda x, y: all(s <= t for s, t in zip(x, y))  # noqa: E731
    elif kind in ("tamari", "pallo"):
        keys = [longevity(a) for a in paths]
        rel = _tamari_lon if kind == "tamari" else _pallo_lon
    else:
        raise ValueError(f"unknown poset kind {kind!r}; expected one of {KINDS}")
    for a, ka in zip(paths, keys):
        for b, kb in zip(paths, keys):
            if rel(ka, kb):
                yield DyckInterval(a, b, kind)


def count_intervals(k: int, kind: str, limit: int | None = None) -> int:
    return sum(1 for _ in intervals(k, kind, limit))
