"""Bijections between pattern classes of uniquely sorted permutations and
intervals of Catalan posets.

Matrices are tuples of row tuples; ``m[i-1][j-1]`` holds the entry m_ij.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from . import gentree, noncross
from .dyck import DyckInterval, dyck, gamma_decomposition, leq
from .perm_core import (
    Perm,
    PreconditionError,
    descents,
    direct_sum,
    normalize,
    rot,
)
from .sliding import swd, swl, swr
from .stacksort import canonical_hooks, is_uniquely_sorted, require_uniquely_sorted

Matrix = tuple[tuple[int, ...], ...]

P312: Perm = (3, 1, 2)
P132: Perm = (1, 3, 2)
P231: Perm = (2, 3, 1)
P321: Perm = (3, 2, 1)
P4132: Perm = (4, 1, 3, 2)


# ---------------------------------------------------------------------------
# DL_k and the cell matrix


def dl_forward(p: Sequence[int]) -> DyckInterval:
    """(Lambda, Lambda') read off the descents of p and of rot(p)."""
    p = require_uniquely_sorted(p, (P312,))
    return _dl(p)


def _dl(p: Perm) -> DyckInterval:
    n = len(p)
    des, rdes = descents(p), descents(rot(p))
    lower = "".join("D" if n - i in des else "U" for i in range(1, n))
    upper = "".join("U" if i in rdes else "D" for i in range(1, n))
    return DyckInterval(lower, upper, "stanley")


def _ltr_maxima(p: Perm) -> list[int]:
    """0-based positions of the left-to-right maxima, right to left."""
    out, best = [], 0
    for i, x in enumerate(p):
        if x > best:
            out.append(i)
            best = x
    return out[::-1]


def cell_matrix(p: Sequence[int]) -> Matrix:
    p = require_uniquely_sorted(p, (P312,))
    k = (len(p) - 1) // 2
    R = _ltr_maxima(p)  # R[0] is the last point, R[k] the first
    heights = [p[r] for r in R] + [0]
    m = [[0] * k for _ in range(k)]
    is_max = set(R)
    for pos, h in enumerate(p):
        if pos in is_max:
            continue
        # column j lies between R_{k-j} and R_{k-j+1}
        j = next(j for j in range(1, k + 1) if R[k - j + 1] < pos < R[k - j])
        i = next(i for i in range(1, k + 1) if heights[i + 1] < h < heights[i])
        m[i - 1][j - 1] += 1
    return tuple(tuple(r) for r in m)


def lemma3_violations(m: Matrix, a: Sequence[int], b: Sequence[int]) -> list[str]:
    """Which of the four matrix conditions fail (empty when all hold)."""
    k = len(m)
    bad = []
    if any(m[i - 1][j - 1] for i in range(1, k + 1) for j in range(1, k - i + 1)):
        bad.append("(i) nonzero entry with j <= k - i")
    if any(sum(m[i][j - 1] for i in range(k)) != b[j - 1] for j in range(1, k + 1)):
        bad.append("(ii) column sums differ from b")
    if any(sum(m[i - 1]) != a[k - i] for i in range(1, k + 1)):
        bad.append("(iii) row sums differ from reversed a")
    if _find_move(m) is not None:
        bad.append("(iv) a lower 2x2 submatrix has both off-diagonal corners positive")
    return bad


def _find_move(m: Sequence[Sequence[int]]) -> Optional[tuple[int, int, int, int]]:
    """Smallest (r', c, r, c') (1-based) whose lower 2x2 submatrix breaks (iv)."""
    k = len(m)
    for r2 in range(1, k + 1):
        for c in range(1, k + 1):
            if not m[r2 - 1][c - 1]:
                continue
            for r in range(max(1, k + 1 - c), r2):
                for c2 in range(c + 1, k + 1):
                    if m[r - 1][c2 - 1]:
                        return r2, c, r, c2
    return None


def energy(m: Sequence[Sequence[int]]) -> float:
    """e(N) = sum of 2^(i-j) n_ij."""
    k = len(m)
    return sum(2.0 ** (i - j) * m[i - 1][j - 1] for i in range(1, k + 1) for j in range(1, k + 1))


def _check_lemma3_hypotheses(a: Sequence[int], b: Sequence[int]) -> None:
    k = len(a)
    if len(b) != k:
        raise PreconditionError(f"a and b have different lengths {k} and {len(b)}")
    if any(x < 0 for x in list(a) + list(b)):
        raise PreconditionError("a and b must be nonnegative")
    if sum(a) != sum(b):
        raise PreconditionError(f"sum(a) = {sum(a)} differs from sum(b) = {sum(b)}")
    for i in range(1, k + 1):
        sa, sb = sum(a[k - i :]), sum(b[k - i :])
        if sa > sb:
            raise PreconditionError(
                f"suffix inequality fails at i={i}: a_{k - i + 1}+...+a_{k} = {sa} > "
                f"b_{k - i + 1}+...+b_{k} = {sb}"
            )


def _build(a: list[int], b: list[int]) -> list[list[int]]:
    """Constructive induction for conditions (i)-(iii)."""
    k = len(a)
    if k == 0:
        return []
    if k == 1:
        return [[a[0]]]
    if sum(a) == 0:
        return [[0] * k for _ in range(k)]
    if b[-1] == 0:
        sub = _build(a[:-1], b[:-1])
        return [[0] * k] + [row + [0] for row in sub]
    ell = next(l for l in range(1, k + 1) if a[k - l] >= 1)
    a2, b2 = list(a), list(b)
    a2[k - ell] -= 1
    b2[-1] -= 1
    m = _build(a2, b2)
    m[ell - 1][k - 1] += 1  # row ell has sum a_{k-ell+1}
    return m


class Lemma3Result(NamedTuple):
    matrix: Matrix
    moves: int
    energies: tuple[float, ...]


def lemma3_trace(a: Sequence[int], b: Sequence[int]) -> Lemma3Result:
    """Solve and keep the energy after each normalizing move."""
    _check_lemma3_hypotheses(a, b)
    m = _build(list(a), list(b))
    energies = [energy(m)]
    while (mv := _find_move(m)) is not None:
        r2, c, r, c2 = mv
        m[r - 1][c - 1] += 1
        m[r - 1][c2 - 1] -= 1
        m[r2 - 1][c - 1] -= 1
        m[r2 - 1][c2 - 1] += 1
        energies.append(energy(m))
    return Lemma3Result(tuple(tuple(r) for r in m), len(energies) - 1, tuple(energies))


def lemma3_solve(a: Sequence[int], b: Sequence[int]) -> Matrix:
    """The unique matrix with conditions (i)-(iv) for row data a, column data b."""
    return lemma3_trace(a, b).matrix


def perm_from_matrix(m: Matrix) -> Perm:
    """Rebuild the plot: cells hold decreasing runs, and within each row
    and each column the points decrease from left to right."""
    k = len(m)
    n = 2 * k + 1
    cells = {(i, j, t) for i in range(1, k + 1) for j in range(1, k + 1) for t in range(m[i - 1][j - 1])}
    col_size = [sum(m[i][j] for i in range(k)) for j in range(k)]
    if sum(col_size) != k:
        raise PreconditionError(f"matrix has {sum(col_size)} points, expected {k}")

    pos: dict = {}
    p_ltr = {}
    cur = 1
    p_ltr[k] = cur
    for j in range(1, k + 1):
        for i in range(1, k + 1):
            for t in range(m[i - 1][j - 1]):
                cur += 1
                pos[(i, j, t)] = cur
        cur += 1
        p_ltr[k - j] = cur  # R_{k-j} closes column j

    height: dict = {}
    h_ltr = {}
    cur = 0
    for i in range(k, 0, -1):
        run = [(i, j, t) for j in range(1, k + 1) for t in range(m[i - 1][j - 1])]
        for cell in reversed(run):
            cur += 1
            height[cell] = cur
        cur += 1
        h_ltr[i] = cur
    h_ltr[0] = cur + 1
    assert set(pos) == cells == set(height)

    out = [0] * n
    for r in range(k + 1):
        out[p_ltr[r] - 1] = h_ltr[r]
    for cell in cells:
        out[pos[cell] - 1] = height[cell]
    return tuple(out)


def dl_inverse(iv: DyckInterval | tuple[str, str]) -> Perm:
    lower, upper = dyck(iv[0]), dyck(iv[1])
    if not leq(lower, upper, "stanley"):
        raise PreconditionError(f"({lower}, {upper}) is not a Stanley interval")
    g, g2 = gamma_decomposition(lower), gamma_decomposition(upper)
    k = len(g)
    if k == 0:
        return (1,)
    a = [g2[k - i] for i in range(1, k + 1)]
    b = [g[k - i] for i in range(1, k + 1)]
    return perm_from_matrix(lemma3_solve(a, b))


# ---------------------------------------------------------------------------
# Tamari


def tamari_forward(p: Sequence[int]) -> DyckInterval:
    p = require_uniquely_sorted(p, (P132,))
    lo, hi, _ = _dl(swl(p))
    return DyckInterval(lo, hi, "tamari")


def tamari_inverse(iv: DyckInterval | tuple[str, str]) -> Perm:
    lower, upper = dyck(iv[0]), dyck(iv[1])
    if not leq(lower, upper, "tamari"):
        raise PreconditionError(f"({lower}, {upper}) is not a Tamari interval")
    return swr(dl_inverse((lower, upper)))


# ---------------------------------------------------------------------------
# Noncrossing partition intervals


def upsilon_direct(p: Sequence[int]) -> noncross.NCInterval:
    """Blocks from adjacency of partner points and northeast endpoints."""
    p = gentree.require_class(p)
    hooks = sorted(canonical_hooks(p) or (), key=lambda h: p[h.ne])
    k = len(hooks)
    W = [h.ne for h in hooks]
    V = [h.sw + 1 for h in hooks]

    def adjacent(x: int, y: int) -> bool:
        # point x immediately above and immediately left of point y
        return x == y - 1 and p[x] == p[y] + 1

    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def blocks() -> noncross.Partition:
        groups: dict[int, list[int]] = {}
        for x in range(k):
            groups.setdefault(find(x), []).append(x + 1)
        return noncross.canonical(groups.values())

    for l in range(k):
        for m in range(k):
            if adjacent(V[l], V[m]):
                parent[find(l)] = find(m)
    rho = blocks()
    for l in range(k):
        for m in range(k):
            if adjacent(W[l], V[m]):
                parent[find(l)] = find(m)
    return noncross.NCInterval(rho, blocks())


def upsilon_tree(p: Sequence[int]) -> noncross.NCInterval:
    """Replay the generation path of p on the interval side."""
    p = gentree.require_class(p)
    if len(p) == 1:
        return noncross.NCInterval((), ())
    return noncross.follow_path(gentree.generation_path(p))


def upsilon_tree_inverse(iv: noncross.NCInterval) -> Perm:
    if not noncross.nc_leq(iv.rho, iv.kappa):
        raise PreconditionError(f"{iv} is not an interval")
    if not iv.kappa:
        return (1,)
    return gentree.follow_path(noncross.generation_path(iv))


# ---------------------------------------------------------------------------
# Pallo comb intervals: the decomposition behind the series identity


class PalloParts(NamedTuple):
    nice: bool
    first: Perm  # pi'' when nice, sigma'' otherwise
    second: Perm  # tau when nice, sigma' otherwise


def _last_hook_sw(p: Perm) -> int:
    return next(h.sw for h in canonical_hooks(p) if h.ne == len(p) - 1)


def pallo_decompose(p: Sequence[int]) -> PalloParts:
    p = require_uniquely_sorted(p, (P231, P4132))
    if len(p) < 3:
        raise PreconditionError("the decomposition needs length at least 3")
    i = _last_hook_sw(p)
    if i > 0:
        return PalloParts(False, normalize(p[: i + 1]), normalize(p[i:]))
    lam = p[1 : p[0]]  # the entries below p_1 follow it directly
    m = max(
        mm
        for mm in range(len(lam) // 2 + 1)
        if 2 * mm + 1 <= len(lam) and is_uniquely_sorted(tuple(x for x in lam if x <= 2 * mm + 1))
    )
    size = 2 * m + 1
    tau = tuple(x for x in lam if x <= size)
    rest = tuple(x for x in p[:-1] if x > size)
    return PalloParts(True, normalize(rest), tau)


def pallo_recompose(parts: PalloParts) -> Perm:
    if not parts.nice:
        sigma = parts.first[:-1]
        return direct_sum(sigma, parts.second)
    tau, size = parts.second, len(parts.second)
    shifted = [x + size for x in parts.first]
    at = shifted.index(min(shifted)) + 1
    body = shifted[:at] + list(tau) + shifted[at:]
    return tuple(body) + (len(body) + 1,)


# ---------------------------------------------------------------------------
# Antichain intervals


def parking_bijection(p: Sequence[int]) -> tuple[int, ...]:
    """a_i = p_{2i} - i + 1 on U_{2k+1}(321)."""
    p = require_uniquely_sorted(p, (P321,))
    k = (len(p) - 1) // 2
    return tuple(p[2 * i - 1] - i + 1 for i in range(1, k + 1))


def is_parking_nondecreasing(a: Sequence[int]) -> bool:
    return all(1 <= x <= i for i, x in enumerate(a, 1)) and all(
        x <= y for x, y in zip(a, a[1:])
    )


def parking_inverse(a: Sequence[int]) -> Perm:
    if not is_parking_nondecreasing(a):
        raise PreconditionError(f"{tuple(a)} is not a nondecreasing parking function")
    k = len(a)
    even = [a[i - 1] + i - 1 for i in range(1, k + 1)]
    odd = sorted(set(range(1, 2 * k + 2)) - set(even))
    out = []
    for i in range(k):
        out += [odd[i], even[i]]
    out.append(odd[k])
    p = tuple(out)
    if not is_uniquely_sorted(p):
        raise PreconditionError(f"{tuple(a)} does not give a uniquely sorted permutation")
    return p


ANTICHAIN_MAPS = {
    "layered_312_231": ((P231, P312), lambda p: p),
    "swl_132_231": ((P132, P231), swl),
    "swd_132_312": ((P132, P312), swd),
}


def antichain_map(p: Sequence[int], which: str) -> DyckInterval:
    try:
        pats, pre = ANTICHAIN_MAPS[which]
    except KeyError:
        raise ValueError(f"unknown antichain map {which!r}; expected one of {sorted(ANTICHAIN_MAPS)}") from None
    p = require_uniquely_sorted(p, pats)
    lo, hi, _ = _dl(pre(p))
    return DyckInterval(lo, hi, "antichain")


def is_layered(p: Sequence[int]) -> bool:
    """p is a direct sum of decreasing permutations."""
    top = 0
    i = 0
    n = len(p)
    while i < n:
        j = i
        while j + 1 < n and p[j + 1] == p[j] - 1:
            j += 1
        if p[j] != top + 1 or p[i] != top + (j - i + 1):
            return False
        top = p[i]
        i = j + 1
    return True


def lemma9_word(p: Sequence[int]) -> str:
    """For p = L 1 R (L decreasing, R increasing): letter l is U iff
    2k+2-l lies in R."""
    p = tuple(p)
    one = p.index(1)
    left, right = p[:one], p[one + 1 :]
    if any(x < y for x, y in zip(left, left[1:])) or any(x > y for x, y in zip(right, right[1:])):
        raise PreconditionError(f"{p} is not decreasing-then-increasing")
    n = len(p)
    rset = set(right)
    return "".join("U" if n + 1 - l in rset else "D" for l in range(1, n))

