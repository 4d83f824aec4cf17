"""Sliding operators swu/swd/swl/swr and their composites.

``swu_i`` slides the points southwest of the point with height ``i`` up above
the points southeast of it; the other three operators are conjugates of it
by reversal and rotation.  Non-normalized input is normalized, processed and
mapped back onto the original entry set.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .perm_core import (
    Perm,
    PreconditionError,
    is_normalized,
    normalize,
    reverse,
    rot,
    rot_inverse,
    direct_sum,
    skew_sum,
    unnormalize,
)

OPS = ("swu", "swd", "swl", "swr")


def _swu_i(p: Perm, i: int) -> Perm:
    q = p.index(i)
    left = sorted((x for x in p[:q] if x < i), reverse=True)
    right = sorted(x for x in p[q + 1 :] if x < i)
    new = {x: i - m for m, x in enumerate(left, 1)}
    new.update({x: m for m, x in enumerate(right, 1)})
    return tuple(new.get(x, x) for x in p)


def _swd_i(p: Perm, i: int) -> Perm:
    return reverse(_swu_i(reverse(p), i))


def _swl_i(p: Perm, i: int) -> Perm:
    return rot_inverse(_swu_i(rot(p), i))


def _swr_i(p: Perm, i: int) -> Perm:
    return rot_inverse(_swd_i(rot(p), i))


_INDEXED: dict[str, Callable[[Perm, int], Perm]] = {
    "swu": _swu_i,
    "swd": _swd_i,
    "swl": _swl_i,
    "swr": _swr_i,
}


def _op(op: str) -> Callable[[Perm, int], Perm]:
    try:
        return _INDEXED[op]
    except KeyError:
        raise ValueError(f"unknown sliding operator {op!r}; expected one of {OPS}") from None


def slide_indexed(p: Sequence[int], op: str, i: int) -> Perm:
    f = _op(op)
    n = len(p)
    if not 1 <= i <= n:
        raise PreconditionError(f"index {i} out of range 1..{n}")
    if is_normalized(p):
        return f(tuple(p), i)
    return unnormalize(f(normalize(p), i), p)


def slide(p: Sequence[int], op: str) -> Perm:
    """Composite op_1 o op_2 o ... o op_n (index n applied first)."""
    f = _op(op)
    q = normalize(p)
    for i in range(len(q), 0, -1):
        q = f(q, i)
    return q if is_normalized(p) else unnormalize(q, p)


def swu(p: Sequence[int]) -> Perm:
    return slide(p, "swu")


def swd(p: Sequence[int]) -> Perm:
    return slide(p, "swd")


def swl(p: Sequence[int]) -> Perm:
    return slide(p, "swl")


def swr(p: Sequence[int]) -> Perm:
    return slide(p, "swr")


def swu_recursive(p: Sequence[int]) -> Perm:
    """swu(L n R) = (swu(L) (+) 1) (-) swu(R), on normalized pieces.

    Independent of the indexed definition; used to cross-check it.
    """
    q = normalize(p)
    if not q:
        return ()
    k = q.index(len(q))
    left = swu_recursive(normalize(q[:k]))
    right = swu_recursive(normalize(q[k + 1 :]))
    out = skew_sum(direct_sum(left, (1,)), right)
    return out if is_normalized(p) else unnormalize(out, p)
