"""Generating tree of U(312, 1342): skylines, conjoined points, labels and
the child operations u', v'_i, w'_{i,j} with their inverse (the parent map).

Positions in this module's public results are 1-based.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .perm_core import Perm, PreconditionError, direct_sum, normalize, skew_sum
from .stacksort import Hook, canonical_hooks, require_uniquely_sorted

CLASS_PATTERNS: tuple[Perm, ...] = ((3, 1, 2), (1, 3, 4, 2))


class Skyline(NamedTuple):
    points: tuple[int, ...]  # 1-based positions, left to right
    hooks: tuple[Hook, ...]  # 0-based hooks of the chain, left to right


def require_class(p: Sequence[int]) -> Perm:
    return require_uniquely_sorted(p, CLASS_PATTERNS)


def _skyline(p: Perm) -> Skyline:
    hooks = canonical_hooks(p) or ()
    by_sw = {h.sw: h for h in hooks}
    cur, chain = 0, []
    while cur in by_sw:
        h = by_sw[cur]
        chain.append(h)
        cur = h.ne
    if cur != len(p) - 1:
        raise PreconditionError(f"skyline of {p} stops at position {cur + 1}")
    return Skyline(tuple([1] + [h.ne + 1 for h in chain]), tuple(chain))


def skyline(p: Sequence[int]) -> Skyline:
    """Chain of canonical hooks from the first point to the last."""
    return _skyline(require_class(p))


def is_conjoined(p: Sequence[int], q: int) -> bool:
    """True iff p_q = p_{q+1} + 1 (q is 1-based)."""
    return q < len(p) and p[q - 1] == p[q] + 1


def hook_groups(p: Perm) -> tuple[tuple[Hook, ...], ...]:
    """Skyline hooks right to left, cut before each nonconjoined hook.

    Group i is (H_{i,1} = H_i, ..., H_{i,m_i})."""
    groups: list[list[Hook]] = []
    for h in reversed(_skyline(p).hooks):
        if not is_conjoined(p, h.ne + 1) or not groups:
            groups.append([h])
        else:
            groups[-1].append(h)
    return tuple(tuple(g) for g in groups)


def perm_label(p: Sequence[int]) -> int:
    """b(p) = 1 + (nonconjoined skyline hooks) + (all skyline hooks)."""
    groups = hook_groups(require_class(p))
    return 1 + len(groups) + sum(len(g) for g in groups)


def split_point(p: Sequence[int], pos: int) -> Perm:
    """Insert a point just below and just right of the point at ``pos``."""
    if not 1 <= pos <= len(p):
        raise PreconditionError(f"position {pos} out of range 1..{len(p)}")
    v = p[pos - 1]
    up = [x + 1 if x >= v else x for x in p]
    return tuple(up[:pos] + [v] + up[pos:])


Op = tuple  # ("u",) | ("v", i) | ("w", i, j), 1-based like the interval side


def child_ops(p: Sequence[int]) -> list[Op]:
    groups = hook_groups(require_class(p))
    ops: list[Op] = [("u",)]
    ops += [("v", i) for i in range(1, len(groups) + 1)]
    ops += [("w", i, j) for i, g in enumerate(groups, 1) for j in range(1, len(g) + 1)]
    return ops


def apply_op(p: Sequence[int], op: Sequence) -> Perm:
    p = require_class(p)
    if op[0] == "u":
        return direct_sum(skew_sum(p, (1,)), (1,))
    groups = hook_groups(p)
    i = op[1]
    if not 1 <= i <= len(groups):
        raise PreconditionError(f"operation {op} out of range for {p}")
    if op[0] == "v":
        return direct_sum(split_point(p, groups[i - 1][0].ne + 1), (1,))
    if op[0] == "w":
        j = op[2]
        if not 1 <= j <= len(groups[i - 1]):
            raise PreconditionError(f"operation {op} out of range for {p}")
        # the partner point sits just right of the hook's southwest endpoint
        return direct_sum(split_point(p, groups[i - 1][j - 1].sw + 2), (1,))
    raise ValueError(f"unknown operation {op!r}")


def generate_children_perm(p: Sequence[int]) -> list[Perm]:
    """Children in the order u'; v'_1..v'_t; w'_{1,1}..w'_{t,m_t}."""
    return [apply_op(p, op) for op in child_ops(p)]


def parent_perm(p: Sequence[int]) -> Perm:
    """Delete the last (highest) point and its partner, then normalize."""
    p = require_class(p)
    if len(p) < 3:
        raise PreconditionError(f"{p} has no parent")
    hooks = canonical_hooks(p)
    last = len(p) - 1
    sw = next(h.sw for h in hooks if h.ne == last)
    return normalize([x for i, x in enumerate(p) if i not in (sw + 1, last)])


ROOT: Perm = (2, 1, 3)


def tree_level(k: int) -> list[Perm]:
    """U_{2k+1}(312,1342) in generation order."""
    if k == 0:
        return [(1,)]
    level = [ROOT]
    for _ in range(k - 1):
        level = [c for q in level for c in generate_children_perm(q)]
    return level


def generation_path(p: Sequence[int]) -> tuple[int, ...]:
    """0-based child indices leading from 213 to ``p``."""
    p = require_class(p)
    path: list[int] = []
    while len(p) > 3:
        par = parent_perm(p)
        path.append(generate_children_perm(par).index(p))
        p = par
    return tuple(reversed(path))


def follow_path(path: Sequence[int]) -> Perm:
    p = ROOT
    for c in path:
        p = generate_children_perm(p)[c]
    return p
