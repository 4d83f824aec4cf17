"""Noncrossing partitions of [k] under refinement, their intervals, and the
generating tree that grows intervals of NC_k into intervals of NC_{k+1}.

A partition is a tuple of blocks, each block a sorted tuple, blocks sorted
by their minimum.  Equal partitions are therefore equal tuples.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, NamedTuple, Sequence

from .perm_core import PreconditionError, ResourceLimitError

Block = tuple[int, ...]
Partition = tuple[Block, ...]

PAIRWISE_MAX_K = 8


def canonical(blocks: Iterable[Iterable[int]]) -> Partition:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0))


def _check_partition(p: Partition) -> int:
    elems = [x for b in p for x in b]
    k = len(elems)
    if any(not b for b in p) or sorted(elems) != list(range(1, k + 1)):
        raise PreconditionError(f"{format_partition(p)} is not a set partition of [{k}]")
    return k


def _crossing(a: Block, b: Block) -> bool:
    for x, z in itertools.combinations(a, 2):
        for y, w in itertools.combinations(b, 2):
            if x < y < z < w or y < x < w < z:
                return True
    return False


def is_noncrossing(blocks: Iterable[Iterable[int]]) -> bool:
    p = canonical(blocks)
    _check_partition(p)
    return not any(_crossing(a, b) for a, b in itertools.combinations(p, 2))


def partition(blocks: Iterable[Iterable[int]]) -> Partition:
    """Validate and canonicalize a noncrossing partition."""
    p = canonical(blocks)
    if not is_noncrossing(p):
        raise PreconditionError(f"{format_partition(p)} has crossing blocks")
    return p


def size(p: Partition) -> int:
    return sum(len(b) for b in p)


def format_partition(p: Partition) -> str:
    if not p:
        return "{}"
    return "".join("{" + ",".join(map(str, b)) + "}" for b in p)


def parse_partition(text: str) -> Partition:
    """Parse ``"{1,3}{2}"``; ``"{}"`` or the empty string is NC_0's element."""
    text = text.strip()
    if text in ("", "{}"):
        return ()
    if not re.fullmatch(r"(\{\s*\d+(\s*,\s*\d+)*\s*\}\s*)+", text):
        raise PreconditionError(f"cannot parse partition {text!r}")
    blocks = [[int(x) for x in m.split(",")] for m in re.findall(r"\{([^}]*)\}", text)]
    return partition(blocks)


def nc_leq(a: Partition, b: Partition) -> bool:
    """Refinement: every block of ``a`` lies inside a block of ``b``."""
    if size(a) != size(b):
        raise PreconditionError(f"size mismatch: {format_partition(a)} vs {format_partition(b)}")
    owner = {x: i for i, blk in enumerate(b) for x in blk}
    return all(len({owner[x] for x in blk}) == 1 for blk in a)


def set_partitions(k: int) -> Iterator[Partition]:
    """All set partitions of [k] (restricted growth strings)."""
    if k == 0:
        yield ()
        return

    def rec(x: int, blocks: list[list[int]]) -> Iterator[Partition]:
        if x > k:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(x)
            yield from rec(x + 1, blocks)
            b.pop()
        blocks.append([x])
        yield from rec(x + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def enumerate_nc(k: int) -> Iterator[Partition]:
    """NC_k by filtering set partitions; NC_0 = {()}."""
    for p in set_partitions(k):
        if not any(_crossing(a, b) for a, b in itertools.combinations(p, 2)):
            yield p


def exposed_blocks(p: Partition) -> tuple[Block, ...]:
    """Blocks with no block arching over them, right to left by maximum."""
    out = [
        b
        for b in p
        if not any(c[0] < b[0] and b[-1] < c[-1] for c in p if c is not b)
    ]
    return tuple(sorted(out, key=lambda b: -b[-1]))


class NCInterval(NamedTuple):
    rho: Partition
    kappa: Partition

    def __str__(self) -> str:
        return f"{format_partition(self.rho)}|{format_partition(self.kappa)}"


def nc_interval(rho: Partition, kappa: Partition) -> NCInterval:
    if not nc_leq(rho, kappa):
        raise PreconditionError(f"{format_partition(rho)} is not below {format_partition(kappa)}")
    return NCInterval(rho, kappa)


def parse_nc_interval(text: str) -> NCInterval:
    lo, hi = text.split("|")
    return nc_interval(parse_partition(lo), parse_partition(hi))


def intervals_pairwise(k: int, limit: int | None = None) -> Iterator[NCInterval]:
    cap = PAIRWISE_MAX_K if limit is None else limit
    if k > cap:
        raise ResourceLimitError(f"pairwise NC interval scan at k={k} exceeds guard k <= {cap}")
    ps = list(enumerate_nc(k))
    for a in ps:
        for b in ps:
            if nc_leq(a, b):
                yield NCInterval(a, b)


def label_structure(iv: NCInterval) -> tuple[tuple[Block, ...], tuple[tuple[Block, ...], ...]]:
    """(B_1..B_t, ((B_{1,1}..B_{1,m_1}), ...)), all right to left.

    B_{i,j} are the exposed blocks of rho lying inside B_i."""
    top = exposed_blocks(iv.kappa)
    low = exposed_blocks(iv.rho)
    groups = tuple(tuple(b for b in low if set(b) <= set(big)) for big in top)
    return top, groups


def interval_label(iv: NCInterval) -> int:
    top, groups = label_structure(iv)
    return 1 + len(top) + sum(len(g) for g in groups)


def _add(p: Partition, block: Block, x: int) -> Partition:
    return tuple(b + (x,) if b == block else b for b in p)


Op = tuple  # ("u",) | ("v", i) | ("w", i, j), indices 1-based


def child_ops(iv: NCInterval) -> list[Op]:
    _, groups = label_structure(iv)
    ops: list[Op] = [("u",)]
    ops += [("v", i) for i in range(1, len(groups) + 1)]
    ops += [("w", i, j) for i, g in enumerate(groups, 1) for j in range(1, len(g) + 1)]
    return ops


def apply_op(iv: NCInterval, op: Sequence) -> NCInterval:
    k = size(iv.kappa)
    x = k + 1
    top, groups = label_structure(iv)
    if op[0] == "u":
        return NCInterval(iv.rho + ((x,),), iv.kappa + ((x,),))
    i = op[1]
    if not 1 <= i <= len(top):
        raise PreconditionError(f"operation {op} out of range for {iv}")
    kappa = _add(iv.kappa, top[i - 1], x)
    if op[0] == "v":
        return NCInterval(iv.rho + ((x,),), kappa)
    if op[0] == "w":
        j = op[2]
        if not 1 <= j <= len(groups[i - 1]):
            raise PreconditionError(f"operation {op} out of range for {iv}")
        return NCInterval(_add(iv.rho, groups[i - 1][j - 1], x), kappa)
    raise ValueError(f"unknown operation {op!r}")


def generate_children(iv: NCInterval) -> list[NCInterval]:
    """Children in the order u; v_1..v_t; w_{1,1}..w_{t,m_t}."""
    return [apply_op(iv, op) for op in child_ops(iv)]


def parent_interval(iv: NCInterval) -> NCInterval:
    """Drop the largest element from both partitions."""
    k = size(iv.kappa)
    if k == 0:
        raise PreconditionError("the empty interval has no parent")

    def drop(p: Partition) -> Partition:
        return tuple(b for b in (tuple(y for y in blk if y != k) for blk in p) if b)

    return NCInterval(drop(iv.rho), drop(iv.kappa))


ROOT = NCInterval(((1,),), ((1,),))


def tree_level(k: int) -> list[NCInterval]:
    """Intervals of NC_k reached from the root, in generation order."""
    if k == 0:
        return [NCInterval((), ())]
    level = [ROOT]
    for _ in range(k - 1):
        level = [c for iv in level for c in generate_children(iv)]
    return level


def generation_path(iv: NCInterval) -> tuple[int, ...]:
    """0-based child indices leading from the root to ``iv``."""
    path: list[int] = []
    while size(iv.kappa) > 1:
        par = parent_interval(iv)
        path.append(generate_children(par).index(iv))
        iv = par
    return tuple(reversed(path))


def follow_path(path: Sequence[int]) -> NCInterval:
    iv = ROOT
    for c in path:
        iv = generate_children(iv)[c]
    return iv
