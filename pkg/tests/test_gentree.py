from collections import Counter
from math import comb

import pytest

from uniqsort.gentree import (
    CLASS_PATTERNS,
    ROOT,
    apply_op,
    child_ops,
    follow_path,
    generate_children_perm,
    generation_path,
    hook_groups,
    is_conjoined,
    parent_perm,
    perm_label,
    skyline,
    split_point,
    tree_level,
)
from uniqsort.perm_core import PreconditionError
from uniqsort.stacksort import enumerate_uniquely_sorted


def test_skyline_examples():
    assert skyline((4, 3, 2, 6, 5, 7, 8, 1, 9)).points == (1, 7, 9)
    assert skyline((2, 1, 3)).points == (1, 3)
    assert skyline((1,)).points == (1,) and skyline((1,)).hooks == ()
    with pytest.raises(PreconditionError):
        skyline((3, 1, 2, 5, 4, 6, 7))


def test_conjoined_examples():
    assert not is_conjoined((2, 1, 3), 3)
    assert is_conjoined((2, 1, 3), 1)
    assert not is_conjoined((4, 3, 2, 6, 5, 7, 8, 1, 9), 7)


def test_split_point():
    assert split_point((1,), 1) == (2, 1)
    assert split_point((1, 2), 2) == (1, 3, 2)
    assert split_point((2, 1, 3), 1) == (3, 2, 1, 4)


def test_labels_and_children_of_root():
    assert perm_label(ROOT) == 3
    kids = generate_children_perm(ROOT)
    assert len(kids) == 3 and (2, 1, 4, 3, 5) in kids
    assert perm_label(kids[0]) == 5


def test_parent_examples():
    assert parent_perm((2, 1, 4, 3, 5)) == (2, 1, 3)
    assert parent_perm((3, 2, 1, 5, 4, 6, 7)) == (2, 1, 4, 3, 5)


def test_level_sizes_and_class():
    for k in range(1, 5):
        level = tree_level(k)
        assert Counter(level) == Counter(enumerate_uniquely_sorted(k, CLASS_PATTERNS))
    assert [len(tree_level(k)) for k in range(1, 7)] == [comb(3 * k, k) // (2 * k + 1) for k in range(1, 7)]


def test_unique_parent_operation():
    for k in range(1, 4):
        seen = Counter()
        for p in tree_level(k):
            for op in child_ops(p):
                c = apply_op(p, op)
                assert parent_perm(c) == p
                seen[c] += 1
        assert set(seen.values()) == {1}
        assert set(seen) == set(enumerate_uniquely_sorted(k + 1, CLASS_PATTERNS))


def test_label_updates_and_consecutive_children():
    for k in range(1, 5):
        for p in tree_level(k):
            b = perm_label(p)
            m = [len(g) for g in hook_groups(p)]
            for op in child_ops(p):
                got = perm_label(apply_op(p, op))
                if op[0] == "u":
                    assert got == b + 2
                elif op[0] == "v":
                    assert got == b + 1 - (op[1] - 1) - sum(m[: op[1] - 1])
                else:
                    i, j = op[1], op[2]
                    assert got == b - (i - 1) - sum(m[: i - 1]) - (j - 1)
            assert sorted(perm_label(c) for c in generate_children_perm(p)) == list(range(3, b + 3))


def test_skyline_endpoints():
    for k in range(1, 6):
        for p in enumerate_uniquely_sorted(k, CLASS_PATTERNS):
            pts = skyline(p).points
            assert pts[0] == 1 and pts[-1] == 2 * k + 1
            assert is_conjoined(p, pts[0]) and not is_conjoined(p, pts[-1])


def test_paths_roundtrip():
    for p in tree_level(4):
        assert follow_path(generation_path(p)) == p
