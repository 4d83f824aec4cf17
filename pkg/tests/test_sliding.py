import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uniqsort.perm_core import PreconditionError, reverse, rot, rot_inverse
from uniqsort.sliding import slide, slide_indexed, swd, swl, swr, swu, swu_recursive

perms = st.integers(0, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_indexed_examples():
    assert slide_indexed((1, 2, 4, 3), "swu", 4) == (2, 3, 4, 1)
    assert slide_indexed((2, 4, 9, 6), "swu", 4) == (4, 6, 9, 2)
    with pytest.raises(PreconditionError):
        slide_indexed((2, 1), "swu", 3)


def test_swu_fixes_213():
    # 213 = (1 (+) 1) (-) 1 already has the recursive shape
    assert swu((2, 1, 3)) == (2, 1, 3)


def test_recursive_matches_indexed_exhaustive():
    for n in range(8):
        for q in itertools.permutations(range(1, n + 1)):
            assert swu(q) == swu_recursive(q)


@given(perms)
def test_conjugates(p):
    assert swd(p) == reverse(swu(reverse(p)))
    if p:
        assert swl(p) == rot_inverse(swu(rot(p)))
        assert swr(p) == rot_inverse(swd(rot(p)))


@given(perms)
def test_slides_are_permutations(p):
    for op in ("swu", "swd", "swl", "swr"):
        assert sorted(slide(p, op)) == sorted(p)


def test_unknown_operator():
    with pytest.raises(ValueError):
        slide((1,), "sideways")
