import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uniqsort.perm_core import (
    PreconditionError,
    avoids,
    contains,
    des,
    descents,
    direct_sum,
    enumerate_avoiders,
    find_occurrence,
    inverse,
    normalize,
    parse_patterns,
    parse_perm,
    reverse,
    rot,
    rot_inverse,
    skew_sum,
    unnormalize,
)

from conftest import all_perms

perms = st.integers(0, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def naive_contains(p, pat):
    m = len(pat)
    return any(normalize([p[i] for i in idx]) == tuple(pat) for idx in itertools.combinations(range(len(p)), m))


def test_parse_forms():
    assert parse_perm("35241") == (3, 5, 2, 4, 1)
    assert parse_perm("3,5,2,4,1") == (3, 5, 2, 4, 1)
    assert parse_perm("10,1,2") == (10, 1, 2)
    assert parse_patterns("312;1342") == [(3, 1, 2), (1, 3, 4, 2)]
    assert parse_patterns("231,4123") == [(2, 3, 1), (4, 1, 2, 3)]
    with pytest.raises(PreconditionError):
        parse_perm("1,1")
    with pytest.raises(PreconditionError):
        parse_patterns("13")


def test_normalize_roundtrip():
    assert normalize((5, 9, 2)) == (2, 3, 1)
    assert unnormalize((2, 3, 1), (5, 9, 2)) == (5, 9, 2)


def test_descents_are_one_based():
    assert descents((3, 5, 2, 4, 1)) == {2, 4}
    assert des((2, 1, 3)) == 1


def test_symmetries_small():
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert rot((2, 1, 3)) == reverse(inverse((2, 1, 3)))
    with pytest.raises(PreconditionError):
        inverse((1, 3))


def test_sums():
    assert direct_sum((2, 1), (1,)) == (2, 1, 3)
    assert skew_sum((1,), (2, 1)) == (3, 2, 1)


@given(perms)
def test_rot_has_order_four(p):
    assert rot_inverse(rot(p)) == p
    assert rot(rot(rot(rot(p)))) == p


@given(perms, st.sampled_from([(1, 2), (2, 1), (1, 3, 2), (3, 1, 2), (2, 3, 1), (1, 3, 4, 2), (4, 1, 2, 3)]))
def test_containment_matches_naive(p, pat):
    assert contains(p, pat) == naive_contains(p, pat)
    occ = find_occurrence(p, pat)
    if occ is not None:
        assert normalize([p[i] for i in occ]) == pat


@pytest.mark.parametrize(
    "pats",
    [[], [(1, 2, 3)], [(3, 1, 2)], [(2, 3, 1), (4, 1, 2, 3)], [(3, 1, 2), (1, 3, 4, 2)], [(2, 1, 4, 3)], [(1, 4, 2, 5, 3)]],
)
def test_enumerate_avoiders_matches_filter(pats):
    for n in range(7):
        want = [q for q in all_perms(n) if all(avoids(q, t) for t in pats)]
        assert list(enumerate_avoiders(n, pats)) == want


def test_avoider_edge_cases():
    assert list(enumerate_avoiders(0, [(1, 2)])) == [()]
    assert list(enumerate_avoiders(3, [(1,)])) == []
    want = [q for q in all_perms(4) if q[0] == 2 and avoids(q, (1, 3, 2))]
    assert list(enumerate_avoiders(4, [(1, 3, 2)], first=2)) == want


def test_catalan_counts_for_length_three():
    for pat in itertools.permutations((1, 2, 3)):
        assert [sum(1 for _ in enumerate_avoiders(n, [pat])) for n in range(9)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
