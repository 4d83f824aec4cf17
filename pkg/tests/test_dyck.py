from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uniqsort.dyck import (
    KINDS,
    count_intervals,
    dyck,
    enumerate_paths,
    from_gammas,
    gamma_decomposition,
    intervals,
    is_dyck,
    leq,
    longevity,
    parse_interval,
)
from uniqsort.perm_core import PreconditionError, ResourceLimitError


def catalan(k):
    return comb(2 * k, k) // (k + 1)


paths = st.integers(0, 7).flatmap(lambda k: st.sampled_from(list(enumerate_paths(k))))


def test_gamma_examples():
    assert gamma_decomposition("UUDUUDDDUD") == (0, 1, 0, 3, 1)
    assert gamma_decomposition("UDUDUD") == (1, 1, 1)
    assert gamma_decomposition("UUUDDD") == (0, 0, 3)


def test_longevity_examples():
    assert longevity("UUDUUDDDUD") == (3, 0, 1, 0, 0)
    assert longevity("UDUDUD") == (0, 0, 0)
    assert longevity("UUUDDD") == (2, 1, 0)


@given(paths)
def test_gamma_roundtrip_and_longevity_bound(d):
    g = gamma_decomposition(d)
    assert from_gammas(g) == d and sum(g) == len(g)
    k = len(g)
    assert all(0 <= x <= k - j for j, x in enumerate(longevity(d), 1))


def test_enumeration_counts_and_order():
    for k in range(8):
        ps = list(enumerate_paths(k))
        assert len(ps) == catalan(k) and ps == sorted(ps, key=lambda w: w.replace("U", "0").replace("D", "1")) and all(is_dyck(p) for p in ps)
    assert list(enumerate_paths(0)) == [""]


def test_order_examples():
    assert leq("UUDDUD", "UUDUDD", "stanley")
    assert leq("UUDDUD", "UUUDDD", "tamari")
    assert not leq("UUDDUD", "UUUDDD", "pallo")
    for kind in KINDS:
        assert leq("UUDUDD", "UUDUDD", kind)
    with pytest.raises(PreconditionError):
        leq("UD", "UDUD", "stanley")


def test_interval_counts_against_closed_forms():
    stanley = [catalan(k) * catalan(k + 2) - catalan(k + 1) ** 2 for k in range(8)]
    tamari = [2 * comb(4 * k + 1, k + 1) // ((3 * k + 1) * (3 * k + 2)) for k in range(8)]
    pallo = [1, 1, 3, 11, 44, 185, 804, 3579]
    assert [count_intervals(k, "stanley") for k in range(8)] == stanley
    assert [count_intervals(k, "tamari") for k in range(8)] == tamari
    assert [count_intervals(k, "pallo") for k in range(8)] == pallo
    assert [count_intervals(k, "antichain") for k in range(8)] == [catalan(k) for k in range(8)]


def test_extension_chain():
    for k in range(6):
        ps = list(enumerate_paths(k))
        for a in ps:
            for b in ps:
                if leq(a, b, "pallo"):
                    assert leq(a, b, "tamari")
                if leq(a, b, "tamari"):
                    assert leq(a, b, "stanley")


def test_partial_order_axioms():
    for k in range(5):
        ps = list(enumerate_paths(k))
        for kind in KINDS:
            rel = {(a, b) for a in ps for b in ps if leq(a, b, kind)}
            assert all((a, a) in rel for a in ps)
            assert not any(a != b and (b, a) in rel for a, b in rel)
            assert all((a, c) in rel for a, b in rel for b2, c in rel if b == b2)


def test_interval_text_and_guard():
    iv = parse_interval("UUDDUD;UUDUDD")
    assert str(iv) == "UUDDUD;UUDUDD"
    with pytest.raises(PreconditionError):
        parse_interval("UUDUDD;UUDDUD")
    with pytest.raises(PreconditionError):
        dyck("UDDU")
    with pytest.raises(ResourceLimitError):
        next(intervals(10, "stanley"))
