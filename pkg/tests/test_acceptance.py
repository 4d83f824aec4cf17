"""Acceptance criteria AC1..AC13.

Each criterion prints one PASS/FAIL line.  Run with
``pytest tests/test_acceptance.py -v -s`` or ``python tests/test_acceptance.py``.
"""

import itertools
import sys
import time
from collections import Counter

from uniqsort import bijections as bj
from uniqsort import dyck, gentree, noncross
from uniqsort.harness import formulas, sequences
from uniqsort.sliding import swd, swl, swr, swu
from uniqsort.stacksort import (
    enumerate_uniquely_sorted,
    fertility,
    fertility_census,
    is_sorted,
    is_uniquely_sorted,
)


def U(k, pats=()):
    return list(enumerate_uniquely_sorted(k, pats, limit=max(k, 0)))


def check(cond, msg):
    if not cond:
        raise AssertionError(msg)


def ac1():
    for n in range(1, 9):
        for q in itertools.permutations(range(1, n + 1)):
            f = fertility(q)
            check((f == 1) == is_uniquely_sorted(q), f"{q}: fertility {f}, uniquely sorted {is_uniquely_sorted(q)}")
            check((f >= 1) == is_sorted(q), f"{q}: fertility {f}, sorted {is_sorted(q)}")
    return "all of S_1..S_8"


def ac2():
    expected = [1, 1, 5, 61, 1379]
    got = [len(U(k)) for k in range(5)]
    census = [sum(1 for v in fertility_census(2 * k + 1).values() if v == 1) for k in range(5)]
    check(got == census, f"enumeration {got} disagrees with fertility census {census}")
    check(got == expected, f"expected {expected}, enumeration and census both give {got}")
    return f"{got}"


def ac3():
    for k in range(7):
        got, want = len(U(k, [bj.P312])), formulas.closed_form("eq1_stanley", k)
        check(got == want, f"k={k}: {got} != {want}")
    return "k <= 6"


def ac4():
    for k in range(6):
        A, B = U(k, [bj.P231]), U(k, [bj.P132])
        want = formulas.closed_form("eq2_tamari", k)
        check(len(A) == len(B) == want, f"k={k}: |231|={len(A)} |132|={len(B)} formula={want}")
        check(sorted(swu(p) for p in A) == B, f"k={k}: swu does not map U(231) onto U(132)")
        check(all(swd(swu(p)) == p for p in A), f"k={k}: swd is not inverse to swu on U(231)")
        check(all(swu(swd(p)) == p for p in B), f"k={k}: swu is not inverse to swd on U(132)")
    return "k <= 5"


def ac5():
    for k in range(7):
        S = U(k, gentree.CLASS_PATTERNS)
        want = formulas.closed_form("eq3_kreweras", k)
        check(len(S) == want, f"k={k}: {len(S)} != {want}")
        if k >= 1:
            check(sorted(gentree.tree_level(k)) == S, f"k={k}: generating tree level differs from U(312,1342)")
            nc_level = noncross.tree_level(k)
            check(len(nc_level) == want, f"k={k}: NC tree level has {len(nc_level)} nodes")
            labels_p = Counter(gentree.perm_label(p) for p in S)
            labels_nc = Counter(noncross.interval_label(iv) for iv in nc_level)
            check(labels_p == labels_nc, f"k={k}: label multisets differ")
            for p in S if k <= 5 else ():
                m = gentree.perm_label(p)
                kids = sorted(gentree.perm_label(c) for c in gentree.generate_children_perm(p))
                check(kids == list(range(3, m + 3)), f"{p}: label {m} has children {kids}")
        if k <= 5:
            images = {bj.upsilon_tree(p) for p in S}
            check(len(images) == len(S), f"k={k}: upsilon_tree is not injective")
            check(images == set(noncross.intervals_pairwise(k)), f"k={k}: image is not Int(NC_k)")
    return "counts k <= 6, upsilon_tree k <= 5"


def ac6():
    check(bj.dl_forward((3, 2, 5, 4, 1, 6, 7))[:2] == ("UUDDUD", "UUDUDD"), "DL_3(3254167) mismatch")
    for k in range(6):
        for p in U(k, [bj.P312]):
            check(bj.dl_inverse(bj.dl_forward(p)) == p, f"{p}: inverse(forward) differs")
        for iv in dyck.intervals(k, "stanley"):
            check(bj.dl_forward(bj.dl_inverse(iv))[:2] == iv[:2], f"{iv}: forward(inverse) differs")
    return "k <= 5"


def ac7():
    for k in range(5):
        image = {bj.dl_forward(p)[:2] for p in U(k, [bj.P312]) if is_sorted(swr(p))}
        tamari = {iv[:2] for iv in dyck.intervals(k, "tamari")}
        check(image == tamari, f"k={k}: image of swr-sortable 312-avoiders is not Int(L^T)")
        check(len(tamari) == formulas.closed_form("eq2_tamari", k), f"k={k}: |Int(L^T)| mismatch")
    q = swu((2, 1, 5, 4, 3, 6, 7))
    lo, hi, _ = bj.dl_forward(swl(q))
    check((lo, hi) == ("UUDDUD", "UUUDDD"), f"pinned value gave {(lo, hi)}")
    check(dyck.leq(lo, hi, "tamari"), "pinned value is not a Tamari interval")
    check(not dyck.leq(lo, hi, "pallo"), "pinned value is a Pallo interval")
    return "k <= 4"


def ac8():
    got = [r.count for r in sequences.compute_sequence("231;4132", 6)]
    want = formulas.series_coefficients("C_of_xC", 6)
    check(got == want == [1, 1, 3, 11, 44, 185, 804], f"enumeration {got}, series {want}")
    check(formulas.eq16_residual(13) == [0] * 14, "residual does not vanish to order 13")
    return f"{got}"


def ac9():
    classes = {
        "321": [bj.P321],
        "231,312": [bj.P231, bj.P312],
        "132,231": [bj.P132, bj.P231],
        "132,312": [bj.P132, bj.P312],
    }
    for k in range(7):
        c = formulas.catalan(k)
        for name, pats in classes.items():
            check(len(U(k, pats)) == c, f"k={k}: |U({name})| != C_k")
        pf = [bj.parking_bijection(p) for p in U(k, [bj.P321])]
        check(len(set(pf)) == c and all(bj.is_parking_nondecreasing(a) for a in pf), f"k={k}: parking map")
        all_pf = [a for a in itertools.product(range(1, k + 1), repeat=k) if bj.is_parking_nondecreasing(a)]
        check(set(pf) == set(all_pf), f"k={k}: parking map not onto")
        paths = set(dyck.enumerate_paths(k))
        for which, (pats, _) in bj.ANTICHAIN_MAPS.items():
            ivs = [bj.antichain_map(p, which) for p in U(k, pats)]
            check(all(iv.lower == iv.upper for iv in ivs), f"k={k}: {which} leaves the antichain")
            check({iv.lower for iv in ivs} == paths and len(ivs) == c, f"k={k}: {which} not bijective")
    return "k <= 6"


def ac10():
    for k in range(2, 6):
        zig = tuple(x for i in range(1, k + 1) for x in (2 * i, 2 * i - 1)) + (2 * k + 1,)
        dec = tuple(range(k + 1, 0, -1)) + tuple(range(k + 2, 2 * k + 2))
        check(U(k, [bj.P231, bj.P321]) == [zig], f"k={k}: U(231,321)")
        check(U(k, [bj.P312, bj.P321]) == [zig], f"k={k}: U(312,321)")
        check(U(k, [bj.P231, bj.P312, bj.P321]) == [zig], f"k={k}: U(231,312,321)")
        check(U(k, [bj.P132, bj.P231, bj.P312]) == [dec], f"k={k}: U(132,231,312)")
        check(U(k, [bj.P132, bj.P321]) == [], f"k={k}: U(132,321) nonempty")
    return "2 <= k <= 5"


def ac11():
    printed = list(sequences.A307346_PRINTED)
    got = [r.count for r in sequences.compute_sequence(sequences.A307346_CLASS, 5)]
    check(got == printed[:6], f"k <= 5: {got} != {printed[:6]}")
    ext = [r.count for r in sequences.compute_sequence(sequences.A307346_CLASS, 7, limit=7, parallel=4)]
    check(ext == printed[:8], f"k <= 7: {ext} != {printed[:8]}")
    return f"{ext}"


def ac12():
    for k in range(8):
        for kind, tag in (
            ("stanley", "eq1_stanley"),
            ("tamari", "eq2_tamari"),
            ("pallo", "eq15_pallo_series"),
            ("antichain", "catalan"),
        ):
            got, want = dyck.count_intervals(k, kind), formulas.closed_form(tag, k)
            check(got == want, f"k={k} {kind}: {got} != {want}")
        got = sum(1 for _ in noncross.intervals_pairwise(k))
        check(got == formulas.closed_form("eq3_kreweras", k), f"k={k} noncrossing: {got}")
    for k in range(7):
        paths = list(dyck.enumerate_paths(k))
        for a, b in itertools.product(paths, repeat=2):
            if dyck.leq(a, b, "pallo"):
                check(dyck.leq(a, b, "tamari"), f"{a} <=P {b} but not <=T")
            if dyck.leq(a, b, "tamari"):
                check(dyck.leq(a, b, "stanley"), f"{a} <=T {b} but not <=S")
    return "counts k <= 7, chain k <= 6"


def ac13():
    bad = [p for k in range(5) for p in U(k, gentree.CLASS_PATTERNS) if bj.upsilon_direct(p) != bj.upsilon_tree(p)]
    check(not bad, f"finding: direct and tree maps differ on {len(bad)} inputs, first {bad[:3]}")
    return "k <= 4"


CRITERIA = [
    (1, "fertility characterization", ac1),
    (2, "|U_(2k+1)| census", ac2),
    (3, "312-avoiders count", ac3),
    (4, "132/231 counts and swu bijection", ac4),
    (5, "312,1342 counts, trees, upsilon", ac5),
    (6, "DL roundtrip", ac6),
    (7, "Tamari image", ac7),
    (8, "231,4132 series", ac8),
    (9, "antichain quartet", ac9),
    (10, "singleton and empty classes", ac10),
    (11, "231,4123 printed sequence", ac11),
    (12, "poset interval counts and chain", ac12),
    (13, "direct vs tree upsilon", ac13),
]


def run_criterion(num, title, fn):
    """Return (passed, line) for one criterion."""
    t0 = time.perf_counter()
    try:
        detail, ok = fn(), True
    except AssertionError as exc:
        detail, ok = str(exc), False
    line = f"AC{num} {'PASS' if ok else 'FAIL'} {title}: {detail} ({time.perf_counter() - t0:.1f}s)"
    return ok, line


def _make_test(num, title, fn):
    def test(capsys):
        ok, line = run_criterion(num, title, fn)
        with capsys.disabled():
            print("\n" + line)
        assert ok, line

    test.__name__ = f"test_ac{num}"
    return test


for _num, _title, _fn in CRITERIA:
    globals()[f"test_ac{_num}"] = _make_test(_num, _title, _fn)


if __name__ == "__main__":
    failures = 0
    for num, title, fn in CRITERIA:
        ok, line = run_criterion(num, title, fn)
        print(line, flush=True)
        failures += not ok
    sys.exit(1 if failures else 0)
