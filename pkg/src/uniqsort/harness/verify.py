"""Verification suites that tie every module to its expected counts and
identities.  Each check caps its own k so that ``verify(..., 6)`` stays fast."""

from __future__ import annotations

import itertools
import time
from collections import Counter
from typing import Callable, NamedTuple

from .. import bijections as bj
from .. import dyck, gentree, noncross
from ..perm_core import descents, reverse, rot_inverse
from ..sliding import slide_indexed, swd, swr, swu, swu_recursive
from ..stacksort import (
    enumerate_uniquely_sorted,
    fertility_census,
    is_sorted,
    is_uniquely_sorted,
    stack_sort,
    stack_sort_recursive,
)
from . import formulas, sequences

SUITES = ("lemmas", "posets", "bijections", "sequences")


class Check(NamedTuple):
    suite: str
    name: str
    passed: bool
    detail: str
    seconds: float


def U(k: int, pats=()) -> list:
    return list(enumerate_uniquely_sorted(k, pats, limit=max(k, 0)))


# ---------------------------------------------------------------------------
# lemmas


def _stack_sort_oracle(K: int) -> tuple[bool, str]:
    n = min(2 * K + 1, 7)
    ok = all(
        stack_sort(q) == stack_sort_recursive(q)
        for m in range(n + 1)
        for q in itertools.permutations(range(1, m + 1))
    )
    return ok, f"n <= {n}"


def _fertility_characterization(K: int) -> tuple[bool, str]:
    n_max = min(2 * K + 1, 7)
    for n in range(1, n_max + 1):
        census = fertility_census(n)
        for q in itertools.permutations(range(1, n + 1)):
            f = census[q]
            if (f == 1) != is_uniquely_sorted(q) or (f >= 1) != is_sorted(q):
                return False, f"mismatch at {q}"
    return True, f"n <= {n_max}"


def _swu_recursive(K: int) -> tuple[bool, str]:
    n = min(2 * K + 1, 7)
    ok = all(
        swu(q) == swu_recursive(q)
        for m in range(n + 1)
        for q in itertools.permutations(range(1, m + 1))
    )
    return ok, f"n <= {n}"


def _slide_conjugates(K: int) -> tuple[bool, str]:
    n = min(2 * K + 1, 6)
    for m in range(1, n + 1):
        for q in itertools.permutations(range(1, m + 1)):
            for i in range(1, m + 1):
                up = slide_indexed(q, "swu", i)
                if slide_indexed(reverse(q), "swd", i) != reverse(up):
                    return False, f"swd_{i} is not rev o swu_{i} o rev at {q}"
                if slide_indexed(rot_inverse(q), "swl", i) != rot_inverse(up):
                    return False, f"swl_{i} is not rot^-1 o swu_{i} o rot at {q}"
    return True, f"n <= {n}"


def _lemma9(K: int) -> tuple[bool, str]:
    k_max = min(K, 5)
    for k in range(k_max + 1):
        for q in itertools.permutations(range(1, 2 * k + 2)):
            try:
                w = bj.lemma9_word(q)
            except bj.PreconditionError:
                continue
            if dyck.is_dyck(w) != is_uniquely_sorted(q):
                return False, f"mismatch at {q}"
    return True, f"k <= {k_max}"


def _lemma3_moves(K: int) -> tuple[bool, str]:
    k_max = min(K, 5)
    worst = 0
    for k in range(1, k_max + 1):
        for lo, hi, _ in dyck.intervals(k, "stanley"):
            g, g2 = dyck.gamma_decomposition(lo), dyck.gamma_decomposition(hi)
            a = [g2[k - i] for i in range(1, k + 1)]
            b = [g[k - i] for i in range(1, k + 1)]
            res = bj.lemma3_trace(a, b)
            if bj.lemma3_violations(res.matrix, a, b):
                return False, f"conditions fail for a={a}, b={b}"
            e = res.energies
            if any(y > x - 2.0 ** (1 - k) for x, y in zip(e, e[1:])):
                return False, f"energy did not drop for a={a}, b={b}"
            worst = max(worst, res.moves)
    return True, f"k <= {k_max}, most moves {worst}"


def _tree_labels(K: int) -> tuple[bool, str]:
    k_max = min(K, 4)
    for k in range(1, k_max + 1):
        for iv in noncross.tree_level(k):
            labels = sorted(noncross.interval_label(c) for c in noncross.generate_children(iv))
            if labels != list(range(3, noncross.interval_label(iv) + 3)):
                return False, f"interval {iv}"
        for p in gentree.tree_level(k):
            kids = gentree.generate_children_perm(p)
            labels = sorted(gentree.perm_label(c) for c in kids)
            if labels != list(range(3, gentree.perm_label(p) + 3)):
                return False, f"permutation {p}"
            if any(gentree.parent_perm(c) != p for c in kids):
                return False, f"parent map fails under {p}"
    return True, f"k <= {k_max}"


def _skyline_ends(K: int) -> tuple[bool, str]:
    k_max = min(K, 5)
    for k in range(1, k_max + 1):
        for p in U(k, gentree.CLASS_PATTERNS):
            pts = gentree.skyline(p).points
            if not gentree.is_conjoined(p, pts[0]) or gentree.is_conjoined(p, pts[-1]):
                return False, f"{p}"
    return True, f"k <= {k_max}"


# ---------------------------------------------------------------------------
# posets

_POSET_FORMULA = {
    "stanley": "eq1_stanley",
    "tamari": "eq2_tamari",
    "pallo": "eq15_pallo_series",
    "antichain": "catalan",
}


def _poset_counts(kind: str) -> Callable[[int], tuple[bool, str]]:
    def run(K: int) -> tuple[bool, str]:
        k_max = min(K, 7)
        for k in range(k_max + 1):
            got = dyck.count_intervals(k, kind)
            want = formulas.closed_form(_POSET_FORMULA[kind], k)
            if got != want:
                return False, f"k={k}: scan {got}, formula {want}"
        return True, f"k <= {k_max}"

    return run


def _kreweras_counts(K: int) -> tuple[bool, str]:
    k_max = min(K, 6)
    for k in range(k_max + 1):
        want = formulas.closed_form("eq3_kreweras", k)
        scan = sum(1 for _ in noncross.intervals_pairwise(k))
        tree = noncross.tree_level(k)
        if not scan == len(tree) == want or Counter(tree) != Counter(noncross.intervals_pairwise(k)):
            return False, f"k={k}: scan {scan}, tree {len(tree)}, formula {want}"
    return True, f"k <= {k_max}"


def _extension_chain(K: int) -> tuple[bool, str]:
    k_max = min(K, 6)
    for k in range(k_max + 1):
        paths = list(dyck.enumerate_paths(k))
        for a in paths:
            for b in paths:
                p, t, s = (dyck.leq(a, b, x) for x in ("pallo", "tamari", "stanley"))
                if (p and not t) or (t and not s) or (a == b and not p):
                    return False, f"({a}, {b})"
    return True, f"k <= {k_max}"


def _partial_orders(K: int) -> tuple[bool, str]:
    k_max = min(K, 4)
    for k in range(k_max + 1):
        paths = list(dyck.enumerate_paths(k))
        for kind in dyck.KINDS:
            rel = {(a, b) for a in paths for b in paths if dyck.leq(a, b, kind)}
            if any((a, a) not in rel for a in paths):
                return False, f"{kind} not reflexive at k={k}"
            if any(a != b and (b, a) in rel for a, b in rel):
                return False, f"{kind} not antisymmetric at k={k}"
            if any((a, c) not in rel for a, b in rel for b2, c in rel if b == b2):
                return False, f"{kind} not transitive at k={k}"
    return True, f"k <= {k_max}"


# ---------------------------------------------------------------------------
# bijections


def _dl_roundtrip(K: int) -> tuple[bool, str]:
    k_max = min(K, 5)
    if bj.dl_forward((3, 2, 5, 4, 1, 6, 7))[:2] != ("UUDDUD", "UUDUDD"):
        return False, "DL_3(3254167)"
    for k in range(k_max + 1):
        S = U(k, [bj.P312])
        if any(bj.dl_inverse(bj.dl_forward(p)) != p for p in S):
            return False, f"inverse after forward, k={k}"
        if any(bj.dl_forward(bj.dl_inverse(iv))[:2] != iv[:2] for iv in dyck.intervals(k, "stanley")):
            return False, f"forward after inverse, k={k}"
    return True, f"k <= {k_max}"


def _tamari_image(K: int) -> tuple[bool, str]:
    k_max = min(K, 4)
    for k in range(k_max + 1):
        img = {bj.dl_forward(p)[:2] for p in U(k, [bj.P312]) if is_sorted(swr(p))}
        want = {iv[:2] for iv in dyck.intervals(k, "tamari")}
        if img != want or len(want) != formulas.closed_form("eq2_tamari", k):
            return False, f"k={k}"
        timg = {bj.tamari_forward(p)[:2] for p in U(k, [bj.P132])}
        if timg != want:
            return False, f"tamari_forward image, k={k}"
    lo, hi, _ = bj.tamari_forward(swu((2, 1, 5, 4, 3, 6, 7)))
    if (lo, hi) != ("UUDDUD", "UUUDDD") or dyck.leq(lo, hi, "pallo") or not dyck.leq(lo, hi, "tamari"):
        return False, "pinned 2154367 value"
    return True, f"k <= {k_max}"


def _swu_between_classes(K: int) -> tuple[bool, str]:
    k_max = min(K, 5)
    for k in range(k_max + 1):
        A, B = U(k, [bj.P231]), U(k, [bj.P132])
        if sorted(swu(p) for p in A) != B or sorted(swd(q) for q in B) != A:
            return False, f"k={k}"
    return True, f"k <= {k_max}"


def _upsilon(K: int) -> tuple[bool, str]:
    k_max = min(K, 4)
    for k in range(k_max + 1):
        S = U(k, gentree.CLASS_PATTERNS)
        tree = [bj.upsilon_tree(p) for p in S]
        if len(set(tree)) != len(S) or set(tree) != set(noncross.intervals_pairwise(k)):
            return False, f"tree map not onto Int(NC_{k})"
        for p, iv in zip(S, tree):
            if k:
                groups = gentree.hook_groups(p)
                top, low = noncross.label_structure(iv)
                if len(groups) != len(top) or [len(g) for g in groups] != [len(g) for g in low]:
                    return False, f"hook/block structure differs at {p}"
            if bj.upsilon_tree_inverse(iv) != p:
                return False, f"inverse fails at {p}"
    return True, f"k <= {k_max}"


def _upsilon_agree(K: int) -> tuple[bool, str]:
    k_max = min(K, 4)
    bad = [
        p
        for k in range(k_max + 1)
        for p in U(k, gentree.CLASS_PATTERNS)
        if bj.upsilon_direct(p) != bj.upsilon_tree(p)
    ]
    if bad:
        return False, f"{len(bad)} disagreements, first {bad[0]}"
    return True, f"k <= {k_max}"


def _pallo(K: int) -> tuple[bool, str]:
    k_max = min(K, 5)
    for k in range(1, k_max + 1):
        for p in U(k, [bj.P231, bj.P4132]):
            parts = bj.pallo_decompose(p)
            if bj.pallo_recompose(parts) != p:
                return False, f"{p}"
            if parts.nice and not is_uniquely_sorted(parts.second):
                return False, f"tau of {p}"
    return True, f"k <= {k_max}"


def _antichain(K: int) -> tuple[bool, str]:
    k_max = min(K, 6)
    for k in range(k_max + 1):
        C = formulas.catalan(k)
        S = U(k, [bj.P321])
        pf = [bj.parking_bijection(p) for p in S]
        if len(S) != C or len(set(pf)) != C or any(bj.parking_inverse(a) != p for a, p in zip(pf, S)):
            return False, f"parking, k={k}"
        if any(descents(p) != frozenset(range(1, 2 * k, 2)) for p in S):
            return False, f"descent set, k={k}"
        paths = set(dyck.enumerate_paths(k))
        for which, (pats, _) in bj.ANTICHAIN_MAPS.items():
            T = U(k, pats)
            img = [bj.antichain_map(p, which) for p in T]
            if len(T) != C or {iv.lower for iv in img} != paths or any(iv.lower != iv.upper for iv in img):
                return False, f"{which}, k={k}"
    return True, f"k <= {k_max}"


def _singletons(K: int) -> tuple[bool, str]:
    k_max = min(K, 5)
    for k in range(2, k_max + 1):
        zig = tuple(x for i in range(1, k + 1) for x in (2 * i, 2 * i - 1)) + (2 * k + 1,)
        layer = tuple(range(k + 1, 0, -1)) + tuple(range(k + 2, 2 * k + 2))
        for pats in ([bj.P231, bj.P321], [(3, 1, 2), bj.P321], [bj.P231, (3, 1, 2), bj.P321]):
            if U(k, pats) != [zig]:
                return False, f"{pats}, k={k}"
        if U(k, [bj.P132, bj.P231, (3, 1, 2)]) != [layer]:
            return False, f"132,231,312 at k={k}"
        if U(k, [bj.P132, bj.P321]):
            return False, f"132,321 nonempty at k={k}"
    return True, f"2 <= k <= {k_max}"


# ---------------------------------------------------------------------------
# sequences


def _class_formula(pats, tag: str, cap: int) -> Callable[[int], tuple[bool, str]]:
    def run(K: int) -> tuple[bool, str]:
        k_max = min(K, cap)
        for rec in sequences.compute_sequence(pats, k_max, limit=k_max):
            want = formulas.closed_form(tag, rec.k)
            if rec.count != want:
                return False, f"k={rec.k}: {rec.count} vs {want}"
        return True, f"k <= {k_max}"

    return run


def _pallo_series(K: int) -> tuple[bool, str]:
    k_max = min(K, 6)
    got = [r.count for r in sequences.compute_sequence("231;4132", k_max, limit=k_max)]
    want = formulas.series_coefficients("C_of_xC", k_max)
    res = formulas.eq16_residual(13)
    return got == want and not any(res), f"k <= {k_max}: {got}"


def _a307346(K: int) -> tuple[bool, str]:
    k_max = min(K, 5)
    got = [r.count for r in sequences.compute_sequence(sequences.A307346_CLASS, k_max)]
    return got == list(sequences.A307346_PRINTED[: k_max + 1]), f"k <= {k_max}: {got}"


def _reference(K: int) -> tuple[bool, str]:
    k_max = min(K, 4)
    drift = sequences.reference_drift(k_max)
    if not sequences.load_reference():
        return False, "reference file missing"
    return not drift, f"k <= {k_max}" + (f"; {drift[0]}" if drift else "")


CHECKS: dict[str, list[tuple[str, Callable[[int], tuple[bool, str]]]]] = {
    "lemmas": [
        ("stack pass equals recursive stack-sorting", _stack_sort_oracle),
        ("fertility 1 iff uniquely sorted, >=1 iff hook configuration", _fertility_characterization),
        ("indexed swu equals recursive swu", _swu_recursive),
        ("swd is swu conjugated by reversal", _slide_conjugates),
        ("decreasing-then-increasing word is Dyck iff uniquely sorted", _lemma9),
        ("cell-matrix solver meets (i)-(iv) with falling energy", _lemma3_moves),
        ("generating-tree child labels are 3..label+2", _tree_labels),
        ("skyline starts conjoined and ends nonconjoined", _skyline_ends),
    ],
    "posets": [
        ("stanley interval count", _poset_counts("stanley")),
        ("tamari interval count", _poset_counts("tamari")),
        ("pallo interval count", _poset_counts("pallo")),
        ("antichain interval count", _poset_counts("antichain")),
        ("noncrossing interval count, scan and tree", _kreweras_counts),
        ("pallo => tamari => stanley", _extension_chain),
        ("each order is a partial order", _partial_orders),
    ],
    "bijections": [
        ("DL roundtrip on U(312) and Stanley intervals", _dl_roundtrip),
        ("DL image of swr-sorted U(312) is Int(Tamari)", _tamari_image),
        ("swu: U(231) -> U(132) with inverse swd", _swu_between_classes),
        ("tree map U(312,1342) -> Int(NC) is bijective", _upsilon),
        ("direct and tree maps to Int(NC) agree", _upsilon_agree),
        ("U(231,4132) decomposition roundtrip", _pallo),
        ("antichain classes and their bijections", _antichain),
        ("singleton and empty classes", _singletons),
    ],
    "sequences": [
        ("|U(312)| = C_k C_{k+2} - C_{k+1}^2", _class_formula("312", "eq1_stanley", 6)),
        ("|U(132)| = tamari interval count", _class_formula("132", "eq2_tamari", 5)),
        ("|U(231)| = tamari interval count", _class_formula("231", "eq2_tamari", 5)),
        ("|U(312,1342)| = 3-Catalan", _class_formula("312;1342", "eq3_kreweras", 6)),
        ("|U(231,4132)| = [x^k] C(xC(x)) and series identity", _pallo_series),
        ("|U(231,4123)| printed prefix", _a307346),
        ("saved reference table", _reference),
    ],
}


def verify(suite: str = "all", max_k: int = 4) -> list[Check]:
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES + ('all',)}")
    out = []
    for s in names:
        for name, fn in CHECKS[s]:
            t0 = time.perf_counter()
            try:
                ok, detail = fn(max_k)
            except Exception as exc:  # report, don't abort the suite
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            out.append(Check(s, name, bool(ok), detail, time.perf_counter() - t0))
    return out
