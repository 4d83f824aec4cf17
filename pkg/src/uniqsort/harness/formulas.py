"""Closed-form counts and truncated integer power series."""

from __future__ import annotations

from math import comb
from typing import Sequence

FORMULAS = ("eq1_stanley", "eq2_tamari", "eq3_kreweras", "eq15_pallo_series", "catalan")
SERIES = ("C", "C_of_xC")

Series = list[int]


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, f"inexact division {num} / {den}"
    return q


def catalan(k: int) -> int:
    return _exact_div(comb(2 * k, k), k + 1)


def closed_form(tag: str, k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if tag == "catalan":
        return catalan(k)
    if tag == "eq1_stanley":
        return catalan(k) * catalan(k + 2) - catalan(k + 1) ** 2
    if tag == "eq2_tamari":
        return _exact_div(2 * comb(4 * k + 1, k + 1), (3 * k + 1) * (3 * k + 2))
    if tag == "eq3_kreweras":
        return _exact_div(comb(3 * k, k), 2 * k + 1)
    if tag == "eq15_pallo_series":
        return series_coefficients("C_of_xC", k)[k]
    raise ValueError(f"unknown formula {tag!r}; expected one of {FORMULAS}")


def mul(a: Sequence[int], b: Sequence[int], order: int) -> Series:
    """Product truncated after x^order."""
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def add(*terms: Sequence[int]) -> Series:
    n = max(len(t) for t in terms)
    return [sum(t[i] for t in terms if i < len(t)) for i in range(n)]


def compose(f: Sequence[int], g: Sequence[int], order: int) -> Series:
    """f(g(x)) for g with zero constant term, by Horner's rule."""
    if g and g[0]:
        raise ValueError("inner series must have zero constant term")
    out = [0] * (order + 1)
    for c in reversed(list(f[: order + 1])):
        out = mul(out, g, order)
        out[0] += c
    return out


def substitute_square(f: Sequence[int], order: int) -> Series:
    """f(x^2) truncated after x^order."""
    out = [0] * (order + 1)
    for i, c in enumerate(f):
        if 2 * i <= order:
            out[2 * i] = c
    return out


def shift(f: Sequence[int], by: int = 1) -> Series:
    """x^by * f(x)."""
    return [0] * by + list(f)


def series_coefficients(which: str, order: int) -> Series:
    """Coefficients of x^0..x^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [catalan(i) for i in range(order + 1)]
    if which == "C":
        return c
    if which == "C_of_xC":
        return compose(c, shift(c)[: order + 1], order)
    raise ValueError(f"unknown series {which!r}; expected one of {SERIES}")


def eq16_residual(order: int = 13) -> Series:
    """x + x C(x^2) B(x)^2 - B(x) with B(x) = x * C(x^2 C(x^2))."""
    inner = series_coefficients("C_of_xC", order)
    b = shift(substitute_square(inner, order))[: order + 1]
    c2 = substitute_square(series_coefficients("C", order), order)
    rhs = add([0, 1], shift(mul(c2, mul(b, b, order), order))[: order + 1])
    return [x - y for x, y in zip(add(rhs, [0] * (order + 1)), b)][: order + 1]
