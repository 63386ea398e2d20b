"""Dense univariate polynomials with exact coefficients.

A polynomial is a list of coefficients indexed by degree.  Integer
coefficients (``IntPoly``) and ``Fraction`` coefficients (``RationalPoly``)
share the same helpers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence, Union

IntPoly = List[int]
RationalPoly = List[Fraction]
Coeff = Union[int, Fraction]


def trim(p: Sequence[Coeff]) -> list:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [0]


def add(a: Sequence[Coeff], b: Sequence[Coeff]) -> list:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def scale(p: Sequence[Coeff], c: Coeff) -> list:
    return trim([c * x for x in p])


def mul(a: Sequence[Coeff], b: Sequence[Coeff]) -> list:
    """Schoolbook convolution."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def _int_pow(p: IntPoly, e: int) -> IntPoly:
    result: IntPoly = [1]
    base = p
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def poly_pow(p: Sequence[Coeff], e: int) -> list:
    """``p**e`` by binary exponentiation.

    Rational input is cleared of denominators first so every convolution runs
    on Python ints; the common denominator is divided out once at the end.
    """
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    p = trim(p)
    if all(isinstance(x, int) for x in p):
        return _int_pow(p, e)
    p = [Fraction(x) for x in p]
    den = math.lcm(*(x.denominator for x in p))
    ip = [int(x * den) for x in p]
    big = den**e
    return [Fraction(c, big) for c in _int_pow(ip, e)]


def evaluate(p: Sequence, x):
    """Horner evaluation; works for ints, Fractions and mpmath numbers."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def substitute_scale(p: Sequence[Coeff], s: Coeff) -> list:
    """Coefficients of ``p(s*x)``."""
    out = []
    sk = 1
    for c in p:
        out.append(c * sk)
        sk *= s
    return trim(out)
