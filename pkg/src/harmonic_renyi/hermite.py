"""Physicists' Hermite and generalized Laguerre polynomials."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from .exactnum import as_fraction
from .poly import IntPoly, RationalPoly


@lru_cache(maxsize=None)
def _hermite_table(n: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,), (0, 2)]
    for k in range(1, n):
        prev, cur = rows[k - 1], rows[k]
        nxt = [0] * (k + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] += 2 * c
        for i, c in enumerate(prev):
            nxt[i] -= 2 * k * c
        rows.append(tuple(nxt))
    return tuple(rows[: n + 1])


def hermite_coeffs(n: int) -> IntPoly:
    """Coefficients of H_n from H_{k+1} = 2x H_k - 2k H_{k-1}."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return list(_hermite_table(max(n, 1))[n])


def laguerre_coeffs(m: int, a) -> RationalPoly:
    """L_m^{(a)}(x) = sum_j (-1)^j binom(m+a, m-j) x^j / j!."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    a = as_fraction(a)
    out = []
    for j in range(m + 1):
        # binom(m+a, m-j) = prod_{i=1}^{m-j} (a + j + i) / (m-j)!
        b = Fraction(1)
        for i in range(1, m - j + 1):
            b *= a + j + i
        b /= math.factorial(m - j)
        out.append((-1) ** j * b / math.factorial(j))
    return out


def parity(n: int) -> int:
    """0 for even n, 1 for odd n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n & 1


def hermite_eval(n: int, x):
    """(H_n(x), H_{n-1}(x)) by the three-term recurrence."""
    if n == 0:
        return x * 0 + 1, x * 0
    h_prev, h = x * 0 + 1, 2 * x
    for k in range(1, n):
        h_prev, h = h, 2 * x * h - 2 * k * h_prev
    return h, h_prev


def _refine(n: int, lo, hi, eps):
    # safeguarded Newton inside a bracket holding exactly one simple root
    f_lo, _ = hermite_eval(n, lo)
    x = (lo + hi) / 2
    for _ in range(400):
        f, f_prev = hermite_eval(n, x)
        if f == 0:
            return x
        if (f < 0) == (f_lo < 0):
            lo, f_lo = x, f
        else:
            hi = x
        step = f / (2 * n * f_prev)
        nx = x - step
        if not (lo < nx < hi):
            nx = (lo + hi) / 2
            step = x - nx
        x = nx
        if abs(step) < eps or hi - lo < eps:
            return x
    raise RuntimeError("Hermite root iteration did not converge")


@lru_cache(maxsize=64)
def _positive_roots(n: int, dps: int) -> tuple:
    pos: list = []
    for k in range(1, n + 1):
        # intermediate degrees only supply brackets; 20 digits separate them
        work = dps + 10 if k == n else 20
        with mp.workdps(work):
            eps = mp.mpf(10) ** (5 - work)
            # zeros of H_k interlace those of H_{k-1}; all lie below sqrt(2k+1)
            edges = ([mp.mpf(0)] if k % 2 == 0 else []) + pos + [mp.sqrt(2 * k + 1)]
            pos = [_refine(k, edges[i], edges[i + 1], eps) for i in range(len(edges) - 1)]
    return tuple(pos)


def hermite_roots(n: int, dps: int = 50) -> list:
    """The n real zeros of H_n, increasing, to ``dps`` significant digits."""
    if n < 1:
        raise ValueError("n must be positive")
    pos = _positive_roots(n, dps)
    with mp.workdps(dps):
        pos = [+r for r in pos]
        mid = [mp.mpf(0)] if n % 2 else []
        return [-r for r in reversed(pos)] + mid + pos
