"""Exact rational bookkeeping for closed-form entropies.

Rationals are plain :class:`fractions.Fraction` values.  Two composite types
sit on top of them:

``ScaledRational``
    ``coeff * prod(p**e_p) * pi**pi_exp * alpha**alpha_exp`` where the ``p``
    are primes carrying fractional exponents ``0 < e_p < 1``.  Integer parts of
    prime exponents are always folded into ``coeff``, so two equal values have
    identical fields.

``ExactLogSum``
    ``sum(w * log(b)) + pi_weight * log(pi) + alpha_weight * log(alpha)`` with
    integer bases ``b > 1`` and nonzero weights.  Rational arguments are split
    into numerator and denominator and primes below 1000 are pulled out; any
    larger cofactor is kept whole as a base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

import mpmath as mp

Number = Union[int, Fraction]

GUARD_DIGITS = 20
_TRIAL_LIMIT = 100_000
_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % d for d in range(2, int(p**0.5) + 1))]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def pochhammer(z: Number, k: int) -> Fraction:
    """Rising factorial ``z (z+1) ... (z+k-1)``; 1 for ``k == 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    z = as_fraction(z)
    # work on numerator/denominator separately; one reduction at the end
    num, den = z.numerator, z.denominator
    acc = 1
    for i in range(k):
        acc *= num + i * den
        if acc == 0:
            return Fraction(0)
    return Fraction(acc, den**k)


def _factor_int(n: int) -> dict[int, int]:
    """Prime factorisation of ``n >= 1`` by trial division.

    Raises ValueError when a cofactor is left that trial division up to
    ``_TRIAL_LIMIT`` cannot certify as prime.
    """
    out: dict[int, int] = {}
    p = 2
    while p * p <= n and p <= _TRIAL_LIMIT:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        if n > _TRIAL_LIMIT * _TRIAL_LIMIT:
            raise ValueError("rational too large to factor for a fractional power")
        out[n] = out.get(n, 0) + 1
    return out


def _split_small(n: int) -> list[tuple[int, int]]:
    """Small prime powers of ``n`` plus the remaining cofactor (if > 1)."""
    out = []
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return out


def factor_rational(r: Fraction) -> dict[int, int]:
    """Signed prime exponents of a positive rational."""
    if r <= 0:
        raise ValueError("factor_rational needs a positive rational")
    out = _factor_int(r.numerator)
    for p, e in _factor_int(r.denominator).items():
        out[p] = out.get(p, 0) - e
    return out


@dataclass(frozen=True)
class ScaledRational:
    """``coeff * radicals * pi**pi_exp * alpha**alpha_exp`` in canonical form.

    Use :meth:`make` (or the arithmetic operators) rather than the raw
    constructor so the radical part is normalised.
    """

    coeff: Fraction
    pi_exp: Fraction = Fraction(0)
    alpha_exp: Fraction = Fraction(0)
    radicals: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def make(
        cls,
        coeff: Number,
        pi_exp: Number = 0,
        alpha_exp: Number = 0,
        radicals: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]] = (),
    ) -> "ScaledRational":
        coeff = as_fraction(coeff)
        if coeff == 0:
            return cls(Fraction(0))
        rad = dict(radicals)
        kept = []
        for p in sorted(rad):
            e = Fraction(rad[p])
            whole = math.floor(e)
            if whole:
                coeff *= Fraction(p) ** whole
                e -= whole
            if e:
                kept.append((p, e))
        return cls(coeff, as_fraction(pi_exp), as_fraction(alpha_exp), tuple(kept))

    @classmethod
    def one(cls) -> "ScaledRational":
        return cls(Fraction(1))

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other) -> "ScaledRational":
        if not isinstance(other, ScaledRational):
            other = ScaledRational.make(other)
        if self.is_zero() or other.is_zero():
            return ScaledRational(Fraction(0))
        rad = dict(self.radicals)
        for p, e in other.radicals:
            rad[p] = rad.get(p, 0) + e
        return ScaledRational.make(
            self.coeff * other.coeff,
            self.pi_exp + other.pi_exp,
            self.alpha_exp + other.alpha_exp,
            rad,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ScaledRational":
        if not isinstance(other, ScaledRational):
            other = ScaledRational.make(other)
        return self * other ** -1

    def __rtruediv__(self, other) -> "ScaledRational":
        return ScaledRational.make(other) * self ** -1

    def __neg__(self) -> "ScaledRational":
        return ScaledRational(-self.coeff, self.pi_exp, self.alpha_exp, self.radicals)

    def __pow__(self, e) -> "ScaledRational":
        e = as_fraction(e)
        if self.is_zero():
            if e <= 0:
                raise ZeroDivisionError("zero to a nonpositive power")
            return self
        rad: dict[int, Fraction] = {p: x * e for p, x in self.radicals}
        if e.denominator == 1:
            coeff = self.coeff ** int(e)
        else:
            if self.coeff < 0:
                raise ValueError("fractional power of a negative value")
            coeff = Fraction(1)
            for p, v in factor_rational(self.coeff).items():
                rad[p] = rad.get(p, 0) + v * e
        return ScaledRational.make(coeff, self.pi_exp * e, self.alpha_exp * e, rad)

    def at_alpha(self, alpha) -> "ScaledRational":
        """Substitute a rational oscillator parameter for the symbol alpha."""
        alpha = as_fraction(alpha)
        if alpha <= 0:
            raise ValueError("alpha must be positive")
        free = ScaledRational(self.coeff, self.pi_exp, Fraction(0), self.radicals)
        return free * ScaledRational.make(alpha) ** self.alpha_exp

    def evaluate(self, alpha=None):
        """Numeric value at the current mpmath precision."""
        val = mp.mpf(self.coeff.numerator) / self.coeff.denominator
        for p, e in self.radicals:
            val *= mp.power(p, mp.mpf(e.numerator) / e.denominator)
        if self.pi_exp:
            val *= mp.power(mp.pi, _mpf(self.pi_exp))
        if self.alpha_exp:
            val *= mp.power(_alpha_mpf(alpha), _mpf(self.alpha_exp))
        return val

    def __str__(self) -> str:
        parts = [str(self.coeff)]
        parts += [f"{p}^({e})" for p, e in self.radicals]
        if self.pi_exp:
            parts.append(f"π^({self.pi_exp})")
        if self.alpha_exp:
            parts.append(f"α^({self.alpha_exp})")
        return "·".join(parts)


def gamma_half(k: int) -> ScaledRational:
    """Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return ScaledRational.make(
        Fraction(math.factorial(2 * k), 4**k * math.factorial(k)), pi_exp=Fraction(1, 2)
    )


def half_pochhammer(n: int) -> ScaledRational:
    """((n+1)/2)_{1/2} = Gamma(n/2 + 1) / Gamma((n+1)/2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    m, odd = divmod(n, 2)
    if odd:
        return gamma_half(m + 1) / math.factorial(m)
    return ScaledRational.make(math.factorial(m)) / gamma_half(m)


def _mpf(r: Fraction):
    return mp.mpf(r.numerator) / r.denominator


def _alpha_mpf(alpha):
    if alpha is None:
        raise ValueError("value depends on alpha; pass alpha")
    if isinstance(alpha, (Fraction, int)):
        a = _mpf(Fraction(alpha))
    else:
        a = mp.mpf(alpha)
    if a <= 0:
        raise ValueError("alpha must be positive")
    return a


def _weight_str(w: Fraction) -> str:
    return str(w) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


@dataclass(frozen=True)
class ExactLogSum:
    """Canonical ``sum(w log b) + pi_weight log pi + alpha_weight log alpha``.

    ``terms`` holds ``(base, weight)`` pairs sorted by base; bases are ints.
    """

    terms: tuple[tuple[Fraction, Fraction], ...] = ()
    pi_weight: Fraction = Fraction(0)
    alpha_weight: Fraction = Fraction(0)

    @classmethod
    def make(cls, terms=(), pi_weight: Number = 0, alpha_weight: Number = 0) -> "ExactLogSum":
        acc: dict[Fraction, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for base, weight in items:
            base, weight = as_fraction(base), as_fraction(weight)
            if base <= 0:
                raise ValueError("logarithm of a nonpositive rational")
            if weight == 0:
                continue
            for part, sign in ((base.numerator, 1), (base.denominator, -1)):
                for b, e in _split_small(part):
                    acc[b] = acc.get(b, Fraction(0)) + sign * e * weight
        canon = tuple((Fraction(b), w) for b, w in sorted(acc.items()) if w != 0)
        return cls(canon, as_fraction(pi_weight), as_fraction(alpha_weight))

    @classmethod
    def zero(cls) -> "ExactLogSum":
        return cls()

    @classmethod
    def log(cls, r: Number) -> "ExactLogSum":
        return cls.make([(r, 1)])

    @classmethod
    def log_pi(cls) -> "ExactLogSum":
        return cls((), Fraction(1), Fraction(0))

    @classmethod
    def log_alpha(cls) -> "ExactLogSum":
        return cls((), Fraction(0), Fraction(1))

    @classmethod
    def log_scaled(cls, v: ScaledRational) -> "ExactLogSum":
        """Logarithm of a positive ScaledRational."""
        if v.coeff <= 0:
            raise ValueError("logarithm of a nonpositive value")
        terms = [(v.coeff, Fraction(1))] + [(Fraction(p), e) for p, e in v.radicals]
        return cls.make(terms, v.pi_exp, v.alpha_exp)

    def is_zero(self) -> bool:
        return not self.terms and self.pi_weight == 0 and self.alpha_weight == 0

    def __add__(self, other: "ExactLogSum") -> "ExactLogSum":
        if not isinstance(other, ExactLogSum):
            return NotImplemented
        return ExactLogSum.make(
            self.terms + other.terms,
            self.pi_weight + other.pi_weight,
            self.alpha_weight + other.alpha_weight,
        )

    def __neg__(self) -> "ExactLogSum":
        return self * -1

    def __sub__(self, other: "ExactLogSum") -> "ExactLogSum":
        return self + (-other)

    def __mul__(self, w) -> "ExactLogSum":
        w = as_fraction(w)
        if w == 0:
            return ExactLogSum()
        return ExactLogSum(
            tuple((b, x * w) for b, x in self.terms),
            self.pi_weight * w,
            self.alpha_weight * w,
        )

    __rmul__ = __mul__

    def at_alpha(self, alpha) -> "ExactLogSum":
        """Fold ``alpha_weight * log(alpha)`` into the rational terms."""
        alpha = as_fraction(alpha)
        if alpha <= 0:
            raise ValueError("alpha must be positive")
        return ExactLogSum.make(self.terms + ((alpha, self.alpha_weight),), self.pi_weight, 0)

    def exp(self) -> ScaledRational:
        """``exp`` of the sum as a ScaledRational.

        Bases with non-integer weight must be factorable by trial division.
        """
        out = ScaledRational.make(1, self.pi_weight, self.alpha_weight)
        for b, w in self.terms:
            out = out * ScaledRational.make(b) ** w
        return out

    def evaluate(self, alpha=None):
        val = mp.mpf(0)
        for b, w in self.terms:
            val += _mpf(w) * (mp.log(b.numerator) - mp.log(b.denominator))
        if self.pi_weight:
            val += _mpf(self.pi_weight) * mp.log(mp.pi)
        if self.alpha_weight:
            val += _mpf(self.alpha_weight) * mp.log(_alpha_mpf(alpha))
        return val

    def render(self) -> str:
        """Canonical text form: alpha term first, bases ascending, pi last."""
        pieces: list[tuple[Fraction, str]] = []
        if self.alpha_weight:
            pieces.append((self.alpha_weight, "log(α)"))
        pieces += [(w, f"log({b})") for b, w in self.terms]
        if self.pi_weight:
            pieces.append((self.pi_weight, "log(π)"))
        if not pieces:
            return "0"
        out = ""
        for i, (w, s) in enumerate(pieces):
            mag = abs(w)
            body = s if mag == 1 else f"{_weight_str(mag)}·{s}"
            if i == 0:
                out = body if w > 0 else f"-{body}"
            else:
                out += f" + {body}" if w > 0 else f" - {body}"
        return out

    def __str__(self) -> str:
        return self.render()


def format_digits(x, digits: int) -> str:
    """Fixed-point decimal string with ``digits`` significant digits."""
    if x == 0:
        return "0." + "0" * digits
    if mp.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = mp.nstr(x, digits, strip_zeros=False, min_fixed=-mp.inf, max_fixed=mp.inf)
    return s.rstrip(".")


def logsum_eval(v: ExactLogSum, alpha, digits: int) -> str:
    """Evaluate ``v`` at ``alpha`` to ``digits`` significant digits."""
    if digits < 1:
        raise ValueError("digits must be positive")
    if alpha is not None:
        _alpha_mpf(alpha)
    with mp.workdps(digits + GUARD_DIGITS):
        return format_digits(v.evaluate(alpha), digits)


def logsum_add(a: ExactLogSum, b: ExactLogSum) -> ExactLogSum:
    return a + b


def logsum_scale(a: ExactLogSum, w: Number) -> ExactLogSum:
    return a * w
