"""Exact integer arithmetic: factorials as prime-exponent vectors, integer
factorization, and smoothness tests.

Ratios of factorials are never evaluated through division.  Prime exponents
are accumulated with Legendre's formula and a result is converted to an
integer only at the end; a negative exponent at that point raises
:class:`NotAnInteger` instead of silently rounding.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

_TRIAL_LIMIT = 10**6
_PRIME_CHECK_STRIDE = 2048

# Deterministic Miller-Rabin witness set below 3.3 * 10**24 (covers 2**64).
_MR_BASES_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_BASES_WIDE = _MR_BASES_SMALL + (
    41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
)
_MR_SMALL_BOUND = 3317044064679887385961981

_sieve_primes: list[int] = []
_sieve_limit = 0


class NotAnInteger(ValueError):
    """A quantity expected to be a whole number is not."""


def _extend_sieve(limit: int) -> None:
    global _sieve_primes, _sieve_limit
    if limit <= _sieve_limit:
        return
    limit = max(limit, 1 << 16)
    mask = bytearray([1]) * (limit + 1)
    mask[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    _sieve_primes = [i for i, flag in enumerate(mask) if flag]
    _sieve_limit = limit


def primes_up_to(n: int) -> list[int]:
    """Primes ``<= n``, cached."""
    _extend_sieve(n)
    return _sieve_primes[: bisect.bisect_right(_sieve_primes, n)]


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic for ``n < 3.3e24`` (in particular below 2**64); above that
    the fixed wide witness set makes the verdict probabilistic with error
    probability far below 4**-40.
    """
    if n < 2:
        return False
    for p in _MR_BASES_SMALL:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    bases = _MR_BASES_SMALL if n < _MR_SMALL_BOUND else _MR_BASES_WIDE
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    # Brent's cycle variant of Pollard rho; n must be odd and composite.
    # The polynomial increment walks a fixed sequence, so results are
    # reproducible run to run.
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += 128
                g = math.gcd(q, n)
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"could not split {n}")


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``value = prod(p**e)`` with primes increasing."""

    pairs: tuple[tuple[int, int], ...] = ()

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.pairs)

    @property
    def largest_prime(self) -> int:
        """Largest prime factor; 1 for the empty factorization of 1."""
        return self.pairs[-1][0] if self.pairs else 1

    def __iter__(self):
        return iter(self.pairs)

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return " * ".join(
            f"{p}^{e}" if e > 1 else str(p) for p, e in self.pairs
        )


def factorize(v: int) -> Factorization:
    """Full prime factorization of a positive integer.

    Trial division by all primes below 10**6 (with periodic primality
    checks on the remaining cofactor so large primes exit early), then
    Pollard rho splitting for anything left.
    """
    if v < 1:
        raise ValueError(f"can only factor positive integers, got {v}")
    n = v
    found: dict[int, int] = {}
    if n > 1:
        _extend_sieve(_TRIAL_LIMIT)
        for idx, p in enumerate(_sieve_primes):
            if n == 1 or p * p > n:
                break
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                found[p] = e
                if is_probable_prime(n):
                    break
            elif idx % _PRIME_CHECK_STRIDE == _PRIME_CHECK_STRIDE - 1:
                if is_probable_prime(n):
                    break
    pending = [n] if n > 1 else []
    while pending:
        x = pending.pop()
        if is_probable_prime(x):
            found[x] = found.get(x, 0) + 1
        else:
            d = _brent_rho(x)
            pending.append(d)
            pending.append(x // d)
    return Factorization(tuple(sorted(found.items())))


def is_smooth(v: int, bound: int) -> bool:
    """True when every prime factor of ``v`` is at most ``bound``."""
    if v < 1:
        raise ValueError(f"smoothness is defined for positive integers, got {v}")
    return factorize(v).largest_prime <= bound


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial needs nonnegative n, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def superfactorial(m: int) -> int:
    """Product ``0! * 1! * ... * (m-1)!``."""
    if m < 0:
        raise ValueError(f"superfactorial needs nonnegative m, got {m}")
    return math.prod(math.factorial(i) for i in range(m))


def _legendre(n: int, p: int) -> int:
    e = 0
    while n:
        n //= p
        e += n
    return e


def _merge(
    acc: dict[int, int], pairs: Iterable[tuple[int, int]], scale: int
) -> None:
    for p, e in pairs:
        acc[p] = acc.get(p, 0) + scale * e


@dataclass(frozen=True)
class FactoredRatio:
    """Nonzero rational number as a sparse prime -> exponent map plus sign.

    ``factors`` holds (prime, exponent) pairs with primes increasing and
    exponents nonzero; negative exponents are denominator primes.
    """

    factors: tuple[tuple[int, int], ...] = ()
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def one(cls) -> "FactoredRatio":
        return cls()

    @classmethod
    def from_integer(cls, k: int) -> "FactoredRatio":
        if k == 0:
            raise ValueError("zero has no factored form")
        return cls(factorize(abs(k)).pairs, 1 if k > 0 else -1)

    def _with(self, acc: dict[int, int], sign: int) -> "FactoredRatio":
        return FactoredRatio(
            tuple(sorted((p, e) for p, e in acc.items() if e != 0)), sign
        )

    def __mul__(self, other: "FactoredRatio") -> "FactoredRatio":
        acc = dict(self.factors)
        _merge(acc, other.factors, 1)
        return self._with(acc, self.sign * other.sign)

    def __truediv__(self, other: "FactoredRatio") -> "FactoredRatio":
        acc = dict(self.factors)
        _merge(acc, other.factors, -1)
        return self._with(acc, self.sign * other.sign)

    def __pow__(self, e: int) -> "FactoredRatio":
        if e < 0:
            raise ValueError("negative powers are not needed; divide instead")
        return FactoredRatio(
            tuple((p, x * e) for p, x in self.factors),
            self.sign if e % 2 else 1,
        )

    def times(self, *ints: int) -> "FactoredRatio":
        out = self
        for k in ints:
            out = out * FactoredRatio.from_integer(k)
        return out

    def over(self, *ints: int) -> "FactoredRatio":
        out = self
        for k in ints:
            out = out / FactoredRatio.from_integer(k)
        return out

    @property
    def is_integral(self) -> bool:
        return self.sign > 0 and all(e >= 0 for _, e in self.factors)

    def to_integer(self) -> int:
        """The integer this ratio equals; :class:`NotAnInteger` otherwise."""
        if self.sign < 0:
            raise NotAnInteger(f"{self} is negative")
        for p, e in self.factors:
            if e < 0:
                raise NotAnInteger(f"prime {p} has exponent {e}")
        return math.prod(p**e for p, e in self.factors)

    def to_fraction(self) -> Fraction:
        num = math.prod(p**e for p, e in self.factors if e > 0)
        den = math.prod(p**-e for p, e in self.factors if e < 0)
        return Fraction(self.sign * num, den)

    def factorization(self) -> Factorization:
        """Factorization view of an integral ratio, with exponent checks."""
        self.to_integer()
        return Factorization(self.factors)

    def __str__(self) -> str:
        body = str(Factorization(tuple((p, abs(e)) for p, e in self.factors if e > 0)))
        den = tuple((p, -e) for p, e in self.factors if e < 0)
        if den:
            body += " / " + str(Factorization(den))
        return ("-" if self.sign < 0 else "") + body


def factorial_ratio(
    numerators: Sequence[int], denominators: Sequence[int]
) -> FactoredRatio:
    """``prod(a!) / prod(b!)`` as a :class:`FactoredRatio`.

    Exponents come from Legendre's formula applied per prime, so no big
    factorial is ever multiplied out.
    """
    nums = [int(a) for a in numerators]
    dens = [int(b) for b in denominators]
    if any(a < 0 for a in nums + dens):
        raise ValueError("factorials of negative integers are undefined")
    top = max(nums + dens, default=0)
    acc: dict[int, int] = {}
    for p in primes_up_to(top):
        e = sum(_legendre(a, p) for a in nums) - sum(_legendre(b, p) for b in dens)
        if e:
            acc[p] = e
    return FactoredRatio(tuple(sorted(acc.items())), 1)


def binomial_ratio(n: int, k: int) -> FactoredRatio:
    """``n! / (k! (n-k)!)`` for ``0 <= k <= n``."""
    if not 0 <= k <= n:
        raise ValueError(f"binomial_ratio needs 0 <= k <= n, got n={n}, k={k}")
    return factorial_ratio([n], [k, n - k])


def superfactorial_ratio(m: int) -> FactoredRatio:
    """``0! * 1! * ... * (m-1)!`` as a factored ratio."""
    if m < 0:
        raise ValueError(f"superfactorial needs nonnegative m, got {m}")
    return factorial_ratio(list(range(m)), [])
