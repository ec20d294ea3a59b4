"""Exact divisibility queries on explicit integers.

`vp_int` strips prime powers from arbitrary-precision values, `factorize`
handles machine-scale bases, and `omega` combines the two: the highest
power of a general base x dividing y is the minimum over primes p | x of
floor(v_p(y) / v_p(x)).  These are the oracle counterparts of the digit
kernels in `digits`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .digits import U64_MAX, is_prime, kummer_carries, _require_prime


class ZeroInputError(ValueError):
    """Raised when an operation requires a nonzero argument."""


class InvalidBaseError(ValueError):
    """Raised when a divisibility base is 0 or a unit."""


def _restore_infinite() -> "_InfiniteValuation":
    return INFINITE


class _InfiniteValuation:
    """Valuation of zero: compares above every integer.  Singleton."""

    __slots__ = ()

    def __reduce__(self):
        # Unpickling must hand back the singleton, or identity checks break
        # when reports cross process boundaries.
        return (_restore_infinite, ())

    def __repr__(self) -> str:
        return "INFINITE"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("valuata.INFINITE")

    def __lt__(self, other: object) -> bool:
        if isinstance(other, int) or other is self:
            return False
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if other is self:
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if isinstance(other, int) or other is self:
            return True
        return NotImplemented


INFINITE = _InfiniteValuation()

# Finite valuations are plain ints; only the valuation of 0 is INFINITE.
Valuation = Union[int, _InfiniteValuation]


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization: sign * product(p**e) reconstructs the input."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def vp_int(y: int, p: int) -> Valuation:
    """Exponent of the prime p in y (sign ignored); INFINITE for y = 0.

    Strips p, p**2, p**4, ... while they divide, so the cost stays close
    to linear in the bit length of y even for heavily divisible values.
    """
    _require_prime(p)
    if y == 0:
        return INFINITE
    y = abs(y)
    v = 0
    step, power = 1, p
    while True:
        q, r = divmod(y, power)
        if r == 0:
            y = q
            v += step
            step *= 2
            power *= power
        elif step == 1:
            return v
        else:
            step, power = 1, p


def _pollard_rho(n: int) -> int:
    """Nontrivial factor of an odd composite n (Brent's cycle variant).

    Deterministic: parameters are tried in a fixed order, so repeated runs
    factor identically.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # unreachable for n < 2**64


_TRIAL_LIMIT = 10**6


@lru_cache(maxsize=4096)
def factorize(x: int) -> Factorization:
    """Complete signed prime factorization of x, |x| at most 2**64 - 1.

    Trial division by 2, 3 and the 6k+-1 wheel up to 10**6, then rho
    splitting with deterministic primality certification of cofactors.
    """
    if x == 0:
        raise ZeroInputError("cannot factorize 0")
    sign = 1 if x > 0 else -1
    n = abs(x)
    if n > U64_MAX:
        raise ValueError(f"|x| exceeds the 64-bit base range: {x}")
    counts: dict[int, int] = {}

    def strip(d: int) -> None:
        nonlocal n
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d

    strip(2)
    strip(3)
    d = 5
    while d <= _TRIAL_LIMIT and d * d <= n:
        strip(d)
        strip(d + 2)
        d += 6
    if n > 1 and d * d > n:
        # Trial division ran past sqrt(n), so the cofactor is prime.
        counts[n] = counts.get(n, 0) + 1
    elif n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                counts[m] = counts.get(m, 0) + 1
            else:
                f = _pollard_rho(m)
                stack.append(f)
                stack.append(m // f)
    return Factorization(sign, tuple(sorted(counts.items())))


def omega(x: int, y: int) -> Valuation:
    """Highest k with x**k dividing y; INFINITE when y = 0.

    Signs are ignored on both arguments: divisibility by powers of a
    negative base only alternates sign.  x must not be 0 or a unit.
    """
    if x in (0, 1, -1):
        raise InvalidBaseError(f"base must not be 0 or a unit, got {x}")
    if y == 0:
        return INFINITE
    return min(vp_int(y, p) // e for p, e in factorize(abs(x)).factors)


def vp_binomial_fast(n: int, k: int, p: int) -> int:
    """Exponent of p in C(n, k) by carry counting; never builds the binomial."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return kummer_carries(k, n - k, p)
