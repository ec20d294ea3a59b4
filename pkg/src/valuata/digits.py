"""Base-p digit kernels: expansions, digit sums, factorial valuations, carries.

Everything here runs on machine-scale naturals (at most 2**64 - 1) and never
builds a large integer, which is what makes the predictor paths cheap no
matter how astronomically large the factorials or binomials they describe
would be.  All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

U64_MAX = 2**64 - 1

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
)

# Witness set proven deterministic for every n < 3.317e24, which covers the
# full 64-bit input range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all n below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"base must be prime, got {p}")


def _require_u64(n: int, what: str) -> None:
    if n < 0:
        raise ValueError(f"{what} must be non-negative, got {n}")
    if n > U64_MAX:
        raise ValueError(f"{what} exceeds the 64-bit kernel range: {n}")


@dataclass(frozen=True)
class DigitExpansion:
    """Base-p expansion of a natural number, least-significant digit first."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        _require_prime(self.base)
        if not self.digits:
            raise ValueError("digits must be non-empty; zero is (0,)")
        if any(d < 0 or d >= self.base for d in self.digits):
            raise ValueError(f"digits out of range for base {self.base}: {self.digits}")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("trailing zero digit")

    @property
    def value(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.base + d
        return total

    def digit_sum(self) -> int:
        return sum(self.digits)

    def __str__(self) -> str:
        # Conventional most-significant-first rendering, e.g. (157A)_11.
        alphabet = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
        if self.base <= 36:
            body = "".join(alphabet[d] for d in reversed(self.digits))
        else:
            body = ".".join(str(d) for d in reversed(self.digits))
        return f"({body})_{self.base}"


def expand(n: int, p: int) -> DigitExpansion:
    """Unique base-p expansion of n; round-trips through `.value`."""
    _require_u64(n, "n")
    _require_prime(p)
    if n == 0:
        return DigitExpansion(p, (0,))
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return DigitExpansion(p, tuple(digits))


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-p digits of n."""
    _require_u64(n, "n")
    _require_prime(p)
    total = 0
    while n:
        total += n % p
        n //= p
    return total


def vp_factorial(n: int, p: int) -> int:
    """Exponent of the prime p in n!, via the digit-sum closed form.

    Equals the usual floor-sum over powers of p, but costs one digit scan.
    """
    return (n - digit_sum(n, p)) // (p - 1)


def kummer_carries(a: int, b: int, p: int) -> int:
    """Number of carries when adding a and b in base p.

    This equals the exponent of p in the binomial coefficient
    C(a + b, a), so it prices a binomial valuation at one digit scan.
    """
    _require_u64(a, "a")
    _require_u64(b, "b")
    _require_u64(a + b, "a + b")
    _require_prime(p)
    carries = 0
    carry = 0
    while a or b or carry:
        carry = 1 if a % p + b % p + carry >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def popcount_valuation(n: int) -> int:
    """Count of 1-bits of n; equals the exponent of 2 in C(2n, n)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return n.bit_count()
