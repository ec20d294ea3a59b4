import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from valuata.digits import (
    U64_MAX,
    DigitExpansion,
    digit_sum,
    expand,
    is_prime,
    kummer_carries,
    popcount_valuation,
    vp_factorial,
)

PRIMES = [2, 3, 5, 7, 11, 13]

primes_st = st.sampled_from(PRIMES)


def floor_sum_valuation(n: int, p: int) -> int:
    """Independent oracle for the factorial valuation: sum of floor(n / p**k)."""
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


class TestIsPrime:
    def test_small(self):
        assert [p for p in range(60) if is_prime(p)] == [
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
        ]

    def test_carmichael_and_large(self):
        assert not is_prime(561)
        assert not is_prime(2**61)
        assert is_prime(2**61 - 1)
        assert not is_prime((2**31 - 1) * (2**19 - 1))


class TestExpand:
    def test_worked_base3(self):
        e = expand(2023, 3)
        assert e.digits == (1, 2, 2, 2, 0, 2, 2)
        assert str(e) == "(2202221)_3"
        assert e.value == 2023

    def test_worked_base11(self):
        e = expand(2023, 11)
        assert e.digits == (10, 7, 5, 1)
        assert str(e) == "(157A)_11"
        assert e.value == 2023

    def test_zero(self):
        assert expand(0, 5).digits == (0,)
        assert expand(0, 5).value == 0

    def test_composite_base_rejected(self):
        with pytest.raises(ValueError):
            expand(10, 4)
        with pytest.raises(ValueError):
            DigitExpansion(6, (1,))

    def test_out_of_range_inputs(self):
        with pytest.raises(ValueError):
            expand(U64_MAX + 1, 3)
        with pytest.raises(ValueError):
            expand(-1, 3)

    def test_invalid_digit_vectors(self):
        with pytest.raises(ValueError):
            DigitExpansion(3, (3,))
        with pytest.raises(ValueError):
            DigitExpansion(3, (1, 0))
        with pytest.raises(ValueError):
            DigitExpansion(3, ())

    @given(st.integers(0, U64_MAX), primes_st)
    def test_round_trip(self, n, p):
        e = expand(n, p)
        assert e.value == n
        assert all(0 <= d < p for d in e.digits)
        assert e.digits[-1] != 0 or n == 0


class TestDigitSum:
    def test_worked_values(self):
        assert digit_sum(2023, 3) == 11
        assert digit_sum(2023, 11) == 23

    @pytest.mark.parametrize("p", PRIMES)
    def test_single_digit(self, p):
        for n in range(p):
            assert digit_sum(n, p) == n

    @given(st.integers(0, U64_MAX), primes_st)
    def test_matches_expansion_and_bound(self, n, p):
        assert digit_sum(n, p) == expand(n, p).digit_sum() <= max(n, 1)


class TestVpFactorial:
    def test_nine_factorial(self):
        # 9! contains 3, 6, 9 contributing 1 + 1 + 2 threes.
        assert vp_factorial(9, 3) == 4

    def test_zero(self):
        for p in PRIMES:
            assert vp_factorial(0, p) == 0

    def test_worked_value_against_floor_sum(self):
        assert vp_factorial(2023, 3) == (2023 - 11) // 2 == 1006
        assert floor_sum_valuation(2023, 3) == 1006

    @pytest.mark.parametrize("p", PRIMES)
    def test_floor_sum_sweep(self, p):
        for n in range(3000):
            assert vp_factorial(n, p) == floor_sum_valuation(n, p)

    @given(st.integers(0, 10**5), primes_st)
    def test_floor_sum_property(self, n, p):
        assert vp_factorial(n, p) == floor_sum_valuation(n, p)


class TestKummerCarries:
    def test_worked_values(self):
        assert kummer_carries(2023, 2023, 3) == 5
        assert kummer_carries(2023, 2023, 11) == 3

    @pytest.mark.parametrize("p", PRIMES)
    def test_adding_zero(self, p):
        for n in (0, 1, 7, 10**9):
            assert kummer_carries(n, 0, p) == 0
            assert kummer_carries(0, n, p) == 0

    @given(st.integers(0, 10**4), st.integers(0, 10**4), primes_st)
    def test_matches_factorial_valuations(self, a, b, p):
        expected = vp_factorial(a + b, p) - vp_factorial(a, p) - vp_factorial(b, p)
        assert kummer_carries(a, b, p) == expected

    @given(st.integers(0, 10**4), primes_st)
    def test_central_carry_digit_sum_identity(self, n, p):
        # (p-1) * carries(n, n) = 2 s_p(n) - s_p(2n)
        assert (p - 1) * kummer_carries(n, n, p) == 2 * digit_sum(n, p) - digit_sum(2 * n, p)

    def test_overflow_guard(self):
        with pytest.raises(ValueError):
            kummer_carries(U64_MAX, 1, 3)


class TestPopcountValuation:
    def test_trivial_and_small(self):
        assert popcount_valuation(0) == 0
        assert popcount_valuation(3) == 2
        # matches the exact central binomial: C(6, 3) = 20 = 2**2 * 5
        v = 0
        value = math.comb(6, 3)
        while value % 2 == 0:
            v += 1
            value //= 2
        assert v == 2

    def test_worked_value(self):
        assert popcount_valuation(2023) == 9
        assert popcount_valuation(2023) == len([d for d in expand(2023, 2).digits if d])

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            popcount_valuation(-1)

    @given(st.integers(0, 10**5))
    def test_equals_binary_digit_sum(self, n):
        assert popcount_valuation(n) == digit_sum(n, 2)

    @given(st.integers(0, 10**4))
    def test_equals_complement_of_factorial_valuation(self, n):
        assert popcount_valuation(n) == n - vp_factorial(n, 2)
