import math
import random
import struct
from io import BytesIO

import mpmath
import pytest
from hypothesis import given, strategies as st

from pakit import balanced
from pakit.balanced import ZERO, BalancedNumber
from pakit.errors import (
    DecodeFault,
    DomainFault,
    OverflowFault,
    RangeFault,
    UnderflowFault,
)


def is_canonical(b):
    if b.significand == 0.0:
        return b.exponent == 0 and math.copysign(1.0, b.significand) > 0
    if not 0.5 <= abs(b.significand) < 1.0:
        return False
    # significand must already be single precision
    return struct.unpack("f", struct.pack("f", b.significand))[0] == b.significand


def test_from_real_examples():
    assert balanced.from_real(0.0) == BalancedNumber(0.0, 0)
    assert balanced.from_real(3.0) == BalancedNumber(0.75, 2)
    assert balanced.from_real(-1.0) == BalancedNumber(-0.5, 1)


def test_from_real_rejects_non_finite():
    for bad in (math.inf, -math.inf, math.nan):
        with pytest.raises(DomainFault):
            balanced.from_real(bad)


def test_to_real_examples():
    assert balanced.to_real(BalancedNumber(0.75, 2)) == 3.0
    assert balanced.to_real(ZERO) == 0.0


def test_to_real_out_of_double_range_faults():
    with pytest.raises(OverflowFault):
        balanced.to_real(BalancedNumber(0.5, 5000))
    with pytest.raises(UnderflowFault):
        balanced.to_real(BalancedNumber(0.5, -5000))


def test_roundtrip_single_precision_quality():
    rng = random.Random(60)
    for _ in range(10_000):
        x = math.ldexp(rng.uniform(-1.0, 1.0), rng.randrange(-900, 900))
        if x == 0.0:
            continue
        back = balanced.to_real(balanced.from_real(x))
        assert abs(back - x) <= 2.0**-24 * abs(x)


def test_mul_example():
    a = BalancedNumber(0.75, 2)  # 3
    b = BalancedNumber(0.5, 1)  # 1
    assert balanced.mul(a, b) == BalancedNumber(0.75, 2)


def test_mul_by_zero_absorbs():
    x = balanced.from_real(123.456)
    assert balanced.mul(x, ZERO) == ZERO
    assert balanced.mul(ZERO, x) == ZERO


def test_tenth_power_of_1e_minus_300():
    base = balanced.from_real(1e-300)
    power = base
    for _ in range(9):
        power = balanced.mul(power, base)
    assert -9967 <= power.exponent <= -9964  # value around 2**-9965.8
    with mpmath.workdps(60):
        oracle = 10 * mpmath.log(mpmath.mpf(1e-300))
        assert abs(balanced.ln_abs(power) - float(oracle)) <= 1e-4


def test_mul_exponent_overflow_faults():
    giant = BalancedNumber(0.5, (1 << 31) - 1)
    with pytest.raises(RangeFault):
        balanced.mul(giant, giant)
    tiny = BalancedNumber(0.5, -(1 << 31))
    with pytest.raises(RangeFault):
        balanced.mul(tiny, tiny)


def test_div():
    three = balanced.from_real(3.0)
    two = balanced.from_real(2.0)
    assert balanced.to_real(balanced.div(three, two)) == 1.5
    assert balanced.div(ZERO, two) == ZERO
    with pytest.raises(DomainFault):
        balanced.div(three, ZERO)


def test_add_examples():
    one = balanced.from_real(1.0)
    assert balanced.add(one, one) == BalancedNumber(0.5, 2)


def test_add_absorbs_below_alignment_window():
    big = BalancedNumber(0.5, 0)
    small = BalancedNumber(0.5, -60)
    assert balanced.add(big, small) == big
    assert balanced.add(small, big) == big


def test_add_of_negation_is_zero():
    x = balanced.from_real(0.7071)
    assert balanced.add(x, balanced.neg(x)) == ZERO


def test_sub_and_neg():
    five = balanced.from_real(5.0)
    three = balanced.from_real(3.0)
    assert balanced.to_real(balanced.sub(five, three)) == 2.0
    assert balanced.neg(ZERO) == ZERO
    assert balanced.to_real(balanced.neg(three)) == -3.0


def test_cmp_exponent_dominates():
    assert balanced.cmp(BalancedNumber(0.5, 100), BalancedNumber(0.9, 99)) == 1


def test_cmp_sign_dominates():
    negative = balanced.from_real(-1e300)
    positive = balanced.from_real(1e-300)
    assert balanced.cmp(negative, positive) == -1
    assert balanced.cmp(positive, negative) == 1
    assert balanced.cmp(ZERO, positive) == -1
    assert balanced.cmp(negative, ZERO) == -1


def test_cmp_matches_double_order():
    rng = random.Random(61)
    for _ in range(10_000):
        x = math.ldexp(rng.uniform(-1.0, 1.0), rng.randrange(-60, 60))
        y = math.ldexp(rng.uniform(-1.0, 1.0), rng.randrange(-60, 60))
        a, b = balanced.from_real(x), balanced.from_real(y)
        ax, by = balanced.to_real(a), balanced.to_real(b)
        expected = (ax > by) - (ax < by)
        assert balanced.cmp(a, b) == expected


finite_doubles = st.floats(
    allow_nan=False, allow_infinity=False, min_value=-1e300, max_value=1e300
)


@given(finite_doubles)
def test_from_real_is_canonical(x):
    assert is_canonical(balanced.from_real(x))


@given(finite_doubles, finite_doubles)
def test_operations_stay_canonical(x, y):
    a, b = balanced.from_real(x), balanced.from_real(y)
    assert is_canonical(balanced.mul(a, b))
    assert is_canonical(balanced.add(a, b))
    assert is_canonical(balanced.sub(a, b))
    if b != ZERO:
        assert is_canonical(balanced.div(a, b))


def test_single_op_accuracy_vs_double():
    # operands taken exactly as represented, results compared to double ops
    rng = random.Random(62)
    for _ in range(10_000):
        a = balanced.from_real(math.ldexp(rng.uniform(-1, 1), rng.randrange(-100, 100)))
        b = balanced.from_real(math.ldexp(rng.uniform(-1, 1), rng.randrange(-100, 100)))
        if a == ZERO or b == ZERO:
            continue
        da, db = balanced.to_real(a), balanced.to_real(b)
        for op, dop in (
            (balanced.mul, lambda: da * db),
            (balanced.add, lambda: da + db),
            (balanced.div, lambda: da / db),
        ):
            result = op(a, b)
            expected = dop()
            if expected == 0.0:
                assert result == ZERO
            else:
                assert abs(balanced.to_real(result) - expected) <= 2.0**-22 * abs(expected)


def test_mul_commutes_exactly():
    rng = random.Random(63)
    for _ in range(1000):
        a = balanced.from_real(rng.uniform(-10, 10))
        b = balanced.from_real(rng.uniform(-10, 10))
        assert balanced.mul(a, b) == balanced.mul(b, a)


def test_mul_reassociation_error_is_bounded():
    rng = random.Random(64)
    for _ in range(2000):
        a, b, c = (
            balanced.from_real(math.exp(rng.uniform(-20, 20))) for _ in range(3)
        )
        left = balanced.mul(balanced.mul(a, b), c)
        right = balanced.mul(a, balanced.mul(b, c))
        assert abs(balanced.ln_abs(left) - balanced.ln_abs(right)) <= 3 * 2.0**-24


def test_thousand_term_product_tracks_log_oracle():
    rng = random.Random(65)
    values = [math.exp(rng.uniform(math.log(1e-10), math.log(1e10))) for _ in range(1000)]
    accumulator = balanced.from_real(1.0)
    for x in values:
        accumulator = balanced.mul(accumulator, balanced.from_real(x))
    with mpmath.workdps(60):
        oracle = mpmath.fsum(mpmath.log(mpmath.mpf(x)) for x in values)
        assert abs(balanced.ln_abs(accumulator) - float(oracle)) <= 1000 * 2.0**-22


def test_ln_abs_matches_math_log_in_range():
    for x in (0.5, 3.0, 1e-300, 1e300):
        b = balanced.from_real(x)  # quantizes x; compare against the held value
        assert balanced.ln_abs(b) == pytest.approx(math.log(balanced.to_real(b)), rel=1e-12)
    with pytest.raises(DomainFault):
        balanced.ln_abs(ZERO)


def test_serialization_roundtrip():
    for x in (0.0, 1.0, -3.75, 1e-300, 2.0**67):
        b = balanced.from_real(x)
        stream = BytesIO()
        balanced.write(stream, b)
        data = stream.getvalue()
        assert len(data) == 8
        assert balanced.read(BytesIO(data)) == b
        second = BytesIO()
        balanced.write(second, b)
        assert second.getvalue() == data


def test_serialization_of_extreme_exponents():
    huge = BalancedNumber(0.9, 2_000_000_000)
    stream = BytesIO()
    balanced.write(stream, huge)
    loaded = balanced.read(BytesIO(stream.getvalue()))
    # significand rounds to single on write; exponent is exact
    assert loaded.exponent == huge.exponent
    assert abs(loaded.significand - 0.9) < 1e-7


def test_read_rejects_non_canonical():
    stream = BytesIO()
    stream.write(struct.pack(">f", 1.5))
    stream.write(struct.pack(">i", 3))
    with pytest.raises(DecodeFault):
        balanced.read(BytesIO(stream.getvalue()))
    with pytest.raises(DecodeFault):
        balanced.read(BytesIO(b"\x00" * 7))
    dirty_zero = struct.pack(">f", 0.0) + struct.pack(">i", 9)
    with pytest.raises(DecodeFault):
        balanced.read(BytesIO(dirty_zero))
