import math
import random
from io import BytesIO

import mpmath
import numpy as np
import pytest

from pakit import fixedlog
from pakit.errors import DecodeFault, DomainFault
from pakit.fixedlog import SENTINEL, FixedLogCodec, default_codec

SCALE = fixedlog.DEFAULT_SCALE


def test_one_maps_to_code_zero():
    assert fixedlog.from_real(1.0) == 0
    assert fixedlog.to_real(0) == 1.0


def test_zero_maps_to_sentinel():
    assert fixedlog.from_real(0.0) == SENTINEL
    assert fixedlog.to_real(SENTINEL) == 0.0


def test_half_maps_to_45426():
    # round(65536 * ln 2) recomputed independently
    assert round(65536 * math.log(2.0)) == 45426
    assert fixedlog.from_real(0.5) == 45426


def test_out_of_domain_faults():
    with pytest.raises(DomainFault):
        fixedlog.from_real(-0.5)
    with pytest.raises(DomainFault):
        fixedlog.from_real(1.5)
    with pytest.raises(DomainFault):
        fixedlog.from_real(math.nan)


def test_tiny_probability_clamps_below_sentinel():
    codec = FixedLogCodec(width=8)
    # smaller than any representable code for width 8 / scale 16
    assert codec.from_real(1e-12) == codec.sentinel - 1


def test_roundtrip_quantization_bound():
    rng = random.Random(70)
    bound = 0.5 / SCALE + 1e-12  # slack for the double-precision measurement
    for _ in range(10_000):
        p = math.exp(rng.uniform(math.log(1e-9), 0.0))
        back = fixedlog.to_real(fixedlog.from_real(p))
        assert abs(math.log(back) - math.log(p)) <= bound


def test_mul_is_code_addition():
    half = fixedlog.from_real(0.5)
    product = fixedlog.mul(half, half)
    assert product == 2 * half == 90852
    assert abs(product - fixedlog.from_real(0.25)) <= 1


def test_mul_identity_and_absorption():
    x = fixedlog.from_real(0.123)
    assert fixedlog.mul(x, 0) == x
    assert fixedlog.mul(x, SENTINEL) == SENTINEL
    assert fixedlog.mul(SENTINEL, SENTINEL) == SENTINEL


def test_mul_saturates_instead_of_wrapping():
    huge = SENTINEL - 5
    assert fixedlog.mul(huge, huge) == SENTINEL
    assert fixedlog.mul(huge, 4) == SENTINEL - 1
    assert fixedlog.mul(huge, 5) == SENTINEL


def test_mul_is_exact_in_the_log_domain():
    rng = random.Random(71)
    codes = [fixedlog.from_real(rng.uniform(0.01, 1.0)) for _ in range(1000)]
    accumulator = 0
    for code in codes:
        accumulator = fixedlog.mul(accumulator, code)
    assert accumulator == sum(codes)  # integer-exact, no drift


def test_add_halves_make_one():
    half = fixedlog.from_real(0.5)
    assert fixedlog.add(half, half) == 0


def test_add_zero_is_identity():
    x = fixedlog.from_real(0.37)
    assert fixedlog.add(x, SENTINEL) == x
    assert fixedlog.add(SENTINEL, x) == x
    assert fixedlog.add(SENTINEL, SENTINEL) == SENTINEL


def test_add_near_sentinel_codes_keep_zero_semantics():
    # lo just inside the table window of the sentinel must not get a correction
    lo = SENTINEL - 10
    assert fixedlog.add(lo, SENTINEL) == lo


def test_add_matches_log_sum_exp_oracle():
    rng = random.Random(72)
    bound = 2.0 / SCALE
    for _ in range(10_000):
        pa = math.exp(rng.uniform(math.log(1e-6), 0.0))
        pb = math.exp(rng.uniform(math.log(1e-6), 0.0))
        result = fixedlog.add(fixedlog.from_real(pa), fixedlog.from_real(pb))
        expected = min(pa + pb, 1.0)
        assert abs(-result / SCALE - math.log(expected)) <= bound


def test_add_commutes_exactly():
    rng = random.Random(73)
    for _ in range(1000):
        a = fixedlog.from_real(rng.random())
        b = fixedlog.from_real(rng.random())
        assert fixedlog.add(a, b) == fixedlog.add(b, a)


def test_add_is_monotone():
    rng = random.Random(74)
    for _ in range(1000):
        pa, pa2 = sorted((rng.random(), rng.random()))
        pb = rng.random()
        a, a2, b = (fixedlog.from_real(p) for p in (pa, pa2, pb))
        # pa <= pa2, so add(a, b) must not exceed add(a2, b) in probability
        assert fixedlog.cmp(fixedlog.add(a, b), fixedlog.add(a2, b)) <= 0


def test_cmp():
    assert fixedlog.cmp(fixedlog.from_real(0.9), fixedlog.from_real(0.1)) == 1
    assert fixedlog.cmp(SENTINEL, fixedlog.from_real(1e-9)) == -1
    assert fixedlog.cmp(3, 3) == 0


def test_cmp_agrees_beyond_quantization_separation():
    rng = random.Random(75)
    for _ in range(5000):
        pa, pb = rng.random(), rng.random()
        if abs(math.log(pa) - math.log(pb)) <= 1.0 / SCALE:
            continue
        expected = (pa > pb) - (pa < pb)
        assert fixedlog.cmp(fixedlog.from_real(pa), fixedlog.from_real(pb)) == expected


def test_div_is_clamped_code_subtraction():
    quarter = fixedlog.from_real(0.25)
    half = fixedlog.from_real(0.5)
    assert fixedlog.div(quarter, half) == quarter - half
    assert fixedlog.div(half, quarter) == 0  # quotient capped at 1
    assert fixedlog.div(SENTINEL, half) == SENTINEL
    with pytest.raises(DomainFault):
        fixedlog.div(half, SENTINEL)


def test_correction_table_endpoints():
    codec = default_codec()
    assert codec.corr[0] == 45426  # round(scale * ln 2)
    assert codec.corr[-1] == 0
    assert codec.d_max == len(codec.corr) - 1


def test_correction_table_is_nonincreasing():
    corr = np.asarray(default_codec().corr)
    assert (np.diff(corr) <= 0).all()


def test_correction_table_matches_direct_evaluation():
    # independent recomputation through log instead of log1p
    codec = default_codec()
    d = np.arange(len(codec.corr), dtype=np.float64)
    direct = np.rint(codec.scale * np.log(1.0 + np.exp(-d / codec.scale)))
    assert np.array_equal(direct.astype(np.int64), np.asarray(codec.corr))


def test_correction_table_sampled_against_mpmath():
    codec = default_codec()
    rng = random.Random(76)
    sample = [0, codec.d_max] + [rng.randrange(codec.d_max) for _ in range(500)]
    with mpmath.workdps(50):
        for d in sample:
            exact = codec.scale * mpmath.log(1 + mpmath.e ** (mpmath.mpf(-d) / codec.scale))
            assert codec.corr[d] == int(mpmath.nint(exact))


def test_thousand_product_accuracy():
    rng = random.Random(77)
    values = [rng.uniform(0.01, 1.0) for _ in range(1000)]
    accumulator = 0
    for p in values:
        accumulator = fixedlog.mul(accumulator, fixedlog.from_real(p))
    with mpmath.workdps(60):
        oracle = -mpmath.fsum(mpmath.log(mpmath.mpf(p)) for p in values)
        assert abs(accumulator / SCALE - float(oracle)) <= 1000 * 0.5 / SCALE


def test_narrow_widths_roundtrip():
    for width in (8, 16):
        codec = FixedLogCodec(width=width)
        assert codec.sentinel == (1 << width) - 1
        assert codec.from_real(1.0) == 0
        assert codec.from_real(0.0) == codec.sentinel
        p = 0.3
        assert abs(math.log(codec.to_real(codec.from_real(p))) - math.log(p)) <= 0.5 / codec.scale
        assert codec.add(codec.from_real(0.5), codec.from_real(0.5)) == 0


def test_width_64_is_refused():
    with pytest.raises(DomainFault):
        FixedLogCodec(width=64)


def test_serialization_roundtrip():
    for code in (0, 45426, SENTINEL - 1, SENTINEL):
        stream = BytesIO()
        fixedlog.write(stream, code)
        data = stream.getvalue()
        assert len(data) == 4
        assert fixedlog.read(BytesIO(data)) == code
        second = BytesIO()
        fixedlog.write(second, code)
        assert second.getvalue() == data


def test_serialization_widths():
    codec = FixedLogCodec(width=16)
    stream = BytesIO()
    codec.write(stream, 1234)
    assert len(stream.getvalue()) == 2
    assert codec.read(BytesIO(stream.getvalue())) == 1234


def test_read_truncated_faults():
    with pytest.raises(DecodeFault):
        fixedlog.read(BytesIO(b"\x00\x00"))
