"""Extended-range floats: single-quality significand, 32-bit exponent.

A BalancedNumber is significand * 2**exponent with the significand kept
in the canonical frexp band 0.5 <= |s| < 1 (zero is exactly (0.0, 0)).
The 32-bit exponent reaches magnitudes around 10**±646456993, far past
either double limit, while negative values work like any other float.

Arithmetic runs the significands in double precision and rounds back to
single afterwards, keeping each operation within one single-precision
ulp.  Sums whose exponents differ by more than ALIGN_CUTOFF bits return
the larger operand unchanged: the smaller one is below single
resolution.  Infinities and NaNs are not values here; anything that
leaves the representation raises instead.
"""

import math
import struct
from typing import NamedTuple

from .errors import DecodeFault, DomainFault, OverflowFault, RangeFault, UnderflowFault

ALIGN_CUTOFF = 25  # one guard bit past the 24-bit single significand

_EXP_MIN = -(1 << 31)
_EXP_MAX = (1 << 31) - 1
_PACK_F32 = struct.Struct(">f")
_PACK_I32 = struct.Struct(">i")
_LN2 = math.log(2.0)


class BalancedNumber(NamedTuple):
    """Canonical significand/exponent pair.  Compare with cmp(), not <."""

    significand: float
    exponent: int


ZERO = BalancedNumber(0.0, 0)
ONE = BalancedNumber(0.5, 1)


def _round_single(x: float) -> float:
    return _PACK_F32.unpack(_PACK_F32.pack(x))[0]


def _canonical(sig: float, exp: int) -> BalancedNumber:
    if sig == 0.0:
        return ZERO
    m, shift = math.frexp(sig)
    exp += shift
    m = _round_single(m)
    if m == 1.0 or m == -1.0:  # rounding crossed the top of the binade
        m *= 0.5
        exp += 1
    if not _EXP_MIN <= exp <= _EXP_MAX:
        raise RangeFault("exponent %d outside 32-bit range" % exp)
    return BalancedNumber(m, exp)


def from_real(x: float) -> BalancedNumber:
    """Convert a finite double; the significand rounds to single precision."""
    if not math.isfinite(x):
        raise DomainFault("cannot represent non-finite value %r" % (x,))
    return _canonical(x, 0)


def to_real(b: BalancedNumber) -> float:
    """Convert back to double; out-of-range exponents raise, never wrap."""
    if b.significand == 0.0:
        return 0.0
    if b.exponent > 1024:
        raise OverflowFault("exponent %d exceeds double range" % b.exponent)
    if b.exponent < -1073:
        raise UnderflowFault("exponent %d below double range" % b.exponent)
    return math.ldexp(b.significand, b.exponent)


def neg(a: BalancedNumber) -> BalancedNumber:
    if a.significand == 0.0:
        return ZERO
    return BalancedNumber(-a.significand, a.exponent)


def mul(a: BalancedNumber, b: BalancedNumber) -> BalancedNumber:
    if a.significand == 0.0 or b.significand == 0.0:
        return ZERO
    return _canonical(a.significand * b.significand, a.exponent + b.exponent)


def div(a: BalancedNumber, b: BalancedNumber) -> BalancedNumber:
    if b.significand == 0.0:
        raise DomainFault("division by zero")
    if a.significand == 0.0:
        return ZERO
    return _canonical(a.significand / b.significand, a.exponent - b.exponent)


def add(a: BalancedNumber, b: BalancedNumber) -> BalancedNumber:
    if a.significand == 0.0:
        return b
    if b.significand == 0.0:
        return a
    diff = a.exponent - b.exponent
    if diff > ALIGN_CUTOFF:
        return a
    if diff < -ALIGN_CUTOFF:
        return b
    if diff >= 0:
        hi, lo = a, b
    else:
        hi, lo = b, a
    total = hi.significand + math.ldexp(lo.significand, lo.exponent - hi.exponent)
    if total == 0.0:
        return ZERO
    return _canonical(total, hi.exponent)


def sub(a: BalancedNumber, b: BalancedNumber) -> BalancedNumber:
    return add(a, neg(b))


def cmp(a: BalancedNumber, b: BalancedNumber) -> int:
    """Total order on represented values; never converts to double."""
    sign_a = (a.significand > 0.0) - (a.significand < 0.0)
    sign_b = (b.significand > 0.0) - (b.significand < 0.0)
    if sign_a != sign_b:
        return -1 if sign_a < sign_b else 1
    if sign_a == 0:
        return 0
    if a.exponent != b.exponent:
        # larger exponent means larger magnitude; flips under a negative sign
        return sign_a if a.exponent > b.exponent else -sign_a
    if a.significand == b.significand:
        return 0
    return 1 if a.significand > b.significand else -1


def ln_abs(b: BalancedNumber) -> float:
    """Natural log of |value| as a double; defined far outside double range."""
    if b.significand == 0.0:
        raise DomainFault("log of zero")
    return math.log(abs(b.significand)) + b.exponent * _LN2


def write(stream, b: BalancedNumber) -> None:
    """4-byte single-precision significand, 4-byte big-endian exponent."""
    stream.write(_PACK_F32.pack(b.significand))
    stream.write(_PACK_I32.pack(b.exponent))


def read(stream) -> BalancedNumber:
    data = stream.read(8)
    if len(data) != 8:
        raise DecodeFault("truncated balanced number: got %d of 8 bytes" % len(data))
    (sig,) = _PACK_F32.unpack(data[:4])
    (exp,) = _PACK_I32.unpack(data[4:])
    if sig == 0.0:
        if exp != 0 or math.copysign(1.0, sig) < 0:
            raise DecodeFault("non-canonical zero encoding")
        return ZERO
    if not 0.5 <= abs(sig) < 1.0:
        raise DecodeFault("significand %r outside canonical range" % (sig,))
    return BalancedNumber(sig, exp)
