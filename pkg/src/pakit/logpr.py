"""Log-domain probability values: -ln(p) as a double.

Values are plain nonnegative floats; math.inf stands for probability
zero.  Multiplication is addition of logs, so products of thousands of
tiny probabilities never underflow.  Addition goes through the stable
log-sum-exp form and is the expensive operation.  This is the accuracy
reference the other probability representations are measured against.
"""

import math
import struct

from .errors import DecodeFault, DomainFault

ZERO = math.inf  # p = 0
ONE = 0.0  # p = 1

_PACK_F64 = struct.Struct(">d")


def from_real(p: float) -> float:
    """Encode a probability in [0, 1]; 0 maps to the infinite neg-log."""
    if not 0.0 <= p <= 1.0:
        raise DomainFault("probability %r outside [0, 1]" % (p,))
    if p == 0.0:
        return ZERO
    return -math.log(p)


def to_real(x: float) -> float:
    """Decode back to an ordinary probability."""
    return math.exp(-x)


def mul(a: float, b: float) -> float:
    return a + b


def div(a: float, b: float) -> float:
    """Quotient; the divisor must be nonzero and the result at most 1."""
    if b == ZERO:
        raise DomainFault("division by probability zero")
    if a == ZERO:
        return ZERO
    result = a - b
    if result < 0.0:
        raise DomainFault("quotient exceeds probability 1")
    return result


def add(a: float, b: float) -> float:
    """Stable log-sum; sums beyond probability 1 clamp to exactly 1."""
    if a == ZERO:
        return b
    if b == ZERO:
        return a
    lo = a if a < b else b
    hi = b if a < b else a
    result = lo - math.log1p(math.exp(lo - hi))
    return result if result > 0.0 else ONE


def cmp(a: float, b: float) -> int:
    """Order by probability: smaller neg-log means larger probability."""
    if a == b:
        return 0
    return 1 if a < b else -1


def write(stream, x: float) -> None:
    """8-byte big-endian bit pattern of the neg-log double."""
    stream.write(_PACK_F64.pack(x))


def read(stream) -> float:
    data = stream.read(8)
    if len(data) != 8:
        raise DecodeFault("truncated log-probability: got %d of 8 bytes" % len(data))
    (x,) = _PACK_F64.unpack(data)
    if math.isnan(x) or x < 0.0:
        raise DecodeFault("invalid log-probability bit pattern %r" % (x,))
    return x
