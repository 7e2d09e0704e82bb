"""Exception hierarchy shared by all pakit modules.

Every error raised by the library is a Fault, and each concrete class
also subclasses the closest builtin so that generic handlers keep
working (e.g. RangeFault is caught by ``except IndexError``).
"""


class Fault(Exception):
    """Base class for all pakit errors."""


class RangeFault(Fault, IndexError):
    """An index, rank, or encoded value is outside its permitted range."""


class DomainFault(Fault, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class DecodeFault(Fault, ValueError):
    """A byte stream is truncated or does not encode a valid object."""


class ContractFault(Fault, RuntimeError):
    """An API contract was violated (caller bug, assertion-level)."""


class OverflowFault(Fault, OverflowError):
    """A conversion or rebalance would exceed the target representation."""


class UnderflowFault(Fault, ArithmeticError):
    """A conversion would lose the value entirely (magnitude too small)."""
