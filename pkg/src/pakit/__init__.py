"""pakit: compact containers and extended-range probability arithmetic.

Containers
    Vector        fixed-size elements in one contiguous buffer
    CompactTable  sorted pair array, O(log n) lookup, minimal footprint
    Trie          interns symbol strings as dense integer indices
    HashTable     open addressing + double hashing, via HashSpec
    UnigramTable  frequency counters that widen from 1 to 8 bytes

Numerics
    balanced      single-quality significand with a 32-bit exponent
    fixedlog      integer codes for -scale*ln(p), table-driven addition
    logpr         -ln(p) as a double, the accuracy reference
    pr            one generic interface over all of them, plus conformance

Every container registers its logical footprint with `accounting`;
destroy what you create and the registry totals return to zero.  All
serialization goes through `wire`, a big-endian self-delimiting format.
"""

from . import accounting, balanced, fixedlog, hashing, logpr, pr, unigram, vector, wire
from .compact_table import CompactTable
from .errors import (
    ContractFault,
    DecodeFault,
    DomainFault,
    Fault,
    OverflowFault,
    RangeFault,
    UnderflowFault,
)
from .hashing import HashSpec, HashTable, string_spec, symbol_spec
from .trie import Trie
from .unigram import UnigramTable
from .vector import Vector

__version__ = "0.1.0"

__all__ = [
    "CompactTable",
    "ContractFault",
    "DecodeFault",
    "DomainFault",
    "Fault",
    "HashSpec",
    "HashTable",
    "OverflowFault",
    "RangeFault",
    "Trie",
    "UnderflowFault",
    "UnigramTable",
    "Vector",
    "accounting",
    "balanced",
    "fixedlog",
    "hashing",
    "logpr",
    "pr",
    "string_spec",
    "symbol_spec",
    "unigram",
    "vector",
    "wire",
]
