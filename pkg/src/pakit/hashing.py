"""Hash-table toolkit: open addressing with double hashing and tombstones.

A HashSpec bundles the key operations (two independent hash functions
and an equality test); HashTable stores all entries in one slot array of
power-of-two capacity.  The probe sequence for a key is

    slot(i) = (hash1(key) + i * step) mod capacity,   step = hash2(key) | 1

and forcing the step odd guarantees it visits every slot.  Deleted slots
become tombstones so probe chains stay intact; the table rehashes in
place once tombstones outnumber live entries, and doubles once the
combined load passes MAX_LOAD.

Two ready-made specs cover the common cases: symbol_spec() hashes
fixed-width unsigned integers, string_spec() hashes length-delimited
byte strings (embedded zero bytes are fine).
"""

from typing import Callable, NamedTuple, Optional

from . import accounting
from .errors import ContractFault, DomainFault

MAX_LOAD = 0.7
_HEADER_BYTES = 48
_MASK64 = (1 << 64) - 1

FNV64_OFFSET_BASIS = 0xCBF29CE484222325
FNV64_PRIME = 0x100000001B3


def fnv1a_64(data: bytes) -> int:
    """64-bit FNV-1a over a byte string."""
    h = FNV64_OFFSET_BASIS
    for b in data:
        h = ((h ^ b) * FNV64_PRIME) & _MASK64
    return h


def djb2_64(data: bytes) -> int:
    """64-bit multiplicative string hash, independent of FNV-1a."""
    h = 5381
    for b in data:
        h = (h * 33 + b) & _MASK64
    return h


def mix64(x: int) -> int:
    """Finalizing mixer for integer keys (splitmix64 finale)."""
    x &= _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


class HashSpec(NamedTuple):
    """Key operations parameterizing a HashTable.

    key_size is the fixed key width in bytes, or None for
    variable-length keys; it only feeds the logical footprint estimate.
    """

    key_size: Optional[int]
    hash1: Callable[[object], int]
    hash2: Callable[[object], int]
    key_equal: Callable[[object, object], bool]


def symbol_spec(key_size: int = 8) -> HashSpec:
    """Spec for fixed-width unsigned integer keys."""
    return HashSpec(
        key_size=key_size,
        hash1=mix64,
        hash2=lambda x: mix64((x & _MASK64) ^ 0x9E3779B97F4A7C15),
        key_equal=lambda a, b: a == b,
    )


def string_spec() -> HashSpec:
    """Spec for length-delimited byte-string keys."""
    return HashSpec(
        key_size=None,
        hash1=fnv1a_64,
        hash2=djb2_64,
        key_equal=lambda a, b: a == b,
    )


class _Tombstone:
    __slots__ = ()

    def __repr__(self):
        return "<tombstone>"


_TOMBSTONE = _Tombstone()
_ABSENT = object()


class HashTable:
    """Open-addressing <key, datum> table driven by a HashSpec."""

    __slots__ = ("spec", "_slots", "_live", "_tombstones", "_mods", "_token")

    def __init__(self, spec: HashSpec, initial_capacity: int = 8):
        if initial_capacity < 1 or initial_capacity & (initial_capacity - 1):
            raise DomainFault("capacity must be a power of two, got %d" % initial_capacity)
        self.spec = spec
        self._slots = [None] * initial_capacity
        self._live = 0
        self._tombstones = 0
        self._mods = 0
        self._token = accounting.register(self._footprint(initial_capacity))

    def _footprint(self, capacity: int) -> int:
        slot_bytes = (self.spec.key_size if self.spec.key_size is not None else 16) + 8
        return _HEADER_BYTES + capacity * slot_bytes

    def _check_live(self):
        if self._token.released:
            raise ContractFault("operation on a destroyed HashTable")

    def __len__(self) -> int:
        return self._live

    @property
    def capacity(self) -> int:
        return len(self._slots)

    @property
    def tombstone_count(self) -> int:
        return self._tombstones

    def _rehash(self, new_capacity: int) -> None:
        old_slots = self._slots
        self._slots = [None] * new_capacity
        self._live = 0
        self._tombstones = 0
        self._mods += 1
        for entry in old_slots:
            if entry is None or entry is _TOMBSTONE:
                continue
            self._place(entry[0], entry[1])
        accounting.resize(self._token, self._footprint(new_capacity))

    def _place(self, key, datum) -> None:
        """Insert into a table known to contain neither key nor tombstones."""
        mask = len(self._slots) - 1
        index = self.spec.hash1(key) & mask
        step = self.spec.hash2(key) | 1
        while self._slots[index] is not None:
            index = (index + step) & mask
        self._slots[index] = (key, datum)
        self._live += 1

    def insert(self, key, datum) -> bool:
        """Map key to datum; returns True if an existing datum was replaced."""
        self._check_live()
        if (self._live + self._tombstones + 1) > MAX_LOAD * len(self._slots):
            if self._tombstones > self._live:
                self._rehash(len(self._slots))
            else:
                self._rehash(len(self._slots) * 2)
        mask = len(self._slots) - 1
        index = self.spec.hash1(key) & mask
        step = self.spec.hash2(key) | 1
        first_tombstone = -1
        while True:
            entry = self._slots[index]
            if entry is None:
                break
            if entry is _TOMBSTONE:
                if first_tombstone < 0:
                    first_tombstone = index
            elif self.spec.key_equal(entry[0], key):
                self._slots[index] = (key, datum)
                self._mods += 1
                return True
            index = (index + step) & mask
        if first_tombstone >= 0:
            index = first_tombstone
            self._tombstones -= 1
        self._slots[index] = (key, datum)
        self._live += 1
        self._mods += 1
        return False

    def find(self, key, default=None):
        """Return the datum mapped to key, or `default` when absent."""
        self._check_live()
        mask = len(self._slots) - 1
        index = self.spec.hash1(key) & mask
        step = self.spec.hash2(key) | 1
        while True:
            entry = self._slots[index]
            if entry is None:
                return default
            if entry is not _TOMBSTONE and self.spec.key_equal(entry[0], key):
                return entry[1]
            index = (index + step) & mask

    def __contains__(self, key) -> bool:
        return self.find(key, _ABSENT) is not _ABSENT

    def remove(self, key) -> bool:
        """Remove key if present (leaving a tombstone); True iff it was there."""
        self._check_live()
        mask = len(self._slots) - 1
        index = self.spec.hash1(key) & mask
        step = self.spec.hash2(key) | 1
        while True:
            entry = self._slots[index]
            if entry is None:
                return False
            if entry is not _TOMBSTONE and self.spec.key_equal(entry[0], key):
                break
            index = (index + step) & mask
        self._slots[index] = _TOMBSTONE
        self._live -= 1
        self._tombstones += 1
        self._mods += 1
        if self._tombstones > self._live:
            self._rehash(len(self._slots))
        return True

    def items(self):
        """Yield each live (key, datum) once, in unspecified order."""
        self._check_live()
        mods = self._mods
        for entry in self._slots:
            if mods != self._mods:
                raise ContractFault("HashTable mutated during iteration")
            if entry is not None and entry is not _TOMBSTONE:
                yield entry

    def destroy(self) -> None:
        """Release the table's storage from the accounting registry."""
        accounting.release(self._token)
        self._slots = []
        self._live = 0
        self._tombstones = 0
