"""Memory-minimal sorted association table.

Entries live in one contiguous array of (key, datum) byte pairs kept
strictly sorted by key, so lookups are O(log n) binary searches while
inserts and deletes shift the tail in O(n).  Storage is always exactly
entry_count * pair_size bytes plus a small header, which is the point:
this table trades mutation speed for the smallest possible footprint,
and is the building block for trie nodes.

Keys and data are opaque fixed-size byte blocks.  The default key order
is lexicographic, which for big-endian fixed-width unsigned integers
coincides with numeric order.
"""

from . import accounting, wire
from .errors import ContractFault, DecodeFault, DomainFault, RangeFault

_HEADER_BYTES = 48


class CompactTable:
    """Sorted (key, datum) table over fixed-size byte blocks."""

    __slots__ = ("key_size", "datum_size", "key_compare", "_pairs", "_count", "_token")

    def __init__(self, key_size: int, datum_size: int, key_compare=None):
        if key_size < 1:
            raise DomainFault("key_size must be >= 1, got %d" % key_size)
        if datum_size < 0:
            raise DomainFault("datum_size must be >= 0, got %d" % datum_size)
        self.key_size = key_size
        self.datum_size = datum_size
        self.key_compare = key_compare
        self._pairs = bytearray()
        self._count = 0
        self._token = accounting.register(_HEADER_BYTES)

    def _check_live(self):
        if self._token.released:
            raise ContractFault("operation on a destroyed CompactTable")

    def _check_key(self, key) -> bytes:
        key = bytes(key)
        if len(key) != self.key_size:
            raise ContractFault("key is %d bytes, expected %d" % (len(key), self.key_size))
        return key

    def _key_at(self, rank: int) -> bytes:
        offset = rank * (self.key_size + self.datum_size)
        return bytes(self._pairs[offset : offset + self.key_size])

    def _datum_at(self, rank: int) -> bytes:
        offset = rank * (self.key_size + self.datum_size) + self.key_size
        return bytes(self._pairs[offset : offset + self.datum_size])

    def _search(self, key: bytes) -> tuple[bool, int]:
        """Binary search: (True, rank) if present, else (False, insertion rank)."""
        compare = self.key_compare
        lo, hi = 0, self._count
        while lo < hi:
            mid = (lo + hi) // 2
            probe = self._key_at(mid)
            if compare is None:
                order = -1 if key < probe else (0 if key == probe else 1)
            else:
                order = compare(key, probe)
            if order == 0:
                return True, mid
            if order < 0:
                hi = mid
            else:
                lo = mid + 1
        return False, lo

    def _update_footprint(self):
        accounting.resize(self._token, _HEADER_BYTES + len(self._pairs))

    def __len__(self) -> int:
        return self._count

    def lookup(self, key):
        """Return the datum bytes paired with `key`, or None if absent."""
        self._check_live()
        found, rank = self._search(self._check_key(key))
        return self._datum_at(rank) if found else None

    def __contains__(self, key) -> bool:
        return self.lookup(key) is not None

    def insert(self, key, datum) -> bool:
        """Map key to datum; returns True if an existing datum was replaced."""
        self._check_live()
        key = self._check_key(key)
        datum = bytes(datum)
        if len(datum) != self.datum_size:
            raise ContractFault(
                "datum is %d bytes, expected %d" % (len(datum), self.datum_size)
            )
        found, rank = self._search(key)
        pair_size = self.key_size + self.datum_size
        offset = rank * pair_size
        if found:
            self._pairs[offset + self.key_size : offset + pair_size] = datum
            return True
        self._pairs[offset:offset] = key + datum
        self._count += 1
        self._update_footprint()
        return False

    def delete(self, key) -> bool:
        """Remove key if present; returns True iff it was there."""
        self._check_live()
        found, rank = self._search(self._check_key(key))
        if not found:
            return False
        pair_size = self.key_size + self.datum_size
        offset = rank * pair_size
        del self._pairs[offset : offset + pair_size]
        self._count -= 1
        self._update_footprint()
        return True

    def nth(self, rank: int) -> tuple[bytes, bytes]:
        """Return the rank-th smallest (key, datum); 0 <= rank < len."""
        self._check_live()
        if not 0 <= rank < self._count:
            raise RangeFault("rank %d out of range for %d entries" % (rank, self._count))
        return self._key_at(rank), self._datum_at(rank)

    def items(self):
        """Yield (key, datum) pairs in key order."""
        self._check_live()
        for rank in range(self._count):
            yield self._key_at(rank), self._datum_at(rank)

    def write(self, stream) -> None:
        """Write 8-byte entry count, then the raw sorted pair bytes."""
        self._check_live()
        wire.write_uint(stream, self._count, 8)
        stream.write(bytes(self._pairs))

    @classmethod
    def read(cls, stream, key_size: int, datum_size: int, key_compare=None) -> "CompactTable":
        """Inverse of write; sizes and order are supplied by the caller."""
        count = wire.read_uint(stream, 8)
        payload = wire.read_exact(stream, count * (key_size + datum_size))
        table = cls(key_size, datum_size, key_compare)
        table._pairs = bytearray(payload)
        table._count = count
        for rank in range(1, count):  # stream must already obey the key order
            previous, current = table._key_at(rank - 1), table._key_at(rank)
            order = (previous > current) - (previous < current) if key_compare is None \
                else key_compare(previous, current)
            if order >= 0:
                table.destroy()
                raise DecodeFault("stream keys not strictly sorted at rank %d" % rank)
        table._update_footprint()
        return table

    def destroy(self) -> None:
        """Release the table's storage from the accounting registry."""
        accounting.release(self._token)
        self._pairs = bytearray()
        self._count = 0
