"""Bidirectional map between symbol strings and dense integer indices.

Strings are length-delimited sequences of fixed-width unsigned symbols
(the alphabet is arbitrary; pick the symbol width at construction).
The first distinct string inserted gets index 0, the next 1, and so on,
so n strings always occupy exactly the indices 0..n-1.  The inverse map
walks parent links from the terminal node back to the root.

Each node keeps its children in a CompactTable, which keeps per-node
overhead at the minimum the child count allows.  Strings cannot be
deleted: removal would punch holes in the dense numbering.
"""

from . import accounting, wire
from .compact_table import CompactTable
from .errors import ContractFault, DecodeFault, DomainFault, RangeFault

_HEADER_BYTES = 48
_NODE_BYTES = 24  # parent id, incoming symbol, assigned index


class _TrieNode:
    __slots__ = ("children", "parent", "symbol", "index")

    def __init__(self, children: CompactTable, parent: int, symbol: int | None):
        self.children = children
        self.parent = parent
        self.symbol = symbol
        self.index = None


class Trie:
    """Interns symbol sequences as consecutive unsigned integers."""

    __slots__ = ("symbol_width", "_nodes", "_index_to_node", "_token")

    def __init__(self, symbol_width: int = 4):
        if symbol_width not in (1, 2, 4, 8):
            raise DomainFault("symbol_width must be 1, 2, 4, or 8, got %r" % symbol_width)
        self.symbol_width = symbol_width
        self._nodes: list[_TrieNode] = []
        self._index_to_node: list[int] = []
        self._token = accounting.register(_HEADER_BYTES)
        self._new_node(parent=-1, symbol=None)  # root spells the empty string

    def _check_live(self):
        if self._token.released:
            raise ContractFault("operation on a destroyed Trie")

    def _new_node(self, parent: int, symbol: int | None) -> int:
        children = CompactTable(key_size=self.symbol_width, datum_size=8)
        self._nodes.append(_TrieNode(children, parent, symbol))
        self._update_footprint()
        return len(self._nodes) - 1

    def _update_footprint(self):
        footprint = _HEADER_BYTES + _NODE_BYTES * len(self._nodes) + 8 * len(self._index_to_node)
        accounting.resize(self._token, footprint)

    def _symbol_bytes(self, symbol: int) -> bytes:
        if symbol < 0 or symbol >> (8 * self.symbol_width):
            raise RangeFault(
                "symbol %d does not fit in %d bytes" % (symbol, self.symbol_width)
            )
        return symbol.to_bytes(self.symbol_width, "big")

    def __len__(self) -> int:
        return len(self._index_to_node)

    def index_of(self, symbols) -> int:
        """Return the index of the sequence, interning it if new."""
        self._check_live()
        node_id = 0
        for symbol in symbols:
            key = self._symbol_bytes(symbol)
            node = self._nodes[node_id]
            child = node.children.lookup(key)
            if child is None:
                child_id = self._new_node(parent=node_id, symbol=symbol)
                node.children.insert(key, child_id.to_bytes(8, "big"))
                node_id = child_id
            else:
                node_id = int.from_bytes(child, "big")
        node = self._nodes[node_id]
        if node.index is None:
            node.index = len(self._index_to_node)
            self._index_to_node.append(node_id)
            self._update_footprint()
        return node.index

    def find(self, symbols) -> int | None:
        """Return the sequence's index if already interned, else None."""
        self._check_live()
        node_id = 0
        for symbol in symbols:
            key = self._symbol_bytes(symbol)
            child = self._nodes[node_id].children.lookup(key)
            if child is None:
                return None
            node_id = int.from_bytes(child, "big")
        return self._nodes[node_id].index

    def string_of(self, index: int) -> tuple[int, ...]:
        """Return the exact sequence that was assigned `index`."""
        self._check_live()
        if not 0 <= index < len(self._index_to_node):
            raise RangeFault(
                "index %d out of range for %d strings" % (index, len(self._index_to_node))
            )
        symbols = []
        node = self._nodes[self._index_to_node[index]]
        while node.symbol is not None:
            symbols.append(node.symbol)
            node = self._nodes[node.parent]
        symbols.reverse()
        return tuple(symbols)

    def write(self, stream) -> None:
        """Write the string count, then each interned string in index order."""
        self._check_live()
        wire.write_uint(stream, len(self), 8)
        for index in range(len(self)):
            symbols = self.string_of(index)
            wire.write_uint(stream, len(symbols), 8)
            for symbol in symbols:
                wire.write_uint(stream, symbol, self.symbol_width)

    @classmethod
    def read(cls, stream, symbol_width: int) -> "Trie":
        """Inverse of write: re-intern every string in index order."""
        trie = cls(symbol_width)
        try:
            count = wire.read_uint(stream, 8)
            for expected in range(count):
                length = wire.read_uint(stream, 8)
                symbols = [wire.read_uint(stream, symbol_width) for _ in range(length)]
                assigned = trie.index_of(symbols)
                if assigned != expected:
                    raise DecodeFault(
                        "duplicate string in stream: index %d re-assigned as %d"
                        % (expected, assigned)
                    )
        except BaseException:
            trie.destroy()
            raise
        return trie

    def destroy(self) -> None:
        """Release the trie and every node's child table."""
        self._check_live()
        for node in self._nodes:
            node.children.destroy()
        accounting.release(self._token)
        self._nodes = []
        self._index_to_node = []
