#!/usr/bin/env python3
"""The wire format: big-endian, self-delimiting, byte-for-byte repeatable.

Several objects are written back to back into one buffer; the readers
consume exactly the bytes the writers produced, so no separators or
external lengths are needed.
"""

from io import BytesIO

from pakit import Trie, UnigramTable, Vector, balanced, fixedlog, wire

stream = BytesIO()

wire.write_uint(stream, 45426, 4)
wire.write_block(stream, b"payload")

v = Vector(2, [b"ab", b"cd", b"ef"])
v.write(stream)

trie = Trie(symbol_width=1)
for word in (b"one", b"two", b"three"):
    trie.index_of(word)
trie.write(stream)

u = UnigramTable(4)
u.increment(2, by=777)
u.write(stream)

balanced.write(stream, balanced.from_real(-3.0))
fixedlog.write(stream, fixedlog.from_real(0.25))

data = stream.getvalue()
print("one buffer, six objects, %d bytes:" % len(data))
print(data.hex(" ", -8))
print()

reader = BytesIO(data)
print("uint:      ", wire.read_uint(reader, 4))
print("block:     ", wire.read_block(reader))
v2 = Vector.read(reader, element_size=2)
print("vector:    ", list(v2))
trie2 = Trie.read(reader, symbol_width=1)
print("trie:      ", [bytes(trie2.string_of(i)) for i in range(len(trie2))])
u2 = UnigramTable.read(reader)
print("unigram:   ", [u2.count(s) for s in range(4)], "width", u2.counter_width)
print("balanced:  ", balanced.read(reader))
print("fixedlog:  ", fixedlog.read(reader))
print("leftover bytes:", len(reader.read()))

second = BytesIO()
wire.write_uint(second, 45426, 4)
wire.write_block(second, b"payload")
v2.write(second)
trie2.write(second)
u2.write(second)
balanced.write(second, balanced.from_real(-3.0))
fixedlog.write(second, fixedlog.from_real(0.25))
print("reserialized stream identical:", second.getvalue() == data)

for obj in (v, trie, u, v2, trie2, u2):
    obj.destroy()
