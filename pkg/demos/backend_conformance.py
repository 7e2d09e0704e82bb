#!/usr/bin/env python3
"""Running the shared conformance checks against every backend.

The same law-and-accuracy suite drives all four probability
representations through their uniform descriptors; each backend is held
to its own tolerance (quantization for fixedlog, single-precision for
balanced, near-exactness for the two double-based ones).
"""

from pakit import pr

for backend in pr.backends():
    report = pr.conformance(backend, sample_count=5000, seed=123)
    print(report.as_text())
    print()

print("machine-readable form of the last report:")
for line in report.as_key_values():
    print(line)
