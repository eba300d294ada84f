"""
Shortest Float Printing Toolkit
===============================
Binary-to-decimal conversion (Dragon2, Dragon4, cached-power fast path),
string rendering, exact round-trip oracles and a benchmark harness.
"""

__version__ = "1.0.0"
