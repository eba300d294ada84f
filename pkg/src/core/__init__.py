"""
Core Arithmetic
===============
IEEE 754 codec, arbitrary-precision unsigned integers and exact decimal
expansion. Modules here depend only on src.models.ieee and each other.
"""
