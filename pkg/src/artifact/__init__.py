"""Braid groups, the quotient B~_n and the central extensions G(n), G0(9)."""

__version__ = "0.1.0"
