"""Exact construction and verification of a 4095-point near octagon, its
suboctagons, the derived tower of strongly regular graphs, and the valuation
geometry of its 315-point suboctagon."""

__version__ = "0.1.0"
