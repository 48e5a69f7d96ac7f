"""Exact computations with reduced words of the longest element in type A.

Commutation classes, chamber sets, Lusztig cones, piecewise-linear transition
maps and their regions of linearity, the rectangle algorithm, string
reparametrizations and PBW straightening, with rank 4 verified end to end.
"""

__version__ = "0.1.0"
