"""
cremona-locus: dimension, fixed components and base locus of linear systems
L3(d; m_1, ..., m_8) of surfaces in P^3 through at most 8 general fat points.
"""

__version__ = "0.1.0"
