"""
eigencount: eigenvalue statistics of 2x2 matrices.

Exact counts of integer matrices with a prescribed integer eigenvalue, the
limiting densities V and W, and Monte Carlo checks of both.
"""

__version__ = "0.1.0"
