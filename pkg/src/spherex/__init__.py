"""Exact invariants of spherical 3-manifold groups.

Builds the small finite subgroups of U(2), their irreducible characters, and
the xi-invariants / Cheeger-Chern-Simons numbers that classify them, all in
exact cyclotomic arithmetic.
"""

from .cyclo import Cyc, cyc_make, cyc_as_rational, root_of_unity_log
from .errors import SpherexError

__version__ = "0.1.0"
