"""liecert: exact certificates for bounded-multiplicity branching.

Computes structural invariants of simple real Lie algebras (minimal
nilpotent orbit dimensions, gradings by highest-root elements), builds
matrix models with exact rational arithmetic, verifies coisotropic
slice conditions by linear algebra, and decides which certification
route applies to a symmetric pair or tensor-product setting.
"""

__version__ = "1.0.0"

from .roots import CartanType, GradingProfile, n_complex_of_type  # noqa: F401
