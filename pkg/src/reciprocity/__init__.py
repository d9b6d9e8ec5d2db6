"""Exact arithmetic for quadratic, cubic and biquadratic reciprocity.

Modules: ``integers`` (rational helpers), ``finite_field`` (F_{p^n}),
``eisenstein`` and ``gaussian`` (the rings Z[w] and Z[i]), ``characters``
(Gauss and Jacobi sums), ``cubic`` (cubic residue character) and
``sweeps`` (batch verification).
"""

from .errors import ConsistencyError, DomainError, ReciprocityPreconditionError, ResourceError

__all__ = ["ConsistencyError", "DomainError", "ReciprocityPreconditionError", "ResourceError"]
__version__ = "0.1.0"
