"""Finite-dimensional quantum channel algebra and the quasi-superactivation construction.

The subpackages are layered bottom-up:

* :mod:`quasicap.linalg` - tensor products, partial trace/transpose, Jacobi eigensolver, entropies
* :mod:`quasicap.channels` - Kraus channels, Stinespring isometries, composition
* :mod:`quasicap.zoo` - depolarizing channel, 1->N universal cloner, embeddings, purifications
* :mod:`quasicap.capacity` - Holevo quantity and closed-form capacities
* :mod:`quasicap.separability` - PPT tests, determinant criterion, threshold bisection
* :mod:`quasicap.joint` - entangled auxiliary input, broadcast simulation, capacity sweep
"""

from quasicap.errors import (
    ContractError,
    DimensionError,
    NoCrossingError,
    NormalizationError,
    ParameterError,
    QuasiCapError,
)

__version__ = "0.1.0"

__all__ = [
    "ContractError",
    "DimensionError",
    "NoCrossingError",
    "NormalizationError",
    "ParameterError",
    "QuasiCapError",
    "__version__",
]
