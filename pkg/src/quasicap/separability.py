"""Entanglement detection by partial transposition."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from quasicap.errors import DimensionError, NoCrossingError, ParameterError
from quasicap.linalg import ATOL, as_matrix, hermitian_eigenvalues, ket, partial_transpose, projector

#: Bisection stops once the bracket is narrower than this.
BISECTION_TOL = 1e-9
BISECTION_MAX_ITER = 60


@dataclass(frozen=True)
class PptVerdict:
    """Spectrum of the partial transpose.

    ``entangled`` means the smallest eigenvalue is below ``-1e-9``. For ``2x2`` and
    ``2x3`` systems a non-entangled verdict also certifies separability
    (``conclusive``); for larger systems it is only a negative-partial-transpose witness.
    """

    min_pt_eigenvalue: float
    entangled: bool
    eigenvalues: list[float]
    conclusive: bool = True


@dataclass(frozen=True)
class DeterminantReport:
    """Leading principal minors of the partial transpose of a two-qubit state.

    ``d1`` is the 3x3 leading minor, ``d2`` the full determinant, ``d3`` the top-left
    entry and ``d4`` the 2x2 leading minor.
    """

    d1: float
    d2: float
    d3: float
    d4: float

    @property
    def witness(self) -> bool:
        return self.d1 < 0 or self.d2 < 0


def ppt_verdict(rho, dims: Sequence[int] = (2, 2), cut: int = 1) -> PptVerdict:
    """Peres-Horodecki test of a bipartite state, transposing subsystem ``cut``.

    :raises DimensionError: unless ``dims`` has exactly two entries matching ``rho``.
    """
    if len(dims) != 2:
        raise DimensionError(f"PPT verdict needs a bipartite split, got dims {tuple(dims)}")
    if cut not in (0, 1):
        raise DimensionError(f"cut must be 0 or 1, got {cut}")
    pt = partial_transpose(rho, dims, cut)
    eig = hermitian_eigenvalues(pt)
    lo = float(eig[0])
    return PptVerdict(lo, lo < -ATOL, [float(e) for e in eig], dims[0] * dims[1] <= 6)


def min_pt_eigenvalue(rho, dims: Sequence[int] = (2, 2), cut: int = 1) -> float:
    return ppt_verdict(rho, dims, cut).min_pt_eigenvalue


def determinant_criterion(rho) -> DeterminantReport:
    """Leading minors of ``rho^{T_B}`` for a two-qubit ``rho``."""
    rho = as_matrix(rho)
    if rho.shape != (4, 4):
        raise DimensionError(f"determinant criterion needs a two-qubit state, got {rho.shape}")
    pt = partial_transpose(rho, (2, 2), 1)
    d1 = np.linalg.det(pt[:3, :3]).real
    d2 = np.linalg.det(pt).real
    d3 = pt[0, 0].real
    d4 = (pt[0, 0] * pt[1, 1] - pt[0, 1] * pt[1, 0]).real
    return DeterminantReport(float(d1), float(d2), float(d3), float(d4))


def local_output_eigenvalues_formula(n: int) -> list[float]:
    """Closed-form eigenvalue set claimed for the local pair of a 1->N cloner on a product input.

    ``{1/6, 1/6, 1/3 +- sqrt(2(5 + 4M + M^2)) / (6N)}`` with ``M = N - 1``.
    """
    if int(n) != n or n < 2:
        raise ParameterError(f"formula needs N >= 2, got {n}")
    m = n - 1
    r = math.sqrt(2 * (5 + 4 * m + m * m)) / (6 * n)
    return [1 / 6, 1 / 6, 1 / 3 + r, 1 / 3 - r]


def printed_local_matrix(n: int, alpha: complex, beta: complex) -> np.ndarray:
    """The 4x4 local-pair matrix whose spectrum the closed form above is said to give.

    Built entry by entry with ``M = N - 1``; it annihilates ``|01> - |10>`` so it
    always has a zero eigenvalue.
    """
    if int(n) != n or n < 2:
        raise ParameterError(f"matrix needs N >= 2, got {n}")
    m = n - 1
    a2, b2 = abs(alpha) ** 2, abs(beta) ** 2
    c = np.conj(alpha) * beta * (m + 3) / (m + 1)
    rho = np.array(
        [
            [((3 * m + 5) * b2 + (m - 1) * a2) / (m + 1), c, c, 0],
            [np.conj(c), 1, 1, c],
            [np.conj(c), 1, 1, c],
            [0, np.conj(c), np.conj(c), ((3 * m + 5) * a2 + (m - 1) * b2) / (m + 1)],
        ],
        dtype=complex,
    )
    return rho / 6


def entanglement_threshold(
    family: Callable[[float], np.ndarray],
    lo: float,
    hi: float,
    dims: Sequence[int] = (2, 2),
    tol: float = BISECTION_TOL,
) -> float:
    """Parameter at which the smallest partial-transpose eigenvalue of ``family`` crosses zero.

    The crossing must be single and bracketed by ``[lo, hi]``.

    :raises NoCrossingError: if the eigenvalue has the same sign at both ends.
    """
    f_lo = min_pt_eigenvalue(family(lo), dims)
    f_hi = min_pt_eigenvalue(family(hi), dims)
    if f_lo * f_hi > 0:
        raise NoCrossingError(
            f"min PT eigenvalue has the same sign at {lo} ({f_lo:.3g}) and {hi} ({f_hi:.3g})"
        )
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    for _ in range(BISECTION_MAX_ITER):
        mid = 0.5 * (lo + hi)
        f_mid = min_pt_eigenvalue(family(mid), dims)
        if f_mid == 0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        if hi - lo < tol:
            break
    return 0.5 * (lo + hi)


def werner_state(visibility: float) -> np.ndarray:
    """``v |Phi+><Phi+| + (1 - v) I/4``; entangled exactly for ``v > 1/3``."""
    bell = (ket((0, 0)) + ket((1, 1))) / math.sqrt(2)
    return visibility * projector(bell) + (1 - visibility) * np.eye(4) / 4
