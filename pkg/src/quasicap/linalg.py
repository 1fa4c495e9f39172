"""Dense complex linear algebra over small Hilbert spaces.

Matrices are plain :class:`numpy.ndarray` objects of dtype ``complex128``.
Subsystems are ordered left to right and basis indices are lexicographic,
so for two qubits the basis is ``|00>, |01>, |10>, |11>``.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from quasicap.errors import ContractError, DimensionError, NormalizationError

#: Tolerance for structural invariants (Hermiticity, trace, completeness).
ATOL = 1e-9
#: Off-diagonal norm at which the Jacobi sweeps stop.
SOLVER_TOL = 1e-13
#: Largest matrix side produced by :func:`kron`.
MAX_DIM = 4096
#: Maximum number of cyclic Jacobi sweeps.
MAX_SWEEPS = 100


def as_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a finite 2-D complex array."""
    a = np.asarray(m, dtype=complex)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise DimensionError(f"expected a non-empty matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ContractError("matrix has non-finite entries")
    return a


def ket(index: int | Sequence[int], dims: int | Sequence[int] = 2) -> np.ndarray:
    """Computational basis vector ``|index>``.

    ``ket((0, 1, 1))`` gives ``|011>`` on three qubits; ``ket(2, 3)`` gives ``|2>`` on a qutrit.
    """
    if isinstance(index, (int, np.integer)):
        index = (int(index),)
    if isinstance(dims, (int, np.integer)):
        dims = (int(dims),) * len(index)
    if len(dims) != len(index):
        raise DimensionError("index and dims have different lengths")
    v = np.zeros(int(np.prod(dims)), dtype=complex)
    v[np.ravel_multi_index(tuple(index), tuple(dims))] = 1.0
    return v


def projector(psi) -> np.ndarray:
    """Rank-one density matrix ``|psi><psi|`` of a normalised vector."""
    psi = np.asarray(psi, dtype=complex).ravel()
    norm = np.vdot(psi, psi).real
    if abs(norm - 1.0) > ATOL:
        raise NormalizationError(f"state vector has squared norm {norm}, expected 1")
    return np.outer(psi, psi.conj())


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.transpose(m))


def is_hermitian(m, atol: float = ATOL) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and bool(np.max(np.abs(m - dagger(m))) <= atol)


def check_density(rho, atol: float = ATOL) -> np.ndarray:
    """Validate and return ``rho`` as a density matrix.

    :raises ContractError: if ``rho`` is not Hermitian, not unit trace or has a
        negative eigenvalue beyond ``atol``.
    """
    rho = as_matrix(rho)
    if rho.shape[0] != rho.shape[1]:
        raise DimensionError(f"density matrix must be square, got {rho.shape}")
    if not is_hermitian(rho, atol):
        raise ContractError("density matrix is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > atol:
        raise ContractError(f"density matrix has trace {tr}, expected 1")
    if hermitian_eigenvalues(rho)[0] < -atol:
        raise ContractError("density matrix has a negative eigenvalue")
    return rho


def _check_dims(n: int, dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims) or math.prod(dims) != n:
        raise DimensionError(f"subsystem dims {dims} do not factor a matrix of size {n}")
    return dims


def kron(a, b) -> np.ndarray:
    """Kronecker product ``a (x) b``."""
    a, b = as_matrix(a), as_matrix(b)
    rows, cols = a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]
    if max(rows, cols) > MAX_DIM:
        raise DimensionError(f"kron result {rows}x{cols} exceeds the {MAX_DIM} limit")
    return np.kron(a, b)


def partial_trace(rho, dims: Sequence[int], traced: int | Sequence[int]) -> np.ndarray:
    """Trace out the subsystem(s) ``traced`` of a square matrix on ``dims``.

    Examples
    --------
    >>> bell = (ket((0, 0)) + ket((1, 1))) / np.sqrt(2)
    >>> partial_trace(projector(bell), [2, 2], 0).real
    array([[0.5, 0. ],
           [0. , 0.5]])
    """
    rho = as_matrix(rho)
    if rho.shape[0] != rho.shape[1]:
        raise DimensionError("partial trace needs a square matrix")
    dims = _check_dims(rho.shape[0], dims)
    traced = {traced} if isinstance(traced, (int, np.integer)) else set(traced)
    if not traced or any(t < 0 or t >= len(dims) for t in traced):
        raise DimensionError(f"traced subsystem {sorted(traced)} out of range for dims {dims}")
    keep = [i for i in range(len(dims)) if i not in traced]
    n = len(dims)
    t = rho.reshape(dims + dims)
    # einsum subscripts: row axes 0..n-1, column axes n..2n-1; traced pairs share a letter.
    letters = [chr(ord("a") + i) for i in range(2 * n)]
    for i in traced:
        letters[n + i] = letters[i]
    out = [letters[i] for i in keep] + [letters[n + i] for i in keep]
    reduced = np.einsum("".join(letters) + "->" + "".join(out), t)
    d = math.prod(dims[i] for i in keep) if keep else 1
    return reduced.reshape(d, d)


def partial_transpose(rho, dims: Sequence[int], transposed: int | Sequence[int]) -> np.ndarray:
    """Transpose the indices of subsystem(s) ``transposed``, leaving the rest untouched.

    For two subsystems with the second transposed this is the block-wise
    transpose: every ``dims[1] x dims[1]`` block is transposed in place.
    """
    rho = as_matrix(rho)
    if rho.shape[0] != rho.shape[1]:
        raise DimensionError("partial transpose needs a square matrix")
    dims = _check_dims(rho.shape[0], dims)
    sel = {transposed} if isinstance(transposed, (int, np.integer)) else set(transposed)
    if any(t < 0 or t >= len(dims) for t in sel):
        raise DimensionError(f"transposed subsystem {sorted(sel)} out of range for dims {dims}")
    n = len(dims)
    axes = list(range(2 * n))
    for i in sel:
        axes[i], axes[n + i] = n + i, i
    return rho.reshape(dims + dims).transpose(axes).reshape(rho.shape)


def _jacobi(a: np.ndarray, want_vectors: bool) -> tuple[np.ndarray, np.ndarray | None]:
    """Cyclic complex Jacobi rotations on a Hermitian matrix (copied)."""
    a = a.copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex) if want_vectors else None
    scale = max(1.0, float(np.linalg.norm(a)))
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(MAX_SWEEPS):
        # Direct sum over off-diagonal entries; ||A||^2 - ||diag||^2 cancels catastrophically.
        if np.linalg.norm(a[offdiag]) <= SOLVER_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                mag = abs(g)
                if mag < 1e-300:
                    continue
                phase = g / mag
                theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # J = D R with D = diag(1, conj(phase)) on (p, q) making a[p, q] real.
                jpp, jpq = c, s
                jqp, jqq = -s * phase.conjugate(), c * phase.conjugate()
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = col_p * jpp + col_q * jqp
                a[:, q] = col_p * jpq + col_q * jqq
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = np.conj(jpp) * row_p + np.conj(jqp) * row_q
                a[q, :] = np.conj(jpq) * row_p + np.conj(jqq) * row_q
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = vp * jpp + vq * jqp
                    v[:, q] = vp * jpq + vq * jqq
    return np.diag(a).real.copy(), v


def hermitian_eigh(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and column eigenvectors of a Hermitian matrix."""
    m = _hermitian_input(m)
    w, v = _jacobi(m, want_vectors=True)
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigenvalues(m) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted ascending.

    The input is symmetrised as ``(m + m^dagger) / 2`` before the Jacobi sweeps.

    :raises ContractError: if ``m`` deviates from Hermitian by more than :data:`ATOL`.
    """
    m = _hermitian_input(m)
    w, _ = _jacobi(m, want_vectors=False)
    return np.sort(w)


def _hermitian_input(m) -> np.ndarray:
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"eigenproblem needs a square matrix, got {m.shape}")
    if not is_hermitian(m):
        raise ContractError("matrix is not Hermitian within tolerance")
    return 0.5 * (m + dagger(m))


def shannon_entropy(p) -> float:
    """Base-2 Shannon entropy with ``0 log 0 = 0``.

    Entries down to ``-1e-12`` are clamped to zero.

    :raises NormalizationError: if the entries do not sum to one within :data:`ATOL`.
    """
    p = np.asarray(p, dtype=float).ravel()
    if np.any(p < -1e-12):
        raise NormalizationError("probabilities must be non-negative")
    p = np.clip(p, 0.0, None)
    if abs(p.sum() - 1.0) > ATOL:
        raise NormalizationError(f"probabilities sum to {p.sum()}, expected 1")
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)) + 0.0)


def von_neumann_entropy(rho) -> float:
    """Base-2 von Neumann entropy, the Shannon entropy of the spectrum."""
    rho = check_density(rho)
    lam = hermitian_eigenvalues(rho)
    lam = np.clip(lam, 0.0, None)
    return shannon_entropy(lam / lam.sum())


def random_density(dim: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Random density matrix from a complex Ginibre matrix of the given rank."""
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ dagger(g)
    return rho / np.trace(rho).real


def random_pure_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random normalised state vector."""
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)
