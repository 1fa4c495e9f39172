"""Two cloners fed halves of a partially entangled pair, and the resulting capacity curve.

Each site runs the 1->2 cloner on one qubit of ``sqrt(omega)|00> + sqrt(1-omega)|11>``.
The pairs of interest are the *local* pair (both clones from the same site) and the
*remote* pair (one clone from each site). The capacity figure attached to each
``omega`` is the cloner's register-output mutual information, gated to zero outside
the window where the remote pair is entangled.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from quasicap.capacity import cloner_mutual_info
from quasicap.errors import ParameterError
from quasicap.linalg import kron, partial_trace, projector
from quasicap.separability import min_pt_eigenvalue
from quasicap.zoo import bell_purification, cloner_isometry, symmetric_embedding

_QUBITS = (2, 2, 2, 2, 2, 2)  # O1 D1 F1 O2 D2 F2


@dataclass(frozen=True)
class AuxiliaryInput:
    """Schmidt weight ``omega`` of the auxiliary pair; ``kappa = 1 - omega``."""

    omega: float

    def __post_init__(self):
        if not 0.0 <= self.omega <= 0.5:
            raise ParameterError(f"omega must lie in [0, 1/2], got {self.omega}")

    @property
    def kappa(self) -> float:
        return 1.0 - self.omega

    @property
    def alpha(self) -> float:
        return math.sqrt(self.omega)

    @property
    def beta(self) -> float:
        return math.sqrt(self.kappa)


@dataclass(frozen=True)
class OmegaWindow:
    """Half-open interval ``[lower, upper)`` of ``omega`` with positive joint capacity."""

    @property
    def lower(self) -> float:
        return 0.5 - math.sqrt(39) / 16

    @property
    def upper(self) -> float:
        return 0.5

    def __contains__(self, omega: float) -> bool:
        return self.lower <= omega < self.upper


WINDOW = OmegaWindow()
LOCAL_THRESHOLD = 0.5 - math.sqrt(48) / 16


@dataclass(frozen=True)
class SweepRecord:
    omega: float
    raw_capacity: float
    gated_capacity: float
    remote_min_pt_eig: float
    local_min_pt_eig: float

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BroadcastResult:
    global_state: np.ndarray
    rho_local: np.ndarray
    rho_remote: np.ndarray
    rho_remote_swapped: np.ndarray


def aux_input_state(aux: AuxiliaryInput) -> np.ndarray:
    return projector(bell_purification(aux.omega))


def local_output_matrix(aux: AuxiliaryInput, include_coherences: bool = True) -> np.ndarray:
    """State of the two clones produced at one site.

    ``(2 omega/3)|00><00| + (1/6)(|01><01| + |10><10|) + (2 kappa/3)|11><11|``, plus
    ``(1/6)(|01><10| + |10><01|)`` when ``include_coherences`` is set. Without the
    coherences the matrix is diagonal and therefore never entangled.
    """
    rho = np.diag([2 * aux.omega / 3, 1 / 6, 1 / 6, 2 * aux.kappa / 3]).astype(complex)
    if include_coherences:
        rho[1, 2] = rho[2, 1] = 1 / 6
    return rho


def remote_output_matrix(aux: AuxiliaryInput) -> np.ndarray:
    """State of one clone from each site."""
    a, b = aux.alpha, aux.beta
    rho = np.diag([(24 * a**2 + 1) / 36, 5 / 36, 5 / 36, (24 * b**2 + 1) / 36]).astype(complex)
    rho[0, 3] = rho[3, 0] = 4 * a * b / 9
    return rho


def _site_isometry() -> np.ndarray:
    """Qubit -> O (x) D (x) F for one 1->2 cloner, with the clones written as two qubits."""
    v = cloner_isometry(2)
    emb = symmetric_embedding(2).matrix
    return np.kron(emb, np.eye(v.out_dim_e)) @ v.matrix


def broadcast_simulation(aux: AuxiliaryInput) -> BroadcastResult:
    """Run both cloners on the auxiliary pair and reduce the 64-dimensional output.

    The global state is ordered ``O1 D1 F1 O2 D2 F2``; ``rho_local`` is on ``O1 D1``,
    ``rho_remote`` on ``O1 D2`` and ``rho_remote_swapped`` on ``O2 D1``.
    """
    w = _site_isometry()
    psi = kron(w, w) @ bell_purification(aux.omega)
    glob = np.outer(psi, psi.conj())
    local = partial_trace(glob, _QUBITS, [2, 3, 4, 5])
    remote = partial_trace(glob, _QUBITS, [1, 2, 3, 5])
    d1_o2 = partial_trace(glob, _QUBITS, [0, 2, 4, 5])
    o2_d1 = d1_o2.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
    return BroadcastResult(glob, local, remote, o2_d1)


def quasi_capacity(aux: AuxiliaryInput, n: int = 2) -> SweepRecord:
    """Capacity figure at one ``omega`` with the partial-transpose witnesses attached.

    ``raw_capacity`` is the cloner mutual information; ``gated_capacity`` equals it on
    ``[0.5 - sqrt(39)/16, 0.5)`` and is zero elsewhere, including ``omega = 0.5``.
    """
    if int(n) != n or n < 2:
        raise ParameterError(f"joint structure needs N >= 2, got {n}")
    raw = cloner_mutual_info(n, aux.omega).value
    gated = raw if aux.omega in WINDOW else 0.0
    return SweepRecord(
        omega=aux.omega,
        raw_capacity=raw,
        gated_capacity=max(gated, 0.0),
        remote_min_pt_eig=min_pt_eigenvalue(remote_output_matrix(aux)),
        local_min_pt_eig=min_pt_eigenvalue(local_output_matrix(aux, True)),
    )


def sweep(omega_lo: float = 0.0, omega_hi: float = 0.5, steps: int = 101, n: int = 2) -> list[SweepRecord]:
    """:func:`quasi_capacity` on a uniform grid including both endpoints, ordered by ``omega``."""
    if not 0.0 <= omega_lo < omega_hi <= 0.5:
        raise ParameterError(f"need 0 <= omega_lo < omega_hi <= 0.5, got [{omega_lo}, {omega_hi}]")
    if int(steps) != steps or steps < 2:
        raise ParameterError(f"steps must be an integer >= 2, got {steps}")
    grid = np.linspace(omega_lo, omega_hi, int(steps))
    return [quasi_capacity(AuxiliaryInput(float(w)), n) for w in grid]


def remote_family(omega: float) -> np.ndarray:
    return remote_output_matrix(AuxiliaryInput(omega))


def local_family(omega: float) -> np.ndarray:
    return local_output_matrix(AuxiliaryInput(omega), include_coherences=True)

