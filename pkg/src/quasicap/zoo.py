"""Concrete channels and states: depolarizing qudit channel, the 1->N universal qubit cloner,
symmetric-subspace embedding and two-qubit purifications."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from quasicap.channels import Isometry, KrausChannel, apply
from quasicap.errors import DimensionError, ParameterError
from quasicap.linalg import MAX_DIM, ket, partial_trace, projector


@dataclass(frozen=True)
class DepolarizingParams:
    d: int = 2
    p: float = 1.0

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise ParameterError(f"qudit dimension must be an integer >= 2, got {self.d}")
        if not 0.0 <= self.p <= 1.0:
            raise ParameterError(f"mixing probability must lie in [0, 1], got {self.p}")


@dataclass(frozen=True)
class ClonerParams:
    """Coefficients of the symmetric 1->N qubit cloner.

    ``delta`` is ``N(N+1)/2`` and ``tau[i] = sqrt((N - i) / delta)``, so the squared
    coefficients sum to one.
    """

    n_clones: int
    delta: int
    tau: tuple[float, ...]

    @classmethod
    def for_clones(cls, n: int) -> ClonerParams:
        _check_clones(n)
        delta = n * (n + 1) // 2
        tau = tuple(math.sqrt(2 * (n - i) / (n * (n + 1))) for i in range(n))
        return cls(n, delta, tau)


def _check_clones(n: int) -> None:
    if int(n) != n or n < 1:
        raise ParameterError(f"number of clones must be a positive integer, got {n}")


def weyl_operators(d: int) -> list[np.ndarray]:
    """The ``d**2`` shift-and-clock operators ``X^a Z^b``, with ``X^0 Z^0 = I`` first."""
    omega = np.exp(2j * np.pi / d)
    shift = np.roll(np.eye(d), 1, axis=0)
    clock = np.diag(omega ** np.arange(d))
    return [
        np.linalg.matrix_power(shift, a) @ np.linalg.matrix_power(clock, b)
        for a in range(d)
        for b in range(d)
    ]


def depolarizing(params: DepolarizingParams) -> KrausChannel:
    """``rho -> (1 - p) rho + p I/d``.

    Uses the twirl ``(1/d^2) sum_W W rho W^dagger = I/d`` over the Weyl group; the
    identity term absorbs the ``(1 - p)`` weight. Zero-weight operators are dropped.
    """
    d, p = params.d, params.p
    ops = []
    for j, w in enumerate(weyl_operators(d)):
        weight = (1.0 - p + p / d**2) if j == 0 else p / d**2
        if weight > 0.0:
            ops.append(math.sqrt(weight) * w)
    return KrausChannel(ops, name=f"depolarizing(d={d},p={p:g})")


def cloner_kraus(n: int) -> KrausChannel:
    """Kraus operators ``tau_k |k><0| + tau_{N-1-k} |k+1><1|`` into the symmetric subspace."""
    cp = ClonerParams.for_clones(n)
    ops = []
    for k in range(n):
        op = np.zeros((n + 1, 2))
        op[k, 0] = cp.tau[k]
        op[k + 1, 1] = cp.tau[n - 1 - k]
        ops.append(op)
    return KrausChannel(ops, name=f"cloner(1->{n})")


def cloner_isometry(n: int) -> Isometry:
    """Dilation ``B -> (OD) (x) F`` of the cloner, built term by term.

    ``|0>_B`` goes to ``sum_k sqrt(N-k) |k>_OD |k>_F / sqrt(delta)`` and ``|1>_B`` to
    ``sum_k sqrt(k+1) |k+1>_OD |k>_F / sqrt(delta)``, with the environment of dimension ``N``.
    """
    _check_clones(n)
    delta = n * (n + 1) / 2
    v = np.zeros(((n + 1) * n, 2), dtype=complex)
    for k in range(n):
        v[:, 0] += math.sqrt((n - k) / delta) * np.kron(ket(k, n + 1), ket(k, n))
        v[:, 1] += math.sqrt((k + 1) / delta) * np.kron(ket(k + 1, n + 1), ket(k, n))
    return Isometry(v, n + 1, n)


def cloner(n: int) -> tuple[KrausChannel, Isometry, ClonerParams]:
    """The optimal symmetric 1->N qubit cloner.

    Output lives in the ``(N+1)``-dimensional symmetric subspace with basis ``|b>``
    = "b of the N qubits are 1"; use :func:`symmetric_embedding` to reach N qubits.

    :raises ParameterError: for ``n < 1``.
    """
    return cloner_kraus(n), cloner_isometry(n), ClonerParams.for_clones(n)


def cloner_complementary(n: int) -> KrausChannel:
    """Kraus operators of the environment's share of the cloner output.

    One operator per symmetric output state ``b``:
    ``(sqrt(N-b) |b>_F <0| + sqrt(b) |b-1>_F <1|) / sqrt(delta)`` with out-of-range
    terms dropped.
    """
    _check_clones(n)
    delta = n * (n + 1) / 2
    ops = []
    for b in range(n + 1):
        op = np.zeros((n, 2))
        if b <= n - 1:
            op[b, 0] = math.sqrt(n - b)
        if b >= 1:
            op[b - 1, 1] = math.sqrt(b)
        ops.append(op / math.sqrt(delta))
    return KrausChannel(ops, name=f"cloner-complementary(1->{n})")


def cloner_complementary_pauli_form(z_corrected: bool = True) -> KrausChannel:
    """Six-operator form of the 1->2 complementary map built from Pauli eigenprojectors.

    Each of the X, Z and Y eigenprojectors enters with weight ``1/sqrt(3)``. With
    ``z_corrected`` the Y projectors are followed by a Pauli Z, which turns the map into
    a conjugation-equivalent of the Y-flipping complementary channel; without it the Y
    component keeps its sign.
    """
    s = 1 / math.sqrt(3)
    plus, minus = np.array([1, 1]) / math.sqrt(2), np.array([1, -1]) / math.sqrt(2)
    yplus, yminus = np.array([1, 1j]) / math.sqrt(2), np.array([1, -1j]) / math.sqrt(2)
    z = np.diag([1.0, -1.0])
    y_corr = z if z_corrected else np.eye(2)
    ops = [
        s * projector(plus),
        s * projector(minus),
        s * projector(ket(0)),
        s * projector(ket(1)),
        s * y_corr @ projector(yplus),
        s * y_corr @ projector(yminus),
    ]
    return KrausChannel(ops, name="cloner-complementary-pauli")


def symmetric_embedding(n: int) -> Isometry:
    """Isometry from the symmetric basis ``|b>`` to N qubits.

    ``|b>`` maps to the normalised uniform superposition of all N-bit strings with
    ``b`` ones; the first qubit is the most significant bit.
    """
    _check_clones(n)
    if 2**n > MAX_DIM:
        raise DimensionError(f"{n} qubits exceed the {MAX_DIM} dimension limit")
    v = np.zeros((2**n, n + 1), dtype=complex)
    for bits in itertools.product((0, 1), repeat=n):
        v[int("".join(map(str, bits)), 2), sum(bits)] = 1.0
    v /= np.linalg.norm(v, axis=0)
    return Isometry(v, 2**n, 1)


def bell_purification(omega: float) -> np.ndarray:
    """``sqrt(omega)|00> + sqrt(1 - omega)|11>`` for ``0 <= omega <= 1/2``.

    ``omega = 1/2`` is the Bell state and ``omega = 0`` the product state ``|11>``.
    """
    if not 0.0 <= omega <= 0.5:
        raise ParameterError(f"omega must lie in [0, 1/2], got {omega}")
    return math.sqrt(omega) * ket((0, 0)) + math.sqrt(1.0 - omega) * ket((1, 1))


def clone_fidelity(n: int) -> float:
    """Fidelity ``2/3 + 1/(3N)`` of each clone produced by the 1->N cloner."""
    _check_clones(n)
    return 2.0 / 3.0 + 1.0 / (3.0 * n)


def single_clone_state(n: int, psi) -> np.ndarray:
    """Reduced state of the first clone when the 1->N cloner acts on ``|psi>``."""
    kraus = cloner_kraus(n)
    emb = symmetric_embedding(n).matrix
    out = emb @ apply(kraus, projector(psi)) @ emb.conj().T
    return out if n == 1 else partial_trace(out, [2] * n, list(range(1, n)))


def simulated_clone_fidelity(n: int, psi) -> float:
    """``<psi| rho_clone |psi>`` from an explicit run of the cloner."""
    psi = np.asarray(psi, dtype=complex)
    return float(np.vdot(psi, single_clone_state(n, psi) @ psi).real)
