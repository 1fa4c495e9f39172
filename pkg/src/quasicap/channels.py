"""Quantum channels in Kraus form and their Stinespring isometries."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from quasicap.errors import ContractError, DimensionError
from quasicap.linalg import ATOL, MAX_DIM, as_matrix, dagger, kron, partial_trace


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """A linear map ``rho -> sum_i K_i rho K_i^dagger``.

    Every operator has shape ``(out_dim, in_dim)``. Completeness is not enforced at
    construction so that invalid families can still be inspected with
    :func:`validate_cptp`; :func:`apply` and friends require it.
    """

    operators: tuple[np.ndarray, ...]
    name: str = field(default="", compare=False)

    def __init__(self, operators: Sequence, name: str = ""):
        ops = tuple(as_matrix(k) for k in operators)
        if not ops:
            raise DimensionError("a channel needs at least one Kraus operator")
        shape = ops[0].shape
        if any(k.shape != shape for k in ops):
            raise DimensionError("Kraus operators have inconsistent shapes")
        for k in ops:
            k.setflags(write=False)
        object.__setattr__(self, "operators", ops)
        object.__setattr__(self, "name", name)

    @property
    def in_dim(self) -> int:
        return self.operators[0].shape[1]

    @property
    def out_dim(self) -> int:
        return self.operators[0].shape[0]

    def __len__(self) -> int:
        return len(self.operators)

    def __call__(self, rho) -> np.ndarray:
        return apply(self, rho)


@dataclass(frozen=True, eq=False)
class Isometry:
    """Stinespring isometry ``V: in -> out_B (x) out_E`` with ``V^dagger V = I``."""

    matrix: np.ndarray
    out_dim_b: int
    out_dim_e: int

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape[0] != self.out_dim_b * self.out_dim_e:
            raise DimensionError(
                f"isometry has {m.shape[0]} rows, expected {self.out_dim_b}*{self.out_dim_e}"
            )
        residual = np.max(np.abs(dagger(m) @ m - np.eye(m.shape[1])))
        if residual > ATOL:
            raise ContractError(f"matrix is not an isometry (V^dagger V residual {residual:.3g})")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def in_dim(self) -> int:
        return self.matrix.shape[1]

    def __call__(self, rho) -> np.ndarray:
        """Joint output ``V rho V^dagger`` on ``out_B (x) out_E``."""
        rho = as_matrix(rho)
        if rho.shape != (self.in_dim, self.in_dim):
            raise DimensionError(f"input is {rho.shape}, isometry expects dim {self.in_dim}")
        return self.matrix @ rho @ dagger(self.matrix)


@dataclass(frozen=True)
class CptpReport:
    is_valid: bool
    completeness_residual: float
    per_operator_norms: list[float]


def validate_cptp(ch: KrausChannel, atol: float = ATOL) -> CptpReport:
    """Max-norm residual of ``sum K^dagger K - I`` and spectral norms of the operators."""
    total = sum(dagger(k) @ k for k in ch.operators)
    residual = float(np.max(np.abs(total - np.eye(ch.in_dim))))
    norms = [float(np.linalg.norm(k, 2)) for k in ch.operators]
    return CptpReport(residual <= atol, residual, norms)


def _require_valid(ch: KrausChannel) -> None:
    report = validate_cptp(ch)
    if not report.is_valid:
        raise ContractError(
            f"channel {ch.name or '<unnamed>'} is not trace preserving "
            f"(residual {report.completeness_residual:.3g})"
        )


def apply(ch: KrausChannel, rho) -> np.ndarray:
    """Channel output ``sum_i K_i rho K_i^dagger``."""
    rho = as_matrix(rho)
    if rho.shape != (ch.in_dim, ch.in_dim):
        raise DimensionError(f"input is {rho.shape}, channel expects dim {ch.in_dim}")
    _require_valid(ch)
    return sum(k @ rho @ dagger(k) for k in ch.operators)


def concatenate(second: KrausChannel, first: KrausChannel) -> KrausChannel:
    """Kraus family of ``second o first``: ``first`` acts, then ``second``.

    Operators are ordered with the ``first`` index running fastest; no attempt is
    made to reduce the operator count.
    """
    if first.out_dim != second.in_dim:
        raise DimensionError(
            f"cannot feed a {first.out_dim}-dim output into a {second.in_dim}-dim input"
        )
    ops = [k2 @ k1 for k2 in second.operators for k1 in first.operators]
    return KrausChannel(ops, name=f"{second.name} o {first.name}")


def tensor(a: KrausChannel, b: KrausChannel) -> KrausChannel:
    """Parallel channel ``a (x) b`` with operators ``A_i (x) B_j``."""
    if max(a.out_dim * b.out_dim, a.in_dim * b.in_dim) > MAX_DIM:
        raise DimensionError("tensor product channel exceeds the dimension limit")
    ops = [kron(ka, kb) for ka in a.operators for kb in b.operators]
    return KrausChannel(ops, name=f"{a.name} x {b.name}")


def isometry_from_kraus(ch: KrausChannel) -> Isometry:
    """``V = sum_i K_i (x) |i>_E`` with the environment indexing operators in list order."""
    _require_valid(ch)
    r = len(ch.operators)
    v = np.zeros((ch.out_dim * r, ch.in_dim), dtype=complex)
    for i, k in enumerate(ch.operators):
        e = np.zeros((r, 1))
        e[i] = 1.0
        v += np.kron(k, e)
    return Isometry(v, ch.out_dim, r)


def channel_output(v: Isometry, rho) -> np.ndarray:
    """``Tr_E(V rho V^dagger)``."""
    return partial_trace(v(rho), [v.out_dim_b, v.out_dim_e], 1)


def complementary_output(v: Isometry, rho) -> np.ndarray:
    """Environment's share ``Tr_B(V rho V^dagger)``."""
    return partial_trace(v(rho), [v.out_dim_b, v.out_dim_e], 0)


def complementary_channel(ch: KrausChannel) -> KrausChannel:
    """Kraus family of the complementary map, read off the dilation of :func:`isometry_from_kraus`.

    Operator ``b`` is ``sum_i |i>_E <b| K_i``, one per output basis state.
    """
    r = len(ch.operators)
    ops = []
    for b in range(ch.out_dim):
        op = np.zeros((r, ch.in_dim), dtype=complex)
        for i, k in enumerate(ch.operators):
            op[i, :] = k[b, :]
        ops.append(op)
    return KrausChannel(ops, name=f"complement({ch.name})")


def identity_channel(d: int) -> KrausChannel:
    return KrausChannel([np.eye(d)], name=f"id{d}")


def unitary_channel(u) -> KrausChannel:
    return KrausChannel([u], name="unitary")
