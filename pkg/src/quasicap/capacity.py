"""Entropic capacity evaluators.

All quantities are in bits. The maximisation over ensembles that defines the
single-letter classical capacity is not carried out in general; closed forms are
provided where they exist, and :func:`basis_ensemble_chi` is a brute-force
cross-check over orthonormal-basis ensembles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from quasicap.channels import KrausChannel, apply
from quasicap.errors import DimensionError, NormalizationError, ParameterError
from quasicap.linalg import (
    ATOL,
    check_density,
    ket,
    projector,
    random_pure_state,
    shannon_entropy,
    von_neumann_entropy,
)
from quasicap.zoo import DepolarizingParams


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Probability-weighted family of density matrices of equal dimension."""

    probs: tuple[float, ...]
    states: tuple[np.ndarray, ...]

    def __init__(self, entries: Sequence[tuple[float, np.ndarray]]):
        if not entries:
            raise NormalizationError("an ensemble needs at least one state")
        probs = tuple(float(p) for p, _ in entries)
        states = tuple(check_density(s) for _, s in entries)
        if any(p < 0 for p in probs) or abs(sum(probs) - 1.0) > ATOL:
            raise NormalizationError(f"ensemble probabilities {probs} are not a distribution")
        if len({s.shape for s in states}) != 1:
            raise DimensionError("ensemble states have different dimensions")
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "states", states)

    @classmethod
    def uniform(cls, states: Sequence[np.ndarray]) -> Ensemble:
        return cls([(1.0 / len(states), s) for s in states])

    @property
    def dim(self) -> int:
        return self.states[0].shape[0]

    def average(self) -> np.ndarray:
        return sum(p * s for p, s in zip(self.probs, self.states))


@dataclass(frozen=True)
class CapacityResult:
    """``value = output_entropy - conditional_entropy``."""

    value: float
    output_entropy: float
    conditional_entropy: float

    @classmethod
    def from_entropies(cls, output_entropy: float, conditional_entropy: float) -> CapacityResult:
        return cls(output_entropy - conditional_entropy, output_entropy, conditional_entropy)


def holevo_chi(ch: KrausChannel, ens: Ensemble) -> CapacityResult:
    """Holevo quantity of ``ch`` for one fixed input ensemble."""
    if ens.dim != ch.in_dim:
        raise DimensionError(f"ensemble dim {ens.dim} does not match channel input {ch.in_dim}")
    avg_out = von_neumann_entropy(apply(ch, ens.average()))
    cond = sum(p * von_neumann_entropy(apply(ch, s)) for p, s in zip(ens.probs, ens.states))
    return CapacityResult.from_entropies(avg_out, cond)


def basis_ensemble_chi(ch: KrausChannel, basis=None) -> CapacityResult:
    """Holevo quantity of the uniform ensemble over an orthonormal basis (default: computational)."""
    d = ch.in_dim
    basis = np.eye(d) if basis is None else np.asarray(basis)
    return holevo_chi(ch, Ensemble.uniform([projector(basis[:, j]) for j in range(d)]))


def depolarizing_capacity(params: DepolarizingParams) -> float:
    """Closed-form capacity of the depolarizing channel ``(1-p) rho + p I/d``.

    ``log2 d + q log2 q + (d-1) r log2 r`` with ``q = 1 - p + p/d``, ``r = p/d`` and
    ``0 log 0 = 0``.
    """
    d, p = params.d, params.p
    q, r = 1.0 - p + p / d, p / d
    total = math.log2(d)
    if q > 0:
        total += q * math.log2(q)
    if r > 0:
        total += (d - 1) * r * math.log2(r)
    return total


def min_output_entropy(ch: KrausChannel, trials: int = 200, seed: int = 42) -> float:
    """Sampled upper bound on the minimum output entropy.

    Scans the computational basis, the Fourier (conjugate) basis and ``trials``
    Haar-random pure inputs. The bound is tight for covariant channels such as the
    depolarizing channel and the universal cloner.
    """
    if trials < 1:
        raise ParameterError("trials must be at least 1")
    d = ch.in_dim
    rng = np.random.default_rng(seed)
    fourier = np.exp(2j * np.pi * np.outer(np.arange(d), np.arange(d)) / d) / math.sqrt(d)
    candidates = [ket(j, d) for j in range(d)] + [fourier[:, j] for j in range(d)]
    candidates += [random_pure_state(d, rng) for _ in range(trials)]
    return min(von_neumann_entropy(apply(ch, projector(v))) for v in candidates)


def _check_omega(omega: float) -> None:
    if not 0.0 <= omega <= 0.5:
        raise ParameterError(f"omega must lie in [0, 1/2], got {omega}")


def lambda_coeffs(n: int, omega: float) -> list[float]:
    """Weights ``(N - 2i) omega + i`` for ``i = 0..N``; they sum to ``N(N+1)/2``."""
    if int(n) != n or n < 1:
        raise ParameterError(f"number of clones must be a positive integer, got {n}")
    _check_omega(omega)
    return [(n - 2 * i) * omega + i for i in range(n + 1)]


def cloner_output_distribution(n: int, omega: float) -> np.ndarray:
    lam = np.array(lambda_coeffs(n, omega))
    return lam / (n * (n + 1) / 2)


def cloner_mutual_info(n: int, omega: float) -> CapacityResult:
    """Register-output mutual information of the cloner fed a state of bias ``omega``.

    The output entropy is ``log2(N+1)`` and the conditional entropy is the Shannon
    entropy of the normalised :func:`lambda_coeffs`.
    """
    h_out = math.log2(n + 1)
    h_cond = shannon_entropy(cloner_output_distribution(n, omega))
    return CapacityResult.from_entropies(h_out, h_cond)


def cloner_capacity_zero_noise(n: int) -> float:
    """``1 - log2 N + (1/delta) sum_i i log2 i`` for a noiseless (pure-state) input."""
    if int(n) != n or n < 1:
        raise ParameterError(f"number of clones must be a positive integer, got {n}")
    delta = n * (n + 1) / 2
    return 1.0 - math.log2(n) + sum(i * math.log2(i) for i in range(2, n + 1)) / delta
