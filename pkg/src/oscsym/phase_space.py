"""Gaussian Wigner-function simulator over (x1, p1, x2, p2).

Conventions, fixed once and used everywhere:

* Coordinates are ordered (x1, p1, x2, p2); the symplectic form J is
  block-diagonal [[0, 1], [-1, 0]] per oscillator.
* The vacuum is the Gaussian with zero mean and covariance I/2, whose
  Wigner function is (1/pi)^2 exp(-(x1^2 + p1^2 + x2^2 + p2^2)).
* A generator G (purely imaginary 4x4 member of the sl4r_4 family) maps to
  the finite transformation M(theta) = exp(-2i theta G).  The factor two
  absorbs the 1/2 carried by every generator entry: the S3 rotation has
  period 2 pi in theta, and the G3 flow at theta = eta scales the two
  oscillator planes by e^{+eta} and e^{-eta}.
* Purity of a 2x2 reduced covariance is 1/(2 sqrt(det)), so the vacuum
  block I/2 gives exactly 1; the phase-space area of a block is
  2 pi sqrt(det), so the vacuum area is pi.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy.linalg import expm

from .families import GeneratorSet, build_generator_set

__all__ = [
    "DEFAULT_TOLERANCE",
    "symplectic_form",
    "symplectic_deviation",
    "is_canonical",
    "generator_to_transform",
    "coupling_transform",
    "GaussianState",
    "vacuum_state",
    "evolve",
    "reduce_oscillator",
    "gaussian_purity",
    "symplectic_eigenvalue",
    "SubVacuumError",
    "gaussian_entropy",
    "areas",
    "area_product",
    "eta_from_temperature",
    "temperature_from_eta",
]

DEFAULT_TOLERANCE = 1e-12


def symplectic_form() -> np.ndarray:
    """The 4x4 form J, block-diagonal [[0, 1], [-1, 0]]: J^2 = -I, J^T = -J."""
    j = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return np.kron(np.eye(2), j)


def symplectic_deviation(m: np.ndarray) -> float:
    """Max-abs entry of M J M^T - J (zero iff M is canonical)."""
    m = np.asarray(m, dtype=float)
    j = symplectic_form()
    return float(np.abs(m @ j @ m.T - j).max())


def is_canonical(m: np.ndarray, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """True iff M preserves the symplectic form within tolerance."""
    return symplectic_deviation(m) <= tolerance


@lru_cache(maxsize=1)
def _sl4r() -> GeneratorSet:
    return build_generator_set("sl4r_4")


def generator_to_transform(label: str, theta: float) -> np.ndarray:
    """Finite transformation M(theta) = exp(-2i theta G) for one generator.

    G is the named sl4r_4 member; since its entries are purely imaginary the
    exponent is real and so is M.  M(0) = I and
    M(theta1 + theta2) = M(theta1) M(theta2) along each one-parameter flow.

    Raises:
        ValueError: unknown generator label.
    """
    gens = _sl4r()
    if label not in gens:
        raise ValueError(
            f"unknown generator {label!r}; expected one of {list(gens.labels)}"
        )
    g = gens[label]
    # -2i theta G is exactly 2 theta Im(G) for purely imaginary G
    return expm(2.0 * float(theta) * g.imag)


def coupling_transform(eta: float) -> np.ndarray:
    """The oscillator-coupling canonical transformation at squeeze eta.

    Composition of the 45-degree normal-mode rotation with reciprocal
    squeezes e^{+-eta} of the two modes (x modes squeezed oppositely to p
    modes), oriented so the vacuum evolves into the correlated ground state:

        cov = [[cosh 2eta, 0,          sinh 2eta,  0        ],
               [0,         cosh 2eta,  0,         -sinh 2eta],
               [sinh 2eta, 0,          cosh 2eta,  0        ],
               [0,        -sinh 2eta,  0,          cosh 2eta]] / 2.

    The transpose of the returned matrix is the corresponding coordinate
    substitution ((x1 + x2) e^{eta} / sqrt2, (x1 - x2) e^{-eta} / sqrt2 and
    reciprocally for the momenta).
    """
    r45 = np.array([
        [1.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 1.0],
        [1.0, 0.0, -1.0, 0.0],
        [0.0, 1.0, 0.0, -1.0],
    ]) / np.sqrt(2.0)
    squeeze = np.diag([np.exp(eta), np.exp(-eta), np.exp(-eta), np.exp(eta)])
    return r45.T @ squeeze


@dataclass(frozen=True)
class GaussianState:
    """Mean vector and covariance matrix over (x1, p1, x2, p2).

    The covariance must be symmetric positive definite; sub-vacuum
    covariances (symplectic eigenvalue below 1) are representable --
    classically legal states produced by non-canonical contraction -- and
    are only flagged when a quantum entropy is requested.
    """

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.asarray(self.mean, dtype=float).reshape(4).copy()
        cov = np.asarray(self.cov, dtype=float).copy()
        if cov.shape != (4, 4):
            raise ValueError(f"covariance must be 4x4, got {cov.shape}")
        if np.abs(cov - cov.T).max() > 1e-12:
            raise ValueError("covariance must be symmetric (within 1e-12)")
        cov = 0.5 * (cov + cov.T)
        if np.linalg.eigvalsh(cov).min() <= 0:
            raise ValueError("covariance must be positive definite")
        mean.flags.writeable = False
        cov.flags.writeable = False
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)


def vacuum_state() -> GaussianState:
    """Ground state of both oscillators: zero mean, covariance I/2."""
    return GaussianState(mean=np.zeros(4), cov=np.eye(4) / 2.0)


def evolve(state: GaussianState, m: np.ndarray) -> GaussianState:
    """Push a Gaussian state through a linear phase-space map.

    mean -> M mean and cov -> M cov M^T, i.e. the Wigner function transforms
    by substitution W'(xi) = W(M^{-1} xi).
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        raise ValueError(f"transform must be 4x4, got {m.shape}")
    cov = m @ state.cov @ m.T
    return GaussianState(mean=m @ state.mean, cov=0.5 * (cov + cov.T))


def reduce_oscillator(state: GaussianState, keep: int) -> np.ndarray:
    """2x2 marginal covariance of the kept oscillator (1 or 2).

    For a Gaussian Wigner function, integrating out the other oscillator's
    pair of variables leaves exactly the corresponding diagonal sub-block.
    """
    if keep not in (1, 2):
        raise ValueError(f"keep must be 1 or 2, got {keep!r}")
    i = 0 if keep == 1 else 2
    return state.cov[i:i + 2, i:i + 2].copy()


def _check_cov2(cov2: np.ndarray) -> np.ndarray:
    cov2 = np.asarray(cov2, dtype=float)
    if cov2.shape != (2, 2):
        raise ValueError(f"expected a 2x2 covariance, got {cov2.shape}")
    if np.abs(cov2 - cov2.T).max() > 1e-12:
        raise ValueError("covariance must be symmetric")
    if np.linalg.eigvalsh(cov2).min() <= 0:
        raise ValueError("covariance must be positive definite")
    return cov2


def gaussian_purity(cov2: np.ndarray) -> float:
    """Tr(rho^2) of the Gaussian state with 2x2 covariance cov2.

    1/(2 sqrt(det cov2)) under the vacuum = I/2 convention: 1 for the
    vacuum block, 1/cosh(2 eta) for the reduced coupled ground state.
    """
    cov2 = _check_cov2(cov2)
    return float(1.0 / (2.0 * np.sqrt(np.linalg.det(cov2))))


def symplectic_eigenvalue(cov2: np.ndarray) -> float:
    """mu = 2 sqrt(det cov2); 1 for the vacuum, cosh(2 eta) when coupled."""
    cov2 = _check_cov2(cov2)
    return float(2.0 * np.sqrt(np.linalg.det(cov2)))


class SubVacuumError(ValueError):
    """Covariance below the vacuum noise floor (mu < 1).

    Such states are classically admissible (non-canonical contraction can
    always shrink a phase-space area further) but carry no quantum entropy;
    they are reported distinctly instead of silently clipped.
    """


def gaussian_entropy(cov2: np.ndarray, tolerance: float = DEFAULT_TOLERANCE) -> float:
    """von Neumann entropy from the symplectic eigenvalue of cov2.

    With mu = 2 sqrt(det cov2), u = (mu + 1)/2 and v = (mu - 1)/2:
    S = u ln u - v ln v (and v ln v -> 0 as v -> 0).  For the reduced
    coupled ground state mu = cosh(2 eta) this is exactly
    cosh^2(eta) ln cosh^2(eta) - sinh^2(eta) ln sinh^2(eta).

    Raises:
        SubVacuumError: mu < 1 - tolerance.
    """
    mu = symplectic_eigenvalue(cov2)
    if mu < 1.0 - tolerance:
        raise SubVacuumError(
            f"symplectic eigenvalue mu = {mu:.12g} < 1: sub-vacuum covariance "
            "has no quantum entropy"
        )
    u = (mu + 1.0) / 2.0
    v = max((mu - 1.0) / 2.0, 0.0)
    s = u * np.log(u)
    if v > 0.0:
        s -= v * np.log(v)
    return float(max(s, 0.0))


def areas(state: GaussianState) -> Tuple[float, float]:
    """Phase-space areas (A1, A2) of the two oscillators.

    A_i = 2 pi sqrt(det of the i-th 2x2 covariance block), normalized so the
    vacuum occupies area pi per oscillator (the unit-circle contour).
    """
    c = state.cov
    a1 = 2.0 * np.pi * np.sqrt(np.linalg.det(c[0:2, 0:2]))
    a2 = 2.0 * np.pi * np.sqrt(np.linalg.det(c[2:4, 2:4]))
    return float(a1), float(a2)


def area_product(state: GaussianState) -> float:
    """Correlation-aware four-volume measure (2 pi)^2 sqrt(det cov).

    Equals areas(state)[0] * areas(state)[1] whenever the two oscillators
    are uncorrelated (all the block-diagonal flows), and is invariant under
    every determinant-one transform, correlated or not.  The plain product
    of marginal areas grows like cosh^2 under the oscillator-mixing
    squeezes, which build cross correlations.
    """
    return float((2.0 * np.pi) ** 2 * np.sqrt(np.linalg.det(state.cov)))


def eta_from_temperature(T: float) -> float:
    """Squeeze parameter matching a temperature: cosh(2 eta) = 1/tanh(1/2T).

    Equivalent to arccosh(1/tanh(1/2T))/2 and to arctanh(e^{-1/2T});
    evaluated as (log1p(e^{-x}) - ln(-expm1(-x)))/2 with x = 1/2T, which
    stays accurate at both temperature extremes.  Rejects T <= 0; the
    T -> 0+ limit is eta -> 0+.
    """
    if T <= 0:
        raise ValueError(f"temperature must be > 0, got {T}")
    x = 0.5 / T
    if x > 20.0:
        # eta ~ e^{-x}; arctanh is exact for arguments this small
        return float(np.arctanh(np.exp(-x)))
    return float(0.5 * (np.log1p(np.exp(-x)) - np.log(-np.expm1(-x))))


def temperature_from_eta(eta: float) -> float:
    """Inverse map T = -1/(2 ln tanh eta), from e^{-1/T} = tanh^2 eta.

    For eta >= 1, ln tanh eta is evaluated as
    log1p(-e^{-2 eta}) - log1p(e^{-2 eta}) so deep squeezes do not round
    tanh to one; below that, tanh is exact and the direct form is used.
    Rejects eta <= 0; the eta -> 0+ limit is T -> 0+.
    """
    if eta <= 0:
        raise ValueError(f"eta must be > 0, got {eta}")
    if eta < 1.0:
        log_tanh = np.log(np.tanh(eta))
    else:
        q = np.exp(-2.0 * eta)
        log_tanh = np.log1p(-q) - np.log1p(q)
    return float(-0.5 / log_tanh)
