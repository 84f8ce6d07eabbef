"""Truncated two-mode Fock realization and oscillator-eigenfunction oracles.

The ladder-operator generators live on the product basis |n1, n2> with
n1, n2 < nmax, index n1 * nmax + n2.  Quadratic generators couple states at
most two quanta apart, so commutator identities are exact on the low
occupation block (the "safe subspace") and only break where truncation
clips a raising path; the edge behaviour is exposed, not hidden.

The wavefunction side provides orthonormal oscillator eigenfunctions by
stable upward recurrence, Gauss-Hermite quadrature, the coupled ground
state, its eigenfunction expansion, and the reduced density matrix through
three independent routes (closed form, series, partial-trace quadrature).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

import numpy as np

from .algebra import DEFAULT_TOLERANCE, VerificationReport, alge11_table
from .families import GeneratorSet

__all__ = [
    "HERMITE_KMAX",
    "SERIES_TAIL_LIMIT",
    "destroy",
    "ladder_operators",
    "fock_index",
    "basis_state",
    "dirac_tenfold",
    "safe_subspace_mask",
    "verify_fock_commutators",
    "hermite_functions",
    "phi",
    "gauss_hermite",
    "psi_eta",
    "expansion_overlap",
    "expansion_coefficient",
    "rho_reduced",
    "rho_series",
    "rho_partial_trace",
    "series_weights",
    "series_tail_bound",
    "kmax_for_tail",
    "SeriesMoments",
    "moments",
    "ThermalState",
    "thermal_state",
    "wigner_radius",
]

HERMITE_KMAX = 200
SERIES_TAIL_LIMIT = 1e-12


# ---------------------------------------------------------------------------
# truncated ladder operators and the ten quadratic generators

def destroy(nmax: int) -> np.ndarray:
    """Single-mode lowering operator a|n> = sqrt(n)|n-1> on n < nmax."""
    if nmax < 2:
        raise ValueError(f"nmax must be >= 2, got {nmax}")
    a = np.zeros((nmax, nmax))
    for n in range(1, nmax):
        a[n - 1, n] = np.sqrt(n)
    return a


def ladder_operators(nmax: int) -> Tuple[np.ndarray, np.ndarray]:
    """Two-mode lowering operators (a1, a2) on the nmax**2 product basis.

    Each acts as the standard truncated ladder on its own mode and as the
    identity on the other; the raising operators are the transposes.
    """
    a = destroy(nmax)
    eye = np.eye(nmax)
    return np.kron(a, eye), np.kron(eye, a)


def fock_index(nmax: int, n1: int, n2: int) -> int:
    """Flat index of |n1, n2> in the product basis."""
    if not (0 <= n1 < nmax and 0 <= n2 < nmax):
        raise ValueError(f"occupation ({n1}, {n2}) outside truncation {nmax}")
    return n1 * nmax + n2


def basis_state(nmax: int, n1: int, n2: int) -> np.ndarray:
    """Unit vector for |n1, n2>."""
    v = np.zeros(nmax * nmax)
    v[fock_index(nmax, n1, n2)] = 1.0
    return v


def dirac_tenfold(nmax: int) -> GeneratorSet:
    """The ten quadratic ladder-operator generators on the truncated space.

    L1..L3 and S3 conserve total occupation; K1..K3 and Q1..Q3 move it by
    two quanta.  S3 is normal-ordered as (a1'a1 + a2 a2')/2, so
    S3|0,0> = |0,0>/2.  The overall signs of Q1..Q3 are the ones for which
    the set closes under the ten-generator bracket table with this S3
    ([K_i, Q_i] = -i S3); writing the same quadratic forms with opposite
    sign satisfies the mirrored table instead.
    """
    if nmax < 4:
        raise ValueError(f"nmax must be >= 4 for the quadratic generators, got {nmax}")
    a1, a2 = ladder_operators(nmax)
    ad1, ad2 = a1.T, a2.T
    members: Dict[str, np.ndarray] = {
        "L1": 0.5 * (ad1 @ a2 + ad2 @ a1) + 0j,
        "L2": -0.5j * (ad1 @ a2 - ad2 @ a1),
        "L3": 0.5 * (ad1 @ a1 - ad2 @ a2) + 0j,
        "S3": 0.5 * (ad1 @ a1 + a2 @ ad2) + 0j,
        "K1": -0.25 * (ad1 @ ad1 + a1 @ a1 - ad2 @ ad2 - a2 @ a2) + 0j,
        "K2": 0.25j * (ad1 @ ad1 - a1 @ a1 + ad2 @ ad2 - a2 @ a2),
        "K3": 0.5 * (ad1 @ ad2 + a1 @ a2) + 0j,
        "Q1": 0.25j * (ad1 @ ad1 - a1 @ a1 - ad2 @ ad2 + a2 @ a2),
        "Q2": 0.25 * (ad1 @ ad1 + a1 @ a1 + ad2 @ ad2 + a2 @ a2) + 0j,
        "Q3": -0.5j * (ad1 @ ad2 - a1 @ a2),
    }
    for m in members.values():
        m.flags.writeable = False
    return GeneratorSet(family=f"fock(nmax={nmax})", dim=nmax * nmax, members=members)


def safe_subspace_mask(nmax: int, margin: int = 3) -> np.ndarray:
    """Boolean mask of states with n1 + n2 <= nmax - margin.

    With margin 3 every raising path of a quadratic-times-quadratic product
    stays below the truncation, so restricted commutators are exact.
    """
    n1, n2 = np.divmod(np.arange(nmax * nmax), nmax)
    return (n1 + n2) <= (nmax - margin)


def verify_fock_commutators(nmax: int,
                            tolerance: float = DEFAULT_TOLERANCE) -> VerificationReport:
    """Evaluate every ten-generator bracket on the safe subspace.

    Each residual matrix [A, B] - expected is restricted to rows and columns
    with n1 + n2 <= nmax - 3 before taking the max-abs entry; unrestricted
    residuals are nonzero at the truncation edge.
    """
    if nmax < 6:
        raise ValueError(f"nmax must be >= 6 for a nonempty safe subspace check, got {nmax}")
    gens = dirac_tenfold(nmax)
    idx = np.flatnonzero(safe_subspace_mask(nmax))
    residuals = {}
    for (a, b), terms in alge11_table().entries.items():
        r = gens[a] @ gens[b] - gens[b] @ gens[a]
        for c, l in terms:
            r = r - c * gens[l]
        residuals[(a, b)] = float(np.abs(r[np.ix_(idx, idx)]).max())
    return VerificationReport(gens.family, tolerance, residuals)


# ---------------------------------------------------------------------------
# oscillator eigenfunctions and quadrature

def hermite_functions(kmax: int, x) -> np.ndarray:
    """Orthonormal oscillator eigenfunctions phi_0..phi_kmax at points x.

    Unit mass and frequency: phi_0(x) = pi**-1/4 exp(-x**2/2).  Uses the
    normalized three-term recurrence
    phi_{k+1} = sqrt(2/(k+1)) x phi_k - sqrt(k/(k+1)) phi_{k-1},
    which is stable upward; k is capped at HERMITE_KMAX.
    """
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    if kmax > HERMITE_KMAX:
        raise ValueError(f"kmax {kmax} exceeds the recurrence cap {HERMITE_KMAX}")
    x = np.asarray(x, dtype=float)
    out = np.empty((kmax + 1,) + x.shape)
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if kmax >= 1:
        out[1] = np.sqrt(2.0) * x * out[0]
    for k in range(1, kmax):
        out[k + 1] = np.sqrt(2.0 / (k + 1)) * x * out[k] - np.sqrt(k / (k + 1.0)) * out[k - 1]
    return out


def phi(k: int, x):
    """k-th oscillator eigenfunction at x."""
    return hermite_functions(k, x)[k]


@lru_cache(maxsize=8)
def gauss_hermite(n: int = 128) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Hermite nodes and total weights w * exp(x**2).

    With the total weights, sum(w_tot * f(x)) approximates the plain
    integral of f; exact for f = (polynomial of degree < 2n) * exp(-x**2).
    """
    x, w = np.polynomial.hermite.hermgauss(n)
    total = np.exp(np.log(w) + x * x)
    x.flags.writeable = False
    total.flags.writeable = False
    return x, total


def psi_eta(eta: float, x1, x2):
    """Coupled two-oscillator ground state.

    (1/sqrt(pi)) exp(-[e^{2 eta} (x1 - x2)^2 + e^{-2 eta} (x1 + x2)^2] / 4);
    eta = 0 is the uncoupled ground state, and on the diagonal x1 = x2 the
    difference term drops out.
    """
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    quad = (np.exp(2 * eta) * (x1 - x2) ** 2 + np.exp(-2 * eta) * (x1 + x2) ** 2)
    return np.pi ** -0.5 * np.exp(-0.25 * quad)


def expansion_coefficient(eta: float, k: int) -> float:
    """Closed-form expansion coefficient tanh(eta)**k / cosh(eta)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return float(np.tanh(eta) ** k / np.cosh(eta))


def expansion_overlap(eta: float, k: int, nodes: int = 128) -> float:
    """<phi_k(x1) phi_k(x2) | psi_eta> by two-dimensional quadrature.

    Contract: equals expansion_coefficient(eta, k).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    x, w = gauss_hermite(nodes)
    pk = hermite_functions(k, x)[k]
    weighted = w * pk
    return float(weighted @ psi_eta(eta, x[:, None], x[None, :]) @ weighted)


# ---------------------------------------------------------------------------
# reduced density matrix: closed form, series, quadrature

def rho_reduced(eta: float, x, xp):
    """Reduced density matrix of the observed oscillator, closed form.

    rho(x, x') = (pi cosh 2eta)^{-1/2}
                 exp(-[(x + x')^2 + (x - x')^2 cosh^2(2 eta)] / (4 cosh 2eta));
    at eta = 0 this is the pure ground-state projector.
    """
    x = np.asarray(x, dtype=float)
    xp = np.asarray(xp, dtype=float)
    c2 = np.cosh(2 * eta)
    quad = ((x + xp) ** 2 + (x - xp) ** 2 * c2 ** 2) / (4 * c2)
    return (np.pi * c2) ** -0.5 * np.exp(-quad)


def rho_series(eta: float, x, xp, kmax: int = 60):
    """Reduced density matrix summed over the eigenfunction ladder.

    sum_k w_k phi_k(x) phi_k(x') with w_k = tanh(eta)^{2k} / cosh(eta)^2;
    agrees with rho_reduced up to the series tail.
    """
    x, xp = np.broadcast_arrays(np.asarray(x, float), np.asarray(xp, float))
    w = series_weights(eta, kmax)
    hx = hermite_functions(kmax, x)
    hxp = hermite_functions(kmax, xp)
    return np.einsum("k,k...,k...->...", w, hx, hxp)


def rho_partial_trace(eta: float, x, xp, nodes: int = 128):
    """Reduced density matrix by integrating out the unobserved coordinate.

    integral psi_eta(x, t) psi_eta(x', t) dt by Gauss-Hermite quadrature.
    """
    x, xp = np.broadcast_arrays(np.asarray(x, float), np.asarray(xp, float))
    t, w = gauss_hermite(nodes)
    vals = psi_eta(eta, x[..., None], t) * psi_eta(eta, xp[..., None], t)
    return vals @ w


# ---------------------------------------------------------------------------
# series moments and the thermal state

def series_weights(eta: float, kmax: int = 200) -> np.ndarray:
    """Eigenvalue ladder w_k = (1 - tanh^2 eta) tanh(eta)^{2k}, k = 0..kmax.

    Symmetric in eta (only |eta| enters); nonnegative and non-increasing.
    """
    t = np.tanh(abs(eta)) ** 2
    return (1.0 - t) * t ** np.arange(kmax + 1)


def series_tail_bound(eta: float, kmax: int = 200) -> float:
    """Exact dropped tail sum_{k > kmax} w_k = tanh(eta)^{2(kmax+1)}."""
    t = np.tanh(abs(eta)) ** 2
    return float(t ** (kmax + 1))


def kmax_for_tail(eta: float, limit: float = SERIES_TAIL_LIMIT) -> int:
    """Smallest truncation whose dropped tail is at most ``limit``.

    Grows like -ln(limit) / (2 ln tanh |eta|); about 50 terms at eta = 1,
    about 380 at eta = 2.
    """
    t = np.tanh(abs(eta)) ** 2
    if t == 0.0:
        return 1
    n = int(np.ceil(np.log(limit) / np.log(t))) - 1
    return max(n, 1)


def _xlogx(w: np.ndarray) -> np.ndarray:
    safe = np.where(w > 0, w, 1.0)
    return np.where(w > 0, w * np.log(safe), 0.0)


@dataclass(frozen=True)
class SeriesMoments:
    trace: float
    purity: float
    entropy: float
    tail_bound: float


def moments(eta: float, kmax: int = 200) -> SeriesMoments:
    """Trace, purity and entropy of the reduced-state eigenvalue ladder.

    trace = sum w_k, purity = sum w_k^2, entropy = -sum w_k ln w_k.
    Contracts: purity = 1/cosh(2 eta) and
    entropy = cosh^2(eta) ln cosh^2(eta) - sinh^2(eta) ln sinh^2(eta),
    both up to the reported geometric tail bound.  Negative eta is folded
    to |eta|.  A tail bound above SERIES_TAIL_LIMIT triggers a warning.
    """
    w = series_weights(eta, kmax)
    tail = series_tail_bound(eta, kmax)
    if tail > SERIES_TAIL_LIMIT:
        warnings.warn(
            f"series tail bound {tail:.3e} exceeds {SERIES_TAIL_LIMIT:.0e} "
            f"at eta={eta}, kmax={kmax}; increase kmax",
            stacklevel=2,
        )
    return SeriesMoments(
        trace=float(w.sum()),
        purity=float((w ** 2).sum()),
        entropy=float(-_xlogx(w).sum() + 0.0),
        tail_bound=tail,
    )


@dataclass(frozen=True)
class ThermalState:
    """Single-oscillator thermal state with geometric weights.

    Temperature is measured in Boltzmann units; weights are
    (1 - e^{-1/T}) e^{-k/T}.  temperature = 0 is the pure vacuum, built via
    :meth:`vacuum` (the factory ``thermal_state`` rejects T <= 0).
    """

    temperature: float
    kmax: int = 200

    def __post_init__(self):
        if self.temperature < 0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")
        if self.kmax < 1:
            raise ValueError("kmax must be >= 1")

    @classmethod
    def vacuum(cls, kmax: int = 200) -> "ThermalState":
        """The T -> 0 limit: weights (1, 0, 0, ...), unit Wigner radius."""
        return cls(temperature=0.0, kmax=kmax)

    @property
    def weights(self) -> np.ndarray:
        k = np.arange(self.kmax + 1)
        if self.temperature == 0:
            w = np.zeros(self.kmax + 1)
            w[0] = 1.0
            return w
        q = np.exp(-1.0 / self.temperature)
        return (1.0 - q) * q ** k

    def entropy(self) -> float:
        """Closed form S(T) = (1/T)/(e^{1/T} - 1) - ln(1 - e^{-1/T})."""
        if self.temperature == 0:
            return 0.0
        beta = 1.0 / self.temperature
        return float(beta / np.expm1(beta) - np.log(-np.expm1(-beta)))

    def entropy_series(self) -> float:
        """-sum w_k ln w_k over the truncated ladder (cross-check route)."""
        return float(-_xlogx(self.weights).sum() + 0.0)

    def radius(self) -> float:
        return wigner_radius(self.temperature)


def thermal_state(T: float, kmax: int = 200) -> ThermalState:
    """Thermal state at T > 0; the T = 0 limit is ThermalState.vacuum()."""
    if T <= 0:
        raise ValueError(f"temperature must be > 0, got {T}")
    return ThermalState(temperature=float(T), kmax=kmax)


def wigner_radius(T: float) -> float:
    """Gaussian radius 1/sqrt(tanh(1/2T)) of the thermal Wigner function.

    Grows from 1 at T = 0; equals sqrt(cosh 2 eta) at the matching squeeze
    parameter cosh(2 eta) = 1/tanh(1/2T).
    """
    if T < 0:
        raise ValueError(f"temperature must be >= 0, got {T}")
    if T == 0:
        return 1.0
    return float(1.0 / np.sqrt(np.tanh(0.5 / T)))
