"""Galerkin solution of the prescribed-mean-curvature Poisson problem.

Everything happens in the Laplace eigenbasis of a flat torus, the one
compact model where the spectrum is explicit and the Ricci lower bound is
exactly zero.  A target profile f is expanded in eigenmodes, the conformal
weight psi_n = sum c_j/lambda_j phi_j matches the truncation exactly, and
Sobolev control of the sequence comes from the Bochner estimate.  This is
the only module that uses floating point; each operation states its
tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class NotL2Error(ValueError):
    """The requested singular profile is not square integrable."""


@dataclass(frozen=True)
class TorusMode:
    index: int
    eigenvalue: float
    frequency: tuple[int, ...]
    trig: str  # "const", "cos" or "sin"


@dataclass(frozen=True)
class FlatTorus:
    """Flat torus given by its side lengths; eigendata enumerated on demand.

    Mode 0 is the constant vol^{-1/2}; every nonzero frequency class
    contributes a cosine mode and a sine mode with eigenvalue
    sum_i (2 pi nu_i / L_i)^2.  Modes are ordered by (eigenvalue,
    frequency, cos-before-sin), which fixes the index once and for all.
    """

    side_lengths: tuple[float, ...]

    def __post_init__(self) -> None:
        sides = tuple(float(s) for s in self.side_lengths)
        if not sides or any(s <= 0 for s in sides):
            raise ValueError("side lengths must be positive")
        object.__setattr__(self, "side_lengths", sides)

    @property
    def dimension(self) -> int:
        return len(self.side_lengths)

    @property
    def volume(self) -> float:
        return math.prod(self.side_lengths)

    def modes(self, count: int) -> tuple[TorusMode, ...]:
        """Modes 0..count inclusive."""
        return _mode_table(self.side_lengths, count)

    def eigenvalue(self, index: int) -> float:
        return self.modes(index)[index].eigenvalue

    def sample_mode(self, mode: TorusMode, points: np.ndarray) -> np.ndarray:
        """Evaluate an orthonormal eigenfunction on an (N, d) point array."""
        if mode.trig == "const":
            return np.full(points.shape[0], 1.0 / math.sqrt(self.volume))
        phase = np.zeros(points.shape[0])
        for axis, nu in enumerate(mode.frequency):
            if nu:
                phase = phase + (2.0 * math.pi * nu / self.side_lengths[axis]) * points[:, axis]
        amplitude = math.sqrt(2.0 / self.volume)
        return amplitude * (np.cos(phase) if mode.trig == "cos" else np.sin(phase))

    def midpoint_grid(self, points_per_axis: int) -> np.ndarray:
        """Uniform midpoint nodes, shape (points_per_axis^d, d)."""
        axes = [
            (np.arange(points_per_axis) + 0.5) * (length / points_per_axis)
            for length in self.side_lengths
        ]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)


@lru_cache(maxsize=None)
def _mode_table(side_lengths: tuple[float, ...], count: int) -> tuple[TorusMode, ...]:
    dim = len(side_lengths)
    reps_needed = (count + 1) // 2 + 1
    bound = 1
    while True:
        reps = []
        for flat in np.ndindex(*(2 * bound + 1,) * dim):
            nu = tuple(int(v) - bound for v in flat)
            if all(v == 0 for v in nu):
                continue
            first = next(v for v in nu if v != 0)
            if first < 0:
                continue
            lam = sum((2.0 * math.pi * v / length) ** 2 for v, length in zip(nu, side_lengths))
            reps.append((lam, nu))
        reps.sort()
        # completeness: any frequency outside the box has a larger eigenvalue
        safe = (2.0 * math.pi * (bound + 1) / max(side_lengths)) ** 2
        usable = [r for r in reps if r[0] < safe]
        if len(usable) >= reps_needed:
            reps = usable
            break
        bound *= 2
    modes = [TorusMode(0, 0.0, (0,) * dim, "const")]
    for lam, nu in reps:
        for trig in ("cos", "sin"):
            if len(modes) > count:
                return tuple(modes)
            modes.append(TorusMode(len(modes), lam, nu, trig))
    return tuple(modes)


@dataclass(frozen=True)
class SpectralFunction:
    """Finitely materialized eigen-coefficients plus a certified L2 tail."""

    coeffs: dict[int, float]
    tail_sq: float = 0.0

    @property
    def norm_sq(self) -> float:
        return sum(c * c for c in self.coeffs.values()) + self.tail_sq

    @property
    def max_index(self) -> int:
        return max(self.coeffs, default=0)

    def coefficient(self, index: int) -> float:
        return self.coeffs.get(index, 0.0)


@dataclass(frozen=True)
class GalerkinSolution:
    """Truncated conformal weight psi_n with its diagnostics."""

    truncation: int
    psi_coeffs: dict[int, float]
    eigenvalues: dict[int, float]
    source_mode0: float
    residual_l2: float
    h2_norm: float

    def curvature_coeffs(self) -> dict[int, float]:
        """Eigen-coefficients of the resulting mean curvature.

        Mode 0 is carried by the reference-metric constant; every other
        matched mode returns lambda_j * psi_j.
        """
        out = {0: self.source_mode0}
        for j, value in self.psi_coeffs.items():
            out[j] = self.eigenvalues[j] * value
        return out


def truncate(f: SpectralFunction, n: int) -> SpectralFunction:
    """Drop every coefficient beyond mode n; mode 0 always survives."""
    if n < 0:
        raise ValueError("truncation order must be nonnegative")
    kept = {j: c for j, c in f.coeffs.items() if j <= n}
    return SpectralFunction(coeffs=kept, tail_sq=0.0)


def solve_weight(f: SpectralFunction, n: int, manifold: FlatTorus) -> GalerkinSolution:
    """Conformal weight matching the first n modes of f.

    psi_j = c_j / lambda_j for 1 <= j <= n (mode 0 never divides: the
    compatibility condition is mode-0 data and is carried by the reference
    metric).  The residual against the full f is the tail norm, and the
    spectral H2 norm of psi is reported.
    """
    modes = manifold.modes(max(n, f.max_index))
    psi: dict[int, float] = {}
    eigs: dict[int, float] = {}
    for j, c in sorted(f.coeffs.items()):
        if 1 <= j <= n and c != 0.0:
            lam = modes[j].eigenvalue
            psi[j] = c / lam
            eigs[j] = lam
    tail_sq = f.tail_sq + sum(c * c for j, c in f.coeffs.items() if j > n)
    h2_sq = sum((1.0 + eigs[j] ** 2) * value**2 for j, value in psi.items())
    return GalerkinSolution(
        truncation=n,
        psi_coeffs=psi,
        eigenvalues=eigs,
        source_mode0=f.coefficient(0),
        residual_l2=math.sqrt(tail_sq),
        h2_norm=math.sqrt(h2_sq),
    )


def spectral_h2_gap(f: SpectralFunction, m: int, n: int, manifold: FlatTorus) -> float:
    """Exact squared spectral H2 distance between psi_n and psi_m."""
    modes = manifold.modes(max(n, f.max_index))
    total = 0.0
    for j, c in sorted(f.coeffs.items()):
        if m < j <= n and j >= 1:
            lam = modes[j].eigenvalue
            total += (1.0 + lam**2) * (c / lam) ** 2
    return total


def h2_cauchy_gap(
    f: SpectralFunction, n: int, m_idx: int, manifold: FlatTorus, kappa: float
) -> float:
    """Bochner upper bound for the squared H2 gap between psi_n and psi_m.

    Bound = (1 + C) * sum_{j=m+1}^{n} (1/lambda_j^2 + 1) c_j^2 with
    C = max(1 + |kappa| eps, |kappa| / (4 eps)), eps = 1/(2 |kappa|); for
    kappa = 0 the Young term drops and C = 1.  The bound is asserted to
    dominate the directly computed spectral gap.
    """
    if not n > m_idx >= 0:
        raise ValueError("need n > m >= 0")
    if kappa == 0:
        const = 1.0
    else:
        eps = 1.0 / (2.0 * abs(kappa))
        const = max(1.0 + abs(kappa) * eps, abs(kappa) / (4.0 * eps))
    modes = manifold.modes(max(n, f.max_index))
    total = 0.0
    for j, c in sorted(f.coeffs.items()):
        if m_idx < j <= n and j >= 1:
            lam = modes[j].eigenvalue
            total += (1.0 / lam**2 + 1.0) * c * c
    bound = (1.0 + const) * total
    gap = spectral_h2_gap(f, m_idx, n, manifold)
    assert bound >= gap * (1.0 - 1e-12), "Bochner bound must dominate the exact gap"
    return bound


def compatibility_constant(
    profile_mean: float, hym_c: float, manifold: FlatTorus | None = None
) -> float:
    """Additive shift moving a profile's mean onto the topological target.

    The prescribed equation needs (1/2pi) x mean = hym constant, i.e. a
    target mean of 2 pi * hym_c; only mode-0 arithmetic is involved, so the
    manifold argument is accepted for interface uniformity but unused.
    """
    return 2.0 * math.pi * float(hym_c) - profile_mean


@dataclass(frozen=True)
class SingularProfile:
    """Distance-power singularity d(x, Y)^{-s} along a codimension-k set."""

    ambient_dim: int
    codim: int
    exponent: float
    offset: float = 0.0

    def __post_init__(self) -> None:
        if self.codim < 1 or self.codim > self.ambient_dim:
            raise ValueError("codimension must lie in 1..ambient_dim")
        if self.exponent <= 0:
            raise ValueError("exponent must be positive")

    @property
    def square_integrable(self) -> bool:
        return self.exponent < self.codim / 2


@dataclass(frozen=True)
class IntegrabilityResult:
    finite: bool
    certificate: str  # "convergent" or "divergent"
    tube_integral: float
    cutoff_steps: int


_DIVERGENCE_FACTOR = 1.0e6
_MAX_CUTOFF_STEPS = 250


def integrability_check(p: SingularProfile) -> IntegrabilityResult:
    """Analytic L2 flag for d(.,Y)^{-s} plus a numeric certificate.

    The analytic flag is s < k/2.  The certificate evaluates the radial
    model integral int_t^1 r^{k-2s-1} dr at cutoffs t = 10^-i and declares
    convergence when the values are Cauchy in the cutoff, divergence when
    they exceed 10^6 times the first value or when the increments stop
    decaying (the logarithmic boundary case).
    """
    power = p.codim - 2.0 * p.exponent

    def tail_value(step: int) -> float:
        cutoff = 10.0**-step
        if power == 0.0:
            return -math.log(cutoff)
        return (1.0 - cutoff**power) / power

    values = [tail_value(1)]
    certificate = None
    while len(values) < _MAX_CUTOFF_STEPS:
        try:
            values.append(tail_value(len(values) + 1))
        except OverflowError:
            certificate = "divergent"
            break
        if values[-1] > _DIVERGENCE_FACTOR * values[0]:
            certificate = "divergent"
            break
        if abs(values[-1] - values[-2]) <= 1e-12 * max(1.0, abs(values[-1])):
            certificate = "convergent"
            break
    if certificate is None:
        last, prev = values[-1] - values[-2], values[-2] - values[-3]
        certificate = "divergent" if last > 0.99 * prev else "convergent"
    tube = values[-1] if certificate == "convergent" else math.inf
    return IntegrabilityResult(
        finite=p.square_integrable,
        certificate=certificate,
        tube_integral=tube,
        cutoff_steps=len(values),
    )


def _profile_values(p: SingularProfile, manifold: FlatTorus, points: np.ndarray) -> np.ndarray:
    """d(x, Y)^{-s} + offset where Y is the origin point (k = d) or the
    coordinate subtorus obtained by zeroing the first k coordinates."""
    if p.ambient_dim != manifold.dimension:
        raise ValueError("profile and manifold dimensions disagree")
    sq = np.zeros(points.shape[0])
    for axis in range(p.codim):
        length = manifold.side_lengths[axis]
        folded = np.minimum(points[:, axis], length - points[:, axis])
        sq = sq + folded**2
    return sq ** (-p.exponent / 2.0) + p.offset


def profile_mean(
    p: SingularProfile,
    manifold: FlatTorus,
    points_per_axis: int = 256,
    refinements: int = 2,
) -> float:
    """Volume average of the profile by midpoint quadrature.

    The grid is refined dyadically; successive differences must decay
    (Richardson consistency check) and the finest-level value is returned.
    """
    levels = [points_per_axis * 2**k for k in range(refinements + 1)]
    means = []
    for m in levels:
        values = _profile_values(p, manifold, manifold.midpoint_grid(m))
        means.append(float(np.mean(values)))
    if len(means) >= 3:
        first, second = abs(means[1] - means[0]), abs(means[2] - means[1])
        assert second <= first or first < 1e-12, "midpoint refinement is not converging"
    return means[-1]


def distance_profile_coefficients(
    p: SingularProfile,
    manifold: FlatTorus,
    n: int,
    points_per_axis: int | None = None,
) -> SpectralFunction:
    """Eigen-coefficients of the singular profile up to mode n, by quadrature.

    Requires s < k/2 so the profile is square integrable.  The certified
    tail is the quadrature L2 mass not captured by the materialized modes,
    which keeps Parseval partial sums monotone and bounded.
    """
    if not p.square_integrable:
        raise NotL2Error(f"exponent {p.exponent} >= codim/2 = {p.codim / 2}")
    if points_per_axis is None:
        points_per_axis = 8192 if manifold.dimension == 1 else 512
    grid = manifold.midpoint_grid(points_per_axis)
    cell = manifold.volume / grid.shape[0]
    values = _profile_values(p, manifold, grid)
    norm_sq = float(np.sum(values**2)) * cell
    coeffs: dict[int, float] = {}
    captured = 0.0
    for mode in manifold.modes(n):
        c = float(np.dot(manifold.sample_mode(mode, grid), values)) * cell
        coeffs[mode.index] = c
        captured += c * c
    return SpectralFunction(coeffs=coeffs, tail_sq=max(norm_sq - captured, 0.0))
