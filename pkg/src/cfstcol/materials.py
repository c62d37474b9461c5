"""Constitutive models for the steel tube and the confined concrete core.

The steel model is the four-stage curve (elastic, yield plateau, power-law
hardening, ultimate plateau) used for structural steels between 200 and
800 MPa.  The concrete model is the three-stage confined curve (nonlinear
ascent, plateau between the unconfined and confined peak strains,
exponential softening to a residual stress), driven by the tube-confinement
regressions.  The module also produces the concrete-damaged-plasticity
parameter set used by FE material cards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .section import ColumnSpec, SteelMaterial

PSI_MAX = 56.3  # deg, upper bound of the dilation-angle regression
BETA_SOFTENING = 1.2
EPS_C0_FIT_RANGE = (6.0, 105.0)  # MPa, fitted range of the peak-strain regression


class CurveKind(Enum):
    STEEL = "STEEL"
    CONCRETE_CONFINED = "CONCRETE_CONFINED"


@dataclass(frozen=True)
class StressStrainCurve:
    """Ordered (strain, stress MPa) samples for one material."""

    points: tuple[tuple[float, float], ...]
    kind: CurveKind

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            raise ValueError("a curve needs at least two points")
        if self.points[0] != (0.0, 0.0):
            raise ValueError("curve must start at (0, 0)")
        strains = [p[0] for p in self.points]
        if any(b <= a for a, b in zip(strains, strains[1:])):
            raise ValueError("strains must be strictly increasing")

    @property
    def strains(self) -> tuple[float, ...]:
        return tuple(p[0] for p in self.points)

    @property
    def stresses(self) -> tuple[float, ...]:
        return tuple(p[1] for p in self.points)


# ---------------------------------------------------------------------------
# steel
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SteelCurveParams:
    """Breakpoints and hardening exponent of the steel curve.

    ``p`` is None when f_u == f_y, in which case the hardening stage
    degenerates to a continued plateau at f_y.
    """

    eps_y: float
    eps_p: float
    eps_u: float
    E_p: float
    p: float | None
    flags: tuple[str, ...] = ()

    @property
    def degenerate_plateau(self) -> bool:
        return self.p is None


def steel_curve_params(steel: SteelMaterial) -> SteelCurveParams:
    """Curve parameters for a steel: eps_y = f_y/E_s, hardening onset/ultimate strains.

    The onset and ultimate strains use one branch up to 300 MPa and a
    linearly reduced branch up to 800 MPa; above 800 MPa the second branch
    is extrapolated and flagged.
    """
    f_y, f_u, E_s = steel.f_y, steel.f_u, steel.E_s
    eps_y = f_y / E_s
    flags = list(steel.validity_flags)
    if f_y <= 300.0:
        eps_p = 15.0 * eps_y
        eps_u = 100.0 * eps_y
    else:
        eps_p = (15.0 - 0.018 * (f_y - 300.0)) * eps_y
        eps_u = (100.0 - 0.15 * (f_y - 300.0)) * eps_y
        if f_y > 800.0:
            flags.append("hardening strains extrapolated beyond 800 MPa")
    if not eps_y < eps_p < eps_u:
        raise ValueError(
            f"strain ordering eps_y < eps_p < eps_u breaks down at f_y={f_y:g} MPa"
        )
    E_p = 0.02 * E_s
    if f_u > f_y:
        p = E_p * (eps_u - eps_p) / (f_u - f_y)
    else:
        p = None
        flags.append("f_u equals f_y; hardening stage degenerates to a plateau")
    return SteelCurveParams(eps_y, eps_p, eps_u, E_p, p, tuple(flags))


def steel_stress(eps: float, steel: SteelMaterial, params: SteelCurveParams) -> float:
    """Steel stress (MPa) at a tensile strain magnitude.

    Stages: elastic up to eps_y, yield plateau to eps_p, power-law hardening
    to eps_u, constant f_u beyond.  Compression is handled by magnitude
    symmetry at call sites; negative strains are rejected here.
    """
    if eps < 0:
        raise ValueError("strain must be non-negative (use magnitude symmetry for compression)")
    if eps <= params.eps_y:
        return steel.E_s * eps
    if eps <= params.eps_p or params.degenerate_plateau:
        return steel.f_y
    if eps <= params.eps_u:
        frac = (params.eps_u - eps) / (params.eps_u - params.eps_p)
        return steel.f_u - (steel.f_u - steel.f_y) * frac**params.p
    return steel.f_u


# ---------------------------------------------------------------------------
# concrete-damaged-plasticity scalars
# ---------------------------------------------------------------------------


def biaxial_ratio(f_c: float) -> float:
    """Biaxial-to-uniaxial strength ratio f_b0/f_c = 1.5/f_c^0.075."""
    if f_c <= 0:
        raise ValueError("f_c must be positive")
    return 1.5 / f_c**0.075


def kc(f_c: float) -> float:
    """Deviatoric shape factor K_c = 5.5/(5 + 2*f_c^0.075)."""
    if f_c <= 0:
        raise ValueError("f_c must be positive")
    return 5.5 / (5.0 + 2.0 * f_c**0.075)


def dilation_angle(xi_c: float) -> float:
    """Dilation angle (degrees) from the confinement factor, clamped to [0, 56.3].

    Linear branch 56.3*(1 - xi_c) up to xi_c = 0.5, exponential decay
    6.672*exp(7.4/(4.64 + xi_c)) beyond; the branches agree at 0.5.
    """
    if xi_c < 0:
        raise ValueError("xi_c must be non-negative")
    if xi_c <= 0.5:
        psi = PSI_MAX * (1.0 - xi_c)
    else:
        psi = 6.672 * math.exp(7.4 / (4.64 + xi_c))
    return min(max(psi, 0.0), PSI_MAX)


def fracture_energy(f_c: float, d_max: float) -> float:
    """Tensile fracture energy G_f (N/mm).

    (0.00469*d_max^2 - 0.5*d_max + 26) * (f_c/10)^0.7 * 1e-3; the quadratic
    prefactor stays positive for every d_max >= 0.
    """
    if f_c <= 0:
        raise ValueError("f_c must be positive")
    if d_max < 0:
        raise ValueError("d_max must be non-negative")
    return (0.00469 * d_max**2 - 0.5 * d_max + 26.0) * (f_c / 10.0) ** 0.7 * 1e-3


@dataclass(frozen=True)
class CdpmParameterSet:
    """Concrete-damaged-plasticity inputs: psi (deg), eccentricity, f_b0/f_c, K_c, viscosity, G_f (N/mm)."""

    psi: float
    ecc: float
    fb0_ratio: float
    K_c: float
    viscosity: float
    G_f: float


def cdpm_parameters(column: ColumnSpec) -> CdpmParameterSet:
    """Plasticity parameter set for a column; eccentricity 0.1 and viscosity 0 are tool defaults."""
    f_c = column.concrete.f_c
    return CdpmParameterSet(
        psi=dilation_angle(column.xi_c),
        ecc=0.1,
        fb0_ratio=biaxial_ratio(f_c),
        K_c=kc(f_c),
        viscosity=0.0,
        G_f=fracture_energy(f_c, column.concrete.d_max),
    )


# ---------------------------------------------------------------------------
# confined concrete
# ---------------------------------------------------------------------------


def peak_strain_unconfined(f_c: float) -> float:
    """Unconfined peak strain eps_c0 = (-0.067*f_c^2 + 29.9*f_c + 1053)*1e-6."""
    if f_c <= 0:
        raise ValueError("f_c must be positive")
    return (-0.067 * f_c**2 + 29.9 * f_c + 1053.0) * 1e-6


def confining_pressure(f_y: float, f_c: float, dt_ratio: float) -> float:
    """Lateral confining pressure f_r (MPa) at ultimate.

    [(1 + 0.03224*f_y) / (1 + 1.52e-6*f_c^-4.5)] * exp(-0.0212*D/t).  The
    f_c term is numerically negligible (the regression found no f_c
    influence) but is evaluated as published.
    """
    if f_y <= 0 or f_c <= 0 or dt_ratio <= 0:
        raise ValueError("f_y, f_c and D/t must be positive")
    return (1.0 + 0.03224 * f_y) / (1.0 + 1.52e-6 * f_c**-4.5) * math.exp(-0.0212 * dt_ratio)


def confined_peak_strain(eps_c0: float, f_r: float, f_c: float) -> float:
    """Confined peak strain eps_cc = eps_c0 * (1 + 17.4*(f_r/f_c)^1.06)."""
    if eps_c0 <= 0 or f_c <= 0:
        raise ValueError("eps_c0 and f_c must be positive")
    if f_r < 0:
        raise ValueError("f_r must be non-negative")
    if f_r == 0.0:
        return eps_c0
    return eps_c0 * (1.0 + 17.4 * (f_r / f_c) ** 1.06)


def residual_stress(xi_c: float, f_c: float) -> float:
    """Residual stress f_re = 0.7*(1 - exp(-1.38*xi_c))*f_c, capped at 0.25*f_c."""
    if xi_c < 0:
        raise ValueError("xi_c must be non-negative")
    if f_c <= 0:
        raise ValueError("f_c must be positive")
    return min(0.7 * (1.0 - math.exp(-1.38 * xi_c)) * f_c, 0.25 * f_c)


def softening_params(xi_c: float) -> tuple[float, float]:
    """Softening-branch shape (alpha, beta); beta is fixed at 1.2."""
    if xi_c < 0:
        raise ValueError("xi_c must be non-negative")
    alpha = 0.04 - 0.036 / (1.0 + math.exp(6.08 * xi_c - 3.49))
    return alpha, BETA_SOFTENING


@dataclass(frozen=True)
class ConfinedConcreteParams:
    """Confined-curve parameters: strains, confining pressure, residual stress, softening shape."""

    eps_c0: float
    f_r: float
    eps_cc: float
    f_re: float
    alpha: float
    beta: float
    flags: tuple[str, ...] = ()


def confined_concrete_params(
    column: ColumnSpec, f_r_override: float | None = None
) -> ConfinedConcreteParams:
    """Assemble the confined-curve parameters for a column.

    ``f_r_override`` substitutes the confining pressure (e.g. 0 to study the
    unconfined limit) while the rest of the chain is recomputed from it.
    """
    f_c = column.concrete.f_c
    flags = list(column.concrete.validity_flags)
    lo, hi = EPS_C0_FIT_RANGE
    if not lo <= f_c <= hi:
        flags.append(f"peak-strain regression fitted for f_c in [{lo:g}, {hi:g}] MPa")
    eps_c0 = peak_strain_unconfined(f_c)
    if f_r_override is not None:
        if f_r_override < 0:
            raise ValueError("f_r override must be non-negative")
        f_r = f_r_override
    else:
        f_r = confining_pressure(column.steel.f_y, f_c, column.dt_ratio)
    eps_cc = confined_peak_strain(eps_c0, f_r, f_c)
    f_re = residual_stress(column.xi_c, f_c)
    alpha, beta = softening_params(column.xi_c)
    return ConfinedConcreteParams(eps_c0, f_r, eps_cc, f_re, alpha, beta, tuple(flags))


def concrete_stress(eps: float, f_c: float, E_c: float, params: ConfinedConcreteParams) -> float:
    """Confined concrete stress (MPa) at a compressive strain magnitude.

    Nonlinear ascent to f_c at eps_c0, constant f_c to eps_cc, then
    exponential softening towards the residual stress.
    """
    if eps < 0:
        raise ValueError("strain must be non-negative")
    if eps == 0.0:
        return 0.0
    if eps <= params.eps_c0:
        A = E_c * params.eps_c0 / f_c
        B = (A - 1.0) ** 2 / 0.55 - 1.0
        x = eps / params.eps_c0
        return f_c * (A * x + B * x * x) / (1.0 + (A - 2.0) * x + (B + 1.0) * x * x)
    if eps <= params.eps_cc:
        return f_c
    decay = math.exp(-(((eps - params.eps_cc) / params.alpha) ** params.beta))
    return params.f_re + (f_c - params.f_re) * decay


# ---------------------------------------------------------------------------
# curve sampling
# ---------------------------------------------------------------------------


def sample_grid(breakpoints: Sequence[float], eps_max: float, n: int) -> list[float]:
    """Monotone strain grid on [0, eps_max] with every interior breakpoint placed exactly.

    The remaining samples are spread uniformly within the stages between
    breakpoints, allocated proportionally to stage length.  The grid has n
    points when n covers all knots, and grows beyond n otherwise so that no
    breakpoint is ever dropped.
    """
    if eps_max <= 0:
        raise ValueError("eps_max must be positive")
    if n < 2:
        raise ValueError("need at least two samples")
    knots = sorted({0.0, eps_max} | {b for b in breakpoints if 0.0 < b < eps_max})
    extra = max(n - len(knots), 0)
    lengths = [b - a for a, b in zip(knots, knots[1:])]
    total = eps_max
    quotas = [extra * length / total for length in lengths]
    counts = [int(q) for q in quotas]
    leftover = extra - sum(counts)
    order = sorted(range(len(quotas)), key=lambda i: (counts[i] - quotas[i], i))
    for i in order[:leftover]:
        counts[i] += 1
    grid: list[float] = []
    for (a, b), k in zip(zip(knots, knots[1:]), counts):
        grid.append(a)
        grid.extend(a + (b - a) * j / (k + 1) for j in range(1, k + 1))
    grid.append(knots[-1])
    return grid


def sample_steel_curve(
    steel: SteelMaterial, n: int, eps_max: float | None = None
) -> StressStrainCurve:
    """Tabulate the steel curve with the breakpoint strains sampled exactly.

    eps_max defaults to the ultimate strain.
    """
    params = steel_curve_params(steel)
    if eps_max is None:
        eps_max = params.eps_u
    grid = sample_grid((params.eps_y, params.eps_p, params.eps_u), eps_max, n)
    points = tuple((e, steel_stress(e, steel, params)) for e in grid)
    return StressStrainCurve(points, CurveKind.STEEL)


def sample_concrete_curve(column: ColumnSpec, n: int, eps_max: float) -> StressStrainCurve:
    """Tabulate the confined concrete curve for a column, breakpoints sampled exactly."""
    params = confined_concrete_params(column)
    f_c = column.concrete.f_c
    E_c = column.concrete.E_c
    grid = sample_grid((params.eps_c0, params.eps_cc), eps_max, n)
    points = tuple((e, concrete_stress(e, f_c, E_c, params)) for e in grid)
    return StressStrainCurve(points, CurveKind.CONCRETE_CONFINED)
