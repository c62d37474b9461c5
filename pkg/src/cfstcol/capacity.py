"""Ultimate axial capacity predictors for circular CFST short columns.

Thirteen methods: five design codes (EC4, AISC, CISC, DBJ, ACI), seven
published formulas (O'Shea & Bridge, Yu, Liu, Sun, Zhong & Miao, Guo,
De Oliveira) and the eta_c/eta_s superposition formula.  Every predictor
returns the load in newtons together with an applicability report built
from the method's published limits and any diagnostics; an inapplicable
method still reports its load, since subset statistics need it.

All predictors are pure functions of the column and an immutable settings
value; non-physical intermediate results are surfaced as diagnostics, never
silently clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, NamedTuple

from .section import (
    ColumnSpec,
    ConcreteClass,
    classify_concrete,
    section_second_moments,
)

# Parameter envelope of the test database the superposition factors were
# calibrated on; the formula stays applicable outside it but flags the excursion.
DATABASE_ENVELOPE: dict[str, tuple[float, float]] = {
    "f_y": (185.7, 853.0),
    "f_c": (12.5, 185.6),
    "D": (48.0, 1020.0),
    "L/D": (0.8, 5.0),
    "D/t": (10.1, 220.9),
}

NON_PHYSICAL_CONFINED_STRESS = "NON_PHYSICAL_CONFINED_STRESS"
NON_PHYSICAL_LENGTH_FACTOR = "NON_PHYSICAL_LENGTH_FACTOR"


class MethodId(Enum):
    EC4 = "ec4"
    AISC = "aisc"
    CISC = "cisc"
    DBJ = "dbj"
    ACI = "aci"
    OSHEA = "oshea"
    YU = "yu"
    LIU = "liu"
    SUN = "sun"
    ZHONG_MIAO = "zhong_miao"
    GUO = "guo"
    DE_OLIVEIRA = "de_oliveira"
    PROPOSED = "proposed"


class OliveiraMode(Enum):
    """Slenderness factor handling for the De Oliveira formula above L/D = 3.

    AS_PRINTED evaluates lambda = -0.18*ln(L/D) exactly as published, which
    is negative there and flagged; CORRECTED uses the continuous reading
    lambda = 1 - 0.18*ln((L/D)/3).
    """

    AS_PRINTED = "as_printed"
    CORRECTED = "corrected"


@dataclass(frozen=True)
class PredictionSettings:
    """Auditable constants the published formulas leave open."""

    K_e: float = 0.6  # EC4 stiffness factor on the concrete term
    K: float = 1.0  # effective length factor (pin-ended stubs)
    r_cc: float = 1.0  # CISC C_fs/C_f stiffness ratio
    oliveira_mode: OliveiraMode = OliveiraMode.AS_PRINTED
    dbj_fck_factor: float = 0.67  # cube-to-characteristic strength factor

    def __post_init__(self) -> None:
        if self.K_e <= 0 or self.K <= 0 or self.r_cc <= 0 or self.dbj_fck_factor <= 0:
            raise ValueError("all settings factors must be positive")


DEFAULT_SETTINGS = PredictionSettings()


class Violation(NamedTuple):
    """One failed applicability limit: its printed form, the bound and the actual value."""

    limit: str
    bound: float
    actual: float


@dataclass(frozen=True)
class ApplicabilityReport:
    applicable: bool
    violations: tuple[Violation, ...]

    def __post_init__(self) -> None:
        if self.applicable != (len(self.violations) == 0):
            raise ValueError("applicable must mean exactly: no violations")

    @classmethod
    def from_violations(cls, violations: list[Violation]) -> "ApplicabilityReport":
        return cls(not violations, tuple(violations))


@dataclass(frozen=True)
class CapacityPrediction:
    """Predicted ultimate load (N) with gating, intermediates and diagnostics."""

    method: MethodId
    N_u: float
    applicability: ApplicabilityReport
    intermediates: dict[str, float] = field(default_factory=dict)
    diagnostics: tuple[str, ...] = ()

    @property
    def N_u_kN(self) -> float:
        return self.N_u / 1e3


@dataclass(frozen=True)
class Ec4Coefficients:
    """EC4 intermediate quantities: relative slenderness and the clamped coefficients."""

    lambda_bar: float
    eta_a: float
    eta_c_ec4: float
    N_pl_Rk: float
    N_cr: float


@dataclass(frozen=True)
class ProposedFactors:
    """Concrete intensification and steel diminution factors of the superposition formula."""

    eta_c: float
    eta_s: float


# ---------------------------------------------------------------------------
# applicability limits
# ---------------------------------------------------------------------------


def _limits_ec4_aci(column: ColumnSpec) -> list[Violation]:
    out = []
    bound = math.sqrt(8.0 * column.steel.E_s / column.steel.f_y)
    if column.dt_ratio > bound:
        out.append(Violation("D/t <= sqrt(8*Es/fy)", bound, column.dt_ratio))
    if column.concrete.f_c < 17.2:
        out.append(Violation("f_c' >= 17.2 MPa", 17.2, column.concrete.f_c))
    return out


def _limits_aisc(column: ColumnSpec) -> list[Violation]:
    out = []
    bound = 0.15 * column.steel.E_s / column.steel.f_y
    if column.dt_ratio > bound:
        out.append(Violation("D/t <= 0.15*Es/fy", bound, column.dt_ratio))
    if column.steel.f_y > 525.0:
        out.append(Violation("fy <= 525 MPa", 525.0, column.steel.f_y))
    f_c = column.concrete.f_c
    if f_c < 21.0:
        out.append(Violation("21 <= f_c' <= 70 MPa", 21.0, f_c))
    elif f_c > 70.0:
        out.append(Violation("21 <= f_c' <= 70 MPa", 70.0, f_c))
    return out


def _limits_dbj(column: ColumnSpec) -> list[Violation]:
    out = []
    f_y = column.steel.f_y
    bound = 150.0 * 235.0 / f_y
    if column.dt_ratio > bound:
        out.append(Violation("D/t <= 150*235/fy", bound, column.dt_ratio))
    if f_y < 235.0:
        out.append(Violation("235 <= fy <= 420 MPa", 235.0, f_y))
    elif f_y > 420.0:
        out.append(Violation("235 <= fy <= 420 MPa", 420.0, f_y))
    f_c = column.concrete.f_c
    if f_c < 24.0:
        out.append(Violation("24 <= f_c' <= 70 MPa", 24.0, f_c))
    elif f_c > 70.0:
        out.append(Violation("24 <= f_c' <= 70 MPa", 70.0, f_c))
    return out


def _limits_oshea(column: ColumnSpec) -> list[Violation]:
    if column.dt_ratio > 200.0:
        return [Violation("D/t <= 200", 200.0, column.dt_ratio)]
    return []


def _limits_yu(column: ColumnSpec) -> list[Violation]:
    out = []
    f_y = column.steel.f_y
    if f_y < 235.0:
        out.append(Violation("235 <= fy <= 345 MPa", 235.0, f_y))
    elif f_y > 345.0:
        out.append(Violation("235 <= fy <= 345 MPa", 345.0, f_y))
    f_c = column.concrete.f_c
    if f_c < 30.0:
        out.append(Violation("30 <= f_c' <= 60 MPa", 30.0, f_c))
    elif f_c > 60.0:
        out.append(Violation("30 <= f_c' <= 60 MPa", 60.0, f_c))
    xi = column.xi_c
    if xi < 0.2:
        out.append(Violation("0.2 <= xi <= 2", 0.2, xi))
    elif xi > 2.0:
        out.append(Violation("0.2 <= xi <= 2", 2.0, xi))
    return out


def _limits_guo(column: ColumnSpec) -> list[Violation]:
    if column.xi_c > 1.7:
        return [Violation("xi <= 1.7", 1.7, column.xi_c)]
    return []


def _limits_oliveira(column: ColumnSpec) -> list[Violation]:
    ld = column.ld_ratio
    if ld < 1.0:
        return [Violation("1 <= L/D <= 10", 1.0, ld)]
    if ld > 10.0:
        return [Violation("1 <= L/D <= 10", 10.0, ld)]
    return []


def _no_limits(column: ColumnSpec) -> list[Violation]:
    return []


_LIMIT_CHECKS: dict[MethodId, Callable[[ColumnSpec], list[Violation]]] = {
    MethodId.EC4: _limits_ec4_aci,
    MethodId.ACI: _limits_ec4_aci,
    MethodId.AISC: _limits_aisc,
    MethodId.CISC: _no_limits,
    MethodId.DBJ: _limits_dbj,
    MethodId.OSHEA: _limits_oshea,
    MethodId.YU: _limits_yu,
    MethodId.LIU: _no_limits,
    MethodId.SUN: _no_limits,
    MethodId.ZHONG_MIAO: _no_limits,
    MethodId.GUO: _limits_guo,
    MethodId.DE_OLIVEIRA: _limits_oliveira,
    MethodId.PROPOSED: _no_limits,
}


def check_applicability(method: MethodId, column: ColumnSpec) -> ApplicabilityReport:
    """Evaluate the published limits of one method against a column."""
    try:
        checker = _LIMIT_CHECKS[method]
    except (KeyError, TypeError):
        raise ValueError(f"unknown method: {method!r}") from None
    return ApplicabilityReport.from_violations(checker(column))


# ---------------------------------------------------------------------------
# design codes
# ---------------------------------------------------------------------------


def predict_aci(column: ColumnSpec) -> CapacityPrediction:
    """ACI squash load N = A_s*f_y + 0.85*A_c*f_c."""
    N = column.A_s * column.steel.f_y + 0.85 * column.A_c * column.concrete.f_c
    return CapacityPrediction(MethodId.ACI, N, check_applicability(MethodId.ACI, column))


def ec4_coefficients(
    column: ColumnSpec, settings: PredictionSettings = DEFAULT_SETTINGS
) -> Ec4Coefficients:
    """Relative slenderness and the (clamped) EC4 coefficients for a column."""
    I_s, I_c = section_second_moments(column.section)
    EI_eff = column.steel.E_s * I_s + settings.K_e * column.concrete.E_c * I_c
    N_cr = math.pi**2 * EI_eff / (settings.K * column.section.L) ** 2
    N_pl_Rk = column.steel.f_y * column.A_s + 0.85 * column.concrete.f_c * column.A_c
    lam = math.sqrt(N_pl_Rk / N_cr)
    eta_a = min(0.25 * (3.0 + 2.0 * lam), 1.0)
    eta_c4 = max(4.9 - 18.5 * lam + 17.0 * lam**2, 0.0)
    return Ec4Coefficients(lam, eta_a, eta_c4, N_pl_Rk, N_cr)


def predict_ec4(
    column: ColumnSpec, settings: PredictionSettings = DEFAULT_SETTINGS
) -> CapacityPrediction:
    """EC4 capacity with the confinement enhancement term on the concrete part."""
    c = ec4_coefficients(column, settings)
    f_y, f_c = column.steel.f_y, column.concrete.f_c
    D, t = column.section.D, column.section.t
    N = c.eta_a * column.A_s * f_y + column.A_c * f_c * (
        1.0 + c.eta_c_ec4 * (t * f_y) / (D * f_c)
    )
    inter = {
        "lambda_bar": c.lambda_bar,
        "eta_a": c.eta_a,
        "eta_c_ec4": c.eta_c_ec4,
        "N_pl_Rk": c.N_pl_Rk,
        "N_cr": c.N_cr,
    }
    return CapacityPrediction(MethodId.EC4, N, check_applicability(MethodId.EC4, column), inter)


def predict_aisc(
    column: ColumnSpec, settings: PredictionSettings = DEFAULT_SETTINGS
) -> CapacityPrediction:
    """AISC column curve applied to the composite squash load P_0.

    C_3 is evaluated without the 0.9 cap (none is printed with the formula);
    a diagnostic notes when it exceeds 0.9.
    """
    f_y, f_c = column.steel.f_y, column.concrete.f_c
    A_s, A_c = column.A_s, column.A_c
    P_0 = 0.95 * f_c * A_c + f_y * A_s
    C_3 = 0.6 + 2.0 * (A_s / (A_s + A_c))
    I_s, I_c = section_second_moments(column.section)
    EI_eff = column.steel.E_s * I_s + C_3 * column.concrete.E_c * I_c
    P_e = math.pi**2 * EI_eff / (settings.K * column.section.L) ** 2
    if P_e > 0.44 * P_0:
        N = P_0 * 0.658 ** (P_0 / P_e)
    else:
        N = 0.877 * P_e
    diagnostics = []
    if C_3 > 0.9:
        diagnostics.append(f"C_3={C_3:.4g} exceeds 0.9 (no cap applied, as published)")
    inter = {"P_0": P_0, "P_e": P_e, "C_3": C_3}
    return CapacityPrediction(
        MethodId.AISC, N, check_applicability(MethodId.AISC, column), inter, tuple(diagnostics)
    )


def predict_cisc(
    column: ColumnSpec, settings: PredictionSettings = DEFAULT_SETTINGS
) -> CapacityPrediction:
    """CISC capacity with the short-column tau/tau' factors and slenderness reduction."""
    f_y, f_c = column.steel.f_y, column.concrete.f_c
    A_s, A_c = column.A_s, column.A_c
    ld = column.ld_ratio
    if ld < 25.0:
        rho = 0.02 * (25.0 - ld)
        tau = (1.0 + rho + rho**2) ** -0.5
        tau_p = 1.0 + (25.0 * rho**2 * tau / column.dt_ratio) * (f_y / (0.8 * f_c))
    else:
        rho = 0.0
        tau = 1.0
        tau_p = 1.0
    base = tau * A_s * f_y + tau_p * 0.85 * A_c * f_c
    I_s, I_c = section_second_moments(column.section)
    EI = column.steel.E_s * I_s + 0.6 * column.concrete.E_c * I_c / settings.r_cc
    lam = math.sqrt(base / (math.pi**2 * EI / (settings.K * column.section.L) ** 2))
    N = base * (1.0 + lam**3.6) ** -0.556
    inter = {"rho": rho, "tau": tau, "tau_prime": tau_p, "lambda": lam}
    return CapacityPrediction(MethodId.CISC, N, check_applicability(MethodId.CISC, column), inter)


def predict_dbj(
    column: ColumnSpec, settings: PredictionSettings = DEFAULT_SETTINGS
) -> CapacityPrediction:
    """DBJ composite strength f_sc = f_ck*(1.14 + 1.02*xi) over the gross area.

    f_ck is recovered as dbj_fck_factor * f_cu150, back-converting the
    cylinder strength with the class factor (0.88 NSC, 0.98 HSC).  UHSC has
    no published cube factor; the HSC factor is extrapolated under a
    diagnostic so the load is still reported.
    """
    f_y, f_c = column.steel.f_y, column.concrete.f_c
    klass = classify_concrete(f_c)
    diagnostics = []
    if klass is ConcreteClass.NSC:
        f_cu150 = f_c / 0.88
    elif klass is ConcreteClass.HSC:
        f_cu150 = f_c / 0.98
    else:
        f_cu150 = f_c / 0.98
        diagnostics.append(
            "cube conversion undefined for UHSC; HSC factor 0.98 extrapolated for f_ck"
        )
    f_ck = settings.dbj_fck_factor * f_cu150
    xi_dbj = f_y * column.A_s / (f_ck * column.A_c)
    N = f_ck * (1.14 + 1.02 * xi_dbj) * (column.A_s + column.A_c)
    inter = {"f_ck": f_ck, "xi_dbj": xi_dbj}
    return CapacityPrediction(
        MethodId.DBJ, N, check_applicability(MethodId.DBJ, column), inter, tuple(diagnostics)
    )


# ---------------------------------------------------------------------------
# published formulas
# ---------------------------------------------------------------------------


def predict_oshea(column: ColumnSpec) -> CapacityPrediction:
    """O'Shea & Bridge confined-stress formula, evaluated exactly as published.

    The normal-strength branch can produce a negative confined stress for
    common inputs; that (and the fractional power becoming undefined on the
    high-strength branch) is reported as a diagnostic, not corrected.
    """
    f_y, f_c = column.steel.f_y, column.concrete.f_c
    D, t = column.section.D, column.section.t
    P_yield = 2.0 * f_y * t / (D - 2.0 * t)
    p = P_yield * (0.7 - math.sqrt(f_c / f_y)) * (10.0 / 3.0)
    diagnostics = []
    if f_c <= 50.0:
        f_l = 0.558 * math.sqrt(f_c)
        sigma_cp = f_c * (-1.228 + 2.172 * math.sqrt(1.0 + 7.46 * f_l / f_c) - 2.0 * p / f_c)
        inter = {"p": p, "f_l": f_l, "sigma_cp": sigma_cp}
    else:
        if f_c > 100.0:
            diagnostics.append("f_c > 100 MPa outside the published branches; high-strength branch extrapolated")
        base = p / f_c + 1.0
        k = 1.25 * (1.0 + 0.062 * p / f_c) * f_c**-0.21
        if base > 0.0:
            sigma_cp = f_c * base**k
        else:
            sigma_cp = math.nan
            diagnostics.append(f"{NON_PHYSICAL_CONFINED_STRESS}: (p/f_c + 1) = {base:.4g} <= 0")
        inter = {"p": p, "k": k, "sigma_cp": sigma_cp}
    if sigma_cp <= 0.0:
        diagnostics.append(f"{NON_PHYSICAL_CONFINED_STRESS}: sigma_cp = {sigma_cp:.4g} MPa")
    N = sigma_cp * column.A_c + column.A_s * f_y
    return CapacityPrediction(
        MethodId.OSHEA, N, check_applicability(MethodId.OSHEA, column), inter, tuple(diagnostics)
    )


def predict_yu(column: ColumnSpec) -> CapacityPrediction:
    """Yu steel-tube-confined strength f_cc = (1.14 + 1.34*xi)*f_c over the core."""
    f_cc = (1.14 + 1.34 * column.xi_c) * column.concrete.f_c
    N = f_cc * column.A_c
    return CapacityPrediction(
        MethodId.YU, N, check_applicability(MethodId.YU, column), {"f_cc": f_cc}
    )


def predict_liu(column: ColumnSpec) -> CapacityPrediction:
    """Liu partial-yield superposition with hoop-stress confinement.

    The published material gives two expressions for the radial pressure,
    2*t*sigma_h/(D - 2t) and the simplification 1.08*t*fy/D, which disagree
    by the factor D/(D - 2t).  The definitional form is used; both values
    and their gap are reported as a diagnostic.
    """
    f_y, f_c = column.steel.f_y, column.concrete.f_c
    D, t = column.section.D, column.section.t
    sigma_v = 0.61 * f_y
    sigma_h = 0.54 * f_y
    sigma_r = 2.0 * t * sigma_h / (D - 2.0 * t)
    sigma_r_simplified = 1.08 * t * f_y / D
    sigma_cp = f_c + 4.1 * sigma_r
    N = sigma_v * column.A_s + sigma_cp * column.A_c
    diagnostics = (
        f"hoop-pressure forms differ: 2t*sigma_h/(D-2t) = {sigma_r:.4g} MPa vs "
        f"1.08*t*fy/D = {sigma_r_simplified:.4g} MPa (definitional form used)",
    )
    inter = {
        "sigma_v": sigma_v,
        "sigma_r": sigma_r,
        "sigma_r_simplified": sigma_r_simplified,
        "sigma_cp": sigma_cp,
    }
    return CapacityPrediction(
        MethodId.LIU, N, check_applicability(MethodId.LIU, column), inter, diagnostics
    )


def predict_sun(column: ColumnSpec) -> CapacityPrediction:
    """Sun confined strength over the core; singular at D/t = 2."""
    dt = column.dt_ratio
    if dt <= 2.0:
        raise ValueError("D/t must exceed 2 (formula singular at D/t = 2)")
    f_y, f_c = column.steel.f_y, column.concrete.f_c
    f_cc = f_c * (1.0 + 8.2 * ((dt - 1.0) * f_y) / ((dt - 2.0) ** 2 * f_c))
    N = f_cc * column.A_c
    return CapacityPrediction(
        MethodId.SUN, N, check_applicability(MethodId.SUN, column), {"f_cc": f_cc}
    )


def predict_zhong_miao(column: ColumnSpec, p_0: float = 0.0) -> CapacityPrediction:
    """Zhong & Miao limit-state superposition.

    p_0 is the lateral pressure on the core at ultimate; it is left
    undefined in the published formula and is therefore an explicit caller
    input defaulting to 0 (which reduces the concrete term to f_c*A_c).
    """
    if p_0 < 0:
        raise ValueError("p_0 must be non-negative")
    f_y, f_c = column.steel.f_y, column.concrete.f_c
    mu = -0.5 - 1.0 / (2.0 * (column.xi_c + 1.0))
    steel_factor = (mu + 2.0) / math.sqrt(3.0 * (mu * mu + mu + 1.0))
    N_s = steel_factor * f_y * column.A_s
    N_c = (f_c + 4.0 * p_0) * column.A_c
    inter = {"mu_prime": mu, "steel_factor": steel_factor, "p_0": p_0}
    return CapacityPrediction(
        MethodId.ZHONG_MIAO, N_s + N_c, check_applicability(MethodId.ZHONG_MIAO, column), inter
    )


def predict_guo(column: ColumnSpec) -> CapacityPrediction:
    """Guo confined strength f_cc = f_c*(1 + sqrt(xi) + 1.1*xi) over the core."""
    xi = column.xi_c
    f_cc = column.concrete.f_c * (1.0 + math.sqrt(xi) + 1.1 * xi)
    N = f_cc * column.A_c
    return CapacityPrediction(
        MethodId.GUO, N, check_applicability(MethodId.GUO, column), {"f_cc": f_cc}
    )


def predict_oliveira(
    column: ColumnSpec, mode: OliveiraMode = OliveiraMode.AS_PRINTED
) -> CapacityPrediction:
    """De Oliveira squash load scaled by a length-effect factor lambda."""
    base = column.A_c * column.concrete.f_c + column.A_s * column.steel.f_y
    ld = column.ld_ratio
    diagnostics = []
    if ld <= 3.0:
        lam = 1.0
    elif mode is OliveiraMode.AS_PRINTED:
        lam = -0.18 * math.log(ld)
        if lam <= 0.0:
            diagnostics.append(
                f"{NON_PHYSICAL_LENGTH_FACTOR}: lambda = -0.18*ln(L/D) = {lam:.4g} at L/D = {ld:.4g}"
            )
    else:
        lam = 1.0 - 0.18 * math.log(ld / 3.0)
    N = base * lam
    inter = {"lambda": lam, "base": base}
    return CapacityPrediction(
        MethodId.DE_OLIVEIRA,
        N,
        check_applicability(MethodId.DE_OLIVEIRA, column),
        inter,
        tuple(diagnostics),
    )


# ---------------------------------------------------------------------------
# proposed superposition formula
# ---------------------------------------------------------------------------


def eta_s(alpha_s: float, f_c: float, f_y: float) -> float:
    """Steel diminution factor [1.923 - 1.229*ln(0.003*fy)] * (alpha_s*fc/fy)^0.47, unclamped."""
    if alpha_s < 0:
        raise ValueError("alpha_s must be non-negative")
    if f_c <= 0 or f_y <= 0:
        raise ValueError("f_c and f_y must be positive")
    return (1.923 - 1.229 * math.log(0.003 * f_y)) * (alpha_s * f_c / f_y) ** 0.47


def eta_c(dt_ratio: float, f_c: float, xi_c: float) -> float:
    """Concrete intensification factor 0.85 + 0.3*(D/t)^0.328*fc^0.1*xi_c, unclamped."""
    if dt_ratio <= 0 or f_c <= 0:
        raise ValueError("D/t and f_c must be positive")
    if xi_c < 0:
        raise ValueError("xi_c must be non-negative")
    return 0.85 + 0.3 * dt_ratio**0.328 * f_c**0.1 * xi_c


def proposed_factors(column: ColumnSpec) -> ProposedFactors:
    return ProposedFactors(
        eta_c=eta_c(column.dt_ratio, column.concrete.f_c, column.xi_c),
        eta_s=eta_s(column.alpha_s, column.concrete.f_c, column.steel.f_y),
    )


def _envelope_flags(column: ColumnSpec) -> list[str]:
    actuals = {
        "f_y": column.steel.f_y,
        "f_c": column.concrete.f_c,
        "D": column.section.D,
        "L/D": column.ld_ratio,
        "D/t": column.dt_ratio,
    }
    flags = []
    for name, (lo, hi) in DATABASE_ENVELOPE.items():
        value = actuals[name]
        if not lo <= value <= hi:
            flags.append(f"{name} = {value:g} outside calibration envelope [{lo:g}, {hi:g}]")
    return flags


def predict_proposed(column: ColumnSpec) -> CapacityPrediction:
    """Superposition N = eta_c*A_c*f_c + eta_s*A_s*f_y.

    Applicable for any column; excursions outside the calibration envelope
    are reported as diagnostics.
    """
    factors = proposed_factors(column)
    N = (
        factors.eta_c * column.A_c * column.concrete.f_c
        + factors.eta_s * column.A_s * column.steel.f_y
    )
    inter = {"eta_c": factors.eta_c, "eta_s": factors.eta_s}
    return CapacityPrediction(
        MethodId.PROPOSED,
        N,
        check_applicability(MethodId.PROPOSED, column),
        inter,
        tuple(_envelope_flags(column)),
    )


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def predict(
    column: ColumnSpec,
    method: MethodId,
    settings: PredictionSettings = DEFAULT_SETTINGS,
    p_0: float = 0.0,
) -> CapacityPrediction:
    """Run one predictor on a column under the given settings."""
    if method is MethodId.ACI:
        return predict_aci(column)
    if method is MethodId.EC4:
        return predict_ec4(column, settings)
    if method is MethodId.AISC:
        return predict_aisc(column, settings)
    if method is MethodId.CISC:
        return predict_cisc(column, settings)
    if method is MethodId.DBJ:
        return predict_dbj(column, settings)
    if method is MethodId.OSHEA:
        return predict_oshea(column)
    if method is MethodId.YU:
        return predict_yu(column)
    if method is MethodId.LIU:
        return predict_liu(column)
    if method is MethodId.SUN:
        return predict_sun(column)
    if method is MethodId.ZHONG_MIAO:
        return predict_zhong_miao(column, p_0)
    if method is MethodId.GUO:
        return predict_guo(column)
    if method is MethodId.DE_OLIVEIRA:
        return predict_oliveira(column, settings.oliveira_mode)
    if method is MethodId.PROPOSED:
        return predict_proposed(column)
    raise ValueError(f"unknown method: {method!r}")


def predict_all(
    column: ColumnSpec,
    methods: tuple[MethodId, ...] | None = None,
    settings: PredictionSettings = DEFAULT_SETTINGS,
) -> list[CapacityPrediction]:
    """Run the requested predictors (all thirteen by default) in declaration order."""
    if methods is None:
        methods = tuple(MethodId)
    return [predict(column, m, settings) for m in methods]
