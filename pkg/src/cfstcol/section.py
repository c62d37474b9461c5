"""Geometry, base materials and strength-basis conversion for circular CFST columns.

All quantities are kept in N, mm and MPa internally; loads are only turned
into kN at the reporting layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

STEEL_E_DEFAULT = 200_000.0  # MPa, used when a specimen record omits E_s
DMAX_DEFAULT = 20.0  # mm, conventional coarse-aggregate size

# Envelopes of the calibration databases behind the material models.  Values
# outside them are computed anyway but flagged.
FY_VALID_RANGE = (200.0, 800.0)
FC_VALID_RANGE = (12.5, 185.6)


class SectionError(ValueError):
    """Geometrically impossible tube section (e.g. no concrete core left)."""


class ConversionError(ValueError):
    """Strength conversion requested for a specimen shape with no defined factor."""


class SpecimenKind(Enum):
    """Compression-test specimen shapes with defined conversion factors."""

    CYL150 = "CYL150"  # 150x300 cylinder, the reference basis
    CYL100 = "CYL100"
    CUBE150 = "CUBE150"
    CUBE100 = "CUBE100"


class ConcreteClass(Enum):
    NSC = "NSC"
    HSC = "HSC"
    UHSC = "UHSC"


def classify_concrete(f_c: float) -> ConcreteClass:
    """Class of a cylinder strength: NSC up to 60 MPa, UHSC from 120 MPa, HSC between."""
    if f_c <= 0:
        raise ValueError("f_c must be positive")
    if f_c >= 120.0:
        return ConcreteClass.UHSC
    if f_c > 60.0:
        return ConcreteClass.HSC
    return ConcreteClass.NSC


# Multipliers onto the 150x300-cylinder basis, per concrete class.  The UHSC
# column defines no cube factors; those conversions are rejected.
_CONVERSION_FACTORS: dict[ConcreteClass, dict[SpecimenKind, float | None]] = {
    ConcreteClass.NSC: {
        SpecimenKind.CYL150: 1.0,
        SpecimenKind.CYL100: 1.0 / 1.03,
        SpecimenKind.CUBE150: 0.88,
        SpecimenKind.CUBE100: 0.82,
    },
    ConcreteClass.HSC: {
        SpecimenKind.CYL150: 1.0,
        SpecimenKind.CYL100: 1.0 / 1.04,
        SpecimenKind.CUBE150: 0.98,
        SpecimenKind.CUBE100: 0.92,
    },
    ConcreteClass.UHSC: {
        SpecimenKind.CYL150: 1.0,
        SpecimenKind.CYL100: 0.95,
        SpecimenKind.CUBE150: None,
        SpecimenKind.CUBE100: None,
    },
}


@dataclass(frozen=True)
class MeasuredStrength:
    """A raw compressive strength (MPa) together with the specimen shape it came from."""

    value: float
    kind: SpecimenKind

    def __post_init__(self) -> None:
        if self.value <= 0:
            raise ValueError("measured strength must be positive")


@dataclass(frozen=True)
class ConvertedStrength:
    """Strength on the 150x300-cylinder basis plus the class used to convert it."""

    f_c: float
    concrete_class: ConcreteClass


def _factor_for(klass: ConcreteClass, kind: SpecimenKind) -> float:
    factor = _CONVERSION_FACTORS[klass][kind]
    if factor is None:
        raise ConversionError(
            f"no conversion factor defined for {kind.value} specimens of {klass.value} concrete"
        )
    return factor


def convert_strength(measured: MeasuredStrength) -> ConvertedStrength:
    """Convert a measured strength onto the 150x300-cylinder basis.

    The factor depends on the concrete class, which itself depends on the
    converted value.  Resolution is a short fixed point: convert with the
    class of the raw value, re-classify the result and re-convert once if
    the class changed.  Two passes at most; the class used in the final
    pass is reported alongside the value.

    Raises:
        ConversionError: cube specimens of UHSC have no defined factor.
    """
    klass = classify_concrete(measured.value)
    value = measured.value * _factor_for(klass, measured.kind)
    reclass = classify_concrete(value)
    if reclass is not klass:
        klass = reclass
        value = measured.value * _factor_for(klass, measured.kind)
    return ConvertedStrength(value, klass)


def concrete_elastic_modulus(f_c: float, override: float | None = None) -> float:
    """Secant modulus E_c = 4700*sqrt(f_c) MPa, unless an explicit override is given."""
    if override is not None:
        if override <= 0:
            raise ValueError("E_c override must be positive")
        return override
    if f_c <= 0:
        raise ValueError("f_c must be positive")
    return 4700.0 * math.sqrt(f_c)


@dataclass(frozen=True)
class CircularSection:
    """Circular tube geometry in mm: outer diameter D, wall thickness t, length L."""

    D: float
    t: float
    L: float

    def __post_init__(self) -> None:
        if self.D <= 0 or self.t <= 0 or self.L <= 0:
            raise SectionError("D, t and L must all be positive")
        if self.D <= 2.0 * self.t:
            raise SectionError(
                f"D={self.D:g} mm and t={self.t:g} mm leave no concrete core (need D > 2t)"
            )


def section_areas(section: CircularSection) -> tuple[float, float]:
    """Steel annulus area and concrete core area (mm^2)."""
    inner = section.D - 2.0 * section.t
    A_c = math.pi / 4.0 * inner * inner
    A_s = math.pi / 4.0 * (section.D * section.D - inner * inner)
    return A_s, A_c


def section_second_moments(section: CircularSection) -> tuple[float, float]:
    """Second moments of area I_s, I_c (mm^4) of the steel annulus and concrete core."""
    inner = section.D - 2.0 * section.t
    I_c = math.pi / 64.0 * inner**4
    I_s = math.pi / 64.0 * (section.D**4 - inner**4)
    return I_s, I_c


def confinement_factor(A_s: float, f_y: float, A_c: float, f_c: float) -> float:
    """Confinement factor xi_c = (A_s*f_y)/(A_c*f_c)."""
    if A_s < 0 or f_y < 0:
        raise ValueError("A_s and f_y must be non-negative")
    if A_c <= 0 or f_c <= 0:
        raise ValueError("A_c and f_c must be positive")
    return (A_s * f_y) / (A_c * f_c)


@dataclass(frozen=True)
class SteelMaterial:
    """Steel tube properties (MPa).

    f_u and E_s may be omitted; they then fall back to the documented
    defaults max(1.25*f_y, f_y + 50) and 200 000 MPa, and the field names
    are recorded in ``defaulted`` so reports can mark them.
    """

    f_y: float
    f_u: float | None = None
    E_s: float | None = None
    defaulted: tuple[str, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        defaulted: list[str] = []
        if self.f_u is None:
            object.__setattr__(self, "f_u", max(1.25 * self.f_y, self.f_y + 50.0))
            defaulted.append("f_u")
        if self.E_s is None:
            object.__setattr__(self, "E_s", STEEL_E_DEFAULT)
            defaulted.append("E_s")
        object.__setattr__(self, "defaulted", tuple(defaulted))
        if self.f_y <= 0:
            raise ValueError("f_y must be positive")
        if self.E_s <= 0:
            raise ValueError("E_s must be positive")
        if self.f_u < self.f_y:
            raise ValueError(f"f_u={self.f_u:g} MPa below f_y={self.f_y:g} MPa")

    @property
    def validity_flags(self) -> tuple[str, ...]:
        lo, hi = FY_VALID_RANGE
        if not lo <= self.f_y <= hi:
            return (f"f_y={self.f_y:g} MPa outside steel model range [{lo:g}, {hi:g}] MPa",)
        return ()


@dataclass(frozen=True)
class ConcreteMaterial:
    """Core concrete properties: f_c on the 150x300-cylinder basis (MPa).

    d_max defaults to 20 mm and E_c to 4700*sqrt(f_c) when not supplied;
    defaulted field names are recorded for reporting.
    """

    f_c: float
    d_max: float | None = None
    E_c: float | None = None
    defaulted: tuple[str, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.f_c <= 0:
            raise ValueError("f_c must be positive")
        defaulted: list[str] = []
        if self.d_max is None:
            object.__setattr__(self, "d_max", DMAX_DEFAULT)
            defaulted.append("d_max")
        if self.E_c is None:
            object.__setattr__(self, "E_c", concrete_elastic_modulus(self.f_c))
            defaulted.append("E_c")
        object.__setattr__(self, "defaulted", tuple(defaulted))
        if self.d_max < 0:
            raise ValueError("d_max must be non-negative")
        if self.E_c <= 0:
            raise ValueError("E_c must be positive")

    @property
    def validity_flags(self) -> tuple[str, ...]:
        lo, hi = FC_VALID_RANGE
        if not lo <= self.f_c <= hi:
            return (f"f_c={self.f_c:g} MPa outside database range [{lo:g}, {hi:g}] MPa",)
        return ()


@dataclass(frozen=True)
class ColumnSpec:
    """One circular CFST column: geometry plus steel and core concrete."""

    section: CircularSection
    steel: SteelMaterial
    concrete: ConcreteMaterial

    @property
    def A_s(self) -> float:
        return section_areas(self.section)[0]

    @property
    def A_c(self) -> float:
        return section_areas(self.section)[1]

    @property
    def dt_ratio(self) -> float:
        return self.section.D / self.section.t

    @property
    def ld_ratio(self) -> float:
        return self.section.L / self.section.D

    @property
    def alpha_s(self) -> float:
        """Steel-to-concrete area ratio A_s/A_c."""
        A_s, A_c = section_areas(self.section)
        return A_s / A_c

    @property
    def xi_c(self) -> float:
        A_s, A_c = section_areas(self.section)
        return confinement_factor(A_s, self.steel.f_y, A_c, self.concrete.f_c)

    @property
    def defaulted(self) -> tuple[str, ...]:
        return self.steel.defaulted + self.concrete.defaulted

    @property
    def validity_flags(self) -> tuple[str, ...]:
        return self.steel.validity_flags + self.concrete.validity_flags
