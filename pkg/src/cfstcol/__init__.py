"""Capacity predictors, constitutive models and CDP material cards for
circular concrete-filled steel tube (CFST) short columns.

Internal units are N, mm and MPa; loads are reported in kN only at the
CLI/reporting layer.
"""

from .capacity import (
    DEFAULT_SETTINGS,
    ApplicabilityReport,
    CapacityPrediction,
    Ec4Coefficients,
    MethodId,
    OliveiraMode,
    PredictionSettings,
    ProposedFactors,
    Violation,
    check_applicability,
    ec4_coefficients,
    eta_c,
    eta_s,
    predict,
    predict_aci,
    predict_aisc,
    predict_all,
    predict_cisc,
    predict_dbj,
    predict_ec4,
    predict_guo,
    predict_liu,
    predict_oliveira,
    predict_oshea,
    predict_proposed,
    predict_sun,
    predict_yu,
    predict_zhong_miao,
    proposed_factors,
)
from .cards import render_cdpm_card
from .dataset import (
    CSV_HEADER,
    ParsedDataset,
    RowError,
    RowResult,
    SpecimenRecord,
    StatsSummary,
    column_from_record,
    evaluate_dataset,
    parse_dataset,
)
from .materials import (
    CdpmParameterSet,
    ConfinedConcreteParams,
    CurveKind,
    SteelCurveParams,
    StressStrainCurve,
    biaxial_ratio,
    cdpm_parameters,
    concrete_stress,
    confined_concrete_params,
    confined_peak_strain,
    confining_pressure,
    dilation_angle,
    fracture_energy,
    kc,
    peak_strain_unconfined,
    residual_stress,
    sample_concrete_curve,
    sample_steel_curve,
    softening_params,
    steel_curve_params,
    steel_stress,
)
from .response import AxialResponse, peak_load, response_curve
from .section import (
    CircularSection,
    ColumnSpec,
    ConcreteClass,
    ConcreteMaterial,
    ConversionError,
    ConvertedStrength,
    MeasuredStrength,
    SectionError,
    SpecimenKind,
    SteelMaterial,
    classify_concrete,
    concrete_elastic_modulus,
    confinement_factor,
    convert_strength,
    section_areas,
    section_second_moments,
)

__version__ = "0.1.0"
