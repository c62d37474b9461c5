"""Specimen dataset ingestion and batch statistical evaluation.

The CSV schema (exact header, comma separated, empty cells mean "use the
documented default"):

    source_id,D_mm,t_mm,L_mm,fy_MPa,fu_MPa,Es_MPa,fc_measured_MPa,fc_kind,dmax_mm,Ntest_kN

Evaluation runs the requested predictors per row and summarises the
test-to-prediction ratios N_test/N_u per method (arithmetic mean, sample
standard deviation, coefficient of variation) over the rows that pass the
method's applicability limits.
"""

from __future__ import annotations

import csv
import io
import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .capacity import (
    DEFAULT_SETTINGS,
    CapacityPrediction,
    MethodId,
    PredictionSettings,
    predict,
)
from .section import (
    CircularSection,
    ColumnSpec,
    ConcreteMaterial,
    ConversionError,
    ConvertedStrength,
    MeasuredStrength,
    SpecimenKind,
    SteelMaterial,
    convert_strength,
)

CSV_HEADER = (
    "source_id",
    "D_mm",
    "t_mm",
    "L_mm",
    "fy_MPa",
    "fu_MPa",
    "Es_MPa",
    "fc_measured_MPa",
    "fc_kind",
    "dmax_mm",
    "Ntest_kN",
)

RATIO_ORIENTATION = "N_test/N_u"


@dataclass(frozen=True)
class SpecimenRecord:
    """One test specimen row; optional fields are None until defaulted at evaluation."""

    source_id: str
    D: float
    t: float
    L: float
    f_y: float
    f_u: float | None
    E_s: float | None
    fc_measured: float
    fc_kind: SpecimenKind
    d_max: float | None
    N_test_kN: float
    defaulted: tuple[str, ...] = ()


class RowError(NamedTuple):
    line: int
    message: str


@dataclass(frozen=True)
class ParsedDataset:
    records: tuple[SpecimenRecord, ...]
    errors: tuple[RowError, ...]


def _parse_float(cell: str, name: str) -> float:
    try:
        return float(cell)
    except ValueError:
        raise ValueError(f"{name}: not a number: {cell!r}") from None


def _parse_row(line: int, cells: list[str]) -> SpecimenRecord:
    if len(cells) != len(CSV_HEADER):
        raise ValueError(f"expected {len(CSV_HEADER)} columns, got {len(cells)}")
    raw = {name: cell.strip() for name, cell in zip(CSV_HEADER, cells)}
    defaulted = [name for name in ("fu_MPa", "Es_MPa", "fc_kind", "dmax_mm") if not raw[name]]
    for name in ("D_mm", "t_mm", "L_mm", "fy_MPa", "fc_measured_MPa", "Ntest_kN"):
        if not raw[name]:
            raise ValueError(f"{name}: required value is empty")
    D = _parse_float(raw["D_mm"], "D_mm")
    t = _parse_float(raw["t_mm"], "t_mm")
    L = _parse_float(raw["L_mm"], "L_mm")
    f_y = _parse_float(raw["fy_MPa"], "fy_MPa")
    f_u = _parse_float(raw["fu_MPa"], "fu_MPa") if raw["fu_MPa"] else None
    E_s = _parse_float(raw["Es_MPa"], "Es_MPa") if raw["Es_MPa"] else None
    fc_measured = _parse_float(raw["fc_measured_MPa"], "fc_measured_MPa")
    if raw["fc_kind"]:
        try:
            fc_kind = SpecimenKind(raw["fc_kind"].upper())
        except ValueError:
            raise ValueError(f"fc_kind: unknown specimen kind {raw['fc_kind']!r}") from None
    else:
        fc_kind = SpecimenKind.CYL150
    d_max = _parse_float(raw["dmax_mm"], "dmax_mm") if raw["dmax_mm"] else None
    N_test = _parse_float(raw["Ntest_kN"], "Ntest_kN")
    if N_test <= 0:
        raise ValueError("Ntest_kN: must be positive")
    # validate geometry/material invariants eagerly so bad rows surface here
    CircularSection(D, t, L)
    SteelMaterial(f_y, f_u, E_s)
    MeasuredStrength(fc_measured, fc_kind)
    if d_max is not None and d_max < 0:
        raise ValueError("dmax_mm: must be non-negative")
    return SpecimenRecord(
        raw["source_id"], D, t, L, f_y, f_u, E_s, fc_measured, fc_kind, d_max,
        N_test, tuple(defaulted),
    )


def parse_dataset(csv_text: str) -> ParsedDataset:
    """Parse a dataset CSV; malformed rows become per-line errors, never a file abort.

    The header row must match the documented schema exactly.
    """
    reader = csv.reader(io.StringIO(csv_text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("empty file: missing header row") from None
    if tuple(cell.strip() for cell in header) != CSV_HEADER:
        raise ValueError(f"header does not match the documented schema {','.join(CSV_HEADER)}")
    records: list[SpecimenRecord] = []
    errors: list[RowError] = []
    for line, cells in enumerate(reader, start=2):
        if not cells or all(not c.strip() for c in cells):
            continue
        try:
            records.append(_parse_row(line, cells))
        except ValueError as exc:
            errors.append(RowError(line, str(exc)))
    return ParsedDataset(tuple(records), tuple(errors))


def column_from_record(
    record: SpecimenRecord, Ec_override: float | None = None
) -> tuple[ColumnSpec, ConvertedStrength]:
    """Build a ColumnSpec from a record, converting the measured strength.

    Raises ConversionError when the strength basis cannot be converted.
    """
    converted = convert_strength(MeasuredStrength(record.fc_measured, record.fc_kind))
    column = ColumnSpec(
        CircularSection(record.D, record.t, record.L),
        SteelMaterial(record.f_y, record.f_u, record.E_s),
        ConcreteMaterial(converted.f_c, record.d_max, Ec_override),
    )
    return column, converted


@dataclass(frozen=True)
class RowResult:
    """Evaluation outcome for one record: the converted strength and per-method predictions."""

    index: int
    record: SpecimenRecord
    f_c: float | None
    concrete_class: str | None
    defaulted: tuple[str, ...]
    error: str | None
    predictions: tuple[CapacityPrediction, ...]


@dataclass(frozen=True)
class StatsSummary:
    """Mean/STD/CoV of N_test/N_u over the applicable rows of one method."""

    method: MethodId
    n_applicable: int
    n_total: int
    mean: float | None
    std: float | None
    cov: float | None


def _evaluate_row(
    index: int,
    record: SpecimenRecord,
    methods: tuple[MethodId, ...],
    settings: PredictionSettings,
    Ec_override: float | None = None,
) -> RowResult:
    try:
        column, converted = column_from_record(record, Ec_override)
    except (ConversionError, ValueError) as exc:
        return RowResult(index, record, None, None, record.defaulted, str(exc), ())
    # column.defaulted already names the defaulted material fields; fc_kind
    # is the only parse-level default it cannot see
    defaulted = (("fc_kind",) if "fc_kind" in record.defaulted else ()) + column.defaulted
    predictions = tuple(predict(column, m, settings) for m in methods)
    return RowResult(
        index, record, converted.f_c, converted.concrete_class.value,
        defaulted, None, predictions,
    )


def _summarise(method: MethodId, position: int, rows: list[RowResult]) -> StatsSummary:
    ratios: list[float] = []
    n_applicable = 0
    for row in rows:
        if row.error is not None:
            continue
        pred = row.predictions[position]
        if not pred.applicability.applicable:
            continue
        n_applicable += 1
        if math.isfinite(pred.N_u) and pred.N_u != 0.0:
            # both sides in kN so that N_test == N_u gives a ratio of exactly 1
            ratios.append(row.record.N_test_kN / (pred.N_u / 1e3))
    mean = std = cov = None
    if ratios:
        mean = statistics.fmean(ratios)
        if len(ratios) >= 2:
            std = statistics.stdev(ratios)
            cov = std / mean if mean > 0 else None
    return StatsSummary(method, n_applicable, len(rows), mean, std, cov)


def evaluate_dataset(
    records: Iterable[SpecimenRecord],
    methods: tuple[MethodId, ...] | None = None,
    settings: PredictionSettings = DEFAULT_SETTINGS,
    parallel: bool = False,
    Ec_override: float | None = None,
) -> tuple[list[RowResult], list[StatsSummary]]:
    """Run the requested predictors on every record and summarise per method.

    Rows are independent; with ``parallel`` they are evaluated on a thread
    pool, with results returned in input order either way.  Rows failing
    applicability are excluded from a method's statistics but still carry
    their predictions; rows whose evaluation errors (e.g. an impossible
    strength conversion) count only towards n_total.  ``Ec_override``
    replaces the derived concrete modulus on every row (sensitivity runs).
    """
    records = list(records)
    if methods is None:
        methods = tuple(MethodId)
    if parallel and records:
        with ThreadPoolExecutor() as pool:
            rows = list(
                pool.map(
                    _evaluate_row,
                    range(len(records)),
                    records,
                    [methods] * len(records),
                    [settings] * len(records),
                    [Ec_override] * len(records),
                )
            )
    else:
        rows = [
            _evaluate_row(i, rec, methods, settings, Ec_override)
            for i, rec in enumerate(records)
        ]
    summaries = [_summarise(m, pos, rows) for pos, m in enumerate(methods)]
    return rows, summaries
