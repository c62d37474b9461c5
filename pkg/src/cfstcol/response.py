"""Axial load-strain response of a column by fiber superposition.

N(eps) = sigma_s(eps)*A_s + sigma_c(eps)*A_c under a uniform compressive
strain (plane sections, concentric load), with compression taken positive.
The steel stress is evaluated by magnitude symmetry; the biaxial hoop-stress
reduction of the tube under confinement is deliberately not modelled, since
the concrete softening law already folds the composite action in through
the confinement-factor regressions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .materials import (
    ConfinedConcreteParams,
    concrete_stress,
    confined_concrete_params,
    sample_grid,
    steel_curve_params,
    steel_stress,
)
from .section import ColumnSpec


@dataclass(frozen=True)
class AxialResponse:
    """Sampled axial response: (strain, load N) points plus peak and residual figures."""

    points: tuple[tuple[float, float], ...]
    peak_load: float
    peak_strain: float
    residual_load: float

    @property
    def strains(self) -> tuple[float, ...]:
        return tuple(p[0] for p in self.points)

    @property
    def loads(self) -> tuple[float, ...]:
        return tuple(p[1] for p in self.points)


def peak_load(points: tuple[tuple[float, float], ...]) -> tuple[float, float]:
    """Maximum load over the samples and the first strain attaining it."""
    if not points:
        raise ValueError("response has no points")
    best_load, best_eps = points[0][1], points[0][0]
    for eps, load in points[1:]:
        if load > best_load:
            best_load, best_eps = load, eps
    return best_load, best_eps


def response_curve(
    column: ColumnSpec,
    eps_max: float,
    n: int = 200,
    concrete_params: ConfinedConcreteParams | None = None,
) -> AxialResponse:
    """Sample N(eps) on [0, eps_max] with all material breakpoints placed exactly.

    ``concrete_params`` allows substituting a modified parameter set (e.g.
    one built with the confining pressure forced to zero).
    """
    if eps_max <= 0:
        raise ValueError("eps_max must be positive")
    if n < 8:
        raise ValueError("need at least 8 samples for a response curve")
    sparams = steel_curve_params(column.steel)
    cparams = concrete_params if concrete_params is not None else confined_concrete_params(column)
    breakpoints = (sparams.eps_y, sparams.eps_p, sparams.eps_u, cparams.eps_c0, cparams.eps_cc)
    grid = sample_grid(breakpoints, eps_max, n)
    A_s, A_c = column.A_s, column.A_c
    f_c, E_c = column.concrete.f_c, column.concrete.E_c
    points = tuple(
        (
            eps,
            steel_stress(eps, column.steel, sparams) * A_s
            + concrete_stress(eps, f_c, E_c, cparams) * A_c,
        )
        for eps in grid
    )
    best_load, best_eps = peak_load(points)
    return AxialResponse(points, best_load, best_eps, points[-1][1])
