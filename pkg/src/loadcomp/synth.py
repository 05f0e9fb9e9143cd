"""Synthesized 24-hour energy shapes per activity.

The operation class decides how occupant presence shapes a device's day:
automatic devices spread their daily energy uniformly, manual devices
follow the occupancy curve, and semi-automatic devices take the midpoint
of the two. Each activity's hourly series sums back to its household
daily energy.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._sourceio import read_text
from .catalog import ApplianceSpec, Catalog, OperationClass, Season
from .composition import household_device_energy

WEIGHT_SUM_TOL = 1e-12

# Default presence weighting: quietest at 06:00, busiest at 15:00, with an
# elevated evening plateau. Normalized on construction; override per run
# with a 24-value occupancy file.
DEFAULT_OCCUPANCY_RAW = (
    0.50, 0.42, 0.36, 0.31, 0.28, 0.26, 0.25, 0.30, 0.40, 0.52, 0.64, 0.75,
    0.85, 0.92, 0.97, 1.00, 0.97, 0.93, 0.89, 0.87, 0.84, 0.76, 0.66, 0.56,
)


class OccupancyError(ValueError):
    """Occupancy curve data is malformed."""


def _normalized(values) -> tuple[float, ...]:
    values = tuple(float(v) for v in values)
    if len(values) != 24:
        raise OccupancyError(f"expected 24 occupancy values, got {len(values)}")
    if any(v < 0 for v in values):
        raise OccupancyError("occupancy values must be non-negative")
    total = sum(values)
    if total <= 0:
        raise OccupancyError("occupancy values must not all be zero")
    return tuple(v / total for v in values)


@dataclass(frozen=True)
class OccupancyCurve:
    """24 hourly presence weights summing to 1."""

    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != 24:
            raise OccupancyError(f"expected 24 occupancy weights, got {len(self.weights)}")
        if any(w < 0 for w in self.weights):
            raise OccupancyError("occupancy weights must be non-negative")
        if abs(sum(self.weights) - 1.0) > WEIGHT_SUM_TOL:
            raise OccupancyError("occupancy weights must sum to 1")

    @classmethod
    def from_values(cls, values) -> OccupancyCurve:
        return cls(weights=_normalized(values))


def default_occupancy() -> OccupancyCurve:
    return OccupancyCurve.from_values(DEFAULT_OCCUPANCY_RAW)


def load_occupancy(source) -> OccupancyCurve:
    """Load an occupancy curve: 24 comma-separated non-negative numbers."""
    text = read_text(source)
    parts = [part.strip() for part in text.replace("\n", ",").split(",")]
    parts = [part for part in parts if part]
    try:
        values = [float(part) for part in parts]
    except ValueError as exc:
        raise OccupancyError(f"invalid occupancy value: {exc}") from None
    return OccupancyCurve.from_values(values)


@dataclass(frozen=True)
class HourlyShape:
    """24 non-negative weights summing to 1: one activity's share of each hour."""

    weights: tuple[float, ...]
    activity: str
    season: Season | None = None

    def __post_init__(self) -> None:
        if len(self.weights) != 24:
            raise ValueError(f"expected 24 weights, got {len(self.weights)}")
        if any(w < 0 for w in self.weights):
            raise ValueError("shape weights must be non-negative")
        if abs(sum(self.weights) - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError("shape weights must sum to 1")


def shape_for(spec: ApplianceSpec, occupancy: OccupancyCurve, season: Season | None = None) -> HourlyShape:
    """Hourly weight profile for one activity given an occupancy curve."""
    uniform = 1.0 / 24.0
    if spec.operation is OperationClass.AUTO:
        weights = (uniform,) * 24
    elif spec.operation is OperationClass.MANUAL:
        weights = occupancy.weights
    else:  # SEMI_AUTO: midpoint of uniform and occupancy, renormalized
        mixed = tuple((uniform + w) / 2.0 for w in occupancy.weights)
        total = sum(mixed)
        weights = tuple(w / total for w in mixed)
    return HourlyShape(weights=weights, activity=spec.activity, season=season)


@dataclass(frozen=True)
class SynthesizedDay:
    """Hourly Wh series per activity, catalog order preserved."""

    season: Season
    per_activity: dict[str, tuple[float, ...]]

    @property
    def household_total(self) -> tuple[float, ...]:
        return tuple(
            sum(series[hour] for series in self.per_activity.values()) for hour in range(24)
        )

    @property
    def daily_total_wh(self) -> float:
        return sum(sum(series) for series in self.per_activity.values())


def synth_household_day(catalog: Catalog, season: Season, occupancy: OccupancyCurve | None = None) -> SynthesizedDay:
    """Spread each activity's household daily energy over 24 hours."""
    occ = occupancy if occupancy is not None else default_occupancy()
    per_activity: dict[str, tuple[float, ...]] = {}
    for spec in catalog:
        energy = household_device_energy(spec, season)
        weights = shape_for(spec, occ, season).weights
        per_activity[spec.activity] = tuple(energy * w for w in weights)
    return SynthesizedDay(season=season, per_activity=per_activity)
