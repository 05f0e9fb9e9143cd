"""Reconciliation of the bottom-up model with measured data.

Two steps: scale the modeled seasonal table so its monthly energy matches
the measured total (shares are ratios, so they are unchanged), and split
each measured hour across activities in proportion to the synthesized
hourly energies, conserving the measured power at every hour.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import Catalog, Season
from .composition import CompositionReport, DeviceEnergy, SeasonalConsumptionTable
from .profile import Granularity, LoadProfile
from .synth import OccupancyCurve, synth_household_day

# Above this relative gap the catalog is probably not representative of the
# measured household; reports carry a warning.
GAP_WARNING_THRESHOLD = 0.25


class ReconcileError(ValueError):
    """Reconciliation preconditions are not met."""


class UnattributableLoadError(ReconcileError):
    """Measured power is positive at an hour where the model predicts none."""

    def __init__(self, hour: int):
        super().__init__(
            f"unattributable load at hour {hour}: measured power is positive "
            "but the synthesized household total is zero"
        )
        self.hour = hour


@dataclass(frozen=True)
class ReconciliationResult:
    """Scaled seasonal table plus the measured-vs-modeled diagnostics."""

    scale_factor: float
    measured_energy_kwh: float
    bottom_up_energy_kwh: float
    relative_gap: float
    adjusted_table: SeasonalConsumptionTable

    @property
    def gap_warning(self) -> bool:
        return self.relative_gap > GAP_WARNING_THRESHOLD


@dataclass(frozen=True)
class HourlyAttribution:
    """Per-hour split of measured power (kW) across activities.

    For every measured sample the per-activity values sum back to the
    measured power at that hour.
    """

    season: Season
    by_activity: dict[str, tuple[float, ...]]
    measured: LoadProfile

    def hour_total(self, index: int) -> float:
        return sum(series[index] for series in self.by_activity.values())

    def activity_energy_kwh(self, activity: str) -> float:
        # hourly samples: kW over one hour = kWh
        return sum(self.by_activity[activity])


def scale_to_measured(table: SeasonalConsumptionTable, measured_energy_kwh: float) -> ReconciliationResult:
    """Multiply every row so the table's monthly total equals the measured energy."""
    bottom_up = table.monthly_total_kwh
    if bottom_up <= 0:
        raise ReconcileError("zero bottom-up total")
    if measured_energy_kwh <= 0:
        raise ReconcileError("zero measured energy")
    k = measured_energy_kwh / bottom_up
    rows = tuple(
        DeviceEnergy(
            activity=row.activity,
            season=row.season,
            units=row.units,
            per_unit_daily_wh=row.per_unit_daily_wh * k,
            household_daily_wh=row.household_daily_wh * k,
        )
        for row in table.rows
    )
    adjusted = SeasonalConsumptionTable(season=table.season, rows=rows, days_per_month=table.days_per_month)
    gap = abs(1.0 - bottom_up / measured_energy_kwh)
    return ReconciliationResult(
        scale_factor=k,
        measured_energy_kwh=measured_energy_kwh,
        bottom_up_energy_kwh=bottom_up,
        relative_gap=gap,
        adjusted_table=adjusted,
    )


def disaggregate(
    measured: LoadProfile,
    catalog: Catalog,
    season: Season,
    occupancy: OccupancyCurve | None = None,
) -> HourlyAttribution:
    """Attribute each measured hour to activities by synthesized-shape ratio.

    ``measured`` must be a single hourly day. Hours with zero measured power
    get zero attribution everywhere; positive measured power at an hour
    where the synthesized household total is zero is unattributable and
    raises :class:`UnattributableLoadError`.
    """
    if measured.granularity is not Granularity.HOURLY:
        raise ReconcileError(f"granularity mismatch: need hourly, got {measured.granularity.value}")
    if not measured.samples:
        raise ReconcileError("empty measured profile")
    dates = {ts.date() for ts, _ in measured.samples}
    if len(dates) != 1:
        raise ReconcileError(f"granularity mismatch: measured day spans {len(dates)} dates")

    day = synth_household_day(catalog, season, occupancy)
    totals = day.household_total
    series: dict[str, list[float]] = {activity: [] for activity in day.per_activity}
    for ts, power in measured.samples:
        hour = ts.hour
        total = totals[hour]
        if power == 0:
            for activity in series:
                series[activity].append(0.0)
        elif total <= 0:
            raise UnattributableLoadError(hour)
        else:
            # divide first: the weight ratio stays in normal float range even
            # when the synthesized energies are tiny
            for activity, hourly in day.per_activity.items():
                series[activity].append(power * (hourly[hour] / total))
    return HourlyAttribution(
        season=season,
        by_activity={activity: tuple(values) for activity, values in series.items()},
        measured=measured,
    )


def composition_from_attribution(attribution: HourlyAttribution) -> CompositionReport:
    """Shares of total attributed energy per activity over the measured day."""
    energies = {
        activity: attribution.activity_energy_kwh(activity) for activity in attribution.by_activity
    }
    total = sum(energies.values())
    if total <= 0:
        raise ReconcileError("zero total attributed energy")
    shares = {activity: 100.0 * energy / total for activity, energy in energies.items()}
    return CompositionReport(
        season=attribution.season,
        shares=shares,
        basis_daily_total_wh=total * 1000.0,
    )
