"""Bottom-up energy math: device energy, household totals, and composition shares.

A device with time of use ``t`` hours/day draws its rated wattage for
``run_fraction`` of that time and its idle wattage for the rest, so one
unit consumes ``(run_watts * run_fraction + idle_watts * idle_fraction) * t``
Wh/day; the household total for an activity multiplies by the unit count.
Shares are each activity's percentage of the household daily total.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable

from .catalog import ApplianceSpec, Catalog, Season


class CompositionError(ValueError):
    """A composition request cannot be satisfied (zero basis, bad arguments)."""


def device_daily_energy(spec: ApplianceSpec, season: Season) -> float:
    """Daily energy of a single unit, in Wh/day."""
    blended_watts = spec.run_watts * spec.run_fraction + spec.idle_watts * spec.idle_fraction
    return blended_watts * spec.tou(season)


def household_device_energy(spec: ApplianceSpec, season: Season) -> float:
    """Daily energy of all units of the activity in the household, in Wh/day."""
    return spec.units(season) * device_daily_energy(spec, season)


@dataclass(frozen=True)
class DeviceEnergy:
    """One activity's daily energy for one season."""

    activity: str
    season: Season
    units: int
    per_unit_daily_wh: float
    household_daily_wh: float


@dataclass(frozen=True)
class SeasonalConsumptionTable:
    """Per-activity daily energies for one season, in catalog order."""

    season: Season
    rows: tuple[DeviceEnergy, ...]
    days_per_month: int = 30

    @property
    def daily_total_wh(self) -> float:
        return sum(row.household_daily_wh for row in self.rows)

    @property
    def monthly_total_kwh(self) -> float:
        return self.daily_total_wh * self.days_per_month / 1000.0


@dataclass(frozen=True)
class CompositionReport:
    """Percentage share per activity (catalog order) for one season."""

    season: Season
    shares: dict[str, float]
    basis_daily_total_wh: float


@dataclass(frozen=True)
class SeasonPairReport:
    """Winter and summer shares side by side, with summer-minus-winter deltas."""

    winter: CompositionReport
    summer: CompositionReport
    deltas: dict[str, float]


def seasonal_table(catalog: Catalog, season: Season, days_per_month: int = 30) -> SeasonalConsumptionTable:
    """Tabulate per-activity daily energy and household totals for a season."""
    if days_per_month < 1:
        raise CompositionError(f"days_per_month must be >= 1 (got {days_per_month})")
    rows = tuple(
        DeviceEnergy(
            activity=spec.activity,
            season=season,
            units=spec.units(season),
            per_unit_daily_wh=device_daily_energy(spec, season),
            household_daily_wh=household_device_energy(spec, season),
        )
        for spec in catalog
    )
    return SeasonalConsumptionTable(season=season, rows=rows, days_per_month=days_per_month)


def composition_shares(catalog: Catalog, season: Season) -> CompositionReport:
    """Each activity's percentage of the household daily total for a season."""
    energies = [(spec.activity, household_device_energy(spec, season)) for spec in catalog]
    total = sum(energy for _, energy in energies)
    if total <= 0:
        raise CompositionError("empty composition basis")
    shares = {activity: 100.0 * energy / total for activity, energy in energies}
    return CompositionReport(season=season, shares=shares, basis_daily_total_wh=total)


def season_pair_report(catalog: Catalog) -> SeasonPairReport:
    """Winter and summer composition reports plus per-activity share deltas."""
    winter = composition_shares(catalog, Season.WINTER)
    summer = composition_shares(catalog, Season.SUMMER)
    deltas = {activity: summer.shares[activity] - winter.shares[activity] for activity in winter.shares}
    return SeasonPairReport(winter=winter, summer=summer, deltas=deltas)


def round_half_up(value: float, decimals: int = 1) -> float:
    """Round half away from zero at the given decimal place."""
    quantum = Decimal(1).scaleb(-decimals)
    return float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def render_value(value: float) -> str:
    """Rendered table cell: one decimal, half-up, trailing '.0' dropped."""
    text = str(Decimal(repr(value)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))
    return text[:-2] if text.endswith(".0") else text


def table_csv(pairs: Iterable[tuple[SeasonalConsumptionTable, CompositionReport]]) -> str:
    """Render one or more (table, report) pairs as CSV, one row per activity."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["activity", "season", "per_unit_wh_day", "household_wh_day", "share_pct"])
    for table, report in pairs:
        for row in table.rows:
            writer.writerow(
                [
                    row.activity,
                    table.season.value,
                    render_value(row.per_unit_daily_wh),
                    render_value(row.household_daily_wh),
                    render_value(report.shares[row.activity]),
                ]
            )
    return buf.getvalue()


def table_json(table: SeasonalConsumptionTable, report: CompositionReport) -> dict:
    """JSON-ready dict for one season, full precision values."""
    return {
        "season": table.season.value,
        "days_per_month": table.days_per_month,
        "daily_total_wh": table.daily_total_wh,
        "monthly_total_kwh": table.monthly_total_kwh,
        "rows": [
            {
                "activity": row.activity,
                "units": row.units,
                "per_unit_wh_day": row.per_unit_daily_wh,
                "household_wh_day": row.household_daily_wh,
                "share_pct": report.shares[row.activity],
            }
            for row in table.rows
        ],
    }


def pie_data(report: CompositionReport, integer_percent: bool = False) -> list[dict]:
    """Pie-chart-ready share list; integer rounding is presentation only."""
    return [
        {"label": activity, "percent": int(round_half_up(share, 0)) if integer_percent else share}
        for activity, share in report.shares.items()
    ]
