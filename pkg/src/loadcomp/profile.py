"""Measured load profiles: CSV ingestion, peak normalization, and summary statistics.

Profiles are ordered (timestamp, power-in-kW) series at hourly or monthly
granularity. Normalization divides every sample by the series peak, so the
peak sample maps to exactly 1.
"""

from __future__ import annotations

import calendar
import csv
import enum
import io
from dataclasses import dataclass
from datetime import datetime
from statistics import fmean
from typing import NamedTuple

from ._sourceio import read_text
from .catalog import Season

PROFILE_CSV_HEADER = ("timestamp", "power_kw")


class ProfileError(ValueError):
    """Profile data cannot be parsed or an operation's precondition fails."""


class Granularity(enum.Enum):
    HOURLY = "hourly"
    MONTHLY_AVERAGE = "monthly-average"
    MONTHLY_PEAK = "monthly-peak"


@dataclass(frozen=True)
class LoadProfile:
    """Timestamped power series in kW.

    Parsed profiles are never empty; :func:`seasonal_split` may return an
    empty sub-profile when the input has no samples in that season.
    """

    samples: tuple[tuple[datetime, float], ...]
    granularity: Granularity
    label: str = ""

    def __post_init__(self) -> None:
        previous = None
        for i, (ts, power) in enumerate(self.samples, start=1):
            if power < 0:
                raise ProfileError(f"sample {i}: negative power {power}")
            if previous is not None and ts <= previous:
                raise ProfileError(f"sample {i}: timestamps must be strictly increasing")
            previous = ts

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def powers(self) -> tuple[float, ...]:
        return tuple(power for _, power in self.samples)

    @property
    def timestamps(self) -> tuple[datetime, ...]:
        return tuple(ts for ts, _ in self.samples)

    @property
    def peak_kw(self) -> float:
        return max(self.powers, default=0.0)


@dataclass(frozen=True)
class NormalizedProfile:
    """Per-sample fraction of the series peak; the peak sample is exactly 1."""

    samples: tuple[tuple[datetime, float], ...]
    peak_kw: float
    label: str = ""

    @property
    def fractions(self) -> tuple[float, ...]:
        return tuple(fraction for _, fraction in self.samples)


class DailyExtrema(NamedTuple):
    peak_hour: int
    trough_hour: int


def parse_profile(source, granularity: Granularity | None = None, label: str = "") -> LoadProfile:
    """Parse a power series from CSV with header ``timestamp,power_kw``.

    Timestamps are ISO-8601 and must be strictly increasing; power must be
    non-negative. When ``granularity`` is not given it is inferred: samples
    all stamped at midnight on the first of a month are monthly averages,
    anything else is hourly (monthly-peak must be declared explicitly).
    """
    text = read_text(source)
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise ProfileError("empty profile: no samples")
    have = tuple(name.strip() for name in reader.fieldnames)
    if have != PROFILE_CSV_HEADER:
        raise ProfileError(f"expected header {','.join(PROFILE_CSV_HEADER)!r}, got {','.join(have)!r}")

    samples: list[tuple[datetime, float]] = []
    for rownum, row in enumerate(reader, start=2):  # header is line 1
        raw_ts = (row.get("timestamp") or "").strip()
        raw_power = (row.get("power_kw") or "").strip()
        try:
            ts = datetime.fromisoformat(raw_ts)
        except ValueError:
            raise ProfileError(f"row {rownum}: invalid timestamp {raw_ts!r}") from None
        try:
            power = float(raw_power)
        except ValueError:
            raise ProfileError(f"row {rownum}: invalid power {raw_power!r}") from None
        if power < 0:
            raise ProfileError(f"row {rownum}: negative power {power}")
        if samples and ts <= samples[-1][0]:
            raise ProfileError(f"row {rownum}: timestamps must be strictly increasing")
        samples.append((ts, power))
    if not samples:
        raise ProfileError("empty profile: no samples")

    if granularity is None:
        granularity = _infer_granularity(samples)
    return LoadProfile(samples=tuple(samples), granularity=granularity, label=label)


def _infer_granularity(samples: list[tuple[datetime, float]]) -> Granularity:
    def is_month_start(ts: datetime) -> bool:
        return ts.day == 1 and ts.hour == 0 and ts.minute == 0 and ts.second == 0 and ts.microsecond == 0

    if len(samples) > 1 and all(is_month_start(ts) for ts, _ in samples):
        return Granularity.MONTHLY_AVERAGE
    return Granularity.HOURLY


def load_profile(path, granularity: Granularity | None = None, label: str = "") -> LoadProfile:
    from pathlib import Path

    path = Path(path)
    return parse_profile(path, granularity=granularity, label=label or path.stem)


def normalize(profile: LoadProfile) -> NormalizedProfile:
    """Scale every sample by the series peak so values lie in [0, 1]."""
    peak = profile.peak_kw
    if peak <= 0:
        raise ProfileError("zero peak")
    samples = tuple((ts, power / peak) for ts, power in profile.samples)
    return NormalizedProfile(samples=samples, peak_kw=peak, label=profile.label)


def peak_average_ratio(profile: LoadProfile) -> float:
    """Mean power divided by peak power; in (0, 1] for any non-zero profile."""
    peak = profile.peak_kw
    if peak <= 0:
        raise ProfileError("zero peak")
    # fmean can round one ulp above the peak for near-constant series
    return min(fmean(profile.powers) / peak, 1.0)


def monthly_growth(profile: LoadProfile, from_month, to_month) -> float:
    """Percentage change between two calendar months of a monthly profile.

    Months may be numbers (1-12) or names ('feb', 'February'). The first
    sample falling in each month is used.
    """
    if profile.granularity is Granularity.HOURLY:
        raise ProfileError("monthly granularity required")
    start = _month_number(from_month)
    end = _month_number(to_month)
    base = _power_for_month(profile, start)
    target = _power_for_month(profile, end)
    if base == 0:
        raise ProfileError(f"zero base value for month {calendar.month_abbr[start]}")
    return 100.0 * (target - base) / base


def _month_number(value) -> int:
    if isinstance(value, int):
        month = value
    else:
        text = str(value).strip()
        if text.isdigit():
            month = int(text)
        else:
            key = text.casefold()
            names = {calendar.month_name[i].casefold(): i for i in range(1, 13)}
            names.update({calendar.month_abbr[i].casefold(): i for i in range(1, 13)})
            if key not in names:
                raise ProfileError(f"unknown month {value!r}")
            month = names[key]
    if not 1 <= month <= 12:
        raise ProfileError(f"month out of range: {month}")
    return month


def _power_for_month(profile: LoadProfile, month: int) -> float:
    for ts, power in profile.samples:
        if ts.month == month:
            return power
    raise ProfileError(f"month {calendar.month_abbr[month]} not present in profile")


def seasonal_split(profile: LoadProfile) -> dict[Season, LoadProfile]:
    """Partition samples by season; together the two halves cover the input."""
    buckets: dict[Season, list[tuple[datetime, float]]] = {Season.WINTER: [], Season.SUMMER: []}
    for ts, power in profile.samples:
        buckets[Season.for_month(ts.month)].append((ts, power))
    return {
        season: LoadProfile(samples=tuple(samples), granularity=profile.granularity, label=profile.label)
        for season, samples in buckets.items()
    }


def daily_extrema(profile: LoadProfile) -> DailyExtrema:
    """Hours of maximum and minimum power in a one-day hourly profile.

    Ties are broken toward the earliest hour.
    """
    if profile.granularity is not Granularity.HOURLY:
        raise ProfileError("hourly granularity required")
    if not profile.samples:
        raise ProfileError("empty profile: no samples")
    dates = {ts.date() for ts, _ in profile.samples}
    if len(dates) != 1:
        raise ProfileError(f"single-day profile required (spans {len(dates)} days)")

    peak_hour, peak = profile.samples[0][0].hour, profile.samples[0][1]
    trough_hour, trough = peak_hour, peak
    for ts, power in profile.samples[1:]:
        if power > peak:
            peak_hour, peak = ts.hour, power
        if power < trough:
            trough_hour, trough = ts.hour, power
    return DailyExtrema(peak_hour=peak_hour, trough_hour=trough_hour)
