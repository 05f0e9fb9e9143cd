"""Shared fixtures, reference values, and hypothesis strategies."""

from __future__ import annotations

import string
from datetime import datetime, timedelta

import pytest
from hypothesis import strategies as st

from loadcomp import ApplianceSpec, Catalog, Granularity, LoadProfile, OperationClass, builtin_catalog
from loadcomp.catalog import ACTIVITY_ALIASES

# Reference household Wh/day for the builtin catalog (30-day months), as
# printed in the source consumption tables the catalog reproduces.
WINTER_WH_DAY = {
    "Heating (oil-filled)": 12000,
    "Air conditioning": 6720,
    "Water heating": 19782,
    "Water coolers": 1300,
    "Water pump": 375,
    "Washing & Drying": 5200,
    "Ironing": 1000,
    "Vacuum cleaning": 1000,
    "Cooking": 3440,
    "Electric kettle": 2340,
    "Lighting": 3650,
    "Food preservation": 4800,
    "TV": 636,
    "PC": 630,
    "Gaming devices": 312,
}
SUMMER_WH_DAY = {
    "Heating (oil-filled)": 1125,
    "Air conditioning": 56000,
    "Water heating": 2213.7,
    "Water coolers": 2210,
    "Water pump": 525,
    "Washing & Drying": 7600,
    "Ironing": 1800,
    "Vacuum cleaning": 1300,
    "Cooking": 3010,
    "Electric kettle": 3600,
    "Lighting": 3750,
    "Food preservation": 4800,
    "TV": 1416,
    "PC": 780,
    "Gaming devices": 360,
}
WINTER_MONTHLY_KWH = 1895.55
SUMMER_MONTHLY_KWH = 2714.69
WINTER_DAILY_WH = 63185.0  # independent column addition of WINTER_WH_DAY
SUMMER_DAILY_WH = 90489.7  # independent column addition of SUMMER_WH_DAY

# One-day hourly curve with its minimum at 06:00 and maximum at 15:00 (kW).
DAY_CURVE_KW = (
    620, 560, 510, 480, 460, 450, 440, 470, 520, 580, 640, 700,
    760, 820, 870, 900, 880, 860, 845, 830, 800, 740, 690, 650,
)

# Twelve monthly averages (kW) with Feb -> Jun growth of exactly +130%.
MONTHLY_AVG_KW = {
    1: 105, 2: 100, 3: 120, 4: 150, 5: 190, 6: 230,
    7: 228, 8: 220, 9: 180, 10: 140, 11: 120, 12: 110,
}


@pytest.fixture
def paper_catalog() -> Catalog:
    return builtin_catalog()


def hourly_day(powers, day: datetime = datetime(2016, 6, 1), label: str = "") -> LoadProfile:
    samples = tuple((day + timedelta(hours=h), float(p)) for h, p in enumerate(powers))
    return LoadProfile(samples=samples, granularity=Granularity.HOURLY, label=label)


def monthly_profile(month_to_kw=MONTHLY_AVG_KW, year: int = 2016, label: str = "") -> LoadProfile:
    samples = tuple(
        (datetime(year, month, 1), float(month_to_kw[month])) for month in sorted(month_to_kw)
    )
    return LoadProfile(samples=samples, granularity=Granularity.MONTHLY_AVERAGE, label=label)


@pytest.fixture
def day_profile() -> LoadProfile:
    return hourly_day(DAY_CURVE_KW, label="day-curve")


@pytest.fixture
def annual_profile() -> LoadProfile:
    return monthly_profile(label="annual")


# ---------------------------------------------------------------------------
# hypothesis strategies

_NAME_ALPHABET = string.ascii_letters + string.digits + " &()-'"

activity_names = (
    st.text(alphabet=_NAME_ALPHABET, min_size=1, max_size=24)
    .map(str.strip)
    .filter(lambda s: s and s.casefold() not in ACTIVITY_ALIASES)
)

_fractions = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


@st.composite
def appliance_specs(draw, name: str | None = None) -> ApplianceSpec:
    run_watts = draw(st.floats(min_value=0.0, max_value=5000.0, allow_nan=False))
    run_fraction = draw(_fractions)
    return ApplianceSpec(
        activity=name if name is not None else draw(activity_names),
        tou_winter=draw(st.floats(min_value=0.0, max_value=24.0, allow_nan=False)),
        tou_summer=draw(st.floats(min_value=0.0, max_value=24.0, allow_nan=False)),
        units_winter=draw(st.integers(min_value=0, max_value=10)),
        units_summer=draw(st.integers(min_value=0, max_value=10)),
        run_watts=run_watts,
        idle_watts=run_watts * draw(_fractions),  # <= run_watts
        operation=draw(st.sampled_from(list(OperationClass))),
        run_fraction=run_fraction,
        idle_fraction=1.0 - run_fraction,
    )


@st.composite
def catalogs(draw, min_size: int = 1, max_size: int = 6) -> Catalog:
    names = draw(
        st.lists(activity_names, min_size=min_size, max_size=max_size, unique_by=str.casefold)
    )
    specs = tuple(draw(appliance_specs(name=name)) for name in names)
    return Catalog(specs=specs)
