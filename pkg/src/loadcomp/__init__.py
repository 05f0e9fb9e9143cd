"""Residential load composition toolkit.

Combines a measured (top-down) load profile view with a bottom-up
appliance catalog model: seasonal consumption tables, composition share
reports, synthesized hourly shapes, and reconciliation of measured days
against the model.
"""

__version__ = "0.1.0"

from .catalog import (
    ApplianceSpec,
    Catalog,
    CatalogError,
    OperationClass,
    Season,
    builtin_catalog,
    load_catalog,
    parse_catalog,
    serialize_catalog,
    validate_spec,
)
from .composition import (
    CompositionError,
    CompositionReport,
    DeviceEnergy,
    SeasonalConsumptionTable,
    SeasonPairReport,
    composition_shares,
    device_daily_energy,
    household_device_energy,
    season_pair_report,
    seasonal_table,
)
from .profile import (
    DailyExtrema,
    Granularity,
    LoadProfile,
    NormalizedProfile,
    ProfileError,
    daily_extrema,
    load_profile,
    monthly_growth,
    normalize,
    parse_profile,
    peak_average_ratio,
    seasonal_split,
)
from .reconcile import (
    HourlyAttribution,
    ReconcileError,
    ReconciliationResult,
    UnattributableLoadError,
    composition_from_attribution,
    disaggregate,
    scale_to_measured,
)
from .synth import (
    HourlyShape,
    OccupancyCurve,
    OccupancyError,
    SynthesizedDay,
    default_occupancy,
    load_occupancy,
    shape_for,
    synth_household_day,
)

__all__ = [
    "ApplianceSpec",
    "Catalog",
    "CatalogError",
    "CompositionError",
    "CompositionReport",
    "DailyExtrema",
    "DeviceEnergy",
    "Granularity",
    "HourlyAttribution",
    "HourlyShape",
    "LoadProfile",
    "NormalizedProfile",
    "OccupancyCurve",
    "OccupancyError",
    "OperationClass",
    "ProfileError",
    "ReconcileError",
    "ReconciliationResult",
    "Season",
    "SeasonPairReport",
    "SeasonalConsumptionTable",
    "SynthesizedDay",
    "UnattributableLoadError",
    "builtin_catalog",
    "composition_from_attribution",
    "composition_shares",
    "daily_extrema",
    "default_occupancy",
    "device_daily_energy",
    "disaggregate",
    "household_device_energy",
    "load_catalog",
    "load_occupancy",
    "load_profile",
    "monthly_growth",
    "normalize",
    "parse_catalog",
    "parse_profile",
    "peak_average_ratio",
    "scale_to_measured",
    "season_pair_report",
    "seasonal_split",
    "seasonal_table",
    "serialize_catalog",
    "shape_for",
    "synth_household_day",
    "validate_spec",
]
