"""Appliance catalog: the bottom-up parameter set for one household archetype.

Each entry describes a household activity (air conditioning, lighting, ...)
by seasonal time of use, unit count, run/idle wattage and the fractions of
operating time spent at run versus idle power. Catalogs are parsed from CSV
or JSON and every entry is validated before use.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from pathlib import Path

from ._sourceio import read_text

# Run and idle fractions must sum to 1; slack for binary floating point.
FRACTION_SUM_TOL = 1e-12

CSV_HEADER = (
    "activity",
    "tou_winter",
    "tou_summer",
    "units_winter",
    "units_summer",
    "run_watts",
    "idle_watts",
    "operation",
    "run_fraction",
    "idle_fraction",
)

# Historic spellings in source data map onto one canonical activity name.
ACTIVITY_ALIASES = {
    "water bump (dynamo)": "Water pump",
    "water bumb (dynamo)": "Water pump",
    "water bump": "Water pump",
    "water bumb": "Water pump",
}


class CatalogError(ValueError):
    """Catalog data cannot be parsed or violates an invariant."""


class OperationClass(enum.Enum):
    """How directly occupant behavior drives an appliance's schedule."""

    MANUAL = "Manual"
    SEMI_AUTO = "Semi Auto"
    AUTO = "Auto"

    @classmethod
    def parse(cls, text: str) -> OperationClass:
        """Case-insensitive parse accepting 'semi auto', 'semi-auto', 'semi_auto'."""
        key = " ".join(str(text).replace("-", " ").replace("_", " ").split()).lower()
        for member in cls:
            if member.value.lower() == key:
                return member
        if key == "semiauto":
            return cls.SEMI_AUTO
        raise ValueError(f"unknown operation class {text!r}")


WINTER_MONTHS = frozenset({10, 11, 12, 1, 2})


class Season(enum.Enum):
    """Two-season year: winter is Oct-Feb, summer is Mar-Sep."""

    WINTER = "winter"
    SUMMER = "summer"

    @classmethod
    def for_month(cls, month: int) -> Season:
        if not 1 <= month <= 12:
            raise ValueError(f"month out of range: {month}")
        return cls.WINTER if month in WINTER_MONTHS else cls.SUMMER

    @property
    def months(self) -> frozenset[int]:
        if self is Season.WINTER:
            return WINTER_MONTHS
        return frozenset(range(1, 13)) - WINTER_MONTHS


@dataclass(frozen=True)
class ApplianceSpec:
    """Calculation parameters for one household activity.

    Wattages in W, time of use in hours/day, unit counts per household.
    ``run_fraction`` and ``idle_fraction`` split the time of use between
    rated and standby power and must sum to 1. The dataclass itself does
    not validate; see :func:`validate_spec`.
    """

    activity: str
    tou_winter: float
    tou_summer: float
    units_winter: int
    units_summer: int
    run_watts: float
    idle_watts: float
    operation: OperationClass
    run_fraction: float
    idle_fraction: float

    def tou(self, season: Season) -> float:
        return self.tou_winter if season is Season.WINTER else self.tou_summer

    def units(self, season: Season) -> int:
        return self.units_winter if season is Season.WINTER else self.units_summer


def validate_spec(spec: ApplianceSpec) -> list[str]:
    """Check one spec against its invariants.

    Returns a list of human-readable violations, each naming the offending
    field and rule; an empty list means the spec is valid.
    """
    violations = []
    if not spec.activity or not spec.activity.strip():
        violations.append("activity: name must be non-empty")
    for season in Season:
        t = spec.tou(season)
        if t < 0:
            violations.append(f"tou_{season.value}: must be >= 0 (got {t})")
        elif t > 24:
            violations.append(f"tou_{season.value}: ToU exceeds 24 h/day (got {t})")
        q = spec.units(season)
        if q < 0:
            violations.append(f"units_{season.value}: must be >= 0 (got {q})")
    if spec.idle_watts < 0:
        violations.append(f"idle_watts: must be >= 0 (got {spec.idle_watts})")
    elif spec.run_watts < spec.idle_watts:
        violations.append(
            f"run_watts: must be >= idle_watts (got {spec.run_watts} < {spec.idle_watts})"
        )
    for name, value in (("run_fraction", spec.run_fraction), ("idle_fraction", spec.idle_fraction)):
        if not 0 <= value <= 1:
            violations.append(f"{name}: must be within [0, 1] (got {value})")
    fraction_sum = spec.run_fraction + spec.idle_fraction
    if abs(fraction_sum - 1.0) > FRACTION_SUM_TOL:
        violations.append(
            f"run_fraction + idle_fraction must sum to 1 (got {fraction_sum})"
        )
    return violations


@dataclass(frozen=True)
class Catalog:
    """Ordered, validated collection of appliance specs plus source metadata."""

    specs: tuple[ApplianceSpec, ...]
    origin: str = ""
    year: int | None = None

    def __post_init__(self) -> None:
        if not self.specs:
            raise CatalogError("no entries")
        seen: set[str] = set()
        for spec in self.specs:
            key = spec.activity.casefold()
            if key in seen:
                raise CatalogError(f"duplicate activity name {spec.activity!r}")
            seen.add(key)

    def __iter__(self):
        return iter(self.specs)

    def __len__(self) -> int:
        return len(self.specs)

    def activities(self) -> list[str]:
        return [spec.activity for spec in self.specs]

    def get(self, activity: str) -> ApplianceSpec:
        for spec in self.specs:
            if spec.activity.casefold() == activity.casefold():
                return spec
        raise KeyError(activity)


def parse_catalog(source, fmt: str = "csv") -> Catalog:
    """Parse and validate a catalog from CSV or JSON content.

    ``source`` may be bytes, text, a Path, or a readable stream. Rows are
    kept in file order. Raises :class:`CatalogError` naming the row and
    field on the first malformed or invalid entry.
    """
    text = read_text(source)
    if fmt == "csv":
        rows = _rows_from_csv(text)
    elif fmt == "json":
        rows = _rows_from_json(text)
    else:
        raise CatalogError(f"unknown catalog format {fmt!r}")
    if not rows:
        raise CatalogError("no entries")

    specs = []
    seen: set[str] = set()
    for rownum, raw in rows:
        spec = _spec_from_mapping(raw, rownum)
        violations = validate_spec(spec)
        if violations:
            raise CatalogError(f"row {rownum} ({spec.activity!r}): " + "; ".join(violations))
        key = spec.activity.casefold()
        if key in seen:
            raise CatalogError(f"row {rownum}: duplicate activity name {spec.activity!r}")
        seen.add(key)
        specs.append(spec)
    return Catalog(specs=tuple(specs))


def load_catalog(path: str | Path, fmt: str | None = None) -> Catalog:
    """Read a catalog file, inferring the format from the suffix when not given."""
    path = Path(path)
    if fmt is None:
        suffix = path.suffix.lower().lstrip(".")
        if suffix not in ("csv", "json"):
            raise CatalogError(f"cannot infer catalog format from suffix of {path.name!r}")
        fmt = suffix
    return parse_catalog(path, fmt=fmt)


def serialize_catalog(catalog: Catalog, fmt: str = "csv") -> str:
    """Render a catalog back to its CSV or JSON wire format.

    Only the rows are serialized; ``origin``/``year`` metadata is not part
    of the wire format. ``parse_catalog(serialize_catalog(c), fmt)`` returns
    a catalog with the same specs as ``c``.
    """
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for spec in catalog:
            writer.writerow(
                [
                    spec.activity,
                    repr(spec.tou_winter),
                    repr(spec.tou_summer),
                    spec.units_winter,
                    spec.units_summer,
                    repr(spec.run_watts),
                    repr(spec.idle_watts),
                    spec.operation.value,
                    repr(spec.run_fraction),
                    repr(spec.idle_fraction),
                ]
            )
        return buf.getvalue()
    if fmt == "json":
        rows = [
            {
                "activity": spec.activity,
                "tou_winter": spec.tou_winter,
                "tou_summer": spec.tou_summer,
                "units_winter": spec.units_winter,
                "units_summer": spec.units_summer,
                "run_watts": spec.run_watts,
                "idle_watts": spec.idle_watts,
                "operation": spec.operation.value,
                "run_fraction": spec.run_fraction,
                "idle_fraction": spec.idle_fraction,
            }
            for spec in catalog
        ]
        return json.dumps(rows, indent=2) + "\n"
    raise CatalogError(f"unknown catalog format {fmt!r}")


def _rows_from_csv(text: str) -> list[tuple[int, dict]]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        return []
    have = [name.strip() for name in reader.fieldnames]
    missing = [name for name in CSV_HEADER if name not in have]
    extra = [name for name in have if name not in CSV_HEADER]
    if missing:
        raise CatalogError(f"missing column(s): {', '.join(missing)}")
    if extra:
        raise CatalogError(f"unexpected column(s): {', '.join(extra)}")
    # Data rows are numbered from 1; the header is not counted.
    return [(i, row) for i, row in enumerate(reader, start=1)]


def _rows_from_json(text: str) -> list[tuple[int, dict]]:
    try:
        data = json.loads(text) if text.strip() else []
    except json.JSONDecodeError as exc:
        raise CatalogError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise CatalogError("catalog JSON must be an array of objects")
    for i, item in enumerate(data, start=1):
        if not isinstance(item, dict):
            raise CatalogError(f"row {i}: expected an object, got {type(item).__name__}")
    return [(i, item) for i, item in enumerate(data, start=1)]


def _spec_from_mapping(raw: dict, rownum: int) -> ApplianceSpec:
    def field(name: str):
        value = raw.get(name)
        if value is None or (isinstance(value, str) and not value.strip()):
            raise CatalogError(f"row {rownum}: missing field {name!r}")
        return value

    def as_float(name: str) -> float:
        value = field(name)
        try:
            return float(value)
        except (TypeError, ValueError):
            raise CatalogError(f"row {rownum}: field {name!r} is not a number (got {value!r})") from None

    def as_int(name: str) -> int:
        value = as_float(name)
        if value != int(value):
            raise CatalogError(f"row {rownum}: field {name!r} must be a whole number (got {raw.get(name)!r})")
        return int(value)

    name = str(field("activity")).strip()
    name = ACTIVITY_ALIASES.get(name.casefold(), name)
    try:
        operation = OperationClass.parse(str(field("operation")))
    except ValueError as exc:
        raise CatalogError(f"row {rownum}: {exc}") from None
    return ApplianceSpec(
        activity=name,
        tou_winter=as_float("tou_winter"),
        tou_summer=as_float("tou_summer"),
        units_winter=as_int("units_winter"),
        units_summer=as_int("units_summer"),
        run_watts=as_float("run_watts"),
        idle_watts=as_float("idle_watts"),
        operation=operation,
        run_fraction=as_float("run_fraction"),
        idle_fraction=as_float("idle_fraction"),
    )


# Built-in 15-activity archetype (2016 national household usage survey).
# Idle wattage listed for TV/PC/gaming never contributes because their
# run fraction is 1; the survey values are preserved as published.
_BUILTIN_ROWS = (
    ("Heating (oil-filled)", 8.0, 1.5, 2, 1, 1500.0, 0.0, "Semi Auto", 0.5, 0.5),
    ("Air conditioning", 3.0, 10.0, 2, 5, 1800.0, 100.0, "Semi Auto", 0.6, 0.4),
    ("Water heating", 14.0, 4.7, 3, 1, 1500.0, 30.0, "Auto", 0.3, 0.7),
    ("Water coolers", 10.0, 17.0, 1, 1, 250.0, 10.0, "Auto", 0.5, 0.5),
    ("Water pump", 1.5, 2.1, 1, 1, 250.0, 0.0, "Auto", 1.0, 0.0),
    ("Washing & Drying", 1.3, 1.9, 2, 2, 2000.0, 0.0, "Semi Auto", 1.0, 0.0),
    ("Ironing", 1.0, 1.8, 1, 1, 1000.0, 0.0, "Manual", 1.0, 0.0),
    ("Vacuum cleaning", 1.0, 1.3, 1, 1, 1000.0, 0.0, "Manual", 1.0, 0.0),
    ("Cooking", 1.6, 1.4, 1, 1, 2150.0, 0.0, "Semi Auto", 1.0, 0.0),
    ("Electric kettle", 1.3, 2.0, 1, 1, 1800.0, 0.0, "Manual", 1.0, 0.0),
    ("Lighting", 7.3, 7.5, 50, 50, 10.0, 0.0, "Manual", 1.0, 0.0),
    ("Food preservation", 24.0, 24.0, 2, 2, 100.0, 0.0, "Auto", 1.0, 0.0),
    ("TV", 5.3, 5.9, 1, 2, 120.0, 13.0, "Manual", 1.0, 0.0),
    ("PC", 2.1, 2.6, 2, 2, 150.0, 7.5, "Manual", 1.0, 0.0),
    ("Gaming devices", 2.6, 3.0, 4, 4, 30.0, 7.5, "Manual", 1.0, 0.0),
)


def builtin_catalog() -> Catalog:
    """The built-in 15-activity household archetype catalog."""
    specs = tuple(
        ApplianceSpec(
            activity=row[0],
            tou_winter=row[1],
            tou_summer=row[2],
            units_winter=row[3],
            units_summer=row[4],
            run_watts=row[5],
            idle_watts=row[6],
            operation=OperationClass.parse(row[7]),
            run_fraction=row[8],
            idle_fraction=row[9],
        )
        for row in _BUILTIN_ROWS
    )
    return Catalog(specs=specs, origin="builtin household archetype (2016 national usage survey)", year=2016)
