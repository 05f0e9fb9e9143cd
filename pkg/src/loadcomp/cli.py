"""Command-line interface.

Subcommands: ``composition``, ``profile-stats``, ``reconcile``, ``synth``,
``validate``. Exit codes: 0 success, 1 input or validation error, 2 I/O
error. Payload files are deterministic for identical inputs; run metadata
goes to a ``<out>.meta.json`` sidecar instead.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .catalog import Catalog, CatalogError, Season, builtin_catalog, load_catalog
from .composition import (
    CompositionError,
    composition_shares,
    pie_data,
    seasonal_table,
    table_csv,
    table_json,
)
from .profile import (
    Granularity,
    LoadProfile,
    ProfileError,
    daily_extrema,
    load_profile,
    normalize,
    peak_average_ratio,
    seasonal_split,
)
from .reconcile import ReconcileError, composition_from_attribution, disaggregate, scale_to_measured
from .synth import OccupancyError, default_occupancy, load_occupancy, synth_household_day

_INPUT_ERRORS = (CatalogError, CompositionError, ProfileError, ReconcileError, OccupancyError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loadcomp",
        description="Residential load composition: bottom-up appliance model, "
        "measured-profile statistics, and reconciliation of the two.",
    )
    parser.add_argument("--version", action="version", version=f"loadcomp {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="json", help="payload format")
    common.add_argument("--out", type=Path, default=None, help="write payload here instead of stdout")
    common.add_argument("--days-per-month", type=int, default=30, help="days per month for monthly totals")
    common.add_argument("--occupancy", type=Path, default=None, help="24-value occupancy curve file")

    def add_catalog_source(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--catalog", type=Path, help="appliance catalog file (.csv or .json)")
        group.add_argument("--builtin-paper", action="store_true", help="use the built-in 15-activity catalog")

    p = sub.add_parser("composition", parents=[common], help="seasonal consumption table and shares")
    add_catalog_source(p)
    p.add_argument("--season", choices=("winter", "summer", "both"), default="both")
    p.add_argument("--integer-shares", action="store_true", help="round pie percentages to integers")
    p.set_defaults(handler=cmd_composition)

    p = sub.add_parser("profile-stats", parents=[common], help="normalized series and summary statistics")
    p.add_argument("--profile", type=Path, required=True, help="load profile CSV (timestamp,power_kw)")
    p.add_argument("--granularity", choices=[g.value for g in Granularity], default=None,
                   help="override the inferred sampling granularity")
    p.set_defaults(handler=cmd_profile_stats)

    p = sub.add_parser("reconcile", parents=[common], help="scale the model to a measured day and attribute hours")
    add_catalog_source(p)
    p.add_argument("--profile", type=Path, required=True, help="measured one-day hourly CSV")
    p.add_argument("--season", choices=("winter", "summer"), default=None,
                   help="season (default: inferred from the measured day's month)")
    p.set_defaults(handler=cmd_reconcile)

    p = sub.add_parser("synth", parents=[common], help="synthesized per-activity 24-hour energy series")
    add_catalog_source(p)
    p.add_argument("--season", choices=("winter", "summer"), required=True)
    p.set_defaults(handler=cmd_synth)

    p = sub.add_parser("validate", parents=[common], help="parse and validate a catalog")
    add_catalog_source(p)
    p.set_defaults(handler=cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own message; remap usage errors to 1
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    args.argv_text = " ".join(argv if argv is not None else sys.argv[1:])
    try:
        payload, status = args.handler(args)
    except _INPUT_ERRORS as exc:
        print(f"loadcomp: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"loadcomp: I/O error: {exc}", file=sys.stderr)
        return 2
    try:
        _emit(args, payload)
    except OSError as exc:
        print(f"loadcomp: I/O error: {exc}", file=sys.stderr)
        return 2
    return status


def _emit(args, payload: str) -> None:
    if args.out is None:
        sys.stdout.write(payload)
        return
    args.out.write_text(payload, encoding="utf-8")
    sidecar = {
        "tool": "loadcomp",
        "version": __version__,
        "command": args.argv_text,
        "created_utc": datetime.now(timezone.utc).isoformat(),
    }
    Path(str(args.out) + ".meta.json").write_text(json.dumps(sidecar, indent=2) + "\n", encoding="utf-8")


def _json_payload(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _get_catalog(args) -> Catalog:
    if args.builtin_paper:
        return builtin_catalog()
    try:
        return load_catalog(args.catalog)
    except OSError as exc:
        raise CatalogError(f"cannot read catalog file {args.catalog}: {exc}") from exc


def _get_profile(args) -> LoadProfile:
    granularity = Granularity(args.granularity) if getattr(args, "granularity", None) else None
    try:
        return load_profile(args.profile, granularity=granularity)
    except OSError as exc:
        raise ProfileError(f"cannot read profile file {args.profile}: {exc}") from exc


def _get_occupancy(args):
    if args.occupancy is None:
        return default_occupancy()
    try:
        return load_occupancy(args.occupancy)
    except OSError as exc:
        raise OccupancyError(f"cannot read occupancy file {args.occupancy}: {exc}") from exc


def _seasons(choice: str) -> list[Season]:
    if choice == "both":
        return [Season.WINTER, Season.SUMMER]
    return [Season(choice)]


def cmd_composition(args) -> tuple[str, int]:
    catalog = _get_catalog(args)
    pairs = [
        (seasonal_table(catalog, season, args.days_per_month), composition_shares(catalog, season))
        for season in _seasons(args.season)
    ]
    if args.format == "csv":
        return table_csv(pairs), 0
    payload = {"days_per_month": args.days_per_month, "seasons": {}}
    for table, report in pairs:
        entry = table_json(table, report)
        entry["pie"] = pie_data(report, integer_percent=args.integer_shares)
        payload["seasons"][table.season.value] = entry
    return _json_payload(payload), 0


def cmd_profile_stats(args) -> tuple[str, int]:
    profile = _get_profile(args)
    normalized = normalize(profile)

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["timestamp", "fraction"])
        for ts, fraction in normalized.samples:
            writer.writerow([ts.isoformat(), repr(fraction)])
        return buf.getvalue(), 0

    split = seasonal_split(profile)
    split_summary = {}
    for season, part in split.items():
        if part.samples:
            split_summary[season.value] = {
                "samples": len(part),
                "mean_kw": sum(part.powers) / len(part),
                "peak_kw": part.peak_kw,
            }
        else:
            split_summary[season.value] = {"samples": 0, "mean_kw": None, "peak_kw": None}

    extrema = None
    if profile.granularity is Granularity.HOURLY and len({ts.date() for ts in profile.timestamps}) == 1:
        peak_hour, trough_hour = daily_extrema(profile)
        extrema = {"peak_hour": peak_hour, "trough_hour": trough_hour}

    growth = None
    if profile.granularity is not Granularity.HOURLY:
        growth = []
        for i, (ts_from, p_from) in enumerate(profile.samples):
            for ts_to, p_to in profile.samples[i + 1:]:
                if p_from == 0:
                    continue
                growth.append(
                    {
                        "from": ts_from.strftime("%Y-%m"),
                        "to": ts_to.strftime("%Y-%m"),
                        "pct": 100.0 * (p_to - p_from) / p_from,
                    }
                )

    payload = {
        "label": profile.label,
        "granularity": profile.granularity.value,
        "samples": len(profile),
        "peak_kw": normalized.peak_kw,
        "peak_average_ratio": peak_average_ratio(profile),
        "normalized": [{"timestamp": ts.isoformat(), "fraction": f} for ts, f in normalized.samples],
        "daily_extrema": extrema,
        "seasonal_split": split_summary,
        "monthly_growth_pct": growth,
    }
    return _json_payload(payload), 0


def cmd_reconcile(args) -> tuple[str, int]:
    catalog = _get_catalog(args)
    measured = _get_profile(args)
    occupancy = _get_occupancy(args)
    if measured.peak_kw <= 0:
        raise ProfileError("zero peak")
    season = Season(args.season) if args.season else Season.for_month(measured.samples[0][0].month)

    attribution = disaggregate(measured, catalog, season, occupancy)
    table = seasonal_table(catalog, season, args.days_per_month)
    # kW over one hour = kWh; scale the measured day up to a month
    measured_kwh_month = sum(measured.powers) * args.days_per_month
    result = scale_to_measured(table, measured_kwh_month)
    shares = composition_from_attribution(attribution)

    print(
        f"scale_factor={result.scale_factor:.6f} relative_gap={result.relative_gap:.6f}",
        file=sys.stderr,
    )
    if result.gap_warning:
        print(
            "loadcomp: warning: bottom-up total differs from measured energy "
            f"by more than {100 * 0.25:.0f}%; the catalog may not represent this household",
            file=sys.stderr,
        )

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["hour", "activity", "kw"])
        for index, (ts, _) in enumerate(measured.samples):
            for activity, series in attribution.by_activity.items():
                writer.writerow([ts.hour, activity, repr(series[index])])
        return buf.getvalue(), 0

    payload = {
        "season": season.value,
        "scale_factor": result.scale_factor,
        "relative_gap": result.relative_gap,
        "gap_warning": result.gap_warning,
        "measured_kwh_month": result.measured_energy_kwh,
        "bottom_up_kwh_month": result.bottom_up_energy_kwh,
        "adjusted_rows": [
            {
                "activity": row.activity,
                "per_unit_wh_day": row.per_unit_daily_wh,
                "household_wh_day": row.household_daily_wh,
            }
            for row in result.adjusted_table.rows
        ],
        "attributed_shares_pct": shares.shares,
        "attribution": [
            {
                "hour": ts.hour,
                "kw": {activity: series[index] for activity, series in attribution.by_activity.items()},
            }
            for index, (ts, _) in enumerate(measured.samples)
        ],
    }
    return _json_payload(payload), 0


def cmd_synth(args) -> tuple[str, int]:
    catalog = _get_catalog(args)
    occupancy = _get_occupancy(args)
    season = Season(args.season)
    day = synth_household_day(catalog, season, occupancy)

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["hour", "activity", "wh"])
        for hour in range(24):
            for activity, series in day.per_activity.items():
                writer.writerow([hour, activity, repr(series[hour])])
        return buf.getvalue(), 0

    payload = {
        "season": season.value,
        "activities": {activity: list(series) for activity, series in day.per_activity.items()},
        "household_total": list(day.household_total),
        "daily_total_wh": day.daily_total_wh,
    }
    return _json_payload(payload), 0


def cmd_validate(args) -> tuple[str, int]:
    try:
        catalog = _get_catalog(args)
    except CatalogError as exc:
        payload = {"valid": False, "entries": 0, "error": str(exc)}
        return _json_payload(payload), 1
    payload = {"valid": True, "entries": len(catalog), "error": None}
    return _json_payload(payload), 0


if __name__ == "__main__":
    sys.exit(main())
