"""Bottom-up energy math against frozen reference values, plus properties."""

import dataclasses

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from loadcomp import (
    ApplianceSpec,
    Catalog,
    CompositionError,
    OperationClass,
    Season,
    composition_shares,
    device_daily_energy,
    household_device_energy,
    season_pair_report,
    seasonal_table,
)
from loadcomp.composition import pie_data, render_value, round_half_up, table_csv
from conftest import (
    SUMMER_DAILY_WH,
    SUMMER_MONTHLY_KWH,
    SUMMER_WH_DAY,
    WINTER_DAILY_WH,
    WINTER_MONTHLY_KWH,
    WINTER_WH_DAY,
    catalogs,
)


def oracle_household_wh(spec: ApplianceSpec, season: Season) -> float:
    # Straight-line restatement of the energy rule, kept independent of the
    # composition module's code path.
    if season is Season.WINTER:
        tou, units = spec.tou_winter, spec.units_winter
    else:
        tou, units = spec.tou_summer, spec.units_summer
    blended = spec.run_watts * spec.run_fraction + spec.idle_watts * spec.idle_fraction
    return units * blended * tou


def single_activity_catalog(**overrides) -> Catalog:
    base = dict(
        activity="Space heater",
        tou_winter=2.0,
        tou_summer=2.0,
        units_winter=1,
        units_summer=1,
        run_watts=1000.0,
        idle_watts=0.0,
        operation=OperationClass.MANUAL,
        run_fraction=1.0,
        idle_fraction=0.0,
    )
    base.update(overrides)
    return Catalog(specs=(ApplianceSpec(**base),))


class TestDeviceEnergy:
    def test_ac_summer_per_unit(self, paper_catalog):
        spec = paper_catalog.get("Air conditioning")
        # (1800*0.6 + 100*0.4) * 10 hours
        assert device_daily_energy(spec, Season.SUMMER) == pytest.approx(11200, rel=1e-9)

    def test_water_heating_winter_per_unit(self, paper_catalog):
        spec = paper_catalog.get("Water heating")
        # hand arithmetic: (1500*0.3 + 30*0.7) * 14 = 471 * 14
        assert device_daily_energy(spec, Season.WINTER) == pytest.approx(6594, rel=1e-9)

    def test_zero_tou_gives_zero(self, paper_catalog):
        spec = dataclasses.replace(paper_catalog.specs[0], tou_winter=0.0)
        assert device_daily_energy(spec, Season.WINTER) == 0.0

    def test_ac_summer_household(self, paper_catalog):
        spec = paper_catalog.get("Air conditioning")
        assert household_device_energy(spec, Season.SUMMER) == pytest.approx(56000, rel=1e-9)

    def test_heating_winter_household(self, paper_catalog):
        spec = paper_catalog.get("Heating (oil-filled)")
        assert household_device_energy(spec, Season.WINTER) == pytest.approx(12000, rel=1e-9)

    def test_zero_units_gives_zero(self, paper_catalog):
        spec = dataclasses.replace(paper_catalog.get("Air conditioning"), units_summer=0)
        assert household_device_energy(spec, Season.SUMMER) == 0.0


class TestReferenceTables:
    def test_all_winter_values_at_printed_precision(self, paper_catalog):
        table = seasonal_table(paper_catalog, Season.WINTER, 30)
        for row in table.rows:
            assert round_half_up(row.household_daily_wh, 1) == WINTER_WH_DAY[row.activity]

    def test_all_summer_values_at_printed_precision(self, paper_catalog):
        table = seasonal_table(paper_catalog, Season.SUMMER, 30)
        for row in table.rows:
            assert round_half_up(row.household_daily_wh, 1) == SUMMER_WH_DAY[row.activity]

    def test_monthly_totals(self, paper_catalog):
        assert seasonal_table(paper_catalog, Season.WINTER, 30).monthly_total_kwh == pytest.approx(
            WINTER_MONTHLY_KWH, abs=0.01
        )
        assert seasonal_table(paper_catalog, Season.SUMMER, 30).monthly_total_kwh == pytest.approx(
            SUMMER_MONTHLY_KWH, abs=0.01
        )

    def test_daily_totals(self, paper_catalog):
        assert seasonal_table(paper_catalog, Season.WINTER, 30).daily_total_wh == pytest.approx(
            WINTER_DAILY_WH, abs=1e-6
        )
        assert seasonal_table(paper_catalog, Season.SUMMER, 30).daily_total_wh == pytest.approx(
            SUMMER_DAILY_WH, abs=1e-6
        )

    def test_rows_in_catalog_order(self, paper_catalog):
        table = seasonal_table(paper_catalog, Season.SUMMER, 30)
        assert [row.activity for row in table.rows] == paper_catalog.activities()

    def test_calendar_length_months_scale_linearly(self, paper_catalog):
        t30 = seasonal_table(paper_catalog, Season.WINTER, 30)
        t31 = seasonal_table(paper_catalog, Season.WINTER, 31)
        assert t31.monthly_total_kwh == pytest.approx(t30.monthly_total_kwh * 31 / 30, rel=1e-12)

    def test_days_per_month_must_be_positive(self, paper_catalog):
        with pytest.raises(CompositionError, match="days_per_month"):
            seasonal_table(paper_catalog, Season.WINTER, 0)

    def test_oracle_agreement_on_builtin(self, paper_catalog):
        for season in Season:
            for spec in paper_catalog:
                expected = oracle_household_wh(spec, season)
                assert household_device_energy(spec, season) == pytest.approx(expected, rel=1e-9)


class TestCompositionShares:
    def test_summer_ac_share(self, paper_catalog):
        report = composition_shares(paper_catalog, Season.SUMMER)
        assert round_half_up(report.shares["Air conditioning"], 1) == 61.9

    def test_winter_heating_block_share(self, paper_catalog):
        report = composition_shares(paper_catalog, Season.WINTER)
        combined = report.shares["Heating (oil-filled)"] + report.shares["Water heating"]
        assert combined == pytest.approx(50.3, abs=0.05)

    def test_shares_sum_to_100(self, paper_catalog):
        for season in Season:
            report = composition_shares(paper_catalog, season)
            assert sum(report.shares.values()) == pytest.approx(100.0, abs=1e-9)

    def test_single_activity_gets_everything(self):
        report = composition_shares(single_activity_catalog(), Season.WINTER)
        assert report.shares == {"Space heater": 100.0}

    def test_all_zero_catalog_rejected(self):
        catalog = single_activity_catalog(tou_winter=0.0, tou_summer=0.0)
        with pytest.raises(CompositionError, match="empty composition basis"):
            composition_shares(catalog, Season.WINTER)


class TestSeasonPairReport:
    def test_lighting_shares_both_seasons(self, paper_catalog):
        pair = season_pair_report(paper_catalog)
        assert pair.winter.shares["Lighting"] == pytest.approx(5.8, abs=0.05)
        assert pair.summer.shares["Lighting"] == pytest.approx(4.1, abs=0.05)

    def test_winter_ac_share(self, paper_catalog):
        pair = season_pair_report(paper_catalog)
        assert pair.winter.shares["Air conditioning"] == pytest.approx(10.6, abs=0.05)

    def test_deltas_are_summer_minus_winter(self, paper_catalog):
        pair = season_pair_report(paper_catalog)
        for activity, delta in pair.deltas.items():
            assert delta == pytest.approx(
                pair.summer.shares[activity] - pair.winter.shares[activity], abs=1e-12
            )

    def test_season_symmetric_catalog_has_zero_deltas(self, paper_catalog):
        specs = tuple(
            dataclasses.replace(spec, tou_summer=spec.tou_winter, units_summer=spec.units_winter)
            for spec in paper_catalog
        )
        pair = season_pair_report(Catalog(specs=specs))
        assert all(delta == pytest.approx(0.0, abs=1e-12) for delta in pair.deltas.values())


class TestProperties:
    @given(catalog=catalogs(), season=st.sampled_from(list(Season)))
    def test_shares_conserve_100(self, catalog, season):
        assume(sum(household_device_energy(s, season) for s in catalog) > 0)
        report = composition_shares(catalog, season)
        assert sum(report.shares.values()) == pytest.approx(100.0, abs=1e-9)
        assert all(share >= 0 for share in report.shares.values())

    @given(
        catalog=catalogs(),
        season=st.sampled_from(list(Season)),
        k=st.floats(min_value=1e-3, max_value=1e3, allow_nan=False),
    )
    def test_shares_invariant_under_wattage_scaling(self, catalog, season, k):
        assume(sum(household_device_energy(s, season) for s in catalog) > 0)
        scaled = Catalog(
            specs=tuple(
                dataclasses.replace(s, run_watts=s.run_watts * k, idle_watts=s.idle_watts * k)
                for s in catalog
            )
        )
        base = composition_shares(catalog, season)
        after = composition_shares(scaled, season)
        for activity in base.shares:
            assert after.shares[activity] == pytest.approx(base.shares[activity], abs=1e-9)

    @given(spec=catalogs(min_size=1, max_size=1).map(lambda c: c.specs[0]))
    def test_energy_linear_in_tou(self, spec):
        doubled = dataclasses.replace(spec, tou_winter=spec.tou_winter / 2 * 2, tou_summer=spec.tou_summer)
        half = dataclasses.replace(spec, tou_winter=spec.tou_winter / 2)
        assert device_daily_energy(half, Season.WINTER) * 2 == pytest.approx(
            device_daily_energy(doubled, Season.WINTER), rel=1e-12, abs=1e-12
        )

    @given(spec=catalogs(min_size=1, max_size=1).map(lambda c: c.specs[0]), units=st.integers(0, 50))
    def test_household_energy_linear_in_units(self, spec, units):
        rebased = dataclasses.replace(spec, units_winter=units)
        assert household_device_energy(rebased, Season.WINTER) == pytest.approx(
            units * device_daily_energy(spec, Season.WINTER), rel=1e-12, abs=1e-12
        )

    @settings(max_examples=60)
    @given(
        catalog=catalogs(min_size=2, max_size=6),
        data=st.data(),
    )
    def test_share_monotone_in_tou(self, catalog, data):
        season = Season.SUMMER
        assume(sum(household_device_energy(s, season) for s in catalog) > 0)
        index = data.draw(st.integers(0, len(catalog) - 1))
        bump = data.draw(st.floats(min_value=0.1, max_value=24.0, allow_nan=False))
        target = catalog.specs[index]
        bumped = dataclasses.replace(target, tou_summer=min(24.0, target.tou_summer + bump))
        specs = list(catalog.specs)
        specs[index] = bumped
        before = composition_shares(catalog, season).shares
        after = composition_shares(Catalog(specs=tuple(specs)), season).shares
        assert after[target.activity] >= before[target.activity] - 1e-9
        for activity in before:
            if activity != target.activity:
                assert after[activity] <= before[activity] + 1e-9


class TestRendering:
    def test_round_half_up_at_one_decimal(self):
        assert round_half_up(2213.65, 1) == 2213.7
        assert round_half_up(2213.64999, 1) == 2213.6
        assert round_half_up(19781.999999999996, 1) == 19782.0

    def test_render_value_drops_trailing_zero(self):
        assert render_value(12000.0) == "12000"
        assert render_value(2213.7000000000003) == "2213.7"

    def test_table_csv_shape(self, paper_catalog):
        table = seasonal_table(paper_catalog, Season.SUMMER, 30)
        report = composition_shares(paper_catalog, Season.SUMMER)
        lines = table_csv([(table, report)]).splitlines()
        assert lines[0] == "activity,season,per_unit_wh_day,household_wh_day,share_pct"
        assert len(lines) == 16
        assert "Air conditioning,summer,11200,56000,61.9" in lines

    def test_pie_data_integer_option(self, paper_catalog):
        report = composition_shares(paper_catalog, Season.SUMMER)
        exact = pie_data(report)
        rounded = pie_data(report, integer_percent=True)
        assert exact[1]["label"] == "Air conditioning"
        assert exact[1]["percent"] == pytest.approx(61.885, abs=1e-3)
        assert rounded[1]["percent"] == 62
