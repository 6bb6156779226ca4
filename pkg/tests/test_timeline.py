"""Growth-trend extrapolation and availability milestones."""

import pytest
from hypothesis import given, strategies as st

from qaplan.cmos import CMOS_14NM
from qaplan.qa_hardware import QA_PROJECTED
from qaplan.timeline import (
    BEST_CASE,
    BUILTIN_TRENDS,
    HISTORICAL_QUBITS,
    WORST_CASE,
    GrowthTrend,
    milestones,
    qubit_series,
    qubits_at,
    year_available,
)
from qaplan.workload import CellScenario


def test_shipped_device_record():
    assert HISTORICAL_QUBITS == {
        2011: 128, 2013: 512, 2015: 1152, 2017: 2048, 2020: 5436, 2023: 7440,
    }


def test_trend_anchors():
    assert (BEST_CASE.anchor_year, BEST_CASE.anchor_qubits) == (2020, 5436)
    assert BEST_CASE.growth_factor == pytest.approx(5436 / 2048)
    assert (WORST_CASE.anchor_year, WORST_CASE.anchor_qubits) == (2023, 7440)
    assert WORST_CASE.growth_factor == pytest.approx(7440 / 5436)
    assert set(BUILTIN_TRENDS) == {"best-case", "worst-case"}


def test_projection_at_anchor_and_beyond():
    assert qubits_at(BEST_CASE, 2020) == 5436
    assert qubits_at(BEST_CASE, 2023) == 14428  # floor(5436 * (5436/2048))
    assert qubits_at(BEST_CASE, 2026) == 38_298


def test_no_extrapolation_before_anchor():
    with pytest.raises(ValueError):
        qubits_at(BEST_CASE, 2019)


@pytest.mark.parametrize(
    "required,best_year,worst_year",
    [
        (39_000, 2027, 2039),
        (618_000, 2035, 2066),
        (1_850_000, 2038, 2076),
    ],
)
def test_availability_years(required, best_year, worst_year):
    assert year_available(BEST_CASE, required) == best_year
    assert year_available(WORST_CASE, required) == worst_year


def test_small_requirements_available_at_anchor():
    assert year_available(BEST_CASE, 1) == 2020
    assert year_available(BEST_CASE, 5436) == 2020
    assert year_available(BEST_CASE, 5437) > 2020


def test_series_prefers_the_record():
    s = qubit_series(BEST_CASE, [2017, 2020, 2023, 2026])
    # 2023 comes from the record (7440), not the trend (14427)
    assert s == {2017: 2048, 2020: 5436, 2023: 7440, 2026: 38_298}


def test_invalid_trends_rejected():
    with pytest.raises(ValueError):
        GrowthTrend("flat", 2020, 5436, growth_factor=1.0)
    with pytest.raises(ValueError):
        GrowthTrend("empty", 2020, 0, growth_factor=2.0)


def test_milestones_shape():
    scenario = CellScenario(400, 6, 0.5, 64)
    out = milestones(
        [("macro", scenario)], [CMOS_14NM], QA_PROJECTED, samples=20,
    )
    assert len(out) == 1
    m = out[0]
    assert m.label == "macro"
    assert m.required_qubits == 3_320_055
    assert m.year_best == 2040
    assert m.year_worst > m.year_best
    assert m.advantage_w["14nm"] == pytest.approx(3584.0 / 0.076 * 1.3 - 25e3, rel=1e-9)


trends = st.sampled_from([BEST_CASE, WORST_CASE])


@given(trends, st.integers(min_value=0, max_value=60))
def test_projection_monotone_in_year(trend, offset):
    y = trend.anchor_year + offset
    assert qubits_at(trend, y + 1) >= qubits_at(trend, y)


@given(trends, st.integers(min_value=0, max_value=60))
def test_round_trip_never_later_than_source_year(trend, offset):
    # a device size projected for year y must be available by y
    y = trend.anchor_year + offset
    n = qubits_at(trend, y)
    assert year_available(trend, n) <= y


@given(trends, st.integers(min_value=1, max_value=10**8))
def test_year_available_is_tight(trend, required):
    y = year_available(trend, required)
    assert qubits_at(trend, y) >= required
    if y > trend.anchor_year:
        assert qubits_at(trend, y - 1) < required
