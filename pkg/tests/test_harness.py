import re

import pytest

from mlttcheck.bidir import TYPED_BACKEND, check, check_ctx, check_ty
from mlttcheck.harness import (
    GenConfig,
    SUITES,
    diff_run,
    gen_context,
    gen_term,
    gen_type,
    property_run,
    render_report,
)
from mlttcheck.verdict import Accept

FUEL = 10**5
LINE = re.compile(r"^\d+, (Accept|Reject|OutOfFuel), (Accept|Reject|OutOfFuel), \d+, \d+$")


def test_generated_instances_are_well_typed():
    for seed in range(60):
        cfg = GenConfig(seed=seed)
        ctx = gen_context(cfg)
        assert isinstance(check_ctx(ctx, TYPED_BACKEND, FUEL), Accept)
        ty = gen_type(ctx, cfg)
        assert isinstance(check_ty(ctx, ty, TYPED_BACKEND, FUEL), Accept)
        tm = gen_term(ctx, ty, cfg)
        assert isinstance(check(ctx, tm, ty, TYPED_BACKEND, FUEL), Accept)


def test_generation_is_deterministic_per_seed():
    cfg = GenConfig(seed=7)
    assert gen_context(cfg) == gen_context(cfg)
    ctx = gen_context(cfg)
    assert gen_type(ctx, cfg) == gen_type(ctx, cfg)


def test_diff_run_small():
    report = diff_run(150)
    assert report.total == 150
    assert not report.disagreements
    assert report.agreements + report.fuel_exhausted == 150


def test_report_format():
    report = diff_run(25)
    text = render_report(report)
    body, summary = text.split("-- summary\n")
    for line in body.strip().split("\n"):
        assert LINE.match(line), line
    assert f"total={report.total}" in summary
    assert f"agreements={report.agreements}" in summary
    assert f"disagreements={len(report.disagreements)}" in summary
    assert f"fuelExhausted={report.fuel_exhausted}" in summary


def test_diff_run_is_reproducible():
    a = diff_run(40)
    b = diff_run(40)
    assert a.lines == b.lines


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_property_suites_smoke(suite):
    report = property_run(suite, 60)
    assert report.total == 60
    assert not report.failures, report.failures[:3]


def test_unknown_suite_raises():
    with pytest.raises(ValueError):
        property_run("no-such-suite", 1)
