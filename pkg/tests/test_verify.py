import pytest

from contraction_semigroups.guards import GuardError
from contraction_semigroups.verify import (
    CheckSpec,
    SEQUENCES,
    build_checks,
    check_sequence,
    parse_report,
    run_check,
    run_suite,
)


@pytest.fixture(scope="module")
def small_report():
    return run_suite(4, 6, samples=100, seed=1)


def test_small_suite(small_report):
    s = small_report.summary()
    assert small_report.ok
    assert s["fail"] == 0
    assert s["records"] == s["pass"] + s["documented_mismatch"]
    mismatched = {r.check_id for r in small_report.records if r.status == "documented_mismatch"}
    assert mismatched == {"orci-height-fix-printed"}
    assert "orci-height-fix-printed" in small_report.explanations
    assert "odci-profile" in small_report.notes


def test_report_round_trip(small_report):
    text = small_report.to_text()
    again = parse_report(text)
    assert again.records == small_report.records
    assert again.params == small_report.params
    assert again.explanations == small_report.explanations
    assert again.to_text() == text
    timed = parse_report(small_report.to_text(timing=True))
    assert timed.records == small_report.records


def test_deterministic(small_report):
    assert run_suite(4, 6, samples=100, seed=1).to_text() == small_report.to_text()


def test_bad_schema_rejected(small_report):
    text = small_report.to_text().replace("# schema: 1", "# schema: 9")
    with pytest.raises(ValueError):
        parse_report(text)


@pytest.mark.parametrize("mf,md", [(9, 10), (1, 4), (5, 4), (6, 15)])
def test_invalid_params(mf, md):
    with pytest.raises(ValueError):
        run_suite(mf, md)


def test_env_guard_on_suite(monkeypatch):
    monkeypatch.setenv("CONTRACTION_SEMIGROUPS_MAX_N", "5")
    with pytest.raises(GuardError):
        run_suite(4, 6)


def test_check_ids_unique():
    ids = [c.id for c in build_checks(3, 4)]
    assert len(ids) == len(set(ids))


def test_checkspec_validation():
    with pytest.raises(ValueError):
        CheckSpec("x", "nope", ((1,),), lambda n: (n, n))
    with pytest.raises(ValueError):
        CheckSpec("x", "identity", (), lambda n: (n, n))
    with pytest.raises(ValueError):
        CheckSpec("x", "identity", ((1,),), lambda n: (n, n), relation="documented_mismatch")


def test_run_check_statuses():
    spec = CheckSpec("parity", "identity", ((1,), (2,)), lambda n: (n % 2, 1))
    report = run_check(spec)
    assert [r.status for r in report.records] == ["pass", "fail"]
    assert not report.ok


@pytest.mark.parametrize("name", sorted(SEQUENCES))
def test_sequences(name):
    report = check_sequence(name, 30)
    assert report.ok and len(report.records) >= 31


def test_unknown_sequence():
    with pytest.raises(ValueError):
        check_sequence("A000000", 5)
