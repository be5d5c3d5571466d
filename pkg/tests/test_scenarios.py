import json

import pytest

from gaussian_ideals.errors import ParseError
from gaussian_ideals.verify.report import Verdict
from gaussian_ideals.verify.scenarios import (
    ALIASES,
    COMMANDS,
    RunSettings,
    ScenarioRequest,
    default_suite,
    load_suite_file,
    run_scenario,
    run_suite,
)


@pytest.fixture
def settings():
    return RunSettings(timeout_seconds=0)


def test_dedekind_mertens_scenario(settings):
    scenario = run_scenario(ScenarioRequest("dedekind-mertens", {"m": 1, "n": 1}), settings)
    assert scenario.status is Verdict.PASS
    assert scenario.parameters == {"m": 1, "n": 1, "field": "gf:32003"}
    assert set(scenario.timings) == {"dedekind_mertens", "total"}


def test_alias_keeps_requested_name(settings):
    scenario = run_scenario(ScenarioRequest("reduction-number", {"m": 1, "n": 1}), settings)
    assert scenario.name == "reduction-number"
    assert scenario.status is Verdict.PASS


def test_field_parameter_overrides_settings(settings):
    scenario = run_scenario(ScenarioRequest("toric-kernel", {"m": 1, "n": 1, "field": "q"}), settings)
    assert scenario.parameters["field"] == "q"
    assert scenario.status is Verdict.PASS


def test_budget_exhaustion_is_reported():
    tight = RunSettings(max_reductions=1, timeout_seconds=0)
    scenario = run_scenario(ScenarioRequest("sharpness", {"m": 1, "n": 2, "field": "gf:101"}), tight)
    assert scenario.status is Verdict.BUDGET_EXCEEDED
    assert scenario.claims[-1].detail["reason"].startswith("budget exceeded: reduction steps")


def test_non_normal_control(settings):
    scenario = run_scenario(ScenarioRequest("normality", {"ideal": "example", "up_to": 1}), settings)
    (claim,) = scenario.claims
    assert claim.name == "non_normal_control"
    assert claim.passed
    assert claim.detail == {"failed_at": 1, "witness": "x*y"}


def test_graph_normality(settings):
    request = ScenarioRequest("normality", {"ideal": "graph", "graph": "cycle:4", "up_to": 2})
    (claim,) = run_scenario(request, settings).claims
    assert claim.passed
    assert claim.detail["ideal"] == "(x2*x3, x1*x2, x0*x3, x0*x1)"
    assert claim.detail["failed_at"] is None


def test_join_of_edges_meets_hypothesis(settings):
    request = ScenarioRequest("join-normality", {"left": "path:2", "right": "path:2", "up_to": 2})
    (claim,) = run_scenario(request, settings).claims
    assert claim.passed
    assert not claim.exploratory
    assert claim.detail["generators"] == 6


def test_struct_content_status_ignores_probes(settings):
    scenario = run_scenario(ScenarioRequest("struct-content", {"kind": "capped", "rank": 2}), settings)
    assert scenario.status is Verdict.PASS
    assert any(not c.passed and c.exploratory for c in scenario.claims)


def test_fiber_reduction_without_cross_check(settings):
    request = ScenarioRequest("fiber-reduction", {"m": 1, "n": 1, "cross_check": False})
    scenario = run_scenario(request, settings)
    assert [c.name for c in scenario.claims] == ["analytic_spread", "fiber_reduction_number", "hilbert_total"]


@pytest.mark.parametrize("request_", [
    ScenarioRequest("no-such-check"),
    ScenarioRequest("dedekind-mertens", {"up_to": 2}),
    ScenarioRequest("normality", {"ideal": "graph"}),
    ScenarioRequest("normality", {"ideal": "cube"}),
])
def test_bad_requests(settings, request_):
    with pytest.raises(ValueError):
        run_scenario(request_, settings)


def test_bad_field(settings):
    with pytest.raises(ParseError):
        run_scenario(ScenarioRequest("noether", {"field": "gf:12"}), settings)


def test_run_suite_sequential(settings):
    requests = [
        ScenarioRequest("dedekind-mertens", {"m": 1, "n": 1}),
        ScenarioRequest("hu-specialization", {"m": 1, "n": 1}),
    ]
    report = run_suite(requests, settings)
    assert [s.name for s in report.scenarios] == ["dedekind-mertens", "hu-specialization"]
    assert report.verdict is Verdict.PASS


def test_run_suite_checks_names_first(settings):
    with pytest.raises(ValueError):
        run_suite([ScenarioRequest("dedekind-mertens"), ScenarioRequest("bogus")], settings)


@pytest.mark.parametrize("quick", [True, False])
def test_default_suite_uses_known_commands(quick):
    names = {r.command for r in default_suite(quick)}
    assert names <= set(COMMANDS) | set(ALIASES)
    assert {"dedekind-mertens", "normality", "struct-content"} <= names


def test_full_suite_keeps_the_default_timeout():
    overrides = {r.command: r.params["timeout"] for r in default_suite() if "timeout" in r.params}
    assert overrides == {"primary-decomp3": 600}


def test_load_suite_file(tmp_path):
    path = tmp_path / "sweep.json"
    path.write_text(
        json.dumps({"field": "q", "scenarios": [{"command": "sharpness", "m": 1, "n": 3}]}),
        encoding="utf-8",
    )
    field, requests = load_suite_file(path)
    assert field == "q"
    assert requests == [ScenarioRequest("sharpness", {"m": 1, "n": 3})]


@pytest.mark.parametrize("text", ["{", "[]", '{"scenarios": [{"m": 1}]}'])
def test_load_suite_file_errors(tmp_path, text):
    path = tmp_path / "sweep.json"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ParseError):
        load_suite_file(path)
    with pytest.raises(FileNotFoundError):
        load_suite_file(tmp_path / "missing.json")
