import io
import json

import pytest

from gammarho.biconvex import ConvexOrdering
from gammarho.generators import (
    gen_complete_bipartite,
    gen_cycle,
    gen_path,
    gen_random_biconvex,
    gen_sun,
)
from gammarho.harness import (
    DEFAULT_PREDICATES,
    EXPERIMENTS,
    PREDICATES,
    default_scan_items,
    detect_families,
    make_item,
    run_experiment,
    run_scan,
    scan_verdict,
    verify_counterexamples,
    write_counterexamples,
)
from gammarho.reports import ScanRecord, read_report, summarize, write_report


def test_detect_families():
    assert detect_families(gen_path(4), None) == {"any", "tree"}
    assert detect_families(gen_cycle(6), None) == {"any"}
    # K_{3,3} has 2n-3 edges but no degree-2 ear, so it is not a mop
    assert detect_families(gen_complete_bipartite(3, 3), None) == {"any", "bicubic"}
    assert detect_families(gen_sun(), None) == {"any", "mop"}
    g, o = gen_random_biconvex(4, 4, 2)
    fams = detect_families(g, o)
    assert "biconvex" in fams and "any" in fams


def test_predicate_table():
    assert "gamma-eq-rho" in PREDICATES
    assert "gamma-eq-rho" not in DEFAULT_PREDICATES
    assert set(DEFAULT_PREDICATES) == set(PREDICATES) - {"gamma-eq-rho"}
    for name, pred in PREDICATES.items():
        assert pred.kind in ("theorem", "conjecture")
        assert pred.name == name


def test_run_scan_basic():
    items = [make_item("p4", "probe", gen_path(4)),
             make_item("c6", "probe", gen_cycle(6))]
    records, ces = run_scan(items, ("rho-le-gamma", "tree-gamma-eq-rho"))
    assert ces == []
    assert [(r.graph_id, r.check) for r in records] == [
        ("p4", "rho-le-gamma"), ("p4", "tree-gamma-eq-rho"),
        ("c6", "rho-le-gamma")]
    assert all(r.holds for r in records)
    assert scan_verdict(records) == 0


def test_run_scan_rejects_unknown_predicate():
    with pytest.raises(ValueError):
        run_scan([make_item("x", "probe", gen_path(3))], ("no-such",))


def test_run_scan_parallel_matches_serial():
    items = [make_item(f"g{i}", "probe", gen_random_biconvex(4, 4, i)[0])
             for i in range(8)]
    serial, ces1 = run_scan(items, DEFAULT_PREDICATES, jobs=1)
    parallel, ces2 = run_scan(items, DEFAULT_PREDICATES, jobs=2)
    assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]
    assert ces1 == ces2


def test_counterexample_flow():
    # gamma(C4) = 2 > 1 = rho(C4), so the equality conjecture must break
    items = [make_item("c4", "probe", gen_cycle(4))]
    records, ces = run_scan(items, ("gamma-eq-rho",))
    assert scan_verdict(records) == 2
    assert len(ces) == 1
    ce = ces[0]
    assert ce["predicate"] == "gamma-eq-rho"
    assert ce["gamma"] == 2 and ce["rho"] == 1
    assert sorted(ce) == sorted(
        ["graph_id", "family", "predicate", "graph6", "gamma", "rho",
         "bound", "dominating", "packing", "x_order", "y_order"])

    sink = io.StringIO()
    write_counterexamples(ces, sink)
    replayed = verify_counterexamples(sink.getvalue().splitlines())
    assert len(replayed) == 1
    assert replayed[0]["still_violates"] is True


def test_verify_counterexamples_resolves_from_graph6_alone():
    # tamper with the recorded numbers; the replay recomputes them
    items = [make_item("c4", "probe", gen_cycle(4))]
    _, ces = run_scan(items, ("gamma-eq-rho",))
    doctored = dict(ces[0], gamma=1, rho=1)
    out = verify_counterexamples([json.dumps(doctored)])
    assert out[0]["still_violates"] is True


def test_scan_verdict_precedence():
    theorem_fail = ScanRecord(graph_id="a", family="f", n=3, check="c",
                              kind="theorem", holds=False)
    conj_fail = ScanRecord(graph_id="a", family="f", n=3, check="c",
                           kind="conjecture", holds=False)
    ok = ScanRecord(graph_id="a", family="f", n=3, check="c",
                    kind="theorem", holds=True)
    unknown = ScanRecord(graph_id="a", family="f", n=3, check="c",
                         kind="theorem", holds=None)
    assert scan_verdict([ok]) == 0
    assert scan_verdict([ok, unknown]) == 0  # inconclusive is not failure
    assert scan_verdict([ok, conj_fail]) == 2
    assert scan_verdict([conj_fail, theorem_fail]) == 3


def test_budget_exhaustion_yields_inconclusive():
    items = [make_item("big", "probe", gen_random_biconvex(8, 8, 1)[0])]
    records, ces = run_scan(items, ("rho-le-gamma",), budget=1)
    assert ces == []
    assert all(r.holds is None for r in records)
    assert records[0].details["reason"] == "node budget exhausted"


def test_default_scan_items_composition():
    items = default_scan_items()
    ids = [it.graph_id for it in items]
    assert len(ids) == len(set(ids))
    families = {}
    for it in items:
        families[it.family] = families.get(it.family, 0) + 1
    assert families["tree"] == 40
    assert families["any"] == 60
    assert families["bicubic"] == 25
    assert families["mop"] == 60
    assert families["biconvex"] == 60
    assert families["named"] == 9
    # biconvex items carry their orderings
    assert all(it.ordering for it in items if it.family == "biconvex")


def test_experiments_registry():
    assert EXPERIMENTS == ("bicubic-small", "tight-family", "mop-theorem4",
                           "biconvex-theorem12")
    with pytest.raises(ValueError):
        run_experiment("no-such-experiment")


def test_tight_family_experiment():
    records = run_experiment("tight-family")
    assert scan_verdict(records) == 0
    checks = {r.check for r in records}
    assert checks == {"tight-gamma-eq-2k", "tight-rho-eq-k",
                      "tight-gamma-eq-2rho"}
    assert len(records) == 18  # six sizes, three records each


def test_report_roundtrip():
    items = [make_item("p5", "probe", gen_path(5))]
    records, _ = run_scan(items, ("rho-le-gamma", "gamma-le-delta-rho"))
    sink = io.StringIO()
    write_report(records, sink)
    back, summary = read_report(sink.getvalue().splitlines())
    assert [r.to_json() for r in back] == [r.to_json() for r in records]
    probe = summary["families"]["probe"]
    assert probe["records"] == len(records)
    assert probe["violations"] == 0 and probe["theorem_failures"] == 0
    assert summarize(records)["families"]["probe"]["records"] == len(records)
