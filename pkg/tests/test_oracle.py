from __future__ import annotations

import pytest

from ramsey_forge.graphs import (complete, copies, cycle, disjoint_union, empty, path, star)
from ramsey_forge.oracle import applicability_report, formula_bounds, homological_certificate
from ramsey_forge.search import constrained_ramsey, ramsey_k
from ramsey_forge.table import KnownValuesTable

K3, K4 = complete(3), complete(4)


def _verdicts(h, table=None):
    return {v["theorem"]: v for v in applicability_report(h, table)["verdicts"]}


def test_burr_bound_for_pentagon():
    b = formula_bounds(cycle(5))
    assert b.best("R_2(H)") == 9
    assert b.best("R_3(H)") == 13
    assert b.best("f(H,P5)") == 13


def test_two_triangles():
    b = formula_bounds(copies(K3, 2))
    assert b.best("R_3(H)") >= 16
    rules = {(e.rule, e.value) for e in b.entries if e.target == "R_3(H)"}
    assert ("lemma-R3-iii", 16) in rules and ("lemma-R3-i", 12) in rules
    v = _verdicts(copies(K3, 2))
    assert v["thm-union-1"]["verdict"] == "APPLIES"
    assert v["thm-critical"]["verdict"] == "APPLIES"
    assert v["prop-isolated"]["verdict"] == "NOT"


def test_pentagon_plus_square():
    v = _verdicts(disjoint_union(cycle(5), cycle(4)))
    assert v["thm-critical"]["verdict"] == "APPLIES"
    assert v["thm-one3"]["verdict"] == "APPLIES"
    assert v["thm-homological"]["verdict"] == "NOT"


def test_union_2_uses_table_value():
    t = KnownValuesTable().add("R", [K4, K4], 18, note="literature")
    v = _verdicts(copies(K4, 3), t)["thm-union-2"]
    assert v["verdict"] == "APPLIES"
    bound = v["trace"][-1]["value"]
    assert bound["bound"] == pytest.approx(2.125) and bound["R_2 source"] == "literature"
    # without the value the hypothesis cannot be evaluated
    assert _verdicts(copies(K4, 3))["thm-union-2"]["verdict"] != "APPLIES"


def test_isolated_vertices():
    v = _verdicts(disjoint_union(K3, empty(2)))
    assert v["prop-isolated"]["verdict"] == "APPLIES"


@pytest.mark.parametrize("h", [path(3), copies(complete(2), 2), cycle(5), copies(K3, 2),
                               disjoint_union(cycle(5), cycle(4)), copies(K4, 3), K4])
def test_traces_are_consistent(h):
    for v in applicability_report(h)["verdicts"]:
        oks = [c["ok"] for c in v["trace"]]
        if v["verdict"] == "APPLIES":
            assert all(ok is True for ok in oks) and v["conclusion"]
        elif v["verdict"] == "NOT":
            assert False in oks and not v["conclusion"]
        else:
            assert v["verdict"] == "UNKNOWN"
            assert False not in oks


def test_certified_equal_flag():
    assert applicability_report(copies(K3, 2))["certified_equal"]
    assert _verdicts(K4)["thm-connected-or-bipartite"]["verdict"] == "APPLIES"
    assert applicability_report(K4)["certified_equal"]


def test_homological_certificate():
    out = homological_certificate([cycle(5)] * 3)
    assert out["verdict"] == "APPLIES" and out["vector"] == [2, 2, 1] and out["k"] == 3
    out = homological_certificate([cycle(4), star(3)])
    assert out["verdict"] == "NOT" and out["reason"]


def test_bound_entries_json():
    for e in formula_bounds(copies(K3, 2)).entries:
        d = e.to_json()
        assert d["direction"] in ("LOWER", "UPPER", "EQUAL")
        assert d["status"] in ("APPLIES", "NOT", "UNKNOWN")


CORPUS = [path(3), copies(complete(2), 2), star(3), path(4),
          disjoint_union(complete(2), empty(1))]


@pytest.mark.parametrize("h", CORPUS, ids=lambda g: g.label or str(sorted(g.edges)))
def test_formula_bounds_below_exact_values(h):
    r2 = ramsey_k(h, 2, 8).value
    r3 = ramsey_k(h, 3, 8).value
    f = constrained_ramsey(h, 5, 8, check_eq1=False).value
    assert None not in (r2, r3, f) and f >= r3
    exact = {"R_2(H)": r2, "R_3(H)": r3, "f(H,P5)": f}
    for e in formula_bounds(h).entries:
        if e.target in exact and e.status == "APPLIES" and e.value is not None:
            if e.direction in ("LOWER", "EQUAL"):
                assert e.value <= exact[e.target], e
            if e.direction in ("UPPER", "EQUAL"):
                assert e.value >= exact[e.target], e
    if applicability_report(h)["certified_equal"]:
        assert f == r3
