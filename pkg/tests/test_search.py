from __future__ import annotations

import pytest

from ramsey_forge.colored import BIPARTITE, COMPLETE, find_mono_copy, find_rainbow_path
from ramsey_forge.graphs import complete, copies, path, star
from ramsey_forge.search import (EXHAUSTED, TIMEOUT, UNBOUNDED, WITNESS, SearchLimitError,
                                 SearchProblem, bell, bipartite_constrained, bipartite_ramsey_k,
                                 constrained_ramsey, default_jobs, exists_good_coloring,
                                 iter_colorings, ramsey_k, stirling_sum, two_color_ramsey)

P3, K3 = path(3), complete(3)
TWO_K2 = copies(complete(2), 2)


def test_small_values():
    assert ramsey_k(P3, 2, 5).value == 3
    assert ramsey_k(P3, 3, 6).value == 5
    assert ramsey_k(K3, 2, 6).value == 6
    assert two_color_ramsey(P3, P3, 5).value == 3
    assert two_color_ramsey(complete(2), K3, 4).value == 3


def test_constrained_values_and_eq1():
    r = constrained_ramsey(P3, 5, 6)
    assert r.value == 5
    assert "R_3(H) = 5" in r.notes
    # a proper 3-edge-colouring of K4: a Hamiltonian path reuses the colour of its first edge
    r = constrained_ramsey(P3, 4, 5)
    assert r.value == 5
    assert find_rainbow_path(r.witness, 4) is None and r.witness.order == 4


def test_bipartite_values():
    r = bipartite_ramsey_k(P3, 2, 4)
    assert r.value == 3 and any("= 3" in n for n in r.notes)
    assert bipartite_ramsey_k(P3, 3, 5).value == 4
    assert bipartite_ramsey_k(TWO_K2, 1, 3).value == 2
    assert bipartite_constrained(P3, 4, UNBOUNDED, 4).value == 3
    assert bipartite_constrained(P3, 5, UNBOUNDED, 6).value == 5


def test_witness_is_good():
    out = exists_good_coloring(SearchProblem(COMPLETE, 5, 2, K3))
    assert out.status == WITNESS
    assert find_mono_copy(out.witness, K3) is None
    out = exists_good_coloring(SearchProblem(COMPLETE, 4, UNBOUNDED, P3, 5))
    assert out.status == WITNESS
    assert find_mono_copy(out.witness, P3) is None and find_rainbow_path(out.witness, 5) is None
    assert exists_good_coloring(SearchProblem(COMPLETE, 6, 2, K3)).status == EXHAUSTED


def test_lower_bound_status():
    r = ramsey_k(K3, 2, 5)
    assert r.value is None and r.status == "LOWER_BOUND" and r.lower == 6
    assert r.to_json()["value"] == "> 5"


@pytest.mark.parametrize("shape,n,budget", [
    (COMPLETE, 4, UNBOUNDED), (COMPLETE, 5, UNBOUNDED), (COMPLETE, 5, 3),
    (BIPARTITE, 2, UNBOUNDED), (BIPARTITE, 3, 2), (BIPARTITE, 3, 4),
])
def test_enumeration_counts_one_per_class(shape, n, budget):
    e = n * (n - 1) // 2 if shape == COMPLETE else n * n
    want = bell(e) if budget is None else stirling_sum(e, budget)
    seqs = list(iter_colorings(shape, n, budget))
    assert len(seqs) == want == len(set(seqs))
    for s in seqs:
        # restricted growth: a new colour appears only after all smaller ones
        seen = 0
        for c in s:
            assert c <= seen + 1
            seen = max(seen, c)


def test_labeled_enumeration_count():
    assert len(list(iter_colorings(COMPLETE, 3, 3, labeled=True))) == 27


def test_bell_and_stirling():
    assert [bell(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    assert stirling_sum(4, 2) == 8 and stirling_sum(0, 3) == 1


def test_parallel_matches_sequential():
    for prob in (SearchProblem(COMPLETE, 5, 2, K3), SearchProblem(COMPLETE, 6, 2, K3),
                 SearchProblem(COMPLETE, 5, UNBOUNDED, TWO_K2, 5),
                 SearchProblem(BIPARTITE, 3, 3, P3)):
        a = exists_good_coloring(prob, jobs=1)
        b = exists_good_coloring(prob, jobs=2)
        assert a.status == b.status
        assert a.witness == b.witness


def test_timeout():
    out = exists_good_coloring(SearchProblem(COMPLETE, 8, 3, K3), time_limit=0.0)
    assert out.status == TIMEOUT and out.witness is None
    r = ramsey_k(K3, 3, 8, time_limit=0.0)
    assert r.status == "TIMEOUT" and r.value is None


def test_size_limits():
    with pytest.raises(SearchLimitError):
        exists_good_coloring(SearchProblem(COMPLETE, 10, UNBOUNDED, K3))
    with pytest.raises(SearchLimitError):
        exists_good_coloring(SearchProblem(BIPARTITE, 7, UNBOUNDED, star(3), 5))


def test_problem_validation():
    with pytest.raises(ValueError):
        SearchProblem(COMPLETE, 4, 0, K3)
    with pytest.raises(ValueError):
        SearchProblem(COMPLETE, 4, 2, complete(1))
    with pytest.raises(ValueError):
        constrained_ramsey(P3, 6, 6)
    with pytest.raises(ValueError):
        bipartite_ramsey_k(K3, 2, 4)


def test_default_jobs(monkeypatch):
    monkeypatch.setenv("RAMSEY_FORGE_JOBS", "3")
    assert default_jobs() == 3
    monkeypatch.setenv("RAMSEY_FORGE_JOBS", "junk")
    assert default_jobs() == 1


def test_h_star3_p5():
    r = bipartite_constrained(star(3), 5, UNBOUNDED, 7, edge_limit=49)
    assert r.value == 7
