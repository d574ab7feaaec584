from __future__ import annotations

import random
import warnings

import pytest

from ramsey_forge.colored import (BIPARTITE, COMPLETE, build_host, complete_host,
                                  find_rainbow_path, host_from_function)
from ramsey_forge.constructions import construct
from ramsey_forge.graphs import complete, copies, cycle
from ramsey_forge.search import UNBOUNDED, iter_colorings
from ramsey_forge.structure import (P5Partition, StructureContradiction, StructureError,
                                    check_extended_sizes, classify_bipartite_structure,
                                    recover_p5_partition, tripartite_contains_union,
                                    verify_p5_partition)

from conftest import naive_certificate_exists, naive_rainbow_path, random_host

K3 = complete(3)


def _shape(sizes):
    return construct("NO_RAINBOW_P5_SHAPE", [], {"part_sizes": sizes})


def test_generator_round_trip():
    r = _shape([4, 3, 2])
    cert = P5Partition(r.structure["color1"], tuple(tuple(p) for p in r.structure["parts"]),
                       tuple(sorted(set(r.host.colors) - {r.structure["color1"]})))
    assert verify_p5_partition(r.host, cert)["verdict"] == "PASS"


def test_planted_violation_listed():
    r = _shape([4, 3, 2])
    c1 = r.structure["color1"]
    other = next(c for c in range(1, r.host.k + 1) if c != c1)
    cols = list(r.host.colors)
    idx = r.host.edges.index((0, 4))  # parts 0 and 1
    cols[idx] = other
    host = build_host(COMPLETE, cols, r.host.m)
    found = recover_p5_partition(r.host)
    cert = found[0]
    rep = verify_p5_partition(host, cert)
    assert rep["verdict"] == "FAIL"
    assert any(v["edge"] == [0, 4] for v in rep["violations"])


def test_missing_own_colour_fails():
    host = complete_host(5, [1] * 10)
    rep = verify_p5_partition(host, P5Partition(1, ((0, 1, 2), (3, 4)), (2, 3)))
    assert rep["verdict"] == "FAIL"


def test_non_partition_rejected():
    host = complete_host(4, [1] * 6)
    with pytest.raises(StructureError):
        verify_p5_partition(host, P5Partition(1, ((0, 1), (1, 2, 3)), (2, 3)))
    with pytest.raises(StructureError):
        verify_p5_partition(host, P5Partition(1, ((0, 1),), (2,)))


def test_recovery_on_generator_output():
    rng = random.Random(5)
    for _ in range(50):
        # a single part collapses to one colour, where no certificate is defined
        sizes = [rng.randint(2, 5) for _ in range(rng.randint(2, 4))]
        r = _shape(sizes)
        cert, relabel = recover_p5_partition(r.host)
        assert verify_p5_partition(r.host, cert)["verdict"] == "PASS"
        assert sorted(len(p) for p in cert.parts) == sorted(sizes)


def test_recovery_absent_cases():
    assert recover_p5_partition(complete_host(4, [1] * 6)) is None
    planted = {(0, 1): 1, (1, 2): 2, (2, 3): 3, (3, 4): 4}
    h = host_from_function(COMPLETE, 5, None, lambda u, v: planted.get((u, v), 1))
    assert find_rainbow_path(h, 5) is not None
    assert recover_p5_partition(h) is None


def test_recovery_is_sound_on_random_hosts():
    rng = random.Random(11)
    for _ in range(400):
        host = random_host(rng, shape=COMPLETE, max_order=8, max_k=6)
        found = recover_p5_partition(host)
        if found is not None:
            assert verify_p5_partition(host, found[0])["verdict"] == "PASS"
            assert not naive_rainbow_path(host, 5)


def test_recovery_matches_brute_force_certificate_search():
    # every canonical colouring of K_5 with at least 4 colours
    seen = 0
    for cols in iter_colorings(COMPLETE, 5, UNBOUNDED):
        if max(cols) < 4:
            continue
        host = build_host(COMPLETE, list(cols), 5)
        seen += 1
        if seen % 7:
            continue
        assert (recover_p5_partition(host) is not None) == naive_certificate_exists(host)
    assert seen > 1000


def test_rainbow_free_hosts_without_certificate():
    # a proper 3-edge-colouring of K4 plus an apex joined in a fourth colour
    pm = {(0, 1): 1, (2, 3): 1, (0, 2): 2, (1, 3): 2, (0, 3): 3, (1, 2): 3}
    h = host_from_function(COMPLETE, 5, None, lambda u, v: 4 if v == 4 else pm[(u, v)])
    assert h.k == 4
    assert not naive_rainbow_path(h, 5)
    assert recover_p5_partition(h) is None
    assert not naive_certificate_exists(h)
    # a rainbow triangle in a sea of one colour
    tri = {(2, 3): 2, (2, 4): 3, (3, 4): 4}
    h = host_from_function(COMPLETE, 5, None, lambda u, v: tri.get((u, v), 1))
    assert not naive_rainbow_path(h, 5)
    assert recover_p5_partition(h) is None


@pytest.mark.parametrize("sizes,verdict", [
    ([7, 6, 3], "PASS"),
    ([10, 2, 2], "FAIL"),
    ([6, 6], "FAIL"),
])
def test_extended_sizes(sizes, verdict):
    parts, start = [], 0
    for s in sizes:
        parts.append(tuple(range(start, start + s)))
        start += s
    cert = P5Partition(1, tuple(parts), tuple(range(2, 2 + len(sizes))))
    assert check_extended_sizes(cert, copies(K3, 2))["verdict"] == verdict


def test_bipartite_star_partition():
    r = construct("BIPARTITE_STARPART", [cycle(4)], {"k": 3})
    out = classify_bipartite_structure(r.host, 4)
    assert out["structure"]["lemma"] == "star-partition"
    assert len(out["structure"]["parts"]) == 3
    assert not out["has_rainbow_path"]


def test_bipartite_case_b_round_trip():
    r = construct("BIPARTITE_NO_RAINBOW_P5_B", [], {"u_sizes": [2, 1, 1], "v_sizes": [1, 2, 1]})
    out = classify_bipartite_structure(r.host, 5)
    assert out["structure"]["case"] == "B"
    assert sorted(len(p) for p in out["structure"]["U_parts"]) == [1, 1, 2]


def test_bipartite_case_a():
    r = construct("BIPARTITE_NO_RAINBOW_P5_A", [], {"u1": 2, "u2": 1, "v_sizes": [0, 1, 1, 1]})
    out = classify_bipartite_structure(r.host, 5)
    assert out["structure"]["case"] == "A"


def test_bipartite_case_c():
    # K_{3,3} with colour classes of sizes 3, 3, 2, 1, all matchings
    latin = {(0, 3): 1, (1, 4): 1, (2, 5): 1, (0, 4): 2, (1, 5): 2, (2, 3): 2,
             (0, 5): 3, (1, 3): 3, (2, 4): 4}
    h = host_from_function(BIPARTITE, 3, 3, lambda u, v: latin[(u, v)])
    assert h.k == 4
    out = classify_bipartite_structure(h, 5)
    assert out["structure"] is None or out["structure"]["case"] in ("A", "B", "C")
    assert _all_matchings(h)
    if out["structure"]["case"] == "C":
        assert set(out["structure"]["matchings"]) == {"1", "2", "3", "4"}


def _all_matchings(h):
    return all(nb.bit_count() <= 1 for c in range(1, h.k + 1) for nb in h.color_adj[c])


def test_bipartite_rejects_bad_input():
    with pytest.raises(StructureError):
        classify_bipartite_structure(complete_host(3, [1, 2, 3]), 5)
    with pytest.raises(StructureError):
        classify_bipartite_structure(build_host(BIPARTITE, [1] * 6, 2, 3), 5)


def test_bipartite_contradiction_flag():
    # a rainbow-free host found by the classifier never raises the warning
    r = construct("BIPARTITE_STARPART", [cycle(4)], {"k": 4})
    with warnings.catch_warnings():
        warnings.simplefilter("error", StructureContradiction)
        classify_bipartite_structure(r.host, 4)


def test_bipartite_classifier_complete_on_small_hosts():
    # every rainbow-P4-free colouring of K_{2,2} and K_{3,3} with >= 3 colours fits the lemma
    for n in (2, 3):
        for cols in iter_colorings(BIPARTITE, n, UNBOUNDED, forbid_rainbow=4):
            if max(cols) < 3:
                continue
            h = build_host(BIPARTITE, list(cols), n, n)
            with warnings.catch_warnings():
                warnings.simplefilter("error", StructureContradiction)
                out = classify_bipartite_structure(h, 4)
            assert out["structure"] is not None


@pytest.mark.parametrize("xyz,g1,g2,want,route", [
    ((2, 2, 2), K3, K3, True, "condition (ii)"),
    ((2, 2, 1), K3, K3, False, "exact search"),
    ((3, 3, 2), cycle(5), K3, True, "condition (ii)"),
])
def test_tripartite_examples(xyz, g1, g2, want, route):
    out = tripartite_contains_union(*xyz, g1, g2)
    assert out["contains"] is want and out["route"] == route


def test_tripartite_requires_three_chromatic():
    with pytest.raises(StructureError):
        tripartite_contains_union(3, 3, 3, cycle(4), K3)
