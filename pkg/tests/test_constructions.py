from __future__ import annotations

import json
import random

import pytest

from ramsey_forge.colored import BIPARTITE, COMPLETE, build_host, find_mono_copy
from ramsey_forge.constructions import (KINDS, Claim, ConstructionError, construct,
                                        result_from_json, save_certificate, verify_construction)
from ramsey_forge.graphs import (SimpleGraph, complete, copies, cycle, disjoint_union, path, star)
from ramsey_forge.sampling import random_construction, random_parameters
from ramsey_forge.table import KnownValuesTable, MissingValue

K3 = complete(3)


def test_r3_iii_two_triangles():
    r = construct("r3-iii", [K3, K3])
    assert r.host.shape == COMPLETE and r.host.order == 15 and r.host.k == 3
    assert r.structure["parts"] == [list(range(0, 5)), list(range(5, 10)), list(range(10, 15))]
    assert verify_construction(r)["verdict"] == "PASS"


def test_r3_iv_triangle_and_square():
    r = construct("R3_IV", [K3, cycle(4)])
    assert r.host.order == 12
    assert r.parameters["part_sizes"] == [6, 6, 0]
    assert verify_construction(r)["verdict"] == "PASS"


def test_r3_iv_tamper_detected():
    r = construct("R3_IV", [K3, complete(2)])
    # recolour every edge of part 1 to colour 3: a colour-3 copy appears
    parts = r.structure["parts"]
    cols = list(r.host.colors)
    for idx, (u, v) in enumerate(r.host.edges):
        if u in parts[0] and v in parts[0]:
            cols[idx] = 3
    r.host = build_host(COMPLETE, cols, r.host.m)
    rep = verify_construction(r)
    assert rep["verdict"] == "FAIL"
    assert rep["claims"][0]["counterexample"] is not None


def test_r3_transversal_gap_rejected():
    # sigma = 3, yet deleting both centres leaves a bipartite graph
    edges = {(0, 1), (0, 2), (0, 3), (2, 3), (0, 4), (0, 5), (4, 5),
             (1, 6), (1, 7), (6, 7), (1, 8), (1, 9), (8, 9)}
    g = SimpleGraph(10, frozenset(edges))
    with pytest.raises(ConstructionError, match="sigma"):
        construct("R3_IV", [g])
    with pytest.raises(ConstructionError):
        construct("R3_I", [g], {"r": 10})


def test_r3_ii_pentagon_base():
    r = construct("R3_II", [K3, path(3)], {"i": 0, "j": 0})
    assert r.host.order == 10
    assert verify_construction(r)["verdict"] == "PASS"


def test_r3_i_with_table_value():
    t = KnownValuesTable().add("R", [K3, K3], 6, note="classical")
    r = construct("R3_I", [K3, K3], {"i": 0, "j": 0, "l": 0}, table=t)
    # parts: (chi-1) blocks of R-1 = 5 plus sigma_sum - 1 = 1
    assert r.host.order == 11
    assert r.parameters["R_source"] == "classical"
    assert verify_construction(r)["verdict"] == "PASS"


def test_r3_i_missing_value_without_search():
    with pytest.raises(MissingValue):
        construct("R3_I", [K3, K3], {}, compute=False)


def test_matching_example():
    h = copies(path(3), 2)
    r = construct("MATCHING", [h], {"m": 2})
    assert r.host.order == 6
    assert r.parameters["part_sizes"] == [1, 5]
    rep = verify_construction(r)
    assert rep["verdict"] == "PASS" and len(rep["claims"]) == 2


def test_blowup_star():
    r = construct("BIPARTITE_BLOWUP", [star(3)], {"k": 3})
    assert r.host.shape == BIPARTITE and (r.host.m, r.host.n) == (6, 6) and r.host.k == 3
    for c in (1, 2, 3):
        assert r.host.colors.count(c) == 12  # three copies of K_{2,2}
    assert verify_construction(r)["verdict"] == "PASS"


def test_blowup_degenerates_to_matchings():
    r = construct("BIPARTITE_BLOWUP", [path(3)], {"k": 3})
    # t(H) - 1 = 1, so every colour is a perfect matching of K_{3,3}
    assert (r.host.m, r.host.k) == (3, 3)
    assert all(nb.bit_count() <= 1 for c in (1, 2, 3) for nb in r.host.color_adj[c])


def test_p5_shape_example():
    r = construct("NO_RAINBOW_P5_SHAPE", [], {"part_sizes": [4, 3, 2]})
    assert r.host.order == 9 and r.host.k == 4
    # the between-parts colour is recorded after normalization
    u, v = r.structure["parts"][0][0], r.structure["parts"][1][0]
    assert r.host.color(u, v) == r.structure["color1"]
    assert verify_construction(r)["verdict"] == "PASS"


def test_exact_k_and_decomp():
    r = construct("DECOMP", [K3])
    assert verify_construction(r)["verdict"] == "PASS"
    r = construct("EXACT_K", [complete(4)], {"k": 4})
    assert verify_construction(r)["verdict"] == "PASS"
    with pytest.raises(ConstructionError):
        construct("EXACT_K", [K3], {"k": 4})


def test_rejects_bad_inputs():
    with pytest.raises(ConstructionError):
        construct("NOT_A_KIND")
    with pytest.raises(ConstructionError):
        construct("R3_III", [path(3)])
    with pytest.raises(ConstructionError):
        construct("BIPARTITE_BLOWUP", [K3])
    with pytest.raises(ConstructionError):
        construct("BIPARTITE_NO_RAINBOW_P5_B", [], {"u_sizes": [2], "v_sizes": [3]})
    with pytest.raises(ConstructionError):
        construct("R3_I", [disjoint_union(K3, K3)])


def test_certificate_round_trip(tmp_path):
    r = construct("R3_III", [K3, K3])
    rep = verify_construction(r)
    path_ = tmp_path / "cert.json"
    save_certificate(str(path_), r, rep)
    data = json.loads(path_.read_text())
    again = result_from_json(data)
    assert again.host == r.host
    assert verify_construction(again)["verdict"] == data["report"]["verdict"] == "PASS"


def test_claim_json():
    c = Claim("no_mono", K3, 2)
    assert Claim.from_json(c.to_json()) == c


@pytest.mark.parametrize("kind", KINDS)
def test_random_parameterizations(kind):
    for seed in range(15):
        r = random_construction(kind, seed)
        assert r.host.order <= 40
        assert verify_construction(r)["verdict"] == "PASS", (kind, seed, r.parameters)


def test_sampler_is_reproducible():
    a = random_parameters("NO_RAINBOW_P5_SHAPE", random.Random(3))
    b = random_parameters("NO_RAINBOW_P5_SHAPE", random.Random(3))
    assert a == b
