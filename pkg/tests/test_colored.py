from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from ramsey_forge.colored import (BIPARTITE, COMPLETE, bipartite_host, build_host, color_census,
                                  complete_host, edge_list, find_mono_copy, find_rainbow_path,
                                  host_from_function, host_from_json, merge_colors)
from ramsey_forge.constructions import construct
from ramsey_forge.graphs import complete, copies, cycle, path, star

from conftest import hosts, naive_mono, naive_rainbow_path, random_host

PATTERNS = [complete(2), path(3), complete(3), path(4), star(3), cycle(4), copies(complete(2), 2)]


def test_normalization():
    h = complete_host(3, [1, 1, 1])
    assert h.k == 1
    h = complete_host(3, [5, 7, 5])
    assert list(h.colors) == [1, 2, 1] and h.k == 2
    assert h.relabel == {5: 1, 7: 2}
    assert bipartite_host(2, 2, [1, 2, 3, 4]).k == 4


def test_validation():
    with pytest.raises(ValueError):
        complete_host(3, [1, 2])
    with pytest.raises(ValueError):
        bipartite_host(2, 2, [1, 2, 3])
    with pytest.raises(ValueError):
        build_host("triangle", [1], 2)


def test_json_round_trip():
    h = host_from_function(BIPARTITE, 2, 3, lambda u, v: (u + v) % 3 + 1)
    assert host_from_json(h.to_json()) == h
    h = complete_host(4, [1, 2, 3, 3, 2, 1])
    assert host_from_json(h.to_json()) == h


def test_edge_order():
    assert edge_list(COMPLETE, 3) == [(0, 1), (0, 2), (1, 2)]
    assert edge_list(BIPARTITE, 2, 2) == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_census():
    c = color_census(complete_host(4, [1] * 6))
    assert c.color_count == 1 and c.per_color_edge_count == {1: 6}
    k4 = host_from_function(COMPLETE, 4, None,
                            lambda u, v: {(0, 1): 1, (2, 3): 1, (0, 2): 2, (1, 3): 2}.get((u, v), 3))
    c = color_census(k4)
    assert c.color_count == 3 and set(c.per_color_edge_count.values()) == {2}
    assert set(c.per_color_components.values()) == {2}
    c = color_census(bipartite_host(2, 2, [1, 2, 3, 4]))
    assert c.per_color_edge_count == {1: 1, 2: 1, 3: 1, 4: 1}


def test_mono_examples():
    emb = find_mono_copy(complete_host(5, [1] * 10), complete(3))
    assert emb is not None and emb.color == 1
    pent = host_from_function(COMPLETE, 5, None, lambda u, v: 1 if (v - u) % 5 in (1, 4) else 2)
    assert find_mono_copy(pent, complete(3)) is None
    r = construct("R3_III", [complete(3), complete(3)])
    assert r.host.order == 15
    assert find_mono_copy(r.host, copies(complete(3), 2)) is None


def test_mono_color_restriction():
    # raw colour 2 appears first, so it is normalized to 1
    h = host_from_function(COMPLETE, 4, None, lambda u, v: 1 if v == 3 else 2)
    assert find_mono_copy(h, complete(3), color=1) is not None
    assert find_mono_copy(h, complete(3), color=2) is None
    assert find_mono_copy(h, star(3), color=2) is not None


def test_rainbow_examples():
    # few colours cannot host a rainbow P_t
    assert find_rainbow_path(complete_host(6, [1, 2, 3] * 5), 5) is None
    planted = {(0, 1): 1, (1, 2): 2, (2, 3): 3, (3, 4): 4}
    h = host_from_function(COMPLETE, 5, None, lambda u, v: planted.get((u, v), 1))
    emb = find_rainbow_path(h, 5)
    assert emb is not None and len(emb.host_vertices) == 5
    shape = construct("NO_RAINBOW_P5_SHAPE", [], {"part_sizes": [4, 3, 2]})
    assert find_rainbow_path(shape.host, 5) is None
    assert not naive_rainbow_path(shape.host, 5)


def _check_embedding(host, emb, pattern):
    mat = {}
    for (u, v), c in zip(host.edges, host.colors):
        mat[(u, v)] = mat[(v, u)] = c
    img = emb.host_vertices
    assert len(set(img)) == pattern.order
    cols = {mat[(img[u], img[v])] for u, v in pattern.edges}
    assert cols == {emb.color}


def test_detectors_agree_with_naive_on_random_hosts():
    rng = random.Random(7)
    for _ in range(300):
        host = random_host(rng)
        p = rng.choice(PATTERNS)
        emb = find_mono_copy(host, p)
        assert (emb is not None) == naive_mono(host, p)
        if emb is not None:
            _check_embedding(host, emb, p)
        for t in (4, 5):
            got = find_rainbow_path(host, t)
            assert (got is not None) == naive_rainbow_path(host, t)
            assert (find_rainbow_path(host, t, method="generic") is not None) == (got is not None)


@given(hosts(max_order=7), st.sampled_from(PATTERNS), st.integers(1, 3))
@settings(max_examples=200, deadline=None)
def test_coloured_mono_search_property(host, pattern, color):
    assert (find_mono_copy(host, pattern, color=color) is not None) == \
        naive_mono(host, pattern, color)


def test_merge_colors():
    h = complete_host(4, [1, 2, 3, 3, 2, 1])
    m = merge_colors(h, {3: 2})
    assert m.k == 2
    assert sorted(set(m.colors)) == [1, 2]
    # a 2-coloured host has no rainbow P4
    assert find_rainbow_path(m, 4) is None
