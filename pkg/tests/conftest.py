"""Naive brute-force oracles. They share no code with the library's matchers."""
from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from ramsey_forge.colored import BIPARTITE, COMPLETE, build_host, edge_list
from ramsey_forge.graphs import SimpleGraph


# -- graph6, written independently of the library encoder --------------------------------

def naive_graph6(order: int, edges) -> str:
    es = {(min(u, v), max(u, v)) for u, v in edges}
    bits = [1 if (i, j) in es else 0 for j in range(order) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    if order <= 62:
        head = [order]
    else:
        head = [63, (order >> 12) & 63, (order >> 6) & 63, order & 63]
    body = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(63 + x) for x in head + body)


# -- graph invariants ---------------------------------------------------------------------

def naive_colorings(g: SimpleGraph, k: int):
    for cols in itertools.product(range(k), repeat=g.order):
        if all(cols[u] != cols[v] for u, v in g.edges):
            yield cols


def naive_chi(g: SimpleGraph) -> int:
    for k in range(0, g.order + 1):
        if next(naive_colorings(g, k), None) is not None:
            return k
    return g.order


def naive_sigma(g: SimpleGraph) -> int:
    chi = naive_chi(g)
    if chi == 0:
        return 0
    best = g.order
    for cols in naive_colorings(g, chi):
        sizes = [cols.count(c) for c in range(chi)]
        if all(sizes):
            best = min(best, min(sizes))
    return best


def naive_clique(g: SimpleGraph) -> int:
    best = 1 if g.order else 0
    for r in range(2, g.order + 1):
        for sub in itertools.combinations(range(g.order), r):
            if all((a, b) in g.edges for a, b in itertools.combinations(sub, 2)):
                best = r
    return best


def naive_is_subgraph(small: SimpleGraph, big: SimpleGraph) -> bool:
    if small.order > big.order:
        return False
    for img in itertools.permutations(range(big.order), small.order):
        if all((min(img[u], img[v]), max(img[u], img[v])) in big.edges for u, v in small.edges):
            return True
    return False


def naive_isomorphic(a: SimpleGraph, b: SimpleGraph) -> bool:
    return a.order == b.order and a.size == b.size and naive_is_subgraph(a, b)


def drop_isolated(g: SimpleGraph) -> SimpleGraph:
    keep = sorted({v for e in g.edges for v in e})
    idx = {v: i for i, v in enumerate(keep)}
    return SimpleGraph(len(keep), frozenset((idx[u], idx[v]) for u, v in g.edges))


def naive_decomposition_family(h: SimpleGraph) -> list[SimpleGraph]:
    """Partition V(H) into chi-1 parts, all but the last independent; minimal last-part graphs."""
    p = naive_chi(h)
    cands = []
    for cols in itertools.product(range(p - 1), repeat=h.order):
        if any(cols[u] == cols[v] and cols[u] != p - 2 for u, v in h.edges):
            continue
        inside = [(u, v) for u, v in h.edges if cols[u] == cols[v] == p - 2]
        cands.append(drop_isolated(SimpleGraph(h.order, frozenset(inside))))
    uniq = []
    for g in cands:
        if not any(naive_isomorphic(g, u) for u in uniq):
            uniq.append(g)
    return [g for g in uniq
            if not any(o.size < g.size and naive_is_subgraph(o, g) for o in uniq)]


# -- coloured hosts -------------------------------------------------------------------------

def naive_mono(host, pattern: SimpleGraph, color=None) -> bool:
    mat = {}
    for (u, v), c in zip(host.edges, host.colors):
        mat[(u, v)] = mat[(v, u)] = c
    pe = sorted(pattern.edges)
    if not pe:
        return True
    for img in itertools.permutations(range(host.order), pattern.order):
        cols = set()
        for u, v in pe:
            c = mat.get((img[u], img[v]))
            if c is None:
                break
            cols.add(c)
            if len(cols) > 1:
                break
        else:
            if len(cols) == 1 and (color is None or color in cols):
                return True
    return False


def naive_rainbow_path(host, t: int) -> bool:
    mat = {}
    for (u, v), c in zip(host.edges, host.colors):
        mat[(u, v)] = mat[(v, u)] = c
    for img in itertools.permutations(range(host.order), t):
        cols = [mat.get((img[i], img[i + 1])) for i in range(t - 1)]
        if None not in cols and len(set(cols)) == t - 1:
            return True
    return False


def random_host(rng: random.Random, shape=None, max_order=9, max_k=5):
    shape = shape or rng.choice((COMPLETE, BIPARTITE))
    if shape == COMPLETE:
        m = rng.randint(2, max_order)
        n = None
        ne = m * (m - 1) // 2
    else:
        m = rng.randint(1, max_order // 2)
        n = rng.randint(1, max_order - m)
        ne = m * n
    k = rng.randint(1, max_k)
    return build_host(shape, [rng.randint(1, k) for _ in range(ne)], m, n)


# -- hypothesis strategies -------------------------------------------------------------------

@st.composite
def graphs(draw, min_order=0, max_order=8, connected=False):
    n = draw(st.integers(min_order, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = set(chosen)
    if connected:
        # join components through their smallest vertices
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for u, v in chosen:
            parent[find(u)] = find(v)
        reps = sorted({min(w for w in range(n) if find(w) == find(v)) for v in range(n)})
        edges |= set(zip(reps, reps[1:]))
    return SimpleGraph(n, frozenset(edges))


@st.composite
def hosts(draw, max_order=8, max_k=5):
    shape = draw(st.sampled_from((COMPLETE, BIPARTITE)))
    if shape == COMPLETE:
        m = draw(st.integers(2, max_order))
        n = None
        ne = m * (m - 1) // 2
    else:
        m = draw(st.integers(1, max_order // 2))
        n = draw(st.integers(1, max_order - m))
        ne = m * n
    k = draw(st.integers(1, max_k))
    cols = draw(st.lists(st.integers(1, k), min_size=ne, max_size=ne))
    return build_host(shape, cols, m, n)


@pytest.fixture
def rng():
    return random.Random(20240611)


# -- partition certificates ---------------------------------------------------------------

def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def naive_certificate_exists(host) -> bool:
    """Some vertex partition, distinguished colour and part colours form a valid certificate."""
    mat = {}
    for (u, v), c in zip(host.edges, host.colors):
        mat[(u, v)] = mat[(v, u)] = c
    colors = sorted(set(host.colors))
    for parts in set_partitions(list(range(host.order))):
        if len(parts) != len(colors) - 1:
            continue
        owner = {v: i for i, p in enumerate(parts) for v in p}
        for c1 in colors:
            rest = [c for c in colors if c != c1]
            for perm in itertools.permutations(rest):
                ok = True
                seen = set()
                for (u, v), c in mat.items():
                    if owner[u] != owner[v]:
                        ok = c == c1
                    else:
                        own = perm[owner[u]]
                        ok = c in (c1, own)
                        if c == own:
                            seen.add(owner[u])
                    if not ok:
                        break
                if ok and len(seen) == len(parts):
                    return True
    return False


# -- acceptance report ------------------------------------------------------------------------

@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion for the terminal summary."""
    lines = request.config.__dict__.setdefault("_acceptance_lines", {})

    def record(num: int, ok: bool, detail: str) -> bool:
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}"
        lines[num] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.__dict__.get("_acceptance_lines")
    if lines:
        terminalreporter.section("acceptance criteria")
        for num in sorted(lines):
            terminalreporter.write_line(lines[num])
