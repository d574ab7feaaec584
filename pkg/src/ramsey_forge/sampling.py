"""Random valid parameters for every construction kind (property tests, CLI --seed)."""
from __future__ import annotations

import functools
import random

from .constructions import KINDS, ConstructionError, construct, normalize_kind
from .graphs import (chromatic_number, chromatic_surplus, complete, cycle, decomposition_family,
                     parse_graph6, path, star, to_graph6, transversal_number)
from .search import labeled_ramsey

MAX_HOST = 40

# small connected pools, as graph6 so they hash cleanly
_BIPARTITE = [to_graph6(g) for g in (complete(2), path(3), path(4), star(3), cycle(4))]
_CHI3 = [to_graph6(g) for g in (complete(3), cycle(5))] + ["Cz", "DmS"]  # K4-e, a 5-vertex one
_CHI4 = [to_graph6(complete(4)), "Ehfw"]  # K4, odd wheel W5


def _g(s):
    return parse_graph6(s)


@functools.lru_cache(maxsize=None)
def pair_value(a: str, b: str) -> tuple[int, tuple[int, ...]]:
    """R(A, B) and a raw 1/2 colouring of K_{R-1} avoiding A in colour 1 and B in colour 2."""
    return _family_value(((a,), (b,)))


@functools.lru_cache(maxsize=None)
def _family_value(families) -> tuple[int, tuple[int, ...]]:
    fams = tuple(tuple(_g(s) for s in f) for f in families)
    res = labeled_ramsey(fams, 9)
    if res.value is None:
        raise ConstructionError("value beyond the sampling search range")
    w = res.witness
    if w is None or res.value - 1 <= 1:
        return res.value, ()
    inv = {v: k for k, v in w.relabel.items()}
    return res.value, tuple(inv[c] for c in w.colors)


def _transversal_ok(gs) -> bool:
    for g in gs:
        chi = chromatic_number(g)
        if chi >= 2 and transversal_number(g, chi - 1) < chromatic_surplus(g):
            return False
    return True


def _random_inner(rng, ne: int, own: int):
    if rng.random() < 0.4:
        return None
    cols = [own if rng.random() < 0.5 else 1 for _ in range(ne)]
    cols[rng.randrange(ne)] = own
    return cols


def _split(rng, total: int, parts: int, low: int = 1) -> list[int]:
    cuts = sorted(rng.sample(range(1, total - parts * (low - 1)), parts - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [total - parts * (low - 1)])]
    return [s + low - 1 for s in sizes]


def random_parameters(kind: str, rng: random.Random) -> tuple[list, dict]:
    kind = normalize_kind(kind)
    for _ in range(200):
        try:
            comps, params = _draw(kind, rng)
        except ConstructionError:
            continue
        if comps is not None:
            return [_g(s) for s in comps], params
    raise ConstructionError(f"could not sample valid parameters for {kind}")


def _draw(kind, rng):
    if kind == "R3_I":
        # pairs from this pool have R(G_j, G_l) <= 7, cheap to search
        comps = [rng.choice(_BIPARTITE + _CHI3[:1] + ["Cz"]) for _ in range(rng.randint(1, 3))]
        gs = [_g(s) for s in comps]
        t = len(gs)
        i, j, l = rng.randrange(t), rng.randrange(t), rng.randrange(t)
        if comps[j] == comps[l] == "Cz":
            return None, None
        chi = chromatic_number(gs[i])
        same = [g for g in gs if chromatic_number(g) == chi]
        if not _transversal_ok(same):
            return None, None
        r, sub = pair_value(comps[j], comps[l])
        size = (chi - 1) * (r - 1) + sum(chromatic_surplus(g) for g in same) - 1
        if size > MAX_HOST:
            return None, None
        return comps, {"i": i, "j": j, "l": l, "r": r, "sub_host": list(sub)}
    if kind == "R3_II":
        comps = [rng.choice(_BIPARTITE + _CHI3) for _ in range(rng.randint(1, 3))]
        gs = [_g(s) for s in comps]
        i, j = rng.randrange(len(gs)), rng.randrange(len(gs))
        w = 3 if chromatic_number(gs[i]) == 3 and gs[i].size >= 3 and _has_triangle(gs[i]) else 2
        base = 5 if w == 3 else 1
        if base * (gs[j].order - 1) > MAX_HOST:
            return None, None
        return comps, {"i": i, "j": j}
    if kind == "R3_III":
        comps = []
        while not comps or (rng.random() < 0.5 and len(comps) < 3):
            comps.append(rng.choice(_CHI3))
        if 3 * (sum(_g(s).order for s in comps) - 1) > MAX_HOST:
            return None, None
        return comps, {}
    if kind == "R3_IV":
        comps = [rng.choice(_CHI3)] + [rng.choice(_BIPARTITE + _CHI3)
                                       for _ in range(rng.randint(0, 2))]
        rng.shuffle(comps)
        gs = [_g(s) for s in comps]
        if not _transversal_ok([g for g in gs if chromatic_number(g) == 3]):
            return None, None
        n = sum(g.order for g in gs)
        s3 = sum(chromatic_surplus(g) for g in gs if chromatic_number(g) == 3)
        if 2 * (n - 1) + s3 - 1 > MAX_HOST:
            return None, None
        return comps, {}
    if kind == "MATCHING":
        comps = [rng.choice(_BIPARTITE + _CHI3 + _CHI4) for _ in range(rng.randint(1, 3))]
        from .graphs import disjoint_union
        h = disjoint_union(*[_g(s) for s in comps])
        return [to_graph6(h)], {"m": rng.randint(1, 5)}
    if kind == "DECOMP":
        h = rng.choice(_CHI3 + _CHI4)
        g = _g(h)
        fam = tuple(to_graph6(m) for m in decomposition_family(g, 2).members)
        r, sub = _family_value(((h,), fam))
        if (chromatic_number(g) - 2) * (g.order - 1) + r - 1 > MAX_HOST:
            return None, None
        return [h], {"r": r, "sub_host": list(sub)}
    if kind == "BIPARTITE_BLOWUP":
        h = rng.choice(_BIPARTITE[1:])
        return [h], {"k": rng.randint(1, 5)}
    if kind == "EXACT_K":
        h = rng.choice(_CHI4 + [to_graph6(complete(5))])
        g = _g(h)
        p = chromatic_number(g)
        if p < 4:
            return None, None
        k = rng.randint(4, p)
        idx = p - k + 2
        fam = tuple(to_graph6(m) for m in decomposition_family(g, idx).members)
        r, sub = _family_value((fam, (h,)))
        if (k - 2) * (g.order - 1) + r - 1 > MAX_HOST:
            return None, None
        return [h], {"k": k, "r": r, "sub_host": list(sub)}
    if kind == "BIPARTITE_STARPART":
        h = rng.choice([to_graph6(path(4)), to_graph6(cycle(4)), "D]o", "EFz_"])  # s(H) >= 2
        return [h], {"k": rng.randint(1, 5)}
    if kind == "NO_RAINBOW_P5_SHAPE":
        parts = rng.randint(1, 5)
        sizes = [rng.randint(2, 7) for _ in range(parts)]
        if sum(sizes) > MAX_HOST:
            return None, None
        inner = [_random_inner(rng, s * (s - 1) // 2, i + 2) for i, s in enumerate(sizes)]
        return [], {"part_sizes": sizes, "inner": inner}
    if kind == "BIPARTITE_NO_RAINBOW_P4_SHAPE":
        parts = rng.randint(1, 5)
        sizes = [rng.randint(1, 4) for _ in range(parts)]
        return [], {"part_sizes": sizes}
    if kind == "BIPARTITE_NO_RAINBOW_P5_A":
        n = rng.randint(2, 20)
        u1 = rng.randint(1, n)
        v1 = rng.randint(0, n - 1)
        parts = rng.randint(1, min(n - v1, 5))
        vs = [v1] + _split(rng, n - v1, parts)
        return [], {"u1": u1, "u2": n - u1, "v_sizes": vs}
    if kind == "BIPARTITE_NO_RAINBOW_P5_B":
        parts = rng.randint(1, 4)
        us = [rng.randint(1, 4) for _ in range(parts)]
        n = sum(us)
        if n < parts:
            return None, None
        vs = _split(rng, n, parts)
        inner = [_random_inner(rng, a * b, i + 2) for i, (a, b) in enumerate(zip(us, vs))]
        return [], {"u_sizes": us, "v_sizes": vs, "inner": inner}
    raise ConstructionError(f"no sampler for {kind}")


def _has_triangle(g) -> bool:
    adj = g.adj
    return any(adj[u] & adj[v] for u, v in g.edges)


def random_construction(kind: str, seed: int):
    """One reproducible random instance of ``kind``."""
    rng = random.Random(f"{normalize_kind(kind)}:{seed}")
    comps, params = random_parameters(kind, rng)
    return construct(kind, comps, params)


__all__ = ["KINDS", "random_parameters", "random_construction", "pair_value", "MAX_HOST"]
