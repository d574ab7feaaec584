"""Edge-coloured complete and complete bipartite hosts, plus the two pattern queries."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property

from . import _match
from .graphs import SimpleGraph, strip_isolated

COMPLETE = "complete"
BIPARTITE = "bipartite"


def edge_list(shape: str, a: int, b: int = 0) -> list[tuple[int, int]]:
    """Canonical edge order. Bipartite hosts use 0..m-1 on the left, m..m+n-1 on the right."""
    if shape == COMPLETE:
        return list(itertools.combinations(range(a), 2))
    if shape == BIPARTITE:
        return [(u, a + v) for u in range(a) for v in range(b)]
    raise ValueError(f"unknown shape {shape!r}")


def normalize_colors(colors) -> tuple[list[int], dict[int, int]]:
    relabel: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        out.append(relabel[c])
    return out, relabel


@dataclass(frozen=True)
class ColoredHost:
    shape: str
    m: int                      # complete: vertex count; bipartite: left side size
    n: int                      # complete: same as m; bipartite: right side size
    colors: tuple[int, ...]
    relabel: dict = field(default_factory=dict, compare=False)

    @property
    def order(self) -> int:
        return self.m if self.shape == COMPLETE else self.m + self.n

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return edge_list(self.shape, self.m, self.n)

    @cached_property
    def color_matrix(self) -> list[list[int]]:
        N = self.order
        mat = [[0] * N for _ in range(N)]
        for (u, v), c in zip(self.edges, self.colors):
            mat[u][v] = mat[v][u] = c
        return mat

    @cached_property
    def neighbours(self) -> list[int]:
        N = self.order
        if self.shape == COMPLETE:
            full = (1 << N) - 1
            return [full ^ (1 << v) for v in range(N)]
        left = (1 << self.m) - 1
        right = ((1 << N) - 1) ^ left
        return [right if v < self.m else left for v in range(N)]

    @cached_property
    def color_adj(self) -> list[list[int]]:
        """``color_adj[c][v]`` is the colour-c neighbourhood of v (index 0 unused)."""
        N = self.order
        ca = [[0] * N for _ in range(self.k + 1)]
        for (u, v), c in zip(self.edges, self.colors):
            ca[c][u] |= 1 << v
            ca[c][v] |= 1 << u
        return ca

    def color(self, u: int, v: int) -> int:
        c = self.color_matrix[u][v]
        if not c:
            raise KeyError(f"({u},{v}) is not an edge of the host")
        return c

    def left(self) -> list[int]:
        return list(range(self.m))

    def right(self) -> list[int]:
        return list(range(self.m, self.m + self.n)) if self.shape == BIPARTITE else []

    def with_color(self, u: int, v: int, c: int) -> "ColoredHost":
        """Copy with one edge recoloured (original labels are used as given)."""
        idx = self.edges.index((min(u, v), max(u, v)))
        cols = list(self.colors)
        cols[idx] = c
        return build_host(self.shape, cols, self.m, self.n)

    def to_json(self) -> dict:
        if self.shape == COMPLETE:
            return {"shape": COMPLETE, "n": self.m, "colors": list(self.colors)}
        return {"shape": BIPARTITE, "m": self.m, "n": self.n, "colors": list(self.colors)}


def build_host(shape: str, colors, m: int, n: int | None = None) -> ColoredHost:
    """Validate and normalize colours to first-occurrence order 1..k."""
    if shape == COMPLETE:
        n = m
        expected = m * (m - 1) // 2
    elif shape == BIPARTITE:
        if n is None:
            raise ValueError("bipartite shape needs both side sizes")
        expected = m * n
    else:
        raise ValueError(f"unknown shape {shape!r}")
    colors = list(colors)
    if len(colors) != expected:
        raise ValueError(f"expected {expected} colours for this shape, got {len(colors)}")
    for i, c in enumerate(colors):
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise ValueError(f"colour at edge index {i} must be a positive integer, got {c!r}")
    norm, relabel = normalize_colors(colors)
    return ColoredHost(shape, m, n, tuple(norm), relabel)


def complete_host(n: int, colors) -> ColoredHost:
    return build_host(COMPLETE, colors, n)


def bipartite_host(m: int, n: int, colors) -> ColoredHost:
    return build_host(BIPARTITE, colors, m, n)


def host_from_function(shape: str, m: int, n: int | None, fn) -> ColoredHost:
    """Build a host from ``fn(u, v)`` evaluated on the canonical edge list."""
    return build_host(shape, [fn(u, v) for u, v in edge_list(shape, m, n or 0)], m, n)


def host_from_json(data: dict) -> ColoredHost:
    shape = data.get("shape")
    if shape == COMPLETE:
        return build_host(COMPLETE, data["colors"], int(data["n"]))
    if shape == BIPARTITE:
        return build_host(BIPARTITE, data["colors"], int(data["m"]), int(data["n"]))
    raise ValueError(f"unknown shape {shape!r}")


def load_host(path: str) -> ColoredHost:
    with open(path) as fh:
        data = json.load(fh)
    return host_from_json(data.get("host", data))


@dataclass(frozen=True)
class Embedding:
    host_vertices: tuple[int, ...]
    color: int | tuple[int, ...]

    def to_json(self) -> dict:
        col = list(self.color) if isinstance(self.color, tuple) else self.color
        return {"host_vertices": list(self.host_vertices), "color": col}


@dataclass(frozen=True)
class ColorCensus:
    color_count: int
    per_color_edge_count: dict
    per_color_components: dict

    def to_json(self) -> dict:
        return {
            "color_count": self.color_count,
            "per_color_edge_count": {str(c): v for c, v in self.per_color_edge_count.items()},
            "per_color_components": {str(c): v for c, v in self.per_color_components.items()},
        }


def color_census(host: ColoredHost) -> ColorCensus:
    counts = {c: 0 for c in range(1, host.k + 1)}
    for c in host.colors:
        counts[c] += 1
    comps = {}
    for c in range(1, host.k + 1):
        # components of the colour class, counted over the vertices it spans
        comps[c] = sum(1 for comp in _match._components(host.order, host.color_adj[c])
                       if len(comp) > 1)
    return ColorCensus(host.k, counts, comps)


# -- monochromatic copies -----------------------------------------------------

class MonoMatcher:
    """Compiled pattern for repeated monochromatic queries."""

    def __init__(self, pattern: SimpleGraph):
        core, iso = strip_isolated(pattern)
        if not core.edges:
            raise ValueError("pattern must have at least one edge")
        self.pattern = pattern
        self.core = core
        self.isolated = iso
        self.plan = _match.make_plan(core.order, core.edges, break_symmetry=False)
        self._core_vertex = [v for v in range(pattern.order) if pattern.adj[v]]

    def in_class(self, adj: list[int], mask: int, order: int) -> list[int] | None:
        """Full pattern map inside the graph ``adj`` restricted to ``mask``, or None."""
        if self.pattern.order > order:
            return None
        images = _match.embed(self.plan, adj, mask, twins=_match.twin_classes(adj, mask))
        if images is None:
            return None
        return self._complete(images, order)

    def _complete(self, images: list[int], order: int) -> list[int]:
        mapping = [-1] * self.pattern.order
        used = set(images)
        for pos, cv in enumerate(self.plan.order):
            mapping[self._core_vertex[cv]] = images[pos]
        free = (x for x in range(order) if x not in used)
        for v in range(self.pattern.order):
            if mapping[v] < 0:
                mapping[v] = next(free)
        return mapping


def find_mono_copy(host: ColoredHost, pattern: SimpleGraph, color: int | None = None,
                   matcher: MonoMatcher | None = None) -> Embedding | None:
    """First monochromatic copy of ``pattern``, scanning colours in ascending order."""
    mm = matcher or MonoMatcher(pattern)
    colors = [color] if color is not None else range(1, host.k + 1)
    full = (1 << host.order) - 1
    for c in colors:
        if not 1 <= c <= host.k:
            continue
        mapping = mm.in_class(host.color_adj[c], full, host.order)
        if mapping is not None:
            return Embedding(tuple(mapping), c)
    return None


# -- rainbow paths ------------------------------------------------------------

def _generic_rainbow(nbr: list[int], col: list[list[int]], t: int) -> list[int] | None:
    N = len(nbr)
    path: list[int] = []

    def dfs(v: int, used: int, colors: int) -> bool:
        if len(path) == t:
            return True
        m = nbr[v] & ~used
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            c = col[v][w]
            if colors >> c & 1:
                continue
            path.append(w)
            if dfs(w, used | low, colors | (1 << c)):
                return True
            path.pop()
        return False

    for s in range(N):
        path[:] = [s]
        if dfs(s, 1 << s, 0):
            return list(path)
    return None


def _rainbow_p4(host: ColoredHost) -> list[int] | None:
    # middle edge b-c; a hangs off b, d hangs off c
    ca = host.color_adj
    nb = host.neighbours
    mat = host.color_matrix
    for b, c in host.edges:
        for b, c in ((b, c), (c, b)):
            x = mat[b][c]
            am = nb[b] & ~ca[x][b] & ~(1 << c)
            while am:
                low = am & -am
                a = low.bit_length() - 1
                am ^= low
                y = mat[a][b]
                dm = nb[c] & ~ca[x][c] & ~ca[y][c] & ~(1 << a) & ~(1 << b)
                if dm:
                    d = (dm & -dm).bit_length() - 1
                    return [a, b, c, d]
    return None


def _rainbow_p5(host: ColoredHost) -> list[int] | None:
    # centre v2 with arms v1, v3; extend each arm by one vertex
    ca = host.color_adj
    nb = host.neighbours
    mat = host.color_matrix
    N = host.order
    for v2 in range(N):
        arms = [w for w in range(N) if nb[v2] >> w & 1]
        for v1 in arms:
            x = mat[v1][v2]
            for v3 in arms:
                if v3 == v1:
                    continue
                y = mat[v2][v3]
                if y == x:
                    continue
                base = (1 << v1) | (1 << v2) | (1 << v3)
                m0 = nb[v1] & ~ca[x][v1] & ~ca[y][v1] & ~base
                while m0:
                    low = m0 & -m0
                    v0 = low.bit_length() - 1
                    m0 ^= low
                    z = mat[v0][v1]
                    m4 = nb[v3] & ~ca[x][v3] & ~ca[y][v3] & ~ca[z][v3] & ~base & ~low
                    if m4:
                        v4 = (m4 & -m4).bit_length() - 1
                        return [v0, v1, v2, v3, v4]
    return None


def find_rainbow_path(host: ColoredHost, t: int, method: str = "auto") -> Embedding | None:
    """A path on ``t`` vertices whose edges carry pairwise distinct colours."""
    if t < 3:
        raise ValueError("path order must be at least 3")
    if host.k < t - 1 or host.order < t:
        return None
    if method == "auto" and t in (4, 5):
        found = _rainbow_p4(host) if t == 4 else _rainbow_p5(host)
    else:
        found = _generic_rainbow(host.neighbours, host.color_matrix, t)
    if found is None:
        return None
    mat = host.color_matrix
    return Embedding(tuple(found), tuple(mat[a][b] for a, b in zip(found, found[1:])))


def merge_colors(host: ColoredHost, mapping: dict[int, int]) -> ColoredHost:
    return build_host(host.shape, [mapping.get(c, c) for c in host.colors], host.m, host.n)
