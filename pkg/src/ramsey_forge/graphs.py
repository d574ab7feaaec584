"""Simple graphs, graph6 I/O and the exact invariants the theorems are stated in."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from . import _match

MAX_GRAPH6_ORDER = 62
EXACT_LIMIT = 16
FAMILY_LIMIT = 10
HOMOLOGICAL_LIMIT = 12


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class GraphLimitError(ValueError):
    """Input is larger than an exact routine is documented to handle."""


@dataclass(frozen=True)
class SimpleGraph:
    order: int
    edges: frozenset = field(default_factory=frozenset)
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge ({u},{v}) outside 0..{self.order - 1}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, order: int, edges, label: str | None = None) -> "SimpleGraph":
        return cls(order, frozenset(tuple(e) for e in edges), label)

    @cached_property
    def adj(self) -> list[int]:
        adj = [0] * self.order
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    @cached_property
    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def __str__(self) -> str:
        return self.label or to_graph6(self)

    def components(self) -> list["SimpleGraph"]:
        """Connected components (isolated vertices included), vertices relabelled in order."""
        out = []
        for comp in _match._components(self.order, self.adj):
            out.append(self.induced(comp))
        return out

    def induced(self, vertices) -> "SimpleGraph":
        vs = list(vertices)
        idx = {v: i for i, v in enumerate(vs)}
        edges = [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx]
        return SimpleGraph.from_edges(len(vs), edges)

    def remove_edge(self, e) -> "SimpleGraph":
        e = (min(e), max(e))
        return SimpleGraph(self.order, self.edges - {e})

    def complement(self) -> "SimpleGraph":
        edges = [(u, v) for u, v in itertools.combinations(range(self.order), 2)
                 if (u, v) not in self.edges]
        return SimpleGraph.from_edges(self.order, edges)

    def is_connected(self) -> bool:
        return self.order <= 1 or len(_match._components(self.order, self.adj)) == 1

    def isolated(self) -> list[int]:
        return [v for v in range(self.order) if self.adj[v] == 0]


# -- constructors ---------------------------------------------------------

def complete(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, itertools.combinations(range(n), 2), f"K{n}")


def empty(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(), f"E{n}")


def path(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def star(leaves: int) -> SimpleGraph:
    return SimpleGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], f"K1,{leaves}")


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}")


def complete_multipartite(sizes) -> SimpleGraph:
    owner = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(owner)
    return SimpleGraph.from_edges(
        n, [(u, v) for u, v in itertools.combinations(range(n), 2) if owner[u] != owner[v]])


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.order
    label = "+".join(str(g) for g in graphs) if all(g.label for g in graphs) else None
    return SimpleGraph.from_edges(off, edges, label)


def copies(g: SimpleGraph, t: int) -> SimpleGraph:
    u = disjoint_union(*([g] * t))
    return SimpleGraph(u.order, u.edges, f"{t}{g.label}" if g.label else None)


# -- graph6 -----------------------------------------------------------------

def to_graph6(g: SimpleGraph) -> str:
    if g.order > MAX_GRAPH6_ORDER:
        raise GraphLimitError(f"graph6 output limited to order {MAX_GRAPH6_ORDER}")
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.order) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.order + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph6(text: str) -> SimpleGraph:
    """Decode one graph6 line (optional ``>>graph6<<`` header)."""
    s = text.strip("\r\n")
    base = 0
    if s.startswith(">>graph6<<"):
        base = len(">>graph6<<")
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", base + i)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error(f"orders above {MAX_GRAPH6_ORDER} are not supported", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit vector: expected {need} bytes, got {len(body)}",
                          base + 1 + len(body))
    if len(body) > need:
        raise Graph6Error("trailing bytes after bit vector", base + 1 + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need:
        pad = 6 * need - nbits
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", base + len(s) - 1)
    return SimpleGraph.from_edges(n, edges)


def parse_graph6_lines(text: str) -> list[SimpleGraph]:
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# -- subgraph relation --------------------------------------------------------

def contains(host: SimpleGraph, pattern: SimpleGraph) -> list[int] | None:
    """Map of pattern vertex -> host vertex for some copy of ``pattern``, else None."""
    if pattern.order > host.order:
        return None
    plan = _match.make_plan(pattern.order, pattern.edges, break_symmetry=False)
    mask = (1 << host.order) - 1
    images = _match.embed(plan, host.adj, mask, twins=_match.twin_classes(host.adj, mask))
    if images is None:
        return None
    mapping = [-1] * pattern.order
    used = set(images)
    for v, x in zip(plan.order, images):
        mapping[v] = x
    free = (x for x in range(host.order) if x not in used)
    for v in range(pattern.order):
        if mapping[v] < 0:
            mapping[v] = next(free)
    return mapping


def is_subgraph(small: SimpleGraph, big: SimpleGraph) -> bool:
    return contains(big, small) is not None


def isomorphic(a: SimpleGraph, b: SimpleGraph) -> bool:
    if a.order != b.order or a.size != b.size:
        return False
    if sorted(a.degree(v) for v in range(a.order)) != sorted(b.degree(v) for v in range(b.order)):
        return False
    return contains(b, a) is not None


# -- colouring --------------------------------------------------------------

def _colorable(adj: list[int], vertices: int, k: int) -> list[int] | None:
    """DSATUR-ordered backtracking; returns colour per vertex (-1 outside ``vertices``)."""
    n = len(adj)
    vs = [v for v in range(n) if vertices >> v & 1]
    color = [-1] * n
    if not vs:
        return color
    if k <= 0:
        return None

    def pick():
        best, key = -1, None
        for v in vs:
            if color[v] >= 0:
                continue
            sat = 0
            m = adj[v] & vertices
            while m:
                low = m & -m
                c = color[low.bit_length() - 1]
                if c >= 0:
                    sat |= 1 << c
                m ^= low
            kk = (sat.bit_count(), (adj[v] & vertices).bit_count())
            if key is None or kk > key:
                best, key = v, kk
                bsat = sat
        return best, bsat

    def rec(done: int, used: int) -> bool:
        if done == len(vs):
            return True
        v, sat = pick()
        for c in range(min(used + 1, k)):
            if sat >> c & 1:
                continue
            color[v] = c
            if rec(done + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return color if rec(0, 0) else None


def clique_number(g: SimpleGraph) -> int:
    adj = g.adj
    best = 0

    def expand(size: int, cand: int):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & adj[v])

    expand(0, (1 << g.order) - 1)
    return best


def chromatic_number(g: SimpleGraph) -> int:
    if g.order == 0:
        return 0
    if not g.edges:
        return 1
    lo = clique_number(g)
    full = (1 << g.order) - 1
    k = lo
    while _colorable(g.adj, full, k) is None:
        k += 1
    return k


def proper_coloring(g: SimpleGraph, k: int) -> list[int] | None:
    return _colorable(g.adj, (1 << g.order) - 1, k)


def _independent_sets(g: SimpleGraph, size: int):
    adj = g.adj
    n = g.order

    def rec(start: int, chosen: int, blocked: int, left: int):
        if left == 0:
            yield chosen
            return
        for v in range(start, n - left + 1):
            if blocked >> v & 1:
                continue
            yield from rec(v + 1, chosen | (1 << v), blocked | adj[v], left - 1)

    yield from rec(0, 0, 0, size)


def _surplus(g: SimpleGraph, chi: int) -> int:
    if chi == 0:
        return 0
    if chi == 1:
        return g.order
    full = (1 << g.order) - 1
    for s in range(1, g.order + 1):
        for S in _independent_sets(g, s):
            if _colorable(g.adj, full & ~S, chi - 1) is not None:
                return s
    raise AssertionError("unreachable: a colour class of an optimal colouring exists")


def chromatic_surplus(g: SimpleGraph) -> int:
    return _surplus(g, chromatic_number(g))


def class_size_profiles(g: SimpleGraph, p: int) -> dict[tuple[int, ...], list[int]]:
    """All multisets of class sizes over proper p-colourings using every colour.

    Keys are sizes sorted descending; values are one witness colouring.
    """
    n = g.order
    adj = g.adj
    color = [-1] * n
    sizes = [0] * p
    out: dict[tuple[int, ...], list[int]] = {}

    def rec(v: int, used: int):
        if n - v < p - used:
            return
        if v == n:
            key = tuple(sorted(sizes, reverse=True))
            if key not in out:
                out[key] = list(color)
            return
        forbidden = 0
        m = adj[v] & ((1 << v) - 1)
        while m:
            low = m & -m
            forbidden |= 1 << color[low.bit_length() - 1]
            m ^= low
        for c in range(min(used + 1, p)):
            if forbidden >> c & 1:
                continue
            color[v] = c
            sizes[c] += 1
            rec(v + 1, max(used, c + 1))
            sizes[c] -= 1
        color[v] = -1

    rec(0, 0)
    return out


# -- invariants ------------------------------------------------------------------

@dataclass(frozen=True)
class GraphInvariants:
    components: int
    component_orders: tuple[int, ...]
    chromatic_number: int
    chromatic_surplus: int
    sigma3: int
    clique_number: int
    is_connected: bool
    is_bipartite: bool
    has_isolated: bool

    def to_dict(self) -> dict:
        return {
            "components": self.components,
            "component_orders": list(self.component_orders),
            "chromatic_number": self.chromatic_number,
            "chromatic_surplus": self.chromatic_surplus,
            "sigma3": self.sigma3,
            "clique_number": self.clique_number,
            "is_connected": self.is_connected,
            "is_bipartite": self.is_bipartite,
            "has_isolated": self.has_isolated,
        }


def _check_limit(g: SimpleGraph, limit: int, what: str):
    if g.order > limit:
        raise GraphLimitError(f"{what} is exact only up to order {limit}; got {g.order}")


def invariants(g: SimpleGraph) -> GraphInvariants:
    _check_limit(g, EXACT_LIMIT, "invariants")
    comps = _match._components(g.order, g.adj) if g.order else []
    chi = chromatic_number(g)
    sigma = _surplus(g, chi)
    return GraphInvariants(
        components=len(comps),
        component_orders=tuple(sorted((len(c) for c in comps), reverse=True)),
        chromatic_number=chi,
        chromatic_surplus=sigma,
        sigma3=sigma if chi == 3 else 0,
        clique_number=clique_number(g),
        is_connected=len(comps) <= 1,
        is_bipartite=chi <= 2,
        has_isolated=any(a == 0 for a in g.adj),
    )


def sigma3(g: SimpleGraph) -> int:
    chi = chromatic_number(g)
    return _surplus(g, chi) if chi == 3 else 0


@dataclass(frozen=True)
class PartiteProfile:
    s: int
    t: int
    s_star: int
    t_star: int

    def to_dict(self) -> dict:
        return {"s": self.s, "t": self.t, "s_star": self.s_star, "t_star": self.t_star}


def bipartition(g: SimpleGraph) -> list[int] | None:
    side = [-1] * g.order
    for r in range(g.order):
        if side[r] >= 0:
            continue
        side[r] = 0
        stack = [r]
        while stack:
            x = stack.pop()
            for y in range(g.order):
                if g.adj[x] >> y & 1:
                    if side[y] < 0:
                        side[y] = 1 - side[x]
                        stack.append(y)
                    elif side[y] == side[x]:
                        return None
    return side


def partite_profile(g: SimpleGraph) -> PartiteProfile:
    """Extreme side sizes over every bipartition of a bipartite graph.

    Each component contributes its two sides in either orientation, so the
    reachable sizes of one side form a subset-sum set.
    """
    side = bipartition(g)
    if side is None:
        raise ValueError("partite profile requires a bipartite graph")
    reach = {0}
    for comp in _match._components(g.order, g.adj):
        a = sum(1 for v in comp if side[v] == 0)
        b = len(comp) - a
        reach = {r + a for r in reach} | {r + b for r in reach}
    n = g.order
    small = [min(x, n - x) for x in reach]
    large = [max(x, n - x) for x in reach]
    return PartiteProfile(s=min(small), t=max(large), s_star=max(small), t_star=min(large))


def is_color_critical(g: SimpleGraph, r: int) -> tuple[bool, tuple[int, int] | None]:
    _check_limit(g, EXACT_LIMIT, "colour-criticality")
    if chromatic_number(g) != r:
        return False, None
    for e in g.sorted_edges:
        if chromatic_number(g.remove_edge(e)) == r - 1:
            return True, e
    return False, None


def strip_isolated(g: SimpleGraph) -> tuple[SimpleGraph, int]:
    keep = [v for v in range(g.order) if g.adj[v]]
    h = g.induced(keep)
    return SimpleGraph(h.order, h.edges, g.label if len(keep) == g.order else None), g.order - len(keep)


# -- decomposition families -------------------------------------------------------

@dataclass(frozen=True)
class DecompositionFamily:
    base: SimpleGraph
    index: int
    members: tuple[SimpleGraph, ...]

    def to_dict(self) -> dict:
        return {
            "base": to_graph6(self.base),
            "index": self.index,
            "members": [to_graph6(m) for m in self.members],
        }


def _dedupe(graphs: list[SimpleGraph]) -> list[SimpleGraph]:
    out: list[SimpleGraph] = []
    for g in graphs:
        if not any(isomorphic(g, h) for h in out):
            out.append(g)
    return out


def decomposition_family(h: SimpleGraph, index: int = 2) -> DecompositionFamily:
    """Minimal cores whose placement inside one part forces ``h``.

    A core comes from a vertex set W such that ``h - W`` splits into
    ``chi - index`` independent sets; the core is ``h[W]`` without its
    isolated vertices. Members are the subgraph-minimal cores.
    """
    _check_limit(h, FAMILY_LIMIT, "decomposition family")
    p = chromatic_number(h)
    if p < 3:
        raise ValueError("decomposition family needs chromatic number at least 3")
    if not 2 <= index <= p - 1:
        raise ValueError(f"index must lie in 2..{p - 1}")
    full = (1 << h.order) - 1
    cores: list[SimpleGraph] = []
    for W in range(1, full + 1):
        if _colorable(h.adj, full & ~W, p - index) is None:
            continue
        core, _ = strip_isolated(h.induced([v for v in range(h.order) if W >> v & 1]))
        cores.append(core)
    cores = _dedupe(sorted(cores, key=lambda c: (c.size, c.order)))
    members = [m for m in cores
               if not any(o.size < m.size and is_subgraph(o, m) for o in cores)]
    return DecompositionFamily(h, index, tuple(members))


def is_homological(graphs: list[SimpleGraph]) -> tuple[int, ...] | None:
    """Common class-size vector for the graphs, or None.

    Raises when orders differ since the notion is only defined for graphs of
    equal order.
    """
    if not graphs:
        raise ValueError("need at least one graph")
    orders = {g.order for g in graphs}
    if len(orders) != 1:
        raise ValueError(f"graphs must share one order; got {sorted(orders)}")
    for g in graphs:
        _check_limit(g, HOMOLOGICAL_LIMIT, "homological check")
        if not g.edges:
            raise ValueError("graphs must be nonempty")
    p = max(chromatic_number(g) for g in graphs)
    common = None
    for g in graphs:
        keys = set(class_size_profiles(g, p))
        common = keys if common is None else common & keys
        if not common:
            return None
    return max(common)


def transversal_number(g: SimpleGraph, r: int) -> int:
    """Fewest vertices (independent or not) whose removal leaves ``g`` r-colourable."""
    full = (1 << g.order) - 1
    for size in range(g.order + 1):
        for X in itertools.combinations(range(g.order), size):
            m = 0
            for v in X:
                m |= 1 << v
            if _colorable(g.adj, full & ~m, r) is not None:
                return size
    return g.order
