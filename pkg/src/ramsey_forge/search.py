"""Exhaustive search for good colourings and the desk-scale Ramsey numbers built on it.

A colouring is *good* when it avoids every forbidden monochromatic pattern and,
if requested, every rainbow path on ``t`` vertices. Colourings are enumerated
edge by edge in canonical order. Unlabelled searches use restricted growth
strings (a new colour may only be the next unused index), so each colour
renaming class is visited once. Labelled searches, used for asymmetric
numbers where colour roles differ, try every colour on every edge.
"""
from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import _match
from .colored import (BIPARTITE, COMPLETE, ColoredHost, build_host, edge_list,
                      find_mono_copy, find_rainbow_path)
from .graphs import SimpleGraph, bipartition, complete, strip_isolated

UNBOUNDED = None
EDGE_LIMIT_UNBOUNDED = 36
EDGE_LIMIT_SMALL_K = 45

WITNESS = "WITNESS"
EXHAUSTED = "EXHAUSTED"
TIMEOUT = "TIMEOUT"


class SearchLimitError(ValueError):
    pass


class _Timeout(Exception):
    pass


class _Abandon(Exception):
    pass


@dataclass(frozen=True)
class SearchProblem:
    """One decision instance.

    ``forbid_mono`` applies to every colour. ``labeled`` instead gives one
    tuple of forbidden patterns per colour; the budget is then its length and
    no colour symmetry is assumed.
    """
    shape: str
    n: int
    budget: int | None = UNBOUNDED
    forbid_mono: SimpleGraph | None = None
    forbid_rainbow: int | None = None
    labeled: tuple | None = None

    def __post_init__(self):
        if self.labeled is not None:
            object.__setattr__(self, "labeled", tuple(tuple(ps) for ps in self.labeled))
            object.__setattr__(self, "budget", len(self.labeled))
        if self.forbid_mono is not None and not self.forbid_mono.edges:
            raise ValueError("forbidden monochromatic pattern must be nonempty")
        if self.forbid_rainbow is not None and self.forbid_rainbow < 3:
            raise ValueError("rainbow path order must be at least 3")
        if self.budget is not None and self.budget < 1:
            raise ValueError("colour budget must be positive")

    @property
    def edge_count(self) -> int:
        return self.n * (self.n - 1) // 2 if self.shape == COMPLETE else self.n * self.n

    @property
    def order(self) -> int:
        return self.n if self.shape == COMPLETE else 2 * self.n

    def patterns_for(self, c: int) -> tuple:
        if self.labeled is not None:
            return self.labeled[c - 1] if c <= len(self.labeled) else ()
        return (self.forbid_mono,) if self.forbid_mono is not None else ()

    def to_json(self) -> dict:
        from .graphs import to_graph6
        out = {"shape": self.shape, "n": self.n,
               "budget": "unbounded" if self.budget is None else self.budget}
        if self.forbid_mono is not None:
            out["forbid_mono"] = to_graph6(self.forbid_mono)
        if self.labeled is not None:
            out["forbid_mono_by_color"] = [[to_graph6(p) for p in ps] for ps in self.labeled]
        if self.forbid_rainbow is not None:
            out["forbid_rainbow"] = self.forbid_rainbow
        return out


@dataclass
class SearchOutcome:
    status: str
    witness: ColoredHost | None
    nodes_explored: int
    wall_time: float
    problem: SearchProblem | None = None

    def to_json(self, meta: bool = True) -> dict:
        out = {"problem": self.problem.to_json() if self.problem else None,
               "status": self.status,
               "witness": self.witness.to_json() if self.witness else None,
               "nodes_explored": self.nodes_explored}
        if meta:
            out["wall_time"] = round(self.wall_time, 6)
        return out


# -- pattern checks through one edge -----------------------------------------

def _automorphisms(g: SimpleGraph, cap: int = 50000) -> list[tuple[int, ...]] | None:
    """All automorphisms, or None when there are more than ``cap``."""
    n = g.order
    adj = g.adj
    deg = [adj[v].bit_count() for v in range(n)]
    out: list[tuple[int, ...]] = []
    img = [-1] * n

    def rec(v: int, used: int) -> bool:
        if v == n:
            out.append(tuple(img))
            return len(out) <= cap
        for w in range(n):
            if used >> w & 1 or deg[w] != deg[v]:
                continue
            ok = True
            for u in range(v):
                if (adj[v] >> u & 1) != (adj[w] >> img[u] & 1):
                    ok = False
                    break
            if ok:
                img[v] = w
                if not rec(v + 1, used | (1 << w)):
                    return False
        img[v] = -1
        return True

    return out if rec(0, 0) else None


class AnchoredPattern:
    """A pattern compiled for "is there a copy using this particular edge" queries."""

    def __init__(self, pattern: SimpleGraph):
        self.pattern = pattern
        self.size = pattern.size
        arcs = [(a, b) for a, b in pattern.sorted_edges] + [(b, a) for a, b in pattern.sorted_edges]
        auts = _automorphisms(pattern)
        reps = []
        if auts is None:
            reps = arcs
        else:
            seen = set()
            for a, b in arcs:
                if (a, b) in seen:
                    continue
                reps.append((a, b))
                for p in auts:
                    seen.add((p[a], p[b]))
        self.plans = [_match.make_plan(pattern.order, pattern.edges, anchor=arc) for arc in reps]

    def through(self, adj: list[int], full: int, u: int, v: int) -> bool:
        for plan in self.plans:
            if _match.embed(plan, adj, full, pin=(u, v)) is not None:
                return True
        return False


class _Searcher:
    def __init__(self, problem: SearchProblem, deadline: float | None = None,
                 stop=None, index: int = 0):
        self.p = problem
        if problem.shape == COMPLETE:
            self.edges = edge_list(COMPLETE, problem.n)
        else:
            self.edges = edge_list(BIPARTITE, problem.n, problem.n)
        self.N = problem.order
        self.E = len(self.edges)
        self.k = problem.budget if problem.budget is not None else max(self.E, 1)
        self.labeled = problem.labeled is not None
        self.full = (1 << self.N) - 1
        compiled: dict[int, AnchoredPattern] = {}
        self.checks: list[list[AnchoredPattern]] = [[]]
        for c in range(1, self.k + 1):
            pats = problem.patterns_for(c)
            lst = []
            for pat in pats:
                key = id(pat)
                if key not in compiled:
                    compiled[key] = AnchoredPattern(pat)
                lst.append(compiled[key])
            self.checks.append(lst)
        self.t = problem.forbid_rainbow
        self.cadj = [[0] * self.N for _ in range(self.k + 1)]
        self.ccount = [0] * (self.k + 1)
        self.col = [[0] * self.N for _ in range(self.N)]
        self.nbr = [0] * self.N
        self.assigned: list[int] = []
        self.nodes = 0
        self.deadline = deadline
        self.stop = stop
        self.index = index

    # state updates
    def _assign(self, i: int, c: int):
        u, v = self.edges[i]
        self.cadj[c][u] |= 1 << v
        self.cadj[c][v] |= 1 << u
        self.ccount[c] += 1
        self.col[u][v] = self.col[v][u] = c
        self.nbr[u] |= 1 << v
        self.nbr[v] |= 1 << u
        self.assigned.append(c)

    def _unassign(self, i: int, c: int):
        u, v = self.edges[i]
        self.cadj[c][u] ^= 1 << v
        self.cadj[c][v] ^= 1 << u
        self.ccount[c] -= 1
        self.col[u][v] = self.col[v][u] = 0
        self.nbr[u] ^= 1 << v
        self.nbr[v] ^= 1 << u
        self.assigned.pop()

    def _ok(self, u: int, v: int, c: int) -> bool:
        adj = self.cadj[c]
        for ap in self.checks[c]:
            if self.ccount[c] >= ap.size and ap.through(adj, self.full, u, v):
                return False
        if self.t is not None and self._rainbow_through(u, v, c):
            return False
        return True

    def _rainbow_through(self, u: int, v: int, c: int) -> bool:
        need = self.t - 2          # edges to add besides uv
        nbr = self.nbr
        col = self.col

        def grow(x: int, left: int, other: int, right: int, used: int, colors: int) -> bool:
            if left == 0:
                if right == 0:
                    return True
                return grow(other, right, -1, 0, used, colors)
            m = nbr[x] & ~used
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                cc = col[x][w]
                if colors >> cc & 1:
                    continue
                if grow(w, left - 1, other, right, used | low, colors | (1 << cc)):
                    return True
            return False

        base = (1 << u) | (1 << v)
        for left in range(need + 1):
            if grow(u, left, v, need - left, base, 1 << c):
                return True
        return False

    def _tick(self):
        if self.nodes & 0xFFF == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise _Timeout
            if self.stop is not None and self.stop.value < self.index:
                raise _Abandon

    def _choices(self, used: int) -> int:
        return self.k if self.labeled else min(used + 1, self.k)

    def replay(self, prefix) -> int:
        used = 0
        for i, c in enumerate(prefix):
            self._assign(i, c)
            used = max(used, c)
        return used

    def dfs(self, i: int, used: int) -> bool:
        if i == self.E:
            return True
        u, v = self.edges[i]
        for c in range(1, self._choices(used) + 1):
            self.nodes += 1
            self._tick()
            self._assign(i, c)
            if self._ok(u, v, c) and self.dfs(i + 1, max(used, c)):
                return True
            self._unassign(i, c)
        return False

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        out: list[tuple[int, ...]] = []

        def rec(i: int, used: int):
            if i == depth:
                out.append(tuple(self.assigned))
                return
            u, v = self.edges[i]
            for c in range(1, self._choices(used) + 1):
                self.nodes += 1
                self._assign(i, c)
                if self._ok(u, v, c):
                    rec(i + 1, max(used, c))
                self._unassign(i, c)

        rec(0, 0)
        return out


def _limit(problem: SearchProblem, edge_limit: int | None) -> int:
    if edge_limit is not None:
        return edge_limit
    if problem.budget is not None and problem.budget <= 3:
        return EDGE_LIMIT_SMALL_K
    return EDGE_LIMIT_UNBOUNDED


def _host_of(problem: SearchProblem, colors) -> ColoredHost:
    if problem.shape == COMPLETE:
        return build_host(COMPLETE, colors, problem.n)
    return build_host(BIPARTITE, colors, problem.n, problem.n)


def is_good(host: ColoredHost, problem: SearchProblem, raw_colors=None) -> bool:
    """Independent re-check of a finished colouring with the full detectors.

    For labelled problems the raw colour labels matter, so they are passed in.
    """
    if problem.labeled is not None:
        colors = list(raw_colors if raw_colors is not None else host.colors)
        for c, pats in enumerate(problem.labeled, start=1):
            if c not in colors:
                continue
            mapped = host.relabel[c]
            for pat in pats:
                if find_mono_copy(host, pat, color=mapped) is not None:
                    return False
    elif problem.forbid_mono is not None and find_mono_copy(host, problem.forbid_mono) is not None:
        return False
    if problem.forbid_rainbow is not None and find_rainbow_path(host, problem.forbid_rainbow):
        return False
    return True


_worker_stop = None


def _init_worker(stop):
    global _worker_stop
    _worker_stop = stop


def _run_prefix(args):
    problem, prefix, index, deadline = args
    s = _Searcher(problem, deadline, _worker_stop, index)
    used = s.replay(prefix)
    try:
        found = s.dfs(len(prefix), used)
    except _Timeout:
        return index, TIMEOUT, None, s.nodes
    except _Abandon:
        return index, "ABANDONED", None, s.nodes
    if found:
        with _worker_stop.get_lock():
            if _worker_stop.value > index:
                _worker_stop.value = index
        return index, WITNESS, list(s.assigned), s.nodes
    return index, EXHAUSTED, None, s.nodes


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("RAMSEY_FORGE_JOBS", "1")))
    except ValueError:
        return 1


def exists_good_coloring(problem: SearchProblem, jobs: int | None = None,
                         time_limit: float | None = None,
                         edge_limit: int | None = None) -> SearchOutcome:
    """Decide whether a good colouring exists. EXHAUSTED is a proof that none does."""
    limit = _limit(problem, edge_limit)
    if problem.edge_count > limit:
        raise SearchLimitError(
            f"{problem.edge_count} edges exceeds the search limit of {limit} for this budget")
    jobs = default_jobs() if jobs is None else max(1, jobs)
    start = time.monotonic()
    deadline = start + time_limit if time_limit is not None else None
    if jobs == 1 or problem.edge_count < 4:
        s = _Searcher(problem, deadline)
        try:
            found = s.dfs(0, 0)
        except _Timeout:
            return SearchOutcome(TIMEOUT, None, s.nodes, time.monotonic() - start, problem)
        colors = list(s.assigned) if found else None
        nodes = s.nodes
    else:
        colors, nodes, status = _parallel(problem, jobs, deadline)
        if status == TIMEOUT:
            return SearchOutcome(TIMEOUT, None, nodes, time.monotonic() - start, problem)
    elapsed = time.monotonic() - start
    if colors is None:
        return SearchOutcome(EXHAUSTED, None, nodes, elapsed, problem)
    host = _host_of(problem, colors)
    if not is_good(host, problem, colors):
        raise AssertionError("search produced a colouring that fails re-verification")
    return SearchOutcome(WITNESS, host, nodes, elapsed, problem)


def _parallel(problem: SearchProblem, jobs: int, deadline: float | None):
    import multiprocessing

    root = _Searcher(problem, deadline)
    depth = 1
    prefixes = root.prefixes(depth)
    while len(prefixes) < 4 * jobs and depth < min(root.E, 12):
        depth += 1
        prefixes = root.prefixes(depth)
    nodes = root.nodes
    if not prefixes:
        return None, nodes, EXHAUSTED
    stop = multiprocessing.Value("i", len(prefixes))
    results = {}
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(stop,)) as ex:
        for idx, status, colors, cnt in ex.map(
                _run_prefix, [(problem, p, i, deadline) for i, p in enumerate(prefixes)]):
            results[idx] = (status, colors)
            nodes += cnt
    # canonical-order reduction: the first prefix that did not exhaust decides
    for idx in range(len(prefixes)):
        status, colors = results[idx]
        if status == WITNESS:
            return colors, nodes, WITNESS
        if status == TIMEOUT:
            return None, nodes, TIMEOUT
        if status == "ABANDONED":
            raise AssertionError("a prefix before the first witness was abandoned")
    return None, nodes, EXHAUSTED


def iter_colorings(shape: str, n: int, budget: int | None = UNBOUNDED, labeled: bool = False,
                   forbid_rainbow: int | None = None):
    """Yield canonical colour sequences, optionally pruned by a rainbow path.

    Without pruning this visits one colouring per renaming class (restricted
    growth strings, truncated at ``budget`` colours).
    """
    if labeled:
        problem = SearchProblem(shape, n, labeled=((),) * budget, forbid_rainbow=forbid_rainbow)
    else:
        problem = SearchProblem(shape, n, budget, None, forbid_rainbow)
    s = _Searcher(problem)

    def rec(i: int, used: int):
        if i == s.E:
            yield tuple(s.assigned)
            return
        u, v = s.edges[i]
        for c in range(1, s._choices(used) + 1):
            s._assign(i, c)
            if s._ok(u, v, c):
                yield from rec(i + 1, max(used, c))
            s._unassign(i, c)

    yield from rec(0, 0)


def bell(n: int) -> int:
    return stirling_sum(n, n)


def stirling_sum(n: int, k: int) -> int:
    """Number of partitions of an n-set into at most k blocks."""
    row = [1] + [0] * k
    for i in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return sum(row) if n else 1


# -- numbers -----------------------------------------------------------------------

@dataclass
class RamseyResult:
    """Outcome of an ascending n-sweep.

    ``value`` is the exact number when some n <= n_max was exhausted; otherwise
    ``lower`` is a strict lower bound backed by ``witness``.
    """
    quantity: str
    value: int | None
    lower: int
    witness: ColoredHost | None
    sweep: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    status: str = "EXACT"

    def to_json(self, meta: bool = True) -> dict:
        out = {"quantity": self.quantity, "status": self.status,
               "value": self.value,
               "lower_bound": self.lower,
               "witness": self.witness.to_json() if self.witness else None,
               "sweep": [{"n": n, "status": o.status, "nodes_explored": o.nodes_explored,
                          **({"wall_time": round(o.wall_time, 6)} if meta else {})}
                         for n, o in self.sweep]}
        if self.value is None and self.status == "LOWER_BOUND":
            out["value"] = f"> {self.lower - 1}"
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _sweep(quantity: str, make, n_start: int, n_max: int, trivial_host, **kw) -> RamseyResult:
    """Ascend n from ``n_start`` until EXHAUSTED.

    ``trivial_host(n)`` gives a good colouring for n just below ``n_start``
    (used when the sweep never runs).
    """
    witness = trivial_host(n_start - 1) if n_start >= 2 else None
    sweep = []
    prev = None
    # a time limit bounds the whole sweep, not each n
    limit = kw.pop("time_limit", None)
    deadline = time.monotonic() + limit if limit is not None else None
    for n in range(max(n_start, 1), n_max + 1):
        if deadline is not None:
            kw["time_limit"] = max(0.0, deadline - time.monotonic())
        out = exists_good_coloring(make(n), **kw)
        sweep.append((n, out))
        if out.status == TIMEOUT:
            return RamseyResult(quantity, None, n, witness, sweep, status="TIMEOUT")
        if out.status == EXHAUSTED:
            return RamseyResult(quantity, n, n, witness, sweep)
        if prev == EXHAUSTED:
            raise AssertionError("monotonicity violated: EXHAUSTED at n-1 but WITNESS at n")
        prev = out.status
        witness = out.witness
    return RamseyResult(quantity, None, n_max + 1, witness, sweep, status="LOWER_BOUND")


def _mono_complete(n: int) -> ColoredHost | None:
    return build_host(COMPLETE, [1] * (n * (n - 1) // 2), n) if n >= 2 else None


def _mono_bipartite(n: int) -> ColoredHost | None:
    return build_host(BIPARTITE, [1] * (n * n), n, n) if n >= 1 else None


def ramsey_k(h: SimpleGraph, k: int, n_max: int, **kw) -> RamseyResult:
    if k < 1:
        raise ValueError("k must be at least 1")
    core, iso = strip_isolated(h)
    if not core.edges:
        raise ValueError("pattern must be nonempty")
    return _sweep(f"R_{k}", lambda n: SearchProblem(COMPLETE, n, k, h), h.order, n_max,
                  _mono_complete, **kw)


def constrained_ramsey(h: SimpleGraph, t: int, n_max: int, budget: int | None = UNBOUNDED,
                       check_eq1: bool = True, **kw) -> RamseyResult:
    """f(h, P_t) (or its budgeted version) plus the R_{t-2}(h) comparison."""
    if t not in (4, 5):
        raise ValueError("t must be 4 or 5")
    res = _sweep(f"f(H,P{t})", lambda n: SearchProblem(COMPLETE, n, budget, h, t),
                 h.order, n_max, _mono_complete, **kw)
    if check_eq1 and res.value is not None:
        try:
            base = ramsey_k(h, t - 2, n_max, **kw)
        except SearchLimitError:
            base = None
        if base is not None and base.value is not None:
            res.notes.append(f"R_{t - 2}(H) = {base.value}")
            if res.value < base.value:
                raise AssertionError(f"f(H,P{t}) = {res.value} < R_{t - 2}(H) = {base.value}")
            res.notes.append(f"lower bound f >= R_{t - 2} holds")
    return res


def two_color_ramsey(g1: SimpleGraph, g2: SimpleGraph, n_max: int, **kw) -> RamseyResult:
    """Asymmetric R(g1, g2): colour 1 must avoid g1, colour 2 must avoid g2."""
    for g in (g1, g2):
        if not g.edges:
            raise ValueError("both graphs must be nonempty")
    return labeled_ramsey(((g1,), (g2,)), n_max, quantity="R(G1,G2)", **kw)


def labeled_ramsey(families, n_max: int, quantity: str = "R(F1,F2)", **kw) -> RamseyResult:
    """Least n forcing, in some colour i, a member of ``families[i]`` in colour i."""
    families = tuple(tuple(f) for f in families)
    n0 = min(min(g.order for g in fam) for fam in families)

    def trivial(n):
        return _mono_complete(n)

    return _sweep(quantity, lambda n: SearchProblem(COMPLETE, n, labeled=families), n0, n_max,
                  trivial, **kw)


def labeled_witness(families, n: int, **kw) -> SearchOutcome:
    """A labelled colouring of K_n avoiding ``families[i]`` in colour i (for sub-hosts)."""
    return exists_good_coloring(SearchProblem(COMPLETE, n, labeled=tuple(tuple(f) for f in families)),
                                **kw)


def _require_bipartite(h: SimpleGraph):
    if bipartition(h) is None:
        raise ValueError("pattern must be bipartite")
    if not h.edges:
        raise ValueError("pattern must be nonempty")


def bipartite_ramsey_k(h: SimpleGraph, k: int, n_max: int, **kw) -> RamseyResult:
    _require_bipartite(h)
    from .graphs import partite_profile
    res = _sweep(f"BR_{k}", lambda n: SearchProblem(BIPARTITE, n, k, h), (h.order + 1) // 2,
                 n_max, _mono_bipartite, **kw)
    core, _ = strip_isolated(h)
    prof = partite_profile(core)
    res.notes.append(f"blow-up lower bound k(t(H)-1)+1 = {k * (prof.t - 1) + 1}")
    return res


def bipartite_constrained(h: SimpleGraph, t: int, budget: int | None, n_max: int,
                          **kw) -> RamseyResult:
    _require_bipartite(h)
    if t not in (4, 5):
        raise ValueError("t must be 4 or 5")
    name = f"h(H,P{t})" if budget is None else f"h_{budget}(H,P{t})"
    return _sweep(name, lambda n: SearchProblem(BIPARTITE, n, budget, h, t), (h.order + 1) // 2,
                  n_max, _mono_bipartite, **kw)
