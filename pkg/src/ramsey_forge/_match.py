"""Bitmask backtracking for (not necessarily induced) subgraph embedding.

Host graphs are given as a list of neighbourhood bitmasks. Patterns are
compiled once into a :class:`Plan` that fixes the search order; the same plan
is reused against many hosts (the search engine calls this on every node).
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Plan:
    order: tuple[int, ...]          # pattern vertices in search order
    back: tuple[tuple[int, ...], ...]  # earlier positions adjacent to each position
    degree: tuple[int, ...]
    root_link: tuple[int, ...]      # previous identical-component root position or -1
    pattern_order: int
    n_isolated: int


def _components(n: int, adj: list[int]) -> list[list[int]]:
    seen = 0
    comps = []
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = []
        stack = [v]
        seen |= 1 << v
        while stack:
            x = stack.pop()
            comp.append(x)
            m = adj[x] & ~seen
            seen |= m
            while m:
                low = m & -m
                stack.append(low.bit_length() - 1)
                m ^= low
        comps.append(sorted(comp))
    return comps


def _component_key(comp: list[int], adj: list[int]) -> tuple:
    # cheap invariant; equal keys are confirmed by an isomorphism test
    cm = 0
    for v in comp:
        cm |= 1 << v
    degs = sorted(((adj[v] & cm).bit_count() for v in comp), reverse=True)
    return (len(comp), sum(degs) // 2, tuple(degs))


def _greedy_order(comp: list[int], adj: list[int], start: list[int]) -> list[int]:
    order = list(start)
    placed = 0
    for v in order:
        placed |= 1 << v
    rest = [v for v in comp if not placed >> v & 1]
    while rest:
        best = max(rest, key=lambda v: ((adj[v] & placed).bit_count(), adj[v].bit_count(), -v))
        order.append(best)
        placed |= 1 << best
        rest.remove(best)
    return order


def _sub_adj(comp: list[int], adj: list[int]) -> list[int]:
    idx = {v: i for i, v in enumerate(comp)}
    out = []
    for v in comp:
        m = 0
        for w in comp:
            if adj[v] >> w & 1:
                m |= 1 << idx[w]
        out.append(m)
    return out


def _same_shape(c1: list[int], c2: list[int], adj: list[int]) -> bool:
    if _component_key(c1, adj) != _component_key(c2, adj):
        return False
    a1 = _sub_adj(c1, adj)
    a2 = _sub_adj(c2, adj)
    plan = _plan_from(len(c1), a1, None, False)
    return embed(plan, a2, (1 << len(c2)) - 1) is not None


def _plan_from(n: int, adj: list[int], anchor: tuple[int, int] | None,
               break_symmetry: bool) -> Plan:
    comps = [c for c in _components(n, adj) if len(c) > 1]
    n_isolated = n - sum(len(c) for c in comps)
    first: list[int] | None = None
    if anchor is not None:
        a, b = anchor
        first = next(c for c in comps if a in c)
        comps.remove(first)
    comps.sort(key=lambda c: (-sum(adj[v].bit_count() for v in c), -len(c), c[0]))
    if first is not None:
        comps.insert(0, first)

    order: list[int] = []
    roots: list[int] = []
    for i, comp in enumerate(comps):
        if i == 0 and anchor is not None:
            seq = _greedy_order(comp, adj, [anchor[0], anchor[1]])
        else:
            root = max(comp, key=lambda v: (adj[v].bit_count(), -v))
            seq = _greedy_order(comp, adj, [root])
        roots.append(len(order))
        order.extend(seq)

    link = [-1] * len(order)
    if break_symmetry:
        start = 1 if anchor is not None else 0
        for i in range(start + 1, len(comps)):
            for j in range(i - 1, start - 1, -1):
                if _same_shape(comps[j], comps[i], adj):
                    link[roots[i]] = roots[j]
                    break

    pos = {v: i for i, v in enumerate(order)}
    back = tuple(
        tuple(sorted(pos[w] for w in range(n) if adj[v] >> w & 1 and pos.get(w, 1 << 30) < i))
        for i, v in enumerate(order)
    )
    return Plan(
        order=tuple(order),
        back=back,
        degree=tuple(adj[v].bit_count() for v in order),
        root_link=tuple(link),
        pattern_order=n,
        n_isolated=n_isolated,
    )


def make_plan(n: int, edges, anchor: tuple[int, int] | None = None,
              break_symmetry: bool = True) -> Plan:
    """Compile a pattern on vertices ``0..n-1``.

    With ``anchor=(a, b)`` the plan begins with the pattern edge ``ab`` so a
    caller can pin it onto a specific host edge. ``break_symmetry`` orders the
    root images of identical components; it must be off when twin reduction
    is used.
    """
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return _plan_from(n, adj, anchor, break_symmetry)


def twin_classes(adj: list[int], mask: int) -> tuple[list[int], list[int]]:
    """Partition the vertices of ``mask`` into false-twin / true-twin classes.

    Returns ``(cls, class_masks)`` where ``cls[v]`` indexes ``class_masks``.
    Swapping two twins is an automorphism fixing everything else, so a search
    only needs the smallest unused vertex of each class.
    """
    n = len(adj)
    cls = [-1] * n
    class_masks: list[int] = []
    open_groups: dict[int, int] = {}
    closed_groups: dict[int, int] = {}
    for v in range(n):
        if not mask >> v & 1:
            continue
        nb = adj[v] & mask
        open_groups[nb] = open_groups.get(nb, 0) | (1 << v)
        closed = nb | (1 << v)
        closed_groups[closed] = closed_groups.get(closed, 0) | (1 << v)
    for group in list(open_groups.values()) + list(closed_groups.values()):
        if group.bit_count() < 2:
            continue
        idx = len(class_masks)
        class_masks.append(group)
        m = group
        while m:
            low = m & -m
            cls[low.bit_length() - 1] = idx
            m ^= low
    for v in range(n):
        if mask >> v & 1 and cls[v] < 0:
            cls[v] = len(class_masks)
            class_masks.append(1 << v)
    return cls, class_masks


def embed(plan: Plan, adj: list[int], host_mask: int, pin: tuple[int, ...] = (),
          twins: tuple[list[int], list[int]] | None = None) -> list[int] | None:
    """Return host images of ``plan.order`` or ``None`` when no embedding exists.

    ``pin`` fixes the images of the first positions. Isolated pattern
    vertices are not placed here; callers check the vertex budget.
    """
    if plan.pattern_order > host_mask.bit_count():
        return None
    P = len(plan.order)
    if P == 0:
        return []
    degree = plan.degree
    need = set(degree)
    degge: dict[int, int] = {}
    if max(need) > 1:
        hd = []
        m = host_mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            hd.append((v, (adj[v] & host_mask).bit_count()))
            m ^= low
        for d in need:
            dm = 0
            for v, dv in hd:
                if dv >= d:
                    dm |= 1 << v
            degge[d] = dm
    else:
        for d in need:
            degge[d] = host_mask

    back = plan.back
    link = plan.root_link
    npin = len(pin)
    if twins is not None:
        cls, cmasks = twins
    images = [0] * P
    cand = [0] * P
    used = 0

    def candidates(p: int) -> int:
        m = degge[degree[p]] & ~used
        if p < npin:
            bit = 1 << pin[p]
            if not m & bit:
                return 0
            for q in back[p]:
                if not adj[images[q]] & bit:
                    return 0
            return bit
        b = back[p]
        if b:
            for q in b:
                m &= adj[images[q]]
        elif link[p] >= 0:
            m &= ~((2 << images[link[p]]) - 1)
        return m

    p = 0
    cand[0] = candidates(0)
    while True:
        m = cand[p]
        if not m:
            p -= 1
            if p < 0:
                return None
            used ^= 1 << images[p]
            continue
        low = m & -m
        cand[p] = m ^ low
        if twins is not None and p >= npin:
            free = cmasks[cls[low.bit_length() - 1]] & ~used
            if free & -free != low:
                continue
        images[p] = low.bit_length() - 1
        used |= low
        if p + 1 == P:
            return images
        p += 1
        cand[p] = candidates(p)
