"""Certificates describing how rainbow-path-free colourings must look."""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .colored import BIPARTITE, COMPLETE, ColoredHost, find_rainbow_path
from .graphs import (SimpleGraph, chromatic_number, class_size_profiles, complete_multipartite,
                     contains, disjoint_union)

EXACT_TRIPARTITE_LIMIT = 12


class StructureError(ValueError):
    pass


class StructureContradiction(UserWarning):
    """A host satisfies a lemma's hypotheses but none of its conclusions."""


@dataclass(frozen=True)
class P5Partition:
    """Parts V_2..V_k, each tied to its own colour, with ``color1`` between parts."""
    color1: int
    parts: tuple[tuple[int, ...], ...]
    part_colors: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.parts) + 1

    def to_json(self) -> dict:
        return {"color1": self.color1, "parts": [list(p) for p in self.parts],
                "part_colors": list(self.part_colors)}

    @classmethod
    def from_json(cls, data: dict) -> "P5Partition":
        parts = tuple(tuple(int(v) for v in p) for p in data["parts"])
        pcs = data.get("part_colors")
        if pcs is None:
            pcs = [i + 2 for i in range(len(parts))]
        return cls(int(data["color1"]), parts, tuple(int(c) for c in pcs))


def _check_cover(order: int, parts) -> None:
    seen = set()
    for p in parts:
        if not p:
            raise StructureError("parts must be nonempty")
        for v in p:
            if not 0 <= v < order:
                raise StructureError(f"vertex {v} is not in the host")
            if v in seen:
                raise StructureError(f"vertex {v} appears in two parts")
            seen.add(v)
    if len(seen) != order:
        missing = sorted(set(range(order)) - seen)
        raise StructureError(f"parts do not cover vertices {missing}")


def verify_p5_partition(host: ColoredHost, cert: P5Partition) -> dict:
    if host.shape != COMPLETE:
        raise StructureError("partition certificates apply to complete hosts")
    _check_cover(host.order, cert.parts)
    if len(cert.part_colors) != len(cert.parts):
        raise StructureError("one colour per part is required")
    owner = {}
    for i, p in enumerate(cert.parts):
        for v in p:
            owner[v] = i
    violations = []
    present = [False] * len(cert.parts)
    for (u, v), c in zip(host.edges, host.colors):
        pu, pv = owner[u], owner[v]
        if pu != pv:
            if c != cert.color1:
                violations.append({"edge": [u, v], "color": c,
                                   "reason": f"between parts {pu} and {pv} but not colour "
                                             f"{cert.color1}"})
        else:
            own = cert.part_colors[pu]
            if c == own:
                present[pu] = True
            elif c != cert.color1:
                violations.append({"edge": [u, v], "color": c,
                                   "reason": f"inside part {pu} with colour outside "
                                             f"{{{cert.color1},{own}}}"})
    for i, ok in enumerate(present):
        if not ok:
            violations.append({"edge": None, "color": cert.part_colors[i],
                               "reason": f"part {i} never uses its own colour "
                                         f"{cert.part_colors[i]}"})
    return {"verdict": "PASS" if not violations else "FAIL", "violations": violations}


def _spans(host: ColoredHost, skip: int) -> dict[int, int]:
    spans = {}
    for c in range(1, host.k + 1):
        if c == skip:
            continue
        m = 0
        for v, nb in enumerate(host.color_adj[c]):
            if nb:
                m |= 1 << v
        spans[c] = m
    return spans


def _attach_leftovers(parts: list[list[int]], leftovers: list[int]) -> None:
    if not leftovers:
        return
    target = max(range(len(parts)), key=lambda i: (len(parts[i]), -i))
    parts[target].extend(leftovers)
    parts[target].sort()


def recover_p5_partition(host: ColoredHost) -> tuple[P5Partition, dict] | None:
    """Smallest distinguished colour admitting a certificate, or None.

    With colour c fixed, every other colour must live on its own vertex span
    and those spans must be pairwise disjoint; this is also sufficient, since
    an edge of colour i can only join two vertices of the span of i.
    """
    if host.shape != COMPLETE:
        raise StructureError("partition recovery applies to complete hosts")
    if host.k < 2:
        return None
    for c in range(1, host.k + 1):
        spans = _spans(host, c)
        masks = list(spans.values())
        if any(a & b for a, b in itertools.combinations(masks, 2)):
            continue
        colors = sorted(spans)
        parts = [[v for v in range(host.order) if spans[i] >> v & 1] for i in colors]
        covered = 0
        for m in masks:
            covered |= m
        _attach_leftovers(parts, [v for v in range(host.order) if not covered >> v & 1])
        cert = P5Partition(c, tuple(tuple(p) for p in parts), tuple(colors))
        relabel = {c: 1}
        relabel.update({col: i + 2 for i, col in enumerate(colors)})
        if verify_p5_partition(host, cert)["verdict"] != "PASS":
            raise AssertionError("recovered partition failed verification")
        return cert, relabel
    return None


def check_extended_sizes(cert: P5Partition, h: SimpleGraph) -> dict:
    """The four size conditions attached to a certificate for a target H."""
    sizes = sorted((len(p) for p in cert.parts), reverse=True)
    comp_orders = [g.order for g in h.components()]
    rows = []
    rows.append({"condition": "parts sorted |V_2| >= |V_3| >= ...", "values": sizes,
                 "verdict": "PASS"})
    rows.append({"condition": "k >= 4 (at least three parts)", "values": [len(sizes) + 1],
                 "verdict": "PASS" if len(sizes) >= 3 else "FAIL"})
    v3 = sizes[1] if len(sizes) >= 2 else None
    v4 = sizes[2] if len(sizes) >= 3 else None
    mx, mn = max(comp_orders), min(comp_orders)
    rows.append({"condition": "|V_3| >= max component order", "values": [v3, mx],
                 "verdict": "PASS" if v3 is not None and v3 >= mx else "FAIL"})
    rows.append({"condition": "|V_4| >= min component order", "values": [v4, mn],
                 "verdict": "PASS" if v4 is not None and v4 >= mn else "FAIL"})
    tail = sum(sizes[1:])
    rows.append({"condition": "|V_3 u ... u V_k| >= |V(H)|", "values": [tail, h.order],
                 "verdict": "PASS" if len(sizes) >= 3 and tail >= h.order else "FAIL"})
    return {"verdict": "PASS" if all(r["verdict"] == "PASS" for r in rows) else "FAIL",
            "sorted_sizes": sizes, "conditions": rows}


# -- bipartite hosts ------------------------------------------------------------------

def _rows(host: ColoredHost, left_is_u: bool):
    mat = host.color_matrix
    m = host.m
    L, R = list(range(m)), list(range(m, host.order))
    U, V = (L, R) if left_is_u else (R, L)
    return U, V, {u: tuple(mat[u][v] for v in V) for u in U}


def _star_partition(host: ColoredHost):
    for left_is_u, side in ((True, "left"), (False, "right")):
        U, V, rows = _rows(host, left_is_u)
        if all(len(set(r)) == 1 for r in rows.values()):
            parts: dict[int, list[int]] = {}
            for u in U:
                parts.setdefault(rows[u][0], []).append(u)
            return {"lemma": "star-partition", "side": side,
                    "parts": {str(c): parts[c] for c in sorted(parts)}}
    return None


def _case_a(host: ColoredHost):
    for left_is_u, side in ((True, "left"), (False, "right")):
        U, V, rows = _rows(host, left_is_u)
        for c in range(1, host.k + 1):
            mono = tuple([c] * len(V))
            u1 = [u for u in U if rows[u] != mono]
            u2 = [u for u in U if rows[u] == mono]
            if not u1:
                u1, u2 = u2[:1], u2[1:]
            if len({rows[u] for u in u1}) != 1:
                continue
            row = rows[u1[0]]
            vparts: dict[int, list[int]] = {}
            for v, col in zip(V, row):
                vparts.setdefault(col, []).append(v)
            return {"case": "A", "U_side": side, "color1": c, "U1": u1, "U2": u2,
                    "V_parts": {str(col): vparts[col] for col in sorted(vparts)},
                    "V1": vparts.get(c, [])}
    return None


def _case_b(host: ColoredHost):
    if host.k < 2:
        return None
    left = (1 << host.m) - 1
    for c in range(1, host.k + 1):
        spans = _spans(host, c)
        us = {i: m & left for i, m in spans.items()}
        vs = {i: m & ~left for i, m in spans.items()}
        if any(a & b for a, b in itertools.combinations(us.values(), 2)):
            continue
        if any(a & b for a, b in itertools.combinations(vs.values(), 2)):
            continue
        colors = sorted(spans)
        U = [[v for v in range(host.m) if us[i] >> v & 1] for i in colors]
        V = [[v for v in range(host.m, host.order) if vs[i] >> v & 1] for i in colors]
        cu = cv = 0
        for i in colors:
            cu |= us[i]
            cv |= vs[i]
        _attach_leftovers(U, [v for v in range(host.m) if not cu >> v & 1])
        _attach_leftovers(V, [v for v in range(host.m, host.order) if not cv >> v & 1])
        return {"case": "B", "color1": c, "part_colors": colors, "U_parts": U, "V_parts": V}
    return None


def _case_c(host: ColoredHost):
    if host.m not in (3, 4) or host.k != 4:
        return None
    for c in range(1, host.k + 1):
        if any(nb.bit_count() > 1 for nb in host.color_adj[c]):
            return None
    return {"case": "C", "matchings": {str(c): [list(e) for e, col in zip(host.edges, host.colors)
                                                if col == c] for c in range(1, 5)}}


def classify_bipartite_structure(host: ColoredHost, t: int) -> dict:
    """Structure of a bipartite host without rainbow P_t, or a flagged absence."""
    if host.shape != BIPARTITE:
        raise StructureError("bipartite classification needs a bipartite host")
    if host.m != host.n:
        raise StructureError(f"sides must be equal, got {host.m} and {host.n}")
    if t not in (4, 5):
        raise StructureError("t must be 4 or 5")
    if t == 4:
        found = _star_partition(host)
        applies = host.k >= 3 and host.m >= 2
    else:
        found = _case_a(host) or _case_b(host) or _case_c(host)
        applies = host.k >= 4 and host.m >= 3
    rainbow = find_rainbow_path(host, t)
    out = {"t": t, "k": host.k, "n": host.m, "structure": found,
           "has_rainbow_path": rainbow is not None, "hypotheses_hold": applies,
           "contradiction": False}
    if found is None and rainbow is None and applies:
        out["contradiction"] = True
        warnings.warn(f"host with k={host.k}, n={host.m} has no rainbow P{t} and no "
                      "structure from the classification lemma", StructureContradiction)
    return out


# -- tripartite embeddings --------------------------------------------------------------

def _condition_route(x, y, z, s, t):
    s1, s2, s3 = s
    t1, t2, t3 = t
    if x >= s1 + t1 and y >= s2 + t2 and z >= s3 + t3:
        return "condition (ii)"
    if x >= max(s1 + t2, t1 + s2) and y >= min(s1 + t2, t1 + s2) and z >= s3 + t3:
        return "condition (i)"
    return None


def tripartite_contains_union(x: int, y: int, z: int, g1: SimpleGraph, g2: SimpleGraph) -> dict:
    for g in (g1, g2):
        if chromatic_number(g) != 3:
            raise StructureError("both graphs must have chromatic number 3")
    prof1 = sorted(class_size_profiles(g1, 3))
    prof2 = sorted(class_size_profiles(g2, 3))
    for a, b, c in sorted(set(itertools.permutations((x, y, z))), reverse=True):
        for s in prof1:
            for t in prof2:
                route = _condition_route(a, b, c, s, t)
                if route:
                    return {"contains": True, "route": route, "parts": [a, b, c],
                            "sizes_g1": list(s), "sizes_g2": list(t)}
    if x + y + z <= EXACT_TRIPARTITE_LIMIT:
        host = complete_multipartite([x, y, z])
        emb = contains(host, disjoint_union(g1, g2))
        return {"contains": emb is not None, "route": "exact search", "embedding": emb}
    return {"contains": None, "route": "undecided"}
