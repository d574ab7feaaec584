"""Explicit lower-bound colourings, each paired with the patterns it claims to avoid."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .colored import (BIPARTITE, COMPLETE, ColoredHost, build_host, edge_list, find_mono_copy,
                      find_rainbow_path, host_from_json)
from .graphs import (SimpleGraph, bipartition, chromatic_number, chromatic_surplus,
                     clique_number, complete, decomposition_family, disjoint_union,
                     parse_graph6, partite_profile, sigma3, strip_isolated, to_graph6,
                     transversal_number)
from .table import KnownValuesTable, MissingValue, clique_r2

KINDS = (
    "R3_I", "R3_II", "R3_III", "R3_IV", "MATCHING", "DECOMP", "BIPARTITE_BLOWUP", "EXACT_K",
    "BIPARTITE_STARPART", "NO_RAINBOW_P5_SHAPE", "BIPARTITE_NO_RAINBOW_P4_SHAPE",
    "BIPARTITE_NO_RAINBOW_P5_A", "BIPARTITE_NO_RAINBOW_P5_B",
)
SEARCH_SUBHOST_LIMIT = 8


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class Claim:
    """``no_mono``: no monochromatic ``pattern`` (in ``color`` or in any colour);
    ``no_rainbow_path``: no rainbow path on ``t`` vertices."""
    kind: str
    pattern: SimpleGraph | None = None
    color: int | None = None
    t: int | None = None

    def to_json(self) -> dict:
        if self.kind == "no_mono":
            return {"type": "no_mono", "pattern": to_graph6(self.pattern),
                    "color": self.color if self.color is not None else "any"}
        return {"type": "no_rainbow_path", "t": self.t}

    @classmethod
    def from_json(cls, data: dict) -> "Claim":
        if data["type"] == "no_mono":
            col = data.get("color", "any")
            return cls("no_mono", parse_graph6(data["pattern"]),
                       None if col == "any" else int(col))
        if data["type"] == "no_rainbow_path":
            return cls("no_rainbow_path", t=int(data["t"]))
        raise ValueError(f"unknown claim type {data['type']!r}")

    def describe(self) -> str:
        if self.kind == "no_mono":
            where = "any colour" if self.color is None else f"colour {self.color}"
            return f"no monochromatic {to_graph6(self.pattern)} in {where}"
        return f"no rainbow P{self.t}"


@dataclass
class ConstructionResult:
    kind: str
    host: ColoredHost
    claims: list[Claim]
    parameters: dict
    structure: dict = field(default_factory=dict)

    def to_json(self, report: dict | None = None) -> dict:
        out = {"kind": self.kind, "parameters": self.parameters, "host": self.host.to_json(),
               "claims": [c.to_json() for c in self.claims]}
        if self.structure:
            out["structure"] = self.structure
        if report is not None:
            out["report"] = report
        return out


def result_from_json(data: dict) -> ConstructionResult:
    return ConstructionResult(
        kind=data.get("kind", "UNKNOWN"),
        host=host_from_json(data["host"]),
        claims=[Claim.from_json(c) for c in data.get("claims", [])],
        parameters=data.get("parameters", {}),
        structure=data.get("structure", {}),
    )


def verify_claims(host: ColoredHost, claims) -> dict:
    rows = []
    for cl in claims:
        if cl.kind == "no_mono":
            wit = find_mono_copy(host, cl.pattern, color=cl.color)
        else:
            wit = find_rainbow_path(host, cl.t)
        rows.append({"claim": cl.to_json(), "description": cl.describe(),
                     "verdict": "PASS" if wit is None else "FAIL",
                     "counterexample": wit.to_json() if wit else None})
    return {"verdict": "PASS" if all(r["verdict"] == "PASS" for r in rows) else "FAIL",
            "claims": rows}


def verify_construction(result: ConstructionResult) -> dict:
    rep = verify_claims(result.host, result.claims)
    rep["kind"] = result.kind
    return rep


# -- helpers ---------------------------------------------------------------------

def _finish(kind: str, shape: str, m: int, n: int | None, raw_color, claims_raw,
            parameters: dict, structure: dict | None = None) -> ConstructionResult:
    """Build the host from raw colour labels and map claims onto normalized colours.

    A claim about a raw colour that does not occur is vacuous and dropped.
    """
    raw = [raw_color(u, v) for u, v in edge_list(shape, m, n or 0)]
    host = build_host(shape, raw, m, n)
    claims = []
    for cl in claims_raw:
        if cl.kind == "no_mono" and cl.color is not None:
            if cl.color not in host.relabel:
                continue
            cl = Claim("no_mono", cl.pattern, host.relabel[cl.color])
        claims.append(cl)
    params = dict(parameters)
    params["color_relabel"] = {str(k): v for k, v in host.relabel.items()}
    structure = dict(structure or {})
    if "color1" in structure:
        structure["color1"] = host.relabel.get(structure["color1"], structure["color1"])
    return ConstructionResult(kind, host, claims, params, structure)


def _union(components) -> SimpleGraph:
    return disjoint_union(*components)


def _require_connected(components, kind):
    if not components:
        raise ConstructionError(f"{kind} needs at least one component")
    for g in components:
        if not g.edges or not g.is_connected() or g.isolated():
            raise ConstructionError(f"{kind} requires connected nonempty components; "
                                    f"{to_graph6(g)} is not")


def _check_transversal(components, chi: int, kind: str):
    # The colour-class argument needs every set leaving a component
    # (chi-1)-colourable to have at least sigma vertices.
    for g in components:
        if chromatic_number(g) != chi:
            continue
        tau = transversal_number(g, chi - 1)
        sig = chromatic_surplus(g)
        if tau < sig:
            raise ConstructionError(
                f"{kind}: component {to_graph6(g)} loses {tau} < sigma = {sig} vertices to "
                f"become {chi - 1}-colourable, so the last part does not block it")


def _parts(sizes) -> list[int]:
    return [i for i, s in enumerate(sizes) for _ in range(s)]


def _subhost_colors(sub, size: int, families, what: str, compute: bool) -> list[int]:
    """Raw labelled colours (1/2) of a 2-coloured K_size avoiding ``families[i]`` in colour i+1."""
    from .search import SearchProblem, is_good, labeled_witness
    if size <= 1:
        return []
    if sub is None:
        if not compute or size > SEARCH_SUBHOST_LIMIT:
            raise ConstructionError(f"{what}: a 2-coloured K_{size} sub-host must be supplied "
                                    f"(search fallback only up to order {SEARCH_SUBHOST_LIMIT})")
        out = labeled_witness(families, size)
        if out.witness is None:
            raise ConstructionError(f"{what}: no valid K_{size} sub-host exists; "
                                    "the Ramsey value used is wrong")
        # recover raw labels: witness colours are normalized, map back
        inv = {v: k for k, v in out.witness.relabel.items()}
        return [inv[c] for c in out.witness.colors]
    sub = list(sub)
    if len(sub) != size * (size - 1) // 2:
        raise ConstructionError(f"{what}: sub-host must colour K_{size} "
                                f"({size * (size - 1) // 2} edges), got {len(sub)} colours")
    if any(c not in (1, 2) for c in sub):
        raise ConstructionError(f"{what}: sub-host colours must be 1 or 2")
    host = build_host(COMPLETE, sub, size)
    if not is_good(host, SearchProblem(COMPLETE, size, labeled=families), sub):
        raise ConstructionError(f"{what}: sub-host contains a forbidden monochromatic pattern")
    return sub


def _ramsey_value(value, lookup, what: str, compute, families=None):
    if value is not None:
        return int(value), "parameter"
    hit = lookup() if lookup else None
    if hit is not None:
        return hit
    if compute and families is not None:
        from .search import labeled_ramsey
        res = labeled_ramsey(families, SEARCH_SUBHOST_LIMIT + 1)
        if res.value is not None:
            return res.value, "computed by exhaustive search"
    raise MissingValue(f"{what} is not in the table and was not supplied")


# -- the kinds ------------------------------------------------------------------

def _r3_i(components, params, table, compute):
    _require_connected(components, "R3_I")
    i, j, l = (int(params.get(x, 0)) for x in ("i", "j", "l"))
    t = len(components)
    if not all(0 <= x < t for x in (i, j, l)):
        raise ConstructionError("R3_I: indices i, j, l must select components")
    chi = chromatic_number(components[i])
    same = [g for g in components if chromatic_number(g) == chi]
    sig_sum = sum(chromatic_surplus(g) for g in same)
    _check_transversal(same, chi, "R3_I")
    gj, gl = components[j], components[l]
    fam = ((gj,), (gl,))
    r, prov = _ramsey_value(params.get("r"), (lambda: table.r2(gj, gl)) if table else None,
                            "R(G_j, G_l)", compute, fam)
    sub = _subhost_colors(params.get("sub_host"), r - 1, fam, "R3_I", compute)
    sizes = [r - 1] * (chi - 1) + [sig_sum - 1]
    owner = _parts(sizes)
    pos = {}
    for v, p in enumerate(owner):
        pos[v] = v - sum(sizes[:p])
    inner = {e: c for e, c in zip(edge_list(COMPLETE, r - 1), sub)}

    def col(u, v):
        if owner[u] == owner[v] and owner[u] < chi - 1:
            a, b = sorted((pos[u], pos[v]))
            return inner[(a, b)]
        return 3

    h = _union(components)
    return _finish("R3_I", COMPLETE, len(owner), None, col, [Claim("no_mono", h)],
                   {"i": i, "j": j, "l": l, "chi": chi, "R(Gj,Gl)": r, "R_source": prov,
                    "sigma_sum": sig_sum, "part_sizes": sizes, "sub_host": sub},
                   {"parts": _part_lists(sizes)})


def _part_lists(sizes):
    out, start = [], 0
    for s in sizes:
        out.append(list(range(start, start + s)))
        start += s
    return out


def _r3_ii(components, params, table, compute):
    _require_connected(components, "R3_II")
    t = len(components)
    i, j = int(params.get("i", 0)), int(params.get("j", 0))
    if not (0 <= i < t and 0 <= j < t):
        raise ConstructionError("R3_II: indices i, j must select components")
    w = clique_number(components[i])
    hit = clique_r2(table, w) if params.get("r") is None else (int(params["r"]), "parameter")
    if hit is None:
        raise MissingValue(f"R_2(K_{w}) is not built in and not in the table")
    r, prov = hit
    base_n = r - 1
    kw = complete(w)
    base = params.get("base_host")
    if base is None and w == 3 and base_n == 5:
        base = [1 if (b - a) % 5 in (1, 4) else 2 for a, b in edge_list(COMPLETE, 5)]
    base = _subhost_colors(base, base_n, ((kw,), (kw,)), "R3_II base", compute)
    size = components[j].order - 1
    inner = {e: c for e, c in zip(edge_list(COMPLETE, base_n), base)}

    def col(u, v):
        pu, pv = u // size, v // size
        if pu == pv:
            return 3
        return inner[(min(pu, pv), max(pu, pv))]

    h = _union(components)
    return _finish("R3_II", COMPLETE, base_n * size, None, col, [Claim("no_mono", h)],
                   {"i": i, "j": j, "omega": w, "R2(K_omega)": r, "R_source": prov,
                    "part_size": size, "base_host": base},
                   {"parts": _part_lists([size] * base_n)})


def _r3_iii(components, params, table, compute):
    _require_connected(components, "R3_III")
    for g in components:
        if chromatic_number(g) != 3:
            raise ConstructionError("R3_III requires every component to have chromatic number 3")
    size = sum(g.order for g in components) - 1
    # colour inside V_m is m; between the other two parts is m as well
    table_ = {(0, 0): 1, (1, 2): 1, (1, 1): 2, (0, 2): 2, (2, 2): 3, (0, 1): 3}

    def col(u, v):
        a, b = sorted((u // size, v // size))
        return table_[(a, b)]

    h = _union(components)
    return _finish("R3_III", COMPLETE, 3 * size, None, col, [Claim("no_mono", h)],
                   {"part_size": size}, {"parts": _part_lists([size] * 3)})


def _r3_iv(components, params, table, compute):
    _require_connected(components, "R3_IV")
    chis = [chromatic_number(g) for g in components]
    if max(chis) != 3:
        raise ConstructionError("R3_IV requires the largest chromatic number to be 3")
    _check_transversal(components, 3, "R3_IV")
    big = sum(g.order for g in components) - 1
    small = sum(sigma3(g) for g in components) - 1
    sizes = [big, big, small]
    owner = _parts(sizes)

    def col(u, v):
        if owner[u] == owner[v] and owner[u] < 2:
            return owner[u] + 1
        return 3

    h = _union(components)
    return _finish("R3_IV", COMPLETE, len(owner), None, col, [Claim("no_mono", h)],
                   {"part_sizes": sizes, "sigma3_sum": small + 1},
                   {"parts": _part_lists(sizes)})


def _matching(components, params, table, compute):
    if len(components) != 1:
        raise ConstructionError("MATCHING takes a single graph H")
    h = components[0]
    m = int(params.get("m", 1))
    if m < 1:
        raise ConstructionError("MATCHING needs m >= 1")
    if not h.edges or h.isolated():
        raise ConstructionError("MATCHING requires H nonempty without isolated vertices")
    c = len(h.components())
    n1, n2 = m - 1, h.order - 1

    def col(u, v):
        return 2 if u >= n1 and v >= n1 else 1

    mk2 = disjoint_union(*([complete(2)] * m))
    return _finish("MATCHING", COMPLETE, n1 + n2, None, col,
                   [Claim("no_mono", mk2, 1), Claim("no_mono", h, 2)],
                   {"m": m, "components_of_H": c, "exact_formula_applies": m <= c,
                    "part_sizes": [n1, n2]}, {"parts": _part_lists([n1, n2])})


def _decomp(components, params, table, compute):
    if len(components) != 1:
        raise ConstructionError("DECOMP takes a single graph H")
    h = components[0]
    if not h.edges or not h.is_connected():
        raise ConstructionError("DECOMP requires a connected nonempty H")
    p = chromatic_number(h)
    if p < 3:
        raise ConstructionError("DECOMP requires chromatic number at least 3")
    fam = decomposition_family(h, 2).members
    families = ((h,), tuple(fam))
    r, prov = _ramsey_value(params.get("r"), (lambda: table.r_family(h, 2)) if table else None,
                            "R(H, M(H))", compute, families)
    sub = _subhost_colors(params.get("sub_host"), r - 1, families, "DECOMP", compute)
    sizes = [h.order - 1] * (p - 2) + [r - 1]
    owner = _parts(sizes)
    start = sum(sizes[:-1])
    inner = {e: c for e, c in zip(edge_list(COMPLETE, r - 1), sub)}

    def col(u, v):
        if owner[u] != owner[v]:
            return 2
        if owner[u] < p - 2:
            return 1
        return inner[(u - start, v - start)]

    return _finish("DECOMP", COMPLETE, len(owner), None, col,
                   [Claim("no_mono", h, 1), Claim("no_mono", h, 2)],
                   {"chi": p, "R(H,M(H))": r, "R_source": prov, "part_sizes": sizes,
                    "family": [to_graph6(g) for g in fam], "sub_host": sub},
                   {"parts": _part_lists(sizes)})


def _blowup(components, params, table, compute):
    if len(components) != 1:
        raise ConstructionError("BIPARTITE_BLOWUP takes a single graph H")
    h = components[0]
    if not h.edges or not h.is_connected() or bipartition(h) is None:
        raise ConstructionError("BIPARTITE_BLOWUP requires a connected bipartite H")
    k = int(params.get("k", 2))
    if k < 1:
        raise ConstructionError("k must be positive")
    tt = partite_profile(h).t
    if tt < 2:
        raise ConstructionError("t(H) - 1 must be positive")
    b = tt - 1
    side = k * b

    def col(u, v):
        return (u // b + (v - side) // b) % k + 1

    return _finish("BIPARTITE_BLOWUP", BIPARTITE, side, side, col, [Claim("no_mono", h)],
                   {"k": k, "t(H)": tt, "block": b})


def _exact_k(components, params, table, compute):
    if len(components) != 1:
        raise ConstructionError("EXACT_K takes a single graph H")
    h = components[0]
    if not h.edges:
        raise ConstructionError("EXACT_K requires a nonempty H")
    p = chromatic_number(h)
    k = int(params.get("k", 4))
    if not 4 <= k <= p:
        raise ConstructionError(f"EXACT_K requires 4 <= k <= chi(H) = {p}")
    idx = p - k + 2
    fam = decomposition_family(h, idx).members
    families = (tuple(fam), (h,))
    r, prov = _ramsey_value(params.get("r"),
                            (lambda: table.r_family(h, idx)) if table else None,
                            f"R(M_{idx}(H), H)", compute, families)
    # sub-host labels: 1 stays colour 1, 2 becomes colour k
    sub = _subhost_colors(params.get("sub_host"), r - 1, families, "EXACT_K", compute)
    sizes = [h.order - 1] * (k - 2) + [r - 1]
    owner = _parts(sizes)
    start = sum(sizes[:-1])
    inner = {e: (1 if c == 1 else k) for e, c in zip(edge_list(COMPLETE, r - 1), sub)}

    def col(u, v):
        if owner[u] != owner[v]:
            return 1
        if owner[u] < k - 2:
            return owner[u] + 2
        return inner[(u - start, v - start)]

    return _finish("EXACT_K", COMPLETE, len(owner), None, col,
                   [Claim("no_mono", h), Claim("no_rainbow_path", t=5)],
                   {"k": k, "chi": p, "family_index": idx, f"R(M_i(H),H)": r, "R_source": prov,
                    "family": [to_graph6(g) for g in fam], "part_sizes": sizes, "sub_host": sub},
                   {"parts": _part_lists(sizes)})


def _starpart(components, params, table, compute):
    if len(components) != 1:
        raise ConstructionError("BIPARTITE_STARPART takes a single graph H")
    h = components[0]
    if not h.edges or bipartition(h) is None:
        raise ConstructionError("BIPARTITE_STARPART requires a nonempty bipartite H")
    core, _ = strip_isolated(h)
    k = int(params.get("k", 3))
    s = partite_profile(core).s
    if s < 2 or k < 1:
        raise ConstructionError("BIPARTITE_STARPART needs s(H) >= 2 and k >= 1")
    b = s - 1
    side = k * b

    def col(u, v):
        return u // b + 1

    return _finish("BIPARTITE_STARPART", BIPARTITE, side, side, col,
                   [Claim("no_mono", h), Claim("no_rainbow_path", t=4)],
                   {"k": k, "s(H)": s}, {"U_parts": _part_lists([b] * k)})


def _inner_colors(choice, size: int, own: int, rng_bits=None) -> list[int]:
    """Colours on the internal edges of a part: ``own`` or 1, with ``own`` present."""
    ne = size * (size - 1) // 2
    if choice is None or choice == "own":
        return [own] * ne
    cols = [own if c in (own, "own", True) else 1 for c in choice]
    if len(cols) != ne:
        raise ConstructionError(f"part of size {size} has {ne} internal edges, got {len(cols)}")
    if own not in cols:
        raise ConstructionError(f"part {own} must use its own colour at least once")
    return cols


def _p5_shape(components, params, table, compute):
    sizes = [int(x) for x in params.get("part_sizes", [])]
    if len(sizes) < 1 or any(s < 2 for s in sizes):
        raise ConstructionError("NO_RAINBOW_P5_SHAPE needs parts of size >= 2")
    inner = params.get("inner") or [None] * len(sizes)
    if len(inner) != len(sizes):
        raise ConstructionError("one inner colour choice per part is required")
    owner = _parts(sizes)
    starts = [sum(sizes[:i]) for i in range(len(sizes))]
    maps = []
    for i, (s, ch) in enumerate(zip(sizes, inner)):
        cols = _inner_colors(ch, s, i + 2)
        maps.append({e: c for e, c in zip(edge_list(COMPLETE, s), cols)})

    def col(u, v):
        if owner[u] != owner[v]:
            return 1
        p = owner[u]
        return maps[p][(u - starts[p], v - starts[p])]

    claims = [Claim("no_rainbow_path", t=5)]
    claims += [Claim("no_mono", g) for g in components]
    return _finish("NO_RAINBOW_P5_SHAPE", COMPLETE, len(owner), None, col, claims,
                   {"part_sizes": sizes, "inner": [list(m.values()) for m in maps]},
                   {"color1": 1, "parts": _part_lists(sizes)})


def _p4_shape(components, params, table, compute):
    sizes = [int(x) for x in params.get("part_sizes", [])]
    if not sizes or any(s < 1 for s in sizes):
        raise ConstructionError("BIPARTITE_NO_RAINBOW_P4_SHAPE needs nonempty U parts")
    n = sum(sizes)
    owner = _parts(sizes)
    return _finish("BIPARTITE_NO_RAINBOW_P4_SHAPE", BIPARTITE, n, n, lambda u, v: owner[u] + 1,
                   [Claim("no_rainbow_path", t=4)], {"part_sizes": sizes},
                   {"U_parts": _part_lists(sizes)})


def _p5_a(components, params, table, compute):
    u1, u2 = int(params.get("u1", 1)), int(params.get("u2", 0))
    vs = [int(x) for x in params.get("v_sizes", [])]
    if u1 < 1 or u2 < 0 or len(vs) < 2 or vs[0] < 0 or any(x < 1 for x in vs[1:]):
        raise ConstructionError("case A needs |U_1| >= 1, |U_2| >= 0, |V_1| >= 0, |V_i| >= 1")
    n = u1 + u2
    if sum(vs) != n:
        raise ConstructionError(f"sides must be equal: |U| = {n}, |V| = {sum(vs)}")
    vown = _parts(vs)

    def col(u, v):
        return vown[v - n] + 1 if u < u1 else 1

    return _finish("BIPARTITE_NO_RAINBOW_P5_A", BIPARTITE, n, n, col,
                   [Claim("no_rainbow_path", t=5)], {"u1": u1, "u2": u2, "v_sizes": vs},
                   {"case": "A", "U_parts": [list(range(u1)), list(range(u1, n))],
                    "V_parts": [[n + x for x in p] for p in _part_lists(vs)]})


def _p5_b(components, params, table, compute):
    us = [int(x) for x in params.get("u_sizes", [])]
    vs = [int(x) for x in params.get("v_sizes", [])]
    if len(us) < 1 or len(us) != len(vs) or any(x < 1 for x in us + vs):
        raise ConstructionError("case B needs matching lists of nonempty U and V parts")
    n = sum(us)
    if sum(vs) != n:
        raise ConstructionError(f"sides must be equal: |U| = {n}, |V| = {sum(vs)}")
    uo, vo = _parts(us), _parts(vs)
    inner = params.get("inner") or [None] * len(us)
    ustart = [sum(us[:i]) for i in range(len(us))]
    vstart = [sum(vs[:i]) for i in range(len(vs))]
    blocks = []
    for i, ch in enumerate(inner):
        own = i + 2
        ne = us[i] * vs[i]
        if ch is None or ch == "own":
            cols = [own] * ne
        else:
            cols = [own if c in (own, "own", True) else 1 for c in ch]
            if len(cols) != ne or own not in cols:
                raise ConstructionError(f"block {own} needs {ne} colours including {own}")
        blocks.append(cols)

    def col(u, v):
        v -= n
        if uo[u] != vo[v]:
            return 1
        p = uo[u]
        return blocks[p][(u - ustart[p]) * vs[p] + (v - vstart[p])]

    return _finish("BIPARTITE_NO_RAINBOW_P5_B", BIPARTITE, n, n, col,
                   [Claim("no_rainbow_path", t=5)],
                   {"u_sizes": us, "v_sizes": vs, "inner": blocks},
                   {"case": "B", "U_parts": _part_lists(us),
                    "V_parts": [[n + x for x in p] for p in _part_lists(vs)]})


_BUILDERS = {
    "R3_I": _r3_i, "R3_II": _r3_ii, "R3_III": _r3_iii, "R3_IV": _r3_iv,
    "MATCHING": _matching, "DECOMP": _decomp, "BIPARTITE_BLOWUP": _blowup,
    "EXACT_K": _exact_k, "BIPARTITE_STARPART": _starpart,
    "NO_RAINBOW_P5_SHAPE": _p5_shape, "BIPARTITE_NO_RAINBOW_P4_SHAPE": _p4_shape,
    "BIPARTITE_NO_RAINBOW_P5_A": _p5_a, "BIPARTITE_NO_RAINBOW_P5_B": _p5_b,
}


def normalize_kind(kind: str) -> str:
    k = kind.strip().upper().replace("-", "_")
    aliases = {"R3_1": "R3_I", "R3_2": "R3_II", "R3_3": "R3_III", "R3_4": "R3_IV",
               "BLOWUP": "BIPARTITE_BLOWUP", "STARPART": "BIPARTITE_STARPART",
               "P5_SHAPE": "NO_RAINBOW_P5_SHAPE"}
    k = aliases.get(k, k)
    if k not in _BUILDERS:
        raise ConstructionError(f"unknown construction kind {kind!r}")
    return k


def construct(kind: str, components=(), params: dict | None = None,
              table: KnownValuesTable | None = None, compute: bool = True) -> ConstructionResult:
    """Materialize one of the explicit colourings.

    ``compute`` lets missing small Ramsey values and sub-hosts (order <= 8)
    be produced by exhaustive search instead of the table.
    """
    kind = normalize_kind(kind)
    params = dict(params or {})
    res = _BUILDERS[kind](list(components), params, table, compute)
    res.parameters["components"] = [to_graph6(g) for g in components]
    return res


def save_certificate(path: str, result: ConstructionResult, report: dict | None = None):
    with open(path, "w") as fh:
        json.dump(result.to_json(report), fh, indent=2, sort_keys=True)
