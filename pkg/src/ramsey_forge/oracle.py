"""Closed-form bounds and theorem hypotheses, evaluated with a full trace."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .graphs import (SimpleGraph, bipartition, chromatic_number, chromatic_surplus,
                     class_size_profiles, clique_number, decomposition_family, is_color_critical,
                     is_homological, is_subgraph, isomorphic, partite_profile, sigma3,
                     strip_isolated, to_graph6, transversal_number, EXACT_LIMIT, FAMILY_LIMIT)
from .table import KnownValuesTable, clique_r2

APPLIES, NOT, UNKNOWN = "APPLIES", "NOT", "UNKNOWN"
LOWER, UPPER, EQUAL = "LOWER", "UPPER", "EQUAL"


@dataclass
class BoundEntry:
    rule: str
    target: str
    direction: str
    value: int | None
    expression: str
    inputs: dict
    status: str = APPLIES
    note: str = ""

    def to_json(self) -> dict:
        out = {"rule": self.rule, "target": self.target, "direction": self.direction,
               "value": self.value, "expression": self.expression, "inputs": self.inputs,
               "status": self.status}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class BoundReport:
    graph: SimpleGraph
    entries: list[BoundEntry] = field(default_factory=list)

    def best(self, target: str, direction: str = LOWER) -> int | None:
        vals = [e.value for e in self.entries
                if e.target == target and e.status == APPLIES and e.value is not None
                and e.direction in (direction, EQUAL)]
        if not vals:
            return None
        return max(vals) if direction == LOWER else min(vals)

    def to_json(self) -> dict:
        return {"graph": to_graph6(self.graph), "entries": [e.to_json() for e in self.entries]}


def _components(h: SimpleGraph) -> list[SimpleGraph]:
    core, _ = strip_isolated(h)
    return core.components() if core.order else []


def _r_pair(table, g1, g2):
    """R(g1, g2) from the few closed forms we trust, else from the table."""
    for a, b in ((g1, g2), (g2, g1)):
        if a.order == 2 and a.size == 1:
            return b.order, "R(K2, G) = |V(G)|"
    if isomorphic(g1, g2):
        hit = clique_r2(None, g1.order) if g1.size == g1.order * (g1.order - 1) // 2 else None
        if hit and g1.order >= 2:
            return hit
    return table.r2(g1, g2) if table else None


def _transversal_ok(comps, chi):
    for g in comps:
        if chromatic_number(g) == chi and transversal_number(g, chi - 1) < chromatic_surplus(g):
            return False, to_graph6(g)
    return True, None


def formula_bounds(h: SimpleGraph, table: KnownValuesTable | None = None,
                   ks=(2, 3, 4)) -> BoundReport:
    table = table or KnownValuesTable()
    rep = BoundReport(h)
    add = rep.entries.append
    core, iso = strip_isolated(h)
    comps = _components(h)
    if not comps:
        return rep
    n = core.order
    chi = chromatic_number(core)
    connected = len(comps) == 1
    bip = bipartition(core) is not None
    g6 = [to_graph6(g) for g in comps]
    if iso:
        rep.entries.append(BoundEntry("prop-isolated", "R_k(H)", LOWER, None,
                                      "bounds below are for H without its isolated vertices",
                                      {"isolated_removed": iso}, APPLIES))

    # two-colour lower bound for connected graphs
    if connected:
        sig = chromatic_surplus(core)
        add(BoundEntry("burr", "R_2(H)", LOWER, (chi - 1) * (n - 1) + sig,
                       "(chi-1)(|V|-1)+sigma", {"chi": chi, "order": n, "sigma": sig}))
        if core.size == n - 1:
            for m in (2, 3, 4):
                add(BoundEntry("chvatal", f"R(K{m},H)", EQUAL, (n - 1) * (m - 1) + 1,
                               "t(m-1)+1 for a tree on t+1 vertices", {"m": m, "t": n - 1}))
    c = len(comps)
    for m in range(1, c + 1):
        add(BoundEntry("cor-matching", f"R({m}K2,H)", EQUAL, n + m - 1,
                       "|V(H)|+m-1 (m <= number of components)",
                       {"order": n, "m": m, "components": c}))

    # three-colour lower bounds for unions of connected graphs
    chis = [chromatic_number(g) for g in comps]
    sigs = [chromatic_surplus(g) for g in comps]
    best_i = None
    for i, j, l in itertools.product(range(len(comps)), repeat=3):
        same = [k for k in range(len(comps)) if chis[k] == chis[i]]
        ok, bad = _transversal_ok([comps[k] for k in same], chis[i])
        hit = _r_pair(table, comps[j], comps[l])
        inputs = {"i": i, "j": j, "l": l, "chi_i": chis[i],
                  "sigma_sum": sum(sigs[k] for k in same)}
        if hit is None:
            add(BoundEntry("lemma-R3-i", "R_3(H)", LOWER, None,
                           "(chi_i-1)(R(G_j,G_l)-1)+sum sigma", inputs, UNKNOWN,
                           f"R({g6[j]},{g6[l]}) missing from table"))
            continue
        r, prov = hit
        inputs.update({"R(Gj,Gl)": r, "source": prov})
        val = (chis[i] - 1) * (r - 1) + inputs["sigma_sum"]
        if not ok:
            add(BoundEntry("lemma-R3-i", "R_3(H)", LOWER, val,
                           "(chi_i-1)(R(G_j,G_l)-1)+sum sigma", inputs, NOT,
                           f"colour-3 argument fails for {bad}: a smaller non-independent "
                           "vertex set already lowers its chromatic number"))
            continue
        e = BoundEntry("lemma-R3-i", "R_3(H)", LOWER, val,
                       "(chi_i-1)(R(G_j,G_l)-1)+sum sigma", inputs)
        if best_i is None or val > best_i.value:
            best_i = e
    if best_i is not None:
        add(best_i)
    rep.entries[:] = [e for e in rep.entries
                      if not (e.rule == "lemma-R3-i" and e.status == APPLIES and e is not best_i)]

    best_ii = None
    for i, j in itertools.product(range(len(comps)), repeat=2):
        w = clique_number(comps[i])
        hit = clique_r2(table, w)
        if hit is None:
            add(BoundEntry("lemma-R3-ii", "R_3(H)", LOWER, None,
                           "(R_2(K_w)-1)(|V(G_j)|-1)+1", {"i": i, "j": j, "omega": w}, UNKNOWN,
                           f"R_2(K{w}) missing from table"))
            continue
        val = (hit[0] - 1) * (comps[j].order - 1) + 1
        if best_ii is None or val > best_ii.value:
            best_ii = BoundEntry("lemma-R3-ii", "R_3(H)", LOWER, val,
                                 "(R_2(K_w)-1)(|V(G_j)|-1)+1",
                                 {"i": i, "j": j, "omega": w, "R2(K_w)": hit[0],
                                  "source": hit[1], "order_j": comps[j].order})
    if best_ii is not None:
        add(best_ii)

    if all(x == 3 for x in chis):
        add(BoundEntry("lemma-R3-iii", "R_3(H)", LOWER, 3 * n - 2, "3 sum|V(G_i)| - 2",
                       {"sum_orders": n}))
    if max(chis) == 3:
        s3 = sum(sigma3(g) for g in comps)
        ok, bad = _transversal_ok(comps, 3)
        add(BoundEntry("lemma-R3-iv", "R_3(H)", LOWER, 2 * n + s3 - 2,
                       "2 sum|V(G_i)| + sum sigma_3 - 2", {"sum_orders": n, "sigma3_sum": s3},
                       APPLIES if ok else NOT,
                       "" if ok else f"colour-3 argument fails for {bad}"))

    # decomposition-family bounds
    if connected and chi >= 3 and n <= FAMILY_LIMIT:
        hit = table.r_family(core, 2)
        if hit is None:
            add(BoundEntry("lemma-decomp-i", "R_2(H)", LOWER, None,
                           "R(H,M(H))+(chi-2)(|V|-1)", {"chi": chi, "order": n}, UNKNOWN,
                           "R(H,M(H)) missing from table"))
        else:
            add(BoundEntry("lemma-decomp-i", "R_2(H)", LOWER, hit[0] + (chi - 2) * (n - 1),
                           "R(H,M(H))+(chi-2)(|V|-1)",
                           {"R(H,M(H))": hit[0], "source": hit[1], "chi": chi, "order": n}))
    if len(comps) == 2:
        for g, hh in (comps, comps[::-1]):
            if chromatic_number(hh) < 3 or hh.order > FAMILY_LIMIT:
                continue
            r_gh = _r_pair(table, g, hh)
            r_mh = table.r_family(hh, 2)
            inputs = {"G": to_graph6(g), "H": to_graph6(hh)}
            if r_gh is None or r_mh is None:
                add(BoundEntry("lemma-decomp-ii", "R(G u H, M(H))", UPPER, None,
                               "max{R(G,H), R(H,M(H))+|V(G)|}", inputs, UNKNOWN,
                               "needed two-colour values missing from table"))
            else:
                inputs.update({"R(G,H)": r_gh[0], "R(H,M(H))": r_mh[0], "order_G": g.order})
                add(BoundEntry("lemma-decomp-ii", "R(G u H, M(H))", UPPER,
                               max(r_gh[0], r_mh[0] + g.order),
                               "max{R(G,H), R(H,M(H))+|V(G)|}", inputs))

    # exact-k construction
    if chi >= 4 and n <= FAMILY_LIMIT:
        for k in range(4, chi + 1):
            idx = chi - k + 2
            hit = table.r_family(core, idx)
            inputs = {"k": k, "chi": chi, "order": n, "index": idx}
            if hit is None:
                add(BoundEntry("exact-k", f"exact-{k}-colour number", LOWER, None,
                               "(k-2)(|V|-1)+R(M_i(H),H)", inputs, UNKNOWN,
                               f"R(M_{idx}(H),H) missing from table"))
            else:
                inputs.update({"R(M_i(H),H)": hit[0], "source": hit[1]})
                add(BoundEntry("exact-k", f"exact-{k}-colour number", LOWER,
                               (k - 2) * (n - 1) + hit[0], "(k-2)(|V|-1)+R(M_i(H),H)", inputs))

    # bipartite quantities
    if bip:
        prof = partite_profile(core)
        if connected:
            for k in ks:
                add(BoundEntry("lemma-blowup", f"BR_{k}(H)", LOWER, k * (prof.t - 1) + 1,
                               "k(t(H)-1)+1", {"k": k, "t": prof.t}))
        if connected and core.size == n - 1 and max(core.degree(v) for v in range(n)) == n - 1:
            for k in ks:
                add(BoundEntry("star", f"BR_{k}(H)", EQUAL, k * (n - 2) + 1, "k(n-1)+1",
                               {"k": k, "n": n - 1}))
        for k in (3, 4, 5):
            low = k * (prof.s - 1) + 1
            add(BoundEntry("prop-bipartite-p4", f"h_{k}(H,P4)", LOWER, low, "k(s(H)-1)+1",
                           {"k": k, "s": prof.s}))
            br2 = table.brk(core, 2)
            cond = connected or (prof.s > 1 and k >= (prof.t - 1) / (prof.s - 1))
            if br2 is not None and cond:
                add(BoundEntry("prop-bipartite-p4", f"h_{k}(H,P4)", EQUAL, max(br2[0], low),
                               "max{BR_2(H), k(s(H)-1)+1}",
                               {"k": k, "s": prof.s, "t": prof.t, "BR_2": br2[0]}))
        for k in (4, 5):
            low = k * (prof.s - 1) + 1
            add(BoundEntry("prop-bipartite-p5", f"h_{k}(H,P5)", LOWER, low, "k(s(H)-1)+1",
                           {"k": k, "s": prof.s}))
            br3, br2 = table.brk(core, 3), table.brk(core, 2)
            if br3 is None or n < 4:
                continue
            target = max(br3[0], low)
            cond = connected or (br2 is not None and br2[0] + prof.t - 1 <= target)
            if cond:
                add(BoundEntry("prop-bipartite-p5", f"h_{k}(H,P5)", EQUAL, target,
                               "max{BR_3(H), k(s(H)-1)+1}",
                               {"k": k, "s": prof.s, "t": prof.t, "BR_3": br3[0]}))

    # f(H,P5) >= R_3(H)
    known = table.rk(core, 3)
    r3 = known[0] if known else rep.best("R_3(H)")
    add(BoundEntry("eq1", "f(H,P5)", LOWER, r3, "f(H,P5) >= R_3(H)",
                   {"R_3(H) lower bound": r3, "source": known[1] if known else "formula"},
                   APPLIES if r3 is not None else UNKNOWN))
    return rep


# -- theorem hypotheses ------------------------------------------------------------------

@dataclass
class Verdict:
    theorem: str
    verdict: str
    trace: list
    conclusion: str = ""

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "verdict": self.verdict, "trace": self.trace,
                "conclusion": self.conclusion}


def _v(theorem, checks, conclusion, unknown=False):
    """Checks are (description, value, ok); the first failure decides NOT."""
    trace = [{"check": d, "value": v, "ok": ok} for d, v, ok in checks]
    for row in trace:
        if row["ok"] is False:
            return Verdict(theorem, NOT, trace)
    if unknown or any(row["ok"] is None for row in trace):
        return Verdict(theorem, UNKNOWN, trace)
    return Verdict(theorem, APPLIES, trace, conclusion)


def _checks_until_false(items):
    out = []
    for d, fn in items:
        v, ok = fn()
        out.append((d, v, ok))
        if ok is False:
            break
    return out


EQ = "f(H,P5) = R_3(H) certified"


def _balanced(comps):
    """Search class sizes (a_i, b_i, c_i) meeting both balance conditions."""
    options = []
    s = 0
    for g in comps:
        chi = chromatic_number(g)
        if chi == 3:
            s += 1
            sig = chromatic_surplus(g)
            opts = [(key, col) for key, col in class_size_profiles(g, 3).items()
                    if key[2] == sig and key[0] - key[1] <= 1]
        elif chi == 2:
            opts = [((key[0], key[1], 0), col) for key, col in class_size_profiles(g, 2).items()
                    if key[0] == key[1]]
        else:
            return None, s
        if not opts:
            return None, s
        options.append(opts)
    if s == 0:
        return None, s
    for combo in itertools.product(*options):
        sizes = [k for k, _ in combo]
        total_c = sum(c for _, _, c in sizes)
        if all(b + c >= total_c - c for _, b, c in sizes):
            return [{"sizes": list(k), "coloring": col} for k, col in combo], s
    return None, s


def applicability_report(h: SimpleGraph, table: KnownValuesTable | None = None) -> dict:
    table = table or KnownValuesTable()
    core, iso = strip_isolated(h)
    if core.order > EXACT_LIMIT:
        raise ValueError(f"applicability checks are exact only up to order {EXACT_LIMIT}")
    comps = core.components() if core.order else []
    verdicts: list[Verdict] = []
    add = verdicts.append
    if not comps:
        return {"graph": to_graph6(h), "verdicts": [], "note": "graph has no edges"}
    chi = chromatic_number(core)
    sig = chromatic_surplus(core)
    chis = [chromatic_number(g) for g in comps]
    t = len(comps)

    add(_v("prop-isolated", [("H has isolated vertices", iso, iso > 0)],
           "checks below use H without isolated vertices; conclusions transfer to H"))

    connected = t == 1
    bip = chi <= 2
    add(_v("thm-connected-or-bipartite",
           [("connected or bipartite", {"connected": connected, "chi": chi}, connected or bip)],
           EQ))

    r_up = table.rk(core, chi + 1)
    add(_v("thm-chromatic-upper", [("H nonempty", core.size, core.size > 0)],
           f"f(H,P5) <= R_{chi + 1}(H)" + (f" = {r_up[0]}" if r_up else " (value not in table)")))

    same_order = len({g.order for g in comps}) == 1
    checks = [("components share one order", [g.order for g in comps], same_order)]
    if same_order and core.order <= EXACT_LIMIT and comps[0].order <= 12:
        vec = is_homological(comps)
        checks.append(("p-homological", list(vec) if vec else None, vec is not None))
        k = max(t, chi, 3)
        concl = f"f(H,P5) <= R_{k}(H)" + ("; with the lower bound, " + EQ if k == 3 else "")
    else:
        concl = ""
    add(_v("thm-homological", checks, concl))

    is3g = t == 3 and all(isomorphic(g, comps[0]) for g in comps)
    add(_v("cor-3G", _checks_until_false([
        ("H = 3G with G connected", lambda: (t, is3g)),
        ("chi(G) = 3", lambda: (chis[0], chis[0] == 3)),
    ]), EQ))

    # union of a connected graph and its subgraphs
    if t == 2:
        a, b = sorted(comps, key=lambda g: (g.order, g.size))
        sub = is_subgraph(a, b)
        add(_v("thm-union-1", [("two connected components", t, True),
                               ("smaller component is a subgraph of the larger", sub, sub)], EQ))
    else:
        add(_v("thm-union-1", [("two connected components", t, False)], EQ))

    add(_union_2(comps, table))
    add(_union_chi(comps))

    crit = []
    for g in comps:
        if chromatic_number(g) <= 2:
            crit.append({"component": to_graph6(g), "type": "bipartite"})
        else:
            ok, e = is_color_critical(g, 3)
            crit.append({"component": to_graph6(g), "type": "3-color-critical" if ok else "neither",
                         "critical_edge": list(e) if e else None})
    add(_v("thm-critical", [("every component 3-colour-critical or bipartite", crit,
                             all(c["type"] != "neither" for c in crit))], EQ))

    cyc = all(g.size == g.order and all(g.degree(v) == 2 for v in range(g.order)) for g in comps)
    add(_v("cor-cycles", [("H is a disjoint union of cycles", cyc, cyc)], EQ))

    if chi == 3 and all(c in (2, 3) for c in chis):
        found, s = _balanced(comps)
        add(_v("thm-balanced", [("components 3-chromatic or bipartite, at least one 3-chromatic",
                                 chis, s >= 1),
                                ("class sizes satisfying both balance conditions", found,
                                 found is not None)], EQ))
    else:
        add(_v("thm-balanced", [("components 3-chromatic or bipartite with chi(H) = 3", chis,
                                 False)], EQ))

    n3 = sum(1 for c in chis if c == 3)
    add(_v("thm-one3", _checks_until_false([
        ("chi(H) = 3", lambda: (chi, chi == 3)),
        ("exactly one 3-chromatic component", lambda: (n3, n3 == 1)),
        ("every component has order >= sigma(H)",
         lambda: ({"orders": [g.order for g in comps], "sigma": sig},
                  all(g.order >= sig for g in comps))),
    ]), EQ))

    add(_v("cor-sigma1", [("chi(H) = 3", chi, chi == 3), ("sigma(H) = 1", sig, sig == 1)], EQ))

    if t == 2:
        g1, g2 = sorted(comps, key=lambda g: chromatic_number(g))
        c1, c2 = chromatic_number(g1), chromatic_number(g2)
        need = sigma3(g1) + sigma3(g2)
        add(_v("prop-G1G2", [("two connected components", t, True),
                             ("chi(G1) <= chi(G2) = 3", [c1, c2], c2 == 3),
                             ("min order >= sigma_3(G1) + sigma_3(G2)",
                              {"min_order": min(g1.order, g2.order), "sigma3_sum": need},
                              min(g1.order, g2.order) >= need)], EQ))
    else:
        add(_v("prop-G1G2", [("two connected components", t, False)], EQ))

    r3 = table.rk(core, 3)
    rc = table.r2_connected_family(core)
    checks = [("H disconnected", t, t > 1)]
    if t > 1:
        if r3 is None or rc is None:
            checks.append(("R_3(H) >= R_2(C(H)) from table",
                           {"R_3": r3[0] if r3 else None, "R2_C": rc[0] if rc else None}, None))
        else:
            checks.append(("R_3(H) >= R_2(C(H)) from table", {"R_3": r3[0], "R2_C": rc[0]},
                           r3[0] >= rc[0]))
    add(_v("lem-CH", checks, EQ))

    return {"graph": to_graph6(h), "verdicts": [v.to_json() for v in verdicts],
            "certified_equal": any(v.verdict == APPLIES and v.conclusion.endswith("certified")
                                   for v in verdicts if v.theorem != "prop-isolated")}


def _union_2(comps, table) -> Verdict:
    best = None
    for gi, g in enumerate(comps):
        others = [c for k, c in enumerate(comps) if k != gi]
        if not others:
            continue
        subs = all(is_subgraph(o, g) for o in others)
        r2 = table.rk(g, 2)
        trace = [("G_1..G_t are subgraphs of G", {"G": to_graph6(g)}, subs)]
        if not subs:
            v = _v("thm-union-2", trace, EQ)
        elif r2 is None:
            trace.append(("R_2(G) available", None, None))
            v = _v("thm-union-2", trace, EQ)
        else:
            chi, sig, n = chromatic_number(g), chromatic_surplus(g), g.order
            bound = ((chi - 2) * (r2[0] - 1) + sig - 1) / (chi * n)
            trace.append(("t <= ((chi-2)(R_2(G)-1)+sigma-1)/(chi |V(G)|)",
                          {"t": len(others), "chi": chi, "R_2(G)": r2[0], "R_2 source": r2[1],
                           "sigma": sig, "order": n, "bound": round(bound, 6)},
                          len(others) <= bound))
            v = _v("thm-union-2", trace, EQ)
        if v.verdict == APPLIES:
            return v
        if best is None or (best.verdict == NOT and v.verdict == UNKNOWN):
            best = v
    return best or _v("thm-union-2", [("at least two components", len(comps), False)], EQ)


def _union_chi(comps) -> Verdict:
    best = None
    for gi, g in enumerate(comps):
        others = [c for k, c in enumerate(comps) if k != gi]
        if not others:
            continue
        t = len(others)
        need = (t + 4 + math.sqrt((t + 4) ** 2 - 12)) / 2
        subs = all(is_subgraph(o, g) for o in others)
        chi = chromatic_number(g)
        v = _v("cor-union-chi", [("G_1..G_t are subgraphs of G", {"G": to_graph6(g)}, subs),
                                 ("chi(G) >= (t+4+sqrt((t+4)^2-12))/2",
                                  {"chi": chi, "t": t, "needed": round(need, 6)}, chi >= need)],
               EQ)
        if v.verdict == APPLIES:
            return v
        best = best or v
    return best or _v("cor-union-chi", [("at least two components", len(comps), False)], EQ)


def homological_certificate(graphs) -> dict:
    graphs = list(graphs)
    orders = sorted({g.order for g in graphs})
    if len(orders) != 1:
        return {"verdict": NOT, "reason": f"orders differ: {orders}"}
    for g in graphs:
        if not g.edges or not g.is_connected():
            return {"verdict": NOT, "reason": f"{to_graph6(g)} is not connected and nonempty"}
    vec = is_homological(graphs)
    if vec is None:
        return {"verdict": NOT, "reason": "no common class-size vector"}
    p = max(chromatic_number(g) for g in graphs)
    t = len(graphs)
    k = max(t, p, 3)
    concl = f"f(H,P5) <= R_{k}(H) for H the union of the {t} graphs"
    if k == 3:
        concl += "; with the lower bound, f(H,P5) = R_3(H)"
    return {"verdict": APPLIES, "vector": list(vec), "p": p, "t": t, "k": k, "conclusion": concl}
