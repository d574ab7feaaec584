"""User-supplied Ramsey values that formulas and constructions consume.

Entries are looked up up to isomorphism. Only a handful of values are built
in (the small clique numbers everyone agrees on); everything else has to come
from a table file with a provenance note.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graphs import SimpleGraph, complete, isomorphic, parse_graph6, to_graph6

QUANTITIES = ("R", "Rk", "BRk", "R_MH", "R2_C")


class MissingValue(LookupError):
    """A formula or construction needs a value the table does not hold."""


@dataclass(frozen=True)
class TableEntry:
    quantity: str
    graphs: tuple[SimpleGraph, ...]
    value: int
    k: int | None = None
    index: int | None = None
    note: str = ""

    def to_json(self) -> dict:
        out = {"quantity": self.quantity, "graphs": [to_graph6(g) for g in self.graphs],
               "value": self.value, "note": self.note}
        if self.k is not None:
            out["k"] = self.k
        if self.index is not None:
            out["index"] = self.index
        return out


@dataclass
class KnownValuesTable:
    entries: list[TableEntry] = field(default_factory=list)

    def add(self, quantity: str, graphs, value: int, k: int | None = None,
            index: int | None = None, note: str = "") -> "KnownValuesTable":
        if quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {quantity!r}; expected one of {QUANTITIES}")
        if not isinstance(value, int) or value < 2:
            raise ValueError(f"table values must be integers >= 2, got {value!r}")
        graphs = tuple(graphs)
        want = {"R": 2, "Rk": 1, "BRk": 1, "R_MH": 1, "R2_C": 1}[quantity]
        if len(graphs) != want:
            raise ValueError(f"{quantity} entries take {want} graph(s), got {len(graphs)}")
        if quantity in ("Rk", "BRk") and (k is None or k < 1):
            raise ValueError(f"{quantity} entries need a colour count k >= 1")
        if quantity == "R_MH" and (index is None or index < 2):
            raise ValueError("R_MH entries need a family index >= 2")
        self.entries.append(TableEntry(quantity, graphs, value, k, index, note))
        return self

    # lookups return (value, provenance) or None
    def _find(self, quantity: str, graphs, k=None, index=None):
        for e in self.entries:
            if e.quantity != quantity or e.k != k or e.index != index:
                continue
            if len(e.graphs) == 1 and isomorphic(e.graphs[0], graphs[0]):
                return e.value, e.note or "table"
            if len(e.graphs) == 2:
                a, b = e.graphs
                if (isomorphic(a, graphs[0]) and isomorphic(b, graphs[1])) or \
                        (isomorphic(a, graphs[1]) and isomorphic(b, graphs[0])):
                    return e.value, e.note or "table"
        return None

    def r2(self, g1: SimpleGraph, g2: SimpleGraph):
        """R(g1, g2); symmetric in its arguments."""
        return self._find("R", (g1, g2))

    def rk(self, h: SimpleGraph, k: int):
        if k == 2:
            hit = self._find("R", (h, h))
            if hit:
                return hit
        hit = self._find("Rk", (h,), k=k)
        if hit is None and k == 2:
            return builtin_clique_r2(h)
        return hit

    def brk(self, h: SimpleGraph, k: int):
        return self._find("BRk", (h,), k=k)

    def r_family(self, h: SimpleGraph, index: int):
        """R(M_index(H), H), i.e. the family against H."""
        return self._find("R_MH", (h,), index=index)

    def r2_connected_family(self, h: SimpleGraph):
        return self._find("R2_C", (h,))

    def to_json(self) -> dict:
        return {"entries": [e.to_json() for e in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "KnownValuesTable":
        t = cls()
        for i, raw in enumerate(data.get("entries", [])):
            try:
                graphs = [parse_graph6(s) for s in raw["graphs"]]
                t.add(raw["quantity"], graphs, raw["value"], raw.get("k"), raw.get("index"),
                      raw.get("note", ""))
            except (KeyError, ValueError) as exc:
                raise ValueError(f"table entry {i}: {exc}") from exc
        return t

    @classmethod
    def load(cls, path: str) -> "KnownValuesTable":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


_BUILTIN_CLIQUE_R2 = {2: 2, 3: 6}


def builtin_clique_r2(h: SimpleGraph):
    """R_2(K_w) for w <= 3; larger cliques must come from a table."""
    for w, val in _BUILTIN_CLIQUE_R2.items():
        if h.order == w and isomorphic(h, complete(w)):
            return val, "built-in"
    return None


def clique_r2(table: KnownValuesTable | None, w: int):
    if w in _BUILTIN_CLIQUE_R2:
        return _BUILTIN_CLIQUE_R2[w], "built-in"
    if w == 1:
        return 1, "built-in"
    if table is None:
        return None
    return table.rk(complete(w), 2)
