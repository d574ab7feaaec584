"""Constructions, verifiers and exhaustive searches for constrained Ramsey numbers."""
from __future__ import annotations

__version__ = "0.1.0"

from .graphs import (SimpleGraph, chromatic_number, chromatic_surplus, complete,
                     complete_bipartite, copies, cycle, decomposition_family, disjoint_union,
                     invariants, is_homological, parse_graph6, partite_profile, path, star,
                     to_graph6)
from .colored import (BIPARTITE, COMPLETE, ColoredHost, build_host, find_mono_copy,
                      find_rainbow_path, host_from_json)
from .table import KnownValuesTable
from .constructions import KINDS, construct, verify_construction
from .structure import (P5Partition, classify_bipartite_structure, recover_p5_partition,
                        tripartite_contains_union, verify_p5_partition)
from .search import (UNBOUNDED, SearchProblem, bipartite_constrained, bipartite_ramsey_k,
                     constrained_ramsey, exists_good_coloring, ramsey_k, two_color_ramsey)
from .oracle import applicability_report, formula_bounds, homological_certificate
