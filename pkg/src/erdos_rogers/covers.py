"""Clique covers: families of cliques that partition a host graph's edges.

Validation uses the pair-dictionary trick: two cliques share two vertices
exactly when some vertex pair appears in both, so one sweep over all
within-clique pairs checks completeness, edge-disjointness, and coverage
in O(sum |K_i|^2) instead of O(#cliques^2).
"""

from itertools import combinations

from .errors import InputError
from .graphs import VertexSet


class Audit:
    """Outcome of one named check: passed flag plus an optional witness."""

    __slots__ = ("name", "passed", "witness")

    def __init__(self, name, passed, witness=None):
        self.name = name
        self.passed = bool(passed)
        self.witness = witness

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return f"Audit({self.name!r}, passed={self.passed}, witness={self.witness!r})"


class CliqueCover:
    """Host graph plus cliques intended to cover every host edge once."""

    __slots__ = ("host", "cliques")

    def __init__(self, host, cliques):
        self.host = host
        self.cliques = tuple(
            c if isinstance(c, VertexSet) else VertexSet.from_iterable(c)
            for c in cliques
        )

    def validate(self, require_total=True):
        """Audit the three cover invariants.

        Checks that each listed clique induces a complete subgraph, that no
        two cliques share more than one vertex, and (when require_total)
        that every host edge lies in some clique.
        """
        seen = {}
        for idx, cl in enumerate(self.cliques):
            members = cl.members()
            for u, v in combinations(members, 2):
                if not self.host.has_edge(u, v):
                    return Audit(
                        "clique_cover",
                        False,
                        {"kind": "not-a-clique", "clique": idx, "missing_edge": [u, v]},
                    )
                if (u, v) in seen:
                    return Audit(
                        "clique_cover",
                        False,
                        {
                            "kind": "overlap",
                            "cliques": [seen[(u, v)], idx],
                            "shared_pair": [u, v],
                        },
                    )
                seen[(u, v)] = idx
        if require_total:
            for u, v in self.host.edges():
                if (u, v) not in seen:
                    return Audit(
                        "clique_cover",
                        False,
                        {"kind": "uncovered-edge", "edge": [u, v]},
                    )
        return Audit("clique_cover", True)

    def edge_clique_map(self):
        """Map host edge (u,v), u<v -> covering clique index.

        Requires complete, edge-disjoint cliques; uncovered host edges are
        simply absent from the map (callers decide whether that is an error).
        """
        seen = {}
        for idx, cl in enumerate(self.cliques):
            members = cl.members()
            for u, v in combinations(members, 2):
                if not self.host.has_edge(u, v):
                    raise InputError(
                        "cover clique does not induce a complete subgraph",
                        witness={"clique": idx, "missing_edge": [u, v]},
                    )
                if (u, v) in seen:
                    raise InputError(
                        "cover cliques are not edge-disjoint",
                        witness={"cliques": [seen[(u, v)], idx], "shared_pair": [u, v]},
                    )
                seen[(u, v)] = idx
        return seen

    def __repr__(self):
        return f"CliqueCover(host={self.host!r}, cliques={len(self.cliques)})"
