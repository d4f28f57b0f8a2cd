"""Random blowups along clique covers, the failure-probability calculator,
square clique covers of bipartite graphs, and homomorphism freeness.

random_blowup colors each clique of the cover independently with vertices
of a pattern F; a host edge survives exactly when its two endpoints get
distinct, F-adjacent colors within the covering clique.  Host edges not
covered by any clique are deleted outright, so partial covers are usable:
they just contribute nothing.
"""

import math
from fractions import Fraction

from .covers import CliqueCover
from .errors import InputError
from .graphs import Graph, VertexSet, as_mask, bits


class BlowupColoring:
    """The per-clique color maps of one random blowup, with seed record."""

    __slots__ = ("pattern", "colorings", "seed_record")

    def __init__(self, pattern, colorings, seed_record):
        self.pattern = pattern
        self.colorings = tuple(colorings)  # one dict per clique: vertex -> color
        self.seed_record = seed_record

    def to_json_dict(self):
        return {
            "pattern": {"n": self.pattern.n, "edges": [list(e) for e in self.pattern.edges()]},
            "colorings": [
                {str(v): c for v, c in sorted(col.items())} for col in self.colorings
            ],
            "seed_record": dict(self.seed_record),
        }

    def __repr__(self):
        return f"BlowupColoring(cliques={len(self.colorings)})"


def random_blowup(cover, pattern, rng):
    """(blown-up Graph, BlowupColoring).

    Requires the cover's cliques to be complete and pairwise edge-disjoint
    (InputError with witness otherwise).  Each clique i draws its colors
    from the substream labeled clique-i, so colorings are independent of
    enumeration order elsewhere.
    """
    if pattern.n < 1:
        raise InputError("pattern needs at least one vertex")
    edge_map = cover.edge_clique_map()  # raises with witness on bad covers
    colorings = []
    for i, clique in enumerate(cover.cliques):
        stream = rng.substream(f"clique-{i}")
        colorings.append({v: stream.randrange(pattern.n) for v in clique.members()})
    kept = []
    for (u, v), i in edge_map.items():
        col = colorings[i]
        if pattern.has_edge(col[u], col[v]):
            kept.append((u, v))
    out = Graph(cover.host.n, kept)
    return out, BlowupColoring(pattern, colorings, rng.state())


def replay_blowup(cover, coloring):
    """Re-derive the blowup edge set from a serialized coloring (third-party
    check that the published coloring really yields the published graph)."""
    edge_map = cover.edge_clique_map()
    pattern = coloring.pattern
    kept = []
    for (u, v), i in edge_map.items():
        col = coloring.colorings[i]
        if pattern.has_edge(col[u], col[v]):
            kept.append((u, v))
    return Graph(cover.host.n, kept)


class FailureBound:
    """Log-space union bound for a blowup failing to stay pattern-free.

    log_expected = log C(N^2, N) + N log t + R N log(1 - 1/t); the blowup
    is guaranteed (some coloring works) exactly when this is negative.
    """

    __slots__ = ("t", "R", "N", "log_sets", "log_prob", "log_expected", "guaranteed", "chain_ok", "exact_power")

    def __init__(self, t, R, N, log_sets, log_prob, log_expected, guaranteed, chain_ok, exact_power):
        self.t = t
        self.R = R
        self.N = N
        self.log_sets = log_sets
        self.log_prob = log_prob
        self.log_expected = log_expected
        self.guaranteed = guaranteed
        self.chain_ok = chain_ok
        self.exact_power = exact_power

    def as_dict(self):
        return {
            "t": self.t,
            "R": self.R,
            "N": self.N,
            "log_sets": self.log_sets,
            "log_prob": self.log_prob,
            "log_expected": self.log_expected,
            "guaranteed": self.guaranteed,
            "chain_ok": self.chain_ok,
            "exact_power": self.exact_power,
        }

    def __repr__(self):
        return f"FailureBound(log_expected={self.log_expected:.3f}, guaranteed={self.guaranteed})"


def _log_comb(n, k):
    if k < 0 or k > n:
        return float("-inf")
    if n <= 2_000_000 and k <= 5_000:
        return math.log(math.comb(n, k))
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def theorem1_failure_bound(t, R, N):
    """Evaluate the union bound over all N-subsets of a blown-up line graph.

    R = 0 is allowed and gives guaranteed False (no parts, nothing random
    ever dies).  The (1 - 1/t)^(R N) factor is computed from the exact
    rational power when the exponent is small enough, else via log1p.
    """
    if t < 2 or N < 2 or R < 0:
        raise InputError("need t >= 2, N >= 2, R >= 0")
    log_sets = _log_comb(N * N, N)
    exponent = R * N
    exact_power = exponent <= 200_000
    if exact_power and R > 0:
        power = Fraction(t - 1, t) ** exponent
        log_decay = math.log(power.numerator) - math.log(power.denominator)
    else:
        log_decay = exponent * math.log1p(-1.0 / t)
    log_prob = N * math.log(t) + log_decay
    log_expected = log_sets + log_prob
    # the chain in the probability estimate: t^N (1-1/t)^{RN} <= e^{N log t - RN/t},
    # compared against N^{-2N}
    chain_ok = (N * math.log(t) - exponent / t) < (-2.0 * N * math.log(N))
    return FailureBound(
        t, R, N, log_sets, log_prob, log_expected, log_expected < 0.0, chain_ok, exact_power
    )


def square_clique_cover(bip, left):
    """Clique cover of the square of a bipartite graph restricted to `left`.

    Host: one vertex per member of left (densely relabeled in increasing
    order), u ~ w iff they share a right neighbor.  Cliques: for each right
    vertex y with at least two left neighbors, the set N(y).  Girth > 4 is
    required; a 4-cycle would make two cliques share two vertices, and is
    returned as the witness.
    """
    left_mask = as_mask(left)
    # every edge must cross the bipartition
    for u, v in bip.edges():
        if bool((left_mask >> u) & 1) == bool((left_mask >> v) & 1):
            raise InputError(
                "graph is not bipartite with the given left part",
                witness={"edge": [u, v]},
            )

    members = tuple(bits(left_mask))
    index = {v: i for i, v in enumerate(members)}

    pair_via = {}
    host_edges = []
    cliques = []
    for y in range(bip.n):
        if (left_mask >> y) & 1:
            continue
        nbrs = [index[u] for u in bits(bip.row(y))]
        if len(nbrs) >= 2:
            cliques.append(VertexSet.from_iterable(nbrs))
        for a in range(len(nbrs)):
            for b in range(a + 1, len(nbrs)):
                u, w = min(nbrs[a], nbrs[b]), max(nbrs[a], nbrs[b])
                if (u, w) in pair_via:
                    y0 = pair_via[(u, w)]
                    raise InputError(
                        "girth must exceed 4",
                        witness={
                            "four_cycle": [members[u], y0, members[w], y],
                        },
                    )
                pair_via[(u, w)] = y
                host_edges.append((u, w))
    host = Graph(len(members), host_edges)
    return CliqueCover(host, cliques)


def is_hom_free(pattern, source):
    """(True, None) if no graph homomorphism source -> pattern exists,
    else (False, mapping tuple).  A homomorphism sends every edge of the
    source to an edge of the pattern; it need not be injective."""
    if source.n == 0:
        return (False, ())
    if pattern.n == 0:
        return (True, None)
    order = sorted(range(source.n), key=lambda v: (-source.degree(v), v))
    # reorder so each vertex after the first has a placed neighbor if possible
    placed = [order[0]]
    rest = set(order[1:])
    while rest:
        nxt = None
        for v in order:
            if v in rest and any(u in placed for u in source.neighbors(v)):
                nxt = v
                break
        if nxt is None:
            nxt = next(v for v in order if v in rest)
        placed.append(nxt)
        rest.discard(nxt)
    order = placed

    image = [-1] * source.n

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        allowed = None
        for u in source.neighbors(v):
            if image[u] >= 0:
                row = pattern.row(image[u])
                allowed = row if allowed is None else allowed & row
        candidates = bits(allowed) if allowed is not None else range(pattern.n)
        for c in candidates:
            image[v] = c
            if extend(i + 1):
                return True
            image[v] = -1
        return False

    if extend(0):
        return (False, tuple(image))
    return (True, None)


class PatternPair:
    """A pattern pair (F, G) with the feasibility flags the pipelines need,
    computed once and cached."""

    __slots__ = ("F", "G", "f_triangle_free", "f_hom_g_free", "g_two_connected", "g_is_clique")

    def __init__(self, F, G):
        from .graphs import complete_graph, is_biconnected, is_clique
        from .subgraph import contains_subgraph

        self.F = F
        self.G = G
        self.f_triangle_free = contains_subgraph(F, complete_graph(3)).status == "absent"
        self.f_hom_g_free = is_hom_free(F, G)[0]
        self.g_two_connected = is_biconnected(G)
        self.g_is_clique = is_clique(G)

    def as_dict(self):
        return {
            "f_triangle_free": self.f_triangle_free,
            "f_hom_g_free": self.f_hom_g_free,
            "g_two_connected": self.g_two_connected,
            "g_is_clique": self.g_is_clique,
        }
