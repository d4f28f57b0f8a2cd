"""Budgeted subgraph-copy search.

contains_subgraph looks for a (not necessarily induced) copy of a pattern
inside a host: an injective map sending pattern edges to host edges.  The
search is backtracking with bit-row candidate pruning; pattern vertices
are placed in descending-degree order (preferring vertices with already
placed neighbors) and host candidates are tried in ascending degree.  A
node budget makes "unknown" a first-class outcome: the search never lies
about exhaustiveness.
"""

from itertools import permutations

from .errors import InputError, SelfCheckError
from .graphs import bits

DEFAULT_BUDGET = 2_000_000


class SubgraphResult:
    """status is one of "found", "absent", "unknown"."""

    __slots__ = ("status", "embedding", "nodes")

    def __init__(self, status, embedding=None, nodes=0):
        self.status = status
        self.embedding = embedding
        self.nodes = nodes

    @property
    def found(self):
        return self.status == "found"

    def __repr__(self):
        return f"SubgraphResult({self.status!r}, embedding={self.embedding!r})"


def _pattern_order(pattern, first=None):
    """Static placement order: seed with the max-degree vertex (or `first`),
    then repeatedly take the vertex with most placed neighbors, breaking
    ties by higher degree then lower index."""
    n = pattern.n
    remaining = set(range(n))
    order = []
    if first is not None:
        order.append(first)
        remaining.discard(first)
    while remaining:
        if not order:
            nxt = max(remaining, key=lambda v: (pattern.degree(v), -v))
        else:
            placed_mask = 0
            for v in order:
                placed_mask |= 1 << v
            nxt = max(
                remaining,
                key=lambda v: (
                    (pattern.row(v) & placed_mask).bit_count(),
                    pattern.degree(v),
                    -v,
                ),
            )
        order.append(nxt)
        remaining.discard(nxt)
    return order


def _verify_embedding(host, pattern, mapping):
    if len(set(mapping)) != pattern.n:
        raise SelfCheckError("embedding is not injective")
    for u, v in pattern.edges():
        if not host.has_edge(mapping[u], mapping[v]):
            raise SelfCheckError("embedding does not preserve an edge")


def contains_subgraph(host, pattern, budget=DEFAULT_BUDGET, forced_vertex=None):
    """Search for a copy of pattern in host.

    Returns SubgraphResult with a verified embedding tuple (pattern vertex
    i -> host vertex embedding[i]) on "found".  With forced_vertex set, only
    embeddings whose image contains that host vertex are considered.  The
    budget counts candidate placements; exhausting it yields "unknown".
    """
    if pattern.n < 1:
        raise InputError("pattern needs at least one vertex")
    if pattern.n > host.n:
        return SubgraphResult("absent")

    host_by_degree = sorted(range(host.n), key=lambda v: (host.degree(v), v))
    nodes = 0

    def search(order):
        pat_deg = [pattern.degree(p) for p in order]
        image = [-1] * pattern.n
        used = 0

        def place(i):
            nonlocal nodes, used
            if i == len(order):
                return True
            p = order[i]
            allowed = None
            for q in bits(pattern.row(p)):
                if image[q] >= 0:
                    r = host.row(image[q])
                    allowed = r if allowed is None else (allowed & r)
            if forced_vertex is not None and i == 0:
                candidates = (forced_vertex,)
            elif allowed is None:
                candidates = host_by_degree
            else:
                allowed &= ~used
                candidates = [v for v in host_by_degree if (allowed >> v) & 1]
            for v in candidates:
                if (used >> v) & 1:
                    continue
                if host.degree(v) < pat_deg[i]:
                    continue
                nodes += 1
                if nodes > budget:
                    return None
                image[p] = v
                used |= 1 << v
                sub = place(i + 1)
                if sub:
                    return True
                image[p] = -1
                used &= ~(1 << v)
                if sub is None:
                    return None
            return False

        return place(0), image

    if forced_vertex is None:
        ok, image = search(_pattern_order(pattern))
        if ok:
            mapping = tuple(image)
            _verify_embedding(host, pattern, mapping)
            return SubgraphResult("found", mapping, nodes)
        return SubgraphResult("absent" if ok is False else "unknown", None, nodes)

    # forced vertex: try anchoring each pattern vertex on it
    exhausted = False
    for p0 in range(pattern.n):
        ok, image = search(_pattern_order(pattern, first=p0))
        if ok:
            mapping = tuple(image)
            _verify_embedding(host, pattern, mapping)
            return SubgraphResult("found", mapping, nodes)
        if ok is None:
            exhausted = True
    return SubgraphResult("unknown" if exhausted else "absent", None, nodes)


def exhaustive_contains(host, pattern):
    """Oracle: try every injective placement.  Only for desk-size inputs."""
    if pattern.n > 6 or host.n > 12:
        raise InputError("exhaustive oracle limited to pattern<=6, host<=12")
    pedges = pattern.edges()
    for image in permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[u], image[v]) for u, v in pedges):
            return True
    return False
