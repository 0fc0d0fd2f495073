"""Local complementation, vertex deletion, LC orbits, star classification.

Local complementation at v complements the subgraph induced on the
neighborhood of v and is an involution.  The orbit of a graph under local
complementations at arbitrary vertices is always finite and is explored by
plain breadth-first search with a state cap.
"""

from itertools import combinations

from .errors import ResourceLimitError
from .graphs import SimpleGraph

DEFAULT_NODE_CAP = 1_000_000


def local_complement(G: SimpleGraph, v: str) -> SimpleGraph:
    """Complement the edges among the neighbors of v."""
    nv = sorted(G.neighbors(v))
    edges = set(G.edges)
    for a, b in combinations(nv, 2):
        e = (a, b)
        if e in edges:
            edges.discard(e)
        else:
            edges.add(e)
    return SimpleGraph(G.vertices, edges)


def apply_lc_word(G: SimpleGraph, word) -> SimpleGraph:
    """Apply local complementations left to right."""
    for i, v in enumerate(word):
        if not G.has_vertex(v):
            raise ValueError(f"position {i}: no vertex {v!r}")
        G = local_complement(G, v)
    return G


def delete_vertex(G: SimpleGraph, v: str) -> SimpleGraph:
    if not G.has_vertex(v):
        raise ValueError(f"no vertex {v!r}")
    rest = [u for u in G.vertices if u != v]
    return SimpleGraph(rest, (e for e in G.edges if v not in e))


def pivot(G: SimpleGraph, u: str, v: str) -> SimpleGraph:
    """Pivot on the edge (u, v): tau_u tau_v tau_u.

    Requires u and v adjacent; under that hypothesis the result equals the
    pivot the other way round (tested, not assumed here).
    """
    if not G.has_edge(u, v):
        raise ValueError(f"pivot needs an edge, {u!r}-{v!r} is not one")
    return apply_lc_word(G, (u, v, u))


def _orbit_words(G, node_cap, stop_at=None):
    """BFS over the LC orbit.

    Returns {edge frozenset: word reaching it}.  If stop_at (an edge
    frozenset) is given the search returns early once it is found.
    """
    if node_cap <= 0:
        raise ValueError("node_cap must be positive")
    start = G.edges
    words = {start: ()}
    queue = [start]
    while queue:
        if stop_at is not None and stop_at in words:
            return words
        nxt = []
        for edges in queue:
            cur = SimpleGraph(G.vertices, edges)
            w = words[edges]
            for v in G.vertices:
                if len(cur.neighbors(v)) < 2:
                    continue  # tau_v is the identity there
                img = local_complement(cur, v).edges
                if img not in words:
                    if len(words) >= node_cap:
                        raise ResourceLimitError(
                            f"LC orbit exceeded {node_cap} states",
                            count=len(words),
                        )
                    words[img] = w + (v,)
                    nxt.append(img)
        queue = nxt
    return words


def lc_orbit(G: SimpleGraph, node_cap: int = DEFAULT_NODE_CAP):
    """All graphs LC-equivalent to G, as a set of SimpleGraph."""
    words = _orbit_words(G, node_cap)
    return {SimpleGraph(G.vertices, e) for e in words}


def lc_equivalent(G: SimpleGraph, H: SimpleGraph, node_cap: int = DEFAULT_NODE_CAP) -> bool:
    """Whether H lies in the LC orbit of G.  Vertex sets must agree."""
    if G.vertices != H.vertices:
        raise ValueError("lc_equivalent needs identical vertex sets")
    words = _orbit_words(G, node_cap, stop_at=H.edges)
    return H.edges in words


def lc_word_between(G: SimpleGraph, H: SimpleGraph, node_cap: int = DEFAULT_NODE_CAP):
    """An LC word w with apply_lc_word(G, w) == H, or None."""
    if G.vertices != H.vertices:
        raise ValueError("lc_word_between needs identical vertex sets")
    words = _orbit_words(G, node_cap, stop_at=H.edges)
    return words.get(H.edges)


def classify_star_or_complete(G: SimpleGraph):
    """Classify G as ("complete", None), ("star", center) or ("neither", None).

    Needs at least two vertices.  K2 is both a star and complete; it is
    reported as complete (completeness is checked first).
    """
    n = len(G.vertices)
    if n < 2:
        raise ValueError("classification needs at least 2 vertices")
    if len(G.edges) == n * (n - 1) // 2:
        return ("complete", None)
    if len(G.edges) == n - 1:
        centers = [v for v in G.vertices if G.degree(v) == n - 1]
        if centers and all(G.degree(v) == 1 for v in G.vertices if v != centers[0]):
            return ("star", centers[0])
    return ("neither", None)
