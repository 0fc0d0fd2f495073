"""Eulerian tours of multigraphs and semi-ordered Eulerian tours (SOETs).

A tour is a pair of aligned sequences (vertex_seq, edge_seq) of equal length
L = number of edges: edge_seq[i] joins vertex_seq[i] to vertex_seq[(i+1) % L],
and every edge id appears exactly once.  Tours that differ by rotation or by
reversal are regarded as the same closed walk; canonical_tour picks a fixed
representative of the class.

A tour U is semi-ordered with respect to a nonempty vertex subset V' when the
subsequence of visits to V' around the tour reads as some word s repeated
twice.  s, of length |V'|, is the visit word.  Whether this holds does not
depend on the rotation or direction in which the tour is read.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from itertools import combinations

from .errors import ResourceLimitError
from .graphs import MultiGraph, connected_components, is_regular
from .parallel import pmap
from .words import Dow


@dataclass(frozen=True)
class EulerianTour:
    """A closed walk using every edge of the base multigraph exactly once."""

    base: MultiGraph
    vertex_seq: tuple
    edge_seq: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertex_seq", tuple(self.vertex_seq))
        object.__setattr__(self, "edge_seq", tuple(self.edge_seq))
        L = self.base.n_edges
        if L == 0:
            raise ValueError("the base multigraph has no edges")
        if len(self.vertex_seq) != L or len(self.edge_seq) != L:
            raise ValueError("vertex_seq and edge_seq must both have length n_edges")
        if sorted(self.edge_seq) != list(range(L)):
            raise ValueError("edge_seq must use every edge id exactly once")
        for i, eid in enumerate(self.edge_seq):
            a, b = self.base.edge_ends(eid)
            u = self.vertex_seq[i]
            w = self.vertex_seq[(i + 1) % L]
            if not ((u == a and w == b) or (u == b and w == a)):
                raise ValueError(f"step {i}: edge {eid} does not join {u!r} to {w!r}")


def induced_word(U: EulerianTour) -> Dow:
    """The double-occurrence word of arrivals along the tour.

    Letter i is the vertex reached by edge_seq[i].  On a 4-regular base every
    vertex is reached exactly twice, so the result is a DOW.
    """
    return Dow(U.vertex_seq[1:] + (U.vertex_seq[0],))


def _class_key(vertex_seq, edge_seq):
    """Least (edge_seq, vertex_seq) pair over all rotations and reversal."""
    L = len(edge_seq)
    rvs = (vertex_seq[0],) + tuple(reversed(vertex_seq[1:]))
    res = tuple(reversed(edge_seq))
    best = None
    for seq_v, seq_e in ((vertex_seq, edge_seq), (rvs, res)):
        for i in range(L):
            cand = (seq_e[i:] + seq_e[:i], seq_v[i:] + seq_v[:i])
            if best is None or cand < best:
                best = cand
    return best


def canonical_tour(U: EulerianTour) -> EulerianTour:
    """The fixed representative of U's class under rotation and reversal."""
    es, vs = _class_key(U.vertex_seq, U.edge_seq)
    return EulerianTour(U.base, vs, es)


def _check_eulerian_preconditions(F: MultiGraph):
    if F.n_edges == 0:
        raise ValueError("the multigraph has no edges")
    for v in F.vertices:
        if F.degree(v) % 2:
            raise ValueError(f"vertex {v!r} has odd degree {F.degree(v)}")
    comps = connected_components(F)
    if len(comps) > 1:
        stray = sorted(comps[1])[0]
        raise ValueError(f"multigraph is disconnected: no tour reaches {stray!r}")


def find_euler_tour(F: MultiGraph) -> EulerianTour:
    """A deterministic Eulerian tour, by Hierholzer's splicing method.

    Closed walks always leave along the least unused edge id and get spliced
    into the tour at the earliest revisitable position, so the result depends
    only on F.
    """
    _check_eulerian_preconditions(F)
    ends = F.edges
    inc = {v: F.incident(v) for v in F.vertices}
    ptr = {v: 0 for v in F.vertices}
    used = [False] * F.n_edges

    def next_unused(v):
        ids = inc[v]
        i = ptr[v]
        while i < len(ids) and used[ids[i]]:
            i += 1
        ptr[v] = i
        return ids[i] if i < len(ids) else None

    def closed_walk(start):
        vs = [start]
        es = []
        cur = start
        while True:
            eid = next_unused(cur)
            if eid is None:
                break
            used[eid] = True
            a, b = ends[eid]
            cur = b if cur == a else a
            es.append(eid)
            vs.append(cur)
        if cur != start:
            raise AssertionError("open walk despite even degrees")
        return vs, es

    tour_v, tour_e = closed_walk(ends[0][0])
    i = 0
    while i < len(tour_v) - 1:
        if next_unused(tour_v[i]) is not None:
            sub_v, sub_e = closed_walk(tour_v[i])
            tour_v[i + 1 : i + 1] = sub_v[1:]
            tour_e[i:i] = sub_e
        else:
            i += 1
    return EulerianTour(F, tuple(tour_v[:-1]), tuple(tour_e))


def tour_from_word(F: MultiGraph, X: Dow) -> EulerianTour:
    """A tour of F whose induced word is exactly X.

    Parallel edges with the same endpoints are assigned ascending ids in
    reading order.  Raises ValueError when X cannot be traced in F.
    """
    if len(X) != F.n_edges:
        raise ValueError(f"word length {len(X)} does not match {F.n_edges} edges")
    letters = X.letters
    vseq = (letters[-1],) + letters[:-1]
    by_pair = {}
    for eid, pair in enumerate(F.edges):
        by_pair.setdefault(pair, []).append(eid)
    taken = set()
    eseq = []
    L = len(letters)
    for i in range(L):
        u, w = vseq[i], vseq[(i + 1) % L]
        pair = (u, w) if u <= w else (w, u)
        eid = next((e for e in by_pair.get(pair, ()) if e not in taken), None)
        if eid is None:
            raise ValueError(f"step {i}: no unused edge joins {u!r} to {w!r}")
        taken.add(eid)
        eseq.append(eid)
    return EulerianTour(F, vseq, tuple(eseq))


def enumerate_euler_tours(F: MultiGraph, limit=None):
    """Yield one representative tour per class, in discovery order.

    The walk is anchored: it always traverses edge 0 first, leaving from that
    edge's lesser endpoint.  Every class of tours contains such a
    representative, and duplicates (possible when edge 0 is a loop) are
    removed with the canonical class key.  If limit is given, finding a
    further class beyond that many raises ResourceLimitError.
    """
    _check_eulerian_preconditions(F)
    L = F.n_edges
    ends = F.edges
    inc = {v: F.incident(v) for v in F.vertices}
    anchor = ends[0][0]
    seen = set()
    used = [False] * L
    vseq = [anchor]
    eseq = []

    def walk(cur):
        if len(eseq) == L:
            if cur != anchor:
                return
            key = _class_key(tuple(vseq[:-1]), tuple(eseq))
            if key in seen:
                return
            if limit is not None and len(seen) >= limit:
                raise ResourceLimitError(
                    f"more than {limit} tour classes", count=len(seen)
                )
            seen.add(key)
            yield EulerianTour(F, key[1], key[0])
            return
        for eid in (0,) if not eseq else inc[cur]:
            if used[eid]:
                continue
            a, b = ends[eid]
            nxt = b if cur == a else a
            used[eid] = True
            eseq.append(eid)
            vseq.append(nxt)
            yield from walk(nxt)
            vseq.pop()
            eseq.pop()
            used[eid] = False

    yield from walk(anchor)


def is_soet(U: EulerianTour, vertex_subset):
    """The visit word of U over vertex_subset, or None when U is not a SOET.

    vertex_subset must be a nonempty subset of the base's vertices, each of
    which must be visited exactly twice by the tour.
    """
    Vp = frozenset(vertex_subset)
    if not Vp:
        raise ValueError("the vertex subset must be nonempty")
    missing = sorted(v for v in Vp if not U.base.has_vertex(v))
    if missing:
        raise ValueError(f"not a vertex of the base multigraph: {missing[0]!r}")
    # induced_word already guarantees every vertex is visited exactly twice
    word = induced_word(U)
    sub = tuple(x for x in word.letters if x in Vp)
    k = len(Vp)
    for i in range(k):
        if sub[i] != sub[i + k]:
            return None
    return sub[:k]


@dataclass(frozen=True)
class SoetCertificate:
    """A checked witness that `tour` is semi-ordered over `subset`."""

    tour: EulerianTour
    subset: frozenset
    visit_word: tuple

    def __post_init__(self):
        object.__setattr__(self, "subset", frozenset(self.subset))
        object.__setattr__(self, "visit_word", tuple(self.visit_word))
        s = is_soet(self.tour, self.subset)
        if s is None:
            raise ValueError("the tour is not semi-ordered over the subset")
        if s != self.visit_word:
            raise ValueError(f"visit word mismatch: tour reads {s!r}")


def _soet_support(F, Vp):
    """Distinct neighbors inside V' of each V' vertex, loops reported apart."""
    adj = {v: set() for v in Vp}
    loops = set()
    for a, b in F.edges:
        if a == b:
            if a in Vp:
                loops.add(a)
        elif a in Vp and b in Vp:
            adj[a].add(b)
            adj[b].add(a)
    return adj, loops


def _soet_quick_no(F, Vp):
    """Sound early rejection from the structure of F restricted to V'.

    Consecutive visits in a tour traverse an edge, so any edge of F inside V'
    forces its endpoints to be cyclically adjacent in the visit word.  For
    |V'| >= 2 a loop inside V' is therefore fatal, and for |V'| >= 3 the
    simple support of F[V'] must fit inside a |V'|-cycle: maximum degree two
    and no shorter cycle.
    """
    k = len(Vp)
    if k < 2:
        return False
    adj, loops = _soet_support(F, Vp)
    if loops:
        return True
    if k < 3:
        return False
    if any(len(ns) > 2 for ns in adj.values()):
        return True
    left = set(Vp)
    while left:
        start = min(left)
        comp = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    frontier.append(y)
        left -= comp
        if len(comp) < k and all(len(adj[x]) == 2 for x in comp):
            return True  # a cycle through fewer than all of V'
    return False


def soet_search(F: MultiGraph, vertex_subset, budget=None, deterministic=False):
    """Find a SOET of F over the given subset, or None when none exists.

    F must be connected and 4-regular.  The search walks anchored tours
    (edge 0 first, from its lesser endpoint) and prunes on the visit-word
    constraints, on connectivity of the unused edges, and on reachability of
    the next forced visit.  `budget` caps the number of extension steps;
    exceeding it raises ResourceLimitError, leaving the question open.  With
    deterministic=True the whole anchored tree is walked and the certificate
    built on the least accepting tour class; otherwise the first hit wins.
    """
    Vp = frozenset(vertex_subset)
    if not Vp:
        raise ValueError("the vertex subset must be nonempty")
    missing = sorted(v for v in Vp if not F.has_vertex(v))
    if missing:
        raise ValueError(f"not a vertex of the multigraph: {missing[0]!r}")
    if not is_regular(F, 4):
        raise ValueError("SOET search needs a 4-regular multigraph")
    _check_eulerian_preconditions(F)
    k = len(Vp)
    if not deterministic:
        if k == 1:
            U = find_euler_tour(F)
            return SoetCertificate(U, Vp, is_soet(U, Vp))
        if _soet_quick_no(F, Vp):
            return None
        U0 = find_euler_tour(F)
        s0 = is_soet(U0, Vp)
        if s0 is not None:
            return SoetCertificate(U0, Vp, s0)
    elif k >= 2 and _soet_quick_no(F, Vp):
        return None

    req = None
    if k >= 3:
        adj, _ = _soet_support(F, Vp)
        req = {v: frozenset(ns) for v, ns in adj.items()}

    L = F.n_edges
    ends = F.edges
    inc = {v: F.incident(v) for v in F.vertices}
    anchor = ends[0][0]
    used = [False] * L
    vseq = [anchor]
    eseq = []
    visits = []
    firstseen = set()
    nodes = 0
    best = None  # least (class key, certificate) pair in deterministic mode

    def rest_connected(cur):
        if len(eseq) == L:
            return True
        seen = {cur}
        stack = [cur]
        while stack:
            x = stack.pop()
            for eid in inc[x]:
                if used[eid]:
                    continue
                a, b = ends[eid]
                y = b if x == a else a
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return all(used[e] or ends[e][0] in seen for e in range(L))

    def gap_ok(cur):
        # can the next forced V' arrival be reached without another V' visit
        done = len(visits)
        if done >= 2 * k:
            return True
        targets = (Vp - firstseen) if done < k else {visits[done - k]}
        seen = {cur}
        stack = [cur]
        while stack:
            x = stack.pop()
            for eid in inc[x]:
                if used[eid]:
                    continue
                a, b = ends[eid]
                y = b if x == a else a
                if y in targets:
                    return True
                if y not in Vp and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def admissible(nxt):
        pos = len(visits)
        if pos < k:
            if nxt in firstseen:
                return False
            if req is not None:
                if pos >= 2 and not req[visits[pos - 1]] <= {visits[pos - 2], nxt}:
                    return False
                if pos == k - 1:
                    if not req[nxt] <= {visits[pos - 1], visits[0]}:
                        return False
                    if not req[visits[0]] <= {visits[1], nxt}:
                        return False
            return True
        return visits[pos - k] == nxt

    def walk(cur):
        nonlocal nodes, best
        if len(eseq) == L:
            if cur != anchor:
                return None
            tour = EulerianTour(F, tuple(vseq[:-1]), tuple(eseq))
            cert = SoetCertificate(tour, Vp, tuple(visits[:k]))
            if not deterministic:
                return cert
            key = _class_key(tour.vertex_seq, tour.edge_seq)
            if best is None or key < best[0]:
                best = (key, cert)
            return None
        for eid in (0,) if not eseq else inc[cur]:
            if used[eid]:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise ResourceLimitError(
                    f"SOET search exceeded {budget} steps", count=nodes
                )
            a, b = ends[eid]
            nxt = b if cur == a else a
            arriving = nxt in Vp
            if arriving and not admissible(nxt):
                continue
            used[eid] = True
            eseq.append(eid)
            vseq.append(nxt)
            if arriving:
                if len(visits) < k:
                    firstseen.add(nxt)
                visits.append(nxt)
            if rest_connected(nxt) and gap_ok(nxt):
                found = walk(nxt)
                if found is not None:
                    return found
            if arriving:
                visits.pop()
                if len(visits) < k:
                    firstseen.discard(nxt)
            vseq.pop()
            eseq.pop()
            used[eid] = False
        return None

    res = walk(anchor)
    if not deterministic:
        return res
    if best is None:
        return None
    U = canonical_tour(best[1].tour)
    return SoetCertificate(U, Vp, is_soet(U, Vp))


def consecutive_pairs(U: EulerianTour, vertex_subset):
    """Unordered pairs of cyclically adjacent letters in the visit word."""
    s = is_soet(U, vertex_subset)
    if s is None:
        raise ValueError("the tour is not semi-ordered over the subset")
    k = len(s)
    if k == 1:
        return set()
    return {frozenset((s[i], s[(i + 1) % k])) for i in range(k)}


def maximal_subwords(U: EulerianTour, vertex_subset, u, v):
    """The two maximal subwords strictly between u and v along the tour.

    u and v must be consecutive in the visit word.  The tour then reads
    cyclically as  .. u X v .. u Y v ..  with X and Y free of subset
    vertices; the pair (X, Y) is returned as letter tuples, X being the gap
    at the earlier transit in the tour's own reading order.  Either or both
    may be empty.
    """
    Vp = frozenset(vertex_subset)
    s = is_soet(U, Vp)
    if s is None:
        raise ValueError("the tour is not semi-ordered over the subset")
    if frozenset((u, v)) not in consecutive_pairs(U, Vp):
        raise ValueError(f"{u!r} and {v!r} are not consecutive in the visit word")
    word = induced_word(U).letters
    P = [i for i, x in enumerate(word) if x in Vp]
    m = len(P)  # 2k positions
    gaps = []
    for j in range(m):
        lo = P[j]
        hi = P[(j + 1) % m]
        if j + 1 < m:
            gaps.append(tuple(word[lo + 1 : hi]))
        else:
            gaps.append(tuple(word[lo + 1 :] + word[:hi]))
    pair = frozenset((u, v))
    j = next(
        i
        for i in range(m)
        if frozenset((word[P[i]], word[P[(i + 1) % m]])) == pair
    )
    k = m // 2
    return gaps[j], gaps[(j + k) % m]


def _soet_subset_task(F, budget, deterministic, subset):
    try:
        cert = soet_search(F, subset, budget=budget, deterministic=deterministic)
    except ResourceLimitError as e:
        return ("unknown", e.count)
    return ("yes", cert) if cert is not None else ("no", None)


def iso_soet_decide(F: MultiGraph, k: int, budget=None, deterministic=False, workers=1):
    """Does some k-subset of V(F) admit a SOET?

    Returns (subset, SoetCertificate) for the lexicographically first subset
    that admits one, scanning subsets in lexicographic order; None when all
    subsets are exhausted without a hit.  When a budget is given and some
    subset search dies on it while no other subset says yes, the outcome is
    unsettled and ResourceLimitError is raised.  The answer does not depend
    on the worker count.
    """
    if not is_regular(F, 4):
        raise ValueError("ISO-SOET needs a 4-regular multigraph")
    _check_eulerian_preconditions(F)
    n = len(F.vertices)
    if not 1 <= k <= n:
        raise ValueError(f"k must be between 1 and {n}")
    subsets = list(combinations(F.vertices, k))
    task = partial(_soet_subset_task, F, budget, deterministic)
    chunk = max(1, workers) * 16
    unknown = 0
    for i in range(0, len(subsets), chunk):
        block = subsets[i : i + chunk]
        for subset, (tag, payload) in zip(block, pmap(task, block, workers=workers)):
            if tag == "yes":
                return (frozenset(subset), payload)
            if tag == "unknown":
                unknown += 1
    if unknown:
        raise ResourceLimitError(
            f"{unknown} subset searches exhausted the budget", count=unknown
        )
    return None
