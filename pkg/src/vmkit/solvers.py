"""Exact deciders for the vertex-minor problem family, with checked witnesses.

Every YES answer is backed by a VmWitness (an operation sequence plus an
isomorphism of the final graph onto the target) that verify_vm_witness
replays independently; a failure of that replay is a bug, never a wrong
answer, and raises RuntimeError.  NO answers are produced only by exhausting
a finite search space; hitting a budget or cap yields UNKNOWN instead.

The elimination search deletes the complement of a candidate subset in a
fixed label order, trying three graphs before each deletion of v: the
current one, the local complement at v, and the pivot on v with its least
remaining neighbor.  That normal form is a standard fact of the local
equivalence toolkit rather than something established here, so the test
suite revalidates it against an unrestricted breadth-first oracle
(vertex_minor_closure) on every small graph before it is trusted at size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, partial
from itertools import combinations

from .errors import ResourceLimitError
from .euler import canonical_tour, enumerate_euler_tours, find_euler_tour, induced_word
from .graphs import SimpleGraph, connected_components, find_isomorphism
from .lc import (
    DEFAULT_NODE_CAP,
    _orbit_words,
    delete_vertex,
    lc_word_between,
    local_complement,
)
from .parallel import pmap
from .reduction import canonical_cycle, reduce_starvm_to_isovm, require_cubic
from .words import alternance_graph, induced_subword


@dataclass(frozen=True)
class Decision:
    """Outcome of a decider: yes with a witness, no, or unknown."""

    status: str
    witness: object = None
    detail: str = ""

    def __post_init__(self):
        if self.status not in ("yes", "no", "unknown"):
            raise ValueError(f"bad status {self.status!r}")

    @property
    def is_yes(self):
        return self.status == "yes"

    @property
    def is_no(self):
        return self.status == "no"

    @property
    def is_unknown(self):
        return self.status == "unknown"


@dataclass(frozen=True)
class VmWitness:
    """Operation sequence plus isomorphism, the NP certificate made concrete.

    ops is a tuple of ("LC", v) and ("DEL", v) pairs applied to G left to
    right; iso is a tuple of (surviving vertex, H vertex) pairs mapping the
    final graph onto H.
    """

    ops: tuple
    iso: tuple

    def __post_init__(self):
        ops = tuple((str(t), str(v)) for t, v in self.ops)
        for t, _ in ops:
            if t not in ("LC", "DEL"):
                raise ValueError(f"unknown op {t!r}")
        object.__setattr__(self, "ops", ops)
        object.__setattr__(
            self, "iso", tuple(sorted((str(a), str(b)) for a, b in self.iso))
        )

    def iso_map(self):
        return dict(self.iso)


def verify_vm_witness(G: SimpleGraph, H: SimpleGraph, w: VmWitness) -> bool:
    """Replay w.ops on G and check w.iso maps the result onto H.

    Malformed ops (a vertex absent at its step) raise ValueError naming the
    step; a well-formed witness that simply proves nothing returns False.
    """
    cur = G
    for i, (tag, v) in enumerate(w.ops):
        if not cur.has_vertex(v):
            raise ValueError(f"step {i}: no vertex {v!r}")
        cur = local_complement(cur, v) if tag == "LC" else delete_vertex(cur, v)
    m = w.iso_map()
    if len(m) != len(w.iso) or set(m) != set(cur.vertices):
        return False
    if sorted(m.values()) != list(H.vertices):
        return False
    for i, u in enumerate(cur.vertices):
        for v in cur.vertices[i + 1 :]:
            if cur.has_edge(u, v) != H.has_edge(m[u], m[v]):
                return False
    return True


def _require_verified(G, H, w):
    if not verify_vm_witness(G, H, w):
        raise RuntimeError("internal error: constructed witness failed verification")
    return w


def enumerate_hamiltonian_cycles(R: SimpleGraph):
    """All Hamiltonian cycles of R, canonical tuples in lexicographic order.

    Each cycle appears once: rooted at the least vertex, oriented so the
    second vertex is smaller than the last.
    """
    vs = R.vertices
    n = len(vs)
    if n < 3:
        return
    start = vs[0]
    path = [start]
    used = {start}

    def extend():
        if len(path) == n:
            if R.has_edge(path[-1], start) and path[1] < path[-1]:
                yield tuple(path)
            return
        for y in sorted(R.neighbors(path[-1])):
            if y not in used:
                path.append(y)
                used.add(y)
                yield from extend()
                path.pop()
                used.discard(y)

    yield from extend()


def hamiltonian_decide(R: SimpleGraph) -> Decision:
    """Exact Hamiltonicity for connected cubic graphs, least cycle on YES."""
    require_cubic(R)
    if len(connected_components(R)) > 1:
        raise ValueError("the cubic graph must be connected")
    for cyc in enumerate_hamiltonian_cycles(R):
        return Decision("yes", cyc, "least Hamiltonian cycle")
    return Decision("no", None, "exhausted all vertex orders")


def _bits(m):
    while m:
        b = m & -m
        m ^= b
        yield b.bit_length() - 1


def _bit_lc(rows, v):
    m = rows[v]
    out = list(rows)
    for i in _bits(m):
        out[i] ^= m & ~(1 << i)
    return tuple(out)


class _ElimSearch:
    """Three-option elimination over a fixed victim order.

    Graph states are tuples of neighbor bitmasks restricted to the alive
    vertices, so identical states reached along different prefixes share one
    failure verdict through the memo.  In deterministic mode the whole tree
    is walked and the least ops sequence among accepting leaves is kept; in
    fast mode the first accepting leaf wins.
    """

    def __init__(self, G, keep, budget=None, deterministic=False, connected_target=True):
        self.labels = G.vertices
        index = {v: i for i, v in enumerate(self.labels)}
        n = len(self.labels)
        rows = [0] * n
        for u, v in G.edges:
            rows[index[u]] |= 1 << index[v]
            rows[index[v]] |= 1 << index[u]
        self.rows0 = tuple(rows)
        self.wmask = 0
        for v in keep:
            self.wmask |= 1 << index[v]
        self.victims = [i for i in range(n) if not (self.wmask >> i) & 1]
        self.budget = budget
        self.deterministic = deterministic
        self.connected_target = connected_target
        self.accept = None  # rows -> None | (extra ops tuple, payload)
        self.nodes = 0

    def run(self):
        self.best = None
        self.memo = set()
        alive = (1 << len(self.labels)) - 1
        res = self._walk(self.rows0, alive, 0, [])
        return self.best if self.deterministic else res

    def _together(self, rows):
        # the kept vertices must share a component; complementation never
        # splits or merges components and deletion never merges them
        want = self.wmask
        comp = want & -want
        frontier = comp
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= rows[i]
            frontier = nxt & ~comp
            comp |= frontier
        return want & ~comp == 0

    def _options(self, rows, v):
        yield [], rows
        nb = rows[v]
        if nb.bit_count() >= 2:
            yield [("LC", self.labels[v])], _bit_lc(rows, v)
        if nb:
            u = (nb & -nb).bit_length() - 1
            piv = _bit_lc(_bit_lc(_bit_lc(rows, v), u), v)
            lv, lu = self.labels[v], self.labels[u]
            yield [("LC", lv), ("LC", lu), ("LC", lv)], piv

    def _walk(self, rows, alive, p, prefix):
        # fast mode returns the first (ops, payload); deterministic mode
        # returns whether the subtree accepted anywhere and tracks the best
        if self.connected_target and self.wmask and not self._together(rows):
            return None if not self.deterministic else False
        if p == len(self.victims):
            got = self.accept(rows)
            if got is None:
                return None if not self.deterministic else False
            extra, payload = got
            cand = (tuple(prefix) + tuple(extra), payload)
            if not self.deterministic:
                return cand
            if self.best is None or cand[0] < self.best[0]:
                self.best = cand
            return True
        key = (alive, rows)
        if key in self.memo:
            return None if not self.deterministic else False
        v = self.victims[p]
        vb = 1 << v
        label = self.labels[v]
        accepted = False
        for ops, nrows in self._options(rows, v):
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise ResourceLimitError(
                    f"elimination search exceeded {self.budget} steps",
                    count=self.nodes,
                )
            drows = tuple(0 if i == v else r & ~vb for i, r in enumerate(nrows))
            res = self._walk(drows, alive & ~vb, p + 1, prefix + ops + [("DEL", label)])
            if self.deterministic:
                accepted = accepted or res
            elif res is not None:
                return res
        if not accepted:
            self.memo.add(key)
        return None if not self.deterministic else accepted


def _make_star_accept(wmask, labels, k):
    wbits = list(_bits(wmask))
    least = wbits[0]

    def accept(rows):
        if all(rows[i] == wmask ^ (1 << i) for i in wbits):
            if k >= 3:
                # a complete survivor is one complementation away from a star
                return (("LC", labels[least]),), least
            return (), least
        for c in wbits:
            if rows[c] == wmask ^ (1 << c):
                if all(rows[u] == 1 << c for u in wbits if u != c):
                    return (), c
        return None

    return accept


def _star_task(G, k, budget, deterministic, subset):
    eng = _ElimSearch(G, subset, budget=budget, deterministic=deterministic)
    eng.accept = _make_star_accept(eng.wmask, eng.labels, k)
    try:
        res = eng.run()
    except ResourceLimitError as e:
        return ("unknown", e.count)
    if res is None:
        return ("no", None)
    ops, center = res
    return ("yes", (ops, eng.labels[center]))


def _scan_subsets(task, subsets, workers):
    """First lexicographic YES, else the number of unsettled subsets.

    pmap preserves input order, so the outcome is the same for any worker
    count.
    """
    chunk = max(1, workers) * 16
    unknown = 0
    for i in range(0, len(subsets), chunk):
        block = subsets[i : i + chunk]
        for subset, (tag, payload) in zip(block, pmap(task, block, workers=workers)):
            if tag == "yes":
                return subset, payload, unknown
            if tag == "unknown":
                unknown += 1
    return None, None, unknown


def star_vm_decide(G: SimpleGraph, k: int, budget=None, deterministic=False, workers=1) -> Decision:
    """Does some k-subset V' of V(G) carry a star on V' as a vertex-minor?

    Acceptance at the leaves is classification of the survivor as a star or
    a complete graph, which for k >= 3 is exactly membership in the local
    complementation orbit of the star.  Subsets are scanned in lexicographic
    order and the first accepting one is reported.
    """
    n = len(G.vertices)
    if not 1 <= k <= n:
        raise ValueError(f"k must be between 1 and {n}")
    _, H = reduce_starvm_to_isovm(G, k)
    if k == 1:
        v = G.vertices[0]
        ops = tuple(("DEL", u) for u in G.vertices if u != v)
        w = _require_verified(G, H, VmWitness(ops, ((v, H.vertices[0]),)))
        return Decision("yes", (frozenset((v,)), w), "single vertex")
    comps = connected_components(G)
    subsets = [s for s in combinations(G.vertices, k) if any(set(s) <= c for c in comps)]
    task = partial(_star_task, G, k, budget, deterministic)
    subset, payload, unknown = _scan_subsets(task, subsets, workers)
    if subset is not None:
        ops, center = payload
        leaves = sorted(set(subset) - {center})
        iso = [(center, H.vertices[0])] + list(zip(leaves, H.vertices[1:]))
        w = _require_verified(G, H, VmWitness(tuple(ops), tuple(iso)))
        return Decision("yes", (frozenset(subset), w), f"V' = {{{' '.join(sorted(subset))}}}")
    if unknown:
        return Decision("unknown", None, f"{unknown} subsets hit the budget")
    return Decision("no", None, "exhausted all candidate subsets")


def _orbit_graphs(H, cap):
    """The LC orbit of H as concrete graphs, with the word reaching each."""
    return [(SimpleGraph(H.vertices, e), w) for e, w in _orbit_words(H, cap).items()]


def _make_iso_accept(wmask, labels, horbit, hsizes, cache):
    wbits = list(_bits(wmask))
    wlabels = tuple(labels[i] for i in wbits)

    def accept(rows):
        edges = []
        for i in wbits:
            for j in _bits(rows[i]):
                if j > i:
                    edges.append((labels[i], labels[j]))
        S = SimpleGraph(wlabels, edges)
        key = S.edges
        if key in cache:
            return cache[key]
        res = None
        if sorted(len(c) for c in connected_components(S)) == hsizes:
            for M, word in horbit:
                psi = find_isomorphism(S, M)
                if psi is None:
                    continue
                # undo the word that led from H to M, transported through psi
                inv = {t: s for s, t in psi.items()}
                back = tuple(("LC", inv[x]) for x in reversed(word))
                res = (back, tuple(psi.items()))
                break
        cache[key] = res
        return res

    return accept


def _iso_task(G, H, horbit_edges, budget, deterministic, subset):
    horbit = [(SimpleGraph(H.vertices, e), w) for e, w in horbit_edges]
    hsizes = sorted(len(c) for c in connected_components(H))
    connected_h = len(hsizes) == 1
    eng = _ElimSearch(G, subset, budget=budget, deterministic=deterministic,
                      connected_target=connected_h)
    cache = {}
    eng.accept = _make_iso_accept(eng.wmask, eng.labels, horbit, hsizes, cache)
    try:
        res = eng.run()
    except ResourceLimitError as e:
        return ("unknown", e.count)
    if res is None:
        return ("no", None)
    ops, iso = res
    return ("yes", (ops, iso))


def iso_vm_decide(G: SimpleGraph, H: SimpleGraph, budget=None, deterministic=False,
                  workers=1, orbit_cap=DEFAULT_NODE_CAP) -> Decision:
    """Does G have a vertex-minor isomorphic to H?

    Same elimination search as star_vm_decide; a leaf survivor S is accepted
    when S is isomorphic to some member of the local complementation orbit
    of H, computed once up front.  That is equivalent to S's own orbit
    meeting the isomorphism class of H, because orbits are equivalence
    classes.  If the orbit of H overflows orbit_cap the decision is UNKNOWN.
    """
    if not H.vertices:
        raise ValueError("H must have at least one vertex")
    if len(H.vertices) > len(G.vertices):
        raise ValueError("H must not have more vertices than G")
    try:
        horbit = _orbit_graphs(H, orbit_cap)
    except ResourceLimitError as e:
        return Decision("unknown", None, f"orbit of H overflowed: {e}")
    horbit_edges = [(M.edges, w) for M, w in horbit]
    k = len(H.vertices)
    if len(connected_components(H)) == 1:
        comps = connected_components(G)
        subsets = [s for s in combinations(G.vertices, k)
                   if any(set(s) <= c for c in comps)]
    else:
        subsets = list(combinations(G.vertices, k))
    task = partial(_iso_task, G, H, horbit_edges, budget, deterministic)
    subset, payload, unknown = _scan_subsets(task, subsets, workers)
    if subset is not None:
        ops, iso = payload
        w = _require_verified(G, H, VmWitness(tuple(ops), iso))
        return Decision("yes", (frozenset(subset), w), f"V' = {{{' '.join(sorted(subset))}}}")
    if unknown:
        return Decision("unknown", None, f"{unknown} subsets hit the budget")
    return Decision("no", None, "exhausted all candidate subsets")


def labeled_vm_decide(G: SimpleGraph, H: SimpleGraph, budget=None,
                      orbit_cap=DEFAULT_NODE_CAP) -> Decision:
    """Is H, labels and all, reachable from G by complementations and deletions?

    The subset is fixed to V(H); a survivor is accepted exactly when it lies
    in the orbit of H, looked up in a precomputed edge-set table.  This is
    the labeled primitive the isomorphic deciders are cross-checked against.
    """
    missing = sorted(set(H.vertices) - set(G.vertices))
    if missing:
        raise ValueError(f"H vertex {missing[0]!r} is not a vertex of G")
    try:
        words = _orbit_words(H, orbit_cap)
    except ResourceLimitError as e:
        return Decision("unknown", None, f"orbit of H overflowed: {e}")
    eng = _ElimSearch(G, H.vertices, budget=budget,
                      connected_target=len(connected_components(H)) == 1)

    def accept(rows):
        edges = []
        for i in _bits(eng.wmask):
            for j in _bits(rows[i]):
                if j > i:
                    edges.append((eng.labels[i], eng.labels[j]))
        S = SimpleGraph(H.vertices, edges)
        word = words.get(S.edges)
        if word is None:
            return None
        return tuple(("LC", x) for x in reversed(word)), None

    eng.accept = accept
    try:
        res = eng.run()
    except ResourceLimitError as e:
        return Decision("unknown", None, f"{e}")
    if res is None:
        return Decision("no", None, "exhausted the elimination tree")
    ops, _ = res
    w = _require_verified(G, H, VmWitness(ops, tuple((v, v) for v in H.vertices)))
    return Decision("yes", w, "labeled elimination")


def vertex_minor_closure(G: SimpleGraph, node_cap: int = DEFAULT_NODE_CAP):
    """Every labeled graph reachable from G by complementations and deletions.

    Plain breadth-first closure, the ground truth the elimination search is
    validated against.  Grows fast; meant for small graphs only.
    """
    seen = {G}
    queue = [G]
    while queue:
        nxt = []
        for cur in queue:
            images = []
            for v in cur.vertices:
                if cur.degree(v) >= 2:
                    images.append(local_complement(cur, v))
                if len(cur.vertices) > 1:
                    images.append(delete_vertex(cur, v))
            for M in images:
                if M not in seen:
                    if len(seen) >= node_cap:
                        raise ResourceLimitError(
                            f"closure exceeded {node_cap} graphs", count=len(seen)
                        )
                    seen.add(M)
                    nxt.append(M)
        queue = nxt
    return frozenset(seen)


@lru_cache(maxsize=32)
def _tour_words(F):
    """All Eulerian tour classes of F as (canonical tour, induced word)."""
    return tuple(
        (canonical_tour(U), induced_word(U)) for U in enumerate_euler_tours(F)
    )


def vm_oracle_via_tours(F, H: SimpleGraph, limit=None) -> Decision:
    """Tour-based labeled vertex-minor oracle over the circle graphs of F.

    Scans Eulerian tour classes of F for one whose induced sub-word over
    V(H) has alternance graph exactly H.  Independent of the elimination
    machinery; the YES witness is assembled against the deterministic tour's
    alternance graph and checked like any other.  Tour classes are cached
    per multigraph so repeated targets on one F cost one enumeration.
    """
    want = set(H.vertices)
    missing = sorted(want - set(F.vertices))
    if missing:
        raise ValueError(f"H vertex {missing[0]!r} is not a vertex of F")
    G0 = alternance_graph(induced_word(find_euler_tour(F)))
    if limit is None:
        classes = _tour_words(F)
    else:
        try:
            classes = [
                (canonical_tour(U), induced_word(U))
                for U in enumerate_euler_tours(F, limit=limit)
            ]
        except ResourceLimitError as e:
            return Decision("unknown", None, str(e))
    for U, word in classes:
        if alternance_graph(induced_subword(word, want)) != H:
            continue
        lcw = lc_word_between(G0, alternance_graph(word))
        if lcw is None:
            raise RuntimeError("tour alternance graph escaped the LC orbit")
        ops = tuple(("LC", x) for x in lcw) + tuple(
            ("DEL", v) for v in G0.vertices if v not in want
        )
        w = VmWitness(ops, tuple((v, v) for v in sorted(want)))
        _require_verified(G0, H, w)
        return Decision("yes", w, f"tour {induced_word(U).to_text()}")
    return Decision("no", None, "all tour classes enumerated")
