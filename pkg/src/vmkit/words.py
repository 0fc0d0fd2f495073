"""Double-occurrence words, their cyclic classes, and alternance graphs.

A double-occurrence word (DOW) is a word in which every letter occurs exactly
twice; it is read cyclically, and two words are equivalent when one is a
rotation of the other or of its mirror.  Two letters u, v alternate when
exactly one occurrence of v lies cyclically strictly between the two
occurrences of u; the graph of all alternances is the circle graph of the
word.  Local complementation, vertex deletion, and induced subgraphs all have
word-level counterparts that commute with the alternance map.
"""

from .graphs import MultiGraph, SimpleGraph


class Dow:
    """A double-occurrence word over string letters."""

    def __init__(self, letters=()):
        letters = tuple(letters)
        counts = {}
        for x in letters:
            if not isinstance(x, str) or not x:
                raise ValueError(f"letter must be a non-empty string, got {x!r}")
            counts[x] = counts.get(x, 0) + 1
        for x, c in counts.items():
            if c != 2:
                raise ValueError(f"letter {x!r} occurs {c} times, expected 2")
        self.letters = letters
        self._vset = frozenset(counts)

    @classmethod
    def from_text(cls, text: str) -> "Dow":
        """Parse "a d c b a e b c e d"; a lone unspaced token such as
        "adcbaebced" is split into single-character letters."""
        tokens = text.split()
        if len(tokens) == 1 and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        return cls(tokens)

    def to_text(self) -> str:
        return " ".join(self.letters)

    def vertex_set(self):
        return self._vset

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Dow):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Dow({self.to_text()!r})"


def mirror(X: Dow) -> Dow:
    return Dow(tuple(reversed(X.letters)))


def _least_rotation(seq):
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


class DowClass:
    """Equivalence class of a DOW under rotation and mirror.

    The canonical representative is the least word over all rotations of the
    word and of its mirror.
    """

    def __init__(self, word: Dow):
        fwd = _least_rotation(word.letters)
        bwd = _least_rotation(tuple(reversed(word.letters)))
        self.canonical = Dow(min(fwd, bwd))

    def __eq__(self, other):
        if not isinstance(other, DowClass):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"DowClass({self.canonical.to_text()!r})"


def canonicalize(X: Dow) -> DowClass:
    return DowClass(X)


def alternances(X: Dow):
    """Set of unordered alternating pairs of X.

    {u, v} alternates iff exactly one occurrence of v lies cyclically strictly
    between the two occurrences of u.  The criterion is symmetric in u and v
    and invariant under rotation and mirror of the word.
    """
    pos = {}
    for i, x in enumerate(X.letters):
        pos.setdefault(x, []).append(i)
    out = set()
    letters = sorted(pos)
    for i, u in enumerate(letters):
        p1, p2 = pos[u]
        for v in letters[i + 1:]:
            between = sum(1 for q in pos[v] if p1 < q < p2)
            if between == 1:
                out.add(frozenset((u, v)))
    return out


def alternance_graph(X: Dow) -> SimpleGraph:
    """The circle graph of X: vertices V(X), edges the alternances."""
    return SimpleGraph(X.vertex_set(), [tuple(sorted(p)) for p in alternances(X)])


def _occurrences(X, v):
    ps = [i for i, x in enumerate(X.letters) if x == v]
    if not ps:
        raise ValueError(f"letter {v!r} does not occur")
    return ps


def word_local_complement(X: Dow, v: str) -> Dow:
    """Reverse the subword strictly between the two occurrences of v."""
    p1, p2 = _occurrences(X, v)
    ls = X.letters
    return Dow(ls[: p1 + 1] + tuple(reversed(ls[p1 + 1 : p2])) + ls[p2:])


def word_delete(X: Dow, v: str) -> Dow:
    """Remove both occurrences of v."""
    _occurrences(X, v)
    return Dow(x for x in X.letters if x != v)


def induced_subword(X: Dow, W) -> Dow:
    """Keep only letters of W (which must all occur in X)."""
    W = set(W)
    missing = sorted(W - X.vertex_set())
    if missing:
        raise ValueError(f"letter {missing[0]!r} does not occur")
    return Dow(x for x in X.letters if x in W)


def multigraph_from_word(X: Dow) -> MultiGraph:
    """4-regular multigraph traced by the word.

    One edge per cyclically consecutive pair of letters, edge ids in position
    order; doubled adjacencies give parallel edges and an adjacent pair of
    equal letters gives a loop.
    """
    if len(X) == 0:
        raise ValueError("empty word traces no multigraph")
    ls = X.letters
    n = len(ls)
    edges = [(ls[i], ls[(i + 1) % n]) for i in range(n)]
    return MultiGraph(X.vertex_set(), edges)
