"""Finite connected posets: relations, chains, crowns, semiwalks, symmetries.

Elements are indexed ``0..n-1`` in input order; every derived sequence is
sorted by index so results are reproducible across runs.  All structures are
immutable after construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    CycleError,
    DisconnectedError,
    ParseError,
    PreconditionError,
)


class MapKind(enum.Enum):
    ISO = "iso"
    ANTI = "anti"


@dataclass(frozen=True)
class PosetMap:
    """An element bijection tagged as order-isomorphism or anti-isomorphism."""

    perm: tuple[int, ...]
    kind: MapKind

    def __call__(self, x):
        return self.perm[x]

    def inverse(self):
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return PosetMap(tuple(inv), self.kind)

    def compose(self, other):
        """self after other; two anti maps compose to an isomorphism."""
        perm = tuple(self.perm[j] for j in other.perm)
        kind = MapKind.ISO if self.kind == other.kind else MapKind.ANTI
        return PosetMap(perm, kind)


@dataclass(frozen=True)
class WeakCrown:
    """An alternating cycle x1 < y1 > x2 < y2 > ... > x1 of distinct elements.

    Stored in canonical form: lexicographically minimal (mins, maxs) pair
    over all rotations and both orientations.
    """

    mins: tuple[int, ...]
    maxs: tuple[int, ...]

    @property
    def size(self):
        return len(self.mins)

    def cycle(self):
        """The crown as a closed semiwalk x1, y1, x2, ..., yk, x1."""
        walk = []
        for x, y in zip(self.mins, self.maxs):
            walk.append(x)
            walk.append(y)
        walk.append(self.mins[0])
        return tuple(walk)


def _canonical_crown(mins, maxs):
    k = len(mins)
    # reversal: traverse the cycle backwards starting from mins[0]
    rev_mins = (mins[0],) + tuple(reversed(mins[1:]))
    rev_maxs = tuple(reversed(maxs))
    best = None
    for xs, ys in ((tuple(mins), tuple(maxs)), (rev_mins, rev_maxs)):
        for r in range(k):
            cand = (xs[r:] + xs[:r], ys[r:] + ys[:r])
            if best is None or cand < best:
                best = cand
    return best


class Poset:
    """A finite connected partial order on indexed elements."""

    def __init__(self, names, leq):
        names = tuple(names)
        n = len(names)
        if n == 0:
            raise ParseError("a poset needs at least one element")
        if len(set(names)) != n:
            raise ParseError("duplicate element labels")
        leq = tuple(tuple(bool(v) for v in row) for row in leq)
        if len(leq) != n or any(len(row) != n for row in leq):
            raise ParseError("relation matrix must be %dx%d" % (n, n))
        for i in range(n):
            if not leq[i][i]:
                raise ParseError("relation must be reflexive")
            for j in range(n):
                if i != j and leq[i][j] and leq[j][i]:
                    raise CycleError(
                        "antisymmetry violated at %r, %r" % (names[i], names[j])
                    )
                for k in range(n):
                    if leq[i][j] and leq[j][k] and not leq[i][k]:
                        raise ParseError("relation must be transitive")
        self.names = names
        self.n = n
        self.leq_matrix = leq
        self._check_connected()

    @classmethod
    def from_relations(cls, names, pairs):
        """Build from arbitrary strict pairs; the transitive closure is taken."""
        names = tuple(names)
        n = len(names)
        below = [set() for _ in range(n)]  # below[j] = {i : i < j}
        for a, b in pairs:
            if a == b:
                raise CycleError("self-relation at %r" % (names[a],))
            below[b].add(a)
        changed = True
        while changed:
            changed = False
            for j in range(n):
                extra = set()
                for i in below[j]:
                    extra |= below[i]
                if not extra <= below[j]:
                    below[j] |= extra
                    changed = True
        for j in range(n):
            if j in below[j]:
                raise CycleError("cycle through %r" % (names[j],))
        leq = [[i == j or i in below[j] for j in range(n)] for i in range(n)]
        return cls(names, leq)

    def _check_connected(self):
        seen = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for j in range(self.n):
                if j not in seen and (self.leq_matrix[i][j] or self.leq_matrix[j][i]):
                    seen.add(j)
                    frontier.append(j)
        if len(seen) != self.n:
            missing = min(set(range(self.n)) - seen)
            raise DisconnectedError(
                "element %r is not reachable from %r"
                % (self.names[missing], self.names[0])
            )

    # -- basic relation queries ------------------------------------------

    def leq(self, i, j):
        return self.leq_matrix[i][j]

    def lt(self, i, j):
        return i != j and self.leq_matrix[i][j]

    def index(self, label):
        try:
            return self.names.index(label)
        except ValueError:
            raise KeyError("no element labeled %r" % (label,)) from None

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.names == other.names
            and self.leq_matrix == other.leq_matrix
        )

    def __hash__(self):
        return hash((self.names, self.leq_matrix))

    def __repr__(self):
        return "Poset(%d elements, %d strict pairs)" % (self.n, len(self.strict_pairs))

    # -- derived structure -----------------------------------------------

    @cached_property
    def strict_pairs(self):
        """The basis index set: all (x, y) with x < y, sorted."""
        return tuple(
            (i, j) for i in range(self.n) for j in range(self.n) if self.lt(i, j)
        )

    @cached_property
    def pair_index(self):
        return {p: k for k, p in enumerate(self.strict_pairs)}

    @cached_property
    def all_pairs(self):
        """All (x, y) with x <= y, sorted; the incidence-algebra basis."""
        return tuple(
            (i, j) for i in range(self.n) for j in range(self.n) if self.leq_matrix[i][j]
        )

    @cached_property
    def all_pair_index(self):
        return {p: k for k, p in enumerate(self.all_pairs)}

    @cached_property
    def above(self):
        return tuple(
            tuple(j for j in range(self.n) if self.lt(i, j)) for i in range(self.n)
        )

    @cached_property
    def below(self):
        return tuple(
            tuple(j for j in range(self.n) if self.lt(j, i)) for i in range(self.n)
        )

    @cached_property
    def covers(self):
        """Hasse edges: (i, j) with i < j and nothing strictly between."""
        out = []
        for i, j in self.strict_pairs:
            if not any(self.lt(i, k) and self.lt(k, j) for k in range(self.n)):
                out.append((i, j))
        return tuple(out)

    @cached_property
    def upper_covers(self):
        out = [[] for _ in range(self.n)]
        for i, j in self.covers:
            out[i].append(j)
        return tuple(tuple(v) for v in out)

    @cached_property
    def min_set(self):
        return tuple(i for i in range(self.n) if not self.below[i])

    @cached_property
    def max_set(self):
        return tuple(i for i in range(self.n) if not self.above[i])

    @cached_property
    def length(self):
        """Maximum chain length, |C| - 1."""
        return max(len(c) for c in self.maximal_chains) - 1

    @cached_property
    def _topo_rank(self):
        # any linear extension: sort by number of elements below, then index
        order = sorted(range(self.n), key=lambda i: (len(self.below[i]), i))
        rank = [0] * self.n
        for pos, i in enumerate(order):
            rank[i] = pos
        return tuple(rank)

    @cached_property
    def linear_extension(self):
        """Element indices in an order compatible with <."""
        return tuple(sorted(range(self.n), key=lambda i: self._topo_rank[i]))

    @cached_property
    def maximal_chains(self):
        """All maximal chains, as index tuples, in lexicographic order."""
        out = []
        max_set = set(self.max_set)

        def grow(chain):
            last = chain[-1]
            if last in max_set:
                out.append(tuple(chain))
                return
            for j in self.upper_covers[last]:
                chain.append(j)
                grow(chain)
                chain.pop()

        for i in self.min_set:
            grow([i])
        out.sort()
        return tuple(out)

    @cached_property
    def maximal_chain_set(self):
        return frozenset(self.maximal_chains)

    def dual(self):
        """The opposite order on the same elements."""
        flipped = tuple(
            tuple(self.leq_matrix[j][i] for j in range(self.n)) for i in range(self.n)
        )
        return Poset(self.names, flipped)

    def label_chain(self, chain):
        return tuple(self.names[i] for i in chain)


# -- parsing ---------------------------------------------------------------


def parse_poset(text):
    """Parse the line-based ``poset v1`` file format into a Poset.

    Comments start with ``#``; blank lines are ignored.  Relations are
    arbitrary strict pairs ``a<b``; their transitive closure is computed.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if len(lines) != 3:
        raise ParseError("expected exactly 3 content lines, found %d" % len(lines))
    if lines[0] != "poset v1":
        raise ParseError("bad header %r (expected 'poset v1')" % lines[0])
    if not lines[1].startswith("elements:"):
        raise ParseError("second line must start with 'elements:'")
    if not lines[2].startswith("relations:"):
        raise ParseError("third line must start with 'relations:'")
    names = lines[1][len("elements:"):].split()
    if not names:
        raise ParseError("no elements listed")
    if len(set(names)) != len(names):
        raise ParseError("duplicate element labels")
    index = {name: i for i, name in enumerate(names)}
    pairs = []
    for token in lines[2][len("relations:"):].split():
        if token.count("<") != 1:
            raise ParseError("bad relation token %r" % token)
        a, b = token.split("<")
        if a not in index or b not in index:
            raise ParseError("unknown element in relation %r" % token)
        pairs.append((index[a], index[b]))
    return Poset.from_relations(names, pairs)


# -- chains, crowns, semiwalks ----------------------------------------------


def maximal_chains(poset):
    """All maximal chains of the poset, each listed once, sorted."""
    return poset.maximal_chains


def weak_crowns(poset):
    """Every weak crown of the poset, canonicalized, of every size k >= 2.

    A weak crown is recorded as its alternating-cycle labeling; the same
    2k-element subset can carry several inequivalent labelings and each is
    returned once.
    """
    found = set()
    lt = poset.lt
    above = poset.above
    below = poset.below

    # rotations keep low positions low, so each cycle is generated with its
    # smallest low element first; later lows must stay above the anchor
    def extend(mins, maxs, used):
        anchor = mins[0]
        if len(mins) == len(maxs):
            # complete pair list: try closing, then opening a new (x, y) slot
            if len(mins) >= 2 and lt(anchor, maxs[-1]):
                found.add(WeakCrown(*_canonical_crown(mins, maxs)))
            for x in below[maxs[-1]]:
                if x > anchor and x not in used:
                    mins.append(x)
                    used.add(x)
                    extend(mins, maxs, used)
                    used.discard(x)
                    mins.pop()
        else:
            for y in above[mins[-1]]:
                if y not in used:
                    maxs.append(y)
                    used.add(y)
                    extend(mins, maxs, used)
                    used.discard(y)
                    maxs.pop()

    for x1 in range(poset.n):
        for y1 in above[x1]:
            extend([x1], [y1], {x1, y1})
    return tuple(sorted(found, key=lambda c: (c.size, c.mins, c.maxs)))


def closed_semiwalks(poset, max_length):
    """All closed semiwalks of length 2..max_length, raw (no identification)."""
    if max_length < 2:
        raise PreconditionError("semiwalk length bound must be at least 2")
    neighbors = tuple(
        tuple(sorted(poset.above[i] + poset.below[i])) for i in range(poset.n)
    )
    out = []

    def walk(path):
        u = path[-1]
        depth = len(path) - 1
        if depth >= 2 and u == path[0]:
            out.append(tuple(path))
        if depth == max_length:
            return
        for v in neighbors[u]:
            path.append(v)
            walk(path)
            path.pop()

    for start in range(poset.n):
        walk([start])
    return tuple(out)


# -- poset symmetries --------------------------------------------------------


def _signatures(poset):
    # (|below|, |above|, height, depth) is invariant under isomorphism
    depth = [0] * poset.n
    for i in range(poset.n):
        depth[i] = max(
            (len(c) - 1 - c.index(i) for c in poset.maximal_chains if i in c),
            default=0,
        )
    heights = [0] * poset.n
    for i in range(poset.n):
        heights[i] = max(
            (c.index(i) for c in poset.maximal_chains if i in c), default=0
        )
    return tuple(
        (len(poset.below[i]), len(poset.above[i]), heights[i], depth[i])
        for i in range(poset.n)
    )


def order_isomorphisms(source, target):
    """All bijections f with x <= y iff f(x) <= f(y), as permutation tuples."""
    if source.n != target.n or len(source.strict_pairs) != len(target.strict_pairs):
        return []
    sig_s = _signatures(source)
    sig_t = _signatures(target)
    candidates = [
        tuple(j for j in range(target.n) if sig_t[j] == sig_s[i])
        for i in range(source.n)
    ]
    if any(not c for c in candidates):
        return []
    order = sorted(range(source.n), key=lambda i: len(candidates[i]))
    leq_s = source.leq_matrix
    leq_t = target.leq_matrix
    image = [-1] * source.n
    used = [False] * target.n
    results = []

    def assign(k):
        if k == source.n:
            results.append(tuple(image))
            return
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for i2 in order[:k]:
                j2 = image[i2]
                if leq_s[i][i2] != leq_t[j][j2] or leq_s[i2][i] != leq_t[j2][j]:
                    ok = False
                    break
            if ok:
                image[i] = j
                used[j] = True
                assign(k + 1)
                used[j] = False
                image[i] = -1

    assign(0)
    results.sort()
    return results


def is_isomorphic(source, target):
    return bool(order_isomorphisms(source, target))


def poset_maps(poset):
    """All automorphisms and anti-automorphisms, sorted (Iso first)."""
    isos = [PosetMap(p, MapKind.ISO) for p in order_isomorphisms(poset, poset)]
    if poset.n == 1:
        return tuple(isos)
    antis = [
        PosetMap(p, MapKind.ANTI) for p in order_isomorphisms(poset, poset.dual())
    ]
    return tuple(isos + antis)
