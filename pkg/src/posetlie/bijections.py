"""Edge bijections of the strict-pair basis: monotonicity, admissibility,
properness, and the exhaustive enumerators for the three bijection groups.

An EdgeBijection permutes the canonical index set of B = {(x, y) : x < y}.
The three groups satisfy proper <= admissible-monotone <= monotone, and the
enumerators return canonical (sorted) results so runs are reproducible.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import BoundExceeded, PreconditionError, WellDefinednessError
from .fields import RATIONALS
from .poset import MapKind, weak_crowns

DEFAULT_BOUND = 9  # largest |B| an exhaustive S(B) sweep will attempt


class Direction(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    BOTH = "both"  # two-element chains, where both conditions coincide
    NONE = "none"


class CountStats(NamedTuple):
    """The four signed step counts of a bijection along a closed semiwalk."""

    s_plus: int
    s_minus: int
    t_plus: int
    t_minus: int

    def balanced(self):
        return self.s_plus - self.s_minus == self.t_plus - self.t_minus


@dataclass(frozen=True)
class EdgeBijection:
    """A permutation of the canonical strict-pair basis."""

    perm: tuple[int, ...]

    @classmethod
    def identity(cls, size):
        return cls(tuple(range(size)))

    def compose(self, other):
        """self after other."""
        return EdgeBijection(tuple(self.perm[k] for k in other.perm))

    def inverse(self):
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return EdgeBijection(tuple(inv))

    def apply_pair(self, poset, pair):
        return poset.strict_pairs[self.perm[poset.pair_index[pair]]]

    def __lt__(self, other):
        return self.perm < other.perm

    def to_json(self, poset):
        return [
            [list(pair), list(poset.strict_pairs[self.perm[k]])]
            for k, pair in enumerate(poset.strict_pairs)
        ]

    @classmethod
    def from_json(cls, poset, data):
        perm = [0] * len(poset.strict_pairs)
        for src, dst in data:
            perm[poset.pair_index[tuple(src)]] = poset.pair_index[tuple(dst)]
        return cls(tuple(perm))


@dataclass(frozen=True)
class SignMap:
    """Nonzero scalars attached to every strict pair."""

    values: object  # mapping (x, y) -> field scalar

    def __call__(self, x, y):
        return self.values[(x, y)]


# -- monotonicity -------------------------------------------------------------


def image_chain(poset, theta, chain):
    """Direction of theta on a maximal chain and the reconstructed image chain.

    Candidate endpoints come from the image of the full span pair, interior
    vertices from the images of the prefix pairs; every pair is then checked
    and the image is required to be a maximal chain.
    """
    pairs = poset.strict_pairs
    index = poset.pair_index
    perm = theta.perm

    def th(a, b):
        return pairs[perm[index[(a, b)]]]

    m = len(chain)
    if m == 1:
        return Direction.BOTH, chain
    if m == 2:
        img = th(chain[0], chain[1])
        if img in poset.maximal_chain_set:
            return Direction.BOTH, img
        return Direction.NONE, None
    lo, hi = th(chain[0], chain[-1])

    candidate = [lo] + [th(chain[0], chain[i])[1] for i in range(1, m - 1)] + [hi]
    if (
        all(th(chain[0], chain[i])[0] == lo for i in range(1, m - 1))
        and tuple(candidate) in poset.maximal_chain_set
        and all(
            th(chain[i], chain[j]) == (candidate[i], candidate[j])
            for i in range(m)
            for j in range(i + 1, m)
        )
    ):
        return Direction.INCREASING, tuple(candidate)

    candidate = [lo] + [th(chain[0], chain[i])[0] for i in range(m - 2, 0, -1)] + [hi]
    if (
        all(th(chain[0], chain[i])[1] == hi for i in range(1, m - 1))
        and tuple(candidate) in poset.maximal_chain_set
        and all(
            th(chain[i], chain[j]) == (candidate[m - 1 - j], candidate[m - 1 - i])
            for i in range(m)
            for j in range(i + 1, m)
        )
    ):
        return Direction.DECREASING, tuple(candidate)
    return Direction.NONE, None


def monotone_direction(poset, theta, chain):
    if chain not in poset.maximal_chain_set:
        raise PreconditionError("chain %r is not maximal" % (chain,))
    return image_chain(poset, theta, chain)[0]


def in_M(poset, theta):
    """Whether theta is increasing or decreasing on every maximal chain."""
    return all(
        image_chain(poset, theta, c)[0] != Direction.NONE
        for c in poset.maximal_chains
    )


# -- the counting identity ----------------------------------------------------


def count_stats(poset, theta, walk, z):
    """The four step counts, computed literally by searching witnesses w."""
    if walk[0] != walk[-1] or len(walk) < 2:
        raise PreconditionError("walk must be closed")
    pairs = poset.strict_pairs
    index = poset.pair_index
    perm = theta.perm

    def th(a, b):
        return pairs[perm[index[(a, b)]]]

    s_plus = s_minus = t_plus = t_minus = 0
    for i in range(len(walk) - 1):
        u, v = walk[i], walk[i + 1]
        if poset.lt(u, v):
            edge = (u, v)
            if any(th(z, w) == edge for w in poset.above[z]):
                s_plus += 1
            if any(th(w, z) == edge for w in poset.below[z]):
                t_plus += 1
        elif poset.lt(v, u):
            edge = (v, u)
            if any(th(z, w) == edge for w in poset.above[z]):
                s_minus += 1
            if any(th(w, z) == edge for w in poset.below[z]):
                t_minus += 1
        else:
            raise PreconditionError("walk steps must join comparable elements")
    return CountStats(s_plus, s_minus, t_plus, t_minus)


def _steps_of_walk(poset, walk):
    """Signed strict-pair indices along a semiwalk (+ up, - down)."""
    steps = []
    for i in range(len(walk) - 1):
        u, v = walk[i], walk[i + 1]
        if poset.lt(u, v):
            steps.append((poset.pair_index[(u, v)], 1))
        else:
            steps.append((poset.pair_index[(v, u)], -1))
    return tuple(steps)


@lru_cache(maxsize=None)
def _crown_steps(poset):
    return tuple(_steps_of_walk(poset, c.cycle()) for c in weak_crowns(poset))


def _balanced_on_steps(poset, inverse_perm, steps_lists):
    """Check s+ - s- = t+ - t- at every element, for each step list.

    For a step with edge b and sign s, the preimage pair (p, q) of b under
    theta contributes s to (s+ - s-) at p and s to (t+ - t-) at q, so the
    identity holds iff the signed difference (delta_p - delta_q) sums to
    zero over the steps.
    """
    pairs = poset.strict_pairs
    acc = [0] * poset.n
    for steps in steps_lists:
        for b, sign in steps:
            p, q = pairs[inverse_perm[b]]
            acc[p] += sign
            acc[q] -= sign
        ok = True
        for b, _ in steps:
            p, q = pairs[inverse_perm[b]]
            if acc[p] or acc[q]:
                ok = False
            acc[p] = 0
            acc[q] = 0
        if not ok:
            return False
    return True


def is_admissible(poset, theta):
    """Whether the counting identity holds on every weak crown of the poset.

    Canonical crown representatives suffice: the identity is invariant under
    cyclic shifts and orientation reversal of the cycle.
    """
    if not in_M(poset, theta):
        raise PreconditionError("bijection is not monotone on maximal chains")
    return _balanced_on_steps(poset, theta.inverse().perm, _crown_steps(poset))


@lru_cache(maxsize=None)
def _semiwalk_steps(poset, max_length):
    from .poset import closed_semiwalks

    return tuple(
        _steps_of_walk(poset, walk) for walk in closed_semiwalks(poset, max_length)
    )


def is_admissible_oracle(poset, theta, max_length):
    """Independent cross-check over every closed semiwalk up to max_length.

    Verifies the full four-count identity per element, not just crowns.
    """
    if not in_M(poset, theta):
        raise PreconditionError("bijection is not monotone on maximal chains")
    pairs = poset.strict_pairs
    inv = theta.inverse().perm
    s_acc = [0] * poset.n
    t_acc = [0] * poset.n
    for steps in _semiwalk_steps(poset, max_length):
        for b, sign in steps:
            p, q = pairs[inv[b]]
            s_acc[p] += sign
            t_acc[q] += sign
        ok = True
        for b, _ in steps:
            p, q = pairs[inv[b]]
            if s_acc[p] != t_acc[p] or s_acc[q] != t_acc[q]:
                ok = False
            s_acc[p] = t_acc[p] = 0
            s_acc[q] = t_acc[q] = 0
        if not ok:
            return False
    return True


# -- properness ----------------------------------------------------------------


def edge_map_of(poset, poset_map):
    """Restrict the induced basis permutation of a poset map to strict pairs."""
    perm = []
    for x, y in poset.strict_pairs:
        if poset_map.kind == MapKind.ISO:
            image = (poset_map.perm[x], poset_map.perm[y])
        else:
            image = (poset_map.perm[y], poset_map.perm[x])
        perm.append(poset.pair_index[image])
    return EdgeBijection(tuple(perm))


def proper_witness(poset, theta):
    """The poset (anti-)automorphism inducing theta, if one exists."""
    from .poset import poset_maps

    for candidate in poset_maps(poset):
        if edge_map_of(poset, candidate).perm == theta.perm:
            return candidate
    return None


def is_separating(poset, theta):
    """Whether some non-disjoint pair of maximal chains has disjoint images."""
    if not in_M(poset, theta):
        raise PreconditionError("bijection is not monotone on maximal chains")
    chains = poset.maximal_chains
    images = [set(image_chain(poset, theta, c)[1]) for c in chains]
    sets = [set(c) for c in chains]
    for i in range(len(chains)):
        for j in range(i + 1, len(chains)):
            if sets[i] & sets[j] and not images[i] & images[j]:
                return True
    return False


# -- enumerators ----------------------------------------------------------------


def enumerate_P(poset):
    """All proper bijections, via the poset symmetries, deduplicated."""
    from .poset import poset_maps

    seen = {}
    for candidate in poset_maps(poset):
        theta = edge_map_of(poset, candidate)
        seen.setdefault(theta.perm, theta)
    return [seen[p] for p in sorted(seen)]


def _check_bound(poset, bound):
    size = len(poset.strict_pairs)
    if size > bound:
        raise BoundExceeded(
            "|B| = %d exceeds the enumeration bound %d" % (size, bound),
            size=size,
            bound=bound,
        )


def _chain_assignment_perms(poset):
    """Monotone bijections by assigning each maximal chain an image and a
    direction, propagating pair images and rejecting conflicts."""
    chains = poset.maximal_chains
    index = poset.pair_index
    by_size = {}
    for c in chains:
        by_size.setdefault(len(c), []).append(c)

    def pair_images(chain, target, direction):
        m = len(chain)
        out = []
        for i in range(m):
            for j in range(i + 1, m):
                src = index[(chain[i], chain[j])]
                if direction == Direction.DECREASING:
                    dst = index[(target[m - 1 - j], target[m - 1 - i])]
                else:
                    dst = index[(target[i], target[j])]
                out.append((src, dst))
        return out

    image = {}
    used = set()
    results = []

    def assign(k):
        if k == len(chains):
            results.append(tuple(image[b] for b in range(len(poset.strict_pairs))))
            return
        chain = chains[k]
        directions = (
            (Direction.INCREASING,)
            if len(chain) == 2
            else (Direction.INCREASING, Direction.DECREASING)
        )
        for target in by_size[len(chain)]:
            for direction in directions:
                updates = []
                ok = True
                for src, dst in pair_images(chain, target, direction):
                    if src in image:
                        if image[src] != dst:
                            ok = False
                            break
                    elif dst in used:
                        ok = False
                        break
                    else:
                        updates.append((src, dst))
                        image[src] = dst
                        used.add(dst)
                if ok:
                    assign(k + 1)
                for src, dst in updates:
                    del image[src]
                    used.discard(dst)

    assign(0)
    results.sort()
    return results


def enumerate_M(poset, bound=DEFAULT_BOUND):
    """All monotone bijections, in canonical order (lazy).

    For length-one posets every bijection is monotone, so the full symmetric
    group on B is generated directly; otherwise chains are assigned targets
    and directions by backtracking.
    """
    _check_bound(poset, bound)
    size = len(poset.strict_pairs)
    if poset.length <= 1:
        return (
            EdgeBijection(p) for p in itertools.permutations(range(size))
        )
    return (EdgeBijection(p) for p in _chain_assignment_perms(poset))


def _scan_partition(args):
    """Admissibility sweep over the block of S(B) with a fixed first image.

    Permutations are read as the inverse of the candidate bijection, which
    lets the balance check skip inverting each one.
    """
    n, size, crown_steps, pairs, first = args
    acc = [0] * n
    rest = [v for v in range(size) if v != first]
    survivors = []
    for tail in itertools.permutations(rest):
        p = (first,) + tail
        ok = True
        for steps in crown_steps:
            for b, sign in steps:
                u, v = pairs[p[b]]
                acc[u] += sign
                acc[v] -= sign
            for b, _ in steps:
                u, v = pairs[p[b]]
                if acc[u] or acc[v]:
                    ok = False
                acc[u] = 0
                acc[v] = 0
            if not ok:
                break
        if ok:
            survivors.append(p)
    return survivors


def _scan_admissible_raw(poset, bound, jobs):
    _check_bound(poset, bound)
    size = len(poset.strict_pairs)
    crown_steps = _crown_steps(poset)
    if not crown_steps:
        return [EdgeBijection(p) for p in itertools.permutations(range(size))]
    tasks = [
        (poset.n, size, crown_steps, poset.strict_pairs, first)
        for first in range(size)
    ]
    if jobs > 1 and size > 1:
        try:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunks = list(pool.map(_scan_partition, tasks))
        except OSError:
            chunks = [_scan_partition(t) for t in tasks]
    else:
        chunks = [_scan_partition(t) for t in tasks]
    survivors = [p for chunk in chunks for p in chunk]
    thetas = [EdgeBijection(p).inverse() for p in survivors]
    thetas.sort()
    return thetas


def enumerate_AM(poset, bound=DEFAULT_BOUND, jobs=1):
    """All admissible monotone bijections, in canonical order."""
    if poset.length <= 1:
        return _scan_admissible_raw(poset, bound, jobs)
    inv_steps = _crown_steps(poset)
    out = [
        theta
        for theta in enumerate_M(poset, bound)
        if _balanced_on_steps(poset, theta.inverse().perm, inv_steps)
    ]
    out.sort()
    return out


# -- compatible sign maps --------------------------------------------------------


def build_compatible_sigma(poset, theta, field=RATIONALS):
    """A sign map compatible with a monotone bijection.

    Pairs starting at a minimal element get 1; any other pair lies only on
    increasing chains (1) or only on decreasing chains (-1).
    """
    if not in_M(poset, theta):
        raise PreconditionError("bijection is not monotone on maximal chains")
    directions = {
        c: image_chain(poset, theta, c)[0] for c in poset.maximal_chains
    }
    min_set = set(poset.min_set)
    one = field.one
    values = {}
    for x, y in poset.strict_pairs:
        if x in min_set:
            values[(x, y)] = one
            continue
        seen = {
            directions[c]
            for c in poset.maximal_chains
            if x in c and y in c
        }
        if len(seen) != 1:
            raise WellDefinednessError(
                "pair (%s, %s) lies on chains of mixed direction"
                % (poset.names[x], poset.names[y])
            )
        values[(x, y)] = one if seen.pop() == Direction.INCREASING else -one
    return SignMap(values)


def is_compatible(poset, sigma, theta):
    """Whether sigma matches theta's product behaviour on all triples x<y<z."""
    pairs = poset.strict_pairs
    index = poset.pair_index
    perm = theta.perm

    def th(a, b):
        return pairs[perm[index[(a, b)]]]

    for x in range(poset.n):
        for y in poset.above[x]:
            for z in poset.above[y]:
                left = th(x, y)
                right = th(y, z)
                whole = th(x, z)
                if left[1] == right[0] and (left[0], right[1]) == whole:
                    if sigma(x, z) != sigma(x, y) * sigma(y, z):
                        return False
                elif right[1] == left[0] and (right[0], left[1]) == whole:
                    if sigma(x, z) != -(sigma(x, y) * sigma(y, z)):
                        return False
    return True
