"""Structure verification for the enumerated edge-bijection groups."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .bijections import EdgeBijection
from .errors import NotClosed, StructureMismatch


@dataclass(frozen=True)
class FiniteGroupOnEdges:
    """A verified group of edge bijections, elements in canonical order."""

    elements: tuple

    @property
    def order(self):
        return len(self.elements)

    @property
    def degree(self):
        return len(self.elements[0].perm)

    def __contains__(self, theta):
        return theta in set(self.elements)

    def element_order(self, theta):
        identity = EdgeBijection.identity(self.degree)
        power = theta
        k = 1
        while power != identity:
            power = power.compose(theta)
            k += 1
        return k

    def order_histogram(self):
        hist = {}
        for g in self.elements:
            k = self.element_order(g)
            hist[k] = hist.get(k, 0) + 1
        return dict(sorted(hist.items()))

    def generating_set(self):
        """A small generating set, grown greedily in canonical order."""
        generators = []
        span = {EdgeBijection.identity(self.degree)}
        for g in self.elements:
            if g not in span:
                generators.append(g)
                span = generated_subgroup(generators, self.degree)
                if len(span) == self.order:
                    break
        return generators

    def to_json(self):
        return {
            "order": self.order,
            "element_order_histogram": {
                str(k): v for k, v in self.order_histogram().items()
            },
            "witness_generators": [list(g.perm) for g in self.generating_set()],
        }


def verify_group(bijections):
    """Check closure under composition and inverse, and the identity.

    Raises NotClosed with a witness pair on failure.
    """
    elements = sorted(set(bijections))
    if not elements:
        raise NotClosed("empty set is not a group")
    degree = len(elements[0].perm)
    if any(len(g.perm) != degree for g in elements):
        raise NotClosed("mixed permutation degrees")
    perms = {g.perm for g in elements}
    if tuple(range(degree)) not in perms:
        raise NotClosed("identity missing")
    for g in elements:
        if g.inverse().perm not in perms:
            raise NotClosed("inverse missing", witness=(g, g))
        for h in elements:
            if g.compose(h).perm not in perms:
                raise NotClosed("product escapes the set", witness=(g, h))
    return FiniteGroupOnEdges(tuple(elements))


def generated_subgroup(generators, degree):
    """Closure of a generating set inside the symmetric group on the basis.

    Breadth-first over right multiplication by the generators; in a finite
    group this reaches inverses too.
    """
    gens = [g.perm for g in generators]
    start = tuple(range(degree))
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                c = tuple(a[k] for k in g)
                if c not in seen:
                    seen.add(c)
                    fresh.append(c)
        frontier = fresh
    return {EdgeBijection(p) for p in seen}


def dihedral_witness(group, n):
    """Whether the group is dihedral of order 4n, by explicit generators.

    Searches for r of order 2n and s of order 2 with s r s = r^(-1)
    generating the whole group.
    """
    if group.order != 4 * n:
        return False
    rotations = [g for g in group.elements if group.element_order(g) == 2 * n]
    flips = [g for g in group.elements if group.element_order(g) == 2]
    for r in rotations:
        r_inv = r.inverse()
        for s in flips:
            if s.compose(r).compose(s) != r_inv:
                continue
            if len(generated_subgroup([r, s], group.degree)) == group.order:
                return True
    return False


def crown_parity_witness(group, n):
    """Verify the parity shape of the admissible group of an n-crown.

    The group must be exactly the bijections preserving or swapping the odd
    and even chain families, with the odd-preserving half acting as the full
    symmetric group on each family independently.  Returns a report dict;
    raises StructureMismatch when the shape fails.
    """
    from .families import crown

    poset = crown(n)
    odd = frozenset(
        poset.pair_index[(i, n + i)] for i in range(n)
    )
    even = frozenset(
        poset.pair_index[((i + 1) % n, n + i)] for i in range(n)
    )
    expected = 2 * factorial(n) ** 2
    if group.order != expected:
        raise StructureMismatch(
            "order %d, expected 2*(n!)^2 = %d" % (group.order, expected)
        )
    preserving = []
    for g in group.elements:
        image = frozenset(g.perm[b] for b in odd)
        if image == odd:
            preserving.append(g)
        elif image != even:
            raise StructureMismatch("an element neither preserves nor swaps parity")
    if 2 * len(preserving) != group.order:
        raise StructureMismatch(
            "parity-preserving half has order %d of %d"
            % (len(preserving), group.order)
        )
    actions = {
        (
            tuple(g.perm[b] for b in sorted(odd)),
            tuple(g.perm[b] for b in sorted(even)),
        )
        for g in preserving
    }
    if len(actions) != factorial(n) ** 2:
        raise StructureMismatch("parity-preserving half is not S_n x S_n")
    odd_actions = {a for a, _ in actions}
    even_actions = {b for _, b in actions}
    if len(odd_actions) != factorial(n) or len(even_actions) != factorial(n):
        raise StructureMismatch("action on one parity family is not full")
    return {
        "order": group.order,
        "preserving_order": len(preserving),
        "index": group.order // len(preserving),
        "odd_orbit_actions": len(odd_actions),
        "even_orbit_actions": len(even_actions),
    }
