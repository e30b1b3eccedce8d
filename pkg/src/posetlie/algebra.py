"""Exact-arithmetic incidence algebra of a finite connected poset.

Elements are sparse coefficient maps over the basis {e_xy : x <= y}; linear
maps on the algebra are stored column-wise (the image of each basis
element).  Everything is a pure value: operations return fresh objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .errors import (
    CocycleError,
    InvalidParameter,
    NotInvertible,
    NotProperWitness,
    PreconditionError,
)
from .fields import RATIONALS
from .poset import MapKind


class IncidenceElement:
    """A function on comparable pairs, stored sparsely (absent = zero)."""

    __slots__ = ("poset", "field", "coeffs")

    def __init__(self, poset, coeffs=None, field=RATIONALS):
        self.poset = poset
        self.field = field
        clean = {}
        if coeffs:
            for (x, y), value in coeffs.items():
                if not poset.leq(x, y):
                    raise InvalidParameter(
                        "pair (%r, %r) is not comparable" % (poset.names[x], poset.names[y])
                    )
                if value:
                    clean[(x, y)] = value
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def basis(cls, poset, x, y, field=RATIONALS):
        return cls(poset, {(x, y): field.one}, field)

    @classmethod
    def delta(cls, poset, field=RATIONALS):
        """The identity element: 1 on every (x, x)."""
        return cls(poset, {(x, x): field.one for x in range(poset.n)}, field)

    # -- ring structure ----------------------------------------------------

    def _check_mate(self, other):
        if self.poset != other.poset or self.field != other.field:
            raise InvalidParameter("operands live over different posets or fields")

    def __add__(self, other):
        self._check_mate(other)
        coeffs = dict(self.coeffs)
        for key, value in other.coeffs.items():
            coeffs[key] = coeffs.get(key, self.field.zero) + value
        return IncidenceElement(self.poset, coeffs, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return IncidenceElement(
            self.poset, {k: -v for k, v in self.coeffs.items()}, self.field
        )

    def scale(self, scalar):
        return IncidenceElement(
            self.poset, {k: scalar * v for k, v in self.coeffs.items()}, self.field
        )

    def __mul__(self, other):
        """Convolution: (fg)(x, y) = sum over x <= z <= y of f(x,z) g(z,y)."""
        self._check_mate(other)
        by_first = {}
        for (z, y), value in other.coeffs.items():
            by_first.setdefault(z, []).append((y, value))
        coeffs = {}
        for (x, z), a in self.coeffs.items():
            for y, b in by_first.get(z, ()):
                if self.poset.leq(x, y):
                    key = (x, y)
                    coeffs[key] = coeffs.get(key, self.field.zero) + a * b
        return IncidenceElement(self.poset, coeffs, self.field)

    def __eq__(self, other):
        return (
            isinstance(other, IncidenceElement)
            and self.poset == other.poset
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.poset, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x, y):
        return self.coeffs.get((x, y), self.field.zero)

    def diagonal_part(self):
        return IncidenceElement(
            self.poset,
            {(x, y): v for (x, y), v in self.coeffs.items() if x == y},
            self.field,
        )

    def radical_part(self):
        return IncidenceElement(
            self.poset,
            {(x, y): v for (x, y), v in self.coeffs.items() if x != y},
            self.field,
        )

    def to_vector(self):
        """Dense coefficients over the sorted basis of comparable pairs."""
        zero = self.field.zero
        return [self.coeffs.get(pair, zero) for pair in self.poset.all_pairs]

    @classmethod
    def from_vector(cls, poset, vector, field=RATIONALS):
        coeffs = {pair: v for pair, v in zip(poset.all_pairs, vector) if v}
        return cls(poset, coeffs, field)

    def to_json(self):
        return {
            "pairs": [
                [x, y, self.field.to_str(v)]
                for (x, y), v in sorted(self.coeffs.items())
            ]
        }

    @classmethod
    def from_json(cls, poset, data, field=RATIONALS):
        coeffs = {(x, y): field.parse(s) for x, y, s in data["pairs"]}
        return cls(poset, coeffs, field)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = self.poset.names
        terms = [
            "%s*e[%s,%s]" % (v, names[x], names[y])
            for (x, y), v in sorted(self.coeffs.items())
        ]
        return " + ".join(terms)


def multiply(f, g):
    return f * g


def bracket(f, g):
    """The commutator fg - gf."""
    return f * g - g * f


@dataclass(frozen=True)
class LinearMapOnIA:
    """A linear map on the incidence algebra, stored as basis-image columns."""

    poset: object
    field: object
    columns: tuple

    @classmethod
    def from_images(cls, poset, images, field=RATIONALS):
        return cls(poset, field, tuple(images))

    @classmethod
    def identity(cls, poset, field=RATIONALS):
        cols = tuple(
            IncidenceElement.basis(poset, x, y, field) for (x, y) in poset.all_pairs
        )
        return cls(poset, field, cols)

    @classmethod
    def zero(cls, poset, field=RATIONALS):
        cols = tuple(IncidenceElement(poset, {}, field) for _ in poset.all_pairs)
        return cls(poset, field, cols)

    @property
    def dimension(self):
        return len(self.columns)

    def apply(self, element):
        out = IncidenceElement(self.poset, {}, self.field)
        index = self.poset.all_pair_index
        for pair, value in element.coeffs.items():
            out = out + self.columns[index[pair]].scale(value)
        return out

    def compose(self, other):
        """self after other."""
        return LinearMapOnIA(
            self.poset, self.field, tuple(self.apply(col) for col in other.columns)
        )

    def __add__(self, other):
        return LinearMapOnIA(
            self.poset,
            self.field,
            tuple(a + b for a, b in zip(self.columns, other.columns)),
        )

    def __sub__(self, other):
        return LinearMapOnIA(
            self.poset,
            self.field,
            tuple(a - b for a, b in zip(self.columns, other.columns)),
        )

    def __neg__(self):
        return LinearMapOnIA(self.poset, self.field, tuple(-c for c in self.columns))

    def is_invertible(self):
        return linalg.rank([c.to_vector() for c in self.columns]) == self.dimension

    def to_json(self):
        return {
            "basis": [[x, y] for (x, y) in self.poset.all_pairs],
            "columns": [c.to_json() for c in self.columns],
        }

    @classmethod
    def from_json(cls, poset, data, field=RATIONALS):
        columns = tuple(
            IncidenceElement.from_json(poset, col, field) for col in data["columns"]
        )
        return cls(poset, field, columns)


# -- subspaces ---------------------------------------------------------------


def _basis_elements(poset, field):
    return [IncidenceElement.basis(poset, x, y, field) for (x, y) in poset.all_pairs]


@lru_cache(maxsize=None)
def _commutator_subspace_cached(poset, field):
    elements = _basis_elements(poset, field)
    rows = []
    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            lie = bracket(a, b)
            if not lie.is_zero():
                rows.append(lie.to_vector())
    basis, pivots = linalg.row_reduce(rows)
    return tuple(
        IncidenceElement.from_vector(poset, row, field) for row in basis
    ), tuple(pivots)


def commutator_subspace(poset, field=RATIONALS):
    """Row-reduced basis of the span of all brackets of basis elements."""
    basis, _ = _commutator_subspace_cached(poset, field)
    return list(basis)


@lru_cache(maxsize=None)
def _center_cached(poset, field):
    elements = _basis_elements(poset, field)
    dim = len(elements)
    zero = field.zero
    # unknown z = sum z_i b_i; constraints: [z, b_j] = 0 for every j
    rows = []
    for gen in elements:
        images = [bracket(b, gen).to_vector() for b in elements]
        for coord in range(dim):
            row = [images[i][coord] for i in range(dim)]
            if any(row):
                rows.append(row)
    sols = linalg.nullspace(rows, dim, field.one)
    return tuple(IncidenceElement.from_vector(poset, v, field) for v in sols)


def center(poset, field=RATIONALS):
    """Basis of {z : [z, f] = 0 for all f}; the span of delta when connected."""
    return list(_center_cached(poset, field))


# -- the classical map constructors -------------------------------------------


def induced_map(poset, poset_map, field=RATIONALS):
    """The algebra (anti-)isomorphism induced by a poset (anti-)isomorphism.

    Sends e_xy to e_{f(x) f(y)} for isomorphisms and to e_{f(y) f(x)} for
    anti-isomorphisms; a permutation of the basis either way.
    """
    perm = poset_map.perm
    images = []
    for x, y in poset.all_pairs:
        if poset_map.kind == MapKind.ISO:
            images.append(IncidenceElement.basis(poset, perm[x], perm[y], field))
        else:
            images.append(IncidenceElement.basis(poset, perm[y], perm[x], field))
    return LinearMapOnIA.from_images(poset, images, field)


def multiplicative_map(poset, sigma, field=RATIONALS):
    """The diagonal automorphism scaling e_xy by sigma(x, y).

    sigma must assign a nonzero scalar to every comparable pair, with
    sigma(x, x) = 1 and sigma(x, y) sigma(y, z) = sigma(x, z).
    """
    for pair in poset.all_pairs:
        if pair not in sigma or not sigma[pair]:
            raise CocycleError("sigma must be nonzero on all comparable pairs")
    one = field.one
    for x in range(poset.n):
        if sigma[(x, x)] != one:
            raise CocycleError(
                "sigma(%s, %s) must be 1" % (poset.names[x], poset.names[x])
            )
    for x, y in poset.all_pairs:
        for z in range(poset.n):
            if poset.leq(y, z):
                if sigma[(x, y)] * sigma[(y, z)] != sigma[(x, z)]:
                    raise CocycleError(
                        "sigma(%s,%s) * sigma(%s,%s) != sigma(%s,%s)"
                        % (
                            poset.names[x], poset.names[y],
                            poset.names[y], poset.names[z],
                            poset.names[x], poset.names[z],
                        )
                    )
    images = [
        IncidenceElement(poset, {(x, y): sigma[(x, y)]}, field)
        for (x, y) in poset.all_pairs
    ]
    out = LinearMapOnIA.from_images(poset, images, field)
    if not is_algebra_automorphism(out):
        raise CocycleError("scaling map failed the automorphism check")
    return out


def invert_element(f):
    """Inverse in the incidence algebra; exists iff all f(x, x) are nonzero.

    Uses the triangular structure along a linear extension: the inverse at
    (x, y) only needs values at pairs (z, y) with z strictly above x.
    """
    poset = f.poset
    field = f.field
    for x in range(poset.n):
        if not f(x, x):
            raise NotInvertible("zero diagonal at %r" % (poset.names[x],))
    inv = {(x, x): field.one / f(x, x) for x in range(poset.n)}
    for x in reversed(poset.linear_extension):
        for y in poset.above[x]:
            acc = field.zero
            for z in range(poset.n):
                if poset.lt(x, z) and poset.leq(z, y):
                    acc = acc + f(x, z) * inv.get((z, y), field.zero)
            value = -(field.one / f(x, x)) * acc
            if value:
                inv[(x, y)] = value
    return IncidenceElement(poset, inv, field)


def inner_map(poset, f):
    """Conjugation g -> f g f^{-1} by an invertible element."""
    f_inv = invert_element(f)
    images = [
        f * IncidenceElement.basis(poset, x, y, f.field) * f_inv
        for (x, y) in poset.all_pairs
    ]
    return LinearMapOnIA.from_images(poset, images, f.field)


# -- recognizers ---------------------------------------------------------------


def _preserves_products(mapping, flip):
    poset = mapping.poset
    field = mapping.field
    elements = _basis_elements(poset, field)
    for i, a in enumerate(elements):
        fa = mapping.columns[i]
        for j, b in enumerate(elements):
            fb = mapping.columns[j]
            lhs = mapping.apply(a * b)
            rhs = fb * fa if flip else fa * fb
            if lhs != rhs:
                return False
    return True


def is_algebra_automorphism(mapping):
    return mapping.is_invertible() and _preserves_products(mapping, flip=False)


def is_negated_anti_automorphism(mapping):
    """Whether -mapping is an anti-automorphism of the algebra."""
    return mapping.is_invertible() and _preserves_products(-mapping, flip=True)


def is_lie_automorphism(mapping):
    """Invertible and bracket-preserving on all pairs of basis elements."""
    if not mapping.is_invertible():
        return False
    poset = mapping.poset
    elements = _basis_elements(poset, mapping.field)
    for i, a in enumerate(elements):
        fa = mapping.columns[i]
        for j in range(i + 1, len(elements)):
            lhs = mapping.apply(bracket(a, elements[j]))
            if lhs != bracket(fa, mapping.columns[j]):
                return False
    return True


def check_proper_decomposition(tau, phi):
    """Split tau as phi + nu and validate the central remainder.

    tau must be a Lie automorphism and phi an automorphism or the negative
    of an anti-automorphism.  Succeeds iff nu = tau - phi takes values in
    the center and kills the commutator subspace; returns nu.
    """
    if tau.poset != phi.poset or tau.field != phi.field:
        raise InvalidParameter("maps live over different posets or fields")
    if not is_lie_automorphism(tau):
        raise PreconditionError("tau is not a Lie automorphism")
    if not (is_algebra_automorphism(phi) or is_negated_anti_automorphism(phi)):
        raise PreconditionError(
            "phi is neither an automorphism nor the negative of an anti-automorphism"
        )
    poset, field = tau.poset, tau.field
    nu = tau - phi
    center_basis, center_pivots = _center_span(poset, field)
    for pair, col in zip(poset.all_pairs, nu.columns):
        if not linalg.in_span(center_basis, center_pivots, col.to_vector()):
            raise NotProperWitness(
                "remainder image at e[%s,%s] is not central"
                % (poset.names[pair[0]], poset.names[pair[1]])
            )
    for elem in commutator_subspace(poset, field):
        if not nu.apply(elem).is_zero():
            raise NotProperWitness("remainder does not kill the commutator subspace")
    return nu


@lru_cache(maxsize=None)
def _center_span(poset, field):
    vectors = [z.to_vector() for z in _center_cached(poset, field)]
    basis, pivots = linalg.row_reduce(vectors)
    return basis, pivots
