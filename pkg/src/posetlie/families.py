"""Built-in poset generators and the two worked counterexample posets."""

from __future__ import annotations

from .errors import InvalidParameter
from .poset import Poset

# covers of the 6-element example: one minimum, a diamond pair of branches
_EXAMPLE6_COVERS = ["1<2", "1<3", "2<4", "2<5", "3<5", "3<6"]

# covers of the 20-element example: a mirrored pair of blocks sharing the top
# element 10; the right block splits the left's element 7 into 7' (over 6')
# and 7'' (over 5').
_EXAMPLE20_COVERS = [
    "1<5", "2<5", "3<6", "4<6", "5<7", "6<7", "5<8", "6<8", "8<9", "8<10",
    "1'<5'", "2'<5'", "3'<6'", "4'<6'",
    "5'<7''", "6'<7'", "5'<8'", "6'<8'", "8'<9'", "8'<10",
]


def _from_cover_strings(names, covers):
    index = {name: i for i, name in enumerate(names)}
    pairs = []
    for token in covers:
        a, b = token.split("<")
        pairs.append((index[a], index[b]))
    return Poset.from_relations(names, pairs)


def chain(n):
    """A linear order on n elements."""
    if n < 1:
        raise InvalidParameter("chain needs n >= 1")
    names = [str(i) for i in range(1, n + 1)]
    return Poset.from_relations(names, [(i, i + 1) for i in range(n - 1)])


def star(n):
    """One minimum below n maximal elements (same poset as kmn(1, n))."""
    if n < 1:
        raise InvalidParameter("star needs n >= 1")
    return kmn(1, n)


def fence(n):
    """Alternating path v1 < v2 > v3 < v4 > ... on n vertices."""
    if n < 1:
        raise InvalidParameter("fence needs n >= 1")
    names = ["v%d" % i for i in range(1, n + 1)]
    pairs = []
    for i in range(n - 1):
        if i % 2 == 0:
            pairs.append((i, i + 1))
        else:
            pairs.append((i + 1, i))
    return Poset.from_relations(names, pairs)


def crown(n):
    """The n-crown: x_i < y_i and x_{i+1} < y_i cyclically, nothing else."""
    if n < 2:
        raise InvalidParameter("crown needs n >= 2")
    names = ["x%d" % i for i in range(1, n + 1)] + ["y%d" % i for i in range(1, n + 1)]
    pairs = []
    for i in range(n):
        pairs.append((i, n + i))  # x_{i+1} < y_{i+1}
        pairs.append(((i + 1) % n, n + i))  # next min under the same max
    return Poset.from_relations(names, pairs)


def kmn(m, n):
    """Ordinal sum of two antichains: every x_i below every y_j."""
    if m < 1 or n < 1:
        raise InvalidParameter("kmn needs m, n >= 1")
    names = ["x%d" % i for i in range(1, m + 1)] + ["y%d" % j for j in range(1, n + 1)]
    pairs = [(i, m + j) for i in range(m) for j in range(n)]
    return Poset.from_relations(names, pairs)


def example6():
    """The 6-element poset with two chain classes whose bijections are all proper."""
    names = [str(i) for i in range(1, 7)]
    return _from_cover_strings(names, _EXAMPLE6_COVERS)


def example20():
    """The 20-element poset admitting a monotone, non-admissible class swap."""
    names = (
        [str(i) for i in range(1, 11)]
        + ["%d'" % i for i in range(1, 10)]
        + ["7''"]
    )
    return _from_cover_strings(names, _EXAMPLE20_COVERS)


def example20_bijection(poset=None):
    """The shipped monotone bijection of the 20-element example.

    It swaps the primed and unprimed blocks pairwise (with 10' read as 10).
    Pairs below 7 split by branch: (x, 7) goes to (x', 7'') when x sits on
    the 5-branch and to (x', 7') when x sits on the 6-branch, and back.
    Returns the permutation of the strict-pair basis as an EdgeBijection.
    """
    from .bijections import EdgeBijection

    if poset is None:
        poset = example20()
    names = poset.names

    def prime(label):
        if label == "10":
            return "10"
        if label.endswith("''"):
            return label[:-2]
        if label.endswith("'"):
            return label[:-1]
        return label + "'"

    five_branch = {"1", "2", "5"}

    def image(pair):
        a, b = (names[pair[0]], names[pair[1]])
        if b == "7":
            return (prime(a), "7''" if a in five_branch else "7'")
        if b == "7'":
            return (prime(a), "7")
        if b == "7''":
            return (prime(a), "7")
        return (prime(a), prime(b))

    perm = []
    for pair in poset.strict_pairs:
        u, v = image(pair)
        perm.append(poset.pair_index[(poset.index(u), poset.index(v))])
    return EdgeBijection(tuple(perm))


_FAMILIES = {
    "chain": lambda arg: chain(_int_arg("chain", arg)),
    "star": lambda arg: star(_int_arg("star", arg)),
    "fence": lambda arg: fence(_int_arg("fence", arg)),
    "crown": lambda arg: crown(_int_arg("crown", arg)),
    "kmn": lambda arg: kmn(*_pair_arg(arg)),
    "example": lambda arg: _example_arg(arg),
}


def _int_arg(family, arg):
    try:
        return int(arg)
    except ValueError:
        raise InvalidParameter("bad %s size %r" % (family, arg)) from None


def _pair_arg(arg):
    parts = arg.split("x")
    if len(parts) != 2:
        raise InvalidParameter("kmn wants mxn, got %r" % arg)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise InvalidParameter("kmn wants mxn, got %r" % arg) from None


def _example_arg(arg):
    if arg == "6":
        return example6()
    if arg == "20":
        return example20()
    raise InvalidParameter("unknown example %r (have 6 and 20)" % arg)


def from_selector(selector):
    """Build a poset from a CLI selector string such as ``crown:3``."""
    if ":" not in selector:
        raise InvalidParameter("selector %r needs the form family:arg" % selector)
    family, arg = selector.split(":", 1)
    if family not in _FAMILIES:
        raise InvalidParameter(
            "unknown family %r (have %s)" % (family, ", ".join(sorted(_FAMILIES)))
        )
    return _FAMILIES[family](arg)


def suite():
    """The named small posets the verification harness quantifies over."""
    return (
        ("chain:2", chain(2)),
        ("chain:3", chain(3)),
        ("chain:4", chain(4)),
        ("star:3", star(3)),
        ("star:4", star(4)),
        ("fence:4", fence(4)),
        ("fence:5", fence(5)),
        ("fence:6", fence(6)),
        ("crown:2", crown(2)),
        ("crown:3", crown(3)),
        ("kmn:2x3", kmn(2, 3)),
        ("example:6", example6()),
    )
