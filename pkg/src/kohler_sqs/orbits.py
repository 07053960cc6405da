"""Orbits of 3- and 4-element subsets under translations and negation.

The acting group is the semidirect product of the abelian group A with the
negation map x -> -x, so the orbit of a subset X is
``{X + a} union {-X + a}`` over all a in A.  Every orbit of a triple or
quadruple contains members through 0, and all of them arise as ``X - x`` or
``-X + x`` for x in X; the canonical representative is the lexicographically
least of those candidates.  Two subsets lie in the same orbit exactly when
their canonical forms coincide.

Orbits of triples split into three families: the vertex family T (the
Koehler-graph vertices), the family T1 of orbits of {0, a, -a}, and the
family T2 of orbits of {0, a, h} with h an involution.  Orbits of quadruples
of interest are the edge family E (orbits of {0, a, b, a+b} with
0 not in {2a, 2b} and {+-a, +-2a} disjoint from {+-b, +-2b}) and the forced
families Q1 = [a, -a, h0], Q2 = [a, h, h+a], Q3 = [h, h', h+h'] from which
the base block set of the construction is assembled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .groups import Element, Group

Subset = tuple[Element, ...]

# Triple classification tags.
TRIPLE_T = "T"
TRIPLE_T1 = "T1"
TRIPLE_T2 = "T2"

# Quadruple classification tags, from finest to coarsest.
QUAD_E = "E"
QUAD_Q1 = "Q1"
QUAD_Q2 = "Q2"
QUAD_Q3 = "Q3"
QUAD_QPRIME = "Qprime"  # orbit of some {0, a, b, a+b}
QUAD_QDPRIME = "Qdprime"  # orbit of some {0, a, -a, h}, 2h = 0
QUAD_QTPRIME = "Qtprime"  # orbit of {0, h, h', h''}, three involutions
QUAD_ASYMMETRIC = "Asymmetric"

SYMMETRIC_TAGS = frozenset(
    {QUAD_E, QUAD_Q1, QUAD_Q2, QUAD_Q3, QUAD_QPRIME, QUAD_QDPRIME, QUAD_QTPRIME}
)


@dataclass(frozen=True)
class OrbitRep:
    """Canonical representative of an orbit of a 3- or 4-subset.

    ``base`` is sorted, starts with 0, and is the lex-least through-0 member
    of the orbit.
    """

    group: Group
    base: Subset

    @property
    def kind(self) -> str:
        return "triple" if len(self.base) == 3 else "quadruple"

    def __str__(self) -> str:
        return "[" + ", ".join(str(x) for x in self.base[1:]) + "]"


def _validated_points(g: Group, points) -> Subset:
    pts = tuple(points)
    if len(pts) not in (3, 4):
        raise InvalidInputError(f"orbit subsets must have 3 or 4 elements, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise InvalidInputError(f"subset elements must be distinct: {pts!r}")
    for p in pts:
        g.validate_element(p)
    return pts


def through_zero_sets(g: Group, points) -> frozenset[Subset]:
    """All members of the orbit of ``points`` that contain 0, as sorted tuples."""
    pts = _validated_points(g, points)
    return frozenset(_through_zero_candidates(g, pts))


def _through_zero_candidates(g: Group, pts: Subset) -> list[Subset]:
    neg_pts = tuple(g.neg(p) for p in pts)
    out = []
    for x in pts:
        out.append(tuple(sorted(g.sub(p, x) for p in pts)))
    for x in neg_pts:
        out.append(tuple(sorted(g.sub(np, x) for np in neg_pts)))
    return out


def canonicalize(g: Group, points) -> OrbitRep:
    """Canonical representative of the orbit of a 3- or 4-subset."""
    pts = _validated_points(g, points)
    return OrbitRep(g, min(_through_zero_candidates(g, pts)))


def _checked_base(g: Group, rep: OrbitRep) -> Subset:
    if rep.group != g:
        raise InvalidInputError(f"{rep} belongs to {rep.group}, not {g}")
    return _validated_points(g, rep.base)


def expand_orbit(g: Group, rep: OrbitRep) -> set[Subset]:
    """Every subset in the orbit, as sorted tuples."""
    base = _checked_base(g, rep)
    neg_base = tuple(g.neg(p) for p in base)
    out: set[Subset] = set()
    for a in g.elements():
        out.add(tuple(sorted(g.add(p, a) for p in base)))
        out.add(tuple(sorted(g.add(p, a) for p in neg_base)))
    return out


def orbit_size(g: Group, rep: OrbitRep) -> int:
    """Orbit cardinality via the through-0 counting identity.

    Counting pairs (x, X) with x in X gives |X| * |orbit| = v * n0 where n0
    is the number of orbit members containing 0.
    """
    base = _checked_base(g, rep)
    n0 = len(set(_through_zero_candidates(g, base)))
    size, remainder = divmod(g.order * n0, len(base))
    if remainder:
        raise InvalidInputError(f"orbit size identity failed for {base!r}")
    return size


def in_T(g: Group, a: Element, b: Element) -> bool:
    """Does the orbit of {0, a, b} belong to the vertex family T?

    Tests a != +-b, 2a not in {0, b, 2b} and 2b not in {0, a, 2a}; the answer
    is independent of which through-0 pair of the orbit is supplied.
    """
    zero = g.zero
    if a == zero or b == zero or a == b:
        raise InvalidInputError("in_T needs two distinct nonzero elements")
    if a == g.neg(b):
        return False
    ta, tb = g.double(a), g.double(b)
    if ta == zero or ta == b or ta == tb:
        return False
    if tb == zero or tb == a:
        return False
    return True


def in_E(g: Group, a: Element, b: Element) -> bool:
    """Does the orbit of {0, a, b, a+b} belong to the edge family E?

    Tests 0 not in {2a, 2b} and {+-a, +-2a} disjoint from {+-b, +-2b};
    orbit-invariant for the same reason as :func:`in_T`.
    """
    zero = g.zero
    s = g.add(a, b)
    if a == zero or b == zero or a == b or s == zero:
        raise InvalidInputError("in_E needs {0, a, b, a+b} to have four distinct elements")
    ta, tb = g.double(a), g.double(b)
    if ta == zero or tb == zero:
        return False
    left = {a, g.neg(a), ta, g.neg(ta)}
    right = {b, g.neg(b), tb, g.neg(tb)}
    return not (left & right)


def classify_triple(g: Group, rep: OrbitRep) -> str:
    """Classify a triple orbit as T1, T2 or T.

    T1 and T2 can overlap (the orbit of {0, a, -a} with a killed by 4 is
    also of T2 shape); T1 wins the tag in that case.  T is disjoint from
    both, so exactly one tag comes back.
    """
    base = _checked_base(g, rep)
    if len(base) != 3:
        raise InvalidInputError("classify_triple needs a triple orbit")
    _, a, b = base
    if b == g.neg(a) or a == g.double(b) or g.double(a) == b:
        return TRIPLE_T1
    zero = g.zero
    ta, tb = g.double(a), g.double(b)
    if ta == zero or tb == zero or ta == tb:
        return TRIPLE_T2
    return TRIPLE_T


def classify_quadruple(g: Group, rep: OrbitRep, h0: Element | None = None) -> str:
    """Finest applicable tag for a quadruple orbit.

    Priority: E, Q1, Q2, Q3, then the coarse symmetric shapes Qprime
    ({0,a,b,a+b}), Qdprime ({0,a,-a,h}) and Qtprime (three involutions),
    else Asymmetric.  Q1 and Q2 depend on the distinguished involution
    ``h0``; without it they are skipped and such orbits fall through to the
    coarse tags.  The orbit is symmetric (fixed by negation up to
    translation) iff the result is not Asymmetric.
    """
    base = _checked_base(g, rep)
    if len(base) != 4:
        raise InvalidInputError("classify_quadruple needs a quadruple orbit")
    if h0 is not None:
        g.validate_element(h0)
        if g.double(h0) != g.zero or h0 == g.zero:
            raise InvalidInputError(f"h0 must have order 2, got {h0!r}")
    zero = g.zero
    omega1 = set(g.omega1)
    base_nonzero = base[1:]

    sum_decompositions = [
        (p, q)
        for i, p in enumerate(base_nonzero)
        for q in base_nonzero[i + 1 :]
        if g.add(p, q) in base_nonzero
    ]
    if any(in_E(g, p, q) for p, q in sum_decompositions):
        return QUAD_E

    through_zero = set(_through_zero_candidates(g, base))
    if h0 is not None:
        for member in through_zero:
            rest = [x for x in member if x != zero]
            if h0 in rest:
                pair = [x for x in rest if x != h0]
                if len(pair) == 2 and pair[1] == g.neg(pair[0]):
                    return QUAD_Q1
        for member in through_zero:
            rest = [x for x in member if x != zero]
            for h in rest:
                if h in omega1 and h != h0:
                    x, y = (p for p in rest if p != h)
                    if y == g.add(x, h) and x not in omega1 and g.double(x) != h:
                        return QUAD_Q2

    if all(x in omega1 for x in base_nonzero) and sum_decompositions:
        return QUAD_Q3
    if sum_decompositions:
        return QUAD_QPRIME
    for member in through_zero:
        rest = [x for x in member if x != zero]
        for h in rest:
            if h in omega1:
                pair = [x for x in rest if x != h]
                if len(pair) == 2 and pair[1] == g.neg(pair[0]):
                    return QUAD_QDPRIME
    if all(x in omega1 for x in base_nonzero):
        return QUAD_QTPRIME
    return QUAD_ASYMMETRIC


def is_symmetric_block(g: Group, block) -> bool:
    """Is B = -B + x for some x?  Any such x must be b0 + b for b in B."""
    pts = _validated_points(g, block)
    if len(pts) != 4:
        raise InvalidInputError("is_symmetric_block needs a 4-element block")
    negated = {g.neg(p) for p in pts}
    members = set(pts)
    for b in pts:
        x = g.add(pts[0], b)
        if {g.add(q, x) for q in negated} == members:
            return True
    return False
