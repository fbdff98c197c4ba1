"""Shorthand constructors used across the test modules.

Path specs are strings of single-character edge ids ('' is the empty path at
the graph's first vertex, or at the vertex named after '@').
"""

from steinberg import (
    AlgebraElement,
    BasicBisection,
    BoundaryPoint,
    GroupoidPoint,
    from_terms,
)


def p(g, spec: str):
    if spec.startswith("@"):
        return g.empty_path(spec[1:] or g.vertex_ids[0])
    if not spec:
        return g.empty_path(g.vertex_ids[0])
    return g.path(list(spec))


def Z(g, a: str, b: str, excl: str = "") -> BasicBisection:
    excluded = frozenset(g._eidx[e] for e in excl)
    return BasicBisection(p(g, a), p(g, b), excluded)


def ind(g, ring, a: str, b: str, excl: str = "") -> AlgebraElement:
    return from_terms(g, ring, [(ring.one, Z(g, a, b, excl))])


def elem(g, ring, *pairs) -> AlgebraElement:
    """elem(g, R, (2, '1', '1'), (-1, '', '')) -> 2*Z(1,1) - 1*Z(@,@)."""
    terms = [(ring.scalar(c), Z(g, a, b)) for c, a, b in pairs]
    return from_terms(g, ring, terms)


def bp(g, prefix: str, cycle: str) -> BoundaryPoint:
    pre = p(g, prefix)
    cyc_edges = list(cycle)
    cyc = g.path(cyc_edges)
    return BoundaryPoint(pre, cyc)


def gp(g, x: BoundaryPoint, k: int, y: BoundaryPoint) -> GroupoidPoint:
    return GroupoidPoint(x, k, y)
