"""Seeded random generators for graphs' paths, bisections, points, elements.

Everything is driven by a caller-supplied `random.Random`, so identical seeds
reproduce identical objects; all property suites and the CLI `verify`
subcommand rely on that.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .algebra import AlgebraElement, from_terms
from .bisections import BasicBisection, expand
from .graph import BoundaryPoint, Graph, GroupoidPoint, Path
from .leavitt import LeavittElement, from_monomials
from .scalars import (
    DYADIC_RATIONALS,
    GAUSSIAN_INTEGERS,
    INTEGERS,
    RATIONALS,
    Scalar,
    ScalarRing,
)
from .tensor import (
    ProductAlgebraElement,
    ProductBisection,
    TensorElement,
    product_from_pairs,
    tensor_from_pairs,
)


def random_scalar(ring: ScalarRing, rng: Random, bound: int = 3, nonzero: bool = False) -> Scalar:
    while True:
        if ring == GAUSSIAN_INTEGERS:
            s = ring.scalar(rng.randint(-bound, bound), rng.randint(-bound, bound))
        elif ring == RATIONALS:
            s = ring.scalar(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
        elif ring == DYADIC_RATIONALS:
            s = ring.scalar(Fraction(rng.randint(-bound, bound), 2 ** rng.randint(0, 2)))
        else:
            s = ring.scalar(rng.randint(-bound, bound))
        if s or not nonzero:
            return s


def random_path(graph: Graph, rng: Random, max_len: int, start: int | None = None) -> Path:
    v = rng.randrange(graph.n_vertices) if start is None else start
    edges = []
    for _ in range(rng.randint(0, max_len)):
        e = rng.choice(graph.out_edges[v])
        edges.append(e)
        v = graph.edge_rng[e]
    src = graph.edge_src[edges[0]] if edges else v
    return Path(graph, src, tuple(edges))


def _random_path_into(graph: Graph, rng: Random, target: int, max_len: int) -> Path:
    """A path ending at `target`, grown backwards (may stop early at a source)."""
    edges: list[int] = []
    v = target
    for _ in range(rng.randint(0, max_len)):
        incoming = graph.in_edges[v]
        if not incoming:
            break
        e = rng.choice(incoming)
        edges.append(e)
        v = graph.edge_src[e]
    edges.reverse()
    return Path(graph, v, tuple(edges))


def random_cylinder(graph: Graph, rng: Random, max_len: int) -> BasicBisection:
    v = rng.randrange(graph.n_vertices)
    alpha = _random_path_into(graph, rng, v, max_len)
    beta = _random_path_into(graph, rng, v, max_len)
    return BasicBisection(alpha, beta)


def random_bisection(
    graph: Graph, rng: Random, max_len: int, allow_excluded: bool = True, allow_empty: bool = False
) -> BasicBisection:
    c = random_cylinder(graph, rng, max_len)
    if not allow_excluded or rng.random() < 0.5:
        return c
    emitted = list(graph.out_edges[c.alpha.range_idx])
    top = len(emitted) if allow_empty else len(emitted) - 1
    k = rng.randint(0, max(0, top))
    return BasicBisection(c.alpha, c.beta, frozenset(rng.sample(emitted, k)))


def random_boundary_point(graph: Graph, rng: Random, max_prefix: int = 3) -> BoundaryPoint:
    prefix = random_path(graph, rng, max_prefix)
    z = _boundary_point_from(graph, rng, prefix.range_idx)
    return BoundaryPoint(prefix.concat(z.prefix), z.cycle)


def random_groupoid_point(graph: Graph, rng: Random, max_len: int = 3) -> GroupoidPoint:
    """(alpha z, |alpha| - |beta|, beta z) for a random tail z."""
    z = random_boundary_point(graph, rng)
    alpha = _random_path_into(graph, rng, z.source_idx, max_len)
    beta = _random_path_into(graph, rng, z.source_idx, max_len)
    x = BoundaryPoint(alpha.concat(z.prefix), z.cycle)
    y = BoundaryPoint(beta.concat(z.prefix), z.cycle)
    return GroupoidPoint(x, len(alpha) - len(beta), y)


def random_point_in(b: BasicBisection, rng: Random) -> GroupoidPoint:
    """A random point of a nonempty bisection: pick a cylinder piece, seat a
    random eventually periodic tail at its range."""
    if b.is_empty:
        raise ValueError("empty bisection has no points")
    piece = rng.choice(expand(b, len(b.alpha)))
    z = _boundary_point_from(b.graph, rng, piece.alpha.range_idx)
    x = BoundaryPoint(piece.alpha.concat(z.prefix), z.cycle)
    y = BoundaryPoint(piece.beta.concat(z.prefix), z.cycle)
    return GroupoidPoint(x, b.degree, y)


def _boundary_point_from(graph: Graph, rng: Random, start: int) -> BoundaryPoint:
    # random walk until a vertex repeats; the closed stretch is the cycle
    v = start
    seen = {v: 0}
    walk: list[int] = []
    while True:
        e = rng.choice(graph.out_edges[v])
        walk.append(e)
        v = graph.edge_rng[e]
        if v in seen:
            cut = seen[v]
            break
        seen[v] = len(walk)
    pre = Path(graph, start, tuple(walk[:cut]))
    return BoundaryPoint(pre, Path(graph, pre.range_idx, tuple(walk[cut:])))


def random_element(
    graph: Graph,
    ring: ScalarRing,
    rng: Random,
    depth: int = 2,
    max_terms: int = 4,
    coeff_bound: int = 3,
    allow_excluded: bool = True,
) -> AlgebraElement:
    pairs = []
    for _ in range(rng.randint(0, max_terms)):
        b = random_bisection(graph, rng, depth, allow_excluded=allow_excluded)
        pairs.append((random_scalar(ring, rng, coeff_bound, nonzero=True), b))
    return from_terms(graph, ring, pairs)


def random_diagonal_element(
    graph: Graph, ring: ScalarRing, rng: Random, depth: int = 2, max_terms: int = 3
) -> AlgebraElement:
    pairs = []
    for _ in range(rng.randint(0, max_terms)):
        alpha = random_path(graph, rng, depth)
        pairs.append(
            (random_scalar(ring, rng, nonzero=True), BasicBisection(alpha, alpha))
        )
    return from_terms(graph, ring, pairs)


def random_homogeneous_element(
    graph: Graph, ring: ScalarRing, rng: Random, degree_bound: int = 2, depth: int = 2
) -> AlgebraElement:
    """A nonzero element concentrated in one random degree, when possible."""
    f = random_element(graph, ring, rng, depth=depth, max_terms=3)
    degrees = f.degrees()
    if not degrees:
        return f
    return f.degree_component(rng.choice(degrees))


def random_tensor_element(
    gl: Graph,
    gr: Graph,
    ring: ScalarRing,
    rng: Random,
    depth: int = 2,
    max_terms: int = 3,
) -> TensorElement:
    triples = []
    for _ in range(rng.randint(0, max_terms)):
        triples.append(
            (
                random_scalar(ring, rng, nonzero=True),
                random_bisection(gl, rng, depth),
                random_bisection(gr, rng, depth),
            )
        )
    return tensor_from_pairs(gl, gr, ring, triples)


def random_product_element(
    gl: Graph,
    gr: Graph,
    ring: ScalarRing,
    rng: Random,
    depth: int = 2,
    max_terms: int = 3,
) -> ProductAlgebraElement:
    triples = []
    for _ in range(rng.randint(0, max_terms)):
        triples.append(
            (
                random_scalar(ring, rng, nonzero=True),
                random_bisection(gl, rng, depth),
                random_bisection(gr, rng, depth),
            )
        )
    return product_from_pairs(gl, gr, ring, triples)


def random_diagonal_product_element(
    gl: Graph, gr: Graph, ring: ScalarRing, rng: Random, depth: int = 2, max_terms: int = 3
) -> ProductAlgebraElement:
    triples = []
    for _ in range(rng.randint(0, max_terms)):
        a = random_path(gl, rng, depth)
        b = random_path(gr, rng, depth)
        triples.append(
            (
                random_scalar(ring, rng, nonzero=True),
                BasicBisection(a, a),
                BasicBisection(b, b),
            )
        )
    return product_from_pairs(gl, gr, ring, triples)


def random_leavitt_element(
    n: int, ring: ScalarRing, rng: Random, depth: int = 2, max_terms: int = 4
) -> LeavittElement:
    triples = []
    for _ in range(rng.randint(0, max_terms)):
        mu = tuple(rng.randint(1, n) for _ in range(rng.randint(0, depth)))
        nu = tuple(rng.randint(1, n) for _ in range(rng.randint(0, depth)))
        triples.append((random_scalar(ring, rng, nonzero=True), mu, nu))
    return from_monomials(n, ring, triples)


def random_diagonal_leavitt(
    n: int, ring: ScalarRing, rng: Random, depth: int = 2, max_terms: int = 3
) -> LeavittElement:
    triples = []
    for _ in range(rng.randint(0, max_terms)):
        mu = tuple(rng.randint(1, n) for _ in range(rng.randint(0, depth)))
        triples.append((random_scalar(ring, rng, nonzero=True), mu, mu))
    return from_monomials(n, ring, triples)


def random_expression_of(f: AlgebraElement, rng: Random) -> list[tuple[Scalar, BasicBisection]]:
    """A disjoint expression of `f`, obtained by randomly expanding terms.

    Children of disjoint cylinders stay disjoint, so the result is again a
    valid expression of the same function, generally different from the
    normal form.
    """
    pairs = []
    for r, b in f.term_items():
        extra = rng.randint(0, 2)
        for c in expand(b, len(b.alpha) + extra):
            pairs.append((r, c))
    rng.shuffle(pairs)
    return pairs


def random_expression_of_product(
    p: ProductAlgebraElement, rng: Random
) -> list[tuple[Scalar, ProductBisection]]:
    """A disjoint expression of a product-algebra element via factor expansion."""
    pairs = []
    for r, pb in p.term_items():
        el = rng.randint(0, 1)
        er = rng.randint(0, 1)
        for cl in expand(pb.left, len(pb.left.alpha) + el):
            for cr in expand(pb.right, len(pb.right.alpha) + er):
                pairs.append((r, ProductBisection(cl, cr)))
    rng.shuffle(pairs)
    return pairs


def random_disjoint_family_with_union(
    graph: Graph, rng: Random, depth: int = 2
) -> tuple[list[BasicBisection], BasicBisection]:
    """A random union bisection together with a disjoint family covering it."""
    union = random_cylinder(graph, rng, depth)
    level = len(union.alpha) + rng.randint(0, 2)
    members = expand(union, level)
    # regroup an expansion randomly: merge a few random sibling chunks back
    if members and rng.random() < 0.5:
        members = expand(union, max(len(union.alpha), level - 1))
    return members, union
