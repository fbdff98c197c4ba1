"""Projection structure, diagonal preservation, and the tuple decision procedure.

Over a kind coefficient ring, every projection (p = p*p = p^*) in a
groupoid convolution algebra lies in the diagonal subalgebra; the searches
here probe that statement exhaustively at small depth and randomly at larger
depth, and raise if a counterexample ever shows up over a kind ring.

For the one-vertex n-loop groupoids, the Bowen-Franks group of the 1 x 1
adjacency matrix [n] is the cyclic group of order n - 1, and tuples
(n_1, ..., n_k) of factors are separated by (a) the isotropy rank k and
(b) the multiset of factor sizes.  `decide_tensor_tuples` implements that
arithmetic and reports the evidence: a non-Equal verdict rules out any
diagonal-preserving isomorphism over an indecomposable ring, and any
*-isomorphism over a kind ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import AlgebraElement, from_terms
from .bisections import BasicBisection
from .errors import InvariantViolationError
from .graph import Graph
from .scalars import Scalar, ScalarRing


def is_projection(f: AlgebraElement) -> bool:
    """p = p*p and p = p^*, by exact normal-form comparison."""
    return f.star() == f and f * f == f


@dataclass
class ProjectionSearchReport:
    candidates: int
    projections: list[AlgebraElement]
    diagonal_flags: list[bool]
    ring_is_kind: bool

    @property
    def non_diagonal(self) -> list[AlgebraElement]:
        return [p for p, d in zip(self.projections, self.diagonal_flags) if not d]


def _all_cylinders(graph: Graph, depth: int) -> list[BasicBisection]:
    """Every Z(alpha, beta) with |alpha|, |beta| <= depth, canonically ordered."""
    paths = []
    for v in graph.vertex_ids:
        paths.extend(graph.empty_path(v).extensions_of_length(0))
    for v in graph.vertex_ids:
        base = graph.empty_path(v)
        for m in range(1, depth + 1):
            paths.extend(base.extensions_of_length(m))
    out = []
    for a in paths:
        for b in paths:
            if a.range_idx == b.range_idx:
                out.append(BasicBisection(a, b))
    return sorted(out)


def _record(report: ProjectionSearchReport, seen: set, f: AlgebraElement):
    key = f.canonical_key()
    if key in seen:
        return
    seen.add(key)
    report.projections.append(f)
    report.diagonal_flags.append(f.is_diagonal())
    if report.ring_is_kind and not f.is_diagonal():
        raise InvariantViolationError(
            f"non-diagonal projection over kind ring {f.ring.name}: {f}"
        )


def search_projections(
    graph: Graph, ring: ScalarRing, depth: int, coeff_bound: int
) -> ProjectionSearchReport:
    """Exhaustive projection search over bounded supports.

    Enumerates every element supported on the cylinders with path lengths at
    most `depth` and integer coefficient numerators in [-coeff_bound,
    coeff_bound], tests p = p^* = p*p, and deduplicates by normal form.  Over
    a kind ring a non-diagonal find raises InvariantViolationError.
    """
    cylinders = _all_cylinders(graph, depth)
    coeffs = [ring.scalar(c) for c in range(-coeff_bound, coeff_bound + 1)]
    report = ProjectionSearchReport(0, [], [], bool(ring.is_kind))
    seen: set = set()
    for vector in itertools.product(coeffs, repeat=len(cylinders)):
        report.candidates += 1
        f = from_terms(graph, ring, list(zip(vector, cylinders)))
        if is_projection(f):
            _record(report, seen, f)
    return report


def random_projection_search(
    graph: Graph,
    ring: ScalarRing,
    depth: int,
    coeff_bound: int,
    samples: int,
    rng,
    max_terms: int = 6,
) -> ProjectionSearchReport:
    """Seeded random probe of the same space at depths too large to exhaust."""
    cylinders = _all_cylinders(graph, depth)
    nonzero = [ring.scalar(c) for c in range(-coeff_bound, coeff_bound + 1) if c != 0]
    report = ProjectionSearchReport(0, [], [], bool(ring.is_kind))
    seen: set = set()
    for _ in range(samples):
        report.candidates += 1
        k = rng.randint(1, max_terms)
        support = rng.sample(cylinders, min(k, len(cylinders)))
        pairs = [(rng.choice(nonzero), b) for b in support]
        f = from_terms(graph, ring, pairs)
        # cheap necessary condition first: normal forms are closed under star
        if f.star() != f:
            continue
        if f * f == f:
            _record(report, seen, f)
    return report


@dataclass
class DiagonalPreservationReport:
    hom: str
    samples: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_diagonal_preservation(hom_name: str, samples: int, rng) -> DiagonalPreservationReport:
    """Sample diagonal inputs of the named *-homomorphism and check images.

    Supported names: identity, sigma, pi, map_scalars, to_steinberg.  No
    counterexample is expected for any of them.
    """
    from . import sampling
    from .algebra import map_scalars
    from .graph import cuntz_graph
    from .leavitt import to_steinberg
    from .scalars import INTEGERS, RATIONALS
    from .tensor import ProductAlgebraElement, pi, sigma, simple_tensor

    report = DiagonalPreservationReport(hom_name, samples)
    g2 = cuntz_graph(2)
    g3 = cuntz_graph(3)
    for i in range(samples):
        if hom_name == "identity":
            f = sampling.random_diagonal_element(g2, INTEGERS, rng, depth=2)
            image, was = f, f.is_diagonal()
        elif hom_name == "sigma":
            t = simple_tensor(
                sampling.random_diagonal_element(g2, INTEGERS, rng, depth=2),
                sampling.random_diagonal_element(g3, INTEGERS, rng, depth=2),
            )
            image, was = sigma(t), t.is_diagonal()
        elif hom_name == "pi":
            p = sampling.random_diagonal_product_element(g2, g3, INTEGERS, rng, depth=2)
            image, was = pi(p), p.is_diagonal()
        elif hom_name == "map_scalars":
            f = sampling.random_diagonal_element(g2, INTEGERS, rng, depth=2)
            image, was = map_scalars(f, RATIONALS), f.is_diagonal()
        elif hom_name == "to_steinberg":
            a = sampling.random_diagonal_leavitt(2, INTEGERS, rng, depth=3)
            image, was = to_steinberg(a), a.is_diagonal()
        else:
            raise ValueError(f"unknown homomorphism {hom_name!r}")
        if was and not image.is_diagonal():
            report.failures.append(f"sample {i}: diagonal input, non-diagonal image")
    return report


def is_effective(graph: Graph) -> bool:
    """Every cycle has an exit.

    A cycle without an exit forces out-degree 1 along the whole cycle, so it
    suffices to look for a cycle in the partial functional graph of
    out-degree-1 vertices.
    """
    succ = {}
    for v in range(graph.n_vertices):
        if len(graph.out_edges[v]) == 1:
            succ[v] = graph.edge_rng[graph.out_edges[v][0]]
    color = {v: 0 for v in succ}  # 0 unvisited, 1 on stack, 2 done
    for start in succ:
        if color[start]:
            continue
        v = start
        stack = []
        while v in succ and color[v] == 0:
            color[v] = 1
            stack.append(v)
            v = succ[v]
        if v in succ and color[v] == 1:
            return False  # closed walk of forced moves: a cycle with no exit
        for u in stack:
            color[u] = 2
    return True


@dataclass(frozen=True)
class FiniteCyclicGroup:
    """Cyclic group encoded by order; 0 means infinite cyclic, 1 trivial."""

    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def __str__(self):
        return "Z" if self.order == 0 else f"Z/{self.order}"


def bowen_franks(n: int) -> FiniteCyclicGroup:
    """BF([n]) for the 1 x 1 adjacency matrix [n]: cyclic of order n - 1."""
    if n < 2:
        raise ValueError("bowen_franks requires n >= 2")
    return FiniteCyclicGroup(n - 1)


class TupleReason:
    LENGTH_MISMATCH = "LengthMismatch"
    SORTED_TUPLES_DIFFER = "SortedTuplesDiffer"
    EQUAL = "Equal"


@dataclass(frozen=True)
class TupleVerdict:
    same: bool
    reason: str
    ns_sorted: tuple[int, ...]
    ms_sorted: tuple[int, ...]
    isotropy_ranks: tuple[int, int]
    bf_ns: tuple[FiniteCyclicGroup, ...]
    bf_ms: tuple[FiniteCyclicGroup, ...]


def decide_tensor_tuples(ns, ms) -> TupleVerdict:
    """Compare factor tuples of one-vertex groupoids up to permutation.

    Equal sorted tuples are the only way the product groupoids can be
    isomorphic; the verdict carries the isotropy ranks (tuple lengths) and
    the Bowen-Franks groups of the sorted factors as evidence.
    """
    ns = tuple(int(x) for x in ns)
    ms = tuple(int(x) for x in ms)
    if not ns or not ms:
        raise ValueError("tuples must be nonempty")
    if any(x < 2 for x in ns + ms):
        raise ValueError("all entries must be >= 2")
    ns_sorted, ms_sorted = tuple(sorted(ns)), tuple(sorted(ms))
    bf_ns = tuple(bowen_franks(x) for x in ns_sorted)
    bf_ms = tuple(bowen_franks(x) for x in ms_sorted)
    ranks = (len(ns), len(ms))
    if len(ns) != len(ms):
        reason, same = TupleReason.LENGTH_MISMATCH, False
    elif ns_sorted != ms_sorted:
        reason, same = TupleReason.SORTED_TUPLES_DIFFER, False
    else:
        reason, same = TupleReason.EQUAL, True
    return TupleVerdict(same, reason, ns_sorted, ms_sorted, ranks, bf_ns, bf_ms)
