"""The convolution algebra of a boundary-path groupoid.

Elements are finite R-linear combinations of cylinder indicator functions
1_Z(alpha,beta), held in a canonical normal form: per degree class, terms are
uniformly expanded to the maximal alpha-length and summed (disjointification),
then full sibling families with one common coefficient are greedily merged.
The fixpoint is canonical, so equal functions normalize identically; equality
nevertheless re-expands both operands to a common depth, as an independent
finite comparison.

Convolution extends the bisection product bilinearly: 1_A * 1_B = 1_{AB}.
The involution is (r 1_Z(a,b))^* = conj(r) 1_Z(b,a).  The degree |alpha| -
|beta| grades the algebra over the integers.

`RepresentationAssignment` + `induced_hom` realize the universal property:
an assignment B -> t_B satisfying

  (R1) t_empty = 0,
  (R2) t_A t_B = t_{AB},
  (R3) sum_{B in F} t_B = t_{union F} for finite disjoint F with union in
       the basis,

induces r-linear images of disjoint expressions, independent of the chosen
expression.  `check_representation` spot-checks (R1)-(R3) on witness
families.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping

from . import _kernel
from . import bisections as bis
from .bisections import BasicBisection, from_cyl_key, key_member, product_single
from .errors import (
    GraphMismatchError,
    MissingAssignmentError,
    RingMismatchError,
    UnsupportedRingError,
)
from .graph import Graph, GroupoidPoint
from .scalars import INTEGERS, Scalar, ScalarRing, cast_scalar


class AlgebraElement:
    """A normal-form element of the convolution algebra A_R(G)."""

    __slots__ = ("graph", "ring", "_terms")

    def __init__(self, graph: Graph, ring: ScalarRing, terms: dict):
        # private: `terms` must already be in normal form (see from_terms)
        self.graph = graph
        self.ring = ring
        self._terms = terms

    # -- construction -------------------------------------------------------

    @staticmethod
    def zero(graph: Graph, ring: ScalarRing) -> "AlgebraElement":
        return AlgebraElement(graph, ring, {})

    @staticmethod
    def one(graph: Graph, ring: ScalarRing) -> "AlgebraElement":
        """Sum of the vertex cylinders; the identity (unit space is compact)."""
        return AlgebraElement(
            graph, ring, {((v,), (v,)): ring.one for v in range(graph.n_vertices)}
        )

    @staticmethod
    def indicator(b: BasicBisection, ring: ScalarRing) -> "AlgebraElement":
        return from_terms(b.graph, ring, [(ring.one, b)])

    # -- bookkeeping ---------------------------------------------------------

    def term_items(self) -> list[tuple[Scalar, BasicBisection]]:
        """Normal-form terms in the canonical printing order."""
        return [
            (self._terms[k], from_cyl_key(self.graph, k))
            for k in sorted(self._terms)
        ]

    @property
    def n_terms(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def canonical_key(self):
        return tuple(
            (k, (s.re.numerator, s.re.denominator, s.im.numerator, s.im.denominator))
            for k, s in sorted(self._terms.items())
        )

    def degrees(self) -> list[int]:
        return sorted({len(ka) - len(kb) for ka, kb in self._terms})

    def _check_compatible(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if other.graph is not self.graph:
            raise GraphMismatchError("elements over different graphs")
        if other.ring != self.ring:
            raise RingMismatchError("elements over different rings")

    # -- ring structure ------------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        out_edges, edge_rng = self.graph.kernel_data
        items = list(self._terms.items()) + list(other._terms.items())
        return AlgebraElement(
            self.graph, self.ring, _kernel.normalize_terms(out_edges, edge_rng, items)
        )

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-self.ring.one)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        out_edges, edge_rng = self.graph.kernel_data
        return AlgebraElement(
            self.graph,
            self.ring,
            _kernel.convolve_terms(out_edges, edge_rng, self._terms, other._terms),
        )

    def __rmul__(self, r):
        if isinstance(r, int):
            r = self.ring.scalar(r)
        if isinstance(r, Scalar):
            return self.scale(r)
        return NotImplemented

    def __neg__(self):
        return self.scale(-self.ring.one)

    def scale(self, r: Scalar) -> "AlgebraElement":
        if r.ring != self.ring:
            raise RingMismatchError("scalar from a different ring")
        if not r:
            return AlgebraElement.zero(self.graph, self.ring)
        # scaling by a nonzero scalar preserves normality (integral domain)
        return AlgebraElement(self.graph, self.ring, {k: v * r for k, v in self._terms.items()})

    def star(self) -> "AlgebraElement":
        """Involution: swap alpha/beta, conjugate the coefficient.

        Normal forms are closed under the swap, so no renormalization is
        needed.
        """
        return AlgebraElement(
            self.graph,
            self.ring,
            {(kb, ka): r.conjugate() for (ka, kb), r in self._terms.items()},
        )

    # -- queries -------------------------------------------------------------

    def evaluate(self, g: GroupoidPoint) -> Scalar:
        if g.graph is not self.graph:
            raise GraphMismatchError("point over a different graph")
        total = self.ring.zero
        for k, r in self._terms.items():
            if key_member(self.graph, k, g):
                total = total + r
        return total

    def is_diagonal(self) -> bool:
        return all(ka == kb for ka, kb in self._terms)

    def degree_component(self, d: int) -> "AlgebraElement":
        return AlgebraElement(
            self.graph,
            self.ring,
            {k: r for k, r in self._terms.items() if len(k[0]) - len(k[1]) == d},
        )

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.graph is not self.graph or other.ring != self.ring:
            return False
        if self._terms == other._terms:
            return True
        out_edges, edge_rng = self.graph.kernel_data
        levels: dict[int, int] = {}
        for terms in (self._terms, other._terms):
            for ka, kb in terms:
                d = len(ka) - len(kb)
                levels[d] = max(levels.get(d, 0), len(ka))
        left = _kernel.expand_terms(out_edges, edge_rng, self._terms, levels)
        right = _kernel.expand_terms(out_edges, edge_rng, other._terms, levels)
        return left == right

    __hash__ = None  # mutable-dict carrier; use canonical_key() for hashing needs

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{r}*{b}" for r, b in self.term_items())

    def __repr__(self):
        return f"<A_{self.ring.name}: {self}>"


# -- constructors ------------------------------------------------------------


def _pairs_to_items(graph: Graph, ring: ScalarRing, pairs) -> list:
    items = []
    for r, b in pairs:
        if not isinstance(b, BasicBisection):
            raise TypeError("expected (Scalar, BasicBisection) pairs")
        if b.graph is not graph:
            raise GraphMismatchError("bisection over a different graph")
        if r.ring != ring:
            raise RingMismatchError("coefficient from a different ring")
        if not r or b.is_empty:
            continue
        for c in bis.expand(b, len(b.alpha)):
            items.append(((c.alpha.key, c.beta.key), r))
    return items


def from_terms(
    graph: Graph, ring: ScalarRing, pairs: Iterable[tuple[Scalar, BasicBisection]]
) -> AlgebraElement:
    """Normal-form element of sum r_B 1_B; excluded sets are expanded away."""
    out_edges, edge_rng = graph.kernel_data
    items = _pairs_to_items(graph, ring, pairs)
    return AlgebraElement(graph, ring, _kernel.normalize_terms(out_edges, edge_rng, items))


def disjointify(
    graph: Graph, ring: ScalarRing, pairs: Iterable[tuple[Scalar, BasicBisection]]
) -> list[tuple[Scalar, BasicBisection]]:
    """Rewrite sum r_B 1_B over pairwise disjoint cylinders (no collapsing).

    This is the finite-partition stage of the normal form: per degree class a
    uniform expansion refines every overlap, coefficients of coinciding
    cylinders add up, zero terms vanish.
    """
    out_edges, edge_rng = graph.kernel_data
    items = _pairs_to_items(graph, ring, pairs)
    acc = _kernel.disjointify_terms(out_edges, edge_rng, items)
    return [(acc[k], from_cyl_key(graph, k)) for k in sorted(acc)]


def convolve(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    return f * g


def star(f: AlgebraElement) -> AlgebraElement:
    return f.star()


def evaluate(f: AlgebraElement, g: GroupoidPoint) -> Scalar:
    return f.evaluate(g)


def is_diagonal(f: AlgebraElement) -> bool:
    return f.is_diagonal()


def degree_component(f: AlgebraElement, d: int) -> AlgebraElement:
    return f.degree_component(d)


def map_scalars(f: AlgebraElement, target: ScalarRing) -> AlgebraElement:
    """Coefficientwise image under the inclusion of the integers in `target`.

    A ring homomorphism A_Z(G) -> A_target(G) fixing every 1_B; only the
    inclusions out of the integers are supported.
    """
    if f.ring != INTEGERS:
        raise UnsupportedRingError(f"no supported ring map {f.ring.name} -> {target.name}")
    return AlgebraElement(f.graph, target, {k: cast_scalar(r, target) for k, r in f._terms.items()})


# -- universal property -------------------------------------------------------


@dataclass
class RepresentationAssignment:
    """An assignment B -> t_B into an algebra-like target.

    `zero` is the target's zero; target values must support `+`, `*`, `==`
    and left scalar action (`Scalar * value`).  `assign` is a mapping or a
    callable on basis elements.  `empty` optionally names a canonical empty
    basis element for the (R1) check, `product_fn` the closed-form basis
    product for (R2) (None result meaning the empty set), and `disjoint_fn`
    a pairwise disjointness test used to guard expressions.
    """

    zero: Any
    assign: Callable[[Any], Any] | Mapping
    empty: Any = None
    product_fn: Callable[[Any, Any], Any] | None = None
    disjoint_fn: Callable[[Any, Any], bool] | None = None
    name: str = "representation"

    def apply(self, b) -> Any:
        if callable(self.assign):
            return self.assign(b)
        try:
            return self.assign[b]
        except KeyError:
            raise MissingAssignmentError(f"no assignment entry for {b}") from None


def identity_representation(graph: Graph, ring: ScalarRing) -> RepresentationAssignment:
    """t_B = 1_B inside the algebra itself."""
    empty_alpha = graph.empty_path(graph.vertex_ids[0])
    return RepresentationAssignment(
        zero=AlgebraElement.zero(graph, ring),
        assign=lambda b: AlgebraElement.indicator(b, ring),
        empty=BasicBisection(
            empty_alpha, empty_alpha, frozenset(graph.out_edges[empty_alpha.range_idx])
        ),
        product_fn=product_single,
        disjoint_fn=lambda a, b: not bis.intersect(a, b),
        name="identity",
    )


def induced_hom_on_expression(
    rep: RepresentationAssignment, pairs: Iterable[tuple[Scalar, Any]]
) -> Any:
    """sum r_B t_B for one expression over pairwise disjoint basis elements."""
    pairs = list(pairs)
    if rep.disjoint_fn is not None:
        for i, (_, a) in enumerate(pairs):
            for _, b in pairs[i + 1 :]:
                if not rep.disjoint_fn(a, b):
                    raise ValueError(f"expression terms overlap: {a} and {b}")
    total = rep.zero
    for r, b in pairs:
        total = total + r * rep.apply(b)
    return total


def induced_hom(rep: RepresentationAssignment, f) -> Any:
    """Image of an element under the homomorphism induced by `rep`.

    Computed on the element's normal form, which is one disjoint expression;
    well-definedness across expressions is (R3)'s doing and is exercised by
    `induced_hom_on_expression` directly in the tests.
    """
    return induced_hom_on_expression(rep, f.term_items())


@dataclass
class RepresentationReport:
    r1_checked: int = 0
    r2_checked: int = 0
    r3_checked: int = 0
    failures: list[str] = None

    def __post_init__(self):
        if self.failures is None:
            self.failures = []

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None


def check_representation(
    rep: RepresentationAssignment,
    families: Iterable[tuple[Iterable[Any], Any]],
) -> RepresentationReport:
    """Verify (R1) once, (R2) on all member pairs, (R3) on each family.

    Each witness is a pair (members, union): a finite family of pairwise
    disjoint basis elements together with its union, which must itself be a
    basis element.
    """
    report = RepresentationReport()
    if rep.empty is not None:
        report.r1_checked += 1
        try:
            if not (rep.apply(rep.empty) == rep.zero):
                report.failures.append("(R1) t_empty != 0")
        except MissingAssignmentError as exc:
            report.failures.append(f"(R1) {exc}")
    for members, union in families:
        members = list(members)
        if rep.product_fn is not None:
            for a in members:
                for b in members:
                    report.r2_checked += 1
                    try:
                        ab = rep.product_fn(a, b)
                        expected = rep.zero if ab is None else rep.apply(ab)
                        if not (rep.apply(a) * rep.apply(b) == expected):
                            report.failures.append(f"(R2) t_A t_B != t_AB for A={a}, B={b}")
                    except MissingAssignmentError as exc:
                        report.failures.append(f"(R2) {exc}")
        report.r3_checked += 1
        try:
            total = rep.zero
            for m in members:
                total = total + rep.apply(m)
            if not (total == rep.apply(union)):
                report.failures.append(f"(R3) sum over family != t_union for union={union}")
        except MissingAssignmentError as exc:
            report.failures.append(f"(R3) {exc}")
    return report
