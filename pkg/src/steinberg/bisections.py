"""Basic compact open bisections Z(alpha, beta, F) and their semigroup.

Z(alpha, beta) is the set of groupoid elements (alpha x, |alpha|-|beta|,
beta x) with x an infinite path from the common range of alpha and beta;
Z(alpha, beta, F) removes, for each excluded edge e in F, the branch
Z(alpha e, beta e).  Over a no-sink graph,

    Z(alpha, beta, F) = union over e not in F of Z(alpha e, beta e),

so an excluded set is always eliminable by expanding one level.  The
excluded-set-free cylinders are the internal canonical carrier; the F-form is
accepted everywhere and expanded on demand.

Two computation routes coexist by design and are cross-checked in the test
suite:

* closed-form products and relative complements on the F-forms (the
  subsemigroup structure, `product_single` / `relative_complement`), and
* the expansion route on cylinder lists (`product`,
  `relative_complement_by_expansion`), which serves as the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering

from . import _kernel
from .errors import GraphMismatchError, PathError, SemanticError
from .graph import Graph, GroupoidPoint, Path


@total_ordering
@dataclass(frozen=True)
class BasicBisection:
    """Z(alpha, beta, excluded); empty iff every emitted edge is excluded."""

    alpha: Path
    beta: Path
    excluded: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.beta.graph is not self.alpha.graph:
            raise GraphMismatchError("alpha and beta over different graphs")
        if self.alpha.range_idx != self.beta.range_idx:
            raise PathError("alpha and beta must share their range vertex")
        emitted = set(self.graph.out_edges[self.alpha.range_idx])
        if not set(self.excluded) <= emitted:
            raise SemanticError("excluded edges must be emitted by range(alpha)")

    @property
    def graph(self) -> Graph:
        return self.alpha.graph

    @property
    def degree(self) -> int:
        return len(self.alpha) - len(self.beta)

    @property
    def is_empty(self) -> bool:
        return len(self.excluded) == len(self.graph.out_edges[self.alpha.range_idx])

    @property
    def is_cylinder(self) -> bool:
        return not self.excluded

    @property
    def key(self):
        return (self.alpha.key, self.beta.key, tuple(sorted(self.excluded)))

    def sort_key(self):
        return (self.alpha.key, self.beta.key, tuple(sorted(self.excluded)))

    def __lt__(self, other: "BasicBisection") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self):
        core = f"Z({self.alpha},{self.beta}"
        if self.excluded:
            ids = ",".join(sorted((self.graph.edge_ids[e] for e in self.excluded),
                                  key=lambda s: (len(s), s)))
            return core + f"|{ids})"
        return core + ")"

    def __repr__(self):
        return f"BasicBisection({self})"


def cylinder(alpha: Path, beta: Path) -> BasicBisection:
    return BasicBisection(alpha, beta)


def _check_same_graph(a: BasicBisection, b: BasicBisection):
    if a.graph is not b.graph:
        raise GraphMismatchError("bisections over different graphs")


def _cyl_key(b: BasicBisection):
    return (b.alpha.key, b.beta.key)


def from_cyl_key(graph: Graph, key) -> BasicBisection:
    return BasicBisection(graph.path_from_key(key[0]), graph.path_from_key(key[1]))


def min_cylinder_length(b: BasicBisection) -> int:
    """Smallest alpha-length at which b is a union of plain cylinders."""
    return len(b.alpha) + (1 if b.excluded else 0)


def expand(b: BasicBisection, target_alpha_length: int) -> list[BasicBisection]:
    """Rewrite b as pairwise disjoint cylinders with |alpha| = target.

    Requires target >= |alpha(b)|.  A nonempty excluded set needs one extra
    level to eliminate, so the effective target is bumped to |alpha(b)| + 1
    in that case.  Returns [] exactly when b is empty.
    """
    if target_alpha_length < len(b.alpha):
        raise ValueError("target length is shorter than alpha")
    if b.is_empty:
        return []
    g = b.graph
    out_edges, edge_rng = g.kernel_data
    target = max(target_alpha_length, min_cylinder_length(b))
    if b.excluded:
        heads = [
            (b.alpha.key + (e,), b.beta.key + (e,))
            for e in out_edges[b.alpha.range_idx]
            if e not in b.excluded
        ]
        extra = target - len(b.alpha) - 1
    else:
        heads = [_cyl_key(b)]
        extra = target - len(b.alpha)
    keys = []
    for head in heads:
        keys.extend(_kernel.expand_cyl(out_edges, edge_rng, head, extra))
    return sorted((from_cyl_key(g, k) for k in keys))


def inverse(b: BasicBisection) -> BasicBisection:
    """Z(alpha, beta, F)^{-1} = Z(beta, alpha, F)."""
    return BasicBisection(b.beta, b.alpha, b.excluded)


def product_single(a: BasicBisection, b: BasicBisection) -> BasicBisection | None:
    """Closed-form product a.b, always a single basic bisection or None.

    The basis is closed under the set product: writing a = Z(al, be, F) and
    b = Z(ga, de, H), the contact between be and ga decides everything.

    * be == ga:              a.b = Z(al, de, F | H)
    * ga == be.t, t nonempty: a.b = Z(al.t, de, H), empty if t starts in F
    * be == ga.t, t nonempty: a.b = Z(al, de.t, F), empty if t starts in H
    * otherwise the supports miss each other.
    """
    _check_same_graph(a, b)
    if a.is_empty or b.is_empty:
        return None
    be, ga = a.beta, b.alpha
    if be.key == ga.key:
        merged = a.excluded | b.excluded
        res = BasicBisection(a.alpha, b.beta, merged)
        return None if res.is_empty else res
    if be.is_prefix_of(ga):
        tau = ga.strip_prefix(be)
        if tau.edges[0] in a.excluded:
            return None
        return BasicBisection(a.alpha.concat(tau), b.beta, b.excluded)
    if ga.is_prefix_of(be):
        tau = be.strip_prefix(ga)
        if tau.edges[0] in b.excluded:
            return None
        return BasicBisection(a.alpha, b.beta.concat(tau), a.excluded)
    return None


def product(a: BasicBisection, b: BasicBisection) -> list[BasicBisection]:
    """The set product a.b as a disjoint list of cylinders.

    Both operands are expanded to cylinders first; products of the uniform
    expansions are automatically pairwise disjoint.
    """
    _check_same_graph(a, b)
    out = []
    for ca in expand(a, len(a.alpha)):
        ka = _cyl_key(ca)
        for cb in expand(b, len(b.alpha)):
            k = _kernel.cyl_mul(ka, _cyl_key(cb))
            if k is not None:
                out.append(from_cyl_key(a.graph, k))
    return sorted(out)


def intersect(a: BasicBisection, b: BasicBisection) -> list[BasicBisection]:
    """a intersect b as a disjoint cylinder list (empty when degrees differ)."""
    _check_same_graph(a, b)
    if a.degree != b.degree or a.is_empty or b.is_empty:
        return []
    level = max(min_cylinder_length(a), min_cylinder_length(b))
    left = {_cyl_key(c) for c in expand(a, level)}
    right = {_cyl_key(c) for c in expand(b, level)}
    return sorted(from_cyl_key(a.graph, k) for k in left & right)


def relative_complement(a: BasicBisection, b: BasicBisection) -> list[BasicBisection]:
    """a minus b as a disjoint list of basic bisections, in closed form.

    Writing a = Z(al, be, F) and b = Z(ga, de, H), the cases are decided by
    prefix comparability of the path pairs:

    * different degrees, or pairs that do not align along one common
      extension: the sets are disjoint, return [a];
    * (ga, de) == (al, be):  a minus b = union over e in H minus F of
      Z(al e, be e);
    * (ga, de) == (al k, be k) for nonempty k not starting in F: peel the
      branch chain along k and keep b's excluded branches,
        Z(al, be, F + {k1}) + Z(al k1, be k1, {k2}) + ... +
        Z(al k1..k_{m-1}, be k1..k_{m-1}, {k_m}) + sum_{e in H} Z(al k e, be k e);
    * (al, be) == (ga k, de k) for nonempty k: a sits inside one branch of b,
      so the difference is empty unless that branch is excluded from b.

    Empty pieces are dropped.  `relative_complement_by_expansion` recomputes
    the same set by brute expansion and is the oracle in the tests.
    """
    _check_same_graph(a, b)
    if a.is_empty:
        return []
    if b.is_empty or a.degree != b.degree:
        return [a]
    g = a.graph
    al, be, F = a.alpha, a.beta, a.excluded
    ga, de, H = b.alpha, b.beta, b.excluded
    if al.key == ga.key and be.key == de.key:
        return sorted(
            BasicBisection(al.concat(_edge_path(g, e)), be.concat(_edge_path(g, e)))
            for e in H - F
        )
    if al.is_prefix_of(ga) and be.is_prefix_of(de):
        kappa = ga.strip_prefix(al)
        if de.strip_prefix(be).edges != kappa.edges:
            return [a]  # pairs diverge: no common point, sets disjoint
        if kappa.edges[0] in F:
            return [a]
        pieces = []
        cur_a, cur_b = al, be
        chain_excl = F
        for e in kappa.edges:
            piece = BasicBisection(cur_a, cur_b, frozenset(chain_excl) | {e})
            if not piece.is_empty:
                pieces.append(piece)
            step = _edge_path(g, e)
            cur_a, cur_b = cur_a.concat(step), cur_b.concat(step)
            chain_excl = frozenset()
        for e in H:
            step = _edge_path(g, e)
            pieces.append(BasicBisection(cur_a.concat(step), cur_b.concat(step)))
        return sorted(pieces)
    if ga.is_prefix_of(al) and de.is_prefix_of(be):
        kappa = al.strip_prefix(ga)
        if be.strip_prefix(de).edges != kappa.edges:
            return [a]
        return [a] if kappa.edges[0] in H else []
    return [a]


def relative_complement_by_expansion(a: BasicBisection, b: BasicBisection) -> list[BasicBisection]:
    """Oracle route: expand both operands to a common level and subtract keys."""
    _check_same_graph(a, b)
    if a.degree != b.degree or b.is_empty:
        return expand(a, len(a.alpha))
    level = max(min_cylinder_length(a), min_cylinder_length(b))
    left = {_cyl_key(c) for c in expand(a, level)}
    right = {_cyl_key(c) for c in expand(b, level)}
    return sorted(from_cyl_key(a.graph, k) for k in left - right)


def _edge_path(g: Graph, e: int) -> Path:
    return Path(g, g.edge_src[e], (e,))


def member(g: GroupoidPoint, b: BasicBisection) -> bool:
    """Point membership: prefixes match, shifted tails agree, k equals the
    degree, and the continuation edge is not excluded."""
    if g.graph is not b.graph:
        raise GraphMismatchError("point and bisection over different graphs")
    if g.k != b.degree:
        return False
    if not g.x.starts_with(b.alpha) or not g.y.starts_with(b.beta):
        return False
    if g.x.shift(len(b.alpha)) != g.y.shift(len(b.beta)):
        return False
    return not (b.excluded and g.x.edge_at(len(b.alpha)) in b.excluded)


def key_member(graph: Graph, cyl_key, g: GroupoidPoint) -> bool:
    """Membership against a kernel cylinder key, avoiding object churn."""
    ka, kb = cyl_key
    la, lb = len(ka) - 1, len(kb) - 1
    if g.k != la - lb:
        return False
    if g.x.source_idx != ka[0] or g.y.source_idx != kb[0]:
        return False
    if any(g.x.edge_at(i) != e for i, e in enumerate(ka[1:])):
        return False
    if any(g.y.edge_at(i) != e for i, e in enumerate(kb[1:])):
        return False
    return g.x.shift(la) == g.y.shift(lb)
