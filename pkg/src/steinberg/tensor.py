"""Tensor products of two groupoid algebras and the product-groupoid algebra.

Both sides of the canonical isomorphism live here:

* `TensorElement`   -- elements of A_R(G) (x) A_R(H), stored as linear
  combinations of simple tensors 1_A (x) 1_B over cylinder pairs;
* `ProductAlgebraElement` -- elements of A_R(G x H), spanned by indicators of
  product bisections A x B (the product groupoid multiplies componentwise).

Both use one bi-term normal form: per pair-degree class, uniform expansion in
each factor (making the coordinate families disjoint per factor), then
alternating left/right sibling collapse.  Equality always re-expands to a
common bi-depth, so it never depends on the collapse order.

`sigma` sends 1_A (x) 1_B to 1_{A x B}; `pi` goes back and is realized through
the generic induced-homomorphism machinery with the assignment
t_{A x B} = 1_A (x) 1_B, whose (R1)-(R3) axioms are checkable on witness
families built with `refine_families`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable

from . import _kernel
from . import bisections as bis
from .algebra import AlgebraElement, RepresentationAssignment, induced_hom
from .bisections import BasicBisection, from_cyl_key, key_member
from .errors import GraphMismatchError, RingMismatchError
from .graph import Graph, GroupoidPoint
from .scalars import Scalar, ScalarRing


@total_ordering
@dataclass(frozen=True)
class ProductBisection:
    """A basic bisection A x B of the product groupoid."""

    left: BasicBisection
    right: BasicBisection

    @property
    def is_empty(self) -> bool:
        return self.left.is_empty or self.right.is_empty

    @property
    def degree(self) -> tuple[int, int]:
        return (self.left.degree, self.right.degree)

    def sort_key(self):
        return (self.left.sort_key(), self.right.sort_key())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return f"{self.left}x{self.right}"


def product_single_pb(a: ProductBisection, b: ProductBisection) -> ProductBisection | None:
    """(A1 x B1)(A2 x B2) = A1 A2 x B1 B2; None when either side is empty."""
    left = bis.product_single(a.left, b.left)
    if left is None:
        return None
    right = bis.product_single(a.right, b.right)
    if right is None:
        return None
    return ProductBisection(left, right)


def inverse_pb(a: ProductBisection) -> ProductBisection:
    return ProductBisection(bis.inverse(a.left), bis.inverse(a.right))


def intersect_pb(a: ProductBisection, b: ProductBisection) -> list[ProductBisection]:
    return sorted(
        ProductBisection(l, r)
        for l in bis.intersect(a.left, b.left)
        for r in bis.intersect(a.right, b.right)
    )


def relative_complement_pb(a: ProductBisection, b: ProductBisection) -> list[ProductBisection]:
    """Componentwise three-piece decomposition of (A1 x B1) minus (A2 x B2)."""
    l_minus = bis.relative_complement(a.left, b.left)
    l_meet = bis.intersect(a.left, b.left)
    r_minus = bis.relative_complement(a.right, b.right)
    r_meet = bis.intersect(a.right, b.right)
    pieces = [ProductBisection(l, r) for l in l_minus for r in r_meet]
    pieces += [ProductBisection(l, r) for l in l_meet for r in r_minus]
    pieces += [ProductBisection(l, r) for l in l_minus for r in r_minus]
    return sorted(p for p in pieces if not p.is_empty)


def disjoint_pb(a: ProductBisection, b: ProductBisection) -> bool:
    return not bis.intersect(a.left, b.left) or not bis.intersect(a.right, b.right)


def member_pair(gx: GroupoidPoint, gy: GroupoidPoint, p: ProductBisection) -> bool:
    return bis.member(gx, p.left) and bis.member(gy, p.right)


# -- shared bi-term machinery --------------------------------------------------
#
# term key: (cyl_left, cyl_right) with cyl = (alpha_key, beta_key)


def _bi_disjointify(kl, kr, items):
    out_l, rng_l = kl
    out_r, rng_r = kr
    by_class: dict = {}
    for (cl, cr), r in items:
        if not r:
            continue
        d = (len(cl[0]) - len(cl[1]), len(cr[0]) - len(cr[1]))
        by_class.setdefault(d, []).append((cl, cr, r))
    acc: dict = {}
    for lst in by_class.values():
        tl = max(len(cl[0]) for cl, _, _ in lst)
        tr = max(len(cr[0]) for _, cr, _ in lst)
        for cl, cr, r in lst:
            lefts = _kernel.expand_cyl(out_l, rng_l, cl, tl - len(cl[0]))
            rights = _kernel.expand_cyl(out_r, rng_r, cr, tr - len(cr[0]))
            for el in lefts:
                for er in rights:
                    key = (el, er)
                    if key in acc:
                        s = acc[key] + r
                        if s:
                            acc[key] = s
                        else:
                            del acc[key]
                    else:
                        acc[key] = r
    return acc


def _collapse_side(out_edges, edge_rng, acc, side: int) -> bool:
    changed = False
    while True:
        parents: dict = {}
        for key in acc:
            c = key[side]
            pa, pb = c
            if len(pa) > 1 and len(pb) > 1 and pa[-1] == pb[-1]:
                parent_c = (pa[:-1], pb[:-1])
                parent = (parent_c, key[1]) if side == 0 else (key[0], parent_c)
                parents.setdefault(parent, []).append(key)
        merged = False
        for parent, children in parents.items():
            qa = parent[side][0]
            v = qa[0] if len(qa) == 1 else edge_rng[qa[-1]]
            if len(children) != len(out_edges[v]):
                continue
            r0 = acc[children[0]]
            if all(acc[c] == r0 for c in children[1:]):
                for c in children:
                    del acc[c]
                acc[parent] = r0
                merged = changed = True
        if not merged:
            return changed


def _bi_normalize(kl, kr, items) -> dict:
    acc = _bi_disjointify(kl, kr, items)
    while True:
        left_changed = _collapse_side(kl[0], kl[1], acc, 0)
        right_changed = _collapse_side(kr[0], kr[1], acc, 1)
        if not (left_changed or right_changed):
            return acc


def _bi_expand(kl, kr, terms, levels) -> dict:
    out_l, rng_l = kl
    out_r, rng_r = kr
    acc = {}
    for (cl, cr), r in terms.items():
        d = (len(cl[0]) - len(cl[1]), len(cr[0]) - len(cr[1]))
        tl, tr = levels[d]
        for el in _kernel.expand_cyl(out_l, rng_l, cl, tl - len(cl[0])):
            for er in _kernel.expand_cyl(out_r, rng_r, cr, tr - len(cr[0])):
                acc[(el, er)] = r
    return acc


class _BiTermElement:
    """Shared carrier for tensor and product-groupoid elements."""

    __slots__ = ("graph_left", "graph_right", "ring", "_terms")

    def __init__(self, graph_left: Graph, graph_right: Graph, ring: ScalarRing, terms: dict):
        self.graph_left = graph_left
        self.graph_right = graph_right
        self.ring = ring
        self._terms = terms

    def _k(self):
        return self.graph_left.kernel_data, self.graph_right.kernel_data

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"expected {type(self).__name__}, got {type(other).__name__}")
        if other.graph_left is not self.graph_left or other.graph_right is not self.graph_right:
            raise GraphMismatchError("elements over different graph pairs")
        if other.ring != self.ring:
            raise RingMismatchError("elements over different rings")

    def term_items(self) -> list[tuple[Scalar, ProductBisection]]:
        out = []
        for key in sorted(self._terms):
            cl, cr = key
            out.append(
                (
                    self._terms[key],
                    ProductBisection(
                        from_cyl_key(self.graph_left, cl), from_cyl_key(self.graph_right, cr)
                    ),
                )
            )
        return out

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        self._check(other)
        kl, kr = self._k()
        items = list(self._terms.items()) + list(other._terms.items())
        return type(self)(
            self.graph_left, self.graph_right, self.ring, _bi_normalize(kl, kr, items)
        )

    def __sub__(self, other):
        return self + other.scale(-self.ring.one)

    def __rmul__(self, r):
        if isinstance(r, int):
            r = self.ring.scalar(r)
        if isinstance(r, Scalar):
            return self.scale(r)
        return NotImplemented

    def __neg__(self):
        return self.scale(-self.ring.one)

    def scale(self, r: Scalar):
        if r.ring != self.ring:
            raise RingMismatchError("scalar from a different ring")
        if not r:
            return type(self)(self.graph_left, self.graph_right, self.ring, {})
        return type(self)(
            self.graph_left, self.graph_right, self.ring,
            {k: v * r for k, v in self._terms.items()},
        )

    def __mul__(self, other):
        """Componentwise bilinear product (convolution in each factor)."""
        self._check(other)
        kl, kr = self._k()
        items = []
        for (al, ar), r in self._terms.items():
            for (bl, br), s in other._terms.items():
                pl = _kernel.cyl_mul(al, bl)
                if pl is None:
                    continue
                pr = _kernel.cyl_mul(ar, br)
                if pr is None:
                    continue
                rs = r * s
                if rs:
                    items.append(((pl, pr), rs))
        return type(self)(
            self.graph_left, self.graph_right, self.ring, _bi_normalize(kl, kr, items)
        )

    def star(self):
        """Componentwise involution with conjugated coefficients."""
        return type(self)(
            self.graph_left,
            self.graph_right,
            self.ring,
            {
                ((cl[1], cl[0]), (cr[1], cr[0])): r.conjugate()
                for (cl, cr), r in self._terms.items()
            },
        )

    def is_diagonal(self) -> bool:
        return all(cl[0] == cl[1] and cr[0] == cr[1] for cl, cr in self._terms)

    def evaluate_pair(self, gx: GroupoidPoint, gy: GroupoidPoint) -> Scalar:
        total = self.ring.zero
        for (cl, cr), r in self._terms.items():
            if key_member(self.graph_left, cl, gx) and key_member(self.graph_right, cr, gy):
                total = total + r
        return total

    def pair_degrees(self) -> list[tuple[int, int]]:
        return sorted(
            {(len(cl[0]) - len(cl[1]), len(cr[0]) - len(cr[1])) for cl, cr in self._terms}
        )

    def canonical_key(self):
        return tuple(
            (k, (s.re.numerator, s.re.denominator, s.im.numerator, s.im.denominator))
            for k, s in sorted(self._terms.items())
        )

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if (
            other.graph_left is not self.graph_left
            or other.graph_right is not self.graph_right
            or other.ring != self.ring
        ):
            return False
        if self._terms == other._terms:
            return True
        kl, kr = self._k()
        levels: dict = {}
        for terms in (self._terms, other._terms):
            for cl, cr in terms:
                d = (len(cl[0]) - len(cl[1]), len(cr[0]) - len(cr[1]))
                tl, tr = levels.get(d, (0, 0))
                levels[d] = (max(tl, len(cl[0])), max(tr, len(cr[0])))
        return _bi_expand(kl, kr, self._terms, levels) == _bi_expand(kl, kr, other._terms, levels)

    __hash__ = None


class TensorElement(_BiTermElement):
    """An element of A_R(G) (x) A_R(H) in bi-orthogonal normal form."""

    @staticmethod
    def zero(gl: Graph, gr: Graph, ring: ScalarRing) -> "TensorElement":
        return TensorElement(gl, gr, ring, {})

    @staticmethod
    def one(gl: Graph, gr: Graph, ring: ScalarRing) -> "TensorElement":
        return simple_tensor(AlgebraElement.one(gl, ring), AlgebraElement.one(gr, ring))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for r, pb in self.term_items():
            parts.append(f"({r}*{pb.left}) (x) (1*{pb.right})")
        return " + ".join(parts)

    def __repr__(self):
        return f"<tensor: {self}>"


class ProductAlgebraElement(_BiTermElement):
    """An element of A_R(G x H), spanned by product-bisection indicators."""

    @staticmethod
    def zero(gl: Graph, gr: Graph, ring: ScalarRing) -> "ProductAlgebraElement":
        return ProductAlgebraElement(gl, gr, ring, {})

    @staticmethod
    def one(gl: Graph, gr: Graph, ring: ScalarRing) -> "ProductAlgebraElement":
        t = TensorElement.one(gl, gr, ring)
        return ProductAlgebraElement(gl, gr, ring, dict(t._terms))

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{r}*{pb}" for r, pb in self.term_items())

    def __repr__(self):
        return f"<A(GxH): {self}>"


# -- constructors ---------------------------------------------------------------


def tensor_from_pairs(
    gl: Graph,
    gr: Graph,
    ring: ScalarRing,
    triples: Iterable[tuple[Scalar, BasicBisection, BasicBisection]],
) -> TensorElement:
    """sum r . (1_A (x) 1_B) in normal form; excluded sets expand away."""
    items = _triples_to_items(gl, gr, ring, triples)
    return TensorElement(gl, gr, ring, _bi_normalize(gl.kernel_data, gr.kernel_data, items))


def product_from_pairs(
    gl: Graph,
    gr: Graph,
    ring: ScalarRing,
    triples: Iterable[tuple[Scalar, BasicBisection, BasicBisection]],
) -> ProductAlgebraElement:
    """sum r . 1_{A x B} in normal form."""
    items = _triples_to_items(gl, gr, ring, triples)
    return ProductAlgebraElement(
        gl, gr, ring, _bi_normalize(gl.kernel_data, gr.kernel_data, items)
    )


def _triples_to_items(gl, gr, ring, triples):
    items = []
    for r, a, b in triples:
        if a.graph is not gl or b.graph is not gr:
            raise GraphMismatchError("bisection over the wrong factor graph")
        if r.ring != ring:
            raise RingMismatchError("coefficient from a different ring")
        if not r or a.is_empty or b.is_empty:
            continue
        for ca in bis.expand(a, len(a.alpha)):
            for cb in bis.expand(b, len(b.alpha)):
                items.append((((ca.alpha.key, ca.beta.key), (cb.alpha.key, cb.beta.key)), r))
    return items


def simple_tensor(f: AlgebraElement, g: AlgebraElement) -> TensorElement:
    """f (x) g as a TensorElement."""
    if f.ring != g.ring:
        raise RingMismatchError("factors over different rings")
    triples = [(rf * rg, bf, bg) for rf, bf in f.term_items() for rg, bg in g.term_items()]
    return tensor_from_pairs(f.graph, g.graph, f.ring, triples)


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    return a * b


def tensor_star(a: TensorElement) -> TensorElement:
    return a.star()


# -- the mutually inverse isomorphisms -------------------------------------------


def sigma(t: TensorElement) -> ProductAlgebraElement:
    """1_A (x) 1_B -> 1_{A x B}, extended linearly.

    Pointwise, sigma(f (x) g)(x, y) = f(x) g(y); both sides share the bi-term
    normal form, so this is a basis relabelling.
    """
    return ProductAlgebraElement(t.graph_left, t.graph_right, t.ring, dict(t._terms))


def tensor_representation(gl: Graph, gr: Graph, ring: ScalarRing) -> RepresentationAssignment:
    """The assignment t_{A x B} = 1_A (x) 1_B into A_R(G) (x) A_R(H)."""
    el = gl.empty_path(gl.vertex_ids[0])
    er = gr.empty_path(gr.vertex_ids[0])
    empty = ProductBisection(
        BasicBisection(el, el, frozenset(gl.out_edges[el.range_idx])),
        BasicBisection(er, er, frozenset(gr.out_edges[er.range_idx])),
    )

    def assign(pb: ProductBisection) -> TensorElement:
        return tensor_from_pairs(gl, gr, ring, [(ring.one, pb.left, pb.right)])

    return RepresentationAssignment(
        zero=TensorElement.zero(gl, gr, ring),
        assign=assign,
        empty=empty,
        product_fn=product_single_pb,
        disjoint_fn=disjoint_pb,
        name="tensor",
    )


def pi(p: ProductAlgebraElement) -> TensorElement:
    """Inverse of sigma, realized as the induced homomorphism of the tensor
    assignment applied to a disjoint expression of p."""
    rep = tensor_representation(p.graph_left, p.graph_right, p.ring)
    return induced_hom(rep, p)


# -- gradings --------------------------------------------------------------------


def product_degree(p: ProductAlgebraElement) -> dict[tuple[int, int], ProductAlgebraElement]:
    """Split by the pair degree (deg_left, deg_right)."""
    out: dict[tuple[int, int], dict] = {}
    for (cl, cr), r in p._terms.items():
        d = (len(cl[0]) - len(cl[1]), len(cr[0]) - len(cr[1]))
        out.setdefault(d, {})[(cl, cr)] = r
    return {
        d: ProductAlgebraElement(p.graph_left, p.graph_right, p.ring, terms)
        for d, terms in sorted(out.items())
    }


def quotient_degree(p: ProductAlgebraElement) -> dict[int, ProductAlgebraElement]:
    """Split by the total degree deg_left + deg_right."""
    out: dict[int, dict] = {}
    for (cl, cr), r in p._terms.items():
        d = (len(cl[0]) - len(cl[1])) + (len(cr[0]) - len(cr[1]))
        out.setdefault(d, {})[(cl, cr)] = r
    return {
        d: ProductAlgebraElement(p.graph_left, p.graph_right, p.ring, terms)
        for d, terms in sorted(out.items())
    }


# -- refinement -------------------------------------------------------------------


def _refine_one(family: list[BasicBisection]) -> list[BasicBisection]:
    if not family:
        return []
    graph = family[0].graph
    out_edges, edge_rng = graph.kernel_data
    by_degree: dict[int, list[tuple[int, BasicBisection]]] = {}
    for i, b in enumerate(family):
        if b.graph is not graph:
            raise GraphMismatchError("family members over different graphs")
        if not b.is_empty:
            by_degree.setdefault(b.degree, []).append((i, b))
    atoms: list[BasicBisection] = []
    for members in by_degree.values():
        level = max(bis.min_cylinder_length(b) for _, b in members)
        signatures: dict[tuple, set] = {}
        for i, b in members:
            for c in bis.expand(b, level):
                signatures.setdefault((c.alpha.key, c.beta.key), set()).add(i)
        groups: dict[frozenset, list] = {}
        for key, sig in signatures.items():
            groups.setdefault(frozenset(sig), []).append(key)
        for keys in groups.values():
            merged = _kernel.normalize_terms(out_edges, edge_rng, [(k, 1) for k in keys])
            atoms.extend(from_cyl_key(graph, k) for k in merged)
    return sorted(atoms)


def refine_families(
    P: Iterable[BasicBisection], Q: Iterable[BasicBisection]
) -> tuple[list[BasicBisection], list[BasicBisection]]:
    """Disjointify two families, one per factor.

    X consists of the atoms of the set algebra generated by P (points with
    the same membership pattern are grouped, then each group is written
    minimally as cylinders): X is pairwise disjoint, covers union(P), and
    every member of P is the disjoint union of the X-atoms inside it.  Y
    does the same for Q.
    """
    return _refine_one(list(P)), _refine_one(list(Q))
