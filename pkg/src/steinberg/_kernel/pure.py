"""Pure-Python term kernel: the hot inner loops of the convolution algebra.

Data plane (no classes):

* path   -- tuple of ints, `(source_vertex, edge, edge, ...)`; the length-1
            tuple is the empty path at that vertex.
* cyl    -- pair `(alpha, beta)` of paths with a common range; stands for the
            cylinder bisection with no excluded edges.
* terms  -- dict mapping cyl -> coefficient; coefficients are opaque objects
            supporting `+`, `*`, `==` and truthiness (zero is falsy).
* graph  -- passed as `(out_edges, edge_rng)` index tables.

The compiled twin in `fast.pyx` implements the same five functions; backend
selection happens in `steinberg._kernel.__init__`.
"""

BACKEND_NAME = "pure"


def path_rng(edge_rng, p):
    return p[0] if len(p) == 1 else edge_rng[p[-1]]


def cyl_mul(a, b):
    """Product of two cylinder bisections: a single cylinder or None.

    With `a = (pa, pb)` and `b = (pc, pd)`: if pc extends pb by t the product
    is (pa + t, pd); if pb extends pc by t it is (pa, pd + t); otherwise the
    set product is empty.
    """
    pa, pb = a
    pc, pd = b
    if len(pb) <= len(pc):
        if pc[: len(pb)] != pb:
            return None
        return (pa + pc[len(pb):], pd)
    if pb[: len(pc)] != pc:
        return None
    return (pa, pd + pb[len(pc):])


def expand_cyl(out_edges, edge_rng, cyl, extra):
    """All depth-`extra` simultaneous extensions (alpha t, beta t) of a cylinder.

    The pieces are pairwise disjoint and their union is the input cylinder
    (this needs the no-sink property: every boundary point continues).
    """
    cur = [cyl]
    for _ in range(extra):
        nxt = []
        for pa, pb in cur:
            v = pa[0] if len(pa) == 1 else edge_rng[pa[-1]]
            for e in out_edges[v]:
                nxt.append((pa + (e,), pb + (e,)))
        cur = nxt
    return cur


def disjointify_terms(out_edges, edge_rng, items):
    """Uniform per-degree expansion with coefficient sums; zeros dropped.

    Input is any iterable of (cyl, coefficient) pairs; output is a dict over
    pairwise disjoint cylinders representing the same function.  Within each
    degree class all alpha-lengths equal the maximal input alpha-length of
    that class, which refines any partition witnessing local constancy.
    """
    by_degree = {}
    for cyl, r in items:
        if not r:
            continue
        d = len(cyl[0]) - len(cyl[1])
        by_degree.setdefault(d, []).append((cyl, r))
    acc = {}
    for lst in by_degree.values():
        target = max(len(cyl[0]) for cyl, _ in lst)
        for cyl, r in lst:
            for cc in expand_cyl(out_edges, edge_rng, cyl, target - len(cyl[0])):
                if cc in acc:
                    s = acc[cc] + r
                    if s:
                        acc[cc] = s
                    else:
                        del acc[cc]
                else:
                    acc[cc] = r
    return acc


def collapse_terms(out_edges, edge_rng, acc):
    """Greedy sibling collapse, in place.

    A full family {(alpha e, beta e) : e emitted by range(alpha)} with one
    common coefficient merges into (alpha, beta).  Merging is confluent:
    distinct parents have disjoint child sets, so the fixpoint is canonical.
    """
    while True:
        parents = {}
        for cyl in acc:
            pa, pb = cyl
            if len(pa) > 1 and len(pb) > 1 and pa[-1] == pb[-1]:
                parents.setdefault((pa[:-1], pb[:-1]), []).append(cyl)
        changed = False
        for (qa, qb), children in parents.items():
            v = qa[0] if len(qa) == 1 else edge_rng[qa[-1]]
            if len(children) != len(out_edges[v]):
                continue
            r0 = acc[children[0]]
            if all(acc[c] == r0 for c in children[1:]):
                for c in children:
                    del acc[c]
                acc[(qa, qb)] = r0
                changed = True
        if not changed:
            return acc


def normalize_terms(out_edges, edge_rng, items):
    """Canonical normal form: disjointify, then collapse to the fixpoint."""
    return collapse_terms(out_edges, edge_rng, disjointify_terms(out_edges, edge_rng, items))


def convolve_terms(out_edges, edge_rng, ta, tb):
    """Convolution of two normal-form term dicts, renormalized."""
    items = []
    for ca, ra in ta.items():
        for cb, rb in tb.items():
            c = cyl_mul(ca, cb)
            if c is not None:
                r = ra * rb
                if r:
                    items.append((c, r))
    return normalize_terms(out_edges, edge_rng, items)


def expand_terms(out_edges, edge_rng, terms, levels):
    """Expand a disjoint term dict so degree d sits at alpha-length levels[d].

    Used for equality testing: two normal forms are expanded to common
    per-degree lengths and compared key by key.
    """
    acc = {}
    for cyl, r in terms.items():
        extra = levels[len(cyl[0]) - len(cyl[1])] - len(cyl[0])
        for cc in expand_cyl(out_edges, edge_rng, cyl, extra):
            acc[cc] = r
    return acc
