# cython: language_level=3
"""Compiled term kernel; same contract as `steinberg._kernel.pure`.

Paths stay Python tuples of small ints and coefficients stay opaque Python
objects, so semantics are identical to the pure backend; the win comes from
C-level loops, slicing and dict traffic in the expansion/collapse pipeline.
"""

BACKEND_NAME = "fast"


def path_rng(edge_rng, p):
    return p[0] if len(p) == 1 else edge_rng[p[-1]]


def cyl_mul(a, b):
    cdef Py_ssize_t nb, nc
    pa = a[0]
    pb = a[1]
    pc = b[0]
    pd = b[1]
    nb = len(pb)
    nc = len(pc)
    if nb <= nc:
        if pc[:nb] != pb:
            return None
        return (pa + pc[nb:], pd)
    if pb[:nc] != pc:
        return None
    return (pa, pd + pb[nc:])


def expand_cyl(out_edges, edge_rng, cyl, Py_ssize_t extra):
    cdef Py_ssize_t i
    cdef list cur = [cyl]
    cdef list nxt
    for i in range(extra):
        nxt = []
        for pa, pb in cur:
            v = pa[0] if len(pa) == 1 else edge_rng[pa[-1]]
            for e in out_edges[v]:
                nxt.append((pa + (e,), pb + (e,)))
        cur = nxt
    return cur


def disjointify_terms(out_edges, edge_rng, items):
    cdef dict by_degree = {}
    cdef dict acc = {}
    cdef Py_ssize_t d, target
    for cyl, r in items:
        if not r:
            continue
        d = len(cyl[0]) - len(cyl[1])
        if d in by_degree:
            by_degree[d].append((cyl, r))
        else:
            by_degree[d] = [(cyl, r)]
    for lst in by_degree.values():
        target = 0
        for cyl, r in lst:
            if len(cyl[0]) > target:
                target = len(cyl[0])
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


def collapse_terms(out_edges, edge_rng, dict acc):
    cdef dict parents
    cdef bint changed
    cdef list children
    while True:
        parents = {}
        for cyl in acc:
            pa = cyl[0]
            pb = cyl[1]
            if len(pa) > 1 and len(pb) > 1 and pa[-1] == pb[-1]:
                parent = (pa[:-1], pb[:-1])
                if parent in parents:
                    parents[parent].append(cyl)
                else:
                    parents[parent] = [cyl]
        changed = False
        for parent, children in parents.items():
            qa = parent[0]
            v = qa[0] if len(qa) == 1 else edge_rng[qa[-1]]
            if len(children) != len(out_edges[v]):
                continue
            r0 = acc[children[0]]
            ok = True
            for c in children[1:]:
                if not (acc[c] == r0):
                    ok = False
                    break
            if ok:
                for c in children:
                    del acc[c]
                acc[parent] = r0
                changed = True
        if not changed:
            return acc


def normalize_terms(out_edges, edge_rng, items):
    return collapse_terms(out_edges, edge_rng, disjointify_terms(out_edges, edge_rng, items))


def convolve_terms(out_edges, edge_rng, dict ta, dict tb):
    cdef list items = []
    for ca, ra in ta.items():
        for cb, rb in tb.items():
            c = cyl_mul(ca, cb)
            if c is not None:
                r = ra * rb
                if r:
                    items.append((c, r))
    return normalize_terms(out_edges, edge_rng, items)


def expand_terms(out_edges, edge_rng, dict terms, levels):
    cdef dict acc = {}
    cdef Py_ssize_t extra
    for cyl, r in terms.items():
        extra = levels[len(cyl[0]) - len(cyl[1])] - len(cyl[0])
        for cc in expand_cyl(out_edges, edge_rng, cyl, extra):
            acc[cc] = r
    return acc
