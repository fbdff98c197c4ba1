"""Finite directed graphs without sinks, their paths, and boundary points.

A graph is the combinatorial substrate of a boundary-path groupoid: vertices,
labelled edges, and the requirement that every vertex emits at least one edge
(so every finite path extends to an infinite one, and cylinder decompositions
never terminate early).

Paths are read left to right: the range of edge i equals the source of edge
i+1, so `alpha.concat(x)` prepends `alpha` to the infinite word `x`.

Boundary points are restricted to eventually periodic infinite paths,
represented as prefix + repeating cycle in a canonical form (primitive cycle,
minimal prefix).  These points are dense in the boundary-path space and are
the evaluation oracle for everything downstream: two locally constant
functions agree iff they agree on them.
"""

from __future__ import annotations

import math
import re as _re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphMismatchError, GraphStructureError, PathError, SemanticError

_ID_RE = _re.compile(r"^[A-Za-z0-9_]+$")


def _natural_key(s: str):
    # numeric ids sort numerically so cuntz edges come out as 1, 2, ..., n
    return (0, int(s), s) if s.isdigit() else (1, 0, s)


class Graph:
    """A finite directed graph with unique ids and no sinks.

    Vertices and edges are indexed internally by position in the naturally
    sorted id order; all combinatorial kernels work on indices, while ids are
    kept for parsing and printing.
    """

    __slots__ = (
        "vertex_ids",
        "edge_ids",
        "edge_src",
        "edge_rng",
        "out_edges",
        "in_edges",
        "_vidx",
        "_eidx",
        "_kernel_data",
    )

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]):
        vlist = [str(v) for v in vertices]
        vertex_ids = sorted(set(vlist), key=_natural_key)
        if len(vertex_ids) != len(vlist):
            raise GraphStructureError("duplicate vertex id")
        if not vertex_ids:
            raise GraphStructureError("graph needs at least one vertex")
        for v in vertex_ids:
            if not _ID_RE.match(v):
                raise GraphStructureError(f"invalid vertex id {v!r}")
        self.vertex_ids = tuple(vertex_ids)
        self._vidx = {v: i for i, v in enumerate(self.vertex_ids)}

        rows = sorted(((str(e), str(s), str(r)) for e, s, r in edges), key=lambda t: _natural_key(t[0]))
        ids = [e for e, _, _ in rows]
        if len(set(ids)) != len(ids):
            raise GraphStructureError("duplicate edge id")
        for e, s, r in rows:
            if not _ID_RE.match(e):
                raise GraphStructureError(f"invalid edge id {e!r}")
            if s not in self._vidx or r not in self._vidx:
                raise GraphStructureError(f"edge {e!r} references an unknown vertex")
        self.edge_ids = tuple(e for e, _, _ in rows)
        self._eidx = {e: i for i, e in enumerate(self.edge_ids)}
        self.edge_src = tuple(self._vidx[s] for _, s, _ in rows)
        self.edge_rng = tuple(self._vidx[r] for _, _, r in rows)

        out: list[list[int]] = [[] for _ in self.vertex_ids]
        inn: list[list[int]] = [[] for _ in self.vertex_ids]
        for i in range(len(self.edge_ids)):
            out[self.edge_src[i]].append(i)
            inn[self.edge_rng[i]].append(i)
        self.out_edges = tuple(tuple(lst) for lst in out)
        self.in_edges = tuple(tuple(lst) for lst in inn)
        for v, lst in zip(self.vertex_ids, self.out_edges):
            if not lst:
                raise GraphStructureError(f"vertex {v!r} is a sink (emits no edge)")
        self._kernel_data = (self.out_edges, self.edge_rng)

    # identity semantics: two separately constructed graphs are distinct
    __hash__ = object.__hash__
    __eq__ = object.__eq__

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_ids)

    @property
    def n_edges(self) -> int:
        return len(self.edge_ids)

    @property
    def kernel_data(self):
        """(out_edges, edge_rng) tuples consumed by the term kernels."""
        return self._kernel_data

    # -- path constructors --------------------------------------------------

    def empty_path(self, vertex_id: str) -> "Path":
        if vertex_id not in self._vidx:
            raise SemanticError(f"unknown vertex {vertex_id!r}")
        return Path(self, self._vidx[vertex_id], ())

    def path(self, edge_ids: Sequence[str]) -> "Path":
        if not edge_ids:
            raise PathError("empty edge list: use empty_path(vertex) instead")
        idxs = []
        for e in edge_ids:
            if e not in self._eidx:
                raise SemanticError(f"unknown edge {e!r}")
            idxs.append(self._eidx[e])
        return Path(self, self.edge_src[idxs[0]], tuple(idxs))

    def path_from_key(self, key: tuple[int, ...]) -> "Path":
        return Path(self, key[0], key[1:])

    def __repr__(self):
        return f"Graph({self.n_vertices} vertices, {self.n_edges} edges)"


@dataclass(frozen=True)
class Path:
    """A finite composable edge sequence; the empty path remembers its vertex."""

    graph: Graph
    src: int
    edges: tuple[int, ...]

    def __post_init__(self):
        g = self.graph
        at = self.src
        for e in self.edges:
            if g.edge_src[e] != at:
                raise PathError(f"edges do not compose at {g.edge_ids[e]!r}")
            at = g.edge_rng[e]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def range_idx(self) -> int:
        return self.src if not self.edges else self.graph.edge_rng[self.edges[-1]]

    @property
    def key(self) -> tuple[int, ...]:
        """Kernel encoding: (source vertex, edge indices...)."""
        return (self.src,) + self.edges

    def concat(self, other: "Path") -> "Path":
        if other.graph is not self.graph:
            raise GraphMismatchError("paths over different graphs")
        if other.src != self.range_idx:
            raise PathError("paths do not compose: range/source mismatch")
        return Path(self.graph, self.src, self.edges + other.edges)

    def is_prefix_of(self, other: "Path") -> bool:
        return (
            other.graph is self.graph
            and other.src == self.src
            and other.edges[: len(self.edges)] == self.edges
        )

    def strip_prefix(self, prefix: "Path") -> "Path":
        """The tail t with self == prefix.concat(t)."""
        if not prefix.is_prefix_of(self):
            raise PathError("not a prefix")
        return Path(self.graph, prefix.range_idx, self.edges[len(prefix.edges) :])

    def extensions_of_length(self, m: int) -> list["Path"]:
        """All paths self.concat(t) with len(t) == m, in canonical edge order."""
        if m < 0:
            raise ValueError("extension length must be >= 0")
        g = self.graph
        out = [self]
        for _ in range(m):
            nxt = []
            for p in out:
                for e in g.out_edges[p.range_idx]:
                    nxt.append(Path(g, p.src, p.edges + (e,)))
            out = nxt
        return out

    def __str__(self):
        g = self.graph
        if not self.edges:
            return "@" if g.n_vertices == 1 else "@" + g.vertex_ids[self.src]
        return ".".join(g.edge_ids[e] for e in self.edges)

    def __repr__(self):
        return f"Path({self})"


def _primitive_root(edges: tuple[int, ...]) -> tuple[int, ...]:
    n = len(edges)
    for d in range(1, n + 1):
        if n % d == 0 and all(edges[i] == edges[i % d] for i in range(n)):
            return edges[:d]
    return edges


class BoundaryPoint:
    """The eventually periodic infinite path prefix . cycle^infinity.

    The stored representation is canonical: the cycle is primitive and the
    prefix is as short as possible (its last edge differs from the cycle's
    last edge).  Equality of canonical forms is exactly equality of the
    underlying infinite paths.
    """

    __slots__ = ("graph", "prefix", "cycle")

    def __init__(self, prefix: Path, cycle: Path):
        if cycle.graph is not prefix.graph:
            raise GraphMismatchError("prefix and cycle over different graphs")
        if len(cycle) == 0:
            raise PathError("cycle must be nonempty")
        if cycle.src != prefix.range_idx:
            raise PathError("cycle does not continue the prefix")
        if cycle.range_idx != cycle.src:
            raise PathError("cycle is not closed")
        g = prefix.graph
        pre = list(prefix.edges)
        cyc = list(_primitive_root(cycle.edges))
        while pre and pre[-1] == cyc[-1]:
            pre.pop()
            cyc = [cyc[-1]] + cyc[:-1]
        src = prefix.src
        self.graph = g
        self.prefix = Path(g, src, tuple(pre))
        self.cycle = Path(g, self.prefix.range_idx, tuple(cyc))

    @property
    def source_idx(self) -> int:
        return self.prefix.src

    def edge_at(self, i: int) -> int:
        """Edge index at position i (0-based) of the infinite path."""
        pre = self.prefix.edges
        if i < len(pre):
            return pre[i]
        cyc = self.cycle.edges
        return cyc[(i - len(pre)) % len(cyc)]

    def vertex_at(self, i: int) -> int:
        """Vertex index reached after i edges."""
        return self.source_idx if i == 0 else self.graph.edge_rng[self.edge_at(i - 1)]

    def shift(self, a: int) -> "BoundaryPoint":
        """Drop the first a edges."""
        if a < 0:
            raise ValueError("shift amount must be >= 0")
        g = self.graph
        pre = self.prefix.edges
        if a <= len(pre):
            return BoundaryPoint(Path(g, self.vertex_at(a), pre[a:]), self.cycle)
        b = (a - len(pre)) % len(self.cycle.edges)
        cyc = self.cycle.edges[b:] + self.cycle.edges[:b]
        v = g.edge_src[cyc[0]]
        return BoundaryPoint(Path(g, v, ()), Path(g, v, cyc))

    def starts_with(self, path: Path) -> bool:
        if path.graph is not self.graph:
            raise GraphMismatchError("path over a different graph")
        if path.src != self.source_idx:
            return False
        return all(self.edge_at(i) == e for i, e in enumerate(path.edges))

    def __eq__(self, other):
        return (
            isinstance(other, BoundaryPoint)
            and other.graph is self.graph
            and other.prefix.key == self.prefix.key
            and other.cycle.edges == self.cycle.edges
        )

    def __hash__(self):
        return hash((id(self.graph), self.prefix.key, self.cycle.edges))

    def __str__(self):
        pre = str(self.prefix) if len(self.prefix) else ""
        if pre.startswith("@"):
            pre = ""
        return f"{pre}({self.cycle})"

    def __repr__(self):
        return f"BoundaryPoint({self})"


def shift_point(x: BoundaryPoint, a: int) -> BoundaryPoint:
    return x.shift(a)


@dataclass(frozen=True)
class GroupoidPoint:
    """A groupoid element (x, k, y): shift-by-k tail equivalence of x and y.

    Construction checks the tail condition, which is decidable here: both
    points are eventually periodic, so it suffices to scan one joint period
    beyond the preperiods.
    """

    x: BoundaryPoint
    k: int
    y: BoundaryPoint

    def __post_init__(self):
        if self.x.graph is not self.y.graph:
            raise GraphMismatchError("points over different graphs")
        x, k, y = self.x, self.k, self.y
        start = max(0, k)
        pre = max(start, len(x.prefix), k + len(y.prefix))
        period = math.lcm(len(x.cycle), len(y.cycle))
        for a in range(start, pre + period + 1):
            if x.shift(a) == y.shift(a - k):
                return
        raise PathError(f"(x, {k}, y) is not a groupoid element: tails never align")

    @property
    def graph(self) -> Graph:
        return self.x.graph

    def inverse(self) -> "GroupoidPoint":
        return GroupoidPoint(self.y, -self.k, self.x)

    def __str__(self):
        return f"({self.x}, {self.k}, {self.y})"


def cuntz_graph(n: int) -> Graph:
    """One vertex with n loop edges labelled 1..n; requires n >= 2."""
    if n < 2:
        raise ValueError("cuntz_graph requires n >= 2")
    return Graph(["v"], [(str(i), "v", "v") for i in range(1, n + 1)])


def parse_graph(text: str) -> Graph:
    """Line-based format: `vertex <id>` / `edge <id> <source> <range>`.

    Blank lines and `#` comments are ignored.
    """
    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex" and len(parts) == 2:
            vertices.append(parts[1])
        elif parts[0] == "edge" and len(parts) == 4:
            edges.append((parts[1], parts[2], parts[3]))
        else:
            raise GraphStructureError(f"line {lineno}: cannot parse {raw.strip()!r}")
    return Graph(vertices, edges)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
