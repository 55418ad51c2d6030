"""Undirected simple graph container, edge-list/community ingestion, components.

Vertices are dense integers 0..V-1 internally; arbitrary external ids from
input files are remapped on load (first-appearance order) and the mapping is
kept so every output can be written back in the original id space.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from typing import IO, Iterable

import numpy as np


class EdgeListParseError(ValueError):
    """Malformed edge-list or community-file content."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class Graph:
    """Immutable undirected simple graph.

    Edges are canonicalized to u < v and stored sorted; neighbor lists are
    sorted ascending so common-neighbor enumeration can run as a linear
    merge.  Duplicate input edges collapse silently (``collapsed_edges``
    reports how many); self-loops are rejected here and filtered by the
    loaders.
    """

    __slots__ = (
        "num_vertices",
        "edges_u",
        "edges_v",
        "indptr",
        "indices",
        "adj_edge_ids",
        "degrees",
        "ext_ids",
        "collapsed_edges",
        "_ext_to_int",
    )

    def __init__(self, num_vertices: int, edges_u, edges_v, ext_ids=None):
        u = np.asarray(edges_u, dtype=np.int64).ravel()
        v = np.asarray(edges_v, dtype=np.int64).ravel()
        if u.shape != v.shape:
            raise ValueError("edge endpoint arrays differ in length")
        if u.size:
            if u.min() < 0 or v.min() < 0 or max(u.max(), v.max()) >= num_vertices:
                raise ValueError("edge endpoint outside 0..num_vertices-1")
            loops = u == v
            if loops.any():
                w = int(u[np.argmax(loops)])
                raise ValueError(f"self-loop at vertex {w} not allowed")

        lo = np.minimum(u, v)
        hi = np.maximum(u, v)
        order = np.lexsort((hi, lo))
        lo, hi = lo[order], hi[order]
        if lo.size:
            keep = np.empty(lo.size, dtype=bool)
            keep[0] = True
            keep[1:] = (lo[1:] != lo[:-1]) | (hi[1:] != hi[:-1])
            self.collapsed_edges = int(lo.size - keep.sum())
            lo, hi = lo[keep], hi[keep]
        else:
            self.collapsed_edges = 0

        self.num_vertices = int(num_vertices)
        self.edges_u = lo
        self.edges_v = hi

        # CSR adjacency over both directions; slot -> owning edge id.
        eids = np.arange(lo.size, dtype=np.int64)
        heads = np.concatenate([lo, hi])
        tails = np.concatenate([hi, lo])
        both_eids = np.concatenate([eids, eids])
        adj_order = np.lexsort((tails, heads))
        self.indices = tails[adj_order]
        self.adj_edge_ids = both_eids[adj_order]
        self.degrees = np.bincount(heads, minlength=self.num_vertices).astype(np.int64)
        self.indptr = np.zeros(self.num_vertices + 1, dtype=np.int64)
        np.cumsum(self.degrees, out=self.indptr[1:])

        if ext_ids is None:
            self.ext_ids = list(range(self.num_vertices))
        else:
            if len(ext_ids) != self.num_vertices:
                raise ValueError("ext_ids length must equal num_vertices")
            self.ext_ids = list(ext_ids)
        self._ext_to_int = {x: i for i, x in enumerate(self.ext_ids)}

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return int(self.edges_u.size)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def incident_edge_ids(self, v: int) -> np.ndarray:
        return self.adj_edge_ids[self.indptr[v] : self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_id(u, v) >= 0

    def edge_id(self, u: int, v: int) -> int:
        """Id of canonical edge (min(u,v), max(u,v)), or -1 if absent."""
        if u == v:
            return -1
        a, b = (u, v) if u < v else (v, u)
        lo = np.searchsorted(self.edges_u, a, side="left")
        hi = np.searchsorted(self.edges_u, a, side="right")
        k = lo + np.searchsorted(self.edges_v[lo:hi], b, side="left")
        if k < hi and self.edges_v[k] == b:
            return int(k)
        return -1

    def require_edge_id(self, u: int, v: int) -> int:
        eid = self.edge_id(u, v)
        if eid < 0:
            raise ValueError(f"({u}, {v}) is not an edge of this graph")
        return eid

    def edge_pairs(self) -> Iterable[tuple[int, int]]:
        return zip(self.edges_u.tolist(), self.edges_v.tolist())

    def vertex_id(self, ext_id) -> int:
        """Internal id for an external label; raises KeyError if unknown."""
        return self._ext_to_int[ext_id]

    # -- derived graphs ---------------------------------------------------

    def subgraph_with_edges(self, edge_mask) -> "Graph":
        """Graph over the same vertex set keeping only masked edges."""
        mask = _as_edge_mask(self, edge_mask)
        return Graph(
            self.num_vertices,
            self.edges_u[mask],
            self.edges_v[mask],
            ext_ids=self.ext_ids,
        )

    # -- io -----------------------------------------------------------------

    def write_edge_list(self, dest) -> None:
        """Write 'u v' lines using external ids, canonical edge order."""
        with _open_text(dest, "w") as fh:
            for u, v in self.edge_pairs():
                fh.write(f"{self.ext_ids[u]} {self.ext_ids[v]}\n")


@dataclass
class CommunityAssignment:
    """Partial vertex -> community map; -1 marks unlabeled vertices."""

    labels: np.ndarray
    community_count: int

    @classmethod
    def from_labels(cls, labels) -> "CommunityAssignment":
        """Densify arbitrary non-negative labels to 0..C-1 (first appearance)."""
        arr = np.asarray(labels, dtype=np.int64).copy()
        remap: dict[int, int] = {}
        for i, lab in enumerate(arr):
            if lab < 0:
                continue
            arr[i] = remap.setdefault(int(lab), len(remap))
        return cls(arr, len(remap))

    def labeled_count(self) -> int:
        return int((self.labels >= 0).sum())

    def communities(self) -> list[np.ndarray]:
        """Member vertex arrays, indexed by community id."""
        out = []
        for c in range(self.community_count):
            out.append(np.flatnonzero(self.labels == c))
        return out


@dataclass
class Components:
    """Edge-bearing connected components plus separately counted isolates."""

    labels: np.ndarray  # -1 for isolated vertices
    count: int
    isolated_count: int


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def connected_components(g: Graph, active_edges=None) -> Components:
    """Components over a subset of edges.

    Vertices touching no active edge are isolated: they get label -1 and are
    counted in ``isolated_count`` rather than as components.
    """
    mask = _as_edge_mask(g, active_edges)
    uf = _UnionFind(g.num_vertices)
    eu, ev = g.edges_u, g.edges_v
    touched = np.zeros(g.num_vertices, dtype=bool)
    for eid in np.flatnonzero(mask):
        u, v = int(eu[eid]), int(ev[eid])
        touched[u] = touched[v] = True
        uf.union(u, v)

    labels = np.full(g.num_vertices, -1, dtype=np.int64)
    next_label = 0
    root_label: dict[int, int] = {}
    for v in range(g.num_vertices):
        if not touched[v]:
            continue
        r = uf.find(v)
        if r not in root_label:
            root_label[r] = next_label
            next_label += 1
        labels[v] = root_label[r]
    return Components(labels, next_label, int(g.num_vertices - touched.sum()))


# -- ingestion --------------------------------------------------------------


def load_edge_list(
    source,
    *,
    delimiter: str | None = None,
    drop_self_loops: bool = False,
    symmetrize: bool = False,
) -> Graph:
    """Parse a text edge list ('u v' per line, '#' comments) into a Graph.

    External ids may be arbitrary tokens; they are remapped to dense ids in
    first-appearance order.  Duplicate and reciprocal pairs always collapse
    to one undirected edge (the count lands in ``collapsed_edges``);
    ``symmetrize`` records that the input is directed but does not change
    that behavior.  Self-loop lines are dropped (their vertex is still
    registered) when ``drop_self_loops`` is set, and rejected otherwise.
    """
    ext_to_int: dict[str, int] = {}
    ext_ids: list[str] = []
    us: list[int] = []
    vs: list[int] = []

    def intern(token: str) -> int:
        idx = ext_to_int.get(token)
        if idx is None:
            idx = len(ext_ids)
            ext_to_int[token] = idx
            ext_ids.append(token)
        return idx

    with _open_text(source, "r") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split(delimiter) if delimiter else line.split()
            if len(tokens) != 2:
                raise EdgeListParseError(
                    f"expected two tokens, got {len(tokens)}: {line!r}", line_no
                )
            a, b = tokens
            if a == b:
                if drop_self_loops:
                    intern(a)
                    continue
                raise EdgeListParseError(f"self-loop on vertex {a!r}", line_no)
            us.append(intern(a))
            vs.append(intern(b))

    return Graph(len(ext_ids), us, vs, ext_ids=ext_ids)


def load_communities(source, g: Graph) -> CommunityAssignment:
    """Parse 'vertex community' lines into a partial assignment over ``g``.

    Vertices must exist in the graph; a vertex listed twice with different
    communities is an error.  Community tokens densify to 0..C-1.
    """
    labels = np.full(g.num_vertices, -1, dtype=np.int64)
    comm_ids: dict[str, int] = {}
    with _open_text(source, "r") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise EdgeListParseError(
                    f"expected two tokens, got {len(tokens)}: {line!r}", line_no
                )
            vtok, ctok = tokens
            try:
                v = g.vertex_id(vtok)
            except KeyError:
                raise EdgeListParseError(
                    f"vertex {vtok!r} not present in graph", line_no
                ) from None
            c = comm_ids.setdefault(ctok, len(comm_ids))
            if labels[v] >= 0 and labels[v] != c:
                raise EdgeListParseError(
                    f"vertex {vtok!r} reassigned from community "
                    f"{labels[v]} to {c}",
                    line_no,
                )
            labels[v] = c
    return CommunityAssignment(labels, len(comm_ids))


def write_communities(assignment: CommunityAssignment, g: Graph, dest) -> None:
    """Write 'vertex community' lines (external ids) for labeled vertices."""
    with _open_text(dest, "w") as fh:
        for v in np.flatnonzero(assignment.labels >= 0):
            fh.write(f"{g.ext_ids[v]} {assignment.labels[v]}\n")


# -- helpers ------------------------------------------------------------------


def _as_edge_mask(g: Graph, active_edges) -> np.ndarray:
    """Normalize None / bool mask / edge-id array / (u,v) pairs to a mask."""
    if active_edges is None:
        return np.ones(g.edge_count, dtype=bool)
    arr = np.asarray(active_edges)
    if arr.dtype == bool:
        if arr.shape != (g.edge_count,):
            raise ValueError("edge mask length does not match edge count")
        return arr
    mask = np.zeros(g.edge_count, dtype=bool)
    if arr.ndim == 2 and arr.shape[1] == 2:
        for u, v in arr:
            mask[g.require_edge_id(int(u), int(v))] = True
        return mask
    if arr.ndim == 1:
        ids = arr.astype(np.int64, copy=False)
        if ids.size and (ids.min() < 0 or ids.max() >= g.edge_count):
            raise ValueError("edge id outside graph's edge set")
        mask[ids] = True
        return mask
    raise ValueError("active_edges must be a mask, edge ids, or (u, v) pairs")


class _open_text:
    """Open a path for text io, or pass through an existing handle."""

    def __init__(self, target, mode: str):
        self.target = target
        self.mode = mode
        self.fh: IO[str] | None = None
        self.owns = False

    def __enter__(self) -> IO[str]:
        t = self.target
        if isinstance(t, (str, os.PathLike)):
            self.fh = open(t, self.mode, encoding="utf-8")
            self.owns = True
        elif isinstance(t, (io.RawIOBase, io.BufferedIOBase)):
            self.fh = io.TextIOWrapper(t, encoding="utf-8")
        else:
            self.fh = t
        return self.fh

    def __exit__(self, *exc):
        if self.fh is None:
            return
        if self.owns:
            self.fh.close()
        elif isinstance(self.fh, io.TextIOWrapper):
            self.fh.flush()
            self.fh.detach()
