"""Undirected graph container and its matrix views.

A `Graph` is immutable: node count, an ordered edge list (each undirected
edge stored once as i<j), and positive per-edge values defaulting to 1.
Edge identity is positional; weight tables, sampling plans and keep masks
all refer to edge m by its index in `edge_index`.

Matrix views are dense up to DENSE_LIMIT nodes and scipy CSR beyond.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

DENSE_LIMIT = 4096

ADJACENCY = "adjacency"
LAPLACIAN = "laplacian"
NORMALIZED = "normalized-adjacency-with-self-loops"
INCIDENCE = "incidence"


@dataclass(frozen=True)
class Graph:
    """Undirected graph with 0-based node ids and positional edge identity."""

    n: int
    edge_index: np.ndarray  # (M, 2) int64, row m = (i_m, j_m) with i_m < j_m
    edge_values: np.ndarray  # (M,) float64, positive

    @property
    def m(self) -> int:
        return self.edge_index.shape[0]

    @classmethod
    def from_edges(cls, n, edges, values=None) -> "Graph":
        """Build a validated graph from an iterable of (i, j) pairs.

        Pairs are normalized to i<j; self-loops, duplicates, out-of-range
        endpoints and non-positive values are rejected.
        """
        if n < 0:
            raise ValueError(f"node count must be >= 0, got {n}")
        edges = np.asarray(list(edges), dtype=np.int64)
        if edges.size == 0:
            edges = edges.reshape(0, 2)
        if edges.ndim != 2 or edges.shape[1] != 2:
            raise ValueError("edges must be (i, j) pairs")
        m = edges.shape[0]
        if values is None:
            values = np.ones(m, dtype=np.float64)
        else:
            values = np.asarray(values, dtype=np.float64)
            if values.shape != (m,):
                raise ValueError(f"expected {m} edge values, got {values.shape}")
        if m:
            if np.any(edges[:, 0] == edges[:, 1]):
                raise ValueError("self-loops are not allowed")
            if edges.min() < 0 or edges.max() >= n:
                raise ValueError(f"edge endpoint outside [0, {n})")
            if np.any(values <= 0):
                raise ValueError("edge values must be positive")
            lo = edges.min(axis=1)
            hi = edges.max(axis=1)
            edges = np.column_stack([lo, hi])
            seen = set()
            for i, j in edges:
                key = (int(i), int(j))
                if key in seen:
                    raise ValueError(f"duplicate edge {key}")
                seen.add(key)
        edges.setflags(write=False)
        values.setflags(write=False)
        return cls(n=int(n), edge_index=edges, edge_values=values)

    def degrees(self) -> np.ndarray:
        """Value-weighted degree per node."""
        deg = np.zeros(self.n, dtype=np.float64)
        np.add.at(deg, self.edge_index[:, 0], self.edge_values)
        np.add.at(deg, self.edge_index[:, 1], self.edge_values)
        return deg

    def edge_tuples(self):
        return [(int(i), int(j)) for i, j in self.edge_index]


@dataclass(frozen=True)
class GraphMatrix:
    """A matrix view of a graph: adjacency, Laplacian, normalized shift or
    incidence. Symmetric kinds are N x N; incidence is N x M."""

    kind: str
    data: object  # np.ndarray or scipy.sparse matrix
    graph: Graph = field(repr=False)

    def dense(self) -> np.ndarray:
        if sp.issparse(self.data):
            return np.asarray(self.data.todense(), dtype=np.float64)
        return self.data

    @property
    def shape(self):
        return self.data.shape

    @property
    def is_symmetric_kind(self) -> bool:
        return self.kind in (ADJACENCY, LAPLACIAN, NORMALIZED)


def _finish(kind: str, dense: np.ndarray, g: Graph, force_dense: bool) -> GraphMatrix:
    if not force_dense and g.n > DENSE_LIMIT:
        data = sp.csr_matrix(dense)
    else:
        dense.setflags(write=False)
        data = dense
    return GraphMatrix(kind=kind, data=data, graph=g)


def adjacency(g: Graph, force_dense: bool = False) -> GraphMatrix:
    """Symmetric adjacency with edge values off-diagonal, zero diagonal."""
    if g.n > DENSE_LIMIT and not force_dense:
        ei, ej = g.edge_index[:, 0], g.edge_index[:, 1]
        data = np.concatenate([g.edge_values, g.edge_values])
        rows = np.concatenate([ei, ej])
        cols = np.concatenate([ej, ei])
        a = sp.csr_matrix((data, (rows, cols)), shape=(g.n, g.n))
        return GraphMatrix(kind=ADJACENCY, data=a, graph=g)
    a = np.zeros((g.n, g.n), dtype=np.float64)
    ei, ej = g.edge_index[:, 0], g.edge_index[:, 1]
    a[ei, ej] = g.edge_values
    a[ej, ei] = g.edge_values
    return _finish(ADJACENCY, a, g, force_dense=True)


def laplacian(g: Graph, force_dense: bool = False) -> GraphMatrix:
    """Combinatorial Laplacian Deg - A (positive semidefinite, zero row sums)."""
    a = adjacency(g, force_dense=force_dense)
    deg = g.degrees()
    if sp.issparse(a.data):
        lap = sp.diags(deg) - a.data
        return GraphMatrix(kind=LAPLACIAN, data=lap.tocsr(), graph=g)
    lap = np.diag(deg) - a.data
    return _finish(LAPLACIAN, lap, g, force_dense=True)


def normalized_shift(g: Graph, force_dense: bool = False) -> GraphMatrix:
    """Self-loop renormalized adjacency Dhat^-1/2 (A + I) Dhat^-1/2.

    Spectrum lies in [-1, 1]; an isolated node keeps a diagonal entry of 1.
    """
    a = adjacency(g, force_dense=force_dense)
    dhat = g.degrees() + 1.0
    scale = 1.0 / np.sqrt(dhat)
    if sp.issparse(a.data):
        d = sp.diags(scale)
        shifted = d @ (a.data + sp.identity(g.n, format="csr")) @ d
        return GraphMatrix(kind=NORMALIZED, data=shifted.tocsr(), graph=g)
    shifted = (a.data + np.eye(g.n)) * scale[:, None] * scale[None, :]
    return _finish(NORMALIZED, shifted, g, force_dense=True)


def incidence(g: Graph) -> GraphMatrix:
    """N x M signed incidence: column m has +1 at i_m and -1 at j_m.

    With unit edge values, D @ D.T reproduces the combinatorial Laplacian.
    """
    n, m = g.n, g.m
    if n * max(m, 1) > 8_000_000:
        rows = np.concatenate([g.edge_index[:, 0], g.edge_index[:, 1]])
        cols = np.concatenate([np.arange(m), np.arange(m)])
        vals = np.concatenate([np.ones(m), -np.ones(m)])
        d = sp.csr_matrix((vals, (rows, cols)), shape=(n, m))
        return GraphMatrix(kind=INCIDENCE, data=d, graph=g)
    d = np.zeros((n, m), dtype=np.float64)
    d[g.edge_index[:, 0], np.arange(m)] = 1.0
    d[g.edge_index[:, 1], np.arange(m)] = -1.0
    d.setflags(write=False)
    return GraphMatrix(kind=INCIDENCE, data=d, graph=g)


def drop_edges(g: Graph, keep_mask) -> Graph:
    """Subgraph over the same node set keeping exactly the masked-in edges."""
    keep = np.asarray(keep_mask, dtype=bool)
    if keep.shape != (g.m,):
        raise ValueError(f"keep mask has length {keep.shape}, expected ({g.m},)")
    edges = g.edge_index[keep].copy()
    values = g.edge_values[keep].copy()
    edges.setflags(write=False)
    values.setflags(write=False)
    return Graph(n=g.n, edge_index=edges, edge_values=values)


def read_edge_list(path) -> Graph:
    """Parse the tab-separated edge-list format.

    One edge per line as "i<TAB>j" or "i<TAB>j<TAB>value"; '#' lines are
    comments except an optional "#nodes=N" header fixing the node count
    (otherwise n = max id + 1).
    """
    edges = []
    values = []
    n_header = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                if line.startswith("#nodes="):
                    try:
                        n_header = int(line[len("#nodes="):])
                    except ValueError:
                        raise ValueError(f"{path}:{lineno}: bad node header {line!r}")
                continue
            parts = line.split("\t")
            if len(parts) not in (2, 3):
                raise ValueError(f"{path}:{lineno}: expected 2 or 3 fields, got {len(parts)}")
            try:
                i, j = int(parts[0]), int(parts[1])
                v = float(parts[2]) if len(parts) == 3 else 1.0
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
            edges.append((i, j))
            values.append(v)
    if n_header is not None:
        n = n_header
    else:
        n = 1 + max((max(i, j) for i, j in edges), default=-1)
    return Graph.from_edges(n, edges, values)


def write_edge_list(g: Graph, path) -> None:
    """Write the graph in the edge-list format with a "#nodes=" header."""
    unit = np.allclose(g.edge_values, 1.0)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"#nodes={g.n}\n")
        for m in range(g.m):
            i, j = g.edge_index[m]
            if unit:
                fh.write(f"{i}\t{j}\n")
            else:
                fh.write(f"{i}\t{j}\t{g.edge_values[m]!r}\n")
