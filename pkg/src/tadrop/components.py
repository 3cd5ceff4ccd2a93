"""Disjoint-component identification and cluster-partition metrics.

Component labels come from a disjoint-set forest (union by rank, path
compression) and are contiguous ids ordered by each component's smallest
node. Partition metrics quantify how well a set of clusters is separated:
each cluster's boundary-edge count normalized by the square root of its
size, the root mean square of those over the partition, and the tightest
coefficient `alpha` relating that average to the spectral gap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import connected_component_labels
from .graph import Graph


@dataclass(frozen=True)
class ComponentLabeling:
    label: np.ndarray  # (n,) component id per node, contiguous from 0
    count: int
    sizes: np.ndarray  # (count,) nodes per component


@dataclass(frozen=True)
class PartitionMetrics:
    subgraph_degrees: np.ndarray  # per-cluster boundary count / sqrt(size)
    average: float  # root mean square of subgraph_degrees
    alpha: float  # average * sqrt(2q) / lambda_q


def find_components(g: Graph) -> ComponentLabeling:
    """Label connected components via the union-find kernel."""
    labels, count = connected_component_labels(
        g.n, g.edge_index[:, 0], g.edge_index[:, 1]
    )
    sizes = np.bincount(labels, minlength=count)
    return ComponentLabeling(label=labels, count=count, sizes=sizes)


def _member_mask(g: Graph, nodes) -> np.ndarray:
    nodes = np.asarray(list(nodes), dtype=np.int64)
    if nodes.size == 0:
        raise ValueError("cluster must be nonempty")
    if nodes.min() < 0 or nodes.max() >= g.n:
        raise ValueError("cluster contains node ids outside the graph")
    mask = np.zeros(g.n, dtype=bool)
    mask[nodes] = True
    return mask


def boundary_edge_count(g: Graph, nodes) -> int:
    """Number of edges with exactly one endpoint inside `nodes`."""
    mask = _member_mask(g, nodes)
    inside = mask[g.edge_index]
    return int(np.count_nonzero(inside[:, 0] ^ inside[:, 1]))


def relative_subgraph_degree(g: Graph, cluster_nodes) -> float:
    """Boundary-edge count of the cluster divided by sqrt(cluster size).

    Edge values are ignored; edges are counted, not weighed.
    """
    nodes = np.asarray(list(cluster_nodes), dtype=np.int64)
    count = boundary_edge_count(g, nodes)
    return count / np.sqrt(len(np.unique(nodes)))


def partition_metrics(g: Graph, clusters, lambda_q: float) -> PartitionMetrics:
    """Separation metrics of a partition of the node set into q clusters.

    `lambda_q` is the (q+1)-smallest Laplacian eigenvalue of the graph the
    partition lives on; `alpha` is the smallest coefficient for which
    average <= alpha * lambda_q / sqrt(2q) holds.
    """
    if lambda_q <= 0:
        raise ValueError(f"lambda_q must be positive, got {lambda_q}")
    clusters = [np.asarray(sorted(c), dtype=np.int64) for c in clusters]
    if not clusters:
        raise ValueError("partition must contain at least one cluster")
    covered = np.zeros(g.n, dtype=np.int64)
    for c in clusters:
        if c.size == 0:
            raise ValueError("clusters must be nonempty")
        covered[c] += 1
    if np.any(covered > 1):
        raise ValueError("clusters overlap")
    if np.any(covered == 0):
        raise ValueError("clusters do not cover the node set")
    betas = np.array([relative_subgraph_degree(g, c) for c in clusters])
    q = len(clusters)
    average = float(np.sqrt(np.mean(betas**2)))
    alpha = average * np.sqrt(2.0 * q) / lambda_q
    return PartitionMetrics(subgraph_degrees=betas, average=average, alpha=float(alpha))


def component_report(labeling: ComponentLabeling) -> dict:
    """JSON-ready summary: count plus descending sizes with extremes."""
    sizes = np.sort(labeling.sizes)[::-1]
    return {
        "count": int(labeling.count),
        "sizes": [int(s) for s in sizes],
        "largest": int(sizes[0]) if sizes.size else 0,
        "smallest": int(sizes[-1]) if sizes.size else 0,
    }
