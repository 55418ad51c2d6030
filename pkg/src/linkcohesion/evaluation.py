"""Community-detection scoring, correlation, benchmark graphs, pipelines."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .baselines import sparsify_local
from .cohesion import DEFAULT_WEIGHTS, score_all
from .graph import CommunityAssignment, Graph, _open_text
from .pruning import prune
from .truss import maximal_community_truss

# Ablation grid: every non-zero binary weighting of the three hops.
BINARY_WEIGHT_COMBOS = [
    (1, 1, 1),
    (1, 1, 0),
    (1, 0, 1),
    (0, 1, 1),
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
]

PIPELINE_METHODS = ("original", "sparsify", "mdcore")


class UndefinedMetricError(ValueError):
    """A score or correlation has no defined value for these inputs."""


@dataclass
class EvalReport:
    """One pipeline run: detected communities, F-score, remaining edges."""

    method: str
    detected_count: int
    ground_truth_count: int
    f_score: float | None
    remaining_edges: int
    elapsed_seconds: float

    def f_score_text(self) -> str:
        return "--" if self.f_score is None else f"{self.f_score:.3f}"

    def __str__(self) -> str:
        return (
            f"method={self.method} detected={self.detected_count} "
            f"truth={self.ground_truth_count} f_score={self.f_score_text()} "
            f"remaining_edges={self.remaining_edges} "
            f"elapsed={self.elapsed_seconds:.3f}s"
        )


@dataclass
class GeneratorSpec:
    """Planted-partition parameters; p_out never exceeds p_in."""

    n: int
    communities: int | list[int]
    p_in: float
    p_out: float
    seed: int = 0

    def sizes(self) -> list[int]:
        if isinstance(self.communities, int):
            c = self.communities
            if c < 1:
                raise ValueError("need at least one community")
            base, extra = divmod(self.n, c)
            return [base + (1 if i < extra else 0) for i in range(c)]
        sizes = list(self.communities)
        if sum(sizes) != self.n or any(s < 1 for s in sizes):
            raise ValueError("community sizes must be positive and sum to n")
        return sizes

    def validate(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if not (0.0 <= self.p_out <= self.p_in <= 1.0):
            raise ValueError("need 0 <= p_out <= p_in <= 1")
        self.sizes()


def f_score(detected: CommunityAssignment, truth: CommunityAssignment) -> float:
    """Best-match F-score of detected communities against ground truth.

    Each ground-truth community is matched to the detected community
    maximizing the harmonic mean of precision (|T∩D|/|D|) and recall
    (|T∩D|/|T|); per-community bests are averaged weighted by |T|.
    Vertices missing from every detected community depress recall.
    """
    if truth.community_count == 0:
        raise UndefinedMetricError("ground truth has no communities")
    if detected.community_count == 0:
        raise UndefinedMetricError("no detected communities")

    det_sizes = np.bincount(
        detected.labels[detected.labels >= 0], minlength=detected.community_count
    )
    truth_sizes = np.bincount(
        truth.labels[truth.labels >= 0], minlength=truth.community_count
    )

    both = (detected.labels >= 0) & (truth.labels >= 0)
    overlap = Counter(zip(truth.labels[both].tolist(), detected.labels[both].tolist()))
    best_f = np.zeros(truth.community_count)
    for (t, d), inter in overlap.items():
        precision = inter / det_sizes[d]
        recall = inter / truth_sizes[t]
        f = 2.0 * precision * recall / (precision + recall)
        if f > best_f[t]:
            best_f[t] = f
    return float((best_f * truth_sizes).sum() / truth_sizes.sum())


def pearson(x, y) -> float:
    """Sample Pearson correlation; zero variance is undefined, not 0."""
    xa = np.asarray(x, dtype=np.float64)
    ya = np.asarray(y, dtype=np.float64)
    if xa.shape != ya.shape or xa.ndim != 1:
        raise ValueError("inputs must be 1-d arrays of equal length")
    if xa.size < 2:
        raise UndefinedMetricError("correlation needs at least two values")
    xc = xa - xa.mean()
    yc = ya - ya.mean()
    sx = float((xc * xc).sum())
    sy = float((yc * yc).sum())
    if sx == 0.0 or sy == 0.0:
        raise UndefinedMetricError("correlation undefined for constant input")
    return float((xc * yc).sum() / np.sqrt(sx * sy))


def planted_partition(spec: GeneratorSpec) -> tuple[Graph, CommunityAssignment]:
    """Random graph with planted communities and its ground truth.

    Intra-community pairs connect with p_in, inter-community pairs with
    p_out, drawn from a generator seeded by ``spec.seed`` with blocks
    visited in a fixed order, so identical specs give identical graphs.
    """
    spec.validate()
    sizes = spec.sizes()
    rng = np.random.default_rng(spec.seed)
    offsets = np.concatenate(([0], np.cumsum(sizes))).astype(np.int64)

    us: list[np.ndarray] = []
    vs: list[np.ndarray] = []
    n_comm = len(sizes)
    for a in range(n_comm):
        lo, hi = offsets[a], offsets[a + 1]
        s = hi - lo
        if s > 1 and spec.p_in > 0:
            iu, iv = np.triu_indices(s, k=1)
            hit = rng.random(iu.size) < spec.p_in
            us.append(iu[hit] + lo)
            vs.append(iv[hit] + lo)
        for b in range(a + 1, n_comm):
            blo, bhi = offsets[b], offsets[b + 1]
            t = bhi - blo
            if spec.p_out > 0:
                hit = rng.random((s, t)) < spec.p_out
                iu, iv = np.nonzero(hit)
                us.append(iu.astype(np.int64) + lo)
                vs.append(iv.astype(np.int64) + blo)

    if us:
        eu = np.concatenate(us)
        ev = np.concatenate(vs)
    else:
        eu = np.zeros(0, dtype=np.int64)
        ev = np.zeros(0, dtype=np.int64)
    g = Graph(spec.n, eu, ev)

    labels = np.zeros(spec.n, dtype=np.int64)
    for c in range(n_comm):
        labels[offsets[c] : offsets[c + 1]] = c
    return g, CommunityAssignment(labels, n_comm)


def run_pipeline(
    g: Graph,
    truth: CommunityAssignment,
    method: str,
    *,
    weights=DEFAULT_WEIGHTS,
    exponent: float = 0.5,
) -> EvalReport:
    """Apply an edge-removal method, find truss communities, score them."""
    if method not in PIPELINE_METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {PIPELINE_METHODS}")
    start = time.perf_counter()
    if method == "original":
        h = g
    elif method == "sparsify":
        h = sparsify_local(g, exponent)
    else:
        h = prune(g, score_all(g, weights))

    result = maximal_community_truss(h)
    detected = result.labels
    try:
        f = f_score(detected, truth)
    except UndefinedMetricError:
        f = None
    elapsed = time.perf_counter() - start
    return EvalReport(
        method=method,
        detected_count=result.cluster_count,
        ground_truth_count=truth.community_count,
        f_score=f,
        remaining_edges=h.edge_count,
        elapsed_seconds=elapsed,
    )


def write_reports_csv(reports, dest, extra_header: str = "", extra_rows=None) -> None:
    """Reports as CSV; optional leading columns (e.g. the weight combo)."""
    with _open_text(dest, "w") as fh:
        prefix = f"{extra_header}," if extra_header else ""
        fh.write(
            f"{prefix}method,detected,ground_truth,f_score,"
            "remaining_edges,elapsed_seconds\n"
        )
        for i, r in enumerate(reports):
            lead = f"{extra_rows[i]}," if extra_rows else ""
            fh.write(
                f"{lead}{r.method},{r.detected_count},{r.ground_truth_count},"
                f"{r.f_score_text()},{r.remaining_edges},{r.elapsed_seconds:.4f}\n"
            )
