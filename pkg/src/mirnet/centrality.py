"""Markov centrality via mean first-passage times of a random walk."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.stats

from .errors import AlignmentError
from .graph import FilteredGraph


@dataclass
class CentralityVector:
    """Markov centrality score per node; higher means more central."""

    tickers: tuple[str, ...]
    scores: np.ndarray
    graph_ref: str

    def normalized(self) -> np.ndarray:
        """Scores rescaled to sum to one (the layout of published tables)."""
        return self.scores / self.scores.sum()

    def to_delimited(self, delimiter: str = ",") -> str:
        lines = [delimiter.join(["vertex", "score", "normalized"])]
        norm = self.normalized()
        for t, s, ns in zip(self.tickers, self.scores, norm):
            lines.append(delimiter.join([t, f"{s:.10g}", f"{ns:.10g}"]))
        return "\n".join(lines) + "\n"


def transition_matrix(graph: FilteredGraph, weighted: bool = False) -> np.ndarray:
    """Row-stochastic random-walk matrix of a connected filtered graph.

    Unweighted: uniform over neighbours. Weighted: proportional to the
    similarity 1 - distance of each incident edge.
    """
    n = graph.n
    index = {t: i for i, t in enumerate(graph.nodes)}
    w = np.zeros((n, n), dtype=float)
    for u, v, dist in graph.edges:
        i, j = index[u], index[v]
        weight = max(1.0 - dist, 1e-12) if weighted else 1.0
        w[i, j] = w[j, i] = weight
    row_sums = w.sum(axis=1)
    if np.any(row_sums == 0):
        isolated = [graph.nodes[i] for i in np.flatnonzero(row_sums == 0)]
        raise ValueError(f"graph is disconnected; isolated nodes: {isolated}")
    return w / row_sums[:, None]


def mean_first_passage(P: np.ndarray) -> np.ndarray:
    """Matrix M with M[s, v] = expected steps of the walk from s to v.

    Column v solves (I - P) m = 1 with the row for v pinned to m[v] = 0.
    """
    P = np.asarray(P, dtype=float)
    n = P.shape[0]
    M = np.zeros((n, n), dtype=float)
    identity = np.eye(n)
    for v in range(n):
        a = identity - P
        a[v, :] = 0.0
        a[v, v] = 1.0
        b = np.ones(n)
        b[v] = 0.0
        cond = np.linalg.cond(a)
        if not np.isfinite(cond) or cond > 1e12:
            raise np.linalg.LinAlgError(
                f"first-passage system for target {v} is ill-conditioned "
                f"(condition number {cond:.3g})"
            )
        M[:, v] = scipy.linalg.solve(a, b)
    return M


def markov_centrality(graph: FilteredGraph, weighted: bool = False) -> CentralityVector:
    """Inverse mean hitting time: score(v) = n / sum_s M[s, v]."""
    P = transition_matrix(graph, weighted=weighted)
    M = mean_first_passage(P)
    n = graph.n
    scores = n / M.sum(axis=0)
    ref = f"{graph.kind}:{graph.source_method}"
    alpha = graph.params.get("alphabet_size")
    if alpha is not None:
        ref += f":a{alpha}"
    return CentralityVector(tickers=graph.nodes, scores=scores, graph_ref=ref)


def compare_centralities(a: CentralityVector, b: CentralityVector) -> dict:
    """Pearson and Spearman correlation between two score vectors."""
    if a.tickers != b.tickers:
        raise AlignmentError(
            f"ticker sets differ: {a.tickers} vs {b.tickers}"
        )
    pearson_r = float(np.corrcoef(a.scores, b.scores)[0, 1])
    spearman_r = float(scipy.stats.spearmanr(a.scores, b.scores).statistic)
    return {
        "a": a.graph_ref,
        "b": b.graph_ref,
        "pearson": pearson_r,
        "spearman": spearman_r,
        "n": len(a.tickers),
    }
