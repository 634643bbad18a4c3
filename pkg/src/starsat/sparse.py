"""Maximum vertex sets inducing few edges.

Exact branch-and-bound searches for the largest set inducing at most (or
exactly) m edges, a fixed-size decision search, and exact subset counts.
The inner loops live in starsat._kernels (compiled when available).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .graph import Graph, induced_edge_count

DEFAULT_BUDGET = 10**8
COUNT_CAP = 20


@dataclass(frozen=True)
class SparseSetResult:
    """A witness vertex set with its induced edge count.

    exact is True when the search proved optimality within its node budget;
    otherwise the witness is the best found.  nodes reports the search-tree
    size actually explored.
    """

    vertices: tuple[int, ...]
    induced_edges: int
    size: int
    exact: bool
    nodes: int = 0


def degeneracy_order(G: Graph) -> list[int]:
    """Vertex removal order of the repeated-minimum-degree peeling;
    ties broken toward the smallest id."""
    n = G.n
    alive = (1 << n) - 1
    deg = [G.degree(v) for v in range(n)]
    order = []
    for _ in range(n):
        best, best_deg = -1, n + 1
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if deg[v] < best_deg:
                best, best_deg = v, deg[v]
            rest ^= low
        order.append(best)
        alive ^= 1 << best
        row = G.adj[best] & alive
        while row:
            low = row & -row
            deg[low.bit_length() - 1] -= 1
            row ^= low
    return order


def max_sparse_set(
    G: Graph,
    m: int,
    mode: str = "at_most",
    budget: int = DEFAULT_BUDGET,
) -> SparseSetResult | None:
    """Maximum-size vertex set inducing at most m edges ("at_most" mode) or
    exactly m edges ("exactly" mode).

    The branch and bound processes vertices in degeneracy order; among
    optimal sets the lexicographically smallest is returned.  In exactly
    mode the at-most search runs first, and when the target count is not
    attained at the maximum size the search walks down one size at a time
    with a complete fixed-size decision; None means no set induces exactly
    m edges (a proof, provided the budget was not exhausted).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    mode = mode.replace("-", "_")
    if mode not in ("at_most", "exactly"):
        raise ValueError(f"unknown mode {mode!r}")

    order = degeneracy_order(G)
    best_size, at_best, seen, nodes, completed = _kernels.max_sparse_set_at_most(
        G.n, list(G.adj), m, order, budget
    )

    if mode == "at_most":
        witness = min(w for w in at_best if w is not None)
        edges = induced_edge_count(G, witness)
        return SparseSetResult(witness, edges, len(witness), completed, nodes)

    if at_best[m] is not None:
        return SparseSetResult(at_best[m], m, best_size, completed, nodes)
    if not completed:
        # budget died before optimality; fall back to the best witness seen
        fallback = seen[m]
        if fallback is not None:
            return SparseSetResult(fallback[1], m, fallback[0], False, nodes)
        return None
    size = best_size - 1
    while size >= 0:
        if size * (size - 1) // 2 >= m:
            left = budget - nodes if budget >= 0 else -1
            witness, used, ok = _kernels.find_set_with_edges(
                G.n, list(G.adj), size, m, left
            )
            nodes += used
            if witness is not None:
                return SparseSetResult(witness, m, size, True, nodes)
            if not ok:
                fallback = seen[m]
                if fallback is not None:
                    return SparseSetResult(fallback[1], m, fallback[0], False, nodes)
                return None
        size -= 1
    return None


def sparse_set_decision(G: Graph, k: int, threshold: int) -> tuple[int, ...] | None:
    """A k-vertex set inducing fewer than threshold edges, or None when
    every k-set induces at least threshold.  Complete search (no budget);
    the witness returned is the lexicographically smallest."""
    if k < 0 or threshold < 0:
        raise ValueError("k and threshold must be nonnegative")
    if k > G.n:
        raise ValueError(f"k={k} exceeds the vertex count {G.n}")
    return _kernels.find_sparse_kset(G.n, list(G.adj), k, threshold - 1)


def count_sets(G: Graph, k: int, m: int) -> int:
    """Exact number of k-vertex sets inducing exactly m edges
    (full enumeration; refuses n beyond the documented cap)."""
    if G.n > COUNT_CAP:
        raise ValueError(f"count_sets is capped at n <= {COUNT_CAP}, got n={G.n}")
    if k < 0 or m < 0:
        raise ValueError("k and m must be nonnegative")
    return _kernels.count_ksets_with_edges(G.n, list(G.adj), k, m)
