"""Immutable bitset graphs, seeded G(n,p) sampling, and edge-list I/O.

Vertices are always 0..n-1.  Adjacency is stored as one Python int per
vertex (bit j of adj[v] set iff {v,j} is an edge), which makes induced
edge counts and neighborhood intersections single popcount operations.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np


class GraphError(ValueError):
    """Invalid graph construction input."""


class ParseError(GraphError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.

    Instances are immutable; build them with make_graph / sample_gnp / parse.
    """

    n: int
    adj: tuple[int, ...]
    m: int = field(default=-1)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        deg_sum = 0
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise GraphError(f"adjacency row {v} references vertices >= n")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            deg_sum += row.bit_count()
            _ = full
        if deg_sum % 2:
            raise GraphError("asymmetric adjacency: odd degree sum")
        if self.m == -1:
            object.__setattr__(self, "m", deg_sum // 2)
        elif self.m != deg_sum // 2:
            raise GraphError("edge count does not match half the degree sum")
        # symmetry: u in adj[v] must imply v in adj[u]
        for v in range(self.n):
            row = self.adj[v]
            while row:
                low = row & -row
                u = low.bit_length() - 1
                if not (self.adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency at pair ({v}, {u})")
                row ^= low

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits_of(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def is_subgraph_of(self, other: "Graph") -> bool:
        """True when self is a spanning subgraph of other (same n)."""
        if self.n != other.n:
            return False
        return all(self.adj[v] & ~other.adj[v] == 0 for v in range(self.n))


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list; duplicate edges are collapsed.

    Raises GraphError for out-of-range endpoints or self-loops, naming the
    offending pair.
    """
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphError(f"endpoint out of range in edge ({u}, {v})")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


@dataclass(frozen=True)
class Seed:
    """Reproducible random source: a 64-bit master plus a derivation label.

    The random stream is Philox4x64 keyed by the first 128 bits of
    SHA-256(master || "|" || stream), so identical (master, stream) pairs
    give bit-identical draws on every platform; child() derives namespaced
    sub-seeds for independent components.
    """

    master: int
    stream: str | int = ""

    def __post_init__(self):
        if not (0 <= self.master < 2**64):
            raise ValueError("master seed must fit in 64 bits")

    def key(self) -> int:
        data = self.master.to_bytes(8, "big") + b"|" + str(self.stream).encode()
        return int.from_bytes(hashlib.sha256(data).digest()[:16], "big")

    def child(self, label: str | int) -> "Seed":
        return Seed(self.master, f"{self.stream}/{label}")

    def generator(self) -> np.random.Generator:
        return np.random.Generator(np.random.Philox(key=self.key()))


def sample_gnp(n: int, p: float, seed: Seed) -> Graph:
    """Sample G(n,p): each of the C(n,2) pairs kept independently with prob p.

    Pair i of the lexicographic order (0,1),(0,2),...,(n-2,n-1) consumes the
    i-th uniform draw of the seed's stream, so results are reproducible
    across runs, platforms, and call sites.
    """
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"edge probability must lie in [0,1], got {p}")
    num_pairs = n * (n - 1) // 2
    adj = [0] * n
    if num_pairs:
        draws = seed.generator().random(num_pairs)
        keep = draws < p
        ui, vi = np.triu_indices(n, k=1)
        for u, v in zip(ui[keep].tolist(), vi[keep].tolist()):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def induced_edge_count(G: Graph, vertices: Iterable[int]) -> int:
    """Number of G-edges with both endpoints in the given vertex set."""
    mask = 0
    for v in vertices:
        if not (0 <= v < G.n):
            raise GraphError(f"vertex {v} outside the graph")
        mask |= 1 << v
    return induced_edge_count_mask(G, mask)


def induced_edge_count_mask(G: Graph, mask: int) -> int:
    total = 0
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        total += (G.adj[v] & mask).bit_count()
        rest ^= low
    return total // 2


def serialize(G: Graph) -> str:
    """Edge-list text: first line "n m", then one "u v" line per edge,
    u < v, lexicographically sorted, newline-terminated."""
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse(text: str) -> Graph:
    """Parse the edge-list format; strict inverse of serialize.

    Rejects malformed lines, unsorted or duplicate edges, and out-of-range
    endpoints, reporting the 1-based line number.
    """
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("expected header 'n m'", 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("non-integer header", 1) from None
    if n < 0 or m < 0:
        raise ParseError("negative header values", 1)
    edges: list[tuple[int, int]] = []
    prev: tuple[int, int] | None = None
    for idx, raw in enumerate(lines[1:], start=2):
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError("expected 'u v'", idx)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("non-integer endpoint", idx) from None
        if u >= v:
            raise ParseError(f"edge ({u}, {v}) not in u < v form", idx)
        if not (0 <= u < n) or not (0 <= v < n):
            raise ParseError(f"endpoint out of range in edge ({u}, {v})", idx)
        if prev is not None:
            if (u, v) == prev:
                raise ParseError(f"duplicate edge ({u}, {v})", idx)
            if (u, v) < prev:
                raise ParseError("edges not lexicographically sorted", idx)
        prev = (u, v)
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", 1)
    return make_graph(n, edges)
