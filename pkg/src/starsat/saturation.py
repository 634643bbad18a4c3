"""Star saturation: verifier, exact solvers, and the sparse-set lower bound.

A spanning subgraph H of a host G is K_{1,r}-saturated in G when H has
maximum degree at most r-1 and every host edge missing from H has an
endpoint of H-degree exactly r-1 (adding it would create a vertex of
degree r).  Two independent exact solvers are provided: a branching search
over edge subsets (sat_exact_oracle) and a search over low-degree vertex
classes with degree-constrained completions (sat_exact_structured); they
cross-validate each other on small hosts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, bits_of, induced_edge_count_mask, make_graph, mask_of
from .sparse import DEFAULT_BUDGET, SparseSetResult, max_sparse_set, sparse_set_decision
from .theory import ceil_half

ORACLE_CAP = 12
GENERIC_CAP_N = 8
GENERIC_CAP_F = 5


@dataclass(frozen=True)
class SaturatedSubgraph:
    """A saturated spanning subgraph with its degree-class certificate.

    v1 collects the vertices of H-degree at most r-2, v2 those of degree
    exactly r-1; cross_edges counts H-edges between the classes.  For any
    saturated H every host edge inside v1 is an H-edge, and
    edge_count = e(H[v1]) + ((r-1)|v2| + cross_edges) / 2.
    """

    H: Graph
    v1: tuple[int, ...]
    v2: tuple[int, ...]
    cross_edges: int
    edge_count: int

    @classmethod
    def from_subgraph(cls, host: Graph, H: Graph, r: int) -> "SaturatedSubgraph":
        problem = is_star_saturated(host, H, r)
        if problem is not None:
            raise ValueError(f"subgraph is not saturated: {problem}")
        v1 = tuple(v for v in range(H.n) if H.degree(v) <= r - 2)
        v2 = tuple(v for v in range(H.n) if H.degree(v) == r - 1)
        v1_mask = mask_of(v1)
        cross = sum((H.adj[v] & v1_mask).bit_count() for v in v2)
        inner = induced_edge_count_mask(H, v1_mask)
        assert ((r - 1) * len(v2) + cross) % 2 == 0
        assert H.m == inner + ((r - 1) * len(v2) + cross) // 2
        # host edges inside the low-degree class must all be present in H
        for v in v1:
            missing = (host.adj[v] & v1_mask) & ~H.adj[v]
            assert missing == 0, "host edge inside the low-degree class is absent"
        return cls(H, v1, v2, cross, H.m)


@dataclass(frozen=True)
class SatResult:
    """Exact star saturation number with a witness and the solving route."""

    value: int
    witness: SaturatedSubgraph
    method: str  # "oracle" | "structured"
    proven: bool


@dataclass(frozen=True)
class GenericSatResult:
    """Exact sat(G, F) for an arbitrary small pattern F; the witness is a
    plain graph since the degree-class certificate is star-specific."""

    value: int
    H: Graph
    proven: bool


def is_star_saturated(G: Graph, H: Graph, r: int) -> str | None:
    """None when H is K_{1,r}-saturated in G, else the first violation.

    Checks that H is K_{1,r}-free (max degree <= r-1) and that every
    G-edge absent from H has an endpoint of H-degree exactly r-1.
    Raises ValueError when H is not a spanning subgraph of G.
    """
    if r < 1:
        raise ValueError("star size must be positive")
    if H.n != G.n or not H.is_subgraph_of(G):
        raise ValueError("H is not a spanning subgraph of G")
    for v in range(H.n):
        if H.degree(v) >= r:
            return f"vertex {v} has degree {H.degree(v)} >= {r}"
    for u in range(G.n):
        extra = (G.adj[u] & ~H.adj[u]) >> (u + 1)
        v = u + 1
        while extra:
            if extra & 1:
                if H.degree(u) != r - 1 and H.degree(v) != r - 1:
                    return (
                        f"edge ({u}, {v}) is addable: degrees "
                        f"{H.degree(u)} and {H.degree(v)} both below {r - 1}"
                    )
            extra >>= 1
            v += 1
    return None


def _greedy_saturated(G: Graph, r: int, edge_order: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """One-pass maximal subgraph with all degrees <= r-1: an edge is taken
    iff both endpoints still have degree <= r-2.  Always saturated."""
    deg = [0] * G.n
    taken = []
    for u, v in edge_order:
        if deg[u] <= r - 2 and deg[v] <= r - 2:
            deg[u] += 1
            deg[v] += 1
            taken.append((u, v))
    return taken


def sat_exact_oracle(G: Graph, r: int) -> SatResult:
    """Exact sat(G, K_{1,r}) by depth-first branching over host edges.

    Every host edge is decided out/in (exclusion first); a branch dies when
    an excluded edge can no longer gain a saturated endpoint, when a forced
    vertex cannot reach degree r-1, or when the forced-degree lower bound
    meets the incumbent.  Complete search within the documented cap.
    """
    if r < 2:
        raise ValueError("star size must be at least 2")
    if G.n > ORACLE_CAP:
        raise ValueError(f"exact oracle is capped at n <= {ORACLE_CAP}, got n={G.n}")

    edges = G.edges()
    m_host = len(edges)
    best_edges: list[tuple[int, int]] | None = None
    orders = [
        edges,
        edges[::-1],
        sorted(edges, key=lambda e: (G.degree(e[0]) + G.degree(e[1]), e)),
        sorted(edges, key=lambda e: (-(G.degree(e[0]) + G.degree(e[1])), e)),
    ]
    for order in orders:
        cand = _greedy_saturated(G, r, order)
        if best_edges is None or len(cand) < len(best_edges):
            best_edges = cand
    best = len(best_edges) if best_edges is not None else 0

    deg = [0] * G.n
    undec = [0] * G.n
    for u, v in edges:
        undec[u] += 1
        undec[v] += 1
    included: list[tuple[int, int]] = []
    excluded_open: list[tuple[int, int]] = []  # excluded, not covered yet

    def lower_bound() -> int | None:
        """Half the summed outstanding demand of forced vertices, or None
        when some excluded edge can no longer be covered at all."""
        need = 0
        forced = 0
        for u, v in excluded_open:
            if deg[u] == r - 1 or deg[v] == r - 1:
                continue
            u_alive = deg[u] + undec[u] >= r - 1
            v_alive = deg[v] + undec[v] >= r - 1
            if not u_alive and not v_alive:
                return None
            if not u_alive:
                bit = 1 << v
                if not forced & bit:
                    forced |= bit
                    need += (r - 1) - deg[v]
            elif not v_alive:
                bit = 1 << u
                if not forced & bit:
                    forced |= bit
                    need += (r - 1) - deg[u]
        return (need + 1) // 2

    def rec(idx: int) -> None:
        nonlocal best, best_edges
        if len(included) >= best:
            return
        lb = lower_bound()
        if lb is None or len(included) + lb >= best:
            return
        if idx == m_host:
            for u, v in excluded_open:
                if deg[u] != r - 1 and deg[v] != r - 1:
                    return
            best = len(included)
            best_edges = included.copy()
            return
        u, v = edges[idx]
        undec[u] -= 1
        undec[v] -= 1
        # exclude first: favors sparse subgraphs
        covered = deg[u] == r - 1 or deg[v] == r - 1
        if not covered:
            excluded_open.append((u, v))
        rec(idx + 1)
        if not covered:
            excluded_open.pop()
        # include
        if deg[u] <= r - 2 and deg[v] <= r - 2:
            deg[u] += 1
            deg[v] += 1
            included.append((u, v))
            rec(idx + 1)
            included.pop()
            deg[u] -= 1
            deg[v] -= 1
        undec[u] += 1
        undec[v] += 1

    rec(0)
    H = make_graph(G.n, best_edges or [])
    witness = SaturatedSubgraph.from_subgraph(G, H, r)
    return SatResult(best, witness, "oracle", True)


def min_completion(G: Graph, v1: tuple[int, ...] | list[int], r: int) -> tuple[int, Graph] | None:
    """Cheapest saturated extension of the low-degree class choice v1.

    Finds a spanning H containing every host edge inside v1 in which each
    vertex outside v1 has degree exactly r-1 and each v1 vertex keeps
    degree at most r-2, minimizing the number of v1-to-v2 cross edges
    (equivalently, total edges).  Iterates the cross count c upward in
    steps of two from the parity forced by (r-1)|v2|, testing feasibility
    by a backtracking degree-constrained search.  None when no extension
    exists for this v1.
    """
    v1 = sorted(v1)
    v1_mask = mask_of(v1)
    inner = {v: (G.adj[v] & v1_mask).bit_count() for v in v1}
    for v in v1:
        if inner[v] > r - 2:
            raise ValueError(
                f"vertex {v} has degree {inner[v]} > r-2 inside the chosen class"
            )
    v2 = [v for v in range(G.n) if not (v1_mask >> v) & 1]
    base_edges = [(u, v) for u, v in G.edges() if (v1_mask >> u) & 1 and (v1_mask >> v) & 1]
    if not v2:
        return 0, make_graph(G.n, base_edges)

    caps = {u: (r - 2) - inner[u] for u in v1}
    total_demand = (r - 1) * len(v2)
    c0 = total_demand % 2
    c_cap = min(sum(caps.values()), total_demand)

    # every v2 vertex must be able to reach degree r-1 at all
    for v in v2:
        within = (G.adj[v] & ~v1_mask).bit_count()
        cross_opts = sum(1 for u in v1 if (G.adj[v] >> u) & 1 and caps[u] > 0)
        if within + cross_opts < r - 1:
            return None

    # settle hardest vertices first: fewest attachment options
    v2_order = sorted(v2, key=lambda v: ((G.adj[v] & ~v1_mask).bit_count(), v))

    def feasible(c_budget: int) -> list[tuple[int, int]] | None:
        demand = {v: r - 1 for v in v2}
        cap_left = dict(caps)
        chosen: list[tuple[int, int]] = []
        cross_used = 0

        def rec(i: int) -> bool:
            nonlocal cross_used
            if i == len(v2_order):
                return True
            v = v2_order[i]
            d = demand[v]
            if d == 0:
                return rec(i + 1)
            later = [w for w in v2_order[i + 1:] if (G.adj[v] >> w) & 1 and demand[w] > 0]
            cross = [u for u in v1 if (G.adj[v] >> u) & 1 and cap_left[u] > 0]
            options = later + cross
            if len(options) < d:
                return False
            for combo in itertools.combinations(options, d):
                used = sum(1 for x in combo if (v1_mask >> x) & 1)
                if cross_used + used > c_budget:
                    continue
                for x in combo:
                    if (v1_mask >> x) & 1:
                        cap_left[x] -= 1
                    else:
                        demand[x] -= 1
                    chosen.append((min(v, x), max(v, x)))
                demand[v] = 0
                cross_used += used
                if rec(i + 1):
                    return True
                cross_used -= used
                demand[v] = d
                for x in combo:
                    if (v1_mask >> x) & 1:
                        cap_left[x] += 1
                    else:
                        demand[x] += 1
                    chosen.pop()
            return False

        if rec(0):
            return chosen
        return None

    c = c0
    while c <= c_cap:
        got = feasible(c)
        if got is not None:
            H = make_graph(G.n, base_edges + got)
            cross = sum(
                1 for u, v in got if ((v1_mask >> u) & 1) != ((v1_mask >> v) & 1)
            )
            return cross, H
        c += 2
    return None


def sat_exact_structured(G: Graph, r: int) -> SatResult:
    """Exact sat(G, K_{1,r}) minimizing over low-degree class choices.

    Any saturated H splits into the class v1 of degree <= r-2 (which keeps
    every host edge among its vertices) and the saturated rest, so
    sat = min over valid v1 of e(G[v1]) + ((r-1)(n-|v1|) + c_min(v1)) / 2.
    Candidates are enumerated in decreasing score (r-1)|v1| - 2 e(G[v1]),
    stopping as soon as the remaining scores cannot beat the incumbent.
    Candidate enumeration is exponential in n; practical to n ~ 16.
    """
    if r < 2:
        raise ValueError("star size must be at least 2")
    n = G.n
    if n == 0:
        H = make_graph(0, [])
        return SatResult(0, SaturatedSubgraph(H, (), (), 0, 0), "structured", True)

    candidates: list[tuple[int, int, int]] = []  # (score2, edges, mask)
    degs = [0] * n

    def gen(v: int, mask: int, edges: int) -> None:
        if v == n:
            candidates.append(((r - 1) * mask.bit_count() - 2 * edges, edges, mask))
            return
        gen(v + 1, mask, edges)
        row = G.adj[v] & mask
        add = row.bit_count()
        if add <= r - 2 and all(degs[u] + 1 <= r - 2 for u in bits_of(row)):
            for u in bits_of(row):
                degs[u] += 1
            degs[v] = add
            gen(v + 1, mask | (1 << v), edges + add)
            degs[v] = 0
            for u in bits_of(row):
                degs[u] -= 1

    gen(0, 0, 0)
    candidates.sort(key=lambda t: (-t[0], t[2]))

    best_total2: int | None = None
    best_H: Graph | None = None
    for score2, edges, mask in candidates:
        floor_total2 = (r - 1) * n - score2  # doubled edge count at c = 0
        if best_total2 is not None and floor_total2 >= best_total2:
            break
        got = min_completion(G, list(bits_of(mask)), r)
        if got is None:
            continue
        c, H = got
        total2 = floor_total2 + c
        if best_total2 is None or total2 < best_total2:
            best_total2 = total2
            best_H = H
    assert best_H is not None, "no saturated subgraph found: solver bug"
    witness = SaturatedSubgraph.from_subgraph(G, best_H, r)
    assert best_total2 is not None and best_total2 % 2 == 0
    assert witness.edge_count == best_total2 // 2
    return SatResult(best_H.m, witness, "structured", True)


@dataclass(frozen=True)
class Lemma1Report:
    """Outcome of the sparse-subset lower-bound check.

    ok is False iff some k-set with fewer than (r-1)(k-x0)/2 + mu edges
    was found; counterexample then holds (k, vertices, edges).  The range
    [k_lo, k_hi] was resolved exhaustively; tail_certified marks that all
    k > k_hi up to n are covered analytically as well, making the report
    complete.
    """

    ok: bool
    counterexample: tuple[int, tuple[int, ...], int] | None
    k_lo: int
    k_hi: int
    tail_certified: bool

    @property
    def full(self) -> bool:
        return self.ok and self.tail_certified


# largest at-most-e budget the lemma check will compute on its own
_PROFILE_AUTO_CAP = 4


def check_lemma1(
    G: Graph,
    x0: int,
    r: int,
    mu: int,
    k_max: int | None = None,
    profile: dict[int, "SparseSetResult"] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> Lemma1Report:
    """Verify that no k-set induces fewer than (r-1)(k-x0)/2 + mu edges,
    for k = x0+1 .. k_max (default x0+20, clamped to n).

    Thresholds are half-integers handled in doubled arithmetic; strict
    "fewer than" becomes edges <= cap_k := ceil(threshold) - 1.  Each k is
    resolved by the cheapest available route before any direct search:

      * exact: a completed at-most-cap_k optimum f says whether f >= k;
      * peeling: a k-set with <= cap_k edges loses one edge per deleted
        endpoint, so it contains a (k - cap_k + e)-set with <= e edges;
        a known f(e) < k - cap_k + e rules it out;
      * otherwise sparse_set_decision runs for that k.

    The at-most-e optima are taken from the caller-supplied profile (as
    returned by max_sparse_set in at_most mode) and extended lazily up to
    budget e = 4.  Beyond k_max the same peeling rule plus the Turan-type
    bound e(S) >= k(k-x0)/(2 x0) (valid once alpha <= x0 is established)
    certify the tail; if neither applies the report is partial.
    """
    if x0 < 1:
        raise ValueError("x0 must be at least 1")
    if r < 2:
        raise ValueError("star size must be at least 2")
    prof: dict[int, SparseSetResult] = dict(profile) if profile else {}
    k_lo = x0 + 1
    k_hi = min(G.n, x0 + 20 if k_max is None else k_max)

    def cap_of(k: int) -> int:
        return ceil_half((r - 1) * (k - x0) + 2 * mu) - 1

    def peel_covered(k: int, cap: int) -> bool:
        return any(
            e <= cap and res.exact and res.size < k - cap + e
            for e, res in prof.items()
        )

    for k in range(k_lo, k_hi + 1):
        cap = cap_of(k)
        if cap < 0:
            continue
        while True:
            hit = prof.get(cap)
            if hit is not None and hit.exact:
                if hit.size >= k:
                    sub = hit.vertices[:k]
                    found = induced_edge_count_mask(G, mask_of(sub))
                    return Lemma1Report(False, (k, sub, found), k_lo, k_hi, False)
                break
            if peel_covered(k, cap):
                break
            e_next = next(
                (e for e in range(min(cap, _PROFILE_AUTO_CAP) + 1) if e not in prof),
                None,
            )
            if e_next is not None:
                prof[e_next] = max_sparse_set(G, e_next, "at_most", budget)
                continue
            witness = sparse_set_decision(G, k, cap + 1)
            if witness is not None:
                found = induced_edge_count_mask(G, mask_of(witness))
                return Lemma1Report(False, (k, witness, found), k_lo, k_hi, False)
            break

    if k_lo > G.n:
        return Lemma1Report(True, None, k_lo, k_hi, True)
    # alpha <= x0 holds: either measured, or k_lo passed with threshold >= 1
    alpha_bounded = (0 in prof and prof[0].exact and prof[0].size <= x0) or k_lo <= k_hi
    tail_ok = True
    for k in range(k_hi + 1, G.n + 1):
        cap = cap_of(k)
        if cap < 0 or peel_covered(k, cap):
            continue
        if alpha_bounded and k * (k - x0) >= x0 * ((r - 1) * (k - x0) + 2 * mu):
            continue
        tail_ok = False
        break
    return Lemma1Report(True, None, k_lo, k_hi, tail_ok)


def _embeds_through(n: int, H_adj: list[int], F: Graph, u: int, v: int) -> bool:
    """True when the graph given by H_adj contains a copy of F (subgraph
    embedding) that uses the edge {u,v}.  Brute-force backtracking over
    injections; intended for tiny n and F."""
    f_edges = F.edges()
    full = (1 << n) - 1

    def extend(order: list[int], nbrs_before: list[list[int]], image: list[int], used: int, i: int) -> bool:
        if i == len(order):
            return True
        cands = full & ~used
        for j in nbrs_before[i]:
            cands &= H_adj[image[j]]
        while cands:
            low = cands & -cands
            x = low.bit_length() - 1
            image.append(x)
            if extend(order, nbrs_before, image, used | low, i + 1):
                return True
            image.pop()
            cands ^= low
        return False

    for a, b in f_edges:
        for fa, fb in ((a, b), (b, a)):
            order = [fa, fb] + sorted(
                set(range(F.n)) - {fa, fb}, key=lambda x: -F.degree(x)
            )
            index = {x: i for i, x in enumerate(order)}
            nbrs_before = [
                [index[w] for w in F.neighbors(x) if index[w] < i]
                for i, x in enumerate(order)
            ]
            if extend(order, nbrs_before, [u, v], (1 << u) | (1 << v), 2):
                return True
    return False


def contains_copy(H: Graph, F: Graph) -> bool:
    """True when H contains F as a subgraph (F must have an edge)."""
    if F.m == 0:
        raise ValueError("pattern must have at least one edge")
    adj = list(H.adj)
    return any(_embeds_through(H.n, adj, F, u, v) for u, v in H.edges())


def _copies_through(G: Graph, F: Graph, u: int, v: int, eidx: dict) -> list[int]:
    """Edge sets of every F-copy in G using the host edge {u,v}, encoded as
    bitmasks over host-edge indexes with the {u,v} bit left out.  Found by
    brute-force backtracking over injective embeddings."""
    n = G.n
    f_edges = F.edges()
    found: set[int] = set()
    pair = (u, v) if u < v else (v, u)

    for a, b in f_edges:
        for fa, fb in ((a, b), (b, a)):
            order = [fa, fb] + sorted(set(range(F.n)) - {fa, fb})
            index = {x: j for j, x in enumerate(order)}
            nbrs_before = [
                [index[w] for w in F.neighbors(x) if index[w] < j]
                for j, x in enumerate(order)
            ]
            image = [u, v]

            def ext(j: int, used: int) -> None:
                if j == len(order):
                    mask = 0
                    for x, y in f_edges:
                        gu, gv = image[index[x]], image[index[y]]
                        e = (gu, gv) if gu < gv else (gv, gu)
                        if e != pair:
                            mask |= 1 << eidx[e]
                    found.add(mask)
                    return
                cands = ((1 << n) - 1) & ~used
                for w in nbrs_before[j]:
                    cands &= G.adj[image[w]]
                while cands:
                    low = cands & -cands
                    image.append(low.bit_length() - 1)
                    ext(j + 1, used | low)
                    image.pop()
                    cands ^= low

            ext(2, (1 << u) | (1 << v))
    return sorted(found)


def sat_oracle_generic(G: Graph, F: Graph) -> GenericSatResult:
    """Exact sat(G, F) for tiny patterns by edge-subset branching with
    brute-force subgraph-embedding tests; validation only.

    A spanning H qualifies when it is F-free and every missing host edge
    would create an F-copy.  All F-copies through each host edge are
    enumerated up front by the embedding search, so during branching both
    the F-freeness and the coverage tests are subset checks on edge masks.
    """
    if G.n > GENERIC_CAP_N:
        raise ValueError(f"generic oracle is capped at n <= {GENERIC_CAP_N}")
    if F.n > GENERIC_CAP_F:
        raise ValueError(f"pattern is capped at |V(F)| <= {GENERIC_CAP_F}")
    if F.m == 0:
        raise ValueError("pattern must have at least one edge")

    n = G.n
    edges = G.edges()
    m_host = len(edges)
    eidx = {e: i for i, e in enumerate(edges)}
    host_mask = (1 << m_host) - 1
    # both endpoints of a coverable missing edge need final degree >= dmin-1
    dmin = min(min(F.degree(a), F.degree(b)) for a, b in F.edges())
    f_size = F.n

    copies = [_copies_through(G, F, u, v, eidx) for u, v in edges]

    def covered(i: int, avail: int) -> bool:
        for req in copies[i]:
            if req & ~avail == 0:
                return True
        return False

    best: int | None = None
    best_idx: list[int] | None = None

    # greedy incumbents: one-pass maximal F-free subgraphs
    for order in (range(m_host), range(m_host - 1, -1, -1)):
        h = 0
        taken = []
        for i in order:
            if not covered(i, h):
                h |= 1 << i
                taken.append(i)
        if best is None or len(taken) < best:
            best = len(taken)
            best_idx = taken

    H_mask = 0
    excl_mask = 0
    deg = [0] * n
    undec = [0] * n
    for u, v in edges:
        undec[u] += 1
        undec[v] += 1
    n_included = 0
    uncovered: list[int] = []

    def lower_bound() -> int:
        if not uncovered or dmin < 2:
            return 0
        touched = 0
        for i in uncovered:
            a, b = edges[i]
            touched |= (1 << a) | (1 << b)
        need = 0
        for w in bits_of(touched):
            if deg[w] < dmin - 1:
                need += (dmin - 1) - deg[w]
        return (need + 1) // 2

    def rec(idx: int) -> None:
        nonlocal best, best_idx, H_mask, excl_mask, n_included
        assert best is not None
        if n_included + lower_bound() >= best:
            return
        if idx == m_host:
            if not uncovered:
                best = n_included
                best_idx = [i for i in range(m_host) if (H_mask >> i) & 1]
            return
        u, v = edges[idx]
        bit = 1 << idx
        undec[u] -= 1
        undec[v] -= 1
        # exclude branch: viable only if the edge can still be covered
        if deg[u] + undec[u] >= dmin - 1 and deg[v] + undec[v] >= dmin - 1:
            excl_mask |= bit
            if covered(idx, host_mask & ~excl_mask):
                fresh = not covered(idx, H_mask)
                if fresh:
                    uncovered.append(idx)
                rec(idx + 1)
                if fresh:
                    # deeper frames reorder the list; remove by value
                    uncovered.remove(idx)
            excl_mask ^= bit
        # include branch: H + e must stay F-free
        if not covered(idx, H_mask):
            H_mask |= bit
            deg[u] += 1
            deg[v] += 1
            n_included += 1
            # a new copy through e must use the new edge, so all four
            # endpoints lie inside one copy: skip edges too far away
            newly = [
                j for j in uncovered
                if len({edges[j][0], edges[j][1], u, v}) <= f_size
                and covered(j, H_mask)
            ]
            for j in newly:
                uncovered.remove(j)
            rec(idx + 1)
            uncovered.extend(newly)
            n_included -= 1
            deg[u] -= 1
            deg[v] -= 1
            H_mask ^= bit
        undec[u] += 1
        undec[v] += 1

    rec(0)
    assert best is not None and best_idx is not None
    H = make_graph(n, [edges[i] for i in best_idx])
    # independent recheck using the embedding test directly
    assert not contains_copy(H, F)
    for u, v in G.edges():
        if not H.has_edge(u, v):
            trial = list(H.adj)
            trial[u] |= 1 << v
            trial[v] |= 1 << u
            assert _embeds_through(n, trial, F, u, v), "witness is not maximal"
    return GenericSatResult(best, H, True)
