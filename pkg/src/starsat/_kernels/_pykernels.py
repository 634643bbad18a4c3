"""Pure-Python subset-search kernels over bitset adjacency.

These are the hot inner loops of the package: branch-and-bound for maximum
vertex sets inducing few edges, fixed-size decision searches, and exact
subset counting.  starsat._kernels._cykernels implements the same four
functions with identical search order, pruning, and tie-breaking; results
must agree bit for bit, and the test suite enforces that.

Conventions shared by both backends:
  * adjacency is a sequence of n Python ints, bit j of adj[v] set iff {v,j}
    is an edge;
  * vertex sets are returned as ascending tuples of original vertex ids;
  * "budget" counts search-tree nodes; a negative budget means unlimited;
  * the maximum-set search branches greedy-cover-class-first (classes built
    over the caller's vertex order), visiting every optimal set, so ties
    are resolved to the lexicographically smallest witness;
  * decision searches branch in ascending vertex order and try inclusion
    first, so the first witness found is the lexicographically smallest.

The shared pruning bound: a greedy clique cover of the candidates with t
classes admits at most t + extras more vertices, where extras counts the
cheapest within-clique repeats affordable with the remaining edge budget
(the j-th extra member of one clique costs j new edges).
"""

from __future__ import annotations

import sys


class _Budget(Exception):
    """Internal unwind when the node budget is exhausted."""


def _cover_extras(rem: int, ge: list[int]) -> int:
    """Greedy count of affordable extra picks: ge[w] cliques can supply an
    extra member at marginal cost w (their (w+1)-th vertex)."""
    extras = 0
    left = rem
    for w in range(1, rem + 1):
        if left < w:
            break
        take = min(ge[w], left // w)
        extras += take
        left -= take * w
    return extras


def max_sparse_set_at_most(
    n: int,
    adj: list[int],
    m: int,
    order: list[int],
    budget: int,
) -> tuple[int, list[tuple[int, ...] | None], list[tuple[int, tuple[int, ...]] | None], int, bool]:
    """Maximum-size vertex sets inducing at most m edges.

    Per node, candidates are covered by greedy cliques (grown in the
    caller-supplied vertex order) and branched in descending class index;
    a node survives only while chosen + class(v) + extras can still reach
    the incumbent, which keeps every maximum-size set reachable.

    Returns (best_size, at_best, seen, nodes, completed) where
    at_best[e] is the lexicographically smallest best-size set inducing
    exactly e edges (None if that count is not attained at the maximum),
    and seen[e] is a loosely tracked (size, witness) of the largest set
    with exactly e edges encountered anywhere in the tree.
    """
    if n == 0:
        return 0, [() if e == 0 else None for e in range(m + 1)], \
            [(0, ()) if e == 0 else None for e in range(m + 1)], 1, True
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    radj = [0] * n
    for v in range(n):
        row = adj[v]
        acc = 0
        while row:
            low = row & -row
            acc |= 1 << pos[low.bit_length() - 1]
            row ^= low
        radj[pos[v]] = acc

    best_size = -1
    at_best: list[tuple[int, ...] | None] = [None] * (m + 1)
    seen: list[tuple[int, tuple[int, ...]] | None] = [None] * (m + 1)
    nodes = 0
    chosen: list[int] = []
    cost = [0] * n

    def witness() -> tuple[int, ...]:
        return tuple(sorted(order[i] for i in chosen))

    def record(edges: int) -> None:
        nonlocal best_size
        size = len(chosen)
        if size > best_size:
            best_size = size
            for e in range(m + 1):
                at_best[e] = None
            at_best[edges] = witness()
        elif size == best_size:
            w = witness()
            cur = at_best[edges]
            if cur is None or w < cur:
                at_best[edges] = w
        prev = seen[edges]
        if prev is None or size > prev[0]:
            seen[edges] = (size, witness())

    def max_addable(cand: int, edges: int) -> int:
        # counting-sort bound: greedily admit candidates by ascending cost
        rem = m - edges
        if rem == 0:
            return cand.bit_count()
        hist = [0] * (rem + 1)
        c = cand
        while c:
            low = c & -c
            hist[cost[low.bit_length() - 1]] += 1
            c ^= low
        take = hist[0]
        left = rem
        for w in range(1, rem + 1):
            if left < w:
                break
            t = min(hist[w], left // w)
            take += t
            left -= t * w
        return take

    def cover(cand: int, rem: int) -> tuple[list[int], list[int], int]:
        """Greedy clique classes; returns (branch order: descending class,
        class index per position, extras)."""
        cls = [0] * n
        by_class: list[list[int]] = []
        ge = [0] * (rem + 2)
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            members = [v]
            avail = radj[v] & rest
            while avail:
                ul = avail & -avail
                u = ul.bit_length() - 1
                rest ^= ul
                members.append(u)
                avail &= radj[u]
            idx = len(by_class) + 1
            for u in members:
                cls[u] = idx
            by_class.append(members)
            size = len(members)
            for w in range(1, min(size - 1, rem) + 1):
                ge[w] += 1
        branch: list[int] = []
        for members in reversed(by_class):
            branch.extend(members)
        return branch, cls, _cover_extras(rem, ge)

    def rec(cand: int, edges: int) -> None:
        nonlocal nodes
        nodes += 1
        if 0 <= budget < nodes:
            raise _Budget
        record(edges)
        if not cand:
            return
        if len(chosen) + max_addable(cand, edges) < best_size:
            return
        rem = m - edges
        branch, cls, extras = cover(cand, rem)
        for v in branch:
            if len(chosen) + cls[v] + extras < best_size:
                return
            # include v
            new_edges = edges + cost[v]
            cand ^= 1 << v
            sub = cand
            if m == 0:
                new_cand = sub & ~radj[v]
                touched: list[int] = []
            else:
                touched = []
                nbrs = radj[v] & sub
                while nbrs:
                    nl = nbrs & -nbrs
                    u = nl.bit_length() - 1
                    touched.append(u)
                    cost[u] += 1
                    nbrs ^= nl
                new_cand = 0
                rest = sub
                while rest:
                    nl = rest & -rest
                    u = nl.bit_length() - 1
                    if new_edges + cost[u] <= m:
                        new_cand |= nl
                    rest ^= nl
            chosen.append(v)
            rec(new_cand, new_edges)
            chosen.pop()
            for u in touched:
                cost[u] -= 1

    completed = True
    try:
        rec((1 << n) - 1, 0)
    except _Budget:
        completed = False
    return best_size, at_best, seen, nodes, completed


def find_set_with_edges(
    n: int,
    adj: list[int],
    k: int,
    m: int,
    budget: int,
) -> tuple[tuple[int, ...] | None, int, bool]:
    """Lexicographically smallest k-vertex set inducing exactly m edges.

    Complete first-hit search in ascending vertex order; prunes on the
    remaining-size bound, on the sum of the k - |chosen| smallest costs,
    on the cover-class bound, and on the total edge potential of
    chosen + candidates falling short of m.
    """
    if k == 0:
        return ((), 1, True) if m == 0 else (None, 1, True)
    if k > n or m > k * (k - 1) // 2:
        return None, 0, True
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    nodes = 0
    chosen: list[int] = []
    cost = [0] * n

    def cheapest_sum(cand: int, t: int) -> int:
        hist = [0] * (m + 1)
        c = cand
        while c:
            low = c & -c
            hist[cost[low.bit_length() - 1]] += 1
            c ^= low
        total = 0
        need = t
        for w in range(m + 1):
            take = min(hist[w], need)
            total += take * w
            need -= take
            if need == 0:
                break
        return total

    def cover_take(cand: int, rem: int) -> int:
        t = 0
        ge = [0] * (rem + 2)
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            size = 1
            avail = adj[low.bit_length() - 1] & rest
            while avail:
                ul = avail & -avail
                rest ^= ul
                size += 1
                avail &= adj[ul.bit_length() - 1]
            t += 1
            for w in range(1, min(size - 1, rem) + 1):
                ge[w] += 1
        return t + _cover_extras(rem, ge)

    def potential(cand: int, edges: int) -> int:
        # edges(chosen + cand) = edges + costs into chosen + edges inside cand
        extra = 0
        inside = 0
        c = cand
        while c:
            low = c & -c
            u = low.bit_length() - 1
            extra += cost[u]
            inside += (adj[u] & cand).bit_count()
            c ^= low
        return edges + extra + inside // 2

    def rec(cand: int, edges: int) -> tuple[int, ...] | None:
        nonlocal nodes
        nodes += 1
        if 0 <= budget < nodes:
            raise _Budget
        if len(chosen) == k:
            return tuple(chosen) if edges == m else None
        t = k - len(chosen)
        if cand.bit_count() < t:
            return None
        if edges + cheapest_sum(cand, t) > m:
            return None
        if len(chosen) + cover_take(cand, m - edges) < k:
            return None
        if edges < m and potential(cand, edges) < m:
            return None
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            new_edges = edges + cost[v]
            sub = cand ^ low
            touched = []
            nbrs = adj[v] & sub
            while nbrs:
                nl = nbrs & -nbrs
                u = nl.bit_length() - 1
                touched.append(u)
                cost[u] += 1
                nbrs ^= nl
            new_cand = 0
            rest = sub
            while rest:
                nl = rest & -rest
                u = nl.bit_length() - 1
                if new_edges + cost[u] <= m:
                    new_cand |= nl
                rest ^= nl
            chosen.append(v)
            got = rec(new_cand, new_edges)
            if got is not None:
                return got
            chosen.pop()
            for u in touched:
                cost[u] -= 1
            cand ^= low
            if cand.bit_count() < t:
                return None
        return None

    completed = True
    out: tuple[int, ...] | None = None
    try:
        out = rec((1 << n) - 1, 0)
    except _Budget:
        completed = False
    return out, nodes, completed


def find_sparse_kset(
    n: int,
    adj: list[int],
    k: int,
    cap: int,
) -> tuple[int, ...] | None:
    """Lexicographically smallest k-vertex set inducing at most cap edges,
    or None when every k-set induces more.  Complete search, no budget."""
    if cap < 0 or k > n:
        return None
    if k == 0:
        return ()
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    chosen: list[int] = []
    cost = [0] * n

    def cheapest_sum(cand: int, t: int) -> int:
        hist = [0] * (cap + 1)
        c = cand
        while c:
            low = c & -c
            hist[cost[low.bit_length() - 1]] += 1
            c ^= low
        total = 0
        need = t
        for w in range(cap + 1):
            take = min(hist[w], need)
            total += take * w
            need -= take
            if need == 0:
                break
        return total

    def cover_take(cand: int, rem: int) -> int:
        t = 0
        ge = [0] * (rem + 2)
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            size = 1
            avail = adj[low.bit_length() - 1] & rest
            while avail:
                ul = avail & -avail
                rest ^= ul
                size += 1
                avail &= adj[ul.bit_length() - 1]
            t += 1
            for w in range(1, min(size - 1, rem) + 1):
                ge[w] += 1
        return t + _cover_extras(rem, ge)

    def rec(cand: int, edges: int) -> tuple[int, ...] | None:
        if len(chosen) == k:
            return tuple(chosen)
        t = k - len(chosen)
        if cand.bit_count() < t:
            return None
        if edges + cheapest_sum(cand, t) > cap:
            return None
        if len(chosen) + cover_take(cand, cap - edges) < k:
            return None
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            new_edges = edges + cost[v]
            sub = cand ^ low
            touched = []
            nbrs = adj[v] & sub
            while nbrs:
                nl = nbrs & -nbrs
                u = nl.bit_length() - 1
                touched.append(u)
                cost[u] += 1
                nbrs ^= nl
            new_cand = 0
            rest = sub
            while rest:
                nl = rest & -rest
                u = nl.bit_length() - 1
                if new_edges + cost[u] <= cap:
                    new_cand |= nl
                rest ^= nl
            chosen.append(v)
            got = rec(new_cand, new_edges)
            if got is not None:
                return got
            chosen.pop()
            for u in touched:
                cost[u] -= 1
            cand ^= low
            if cand.bit_count() < t:
                return None
        return None

    return rec((1 << n) - 1, 0)


def count_ksets_with_edges(n: int, adj: list[int], k: int, m: int) -> int:
    """Exact number of k-vertex sets inducing exactly m edges."""
    if k > n or m > k * (k - 1) // 2:
        return 0
    if k == 0:
        return 1 if m == 0 else 0

    count = 0
    chosen_mask = 0

    def rec(start: int, depth: int, edges: int) -> None:
        nonlocal count, chosen_mask
        if depth == k:
            if edges == m:
                count += 1
            return
        need = k - depth
        for v in range(start, n - need + 1):
            e = edges + (adj[v] & chosen_mask).bit_count()
            if e > m:
                continue
            chosen_mask |= 1 << v
            rec(v + 1, depth + 1, e)
            chosen_mask ^= 1 << v

    rec(0, 0, 0)
    return count
