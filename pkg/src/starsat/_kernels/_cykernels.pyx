# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-search kernels.

Line-for-line mirror of starsat._kernels._pykernels: identical search
order, pruning, tie-breaking, and node accounting, so both backends return
bit-identical results (enforced by the test suite).  Bitsets live in flat
uint64 word arrays instead of Python ints.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef extern from *:
    """
    #define POPCNT64(x) __builtin_popcountll((unsigned long long)(x))
    #define CTZ64(x) __builtin_ctzll((unsigned long long)(x))
    """
    int POPCNT64(unsigned long long x) nogil
    int CTZ64(unsigned long long x) nogil

ctypedef unsigned long long u64


cdef inline int _first_bit(u64* a, int W) nogil:
    cdef int w
    for w in range(W):
        if a[w]:
            return 64 * w + CTZ64(a[w])
    return -1


cdef inline int _popcount(u64* a, int W) nogil:
    cdef int w, total = 0
    for w in range(W):
        total += POPCNT64(a[w])
    return total


cdef inline long long _popcount_and(u64* a, u64* b, int W) nogil:
    cdef int w
    cdef long long total = 0
    for w in range(W):
        total += POPCNT64(a[w] & b[w])
    return total


cdef inline bint _test_bit(u64* a, int v) nogil:
    return (a[v >> 6] >> (v & 63)) & 1


cdef inline void _clear_bit(u64* a, int v) nogil:
    a[v >> 6] &= ~((<u64>1) << (v & 63))


cdef inline int _cover_extras(int rem, int* ge) nogil:
    cdef int extras = 0, left = rem, w, take
    for w in range(1, rem + 1):
        if left < w:
            break
        take = ge[w]
        if take > left // w:
            take = left // w
        extras += take
        left -= take * w
    return extras


cdef u64* _pack_adj(int n, int W, object adj_rows, object relabel) except NULL:
    """Pack Python-int adjacency rows into a flat n*W word array.

    relabel is None (identity) or the processing order: the row of vertex
    order[i] lands at slot i with neighbor bits renumbered to positions.
    """
    cdef u64* out = <u64*> malloc(n * W * sizeof(u64) if n * W else sizeof(u64))
    if out == NULL:
        raise MemoryError
    memset(out, 0, n * W * sizeof(u64) if n * W else sizeof(u64))
    cdef int v, i, w
    cdef object row, srow, low
    cdef list pos
    if relabel is None:
        for v in range(n):
            row = adj_rows[v]
            for w in range(W):
                out[v * W + w] = <u64> ((row >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
    else:
        pos = [0] * n
        for i in range(n):
            pos[relabel[i]] = i
        for v in range(n):
            row = 0
            srow = adj_rows[v]
            while srow:
                low = srow & -srow
                row |= 1 << pos[(low.bit_length() - 1)]
                srow ^= low
            i = pos[v]
            for w in range(W):
                out[i * W + w] = <u64> ((row >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
    return out


cdef class _AtMost:
    cdef int n, W, m, best_size, nchosen
    cdef long long budget, nodes
    cdef bint completed
    cdef u64* radj
    cdef u64* cand_st
    cdef u64* scratch
    cdef int* cost
    cdef int* touched
    cdef int* ntouched
    cdef int* chosen
    cdef int* hist
    cdef int* branch_st
    cdef int* cls_st
    cdef int* ge
    cdef list order
    cdef list at_best
    cdef list seen

    def __cinit__(self, int n, object adj, int m, object order, long long budget):
        cdef int L = n + 2
        self.n = n
        self.W = (n + 63) >> 6
        self.m = m
        self.budget = budget
        self.nodes = 0
        self.completed = True
        self.best_size = -1
        self.nchosen = 0
        self.order = list(order)
        self.at_best = [None] * (m + 1)
        self.seen = [None] * (m + 1)
        self.radj = _pack_adj(n, self.W, adj, self.order)
        self.cand_st = <u64*> malloc(L * self.W * sizeof(u64))
        self.scratch = <u64*> malloc(2 * self.W * sizeof(u64))
        self.cost = <int*> malloc(n * sizeof(int))
        self.touched = <int*> malloc(L * n * sizeof(int))
        self.ntouched = <int*> malloc(L * sizeof(int))
        self.chosen = <int*> malloc(n * sizeof(int))
        self.hist = <int*> malloc((m + 2) * sizeof(int))
        self.branch_st = <int*> malloc(L * n * sizeof(int))
        self.cls_st = <int*> malloc(L * n * sizeof(int))
        self.ge = <int*> malloc((m + 2) * sizeof(int))
        if (self.cand_st == NULL or self.scratch == NULL or self.cost == NULL
                or self.touched == NULL or self.ntouched == NULL
                or self.chosen == NULL or self.hist == NULL
                or self.branch_st == NULL or self.cls_st == NULL
                or self.ge == NULL):
            raise MemoryError
        memset(self.cost, 0, n * sizeof(int))

    def __dealloc__(self):
        free(self.radj)
        free(self.cand_st)
        free(self.scratch)
        free(self.cost)
        free(self.touched)
        free(self.ntouched)
        free(self.chosen)
        free(self.hist)
        free(self.branch_st)
        free(self.cls_st)
        free(self.ge)

    cdef tuple _witness(self):
        cdef int i
        return tuple(sorted(self.order[self.chosen[i]] for i in range(self.nchosen)))

    cdef void _record(self, int edges):
        cdef int e
        cdef int size = self.nchosen
        if size > self.best_size:
            self.best_size = size
            for e in range(self.m + 1):
                self.at_best[e] = None
            self.at_best[edges] = self._witness()
        elif size == self.best_size:
            w = self._witness()
            if self.at_best[edges] is None or w < self.at_best[edges]:
                self.at_best[edges] = w
        prev = self.seen[edges]
        if prev is None or size > prev[0]:
            self.seen[edges] = (size, self._witness())

    cdef int _max_addable(self, u64* cand, int edges) nogil:
        cdef int rem = self.m - edges
        cdef int w, v, take, t, left
        cdef u64 word
        if rem == 0:
            return _popcount(cand, self.W)
        for w in range(rem + 1):
            self.hist[w] = 0
        for w in range(self.W):
            word = cand[w]
            while word:
                v = 64 * w + CTZ64(word)
                self.hist[self.cost[v]] += 1
                word &= word - 1
        take = self.hist[0]
        left = rem
        for w in range(1, rem + 1):
            if left < w:
                break
            t = self.hist[w]
            if t > left // w:
                t = left // w
            take += t
            left -= t * w
        return take

    cdef int _cover(self, int level, u64* cand, int rem, int* extras_out) nogil:
        """Greedy clique classes over cand; fills branch_st[level] with the
        candidates in descending class order (members of one class keep
        discovery order) and cls_st[level] with class indexes.  Returns the
        candidate count; *extras_out gets the budget extras."""
        cdef u64* rest = self.scratch
        cdef u64* avail = self.scratch + self.W
        cdef int* tmp = self.touched + (self.n + 1) * self.n  # spare row
        cdef int* branch = self.branch_st + level * self.n
        cdef int* cls = self.cls_st + level * self.n
        cdef int w, v, u, idx = 0, total = 0, size, i, k, start
        for w in range(rem + 2):
            self.ge[w] = 0
        for w in range(self.W):
            rest[w] = cand[w]
        while True:
            v = _first_bit(rest, self.W)
            if v < 0:
                break
            idx += 1
            _clear_bit(rest, v)
            tmp[total] = v
            cls[v] = idx
            total += 1
            size = 1
            for w in range(self.W):
                avail[w] = self.radj[v * self.W + w] & rest[w]
            while True:
                u = _first_bit(avail, self.W)
                if u < 0:
                    break
                _clear_bit(rest, u)
                tmp[total] = u
                cls[u] = idx
                total += 1
                size += 1
                for w in range(self.W):
                    avail[w] &= self.radj[u * self.W + w]
            w = size - 1
            if w > rem:
                w = rem
            for u in range(1, w + 1):
                self.ge[u] += 1
        # copy class blocks back to front: descending class order
        k = 0
        i = total - 1
        while i >= 0:
            start = i
            while start > 0 and cls[tmp[start - 1]] == cls[tmp[i]]:
                start -= 1
            for w in range(start, i + 1):
                branch[k] = tmp[w]
                k += 1
            i = start - 1
        extras_out[0] = _cover_extras(rem, self.ge)
        return total

    cdef int _rec(self, int level, int edges):
        """Returns 0 normally, 1 when the budget is exhausted."""
        cdef u64* cand = self.cand_st + level * self.W
        cdef u64* child = self.cand_st + (level + 1) * self.W
        cdef int* branch = self.branch_st + level * self.n
        cdef int* cls = self.cls_st + level * self.n
        cdef int v, u, w, new_edges, nt, i, ncand, extras
        cdef int rem = self.m - edges
        cdef u64 word
        self.nodes += 1
        if 0 <= self.budget < self.nodes:
            self.completed = False
            return 1
        self._record(edges)
        if _first_bit(cand, self.W) < 0:
            return 0
        if self.nchosen + self._max_addable(cand, edges) < self.best_size:
            return 0
        ncand = self._cover(level, cand, rem, &extras)
        for i in range(ncand):
            v = branch[i]
            if self.nchosen + cls[v] + extras < self.best_size:
                return 0
            _clear_bit(cand, v)
            new_edges = edges + self.cost[v]
            nt = 0
            if self.m == 0:
                for w in range(self.W):
                    child[w] = cand[w] & ~self.radj[v * self.W + w]
            else:
                for w in range(self.W):
                    word = self.radj[v * self.W + w] & cand[w]
                    while word:
                        u = 64 * w + CTZ64(word)
                        self.touched[level * self.n + nt] = u
                        nt += 1
                        self.cost[u] += 1
                        word &= word - 1
                # re-filter every candidate: the edge budget shrank for all
                for w in range(self.W):
                    child[w] = cand[w]
                    word = child[w]
                    while word:
                        u = 64 * w + CTZ64(word)
                        if new_edges + self.cost[u] > self.m:
                            child[w] &= ~((<u64>1) << (u & 63))
                        word &= word - 1
            self.ntouched[level] = nt
            self.chosen[self.nchosen] = v
            self.nchosen += 1
            if self._rec(level + 1, new_edges):
                return 1
            self.nchosen -= 1
            for w in range(self.ntouched[level]):
                self.cost[self.touched[level * self.n + w]] -= 1
        return 0

    def run(self):
        cdef int w
        cdef u64* root = self.cand_st
        for w in range(self.W):
            root[w] = <u64> 0xFFFFFFFFFFFFFFFF
        if self.n & 63:
            root[self.W - 1] = ((<u64>1) << (self.n & 63)) - 1
        self._rec(0, 0)
        return self.best_size, self.at_best, self.seen, self.nodes, self.completed


def max_sparse_set_at_most(int n, adj, int m, order, long long budget):
    if n == 0:
        return 0, [() if e == 0 else None for e in range(m + 1)], \
            [(0, ()) if e == 0 else None for e in range(m + 1)], 1, True
    cdef _AtMost search = _AtMost(n, adj, m, order, budget)
    return search.run()


cdef class _FixedSize:
    """Shared state for the fixed-size decision searches (exact edge count
    or edge-count cap); branches in ascending original vertex order."""

    cdef int n, W, k, target, cap, nchosen
    cdef bint exact_mode, completed
    cdef long long budget, nodes
    cdef u64* adj
    cdef u64* cand_st
    cdef u64* scratch
    cdef int* cost
    cdef int* touched
    cdef int* ntouched
    cdef int* chosen
    cdef int* hist
    cdef int* ge

    def __cinit__(self, int n, object adj, int k, int target, int cap,
                  bint exact_mode, long long budget):
        cdef int L = n + 2
        cdef int hist_size = (target if exact_mode else cap) + 2
        self.n = n
        self.W = (n + 63) >> 6
        self.k = k
        self.target = target
        self.cap = cap
        self.exact_mode = exact_mode
        self.budget = budget
        self.nodes = 0
        self.completed = True
        self.nchosen = 0
        self.adj = _pack_adj(n, self.W, adj, None)
        self.cand_st = <u64*> malloc(L * self.W * sizeof(u64))
        self.scratch = <u64*> malloc(2 * self.W * sizeof(u64))
        self.cost = <int*> malloc(n * sizeof(int))
        self.touched = <int*> malloc(L * n * sizeof(int))
        self.ntouched = <int*> malloc(L * sizeof(int))
        self.chosen = <int*> malloc(n * sizeof(int))
        self.hist = <int*> malloc(hist_size * sizeof(int))
        self.ge = <int*> malloc(hist_size * sizeof(int))
        if (self.cand_st == NULL or self.scratch == NULL or self.cost == NULL
                or self.touched == NULL or self.ntouched == NULL
                or self.chosen == NULL or self.hist == NULL or self.ge == NULL):
            raise MemoryError
        memset(self.cost, 0, n * sizeof(int))

    def __dealloc__(self):
        free(self.adj)
        free(self.cand_st)
        free(self.scratch)
        free(self.cost)
        free(self.touched)
        free(self.ntouched)
        free(self.chosen)
        free(self.hist)
        free(self.ge)

    cdef int _cheapest_sum(self, u64* cand, int t, int bound) nogil:
        cdef int w, v, total, need, take
        cdef u64 word
        for w in range(bound + 1):
            self.hist[w] = 0
        for w in range(self.W):
            word = cand[w]
            while word:
                v = 64 * w + CTZ64(word)
                self.hist[self.cost[v]] += 1
                word &= word - 1
        total = 0
        need = t
        for w in range(bound + 1):
            take = self.hist[w]
            if take > need:
                take = need
            total += take * w
            need -= take
            if need == 0:
                break
        return total

    cdef int _cover_take(self, u64* cand, int rem) nogil:
        cdef u64* rest = self.scratch
        cdef u64* avail = self.scratch + self.W
        cdef int w, v, u, t = 0, size
        for w in range(rem + 2):
            self.ge[w] = 0
        for w in range(self.W):
            rest[w] = cand[w]
        while True:
            v = _first_bit(rest, self.W)
            if v < 0:
                break
            _clear_bit(rest, v)
            size = 1
            for w in range(self.W):
                avail[w] = self.adj[v * self.W + w] & rest[w]
            while True:
                u = _first_bit(avail, self.W)
                if u < 0:
                    break
                _clear_bit(rest, u)
                size += 1
                for w in range(self.W):
                    avail[w] &= self.adj[u * self.W + w]
            t += 1
            w = size - 1
            if w > rem:
                w = rem
            for u in range(1, w + 1):
                self.ge[u] += 1
        return t + _cover_extras(rem, self.ge)

    cdef long long _potential(self, u64* cand, int edges) nogil:
        cdef int w, v
        cdef long long extra = 0, inside = 0
        cdef u64 word
        for w in range(self.W):
            word = cand[w]
            while word:
                v = 64 * w + CTZ64(word)
                extra += self.cost[v]
                inside += _popcount_and(self.adj + v * self.W, cand, self.W)
                word &= word - 1
        return edges + extra + inside // 2

    cdef object _rec(self, int level, int edges):
        cdef u64* cand = self.cand_st + level * self.W
        cdef u64* child = self.cand_st + (level + 1) * self.W
        cdef int v, u, w, new_edges, nt, t, limit
        cdef u64 word
        self.nodes += 1
        if 0 <= self.budget < self.nodes:
            self.completed = False
            return False  # sentinel for budget unwind
        if self.nchosen == self.k:
            if not self.exact_mode or edges == self.target:
                return tuple(self.chosen[w] for w in range(self.nchosen))
            return None
        t = self.k - self.nchosen
        if _popcount(cand, self.W) < t:
            return None
        limit = self.target if self.exact_mode else self.cap
        if edges + self._cheapest_sum(cand, t, limit) > limit:
            return None
        if self.nchosen + self._cover_take(cand, limit - edges) < self.k:
            return None
        if self.exact_mode and edges < self.target:
            if self._potential(cand, edges) < self.target:
                return None
        while _first_bit(cand, self.W) >= 0:
            v = _first_bit(cand, self.W)
            _clear_bit(cand, v)
            new_edges = edges + self.cost[v]
            nt = 0
            for w in range(self.W):
                word = self.adj[v * self.W + w] & cand[w]
                while word:
                    u = 64 * w + CTZ64(word)
                    self.touched[level * self.n + nt] = u
                    nt += 1
                    self.cost[u] += 1
                    word &= word - 1
            for w in range(self.W):
                child[w] = cand[w]
                word = child[w]
                while word:
                    u = 64 * w + CTZ64(word)
                    if new_edges + self.cost[u] > limit:
                        child[w] &= ~((<u64>1) << (u & 63))
                    word &= word - 1
            self.ntouched[level] = nt
            self.chosen[self.nchosen] = v
            self.nchosen += 1
            got = self._rec(level + 1, new_edges)
            if got is not None and got is not False:
                return got
            self.nchosen -= 1
            for w in range(self.ntouched[level]):
                self.cost[self.touched[level * self.n + w]] -= 1
            if got is False:
                return False
            if _popcount(cand, self.W) < t:
                return None
        return None

    def run(self):
        cdef int w
        cdef u64* root = self.cand_st
        for w in range(self.W):
            root[w] = <u64> 0xFFFFFFFFFFFFFFFF
        if self.n & 63:
            root[self.W - 1] = ((<u64>1) << (self.n & 63)) - 1
        got = self._rec(0, 0)
        if got is False:
            got = None
        return got, self.nodes, self.completed


def find_set_with_edges(int n, adj, int k, int m, long long budget):
    if k == 0:
        return ((), 1, True) if m == 0 else (None, 1, True)
    if k > n or m > k * (k - 1) // 2:
        return None, 0, True
    cdef _FixedSize search = _FixedSize(n, adj, k, m, 0, True, budget)
    return search.run()


def find_sparse_kset(int n, adj, int k, int cap):
    if cap < 0 or k > n:
        return None
    if k == 0:
        return ()
    cdef _FixedSize search = _FixedSize(n, adj, k, 0, cap, False, -1)
    got, nodes, completed = search.run()
    return got


def count_ksets_with_edges(int n, adj, int k, int m):
    if k > n or m > k * (k - 1) // 2:
        return 0
    if k == 0:
        return 1 if m == 0 else 0
    cdef int W = (n + 63) >> 6
    cdef u64* adjw = _pack_adj(n, W, adj, None)
    cdef u64* chosen = <u64*> malloc(W * sizeof(u64))
    cdef long long count = 0
    if chosen == NULL:
        free(adjw)
        raise MemoryError
    memset(chosen, 0, W * sizeof(u64))
    try:
        count = _count_rec(n, W, adjw, chosen, 0, 0, 0, k, m)
    finally:
        free(adjw)
        free(chosen)
    return count


cdef long long _count_rec(int n, int W, u64* adj, u64* chosen,
                          int start, int depth, int edges, int k, int m) nogil:
    cdef long long total = 0
    cdef int v, e
    if depth == k:
        return 1 if edges == m else 0
    for v in range(start, n - (k - depth) + 1):
        e = edges + <int> _popcount_and(adj + v * W, chosen, W)
        if e > m:
            continue
        chosen[v >> 6] |= (<u64>1) << (v & 63)
        total += _count_rec(n, W, adj, chosen, v + 1, depth + 1, e, k, m)
        chosen[v >> 6] &= ~((<u64>1) << (v & 63))
    return total
