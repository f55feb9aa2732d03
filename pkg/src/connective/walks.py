"""Exact self-avoiding walk counts on a factor and on the free product.

Vertices of the free product ``G_1 * ... * G_r`` are normal-form words: tuples
of letters ``(i, x)`` with ``i`` a 1-based factor index and ``x`` a non-root
vertex of ``G_i``, no two consecutive letters from the same factor. The empty
word is the root.

The free-product counter is a plain depth-first search over that word graph
and is deliberately unaware of the generating-function identities, so it can
serve as an independent check of them.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

from .graphs import RootedGraph

__all__ = [
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "FreeWord",
    "MAX_PRODUCT_LENGTH",
    "SawCounts",
    "check_word",
    "factor_saw_counts",
    "free_product_saw_counts",
    "product_neighbors",
]

FreeWord = tuple[tuple[int, int], ...]

DEFAULT_BUDGET = 10**9
MAX_PRODUCT_LENGTH = 25


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than the configured budget allows."""


def default_budget() -> int:
    env = os.environ.get("CONNECTIVE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class SawCounts:
    """``counts[n]`` is the exact number of n-step SAWs from the root."""

    counts: tuple[int, ...]
    exact: bool = True

    def __post_init__(self) -> None:
        if not self.counts or self.counts[0] != 1:
            raise ValueError("counts[0] must be 1 (the empty walk)")

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)


def factor_saw_counts(g: RootedGraph) -> SawCounts:
    """All SAW counts from the root of a finite graph (trailing zeros trimmed)."""
    counts = [0] * g.vertex_count
    adj = g.adjacency
    visited = [False] * g.vertex_count

    def dfs(v: int, depth: int) -> None:
        counts[depth] += 1
        visited[v] = True
        for u in adj[v]:
            if not visited[u]:
                dfs(u, depth + 1)
        visited[v] = False

    dfs(g.root, 0)
    while counts[-1] == 0:
        counts.pop()
    return SawCounts(tuple(counts))


def check_word(w: FreeWord, factors: Sequence[RootedGraph]) -> None:
    """Raise ValueError unless ``w`` is in normal form for ``factors``."""
    prev = None
    for i, x in w:
        if not 1 <= i <= len(factors):
            raise ValueError(f"factor index {i} out of range in {w}")
        g = factors[i - 1]
        if not 0 <= x < g.vertex_count or x == g.root:
            raise ValueError(f"letter ({i}, {x}) is not a non-root vertex of factor {i}")
        if i == prev:
            raise ValueError(f"consecutive letters from factor {i} in {w}")
        prev = i


def product_neighbors(w: FreeWord, factors: Sequence[RootedGraph]) -> list[FreeWord]:
    """Neighbours of the word ``w`` in the free product, sorted."""
    check_word(w, factors)
    out: list[FreeWord] = []
    last = w[-1][0] if w else None
    if w:
        i, x = w[-1]
        g = factors[i - 1]
        prefix = w[:-1]
        for y in g.adjacency[x]:
            out.append(prefix if y == g.root else prefix + ((i, y),))
    for j, g in enumerate(factors, 1):
        if j != last:
            out.extend(w + ((j, z),) for z in g.adjacency[g.root])
    return sorted(out)


def _python_counts(factors, max_len, budget, prefix):
    counts = [0] * (max_len + 1)
    visited = set(prefix)
    nodes = 0

    def dfs(w: FreeWord, depth: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"node budget {budget} exceeded")
        counts[depth] += 1
        if depth == max_len:
            return
        for u in product_neighbors(w, factors):
            if u not in visited:
                visited.add(u)
                dfs(u, depth + 1)
                visited.discard(u)

    dfs(prefix[-1], len(prefix) - 1)
    return counts


class _Alphabet:
    """Integer coding of words: letters 1..L, word = base-(L+1) digits."""

    def __init__(self, factors: Sequence[RootedGraph]):
        self.letters: list[tuple[int, int]] = []
        code = {}
        for i, g in enumerate(factors, 1):
            for x in range(g.vertex_count):
                if x != g.root:
                    code[(i, x)] = len(self.letters) + 1
                    self.letters.append((i, x))
        self.code = code
        self.base = len(self.letters) + 1
        L = self.base
        fac = np.zeros(L, np.int64)
        root_adj = np.zeros(L, np.bool_)
        rep_ptr = np.zeros(L + 1, np.int64)
        rep: list[int] = []
        for k, (i, x) in enumerate(self.letters, 1):
            g = factors[i - 1]
            fac[k] = i
            root_adj[k] = g.root in g.adjacency[x]
            rep_ptr[k] = len(rep)
            rep.extend(code[(i, y)] for y in g.adjacency[x] if y != g.root)
        rep_ptr[L] = len(rep)
        # letters with no entry (index 0) have empty ranges
        rep_ptr[0] = 0
        start_ptr = np.zeros(len(factors) + 2, np.int64)
        starts: list[int] = []
        for i, g in enumerate(factors, 1):
            start_ptr[i] = len(starts)
            starts.extend(code[(i, z)] for z in g.adjacency[g.root])
        start_ptr[len(factors) + 1] = len(starts)
        self.fac = fac
        self.root_adj = root_adj
        self.rep_ptr = rep_ptr
        self.rep = np.array(rep, np.int64)
        self.start_ptr = start_ptr
        self.starts = np.array(starts, np.int64)
        self.nfactors = len(factors)
        deg_root = len(starts)
        self.max_degree = max(
            [deg_root]
            + [
                len(factors[i - 1].adjacency[x]) + deg_root
                for (i, x) in self.letters
            ]
        )

    def encode(self, w: FreeWord) -> int:
        c = 0
        for letter in w:
            c = c * self.base + self.code[letter]
        return c

    def fits(self, length: int) -> bool:
        return self.base ** (length + 1) < 2**62


@njit(cache=True, nogil=True)
def _kernel(prefix, max_len, base, fac, root_adj, rep_ptr, rep, start_ptr, starts,
            nfactors, max_degree, budget, counts):
    """Depth-first count over integer-coded words.

    Returns the number of nodes entered, or -1 once ``budget`` is exceeded.
    """
    depth0 = prefix.shape[0] - 1
    path = np.zeros(max_len + 1, np.int64)
    for k in range(depth0 + 1):
        path[k] = prefix[k]
    nbr = np.zeros((max_len + 1, max_degree), np.int64)
    ncount = np.zeros(max_len + 1, np.int64)
    pos = np.zeros(max_len + 1, np.int64)
    nodes = 0

    depth = depth0
    entering = True
    while depth >= depth0:
        if entering:
            nodes += 1
            if nodes > budget:
                return -1
            counts[depth] += 1
            entering = False
            if depth == max_len:
                depth -= 1
                continue
            # build the neighbour list of path[depth]
            w = path[depth]
            m = 0
            last_fac = 0
            if w != 0:
                last = w % base
                prefix_code = w // base
                last_fac = fac[last]
                for k in range(rep_ptr[last], rep_ptr[last + 1]):
                    nbr[depth, m] = prefix_code * base + rep[k]
                    m += 1
                if root_adj[last]:
                    nbr[depth, m] = prefix_code
                    m += 1
            for j in range(1, nfactors + 1):
                if j != last_fac:
                    for k in range(start_ptr[j], start_ptr[j + 1]):
                        nbr[depth, m] = w * base + starts[k]
                        m += 1
            # drop visited neighbours
            keep = 0
            for a in range(m):
                c = nbr[depth, a]
                seen = False
                for b in range(depth + 1):
                    if path[b] == c:
                        seen = True
                        break
                if not seen:
                    nbr[depth, keep] = c
                    keep += 1
            if depth + 1 == max_len:
                # leaves are counted without descending
                counts[depth + 1] += keep
                nodes += keep
                depth -= 1
                continue
            ncount[depth] = keep
            pos[depth] = 0
        if pos[depth] < ncount[depth]:
            path[depth + 1] = nbr[depth, pos[depth]]
            pos[depth] += 1
            depth += 1
            entering = True
        else:
            depth -= 1
    return nodes


def _numba_counts(alpha: _Alphabet, max_len, budget, prefix):
    counts = np.zeros(max_len + 1, np.int64)
    codes = np.array([alpha.encode(w) for w in prefix], np.int64)
    nodes = _kernel(codes, max_len, alpha.base, alpha.fac, alpha.root_adj, alpha.rep_ptr,
                    alpha.rep, alpha.start_ptr, alpha.starts, alpha.nfactors,
                    alpha.max_degree, budget, counts)
    if nodes < 0:
        raise BudgetExceeded(f"node budget {budget} exceeded")
    return [int(c) for c in counts]


def free_product_saw_counts(
    factors: Sequence[RootedGraph],
    max_len: int,
    budget: int | None = None,
    force: bool = False,
    engine: str = "auto",
    workers: int = 1,
) -> SawCounts:
    """Brute-force ``sigma_0..sigma_max_len`` on the free product of finite factors.

    ``engine`` is ``"python"`` (word tuples, hashed visited set),
    ``"numba"`` (integer-coded words) or ``"auto"``. With ``workers > 1`` the
    search is split by first step and the subtotals added, which gives the
    same result as the sequential search.
    """
    if len(factors) < 2:
        raise ValueError("a free product needs at least 2 factors")
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    if max_len > MAX_PRODUCT_LENGTH and not force:
        raise ValueError(f"max_len {max_len} > {MAX_PRODUCT_LENGTH}; pass force=True")
    budget = default_budget() if budget is None else budget
    alpha = _Alphabet(factors)
    if engine == "auto":
        engine = "numba" if alpha.fits(max_len) else "python"
    if engine == "numba" and not alpha.fits(max_len):
        raise ValueError(f"word codes overflow int64 at length {max_len}; use engine='python'")
    if engine not in ("python", "numba"):
        raise ValueError(f"unknown engine {engine!r}")

    def run(prefix: list[FreeWord], sub_budget: int) -> list[int]:
        if engine == "numba":
            return _numba_counts(alpha, max_len, sub_budget, prefix)
        return _python_counts(factors, max_len, sub_budget, prefix)

    root: FreeWord = ()
    if workers <= 1 or max_len == 0:
        return SawCounts(tuple(run([root], budget)))

    # partition by first step; each subtree is independent
    firsts = product_neighbors(root, factors)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda w: run([root, w], budget), firsts))
    total = [1] + [0] * max_len
    for part in parts:
        for n in range(1, max_len + 1):
            total[n] += part[n]
    return SawCounts(tuple(total))


def free_product_saw_counts_from(
    factors: Sequence[RootedGraph], prefix: Sequence[FreeWord], max_len: int,
    budget: int | None = None,
) -> list[int]:
    """Counts of SAWs extending the fixed SAW ``prefix`` (which starts at the root).

    Entry ``n`` counts extensions whose total length is ``n``.
    """
    for w in prefix:
        check_word(w, factors)
    budget = default_budget() if budget is None else budget
    return _numba_counts(_Alphabet(factors), max_len, budget, list(prefix))
