"""Exact maximum clique by branch and bound with greedy-colouring bounds.

Vertices are ``0..n-1``; adjacency is a list of Python-int bitsets. The
search is deterministic: among all maximum cliques the one whose sorted
vertex list is lexicographically least is returned.
"""
from __future__ import annotations

from typing import Iterable, Sequence

__all__ = ["adjacency_from_edges", "clique_number", "has_clique", "maximum_clique"]


def adjacency_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _colour_sort(adj: Sequence[int], P: int) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of P; colour classes are independent sets,
    so ``colours[k]`` bounds the clique size within ``order[:k+1]``."""
    order: list[int] = []
    colours: list[int] = []
    colour = 0
    U = P
    while U:
        colour += 1
        Q = U
        while Q:
            v = (Q & -Q).bit_length() - 1
            Q &= ~(1 << v) & ~adj[v]
            U &= ~(1 << v)
            order.append(v)
            colours.append(colour)
    return order, colours


class _Search:
    def __init__(self, adj: Sequence[int], floor: int):
        self.adj = adj
        self.best: list[int] = []
        self.floor = floor  # only cliques larger than this are interesting
        self.stop_at: int | None = None

    def expand(self, current: list[int], P: int) -> bool:
        order, colours = _colour_sort(self.adj, P)
        for k in range(len(order) - 1, -1, -1):
            if len(current) + colours[k] <= max(len(self.best), self.floor):
                return False
            v = order[k]
            current.append(v)
            newP = P & self.adj[v]
            if newP:
                if self.expand(current, newP):
                    return True
            elif len(current) > max(len(self.best), self.floor):
                self.best = list(current)
                if self.stop_at is not None and len(self.best) >= self.stop_at:
                    return True
            current.pop()
            P &= ~(1 << v)
        return False


def clique_number(adj: Sequence[int], within: int | None = None) -> int:
    """Size of a maximum clique inside the vertex bitset ``within`` (default: all)."""
    P = (1 << len(adj)) - 1 if within is None else within
    if not P:
        return 0
    s = _Search(adj, 0)
    s.expand([], P)
    return len(s.best)


def has_clique(adj: Sequence[int], k: int, within: int | None = None) -> bool:
    """Whether the subgraph on ``within`` contains a clique of size ``k``."""
    if k <= 0:
        return True
    P = (1 << len(adj)) - 1 if within is None else within
    if P.bit_count() < k:
        return False
    s = _Search(adj, k - 1)
    s.stop_at = k
    s.expand([], P)
    return len(s.best) >= k


def maximum_clique(adj: Sequence[int]) -> list[int]:
    """Lexicographically least maximum clique, as a sorted vertex list."""
    n = len(adj)
    omega = clique_number(adj)
    chosen: list[int] = []
    P = (1 << n) - 1
    # fix vertices in increasing order while a size-omega extension survives
    for v in range(n):
        if len(chosen) == omega:
            break
        if not (P >> v) & 1:
            continue
        nextP = P & adj[v]
        if has_clique(adj, omega - len(chosen) - 1, nextP):
            chosen.append(v)
            P = nextP
        else:
            P &= ~(1 << v)
    return chosen
