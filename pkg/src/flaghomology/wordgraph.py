"""
Graph of reduced words of a permutation under commutations and braid moves.

Used as an independent check on the closed-form move counts: a breadth-first
search labels every word with the parity of commutations and of braid moves
along the search tree, and every remaining edge is tested for consistency.
If all edges agree, the parities are path-independent.
"""

from __future__ import annotations

__all__ = ["neighbours", "MoveParities", "move_parities", "shortest_path_counts"]

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .perm import ReducedWord

COMMUTATION = 0
BRAID = 1


def neighbours(word: ReducedWord) -> Iterator[tuple[ReducedWord, int]]:
    """Words one move away, tagged with the move kind."""
    w = word
    for p in range(len(w) - 1):
        a, b = w[p], w[p + 1]
        if abs(a - b) >= 2:
            yield ReducedWord(w[:p] + (b, a) + w[p + 2:]), COMMUTATION
    for p in range(len(w) - 2):
        a, b, c = w[p], w[p + 1], w[p + 2]
        if a == c and abs(a - b) == 1:
            yield ReducedWord(w[:p] + (b, a, b) + w[p + 3:]), BRAID


@dataclass
class MoveParities:
    consistent: bool
    reachable: bool
    commutations: int  # parity 0/1 from source to target
    braids: int
    graph_size: int


def move_parities(source: ReducedWord, target: ReducedWord) -> MoveParities:
    label = {source: (0, 0)}
    queue = deque([source])
    consistent = True
    while queue:
        u = queue.popleft()
        cu, bu = label[u]
        for v, kind in neighbours(u):
            cv, bv = (cu ^ 1, bu) if kind == COMMUTATION else (cu, bu ^ 1)
            if v not in label:
                label[v] = (cv, bv)
                queue.append(v)
            elif label[v] != (cv, bv):
                consistent = False
    if target not in label:
        return MoveParities(consistent, False, -1, -1, len(label))
    ct, bt = label[target]
    return MoveParities(consistent, True, ct, bt, len(label))


def shortest_path_counts(source: ReducedWord, target: ReducedWord) -> tuple[int, int] | None:
    """(commutations, braids) along one BFS-shortest path, or None if unreachable."""
    prev: dict[ReducedWord, tuple[ReducedWord, int] | None] = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        for v, kind in neighbours(u):
            if v not in prev:
                prev[v] = (u, kind)
                queue.append(v)
    if target not in prev:
        return None
    comm = braid = 0
    node = target
    while prev[node] is not None:
        node, kind = prev[node]
        if kind == COMMUTATION:
            comm += 1
        else:
            braid += 1
    return comm, braid
