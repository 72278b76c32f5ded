"""Anatomy of the unary ``a``-restriction of an automaton.

With ``a`` total, each connected component of the ``a``-graph is a single
cycle (the center) with in-trees hanging off it.  States whose path into
the center first meets it at ``c`` form the branch with destination ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Letter, Pfa
from .errors import InvalidAutomaton

__all__ = ["Branch", "Cluster", "ClusterAnalysis", "analyze_a_clusters"]


@dataclass(frozen=True)
class Branch:
    states: tuple[int, ...]
    destination: int


@dataclass(frozen=True)
class Cluster:
    states: frozenset[int]
    center: frozenset[int]
    depth: int
    branches: tuple[Branch, ...]
    distance: dict  # state -> steps to the center

    def branch_of(self, q: int) -> Branch | None:
        for br in self.branches:
            if q in br.states:
                return br
        return None


@dataclass(frozen=True)
class ClusterAnalysis:
    clusters: tuple[Cluster, ...]

    def cluster_of(self, q: int) -> Cluster:
        for c in self.clusters:
            if q in c.states:
                return c
        raise KeyError(q)

    def __len__(self):
        return len(self.clusters)

    def __iter__(self):
        return iter(self.clusters)


def analyze_a_clusters(pfa: Pfa) -> ClusterAnalysis:
    """Split the ``a``-graph into clusters, ordered by smallest member."""
    if not pfa.is_total(Letter.A):
        raise InvalidAutomaton("letter a must be defined on every state")
    nxt = pfa.column(Letter.A).tolist()
    n = len(nxt)

    # Find the cycles by walking until a state repeats.
    color = [0] * n  # 0 new, 1 on current walk, 2 finished
    on_cycle = [False] * n
    for start in range(n):
        path = []
        q = start
        while color[q] == 0:
            color[q] = 1
            path.append(q)
            q = nxt[q]
        if color[q] == 1:
            i = path.index(q)
            for p in path[i:]:
                on_cycle[p] = True
        for p in path:
            color[p] = 2

    # Distance to the center and the center state where each path enters it.
    dist = [0 if on_cycle[q] else -1 for q in range(n)]
    entry = [q if on_cycle[q] else -1 for q in range(n)]

    def settle(q):
        stack = []
        while dist[q] < 0:
            stack.append(q)
            q = nxt[q]
        while stack:
            p = stack.pop()
            dist[p] = dist[nxt[p]] + 1
            entry[p] = entry[nxt[p]] if not on_cycle[nxt[p]] else nxt[p]

    for q in range(n):
        settle(q)

    # A cluster is identified by its cycle; label cycles by their least state.
    cycle_id = {}
    for q in range(n):
        if on_cycle[q] and q not in cycle_id:
            cyc = [q]
            p = nxt[q]
            while p != q:
                cyc.append(p)
                p = nxt[p]
            label = min(cyc)
            for p in cyc:
                cycle_id[p] = label

    groups: dict[int, list[int]] = {}
    for q in range(n):
        groups.setdefault(cycle_id[entry[q]], []).append(q)

    clusters = []
    for states in sorted(groups.values()):
        center = frozenset(q for q in states if on_cycle[q])
        by_dest: dict[int, list[int]] = {}
        for q in states:
            if not on_cycle[q]:
                by_dest.setdefault(entry[q], []).append(q)
        branches = tuple(Branch(tuple(v), d) for d, v in sorted(by_dest.items()))
        distance = {q: dist[q] for q in states}
        clusters.append(Cluster(frozenset(states), center, max(distance.values()), branches, distance))
    return ClusterAnalysis(tuple(clusters))
