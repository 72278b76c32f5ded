"""Backtracking search for copies of a small automaton inside a larger one.

An embedding maps pattern states injectively to target states so that each
transition *defined* in the pattern is matched in the target.  Undefined
pattern slots are unconstrained, since encryption fills them at random.
"""

from __future__ import annotations

from collections import deque

from .automaton import SIGMA, UNDEFINED, LETTERS, Pfa
from .errors import BudgetExceeded


class Budget:
    """Counter of search nodes; ``limit=None`` means unbounded."""

    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1):
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"search used more than {self.limit} nodes", visited=self.used)


def _sigma_columns(pfa: Pfa):
    return [i for i, x in enumerate(LETTERS) if x in SIGMA and x in pfa.alphabet]


def _search_order(pattern, out, inn):
    """Pattern states so each one after a component root touches an earlier one.

    Forced (forward) neighbours are queued before preimage neighbours.
    """
    n = pattern.state_count
    indeg = [len(inn[q]) for q in range(n)]
    seen = [False] * n
    order = []
    for root in sorted(range(n), key=lambda q: (-indeg[q], q)):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            q = queue.popleft()
            order.append(q)
            for _, p in out[q]:
                if not seen[p]:
                    seen[p] = True
                    queue.appendleft(p)
            for r, _ in inn[q]:
                if not seen[r]:
                    seen[r] = True
                    queue.append(r)
    return order


def embeddings(pattern: Pfa, target: Pfa, *, allowed=None, anchor=None, budget: Budget | None = None):
    """Yield embeddings as tuples ``f`` with ``f[q]`` the image of pattern state ``q``.

    ``allowed`` restricts the image; ``anchor=(q, t)`` pins ``f[q] = t``.
    Only the ``a``/``b`` letters take part.
    """
    budget = budget or Budget(None)
    n = pattern.state_count
    cols = _sigma_columns(pattern)
    ptab = pattern.table.tolist()
    ttab = target.table.tolist()
    out = [[(x, ptab[q][x]) for x in cols if ptab[q][x] != UNDEFINED] for q in range(n)]
    inn = [[] for _ in range(n)]
    for q in range(n):
        for x, p in out[q]:
            inn[p].append((q, x))

    m = target.state_count
    allowed = set(range(m)) if allowed is None else set(allowed)
    tpre = {x: [[] for _ in range(m)] for x in cols}
    for t in range(m):
        for x in cols:
            s = ttab[t][x]
            if s != UNDEFINED and t in allowed:
                tpre[x][s].append(t)
    # A pattern state with k incoming x-edges needs an image with at least k.
    need = [{x: sum(1 for _, y in inn[q] if y == x) for x in cols} for q in range(n)]

    def fits(q, t):
        return all(len(tpre[x][t]) >= k for x, k in need[q].items())

    order = _search_order(pattern, out, inn)
    if anchor is not None:
        root = anchor[0]
        order.remove(root)
        order.insert(0, root)
    f = [UNDEFINED] * n
    used = set()

    def candidates(q):
        for x, p in out[q]:
            if f[p] != UNDEFINED:
                return tpre[x][f[p]]
        for r, x in inn[q]:
            if f[r] != UNDEFINED:
                t = ttab[f[r]][x]
                return [t] if t != UNDEFINED and t in allowed else []
        if anchor is not None and q == anchor[0]:
            return [anchor[1]] if anchor[1] in allowed else []
        return sorted(allowed)

    def consistent(q, t):
        for x, p in out[q]:
            if f[p] != UNDEFINED and ttab[t][x] != f[p]:
                return False
            if p == q and ttab[t][x] != t:
                return False
        for r, x in inn[q]:
            if f[r] != UNDEFINED and ttab[f[r]][x] != t:
                return False
        return True

    def extend(k):
        if k == n:
            yield tuple(f)
            return
        q = order[k]
        for t in candidates(q):
            budget.spend()
            if t in used or not fits(q, t) or not consistent(q, t):
                continue
            f[q] = t
            used.add(t)
            yield from extend(k + 1)
            used.discard(t)
            f[q] = UNDEFINED

    yield from extend(0)
