"""Careful synchronization: word checks and power-automaton search.

The search never builds the power automaton.  Subsets are Python integers
used as bitsets and are discovered lazily, breadth first, from the full
state set.  Images of a bitset are computed a byte at a time from
precomputed per-letter lookup tables.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automaton import SIGMA, UNDEFINED, Letter, Pfa, apply_word_set, check_word
from .errors import BudgetExceeded, InvalidAutomaton

__all__ = [
    "is_careful_sync_word",
    "SyncSearch",
    "search_sync_word",
    "shortest_careful_sync_word",
    "stabilization_index",
    "a_chain",
    "mask_of",
    "members",
]


def mask_of(states) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def members(mask: int) -> frozenset[int]:
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return frozenset(out)


def is_careful_sync_word(pfa: Pfa, w: str) -> int | None:
    """Landing state of ``w`` on the whole automaton, or ``None``.

    ``None`` covers both an undefined transition along some prefix and a
    final image with more than one state.
    """
    check_word(w)
    for c in set(w):
        if Letter(c) not in pfa.alphabet:
            raise InvalidAutomaton(f"letter {c} is not in the automaton's alphabet")
    img = apply_word_set(pfa, pfa.states, w)
    if img is None or len(img) != 1:
        return None
    return next(iter(img))


class _ByteImages:
    """Per-letter image tables for 8-state chunks of a bitset."""

    def __init__(self, pfa: Pfa, letter: Letter):
        col = pfa.column(letter).tolist()
        n = len(col)
        self.chunks = []
        for base in range(0, n, 8):
            width = min(8, n - base)
            images = [0] * 256
            bad = [False] * 256
            for byte in range(1, 1 << width):
                low = byte & -byte
                q = base + low.bit_length() - 1
                rest = byte ^ low
                t = col[q]
                if t == UNDEFINED or bad[rest]:
                    bad[byte] = True
                else:
                    images[byte] = images[rest] | (1 << t)
            self.chunks.append((images, bad))

    def image(self, mask: int) -> int | None:
        out = 0
        for images, bad in self.chunks:
            byte = mask & 0xFF
            if byte:
                if bad[byte]:
                    return None
                out |= images[byte]
            mask >>= 8
            if not mask:
                break
        return out


@dataclass(frozen=True)
class SyncSearch:
    """Outcome of a completed power-automaton search."""

    word: str | None
    visited: int

    @property
    def found(self) -> bool:
        return self.word is not None


def search_sync_word(pfa: Pfa, limit: int | None = None) -> SyncSearch:
    """Breadth-first search for a shortest carefully synchronizing word.

    ``limit`` caps the number of distinct subsets discovered; hitting it
    raises :class:`BudgetExceeded`.  Letters are tried in the order ``a``
    then ``b``, so the result is the lexicographically least among the
    shortest words.
    """
    n = pfa.state_count
    full = (1 << n) - 1
    if limit is not None and limit < 1:
        raise BudgetExceeded("search budget exhausted before the first subset", visited=0)
    if n == 1:
        return SyncSearch("", 1)
    letters = [x for x in pfa.alphabet if x in SIGMA]
    tables = [(x.value, _ByteImages(pfa, x)) for x in letters]
    parent = {full: None}
    queue = deque([full])
    while queue:
        cur = queue.popleft()
        for c, tab in tables:
            nxt = tab.image(cur)
            if nxt is None or nxt in parent:
                continue
            if limit is not None and len(parent) >= limit:
                raise BudgetExceeded(f"visited {len(parent)} subsets without a verdict", visited=len(parent))
            parent[nxt] = (cur, c)
            if nxt & (nxt - 1) == 0:
                return SyncSearch(_unwind(parent, nxt), len(parent))
            queue.append(nxt)
    return SyncSearch(None, len(parent))


def _unwind(parent, mask):
    letters = []
    while parent[mask] is not None:
        mask, c = parent[mask]
        letters.append(c)
    return "".join(reversed(letters))


def shortest_careful_sync_word(pfa: Pfa, limit: int | None = None) -> str | None:
    """Shortest carefully synchronizing word, ``None`` if there is none.

    Raises :class:`BudgetExceeded` when ``limit`` subsets were visited first.
    """
    return search_sync_word(pfa, limit).word


def a_chain(pfa: Pfa) -> list[frozenset[int]]:
    """The chain ``Q, Q.a, Q.a^2, ...`` up to and including its first repeat."""
    if not pfa.is_total(Letter.A):
        raise InvalidAutomaton("letter a must be defined on every state")
    col = pfa.column(Letter.A)
    chain = [pfa.states]
    while True:
        nxt = frozenset(col[sorted(chain[-1])].tolist())
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)


def stabilization_index(pfa: Pfa) -> tuple[int, frozenset[int]]:
    """Smallest ``m`` with ``Q.a^m == Q.a^(m+1)``, together with ``Q.a^m``."""
    chain = a_chain(pfa)
    return len(chain) - 1, chain[-1]
