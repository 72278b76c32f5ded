"""Partial deterministic automata over the letters ``a``, ``b``, ``0``, ``1``.

States are dense integers ``0 .. n-1``.  Transitions live in an immutable
``(n, 4)`` integer table where ``-1`` marks an undefined entry.  State sets
are plain ``frozenset`` objects; words are strings over ``"ab"``.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import InvalidAutomaton

__all__ = [
    "Letter",
    "LETTERS",
    "SIGMA",
    "BITS",
    "UNDEFINED",
    "Pfa",
    "as_letter",
    "check_word",
    "apply_letter_set",
    "apply_word_set",
    "preimage",
    "disjoint_union",
    "restrict_alphabet",
]

UNDEFINED = -1


class Letter(str, Enum):
    A = "a"
    B = "b"
    BIT0 = "0"
    BIT1 = "1"

    def __str__(self):
        return self.value

    @property
    def index(self) -> int:
        return _INDEX[self]

    @property
    def is_bit(self) -> bool:
        return self in BITS


LETTERS = (Letter.A, Letter.B, Letter.BIT0, Letter.BIT1)
_INDEX = {x: i for i, x in enumerate(LETTERS)}
SIGMA = frozenset({Letter.A, Letter.B})
BITS = frozenset({Letter.BIT0, Letter.BIT1})


def as_letter(x) -> Letter:
    try:
        return Letter(x)
    except ValueError:
        raise InvalidAutomaton(f"unknown letter {x!r}") from None


def _canonical(letters: Iterable) -> tuple[Letter, ...]:
    s = {as_letter(x) for x in letters}
    return tuple(x for x in LETTERS if x in s)


def check_word(w: str) -> str:
    """Return ``w`` unchanged if it is a word over ``ab``, else raise."""
    if any(c not in "ab" for c in w):
        raise InvalidAutomaton(f"word {w!r} contains letters outside 'ab'")
    return w


class Pfa:
    """Immutable partial deterministic automaton.

    ``transitions`` maps ``(state, letter)`` to a target state.  Letters may
    be given as :class:`Letter` members or their one-character strings.

    >>> t1 = Pfa(3, "ab", {(0, "a"): 1, (1, "a"): 0, (2, "a"): 0,
    ...                    (0, "b"): 2, (1, "b"): 2})
    >>> t1.delta(2, "b") is None
    True
    """

    __slots__ = ("_table", "_alphabet", "_hash")

    def __init__(self, state_count: int, alphabet: Iterable, transitions: Mapping | None = None):
        if state_count < 1:
            raise InvalidAutomaton("an automaton needs at least one state")
        table = np.full((state_count, len(LETTERS)), UNDEFINED, dtype=np.int64)
        for (q, x), p in (transitions or {}).items():
            table[q, as_letter(x).index] = p
        self._init(table, _canonical(alphabet))

    @classmethod
    def from_table(cls, table, alphabet: Iterable) -> "Pfa":
        self = cls.__new__(cls)
        self._init(np.array(table, dtype=np.int64, copy=True), _canonical(alphabet))
        return self

    def _init(self, table: np.ndarray, alphabet: tuple[Letter, ...]) -> None:
        n = table.shape[0]
        if table.ndim != 2 or table.shape[1] != len(LETTERS) or n < 1:
            raise InvalidAutomaton(f"bad transition table shape {table.shape}")
        if ((table < UNDEFINED) | (table >= n)).any():
            raise InvalidAutomaton("transition target out of range")
        for x in LETTERS:
            if x not in alphabet and (table[:, x.index] != UNDEFINED).any():
                raise InvalidAutomaton(f"transition on letter {x} outside the alphabet")
        table.setflags(write=False)
        self._table = table
        self._alphabet = alphabet
        self._hash = None

    @property
    def state_count(self) -> int:
        return self._table.shape[0]

    n = state_count

    @property
    def alphabet(self) -> tuple[Letter, ...]:
        return self._alphabet

    @property
    def table(self) -> np.ndarray:
        """Read-only ``(n, 4)`` table, columns in :data:`LETTERS` order."""
        return self._table

    @property
    def states(self) -> frozenset[int]:
        return frozenset(range(self.state_count))

    def column(self, x) -> np.ndarray:
        return self._table[:, as_letter(x).index]

    def delta(self, q: int, x) -> int | None:
        p = int(self._table[q, as_letter(x).index])
        return None if p == UNDEFINED else p

    def is_total(self, x) -> bool:
        return bool((self.column(x) != UNDEFINED).all())

    def run(self, q: int, w: str) -> int | None:
        """Follow ``w`` from ``q``; ``None`` as soon as a transition is missing."""
        for c in w:
            q = self.delta(q, c)
            if q is None:
                return None
        return q

    def transitions(self) -> Iterator[tuple[int, Letter, int]]:
        """Yield ``(src, letter, dst)`` sorted by source then letter order."""
        src, col = np.nonzero(self._table != UNDEFINED)
        for q, i in zip(src.tolist(), col.tolist()):
            yield q, LETTERS[i], int(self._table[q, i])

    def transition_count(self) -> int:
        return int((self._table != UNDEFINED).sum())

    def __eq__(self, other):
        if not isinstance(other, Pfa):
            return NotImplemented
        return self._alphabet == other._alphabet and np.array_equal(self._table, other._table)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._alphabet, self._table.tobytes(), self._table.shape))
        return self._hash

    def __repr__(self):
        letters = "".join(x.value for x in self._alphabet)
        return f"Pfa(states={self.state_count}, alphabet={letters!r}, transitions={self.transition_count()})"


def apply_letter_set(pfa: Pfa, s: Iterable[int], x) -> frozenset[int] | None:
    """Image of ``s`` under ``x``, or ``None`` unless ``x`` is defined on all of ``s``."""
    idx = np.fromiter(s, dtype=np.int64)
    if idx.size == 0:
        return frozenset()
    img = pfa.column(x)[idx]
    if (img == UNDEFINED).any():
        return None
    return frozenset(img.tolist())


def apply_word_set(pfa: Pfa, s: Iterable[int], w: str) -> frozenset[int] | None:
    cur = frozenset(s)
    for c in w:
        cur = apply_letter_set(pfa, cur, c)
        if cur is None:
            return None
    return cur


def preimage(pfa: Pfa, s: Iterable[int], x) -> frozenset[int]:
    """States whose ``x``-transition is defined and lands in ``s``."""
    col = pfa.column(x)
    mask = np.isin(col, np.fromiter(s, dtype=np.int64))
    return frozenset(np.nonzero(mask & (col != UNDEFINED))[0].tolist())


def disjoint_union(a: Pfa, b: Pfa) -> tuple[Pfa, int]:
    """Sum of two automata; ``b``'s states are shifted by ``a.state_count``."""
    offset = a.state_count
    tb = b.table.copy()
    tb[tb != UNDEFINED] += offset
    table = np.vstack([a.table, tb])
    return Pfa.from_table(table, set(a.alphabet) | set(b.alphabet)), offset


def restrict_alphabet(pfa: Pfa, keep: Iterable) -> Pfa:
    keep = _canonical(keep)
    if not set(keep) <= set(pfa.alphabet):
        raise InvalidAutomaton("restriction must keep a subset of the alphabet")
    table = pfa.table.copy()
    for x in LETTERS:
        if x not in keep:
            table[:, x.index] = UNDEFINED
    return Pfa.from_table(table, keep)
