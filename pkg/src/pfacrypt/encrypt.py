"""Ciphertext construction.

A plaintext ``u`` over ``01`` is a labelled path on ``len(u) + 1`` vertices.
Each vertex becomes a class of ciphertext states: one copy of the public
key, optionally grown by extra ``a``-leaves and by free ``a``-clusters whose
centers feed into the copy with ``b``.  Path edges become single bit edges
between consecutive classes, missing ``a``/``b`` transitions are filled at
random, and intra-class bit edges are sprinkled on top as noise.

Bit edges obey two hard rules: at most one edge per (state, bit), and no
directed bit path of length two (no state is both the head and the tail of
a bit edge).  The final state numbering is a seeded random permutation so
the layout of the construction does not leak.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .automaton import BITS, LETTERS, SIGMA, UNDEFINED, Letter, Pfa
from .errors import InvalidPublicKey
from .sync import stabilization_index

__all__ = [
    "EncryptionParams",
    "EncryptionTrace",
    "Ciphertext",
    "check_plaintext",
    "encode_plaintext_path",
    "compute_b_sets",
    "extend_with_clusters",
    "extend_with_states",
    "encrypt_basic",
    "encrypt_extended",
    "encrypt",
]

_A, _B = Letter.A.index, Letter.B.index


def _as_range(v):
    if isinstance(v, int):
        return (v, v)
    lo, hi = v
    if lo < 0 or hi < lo:
        raise ValueError(f"bad range {v!r}")
    return (int(lo), int(hi))


@dataclass(frozen=True)
class EncryptionParams:
    """Knobs of the randomized construction.

    Ranges are inclusive ``(lo, hi)`` pairs; a bare int means ``(k, k)``.
    ``noise`` is the number of intra-class bit edges per class,
    ``extra_states`` the number of added ``a``-leaves per class.
    """

    seed: int = 0
    noise: tuple[int, int] = (0, 2)
    extended: bool = False
    clusters: int = 0
    cluster_size: tuple[int, int] = (2, 4)
    extra_states: tuple[int, int] = (0, 0)
    shuffle: bool = True

    def __post_init__(self):
        for name in ("noise", "cluster_size", "extra_states"):
            object.__setattr__(self, name, _as_range(getattr(self, name)))
        if self.clusters < 0:
            raise ValueError("cluster count must be non-negative")
        if self.cluster_size[0] < 2:
            raise ValueError("clusters need at least two states for depth 1")
        if not self.extended and (self.clusters or self.extra_states != (0, 0)):
            raise ValueError("clusters and extra states require extended=True")


@dataclass(frozen=True)
class EncryptionTrace:
    """Secret record of how a ciphertext was assembled.  Never serialized."""

    class_of: tuple[int, ...]
    key_states: tuple[frozenset, ...]
    added_states: tuple[frozenset, ...]
    cluster_states: tuple[frozenset, ...]
    inter_edges: tuple[tuple[int, Letter, int], ...]
    noise_edges: tuple[tuple[int, Letter, int], ...]
    clusters: tuple[frozenset, ...]
    embeddings: tuple[tuple[int, ...], ...]  # per class: key state q -> ciphertext state

    @property
    def classes(self) -> tuple[frozenset, ...]:
        return tuple(q | a | c for q, a, c in zip(self.key_states, self.added_states, self.cluster_states))


@dataclass(frozen=True)
class Ciphertext:
    automaton: Pfa
    trace: EncryptionTrace = field(repr=False, compare=False)


def check_plaintext(u: str) -> str:
    if any(c not in "01" for c in u):
        raise ValueError(f"plaintext {u!r} contains characters other than 0 and 1")
    return u


def encode_plaintext_path(u: str) -> Pfa:
    """The path ``p_0 -u[0]-> p_1 -u[1]-> ... p_len(u)``."""
    check_plaintext(u)
    return Pfa(len(u) + 1, "01", {(i, c): i + 1 for i, c in enumerate(u)})


def compute_b_sets(pub: Pfa, offsets: Sequence[int]) -> list[frozenset]:
    """``Q_i.a^m b`` for each copy, where ``m`` is the ``a``-stabilization index."""
    if Letter.A not in pub.alphabet or not pub.is_total(Letter.A):
        raise InvalidPublicKey("letter a must be total on the public key")
    _, stable = stabilization_index(pub)
    col = pub.column(Letter.B) if Letter.B in pub.alphabet else None
    if col is None or (col[sorted(stable)] == UNDEFINED).any():
        raise InvalidPublicKey("letter b is undefined on the stable set of a")
    base = {int(col[q]) for q in stable}
    return [frozenset(q + off for q in base) for off in offsets]


class _Work:
    """Mutable ciphertext under construction, states in creation order."""

    def __init__(self, pub: Pfa, copies: int):
        self.pub = pub
        n = pub.state_count
        self.offsets = [i * n for i in range(copies)]
        rows = np.tile(pub.table, (copies, 1))
        for i, off in enumerate(self.offsets):
            block = rows[i * n:(i + 1) * n]
            block[block != UNDEFINED] += off
        self.rows = rows.tolist()
        self.class_of = [i for i in range(copies) for _ in range(n)]
        self.key_states = [set(range(off, off + n)) for off in self.offsets]
        self.added_states = [set() for _ in range(copies)]
        self.cluster_states = [set() for _ in range(copies)]
        self.clusters = []
        self.inter_edges = []
        self.noise_edges = []
        self.heads = set()
        self.tails = set()

    @property
    def copies(self):
        return len(self.offsets)

    def members(self, i):
        return self.key_states[i] | self.added_states[i] | self.cluster_states[i]

    def new_state(self, cls):
        self.rows.append([UNDEFINED] * len(LETTERS))
        self.class_of.append(cls)
        return len(self.rows) - 1

    def can_bit(self, src, x, dst):
        return (src != dst and src not in self.heads and dst not in self.tails
                and self.rows[src][x.index] == UNDEFINED)

    def add_bit(self, src, x, dst):
        self.rows[src][x.index] = dst
        self.tails.add(src)
        self.heads.add(dst)


def extend_with_clusters(work: _Work, b_sets, count: int, rng, size_range=(2, 4)) -> _Work:
    """Add ``count`` depth-1 ``a``-clusters whose centers map by ``b`` into the B sets.

    A cluster of size ``s`` has a center cycle of ``c`` states, ``1 <= c < s``,
    and ``s - c`` leaves each pointing at one center state.  The whole
    cluster joins one class ``j`` and every center state gets its own
    target in ``B_j``.  Splitting a center across classes is unsound: the
    leading ``a``-block of a decrypting word rotates the cycle, and its
    length depends on the word, which the encrypting side does not know.
    """
    lo, hi = size_range
    for _ in range(count):
        size = int(rng.integers(lo, hi + 1))
        c = int(rng.integers(1, size))
        j = int(rng.integers(work.copies))
        targets = sorted(b_sets[j])
        center = [work.new_state(j) for _ in range(c)]
        for q, t in zip(center, center[1:] + center[:1]):
            work.rows[q][_A] = t
        for q in center:
            work.rows[q][_B] = targets[int(rng.integers(len(targets)))]
        leaves = [work.new_state(j) for _ in range(size - c)]
        for leaf in leaves:
            work.rows[leaf][_A] = center[int(rng.integers(c))]
        work.cluster_states[j].update(center + leaves)
        work.clusters.append(frozenset(center + leaves))
    return work


def extend_with_states(work: _Work, counts: Sequence[int], rng) -> _Work:
    """Give copy ``i`` ``counts[i]`` new states, each with a single ``a``-edge.

    The ``a``-target is a copy state that already has an ``a``-preimage, so
    the image of the class under ``a`` does not grow.
    """
    col = work.pub.column(Letter.A)
    reachable = sorted(set(col.tolist()))
    if not reachable:
        raise InvalidPublicKey("public key has no state with an a-preimage")
    for i, k in enumerate(counts):
        for _ in range(k):
            q = work.new_state(i)
            work.rows[q][_A] = work.offsets[i] + reachable[int(rng.integers(len(reachable)))]
            work.added_states[i].add(q)
    return work


def _link_classes(work: _Work, u: str, rng):
    for i, c in enumerate(u):
        x = Letter(c)
        srcs = sorted(q for q in work.members(i) if q not in work.heads and work.rows[q][x.index] == UNDEFINED)
        dsts = sorted(q for q in work.members(i + 1) if q not in work.tails)
        if not srcs or not dsts:
            raise InvalidPublicKey("public key too small to carry an inter-class edge")
        src = srcs[int(rng.integers(len(srcs)))]
        dst = dsts[int(rng.integers(len(dsts)))]
        work.add_bit(src, x, dst)
        work.inter_edges.append((src, x, dst))


def _fill_sigma(work: _Work, rng):
    total = len(work.rows)
    for i in range(work.copies):
        slots = [(q, x) for q in sorted(work.members(i)) for x in (_A, _B) if work.rows[q][x] == UNDEFINED]
        if not slots:
            continue
        forced = int(rng.integers(len(slots))) if work.copies > 1 else -1
        for k, (q, x) in enumerate(slots):
            if k == forced:
                outside = [p for p in range(total) if work.class_of[p] != i]
                work.rows[q][x] = outside[int(rng.integers(len(outside)))]
            else:
                work.rows[q][x] = int(rng.integers(total))


def _add_noise(work: _Work, rng, noise_range):
    bits = (Letter.BIT0, Letter.BIT1)
    lo, hi = noise_range
    for i in range(work.copies):
        k = int(rng.integers(lo, hi + 1))
        members = sorted(work.members(i))
        for _ in range(k):
            edge = None
            for _ in range(64):
                src, dst = rng.choice(members, size=2).tolist()
                x = bits[int(rng.integers(2))]
                if work.can_bit(src, x, dst):
                    edge = (src, x, dst)
                    break
            if edge is None:
                options = [(s, x, d) for s in members for x in bits for d in members if work.can_bit(s, x, d)]
                if not options:
                    break
                edge = options[int(rng.integers(len(options)))]
            work.add_bit(*edge)
            work.noise_edges.append(edge)


def _finish(work: _Work, rng, shuffle: bool) -> Ciphertext:
    total = len(work.rows)
    perm = rng.permutation(total) if shuffle else np.arange(total)
    rows = np.array(work.rows, dtype=np.int64)
    table = np.full_like(rows, UNDEFINED)
    defined = rows != UNDEFINED
    rows[defined] = perm[rows[defined]]
    table[perm] = rows
    ren = perm.tolist()

    def rs(states):
        return frozenset(ren[q] for q in states)

    def re(edges):
        return tuple((ren[s], x, ren[d]) for s, x, d in edges)

    class_of = [0] * total
    for q, c in enumerate(work.class_of):
        class_of[ren[q]] = c
    n = work.pub.state_count
    trace = EncryptionTrace(
        class_of=tuple(class_of),
        key_states=tuple(rs(s) for s in work.key_states),
        added_states=tuple(rs(s) for s in work.added_states),
        cluster_states=tuple(rs(s) for s in work.cluster_states),
        inter_edges=re(work.inter_edges),
        noise_edges=re(work.noise_edges),
        clusters=tuple(rs(s) for s in work.clusters),
        embeddings=tuple(tuple(ren[off + q] for q in range(n)) for off in work.offsets),
    )
    return Ciphertext(Pfa.from_table(table, LETTERS), trace)


def _check_pub(pub: Pfa):
    if not set(pub.alphabet) <= SIGMA:
        raise InvalidPublicKey("public key may only use letters a and b")
    if Letter.A not in pub.alphabet or not pub.is_total(Letter.A):
        raise InvalidPublicKey("letter a must be total on the public key")


def _build(pub: Pfa, u: str, params: EncryptionParams, extended: bool) -> Ciphertext:
    check_plaintext(u)
    _check_pub(pub)
    rng = np.random.default_rng(params.seed)
    work = _Work(pub, len(u) + 1)
    if extended:
        b_sets = compute_b_sets(pub, work.offsets)
        extend_with_clusters(work, b_sets, params.clusters, rng, params.cluster_size)
        lo, hi = params.extra_states
        extend_with_states(work, rng.integers(lo, hi + 1, size=work.copies).tolist(), rng)
    _link_classes(work, u, rng)
    _fill_sigma(work, rng)
    _add_noise(work, rng, params.noise)
    return _finish(work, rng, params.shuffle)


def encrypt_basic(pub: Pfa, u: str, params: EncryptionParams | None = None) -> Ciphertext:
    """Encrypt with copies of the key only; extension settings are ignored."""
    return _build(pub, u, params or EncryptionParams(), extended=False)


def encrypt_extended(pub: Pfa, u: str, params: EncryptionParams) -> Ciphertext:
    if not params.extended:
        raise ValueError("encrypt_extended needs params.extended=True")
    return _build(pub, u, params, extended=True)


def encrypt(pub: Pfa, u: str, params: EncryptionParams | None = None) -> Ciphertext:
    params = params or EncryptionParams()
    return encrypt_extended(pub, u, params) if params.extended else encrypt_basic(pub, u, params)
