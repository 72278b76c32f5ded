"""Key pairs: a public partial automaton and a private synchronizing word.

Keys are built backwards from the word.  A random total ``a``-map is drawn
whose image misses one "hole" state ``h`` and whose eventual image has at
least two states, so no power of ``a`` synchronizes.  Then the subset chain
of ``w`` is walked from the full state set, defining ``b`` lazily on the
states it is applied to so the chain shrinks to a single state.  ``b``
never targets ``h`` along the chain, so ``h`` only occurs in the initial
set and ``b`` can stay undefined there.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .automaton import SIGMA, UNDEFINED, Letter, Pfa, restrict_alphabet
from .errors import RetriesExhausted
from .sync import is_careful_sync_word, shortest_careful_sync_word, stabilization_index

__all__ = ["KeyGenParams", "KeyPair", "ValidationReport", "generate_keypair", "validate_keypair"]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class KeyGenParams:
    state_count: int
    word_length: int
    seed: int = 0
    max_retries: int = 100

    def __post_init__(self):
        if self.state_count < 3:
            raise ValueError("state_count must be at least 3")
        if self.word_length < 2:
            raise ValueError("word_length must be at least 2")
        if self.max_retries < 1:
            raise ValueError("max_retries must be positive")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass(frozen=True)
class KeyPair:
    public_key: Pfa
    private_key: str


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)
    landing: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "valid" if self.ok else "invalid: " + "; ".join(self.failures)


def validate_keypair(kp: KeyPair) -> ValidationReport:
    """Check every invariant a usable key pair must satisfy."""
    pub, w = kp.public_key, kp.private_key
    report = ValidationReport()
    fail = report.failures.append
    if not set(pub.alphabet) <= SIGMA:
        fail("public key uses letters outside {a,b}")
    if any(c not in "ab" for c in w):
        fail("private key uses letters outside {a,b}")
        return report
    a_total = Letter.A in pub.alphabet and pub.is_total(Letter.A)
    if not a_total:
        fail("letter a is not total")
    if Letter.B in pub.alphabet and pub.is_total(Letter.B):
        fail("letter b must be undefined on some state")
    if set(w) <= set(c.value for c in pub.alphabet):
        report.landing = is_careful_sync_word(pub, w)
    if report.landing is None:
        fail("not synchronizing")
    if a_total and shortest_careful_sync_word(restrict_alphabet(pub, "a")) is not None:
        fail("a word over {a} alone synchronizes")
    if not w.startswith("a") or "b" not in w:
        fail("private word must be a^j b ... with j >= 1")
    return report


def _draw_a_map(n, rng):
    hole = int(rng.integers(n))
    others = [q for q in range(n) if q != hole]
    rng.shuffle(others)
    k = int(rng.integers(2, n))  # size of the eventual image, in [2, n - 1]
    cyclic, tree = others[:k], others[k:]
    a = [UNDEFINED] * n
    for q, t in zip(cyclic, rng.permutation(cyclic).tolist()):
        a[q] = t
    placed = list(cyclic)
    for q in tree + [hole]:
        a[q] = placed[int(rng.integers(len(placed)))]
        placed.append(q)
    return hole, a


def _attempt(n, length, rng):
    hole, a = _draw_a_map(n, rng)
    b = [UNDEFINED] * n
    pub = Pfa(n, "a", {(q, "a"): t for q, t in enumerate(a)})
    m, _ = stabilization_index(pub)
    j = min(int(rng.integers(1, m + 1)), length - 1)
    tail = "".join(rng.choice(["a", "b"], size=length - j - 1).tolist())
    w = "a" * j + "b" + tail

    cur = set(range(n))
    for t, c in enumerate(w):
        if c == "a":
            cur = {a[q] for q in cur}
            continue
        remaining = w.count("b", t)
        desired = 1 + (len(cur) - 1) * (remaining - 1) // remaining
        fixed = sorted({b[q] for q in cur if b[q] != UNDEFINED})
        pool = list(fixed)
        spare = [q for q in range(n) if q != hole and q not in fixed]
        need = desired - len(pool)
        if need > 0 and spare:
            pool += rng.choice(spare, size=min(need, len(spare)), replace=False).tolist()
        for q in sorted(cur):
            if b[q] == UNDEFINED:
                b[q] = pool[int(rng.integers(len(pool)))]
        cur = {b[q] for q in cur}

    for q in range(n):
        if q != hole and b[q] == UNDEFINED and rng.random() < 0.5:
            b[q] = int(rng.integers(n))
    trans = {(q, "a"): t for q, t in enumerate(a)}
    trans.update({(q, "b"): t for q, t in enumerate(b) if t != UNDEFINED})
    return KeyPair(Pfa(n, "ab", trans), w)


def generate_keypair(params: KeyGenParams) -> KeyPair:
    """Draw a key pair; deterministic in ``params.seed``."""
    rng = np.random.default_rng(params.seed)
    for attempt in range(1, params.max_retries + 1):
        kp = _attempt(params.state_count, params.word_length, rng)
        report = validate_keypair(kp)
        if report.ok:
            log.debug("key pair found on attempt %d", attempt)
            return kp
        log.debug("attempt %d rejected: %s", attempt, report)
    raise RetriesExhausted(params.max_retries)
