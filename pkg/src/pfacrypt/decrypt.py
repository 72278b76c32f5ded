"""Plaintext recovery with a carefully synchronizing word of the public key.

Applying the word to every ciphertext state sends each class onto its own
landing state, so grouping states by where the word takes them recovers
the classes.  Bit edges between classes then form a path spelling the
plaintext; bit edges inside a class are noise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._embed import Budget, embeddings
from .automaton import BITS, UNDEFINED, Letter, Pfa, check_word
from .clusters import analyze_a_clusters
from .errors import BudgetExceeded, MalformedCiphertext, NotDecryptingWord, StructureUnresolved
from .sync import is_careful_sync_word, stabilization_index

__all__ = [
    "Partition",
    "StructureReport",
    "recover_landing_states",
    "compute_partition",
    "class_path",
    "reconstruct_plaintext",
    "decrypt",
    "analyze_structure",
]


def _automaton(cipher) -> Pfa:
    return getattr(cipher, "automaton", cipher)


@dataclass(frozen=True)
class Partition:
    """Classes of ciphertext states, ordered by their landing state."""

    classes: tuple[frozenset, ...]
    landing: tuple[int, ...]
    steps: int = 0  # letter applications spent computing it

    def class_of(self) -> list[int]:
        out = [0] * sum(len(c) for c in self.classes)
        for i, c in enumerate(self.classes):
            for q in c:
                out[q] = i
        return out

    def __len__(self):
        return len(self.classes)


@dataclass(frozen=True)
class StructureReport:
    key_states: tuple[frozenset, ...]
    added_states: tuple[frozenset, ...]
    cluster_states: tuple[frozenset, ...]


def _walk(pfa: Pfa, w: str):
    """Run ``w`` from every state at once; return final states and step count."""
    check_word(w)
    cur = np.arange(pfa.state_count)
    steps = 0
    for c in w:
        x = Letter(c)
        if x not in pfa.alphabet:
            raise NotDecryptingWord(f"letter {c} is not in the ciphertext alphabet")
        cur = pfa.column(x)[cur]
        steps += cur.size
        if (cur == UNDEFINED).any():
            raise NotDecryptingWord("the word runs into an undefined transition")
    return cur, steps


def recover_landing_states(cipher, w: str) -> list[tuple[int, int]]:
    """``(state, class index)`` for each state of ``P.w``, in ascending order."""
    final, _ = _walk(_automaton(cipher), w)
    return [(q, i) for i, q in enumerate(sorted(set(final.tolist())))]


def compute_partition(cipher, w: str) -> Partition:
    """Group states by where ``w`` takes them.

    Keeps one row of the ``(|w|+1) x |P|`` table at a time, so time is
    ``O(|P||w|)`` and extra space ``O(|P|)``.
    """
    final, steps = _walk(_automaton(cipher), w)
    landing = sorted(set(final.tolist()))
    index = {q: i for i, q in enumerate(landing)}
    groups = [[] for _ in landing]
    for q, t in enumerate(final.tolist()):
        groups[index[t]].append(q)
    return Partition(tuple(frozenset(g) for g in groups), tuple(landing), steps)


def class_path(cipher, partition: Partition) -> list[tuple[int, Letter, int]]:
    """Inter-class bit edges as ``(class, bit, class)`` in path order.

    Raises :class:`MalformedCiphertext` unless they form one simple path
    through every class.
    """
    pfa = _automaton(cipher)
    class_of = partition.class_of()
    k = len(partition)
    succ = {}
    pred = {}
    for src, x, dst in pfa.transitions():
        if x not in BITS or class_of[src] == class_of[dst]:
            continue
        i, j = class_of[src], class_of[dst]
        if i in succ:
            raise MalformedCiphertext(f"class {i} has more than one outgoing inter-class edge")
        if j in pred:
            raise MalformedCiphertext(f"class {j} has more than one incoming inter-class edge")
        succ[i] = (x, j)
        pred[j] = i
    if len(succ) != k - 1:
        raise MalformedCiphertext(f"expected {k - 1} inter-class edges, found {len(succ)}")
    sources = [i for i in range(k) if i not in pred]
    if len(sources) != 1:
        raise MalformedCiphertext("inter-class edges do not form a single path")
    path = []
    i = sources[0]
    while i in succ:
        x, j = succ[i]
        path.append((i, x, j))
        i = j
    if len(path) != k - 1:
        raise MalformedCiphertext("inter-class edges contain a cycle")
    return path


def reconstruct_plaintext(cipher, partition: Partition) -> str:
    return "".join(x.value for _, x, _ in class_path(cipher, partition))


def decrypt(cipher, w: str) -> str:
    """Recover the plaintext; raises instead of guessing on any inconsistency."""
    return reconstruct_plaintext(cipher, compute_partition(cipher, w))


def analyze_structure(cipher, w: str, pub: Pfa, budget: int | None = 100_000) -> StructureReport:
    """Split every class into key-copy states, added leaves and cluster states.

    The copy inside a class is found by embedding ``pub`` with its landing
    state pinned to the class's landing state.  If the copy is not unique
    the split is reported as unresolved rather than guessed.
    """
    pfa = _automaton(cipher)
    partition = compute_partition(pfa, w)
    q_land = is_careful_sync_word(pub, w)
    if q_land is None:
        raise StructureUnresolved("the word does not synchronize the public key")
    _, stable = stabilization_index(pub)
    pub_b = pub.column(Letter.B)
    base_b = sorted({int(pub_b[q]) for q in stable})
    a_col = pfa.column(Letter.A).tolist()
    b_col = pfa.column(Letter.B).tolist()

    keys, b_sets = [], []
    for cls, land in zip(partition.classes, partition.landing):
        images = {}
        try:
            for f in embeddings(pub, pfa, allowed=cls, anchor=(q_land, land), budget=Budget(budget)):
                images.setdefault(frozenset(f), f)
                if len(images) > 1:
                    break
        except BudgetExceeded as e:
            raise StructureUnresolved(f"copy search for class of {land} ran out of budget") from e
        if len(images) != 1:
            what = "no copy" if not images else "several copies"
            raise StructureUnresolved(f"class of landing state {land} contains {what} of the public key")
        (img, f), = images.items()
        keys.append(img)
        b_sets.append(frozenset(f[q] for q in base_b))

    added = [frozenset(q for q in cls - key if a_col[q] in key) for cls, key in zip(partition.classes, keys)]
    rest = [cls - key - add for cls, key, add in zip(partition.classes, keys, added)]
    core = frozenset().union(*keys, *added)
    analysis = analyze_a_clusters(pfa)
    for i, states in enumerate(rest):
        for q in states:
            cluster = analysis.cluster_of(q)
            if cluster.states & core:
                raise StructureUnresolved(f"state {q} hangs off a key copy but is not an added leaf")
            head = q if q in cluster.center else cluster.branch_of(q).destination
            if b_col[head] not in b_sets[i]:
                raise StructureUnresolved(f"cluster center {head} does not map into its class's B set")
    return StructureReport(tuple(keys), tuple(added), tuple(rest))
