"""Baseline attacks that decrypt without the private key.

``attack_by_word_search`` looks for any carefully synchronizing word of the
public key, then decrypts as the owner would.  ``attack_by_copy_search``
locates the copies of the public key inside the ciphertext directly and
rebuilds the classes around them.  Both run under a budget and report
what they spent.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from ._embed import Budget, embeddings
from .automaton import Letter, Pfa
from .clusters import analyze_a_clusters
from .decrypt import Partition, _automaton, decrypt, reconstruct_plaintext
from .errors import BudgetExceeded, PfaError
from .sync import search_sync_word, stabilization_index

__all__ = ["AttackReport", "attack_by_word_search", "attack_by_copy_search"]


@dataclass
class AttackReport:
    mode: str
    status: str  # success | inconclusive | no-word | ambiguous | failed
    visited: int
    seconds: float
    word: str | None = None
    plaintext: str | None = None
    partition: Partition | None = None
    detail: str = ""

    @property
    def success(self) -> bool:
        return self.status == "success"

    def as_text(self) -> str:
        """Cost report, one ``key=value`` pair per line."""
        fields = [("mode", self.mode), ("status", self.status), ("visited", self.visited),
                  ("seconds", f"{self.seconds:.6f}")]
        if self.word is not None:
            fields.append(("word", self.word))
        if self.plaintext is not None:
            fields.append(("plaintext", self.plaintext))
        if self.partition is not None:
            fields.append(("classes", len(self.partition)))
        if self.detail:
            fields.append(("detail", self.detail))
        return "".join(f"{k}={v}\n" for k, v in fields)


def attack_by_word_search(pub: Pfa, cipher=None, budget: int | None = 10**6) -> AttackReport:
    """Search the power automaton of ``pub``; decrypt ``cipher`` with the result."""
    t0 = time.perf_counter()
    try:
        res = search_sync_word(pub, budget)
    except BudgetExceeded as e:
        return AttackReport("word", "inconclusive", e.visited, time.perf_counter() - t0,
                            detail="budget exhausted")
    if res.word is None:
        return AttackReport("word", "no-word", res.visited, time.perf_counter() - t0,
                            detail="public key is not carefully synchronizing")
    report = AttackReport("word", "success", res.visited, 0.0, word=res.word)
    if cipher is not None:
        try:
            report.plaintext = decrypt(cipher, res.word)
        except PfaError as e:
            report.status, report.detail = "failed", str(e)
    report.seconds = time.perf_counter() - t0
    return report


def _components(images):
    """Group images that share states (union-find over members)."""
    parent = list(range(len(images)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner = {}
    for i, img in enumerate(images):
        for q in img:
            if q in owner:
                parent[find(i)] = find(owner[q])
            else:
                owner[q] = i
    groups = {}
    for i in range(len(images)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _max_packings(images, idx, budget):
    """All maximum-size families of pairwise disjoint images among ``idx``."""
    best = [0, []]

    def rec(k, chosen, used):
        budget.spend()
        if len(chosen) + (len(idx) - k) < best[0]:
            return
        if k == len(idx):
            if len(chosen) > best[0]:
                best[0], best[1] = len(chosen), [tuple(chosen)]
            elif len(chosen) == best[0]:
                best[1].append(tuple(chosen))
            return
        img = images[idx[k]]
        if not (img & used):
            rec(k + 1, chosen + [idx[k]], used | img)
        rec(k + 1, chosen, used)

    rec(0, [], frozenset())
    return best[1]


def _grow_classes(pfa, pub, cores, analysis):
    """Attach added leaves and free clusters to the copy cores, or ``None``.

    ``cores`` pairs each core state set with the embeddings found inside it.
    """
    _, stable = stabilization_index(pub)
    pub_b = pub.column(Letter.B)
    base_b = sorted({int(pub_b[q]) for q in stable})
    b_owner = {}
    owner = {}
    for i, (core, maps) in enumerate(cores):
        for q in core:
            owner[q] = i
        for f in maps:
            for q in base_b:
                b_owner[f[q]] = i
    a_col = pfa.column(Letter.A).tolist()
    b_col = pfa.column(Letter.B).tolist()
    for q in range(pfa.state_count):
        if q not in owner and a_col[q] in owner:
            owner[q] = owner[a_col[q]]
    for cluster in analysis:
        free = [q for q in cluster.states if q not in owner]
        if not free:
            continue
        if len(free) != len(cluster.states):
            return None
        targets = {b_owner.get(b_col[q]) for q in cluster.center}
        if len(targets) != 1 or None in targets:
            return None
        (i,) = targets
        for q in free:
            owner[q] = i
    classes = [set() for _ in cores]
    for q, i in owner.items():
        classes[i].add(q)
    return classes


def attack_by_copy_search(cipher, pub: Pfa, budget: int | None = 10**6) -> AttackReport:
    """Find disjoint copies of ``pub`` in the ciphertext and read the plaintext off them.

    Copies that overlap are grouped.  A group holding a single copy at a
    time is one class whatever alternative is picked (the alternatives
    differ by states that end up in the class anyway), so its union is
    used as the core.  Groups holding several disjoint copies are resolved
    by enumerating their maximum packings.
    """
    t0 = time.perf_counter()
    pfa = _automaton(cipher)
    spent = Budget(budget)

    def stop(status, detail):
        return AttackReport("copy", status, spent.used, time.perf_counter() - t0, detail=detail)

    try:
        images, maps, seen = [], [], set()
        for f in embeddings(pub, pfa, budget=spent):
            img = frozenset(f)
            if img not in seen:
                seen.add(img)
                images.append(img)
                maps.append(f)
        fixed, open_groups = [], []
        for comp in _components(images):
            packings = _max_packings(images, sorted(comp), spent)
            if len(packings[0]) == 1:
                fixed.append((frozenset().union(*(images[i] for i in comp)), [maps[i] for i in comp]))
            else:
                open_groups.append([[(images[i], [maps[i]]) for i in p] for p in packings])
        combos = [[]]
        for options in open_groups:
            combos = [c + opt for c in combos for opt in options]
            spent.spend(len(combos))
    except BudgetExceeded:
        return stop("inconclusive", "budget exhausted")
    if not images:
        return stop("failed", "no copy of the public key found")

    analysis = analyze_a_clusters(pfa)
    results = {}
    for extra in combos:
        cores = fixed + extra
        classes = _grow_classes(pfa, pub, cores, analysis)
        if classes is None or sum(map(len, classes)) != pfa.state_count:
            continue
        key = frozenset(frozenset(c) for c in classes)
        if key in results:
            continue
        part = Partition(tuple(frozenset(c) for c in classes), tuple(min(c) for c in classes))
        try:
            results[key] = (part, reconstruct_plaintext(pfa, part))
        except PfaError:
            continue
    if not results:
        return stop("failed", "copies found but no consistent partition")
    if len(results) > 1:
        return stop("ambiguous", f"{len(results)} different partitions fit")
    (part, text), = results.values()
    return AttackReport("copy", "success", spent.used, time.perf_counter() - t0, plaintext=text, partition=part)
