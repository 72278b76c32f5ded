"""Small hand-built automata used in tests and demos.

``figure_one_cluster`` rebuilds the a-cluster described in the text of the
source article.  Its states are labelled 1..7 there; here label ``k`` is
state ``k - 1``:

    =====  =====
    label  state
    =====  =====
    1..7   0..6
    =====  =====
"""

from .automaton import Pfa

__all__ = ["t1", "t1_keypair", "figure_one_cluster", "FIGURE_ONE_LABELS"]

FIGURE_ONE_LABELS = {k: k - 1 for k in range(1, 8)}


def t1() -> Pfa:
    """Three states; ``a``: 0->1, 1->0, 2->0; ``b``: 0->2, 1->2, undefined on 2."""
    return Pfa(3, "ab", {(0, "a"): 1, (1, "a"): 0, (2, "a"): 0, (0, "b"): 2, (1, "b"): 2})


def t1_keypair():
    from .keygen import KeyPair

    return KeyPair(t1(), "ab")


def figure_one_cluster() -> Pfa:
    """``a``: 1->2, 2->3, 3->4, 4->5, 5->6, 6->3, 7->4 (labels, see module doc)."""
    edges = {1: 2, 2: 3, 3: 4, 4: 5, 5: 6, 6: 3, 7: 4}
    return Pfa(7, "a", {(FIGURE_ONE_LABELS[s], "a"): FIGURE_ONE_LABELS[t] for s, t in edges.items()})
