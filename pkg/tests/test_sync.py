import random

import pytest
from hypothesis import given, settings

from pfacrypt import (
    Pfa,
    apply_word_set,
    is_careful_sync_word,
    search_sync_word,
    shortest_careful_sync_word,
    stabilization_index,
)
from pfacrypt.errors import BudgetExceeded, InvalidAutomaton
from pfacrypt.sync import a_chain, mask_of, members

from conftest import a_total_automata, partial_automata, random_delta
from oracles import brute_shortest_length, level_shortest_length, run_all


def test_is_careful_sync_word_t1(t1):
    assert is_careful_sync_word(t1, "ab") == 2
    assert is_careful_sync_word(t1, "a") is None
    assert is_careful_sync_word(t1, "b") is None
    assert is_careful_sync_word(t1, "abab") == 2


def test_single_state_accepts_empty_word():
    assert is_careful_sync_word(Pfa(1, "ab"), "") == 0
    assert shortest_careful_sync_word(Pfa(1, "ab")) == ""


def test_empty_word_rejected_on_larger_automata(t1):
    assert is_careful_sync_word(t1, "") is None


def test_word_outside_alphabet_rejected(t1):
    with pytest.raises(InvalidAutomaton):
        is_careful_sync_word(t1, "ac")
    with pytest.raises(InvalidAutomaton):
        is_careful_sync_word(Pfa(2, "a", {(0, "a"): 0, (1, "a"): 0}), "b")


def test_shortest_t1(t1):
    assert shortest_careful_sync_word(t1) == "ab"


def test_identity_letter_cannot_merge():
    pfa = Pfa(2, "ab", {(0, "a"): 0, (1, "a"): 1})
    assert shortest_careful_sync_word(pfa) is None


def test_budget_is_distinct_from_no_word(t1):
    with pytest.raises(BudgetExceeded):
        shortest_careful_sync_word(t1, limit=1)
    with pytest.raises(BudgetExceeded):
        shortest_careful_sync_word(t1, limit=0)
    assert search_sync_word(t1, limit=3).word == "ab"


def test_ties_broken_towards_a():
    # Both "a" and "b" synchronize; a comes first.
    pfa = Pfa(2, "ab", {(0, "a"): 0, (1, "a"): 0, (0, "b"): 1, (1, "b"): 1})
    assert shortest_careful_sync_word(pfa) == "a"


def test_bitset_helpers():
    assert members(mask_of({0, 3, 9})) == {0, 3, 9}
    assert mask_of([]) == 0


def test_search_handles_more_than_eight_states():
    # a-cycle of length 12 plus a reset letter defined everywhere
    n = 12
    delta = {(q, "a"): (q + 1) % n for q in range(n)}
    delta.update({(q, "b"): 0 for q in range(n)})
    assert shortest_careful_sync_word(Pfa(n, "ab", delta)) == "b"


def test_cerny_automaton_word_length():
    # Cerny automata C_n: shortest synchronizing word has length (n-1)^2.
    for n in range(2, 8):
        delta = {(q, "a"): (q + 1) % n for q in range(n)}
        delta.update({(q, "b"): q for q in range(n)})
        delta[n - 1, "b"] = 0
        w = shortest_careful_sync_word(Pfa(n, "ab", delta))
        assert len(w) == (n - 1) ** 2


def test_stabilization_index():
    perm = Pfa(3, "a", {(0, "a"): 1, (1, "a"): 2, (2, "a"): 0})
    assert stabilization_index(perm) == (0, {0, 1, 2})
    chain = Pfa(3, "a", {(0, "a"): 1, (1, "a"): 2, (2, "a"): 2})
    assert stabilization_index(chain) == (2, {2})


def test_stabilization_index_t1(t1):
    assert stabilization_index(t1) == (1, {0, 1})


def test_stabilization_needs_total_a():
    with pytest.raises(InvalidAutomaton):
        stabilization_index(Pfa(2, "a", {(0, "a"): 0}))


@given(a_total_automata())
def test_a_chain_is_monotone(pfa):
    chain = a_chain(pfa)
    for bigger, smaller in zip(chain, chain[1:]):
        assert smaller < bigger
    m, stable = stabilization_index(pfa)
    assert m <= pfa.state_count - 1
    assert apply_word_set(pfa, pfa.states, "a" * m) == stable
    assert apply_word_set(pfa, stable, "a") == stable


@settings(max_examples=300)
@given(partial_automata(max_states=5))
def test_careful_prefix_property(pfa):
    w = shortest_careful_sync_word(pfa)
    if w is None:
        return
    assert is_careful_sync_word(pfa, w) is not None
    for k in range(len(w) + 1):
        assert apply_word_set(pfa, pfa.states, w[:k]) is not None


def test_bfs_minimality_random():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(2, 6)
        delta = random_delta(rng, n)
        pfa = Pfa(n, "ab", delta)
        w = shortest_careful_sync_word(pfa)
        expected = level_shortest_length(delta, n)
        assert (w is None) == (expected is None)
        if w is None:
            continue
        assert len(w) == expected
        img = run_all(delta, n, w)
        assert img is not None and len(img) == 1
        if len(w) <= 10:
            assert brute_shortest_length(delta, n, len(w)) == len(w)
