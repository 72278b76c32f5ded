"""Keys and careful synchronization on a small automaton."""

from pfacrypt import (
    KeyGenParams,
    analyze_a_clusters,
    apply_word_set,
    generate_keypair,
    shortest_careful_sync_word,
    stabilization_index,
)
from pfacrypt.samples import t1

# The three-state toy key: a is total, b is missing on state 2.
pub = t1()
print(pub)
print("Q.a  =", sorted(apply_word_set(pub, pub.states, "a")))
print("Q.ab =", sorted(apply_word_set(pub, pub.states, "ab")))

# b is undefined on Q itself, so any synchronizing word has to start with a.
print("shortest word:", shortest_careful_sync_word(pub))

m, stable = stabilization_index(pub)
print(f"a stabilizes after {m} step(s) on {sorted(stable)}")
for c in analyze_a_clusters(pub):
    print("cluster center", sorted(c.center), "depth", c.depth)

# A generated pair: the private word is the one the generator planted,
# which need not be the shortest one.
kp = generate_keypair(KeyGenParams(state_count=9, word_length=12, seed=7))
print("\nprivate word:", kp.private_key)
print("shortest word:", shortest_careful_sync_word(kp.public_key))
