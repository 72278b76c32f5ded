"""Extended encryption hides the copies among extra a-clusters and leaves."""

from pfacrypt import (
    EncryptionParams,
    KeyGenParams,
    StructureUnresolved,
    analyze_structure,
    compute_partition,
    decrypt,
    encrypt_extended,
    generate_keypair,
)

kp = generate_keypair(KeyGenParams(6, 8, seed=3))
params = EncryptionParams(seed=1, extended=True, clusters=3, cluster_size=(2, 5), extra_states=(1, 2))
cipher = encrypt_extended(kp.public_key, "0110", params)
tr = cipher.trace
print("states:", cipher.automaton.state_count)
print("added leaves per class:", [len(s) for s in tr.added_states])
print("cluster states per class:", [len(s) for s in tr.cluster_states])

part = compute_partition(cipher, kp.private_key)
print("partition matches trace:", set(part.classes) == set(tr.classes))
print("decrypted:", decrypt(cipher, kp.private_key))

# Splitting a class back into its parts can be genuinely ambiguous: an added
# leaf may look exactly like a key state nothing points to.
try:
    rep = analyze_structure(cipher, kp.private_key, kp.public_key)
    print("key copy sizes:", [len(k) for k in rep.key_states])
except StructureUnresolved as e:
    print("structure unresolved:", e)
