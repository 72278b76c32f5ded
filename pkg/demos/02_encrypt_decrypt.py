"""Basic encryption: one key copy per plaintext vertex, bits between copies."""

from pfacrypt import EncryptionParams, compute_partition, decrypt, encrypt_basic
from pfacrypt.samples import t1_keypair

kp = t1_keypair()
u = "1011"
cipher = encrypt_basic(kp.public_key, u, EncryptionParams(seed=42, noise=(1, 2)))
pfa = cipher.automaton
print(f"{len(u)} bits -> {pfa.state_count} states, {pfa.transition_count()} transitions")

part = compute_partition(pfa, kp.private_key)
for land, cls in zip(part.landing, part.classes):
    print(f"  landing {land:2d}: {sorted(cls)}")

# Only bit edges that cross classes carry the message.
def show(edges):
    return " ".join(f"{q}-{x.value}->{p}" for q, x, p in edges)


print("inter-class edges:", show(cipher.trace.inter_edges))
print("noise edges:      ", show(cipher.trace.noise_edges))
print("decrypted:", decrypt(pfa, kp.private_key))
