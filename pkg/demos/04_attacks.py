"""Two baseline attacks, neither of which needs the private word."""

from pfacrypt import (
    EncryptionParams,
    KeyGenParams,
    attack_by_copy_search,
    attack_by_word_search,
    encrypt,
    generate_keypair,
)

kp = generate_keypair(KeyGenParams(8, 16, seed=21))
u = "110010"
cipher = encrypt(kp.public_key, u, EncryptionParams(seed=4, extended=True, clusters=2, extra_states=(1, 2)))

# Any carefully synchronizing word of the public key decrypts, and at this
# size breadth-first search over subsets finds one almost immediately.
print(attack_by_word_search(kp.public_key, cipher).as_text())

# Copy search never looks for a word; it locates the key copies directly.
print(attack_by_copy_search(cipher, kp.public_key).as_text())

# A tight budget stops the search without a verdict.
print(attack_by_word_search(kp.public_key, cipher, budget=1).as_text())
