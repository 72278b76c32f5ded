import pytest

from pfacrypt import (
    EncryptionParams,
    KeyGenParams,
    Pfa,
    attack_by_copy_search,
    attack_by_word_search,
    decrypt,
    encrypt_basic,
    encrypt_extended,
    generate_keypair,
    is_careful_sync_word,
)

from corpus import trials


def test_word_attack_t1(t1):
    c = encrypt_basic(t1, "0110", EncryptionParams(seed=3))
    r = attack_by_word_search(t1, c.automaton)
    assert r.success and r.word == "ab" and r.plaintext == "0110"


def test_word_attack_without_cipher(t1):
    r = attack_by_word_search(t1)
    assert r.success and r.plaintext is None


def test_word_attack_budget():
    kp = generate_keypair(KeyGenParams(8, 10, seed=4))
    r = attack_by_word_search(kp.public_key, budget=1)
    assert r.status == "inconclusive"


def test_word_attack_no_word():
    pfa = Pfa(2, "ab", {(0, "a"): 0, (1, "a"): 1})
    assert attack_by_word_search(pfa).status == "no-word"


def test_report_is_key_value_text(t1):
    text = attack_by_word_search(t1).as_text()
    pairs = dict(line.split("=", 1) for line in text.splitlines())
    assert pairs["mode"] == "word" and pairs["status"] == "success" and pairs["word"] == "ab"
    assert int(pairs["visited"]) >= 1
    float(pairs["seconds"])


@pytest.mark.parametrize("extended", [False, True])
def test_found_word_decrypts_like_private_key(extended):
    for tr in trials(extended, 30):
        r = attack_by_word_search(tr.keypair.public_key, tr.cipher.automaton)
        assert is_careful_sync_word(tr.keypair.public_key, r.word) is not None
        assert r.plaintext == decrypt(tr.cipher.automaton, tr.keypair.private_key)


def test_copy_attack_basic_t1(t1):
    c = encrypt_basic(t1, "0", EncryptionParams(seed=2))
    r = attack_by_copy_search(c.automaton, t1)
    assert r.success and r.plaintext == "0"
    assert set(r.partition.classes) == set(c.trace.classes)


def test_copy_attack_extended_t1(t1):
    p = EncryptionParams(seed=5, extended=True, clusters=2, extra_states=(1, 2))
    c = encrypt_extended(t1, "101", p)
    r = attack_by_copy_search(c.automaton, t1)
    assert r.success and r.plaintext == "101"
    assert set(r.partition.classes) == set(c.trace.classes)


def test_copy_attack_zero_budget(t1):
    c = encrypt_basic(t1, "0", EncryptionParams(seed=2))
    assert attack_by_copy_search(c.automaton, t1, budget=0).status == "inconclusive"


def test_copy_attack_no_copy(t1):
    other = Pfa(3, "ab01", {(q, x): q for q in range(3) for x in "ab"})
    assert attack_by_copy_search(other, t1).status == "failed"


@pytest.mark.parametrize("extended", [False, True])
def test_copy_attack_when_conclusive_is_right(extended):
    for tr in trials(extended, 30):
        r = attack_by_copy_search(tr.cipher.automaton, tr.keypair.public_key)
        if r.success:
            assert r.plaintext == tr.plaintext
        else:
            assert r.status in {"ambiguous", "inconclusive", "failed"}
