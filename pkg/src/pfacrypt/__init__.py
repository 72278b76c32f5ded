"""Public-key encryption with carefully synchronizing partial automata."""

from .automaton import (
    BITS,
    LETTERS,
    SIGMA,
    Letter,
    Pfa,
    apply_letter_set,
    apply_word_set,
    disjoint_union,
    preimage,
    restrict_alphabet,
)
from .attack import AttackReport, attack_by_copy_search, attack_by_word_search
from .clusters import ClusterAnalysis, analyze_a_clusters
from .decrypt import (
    Partition,
    StructureReport,
    analyze_structure,
    compute_partition,
    decrypt,
    reconstruct_plaintext,
    recover_landing_states,
)
from .encrypt import (
    Ciphertext,
    EncryptionParams,
    compute_b_sets,
    encode_plaintext_path,
    encrypt,
    encrypt_basic,
    encrypt_extended,
)
from .errors import (
    BudgetExceeded,
    InvalidAutomaton,
    InvalidPublicKey,
    MalformedCiphertext,
    NotDecryptingWord,
    PfaError,
    RetriesExhausted,
    StructureUnresolved,
)
from .keygen import KeyGenParams, KeyPair, generate_keypair, validate_keypair
from .sync import (
    is_careful_sync_word,
    search_sync_word,
    shortest_careful_sync_word,
    stabilization_index,
)

__version__ = "0.1.0"
