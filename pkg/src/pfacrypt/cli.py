"""Command-line entry point: ``pfacrypt <command> ...``.

Exit status is 0 on success, 1 on a domain error (bad key, malformed
ciphertext, failed check) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .attack import attack_by_copy_search, attack_by_word_search
from .clusters import analyze_a_clusters
from .decrypt import decrypt
from .encrypt import EncryptionParams, encrypt
from .errors import PfaError
from .io import load_pfa, load_plaintext, load_word, save_pfa, save_plaintext, save_word, to_dot
from .keygen import KeyGenParams, generate_keypair, validate_keypair
from .sync import is_careful_sync_word

def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        pair = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if pair[0] < 0 or pair[1] < pair[0]:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return pair


def cmd_keygen(args) -> int:
    kp = generate_keypair(KeyGenParams(args.states, args.word_len, args.seed, args.max_retries))
    report = validate_keypair(kp)
    if not report.ok:
        print(report, file=sys.stderr)
        return 1
    save_pfa(kp.public_key, args.pub)
    save_word(kp.private_key, args.priv)
    print(f"wrote {args.pub} ({kp.public_key.state_count} states) and {args.priv}")
    return 0


def cmd_encrypt(args) -> int:
    extended = args.extended or args.clusters > 0 or args.extra_states != (0, 0)
    params = EncryptionParams(
        seed=args.seed, noise=args.noise, extended=extended, clusters=args.clusters,
        cluster_size=args.cluster_size, extra_states=args.extra_states,
    )
    cipher = encrypt(load_pfa(args.pub), load_plaintext(args.infile), params)
    save_pfa(cipher.automaton, args.out)
    print(f"wrote {args.out} ({cipher.automaton.state_count} states)")
    return 0


def cmd_decrypt(args) -> int:
    u = decrypt(load_pfa(args.cipher), load_word(args.priv))
    save_plaintext(u, args.out)
    return 0


def cmd_check(args) -> int:
    landing = is_careful_sync_word(load_pfa(args.pfa), args.word)
    if landing is None:
        print("NOT-SYNCHRONIZING")
        return 1
    print(landing)
    return 0


def cmd_attack(args) -> int:
    pub = load_pfa(args.pub)
    cipher = load_pfa(args.cipher) if args.cipher else None
    if args.mode == "copy":
        if cipher is None:
            print("copy mode needs --cipher", file=sys.stderr)
            return 2
        report = attack_by_copy_search(cipher, pub, args.budget)
    else:
        report = attack_by_word_search(pub, cipher, args.budget)
    sys.stdout.write(report.as_text())
    return 0 if report.success else 1


def cmd_inspect(args) -> int:
    pfa = load_pfa(args.pfa)
    letters = "".join(x.value for x in pfa.alphabet)
    print(f"states={pfa.state_count} alphabet={letters} transitions={pfa.transition_count()}")
    for x in pfa.alphabet:
        undefined = pfa.state_count - int((pfa.column(x) >= 0).sum())
        print(f"letter {x}: undefined on {undefined} states")
    if args.clusters:
        for k, c in enumerate(analyze_a_clusters(pfa)):
            print(f"cluster {k}: size={len(c.states)} center={sorted(c.center)} depth={c.depth}")
            for br in c.branches:
                print(f"  branch {list(br.states)} -> {br.destination}")
    if args.dot:
        with open(args.dot, "w", encoding="ascii", newline="\n") as fh:
            fh.write(to_dot(pfa))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pfacrypt", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key pair")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--word-len", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-retries", type=int, default=100)
    p.add_argument("--pub", required=True)
    p.add_argument("--priv", required=True)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt a bit string")
    p.add_argument("--pub", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--extended", action="store_true")
    p.add_argument("--clusters", type=int, default=0)
    p.add_argument("--cluster-size", type=_range, default=(2, 4))
    p.add_argument("--extra-states", type=_range, default=(0, 0))
    p.add_argument("--noise", type=_range, default=(0, 2))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt with a private word")
    p.add_argument("--cipher", required=True)
    p.add_argument("--priv", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("check", help="test a word for careful synchronization")
    p.add_argument("--pfa", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("attack", help="try to decrypt without the private key")
    p.add_argument("--pub", required=True)
    p.add_argument("--cipher")
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--mode", choices=("word", "copy"), default="word")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("inspect", help="summarize an automaton")
    p.add_argument("--pfa", required=True)
    p.add_argument("--clusters", action="store_true")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (PfaError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
