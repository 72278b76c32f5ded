"""Text formats: automata, words, plaintexts, and Graphviz export.

Automaton file::

    pfa 1
    states <n>
    alphabet <letters>
    t <src> <letter> <dst>
    ...
    end

Letters are listed in the order ``a b 0 1``; transitions are sorted by
source state, then letter.  Lines end with LF.  Equal automata serialize
to identical bytes.
"""

from __future__ import annotations

from pathlib import Path

from .automaton import Pfa, as_letter, check_word
from .encrypt import check_plaintext
from .errors import InvalidAutomaton

__all__ = [
    "dumps_pfa",
    "loads_pfa",
    "save_pfa",
    "load_pfa",
    "save_word",
    "load_word",
    "save_plaintext",
    "load_plaintext",
    "to_dot",
]

FORMAT_VERSION = "1"


def dumps_pfa(pfa: Pfa) -> str:
    lines = [f"pfa {FORMAT_VERSION}", f"states {pfa.state_count}",
             "alphabet " + " ".join(x.value for x in pfa.alphabet)]
    lines += [f"t {q} {x.value} {p}" for q, x, p in pfa.transitions()]
    lines.append("end")
    return "\n".join(lines) + "\n"


def loads_pfa(text: str) -> Pfa:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    def bad(i, why):
        return InvalidAutomaton(f"line {i + 1}: {why}")

    if len(lines) < 4:
        raise InvalidAutomaton("automaton file is truncated")
    if lines[0] != f"pfa {FORMAT_VERSION}":
        raise bad(0, "expected 'pfa 1' header")
    head, _, count = lines[1].partition(" ")
    if head != "states" or not count.isdigit():
        raise bad(1, "expected 'states <n>'")
    n = int(count)
    head, _, letters = lines[2].partition(" ")
    if head != "alphabet":
        raise bad(2, "expected 'alphabet ...'")
    alphabet = [as_letter(x) for x in letters.split()]
    if lines[-1] != "end":
        raise bad(len(lines) - 1, "expected 'end'")
    trans = {}
    for i in range(3, len(lines) - 1):
        parts = lines[i].split(" ")
        if len(parts) != 4 or parts[0] != "t" or not parts[1].isdigit() or not parts[3].isdigit():
            raise bad(i, f"malformed transition {lines[i]!r}")
        key = (int(parts[1]), as_letter(parts[2]))
        if key in trans:
            raise bad(i, "duplicate transition")
        if key[0] >= n:
            raise bad(i, "source state out of range")
        trans[key] = int(parts[3])
    return Pfa(n, alphabet, trans)


def save_pfa(pfa: Pfa, path) -> None:
    Path(path).write_text(dumps_pfa(pfa), encoding="ascii", newline="\n")


def load_pfa(path) -> Pfa:
    return loads_pfa(Path(path).read_text(encoding="ascii"))


def _one_line(path) -> str:
    text = Path(path).read_text(encoding="ascii")
    lines = text.splitlines()
    if len(lines) > 1:
        raise ValueError(f"{path}: expected a single line")
    return lines[0].strip() if lines else ""


def save_word(w: str, path) -> None:
    Path(path).write_text(check_word(w) + "\n", encoding="ascii", newline="\n")


def load_word(path) -> str:
    return check_word(_one_line(path))


def save_plaintext(u: str, path) -> None:
    Path(path).write_text(check_plaintext(u) + "\n", encoding="ascii", newline="\n")


def load_plaintext(path) -> str:
    return check_plaintext(_one_line(path))


def to_dot(pfa: Pfa, name: str = "pfa") -> str:
    """Graphviz digraph; parallel edges are merged into one comma-labelled edge."""
    edges = {}
    for q, x, p in pfa.transitions():
        edges.setdefault((q, p), []).append(x.value)
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    lines += [f"  {q};" for q in range(pfa.state_count)]
    lines += [f'  {q} -> {p} [label="{",".join(xs)}"];' for (q, p), xs in sorted(edges.items())]
    lines.append("}")
    return "\n".join(lines) + "\n"
