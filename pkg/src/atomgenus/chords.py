"""Framed chord diagrams as signed double-occurrence words.

A diagram is a word in which every chord label occurs exactly twice, plus a
sign per chord.  Text form: whitespace-separated labels, then ``;``, then
sign assignments ``label:+`` / ``label:-`` (or a bare run like ``++-``
assigned to labels in ascending order).  Omitted signs default to ``+``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .gf2 import Gf2Matrix


class DiagramError(ValueError):
    """Malformed chord diagram input."""


@dataclass(frozen=True)
class FramedChordDiagram:
    word: tuple[int, ...]
    negatives: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        counts: dict[int, int] = {}
        for label in self.word:
            counts[label] = counts.get(label, 0) + 1
        for label, n in counts.items():
            if n != 2:
                raise DiagramError(f"label {label} occurs {n} times (expected 2)")
        unknown = set(self.negatives) - set(counts)
        if unknown:
            raise DiagramError(f"sign given for unknown label(s) {sorted(unknown)}")
        object.__setattr__(self, "negatives", frozenset(self.negatives))

    @property
    def k(self) -> int:
        return len(self.word) // 2

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.word)))

    @property
    def signs(self) -> dict[int, int]:
        return {lab: -1 if lab in self.negatives else 1 for lab in self.labels}

    def sign(self, label: int) -> int:
        if label not in set(self.word):
            raise DiagramError(f"unknown label {label}")
        return -1 if label in self.negatives else 1

    def endpoints(self, label: int) -> tuple[int, int]:
        pos = [i for i, lab in enumerate(self.word) if lab == label]
        if len(pos) != 2:
            raise DiagramError(f"unknown label {label}")
        return pos[0], pos[1]

    def all_positive(self) -> bool:
        return not self.negatives


EMPTY = FramedChordDiagram(())

_SIGN_RUN = re.compile(r"^[+-]+$")


def parse(text: str) -> FramedChordDiagram:
    """Parse the text form of a framed chord diagram."""
    body = text.split("#", 1)[0].strip()
    if ";" in body:
        word_part, sign_part = body.split(";", 1)
    else:
        word_part, sign_part = body, ""
    word_tokens = word_part.split()
    word = []
    for tok in word_tokens:
        try:
            word.append(int(tok))
        except ValueError:
            raise DiagramError(f"bad chord label {tok!r}") from None
    labels = sorted(set(word))
    signs: dict[int, int] = {}
    run_cursor = 0
    for tok in sign_part.split():
        if _SIGN_RUN.match(tok):
            for ch in tok:
                if run_cursor >= len(labels):
                    raise DiagramError("more signs than chords")
                lab = labels[run_cursor]
                if lab in signs:
                    raise DiagramError(f"duplicate sign for label {lab}")
                signs[lab] = 1 if ch == "+" else -1
                run_cursor += 1
        elif ":" in tok:
            lab_s, sign_s = tok.split(":", 1)
            try:
                lab = int(lab_s)
            except ValueError:
                raise DiagramError(f"bad sign assignment {tok!r}") from None
            if sign_s not in ("+", "-"):
                raise DiagramError(f"bad sign {sign_s!r} for label {lab}")
            if lab in signs:
                raise DiagramError(f"duplicate sign for label {lab}")
            signs[lab] = 1 if sign_s == "+" else -1
        else:
            raise DiagramError(f"bad sign token {tok!r}")
    negatives = frozenset(lab for lab, s in signs.items() if s < 0)
    return FramedChordDiagram(tuple(word), negatives)


def canonical(d: FramedChordDiagram) -> FramedChordDiagram:
    """Rotate the word to a canonical start (smallest label, then lex order)."""
    if not d.word:
        return d
    low = min(d.word)
    n = len(d.word)
    best = None
    for r in range(n):
        if d.word[r] == low:
            rot = d.word[r:] + d.word[:r]
            if best is None or rot < best:
                best = rot
    return FramedChordDiagram(best, d.negatives)


def serialize(d: FramedChordDiagram) -> str:
    """Canonical text form; round-trips with :func:`parse`."""
    c = canonical(d)
    if not c.word:
        return ";"
    word = " ".join(str(lab) for lab in c.word)
    signs = " ".join(f"{lab}:{'-' if lab in c.negatives else '+'}" for lab in c.labels)
    return f"{word} ; {signs}"


def linked(d: FramedChordDiagram, a: int, b: int) -> bool:
    """Whether the endpoints of chords ``a`` and ``b`` alternate on the circle."""
    p1, p2 = d.endpoints(a)
    q1, q2 = d.endpoints(b)
    return (p1 < q1 < p2 < q2) or (q1 < p1 < q2 < p2)


def interlacement_matrix(d: FramedChordDiagram) -> Gf2Matrix:
    """Symmetric GF(2) matrix: off-diagonal 1 for linked chords, diagonal 1
    for negative chords.  Row/column order is ascending label order."""
    labels = d.labels
    pos = {lab: d.endpoints(lab) for lab in labels}
    rows = []
    for i, a in enumerate(labels):
        bits = 1 << i if a in d.negatives else 0
        p1, p2 = pos[a]
        for j, b in enumerate(labels):
            if i == j:
                continue
            q1, q2 = pos[b]
            if (p1 < q1 < p2 < q2) or (q1 < p1 < q2 < p2):
                bits |= 1 << j
        rows.append(bits)
    return Gf2Matrix(len(labels), tuple(rows))


def is_d_diagram(d: FramedChordDiagram) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """All chords positive and interlacement graph bipartite.

    Returns ``(True, (side0, side1))`` with a 2-colouring witness, or
    ``(False, None)``.  Breadth-first colouring per component, lowest label
    first; O(k^2) including the adjacency scan.
    """
    if d.negatives:
        return False, None
    labels = d.labels
    pos: dict[int, list[int]] = {}
    for i, lab in enumerate(d.word):
        pos.setdefault(lab, []).append(i)
    adj: dict[int, list[int]] = {lab: [] for lab in labels}
    for i, a in enumerate(labels):
        p1, p2 = pos[a]
        for b in labels[i + 1 :]:
            q1, q2 = pos[b]
            if (p1 < q1 < p2 < q2) or (q1 < p1 < q2 < p2):
                adj[a].append(b)
                adj[b].append(a)
    colour: dict[int, int] = {}
    for root in labels:
        if root in colour:
            continue
        colour[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in adj[v]:
                if w not in colour:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False, None
    side0 = tuple(sorted(lab for lab in labels if colour[lab] == 0))
    side1 = tuple(sorted(lab for lab in labels if colour[lab] == 1))
    return True, (side0, side1)


def connected_sum(d1: FramedChordDiagram, d2: FramedChordDiagram) -> FramedChordDiagram:
    """Concatenate the two words at their canonical break points.

    Labels of ``d2`` are shifted by a deterministic offset when they collide
    with labels of ``d1``.
    """
    if set(d1.word) & set(d2.word):
        offset = max(d1.word) if d1.word else 0
        shift = {lab: lab + offset for lab in set(d2.word)}
    else:
        shift = {lab: lab for lab in set(d2.word)}
    word = d1.word + tuple(shift[lab] for lab in d2.word)
    negatives = d1.negatives | frozenset(shift[lab] for lab in d2.negatives)
    return FramedChordDiagram(word, negatives)


def subdiagram(d: FramedChordDiagram, labels: Iterable[int]) -> FramedChordDiagram:
    """Delete all endpoints of chords not in ``labels``."""
    keep = set(labels)
    unknown = keep - set(d.word)
    if unknown:
        raise DiagramError(f"unknown label(s) {sorted(unknown)}")
    word = tuple(lab for lab in d.word if lab in keep)
    return FramedChordDiagram(word, d.negatives & keep)


def interval_mutation(d: FramedChordDiagram, start: int, stop: int) -> FramedChordDiagram:
    """Reverse the subword at positions ``[start, stop)``.

    Every chord must have both endpoints inside the range or both outside;
    a straddling chord is an error.  The interlacement matrix is unchanged.
    """
    n = len(d.word)
    if not (0 <= start <= stop <= n):
        raise DiagramError(f"arc [{start}, {stop}) out of range for word length {n}")
    inside = d.word[start:stop]
    counts: dict[int, int] = {}
    for lab in inside:
        counts[lab] = counts.get(lab, 0) + 1
    for lab, c in counts.items():
        if c == 1:
            raise DiagramError(f"chord {lab} straddles the arc boundary")
    word = d.word[:start] + tuple(reversed(inside)) + d.word[stop:]
    return FramedChordDiagram(word, d.negatives)
