"""Enumeration and random generation of framed chord diagrams.

Words are produced with canonical labelling (labels appear in first-use
order 1, 2, …) so each k-chord configuration occurs once; rotation
deduplication keeps one representative per cyclic class.
"""

from __future__ import annotations

import random
from typing import Iterator

from .chords import FramedChordDiagram


def double_occurrence_words(k: int) -> Iterator[tuple[int, ...]]:
    """All double-occurrence words on labels 1..k, canonically labelled."""
    if k == 0:
        yield ()
        return

    def gen(prefix: list[int], counts: list[int], used: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == 2 * k:
            yield tuple(prefix)
            return
        limit = min(used + 1, k)
        for lab in range(1, limit + 1):
            if counts[lab] < 2:
                counts[lab] += 1
                prefix.append(lab)
                yield from gen(prefix, counts, max(used, lab))
                prefix.pop()
                counts[lab] -= 1

    yield from gen([1], [0, 1] + [0] * (k - 1), 1)


def _rotation_class(word: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least canonically-relabelled rotation."""
    n = len(word)
    best = None
    for r in range(n):
        rot = word[r:] + word[:r]
        relabel: dict[int, int] = {}
        out = []
        for lab in rot:
            if lab not in relabel:
                relabel[lab] = len(relabel) + 1
            out.append(relabel[lab])
        t = tuple(out)
        if best is None or t < best:
            best = t
    return best if best is not None else ()


def canonical_words(k: int) -> list[tuple[int, ...]]:
    """One representative double-occurrence word per rotation class."""
    seen: set[tuple[int, ...]] = set()
    out = []
    for word in double_occurrence_words(k):
        cls = _rotation_class(word)
        if cls not in seen:
            seen.add(cls)
            out.append(cls)
    return out


def all_framed_diagrams(k: int, dedup_rotation: bool = True) -> Iterator[FramedChordDiagram]:
    """Every framed chord diagram with exactly k chords (all sign patterns)."""
    words = canonical_words(k) if dedup_rotation else list(double_occurrence_words(k))
    for word in words:
        for negbits in range(1 << k):
            negs = frozenset(lab for lab in range(1, k + 1) if negbits >> (lab - 1) & 1)
            yield FramedChordDiagram(word, negs)


def random_diagram(
    k: int, rng: random.Random, negative_probability: float = 0.5
) -> FramedChordDiagram:
    points = [lab for lab in range(1, k + 1) for _ in range(2)]
    rng.shuffle(points)
    negs = frozenset(
        lab for lab in range(1, k + 1) if rng.random() < negative_probability
    )
    return FramedChordDiagram(tuple(points), negs)
