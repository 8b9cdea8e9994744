"""Band surgery on 1-manifolds and circle counting.

This is the geometric engine: it traces circles of a marked 1-manifold under
band surgeries (plain bands for positive chords, overtwisted bands for
negative ones) with no reference to matrix algebra, so it can serve as an
independent oracle for the rank-based circle counts.

Two routes are provided:

* :class:`OneManifold` / :func:`surgery` — sequential splice on cyclic
  lists, one band at a time, with explicit arc reversal.  Each marked point
  carries a flip flag recording whether its original orientation arrow
  agrees with the list direction, so later surgeries can be performed with
  respect to the orientations of the *initial* circles.
* :func:`circle_count_after` and friends — all bands reconnected at once.
  Band attachments at distinct marked points commute, so the final manifold
  is a set of circle arcs glued by a fixed involution; components are
  counted by a linear walk.  This is the fast path used by the enumeration
  suites, and is cross-checked against the splice engine in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .chords import DiagramError, FramedChordDiagram

Point = Hashable
PLAIN = "plain"
OVERTWISTED = "overtwisted"


@dataclass(frozen=True)
class BandAttachment:
    endpoints: tuple[Point, Point]
    twist: str = PLAIN

    def __post_init__(self) -> None:
        if self.endpoints[0] == self.endpoints[1]:
            raise ValueError("band endpoints must be distinct")
        if self.twist not in (PLAIN, OVERTWISTED):
            raise ValueError(f"unknown twist {self.twist!r}")


@dataclass(frozen=True)
class OneManifold:
    """Oriented circles with marked points.

    Each circle is a cyclic tuple of ``(point, flipped)`` pairs; ``flipped``
    records whether the point's original arrow opposes the tuple direction.
    Empty tuples are legitimate circles and are counted.
    """

    circles: tuple[tuple[tuple[Point, bool], ...], ...]

    @classmethod
    def from_points(cls, circles: Iterable[Iterable[Point]]) -> OneManifold:
        return cls(tuple(tuple((p, False) for p in c) for c in circles))

    @property
    def circle_count(self) -> int:
        return len(self.circles)

    def _locate(self, point: Point) -> tuple[int, int]:
        for ci, circle in enumerate(self.circles):
            for i, (p, _) in enumerate(circle):
                if p == point:
                    return ci, i
        raise KeyError(f"unknown marked point {point!r}")


def _rev(arc: tuple[tuple[Point, bool], ...]) -> tuple[tuple[Point, bool], ...]:
    return tuple((p, not f) for p, f in reversed(arc))


def surgery(m: OneManifold, band: BandAttachment) -> OneManifold:
    """Cut at the band's endpoints and reconnect.

    Plain bands reconnect coherently with the original arrows (splitting one
    circle in two, or merging two circles); overtwisted bands reconnect with
    one arc reversed.  The two marked points are consumed.
    """
    x, y = band.endpoints
    cx, ix = m._locate(x)
    cy, iy = m._locate(y)
    fx = m.circles[cx][ix][1]
    fy = m.circles[cy][iy][1]
    coherent = (band.twist == PLAIN) == (fx == fy)
    rest = [c for ci, c in enumerate(m.circles) if ci not in (cx, cy)]
    if cx == cy:
        circle = m.circles[cx]
        n = len(circle)
        rot = circle[ix:] + circle[:ix]  # rot[0] is x
        j = next(i for i in range(1, n) if rot[i][0] == y)
        arc_a = rot[1:j]
        arc_b = rot[j + 1 :]
        if coherent:
            rest.extend([arc_a, arc_b])
        else:
            rest.append(arc_a + _rev(arc_b))
    else:
        ca = m.circles[cx]
        cb = m.circles[cy]
        arc_a = ca[ix + 1 :] + ca[:ix]
        arc_b = cb[iy + 1 :] + cb[:iy]
        if coherent:
            rest.append(arc_a + arc_b)
        else:
            rest.append(arc_a + _rev(arc_b))
    return OneManifold(tuple(rest))


def _component_count(
    circles: Sequence[Sequence[int]],
    chords: Iterable[tuple[int, int, bool]],
) -> int:
    """Count circles after reconnecting all bands at once.

    ``circles`` lists marked points (arbitrary integer ids) in orientation
    order; every point must occur in exactly one chord.  Each point p owns
    two loose-end tokens once cut: 2p (the side before p) and 2p+1 (after).
    The circle arcs give one perfect matching on tokens, the band
    reconnections another; components are the alternating cycles.
    """
    mate_arc: dict[int, int] = {}
    empty = 0
    for circle in circles:
        if not circle:
            empty += 1
            continue
        n = len(circle)
        for i, p in enumerate(circle):
            q = circle[(i + 1) % n]
            mate_arc[2 * p + 1] = 2 * q
            mate_arc[2 * q] = 2 * p + 1
    mate_band: dict[int, int] = {}
    for x, y, positive in chords:
        if positive:
            pairs = ((2 * x, 2 * y + 1), (2 * y, 2 * x + 1))
        else:
            pairs = ((2 * x, 2 * y), (2 * x + 1, 2 * y + 1))
        for a, b in pairs:
            mate_band[a] = b
            mate_band[b] = a
    count = empty
    seen: set[int] = set()
    for start in mate_arc:
        if start in seen:
            continue
        count += 1
        t = start
        while True:
            seen.add(t)
            u = mate_arc[t]
            seen.add(u)
            t = mate_band[u]
            if t == start:
                break
    return count


def circle_count_after(d: FramedChordDiagram, labels: Iterable[int]) -> int:
    """Number of circles after surgery along the chords in ``labels``.

    Builds one circle carrying the endpoints of the selected chords in word
    order and performs a plain/overtwisted surgery per chord by direct
    tracing.
    """
    keep = set(labels)
    unknown = keep - set(d.word)
    if unknown:
        raise DiagramError(f"unknown label(s) {sorted(unknown)}")
    points = [i for i, lab in enumerate(d.word) if lab in keep]
    first: dict[int, int] = {}
    chords = []
    for pos in points:
        lab = d.word[pos]
        if lab in first:
            chords.append((first[lab], pos, lab not in d.negatives))
        else:
            first[lab] = pos
    return _component_count([points], chords)


def circle_count_after_sequential(d: FramedChordDiagram, labels: Iterable[int]) -> int:
    """Same count via the splice engine, one surgery at a time."""
    keep = set(labels)
    unknown = keep - set(d.word)
    if unknown:
        raise DiagramError(f"unknown label(s) {sorted(unknown)}")
    points = [i for i, lab in enumerate(d.word) if lab in keep]
    m = OneManifold.from_points([points])
    for lab in sorted(keep):
        p, q = d.endpoints(lab)
        twist = PLAIN if lab not in d.negatives else OVERTWISTED
        m = surgery(m, BandAttachment((p, q), twist))
    return m.circle_count


def state_circle_counts(
    d: FramedChordDiagram, side_i: Iterable[int], side_j: Iterable[int]
) -> tuple[int, int]:
    """Circle counts of the two state curves of a splitting I | J."""
    i_set, j_set = set(side_i), set(side_j)
    labels = set(d.word)
    if i_set & j_set:
        raise DiagramError(f"splitting overlaps: {sorted(i_set & j_set)}")
    if i_set | j_set != labels:
        raise DiagramError(f"splitting misses label(s) {sorted(labels - (i_set | j_set))}")
    return circle_count_after(d, i_set), circle_count_after(d, j_set)


LEFT = "left"
RIGHT = "right"


def assignment_trace(d: FramedChordDiagram, sides: Sequence[str]) -> tuple[int, int]:
    """Trace the two-circle configuration of an endpoint side-assignment.

    ``sides[i]`` places word position ``i`` on the left or right circle.
    The left circle carries its points in word order; the right circle
    carries its points in reversed word order, reflecting that the second
    trace runs opposite to the first.  Chords are then reconnected with a
    plain band if positive and an overtwisted band if negative, in the trace
    orientations; a positive chord joining the two circles therefore acts as
    an orientation-reversing band with respect to the original circle.

    Returns ``(sign, circles)`` where sign is (-1)**(# right endpoints).
    """
    n = len(d.word)
    if len(sides) != n:
        raise DiagramError(f"assignment covers {len(sides)} of {n} endpoints")
    for s in sides:
        if s not in (LEFT, RIGHT):
            raise DiagramError(f"bad side {s!r}")
    left = [i for i in range(n) if sides[i] == LEFT]
    right = [i for i in range(n) if sides[i] == RIGHT]
    right.reverse()
    chords = []
    first: dict[int, int] = {}
    for pos, lab in enumerate(d.word):
        if lab in first:
            chords.append((first[lab], pos, lab not in d.negatives))
        else:
            first[lab] = pos
    count = _component_count([left, right], chords)
    sign = -1 if len(right) % 2 else 1
    return sign, count
