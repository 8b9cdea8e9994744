"""Surface spectrum of checkerboard-colourable embeddings.

Each way of splitting the chords of a framed chord diagram into two families
I and J (one per colour of the checkerboard) determines a closed surface
with Euler characteristic 2 − (rank M_I + rank M_J), where M_S is the
principal interlacement submatrix on S over GF(2).  Minimizing or maximizing
the rank sum over all 2^k splittings gives the genus (orientable case: all
chords positive) or crosscap number (some negative chord) spectrum.

"Embeds in surface S" means: some splitting achieves exactly the Euler
characteristic and orientability of S, since checkerboard embeddings are
cellular.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .chords import FramedChordDiagram, interlacement_matrix, is_d_diagram, linked
from .gf2 import Gf2Matrix, mask_rank

EXHAUSTIVE_THRESHOLD = 24


def _labels_of_mask(labels: tuple[int, ...], mask: int) -> tuple[int, ...]:
    return tuple(lab for i, lab in enumerate(labels) if mask >> i & 1)


@dataclass(frozen=True)
class GenusReport:
    """Aggregated result of the rank-sum optimization over all splittings."""

    k: int
    orientable: bool
    min_rank_sum: int
    max_rank_sum: int
    witness_min: tuple[int, ...]  # chord labels on the I side, lowest mask
    witness_max: tuple[int, ...]
    rank_sums: tuple[int, ...]  # every achieved value, ascending
    exhaustive: bool  # False when branch-and-bound skipped interior values

    @property
    def min_genus_or_crosscap(self) -> int:
        return self.min_rank_sum // 2 if self.orientable else self.min_rank_sum

    @property
    def max_genus_or_crosscap(self) -> int:
        return self.max_rank_sum // 2 if self.orientable else self.max_rank_sum

    def surface_name(self, rank_sum: int) -> str:
        if self.orientable:
            g = rank_sum // 2
            return {0: "sphere", 1: "torus"}.get(g, f"genus-{g}")
        return {1: "RP^2", 2: "Klein bottle"}.get(rank_sum, f"crosscap-{rank_sum}")

    @property
    def surfaces(self) -> tuple[str, ...]:
        return tuple(self.surface_name(r) for r in self.rank_sums)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "orientable": self.orientable,
            "min_rank_sum": self.min_rank_sum,
            "max_rank_sum": self.max_rank_sum,
            "min_genus_or_crosscap": self.min_genus_or_crosscap,
            "max_genus_or_crosscap": self.max_genus_or_crosscap,
            "witness_min": list(self.witness_min),
            "witness_max": list(self.witness_max),
            "surfaces": list(self.surfaces),
        }


def rank_sum(m: Gf2Matrix, mask: int) -> int:
    """rank M_I + rank M_J for the splitting whose I side is ``mask``."""
    full = (1 << m.dim) - 1
    return mask_rank(m.rows, mask) + mask_rank(m.rows, full & ~mask)


def euler_characteristic(d: FramedChordDiagram, i_labels) -> int:
    """Euler characteristic 2 − rank sum of the splitting with I = i_labels."""
    i_set = frozenset(i_labels)
    unknown = i_set - set(d.labels)
    if unknown:
        raise ValueError(f"labels {sorted(unknown)} are not chords of the diagram")
    m = interlacement_matrix(d)
    mask = 0
    for i, lab in enumerate(d.labels):
        if lab in i_set:
            mask |= 1 << i
    return 2 - rank_sum(m, mask)


def _scan_range(
    rows: tuple[int, ...], dim: int, start: int, stop: int
) -> tuple[int, int, int, int, int]:
    """Min/max rank sum with lowest-mask witnesses over masks [start, stop),
    plus a bitset of achieved values."""
    full = (1 << dim) - 1
    best_lo, best_hi = dim + dim + 1, -1
    w_lo = w_hi = 0
    achieved = 0
    for mask in range(start, stop):
        s = mask_rank(rows, mask) + mask_rank(rows, full & ~mask)
        achieved |= 1 << s
        if s < best_lo:
            best_lo, w_lo = s, mask
        if s > best_hi:
            best_hi, w_hi = s, mask
    return best_lo, w_lo, best_hi, w_hi, achieved


def _thread_count(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get("ATOMGENUS_THREADS", "")
        threads = int(env) if env.isdigit() and int(env) > 0 else 1
    return max(1, threads)


def _exhaustive_spectrum(
    m: Gf2Matrix, threads: int
) -> tuple[int, int, int, int, int]:
    total = 1 << m.dim
    if threads <= 1 or total < 1 << 12:
        return _scan_range(m.rows, m.dim, 0, total)
    chunk = -(-total // threads)
    bounds = [(i * chunk, min((i + 1) * chunk, total)) for i in range(threads)]
    bounds = [(a, b) for a, b in bounds if a < b]
    with ProcessPoolExecutor(max_workers=len(bounds)) as pool:
        parts = list(
            pool.map(_scan_range, *zip(*((m.rows, m.dim, a, b) for a, b in bounds)))
        )
    best_lo, best_hi = m.dim * 2 + 1, -1
    w_lo = w_hi = 0
    achieved = 0
    for lo, wl, hi, wh, ach in parts:  # ranges are ascending, so first win = lowest mask
        achieved |= ach
        if lo < best_lo:
            best_lo, w_lo = lo, wl
        if hi > best_hi:
            best_hi, w_hi = hi, wh
    return best_lo, w_lo, best_hi, w_hi, achieved


def _bb_extremes(m: Gf2Matrix) -> tuple[int, int, int, int]:
    """Branch-and-bound min and max rank sum with deterministic witnesses.

    Chords are assigned one side at a time, densest (by interlacement
    degree) first.  Principal-submatrix rank never decreases when a chord is
    added, so the current rank sum bounds the minimum from below; each
    unplaced chord can raise the sum by at most two (one new row and one new
    column on a single side), giving the upper bound for the maximum.
    """
    dim = m.dim
    rows = m.rows
    order = sorted(range(dim), key=lambda i: (-bin(rows[i]).count("1"), i))

    def extreme(maximize: bool) -> tuple[int, int]:
        best = -1 if maximize else 2 * dim + 1
        best_mask = 0

        def dfs(depth: int, mask_i: int, mask_j: int, r_i: int, r_j: int) -> None:
            nonlocal best, best_mask
            cur = r_i + r_j
            if maximize:
                # a chord adds a row and column to one side: rank sum +≤2
                if cur + 2 * (dim - depth) <= best:
                    return
            elif cur >= best:
                return
            if depth == dim:
                best, best_mask = cur, mask_i
                return
            bit = 1 << order[depth]
            dfs(depth + 1, mask_i | bit, mask_j, mask_rank(rows, mask_i | bit), r_j)
            dfs(depth + 1, mask_i, mask_j | bit, r_i, mask_rank(rows, mask_j | bit))

        dfs(0, 0, 0, 0, 0)
        return best, best_mask

    lo, w_lo = extreme(False)
    hi, w_hi = extreme(True)
    return lo, w_lo, hi, w_hi


def genus_spectrum(
    d: FramedChordDiagram,
    threshold: int = EXHAUSTIVE_THRESHOLD,
    threads: int | None = None,
) -> GenusReport:
    """Exact min and max rank sum over all splittings, with witnesses.

    Exhaustive over the 2^k splittings for k ≤ ``threshold``; branch-and-
    bound above (then only the extremes, not every interior value, are
    reported and ``exhaustive`` is False).
    """
    m = interlacement_matrix(d)
    orientable = d.all_positive()
    if d.k == 0:
        return GenusReport(0, True, 0, 0, (), (), (0,), True)
    if d.k <= threshold:
        lo, w_lo, hi, w_hi, achieved = _exhaustive_spectrum(m, _thread_count(threads))
        sums = tuple(s for s in range(2 * d.k + 1) if achieved >> s & 1)
        exhaustive = True
    else:
        lo, w_lo, hi, w_hi = _bb_extremes(m)
        sums = tuple(sorted({lo, hi}))
        exhaustive = False
    return GenusReport(
        d.k,
        orientable,
        lo,
        hi,
        _labels_of_mask(d.labels, w_lo),
        _labels_of_mask(d.labels, w_hi),
        sums,
        exhaustive,
    )


def is_planar(d: FramedChordDiagram) -> bool:
    """Sphere embeddability; quadratic-time bipartiteness check."""
    return is_d_diagram(d)[0]


def orientability_class(d: FramedChordDiagram) -> str:
    return "orientable" if d.all_positive() else "non-orientable"


def embeds_in_rp2(
    d: FramedChordDiagram,
) -> tuple[bool, tuple[int, ...] | None]:
    """Projective-plane embeddability: some splitting with rank sum exactly 1.

    Structural search: rank sum 1 needs one side to be a rank-1 block — all
    negative chords on that side, pairwise interlaced — and every other
    chord unlinked from all chords sharing its side.  Returns a witness I
    (the rank-1 side) when embeddable.
    """
    negs = sorted(d.negatives)
    if not negs:
        return False, None
    for a in negs:
        for b in negs:
            if a < b and not linked(d, a, b):
                return False, None
    # positives must be 2-colored (side 0 = with negatives, side 1 = other)
    # such that: any positive linked to a negative goes to side 1; positives
    # on the same side are pairwise unlinked, EXCEPT side-0 positives must
    # also be unlinked from negatives (already forced to side 1 if linked).
    pos = [lab for lab in d.labels if lab not in d.negatives]
    side: dict[int, int] = {}
    for p in pos:
        if any(linked(d, p, ng) for ng in negs):
            side[p] = 1
    # remaining positives: place greedily with backtracking (constraint
    # graph is "linked positives must differ", i.e. 2-coloring of the
    # interlacement graph restricted to positives, with some nodes pinned)
    free = [p for p in pos if p not in side]

    def assign(i: int) -> bool:
        if i == len(free):
            return True
        p = free[i]
        for s in (0, 1):
            ok = all(
                side.get(q) != s or not linked(d, p, q) for q in pos if q in side
            )
            if ok:
                side[p] = s
                if assign(i + 1):
                    return True
                del side[p]
        return False

    # pinned nodes must already be consistent among themselves
    for p in pos:
        if p in side:
            for q in pos:
                if q in side and p < q and side[p] == side[q] and linked(d, p, q):
                    return False, None
    if not assign(0):
        return False, None
    witness = tuple(sorted(negs + [p for p in pos if side[p] == 0]))
    return True, witness


def _rank_sum_exactly(
    d: FramedChordDiagram, target: int
) -> tuple[bool, tuple[int, ...] | None]:
    m = interlacement_matrix(d)
    full = (1 << d.k) - 1
    for mask in range(1 << d.k):
        if mask_rank(m.rows, mask) + mask_rank(m.rows, full & ~mask) == target:
            return True, _labels_of_mask(d.labels, mask)
    return False, None


def embeds_in_klein(
    d: FramedChordDiagram,
) -> tuple[bool, tuple[int, ...] | None]:
    """Klein-bottle embeddability: at least one negative chord and some
    splitting with rank sum exactly 2 (exhaustive over splittings)."""
    if not d.negatives:
        return False, None
    return _rank_sum_exactly(d, 2)


def diagram_surgery(d: FramedChordDiagram, c: int) -> FramedChordDiagram:
    """Surgery along chord ``c``: reverse one of the two arcs between its
    endpoints, delete ``c``, and flip the sign of every chord with exactly
    one endpoint on the reversed arc.

    On interlacement matrices this is the Schur complement at ``c`` (for a
    negative chord, whose diagonal entry is 1): entries m_ab with both a and
    b linked to ``c`` are toggled, and signs of chords linked to ``c`` flip.
    """
    if c not in d.labels:
        raise ValueError(f"no chord labelled {c}")
    i, j = d.endpoints(c)
    word = list(d.word)
    new = tuple(word[:i] + word[i + 1 : j][::-1] + word[j + 1 :])
    arc = range(i + 1, j)
    negs = set(d.negatives) - {c}
    for lab in set(new):
        first, second = d.endpoints(lab)
        if (first in arc) != (second in arc):
            negs.symmetric_difference_update({lab})
    return FramedChordDiagram(new, frozenset(negs))


def _family_rank(entry, sign, labs) -> int | None:
    """0 or 1 when the family matches the structural rank-0/rank-1 shapes
    (rank 1: nonempty clique of negative chords, everything else unlinked
    and positive within the family); None otherwise."""
    negs = [a for a in labs if sign(a)]
    for x, a in enumerate(labs):
        for b in labs[x + 1 :]:
            want = 1 if (sign(a) and sign(b)) else 0
            if entry(a, b) != want:
                return None
    return 1 if negs else 0


def klein_by_surgery(d: FramedChordDiagram) -> bool:
    """Structural Klein-bottle test via surgery along a negative chord.

    Surgery along a negative chord ``c`` consumes one crosscap; the
    remaining chords must then split into two families contributing rank
    sum exactly 1.  Because the surgery is a Schur complement, the family
    on ``c``'s side of the splitting is measured in the surgered diagram's
    interlacement matrix while the other family keeps the original matrix
    (validated against the exhaustive recognizer, not asserted).
    """
    if not d.negatives:
        return False
    m = interlacement_matrix(d)
    labs = d.labels
    idx = {lab: i for i, lab in enumerate(labs)}
    for c in sorted(d.negatives):
        s = diagram_surgery(d, c)
        ms = interlacement_matrix(s)
        sidx = {lab: i for i, lab in enumerate(s.labels)}
        rest = [lab for lab in labs if lab != c]

        def s_entry(a, b):
            return ms.entry(sidx[a], sidx[b])

        def s_sign(a):
            return a in s.negatives

        def o_entry(a, b):
            return m.entry(idx[a], idx[b])

        def o_sign(a):
            return a in d.negatives

        n = len(rest)
        for mask in range(1 << n):
            fam_i = [rest[i] for i in range(n) if mask >> i & 1]
            fam_j = [rest[i] for i in range(n) if not mask >> i & 1]
            ri = _family_rank(s_entry, s_sign, fam_i)
            rj = _family_rank(o_entry, o_sign, fam_j)
            if ri is not None and rj is not None and ri + rj == 1:
                return True
    return False
