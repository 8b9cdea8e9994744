"""Polynomial invariants of framed chord diagrams.

* ``kauffman_bracket`` — the state sum over chord subsets with weights
  ``a^(2|S|-k) * (-a^2 - a^-2)^corank(M_S)``.
* ``gen_fun_f`` — genus generating function: one monomial per splitting
  I | J of the chords into the two checkerboard colours.
* ``gen_fun_f_tilde`` — endpoint-assignment generating function over all
  2^(2k) ways of sending each chord endpoint to one of the two trace
  circles; the "good" sub-sum (both endpoints of every chord on the same
  circle) reproduces ``gen_fun_f`` in the circle-count convention.
* ``weight_system_gl`` — the gl(n) weight-system polynomial as the signed
  version of the same assignment sum.
* ``four_term_quadruples`` / ``check_relation`` — constructors and checkers
  for the four-term relation and its signed generalization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .chords import FramedChordDiagram, interlacement_matrix, linked
from .gf2 import mask_rank
from .laurent import LaurentPoly
from .surgery import LEFT, RIGHT, assignment_trace

ASSIGNMENT_CAP = 14


def kauffman_bracket(d: FramedChordDiagram) -> LaurentPoly:
    """State sum over all chord subsets S:
    a^(2|S| - k) * (-a^2 - a^-2)^(|S| - rank M_S)."""
    k = d.k
    m = interlacement_matrix(d)
    loop = LaurentPoly.from_dict("a", {2: -1, -2: -1})
    loop_powers = [LaurentPoly.const("a", 1)]
    for _ in range(k):
        loop_powers.append(loop_powers[-1] * loop)
    total = LaurentPoly.zero("a")
    for mask in range(1 << k):
        size = bin(mask).count("1")
        corank = size - mask_rank(m.rows, mask)
        total = total + loop_powers[corank].shift(2 * size - k)
    return total


def _splitting_rank_sums(d: FramedChordDiagram) -> list[int]:
    m = interlacement_matrix(d)
    full = (1 << d.k) - 1
    return [
        mask_rank(m.rows, mask) + mask_rank(m.rows, full & ~mask)
        for mask in range(1 << d.k)
    ]


def gen_fun_f(d: FramedChordDiagram, exponent: str = "circles") -> LaurentPoly:
    """Genus generating function: Σ over all 2^k splittings of x^e.

    ``exponent="circles"`` (default): e = state circle count = k + 2 − rank
    sum; this is the convention consistent with the degree theorems, the
    good-summand identity, and the weight-system comparison.
    ``exponent="genus"``: e = k + 2 − g with g the genus of the splitting's
    surface (rank sum / 2); only defined for all-positive diagrams, whose
    splittings are orientable with even per-side ranks.
    """
    if exponent not in ("circles", "genus"):
        raise ValueError(f"unknown exponent convention {exponent!r}")
    if exponent == "genus" and not d.all_positive():
        raise ValueError(
            "the genus exponent convention is defined for all-positive diagrams only"
        )
    terms: dict[int, int] = {}
    for s in _splitting_rank_sums(d):
        e = d.k + 2 - s if exponent == "circles" else d.k + 2 - s // 2
        terms[e] = terms.get(e, 0) + 1
    return LaurentPoly.from_dict("x", terms)


def _assignment_terms(d: FramedChordDiagram, good_only: bool):
    """Yield (sign, circles) over endpoint side-assignments.

    Assignments are enumerated per chord: each chord's two endpoints pick a
    side independently (4 choices; 2 when ``good_only`` restricts both
    endpoints to the same side)."""
    n = len(d.word)
    pos_of: dict[int, tuple[int, int]] = {lab: d.endpoints(lab) for lab in d.labels}
    labels = list(d.labels)
    options = ((LEFT, LEFT), (RIGHT, RIGHT))
    if not good_only:
        options += ((LEFT, RIGHT), (RIGHT, LEFT))
    for combo in itertools.product(options, repeat=len(labels)):
        sides = [LEFT] * n
        for lab, (s1, s2) in zip(labels, combo):
            p1, p2 = pos_of[lab]
            sides[p1] = s1
            sides[p2] = s2
        yield assignment_trace(d, sides)


def _check_cap(d: FramedChordDiagram, max_chords: int) -> None:
    if d.k > max_chords:
        raise ValueError(
            f"diagram has {d.k} chords; assignment enumeration is capped at "
            f"{max_chords} (raise max_chords to override)"
        )


def gen_fun_f_tilde(
    d: FramedChordDiagram,
    good_only: bool = False,
    max_chords: int = ASSIGNMENT_CAP,
) -> LaurentPoly:
    """Unsigned assignment sum Σ x^(circle count) over all 2^(2k) endpoint
    side-assignments (2^k "good" ones when ``good_only``)."""
    _check_cap(d, max_chords)
    terms: dict[int, int] = {}
    for _, circles in _assignment_terms(d, good_only):
        terms[circles] = terms.get(circles, 0) + 1
    return LaurentPoly.from_dict("x", terms)


def weight_system_gl(
    d: FramedChordDiagram, max_chords: int = ASSIGNMENT_CAP
) -> LaurentPoly:
    """gl(n) weight-system polynomial: Σ sign · n^(circle count) over all
    2^(2k) endpoint side-assignments; defined for all-positive diagrams."""
    if not d.all_positive():
        raise ValueError("the weight system is defined for all-positive diagrams")
    _check_cap(d, max_chords)
    terms: dict[int, int] = {}
    for sign, circles in _assignment_terms(d, good_only=False):
        terms[circles] = terms.get(circles, 0) + sign
    return LaurentPoly.from_dict("n", terms)


@dataclass(frozen=True)
class FourTermQuadruple:
    """The four diagrams of a four-term relation.

    A and B differ only by whether β is interlaced with α near one endpoint
    of α; C and D are the analogous pair at α's other endpoint, with β's
    sign flipped when α is negative (generalized relation).  The relation
    reads f(A) − f(B) = f(C) − f(D), except f(A) − f(B) = f(D) − f(C) when
    ``negative_alpha`` is set.
    """

    a: FramedChordDiagram
    b: FramedChordDiagram
    c: FramedChordDiagram
    d: FramedChordDiagram
    alpha: int
    beta: int
    negative_alpha: bool = False

    def diagrams(self) -> tuple[FramedChordDiagram, ...]:
        return (self.a, self.b, self.c, self.d)


def four_term_quadruples(
    d: FramedChordDiagram, alpha: int, beta: int, generalized: bool = False
) -> FourTermQuadruple:
    """Build the quadruple obtained by sliding one endpoint of β around α.

    Requires one endpoint of β to be cyclically adjacent to an endpoint of
    α.  The moving endpoint is re-inserted in the four slots flanking α's
    endpoints; A is the given diagram, B its link-toggled partner at the
    same endpoint of α, C the diagram with the endpoint carried to the other
    end of α preserving the α–β interlacement, and D its link-toggled
    partner.  With ``generalized`` and α negative, β's sign flips in C, D.
    """
    if alpha == beta:
        raise ValueError("α and β must be distinct chords")
    signs = d.signs
    if alpha not in signs or beta not in signs:
        raise ValueError("α and β must be chords of the diagram")
    if not generalized and not d.all_positive():
        raise ValueError("plain four-term quadruples need an all-positive diagram")
    n = len(d.word)
    a_pos = d.endpoints(alpha)
    b_pos = d.endpoints(beta)
    moving = fixed_a = None
    for bp in b_pos:
        for ap in a_pos:
            if (bp - ap) % n == 1 or (ap - bp) % n == 1:
                moving, fixed_a = bp, ap
                break
        if moving is not None:
            break
    if moving is None:
        raise ValueError("no endpoint of β is adjacent to an endpoint of α")

    base = list(d.word)
    del base[moving]

    def insert(slot: int, negs: frozenset[int]) -> FramedChordDiagram:
        word = base[: slot] + [beta] + base[slot:]
        return FramedChordDiagram(tuple(word), negs)

    flip = generalized and alpha in d.negatives
    negs_ab = d.negatives
    negs_cd = d.negatives ^ frozenset({beta}) if flip else d.negatives

    # α's endpoint indices within the shortened word; pick out the one the
    # moving end was adjacent to
    near = [i for i, lab in enumerate(base) if lab == alpha]
    a_near = fixed_a if fixed_a < moving else fixed_a - 1
    a_far = [i for i in near if i != a_near][0]

    pair_near = [insert(a_near, negs_ab), insert(a_near + 1, negs_ab)]
    pair_far = [insert(a_far, negs_cd), insert(a_far + 1, negs_cd)]

    def is_linked(diag: FramedChordDiagram) -> bool:
        return linked(diag, alpha, beta)

    a_diag = next(x for x in pair_near if x.word == d.word) if any(
        x.word == d.word for x in pair_near
    ) else pair_near[0]
    b_diag = next(x for x in pair_near if x is not a_diag)
    want = is_linked(a_diag)
    c_diag = next(x for x in pair_far if is_linked(x) == want)
    d_diag = next(x for x in pair_far if x is not c_diag)
    return FourTermQuadruple(a_diag, b_diag, c_diag, d_diag, alpha, beta, flip)


def check_relation(
    q: FourTermQuadruple, fn: Callable[[FramedChordDiagram], LaurentPoly]
) -> bool:
    """f(A) − f(B) = f(C) − f(D), with the right side negated for the
    generalized relation with negative α."""
    lhs = fn(q.a) - fn(q.b)
    rhs = fn(q.c) - fn(q.d)
    if q.negative_alpha:
        rhs = -rhs
    return lhs == rhs
