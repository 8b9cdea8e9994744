"""Property-check suites shared by the CLI ``check`` verb and the test
harness.

Each suite returns a :class:`SuiteResult` with the number of cases checked
and a (hopefully empty) list of violation descriptions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .chords import FramedChordDiagram, interlacement_matrix, is_d_diagram, serialize
from .enumeration import all_framed_diagrams, canonical_words, random_diagram
from .gf2 import mask_rank
from .invariants import (
    check_relation,
    four_term_quadruples,
    gen_fun_f,
    weight_system_gl,
)
from .surgery import circle_count_after


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return f"{self.name}: {self.cases} case(s), {status}"


def _soboleva_word(word: tuple[int, ...]) -> tuple[int, list[str]]:
    """Check trace = 1 + corank on one word, every subset, every sign
    pattern on the subset.

    Signs of chords outside the surgered subset cannot affect either side,
    so enumerating sign patterns per subset covers every framed diagram on
    this word while tracing each configuration once.
    """
    k = max(word) if word else 0
    labels = list(range(1, k + 1))
    cases = 0
    violations: list[str] = []
    for mask in range(1 << k):
        subset = [lab for lab in labels if mask >> (lab - 1) & 1]
        for negbits in range(1 << len(subset)):
            negs = frozenset(
                lab for i, lab in enumerate(subset) if negbits >> i & 1
            )
            d = FramedChordDiagram(word, negs)
            m = interlacement_matrix(d)
            sub = 0
            for i, lab in enumerate(d.labels):
                if lab in set(subset):
                    sub |= 1 << i
            corank = len(subset) - mask_rank(m.rows, sub)
            traced = circle_count_after(d, subset)
            cases += 1
            if traced != 1 + corank:
                violations.append(
                    f"{serialize(d)} subset {subset}: traced {traced}, "
                    f"corank gives {1 + corank}"
                )
    return cases, violations


def run_soboleva(
    max_exhaustive_k: int = 6,
    random_cases: int = 1000,
    random_k: int = 10,
    seed: int = 0,
    threads: int | None = None,
) -> SuiteResult:
    """Circle count after surgery equals 1 + corank of the principal
    interlacement submatrix, exhaustively for small k and on random
    diagrams."""
    result = SuiteResult("soboleva")
    words = [
        w for k in range(0, max_exhaustive_k + 1) for w in canonical_words(k)
    ]
    if threads and threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_soboleva_word, words, chunksize=8))
    else:
        parts = [_soboleva_word(w) for w in words]
    for cases, violations in parts:
        result.cases += cases
        result.violations += violations
    rng = random.Random(seed)
    for _ in range(random_cases):
        k = rng.randint(1, random_k)
        d = random_diagram(k, rng)
        m = interlacement_matrix(d)
        mask = rng.randrange(1 << k)
        subset = [lab for i, lab in enumerate(d.labels) if mask >> i & 1]
        corank = len(subset) - mask_rank(m.rows, mask)
        traced = circle_count_after(d, subset)
        result.cases += 1
        if traced != 1 + corank:
            result.violations.append(
                f"{serialize(d)} subset {subset}: traced {traced}, "
                f"corank gives {1 + corank}"
            )
    return result


@lru_cache(maxsize=200_000)
def _f_cached(word: tuple[int, ...], negs: frozenset[int]):
    return gen_fun_f(FramedChordDiagram(word, negs))


def _quadruples_of(d: FramedChordDiagram, generalized: bool):
    for alpha in d.labels:
        for beta in d.labels:
            if alpha == beta:
                continue
            try:
                yield four_term_quadruples(d, alpha, beta, generalized)
            except ValueError:
                continue


def run_fourterm(
    max_plain_k: int = 6, max_generalized_k: int = 5
) -> SuiteResult:
    """The four-term relation for f on all-positive diagrams and the
    generalized (signed) relation on framed diagrams."""
    result = SuiteResult("fourterm")

    def f(diag: FramedChordDiagram):
        return _f_cached(diag.word, diag.negatives)

    for k in range(2, max_plain_k + 1):
        for word in canonical_words(k):
            d = FramedChordDiagram(word, frozenset())
            for q in _quadruples_of(d, generalized=False):
                result.cases += 1
                if not check_relation(q, f):
                    result.violations.append(
                        f"plain 4T fails on {serialize(d)} α={q.alpha} β={q.beta}"
                    )
    for k in range(2, max_generalized_k + 1):
        for d in all_framed_diagrams(k):
            for q in _quadruples_of(d, generalized=True):
                result.cases += 1
                if not check_relation(q, f):
                    result.violations.append(
                        f"generalized 4T fails on {serialize(d)} α={q.alpha} β={q.beta}"
                    )
    return result


def run_degree(max_k: int = 5) -> SuiteResult:
    """deg_n weight_system_gl ≤ k + 2 on all-positive diagrams, with
    equality exactly when the diagram is a d-diagram."""
    result = SuiteResult("degree")
    for k in range(0, max_k + 1):
        for word in canonical_words(k):
            d = FramedChordDiagram(word, frozenset())
            w = weight_system_gl(d)
            deg = w.degree
            result.cases += 1
            if deg is not None and deg > k + 2:
                result.violations.append(f"{serialize(d)}: degree {deg} > {k + 2}")
            elif (deg == k + 2) != is_d_diagram(d)[0]:
                result.violations.append(
                    f"{serialize(d)}: degree {deg}, d-diagram {is_d_diagram(d)[0]}"
                )
    return result


def run_multiplicativity(
    pairs: int = 200, max_total_k: int = 10, seed: int = 0
) -> SuiteResult:
    """f̂ = f / x² is multiplicative under connected sum."""
    from .chords import connected_sum

    result = SuiteResult("multiplicativity")
    rng = random.Random(seed)
    for _ in range(pairs):
        k1 = rng.randint(0, max_total_k - 1)
        k2 = rng.randint(0, max_total_k - k1)
        d1 = random_diagram(k1, rng)
        d2 = random_diagram(k2, rng)
        s = connected_sum(d1, d2)
        lhs = gen_fun_f(s).shift(-2)
        rhs = (gen_fun_f(d1).shift(-2)) * (gen_fun_f(d2).shift(-2))
        result.cases += 1
        if lhs != rhs:
            result.violations.append(
                f"f̂ not multiplicative on {serialize(d1)} # {serialize(d2)}"
            )
    return result


SUITES = {
    "soboleva": run_soboleva,
    "fourterm": run_fourterm,
    "degree": run_degree,
    "multiplicativity": run_multiplicativity,
}
