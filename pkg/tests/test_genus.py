import random

import pytest

from atomgenus.chords import (
    FramedChordDiagram,
    interval_mutation,
    parse,
)
from atomgenus.enumeration import all_framed_diagrams, random_diagram
from atomgenus.genus import (
    diagram_surgery,
    embeds_in_klein,
    embeds_in_rp2,
    euler_characteristic,
    genus_spectrum,
    is_planar,
    klein_by_surgery,
    orientability_class,
)
from atomgenus.surgery import state_circle_counts

from oracles import interlacement_lists, rank_sum_values


def test_euler_characteristic_examples():
    d = parse("1 2 1 2 ; ++")
    assert euler_characteristic(d, {1}) == 2
    assert euler_characteristic(d, {1, 2}) == 0
    assert euler_characteristic(parse("1 1 ; 1:-"), {1}) == 1
    with pytest.raises(ValueError):
        euler_characteristic(d, {9})


def test_euler_matches_surgery_face_count():
    rng = random.Random(1)
    for _ in range(100):
        d = random_diagram(rng.randint(1, 6), rng)
        labels = list(d.labels)
        mask = rng.randrange(1 << d.k)
        side_i = {lab for i, lab in enumerate(labels) if mask >> i & 1}
        side_j = set(labels) - side_i
        faces = sum(state_circle_counts(d, side_i, side_j))
        assert euler_characteristic(d, side_i) == d.k - 2 * d.k + faces


def test_spectrum_examples():
    r = genus_spectrum(parse("1 2 1 2 ; ++"))
    assert (r.min_rank_sum, r.max_rank_sum) == (0, 2)
    assert r.orientable and r.surfaces == ("sphere", "torus")

    r = genus_spectrum(parse("1 2 3 1 2 3 ; +++"))
    assert r.min_rank_sum == 2 and r.orientable and "torus" in r.surfaces

    r = genus_spectrum(parse("1 1 ; 1:-"))
    assert not r.orientable and r.surfaces == ("RP^2",)
    assert r.min_genus_or_crosscap == 1

    r = genus_spectrum(FramedChordDiagram(()))
    assert r.surfaces == ("sphere",)


def test_spectrum_vs_dense_oracle():
    rng = random.Random(9)
    for _ in range(120):
        d = random_diagram(rng.randint(1, 6), rng)
        values = rank_sum_values(d)
        r = genus_spectrum(d)
        assert r.min_rank_sum == min(values)
        assert r.max_rank_sum == max(values)
        assert set(r.rank_sums) == set(values)
        assert euler_characteristic(d, r.witness_min) == 2 - r.min_rank_sum
        assert euler_characteristic(d, r.witness_max) == 2 - r.max_rank_sum


def test_branch_and_bound_agrees_with_exhaustive():
    rng = random.Random(17)
    for _ in range(150):
        d = random_diagram(rng.randint(1, 8), rng)
        full = genus_spectrum(d)
        bb = genus_spectrum(d, threshold=0)
        assert (bb.min_rank_sum, bb.max_rank_sum) == (
            full.min_rank_sum,
            full.max_rank_sum,
        )
        assert not bb.exhaustive


def test_json_report_shape():
    j = genus_spectrum(parse("1 2 3 1 2 3 ; +++")).to_json()
    assert set(j) == {
        "k",
        "orientable",
        "min_rank_sum",
        "max_rank_sum",
        "min_genus_or_crosscap",
        "max_genus_or_crosscap",
        "witness_min",
        "witness_max",
        "surfaces",
    }
    assert j["k"] == 3 and j["orientable"] is True
    assert j["surfaces"] == ["torus"]


def test_planarity_examples():
    assert is_planar(parse("1 2 1 2 ; ++"))
    assert not is_planar(parse("1 2 3 1 2 3 ; +++"))
    assert not is_planar(parse("1 1 ; 1:-"))


def test_planarity_iff_min_rank_sum_zero():
    for k in range(1, 5):
        for d in all_framed_diagrams(k):
            brute = d.all_positive() and min(rank_sum_values(d)) == 0
            assert is_planar(d) == brute


def test_orientability_class():
    assert orientability_class(parse("1 2 1 2 ; ++")) == "orientable"
    assert orientability_class(parse("1 1 ; 1:-")) == "non-orientable"


def test_rp2_examples():
    assert embeds_in_rp2(parse("1 1 ; 1:-")) == (True, (1,))
    assert embeds_in_rp2(parse("1 1 2 2 ; 1:- 2:-")) == (False, None)
    assert embeds_in_rp2(parse("1 2 1 2 ; ++")) == (False, None)


def test_rp2_structural_vs_brute():
    for k in range(1, 5):
        for d in all_framed_diagrams(k):
            brute = bool(d.negatives) and 1 in rank_sum_values(d)
            got, witness = embeds_in_rp2(d)
            assert got == brute
            if got:
                assert euler_characteristic(d, witness) == 1


def test_klein_examples():
    ok, witness = embeds_in_klein(parse("1 1 2 2 ; 1:- 2:-"))
    assert ok and euler_characteristic(parse("1 1 2 2 ; 1:- 2:-"), witness) == 0
    assert embeds_in_klein(parse("1 1 ; 1:-")) == (False, None)
    assert embeds_in_klein(parse("1 2 1 2 ; ++")) == (False, None)


def test_klein_brute_and_structural_agree():
    for k in range(1, 5):
        for d in all_framed_diagrams(k):
            brute = bool(d.negatives) and 2 in rank_sum_values(d)
            assert embeds_in_klein(d)[0] == brute
            assert klein_by_surgery(d) == brute


def test_diagram_surgery_is_schur_complement():
    rng = random.Random(23)
    for _ in range(120):
        d = random_diagram(rng.randint(1, 6), rng)
        if not d.negatives:
            continue
        c = rng.choice(sorted(d.negatives))
        s = diagram_surgery(d, c)
        m = interlacement_lists(d)
        ci = d.labels.index(c)
        n = len(d.labels)
        keep = [i for i in range(n) if i != ci]
        schur = [
            [m[a][b] ^ (m[a][ci] & m[ci][b]) for b in keep] for a in keep
        ]
        assert interlacement_lists(s) == schur


def test_spectrum_invariant_under_interval_mutation():
    rng = random.Random(31)
    checked = 0
    while checked < 40:
        d = random_diagram(rng.randint(2, 6), rng)
        n = len(d.word)
        start = rng.randrange(n)
        stop = rng.randint(start, n)
        try:
            m = interval_mutation(d, start, stop)
        except Exception:
            continue
        checked += 1
        a, b = genus_spectrum(d), genus_spectrum(m)
        assert (a.min_rank_sum, a.max_rank_sum, a.rank_sums) == (
            b.min_rank_sum,
            b.max_rank_sum,
            b.rank_sums,
        )


def test_threads_do_not_change_results():
    word = tuple(range(1, 13)) + tuple(range(1, 13))
    d = FramedChordDiagram(word, frozenset({3, 7}))
    seq = genus_spectrum(d, threads=1)
    par = genus_spectrum(d, threads=2)
    assert seq == par
