import itertools

import pytest

from atomgenus.chords import (
    DiagramError,
    FramedChordDiagram,
    canonical,
    connected_sum,
    interlacement_matrix,
    interval_mutation,
    is_d_diagram,
    linked,
    parse,
    serialize,
    subdiagram,
)
from atomgenus.enumeration import all_framed_diagrams
from atomgenus.gf2 import principal_submatrix

from oracles import interlacement_lists


def test_parse_basic_forms():
    d = parse("1 2 1 2 ; 1:+ 2:+")
    assert d.word == (1, 2, 1, 2)
    assert d.all_positive()
    assert parse("1 2 1 2 ; ++").negatives == frozenset()
    assert parse("1 1 ; 1:-").negatives == {1}
    assert parse("1 2 1 2 ; +-").negatives == {2}
    assert parse("1 1").negatives == frozenset()  # default positive
    assert parse(" ; ").word == ()


def test_parse_errors():
    with pytest.raises(DiagramError):
        parse("1 2 1")
    with pytest.raises(DiagramError):
        parse("1 1 ; 1:+ 1:-")
    with pytest.raises(DiagramError):
        parse("1 1 ; q")


def test_round_trip_is_canonical():
    d = parse("2 1 2 1 ; 1:-")
    assert serialize(parse(serialize(d))) == serialize(d)
    assert canonical(d).word[0] == min(d.word)


def test_interlacement_matrix_examples():
    assert interlacement_matrix(parse("1 2 1 2 ; ++")).to_lists() == [[0, 1], [1, 0]]
    assert interlacement_matrix(parse("1 1 2 2 ; ++")).to_lists() == [[0, 0], [0, 0]]
    assert interlacement_matrix(parse("1 1 ; 1:-")).to_lists() == [[1]]


def test_interlacement_matrix_vs_oracle():
    for d in all_framed_diagrams(4):
        assert interlacement_matrix(d).to_lists() == interlacement_lists(d)


def test_d_diagram_examples():
    ok, witness = is_d_diagram(parse("1 2 1 2 ; ++"))
    assert ok and set(witness[0]) | set(witness[1]) == {1, 2}
    assert not is_d_diagram(parse("1 2 3 1 2 3 ; +++"))[0]
    assert not is_d_diagram(parse("1 1 ; 1:-"))[0]


def test_d_diagram_witness_is_proper_colouring():
    for d in all_framed_diagrams(4):
        ok, witness = is_d_diagram(d)
        if ok:
            for side in witness:
                for a, b in itertools.combinations(side, 2):
                    assert not linked(d, a, b)


def test_connected_sum():
    assert serialize(connected_sum(parse("1 1 ; +"), parse("2 2 ; +"))) == serialize(
        parse("1 1 2 2 ; ++")
    )
    d = parse("1 2 1 2 ; +-")
    assert connected_sum(FramedChordDiagram(()), d) == d
    # colliding labels get offset
    s = connected_sum(parse("1 2 1 2"), parse("1 1"))
    assert s.k == 3


def test_connected_sum_block_matrix():
    d1, d2 = parse("1 2 1 2 ; +-"), parse("3 3 ; 3:-")
    m = interlacement_matrix(connected_sum(d1, d2)).to_lists()
    assert m == [[0, 1, 0], [1, 1, 0], [0, 0, 1]]


def test_subdiagram():
    d = parse("1 2 3 1 2 3 ; +++")
    assert subdiagram(d, {1, 2}).word == (1, 2, 1, 2)
    assert subdiagram(d, set()).word == ()
    assert subdiagram(d, {1, 2, 3}) == d
    with pytest.raises(DiagramError):
        subdiagram(d, {9})


def test_subdiagram_matches_principal_submatrix():
    for d in all_framed_diagrams(4):
        labels = d.labels
        for r in range(1 << d.k):
            s = [lab for i, lab in enumerate(labels) if r >> i & 1]
            idx = [labels.index(lab) for lab in s]
            sub = interlacement_matrix(subdiagram(d, s))
            assert sub == principal_submatrix(interlacement_matrix(d), idx)


def test_interval_mutation():
    d = parse("1 1 2 3 2 3 ; +++")
    m = interval_mutation(d, 2, 6)
    assert m.word == (1, 1, 3, 2, 3, 2)
    assert interlacement_matrix(m) == interlacement_matrix(d)
    with pytest.raises(DiagramError):
        interval_mutation(parse("1 2 1 2"), 0, 2)  # chord straddles the cut


def test_interval_mutation_preserves_matrix_exhaustively():
    for d in all_framed_diagrams(4):
        n = len(d.word)
        for start in range(n):
            for stop in range(start, n + 1):
                try:
                    m = interval_mutation(d, start, stop)
                except DiagramError:
                    continue
                assert interlacement_matrix(m) == interlacement_matrix(d)
