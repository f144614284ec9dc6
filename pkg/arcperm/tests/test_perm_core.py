import itertools

import pytest
from hypothesis import given

from arcperm.perm_core import (Arc, DegreeSequence, Permutation, PermutationError, Side, VertexType, arc_diagram,
                               degree_class_string, degree_classes, degree_sequence, format_permutation,
                               parse_permutation, recombine, vertex_types)
from arcperm.tests.commons import FIGURE1, FIGURE1_CLASSES, FIGURE1_TEXT, permutation_strategy


def test_parse_permutation_separators():
    assert parse_permutation('2 3 1') == Permutation((2, 3, 1))
    assert parse_permutation('2,3,1') == Permutation((2, 3, 1))
    assert parse_permutation(' 2, 3   1 ') == Permutation((2, 3, 1))
    assert parse_permutation(FIGURE1_TEXT) == FIGURE1


@pytest.mark.parametrize('text, message', [
    ('', 'empty'),
    ('1 1', 'repeated'),
    ('0 1', 'outside'),
    ('1 3', 'outside'),
    ('1 x', 'not an integer'),
])
def test_parse_permutation_rejects(text, message):
    with pytest.raises(PermutationError, match=message):
        parse_permutation(text)


def test_format_permutation():
    assert format_permutation(FIGURE1) == FIGURE1_TEXT
    assert str(Permutation((1,))) == '1'


def test_permutation_basics():
    perm = Permutation((2, 3, 1))
    assert perm.n == 3
    assert perm(1) == 2
    assert perm.inverse() == Permutation((3, 1, 2))
    assert Permutation.identity(3) == Permutation((1, 2, 3))


@pytest.mark.parametrize('image', [(2.9, 1), (1, '2'), (True, 2), (1.0, 2.0)])
def test_permutation_rejects_non_integers(image):
    with pytest.raises(PermutationError, match='not an integer'):
        Permutation(image)


def test_arc_validation():
    assert Arc(2, 2, Side.UPPER).is_loop
    with pytest.raises(PermutationError):
        Arc(3, 2, Side.UPPER)
    with pytest.raises(PermutationError):
        Arc(2, 2, Side.LOWER)
    with pytest.raises(PermutationError):
        Arc(0, 2, Side.LOWER)


def test_figure1_arc_diagram():
    diagram = arc_diagram(FIGURE1)
    assert sorted(arc.as_pair() for arc in diagram.upper) == [(1, 9), (2, 5), (3, 6), (4, 7), (5, 8), (10, 12),
                                                              (11, 11)]
    assert sorted(arc.as_pair() for arc in diagram.lower) == [(1, 8), (2, 7), (3, 6), (4, 9), (10, 12)]


def test_small_arc_diagrams():
    diagram = arc_diagram(Permutation((1,)))
    assert [a.as_pair() for a in diagram.upper] == [(1, 1)] and not diagram.lower
    diagram = arc_diagram(Permutation((2, 1)))
    assert [a.as_pair() for a in diagram.upper] == [(1, 2)]
    assert [a.as_pair() for a in diagram.lower] == [(1, 2)]


def test_figure1_vertex_types():
    types = vertex_types(FIGURE1)
    assert types[:5] == [VertexType.OPENER] * 4 + [VertexType.UPPER_TRANSIENT]
    assert types[5:9] == [VertexType.CLOSER] * 4
    assert types[9:] == [VertexType.OPENER, VertexType.LOOP, VertexType.CLOSER]
    assert degree_class_string(FIGURE1) == FIGURE1_CLASSES


def test_lower_transient():
    # 3 -> 2 -> 1 below the line
    assert vertex_types(Permutation((3, 1, 2))) == [VertexType.OPENER, VertexType.LOWER_TRANSIENT,
                                                   VertexType.CLOSER]
    assert degree_class_string(Permutation((3, 1, 2))) == 'OLC'


def test_degree_sequence_table():
    degrees = degree_sequence(Permutation((3, 1, 2)))
    assert degrees.upper == ((1, 0), (0, 0), (0, 1))
    assert degrees.lower == ((1, 0), (1, 1), (0, 1))
    loop = degree_sequence(Permutation((1,)))
    assert loop.upper == ((1, 1),) and loop.lower == ((0, 0),)


def test_degree_sequence_rejects():
    with pytest.raises(PermutationError, match='differ in length'):
        DegreeSequence(upper=((1, 0), (0, 1)), lower=((0, 0),))
    with pytest.raises(PermutationError, match='vertex 2'):
        DegreeSequence(upper=((1, 0), (1, 0)), lower=((1, 0), (0, 0)))


def test_loop_and_upper_transient_share_a_class():
    assert degree_classes(Permutation((3, 2, 1))) == degree_classes(Permutation((2, 3, 1)))


def test_recombine_roundtrip_exhaustive():
    for n in range(1, 7):
        for image in itertools.permutations(range(1, n + 1)):
            perm = Permutation(image)
            diagram = arc_diagram(perm)
            assert recombine(diagram.upper, diagram.lower, n) == perm
            weak_exceedances = sum(1 for a, v in enumerate(image, start=1) if v >= a)
            assert len(diagram.upper) == weak_exceedances
            assert len(diagram.upper) + len(diagram.lower) == n


def test_recombine_rejects():
    with pytest.raises(PermutationError, match='two images'):
        recombine([Arc(1, 2), Arc(1, 1)], [], 2)
    with pytest.raises(PermutationError, match='pre-images'):
        recombine([Arc(1, 2), Arc(2, 2)], [Arc(1, 2, Side.LOWER)], 2)
    with pytest.raises(PermutationError, match='no image'):
        recombine([Arc(1, 1)], [], 2)


@given(permutation_strategy())
def test_degree_sequence_sums(perm):
    degrees = degree_sequence(perm)
    for d, d_bar in zip(degrees.upper, degrees.lower):
        assert (d[0] + d_bar[1], d[1] + d_bar[0]) == (1, 1)
    assert parse_permutation(format_permutation(perm)) == perm
