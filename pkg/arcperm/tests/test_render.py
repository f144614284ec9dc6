import xml.etree.ElementTree as ET

import pytest

from arcperm.perm_core import Permutation
from arcperm.render import MAX_ASCII_N, Format, RenderError, render, render_ascii, render_svg
from arcperm.tests.commons import FIGURE1


def test_ascii_transposition():
    assert render_ascii(Permutation((2, 1))) == '\n'.join([
        ".--.",
        "|  |",
        "1  2",
        "|  |",
        "'--'",
    ])


def test_ascii_loop():
    assert render_ascii(Permutation((1,))) == 'o\n1'


def test_ascii_shared_endpoint():
    # vertex 2 ends one lower arc and starts the next
    drawing = render_ascii(Permutation((3, 1, 2)))
    lines = drawing.split('\n')
    assert lines[0] == '.-----.'
    assert lines[1] == '|     |'
    assert lines[2] == '1  2  3'
    assert lines[3] == '|  |  |'
    assert lines[4] == "'--+  |"
    assert lines[5] == "   '--'"


def test_ascii_figure1_layout():
    lines = render_ascii(FIGURE1).split('\n')
    labels = [line for line in lines if line.startswith('1 ')]
    assert labels == ['1   2   3   4   5   6   7   8   9   10  11  12']
    axis = lines.index(labels[0])
    # six upper arcs plus the loop row above the labels, five lower arcs plus the leg row below
    assert axis == 7
    assert len(lines) == axis + 1 + 6
    assert lines[axis - 1][40] == 'o'


def test_ascii_bound():
    with pytest.raises(RenderError):
        render_ascii(Permutation.identity(MAX_ASCII_N + 1))


def test_svg_figure1():
    svg = render_svg(FIGURE1)
    ET.fromstring(svg)
    assert svg.count('id="vertex-') == 12
    assert svg.count('id="upper-arc-') == 6
    assert svg.count('id="upper-loop-') == 1
    assert svg.count('id="lower-arc-') == 5
    assert 'id="upper-arc-1-9"' in svg and 'id="upper-loop-11"' in svg


def test_svg_single_vertex():
    svg = render(Permutation((1,)), Format.SVG)
    ET.fromstring(svg)
    assert svg.count('id="vertex-') == 1
    assert svg.count('id="upper-loop-') == 1
    assert 'id="lower-arc-' not in svg


def test_svg_is_deterministic():
    assert render_svg(FIGURE1) == render_svg(FIGURE1)


def test_render_dispatch():
    assert render(Permutation((2, 1)), 'ascii') == render_ascii(Permutation((2, 1)))
    with pytest.raises(ValueError):
        render(Permutation((2, 1)), 'png')
