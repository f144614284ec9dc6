"""Arc diagram drawings: fixed-width text and SVG.

Vertices sit on a horizontal line, upper arcs above it and lower arcs below it.
"""

import io
import logging
from enum import Enum
from typing import Dict, List

from matplotlib import patches, rc_context
from matplotlib.figure import Figure

from arcperm.perm_core import Arc, Permutation, arc_diagram

logger = logging.getLogger(__name__)

MAX_ASCII_N = 60
MAX_SVG_N = 200


class RenderError(ValueError):
    pass


class Format(str, Enum):
    ASCII = 'ascii'
    SVG = 'svg'


def _levels(arcs: List[Arc]) -> Dict[Arc, int]:
    """One level per arc, shorter arcs nearer the axis."""
    ordered = sorted(arcs, key=lambda a: (a.right - a.left, a.left))
    return {arc: level for level, arc in enumerate(ordered, start=1)}


def _put(grid: List[List[str]], row: int, col: int, ch: str) -> None:
    current = grid[row][col]
    if current == ' ' or current == ch:
        grid[row][col] = ch
    elif current == 'o':
        return
    else:
        grid[row][col] = '+'


def render_ascii(perm: Permutation) -> str:
    if perm.n > MAX_ASCII_N:
        raise RenderError(f'ascii rendering supports n up to {MAX_ASCII_N}, got {perm.n}')
    diagram = arc_diagram(perm)
    upper = [arc for arc in diagram.upper if not arc.is_loop]
    upper_levels, lower_levels = _levels(upper), _levels(list(diagram.lower))
    cell = len(str(perm.n)) + 2
    width = (perm.n - 1) * cell + len(str(perm.n))
    axis = len(upper_levels) + 1
    grid = [[' '] * width for _ in range(axis + len(lower_levels) + 2)]

    def column(vertex: int) -> int:
        return (vertex - 1) * cell

    for vertex in range(1, perm.n + 1):
        for k, ch in enumerate(str(vertex)):
            grid[axis][column(vertex) + k] = ch
        if perm(vertex) == vertex:
            grid[axis - 1][column(vertex)] = 'o'

    for levels, direction, corner in ((upper_levels, -1, '.'), (lower_levels, 1, "'")):
        for arc, level in levels.items():
            row = axis + direction * (level + 1)
            left, right = column(arc.left), column(arc.right)
            for leg_row in range(axis + direction, row, direction):
                _put(grid, leg_row, left, '|')
                _put(grid, leg_row, right, '|')
            for col in range(left + 1, right):
                _put(grid, row, col, '-')
            _put(grid, row, left, corner)
            _put(grid, row, right, corner)

    lines = [''.join(row).rstrip() for row in grid]
    return '\n'.join(line for line in lines if line)


def render_svg(perm: Permutation) -> str:
    if perm.n > MAX_SVG_N:
        raise RenderError(f'svg rendering supports n up to {MAX_SVG_N}, got {perm.n}')
    diagram = arc_diagram(perm)
    span = max([arc.right - arc.left for arc in diagram.upper | diagram.lower] + [1])
    fig = Figure(figsize=(max(3.0, 0.6 * perm.n), max(2.0, 0.3 * span + 1.0)))
    ax = fig.add_subplot()

    for arc in sorted(diagram.upper):
        if arc.is_loop:
            ax.add_patch(patches.Circle((arc.left, 0.25), 0.25, fill=False, gid=f'upper-loop-{arc.left}'))
            continue
        length = arc.right - arc.left
        ax.add_patch(patches.Arc(((arc.left + arc.right) / 2, 0), length, length, theta1=0, theta2=180,
                                 gid=f'upper-arc-{arc.left}-{arc.right}'))
    for arc in sorted(diagram.lower):
        length = arc.right - arc.left
        ax.add_patch(patches.Arc(((arc.left + arc.right) / 2, 0), length, length, theta1=180, theta2=360,
                                 gid=f'lower-arc-{arc.left}-{arc.right}'))
    for vertex in range(1, perm.n + 1):
        ax.add_patch(patches.Circle((vertex, 0), 0.08, color='black', gid=f'vertex-{vertex}'))
        ax.text(vertex + 0.1, -0.2, str(vertex), fontsize=8)

    ax.axhline(0, color='grey', linewidth=0.5)
    ax.set_xlim(0.3, perm.n + 0.7)
    ax.set_ylim(-span / 2 - 0.4, span / 2 + 0.6)
    ax.set_aspect('equal')
    ax.axis('off')

    buffer = io.StringIO()
    with rc_context({'svg.hashsalt': 'arcperm', 'svg.fonttype': 'none'}):
        fig.savefig(buffer, format='svg', metadata={'Date': None})
    return buffer.getvalue()


def render(perm: Permutation, fmt: Format = Format.ASCII) -> str:
    fmt = Format(fmt)
    logger.debug(f'rendering {perm} as {fmt.value}')
    return render_ascii(perm) if fmt == Format.ASCII else render_svg(perm)
