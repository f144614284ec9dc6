"""Integer partitions, partial standard tableaux and oscillating tableaux of partial matchings.

A partial matching is scanned left to right with a tableau holding the partners of the open arcs: an opener
row-inserts its partner, a closer finds its own label at (1, 1) and removes it by a jeu de taquin slide. The
tableau after each step is the insertion tableau of the open partners in opening order, so its first row
length is the largest crossing and its column length the largest nesting among arcs open at that point.
Transposing every shape therefore swaps crossing and nesting numbers.
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Tuple

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]  # (row, column), 1-indexed


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class IntegerPartition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'parts', tuple(self.parts))
        for i, part in enumerate(self.parts):
            if part < 1:
                raise TableauError(f'partition part {part} at position {i + 1} is not positive')
            if i and part > self.parts[i - 1]:
                raise TableauError(f'partition {self.parts} is not weakly decreasing')

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def height(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return '(' + ','.join(str(p) for p in self.parts) + ')' if self.parts else '∅'


EMPTY = IntegerPartition(())


def conjugate(p: IntegerPartition) -> IntegerPartition:
    return IntegerPartition(tuple(sum(1 for part in p.parts if part >= k) for k in range(1, p.width + 1)))


def box_difference(smaller: IntegerPartition, larger: IntegerPartition) -> Optional[Cell]:
    """The cell of `larger` missing from `smaller` when they differ by exactly one box, else None."""
    if larger.size != smaller.size + 1 or larger.height - smaller.height not in (0, 1):
        return None
    padded = smaller.parts + (0,) * (larger.height - smaller.height)
    diff = [r for r, (a, b) in enumerate(zip(padded, larger.parts), start=1) if a != b]
    if len(diff) != 1 or larger.parts[diff[0] - 1] != padded[diff[0] - 1] + 1:
        return None
    row = diff[0]
    return row, larger.parts[row - 1]


@dataclass(frozen=True)
class PartialTableau:
    """Standard filling of a Young diagram with distinct positive integers (not necessarily 1..n)."""
    rows: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(tuple(row) for row in self.rows))
        seen = set()
        for r, row in enumerate(self.rows):
            if not row:
                raise TableauError(f'row {r + 1} is empty')
            if r and len(row) > len(self.rows[r - 1]):
                raise TableauError(f'row {r + 1} is longer than row {r}')
            for c, x in enumerate(row):
                if x < 1 or x in seen:
                    raise TableauError(f'entry {x} at cell ({r + 1}, {c + 1}) is not a fresh positive integer')
                seen.add(x)
                if c and row[c - 1] >= x:
                    raise TableauError(f'row {r + 1} is not strictly increasing')
                if r and self.rows[r - 1][c] >= x:
                    raise TableauError(f'column {c + 1} is not strictly increasing')

    @property
    def shape(self) -> IntegerPartition:
        return IntegerPartition(tuple(len(row) for row in self.rows))

    def entries(self) -> List[int]:
        return [x for row in self.rows for x in row]

    def __contains__(self, x: int) -> bool:
        return any(x in row for row in self.rows)

    def __getitem__(self, cell: Cell) -> int:
        r, c = cell
        return self.rows[r - 1][c - 1]

    def __len__(self) -> int:
        return sum(len(row) for row in self.rows)

    def __repr__(self) -> str:
        return 'PartialTableau(' + repr([list(row) for row in self.rows]) + ')'


def _is_removable(rows: List[List[int]], cell: Cell) -> bool:
    r, c = cell
    if not 1 <= r <= len(rows) or c != len(rows[r - 1]):
        return False
    return r == len(rows) or len(rows[r]) < c


def _is_addable(rows: List[List[int]], cell: Cell) -> bool:
    r, c = cell
    if r == len(rows) + 1:
        return c == 1
    if not 1 <= r <= len(rows) or c != len(rows[r - 1]) + 1:
        return False
    return r == 1 or len(rows[r - 2]) >= c


def row_insert(t: PartialTableau, x: int) -> Tuple[PartialTableau, Cell]:
    """RSK row insertion of `x`, returns the new tableau and the cell the shape grew by."""
    if x in t:
        raise TableauError(f'{x} is already in the tableau')
    rows = [list(row) for row in t.rows]
    for r, row in enumerate(rows):
        i = bisect_left(row, x)
        if i == len(row):
            row.append(x)
            return PartialTableau(rows), (r + 1, len(row))
        row[i], x = x, row[i]
    rows.append([x])
    return PartialTableau(rows), (len(rows), 1)


def reverse_row_insert(t: PartialTableau, corner: Cell) -> Tuple[PartialTableau, int]:
    """Inverse of `row_insert`: removes the entry at `corner`, bumps it upwards and returns the ejected value."""
    rows = [list(row) for row in t.rows]
    if not _is_removable(rows, corner):
        raise TableauError(f'cell {corner} is not a removable corner of shape {t.shape}')
    r, _ = corner
    y = rows[r - 1].pop()
    for row in reversed(rows[:r - 1]):
        i = bisect_left(row, y) - 1
        row[i], y = y, row[i]
    return PartialTableau([row for row in rows if row]), y


def delete_min(t: PartialTableau) -> Tuple[PartialTableau, Cell]:
    """Remove the entry at (1, 1) and slide the hole out to a corner, returns the vacated cell."""
    if not t.rows:
        raise TableauError('cannot delete from an empty tableau')
    rows = [list(row) for row in t.rows]
    i, j = 0, 0
    while True:
        right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
        below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            rows[i][j] = right
            j += 1
        else:
            rows[i][j] = below
            i += 1
    assert j == len(rows[i]) - 1, f'jeu de taquin stopped inside row {i + 1}'
    rows[i].pop()
    return PartialTableau([row for row in rows if row]), (i + 1, j + 1)


def reverse_delete_min(t: PartialTableau, vacated: Cell, x: int) -> PartialTableau:
    """Inverse of `delete_min`: opens a hole at `vacated`, slides it back to (1, 1) and places `x` there."""
    rows = [list(row) for row in t.rows]
    if not _is_addable(rows, vacated):
        raise TableauError(f'cell {vacated} is not an addable cell of shape {t.shape}')
    if x < 1 or any(x >= y for y in t.entries()):
        raise TableauError(f'{x} is not smaller than every entry of the tableau')
    i, j = vacated[0] - 1, vacated[1] - 1
    if i == len(rows):
        rows.append([])
    rows[i].append(0)
    while (i, j) != (0, 0):
        left = rows[i][j - 1] if j > 0 else None
        above = rows[i - 1][j] if i > 0 else None
        if above is None or (left is not None and left > above):
            rows[i][j] = left
            j -= 1
        else:
            rows[i][j] = above
            i -= 1
    rows[0][0] = x
    return PartialTableau(rows)


@dataclass(frozen=True)
class OscillatingTableau:
    shapes: Tuple[IntegerPartition, ...]

    def __post_init__(self):
        object.__setattr__(self, 'shapes', tuple(self.shapes))
        if not self.shapes or self.shapes[0] != EMPTY or self.shapes[-1] != EMPTY:
            raise TableauError('an oscillating tableau starts and ends with the empty shape')
        for i in range(1, len(self.shapes)):
            if oscillation_step(self.shapes[i - 1], self.shapes[i]) is None:
                raise TableauError(f'shapes {self.shapes[i - 1]} and {self.shapes[i]} at step {i} '
                                   f'differ by more than one box')

    @property
    def length(self) -> int:
        return len(self.shapes) - 1

    def __str__(self) -> str:
        return ','.join(str(s) for s in self.shapes)


def oscillation_step(prev: IntegerPartition, curr: IntegerPartition) -> Optional[Tuple[str, Optional[Cell]]]:
    """Classify a step as ('isolated', None), ('add', cell) or ('remove', cell); None if malformed."""
    if prev == curr:
        return 'isolated', None
    cell = box_difference(prev, curr)
    if cell is not None:
        return 'add', cell
    cell = box_difference(curr, prev)
    if cell is not None:
        return 'remove', cell
    return None


@dataclass(frozen=True)
class PartialMatching:
    n: int
    edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, 'edges', frozenset(tuple(e) for e in self.edges))
        used = set()
        for i, j in self.edges:
            if not 1 <= i < j <= self.n:
                raise TableauError(f'edge ({i}, {j}) is not a pair i < j within 1..{self.n}')
            if i in used or j in used:
                raise TableauError(f'edge ({i}, {j}) shares a vertex with another edge')
            used.update((i, j))

    def partners(self) -> List[Optional[int]]:
        partner: List[Optional[int]] = [None] * (self.n + 1)
        for i, j in self.edges:
            partner[i], partner[j] = j, i
        return partner

    def pattern(self) -> str:
        """Per vertex: 'o' opener, 'c' closer, '.' isolated."""
        partner = self.partners()
        return ''.join('.' if partner[v] is None else ('o' if partner[v] > v else 'c')
                       for v in range(1, self.n + 1))


def matching_to_oscillating(m: PartialMatching) -> OscillatingTableau:
    partner = m.partners()
    t = PartialTableau()
    shapes = [EMPTY]
    for i in range(1, m.n + 1):
        j = partner[i]
        if j is not None and j > i:
            t, _ = row_insert(t, j)
        elif j is not None:
            if t[1, 1] != i:
                raise RuntimeError(f'closer {i} is not the minimal open partner (found {t[1, 1]}), '
                                   f'matching {sorted(m.edges)} is corrupted')
            t, _ = delete_min(t)
        shapes.append(t.shape)
    return OscillatingTableau(tuple(shapes))


def oscillating_to_matching(o: OscillatingTableau) -> PartialMatching:
    t = PartialTableau()
    edges = []
    for i in range(o.length, 0, -1):
        prev, curr = o.shapes[i - 1], o.shapes[i]
        if t.shape != curr:
            raise TableauError(f'tableau shape {t.shape} does not match {curr} at step {i}')
        kind, cell = oscillation_step(prev, curr)
        if kind == 'remove':
            t = reverse_delete_min(t, cell, i)
        elif kind == 'add':
            t, j = reverse_row_insert(t, cell)
            edges.append((i, j))
    assert not t.rows, f'tableau {t} left over after unwinding the shape sequence'
    return PartialMatching(o.length, frozenset(edges))


def conjugate_oscillating(o: OscillatingTableau) -> OscillatingTableau:
    return OscillatingTableau(tuple(conjugate(shape) for shape in o.shapes))


def matching_chain_numbers(m: PartialMatching) -> Tuple[int, int]:
    """(proper crossing number, proper nesting number) read off the shape sequence."""
    shapes = matching_to_oscillating(m).shapes
    return max(s.width for s in shapes), max(s.height for s in shapes)


def iterate_matchings(n: int) -> Iterator[PartialMatching]:
    """Every partial matching on vertices 1..n."""
    def extend(free: Tuple[int, ...]) -> Iterator[List[Tuple[int, int]]]:
        if not free:
            yield []
            return
        first, rest = free[0], free[1:]
        for edges in extend(rest):
            yield edges
        for k, partner in enumerate(rest):
            for edges in extend(rest[:k] + rest[k + 1:]):
                yield [(first, partner)] + edges

    for edges in extend(tuple(range(1, n + 1))):
        yield PartialMatching(n, frozenset(edges))
