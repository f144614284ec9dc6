"""The crossing/nesting involution Psi on permutations.

Each side of the arc diagram is inflated into a partial matching, pushed through the oscillating tableau
bijection with every shape conjugated, deflated back and the two sides are glued into a permutation again.
Conjugation keeps the opener/closer pattern, so the degree classes of every vertex survive the round trip.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from arcperm.perm_core import Arc, Permutation, PermutationError, Semantics, Side, recombine
from arcperm.tableau import (PartialMatching, conjugate_oscillating, matching_to_oscillating,
                             oscillating_to_matching)

logger = logging.getLogger(__name__)


class InflationError(ValueError):
    pass


@dataclass(frozen=True)
class SidedDiagram:
    """One side of an arc diagram as a standalone diagram, arcs given as (left, right) with left <= right."""
    n: int
    arcs: FrozenSet[Tuple[int, int]]
    semantics: Semantics

    def __post_init__(self):
        object.__setattr__(self, 'arcs', frozenset(tuple(a) for a in self.arcs))
        lefts, rights = set(), set()
        for left, right in self.arcs:
            if not 1 <= left <= right <= self.n:
                raise InflationError(f'arc ({left}, {right}) is not within 1..{self.n} with left <= right')
            if left == right and self.semantics == Semantics.PROPER:
                raise InflationError(f'loop at vertex {left} in a proper diagram')
            if left in lefts or right in rights:
                raise InflationError(f'arc ({left}, {right}) reuses an endpoint')
            lefts.add(left)
            rights.add(right)

    @property
    def side(self) -> Side:
        return Side.UPPER if self.semantics == Semantics.ENHANCED else Side.LOWER

    def to_arcs(self) -> List[Arc]:
        return [Arc(left, right, self.side) for left, right in sorted(self.arcs)]


@dataclass(frozen=True)
class InflationMap:
    """Positions of the copies of each original vertex after inflation.

    `forward[v - 1]` lists one position, or two adjacent positions for a split vertex: opener copy first
    under enhanced semantics, closer copy first under proper semantics. `pattern` is the opener ('o'),
    closer ('c') and isolated ('.') pattern of the inflated matching.
    """
    original_n: int
    inflated_n: int
    forward: Tuple[Tuple[int, ...], ...]
    semantics: Semantics
    pattern: str

    def opener_copy(self, vertex: int) -> int:
        copies = self.forward[vertex - 1]
        if len(copies) == 1:
            return copies[0]
        return copies[0] if self.semantics == Semantics.ENHANCED else copies[1]

    def closer_copy(self, vertex: int) -> int:
        copies = self.forward[vertex - 1]
        if len(copies) == 1:
            return copies[0]
        return copies[1] if self.semantics == Semantics.ENHANCED else copies[0]

    def backward(self) -> Dict[int, int]:
        return {position: v for v, copies in enumerate(self.forward, start=1) for position in copies}


def upper_diagram(perm: Permutation) -> SidedDiagram:
    return SidedDiagram(perm.n, frozenset((a, v) for a, v in enumerate(perm.image, start=1) if a <= v),
                        Semantics.ENHANCED)


def lower_diagram(perm: Permutation) -> SidedDiagram:
    return SidedDiagram(perm.n, frozenset((v, a) for a, v in enumerate(perm.image, start=1) if a > v),
                        Semantics.PROPER)


def inflate(d: SidedDiagram) -> Tuple[PartialMatching, InflationMap]:
    """Split every vertex carrying two arc ends (loop or transient) into two adjacent vertices."""
    lefts = {left for left, _ in d.arcs}
    rights = {right for _, right in d.arcs}
    forward = []
    position = 0
    for v in range(1, d.n + 1):
        if v in lefts and v in rights:
            forward.append((position + 1, position + 2))
            position += 2
        else:
            forward.append((position + 1,))
            position += 1
    mapping = InflationMap(d.n, position, tuple(forward), d.semantics, pattern='')
    edges = frozenset((mapping.opener_copy(left), mapping.closer_copy(right)) for left, right in d.arcs)
    matching = PartialMatching(position, edges)
    mapping = InflationMap(d.n, position, tuple(forward), d.semantics, pattern=matching.pattern())
    return matching, mapping


def deflate(m: PartialMatching, mapping: InflationMap) -> SidedDiagram:
    """Merge the copies of split vertices back, an edge between the two copies of a vertex becomes a loop."""
    if m.n != mapping.inflated_n:
        raise InflationError(f'matching has {m.n} vertices, inflation map expects {mapping.inflated_n}')
    pattern = m.pattern()
    if pattern != mapping.pattern:
        mismatch = next(i for i, (a, b) in enumerate(zip(pattern, mapping.pattern), start=1) if a != b)
        raise InflationError(f'inflated position {mismatch} has role {pattern[mismatch - 1]!r}, '
                             f'expected {mapping.pattern[mismatch - 1]!r}')
    backward = mapping.backward()
    arcs = frozenset((backward[i], backward[j]) for i, j in m.edges)
    return SidedDiagram(mapping.original_n, arcs, mapping.semantics)


def psi_sided(d: SidedDiagram) -> SidedDiagram:
    matching, mapping = inflate(d)
    swapped = oscillating_to_matching(conjugate_oscillating(matching_to_oscillating(matching)))
    return deflate(swapped, mapping)


def psi(perm: Permutation) -> Permutation:
    """Degree preserving involution swapping the crossing and the nesting number."""
    upper = psi_sided(upper_diagram(perm))
    lower = psi_sided(lower_diagram(perm))
    try:
        return recombine(upper.to_arcs(), lower.to_arcs(), perm.n)
    except PermutationError as e:
        raise RuntimeError(f'psi({perm}) produced an invalid diagram pair: {e}') from e
