"""Crossing and nesting numbers of arc diagrams and permutations.

Chain numbers are computed by sweeping straddle points: every k-crossing (k-nesting) has a point that all
of its arcs straddle, and among the arcs straddling a point, sorted by left endpoint, the crossings are the
strictly increasing runs of right endpoints and the nestings the strictly decreasing ones.
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from typing import Callable, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from arcperm.perm_core import Arc, Permutation, Semantics, Side, SIDE_SEMANTICS, arc_diagram

logger = logging.getLogger(__name__)

# subset enumeration bound of the oracle
MAX_ORACLE_ARCS = 25

Pair = Tuple[int, int]


class ChainQueryError(ValueError):
    pass


class ChainKind(str, Enum):
    CROSSING = 'crossing'
    NESTING = 'nesting'


@dataclass(frozen=True)
class ChainQuery:
    arcs: FrozenSet[Arc]
    kind: ChainKind
    semantics: Semantics

    def __post_init__(self):
        object.__setattr__(self, 'arcs', frozenset(self.arcs))
        sides = {arc.side for arc in self.arcs}
        if len(sides) > 1:
            raise ChainQueryError('arc set mixes upper and lower arcs')
        if sides and SIDE_SEMANTICS[sides.pop()] != self.semantics:
            raise ChainQueryError(f'{self.semantics.value} semantics applied to the wrong side')

    @classmethod
    def from_pairs(cls, pairs: Iterable[Pair], kind: ChainKind, semantics: Semantics) -> 'ChainQuery':
        """Query over bare (left, right) pairs, e.g. the edges of a partial matching."""
        side = Side.UPPER if semantics == Semantics.ENHANCED else Side.LOWER
        return cls(frozenset(Arc(left, right, side) for left, right in pairs), kind, semantics)

    def pairs(self) -> List[Pair]:
        return sorted(arc.as_pair() for arc in self.arcs)


@dataclass(frozen=True)
class ChainNumber:
    value: int

    def __post_init__(self):
        assert self.value >= 0, f'chain number must be nonnegative, got {self.value}'

    def __int__(self) -> int:
        return self.value


def longest_increasing(seq: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence (patience sorting)."""
    piles: List[int] = []
    for x in seq:
        i = bisect_left(piles, x)
        if i == len(piles):
            piles.append(x)
        else:
            piles[i] = x
    return len(piles)


def longest_decreasing(seq: Sequence[int]) -> int:
    return longest_increasing([-x for x in seq])


def straddle_sequences(pairs: Sequence[Pair], semantics: Semantics) -> Iterator[List[int]]:
    """Right endpoints of the arcs straddling each point, ordered by left endpoint.

    Enhanced points are the vertices t (left <= t <= right), proper points are the gaps t + 1/2
    (left <= t < right).
    """
    pairs = sorted(pairs)
    if not pairs:
        return
    start = pairs[0][0]
    stop = max(right for _, right in pairs)
    if semantics == Semantics.ENHANCED:
        for t in range(start, stop + 1):
            yield [right for left, right in pairs if left <= t <= right]
    else:
        for t in range(start, stop):
            yield [right for left, right in pairs if left <= t < right]


def _sweep(pairs: Sequence[Pair], kind: ChainKind, semantics: Semantics) -> int:
    longest = longest_increasing if kind == ChainKind.CROSSING else longest_decreasing
    return max((longest(rights) for rights in straddle_sequences(pairs, semantics)), default=0)


def chain_number(query: ChainQuery) -> ChainNumber:
    return ChainNumber(_sweep(query.pairs(), query.kind, query.semantics))


def related(kind: ChainKind, semantics: Semantics) -> Callable[[Pair, Pair], bool]:
    """Pairwise crossing/nesting test for two arcs given with first[0] < second[0]."""
    if semantics == Semantics.ENHANCED:
        if kind == ChainKind.CROSSING:
            return lambda a, b: a[0] < b[0] <= a[1] < b[1]
        return lambda a, b: a[0] < b[0] <= b[1] < a[1]
    if kind == ChainKind.CROSSING:
        return lambda a, b: a[0] < b[0] < a[1] < b[1]
    return lambda a, b: a[0] < b[0] < b[1] < a[1]


def brute_force_chain_number(query: ChainQuery) -> ChainNumber:
    """Largest arc subset whose members pairwise cross (nest), by exhaustive clique search."""
    if len(query.arcs) > MAX_ORACLE_ARCS:
        raise ChainQueryError(f'{len(query.arcs)} arcs exceed the oracle bound of {MAX_ORACLE_ARCS}')
    rel = related(query.kind, query.semantics)
    best = 0

    def extend(size: int, candidates: List[Pair]) -> None:
        nonlocal best
        best = max(best, size)
        for i, arc in enumerate(candidates):
            if size + len(candidates) - i <= best:
                return
            extend(size + 1, [other for other in candidates[i + 1:] if rel(arc, other)])

    extend(0, query.pairs())
    return ChainNumber(best)


def side_chain_numbers(perm: Permutation) -> Tuple[int, int, int, int]:
    """Cr*(A+), Ne*(A+), Cr(A-), Ne(A-) of the upper (enhanced) and lower (proper) diagrams."""
    upper, lower = _split_pairs(perm)
    return (_sweep(upper, ChainKind.CROSSING, Semantics.ENHANCED),
            _sweep(upper, ChainKind.NESTING, Semantics.ENHANCED),
            _sweep(lower, ChainKind.CROSSING, Semantics.PROPER),
            _sweep(lower, ChainKind.NESTING, Semantics.PROPER))


def _split_pairs(perm: Permutation) -> Tuple[List[Pair], List[Pair]]:
    upper, lower = [], []
    for a, value in enumerate(perm.image, start=1):
        if a <= value:
            upper.append((a, value))
        else:
            lower.append((value, a))
    return upper, lower


def chain_numbers(perm: Permutation) -> Tuple[int, int]:
    """(Cr, Ne) in a single sweep per side; the hot path of exhaustive enumeration."""
    upper, lower = _split_pairs(perm)
    cr = ne = 0
    for pairs, semantics in ((upper, Semantics.ENHANCED), (lower, Semantics.PROPER)):
        for rights in straddle_sequences(pairs, semantics):
            if len(rights) <= min(cr, ne):
                continue
            cr = max(cr, longest_increasing(rights))
            ne = max(ne, longest_decreasing(rights))
    return cr, ne


def crossing_number(perm: Permutation) -> ChainNumber:
    diagram = arc_diagram(perm)
    return ChainNumber(max(chain_number(ChainQuery(diagram.upper, ChainKind.CROSSING, Semantics.ENHANCED)).value,
                           chain_number(ChainQuery(diagram.lower, ChainKind.CROSSING, Semantics.PROPER)).value))


def nesting_number(perm: Permutation) -> ChainNumber:
    diagram = arc_diagram(perm)
    return ChainNumber(max(chain_number(ChainQuery(diagram.upper, ChainKind.NESTING, Semantics.ENHANCED)).value,
                           chain_number(ChainQuery(diagram.lower, ChainKind.NESTING, Semantics.PROPER)).value))


def pair_counts(perm: Permutation) -> Tuple[int, int]:
    """Number of crossing pairs and nesting pairs, over both sides with their own semantics."""
    crossings = nestings = 0
    for pairs, semantics in zip(_split_pairs(perm), (Semantics.ENHANCED, Semantics.PROPER)):
        pairs = sorted(pairs)
        crosses = related(ChainKind.CROSSING, semantics)
        nests = related(ChainKind.NESTING, semantics)
        for i, a in enumerate(pairs):
            for b in pairs[i + 1:]:
                crossings += crosses(a, b)
                nestings += nests(a, b)
    return crossings, nestings


def exceedance_descent_counts(perm: Permutation) -> Tuple[int, int]:
    weak_exceedances = sum(1 for a, value in enumerate(perm.image, start=1) if value >= a)
    return weak_exceedances, perm.n - weak_exceedances
