"""Permutations, arc diagrams, vertex types and degree sequences."""

import logging
import numbers
import re
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

DegreePair = Tuple[int, int]


class PermutationError(ValueError):
    pass


class Side(str, Enum):
    UPPER = 'upper'
    LOWER = 'lower'


class Semantics(str, Enum):
    # enhanced: shared endpoints and loops count (upper diagram)
    ENHANCED = 'enhanced'
    # proper: strict inequalities only (lower diagram, partial matchings)
    PROPER = 'proper'


SIDE_SEMANTICS = {Side.UPPER: Semantics.ENHANCED, Side.LOWER: Semantics.PROPER}


def _as_vertex(value, index: int) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise PermutationError(f'value {value!r} at index {index} is not an integer')
    return int(value)


def _validate_image(image: Sequence[int]) -> None:
    n = len(image)
    if n == 0:
        raise PermutationError('empty permutation')
    seen = {}
    for index, value in enumerate(image, start=1):
        if not 1 <= value <= n:
            raise PermutationError(f'value {value} at index {index} is outside 1..{n}')
        if value in seen:
            raise PermutationError(f'value {value} at index {index} repeated (first seen at index {seen[value]})')
        seen[value] = index


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n} in one-line notation, `image[a - 1] = sigma(a)`."""
    image: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'image', tuple(_as_vertex(v, i) for i, v in enumerate(self.image, start=1)))
        _validate_image(self.image)

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, a: int) -> int:
        return self.image[a - 1]

    def __len__(self) -> int:
        return len(self.image)

    def __iter__(self):
        return iter(self.image)

    def __str__(self) -> str:
        return format_permutation(self)

    def inverse(self) -> 'Permutation':
        inv = [0] * self.n
        for a, value in enumerate(self.image, start=1):
            inv[value - 1] = a
        return Permutation(tuple(inv))


@dataclass(frozen=True, order=True)
class Arc:
    """Arc of an arc diagram.

    Upper arcs encode sigma(left) = right and may be loops. Lower arcs are stored orientation-reversed,
    (sigma(a), a) for a deficiency a, so left < right always holds and they encode sigma(right) = left.
    """
    left: int
    right: int
    side: Side = Side.UPPER

    def __post_init__(self):
        if self.left < 1 or self.right < 1:
            raise PermutationError(f'arc ({self.left}, {self.right}) uses a vertex below 1')
        if self.side == Side.UPPER and self.left > self.right:
            raise PermutationError(f'upper arc ({self.left}, {self.right}) has left > right')
        if self.side == Side.LOWER and self.left >= self.right:
            raise PermutationError(f'lower arc ({self.left}, {self.right}) must satisfy left < right')

    @property
    def is_loop(self) -> bool:
        return self.left == self.right

    def as_pair(self) -> Tuple[int, int]:
        return self.left, self.right


@dataclass(frozen=True)
class ArcDiagram:
    n: int
    upper: FrozenSet[Arc]
    lower: FrozenSet[Arc]


class VertexType(str, Enum):
    OPENER = 'opener'
    CLOSER = 'closer'
    LOOP = 'loop'
    UPPER_TRANSIENT = 'upper_transient'
    LOWER_TRANSIENT = 'lower_transient'


class DegreeClass(str, Enum):
    O = 'O'  # noqa: E741
    C = 'C'
    U = 'U'
    L = 'L'


# rows of the vertex type table: D(i) and the lower sequence D_bar(i)
_UPPER_DEGREE = {
    VertexType.OPENER: (1, 0),
    VertexType.CLOSER: (0, 1),
    VertexType.LOOP: (1, 1),
    VertexType.UPPER_TRANSIENT: (1, 1),
    VertexType.LOWER_TRANSIENT: (0, 0),
}
_LOWER_DEGREE = {
    VertexType.OPENER: (1, 0),
    VertexType.CLOSER: (0, 1),
    VertexType.LOOP: (0, 0),
    VertexType.UPPER_TRANSIENT: (0, 0),
    VertexType.LOWER_TRANSIENT: (1, 1),
}
_DEGREE_CLASS = {
    VertexType.OPENER: DegreeClass.O,
    VertexType.CLOSER: DegreeClass.C,
    VertexType.LOOP: DegreeClass.U,
    VertexType.UPPER_TRANSIENT: DegreeClass.U,
    VertexType.LOWER_TRANSIENT: DegreeClass.L,
}


@dataclass(frozen=True)
class DegreeSequence:
    upper: Tuple[DegreePair, ...]
    lower: Tuple[DegreePair, ...]

    def __post_init__(self):
        if len(self.upper) != len(self.lower):
            raise PermutationError('upper and lower degree sequences differ in length, '
                                   f'{len(self.upper)} != {len(self.lower)}')
        for i, (d, d_bar) in enumerate(zip(self.upper, self.lower), start=1):
            if (d[0] + d_bar[1], d[1] + d_bar[0]) != (1, 1):
                raise PermutationError(f'degree pairs {d} and {d_bar} at vertex {i} do not sum to (1, 1)')


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation, integers separated by whitespace and/or commas.

    Args:
        text (str): e.g. `"2 3 1"` or `"2,3,1"`

    Returns:
        Permutation: validated permutation
    """
    tokens = [t for t in re.split(r'[\s,]+', text.strip()) if t]
    if not tokens:
        raise PermutationError('empty permutation')
    values = []
    for index, token in enumerate(tokens, start=1):
        try:
            values.append(int(token))
        except ValueError:
            raise PermutationError(f'token {token!r} at index {index} is not an integer') from None
    return Permutation(tuple(values))


def format_permutation(perm: Permutation) -> str:
    return ' '.join(str(v) for v in perm.image)


def arc_diagram(perm: Permutation) -> ArcDiagram:
    upper, lower = [], []
    for a, value in enumerate(perm.image, start=1):
        if a <= value:
            upper.append(Arc(a, value, Side.UPPER))
        else:
            lower.append(Arc(value, a, Side.LOWER))
    return ArcDiagram(perm.n, frozenset(upper), frozenset(lower))


def vertex_types(perm: Permutation) -> List[VertexType]:
    inverse = perm.inverse()
    types = []
    for i in range(1, perm.n + 1):
        if perm(i) == i:
            types.append(VertexType.LOOP)
            continue
        outgoing_upper = perm(i) > i
        incoming_upper = inverse(i) < i
        if outgoing_upper and incoming_upper:
            types.append(VertexType.UPPER_TRANSIENT)
        elif outgoing_upper:
            types.append(VertexType.OPENER)
        elif incoming_upper:
            types.append(VertexType.CLOSER)
        else:
            types.append(VertexType.LOWER_TRANSIENT)
    return types


def degree_sequence(perm: Permutation) -> DegreeSequence:
    types = vertex_types(perm)
    return DegreeSequence(upper=tuple(_UPPER_DEGREE[t] for t in types),
                          lower=tuple(_LOWER_DEGREE[t] for t in types))


def degree_classes(perm: Permutation) -> List[DegreeClass]:
    return [_DEGREE_CLASS[t] for t in vertex_types(perm)]


def degree_class_string(perm: Permutation) -> str:
    return ''.join(c.value for c in degree_classes(perm))


def recombine(upper: Iterable[Arc], lower: Iterable[Arc], n: int) -> Permutation:
    """Glue an upper and a lower diagram back into a permutation.

    Upper arc (l, r) sets sigma(l) = r, lower arc (l, r) sets sigma(r) = l.
    """
    image: List[Optional[int]] = [None] * n
    preimage: List[Optional[int]] = [None] * n

    def assign(a: int, value: int) -> None:
        for vertex in (a, value):
            if not 1 <= vertex <= n:
                raise PermutationError(f'vertex {vertex} is outside 1..{n}')
        if image[a - 1] is not None:
            raise PermutationError(f'vertex {a} has two images: {image[a - 1]} and {value}')
        if preimage[value - 1] is not None:
            raise PermutationError(f'vertex {value} has two pre-images: {preimage[value - 1]} and {a}')
        image[a - 1] = value
        preimage[value - 1] = a

    for arc in upper:
        assign(arc.left, arc.right)
    for arc in lower:
        if arc.left == arc.right:
            raise PermutationError(f'lower loop at vertex {arc.left}')
        assign(arc.right, arc.left)
    for a, value in enumerate(image, start=1):
        if value is None:
            raise PermutationError(f'vertex {a} has no image')
    return Permutation(tuple(image))
