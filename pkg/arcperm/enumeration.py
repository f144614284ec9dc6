"""Exhaustive enumeration over S_n: distribution tables, symmetry checks and closed forms.

S_n is never materialized. It is cut into contiguous lexicographic blocks (all permutations sharing a
prefix), each block is tallied into a Counter independently and the counters are summed, so results do not
depend on the number of workers or on block boundaries.
"""

import itertools
import logging
import math
import multiprocessing
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Hashable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from arcperm.involution import psi
from arcperm.perm_core import Permutation, Semantics, degree_class_string
from arcperm.statistics import ChainKind, ChainQuery, chain_number, chain_numbers, crossing_number, pair_counts
from arcperm.utils import DisjointSet

logger = logging.getLogger(__name__)

MAX_N = 12
MAX_JOINT_N = 8
MAX_REFINED_N = 7
MAX_BRUTE_FORCE_N = 9

# number of permutations of S_n with crossing number k, n = 1..9
TABLE2 = {
    1: [1],
    2: [2],
    3: [5, 1],
    4: [14, 10],
    5: [42, 76, 2],
    6: [132, 543, 45],
    7: [429, 3904, 701, 6],
    8: [1430, 29034, 9623, 233],
    9: [4862, 225753, 126327, 5914, 24],
}


class EnumerationError(ValueError):
    pass


@dataclass
class DistributionTable:
    """Counts of permutations of S_n by key: k, (Cr, Ne) or (Cr, Ne, degree class string)."""
    n: int
    entries: Dict[Hashable, int]
    key_names: Tuple[str, ...] = ('k',)

    def __post_init__(self):
        self.entries = dict(sorted(self.entries.items()))
        assert self.total == math.factorial(self.n), \
            f'distribution for n={self.n} sums to {self.total}, expected {math.factorial(self.n)}'

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def __getitem__(self, key: Hashable) -> int:
        return self.entries.get(key, 0)

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for key, count in self.entries.items():
            key = key if isinstance(key, tuple) else (key,)
            rows.append((self.n, *key, count))
        return pd.DataFrame(rows, columns=['n', *self.key_names, 'count'])


@dataclass
class VerificationReport:
    check: str
    n: int
    passed: bool = True
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.passed = False
        self.failures.append(message)

    def as_dict(self) -> dict:
        return {'check': self.check, 'n': self.n, 'passed': self.passed, 'checked': self.checked,
                'failures': self.failures[:20]}


def _check_n(n: int, max_n: int = MAX_N) -> None:
    if not 1 <= n <= max_n:
        raise EnumerationError(f'n should be in 1..{max_n}, got {n}')


def permutation_blocks(n: int, depth: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Prefixes splitting S_n into contiguous lexicographic blocks."""
    _check_n(n)
    depth = min(n - 1, 2) if depth is None else depth
    return list(itertools.permutations(range(1, n + 1), depth))


def iterate_permutations(n: int, prefix: Sequence[int] = ()) -> Iterator[Permutation]:
    """All permutations of S_n (starting with `prefix`) in lexicographic order."""
    _check_n(n)
    prefix = tuple(prefix)
    rest = [v for v in range(1, n + 1) if v not in prefix]
    if len(rest) + len(prefix) != n:
        raise EnumerationError(f'prefix {prefix} is not a prefix of a permutation of size {n}')
    for tail in itertools.permutations(rest):
        yield Permutation(prefix + tail)


def _crossing_key(perm: Permutation) -> Hashable:
    return chain_numbers(perm)[0]


def _nesting_key(perm: Permutation) -> Hashable:
    return chain_numbers(perm)[1]


def _joint_key(perm: Permutation) -> Hashable:
    return chain_numbers(perm)


def _refined_key(perm: Permutation) -> Hashable:
    return (*chain_numbers(perm), degree_class_string(perm))


def _pairs_key(perm: Permutation) -> Hashable:
    return pair_counts(perm)


# keyed by name so that pool workers receive a picklable task
KEY_FUNCTIONS: Dict[str, Callable[[Permutation], Hashable]] = {
    'crossing': _crossing_key,
    'nesting': _nesting_key,
    'joint': _joint_key,
    'refined': _refined_key,
    'pairs': _pairs_key,
}


def _tally_block(task: Tuple[int, Tuple[int, ...], str]) -> Counter:
    n, prefix, key_name = task
    key_fn = KEY_FUNCTIONS[key_name]
    return Counter(key_fn(perm) for perm in iterate_permutations(n, prefix))


def tally(n: int, key_name: str, jobs: int = 1, progress: bool = False) -> Counter:
    """Count S_n by `KEY_FUNCTIONS[key_name]`, splitting the work over `jobs` processes."""
    _check_n(n)
    tasks = [(n, prefix, key_name) for prefix in permutation_blocks(n)]
    start = time.time()
    counts: Counter = Counter()
    bar = tqdm(total=len(tasks), desc=f'{key_name} n={n}', disable=None if progress else True, leave=False)
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(min(jobs, len(tasks))) as pool:
            for block in pool.imap_unordered(_tally_block, tasks):
                counts.update(block)
                bar.update()
    else:
        for task in tasks:
            counts.update(_tally_block(task))
            bar.update()
    bar.close()
    logger.debug(f'tallied {key_name} for n={n} over {len(tasks)} blocks in {time.time() - start:.2f}s')
    return counts


def crossing_distribution(n: int, stat: ChainKind = ChainKind.CROSSING, jobs: int = 1,
                          progress: bool = False) -> DistributionTable:
    _check_n(n)
    return DistributionTable(n, tally(n, ChainKind(stat).value, jobs, progress), key_names=('k',))


def joint_distribution(n: int, refine: bool = False, jobs: int = 1, progress: bool = False) -> DistributionTable:
    _check_n(n, MAX_REFINED_N if refine else MAX_JOINT_N)
    if refine:
        return DistributionTable(n, tally(n, 'refined', jobs, progress), key_names=('cr', 'ne', 'degree_class'))
    return DistributionTable(n, tally(n, 'joint', jobs, progress), key_names=('cr', 'ne'))


def verify_symmetry(n: int, refine: bool = False, jobs: int = 1, progress: bool = False,
                    table: Optional[DistributionTable] = None) -> VerificationReport:
    """Check NC_n(i, j, D) = NC_n(j, i, D) within every degree class key."""
    table = table or joint_distribution(n, refine, jobs, progress)
    report = VerificationReport('symmetry', n, checked=len(table.entries))
    groups: Dict[str, np.ndarray] = {}
    for key, count in table.entries.items():
        cr, ne = key[:2]
        group = key[2] if refine else ''
        matrix = groups.setdefault(group, np.zeros((n + 1, n + 1), dtype=np.int64))
        matrix[cr, ne] = count
    for group, matrix in groups.items():
        for cr, ne in zip(*np.nonzero(matrix != matrix.T)):
            if cr < ne:
                report.fail(f'{group or "all"}: NC({cr},{ne})={matrix[cr, ne]} != NC({ne},{cr})={matrix[ne, cr]}')
    return report


def max_nesting_count(n: int, jobs: int = 1, progress: bool = False) -> int:
    """Number of permutations of S_n with nesting number ceil(n/2), by brute force."""
    _check_n(n, MAX_BRUTE_FORCE_N)
    return crossing_distribution(n, ChainKind.NESTING, jobs, progress)[math.ceil(n / 2)]


def max_crossing_count(n: int, jobs: int = 1, progress: bool = False) -> int:
    _check_n(n, MAX_BRUTE_FORCE_N)
    return crossing_distribution(n, ChainKind.CROSSING, jobs, progress)[math.ceil(n / 2)]


def max_nesting_closed_form(n: int) -> int:
    if n < 1:
        raise EnumerationError(f'closed form needs n >= 1, got {n}')
    m = n // 2
    if n % 2:
        return math.factorial(m)
    return 2 * math.factorial(m + 1) - math.factorial(m - 1) - 1


def catalan(n: int) -> int:
    if n < 0:
        raise EnumerationError(f'catalan needs n >= 0, got {n}')
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


def k_noncrossing_counts(n: int, jobs: int = 1, progress: bool = False) -> Dict[int, Tuple[int, int]]:
    """For k = 2..n+1: (#{Cr < k}, #{Ne < k}), i.e. k-noncrossing and k-nonnesting permutations."""
    table = joint_distribution(n, False, jobs, progress)
    result = {}
    for k in range(2, n + 2):
        noncrossing = sum(c for (cr, _), c in table.entries.items() if cr < k)
        nonnesting = sum(c for (_, ne), c in table.entries.items() if ne < k)
        result[k] = (noncrossing, nonnesting)
    return result


def pair_count_distribution(n: int, jobs: int = 1, progress: bool = False) -> Tuple[Counter, Counter]:
    """Multisets of crossing-pair and nesting-pair counts over S_n."""
    _check_n(n, MAX_JOINT_N)
    joint = tally(n, 'pairs', jobs, progress)
    crossings, nestings = Counter(), Counter()
    for (cr, ne), count in joint.items():
        crossings[cr] += count
        nestings[ne] += count
    return crossings, nestings


def verify_table2(max_n: int = 9, jobs: int = 1, progress: bool = False, min_n: int = 1) -> VerificationReport:
    """Crossing distributions of S_min_n .. S_max_n against the TABLE2 rows."""
    _check_n(max_n, max(TABLE2))
    if not 1 <= min_n <= max_n:
        raise EnumerationError(f'min_n must lie in 1..{max_n}, got {min_n}')
    report = VerificationReport('table2', max_n)
    for n in range(min_n, max_n + 1):
        table = crossing_distribution(n, ChainKind.CROSSING, jobs, progress)
        row = [table[k] for k in range(1, max(table.entries) + 1)]
        report.checked += 1
        if row != TABLE2[n]:
            report.fail(f'n={n}: got {row}, expected {TABLE2[n]}')
    return report


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        if any(not b for b in self.blocks):
            raise EnumerationError('set partition has an empty block')
        blocks = tuple(sorted((frozenset(b) for b in self.blocks), key=min))
        object.__setattr__(self, 'blocks', blocks)
        covered = [v for b in blocks for v in b]
        if sorted(covered) != list(range(1, self.n + 1)):
            raise EnumerationError(f'blocks {[sorted(b) for b in blocks]} do not partition 1..{self.n}')

    def chain_arcs(self) -> List[Tuple[int, int]]:
        """Arcs joining consecutive elements of each block."""
        arcs = []
        for block in self.blocks:
            elements = sorted(block)
            arcs.extend(zip(elements, elements[1:]))
        return arcs

    def is_noncrossing(self) -> bool:
        query = ChainQuery.from_pairs(self.chain_arcs(), ChainKind.CROSSING, Semantics.PROPER)
        return chain_number(query).value <= 1

    def __str__(self) -> str:
        return '{' + ','.join('{' + ','.join(str(v) for v in sorted(b)) + '}' for b in self.blocks) + '}'


def set_partitions(n: int) -> Iterator[SetPartition]:
    def extend(k: int) -> Iterator[List[List[int]]]:
        if k == 0:
            yield []
            return
        for smaller in extend(k - 1):
            for i in range(len(smaller)):
                yield smaller[:i] + [smaller[i] + [k]] + smaller[i + 1:]
            yield smaller + [[k]]

    for blocks in extend(n):
        yield SetPartition(n, tuple(frozenset(b) for b in blocks))


def noncrossing_partitions(n: int) -> Iterator[SetPartition]:
    return (p for p in set_partitions(n) if p.is_noncrossing())


def noncrossing_to_partition(perm: Permutation) -> SetPartition:
    """Blocks are the classes of a ~ sigma(a) over lower arcs; loops and upper arcs add nothing."""
    if crossing_number(perm).value != 1:
        raise EnumerationError(f'{perm} has a 2-crossing')
    classes = DisjointSet(perm.n)
    for a, value in enumerate(perm.image, start=1):
        if a > value:
            classes.unite(a, value)
    return SetPartition(perm.n, tuple(frozenset(group) for group in classes.to_list()))


def partition_to_noncrossing(p: SetPartition) -> Permutation:
    """Inverse of `noncrossing_to_partition`.

    Consecutive block elements are joined below, singletons become loops and block minima are matched to
    block maxima above by bracket matching.
    """
    if not p.is_noncrossing():
        raise EnumerationError(f'{p} is a crossing partition')
    image = [0] * (p.n + 1)
    block_min, block_max = set(), set()
    for block in p.blocks:
        elements = sorted(block)
        if len(elements) == 1:
            image[elements[0]] = elements[0]
            continue
        for smaller, larger in zip(elements, elements[1:]):
            image[larger] = smaller
        block_min.add(elements[0])
        block_max.add(elements[-1])
    openers = []
    for v in range(1, p.n + 1):
        if v in block_max:
            image[openers.pop()] = v
        if v in block_min:
            openers.append(v)
    return Permutation(tuple(image[1:]))


def verify_bijection(n: int) -> VerificationReport:
    """noncrossing_to_partition is a bijection from non-crossing permutations onto non-crossing partitions."""
    _check_n(n, MAX_JOINT_N)
    report = VerificationReport('bijection', n)
    images = {}
    for perm in iterate_permutations(n):
        if chain_numbers(perm)[0] != 1:
            continue
        report.checked += 1
        partition = noncrossing_to_partition(perm)
        if partition in images:
            report.fail(f'{perm} and {images[partition]} both map to {partition}')
        images[partition] = perm
        if not partition.is_noncrossing():
            report.fail(f'{perm} maps to the crossing partition {partition}')
        if partition_to_noncrossing(partition) != perm:
            report.fail(f'{partition} does not map back to {perm}')
    expected = set(noncrossing_partitions(n))
    if set(images) != expected:
        report.fail(f'image has {len(images)} partitions, there are {len(expected)} non-crossing partitions')
    if report.checked != catalan(n) or len(expected) != catalan(n):
        report.fail(f'{report.checked} non-crossing permutations and {len(expected)} non-crossing partitions, '
                    f'catalan({n}) = {catalan(n)}')
    return report


# degree class subclasses closed under psi
CLOSURE_PREDICATES: Dict[str, Callable[[str], bool]] = {
    'no_lower_transient': lambda classes: 'L' not in classes,
    'no_upper_transient': lambda classes: 'U' not in classes,
}


def verify_closure(n: int, predicate: str) -> VerificationReport:
    """Psi maps the permutations whose degree class string satisfies `predicate` into the same subclass."""
    _check_n(n, MAX_JOINT_N)
    if predicate not in CLOSURE_PREDICATES:
        raise EnumerationError(f'unknown closure predicate {predicate!r}, expected one of {sorted(CLOSURE_PREDICATES)}')
    accepts = CLOSURE_PREDICATES[predicate]
    report = VerificationReport(f'closure:{predicate}', n)
    for perm in iterate_permutations(n):
        if not accepts(degree_class_string(perm)):
            continue
        report.checked += 1
        image = psi(perm)
        if not accepts(degree_class_string(image)):
            report.fail(f'psi({perm}) = {image} leaves the {predicate} subclass')
    return report
