"""Property suites behind `arcperm verify`.

Every check takes the size bound `n` and the run settings and returns one VerificationReport per size it
covers. Exhaustive sweeps cover sizes 1..n, randomized ones draw `args.samples` instances.
"""

import logging
import math
import time
from dataclasses import replace
from typing import Callable, Dict, Iterator, List, Tuple

import numpy as np
from tqdm import tqdm

from arcperm.arguments import RunArgs
from arcperm.enumeration import (CLOSURE_PREDICATES, MAX_BRUTE_FORCE_N, MAX_JOINT_N, MAX_REFINED_N, TABLE2,
                                 EnumerationError, VerificationReport, catalan, crossing_distribution,
                                 iterate_permutations, max_crossing_count, max_nesting_closed_form,
                                 max_nesting_count, pair_count_distribution, verify_bijection, verify_closure,
                                 verify_symmetry, verify_table2)
from arcperm.involution import deflate, inflate, lower_diagram, psi, upper_diagram
from arcperm.perm_core import Permutation, Semantics, arc_diagram, degree_sequence, recombine
from arcperm.statistics import ChainKind, ChainQuery, brute_force_chain_number, chain_number, chain_numbers
from arcperm.tableau import (PartialTableau, conjugate_oscillating, delete_min,
                             iterate_matchings, matching_chain_numbers, matching_to_oscillating,
                             oscillating_to_matching, reverse_delete_min, reverse_row_insert, row_insert)
from arcperm.utils import random_permutations

logger = logging.getLogger(__name__)

MAX_INVOLUTION_N = 8
MAX_TABLEAU_N = 10


def _permutations(n: int, args: RunArgs) -> Iterator[Permutation]:
    """All of S_n followed by `args.samples` random permutations of size up to `args.max_random_n`."""
    yield from iterate_permutations(n)
    if args.samples:
        yield from random_permutations(args.samples, args.max_random_n, args.seed + n)


def _bar(iterable, desc: str, args: RunArgs):
    return tqdm(iterable, desc=desc, disable=None if args.progress else True, leave=False)


def check_involution(n: int, args: RunArgs) -> VerificationReport:
    """Psi is an involution swapping Cr and Ne, keeping the degree sequence; inflation keeps chain numbers."""
    report = VerificationReport('involution', n)
    for perm in _bar(_permutations(n, args), f'involution n={n}', args):
        report.checked += 1
        image = psi(perm)
        if psi(image) != perm:
            report.fail(f'psi(psi({perm})) = {psi(image)}')
        cr, ne = chain_numbers(perm)
        if chain_numbers(image) != (ne, cr):
            report.fail(f'psi({perm}) = {image} has (cr, ne) = {chain_numbers(image)}, expected {(ne, cr)}')
        if degree_sequence(image) != degree_sequence(perm):
            report.fail(f'psi({perm}) = {image} changes the degree sequence')
        diagram = arc_diagram(perm)
        if recombine(diagram.upper, diagram.lower, perm.n) != perm:
            report.fail(f'{perm} does not survive recombination')
        for sided in (upper_diagram(perm), lower_diagram(perm)):
            matching, mapping = inflate(sided)
            if deflate(matching, mapping) != sided:
                report.fail(f'{sided.side.value} diagram of {perm} does not survive inflation')
            for kind in ChainKind:
                before = chain_number(ChainQuery.from_pairs(sided.arcs, kind, sided.semantics)).value
                after = chain_number(ChainQuery.from_pairs(matching.edges, kind, Semantics.PROPER)).value
                if before != after:
                    report.fail(f'inflating the {sided.side.value} diagram of {perm} changes the '
                                f'{kind.value} number from {before} to {after}')
    return report


def check_oracle(n: int, args: RunArgs) -> VerificationReport:
    """Sweep chain numbers agree with exhaustive clique search on both sides and both kinds."""
    report = VerificationReport('oracle', n)
    for perm in _bar(_permutations(n, args), f'oracle n={n}', args):
        report.checked += 1
        diagram = arc_diagram(perm)
        for arcs, semantics in ((diagram.upper, Semantics.ENHANCED), (diagram.lower, Semantics.PROPER)):
            for kind in ChainKind:
                query = ChainQuery(arcs, kind, semantics)
                fast, slow = chain_number(query).value, brute_force_chain_number(query).value
                if fast != slow:
                    report.fail(f'{perm}: {semantics.value} {kind.value} sweep gives {fast}, oracle {slow}')
    return report


def _random_tableau(rng: np.random.Generator, max_size: int) -> PartialTableau:
    t = PartialTableau(())
    labels = rng.choice(np.arange(1, 4 * max_size + 1), size=int(rng.integers(0, max_size + 1)), replace=False)
    for x in labels:
        t, _ = row_insert(t, int(x))
    return t


def check_tableau(n: int, args: RunArgs) -> VerificationReport:
    """Oscillating tableau bijection, chain correspondence and conjugation swap over all matchings of size n."""
    if n > MAX_TABLEAU_N:
        raise EnumerationError(f'tableau check covers matchings with at most {MAX_TABLEAU_N} vertices, got {n}')
    report = VerificationReport('tableau', n)
    for m in _bar(iterate_matchings(n), f'tableau n={n}', args):
        report.checked += 1
        o = matching_to_oscillating(m)
        if oscillating_to_matching(o) != m:
            report.fail(f'matching {sorted(m.edges)} does not survive the oscillating tableau round trip')
        cr, ne = matching_chain_numbers(m)
        expected = tuple(brute_force_chain_number(ChainQuery.from_pairs(m.edges, kind, Semantics.PROPER)).value
                         for kind in ChainKind)
        if (cr, ne) != expected:
            report.fail(f'matching {sorted(m.edges)}: shapes give (cr, ne) = {(cr, ne)}, oracle {expected}')
        swapped = oscillating_to_matching(conjugate_oscillating(o))
        if matching_chain_numbers(swapped) != (ne, cr) or swapped.pattern() != m.pattern():
            report.fail(f'conjugating {sorted(m.edges)} gives {sorted(swapped.edges)}')
        if oscillating_to_matching(conjugate_oscillating(matching_to_oscillating(swapped))) != m:
            report.fail(f'double conjugation moves {sorted(m.edges)}')

    rng = np.random.default_rng(args.seed + n)
    for _ in range(args.samples):
        report.checked += 1
        t = _random_tableau(rng, max(n, 1))
        free = [x for x in range(1, 4 * max(n, 1) + 2) if x not in t]
        x = int(rng.choice(free))
        inserted, cell = row_insert(t, x)
        restored, y = reverse_row_insert(inserted, cell)
        if restored != t or y != x:
            report.fail(f'reverse_row_insert does not undo inserting {x} into {t}')
        if len(t):
            deleted, vacated = delete_min(t)
            if reverse_delete_min(deleted, vacated, min(t.entries())) != t:
                report.fail(f'reverse_delete_min does not undo delete_min on {t}')
    return report


def check_pairs(n: int, args: RunArgs) -> VerificationReport:
    report = VerificationReport('pairs', n, checked=math.factorial(n))
    crossings, nestings = pair_count_distribution(n, args.jobs, args.progress)
    if crossings != nestings:
        report.fail(f'crossing pair counts {dict(sorted(crossings.items()))} differ from nesting pair counts '
                    f'{dict(sorted(nestings.items()))}')
    return report


def check_catalan(n: int, args: RunArgs) -> VerificationReport:
    report = VerificationReport('catalan', n, checked=1)
    noncrossing = crossing_distribution(n, ChainKind.CROSSING, args.jobs, args.progress)[1]
    if noncrossing != catalan(n):
        report.fail(f'{noncrossing} non-crossing permutations of size {n}, catalan({n}) = {catalan(n)}')
    return report


def check_maxnesting(n: int, args: RunArgs) -> VerificationReport:
    report = VerificationReport('maxnesting', n, checked=1)
    if n < 2:
        return report
    nesting = max_nesting_count(n, args.jobs, args.progress)
    crossing = max_crossing_count(n, args.jobs, args.progress)
    closed_form = max_nesting_closed_form(n)
    if not nesting == crossing == closed_form:
        report.fail(f'n={n}: {nesting} maximum nestings, {crossing} maximum crossings, closed form {closed_form}')
    return report


def check_symmetry(n: int, args: RunArgs) -> VerificationReport:
    return verify_symmetry(n, n <= MAX_REFINED_N, args.jobs, args.progress)


def check_table2(n: int, args: RunArgs) -> VerificationReport:
    return verify_table2(n, args.jobs, args.progress, min_n=n)


def check_bijection(n: int, args: RunArgs) -> VerificationReport:
    return verify_bijection(n)


def check_closure(n: int, args: RunArgs) -> VerificationReport:
    report = VerificationReport('closure', n)
    for predicate in CLOSURE_PREDICATES:
        sub = verify_closure(n, predicate)
        report.checked += sub.checked
        for failure in sub.failures:
            report.fail(failure)
    return report


CheckFn = Callable[[int, RunArgs], VerificationReport]

# check name -> (per-size check, largest size it accepts)
CHECKS: Dict[str, Tuple[CheckFn, int]] = {
    'symmetry': (check_symmetry, MAX_JOINT_N),
    'maxnesting': (check_maxnesting, MAX_BRUTE_FORCE_N),
    'catalan': (check_catalan, MAX_BRUTE_FORCE_N),
    'involution': (check_involution, MAX_INVOLUTION_N),
    'table2': (check_table2, max(TABLE2)),
    'oracle': (check_oracle, MAX_INVOLUTION_N),
    'tableau': (check_tableau, MAX_TABLEAU_N),
    'bijection': (check_bijection, MAX_JOINT_N),
    'pairs': (check_pairs, MAX_JOINT_N),
    'closure': (check_closure, MAX_JOINT_N),
}


def run_checks(check: str, n: int, args: RunArgs) -> List[VerificationReport]:
    """Run `check` (or every check for 'all') for each size 1..n.

    Random samples are drawn only at the largest size, smaller sizes are swept exhaustively.

    Args:
        check (str): a key of CHECKS or 'all'
        n (int): largest size; under 'all' each check is capped at its own bound
        args (RunArgs): jobs, seed, samples and progress settings

    Returns:
        List[VerificationReport]: one report per check and size
    """
    if check != 'all' and check not in CHECKS:
        raise EnumerationError(f'unknown check {check!r}, expected one of {sorted(CHECKS)} or all')
    if n < 1:
        raise EnumerationError(f'n should be at least 1, got {n}')
    names = list(CHECKS) if check == 'all' else [check]
    reports = []
    for name in names:
        fn, bound = CHECKS[name]
        if n > bound and check != 'all':
            raise EnumerationError(f'{name} check supports n up to {bound}, got {n}')
        top = min(n, bound)
        for size in range(1, top + 1):
            start = time.time()
            report = fn(size, args if size == top else replace(args, samples=0))
            status = 'passed' if report.passed else f'FAILED ({len(report.failures)} failures)'
            logger.info(f'{name} n={size}: {status}, {report.checked} cases in {time.time() - start:.2f}s')
            reports.append(report)
    return reports
