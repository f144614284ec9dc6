import io
import json
import logging
from contextlib import contextmanager, redirect_stdout
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

import click
import pandas as pd
import typer

from arcperm.arguments import RunArgs, parse_env_args
from arcperm.enumeration import MAX_N, crossing_distribution, joint_distribution
from arcperm.involution import psi
from arcperm.perm_core import (Permutation, arc_diagram, degree_class_string, degree_sequence, format_permutation,
                               parse_permutation, vertex_types)
from arcperm.render import Format, render as render_diagram
from arcperm.statistics import (ChainKind, chain_numbers, exceedance_descent_counts, pair_counts,
                                side_chain_numbers)
from arcperm.utils import collect_run_configuration
from arcperm.verify import CHECKS, run_checks

logger = logging.getLogger(__name__)

app = typer.Typer(add_completion=False, help='crossings and nestings of permutations as arc diagrams')


@dataclass
class CommandResult:
    exit_code: int
    payload: str


@contextmanager
def _rejecting(param_hint: Optional[str] = None):
    try:
        yield
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint=param_hint) from e


def _permutation(text: str) -> Permutation:
    with _rejecting('PERM'):
        return parse_permutation(text)


def _settings(**overrides) -> RunArgs:
    with _rejecting():
        return parse_env_args(**overrides)


def _emit(payload: str, out: Optional[Path]) -> None:
    if out is None:
        typer.echo(payload)
        return
    out.write_text(payload + '\n')
    logger.info(f'wrote {out}')


def _emit_frame(frame: pd.DataFrame, out: Optional[Path]) -> None:
    _emit(frame.to_csv(index=False, lineterminator='\n').rstrip('\n'), out)


@app.callback()
def main(log_level: Optional[str] = typer.Option(None, help='DEBUG, INFO or WARNING (env ARCPERM_LOG_LEVEL)')):
    args = _settings(log_level=log_level)
    with _rejecting('--log-level'):
        logging.basicConfig(format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                            level=args.log_level.upper())


@app.command()
def stats(perm: str = typer.Argument(..., help='one-line notation, e.g. "9 5 6 7 8 3 2 1 4 12 11 10"')):
    """crossing and nesting numbers, degree sequences and arcs of a permutation as JSON
    """
    sigma = _permutation(perm)
    cr, ne = chain_numbers(sigma)
    degrees = degree_sequence(sigma)
    diagram = arc_diagram(sigma)
    crossing_pairs, nesting_pairs = pair_counts(sigma)
    weak_exceedances, deficiencies = exceedance_descent_counts(sigma)
    upper_cr, upper_ne, lower_cr, lower_ne = side_chain_numbers(sigma)
    payload = {
        'n': sigma.n,
        'cr': cr,
        'ne': ne,
        'degree_upper': [list(d) for d in degrees.upper],
        'degree_lower': [list(d) for d in degrees.lower],
        'degree_class': degree_class_string(sigma),
        'vertex_types': [t.value for t in vertex_types(sigma)],
        'upper_arcs': [list(arc.as_pair()) for arc in sorted(diagram.upper)],
        'lower_arcs': [list(arc.as_pair()) for arc in sorted(diagram.lower)],
        'crossing_pairs': crossing_pairs,
        'nesting_pairs': nesting_pairs,
        'weak_exceedances': weak_exceedances,
        'deficiencies': deficiencies,
        'side_chain_numbers': {'upper_cr': upper_cr, 'upper_ne': upper_ne, 'lower_cr': lower_cr, 'lower_ne': lower_ne},
    }
    typer.echo(json.dumps(payload, separators=(',', ':')))


@app.command('psi')
def psi_command(perm: str = typer.Argument(..., help='one-line notation')):
    """image of a permutation under the crossing/nesting involution
    """
    typer.echo(format_permutation(psi(_permutation(perm))))


@app.command()
def table(stat: ChainKind = typer.Option(ChainKind.CROSSING),
          max_n: int = typer.Option(..., '--max-n'),
          jobs: Optional[int] = typer.Option(None),
          out: Optional[Path] = typer.Option(None)):
    """number of permutations of S_n with crossing (nesting) number k for n = 1..max_n, CSV `n,k,count`
    """
    args = _settings(jobs=jobs)
    if not 1 <= max_n <= MAX_N:
        raise typer.BadParameter(f'should be in 1..{MAX_N}, got {max_n}', param_hint='--max-n')
    frames = []
    for n in range(1, max_n + 1):
        frames.append(crossing_distribution(n, stat, args.jobs, args.progress).to_frame())
        logger.info(f'{stat.value} distribution for n={n} done')
    _emit_frame(pd.concat(frames, ignore_index=True), out)


@app.command()
def joint(n: int = typer.Option(...),
          by_degree: bool = typer.Option(False, '--by-degree'),
          jobs: Optional[int] = typer.Option(None),
          out: Optional[Path] = typer.Option(None)):
    """joint (cr, ne) distribution over S_n, optionally refined by degree class, CSV `n,cr,ne[,degree_class],count`
    """
    args = _settings(jobs=jobs)
    with _rejecting('--n'):
        distribution = joint_distribution(n, by_degree, args.jobs, args.progress)
    _emit_frame(distribution.to_frame(), out)


@app.command()
def verify(check: str = typer.Option('all', help=f'one of {", ".join(CHECKS)} or all'),
           n: int = typer.Option(...),
           samples: Optional[int] = typer.Option(None, help='random instances for randomized checks'),
           seed: Optional[int] = typer.Option(None),
           max_random_n: Optional[int] = typer.Option(None),
           jobs: Optional[int] = typer.Option(None),
           out: Optional[Path] = typer.Option(None, help='also save run configuration and reports as JSON')):
    """run verification checks up to size n, one JSON report per line; exit code 1 if any check fails
    """
    args = _settings(samples=samples, seed=seed, max_random_n=max_random_n, jobs=jobs)
    with _rejecting('--check/--n'):
        reports = run_checks(check, n, args)
    for report in reports:
        typer.echo(json.dumps(report.as_dict(), separators=(',', ':')))
    if out is not None:
        config = collect_run_configuration(args, {'check': check, 'n': n})
        out.write_text(json.dumps({'configuration': config, 'reports': [r.as_dict() for r in reports]}, indent=4))
        logger.info(f'wrote {out}')
    failed = [r for r in reports if not r.passed]
    if failed:
        logger.info(f'{len(failed)} of {len(reports)} checks failed')
        raise typer.Exit(code=1)
    logger.info(f'all {len(reports)} checks passed')


@app.command()
def render(perm: str = typer.Argument(..., help='one-line notation'),
           fmt: Format = typer.Option(Format.ASCII, '--format'),
           out: Optional[Path] = typer.Option(None)):
    """draw the arc diagram, upper arcs above the vertex line and lower arcs below it
    """
    sigma = _permutation(perm)
    with _rejecting('PERM'):
        drawing = render_diagram(sigma, fmt)
    _emit(drawing.rstrip('\n'), out)


def run(argv: Sequence[str]) -> CommandResult:
    """Run the command line in-process and capture standard output.

    Exit code 0 on success, 1 when a verification check fails, 2 on usage errors (payload then carries
    the usage text and the error message).
    """
    command = typer.main.get_command(app)
    buffer = io.StringIO()
    try:
        with redirect_stdout(buffer):
            result = command.main(args=list(argv), prog_name='arcperm', standalone_mode=False)
    except click.exceptions.UsageError as e:
        usage = e.ctx.get_usage() + '\n' if e.ctx is not None else ''
        return CommandResult(2, usage + f'Error: {e.format_message()}')
    exit_code = result if isinstance(result, int) else 0
    return CommandResult(exit_code, buffer.getvalue())


def entrypoint(argv: Optional[List[str]] = None) -> None:
    app(args=argv, prog_name='arcperm')
