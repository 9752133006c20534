"""CLI entry point for Tree-Spectra."""

import csv
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

import click

from tree_spectra import __version__
from tree_spectra.charpoly.polynomial import format_polynomial, matching_polynomial, multiplicity_of_one
from tree_spectra.cli.document import build_document
from tree_spectra.cli.dot import render_dot, select_vector
from tree_spectra.config.settings import Settings
from tree_spectra.errors import ConvergenceError, TreeSpectraError
from tree_spectra.trees.edgelist import read_tree
from tree_spectra.trees.generators import FAMILIES, ensemble
from tree_spectra.trees.tree import Tree
from tree_spectra.verify.analysis import TreeAnalysis
from tree_spectra.verify.engine import verify_all
from tree_spectra.verify.report import VerificationReport
from tree_spectra.verify.sign_graphs import relative_zero_tol

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2
BOUNDS_HEADER = ["n", "cover_size", "lambda_bar", "bound_volume", "bound_quotient", "tight_volume", "tight_quotient"]


class InputError(click.ClickException):
    """Bad input file, flag value or configuration."""

    exit_code = EXIT_INPUT


class TreeSpectraGroup(click.Group):
    """Command group that reports usage errors with the input-error exit code."""

    def main(self, *args, **kwargs):
        kwargs.pop("standalone_mode", None)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_INPUT if isinstance(e, click.UsageError) else e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_INPUT)
        if isinstance(rv, int):
            sys.exit(rv)
        return rv


def _settings(ctx: click.Context) -> Settings:
    return ctx.obj["settings"]


def _load_tree(path: str) -> Tree:
    try:
        return read_tree(path)
    except TreeSpectraError as e:
        raise InputError(f"{path}: {e}") from e


def _verify_one(args: tuple[Tree, Settings]) -> VerificationReport:
    t, settings = args
    return verify_all(t, settings)


def _bounds_row(args: tuple[Tree, Settings]) -> list[str]:
    t, settings = args
    analysis = TreeAnalysis(t, settings)
    sep = analysis.separation
    tol = settings.bound_tol
    return [
        str(t.n),
        str(analysis.covers.cover_size),
        f"{sep.lambda_bar:.12g}",
        f"{sep.bound_volume:.12g}",
        f"{sep.bound_quotient:.12g}",
        str(abs(sep.bound_volume - sep.lambda_bar) <= tol).lower(),
        str(abs(sep.bound_quotient - sep.lambda_bar) <= tol).lower(),
    ]


def _map_trees(fn, trees: list[Tree], settings: Settings, jobs: int) -> list:
    """Apply ``fn`` to every tree, in a process pool when ``jobs > 1``; results keep tree order."""
    work = [(t, settings) for t in trees]
    try:
        if jobs > 1 and len(work) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                return list(pool.map(fn, work))
        return [fn(w) for w in work]
    except TreeSpectraError as e:
        raise InputError(f"{e} (try --eigensolver lapack)" if isinstance(e, ConvergenceError) else str(e)) from e


def _ensemble_from_flags(family: str, count: int, min_n: int, max_n: int, seed: int, jobs: int) -> list[Tree]:
    if jobs < 1:
        raise InputError(f"--jobs must be at least 1, got {jobs}")
    if count < 0:
        raise InputError(f"--count must be non-negative, got {count}")
    try:
        return ensemble(family, count, min_n, max_n, seed)
    except TreeSpectraError as e:
        raise InputError(str(e)) from e


def ensemble_options(f):
    """Options shared by the ensemble commands."""
    f = click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes")(f)
    f = click.option(
        "--family",
        type=click.Choice(FAMILIES),
        default="random",
        show_default=True,
        help="Tree family; named families give one tree per size",
    )(f)
    f = click.option("--seed", type=int, default=0, show_default=True, help="Base seed of the random ensemble")(f)
    f = click.option("--max-n", type=int, default=24, show_default=True, help="Largest tree size")(f)
    f = click.option("--min-n", type=int, default=4, show_default=True, help="Smallest tree size")(f)
    f = click.option("--count", type=int, default=100, show_default=True, help="Number of random trees")(f)
    return f


@click.group(cls=TreeSpectraGroup)
@click.version_option(version=__version__)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), help="Dotenv-format settings file")
@click.option("--cluster-tol", type=float, help="Eigenvalue cluster half-width")
@click.option("--zero-tol-factor", type=float, help="Sign-graph zero threshold relative to ||f||_inf")
@click.option("--residual-tol", type=float, help="Relative eigenpair residual bound")
@click.option("--cap", type=int, help="Maximum number of minimum covers enumerated")
@click.option("--eigensolver", type=click.Choice(["jacobi", "lapack"]), help="Dense eigensolver backend")
@click.option("-v", "--verbose", is_flag=True, help="Log debug output to stderr")
@click.option("--no-banner", is_flag=True, help="Do not print the version banner")
@click.pass_context
def cli(
    ctx: click.Context,
    config_path: Optional[str],
    cluster_tol: Optional[float],
    zero_tol_factor: Optional[float],
    residual_tol: Optional[float],
    cap: Optional[int],
    eigensolver: Optional[str],
    verbose: bool,
    no_banner: bool,
):
    """Tree-Spectra - minimum vertex covers and the normalized Laplacian spectrum of trees.

    Commands read trees as edge lists (one "u v" pair per line, '#'
    comments allowed) or generate seeded ensembles.

    Exit codes: 0 success, 1 input error, 2 verification failure.

    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        settings = Settings.from_file(config_path) if config_path else Settings()
        settings = settings.override(
            cluster_tol=cluster_tol,
            zero_tol_factor=zero_tol_factor,
            residual_tol=residual_tol,
            enumeration_cap=cap,
            eigensolver=eigensolver,
        )
    except TreeSpectraError as e:
        raise InputError(str(e)) from e

    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings
    if not no_banner:
        click.echo(f"tree-spectra {__version__}", err=True)


@cli.command()
@click.argument("input_path", metavar="INPUT", type=click.Path(exists=True, dir_okay=False))
@click.option("--with-vectors", is_flag=True, help="Include eigenvectors in the document")
@click.pass_context
def analyze(ctx: click.Context, input_path: str, with_vectors: bool):
    """Analyze one tree and print its JSON document.

    Parameters
    ----------
    input_path : str
        Edge-list file.
    with_vectors : bool
        Include eigenvectors.

    """
    t = _load_tree(input_path)
    try:
        analysis = TreeAnalysis(t, _settings(ctx))
        report = verify_all(t, analysis=analysis)
        document = build_document(analysis, report, with_vectors=with_vectors)
    except TreeSpectraError as e:
        raise InputError(str(e)) from e

    click.echo(json.dumps(document, indent=2))
    if not report.passed:
        for record in report.failures:
            logger.error(f"{record.theorem} failed: {'; '.join(record.notes)}")
        ctx.exit(EXIT_VERIFY)


@cli.command()
@ensemble_options
@click.pass_context
def verify(ctx: click.Context, count: int, min_n: int, max_n: int, seed: int, family: str, jobs: int):
    """Verify every statement on a seeded tree ensemble.

    Prints a pass/fail tally and the first failing witness.

    """
    trees = _ensemble_from_flags(family, count, min_n, max_n, seed, jobs)
    reports = _map_trees(_verify_one, trees, _settings(ctx), jobs)

    failed = [(i, r) for i, r in enumerate(reports) if not r.passed]
    flagged = sum(1 for r in reports if r.flagged)
    click.echo(f"trees: {len(reports)}")
    click.echo(f"passed: {len(reports) - len(failed)}")
    click.echo(f"failed: {len(failed)}")
    click.echo(f"flagged: {flagged}")
    if failed:
        index, report = failed[0]
        record = report.failures[0]
        click.echo(f"first failure: tree {index} (n={report.n}), {record.theorem}")
        click.echo(f"edges: {[list(e) for e in trees[index].edges]}")
        click.echo(json.dumps(record.to_dict(), indent=2))
        logger.error(f"{len(failed)} of {len(reports)} trees failed verification")
        ctx.exit(EXIT_VERIFY)


@cli.command()
@ensemble_options
@click.pass_context
def bounds(ctx: click.Context, count: int, min_n: int, max_n: int, seed: int, family: str, jobs: int):
    """Print separation and both cover bounds per tree as CSV.

    Bounds are those of the witness cover; tight columns compare them to
    the separation within the bound tolerance.

    """
    trees = _ensemble_from_flags(family, count, min_n, max_n, seed, jobs)
    rows = _map_trees(_bounds_row, trees, _settings(ctx), jobs)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(BOUNDS_HEADER)
    writer.writerows(rows)


@cli.command("export-dot")
@click.argument("input_path", metavar="INPUT", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--vector",
    "selector",
    default="pre-one",
    show_default=True,
    help='Eigenvector index, "one" (1-eigenspace) or "pre-one" (largest eigenvalue below 1)',
)
@click.pass_context
def export_dot(ctx: click.Context, input_path: str, selector: str):
    """Draw an eigenvector of a tree as Graphviz DOT.

    Vertex size follows |f(v)|; gray is positive, black negative, white zero.

    """
    t = _load_tree(input_path)
    settings = _settings(ctx)
    try:
        f = select_vector(TreeAnalysis(t, settings), selector)
    except TreeSpectraError as e:
        raise InputError(str(e)) from e
    click.echo(render_dot(t, f, relative_zero_tol(f, settings.zero_tol_factor)), nl=False)


@cli.command()
@click.argument("input_path", metavar="INPUT", type=click.Path(exists=True, dir_okay=False))
def charpoly(input_path: str):
    """Print the exact matching expansion of the characteristic polynomial.

    P(x) = sum_k (-1)^k c_k (x-1)^(n-2k), written in y = x - 1.

    """
    t = _load_tree(input_path)
    poly = matching_polynomial(t)
    mult = multiplicity_of_one(poly)
    click.echo(f"n = {poly.n}")
    for k, c in sorted(poly.coeffs.items()):
        click.echo(f"c_{k} = {c}")
    click.echo(f"P = {format_polynomial(poly)}")
    click.echo(f"factor = (x-1)^{mult}" if mult else "factor = 1")
    click.echo(f"mult(1) = {mult}")


if __name__ == "__main__":
    cli()
