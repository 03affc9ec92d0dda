import functools
import logging
import sys
from typing import List, Optional

import click
import mpmath

from ..collectors.case_collector import CaseCollector
from ..config import EMITTER_NAMES, SUITE_NAMES, EngineConfig, EngineSetup
from ..crossed.crossed import CrossedSymbol
from ..crossed.pairing import determine_kappa, fundamental_pairing_1d, toeplitz_index_oracle_1d
from ..crossed.radul import lifted_radul, radul_cocycle
from ..documents import (
    parse_crossed,
    parse_group,
    parse_matrix,
    parse_symbol,
    read_text,
    serialize_symbol,
)
from ..errors import DomainError, HeisenbergError, VerificationFailure
from ..opalg.dirac import KINDS, DiracDescriptor, dirac_square
from ..opalg.laplacian import is_generalized_laplacian
from ..opalg.mehler import mehler_bracket
from ..opalg.series import OpSeries
from ..opalg.trace import TraceClassElement, tr_s
from ..residue.oracle import annulus_oracle
from ..residue.sphere import sphere_moment
from ..residue.wres import wres
from ..scalars.exact import ExactScalar
from ..scalars.fourier import FourierFunction
from ..symbols.clifford import CliffordWord
from ..symbols.shape import FoliationShape
from ..symbols.symbol import star
from ..utils.generators import make_rng, random_descriptor

logger = logging.getLogger(__name__)


def handle_errors(func):
    """Map engine errors to their exit codes: 1 failures, 2 documents, 3 domain"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except HeisenbergError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(e.exit_code)
        except ValueError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(DomainError.exit_code)
    return wrapper


def echo_scalar(value: ExactScalar, numeric: bool, digits: int, label: str = None) -> None:
    prefix = f"{label}: " if label else ""
    click.echo(f"{prefix}{value.render()}")
    if numeric:
        click.echo(f"{prefix}{mpmath.nstr(value.numeric(digits), digits)}")


def load_symbol(path: str, shape: Optional[str] = None):
    a = parse_symbol(read_text(path))
    if shape:
        FoliationShape.parse(shape).check(a.shape)
    return a


@click.group()
@click.option('--env-file', default=None, help='Path to .env file')
@click.option('--debug/--no-debug', default=False, help='Enable debug logging')
@click.pass_context
def cli(ctx, env_file: Optional[str], debug: bool):
    """Exact Heisenberg calculus on foliated tori"""
    config = EngineConfig.from_env(env_file)
    debug = debug or config.debug
    logging.basicConfig(level=logging.DEBUG if debug else logging.WARNING)
    ctx.obj = config


@cli.command('star')
@click.argument('left', type=click.Path())
@click.argument('right', type=click.Path())
@click.option('--shape', default=None, help='Expected shape "v,h"')
@click.option('--floor', type=int, default=None, help='Truncate the product at this degree')
@click.pass_obj
@handle_errors
def star_command(config: EngineConfig, left: str, right: str, shape: Optional[str],
                 floor: Optional[int]):
    """Star product of two symbol documents"""
    a, b = load_symbol(left, shape), load_symbol(right, shape)
    result = star(a, b)
    if floor is not None:
        result = result.truncate(floor)
    click.echo(serialize_symbol(result, config.modulus), nl=False)


@cli.command()
@click.argument('symbol', type=click.Path())
@click.option('--shape', default=None, help='Expected shape "v,h"')
@click.option('--numeric/--no-numeric', default=False, help='Also print a decimal value')
@click.option('--digits', type=int, default=None, help='Digits of the decimal value')
@click.pass_obj
@handle_errors
def residue(config: EngineConfig, symbol: str, shape: Optional[str], numeric: bool,
            digits: Optional[int]):
    """Wodzicki residue of a symbol document"""
    a = load_symbol(symbol, shape)
    echo_scalar(wres(a), numeric, digits or config.digits)


@cli.command()
@click.argument('left', type=click.Path())
@click.argument('right', type=click.Path())
@click.option('--group', 'group_file', required=True, type=click.Path(),
              help='Group document the crossed symbols live over')
@click.option('--numeric/--no-numeric', default=False, help='Also print a decimal value')
@click.option('--digits', type=int, default=None, help='Digits of the decimal value')
@click.pass_obj
@handle_errors
def radul(config: EngineConfig, left: str, right: str, group_file: str, numeric: bool,
          digits: Optional[int]):
    """Equivariant Radul cocycle of two crossed documents"""
    group = parse_group(read_text(group_file))
    A = parse_crossed(read_text(left), group)
    B = parse_crossed(read_text(right), group)
    echo_scalar(radul_cocycle(A, B), numeric, digits or config.digits)


@cli.command()
@click.argument('a0', type=click.Path())
@click.argument('a1', type=click.Path())
@click.option('--numeric/--no-numeric', default=False, help='Also print decimal values')
@click.option('--digits', type=int, default=None, help='Digits of the decimal values')
@click.pass_obj
@handle_errors
def pairing(config: EngineConfig, a0: str, a1: str, numeric: bool, digits: Optional[int]):
    """Flat 1-D index pairing against the lifted Radul cocycle"""
    f0, f1 = load_symbol(a0, "1,0"), load_symbol(a1, "1,0")
    digits = digits or config.digits
    echo_scalar(fundamental_pairing_1d(f0, f1), numeric, digits, "pairing")
    echo_scalar(determine_kappa(), numeric, digits, "kappa")
    phi = lifted_radul(CrossedSymbol.untwisted(f0), CrossedSymbol.untwisted(f1))
    echo_scalar(phi, numeric, digits, "radul")


@cli.command()
@click.argument('symbol', type=click.Path())
@click.option('--cutoff', type=int, default=None, help='Polynomial degree of the section')
@click.pass_obj
@handle_errors
def toeplitz(config: EngineConfig, symbol: str, cutoff: Optional[int]):
    """Numeric Toeplitz index of the p = +1 restriction"""
    a1 = load_symbol(symbol, "1,0")
    click.echo(toeplitz_index_oracle_1d(a1, cutoff or config.toeplitz_cutoff))


@cli.command()
@click.option('--R', 'matrix', required=True, help='Rational matrix as JSON, e.g. "[[1]]"')
@click.option('--eps-order', type=int, default=None, help='Truncation order in eps')
@click.option('--numeric/--no-numeric', default=False, help='Also print decimal values')
@click.option('--digits', type=int, default=None, help='Digits of the decimal values')
@click.pass_obj
@handle_errors
def mehler(config: EngineConfig, matrix: str, eps_order: Optional[int], numeric: bool,
           digits: Optional[int]):
    """Coefficients of <<exp(Delta + p R d_p)>> for R = eps * matrix"""
    order = config.eps_order if eps_order is None else eps_order
    series = mehler_bracket(parse_matrix(matrix, order), order)
    for k, coeff in enumerate(series.coeffs):
        echo_scalar(coeff, numeric, digits or config.digits, f"eps^{k}")


def flat_descriptor(shape: FoliationShape, kind: str) -> DiracDescriptor:
    if kind == "deRham":
        return DiracDescriptor(shape, kind)
    zero = FourierFunction.zero(shape.n)
    christoffel = [[[zero] * shape.n for _ in range(shape.n)] for _ in range(shape.n)]
    return DiracDescriptor(shape, kind, {}, christoffel)


@cli.command()
@click.option('--shape', default="1,0", help='Shape "v,h"')
@click.option('--kind', type=click.Choice(KINDS), default="deRham", help='Dirac operator kind')
@click.option('--random/--flat', 'randomize', default=False,
              help='Draw a random descriptor instead of the flat one')
@click.option('--seed', type=int, default=None,
              help='Seed of the random descriptor (default: the verification seed)')
@click.pass_obj
@handle_errors
def dirac(config: EngineConfig, shape: str, kind: str, randomize: bool, seed: Optional[int]):
    """Square of a Dirac operator and its generalized-Laplacian test"""
    foliation = FoliationShape.parse(shape)
    if randomize or seed is not None:
        seed = config.verify_seed if seed is None else seed
        desc = random_descriptor(make_rng(seed), foliation, kind)
    else:
        desc = flat_descriptor(foliation, kind)
    square = dirac_square(desc)
    click.echo(square.render())
    click.echo(f"generalized laplacian: {'yes' if is_generalized_laplacian(square) else 'no'}")


@cli.command()
@click.argument('symbol', type=click.Path())
@click.option('--shape', default=None, help='Expected shape "v,h"')
@click.option('--numeric/--no-numeric', default=False, help='Also print a decimal value')
@click.option('--digits', type=int, default=None, help='Digits of the decimal value')
@click.pass_obj
@handle_errors
def trs(config: EngineConfig, symbol: str, shape: Optional[str], numeric: bool,
        digits: Optional[int]):
    """Supertrace of eps^n (top word)_R a_L exp(Delta)"""
    a = load_symbol(symbol, shape)
    n = a.shape.n
    element = TraceClassElement(OpSeries.single(a, CliffordWord.top(n), eps=n,
                                                contracted_order=n))
    echo_scalar(tr_s(element), numeric, digits or config.digits)


@cli.command()
@click.option('--shape', default="1,0", help='Shape "v,h"')
@click.option('--gamma', required=True, help='Exponent multi-index, e.g. "2,0"')
@click.option('--tol', type=float, default=None, help='Cubature tolerance')
@click.option('--digits', type=int, default=None, help='Digits of the exact value')
@click.pass_obj
@handle_errors
def oracle(config: EngineConfig, shape: str, gamma: str, tol: Optional[float],
           digits: Optional[int]):
    """Sphere moment: exact value against adaptive cubature"""
    foliation = FoliationShape.parse(shape)
    try:
        exponents = tuple(int(g) for g in gamma.split(","))
    except ValueError:
        raise DomainError(f"gamma must read 'g1,...,gn', got {gamma!r}")
    tol = config.cubature_tol if tol is None else tol
    exact = sphere_moment(exponents, foliation)
    value = complex(exact.numeric(digits or config.digits)).real
    numeric = annulus_oracle(exponents, foliation, tol)
    error = abs(value - numeric)
    click.echo(f"exact: {exact.render()}")
    click.echo(f"value: {value:.15g}")
    click.echo(f"oracle: {numeric:.15g}")
    click.echo(f"error: {error:.3g}")
    if error > max(1e-6, 100 * tol):
        raise VerificationFailure(f"oracle disagrees by {error:.3g}")


@cli.command()
@click.option('--suite', type=click.Choice(("all",) + SUITE_NAMES), default="all",
              help='Suite to run')
@click.option('--seed', type=int, default=None, help='Verification seed')
@click.option('--scale', type=float, default=None, help='Scale all case counts')
@click.option('--report-dir', default=None, help='Also write JSON reports here')
@click.option('--emitter', type=click.Choice(EMITTER_NAMES), default=None,
              help='Where reports go')
@click.option('--inject-fault/--no-inject-fault', default=False,
              help='Shift every expected value (negative control)')
@click.pass_obj
@handle_errors
def verify(config: EngineConfig, suite: str, seed: Optional[int], scale: Optional[float],
           report_dir: Optional[str], emitter: Optional[str], inject_fault: bool):
    """Run the seeded property suites"""
    if seed is not None:
        config.verify_seed = seed
    if scale is not None:
        config.cases_scale = scale
    if report_dir:
        config.report_dir = report_dir
    if emitter:
        config.default_emitter = emitter
    config.inject_fault = inject_fault or config.inject_fault
    if suite != "all":
        config.enabled_suites = [suite]
    config.validate()

    setup = EngineSetup(config)
    setup.setup()
    collector = CaseCollector(list(setup.suites.values()))
    reports = collector.collect_reports()

    targets: List = [setup.get_emitter()]
    if report_dir and config.default_emitter != "json":
        targets.append(setup.get_emitter("json"))
    for target in targets:
        for report in reports:
            target.emit_report(report)
        target.emit_result("summary", collector.get_report_stats(reports))

    failures = sum(len(report.failures) for report in reports)
    if failures:
        raise VerificationFailure(f"{failures} failing cases")
    click.echo(f"{sum(report.cases_run for report in reports)} cases passed")


if __name__ == '__main__':
    cli()
