import logging
import os
import sys

import click
from flask import Blueprint, current_app
from marshmallow import ValidationError

from config.config import Config
from config.run_config import load_run_config, merge_options
from models.schemas import ComplexMapRequestSchema, ConvergeRequestSchema
from repositories.approximant_repository import ApproximantRepository
from repositories.result_repository import ResultRepository
from services.acceptance_service import AcceptanceService
from services.convergence_service import ConvergenceService
from services.test_function_service import TestFunctionService
from utils.exceptions import ApproximationError
from utils.helpers import parse_csv_list

logger = logging.getLogger(__name__)

# Commands only; no URL rules
bench_cli = Blueprint('bench_cli', __name__, cli_group=None)

LIST_OPTIONS = ('methods', 'n_values', 'box')


def _resolve(schema, config_file, cli_options):
    """Merge the config file under the CLI options and validate the result"""
    try:
        options = merge_options(load_run_config(config_file, schema.fields.keys()), cli_options)
        for key in LIST_OPTIONS:
            if isinstance(options.get(key), str):
                options[key] = parse_csv_list(options[key])
        logger.debug(f"Resolved options: {options}")
        return schema.load(options)
    except ValidationError as e:
        raise click.BadParameter(str(e.messages))
    except ApproximationError as e:
        raise click.ClickException(str(e))


def _default_out(name):
    return os.path.join(current_app.config['OUTPUT_FOLDER'], name)


@bench_cli.cli.command('converge')
@click.option('--config', 'config_file', type=click.Path(), help='key=value file; explicit options override it')
@click.option('--function', help='Test function id')
@click.option('--methods', help='Comma-separated method ids')
@click.option('--nmin', type=int)
@click.option('--nmax', type=int)
@click.option('--nstep', type=int)
@click.option('--tol', type=float, help='AAA relative tolerance')
@click.option('--im-tol', 'im_tol', type=float, help='Bad-pole imaginary-part threshold')
@click.option('--gamma', type=float, help='Oversampling ratio')
@click.option('--T', 'T', type=float, help='Fourier extension half-width')
@click.option('--grid', type=int, help='Dense error grid size')
@click.option('--workers', type=int)
@click.option('--out', help='Output CSV path')
@click.option('--plot-data', is_flag=True, help='Also write a plot-data file')
def converge(config_file, plot_data, **cli_options):
    """Convergence sweep: max error against n for each method"""
    cli_options['plot_data'] = True if plot_data else None
    params = _resolve(ConvergeRequestSchema(), config_file, cli_options)

    service = ConvergenceService(grid_size=params['grid'], max_workers=params['workers'])
    curves = service.run_convergence(params['function'], params['configs'], params['n_values'])

    out = params['out'] or _default_out(f"{params['function']}.csv")
    repository = ResultRepository()
    try:
        repository.save(curves, out)
        if params['plot_data']:
            repository.save_plot_data(curves, out)
        repository.save_metadata(out, {
            'command': 'converge',
            'function': params['function'],
            'methods': [config.to_dict() for config in params['configs']],
            'n_values': params['n_values'],
            'grid_size': params['grid'],
        })
    except ApproximationError as e:
        raise click.ClickException(str(e))

    for curve in curves:
        rescued = [n for n, flag in zip(curve.n_values, curve.rescue_applied) if flag]
        line = f"{curve.method:>15}: min error {min(curve.errors):.3e}"
        if rescued:
            line += f", rescued at n = {rescued}"
        if curve.last_interpolant_n is not None:
            line += f", interpolates up to n = {curve.last_interpolant_n}"
        click.echo(line)
    click.echo(f"Wrote {out}")


@bench_cli.cli.command('cmap')
@click.option('--config', 'config_file', type=click.Path())
@click.option('--function', help='Test function id')
@click.option('--n', type=int, help='Number of equispaced samples')
@click.option('--box', help='re0,re1,im0,im1')
@click.option('--res', type=int, help='Grid points per axis')
@click.option('--tol', type=float)
@click.option('--im-tol', 'im_tol', type=float)
@click.option('--out', help='Output CSV path')
def cmap(config_file, **cli_options):
    """Error |f - r| of the AAA fit over a box in the complex plane"""
    params = _resolve(ComplexMapRequestSchema(), config_file, cli_options)

    try:
        error_map = ConvergenceService().run_complex_map(
            params['function'], params['n'], box=params['box'], resolution=params['res'],
            tol=params['tol'], im_tol=params['im_tol'])
        out = params['out'] or _default_out(f"{params['function']}_map.csv")
        files = ResultRepository().save_map(error_map, out)
    except ApproximationError as e:
        raise click.ClickException(str(e))

    click.echo(f"{error_map.poles.size} pole(s); wrote {', '.join(files)}")


@bench_cli.cli.command('profile')
@click.option('--function', required=True, help='Test function id')
@click.option('--n', type=int, required=True)
@click.option('--tol', type=float, default=None)
@click.option('--out', help='Output CSV path')
@click.option('--save-fit', 'save_fit', help='Also write the approximant to this file')
def profile(function, n, tol, out, save_fit):
    """Errors of the AAA fit at the sample points"""
    try:
        TestFunctionService.get(function)
        kwargs = {} if tol is None else {'tol': tol}
        result = ConvergenceService().run_error_profile(function, n, **kwargs)
        out = out or _default_out(f"{function}_profile_{n}.csv")
        ResultRepository().save_profile(result, out)
        if save_fit:
            ApproximantRepository(tol=kwargs.get('tol', Config.AAA_TOLERANCE)).save(result.approximant, save_fit)
    except ApproximationError as e:
        raise click.ClickException(str(e))

    click.echo(f"degree {result.degree}: max sample error {result.sample_errors.max():.3e}, "
               f"dense-grid error {result.dense_error:.3e}")
    click.echo(f"Wrote {out}" + (f" and {save_fit}" if save_fit else ''))


@bench_cli.cli.command('seedcheck')
@click.option('--full', is_flag=True, help='Include the long sweeps')
def seedcheck(full):
    """Run the acceptance checks; exit status 1 if any fails"""
    service = AcceptanceService(ConvergenceService(max_workers=current_app.config['MAX_WORKERS']))
    results = service.run(full=full)
    for result in results:
        status = 'PASS' if result.passed else 'FAIL'
        click.echo(f"[{status}] {result.name}: {result.measured} (expected {result.expected})")

    failed = [result.name for result in results if not result.passed]
    if failed:
        click.echo(f"{len(failed)} check(s) failed: {', '.join(failed)}", err=True)
        sys.exit(1)
    click.echo(f"All {len(results)} checks passed")
