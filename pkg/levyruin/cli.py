""" cli.py

    Command line front end: models -> kernels -> spectra -> survival
    curves -> comparisons. Every command writes its primary output plus a
    run manifest next to it; `replay` re-runs a manifest.

    Exit codes: 0 success, 2 validation failed, 3 malformed input,
    4 unsupported parameters, 5 numerical failure.
"""

import json
import math
import time

from typing import List, NamedTuple, Optional, Tuple

import click
import numpy as np

from pydantic import ValidationError

from .consts import DEFAULT_EXIT_BUDGET, VERSION
from .domain import Domain
from .errors import LevyRuinError, MalformedInput, UnsupportedParameters, ValidationFailed
from .io import (RunManifest, load_manifest, manifest_path, read_survival_curve, spectrum_document,
                 write_kernel_dump, write_manifest, write_phi_grid, write_survival_curve)
from .kernels import build_kernel
from .levy import GaussianModel, LevyModel, StableModel, load_model, validate_model
from .log import get_logger
from .montecarlo import SimConfig, estimate_survival, sampler_for
from .quasipotential import quasipotential_for
from .spectral import (assemble, eigensystem, regularity_report, survival_asymptotic, survival_series)
from .types import ExitCode, SurvivalMethod
from .wiener_oracle import p2

ARGV_KEY = 'levyruin.argv'


class RunSettings(NamedTuple):
    is_debug: bool = False
    exit_budget: int = DEFAULT_EXIT_BUDGET
    workers: int = 1


class LevyGroup(click.Group):
    """ Maps library errors to exit codes and remembers the argv of the sub-command """

    def parse_args(self, ctx: click.Context, args: List[str]) -> List[str]:
        ctx.meta[ARGV_KEY] = list(args)
        return super().parse_args(ctx, args)

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except LevyRuinError as e:
            get_logger('cli').error(f'{type(e).__name__}: {e}')
            click.echo(f'error: {e}', err=True)
            ctx.exit(e.exit_code)
        except (ValidationError, json.JSONDecodeError) as e:
            click.echo(f'error: malformed input: {e}', err=True)
            ctx.exit(ExitCode.MALFORMED_INPUT)
        except (click.ClickException, click.exceptions.Exit, click.exceptions.Abort):
            raise
        except Exception as e:
            get_logger('cli').exception(f'unexpected {type(e).__name__}')
            click.echo(f'error: unexpected {type(e).__name__}: {e}', err=True)
            ctx.exit(ExitCode.NUMERICAL_FAILURE)


def parse_times(text: str) -> np.ndarray:
    """ 't1..t2:steps' (linear) or 't1..t2:steps:geom' (geometric) """
    try:
        span, *rest = text.split(':')
        lo, hi = (float(v) for v in span.split('..'))
        steps = int(rest[0]) if rest else 1
        spacing = rest[1] if len(rest) > 1 else 'lin'
    except ValueError as e:
        raise MalformedInput(f'time grid "{text}" is not of the form t1..t2:steps[:geom]') from e

    if len(rest) > 2 or spacing not in ('lin', 'geom') or steps < 1:
        raise MalformedInput(f'time grid "{text}" is not of the form t1..t2:steps[:geom]')
    if not 0.0 < lo <= hi:
        raise MalformedInput(f'time grid needs 0 < t1 <= t2, got {lo} and {hi}')
    if steps == 1:
        return np.array([lo])
    return np.geomspace(lo, hi, steps) if spacing == 'geom' else np.linspace(lo, hi, steps)


def _domain(domain: Tuple[float, float]) -> Domain:
    lower, upper = domain
    return Domain.single(lower, upper)


def _settings(ctx: click.Context) -> RunSettings:
    return ctx.obj if isinstance(ctx.obj, RunSettings) else RunSettings()


def _finish(ctx: click.Context, command: str, outputs: dict, started: float, model: Optional[LevyModel] = None,
            domain: Optional[Tuple[float, float]] = None, **parameters) -> RunManifest:
    manifest = RunManifest(command=command, argv=list(ctx.meta.get(ARGV_KEY, [])),
                           model=None if model is None else model.descriptor(),
                           domain=None if domain is None else list(domain), parameters=parameters,
                           wall_time=time.perf_counter() - started, outputs=outputs)
    primary = next(iter(outputs.values()))
    write_manifest(manifest_path(primary), manifest)
    get_logger('cli').info(f'{command}: wrote {", ".join(outputs.values())}')
    return manifest


def _wiener_coefficient(model: LevyModel) -> float:
    """ A of a driftless Brownian model, the only family the oracle covers """
    if isinstance(model, GaussianModel) and model.gamma == 0.0:
        return model.A
    if isinstance(model, StableModel) and model.is_wiener and model.drift_offset == 0.0:
        return model.scale
    raise UnsupportedParameters(f'the oracle method only covers driftless Brownian motion, not {model.name}')


domain_option = click.option('--domain', nargs=2, type=float, default=(-1.0, 1.0), show_default=True,
                             help='Interval [-b, a] as two numbers.')
method_option = click.option('--kernel-method', type=click.Choice(['auto', 'closed', 'general']), default='auto',
                             show_default=True, help='Closed-form quasi-potential or the general construction.')
grid_option = click.option('--grid-n', type=int, default=512, show_default=True,
                           help='Grid size of the general construction.')


@click.group(cls=LevyGroup)
@click.version_option(VERSION, prog_name='levyruin')
@click.pass_context
def cli(ctx: click.Context):
    """ Confinement probabilities of one-dimensional Levy processes """
    ctx.ensure_object(RunSettings)


@cli.command()
@click.argument('model_file', type=click.Path(dir_okay=False))
@click.option('--out', type=click.Path(dir_okay=False), default='validation.json', show_default=True)
@click.pass_context
def validate(ctx: click.Context, model_file: str, out: str):
    """ Check the integrability conditions of a model """
    started = time.perf_counter()
    model = load_model(model_file)
    report = validate_model(model)

    with open(out, 'w') as f:
        f.write(report.model_dump_json(indent=2))
    click.echo(report.model_dump_json(indent=2))
    _finish(ctx, 'validate', {'report': out}, started, model, passed=report.passed)

    if not report.passed:
        failed = [c.name for c in report.conditions if not c.passed]
        raise ValidationFailed(f'failed conditions: {", ".join(failed)}')


@cli.command()
@click.argument('model_file', type=click.Path(dir_okay=False))
@domain_option
@click.option('--n', 'n', type=int, default=65, show_default=True, help='Points of the output grid.')
@method_option
@grid_option
@click.option('--out', type=click.Path(dir_okay=False), default='phi.csv', show_default=True)
@click.option('--convolution', type=click.Path(dir_okay=False), default=None,
              help='Also dump the convolution kernel k(y) to this file.')
@click.pass_context
def kernel(ctx: click.Context, model_file: str, domain: Tuple[float, float], n: int, kernel_method: str,
           grid_n: int, out: str, convolution: Optional[str]):
    """ Dump the quasi-potential Phi(x, y) on a grid """
    started = time.perf_counter()
    model = load_model(model_file)
    lower, upper = _domain(domain).lower, _domain(domain).upper
    if n < 2:
        raise MalformedInput(f'the output grid needs at least 2 points, got {n}')

    qp = quasipotential_for(model, lower, upper, kernel_method, grid_n, get_logger('quasipotential'))
    outputs = {'phi': write_phi_grid(out, qp, np.linspace(lower, upper, n))}
    if convolution is not None:
        length = upper - lower
        outputs['convolution'] = write_kernel_dump(convolution, build_kernel(model, get_logger('kernels')),
                                                   np.linspace(-length, length, 2 * n))
    _finish(ctx, 'kernel', outputs, started, model, domain, n=n, kernel_method=kernel_method, grid_n=grid_n,
            kernel_kind=qp.kind)


def _decompose(model: LevyModel, domain: Tuple[float, float], n: int, k: int, kernel_method: str, grid_n: int):
    lower, upper = _domain(domain).lower, _domain(domain).upper
    qp = quasipotential_for(model, lower, upper, kernel_method, grid_n, get_logger('quasipotential'))
    system = assemble(qp, n, get_logger('spectral'))
    return qp, eigensystem(system, k, get_logger('spectral'))


@cli.command()
@click.argument('model_file', type=click.Path(dir_okay=False))
@domain_option
@click.option('--n', 'n', type=int, default=256, show_default=True, help='Nystrom nodes.')
@click.option('--k', 'k', type=int, default=10, show_default=True, help='Eigenvalues to report.')
@method_option
@grid_option
@click.option('--regularity/--no-regularity', default=False, help='Attach the regularity report.')
@click.option('--out', type=click.Path(dir_okay=False), default='spectrum.json', show_default=True)
@click.pass_context
def spectrum(ctx: click.Context, model_file: str, domain: Tuple[float, float], n: int, k: int, kernel_method: str,
             grid_n: int, regularity: bool, out: str):
    """ Leading eigenvalues of the quasi-potential operator """
    started = time.perf_counter()
    model = load_model(model_file)
    qp, dec = _decompose(model, domain, n, k, kernel_method, grid_n)

    document = spectrum_document(dec, qp.kind)
    if regularity:
        document['regularity'] = regularity_report(dec.system, dec).model_dump(mode='json')
    with open(out, 'w') as f:
        json.dump(document, f, indent=2)
    click.echo(f'lambda1 = {document["lambda1"]:.12g}  c1 = {document["c1"]:.12g}')
    _finish(ctx, 'spectrum', {'spectrum': out}, started, model, domain, n=n, k=k, kernel_method=kernel_method,
            grid_n=grid_n, regularity=regularity)


@cli.command()
@click.argument('model_file', type=click.Path(dir_okay=False))
@domain_option
@click.option('--times', 'times_text', default='0.5..10:20', show_default=True, help='t1..t2:steps[:geom]')
@click.option('--method', type=click.Choice(['series', 'asymptotic', 'mc', 'oracle']), default='series',
              show_default=True)
@click.option('--n', 'n', type=int, default=256, show_default=True, help='Nystrom nodes.')
@click.option('--k', 'k', type=int, default=None, help='Series terms (default: by eigenvalue ratio).')
@method_option
@grid_option
@click.option('--paths', type=int, default=100_000, show_default=True, help='Monte Carlo paths.')
@click.option('--dt', type=float, default=1e-3, show_default=True, help='Monte Carlo time step.')
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--bridge/--no-bridge', default=True, show_default=True,
              help='Brownian-bridge correction (Brownian models only).')
@click.option('--out', type=click.Path(dir_okay=False), default='survival.csv', show_default=True)
@click.pass_context
def survive(ctx: click.Context, model_file: str, domain: Tuple[float, float], times_text: str, method: str, n: int,
            k: Optional[int], kernel_method: str, grid_n: int, paths: int, dt: float, seed: int, bridge: bool,
            out: str):
    """ Survival curve p(t, D) """
    started = time.perf_counter()
    model = load_model(model_file)
    region = _domain(domain)
    if not region.contains(0.0, closed=False):
        raise MalformedInput(f'the domain [{region.lower}, {region.upper}] must contain the origin')
    times = parse_times(times_text)
    settings = _settings(ctx)
    errors: List[float] = [0.0] * times.size
    header = {'model': model.descriptor(), 'domain': list(domain)}

    if method == 'oracle':
        A = _wiener_coefficient(model)
        values = [p2(region.upper, -region.lower, A * t) for t in times]
        label = SurvivalMethod.ORACLE
    elif method == 'mc':
        cfg = SimConfig(n_paths=paths, dt=dt, seed=seed, workers=settings.workers, budget=settings.exit_budget,
                        bridge_correction=bridge and sampler_for(model).brownian_coefficient is not None)
        estimates = [estimate_survival(model, region, float(t), cfg, get_logger('montecarlo')) for t in times]
        values = [e.p_hat for e in estimates]
        errors = [e.stderr for e in estimates]
        label = SurvivalMethod.MONTE_CARLO
        header.update(n_paths=paths, dt=dt, seed=seed, bridge_correction=cfg.bridge_correction)
    else:
        _, dec = _decompose(model, domain, n, 1 if k is None else k, kernel_method, grid_n)
        if method == 'series':
            estimate = survival_series(dec, times, k, get_logger('spectral'))
            errors = estimate.truncation or errors
        else:
            estimate = survival_asymptotic(dec, times)
        values = estimate.values
        label = estimate.method
        header.update(lambda1=estimate.lambda1, c1=estimate.c1, warnings=estimate.warnings)

    write_survival_curve(out, times, values, label, errors, header)
    for t, p, err in zip(times, values, errors):
        click.echo(f'{t:.6g},{p:.10g},{label},{err:.3g}')
    _finish(ctx, 'survive', {'curve': out}, started, model, domain, times=times_text, method=method, n=n, k=k,
            kernel_method=kernel_method, grid_n=grid_n, paths=paths, dt=dt, seed=seed, bridge=bridge)


@cli.command()
@click.argument('manifests', nargs=-1, type=click.Path(dir_okay=False))
@click.option('--tol', type=float, default=1e-4, show_default=True, help='Absolute tolerance.')
@click.option('--sigmas', type=float, default=3.0, show_default=True,
              help='Multiples of the combined error column added to the tolerance.')
@click.option('--out', type=click.Path(dir_okay=False), default='comparison.json', show_default=True)
@click.pass_context
def compare(ctx: click.Context, manifests: Tuple[str, ...], tol: float, sigmas: float, out: str):
    """ Compare survival curves against the first one """
    started = time.perf_counter()
    if not manifests:
        raise MalformedInput('compare needs at least one run manifest')

    curves = [(name, read_survival_curve(load_manifest(name).output('curve'))) for name in manifests]
    reference_name, reference = curves[0]
    rows = []
    for name, curve in curves[1:]:
        if len(curve.times) != len(reference.times) or not np.allclose(curve.times, reference.times,
                                                                        rtol=1e-12, atol=0.0):
            raise UnsupportedParameters(f'{name} and {reference_name} use different time grids')
        deviation = np.abs(np.subtract(curve.values, reference.values))
        allowance = tol + sigmas * np.hypot(curve.errors, reference.errors)
        rows.append({'run': name, 'reference': reference_name, 'method': curve.methods[0] if curve.methods else '',
                     'max_deviation': float(np.max(deviation, initial=0.0)),
                     'worst_time': float(reference.times[int(np.argmax(deviation))]) if deviation.size else math.nan,
                     'passed': bool(np.all(deviation <= allowance))})

    with open(out, 'w') as f:
        json.dump({'tolerance': tol, 'sigmas': sigmas, 'comparisons': rows}, f, indent=2)
    for row in rows:
        status = 'PASS' if row['passed'] else 'FAIL'
        click.echo(f'{status}  {row["run"]} vs {row["reference"]}: max deviation {row["max_deviation"]:.3e}')
    _finish(ctx, 'compare', {'comparison': out}, started, tol=tol, sigmas=sigmas, manifests=list(manifests))

    failed = [row['run'] for row in rows if not row['passed']]
    if failed:
        raise ValidationFailed(f'tolerances not met by {", ".join(failed)}')


@cli.command()
@click.argument('manifest_file', type=click.Path(dir_okay=False))
@click.pass_context
def replay(ctx: click.Context, manifest_file: str):
    """ Re-run the command recorded in a manifest """
    manifest = load_manifest(manifest_file)
    if not manifest.argv or manifest.argv[0] == 'replay':
        raise MalformedInput(f'{manifest_file} records no replayable command')
    get_logger('cli').info(f'Replaying {" ".join(manifest.argv)}')
    code = cli.main(args=list(manifest.argv), obj=ctx.obj, standalone_mode=False)
    ctx.exit(code or 0)
