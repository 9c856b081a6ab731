""" validation.py

    Integrability checks for a Levy model. Each condition is decided from
    the model's small-jump and tail exponents; where a truncated numerical
    value makes sense it is attached as detail. Nothing in here raises for
    a failed check.
"""

import math

from typing import List, Optional

import numpy as np

from pydantic import BaseModel

from ..errors import LevyRuinError, QuadratureError
from ..quadrature import Quadrature
from .model import LevyModel
from .stable import StableModel, stable_case


class KernelRoute:
    """ How the convolution kernel of S is built for a model """
    GAUSSIAN: str = 'gaussian'
    FULL: str = 'full'
    UNCOMPENSATED: str = 'uncompensated'
    FINITE_MASS: str = 'finite-mass'
    LOG: str = 'log'


class Condition(BaseModel):
    name: str
    description: str
    passed: bool
    required: bool = False
    detail: str = ''


class ValidationReport(BaseModel):
    model: dict
    conditions: List[Condition]
    passed: bool
    route: Optional[str] = None
    mass: Optional[float] = None

    def condition(self, name: str) -> Condition:
        for condition in self.conditions:
            if condition.name == name:
                return condition
        raise KeyError(name)


def kernel_route(model: LevyModel) -> Optional[str]:
    """ None when no convolution representation applies """
    if not model.has_jumps:
        return KernelRoute.GAUSSIAN
    if isinstance(model, StableModel) and model.alpha == 1.0:
        C1, C2 = model.levy_constants
        return KernelRoute.LOG if C1 == C2 else None
    if model.mass is not None:
        return KernelRoute.FINITE_MASS

    small = model.small_jump_index
    if small is None or small < 1.0:
        return KernelRoute.UNCOMPENSATED
    if model.tail_index > 1.0:
        return KernelRoute.FULL
    return None


def _density_grid() -> np.ndarray:
    positive = np.logspace(-6.0, 6.0, 241)
    return np.concatenate((-positive[::-1], positive))


def _numeric(fn) -> str:
    try:
        return f'truncated value {fn():.6g}'
    except (QuadratureError, ArithmeticError) as e:
        return f'quadrature failed: {e}'


def _absolute_tail_moment(model: LevyModel) -> float:
    return sum(Quadrature.adaptive(lambda u, s=side: u * float(model.density(s * u)), 1.0, np.inf,
                                   what='first tail moment')
               for side in (1.0, -1.0))


def validate_model(model: LevyModel) -> ValidationReport:
    small = model.small_jump_index
    tail = model.tail_index
    jumps = model.has_jumps
    conditions = []

    levy = not jumps or ((small is None or small < 2.0) and tail > 0.0)
    detail = _numeric(lambda: model.moment(2, 0.0, 1.0) + model.moment(0, 1.0, np.inf)) if jumps and levy else ''
    conditions.append(Condition(
            name='levy_measure', required=True, passed=levy, detail=detail,
            description='int min(1, y^2) nu\'(y) dy < inf'))

    values = model.density(_density_grid())
    positive = bool(np.all(np.isfinite(values)) and np.all(values >= 0.0))
    conditions.append(Condition(
            name='density_positive', required=True, passed=positive,
            detail=f'min over the density grid {float(np.min(values)):.3g}',
            description='nu\'(y) >= 0 for y != 0'))

    conditions.append(Condition(
            name='tail_vanishes', passed=not jumps or tail > 0.0,
            detail=f'tail index {tail}',
            description='nu(x) = int_{|y|>=|x|} nu\'(y) dy -> 0 as |x| -> inf'))

    conditions.append(Condition(
            name='small_jump_decay', passed=not jumps or small is None or small < 1.0,
            detail=f'small-jump index {small}',
            description='x nu(x) -> 0 as x -> 0, so int_{|y|<=1} |y| nu\'(y) dy < inf'))

    conditions.append(Condition(
            name='kernel_local_integrability', passed=not jumps or small is None or small < 2.0,
            description='k(y) integrable on bounded intervals'))

    first_tail = not jumps or tail > 1.0
    conditions.append(Condition(
            name='finite_first_tail_moment', passed=first_tail,
            detail=_numeric(lambda: _absolute_tail_moment(model)) if jumps and first_tail else f'tail index {tail}',
            description='int_{|y|>1} |y| nu\'(y) dy < inf'))

    mass = model.mass
    conditions.append(Condition(
            name='finite_mass', passed=mass is not None and math.isfinite(mass),
            detail=f'M = {mass:.12g}' if mass is not None else '',
            description='M = int nu\'(y) dy < inf'))

    if isinstance(model, StableModel):
        try:
            case = stable_case(model.alpha, model.beta)
            conditions.append(Condition(
                    name='stable_case', passed=True, detail=f'case {case}',
                    description='stable parameters inside the cases with closed-form quasi-potentials'))
        except LevyRuinError as e:
            conditions.append(Condition(
                    name='stable_case', passed=False, detail=str(e),
                    description='stable parameters inside the cases with closed-form quasi-potentials'))

        conditions.append(Condition(
                name='parameterization', passed=model.constants_consistent,
                detail=f'C1, C2 = {model.levy_constants}',
                description='explicit C1, C2 agree with (alpha, beta, scale)'))

    route = kernel_route(model)
    conditions.append(Condition(
            name='convolution_form', passed=route is not None, detail=f'route {route}',
            description='generator admits L = D S D'))

    passed = levy and positive and route is not None
    return ValidationReport(model=_describe(model), conditions=conditions, passed=passed, route=route, mass=mass)


def _describe(model: LevyModel) -> dict:
    try:
        return model.descriptor()
    except LevyRuinError:
        return {'kind': model.name}
