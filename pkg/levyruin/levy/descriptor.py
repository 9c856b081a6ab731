""" descriptor.py

    JSON model descriptors: {"kind": "stable", "alpha": 1.5, "beta": 0.0}.
    One key per model field; unknown keys are rejected.
"""

import json

from typing import Annotated, Union

from pydantic import Field, TypeAdapter, ValidationError

from ..errors import MalformedInput
from .compound_poisson import CompoundPoissonModel
from .damped_stable import DampedStableModel
from .gaussian import GaussianModel
from .meixner import MeixnerModel
from .model import LevyModel
from .nig import NIGModel
from .stable import StableModel
from .variance_gamma import VarianceGammaModel

ModelDescriptor = Annotated[
    Union[StableModel, GaussianModel, DampedStableModel, VarianceGammaModel,
          NIGModel, MeixnerModel, CompoundPoissonModel],
    Field(discriminator='kind')
]
""" Every model family that can be described in JSON """

_adapter = TypeAdapter(ModelDescriptor)


def parse_model(data: dict) -> LevyModel:
    if not isinstance(data, dict):
        raise MalformedInput(f'a model descriptor must be a JSON object, got {type(data).__name__}')
    if data.get('kind') == 'custom':
        raise MalformedInput('custom models are only available from Python')
    try:
        return _adapter.validate_python(data)
    except ValidationError as e:
        raise MalformedInput(f'invalid model descriptor: {e}') from e


def loads_model(text: str) -> LevyModel:
    if not text.strip():
        raise MalformedInput('model descriptor is empty')
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f'model descriptor is not valid JSON: {e}') from e
    return parse_model(data)


def load_model(filename: str) -> LevyModel:
    try:
        with open(filename, 'r') as f:
            text = f.read()
    except OSError as e:
        raise MalformedInput(f'cannot read model descriptor {filename}: {e}') from e
    return loads_model(text)


def dump_model(model: LevyModel) -> str:
    return json.dumps(model.descriptor())
