""" config.py

    Environment configuration of the command line, read once into the
    typed `SETTINGS` tuple. The variables are listed in `.env.example`.
    Library code under `levyruin/` never reads the environment: `main.py`
    hands the fields of `SETTINGS` to it.
"""

from os import getenv as os_getenv
from typing import Any, Callable, NamedTuple, Sequence, Union

from dotenv import load_dotenv

load_dotenv()

Check = Callable[[str], Union[bool, str]]
""" Returns True, or an error message formatted with {key} and {val} """


def getenv(
        key: str,
        default: Any = None,
        nullable: Union[bool, str] = False,
        checks: Sequence[Check] = (),
        transforms: Sequence[Callable[[Any], Any]] = ()
) -> Any:
    """
    Reads an environment variable, falls back to `default` when it is unset
    and nullable, then runs the checks on the raw string and the transforms
    in order.

    :param key: Env. var key
    :param default: Raw fallback value, checked and transformed like a
    value read from the environment
    :param nullable: Whether the variable may be unset. A string makes it
    required and is used as the error message
    :param checks: Callables returning True or an error message that may
    use the {key} and {val} fields
    :param transforms: Callables applied one after the other
    :return: The transformed value
    """

    value = os_getenv(key)

    if value is None:
        if not nullable:
            raise ValueError(f'{key} requires a value, but none was provided')
        elif isinstance(nullable, str):
            raise ValueError(nullable)

        value = default

    for check in checks:
        res = check(value)
        if isinstance(res, str):
            raise ValueError(res.format(key=key, val=value))

    for transform in transforms:
        value = transform(value)

    return value


def _is_positive_int(val: str) -> Union[bool, str]:
    return (val.strip().isnumeric() and int(val) > 0) or \
        '{key} expected to receive a positive integer, but received: "{val}"'


def _positive_int(key: str, default: str) -> int:
    return getenv(key, default, nullable=True, checks=[_is_positive_int], transforms=[int])


class LevySettings(NamedTuple):
    """ Everything the command line takes from the environment """
    debug_mode: bool = False
    log_dir: str = '.logs'
    quad_limit: int = 200
    """ QUADPACK subinterval limit """
    exit_budget: int = 2_000_000_000
    """ Monte Carlo path-steps per estimate """
    workers: int = 4

    @classmethod
    def from_env(cls) -> 'LevySettings':
        return cls(
                debug_mode=getenv('LEVY_DEBUG_MODE', 'false', True, transforms=[str.strip, str.lower]) == 'true',
                log_dir=getenv('LEVY_LOG_DIR', cls._field_defaults['log_dir'], True, transforms=[str.strip]),
                quad_limit=_positive_int('LEVY_QUAD_LIMIT', str(cls._field_defaults['quad_limit'])),
                exit_budget=_positive_int('LEVY_EXIT_BUDGET', str(cls._field_defaults['exit_budget'])),
                workers=_positive_int('LEVY_WORKERS', str(cls._field_defaults['workers']))
        )


SETTINGS: LevySettings = LevySettings.from_env()
