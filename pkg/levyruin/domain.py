""" domain.py

    Confinement domains (finite unions of closed intervals) and functions
    sampled on a grid inside them.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .errors import MalformedInput, DomainError
from .types import FloatArray, Real


@dataclass(frozen=True)
class Interval:
    lower: float
    upper: float

    def __post_init__(self):
        if not (np.isfinite(self.lower) and np.isfinite(self.upper)):
            raise MalformedInput(f'interval end points must be finite, got [{self.lower}, {self.upper}]')
        if not self.lower < self.upper:
            raise MalformedInput(f'interval [{self.lower}, {self.upper}] is empty')

    @property
    def length(self) -> float:
        return self.upper - self.lower

    @property
    def center(self) -> float:
        return 0.5 * (self.lower + self.upper)

    @property
    def half_width(self) -> float:
        return 0.5 * self.length

    def contains(self, x: Real, closed: bool = True):
        x = np.asarray(x, dtype=float)
        if closed:
            return (x >= self.lower) & (x <= self.upper)
        return (x > self.lower) & (x < self.upper)


@dataclass(frozen=True)
class Domain:
    """ Ordered disjoint closed intervals [a_1, b_1], ..., [a_n, b_n] """
    intervals: Tuple[Interval, ...]

    def __post_init__(self):
        if len(self.intervals) == 0:
            raise MalformedInput('a domain needs at least one interval')
        for left, right in zip(self.intervals, self.intervals[1:]):
            if not left.upper < right.lower:
                raise MalformedInput(
                        f'intervals must be ordered and disjoint: [{left.lower}, {left.upper}] '
                        f'then [{right.lower}, {right.upper}]')

    @classmethod
    def single(cls, lower: float, upper: float) -> 'Domain':
        return cls((Interval(float(lower), float(upper)),))

    @classmethod
    def symmetric(cls, c: float) -> 'Domain':
        return cls.single(-c, c)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> 'Domain':
        return cls(tuple(Interval(float(lo), float(hi)) for lo, hi in pairs))

    @property
    def is_single(self) -> bool:
        return len(self.intervals) == 1

    @property
    def interval(self) -> Interval:
        if not self.is_single:
            raise DomainError('operation needs a single-interval domain')
        return self.intervals[0]

    @property
    def lower(self) -> float:
        return self.intervals[0].lower

    @property
    def upper(self) -> float:
        return self.intervals[-1].upper

    @property
    def length(self) -> float:
        return sum(interval.length for interval in self.intervals)

    def contains(self, x: Real, closed: bool = True):
        x = np.asarray(x, dtype=float)
        inside = np.zeros(x.shape, dtype=bool)
        for interval in self.intervals:
            inside |= interval.contains(x, closed)
        return inside

    def to_pairs(self) -> list:
        return [[interval.lower, interval.upper] for interval in self.intervals]


@dataclass
class SampledFunction:
    """
    Values of a function on strictly increasing abscissae. `boundary_class`
    marks membership of C_Delta: the function and its derivative vanish at
    the end points of the domain.
    """
    grid: FloatArray
    values: np.ndarray
    boundary_class: bool = False
    domain: Optional[Domain] = field(default=None, compare=False)

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values)
        self.values = values if np.iscomplexobj(values) else values.astype(float)

        if self.grid.ndim != 1 or self.grid.shape != self.values.shape:
            raise MalformedInput(
                    f'grid and values must be 1-d arrays of equal length, '
                    f'got {self.grid.shape} and {self.values.shape}')
        if self.grid.size >= 2 and np.any(np.diff(self.grid) <= 0):
            raise MalformedInput('grid abscissae must be strictly increasing')
        if not np.all(np.isfinite(self.values)):
            raise MalformedInput('sampled values must be finite')
        if self.domain is not None and not np.all(self.domain.contains(self.grid)):
            raise DomainError('grid leaves the domain')

    @classmethod
    def from_callable(cls, fn: Callable[[FloatArray], np.ndarray], grid: Sequence[float],
                      boundary_class: bool = False, domain: Optional[Domain] = None) -> 'SampledFunction':
        grid = np.asarray(grid, dtype=float)
        return cls(grid, np.asarray(fn(grid)), boundary_class, domain)

    def with_values(self, values: np.ndarray) -> 'SampledFunction':
        return SampledFunction(self.grid, values, self.boundary_class, self.domain)

    @property
    def size(self) -> int:
        return self.grid.size

    def sup_norm(self, mask: Optional[np.ndarray] = None) -> float:
        values = self.values if mask is None else self.values[mask]
        return float(np.max(np.abs(values))) if values.size else 0.0
