import logging
import math

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from fieldcheck.exceptions import InvalidGrid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridSpec:
    '''
    A rectangular window of events sampled on a regular n_t x n_x grid.

    `h` is the finite difference step of the residual checks. It defaults
    to a tenth of the smaller grid spacing and must stay below half of it.
    '''
    t_min: float
    t_max: float
    x_min: float
    x_max: float
    n_t: int = 21
    n_x: int = 21
    h: Optional[float] = None

    def __post_init__(self):
        bounds = [float(b) for b in (self.t_min, self.t_max, self.x_min, self.x_max)]

        if not all(math.isfinite(b) for b in bounds):
            raise InvalidGrid('Grid bounds must be finite')
        if not (bounds[0] < bounds[1] and bounds[2] < bounds[3]):
            raise InvalidGrid('Grid bounds must be strictly ordered')
        if int(self.n_t) < 3 or int(self.n_x) < 3:
            raise InvalidGrid('A grid needs at least 3 nodes per axis')

        for name, value in zip(('t_min', 't_max', 'x_min', 'x_max'), bounds):
            object.__setattr__(self, name, value)
        object.__setattr__(self, 'n_t', int(self.n_t))
        object.__setattr__(self, 'n_x', int(self.n_x))

        spacing = self.min_spacing
        h = spacing / 10 if self.h is None else float(self.h)

        if not (h > 0 and h < spacing / 2):
            raise InvalidGrid(
                'Step h={} must be in (0, {}) for this grid'.format(h, spacing / 2))

        object.__setattr__(self, 'h', h)

    @classmethod
    def from_list(cls, values):
        '''
        Build from [t_min, t_max, x_min, x_max, n_t, n_x] (command line order).
        '''
        if len(values) != 6:
            raise InvalidGrid('Expected 6 grid values, got {}'.format(len(values)))

        t_min, t_max, x_min, x_max, n_t, n_x = values
        return cls(t_min, t_max, x_min, x_max, int(n_t), int(n_x))

    @property
    def min_spacing(self):
        return min((self.t_max - self.t_min) / (self.n_t - 1),
                   (self.x_max - self.x_min) / (self.n_x - 1))

    @property
    def scale(self):
        '''Diameter of the window.'''
        return math.hypot(self.t_max - self.t_min, self.x_max - self.x_min)

    def nodes(self):
        '''
        Node coordinates as two (n_t, n_x) arrays, t varying slowest.
        '''
        t = np.linspace(self.t_min, self.t_max, self.n_t)
        x = np.linspace(self.x_min, self.x_max, self.n_x)

        return np.meshgrid(t, x, indexing='ij')

    def halved(self):
        return replace(self, h=self.h / 2)

    def random_points(self, rng, n):
        t = rng.uniform(self.t_min, self.t_max, n)
        x = rng.uniform(self.x_min, self.x_max, n)

        return t, x
