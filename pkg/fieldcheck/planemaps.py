'''
Maps of the Minkowski plane into itself.

Every map evaluates component arrays, `eval_components(t, x) -> (T, X)`,
so residual sweeps run over whole grids at once. `eval` is the scalar
SplitComplex wrapper.
'''
import abc
import functools
import logging

import numpy as np

from spacetime.mw import MWMap
from spacetime.splitc import (
    LightspeedContext,
    SplitComplex,
    TwoVelocity,
    as_split_complex,
    two_velocity,
)

logger = logging.getLogger(__name__)


class PlaneMap(abc.ABC):
    kind = 'map'

    @abc.abstractmethod
    def eval_components(self, t, x):
        pass

    def eval(self, z):
        z = as_split_complex(z)
        t, x = self.eval_components(np.float64(z.t), np.float64(z.x))

        return SplitComplex(float(t), float(x))

    def associated_curve(self, s):
        '''
        The restriction s -> F(s + 0 sigma) to the time axis.
        '''
        s = np.asarray(s, dtype=float)
        return self.eval_components(s, np.zeros_like(s))

    def __add__(self, other):
        return SumMap(self, other)


class MWPlaneMap(PlaneMap):
    kind = 'mw'

    def __init__(self, m):
        if not isinstance(m, MWMap):
            m = MWMap(m)
        self.m = m

    def eval_components(self, t, x):
        return self.m.eval_components(t, x)

    def __repr__(self):
        return 'MW({!r})'.format(self.m.observer)


class ConjPrecomposed(PlaneMap):
    '''F(conj(z))'''
    kind = 'conj'

    def __init__(self, inner):
        self.inner = inner

    def eval_components(self, t, x):
        return self.inner.eval_components(t, -np.asarray(x, dtype=float))

    def __repr__(self):
        return '{!r} o conj'.format(self.inner)


class PostConj(PlaneMap):
    '''conj(F(z))'''
    kind = 'post_conj'

    def __init__(self, inner):
        self.inner = inner

    def eval_components(self, t, x):
        image_t, image_x = self.inner.eval_components(t, x)
        return image_t, -image_x

    def __repr__(self):
        return 'conj o {!r}'.format(self.inner)


class SumMap(PlaneMap):
    kind = 'sum'

    def __init__(self, first, second):
        self.first = first
        self.second = second

    @classmethod
    def of(cls, maps):
        if not maps:
            raise ValueError('A sum needs at least one map')
        return functools.reduce(cls, maps)

    def eval_components(self, t, x):
        t1, x1 = self.first.eval_components(t, x)
        t2, x2 = self.second.eval_components(t, x)
        return t1 + t2, x1 + x2

    def __repr__(self):
        return '({!r} + {!r})'.format(self.first, self.second)


class LinearMap(PlaneMap):
    '''
    (t, x) -> matrix @ (t, x), e.g. [[1, 0], [0, 2]] for an anisotropic
    stretch of space.
    '''
    kind = 'linear'

    def __init__(self, matrix):
        matrix = np.asarray(matrix, dtype=float)

        if matrix.shape != (2, 2) or not np.all(np.isfinite(matrix)):
            raise ValueError('Expected a finite 2x2 matrix')

        self.matrix = matrix

    def eval_components(self, t, x):
        (a, b), (c, d) = self.matrix
        t = np.asarray(t, dtype=float)
        x = np.asarray(x, dtype=float)

        return a * t + b * x, c * t + d * x

    def __repr__(self):
        return 'Linear({})'.format(self.matrix.tolist())


class AffineLorentz(PlaneMap):
    '''
    z -> scale * u * z + offset: a boost followed by a dilation and a
    translation.
    '''
    kind = 'affine_lorentz'

    def __init__(self, u=None, scale=1.0, offset=(0.0, 0.0), v=None, ctx=None):
        if u is None:
            u = two_velocity(0.0 if v is None else v,
                             ctx or LightspeedContext.default())
        elif not isinstance(u, TwoVelocity):
            u = TwoVelocity(as_split_complex(u))

        self.u = u.u
        self.scale = float(scale)
        self.offset = as_split_complex(offset)

        if not self.scale > 0:
            raise ValueError('scale must be positive')

    def eval_components(self, t, x):
        t = np.asarray(t, dtype=float)
        x = np.asarray(x, dtype=float)
        k = self.scale

        return (k * (self.u.t * t + self.u.x * x) + self.offset.t,
                k * (self.u.x * t + self.u.t * x) + self.offset.x)

    def __repr__(self):
        return 'AffineLorentz(u={}, scale={}, offset={})'.format(
            self.u.as_tuple(), self.scale, self.offset.as_tuple())


class PowerMap(PlaneMap):
    '''
    z -> z^n in the algebra. Computed on the null coordinates, where the
    product is componentwise: (t+x, t-x) -> ((t+x)^n, (t-x)^n).
    '''
    kind = 'power'

    def __init__(self, n):
        if int(n) != n or n < 0:
            raise ValueError('Power must be a non negative integer')
        self.n = int(n)

    def eval_components(self, t, x):
        t = np.asarray(t, dtype=float)
        x = np.asarray(x, dtype=float)

        plus = (t + x) ** self.n
        minus = (t - x) ** self.n

        return (plus + minus) / 2, (plus - minus) / 2

    def __repr__(self):
        return 'Power({})'.format(self.n)


class RadarInverseMap(PlaneMap):
    '''
    The radar coordinates of events as seen by an observer. Partial:
    raises NoRadarCoordinate outside the region the observer can radar.
    '''
    kind = 'radar_inverse'

    def __init__(self, m):
        if not isinstance(m, MWMap):
            m = MWMap(m)
        self.m = m

    def eval_components(self, t, x):
        return self.m.radar_inverse_components(t, x)

    def __repr__(self):
        return 'RadarInverse({!r})'.format(self.m.observer)


def identity():
    return LinearMap(np.eye(2))
