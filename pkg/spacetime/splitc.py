'''
The split-complex algebra R[sigma], sigma^2 = 1.

An element t + x*sigma doubles as an event of two dimensional Minkowski
space through (x, ct) <-> ct + x*sigma, so `t` always holds ct.
'''
import logging
import math

from dataclasses import dataclass

import mwsync.settings as mss

from spacetime.exceptions import (
    IndeterminateComposition,
    InvalidLightspeed,
    NonFiniteComponent,
    SpeedLimitExceeded,
)

logger = logging.getLogger(__name__)

# |norm_sq(u) - 1| allowed for a 2-velocity, scaled by 1 + t^2 + x^2
UNIT_TOL = 1e-12


@dataclass(frozen=True)
class SplitComplex:
    t: float
    x: float

    def __post_init__(self):
        t = float(self.t)
        x = float(self.x)

        if not (math.isfinite(t) and math.isfinite(x)):
            raise NonFiniteComponent(
                'Non finite split-complex number ({}, {})'.format(t, x))

        object.__setattr__(self, 't', t)
        object.__setattr__(self, 'x', x)

    def __add__(self, other):
        other = as_split_complex(other)
        return SplitComplex(self.t + other.t, self.x + other.x)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_split_complex(other)
        return SplitComplex(self.t - other.t, self.x - other.x)

    def __rsub__(self, other):
        return as_split_complex(other) - self

    def __neg__(self):
        return SplitComplex(-self.t, -self.x)

    def __mul__(self, other):
        other = as_split_complex(other)
        return SplitComplex(
            self.t * other.t + self.x * other.x,
            self.t * other.x + self.x * other.t)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return SplitComplex(self.t / scalar, self.x / scalar)

    def conj(self):
        return SplitComplex(self.t, -self.x)

    def norm_sq(self):
        return self.t * self.t - self.x * self.x

    def euclidean_norm(self):
        return math.hypot(self.t, self.x)

    def as_tuple(self):
        return (self.t, self.x)


ZERO = SplitComplex(0.0, 0.0)
ONE = SplitComplex(1.0, 0.0)
SIGMA = SplitComplex(0.0, 1.0)


def as_split_complex(value):
    '''
    Promote reals and (t, x) pairs to SplitComplex.
    '''
    if isinstance(value, SplitComplex):
        return value

    if isinstance(value, (tuple, list)):
        return SplitComplex(*value)

    return SplitComplex(value, 0.0)


@dataclass(frozen=True)
class LightspeedContext:
    c: float = 1.0

    def __post_init__(self):
        c = float(self.c)

        if not (math.isfinite(c) and c > 0):
            raise InvalidLightspeed('Speed of light must be > 0, got {}'.format(c))

        object.__setattr__(self, 'c', c)

    @classmethod
    def default(cls):
        return cls(mss.LIGHTSPEED)


@dataclass(frozen=True)
class TwoVelocity:
    u: SplitComplex

    def __post_init__(self):
        u = self.u
        tol = UNIT_TOL * (1.0 + u.t * u.t + u.x * u.x)

        if abs(u.norm_sq() - 1.0) > tol:
            raise SpeedLimitExceeded(
                'A 2-velocity must have unit norm, got {}'.format(u.norm_sq()))
        if u.t <= 0:
            raise SpeedLimitExceeded('A 2-velocity must be future directed')

    @property
    def velocity_fraction(self):
        '''v/c of this 2-velocity'''
        return self.u.x / self.u.t


def add(a, b):
    return as_split_complex(a) + as_split_complex(b)


def mul(a, b):
    return as_split_complex(a) * as_split_complex(b)


def conj(a):
    return as_split_complex(a).conj()


def norm_sq(a):
    '''
    |a|^2_L = conj(a) * a = t^2 - x^2. Negative for spacelike, zero
    for null elements.
    '''
    return as_split_complex(a).norm_sq()


def inner(a, b):
    '''
    Minkowski inner product <a, b> = Pi0(conj(a) * b) = t1 t2 - x1 x2.
    '''
    return (conj(a) * as_split_complex(b)).t


def exp(a):
    '''
    exp(t + x sigma) = e^t (cosh x + sinh x sigma)
    '''
    a = as_split_complex(a)
    scale = math.exp(a.t)

    return SplitComplex(scale * math.cosh(a.x), scale * math.sinh(a.x))


def _check_speed(v, ctx, inclusive=False):
    if inclusive:
        if abs(v) > ctx.c:
            raise SpeedLimitExceeded('|v| = {} exceeds c = {}'.format(abs(v), ctx.c))
    elif abs(v) >= ctx.c:
        raise SpeedLimitExceeded('|v| = {} is not below c = {}'.format(abs(v), ctx.c))


def lorentz_factor(v, ctx=None):
    ctx = ctx or LightspeedContext.default()
    _check_speed(v, ctx)

    beta = v / ctx.c
    return 1.0 / math.sqrt(1.0 - beta * beta)


def rapidity(v, ctx=None):
    ctx = ctx or LightspeedContext.default()
    _check_speed(v, ctx)

    return math.atanh(v / ctx.c)


def two_velocity(v, ctx=None):
    '''
    The 2-velocity associated to the 1-velocity v:

        u = (1 + (v/c) sigma) / sqrt(1 - v^2/c^2)

    Parameters
    ----------
    v: float
        The 1-velocity, |v| < c
    ctx: LightspeedContext
        Defaults to c = LIGHTSPEED

    Returns
    -------
    u: TwoVelocity
    '''
    ctx = ctx or LightspeedContext.default()
    gamma = lorentz_factor(v, ctx)

    return TwoVelocity(SplitComplex(gamma, gamma * v / ctx.c))


def boost(u, p):
    '''
    Lorentz transformation p' = u * p.
    '''
    return u.u * as_split_complex(p)


def velocity_add(v, w, ctx=None):
    '''
    Relativistic composition v * w = (v + w) / (1 + v w / c^2), the
    1-velocity of two_velocity(v) * two_velocity(w).

    Computed in units of c and clamped, so |v * w| <= c holds exactly
    and v * c = c for every |v| < c.
    '''
    ctx = ctx or LightspeedContext.default()
    _check_speed(v, ctx, inclusive=True)
    _check_speed(w, ctx, inclusive=True)

    beta_v, beta_w = v / ctx.c, w / ctx.c
    denominator = 1.0 + beta_v * beta_w

    if denominator == 0.0:
        # only reachable at v = -w = +-c
        raise IndeterminateComposition(
            'velocity_add({}, {}) is 0/0'.format(v, w))

    beta = min(1.0, max(-1.0, (beta_v + beta_w) / denominator))

    return beta * ctx.c
