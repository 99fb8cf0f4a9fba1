'''
Observers: timelike, future directed worldlines s -> gamma(s).

Every kind evaluates on numpy arrays of parameters and returns the (t, x)
component arrays; the SplitComplex methods are thin scalar wrappers. The
parameter s is measured in the same units as ct.
'''
import abc
import enum
import logging
import math

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

import mwsync.settings as mss

from mwsync.utils import spawn_generators
from spacetime.exceptions import DomainExceeded, InvalidObserver, NotTimelike
from spacetime.reports import ResidualReport
from spacetime.splitc import (
    LightspeedContext,
    SplitComplex,
    TwoVelocity,
    as_split_complex,
    two_velocity,
)

logger = logging.getLogger(__name__)


class Smoothness(enum.Enum):
    C0 = 'C0'
    PIECEWISE_SMOOTH = 'piecewise_smooth'
    C1 = 'C1'
    C2 = 'C2'


SMOOTHNESS_RANK = {
    Smoothness.C0: 0,
    Smoothness.PIECEWISE_SMOOTH: 0,
    Smoothness.C1: 1,
    Smoothness.C2: 2,
}


@dataclass(frozen=True)
class Interval:
    '''
    Range of a null coordinate. For the increasing coordinates of an
    observer the endpoints are its limits at s -> -inf and s -> +inf;
    bounded perturbations report their bounds.
    '''
    lower: float
    upper: float

    @classmethod
    def real_line(cls):
        return cls(-math.inf, math.inf)

    @property
    def is_real_line(self):
        return self.lower == -math.inf and self.upper == math.inf

    def __add__(self, other):
        return Interval(self.lower + other.lower, self.upper + other.upper)

    def scaled(self, factor):
        # factor > 0
        return Interval(self.lower * factor, self.upper * factor)

    def shifted(self, offset):
        return Interval(self.lower + offset, self.upper + offset)

    def contains(self, value):
        return self.lower <= value <= self.upper

    def as_tuple(self):
        return (self.lower, self.upper)


class LipStatus(enum.Enum):
    VERIFIED = 'verified'
    FAILS_LIP = 'fails_lip'
    WINDOW_ONLY = 'window_only'
    UNKNOWN = 'unknown'


@dataclass(frozen=True)
class LipReport:
    status: LipStatus
    reason: Optional[str] = None
    null_window: Optional[Tuple[Interval, Interval]] = None

    @property
    def verified(self):
        return self.status is LipStatus.VERIFIED


def _components(s):
    return np.asarray(s, dtype=float)


def _broadcast(value, s):
    return np.zeros_like(s) + value


class Observer(abc.ABC):
    '''
    Base class of all worldline kinds.

    Subclasses implement `position` and `null_range`; kinds with a closed
    form derivative override `_velocity`.
    '''
    kind = 'observer'
    smoothness = Smoothness.C2
    analytic_derivative = True
    window = None

    @abc.abstractmethod
    def position(self, s):
        '''
        Parameters
        ----------
        s: float or numpy.ndarray
            Observer parameters

        Returns
        -------
        (t, x): (numpy.ndarray, numpy.ndarray)
            Components of gamma(s), broadcast like s
        '''

    @abc.abstractmethod
    def null_range(self):
        '''
        Returns
        -------
        (Interval, Interval)
            Ranges of s -> t(s) + x(s) and s -> t(s) - x(s)
        '''

    def null_rate(self):
        '''
        Bounds on the derivatives of t(s) + x(s) and t(s) - x(s) over all
        parameters, or None when the kind has no closed form bound.
        '''
        return None

    def _velocity(self, s, h=None):
        # central difference when a kind has no closed form
        if h is None:
            h = mss.FD_STEP * np.maximum(1.0, np.abs(s))

        t_plus, x_plus = self.position(s + h)
        t_minus, x_minus = self.position(s - h)

        return (t_plus - t_minus) / (2 * h), (x_plus - x_minus) / (2 * h)

    def velocity(self, s):
        s = _components(s)
        self.check_domain(s)

        return self._velocity(s)

    def check_domain(self, s):
        if self.window is None:
            return

        s = _components(s)
        outside = (s < self.window.lower) | (s > self.window.upper)

        if np.any(outside):
            first = float(np.ravel(s)[np.argmax(np.ravel(outside))])
            raise DomainExceeded(
                'Parameter {} outside the {} window [{}, {}]'.format(
                    first, self.kind, self.window.lower, self.window.upper))

    def breakpoints(self):
        return ()

    def eval(self, s):
        t, x = self.position(float(s))
        return SplitComplex(float(t), float(x))

    def derivative(self, s):
        dt, dx = self.velocity(float(s))
        return SplitComplex(float(dt), float(dx))

    def null_coords(self, s):
        t, x = self.position(s)
        return t + x, t - x

    def __add__(self, other):
        return Sum(self, other)

    def boosted(self, u):
        return Boosted(self, u)

    def translated(self, offset):
        return Translated(self, offset)


class Inertial(Observer):
    '''
    gamma(s) = base + s u, a straight line parameterized by proper time
    (in ct units).
    '''
    kind = 'inertial'

    def __init__(self, v=0.0, base=(0.0, 0.0), ctx=None):
        self.ctx = ctx or LightspeedContext.default()
        self.v = float(v)
        self.base = as_split_complex(base)
        self.u = two_velocity(self.v, self.ctx).u

    def position(self, s):
        s = _components(s)
        return self.base.t + s * self.u.t, self.base.x + s * self.u.x

    def _velocity(self, s, h=None):
        return _broadcast(self.u.t, s), _broadcast(self.u.x, s)

    def null_range(self):
        return Interval.real_line(), Interval.real_line()

    def null_rate(self):
        plus, minus = self.u.t + self.u.x, self.u.t - self.u.x
        return Interval(plus, plus), Interval(minus, minus)

    def __repr__(self):
        return 'Inertial(v={}, base={})'.format(self.v, self.base.as_tuple())


class Rindler(Observer):
    '''
    The uniformly accelerated observer

        gamma(s) = (c^2/a) exp((a s / c^2) sigma) sigma

    with components t = (c^2/a) sinh(a s/c^2), x = (c^2/a) cosh(a s/c^2).
    '''
    kind = 'rindler'

    def __init__(self, a=1.0, ctx=None):
        self.ctx = ctx or LightspeedContext.default()
        self.a = float(a)

        if self.a == 0.0 or not math.isfinite(self.a):
            raise InvalidObserver('Rindler acceleration must be finite and nonzero')

        # a / c^2, the inverse of the distance to the horizon
        self.k = self.a / (self.ctx.c * self.ctx.c)

    def position(self, s):
        ks = self.k * _components(s)
        return np.sinh(ks) / self.k, np.cosh(ks) / self.k

    def _velocity(self, s, h=None):
        ks = self.k * s
        return np.cosh(ks), np.sinh(ks)

    def null_range(self):
        # t + x = e^{ks}/k and t - x = -e^{-ks}/k
        if self.k > 0:
            return Interval(0.0, math.inf), Interval(-math.inf, 0.0)

        return Interval(-math.inf, 0.0), Interval(0.0, math.inf)

    def null_rate(self):
        # e^{ks} and e^{-ks}
        return Interval(0.0, math.inf), Interval(0.0, math.inf)

    def __repr__(self):
        return 'Rindler(a={})'.format(self.a)


class PerturbedInertial(Observer):
    '''
    gamma(s) = s + A sin(w s) sigma with |A w| < 1; both null coordinates
    s +- A sin(w s) are increasing surjections.
    '''
    kind = 'perturbed_inertial'

    def __init__(self, amplitude=0.3, omega=1.0):
        self.amplitude = float(amplitude)
        self.omega = float(omega)

        if not abs(self.amplitude * self.omega) < 1:
            raise InvalidObserver(
                'PerturbedInertial needs |A w| < 1, got {}'.format(
                    self.amplitude * self.omega))

    def position(self, s):
        s = _components(s)
        return s, self.amplitude * np.sin(self.omega * s)

    def _velocity(self, s, h=None):
        return (_broadcast(1.0, s),
                self.amplitude * self.omega * np.cos(self.omega * s))

    def null_range(self):
        return Interval.real_line(), Interval.real_line()

    def null_rate(self):
        bound = abs(self.amplitude * self.omega)
        return Interval(1 - bound, 1 + bound), Interval(1 - bound, 1 + bound)

    def __repr__(self):
        return 'PerturbedInertial(A={}, omega={})'.format(
            self.amplitude, self.omega)


class Oscillation(Observer):
    '''
    gamma(s) = A sin(w s) sigma. Not an observer on its own (it never moves
    forward in time) but a valid summand: Inertial(0) + Oscillation(A, w)
    is PerturbedInertial(A, w).
    '''
    kind = 'oscillation'

    def __init__(self, amplitude=0.0, omega=1.0):
        self.amplitude = float(amplitude)
        self.omega = float(omega)

    def position(self, s):
        s = _components(s)
        return np.zeros_like(s), self.amplitude * np.sin(self.omega * s)

    def _velocity(self, s, h=None):
        return (np.zeros_like(s),
                self.amplitude * self.omega * np.cos(self.omega * s))

    def null_range(self):
        bound = abs(self.amplitude)
        return Interval(-bound, bound), Interval(-bound, bound)

    def null_rate(self):
        bound = abs(self.amplitude * self.omega)
        return Interval(-bound, bound), Interval(-bound, bound)

    def __repr__(self):
        return 'Oscillation(A={}, omega={})'.format(self.amplitude, self.omega)


class PiecewiseLinear(Observer):
    '''
    Sampled worldline through vertices ordered by time, parameterized by
    the time coordinate itself. Only defined on [t_first, t_last].
    '''
    kind = 'piecewise_linear'
    smoothness = Smoothness.C0
    analytic_derivative = False

    def __init__(self, vertices):
        vertices = [as_split_complex(v) for v in vertices]

        if len(vertices) < 2:
            raise InvalidObserver('A piecewise linear observer needs two vertices')

        self.ts = np.array([v.t for v in vertices])
        self.xs = np.array([v.x for v in vertices])

        if np.any(np.diff(self.ts) <= 0):
            raise InvalidObserver('Vertex times must be strictly increasing')

        self.window = Interval(float(self.ts[0]), float(self.ts[-1]))

    def position(self, s):
        s = _components(s)
        self.check_domain(s)

        return s.copy(), np.interp(s, self.ts, self.xs)

    def _velocity(self, s, h=None):
        # right hand slope, the last segment at the final vertex
        index = np.searchsorted(self.ts, s, side='right') - 1
        index = np.clip(index, 0, len(self.ts) - 2)
        slope = ((self.xs[index + 1] - self.xs[index]) /
                 (self.ts[index + 1] - self.ts[index]))

        return _broadcast(1.0, s), slope

    def breakpoints(self):
        return tuple(self.ts)

    def null_range(self):
        plus = self.ts + self.xs
        minus = self.ts - self.xs

        return (Interval(float(plus.min()), float(plus.max())),
                Interval(float(minus.min()), float(minus.max())))

    def null_rate(self):
        slopes = np.diff(self.xs) / np.diff(self.ts)

        return (Interval(float((1 + slopes).min()), float((1 + slopes).max())),
                Interval(float((1 - slopes).min()), float((1 - slopes).max())))

    def __repr__(self):
        return 'PiecewiseLinear({} vertices)'.format(len(self.ts))


class Sum(Observer):
    '''
    Pointwise sum of two worldlines.
    '''
    kind = 'sum'

    def __init__(self, first, second):
        self.first = first
        self.second = second

        self.smoothness = min(
            (first.smoothness, second.smoothness),
            key=lambda s: SMOOTHNESS_RANK[s])
        self.analytic_derivative = (
            first.analytic_derivative and second.analytic_derivative)
        self.window = _intersect_windows(first.window, second.window)

    def position(self, s):
        t1, x1 = self.first.position(s)
        t2, x2 = self.second.position(s)
        return t1 + t2, x1 + x2

    def _velocity(self, s, h=None):
        dt1, dx1 = self.first.velocity(s)
        dt2, dx2 = self.second.velocity(s)
        return dt1 + dt2, dx1 + dx2

    def breakpoints(self):
        return tuple(sorted(set(self.first.breakpoints()) |
                            set(self.second.breakpoints())))

    def null_range(self):
        plus1, minus1 = self.first.null_range()
        plus2, minus2 = self.second.null_range()
        return plus1 + plus2, minus1 + minus2

    def null_rate(self):
        first, second = self.first.null_rate(), self.second.null_rate()

        if first is None or second is None:
            return None

        return first[0] + second[0], first[1] + second[1]

    def __repr__(self):
        return 'Sum({!r}, {!r})'.format(self.first, self.second)


class Boosted(Observer):
    '''
    u * gamma(s) for a 2-velocity u.
    '''
    kind = 'boosted'

    def __init__(self, observer, u):
        if not isinstance(u, TwoVelocity):
            u = TwoVelocity(as_split_complex(u))

        self.observer = observer
        self.u = u.u
        self.smoothness = observer.smoothness
        self.analytic_derivative = observer.analytic_derivative
        self.window = observer.window

    def _apply(self, t, x):
        return (self.u.t * t + self.u.x * x,
                self.u.x * t + self.u.t * x)

    def position(self, s):
        return self._apply(*self.observer.position(s))

    def _velocity(self, s, h=None):
        return self._apply(*self.observer.velocity(s))

    def breakpoints(self):
        return self.observer.breakpoints()

    def null_range(self):
        # t' + x' = (u.t + u.x)(t + x), t' - x' = (u.t - u.x)(t - x)
        plus, minus = self.observer.null_range()
        return (plus.scaled(self.u.t + self.u.x),
                minus.scaled(self.u.t - self.u.x))

    def null_rate(self):
        rate = self.observer.null_rate()

        if rate is None:
            return None

        return (rate[0].scaled(self.u.t + self.u.x),
                rate[1].scaled(self.u.t - self.u.x))

    def __repr__(self):
        return 'Boosted({!r}, u={})'.format(self.observer, self.u.as_tuple())


class Translated(Observer):
    '''
    gamma(s) + b for a fixed event b.
    '''
    kind = 'translated'

    def __init__(self, observer, offset):
        self.observer = observer
        self.offset = as_split_complex(offset)
        self.smoothness = observer.smoothness
        self.analytic_derivative = observer.analytic_derivative
        self.window = observer.window

    def position(self, s):
        t, x = self.observer.position(s)
        return t + self.offset.t, x + self.offset.x

    def _velocity(self, s, h=None):
        return self.observer.velocity(s)

    def breakpoints(self):
        return self.observer.breakpoints()

    def null_range(self):
        plus, minus = self.observer.null_range()
        return (plus.shifted(self.offset.t + self.offset.x),
                minus.shifted(self.offset.t - self.offset.x))

    def null_rate(self):
        return self.observer.null_rate()

    def __repr__(self):
        return 'Translated({!r}, {})'.format(
            self.observer, self.offset.as_tuple())


def _intersect_windows(first, second):
    if first is None:
        return second
    if second is None:
        return first

    window = Interval(max(first.lower, second.lower),
                      min(first.upper, second.upper))
    if window.lower > window.upper:
        raise InvalidObserver('Summed observers have disjoint windows')

    return window


def null_coords(observer, s):
    '''
    (t(s) + x(s), t(s) - x(s)) as floats.
    '''
    plus, minus = observer.null_coords(float(s))
    return float(plus), float(minus)


def lip_status(observer):
    '''
    Decide the lightray intersecting property from the closed form null
    ranges. Sampled kinds never earn VERIFIED: surjectivity onto the real
    line cannot be read off finitely many samples.

    Full ranges only count when both null coordinates are certified
    increasing, i.e. the lower bounds of their rates are positive. Sums
    bound their rates summand by summand, so a sum whose perturbation
    may outrun the inertial part is UNKNOWN.
    '''
    plus, minus = observer.null_range()

    if observer.window is not None:
        return LipReport(LipStatus.WINDOW_ONLY, null_window=(plus, minus))

    if not (plus.is_real_line and minus.is_real_line):
        reason = 't+x range ({}, {}); t-x range ({}, {})'.format(
            plus.lower, plus.upper, minus.lower, minus.upper)

        return LipReport(LipStatus.FAILS_LIP, reason=reason,
                         null_window=(plus, minus))

    rate = observer.null_rate()

    if rate is None:
        return LipReport(LipStatus.UNKNOWN, null_window=(plus, minus),
                         reason='no bound on the null coordinate rates')

    if rate[0].lower > 0 and rate[1].lower > 0:
        return LipReport(LipStatus.VERIFIED, null_window=(plus, minus))

    reason = 'null coordinates not certified increasing: t+x rate >= {}, t-x rate >= {}'.format(
        rate[0].lower, rate[1].lower)

    return LipReport(LipStatus.UNKNOWN, reason=reason, null_window=(plus, minus))


def verify_observer(observer, window, n, seed=None):
    '''
    Check chronological monotonicity of a worldline on a parameter window.

    Every consecutive pair of an n-point grid (plus the observer's own
    breakpoints) and n random pairs must be separated by a future
    directed timelike vector.

    Parameters
    ----------
    observer: Observer
    window: (float, float)
        The parameter window [s0, s1]
    n: int
        Grid size, also the number of random pairs
    seed: int
        Seed for the random pairs, defaults to DEFAULT_SEED

    Returns
    -------
    report: ResidualReport
        max_abs/mean_abs summarize the consecutive margins norm_sq(delta);
        min_margin is the smallest of them

    Raises
    ------
    NotTimelike
        With the offending parameter pair
    '''
    s0, s1 = (float(w) for w in window)

    if n < 2 or not s0 < s1:
        raise ValueError('verify_observer needs n >= 2 and s0 < s1')

    seed = mss.DEFAULT_SEED if seed is None else seed
    grid = np.linspace(s0, s1, n)
    inner = [b for b in observer.breakpoints() if s0 < b < s1]
    grid = np.unique(np.concatenate([grid, inner]))

    t, x = observer.position(grid)
    dt, dx = np.diff(t), np.diff(x)
    margins = dt * dt - dx * dx
    _raise_on_violation(margins, dt, grid[:-1], grid[1:])

    rng, = spawn_generators(seed, 1)
    pairs = np.sort(rng.uniform(s0, s1, size=(n, 2)), axis=1)
    pairs = pairs[pairs[:, 0] < pairs[:, 1]]

    ta, xa = observer.position(pairs[:, 0])
    tb, xb = observer.position(pairs[:, 1])
    random_dt, random_dx = tb - ta, xb - xa
    _raise_on_violation(random_dt * random_dt - random_dx * random_dx,
                        random_dt, pairs[:, 0], pairs[:, 1])

    logger.debug('verified %r on [%s, %s] with %d nodes', observer, s0, s1,
                 len(grid))

    max_margin = float(margins.max())

    return ResidualReport(
        max_abs=max_margin,
        mean_abs=min(float(margins.mean()), max_margin),
        min_margin=float(margins.min()),
        n_samples=len(margins) + len(pairs),
        seed=seed)


def _raise_on_violation(margins, dt, starts, ends):
    bad = (margins <= 0) | (dt <= 0)

    if np.any(bad):
        index = int(np.argmax(bad))
        pair = (float(starts[index]), float(ends[index]))

        raise NotTimelike(
            'gamma({}) does not chronologically precede gamma({}) '
            '(margin {})'.format(pair[0], pair[1], float(margins[index])),
            pair=pair)
