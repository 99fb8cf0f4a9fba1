'''
Radar (Maerzke-Wheeler) synchronization maps of observers.

For an observer gamma the map sends z = s + x sigma to

    Omega(z) = (gamma(s+x) + gamma(s-x)) / 2 + ((gamma(s+x) - gamma(s-x)) / 2) sigma

so that Omega(z).t + Omega(z).x = t(s+x) + x(s+x) and
Omega(z).t - Omega(z).x = t(s-x) - x(s-x). The map is total on the plane;
only the radar inverse can fail.
'''
import enum
import logging

import numpy as np

import mwsync.settings as mss

from spacetime.causal import ray_intersect, rays_through, time_axis_hit
from spacetime.exceptions import (
    DegenerateFactor,
    NoRadarCoordinate,
    NotDifferentiable,
)
from spacetime.observers import SMOOTHNESS_RANK
from spacetime.splitc import SIGMA, SplitComplex, as_split_complex

logger = logging.getLogger(__name__)


class DerivativeMode(enum.Enum):
    ANALYTIC = 'analytic'
    FINITE_DIFF = 'finite_diff'


def _combine(at, ax, bt, bx):
    return (at + bt) / 2 + (ax - bx) / 2, (ax + bx) / 2 + (at - bt) / 2


class MWMap:
    '''
    The synchronization map of an observer.

    Parameters
    ----------
    observer: spacetime.observers.Observer
    root_tol: float
        Bisection tolerance of the radar inverse, defaults to ROOT_TOL
    bracket_limit: float
        Largest |s| explored while bracketing, defaults to BRACKET_LIMIT
    fd_step: float
        Relative finite difference step, defaults to FD_STEP
    '''
    def __init__(self, observer, root_tol=None, bracket_limit=None, fd_step=None):
        self.observer = observer
        self.root_tol = mss.ROOT_TOL if root_tol is None else float(root_tol)
        self.bracket_limit = (mss.BRACKET_LIMIT if bracket_limit is None
                              else float(bracket_limit))
        self.fd_step = mss.FD_STEP if fd_step is None else float(fd_step)

        if not (self.root_tol > 0 and self.bracket_limit > 0 and self.fd_step > 0):
            raise ValueError('root_tol, bracket_limit and fd_step must be positive')

    def __repr__(self):
        return 'MWMap({!r})'.format(self.observer)

    def eval_components(self, t, x):
        t = np.asarray(t, dtype=float)
        x = np.asarray(x, dtype=float)

        at, ax = self.observer.position(t + x)
        bt, bx = self.observer.position(t - x)

        return _combine(at, ax, bt, bx)

    def eval(self, z):
        z = as_split_complex(z)

        a = self.observer.eval(z.t + z.x)
        b = self.observer.eval(z.t - z.x)

        return (a + b) / 2 + ((a - b) / 2) * SIGMA

    def eval_geometric(self, z):
        '''
        Send the two lightrays through z to the time axis, lift the hits
        onto the worldline and intersect the lightrays coming back.
        '''
        left, right = rays_through(z)

        p_left = self.observer.eval(time_axis_hit(left))
        p_right = self.observer.eval(time_axis_hit(right))

        return ray_intersect(rays_through(p_left)[0], rays_through(p_right)[1])

    def _null_parameter(self, targets, sign):
        '''
        Solve t(s) + sign x(s) = target by bracketed bisection, elementwise.
        '''
        def null_coordinate(s):
            t, x = self.observer.position(s)
            return t + sign * x

        targets = np.atleast_1d(np.asarray(targets, dtype=float))
        window = self.observer.window

        with np.errstate(over='ignore', invalid='ignore'):
            if window is not None:
                lo = np.full_like(targets, window.lower)
                hi = np.full_like(targets, window.upper)
                found = ((null_coordinate(lo) <= targets) &
                         (null_coordinate(hi) >= targets))
            else:
                lo = np.full_like(targets, -1.0)
                hi = np.full_like(targets, 1.0)
                low_ok = null_coordinate(lo) <= targets
                high_ok = null_coordinate(hi) >= targets
                width = 1.0

                while not (low_ok.all() and high_ok.all()):
                    width *= 2
                    if width > self.bracket_limit:
                        break

                    lo = np.where(low_ok, lo, -width)
                    hi = np.where(high_ok, hi, width)
                    low_ok = null_coordinate(lo) <= targets
                    high_ok = null_coordinate(hi) >= targets

                found = low_ok & high_ok

        if not found.all():
            index = int(np.argmin(found))
            raise NoRadarCoordinate(
                'No parameter reaches null coordinate {} within the bracket'.format(
                    targets[index]),
                event=index)

        with np.errstate(over='ignore', invalid='ignore'):
            for _ in range(mss.MAX_BISECTIONS):
                scale = np.maximum(1.0, np.abs(lo) + np.abs(hi))
                if np.all(hi - lo <= self.root_tol * scale):
                    break

                mid = (lo + hi) / 2
                below = null_coordinate(mid) < targets
                lo = np.where(below, mid, lo)
                hi = np.where(below, hi, mid)

        return (lo + hi) / 2

    def radar_inverse_components(self, t, x):
        '''
        Radar coordinates of events given by component arrays.

        Returns
        -------
        (s, x): (numpy.ndarray, numpy.ndarray)
            Radar time and radar distance of every event

        Raises
        ------
        NoRadarCoordinate
            When an event is outside the region the observer can radar
        '''
        t = np.asarray(t, dtype=float)
        x = np.asarray(x, dtype=float)
        shape = np.broadcast(t, x).shape

        s_left = self._null_parameter(np.ravel(t + x), 1.0)
        s_right = self._null_parameter(np.ravel(t - x), -1.0)

        return (((s_left + s_right) / 2).reshape(shape),
                ((s_left - s_right) / 2).reshape(shape))

    def radar_inverse(self, e):
        e = as_split_complex(e)

        try:
            s, x = self.radar_inverse_components(e.t, e.x)
        except NoRadarCoordinate as error:
            raise NoRadarCoordinate(
                'Event {} has no radar coordinates for {!r}: {}'.format(
                    e.as_tuple(), self.observer, error),
                event=e)

        return SplitComplex(float(s), float(x))

    def _check_analytic(self):
        observer = self.observer
        if (not observer.analytic_derivative or
                SMOOTHNESS_RANK[observer.smoothness] < 1):
            raise NotDifferentiable(
                '{!r} has no analytic derivative'.format(observer))

    def derivative_components(self, t, x, mode=DerivativeMode.ANALYTIC, h=None):
        t = np.asarray(t, dtype=float)
        x = np.asarray(x, dtype=float)
        mode = DerivativeMode(mode)

        if mode is DerivativeMode.ANALYTIC:
            self._check_analytic()
            at, ax = self.observer.velocity(t + x)
            bt, bx = self.observer.velocity(t - x)
            return _combine(at, ax, bt, bx)

        if h is None:
            h = self.fd_step * np.maximum(1.0, np.hypot(t, x))

        plus_t, plus_x = self.eval_components(t + h, x)
        minus_t, minus_x = self.eval_components(t - h, x)

        return (plus_t - minus_t) / (2 * h), (plus_x - minus_x) / (2 * h)

    def mw_derivative(self, z, mode=DerivativeMode.ANALYTIC, h=None):
        '''
        The M2-derivative, the derivative in the time direction.

        Parameters
        ----------
        z: SplitComplex
        mode: DerivativeMode
            ANALYTIC uses the observer's own derivative, FINITE_DIFF a
            central difference of eval with step h
        h: float
            Defaults to fd_step * max(1, |z|)
        '''
        z = as_split_complex(z)
        dt, dx = self.derivative_components(z.t, z.x, mode, h)

        return SplitComplex(float(dt), float(dx))

    def conformal_factor_components(self, t, x, mode=DerivativeMode.ANALYTIC, h=None):
        dt, dx = self.derivative_components(t, x, mode, h)
        return dt * dt - dx * dx

    def conformal_factor(self, z, mode=DerivativeMode.ANALYTIC, h=None):
        factor = self.mw_derivative(z, mode, h).norm_sq()

        if factor <= 0:
            raise DegenerateFactor(
                'Conformal factor {} at {} for {!r}'.format(
                    factor, as_split_complex(z).as_tuple(), self.observer))

        return factor
