'''
Proper time of clocks, measured directly or through the radar
coordinates of an accelerated observer.

Inside the radar coordinates of an observer gamma the proper time of a
clock at x(t) is

    tau = integral |D Omega_gamma|_L (ct, x(t)) sqrt(1 - v(t)^2 / c^2) dt

which reduces to the inertial formula when the conformal factor is one.
'''
import logging
import math

from dataclasses import dataclass
from typing import Optional, Tuple

import mwsync.settings as mss

from propertime.quadrature import adaptive_simpson
from propertime.trajectories import RadarTrajectory, radar_trajectory_of
from spacetime.exceptions import NotTimelike, SpeedLimitExceeded
from spacetime.mw import MWMap
from spacetime.observers import Inertial, Rindler
from spacetime.splitc import LightspeedContext, SplitComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProperTimeResult:
    tau: float
    abs_error_estimate: float
    n_evals: int

    @classmethod
    def from_quadrature(cls, result):
        return cls(result.value, result.abs_error_estimate, result.n_evals)


@dataclass(frozen=True)
class TwinReport:
    tau_a_by_a: float
    tau_a_by_b: float
    tau_b_by_b: float
    tau_b_by_a: float
    window_a: Tuple[float, float]
    window_b: Tuple[float, float]
    younger: str
    consistent: bool


@dataclass(frozen=True)
class DilationResult:
    ratio: float
    tau_x1: float
    tau_x2: float
    g: float
    quadrature_tau_x2: Optional[float] = None

    @property
    def cross_check_error(self):
        if self.quadrature_tau_x2 is None:
            return None
        return abs(self.quadrature_tau_x2 - self.tau_x2)


def _lorentz_root(v, t, ctx):
    beta_sq = (v / ctx.c) ** 2

    if not beta_sq < 1:
        raise SpeedLimitExceeded(
            'Speed {} at t={} is not below c={}'.format(v, t, ctx.c))

    return math.sqrt(1.0 - beta_sq)


def proper_time_inertial(traj, ctx=None, tol=None):
    '''
    Proper time of a clock moving along x(t) in inertial coordinates.

    Raises
    ------
    SpeedLimitExceeded
        At the first quadrature node where |v| >= c
    '''
    ctx = ctx or LightspeedContext.default()

    def integrand(t):
        return _lorentz_root(traj.v(t), t, ctx)

    return ProperTimeResult.from_quadrature(
        adaptive_simpson(integrand, traj.window[0], traj.window[1], tol))


def proper_time_accelerated(observer, traj, ctx=None, tol=None):
    '''
    Proper time of a clock whose radar trajectory relative to `observer`
    is `traj`.

    Parameters
    ----------
    observer: spacetime.observers.Observer or spacetime.mw.MWMap
        Needs an analytic derivative
    traj: RadarTrajectory
        Radar position against radar time (time units)
    ctx: LightspeedContext
    tol: float
        Absolute quadrature tolerance, defaults to QUAD_TOL

    Raises
    ------
    SpeedLimitExceeded, DegenerateFactor, NotDifferentiable
    '''
    ctx = ctx or LightspeedContext.default()
    m = observer if isinstance(observer, MWMap) else MWMap(observer)

    def integrand(t):
        factor = m.conformal_factor(SplitComplex(ctx.c * t, traj.x(t)))
        return math.sqrt(factor) * _lorentz_root(traj.v(t), t, ctx)

    return ProperTimeResult.from_quadrature(
        adaptive_simpson(integrand, traj.window[0], traj.window[1], tol))


def proper_time_along(observer, window, ctx=None, tol=None):
    '''
    A clock's own reading: (1/c) * integral |gamma'(s)|_L ds, split at
    the observer's breakpoints.
    '''
    ctx = ctx or LightspeedContext.default()
    s0, s1 = (float(w) for w in window)

    def integrand(s):
        interval = observer.derivative(s).norm_sq()

        if interval <= 0:
            raise NotTimelike(
                'Tangent at s={} is not timelike'.format(s), pair=(s, s))

        return math.sqrt(interval)

    edges = [s0] + [b for b in observer.breakpoints() if s0 < b < s1] + [s1]

    tau, error, n_evals = 0.0, 0.0, 0
    for left, right in zip(edges[:-1], edges[1:]):
        piece = adaptive_simpson(integrand, left, right, tol)
        tau += piece.value
        error += piece.abs_error_estimate
        n_evals += piece.n_evals

    return ProperTimeResult(tau / ctx.c, error / ctx.c, n_evals)


def matched_window(observer_a, observer_b, window_a):
    '''
    Parameters of observer_b simultaneous (in b's radar time) with the
    endpoints of observer_a's window.
    '''
    m = MWMap(observer_b)

    return tuple(m.radar_inverse(observer_a.eval(s)).t for s in window_a)


def _agree(first, second, tol, rtol):
    return abs(first - second) <= max(tol, rtol * max(abs(first), abs(second)))


def twin_consistency(observer_a, observer_b, window_a, window_b=None, ctx=None,
                     tol=None, rtol=None, n=None):
    '''
    Compute each twin's elapsed proper time twice, once along its own
    worldline and once through the other twin's radar coordinates.

    Parameters
    ----------
    observer_a, observer_b: spacetime.observers.Observer
    window_a: (float, float)
        Parameter window of twin A
    window_b: (float, float)
        Parameter window of twin B, matched to window_a by radar
        simultaneity when not given
    ctx: LightspeedContext
    tol: float
        Quadrature tolerance
    rtol: float
        Relative agreement required of the two computations, defaults to
        TWIN_RTOL
    n: int
        Radar samples per trajectory

    Returns
    -------
    report: TwinReport
    '''
    ctx = ctx or LightspeedContext.default()
    rtol = mss.TWIN_RTOL if rtol is None else float(rtol)
    tol = mss.QUAD_TOL if tol is None else float(tol)
    window_a = tuple(float(w) for w in window_a)

    if window_b is None:
        window_b = matched_window(observer_a, observer_b, window_a)
    window_b = tuple(float(w) for w in window_b)

    tau_a_by_a = proper_time_along(observer_a, window_a, ctx, tol).tau
    tau_b_by_b = proper_time_along(observer_b, window_b, ctx, tol).tau

    a_seen_by_b = radar_trajectory_of(observer_b, observer_a, window_a, n, ctx)
    tau_a_by_b = proper_time_accelerated(observer_b, a_seen_by_b, ctx, tol).tau

    b_seen_by_a = radar_trajectory_of(observer_a, observer_b, window_b, n, ctx)
    tau_b_by_a = proper_time_accelerated(observer_a, b_seen_by_a, ctx, tol).tau

    consistent = (_agree(tau_a_by_a, tau_a_by_b, tol, rtol) and
                  _agree(tau_b_by_b, tau_b_by_a, tol, rtol))

    if _agree(tau_a_by_a, tau_b_by_b, tol, rtol):
        younger = 'neither'
    elif tau_a_by_a < tau_b_by_b:
        younger = 'A'
    else:
        younger = 'B'

    logger.info('twins: tau_A %s / %s, tau_B %s / %s, younger %s',
                tau_a_by_a, tau_a_by_b, tau_b_by_b, tau_b_by_a, younger)

    return TwinReport(tau_a_by_a, tau_a_by_b, tau_b_by_b, tau_b_by_a,
                      window_a, window_b, younger, consistent)


def gravitational_dilation(a, x1, x2, dt, ctx=None, cross_check=True, tol=None):
    '''
    Rates of static clocks at radar positions x1 and x2 of a uniformly
    accelerated observer, whose frame carries the gravitational field
    g = -a:

        tau(x2) = exp(-g (x2 - x1) / c^2) tau(x1),  tau(x) = exp(a x / c^2) dt

    With `cross_check` the clock at x2 is also integrated numerically.
    '''
    ctx = ctx or LightspeedContext.default()

    if not dt > 0:
        raise ValueError('dt must be positive')

    c_sq = ctx.c * ctx.c
    ratio = math.exp(a * (x2 - x1) / c_sq)
    tau_x1 = math.exp(a * x1 / c_sq) * dt
    tau_x2 = ratio * tau_x1

    quadrature_tau_x2 = None
    if cross_check:
        observer = Rindler(a, ctx) if a != 0 else Inertial(0.0, ctx=ctx)
        quadrature_tau_x2 = proper_time_accelerated(
            observer, RadarTrajectory.constant(x2, (0.0, dt)), ctx, tol).tau

    return DilationResult(ratio, tau_x1, tau_x2, -a, quadrature_tau_x2)

