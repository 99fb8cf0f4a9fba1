'''
Worldlines expressed in the radar coordinates of another observer.
'''
import logging

from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np
import scipy.interpolate as sci

import mwsync.settings as mss

from propertime.exceptions import NonMonotoneRadarTime
from spacetime.mw import MWMap
from spacetime.observers import SMOOTHNESS_RANK
from spacetime.splitc import LightspeedContext

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RadarTrajectory:
    '''
    Radar position x(t) and velocity v(t) = dx/dt of a worldline as
    measured by an observer, t being the observer's radar time (time
    units, not ct).
    '''
    x: Callable[[float], float]
    v: Callable[[float], float]
    window: Tuple[float, float]

    def __post_init__(self):
        t0, t1 = (float(w) for w in self.window)

        if not t0 <= t1:
            raise ValueError('Trajectory window must be ordered')

        object.__setattr__(self, 'window', (t0, t1))

    @classmethod
    def constant(cls, x0, window):
        return cls(lambda t: x0, lambda t: 0.0, window)

    @classmethod
    def uniform(cls, x0, v, window):
        '''x(t) = x0 + v t'''
        return cls(lambda t: x0 + v * t, lambda t: v, window)


def _analytic(m, observed):
    return (m.observer.analytic_derivative and observed.analytic_derivative and
            SMOOTHNESS_RANK[m.observer.smoothness] >= 1 and
            SMOOTHNESS_RANK[observed.smoothness] >= 1)


def radar_trajectory_of(observer, observed, s_window, n=None, ctx=None):
    '''
    Sample the worldline `observed` over its parameter window, radar it
    from `observer` and interpolate.

    When both curves have analytic derivatives the node velocities come
    from dz/ds = alpha'(s) / D Omega(z) and a cubic Hermite spline is
    used; otherwise a monotone cubic (PCHIP) is fitted and differentiated.

    Parameters
    ----------
    observer: spacetime.observers.Observer
        The observer whose radar coordinates are used
    observed: spacetime.observers.Observer
        The worldline being described
    s_window: (float, float)
        Parameter window of `observed`
    n: int
        Number of samples, defaults to RADAR_NODES
    ctx: LightspeedContext

    Raises
    ------
    NoRadarCoordinate
        When `observed` leaves the region `observer` can radar
    NonMonotoneRadarTime
        When the radar times of the samples are not increasing
    '''
    ctx = ctx or LightspeedContext.default()
    n = mss.RADAR_NODES if n is None else int(n)

    if n < 2:
        raise ValueError('radar_trajectory_of needs n >= 2')

    m = observer if isinstance(observer, MWMap) else MWMap(observer)

    s = np.linspace(float(s_window[0]), float(s_window[1]), n)
    event_t, event_x = observed.position(s)
    radar_s, radar_x = m.radar_inverse_components(event_t, event_x)

    t = radar_s / ctx.c

    if np.any(np.diff(t) <= 0):
        index = int(np.argmax(np.diff(t) <= 0))
        raise NonMonotoneRadarTime(
            'Radar time stops increasing at s={} (t={})'.format(s[index + 1],
                                                                t[index + 1]))

    if _analytic(m, observed):
        # split-complex division alpha' / D Omega up to the positive
        # factor |D Omega|^2, which cancels in the velocity
        dt_ds, dx_ds = observed.velocity(s)
        p, q = m.derivative_components(radar_s, radar_x)
        w_t = dt_ds * p - dx_ds * q
        w_x = dx_ds * p - dt_ds * q

        if np.any(w_t <= 0):
            raise NonMonotoneRadarTime('Radar time is not increasing along the worldline')

        spline = sci.CubicHermiteSpline(t, radar_x, ctx.c * w_x / w_t)
    else:
        spline = sci.PchipInterpolator(t, radar_x)

    velocity = spline.derivative()

    logger.debug('radar trajectory of %r seen by %r on t in [%s, %s]',
                 observed, m.observer, t[0], t[-1])

    return RadarTrajectory(
        x=lambda tt: float(spline(tt)),
        v=lambda tt: float(velocity(tt)),
        window=(float(t[0]), float(t[-1])))
