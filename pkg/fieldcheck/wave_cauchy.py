'''
Solutions of the wave equation from Cauchy data on the time axis.

With P the space component and Q the time component of F, the data
P(0, y) = p(y), d_x P(0, y) = +-q'(y) give the d'Alembert solution

    P(x, y) = [p(y+x) + p(y-x)] / 2 +- [q(y+x) - q(y-x)] / 2

and the time component follows from

    Q(x, y) = q(y) +- integral_0^x d_y P(x', y) dx'

which integrates to the same traveling wave combination with p and q
exchanged. sign=+1 reproduces the synchronization map of the curve
(p, q); sign=-1 its composition with conjugation.
'''
import logging

import numpy as np

import mwsync.settings as mss

from fieldcheck.planemaps import PlaneMap
from propertime.quadrature import QuadratureResult, adaptive_simpson

logger = logging.getLogger(__name__)


def _central_difference(f, step):
    def derivative(y):
        y = np.asarray(y, dtype=float)
        h = step * np.maximum(1.0, np.abs(y))
        return (f(y + h) - f(y - h)) / (2 * h)

    return derivative


class WaveCauchyMap(PlaneMap):
    '''
    Parameters
    ----------
    p, q: callable
        Vectorized space and time components of the axis data
    sign: int
        +1 or -1
    dp, dq: callable
        Their derivatives, central differences when missing. Only the
        quadrature path uses them.
    fd_step: float
        Relative step of those central differences, defaults to FD_STEP
    '''
    kind = 'wave_cauchy'

    def __init__(self, p, q, sign=1, dp=None, dq=None, fd_step=None):
        if sign not in (1, -1):
            raise ValueError('sign must be +1 or -1')

        step = mss.FD_STEP if fd_step is None else float(fd_step)
        if not step > 0:
            raise ValueError('fd_step must be positive')

        self.p = p
        self.q = q
        self.sign = sign
        self.dp = dp or _central_difference(p, step)
        self.dq = dq or _central_difference(q, step)

    def eval_components(self, t, x):
        t = np.asarray(t, dtype=float)
        x = np.asarray(x, dtype=float)

        p_plus, p_minus = self.p(t + x), self.p(t - x)
        q_plus, q_minus = self.q(t + x), self.q(t - x)

        space = (p_plus + p_minus) / 2 + self.sign * (q_plus - q_minus) / 2
        time = (q_plus + q_minus) / 2 + self.sign * (p_plus - p_minus) / 2

        return time, space

    def time_component_by_quadrature(self, t, x, tol=None):
        '''
        Q at a single event from the integral of d_y P along the segment
        from (t, 0) to (t, x).

        Returns
        -------
        result: propertime.quadrature.QuadratureResult
        '''
        def dy_space(x_prime):
            return float(
                (self.dp(t + x_prime) + self.dp(t - x_prime)) / 2 +
                self.sign * (self.dq(t + x_prime) - self.dq(t - x_prime)) / 2)

        integral = adaptive_simpson(dy_space, 0.0, x, tol)

        return QuadratureResult(
            float(self.q(np.float64(t))) + self.sign * integral.value,
            integral.abs_error_estimate,
            integral.n_evals)

    def __repr__(self):
        return 'WaveCauchy(sign={:+d})'.format(self.sign)


def build_wave_cauchy(p, q, sign=1, dp=None, dq=None, fd_step=None):
    return WaveCauchyMap(p, q, sign, dp, dq, fd_step)


def from_observer(observer, sign=1):
    '''
    Axis data taken from the components of an observer.
    '''
    def p(y):
        return observer.position(y)[1]

    def q(y):
        return observer.position(y)[0]

    def dp(y):
        return observer.velocity(y)[1]

    def dq(y):
        return observer.velocity(y)[0]

    return WaveCauchyMap(p, q, sign, dp, dq)
