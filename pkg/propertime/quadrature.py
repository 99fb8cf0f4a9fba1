import logging

from dataclasses import dataclass

import mwsync.settings as mss

from propertime.exceptions import QuadratureDidNotConverge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    n_evals: int


def _simpson(fa, fm, fb, width):
    return width * (fa + 4 * fm + fb) / 6


def adaptive_simpson(f, a, b, tol=None, max_depth=None, max_intervals=None):
    '''
    Integrate a scalar function with adaptive Simpson quadrature.

    An interval is accepted when its two half-interval estimates agree
    with the whole-interval one within 15 * tol; each half gets half of
    the parent's tolerance. Accepted values carry the Richardson
    correction (S2 - S1) / 15.

    Parameters
    ----------
    f: callable
        float -> float
    a, b: float
        Integration limits, b < a integrates backwards
    tol: float
        Absolute tolerance, defaults to QUAD_TOL
    max_depth: int
        Deepest allowed bisection, defaults to QUAD_MAX_DEPTH
    max_intervals: int
        Cap on the number of subdivided intervals, defaults to
        QUAD_MAX_INTERVALS

    Returns
    -------
    result: QuadratureResult

    Raises
    ------
    QuadratureDidNotConverge
        When either cap is hit before the tolerance is met
    '''
    tol = mss.QUAD_TOL if tol is None else float(tol)
    max_depth = mss.QUAD_MAX_DEPTH if max_depth is None else max_depth
    max_intervals = mss.QUAD_MAX_INTERVALS if max_intervals is None else max_intervals

    if not tol > 0:
        raise ValueError('tol must be positive')

    if a == b:
        return QuadratureResult(0.0, 0.0, 0)
    if b < a:
        result = adaptive_simpson(f, b, a, tol, max_depth, max_intervals)
        return QuadratureResult(-result.value, result.abs_error_estimate,
                                result.n_evals)

    fa, fb, fm = f(a), f(b), f((a + b) / 2)
    n_evals = 3

    stack = [(a, b, fa, fm, fb, _simpson(fa, fm, fb, b - a), tol, 0)]
    total = 0.0
    error = 0.0
    intervals = 0

    while stack:
        left, right, f_left, f_mid, f_right, whole, local_tol, depth = stack.pop()
        mid = (left + right) / 2

        f_left_mid = f((left + mid) / 2)
        f_right_mid = f((mid + right) / 2)
        n_evals += 2

        left_half = _simpson(f_left, f_left_mid, f_mid, mid - left)
        right_half = _simpson(f_mid, f_right_mid, f_right, right - mid)
        delta = left_half + right_half - whole

        if abs(delta) <= 15 * local_tol:
            total += left_half + right_half + delta / 15
            error += abs(delta) / 15
            continue

        intervals += 1
        if depth >= max_depth or intervals > max_intervals:
            raise QuadratureDidNotConverge(
                'No convergence near [{}, {}] after {} subdivisions'.format(
                    left, right, intervals))

        stack.append((mid, right, f_mid, f_right_mid, f_right, right_half,
                      local_tol / 2, depth + 1))
        stack.append((left, mid, f_left, f_left_mid, f_mid, left_half,
                      local_tol / 2, depth + 1))

    return QuadratureResult(total, error, n_evals)
