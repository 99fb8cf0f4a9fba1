'''
Grid based differential checks of plane maps.

Every check runs its central difference stencil twice, at the grid step h
and at h/2, and compares the residuals against an estimate of the
floating point floor of the stencil:

* both below the floor: EXACT (the stencil is exact on the field, e.g.
  on traveling waves f(t+x) + g(t-x));
* otherwise the ratio of the two maxima gives a convergence order, and a
  residual is accepted as truncation error only when that order is close
  to 2.
'''
import logging
import math

import numpy as np

import mwsync.settings as mss

from fieldcheck.exceptions import EvaluationFailure
from mwsync.exceptions import MwsyncException
from spacetime.exceptions import DegenerateFactor
from spacetime.reports import ResidualReport, Verdict
from spacetime.splitc import SplitComplex

logger = logging.getLogger(__name__)

EPS = np.finfo(float).eps


def evaluate(F, t, x):
    '''
    Evaluate a plane map on component arrays and make sure every output
    is finite.

    Raises
    ------
    EvaluationFailure
        Carrying the first event (in grid order) that failed
    '''
    try:
        with np.errstate(all='ignore'):
            image_t, image_x = F.eval_components(t, x)
    except MwsyncException as error:
        raise EvaluationFailure(
            'Evaluating {!r} failed: {}'.format(F, error),
            location=_first_failure(F, t, x))

    finite = np.isfinite(image_t) & np.isfinite(image_x)

    if not np.all(finite):
        index = np.unravel_index(np.argmin(finite), finite.shape)
        location = SplitComplex(t[index], x[index])
        raise EvaluationFailure(
            'Non finite value of {!r} at {}'.format(F, location.as_tuple()),
            location=location)

    return image_t, image_x


def _first_failure(F, t, x):
    for t_node, x_node in zip(np.ravel(t), np.ravel(x)):
        try:
            F.eval_components(np.float64(t_node), np.float64(x_node))
        except MwsyncException:
            return SplitComplex(t_node, x_node)

    return None


def _stencil(F, t, x, h):
    '''
    Values of F at the four neighbours (t +- h, x) and (t, x +- h).
    '''
    return (evaluate(F, t + h, x), evaluate(F, t - h, x),
            evaluate(F, t, x + h), evaluate(F, t, x - h))


def _first_derivatives(stencil, h):
    (tp, tm, xp, xm) = stencil

    d0 = ((tp[0] - tm[0]) / (2 * h), (tp[1] - tm[1]) / (2 * h))
    d1 = ((xp[0] - xm[0]) / (2 * h), (xp[1] - xm[1]) / (2 * h))

    return d0, d1


def _magnitude(stencil, t, x):
    values = max(float(np.max(np.abs(component)))
                 for point in stencil for component in point)
    coordinates = max(float(np.max(np.abs(t))), float(np.max(np.abs(x))))

    return (1.0 + values) * (1.0 + coordinates)


def _floor(magnitude, h, order):
    return mss.ROUNDING_FACTOR * EPS * magnitude / h ** order


def _verdict(first, second, floor_first, floor_second):
    if first <= floor_first and second <= floor_second:
        return Verdict.EXACT, None

    if second == 0:
        return Verdict.CONVERGING, math.inf

    if first == 0:
        # exact at h but not at h/2
        return Verdict.VIOLATED, -math.inf

    order = math.log2(first / second)

    if order >= mss.CONVERGENCE_ORDER - mss.CONVERGENCE_SLACK:
        return Verdict.CONVERGING, order

    return Verdict.VIOLATED, order


def _report(g, sweep, **extra):
    '''
    Run `sweep(t, x, h) -> (residual array, floor)` at h and h/2 and
    summarize.
    '''
    t, x = g.nodes()

    residual, floor = sweep(t, x, g.h)
    residual_half, floor_half = sweep(t, x, g.h / 2)

    index = np.unravel_index(np.argmax(residual), residual.shape)
    max_abs = float(residual[index])
    max_half = float(np.max(residual_half))

    verdict, order = _verdict(max_abs, max_half, floor, floor_half)

    if extra.get('degenerate_nodes'):
        verdict = Verdict.VIOLATED

    logger.debug('residual %s (h/2: %s, floor %s) -> %s', max_abs, max_half,
                 floor, verdict.value)

    return ResidualReport(
        max_abs=max_abs,
        mean_abs=min(float(np.mean(residual)), max_abs),
        location_of_max=SplitComplex(t[index], x[index]),
        convergence_order=order,
        verdict=verdict,
        step=g.h,
        max_abs_half_step=max_half,
        rounding_floor=floor,
        n_samples=residual.size,
        **extra)


def holomorphy_residual(F, g, anti=False):
    '''
    Residual of d0 F = sigma d1 F (or d0 F = -sigma d1 F when `anti`).

    Parameters
    ----------
    F: fieldcheck.planemaps.PlaneMap
    g: fieldcheck.grids.GridSpec
    anti: bool
        Check antiholomorphy instead

    Returns
    -------
    report: ResidualReport
        Euclidean norm of the residual at every node
    '''
    sign = -1.0 if anti else 1.0

    def sweep(t, x, h):
        stencil = _stencil(F, t, x, h)
        (d0t, d0x), (d1t, d1x) = _first_derivatives(stencil, h)

        # sigma * (a + b sigma) = b + a sigma
        residual = np.hypot(d0t - sign * d1x, d0x - sign * d1t)
        return residual, _floor(_magnitude(stencil, t, x), h, 1)

    return _report(g, sweep)


def wave_residual(F, g):
    '''
    Residual of d0^2 F - d1^2 F. The centre values of the two second
    differences cancel, leaving the four neighbours.
    '''
    def sweep(t, x, h):
        stencil = _stencil(F, t, x, h)
        (tp, tm, xp, xm) = stencil

        box_t = (tp[0] + tm[0] - xp[0] - xm[0]) / (h * h)
        box_x = (tp[1] + tm[1] - xp[1] - xm[1]) / (h * h)

        return np.hypot(box_t, box_x), _floor(_magnitude(stencil, t, x), h, 2)

    return _report(g, sweep)


def conformality_report(F, g):
    '''
    Compare the Gram matrix G_ij = <d_i F, d_j F> of the Jacobian with
    lambda * diag(1, -1), lambda = G_00. Nodes with lambda <= 0 are
    counted as degenerate and fail the report.
    '''
    def gram(t, x, h):
        stencil = _stencil(F, t, x, h)
        (d0t, d0x), (d1t, d1x) = _first_derivatives(stencil, h)

        g00 = d0t * d0t - d0x * d0x
        g01 = d0t * d1t - d0x * d1x
        g11 = d1t * d1t - d1x * d1x

        derivative_size = 1.0 + max(float(np.max(np.abs(d))) for d in (d0t, d0x, d1t, d1x))
        floor = 4 * derivative_size * _floor(_magnitude(stencil, t, x), h, 1)

        return g00, g01, g11, floor

    t, x = g.nodes()
    factor = gram(t, x, g.h)[0]
    degenerate = int(np.count_nonzero(factor <= 0))

    def sweep(t, x, h):
        g00, g01, g11, floor = gram(t, x, h)
        return np.sqrt(2 * g01 * g01 + (g11 + g00) ** 2), floor

    return _report(g, sweep,
                   degenerate_nodes=degenerate,
                   factor_min=float(np.min(factor)),
                   factor_max=float(np.max(factor)))


def log_factor_wave_residual(m, g):
    '''
    Wave residual of the scalar field ln |D Omega|^2 of a synchronization
    map, using the observer's analytic derivative.

    Raises
    ------
    DegenerateFactor
        When the conformal factor is not positive somewhere on the stencil
    '''
    def log_factor(t, x):
        factor = m.conformal_factor_components(t, x)

        if np.any(factor <= 0):
            index = np.unravel_index(np.argmin(factor > 0), factor.shape)
            raise DegenerateFactor(
                'Conformal factor {} at ({}, {})'.format(
                    factor[index], t[index], x[index]))

        return np.log(factor)

    def sweep(t, x, h):
        values = [log_factor(t + h, x), log_factor(t - h, x),
                  log_factor(t, x + h), log_factor(t, x - h)]

        residual = np.abs(values[0] + values[1] - values[2] - values[3]) / (h * h)

        size = max(float(np.max(np.abs(v))) for v in values)
        coordinates = max(float(np.max(np.abs(t))), float(np.max(np.abs(x))))
        floor = _floor((1.0 + size) * (1.0 + coordinates), h, 2)

        return residual, floor

    return _report(g, sweep)
