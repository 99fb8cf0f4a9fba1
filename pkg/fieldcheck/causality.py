'''
Randomized checks of chronological order preservation.

Chronology (an open condition) is tested instead of the null relation;
a map is a causal automorphism exactly when it and its inverse preserve
<<. The inverse direction is tested without inverting the map: whenever
F(z1) << F(z2) the inputs must satisfy z1 << z2.
'''
import enum
import logging

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

import mwsync.settings as mss

from fieldcheck.exceptions import DegenerateSplit, EvaluationFailure
from fieldcheck.grids import GridSpec
from fieldcheck.planemaps import (
    AffineLorentz,
    ConjPrecomposed,
    MWPlaneMap,
    RadarInverseMap,
)
from fieldcheck.residuals import evaluate, holomorphy_residual, wave_residual
from mwsync.utils import spawn_generators
from spacetime.causal import chronological_mask, classify
from spacetime.exceptions import NoRadarCoordinate
from spacetime.observers import Inertial, LipStatus, lip_status, verify_observer
from spacetime.reports import ResidualReport, WitnessDirection, WitnessPair
from spacetime.splitc import SplitComplex

logger = logging.getLogger(__name__)

# batches drawn before giving up on collecting enough margin pairs
MAX_BATCHES = 1000


class MapOrientation(enum.Enum):
    PRESERVING = 'preserving'
    REVERSING = 'reversing'
    NEITHER = 'neither'


@dataclass(frozen=True)
class OrientationReport:
    orientation: MapOrientation
    spread_minus: float
    spread_plus: float


@dataclass(frozen=True)
class SuiteItem:
    name: str
    passed: bool
    detail: str = ''


@dataclass(frozen=True)
class SuiteReport:
    applicable: bool
    lip: object
    items: List[SuiteItem] = field(default_factory=list)

    @property
    def passed(self):
        return self.applicable and all(item.passed for item in self.items)


@dataclass(frozen=True)
class LowReport:
    wave: ResidualReport
    holo: ResidualReport
    antiholo: ResidualReport
    axis_ok: bool
    witness: Optional[WitnessPair]
    chronology: Optional[ResidualReport] = None

    @property
    def certified(self):
        '''
        A wave solution over the summed observer that is neither
        holomorphic nor antiholomorphic and breaks chronology.
        '''
        return (self.wave.passed and not self.holo.passed and
                not self.antiholo.passed and self.axis_ok and
                self.witness is not None)


def _draw_pairs(g, rng, n_pairs, margin, spacelike):
    '''
    Rejection sample n_pairs pairs from the grid window whose separation
    is chronological (or spacelike) by at least `margin`.
    '''
    collected = []
    count = 0

    for _ in range(MAX_BATCHES):
        t1, x1 = g.random_points(rng, n_pairs)
        t2, x2 = g.random_points(rng, n_pairs)
        dt, dx = t2 - t1, x2 - x1
        interval = dt * dt - dx * dx

        if spacelike:
            keep = -interval >= margin * margin
        else:
            keep = (interval >= margin * margin) & (dt > 0)

        batch = np.stack([t1, x1, t2, x2])[:, keep]
        collected.append(batch)
        count += batch.shape[1]

        if count >= n_pairs:
            break

    pairs = np.concatenate(collected, axis=1)[:, :n_pairs]

    if pairs.shape[1] < n_pairs:
        logger.warning('only %d of %d margin pairs found', pairs.shape[1], n_pairs)

    return pairs


def _image_pairs(F, pairs):
    t1, x1, t2, x2 = pairs
    image_t1, image_x1 = evaluate(F, t1, x1)
    image_t2, image_x2 = evaluate(F, t2, x2)

    return image_t1, image_x1, image_t2, image_x2


def _witness(pairs, images, index, direction, seed, null_band=None):
    t1, x1, t2, x2 = pairs[:, index]
    z1, z2 = SplitComplex(t1, x1), SplitComplex(t2, x2)
    image1 = SplitComplex(images[0][index], images[1][index])
    image2 = SplitComplex(images[2][index], images[3][index])

    return WitnessPair(
        z1=z1, z2=z2,
        relation_in=classify(z1, z2, null_band),
        relation_out=classify(image1, image2, null_band),
        direction=direction,
        image1=image1, image2=image2,
        seed=seed)


def chronology_check(F, g, n_pairs, seed=None, reflect=True, null_band=None):
    '''
    Search for a pair of events whose chronological order F breaks.

    Parameters
    ----------
    F: fieldcheck.planemaps.PlaneMap
    g: GridSpec
        Pairs are drawn from this window
    n_pairs: int
        Number of chronological pairs (and, with `reflect`, of spacelike
        pairs) to test
    seed: int
        Defaults to DEFAULT_SEED
    reflect: bool
        Also test that F(z1) << F(z2) only happens for z1 << z2
    null_band: float
        Relative width of the null band, defaults to NULL_BAND

    Returns
    -------
    The first WitnessPair found, otherwise a ResidualReport whose
    min_margin is the smallest output interval of the chronological pairs
    '''
    if n_pairs < 1:
        raise ValueError('n_pairs must be >= 1')

    seed = mss.DEFAULT_SEED if seed is None else seed
    forward_rng, reflected_rng = spawn_generators(seed, 2)
    margin = mss.WITNESS_MARGIN_FRACTION * g.scale

    pairs = _draw_pairs(g, forward_rng, n_pairs, margin, spacelike=False)
    images = _image_pairs(F, pairs)
    out_dt, out_dx = images[2] - images[0], images[3] - images[1]
    preserved = chronological_mask(out_dt, out_dx, null_band)

    if not np.all(preserved):
        return _witness(pairs, images, int(np.argmin(preserved)),
                        WitnessDirection.FORWARD, seed, null_band)

    if reflect:
        spacelike = _draw_pairs(g, reflected_rng, n_pairs, margin, spacelike=True)
        reflected_images = _image_pairs(F, spacelike)
        created = chronological_mask(
            reflected_images[2] - reflected_images[0],
            reflected_images[3] - reflected_images[1], null_band)

        if np.any(created):
            return _witness(spacelike, reflected_images, int(np.argmax(created)),
                            WitnessDirection.REFLECTED, seed, null_band)

    in_dt, in_dx = pairs[2] - pairs[0], pairs[3] - pairs[1]

    return ResidualReport(
        max_abs=0.0,
        mean_abs=0.0,
        min_margin=float(np.min(out_dt * out_dt - out_dx * out_dx)),
        min_input_margin=float(np.min(in_dt * in_dt - in_dx * in_dx)),
        n_samples=pairs.shape[1] * (2 if reflect else 1),
        seed=seed)


def orientation_of(F, event, span, n=100):
    '''
    Follow the right moving lightray through `event` and look at which
    null coordinate of its image stays constant.
    '''
    if not span > 0:
        raise ValueError('span must be positive')

    tau = np.linspace(-span, span, n)
    image_t, image_x = evaluate(F, event.t + tau, event.x + tau)

    tol = mss.ORIENTATION_SPREAD_TOL * (
        1.0 + float(np.max(np.abs(image_t) + np.abs(image_x))))
    spread_minus = float(np.ptp(image_t - image_x))
    spread_plus = float(np.ptp(image_t + image_x))

    if spread_minus <= tol:
        orientation = MapOrientation.PRESERVING
    elif spread_plus <= tol:
        orientation = MapOrientation.REVERSING
    else:
        orientation = MapOrientation.NEITHER

    return OrientationReport(orientation, spread_minus, spread_plus)


def _image_window(F, g):
    t, x = g.nodes()
    image_t, image_x = evaluate(F, t, x)

    return GridSpec(float(image_t.min()), float(image_t.max()),
                    float(image_x.min()), float(image_x.max()),
                    g.n_t, g.n_x)


def _chronology_item(name, F, g, n_pairs, seed, null_band=None):
    try:
        result = chronology_check(F, g, n_pairs, seed, null_band=null_band)
    except EvaluationFailure as error:
        return SuiteItem(name, False, 'lip window violation: {}'.format(error))

    if isinstance(result, WitnessPair):
        return SuiteItem(name, False, 'witness {}'.format(dict(result.as_dict())))

    return SuiteItem(name, True, 'min_margin {}'.format(result.min_margin))


def automorphism_suite(m, g, n_pairs, seed=None, null_band=None):
    '''
    Check that the synchronization map of an observer with the lightray
    intersecting property is a causal automorphism.

    Returns
    -------
    report: SuiteReport
        `applicable` is False (and `items` empty) when the lightray
        intersecting property isn't verified for the observer
    '''
    observer = m.observer
    lip = lip_status(observer)

    if lip.status is not LipStatus.VERIFIED:
        logger.info('automorphism suite not applicable to %r: %s', observer,
                    lip.status.value)
        return SuiteReport(applicable=False, lip=lip)

    F = MWPlaneMap(m)
    items = [_chronology_item('chronology_forward', F, g, n_pairs, seed, null_band)]

    try:
        image = _image_window(F, g)
    except EvaluationFailure as error:
        items.append(SuiteItem('chronology_inverse', False, str(error)))
    else:
        items.append(_chronology_item('chronology_inverse', RadarInverseMap(m),
                                      image, n_pairs, seed, null_band))

    t, x = g.nodes()
    size = 1.0 + float(np.max(np.abs(t) + np.abs(x)))

    try:
        image_t, image_x = evaluate(F, t, x)
        back_t, back_x = m.radar_inverse_components(image_t, image_x)
        round_trip = float(np.max(np.hypot(back_t - t, back_x - x)))
        items.append(SuiteItem('radar_round_trip', round_trip <= 1e-9 * size,
                               'max error {}'.format(round_trip)))
    except EvaluationFailure as error:
        items.append(SuiteItem('radar_round_trip', False, str(error)))
    except NoRadarCoordinate as error:
        items.append(SuiteItem('radar_round_trip', False,
                               'lip window violation: {}'.format(error)))

    event = SplitComplex((g.t_min + g.t_max) / 2, (g.x_min + g.x_max) / 2)
    orientation = orientation_of(F, event, g.scale / 2)
    items.append(SuiteItem(
        'orientation',
        orientation.orientation is MapOrientation.PRESERVING,
        orientation.orientation.value))

    s = np.linspace(g.t_min, g.t_max, g.n_t)
    axis_t, axis_x = F.associated_curve(s)
    curve_t, curve_x = observer.position(s)
    axis_error = float(np.max(np.hypot(axis_t - curve_t, axis_x - curve_x)))
    items.append(SuiteItem('axis_restriction', axis_error <= 1e-12 * size,
                           'max error {}'.format(axis_error)))

    if isinstance(observer, Inertial):
        boost = AffineLorentz(u=observer.u, offset=observer.base)
        boost_t, boost_x = boost.eval_components(t, x)
        image_t, image_x = evaluate(F, t, x)
        boost_error = float(np.max(np.hypot(boost_t - image_t, boost_x - image_x)))
        items.append(SuiteItem('affine_lorentz', boost_error <= 1e-12 * size,
                               'max error {}'.format(boost_error)))

    for item in items:
        logger.debug('%s: %s (%s)', item.name, item.passed, item.detail)

    return SuiteReport(applicable=True, lip=lip, items=items)


def low_counterexample(gamma1, gamma2, g, seed=None, n_pairs=100000, null_band=None):
    '''
    Build F = Omega_gamma1 + Omega_gamma2 o conj, a solution of the wave
    equation whose associated curve is the observer gamma1 + gamma2, and
    certify that it is not a causal automorphism.

    Raises
    ------
    DegenerateSplit
        When the conjugated contribution is constant on the grid, F is then
        a plain synchronization map and no witness exists
    NotTimelike
        When gamma1 + gamma2 is not an observer on the grid's time range
    '''
    conjugated = ConjPrecomposed(MWPlaneMap(gamma2))
    F = MWPlaneMap(gamma1) + conjugated

    t, x = g.nodes()
    part_t, part_x = evaluate(conjugated, t, x)
    size = 1.0 + float(np.max(np.abs(part_t) + np.abs(part_x)))

    if max(np.ptp(part_t), np.ptp(part_x)) <= 1e-12 * size:
        raise DegenerateSplit(
            '{!r} is constant on the grid'.format(conjugated))

    summed = gamma1 + gamma2
    verify_observer(summed, (g.t_min, g.t_max), max(g.n_t, 3), seed)

    s = np.linspace(g.t_min, g.t_max, g.n_t)
    axis_t, axis_x = F.associated_curve(s)
    curve_t, curve_x = summed.position(s)
    axis_error = float(np.max(np.hypot(axis_t - curve_t, axis_x - curve_x)))

    result = chronology_check(F, g, n_pairs, seed, null_band=null_band)
    witness = result if isinstance(result, WitnessPair) else None

    report = LowReport(
        wave=wave_residual(F, g),
        holo=holomorphy_residual(F, g),
        antiholo=holomorphy_residual(F, g, anti=True),
        axis_ok=axis_error <= 1e-12 * size,
        witness=witness,
        chronology=None if witness else result)

    logger.info('counterexample %r: certified=%s', F, report.certified)

    return report
