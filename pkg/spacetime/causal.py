'''
Causal and chronological order, cone regions and lightray geometry.

x < y (causal) when y - x is a future directed null vector and x << y
(chronological) when y - x is a future directed timelike vector. Null
membership is decided inside a relative tolerance band so that images of
lightrays computed in floating point still classify as null.
'''
import enum
import logging

from dataclasses import dataclass

import numpy as np

import mwsync.settings as mss

from spacetime.exceptions import SameOrientation
from spacetime.splitc import SplitComplex, as_split_complex

logger = logging.getLogger(__name__)


class CausalRelation(enum.Enum):
    EQUAL = 'equal'
    NULL_FUTURE = 'null_future'
    NULL_PAST = 'null_past'
    CHRON_FUTURE = 'chron_future'
    CHRON_PAST = 'chron_past'
    SPACELIKE = 'spacelike'


class Region(enum.Enum):
    CN_PLUS = 'CN+'
    CN_MINUS = 'CN-'
    CT_PLUS = 'CT+'
    CT_MINUS = 'CT-'
    CN = 'CN'
    CT = 'CT'


REGION_RELATIONS = {
    Region.CN_PLUS: {CausalRelation.NULL_FUTURE},
    Region.CN_MINUS: {CausalRelation.NULL_PAST},
    Region.CT_PLUS: {CausalRelation.CHRON_FUTURE},
    Region.CT_MINUS: {CausalRelation.CHRON_PAST},
    Region.CN: {CausalRelation.NULL_FUTURE, CausalRelation.NULL_PAST},
    Region.CT: {CausalRelation.CHRON_FUTURE, CausalRelation.CHRON_PAST},
}


class Orientation(enum.Enum):
    RIGHT_MOVING = 'right'
    LEFT_MOVING = 'left'


@dataclass(frozen=True)
class LightRay:
    '''
    A full null line. Right moving rays conserve t - x, left moving rays
    conserve t + x; `level` is that conserved value.
    '''
    orientation: Orientation
    level: float

    def __post_init__(self):
        if not np.isfinite(self.level):
            raise ValueError('Lightray level must be finite')

        object.__setattr__(self, 'level', float(self.level))


def null_band(dt, dx, tol=None):
    '''
    Half-width of the null band for a displacement (dt, dx). Works on
    scalars and numpy arrays alike.
    '''
    if tol is None:
        tol = mss.NULL_BAND

    return tol * (1.0 + dt * dt + dx * dx)


def classify(x, y, tol=None):
    '''
    Relation of the event y with respect to the event x.

    Parameters
    ----------
    x: SplitComplex
        The reference event
    y: SplitComplex
        The event being classified
    tol: float
        Relative null band, defaults to NULL_BAND

    Returns
    -------
    relation: CausalRelation
    '''
    if tol is not None and tol < 0:
        raise ValueError('tol must be >= 0')

    d = as_split_complex(y) - as_split_complex(x)

    if d.t == 0.0 and d.x == 0.0:
        return CausalRelation.EQUAL

    interval = d.norm_sq()
    band = null_band(d.t, d.x, tol)

    if abs(interval) <= band:
        if d.t > 0:
            return CausalRelation.NULL_FUTURE
        if d.t < 0:
            return CausalRelation.NULL_PAST
        return CausalRelation.SPACELIKE

    if interval > band:
        # timelike with a nonzero time component
        if d.t > 0:
            return CausalRelation.CHRON_FUTURE
        return CausalRelation.CHRON_PAST

    return CausalRelation.SPACELIKE


def chronological_mask(dt, dx, tol=None):
    '''
    Vectorized x << y test on displacement component arrays.
    '''
    return (dt * dt - dx * dx > null_band(dt, dx, tol)) & (dt > 0)


def chron_precedes(x, y, tol=None):
    return classify(x, y, tol) is CausalRelation.CHRON_FUTURE


def null_precedes(x, y, tol=None):
    return classify(x, y, tol) is CausalRelation.NULL_FUTURE


def in_region(p, q, region, tol=None):
    '''
    Whether q lies in the named causal or chronological region of p.
    '''
    region = Region(region)

    return classify(p, q, tol) in REGION_RELATIONS[region]


def rays_through(p):
    '''
    The left and right moving lightrays whose intersection is {p}.

    Returns
    -------
    rays: (LightRay, LightRay)
        The left moving ray (level t + x) and the right moving ray
        (level t - x)
    '''
    p = as_split_complex(p)

    return (
        LightRay(Orientation.LEFT_MOVING, p.t + p.x),
        LightRay(Orientation.RIGHT_MOVING, p.t - p.x),
    )


def ray_intersect(l, r):
    '''
    The unique event on a left and a right moving lightray. Arguments
    are accepted in either order.
    '''
    if l.orientation is r.orientation:
        raise SameOrientation(
            'Both rays are {} moving'.format(l.orientation.value))

    if l.orientation is Orientation.RIGHT_MOVING:
        l, r = r, l

    return SplitComplex(
        (l.level + r.level) / 2.0,
        (l.level - r.level) / 2.0)


def time_axis_hit(ray):
    '''
    Parameter s where the ray meets the time axis x = 0. Both null
    coordinates reduce to t there.
    '''
    return ray.level
