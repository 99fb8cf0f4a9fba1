'''
Result records shared by the observer checks, the field checks and the
command line reports.
'''
import enum

from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional

from spacetime.causal import CausalRelation
from spacetime.splitc import SplitComplex


class Verdict(enum.Enum):
    # below the floating point floor at both steps
    EXACT = 'exact'
    # shrinks at the expected order when the step halves
    CONVERGING = 'converging'
    VIOLATED = 'violated'


class WitnessDirection(enum.Enum):
    # z1 << z2 but not F(z1) << F(z2)
    FORWARD = 'forward'
    # F(z1) << F(z2) but z1, z2 not causally ordered
    REFLECTED = 'reflected'


@dataclass(frozen=True)
class ResidualReport:
    max_abs: float
    mean_abs: float
    location_of_max: Optional[SplitComplex] = None
    convergence_order: Optional[float] = None
    verdict: Optional[Verdict] = None
    step: Optional[float] = None
    max_abs_half_step: Optional[float] = None
    rounding_floor: Optional[float] = None
    min_margin: Optional[float] = None
    min_input_margin: Optional[float] = None
    n_samples: int = 0
    seed: Optional[int] = None
    degenerate_nodes: int = 0
    factor_min: Optional[float] = None
    factor_max: Optional[float] = None

    def __post_init__(self):
        if not (self.max_abs >= self.mean_abs >= 0):
            raise ValueError(
                'Expected max_abs >= mean_abs >= 0, got {} and {}'.format(
                    self.max_abs, self.mean_abs))

    @property
    def passed(self):
        return self.verdict is not Verdict.VIOLATED

    def as_dict(self):
        '''
        Ordered key/value view used by the plain text reports. Unset
        optional fields are left out.
        '''
        items = OrderedDict()
        items['max_abs'] = self.max_abs
        items['mean_abs'] = self.mean_abs

        if self.location_of_max is not None:
            items['location_of_max_t'] = self.location_of_max.t
            items['location_of_max_x'] = self.location_of_max.x

        optional = [
            ('max_abs_half_step', self.max_abs_half_step),
            ('convergence_order', self.convergence_order),
            ('step', self.step),
            ('rounding_floor', self.rounding_floor),
            ('min_margin', self.min_margin),
            ('min_input_margin', self.min_input_margin),
            ('factor_min', self.factor_min),
            ('factor_max', self.factor_max),
            ('seed', self.seed),
        ]
        for key, value in optional:
            if value is not None:
                items[key] = value

        if self.n_samples:
            items['n_samples'] = self.n_samples
        if self.degenerate_nodes:
            items['degenerate_nodes'] = self.degenerate_nodes
        if self.verdict is not None:
            items['verdict'] = self.verdict.value

        return items


@dataclass(frozen=True)
class WitnessPair:
    '''
    A concrete pair of events showing that a map (or its inverse) does
    not preserve chronological order.
    '''
    z1: SplitComplex
    z2: SplitComplex
    relation_in: CausalRelation
    relation_out: CausalRelation
    direction: WitnessDirection = WitnessDirection.FORWARD
    image1: Optional[SplitComplex] = None
    image2: Optional[SplitComplex] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.direction is WitnessDirection.FORWARD:
            valid = (self.relation_in is CausalRelation.CHRON_FUTURE and
                     self.relation_out is not CausalRelation.CHRON_FUTURE)
        else:
            valid = (self.relation_out is CausalRelation.CHRON_FUTURE and
                     self.relation_in not in (CausalRelation.CHRON_FUTURE,
                                              CausalRelation.NULL_FUTURE))
        if not valid:
            raise ValueError(
                'Not a violation: {} -> {} ({})'.format(
                    self.relation_in.value, self.relation_out.value,
                    self.direction.value))

    def as_dict(self):
        items = OrderedDict()
        items['direction'] = self.direction.value
        items['z1_t'] = self.z1.t
        items['z1_x'] = self.z1.x
        items['z2_t'] = self.z2.t
        items['z2_x'] = self.z2.x
        items['relation_in'] = self.relation_in.value
        items['relation_out'] = self.relation_out.value

        if self.image1 is not None:
            items['image1_t'] = self.image1.t
            items['image1_x'] = self.image1.x
        if self.image2 is not None:
            items['image2_t'] = self.image2.t
            items['image2_x'] = self.image2.x
        if self.seed is not None:
            items['seed'] = self.seed

        return items
