'''
Build observers, plane maps and the grid named by a scenario file.

Everything a scenario refers to is constructed while loading, so a bad
name, a reference cycle or an out of range parameter is reported before
any computation starts.
'''
import json
import logging

from dataclasses import dataclass, field
from typing import Dict, Optional

from jsonschema import validate as json_validate
from jsonschema.exceptions import ValidationError as JsonValidationError

import fieldcheck.planemaps as fpm
import mwsync.settings as mss
import scenarios.json_schemas as sjs
import spacetime.observers as sto

from fieldcheck.grids import GridSpec
from fieldcheck.wave_cauchy import from_observer
from mwsync.exceptions import MwsyncException
from scenarios.exceptions import ScenarioInvalid
from spacetime.mw import MWMap
from spacetime.splitc import LightspeedContext, two_velocity

logger = logging.getLogger(__name__)

@dataclass
class Scenario:
    '''
    A loaded scenario. Tolerances missing from the file are None and the
    library calls they are passed to fall back to the settings.
    '''
    ctx: LightspeedContext
    grid: GridSpec
    seed: int
    tolerances: Dict[str, float] = field(default_factory=dict)
    observers: Dict[str, sto.Observer] = field(default_factory=dict)
    maps: Dict[str, fpm.PlaneMap] = field(default_factory=dict)
    path: Optional[str] = None

    def observer(self, name):
        try:
            return self.observers[name]
        except KeyError:
            raise ScenarioInvalid('Unknown observer: {}'.format(name))

    def plane_map(self, name):
        try:
            return self.maps[name]
        except KeyError:
            raise ScenarioInvalid('Unknown map: {}'.format(name))

    def mw_map(self, name):
        '''
        The synchronization map behind a map of kind 'mw'.
        '''
        F = self.plane_map(name)

        if not isinstance(F, fpm.MWPlaneMap):
            raise ScenarioInvalid(
                'Map {} is not a synchronization map (kind mw)'.format(name))

        return F.m

    @property
    def null_band(self):
        return self.tolerances.get('null_band')

    @property
    def root_tol(self):
        return self.tolerances.get('root_tol')

    @property
    def quad_tol(self):
        return self.tolerances.get('quad_tol')

    @property
    def fd_step(self):
        return self.tolerances.get('fd_step')

    @property
    def residual_max(self):
        return self.tolerances.get('residual_max')


class _Builder:
    '''
    Resolves names depth first, remembering what is being built to catch
    cycles such as a sum containing itself.
    '''
    def __init__(self, specs, build, what):
        self.specs = specs
        self.build = build
        self.what = what
        self.built = {}
        self.pending = []

    def get(self, name):
        if name in self.built:
            return self.built[name]
        if name not in self.specs:
            raise ScenarioInvalid('Unknown {}: {}'.format(self.what, name))
        if name in self.pending:
            raise ScenarioInvalid('Reference cycle: {}'.format(
                ' -> '.join(self.pending + [name])))

        self.pending.append(name)
        try:
            self.built[name] = self.build(self.specs[name])
        except ScenarioInvalid:
            raise
        except (MwsyncException, ValueError) as e:
            raise ScenarioInvalid('{} {}: {}'.format(self.what.capitalize(), name, e))
        finally:
            self.pending.pop()

        return self.built[name]

    def all(self):
        return {name: self.get(name) for name in sorted(self.specs)}


def _observer_factory(ctx, observers):
    def build(spec):
        kind = spec['kind']

        if kind == 'inertial':
            return sto.Inertial(spec.get('v', 0.0), spec.get('base', (0.0, 0.0)), ctx)
        if kind == 'rindler':
            return sto.Rindler(spec['a'], ctx)
        if kind == 'perturbed_inertial':
            return sto.PerturbedInertial(spec.get('amplitude', 0.3),
                                         spec.get('omega', 1.0))
        if kind == 'oscillation':
            return sto.Oscillation(spec.get('amplitude', 0.0), spec.get('omega', 1.0))
        if kind == 'piecewise_linear':
            return sto.PiecewiseLinear(spec['vertices'])
        if kind == 'sum':
            terms = [observers.get(name) for name in spec['terms']]
            total = terms[0]
            for term in terms[1:]:
                total = total + term
            return total
        if kind == 'boosted':
            return sto.Boosted(observers.get(spec['observer']),
                               two_velocity(spec['v'], ctx))
        if kind == 'translated':
            return sto.Translated(observers.get(spec['observer']), spec['offset'])

        raise ScenarioInvalid('Unknown observer kind: {}'.format(kind))

    return build


def _map_factory(ctx, observers, maps, tolerances):
    def mw(name):
        return MWMap(observers.get(name), tolerances.get('root_tol'),
                     fd_step=tolerances.get('fd_step'))

    def build(spec):
        kind = spec['kind']

        if kind == 'mw':
            return fpm.MWPlaneMap(mw(spec['observer']))
        if kind == 'radar_inverse':
            return fpm.RadarInverseMap(mw(spec['observer']))
        if kind == 'conj':
            return fpm.ConjPrecomposed(maps.get(spec['map']))
        if kind == 'post_conj':
            return fpm.PostConj(maps.get(spec['map']))
        if kind == 'sum':
            return fpm.SumMap.of([maps.get(name) for name in spec['terms']])
        if kind == 'affine_lorentz':
            return fpm.AffineLorentz(v=spec.get('v', 0.0),
                                     scale=spec.get('scale', 1.0),
                                     offset=spec.get('offset', (0.0, 0.0)),
                                     ctx=ctx)
        if kind == 'linear':
            return fpm.LinearMap(spec['matrix'])
        if kind == 'power':
            return fpm.PowerMap(spec['n'])
        if kind == 'identity':
            return fpm.identity()
        if kind == 'wave_cauchy':
            return from_observer(observers.get(spec['observer']), spec.get('sign', 1))

        raise ScenarioInvalid('Unknown map kind: {}'.format(kind))

    return build


def _grid(spec, override):
    try:
        if override is not None:
            return GridSpec.from_list(override)

        return GridSpec(spec['t_min'], spec['t_max'], spec['x_min'], spec['x_max'],
                        spec.get('n_t', 21), spec.get('n_x', 21), spec.get('h'))
    except MwsyncException as e:
        raise ScenarioInvalid('Grid: {}'.format(e))


def build_scenario(body, seed=None, grid=None, path=None):
    '''
    Validate a parsed scenario and construct everything it names.

    Parameters
    ----------
    body: dict
        The parsed scenario
    seed: int
        Overrides the scenario's seed
    grid: [t_min, t_max, x_min, x_max, n_t, n_x]
        Overrides the scenario's grid

    Returns
    -------
    scenario: Scenario
    '''
    try:
        json_validate(instance=body, schema=sjs.scenario_schema)
    except JsonValidationError as e:
        location = '/'.join(str(p) for p in e.absolute_path) or '<root>'
        raise ScenarioInvalid('Invalid scenario at {}: {}'.format(location, e.message))

    try:
        ctx = LightspeedContext(body.get('c', mss.LIGHTSPEED))
    except MwsyncException as e:
        raise ScenarioInvalid(str(e))

    tolerances = dict(body.get('tolerances', {}))

    observers = _Builder(body.get('observers', {}), None, 'observer')
    observers.build = _observer_factory(ctx, observers)

    maps = _Builder(body.get('maps', {}), None, 'map')
    maps.build = _map_factory(ctx, observers, maps, tolerances)

    scenario = Scenario(
        ctx=ctx,
        grid=_grid(body['grid'], grid),
        seed=int(seed if seed is not None else body.get('seed', mss.DEFAULT_SEED)),
        tolerances=tolerances,
        observers=observers.all(),
        maps=maps.all(),
        path=path)

    logger.debug('scenario %s: %d observers, %d maps, grid %s',
                 path, len(scenario.observers), len(scenario.maps), scenario.grid)

    return scenario


def load_scenario(path, seed=None, grid=None):
    try:
        with open(path, 'r') as f:
            body = json.load(f)
    except IOError as e:
        raise ScenarioInvalid('Could not read scenario {}: {}'.format(path, e))
    except ValueError as e:
        raise ScenarioInvalid('Scenario {} is not valid JSON: {}'.format(path, e))

    return build_scenario(body, seed, grid, path)
