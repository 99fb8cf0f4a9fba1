import logging

from collections import OrderedDict

import mwsync.settings as mss

from fieldcheck.causality import automorphism_suite, chronology_check
from fieldcheck.planemaps import MWPlaneMap
from scenarios.commands import ScenarioCommand, Violation
from scenarios.reports import prefixed, write_report
from spacetime.reports import WitnessPair

logger = logging.getLogger(__name__)


class Command(ScenarioCommand):
    help = ('Check that a map of the scenario preserves chronological order. '
            'Synchronization maps of observers with the lightray intersecting '
            'property get the full automorphism suite')

    def add_command_arguments(self, parser):
        parser.add_argument('--map', type=str, required=True,
                            help='Name of the map in the scenario')
        parser.add_argument('--pairs', type=int, default=None,
                            help='Number of random pairs per direction')

    def run(self, scenario, /, **options):
        name = options['map']
        F = scenario.plane_map(name)
        pairs = options['pairs'] or mss.DEFAULT_PAIRS

        items = OrderedDict([('map', name), ('seed', scenario.seed), ('pairs', pairs)])

        if isinstance(F, MWPlaneMap):
            suite = automorphism_suite(F.m, scenario.grid, pairs, scenario.seed,
                                       null_band=scenario.null_band)
            items['lip_status'] = suite.lip.status

            if suite.applicable:
                for item in suite.items:
                    items[item.name] = 'pass' if item.passed else 'fail'
                    items[item.name + '_detail'] = item.detail
                items['passed'] = suite.passed
                write_report(items, self.stdout, options['out'])

                if not suite.passed:
                    failed = [item.name for item in suite.items if not item.passed]
                    raise Violation('Automorphism suite failed: {}'.format(
                        ', '.join(failed)))
                return

            # not an automorphism of the plane; still check order on the grid
            items['suite'] = 'not_applicable'
            if suite.lip.reason:
                items['lip_reason'] = suite.lip.reason

        result = chronology_check(F, scenario.grid, pairs, scenario.seed,
                                  null_band=scenario.null_band)

        if isinstance(result, WitnessPair):
            items.update(prefixed('witness', result.as_dict()))
            items['passed'] = False
            write_report(items, self.stdout, options['out'])
            raise Violation('{} breaks chronological order ({} witness)'.format(
                name, result.direction.value))

        items.update(prefixed('chronology', result.as_dict()))
        items['passed'] = True
        write_report(items, self.stdout, options['out'])
