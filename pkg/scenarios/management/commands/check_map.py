import logging

from collections import OrderedDict

import fieldcheck.residuals as fcr

from scenarios.commands import ScenarioCommand, Violation
from scenarios.reports import write_report

logger = logging.getLogger(__name__)

CHECKS = ['holo', 'antiholo', 'wave', 'conformal', 'loggwave']


class Command(ScenarioCommand):
    help = ('Run a residual check (at the grid step h and at h/2) on a map '
            'of the scenario')

    def add_command_arguments(self, parser):
        parser.add_argument('--map', type=str, required=True,
                            help='Name of the map in the scenario')
        parser.add_argument('--check', type=str, required=True, choices=CHECKS)

    def run(self, scenario, /, **options):
        name, check, g = options['map'], options['check'], scenario.grid

        if check == 'loggwave':
            report = fcr.log_factor_wave_residual(scenario.mw_map(name), g)
        else:
            F = scenario.plane_map(name)

            if check == 'holo':
                report = fcr.holomorphy_residual(F, g)
            elif check == 'antiholo':
                report = fcr.holomorphy_residual(F, g, anti=True)
            elif check == 'wave':
                report = fcr.wave_residual(F, g)
            else:
                report = fcr.conformality_report(F, g)

        passed = report.passed
        items = OrderedDict([('map', name), ('check', check)])
        items.update(report.as_dict())

        if scenario.residual_max is not None:
            items['residual_max'] = scenario.residual_max
            passed = passed and report.max_abs <= scenario.residual_max

        items['passed'] = passed
        write_report(items, self.stdout, options['out'])

        if not passed:
            raise Violation('{} check of {} failed: max residual {}'.format(
                check, name, report.max_abs))
