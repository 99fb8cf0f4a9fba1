import logging

from collections import OrderedDict

import mwsync.settings as mss

from fieldcheck.causality import low_counterexample
from scenarios.commands import ScenarioCommand, Violation
from scenarios.reports import prefixed, write_report

logger = logging.getLogger(__name__)


class Command(ScenarioCommand):
    help = ('Check that the wave solution Omega_first + Omega_second o conj is '
            'not a causal automorphism')

    def add_command_arguments(self, parser):
        parser.add_argument('--first', type=str, required=True,
                            help='Observer whose synchronization map is kept')
        parser.add_argument('--second', type=str, required=True,
                            help='Observer whose synchronization map is conjugated')
        parser.add_argument('--pairs', type=int, default=None)

    def run(self, scenario, /, **options):
        first = scenario.observer(options['first'])
        second = scenario.observer(options['second'])
        pairs = options['pairs'] or mss.DEFAULT_PAIRS

        report = low_counterexample(first, second, scenario.grid, scenario.seed, pairs,
                                    null_band=scenario.null_band)

        items = OrderedDict([
            ('first', options['first']),
            ('second', options['second']),
            ('seed', scenario.seed),
            ('pairs', pairs),
        ])
        items['wave_max_abs'] = report.wave.max_abs
        items['wave_verdict'] = report.wave.verdict
        items['holo_max_abs'] = report.holo.max_abs
        items['holo_verdict'] = report.holo.verdict
        items['antiholo_max_abs'] = report.antiholo.max_abs
        items['antiholo_verdict'] = report.antiholo.verdict
        items['axis_restriction'] = report.axis_ok

        if report.witness is not None:
            items.update(prefixed('witness', report.witness.as_dict()))
        else:
            items['witness'] = 'none'
            items.update(prefixed('chronology', report.chronology.as_dict()))

        items['certified'] = report.certified
        write_report(items, self.stdout, options['out'])

        if not report.certified:
            raise Violation('The counterexample was not certified')
