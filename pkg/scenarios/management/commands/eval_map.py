import logging

import scenarios.csvgrid as scg

from scenarios.commands import ScenarioCommand

logger = logging.getLogger(__name__)


class Command(ScenarioCommand):
    help = 'Evaluate a map of the scenario on its grid and write the values as CSV'

    def add_command_arguments(self, parser):
        parser.add_argument('--map', type=str, required=True,
                            help='Name of the map in the scenario')

    def run(self, scenario, /, **options):
        frame = scg.map_frame(scenario.plane_map(options['map']), scenario.grid)

        if options['out']:
            scg.to_csv(frame, options['out'])
            logger.info('wrote %d rows to %s', len(frame), options['out'])
        else:
            self.stdout.write(scg.to_csv(frame), ending='')
