'''
Shared plumbing of the scenario driven management commands.
'''
import logging

from django.core.management.base import BaseCommand, CommandError

from mwsync.exceptions import EXIT_RUNTIME, EXIT_VIOLATION, MwsyncException
from scenarios.loader import load_scenario

logger = logging.getLogger(__name__)


class Violation(Exception):
    '''
    Raised by a command body when the checked property does not hold.
    The report has already been written.
    '''


class ScenarioCommand(BaseCommand):
    '''
    Loads and validates --scenario (with the --seed and --grid overrides)
    before calling `run`. Domain errors become a CommandError carrying the
    exit code of the error class: 1 violation, 2 invalid input, 3 runtime.
    '''
    def add_arguments(self, parser):
        parser.add_argument('--scenario', type=str, required=True,
                            help='Path to the scenario JSON file')
        parser.add_argument('--seed', type=int, default=None,
                            help='Overrides the seed of the scenario')
        parser.add_argument('--grid', type=float, nargs=6, default=None,
                            metavar=('T_MIN', 'T_MAX', 'X_MIN', 'X_MAX', 'N_T', 'N_X'),
                            help='Overrides the grid of the scenario')
        parser.add_argument('--out', type=str, default=None,
                            help='Output file')

        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def run(self, scenario, /, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            scenario = load_scenario(options['scenario'], options['seed'],
                                     options['grid'])
            self.run(scenario, **options)
        except Violation as e:
            raise CommandError(str(e), returncode=EXIT_VIOLATION)
        except MwsyncException as e:
            logger.info('%s failed: %s', self.__module__, e)
            raise CommandError(str(e), returncode=e.exit_code)
        except (ValueError, ArithmeticError) as e:
            logger.exception('%s failed', self.__module__)
            raise CommandError(str(e), returncode=EXIT_RUNTIME)
