import logging

from collections import OrderedDict

from django.core.management.base import CommandParser

import mwsync.settings as mss
import propertime.clocks as ptc

from propertime.trajectories import RadarTrajectory, radar_trajectory_of
from scenarios.commands import ScenarioCommand, Violation
from scenarios.exceptions import ScenarioInvalid
from scenarios.reports import write_report
from spacetime.observers import Inertial

logger = logging.getLogger(__name__)


def _clock_arguments(parser):
    parser.add_argument('--frame', type=str, required=True,
                        help='Observer whose radar coordinates are used')
    clock = parser.add_mutually_exclusive_group(required=True)
    clock.add_argument('--clock', type=str,
                       help='Observer carrying the clock, --window is its '
                            'parameter window')
    clock.add_argument('--at', type=float,
                       help='Radar position of a static clock, --window is '
                            'then a radar time window')
    parser.add_argument('--window', type=float, nargs=2, required=True,
                        metavar=('START', 'END'))
    parser.add_argument('--nodes', type=int, default=None,
                        help='Radar samples of the clock trajectory')


def _quad_tol(scenario):
    return mss.QUAD_TOL if scenario.quad_tol is None else scenario.quad_tol


def _agree(first, second, tol):
    return abs(first - second) <= max(tol, mss.TWIN_RTOL * max(abs(first), abs(second)))


class Command(ScenarioCommand):
    help = 'Proper time of clocks, twins and static clocks in a uniform field'

    def add_command_arguments(self, parser):
        # subcommand usage errors exit like the main parser's
        subparsers = parser.add_subparsers(
            dest='subcommand', required=True,
            parser_class=CommandParser)

        _clock_arguments(subparsers.add_parser(
            'inertial', help='Clock seen from an inertial frame'))
        _clock_arguments(subparsers.add_parser(
            'accelerated', help='Clock seen from the radar coordinates of any observer'))

        twin = subparsers.add_parser(
            'twin', help='Compute both twins\' proper times in both radar charts')
        twin.add_argument('--first', type=str, required=True)
        twin.add_argument('--second', type=str, required=True)
        twin.add_argument('--window', type=float, nargs=2, required=True,
                          metavar=('START', 'END'),
                          help='Parameter window of the first twin')
        twin.add_argument('--second-window', type=float, nargs=2, default=None,
                          metavar=('START', 'END'),
                          help='Parameter window of the second twin, matched by '
                               'radar simultaneity when omitted')
        twin.add_argument('--nodes', type=int, default=None)

        dilation = subparsers.add_parser(
            'dilation', help='Static clocks of a uniformly accelerated frame')
        dilation.add_argument('--acceleration', type=float, required=True)
        dilation.add_argument('--x1', type=float, required=True)
        dilation.add_argument('--x2', type=float, required=True)
        dilation.add_argument('--dt', type=float, required=True)

    def run(self, scenario, /, **options):
        subcommand = options['subcommand']
        items = OrderedDict([('subcommand', subcommand)])

        if subcommand in ('inertial', 'accelerated'):
            consistent = self.clock(scenario, subcommand, items, **options)
        elif subcommand == 'twin':
            consistent = self.twin(scenario, items, **options)
        else:
            consistent = self.dilation(scenario, items, **options)

        items['consistent'] = consistent
        write_report(items, self.stdout, options['out'])

        if not consistent:
            raise Violation('The {} proper times disagree'.format(subcommand))

    def clock(self, scenario, subcommand, items, /, **options):
        ctx, tol = scenario.ctx, _quad_tol(scenario)
        frame = scenario.observer(options['frame'])

        if subcommand == 'inertial' and not isinstance(frame, Inertial):
            raise ScenarioInvalid(
                'Frame {} is not inertial, use the accelerated subcommand'.format(
                    options['frame']))

        if options['clock'] is not None:
            clock = scenario.observer(options['clock'])
            traj = radar_trajectory_of(frame, clock, options['window'],
                                       options['nodes'], ctx)
        else:
            clock = None
            traj = RadarTrajectory.constant(options['at'], options['window'])

        if subcommand == 'inertial':
            result = ptc.proper_time_inertial(traj, ctx, tol)
        else:
            result = ptc.proper_time_accelerated(frame, traj, ctx, tol)

        items['tau'] = result.tau
        items['abs_error_estimate'] = result.abs_error_estimate
        items['n_evals'] = result.n_evals
        items['radar_window'] = traj.window

        if clock is None:
            return True

        own = ptc.proper_time_along(clock, options['window'], ctx, tol)
        items['tau_own'] = own.tau

        return _agree(result.tau, own.tau, tol)

    def twin(self, scenario, items, /, **options):
        report = ptc.twin_consistency(
            scenario.observer(options['first']),
            scenario.observer(options['second']),
            options['window'],
            options['second_window'],
            ctx=scenario.ctx,
            tol=_quad_tol(scenario),
            n=options['nodes'])

        items['tau_a_by_a'] = report.tau_a_by_a
        items['tau_a_by_b'] = report.tau_a_by_b
        items['tau_b_by_b'] = report.tau_b_by_b
        items['tau_b_by_a'] = report.tau_b_by_a
        items['window_a'] = report.window_a
        items['window_b'] = report.window_b
        items['younger'] = report.younger

        return report.consistent

    def dilation(self, scenario, items, /, **options):
        result = ptc.gravitational_dilation(
            options['acceleration'], options['x1'], options['x2'], options['dt'],
            scenario.ctx, tol=_quad_tol(scenario))

        items['g'] = result.g
        items['ratio'] = result.ratio
        items['tau_x1'] = result.tau_x1
        items['tau_x2'] = result.tau_x2
        items['quadrature_tau_x2'] = result.quadrature_tau_x2
        items['cross_check_error'] = result.cross_check_error

        return _agree(result.tau_x2, result.quadrature_tau_x2, _quad_tol(scenario))
