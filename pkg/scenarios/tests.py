import django.core.management as dcm
import django.test as dt

import io
import json
import logging
import math
import os.path as op
import tempfile

import numpy as np
import pandas as pd

import fieldcheck.planemaps as fpm
import mwsync.settings as mss
import spacetime.observers as sto

from django.core.management.base import CommandError

from scenarios.exceptions import ScenarioInvalid
from scenarios.loader import build_scenario, load_scenario
from scenarios.reports import format_report

logger = logging.getLogger(__name__)

TEST_DATA = op.join(op.dirname(__file__), 'test_data')
PLANE = op.join(TEST_DATA, 'plane.json')


def run(*args):
    '''
    Call a management command and return its standard output.
    '''
    out = io.StringIO()
    dcm.call_command(*[str(a) for a in args], stdout=out)
    return out.getvalue()


def parse_report(text):
    items = {}
    for line in text.strip().split('\n'):
        key, value = line.split(': ', 1)
        items[key] = value
    return items


class LoaderTest(dt.SimpleTestCase):
    def test_load(self):
        scenario = load_scenario(PLANE)

        self.assertEqual(scenario.seed, 7)
        self.assertEqual(scenario.ctx.c, 1.0)
        self.assertEqual((scenario.grid.n_t, scenario.grid.n_x), (21, 21))
        self.assertIsInstance(scenario.observer('rindler'), sto.Rindler)
        self.assertIsInstance(scenario.observer('fast'), sto.Boosted)
        self.assertIsInstance(scenario.plane_map('low'), fpm.SumMap)

    def test_sum_observer(self):
        scenario = load_scenario(PLANE)
        s = np.linspace(-3, 3, 13)

        summed = scenario.observer('wobble_sum').position(s)
        wobble = scenario.observer('wobble').position(s)

        np.testing.assert_allclose(summed, wobble, atol=1e-15)

    def test_overrides(self):
        scenario = load_scenario(PLANE, seed=3, grid=[0, 1, -1, 1, 5, 9])

        self.assertEqual(scenario.seed, 3)
        self.assertEqual((scenario.grid.t_min, scenario.grid.n_x), (0.0, 9))

    def test_unknown_names(self):
        scenario = load_scenario(PLANE)

        with self.assertRaises(ScenarioInvalid):
            scenario.plane_map('nope')
        with self.assertRaises(ScenarioInvalid):
            scenario.observer('nope')
        with self.assertRaises(ScenarioInvalid):
            scenario.mw_map('stretch')

    def test_dangling_reference(self):
        body = {
            'maps': {'f': {'kind': 'mw', 'observer': 'ghost'}},
            'grid': {'t_min': -1, 't_max': 1, 'x_min': -1, 'x_max': 1},
        }
        with self.assertRaisesRegex(ScenarioInvalid, 'ghost'):
            build_scenario(body)

    def test_cycle(self):
        with self.assertRaisesRegex(ScenarioInvalid, 'cycle'):
            load_scenario(op.join(TEST_DATA, 'cycle.json'))

    def test_unknown_key(self):
        with self.assertRaisesRegex(ScenarioInvalid, 'root_tolerance'):
            load_scenario(op.join(TEST_DATA, 'typo.json'))

    def test_bad_parameters(self):
        with self.assertRaises(ScenarioInvalid) as cm:
            load_scenario(op.join(TEST_DATA, 'fast.json'))
        self.assertEqual(cm.exception.exit_code, 2)

    def test_bad_grid(self):
        body = {'grid': {'t_min': 1, 't_max': -1, 'x_min': -1, 'x_max': 1}}
        with self.assertRaises(ScenarioInvalid):
            build_scenario(body)

    def test_missing_file(self):
        with self.assertRaises(ScenarioInvalid):
            load_scenario(op.join(TEST_DATA, 'missing.json'))

    def test_tolerances_reach_the_maps(self):
        body = {
            'observers': {'rest': {'kind': 'inertial'}},
            'maps': {'f': {'kind': 'mw', 'observer': 'rest'}},
            'grid': {'t_min': -1, 't_max': 1, 'x_min': -1, 'x_max': 1},
            'tolerances': {'root_tol': 1e-8, 'fd_step': 1e-6, 'quad_tol': 1e-7},
        }
        root_tol, fd_step = mss.ROOT_TOL, mss.FD_STEP
        scenario = build_scenario(body)

        m = scenario.mw_map('f')
        self.assertEqual((m.root_tol, m.fd_step), (1e-8, 1e-6))
        self.assertEqual(scenario.quad_tol, 1e-7)
        self.assertIsNone(scenario.null_band)
        # the settings themselves are left alone
        self.assertEqual((mss.ROOT_TOL, mss.FD_STEP), (root_tol, fd_step))

    def test_residual_max_must_be_non_negative(self):
        body = {
            'grid': {'t_min': -1, 't_max': 1, 'x_min': -1, 'x_max': 1},
            'tolerances': {'residual_max': -1},
        }
        with self.assertRaisesRegex(ScenarioInvalid, 'residual_max'):
            build_scenario(body)


class ReportFormatTest(dt.SimpleTestCase):
    def test_format(self):
        text = format_report({'tau': 0.1, 'passed': True, 'window': (0.0, 1.5)})

        self.assertEqual(
            text, 'tau: 0.10000000000000001\npassed: true\nwindow: 0 1.5\n')


class EvalMapTest(dt.SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def test_identity(self):
        frame = pd.read_csv(io.StringIO(
            run('eval_map', '--scenario', PLANE, '--map', 'identity')))

        self.assertEqual(list(frame.columns), ['t', 'x', 'out_t', 'out_x'])
        self.assertEqual(len(frame), 21 * 21)
        np.testing.assert_array_equal(frame['out_t'], frame['t'])
        np.testing.assert_array_equal(frame['out_x'], frame['x'])

    def test_row_order(self):
        frame = pd.read_csv(io.StringIO(
            run('eval_map', '--scenario', PLANE, '--map', 'identity',
                '--grid', -1, 1, 0, 2, 3, 4)))

        self.assertEqual(list(frame['t'][:5]), [-1.0] * 4 + [0.0])
        np.testing.assert_allclose(frame['x'][:4], [0.0, 2 / 3, 4 / 3, 2.0])

    def test_rindler_closed_form(self):
        out = op.join(self.tmp.name, 'rindler.csv')
        run('eval_map', '--scenario', PLANE, '--map', 'rindler_mw', '--out', out)
        frame = pd.read_csv(out)

        # exp(z sigma) sigma with a = c = 1
        expected_t = np.exp(frame['x']) * np.sinh(frame['t'])
        expected_x = np.exp(frame['x']) * np.cosh(frame['t'])

        self.assertLessEqual(np.max(np.abs(frame['out_t'] - expected_t)), 1e-12)
        self.assertLessEqual(np.max(np.abs(frame['out_x'] - expected_x)), 1e-12)

    def test_deterministic(self):
        first = run('eval_map', '--scenario', PLANE, '--map', 'wobble_mw')
        second = run('eval_map', '--scenario', PLANE, '--map', 'wobble_mw')

        self.assertEqual(first, second)

    def test_unknown_map(self):
        with self.assertRaises(CommandError) as cm:
            run('eval_map', '--scenario', PLANE, '--map', 'nope')
        self.assertEqual(cm.exception.returncode, 2)

    def test_no_output_on_invalid_scenario(self):
        out = op.join(self.tmp.name, 'typo.csv')

        with self.assertRaises(CommandError) as cm:
            run('eval_map', '--scenario', op.join(TEST_DATA, 'typo.json'),
                '--map', 'rest_mw', '--out', out)

        self.assertEqual(cm.exception.returncode, 2)
        self.assertFalse(op.exists(out))

    def test_evaluation_failure(self):
        # the left wedge has no radar coordinates for the Rindler observer
        with self.assertRaises(CommandError) as cm:
            run('eval_map', '--scenario', PLANE, '--map', 'rindler_radar')
        self.assertEqual(cm.exception.returncode, 3)


class CheckMapTest(dt.SimpleTestCase):
    def test_wave_on_synchronization_map(self):
        report = parse_report(run('check_map', '--scenario', PLANE,
                                  '--map', 'wobble_mw', '--check', 'wave'))

        self.assertEqual(report['passed'], 'true')
        self.assertIn(report['verdict'], ('exact', 'converging'))

    def test_wave_on_cauchy_solution(self):
        report = parse_report(run('check_map', '--scenario', PLANE,
                                  '--map', 'wobble_wave', '--check', 'wave'))
        self.assertEqual(report['passed'], 'true')

    def test_holo_on_conjugated_map(self):
        out = io.StringIO()

        with self.assertRaises(CommandError) as cm:
            dcm.call_command('check_map', '--scenario', PLANE, '--map', 'wobble_conj',
                             '--check', 'holo', stdout=out)

        self.assertEqual(cm.exception.returncode, 1)
        report = parse_report(out.getvalue())
        self.assertEqual(report['verdict'], 'violated')
        self.assertIn('location_of_max_t', report)

    def test_antiholo_on_conjugated_map(self):
        report = parse_report(run('check_map', '--scenario', PLANE,
                                  '--map', 'wobble_conj', '--check', 'antiholo'))
        self.assertEqual(report['passed'], 'true')

    def test_conformal_on_stretch(self):
        with self.assertRaises(CommandError) as cm:
            run('check_map', '--scenario', PLANE, '--map', 'stretch',
                '--check', 'conformal')
        self.assertEqual(cm.exception.returncode, 1)

    def test_conformal_on_boost(self):
        report = parse_report(run('check_map', '--scenario', PLANE,
                                  '--map', 'boost', '--check', 'conformal'))
        self.assertEqual(report['passed'], 'true')

    def test_log_factor(self):
        report = parse_report(run('check_map', '--scenario', PLANE,
                                  '--map', 'rindler_mw', '--check', 'loggwave'))

        self.assertEqual(report['passed'], 'true')
        self.assertLessEqual(float(report['max_abs']), 1e-9)

    def check_with_residual_max(self, residual_max, *args):
        with open(PLANE) as f:
            body = json.load(f)
        body['tolerances']['residual_max'] = residual_max

        with tempfile.TemporaryDirectory() as tmp:
            path = op.join(tmp, 'threshold.json')
            with open(path, 'w') as f:
                json.dump(body, f)

            out = io.StringIO()
            try:
                dcm.call_command('check_map', '--scenario', path, *args, stdout=out)
            except CommandError as e:
                return parse_report(out.getvalue()), e.returncode

            return parse_report(out.getvalue()), 0

    def test_residual_max_from_scenario(self):
        args = ('--map', 'rindler_mw', '--check', 'loggwave')

        report, returncode = self.check_with_residual_max(1e-9, *args)
        self.assertEqual(returncode, 0)
        self.assertEqual(float(report['residual_max']), 1e-9)
        self.assertEqual(report['passed'], 'true')

        # rounding noise of the linear log factor is far above this
        report, returncode = self.check_with_residual_max(1e-30, *args)
        self.assertEqual(returncode, 1)
        self.assertIn(report['verdict'], ('exact', 'converging'))
        self.assertEqual(report['passed'], 'false')

    def test_log_factor_needs_synchronization_map(self):
        with self.assertRaises(CommandError) as cm:
            run('check_map', '--scenario', PLANE, '--map', 'square',
                '--check', 'loggwave')
        self.assertEqual(cm.exception.returncode, 2)

    def test_report_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = op.join(tmp, 'report.txt')
            text = run('check_map', '--scenario', PLANE, '--map', 'identity',
                       '--check', 'holo', '--out', out)

            with open(out) as f:
                self.assertEqual(f.read(), text)


class CausalMapTest(dt.SimpleTestCase):
    def test_suite_passes(self):
        report = parse_report(run('causal_map', '--scenario', PLANE,
                                  '--map', 'wobble_mw', '--pairs', 2000))

        self.assertEqual(report['lip_status'], 'verified')
        self.assertEqual(report['chronology_forward'], 'pass')
        self.assertEqual(report['chronology_inverse'], 'pass')
        self.assertEqual(report['orientation'], 'pass')
        self.assertEqual(report['passed'], 'true')

    def test_rindler_not_applicable(self):
        report = parse_report(run('causal_map', '--scenario', PLANE,
                                  '--map', 'rindler_mw', '--pairs', 2000))

        self.assertEqual(report['lip_status'], 'fails_lip')
        self.assertEqual(report['suite'], 'not_applicable')
        self.assertIn('lip_reason', report)

    def test_witness(self):
        out = io.StringIO()

        with self.assertRaises(CommandError) as cm:
            dcm.call_command('causal_map', '--scenario', PLANE, '--map', 'low',
                             '--pairs', '2000', stdout=out)

        self.assertEqual(cm.exception.returncode, 1)
        report = parse_report(out.getvalue())
        self.assertEqual(report['witness_direction'], 'reflected')
        self.assertEqual(report['witness_relation_out'], 'chron_future')
        for key in ('witness_z1_t', 'witness_z2_x', 'witness_image1_t'):
            self.assertIn(key, report)


class CounterexampleTest(dt.SimpleTestCase):
    def counterexample(self, *extra):
        return run('counterexample', '--scenario', PLANE, '--first', 'rest',
                   '--second', 'moving', '--pairs', 5000, *extra)

    def test_certified(self):
        report = parse_report(self.counterexample())

        self.assertEqual(report['certified'], 'true')
        self.assertEqual(report['axis_restriction'], 'true')
        self.assertEqual(report['holo_verdict'], 'violated')
        self.assertEqual(report['antiholo_verdict'], 'violated')
        self.assertGreaterEqual(float(report['holo_max_abs']), 0.1)
        self.assertGreaterEqual(float(report['antiholo_max_abs']), 0.1)
        self.assertEqual(report['witness_direction'], 'reflected')

    def test_seeded_rerun(self):
        self.assertEqual(self.counterexample(), self.counterexample())
        self.assertEqual(parse_report(self.counterexample('--seed', 11))['seed'], '11')

    def test_degenerate(self):
        with self.assertRaises(CommandError) as cm:
            run('counterexample', '--scenario', PLANE, '--first', 'rest',
                '--second', 'still', '--pairs', 100)
        self.assertEqual(cm.exception.returncode, 3)


class PropertimeCommandTest(dt.SimpleTestCase):
    def test_rest_clock(self):
        report = parse_report(run('propertime', '--scenario', PLANE, 'inertial',
                                  '--frame', 'rest', '--clock', 'rest',
                                  '--window', 0, 3, '--nodes', 101))

        self.assertAlmostEqual(float(report['tau']), 3.0, places=10)
        self.assertEqual(report['consistent'], 'true')

    def test_frame_must_be_inertial(self):
        with self.assertRaises(CommandError) as cm:
            run('propertime', '--scenario', PLANE, 'inertial', '--frame', 'rindler',
                '--at', 0, '--window', 0, 1)
        self.assertEqual(cm.exception.returncode, 2)

    def test_static_rindler_clock(self):
        report = parse_report(run('propertime', '--scenario', PLANE, 'accelerated',
                                  '--frame', 'rindler', '--at', 0.5,
                                  '--window', 0, 2))
        self.assertAlmostEqual(float(report['tau']), 2 * math.exp(0.5), places=9)

    def test_twin(self):
        report = parse_report(run('propertime', '--scenario', PLANE, 'twin',
                                  '--first', 'home', '--second', 'rindler',
                                  '--window', -1, 1, '--nodes', 401))

        self.assertEqual(report['consistent'], 'true')
        self.assertEqual(report['younger'], 'B')
        self.assertAlmostEqual(float(report['tau_a_by_a']), 2.0, places=9)
        self.assertAlmostEqual(float(report['tau_b_by_b']), 2 * math.atanh(0.5),
                               places=9)

    def test_dilation(self):
        report = parse_report(run('propertime', '--scenario', PLANE, 'dilation',
                                  '--acceleration', -1, '--x1', 0,
                                  '--x2', math.log(2), '--dt', 1))

        self.assertAlmostEqual(float(report['ratio']), 0.5)
        self.assertEqual(float(report['g']), 1.0)
        self.assertEqual(report['consistent'], 'true')

    def test_no_radar_coordinate(self):
        with self.assertRaises(CommandError) as cm:
            run('propertime', '--scenario', PLANE, 'accelerated',
                '--frame', 'rindler', '--clock', 'rest', '--window', -1, 1)
        self.assertEqual(cm.exception.returncode, 3)
