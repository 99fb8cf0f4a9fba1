import unittest
import subprocess

import os
import os.path as op

SETTINGS = 'mwsync.settings_test'
PLANE = op.join('scenarios', 'test_data', 'plane.json')


class CommandlineTest(unittest.TestCase):
    def run_command(self, command):
        return subprocess.run(
            command, shell=True, env=dict(os.environ, DJANGO_SETTINGS_MODULE=SETTINGS),
            stdout=subprocess.PIPE, stderr=subprocess.PIPE)

    def assertRun(self, command, output_res=[], returncode=0):
        result = self.run_command(command)
        output = result.stdout.decode('utf-8').strip()

        self.assertEqual(result.returncode, returncode,
                         result.stderr.decode('utf-8'))
        for output_re in output_res:
            self.assertRegex(output, output_re)
        return output

    def test_hello(self):
        self.assertRun('echo "hello?"', [r'hello'])

    def test_eval(self):
        self.assertRun('python manage.py eval_map --scenario {} --map identity'.format(PLANE),
                       [r'^t,x,out_t,out_x', r'\n-2,-2,-2,-2\n'])

    def test_check_violation(self):
        self.assertRun(
            'python manage.py check_map --scenario {} --map stretch --check conformal'.format(PLANE),
            [r'verdict: violated'], returncode=1)

    def test_invalid_scenario(self):
        self.assertRun(
            'python manage.py eval_map --scenario scenarios/test_data/typo.json --map rest_mw',
            returncode=2)

    def test_counterexample(self):
        self.assertRun(
            'python manage.py counterexample --scenario {} --first rest --second moving '
            '--pairs 2000'.format(PLANE),
            [r'witness_direction: reflected', r'certified: true'])

    def test_degenerate_counterexample(self):
        self.assertRun(
            'python manage.py counterexample --scenario {} --first rest --second still'.format(PLANE),
            returncode=3)

    def test_twin(self):
        self.assertRun(
            'python manage.py propertime --scenario {} twin --first home --second rindler '
            '--window -1 1 --nodes 401'.format(PLANE),
            [r'younger: B', r'consistent: true'])

    def test_usage_error(self):
        self.assertRun(
            'python manage.py propertime --scenario {} twin --first home'.format(PLANE),
            returncode=2)
