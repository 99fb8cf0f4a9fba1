import django.test as dt

import logging
import math

import numpy as np

import fieldcheck.causality as fcc
import fieldcheck.planemaps as fcp
import fieldcheck.residuals as fcr
import fieldcheck.wave_cauchy as fcw
import spacetime.observers as sto

from fieldcheck.exceptions import DegenerateSplit, EvaluationFailure, InvalidGrid
from fieldcheck.grids import GridSpec
from spacetime.causal import CausalRelation
from spacetime.exceptions import DegenerateFactor
from spacetime.mw import DerivativeMode, MWMap
from spacetime.reports import Verdict, WitnessDirection, WitnessPair
from spacetime.splitc import SplitComplex, mul, two_velocity

logger = logging.getLogger(__name__)


def unit_grid(n=11):
    return GridSpec(-1, 1, -1, 1, n, n)


class GridSpecTest(dt.SimpleTestCase):
    def test_default_step(self):
        g = GridSpec(0, 2, -1, 1, 11, 21)
        self.assertAlmostEqual(g.min_spacing, 0.1)
        self.assertAlmostEqual(g.h, 0.01)
        self.assertAlmostEqual(g.halved().h, 0.005)

    def test_invalid(self):
        with self.assertRaises(InvalidGrid):
            GridSpec(1, 0, 0, 1)
        with self.assertRaises(InvalidGrid):
            GridSpec(0, 1, 0, 1, 2, 5)
        with self.assertRaises(InvalidGrid):
            GridSpec(0, 1, 0, 1, 11, 11, h=0.06)
        with self.assertRaises(InvalidGrid):
            GridSpec.from_list([0, 1, 0, 1, 5])

    def test_nodes_order(self):
        t, x = GridSpec(0, 1, 0, 2, 3, 3).nodes()
        self.assertEqual(t[0, 1], 0)
        self.assertEqual(x[0, 1], 1)
        self.assertEqual(t[1, 0], 0.5)


class PlaneMapTest(dt.SimpleTestCase):
    def test_power_matches_algebra(self):
        z = SplitComplex(0.3, -1.2)
        square = fcp.PowerMap(2).eval(z)
        expected = mul(z, z)
        self.assertAlmostEqual(square.t, expected.t)
        self.assertAlmostEqual(square.x, expected.x)

    def test_affine_lorentz(self):
        F = fcp.AffineLorentz(v=0.6, scale=2.0, offset=(1, 0))
        value = F.eval((1, 0))
        self.assertAlmostEqual(value.t, 3.5)
        self.assertAlmostEqual(value.x, 1.5)

    def test_conj_and_post_conj(self):
        F = fcp.MWPlaneMap(sto.Rindler(1.0))
        z = SplitComplex(0.2, 0.4)
        self.assertEqual(fcp.ConjPrecomposed(F).eval(z), F.eval(z.conj()))
        self.assertEqual(fcp.PostConj(F).eval(z), F.eval(z).conj())

    def test_identity(self):
        self.assertEqual(fcp.identity().eval((1.5, -2)), SplitComplex(1.5, -2))

    def test_sum_of(self):
        F = fcp.SumMap.of([fcp.identity(), fcp.identity(), fcp.identity()])
        self.assertEqual(F.eval((1, 1)), SplitComplex(3, 3))

    def test_radar_inverse_map(self):
        m = MWMap(sto.PerturbedInertial(0.2, 1.0))
        z = SplitComplex(0.5, 0.25)
        back = fcp.RadarInverseMap(m).eval(m.eval(z))
        self.assertLessEqual((back - z).euclidean_norm(), 1e-9)

    def test_evaluation_failure_location(self):
        F = fcp.RadarInverseMap(MWMap(sto.Rindler(1.0)))
        with self.assertRaises(EvaluationFailure) as cm:
            fcr.holomorphy_residual(F, unit_grid())
        self.assertIsNotNone(cm.exception.location)


class HolomorphyTest(dt.SimpleTestCase):
    def test_mw_map_is_holomorphic(self):
        F = fcp.MWPlaneMap(sto.PerturbedInertial(0.4, 1.5))
        report = fcr.holomorphy_residual(F, GridSpec(-2, 2, -2, 2, 21, 21))
        self.assertTrue(report.passed)
        self.assertLess(report.max_abs, 1e-9)

    def test_conjugated_map_is_antiholomorphic(self):
        F = fcp.ConjPrecomposed(fcp.MWPlaneMap(sto.PerturbedInertial(0.4, 1.5)))
        g = unit_grid()

        holo = fcr.holomorphy_residual(F, g)
        self.assertIs(holo.verdict, Verdict.VIOLATED)
        self.assertGreater(holo.max_abs, 0.1)
        self.assertIsNotNone(holo.location_of_max)

        self.assertTrue(fcr.holomorphy_residual(F, g, anti=True).passed)

    def test_identity(self):
        report = fcr.holomorphy_residual(fcp.identity(), unit_grid())
        self.assertLessEqual(report.max_abs, 1e-12)
        self.assertIs(report.verdict, Verdict.EXACT)

    def test_square(self):
        self.assertTrue(fcr.holomorphy_residual(fcp.PowerMap(2), unit_grid()).passed)


class VerdictTest(dt.SimpleTestCase):
    def test_exact(self):
        self.assertEqual(fcr._verdict(0.0, 0.0, 1e-12, 1e-12), (Verdict.EXACT, None))

    def test_second_order(self):
        verdict, order = fcr._verdict(1e-4, 2.5e-5, 1e-12, 1e-12)
        self.assertIs(verdict, Verdict.CONVERGING)
        self.assertAlmostEqual(order, 2.0)

    def test_zero_at_full_step_only(self):
        verdict, order = fcr._verdict(0.0, 1e-3, 1e-12, 1e-12)
        self.assertIs(verdict, Verdict.VIOLATED)
        self.assertEqual(order, -math.inf)


class WaveTest(dt.SimpleTestCase):
    def test_rindler(self):
        F = fcp.MWPlaneMap(sto.Rindler(1.0))
        self.assertTrue(fcr.wave_residual(F, unit_grid()).passed)

    def test_mixed_sum(self):
        F = (fcp.MWPlaneMap(sto.PerturbedInertial(0.3, 1.0)) +
             fcp.ConjPrecomposed(fcp.MWPlaneMap(sto.Rindler(0.5))))
        self.assertTrue(fcr.wave_residual(F, unit_grid()).passed)

    def test_square(self):
        report = fcr.wave_residual(fcp.PowerMap(2), unit_grid())
        self.assertTrue(report.passed)

    def test_non_wave(self):
        class Bump(fcp.PlaneMap):
            def eval_components(self, t, x):
                return np.asarray(t) ** 2 + np.asarray(x) ** 4, np.zeros_like(t)

        self.assertIs(fcr.wave_residual(Bump(), unit_grid()).verdict,
                      Verdict.VIOLATED)


class ConformalityTest(dt.SimpleTestCase):
    def test_rindler(self):
        report = fcr.conformality_report(fcp.MWPlaneMap(sto.Rindler(1.0)),
                                         unit_grid(21))
        self.assertTrue(report.passed)
        self.assertEqual(report.degenerate_nodes, 0)
        self.assertAlmostEqual(report.factor_min, math.exp(-2), places=4)
        self.assertAlmostEqual(report.factor_max, math.exp(2), places=3)

    def test_rindler_finite_difference_factor_converges(self):
        m = MWMap(sto.Rindler(1.0))
        t, x = unit_grid(21).nodes()
        errors = [
            np.max(np.abs(np.sqrt(m.conformal_factor_components(
                t, x, DerivativeMode.FINITE_DIFF, h)) - np.exp(x)))
            for h in (1e-4, 5e-5)
        ]
        self.assertLessEqual(errors[0], 1e-6)
        self.assertLess(abs(math.log2(errors[0] / errors[1]) - 2.0), 0.4)

    def test_affine_lorentz(self):
        report = fcr.conformality_report(
            fcp.AffineLorentz(v=0.5, scale=3.0, offset=(2, 1)), unit_grid())
        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.factor_min, 9.0)
        self.assertAlmostEqual(report.factor_max, 9.0)

    def test_anisotropic_scaling(self):
        report = fcr.conformality_report(fcp.LinearMap([[1, 0], [0, 2]]),
                                         unit_grid())
        self.assertIs(report.verdict, Verdict.VIOLATED)
        self.assertAlmostEqual(report.max_abs, 3.0)

    def test_degenerate_nodes(self):
        F = fcp.MWPlaneMap(sto.Oscillation(1.0, 1.0))
        report = fcr.conformality_report(F, unit_grid())
        self.assertGreater(report.degenerate_nodes, 0)
        self.assertFalse(report.passed)


class LogFactorTest(dt.SimpleTestCase):
    def test_rindler(self):
        report = fcr.log_factor_wave_residual(MWMap(sto.Rindler(0.5)), unit_grid())
        self.assertIs(report.verdict, Verdict.EXACT)

    def test_inertial(self):
        report = fcr.log_factor_wave_residual(MWMap(sto.Inertial(0.3)), unit_grid())
        self.assertLessEqual(report.max_abs, 1e-9)

    def test_perturbed_inertial(self):
        report = fcr.log_factor_wave_residual(
            MWMap(sto.PerturbedInertial(0.5, 1.2)), unit_grid())
        self.assertTrue(report.passed)

    def test_degenerate(self):
        with self.assertRaises(DegenerateFactor):
            fcr.log_factor_wave_residual(MWMap(sto.Oscillation(1.0, 1.0)),
                                         unit_grid())


class ChronologyTest(dt.SimpleTestCase):
    def test_mw_map_preserves_chronology(self):
        F = fcp.MWPlaneMap(sto.PerturbedInertial(0.4, 1.5))
        result = fcc.chronology_check(F, GridSpec(-2, 2, -2, 2), 20000, seed=5)
        self.assertNotIsInstance(result, WitnessPair)
        self.assertGreater(result.min_margin, 0)
        self.assertEqual(result.seed, 5)

    def test_identity_margins(self):
        result = fcc.chronology_check(fcp.identity(), unit_grid(), 1000)
        self.assertEqual(result.min_margin, result.min_input_margin)

    def test_low_map_witness(self):
        F = (fcp.MWPlaneMap(sto.Inertial(0)) +
             fcp.ConjPrecomposed(fcp.MWPlaneMap(sto.Inertial(0.5))))
        witness = fcc.chronology_check(F, unit_grid(), 1000, seed=2)

        self.assertIsInstance(witness, WitnessPair)
        self.assertIs(witness.direction, WitnessDirection.REFLECTED)
        self.assertIs(witness.relation_out, CausalRelation.CHRON_FUTURE)
        self.assertIs(witness.relation_in, CausalRelation.SPACELIKE)

    def test_forward_witness(self):
        # reverses time
        F = fcp.LinearMap([[-1, 0], [0, 1]])
        witness = fcc.chronology_check(F, unit_grid(), 100)
        self.assertIs(witness.direction, WitnessDirection.FORWARD)
        self.assertIs(witness.relation_out, CausalRelation.CHRON_PAST)

    def test_needs_pairs(self):
        with self.assertRaises(ValueError):
            fcc.chronology_check(fcp.identity(), unit_grid(), 0)


class OrientationTest(dt.SimpleTestCase):
    event = SplitComplex(0.1, 0.2)

    def test_mw_preserves(self):
        F = fcp.MWPlaneMap(sto.Rindler(1.0))
        report = fcc.orientation_of(F, self.event, 1.0)
        self.assertIs(report.orientation, fcc.MapOrientation.PRESERVING)

    def test_conj_reverses(self):
        F = fcp.ConjPrecomposed(fcp.MWPlaneMap(sto.PerturbedInertial(0.3, 1.0)))
        report = fcc.orientation_of(F, self.event, 1.0)
        self.assertIs(report.orientation, fcc.MapOrientation.REVERSING)

    def test_low_map_neither(self):
        F = (fcp.MWPlaneMap(sto.Inertial(0)) +
             fcp.ConjPrecomposed(fcp.MWPlaneMap(sto.Inertial(0.5))))
        report = fcc.orientation_of(F, self.event, 1.0)
        self.assertIs(report.orientation, fcc.MapOrientation.NEITHER)
        self.assertGreater(report.spread_minus, 0.1)


class AutomorphismSuiteTest(dt.SimpleTestCase):
    def test_perturbed_inertial(self):
        report = fcc.automorphism_suite(MWMap(sto.PerturbedInertial(0.3, 1.0)),
                                        unit_grid(), 100000, seed=1)
        self.assertTrue(report.applicable)
        self.assertTrue(report.passed, [i for i in report.items if not i.passed])
        self.assertEqual([item.name for item in report.items],
                         ['chronology_forward', 'chronology_inverse',
                          'radar_round_trip', 'orientation', 'axis_restriction'])

    def test_rindler_not_applicable(self):
        report = fcc.automorphism_suite(MWMap(sto.Rindler(1.0)), unit_grid(), 100)
        self.assertFalse(report.applicable)
        self.assertIs(report.lip.status, sto.LipStatus.FAILS_LIP)

    def test_sum_with_large_oscillation_not_applicable(self):
        gamma = sto.Inertial(0) + sto.Oscillation(2.0, 1.0)
        report = fcc.automorphism_suite(MWMap(gamma), unit_grid(), 100)
        self.assertFalse(report.applicable)
        self.assertIs(report.lip.status, sto.LipStatus.UNKNOWN)

    def test_inertial_matches_boost(self):
        report = fcc.automorphism_suite(MWMap(sto.Inertial(0.5, base=(1, 1))),
                                        unit_grid(), 1000)
        names = [item.name for item in report.items]
        self.assertIn('affine_lorentz', names)
        self.assertTrue(report.passed)


class WaveCauchyTest(dt.SimpleTestCase):
    def test_matches_mw_map(self):
        gamma = sto.PerturbedInertial(0.4, 1.3)
        g = GridSpec(-2, 2, -2, 2, 21, 21)
        t, x = g.nodes()

        for sign, F in ((1, fcp.MWPlaneMap(gamma)),
                        (-1, fcp.ConjPrecomposed(fcp.MWPlaneMap(gamma)))):
            wave_t, wave_x = fcw.from_observer(gamma, sign).eval_components(t, x)
            map_t, map_x = F.eval_components(t, x)
            self.assertLessEqual(np.max(np.abs(wave_t - map_t)), 1e-12)
            self.assertLessEqual(np.max(np.abs(wave_x - map_x)), 1e-12)

    def test_rest_observer_gives_identity(self):
        F = fcw.build_wave_cauchy(lambda y: np.zeros_like(y), lambda y: y)
        value = F.eval((0.7, -0.4))
        self.assertAlmostEqual(value.t, 0.7, places=15)
        self.assertAlmostEqual(value.x, -0.4, places=15)

    def test_quadrature_path(self):
        F = fcw.from_observer(sto.PerturbedInertial(0.4, 1.3))
        for t, x in ((0.3, 0.8), (-1.0, -0.5), (1.2, 0.0)):
            closed = F.eval((t, x)).t
            self.assertAlmostEqual(F.time_component_by_quadrature(t, x).value,
                                   closed, places=8)

    def test_quadrature_with_difference_derivatives(self):
        F = fcw.build_wave_cauchy(np.sin, lambda y: 2 * y, sign=-1)
        self.assertAlmostEqual(F.time_component_by_quadrature(0.5, 0.3).value,
                               F.eval((0.5, 0.3)).t, places=6)

    def test_difference_step(self):
        F = fcw.build_wave_cauchy(np.sin, lambda y: 2 * y, sign=-1, fd_step=1e-4)
        self.assertAlmostEqual(F.time_component_by_quadrature(0.5, 0.3).value,
                               F.eval((0.5, 0.3)).t, places=6)

        with self.assertRaises(ValueError):
            fcw.build_wave_cauchy(np.sin, np.cos, fd_step=0)

    def test_uniqueness(self):
        gamma = sto.Rindler(0.5)
        difference = fcw.from_observer(gamma) + _negated(fcp.MWPlaneMap(gamma))
        g = unit_grid(21)
        t, x = g.nodes()
        diff_t, diff_x = difference.eval_components(t, x)

        axis_t, axis_x = difference.associated_curve(np.linspace(-1, 1, 11))
        self.assertEqual(np.max(np.abs(axis_t)), 0)
        self.assertLessEqual(max(np.max(np.abs(diff_t)), np.max(np.abs(diff_x))),
                             1e-10)
        self.assertTrue(fcr.holomorphy_residual(difference, g).passed)

    def test_bad_sign(self):
        with self.assertRaises(ValueError):
            fcw.build_wave_cauchy(np.sin, np.cos, sign=0)


def _negated(F):
    class Negated(fcp.PlaneMap):
        def eval_components(self, t, x):
            image_t, image_x = F.eval_components(t, x)
            return -image_t, -image_x

    return Negated()


class LowCounterexampleTest(dt.SimpleTestCase):
    def test_inertial_pair(self):
        report = fcc.low_counterexample(sto.Inertial(0), sto.Inertial(0.5),
                                        unit_grid(), seed=0, n_pairs=2000)
        u = two_velocity(0.5).u

        self.assertTrue(report.certified)
        self.assertTrue(report.axis_ok)
        self.assertAlmostEqual(report.holo.max_abs, 2 * u.euclidean_norm(), places=6)
        self.assertAlmostEqual(report.antiholo.max_abs, 2.0, places=6)
        self.assertIs(report.witness.direction, WitnessDirection.REFLECTED)

    def test_deterministic(self):
        first = fcc.low_counterexample(sto.Inertial(0), sto.Inertial(0.5),
                                       unit_grid(), seed=7, n_pairs=500)
        second = fcc.low_counterexample(sto.Inertial(0), sto.Inertial(0.5),
                                        unit_grid(), seed=7, n_pairs=500)
        self.assertEqual(first.witness.as_dict(), second.witness.as_dict())

    def test_perturbed_pair(self):
        report = fcc.low_counterexample(sto.PerturbedInertial(0.3, 1.0),
                                        sto.Inertial(0.2), unit_grid(),
                                        seed=3, n_pairs=5000)
        self.assertTrue(report.wave.passed)
        self.assertIsNotNone(report.witness)

    def test_degenerate_split(self):
        with self.assertRaises(DegenerateSplit):
            fcc.low_counterexample(sto.Inertial(0), sto.Oscillation(0.0, 1.0),
                                   unit_grid())
