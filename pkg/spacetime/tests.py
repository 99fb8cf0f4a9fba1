import django.test as dt

import logging
import math

import numpy as np

from hypothesis import given, settings, strategies as st

import spacetime.causal as stc
import spacetime.observers as sto
import spacetime.splitc as sts

from mwsync.utils import spawn_generators
from spacetime.exceptions import (
    DegenerateFactor,
    DomainExceeded,
    IndeterminateComposition,
    InvalidLightspeed,
    InvalidObserver,
    NoRadarCoordinate,
    NonFiniteComponent,
    NotDifferentiable,
    NotTimelike,
    SameOrientation,
    SpeedLimitExceeded,
)
from spacetime.mw import DerivativeMode, MWMap
from spacetime.reports import ResidualReport, Verdict, WitnessDirection, WitnessPair
from spacetime.splitc import SIGMA, SplitComplex

logger = logging.getLogger(__name__)

components = st.floats(min_value=-10, max_value=10, allow_nan=False)
velocities = st.floats(min_value=-0.99, max_value=0.99, allow_nan=False)
# integer components keep sums and products exact
lattice = st.builds(SplitComplex, st.integers(-100, 100), st.integers(-100, 100))
small_lattice = st.builds(SplitComplex, st.integers(-20, 20), st.integers(-20, 20))
margins = st.floats(min_value=0.01, max_value=10)


def random_events(n, seed=3, low=-3.0, high=3.0):
    rng, = spawn_generators(seed, 1)
    return [SplitComplex(t, x) for t, x in rng.uniform(low, high, size=(n, 2))]


class SplitComplexTest(dt.SimpleTestCase):
    def test_sigma_squares_to_one(self):
        self.assertEqual(SIGMA * SIGMA, sts.ONE)

    def test_mul(self):
        self.assertEqual(sts.mul((1, 2), (3, 4)), SplitComplex(11, 10))

    def test_norm_sq(self):
        self.assertEqual(sts.norm_sq((3, 2)), 5)
        self.assertEqual(sts.norm_sq((1, 1)), 0)
        self.assertEqual(sts.norm_sq((0, 1)), -1)

    def test_inner(self):
        self.assertEqual(sts.inner((2, 1), (3, 1)), 5)

    def test_conj_is_involution(self):
        a = SplitComplex(1.5, -0.25)
        self.assertEqual(a.conj().conj(), a)

    def test_non_finite(self):
        with self.assertRaises(NonFiniteComponent):
            SplitComplex(math.inf, 0)
        with self.assertRaises(NonFiniteComponent):
            sts.add((1, 0), (math.nan, 0))

    def test_exp(self):
        value = sts.exp((0, 1))
        self.assertAlmostEqual(value.t, math.cosh(1))
        self.assertAlmostEqual(value.x, math.sinh(1))

    @given(components, components, components, components)
    def test_norm_is_multiplicative(self, t1, x1, t2, x2):
        a, b = SplitComplex(t1, x1), SplitComplex(t2, x2)
        expected = a.norm_sq() * b.norm_sq()
        self.assertLessEqual(
            abs((a * b).norm_sq() - expected), 1e-9 * (1 + abs(expected) + 1e4))

    @settings(max_examples=10000)
    @given(lattice, lattice, lattice)
    def test_ring_laws(self, a, b, c):
        self.assertEqual(a + b, b + a)
        self.assertEqual(a * b, b * a)
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)

    @settings(max_examples=10000)
    @given(lattice, lattice)
    def test_conj_is_a_ring_homomorphism(self, a, b):
        self.assertEqual((a + b).conj(), a.conj() + b.conj())
        self.assertEqual((a * b).conj(), a.conj() * b.conj())

    def test_lightspeed_context(self):
        with self.assertRaises(InvalidLightspeed):
            sts.LightspeedContext(0)
        with self.assertRaises(InvalidLightspeed):
            sts.LightspeedContext(-3)


class VelocityTest(dt.SimpleTestCase):
    def test_two_velocity_at_rest(self):
        self.assertEqual(sts.two_velocity(0).u, sts.ONE)

    def test_two_velocity_value(self):
        u = sts.two_velocity(0.6).u
        self.assertAlmostEqual(u.t, 1.25)
        self.assertAlmostEqual(u.x, 0.75)

    def test_two_velocity_with_lightspeed(self):
        ctx = sts.LightspeedContext(3.0)
        u = sts.two_velocity(1.8, ctx)
        self.assertAlmostEqual(u.velocity_fraction, 0.6)

    def test_speed_limit(self):
        with self.assertRaises(SpeedLimitExceeded):
            sts.two_velocity(1.0)
        with self.assertRaises(SpeedLimitExceeded):
            sts.velocity_add(1.5, 0)

    def test_two_velocity_near_lightspeed(self):
        u = sts.two_velocity(0.999999)
        self.assertGreater(u.u.t, 700)

    def test_two_velocity_rejects_spacelike(self):
        with self.assertRaises(SpeedLimitExceeded):
            sts.TwoVelocity(SplitComplex(0, 1))
        with self.assertRaises(SpeedLimitExceeded):
            sts.TwoVelocity(SplitComplex(-1, 0))

    def test_velocity_add(self):
        self.assertAlmostEqual(sts.velocity_add(0.5, 0.5), 0.8)
        self.assertEqual(sts.velocity_add(1.0, 0.5), 1.0)
        self.assertEqual(sts.velocity_add(1.0, 1.0), 1.0)

    def test_lightspeed_is_a_fixed_point(self):
        rng, = spawn_generators(11, 1)

        for c in (2.0, 3.0, 7.5):
            ctx = sts.LightspeedContext(c)
            for v in rng.uniform(-c, c, size=200):
                self.assertEqual(sts.velocity_add(v, c, ctx), c)
                self.assertEqual(sts.velocity_add(v, -c, ctx), -c)

        ctx = sts.LightspeedContext(3.0)
        self.assertEqual(sts.velocity_add(2.7028, -3.0, ctx), -3.0)

    @given(st.floats(min_value=0.1, max_value=10),
           st.floats(min_value=-1, max_value=1),
           st.floats(min_value=-1, max_value=1))
    def test_velocity_add_stays_below_lightspeed(self, c, beta_v, beta_w):
        ctx = sts.LightspeedContext(c)
        v, w = beta_v * c, beta_w * c
        if not (abs(v) <= c and abs(w) <= c) or 1.0 + (v / c) * (w / c) == 0.0:
            return

        self.assertLessEqual(abs(sts.velocity_add(v, w, ctx)), c)

    def test_velocity_add_indeterminate(self):
        with self.assertRaises(IndeterminateComposition):
            sts.velocity_add(1.0, -1.0)

    @given(velocities, velocities)
    def test_velocity_add_matches_product(self, v, w):
        product = sts.two_velocity(v).u * sts.two_velocity(w).u
        self.assertAlmostEqual(product.x / product.t, sts.velocity_add(v, w),
                               places=9)

    @given(velocities, components, components)
    def test_boost_preserves_norm(self, v, t, x):
        p = SplitComplex(t, x)
        boosted = sts.boost(sts.two_velocity(v), p)
        self.assertLessEqual(abs(boosted.norm_sq() - p.norm_sq()),
                             1e-8 * (1 + t * t + x * x) * 50)

    def test_rapidity(self):
        self.assertAlmostEqual(sts.rapidity(0.5), math.atanh(0.5))
        self.assertAlmostEqual(sts.lorentz_factor(0.6), 1.25)


class CausalTest(dt.SimpleTestCase):
    def test_classify(self):
        origin = sts.ZERO
        self.assertIs(stc.classify(origin, (2, 1)), stc.CausalRelation.CHRON_FUTURE)
        self.assertIs(stc.classify(origin, (1, 1)), stc.CausalRelation.NULL_FUTURE)
        self.assertIs(stc.classify(origin, (-1, 1)), stc.CausalRelation.NULL_PAST)
        self.assertIs(stc.classify(origin, (-2, 0)), stc.CausalRelation.CHRON_PAST)
        self.assertIs(stc.classify(origin, (0, 1)), stc.CausalRelation.SPACELIKE)
        self.assertIs(stc.classify(origin, origin), stc.CausalRelation.EQUAL)

    def test_null_band(self):
        origin = sts.ZERO
        self.assertIs(stc.classify(origin, (1, 1 + 1e-12)),
                      stc.CausalRelation.NULL_FUTURE)
        self.assertIs(stc.classify(origin, (1, 1 + 1e-12), tol=0),
                      stc.CausalRelation.SPACELIKE)

    def test_negative_tol(self):
        with self.assertRaises(ValueError):
            stc.classify(sts.ZERO, (1, 0), tol=-1)

    def test_in_region(self):
        self.assertTrue(stc.in_region(sts.ZERO, (2, 1), 'CT+'))
        self.assertTrue(stc.in_region(sts.ZERO, (-1, -1), stc.Region.CN))
        self.assertFalse(stc.in_region(sts.ZERO, (0, 1), 'CT'))

    @given(components, components, components, components)
    def test_classify_is_antisymmetric(self, t1, x1, t2, x2):
        a, b = SplitComplex(t1, x1), SplitComplex(t2, x2)
        mirror = {
            stc.CausalRelation.CHRON_FUTURE: stc.CausalRelation.CHRON_PAST,
            stc.CausalRelation.CHRON_PAST: stc.CausalRelation.CHRON_FUTURE,
            stc.CausalRelation.NULL_FUTURE: stc.CausalRelation.NULL_PAST,
            stc.CausalRelation.NULL_PAST: stc.CausalRelation.NULL_FUTURE,
            stc.CausalRelation.SPACELIKE: stc.CausalRelation.SPACELIKE,
            stc.CausalRelation.EQUAL: stc.CausalRelation.EQUAL,
        }
        self.assertIs(stc.classify(b, a), mirror[stc.classify(a, b)])

    @given(components, components, components, margins, components, margins)
    def test_chronological_order_is_transitive(self, t, x, x1, r1, x2, r2):
        a = SplitComplex(t, x)
        b = a + SplitComplex(abs(x1) + r1, x1)
        c = b + SplitComplex(abs(x2) + r2, x2)

        self.assertTrue(stc.chron_precedes(a, b))
        self.assertTrue(stc.chron_precedes(b, c))
        self.assertTrue(stc.chron_precedes(a, c))

    @given(small_lattice, small_lattice, velocities)
    def test_classify_is_boost_invariant(self, a, b, v):
        u = sts.two_velocity(v)
        self.assertIs(stc.classify(sts.boost(u, a), sts.boost(u, b)),
                      stc.classify(a, b))

    def test_rays_through_intersect_back(self):
        for p in random_events(50):
            left, right = stc.rays_through(p)
            self.assertIs(left.orientation, stc.Orientation.LEFT_MOVING)
            back = stc.ray_intersect(right, left)
            self.assertAlmostEqual(back.t, p.t, places=12)
            self.assertAlmostEqual(back.x, p.x, places=12)

    def test_ray_intersect_same_orientation(self):
        left, _ = stc.rays_through((0, 0))
        with self.assertRaises(SameOrientation):
            stc.ray_intersect(left, left)

    def test_time_axis_hit(self):
        left, right = stc.rays_through((1, 2))
        self.assertEqual(stc.time_axis_hit(left), 3)
        self.assertEqual(stc.time_axis_hit(right), -1)

    def test_chronological_mask(self):
        mask = stc.chronological_mask(np.array([2.0, 1.0, -2.0]),
                                      np.array([1.0, 1.0, 0.0]))
        self.assertEqual(list(mask), [True, False, False])


class ReportsTest(dt.SimpleTestCase):
    def test_residual_report_ordering(self):
        with self.assertRaises(ValueError):
            ResidualReport(max_abs=1.0, mean_abs=2.0)

    def test_residual_report_dict(self):
        report = ResidualReport(max_abs=1.0, mean_abs=0.5, verdict=Verdict.EXACT)
        self.assertTrue(report.passed)
        self.assertEqual(list(report.as_dict()), ['max_abs', 'mean_abs', 'verdict'])

    def test_witness_pair_validates(self):
        with self.assertRaises(ValueError):
            WitnessPair(SplitComplex(0, 0), SplitComplex(1, 0),
                        stc.CausalRelation.CHRON_FUTURE,
                        stc.CausalRelation.CHRON_FUTURE)

        witness = WitnessPair(SplitComplex(0, 0), SplitComplex(0, 1),
                              stc.CausalRelation.SPACELIKE,
                              stc.CausalRelation.CHRON_FUTURE,
                              direction=WitnessDirection.REFLECTED)
        self.assertEqual(witness.as_dict()['direction'], 'reflected')


class ObserverTest(dt.SimpleTestCase):
    def test_inertial(self):
        gamma = sto.Inertial(0.6, base=(1, 0))
        self.assertEqual(gamma.eval(0), SplitComplex(1, 0))
        self.assertAlmostEqual(gamma.eval(1).x, 0.75)
        self.assertAlmostEqual(gamma.derivative(5).norm_sq(), 1.0)

    def test_vectorized_position(self):
        gamma = sto.Rindler(1.0)
        s = np.linspace(-1, 1, 5)
        t, x = gamma.position(s)
        self.assertTrue(np.allclose(t, np.sinh(s)))
        self.assertTrue(np.allclose(x, np.cosh(s)))

    def test_rindler_null_range(self):
        plus, minus = sto.Rindler(1.0).null_range()
        self.assertEqual(plus.as_tuple(), (0.0, math.inf))
        self.assertEqual(minus.as_tuple(), (-math.inf, 0.0))

        plus, minus = sto.Rindler(-1.0).null_range()
        self.assertEqual(plus.as_tuple(), (-math.inf, 0.0))

    def test_rindler_rejects_zero(self):
        with self.assertRaises(InvalidObserver):
            sto.Rindler(0.0)

    def test_perturbed_inertial_bound(self):
        with self.assertRaises(InvalidObserver):
            sto.PerturbedInertial(1.0, 1.0)

    def test_sum_matches_perturbed_inertial(self):
        summed = sto.Inertial(0) + sto.Oscillation(0.3, 2.0)
        direct = sto.PerturbedInertial(0.3, 2.0)
        s = np.linspace(-4, 4, 17)
        self.assertTrue(np.allclose(summed.position(s), direct.position(s)))
        self.assertTrue(np.allclose(summed.velocity(s), direct.velocity(s)))
        self.assertIs(sto.lip_status(summed).status, sto.LipStatus.VERIFIED)

    def test_boosted_and_translated(self):
        u = sts.two_velocity(0.5)
        gamma = sto.Inertial(0).boosted(u).translated((1, 2))
        expected = sts.boost(u, SplitComplex(3, 0)) + SplitComplex(1, 2)
        self.assertAlmostEqual(gamma.eval(3).t, expected.t)
        self.assertAlmostEqual(gamma.eval(3).x, expected.x)

        plus, minus = sto.Rindler(1.0).boosted(u).null_range()
        self.assertEqual(plus.lower, 0.0)

    def test_piecewise_linear(self):
        gamma = sto.PiecewiseLinear([(0, 0), (1, 0.5), (2, 0.5)])
        self.assertEqual(gamma.eval(0.5), SplitComplex(0.5, 0.25))
        # right hand slope at a vertex
        self.assertEqual(gamma.derivative(1.0), SplitComplex(1, 0))
        self.assertEqual(gamma.derivative(2.0), SplitComplex(1, 0))
        self.assertIs(gamma.smoothness, sto.Smoothness.C0)

        with self.assertRaises(DomainExceeded):
            gamma.eval(2.5)

    def test_piecewise_linear_needs_increasing_time(self):
        with self.assertRaises(InvalidObserver):
            sto.PiecewiseLinear([(0, 0), (0, 1)])
        with self.assertRaises(InvalidObserver):
            sto.PiecewiseLinear([(0, 0)])

    def test_finite_difference_velocity(self):
        class Parabola(sto.Observer):
            kind = 'parabola'

            def position(self, s):
                s = np.asarray(s, dtype=float)
                return 2 * s, s * s / 4

            def null_range(self):
                return sto.Interval.real_line(), sto.Interval.real_line()

        derivative = Parabola().derivative(1.0)
        self.assertAlmostEqual(derivative.t, 2.0, places=8)
        self.assertAlmostEqual(derivative.x, 0.5, places=8)

    def test_lip_status(self):
        self.assertIs(sto.lip_status(sto.Inertial(0.3)).status,
                      sto.LipStatus.VERIFIED)

        report = sto.lip_status(sto.Rindler(1.0))
        self.assertIs(report.status, sto.LipStatus.FAILS_LIP)
        self.assertIn('t+x', report.reason)

        sampled = sto.PiecewiseLinear([(0, 0), (1, 0.2)])
        self.assertIs(sto.lip_status(sampled).status, sto.LipStatus.WINDOW_ONLY)

    def test_lip_status_of_sums(self):
        # t +- x of this sum run backwards where |2 cos s| > 1
        gamma = sto.Inertial(0) + sto.Oscillation(2.0, 1.0)
        report = sto.lip_status(gamma)
        self.assertIs(report.status, sto.LipStatus.UNKNOWN)
        self.assertIn('rate', report.reason)
        with self.assertRaises(NotTimelike):
            sto.verify_observer(gamma, (-3, 3), 60)

        # e^s + s and s - e^{-s} are increasing surjections
        accelerated = sto.Rindler(1.0) + sto.Inertial(0)
        self.assertIs(sto.lip_status(accelerated).status, sto.LipStatus.VERIFIED)
        sto.verify_observer(accelerated, (-3, 3), 60)

    def test_null_coords(self):
        self.assertEqual(sto.null_coords(sto.Inertial(0), 2.0), (2.0, 2.0))


class VerifyObserverTest(dt.SimpleTestCase):
    def test_inertial_margin(self):
        report = sto.verify_observer(sto.Inertial(0), (-1, 1), 21, seed=1)
        self.assertAlmostEqual(report.min_margin, 0.1 ** 2)
        self.assertEqual(report.seed, 1)

    def test_rindler_passes(self):
        report = sto.verify_observer(sto.Rindler(1.0), (-2, 2), 100)
        self.assertGreater(report.min_margin, 0)

    def test_perturbed_inertial_passes(self):
        sto.verify_observer(sto.PerturbedInertial(0.5, 1.5), (-5, 5), 200)

    def test_oscillation_fails(self):
        with self.assertRaises(NotTimelike) as cm:
            sto.verify_observer(sto.Oscillation(1.0, 1.0), (0, 1), 10)
        self.assertIsNotNone(cm.exception.pair)

    def test_spacelike_segment_fails(self):
        gamma = sto.PiecewiseLinear([(0, 0), (1, 2), (2, 2)])
        with self.assertRaises(NotTimelike):
            sto.verify_observer(gamma, (0, 2), 10)

    def test_invalid_window(self):
        with self.assertRaises(ValueError):
            sto.verify_observer(sto.Inertial(0), (1, 0), 10)

    @settings(max_examples=30)
    @given(velocities, components, components)
    def test_boosted_and_translated_stay_observers(self, v, t, x):
        for base in (sto.Inertial(0.3), sto.PerturbedInertial(0.4, 1.5)):
            gamma = base.boosted(sts.two_velocity(v)).translated((t, x))

            self.assertIs(sto.lip_status(gamma).status, sto.LipStatus.VERIFIED)
            report = sto.verify_observer(gamma, (-3, 3), 50, seed=2)
            self.assertGreater(report.min_margin, 0)


class MWMapTest(dt.SimpleTestCase):
    def test_identity_worldline(self):
        m = MWMap(sto.Inertial(0))
        for z in random_events(20):
            self.assertLessEqual((m.eval(z) - z).euclidean_norm(), 1e-14)
            self.assertLessEqual((m.radar_inverse(z) - z).euclidean_norm(), 1e-10)

    def test_axis_restriction(self):
        gamma = sto.PerturbedInertial(0.4, 2.0)
        m = MWMap(gamma)
        for s in np.linspace(-3, 3, 13):
            self.assertEqual(m.eval(SplitComplex(s, 0)), gamma.eval(s))

    def test_rindler_closed_form(self):
        a = 0.7
        m = MWMap(sto.Rindler(a))
        for z in random_events(20, low=-1, high=1):
            expected = sts.exp(SplitComplex(0, a) * z) * SIGMA / a
            value = m.eval(z)
            self.assertAlmostEqual(value.t, expected.t, places=10)
            self.assertAlmostEqual(value.x, expected.x, places=10)

    def test_geometric_matches_formula(self):
        m = MWMap(sto.PerturbedInertial(0.3, 1.7))
        for z in random_events(100):
            delta = m.eval(z) - m.eval_geometric(z)
            self.assertLessEqual(delta.euclidean_norm(), 1e-12)

        self.assertEqual(MWMap(sto.Rindler(1.0)).eval_geometric(sts.ZERO),
                         SplitComplex(0, 1))

    def test_components_match_scalar(self):
        m = MWMap(sto.Rindler(1.0))
        t = np.array([0.1, -0.5])
        x = np.array([0.3, 0.2])
        omega_t, omega_x = m.eval_components(t, x)
        self.assertAlmostEqual(omega_t[1], m.eval((-0.5, 0.2)).t)
        self.assertAlmostEqual(omega_x[0], m.eval((0.1, 0.3)).x)

    def test_radar_round_trip(self):
        m = MWMap(sto.PerturbedInertial(0.3, 1.7))
        for z in random_events(50):
            back = m.radar_inverse(m.eval(z))
            self.assertLessEqual((back - z).euclidean_norm(), 1e-9)

    def test_rindler_round_trip_in_wedge(self):
        m = MWMap(sto.Rindler(1.0))
        for z in random_events(20, low=-2, high=2):
            back = m.radar_inverse(m.eval(z))
            self.assertLessEqual((back - z).euclidean_norm(), 1e-9)

    def test_no_radar_coordinate(self):
        with self.assertRaises(NoRadarCoordinate) as cm:
            MWMap(sto.Rindler(1.0)).radar_inverse((0, -1))
        self.assertEqual(cm.exception.event, SplitComplex(0, -1))

    def test_piecewise_window(self):
        gamma = sto.PiecewiseLinear([(0, 0), (1, 0.5), (4, 0.5)])
        m = MWMap(gamma)
        z = SplitComplex(2, 0.5)
        self.assertLessEqual((m.radar_inverse(m.eval(z)) - z).euclidean_norm(), 1e-9)

        with self.assertRaises(DomainExceeded):
            m.eval((3.8, 0.5))

    def test_rindler_derivative(self):
        m = MWMap(sto.Rindler(1.0))
        for z in random_events(10, low=-1, high=1):
            expected = sts.exp(SplitComplex(z.x, z.t))
            derivative = m.mw_derivative(z)
            self.assertAlmostEqual(derivative.t, expected.t, places=10)
            self.assertAlmostEqual(derivative.x, expected.x, places=10)
            self.assertAlmostEqual(m.conformal_factor(z), math.exp(2 * z.x),
                                   places=9)

    def test_inertial_factor(self):
        m = MWMap(sto.Inertial(0.8))
        self.assertAlmostEqual(m.conformal_factor((1.2, -3)), 1.0)
        self.assertEqual(MWMap(sto.Inertial(0)).mw_derivative((4, 2)), sts.ONE)

    def test_finite_difference_converges(self):
        m = MWMap(sto.PerturbedInertial(0.4, 1.3))
        z = SplitComplex(0.7, 0.2)
        exact = m.mw_derivative(z)
        errors = [
            (m.mw_derivative(z, DerivativeMode.FINITE_DIFF, h) - exact).euclidean_norm()
            for h in (1e-2, 5e-3)
        ]
        order = math.log2(errors[0] / errors[1])
        self.assertGreater(order, 1.8)
        self.assertLess(order, 2.2)

    def test_not_differentiable(self):
        m = MWMap(sto.PiecewiseLinear([(0, 0), (1, 0.5), (2, 0.5)]))
        with self.assertRaises(NotDifferentiable):
            m.mw_derivative((1, 0.1))

        value = m.mw_derivative((1, 0.1), DerivativeMode.FINITE_DIFF, 1e-3)
        self.assertGreater(value.t, 0)

    def test_degenerate_factor(self):
        m = MWMap(sto.Oscillation(1.0, 1.0))
        with self.assertRaises(DegenerateFactor):
            m.conformal_factor((0, 0))

    def test_null_image_property(self):
        m = MWMap(sto.PerturbedInertial(0.3, 2.0))
        level = 0.4
        t = np.linspace(-3, 3, 100)
        image_t, image_x = m.eval_components(t, t - level)
        differences = image_t - image_x
        self.assertLessEqual(np.ptp(differences), 1e-10)

    def test_causal_morphism(self):
        m = MWMap(sto.PerturbedInertial(0.3, 2.0))
        rng, = spawn_generators(11, 1)
        checked = 0
        for _ in range(500):
            z1 = SplitComplex(*rng.uniform(-3, 3, 2))
            z2 = SplitComplex(*rng.uniform(-3, 3, 2))
            if stc.chron_precedes(z1, z2):
                checked += 1
                self.assertTrue(stc.chron_precedes(m.eval(z1), m.eval(z2)))
        self.assertGreater(checked, 50)
