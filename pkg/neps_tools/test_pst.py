import logging
import math
from itertools import combinations
from unittest import TestCase, mock
import numpy as np
import scipy.linalg
from .gf2 import (ALL_EVEN, ALL_ODD, Basis, BitVector, augment_identity, complement_identity_basis,
                  construct_basis, identity_basis, min_weight_subset, odd_weight_vectors, parity_class, weight)
from .graphs import center_index, complete_graph, endpoint_indices, kron, neps_adjacency
from .pst import (FLIP, PremiseError, center, check_pst, coordinate_m3, find_pst_pairs, lemma2_check, m3,
                  predict_m3, scan_bases, sufficient_condition, theorem_f7_classify, theorem_f8_reduce,
                  theorem_f9_check, verify_suite)
from .pst_report import PERIODIC, PST, PstReport, clean_phase
from .spectral import TauTime, max_residual, p3_spectral, product_transition, transition_matrix

P3_AT_TAU1 = transition_matrix(p3_spectral(), TauTime.tau(1))


def vectors_of_weight(n, k):
    return [BitVector(n, word) for word in range(1, 1 << n) if bin(word).count('1') == k]


def random_uniform_basis(rng, n):
    k = int(rng.integers(1, n + 1))
    candidates = vectors_of_weight(n, k)
    m = int(rng.integers(1, len(candidates) + 1))
    picks = rng.choice(len(candidates), size=m, replace=False)
    return Basis(n, [candidates[int(i)] for i in sorted(picks)])


def random_parity_basis(rng, n, parity):
    candidates = [BitVector(n, word) for word in range(1, 1 << n) if bin(word).count('1') % 2 == parity]
    m = int(rng.integers(1, len(candidates) + 1))
    picks = rng.choice(len(candidates), size=m, replace=False)
    return Basis(n, [candidates[int(i)] for i in sorted(picks)])


class TestCenterAndM3(TestCase):
    def test_center(self):
        self.assertEqual(1, center(np.eye(3)))
        self.assertEqual(-1, center(P3_AT_TAU1).real)
        with self.assertRaises(PremiseError):
            center(np.eye(4))

    def test_kronecker_center(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            a = rng.normal(size=(3, 3))
            b = rng.normal(size=(5, 5))
            self.assertAlmostEqual(center(a) * center(b), center(kron(a, b)))
            np.testing.assert_allclose(center(a) * m3(b), m3(kron(a, b)), atol=1e-12)

    def test_m3(self):
        a = np.arange(9).reshape(3, 3)
        np.testing.assert_array_equal(a, m3(a))
        np.testing.assert_array_equal([[6, 7, 8], [11, 12, 13], [16, 17, 18]], m3(np.arange(25).reshape(5, 5)))
        with self.assertRaises(PremiseError):
            m3(np.eye(1))
        with self.assertRaises(PremiseError):
            m3(np.eye(4))
        with self.assertRaises(PremiseError):
            m3(np.zeros((3, 5)))

    def test_coordinate_m3_last(self):
        matrix = product_transition(complement_identity_basis(3), 0.4)
        np.testing.assert_array_equal(m3(matrix), coordinate_m3(matrix, 3, 3))

    def test_single_row_blocks(self):
        for n in range(1, 5):
            for word in range(1, 1 << n):
                beta = BitVector(n, word)
                expected, residual, reversal = lemma2_check(beta)
                self.assertLessEqual(residual, 1e-10, str(beta))
                self.assertLessEqual(reversal, 1e-10, str(beta))
                if beta.bit(n):
                    np.testing.assert_array_equal(-FLIP, expected)
                else:
                    np.testing.assert_array_equal(-np.eye(3), expected)

    def test_involution(self):
        for text in ['1', '11', '101', '0111']:
            block = predict_m3(Basis.from_strings([text]), len(text))
            np.testing.assert_array_equal(np.eye(3), block @ block)


class TestPredictM3(TestCase):
    def test_examples(self):
        np.testing.assert_array_equal(FLIP, predict_m3(identity_basis(2), 1))
        for j in range(1, 5):
            np.testing.assert_array_equal(FLIP, predict_m3(complement_identity_basis(4), j))
        for j in range(1, 4):
            np.testing.assert_array_equal(-np.eye(3), predict_m3(complement_identity_basis(3), j))

    def test_errors(self):
        with self.assertRaises(PremiseError):
            predict_m3(Basis.from_strings(['100', '111']), 1)
        with self.assertRaises(PremiseError):
            predict_m3(identity_basis(3), 4)

    def test_agrees_with_numeric_blocks(self):
        rng = np.random.default_rng(8)
        for _ in range(30):
            omega = random_uniform_basis(rng, int(rng.integers(1, 5)))
            matrix = product_transition(omega, TauTime.tau(weight(omega[0])))
            for j in range(1, omega.n + 1):
                residual = max_residual(coordinate_m3(matrix, omega.n, j), predict_m3(omega, j))
                self.assertLessEqual(residual, 1e-9, f'{omega} j={j}')
            c = center_index(omega.n)
            self.assertAlmostEqual(1.0, abs(matrix[c, c]), delta=1e-10)


class TestCheckPst(TestCase):
    def test_p3(self):
        check = check_pst(P3_AT_TAU1, 0, 2)
        self.assertTrue(check.verdict)
        self.assertAlmostEqual(1.0, check.magnitude)
        self.assertAlmostEqual(math.pi, clean_phase(check.phase))
        check = check_pst(P3_AT_TAU1, 0, 1)
        self.assertFalse(check.verdict)
        self.assertAlmostEqual(0.0, check.magnitude)
        self.assertTrue(check_pst(P3_AT_TAU1, 1, 1).verdict)

    def test_identity(self):
        check = check_pst(np.eye(3, dtype=complex), 1, 1)
        self.assertTrue(check.verdict)
        self.assertEqual(0.0, check.phase)

    def test_negative_zero_imaginary(self):
        check = check_pst(np.array([[complex(-1.0, -0.0)]]), 0, 0)
        self.assertTrue(check.verdict)
        self.assertEqual(math.pi, check.phase)
        self.assertAlmostEqual(math.pi, clean_phase(-math.pi))
        self.assertAlmostEqual(-math.pi / 2, clean_phase(-math.pi / 2))

    def test_symmetric(self):
        matrix = product_transition(Basis.from_strings(['110', '011']), 1.3)
        for u, v in [(0, 5), (3, 26), (13, 4)]:
            self.assertEqual(check_pst(matrix, u, v).verdict, check_pst(matrix, v, u).verdict)
            self.assertAlmostEqual(check_pst(matrix, u, v).magnitude, check_pst(matrix, v, u).magnitude)

    def test_out_of_range(self):
        with self.assertRaises(PremiseError):
            check_pst(P3_AT_TAU1, 0, 3)
        with self.assertRaises(PremiseError):
            check_pst(P3_AT_TAU1, -1, 0)

    def test_find_pairs(self):
        self.assertEqual([[0, 2]], find_pst_pairs(P3_AT_TAU1))


class TestUniformClassification(TestCase):
    def test_cartesian_products(self):
        for n in (2, 3):
            report = theorem_f7_classify(identity_basis(n))
            self.assertEqual(TauTime.tau(1), report.time)
            self.assertEqual(list(range(1, n + 1)), [claim.j for claim in report.pst_pairs])
            for claim in report.pst_pairs:
                self.assertEqual(endpoint_indices(n, claim.j), (claim.u, claim.v))
                self.assertTrue(claim.verified)
                self.assertAlmostEqual(1.0, claim.magnitude, delta=1e-9)

    def test_complement_identity_even(self):
        report = theorem_f7_classify(complement_identity_basis(4))
        self.assertEqual(TauTime.tau(3), report.time)
        self.assertEqual(4, len(report.pst_pairs))
        for claim in report.pst_pairs:
            self.assertTrue(claim.verified)
            self.assertAlmostEqual(1.0, claim.magnitude, delta=1e-9)
            self.assertEqual(1, claim.expected)
        self.assertTrue(report.claims_verified)
        self.assertTrue(all(entry['agrees'] for entry in report.structural))

    def test_complement_identity_odd(self):
        omega = complement_identity_basis(3)
        report = theorem_f7_classify(omega)
        self.assertEqual(TauTime.tau(2), report.time)
        self.assertEqual([], report.pst_pairs)
        periodic = [claim for claim in report.claims if claim.kind == PERIODIC]
        self.assertEqual(7, len(periodic))
        self.assertIn(center_index(3), [claim.u for claim in periodic if claim.j is None])
        for claim in periodic:
            self.assertEqual(claim.u, claim.v)
            self.assertTrue(claim.verified)
            self.assertAlmostEqual(1.0, claim.magnitude, delta=1e-9)
        matrix = product_transition(omega, TauTime.tau(2))
        for j in range(1, 4):
            u, v = endpoint_indices(3, j)
            self.assertLess(abs(matrix[u, v]), 1 - 1e-6)

    def test_structural_only_above_cap(self):
        report = theorem_f7_classify(complement_identity_basis(4), numeric_max_n=3)
        self.assertTrue(all(claim.verified is None for claim in report.claims))
        self.assertTrue(report.claims_verified)
        self.assertTrue(report.notes)

    def test_non_uniform(self):
        with self.assertRaises(PremiseError):
            theorem_f7_classify(Basis.from_strings(['100', '111']))


class TestReduction(TestCase):
    def test_odd_augmentation(self):
        omega = Basis.from_strings(['100', '010', '001', '111'])
        omega_star, residual = theorem_f8_reduce(omega)
        self.assertEqual(identity_basis(3), omega_star)
        self.assertLessEqual(residual, 1e-9)
        matrix = product_transition(omega, TauTime.tau(1))
        expected = find_pst_pairs(product_transition(identity_basis(3), TauTime.tau(1)))
        self.assertEqual(expected, find_pst_pairs(matrix))
        for j in range(1, 4):
            self.assertTrue(check_pst(matrix, *endpoint_indices(3, j)).verdict)

    def test_all_augmentations(self):
        extra = odd_weight_vectors(4)
        for size in range(1, len(extra) + 1):
            for rows in combinations(extra, size):
                omega = augment_identity(4, rows)
                omega_star, residual = theorem_f8_reduce(omega)
                self.assertEqual(identity_basis(4), omega_star)
                self.assertLessEqual(residual, 1e-9, str(omega))

    def test_already_reduced(self):
        omega = complement_identity_basis(4)
        self.assertEqual((omega, 0.0), theorem_f8_reduce(omega))

    def test_mixed_parity(self):
        omega = Basis(4, list(identity_basis(4)) + [BitVector.from_string('1110'), BitVector.from_string('1111')])
        with self.assertRaises(PremiseError):
            theorem_f8_reduce(omega)

    def test_random(self):
        rng = np.random.default_rng(99)
        for parity in (1, 0):
            for _ in range(25):
                omega = random_parity_basis(rng, int(rng.integers(2, 5)), parity)
                self.assertEqual(ALL_ODD if parity else ALL_EVEN, parity_class(omega))
                omega_star, residual = theorem_f8_reduce(omega)
                self.assertEqual(min_weight_subset(omega)[1], omega_star)
                self.assertLessEqual(residual, 1e-9, str(omega))


class TestSufficientCondition(TestCase):
    def test_constructed_bases(self):
        for n, k in [(4, 3), (5, 3), (6, 5)]:
            report = sufficient_condition(construct_basis(n, k))
            self.assertTrue(report.premises_hold, f'n={n} k={k}')
            self.assertEqual(TauTime.tau(k), report.time)
            self.assertTrue(report.pst_pairs)
            self.assertTrue(all(claim.verified for claim in report.pst_pairs), f'n={n} k={k}')

    def test_constructed_small(self):
        for n in range(2, 6):
            for k in range(1, n, 2):
                report = sufficient_condition(construct_basis(n, k))
                self.assertTrue(report.premises_hold, f'n={n} k={k}')
                for claim in report.pst_pairs:
                    self.assertAlmostEqual(1.0, claim.magnitude, delta=1e-9)

    def test_disconnected(self):
        report = sufficient_condition(Basis.from_strings(['11']))
        self.assertFalse(report.connected)
        self.assertEqual(['rank_equals_n'], report.failed_premises)

    def test_zero_column_sum(self):
        report = sufficient_condition(Basis.from_strings(['110', '011', '101']))
        self.assertEqual(ALL_EVEN, report.parity)
        self.assertEqual(2, report.k)
        self.assertEqual('000', str(report.column_sum))
        self.assertEqual(['rank_equals_n', 'omega_star_column_sum_nonzero'], report.failed_premises)
        self.assertEqual([], report.pst_pairs)
        self.assertTrue(report.claims)
        self.assertTrue(all(claim.kind == PERIODIC and claim.verified for claim in report.claims))
        self.assertTrue(any('periodic' in note for note in report.notes))

    def test_mixed_parity(self):
        report = sufficient_condition(Basis.from_strings(['10', '11']))
        self.assertIn('uniform_parity', report.failed_premises)
        self.assertEqual([], report.claims)

    def test_reduction_residual(self):
        report = sufficient_condition(Basis.from_strings(['100', '010', '001', '111']))
        self.assertTrue(report.premises_hold)
        self.assertEqual(identity_basis(3), report.omega_star)
        self.assertLessEqual(report.f8_residual, 1e-9)
        self.assertEqual(3, len(report.pst_pairs))
        self.assertTrue(report.claims_verified)

    def test_reduction_failure(self):
        omega = Basis.from_strings(['100', '010', '001', '111'])
        with mock.patch('neps_tools.pst.theorem_f8_reduce', return_value=(identity_basis(3), 0.5)) as reduce:
            report = sufficient_condition(omega)
        reduce.assert_called_once()
        self.assertEqual(0.5, report.f8_residual)
        self.assertTrue(report.premises_hold)
        self.assertFalse(report.reduction_holds)
        self.assertFalse(report.claims_verified)
        self.assertTrue(any('minimum-weight rows' in note for note in report.notes))

    def test_reduction_tolerance(self):
        report = PstReport(identity_basis(2))
        self.assertTrue(report.claims_verified)
        report.f8_residual = 1e-10
        self.assertTrue(report.claims_verified)
        report.f8_residual = 2e-9
        self.assertFalse(report.claims_verified)

    def test_report_dict(self):
        data = sufficient_condition(complement_identity_basis(4)).to_dict()
        self.assertEqual({'tau_k': 3}, data['time'])
        first = data['claims'][0]
        self.assertEqual(PST, first['kind'])
        self.assertEqual('1,2,2,2', first['u_label'])
        self.assertEqual('3,2,2,2', first['v_label'])
        self.assertEqual(1.0, first['magnitude'])
        self.assertIsNone(data['f8_residual'])
        self.assertNotIn('lift', data)


class TestKroneckerLift(TestCase):
    def test_complete_four(self):
        report = theorem_f9_check(complement_identity_basis(4), complete_graph(4), 1)
        self.assertTrue(report.premises_hold)
        self.assertEqual(TauTime.tau(3), report.time)
        self.assertEqual(16, len(report.pst_pairs))
        for claim in report.pst_pairs:
            self.assertTrue(claim.verified)
            self.assertAlmostEqual(1.0, claim.magnitude, delta=1e-9)
        self.assertEqual([-1.0, 3.0], report.lift['g_eigenvalues'])
        self.assertEqual(1, report.lift['product_components'])
        self.assertEqual('1,2,2,2;3', report.pst_pairs[3].to_dict()['u_label'])

    def test_complete_three_rejected(self):
        report = theorem_f9_check(complement_identity_basis(4), complete_graph(3), 1)
        self.assertEqual(['eigenvalue_ratios_odd'], report.failed_premises)
        self.assertEqual([], report.claims)

    def test_complete_two_against_expm(self):
        omega = identity_basis(2)
        report = theorem_f9_check(omega, complete_graph(2), 1)
        self.assertTrue(report.premises_hold)
        self.assertTrue(report.claims_verified)
        self.assertEqual(4, len(report.pst_pairs))
        self.assertTrue(report.lift['g_bipartite'])
        self.assertEqual(2, report.lift['product_components'])
        adjacency = kron(neps_adjacency(omega), complete_graph(2))
        expected = scipy.linalg.expm(-1j * TauTime.tau(1).seconds * adjacency)
        for claim in report.pst_pairs:
            self.assertAlmostEqual(1.0, abs(expected[claim.u, claim.v]), delta=1e-9)
            self.assertAlmostEqual(claim.magnitude, abs(expected[claim.u, claim.v]), delta=1e-9)

    def test_scaled_r(self):
        report = theorem_f9_check(identity_basis(2), 2 * complete_graph(2), 2)
        self.assertTrue(report.premises_hold)
        self.assertEqual(TauTime.tau(1, 0.5), report.time)
        self.assertTrue(all(claim.verified for claim in report.pst_pairs))

    def test_zero_r(self):
        with self.assertRaises(PremiseError):
            theorem_f9_check(identity_basis(2), complete_graph(2), 0)


class TestVerifySuite(TestCase):
    def test_all_hold(self):
        for omega in (complement_identity_basis(3), Basis.from_strings(['100', '010', '001', '111']),
                      Basis.from_strings(['10', '11'])):
            checks = verify_suite(omega, logger=logging.getLogger('neps-pst-test'))
            failed = [check.name for check in checks if not check.holds]
            self.assertEqual([], failed, str(omega))

    def test_names(self):
        names = [check.name for check in verify_suite(identity_basis(2), [TauTime.from_value(0.7)])]
        self.assertIn('product_vs_series@0.7', names)
        self.assertIn('single_row_block[10]', names)
        self.assertIn('predicted_block[j=2]', names)
        self.assertNotIn('reduction_to_min_weight', names)


class TestScan(TestCase):
    def test_single_factor(self):
        result = scan_bases(1)
        self.assertEqual(1, len(result['rows']))
        row = result['rows'][0]
        self.assertEqual(['1'], row['omega'])
        self.assertTrue(row['premises_hold'])
        self.assertTrue(row['pst_found'])

    def test_two_factors(self):
        result = scan_bases(2)
        self.assertEqual(7, result['summary']['bases'])
        rows = {tuple(row['omega']): row for row in result['rows']}
        self.assertTrue(rows[('01', '10')]['pst_found'])
        self.assertTrue(rows[('01', '10')]['premises_hold'])
        self.assertFalse(rows[('11',)]['connected'])
        self.assertFalse(rows[('11',)]['missed'])
        self.assertEqual(0, result['summary']['unconfirmed'])
        for row in result['rows']:
            omega = Basis.from_strings(row['omega'])
            if row['premises_hold']:
                pairs = [[claim.u, claim.v] for claim in theorem_f7_classify(min_weight_subset(omega)[1]).pst_pairs]
                self.assertTrue(all(pair in row['pst_pairs'] for pair in pairs), str(omega))

    def test_row_cap(self):
        self.assertEqual(3, scan_bases(2, max_m=1)['summary']['bases'])

    def test_too_large(self):
        with self.assertRaises(PremiseError):
            scan_bases(4)
        with self.assertRaises(PremiseError):
            scan_bases(0)
