#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
This script writes the PST report for a NEPS of P3 basis
"""
from neps_command import NepsCommand, EXIT_OK, EXIT_PREMISE_FAILED, EXIT_CHECK_FAILED
from neps_tools.graphs import center_index, endpoint_indices
from neps_tools.pst import check_pst, sufficient_condition
from neps_tools.pst_report import clean_float, clean_phase
from neps_tools.spectral import product_transition


class AnalyzeCommand(NepsCommand):
    name = 'analyze'
    help = 'Premise ledger, predicted PST/periodicity at tau_k and their numeric confirmation'

    def __init__(self, *args, omega_file=None, time=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.omega_file = omega_file
        self.time = time

    @classmethod
    def add_arguments(cls, parser):
        cls.add_omega_argument(parser)
        parser.add_argument('--time', dest='time', required=False, metavar='tau:K|FLOAT',
                            help='Also check every (U_j, V_j) pair at this time')

    def execute(self):
        self.check_out_dir(self.out_file)
        check_time = self.parse_time(self.time)
        omega = self.load_basis(self.omega_file)
        if omega.n > self.max_n:
            self.logger.warning(f'n={omega.n} is above the full-matrix cap of {self.max_n}: '
                                'the report is structural only')

        report = sufficient_condition(omega, self.tol, numeric_max_n=self.max_n)
        if check_time is not None:
            self.check_size(omega.n)
            report.time_checks = self.get_time_checks(omega, check_time)
        for note in report.notes:
            self.logger.info(note)

        self.write_output(report.to_dict())
        if not report.reduction_holds:
            self.logger.error(f'Heavier rows do not act as the identity: residual {report.f8_residual:.3e}')
        if not report.claims_verified:
            self.logger.error('Some predicted claims failed numeric verification')
            return EXIT_CHECK_FAILED
        if not report.premises_hold:
            self.logger.warning(f'Premises failing: {", ".join(report.failed_premises)}')
            return EXIT_PREMISE_FAILED
        self.logger.info(f'PST at tau_{report.k} for {len(report.pst_pairs)} pair(s), all premises hold')
        return EXIT_OK

    def get_time_checks(self, omega, time):
        self.logger.info(f'Checking endpoint pairs at t={time}...')
        matrix = product_transition(omega, time)
        pairs = [(j,) + endpoint_indices(omega.n, j) for j in range(1, omega.n + 1)]
        c = center_index(omega.n)
        pairs.append((None, c, c))
        time_checks = []
        for j, u, v in pairs:
            check = check_pst(matrix, u, v, self.tol)
            time_checks.append({
                'j': j,
                'u': u,
                'v': v,
                'time': time.to_dict(),
                'magnitude': clean_float(check.magnitude),
                'phase': clean_phase(check.phase),
                'unit_modulus': check.verdict
            })
        return time_checks
