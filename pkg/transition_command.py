#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
This script writes the transition matrix H(t) of a NEPS of P3
"""
from neps_command import NepsCommand, EXIT_OK, EXIT_CHECK_FAILED
from neps_tools.pst import UNITARY_TOL
from neps_tools.spectral import (product_transition, unitarity_residual, complex_matrix_to_dict,
                                 magnitude_csv_rows)


class TransitionCommand(NepsCommand):
    name = 'transition'
    help = 'Write H(t) = exp(-itA) as the product of per-row transition matrices'

    def __init__(self, *args, omega_file=None, time=None, csv_file=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.omega_file = omega_file
        self.time = time
        self.csv_file = csv_file

    @classmethod
    def add_arguments(cls, parser):
        cls.add_omega_argument(parser)
        parser.add_argument('--time', dest='time', required=True, metavar='tau:K|FLOAT',
                            help='tau:K for pi/(sqrt 2)^K, or a decimal time')
        parser.add_argument('--csv', dest='csv_file', required=False, metavar='FILE',
                            help='Also write |H[u,v]| as CSV')

    def execute(self):
        self.check_out_dir(self.out_file)
        self.check_out_dir(self.csv_file)
        time = self.parse_time(self.time)
        omega = self.load_basis(self.omega_file)
        self.check_size(omega.n)

        self.logger.info(f'Computing H({time}) of order {3 ** omega.n}...')
        matrix = product_transition(omega, time)
        residual = unitarity_residual(matrix)
        self.write_output(complex_matrix_to_dict(matrix))
        if self.csv_file:
            self.write_csv(self.csv_file, magnitude_csv_rows(matrix))
        if self.out_file:
            self.echo(f'unitarity residual {residual:.3e}')
        self.logger.info(f'Unitarity residual {residual:.3e}')
        if residual > UNITARY_TOL:
            self.logger.error(f'Unitarity residual above {UNITARY_TOL}')
            return EXIT_CHECK_FAILED
        return EXIT_OK
