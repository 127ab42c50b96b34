#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
This script checks PST on the Kronecker product of a NEPS of P3 with a graph G
"""
import os
from general_tools.file_utils import load_document
from neps_command import NepsCommand, InputError, EXIT_OK, EXIT_PREMISE_FAILED, EXIT_CHECK_FAILED
from neps_tools.graphs import complete_graph, real_matrix_from_dict
from neps_tools.pst import theorem_f9_check


class LiftCommand(NepsCommand):
    name = 'lift'
    help = 'PST on NEPS x G at tau_k / r when every eigenvalue of G over r is an odd integer'

    def __init__(self, *args, omega_file=None, graph=None, r=1.0, **kwargs):
        super().__init__(*args, **kwargs)
        self.omega_file = omega_file
        self.graph = graph
        self.r = r

    @classmethod
    def add_arguments(cls, parser):
        cls.add_omega_argument(parser)
        parser.add_argument('--graph', dest='graph', required=True, metavar='complete:M|FILE',
                            help='complete:M for K_M, or a matrix file {"order": N, "entries": [[...]]}')
        parser.add_argument('--r', dest='r', type=float, default=1.0, help='Eigenvalue divisor r. Default: 1')

    def load_graph(self):
        if self.graph.startswith('complete:'):
            try:
                m = int(self.graph[len('complete:'):])
            except ValueError:
                raise InputError(f'Cannot parse graph "{self.graph}": expected complete:<M>')
            return complete_graph(m)
        if not os.path.isfile(self.graph):
            raise InputError(f'Graph file not found: {self.graph}')
        return real_matrix_from_dict(load_document(self.graph))

    def execute(self):
        self.check_out_dir(self.out_file)
        omega = self.load_basis(self.omega_file)
        self.check_size(omega.n)
        graph = self.load_graph()
        report = theorem_f9_check(omega, graph, self.r, self.tol, numeric_max_n=self.max_n)
        self.write_output(report.to_dict())
        if not report.claims_verified:
            self.logger.error('Some lifted claims failed numeric verification')
            return EXIT_CHECK_FAILED
        if not report.premises_hold:
            self.logger.warning(f'Premises failing: {", ".join(report.failed_premises)}')
            return EXIT_PREMISE_FAILED
        return EXIT_OK
