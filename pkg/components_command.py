#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
This script counts the components of a NEPS of P3 and compares with the GF(2) rank
"""
from neps_command import NepsCommand, EXIT_OK, EXIT_CHECK_FAILED
from neps_tools.gf2 import rank_gf2
from neps_tools.graphs import (neps_adjacency, connected_components, component_sizes, real_matrix_to_dict,
                               matrix_csv_rows)


class ComponentsCommand(NepsCommand):
    name = 'components'
    help = 'Breadth-first component count of the NEPS next to the rank criterion'

    def __init__(self, *args, omega_file=None, labels=False, adjacency_file=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.omega_file = omega_file
        self.labels = labels
        self.adjacency_file = adjacency_file

    @classmethod
    def add_arguments(cls, parser):
        cls.add_omega_argument(parser)
        parser.add_argument('--labels', dest='labels', action='store_true',
                            help='Include the component id of every vertex')
        parser.add_argument('--adjacency', dest='adjacency_file', required=False, metavar='FILE',
                            help='Also write the adjacency matrix (JSON, or CSV for a .csv file name)')

    def execute(self):
        self.check_out_dir(self.out_file)
        self.check_out_dir(self.adjacency_file)
        omega = self.load_basis(self.omega_file)
        self.check_size(omega.n)
        adjacency = neps_adjacency(omega)
        count, labels = connected_components(adjacency)
        rank = rank_gf2(omega)
        agrees = (count == 1) == (rank == omega.n)
        data = {
            'n': omega.n,
            'count': count,
            'sizes': component_sizes(labels),
            'rank': rank,
            'rank_predicts_connected': rank == omega.n,
            'connected': count == 1,
            'agrees': agrees
        }
        if self.labels:
            data['labels'] = labels
        self.write_output(data)
        if self.adjacency_file:
            if self.adjacency_file.lower().endswith('.csv'):
                self.write_csv(self.adjacency_file, matrix_csv_rows(adjacency))
            else:
                self.write_output(real_matrix_to_dict(adjacency), self.adjacency_file)
        if not agrees:
            self.logger.error(f'{count} component(s) but rank {rank} of {omega.n}')
            return EXIT_CHECK_FAILED
        return EXIT_OK
