#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
This script writes a connected basis whose NEPS of P3 has PST at tau_k
"""
from neps_command import NepsCommand, EXIT_OK
from neps_tools.gf2 import construct_basis, rank_gf2, weight


class ConstructBasisCommand(NepsCommand):
    name = 'construct-basis'
    help = 'Write an n-row basis with every row of odd weight k < n and GF(2) rank n'

    def __init__(self, *args, n=None, k=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.n = n
        self.k = k

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--n', dest='n', type=int, required=True, help='Number of P3 factors (n >= 2)')
        parser.add_argument('--k', dest='k', type=int, required=True, help='Row weight (odd, k < n)')

    def execute(self):
        self.check_out_dir(self.out_file)
        omega = construct_basis(self.n, self.k)
        rank = rank_gf2(omega)
        weights = sorted({weight(row) for row in omega})
        self.logger.info(f'Constructed {omega.m} rows of weight {weights} with rank {rank}')
        self.write_output(omega.to_dict())
        if self.out_file:
            self.echo(f'rank {rank} of {omega.n}; all {omega.m} rows have weight {self.k}')
        return EXIT_OK
