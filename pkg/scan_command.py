#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
This script enumerates every small basis and looks for PST the sufficient condition misses
"""
from neps_command import NepsCommand, EXIT_OK
from neps_tools.pst import scan_bases, SCAN_MAX_N


class ScanCommand(NepsCommand):
    name = 'scan'
    help = f'Exhaustive evidence table over all bases with n <= {SCAN_MAX_N}'

    def __init__(self, *args, n=None, max_m=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.n = n
        self.max_m = max_m

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--n', dest='n', type=int, required=True, help=f'Number of P3 factors (1..{SCAN_MAX_N})')
        parser.add_argument('--max-m', dest='max_m', type=int, required=False,
                            help='Only bases with at most this many rows. Default: all')

    def execute(self):
        self.check_out_dir(self.out_file)
        result = scan_bases(self.n, self.max_m, self.tol, logger=self.logger)
        summary = result['summary']
        self.logger.info(f'{summary["pst_connected"]} connected bases with PST, '
                         f'{summary["missed"]} outside the sufficient condition')
        self.write_output(result)
        return EXIT_OK
