#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
This script cross-checks the transition oracles and the structural predictions
"""
from neps_command import NepsCommand, EXIT_OK, EXIT_CHECK_FAILED
from neps_tools.pst import verify_suite
from neps_tools.spectral import TauTime


class VerifyCommand(NepsCommand):
    name = 'verify'
    help = 'Product formula vs spectral decomposition vs series, single-row blocks and predicted blocks'

    def __init__(self, *args, omega_file=None, times=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.omega_file = omega_file
        self.times = times

    @classmethod
    def add_arguments(cls, parser):
        cls.add_omega_argument(parser)
        parser.add_argument('--time', dest='times', action='append', metavar='tau:K|FLOAT',
                            help='Time to compare the oracles at. Can specify multiple --time\'s. '
                                 'Default: tau:k for the minimum row weight k, 0.7 and 2.5')

    def execute(self):
        self.check_out_dir(self.out_file)
        times = [TauTime.parse(text) for text in self.times] if self.times else None
        omega = self.load_basis(self.omega_file)
        self.check_size(omega.n)

        checks = verify_suite(omega, times, logger=self.logger)
        failed = [check.name for check in checks if not check.holds]
        self.write_output({
            'omega': omega.to_dict(),
            'checks': [check.to_dict() for check in checks],
            'all_hold': not failed
        })
        if failed:
            self.logger.error(f'Failed checks: {", ".join(failed)}')
            return EXIT_CHECK_FAILED
        self.logger.info(f'All {len(checks)} checks hold')
        return EXIT_OK
