#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
neps-pst: perfect state transfer on NEPS of the path P3
"""
import sys
from neps_command import run_command
from analyze_command import AnalyzeCommand
from construct_basis_command import ConstructBasisCommand
from transition_command import TransitionCommand
from verify_command import VerifyCommand
from components_command import ComponentsCommand
from scan_command import ScanCommand
from lift_command import LiftCommand

COMMANDS = [AnalyzeCommand, ConstructBasisCommand, TransitionCommand, VerifyCommand, ComponentsCommand,
            ScanCommand, LiftCommand]


def main(argv=None, stdout=None):
    return run_command(COMMANDS, argv, stdout=stdout, description=__doc__)


if __name__ == '__main__':
    sys.exit(main())
