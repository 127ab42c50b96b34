#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
Base class for any neps-pst command
"""
import os
import sys
import json
import logging
import argparse
from abc import abstractmethod
from typing import Optional
from yaml import YAMLError
from general_tools.file_utils import load_document, write_file, write_csv_file, dumps_json, make_dir
from neps_tools.gf2 import Basis, BasisError
from neps_tools.graphs import GraphError
from neps_tools.spectral import SpectralError, TauTime
from neps_tools.pst import PremiseError, DEFAULT_PST_TOL, DEFAULT_MAX_N, LARGE_MAX_N

LOGGER_NAME = 'neps-pst'
LOG_DIR_ENV = 'NEPS_PST_LOG_DIR'

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_PREMISE_FAILED = 2
EXIT_CHECK_FAILED = 3

INPUT_ERRORS = (BasisError, GraphError, SpectralError, PremiseError, OSError, json.JSONDecodeError, YAMLError)


class InputError(Exception):
    pass


class NepsCommand:
    name = None
    help = None

    def __init__(self, out_file=None, tol=DEFAULT_PST_TOL, allow_large=False, log_dir=None, logger=None,
                 stdout=None, *args, **kwargs):
        self.out_file = out_file
        self.tol = tol
        self.allow_large = allow_large
        self.log_dir = log_dir
        self.logger = logger or logging.getLogger(LOGGER_NAME)
        self.stdout = stdout or sys.stdout
        self.logger_handler = None

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        pass

    @classmethod
    def add_omega_argument(cls, parser: argparse.ArgumentParser):
        parser.add_argument('--omega', dest='omega_file', required=True, metavar='FILE',
                            help='Basis file: {"n": N, "rows": ["10", "01"]} as JSON, or the same in YAML (.yaml/.yml)')

    @property
    def max_n(self):
        return LARGE_MAX_N if self.allow_large else DEFAULT_MAX_N

    def run(self) -> int:
        self.setup_logger()
        try:
            return self.execute()
        except InputError as e:
            self.logger.error(str(e))
            return EXIT_INPUT_ERROR
        except INPUT_ERRORS as e:
            self.logger.error(f'{type(e).__name__}: {e}')
            return EXIT_INPUT_ERROR
        finally:
            self.close_logger()

    @abstractmethod
    def execute(self) -> int:
        raise NotImplementedError()

    def setup_logger(self):
        log_dir = self.log_dir or os.environ.get(LOG_DIR_ENV)
        if not log_dir:
            return
        make_dir(log_dir)
        log_file = os.path.join(log_dir, f'{self.name}.log')
        self.logger_handler = logging.FileHandler(log_file)
        self.logger_handler.setLevel(logging.DEBUG)
        self.logger_handler.setFormatter(logging.Formatter('%(asctime)s %(levelname)s - %(message)s'))
        self.logger.addHandler(self.logger_handler)
        self.logger.info(f'Logging {self.name} output to {log_file}')

    def close_logger(self):
        if self.logger_handler:
            self.logger.removeHandler(self.logger_handler)
            self.logger_handler.close()
            self.logger_handler = None

    def load_basis(self, file_name) -> Basis:
        if not os.path.isfile(file_name):
            raise InputError(f'Basis file not found: {file_name}')
        self.logger.info(f'Loading basis from {file_name}...')
        basis = Basis.from_dict(load_document(file_name))
        self.logger.info(f'Basis has n={basis.n}, m={basis.m}')
        return basis

    def check_size(self, n: int):
        if n > self.max_n:
            hint = '' if self.allow_large else ' (use --allow-large to go up to {0})'.format(LARGE_MAX_N)
            raise InputError(f'n={n} is above the full-matrix cap of {self.max_n}{hint}')

    @staticmethod
    def parse_time(text: Optional[str]) -> Optional[TauTime]:
        if text is None:
            return None
        return TauTime.parse(text)

    def check_out_dir(self, file_name: Optional[str]):
        if file_name:
            out_dir = os.path.dirname(os.path.abspath(file_name))
            if os.path.exists(out_dir) and not os.path.isdir(out_dir):
                raise InputError(f'Output location is not a directory: {out_dir}')

    def write_output(self, data, file_name: Optional[str] = None):
        """
        Writes data to file_name (or --out), or prints JSON to stdout.
        """
        file_name = file_name or self.out_file
        if file_name:
            write_file(file_name, data)
            self.logger.info(f'Wrote {file_name}')
        else:
            self.stdout.write(dumps_json(data))

    def write_csv(self, file_name: str, rows):
        write_csv_file(file_name, rows)
        self.logger.info(f'Wrote {file_name}')

    def echo(self, text: str):
        self.stdout.write(f'{text}\n')


def add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--out', dest='out_file', required=False, metavar='FILE',
                        help='Output file (.json, or .yaml/.yml for YAML). Default: JSON to stdout')
    parser.add_argument('--tol', dest='tol', type=float, default=DEFAULT_PST_TOL,
                        help=f'Tolerance on | |H[u,v]| - 1 |. Default: {DEFAULT_PST_TOL}')
    parser.add_argument('--allow-large', dest='allow_large', action='store_true',
                        help=f'Allow full-matrix work up to n={LARGE_MAX_N}. Default cap: n={DEFAULT_MAX_N}')
    parser.add_argument('--log-dir', dest='log_dir', required=False, metavar='DIR',
                        help=f'Also log to <DIR>/<command>.log. Default: ${LOG_DIR_ENV} if set')
    parser.add_argument('-q', '--quiet', dest='quiet', action='store_true',
                        help='Only log warnings and errors to stderr')


def run_command(command_classes, argv=None, stdout=None, description=None) -> int:
    parser = argparse.ArgumentParser(prog='neps-pst', description=description,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True
    for command_class in command_classes:
        sub = subparsers.add_parser(command_class.name, help=command_class.help, description=command_class.help)
        command_class.add_arguments(sub)
        add_common_arguments(sub)
        sub.set_defaults(command_class=command_class)

    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as e:
        return EXIT_INPUT_ERROR if e.code else EXIT_OK

    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG)
    logger_stream_handler = logging.StreamHandler()
    logger_stream_handler.setLevel(logging.WARNING if args.quiet else logging.INFO)
    formatter = logging.Formatter("%(levelname)s - %(message)s")
    logger_stream_handler.setFormatter(formatter)
    logger.addHandler(logger_stream_handler)

    command_args = vars(args)
    command_class = command_args.pop('command_class')
    command_args['logger'] = logger
    command_args['stdout'] = stdout
    try:
        command = command_class(**command_args)
        logger.info(f'Starting {command.name}...')
        return command.run()
    finally:
        logger.removeHandler(logger_stream_handler)
        logger_stream_handler.close()
