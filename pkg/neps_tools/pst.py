#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
Perfect state transfer and periodicity on NEPS of P3

Uniform-weight classification: if every row of Ω has weight k then at
τ_k = π/(√2)^k the 3x3 block of H_Ω on (U_j, (2,...,2), V_j) is exactly
(-1)^m P^r, m = |Ω|, r = #{β : β_j = 1}. Odd r gives PST between U_j and
V_j, even r makes U_j and V_j periodic, and (2,...,2) is always periodic.
If all weights share a parity, rows heavier than the minimum k act as the
identity at τ_k, so Ω behaves like its minimum-weight rows Ω*.
"""
import cmath
import logging
from typing import Dict, List, NamedTuple, Optional, Sequence
import numpy as np
from .gf2 import (Basis, BitVector, MIXED, all_bases, column_sum,
                  is_uniform_weight, min_weight_subset, parity_class, rank_gf2, weight)
from .graphs import (center_index, connected_components, endpoint_indices, is_bipartite, kron,
                     neps_adjacency)
from .pst_report import PERIODIC, PST, Claim, PstReport, clean_float, normalize_phase
from .spectral import (TauTime, eigendecompose, expm_oracle, factor_transition, kronecker_transition,
                       max_residual, product_transition, symmetry_residual, transition_matrix,
                       unitarity_residual)

DEFAULT_PST_TOL = 1e-9
DEFAULT_MAX_N = 8
LARGE_MAX_N = 12
SCAN_MAX_N = 3
ODDNESS_TOL = 1e-8
STRUCTURAL_TOL = 1e-9
ORACLE_TOL = 1e-9
UNITARY_TOL = 1e-10

FLIP = np.array([[0, 0, 1],
                 [0, 1, 0],
                 [1, 0, 0]])


class PremiseError(ValueError):
    pass


class TransferCheck(NamedTuple):
    verdict: bool
    magnitude: float
    phase: float


class Check(NamedTuple):
    name: str
    residual: float
    tolerance: float

    @property
    def holds(self) -> bool:
        return self.residual <= self.tolerance

    def to_dict(self):
        return {
            'name': self.name,
            'residual': clean_float(self.residual),
            'tolerance': self.tolerance,
            'holds': self.holds
        }


def _odd_order(matrix: np.ndarray, minimum: int = 1) -> int:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise PremiseError(f'Matrix must be square, got shape {matrix.shape}')
    order = matrix.shape[0]
    if order % 2 == 0 or order < minimum:
        raise PremiseError(f'Matrix order must be odd and at least {minimum}, got {order}')
    return order


def center(matrix: np.ndarray):
    matrix = np.asarray(matrix)
    order = _odd_order(matrix)
    return matrix[order // 2, order // 2]


def m3(matrix: np.ndarray) -> np.ndarray:
    matrix = np.asarray(matrix)
    order = _odd_order(matrix, 3)
    c = order // 2
    return matrix[c - 1:c + 2, c - 1:c + 2]


def coordinate_m3(matrix: np.ndarray, n: int, j: int) -> np.ndarray:
    """
    The 3x3 principal block on (U_j, center, V_j); for j = n this is m3.
    """
    u, v = endpoint_indices(n, j)
    idx = [u, center_index(n), v]
    return np.asarray(matrix)[np.ix_(idx, idx)]


def _require_uniform(omega: Basis) -> int:
    if not is_uniform_weight(omega):
        weights = sorted({weight(row) for row in omega})
        raise PremiseError(f'All rows must share one weight, found weights {weights}')
    return weight(omega[0])


def predict_m3(omega: Basis, j: int) -> np.ndarray:
    _require_uniform(omega)
    if j < 1 or j > omega.n:
        raise PremiseError(f'Coordinate {j} outside 1..{omega.n}')
    r = sum(row.bit(j) for row in omega)
    sign = -1 if omega.m % 2 else 1
    return sign * np.linalg.matrix_power(FLIP, r)


def check_pst(matrix: np.ndarray, u: int, v: int, tol: float = DEFAULT_PST_TOL) -> TransferCheck:
    """
    |H[u, v]| = 1 within tol; u == v checks periodicity at u. The phase is
    in (-π, π].
    """
    order = matrix.shape[0]
    if not (0 <= u < order and 0 <= v < order):
        raise PremiseError(f'Vertex pair ({u}, {v}) outside 0..{order - 1}')
    entry = complex(matrix[u, v])
    magnitude = abs(entry)
    return TransferCheck(abs(magnitude - 1.0) <= tol, magnitude, normalize_phase(cmath.phase(entry)))


def _measure(claim: Claim, matrix: Optional[np.ndarray], tol: float):
    if matrix is None:
        return
    check = check_pst(matrix, claim.u, claim.v, tol)
    claim.set_measurement(check.magnitude, check.phase, check.verdict)


def _add_uniform_claims(report: PstReport, omega_star: Basis, time: TauTime,
                        matrix: Optional[np.ndarray], tol: float):
    """
    Claims and structural predictions of the uniform-weight classification
    of omega_star, measured on matrix when it was computed.
    """
    n = omega_star.n
    sign = -1 if omega_star.m % 2 else 1
    sums = column_sum(omega_star)
    for j in range(1, n + 1):
        u, v = endpoint_indices(n, j)
        if sums.bit(j):
            claims = [Claim(j, PST, u, v, n, time, expected=sign)]
        else:
            claims = [Claim(j, PERIODIC, u, u, n, time, expected=sign),
                      Claim(j, PERIODIC, v, v, n, time, expected=sign)]
        for claim in claims:
            _measure(claim, matrix, tol)
            report.add_claim(claim)

        predicted = predict_m3(omega_star, j)
        entry = {'j': j, 'predicted': predicted.tolist(), 'residual': None, 'agrees': None}
        if matrix is not None:
            residual = max_residual(coordinate_m3(matrix, n, j), predicted)
            entry['residual'] = clean_float(residual)
            entry['agrees'] = residual <= STRUCTURAL_TOL
        report.structural.append(entry)

    c = center_index(n)
    claim = Claim(None, PERIODIC, c, c, n, time, expected=sign)
    _measure(claim, matrix, tol)
    report.add_claim(claim)


def _base_report(omega: Basis) -> PstReport:
    report = PstReport(omega)
    report.rank = rank_gf2(omega)
    report.connected = report.rank == omega.n
    report.parity = parity_class(omega)
    report.k, report.omega_star = min_weight_subset(omega)
    report.column_sum = column_sum(report.omega_star)
    report.time = TauTime.tau(report.k)
    return report


def theorem_f7_classify(omega: Basis, tol: float = DEFAULT_PST_TOL, numeric_max_n: int = DEFAULT_MAX_N,
                        matrix: Optional[np.ndarray] = None, report: Optional[PstReport] = None) -> PstReport:
    """
    Uniform-weight classification at τ_k, every claim measured on
    H_Ω(τ_k) when n is within numeric_max_n.

    A caller that already holds a transition matrix at τ_k (for a basis
    whose heavier rows reduce to omega) passes it as matrix, and the claims
    go into its report instead of a new one.
    """
    k = _require_uniform(omega)
    if report is None:
        report = _base_report(omega)
        report.add_premise('uniform_weight', True, f'every row has weight {k}')
    time = TauTime.tau(k)
    if matrix is None and omega.n <= numeric_max_n:
        matrix = product_transition(omega, time)
    if matrix is None:
        report.add_note(f'n={omega.n} is above the numeric cap {numeric_max_n}: claims are structural only')
    _add_uniform_claims(report, omega, time, matrix, tol)
    return report


def theorem_f8_reduce(omega: Basis, numeric_max_n: int = DEFAULT_MAX_N, matrix: Optional[np.ndarray] = None):
    """
    (Ω*, max |H_Ω(τ_k) - H_Ω*(τ_k)|) for a basis whose weights share a parity.
    matrix, when given, is H_Ω(τ_k).
    """
    if parity_class(omega) == MIXED:
        raise PremiseError('Row weights mix even and odd; the reduction to minimum-weight rows needs one parity')
    k, omega_star = min_weight_subset(omega)
    if omega_star == omega:
        return omega_star, 0.0
    if omega.n > numeric_max_n:
        raise PremiseError(f'n={omega.n} is above the numeric cap {numeric_max_n}')
    time = TauTime.tau(k)
    if matrix is None:
        matrix = product_transition(omega, time)
    return omega_star, max_residual(matrix, product_transition(omega_star, time))


def sufficient_condition(omega: Basis, tol: float = DEFAULT_PST_TOL,
                         numeric_max_n: int = DEFAULT_MAX_N) -> PstReport:
    """
    Premise ledger for connected PST at τ_k: rank n, one weight parity,
    nonzero column sum over Ω*. Failed premises are recorded, not raised.
    """
    report = _base_report(omega)
    report.add_premise('rank_equals_n', report.connected,
                       f'GF(2) rank {report.rank} of {omega.n}; the NEPS is connected exactly when they are equal')
    uniform_parity = report.parity != MIXED
    report.add_premise('uniform_parity', uniform_parity, f'row weights are {report.parity}')
    sums_nonzero = not report.column_sum.is_zero()
    report.add_premise('omega_star_column_sum_nonzero', sums_nonzero,
                       f'column sum of the weight-{report.k} rows is {report.column_sum}')

    if not uniform_parity:
        report.add_note('mixed weight parity: no prediction at tau_k')
        return report

    matrix = None
    if omega.n <= numeric_max_n:
        matrix = product_transition(omega, report.time)
        if report.omega_star != omega:
            report.f8_residual = theorem_f8_reduce(omega, numeric_max_n, matrix=matrix)[1]
    if report.omega_star != omega:
        report.add_note(f'rows heavier than {report.k} act as the identity at tau_{report.k}')
    if not report.reduction_holds:
        report.add_note(f'H differs from its minimum-weight rows by {report.f8_residual:.3e} at tau_{report.k}')
    if not sums_nonzero:
        report.add_note('column sum of omega_star is zero: U_j and V_j are periodic instead of transferring')
    elif not report.connected:
        report.add_note('PST claims hold numerically but the graph is disconnected')
    theorem_f7_classify(report.omega_star, tol, numeric_max_n, matrix=matrix, report=report)
    return report


def odd_ratio(value: float, r: float, tol: float = ODDNESS_TOL) -> Optional[int]:
    """value / r as an odd integer, or None."""
    ratio = value / r
    nearest = int(round(ratio))
    if abs(ratio - nearest) <= tol and nearest % 2 != 0:
        return nearest
    return None


def theorem_f9_check(omega: Basis, graph: np.ndarray, r: float, tol: float = DEFAULT_PST_TOL,
                     numeric_max_n: int = DEFAULT_MAX_N) -> PstReport:
    """
    PST on the Kronecker product NEPS(P3,...,P3; Ω) × G at τ_k / r when
    every eigenvalue of G divided by r is an odd integer.
    """
    if r == 0:
        raise PremiseError('r must be nonzero')
    base = sufficient_condition(omega, tol, numeric_max_n)
    graph = np.asarray(graph, dtype=float)
    spectral = eigendecompose(graph)
    g_order = graph.shape[0]
    ratios = [odd_ratio(value, r) for value in spectral.eigenvalues]

    report = PstReport(omega)
    for field in ('rank', 'connected', 'parity', 'k', 'omega_star', 'column_sum'):
        setattr(report, field, getattr(base, field))
    report.premises = list(base.premises)
    report.notes = list(base.notes)
    report.time = TauTime.tau(base.k, 1.0 / r)
    bad = [clean_float(value) for value, ratio in zip(spectral.eigenvalues, ratios) if ratio is None]
    report.add_premise('eigenvalue_ratios_odd', not bad,
                       f'eigenvalues divided by r={r!r} that are not odd integers: {bad}' if bad
                       else f'every eigenvalue divided by r={r!r} is an odd integer')
    report.lift = {
        'g_order': g_order,
        'g_eigenvalues': [clean_float(value) for value in spectral.eigenvalues],
        'r': r,
        'g_connected': connected_components(graph)[0] == 1,
        'g_bipartite': is_bipartite(graph),
        'product_components': None
    }
    if omega.n > numeric_max_n:
        report.add_note(f'n={omega.n} is above the numeric cap {numeric_max_n}: lift not computed')
        return report
    report.lift['product_components'] = connected_components(kron(neps_adjacency(omega), graph))[0]
    if not report.premises_hold:
        return report

    matrix = kronecker_transition(lambda s: product_transition(omega, s), spectral, report.time)
    for pair in base.pst_pairs:
        for w in range(g_order):
            claim = Claim(pair.j, PST, pair.u * g_order + w, pair.v * g_order + w, omega.n, report.time,
                          g_vertex=w, g_order=g_order)
            _measure(claim, matrix, tol)
            report.add_claim(claim)
    return report


def lemma2_check(beta: BitVector):
    """
    (expected, m3 residual, time-reversal residual) for H_β at τ_{s(β)}:
    the expected block is -I when the last bit is 0 and -P when it is 1.
    """
    time = TauTime.tau(weight(beta))
    forward = factor_transition(beta, time)
    backward = factor_transition(beta, time.negated())
    expected = -FLIP if beta.bit(beta.n) else -np.eye(3, dtype=int)
    return expected, max_residual(m3(forward), expected), max_residual(backward, forward)


def verify_suite(omega: Basis, times: Optional[Sequence[TauTime]] = None,
                 logger: Optional[logging.Logger] = None) -> List[Check]:
    """
    Cross-oracle checks: product formula, spectral decomposition and series
    agree, transitions are unitary and symmetric, single-row blocks match
    their -I/-P form, and predicted blocks match measured ones.
    """
    k = min_weight_subset(omega)[0]
    if times is None:
        times = [TauTime.tau(k), TauTime.from_value(0.7), TauTime.from_value(2.5)]
    adjacency = neps_adjacency(omega)
    spectral = eigendecompose(adjacency)
    checks = []
    for name, residual in spectral.projector_residuals().items():
        checks.append(Check(f'projectors_{name}', residual, UNITARY_TOL))
    checks.append(Check('projectors_reconstruct', max_residual(spectral.reconstruct(), adjacency), ORACLE_TOL))

    for time in times:
        if logger:
            logger.info(f'Comparing transition oracles at t={time}...')
        product = product_transition(omega, time)
        by_spectrum = transition_matrix(spectral, time)
        by_series = expm_oracle(adjacency, time)
        checks.append(Check(f'product_vs_spectral@{time}', max_residual(product, by_spectrum), ORACLE_TOL))
        checks.append(Check(f'product_vs_series@{time}', max_residual(product, by_series), ORACLE_TOL))
        checks.append(Check(f'spectral_vs_series@{time}', max_residual(by_spectrum, by_series), ORACLE_TOL))
        checks.append(Check(f'unitarity@{time}', unitarity_residual(product), UNITARY_TOL))
        checks.append(Check(f'symmetry@{time}', symmetry_residual(product), UNITARY_TOL))

    for beta in omega:
        if logger:
            logger.debug(f'Checking single-row block for {beta}...')
        _, block, reversal = lemma2_check(beta)
        checks.append(Check(f'single_row_block[{beta}]', block, UNITARY_TOL))
        checks.append(Check(f'time_reversal[{beta}]', reversal, UNITARY_TOL))

    parity = parity_class(omega)
    if parity != MIXED:
        k, omega_star = min_weight_subset(omega)
        matrix = product_transition(omega, TauTime.tau(k))
        if omega_star != omega:
            checks.append(Check('reduction_to_min_weight',
                                max_residual(matrix, product_transition(omega_star, TauTime.tau(k))),
                                ORACLE_TOL))
        for j in range(1, omega.n + 1):
            residual = max_residual(coordinate_m3(matrix, omega.n, j), predict_m3(omega_star, j))
            checks.append(Check(f'predicted_block[j={j}]', residual, STRUCTURAL_TOL))
    return checks


def find_pst_pairs(matrix: np.ndarray, tol: float = DEFAULT_PST_TOL) -> List[List[int]]:
    hits = np.argwhere(np.abs(np.abs(matrix) - 1.0) <= tol)
    return [[int(u), int(v)] for u, v in hits if u < v]


def scan_bases(n: int, max_m: Optional[int] = None, tol: float = DEFAULT_PST_TOL,
               logger: Optional[logging.Logger] = None) -> Dict:
    """
    Every basis of length n: premise ledger next to a brute-force PST search
    at τ_k. A connected basis with PST that fails the premises is flagged
    as missed by the sufficient condition.
    """
    if n < 1 or n > SCAN_MAX_N:
        raise PremiseError(f'scan supports 1 <= n <= {SCAN_MAX_N}, got {n}')
    rows = []
    summary = {'bases': 0, 'connected': 0, 'premises_hold': 0, 'pst_connected': 0, 'missed': 0, 'unconfirmed': 0}
    for omega in all_bases(n, max_m):
        report = sufficient_condition(omega, tol, numeric_max_n=SCAN_MAX_N)
        pairs = find_pst_pairs(product_transition(omega, report.time), tol)
        found = bool(pairs)
        missed = found and report.connected and not report.premises_hold
        unconfirmed = report.premises_hold and not found
        rows.append({
            'omega': [str(row) for row in omega],
            'm': omega.m,
            'rank': report.rank,
            'connected': report.connected,
            'parity': report.parity,
            'k': report.k,
            'premises_hold': report.premises_hold,
            'failed_premises': report.failed_premises,
            'pst_pairs': pairs,
            'pst_found': found,
            'missed': missed,
            'unconfirmed': unconfirmed
        })
        summary['bases'] += 1
        summary['connected'] += int(report.connected)
        summary['premises_hold'] += int(report.premises_hold)
        summary['pst_connected'] += int(found and report.connected)
        summary['missed'] += int(missed)
        summary['unconfirmed'] += int(unconfirmed)
        if logger and missed:
            logger.info(f'PST outside the sufficient condition: {[str(row) for row in omega]}')
    if logger:
        logger.info(f'Scanned {summary["bases"]} bases for n={n}')
    return {'n': n, 'max_m': max_m, 'rows': rows, 'summary': summary}
