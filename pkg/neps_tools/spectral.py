#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
Spectral decompositions and continuous-time quantum walk transition matrices

H(t) = exp(-itA) = sum_r exp(-it λ_r) E_r for a real symmetric adjacency A.
Transition matrices of NEPS of P3 are built from the closed-form P3
projectors through the Kronecker rule

    H_{A⊗B}(t) = sum_s H_A(μ_s t) ⊗ F_s      (B = sum_s μ_s F_s)

and multiplied row by row over the basis, since the per-row adjacency
matrices commute.
"""
import cmath
import math
from typing import Callable, List, Optional, Sequence, Union
import numpy as np
import scipy.linalg
from .gf2 import Basis, BitVector

SQRT2 = math.sqrt(2.0)
SYMMETRY_TOL = 1e-12
GROUP_TOL_SCALE = 1e-8
TAYLOR_TERMS = 18
TAYLOR_NORM = 0.5
MAX_SQUARINGS = 60

# exp(-i q π/2) for q = 0..3
_QUARTER_PHASES = (1 + 0j, -1j, -1 + 0j, 1j)


class SpectralError(ValueError):
    pass


class TauTime(object):
    """
    A time value, either symbolic factor·π/(√2)^k or a plain number.

    Symbolic times stay exact under scaling by ±√2 (k shifts by one), so
    phases at multiples of π/2 come out as exact ±1, ±i.
    """
    __slots__ = ('_k', '_factor', '_value')

    def __init__(self, k: Optional[int] = None, factor: float = 1.0, value: Optional[float] = None):
        if (k is None) == (value is None):
            raise SpectralError('A time is either symbolic (k) or numeric (value), not both')
        self._k = k
        self._factor = float(factor)
        self._value = None if value is None else float(value)

    @classmethod
    def tau(cls, k: int, factor: float = 1.0) -> 'TauTime':
        return cls(k=int(k), factor=factor)

    @classmethod
    def from_value(cls, value: float) -> 'TauTime':
        return cls(value=value)

    @classmethod
    def parse(cls, text: str) -> 'TauTime':
        text = text.strip()
        if text.lower().startswith('tau:'):
            try:
                k = int(text[4:])
            except ValueError:
                raise SpectralError(f'Cannot parse time "{text}": expected tau:<positive integer>')
            if k < 1:
                raise SpectralError(f'Cannot parse time "{text}": k must be positive')
            return cls.tau(k)
        try:
            value = float(text)
        except ValueError:
            raise SpectralError(f'Cannot parse time "{text}": expected tau:<k> or a decimal')
        if not math.isfinite(value):
            raise SpectralError(f'Time must be finite, got "{text}"')
        return cls.from_value(value)

    @classmethod
    def coerce(cls, t: Union['TauTime', float, int]) -> 'TauTime':
        if isinstance(t, TauTime):
            return t
        return cls.from_value(float(t))

    @property
    def k(self) -> Optional[int]:
        return self._k

    @property
    def factor(self) -> float:
        return self._factor

    @property
    def is_symbolic(self) -> bool:
        return self._k is not None

    @property
    def is_zero(self) -> bool:
        if self.is_symbolic:
            return self._factor == 0.0
        return self._value == 0.0

    @property
    def pi_units(self) -> float:
        """The time divided by π."""
        if not self.is_symbolic:
            return self._value / math.pi
        if self._k % 2 == 0:
            return self._factor * 2.0 ** (-(self._k // 2))
        return self._factor * SQRT2 * 2.0 ** (-((self._k + 1) // 2))

    @property
    def seconds(self) -> float:
        if not self.is_symbolic:
            return self._value
        return self.pi_units * math.pi

    def scaled(self, mu: float) -> 'TauTime':
        if self.is_symbolic:
            return TauTime(k=self._k, factor=self._factor * mu)
        return TauTime(value=self._value * mu)

    def times_root2(self, sign: int) -> 'TauTime':
        if sign == 0:
            return self.scaled(0.0)
        if self.is_symbolic:
            return TauTime(k=self._k - 1, factor=self._factor * sign)
        return TauTime(value=self._value * sign * SQRT2)

    def negated(self) -> 'TauTime':
        return self.scaled(-1.0)

    def phase(self) -> complex:
        """exp(-i t)."""
        if self.is_zero:
            return 1 + 0j
        units = self.pi_units
        quarters = 2.0 * units
        if quarters.is_integer():
            return _QUARTER_PHASES[int(quarters) % 4]
        if not self.is_symbolic:
            return cmath.exp(-1j * self._value)
        return cmath.exp(-1j * math.pi * units)

    def to_dict(self):
        if not self.is_symbolic:
            return {'value': self._value}
        if self._factor == 1.0:
            return {'tau_k': self._k}
        return {'tau_k': self._k, 'factor': self._factor}

    def __eq__(self, other):
        return isinstance(other, TauTime) and (self._k, self._factor, self._value) == \
            (other._k, other._factor, other._value)

    def __hash__(self):
        return hash((self._k, self._factor, self._value))

    def __str__(self):
        if not self.is_symbolic:
            return repr(self._value)
        if self._factor == 1.0:
            return f'tau:{self._k}'
        return f'tau:{self._k}*{self._factor!r}'

    def __repr__(self):
        return f'TauTime({self})'


Time = Union[TauTime, float, int]


class SpectralDecomposition(object):
    """
    Distinct eigenvalues λ_1 < ... < λ_m with their orthogonal projectors.

    root2_signs, when given, marks every eigenvalue as sign·√2 exactly so
    that transition phases can be evaluated symbolically.
    """

    def __init__(self, eigenvalues: Sequence[float], projectors: Sequence[np.ndarray],
                 root2_signs: Optional[Sequence[int]] = None):
        if len(eigenvalues) != len(projectors) or not projectors:
            raise SpectralError('Need one projector per distinct eigenvalue')
        self.eigenvalues = tuple(float(x) for x in eigenvalues)
        self.projectors = [np.asarray(p, dtype=float) for p in projectors]
        self.root2_signs = tuple(root2_signs) if root2_signs is not None else None
        self.order = self.projectors[0].shape[0]

    def __len__(self):
        return len(self.eigenvalues)

    def reconstruct(self) -> np.ndarray:
        return sum(value * proj for value, proj in zip(self.eigenvalues, self.projectors))

    def scaled_time(self, r: int, t: TauTime) -> TauTime:
        """μ_r·t, kept symbolic for the ±√2 eigenvalues of P3."""
        if self.root2_signs is not None:
            return t.times_root2(self.root2_signs[r])
        return t.scaled(self.eigenvalues[r])

    def projector_residuals(self):
        identity = np.eye(self.order)
        idempotent = max(np.max(np.abs(p @ p - p)) for p in self.projectors)
        orthogonal = 0.0
        for r, p in enumerate(self.projectors):
            for q in self.projectors[r + 1:]:
                orthogonal = max(orthogonal, float(np.max(np.abs(p @ q))))
        resolution = float(np.max(np.abs(sum(self.projectors) - identity)))
        return {
            'idempotent': float(idempotent),
            'orthogonal': orthogonal,
            'resolution': resolution
        }


def symmetry_residual(matrix: np.ndarray) -> float:
    return float(np.max(np.abs(matrix - matrix.T)))


def unitarity_residual(matrix: np.ndarray) -> float:
    identity = np.eye(matrix.shape[0])
    return float(np.max(np.abs(matrix @ matrix.conj().T - identity)))


def max_residual(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b)))


def _square_real(matrix) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise SpectralError(f'Matrix must be square, got shape {matrix.shape}')
    return matrix


def eigendecompose(adjacency: np.ndarray, group_tol: Optional[float] = None) -> SpectralDecomposition:
    """
    Eigenvalues closer than group_tol are merged into one distinct value
    (the cluster mean) and their eigenvector outer products summed.
    """
    adjacency = _square_real(adjacency)
    if symmetry_residual(adjacency) > SYMMETRY_TOL:
        raise SpectralError('Matrix is not symmetric; the spectral decomposition needs a symmetric input')
    if group_tol is None:
        group_tol = GROUP_TOL_SCALE * (1.0 + float(np.max(np.abs(adjacency))))
    try:
        values, vectors = scipy.linalg.eigh((adjacency + adjacency.T) / 2.0)
    except np.linalg.LinAlgError as e:
        raise SpectralError(f'Eigensolver did not converge: {e}')

    clusters = [[0]]
    for idx in range(1, len(values)):
        if values[idx] - values[idx - 1] <= group_tol:
            clusters[-1].append(idx)
        else:
            clusters.append([idx])
    eigenvalues = []
    projectors = []
    for cluster in clusters:
        basis = vectors[:, cluster]
        eigenvalues.append(float(np.mean(values[cluster])))
        projectors.append(basis @ basis.T)
    return SpectralDecomposition(eigenvalues, projectors)


def p3_spectral() -> SpectralDecomposition:
    """
    P3 = -√2 E_1 + 0 E_2 + √2 E_3 with the closed-form idempotents.
    """
    h = SQRT2 / 4.0
    e1 = np.array([[0.25, -h, 0.25],
                   [-h, 0.5, -h],
                   [0.25, -h, 0.25]])
    e2 = np.array([[0.5, 0.0, -0.5],
                   [0.0, 0.0, 0.0],
                   [-0.5, 0.0, 0.5]])
    e3 = np.array([[0.25, h, 0.25],
                   [h, 0.5, h],
                   [0.25, h, 0.25]])
    return SpectralDecomposition((-SQRT2, 0.0, SQRT2), (e1, e2, e3), root2_signs=(-1, 0, 1))


_P3 = p3_spectral()


def transition_matrix(spectral: SpectralDecomposition, t: Time) -> np.ndarray:
    t = TauTime.coerce(t)
    result = np.zeros((spectral.order, spectral.order), dtype=complex)
    for r, proj in enumerate(spectral.projectors):
        result += spectral.scaled_time(r, t).phase() * proj
    return result


def kronecker_transition(transition_at: Callable[[TauTime], np.ndarray],
                         spectral: SpectralDecomposition, t: Time) -> np.ndarray:
    """
    Transition matrix of A ⊗ B at t, given H_A as a function of time and
    the spectral decomposition of B.
    """
    t = TauTime.coerce(t)
    result = None
    for s, proj in enumerate(spectral.projectors):
        term = np.kron(transition_at(spectral.scaled_time(s, t)), proj)
        result = term if result is None else result + term
    return result


def _prefix_transition(bits: Sequence[int], t: TauTime) -> np.ndarray:
    # the empty prefix stands for the 1x1 matrix [1], so H = [exp(-it)]
    if t.is_zero:
        return np.eye(3 ** len(bits), dtype=complex)
    if not bits:
        return np.array([[t.phase()]], dtype=complex)
    rest = bits[:-1]
    if bits[-1] == 0:
        return np.kron(_prefix_transition(rest, t), np.eye(3))
    return kronecker_transition(lambda s: _prefix_transition(rest, s), _P3, t)


def factor_transition(beta: BitVector, t: Time) -> np.ndarray:
    """H_β(t) for the NEPS of P3 with the single basis row β."""
    if beta.is_zero():
        raise SpectralError('The all-zero tuple has no NEPS transition matrix')
    return _prefix_transition(beta.bits, TauTime.coerce(t))


def product_transition(omega: Basis, t: Time) -> np.ndarray:
    """H_Ω(t) as the left-to-right product of H_β(t) over the rows of Ω."""
    t = TauTime.coerce(t)
    result = None
    for beta in omega:
        factor = factor_transition(beta, t)
        result = factor if result is None else result @ factor
    return result


def expm_oracle(adjacency: np.ndarray, t: Time, max_squarings: int = MAX_SQUARINGS) -> np.ndarray:
    """
    exp(-itA) by scaling and squaring a truncated Taylor series, independent
    of any eigensolver.
    """
    adjacency = _square_real(adjacency)
    if symmetry_residual(adjacency) > SYMMETRY_TOL:
        raise SpectralError('Matrix is not symmetric')
    seconds = TauTime.coerce(t).seconds
    order = adjacency.shape[0]
    identity = np.eye(order, dtype=complex)
    generator = -1j * seconds * adjacency
    norm = float(np.max(np.sum(np.abs(generator), axis=0)))
    squarings = 0
    if norm > TAYLOR_NORM:
        squarings = int(math.ceil(math.log2(norm / TAYLOR_NORM)))
    if squarings > max_squarings:
        raise SpectralError(f'|tA| = {norm:.3g} needs {squarings} squarings, more than the budget of {max_squarings}')
    scaled = generator / 2.0 ** squarings

    coefficients = [1.0]
    for i in range(TAYLOR_TERMS):
        coefficients.append(coefficients[-1] / (i + 1))
    result = identity * coefficients[TAYLOR_TERMS]
    for i in range(TAYLOR_TERMS - 1, -1, -1):
        result = scaled @ result + identity * coefficients[i]

    for _ in range(squarings):
        result = result @ result
    return result


def complex_matrix_to_dict(matrix: np.ndarray):
    return {
        'order': int(matrix.shape[0]),
        'entries': [[[float(z.real), float(z.imag)] for z in row] for row in matrix]
    }


def magnitude_csv_rows(matrix: np.ndarray) -> List[List[str]]:
    return [[repr(float(abs(z))) for z in row] for row in matrix]
