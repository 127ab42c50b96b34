#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
Classes for PST verdict reports
"""
import json
import math
from typing import Any, Dict, List, Optional
from .gf2 import Basis
from .graphs import vertex_label
from .spectral import TauTime

PST = 'pst'
PERIODIC = 'periodic'
DIGITS = 12
REDUCTION_TOL = 1e-9


def clean_float(value: Optional[float]) -> Optional[float]:
    """Rounded for stable output; -0.0 becomes 0.0."""
    if value is None:
        return None
    value = round(float(value), DIGITS)
    return value + 0.0


def normalize_phase(phase: float) -> float:
    """Phase in (-π, π]; -π (a -0.0 imaginary part) becomes π."""
    if phase <= -math.pi + 10 ** -DIGITS:
        return math.pi
    return phase


def clean_phase(phase: Optional[float]) -> Optional[float]:
    if phase is None:
        return None
    return clean_float(normalize_phase(phase))


class Premise(object):

    def __init__(self, name: str, holds: bool, detail: str = ''):
        self.name = name
        self.holds = bool(holds)
        self.detail = detail

    def to_dict(self):
        return {
            'name': self.name,
            'holds': self.holds,
            'detail': self.detail
        }


class Claim(object):
    """
    A predicted PST pair (u != v) or periodic vertex (u == v) at a time.

    expected is the predicted amplitude H[u, v] (±1) when the structural
    predictor gives one; magnitude, phase and verified stay None when no
    transition matrix was computed.
    """

    def __init__(self, j: Optional[int], kind: str, u: int, v: int, n: int, time: TauTime,
                 expected: Optional[int] = None, g_vertex: Optional[int] = None, g_order: int = 1):
        self.j = j
        self.kind = kind
        self.u = u
        self.v = v
        self.n = n
        self.time = time
        self.expected = expected
        self.g_vertex = g_vertex
        self.g_order = g_order
        self.magnitude = None
        self.phase = None
        self.verified = None

    def set_measurement(self, magnitude: float, phase: float, verified: bool):
        self.magnitude = magnitude
        self.phase = phase
        self.verified = bool(verified)

    def _label(self, index):
        label = ','.join(str(c) for c in vertex_label(index // self.g_order, self.n))
        if self.g_vertex is not None:
            label += f';{index % self.g_order}'
        return label

    def to_dict(self):
        data = {
            'j': self.j,
            'kind': self.kind,
            'u': self.u,
            'v': self.v,
            'u_label': self._label(self.u),
            'v_label': self._label(self.v),
            'time': self.time.to_dict(),
            'expected': self.expected,
            'magnitude': clean_float(self.magnitude),
            'phase': clean_phase(self.phase),
            'verified': self.verified
        }
        if self.g_vertex is not None:
            data['g_vertex'] = self.g_vertex
        return data


class PstReport(object):

    def __init__(self, omega: Basis):
        self.omega = omega
        self.n = omega.n
        self.m = omega.m
        self.rank = None
        self.connected = None
        self.parity = None
        self.k = None
        self.omega_star = None
        self.column_sum = None
        self.time = None
        self.claims: List[Claim] = []
        self.premises: List[Premise] = []
        self.structural: List[Dict[str, Any]] = []
        self.time_checks: List[Dict[str, Any]] = []
        self.notes: List[str] = []
        self.f8_residual = None
        self.lift: Optional[Dict[str, Any]] = None

    def add_premise(self, name: str, holds: bool, detail: str = '') -> Premise:
        premise = Premise(name, holds, detail)
        self.premises.append(premise)
        return premise

    def add_claim(self, claim: Claim) -> Claim:
        self.claims.append(claim)
        return claim

    def add_note(self, note: str):
        if note not in self.notes:
            self.notes.append(note)

    @property
    def premises_hold(self) -> bool:
        return all(premise.holds for premise in self.premises)

    @property
    def failed_premises(self) -> List[str]:
        return [premise.name for premise in self.premises if not premise.holds]

    @property
    def reduction_holds(self) -> bool:
        return self.f8_residual is None or self.f8_residual <= REDUCTION_TOL

    @property
    def claims_verified(self) -> bool:
        """
        False if some measured claim or structural block failed, or if the
        heavier rows did not act as the identity at tau_k. Unmeasured claims
        do not count.
        """
        return all(claim.verified is not False for claim in self.claims) and \
            all(entry.get('agrees') is not False for entry in self.structural) and \
            self.reduction_holds

    @property
    def pst_pairs(self) -> List[Claim]:
        return [claim for claim in self.claims if claim.kind == PST]

    def to_dict(self):
        data = {
            'n': self.n,
            'm': self.m,
            'omega': [str(row) for row in self.omega],
            'rank': self.rank,
            'connected': self.connected,
            'parity': self.parity,
            'k': self.k,
            'omega_star': [str(row) for row in self.omega_star] if self.omega_star else None,
            'column_sum': str(self.column_sum) if self.column_sum is not None else None,
            'time': self.time.to_dict() if self.time else None,
            'claims': [claim.to_dict() for claim in self.claims],
            'premises': [premise.to_dict() for premise in self.premises],
            'structural': self.structural,
            'notes': self.notes,
            'f8_residual': clean_float(self.f8_residual)
        }
        if self.time_checks:
            data['time_checks'] = self.time_checks
        if self.lift is not None:
            data['lift'] = self.lift
        return data

    def toJSON(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)
