#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
Bit vectors and GF(2) matrix arithmetic for NEPS bases
"""
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Tuple
import numpy as np

MAX_N = 64

ALL_EVEN = 'AllEven'
ALL_ODD = 'AllOdd'
MIXED = 'Mixed'


class BasisError(ValueError):
    pass


class BitVector(object):
    """
    A tuple (b_1, ..., b_n) over {0, 1} packed into one integer word.

    The first coordinate is the most significant bit, so the word equals
    int('b_1...b_n', 2) and integer order is the same as string order.
    """
    __slots__ = ('_n', '_word')

    def __init__(self, n: int, word: int):
        if n < 1 or n > MAX_N:
            raise BasisError(f'Bit vector length must be between 1 and {MAX_N}, got {n}')
        if word < 0 or word >> n:
            raise BasisError(f'Word {word} does not fit in {n} bits')
        self._n = n
        self._word = word

    @classmethod
    def from_string(cls, text: str) -> 'BitVector':
        if not text or any(c not in '01' for c in text):
            raise BasisError(f'Row "{text}" must be a non-empty string of 0 and 1 characters')
        return cls(len(text), int(text, 2))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> 'BitVector':
        bits = list(bits)
        word = 0
        for bit in bits:
            if bit not in (0, 1):
                raise BasisError(f'Bit values must be 0 or 1, got {bit}')
            word = (word << 1) | bit
        return cls(len(bits), word)

    @property
    def n(self) -> int:
        return self._n

    @property
    def word(self) -> int:
        return self._word

    @property
    def bits(self) -> Tuple[int, ...]:
        return tuple((self._word >> (self._n - 1 - i)) & 1 for i in range(self._n))

    def bit(self, j: int) -> int:
        """1-based coordinate access, as β_j."""
        if j < 1 or j > self._n:
            raise IndexError(f'Coordinate {j} outside 1..{self._n}')
        return (self._word >> (self._n - j)) & 1

    def is_zero(self) -> bool:
        return self._word == 0

    def __len__(self):
        return self._n

    def __iter__(self):
        return iter(self.bits)

    def __eq__(self, other):
        return isinstance(other, BitVector) and self._n == other._n and self._word == other._word

    def __hash__(self):
        return hash((self._n, self._word))

    def __str__(self):
        return format(self._word, f'0{self._n}b')

    def __repr__(self):
        return f'BitVector({str(self)!r})'


class Basis(object):
    """
    An ordered set Ω of distinct nonzero rows of common length n.
    """

    def __init__(self, n: int, rows: Iterable[BitVector]):
        if not isinstance(n, int) or n < 1 or n > MAX_N:
            raise BasisError(f'n must be an integer between 1 and {MAX_N}, got {n}')
        rows = tuple(rows)
        if not rows:
            raise BasisError('A basis needs at least one row')
        seen = set()
        for idx, row in enumerate(rows, start=1):
            if row.n != n:
                raise BasisError(f'Row {idx} ({row}) has length {row.n} but n is {n}')
            if row.is_zero():
                raise BasisError(f'Row {idx} is the all-zero tuple, which a NEPS basis excludes')
            if row.word in seen:
                raise BasisError(f'Row {idx} ({row}) is a duplicate; duplicate rows are not allowed')
            seen.add(row.word)
        self._n = n
        self._rows = rows

    @classmethod
    def from_strings(cls, rows: Iterable[str], n: Optional[int] = None) -> 'Basis':
        vectors = [BitVector.from_string(row) for row in rows]
        if n is None:
            if not vectors:
                raise BasisError('A basis needs at least one row')
            n = vectors[0].n
        return cls(n, vectors)

    @classmethod
    def from_dict(cls, data) -> 'Basis':
        if not isinstance(data, dict):
            raise BasisError('Basis document must be an object with "n" and "rows"')
        if 'n' not in data or 'rows' not in data:
            raise BasisError('Basis document is missing "n" or "rows"')
        n = data['n']
        rows = data['rows']
        if isinstance(n, bool) or not isinstance(n, int):
            raise BasisError(f'"n" must be an integer, got {n!r}')
        if not isinstance(rows, list) or not all(isinstance(row, str) for row in rows):
            raise BasisError('"rows" must be a list of strings')
        return cls.from_strings(rows, n)

    def to_dict(self):
        return {
            'n': self._n,
            'rows': [str(row) for row in self._rows]
        }

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> Tuple[BitVector, ...]:
        return self._rows

    def as_array(self) -> np.ndarray:
        return np.array([row.bits for row in self._rows], dtype=np.uint8)

    def __len__(self):
        return len(self._rows)

    def __iter__(self):
        return iter(self._rows)

    def __getitem__(self, idx):
        return self._rows[idx]

    def __eq__(self, other):
        return isinstance(other, Basis) and self._n == other._n and self._rows == other._rows

    def __hash__(self):
        return hash((self._n, self._rows))

    def __repr__(self):
        return f'Basis({self._n}, {[str(row) for row in self._rows]})'


def weight(beta: BitVector) -> int:
    return bin(beta.word).count('1')


def rank_gf2(omega: Basis) -> int:
    # pivots keyed by leading bit, rows reduced with XOR
    pivots = {}
    for row in omega:
        word = row.word
        while word:
            lead = word.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = word
                break
            word ^= pivots[lead]
    return len(pivots)


def column_sum(omega: Basis) -> BitVector:
    total = 0
    for row in omega:
        total ^= row.word
    return BitVector(omega.n, total)


def parity_class(omega: Basis) -> str:
    parities = {weight(row) % 2 for row in omega}
    if parities == {0}:
        return ALL_EVEN
    if parities == {1}:
        return ALL_ODD
    return MIXED


def min_weight_subset(omega: Basis) -> Tuple[int, Basis]:
    k = min(weight(row) for row in omega)
    return k, Basis(omega.n, [row for row in omega if weight(row) == k])


def is_uniform_weight(omega: Basis) -> bool:
    return len({weight(row) for row in omega}) == 1


def identity_basis(n: int) -> Basis:
    return Basis(n, [BitVector(n, 1 << (n - 1 - i)) for i in range(n)])


def complement_identity_basis(n: int) -> Basis:
    """Rows of J - I of order n."""
    if n < 2:
        raise BasisError(f'J - I needs order at least 2, got {n}')
    full = (1 << n) - 1
    return Basis(n, [BitVector(n, full ^ (1 << (n - 1 - i))) for i in range(n)])


def construct_basis(n: int, k: int) -> Basis:
    """
    An n-row basis whose rows all have weight k and whose GF(2) rank is n.

    Grows the basis one coordinate at a time: the size l basis for weight k
    gets a zero column and the new row (1,...,1,0,...,0,1) with k - 1 leading
    ones. The start is I_2 for k = 1 and J - I of order k + 1 otherwise.
    """
    if not isinstance(n, int) or n < 2 or n > MAX_N:
        raise BasisError(f'n must be an integer between 2 and {MAX_N}, got {n}')
    if not isinstance(k, int) or k < 1 or k % 2 == 0:
        raise BasisError(f'k must be an odd positive integer, got {k}')
    if k >= n:
        raise BasisError(f'k must be smaller than n, got k={k}, n={n}')

    if k == 1:
        size = 2
        words = [0b10, 0b01]
    else:
        size = k + 1
        full = (1 << size) - 1
        words = [full ^ (1 << (size - 1 - i)) for i in range(size)]
    while size < n:
        delta = ((1 << (k - 1)) - 1) << (size - (k - 1))
        words = [word << 1 for word in words] + [(delta << 1) | 1]
        size += 1
    return Basis(n, [BitVector(n, word) for word in words])


def odd_weight_vectors(n: int, exclude_weight: Optional[int] = 1) -> List[BitVector]:
    vectors = []
    for word in range(1, 1 << n):
        s = bin(word).count('1')
        if s % 2 == 1 and s != exclude_weight:
            vectors.append(BitVector(n, word))
    return vectors


def augment_identity(n: int, extra: Iterable[BitVector]) -> Basis:
    """
    I_n together with extra rows of odd weight greater than one.
    """
    extra = list(extra)
    for row in extra:
        if row.n != n or weight(row) % 2 == 0 or weight(row) == 1:
            raise BasisError(f'Row {row} must have odd weight other than 1 to augment I_{n}')
    return Basis(n, list(identity_basis(n)) + extra)


def all_bases(n: int, max_m: Optional[int] = None) -> Iterator[Basis]:
    """
    Every nonempty set of nonzero rows of length n, smaller sets first,
    rows within a set in increasing order.
    """
    vectors = [BitVector(n, word) for word in range(1, 1 << n)]
    top = len(vectors) if max_m is None else min(max_m, len(vectors))
    for m in range(1, top + 1):
        for rows in combinations(vectors, m):
            yield Basis(n, rows)
