#!/usr/bin/env python3
#
#  Copyright (c) 2026 neps-pst contributors
#  http://creativecommons.org/licenses/MIT/
#  See LICENSE file for details.
#
#  Contributors:
#  neps-pst maintainers

"""
Dense adjacency matrices: P3, complete graphs, Kronecker products and NEPS of P3

Vertices of a NEPS of n copies of P3 are labels (v_1, ..., v_n) with v_i in
{1, 2, 3}, numbered 0-based in dictionary order.
"""
from collections import deque
from typing import List, Sequence, Tuple
import numpy as np
from .gf2 import Basis


class GraphError(ValueError):
    pass


def path3() -> np.ndarray:
    return np.array([[0., 1., 0.],
                     [1., 0., 1.],
                     [0., 1., 0.]])


def complete_graph(m: int) -> np.ndarray:
    if m < 2:
        raise GraphError(f'Complete graph needs at least 2 vertices, got {m}')
    return np.ones((m, m)) - np.eye(m)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)


def neps_adjacency(omega: Basis) -> np.ndarray:
    """
    Sum over rows β of the Kronecker product with P3 where β_i = 1 and I3
    where β_i = 0, built edge by edge from the dictionary index.
    """
    n = omega.n
    order = 3 ** n
    adjacency = np.zeros((order, order))
    for beta in omega:
        src = np.arange(order)
        dst = src.copy()
        for i, bit in enumerate(beta.bits):
            if not bit:
                continue
            place = 3 ** (n - 1 - i)
            digit = (src // place) % 3
            middle = digit == 1
            # 1 -> 2 and 3 -> 2 move inward, 2 -> 1 here and 2 -> 3 below
            step = np.where(digit == 0, place, -place)
            src, dst = (np.concatenate([src, src[middle]]),
                        np.concatenate([dst + step, dst[middle] + place]))
        np.add.at(adjacency, (src, dst), 1.0)
    return adjacency


def vertex_index(label: Sequence[int]) -> int:
    if len(label) < 1:
        raise GraphError('A vertex label needs at least one coordinate')
    index = 0
    for coord in label:
        if coord not in (1, 2, 3):
            raise GraphError(f'Vertex coordinates must be 1, 2 or 3, got {coord} in {tuple(label)}')
        index = index * 3 + (coord - 1)
    return index


def vertex_label(index: int, n: int) -> Tuple[int, ...]:
    if n < 1 or index < 0 or index >= 3 ** n:
        raise GraphError(f'Vertex index {index} outside 0..{3 ** n - 1} for n={n}')
    coords = []
    for _ in range(n):
        index, digit = divmod(index, 3)
        coords.append(digit + 1)
    return tuple(reversed(coords))


def center_index(n: int) -> int:
    """Index of (2, ..., 2)."""
    return (3 ** n - 1) // 2


def endpoint_indices(n: int, j: int) -> Tuple[int, int]:
    """(U_j, V_j): all 2 except coordinate j set to 1, resp. 3."""
    if j < 1 or j > n:
        raise GraphError(f'Coordinate {j} outside 1..{n}')
    center = center_index(n)
    place = 3 ** (n - j)
    return center - place, center + place


def _check_adjacency(adjacency: np.ndarray):
    if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
        raise GraphError(f'Adjacency matrix must be square, got shape {adjacency.shape}')


def connected_components(adjacency: np.ndarray) -> Tuple[int, List[int]]:
    """
    Breadth-first component count and per-vertex component id (ids in
    order of the lowest vertex of each component).
    """
    adjacency = np.asarray(adjacency)
    _check_adjacency(adjacency)
    order = adjacency.shape[0]
    labels = [-1] * order
    count = 0
    for start in range(order):
        if labels[start] >= 0:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            vertex = queue.popleft()
            for neighbor in np.nonzero(adjacency[vertex])[0]:
                if labels[neighbor] < 0:
                    labels[neighbor] = count
                    queue.append(int(neighbor))
        count += 1
    return count, labels


def component_sizes(labels: Sequence[int]) -> List[int]:
    sizes = [0] * (max(labels) + 1 if labels else 0)
    for label in labels:
        sizes[label] += 1
    return sizes


def is_bipartite(adjacency: np.ndarray) -> bool:
    adjacency = np.asarray(adjacency)
    _check_adjacency(adjacency)
    order = adjacency.shape[0]
    colour = [-1] * order
    for start in range(order):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            vertex = queue.popleft()
            for neighbor in np.nonzero(adjacency[vertex])[0]:
                if colour[neighbor] < 0:
                    colour[neighbor] = 1 - colour[vertex]
                    queue.append(int(neighbor))
                elif colour[neighbor] == colour[vertex]:
                    return False
    return True


def real_matrix_to_dict(matrix: np.ndarray):
    return {
        'order': int(matrix.shape[0]),
        'entries': [[float(x) for x in row] for row in matrix]
    }


def real_matrix_from_dict(data) -> np.ndarray:
    try:
        matrix = np.array(data['entries'], dtype=float)
    except (KeyError, TypeError, ValueError) as e:
        raise GraphError(f'Badly formed matrix document: {e}')
    _check_adjacency(matrix)
    if 'order' in data and data['order'] != matrix.shape[0]:
        raise GraphError(f'Matrix "order" {data["order"]} does not match {matrix.shape[0]} rows')
    return matrix


def matrix_csv_rows(matrix: np.ndarray) -> List[List[str]]:
    return [[repr(float(x)) for x in row] for row in matrix]
