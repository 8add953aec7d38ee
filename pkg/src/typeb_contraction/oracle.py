"""Brute-force certificates that do not go through the combinatorics.

* ``generic_index``: dim minus the largest rank of (f([x_i, x_j])) over random
  integer functionals f.
* ``regularity_and_complement``: rank of the coadjoint matrix at y and whether
  its image together with g_{-T} spans p~'*.
* ``phi_restricted_det``: the determinant of (K(y, [x_a, x_b]_p~))_{a,b in O}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Protocol

from .contraction import ContractionAlgebra, build_contraction
from .errors import OddDimensionError
from .linalg import RationalMatrix
from .rootspace import ParabolicContext, Root, neg

BOUND = 10 ** 4


class BracketTable(Protocol):
    dim: int

    def structure_constants(self) -> dict[tuple[int, int], dict[int, object]]: ...


@dataclass(frozen=True)
class AbelianAlgebra:
    """All brackets zero; handy as a baseline."""

    dim: int

    def structure_constants(self):
        return {}


def functional_matrix(algebra: BracketTable, f: list[int]) -> RationalMatrix:
    """(f([x_i, x_j]))_{i,j}."""
    d = algebra.dim
    rows = [[0] * d for _ in range(d)]
    for (i, j), val in algebra.structure_constants().items():
        rows[i][j] = sum(c * f[k] for k, c in val.items())
    return RationalMatrix(rows, d)


def index_trials(algebra: BracketTable, trials: int = 5, seed: int = 0) -> list[int]:
    """Exact ranks of the form at ``trials`` random integer functionals."""
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = random.Random(seed)
    ranks = []
    for _ in range(trials):
        f = [rng.randint(-BOUND, BOUND) for _ in range(algebra.dim)]
        ranks.append(functional_matrix(algebra, f).rank())
    return ranks


def generic_index(algebra: BracketTable, trials: int = 5, seed: int = 0) -> int:
    return algebra.dim - max(index_trials(algebra, trials, seed))


@dataclass(frozen=True)
class Regularity:
    rank: int
    stacked_rank: int
    dim: int
    rank_ok: bool
    direct_sum_ok: bool


def regularity_and_complement(y_support: Iterable[Root], T: Iterable[Root], ctx: ParabolicContext,
                              algebra: ContractionAlgebra | None = None) -> Regularity:
    algebra = algebra if algebra is not None else build_contraction(ctx)
    T = list(T)
    m = algebra.coadjoint_matrix_of(algebra.y_element(y_support))
    d = algebra.dim
    e_t = [[0] * d for _ in T]
    for col, r in zip(e_t, T):
        col[algebra.dual_position[algebra.g.x(neg(r))]] = 1
    stacked = m.hstack(RationalMatrix.from_columns(e_t, d)) if T else m
    rank = m.rank()
    stacked_rank = stacked.rank()
    return Regularity(rank, stacked_rank, d, rank == d - len(T), stacked_rank == d)


def phi_matrix(O: list[Root], y_support: Iterable[Root], ctx: ParabolicContext,
               algebra: ContractionAlgebra | None = None) -> RationalMatrix:
    algebra = algebra if algebra is not None else build_contraction(ctx)
    y = algebra.y_element(y_support)
    g = algebra.g
    vec = [{g.x(a): 1} for a in O]
    return RationalMatrix([[g.trace_pairing(y, algebra.bracket(u, v)) for v in vec] for u in vec], len(O))


def phi_restricted_det(O: list[Root], y_support: Iterable[Root], ctx: ParabolicContext,
                       algebra: ContractionAlgebra | None = None) -> Fraction:
    if len(O) % 2:
        raise OddDimensionError(f"|O| = {len(O)} is odd")
    return phi_matrix(O, y_support, ctx, algebra).det()
