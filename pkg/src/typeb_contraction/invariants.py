"""Weights and degrees of the generators attached to T, and the two character bounds."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralError, RegimeError, ZeroWeightError
from .adapted_pair import AdaptedPairCertificate
from .linalg import RationalMatrix
from .rootspace import GT, LE, N_EQ_S, ParabolicContext, Root, Weight, eps, fundamental_weight, scale, weight_coordinates


@dataclass(frozen=True)
class GammaData:
    q: tuple[int, ...]
    weight: Weight
    degree: int


def solve_s_of_gamma(gamma: Root, S: list[Root], ctx: ParabolicContext) -> GammaData:
    """q with gamma + sum q_a a vanishing on h_pi'; weight gamma + s(gamma); degree 1 + sum q."""
    a = RationalMatrix([list(weight_coordinates(r, ctx)) for r in S], ctx.n - 1).transpose()
    rhs = [-c for c in weight_coordinates(gamma, ctx)]
    q = a.solve(rhs)
    if any(x.denominator != 1 or x < 0 for x in q):
        raise NonIntegralError(f"s(gamma) has coefficients {q}")
    q = tuple(int(x) for x in q)
    weight = tuple(Fraction(c) for c in gamma)
    for coef, r in zip(q, S):
        weight = tuple(w + coef * c for w, c in zip(weight, r))
    if not any(weight):
        raise ZeroWeightError(f"gamma + s(gamma) = 0 for gamma = {gamma}")
    return GammaData(q, weight, 1 + sum(q))


def compute_per_gamma(cert: AdaptedPairCertificate) -> dict[Root, GammaData]:
    cert.per_gamma = {g: solve_s_of_gamma(g, cert.S, cert.ctx) for g in cert.T}
    return cert.per_gamma


def leading_monomial(gamma: Root, S: list[Root], q) -> dict[Root, int]:
    """Exponents of x_gamma * prod x_a^{q_a}."""
    out = {gamma: 1}
    for r, e in zip(S, q):
        if e:
            out[r] = out.get(r, 0) + e
    return out


# -- characters -------------------------------------------------------------

@dataclass(frozen=True)
class FormalCharacterProduct:
    """prod (1 - e^w)^(-m) stored as the multiset {w: m}."""

    factors: tuple[tuple[Weight, int], ...]

    @classmethod
    def from_counter(cls, c: Counter) -> "FormalCharacterProduct":
        if any(not any(w) for w in c):
            raise ZeroWeightError("zero weight in a character product")
        return cls(tuple(sorted((tuple(Fraction(x) for x in w), m) for w, m in c.items() if m)))

    def as_counter(self) -> Counter:
        return Counter(dict(self.factors))


def upper_character(per_gamma: dict[Root, GammaData]) -> FormalCharacterProduct:
    return FormalCharacterProduct.from_counter(Counter(d.weight for d in per_gamma.values()))


def lower_character(ctx: ParabolicContext) -> FormalCharacterProduct:
    if ctx.regime == N_EQ_S:
        raise RegimeError("the closed-form lower bound needs n > s")
    w = fundamental_weight(ctx.n, ctx.s)
    return FormalCharacterProduct.from_counter(Counter({w: 2, scale(2, w): ctx.n - 1 - ctx.s // 2}))


# -- counts -----------------------------------------------------------------

@dataclass(frozen=True)
class IndexData:
    index: int
    dim: int
    c: int
    sum_degrees: int
    fundamental_degree: int


def index_and_c(ctx: ParabolicContext, degrees) -> IndexData:
    n, s = ctx.n, ctx.s
    index = n - s // 2 + 1
    dim = n * n + s * (s - 1) // 2 + (n - s) ** 2 + n - 1
    c = Fraction(dim + index, 2)
    closed = Fraction(n * n + n) + Fraction(3 * s * s, 4) - n * s - Fraction(s, 2)
    if c != closed or c.denominator != 1:
        raise ArithmeticError(f"c = {c} from dim and index, {closed} from the closed form")
    total = sum(degrees)
    return IndexData(index, dim, int(c), total, int(c) - total)


def degree_template(gamma: Root, ctx: ParabolicContext) -> int | None:
    """Closed-form degree for gamma in T (n > s); None when gamma matches no template."""
    n, s = ctx.n, ctx.s
    if ctx.regime == N_EQ_S:
        return None
    e = lambda *t: eps(n, *t)
    if gamma == e(s - 1, s):
        return s // 2
    if gamma == e(s - 1, -s):
        return s // 2 + 2
    for k in range(1, min((s - 2) // 2, n - s) + 1):
        if gamma == e(s - (2 * k - 1), -(s + k)):
            return s + 2 * k
    u = 0 if ctx.regime == LE else 3 * s // 2 - n
    for i in range(u + 1, s // 2):
        if gamma == e(2 * i - 1, -2 * i):
            return 2 * s - 2 * i + 2
    if ctx.regime == GT:
        for i in range(1, 3 * s // 2 - n + 1):
            if gamma == e(2 * i - 1, -2 * i):
                return 2 * n - s + 4 * i if i <= (3 * s - 2 * n) // 4 else 5 * s - 2 * n - 4 * i + 2
        return None
    if gamma == e(1, -(3 * s // 2)):
        return 2 * s
    u = (s // 2) % 2
    j0 = (s - 2 * u) // 4
    for j in range(j0, (n - s - 2 - u) // 2 + 1):
        if gamma == e(s + 2 * j + 1 + u, -(s + 2 * j + 2 + u)):
            return s + 4 * j + 4 + 2 * u
    for j in range(j0, (n - 1 - s - u) // 2 + 1):
        if gamma == e(-(s + 2 * j + u), s + 2 * j + 1 + u):
            return s + 4 * j + 2 + 2 * u
    return None
