"""Type B_n roots in epsilon coordinates and the data of the maximal parabolic dropping alpha_s.

Roots are plain integer tuples ``(c_1, ..., c_n)`` over the orthonormal basis
eps_1, ..., eps_n.  Weights are tuples of ``Fraction``.  Every root list exposed
here is sorted lexicographically so downstream reports are stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError

Root = tuple[int, ...]
Weight = tuple[Fraction, ...]

N_EQ_S = "N_EQ_S"
LE = "LE"
GT = "GT"


def is_root(v: Sequence[int]) -> bool:
    """True iff ``v`` is +-eps_i or +-eps_i +- eps_j."""
    support = [c for c in v if c != 0]
    return len(support) in (1, 2) and all(c in (1, -1) for c in support)


def eps(n: int, *terms: int) -> Root:
    """Signed-index constructor: ``eps(5, 2, -4)`` is eps_2 - eps_4, ``eps(5, -3)`` is -eps_3."""
    v = [0] * n
    for t in terms:
        if t == 0 or abs(t) > n:
            raise ValueError(f"index {t} out of range for n={n}")
        v[abs(t) - 1] += 1 if t > 0 else -1
    r = tuple(v)
    if not is_root(r):
        raise ValueError(f"{terms} does not give a root")
    return r


def add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def neg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def scale(c, a: Sequence) -> tuple:
    return tuple(c * x for x in a)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def is_long(r: Root) -> bool:
    return sum(1 for c in r if c) == 2


def coroot(r: Sequence[int]) -> Weight:
    """alpha^vee = 2 alpha / (alpha, alpha) as an eps-vector."""
    norm = dot(r, r)
    return tuple(Fraction(2 * c, norm) for c in r)


def pairing(w: Sequence, r: Sequence[int]) -> Fraction:
    """<w, r^vee> = 2 (w, r) / (r, r)."""
    return Fraction(2 * dot(w, r), dot(r, r))


def simple_root(n: int, i: int) -> Root:
    """alpha_i = eps_i - eps_{i+1} for i < n, alpha_n = eps_n."""
    if not 1 <= i <= n:
        raise ValueError(f"no simple root alpha_{i} in B_{n}")
    return eps(n, i, -(i + 1)) if i < n else eps(n, n)


def simple_coordinates(v: Sequence[int]) -> tuple[int, ...]:
    """Coefficients of ``v`` on alpha_1..alpha_n: the k-th one is v_1 + ... + v_k."""
    out, acc = [], 0
    for c in v:
        acc += c
        out.append(acc)
    return tuple(out)


def all_roots(n: int) -> list[Root]:
    roots = set()
    for i in range(1, n + 1):
        roots.add(eps(n, i))
        roots.add(eps(n, -i))
    for i, j in combinations(range(1, n + 1), 2):
        for si in (1, -1):
            for sj in (1, -1):
                roots.add(eps(n, si * i, sj * j))
    return sorted(roots)


def fundamental_weight(n: int, s: int) -> Weight:
    """varpi_s = eps_1 + ... + eps_s for s < n and (eps_1 + ... + eps_n)/2 for s = n."""
    if not 1 <= s <= n:
        raise ValueError(f"no fundamental weight varpi_{s} in B_{n}")
    if s == n:
        return tuple(Fraction(1, 2) for _ in range(n))
    return tuple(Fraction(1 if i < s else 0) for i in range(n))


def fmt_root(v: Sequence) -> str:
    """Readable form such as ``e1+e3`` or ``-e2`` (rational coefficients shown as needed)."""
    parts = []
    for i, c in enumerate(v, start=1):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag}*"
        parts.append(f"{sign}{coef}e{i}")
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


@dataclass(frozen=True)
class ParabolicContext:
    """Root data for B_n with pi' = pi minus {alpha_s}."""

    n: int
    s: int
    positive_roots: tuple[Root, ...] = field(repr=False)
    levi_positive: tuple[Root, ...] = field(repr=False)
    levi_negative: tuple[Root, ...] = field(repr=False)
    delta_pi_prime: tuple[Root, ...] = field(repr=False)
    coroot_indices: tuple[int, ...] = field(repr=False)
    coroot_basis: tuple[Weight, ...] = field(repr=False)
    regime: str = LE

    @property
    def roots(self) -> tuple[Root, ...]:
        return tuple(sorted(self.positive_roots + tuple(neg(r) for r in self.positive_roots)))

    @property
    def nilradical(self) -> tuple[Root, ...]:
        """Delta^+ minus Delta^+_{pi'}: the roots of m."""
        levi = set(self.levi_positive)
        return tuple(r for r in self.positive_roots if r not in levi)

    def in_nilradical(self, r: Root) -> bool:
        return simple_coordinates(r)[self.s - 1] > 0

    def in_levi(self, r: Root) -> bool:
        return simple_coordinates(r)[self.s - 1] == 0

    @property
    def index(self) -> int:
        return self.n - self.s // 2 + 1

    @property
    def dim_p_tilde_prime(self) -> int:
        return len(self.delta_pi_prime) + self.n - 1


def build_context(n: int, s: int) -> ParabolicContext:
    if n < 2 or s < 2 or s > n or s % 2:
        raise DomainError(f"need n >= 2 and s even with 2 <= s <= n, got n={n}, s={s}")
    roots = all_roots(n)
    positive = [r for r in roots if all(c >= 0 for c in simple_coordinates(r))]
    levi_pos = [r for r in positive if simple_coordinates(r)[s - 1] == 0]
    levi_neg = sorted(neg(r) for r in levi_pos)
    delta = sorted(positive + levi_neg)
    idx = tuple(i for i in range(1, n + 1) if i != s)
    if n == s:
        regime = N_EQ_S
    elif 3 * s <= 2 * n:
        regime = LE
    else:
        regime = GT
    return ParabolicContext(
        n=n,
        s=s,
        positive_roots=tuple(positive),
        levi_positive=tuple(levi_pos),
        levi_negative=tuple(levi_neg),
        delta_pi_prime=tuple(delta),
        coroot_indices=idx,
        coroot_basis=tuple(coroot(simple_root(n, i)) for i in idx),
        regime=regime,
    )


def weight_coordinates(w: Sequence, ctx: ParabolicContext) -> tuple[Fraction, ...]:
    """Restriction of ``w`` to h_{pi'}: the values <w, alpha_i^vee> for i != s."""
    return tuple(Fraction(dot(w, cv)) for cv in ctx.coroot_basis)


def weight_sum(vectors: Iterable[Sequence], n: int) -> tuple:
    total = (0,) * n
    for v in vectors:
        total = add(total, v)
    return total
