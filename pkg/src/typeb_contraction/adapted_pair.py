"""Combinatorial data of the adapted pair (h, y) and its certificates.

The sets S and T, the Heisenberg families Gamma_gamma with their involutions theta,
the classification of O into O1/O2/O3, the two sequences attached to a root of O,
and the perfect-matching check on chains.  Index ranges follow the floor
convention: ``a // b`` with empty ranges contributing nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Iterator

from .errors import (
    CardinalityError,
    ConditionCError,
    ConditionCPrimeError,
    RegimeError,
    SequenceError,
    StructureError,
)
from .linalg import RationalMatrix
from .rootspace import GT, LE, N_EQ_S, ParabolicContext, Root, add, eps, fmt_root, weight_coordinates


def _span(lo: int, hi: int) -> range:
    """Inclusive integer range lo..hi (empty when lo > hi)."""
    return range(lo, hi + 1)


def _parity_shift(s: int) -> int:
    """0 when s/2 is even, 1 when s/2 is odd."""
    return (s // 2) % 2


# -- S ----------------------------------------------------------------------

def build_S(ctx: ParabolicContext) -> tuple[list[Root], list[Root], list[Root]]:
    """(S_m, S_plus, S_minus): n - 1 roots whose restrictions form a basis of h_pi'^*."""
    n, s = ctx.n, ctx.s
    e = partial(eps, n)
    s_m = [e(s)]
    s_plus = [e(2 * i - 1, 2 * i) for i in _span(1, s // 2 - 1)]
    if ctx.regime == N_EQ_S:
        s_minus = [e(s - k, -k) for k in _span(1, s // 2 - 1)]
        return s_m, s_plus, s_minus

    kmax = (s - 2) // 2 if ctx.regime == LE else n - s
    for k in _span(1, kmax):
        s_m += [e(s - (2 * k - 1), s + k), e(s - 2 * k, -(s + k))]

    if ctx.regime == LE:
        u = _parity_shift(s)
        j0 = (s - 2 * u) // 4
        s_plus = [e(1, 3 * s // 2)] + s_plus
        s_plus += [e(s + 2 * j + 1 + u, s + 2 * j + 2 + u) for j in _span(j0, (n - 2 - s - u) // 2)]
        s_minus = [e(-(s + 2 * j + u), -(s + 2 * j + 1 + u)) for j in _span(j0, (n - 1 - s - u) // 2)]
    else:
        s_minus = [e(3 * s - 2 * n - k, -k) for k in _span(1, 3 * s // 2 - n - 1)]
    return s_m, s_plus, s_minus


def restriction_matrix(S: list[Root], ctx: ParabolicContext) -> RationalMatrix:
    """Rows gamma(alpha_i^vee), i != s, one per gamma in S."""
    return RationalMatrix([list(weight_coordinates(g, ctx)) for g in S], ctx.n - 1)


def check_S_basis(S: list[Root], ctx: ParabolicContext) -> bool:
    if len(S) != ctx.n - 1:
        return False
    return restriction_matrix(S, ctx).det() != 0


def solve_h(S: list[Root], ctx: ParabolicContext) -> tuple[Fraction, ...]:
    """Coordinates of h on the coroot basis of h_pi' with gamma(h) = 1 for all gamma in S."""
    return tuple(restriction_matrix(S, ctx).solve([1] * len(S)))


# -- Heisenberg families ------------------------------------------------------

def _family_members(ctx: ParabolicContext) -> Iterator[tuple[Root, list[Root]]]:
    """(centre, other members) for every family, in construction order."""
    n, s = ctx.n, ctx.s
    e = partial(eps, n)

    for i in _span(1, s // 2 - 1):
        a, b = 2 * i - 1, 2 * i
        yield e(a, b), [r for j in _span(2 * i + 1, s) for r in (e(a, j), e(a, -j), e(b, -j), e(b, j))]

    if ctx.regime == LE:
        t = 3 * s // 2
        yield e(1, t), [r for k in _span(1, n - t) for r in (e(1, t + k), e(1, -(t + k)), e(t, -(t + k)), e(t, t + k))]
        u = _parity_shift(s)
        j0 = (s - 2 * u) // 4
        for j in _span(j0, (n - 2 - s - u) // 2):
            a = s + 2 * j + 1 + u
            yield e(a, a + 1), [r for k in _span(a + 2, n) for r in (e(a, k), e(a, -k), e(a + 1, -k), e(a + 1, k))]
        for j in _span(j0, (n - 1 - s - u) // 2):
            a = s + 2 * j + u
            yield e(-a, -(a + 1)), [r for k in _span(a + 2, n) for r in (e(-a, k), e(-a, -k), e(-(a + 1), -k), e(-(a + 1), k))]
    else:
        for j in _span(1, 3 * s // 2 - n - 1):
            a = 3 * s - 2 * n - j
            yield e(a, -j), [r for k in _span(j + 1, a - 1) for r in (e(k, -j), e(a, -k))]

    for k in _span(1, min((s - 2) // 2, n - s)):
        a, b = s - (2 * k - 1), s + k
        members = [r for i in _span(1, n - s - k) for r in (e(a, b + i), e(a, -(b + i)), e(b, -(b + i)), e(b, b + i))]
        members += [r for j in _span(1, s - 2 * k) for r in (e(b, a - j), e(a, -(a - j)))]
        yield e(a, b), members
        a = s - 2 * k
        members = [r for i in _span(1, n - s - k) for r in (e(a, -(b + i)), e(a, b + i), e(-b, b + i), e(-b, -(b + i)))]
        members += [r for j in _span(1, s - 2 * k - 1) for r in (e(-b, a - j), e(a, -(a - j)))]
        yield e(a, -b), members

    members = [r for i in _span(s + 1, n) for r in (e(i), e(-i), e(s, -i), e(s, i))]
    members += [r for j in _span(1, s - 1) for r in (e(s, -j), e(j))]
    yield e(s), members


def build_heisenberg_family(ctx: ParabolicContext, S: list[Root] | None = None
                            ) -> tuple[dict[Root, tuple[Root, ...]], dict[Root, Root]]:
    """Families Gamma_gamma (centre first) keyed by centre, and theta on O.

    Each family is checked to be a Heisenberg set: every non-central member has
    exactly one partner in the family summing to the centre.
    """
    if ctx.regime == N_EQ_S:
        raise RegimeError("Heisenberg families are only built for n > s")
    delta = set(ctx.delta_pi_prime)
    families: dict[Root, tuple[Root, ...]] = {}
    theta: dict[Root, Root] = {}
    seen: set[Root] = set()
    for centre, members in _family_members(ctx):
        fam = [centre] + members
        if len(set(fam)) != len(fam):
            raise StructureError(f"repeated root in family of {fmt_root(centre)}")
        for r in fam:
            if r not in delta:
                raise StructureError(f"{fmt_root(r)} in family of {fmt_root(centre)} is outside Delta(pi')")
            if r in seen:
                raise StructureError(f"{fmt_root(r)} lies in two families")
        seen.update(fam)
        mset = set(members)
        for a in members:
            partners = [b for b in members if add(a, b) == centre]
            if len(partners) != 1 or partners[0] == a:
                raise StructureError(f"{fmt_root(a)} has no unique partner in family of {fmt_root(centre)}")
            theta[a] = partners[0]
        assert all(theta[theta[a]] == a for a in mset)
        families[centre] = tuple(fam)
    if S is not None and set(S) != set(families):
        raise StructureError("family centres differ from S")
    return families, theta


# -- T ----------------------------------------------------------------------

def explicit_T(ctx: ParabolicContext) -> list[Root]:
    """The closed-form list of T in each regime."""
    n, s = ctx.n, ctx.s
    e = partial(eps, n)
    T = [e(s - 1, s)] + [e(2 * i - 1, -2 * i) for i in _span(1, s // 2)]
    if ctx.regime == N_EQ_S:
        return sorted(T)
    if ctx.regime == GT:
        T += [e(s - (2 * k - 1), -(s + k)) for k in _span(1, n - s)]
        return sorted(T)
    u = _parity_shift(s)
    j0 = (s - 2 * u) // 4
    T.append(e(1, -(3 * s // 2)))
    T += [e(s - (2 * k - 1), -(s + k)) for k in _span(1, (s - 2) // 2)]
    T += [e(s + 2 * j + 1 + u, -(s + 2 * j + 2 + u)) for j in _span(j0, (n - 2 - s - u) // 2)]
    T += [e(-(s + 2 * l + u), s + 2 * l + 1 + u) for l in _span(j0, (n - 1 - s - u) // 2)]
    return sorted(T)


def build_T(ctx: ParabolicContext, gamma_families: dict[Root, tuple[Root, ...]] | None = None) -> list[Root]:
    """Complement of the families in Delta(pi') (n > s) or the closed-form list (n = s)."""
    if ctx.regime == N_EQ_S:
        T = explicit_T(ctx)
    else:
        if gamma_families is None:
            gamma_families, _ = build_heisenberg_family(ctx)
        covered = {r for fam in gamma_families.values() for r in fam}
        T = [r for r in ctx.delta_pi_prime if r not in covered]
        if T != explicit_T(ctx):
            raise StructureError("complement of the families differs from the closed-form T")
    if len(T) != ctx.index:
        raise CardinalityError(f"|T| = {len(T)}, expected {ctx.index}")
    return T


# -- certificate ------------------------------------------------------------

@dataclass
class OClass:
    order: int
    s_alpha: tuple[Root, ...]
    tilde_alpha: Root | None = None

    @property
    def label(self) -> str:
        return f"O{self.order}"


@dataclass
class AdaptedPairCertificate:
    ctx: ParabolicContext
    S_m: list[Root]
    S_plus: list[Root]
    S_minus: list[Root]
    gamma_families: dict[Root, tuple[Root, ...]]
    theta: dict[Root, Root]
    T: list[Root]
    h_coords: tuple[Fraction, ...]
    per_gamma: dict = field(default_factory=dict)
    _classes: dict = field(default_factory=dict, repr=False)

    @property
    def S(self) -> list[Root]:
        return self.S_m + self.S_plus + self.S_minus

    @property
    def y_support(self) -> list[Root]:
        return self.S

    def _o_part(self, centres) -> list[Root]:
        return sorted(r for c in centres for r in self.gamma_families.get(c, ())[1:])

    @property
    def O(self) -> list[Root]:
        return self._o_part(self.S)

    @property
    def O_m(self) -> list[Root]:
        return self._o_part(self.S_m)

    @property
    def O_plus(self) -> list[Root]:
        return self._o_part(self.S_plus)

    @property
    def O_minus(self) -> list[Root]:
        return self._o_part(self.S_minus)

    def s_alpha(self, alpha: Root) -> tuple[Root, ...]:
        """beta in O with alpha + beta in S and [x_alpha, x_beta] nonzero in the contraction."""
        in_m = self.ctx.in_nilradical
        out = []
        for g in self.S:
            beta = tuple(x - y for x, y in zip(g, alpha))
            if beta in self.theta and not (in_m(alpha) and in_m(beta)):
                out.append(beta)
        return tuple(sorted(out))


def build_certificate(ctx: ParabolicContext) -> AdaptedPairCertificate:
    s_m, s_plus, s_minus = build_S(ctx)
    S = s_m + s_plus + s_minus
    if len(S) != ctx.n - 1:
        raise CardinalityError(f"|S| = {len(S)}, expected {ctx.n - 1}")
    if ctx.regime == N_EQ_S:
        families, theta = {}, {}
    else:
        families, theta = build_heisenberg_family(ctx, S)
    T = build_T(ctx, families)
    return AdaptedPairCertificate(ctx, s_m, s_plus, s_minus, families, theta, T, solve_h(S, ctx))


def classify_O(alpha: Root, data: AdaptedPairCertificate) -> OClass:
    if alpha in data._classes:
        return data._classes[alpha]
    ctx = data.ctx
    th = data.theta[alpha]
    if ctx.in_nilradical(alpha) and ctx.in_nilradical(th):
        raise ConditionCError(f"{fmt_root(alpha)} and its partner both lie in m")
    sa = data.s_alpha(alpha)
    if len(sa) not in (1, 2, 3):
        raise ConditionCPrimeError(f"|S_alpha| = {len(sa)} for {fmt_root(alpha)}")
    tilde = None
    if len(sa) == 2:
        tilde = th
    elif len(sa) == 3:
        witnesses = [b for b in sa if b != th and len(data.s_alpha(b)) == 2 and len(data.s_alpha(data.theta[b])) == 1]
        if not witnesses:
            raise ConditionCPrimeError(f"no witness for O3 root {fmt_root(alpha)}")
        tilde = witnesses[0]
    cls = OClass(len(sa), sa, tilde)
    data._classes[alpha] = cls
    return cls


def exceptional_roots(data: AdaptedPairCertificate) -> set[Root]:
    """Roots equal to tilde(beta) or theta(tilde(beta)) for some beta in O3."""
    out = set()
    for b in data.O:
        c = classify_O(b, data)
        if c.order == 3:
            out.add(c.tilde_alpha)
            out.add(data.theta[c.tilde_alpha])
    return out


def next_term(a: Root, data: AdaptedPairCertificate) -> Root:
    """One step of either sequence: the successor of ``a``."""
    b = data.theta[a]
    cb = classify_O(b, data)
    if cb.order == 1:
        return a
    cand = [x for x in cb.s_alpha if x != a and x != cb.tilde_alpha]
    if len(cand) != 1:
        raise SequenceError(f"{len(cand)} admissible successors after {fmt_root(a)}")
    return cand[0]


def run_sequence(start: Root, data: AdaptedPairCertificate) -> tuple[list[Root], int | None, int | None]:
    """Iterate from ``start``; returns (terms, stationary rank, cycle length)."""
    cap = 2 * data.ctx.n ** 2
    terms = [start]
    for _ in range(cap):
        nxt = next_term(terms[-1], data)
        if nxt == terms[-1]:
            return terms, len(terms) - 1, None
        if nxt in terms:
            j = len(terms) - terms.index(nxt)
            return terms, None, j
        terms.append(nxt)
    raise SequenceError(f"sequence from {fmt_root(start)} exceeded {cap} steps")


@dataclass
class Stationarity:
    stationary: bool
    ranks: tuple[int, int] | None
    cycle_length: int | None
    forward: list[Root]
    backward: list[Root]


def is_stationary(alpha: Root, data: AdaptedPairCertificate) -> Stationarity:
    """Run (alpha^i) from alpha and (alpha^(i)) from theta(alpha)."""
    if alpha in exceptional_roots(data):
        raise ValueError(f"{fmt_root(alpha)} is tilde(beta) or theta(tilde(beta)) for an O3 root")
    fwd, n0, c0 = run_sequence(alpha, data)
    bwd, n1, c1 = run_sequence(data.theta[alpha], data)
    if n0 is not None and n1 is not None:
        return Stationarity(True, (n0, n1), None, fwd, bwd)
    return Stationarity(False, None, c0 if c0 is not None else c1, fwd, bwd)


# -- chains -----------------------------------------------------------------

def chain_vertices(alpha: Root, data: AdaptedPairCertificate) -> list[Root]:
    st = is_stationary(alpha, data)
    chain = set()
    for a in st.forward + st.backward:
        chain.add(a)
        chain.add(data.theta[a])
    extra = set()
    for b in chain:
        c = classify_O(b, data)
        if c.order == 3:
            extra.add(c.tilde_alpha)
            extra.add(data.theta[c.tilde_alpha])
    return sorted(chain | extra)


def chain_graph(alpha: Root, data: AdaptedPairCertificate) -> tuple[list[Root], list[tuple[Root, Root]]]:
    """Vertices of the chain through alpha and edges joining pairs that sum into S, not both in m."""
    verts = chain_vertices(alpha, data)
    S = set(data.S)
    in_m = data.ctx.in_nilradical
    edges = [(u, v) for i, u in enumerate(verts) for v in verts[i + 1:]
             if add(u, v) in S and not (in_m(u) and in_m(v))]
    return verts, edges


def perfect_matchings(verts: list, edges: list[tuple]) -> list[frozenset]:
    adj: dict = {v: set() for v in verts}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out: list[frozenset] = []

    def extend(free: frozenset, acc: list):
        if not free:
            out.append(frozenset(acc))
            return
        v = min(free)
        for u in sorted(adj[v] & free):
            extend(free - {u, v}, acc + [frozenset((u, v))])

    extend(frozenset(verts), [])
    return out


def verify_chain_matching(alpha: Root, data: AdaptedPairCertificate) -> bool:
    """True iff theta is the unique perfect matching of the chain graph through alpha."""
    verts, edges = chain_graph(alpha, data)
    matchings = perfect_matchings(verts, edges)
    theta_match = frozenset(frozenset((v, data.theta[v])) for v in verts)
    return len(matchings) == 1 and matchings[0] == theta_match


def chain_dot(alpha: Root, data: AdaptedPairCertificate) -> str:
    """Graphviz source for the chain through alpha; theta edges drawn bold."""
    verts, edges = chain_graph(alpha, data)
    lines = [f'graph "{fmt_root(alpha)}" {{']
    for v in verts:
        lines.append(f'  "{fmt_root(v)}" [label="{fmt_root(v)} ({classify_O(v, data).label})"];')
    for u, v in edges:
        style = ' [style=bold]' if data.theta[u] == v else ""
        lines.append(f'  "{fmt_root(u)}" -- "{fmt_root(v)}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- condition report ---------------------------------------------------------

@dataclass
class ConditionResult:
    passed: bool
    counterexamples: list[str] = field(default_factory=list)


def verify_conditions(data: AdaptedPairCertificate) -> dict[str, ConditionResult]:
    """(C), (C'), O+- locality, stationarity of O^m, O3 placement and the shape of O3 witnesses."""
    ctx = data.ctx
    res = {k: ConditionResult(True) for k in
           ("heisenberg", "condition_C", "condition_Cprime", "o_pm_locality", "stationarity", "o3_regime", "o3_witness_shape")}

    def fail(key, msg):
        res[key].passed = False
        res[key].counterexamples.append(msg)

    for a in data.O:
        th = data.theta.get(a)
        centre = add(a, th) if th is not None else None
        if th is None or data.theta.get(th) != a or th == a or centre not in data.gamma_families or a not in data.gamma_families[centre]:
            fail("heisenberg", fmt_root(a))
    if not res["heisenberg"].passed:
        return res

    classes = {}
    for a in data.O:
        try:
            classes[a] = classify_O(a, data)
        except ConditionCError as exc:
            fail("condition_C", str(exc))
        except ConditionCPrimeError as exc:
            fail("condition_Cprime", str(exc))
    if not (res["condition_C"].passed and res["condition_Cprime"].passed):
        return res

    for part in (data.O_plus, data.O_minus):
        ps = set(part)
        for a in part:
            if set(classes[a].s_alpha) & ps != {data.theta[a]}:
                fail("o_pm_locality", fmt_root(a))

    exceptional = exceptional_roots(data)
    for a in data.O_m:
        if a in exceptional:
            fail("stationarity", f"{fmt_root(a)} is excluded from the sequence construction")
            continue
        try:
            if not is_stationary(a, data).stationary:
                fail("stationarity", fmt_root(a))
        except SequenceError as exc:
            fail("stationarity", f"{fmt_root(a)}: {exc}")

    o3 = [a for a in data.O if classes[a].order == 3]
    if bool(o3) == (3 * ctx.s <= 2 * ctx.n):
        fail("o3_regime", f"|O3| = {len(o3)} with 3s/2 {'<=' if 3 * ctx.s <= 2 * ctx.n else '>'} n")
    bound = 3 * ctx.s // 2 - ctx.n - 1
    for a in o3:
        t = classes[a].tilde_alpha
        nz = [(i + 1, c) for i, c in enumerate(t) if c]
        ok = (len(nz) == 2 and all(c == 1 for _, c in nz) and 1 <= nz[0][0] <= bound < nz[1][0] <= ctx.s - 2)
        if not ok:
            fail("o3_witness_shape", f"{fmt_root(a)} -> {fmt_root(t)}")
    return res


def verify_all_chains(data: AdaptedPairCertificate) -> ConditionResult:
    """Unique-matching check on the chain through every stationary, non-excluded root of O."""
    out = ConditionResult(True)
    exceptional = exceptional_roots(data)
    for a in data.O:
        if a in exceptional:
            continue
        if not is_stationary(a, data).stationary:
            continue
        if not verify_chain_matching(a, data):
            out.passed = False
            out.counterexamples.append(fmt_root(a))
    return out
