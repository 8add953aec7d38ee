"""The contraction p~ = r x| m^a, its derived part p~', and the coadjoint action on p~'*.

Elements are kept in the coordinates of the ambient so(2n+1) (sparse dicts keyed by
``StructuredLieAlgebra`` basis indices); the contraction only changes which pairs
of basis vectors bracket nontrivially.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .chevalley import Element, StructuredLieAlgebra, build_algebra
from .errors import SupportError
from .linalg import RationalMatrix
from .rootspace import ParabolicContext, Root, dot, neg, simple_root


@dataclass
class ContractionAlgebra:
    """p~' = r' x| m^a inside the basis of so(2n+1).

    ``basis`` lists g-indices spanning p~' (root vectors of Delta(pi') then the coroots
    alpha_i^vee, i != s).  ``dual_basis`` lists g-indices spanning p'^- which stands for
    p~'* through the trace form.  ``full_basis`` adds alpha_s^vee, giving all of p~.
    """

    ctx: ParabolicContext
    g: StructuredLieAlgebra
    basis: list[int] = field(default_factory=list)
    dual_basis: list[int] = field(default_factory=list)
    full_basis: list[int] = field(default_factory=list)

    def __post_init__(self):
        ctx, g = self.ctx, self.g
        self.basis = [g.x(r) for r in ctx.delta_pi_prime] + [g.h(i) for i in ctx.coroot_indices]
        self.dual_basis = [g.x(neg(r)) for r in ctx.delta_pi_prime] + [g.h(i) for i in ctx.coroot_indices]
        cart = [g.h(i) for i in range(1, ctx.n + 1)]
        self.full_basis = [g.x(r) for r in ctx.delta_pi_prime] + cart
        self.position = {b: k for k, b in enumerate(self.basis)}
        self.dual_position = {b: k for k, b in enumerate(self.dual_basis)}
        self.in_m = {g.x(r) for r in ctx.nilradical}
        levi = set(ctx.levi_positive) | set(ctx.levi_negative)
        self.levi_root_vectors = {g.x(r) for r in levi}
        self.levi_cartan = {g.h(i) for i in ctx.coroot_indices}
        self._h_s_projection = self._project_alpha_s()
        self._table: dict[tuple[int, int], Element] | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    # -- brackets --------------------------------------------------------
    def bracket(self, a: Element, b: Element) -> Element:
        """[a, b]_p~: the so(2n+1) bracket with [m, m] switched off."""
        g, in_m = self.g, self.in_m
        out: Element = {}
        for i, u in a.items():
            im = i in in_m
            for j, v in b.items():
                if im and j in in_m:
                    continue
                for k, c in g.table.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + u * v * c
        return {k: v for k, v in out.items() if v}

    def bracket_basis(self, i: int, j: int) -> Element:
        if i in self.in_m and j in self.in_m:
            return {}
        return self.g.table.get((i, j), {})

    def structure_constants(self) -> dict[tuple[int, int], dict[int, object]]:
        """Nonzero [b_i, b_j]_p~ over the p~' basis, in p~' positions."""
        if self._table is None:
            table = {}
            for a, i in enumerate(self.basis):
                for b, j in enumerate(self.basis):
                    val = self.bracket_basis(i, j)
                    if val:
                        table[(a, b)] = {self.position[k]: c for k, c in val.items()}
            self._table = table
        return self._table

    # -- coadjoint action ------------------------------------------------
    def _project_alpha_s(self) -> Element:
        """The element P of h_pi' with alpha_j(P) = alpha_j(alpha_s^vee) for all j != s.

        alpha_s^vee - P then lies in h^{pi \\ pi'}, the trace-orthogonal of h_pi' in h.
        """
        ctx, g = self.ctx, self.g
        idx = ctx.coroot_indices
        simple = {j: simple_root(ctx.n, j) for j in idx}
        a = RationalMatrix([[dot(simple[j], g.coroots[i - 1]) for i in idx] for j in idx], len(idx))
        rhs = [dot(simple[j], g.coroots[ctx.s - 1]) for j in idx]
        coeffs = a.solve(rhs) if idx else []
        return {g.h(i): c for i, c in zip(idx, coeffs) if c}

    def project_to_levi(self, z: Element) -> Element:
        """pr_{r'}: drop m, m^- and the h^{pi \\ pi'} component."""
        g = self.g
        hs = g.h(self.ctx.s)
        out: Element = {}
        for k, v in z.items():
            if k in self.levi_root_vectors or k in self.levi_cartan:
                out[k] = out.get(k, 0) + v
            elif k == hs:
                for kk, c in self._h_s_projection.items():
                    out[kk] = out.get(kk, 0) + v * c
        return {k: v for k, v in out.items() if v}

    def coadjoint(self, x: Element, y: Element) -> Element:
        """ad* x (y) for x in p~' and y in p'^- (both in g coordinates)."""
        x_m = {k: v for k, v in x.items() if k in self.in_m}
        x_r = {k: v for k, v in x.items() if k not in self.in_m}
        out = self.g.bracket(x_r, y) if x_r else {}
        if x_m:
            for k, v in self.project_to_levi(self.g.bracket(x_m, y)).items():
                out[k] = out.get(k, 0) + v
        out = {k: v for k, v in out.items() if v}
        stray = [k for k in out if k not in self.dual_position]
        if stray:
            raise AssertionError(f"coadjoint image left p'^-: {[self.g.labels[k] for k in stray]}")
        return out

    def y_element(self, support: Iterable[Root]) -> Element:
        """y = sum of x_{-gamma} over the support, checked against Delta(pi')."""
        delta = set(self.ctx.delta_pi_prime)
        y: Element = {}
        for r in support:
            r = tuple(r)
            if r not in delta:
                raise SupportError(f"{r} is not in Delta(pi')")
            y[self.g.x(neg(r))] = y.get(self.g.x(neg(r)), 0) + 1
        return y

    def coadjoint_matrix_of(self, y: Element) -> RationalMatrix:
        cols = []
        for b in self.basis:
            img = self.coadjoint({b: 1}, y)
            col = [0] * self.dim
            for k, v in img.items():
                col[self.dual_position[k]] = v
            cols.append(col)
        return RationalMatrix.from_columns(cols, self.dim)


def build_contraction(ctx: ParabolicContext, g: StructuredLieAlgebra | None = None) -> ContractionAlgebra:
    return ContractionAlgebra(ctx, g if g is not None else build_algebra(ctx))


def contracted_bracket(a: Element, b: Element, algebra: ContractionAlgebra) -> Element:
    return algebra.bracket(a, b)


def coadjoint_matrix(y_support: Iterable[Root], ctx: ParabolicContext,
                     algebra: ContractionAlgebra | None = None) -> RationalMatrix:
    """Matrix of b -> ad* b (y) for y = sum x_{-gamma}; columns p~' basis, rows p'^- basis."""
    algebra = algebra if algebra is not None else build_contraction(ctx)
    return algebra.coadjoint_matrix_of(algebra.y_element(y_support))


def centre_of_contraction(ctx: ParabolicContext, algebra: ContractionAlgebra | None = None) -> int:
    """Dimension of the centre of the full p~ (all of h included).

    Rows of the adjoint map are added in batches, Cartan brackets first, and the
    computation stops as soon as the kernel is zero.
    """
    algebra = algebra if algebra is not None else build_contraction(ctx)
    basis = algebra.full_basis
    pos = {b: k for k, b in enumerate(basis)}
    dim = len(basis)
    order = [b for b in basis if algebra.g.labels[b][0] == "h"] + [b for b in basis if algebra.g.labels[b][0] == "x"]
    rows: list[list] = []
    rank = 0
    for start in range(0, dim, 8):
        for j in order[start:start + 8]:
            by_output: dict[int, list] = {}
            for i in basis:
                for k, c in algebra.bracket_basis(i, j).items():
                    by_output.setdefault(k, [0] * dim)[pos[i]] = c
            rows.extend(by_output.values())
        rank = RationalMatrix(rows, dim).rank() if rows else 0
        if rank == dim:
            return 0
    return dim - rank


# -- self-tests ---------------------------------------------------------------

def jacobi_residual(algebra: ContractionAlgebra, a: Element, b: Element, c: Element) -> Element:
    br = algebra.bracket
    out: Element = {}
    for term in (br(a, br(b, c)), br(b, br(c, a)), br(c, br(a, b))):
        for k, v in term.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def jacobi_failures(algebra: ContractionAlgebra, samples: int | None = None, seed: int = 0) -> int:
    """Number of basis triples violating Jacobi; all triples when ``samples`` is None."""
    basis = algebra.basis
    if samples is None:
        triples = ((i, j, k) for i in basis for j in basis for k in basis)
    else:
        rng = random.Random(seed)
        triples = ((rng.choice(basis), rng.choice(basis), rng.choice(basis)) for _ in range(samples))
    return sum(1 for i, j, k in triples if jacobi_residual(algebra, {i: 1}, {j: 1}, {k: 1}))


def random_element(rng: random.Random, indices: list[int], terms: int = 4, bound: int = 5) -> Element:
    out: Element = {}
    for i in rng.sample(indices, min(terms, len(indices))):
        c = rng.randint(-bound, bound)
        if c:
            out[i] = c
    return out


def duality_failures(algebra: ContractionAlgebra, samples: int = 1000, seed: int = 0) -> int:
    """Count random (x, x', y) with K(y, [x, x']_p~) != K(x, ad* x' (y))."""
    rng = random.Random(seed)
    g = algebra.g
    bad = 0
    for _ in range(samples):
        x = random_element(rng, algebra.basis)
        xp = random_element(rng, algebra.basis)
        y = random_element(rng, algebra.dual_basis)
        if g.trace_pairing(y, algebra.bracket(x, xp)) != g.trace_pairing(x, algebra.coadjoint(xp, y)):
            bad += 1
    return bad
