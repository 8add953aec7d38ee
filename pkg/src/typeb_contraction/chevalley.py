"""so(2n+1) in its defining representation, with root vectors and coroots as a basis.

The representation space has basis v_a for a in {n, ..., 1, 0, -1, ..., -n} and the
symmetric form <v_a, v_b> = delta_{a,-b}.  Positive root vectors are

    x_{e_i - e_j} = E_{i,j} - E_{-j,-i}
    x_{e_i + e_j} = E_{i,-j} - E_{j,-i}    (i < j)
    x_{e_i}       = E_{i,0} - E_{0,-i}

and negative ones are their transposes.  The Cartan part is spanned by the simple
coroots.  Then [x_a, x_{-a}] = a^vee for long roots and a^vee / 2 for short ones, so the
structure constants lie in (1/2)Z: with this form no rational rescaling of x_{+-e_i}
makes them all integral.

Elements are sparse dicts ``{basis_index: coefficient}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .rootspace import Root, add, all_roots, coroot, dot, simple_root

Element = dict[int, object]
SparseMatrix = dict[tuple[int, int], object]


def _num(x):
    """Collapse integral Fractions to int to keep tables readable and fast."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def root_matrix(r: Root) -> SparseMatrix:
    """Matrix of the designated root vector x_r."""
    nz = [(i + 1, c) for i, c in enumerate(r) if c]
    if len(nz) == 1:
        (i, c), = nz
        if c > 0:
            return {(i, 0): 1, (0, -i): -1}
        return {(0, i): 1, (-i, 0): -1}
    (i, ci), (j, cj) = nz
    if ci > 0 and cj < 0:
        return {(i, j): 1, (-j, -i): -1}
    if ci < 0 and cj > 0:
        return {(j, i): 1, (-i, -j): -1}
    if ci > 0:
        return {(i, -j): 1, (j, -i): -1}
    return {(-j, i): 1, (-i, j): -1}


def _leading(r: Root) -> tuple[tuple[int, int], int]:
    """An entry position that only x_r uses, with its value in x_r."""
    m = root_matrix(r)
    pos = next(iter(m))
    return pos, m[pos]


def cartan_matrix(t: Iterable) -> SparseMatrix:
    """diag(t_1, ..., t_n, 0, -t_n, ..., -t_1) as a sparse matrix."""
    out = {}
    for i, c in enumerate(t, start=1):
        if c:
            out[(i, i)] = c
            out[(-i, -i)] = -c
    return out


def matmul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    rows: dict[int, list] = {}
    for (k, l), v in b.items():
        rows.setdefault(k, []).append((l, v))
    out: SparseMatrix = {}
    for (i, k), u in a.items():
        for l, v in rows.get(k, ()):
            out[(i, l)] = out.get((i, l), 0) + u * v
    return {p: v for p, v in out.items() if v}


def commutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    out = dict(matmul(a, b))
    for p, v in matmul(b, a).items():
        out[p] = out.get(p, 0) - v
    return {p: v for p, v in out.items() if v}


def trace_of_product(a: SparseMatrix, b: SparseMatrix):
    return sum(u * b.get((j, i), 0) for (i, j), u in a.items())


class StructuredLieAlgebra:
    """Exact structure constants of so(2n+1) in the basis {x_r : r in Delta} + {alpha_k^vee}."""

    def __init__(self, n: int):
        self.n = n
        self.roots: list[Root] = all_roots(n)
        self.labels: list[tuple] = [("x", r) for r in self.roots] + [("h", k) for k in range(1, n + 1)]
        self.dim = len(self.labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.coroots = [coroot(simple_root(n, k)) for k in range(1, n + 1)]
        self._root_set = set(self.roots)
        self._lead = {r: _leading(r) for r in self.roots}
        self.table: dict[tuple[int, int], Element] = {}
        self._build_table()
        self.form: dict[int, dict[int, object]] = {}
        self._build_form()

    # -- basis helpers -------------------------------------------------
    def x(self, r: Root) -> int:
        return self.index[("x", tuple(r))]

    def h(self, k: int) -> int:
        return self.index[("h", k)]

    def basis_matrix(self, i: int) -> SparseMatrix:
        kind, val = self.labels[i]
        if kind == "x":
            return root_matrix(val)
        return cartan_matrix(self.coroots[val - 1])

    def matrix_of(self, a: Element) -> SparseMatrix:
        out: SparseMatrix = {}
        for i, c in a.items():
            for p, v in self.basis_matrix(i).items():
                out[p] = out.get(p, 0) + c * v
        return {p: v for p, v in out.items() if v}

    def cartan_coordinates(self, t) -> Element:
        """Express the diagonal element with eps-coordinates ``t`` on the coroot basis."""
        out: Element = {}
        acc = 0
        for k in range(1, self.n + 1):
            acc += t[k - 1]
            d = acc if k < self.n else Fraction(acc, 2)
            d = _num(Fraction(d))
            if d:
                out[self.h(k)] = d
        return out

    def decompose(self, m: SparseMatrix) -> Element:
        """Coordinates of a matrix in so(2n+1); raises if ``m`` is not in the span."""
        out: Element = {}
        for r, (pos, val) in self._lead.items():
            c = m.get(pos, 0)
            if c:
                out[self.x(r)] = _num(Fraction(c) / val)
        t = [m.get((i, i), 0) for i in range(1, self.n + 1)]
        out.update(self.cartan_coordinates(t))
        if self.matrix_of(out) != {p: v for p, v in m.items() if v}:
            raise ValueError("matrix is not in so(2n+1)")
        return out

    # -- structure constants -------------------------------------------
    def _build_table(self) -> None:
        n = self.n
        zero = (0,) * n
        for a in self.roots:
            ia = self.x(a)
            ma = root_matrix(a)
            for b in self.roots:
                c = add(a, b)
                if c != zero and c not in self._root_set:
                    continue
                val = self.decompose(commutator(ma, root_matrix(b)))
                if val:
                    self.table[(ia, self.x(b))] = val
            for k in range(1, n + 1):
                w = _num(Fraction(dot(a, self.coroots[k - 1])))
                if w:
                    self.table[(self.h(k), ia)] = {ia: w}
                    self.table[(ia, self.h(k))] = {ia: -w}

    def _build_form(self) -> None:
        for r in self.roots:
            i, j = self.x(r), self.x(tuple(-c for c in r))
            self.form.setdefault(i, {})[j] = trace_of_product(root_matrix(r), root_matrix(tuple(-c for c in r)))
        for k in range(1, self.n + 1):
            for l in range(1, self.n + 1):
                v = _num(Fraction(2 * dot(self.coroots[k - 1], self.coroots[l - 1])))
                if v:
                    self.form.setdefault(self.h(k), {})[self.h(l)] = v

    # -- operations ----------------------------------------------------
    def bracket_basis(self, i: int, j: int) -> Element:
        return self.table.get((i, j), {})

    def bracket(self, a: Element, b: Element) -> Element:
        out: Element = {}
        for i, u in a.items():
            for j, v in b.items():
                for k, c in self.table.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + u * v * c
        return {k: v for k, v in out.items() if v}

    def trace_pairing(self, a: Element, b: Element):
        total = 0
        for i, u in a.items():
            for j, k in self.form.get(i, {}).items():
                v = b.get(j)
                if v:
                    total += u * v * k
        return total


def build_algebra(ctx_or_n) -> StructuredLieAlgebra:
    """so(2n+1) for a ParabolicContext or a bare rank n."""
    n = ctx_or_n if isinstance(ctx_or_n, int) else ctx_or_n.n
    return StructuredLieAlgebra(n)


def combine(*terms: tuple[object, Element]) -> Element:
    """Linear combination sum c * a of sparse elements."""
    out: Element = {}
    for c, a in terms:
        for k, v in a.items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}
