"""Commutator and anticommutator structure of a twisted algebra.

From a twisted algebra A this builds the bilinear algebras A^- (product
[x,y] = (xy - yx)/2) and A^+ (product (xy + yx)/2) and analyzes them:
Jacobi and Jordan identities, derived and lower central series with
solvable/nilpotent flags, the Heisenberg ideal of the Z4 survivor, and
the chirality of inverses in the original algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg
from .poly import MultiPoly, symbolic_det


class BilinearAlgebra:
    """Finite-dimensional algebra given by its structure tensor.

    tensor[i][j] is the coefficient vector of e_i * e_j in the basis, so
    products of arbitrary coefficient vectors extend bilinearly.
    """

    def __init__(self, tensor):
        self.tensor = tuple(
            tuple(tuple(Fraction(c) for c in vec) for vec in row) for row in tensor
        )
        self.dimension = len(self.tensor)

    def product(self, x, y):
        n = self.dimension
        out = [0] * n
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0:
                    continue
                f = x[i] * y[j]
                for k, c in enumerate(self.tensor[i][j]):
                    if c != 0:
                        out[k] = out[k] + f * c
        return out

    def is_antisymmetric(self):
        n = self.dimension
        return all(
            all(a == -b for a, b in zip(self.tensor[i][j], self.tensor[j][i]))
            for i in range(n)
            for j in range(n)
        )

    def is_symmetric(self):
        n = self.dimension
        return all(
            self.tensor[i][j] == self.tensor[j][i] for i in range(n) for j in range(n)
        )

    def generic(self, prefix, variables):
        return [
            MultiPoly.variable(f"{prefix}{i}", variables)
            for i in range(self.dimension)
        ]


def commutator_algebra(algebra):
    """A^- with [v_i, v_j] = (C(i,j) - C(j,i))/2 v_{ij}."""
    n = algebra.group.order
    tensor = []
    for i in range(n):
        row = []
        for j in range(n):
            vec = [Fraction(0)] * n
            vec[algebra.group.mul(i, j)] = Fraction(
                algebra.constant(i, j) - algebra.constant(j, i), 2
            )
            row.append(vec)
        tensor.append(row)
    return BilinearAlgebra(tensor)


def anticommutator_algebra(algebra):
    """A^+ with v_i . v_j = (C(i,j) + C(j,i))/2 v_{ij}."""
    n = algebra.group.order
    tensor = []
    for i in range(n):
        row = []
        for j in range(n):
            vec = [Fraction(0)] * n
            vec[algebra.group.mul(i, j)] = Fraction(
                algebra.constant(i, j) + algebra.constant(j, i), 2
            )
            row.append(vec)
        tensor.append(row)
    return BilinearAlgebra(tensor)


def _generic_triple(L):
    n = L.dimension
    names = tuple(f"{p}{i}" for p in ("x", "y", "z") for i in range(n))
    return (
        L.generic("x", names),
        L.generic("y", names),
        L.generic("z", names),
    )


def _vec_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def _all_zero(vec):
    return all(c.is_zero if isinstance(c, MultiPoly) else c == 0 for c in vec)


def jacobi_check(L):
    """Symbolic Jacobi identity for an antisymmetric product.

    Returns (holds, counterexample_triple_or_None); the counterexample is
    a triple of basis indices when the defect is visible on basis vectors.
    """
    if not L.is_antisymmetric():
        raise ValueError("jacobi_check requires an antisymmetric tensor")
    x, y, z = _generic_triple(L)
    lhs = L.product(x, L.product(y, z))
    rhs = [
        a + b
        for a, b in zip(
            L.product(L.product(x, y), z), L.product(y, L.product(x, z))
        )
    ]
    if _all_zero(_vec_sub(lhs, rhs)):
        return True, None
    n = L.dimension
    basis = [[Fraction(int(i == k)) for i in range(n)] for k in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                a, b, c = basis[i], basis[j], basis[k]
                lv = L.product(a, L.product(b, c))
                rv = [
                    p + q
                    for p, q in zip(
                        L.product(L.product(a, b), c), L.product(b, L.product(a, c))
                    )
                ]
                if not _all_zero(_vec_sub(lv, rv)):
                    return False, (i, j, k)
    return False, None


def jordan_residual(J):
    """Symbolic (x.y).(x.x) - x.(y.(x.x)) for a symmetric product."""
    if not J.is_symmetric():
        raise ValueError("jordan_check requires a symmetric tensor")
    n = J.dimension
    names = tuple(f"{p}{i}" for p in ("x", "y") for i in range(n))
    x, y = J.generic("x", names), J.generic("y", names)
    xx = J.product(x, x)
    return _vec_sub(J.product(J.product(x, y), xx), J.product(x, J.product(y, xx)))


def jordan_check(J):
    """(holds, counterexample) for the Jordan identity."""
    residual = jordan_residual(J)
    if _all_zero(residual):
        return True, None
    n = J.dimension
    # scan small rational vectors for a concrete violation
    from itertools import product as iproduct

    for x in iproduct((0, 1, -1), repeat=n):
        if not any(x):
            continue
        xx = J.product(list(x), list(x))
        for y in iproduct((0, 1, -1), repeat=n):
            if not any(y):
                continue
            lhs = J.product(J.product(list(x), list(y)), xx)
            rhs = J.product(list(x), J.product(list(y), xx))
            if not _all_zero(_vec_sub(lhs, rhs)):
                return False, (list(x), list(y))
    return False, None


DERIVED = "derived"
LOWER_CENTRAL = "lower-central"

# catalogue identification of the Z4 survivor's commutator algebra, kept
# as an annotation rather than re-derived: in de Graaf's list of solvable
# 4-dimensional Lie algebras it is M^14_a with a = -1
Z4_COMMUTATOR_CLASSIFICATION = "M^14_a (a = -1), solvable, not nilpotent"


@dataclass
class SeriesResult:
    kind: str
    dimensions: list
    subspaces: list
    terminates: bool
    stabilizes: bool

    @property
    def solvable(self):
        return self.kind == DERIVED and self.terminates

    @property
    def nilpotent(self):
        return self.kind == LOWER_CENTRAL and self.terminates


def _span_products(L, rows_a, rows_b):
    products = []
    for a in rows_a:
        for b in rows_b:
            v = L.product(a, b)
            if any(c != 0 for c in v):
                products.append(v)
    reduced, _ = _linalg.rref(products) if products else ([], [])
    return reduced


def series(L, kind, max_steps=6):
    """Derived or lower central series by exact span closure.

    Stops at {0}, at stabilization (span equal to the previous step), or
    after max_steps.  The Z4 survivor's commutator algebra stabilizes at
    the 3-dimensional Heisenberg ideal, so stabilization detection is
    required for termination.
    """
    if kind not in (DERIVED, LOWER_CENTRAL):
        raise ValueError(f"unknown series kind {kind!r}")
    n = L.dimension
    full = [[Fraction(int(i == k)) for i in range(n)] for k in range(n)]
    current = full
    subspaces = [full]
    dims = [n]
    terminates = False
    stabilizes = False
    for _ in range(max_steps):
        left = current if kind == DERIVED else full
        nxt = _span_products(L, left, current)
        dims.append(len(nxt))
        subspaces.append(nxt)
        if not nxt:
            terminates = True
            break
        if len(nxt) == len(current) and _linalg.same_rowspace(nxt, current):
            stabilizes = True
            break
        current = nxt
    return SeriesResult(kind, dims, subspaces, terminates, stabilizes)


def is_ideal(L, rows):
    """True if the row span S satisfies [L, S] <= S."""
    n = L.dimension
    basis = [[Fraction(int(i == k)) for i in range(n)] for k in range(n)]
    for x in basis:
        for s in rows:
            if not _linalg.in_rowspace(rows, L.product(x, s)):
                return False
    return True


def heisenberg_ideal_check(L, span_indices=(0, 1, 3)):
    """Check that span{v0, v1, v3} is an ideal isomorphic to the
    Heisenberg algebra: one independent bracket landing on a central
    element of the ideal."""
    n = L.dimension
    rows = [
        [Fraction(int(i == k)) for i in range(n)] for k in span_indices
    ]
    if not is_ideal(L, rows):
        return False
    v0 = rows[0]
    # v0 central within the ideal
    for s in rows:
        if any(c != 0 for c in L.product(v0, s)):
            return False
    # the bracket of the two non-central generators is +-v0
    b = L.product(rows[2], rows[1])
    if b != v0 and b != [-c for c in v0]:
        return False
    # and the derived algebra of the ideal is exactly span{v0}
    derived = _span_products(L, rows, rows)
    return len(derived) == 1 and _linalg.in_rowspace([v0], derived[0])


# -- chirality of inverses ---------------------------------------------

TWO_SIDED = "two-sided"
CHIRAL = "chiral"


def _adjugate_column0(rows):
    """First column of the adjugate: signed minors along row 0.

    (adj M . e0)_i = (-1)^i det(M with row 0 and column i removed), so
    M^-1 e0 = that vector divided by det M.
    """
    n = len(rows)
    out = []
    for i in range(n):
        minor = [
            [rows[r][c] for c in range(n) if c != i] for r in range(1, n)
        ]
        d = symbolic_det(minor)
        out.append(d if i % 2 == 0 else -d)
    return out


def chiral_inverse_check(algebra):
    """Decide symbolically whether inverses are two-sided or chiral.

    Solves M^L LI = e0 and M^R RI = e0 by adjugates over generic
    components; inverses are two-sided iff LI det^R = RI det^L as
    polynomial vectors.  For the chiral case returns a witness element
    whose left and right inverses differ.
    """
    n = algebra.group.order
    names = tuple(f"x{i}" for i in range(n))
    x = algebra.generic_element("x", names)
    ml = algebra.mult_matrix_left(x)
    mr = algebra.mult_matrix_right(x)
    det_l = symbolic_det(ml)
    det_r = symbolic_det(mr)
    li_num = _adjugate_column0(ml)
    ri_num = _adjugate_column0(mr)
    diff = [a * det_r - b * det_l for a, b in zip(li_num, ri_num)]
    if all(p.is_zero for p in diff):
        return TWO_SIDED, None
    # hunt a rational witness
    from itertools import product as iproduct

    for coeffs in iproduct((0, 1, -1, 2), repeat=n):
        if not any(coeffs):
            continue
        e = algebra.element(coeffs)
        try:
            li = algebra.left_inverse(e)
            ri = algebra.right_inverse(e)
        except ZeroDivisionError:
            continue
        if li != ri:
            return CHIRAL, e
    return CHIRAL, None
