"""Twisted group algebras over exact scalar rings.

A twisted group algebra is determined by a grading group G and a unital
structure constant C: products of basis vectors follow
``v_a * v_b = C(a, b) v_{ab}`` and extend bilinearly.  Elements are
coefficient vectors indexed by group elements; coefficients may be exact
rationals, integers mod an odd prime, or polynomials (for symbolic
verification), since the product formula only needs ring arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from . import _linalg
from .groups import (
    CONVENTIONS,
    LEFT_STANDARD,
    RIGHT_STANDARD,
    group_by_name,
)
from .poly import MultiPoly


class ModInt:
    """Integer mod an odd prime, with field inverse."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ModInt(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ModInt(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ModInt(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ModInt(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.value, self.p)

    def __pow__(self, k):
        return ModInt(pow(self.value, k, self.p), self.p)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse mod p")
        return ModInt(pow(self.value, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class Rationals:
    """Exact rational scalars (the ring used for everything real)."""

    name = "rational"

    def coerce(self, x):
        if isinstance(x, (Fraction, int)):
            return Fraction(x)
        if isinstance(x, MultiPoly):
            return x
        raise TypeError(f"cannot coerce {type(x).__name__} into the rationals")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "Rationals()"


class IntegersModP:
    """Scalars in Z_p for an odd prime p."""

    def __init__(self, p):
        if p == 2 or p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError("modulus must be an odd prime")
        self.p = p
        self.name = f"mod-{p}"

    def coerce(self, x):
        if isinstance(x, ModInt):
            if x.p != self.p:
                raise ValueError("mixed moduli")
            return x
        if isinstance(x, int):
            return ModInt(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            return ModInt(x.numerator, self.p) * ModInt(x.denominator, self.p).inverse()
        raise TypeError(f"cannot coerce {type(x).__name__} mod {self.p}")

    def __eq__(self, other):
        return isinstance(other, IntegersModP) and other.p == self.p

    def __hash__(self):
        return hash(("mod", self.p))

    def __repr__(self):
        return f"IntegersModP({self.p})"


RATIONALS = Rationals()


class StructureConstant:
    """Unital structure constant array C(a, b) against a fixed basis order.

    Row label = left factor, column label = right factor, matching the
    table layout used in reports.  Entries must be nonzero scalars and the
    identity row/column must be all ones.
    """

    def __init__(self, group, values, convention=LEFT_STANDARD):
        if convention not in CONVENTIONS:
            raise ValueError(f"unknown basis convention {convention!r}")
        self.group = group
        self.convention = convention
        n = group.order
        vals = tuple(tuple(row) for row in values)
        if len(vals) != n or any(len(r) != n for r in vals):
            raise ValueError("structure constant array has wrong shape")
        for g in range(n):
            if vals[0][g] != 1 or vals[g][0] != 1:
                raise ValueError("structure constant is not unital")
        if any(v == 0 for row in vals for v in row):
            raise ValueError("structure constant entries must be nonzero")
        self.values = vals

    def __call__(self, a, b):
        return self.values[a][b]

    def is_sign_valued(self):
        return all(v in (1, -1) for row in self.values for v in row)

    def transpose(self):
        flipped = (
            RIGHT_STANDARD if self.convention == LEFT_STANDARD else LEFT_STANDARD
        )
        n = self.group.order
        return StructureConstant(
            self.group,
            [[self.values[b][a] for b in range(n)] for a in range(n)],
            flipped,
        )

    def __eq__(self, other):
        return (
            isinstance(other, StructureConstant)
            and self.group == other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.group, self.values))

    def __repr__(self):
        return f"StructureConstant({self.group.name}, {self.values})"

    def markdown_table(self, title="C"):
        labels = self.group.element_labels
        head = "| " + title + " | " + " | ".join(labels) + " |"
        sep = "|" + "---|" * (self.group.order + 1)
        lines = [head, sep]
        for a in range(self.group.order):
            cells = " | ".join(str(v) for v in self.values[a])
            lines.append(f"| {labels[a]} | {cells} |")
        return "\n".join(lines)


class AlgebraElement:
    """Element of a twisted group algebra: a coefficient per group element."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = tuple(coeffs)
        if len(self.coeffs) != algebra.group.order:
            raise ValueError("coefficient vector has wrong length")

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected an algebra element")
        if other.algebra.ring != self.algebra.ring or (
            other.algebra.constant != self.algebra.constant
        ):
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(
            self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(
            self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return AlgebraElement(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.product(self, other)
        return AlgebraElement(self.algebra, [a * other for a in self.coeffs])

    def __rmul__(self, other):
        return AlgebraElement(self.algebra, [other * a for a in self.coeffs])

    def conj(self):
        return self.algebra.conjugate(self)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def support(self):
        return {g for g, c in enumerate(self.coeffs) if c != 0}

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.algebra.constant == other.algebra.constant
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, g):
        return self.coeffs[g]

    def __repr__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


class TwistedAlgebra:
    """Algebra with product v_a * v_b = C(a,b) v_{ab}, extended bilinearly."""

    def __init__(self, constant, ring=RATIONALS):
        self.constant = constant
        self.group = constant.group
        self.ring = ring

    # -- element construction -------------------------------------------

    def element(self, coeffs):
        return AlgebraElement(self, [self.ring.coerce(c) for c in coeffs])

    def basis_element(self, g):
        return self.element([1 if i == g else 0 for i in range(self.group.order)])

    def one(self):
        return self.basis_element(0)

    def zero(self):
        return self.element([0] * self.group.order)

    def generic_element(self, prefix, variables):
        """Element whose components are polynomial indeterminates
        prefix0..prefix{n-1} within the given ambient variable tuple."""
        return AlgebraElement(
            self,
            [
                MultiPoly.variable(f"{prefix}{g}", variables)
                for g in range(self.group.order)
            ],
        )

    # -- products --------------------------------------------------------

    def product(self, x, y):
        """x*y with components sum_a x_a C(a, a^-1 c) y_{a^-1 c} on v_c."""
        if x.algebra.ring != self.ring or y.algebra.ring != self.ring:
            raise ValueError("ring mismatch")
        n = self.group.order
        inv = [self.group.inverse(a) for a in range(n)]
        out = []
        for c in range(n):
            acc = None
            for a in range(n):
                xa = x.coeffs[a]
                if isinstance(xa, (int, Fraction)) and xa == 0:
                    continue
                b = self.group.mul(inv[a], c)
                term = xa * self.constant(a, b) * y.coeffs[b]
                acc = term if acc is None else acc + term
            if acc is None:
                acc = self.zero().coeffs[0]
            out.append(acc)
        return AlgebraElement(self, out)

    def mult_matrix_left(self, y):
        """Matrix M with M_{c,a} = C(a, a^-1 c) y_{a^-1 c}, so M x = x*y."""
        n = self.group.order
        return [
            [
                self.constant(a, self.group.mul(self.group.inverse(a), c))
                * y.coeffs[self.group.mul(self.group.inverse(a), c)]
                for a in range(n)
            ]
            for c in range(n)
        ]

    def mult_matrix_right(self, x):
        """Matrix M with M_{c,b} = x_{c b^-1} C(c b^-1, b), so M y = x*y."""
        n = self.group.order
        return [
            [
                x.coeffs[self.group.mul(c, self.group.inverse(b))]
                * self.constant(self.group.mul(c, self.group.inverse(b)), b)
                for b in range(n)
            ]
            for c in range(n)
        ]

    # -- involutions -------------------------------------------------

    def conjugate(self, x):
        """Negate every non-identity component (Z2, Z2xZ2 and Z4 gradings)."""
        if self.group.name not in ("Z2", "Z2xZ2", "Z4"):
            raise ValueError(
                f"conjugation is not defined for grading group {self.group.name}"
            )
        return AlgebraElement(
            self, [x.coeffs[0]] + [-c for c in x.coeffs[1:]]
        )

    def opposite(self):
        """Algebra with reversed products: constant transposed, basis mirrored."""
        return TwistedAlgebra(self.constant.transpose(), self.ring)

    # -- inverses (exact rational solves) ------------------------------

    def left_inverse(self, y):
        """LI with LI * y = 1, from the linear system M^L LI = e0."""
        sol = _linalg.solve(self.mult_matrix_left(y), self._unit_rhs())
        if sol is None:
            raise ZeroDivisionError("element has no left inverse")
        return self.element(sol)

    def right_inverse(self, x):
        """RI with x * RI = 1, from the linear system M^R RI = e0."""
        sol = _linalg.solve(self.mult_matrix_right(x), self._unit_rhs())
        if sol is None:
            raise ZeroDivisionError("element has no right inverse")
        return self.element(sol)

    def _unit_rhs(self):
        return [Fraction(1)] + [Fraction(0)] * (self.group.order - 1)

    # -- serialization -------------------------------------------------

    def to_json(self):
        def scalar(v):
            f = Fraction(v)
            return (
                f.numerator
                if f.denominator == 1
                else {"num": f.numerator, "den": f.denominator}
            )

        return {
            "group": self.group.name,
            "basis": self.constant.convention,
            "ring": self.ring.name,
            "C": [[scalar(v) for v in row] for row in self.constant.values],
        }

    @classmethod
    def from_json(cls, data):
        group = group_by_name(data["group"])
        ring_name = data.get("ring", "rational")
        if ring_name == "rational":
            ring = RATIONALS
        elif ring_name.startswith("mod-"):
            ring = IntegersModP(int(ring_name.split("-", 1)[1]))
        else:
            raise ValueError(f"unknown ring {ring_name!r}")

        def scalar(v):
            if isinstance(v, dict):
                return Fraction(v["num"], v["den"])
            return v

        constant = StructureConstant(
            group,
            [[scalar(v) for v in row] for row in data["C"]],
            data.get("basis", LEFT_STANDARD),
        )
        return cls(constant, ring)

    def __repr__(self):
        return f"TwistedAlgebra({self.group.name}, ring={self.ring.name})"


# -- the classified algebras -----------------------------------------

TABLE_COMPLEX = ((1, 1), (1, -1))

TABLE_QUATERNION = (
    (1, 1, 1, 1),
    (1, -1, 1, -1),
    (1, -1, -1, 1),
    (1, 1, -1, -1),
)

TABLE_TESSERANION = (
    (1, 1, 1, 1),
    (1, 1, 1, -1),
    (1, -1, -1, 1),
    (1, 1, -1, 1),
)


def complex_algebra(ring=RATIONALS):
    """The Z2-graded survivor: C with v1^2 = -1 (the complex numbers)."""
    constant = StructureConstant(group_by_name("Z2"), TABLE_COMPLEX, LEFT_STANDARD)
    return TwistedAlgebra(constant, ring)


def quaternion_algebra(ring=RATIONALS):
    """The Klein-graded survivor in its right-standard basis (quaternions)."""
    constant = StructureConstant(
        group_by_name("Z2xZ2"), TABLE_QUATERNION, RIGHT_STANDARD
    )
    return TwistedAlgebra(constant, ring)


def tesseranion_algebra(ring=RATIONALS):
    """The Z4-graded survivor in its left-standard basis (tesseranions)."""
    constant = StructureConstant(
        group_by_name("Z4"), TABLE_TESSERANION, LEFT_STANDARD
    )
    return TwistedAlgebra(constant, ring)


def tesseranion_algebra_mod(p):
    """Tesseranion arithmetic with components in Z_p (p an odd prime)."""
    constant = StructureConstant(
        group_by_name("Z4"), TABLE_TESSERANION, LEFT_STANDARD
    )
    return TwistedAlgebra(constant, IntegersModP(p))


def algebra_by_name(name, ring=RATIONALS):
    key = name.lower()
    if key in ("cplx", "complex", "c"):
        return complex_algebra(ring)
    if key in ("quat", "quaternion", "h"):
        return quaternion_algebra(ring)
    if key in ("tes", "tesseranion", "t"):
        return tesseranion_algebra(ring)
    raise ValueError(f"unknown algebra selector {name!r}")
