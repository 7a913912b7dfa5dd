"""Norms, Schwarz defects, closed-form inverses, and Z_p encryption.

The Z4-graded survivor carries a quartic scalar |x|^4 =
(x0^2 + x2^2)^2 + (x1^2 + x3^2)^2 whose fourth root is a genuine norm
(positive homogeneous, triangle inequality) but fails the Schwarz
equality.  Exactness policy: every comparison happens on the rational
2^j-th powers, with integer-root enclosures for the few comparisons that
genuinely need the root; floats are display only.

The final section implements the linear-equation solver a*x = c in the
mod-p algebra, which round-trips exactly and acts as an encryption
primitive: x encodes the message c under the key a.

Only the instantiated norm chain (4-dimensional algebra -> its complex
even subalgebra -> the reals) is implemented; iterating the higher-order
norm construction to wider algebras is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import tesseranion_algebra_mod


def quartic_norm4(x):
    """The exact fourth power |x|^4 = (x0^2+x2^2)^2 + (x1^2+x3^2)^2."""
    x0, x1, x2, x3 = x.coeffs
    return (x0 * x0 + x2 * x2) ** 2 + (x1 * x1 + x3 * x3) ** 2


def norm4_monomial_expressions(x):
    """The five product expressions that all equal [|x|^4, 0, 0, 0].

    Computed independently of the closed form: each is a bracketed
    product of x, its square and its conjugate.
    """
    xbar = x.conj()
    xx = x * x
    xxbar = x * xbar
    return [
        xxbar * xxbar.conj(),
        (x * xxbar).conj() * x,
        (xbar * xx).conj() * x,
        x * (xxbar * x).conj(),
        x * (xx * xbar).conj(),
    ]


def is_pure_even(x):
    return x.coeffs[1] == 0 and x.coeffs[3] == 0


def is_pure_odd(x):
    return x.coeffs[0] == 0 and x.coeffs[2] == 0


def schwarz_defect4(x, y):
    """|x|^4 |y|^4 - |x*y|^4, on the fourth-power convention.

    The displayed Schwarz numbers -16, 0, 8 for the pairs (p,p), (p,q),
    (s,t) are reproduced by this fourth-power reading.
    """
    return quartic_norm4(x) * quartic_norm4(y) - quartic_norm4(x * y)


def schwarz_equality_pure(x, y):
    """Defect for a pure factor; raises if neither factor is pure."""
    if not (is_pure_even(x) or is_pure_odd(x) or is_pure_even(y) or is_pure_odd(y)):
        raise ValueError("one factor must be pure even or pure odd")
    return schwarz_defect4(x, y) == 0


def inverse_formulas(x):
    """(LI, RI) from the conjugate closed forms; x must be nonzero.

    LI(x) = conj(x*(x*conj x)) / |x|^4 and RI(x) = conj((x*conj x)*x) / |x|^4,
    so that LI*x = 1 = x*RI exactly.
    """
    if x.is_zero():
        raise ZeroDivisionError("zero element has no inverse")
    n4 = quartic_norm4(x)
    xbar = x.conj()
    li = (x * (x * xbar)).conj()
    ri = ((x * xbar) * x).conj()
    if isinstance(n4, (int, Fraction)):
        inv = Fraction(1, 1) / Fraction(n4)
    else:
        inv = n4.inverse()
    return li * inv, ri * inv


def generates_whole_algebra(x):
    """True when {1, x, x^2, x*x^2} spans the 4-dimensional algebra."""
    from . import _linalg

    rows = [x.algebra.one().coeffs, x.coeffs]
    xx = x * x
    rows.append(xx.coeffs)
    rows.append((x * xx).coeffs)
    return _linalg.det([list(r) for r in rows]) != 0


# -- iterated even-power norms ------------------------------------------


@dataclass(frozen=True)
class IteratedNormSpec:
    """Level j >= 1 over base tuples of width n; input length n * 2^(j-1)."""

    j: int
    n: int

    def __post_init__(self):
        if self.j < 1 or self.n < 1:
            raise ValueError("level and width must be positive")

    @property
    def length(self):
        return self.n * 2 ** (self.j - 1)


def iterated_norm_power(spec, vec):
    """The exact 2^j-th power of the level-j norm.

    Level 1 is the squared Euclidean norm; level j applies
    P_j((u, r)) = P_{j-1}(u)^2 + P_{j-1}(r)^2 on the two halves.
    """
    vec = list(vec)
    if len(vec) != spec.length:
        raise ValueError(f"expected length {spec.length}, got {len(vec)}")
    if spec.j == 1:
        total = None
        for v in vec:
            sq = v * v
            total = sq if total is None else total + sq
        return total
    half = len(vec) // 2
    sub = IteratedNormSpec(spec.j - 1, spec.n)
    return (
        iterated_norm_power(sub, vec[:half]) ** 2
        + iterated_norm_power(sub, vec[half:]) ** 2
    )


def iterated_norm(spec, vec):
    """Float value of the norm (the exact object is the 2^j-th power)."""
    return float(iterated_norm_power(spec, vec)) ** (1.0 / 2**spec.j)


def _iroot_floor(n, k):
    """Floor of the integer k-th root (n >= 0)."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0
    x = 1 << (-(-n.bit_length() // k))
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _rational_kth_root(x, k):
    x = Fraction(x)
    if x < 0:
        return None
    num = _iroot_floor(x.numerator, k)
    den = _iroot_floor(x.denominator, k)
    if num**k == x.numerator and den**k == x.denominator:
        return Fraction(num, den)
    return None


def nth_root_leq(a_power, parts_powers, k, max_scale=256):
    """Exact decision of a^(1/k) <= sum_i b_i^(1/k) for rationals >= 0.

    Works on scaled integer k-th root enclosures, doubling the scale
    until the enclosures separate.  Exact ties can only occur when the
    ratios b_i/b_0 are perfect k-th powers of rationals (a sum of k-th
    roots with a rational ratio collapses to a single root); that case is
    decided exactly up front, so the refinement always terminates.
    """
    a = Fraction(a_power)
    bs = [Fraction(b) for b in parts_powers if b != 0]
    if a == 0:
        return True
    if not bs:
        return False
    if len(bs) == 1:
        return a <= bs[0]
    ratio = _rational_kth_root(bs[1] / bs[0], k)
    if ratio is not None:
        # b0^(1/k) + b1^(1/k) = ((1 + ratio)^k b0)^(1/k)
        return a <= bs[0] * (1 + ratio) ** k
    scale = 16
    while scale <= max_scale:
        shift = 1 << (k * scale)
        a_lo = _iroot_floor(a.numerator * shift // a.denominator, k)
        a_hi = a_lo + 1
        b_lo = sum(_iroot_floor(b.numerator * shift // b.denominator, k) for b in bs)
        b_hi = b_lo + len(bs)
        if a_hi <= b_lo:
            return True
        if a_lo > b_hi:
            return False
        scale *= 2
    raise ArithmeticError("root comparison undecided at maximum precision")


def triangle_check(spec, samples):
    """Triangle inequality on explicit sample pairs, decided exactly.

    samples is an iterable of (x, y) tuples of rational sequences.
    Returns True when M(x + y) <= M(x) + M(y) for every pair.
    """
    k = 2**spec.j
    for x, y in samples:
        s = [a + b for a, b in zip(x, y)]
        lhs = iterated_norm_power(spec, s)
        px = iterated_norm_power(spec, x)
        py = iterated_norm_power(spec, y)
        if not nth_root_leq(lhs, (px, py), k):
            return False
    return True


def positive_homogeneity_check(spec, samples):
    """M(a x)^(2^j) == a^(2^j) M(x)^(2^j), exactly, on (scalar, vector) pairs."""
    k = 2**spec.j
    for alpha, x in samples:
        lhs = iterated_norm_power(spec, [Fraction(alpha) * Fraction(v) for v in x])
        rhs = Fraction(alpha) ** k * iterated_norm_power(spec, x)
        if lhs != rhs:
            return False
    return True


# -- linear equation solving / encryption over Z_p -----------------------


class InvalidKey(ValueError):
    """Key rejected: |a|^4 vanishes mod p, so a is not invertible."""


def _as_modp_element(algebra, comps):
    return algebra.element(list(comps))


def encrypt(key, message, p, side="left"):
    """Encode the message c as the solution x of a*x = c over Z_p.

    side="left" solves a*x = c via x = |a|^-4 (conj(a)*c) * conj(a*conj(a));
    side="right" solves y*b = d via y = |b|^-4 conj(b*conj(b)) * (d*conj(b)).
    Raises InvalidKey when |key|^4 = 0 mod p.
    """
    algebra = tesseranion_algebra_mod(p)
    a = _as_modp_element(algebra, key)
    c = _as_modp_element(algebra, message)
    n4 = quartic_norm4(a)
    if n4 == 0:
        raise InvalidKey(f"|key|^4 = 0 mod {p}")
    inv = n4.inverse()
    abar = a.conj()
    if side == "left":
        x = (abar * c) * (a * abar).conj()
    elif side == "right":
        x = (a * abar).conj() * (c * abar)
    else:
        raise ValueError("side must be 'left' or 'right'")
    return tuple(v.value for v in (x * inv).coeffs)


def decrypt(key, encoded, p, side="left"):
    """Recover c = a*x (or c = y*b for the right-sided scheme)."""
    algebra = tesseranion_algebra_mod(p)
    a = _as_modp_element(algebra, key)
    x = _as_modp_element(algebra, encoded)
    out = a * x if side == "left" else x * a
    return tuple(v.value for v in out.coeffs)
