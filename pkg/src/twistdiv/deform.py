"""One-parameter deformations of the Z4-graded division algebra.

The six table entries (alpha, beta, delta, epsilon, phi, omega) are
allowed arbitrary nonzero rational values.  This module provides:

* the necessary sign conditions for absence of zero divisors,
* the eight one-parameter families with their exact validity ranges
  (irrational endpoints are handled by exact rational sign predicates),
* zero-divisor witness searches on the parametric determinants,
* basis-rebuild machinery: the structure constant generated by a chosen
  element w (basis 1, w, w^2, w*w^2), used for the k <-> 1/k isomorphism
  and for finite nonisomorphism evidence searches, and
* the commutator-bracket rescaling onto the undeformed Lie algebra.

Open here: whether the family-1 algebras arise from generalized
Cayley-Dickson doubling constructions (they do not appear to), and the
sharper validity bound for family 5 given by the positive root of
4 sqrt(r) - r^2 + 6 r + 3 = 0 (about 7.81); the conservative bound
3 + 2 sqrt(3) is what gates validity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg
from .algebra import RATIONALS, StructureConstant, TwistedAlgebra, tesseranion_algebra
from .classify import det_polynomials
from .groups import LEFT_STANDARD, group_by_name
from .poly import MultiPoly, find_sign_change, symbolic_det
from .structure import commutator_algebra

PARAM_NAMES = ("alpha", "beta", "delta", "epsilon", "phi", "omega")

TES_PARAMS = {"alpha": -1, "beta": -1, "delta": 1, "epsilon": 1, "phi": -1, "omega": 1}


def parametric_constant(params):
    """Structure constant in the order-4 cyclic table shape.

    params maps the six names to nonzero rationals; the fixed cells
    (powers of the generator and the half-order square) keep their
    normalized values 1, 1 and -1.
    """
    p = {k: Fraction(v) for k, v in params.items()}
    if set(p) != set(PARAM_NAMES):
        raise ValueError(f"need exactly the parameters {PARAM_NAMES}")
    if any(v == 0 for v in p.values()):
        raise ValueError("parameters must be nonzero")
    values = [
        [1, 1, 1, 1],
        [1, 1, 1, p["alpha"]],
        [1, p["beta"], -1, p["delta"]],
        [1, p["epsilon"], p["phi"], p["omega"]],
    ]
    return StructureConstant(group_by_name("Z4"), values, LEFT_STANDARD)


NECCONS = (
    ("-eps*beta > 0", lambda p: -p["epsilon"] * p["beta"] > 0),
    ("-alpha*delta*omega > 0", lambda p: -p["alpha"] * p["delta"] * p["omega"] > 0),
    ("-phi > 0", lambda p: -p["phi"] > 0),
    ("alpha*beta*omega > 0", lambda p: p["alpha"] * p["beta"] * p["omega"] > 0),
    ("eps*delta > 0", lambda p: p["epsilon"] * p["delta"] > 0),
)

NECCONS_COROLLARIES = (
    ("-delta*beta > 0", lambda p: -p["delta"] * p["beta"] > 0),
    ("-alpha*eps*omega > 0", lambda p: -p["alpha"] * p["epsilon"] * p["omega"] > 0),
)


def neccons_check(params):
    """Necessary sign conditions for a division algebra; (ok, violated)."""
    p = {k: Fraction(v) for k, v in params.items()}
    if any(v == 0 for v in p.values()):
        raise ValueError("parameters must be nonzero")
    violated = [name for name, pred in NECCONS if not pred(p)]
    violated += [
        name for name, pred in NECCONS_COROLLARIES if not pred(p)
    ]
    return (not violated, violated)


# -- validity ranges (exact rational predicates) --------------------------


def _above_two_thirds_sqrt3_minus_1(k):
    # k > (2/3) sqrt(3) - 1  <=>  k + 1 > 0 and 3 (k+1)^2 > 4
    k = Fraction(k)
    return k + 1 > 0 and 3 * (k + 1) ** 2 > 4


def _at_most_3_plus_2_sqrt3(k):
    # k <= 3 + 2 sqrt(3); for rational k the boundary cannot be attained,
    # so this is k <= 3 or (k - 3)^2 < 12
    k = Fraction(k)
    return k <= 3 or (k - 3) ** 2 < 12


FAMILIES = {
    1: (lambda k: {"alpha": -k, "beta": -1, "delta": 1, "epsilon": 1,
                   "phi": -1, "omega": k},
        lambda k: k > 0),
    2: (lambda k: {"alpha": -1, "beta": -k, "delta": k, "epsilon": 1,
                   "phi": -1, "omega": 1},
        lambda k: k > 0),
    3: (lambda k: {"alpha": -1, "beta": -1, "delta": 1, "epsilon": k,
                   "phi": -1, "omega": k},
        lambda k: k > 0),
    4: (lambda k: {"alpha": -k, "beta": -1, "delta": 1, "epsilon": k,
                   "phi": -1, "omega": k},
        _above_two_thirds_sqrt3_minus_1),
    5: (lambda k: {"alpha": -1, "beta": -1, "delta": k, "epsilon": 1,
                   "phi": -1, "omega": 1},
        lambda k: k > 0 and _at_most_3_plus_2_sqrt3(k)),
    6: (lambda k: {"alpha": -1, "beta": -1, "delta": 1, "epsilon": 1,
                   "phi": -1, "omega": k},
        lambda k: k > 0 and _at_most_3_plus_2_sqrt3(k)),
    7: (lambda k: {"alpha": -1, "beta": -k, "delta": 1, "epsilon": 1,
                   "phi": -1, "omega": 1},
        lambda k: k > 0 and _at_most_3_plus_2_sqrt3(k)),
    8: (lambda k: {"alpha": -k, "beta": -1, "delta": 1, "epsilon": 1,
                   "phi": -1, "omega": 1},
        lambda k: k > 0 and _at_most_3_plus_2_sqrt3(k)),
}


@dataclass(frozen=True)
class FamilyMember:
    family: int
    k: Fraction
    parameters: tuple
    in_range: bool

    @property
    def parameter_map(self):
        return dict(self.parameters)

    def constant(self):
        return parametric_constant(self.parameter_map)

    def algebra(self):
        return TwistedAlgebra(self.constant(), RATIONALS)


def family_constant(family, k):
    """Member of one of the eight one-parameter families.

    Out-of-range k is still constructible (for witness experiments) but
    flagged; at k = 1 every family degenerates to the undeformed algebra.
    """
    if family not in FAMILIES:
        raise ValueError("family id must be 1..8")
    k = Fraction(k)
    param_fn, in_range = FAMILIES[family]
    params = {name: Fraction(v) for name, v in param_fn(k).items()}
    return FamilyMember(
        family, k, tuple(sorted(params.items())), bool(in_range(k))
    )


def witness_search(constant, bound=3):
    """Sign-change search on det M^L for a parametric constant.

    Returns the witness or None; None is an empirical absence statement,
    not a positivity proof (reports must label it as such).
    """
    det_l, _ = det_polynomials(constant)
    return find_sign_change(det_l, bound=bound)


# -- basis rebuilds from a chosen generator -------------------------------


def structure_constant_from_generator(algebra, w):
    """Structure constant of the basis (1, w, w^2, w*w^2), if graded.

    Returns None unless the rebuilt basis is linearly independent and
    every product v'_a v'_b is a scalar multiple of v'_{a+b mod 4} (so
    the basis carries a cyclic grading with the same table shape).
    """
    one = algebra.one()
    w2 = w * w
    w3 = w * w2
    basis = [one, w, w2, w3]
    mat = [[Fraction(c) for c in b.coeffs] for b in basis]
    if _linalg.det(mat) == 0:
        return None
    n = 4
    values = [[None] * n for _ in range(n)]
    columns = [list(col) for col in zip(*mat)]
    for a in range(n):
        for b in range(n):
            prod = basis[a] * basis[b]
            coords = _linalg.solve(columns, [Fraction(c) for c in prod.coeffs])
            if coords is None:
                return None
            target = (a + b) % 4
            if any(coords[i] != 0 for i in range(n) if i != target):
                return None
            if coords[target] == 0:
                return None
            values[a][b] = coords[target]
    try:
        return StructureConstant(algebra.group, values, LEFT_STANDARD)
    except ValueError:
        return None


def _fraction_sqrt(x):
    from .poly import _fraction_sqrt as root

    return root(x)


def k_inverse_isomorphism(k):
    """Generator w' = [0,0,0,1/sqrt(k)] rebuilds family 1 at 1/k.

    Requires k to be the square of a rational so the rebuilt basis stays
    rational; returns True when the rebuilt structure constant equals the
    family-1 member at 1/k exactly.
    """
    k = Fraction(k)
    s = _fraction_sqrt(k)
    if s is None:
        raise ValueError("k must be the square of a rational")
    member = family_constant(1, k)
    algebra = member.algebra()
    w_prime = algebra.element([0, 0, 0, Fraction(1) / s])
    rebuilt = structure_constant_from_generator(algebra, w_prime)
    if rebuilt is None:
        return False
    return rebuilt.values == family_constant(1, Fraction(1) / k).constant().values


def commutator_rescaling(k):
    """Rescale the deformed commutator algebra onto the undeformed one.

    The family-1 bracket sends [v3, v1] to (1+k)/2 v0; when (1+k)/2 is
    u^-2 for a rational u, rescaling the two odd basis vectors by u maps
    the brackets exactly onto the undeformed commutator algebra.
    Returns (possible, matched).
    """
    k = Fraction(k)
    target = Fraction(2) / (1 + k)  # u^2
    u = _fraction_sqrt(target)
    if u is None:
        return False, False
    member = family_constant(1, k)
    deformed = commutator_algebra(member.algebra())
    reference = commutator_algebra(tesseranion_algebra())
    scale = (Fraction(1), u, Fraction(1), u)
    n = 4
    for i in range(n):
        for j in range(n):
            for t in range(n):
                lhs = deformed.tensor[i][j][t] * scale[i] * scale[j] / scale[t]
                if lhs != reference.tensor[i][j][t]:
                    return True, False
    return True, True


def _rational_pairs(height):
    """Rational points (a1, a3), not both zero, with small numerators and
    denominators, in a deterministic order."""
    values = [Fraction(0)]
    for den in range(1, height + 1):
        for num in range(-height, height + 1):
            v = Fraction(num, den)
            if v not in values:
                values.append(v)
    for a1 in values:
        for a3 in values:
            if a1 != 0 or a3 != 0:
                yield a1, a3


@dataclass
class RebaseSearchReport:
    k: Fraction
    k_prime: Fraction
    generators_tested: int
    graded_generators: int
    found_generator: object  # coefficients tuple or None

    @property
    def found(self):
        return self.found_generator is not None


def nonisomorphism_evidence(k, k_prime, height=4):
    """Finite search for a generator turning family-1(k) into family-1(k').

    Generators are restricted to odd elements w' = [0, a1, 0, a3] over
    rationals of bounded height, filtered to those whose rebuilt basis is
    graded and normalized (w'^2 squared equals -1).  Absence of a hit is
    evidence, not proof: the real-coefficient argument covers irrational
    generators too.
    """
    k, k_prime = Fraction(k), Fraction(k_prime)
    member = family_constant(1, k)
    algebra = member.algebra()
    target = family_constant(1, k_prime).constant().values
    tested = 0
    graded = 0
    found = None
    for a1, a3 in _rational_pairs(height):
        tested += 1
        w = algebra.element([0, a1, 0, a3])
        rebuilt = structure_constant_from_generator(algebra, w)
        if rebuilt is None:
            continue
        if rebuilt.values[2][2] != -1:
            continue  # not normalized
        graded += 1
        if rebuilt.values == target and found is None:
            found = (0, a1, 0, a3)
    return RebaseSearchReport(k, k_prime, tested, graded, found)


# -- the generic determinant --------------------------------------------

GENERIC_VARS = PARAM_NAMES + ("y0", "y1", "y2", "y3")


def generic_det_ml():
    """det M^L with all six parameters and all four components symbolic."""
    gens = {name: MultiPoly.variable(name, GENERIC_VARS) for name in GENERIC_VARS}
    one = MultiPoly.constant(GENERIC_VARS, 1)
    values = [
        [one, one, one, one],
        [one, one, one, gens["alpha"]],
        [one, gens["beta"], -one, gens["delta"]],
        [one, gens["epsilon"], gens["phi"], gens["omega"]],
    ]
    ys = [gens[f"y{i}"] for i in range(4)]
    rows = []
    for c in range(4):
        row = []
        for a in range(4):
            b = (c - a) % 4
            row.append(values[a][b] * ys[b])
        rows.append(row)
    return symbolic_det(rows)


def generic_det_ml_reference():
    """The frozen exact expansion of the generic determinant.

    Equivalent to building the polynomial term by term:

        y0^4 - eb y1^4 - phi y2^4 - adw y3^4
        + (1 - phi) y0^2 y2^2 + (abw + ed) y1^2 y3^2
        + [(e(1+b) + phi b - 1) y1^2 + (a(d+phi) - w(1-d)) y3^2] y0 y2
        + [(w - ed - phi(ab - 1)) y2^2 - (a + bw + d + e) y0^2] y1 y3
    """
    V = GENERIC_VARS
    a, b, d, e, f, w, y0, y1, y2, y3 = MultiPoly.variables(V)
    one = MultiPoly.constant(V, 1)
    return (
        y0**4
        - (e * b) * y1**4
        - f * y2**4
        - (a * d * w) * y3**4
        + (one - f) * y0**2 * y2**2
        + (a * b * w + e * d) * y1**2 * y3**2
        + ((e * (one + b) + f * b - one) * y1**2
           + (a * (d + f) - w * (one - d)) * y3**2) * y0 * y2
        + ((w - e * d - f * (a * b - one)) * y2**2
           - (a + b * w + d + e) * y0**2) * y1 * y3
    )
