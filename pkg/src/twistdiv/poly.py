"""Exact multivariate polynomial arithmetic and positivity tooling.

This module provides the symbolic backbone of the project:

* ``MultiPoly`` -- sparse multivariate polynomials with exact rational
  coefficients (a dict from exponent tuples to coefficients),
* exact symbolic determinants of small polynomial matrices,
* sum-of-squares certificates for determinant positivity,
* rational sign-change searches used to exhibit zero divisors, and
* exact univariate real-root machinery (Sturm chains, isolation).

All decisions made here are exact; floating point appears only inside a
numpy pre-screen of grid evaluations, and every candidate point reported
by the screen is re-checked in integer/rational arithmetic.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _linalg


class MultiPoly:
    """Sparse polynomial in named indeterminates over the rationals.

    ``vars`` is the fixed tuple of indeterminate names; ``terms`` maps an
    exponent tuple (one slot per name) to a nonzero coefficient.  Two
    polynomials can be combined only when their variable tuples agree, so
    equality is structural.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None, _normalize=True):
        self.vars = tuple(variables)
        if terms is None:
            self.terms = {}
        elif _normalize:
            self.terms = {tuple(e): c for e, c in terms.items() if c != 0}
        else:
            self.terms = terms

    # -- construction ---------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {}, _normalize=False)

    @classmethod
    def constant(cls, variables, value):
        variables = tuple(variables)
        if value == 0:
            return cls.zero(variables)
        exp = (0,) * len(variables)
        return cls(variables, {exp: value}, _normalize=False)

    @classmethod
    def variable(cls, name, variables):
        variables = tuple(variables)
        i = variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exp: 1}, _normalize=False)

    @classmethod
    def variables(cls, names):
        names = tuple(names)
        return [cls.variable(n, names) for n in names]

    # -- ring operations ------------------------------------------------

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.vars, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return MultiPoly(self.vars, terms, _normalize=False)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(
            self.vars, {e: -c for e, c in self.terms.items()}, _normalize=False
        )

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.constant(self.vars, other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if other == 0:
                return MultiPoly.zero(self.vars)
            return MultiPoly(
                self.vars,
                {e: c * other for e, c in self.terms.items()},
                _normalize=False,
            )
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return MultiPoly(self.vars, terms, _normalize=False)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        return self.terms == MultiPoly.constant(self.vars, other).terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    # -- queries ----------------------------------------------------

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), 0)

    def used_variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return used

    def evaluate(self, point):
        """Evaluate at a full point (sequence aligned with ``vars``)."""
        if len(point) != len(self.vars):
            raise ValueError("point length mismatch")
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x**k
            total += v
        return total

    def specialize(self, bindings):
        """Exact partial substitution; unknown names raise KeyError."""
        for name in bindings:
            if name not in self.vars:
                raise KeyError(f"unknown indeterminate {name!r}")
        idx = {self.vars.index(n): v for n, v in bindings.items()}
        terms = {}
        for e, c in self.terms.items():
            new_c = c
            new_e = list(e)
            for i, val in idx.items():
                if e[i]:
                    new_c *= val ** e[i]
                new_e[i] = 0
            if new_c == 0:
                continue
            key = tuple(new_e)
            s = terms.get(key, 0) + new_c
            if s == 0:
                terms.pop(key, None)
            else:
                terms[key] = s
        return MultiPoly(self.vars, terms, _normalize=False)

    # -- presentation / serialization -------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            if mono:
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
            else:
                parts.append(str(c))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def to_json(self):
        terms = []
        for e in sorted(self.terms):
            c = Fraction(self.terms[e])
            terms.append(
                {"exp": list(e), "num": c.numerator, "den": c.denominator}
            )
        return {"vars": list(self.vars), "terms": terms}

    @classmethod
    def from_json(cls, data):
        variables = tuple(data["vars"])
        terms = {
            tuple(t["exp"]): Fraction(t["num"], t["den"]) for t in data["terms"]
        }
        return cls(variables, terms)

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


# -- determinants ----------------------------------------------------


def symbolic_det(rows):
    """Exact determinant of a small square matrix of polynomials.

    Uses minor expansion with shared sub-minors over column subsets
    (O(n * 2^n) polynomial multiplications), which is exact and cheap for
    the n <= 8 matrices that occur here.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        raise ValueError("empty matrix")
    if n > 8:
        raise ValueError("matrix larger than 8x8")
    template = next(
        (x for row in rows for x in row if isinstance(x, MultiPoly)), None
    )
    if template is None:
        return _linalg.det(rows)
    coerced = [
        [
            x
            if isinstance(x, MultiPoly)
            else MultiPoly.constant(template.vars, x)
            for x in row
        ]
        for row in rows
    ]
    # minors[mask] = det of the submatrix on rows 0..k-1 and column set mask
    minors = {0: MultiPoly.constant(template.vars, 1)}
    for k in range(n):
        new = {}
        for mask, sub in minors.items():
            pos = 0
            for col in range(n):
                bit = 1 << col
                if mask & bit:
                    pos += 1
                    continue
                entry = coerced[k][col]
                if entry.is_zero:
                    continue
                # position of col within the new mask decides the sign
                sign = 1 if (k - pos) % 2 == 0 else -1
                term = entry * sub if sign > 0 else -(entry * sub)
                key = mask | bit
                acc = new.get(key)
                new[key] = term if acc is None else acc + term
        minors = new
    full = (1 << n) - 1
    return minors.get(full, MultiPoly.zero(template.vars))


def specialize(p, bindings):
    return p.specialize(bindings)


# -- sum-of-squares certificates --------------------------------------


@dataclass(frozen=True)
class SosCertificate:
    """Positive combination of squares: sum(coeff * base**2)."""

    parts: tuple

    def polynomial(self):
        total = None
        for coeff, base in self.parts:
            term = base * base * coeff
            total = term if total is None else total + term
        return total

    def to_json(self):
        return [
            {
                "coeff": {"num": Fraction(c).numerator, "den": Fraction(c).denominator},
                "base": b.to_json(),
            }
            for c, b in self.parts
        ]


def verify_sos(p, cert):
    """True iff sum(c_i * base_i^2) - p is exactly the zero polynomial."""
    if not cert.parts:
        return p.is_zero
    if any(Fraction(c) <= 0 for c, _ in cert.parts):
        return False
    return (cert.polynomial() - p).is_zero


def _diagonal_support(base):
    """Variable set of a base that is a one-signed sum of pure powers.

    Returns the set of variable indices the base pins to zero, or None if
    the base is not of that shape.  A base c1*v1^k1 + ... + cm*vm^km with
    all coefficients of one sign vanishes exactly on {v1 = .. = vm = 0}
    when every exponent is even or there is a single summand.
    """
    signs = set()
    support = set()
    for e, c in base.terms.items():
        nz = [i for i, k in enumerate(e) if k]
        if len(nz) != 1:
            return None
        signs.add(c > 0)
        support.add(nz[0])
    if len(signs) > 1 or not support:
        return None
    if len(base.terms) > 1:
        if any(sum(e) % 2 for e in base.terms):
            return None
    return support


def certifies_positive_definite(p, cert):
    """Soundly decide that a verified SOS certificate pins p > 0 off 0.

    Requires every base to be a one-signed diagonal form (pure powers of
    single variables) and the union of their supports to cover every
    variable of the ambient ring, so the only common real zero is the
    origin.
    """
    if not verify_sos(p, cert):
        return False
    covered = set()
    for _, base in cert.parts:
        support = _diagonal_support(base)
        if support is None:
            return False
        covered |= support
    return covered == set(range(len(p.vars)))


def find_diagonal_sos(p, max_parts=3):
    """Search sum(c_S * q_S^2) with q_S a 0/1 diagonal quadratic form.

    The pattern library consists of the forms sum(v_i^2 for i in S) over
    nonempty subsets S (plus the bare variables when p is quadratic).
    Subsets of the library of size <= max_parts are solved exactly for
    nonnegative coefficients.  Returns a verified certificate or None.
    """
    nvars = len(p.vars)
    deg = p.degree()
    if deg not in (2, 4) or not p.is_homogeneous():
        return None
    # squares of diagonal forms only produce all-even exponents
    if any(k % 2 for e in p.terms for k in e):
        return None
    gens = MultiPoly.variables(p.vars)
    if deg == 2:
        bases = list(gens)
    else:
        bases = []
        indices = list(range(nvars))
        for r in range(1, nvars + 1):
            for subset in itertools.combinations(indices, r):
                q = None
                for i in subset:
                    sq = gens[i] * gens[i]
                    q = sq if q is None else q + sq
                bases.append(q)
    squares = [b * b for b in bases]
    monomials = sorted(set().union(*(set(s.terms) for s in squares), set(p.terms)))
    target = [Fraction(p.terms.get(m, 0)) for m in monomials]
    columns = [[Fraction(s.terms.get(m, 0)) for m in monomials] for s in squares]

    def try_subset(subset):
        rows = [[columns[j][i] for j in subset] for i in range(len(monomials))]
        sol = _linalg.solve(rows, target)
        if sol is None or any(c < 0 for c in sol):
            return None
        parts = tuple((c, bases[j]) for c, j in zip(sol, subset) if c != 0)
        cert = SosCertificate(parts)
        if verify_sos(p, cert) and certifies_positive_definite(p, cert):
            return cert
        return None

    # complementary-pair and all-variable shapes first: they are the
    # certificates the division-algebra determinants actually have
    priority = []
    if deg == 4:
        lookup = {
            frozenset(b.used_variables()): j for j, b in enumerate(bases)
        }
        full = frozenset(range(nvars))
        if full in lookup:
            priority.append((lookup[full],))
        for s, j in lookup.items():
            comp = frozenset(full - s)
            if comp in lookup and 0 < len(s) < nvars:
                priority.append(tuple(sorted((j, lookup[comp]))))
    seen = set()
    for subset in priority:
        if subset not in seen:
            seen.add(subset)
            cert = try_subset(subset)
            if cert is not None:
                return cert
    for r in range(1, max_parts + 1):
        for subset in itertools.combinations(range(len(bases)), r):
            if subset in seen:
                continue
            cert = try_subset(subset)
            if cert is not None:
                return cert
    return None


def perfect_square_root(p):
    """Exact square root of a polynomial, or None.

    Greedy extraction under graded-lex term order; valid because a
    polynomial square's leading term is the square of the factor's
    leading term.
    """
    if p.is_zero:
        return MultiPoly.zero(p.vars)
    order = lambda e: (sum(e), e)
    lead = max(p.terms, key=order)
    lc = Fraction(p.terms[lead])
    if lc < 0 or any(k % 2 for k in lead):
        return None
    root_lc = _fraction_sqrt(lc)
    if root_lc is None:
        return None
    root_lead = tuple(k // 2 for k in lead)
    root = MultiPoly(p.vars, {root_lead: root_lc})
    residual = p - root * root
    # repeatedly match the leading residual term against 2*root_leading
    guard = 0
    while not residual.is_zero:
        guard += 1
        if guard > 2000:
            return None
        r_lead = max(residual.terms, key=order)
        new_exp = tuple(a - b for a, b in zip(r_lead, root_lead))
        if any(k < 0 for k in new_exp):
            return None
        coeff = Fraction(residual.terms[r_lead]) / (2 * root_lc)
        root = root + MultiPoly(p.vars, {new_exp: coeff})
        residual = p - root * root
        if residual.terms and max(residual.terms, key=order) == r_lead:
            return None  # leading term did not drop; not a square
    return root


def _fraction_sqrt(x):
    x = Fraction(x)
    if x < 0:
        return None
    num = _isqrt_exact(x.numerator)
    den = _isqrt_exact(x.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _isqrt_exact(n):
    r = math.isqrt(n)
    return r if r * r == n else None


def find_psd_sos(p):
    """Certificate that p >= 0 for indefinite-looking PSD quartics.

    Tries p = (sum eps_i v_i^2)^2 + c * q^2 with eps in {+-1} and q an
    exact square root of the remainder, c in {1, 2, 4}.  This covers the
    positive semidefinite determinants that occur for rejected sign
    arrays whose real zeros are all irrational.  Certificates returned
    here verify as SOS but never as positive definite.
    """
    if p.degree() != 4 or not p.is_homogeneous():
        return None
    gens = MultiPoly.variables(p.vars)
    squares = [g * g for g in gens]
    for signs in itertools.product((1, -1), repeat=len(gens) - 1):
        q1 = squares[0]
        for s, sq in zip(signs, squares[1:]):
            q1 = q1 + sq if s > 0 else q1 - sq
        rem = p - q1 * q1
        if rem.is_zero:
            cert = SosCertificate(((Fraction(1), q1),))
            if verify_sos(p, cert):
                return cert
            continue
        for c in (1, 2, 4):
            scaled = rem * Fraction(1, c)
            root = perfect_square_root(scaled)
            if root is not None:
                cert = SosCertificate(((Fraction(1), q1), (Fraction(c), root)))
                if verify_sos(p, cert):
                    return cert
    return None


# -- sign-change witnesses ---------------------------------------------


@dataclass(frozen=True)
class SignChangeWitness:
    """Rational points with p(pos) > 0 and p(nonpos) <= 0.

    By continuity p has a real zero on the segment joining them; both
    points are nonzero, so the zero certifies a nontrivial zero divisor
    when p is a multiplication-matrix determinant.
    """

    positive_point: tuple
    nonpositive_point: tuple
    positive_value: Fraction
    nonpositive_value: Fraction

    def to_json(self):
        def pt(v):
            return [[Fraction(x).numerator, Fraction(x).denominator] for x in v]

        return {
            "positive_point": pt(self.positive_point),
            "nonpositive_point": pt(self.nonpositive_point),
            "positive_value": str(self.positive_value),
            "nonpositive_value": str(self.nonpositive_value),
        }


_SLICE_VALUES_2 = (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3)
_SLICE_VALUES_1 = (1, -1, 2, -2)


def structured_probes(nvars):
    """Deterministic probe points, coarse to fine.

    Mirrors the rejection route used for the order-4 case analyses: slices
    with two components zero first, then one component zero, then the
    all-components-nonzero sign patterns.
    """
    seen = set()
    for nonzero in itertools.combinations(range(nvars), 2):
        for vals in itertools.product(_SLICE_VALUES_2, repeat=2):
            point = [0] * nvars
            for i, v in zip(nonzero, vals):
                point[i] = v
            t = tuple(point)
            if t not in seen:
                seen.add(t)
                yield t
    if nvars < 3:
        return
    for zero in itertools.combinations(range(nvars), nvars - 3):
        nonzero = [i for i in range(nvars) if i not in zero]
        for vals in itertools.product(_SLICE_VALUES_1, repeat=3):
            point = [0] * nvars
            for i, v in zip(nonzero, vals):
                point[i] = v
            t = tuple(point)
            if t not in seen:
                seen.add(t)
                yield t
    for vals in itertools.product(_SLICE_VALUES_1, repeat=nvars):
        if vals not in seen:
            seen.add(vals)
            yield vals


def _grid_points(nvars, bound, denominators):
    values = []
    for den in denominators:
        for num in range(-bound * den, bound * den + 1):
            v = Fraction(num, den)
            if v not in values:
                values.append(v)
    values.sort()
    for point in itertools.product(values, repeat=nvars):
        if any(point):
            yield point


def _grid_scan_nonpositive(p, bound, denominators):
    """First grid point (deterministic order) with p <= 0, exactly checked.

    A numpy evaluation pre-screens the grid; the polynomial has integer
    values at integer points only after clearing denominators, so every
    float candidate below a safety threshold is re-evaluated exactly.
    """
    points = list(_grid_points(len(p.vars), bound, denominators))
    if not points:
        return None
    arr = np.array([[float(x) for x in pt] for pt in points], dtype=np.float64)
    vals = np.zeros(len(points), dtype=np.float64)
    for e, c in p.terms.items():
        term = np.full(len(points), float(c))
        for i, k in enumerate(e):
            if k:
                term = term * arr[:, i] ** k
        vals += term
    candidates = np.nonzero(vals < 0.25)[0]
    for idx in sorted(candidates):
        pt = points[idx]
        value = p.evaluate(pt)
        if value <= 0:
            return pt, value
    return None


def find_sign_change(p, bound=3, denominators=(1, 2), extra_probes=(), use_grid=True):
    """Search rational points u, v with p(u) > 0 and p(v) <= 0.

    Probes the structured slices first, then (unless use_grid is False) a
    dense grid on [-bound, bound] with the given denominators.  Returns a
    SignChangeWitness or None; absence is *not* a positivity proof.
    """
    if not p.vars:
        raise ValueError("polynomial must have at least one indeterminate")
    positive = None
    nonpositive = None
    probe_sets = (tuple(extra_probes), tuple(structured_probes(len(p.vars))))
    for probes in probe_sets:
        for pt in probes:
            v = p.evaluate(pt)
            if v > 0 and positive is None:
                positive = (pt, v)
            elif v <= 0 and nonpositive is None:
                nonpositive = (pt, v)
            if positive and nonpositive:
                return SignChangeWitness(
                    positive[0], nonpositive[0], positive[1], nonpositive[1]
                )
    if not use_grid:
        return None
    if nonpositive is None:
        hit = _grid_scan_nonpositive(p, bound, denominators)
        if hit is not None:
            nonpositive = hit
    if positive is None:
        for pt in _grid_points(len(p.vars), bound, denominators):
            v = p.evaluate(pt)
            if v > 0:
                positive = (pt, v)
                break
    if positive and nonpositive:
        return SignChangeWitness(
            positive[0], nonpositive[0], positive[1], nonpositive[1]
        )
    return None


# -- univariate exact real-root analysis --------------------------------


def uni_coeffs(p, var=None):
    """Ascending coefficient list of a univariate MultiPoly."""
    used = p.used_variables()
    if len(used) > 1:
        raise ValueError("polynomial is not univariate")
    if var is None:
        idx = used.pop() if used else 0
    else:
        idx = p.vars.index(var)
    deg = max((e[idx] for e in p.terms), default=0)
    coeffs = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        coeffs[e[idx]] += Fraction(c)
    return _trim(coeffs)


def _trim(coeffs):
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def uni_eval(coeffs, x):
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def uni_derivative(coeffs):
    if len(coeffs) <= 1:
        return [Fraction(0)]
    return [Fraction(k * c) for k, c in enumerate(coeffs)][1:]


def uni_rem(a, b):
    """Remainder of a by b over the rationals."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and any(c != 0 for c in a):
        da = len(a) - 1
        f = a[-1] / lead
        shift = da - db
        for i in range(db + 1):
            a[shift + i] -= f * b[i]
        a = _trim(a)
        if len(a) - 1 < db:
            break
        if a[-1] == 0:
            a = _trim(a)
    return _trim(a)


def uni_gcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while any(c != 0 for c in b):
        a, b = b, uni_rem(a, b)
    if all(c == 0 for c in a):
        return [Fraction(0)]
    lead = a[-1]
    return [c / lead for c in a]


def squarefree_part(coeffs):
    g = uni_gcd(coeffs, uni_derivative(coeffs))
    if len(g) == 1:
        return _trim([Fraction(c) for c in coeffs])
    q, _ = _uni_divmod(coeffs, g)
    return q


def _uni_divmod(a, b):
    a = [Fraction(c) for c in a]
    b = _trim([Fraction(c) for c in b])
    db = len(b) - 1
    q = [Fraction(0)] * max(1, len(a) - db)
    r = list(a)
    while len(r) - 1 >= db and any(c != 0 for c in r):
        f = r[-1] / b[-1]
        shift = len(r) - 1 - db
        q[shift] = f
        for i in range(db + 1):
            r[shift + i] -= f * b[i]
        r = _trim(r)
        if all(c == 0 for c in r):
            break
    return _trim(q), _trim(r)


def sturm_chain(coeffs):
    p0 = _trim([Fraction(c) for c in coeffs])
    chain = [p0, uni_derivative(p0)]
    while len(chain[-1]) > 1 or chain[-1][0] != 0:
        r = uni_rem(chain[-2], chain[-1])
        if all(c == 0 for c in r):
            break
        chain.append([-c for c in r])
        if len(chain[-1]) == 1:
            break
    return chain


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _sign_at(coeffs, x):
    if x == "-inf":
        lead = coeffs[-1]
        deg = len(coeffs) - 1
        s = 1 if lead > 0 else -1 if lead < 0 else 0
        return s if deg % 2 == 0 else -s
    if x == "+inf":
        lead = coeffs[-1]
        return 1 if lead > 0 else -1 if lead < 0 else 0
    v = uni_eval(coeffs, x)
    return 1 if v > 0 else -1 if v < 0 else 0


def count_real_roots(coeffs, lo="-inf", hi="+inf"):
    """Distinct real roots of the polynomial in (lo, hi] via Sturm.

    Works on the squarefree part, so multiplicities are ignored (a root
    of even multiplicity still counts once).
    """
    sf = squarefree_part(coeffs)
    if len(sf) == 1:
        return 0
    chain = sturm_chain(sf)
    va = _variations([_sign_at(c, lo) for c in chain])
    vb = _variations([_sign_at(c, hi) for c in chain])
    return va - vb


def univariate_real_root_exists(p):
    """Exact decision: does the univariate polynomial have a real root?"""
    coeffs = uni_coeffs(p) if isinstance(p, MultiPoly) else _trim(list(p))
    if len(coeffs) == 1:
        if coeffs[0] == 0:
            raise ValueError("zero polynomial")
        return False
    return count_real_roots(coeffs) > 0


def cauchy_bound(coeffs):
    coeffs = _trim([Fraction(c) for c in coeffs])
    lead = abs(coeffs[-1])
    if lead == 0:
        raise ValueError("zero polynomial")
    return 1 + max((abs(c) / lead for c in coeffs[:-1]), default=Fraction(0))


def isolate_real_root(coeffs, max_width=Fraction(1, 16)):
    """Rational interval (lo, hi] containing exactly one real root.

    Returns None when the polynomial has no real roots.  The interval is
    produced by Sturm-guided bisection from the Cauchy bound and is
    narrowed below max_width.
    """
    sf = squarefree_part(coeffs)
    if len(sf) == 1 or count_real_roots(sf) == 0:
        return None
    bound = cauchy_bound(sf)
    lo, hi = -bound, bound
    while count_real_roots(sf, lo, hi) > 1 or hi - lo > max_width:
        mid = (lo + hi) / 2
        if count_real_roots(sf, lo, mid) > 0:
            hi = mid
        else:
            lo = mid
    return lo, hi
