"""Classification of sign-valued structure constants into division algebras.

For a grading group of order <= 4, every unital {1,-1} structure constant
is either

* rejected, with an exact certificate of a nontrivial zero divisor, or
* certified as a division algebra via positive-definiteness certificates
  for both multiplication-matrix determinants, or
* left in an explicit "undetermined" bucket (sound incompleteness).

Rejection certificates come in two kinds.  The usual one is a rational
sign-change pair for det M^L (a point with positive value and a nonzero
point with nonpositive value).  A handful of sign arrays have positive
*semi*definite determinants whose nontrivial real zeros are all
irrational; no rational sign-change pair exists for these, so they are
rejected by restricting the determinant to a rational line and isolating
a real root with a Sturm certificate.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

from .algebra import RATIONALS, StructureConstant, TwistedAlgebra
from .groups import LEFT_STANDARD, RIGHT_STANDARD, group_by_name
from .identities import identity_space, loop_property_suite
from .poly import (
    MultiPoly,
    certifies_positive_definite,
    count_real_roots,
    find_diagonal_sos,
    find_psd_sos,
    find_sign_change,
    isolate_real_root,
    symbolic_det,
    uni_coeffs,
    univariate_real_root_exists,
)

SHAPED = "shaped"
RAW = "raw"

PARAM_NAMES = ("alpha", "beta", "delta", "epsilon", "phi", "omega")


@dataclass(frozen=True)
class CandidateConstant:
    constant: StructureConstant
    parameters: tuple  # ((name, value), ...) for shaped candidates, () for raw

    @property
    def parameter_map(self):
        return dict(self.parameters)


@dataclass(frozen=True)
class RealRootRejection:
    """Zero divisor via a real root of the determinant on a rational line.

    The line fixes every component except one: component ``position``
    runs over t and the others take the rational values in ``base`` (not
    all zero, so the line avoids the origin).  ``coefficients`` is the
    restricted determinant, which has a real root inside ``interval``.
    """

    position: int
    base: tuple
    coefficients: tuple
    interval: tuple
    root_count: int

    def verify(self, det_poly):
        if not any(self.base):
            return False
        bindings = {}
        others = [i for i in range(len(det_poly.vars)) if i != self.position]
        for i, v in zip(others, self.base):
            bindings[det_poly.vars[i]] = Fraction(v)
        restricted = det_poly.specialize(bindings)
        coeffs = uni_coeffs(restricted, det_poly.vars[self.position])
        if [Fraction(c) for c in self.coefficients] != coeffs:
            return False
        lo, hi = self.interval
        return count_real_roots(coeffs, lo, hi) >= self.root_count >= 1


@dataclass(frozen=True)
class SurvivorCertificate:
    kind: str  # "positive-definite-sos" or "odd-dimension-unit"
    cert_left: object
    cert_right: object


@dataclass
class ClassificationReport:
    group_name: str
    convention: str
    mode: str
    candidates_examined: int
    rejected: list  # (CandidateConstant, witness)
    survivors: list  # (CandidateConstant, SurvivorCertificate)
    undetermined: list  # CandidateConstant
    psd_annotations: dict  # candidate index -> SosCertificate (PSD evidence)

    def counts(self):
        return {
            "examined": self.candidates_examined,
            "rejected": len(self.rejected),
            "survivors": len(self.survivors),
            "undetermined": len(self.undetermined),
        }


def _sign_options(k):
    return itertools.product((1, -1), repeat=k)


def enumerate_candidates(group, convention, mode=SHAPED):
    """Candidate unital sign arrays for the group and basis convention.

    Shaped mode applies the constraints already forced by a normalized
    standard basis (power cells equal to 1, half-order squares equal to
    -1); raw mode enumerates every unital sign array.
    """
    if isinstance(group, str):
        group = group_by_name(group)
    n = group.order
    if n not in (2, 4):
        raise ValueError("candidate enumeration supports orders 2 and 4 only")
    out = []
    if mode == RAW:
        cells = [(a, b) for a in range(1, n) for b in range(1, n)]
        for signs in _sign_options(len(cells)):
            values = [[1] * n for _ in range(n)]
            for (a, b), s in zip(cells, signs):
                values[a][b] = s
            constant = StructureConstant(group, values, convention)
            out.append(CandidateConstant(constant, ()))
        return out
    if mode != SHAPED:
        raise ValueError(f"unknown enumeration mode {mode!r}")
    if n == 2:
        for (alpha,) in _sign_options(1):
            constant = StructureConstant(
                group, [[1, 1], [1, alpha]], convention
            )
            out.append(CandidateConstant(constant, (("alpha", alpha),)))
        return out
    if group.name == "Z2xZ2":
        for alpha, beta, delta, epsilon, phi in _sign_options(5):
            values = [
                [1, 1, 1, 1],
                [1, -1, 1, alpha],
                [1, beta, -1, delta],
                [1, epsilon, phi, -1],
            ]
            params = tuple(
                zip(("alpha", "beta", "delta", "epsilon", "phi"),
                    (alpha, beta, delta, epsilon, phi))
            )
            constant = StructureConstant(group, values, RIGHT_STANDARD)
            if convention == LEFT_STANDARD:
                constant = constant.transpose()
            out.append(CandidateConstant(constant, params))
        return out
    if group.name == "Z4":
        for alpha, beta, delta, epsilon, phi, omega in _sign_options(6):
            values = [
                [1, 1, 1, 1],
                [1, 1, 1, alpha],
                [1, beta, -1, delta],
                [1, epsilon, phi, omega],
            ]
            params = tuple(zip(PARAM_NAMES, (alpha, beta, delta, epsilon, phi, omega)))
            constant = StructureConstant(group, values, LEFT_STANDARD)
            if convention == RIGHT_STANDARD:
                constant = constant.transpose()
            out.append(CandidateConstant(constant, params))
        return out
    raise ValueError(f"no table shape for group {group.name}")


def det_polynomials(constant):
    """(det M^L in y, det M^R in x) as exact polynomials."""
    algebra = TwistedAlgebra(constant, RATIONALS)
    n = constant.group.order
    yvars = tuple(f"y{i}" for i in range(n))
    xvars = tuple(f"x{i}" for i in range(n))
    y = algebra.generic_element("y", yvars)
    x = algebra.generic_element("x", xvars)
    return (
        symbolic_det(algebra.mult_matrix_left(y)),
        symbolic_det(algebra.mult_matrix_right(x)),
    )


_LINE_BASES = tuple(
    base
    for base in itertools.product((1, 0, -1, 2), repeat=3)
    if any(base)
)


def line_root_rejection(det_poly):
    """First rational-line restriction of the determinant with a real root."""
    nvars = len(det_poly.vars)
    for position in range(nvars):
        others = [i for i in range(nvars) if i != position]
        for base in _LINE_BASES:
            bindings = {
                det_poly.vars[i]: Fraction(v) for i, v in zip(others, base)
            }
            restricted = det_poly.specialize(bindings)
            if restricted.is_zero:
                continue
            coeffs = uni_coeffs(restricted, det_poly.vars[position])
            if len(coeffs) <= 1:
                continue
            if not univariate_real_root_exists(restricted):
                continue
            interval = isolate_real_root(coeffs)
            if interval is None:
                continue
            lo, hi = interval
            witness = RealRootRejection(
                position,
                base,
                tuple(coeffs),
                (lo, hi),
                count_real_roots(coeffs, lo, hi),
            )
            if witness.verify(det_poly):
                return witness
    return None


def _certify_survivor(det_l, det_r):
    cert_l = find_diagonal_sos(det_l)
    if cert_l is None or not certifies_positive_definite(det_l, cert_l):
        return None
    cert_r = find_diagonal_sos(det_r)
    if cert_r is None or not certifies_positive_definite(det_r, cert_r):
        return None
    return SurvivorCertificate("positive-definite-sos", cert_l, cert_r)


def _classify_one(candidate, grid_bound):
    det_l, det_r = det_polynomials(candidate.constant)
    witness = find_sign_change(det_l, bound=grid_bound, use_grid=False)
    if witness is not None:
        return "rejected", witness, None
    # a verified positive-definiteness certificate rules witnesses out,
    # so the dense grid scan is only spent on uncertified candidates
    cert = _certify_survivor(det_l, det_r)
    if cert is not None:
        return "survivor", cert, None
    witness = find_sign_change(det_l, bound=grid_bound)
    if witness is not None:
        return "rejected", witness, None
    root = line_root_rejection(det_l)
    psd = find_psd_sos(det_l)
    if root is not None:
        return "rejected", root, psd
    return "undetermined", None, psd


def classify(group, convention=LEFT_STANDARD, mode=SHAPED, grid_bound=3):
    """Full classification run; deterministic given the enumeration order.

    Every rejected candidate carries a verified zero-divisor certificate
    and every survivor carries verified positive-definiteness
    certificates for both determinants.  Candidates with neither land in
    the undetermined bucket; for the shaped runs of the supported groups
    that bucket is empty.
    """
    if isinstance(group, str):
        group = group_by_name(group)
    if group.order == 1:
        constant = StructureConstant(group, [[1]], convention)
        cand = CandidateConstant(constant, ())
        cert = SurvivorCertificate("odd-dimension-unit", None, None)
        return ClassificationReport(
            group.name, convention, mode, 1, [], [(cand, cert)], [], {}
        )
    candidates = enumerate_candidates(group, convention, mode)
    rejected, survivors, undetermined, psd_notes = [], [], [], {}

    def work(item):
        idx, cand = item
        return idx, cand, _classify_one(cand, grid_bound)

    items = list(enumerate(candidates))
    threads = int(os.environ.get("TWISTDIV_THREADS", "1"))
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, items))
    else:
        results = [work(it) for it in items]
    results.sort(key=lambda r: r[0])
    for idx, cand, (verdict, payload, psd) in results:
        if psd is not None:
            psd_notes[idx] = psd
        if verdict == "rejected":
            rejected.append((cand, payload))
        elif verdict == "survivor":
            survivors.append((cand, payload))
        else:
            undetermined.append(cand)
    return ClassificationReport(
        group.name,
        convention,
        mode,
        len(candidates),
        rejected,
        survivors,
        undetermined,
        psd_notes,
    )


def opposite_uniqueness_check(group, convention=None):
    """The mirrored convention's unique survivor is the transpose.

    For each order-4 group the shaped classification in either basis
    convention yields one survivor, and the two survivors are each
    other's transposed arrays (the opposite algebra).  Z2's survivor is
    its own transpose.
    """
    if isinstance(group, str):
        group = group_by_name(group)
    primary = (
        convention
        if convention is not None
        else (RIGHT_STANDARD if group.name == "Z2xZ2" else LEFT_STANDARD)
    )
    mirror = RIGHT_STANDARD if primary == LEFT_STANDARD else LEFT_STANDARD
    rep_a = classify(group, primary, SHAPED)
    rep_b = classify(group, mirror, SHAPED)
    if len(rep_a.survivors) != 1 or len(rep_b.survivors) != 1:
        return False
    const_a = rep_a.survivors[0][0].constant
    const_b = rep_b.survivors[0][0].constant
    return const_b.values == const_a.transpose().values


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism-separating invariants of a 4-dimensional candidate."""

    power_associative: bool
    flexible: bool
    commutative: bool
    identity_dims: tuple  # ((pattern, dim), ...)

    def to_json(self):
        return {
            "power_associative": self.power_associative,
            "flexible": self.flexible,
            "commutative": self.commutative,
            "identity_dims": {
                ",".join(map(str, p)): d for p, d in self.identity_dims
            },
        }


def non_isomorphism_fingerprint(algebra, patterns=((2, 1), (4,))):
    """Fingerprint used to separate the order-4 survivors.

    The quaternion algebra is power associative while the Z4 survivor is
    not (its generator w satisfies w * w^2 = -(w^2) * w), so the first
    bit already distinguishes them.
    """
    if algebra.group.order != 4:
        raise ValueError("fingerprints are defined for 4-dimensional algebras")
    props = loop_property_suite(algebra)
    dims = tuple(
        (tuple(p), identity_space(algebra, p).dimension) for p in patterns
    )
    return Fingerprint(
        power_associative=props.power_associative,
        flexible=props.flexible,
        commutative=props.commutative,
        identity_dims=dims,
    )


@dataclass(frozen=True)
class OddOrderWitness:
    """Certified zero divisor in the order-p cyclic subalgebra.

    All non-identity components are pinned to 1 and the determinant
    becomes an odd-degree polynomial in the identity component, which
    must have a real root; the interval encloses one.
    """

    subgroup: tuple
    coefficients: tuple
    interval: tuple
    root_count: int


def odd_order_zero_divisor(constant):
    """Witness for any grading group whose order has an odd prime factor."""
    group = constant.group
    n = group.order
    if n & (n - 1) == 0:
        raise ValueError("group order is a power of 2; no odd-order subalgebra")
    p = next(q for q in (3, 5, 7) if n % q == 0)
    g = next(h for h in range(1, n) if group.element_order(h) == p)
    subgroup = [0]
    x = g
    while x != 0:
        subgroup.append(x)
        x = group.mul(x, g)
    index = {h: i for i, h in enumerate(subgroup)}
    var = ("s",)
    s = MultiPoly.variable("s", var)
    one = MultiPoly.constant(var, 1)
    rows = []
    for c in subgroup:
        row = []
        for a in subgroup:
            b = group.mul(group.inverse(a), c)
            coeff = constant(a, b)
            row.append(coeff * (s if b == 0 else one))
        rows.append(row)
    det = symbolic_det(rows)
    coeffs = uni_coeffs(det, "s")
    if (len(coeffs) - 1) % 2 == 0:
        raise AssertionError("restricted determinant should have odd degree")
    interval = isolate_real_root(coeffs)
    lo, hi = interval
    return OddOrderWitness(
        tuple(subgroup), tuple(coeffs), (lo, hi), count_real_roots(coeffs, lo, hi)
    )
