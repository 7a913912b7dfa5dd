import random
from fractions import Fraction

import pytest
import sympy

from twistdiv.poly import (
    MultiPoly,
    SosCertificate,
    certifies_positive_definite,
    count_real_roots,
    find_diagonal_sos,
    find_psd_sos,
    find_sign_change,
    isolate_real_root,
    perfect_square_root,
    squarefree_part,
    structured_probes,
    symbolic_det,
    uni_coeffs,
    uni_eval,
    univariate_real_root_exists,
    verify_sos,
)

YVARS = ("y0", "y1", "y2", "y3")


def _ys():
    return MultiPoly.variables(YVARS)


def test_arithmetic_and_equality():
    y0, y1, y2, y3 = _ys()
    p = (y0 + y1) * (y0 - y1)
    assert p == y0 * y0 - y1 * y1
    assert (p - p).is_zero
    assert (y0 + 1) * (y0 - 1) == y0 * y0 - 1
    assert y0**3 == y0 * y0 * y0
    assert p.degree() == 2 and p.is_homogeneous()
    assert not (p + 1).is_homogeneous()


def test_variable_mismatch_raises():
    a = MultiPoly.variable("a", ("a",))
    b = MultiPoly.variable("b", ("b",))
    with pytest.raises(ValueError):
        _ = a + b


def test_evaluate_and_specialize_commute():
    rng = random.Random(5)
    y = _ys()
    p = (y[0] + 2 * y[1]) * (y[2] - y[3]) + y[1] * y[1] * y[2]
    for _ in range(20):
        point = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(4)]
        partial = p.specialize({"y0": point[0], "y2": point[2]})
        rest = partial.specialize({"y1": point[1], "y3": point[3]})
        assert rest == MultiPoly.constant(YVARS, p.evaluate(point))


def test_specialize_unknown_name():
    p = _ys()[0]
    with pytest.raises(KeyError):
        p.specialize({"zz": 1})
    assert p.specialize({}) == p


def test_json_round_trip():
    y0, y1, _, _ = _ys()
    p = Fraction(3, 7) * y0 * y0 - y1 + 2
    again = MultiPoly.from_json(p.to_json())
    assert again == p


def _random_matrix(rng, n):
    return [
        [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)]
        for _ in range(n)
    ]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_symbolic_det_matches_sympy_on_numeric_matrices(n):
    """Oracle: sympy exact determinant on random rational matrices."""
    rng = random.Random(n)
    for _ in range(5):
        m = _random_matrix(rng, n)
        mine = symbolic_det(m)
        oracle = sympy.Matrix(
            [[sympy.Rational(v.numerator, v.denominator) for v in row] for row in m]
        ).det()
        assert sympy.Rational(mine.numerator, mine.denominator) == oracle


def test_symbolic_det_agrees_with_numeric_evaluation():
    """det of a polynomial matrix evaluated == det of the evaluated matrix."""
    rng = random.Random(17)
    y = _ys()
    mat = [[y[(i + j) % 4] + (1 if i == j else 0) for j in range(4)] for i in range(4)]
    d = symbolic_det(mat)
    for _ in range(100):
        pt = [Fraction(rng.randint(-4, 4), rng.randint(1, 2)) for _ in range(4)]
        numeric = [[e.evaluate(pt) for e in row] for row in mat]
        assert d.evaluate(pt) == symbolic_det(numeric)


def test_symbolic_det_rejects_non_square():
    y = _ys()
    with pytest.raises(ValueError):
        symbolic_det([[y[0], y[1]]])


def test_verify_sos_examples():
    y0, y1, y2, y3 = _ys()
    quat = (y0 * y0 + y1 * y1 + y2 * y2 + y3 * y3) ** 2
    cert = SosCertificate(((Fraction(1), y0 * y0 + y1 * y1 + y2 * y2 + y3 * y3),))
    assert verify_sos(quat, cert)
    assert certifies_positive_definite(quat, cert)

    tes = (y0 * y0 + y2 * y2) ** 2 + (y1 * y1 + y3 * y3) ** 2
    cert2 = SosCertificate(
        ((Fraction(1), y0 * y0 + y2 * y2), (Fraction(1), y1 * y1 + y3 * y3))
    )
    assert verify_sos(tes, cert2)
    assert certifies_positive_definite(tes, cert2)

    indefinite = y0 * y0 - y1 * y1
    assert not verify_sos(indefinite, cert2)
    assert not verify_sos(indefinite, SosCertificate(((Fraction(1), y0),)))


def test_sos_positivity_spot_check():
    """verify_sos true implies nonnegative values at random points."""
    rng = random.Random(23)
    y0, y1, y2, y3 = _ys()
    p = (y0 * y0 + y2 * y2) ** 2 + (y1 * y1 + y3 * y3) ** 2
    cert = find_diagonal_sos(p)
    assert cert is not None and verify_sos(p, cert)
    for _ in range(50):
        pt = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(4)]
        assert p.evaluate(pt) >= 0


def test_psd_certificate_is_not_positive_definite():
    """The PSD-but-not-PD quartic from the rejected sign array."""
    y0, y1, y2, y3 = _ys()
    q1 = y0 * y0 + y2 * y2 - y1 * y1 - y3 * y3
    q2 = y1 * y2 - y2 * y3 - y0 * y1 - y0 * y3
    p = q1 * q1 + 2 * q2 * q2
    cert = find_psd_sos(p)
    assert cert is not None and verify_sos(p, cert)
    assert not certifies_positive_definite(p, cert)
    assert find_diagonal_sos(p) is None


def test_perfect_square_root():
    y0, y1, _, _ = _ys()
    q = y0 * y0 - 2 * y0 * y1 + y1 * y1
    r = perfect_square_root(q)
    assert r is not None and (r * r - q).is_zero
    assert perfect_square_root(y0 * y0 + y1 * y1) is None


def test_find_sign_change_indefinite():
    p = MultiPoly(("y0", "y1"), {(2, 0): 1, (0, 2): -1})
    w = find_sign_change(p)
    assert w is not None
    assert w.positive_value > 0 and w.nonpositive_value <= 0
    assert any(w.nonpositive_point)


def test_find_sign_change_absent_for_positive_definite():
    """Oracle: direct evaluation at every integer grid point in [-3,3]^4."""
    y0, y1, y2, y3 = _ys()
    p = (y0 * y0 + y2 * y2) ** 2 + (y1 * y1 + y3 * y3) ** 2
    assert find_sign_change(p) is None
    import itertools

    for pt in itertools.product(range(-3, 4), repeat=4):
        if any(pt):
            assert p.evaluate(pt) > 0


def test_structured_probes_exclude_origin():
    for pt in structured_probes(4):
        assert any(pt)


def _uni(coeffs):
    return MultiPoly(("s",), {(k,): c for k, c in enumerate(coeffs) if c != 0})


def test_real_root_decisions():
    assert univariate_real_root_exists(_uni([-2, 0, 0, 1]))  # s^3 - 2
    assert not univariate_real_root_exists(_uni([1, 0, 1]))  # s^2 + 1
    assert univariate_real_root_exists(_uni([-4, 0, 0, 0, 1]))  # s^4 - 4
    with pytest.raises(ValueError):
        univariate_real_root_exists(_uni([0]))


@pytest.mark.parametrize(
    "coeffs",
    [
        [-2, 0, 1],            # s^2 - 2
        [-4, 0, 0, 0, 1],      # s^4 - 4
        [2, -3, 0, 1],         # s^3 - 3s + 2 (double root at 1)
        [1, 0, 1],             # no real roots
        [-6, 11, -6, 1],       # (s-1)(s-2)(s-3)
    ],
)
def test_sturm_count_matches_sympy(coeffs):
    """Oracle: sympy's real root counting on the same polynomial."""
    s = sympy.Symbol("s")
    poly = sum(sympy.Integer(c) * s**k for k, c in enumerate(coeffs))
    distinct = len(set(sympy.Poly(poly, s).real_roots()))
    assert count_real_roots([Fraction(c) for c in coeffs]) == distinct


def test_isolate_real_root_brackets_a_root():
    lo, hi = isolate_real_root([Fraction(-2), Fraction(0), Fraction(1)])
    sf = squarefree_part([Fraction(-2), Fraction(0), Fraction(1)])
    assert count_real_roots(sf, lo, hi) == 1
    assert uni_eval(sf, lo) * uni_eval(sf, hi) <= 0
    assert isolate_real_root([Fraction(1), Fraction(0), Fraction(1)]) is None


def test_uni_coeffs_round_trip():
    p = _uni([Fraction(1, 2), 0, 3])
    assert uni_coeffs(p) == [Fraction(1, 2), Fraction(0), Fraction(3)]


def test_homogeneous_determinant_degree():
    """det M^L of any unital sign constant is homogeneous of degree |G|."""
    from twistdiv.classify import det_polynomials, enumerate_candidates
    from twistdiv.groups import LEFT_STANDARD

    rng = random.Random(4)
    candidates = enumerate_candidates("Z4", LEFT_STANDARD, "raw")
    for cand in rng.sample(candidates, 12):
        det_l, det_r = det_polynomials(cand.constant)
        assert det_l.is_homogeneous() and det_l.degree() == 4
        assert det_r.is_homogeneous() and det_r.degree() == 4
