"""Parenthesized polynomial identities of a twisted group algebra.

A monomial here is a full binary tree whose leaves are variables; the
tree fixes the bracketing of the product.  For a degree pattern such as
(x:2, y:2) the monomial set is every leaf word with that content times
every bracketing (Catalan many), and the *identity space* is the exact
rational nullspace of the coefficient-matrix whose columns are the
symbolic expansions of the monomials over generic elements.

Expansion is exact: generic elements have polynomial components, and the
algebra product is evaluated over the polynomial ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from . import _linalg
from .poly import MultiPoly

VARIABLE_NAMES = ("x", "y", "z")

MAX_TOTAL_DEGREE = 6
MAX_VARIABLES = 3


@dataclass(frozen=True)
class Leaf:
    var: int

    def serialize(self):
        return VARIABLE_NAMES[self.var]

    def leaves(self):
        return (self.var,)


@dataclass(frozen=True)
class Node:
    left: object
    right: object

    def serialize(self):
        return f"({self.left.serialize()}{self.right.serialize()})"

    def leaves(self):
        return self.left.leaves() + self.right.leaves()


def L(i):
    return Leaf(i)


def N(a, b):
    return Node(a, b)


def tree_degree(tree):
    return len(tree.leaves())


def normalize_pattern(pattern):
    """Pattern as a tuple of per-variable degrees, e.g. (2, 2) or (5,)."""
    if isinstance(pattern, dict):
        degs = [pattern.get(v, 0) for v in VARIABLE_NAMES]
        while degs and degs[-1] == 0:
            degs.pop()
        pattern = tuple(degs)
    else:
        pattern = tuple(pattern)
    if not pattern or any(d < 0 for d in pattern) or sum(pattern) < 2:
        raise ValueError("pattern must have total degree >= 2")
    if len(pattern) > MAX_VARIABLES:
        raise ValueError(f"at most {MAX_VARIABLES} distinct variables")
    if sum(pattern) > MAX_TOTAL_DEGREE:
        raise ValueError(f"total degree capped at {MAX_TOTAL_DEGREE}")
    return pattern


def _bracketings(word):
    if len(word) == 1:
        return [Leaf(word[0])]
    out = []
    for k in range(1, len(word)):
        for left in _bracketings(word[:k]):
            for right in _bracketings(word[k:]):
                out.append(Node(left, right))
    return out


def _leaf_words(pattern):
    letters = []
    for var, deg in enumerate(pattern):
        letters.extend([var] * deg)
    return sorted(set(permutations(letters)))


def enumerate_monomials(pattern):
    """All bracketed monomials of the pattern, duplicate-free, in a fixed
    order: leaf words lexicographically, bracketings by split position."""
    pattern = normalize_pattern(pattern)
    out = []
    for word in _leaf_words(pattern):
        out.extend(_bracketings(word))
    return out


class Expander:
    """Caches symbolic expansions of bracket trees over one algebra.

    The ambient polynomial ring has one indeterminate per (variable,
    component) pair; a tree expands to the component vector of its
    product, computed once per distinct subtree.
    """

    def __init__(self, algebra, nvars):
        if nvars > MAX_VARIABLES:
            raise ValueError(f"at most {MAX_VARIABLES} distinct variables")
        self.algebra = algebra
        n = algebra.group.order
        names = tuple(
            f"{VARIABLE_NAMES[v]}{i}" for v in range(nvars) for i in range(n)
        )
        self.vars = names
        self.generic = [
            algebra.generic_element(VARIABLE_NAMES[v], names) for v in range(nvars)
        ]
        self._cache = {}

    def element(self, tree):
        key = tree.serialize()
        got = self._cache.get(key)
        if got is None:
            if isinstance(tree, Leaf):
                got = self.generic[tree.var]
            else:
                got = self.element(tree.left) * self.element(tree.right)
            self._cache[key] = got
        return got

    def expand(self, tree):
        return list(self.element(tree).coeffs)


def expand_monomial(algebra, tree, nvars=None):
    """Component polynomials of the tree over generic elements."""
    if nvars is None:
        nvars = max(tree.leaves()) + 1
    return Expander(algebra, nvars).expand(tree)


def combination_value(expander, combo):
    """Sum of coeff * expansion(tree) as an element with polynomial parts."""
    total = None
    for coeff, tree in combo:
        term = expander.element(tree) * coeff
        total = term if total is None else total + term
    return total


def verify_identity(algebra, combo):
    """True iff the coefficient combination vanishes identically."""
    if not combo:
        return True
    patterns = set()
    for _, tree in combo:
        leaves = tree.leaves()
        patterns.add(tuple(sorted(leaves)))
    if len(patterns) > 1:
        raise ValueError("all monomials must share one degree pattern")
    nvars = max(max(p) for p in patterns) + 1
    expander = Expander(algebra, nvars)
    value = combination_value(expander, combo)
    return all(
        c.is_zero if isinstance(c, MultiPoly) else c == 0 for c in value.coeffs
    )


@dataclass
class IdentitySpace:
    pattern: tuple
    monomials: list
    nullspace_basis: list
    dimension: int

    def contains(self, coefficients):
        """Exact membership of a coefficient vector in the identity space."""
        rows = [list(v) for v in self.nullspace_basis]
        return _linalg.in_rowspace(rows, list(coefficients))

    def to_json(self):
        return {
            "pattern": list(self.pattern),
            "monomials": [t.serialize() for t in self.monomials],
            "dimension": self.dimension,
            "basis": [
                [[v.numerator, v.denominator] for v in map(_as_frac, vec)]
                for vec in self.nullspace_basis
            ],
        }


def _as_frac(x):
    from fractions import Fraction

    return Fraction(x)


def identity_space(algebra, pattern):
    """Exact nullspace of the monomial-expansion matrix for the pattern.

    Rows are polynomial coefficient slots (component index, monomial
    exponent); identically zero rows are dropped before elimination.
    """
    pattern = normalize_pattern(pattern)
    monomials = enumerate_monomials(pattern)
    expander = Expander(algebra, len(pattern))
    expansions = [expander.expand(t) for t in monomials]
    slots = set()
    for comps in expansions:
        for ci, p in enumerate(comps):
            for exp in p.terms:
                slots.add((ci, exp))
    slots = sorted(slots)
    rows = []
    for ci, exp in slots:
        row = [comps[ci].terms.get(exp, 0) for comps in expansions]
        if any(row):
            rows.append(row)
    basis = _linalg.nullspace(rows, ncols=len(monomials))
    return IdentitySpace(pattern, monomials, basis, len(basis))


# -- loop/alternativity laws -------------------------------------------


@dataclass
class LoopProperties:
    flexible: bool
    power_associative: bool
    alternative: bool
    left_bol: bool
    right_bol: bool
    moufang: bool
    commutative: bool
    associative: bool
    counterexamples: dict

    def to_json(self):
        data = {
            k: getattr(self, k)
            for k in (
                "flexible", "power_associative", "alternative", "left_bol",
                "right_bol", "moufang", "commutative", "associative",
            )
        }
        data["counterexamples"] = {
            k: [list(map(str, e.coeffs)) for e in v]
            for k, v in self.counterexamples.items()
        }
        return data


def _law_combos():
    x, y, z = L(0), L(1), L(2)
    one = lambda t: (1, t)
    neg = lambda t: (-1, t)
    return {
        "flexible": [one(N(N(x, y), x)), neg(N(x, N(y, x)))],
        "left_alternative": [one(N(x, N(x, y))), neg(N(N(x, x), y))],
        "right_alternative": [one(N(N(y, x), x)), neg(N(y, N(x, x)))],
        "commutative": [one(N(x, y)), neg(N(y, x))],
        "associative": [one(N(N(x, y), z)), neg(N(x, N(y, z)))],
        "left_bol": [one(N(x, N(y, N(x, z)))), neg(N(N(x, N(y, x)), z))],
        "right_bol": [one(N(N(N(z, x), y), x)), neg(N(z, N(N(x, y), x)))],
        "moufang": [one(N(N(x, y), N(z, x))), neg(N(N(x, N(y, z)), x))],
        "cube": [one(N(x, N(x, x))), neg(N(N(x, x), x))],
    }


_POWER4_TREES = None


def _power4_laws():
    # all five bracketings of x^4 must agree for power associativity
    global _POWER4_TREES
    if _POWER4_TREES is None:
        _POWER4_TREES = _bracketings((0, 0, 0, 0))
    first = _POWER4_TREES[0]
    return [
        [(1, first), (-1, other)] for other in _POWER4_TREES[1:]
    ]


_SAMPLE_COORDS = (0, 1, -1, 2)


def _sample_elements(algebra, count=3):
    """Small deterministic pool of elements for counterexample hunting."""
    from itertools import product as iproduct

    n = algebra.group.order
    pool = [algebra.basis_element(g) for g in range(n)]
    for coeffs in iproduct(_SAMPLE_COORDS, repeat=n):
        if any(coeffs):
            pool.append(algebra.element(coeffs))
        if len(pool) >= 40:
            break
    return pool


def _find_counterexample(algebra, combo, nvars):
    pool = _sample_elements(algebra)
    from itertools import product as iproduct

    def eval_tree(tree, args):
        if isinstance(tree, Leaf):
            return args[tree.var]
        return eval_tree(tree.left, args) * eval_tree(tree.right, args)

    for args in iproduct(pool, repeat=nvars):
        total = None
        for coeff, tree in combo:
            term = eval_tree(tree, args) * coeff
            total = term if total is None else total + term
        if not total.is_zero():
            return args
    return None


def loop_property_suite(algebra):
    """Symbolic verdicts for the standard loop laws, with counterexamples.

    Each law is decided exactly over generic components; a failed law is
    accompanied by a concrete rational counterexample found on a small
    deterministic sample pool.
    """
    combos = _law_combos()
    results = {}
    examples = {}

    def check(name, combo, nvars):
        ok = verify_identity(algebra, combo)
        if not ok:
            ce = _find_counterexample(algebra, combo, nvars)
            if ce is not None:
                examples[name] = ce
        results[name] = ok
        return ok

    flexible = check("flexible", combos["flexible"], 2)
    left_alt = check("left_alternative", combos["left_alternative"], 2)
    right_alt = check("right_alternative", combos["right_alternative"], 2)
    commutative = check("commutative", combos["commutative"], 2)
    associative = check("associative", combos["associative"], 3)
    left_bol = check("left_bol", combos["left_bol"], 3)
    right_bol = check("right_bol", combos["right_bol"], 3)
    moufang = check("moufang", combos["moufang"], 3)
    cube = check("cube", combos["cube"], 1)
    power4 = all(verify_identity(algebra, c) for c in _power4_laws())
    if not (cube and power4):
        if "cube" in examples:
            examples["power_associative"] = examples["cube"]
        else:
            for c in _power4_laws():
                ce = _find_counterexample(algebra, c, 1)
                if ce is not None:
                    examples["power_associative"] = ce
                    break
    return LoopProperties(
        flexible=flexible,
        power_associative=cube and power4,
        alternative=left_alt and right_alt,
        left_bol=left_bol,
        right_bol=right_bol,
        moufang=moufang,
        commutative=commutative,
        associative=associative,
        counterexamples=examples,
    )


# -- identities that involve the conjugation ---------------------------


def conjugate_identity_checks(algebra):
    """Symbolic truth of the conjugate-product identities.

    Over generic x, y these assert conj(x)*(x*y) = y*(x*conj(x)) and
    (y*x)*conj(x) = (x*conj(x))*y, plus the matching pair obtained by
    writing the squared-norm element through either grouping.
    """
    names = tuple(f"x{i}" for i in range(algebra.group.order)) + tuple(
        f"y{i}" for i in range(algebra.group.order)
    )
    x = algebra.generic_element("x", names)
    y = algebra.generic_element("y", names)
    xbar = x.conj()
    checks = {
        "conj_left": (xbar * (x * y)) - (y * (x * xbar)),
        "conj_right": ((y * x) * xbar) - ((x * xbar) * y),
    }
    return {k: all(c.is_zero for c in v.coeffs) for k, v in checks.items()}


def verify_conjugate_identities(algebra):
    return all(conjugate_identity_checks(algebra).values())
