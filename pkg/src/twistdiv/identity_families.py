"""Catalogued identity families of the Z4-graded division algebra.

Each family fixes a named list of bracketed monomials for one degree
pattern together with the linear relations that force a coefficient
assignment to be an identity.  Substituting any values for the free
coefficients and solving the relations for the dependent ones yields a
combination that vanishes identically on the algebra; the number of free
names equals the dimension of the corresponding identity space
(14 for the (2,2) pattern, 9 for (3,1), 9 for (5), 34 for (6)).
"""

from __future__ import annotations

from fractions import Fraction

from .identities import L, N

X = L(0)
Y = L(1)
X2 = N(X, X)
Y2 = N(Y, Y)
XX2 = N(X, X2)   # x * x^2
X2X = N(X2, X)   # x^2 * x


def _combo(pairs):
    return [(Fraction(c), t) for c, t in pairs]


# -- cubic identity in two variables ------------------------------------

# [x(xy) - x^2 y] - [y x^2 - (yx)x] = 0
CUBIC_TWO_VAR = _combo([
    (1, N(X, N(X, Y))),
    (-1, N(X2, Y)),
    (-1, N(Y, X2)),
    (1, N(N(Y, X), X)),
])

# -- the two quartic identities in one variable --------------------------

# [x(x x^2) - x^2 x^2] - [x^2 x^2 - (x^2 x)x] = 0
QUARTIC_ONE_VAR_A = _combo([
    (1, N(X, XX2)),
    (-2, N(X2, X2)),
    (1, N(X2X, X)),
])

# [x(x^2 x) - (x x^2)x] - [x^2 x^2 - (x^2 x)x] = 0
QUARTIC_ONE_VAR_B = _combo([
    (1, N(X, X2X)),
    (-1, N(XX2, X)),
    (-1, N(X2, X2)),
    (1, N(X2X, X)),
])

# -- the ten listed quartic identities in two variables -------------------

_XY = N(X, Y)
_YX = N(Y, X)

QUARTIC_TWO_VAR_LISTED = {
    # [x^2 y^2 - (x^2 y)y] - [y(y x^2) - y^2 x^2]
    "q1": _combo([
        (1, N(X2, Y2)), (-1, N(N(X2, Y), Y)),
        (-1, N(Y, N(Y, X2))), (1, N(Y2, X2)),
    ]),
    # y * (cubic identity)
    "q2": _combo([
        (1, N(Y, N(X, N(X, Y)))), (-1, N(Y, N(X2, Y))),
        (-1, N(Y, N(Y, X2))), (1, N(Y, N(N(Y, X), X))),
    ]),
    # [(xy)^2 - ((xy)x)y] - [y(x(xy)) - (yx)(xy)]
    "q3": _combo([
        (1, N(_XY, _XY)), (-1, N(N(_XY, X), Y)),
        (-1, N(Y, N(X, _XY))), (1, N(_YX, _XY)),
    ]),
    # [x(y(xy)) - (xy)^2] - [(xy)(yx) - ((xy)y)x]
    "q4": _combo([
        (1, N(X, N(Y, _XY))), (-1, N(_XY, _XY)),
        (-1, N(_XY, _YX)), (1, N(N(_XY, Y), X)),
    ]),
    # x[x y^2 - (xy)y] + y[x^2 y - x(xy)] + [x((xy)y) - (x(xy))y]
    #   - [y(y x^2) - y^2 x^2]
    "q5": _combo([
        (1, N(X, N(X, Y2))), (-1, N(X, N(_XY, Y))),
        (1, N(Y, N(X2, Y))), (-1, N(Y, N(X, _XY))),
        (1, N(X, N(_XY, Y))), (-1, N(N(X, _XY), Y)),
        (-1, N(Y, N(Y, X2))), (1, N(Y2, X2)),
    ]),
    # x[x y^2 - (xy)y] + y[x^2 y - x(xy)] + [x(x y^2) - x^2 y^2]
    #   - [x((yx)y) - (x(yx))y]
    "q6": _combo([
        (1, N(X, N(X, Y2))), (-1, N(X, N(_XY, Y))),
        (1, N(Y, N(X2, Y))), (-1, N(Y, N(X, _XY))),
        (1, N(X, N(X, Y2))), (-1, N(X2, Y2)),
        (-1, N(X, N(_YX, Y))), (1, N(N(X, _YX), Y)),
    ]),
    # [x(x y^2) - x^2 y^2] - [y(x(yx)) - (yx)^2]
    #   + [y(x^2 y) - (y x^2)y] - [y(x(xy)) - (yx)(xy)]
    "q7": _combo([
        (1, N(X, N(X, Y2))), (-1, N(X2, Y2)),
        (-1, N(Y, N(X, _YX))), (1, N(_YX, _YX)),
        (1, N(Y, N(X2, Y))), (-1, N(N(Y, X2), Y)),
        (-1, N(Y, N(X, _XY))), (1, N(_YX, _XY)),
    ]),
    # x[(xy)y - x y^2] + [(xy)y - x y^2]x + [y(y x^2) - y^2 x^2]
    "q8": _combo([
        (1, N(X, N(_XY, Y))), (-1, N(X, N(X, Y2))),
        (1, N(N(_XY, Y), X)), (-1, N(N(X, Y2), X)),
        (1, N(Y, N(Y, X2))), (-1, N(Y2, X2)),
    ]),
    # [y((xy)x) - (y(xy))x] - [x((xy)y) - (x(xy))y]
    "q9": _combo([
        (1, N(Y, N(_XY, X))), (-1, N(N(Y, _XY), X)),
        (-1, N(X, N(_XY, Y))), (1, N(N(X, _XY), Y)),
    ]),
    # x[x y^2 - (xy)y] + y[(yx)x - y x^2] + [x(x y^2) - x^2 y^2]
    #   - [y((yx)x) - (y(yx))x]
    "q10": _combo([
        (1, N(X, N(X, Y2))), (-1, N(X, N(_XY, Y))),
        (1, N(Y, N(_YX, X))), (-1, N(Y, N(Y, X2))),
        (1, N(X, N(X, Y2))), (-1, N(X2, Y2)),
        (-1, N(Y, N(_YX, X))), (1, N(N(Y, _YX), X)),
    ]),
}

# -- general quartic family, quadratic in each of two variables ----------

QUARTIC_TWO_VAR_MONOMIALS = {
    "a1": N(X2, Y2), "a2": N(_XY, _XY), "a3": N(_YX, _XY),
    "a4": N(_XY, _YX), "a5": N(_YX, _YX), "a6": N(Y2, X2),
    "b1": N(X, N(X, Y2)), "b2": N(X, N(Y, _XY)), "b3": N(Y, N(X, _XY)),
    "b4": N(X, N(Y, _YX)), "b5": N(Y, N(X, _YX)), "b6": N(Y, N(Y, X2)),
    "c1": N(N(X2, Y), Y), "c2": N(N(_XY, X), Y), "c3": N(N(_YX, X), Y),
    "c4": N(N(_XY, Y), X), "c5": N(N(_YX, Y), X), "c6": N(N(Y2, X), X),
    "e1": N(X, N(_XY, Y)), "e2": N(X, N(_YX, Y)), "e3": N(Y, N(X2, Y)),
    "e4": N(X, N(Y2, X)), "e5": N(Y, N(_XY, X)), "e6": N(Y, N(_YX, X)),
    "f1": N(N(X, _XY), Y), "f2": N(N(X, _YX), Y), "f3": N(N(Y, X2), Y),
    "f4": N(N(X, Y2), X), "f5": N(N(Y, _XY), X), "f6": N(N(Y, _YX), X),
}

QUARTIC_TWO_VAR_FREE = (
    "c1", "c2", "c3", "c4", "c5", "c6",
    "f1", "f2", "f3", "f4", "f5", "f6", "e4", "e6",
)

QUARTIC_TWO_VAR_CONDITIONS = {
    "a1": {"f6": -1, "c1": -1, "c6": -1, "f2": -1, "f3": 1},
    "a2": {"c4": -1, "f4": -1, "c2": -1},
    "a3": {"f3": -1, "c2": -1, "c3": -1},
    "a4": {"c5": -1, "f4": -1, "c4": -1},
    "a5": {"f3": -1, "c3": -1, "c5": -1},
    "a6": {"c1": -1, "f1": -1, "f5": -1, "f4": 1, "c6": -1},
    "b1": {"f6": 2, "c6": 1, "f2": 2, "e4": 1, "f4": 1, "f1": -1,
           "f5": -1, "f3": -1},
    "b2": {"c4": 1, "f4": 1},
    "b3": {"c2": 1, "f1": 1, "f5": 1, "f3": 1, "f2": -1, "e6": 1},
    "b4": {"e4": -1, "c5": 1},
    "b5": {"f3": 1, "c3": 1},
    "b6": {"f4": -1, "f6": -1, "e6": -1, "f1": 1, "f5": 1, "c1": 1},
    "e1": {"f6": -1, "f5": 1, "f2": -1, "e4": -1, "f4": -1},
    "e2": {"f2": -1},
    "e3": {"f1": -1, "f5": -1, "f3": -1, "f2": 1, "e6": -1},
    "e5": {"f5": -1},
}

# -- general quartic family, cubic in x and linear in y -------------------

# The relations reference four f-named monomials beyond the sixteen
# a/b/c/e names; the assignment below is the unique one (of the 24
# candidate orderings of the remaining bracketings) under which the
# relations span identities, pinned by an exhaustive search at build time.
QUARTIC_CUBIC_LINEAR_MONOMIALS = {
    "a1": N(X2, _XY), "a2": N(X2, _YX), "a3": N(_XY, X2), "a4": N(_YX, X2),
    "b1": N(X, N(X, _XY)), "b2": N(X, N(X, _YX)), "b3": N(X, N(Y, X2)),
    "b4": N(Y, XX2),
    "c1": N(X2X, Y), "c2": N(N(X2, Y), X), "c3": N(N(_XY, X), X),
    "c4": N(N(_YX, X), X),
    "e1": N(X, N(X2, Y)), "e2": N(X, N(_XY, X)), "e3": N(X, N(_YX, X)),
    "e4": N(Y, X2X),
    "f1": N(XX2, Y), "f2": N(N(X, _XY), X), "f3": N(N(X, _YX), X),
    "f4": N(N(Y, X2), X),
}

QUARTIC_CUBIC_LINEAR_FREE = (
    "c1", "c2", "c3", "c4", "e3", "f1", "f2", "f3", "f4",
)

QUARTIC_CUBIC_LINEAR_CONDITIONS = {
    "a1": {"c3": -1, "c1": -1, "f3": -1},
    "a2": {"c4": -1, "f3": -1, "c2": -1},
    "a3": {"c3": -1, "f2": -1, "c2": -1},
    "a4": {"f1": -1, "f4": -1, "f3": 1, "c1": -1, "c4": -1},
    "b1": {"c3": 1, "e3": 1, "f3": 2},
    "b2": {"c4": 1, "f3": 2, "f2": -1},
    "b3": {"f2": 1, "f3": -1, "c2": 1, "e3": -1},
    "b4": {"f1": 1, "f4": 1, "f3": -2, "c1": 1, "f2": 1},
    "e1": {"f1": -1, "e3": -1, "f3": -1},
    "e2": {"f3": -1},
    "e4": {"f2": -1, "f4": -1, "f3": 1},
}

# -- quintic family in one variable ---------------------------------------

QUINTIC_MONOMIALS = {
    "a1": N(X, N(X2, X2)), "b1": N(X, N(X, XX2)), "c1": N(X, N(X2X, X)),
    "e1": N(X, N(X, X2X)), "f1": N(X, N(XX2, X)),
    "a2": N(N(X2, X2), X), "b2": N(N(X, XX2), X), "c2": N(N(X2X, X), X),
    "e2": N(N(X, X2X), X), "f2": N(N(XX2, X), X),
    "a3": N(X2, X2X), "b3": N(X2, XX2), "c3": N(X2X, X2), "e3": N(XX2, X2),
}

QUINTIC_FREE = ("c1", "e1", "f1", "b2", "c2", "e2", "f2", "c3", "e3")

QUINTIC_CONDITIONS = {
    "a1": {"c1": -2, "f1": -2, "b2": -1, "c2": 1, "e2": -2, "e1": -1,
           "f2": -1, "e3": -1},
    "a2": {"c2": -2, "f1": 1, "e1": 1, "f2": -1, "e3": -1, "c3": -1},
    "a3": {"f1": -1, "b2": -1, "c2": 1, "e1": -1, "f2": 1, "e3": 1, "c3": 1},
    "b1": {"c1": 1, "f1": 2, "b2": 1, "c2": -1, "e2": 2, "e1": 1, "f2": 1},
    "b3": {"e1": -1, "e2": -1, "f1": -1, "f2": -1, "c3": -1},
}

# -- degree-six family in one variable -------------------------------------

SEXTIC_MONOMIALS = {
    "a01": N(X, N(X, N(X, XX2))),
    "a02": N(X, N(X, N(X, X2X))),
    "a03": N(X, N(X, N(X2, X2))),
    "a04": N(X, N(X, N(XX2, X))),
    "a05": N(X, N(X, N(X2X, X))),
    "a06": N(X, N(X2, XX2)),
    "a07": N(X, N(X2, X2X)),
    "a08": N(X, N(XX2, X2)),
    "a09": N(X, N(N(X, XX2), X)),
    "a10": N(X, N(N(X, X2X), X)),
    "a11": N(X, N(X2X, X2)),
    "a12": N(X, N(N(X2, X2), X)),
    "a13": N(X, N(N(XX2, X), X)),
    "a14": N(X, N(N(X2X, X), X)),
    "a15": N(X2, N(X, XX2)),
    "a16": N(X2, N(X, X2X)),
    "a17": N(X2, N(X2, X2)),
    "a18": N(X2, N(XX2, X)),
    "a19": N(X2, N(X2X, X)),
    "a20": N(XX2, XX2),
    "a21": N(XX2, X2X),
    "a22": N(N(X, XX2), X2),
    "a23": N(N(X, N(X, XX2)), X),
    "a24": N(N(X, N(X, X2X)), X),
    "a25": N(N(X, X2X), X2),
    "a26": N(N(X, N(X2, X2)), X),
    "a27": N(N(X, N(XX2, X)), X),
    "a28": N(N(X, N(X2X, X)), X),
    "a29": N(X2X, XX2),
    "a30": N(X2X, X2X),
    "a31": N(N(X2, X2), X2),
    "a32": N(N(X2, XX2), X),
    "a33": N(N(X2, X2X), X),
    "a34": N(N(XX2, X), X2),
    "a35": N(N(XX2, X2), X),
    "a36": N(N(N(X, XX2), X), X),
    "a37": N(N(N(X, X2X), X), X),
    "a38": N(N(X2X, X), X2),
    "a39": N(N(X2X, X2), X),
    "a40": N(N(N(X2, X2), X), X),
    "a41": N(N(N(XX2, X), X), X),
    "a42": N(N(N(X2X, X), X), X),
}

SEXTIC_FREE = tuple(
    f"a{i:02d}"
    for i in range(1, 43)
    if f"a{i:02d}" not in ("a01", "a02", "a03", "a06", "a07", "a15", "a16", "a17")
)

SEXTIC_CONDITIONS = {
    "a01": {
        "a36": 2, "a31": 1, "a33": 1, "a29": 1, "a34": 2, "a28": 2, "a20": 1,
        "a35": 1, "a40": 1, "a38": 1, "a37": 2, "a41": 1, "a25": 2, "a24": 1,
        "a10": 2, "a14": 1, "a26": 1, "a12": 1, "a09": 1, "a27": 2, "a04": 1,
        "a05": 1, "a11": 1, "a13": 2, "a08": 1, "a22": 1,
    },
    "a02": {
        "a36": 2, "a31": 2, "a33": 1, "a29": 1, "a34": 2, "a30": 1, "a28": 2,
        "a21": 1, "a32": 1, "a20": 1, "a35": 2, "a40": 2, "a38": 2, "a37": 3,
        "a41": 3, "a25": 2, "a24": 1, "a42": 2, "a39": 2, "a14": 2, "a26": 1,
        "a12": 1, "a27": 2, "a04": -1, "a11": 1, "a13": 1, "a08": 1, "a22": 2,
    },
    "a03": {
        "a36": -1, "a30": 1, "a28": -1, "a21": 1, "a32": 1, "a35": 1,
        "a40": 1, "a38": 1, "a37": -1, "a41": 1, "a25": -1, "a24": -1,
        "a23": 1, "a10": -2, "a42": 3, "a39": 2, "a14": -1, "a12": -1,
        "a09": -1, "a27": -2, "a04": -1, "a05": -2, "a11": -1, "a13": -2,
        "a08": -2, "a22": -1,
    },
    "a06": {
        "a36": -2, "a31": -2, "a33": -1, "a29": -1, "a34": -3, "a30": -1,
        "a28": -2, "a21": -1, "a32": -1, "a20": -2, "a35": -2, "a40": -2,
        "a38": -2, "a37": -3, "a41": -3, "a25": -3, "a24": -1, "a10": -1,
        "a42": -2, "a39": -2, "a14": -2, "a26": -1, "a12": -1, "a27": -2,
        "a11": -2, "a13": -2, "a08": -1, "a22": -2,
    },
    "a07": {
        "a28": -1, "a21": -1, "a35": -1, "a23": -1, "a14": -1, "a26": -1,
        "a12": -1, "a09": -1,
    },
    "a15": {
        "a41": -1, "a24": 1, "a19": 1, "a25": -1, "a28": -1, "a23": 1,
        "a31": -1, "a40": -1, "a35": -1, "a29": -2, "a18": 1, "a20": -1,
        "a32": 1, "a34": -2, "a37": -1, "a38": -2, "a36": -1, "a42": -1,
    },
    "a16": {
        "a30": -1, "a32": -1, "a37": -1, "a41": -1, "a24": -1, "a18": -1,
        "a39": -1, "a27": -1,
    },
    "a17": {
        "a36": -1, "a31": -1, "a33": -2, "a30": -1, "a21": -1, "a32": -2,
        "a35": -1, "a40": -2, "a38": -1, "a41": -1, "a24": -1, "a23": -2,
        "a18": -1, "a42": -3, "a39": -2, "a26": -1, "a19": -2, "a22": -1,
    },
}

FAMILIES = {
    "quartic-two-var": (
        QUARTIC_TWO_VAR_MONOMIALS,
        QUARTIC_TWO_VAR_FREE,
        QUARTIC_TWO_VAR_CONDITIONS,
    ),
    "quartic-cubic-linear": (
        QUARTIC_CUBIC_LINEAR_MONOMIALS,
        QUARTIC_CUBIC_LINEAR_FREE,
        QUARTIC_CUBIC_LINEAR_CONDITIONS,
    ),
    "quintic": (QUINTIC_MONOMIALS, QUINTIC_FREE, QUINTIC_CONDITIONS),
    "sextic": (SEXTIC_MONOMIALS, SEXTIC_FREE, SEXTIC_CONDITIONS),
}


def instantiate_family(family, free_values):
    """Coefficient combo from an assignment of the family's free names.

    Dependent coefficients are filled in from the linear relations; the
    result is a list of (coefficient, tree) pairs ready for verification.
    """
    monomials, free, conds = FAMILIES[family]
    values = {name: Fraction(0) for name in monomials}
    for name, v in free_values.items():
        if name not in free:
            raise KeyError(f"{name} is not a free coefficient of {family}")
        values[name] = Fraction(v)
    for name, relation in conds.items():
        values[name] = sum(
            (coeff * values[src] for src, coeff in relation.items()),
            start=Fraction(0),
        )
    return [(values[name], monomials[name]) for name in monomials]
