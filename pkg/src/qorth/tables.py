"""Identity tables used by the verification suites.

Every entry is text in the expression grammar of :mod:`qorth.expr`, parsed
against the alphabet named by the table. Pairs are ``(lhs, rhs)``.
"""

from __future__ import annotations

# Alternative expansions of the cofactor of u_{ma}, keyed by (m, a). One
# expression per index pair (b, c) with eps_abc != 0, canonical pair first.
COFACTORS: dict[tuple[int, int], tuple[str, ...]] = {
    (1, 1): (
        "u22*u33 - q*u23*u32",
        "-q^-1*u32*u23 + u33*u22",
    ),
    (2, 1): (
        "-q*u21*u33 + q*u23*u31 - q*(s - s^-1)*u22*u32",
        "u31*u23 - u33*u21 + (s - s^-1)*u32*u22",
    ),
    (3, 1): (
        "q*u21*u32 - q^2*u22*u31",
        "-u31*u22 + q*u32*u21",
    ),
    (1, 2): (
        "-q^-1*u12*u33 + u13*u32",
        "q^-1*u32*u13 - u33*u12",
        "-q^-1*(s - s^-1)^-1*(u22*u23 - q*u23*u22)",
    ),
    (2, 2): (
        "u11*u33 - u13*u31 + (s - s^-1)*u12*u32",
        "-u31*u13 + u33*u11 - (s - s^-1)*u32*u12",
        "(s - s^-1)^-1*(u21*u23 - u23*u21 + (s - s^-1)*u22*u22)",
    ),
    (3, 2): (
        "-u11*u32 + q*u12*u31",
        "u31*u12 - q*u32*u11",
        "(s - s^-1)^-1*(-u21*u22 + q*u22*u21)",
    ),
    (1, 3): (
        "q^-1*u12*u23 - u13*u22",
        "-q^-2*u22*u13 + q^-1*u23*u12",
    ),
    (2, 3): (
        "-u11*u23 + u13*u21 - (s - s^-1)*u12*u22",
        "q^-1*u21*u13 - q^-1*u23*u11 + q^-1*(s - s^-1)*u22*u12",
    ),
    (3, 3): (
        "u11*u22 - q*u12*u21",
        "-q^-1*u21*u12 + u22*u11",
    ),
}

# Second-column generators written as cofactors.
SECOND_COLUMN_COFACTORS: tuple[tuple[str, str], ...] = (
    ("s^-1*u12", "-u11*u23 + u13*u21 - (s - s^-1)*u12*u22"),
    ("s^-1*u12", "q^-1*u21*u13 - q^-1*u23*u11 + q^-1*(s - s^-1)*u22*u12"),
    ("u22", "u11*u33 - u13*u31 + (s - s^-1)*u12*u32"),
    ("u22", "-u31*u13 + u33*u11 - (s - s^-1)*u32*u12"),
    ("u22", "(s - s^-1)^-1*(u21*u23 - u23*u21 + (s - s^-1)*u22*u22)"),
    ("s*u32", "-q*u21*u33 + q*u23*u31 - q*(s - s^-1)*u22*u32"),
    ("s*u32", "u31*u23 - u33*u21 + (s - s^-1)*u32*u22"),
)

# Quadratic commutation relations among the first and third columns.
COMMUTATION_RELATIONS: dict[str, tuple[tuple[str, str], ...]] = {
    "first-column": (
        ("u21*u11", "q^-1*u11*u21"),
        ("u31*u11", "q^-2*u11*u31"),
        ("u31*u21", "q^-1*u21*u31"),
        ("u21^2", "-s^-3*(1 + q)*u11*u31"),
    ),
    "third-column": (
        ("u23*u13", "q^-1*u13*u23"),
        ("u33*u13", "q^-2*u13*u33"),
        ("u33*u23", "q^-1*u23*u33"),
        ("u23^2", "-s^-3*(1 + q)*u13*u33"),
    ),
    "mixed": (
        ("u13*u11", "q^-2*u11*u13"),
        ("u21*u13", "q*u13*u21"),
        ("u23*u11", "q^-1*u11*u23 - (q - q^-1)*u13*u21"),
        ("u23*u21", "q^-1*u21*u23 + s^-1*(q - q^-1)*u13*u31"),
        ("u31*u23", "q*u23*u31"),
        ("u31*u13", "u13*u31"),
        (
            "u33*u11",
            "u11*u33 + (1 - q^-1)*(q - q^-1)*u13*u31 + s^-1*(q - q^-1)*u21*u23",
        ),
        ("u33*u21", "q^-1*u21*u33 - (q - q^-1)*u23*u31"),
        ("u33*u31", "q^-2*u31*u33"),
    ),
    "third-row": (
        ("u32*u31", "q^-1*u31*u32"),
        ("u33*u32", "q^-1*u32*u33"),
        ("u31*u33", "u33*u31 - (s - s^-1)*u32^2"),
    ),
}

# The invariant quadratic form, written along each row and column.
QUADRATIC_FORMS: tuple[str, ...] = (
    "u11*u33 + s*u21*u23 + q*u31*u13",
    "u11*u33 + s*u12*u32 + q*u13*u31",
    "s^-1*u12*u32 + u22^2 + s*u32*u12",
    "s^-1*u21*u23 + u22^2 + s*u23*u21",
    "q^-1*u13*u31 + s^-1*u23*u21 + u33*u11",
    "q^-1*u31*u13 + s^-1*u32*u12 + u33*u11",
)

# Quadratic coinvariants u_{i3} u_{j1} and u_{i1} u_{j3} as polynomials in
# y_k = u_{k2}. Left sides over the u alphabet, right sides over y.
COINVARIANTS: tuple[tuple[str, str], ...] = (
    ("u13*u11", "-s^-1*(1 + q)^-1*y1^2"),
    ("u13*u21", "s^-1*(1 + q)^-1*y1*(1 - y2)"),
    ("u13*u31", "(1 + q)^-1*(1 - y2 - s^-1*y1*y3)"),
    ("u23*u11", "-s*(1 + q)^-1*(1 + q^-1*y2)*y1"),
    ("u23*u21", "y3*y1"),
    ("u23*u31", "s^-1*(1 + q)^-1*(1 - y2)*y3"),
    ("u33*u11", "(1 + q)^-1*(q + y2 - s^-1*y3*y1)"),
    ("u33*u21", "-s^-1*(1 + q)^-1*y3*(q + y2)"),
    ("u33*u31", "-s^-1*(1 + q)^-1*y3^2"),
    ("u11*u13", "-s^3*(1 + q)^-1*y1^2"),
    ("u11*u23", "-s*(1 + q)^-1*y1*(1 + q*y2)"),
    ("u11*u33", "(1 + q)^-1*(1 + q*y2 - s^3*y1*y3)"),
    ("u21*u13", "s*(1 + q)^-1*y1*(1 - y2)"),
    ("u21*u23", "y1*y3"),
    ("u21*u33", "-s*(1 + q)^-1*(1 + q*y2)*y3"),
    ("u31*u13", "(1 + q)^-1*(1 - y2 - s^-1*y1*y3)"),
    ("u31*u23", "s*(1 + q)^-1*(1 - y2)*y3"),
    ("u31*u33", "-s^3*(1 + q)^-1*y3^2"),
)

COINVARIANT_STEPS: tuple[tuple[str, str], ...] = (
    ("u31*u13", "u13*u31"),
    ("u11*u13", "q^2*u13*u11"),
    ("u31*u33", "q^2*u33*u31"),
)

# Relations of the coinvariant subalgebra, over y.
Y_RELATIONS: tuple[tuple[str, str, str], ...] = (
    ("y3-shift", "y3*(y2 - 1)", "q^-1*(y2 - 1)*y3"),
    ("y1-shift", "y1*(y2 - 1)", "q*(y2 - 1)*y1"),
    ("y3y1-order", "y3*y1", "q^-2*y1*y3 + s^-3*(1 - q)*(y2 - 1)"),
    ("y3y2-order", "y3*y2", "q^-1*y2*y3 + (1 - q^-1)*y3"),
    ("y2y1-order", "y2*y1", "q^-1*y1*y2 + (1 - q^-1)*y1"),
    ("y3y1-symmetric", "q*y3*y1", "q^-1*y1*y3 + (s^-1 - s)*(y2 - 1)"),
    ("quadric", "s^-1*y1*y3 + s*y3*y1 + y2^2", "1"),
    ("factor-13", "(s + s^-1)*y1*y3", "(1 - y2)*(1 + q*y2)"),
    ("factor-31", "(s + s^-1)*y3*y1", "(1 - y2)*(1 + q^-1*y2)"),
)

SECOND_COLUMN_QUADRIC = "s*u32*u12 + s^-1*u12*u32 + (u22 - 1)*(u22 + 1)"

# Auxiliary identities for the trace recursion: lhs = sum_k c_k X^k with
# X = (1 + q)^-1 (y2 - 1), coefficients listed from k = 0.
TRACE_PRODUCTS: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("u11*u33", ("1", "q + q^2", "q^3")),
    ("s^-1*u21*u23", ("0", "-(q + 1)", "-q*(q + 1)")),
    ("u31*u13", ("0", "0", "q")),
)

TRACE_P1 = "1 + (q - 1)*(y2 - 1) + (q - 1)^2*(q + 1)^-1*(y2 - 1)^2"

# <f, u_jk> on the generators of U_s(sl2); every pair not listed pairs to zero.
PAIRING_VALUES: dict[tuple[str, str], str] = {
    ("K", "u11"): "q^-1",
    ("K", "u22"): "1",
    ("K", "u33"): "q",
    ("Kinv", "u11"): "q",
    ("Kinv", "u22"): "1",
    ("Kinv", "u33"): "q^-1",
    ("E", "u21"): "w/r",
    ("E", "u32"): "-s*w/r",
    ("F", "u12"): "w/r",
    ("F", "u23"): "-s^-1*w/r",
}
