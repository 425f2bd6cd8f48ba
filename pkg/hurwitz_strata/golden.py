"""Reference tables of Q-polynomials, residual polynomials and strata classes."""

from fractions import Fraction
from typing import Dict

from hurwitz_strata.algebra import Polynomial, var
from hurwitz_strata.local_models import DELTA, NORMAL, PSI, SIGMA
from hurwitz_strata.ring import N_SYMBOL, delta, psi, xi

S, P, D, N = var(SIGMA), var(PSI), var(DELTA), var(NORMAL)

# Q_{i-2} with R_i = P_i + Q_{i-2}Δ, keyed by i
PRINTED_Q: Dict[int, Polynomial] = {
    2: Polynomial.const(-1),
    3: 2 * N - 5 * P,
    4: -(6 * N**2 - 15 * N * P + 15 * P**2 - 8 * D),
    5: 24 * N**3 - 62 * N**2 * P + 63 * N * P**2 - 35 * P**3 - 60 * N * D + 84 * P * D,
    6: -(
        120 * N**4 - 322 * N**3 * P + 343 * N**2 * P**2 - 196 * N * P**3 + 70 * P**4
        - 432 * N**2 * D + 812 * N * P * D - 469 * P**2 * D + 180 * D**2
    ),
}

# Residual polynomials of multisingularities over one critical value
PRINTED_RESIDUALS: Dict[str, Polynomial] = {
    '1^2': 2 * (S * P - 3 * S**2 + D),
    '1^1,2^1': -6 * S * (2 * S - P) ** 2 + 6 * D * (3 * P - N),
    '1^3': 8 * S * (15 * S**2 - 13 * S * P + 3 * P**2) - 8 * D * (10 * P - 3 * N),
    '1^1,3^1': (
        -4 * S * (5 * S - 3 * P) * (3 * S - 2 * P) * (2 * S - P)
        + 4 * D * (20 * P**2 - 17 * N * P + 6 * N**2 - 8 * D)
    ),
    '2^2': (
        -3 * S * (2 * S - P) * (20 * S**2 - 25 * S * P + 8 * P**2)
        + 3 * D * (25 * P**2 - 21 * N * P + 8 * N**2 - 12 * D)
    ),
    '1^2,2^1': (
        24 * S * (2 * S - P) * (15 * S**2 - 17 * S * P + 5 * P**2)
        - 24 * D * (20 * P**2 - 15 * N * P + 5 * N**2 - 7 * D)
    ),
    '1^4': (
        -48 * S * (105 * S**3 - 160 * S**2 * P + 84 * S * P**2 - 15 * P**3)
        + 48 * D * (70 * P**2 - 48 * N * P + 15 * N**2 - 21 * D)
    ),
}

# Residual polynomials of multimultisingularities over two critical values
PRINTED_PAIR_RESIDUALS: Dict[str, Polynomial] = {
    '2^1;2^1': -2 * S * (2 * S - P) * (5 * S - 3 * P) + D * (14 * P - 5 * N),
    '2^1;1^2': 6 * S * (2 * S - P) * (5 * S - 2 * P) - 6 * D * (7 * P - 2 * N),
    '1^2;1^2': -6 * S * (30 * S**2 - 21 * P * S + 4 * P**2) + 2 * D * (57 * P - 14 * N),
}

x0, x1, x2 = xi(0), xi(1), xi(2)
d00, d10 = delta(0, 0), delta(1, 0)
ps = psi()
n = var(N_SYMBOL)
half = Fraction(1, 2)

# Strata classes for arbitrary genus, in ψ, ξ_k and δ_{k,l}
GENERAL_STRATA: Dict[str, Polynomial] = {
    '2^1': -ps * x0 + 2 * x1 - d00,
    '1^2': half * ps * x0 * (x0 + 2) - 3 * x1 + d00,
    '3^1': 2 * x0 * ps**2 - 7 * x1 * ps - 5 * d00 * ps + 6 * x2 + 2 * d10,
    '1^1,2^1': (
        -x0 * (x0 + 6) * ps**2 + 2 * (x0 + 12) * x1 * ps + (18 - x0) * d00 * ps
        - 24 * x2 - 6 * d10
    ),
    '1^3': (
        Fraction(1, 6) * x0 * (x0**2 + 6 * x0 + 24) * ps**2
        - Fraction(1, 3) * (9 * x0 + 52) * x1 * ps
        + Fraction(1, 3) * (3 * x0 - 40) * d00 * ps + 20 * x2 + 4 * d10
    ),
    '2^1;2^1': (
        half * (x0 - 6) * x0 * ps**2 - (2 * x0 - 11) * x1 * ps + half * d00**2
        + 2 * x1**2 - 10 * x2 + (x0 + 7) * d00 * ps - 2 * x1 * d00 - Fraction(5, 2) * d10
    ),
    '2^1;1^2': (
        -half * x0 * (x0**2 - 2 * x0 - 12) * ps**2 + (x0**2 + x0 - 27) * x1 * ps
        - d00**2 - 6 * x1**2 + 30 * x2 - half * (x0**2 + 42) * d00 * ps
        + 5 * x1 * d00 + 6 * d10
    ),
    '1^2;1^2': (
        Fraction(1, 8) * (x0 - 4) * x0 * (x0**2 + 4 * x0 + 6) * ps**2
        - Fraction(3, 4) * (2 * x0**2 - 4 * x0 - 21) * x1 * ps + half * d00**2
        + Fraction(9, 2) * x1**2 - Fraction(45, 2) * x2
        + Fraction(1, 4) * (2 * x0**2 - 4 * x0 + 57) * d00 * ps
        - 3 * x1 * d00 - Fraction(7, 2) * d10
    ),
}

# The same strata in genus zero
GENUS0_STRATA: Dict[str, Polynomial] = {
    '2^1': 6 * (n - 1) * ps - 3 * d00,
    '1^2': 2 * (n - 6) * (n - 1) * ps + 4 * d00,
    '3^1': -24 * (n - 1) * ps**2 + 2 * d00 * ps + 6 * x2 + 2 * d10,
    '1^1,2^1': 12 * (n - 1) * (n + 6) * ps**2 - 6 * n * d00 * ps - 24 * x2 - 6 * d10,
    '1^3': (
        Fraction(4, 3) * (n - 1) * (n**2 - 17 * n - 30) * ps**2
        + 4 * (2 * n - 1) * d00 * ps + 20 * x2 + 4 * d10
    ),
    '2^1;2^1': (
        2 * (n - 1) * (9 * n + 10) * ps**2 - 2 * (9 * n - 7) * d00 * ps
        + Fraction(9, 2) * d00**2 - 10 * x2 - Fraction(5, 2) * d10
    ),
    '2^1;1^2': (
        12 * (n - 9) * (n - 1) * n * ps**2 - 6 * (n**2 - 13 * n + 11) * d00 * ps
        - 12 * d00**2 + 30 * x2 + 6 * d10
    ),
    '1^2;1^2': (
        (n - 1) * (2 * n**3 - 30 * n**2 + 145 * n - 60) * ps**2
        + half * (16 * n**2 - 144 * n + 125) * d00 * ps
        + 8 * d00**2 - Fraction(45, 2) * x2 - Fraction(7, 2) * d10
    ),
}

STRATA_LABELS = tuple(GENERAL_STRATA)
