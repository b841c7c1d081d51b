"""Dimension arithmetic for irreducible representations of Sp(4).

Highest weights are written as (a, b) in fundamental-weight coordinates:
a copies of the first fundamental weight (the 4-dimensional standard
representation) and b of the second (the 5-dimensional one).  The Weyl
dimension formula in type C2 collapses to the closed form

    dim(a, b) = (a+1)(b+1)(a+b+2)(a+2b+3) / 6.

An independent cross-check sums Freudenthal weight multiplicities over
Weyl orbits; :func:`weyl_dim_c2` uses only the closed form, and tests
compare the two.
"""

from __future__ import annotations

from fractions import Fraction


def weyl_dim_c2(a: int, b: int) -> int:
    """Closed-form dimension for highest weight (a, b); both must be >= 0."""
    if not (isinstance(a, int) and isinstance(b, int)) or a < 0 or b < 0:
        raise ValueError("weights must be nonnegative integers")
    numerator = (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3)
    quotient, rem = divmod(numerator, 6)
    if rem:
        raise ArithmeticError("dimension formula did not yield an integer")
    return quotient


# --- Freudenthal cross-check -------------------------------------------
#
# Orthogonal coordinates: simple roots a1 = (1, -1), a2 = (0, 2);
# positive roots below; rho = (2, 1).  A highest weight (a, b) in
# fundamental coordinates is (a + b, b) in orthogonal coordinates.

_POSITIVE_ROOTS = ((1, -1), (0, 2), (1, 1), (2, 0))
_RHO = (2, 1)


def _dot(x, y):
    return x[0] * y[0] + x[1] * y[1]


def _norm_with_rho(x):
    shifted = (x[0] + _RHO[0], x[1] + _RHO[1])
    return _dot(shifted, shifted)


def _dominant_weights(lam):
    """Dominant integral weights mu <= lam, i.e. lam - mu in the root lattice cone."""
    out = []
    for x in range(lam[0], -1, -1):
        for y in range(min(x, lam[1] + lam[0] - x), -1, -1):
            dx = lam[0] - x
            dy = lam[1] - y
            # lam - mu = n1*(1,-1) + n2*(0,2) needs n1 = dx >= 0 and
            # n2 = (dx + dy)/2 a nonnegative integer
            if (dx + dy) % 2 == 0 and dx + dy >= 0:
                out.append((x, y))
    return sorted(out, key=lambda mu: (lam[0] - mu[0]) + (lam[0] + lam[1] - mu[0] - mu[1]) // 2)


def _orbit_size(mu) -> int:
    x, y = mu
    if x == 0 and y == 0:
        return 1
    if y == 0 or x == y:
        return 4
    return 8


def _dominant_of(nu):
    x, y = abs(nu[0]), abs(nu[1])
    return (max(x, y), min(x, y))


def weight_multiplicity_dim(a: int, b: int) -> int:
    """Dimension by summing Freudenthal multiplicities over Weyl orbits.

    Independent of the closed form: multiplicities are computed by the
    Freudenthal recursion from the highest weight down, then weighted by
    orbit sizes.
    """
    if not (isinstance(a, int) and isinstance(b, int)) or a < 0 or b < 0:
        raise ValueError("weights must be nonnegative integers")
    lam = (a + b, b)
    dominants = _dominant_weights(lam)
    mult: dict[tuple[int, int], Fraction] = {}
    c_lam = _norm_with_rho(lam)
    for mu in dominants:
        if mu == lam:
            mult[mu] = Fraction(1)
            continue
        total = Fraction(0)
        for alpha in _POSITIVE_ROOTS:
            k = 1
            while True:
                nu = (mu[0] + k * alpha[0], mu[1] + k * alpha[1])
                if abs(nu[0]) + abs(nu[1]) > lam[0] + lam[1]:
                    break
                known = mult.get(_dominant_of(nu))
                if known:
                    total += known * _dot(nu, alpha)
                k += 1
        denom = c_lam - _norm_with_rho(mu)
        if denom <= 0:
            raise ArithmeticError(f"Freudenthal denominator not positive at {mu}")
        mult[mu] = 2 * total / denom
    dim = Fraction(0)
    for mu in dominants:
        dim += mult[mu] * _orbit_size(mu)
    if dim.denominator != 1:
        raise ArithmeticError("weight multiplicities did not sum to an integer")
    return int(dim)
