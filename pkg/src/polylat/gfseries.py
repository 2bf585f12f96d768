"""Dense integer polynomials and rational generating functions.

A polynomial is a tuple of ints indexed by exponent, trimmed of trailing
zeros (the zero polynomial is the empty tuple). A rational generating
function num/den keeps its denominator normalized to constant term 1, so
Taylor coefficients come out of the induced linear recurrence

    c_n = num_n - sum_{i>=1} den_i * c_{n-i}

as exact integers; no rational arithmetic is ever involved.

Constructors are provided for every series the toolkit studies:

    dcc_width(k)   directed column-convex polyominoes with k columns, by area
    S_k(k)         directed plateau polycubes of width k, by lateral area
    S()            all directed plateau polycubes, by lateral area
    C(k)           column-convex polyominoes with k+1 columns, by area
    R(k)           plateau polycubes of width k, by lateral area
"""
from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import antidiagonal

Poly = tuple[int, ...]


def poly_trim(coeffs) -> Poly:
    """Canonical form: drop trailing zero coefficients."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_add(a, b) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_sub(a, b) -> Poly:
    return poly_add(a, tuple(-c for c in b))


def poly_mul(a, b) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def poly_pow(a, e: int) -> Poly:
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    result: Poly = (1,)
    for _ in range(e):
        result = poly_mul(result, a)
    return result


def monomial(e: int, c: int = 1) -> Poly:
    """c * t^e as a polynomial."""
    return poly_trim((0,) * e + (c,))


def one_minus_t_pow(e: int) -> Poly:
    """(1 - t)^e."""
    return poly_pow((1, -1), e)


@dataclass(frozen=True)
class RationalGF:
    """num/den with integer coefficients; den normalized to constant term 1."""

    num: Poly
    den: Poly

    def __post_init__(self):
        num = poly_trim(self.num)
        den = poly_trim(self.den)
        if not den or den[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")
        if den[0] < 0:
            num = tuple(-c for c in num)
            den = tuple(-c for c in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)


ZERO_GF = RationalGF((), (1,))


def gf_coeffs(gf: RationalGF, upto: int) -> list[int]:
    """First upto+1 Taylor coefficients of gf, by the denominator recurrence.

    Exact integers throughout; requires the normalized denominator to have
    constant term exactly 1 (not merely nonzero).
    """
    if upto < 0:
        raise ValueError(f"upto must be >= 0, got {upto}")
    num, den = gf.num, gf.den
    if den[0] != 1:
        raise ValueError(f"denominator constant term must be 1, got {den[0]}")
    coeffs: list[int] = []
    for n in range(upto + 1):
        c = num[n] if n < len(num) else 0
        for i in range(1, min(n, len(den) - 1) + 1):
            c -= den[i] * coeffs[n - i]
        coeffs.append(c)
    return coeffs


def gf_coeff(gf: RationalGF, n: int) -> int:
    """Single Taylor coefficient [t^n] gf (0 for negative n)."""
    if n < 0:
        return 0
    return gf_coeffs(gf, n)[n]


def gf_dcc_width(k: int) -> RationalGF:
    """t^k / (1-t)^(2k-1): directed column-convex polyominoes with k columns,
    counted by area."""
    if k < 1:
        raise ValueError(f"width must be >= 1, got {k}")
    return RationalGF(monomial(k), one_minus_t_pow(2 * k - 1))


def gf_S_k(k: int) -> RationalGF:
    """t^(2k) / (1-t)^(4k-2): directed plateau polycubes of width k, counted
    by lateral area. Width 0 is the zero series by convention."""
    if k < 0:
        raise ValueError(f"width must be >= 0, got {k}")
    if k == 0:
        return ZERO_GF
    return RationalGF(monomial(2 * k), one_minus_t_pow(4 * k - 2))


def gf_S() -> RationalGF:
    """t^2 (1-t)^2 / ((1-t)^4 - t^2): all directed plateau polycubes, counted
    by lateral area (the width variable of the bivariate series set to 1)."""
    num = poly_mul(monomial(2), one_minus_t_pow(2))
    den = poly_sub(one_minus_t_pow(4), monomial(2))
    return RationalGF(num, den)


def gf_S_xt_coeff(k: int, n: int) -> int:
    """Coefficient of x^k t^n in the bivariate series
    x t^2 (1-t)^2 / ((1-t)^4 - x t^2).

    Expanding the geometric series in x, term k is
    t^(2k) (1-t)^2 / (1-t)^(4k); the t^n coefficient of that term is
    extracted directly (without cancelling the common (1-t)^2 factor,
    which keeps this an independent route to the width-k numbers).
    """
    if k < 1:
        raise ValueError(f"width must be >= 1, got {k}")
    term = RationalGF(poly_mul(monomial(2 * k), one_minus_t_pow(2)), one_minus_t_pow(4 * k))
    return gf_coeff(term, n)


def gf_C(k: int) -> RationalGF:
    """p^(k+1) / (1-p)^(2k+1) * sum_{i=0..k} D(k-i, i) p^i: column-convex
    polyominoes with k+1 columns, counted by area.

    The numerator coefficients are the k-th anti-diagonal of the Delannoy
    array."""
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    num = poly_mul(monomial(k + 1), poly_trim(antidiagonal(k)))
    return RationalGF(num, one_minus_t_pow(2 * k + 1))


def gf_R(k: int) -> RationalGF:
    """C_(k-1)^2: plateau polycubes of width k, counted by lateral area.

    The square is formed literally (numerator and denominator squared); its
    coefficients are the Cauchy self-convolution of the width-k
    column-convex counts."""
    if k < 1:
        raise ValueError(f"width must be >= 1, got {k}")
    c = gf_C(k - 1)
    return RationalGF(poly_mul(c.num, c.num), poly_mul(c.den, c.den))
