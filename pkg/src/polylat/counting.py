"""Formula-based counters for the four enumerated families.

Families and their size parameters:

    dcc       directed column-convex polyominoes, by area n
    cc        column-convex polyominoes, by area n
    dplateau  directed plateau polycubes, by lateral area m
    plateau   plateau polycubes, by lateral area m

Each family has at least two independent routes (closed form, convolution,
generating function); the brute-force geometric route lives in the oracle
module. Out-of-support inputs return 0 rather than raising, because the
convolutions range freely and rely on vanishing terms. Only structurally
meaningless arguments (width < 1, unknown family) raise.

The triple-binomial formula published for the column-convex counts
(alpha_lemma below) does not reproduce the published table of first values;
it is kept verbatim so the disagreement can be demonstrated, while the
generating-function route (count_cc) is the authority everywhere else.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import binomial
from .gfseries import gf_C, gf_R, gf_coeffs
from .reference_tables import published_polynomial

FAMILIES = ("dcc", "cc", "dplateau", "plateau")

# Families whose size parameter is an area n (2D) vs a lateral area m (3D).
AREA_FAMILIES = ("dcc", "cc")
LATERAL_FAMILIES = ("dplateau", "plateau")


def _check_family(family: str) -> str:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
    return family


def _check_width(k: int) -> int:
    if k < 1:
        raise ValueError(f"width must be >= 1, got {k}")
    return k


def count_dcc(k: int, n: int) -> int:
    """Directed column-convex polyominoes with k columns and area n:
    C(n+k-2, n-k). Zero when n < k."""
    _check_width(k)
    return binomial(n + k - 2, n - k)


def s_conv(k: int, n: int) -> int:
    """Directed plateau polycubes of width k and lateral area n, by the
    convolution over the two projection areas:
    sum_{i=k..n-k} C(i+k-2, i-k) * C(n-i+k-2, n-i-k)."""
    _check_width(k)
    return sum(count_dcc(k, i) * count_dcc(k, n - i) for i in range(k, n - k + 1))


def s_closed(k: int, n: int) -> int:
    """Directed plateau polycubes of width k and lateral area n, closed form:
    C(n+2k-3, n-2k). Zero when n < 2k."""
    _check_width(k)
    return binomial(n + 2 * k - 3, n - 2 * k)


def alpha_lemma(k: int, u: int) -> int:
    """The published triple-binomial expression for column-convex polyominoes
    with k columns and area u, evaluated verbatim:

        sum_{i,j>=0} C(k-i-1, i) * C(2k-j-2, j) * C(k-2i-1, u-k-i-j)

    This is NOT the authoritative count: it disagrees with the published
    table of first values (already at k=2, u=3 it gives 2 where the table,
    the generating function and the geometric enumeration all give 4). Use
    count_cc for real counting; this function exists to document the
    disagreement."""
    _check_width(k)
    total = 0
    i = 0
    while binomial(k - i - 1, i) != 0:
        j = 0
        while binomial(2 * k - j - 2, j) != 0:
            total += (
                binomial(k - i - 1, i)
                * binomial(2 * k - j - 2, j)
                * binomial(k - 2 * i - 1, u - k - i - j)
            )
            j += 1
        i += 1
    return total


_SERIES_CACHE: dict[tuple[str, int], list[int]] = {}


def _cached_coeff(kind: str, k: int, gf_factory, n: int) -> int:
    """Coefficient [t^n] of a per-width series, with the expanded prefix
    cached per process. Recomputation on extension is idempotent, so
    concurrent use is safe."""
    if n < 0:
        return 0
    coeffs = _SERIES_CACHE.get((kind, k))
    if coeffs is None or n >= len(coeffs):
        upto = max(n, 2 * (len(coeffs) if coeffs else 0), 32)
        coeffs = gf_coeffs(gf_factory(k), upto)
        _SERIES_CACHE[(kind, k)] = coeffs
    return coeffs[n]


def count_cc(k: int, n: int) -> int:
    """Column-convex polyominoes with k columns and area n, from the
    width-indexed generating function (the authoritative route).
    Zero when n < k."""
    _check_width(k)
    return _cached_coeff("C", k - 1, gf_C, n)


def r_conv(k: int, m: int) -> int:
    """Plateau polycubes of width k and lateral area m, by the convolution
    over the two projection areas: sum_{i=k..m-k} cc(k,i) * cc(k,m-i)."""
    _check_width(k)
    return sum(count_cc(k, i) * count_cc(k, m - i) for i in range(k, m - k + 1))


def r_gf(k: int, m: int) -> int:
    """Plateau polycubes of width k and lateral area m, as the p^m
    coefficient of the squared column-convex generating function."""
    _check_width(k)
    return _cached_coeff("R", k, gf_R, m)


_SPECIAL_MIN_K = (1, 2, 3)


def h_special(k: int, offset: int) -> int:
    """Column-convex special values near minimal area:

        offset 0: h_{k,k}   = 1            (k >= 1)
        offset 1: h_{k,k+1} = 4k - 4       (k >= 2)
        offset 2: h_{k,k+2} = 8k^2-19k+16  (k >= 3)
    """
    if offset not in (0, 1, 2):
        raise ValueError(f"offset must be 0, 1 or 2, got {offset}")
    if k < _SPECIAL_MIN_K[offset]:
        raise ValueError(f"offset {offset} requires k >= {_SPECIAL_MIN_K[offset]}, got {k}")
    if offset == 0:
        return 1
    if offset == 1:
        return 4 * k - 4
    return 8 * k * k - 19 * k + 16


def r_special(k: int, offset: int) -> int:
    """Plateau special values near minimal lateral area:

        offset 0: r_{k,2k}   = 1             (k >= 1)
        offset 1: r_{k,2k+1} = 8k - 8        (k >= 2)
        offset 2: r_{k,2k+2} = 32k^2-70k+48  (k >= 3)
    """
    if offset not in (0, 1, 2):
        raise ValueError(f"offset must be 0, 1 or 2, got {offset}")
    if k < _SPECIAL_MIN_K[offset]:
        raise ValueError(f"offset {offset} requires k >= {_SPECIAL_MIN_K[offset]}, got {k}")
    if offset == 0:
        return 1
    if offset == 1:
        return 8 * k - 8
    return 32 * k * k - 70 * k + 48


def corollary_poly(family: str, offset: int, k) -> Fraction:
    """Exact evaluation of the published offset-3..6 polynomial at k.

    family "cc" gives h_{k,k+offset}, family "plateau" gives r_{k,2k+offset}
    (the published plateau subscripts k+offset are read as 2k+offset; the
    reading is confirmed by offset 3 at k=4 evaluating to 2152, the table's
    entry at width 4, lateral area 11)."""
    if family not in ("cc", "plateau"):
        raise ValueError(f"family must be 'cc' or 'plateau', got {family!r}")
    if offset not in (3, 4, 5, 6):
        raise ValueError(f"offset must be in 3..6, got {offset}")
    coeffs = published_polynomial(family, offset)
    x = Fraction(k)
    return sum((c * x**d for d, c in enumerate(coeffs)), Fraction(0))


@dataclass
class FamilyTable:
    """Counts of one family indexed by (width k, size): a full rectangle of
    values, zero outside the family's support."""

    family: str
    k_max: int
    size_max: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def size_min(self) -> int:
        return 1 if self.family in AREA_FAMILIES else 2

    def value(self, k: int, size: int) -> int:
        return self.entries.get((k, size), 0)

    def sizes(self) -> range:
        return range(self.size_min, self.size_max + 1)

    def row(self, size: int) -> list[int]:
        return [self.value(k, size) for k in range(1, self.k_max + 1)]


_AUTHORITATIVE = {
    "dcc": count_dcc,
    "cc": count_cc,
    "dplateau": s_closed,
    "plateau": r_gf,
}


def build_table(family: str, k_max: int, size_max: int) -> FamilyTable:
    """Populate a FamilyTable with the authoritative per-family method
    (dcc: closed form; cc: generating function; dplateau: closed form;
    plateau: generating function). Deterministic regardless of evaluation
    order, since every cell is a pure function of (k, size)."""
    _check_family(family)
    if k_max < 1 or size_max < 1:
        raise ValueError(f"bounds must be >= 1, got k_max={k_max}, size_max={size_max}")
    counter = _AUTHORITATIVE[family]
    table = FamilyTable(family, k_max, size_max)
    for k in range(1, k_max + 1):
        for size in table.sizes():
            table.entries[(k, size)] = counter(k, size)
    return table
