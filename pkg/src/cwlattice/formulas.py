"""Closed-form sizes of the lattice sets, indexed by residues of n mod 6.

Writing n = 6k + i with k >= 0 and 0 <= i <= 5 turns every set size into a
polynomial in k selected by the residue i: degree <= 2 for the planar sets
and degree 3 for the spatial ra components.  The same decomposition drives
the sandwich bounds and ratio limits for the pair census.

Everything is computed in exact arithmetic.  Python integers are unbounded,
so cubic terms can never overflow, and every fractional coefficient (the
halves and eighths below) is applied as a division whose exactness is
checked at runtime; an inexact division raises InternalInconsistencyError
because the counts are integers by construction.

Each polynomial branch is pinned to the enumerations in
:mod:`cwlattice.sets`: the test suite checks size_x(n) == len(enumerate_x(n))
for every n up to 300, which over-determines a degree-3 polynomial per
residue many times over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalInconsistencyError
from .sets import NamedSet


@dataclass(frozen=True)
class ResidueKey:
    """The decomposition n = 6k + i, with the parity of k recorded.

    k_parity is redundant given k but is carried explicitly because it is
    part of the indexing vocabulary of the piecewise formulas.
    """

    k: int
    i: int
    k_parity: str  # "even" or "odd"

    def __post_init__(self):
        if self.k < 0 or not 0 <= self.i <= 5:
            raise DomainError(f"invalid residue key (k={self.k}, i={self.i})")
        expected = "even" if self.k % 2 == 0 else "odd"
        if self.k_parity != expected:
            raise DomainError(f"k_parity {self.k_parity!r} does not match k={self.k}")

    @property
    def n(self) -> int:
        return 6 * self.k + self.i


def residue_decompose(n: int) -> ResidueKey:
    """Split n >= 0 as 6k + i with 0 <= i <= 5."""
    if n < 0:
        raise DomainError(f"residue decomposition needs n >= 0, got {n}")
    k, i = divmod(n, 6)
    return ResidueKey(k=k, i=i, k_parity="even" if k % 2 == 0 else "odd")


def _exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise InternalInconsistencyError(
            f"inexact division {numerator}/{denominator}; a closed-form "
            "table entry must be wrong"
        )
    return q


def _quad(table: dict[int, tuple[int, int, int]], n: int) -> int:
    k, i = divmod(n, 6)
    c2, c1, c0 = table[i]
    return c2 * k * k + c1 * k + c0


def _cubic_over_8(table: dict[int, tuple[int, int, int, int]], n: int) -> int:
    k, i = divmod(n, 6)
    c3, c2, c1, c0 = table[i]
    return _exact_div(c3 * k ** 3 + c2 * k * k + c1 * k + c0, 8)


# ---------------------------------------------------------------------------
# (depth, dim) census sizes
# ---------------------------------------------------------------------------

def size_cwdd_a(n: int) -> int:
    """|cwdd-a|: 2 when n is even or n = 5, else 3; 0 below n = 5."""
    if n < 5:
        return 0
    return 2 if (n % 2 == 0 or n == 5) else 3


def size_cwdd_b(n: int) -> int:
    """|cwdd-b|: with n = 6k + i this is k-1, k, or k+1 for i = 0, 1..4, 5."""
    if n < 5:
        return 0
    k, i = divmod(n, 6)
    if i == 0:
        return k - 1
    return k + 1 if i == 5 else k


# 6k^2 + c1*k + c0 per residue i
_CWDD_C = {
    0: (6, -7, 1),
    1: (6, -5, 0),
    2: (6, -3, -1),
    3: (6, -1, -1),
    4: (6, 1, -1),
    5: (6, 3, -1),
}


def size_cwdd_c(n: int) -> int:
    """|cwdd-c|: zero through n = 5, then a quadratic in k per residue.

    Counting b for fixed a: ceil((n-a)/2) choices while 3a <= n, and
    n - 2a choices for larger a; summing over a gives the table.
    """
    if n <= 5:
        return 0
    return _quad(_CWDD_C, n)


_CWDD_TOTAL = {
    0: (6, -6, 2),
    1: (6, -4, 3),
    2: (6, -2, 1),
    3: (6, 0, 2),
    4: (6, 2, 1),
    5: (6, 4, 3),
}


def size_cwdd(n: int) -> int:
    """|cwdd|: 0 below 5, 2 at n = 5, then |A| + |B| + |C| folded per residue.

    The components only overlap at n = 5 (in the single point (2, 2)),
    which is why that value is special-cased rather than summed.
    """
    if n < 5:
        return 0
    if n == 5:
        return 2
    return _quad(_CWDD_TOTAL, n)


# ---------------------------------------------------------------------------
# (depth, reg, dim, deg h) census sizes
# ---------------------------------------------------------------------------

def size_ra_a(n: int) -> int:
    """|ra-a|: same count as |cwdd-a| (the tuples project onto those pairs)."""
    return size_cwdd_a(n)


# (3k^2 + c1*k + c0) / 2 per residue i
_RA_B = {
    0: (3, -3, 0),
    1: (3, 1, -2),
    2: (3, -1, 0),
    3: (3, 3, -2),
    4: (3, 1, 0),
    5: (3, 5, 0),
}


def size_ra_b(n: int) -> int:
    """|ra-b|: a half-integer quadratic per residue.

    For fixed a the valid d fill ((n-a)/2, floor((n-1)/2)] while 3a < n + 2
    and [a, floor((n-1)/2)] beyond; the two range-length formulas agree at
    the crossover, so the split introduces no tie corrections.
    """
    if n < 5:
        return 0
    k, i = divmod(n, 6)
    c2, c1, c0 = _RA_B[i]
    return _exact_div(c2 * k * k + c1 * k + c0, 2)


# 3k^2 + c1*k + c0 per residue i
_RA_C = {
    0: (3, 0, -3),
    1: (3, 1, -3),
    2: (3, 2, -3),
    3: (3, 3, -2),
    4: (3, 4, -2),
    5: (3, 5, -1),
}


def size_ra_c(n: int) -> int:
    """|ra-c|: zero through n = 5, then a quadratic in k per residue.

    For fixed a >= 3 the valid d fill (max(a, n - 2a), n - a], giving a
    choices while 3a < n + 1 and n - 2a choices beyond.  When 3a = n + 1
    exactly (possible only for n = 2 mod 3, i.e. residues 2 and 5) the two
    bounds tie and the count at that a is a - 1, not a; the residue-2 and
    residue-5 constant terms carry that correction.
    """
    if n <= 5:
        return 0
    return _quad(_RA_C, n)


# (24k^3 + c2*k^2 + c1*k + c0) / 8 per residue i
_RA_D = {
    0: (24, -72, 72, -24),
    1: (24, -60, 44, -8),
    2: (24, -48, 32, -8),
    3: (24, -36, 12, 0),
    4: (24, -24, 8, 0),
    5: (24, -12, -4, 0),
}


def size_ra_d(n: int) -> int:
    """|ra-d|: a cubic in k per residue (the residue-0 branch is 3(k-1)^3).

    Derivation sketch: for fixed a and r the valid d fill the range
    max(r + 1, n - a - r + 2) .. n - r - 1, of length a - 2 while
    2r <= n - a + 1 and n - 2r - 1 beyond; both the r-sum and the outer
    a-sum must be clipped to r >= a + 1 before telescoping, and after that
    clipping the total depends only on the residue of n mod 6, not on the
    parity of k.  The branches are verified against the enumeration for
    every n <= 300 in the tests.
    """
    if n < 5:
        return 0
    return _cubic_over_8(_RA_D, n)


_RA_TOTAL = {
    0: (24, -36, 60, -32),
    1: (24, -24, 56, -16),
    2: (24, -12, 44, -16),
    3: (24, 0, 48, 0),
    4: (24, 12, 44, 0),
    5: (24, 24, 56, 16),
}


def size_ra(n: int) -> int:
    """|ra|: the four components are pairwise disjoint, so this is their sum,
    folded into one cubic per residue.  The residue-5 branch already yields
    the correct value 2 at n = 5 (k = 0)."""
    if n < 5:
        return 0
    return _cubic_over_8(_RA_TOTAL, n)


# ---------------------------------------------------------------------------
# bounding polytope sizes
# ---------------------------------------------------------------------------

# (27k^2 + c1*k + c0) / 2 per residue i
_BETA = {
    0: (27, -9, 0),
    1: (27, -3, 0),
    2: (27, 9, 0),
    3: (27, 15, 2),
    4: (27, 27, 6),
    5: (27, 33, 10),
}


def _beta_value(n: int) -> int:
    k, i = divmod(n, 6)
    c2, c1, c0 = _BETA[i]
    return _exact_div(c2 * k * k + c1 * k + c0, 2)


def size_beta(n: int) -> int:
    """|beta| = sum over 1 <= a <= floor(n/2) of (n - a - 1).  n >= 4."""
    if n < 4:
        raise DomainError(f"beta is defined only for n >= 4, got {n}")
    return _beta_value(n)


def size_c_minus(n: int) -> int:
    """|c-minus| = |beta| + 1: the apex (1, n-1) always lies outside the slab."""
    if n < 3:
        raise DomainError(f"c-minus is defined only for n >= 3, got {n}")
    return _beta_value(n) + 1


def size_c_plus(n: int) -> int:
    """|c-plus| = n(n-1)/2, the full triangle 1 <= a <= b <= n-1."""
    if n < 3:
        raise DomainError(f"c-plus is defined only for n >= 3, got {n}")
    return _exact_div(n * (n - 1), 2)


SIZE_BY_SET = {
    NamedSet.CWDD_A: size_cwdd_a,
    NamedSet.CWDD_B: size_cwdd_b,
    NamedSet.CWDD_C: size_cwdd_c,
    NamedSet.CWDD: size_cwdd,
    NamedSet.RA_A: size_ra_a,
    NamedSet.RA_B: size_ra_b,
    NamedSet.RA_C: size_ra_c,
    NamedSet.RA_D: size_ra_d,
    NamedSet.RA: size_ra,
    NamedSet.C_MINUS: size_c_minus,
    NamedSet.C_PLUS: size_c_plus,
    NamedSet.BETA: size_beta,
}


# ---------------------------------------------------------------------------
# sandwich bounds, ratios, breakdowns
# ---------------------------------------------------------------------------

def sandwich_bounds_cwdd(n: int) -> tuple[Fraction, Fraction]:
    """Exact rational envelope for |cwdd|(n) when n > 5.

    |cwdd|(n) differs from (n-3)^2/6 by a residue-dependent constant that
    ranges over {1/2, 5/6, 2, 7/3}, hence

        (n-3)^2/6 + 1/2  <=  |cwdd|(n)  <=  (n-3)^2/6 + 7/3.

    Both ends are attained (residue 0 hits the lower bound, residues 1 and
    5 the upper).
    """
    if n <= 5:
        raise DomainError(f"sandwich bounds are defined only for n > 5, got {n}")
    base = Fraction((n - 3) ** 2, 6)
    return base + Fraction(1, 2), base + Fraction(7, 3)


@dataclass(frozen=True)
class RatioReport:
    """Exact rationals comparing the pair census to its bounding polytopes."""

    n: int
    cwdd_over_cplus: Fraction
    cwdd_over_cminus: Fraction
    cwdd_over_nsq: Fraction


def ratio_report(n: int) -> RatioReport:
    """|cwdd|/|c-plus|, |cwdd|/|c-minus| and |cwdd|/n^2 as exact fractions.

    As n grows the first two tend to the envelope ends 1/3 and 4/9 and the
    third tends to 1/6.  Callers render decimals; nothing is rounded here.
    """
    if n <= 5:
        raise DomainError(f"ratio report is defined only for n > 5, got {n}")
    cw = size_cwdd(n)
    return RatioReport(
        n=n,
        cwdd_over_cplus=Fraction(cw, size_c_plus(n)),
        cwdd_over_cminus=Fraction(cw, size_c_minus(n)),
        cwdd_over_nsq=Fraction(cw, n * n),
    )


@dataclass(frozen=True)
class SizeBreakdown:
    """Component sizes of a census union plus the union total.

    Invariant: total = sum(components) - overlap, where overlap is nonzero
    only for the pair census at n = 5.
    """

    n: int
    components: dict[str, int]
    overlap: int
    total: int

    def __post_init__(self):
        if any(v < 0 for v in self.components.values()) or self.total < 0:
            raise InternalInconsistencyError(f"negative size in breakdown at n={self.n}")
        if self.total != sum(self.components.values()) - self.overlap:
            raise InternalInconsistencyError(
                f"breakdown at n={self.n} is not additive: {self.components} "
                f"with overlap {self.overlap} vs total {self.total}"
            )


def cwdd_breakdown(n: int) -> SizeBreakdown:
    """Per-component sizes of the pair census; additivity is re-checked."""
    return SizeBreakdown(
        n=n,
        components={
            NamedSet.CWDD_A.value: size_cwdd_a(n),
            NamedSet.CWDD_B.value: size_cwdd_b(n),
            NamedSet.CWDD_C.value: size_cwdd_c(n),
        },
        overlap=1 if n == 5 else 0,
        total=size_cwdd(n),
    )


def ra_breakdown(n: int) -> SizeBreakdown:
    """Per-component sizes of the tuple census; components never overlap."""
    return SizeBreakdown(
        n=n,
        components={
            NamedSet.RA_A.value: size_ra_a(n),
            NamedSet.RA_B.value: size_ra_b(n),
            NamedSet.RA_C.value: size_ra_c(n),
            NamedSet.RA_D.value: size_ra_d(n),
        },
        overlap=0,
        total=size_ra(n),
    )


__all__ = [
    "ResidueKey",
    "residue_decompose",
    "size_cwdd_a",
    "size_cwdd_b",
    "size_cwdd_c",
    "size_cwdd",
    "size_ra_a",
    "size_ra_b",
    "size_ra_c",
    "size_ra_d",
    "size_ra",
    "size_beta",
    "size_c_minus",
    "size_c_plus",
    "SIZE_BY_SET",
    "sandwich_bounds_cwdd",
    "RatioReport",
    "ratio_report",
    "SizeBreakdown",
    "cwdd_breakdown",
    "ra_breakdown",
]
