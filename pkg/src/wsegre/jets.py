"""Dimension bookkeeping for jet-differential algebras.

``jet_rank`` counts the rank of the degree-m graded piece of the order-k
jet algebra on an n-fold.  ``boundary_jet_sections`` evaluates, exactly, the
number of independent sections of the graded boundary quotient that separates
logarithmic jet differentials from standard ones: an n-fold compactified by a
disjoint union of abelian hypersurfaces with ample conormal bundle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import sum_nondecreasing, weighted_partitions


@dataclass(frozen=True)
class BoundaryData:
    """Boundary of a compactified n-fold: ``neg_dn_abs`` is the positive
    number -(-D)^n for the boundary divisor D, ``components`` the number of
    disjoint abelian components (so the structure sheaf has that many
    sections)."""

    n: int
    neg_dn_abs: Fraction
    components: int = 1

    def __post_init__(self):
        object.__setattr__(self, "neg_dn_abs", Fraction(self.neg_dn_abs))
        if self.n < 2:
            raise ValueError("boundary data needs n >= 2")
        if self.neg_dn_abs <= 0:
            raise ValueError("-(-D)^n must be positive")
        if self.components < 1:
            raise ValueError("components must be >= 1")


def jet_rank(n: int, k: int, m: int) -> int:
    """Rank of the degree-m piece of the order-k jet algebra on an n-fold.

    Sum over (l_1..l_k) with sum_i i*l_i = m of prod_i C(l_i + n - 1, n - 1),
    the l_i-th symmetric powers of an n-dimensional cotangent space.

    >>> jet_rank(1, 2, 4)
    3
    """
    if n < 1 or k < 1 or m < 0:
        raise ValueError("need n >= 1, k >= 1, m >= 0")
    total = 0
    for tup in weighted_partitions(k, m):
        prod = 1
        for l in tup:
            prod *= math.comb(l + n - 1, n - 1)
        total += prod
    return total


@lru_cache(maxsize=None)
def _rank_profile(n: int, k: int, m_max: int) -> tuple[int, ...]:
    """jet_rank(n, k, m) for all m = 0..m_max, by one pass of the generating
    function prod_{t=1..k} (1 - y^t)^(-n)."""
    profile = [0] * (m_max + 1)
    profile[0] = 1
    for t in range(1, k + 1):
        new = [0] * (m_max + 1)
        for x in range(m_max + 1):
            c = profile[x]
            if c == 0:
                continue
            l = 0
            while x + t * l <= m_max:
                new[x + t * l] += c * math.comb(l + n - 1, n - 1)
                l += 1
        profile = new
    return tuple(profile)


def conormal_power_sections(s: int, boundary: BoundaryData) -> Fraction:
    """Sections of the s-th tensor power of the conormal bundle on the
    boundary: the component count for s = 0, else the Euler characteristic
    s^(n-1)/(n-1)! * [-(-D)^n] (vanishing in higher degree).

    >>> conormal_power_sections(3, BoundaryData(3, Fraction(1)))
    Fraction(9, 2)
    """
    if s < 0:
        raise ValueError("tensor power must be >= 0")
    if s == 0:
        return Fraction(boundary.components)
    n = boundary.n
    return Fraction(s ** (n - 1), math.factorial(n - 1)) * boundary.neg_dn_abs


def boundary_jet_sections(k: int, m: int, boundary: BoundaryData) -> Fraction:
    """Exact section count of the graded boundary quotient in order k,
    degree m.

    The graded module splits over r = 0..m into a conormal-power block (jets
    transverse to the boundary) tensored with the degree-(m-r) jet algebra of
    the boundary itself.  For the block at r, every tuple (j_1..j_k) with
    sum_i i*j_i = r contributes, for each index i with j_i >= 1, the conormal
    powers j_1+...+j_{i-1}+s for s = 0..j_i-1.

    Only the power-0 layer sees the component count; all other layers are
    pure conormal powers, so the whole computation reduces to two integer
    convolutions against the cached boundary rank profile.
    """
    if k < 1 or m < 0:
        raise ValueError("need k >= 1, m >= 0")
    n = boundary.n
    # prefix[x] = sum_{t=1..x} t^(n-1); prefix[0] = 0
    prefix = [0] * (m + 1)
    for t in range(1, m + 1):
        prefix[t] = prefix[t - 1] + t ** (n - 1)

    profile = _rank_profile(n - 1, k, m)
    zero_layers = 0   # multiplies components
    power_layers = 0  # multiplies neg_dn_abs/(n-1)!
    for r in range(m + 1):
        count_r = 0
        powersum_r = 0
        for tup in weighted_partitions(k, r):
            p = 0
            for j in tup:
                if j >= 1:
                    if p == 0:
                        count_r += 1
                        powersum_r += prefix[j - 1]
                    else:
                        powersum_r += prefix[p + j - 1] - prefix[p - 1]
                    p += j
        zero_layers += count_r * profile[m - r]
        power_layers += powersum_r * profile[m - r]
    return (
        boundary.components * zero_layers
        + Fraction(power_layers, math.factorial(n - 1)) * boundary.neg_dn_abs
    )


def boundary_coeff(n: int, k: int) -> Fraction:
    """Leading coefficient of the boundary section count, normalized by
    m^(n+nk-1)/(n+nk-1)! and by -(-D)^n: sum_nondecreasing(n, k)/(k!)^n.

    >>> boundary_coeff(2, 2)
    Fraction(7, 16)
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2, k >= 1")
    return sum_nondecreasing(n, k) / Fraction(math.factorial(k)) ** n
