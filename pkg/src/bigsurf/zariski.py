"""The Zariski decomposition -K = P + N for a family of blown-up
Hirzebruch surfaces.

The family: a degree-n Hirzebruch surface (n >= 2) with k named fibers,
3 <= k <= n+1, carrying a_i blown-up points each (away from the negative
section), subject to sum(1/a_i) < k - 2.  On these surfaces -K is big but
not nef, and its positive and negative parts have exact rational
coefficients that the decomposition routine recomputes and certifies
against the lattice pairing.  The same coefficient c decides log
canonicity of the contracted pair via 2 - c <= 1, equivalently
sum(1/a_i) >= k - 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .linalg import is_negative_definite
from .picard import DivisorClass, blowup_hirzebruch, fiber_strict

__all__ = [
    "FamilyParams",
    "LogCanonicalResult",
    "ZariskiChecks",
    "ZariskiReport",
    "log_canonical_test",
    "zariski_decompose",
]


def _validate_shape(n: int, k: int, a: Sequence[int]) -> None:
    if n < 2:
        raise DomainError("n must satisfy n >= 2")
    if not 3 <= k <= n + 1:
        raise DomainError("k must satisfy 3 <= k <= n + 1")
    if len(a) != k:
        raise DomainError("a must list exactly k multiplicities")
    if any(ai < 1 for ai in a):
        raise DomainError("every a_j must satisfy a_j >= 1")


@dataclass(frozen=True)
class FamilyParams:
    """Parameters (n, k, a_1..a_k) of one member of the family."""

    n: int
    k: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        _validate_shape(self.n, self.k, self.a)
        if self.reciprocal_sum >= self.k - 2:
            raise DomainError("a must satisfy sum(1/a_j) < k - 2")

    @property
    def reciprocal_sum(self) -> Fraction:
        return sum(Fraction(1, ai) for ai in self.a)


@dataclass(frozen=True)
class ZariskiChecks:
    """Certificates recomputed from the lattice pairing, never assumed."""

    p_dot_sigma_zero: bool
    p_dot_fibers_zero: bool
    p_dot_n_zero: bool
    n_effective: bool
    n_support_negative_definite: bool
    sum_is_minus_canonical: bool

    @property
    def all_pass(self) -> bool:
        return all((self.p_dot_sigma_zero, self.p_dot_fibers_zero,
                    self.p_dot_n_zero, self.n_effective,
                    self.n_support_negative_definite, self.sum_is_minus_canonical))


@dataclass(frozen=True)
class ZariskiReport:
    params: FamilyParams
    positive_part: DivisorClass
    negative_part: DivisorClass
    p_squared: Fraction
    checks: ZariskiChecks
    lc_coefficient: Fraction
    log_canonical: bool


def zariski_decompose(params: FamilyParams) -> ZariskiReport:
    """Compute P and N with exact coefficients and certify the decomposition.

    P = c*sigma + (n+2-k)*F + sum(c/a_i * F_i) with c = (n+2-k)/(n - sum 1/a_j),
    N = (2-c)*sigma + sum((1 - c/a_i) * F_i), where F_i is the strict fiber
    transform.  Every reported check is evaluated against the actual
    intersection form; the negative-definiteness check runs on the Gram
    matrix of the components with strictly positive coefficient in N.
    """
    n, k, a = params.n, params.k, params.a
    lattice = blowup_hirzebruch(n, [(ai, False) for ai in a])
    sigma = lattice.basis_class("sigma")
    fiber = lattice.basis_class("F")
    strict = [fiber_strict(lattice, i) for i in range(1, k + 1)]

    s = params.reciprocal_sum
    c = Fraction(n + 2 - k) / (n - s)
    p = c * sigma + (n + 2 - k) * fiber
    neg = (2 - c) * sigma
    for ai, fi in zip(a, strict):
        p = p + (c / ai) * fi
        neg = neg + (1 - c / ai) * fi

    p_squared = lattice.pair(p, p)
    assert p_squared == Fraction((n + 2 - k) ** 2) / (n - s)

    support = []
    if 2 - c > 0:
        support.append(sigma)
    support.extend(fi for ai, fi in zip(a, strict) if 1 - c / ai > 0)
    support_gram = [[lattice.pair(u, v) for v in support] for u in support]

    checks = ZariskiChecks(
        p_dot_sigma_zero=lattice.pair(p, sigma) == 0,
        p_dot_fibers_zero=all(lattice.pair(p, fi) == 0 for fi in strict),
        p_dot_n_zero=lattice.pair(p, neg) == 0,
        n_effective=2 - c >= 0 and all(1 - c / ai >= 0 for ai in a),
        n_support_negative_definite=is_negative_definite(support_gram),
        sum_is_minus_canonical=(p + neg) == lattice.anticanonical,
    )
    return ZariskiReport(params, p, neg, p_squared, checks,
                         lc_coefficient=2 - c, log_canonical=s >= k - 2)


@dataclass(frozen=True)
class LogCanonicalResult:
    """log_canonical is decided by sum(1/a_j) >= k - 2; the coefficient
    2 - (n+2-k)/(n - sum 1/a_j) is None when its denominator vanishes."""

    log_canonical: bool
    coefficient: Fraction | None


def log_canonical_test(n: int, k: int, a: Sequence[int]) -> LogCanonicalResult:
    """Log-canonicity criterion, available outside the family's defining
    inequality so that both outcomes are reachable."""
    a = tuple(a)
    _validate_shape(n, k, a)
    s = sum(Fraction(1, ai) for ai in a)
    lc = s >= k - 2
    coefficient = None if s == n else 2 - Fraction(n + 2 - k) / (n - s)
    return LogCanonicalResult(lc, coefficient)
