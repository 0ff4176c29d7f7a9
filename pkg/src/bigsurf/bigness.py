"""Bigness of the anticanonical class on blow-ups of the plane.

Two independent routes to the same answer:

* a closed-form criterion per configuration case (point counts on a line
  and a conic, or on three lines), carried by an auxiliary class v that is
  orthogonal to every component of the distinguished anticanonical member
  and whose sign of self-intersection decides the question;

* a lattice criterion: a big divisor with support in a curve collection
  exists precisely when the orthogonal complement of the collection is
  negative definite.

`cross_check` and `agreement_sweep` run both and insist they agree.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product

from .errors import DomainError
from .linalg import gram_restrict, integer_kernel, is_negative_definite
from .picard import (
    DivisorClass,
    Generic,
    LineConic,
    PicardLattice,
    PointConfiguration,
    ThreeLines,
    anticanonical_components,
    config_lattice,
)

Vec = tuple[int, ...]


def orthogonal_complement(lattice: PicardLattice,
                          classes: list[DivisorClass]) -> tuple[list[Vec], list[list[int]]]:
    """Saturated integer basis of the common orthogonal of the given integral
    classes, together with the restricted Gram matrix."""
    n = lattice.rank
    if not classes:
        basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        return basis, [list(row) for row in lattice.gram]
    rows = []
    for c in classes:
        coeffs = c.integral_coeffs()
        if len(coeffs) != n:
            raise ValueError("class dimension does not match the lattice")
        rows.append([sum(coeffs[i] * lattice.gram[i][j] for i in range(n))
                     for j in range(n)])
    basis = integer_kernel(rows)
    return basis, gram_restrict(lattice.gram, basis)


def is_big_supported(lattice: PicardLattice, classes: list[DivisorClass]) -> bool:
    """Whether some big divisor has support contained in the given curve
    classes: true exactly when their orthogonal complement is negative
    definite (a rank-0 complement counts)."""
    _, gram = orthogonal_complement(lattice, classes)
    return is_negative_definite(gram)


@dataclass(frozen=True)
class BignessVerdict:
    """Closed-form answer for one configuration.

    inequality_lhs, v and v_squared are absent when a degenerate point
    count makes the product vanish (the criterion is then unconditional).
    effective records whether the verdict also certifies an effective
    anticanonical member; it is left undecided for nine or more points in
    general position.
    """

    big: bool
    case: str
    inequality_lhs: Fraction | None
    v: DivisorClass | None
    v_squared: Fraction | None
    effective: bool | None
    lattice_confirmed: bool = False


def _line_conic_verdict(config: LineConic) -> BignessVerdict:
    a, b = config.a, config.b
    if a * b == 0:
        return BignessVerdict(True, "ii", None, None, None, True)
    lattice = config_lattice(config)
    lhs = Fraction(1, a) + Fraction(4, b)
    coeffs = ([a * b] + [-b] * a + [-2 * a] * b + [0] * config.both)
    v = DivisorClass.of(coeffs)
    v_sq = lattice.pair(v, v)
    assert v_sq == (a * b) ** 2 * (1 - Fraction(1, a) - Fraction(4, b))
    return BignessVerdict(lhs > 1, "ii", lhs, v, v_sq, True)


def _three_lines_verdict(config: ThreeLines) -> BignessVerdict:
    a1, a2, a3 = config.counts
    if a1 * a2 * a3 == 0:
        return BignessVerdict(True, "iii", None, None, None, True)
    lattice = config_lattice(config)
    lhs = Fraction(1, a1) + Fraction(1, a2) + Fraction(1, a3)
    coeffs = ([a1 * a2 * a3]
              + [-a2 * a3] * a1 + [-a1 * a3] * a2 + [-a1 * a2] * a3
              + [0] * sum(config.flags))
    v = DivisorClass.of(coeffs)
    v_sq = lattice.pair(v, v)
    assert v_sq == (a1 * a2 * a3) ** 2 * (1 - lhs)
    return BignessVerdict(lhs > 1, "iii", lhs, v, v_sq, True)


def classify_anticanonical(config: PointConfiguration) -> BignessVerdict:
    """Closed-form bigness verdict for the anticanonical class.

    Points in general position: big exactly for at most eight of them.
    Points on a line and a conic with nonzero exclusive counts a, b: big
    exactly when 1/a + 4/b > 1.  Points on three lines with nonzero
    exclusive counts: big exactly when 1/a1 + 1/a2 + 1/a3 > 1.  A zero
    count always yields big.
    """
    if isinstance(config, Generic):
        big = config.r <= 8
        return BignessVerdict(big, "i", None, None, None, True if big else None)
    if isinstance(config, LineConic):
        return _line_conic_verdict(config)
    if isinstance(config, ThreeLines):
        return _three_lines_verdict(config)
    raise TypeError(f"not a point configuration: {config!r}")


@dataclass(frozen=True)
class CrossCheckReport:
    verdict: BignessVerdict
    lattice_big: bool
    agrees: bool
    v_orthogonal: bool
    sign_consistent: bool

    @property
    def ok(self) -> bool:
        return self.agrees and self.v_orthogonal and self.sign_consistent


def cross_check(config: PointConfiguration) -> CrossCheckReport:
    """Run the closed-form criterion and the lattice criterion side by side.

    Also confirms that v is orthogonal to every component of the
    distinguished anticanonical member and that the sign of v^2 matches the
    inequality (both vacuous when v is degenerate).
    """
    if isinstance(config, Generic):
        raise DomainError("cross-checking needs a line/conic or three-lines configuration")
    verdict = classify_anticanonical(config)
    lattice = config_lattice(config)
    components = list(anticanonical_components(config))
    lattice_big = is_big_supported(lattice, components)
    agrees = verdict.big == lattice_big
    if verdict.v is None:
        v_orthogonal = True
        sign_consistent = True
    else:
        v_orthogonal = all(lattice.pair(verdict.v, c) == 0 for c in components)
        diff = 1 - verdict.inequality_lhs
        sign_consistent = ((verdict.v_squared > 0) == (diff > 0)
                           and (verdict.v_squared == 0) == (diff == 0))
    return CrossCheckReport(replace(verdict, lattice_confirmed=agrees),
                            lattice_big, agrees, v_orthogonal, sign_consistent)


@dataclass(frozen=True)
class SweepReport:
    line_conic_count: int
    three_lines_count: int
    disagreements: tuple[str, ...]
    flag_violations: tuple[str, ...]

    @property
    def clean(self) -> bool:
        return not self.disagreements and not self.flag_violations


def agreement_sweep(max_a: int = 12, max_b: int = 12, max_ai: int = 10) -> SweepReport:
    """Cross-check every configuration up to the given bounds.

    Covers all line/conic configurations with a <= max_a, b <= max_b and
    every choice of blown-up intersection points, and all three-line
    configurations with counts up to max_ai and every intersection flag
    pattern.  Records any disagreement between the two criteria, and any
    configuration whose verdict is not invariant under the intersection
    flags (which never carry mathematical weight).
    """
    disagreements: list[str] = []
    flag_violations: list[str] = []
    lc_count = tl_count = 0
    for a in range(max_a + 1):
        for b in range(max_b + 1):
            verdicts = []
            for both in (0, 1, 2):
                config = LineConic(a, b, both)
                report = cross_check(config)
                lc_count += 1
                if not report.ok:
                    disagreements.append(f"line_conic a={a} b={b} both={both}")
                verdicts.append(report.verdict.big)
            if len(set(verdicts)) != 1:
                flag_violations.append(f"line_conic a={a} b={b}")
    for a1, a2, a3 in product(range(max_ai + 1), repeat=3):
        verdicts = []
        for flags in product((False, True), repeat=3):
            config = ThreeLines(a1, a2, a3, *flags)
            report = cross_check(config)
            tl_count += 1
            if not report.ok:
                disagreements.append(
                    f"three_lines a=({a1},{a2},{a3}) flags={flags}")
            verdicts.append(report.verdict.big)
        if len(set(verdicts)) != 1:
            flag_violations.append(f"three_lines a=({a1},{a2},{a3})")
    return SweepReport(lc_count, tl_count, tuple(disagreements), tuple(flag_violations))
