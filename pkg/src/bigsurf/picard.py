"""Picard lattices of rational surface models.

Two families of models are supported, both given by their intersection form
on a fixed basis together with the canonical class:

* the blow-up of the projective plane at r points, with basis
  (hyperplane class, exceptional classes), form diag(1, -1, ..., -1) and
  canonical class -3l + sum(e_i);

* the blow-up of a Hirzebruch surface of degree n at points placed on named
  fibers and on the negative section, with basis (pullback of the negative
  section, fiber class, exceptional classes) and canonical class
  -2*sigma - (n+2)*F + sum of exceptionals.

Points carry no coordinates; a configuration records only the combinatorial
incidence data (which curves each point lies on), which is all the lattice
computations see.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError

Rational = int | Fraction


@dataclass(frozen=True)
class DivisorClass:
    """A divisor class as a rational coefficient vector in a fixed basis."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(values: Iterable[Rational]) -> "DivisorClass":
        return DivisorClass(tuple(Fraction(v) for v in values))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __mul__(self, scalar: Rational) -> "DivisorClass":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return DivisorClass(tuple(a * scalar for a in self.coeffs))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integral_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError(f"class {self.coeffs} is not integral")
        return tuple(c.numerator for c in self.coeffs)


@dataclass(frozen=True)
class PlaneBlowup:
    points: int


@dataclass(frozen=True)
class HirzebruchBlowup:
    n: int
    fiber_specs: tuple[tuple[int, bool], ...]
    extra_on_sigma: int


@dataclass(frozen=True)
class PicardLattice:
    """Intersection lattice of a surface model, with labeled basis."""

    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    canonical: DivisorClass
    model: PlaneBlowup | HirzebruchBlowup

    @property
    def rank(self) -> int:
        return len(self.labels)

    def pair(self, a: DivisorClass, b: DivisorClass) -> Fraction:
        """Intersection pairing of two classes."""
        total = Fraction(0)
        for i, ai in enumerate(a.coeffs):
            if ai:
                row = self.gram[i]
                total += ai * sum(row[j] * bj for j, bj in enumerate(b.coeffs) if bj)
        return total

    def basis_class(self, label: str) -> DivisorClass:
        i = self.labels.index(label)
        return DivisorClass.of(tuple(int(j == i) for j in range(self.rank)))

    def zero(self) -> DivisorClass:
        return DivisorClass.of((0,) * self.rank)

    @property
    def anticanonical(self) -> DivisorClass:
        return -self.canonical

    def k_squared(self) -> int:
        v = self.pair(self.canonical, self.canonical)
        assert v.denominator == 1
        return v.numerator

    def arithmetic_genus(self, c: DivisorClass) -> int:
        """Genus of an integral class by adjunction: 1 + (C^2 + C.K)/2."""
        if not c.is_integral:
            raise ValueError("arithmetic genus needs an integral class")
        val = 1 + Fraction(self.pair(c, c) + self.pair(c, self.canonical), 2)
        assert val.denominator == 1, "adjunction parity violated"
        return val.numerator

    def riemann_roch_nef(self, n: DivisorClass) -> int:
        """Section count (N^2 - K.N)/2 + 1 valid for nef classes."""
        if not n.is_integral:
            raise ValueError("needs an integral class")
        val = Fraction(self.pair(n, n) - self.pair(self.canonical, n), 2) + 1
        assert val.denominator == 1
        return val.numerator


def _plane_lattice(labels: Sequence[str]) -> PicardLattice:
    rank = len(labels)
    gram = tuple(tuple((1 if i == 0 else -1) * int(i == j) for j in range(rank))
                 for i in range(rank))
    canonical = DivisorClass.of([-3] + [1] * (rank - 1))
    return PicardLattice(gram, tuple(labels), canonical, PlaneBlowup(rank - 1))


def blowup_p2(r: int) -> PicardLattice:
    """Picard lattice of the plane blown up at r points."""
    if r < 0:
        raise DomainError("r must be a non-negative integer")
    return _plane_lattice(["l"] + [f"e{i}" for i in range(1, r + 1)])


def blowup_hirzebruch(n: int, fiber_specs: Sequence[tuple[int, bool]],
                      extra_on_sigma: int = 0) -> PicardLattice:
    """Picard lattice of a degree-n Hirzebruch surface blown up at points
    on named fibers and on the negative section.

    fiber_specs gives, per named fiber, the number of points on the fiber
    away from the negative section and whether the intersection point of
    fiber and section is also blown up.  extra_on_sigma counts additional
    points on the section away from every named fiber.
    """
    if n < 1:
        raise DomainError("n must satisfy n >= 1")
    if extra_on_sigma < 0:
        raise DomainError("extra_on_sigma must be non-negative")
    specs = tuple((int(off), bool(on)) for off, on in fiber_specs)
    if any(off < 0 for off, _ in specs):
        raise DomainError("points per fiber must be non-negative")
    labels = ["sigma", "F"]
    for i, (off, on) in enumerate(specs, start=1):
        labels.extend(f"e{i}_{j}" for j in range(1, off + 1))
        if on:
            labels.append(f"e{i}_s")
    labels.extend(f"s{j}" for j in range(1, extra_on_sigma + 1))
    rank = len(labels)
    rows = [[0] * rank for _ in range(rank)]
    rows[0][0] = -n
    rows[0][1] = rows[1][0] = 1
    for i in range(2, rank):
        rows[i][i] = -1
    canonical = DivisorClass.of([-2, -(n + 2)] + [1] * (rank - 2))
    return PicardLattice(tuple(tuple(r) for r in rows), tuple(labels), canonical,
                         HirzebruchBlowup(n, specs, extra_on_sigma))


def _hirzebruch_model(lattice: PicardLattice) -> HirzebruchBlowup:
    if not isinstance(lattice.model, HirzebruchBlowup):
        raise DomainError("lattice is not a Hirzebruch blow-up model")
    return lattice.model


def fiber_strict(lattice: PicardLattice, i: int) -> DivisorClass:
    """Strict transform of the i-th named fiber (1-based)."""
    model = _hirzebruch_model(lattice)
    if not 1 <= i <= len(model.fiber_specs):
        raise DomainError(f"fiber index {i} out of range")
    cls = lattice.basis_class("F")
    off, on = model.fiber_specs[i - 1]
    for j in range(1, off + 1):
        cls = cls - lattice.basis_class(f"e{i}_{j}")
    if on:
        cls = cls - lattice.basis_class(f"e{i}_s")
    return cls


def sigma_strict(lattice: PicardLattice) -> DivisorClass:
    """Strict transform of the negative section."""
    model = _hirzebruch_model(lattice)
    cls = lattice.basis_class("sigma")
    for i, (_, on) in enumerate(model.fiber_specs, start=1):
        if on:
            cls = cls - lattice.basis_class(f"e{i}_s")
    for j in range(1, model.extra_on_sigma + 1):
        cls = cls - lattice.basis_class(f"s{j}")
    return cls


# point configurations --------------------------------------------------------


@dataclass(frozen=True)
class Generic:
    """r points in general position in the plane."""

    r: int

    def __post_init__(self):
        if self.r < 0:
            raise DomainError("r must be a non-negative integer")


@dataclass(frozen=True)
class LineConic:
    """Points on a line and a conic: a exclusively on the line, b exclusively
    on the conic, and `both` of the (at most two) intersection points."""

    a: int
    b: int
    both: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise DomainError("point counts must be non-negative")
        if not 0 <= self.both <= 2:
            raise DomainError("both must satisfy 0 <= both <= 2")


@dataclass(frozen=True)
class ThreeLines:
    """Points on three pairwise distinct, non-concurrent lines: a_i points
    exclusively on line i, plus optionally the pairwise intersections."""

    a1: int
    a2: int
    a3: int
    p12: bool = False
    p13: bool = False
    p23: bool = False

    def __post_init__(self):
        if min(self.a1, self.a2, self.a3) < 0:
            raise DomainError("point counts must be non-negative")

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    @property
    def flags(self) -> tuple[bool, bool, bool]:
        return (self.p12, self.p13, self.p23)


PointConfiguration = Generic | LineConic | ThreeLines


def config_lattice(config: PointConfiguration) -> PicardLattice:
    """Picard lattice of the plane blown up along the configuration, with
    basis labels reflecting the incidence roles of the points."""
    if isinstance(config, Generic):
        return blowup_p2(config.r)
    if isinstance(config, LineConic):
        labels = (["l"]
                  + [f"e{i}" for i in range(1, config.a + 1)]
                  + [f"f{j}" for j in range(1, config.b + 1)]
                  + [f"g{k}" for k in range(1, config.both + 1)])
        return _plane_lattice(labels)
    if isinstance(config, ThreeLines):
        labels = ["l"]
        for line, count in enumerate(config.counts, start=1):
            labels.extend(f"e{line}_{j}" for j in range(1, count + 1))
        labels.extend(name for name, flag in
                      zip(("g12", "g13", "g23"), config.flags) if flag)
        return _plane_lattice(labels)
    raise TypeError(f"not a point configuration: {config!r}")


def anticanonical_components(config: PointConfiguration) -> tuple[DivisorClass, ...]:
    """Classes of the components of the distinguished anticanonical member.

    For LineConic: strict transforms of the line and the conic plus the
    exceptional curves over blown-up intersection points.  For ThreeLines:
    strict transforms of the three lines plus blown-up intersections.
    The classes always sum to the anticanonical class.
    """
    lattice = config_lattice(config)
    if isinstance(config, Generic):
        raise DomainError("generic configurations carry no distinguished anticanonical member")
    parts: list[DivisorClass] = []
    if isinstance(config, LineConic):
        line = lattice.basis_class("l")
        conic = 2 * lattice.basis_class("l")
        for i in range(1, config.a + 1):
            line = line - lattice.basis_class(f"e{i}")
        for j in range(1, config.b + 1):
            conic = conic - lattice.basis_class(f"f{j}")
        for k in range(1, config.both + 1):
            g = lattice.basis_class(f"g{k}")
            line = line - g
            conic = conic - g
            parts.append(g)
        parts = [line, conic] + parts
    else:
        incident = {"g12": (1, 2), "g13": (1, 3), "g23": (2, 3)}
        lines = []
        for idx, count in enumerate(config.counts, start=1):
            cls = lattice.basis_class("l")
            for j in range(1, count + 1):
                cls = cls - lattice.basis_class(f"e{idx}_{j}")
            lines.append(cls)
        extra = []
        for name, flag in zip(("g12", "g13", "g23"), config.flags):
            if flag:
                g = lattice.basis_class(name)
                for idx in incident[name]:
                    lines[idx - 1] = lines[idx - 1] - g
                extra.append(g)
        parts = lines + extra
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    assert total == lattice.anticanonical, "components fail to sum to -K"
    return tuple(parts)


# witness identities ----------------------------------------------------------


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of checking one of the multiple-of-(-K) decompositions."""

    example: str
    holds: bool
    lhs: DivisorClass
    big_part: DivisorClass
    effective_part: DivisorClass
    residual: DivisorClass
    n: int | None = None


def _witness_hirzebruch(n: int, fibers: Sequence[tuple[int, bool]] | None,
                        extra_on_sigma: int) -> WitnessReport:
    if n < 1:
        raise DomainError("n must satisfy n >= 1")
    if fibers is None:
        fibers = [(1, False)] * (n + 1)
    fibers = [(int(off), bool(on)) for off, on in fibers]
    if len(fibers) != n + 1:
        raise DomainError("exactly n + 1 named fibers are required")
    lattice = blowup_hirzebruch(n, fibers, extra_on_sigma)
    sigma = lattice.basis_class("sigma")
    fiber = lattice.basis_class("F")
    lhs = n * lattice.anticanonical
    big = sigma + n * fiber
    eff = (n - 1) * sigma + n * sigma_strict(lattice)
    for i in range(1, n + 2):
        eff = eff + n * fiber_strict(lattice, i)
    residual = lhs - big - eff
    return WitnessReport("hirzebruch_b", residual.is_zero, lhs, big, eff, residual, n)


def _witness_conic(n: int) -> WitnessReport:
    if n < 1:
        raise DomainError("n must satisfy n >= 1")
    # e0 is the point off the conic, e1..en lie on it
    lattice = _plane_lattice(["l"] + [f"e{i}" for i in range(n + 1)])
    line = lattice.basis_class("l")
    e0 = lattice.basis_class("e0")
    conic = 2 * line
    for i in range(1, n + 1):
        conic = conic - lattice.basis_class(f"e{i}")
    lhs = n * lattice.anticanonical
    big = 2 * line
    eff = (n - 1) * conic
    for i in range(1, n + 1):
        eff = eff + (line - e0 - lattice.basis_class(f"e{i}"))
    residual = lhs - big - eff
    return WitnessReport("conic_c", residual.is_zero, lhs, big, eff, residual, n)


def _witness_castravet() -> WitnessReport:
    # ten points, one for each pairwise intersection of five general lines
    pairs = list(combinations(range(1, 6), 2))
    lattice = _plane_lattice(["l"] + [f"e{i}{j}" for i, j in pairs])
    line = lattice.basis_class("l")
    lhs = 2 * lattice.anticanonical
    eff = lattice.zero()
    for k in range(1, 6):
        strict = line
        for i, j in pairs:
            if k in (i, j):
                strict = strict - lattice.basis_class(f"e{i}{j}")
        eff = eff + strict
    residual = lhs - line - eff
    return WitnessReport("castravet_d", residual.is_zero, lhs, line, eff, residual)


def verify_witness(example: str, n: int | None = None,
                   fibers: Sequence[tuple[int, bool]] | None = None,
                   extra_on_sigma: int = 0) -> WitnessReport:
    """Check one of the known decompositions of a multiple of -K into a big
    part and an effective part, as an exact class identity.

    Placements that break the identity (for instance a point at the meeting
    of the negative section and a named fiber) are reported with the
    nonzero residual class rather than rejected.
    """
    if example == "hirzebruch_b":
        if n is None:
            raise DomainError("hirzebruch_b requires n")
        return _witness_hirzebruch(n, fibers, extra_on_sigma)
    if example == "conic_c":
        if n is None:
            raise DomainError("conic_c requires n")
        return _witness_conic(n)
    if example == "castravet_d":
        return _witness_castravet()
    raise DomainError(f"unknown witness example {example!r}")
