"""Intersection calculus on rational normal scrolls.

Classes are ``aH + bR`` on the resolution P(E) of S(e_1, ..., e_d), with
H^d = e, H^(d-1) R = 1 and R^2 = 0. The ``e_list`` is kept in descending
order and the admissibility inequalities are read against that order, so
S(3,0,0) has e_3 = 0.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from nsk.errors import ArityMismatch, BadBSum, BadPartition, GenusMismatch, NskError


@dataclass(frozen=True)
class DivisorClass:
    a: int
    b: int

    def __add__(self, other):
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __neg__(self):
        return DivisorClass(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return DivisorClass(k * self.a, k * self.b)

    def __str__(self) -> str:
        sign = "+" if self.b >= 0 else "-"
        return f"{self.a}H{sign}{abs(self.b)}R"


H = DivisorClass(1, 0)
R = DivisorClass(0, 1)

_CLASS_RE = re.compile(r"^\s*([+-]?\d+)H\s*([+-])\s*(\d+)R\s*$")


def parse_class(text: str) -> DivisorClass:
    """Parse ``<int>H<sign><int>R``, e.g. ``2H-1R``."""
    m = _CLASS_RE.match(text)
    if not m:
        raise NskError(f"cannot parse divisor class {text!r}; expected e.g. 2H-1R")
    a, sign, b = m.groups()
    return DivisorClass(int(a), int(b) if sign == "+" else -int(b))


@dataclass(frozen=True)
class ScrollModel:
    e_list: tuple[int, ...]

    def __post_init__(self):
        if len(self.e_list) < 2 or any(e < 0 for e in self.e_list):
            raise BadPartition(f"scroll needs d >= 2 nonnegative integers, got {self.e_list}")
        object.__setattr__(self, "e_list", tuple(sorted(self.e_list, reverse=True)))

    @property
    def dim(self) -> int:
        return len(self.e_list)

    @property
    def degree(self) -> int:
        return sum(self.e_list)

    @property
    def ambient_dim(self) -> int:
        return self.degree + self.dim - 1

    @property
    def smooth(self) -> bool:
        return all(e > 0 for e in self.e_list)

    @property
    def vertex_dim(self) -> int | None:
        zeros = self.e_list.count(0)
        return zeros - 1 if zeros else None

    def to_dict(self) -> dict:
        return {
            "e_list": list(self.e_list),
            "dim": self.dim,
            "degree": self.degree,
            "ambient_dim": self.ambient_dim,
            "smooth": self.smooth,
            "vertex_dim": self.vertex_dim,
        }


def intersection_number(scroll: ScrollModel, classes) -> int:
    """Top intersection of ``scroll.dim`` divisor classes.

    Expanding multilinearly, a product with two or more R factors vanishes,
    leaving e * prod(a) + sum_j b_j * prod_{i != j} a_i.
    """
    classes = list(classes)
    if len(classes) != scroll.dim:
        raise ArityMismatch(f"need {scroll.dim} classes on a {scroll.dim}-fold, got {len(classes)}")
    a = [c.a for c in classes]
    total = scroll.degree * math.prod(a)
    for j, c in enumerate(classes):
        total += c.b * math.prod(a[:j] + a[j + 1:])
    return total


def canonical_class(scroll: ScrollModel) -> DivisorClass:
    return DivisorClass(-scroll.dim, scroll.degree - 2)


@dataclass(frozen=True)
class TetragonalModel:
    genus: int
    scroll: ScrollModel
    b1: int
    b2: int

    @property
    def y1(self) -> DivisorClass:
        return DivisorClass(2, -self.b1)

    @property
    def y2(self) -> DivisorClass:
        return DivisorClass(2, -self.b2)

    @property
    def admissible(self) -> bool:
        _, e2, e3 = self.scroll.e_list
        return self.b1 <= 2 * e2 and self.b2 <= 2 * e3

    @property
    def bielliptic(self) -> bool:
        return self.scroll.e_list[2] == 0 and self.b2 == 0

    @property
    def has_g25(self) -> bool:
        return self.scroll.e_list[2] == 0 and self.b2 == -1

    @property
    def general(self) -> bool:
        return self.admissible and self.scroll.smooth and not self.bielliptic and not self.has_g25

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "scroll": list(self.scroll.e_list),
            "b1": self.b1,
            "b2": self.b2,
            "admissible": self.admissible,
            "smooth": self.scroll.smooth,
            "bielliptic": self.bielliptic,
            "has_g25": self.has_g25,
        }


def tetragonal_model(g: int, e_list, b1: int, b2: int) -> TetragonalModel:
    """Canonical tetragonal curve of genus ``g`` cut out by 2H - b1 R and 2H - b2 R."""
    e_list = tuple(e_list)
    if g < 5:
        raise BadPartition(f"tetragonal canonical curves need g >= 5, got {g}")
    if len(e_list) != 3 or any(e < 0 for e in e_list) or sum(e_list) != g - 3:
        raise BadPartition(f"{e_list} is not a partition of g - 3 = {g - 3} into 3 parts")
    if b1 + b2 != g - 5:
        raise BadBSum(f"b1 + b2 = {b1 + b2}, expected e - 2 = {g - 5}")
    if b2 < -1 or b1 < b2:
        raise BadBSum(f"need b1 >= b2 >= -1, got ({b1}, {b2})")
    return TetragonalModel(g, ScrollModel(e_list), b1, b2)


@dataclass(frozen=True)
class TetragonalReport:
    hc: int
    rc: int
    adjunction_genus: int
    deg_n_scroll: int
    summand_degrees: tuple[int, int]
    mu_scroll: Fraction
    deg_n_projective: int
    mu_projective: Fraction
    unstable_in_p: bool

    def to_dict(self) -> dict:
        return {
            "HC": self.hc,
            "RC": self.rc,
            "adjunction_genus": self.adjunction_genus,
            "degN_in_scroll": self.deg_n_scroll,
            "summand_degrees": list(self.summand_degrees),
            "mu_scroll": str(self.mu_scroll),
            "degN_projective": self.deg_n_projective,
            "mu_projective": str(self.mu_projective),
            "unstable_in_P": self.unstable_in_p,
        }


def tetragonal_invariants(model: TetragonalModel) -> TetragonalReport:
    S = model.scroll
    g = model.genus
    y1, y2 = model.y1, model.y2
    K = canonical_class(S)
    hc = intersection_number(S, [H, y1, y2])
    rc = intersection_number(S, [R, y1, y2])
    two_g_minus_two = intersection_number(S, [K + y1 + y2, y1, y2])
    if two_g_minus_two % 2:
        raise GenusMismatch(f"odd canonical degree {two_g_minus_two}")
    adj_genus = two_g_minus_two // 2 + 1
    if adj_genus != g:
        raise GenusMismatch(f"adjunction gives genus {adj_genus}, model says {g}")
    summands = (intersection_number(S, [y1, y1, y2]), intersection_number(S, [y2, y1, y2]))
    deg_scroll = sum(summands)
    # deg N_{S/P} restricted to C is deg(-K_P|C) + deg(K_S|C), with K_P = -gH
    deg_rel = g * hc + intersection_number(S, [K, y1, y2])
    deg_proj = deg_scroll + deg_rel
    mu_scroll = Fraction(deg_scroll, 2)
    mu_proj = Fraction(deg_proj, g - 2)
    return TetragonalReport(
        hc=hc,
        rc=rc,
        adjunction_genus=adj_genus,
        deg_n_scroll=deg_scroll,
        summand_degrees=summands,
        mu_scroll=mu_scroll,
        deg_n_projective=deg_proj,
        mu_projective=mu_proj,
        unstable_in_p=mu_proj < mu_scroll,
    )


def _partitions3(n):
    for e1 in range(n, -1, -1):
        for e2 in range(min(e1, n - e1), -1, -1):
            e3 = n - e1 - e2
            if e3 <= e2:
                yield (e1, e2, e3)


def enumerate_tetragonal(g: int) -> list[TetragonalModel]:
    """Every descending scroll type of degree g - 3 with every split b1 >= b2 >= -1."""
    if g < 5:
        raise BadPartition(f"need g >= 5, got {g}")
    out = []
    for e_list, b2 in product(_partitions3(g - 3), range(-1, (g - 5) // 2 + 1)):
        out.append(tetragonal_model(g, e_list, g - 5 - b2, b2))
    return out


@dataclass(frozen=True)
class CIStabilityReport:
    curve_degree: int
    genus: int
    deg_n: int
    summand_slopes: tuple[int, ...]
    mu: Fraction
    verdict: str

    def to_dict(self) -> dict:
        return {
            "curve_degree": self.curve_degree,
            "genus": self.genus,
            "degN": self.deg_n,
            "summand_slopes": list(self.summand_slopes),
            "mu": str(self.mu),
            "verdict": self.verdict,
        }


def ci_projective_stability(n: int, degrees) -> CIStabilityReport:
    """Normal bundle of a complete-intersection curve in P^n of the given degrees.

    The normal bundle splits as the sum of O_C(k_i), each of degree k_i * d.
    """
    degrees = tuple(int(k) for k in degrees)
    if n < 3:
        raise NskError(f"ambient dimension must be >= 3, got {n}")
    if len(degrees) != n - 1:
        raise ArityMismatch(f"a curve in P^{n} needs {n - 1} hypersurfaces, got {len(degrees)}")
    if any(k < 2 for k in degrees):
        raise NskError(f"hypersurface degrees must be >= 2, got {degrees}")
    d = math.prod(degrees)
    two_g_minus_two = d * (sum(degrees) - n - 1)
    genus = two_g_minus_two // 2 + 1
    slopes = tuple(k * d for k in degrees)
    deg_n = sum(slopes)
    mu = Fraction(deg_n, n - 1)
    if any(s > mu for s in slopes):
        verdict = "unstable"
    elif all(s == mu for s in slopes):
        verdict = "polystable"
    else:
        verdict = "inconclusive"
    return CIStabilityReport(d, genus, deg_n, slopes, mu, verdict)
