"""Normal-sheaf degree and slope of canonical monomial curves."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from nsk.errors import GenusTooSmall, Hyperelliptic, NotSymmetric
from nsk.semigroup import NumericalSemigroup, is_symmetric, lambda_invariant
from nsk.tjurina import tjurina


@dataclass(frozen=True)
class CurveInvariants:
    genus: int
    delta: int
    theta: int
    lambda_: int
    deligne: int
    tjurina: int
    ambient_dim: int
    curve_degree: int
    normal_degree: int
    normal_rank: int
    slope: Fraction

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "delta": self.delta,
            "theta": self.theta,
            "lambda": self.lambda_,
            "deligne": self.deligne,
            "tjurina": self.tjurina,
            "ambient_dim": self.ambient_dim,
            "curve_degree": self.curve_degree,
            "normal_degree": self.normal_degree,
            "normal_rank": self.normal_rank,
            "slope": str(self.slope),
        }


def normal_degree_general(g: int, r: int, d: int, tau: int, e: int) -> int:
    """Degree of the normal sheaf of a degree-``d`` curve of genus ``g`` in P^r."""
    return 2 * g - 2 + (r + 1) * d + tau - e


def smooth_or_lci_consistency(g: int, r: int, d: int) -> int:
    """The general formula when tau = e, as for local complete intersections."""
    return 2 * g - 2 + (r + 1) * d


def canonical_normal_degree(g: int, tau: int) -> int:
    """Shortcut valid for symmetric semigroups: g(2g - 2) + tau - 2."""
    return g * (2 * g - 2) + tau - 2


def monomial_curve_invariants(S: NumericalSemigroup, relations=None) -> CurveInvariants:
    """Invariants of the canonical model in P^(g-1) of the monomial curve of ``S``.

    The curve is unibranch with rational normalization, so delta equals the
    genus; theta comes from lambda = |End(S) \\ S|.
    """
    if S.genus < 3:
        raise GenusTooSmall(f"{S} has genus {S.genus}; a canonical curve needs g >= 3")
    if not is_symmetric(S):
        raise NotSymmetric(f"{S} is not symmetric (F={S.frobenius}, g={S.genus})")
    if S.is_hyperelliptic:
        raise Hyperelliptic(f"{S} contains 2")
    g = S.genus
    delta = g
    lam = lambda_invariant(S)
    theta = 1 + g - lam
    deligne = 3 * delta - theta
    tau = tjurina(S, relations).tjurina
    r, d = g - 1, 2 * g - 2
    deg = normal_degree_general(g, r, d, tau, deligne)
    rank = r - 1
    return CurveInvariants(
        genus=g,
        delta=delta,
        theta=theta,
        lambda_=lam,
        deligne=deligne,
        tjurina=tau,
        ambient_dim=r,
        curve_degree=d,
        normal_degree=deg,
        normal_rank=rank,
        slope=Fraction(deg, rank),
    )
