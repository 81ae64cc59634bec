"""Graded T1 dimensions and the Tjurina number of a monomial curve (Buchweitz)."""

from __future__ import annotations

from dataclasses import dataclass

from nsk import kernels
from nsk.errors import FullSemigroup, NegativeDimension
from nsk.semigroup import NumericalSemigroup, contains, in_end
from nsk.toric import minimal_relations


@dataclass(frozen=True)
class GradedT1Report:
    support: dict[int, int]
    tjurina: int
    range_used: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "support": {str(k): v for k, v in sorted(self.support.items())},
            "tjurina": self.tjurina,
            "range_used": list(self.range_used),
        }


def buchweitz_count(S: NumericalSemigroup, relations, ell: int) -> int:
    """Raw value #{i : n_i + ell not in S} - dim V_ell - 1, with no domain check.

    V_ell is spanned by the vectors of the relations whose weight plus
    ``ell`` falls outside S.
    """
    shifted = sum(1 for n in S.generators if not contains(S, n + ell))
    vecs = [rel.vector for rel in relations if not contains(S, rel.weight + ell)]
    return shifted - kernels.integer_rank(vecs) - 1


def t1_graded_dim(S: NumericalSemigroup, relations, ell: int) -> int:
    """dim T1 in degree ``ell``; zero on End(S)."""
    if in_end(S, ell):
        return 0
    value = buchweitz_count(S, relations, ell)
    if value < 0:
        raise NegativeDimension(f"degree {ell} of {S} evaluates to {value}")
    return value


def tjurina(S: NumericalSemigroup, relations=None, lo: int | None = None,
            hi: int | None = None) -> GradedT1Report:
    """Sum the graded pieces over ``[lo, hi]``, by default ``[-max weight, F]``.

    Below ``-max weight`` every shifted weight is negative, so V is the full
    relation span and the count vanishes; above F everything lies in S.
    """
    if S.genus == 0:
        raise FullSemigroup("the full semigroup gives a smooth curve")
    if relations is None:
        relations = minimal_relations(S)
    d_max = max(rel.weight for rel in relations)
    lo = -d_max if lo is None else lo
    hi = S.frobenius if hi is None else hi
    support = {}
    for ell in range(lo, hi + 1):
        if in_end(S, ell):
            continue
        dim = t1_graded_dim(S, relations, ell)
        if dim:
            support[ell] = dim
    return GradedT1Report(support, sum(support.values()), (lo, hi))


def end_sweep(S: NumericalSemigroup, relations, lo: int, hi: int) -> dict[int, int]:
    """Raw counts at every degree of End(S) in ``[lo, hi]``; all should be <= 0."""
    return {
        ell: buchweitz_count(S, relations, ell)
        for ell in range(lo, hi + 1)
        if in_end(S, ell)
    }
