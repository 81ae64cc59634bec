"""Minimal binomial generators of the toric ideal of an affine monomial curve.

For each member ``n`` the factorizations of ``n`` form a graph in which two
factorizations are adjacent when their supports meet. A degree whose graph
has ``k`` components contributes ``k - 1`` minimal binomials, one per edge of
any spanning tree of the components.
"""

from __future__ import annotations

from dataclasses import dataclass

from nsk import kernels
from nsk.errors import BoundTooSmall, NskError
from nsk.semigroup import NumericalSemigroup, contains

PAIRINGS = ("star", "path")


def factorization_key(f):
    """Sort key comparing exponent vectors from the last generator backwards."""
    return tuple(reversed(f))


@dataclass(frozen=True)
class BinomialRelation:
    """The binomial ``X^alpha - X^beta`` of weight ``weight``."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    weight: int

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.alpha, self.beta))

    def is_valid(self, gens) -> bool:
        disjoint = all(a == 0 or b == 0 for a, b in zip(self.alpha, self.beta))
        iso_a = sum(a * n for a, n in zip(self.alpha, gens)) == self.weight
        iso_b = sum(b * n for b, n in zip(self.beta, gens)) == self.weight
        return disjoint and iso_a and iso_b

    def format(self) -> str:
        return f"{_monomial(self.alpha)} - {_monomial(self.beta)}  (weight {self.weight})"

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "weight": self.weight,
            "vector": list(self.vector),
        }


def _monomial(exps) -> str:
    parts = []
    for j, a in enumerate(exps, start=1):
        if a == 1:
            parts.append(f"x{j}")
        elif a > 1:
            parts.append(f"x{j}^{a}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class FactorizationGraph:
    degree: int
    factorizations: tuple[tuple[int, ...], ...]
    components: tuple[tuple[tuple[int, ...], ...], ...]


def factorizations(S: NumericalSemigroup, n: int) -> list[tuple[int, ...]]:
    """Exponent vectors of ``n`` over the minimal generators.

    Ordered by :func:`factorization_key`, so ``15`` in <3,5> lists ``(5, 0)``
    before ``(0, 3)``.
    """
    if n < 0:
        return []
    return sorted(kernels.factorizations(S.generators, n), key=factorization_key)


def factorization_graph(S: NumericalSemigroup, n: int) -> FactorizationGraph:
    if n < 0:
        return FactorizationGraph(n, (), ())
    comps = kernels.factorization_components(S.generators, n)
    components = sorted(
        (tuple(sorted(c, key=factorization_key)) for c in comps),
        key=lambda c: factorization_key(c[0]),
    )
    facts = sorted((f for c in components for f in c), key=factorization_key)
    return FactorizationGraph(n, tuple(facts), tuple(components))


def default_bound(S: NumericalSemigroup) -> int:
    return 2 * S.conductor + 2 * max(S.generators)


def minimal_relations(S: NumericalSemigroup, bound: int | None = None,
                      pairing: str = "star") -> list[BinomialRelation]:
    """Minimal binomial generating set, sorted by weight then factorization order.

    ``pairing="star"`` joins the least factorization of the first component
    to that of every other component; ``"path"`` joins consecutive components.
    """
    r = S.embedding_dimension
    if r < 2:
        raise NskError(f"{S} has embedding dimension {r}; the toric ideal is zero")
    if pairing not in PAIRINGS:
        raise NskError(f"unknown pairing {pairing!r}")
    bound = default_bound(S) if bound is None else bound
    rels = []
    for n in range(S.multiplicity * 2, bound + 1):
        if not contains(S, n):
            continue
        comps = factorization_graph(S, n).components
        if len(comps) < 2:
            continue
        reps = [c[0] for c in comps]
        if pairing == "star":
            pairs = [(reps[0], b) for b in reps[1:]]
        else:
            pairs = list(zip(reps, reps[1:]))
        rels.extend(BinomialRelation(a, b, n) for a, b in pairs)
    rels.sort(key=lambda rel: (rel.weight, factorization_key(rel.alpha), factorization_key(rel.beta)))
    if not lattice_rank_check(rels, S):
        raise BoundTooSmall(f"relations up to weight {bound} do not span a rank-{r - 1} lattice")
    return rels


def lattice_rank_check(relations, S: NumericalSemigroup) -> bool:
    """True iff the relation vectors span a lattice of rank r - 1."""
    if not relations:
        return False
    return kernels.integer_rank([rel.vector for rel in relations]) == S.embedding_dimension - 1
