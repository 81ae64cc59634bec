"""Numerical semigroups: membership, gaps, symmetry, End, Apéry sets, enumeration."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

from nsk import kernels
from nsk.errors import CapExceeded, EmptyInput, FullSemigroup, NotAMember, NotCoprime, NskError

DEFAULT_MAX_GENUS = 20


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup, stored as its membership table below the conductor.

    Every integer ``n >= conductor`` is a member; ``membership[n]`` answers
    for ``0 <= n < conductor``.
    """

    generators: tuple[int, ...]
    conductor: int
    membership: tuple[bool, ...] = field(repr=False)

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(n for n, m in enumerate(self.membership) if not m)

    @property
    def genus(self) -> int:
        return self.membership.count(False)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def is_hyperelliptic(self) -> bool:
        # genus 0 is declared non-hyperelliptic
        return self.genus > 0 and 2 in self

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def small_elements(self) -> list[int]:
        """Members in ``[0, conductor]``."""
        return [n for n in range(self.conductor + 1) if contains(self, n)]

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "gaps": list(self.gaps),
            "genus": self.genus,
            "frobenius": self.frobenius,
            "symmetric": is_symmetric(self),
        }

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def _minimal_generators(table, conductor):
    def member(n):
        return n >= conductor or table[n]

    m = next(n for n in range(1, conductor + 2) if member(n))
    gens = []
    for x in range(m, max(conductor + m, m + 1)):
        if not member(x):
            continue
        if not any(member(a) and member(x - a) for a in range(m, x // 2 + 1)):
            gens.append(x)
    return tuple(gens)


def from_generators(raw) -> NumericalSemigroup:
    """Build the semigroup generated by ``raw``, reducing to the minimal generators.

    >>> from_generators([4, 5, 6, 9]).generators
    (4, 5, 6)
    """
    raw = [int(a) for a in raw]
    if not raw:
        raise EmptyInput("at least one generator is required")
    if any(a <= 0 for a in raw):
        raise NskError(f"generators must be positive integers, got {raw}")
    if math.gcd(*raw) != 1:
        raise NotCoprime(f"gcd{tuple(raw)} = {math.gcd(*raw)} != 1")
    table, conductor = kernels.membership_table(sorted(set(raw)))
    return NumericalSemigroup(
        generators=_minimal_generators(table, conductor),
        conductor=conductor,
        membership=tuple(table),
    )


def from_gaps(gaps, check: bool = True) -> NumericalSemigroup:
    """Build a semigroup from its gap set.

    With ``check`` the complement is verified to be additively closed.
    """
    gaps = sorted(set(int(n) for n in gaps))
    if gaps and gaps[0] <= 0:
        raise NskError("gaps must be positive")
    conductor = gaps[-1] + 1 if gaps else 0
    gapset = set(gaps)
    table = tuple(n not in gapset for n in range(conductor))
    members = [n for n in range(1, conductor) if table[n]] if check else []
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b in gapset:
                raise NskError(f"{a} + {b} = {a + b} is listed as a gap")
    return NumericalSemigroup(
        generators=_minimal_generators(table, conductor),
        conductor=conductor,
        membership=table,
    )


def contains(S: NumericalSemigroup, n: int) -> bool:
    if n < 0:
        return False
    if n >= S.conductor:
        return True
    return S.membership[n]


def is_symmetric(S: NumericalSemigroup) -> bool:
    """True iff F = 2g - 1. The genus-0 semigroup counts as symmetric."""
    if S.genus == 0:
        return True
    return S.frobenius == 2 * S.genus - 1


def apery_set(S: NumericalSemigroup, m: int) -> list[int]:
    """Least member of each residue class mod ``m``, indexed by residue."""
    if m <= 0 or not contains(S, m):
        raise NotAMember(f"{m} is not a positive member of {S}")
    out = [-1] * m
    found = 0
    n = 0
    while found < m:
        if out[n % m] < 0 and contains(S, n):
            out[n % m] = n
            found += 1
        n += 1
    return out


@dataclass(frozen=True)
class EndData:
    """``extra`` holds the elements of End(S) that are not in S."""

    extra: tuple[int, ...]

    @property
    def lambda_(self) -> int:
        return len(self.extra)


def end_semigroup(S: NumericalSemigroup) -> EndData:
    """Non-members ``n`` with ``n + s`` in S for every nonzero member ``s``.

    Only ``s`` in ``(0, conductor]`` are tested; larger ``s`` follow from
    additive closure.
    """
    if S.genus == 0:
        raise FullSemigroup("End(N) is N itself; lambda = 0")
    members = [s for s in range(1, S.conductor + 1) if contains(S, s)]
    extra = tuple(
        n for n in S.gaps if all(contains(S, n + s) for s in members)
    )
    return EndData(extra)


def lambda_invariant(S: NumericalSemigroup) -> int:
    """|End(S) \\ S|, with the value 0 for the full semigroup."""
    if S.genus == 0:
        return 0
    return end_semigroup(S).lambda_


def in_end(S: NumericalSemigroup, n: int) -> bool:
    """Membership of ``n`` in End(S) (which contains S)."""
    if n < 0:
        return False
    if contains(S, n):
        return True
    return all(contains(S, n + s) for s in range(1, S.conductor + 1) if contains(S, s))


def max_genus() -> int:
    value = os.environ.get("NSK_MAX_GENUS")
    return int(value) if value else DEFAULT_MAX_GENUS


def enumerate_by_genus(g: int, symmetric: bool = False, non_hyperelliptic: bool = False,
                       cap: int | None = None) -> list[NumericalSemigroup]:
    """Every semigroup of genus ``g``, optionally filtered, ordered by gap set."""
    cap = max_genus() if cap is None else cap
    if g < 0:
        raise NskError("genus must be nonnegative")
    if g > cap:
        raise CapExceeded(f"genus {g} exceeds the enumeration cap {cap} (set NSK_MAX_GENUS)")
    out = []
    for gaps in sorted(kernels.gap_sets_by_genus(g)):
        # symmetric means the largest gap is 2g - 1; cheap to test before building
        if symmetric and g > 0 and gaps[-1] != 2 * g - 1:
            continue
        if non_hyperelliptic and g > 0 and 2 not in gaps:
            continue
        out.append(from_gaps(gaps, check=False))
    return out
