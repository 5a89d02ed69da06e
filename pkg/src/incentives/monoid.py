"""Exact arithmetic for finitely generated submonoids of (N, +).

A submonoid is always described by a finite set of positive integer
generators.  Everything runs on plain Python integers and byte tables;
no floating point appears anywhere in the library.

Conventions:

* Generating sets are sorted, deduplicated, and strictly positive.  The
  trivial monoid {0} is deliberately not a GenSet; the few callers that
  can produce it (closure of an empty seed set, the divisor report) say
  so with an explicit marker instead of smuggling an empty list through.
* A numerical semigroup (gcd of the generators equal to 1, hence finite
  complement in N) carries its minimal generators, Frobenius number, gap
  set, and a membership table for [0, frobenius + 1].  For N itself the
  Frobenius number is -1 and the gap set is empty.
* Inputs are capped at 2**31 in absolute value so that sums of a handful
  of elements stay inside machine range wherever these values end up
  serialized or ported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import GcdNotOne, InternalInvariant, InvalidGenerators, ValueOutOfRange

MAX_INPUT = 2**31

# one-shot membership queries above this build the Frobenius-bounded
# table instead of a table up to n itself
_TABLE_CEILING = 1_000_000


def _check_ints(values: Iterable[int], what: str) -> None:
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidGenerators(f"{what} must be plain integers, got {v!r}")
        if abs(v) > MAX_INPUT:
            raise ValueOutOfRange(f"{what} are capped at 2**31 in magnitude, got {v}")


@dataclass(frozen=True)
class GenSet:
    """Sorted, deduplicated, non-empty positive generators of a submonoid.

    Use monoid_from_generators to normalize raw user input; constructing
    a GenSet directly requires the elements to be strictly increasing
    already.
    """

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.elements, tuple):
            object.__setattr__(self, "elements", tuple(self.elements))
        elems = self.elements
        if not elems:
            raise InvalidGenerators(
                "a generating set needs at least one element; "
                "the trivial monoid {0} is represented explicitly by its callers"
            )
        _check_ints(elems, "generators")
        if elems[0] < 1:
            raise InvalidGenerators(f"generators must be >= 1, got {elems[0]}")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise InvalidGenerators(
                "generators must be strictly increasing; "
                "use monoid_from_generators to sort and deduplicate"
            )

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "⟨" + ",".join(str(g) for g in self.elements) + "⟩"


def monoid_from_generators(gens: Iterable[int]) -> GenSet:
    """Sort, deduplicate, and validate raw generators."""
    elems = sorted(set(gens))
    if not elems:
        raise InvalidGenerators("at least one generator is required")
    return GenSet(tuple(elems))


def _as_genset(gens: GenSet | Iterable[int]) -> GenSet:
    return gens if isinstance(gens, GenSet) else monoid_from_generators(gens)


def gcd_of(gens: GenSet | Iterable[int]) -> int:
    """Greatest common divisor of the generators."""
    return math.gcd(*_as_genset(gens).elements)


def _member_table(elements: tuple[int, ...], limit: int) -> bytearray:
    """Coin-problem table: entry v is 1 iff v is a sum of the elements, 0 <= v <= limit.

    The elements must be sorted ascending.
    """
    table = bytearray(limit + 1)
    table[0] = 1
    for v in range(elements[0], limit + 1):
        for g in elements:
            if g > v:
                break
            if table[v - g]:
                table[v] = 1
                break
    return table


def membership(gens: GenSet | Iterable[int], n: int) -> bool:
    """Decide whether n is a non-negative combination of the generators.

    Negative n is never a member.  For generators with gcd d > 1 the
    question reduces to n/d against the divided generators (and is false
    outright when d does not divide n).
    """
    g = _as_genset(gens)
    if n < 0:
        return False
    if n == 0:
        return True
    d = gcd_of(g)
    elems = g.elements
    if d > 1:
        if n % d:
            return False
        n //= d
        elems = tuple(e // d for e in elems)
    if n < elems[0]:
        return False
    if n <= _TABLE_CEILING:
        return bool(_member_table(elems, n)[n])
    ns = numerical_semigroup(GenSet(elems))
    return n in ns


def msg(gens: GenSet | Iterable[int]) -> GenSet:
    """Minimal system of generators of the monoid the input generates.

    A generator survives iff it is not a sum of two non-zero members; the
    survivors are the unique minimal generating set.  Generators with a
    common divisor d are minimized at scale 1/d and scaled back, which
    keeps the tables small.
    """
    g = _as_genset(gens)
    elems = g.elements
    if len(elems) == 1:
        return g
    d = gcd_of(g)
    if d > 1:
        reduced = msg(GenSet(tuple(e // d for e in elems)))
        return GenSet(tuple(e * d for e in reduced.elements))
    table = _member_table(elems, elems[-1])
    keep = tuple(
        v
        for v in elems
        if not any(table[a] and table[v - a] for a in range(1, v // 2 + 1))
    )
    return GenSet(keep)


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    """A cofinite submonoid of (N, +): minimal generators plus gap data.

    member_table covers [0, frobenius + 1]; every larger integer is a
    member by definition of the Frobenius number.  For N itself the
    Frobenius number is -1 and the table is the single entry for 0.
    Equality and hashing go through the minimal generators, which
    determine the semigroup.
    """

    msg: GenSet
    frobenius: int
    gaps: tuple[int, ...]
    member_table: bytes

    def __post_init__(self) -> None:
        expect = self.gaps[-1] if self.gaps else -1
        if self.frobenius != expect:
            raise InternalInvariant(
                f"frobenius {self.frobenius} does not match gap set {self.gaps}"
            )
        if len(self.member_table) != self.frobenius + 2:
            raise InternalInvariant("member_table must cover [0, frobenius + 1]")
        zeros = tuple(v for v in range(len(self.member_table)) if not self.member_table[v])
        if zeros != self.gaps:
            raise InternalInvariant("member_table disagrees with the gap set")
        if set(self.msg.elements) & set(self.gaps):
            raise InternalInvariant("a minimal generator cannot be a gap")

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return bool(self.member_table[n])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.msg.elements == other.msg.elements

    def __hash__(self) -> int:
        return hash(self.msg.elements)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def multiplicity(self) -> int:
        return self.msg.elements[0]

    def elements_upto(self, bound: int) -> list[int]:
        """All members in [0, bound]."""
        return [v for v in range(bound + 1) if v in self]

    def __str__(self) -> str:
        return str(self.msg)


def numerical_semigroup(gens: GenSet | Iterable[int]) -> NumericalSemigroup:
    """Build the full numerical-semigroup record for gcd-1 generators.

    The membership table is grown until a run of multiplicity-many
    consecutive members appears; everything at or beyond that run is a
    member, so the last non-member before it is the Frobenius number.
    """
    g = _as_genset(gens)
    d = gcd_of(g)
    if d != 1:
        raise GcdNotOne(f"gcd of {g} is {d}; the complement in N is infinite")
    mg = msg(g)
    elems = mg.elements
    m = elems[0]
    if m == 1:
        return NumericalSemigroup(mg, -1, (), bytes((1,)))
    limit = 2 * elems[-1]
    while True:
        table = _member_table(elems, limit)
        streak = 0
        edge = None
        for v in range(limit + 1):
            if table[v]:
                streak += 1
                if streak == m:
                    edge = v - m + 1
                    break
            else:
                streak = 0
        if edge is not None:
            gaps = tuple(v for v in range(1, edge) if not table[v])
            frob = gaps[-1] if gaps else -1
            return NumericalSemigroup(mg, frob, gaps, bytes(table[: frob + 2]))
        limit *= 2
