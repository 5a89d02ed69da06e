"""Adjustment constraints and smallest-closure computations.

A constraint set C is a finite set of integer adjustments.  A submonoid M
of (N, +) honours C when s + t + c lands back in M for every pair of
non-zero members s, t and every c in C.  This module decides which seed
sets admit such a monoid at all and computes the smallest one two
independent ways:

* closure_msg runs a fixpoint on generating sets: adjoin every value
  (pair sum) + c for pair sums not seen before, re-minimize, and stop
  when the minimal generating set is stable;
* closure_membership runs a reachability dynamic program: n belongs to
  the closure iff n is a sum of seed elements and adjustments in which
  the seed elements strictly outnumber the adjustments.

The offset threshold theta = -min(C ∪ {0}) rules the geometry.  Every
monoid honouring C either lives inside {0, theta, theta+1, ...} or is
exactly the multiples of theta/2, and the multiples of theta/2 qualify
only when every adjustment is such a multiple with factor >= -2.  That
dichotomy is what is_admissible checks, and it makes the two outer
branches of closure_msg exclusive: a seed set with an element below the
threshold can only close up to the multiples of theta/2.

Zero adjustments are inert (dropped up front): a monoid honours C exactly
when it honours C minus {0}.  The constraint set {0} therefore becomes
the empty marker spec, under which every submonoid qualifies and the
closure of a seed set is just the monoid it generates.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import (
    InternalInvariant,
    InvalidGenerators,
    NotAdmissible,
    ValueOutOfRange,
)
from .monoid import (
    MAX_INPUT,
    GenSet,
    NumericalSemigroup,
    _as_genset,
    _member_table,
    monoid_from_generators,
    msg,
    numerical_semigroup,
)

# kinds of closure result
TRIVIAL = "trivial"
NUMERICAL = "numerical"
MULTIPLE = "multiple"

ITERATION_CAP = 10_000


@dataclass(frozen=True)
class IncentiveSpec:
    """A constraint set: sorted, deduplicated adjustments with the threshold cached.

    c_set may be empty only as the explicit "no constraint" marker
    produced by strip_zero; the of() factory used for user input rejects
    empty sets.
    """

    c_set: tuple[int, ...]
    theta: int = field(init=False)

    def __post_init__(self) -> None:
        if not isinstance(self.c_set, tuple):
            object.__setattr__(self, "c_set", tuple(self.c_set))
        cs = self.c_set
        for a, b in zip(cs, cs[1:]):
            if a >= b:
                raise InvalidGenerators("adjustments must be strictly increasing; use IncentiveSpec.of")
        for v in cs:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidGenerators(f"adjustments must be plain integers, got {v!r}")
            if abs(v) > MAX_INPUT:
                raise ValueOutOfRange(f"adjustments are capped at 2**31 in magnitude, got {v}")
        object.__setattr__(self, "theta", -min(cs + (0,)))

    @classmethod
    def of(cls, values: Iterable[int]) -> "IncentiveSpec":
        vals = tuple(sorted(set(values)))
        if not vals:
            raise InvalidGenerators("a constraint set needs at least one adjustment")
        return cls(vals)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.c_set) + "}"


def _as_spec(c: "IncentiveSpec | Iterable[int]") -> IncentiveSpec:
    return c if isinstance(c, IncentiveSpec) else IncentiveSpec.of(c)


def theta(c: IncentiveSpec | Iterable[int]) -> int:
    """Offset threshold of a constraint set: -min(C ∪ {0})."""
    return _as_spec(c).theta


def strip_zero(c: IncentiveSpec | Iterable[int]) -> IncentiveSpec:
    """Drop the inert zero adjustment; {0} becomes the no-constraint marker."""
    spec = _as_spec(c)
    return IncentiveSpec(tuple(v for v in spec.c_set if v != 0))


def _clean_seed(x_set: Iterable[int]) -> tuple[int, ...]:
    """Normalize a seed set: require non-negative integers, drop zeros."""
    xs = sorted(set(x_set))
    for v in xs:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidGenerators(f"seed elements must be plain integers, got {v!r}")
        if abs(v) > MAX_INPUT:
            raise ValueOutOfRange(f"seed elements are capped at 2**31, got {v}")
    if xs and xs[0] < 0:
        raise InvalidGenerators(f"seed elements must be non-negative, got {xs[0]}")
    return tuple(v for v in xs if v)


def is_incentive(gens: GenSet | Iterable[int], c: IncentiveSpec | Iterable[int]) -> bool:
    """Does the monoid generated by gens honour every adjustment?

    The pair test suffices: the monoid qualifies iff n_i + n_j + c stays a
    member for every pair of generators (i <= j) and every adjustment c.
    Any generating set works; a minimal one just makes fewer pairs.
    """
    g = _as_genset(gens)
    spec = _as_spec(c)
    if not spec.c_set:
        return True
    elems = g.elements
    limit = 2 * elems[-1] + max(spec.c_set[-1], 0)
    table = _member_table(elems, limit)
    for i, a in enumerate(elems):
        for b in elems[i:]:
            for cc in spec.c_set:
                v = a + b + cc
                if v < 0 or not table[v]:
                    return False
    return True


def half_theta_is_incentive(c: IncentiveSpec | Iterable[int]) -> bool:
    """Do the multiples of theta/2 honour the constraint set?

    True iff theta is even and positive and every adjustment is a multiple
    k * (theta/2) with k >= -2.  (Factors -2 and -1 are the only negative
    ones a sum of two members can absorb without leaving the multiples.)
    """
    spec = _as_spec(c)
    th = spec.theta
    if th == 0 or th % 2:
        return False
    half = th // 2
    return all(v % half == 0 and v // half >= -2 for v in spec.c_set)


def is_admissible(x_set: Iterable[int], c: IncentiveSpec | Iterable[int]) -> bool:
    """Is there any submonoid honouring the constraints that contains the seeds?

    Zeros in the seed set are ignored (0 is in every monoid).  The empty
    seed set is admissible: the trivial monoid {0} contains it.  Otherwise
    the seeds must lie at or above the threshold, or fit inside the
    multiples of theta/2 while those multiples themselves qualify.
    """
    spec = _as_spec(c)
    xs = _clean_seed(x_set)
    if not xs:
        return True
    th = spec.theta
    if xs[0] >= th:
        return True
    if not half_theta_is_incentive(spec):
        return False
    half = th // 2
    return all(v % half == 0 for v in xs)


@dataclass(frozen=True)
class ClosureResult:
    """Smallest monoid honouring the constraints and containing the seeds.

    kind is "trivial" (empty seed set, closure {0}), "numerical" (the
    closure has finite complement), or "multiple" (every element shares
    the factor scale > 1).  msg holds the minimal generators of the
    closure itself, already scaled; it is None only for the trivial kind.
    semigroup is the reduced gcd-1 semigroup, i.e. the closure divided by
    scale; for the numerical kind that is the closure itself.
    """

    kind: str
    scale: int
    msg: GenSet | None
    semigroup: NumericalSemigroup | None

    def member(self, n: int) -> bool:
        """Membership of n in the closure."""
        if self.kind == TRIVIAL:
            return n == 0
        if n < 0:
            return False
        if n % self.scale:
            return False
        return (n // self.scale) in self.semigroup


def closure_msg(
    x_set: Iterable[int],
    c: IncentiveSpec | Iterable[int],
    iteration_cap: int = ITERATION_CAP,
) -> ClosureResult:
    """Minimal generators of the smallest monoid honouring c that contains x_set.

    Dispatch order: empty seed set -> trivial; a seed below the threshold
    -> the multiples of theta/2 (the only candidate, by admissibility); a
    common divisor d of seeds and adjustments -> solve at scale 1/d and
    scale back; otherwise the generating-set fixpoint.  Each fixpoint
    round adjoins {pair sum + c} for previously unseen pair sums of the
    current minimal generators and re-minimizes; the round count is capped
    because a bound on rounds is not obvious, but in practice small seeds
    stabilize within a handful of rounds.
    """
    spec = strip_zero(_as_spec(c))
    xs = _clean_seed(x_set)
    if not is_admissible(xs, spec):
        raise NotAdmissible(f"no monoid honouring {spec} contains {set(xs)}")
    if not xs:
        return ClosureResult(TRIVIAL, 1, None, None)
    th = spec.theta
    if xs[0] < th:
        half = th // 2
        if half == 1:
            return ClosureResult(NUMERICAL, 1, GenSet((1,)), numerical_semigroup((1,)))
        return ClosureResult(MULTIPLE, half, GenSet((half,)), numerical_semigroup((1,)))
    d = math.gcd(*xs, *(abs(v) for v in spec.c_set))
    if d > 1:
        inner = closure_msg(
            tuple(x // d for x in xs),
            IncentiveSpec(tuple(v // d for v in spec.c_set)),
            iteration_cap,
        )
        if inner.kind != NUMERICAL:
            raise InternalInvariant("reduced closure must be numerical after dividing out the gcd")
        scaled = GenSet(tuple(g * d for g in inner.msg.elements))
        return ClosureResult(MULTIPLE, d, scaled, inner.semigroup)

    y = msg(GenSet(xs)).elements
    seen_sums: set[int] = set()
    for _ in range(iteration_cap):
        sums = {a + b for i, a in enumerate(y) for b in y[i:]}
        new_sums = sums - seen_sums
        z = set(y)
        for e in new_sums:
            for cc in spec.c_set:
                v = e + cc
                if v < 0:
                    raise InternalInvariant(
                        f"pair sum {e} plus adjustment {cc} went negative during closure"
                    )
                if v:
                    z.add(v)
        new_y = msg(monoid_from_generators(z)).elements
        if new_y == y:
            ns = numerical_semigroup(GenSet(y))
            if ns.msg.elements != y:
                raise InternalInvariant("fixpoint generators are not minimal")
            return ClosureResult(NUMERICAL, 1, ns.msg, ns)
        y = new_y
        seen_sums |= new_sums
    raise InternalInvariant(f"closure fixpoint did not stabilize within {iteration_cap} rounds")


# largest membership target answered by the reachability table; beyond it
# the generator engine is cheaper than a table of n entries
_DP_CEILING = 1_000_000


def _profile_cap(n: int) -> int:
    cap = 256
    while cap < n:
        cap *= 4
    return cap


@lru_cache(maxsize=128)
def _slack_profile(adds: tuple[int, ...], shifts: tuple[int, ...], cap: int) -> tuple[int, ...]:
    """Best slack (adds used minus shifts used) reachable at each value in [0, vmax].

    States are (value, slack); an add step moves to (v + x, k + 1), a
    shift step to (v + c, k - 1).  The table keeps only the maximum slack
    per value, which is enough: acceptance only asks whether some slack
    >= 1 reaches the target, and the maximum dominates every transition.
    Values are capped at cap + slack_cap * theta and slacks clamped to
    [-slack_cap, slack_cap]; any witness needs at most ceil(cap / min add)
    + 1 adds laid down before its shifts, so the windows lose nothing.
    Entries below -slack_cap mean unreachable.
    """
    th = -min(shifts + (0,))
    minx = adds[0]
    slack_cap = -(-cap // max(th, minx, 1)) + 1
    vmax = cap + slack_cap * th
    floor = -slack_cap
    unreachable = floor - 1
    f = [unreachable] * (vmax + 1)
    f[0] = 0
    queue = deque((0,))
    queued = bytearray(vmax + 1)
    queued[0] = 1
    while queue:
        v = queue.popleft()
        queued[v] = 0
        k = f[v]
        up = k + 1 if k < slack_cap else slack_cap
        for x in adds:
            w = v + x
            if w > vmax:
                break
            if up > f[w]:
                f[w] = up
                if not queued[w]:
                    queued[w] = 1
                    queue.append(w)
        down = k - 1
        if down >= floor:
            for cc in shifts:
                if cc == 0:
                    continue
                w = v + cc
                if 0 <= w <= vmax and down > f[w]:
                    f[w] = down
                    if not queued[w]:
                        queued[w] = 1
                        queue.append(w)
    return tuple(f)


def closure_membership(x_set: Iterable[int], c: IncentiveSpec | Iterable[int], n: int) -> bool:
    """Membership of n in the smallest closure, without computing generators.

    n (non-zero) belongs iff it is a sum of seed elements and adjustments
    with strictly more seed elements than adjustments; the reachability
    table from _slack_profile answers that directly.  Seeds below the
    threshold reduce to divisibility by theta/2, and a common divisor of
    seeds and adjustments is divided out first.
    """
    spec = strip_zero(_as_spec(c))
    xs = _clean_seed(x_set)
    if not is_admissible(xs, spec):
        raise NotAdmissible(f"no monoid honouring {spec} contains {set(xs)}")
    if n < 0:
        return False
    if n == 0:
        return True
    if not xs:
        return False
    th = spec.theta
    if xs[0] < th:
        return n % (th // 2) == 0
    cs = spec.c_set
    d = math.gcd(*xs, *(abs(v) for v in cs))
    if d > 1:
        if n % d:
            return False
        xs = tuple(x // d for x in xs)
        cs = tuple(v // d for v in cs)
        n //= d
    if n > _DP_CEILING:
        return closure_msg(xs, IncentiveSpec(cs)).member(n)
    profile = _slack_profile(xs, cs, _profile_cap(n))
    return profile[n] >= 1
