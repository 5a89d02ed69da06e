"""Alternating purchase/adjustment sequences and their invoice totals.

The motivating story: a customer alternates purchases (prices from a set
A) with adjustments (surcharges or discounts from a set B, where 0 means
"no adjustment"), always starting and ending with a purchase.  The
invoice of such a sequence is its plain sum.  The set of achievable
invoice totals, together with 0, is a monoid that honours B as a
constraint set; in fact it is the smallest one containing A, which
verify_theorem5 checks numerically on a window.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .closure import IncentiveSpec, _profile_cap, _slack_profile, closure_msg, strip_zero
from .errors import InvalidModel, InvalidSequence, ValueOutOfRange
from .monoid import MAX_INPUT


@dataclass(frozen=True)
class SequenceModel:
    """Validated purchase prices (a_set) and adjustments (b_set).

    Rules: prices are positive and there is at least one; 0 is an
    adjustment (skipping the adjustment step is always allowed); and
    min(a_set) + min(b_set) >= 0, so no prefix of a sequence can owe the
    customer money.
    """

    a_set: tuple[int, ...]
    b_set: tuple[int, ...]

    def __post_init__(self) -> None:
        for name, vals in (("a_set", self.a_set), ("b_set", self.b_set)):
            if not isinstance(vals, tuple):
                object.__setattr__(self, name, tuple(vals))
        a, b = self.a_set, self.b_set
        for v in a + b:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidModel(f"model entries must be plain integers, got {v!r}")
            if abs(v) > MAX_INPUT:
                raise ValueOutOfRange(f"model entries are capped at 2**31, got {v}")
        if not a or a[0] < 1:
            raise InvalidModel("a_set needs at least one positive price")
        if any(x >= y for x, y in zip(a, a[1:])) or any(x >= y for x, y in zip(b, b[1:])):
            raise InvalidModel("model sets must be strictly increasing; use SequenceModel.of")
        if 0 not in b:
            raise InvalidModel("b_set must contain 0 (the no-adjustment step)")
        if a[0] + b[0] < 0:
            raise InvalidModel(
                f"min price {a[0]} plus min adjustment {b[0]} is negative; "
                "a two-step prefix could owe the customer money"
            )

    @classmethod
    def of(cls, a_set: Iterable[int], b_set: Iterable[int]) -> "SequenceModel":
        return cls(tuple(sorted(set(a_set))), tuple(sorted(set(b_set))))


def is_ab_sequence(model: SequenceModel, xs: Sequence[int]) -> bool:
    """Is xs an alternating purchase/adjustment sequence?

    Odd length, odd positions (1st, 3rd, ...) drawn from the prices, even
    positions from the adjustments.  The empty list has even length 0 and
    is not a sequence.
    """
    if len(xs) % 2 == 0:
        return False
    a = set(model.a_set)
    b = set(model.b_set)
    return all(v in (a if i % 2 == 0 else b) for i, v in enumerate(xs))


def invoice(model: SequenceModel, xs: Sequence[int]) -> int:
    """Sum of a valid sequence; rejects anything else with a 1-indexed diagnosis."""
    if len(xs) % 2 == 0:
        raise InvalidSequence(f"sequence length must be odd, got {len(xs)}")
    a = set(model.a_set)
    b = set(model.b_set)
    for i, v in enumerate(xs):
        pool, kind = (a, "price") if i % 2 == 0 else (b, "adjustment")
        if v not in pool:
            raise InvalidSequence(f"position {i + 1}: {v} is not a valid {kind}")
    return sum(xs)


def m_ab_membership(model: SequenceModel, n: int) -> bool:
    """Is n the invoice of some sequence (or 0)?

    A multiset of p prices and p - 1 adjustments can always be arranged
    alternately, so membership is a counting question: n must be a sum
    using exactly one more price than adjustments.  The reachability
    table accepts best slack >= 1, which is the same thing here because
    padding with the 0 adjustment lowers any larger slack to exactly 1.
    """
    if n < 0:
        return False
    if n == 0:
        return True
    shifts = tuple(v for v in model.b_set if v)
    profile = _slack_profile(model.a_set, shifts, _profile_cap(n))
    return profile[n] >= 1


def m_ab_set(model: SequenceModel, bound: int) -> list[int]:
    """All invoice totals in [0, bound], plus 0, ascending."""
    if bound < 0:
        return []
    shifts = tuple(v for v in model.b_set if v)
    profile = _slack_profile(model.a_set, shifts, _profile_cap(max(bound, 1)))
    return [0] + [v for v in range(1, bound + 1) if profile[v] >= 1]


def verify_theorem5(model: SequenceModel, bound: int) -> bool:
    """Check on [0, bound] that the invoice totals form the smallest closure.

    Compares m_ab_set against the membership of closure_msg(a_set, b_set
    minus zero); the two engines share no code beyond the model itself.
    """
    result = closure_msg(model.a_set, strip_zero(IncentiveSpec.of(model.b_set)))
    totals = set(m_ab_set(model, bound))
    closure_members = {v for v in range(bound + 1) if result.member(v)}
    return totals == closure_members
