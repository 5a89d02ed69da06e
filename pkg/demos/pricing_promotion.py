# A running promotion at a shop: every item has a price from a fixed
# price list A, and between any two purchases the till applies one
# adjustment from a fixed list B (a surcharge, a rebate, or nothing).
# A receipt therefore alternates price, adjustment, price, ..., price,
# and the invoice is just the sum of the whole strip.
#
# The question this demo walks through: which invoice totals can ever
# show up?  It turns out the reachable totals form a monoid that we can
# describe exactly, without enumerating receipts.

from incentives import (
    SequenceModel,
    closure_msg,
    invoice,
    is_ab_sequence,
    m_ab_set,
    verify_theorem5,
    DomainError,
)

# Prices are 4 and 9; the till may knock 2 off between items or do
# nothing.  B must contain 0 (the "no adjustment" case) and no receipt
# may dip below zero, so min(A) + min(B) >= 0 is required.
model = SequenceModel(a_set=(4, 9), b_set=(-2, 0))
print("price list A =", model.a_set)
print("adjustments B =", model.b_set)
print()

# Some receipts.  Odd positions take prices, even positions take
# adjustments, and the strip has odd length.
receipts = [
    (4,),
    (4, -2, 4),
    (9, 0, 4, -2, 4),
    (4, -2, 9, -2, 9),
]
for xs in receipts:
    print(f"receipt {xs}: invoice = {invoice(model, xs)}")
print()

# A malformed strip is rejected with a position diagnostic.
bad = (4, 9, 4)
print(f"is {bad} a valid receipt?", is_ab_sequence(model, bad))
try:
    invoice(model, bad)
except DomainError as exc:
    print("invoice refused:", exc)
print()

# Every total reachable by some receipt, up to 40.
totals = m_ab_set(model, 40)
print("reachable invoice totals up to 40:")
print(" ", totals)
print()

# The structural fact: the totals together with 0 are exactly the
# smallest monoid that contains the price list and absorbs the nonzero
# adjustments.  We can compute that monoid directly from its generators.
closed = closure_msg(model.a_set, model.b_set)
print("smallest adjustment-closed monoid containing A:", closed.msg)
members = [n for n in range(41) if closed.member(n)]
print("its members up to 40:", members)
print("agrees with the receipt enumeration:", set(totals) | {0} == set(members))
print()

# The same comparison, packaged as a one-call check.
print("verified on [0, 200]:", verify_theorem5(model, 200))
