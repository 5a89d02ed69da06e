# Closure under adjusted pair sums.  A submonoid M of the naturals is
# closed under a set C of adjustments when s + t + c lands back in M for
# all nonzero s, t in M and every c in C.  This demo shows the
# admissibility test (when does a seed set have a closure at all?) and
# the closure computation itself.

from incentives import (
    closure_membership,
    closure_msg,
    is_admissible,
    is_incentive,
    numerical_semigroup,
    theta,
    NotAdmissible,
)

C = (-3, 2)
print("adjustments C =", C)
print("theta(C) =", theta(C), " (the threshold: -min(C), floored at 0)")
print()

# A generating set can be tested pairwise: only generator pairs matter.
for gens in [(3, 7, 8), (5, 7, 9), (3,)]:
    print(f"is <{','.join(map(str, gens))}> closed under C?", is_incentive(gens, C))
print()

# Not every seed set sits inside some closed monoid.  Seeds at or above
# theta are always fine; seeds below theta only work in one special
# pattern (everything a multiple of theta/2, with theta even).
cases = [
    ((5, 7, 9, 11), (-3, 2)),
    ((3,), (-4,)),
    ((2, 8), (-4, 6)),
    ((2,), (-4, 7)),
]
for xs, cs in cases:
    print(f"is_admissible({set(xs)}, {set(cs)}) = {is_admissible(xs, cs)}")
print()

# The closure itself: smallest closed submonoid containing the seeds.
r = closure_msg({5, 7, 9, 11}, C)
print("closure of {5,7,9,11} under {-3,2}:")
print("  generators:", r.msg)
print("  kind:", r.kind)
sg = numerical_semigroup(r.msg)
print("  frobenius:", sg.frobenius, " genus:", sg.genus)
print("  members up to 20:", sg.elements_upto(20))
print()

# Seeds below the threshold, in the one admissible pattern: the closure
# snaps to all multiples of theta/2.
r2 = closure_msg({2, 8}, (-4, 6))
print("closure of {2,8} under {-4,6}:", r2.msg, "(kind:", r2.kind + ")")
print()

# When the seeds and adjustments share a common divisor d, the problem
# reduces: closure(d*X, d*C) = d * closure(X, C).
r3 = closure_msg({6}, (-6, 3))
print("closure of {6} under {-6,3}:")
print("  generators:", r3.msg, " kind:", r3.kind, " scale:", r3.scale)
print("  reduced problem's generators:", r3.semigroup.msg)
print()

# Membership queries do not require building the whole monoid.
big = 10**7 + 1
print(f"is {big} in the closure of {{5,7,9,11}} under {{-3,2}}?",
      closure_membership({5, 7, 9, 11}, C, big))
print("is 8 in it?", closure_membership({5, 7, 9, 11}, C, 8))
print()

# Inadmissible seeds raise instead of looping forever.
try:
    closure_msg({3}, (-4,))
except NotAdmissible as exc:
    print("closure_msg({3}, {-4}) raised:", exc)
