"""
Choquet versus concave integration
==================================

A capacity prices events without promising additivity.  Integrating a
function against one can be done two ways: slice the function into level
sets (Choquet) or shop for the best weighted family of events fitting
under it (concave).  The two agree exactly when the capacity is convex.
"""
from fractions import Fraction as F

from nonadd import (
    Capacity,
    SimpleFunction,
    StateSpace,
    balanced_cover,
    brute_force_cav_oracle,
    check_convex,
    choquet_integral,
    concave_integral,
    convexity_gap_witness,
)

# Two states, each worth 6/10 on its own, 1 together: strictly
# superadditive pieces that do not add up.
space = StateSpace(2, labels=("a", "b"))
v = Capacity(space, (F(0), F(6, 10), F(6, 10), F(1)))
print("capacity table:", {str(space.subset(m)): str(x) for m, x in enumerate(v.values)})

report = check_convex(v)
print("convex?", report.holds, "- violating pair:", tuple(space.subset(w) for w in report.witness))

# Integrate the constant function 1.
ones = SimpleFunction.constant(space, 1)
cho = choquet_integral(ones, v)
cav = concave_integral(ones, v)
print("\nchoquet integral of 1:", cho.value)
print("concave integral of 1:", cav.value)
print("concave witness (weight, event):",
      [(str(w), str(space.subset(m))) for w, m in cav.witness.terms])
print("dual certificate y:", [str(y) for y in cav.dual_witness])

# The gap is certified by the convexity violation itself.
g, gap = convexity_gap_witness(v, *report.witness)
print("\ngap on the witness function:", gap)

# An independent dual-vertex enumeration confirms the LP value.
print("brute-force oracle:", brute_force_cav_oracle(ones, v))

# The totally balanced cover absorbs the gap: covering changes nothing
# for concave integration, and covering twice changes nothing at all.
cover = balanced_cover(v)
print("\nbalanced cover:", {str(space.subset(m)): str(x) for m, x in enumerate(cover.values)})
print("cav against cover:", concave_integral(ones, cover).value)
print("cover is idempotent:", balanced_cover(cover).values == cover.values)
