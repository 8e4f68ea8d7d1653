"""
Convergence modes and where monotone convergence breaks
=======================================================

Weak almost-everywhere convergence ignores a null divergence set; strong
convergence demands full capacity inside every event.  The two notions
coincide exactly for null-additive capacities, and the constructive
counterexample below shows what goes wrong otherwise: the integrals of
the sequence stall strictly below the integral of the limit.
"""
from fractions import Fraction as F

from nonadd import (
    Capacity,
    StateSpace,
    check_null_additive,
    converges_strong_ae,
    converges_weak_ae,
    counterexample_null_additivity,
    monotone_convergence_experiment,
)

# v gives state b nothing on its own, yet b changes the value of unions.
space = StateSpace(2, labels=("a", "b"))
v = Capacity(space, (F(0), F(1, 2), F(0), F(1)))

report = check_null_additive(v)
print("null-additive?", report.holds)
e, f = report.witness
print("witness: E =", space.subset(e), "F =", space.subset(f))

# The canonical separating sequence: constant at 1_F, aiming at 1_{F|E}.
seq = counterexample_null_additivity(v, e, f)
print("\nweak  convergence:", converges_weak_ae(seq, v).holds)
print("strong convergence:", converges_strong_ae(seq, v).holds)

exp = monotone_convergence_experiment(seq, v)
print("\nintegral trace:", [str(x) for x in exp.integral_trace])
print("integral of the limit:", exp.limit_integral)
print("monotone convergence holds?", exp.holds)
