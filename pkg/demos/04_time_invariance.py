# Shifts and time invariance
#
# shift(m) drops the first symbol of every word. A behavior is time
# invariant when shifting stays inside it, strictly so when it gives the
# same behavior back.

from alca import Lasso, is_strictly_time_invariant, is_time_invariant, lasso_member, shift
from alca import strongest_sync
from alca.fixtures import load

m = load("fig5")
sm = shift(m)
for text in ("aab;aab", "ab;aab", "b;aab", ";aab", "aaab;aab"):
    prefix, cycle = text.split(";")
    print(f"{text:10} in shift(m): {lasso_member(sm, Lasso(tuple(prefix), tuple(cycle)))}")

print("time invariant:", is_time_invariant(m).holds)
v = is_strictly_time_invariant(m)
print("strictly:", v.holds, "witness", v.witness.text(m.alphabet))

# The 1-window approximation forgets the start and becomes strictly
# invariant.
print("approximation strictly invariant:", is_strictly_time_invariant(strongest_sync(m, 1)).holds)

# Two machines with guards on the first step.
for name in ("example5_p", "example5_q"):
    r = is_time_invariant(load(name))
    print(name, r.holds, r.witness.text(("a", "b")) if r.witness else "")
