# Synchronous approximation and the completeness test
#
# strongest_sync(m, l) builds the smallest behavior that contains m and is
# decided by windows of length l+1 read at the right time. The state is
# the last l symbols; guards remember *when* a window is allowed.

# %%
from alca import is_sync_l_complete, lasso_member, minimal_l, strongest_sync
from alca.fixtures import load
from alca.io import export_dot, serialize_machine

m = load("fig5")

q1 = strongest_sync(m, 1)
q2 = strongest_sync(m, 2)
print(q1, "/", q2)

# %%
# Only one transition of q2 carries a time guard: the aa loop, which may
# fire at t=2 only.
for tr in q2.transitions:
    if not tr.guard.is_all:
        print(tr.src, tr.symbol, tr.dst, "at", tr.guard)

# %%
r1 = is_sync_l_complete(m, 1)
print("1-complete:", r1.holds)
print("word accepted by q1 but not by m:", r1.witness.text(m.alphabet))
assert lasso_member(q1, r1.witness) and not lasso_member(m, r1.witness)

print("2-complete:", is_sync_l_complete(m, 2).holds)
print("least l:", minimal_l(m, "sync", 5))

# %%
# The canonical file form and a Graphviz rendering.
print(serialize_machine(q2).decode()[:200], "...")
print(export_dot(q2).decode())
