# Asynchronous approximation
#
# Here a window may be used at any time once the first l symbols are in
# place, so the approximation is a plain FSM. It is never smaller than the
# synchronous one.

from alca import (
    equivalent,
    includes,
    is_async_l_complete,
    minimal_l,
    strongest_async,
    strongest_sync,
)
from alca.fixtures import load

m = load("fig5")

for l in range(4):
    a = strongest_async(m, l)
    s = strongest_sync(m, l)
    print(f"l={l}: {a.kind} with {len(a.states)} states,"
          f" sync inside async: {includes(a, s).holds},"
          f" async {l}-complete: {is_async_l_complete(m, l).holds}")

# At l=2 the piece aaa can be laid down again later, so aaaa... slips in.
v = equivalent(m, strongest_async(m, 2))
print("extra word at l=2:", v.witness.text(m.alphabet))

print("least l:", minimal_l(m, "async", 5))

# At l=3 the construction gives back the original machine, state for state.
print(strongest_async(m, 3) == m)
