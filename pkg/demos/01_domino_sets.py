# Domino sets of a small behavior
#
# The bundled machine `fig5` accepts four infinite words over {a, b}:
#
#     aaab(aab)^w   aab(aab)^w   ab(aab)^w   b(aab)^w
#
# A domino of size l+1 is any window w[t..t+l] that some accepted word
# shows at time t. Printing them for a few l shows how much local
# information the behavior carries.

# %%
from alca import domino_profile, domino_union, restrict
from alca.fixtures import load

m = load("fig5")
print(m)

# %%
# Windows of length 2 look the same at every time.
for l in (1, 2, 3):
    p = domino_profile(m, l)
    print(f"l={l}")
    for t, ws in enumerate(p.prefix_sets):
        print(f"  t={t}:", " ".join(ws.texts(m.alphabet)))
    for i, ws in enumerate(p.cycle_sets):
        print(f"  t>={p.start + i} (period {p.period}):", " ".join(ws.texts(m.alphabet)))

# %%
# With length 3 the window aaa only occurs at the very start. The union
# over all times forgets that.
print(sorted("".join(w) for w in domino_union(m, 2)))
print(sorted("".join(w) for w in restrict(m, 1, 3)))

# An empty interval restricts to the empty word.
print(restrict(m, 5, 4).texts(m.alphabet))
