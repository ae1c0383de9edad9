"""Cyclic arc diagrams: the climb-and-jump walk and the inverse map."""

from affine_catalan import (
    a_numbering,
    build_diagram,
    c_sequence,
    chains_and_loops,
    collapse_period,
    coxeter_from_partition,
    ncad_c,
    select_order,
    tito_c,
)
from affine_catalan.render import render_ascii

c = coxeter_from_partition(10, {1, 4, 6, 8})
d = build_diagram(10, c, [(1, 6), (6, 8), (7, 15), (9, 12), (12, 13)])

print("Arcs record cover reflections, one class per translation orbit.")
print("diagram:", d)
print("chains and loops:", ", ".join(str(g) for g in chains_and_loops(d)))
print()
print(render_ascii(d))

print("From a point, climb to the top of its chain, jump to the nearest")
print("covering arc, repeat.  The walk is periodic modulo n here:")
for a in (2, 7):
    print(f"  from {a}: {c_sequence(d, a)}")
print("  period:", " ".join(str(t) for t in c_sequence(d, 2).period))
print()

print("The period picks one concrete representative per chain class:")
num = a_numbering(d, 2)
print("  numbering:", ", ".join(str(g) for g in num.chains))
print("  reading order:", " then ".join(str(g) for g in select_order(c, num.chains)))
print()

t = tito_c(d, 2)
print("Concatenating the supports, largest first, rebuilds the order:")
print("  tito_c =", "".join(str(b) for b in t.blocks))
print("  anchor independent:", all(tito_c(d, a) == t for a in range(1, 21)))
print("  its cover arcs again:", ncad_c(t, c) == d)
print()

print("Everything the period touches can be fused into one loop:")
collapsed = collapse_period(d, 2)
print("  collapsed diagram:", collapsed)
print("  pieces:", ", ".join(str(g) for g in chains_and_loops(collapsed)))

b = build_diagram(10, c, [(1, 10), (8, 12), (12, 13), (4, 6), (5, 7)])
print()
print("A walk with no descending jump splits the order into three blocks:")
print(f"  from 4: {c_sequence(b, 4)}")
print("  tito_c =", "".join(str(blk) for blk in tito_c(b, 4).blocks))
print("  anchor -1 gives other windows, same order:",
      "".join(str(blk) for blk in tito_c(b, -1).blocks))
