"""Noncrossing partitions below a Coxeter element, and the full bijection."""

from affine_catalan import (
    absolute_leq_oracle,
    build_diagram,
    coxeter_from_partition,
    cycles_as_perm,
    diagram_of_nc,
    elementary_divisor,
    is_c_noncrossing,
    nc_of_diagram,
    nc_tilde,
    ncad_c,
    parse_cycles,
    parse_tito,
    reading_nc,
    simple_reflection,
    tito_of_affine_perm,
)

c4 = coxeter_from_partition(4, {1, 2, 3})

print("Each orbit owns one distinguished cycle (its elementary divisor):")
print("  up part {3}, down part {4}, around the annulus:",
      [str(x) for x in elementary_divisor(c4, [3], [4], pseudo=True)])
print("  embedded orbit {1,6,8} at n=10:",
      [str(x) for x in elementary_divisor(coxeter_from_partition(10, {1, 4, 6, 8}), [1, 6, 8], [])])
print()

print("Membership below the Coxeter element = divisor cycles + pairwise")
print("noninterleaving orbits.  The annulus example at n=10:")
c_ann = coxeter_from_partition(10, {2, 4, 6, 8, 9, 10})
sigma = cycles_as_perm(parse_cycles("(-1,2)(1,-3,-5)(4,8)[+1](3)[-1]", 10), 10)
print(f"  sigma = {sigma}: noncrossing = {is_c_noncrossing(sigma, c_ann)}")
bad = cycles_as_perm(parse_cycles("(1,3)(2,8)", 4), 4)
print(f"  interleaved (1,3)(2,8) at n=4: {is_c_noncrossing(bad, c4)}")
print()

print("An independent check: lengths in reflection generators must add up.")
print("  oracle on the bad pair:", absolute_leq_oracle(bad, c4))
print("  oracle on a simple reflection:",
      absolute_leq_oracle(simple_reflection(4, 1).as_perm(), c4))
print()

print("Chains of an arc diagram map to divisors (loop -> annular divisor):")
c10 = coxeter_from_partition(10, {1, 4, 6, 8})
d = build_diagram(10, c10, [(1, 6), (6, 8), (7, 15), (9, 12), (12, 13)])
x = nc_of_diagram(d)
print(f"  {d}  ->  {x}")
print("  and back:", diagram_of_nc(x) == d)
print()

print("The full chain: a sortable order -> its cover arcs -> a noncrossing")
print("partition, in one step via the divisor construction:")
t = parse_tito("[1,2]~[3,0]", 4)
y = nc_tilde(t, c4)
print(f"  {t} -> {y} (window {y.perm})")
print("  same through the diagram:", nc_of_diagram(ncad_c(t, c4)) == y)
print()

print("On sortable permutations this is the classical sorting-word map:")
c3 = coxeter_from_partition(3, {1, 2})
s = [simple_reflection(3, i).as_perm() for i in range(3)]
w = s[0] * s[1] * s[2] * s[1]
print(f"  w = {w}: map images agree =",
      nc_tilde(tito_of_affine_perm(w), c3) == reading_nc(w, c3))
