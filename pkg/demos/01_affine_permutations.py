"""Tour of the affine symmetric group: windows, products, inversions, cycles."""

from affine_catalan import (
    all_coxeter_elements,
    cover_reflections,
    coxeter_from_partition,
    cycle_decomposition,
    format_cycles,
    inversion_set,
    is_coxeter,
    parse_window,
    simple_reflection,
)

print("An affine permutation is a bijection of the integers that commutes")
print("with translation by n; the window [w(1),...,w(n)] pins it down.\n")

w = parse_window("[4,2,0]", 3)
print(f"w = {w}  (n = 3)")
print("one line around the window:", [w(k) for k in range(-2, 7)])
print("inverse:", w.inverse())
print("length (inversion count):", w.length())
print("inversions:", sorted(str(t) for t in inversion_set(w)))
print("covers (adjacent descents):", sorted(str(t) for t in cover_reflections(w)))
print()

print("Products read left to right but act right to left: s0*s1*s2 below.")
s = [simple_reflection(3, i).as_perm() for i in range(3)]
c_perm = s[0] * s[1] * s[2]
print("s0*s1*s2 =", c_perm)
print()

print("Cycles may shift their orbit by a multiple of n each turn:")
print("cycles of w:", format_cycles(cycle_decomposition(w)))
print()

print("A Coxeter element is one up-cycle and one down-cycle covering 1..n.")
c = coxeter_from_partition(10, {1, 4, 6, 8})
up, down = c.cycles()
print(f"partition {c} gives {up} {down}")
print("window:", c.perm)
print("recognized back from the window:", is_coxeter(c.perm))
print(f"count for n=4: {len(all_coxeter_elements(4))} (= 2^4 - 2)")
