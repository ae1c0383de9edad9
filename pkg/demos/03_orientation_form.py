"""The skew form that orients reflections, and alignment of inversion sets."""

from affine_catalan import (
    Reflection,
    coxeter_from_partition,
    is_c_aligned,
    omega_A1_pair,
    omega_reflections,
    omega_shared_index,
    parse_window,
    rank2_parabolic,
    root_of_reflection,
)

print("Each reflection owns a positive root over the simple roots a0..a(n-1).")
t = Reflection(6, 3, 13)
r = Reflection(6, 2, 11)
print(f"root of {t}: {root_of_reflection(t)}")
print(f"root of {r}: {root_of_reflection(r)}")
print()

c6 = coxeter_from_partition(6, {1, 2, 4})
print(f"Skew form for {c6}: value on the two roots above =",
      omega_reflections(c6, t, r))
print()

print("Reflections sharing one residue admit a closed form; it is always odd,")
print("so the orientation it induces never degenerates.")
c14 = coxeter_from_partition(14, {1, 4, 6, 7, 8, 13, 14})
for args in [(3, 11, 6, 12, 31), (2, 1, 14, 16, 0), (14, 5, 13, 18, 21)]:
    print(f"  shared-index{args} -> {omega_shared_index(c14, *args)}")
print()

print("Pairs sharing both residues span an infinite dihedral subgroup; the")
print("form on its canonical generators is 0 or +-2 by part membership:")
for i, j in [(4, 14), (4, 10), (11, 14)]:
    print(f"  ({i},{j}) -> {omega_A1_pair(c14, i, j)}")
print()

print("Rank-two subgroups classify by shared residues:")
fin = rank2_parabolic(Reflection(5, 1, 5), Reflection(5, 1, 7))
print("  one shared residue ->", fin.kind, "with reflections",
      [str(x) for x in fin.reflections()])
inf = rank2_parabolic(Reflection(4, 1, 2), Reflection(4, 2, 5))
print("  both residues shared ->", inf.kind, "generators",
      [str(x) for x in inf.canonical_generators])
print()

print("Alignment: every such subgroup must meet the inversion set in a")
print("segment compatible with the form's orientation.  It recovers")
print("sortability exactly:")
c10 = coxeter_from_partition(10, {1, 4, 6, 9})
for text in ["[0,1,4,3,9,6,5,8,7,12]", "[-2,0,3,4,5,9,6,11,7,12]"]:
    w = parse_window(text, 10)
    print(f"  {text}: aligned = {is_c_aligned(w, c10)}")
