"""Three routes to the same predicate: is this window sortable?"""

from affine_catalan import (
    c_sorting_word,
    coxeter_from_partition,
    forbidden_inversion_witness,
    is_c_sortable_def,
    is_c_sortable_pattern,
    parse_window,
    simple_reflection,
)

c = coxeter_from_partition(3, {1, 2})
s = [simple_reflection(3, i).as_perm() for i in range(3)]
w = s[0] * s[1] * s[2] * s[1]

print("Route 1: greedily thread the element through repetitions of a fixed")
print("word for the Coxeter element; sortable means the letters used in each")
print("copy nest into the previous copy.\n")
sw = c_sorting_word(w, c)
print(f"w = {w}, letters {sw.letters}, slots per copy {sw.copies()}")
print("sortable:", sw.is_sortable(), "\n")

print("Route 2: scan the window for a descent k > i with a value j between")
print("them on the wrong side (an up-part j trailing i, or a down-part j")
print("leading k).  One window suffices.\n")
c10 = coxeter_from_partition(10, {1, 4, 6, 9})
sigma1 = parse_window("[0,1,4,3,9,6,5,8,7,12]", 10)
sigma2 = parse_window("[-2,0,3,4,5,9,6,11,7,12]", 10)
for sigma in (sigma1, sigma2):
    ok, witness = is_c_sortable_pattern(sigma, c10)
    print(f"{sigma}: {'sortable' if ok else f'forbidden pattern {witness}'}")
print()

print("Route 3: a finite list of membership conditions on the inversion set.")
for sigma in (sigma1, sigma2):
    tag = forbidden_inversion_witness(sigma, c10)
    print(f"{sigma}: condition {tag}")
print()

print("All three agree (the definitional route shown for comparison):")
print("sigma1:", is_c_sortable_def(sigma1, c10), " sigma2:", is_c_sortable_def(sigma2, c10))
