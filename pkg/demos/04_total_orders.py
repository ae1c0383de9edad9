"""Translation-invariant total orders: windows, blocks, chains, sortability."""

from affine_catalan import (
    affine_perm_of_tito,
    cover_reflections_tito,
    coxeter_from_partition,
    is_c_sortable_tito,
    maximal_descending_chains,
    parse_tito,
    parse_window,
    shape,
    tito_of_affine_perm,
)

print("A translation-invariant total order on the integers lists blocks:")
print("waxing blocks climb by n copy after copy, waning blocks descend.\n")

t = parse_tito("[1,2]~[3,0]", 4)
print("order [1,2]~[3,0] around the waning block:")
row = [7, 4, 3, 0, -1]
print("  " + " < ".join(str(x) for x in row), "(later copies sink)")
print("shape:", [(kind, sorted(res)) for kind, res in shape(t)])
print("covers:", sorted(str(x) for x in cover_reflections_tito(t)))
print("maximal descending chains:", maximal_descending_chains(t))
print()

print("A single waxing block is just an affine permutation:")
w = parse_window("[4,2,0]", 3)
t_w = tito_of_affine_perm(w)
print(f"{w} <-> {t_w} and back: {affine_perm_of_tito(t_w)}")
print()

print("Sortable orders have one waxing block, or up-part/waning/down-part")
print("blocks, with no forbidden pattern around any cover:")
c = coxeter_from_partition(10, {1, 4, 5, 6, 9})
examples = [
    "[9,6]~[18,11,5,10,4][3,2,7]",
    "[14,11,9,15,16,3,12,8,7,10]",
    "[5,4,6,1]~[17,10,9][3,2,8]",
    "[19,16]~[5,11,18,10,4][3,2,7]",
    "[5,4,6,1]~[7,0,-1][3,8,2]",
]
for text in examples:
    ok, witness = is_c_sortable_tito(parse_tito(text, 10), c)
    verdict = "sortable" if ok else f"not sortable, witness {witness}"
    print(f"  {text}: {verdict}")
