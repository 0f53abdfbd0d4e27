"""Universal vertices, independent sets and tree-number inequalities.

Run: python3 demos/inequalities_and_landmarks.py
"""
from grouptrees.groups import build_group
from grouptrees.structure import (
    check_extension_bound,
    check_subgroup_product_bound,
    coprime_witness,
    involution_set,
    kappa_power,
    power_equals_commuting,
    universal_vertices,
)

for spec in ["Z:12", "Z:8", "Q:8", "S:3", "A:4", "A:5"]:
    G = build_group(spec)
    r = universal_vertices(G)
    print(f"{spec:5s} universal={r.universal_set} ({r.classification.value})"
          f" involutions={len(involution_set(G))} witness={coprime_witness(G)} P=C:{power_equals_commuting(G)}")

Z6 = build_group("Z:6")
print("Z6 product bound:", check_subgroup_product_bound(Z6, [(0, 2, 4), (0, 3)]).to_json())
print("Z6 extension, m=6:", check_extension_bound(Z6, (0, 2, 4), 6).to_json())

# equality with every outside element an involution; only D18 is Frobenius here
for spec in ["D:18", "D:8"]:
    G = build_group(spec)
    H = tuple(sorted(G.cyclic_subgroup(1)))
    print(spec, check_extension_bound(G, H, 2).to_json())
print("kappa_P(D18) = kappa_P(Z9):", kappa_power(build_group("D:18")) == kappa_power(build_group("Z:9")))
