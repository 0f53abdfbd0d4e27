"""Searching for power-free decompositions across small groups.

Run: python3 demos/power_free_decompositions.py
"""
from grouptrees.groups import build_group, catalog
from grouptrees.structure import classify_power_free, find_power_free_decomposition

G = build_group("Q:16")
dec = find_power_free_decomposition(G, 2)
print("Q16, 2 blocks: C =", dec.clique_part, "blocks =", dec.blocks)
print("Q16, 1 block:", find_power_free_decomposition(G, 1))

found = []
for spec in catalog(64):
    G = build_group(spec)
    if G.order < 2:
        continue
    v = classify_power_free(G)
    assert v.consistent, spec
    if v.has_1pfd:
        found.append(f"{spec}({v.predicted.value})")
print(len(found), "catalog groups admit a 1-decomposition:")
print("  " + "\n  ".join(found))
