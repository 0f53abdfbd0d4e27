"""Tree-numbers of power graphs of a few small simple groups.

Run: python3 demos/power_graph_fingerprints.py
"""
import time

from grouptrees import build_group, factorize, power_graph, tree_number

for spec in ["PSL2:7", "A:5", "A:6"]:
    G = build_group(spec)
    g = power_graph(G)
    t0 = time.perf_counter()
    k = tree_number(g)
    print(f"{spec:7s} |G|={G.order:4d} edges={g.edge_count():6d}  kappa = {factorize(k)}"
          f"  ({time.perf_counter() - t0:.2f}s)")

# In A5 every involution generates a subgroup of order 2 and no element of
# order 4, 6 or 10 exists, so involutions hang off the identity as leaves.
A5 = build_group("A:5")
deg = power_graph(A5).degrees
print("A5 involution degrees:", sorted(set(deg[A5.elements_of_order(2)].tolist())))

# the modular route must land on the same integer
g = power_graph(build_group("PSL2:7"))
print("bareiss == modular:", tree_number(g) == tree_number(g, method="modular"))
