"""Commuting-graph tree-numbers of Suzuki groups, by two routes.

Sz(q) itself is never built; its commuting graph is a join/union expression.
Run: python3 demos/suzuki_commuting_graphs.py
"""
import time

from grouptrees import spectra as sp
from grouptrees.suzuki import kappa_suzuki_closed, kappa_sylow_closed, suzuki_commuting_expr, suzuki_params, sylow_commuting_expr
from grouptrees.treecount import tree_number

s = suzuki_params(1)
print(s)
print("partition covers the group:", s.partition_total() == s.order)

# Sylow 2-subgroup for q = 8: 64 vertices, small enough for the matrix-tree route
g = sp.realize(sylow_commuting_expr(8))
print("Sylow q=8:", sp.spectrum(sylow_commuting_expr(8)), "->", kappa_sylow_closed(8),
      "matrix-tree agrees:", tree_number(g) == kappa_sylow_closed(8).value())

for n in range(1, 5):
    q = suzuki_params(n).q
    t0 = time.perf_counter()
    closed = kappa_suzuki_closed(q)
    spectral = sp.kappa_from_spectrum_factored(sp.spectrum(suzuki_commuting_expr(q)))
    print(f"q={q:4d} |G|={suzuki_params(n).order:>16d} agree={closed == spectral}"
          f" bits~{closed.bit_length_estimate():.3g} ({time.perf_counter() - t0:.3f}s)")
print("q=8:", kappa_suzuki_closed(8))
