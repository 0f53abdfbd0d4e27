"""Counting spanning trees from an expression instead of a matrix.

Run: python3 demos/spectral_shortcuts.py
"""
from grouptrees import build_group, power_graph, tree_number
from grouptrees.spectra import kappa_from_spectrum, parse_expr, realize, spectrum

for text in ["E(2) * E(3)", "K(2) * E(3)", "K(3) * (K(2) + K(1))", "K(1) * (E(15) + 10 x K(2) + 6 x K(4))"]:
    e = parse_expr(text)
    s = spectrum(e)
    print(f"{text:40s} n={e.vertex_count:3d}  spectrum {s}  kappa {kappa_from_spectrum(s)}")

# the third expression is P(Z6); compare against the group itself
print("P(Z6) directly:", tree_number(power_graph(build_group("Z:6"))))

# spectra have no size limit, realization does
big = parse_expr("1000 x K(100) * K(1)")
print("vertices:", big.vertex_count, "zero multiplicity:", spectrum(big).zero_multiplicity)
try:
    realize(big)
except ValueError as exc:
    print("realize:", exc)
