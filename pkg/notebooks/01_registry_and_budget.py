"""
Code registry and qubit budgets
===============================

Walk through the shipped code records, evaluate overhead formulas and ask how
far each code can be pushed on a fixed number of physical qubits.
"""

# %%
import numpy as np

from qecc_advisor import load_registry, max_distance, overhead, physical_qubits

registry = load_registry()
for code in registry:
    print(f"{code.id:14s} n(d) = {code.overhead}   k = {code.k}   threshold = {code.threshold:g}")

# %%
# Overheads are exact rationals. Heavy-hexagon has a half-integral form, so
# the physical count per block is rounded up.
hh = registry.get("heavy-hexagon")
print(overhead(hh, 3), physical_qubits(hh, 3, 1))

# %%
# Largest distance per code for a few budgets, one logical qubit.
budgets = np.array([50, 100, 600, 1000, 5000])
for code in registry:
    row = [max_distance(code, int(b), 1).to_json() for b in budgets]
    print(f"{code.id:14s}", row)

# %%
# A distance-11 Bacon-Shor block needs more than a thousand qubits.
print(physical_qubits(registry.get("bacon-shor"), 11, 1))
