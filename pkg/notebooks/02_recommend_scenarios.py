"""
Recommending a code for a hardware scenario
===========================================
"""

# %%
from qecc_advisor.recommender import Scenario, effective_error_rate, recommend

scenarios = {
    "superconducting, 100 qubits": Scenario("superconducting", 100, 1, False, "bit-flip", 1e-4, 1e-3, 1e-2),
    "rydberg, 600 qubits, multi-qubit gates": Scenario("rydberg", 600, 2, True, "all-pauli", 1e-4, 1e-3, 1e-2),
    "simulation, 1500 qubits, noisy readout": Scenario("simulation", 1500, 5, False, "phase-flip", 1e-3, 1e-3, 1e-1),
}

# %%
for title, sc in scenarios.items():
    print(f"== {title}  (effective rate {effective_error_rate(sc):.3g})")
    for rec in recommend(sc, top_n=3):
        print(f"   {rec.code:14s} d={rec.max_distance.to_json()!s:>4}  score={rec.score:.3f}")

# %%
# The trace records why each code dropped out and at which stage.
result = recommend(scenarios["rydberg, 600 qubits, multi-qubit gates"])
for entry in result.trace:
    if entry.verdict == "eliminated":
        print(f"{entry.stage:14s} {entry.code:14s} {entry.reason}")

# %%
# Score breakdown of the winner.
best = result.recommendations[0]
for name, value in best.breakdown.items():
    print(f"{name:5s} {value:.3f}")
