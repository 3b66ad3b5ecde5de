"""
Checking protection claims by brute force
=========================================
"""

# %%
from qecc_advisor.stabverify import (
    builtin_codes,
    check_correctability,
    in_stabilizer_group,
    min_distance,
    syndrome,
)

codes = builtin_codes()
for name, code in codes.items():
    print(f"{name:20s} n={code.n} generators={code.num_generators} logical={code.num_logical}")

# %%
for name, code in codes.items():
    print(f"{name:20s} {min_distance(code, 3)}   witness {min_distance(code, 3).witness}")

# %%
# The repetition code stops bit flips only; restricting to X errors shows it.
rep = codes["repetition-3"]
print(min_distance(rep, 3, "x"), "|", min_distance(rep, 3, "z"))

# %%
# Shor's code is degenerate: ZZ on one trio is invisible and harmless.
shor = codes["shor-9"]
print(syndrome(shor, "ZZIIIIIII"), in_stabilizer_group(shor, "ZZIIIIIII"))
print(check_correctability(shor, 1).to_dict())
