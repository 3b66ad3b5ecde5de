"""
Benchmark datasets
==================

Produce the overhead, threshold, radar and logical-error-rate tables as CSV.
"""

# %%
import io

import numpy as np

from qecc_advisor import load_registry
from qecc_advisor.benchdata import (
    LERModel,
    export,
    ler_series,
    overhead_series,
    radar_data,
    required_distance_series,
    threshold_series,
)

registry = load_registry()

# %%
buf = io.StringIO()
export(overhead_series(registry, ["surface", "color", "heavy-hexagon", "bacon-shor"], range(3, 12, 2)), "csv", buf)
print(buf.getvalue())

# %%
buf = io.StringIO()
export(threshold_series(registry), "csv", buf)
print(buf.getvalue().splitlines()[:10])

# %%
radar = radar_data(registry)
for axis in radar.axes:
    print(f"{axis.name:12s}", {c: round(p, 2) for c, p in axis.positions.items()})

# %%
model = LERModel()
ps = np.logspace(-4, np.log10(model.p_th), 6).tolist()
for series in ler_series(model, ps, [3, 7, 11]):
    print(series.label, [f"{y:.1e}" for _, y in series.points])

# %%
for series in required_distance_series(model, ps[:-1], [1e-6, 1e-12]):
    print(series.label, series.points)
