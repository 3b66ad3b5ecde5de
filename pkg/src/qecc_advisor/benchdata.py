"""Benchmark datasets: overhead curves, thresholds, radar axes, logical error rates.

Everything here produces plain data (no plotting) that can be written as CSV or
JSON with :func:`export`.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Optional, Sequence, Union

from .registry import (
    COMPLEXITY_LEVELS,
    CodeSpec,
    Protection,
    Registry,
    Transversal,
    overhead,
)

__all__ = [
    "CurveSeries",
    "ThresholdSeries",
    "RadarAxis",
    "RadarAxes",
    "LERModel",
    "REFERENCE_ERROR_RATE",
    "overhead_series",
    "threshold_series",
    "radar_data",
    "logical_error_rate",
    "required_distance",
    "ler_series",
    "required_distance_series",
    "export",
]

#: Average error rate of an uncorrected machine, drawn as a reference line.
REFERENCE_ERROR_RATE = 1e-3


@dataclass(frozen=True)
class CurveSeries:
    label: str
    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        pts = tuple((x, y) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        xs = [x for x, _ in pts]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError(f"series {self.label!r}: x values must be strictly increasing")

    def to_dict(self) -> dict:
        return {"label": self.label, "points": [[x, y] for x, y in self.points]}


@dataclass(frozen=True)
class ThresholdSeries:
    """Categorical series: one threshold per code plus a constant reference."""

    entries: tuple[tuple[str, float], ...]
    reference: float = REFERENCE_ERROR_RATE

    def to_dict(self) -> dict:
        return {
            "label": "threshold",
            "entries": [{"code": c, "threshold": t} for c, t in self.entries],
            "reference": self.reference,
        }


@dataclass(frozen=True)
class RadarAxis:
    name: str
    categories: tuple[str, ...]
    indices: dict[str, int]

    def position(self, code_id: str) -> float:
        return self.indices[code_id] / (len(self.categories) - 1)

    @property
    def positions(self) -> dict[str, float]:
        return {code: self.position(code) for code in self.indices}

    def to_dict(self) -> dict:
        return {
            "axis": self.name,
            "categories": list(self.categories),
            "codes": {c: {"category": self.categories[i], "position": self.position(c)} for c, i in self.indices.items()},
        }


@dataclass(frozen=True)
class RadarAxes:
    axes: tuple[RadarAxis, ...]

    def __getitem__(self, name: str) -> RadarAxis:
        for axis in self.axes:
            if axis.name == name:
                return axis
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"axes": [a.to_dict() for a in self.axes]}


# ---------------------------------------------------------------------------
# overhead and threshold data


def overhead_series(registry: Registry, code_ids: Iterable[str], d_range: Iterable[int]) -> list[CurveSeries]:
    """Physical qubits per block, rounded up, against distance.

    Fixed-distance codes contribute a single point at their own distance.
    """
    d_values = sorted(set(d_range))
    out = []
    for code_id in code_ids:
        code = registry.get(code_id)
        dom = code.distance_domain
        ds = [dom.value] if dom.is_fixed else d_values
        out.append(CurveSeries(code.id, tuple((d, math.ceil(overhead(code, d))) for d in ds)))
    return out


def threshold_series(registry: Registry) -> ThresholdSeries:
    return ThresholdSeries(tuple((c.id, c.threshold) for c in registry))


# ---------------------------------------------------------------------------
# radar axes

THRESHOLD_LEVELS = (1.9e-3, 0.01, 0.018, 0.045, 0.2, 0.3)
DECODING_LEVELS = ("classical", "1", "2", "5", "10+")
REALIZATION_LEVELS = ("none", "1", "2", "3", "6")

# decoders that are just the code's own syndrome circuit
CIRCUIT_DECODERS = frozenset({"cnot-hadamard-circuit"})

_PROTECTION_LEVELS = {
    Protection.BIT_FLIP_ONLY: 0,
    Protection.ARBITRARY_SINGLE: 1,
    Protection.DETECT_TWO_CORRECT_ONE: 2,
    Protection.ALL_PAULI: 3,
}

_TRANSVERSAL_LEVELS = {
    Transversal.NONE: 0,
    Transversal.CLIFFORD: 1,
    Transversal.TELEPORTATION: 2,
    Transversal.LATTICE_SURGERY: 3,
    Transversal.TPG_LATTICE_SURGERY: 3,
}


class RadarMappingError(ValueError):
    def __init__(self, code_id: str, axis: str, detail: str):
        self.code_id = code_id
        self.axis = axis
        super().__init__(f"code {code_id!r} cannot be placed on the {axis!r} axis: {detail}")


def _floor_level(value: float, levels: Sequence[float]) -> Optional[int]:
    """Index of the largest level <= value (with a small relative slack)."""
    best = None
    for i, level in enumerate(levels):
        if value >= level * (1 - 1e-9):
            best = i
    return best


def _overhead_index(code: CodeSpec) -> int:
    formula = code.overhead
    degree = formula.degree
    if degree == 0:
        value = Fraction(formula.numerator[0], formula.denominator)
        if value == 7:
            return 0
        if value == 9:
            return 1
        raise RadarMappingError(code.id, "overhead", f"constant {value} is not one of 7, 9")
    if 1 <= degree <= 3:
        return degree + 1
    raise RadarMappingError(code.id, "overhead", f"polynomial degree {degree} has no category")


def _decoding_index(code: CodeSpec) -> int:
    names = set(code.decoders)
    if names and names <= CIRCUIT_DECODERS:
        return 0
    count = len(names - CIRCUIT_DECODERS)
    level = _floor_level(count, [1, 2, 5, 10])
    if level is None:
        raise RadarMappingError(code.id, "decoding", "no decoders listed")
    return level + 1


def _realization_index(code: CodeSpec) -> int:
    count = code.hardware_realizations
    return 0 if count == 0 else _floor_level(count, [1, 2, 3, 6]) + 1


def radar_data(registry: Registry) -> RadarAxes:
    """Place every code on each of the eight benchmark axes.

    Positions run from 0 at the first listed category to 1 at the last.
    """
    axes = {
        "overhead": (("7", "9", "d", "d^2", "d^3"), _overhead_index),
        "threshold": (tuple(f"{t:g}" for t in THRESHOLD_LEVELS), None),
        "protection": (
            ("bit-flip", "two-qubit errors", "detect two or correct one", "all pauli"),
            lambda c: _PROTECTION_LEVELS[c.protection],
        ),
        "decoding": (DECODING_LEVELS, _decoding_index),
        "transversal": (("none", "clifford", "teleportation", "lattice surgery"), lambda c: _TRANSVERSAL_LEVELS[c.transversal]),
        "scalability": (("no", "yes"), lambda c: int(c.scalable)),
        "realization": (REALIZATION_LEVELS, _realization_index),
        "complexity": (COMPLEXITY_LEVELS, lambda c: c.complexity - 1),
    }

    def threshold_index(code):
        level = _floor_level(code.threshold, THRESHOLD_LEVELS)
        if level is None:
            raise RadarMappingError(code.id, "threshold", f"{code.threshold} is below {THRESHOLD_LEVELS[0]}")
        return level

    out = []
    for name, (categories, index_of) in axes.items():
        index_of = index_of or threshold_index
        out.append(RadarAxis(name, categories, {code.id: index_of(code) for code in registry}))
    return RadarAxes(tuple(out))


# ---------------------------------------------------------------------------
# surface-code logical error rates


_REL_TOL = 1e-9


@dataclass(frozen=True)
class LERModel:
    """``p_L = A * (p / p_th) ** floor((d + 1) / 2)``, capped at 1."""

    p_th: float = 0.018
    prefactor: float = 0.1

    def __post_init__(self):
        if not self.prefactor > 0:
            raise ValueError("prefactor must be positive")
        if not (0 < self.p_th < 1):
            raise ValueError("p_th must lie in (0, 1)")


def logical_error_rate(model: LERModel, p: float, d: int) -> float:
    if d < 2:
        raise ValueError("d must be >= 2")
    if p <= 0:
        raise ValueError("p must be positive")
    return min(1.0, model.prefactor * (p / model.p_th) ** ((d + 1) // 2))


def required_distance(model: LERModel, p: float, target: float, d_max: int = 101) -> Optional[int]:
    """Smallest odd ``d >= 3`` reaching ``target``; None if no ``d <= d_max`` does."""
    if not (0 < target < 1):
        raise ValueError("target must lie in (0, 1)")
    if d_max < 3:
        raise ValueError("d_max must be >= 3")
    if p >= model.p_th:
        return None
    for d in range(3, d_max + 1, 2):
        # relative slack absorbs rounding in the power, e.g. 0.1 * 0.1**8 vs 1e-9
        if logical_error_rate(model, p, d) <= target * (1 + _REL_TOL):
            return d
    return None


def ler_series(model: LERModel, p_values: Iterable[float], distances: Iterable[int]) -> list[CurveSeries]:
    ps = sorted(set(p_values))
    return [
        CurveSeries(f"d={d}", tuple((p, logical_error_rate(model, p, d)) for p in ps))
        for d in distances
    ]


def required_distance_series(
    model: LERModel, p_values: Iterable[float], targets: Iterable[float], d_max: int = 101
) -> list[CurveSeries]:
    """Required distance against physical rate, one series per target; unreachable points are omitted."""
    ps = sorted(set(p_values))
    out = []
    for target in targets:
        pts = []
        for p in ps:
            d = required_distance(model, p, target, d_max)
            if d is not None:
                pts.append((p, d))
        out.append(CurveSeries(f"target={target:g}", tuple(pts)))
    return out


# ---------------------------------------------------------------------------
# export

Dataset = Union[Sequence[CurveSeries], CurveSeries, ThresholdSeries, RadarAxes]


def _num(value) -> str:
    # repr is the shortest round-trip form for floats
    if isinstance(value, bool) or not isinstance(value, (int, float, Fraction)):
        return str(value)
    if isinstance(value, Fraction):
        value = float(value)
    return repr(value)


def _rows(dataset: Dataset) -> list[tuple]:
    if isinstance(dataset, CurveSeries):
        dataset = [dataset]
    if isinstance(dataset, ThresholdSeries):
        rows = [("threshold", c, t) for c, t in dataset.entries]
        rows += [("reference", c, dataset.reference) for c, _ in dataset.entries]
        return rows
    if isinstance(dataset, RadarAxes):
        return [(axis.name, c, axis.position(c)) for axis in dataset.axes for c in axis.indices]
    return [(s.label, x, y) for s in dataset for x, y in s.points]


def _to_json(dataset: Dataset):
    if isinstance(dataset, (ThresholdSeries, RadarAxes, CurveSeries)):
        return dataset.to_dict()
    return {"series": [s.to_dict() for s in dataset]}


def export(dataset: Dataset, fmt: str, sink: IO) -> int:
    """Write ``dataset`` to a text or binary ``sink``; returns bytes written."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["label", "x", "y"])
        for label, x, y in _rows(dataset):
            writer.writerow([label, _num(x), _num(y)])
        text = buf.getvalue()
    elif fmt == "json":
        text = json.dumps(_to_json(dataset), indent=2) + "\n"
    else:
        raise ValueError(f"unknown export format {fmt!r}")
    data = text.encode("utf-8")
    if isinstance(sink, io.TextIOBase):
        sink.write(text)
    else:
        sink.write(data)
    return len(data)
