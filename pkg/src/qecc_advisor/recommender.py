"""Scenario-driven code recommendation.

Codes pass through three filtration stages, are scored, and are returned as a
ranked list with the largest distance each one reaches on the available
hardware:

1. compatibility: error type, qubit technology, multi-qubit gate support and
   whether even the smallest instance fits the qubit budget;
2. practicality: effective error rate against the code threshold, and the
   maximum achievable distance under the budget;
3. scalability: non-scalable codes are dropped when more than one logical
   qubit must be protected.

Survivors are scored by a weighted sum of normalized components (distance,
threshold margin, complexity, decoders, transversal gates, realizations,
logical-qubit utilization) and a final review re-checks every hard
constraint.  Every decision is recorded in a trace.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import asdict, dataclass, field, fields
from typing import Optional, Sequence

from .registry import (
    SIMULATION,
    TECHNOLOGIES,
    CodeSpec,
    MaxDistance,
    Protection,
    Registry,
    Transversal,
    load_registry,
    max_distance,
    physical_qubits,
)

logger = logging.getLogger(__name__)

__all__ = [
    "ErrType",
    "Scenario",
    "ErrorWeights",
    "ScoreWeights",
    "TraceEntry",
    "Recommendation",
    "RecommendationResult",
    "InternalConsistencyError",
    "effective_error_rate",
    "stage1_compatibility",
    "stage2_practicality",
    "stage3_scalability",
    "score",
    "recommend",
]

PASSED = "passed"
ELIMINATED = "eliminated"

STAGE_COMPATIBILITY = "compatibility"
STAGE_PRACTICALITY = "practicality"
STAGE_SCALABILITY = "scalability"
STAGES = (STAGE_COMPATIBILITY, STAGE_PRACTICALITY, STAGE_SCALABILITY)


class ErrType(str, enum.Enum):
    BIT_FLIP = "bit-flip"
    PHASE_FLIP = "phase-flip"
    ALL_PAULI = "all-pauli"


class InternalConsistencyError(RuntimeError):
    """The final review found a recommendation that breaks a hard constraint."""


_COVERS = {
    Protection.BIT_FLIP_ONLY: {ErrType.BIT_FLIP},
    Protection.ARBITRARY_SINGLE: set(ErrType),
    Protection.DETECT_TWO_CORRECT_ONE: set(ErrType),
    Protection.ALL_PAULI: set(ErrType),
}

TRANSVERSAL_SCORES = {
    Transversal.NONE: 0.0,
    Transversal.LATTICE_SURGERY: 0.3,
    Transversal.TPG_LATTICE_SURGERY: 0.4,
    Transversal.TELEPORTATION: 0.6,
    Transversal.CLIFFORD: 1.0,
}

_TECH_ALIASES = {"supercond": "superconducting", "supercond.": "superconducting", "ion": "trapped-ion"}


def normalize_technology(name: str) -> str:
    name = name.strip().lower()
    return _TECH_ALIASES.get(name, name)


@dataclass(frozen=True)
class Scenario:
    """User scenario: hardware, qubit budget, circuit size, gates and error rates."""

    q_type: str
    max_q_avail: int
    q_orig: int
    multi_q_gate: bool
    err_type: ErrType
    dep_err: float
    gate_err: float
    read_err: float

    def __post_init__(self):
        object.__setattr__(self, "q_type", normalize_technology(self.q_type))
        object.__setattr__(self, "err_type", ErrType(self.err_type))
        if self.q_type != SIMULATION and self.q_type not in TECHNOLOGIES:
            raise ValueError(f"unknown qubit type {self.q_type!r}")
        if self.max_q_avail < 1:
            raise ValueError("max_q_avail must be >= 1")
        if self.q_orig < 1:
            raise ValueError("q_orig must be >= 1")
        for name in ("dep_err", "gate_err", "read_err"):
            value = getattr(self, name)
            if not (0.0 <= value < 1.0):
                raise ValueError(f"{name} must lie in [0, 1)")

    def to_dict(self) -> dict:
        out = asdict(self)
        out["err_type"] = self.err_type.value
        return out


@dataclass(frozen=True)
class ErrorWeights:
    gate: float = 0.6
    dep: float = 0.3
    read: float = 0.1

    def __post_init__(self):
        if min(self.gate, self.dep, self.read) < 0:
            raise ValueError("error weights must be nonnegative")
        if not math.isclose(self.gate + self.dep + self.read, 1.0, abs_tol=1e-9):
            raise ValueError("error weights must sum to 1")
        if not (self.gate > self.dep > self.read):
            raise ValueError("error weights must satisfy gate > dep > read")


@dataclass(frozen=True)
class ScoreWeights:
    """Weights of the score components; the seven base weights sum to 1.

    ``tg_boost`` is an extra weight on the transversal-gate component used only
    when the scenario has multi-qubit gates.
    """

    dist: float = 0.78
    thr: float = 0.04
    cx: float = 0.02
    tg: float = 0.02
    dec: float = 0.02
    real: float = 0.02
    util: float = 0.10
    tg_boost: float = 1.0

    def __post_init__(self):
        values = [getattr(self, f.name) for f in fields(self)]
        if min(values) < 0:
            raise ValueError("score weights must be nonnegative")
        if not math.isclose(sum(values) - self.tg_boost, 1.0, abs_tol=1e-9):
            raise ValueError("base score weights must sum to 1")

    def base(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "tg_boost"}


@dataclass(frozen=True)
class TraceEntry:
    stage: str
    code: str
    verdict: str
    reason: str = ""

    def __str__(self) -> str:
        text = f"[{self.stage}] {self.code}: {self.verdict}"
        return f"{text} ({self.reason})" if self.reason else text


@dataclass(frozen=True)
class Recommendation:
    code: str
    max_distance: MaxDistance
    score: float
    breakdown: dict[str, float] = field(compare=False)

    def to_dict(self) -> dict:
        return {
            "id": self.code,
            "max_distance": self.max_distance.to_json(),
            "score": self.score,
            "breakdown": dict(self.breakdown),
        }


@dataclass(frozen=True)
class RecommendationResult:
    scenario: Scenario
    recommendations: tuple[Recommendation, ...]
    trace: tuple[TraceEntry, ...]

    def __iter__(self):
        return iter(self.recommendations)

    def __len__(self) -> int:
        return len(self.recommendations)

    @property
    def ids(self) -> list[str]:
        return [r.code for r in self.recommendations]

    def survivors(self, stage: str) -> list[str]:
        return [t.code for t in self.trace if t.stage == stage and t.verdict == PASSED]

    def eliminated(self, stage: str) -> dict[str, str]:
        return {t.code: t.reason for t in self.trace if t.stage == stage and t.verdict == ELIMINATED}

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario.to_dict(),
            "recommendations": [r.to_dict() for r in self.recommendations],
            "trace": [asdict(t) for t in self.trace],
        }


def effective_error_rate(scenario: Scenario, weights: ErrorWeights = ErrorWeights()) -> float:
    return weights.gate * scenario.gate_err + weights.dep * scenario.dep_err + weights.read * scenario.read_err


def _minimum_cost(code: CodeSpec, q_orig: int) -> int:
    return physical_qubits(code, code.distance_domain.minimum, q_orig)


def stage1_compatibility(scenario: Scenario, registry: Registry) -> tuple[list[CodeSpec], list[TraceEntry]]:
    survivors, trace = [], []
    for code in registry:
        reasons = []
        if scenario.err_type not in _COVERS[code.protection]:
            reasons.append(f"error type: {code.protection.value} does not cover {scenario.err_type.value}")
        if not code.realized_on(scenario.q_type):
            reasons.append(f"realization: not realized on {scenario.q_type}")
        if scenario.multi_q_gate and code.k > 1:
            reasons.append(f"multi-block gate: k={code.k} block cannot host inter-qubit logical gates")
        cost = _minimum_cost(code, scenario.q_orig)
        if cost > scenario.max_q_avail:
            reasons.append(f"feasibility: needs {cost} qubits at d={code.distance_domain.minimum} > {scenario.max_q_avail}")
        if reasons:
            trace.append(TraceEntry(STAGE_COMPATIBILITY, code.id, ELIMINATED, "; ".join(reasons)))
        else:
            trace.append(TraceEntry(STAGE_COMPATIBILITY, code.id, PASSED))
            survivors.append(code)
    return survivors, trace


def stage2_practicality(
    survivors: Sequence[CodeSpec],
    scenario: Scenario,
    err_weights: ErrorWeights = ErrorWeights(),
) -> tuple[list[tuple[CodeSpec, MaxDistance]], list[TraceEntry]]:
    p_eff = effective_error_rate(scenario, err_weights)
    kept, trace = [], []
    for code in survivors:
        reasons = []
        if p_eff >= code.threshold:
            reasons.append(f"threshold: effective rate {p_eff:.4g} >= threshold {code.threshold:g}")
        reach = max_distance(code, scenario.max_q_avail, scenario.q_orig)
        if not reach.feasible:
            reasons.append(f"overhead: no distance fits {scenario.max_q_avail} qubits")
        if reasons:
            trace.append(TraceEntry(STAGE_PRACTICALITY, code.id, ELIMINATED, "; ".join(reasons)))
        else:
            trace.append(TraceEntry(STAGE_PRACTICALITY, code.id, PASSED, f"max distance {reach}"))
            kept.append((code, reach))
    return kept, trace


def stage3_scalability(
    survivors: Sequence[tuple[CodeSpec, MaxDistance]],
    scenario: Scenario,
) -> tuple[list[tuple[CodeSpec, MaxDistance]], list[TraceEntry]]:
    kept, trace = [], []
    for code, reach in survivors:
        if scenario.q_orig > 1 and not code.scalable:
            trace.append(
                TraceEntry(STAGE_SCALABILITY, code.id, ELIMINATED, f"scalability: not scalable, q_orig={scenario.q_orig}")
            )
        else:
            trace.append(TraceEntry(STAGE_SCALABILITY, code.id, PASSED))
            kept.append((code, reach))
    return kept, trace


def _effective_distance(code: CodeSpec, reach: MaxDistance) -> int:
    return reach.d if reach.status == MaxDistance.ACHIEVABLE else code.distance_domain.value


def score(
    code: CodeSpec,
    reach: MaxDistance,
    scenario: Scenario,
    cohort_max_distance: int,
    weights: ScoreWeights = ScoreWeights(),
    err_weights: ErrorWeights = ErrorWeights(),
) -> tuple[float, dict[str, float]]:
    """Score one surviving code; returns ``(total, per-component values)``."""
    p_eff = effective_error_rate(scenario, err_weights)
    if p_eff > 0:
        f_thr = min(max(math.log10(code.threshold / p_eff) / 2.0, 0.0), 1.0)
    else:
        f_thr = 1.0
    blocks = -(-scenario.q_orig // code.k)
    parts = {
        "dist": _effective_distance(code, reach) / cohort_max_distance,
        "thr": f_thr,
        "cx": (6 - code.complexity) / 5,
        "tg": TRANSVERSAL_SCORES[code.transversal],
        "dec": min(len(code.decoders), 10) / 10,
        "real": min(code.hardware_realizations, 6) / 6,
        "util": scenario.q_orig / (blocks * code.k),
    }
    base = weights.base()
    total = sum(parts[name] * base[name] for name in parts)
    if scenario.multi_q_gate:
        total += weights.tg_boost * parts["tg"]
    return total, parts


def _final_review(rec: Recommendation, code: CodeSpec, scenario: Scenario, p_eff: float) -> None:
    def fail(what):
        raise InternalConsistencyError(f"final review: {code.id} violates {what}")

    if scenario.err_type not in _COVERS[code.protection]:
        fail("error-type coverage")
    if not code.realized_on(scenario.q_type):
        fail("realization")
    if scenario.multi_q_gate and code.k > 1:
        fail("multi-block gate rule")
    if not p_eff < code.threshold:
        fail("threshold")
    if scenario.q_orig > 1 and not code.scalable:
        fail("scalability")
    reach = rec.max_distance
    d = _effective_distance(code, reach) if reach.feasible else None
    if d is None or physical_qubits(code, d, scenario.q_orig) > scenario.max_q_avail:
        fail("qubit budget")


def recommend(
    scenario: Scenario,
    registry: Optional[Registry] = None,
    *,
    err_weights: ErrorWeights = ErrorWeights(),
    score_weights: ScoreWeights = ScoreWeights(),
    top_n: Optional[int] = None,
    debug: bool = False,
) -> RecommendationResult:
    """Rank the registry's codes for ``scenario``.

    The full filtration trace is always attached to the result; with
    ``debug=True`` each entry is also logged as it is produced.
    """
    if registry is None:
        registry = load_registry()
    if top_n is not None and top_n < 0:
        raise ValueError("top_n must be >= 0")

    s1, t1 = stage1_compatibility(scenario, registry)
    s2, t2 = stage2_practicality(s1, scenario, err_weights)
    s3, t3 = stage3_scalability(s2, scenario)
    trace = tuple(t1 + t2 + t3)
    if debug:
        for entry in trace:
            logger.info("%s", entry)

    recs = []
    if s3:
        cohort_max = max(_effective_distance(code, reach) for code, reach in s3)
        for code, reach in s3:
            total, parts = score(code, reach, scenario, cohort_max, score_weights, err_weights)
            recs.append(Recommendation(code.id, reach, total, parts))
    recs.sort(key=lambda r: (-r.score, r.code))

    p_eff = effective_error_rate(scenario, err_weights)
    for rec in recs:
        _final_review(rec, registry.get(rec.code), scenario, p_eff)

    if top_n is not None:
        recs = recs[:top_n]
    return RecommendationResult(scenario, tuple(recs), trace)
