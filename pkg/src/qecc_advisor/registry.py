"""Parameter registry for quantum error-correction codes.

A registry is an ordered, immutable collection of :class:`CodeSpec` records,
one per code, holding the eight benchmark parameters (qubit overhead,
threshold, error protection, decoders, transversal gates, scalability,
realizations, complexity).  Records are loaded from JSON, validated, and used
to answer qubit-budget questions such as "what is the largest distance that
fits in 600 physical qubits for two logical qubits?".

Overheads are kept as exact rationals so that half-integral values (e.g. the
heavy-hexagon code at even distance) are only rounded up when physical qubits
are counted.
"""

from __future__ import annotations

import enum
import io
import json
import math
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import IO, Iterable, Iterator, Optional, Union

import jsonschema

__all__ = [
    "BUILTIN",
    "TECHNOLOGIES",
    "SIMULATION",
    "Protection",
    "Transversal",
    "OverheadFormula",
    "DistanceDomain",
    "CodeSpec",
    "Registry",
    "MaxDistance",
    "RegistryError",
    "DuplicateCodeError",
    "DomainError",
    "load_registry",
    "registry_to_dict",
    "dump_registry",
    "validate_code",
    "overhead",
    "physical_qubits",
    "max_distance",
]

SCHEMA_VERSION = 1

#: Marker selecting the shipped default registry in :func:`load_registry`.
BUILTIN = "builtin"

SIMULATION = "simulation"

#: Closed vocabulary of hardware technologies a code may be realized on.
TECHNOLOGIES = (
    "superconducting",
    "trapped-ion",
    "optical",
    "rydberg",
    "nmr",
    "nv-diamond",
    "ising-anyons",
)

COMPLEXITY_LEVELS = ("very-low", "low", "medium", "high", "very-high", "extremely-high")

_ID_PATTERN = re.compile(r"^[a-z][a-z0-9-]*$")


class Protection(str, enum.Enum):
    BIT_FLIP_ONLY = "bit-flip-only"
    ARBITRARY_SINGLE = "arbitrary-single"
    DETECT_TWO_CORRECT_ONE = "detect-two-correct-one"
    ALL_PAULI = "all-pauli"


class Transversal(str, enum.Enum):
    NONE = "none"
    CLIFFORD = "clifford"
    TELEPORTATION = "teleportation"
    TPG_LATTICE_SURGERY = "tpg-lattice-surgery"
    LATTICE_SURGERY = "lattice-surgery"


class RegistryError(ValueError):
    """A registry document or record violates the schema.

    ``code_id`` and ``field`` name the offending record and field when known.
    """

    def __init__(self, message: str, code_id: Optional[str] = None, field: Optional[str] = None):
        self.code_id = code_id
        self.field = field
        where = []
        if code_id is not None:
            where.append(f"code {code_id!r}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)


class DuplicateCodeError(RegistryError):
    pass


class DomainError(ValueError):
    """Distance is not admissible for the code."""


@dataclass(frozen=True)
class OverheadFormula:
    """Physical qubits per block as ``sum(num[i] * d**i) / den``."""

    numerator: tuple[int, ...]
    denominator: int = 1

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(int(c) for c in self.numerator))

    @property
    def degree(self) -> int:
        for i in range(len(self.numerator) - 1, -1, -1):
            if self.numerator[i] != 0:
                return i
        return -1

    def __call__(self, d: int) -> Fraction:
        total = 0
        for c in reversed(self.numerator):
            total = total * d + c
        return Fraction(total, self.denominator)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.numerator):
            if c == 0:
                continue
            mono = "" if i == 0 else ("d" if i == 1 else f"d^{i}")
            coef = str(c) if (i == 0 or abs(c) != 1) else ("-" if c < 0 else "")
            terms.append(f"{coef}{'*' if coef not in ('', '-') and mono else ''}{mono}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return body if self.denominator == 1 else f"({body})/{self.denominator}"


@dataclass(frozen=True)
class DistanceDomain:
    """Admissible distances: a single fixed value, or every integer from a minimum."""

    kind: str  # "fixed" or "any"
    value: int

    @classmethod
    def fixed(cls, d0: int) -> "DistanceDomain":
        return cls("fixed", d0)

    @classmethod
    def any_from(cls, min_d: int = 2) -> "DistanceDomain":
        return cls("any", min_d)

    @property
    def is_fixed(self) -> bool:
        return self.kind == "fixed"

    @property
    def minimum(self) -> int:
        return self.value

    def admits(self, d: int) -> bool:
        if self.is_fixed:
            return d == self.value
        return d >= self.value


@dataclass(frozen=True)
class CodeSpec:
    id: str
    display_name: str
    overhead: OverheadFormula
    distance_domain: DistanceDomain
    logical_qubits_per_block: int
    threshold: float
    protection: Protection
    decoders: tuple[str, ...]
    transversal: Transversal
    scalable: bool
    realizations: frozenset[str]
    complexity: int

    @property
    def k(self) -> int:
        return self.logical_qubits_per_block

    def realized_on(self, technology: str) -> bool:
        # simulation is implicitly available for every code
        return technology == SIMULATION or technology in self.realizations

    @property
    def hardware_realizations(self) -> int:
        return len(self.realizations - {SIMULATION})


@dataclass(frozen=True)
class Registry:
    codes: tuple[CodeSpec, ...]
    schema_version: int = SCHEMA_VERSION
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {}
        for spec in self.codes:
            if spec.id in index:
                raise DuplicateCodeError("duplicate code id", code_id=spec.id, field="id")
            index[spec.id] = spec
        object.__setattr__(self, "_index", index)

    def __iter__(self) -> Iterator[CodeSpec]:
        return iter(self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __contains__(self, code_id: str) -> bool:
        return code_id in self._index

    @property
    def ids(self) -> list[str]:
        return [c.id for c in self.codes]

    def get(self, name: str) -> CodeSpec:
        """Look a code up by id, or case-insensitively by display name."""
        if name in self._index:
            return self._index[name]
        lowered = name.lower()
        for spec in self.codes:
            if spec.display_name.lower() == lowered:
                return spec
        raise KeyError(f"unknown code {name!r}; known: {', '.join(self.ids)}")


# ---------------------------------------------------------------------------
# JSON schema and (de)serialization

_CODE_SCHEMA = {
    "type": "object",
    "required": [
        "id", "display_name", "overhead", "distance", "k", "threshold", "protection",
        "decoders", "transversal", "scalable", "realizations", "complexity",
    ],
    "additionalProperties": False,
    "properties": {
        "id": {"type": "string", "pattern": _ID_PATTERN.pattern},
        "display_name": {"type": "string", "minLength": 1},
        "overhead": {
            "type": "object",
            "required": ["num", "den"],
            "additionalProperties": False,
            "properties": {
                "num": {"type": "array", "items": {"type": "integer"}, "minItems": 1},
                "den": {"type": "integer", "minimum": 1},
            },
        },
        "distance": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["kind", "d"],
                    "additionalProperties": False,
                    "properties": {"kind": {"const": "fixed"}, "d": {"type": "integer", "minimum": 2}},
                },
                {
                    "type": "object",
                    "required": ["kind", "min_d"],
                    "additionalProperties": False,
                    "properties": {"kind": {"const": "any"}, "min_d": {"type": "integer", "minimum": 2}},
                },
            ]
        },
        "k": {"type": "integer", "minimum": 1},
        "threshold": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
        "protection": {"enum": [p.value for p in Protection]},
        "decoders": {"type": "array", "items": {"type": "string", "minLength": 1}},
        "transversal": {"enum": [t.value for t in Transversal]},
        "scalable": {"type": "boolean"},
        "realizations": {
            "type": "array",
            "items": {"enum": list(TECHNOLOGIES)},
            "uniqueItems": True,
        },
        "complexity": {"type": "integer", "minimum": 1, "maximum": len(COMPLEXITY_LEVELS)},
    },
}

REGISTRY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "codes"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "codes": {"type": "array", "items": _CODE_SCHEMA},
    },
}


def _code_from_dict(obj: dict) -> CodeSpec:
    dist = obj["distance"]
    domain = DistanceDomain.fixed(dist["d"]) if dist["kind"] == "fixed" else DistanceDomain.any_from(dist["min_d"])
    return CodeSpec(
        id=obj["id"],
        display_name=obj["display_name"],
        overhead=OverheadFormula(tuple(obj["overhead"]["num"]), obj["overhead"]["den"]),
        distance_domain=domain,
        logical_qubits_per_block=obj["k"],
        threshold=float(obj["threshold"]),
        protection=Protection(obj["protection"]),
        decoders=tuple(obj["decoders"]),
        transversal=Transversal(obj["transversal"]),
        scalable=obj["scalable"],
        realizations=frozenset(obj["realizations"]),
        complexity=obj["complexity"],
    )


def _code_to_dict(spec: CodeSpec) -> dict:
    dom = spec.distance_domain
    distance = {"kind": "fixed", "d": dom.value} if dom.is_fixed else {"kind": "any", "min_d": dom.value}
    return {
        "id": spec.id,
        "display_name": spec.display_name,
        "overhead": {"num": list(spec.overhead.numerator), "den": spec.overhead.denominator},
        "distance": distance,
        "k": spec.logical_qubits_per_block,
        "threshold": spec.threshold,
        "protection": spec.protection.value,
        "decoders": list(spec.decoders),
        "transversal": spec.transversal.value,
        "scalable": spec.scalable,
        # keep the stored order stable; vocabulary order is canonical
        "realizations": [t for t in TECHNOLOGIES if t in spec.realizations],
        "complexity": spec.complexity,
    }


def registry_to_dict(registry: Registry) -> dict:
    return {"schema_version": registry.schema_version, "codes": [_code_to_dict(c) for c in registry]}


def dump_registry(registry: Registry, indent: Optional[int] = 2) -> str:
    return json.dumps(registry_to_dict(registry), indent=indent) + "\n"


def _read_source(source) -> str:
    if source is None or (isinstance(source, str) and source == BUILTIN):
        return resources.files(__package__).joinpath("data/default_registry.json").read_text("utf-8")
    if isinstance(source, (bytes, bytearray)):
        return bytes(source).decode("utf-8")
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8") as fh:
            return fh.read()
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _offending_code(doc, path) -> Optional[str]:
    path = list(path)
    if len(path) >= 2 and path[0] == "codes" and isinstance(path[1], int):
        try:
            code = doc["codes"][path[1]]
        except (IndexError, KeyError, TypeError):
            return None
        if isinstance(code, dict) and isinstance(code.get("id"), str):
            return code["id"]
        return f"#{path[1]}"
    return None


def load_registry(source: Union[str, os.PathLike, bytes, IO, None] = BUILTIN) -> Registry:
    """Load and validate a registry.

    ``source`` is :data:`BUILTIN` (the default nine-code table), a path, raw
    JSON bytes, or an open file object.  Raises :class:`RegistryError` naming
    the code id and field at fault, or :class:`DuplicateCodeError`.
    """
    text = _read_source(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RegistryError(f"invalid JSON: {exc}") from exc

    validator = jsonschema.Draft202012Validator(REGISTRY_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        err = errors[0]
        path = list(err.absolute_path)
        field_name = None
        if len(path) >= 3 and path[0] == "codes":
            field_name = str(path[2])
        elif path:
            field_name = str(path[0])
        raise RegistryError(err.message, code_id=_offending_code(doc, path), field=field_name)

    seen = set()
    codes = []
    for obj in doc["codes"]:
        if obj["id"] in seen:
            raise DuplicateCodeError("duplicate code id", code_id=obj["id"], field="id")
        seen.add(obj["id"])
        spec = _code_from_dict(obj)
        problems = validate_code(spec)
        if problems:
            raise RegistryError("; ".join(problems), code_id=spec.id)
        codes.append(spec)
    return Registry(tuple(codes), doc["schema_version"])


# ---------------------------------------------------------------------------
# validation


def _root_bound(coeffs: tuple[int, ...]) -> int:
    """Cauchy bound on the magnitude of real roots of a polynomial."""
    lead = coeffs[-1]
    return 1 + math.ceil(max(abs(Fraction(c, lead)) for c in coeffs[:-1])) if len(coeffs) > 1 else 1


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _forward_difference(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    # coefficients of p(d + 1) - p(d)
    n = len(coeffs)
    diff = [0] * n
    for i, c in enumerate(coeffs):
        for j in range(i):
            diff[j] += c * math.comb(i, j)
    return _trim(diff)


def _overhead_problems(spec: CodeSpec) -> list[str]:
    formula = spec.overhead
    problems = []
    if formula.denominator < 1:
        problems.append("overhead denominator must be >= 1")
        return problems
    coeffs = _trim(formula.numerator)
    if not coeffs:
        problems.append("overhead numerator must have a nonzero coefficient")
        return problems
    domain = spec.distance_domain
    if domain.is_fixed:
        if formula(domain.value) <= 0:
            problems.append(f"overhead must be positive at d={domain.value}")
        return problems
    if len(coeffs) < 2 or coeffs[-1] < 0:
        problems.append("overhead must grow with d for an open distance range")
        return problems
    # beyond the root bounds both p and its forward difference keep the sign of
    # their (non-negative) leading coefficient, so a finite scan is exhaustive
    diff = _forward_difference(coeffs)
    upper = max(_root_bound(coeffs), _root_bound(diff) if diff else 1, domain.minimum) + 1
    for d in range(domain.minimum, upper + 1):
        if formula(d) <= 0:
            problems.append(f"overhead must be positive (fails at d={d})")
            break
    for d in range(domain.minimum, upper + 1):
        if formula(d + 1) < formula(d):
            problems.append(f"overhead must be non-decreasing in d (fails at d={d})")
            break
    return problems


def validate_code(spec: CodeSpec) -> list[str]:
    """Return a list of invariant violations; empty when the record is valid."""
    problems = []
    if not isinstance(spec.id, str) or not _ID_PATTERN.match(spec.id):
        problems.append("id must be a short lowercase name")
    if not spec.display_name:
        problems.append("display_name must be non-empty")
    if spec.distance_domain.kind not in ("fixed", "any"):
        problems.append(f"unknown distance kind {spec.distance_domain.kind!r}")
    elif spec.distance_domain.value < 2:
        problems.append("distance must be >= 2")
    else:
        problems.extend(_overhead_problems(spec))
    if not (isinstance(spec.logical_qubits_per_block, int) and spec.logical_qubits_per_block >= 1):
        problems.append("logical_qubits_per_block >= 1")
    if not (0.0 < spec.threshold < 1.0):
        problems.append("threshold out of (0,1)")
    if not isinstance(spec.protection, Protection):
        problems.append(f"unknown protection {spec.protection!r}")
    if not isinstance(spec.transversal, Transversal):
        problems.append(f"unknown transversal {spec.transversal!r}")
    if not all(isinstance(name, str) and name for name in spec.decoders):
        problems.append("decoder names must be non-empty strings")
    if SIMULATION in spec.realizations:
        problems.append("realizations must not list 'simulation' (it is implicit)")
    unknown = sorted(set(spec.realizations) - set(TECHNOLOGIES) - {SIMULATION})
    if unknown:
        problems.append(f"unknown technologies {unknown}")
    if not (isinstance(spec.complexity, int) and 1 <= spec.complexity <= len(COMPLEXITY_LEVELS)):
        problems.append("complexity must be in 1..6")
    return problems


# ---------------------------------------------------------------------------
# qubit budget


def overhead(code: CodeSpec, d: int) -> Fraction:
    """Exact physical-qubit cost of one block at distance ``d``."""
    if not code.distance_domain.admits(d):
        dom = code.distance_domain
        allowed = f"only d={dom.value}" if dom.is_fixed else f"d >= {dom.value}"
        raise DomainError(f"distance {d} not admissible for {code.id} ({allowed})")
    return code.overhead(d)


def physical_qubits(code: CodeSpec, d: int, num_logical: int) -> int:
    if num_logical < 1:
        raise ValueError("num_logical must be >= 1")
    blocks = -(-num_logical // code.logical_qubits_per_block)
    return blocks * math.ceil(overhead(code, d))


@dataclass(frozen=True)
class MaxDistance:
    """Outcome of a budget search: ``achievable`` (with ``d``), ``fixed-na`` or ``infeasible``."""

    status: str
    d: Optional[int] = None

    ACHIEVABLE = "achievable"
    FIXED_NA = "fixed-na"
    INFEASIBLE = "infeasible"

    @classmethod
    def achievable(cls, d: int) -> "MaxDistance":
        return cls(cls.ACHIEVABLE, d)

    @property
    def feasible(self) -> bool:
        return self.status != self.INFEASIBLE

    def to_json(self) -> Union[int, str]:
        if self.status == self.ACHIEVABLE:
            return self.d
        return "NA" if self.status == self.FIXED_NA else "infeasible"

    def __str__(self) -> str:
        return str(self.to_json())


def max_distance(code: CodeSpec, budget: int, num_logical: int) -> MaxDistance:
    """Largest admissible distance whose physical-qubit count fits ``budget``."""
    if budget < 0:
        raise ValueError("budget must be >= 0")
    domain = code.distance_domain
    fits = lambda d: physical_qubits(code, d, num_logical) <= budget  # noqa: E731
    if domain.is_fixed:
        return MaxDistance(MaxDistance.FIXED_NA) if fits(domain.value) else MaxDistance(MaxDistance.INFEASIBLE)

    lo = domain.minimum
    if not fits(lo):
        return MaxDistance(MaxDistance.INFEASIBLE)
    if code.overhead.degree < 1:
        raise DomainError(f"overhead of {code.id} does not grow with d; no maximum distance")
    # gallop to an infeasible upper bound, then bisect
    step = 1
    hi = lo + step
    while fits(hi):
        lo = hi
        step *= 2
        hi = lo + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if fits(mid):
            lo = mid
        else:
            hi = mid
    return MaxDistance.achievable(lo)
