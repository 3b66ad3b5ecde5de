"""Benchmark data, recommendation and claim verification for quantum error-correction codes."""

from .registry import (
    BUILTIN,
    CodeSpec,
    DistanceDomain,
    MaxDistance,
    OverheadFormula,
    Protection,
    Registry,
    RegistryError,
    Transversal,
    load_registry,
    max_distance,
    overhead,
    physical_qubits,
    validate_code,
)

__version__ = "0.1.0"
