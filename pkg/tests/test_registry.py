import dataclasses
import io
import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qecc_advisor.registry import (
    BUILTIN,
    DistanceDomain,
    DomainError,
    DuplicateCodeError,
    MaxDistance,
    OverheadFormula,
    RegistryError,
    dump_registry,
    load_registry,
    max_distance,
    overhead,
    physical_qubits,
    registry_to_dict,
    validate_code,
)

# hand-written overhead formulas, one per built-in code
FORMULAS = {
    "repetition": lambda d: Fraction(d),
    "shor": lambda d: Fraction(9),
    "steane": lambda d: Fraction(7),
    "toric": lambda d: Fraction(d * d),
    "surface": lambda d: Fraction(d * d),
    "bacon-shor": lambda d: Fraction(d**3),
    "color": lambda d: Fraction((3 * d - 1) ** 2, 4),
    "heavy-hexagon": lambda d: Fraction(5 * d * d - 2 * d - 1, 2),
    "gross": lambda d: Fraction(12 * d),
}

THRESHOLDS = {
    "repetition": 0.3, "shor": 0.3, "steane": 0.2, "toric": 0.01, "surface": 0.018,
    "bacon-shor": 0.00194, "color": 0.0126, "heavy-hexagon": 0.045, "gross": 0.018,
}


def scan_max_distance(code, budget, q):
    """Linear-scan oracle for max_distance."""
    dom = code.distance_domain
    if dom.is_fixed:
        return "NA" if physical_qubits(code, dom.value, q) <= budget else "infeasible"
    best = None
    d = dom.minimum
    while physical_qubits(code, d, q) <= budget:
        best = d
        d += 1
    return "infeasible" if best is None else best


def _doc(registry):
    return registry_to_dict(registry)


def test_builtin_has_nine_codes(registry):
    assert registry.ids == list(FORMULAS)
    assert registry.get("surface").threshold == 0.018


def test_builtin_thresholds(registry):
    assert {c.id: c.threshold for c in registry} == THRESHOLDS


@pytest.mark.parametrize("code_id", list(FORMULAS))
def test_overhead_matches_written_formula(registry, code_id):
    code = registry.get(code_id)
    ds = [code.distance_domain.value] if code.distance_domain.is_fixed else range(2, 60)
    for d in ds:
        assert overhead(code, d) == FORMULAS[code_id](d)


def test_overhead_examples(registry):
    assert overhead(registry.get("surface"), 10) == 100
    assert overhead(registry.get("heavy-hexagon"), 6) == Fraction(167, 2)
    assert overhead(registry.get("steane"), 3) == 7


def test_overhead_domain_errors(registry):
    with pytest.raises(DomainError):
        overhead(registry.get("steane"), 5)
    with pytest.raises(DomainError):
        overhead(registry.get("surface"), 1)


def test_physical_qubits_examples(registry):
    assert physical_qubits(registry.get("surface"), 17, 2) == 578
    assert physical_qubits(registry.get("heavy-hexagon"), 6, 1) == 84
    assert physical_qubits(registry.get("toric"), 5, 1) == 25
    assert physical_qubits(registry.get("toric"), 5, 3) == 50
    assert physical_qubits(registry.get("gross"), 10, 13) == 240


@pytest.mark.parametrize(
    "code_id, budget, q, expected",
    [
        ("repetition", 100, 1, MaxDistance.achievable(100)),
        ("heavy-hexagon", 100, 1, MaxDistance.achievable(6)),
        ("surface", 600, 2, MaxDistance.achievable(17)),
        ("steane", 600, 2, MaxDistance(MaxDistance.FIXED_NA)),
        ("steane", 13, 2, MaxDistance(MaxDistance.INFEASIBLE)),
        ("surface", 3, 1, MaxDistance(MaxDistance.INFEASIBLE)),
    ],
)
def test_max_distance_examples(registry, code_id, budget, q, expected):
    assert max_distance(registry.get(code_id), budget, q) == expected


@given(
    code_id=st.sampled_from(list(FORMULAS)),
    budget=st.integers(0, 5000),
    q=st.integers(1, 30),
)
def test_max_distance_agrees_with_scan(registry, code_id, budget, q):
    code = registry.get(code_id)
    assert max_distance(code, budget, q).to_json() == scan_max_distance(code, budget, q)


@given(code_id=st.sampled_from(list(FORMULAS)), budget=st.integers(0, 20000), q=st.integers(1, 20))
def test_max_distance_is_tight(registry, code_id, budget, q):
    code = registry.get(code_id)
    res = max_distance(code, budget, q)
    if res.status == MaxDistance.ACHIEVABLE:
        assert physical_qubits(code, res.d, q) <= budget
        assert physical_qubits(code, res.d + 1, q) > budget


def test_overhead_monotone_on_open_domains(registry):
    for code in registry:
        if code.distance_domain.is_fixed:
            continue
        values = [overhead(code, d) for d in range(2, 201)]
        assert all(a < b for a, b in zip(values, values[1:])), code.id


def test_heavy_hexagon_half_integral(registry):
    hh = registry.get("heavy-hexagon")
    for d in range(2, 100):
        value = overhead(hh, d)
        assert value.denominator == (2 if d % 2 == 0 else 1)


def test_bacon_shor_eleven_needs_over_1000(registry):
    assert physical_qubits(registry.get("bacon-shor"), 11, 1) == 1331


def test_round_trip(registry):
    again = load_registry(dump_registry(registry).encode())
    assert again == registry
    assert _doc(again) == _doc(registry)


def test_load_from_path_and_stream(registry, tmp_path):
    path = tmp_path / "reg.json"
    path.write_text(dump_registry(registry))
    assert load_registry(path) == registry
    assert load_registry(str(path)) == registry
    assert load_registry(io.BytesIO(path.read_bytes())) == registry
    assert load_registry(BUILTIN) == registry


def test_duplicate_id_rejected(registry):
    doc = _doc(registry)
    doc["codes"].append(dict(doc["codes"][4]))
    with pytest.raises(DuplicateCodeError) as info:
        load_registry(json.dumps(doc).encode())
    assert info.value.code_id == "surface"


def test_tenth_code_appended(registry):
    doc = _doc(registry)
    extra = dict(doc["codes"][4], id="five-qubit", display_name="Perfect5", overhead={"num": [5], "den": 1},
                 distance={"kind": "fixed", "d": 3}, threshold=0.01, realizations=["nmr"])
    doc["codes"].append(extra)
    reg = load_registry(json.dumps(doc).encode())
    assert len(reg) == 10
    assert max_distance(reg.get("five-qubit"), 10, 2).to_json() == "NA"


@pytest.mark.parametrize(
    "field, value, code_field",
    [
        ("threshold", 1.5, "threshold"),
        ("k", 0, "k"),
        ("complexity", 7, "complexity"),
        ("realizations", ["simulation"], "realizations"),
        ("protection", "some", "protection"),
        ("overhead", {"num": [1], "den": 0}, "overhead"),
    ],
)
def test_schema_errors_name_code_and_field(registry, field, value, code_field):
    doc = _doc(registry)
    doc["codes"][2][field] = value
    with pytest.raises(RegistryError) as info:
        load_registry(json.dumps(doc).encode())
    assert info.value.code_id == "steane"
    assert info.value.field == code_field


def test_invalid_json():
    with pytest.raises(RegistryError):
        load_registry(b"{not json")


def test_decreasing_overhead_rejected(registry):
    doc = _doc(registry)
    doc["codes"][4]["overhead"] = {"num": [100, -30, 1], "den": 1}  # dips until d=15
    with pytest.raises(RegistryError, match="non-decreasing"):
        load_registry(json.dumps(doc).encode())


def test_validate_code_examples(registry):
    steane = registry.get("steane")
    assert validate_code(steane) == []
    assert "threshold out of (0,1)" in validate_code(dataclasses.replace(steane, threshold=1.5))
    assert "logical_qubits_per_block >= 1" in validate_code(dataclasses.replace(steane, logical_qubits_per_block=0))
    assert validate_code(dataclasses.replace(steane, overhead=OverheadFormula((0,), 1)))


def test_every_builtin_is_valid(registry):
    for code in registry:
        assert validate_code(code) == []
        assert "simulation" not in code.realizations
        assert code.realized_on("simulation")


def test_decoder_counts(registry):
    counts = {c.id: len(c.decoders) for c in registry}
    assert counts == {"repetition": 2, "shor": 1, "steane": 1, "toric": 10, "surface": 10,
                      "bacon-shor": 2, "color": 5, "heavy-hexagon": 3, "gross": 1}


def test_lookup_by_display_name(registry):
    assert registry.get("HeavyH").id == "heavy-hexagon"
    assert registry.get("qrep").id == "repetition"
    with pytest.raises(KeyError):
        registry.get("nope")


def test_distance_domain():
    assert DistanceDomain.fixed(3).admits(3) and not DistanceDomain.fixed(3).admits(4)
    assert DistanceDomain.any_from(2).admits(1000) and not DistanceDomain.any_from(2).admits(1)


def test_formula_str():
    assert str(OverheadFormula((-1, -2, 5), 2)) == "(-1 - 2*d + 5*d^2)/2"
    assert str(OverheadFormula((0, 12))) == "12*d"
