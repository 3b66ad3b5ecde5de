"""Exhaustive stabilizer-code checks in the binary symplectic picture.

A Pauli operator on ``n`` qubits is a pair of GF(2) vectors ``(x | z)``; qubit
``i`` carries X if ``x[i]``, Z if ``z[i]`` and Y if both.  Phases never matter
for syndromes, group membership or weight, so they are dropped.

Distances are found by brute force: every operator of weight 1, 2, ... is
enumerated in a fixed lexicographic order (support positions first, then the
letters X < Y < Z on that support), so reported witnesses are reproducible.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "PauliOperator",
    "StabilizerCode",
    "Restrict",
    "DistanceResult",
    "CorrectabilityReport",
    "EnumerationLimitError",
    "DEFAULT_CAP",
    "parse_pauli",
    "commutes",
    "all_commute",
    "gf2_rank",
    "syndrome",
    "in_stabilizer_group",
    "min_distance",
    "check_correctability",
    "builtin_codes",
    "load_code",
    "apply_pauli",
]

DEFAULT_CAP = 10**7

_LETTERS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


class EnumerationLimitError(RuntimeError):
    """The requested search would examine more operators than the cap allows."""


class Restrict(str, enum.Enum):
    ALL = "all"
    X_ONLY = "x"
    Z_ONLY = "z"


class PauliOperator:
    """Phase-free Pauli operator stored as two boolean arrays."""

    __slots__ = ("x", "z")

    def __init__(self, x, z):
        x = np.asarray(x, dtype=np.uint8) & 1
        z = np.asarray(z, dtype=np.uint8) & 1
        if x.ndim != 1 or x.shape != z.shape:
            raise ValueError("x and z bit vectors must be 1-d and of equal length")
        x.flags.writeable = False
        z.flags.writeable = False
        self.x = x
        self.z = z

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(np.zeros(n, np.uint8), np.zeros(n, np.uint8))

    @property
    def n(self) -> int:
        return self.x.shape[0]

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.x | self.z))

    @property
    def vector(self) -> np.ndarray:
        return np.concatenate([self.x, self.z])

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        _check_size(self, other)
        return PauliOperator(self.x ^ other.x, self.z ^ other.z)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return self.n == other.n and bool(np.all(self.x == other.x) and np.all(self.z == other.z))

    def __hash__(self) -> int:
        return hash((self.x.tobytes(), self.z.tobytes()))

    def __str__(self) -> str:
        return "".join("IXZY"[int(a) + 2 * int(b)] for a, b in zip(self.x, self.z))

    def __repr__(self) -> str:
        return f"PauliOperator({str(self)!r})"


def parse_pauli(text: str) -> PauliOperator:
    """Parse a string such as ``"IXZYI"``; character ``i`` acts on qubit ``i``."""
    if not text:
        raise ValueError("empty Pauli string")
    bits = []
    for pos, ch in enumerate(text.upper()):
        if ch not in _LETTERS:
            raise ValueError(f"illegal Pauli character {ch!r} at position {pos}")
        bits.append(_LETTERS[ch])
    x, z = zip(*bits)
    return PauliOperator(x, z)


def _as_pauli(p) -> PauliOperator:
    return parse_pauli(p) if isinstance(p, str) else p


def _check_size(a: PauliOperator, b: PauliOperator) -> None:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n} qubits")


def commutes(a, b) -> bool:
    a, b = _as_pauli(a), _as_pauli(b)
    _check_size(a, b)
    return (int(a.x @ b.z) + int(a.z @ b.x)) % 2 == 0


def all_commute(operators: Sequence[PauliOperator]) -> bool:
    return all(commutes(a, b) for a, b in itertools.combinations(operators, 2))


def _row_reduce(matrix: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2); returns (rows, pivot columns)."""
    m = (np.array(matrix, dtype=np.uint8) & 1).copy()
    pivots = []
    row = 0
    for col in range(m.shape[1]):
        if row == m.shape[0]:
            break
        hits = np.nonzero(m[row:, col])[0]
        if hits.size == 0:
            continue
        pivot = row + hits[0]
        if pivot != row:
            m[[row, pivot]] = m[[pivot, row]]
        others = np.nonzero(m[:, col])[0]
        others = others[others != row]
        m[others] ^= m[row]
        pivots.append(col)
        row += 1
    return m[:row], pivots


def gf2_rank(matrix) -> int:
    matrix = np.atleast_2d(np.asarray(matrix))
    if matrix.size == 0:
        return 0
    return len(_row_reduce(matrix)[1])


class StabilizerCode:
    """Stabilizer group given by commuting, independent generators."""

    def __init__(self, generators: Iterable, name: str = ""):
        gens = tuple(_as_pauli(g) for g in generators)
        if not gens:
            raise ValueError("a stabilizer code needs at least one generator")
        n = gens[0].n
        if any(g.n != n for g in gens):
            raise ValueError("generators act on different numbers of qubits")
        self.name = name
        self.generators = gens
        self.n = n
        self.check_matrix = np.array([g.vector for g in gens], dtype=np.uint8)
        for (i, a), (j, b) in itertools.combinations(enumerate(gens), 2):
            if not commutes(a, b):
                raise ValueError(f"generators {i} ({a}) and {j} ({b}) anticommute")
        if gf2_rank(self.check_matrix) != len(gens):
            raise ValueError("generators are not independent over GF(2)")
        self._rref, self._pivots = _row_reduce(self.check_matrix)

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def num_logical(self) -> int:
        return self.n - self.num_generators

    def _symplectic_check(self) -> np.ndarray:
        # swap x/z halves so that a plain product gives the symplectic form
        n = self.n
        return np.concatenate([self.check_matrix[:, n:], self.check_matrix[:, :n]], axis=1)

    def syndromes(self, vectors: np.ndarray) -> np.ndarray:
        """Syndromes of many operators given as rows of ``(x | z)`` bits."""
        return (vectors.astype(np.int64) @ self._symplectic_check().T.astype(np.int64)) & 1

    def contains(self, vectors: np.ndarray) -> np.ndarray:
        """Row-wise membership of ``(x | z)`` vectors in the stabilizer group."""
        residual = np.array(np.atleast_2d(vectors), dtype=np.uint8) & 1
        for row, col in zip(self._rref, self._pivots):
            hit = residual[:, col] == 1
            residual[hit] ^= row
        return ~residual.any(axis=1)

    def __repr__(self) -> str:
        return f"StabilizerCode({self.name!r}, n={self.n}, generators={[str(g) for g in self.generators]})"


def syndrome(code: StabilizerCode, error) -> tuple[int, ...]:
    error = _as_pauli(error)
    if error.n != code.n:
        raise ValueError(f"size mismatch: code has {code.n} qubits, error has {error.n}")
    return tuple(int(b) for b in code.syndromes(error.vector[None, :])[0])


def in_stabilizer_group(code: StabilizerCode, p) -> bool:
    p = _as_pauli(p)
    if p.n != code.n:
        raise ValueError(f"size mismatch: code has {code.n} qubits, operator has {p.n}")
    return bool(code.contains(p.vector[None, :])[0])


@dataclass(frozen=True)
class DistanceResult:
    """``distance`` is None when nothing was found up to ``w_max``."""

    distance: Optional[int]
    w_max: int
    witness: Optional[PauliOperator]
    examined: int

    @property
    def found(self) -> bool:
        return self.distance is not None

    def __str__(self) -> str:
        return f"distance = {self.distance}" if self.found else f"distance > {self.w_max}"


_LETTER_BITS = {
    Restrict.ALL: np.array([[1, 0], [1, 1], [0, 1]], dtype=np.uint8),  # X, Y, Z
    Restrict.X_ONLY: np.array([[1, 0]], dtype=np.uint8),
    Restrict.Z_ONLY: np.array([[0, 1]], dtype=np.uint8),
}


def enumeration_size(n: int, w_max: int, restrict: Restrict = Restrict.ALL) -> int:
    a = len(_LETTER_BITS[Restrict(restrict)])
    return sum(math.comb(n, w) * a**w for w in range(1, w_max + 1))


def _weight_block(n: int, w: int, letters: np.ndarray) -> np.ndarray:
    """All operators of weight ``w`` as ``(x | z)`` rows, in lexicographic order."""
    supports = np.array(list(itertools.combinations(range(n), w)), dtype=np.intp)
    choices = np.array(list(itertools.product(range(len(letters)), repeat=w)), dtype=np.intp)
    total = len(supports) * len(choices)
    out = np.zeros((total, 2 * n), dtype=np.uint8)
    rows = np.arange(total)
    sup = np.repeat(supports, len(choices), axis=0)
    cho = np.tile(choices, (len(supports), 1))
    for slot in range(w):
        bits = letters[cho[:, slot]]
        out[rows, sup[:, slot]] = bits[:, 0]
        out[rows, n + sup[:, slot]] = bits[:, 1]
    return out


def min_distance(
    code: StabilizerCode,
    w_max: int,
    restrict: Restrict = Restrict.ALL,
    cap: int = DEFAULT_CAP,
) -> DistanceResult:
    """Smallest weight of a logical operator (zero syndrome, outside the group)."""
    restrict = Restrict(restrict)
    if w_max < 1:
        raise ValueError("w_max must be >= 1")
    w_max = min(w_max, code.n)
    size = enumeration_size(code.n, w_max, restrict)
    if size > cap:
        raise EnumerationLimitError(f"{size} candidate operators exceed the cap of {cap}")
    letters = _LETTER_BITS[restrict]
    examined = 0
    for w in range(1, w_max + 1):
        block = _weight_block(code.n, w, letters)
        undetected = ~code.syndromes(block).any(axis=1)
        candidates = block[undetected]
        if len(candidates):
            logical = np.nonzero(~code.contains(candidates))[0]
            if logical.size:
                first = np.nonzero(undetected)[0][logical[0]]
                examined += int(first) + 1
                row = block[first]
                return DistanceResult(w, w_max, PauliOperator(row[: code.n], row[code.n :]), examined)
        examined += len(block)
    return DistanceResult(None, w_max, None, examined)


@dataclass(frozen=True)
class CorrectabilityReport:
    t: int
    correctable: bool
    witness: Optional[PauliOperator]
    examined: int

    def to_dict(self) -> dict:
        return {
            "claim": f"corrects {self.t}",
            "result": self.correctable,
            "witness": None if self.witness is None else str(self.witness),
            "examined": self.examined,
        }


def check_correctability(
    code: StabilizerCode,
    t: int,
    restrict: Restrict = Restrict.ALL,
    cap: int = DEFAULT_CAP,
) -> CorrectabilityReport:
    """Every error of weight <= t is correctable iff the distance exceeds 2t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    result = min_distance(code, 2 * t, restrict, cap)
    return CorrectabilityReport(t, not result.found, result.witness, result.examined)


def apply_pauli(p: PauliOperator, state: np.ndarray) -> np.ndarray:
    """Apply a phase-free Pauli (as ``X^x Z^z`` per qubit) to a state vector.

    Qubit 0 is the most significant bit of the basis index.  Y is applied as
    ``XZ``, which differs from Y by a global phase.
    """
    n = p.n
    state = np.asarray(state)
    if state.shape != (2**n,):
        raise ValueError(f"state must have length 2**{n}")
    idx = np.arange(2**n)
    weights = 1 << np.arange(n - 1, -1, -1)
    zmask = int(p.z @ weights)
    xmask = int(p.x @ weights)
    parity = np.array([bin(i & zmask).count("1") & 1 for i in range(2**n)])
    phased = state * np.where(parity, -1, 1)
    out = np.empty_like(phased)
    out[idx ^ xmask] = phased
    return out


def _rotated_surface_d3() -> list[str]:
    # 3x3 data qubits, index = 3*row + col; chessboard bulk plus weight-2 boundaries
    def op(letter, qubits):
        s = ["I"] * 9
        for q in qubits:
            s[q] = letter
        return "".join(s)

    x_checks = [(0, 1, 3, 4), (4, 5, 7, 8), (1, 2), (6, 7)]
    z_checks = [(1, 2, 4, 5), (3, 4, 6, 7), (0, 3), (5, 8)]
    return [op("X", q) for q in x_checks] + [op("Z", q) for q in z_checks]


_BUILTIN_GENERATORS = {
    "repetition-3": ["ZZI", "IZZ"],
    "steane-7": ["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"],
    "shor-9": [
        "ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII", "IIIIIIZZI", "IIIIIIIZZ",
        "XXXXXXIII", "IIIXXXXXX",
    ],
    "bacon-shor-9": ["XXXXXXIII", "IIIXXXXXX", "ZZIZZIZZI", "IZZIZZIZZ"],
    "rotated-surface-d3": _rotated_surface_d3(),
}


def builtin_codes() -> dict[str, StabilizerCode]:
    return {name: StabilizerCode(gens, name) for name, gens in _BUILTIN_GENERATORS.items()}


def load_code(source) -> StabilizerCode:
    """Read ``{"name", "n", "generators": [...]}`` from a path, JSON text, or dict."""
    if isinstance(source, dict):
        doc = source
    elif isinstance(source, (bytes, str)) and str(source).lstrip().startswith("{"):
        doc = json.loads(source)
    else:
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    code = StabilizerCode(doc["generators"], doc.get("name", ""))
    if "n" in doc and doc["n"] != code.n:
        raise ValueError(f"declared n={doc['n']} but generators act on {code.n} qubits")
    return code
