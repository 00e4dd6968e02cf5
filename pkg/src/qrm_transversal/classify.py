"""Which transversal subcube operators preserve a QRM code, and what they do there."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Literal

from .errors import DomainError, UsageError
from .hypercube import Subcube, intersect, popcount
from .qrm_code import QrmCode


class Classification(enum.Enum):
    NOT_PRESERVING = "NotPreserving"
    STABILIZER = "Stabilizer"
    NONTRIVIAL_LOGICAL = "NontrivialLogical"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class OperatorSpec:
    """``Z(k)`` or ``X(k)`` applied transversally on a subcube; ``cube=None`` is the identity."""

    basis: Literal["Z", "X"]
    signed: bool
    k: int
    cube: Subcube | None

    def __post_init__(self):
        if self.basis not in ("Z", "X"):
            raise UsageError(f"basis must be Z or X, got {self.basis!r}")
        if self.k < 0:
            raise UsageError("level k must be non-negative")

    @property
    def modulus(self) -> int:
        return 1 << (self.k + 1)

    def describe(self) -> str:
        sign = "~" if self.signed else ""
        return f"{sign}{self.basis}({self.k}) on {self.cube}"


@dataclass(frozen=True)
class Thresholds:
    logical_min: int
    logical_max: int

    @property
    def stabilizer_min(self) -> int:
        return self.logical_max + 1


def effective_qr(code: QrmCode, basis: str) -> tuple[int, int]:
    """(q, r) as seen by the given basis; X swaps the roles of the two RM orders."""
    if basis == "Z":
        return code.q, code.r
    return code.m - code.r - 1, code.m - code.q - 1


def thresholds(code: QrmCode, basis: str, k: int) -> Thresholds:
    code.require_logicals()
    q, r = effective_qr(code, basis)
    return Thresholds(q + k * r + 1, (k + 1) * r)


def classify_dimension(code: QrmCode, basis: str, k: int, dim: int) -> Classification:
    t = thresholds(code, basis, k)
    if dim >= t.stabilizer_min:
        return Classification.STABILIZER
    if dim >= t.logical_min:
        return Classification.NONTRIVIAL_LOGICAL
    return Classification.NOT_PRESERVING


def classify(code: QrmCode, spec: OperatorSpec) -> Classification:
    if spec.cube is None:
        return Classification.STABILIZER
    if spec.cube.m != code.m:
        raise UsageError(f"subcube lives in m={spec.cube.m}, code has m={code.m}")
    return classify_dimension(code, spec.basis, spec.k, spec.cube.dim)


@dataclass(frozen=True)
class Conjugation:
    """Z-side operator conjugating X_B: ``omega^phase_exp * residual * X_B``."""

    phase_exp: int
    modulus: int
    residual: OperatorSpec | None

    @property
    def phase_free(self) -> bool:
        return self.phase_exp == 0


def conjugate_x(spec: OperatorSpec, b: Subcube) -> Conjugation:
    if spec.basis != "Z":
        raise UsageError("conjugation identity is stated for Z-basis operators")
    if spec.cube is None:
        return Conjugation(0, spec.modulus, None)
    common = intersect(spec.cube, b)
    if common is None:
        return Conjugation(0, spec.modulus, None)
    # Each qubit contributes omega (or omega^-1 on odd-weight vertices when signed).
    if spec.signed:
        total = sum(-1 if popcount(x) & 1 else 1 for x in common.vertices())
    else:
        total = common.size
    residual = replace(spec, k=spec.k - 1, cube=common) if spec.k >= 1 else None
    return Conjugation(total % spec.modulus, spec.modulus, residual)


def admissible_table(code: QrmCode, k_max: int) -> list[tuple[str, list[Classification]]]:
    """Rows X, Z, Z~(1) .. Z~(k_max); columns are subcube dimensions 0..m."""
    dims = range(code.m + 1)
    rows = [("X", [classify_dimension(code, "X", 0, d) for d in dims]),
            ("Z", [classify_dimension(code, "Z", 0, d) for d in dims])]
    for k in range(1, k_max + 1):
        rows.append((f"Z~({k})", [classify_dimension(code, "Z", k, d) for d in dims]))
    return rows


TABLE_GLYPH = {
    Classification.NONTRIVIAL_LOGICAL: "L",
    Classification.STABILIZER: "I",
    Classification.NOT_PRESERVING: ".",
}


def render_admissible(code: QrmCode, k_max: int) -> str:
    rows = admissible_table(code, k_max)
    width = max(len(label) for label, _ in rows)
    header = " " * width + " " + " ".join(f"{d:>2}" for d in range(code.m + 1))
    lines = [header]
    for label, cells in rows:
        lines.append(f"{label:>{width}} " + " ".join(f"{TABLE_GLYPH[c]:>2}" for c in cells))
    return "\n".join(lines)


def require_preserving(code: QrmCode, spec: OperatorSpec) -> Classification:
    tag = classify(code, spec)
    if tag is Classification.NOT_PRESERVING:
        raise DomainError(f"{spec.describe()} does not preserve the code space of {code}")
    return tag
