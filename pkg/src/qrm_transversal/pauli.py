"""Pauli operators on the 2^m qubits of a hypercube code.

Supports are Python ints used as bit vectors: bit ``x`` is the qubit at
vertex ``x``. An operator is ``i^phase_exp * X^x_support * Z^z_support``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import UsageError
from .hypercube import Subcube

Basis = Literal["X", "Z"]


@dataclass(frozen=True)
class PauliOp:
    n: int
    x_support: int = 0
    z_support: int = 0
    phase_exp: int = 0

    def __post_init__(self):
        if (self.x_support | self.z_support) >> self.n:
            raise UsageError(f"support exceeds {self.n} qubits")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @property
    def weight(self) -> int:
        return (self.x_support | self.z_support).bit_count()

    def __mul__(self, other: PauliOp) -> PauliOp:
        _check_len(self, other)
        # Z^a X^b = (-1)^{a.b} X^b Z^a
        swap = (self.z_support & other.x_support).bit_count()
        return PauliOp(
            self.n,
            self.x_support ^ other.x_support,
            self.z_support ^ other.z_support,
            self.phase_exp + other.phase_exp + 2 * swap,
        )

    def label(self) -> str:
        chars = []
        for i in range(self.n):
            x, z = (self.x_support >> i) & 1, (self.z_support >> i) & 1
            chars.append("IXZY"[x + 2 * z])
        return "".join(chars)


def _check_len(p: PauliOp, q: PauliOp) -> None:
    if p.n != q.n:
        raise UsageError(f"Pauli lengths differ ({p.n} vs {q.n})")


def subcube_pauli(basis: Basis, a: Subcube) -> PauliOp:
    support = 0
    for v in a.vertices():
        support |= 1 << v
    n = 1 << a.m
    if basis == "X":
        return PauliOp(n, x_support=support)
    if basis == "Z":
        return PauliOp(n, z_support=support)
    raise UsageError(f"basis must be X or Z, got {basis!r}")


def commutes(p: PauliOp, q: PauliOp) -> bool:
    """Standard symplectic test."""
    _check_len(p, q)
    overlap = (p.x_support & q.z_support).bit_count() + (p.z_support & q.x_support).bit_count()
    return overlap % 2 == 0
