"""Quantum Reed-Muller codes QRM_m(q, r) built from hypercube subcubes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

from .errors import DomainError, UsageError
from .hypercube import Subcube, enumerate_subcubes, format_index_set, masks_of_size
from .pauli import PauliOp, subcube_pauli


def gf2_rank(rows: np.ndarray | list[int]) -> int:
    """Rank over F_2 of 0/1 rows (array) or of ints used as bit vectors."""
    if isinstance(rows, np.ndarray):
        rows = [_row_to_int(r) for r in rows]
    pivots: dict[int, int] = {}
    for v in rows:
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                break
            v ^= pivots[top]
    return len(pivots)


def _row_to_int(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row.astype(np.uint8), bitorder="little").tobytes(), "little")


def rm_generator_matrix(r: int, m: int) -> np.ndarray:
    """Indicator rows of the standard subcubes <J> with |J| >= m - r.

    These rows are linearly independent, so they form a basis of RM(r, m).
    """
    if not -1 <= r <= m:
        raise UsageError(f"RM order {r} out of range -1..{m}")
    rows = [Subcube.standard(m, t).indicator() for size in range(m - r, m + 1)
            for t in masks_of_size(m, size)] if r >= 0 else []
    if not rows:
        return np.zeros((0, 1 << m), dtype=np.uint8)
    return np.array(rows, dtype=np.uint8)


def rm_dimension(r: int, m: int) -> int:
    return sum(comb(m, i) for i in range(0, r + 1)) if r >= 0 else 0


@dataclass(frozen=True)
class CodeParams:
    n: int
    kappa: int
    distance: int
    k_max: int | None


@dataclass(frozen=True)
class QrmCode:
    m: int
    q: int
    r: int

    def __post_init__(self):
        if not 0 <= self.q <= self.r <= self.m:
            raise DomainError(f"need 0 <= q <= r <= m, got m={self.m} q={self.q} r={self.r}")

    def __str__(self) -> str:
        return f"QRM_{self.m}({self.q},{self.r})"

    @property
    def n(self) -> int:
        return 1 << self.m

    @cached_property
    def logical_indices(self) -> tuple[int, ...]:
        """Logical labels J (as masks), ordered by |J| then lexicographically."""
        return tuple(t for size in range(self.q + 1, self.r + 1)
                     for t in masks_of_size(self.m, size))

    @cached_property
    def logical_position(self) -> dict[int, int]:
        return {j: i for i, j in enumerate(self.logical_indices)}

    @property
    def kappa(self) -> int:
        return len(self.logical_indices)

    def require_logicals(self) -> None:
        if self.q >= self.r:
            raise DomainError(f"{self} encodes no logical qubits (q = r)")

    def x_logical_support(self, j: int) -> Subcube:
        full = (1 << self.m) - 1
        return Subcube(self.m, j, full & ~j)


def parameters(code: QrmCode) -> CodeParams:
    m, q, r = code.m, code.q, code.r
    kappa = sum(comb(m, i) for i in range(q + 1, r + 1))
    k_max = (m - q - 1) // r if r > 0 else None
    return CodeParams(1 << m, kappa, 1 << min(q + 1, m - r), k_max)


def stabilizer_generators(code: QrmCode) -> tuple[list[PauliOp], list[PauliOp]]:
    xs = [subcube_pauli("X", c) for c in enumerate_subcubes(code.m, code.m - code.q)]
    zs = ([subcube_pauli("Z", c) for c in enumerate_subcubes(code.m, code.r + 1)]
          if code.r + 1 <= code.m else [])
    return xs, zs


def logical_basis(code: QrmCode) -> list[tuple[int, PauliOp, PauliOp]]:
    """(J, Z-bar_J, X-bar_J) for each logical label J in code order."""
    return [
        (j, subcube_pauli("Z", Subcube.standard(code.m, j)),
         subcube_pauli("X", code.x_logical_support(j)))
        for j in code.logical_indices
    ]


def logical_label(j: int) -> str:
    return "J=" + format_index_set(j)


def code_table(max_m: int, min_kmax: int) -> list[dict]:
    """Every QRM_m(q, r) with m <= max_m, q < r and k_max >= min_kmax, ordered by (m, r, q)."""
    rows = []
    for m in range(1, max_m + 1):
        for r in range(1, m + 1):
            for q in range(0, r):
                p = parameters(QrmCode(m, q, r))
                if p.k_max is not None and p.k_max >= min_kmax:
                    rows.append({"m": m, "q": q, "r": r, "n": p.n, "kappa": p.kappa,
                                 "d": p.distance, "k_max": p.k_max})
    return rows

