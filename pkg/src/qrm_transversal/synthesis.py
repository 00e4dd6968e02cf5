"""Logical multi-controlled-Z circuits implemented by transversal subcube operators.

Generator sets (cover targets ``K`` and logical labels ``J``) are bitmasks.
A gate is a frozenset of logical labels; a circuit is a set of gates and
composes by symmetric difference, since every C^J Z squares to identity.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass

from .classify import Classification, OperatorSpec, classify_dimension, require_preserving
from .errors import DomainError, UsageError
from .hypercube import Subcube, format_index_set, masks_of_size, parse_index_list, popcount, submasks
from .qrm_code import QrmCode, logical_label

Gate = frozenset[int]


@dataclass(frozen=True)
class CzCircuit:
    gates: frozenset[Gate]

    @classmethod
    def of(cls, gates: Iterable[Iterable[int]]) -> CzCircuit:
        """Build from gates, cancelling repeats and dropping the empty gate."""
        acc: set[Gate] = set()
        for g in gates:
            g = frozenset(g)
            if g:
                acc ^= {g}
        return cls(frozenset(acc))

    @classmethod
    def empty(cls) -> CzCircuit:
        return cls(frozenset())

    def __xor__(self, other: CzCircuit) -> CzCircuit:
        return CzCircuit(self.gates ^ other.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def ordered(self, code: QrmCode) -> list[list[int]]:
        """Gates as sorted lists of labels, in a canonical order."""
        pos = code.logical_position
        out = [sorted(g, key=pos.__getitem__) for g in self.gates]
        out.sort(key=lambda g: (len(g), [pos[j] for j in g]))
        return out

    def to_json(self, code: QrmCode) -> list[list[str]]:
        return [[logical_label(j) for j in g] for g in self.ordered(code)]

    def to_text(self, code: QrmCode) -> str:
        if not self.gates:
            return "I"
        parts = []
        for g in self.ordered(code):
            name = "C" * (len(g) - 1) + "Z"
            parts.append(f"{name}[{','.join(format_index_set(j) for j in g)}]")
        return " ".join(parts)

    @classmethod
    def from_json(cls, code: QrmCode, gates: list[list[str]]) -> CzCircuit:
        out = []
        for gate in gates:
            labels = []
            for label in gate:
                text = label.strip()
                if text.startswith("J="):
                    text = text[2:]
                j = parse_index_list(text)
                if j not in code.logical_position:
                    raise UsageError(f"{label!r} is not a logical label of {code}")
                labels.append(j)
            if len(set(labels)) != len(labels):
                raise UsageError(f"gate {gate} repeats a label")
            out.append(labels)
        return cls.of(out)


def level_of(code: QrmCode, k_set: int) -> int | None:
    """The k with K in Q_k, or None when |K| falls between bands."""
    code.require_logicals()
    size = popcount(k_set)
    if size == 0:
        return None
    k = -(-size // code.r) - 1
    return k if size >= code.q + k * code.r + 1 else None


def index_set_qk(code: QrmCode, k: int) -> list[int]:
    code.require_logicals()
    lo, hi = code.q + k * code.r + 1, min((k + 1) * code.r, code.m)
    return [t for size in range(lo, hi + 1) for t in masks_of_size(code.m, size)]


def _check_target(code: QrmCode, k_set: int, k: int | None = None) -> int:
    if k_set >> code.m:
        raise UsageError(f"K exceeds m={code.m}")
    level = level_of(code, k_set)
    if level is None:
        raise DomainError(f"no level: K={format_index_set(k_set)} lies in no band of {code}")
    if k is not None and level != k:
        raise DomainError(f"K={format_index_set(k_set)} belongs to level {level}, not {k}")
    return level


def minimal_covers(code: QrmCode, k_set: int) -> list[Gate]:
    """(k+1)-sets of logical labels inside K whose union is exactly K."""
    level = _check_target(code, k_set)
    inside = [j for j in code.logical_indices if j & ~k_set == 0]
    out = []
    for combo in itertools.combinations(inside, level + 1):
        union = 0
        for j in combo:
            union |= j
        if union == k_set:
            out.append(frozenset(combo))
    return out


def signed_standard_circuit(code: QrmCode, k: int, k_set: int) -> CzCircuit:
    _check_target(code, k_set, k)
    return CzCircuit(frozenset(minimal_covers(code, k_set)))


def unsigned_standard_circuit(code: QrmCode, k: int, k_set: int) -> CzCircuit:
    """Expand Z(k)<K> into signed operators on sub-cubes <J>, J in K.

    Term J carries weight 2^(|K|-|J|), i.e. it acts at level k - (|K| - |J|);
    terms at stabilizer level drop, the rest contribute their covers.
    """
    _check_target(code, k_set, k)
    circuit = CzCircuit.empty()
    size = popcount(k_set)
    for j_set in submasks(k_set):
        drop = size - popcount(j_set)
        if drop > k:
            continue
        tag = classify_dimension(code, "Z", k - drop, popcount(j_set))
        if tag is Classification.STABILIZER:
            continue
        if tag is Classification.NOT_PRESERVING:
            raise DomainError(f"term <{format_index_set(j_set)}> at level {k - drop} is not preserving")
        circuit ^= CzCircuit(frozenset(minimal_covers(code, j_set)))
    return circuit


def decompose_to_standard(code: QrmCode, k: int, a: Subcube, signed: bool) -> list[tuple[int, int]]:
    """Standard operators (level, K) whose product is logically equal to the operator on ``a``.

    The ``signed`` flag does not change the term list; it only decides how each
    term is later turned into a circuit.
    """
    require_preserving(code, OperatorSpec("Z", signed, k, a))
    bound = (k + 1) * code.r
    base = popcount(a.type_mask)
    return [(k, i | a.type_mask) for i in submasks(a.offset) if popcount(i) + base <= bound]


def arbitrary_subcube_circuit(code: QrmCode, spec: OperatorSpec) -> CzCircuit:
    if spec.basis != "Z":
        raise UsageError("circuit synthesis covers Z-basis operators only")
    if spec.cube is None:
        return CzCircuit.empty()
    circuit = CzCircuit.empty()
    for level, k_set in decompose_to_standard(code, spec.k, spec.cube, spec.signed):
        if spec.signed:
            circuit ^= signed_standard_circuit(code, level, k_set)
        else:
            circuit ^= unsigned_standard_circuit(code, level, k_set)
    return circuit


def circuit_conjugate_x(c: CzCircuit, j: int) -> CzCircuit:
    """The diagonal part left after pushing logical X_j through the circuit."""
    return CzCircuit.of(g - {j} for g in c.gates if j in g)


def dense_set(code: QrmCode, j: int, k_set: int) -> list[int]:
    """K' in Q_{k-1}, K' inside K, with K' u J = K."""
    level = _check_target(code, k_set)
    if level == 0:
        return []
    return [kp for kp in index_set_qk(code, level - 1) if kp & ~k_set == 0 and kp | j == k_set]

