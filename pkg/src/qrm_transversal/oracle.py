"""Brute-force check of diagonal transversal operators against the CSS coset structure.

Logical basis state |v> of QRM_m(q, r) is the uniform superposition over the
coset u_v + RM(q, m), where u_v XORs the X-logical supports selected by v.
A diagonal operator with exponent map f multiplies basis string c by
omega^(f . c). It preserves the code space exactly when f . c is constant on
every coset, and its logical action is then the per-coset phase.

Nothing here consults the classification formulas or the cover synthesis.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from .classify import Classification, OperatorSpec
from .errors import DomainError, UsageError, VerificationFailure
from .hypercube import format_vertex
from .qrm_code import QrmCode, rm_generator_matrix
from .synthesis import CzCircuit

EXHAUSTIVE_LIMIT = 1 << 24
DEFAULT_SAMPLE = 1 << 14
MAX_COSET_RANK = 16
_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True)
class PhaseFunction:
    """Exponents of ``(x) Z(k)^f(x)`` as residues mod 2^(k+1)."""

    k: int
    exponents: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.exponents, dtype=np.int64) % (1 << (self.k + 1))
        arr.setflags(write=False)
        object.__setattr__(self, "exponents", arr)

    @property
    def modulus(self) -> int:
        return 1 << (self.k + 1)

    def __add__(self, other: PhaseFunction) -> PhaseFunction:
        if other.k != self.k:
            raise UsageError("phase functions at different levels")
        return PhaseFunction(self.k, self.exponents + other.exponents)


def phase_of_operator(spec: OperatorSpec, m: int) -> PhaseFunction:
    if spec.basis != "Z":
        raise UsageError("the oracle simulates Z-basis (diagonal) operators only")
    if spec.cube is None:
        return PhaseFunction(spec.k, np.zeros(1 << m, dtype=np.int64))
    if spec.cube.m != m:
        raise UsageError("subcube dimension does not match the code")
    vec = spec.cube.signed_indicator() if spec.signed else spec.cube.indicator()
    return PhaseFunction(spec.k, vec)


def logical_x_matrix(code: QrmCode) -> np.ndarray:
    rows = [code.x_logical_support(j).indicator() for j in code.logical_indices]
    return np.array(rows, dtype=np.uint8).reshape(len(rows), code.n)


def coset_support(code: QrmCode, v: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """(shift u_v, F_2 basis of RM(q, m)) describing the support of |v>."""
    v = np.asarray(v, dtype=np.uint8)
    if v.shape != (code.kappa,):
        raise UsageError(f"logical word must have {code.kappa} bits")
    shift = (v.astype(np.int64) @ logical_x_matrix(code).astype(np.int64)) % 2
    return shift.astype(np.uint8), rm_generator_matrix(code.q, code.m)


def _span(basis: np.ndarray) -> np.ndarray:
    """Every F_2 combination of the rows, built by doubling."""
    out = np.zeros((1, basis.shape[1]), dtype=np.uint8)
    for row in basis:
        out = np.concatenate([out, out ^ row], axis=0)
    return out


def circuit_profile(circuit: CzCircuit, code: QrmCode, k: int, words: np.ndarray) -> np.ndarray:
    """Residue 2^k * (sum over gates of the AND of their controls) mod 2^(k+1)."""
    pos = code.logical_position
    parity = np.zeros(words.shape[0], dtype=np.int64)
    for gate in circuit.gates:
        idx = [pos[j] for j in gate]
        parity ^= np.all(words[:, idx] == 1, axis=1).astype(np.int64)
    return (parity << k) % (1 << (k + 1))


def _word_string(bits: np.ndarray) -> str:
    return "".join(str(int(b)) for b in bits)


@dataclass
class OracleVerdict:
    """Outcome for one phase function."""

    preserves: bool = True
    nonzero_profile: bool = False
    matches_circuit: bool | None = None
    witness: dict | None = None
    circuit_witness: dict | None = None
    sampled: bool = False
    words_checked: int = 0

    @property
    def classification(self) -> Classification:
        if not self.preserves:
            return Classification.NOT_PRESERVING
        if self.nonzero_profile:
            return Classification.NONTRIVIAL_LOGICAL
        return Classification.STABILIZER


@dataclass(frozen=True)
class PhaseProfile:
    k: int
    words: np.ndarray
    residues: np.ndarray
    sampled: bool = False

    def as_dict(self) -> dict[str, int]:
        return {_word_string(w): int(p) for w, p in zip(self.words, self.residues)}


@dataclass
class CodeOracle:
    """Enumerates code-space cosets of one code and evaluates phase functions on them."""

    code: QrmCode
    sample: int | None = None
    seed: int = 0
    exhaustive_limit: int = EXHAUSTIVE_LIMIT
    _lx: np.ndarray = field(init=False, repr=False)
    _coset: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        gens = rm_generator_matrix(self.code.q, self.code.m)
        if gens.shape[0] > MAX_COSET_RANK:
            raise DomainError(
                f"{self.code}: cosets have 2^{gens.shape[0]} members, beyond the oracle's 2^{MAX_COSET_RANK}")
        self._coset = _span(gens)
        self._lx = logical_x_matrix(self.code)
        total = self._coset.shape[0] << self.code.kappa
        self.sampled = self.sample is not None or total > self.exhaustive_limit
        if self.sampled:
            n_words = self.sample if self.sample is not None else DEFAULT_SAMPLE
            if n_words < 1:
                raise UsageError("sample size must be positive")
            rng = np.random.default_rng(self.seed)
            words = rng.integers(0, 2, size=(n_words, self.code.kappa), dtype=np.uint8)
            words[0] = 0
            self._sample_words = words
        self.n_words = self._sample_words.shape[0] if self.sampled else 1 << self.code.kappa

    @property
    def coset_size(self) -> int:
        return self._coset.shape[0]

    def _word_chunks(self, per_chunk: int) -> Iterator[np.ndarray]:
        kappa = self.code.kappa
        if self.sampled:
            for start in range(0, self.n_words, per_chunk):
                yield self._sample_words[start:start + per_chunk]
            return
        shifts = np.arange(kappa, dtype=np.int64)
        for start in range(0, self.n_words, per_chunk):
            ids = np.arange(start, min(start + per_chunk, self.n_words), dtype=np.int64)
            yield ((ids[:, None] >> shifts[None, :]) & 1).astype(np.uint8)

    def codewords(self, words: np.ndarray) -> np.ndarray:
        """Members of each word's coset, shape (words, coset_size, n)."""
        shift = (words.astype(np.float64) @ self._lx.astype(np.float64)).astype(np.int64) % 2
        return shift.astype(np.uint8)[:, None, :] ^ self._coset[None, :, :]

    def run(self, functions: Sequence[PhaseFunction],
            circuits: Sequence[CzCircuit | None] | None = None) -> list[OracleVerdict]:
        if not functions:
            return []
        n = self.code.n
        for f in functions:
            if f.exponents.shape != (n,):
                raise UsageError(f"phase function length {f.exponents.shape} != {n}")
        if circuits is not None and len(circuits) != len(functions):
            raise UsageError("need one circuit per phase function")
        exps = np.stack([f.exponents for f in functions], axis=1).astype(np.float64)
        mods = np.array([f.modulus for f in functions], dtype=np.int64)
        verdicts = [OracleVerdict(sampled=self.sampled, words_checked=self.n_words) for _ in functions]
        if circuits is not None:
            for v, c in zip(verdicts, circuits):
                v.matches_circuit = None if c is None else True
        alive = np.ones(len(functions), dtype=bool)
        per_chunk = max(1, _CHUNK_CELLS // (self.coset_size * max(n, len(functions))))
        base = None
        for words in self._word_chunks(per_chunk):
            members = self.codewords(words)
            flat = members.reshape(-1, n).astype(np.float64)
            phases = (flat @ exps).astype(np.int64).reshape(words.shape[0], self.coset_size, -1) % mods
            if base is None:
                base = phases[0, 0, :].copy()
            spread = (phases != phases[:, :1, :]).any(axis=1)
            for o in np.flatnonzero(spread.any(axis=0) & alive):
                w = int(np.flatnonzero(spread[:, o])[0])
                j = int(np.flatnonzero(phases[w, :, o] != phases[w, 0, o])[0])
                verdicts[o].preserves = False
                verdicts[o].witness = {
                    "logical_word": _word_string(words[w]),
                    "members": [_word_string(members[w, 0]), _word_string(members[w, j])],
                    "phases": [int(phases[w, 0, o]), int(phases[w, j, o])],
                    "modulus": int(mods[o]),
                }
                alive[o] = False
            profile = (phases[:, 0, :] - base) % mods
            nonzero = (profile != 0).any(axis=0)
            for o in np.flatnonzero(nonzero & alive):
                verdicts[o].nonzero_profile = True
            if circuits is None:
                continue
            for o, circuit in enumerate(circuits):
                if circuit is None or not alive[o] or not verdicts[o].matches_circuit:
                    continue
                expect = circuit_profile(circuit, self.code, functions[o].k, words)
                bad = np.flatnonzero(expect != profile[:, o])
                if bad.size:
                    w = int(bad[0])
                    verdicts[o].matches_circuit = False
                    verdicts[o].circuit_witness = {
                        "logical_word": _word_string(words[w]),
                        "operator_phase": int(profile[w, o]),
                        "circuit_phase": int(expect[w]),
                        "modulus": int(mods[o]),
                    }
        for o, v in enumerate(verdicts):
            if not v.preserves and v.matches_circuit is not None:
                v.matches_circuit = False
        return verdicts

    def profile(self, f: PhaseFunction) -> PhaseProfile:
        verdict = self.run([f])[0]
        if not verdict.preserves:
            raise VerificationFailure("operator does not preserve the code space", verdict.witness)
        words, residues, base = [], [], None
        exps = f.exponents.astype(np.float64)
        for chunk in self._word_chunks(max(1, _CHUNK_CELLS // (self.coset_size * self.code.n))):
            reps = self.codewords(chunk)[:, 0, :].astype(np.float64)
            ph = (reps @ exps).astype(np.int64) % f.modulus
            if base is None:
                base = ph[0]
            words.append(chunk)
            residues.append((ph - base) % f.modulus)
        return PhaseProfile(f.k, np.concatenate(words), np.concatenate(residues), self.sampled)


def verify_preserves(code: QrmCode, f: PhaseFunction, sample: int | None = None,
                     seed: int = 0) -> OracleVerdict:
    return CodeOracle(code, sample, seed).run([f])[0]


def phase_profile(code: QrmCode, f: PhaseFunction, sample: int | None = None,
                  seed: int = 0) -> PhaseProfile:
    return CodeOracle(code, sample, seed).profile(f)


def oracle_classify(code: QrmCode, spec: OperatorSpec, sample: int | None = None,
                    seed: int = 0) -> Classification:
    f = phase_of_operator(spec, code.m)
    return CodeOracle(code, sample, seed).run([f])[0].classification


def verify_equivalence(code: QrmCode, spec: OperatorSpec, circuit: CzCircuit,
                       sample: int | None = None, seed: int = 0) -> OracleVerdict:
    f = phase_of_operator(spec, code.m)
    return CodeOracle(code, sample, seed).run([f], [circuit])[0]


def physical_phase_string(f: PhaseFunction, m: int) -> list[tuple[str, int]]:
    """(vertex string, residue) for each qubit with a non-zero exponent."""
    return [(format_vertex(x, m), int(e)) for x, e in enumerate(f.exponents) if e]
