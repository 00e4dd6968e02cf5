"""Reed-Muller-type modules over Z/2^(k+1) and a probe of their relation to transversal logic."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DomainError, UsageError
from .hypercube import Subcube, all_subcubes, masks_of_size
from .oracle import CodeOracle, PhaseFunction
from .qrm_code import QrmCode


def _valuation(x: int, e: int) -> int:
    if x == 0:
        return e
    return (x & -x).bit_length() - 1


def howell_rows(rows: np.ndarray, e: int) -> list[tuple[int, np.ndarray]]:
    """Echelon basis over Z/2^e with annihilator rows folded in.

    Returns (pivot column, row) pairs; each pivot entry is a power of two and
    entries above a pivot are reduced below it.
    """
    mod = 1 << e
    pending = [r % mod for r in np.asarray(rows, dtype=np.int64) if (r % mod).any()]
    basis: list[tuple[int, np.ndarray]] = []
    n = rows.shape[1] if len(rows) else 0
    for col in range(n):
        hits = [i for i, r in enumerate(pending) if r[col]]
        if not hits:
            continue
        best = min(hits, key=lambda i: _valuation(int(pending[i][col]), e))
        piv = pending.pop(best)
        v = _valuation(int(piv[col]), e)
        unit = int(piv[col]) >> v
        piv = piv * pow(unit, -1, mod) % mod
        rest = []
        for r in pending:
            if r[col]:
                r = (r - (int(r[col]) >> v) * piv) % mod
            if r.any():
                rest.append(r)
        if v:
            ann = (piv << (e - v)) % mod
            if ann.any():
                rest.append(ann)
        pending = rest
        for idx, (c, b) in enumerate(basis):
            if b[col] >> v:
                basis[idx] = (c, (b - (int(b[col]) >> v) * piv) % mod)
        basis.append((col, piv))
    return basis


@dataclass(frozen=True)
class RingModule:
    """Submodule of (Z/2^(k+1))^(2^m) given by generator rows."""

    k: int
    m: int
    generators: np.ndarray = field(repr=False)

    def __post_init__(self):
        gens = np.asarray(self.generators, dtype=np.int64).reshape(-1, 1 << self.m) % self.modulus
        gens.setflags(write=False)
        object.__setattr__(self, "generators", gens)

    @property
    def modulus(self) -> int:
        return 1 << (self.k + 1)

    @cached_property
    def reduced(self) -> list[tuple[int, np.ndarray]]:
        return howell_rows(self.generators, self.k + 1)

    def random_element(self, rng: np.random.Generator) -> np.ndarray:
        coeffs = rng.integers(0, self.modulus, size=self.generators.shape[0], dtype=np.int64)
        return (coeffs @ self.generators) % self.modulus


def membership(f: np.ndarray, module: RingModule) -> bool:
    f = np.asarray(f, dtype=np.int64)
    if f.shape != (1 << module.m,):
        raise UsageError("vector length does not match the module")
    mod = module.modulus
    f = f % mod
    for col, row in module.reduced:
        step = int(row[col])
        if f[col] % step:
            return False
        f = (f - (int(f[col]) // step) * row) % mod
    return not f.any()


def grm_generators(k: int, r: int, m: int) -> RingModule:
    """Signed indicators of the standard subcubes of dimension >= m - r."""
    if not -1 <= r <= m:
        raise UsageError(f"order {r} out of range -1..{m}")
    rows = [Subcube.standard(m, t).signed_indicator()
            for size in range(m - r, m + 1) for t in masks_of_size(m, size)] if r >= 0 else []
    return RingModule(k, m, np.array(rows, dtype=np.int64).reshape(len(rows), 1 << m))


def stacked_error_module(code: QrmCode, k: int) -> RingModule:
    """Sum over i <= k of 2^(k-i) times the order m-(q+ir+1) module."""
    if k < 0:
        raise UsageError("k must be non-negative")
    parts = []
    for i in range(k + 1):
        order = code.m - (code.q + i * code.r + 1)
        if order < 0:
            continue
        parts.append(grm_generators(k, order, code.m).generators << (k - i))
    rows = np.concatenate(parts, axis=0) if parts else np.zeros((0, code.n), dtype=np.int64)
    return RingModule(k, code.m, rows)


FAMILIES = ("module", "subcube", "perturbed")


def conjecture_probe(code: QrmCode, k: int, trials: int, seed: int, batch: int = 1024) -> dict:
    """Look for code-preserving phase functions outside the stacked module.

    Three sample families rotate: module elements (sanity arm, must all be
    preserving members), scaled subcube indicators, and module elements with
    a one- or two-entry perturbation.
    """
    if trials < 0:
        raise UsageError("trials must be non-negative")
    oracle = CodeOracle(code, seed=seed)
    if oracle.sampled:
        raise DomainError(f"{code} is too large for an exhaustive oracle; the probe needs one")
    module = stacked_error_module(code, k)
    mod = module.modulus
    rng = np.random.default_rng(seed)
    cubes = all_subcubes(code.m)
    stats = {name: {"trials": 0, "preserving": 0, "members": 0, "preserving_nonmembers": 0}
             for name in FAMILIES}
    candidates: list[dict] = []
    sanity_failures = 0
    for start in range(0, trials, batch):
        funcs, fams = [], []
        for t in range(start, min(start + batch, trials)):
            fam = FAMILIES[t % 3]
            if fam == "subcube" or module.generators.shape[0] == 0:
                cube = cubes[rng.integers(len(cubes))]
                vec = cube.signed_indicator() if rng.integers(2) else cube.indicator()
                vec = vec << int(rng.integers(k + 1))
                fam = "subcube"
            else:
                vec = module.random_element(rng)
                if fam == "perturbed":
                    for _ in range(int(rng.integers(1, 3))):
                        vec[rng.integers(code.n)] += rng.integers(1, mod)
            funcs.append(PhaseFunction(k, vec))
            fams.append(fam)
        for f, fam, verdict in zip(funcs, fams, oracle.run(funcs)):
            member = membership(f.exponents, module)
            s = stats[fam]
            s["trials"] += 1
            s["members"] += member
            s["preserving"] += verdict.preserves
            if fam == "module" and not (member and verdict.preserves):
                sanity_failures += 1
            if verdict.preserves and not member:
                s["preserving_nonmembers"] += 1
                if len(candidates) < 10:
                    candidates.append({"family": fam, "exponents": [int(x) for x in f.exponents]})
    found = sum(s["preserving_nonmembers"] for s in stats.values())
    return {
        "code": {"m": code.m, "q": code.q, "r": code.r},
        "k": k,
        "trials": trials,
        "seed": seed,
        "module_generators": int(module.generators.shape[0]),
        "families": stats,
        "sanity_failures": sanity_failures,
        "counterexample_candidates": candidates,
        "verdict": (f"{found} preserving non-member(s) found; candidates need independent review"
                    if found else f"no counterexample in {trials} trials"),
        "note": "empirical evidence only; does not settle the characterization question",
    }
