"""Subcubes of the Boolean hypercube and integer-valued indicator calculus.

Vertices are integers: bit ``i-1`` holds coordinate ``e_i``. Generator sets
``J`` are bitmasks in the same layout. Printed vertex strings put ``e_1``
leftmost, so ``"0110"`` is the integer ``0b0110`` read backwards (= 6).
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import UsageError


def popcount(x: int) -> int:
    return x.bit_count()


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask for a collection of 1-based generator indices."""
    mask = 0
    for i in indices:
        if i < 1:
            raise UsageError(f"generator index must be >= 1, got {i}")
        mask |= 1 << (i - 1)
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    """1-based generator indices set in ``mask``, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def submasks(mask: int) -> list[int]:
    """All submasks of ``mask`` in ascending integer order."""
    out = []
    s = mask
    while True:
        out.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    out.reverse()
    return out


def masks_of_size(m: int, size: int) -> Iterator[int]:
    """Size-``size`` subsets of {1..m} as masks, in lexicographic order of index tuples."""
    for combo in itertools.combinations(range(1, m + 1), size):
        yield mask_of(combo)


def format_vertex(x: int, m: int) -> str:
    return "".join("1" if (x >> i) & 1 else "0" for i in range(m))


def parse_vertex(text: str) -> int:
    if not text or set(text) - {"0", "1"}:
        raise UsageError(f"vertex must be a binary string, got {text!r}")
    return sum(1 << i for i, ch in enumerate(text) if ch == "1")


def format_index_set(mask: int) -> str:
    return "{" + ",".join(str(i) for i in indices_of(mask)) + "}"


def parse_index_list(text: str) -> int:
    """``"1,2,3"`` (braces optional, empty allowed) to a mask."""
    body = text.strip().strip("{}<>").strip()
    if not body:
        return 0
    try:
        idx = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise UsageError(f"bad generator list {text!r}") from None
    if len(set(idx)) != len(idx):
        raise UsageError(f"repeated generator in {text!r}")
    return mask_of(idx)


_CUBE_RE = re.compile(r"^\s*(?:([01]+)\s*\+?\s*)?(?:<([0-9,\s]*)>)?\s*$")


@dataclass(frozen=True, order=True)
class Subcube:
    """The coset ``offset + <type_mask>``, always with ``offset & type_mask == 0``."""

    m: int
    offset: int
    type_mask: int

    def __post_init__(self):
        full = (1 << self.m) - 1
        if self.m < 0:
            raise UsageError("m must be non-negative")
        if self.offset & ~full or self.type_mask & ~full:
            raise UsageError(f"offset/type outside {self.m} coordinates")
        if self.offset & self.type_mask:
            raise UsageError("offset not canonical; use Subcube.coset")

    @classmethod
    def coset(cls, m: int, x: int, type_mask: int) -> Subcube:
        """Normalize an arbitrary representative ``x`` to the minimum-weight one."""
        return cls(m, x & ~type_mask, type_mask)

    @classmethod
    def standard(cls, m: int, type_mask: int) -> Subcube:
        return cls(m, 0, type_mask)

    @classmethod
    def whole(cls, m: int) -> Subcube:
        return cls(m, 0, (1 << m) - 1)

    @property
    def dim(self) -> int:
        return popcount(self.type_mask)

    @property
    def size(self) -> int:
        return 1 << self.dim

    @property
    def is_standard(self) -> bool:
        return self.offset == 0

    def vertices(self) -> list[int]:
        return [self.offset | s for s in submasks(self.type_mask)]

    def __contains__(self, x: int) -> bool:
        return (x & ~self.type_mask) == self.offset

    def indicator(self) -> np.ndarray:
        """Unsigned 0/1 indicator as an int64 vector of length 2^m."""
        v = np.zeros(1 << self.m, dtype=np.int64)
        v[self.vertices()] = 1
        return v

    def signed_indicator(self) -> np.ndarray:
        """(-1)^|x| on the subcube, 0 elsewhere."""
        v = np.zeros(1 << self.m, dtype=np.int64)
        for x in self.vertices():
            v[x] = -1 if popcount(x) & 1 else 1
        return v

    def __str__(self) -> str:
        return f"{format_vertex(self.offset, self.m)}+<{','.join(map(str, indices_of(self.type_mask)))}>"

    @classmethod
    def parse(cls, text: str, m: int | None = None) -> Subcube:
        """Parse ``0110+<1,4>``, ``<2,3>`` (needs ``m``) or a bare vertex ``0110``."""
        match = _CUBE_RE.match(text)
        if not match or (match.group(1) is None and match.group(2) is None):
            raise UsageError(f"cannot parse subcube {text!r}")
        off_txt, type_txt = match.groups()
        if off_txt is not None:
            if m is not None and len(off_txt) != m:
                raise UsageError(f"offset {off_txt!r} has length {len(off_txt)}, expected {m}")
            m = len(off_txt)
        if m is None:
            raise UsageError(f"dimension unknown for {text!r}; give m or a full offset")
        offset = parse_vertex(off_txt) if off_txt is not None else 0
        type_mask = parse_index_list(type_txt or "")
        if type_mask >> m:
            raise UsageError(f"generator index exceeds m={m} in {text!r}")
        return cls.coset(m, offset, type_mask)


def _same_m(a: Subcube, b: Subcube) -> None:
    if a.m != b.m:
        raise UsageError(f"subcubes live in different hypercubes (m={a.m} vs m={b.m})")


def intersect(a: Subcube, b: Subcube) -> Subcube | None:
    """Intersection of two subcubes, or ``None`` when disjoint."""
    _same_m(a, b)
    union = a.type_mask | b.type_mask
    if (a.offset ^ b.offset) & ~union:
        return None
    # A coordinate fixed by one cube and free in the other takes the fixed value.
    point = (a.offset & ~a.type_mask) | (b.offset & a.type_mask)
    return Subcube.coset(a.m, point, a.type_mask & b.type_mask)


def is_subcube_of(a: Subcube, b: Subcube) -> bool:
    _same_m(a, b)
    return (a.type_mask & ~b.type_mask) == 0 and a.offset in b


def enumerate_subcubes(m: int, dim: int) -> list[Subcube]:
    """Every ``dim``-dimensional subcube: types in lexicographic order, offsets ascending."""
    if not 0 <= dim <= m:
        raise UsageError(f"dimension {dim} out of range 0..{m}")
    full = (1 << m) - 1
    out = []
    for t in masks_of_size(m, dim):
        out.extend(Subcube(m, off, t) for off in submasks(full & ~t))
    return out


def all_subcubes(m: int) -> list[Subcube]:
    return [c for d in range(m + 1) for c in enumerate_subcubes(m, d)]


def subcube_count(m: int, dim: int) -> int:
    return (1 << (m - dim)) * comb(m, dim)


def decompose_indicator_f2(a: Subcube) -> list[Subcube]:
    """Standard subcubes whose indicators sum to ``1_A`` mod 2."""
    return [Subcube.standard(a.m, i | a.type_mask) for i in submasks(a.offset)]


@dataclass(frozen=True)
class IntIndicatorCombo:
    """Formal integer combination of (signed or unsigned) subcube indicators."""

    m: int
    signed: bool
    terms: tuple[tuple[int, Subcube], ...]
    modulus: int | None = None

    @classmethod
    def build(cls, m: int, signed: bool, pairs: Iterable[tuple[int, Subcube]],
              modulus: int | None = None) -> IntIndicatorCombo:
        acc: dict[Subcube, int] = {}
        for coef, cube in pairs:
            if cube.m != m:
                raise UsageError("term lives in a different hypercube")
            acc[cube] = acc.get(cube, 0) + coef
        if modulus is not None:
            acc = {c: v % modulus for c, v in acc.items()}
        terms = tuple(sorted(((v, c) for c, v in acc.items() if v),
                             key=lambda t: (t[1].dim, t[1].type_mask, t[1].offset)))
        return cls(m, signed, terms, modulus)

    def reduce(self, modulus: int) -> IntIndicatorCombo:
        return IntIndicatorCombo.build(self.m, self.signed, self.terms, modulus)

    def evaluate(self) -> np.ndarray:
        out = np.zeros(1 << self.m, dtype=np.int64)
        for coef, cube in self.terms:
            out += coef * (cube.signed_indicator() if self.signed else cube.indicator())
        if self.modulus is not None:
            out %= self.modulus
        return out


def decompose_indicator_z(a: Subcube, signed: bool) -> IntIndicatorCombo:
    """Integer identity expressing 1_A (or its signed twin) through standard subcubes.

    The leading sum over standard cubes <I u J> overcounts every coset
    e_{I_A \\ I} + <J> exactly 2^|I| times; the correction removes the surplus.
    """
    m, j = a.m, a.type_mask
    pairs: list[tuple[int, Subcube]] = []
    for i in submasks(a.offset):
        pairs.append((1, Subcube.standard(m, i | j)))
        if i:
            pairs.append((-(1 << popcount(i)), Subcube(m, a.offset & ~i, j)))
    return IntIndicatorCombo.build(m, signed, pairs)


def unsigned_to_signed_standard(m: int, k_set: int) -> IntIndicatorCombo:
    """Signed-indicator expansion of the unsigned indicator of <K>."""
    if k_set >> m:
        raise UsageError("generator set exceeds m")
    size = popcount(k_set)
    pairs = []
    for j in submasks(k_set):
        w = popcount(j)
        pairs.append(((-1) ** w * (1 << (size - w)), Subcube.standard(m, j)))
    return IntIndicatorCombo.build(m, True, pairs)


@dataclass(frozen=True)
class OctaSimplex:
    """Simplex of the cross-polytope complex, written as a string over {0,1,*}."""

    cells: str

    def __post_init__(self):
        if set(self.cells) - {"0", "1", "*"}:
            raise UsageError(f"simplex string must use 0, 1, *: {self.cells!r}")

    @property
    def m(self) -> int:
        return len(self.cells)

    @property
    def dim(self) -> int:
        return sum(ch != "*" for ch in self.cells) - 1

    def is_face_of(self, other: OctaSimplex) -> bool:
        if self.m != other.m:
            raise UsageError("simplices live in different complexes")
        return all(a == "*" or a == b for a, b in zip(self.cells, other.cells))

    def __str__(self) -> str:
        return self.cells


def octa_convert(x: Subcube | OctaSimplex) -> OctaSimplex | Subcube:
    """Swap between a subcube and its dual simplex (free coordinates become ``*``)."""
    if isinstance(x, Subcube):
        cells = "".join(
            "*" if (x.type_mask >> i) & 1 else ("1" if (x.offset >> i) & 1 else "0")
            for i in range(x.m)
        )
        return OctaSimplex(cells)
    offset = sum(1 << i for i, ch in enumerate(x.cells) if ch == "1")
    free = sum(1 << i for i, ch in enumerate(x.cells) if ch == "*")
    return Subcube(x.m, offset, free)
