"""Partitions, compositions, dominance order and tableaux.

Cells are addressed as (row, column), 1-based. Tableaux are stored as a
shape plus the row-major sequence of entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Composition(tuple):
    """A finite sequence of non-negative integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"composition parts must be non-negative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"{type(self).__name__}({tuple(self)})"


class Partition(Composition):
    """A weakly decreasing sequence of positive integers (no trailing zeros)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(p) for p in text.split(","))

    def __str__(self):
        return ",".join(map(str, self))

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def doubled(self) -> "Partition":
        return Partition(2 * p for p in self)

    def multiplicities(self) -> list[tuple[int, int]]:
        """Return [(a_1, k_1), (a_2, k_2), ...] with a_1 > a_2 > ..."""
        out: list[tuple[int, int]] = []
        for p in self:
            if out and out[-1][0] == p:
                out[-1] = (p, out[-1][1] + 1)
            else:
                out.append((p, 1))
        return out


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def partitions_of(k: int) -> list[Partition]:
    """All partitions of k in decreasing lexicographic order."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return [Partition(p) for p in _partitions(k, k)]


@lru_cache(maxsize=None)
def _partitions(k: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if k == 0:
        return ((),)
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            out.append((first,) + rest)
    return tuple(out)


def two_partitions(n: int) -> list[Partition]:
    """The partitions of 2n with all parts even, decreasing lex order."""
    return [p.doubled() for p in partitions_of(n)]


def conjugate(lam) -> Partition:
    lam = _as_partition(lam)
    if not lam:
        return Partition(())
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominates(mu, lam) -> bool:
    """True iff mu dominates lam (partial sums of mu are all >= those of lam)."""
    mu, lam = _as_partition(mu), _as_partition(lam)
    if mu.size != lam.size:
        raise ValueError(f"size mismatch: {mu.size} vs {lam.size}")
    s = t = 0
    for j in range(max(len(mu), len(lam))):
        s += mu[j] if j < len(mu) else 0
        t += lam[j] if j < len(lam) else 0
        if s < t:
            return False
    return True


def strictly_dominates(mu, lam) -> bool:
    return tuple(mu) != tuple(lam) and dominates(mu, lam)


def hook_lengths(lam) -> list[int]:
    lam = _as_partition(lam)
    conj = conjugate(lam)
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in lam.cells()]


def hook_dimension(lam) -> int:
    """dim S^lam by the hook length formula."""
    lam = _as_partition(lam)
    return factorial(lam.size) // prod(hook_lengths(lam))


@dataclass(frozen=True)
class Tableau:
    """A bijective filling of a Young diagram.

    ``entries`` is the row-major reading word. Entries need not be 1..k (the
    tableaux indexing permutations of {2f+1..n} use shifted entries).
    """

    shape: Partition
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "shape", _as_partition(self.shape))
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != self.shape.size:
            raise ValueError("entry count does not match shape")
        if len(set(self.entries)) != len(self.entries):
            raise ValueError("tableau entries must be distinct")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        return cls(Partition(len(r) for r in rows), tuple(x for r in rows for x in r))

    @property
    def rows(self) -> list[tuple[int, ...]]:
        out, pos = [], 0
        for length in self.shape:
            out.append(self.entries[pos:pos + length])
            pos += length
        return out

    @property
    def columns(self) -> list[tuple[int, ...]]:
        rows = self.rows
        if not rows:
            return []
        return [tuple(r[j] for r in rows if len(r) > j) for j in range(len(rows[0]))]

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        if not (1 <= i <= len(self.shape) and 1 <= j <= self.shape[i - 1]):
            raise IndexError(f"cell {cell} not in shape {tuple(self.shape)}")
        return self.entries[sum(self.shape[:i - 1]) + j - 1]

    def position(self, a: int) -> tuple[int, int]:
        try:
            idx = self.entries.index(a)
        except ValueError:
            raise KeyError(f"{a} is not an entry of the tableau") from None
        for i, length in enumerate(self.shape, start=1):
            if idx < length:
                return i, idx + 1
            idx -= length
        raise AssertionError("unreachable")

    def is_row_standard(self) -> bool:
        return all(r[j] < r[j + 1] for r in self.rows for j in range(len(r) - 1))

    def is_column_standard(self) -> bool:
        return all(c[j] < c[j + 1] for c in self.columns for j in range(len(c) - 1))

    def is_standard(self) -> bool:
        return self.is_row_standard() and self.is_column_standard()

    def permuted(self, w) -> "Tableau":
        """The tableau t w, obtained by applying w to every entry."""
        return Tableau(self.shape, tuple(w(a) for a in self.entries))

    def __str__(self):
        return "/".join(" ".join(map(str, r)) for r in self.rows)


def initial_tableau(lam, start: int = 1) -> Tableau:
    """t^lam: entries in order along successive rows."""
    lam = _as_partition(lam)
    return Tableau(lam, tuple(range(start, start + lam.size)))


def column_tableau(lam) -> Tableau:
    """t_lam: entries 1..k in order down successive columns."""
    lam = _as_partition(lam)
    conj = conjugate(lam)
    cell_value = {}
    a = 1
    for j, height in enumerate(conj, start=1):
        for i in range(1, height + 1):
            cell_value[i, j] = a
            a += 1
    return Tableau(lam, tuple(cell_value[c] for c in lam.cells()))


def standard_tableaux(lam, start: int = 1) -> list[Tableau]:
    """All standard lam-tableaux, sorted by reading word (t^lam first)."""
    lam = _as_partition(lam)
    words = sorted(_standard_words(lam))
    return [Tableau(lam, tuple(x + start - 1 for x in w)) for w in words]


def _standard_words(lam: Partition) -> list[tuple[int, ...]]:
    # place k, k-1, ..., 1 into removable corners
    k = lam.size
    grid: dict[tuple[int, int], int] = {}
    out = []

    def rec(shape: list[int], a: int):
        if a == 0:
            out.append(tuple(grid[c] for c in lam.cells()))
            return
        for i in range(len(shape)):
            if shape[i] and (i + 1 == len(shape) or shape[i + 1] < shape[i]):
                grid[i + 1, shape[i]] = a
                shape[i] -= 1
                rec(shape, a - 1)
                shape[i] += 1
        return

    rec(list(lam), k)
    return out


def row_standard_tableaux(lam) -> list[Tableau]:
    """RS(lam): fillings by 1..k increasing along rows, by reading word."""
    lam = _as_partition(lam)
    out = []

    def rec(prefix: tuple[int, ...], remaining: frozenset[int], idx: int):
        if idx == len(lam):
            out.append(prefix)
            return
        for row in combinations(sorted(remaining), lam[idx]):
            rec(prefix + row, remaining - set(row), idx + 1)

    rec((), frozenset(range(1, lam.size + 1)), 0)
    return [Tableau(lam, w) for w in out]


def d_of_tableau(t: Tableau):
    """The permutation d(t) with t^lam d(t) = t, for row-standard t."""
    from .symgroup import Permutation

    if not t.is_row_standard():
        raise ValueError(f"tableau {t} is not row-standard")
    base = initial_tableau(t.shape)
    if sorted(t.entries) != list(base.entries):
        raise ValueError("d(t) needs a filling by 1..k")
    images = [0] * t.shape.size
    for src, dst in zip(base.entries, t.entries):
        images[src - 1] = dst
    return Permutation(images)


def w_of_partition(lam):
    """w_lam with t^lam w_lam = t_lam."""
    from .symgroup import Permutation

    lam = _as_partition(lam)
    images = [0] * lam.size
    for src, dst in zip(initial_tableau(lam).entries, column_tableau(lam).entries):
        images[src - 1] = dst
    return Permutation(images)


def residue(t: Tableau, a: int) -> int:
    i, j = t.position(a)
    return j - i


def row_of(lam, a: int) -> int:
    """Row of the entry a in t^lam."""
    lam = _as_partition(lam)
    for r, length in enumerate(lam, start=1):
        if a <= length:
            return r
        a -= length
    raise ValueError("entry out of range")


@dataclass(frozen=True)
class TypedTableau:
    """A mu-tableau of type lam: entry r occurs lam_r times."""

    shape: Partition
    type: Partition
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "shape", _as_partition(self.shape))
        object.__setattr__(self, "type", _as_partition(self.type))
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.shape.size != self.type.size:
            raise ValueError("shape and type sizes differ")
        counts = [self.entries.count(r) for r in range(1, len(self.type) + 1)]
        if counts != list(self.type) or len(self.entries) != self.shape.size:
            raise ValueError("content does not match type")

    @property
    def rows(self) -> list[tuple[int, ...]]:
        return Tableau.rows.fget(self)  # same row-major layout

    @property
    def columns(self) -> list[tuple[int, ...]]:
        return Tableau.columns.fget(self)

    def is_semistandard(self) -> bool:
        rows_ok = all(r[j] <= r[j + 1] for r in self.rows for j in range(len(r) - 1))
        cols_ok = all(c[j] < c[j + 1] for c in self.columns for j in range(len(c) - 1))
        return rows_ok and cols_ok

    def __str__(self):
        return "/".join(" ".join(map(str, r)) for r in self.rows)


SemistandardTableau = TypedTableau


def semistandard_tableaux(mu, lam) -> list[TypedTableau]:
    """T_0(mu, lam): semistandard mu-tableaux of type lam, by reading word."""
    mu, lam = _as_partition(mu), _as_partition(lam)
    if mu.size != lam.size:
        raise ValueError(f"size mismatch: {mu.size} vs {lam.size}")
    cells = list(mu.cells())
    out = []
    filling: dict[tuple[int, int], int] = {}
    remaining = list(lam)

    def rec(idx: int):
        if idx == len(cells):
            out.append(tuple(filling[c] for c in cells))
            return
        i, j = cells[idx]
        lo = 1
        if j > 1:
            lo = max(lo, filling[i, j - 1])
        if i > 1:
            lo = max(lo, filling[i - 1, j] + 1)
        for r in range(lo, len(lam) + 1):
            if remaining[r - 1]:
                remaining[r - 1] -= 1
                filling[i, j] = r
                rec(idx + 1)
                remaining[r - 1] += 1
        filling.pop((i, j), None)

    rec(0)
    return [TypedTableau(mu, lam, e) for e in sorted(out)]


def type_tableau_of(s: Tableau, lam) -> TypedTableau:
    """mu(s): replace each entry i of s by the row of i in t^lam."""
    lam = _as_partition(lam)
    if s.shape.size != lam.size:
        raise ValueError("size mismatch")
    return TypedTableau(s.shape, lam, tuple(row_of(lam, a) for a in s.entries))


# ---------------------------------------------------------------------------
# characters


def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    parts = list(lam) + [0] * (length - len(lam))
    return tuple(parts[i] + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in beta:
            # leg length = beads strictly between b - r and b
            sign = -1 if sum(1 for c in beta if b - r < c < b) % 2 else 1
            total += sign * _mn((beta - {b}) | {b - r}, rest)
    return total


def mn_character(lam, rho) -> int:
    """chi^lam on cycle type rho, by the Murnaghan-Nakayama rule (abacus form)."""
    lam, rho = _as_partition(lam), _as_partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: {lam.size} vs {rho.size}")
    return _mn(frozenset(_beta_set(lam, len(lam) + lam.size)), tuple(rho))


def cycle_type_count(rho) -> int:
    """Size of the conjugacy class of S_k with cycle type rho."""
    rho = _as_partition(rho)
    z = 1
    for a, k in rho.multiplicities():
        z *= a ** k * factorial(k)
    return factorial(rho.size) // z
