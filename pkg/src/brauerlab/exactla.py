"""Exact linear algebra over Q and Z.

Rational work is done fraction-free: each row is scaled to a primitive
integer vector, and elimination keeps rows primitive by dividing out their
content after every update. Row storage is always sparse (``dict`` of
column to value), which is also adequate for the small dense inputs.

Integer normal forms use the row convention: ``hermite_form`` returns the
echelon basis of the lattice spanned by the rows, with positive pivots and
every entry above a pivot reduced into ``[0, pivot)``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Row = dict  # column index -> int or Fraction


def _content(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def _integerize(row: Mapping[int, Fraction | int], reduce_content: bool = True) -> tuple[dict[int, int], int]:
    """Clear denominators; return the integer row and the multiplier used."""
    den = reduce(lcm, (Fraction(v).denominator for v in row.values()), 1)
    out = {c: int(Fraction(v) * den) for c, v in row.items() if v}
    g = _content(out.values()) if reduce_content else 1
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out, den


def primitive(vec: Sequence[Fraction | int]) -> list[int]:
    """Scale a rational vector to coprime integers with a positive first entry."""
    den = reduce(lcm, (Fraction(v).denominator for v in vec), 1)
    ints = [int(Fraction(v) * den) for v in vec]
    g = _content(ints)
    if g == 0:
        return ints
    ints = [v // g for v in ints]
    first = next((v for v in ints if v), 0)
    return [-v for v in ints] if first < 0 else ints


class EchelonResult:
    """Output of fraction-free row echelon reduction.

    ``rows`` are integer rows with strictly increasing leading columns
    ``pivots`` (primitive when not tracking). With ``track=True``,
    ``transforms[k]`` is an exact integer recipe for ``rows[k]`` in the
    original rows, and ``kernel`` holds integer left
    null vectors (one per input row that reduced to zero).
    """

    __slots__ = ("rows", "pivots", "transforms", "kernel")

    def __init__(self, rows, pivots, transforms, kernel):
        self.rows = rows
        self.pivots = pivots
        self.transforms = transforms
        self.kernel = kernel

    @property
    def rank(self) -> int:
        return len(self.rows)


def echelon(rows: Sequence[Mapping[int, int | Fraction]], track: bool = False) -> EchelonResult:
    """Fraction-free sparse elimination with least-bit-size pivoting.

    At each step the smallest leading column among active rows is
    eliminated. The pivot is the row whose leading entry has the fewest
    bits, then the fewest nonzeros, then the lowest index, which makes the
    result a deterministic function of the input.
    """
    active = []  # [index, row, transform]
    kernel = []
    for idx, r in enumerate(rows):
        # with tracking the row keeps its content so the transform stays integral
        ir, scale = _integerize(r, reduce_content=not track)
        tr = {idx: scale} if track else None
        if ir:
            active.append([idx, ir, tr])
        elif track:
            kernel.append(tr)
    out_rows, pivots, transforms = [], [], []
    while active:
        lead = min(min(r[1]) for r in active)
        cands = [r for r in active if min(r[1]) == lead]
        piv = min(cands, key=lambda r: (abs(r[1][lead]).bit_length(), len(r[1]), r[0]))
        p_row, p_tr = piv[1], piv[2]
        p_val = p_row[lead]
        survivors = []
        for r in active:
            if r is piv:
                continue
            if min(r[1]) != lead:
                survivors.append(r)
                continue
            row, tr = r[1], r[2]
            b = row[lead]
            g = gcd(p_val, b)
            a_mul, b_mul = p_val // g, b // g
            new = {}
            for c in set(row) | set(p_row):
                v = a_mul * row.get(c, 0) - b_mul * p_row.get(c, 0)
                if v:
                    new[c] = v
            new_tr = None
            if track:
                new_tr = {}
                for c in set(tr) | set(p_tr):
                    v = a_mul * tr.get(c, 0) - b_mul * p_tr.get(c, 0)
                    if v:
                        new_tr[c] = v
            g = _content(list(new.values()) + (list(new_tr.values()) if track else []))
            if g > 1:
                new = {c: v // g for c, v in new.items()}
                if track:
                    new_tr = {c: v // g for c, v in new_tr.items()}
            if new:
                survivors.append([r[0], new, new_tr])
            elif track:
                kernel.append(new_tr)
        out_rows.append(p_row)
        pivots.append(lead)
        transforms.append(p_tr)
        active = survivors
    return EchelonResult(out_rows, pivots, transforms if track else None, kernel if track else None)


class RationalMatrix:
    """Immutable exact rational matrix with sparse rows."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[Mapping[int, Fraction | int]] | None = None):
        rows = list(rows) if rows is not None else [{} for _ in range(nrows)]
        if len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        clean = []
        for r in rows:
            for c in r:
                if not 0 <= c < ncols:
                    raise ValueError(f"column {c} out of range for {ncols} columns")
            clean.append({c: (int(v) if Fraction(v).denominator == 1 else Fraction(v)) for c, v in r.items() if v})
        self.nrows, self.ncols, self._rows = nrows, ncols, clean

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[Fraction | int]]) -> "RationalMatrix":
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(len(data), ncols, [{j: v for j, v in enumerate(r) if v} for r in data])

    @classmethod
    def identity(cls, k: int) -> "RationalMatrix":
        return cls(k, k, [{i: 1} for i in range(k)])

    def row(self, i: int) -> dict:
        return dict(self._rows[i])

    def rows(self) -> list[dict]:
        return [dict(r) for r in self._rows]

    def to_dense(self) -> list[list]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self._rows):
            for c, v in r.items():
                out[i][c] = v
        return out

    def transpose(self) -> "RationalMatrix":
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self._rows):
            for c, v in r.items():
                cols[c][i] = v
        return RationalMatrix(self.ncols, self.nrows, cols)

    def __eq__(self, other):
        return (isinstance(other, RationalMatrix) and (self.nrows, self.ncols) == (other.nrows, other.ncols)
                and self._rows == other._rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"dimension mismatch: {self.ncols} vs {other.nrows}")
        out = []
        for r in self._rows:
            acc: dict[int, Fraction] = {}
            for k, a in r.items():
                for c, b in other._rows[k].items():
                    acc[c] = acc.get(c, 0) + a * b
            out.append(acc)
        return RationalMatrix(self.nrows, other.ncols, out)

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def rank(self) -> int:
        return echelon(self._rows).rank

    def rref(self) -> tuple["RationalMatrix", list[int]]:
        """Reduced row echelon form (nonzero rows only) and pivot columns."""
        ech = echelon(self._rows)
        rows = [{c: Fraction(v, r[p]) for c, v in r.items()} for r, p in zip(ech.rows, ech.pivots)]
        for k in range(len(rows) - 1, -1, -1):
            p = ech.pivots[k]
            for j in range(k):
                f = rows[j].get(p)
                if f:
                    for c, v in rows[k].items():
                        nv = rows[j].get(c, 0) - f * v
                        if nv:
                            rows[j][c] = nv
                        else:
                            rows[j].pop(c, None)
        return RationalMatrix(len(rows), self.ncols, rows), list(ech.pivots)

    def nullspace(self) -> list[list[int]]:
        """Basis of {v : M v = 0} as primitive integer vectors."""
        red, pivots = self.rref()
        pivset = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivset:
                continue
            vec = [Fraction(0)] * self.ncols
            vec[free] = Fraction(1)
            for k, p in enumerate(pivots):
                vec[p] = -Fraction(red._rows[k].get(free, 0))
            basis.append(primitive(vec))
        return basis

    def left_nullspace(self) -> list[list[int]]:
        """Basis of {y : y M = 0} as primitive integer vectors."""
        return self.transpose().nullspace()

    def inverse(self) -> "RationalMatrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        k = self.nrows
        aug = RationalMatrix(k, 2 * k, [{**r, k + i: 1} for i, r in enumerate(self._rows)])
        red, pivots = aug.rref()
        if pivots[:k] != list(range(k)) or len(pivots) < k:
            raise ValueError("matrix is singular")
        return RationalMatrix(k, k, [{c - k: v for c, v in red._rows[i].items() if c >= k} for i in range(k)])

    # interchange -----------------------------------------------------------

    def to_coordinate_text(self) -> str:
        lines = [f"{self.nrows} {self.ncols} {self.nnz()}"]
        for i, r in enumerate(self._rows):
            for c in sorted(r):
                v = Fraction(r[c])
                lines.append(f"{i + 1} {c + 1} {v.numerator}/{v.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_coordinate_text(cls, text: str) -> "RationalMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("%")]
        nrows, ncols, _ = (int(t) for t in lines[0].split())
        rows = [{} for _ in range(nrows)]
        for ln in lines[1:]:
            i, j, v = ln.split()
            rows[int(i) - 1][int(j) - 1] = Fraction(v)
        return cls(nrows, ncols, rows)

    def to_json(self) -> dict:
        return {"rows": self.nrows, "cols": self.ncols,
                "entries": [[i + 1, c + 1, str(Fraction(r[c]))] for i, r in enumerate(self._rows) for c in sorted(r)]}

    @classmethod
    def from_json(cls, data: Mapping | str) -> "RationalMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        rows = [{} for _ in range(data["rows"])]
        for i, j, v in data["entries"]:
            rows[i - 1][j - 1] = Fraction(v)
        return cls(data["rows"], data["cols"], rows)


def rank(m: RationalMatrix | Sequence[Sequence]) -> int:
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix.from_dense(m)
    return m.rank()


def nullspace(m: RationalMatrix | Sequence[Sequence]) -> list[list[int]]:
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix.from_dense(m)
    return m.nullspace()


def solve_in_span(vectors: Sequence[Sequence[Fraction | int]], target: Sequence[Fraction | int]) -> list[Fraction] | None:
    """Rational c with sum c_i vectors[i] == target, or None if outside the span."""
    width = len(target)
    if any(len(v) != width for v in vectors):
        raise ValueError("dimension mismatch between vectors and target")
    rows = [{j: x for j, x in enumerate(v) if x} for v in vectors]
    ech = echelon(rows, track=True)
    resid = {j: Fraction(x) for j, x in enumerate(target) if x}
    coeffs = [Fraction(0)] * len(vectors)
    for row, p, tr in zip(ech.rows, ech.pivots, ech.transforms):
        t = resid.get(p)
        if not t:
            continue
        f = t / row[p]
        for c, v in row.items():
            nv = resid.get(c, 0) - f * v
            if nv:
                resid[c] = nv
            else:
                resid.pop(c, None)
        for i, v in tr.items():
            coeffs[i] += f * v
    if resid:
        return None
    return coeffs


def sparse_rank_mod_p(rows: Sequence[Mapping[int, int]], p: int) -> int:
    """Rank over F_p of integer sparse rows."""
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        row = {c: v % p for c, v in r.items() if v % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: (v * inv) % p for c, v in row.items()}
                break
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


# ---------------------------------------------------------------------------
# integer matrices


class IntegerMatrix:
    """Immutable dense matrix of Python integers."""

    __slots__ = ("nrows", "ncols", "_data")

    def __init__(self, data: Sequence[Sequence[int]], ncols: int | None = None):
        data = [[int(v) for v in r] for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        self.nrows, self.ncols, self._data = len(data), ncols, data

    @classmethod
    def identity(cls, k: int) -> "IntegerMatrix":
        return cls([[int(i == j) for j in range(k)] for i in range(k)], k)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.ncols == other.ncols and self._data == other._data

    def __mul__(self, k: int) -> "IntegerMatrix":
        return IntegerMatrix([[k * v for v in r] for r in self._data], self.ncols)

    __rmul__ = __mul__

    def determinant(self) -> int:
        """Bareiss fraction-free determinant."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        a = self.to_lists()
        k = self.nrows
        sign, prev = 1, 1
        for i in range(k - 1):
            if a[i][i] == 0:
                swap = next((r for r in range(i + 1, k) if a[r][i]), None)
                if swap is None:
                    return 0
                a[i], a[swap] = a[swap], a[i]
                sign = -sign
            for r in range(i + 1, k):
                for c in range(i + 1, k):
                    a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
                a[r][i] = 0
            prev = a[i][i]
        return sign * a[k - 1][k - 1] if k else 1

    def rank(self) -> int:
        return echelon([{j: v for j, v in enumerate(r) if v} for r in self._data]).rank

    def rank_mod_p(self, p: int) -> int:
        a = [[v % p for v in r] for r in self._data]
        rk, col = 0, 0
        for col in range(self.ncols):
            piv = next((r for r in range(rk, self.nrows) if a[r][col]), None)
            if piv is None:
                continue
            a[rk], a[piv] = a[piv], a[rk]
            inv = pow(a[rk][col], -1, p)
            a[rk] = [(v * inv) % p for v in a[rk]]
            for r in range(self.nrows):
                if r != rk and a[r][col]:
                    f = a[r][col]
                    a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rk])]
            rk += 1
        return rk

    def hermite_form(self) -> "IntegerMatrix":
        return IntegerMatrix(_hermite(self._data, self.ncols, track=False)[0] or [], self.ncols)

    def is_unimodular(self) -> bool:
        return self.nrows == self.ncols and abs(self.determinant()) == 1

    def smith_form(self) -> list[int]:
        return smith_form(self)


def _hermite(data: Sequence[Sequence[int]], ncols: int, track: bool):
    """Row Hermite normal form; optionally the transform U with H = U A."""
    a = [list(r) for r in data]
    m = len(a)
    u = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    r = 0
    pivcols = []
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][c]]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(a[i][c]), i))
            if best != r:
                a[r], a[best] = a[best], a[r]
                if track:
                    u[r], u[best] = u[best], u[r]
            done = True
            for i in range(r + 1, m):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if track:
                        u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if not a[r][c]:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            if track:
                u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                if track:
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        pivcols.append(c)
        r += 1
    return a[:r], pivcols, (u if track else None)


def hermite_form(m: IntegerMatrix | Sequence[Sequence[int]]) -> IntegerMatrix:
    if not isinstance(m, IntegerMatrix):
        m = IntegerMatrix(m)
    return m.hermite_form()


def hermite_solve(basis: Sequence[Sequence[int]], target: Sequence[int]) -> list[int] | None:
    """Integer c with sum c_i basis[i] == target, or None if not in the row lattice."""
    width = len(target)
    if any(len(b) != width for b in basis):
        raise ValueError("dimension mismatch between basis and target")
    h, pivcols, u = _hermite(basis, width, track=True)
    resid = list(target)
    coeffs = [0] * len(basis)
    for row, c, urow in zip(h, pivcols, u):
        if resid[c] % row[c]:
            return None
        q = resid[c] // row[c]
        if q:
            resid = [x - q * y for x, y in zip(resid, row)]
            coeffs = [x + q * y for x, y in zip(coeffs, urow)]
    if any(resid):
        return None
    return coeffs


def smith_form(m: IntegerMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... (all positive)."""
    if not isinstance(m, IntegerMatrix):
        m = IntegerMatrix(m)
    # the Hermite form has the same row lattice, so it has the same invariants
    a = m.hermite_form().to_lists()
    rows, cols = len(a), m.ncols
    diag = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for r in a:
            r[t], r[pj] = r[pj], r[t]
        while True:
            changed = False
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        changed = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    for r in a:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        changed = True
            if changed:
                _, pi, pj = min((abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols)
                                if a[i][j] and (i == t or j == t))
                a[t], a[pi] = a[pi], a[t]
                for r in a:
                    r[t], r[pj] = r[pj], r[t]
                continue
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag
