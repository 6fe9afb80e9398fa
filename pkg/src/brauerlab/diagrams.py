"""Brauer diagrams, the Brauer algebra over Z[x], and the S_2n star action.

Diagrams are stored in the interleaved labeling: the top vertex in column i
is 2i-1 and the bottom vertex is 2i. The row labeling (top 1..n, bottom
1'..n') is only a view, converted at the boundary.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .symgroup import GroupAlgebraElement, Permutation, all_permutations


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def gamma(i: int) -> int:
    """The column partner: i+1 for odd i, i-1 for even i."""
    return i + 1 if i % 2 else i - 1


# ---------------------------------------------------------------------------
# integer polynomials


class IntPolynomial:
    """Polynomial in x with integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x_power(cls, k: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * k + [coeff])

    @staticmethod
    def coerce(value) -> "IntPolynomial":
        if isinstance(value, IntPolynomial):
            return value
        return IntPolynomial([value])

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = IntPolynomial.coerce(other)
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-IntPolynomial.coerce(other))

    def __mul__(self, other):
        other = IntPolynomial.coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        if not self.coeffs or k == 0:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, value):
        out = 0
        for a in reversed(self.coeffs):
            out = out * value + a
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and a == 1:
                parts.append(mono)
            elif mono and a == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{a}{'*' + mono if mono else ''}")
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# diagrams


class BrauerDiagram:
    """A fixed-point-free involution of {1..2n} in interleaved labels."""

    __slots__ = ("n", "match", "_hash")

    def __init__(self, n: int, match: Sequence[int]):
        match = tuple(int(v) for v in match)
        if len(match) != 2 * n:
            raise ValueError(f"a Brauer {n}-diagram needs {2 * n} partner entries")
        for i, p in enumerate(match, start=1):
            if not 1 <= p <= 2 * n or p == i or match[p - 1] != i:
                raise ValueError(f"not a fixed-point-free involution: {match}")
        self.n = n
        self.match = match
        self._hash = hash((n, match))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> "BrauerDiagram":
        match = [0] * (2 * n)
        for a, b in pairs:
            if not (1 <= a <= 2 * n and 1 <= b <= 2 * n) or match[a - 1] or match[b - 1] or a == b:
                raise ValueError(f"invalid or overlapping pair ({a}, {b})")
            match[a - 1], match[b - 1] = b, a
        if 0 in match:
            raise ValueError("pairs do not cover every vertex")
        return cls(n, match)

    @classmethod
    def from_rows(cls, n: int, pairs: Iterable[Sequence[tuple[str, int]]]) -> "BrauerDiagram":
        """Build from row labels, e.g. [(("t", 1), ("b", 2)), ...]."""
        return cls.from_pairs(n, [(row_to_label(p), row_to_label(q)) for p, q in pairs])

    @classmethod
    def from_permutation(cls, w: Permutation) -> "BrauerDiagram":
        """Permutation diagram: top i joined to bottom (i)w."""
        n = w.degree
        return cls.from_pairs(n, [(2 * i - 1, 2 * w(i)) for i in range(1, n + 1)])

    @classmethod
    def from_involution(cls, w: Permutation) -> "BrauerDiagram":
        if w.degree % 2:
            raise ValueError("odd degree")
        return cls(w.degree // 2, w.images)

    @classmethod
    def parse(cls, text: str, n: int | None = None, labels: str = "interleaved") -> "BrauerDiagram":
        """Parse "(1 3)(2 4)" (interleaved) or "(1 2')(2 1')" (rows)."""
        groups = re.findall(r"\(([^)]*)\)", text)
        if not groups or re.sub(r"\([^)]*\)", "", text).strip():
            raise ValueError(f"malformed diagram string: {text!r}")
        pairs = []
        for g in groups:
            toks = g.replace(",", " ").split()
            if len(toks) != 2:
                raise ValueError(f"malformed pair ({g})")
            pairs.append(toks)
        if labels == "interleaved":
            ints = [(int(a), int(b)) for a, b in pairs]
            size = len(ints)
            if n is not None and n != size:
                raise ValueError(f"diagram has {size} edges, expected {n}")
            return cls.from_pairs(size, ints)
        if labels == "rows":
            size = len(pairs)
            if n is not None and n != size:
                raise ValueError(f"diagram has {size} edges, expected {n}")

            def conv(tok: str) -> int:
                if tok.endswith("'"):
                    return row_to_label(("b", int(tok[:-1])))
                return row_to_label(("t", int(tok)))

            return cls.from_pairs(size, [(conv(a), conv(b)) for a, b in pairs])
        raise ValueError(f"unknown labeling {labels!r}")

    def partner(self, v: int) -> int:
        return self.match[v - 1]

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, p) for i, p in enumerate(self.match, start=1) if i < p)

    def row_pairs(self) -> list[tuple[tuple[str, int], tuple[str, int]]]:
        return [(label_to_row(a), label_to_row(b)) for a, b in self.pairs()]

    def top_edges(self) -> list[tuple[int, int]]:
        """Horizontal top edges (a, b), a < b, in column numbers, sorted."""
        return sorted((a // 2 + 1, b // 2 + 1) for a, b in self.pairs() if a % 2 and b % 2)

    def bottom_edges(self) -> list[tuple[int, int]]:
        return sorted((a // 2, b // 2) for a, b in self.pairs() if a % 2 == 0 and b % 2 == 0)

    def vertical_edges(self) -> list[tuple[int, int]]:
        """(top column, bottom column) for every through strand, by top column."""
        out = []
        for i in range(1, self.n + 1):
            p = self.match[2 * i - 2]
            if p % 2 == 0:
                out.append((i, p // 2))
        return out

    def involution(self) -> Permutation:
        """beta(D) as an element of S_2n."""
        return Permutation(self.match)

    def permutation(self) -> Permutation | None:
        """The w in S_n with D the permutation diagram of w, else None."""
        vert = self.vertical_edges()
        if len(vert) != self.n:
            return None
        return Permutation(b for _, b in vert)

    def __eq__(self, other):
        return isinstance(other, BrauerDiagram) and self.n == other.n and self.match == other.match

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return self.pairs()

    def __lt__(self, other: "BrauerDiagram"):
        return (self.n, self.pairs()) < (other.n, other.pairs())

    def __str__(self):
        return "".join(f"({a} {b})" for a, b in self.pairs())

    def rows_str(self) -> str:
        def fmt(lab):
            row, i = lab
            return f"{i}'" if row == "b" else str(i)

        # top vertex first within an edge, then edges by their first vertex
        oriented = [tuple(sorted(e, key=lambda v: (v[0] != "t", v[1]))) for e in self.row_pairs()]
        edges = sorted(oriented, key=lambda e: (e[0][0] != "t", e[0][1]))
        return "".join(f"({fmt(a)} {fmt(b)})" for a, b in edges)

    def __repr__(self):
        return f"BrauerDiagram({self.n}, '{self}')"

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.pairs()]


def row_to_label(vertex: tuple[str, int]) -> int:
    row, i = vertex
    if row == "t":
        return 2 * i - 1
    if row == "b":
        return 2 * i
    raise ValueError(f"unknown row {row!r}")


def label_to_row(label: int) -> tuple[str, int]:
    return ("t", (label + 1) // 2) if label % 2 else ("b", label // 2)


def identity_diagram(n: int) -> BrauerDiagram:
    return BrauerDiagram.from_pairs(n, [(2 * i - 1, 2 * i) for i in range(1, n + 1)])


def generator_s(i: int, n: int) -> BrauerDiagram:
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} needs 1 <= i <= {n - 1}")
    return BrauerDiagram.from_permutation(Permutation.simple(i, n))


def generator_e(i: int, n: int) -> BrauerDiagram:
    if not 1 <= i <= n - 1:
        raise ValueError(f"e_{i} needs 1 <= i <= {n - 1}")
    pairs = [(2 * k - 1, 2 * k) for k in range(1, n + 1) if k not in (i, i + 1)]
    pairs += [(2 * i - 1, 2 * i + 1), (2 * i, 2 * i + 2)]
    return BrauerDiagram.from_pairs(n, pairs)


def compose_diagrams(d1: BrauerDiagram, d2: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Stack d1 over d2; return the composite and the number of closed loops."""
    if d1.n != d2.n:
        raise ValueError(f"n mismatch: {d1.n} vs {d2.n}")
    n = d1.n
    m1, m2 = d1.match, d2.match
    seen_mid = [False] * (n + 1)

    def walk(v: int, upper: bool) -> int:
        # v is a vertex of d1 (upper) or d2; follow edges until an outer vertex
        while True:
            p = (m1 if upper else m2)[v - 1]
            if upper and p % 2:
                return p
            if not upper and p % 2 == 0:
                return p
            col = p // 2 if upper else (p + 1) // 2
            seen_mid[col] = True
            upper = not upper
            v = 2 * col - 1 if not upper else 2 * col

    match = [0] * (2 * n)
    for i in range(1, n + 1):
        top, bot = 2 * i - 1, 2 * i
        if not match[top - 1]:
            end = walk(top, True)
            match[top - 1], match[end - 1] = end, top
        if not match[bot - 1]:
            end = walk(bot, False)
            match[bot - 1], match[end - 1] = end, bot
    loops = 0
    for c in range(1, n + 1):
        if seen_mid[c]:
            continue
        loops += 1
        col = c
        while not seen_mid[col]:
            seen_mid[col] = True
            p = m1[2 * col - 1]        # d1 bottom of col -> another d1 bottom
            seen_mid[p // 2] = True
            q = m2[p - 2]              # d2 top of that col -> another d2 top
            col = (q + 1) // 2
    return BrauerDiagram(n, match), loops


def enumerate_all(n: int) -> list[BrauerDiagram]:
    """BD_n, in canonical (sorted pair list) order."""
    return [BrauerDiagram.from_pairs(n, m) for m in perfect_matchings(range(1, 2 * n + 1))]


def perfect_matchings(vertices: Iterable[int]) -> Iterator[list[tuple[int, int]]]:
    """All perfect matchings of a sorted vertex set, lexicographic."""
    vs = sorted(vertices)
    if len(vs) % 2:
        raise ValueError(f"odd number of free vertices: {len(vs)}")

    def rec(rest: list[int]):
        if not rest:
            yield []
            return
        a = rest[0]
        for idx in range(1, len(rest)):
            b = rest[idx]
            for tail in rec(rest[1:idx] + rest[idx + 1:]):
                yield [(a, b)] + tail

    yield from rec(vs)


# ---------------------------------------------------------------------------
# elements


def _poly_str(c) -> str:
    return str(c)


class BrauerElement:
    """Element of B_n(x): a sparse Z[x]-combination of diagrams."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[BrauerDiagram, IntPolynomial | int] | None = None):
        self.n = n
        self.terms: dict[BrauerDiagram, IntPolynomial] = {}
        for d, c in (terms or {}).items():
            if d.n != n:
                raise ValueError("all diagrams must share n")
            c = IntPolynomial.coerce(c)
            if c:
                self.terms[d] = c

    @classmethod
    def of(cls, d: BrauerDiagram, coeff=1) -> "BrauerElement":
        return cls(d.n, {d: IntPolynomial.coerce(coeff)})

    @classmethod
    def one(cls, n: int) -> "BrauerElement":
        return cls.of(identity_diagram(n))

    @classmethod
    def s(cls, i: int, n: int) -> "BrauerElement":
        return cls.of(generator_s(i, n))

    @classmethod
    def e(cls, i: int, n: int) -> "BrauerElement":
        return cls.of(generator_e(i, n))

    @classmethod
    def x(cls, n: int) -> "BrauerElement":
        return cls(n, {identity_diagram(n): IntPolynomial([0, 1])})

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"n mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for d, c in other.terms.items():
            acc[d] = acc.get(d, IntPolynomial()) + c
        return BrauerElement(self.n, acc)

    def __neg__(self):
        return BrauerElement(self.n, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, IntPolynomial)):
            c = IntPolynomial.coerce(other)
            return BrauerElement(self.n, {d: a * c for d, a in self.terms.items()})
        if isinstance(other, BrauerDiagram):
            other = BrauerElement.of(other)
        self._check(other)
        acc: dict[BrauerDiagram, IntPolynomial] = {}
        for d1, a in self.terms.items():
            for d2, b in other.terms.items():
                d, loops = compose_diagrams(d1, d2)
                acc[d] = acc.get(d, IntPolynomial()) + (a * b).shift(loops)
        return BrauerElement(self.n, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, IntPolynomial)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, BrauerElement) and self.n == other.n and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def specialize(self, delta) -> "LinearCombination":
        """Evaluate every coefficient at x = delta."""
        delta = Fraction(delta)
        return LinearCombination(self.n, {d: c(delta) for d, c in self.terms.items()}, delta=delta)

    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [{"diagram": d.to_json(), "coeff": list(c.coeffs)} for d, c in self]}

    @classmethod
    def from_json(cls, data: Mapping) -> "BrauerElement":
        n = data["n"]
        return cls(n, {BrauerDiagram.from_pairs(n, t["diagram"]): IntPolynomial(t["coeff"])
                       for t in data["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for d, c in self:
            cs = str(c)
            parts.append(str(d) if cs == "1" else f"({cs})*{d}")
        return " + ".join(parts)

    def __repr__(self):
        return f"BrauerElement(n={self.n}, {self})"


class LinearCombination:
    """A combination of diagrams with exact rational coefficients.

    Elements of B_{n,Q} (``delta is None``) form a right S_2n-module; with a
    ``delta`` set they also multiply as elements of B_n(delta).
    """

    __slots__ = ("n", "terms", "delta")

    def __init__(self, n: int, terms: Mapping[BrauerDiagram, Fraction | int] | None = None, delta=None):
        self.n = n
        self.delta = None if delta is None else Fraction(delta)
        self.terms: dict[BrauerDiagram, Fraction | int] = {}
        for d, c in (terms or {}).items():
            if d.n != n:
                raise ValueError("all diagrams must share n")
            if c:
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = int(c)
                self.terms[d] = c

    @classmethod
    def of(cls, d: BrauerDiagram, coeff=1, delta=None) -> "LinearCombination":
        return cls(d.n, {d: coeff}, delta)

    @classmethod
    def sum_of(cls, n: int, diagrams: Iterable[BrauerDiagram], delta=None) -> "LinearCombination":
        acc: dict[BrauerDiagram, int] = defaultdict(int)
        for d in diagrams:
            acc[d] += 1
        return cls(n, acc, delta)

    def with_delta(self, delta) -> "LinearCombination":
        return LinearCombination(self.n, self.terms, delta)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"n mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for d, c in other.terms.items():
            acc[d] = acc.get(d, 0) + c
        return LinearCombination(self.n, acc, self.delta if self.delta is not None else other.delta)

    def __neg__(self):
        return LinearCombination(self.n, {d: -c for d, c in self.terms.items()}, self.delta)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LinearCombination":
        return LinearCombination(self.n, {d: a * c for d, a in self.terms.items()}, self.delta)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, BrauerDiagram):
            other = LinearCombination.of(other, delta=self.delta)
        self._check(other)
        delta = self.delta if self.delta is not None else other.delta
        if delta is None:
            raise ValueError("multiplying diagram combinations needs a specialised loop value")
        if other.delta is not None and self.delta is not None and other.delta != self.delta:
            raise ValueError("specialisation mismatch")
        acc: dict[BrauerDiagram, Fraction] = defaultdict(int)
        for d1, a in self.terms.items():
            for d2, b in other.terms.items():
                d, loops = compose_diagrams(d1, d2)
                acc[d] += a * b * delta ** loops
        return LinearCombination(self.n, acc, delta)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def star(self, u) -> "LinearCombination":
        return star_element(self, u)

    def __eq__(self, other):
        return (isinstance(other, LinearCombination) and self.n == other.n
                and self.terms == other.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def key(self) -> tuple:
        """Canonical hashable serialisation."""
        return tuple((d.pairs(), c) for d, c in self)

    def coordinates(self, order: Sequence[BrauerDiagram] | Mapping[BrauerDiagram, int]) -> list:
        index = order if isinstance(order, Mapping) else {d: i for i, d in enumerate(order)}
        vec = [0] * len(index)
        for d, c in self.terms.items():
            vec[index[d]] = c
        return vec

    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [{"diagram": d.to_json(), "coeff_rational": str(Fraction(c))} for d, c in self]}

    @classmethod
    def from_json(cls, data: Mapping, delta=None) -> "LinearCombination":
        n = data["n"]
        terms = {}
        for t in data["terms"]:
            d = BrauerDiagram.from_pairs(n, t["diagram"])
            if "coeff_rational" in t:
                terms[d] = Fraction(t["coeff_rational"])
            else:
                terms[d] = IntPolynomial(t["coeff"])(Fraction(delta if delta is not None else 0))
        return cls(n, terms, delta)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for d, c in self:
            parts.append(str(d) if c == 1 else f"{c}*{d}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LinearCombination(n={self.n}, {self})"


def multiply(a, b):
    """Product in B_n(x) (BrauerElement) or B_n(delta) (LinearCombination)."""
    return a * b


def specialize(a: BrauerElement, delta) -> LinearCombination:
    return a.specialize(delta)


# ---------------------------------------------------------------------------
# star action


def star(d: BrauerDiagram, w: Permutation) -> BrauerDiagram:
    """D * w = beta^-1(w^-1 beta(D) w): relabel every vertex v by (v)w."""
    if w.degree != 2 * d.n:
        raise ValueError(f"need a permutation of degree {2 * d.n}, got {w.degree}")
    match = [0] * (2 * d.n)
    for v, p in enumerate(d.match, start=1):
        match[w(v) - 1] = w(p)
    return BrauerDiagram(d.n, match)


def star_element(a: LinearCombination, u: GroupAlgebraElement | Permutation) -> LinearCombination:
    if isinstance(u, Permutation):
        u = GroupAlgebraElement.of(u)
    if u.k != 2 * a.n:
        raise ValueError(f"need degree {2 * a.n}, got {u.k}")
    acc: dict[BrauerDiagram, Fraction] = defaultdict(int)
    for d, c in a.terms.items():
        for w, b in u.terms.items():
            acc[star(d, w)] += c * b
    return LinearCombination(a.n, acc, a.delta)


def orbit(d: BrauerDiagram) -> set[BrauerDiagram]:
    k = 2 * d.n
    gens = [Permutation.simple(i, k) for i in range(1, k)]
    seen = {d}
    queue = deque([d])
    while queue:
        cur = queue.popleft()
        for s in gens:
            nxt = star(cur, s)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def stabilizer_order(d: BrauerDiagram) -> int:
    return factorial(2 * d.n) // len(orbit(d))


def stabilizer(d: BrauerDiagram) -> list[Permutation]:
    """Explicit stabiliser by enumeration of S_2n (small n only)."""
    return [w for w in all_permutations(2 * d.n) if star(d, w) == d]


def commutes_with_gamma(w: Permutation) -> bool:
    return all(w(gamma(a)) == gamma(w(a)) for a in range(1, w.degree + 1))


# ---------------------------------------------------------------------------
# normal form d1^-1 e_1 e_3 ... e_{2f-1} sigma d2 (row labels)


def in_D_nu(d: Permutation, f: int) -> bool:
    """Row-standard nu_f bitableau with increasing first column."""
    n = d.degree
    if not 0 <= 2 * f <= n:
        return False
    if any(d(2 * i - 1) > d(2 * i) for i in range(1, f + 1)):
        return False
    if any(d(2 * i - 1) > d(2 * i + 1) for i in range(1, f)):
        return False
    return all(d(j) < d(j + 1) for j in range(2 * f + 1, n))


def D_nu(n: int, f: int) -> list[Permutation]:
    """All of D_{nu_f}: one element per choice of f disjoint pairs."""
    out = []
    for pairs in _pair_choices(list(range(1, n + 1)), f):
        used = {x for p in pairs for x in p}
        images = [x for p in pairs for x in p] + [x for x in range(1, n + 1) if x not in used]
        out.append(Permutation(images))
    return sorted(out)


def _pair_choices(points: list[int], f: int) -> Iterator[list[tuple[int, int]]]:
    # f disjoint pairs, listed by increasing smaller element
    if f == 0:
        yield []
        return
    for idx, a in enumerate(points):
        if len(points) - idx < 2 * f:
            break
        rest = points[idx + 1:]
        for b in rest:
            tail_points = [x for x in rest if x != b]
            for tail in _pair_choices(tail_points, f - 1):
                yield [(a, b)] + tail


@dataclass(frozen=True)
class NormalForm:
    n: int
    f: int
    d1: Permutation
    sigma: Permutation
    d2: Permutation

    def validate(self):
        for name in ("d1", "sigma", "d2"):
            if getattr(self, name).degree != self.n:
                raise ValueError(f"{name} must lie in S_{self.n}")
        if not 0 <= 2 * self.f <= self.n:
            raise ValueError(f"f={self.f} out of range for n={self.n}")
        if not in_D_nu(self.d1, self.f):
            raise ValueError("d1 is not in D_nu")
        if not in_D_nu(self.d2, self.f):
            raise ValueError("d2 is not in D_nu")
        if any(self.sigma(i) != i for i in range(1, 2 * self.f + 1)):
            raise ValueError("sigma must fix 1..2f")

    def through_permutation(self) -> Permutation:
        """d1^-1 sigma d2 in S_n."""
        return self.d1.inverse() * self.sigma * self.d2

    def word(self) -> list[tuple[str, int]]:
        """Generator word: reduced words of d1^-1, sigma, d2 around e_1 e_3 ... e_{2f-1}."""
        w = [("s", j) for j in self.d1.inverse().reduced_word()]
        w += [("e", 2 * i - 1) for i in range(1, self.f + 1)]
        w += [("s", j) for j in self.sigma.reduced_word()]
        w += [("s", j) for j in self.d2.reduced_word()]
        return w


def to_normal_form(d: BrauerDiagram) -> NormalForm:
    n = d.n
    top, bottom = d.top_edges(), d.bottom_edges()
    f = len(top)
    top_used = {x for e in top for x in e}
    bot_used = {x for e in bottom for x in e}
    free_top = [i for i in range(1, n + 1) if i not in top_used]
    free_bot = [i for i in range(1, n + 1) if i not in bot_used]
    d1 = Permutation([x for e in top for x in e] + free_top)
    d2 = Permutation([x for e in bottom for x in e] + free_bot)
    d2_inv = d2.inverse()
    sigma = list(range(1, n + 1))
    for t, b in d.vertical_edges():
        j = d1.inverse()(t)
        sigma[j - 1] = d2_inv(b)
    return NormalForm(n, f, d1, Permutation(sigma), d2)


def from_normal_form(nf: NormalForm) -> BrauerDiagram:
    nf.validate()
    n, f, d1, sigma, d2 = nf.n, nf.f, nf.d1, nf.sigma, nf.d2
    pairs = []
    for i in range(1, f + 1):
        pairs.append((("t", d1(2 * i - 1)), ("t", d1(2 * i))))
        pairs.append((("b", d2(2 * i - 1)), ("b", d2(2 * i))))
    for j in range(2 * f + 1, n + 1):
        pairs.append((("t", d1(j)), ("b", d2(sigma(j)))))
    return BrauerDiagram.from_rows(n, pairs)


def word_element(n: int, word: Sequence[tuple[str, int]]) -> BrauerElement:
    out = BrauerElement.one(n)
    for g, j in word:
        out = out * (BrauerElement.s(j, n) if g == "s" else BrauerElement.e(j, n))
    return out


# ---------------------------------------------------------------------------
# families of diagrams


def constrained_diagrams(n: int, fixed: Iterable[Sequence[int]], free: Iterable[int]) -> list[BrauerDiagram]:
    """Diagrams containing every fixed pair and matching ``free`` among itself."""
    fixed = [tuple(p) for p in fixed]
    free = sorted(free)
    used = [x for p in fixed for x in p] + free
    if len(used) != len(set(used)):
        raise ValueError("overlapping index lists")
    if sorted(used) != list(range(1, 2 * n + 1)):
        raise ValueError("constraints must cover every vertex exactly once")
    if len(free) % 2:
        raise ValueError(f"odd-size free block: {len(free)} vertices")
    return sorted(BrauerDiagram.from_pairs(n, fixed + m) for m in perfect_matchings(free))


def bd_pairs(n: int, i_list: Sequence[int], j_list: Sequence[int]) -> list[BrauerDiagram]:
    """BD_n(i, j): diagrams joining i_s to j_s; the rest is free."""
    if len(i_list) != len(j_list):
        raise ValueError("index lists differ in length")
    fixed = list(zip(i_list, j_list))
    used = set(i_list) | set(j_list)
    if len(used) != 2 * len(fixed):
        raise ValueError("overlapping index lists")
    return constrained_diagrams(n, fixed, [v for v in range(1, 2 * n + 1) if v not in used])


def bd_block(n: int, a: int, b: int) -> list[BrauerDiagram]:
    """BD^(a)_(b): v joined to gamma(v) when v <= a or v > a+b."""
    if a < 0 or b < 0 or a % 2 or b % 2 or a + b > 2 * n:
        raise ValueError(f"need even a, b >= 0 with a+b <= 2n, got a={a}, b={b}")
    fixed = [(v, v + 1) for v in range(1, 2 * n + 1, 2) if v <= a or v > a + b]
    return constrained_diagrams(n, fixed, range(a + 1, a + b + 1))


def bd_ab(n: int, a: int, b: int) -> list[BrauerDiagram]:
    """BD_n(a, b) for the annihilation lemma."""
    if not (0 <= a <= n and 0 <= b <= n):
        raise ValueError(f"need 0 <= a, b <= n, got a={a}, b={b}")
    if (a + b) % 2:
        raise ValueError("a + b must be even")
    if a >= b:
        free = list(range(1, 2 * b + 1)) + list(range(2 * b + 1, 2 * a, 2))
        fixed = [(2 * s - 1, 2 * s) for s in range(a + 1, n + 1)]
        fixed += [(2 * b + 4 * s - 2, 2 * b + 4 * s) for s in range(1, (a - b) // 2 + 1)]
    else:
        free = list(range(1, 2 * a + 1)) + list(range(2 * a + 2, 2 * b + 1, 2))
        fixed = [(2 * s - 1, 2 * s) for s in range(b + 1, n + 1)]
        fixed += [(2 * a + 4 * s - 3, 2 * a + 4 * s - 1) for s in range(1, (b - a) // 2 + 1)]
    return constrained_diagrams(n, fixed, free)


def bd_free(n: int, A1: Iterable[int], A2: Iterable[int], i_list: Sequence[int], j_list: Sequence[int]) -> list[BrauerDiagram]:
    """BD_n^{i,j}(A1, A2): A1 (odd) and A2 (even) matched freely, the rest as given."""
    A1, A2 = sorted(A1), sorted(A2)
    if any(v % 2 == 0 for v in A1) or any(v % 2 for v in A2):
        raise ValueError("A1 must hold odd labels and A2 even labels")
    if (len(A1) + len(A2)) % 2:
        raise ValueError("odd-size free block")
    if len(i_list) != len(j_list):
        raise ValueError("index lists differ in length")
    return constrained_diagrams(n, list(zip(i_list, j_list)), A1 + A2)


def bd_nf_bottom(n: int, f: int, d2: Permutation) -> list[BrauerDiagram]:
    """BD^(f)(n; d2): bottom horizontal edges ((2i-1)d2, (2i)d2), i <= f."""
    if not in_D_nu(d2, f):
        raise ValueError("d2 is not in D_nu")
    out = []
    for d1 in D_nu(n, f):
        for sigma in _perms_fixing_prefix(n, 2 * f):
            out.append(from_normal_form(NormalForm(n, f, d1, sigma, d2)))
    return sorted(out)


def bd_nf_top(n: int, f: int, d1: Permutation) -> list[BrauerDiagram]:
    """BD^(f)(d1; n): top horizontal edges ((2i-1)d1, (2i)d1), i <= f."""
    if not in_D_nu(d1, f):
        raise ValueError("d1 is not in D_nu")
    out = []
    for d2 in D_nu(n, f):
        for sigma in _perms_fixing_prefix(n, 2 * f):
            out.append(from_normal_form(NormalForm(n, f, d1, sigma, d2)))
    return sorted(out)


def _perms_fixing_prefix(n: int, k: int) -> list[Permutation]:
    return [p.embed(n, k) for p in all_permutations(n - k)]


def bd_set(kind: str, n: int, **params) -> list[BrauerDiagram]:
    """Dispatch to one of the diagram families by name.

    kinds: "pairs" (i, j), "block" (a, b), "ab" (a, b),
    "free" (A1, A2, i, j), "nf_bottom" (f, d2), "nf_top" (f, d1).
    """
    if kind == "pairs":
        return bd_pairs(n, params["i"], params["j"])
    if kind == "block":
        return bd_block(n, params["a"], params["b"])
    if kind == "ab":
        return bd_ab(n, params["a"], params["b"])
    if kind == "free":
        return bd_free(n, params["A1"], params["A2"], params.get("i", ()), params.get("j", ()))
    if kind == "nf_bottom":
        return bd_nf_bottom(n, params["f"], params["d2"])
    if kind == "nf_top":
        return bd_nf_top(n, params["f"], params["d1"])
    raise ValueError(f"unknown family {kind!r}")


# ---------------------------------------------------------------------------
# the defining relations


def presentation_relations(n: int) -> list[tuple[str, BrauerElement, BrauerElement]]:
    """Every instance of the defining relations of B_n(x), as (name, lhs, rhs)."""
    s = [None] + [BrauerElement.s(i, n) for i in range(1, n)]
    e = [None] + [BrauerElement.e(i, n) for i in range(1, n)]
    one, x = BrauerElement.one(n), BrauerElement.x(n)
    out = []
    for i in range(1, n):
        out.append((f"s{i}^2=1", s[i] * s[i], one))
        out.append((f"e{i}^2=x e{i}", e[i] * e[i], x * e[i]))
        out.append((f"e{i}s{i}=e{i}", e[i] * s[i], e[i]))
        out.append((f"s{i}e{i}=e{i}", s[i] * e[i], e[i]))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append((f"s{i}s{j}=s{j}s{i}", s[i] * s[j], s[j] * s[i]))
            out.append((f"s{i}e{j}=e{j}s{i}", s[i] * e[j], e[j] * s[i]))
            out.append((f"e{i}e{j}=e{j}e{i}", e[i] * e[j], e[j] * e[i]))
    for i in range(1, n - 1):
        out.append((f"s{i}s{i+1}s{i}=s{i+1}s{i}s{i+1}", s[i] * s[i + 1] * s[i], s[i + 1] * s[i] * s[i + 1]))
        out.append((f"e{i}e{i+1}e{i}=e{i}", e[i] * e[i + 1] * e[i], e[i]))
        out.append((f"e{i+1}e{i}e{i+1}=e{i+1}", e[i + 1] * e[i] * e[i + 1], e[i + 1]))
        out.append((f"s{i}e{i+1}e{i}=s{i+1}e{i}", s[i] * e[i + 1] * e[i], s[i + 1] * e[i]))
        out.append((f"e{i+1}e{i}s{i+1}=e{i+1}s{i}", e[i + 1] * e[i] * s[i + 1], e[i + 1] * s[i]))
    return out


def element_to_json_text(a) -> str:
    return json.dumps(a.to_json(), sort_keys=True)


# ---------------------------------------------------------------------------
# star-action checks


def lemma23_check(n: int, i_list: Sequence[int], j_list: Sequence[int]) -> bool:
    """The sum over BD_n(i, j) is fixed by every transposition of the free labels."""
    fam = bd_pairs(n, i_list, j_list)
    total = LinearCombination.sum_of(n, fam)
    used = set(i_list) | set(j_list)
    free = [v for v in range(1, 2 * n + 1) if v not in used]
    for a, b in zip(free, free[1:]):
        if star_element(total, Permutation.transposition(a, b, 2 * n)) != total:
            return False
    return True


def pair_constraints(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every set of disjoint fixed pairs on 1..2n, as (i, j) lists with i_s < j_s."""
    labels = list(range(1, 2 * n + 1))
    for a in range(n + 1):
        for chosen in combinations(labels, 2 * a):
            for m in perfect_matchings(chosen):
                yield tuple(p[0] for p in m), tuple(p[1] for p in m)


def star_axioms_check(n: int, perms: Sequence[Permutation] | None = None) -> bool:
    """D*1 = D and (D*u)*v = D*(uv) over every diagram and pairs from ``perms``."""
    k = 2 * n
    if perms is None:
        perms = [Permutation.simple(i, k) for i in range(1, k)] + [Permutation.identity(k)]
    one = Permutation.identity(k)
    for d in enumerate_all(n):
        if star(d, one) != d:
            return False
        for u in perms:
            du = star(d, u)
            for v in perms:
                if star(du, v) != star(d, u * v):
                    return False
    return True
