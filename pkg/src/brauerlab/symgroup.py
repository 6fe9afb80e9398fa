"""Permutations, Young subgroups and sparse group-algebra elements.

Permutations act on the right of points: ``w(i)`` is the image (i)w and
products compose left to right, (i)(uv) = ((i)u)v.
"""

from __future__ import annotations

import re
from collections import defaultdict
from itertools import permutations as _iter_perms
from itertools import product
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .combinatorics import (
    Composition,
    Partition,
    Tableau,
    TypedTableau,
    column_tableau,
    conjugate,
    d_of_tableau,
    partitions_of,
    standard_tableaux,
    type_tableau_of,
    w_of_partition,
)


class Permutation:
    """A bijection of {1..k}; ``images[i-1]`` is (i)w."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(1, k + 1))

    @classmethod
    def transposition(cls, a: int, b: int, k: int) -> "Permutation":
        images = list(range(1, k + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(images)

    @classmethod
    def simple(cls, i: int, k: int) -> "Permutation":
        if not 1 <= i < k:
            raise ValueError(f"s_{i} is not a generator of S_{k}")
        return cls.transposition(i, i + 1, k)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], k: int) -> "Permutation":
        images = list(range(1, k + 1))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= k or a in seen:
                    raise ValueError(f"bad cycle entry {a}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "Permutation":
        """One-line notation "3 1 2 4" or cycle notation "(1 3 2)(4 5)"."""
        text = text.strip()
        if text.startswith("(") or text == "":
            if k is None:
                raise ValueError("cycle notation needs the degree k")
            cycles = [[int(x) for x in c.replace(",", " ").split()]
                      for c in re.findall(r"\(([^)]*)\)", text)]
            return cls.from_cycles([c for c in cycles if c], k)
        perm = cls(int(x) for x in text.replace(",", " ").split())
        if k is not None and perm.degree != k:
            raise ValueError(f"expected a permutation of degree {k}")
        return perm

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        o = other.images
        return Permutation(o[x - 1] for x in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        im = self.images
        return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, self.degree + 1):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def reduced_word(self) -> list[int]:
        """Indices j_1..j_r with self = s_{j_1} ... s_{j_r}, r = length (bubble sort)."""
        im = list(self.images)
        word = []
        while True:
            for j in range(len(im) - 1):
                if im[j] > im[j + 1]:
                    im[j], im[j + 1] = im[j + 1], im[j]
                    word.append(j + 1)
                    break
            else:
                return word

    def embed(self, k: int, offset: int = 0) -> "Permutation":
        """View as a permutation of {offset+1..offset+deg} inside S_k."""
        if offset + self.degree > k:
            raise ValueError("does not fit")
        images = list(range(1, k + 1))
        for i, x in enumerate(self.images, start=1):
            images[offset + i - 1] = offset + x
        return Permutation(images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Permutation"):
        return self.images < other.images

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return " ".join(map(str, self.images))

    def cycle_str(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def all_permutations(k: int) -> Iterator[Permutation]:
    for p in _iter_perms(range(1, k + 1)):
        yield Permutation(p)


class GroupAlgebraElement:
    """A sparse integer combination of permutations of a fixed degree."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Permutation, int] | None = None):
        self.k = k
        self.terms: dict[Permutation, int] = {}
        for w, c in (terms or {}).items():
            if w.degree != k:
                raise ValueError("degree mismatch")
            if c:
                self.terms[w] = c

    @classmethod
    def of(cls, w: Permutation, coeff: int = 1) -> "GroupAlgebraElement":
        return cls(w.degree, {w: coeff})

    @classmethod
    def one(cls, k: int) -> "GroupAlgebraElement":
        return cls.of(Permutation.identity(k))

    @classmethod
    def zero(cls, k: int) -> "GroupAlgebraElement":
        return cls(k)

    @classmethod
    def from_sum(cls, k: int, perms: Iterable[Permutation], signed: bool = False):
        acc: dict[Permutation, int] = defaultdict(int)
        for w in perms:
            acc[w] += w.sign() if signed else 1
        return cls(k, acc)

    def _check(self, other: "GroupAlgebraElement"):
        if self.k != other.k:
            raise ValueError(f"degree mismatch: {self.k} vs {other.k}")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        return GroupAlgebraElement(self.k, acc)

    def __neg__(self):
        return GroupAlgebraElement(self.k, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupAlgebraElement(self.k, {w: c * other for w, c in self.terms.items()})
        if isinstance(other, Permutation):
            other = GroupAlgebraElement.of(other)
        self._check(other)
        acc: dict[Permutation, int] = defaultdict(int)
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                acc[u * v] += a * b
        return GroupAlgebraElement(self.k, acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        if isinstance(other, Permutation):
            return GroupAlgebraElement.of(other) * self
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement) and self.k == other.k
                and self.terms == other.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return f"GroupAlgebraElement({self.k}, 0)"
        body = " + ".join(f"{c}*[{w}]" for w, c in sorted(self.terms.items()))
        return f"GroupAlgebraElement({self.k}, {body})"


def multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a * b


def _blocks(mu: Sequence[int]) -> list[range]:
    out, start = [], 1
    for p in mu:
        out.append(range(start, start + p))
        start += p
    return out


def young_subgroup(mu) -> list[Permutation]:
    """S_mu, the row stabiliser of t^mu."""
    mu = Composition(mu)
    k = mu.size
    blocks = [list(b) for b in _blocks(mu)]
    out = []
    for choice in product(*(_iter_perms(b) for b in blocks)):
        images = [0] * k
        for block, imgs in zip(blocks, choice):
            for a, b in zip(block, imgs):
                images[a - 1] = b
        out.append(Permutation(images))
    return sorted(out)


def young_generators(mu) -> list[Permutation]:
    """Coxeter generators s_i of S_mu (i, i+1 in the same row of t^mu)."""
    mu = Composition(mu)
    k = mu.size
    return [Permutation.simple(i, k) for b in _blocks(mu) for i in list(b)[:-1]]


def x_element(mu) -> GroupAlgebraElement:
    mu = Composition(mu)
    return GroupAlgebraElement.from_sum(mu.size, young_subgroup(mu))


def y_element(mu) -> GroupAlgebraElement:
    mu = Composition(mu)
    return GroupAlgebraElement.from_sum(mu.size, young_subgroup(mu), signed=True)


def jm_element(a: int, k: int) -> GroupAlgebraElement:
    """L_a = (a-1,a) + ... + (1,a); L_1 = 0."""
    if not 1 <= a <= k:
        raise ValueError(f"index {a} out of range 1..{k}")
    return GroupAlgebraElement.from_sum(k, (Permutation.transposition(i, a, k) for i in range(1, a)))


def tilde_subgroup(lam) -> list[Permutation]:
    """The subgroup of S_{lam'} cut out by the column-consistency condition.

    An element w of the column stabiliser of t_lam belongs iff, for rows i, j
    of a common length and columns a, b of that row length, w sends
    t_lam(i, a) to t_lam(j, a) exactly when it sends t_lam(i, b) to t_lam(j, b).
    """
    lam = Partition(lam)
    t = column_tableau(lam)
    groups: list[list[int]] = []
    row = 1
    for length, mult in lam.multiplicities():
        groups.append(list(range(row, row + mult)))
        row += mult
    out = []
    for w in young_subgroup(conjugate(lam)):
        ok = True
        for rows in groups:
            width = lam[rows[0] - 1]
            for i in rows:
                for j in rows:
                    hits = {w(t[i, a]) == t[j, a] for a in range(1, width + 1)}
                    if len(hits) > 1:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(w)
    return out


def right_coset_representatives(subgroup: Sequence[Permutation], group: Iterable[Permutation]) -> list[Permutation]:
    """Minimal-length representative of each coset H w, sorted."""
    best: dict[frozenset, Permutation] = {}
    for w in group:
        key = frozenset((h * w).images for h in subgroup)
        cur = best.get(key)
        if cur is None or (w.length(), w.images) < (cur.length(), cur.images):
            best[key] = w
    return sorted(best.values())


def h_element(lam) -> GroupAlgebraElement:
    """Signed sum of minimal right coset representatives of tilde-S_lam in S_lam'."""
    lam = Partition(lam)
    reps = right_coset_representatives(tilde_subgroup(lam), young_subgroup(conjugate(lam)))
    return GroupAlgebraElement.from_sum(lam.size, reps, signed=True)


def n_lambda(lam) -> int:
    """Multiplier in the y/h identity: |tilde-S_lam| = prod_i (lam'_i - lam'_{i+1})!.

    Equivalently the product of k! over the multiplicities k of the distinct
    part sizes of lam.
    """
    lam = Partition(lam)
    out = 1
    for _, k in lam.multiplicities():
        out *= factorial(k)
    return out


def n_lambda_printed(lam) -> int:
    """prod_i (lam_i - lam_{i+1})!, the unconjugated product; kept for comparison."""
    lam = Partition(lam)
    parts = list(lam) + [0]
    out = 1
    for i in range(len(lam)):
        out *= factorial(parts[i] - parts[i + 1])
    return out


def murphy_element(S: TypedTableau, t: Tableau) -> GroupAlgebraElement:
    """x_{S,t} = sum over standard s with mu(s) = S of d(s)^-1 x_mu d(t)."""
    mu, lam = S.shape, S.type
    if t.shape != mu:
        raise ValueError("t must have the shape of S")
    if not t.is_standard():
        raise ValueError("t must be standard")
    k = mu.size
    dt = d_of_tableau(t)
    sub = young_subgroup(mu)
    acc: dict[Permutation, int] = defaultdict(int)
    for s in standard_tableaux(mu):
        if type_tableau_of(s, lam).entries != S.entries:
            continue
        ds_inv = d_of_tableau(s).inverse()
        for w in sub:
            acc[ds_inv * w * dt] += 1
    return GroupAlgebraElement(k, acc)


def conjugacy_class_reps(k: int) -> list[tuple[Partition, Permutation]]:
    """One permutation with consecutive cycles per cycle type, identity first."""
    out = []
    for rho in reversed(partitions_of(k)):
        cycles, start = [], 1
        for p in rho:
            cycles.append(list(range(start, start + p)))
            start += p
        out.append((rho, Permutation.from_cycles(cycles, k)))
    return out


def w_lambda(lam) -> Permutation:
    return w_of_partition(lam)
