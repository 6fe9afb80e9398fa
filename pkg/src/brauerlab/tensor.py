"""Right action of B_n(-2m) on the symplectic tensor space V^{(x)n}, dim V = 2m.

Basis vectors v_1..v_2m pair up as (i, i') with i' = 2m+1-i. A simple
tensor is a tuple of indices; a TensorVector is a sparse map from simple
tensors to exact rationals.
"""

from __future__ import annotations

import csv
import io
import os
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .combinatorics import Partition, hook_dimension, two_partitions
from .diagrams import (
    BrauerDiagram,
    LinearCombination,
    bd_ab,
    bd_nf_bottom,
    bd_nf_top,
    D_nu,
    enumerate_all,
    to_normal_form,
)
from .exactla import echelon, primitive, sparse_rank_mod_p
from .symgroup import Permutation, all_permutations

DEFAULT_MAX_COLUMNS = 2 ** 24


class ResourceLimitError(RuntimeError):
    """Raised when a requested matrix exceeds the configured column bound."""


@dataclass(frozen=True)
class SymplecticSpace:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")

    @property
    def dim(self) -> int:
        return 2 * self.m

    @property
    def delta(self) -> int:
        """The loop value -2m at which B_n acts."""
        return -2 * self.m

    def prime(self, i: int) -> int:
        return 2 * self.m + 1 - i

    def eps(self, i: int, j: int) -> int:
        if j != self.prime(i):
            return 0
        return 1 if i < j else -1

    def check(self, indices: Sequence[int]) -> tuple[int, ...]:
        indices = tuple(int(i) for i in indices)
        if any(not 1 <= i <= self.dim for i in indices):
            raise ValueError(f"tensor index out of range 1..{self.dim}: {indices}")
        return indices

    def simple_tensors(self, n: int) -> list[tuple[int, ...]]:
        return list(product(range(1, self.dim + 1), repeat=n))

    def cup(self) -> list[tuple[int, int, int]]:
        """sum_k (v_k' (x) v_k - v_k (x) v_k') as (first, second, sign) triples."""
        out = []
        for k in range(1, self.m + 1):
            out.append((self.prime(k), k, 1))
            out.append((k, self.prime(k), -1))
        return out


class TensorVector:
    """Sparse exact vector in V^{(x)n}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Fraction | int] | None = None):
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v}

    @classmethod
    def simple(cls, indices: Iterable[int], coeff=1) -> "TensorVector":
        return cls({tuple(indices): coeff})

    def __add__(self, other: "TensorVector") -> "TensorVector":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return TensorVector(acc)

    def scale(self, c) -> "TensorVector":
        return TensorVector({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TensorVector) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "TensorVector(0)"
        body = " + ".join(f"{v}*v{list(k)}" for k, v in sorted(self.terms.items()))
        return f"TensorVector({body})"


# ---------------------------------------------------------------------------
# the action


def _act_simple_generator(idx: tuple[int, ...], kind: str, j: int, space: SymplecticSpace) -> dict:
    n = len(idx)
    if not 1 <= j <= n - 1:
        raise ValueError(f"generator index {j} out of range 1..{n - 1}")
    if kind == "s":
        out = list(idx)
        out[j - 1], out[j] = out[j], out[j - 1]
        return {tuple(out): -1}
    if kind == "e":
        e = space.eps(idx[j - 1], idx[j])
        if not e:
            return {}
        res = {}
        for a, b, sign in space.cup():
            out = list(idx)
            out[j - 1], out[j] = a, b
            res[tuple(out)] = e * sign
        return res
    raise ValueError(f"unknown generator kind {kind!r}")


def act_generator(v: TensorVector, gen: tuple[str, int], space: SymplecticSpace) -> TensorVector:
    """v . s_j or v . e_j, with ``gen`` = ("s", j) or ("e", j)."""
    kind, j = gen
    acc: dict = defaultdict(int)
    for idx, c in v.terms.items():
        for out, a in _act_simple_generator(idx, kind, j, space).items():
            acc[out] += c * a
    return TensorVector(acc)


def _act_simple_direct(idx: tuple[int, ...], d: BrauerDiagram, space: SymplecticSpace) -> dict:
    n = d.n
    top, bottom, vert = d.top_edges(), d.bottom_edges(), d.vertical_edges()
    coeff = 1
    for a, b in top:
        coeff *= space.eps(idx[a - 1], idx[b - 1])
        if not coeff:
            return {}
    # the permutation top -> bottom: a_j -> c_j, b_j -> d_j, strands as drawn
    images = [0] * n
    for (a, b), (c, e) in zip(top, bottom):
        images[a - 1], images[b - 1] = c, e
    for p, q in vert:
        images[p - 1] = q
    if Permutation(images).length() % 2:
        coeff = -coeff
    base = [0] * n
    for p, q in vert:
        base[q - 1] = idx[p - 1]
    results = {tuple(base): coeff}
    cup = space.cup()
    for c, e in bottom:
        nxt = {}
        for out, val in results.items():
            for x, y, sign in cup:
                o = list(out)
                o[c - 1], o[e - 1] = x, y
                nxt[tuple(o)] = val * sign
        results = nxt
    return results


def _act_simple_word(idx: tuple[int, ...], d: BrauerDiagram, space: SymplecticSpace) -> dict:
    v = TensorVector.simple(idx)
    for gen in to_normal_form(d).word():
        v = act_generator(v, gen, space)
    return v.terms


def act_diagram(v: TensorVector, d: BrauerDiagram, space: SymplecticSpace, route: str = "direct") -> TensorVector:
    """v . D via the edge description ("direct"), the normal-form word ("word"), or both ("checked")."""
    if route not in ("direct", "word", "checked"):
        raise ValueError(f"unknown route {route!r}")
    acc: dict = defaultdict(int)
    for idx, c in v.terms.items():
        if len(idx) != d.n:
            raise ValueError(f"tensor of length {len(idx)} cannot meet a {d.n}-diagram")
        if route == "word":
            res = _act_simple_word(idx, d, space)
        else:
            res = _act_simple_direct(idx, d, space)
            if route == "checked" and res != _act_simple_word(idx, d, space):
                raise AssertionError(f"action routes disagree for {d} on {idx}")
        for out, a in res.items():
            acc[out] += c * a
    return TensorVector(acc)


def act_element(v: TensorVector, a: LinearCombination, space: SymplecticSpace) -> TensorVector:
    if a.delta is not None and a.delta != space.delta:
        raise ValueError(f"element specialised at {a.delta}, space needs {space.delta}")
    acc = TensorVector()
    for d, c in a.terms.items():
        acc = acc + act_diagram(v, d, space).scale(c)
    return acc


def annihilates(a: LinearCombination, n: int, space: SymplecticSpace) -> tuple[bool, tuple | None]:
    """Whether a kills every simple tensor; the first surviving tensor otherwise."""
    for idx in space.simple_tensors(n):
        if not act_element(TensorVector.simple(idx), a, space).is_zero():
            return False, idx
    return True, None


# ---------------------------------------------------------------------------
# phi and its kernel


def max_columns() -> int:
    env = os.environ.get("BRAUERLAB_MAX_COLUMNS")
    return int(env) if env else DEFAULT_MAX_COLUMNS


def _guard(n: int, m: int, limit: int | None):
    limit = max_columns() if limit is None else limit
    cols = (2 * m) ** (2 * n)
    if cols > limit:
        raise ResourceLimitError(
            f"phi matrix for n={n}, m={m} needs {cols} columns, above the limit {limit} "
            "(raise it with BRAUERLAB_MAX_COLUMNS)")


@dataclass
class PhiMatrix:
    n: int
    m: int
    diagrams: list[BrauerDiagram]
    rows: list[dict[int, int]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (2 * self.m) ** (2 * self.n)

    def dense(self) -> list[list[int]]:
        width = self.shape[1]
        out = []
        for r in self.rows:
            row = [0] * width
            for c, v in r.items():
                row[c] = v
            out.append(row)
        return out


def _tensor_index(idx: Sequence[int], base: int) -> int:
    out = 0
    for i in idx:
        out = out * base + (i - 1)
    return out


def phi_matrix(n: int, m: int, limit: int | None = None) -> PhiMatrix:
    """Row D: coefficient of each output tensor in (input tensor) . D."""
    _guard(n, m, limit)
    space = SymplecticSpace(m)
    base = space.dim
    width = base ** n
    diagrams = enumerate_all(n)
    inputs = space.simple_tensors(n)
    rows = []
    for d in diagrams:
        row = {}
        for idx in inputs:
            col0 = _tensor_index(idx, base) * width
            for out, c in _act_simple_direct(idx, d, space).items():
                row[col0 + _tensor_index(out, base)] = c
        rows.append(row)
    return PhiMatrix(n, m, diagrams, rows)


def kernel_formula(n: int, m: int) -> int:
    """Sum of dim S^lam over even lam with lam_1 > 2m."""
    return sum(hook_dimension(lam) for lam in two_partitions(n) if lam[0] > 2 * m)


def kernel_phi(n: int, m: int, limit: int | None = None) -> list[LinearCombination]:
    """Basis of Ker phi as primitive integer combinations of diagrams."""
    phi = phi_matrix(n, m, limit)
    ech = echelon(phi.rows, track=True)
    out = []
    size = len(phi.diagrams)
    for vec in ech.kernel:
        dense = primitive([vec.get(i, 0) for i in range(size)])
        out.append(LinearCombination(n, {phi.diagrams[i]: c for i, c in enumerate(dense) if c}, delta=-2 * m))
    return out


def kernel_module_shape(n: int, m: int) -> Partition | None:
    """(2m+2, 2^{n-m-1}), or None when n < m+1."""
    if n < m + 1:
        return None
    return Partition([2 * m + 2] + [2] * (n - m - 1))


def verify_kernel_theorem(n: int, m: int, limit: int | None = None) -> dict:
    """Ker phi equals M^{(2m+2, 2^{n-m-1})}: annihilation, dimension and joint rank."""
    from .xbasis import filtration_module

    space = SymplecticSpace(m)
    kernel = kernel_phi(n, m, limit)
    formula = kernel_formula(n, m)
    shape = kernel_module_shape(n, m)
    module = [] if shape is None else [b.value.with_delta(space.delta) for b in filtration_module(shape).basis]
    witness = None
    for b in module:
        ok, idx = annihilates(b, n, space)
        if not ok:
            witness = f"{b} on {idx}"
            break
    order = {d: i for i, d in enumerate(enumerate_all(n))}
    kvecs = [{i: c for i, c in enumerate(v.coordinates(order)) if c} for v in kernel]
    mvecs = [{i: c for i, c in enumerate(v.coordinates(order)) if c} for v in module]
    joint = echelon(kvecs + mvecs).rank
    mrank = echelon(mvecs).rank
    checks = {
        "annihilates": witness is None,
        "dimension_formula": len(kernel) == formula,
        "dimension_equal": mrank == len(kernel) == len(module),
        "joint_rank": joint == len(kernel),
    }
    detail = {"kernel_dim": len(kernel), "formula": formula, "module_dim": len(module),
              "joint_rank_value": joint, "module_shape": None if shape is None else str(shape), **checks}
    if witness:
        detail["witness"] = witness
    return {"check": "thm35", "n": n, "m": m, "pass": all(checks.values()), "detail": detail}


def kernel_rank_mod_p(n: int, m: int, p: int, limit: int | None = None) -> dict:
    """Stress test over F_p: reported, not asserted."""
    phi = phi_matrix(n, m, limit)
    rank = sparse_rank_mod_p(phi.rows, p)
    dim = len(phi.rows) - rank
    return {"check": "kernel_mod_p", "n": n, "m": m, "p": p, "kernel_dim": dim,
            "formula": kernel_formula(n, m), "agrees": dim == kernel_formula(n, m)}


# ---------------------------------------------------------------------------
# annihilation lemma, normal-form families, symplectic length


def bd_sum(diagrams: Iterable[BrauerDiagram], n: int, m: int) -> LinearCombination:
    return LinearCombination.sum_of(n, diagrams, delta=-2 * m)


def verify_bd_annihilation(n: int, m: int, a: int, b: int) -> bool:
    """Whether the sum over BD_n(a, b) kills every simple tensor."""
    if (a + b) % 2:
        raise ValueError("a + b must be even")
    ok, _ = annihilates(bd_sum(bd_ab(n, a, b), n, m), n, SymplecticSpace(m))
    return ok


def bd_annihilation_report(n: int, m: int) -> dict:
    """Every (a, b) with a + b >= 2m+2 must annihilate; smaller sums are listed only."""
    required, informational = [], []
    for a in range(n + 1):
        for b in range(n + 1):
            if (a + b) % 2:
                continue
            val = verify_bd_annihilation(n, m, a, b)
            (required if a + b >= 2 * m + 2 else informational).append({"a": a, "b": b, "annihilates": val})
    return {"check": "lemma33", "n": n, "m": m, "pass": all(r["annihilates"] for r in required),
            "detail": {"required": required, "informational": informational}}


def permutation_invariance_check(n: int, m: int = 1) -> dict:
    """sigma . sum BD^(f)(n; d2) and sum BD^(f)(d1; n) . sigma leave the sums fixed."""
    delta = -2 * m
    perms = [LinearCombination.of(BrauerDiagram.from_permutation(w), delta=delta) for w in all_permutations(n)]
    bad = []
    for f in range(n // 2 + 1):
        for d in D_nu(n, f):
            left = bd_sum(bd_nf_bottom(n, f, d), n, m)
            right = bd_sum(bd_nf_top(n, f, d), n, m)
            for p in perms:
                if p * left != left:
                    bad.append(f"left f={f} d2={d}")
                if right * p != right:
                    bad.append(f"right f={f} d1={d}")
    return {"check": "lemma43_44", "n": n, "pass": not bad, "detail": {"violations": bad[:5]}}


def route_agreement(n: int, m: int, diagrams: Iterable[BrauerDiagram] | None = None,
                    tensors: Iterable[Sequence[int]] | None = None) -> dict:
    space = SymplecticSpace(m)
    diagrams = list(diagrams) if diagrams is not None else enumerate_all(n)
    tensors = list(tensors) if tensors is not None else space.simple_tensors(n)
    bad, count = [], 0
    for d in diagrams:
        for idx in tensors:
            count += 1
            if _act_simple_direct(tuple(idx), d, space) != _act_simple_word(tuple(idx), d, space):
                bad.append(f"{d} on {tuple(idx)}")
    return {"check": "lemma42_routes", "n": n, "m": m, "pass": not bad,
            "detail": {"pairs": count, "disagreements": bad[:5]}}


def symplectic_length(indices: Sequence[int], space: SymplecticSpace) -> int:
    """Maximum number of disjoint position pairs (s, t) with i_s = (i_t)'."""
    idx = space.check(indices)
    g = nx.Graph()
    g.add_nodes_from(range(len(idx)))
    for s in range(len(idx)):
        for t in range(s + 1, len(idx)):
            if idx[s] == space.prime(idx[t]):
                g.add_edge(s, t)
    return len(nx.max_weight_matching(g, maxcardinality=True))


def symplectic_length_closed(indices: Sequence[int], space: SymplecticSpace) -> int:
    """The same count, via sum over k <= m of min(#k, #k')."""
    idx = space.check(indices)
    return sum(min(idx.count(k), idx.count(space.prime(k))) for k in range(1, space.m + 1))


# ---------------------------------------------------------------------------
# export


def kernel_to_json(kernel: Sequence[LinearCombination]) -> list[list[dict]]:
    return [[{"diagram": d.to_json(), "coeff_rational": str(Fraction(c))} for d, c in v] for v in kernel]


def kernel_to_csv(kernel: Sequence[LinearCombination]) -> str:
    """Coordinate rows "vector,diagram_index,diagram,value" (1-based, canonical diagram order)."""
    if not kernel:
        return "vector,diagram_index,diagram,value\n"
    order = {d: i for i, d in enumerate(enumerate_all(kernel[0].n))}
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["vector", "diagram_index", "diagram", "value"])
    for k, v in enumerate(kernel, start=1):
        for d, c in v:
            w.writerow([k, order[d] + 1, str(d), str(Fraction(c))])
    return buf.getvalue()
