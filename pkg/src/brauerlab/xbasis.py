"""Orbit-sum basis of B_n under the star action, its filtration, and checks.

For an even partition lam of 2n, X_lam is the sum of all diagrams whose
edges stay inside consecutive label blocks of sizes lam_1, lam_2, ...;
X_{lam,t} = X_lam * d(t). Together over all even lam and standard t they
form a Z-basis of B_n whose dominance filtration has Specht quotients.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, prod

from .combinatorics import (
    Partition,
    Tableau,
    column_tableau,
    conjugate,
    d_of_tableau,
    dominates,
    hook_dimension,
    mn_character,
    residue,
    semistandard_tableaux,
    standard_tableaux,
    strictly_dominates,
    two_partitions,
)
from .diagrams import (
    BrauerDiagram,
    BrauerElement,
    LinearCombination,
    bd_block,
    double_factorial,
    enumerate_all,
    perfect_matchings,
    star,
    star_element,
)
from .exactla import IntegerMatrix, RationalMatrix, hermite_solve, smith_form, solve_in_span
from .symgroup import (
    GroupAlgebraElement,
    Permutation,
    conjugacy_class_reps,
    h_element,
    jm_element,
    murphy_element,
    n_lambda,
    n_lambda_printed,
    w_lambda,
    y_element,
    young_generators,
    young_subgroup,
)


def even_partition(lam) -> Partition:
    lam = Partition(lam)
    if any(p % 2 for p in lam):
        raise ValueError(f"{lam} has an odd part; need every part even")
    return lam


def x_block(a: int, b: int, n: int) -> BrauerElement:
    """Sum of the diagrams that are gamma-paired outside the block a+1..a+b."""
    return BrauerElement(n, {d: 1 for d in bd_block(n, a, b)})


@lru_cache(maxsize=None)
def x_lambda(lam) -> BrauerElement:
    """Product of the block sums for consecutive blocks of sizes lam_1, lam_2, ..."""
    lam = even_partition(lam)
    n = lam.size // 2
    out = BrauerElement.one(n)
    start = 0
    for part in lam:
        out = out * x_block(start, part, n)
        start += part
    return out


def x_lambda_direct(lam) -> list[BrauerDiagram]:
    """Diagrams of X_lam listed directly as matchings inside each block."""
    lam = even_partition(lam)
    n = lam.size // 2
    blocks, start = [], 1
    for part in lam:
        blocks.append(list(perfect_matchings(range(start, start + part))))
        start += part
    out = []

    def rec(i, acc):
        if i == len(blocks):
            out.append(BrauerDiagram.from_pairs(n, acc))
            return
        for m in blocks[i]:
            rec(i + 1, acc + m)

    rec(0, [])
    return sorted(out)


def expected_term_count(lam) -> int:
    return prod(double_factorial(p - 1) for p in Partition(lam))


def as_combination(a: BrauerElement) -> LinearCombination:
    """Drop to B_{n,Z}; every coefficient must be a constant."""
    terms = {}
    for d, c in a.terms.items():
        if len(c.coeffs) > 1:
            raise ValueError(f"coefficient {c} of {d} is not constant")
        terms[d] = c.coeffs[0]
    return LinearCombination(a.n, terms)


@lru_cache(maxsize=None)
def x_lambda_combination(lam) -> LinearCombination:
    return as_combination(x_lambda(Partition(lam)))


@dataclass(frozen=True)
class XBasisElement:
    lam: Partition
    tableau: Tableau
    value: LinearCombination = field(compare=False)

    @property
    def label(self) -> str:
        return f"X[{self.lam};{self.tableau}]"


def x_lambda_t(lam, t: Tableau) -> XBasisElement:
    lam = even_partition(lam)
    if t.shape != lam:
        raise ValueError(f"tableau shape {t.shape} differs from {lam}")
    if not t.is_standard():
        raise ValueError(f"tableau {t} is not standard")
    return XBasisElement(lam, t, star_element(x_lambda_combination(lam), d_of_tableau(t)))


@lru_cache(maxsize=None)
def full_basis(n: int) -> tuple[XBasisElement, ...]:
    """All X_{lam,t}: lam in decreasing lex order, then t by reading word."""
    return tuple(x_lambda_t(lam, t) for lam in two_partitions(n) for t in standard_tableaux(lam))


@dataclass
class FiltrationModule:
    lam: Partition
    strict: bool
    basis: list[XBasisElement]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains_shape(self, nu) -> bool:
        return strictly_dominates(nu, self.lam) if self.strict else dominates(nu, self.lam)


def filtration_module(lam, strict: bool = False) -> FiltrationModule:
    """M^lam (nu dominating lam) or, with ``strict``, M^{>lam}."""
    lam = even_partition(lam)
    keep = strictly_dominates if strict else dominates
    basis = [b for b in full_basis(lam.size // 2) if keep(b.lam, lam)]
    return FiltrationModule(lam, strict, basis)


# ---------------------------------------------------------------------------
# coordinates against the full basis


class XCoordinates:
    """Solve for X-basis coordinates through a precomputed exact inverse."""

    def __init__(self, n: int):
        self.n = n
        self.diagrams = enumerate_all(n)
        self.index = {d: i for i, d in enumerate(self.diagrams)}
        self.basis = full_basis(n)
        self.position = {(b.lam, b.tableau): i for i, b in enumerate(self.basis)}
        self.matrix = basis_matrix(n)
        inv = RationalMatrix.from_dense(self.matrix.to_lists()).inverse()
        self._inverse_rows = inv.rows()
        cols = [dict() for _ in range(len(self.basis))]
        for i, r in enumerate(self._inverse_rows):
            for j, v in r.items():
                cols[j][i] = v
        self._inverse_cols = cols

    def coordinates(self, v: LinearCombination) -> dict[int, Fraction | int]:
        """c with v = sum_j c_j X_j (sparse)."""
        acc: dict[int, Fraction] = defaultdict(int)
        for d, c in v.terms.items():
            for j, a in self._inverse_rows[self.index[d]].items():
                acc[j] += c * a
        return {j: c for j, c in acc.items() if c}

    def coordinate(self, v: LinearCombination, j: int):
        col = self._inverse_cols[j]
        return sum((c * col.get(self.index[d], 0) for d, c in v.terms.items()), 0)


@lru_cache(maxsize=None)
def x_coordinates(n: int) -> XCoordinates:
    return XCoordinates(n)


def basis_matrix(n: int) -> IntegerMatrix:
    """Rows: X_{lam,t} in basis order; columns: diagrams in canonical order."""
    index = {d: i for i, d in enumerate(enumerate_all(n))}
    rows = []
    for b in full_basis(n):
        row = [0] * len(index)
        for d, c in b.value.terms.items():
            row[index[d]] = c
        rows.append(row)
    return IntegerMatrix(rows, len(index))


def verify_basis(n: int) -> dict:
    mat = basis_matrix(n)
    size = mat.nrows
    rank = mat.rank()
    offending = None
    if rank < size:
        seen = []
        for lam in two_partitions(n):
            seen += [i for i, b in enumerate(full_basis(n)) if b.lam == lam]
            sub = IntegerMatrix([mat.to_lists()[i] for i in seen], mat.ncols)
            if sub.rank() < len(seen):
                offending = str(lam)
                break
    invariants = smith_form(mat) if rank == size else []
    det = mat.determinant() if mat.nrows == mat.ncols else 0
    ok = size == double_factorial(2 * n - 1) == mat.ncols and rank == size and abs(det) == 1 \
        and all(v == 1 for v in invariants)
    detail = {"size": size, "rank": rank, "determinant": det,
              "smith_all_one": bool(invariants) and all(v == 1 for v in invariants)}
    if offending:
        detail["offending_lambda"] = offending
    return {"check": "thm212", "n": n, "pass": ok, "detail": detail}


# ---------------------------------------------------------------------------
# pi_lambda and the Murphy-basis comparison


def pi_lambda(a: GroupAlgebraElement, lam) -> LinearCombination:
    """Image of a in x_lam Z[S_2n] under x_lam w -> X_lam * w."""
    lam = even_partition(lam)
    if a.k != lam.size:
        raise ValueError(f"degree {a.k} differs from |lam| = {lam.size}")
    blocks, start = [], 1
    for part in lam:
        blocks.append(range(start, start + part))
        start += part
    order = len(young_subgroup(lam))
    cosets: dict[tuple, list] = defaultdict(list)
    for w, c in a.terms.items():
        key = tuple(frozenset(w(i) for i in blk) for blk in blocks)
        cosets[key].append(c)
    base = x_lambda_combination(lam)
    out = LinearCombination(lam.size // 2)
    for key in sorted(cosets, key=lambda k: [sorted(s) for s in k]):
        coeffs = cosets[key]
        total = sum(coeffs)
        if len(coeffs) != order or len(set(coeffs)) != 1 or total % order:
            rows = "/".join(" ".join(map(str, sorted(s))) for s in key)
            raise ValueError(f"not left S_lam-invariant on the coset with rows {rows}")
        rep = d_of_tableau(Tableau.from_rows([sorted(s) for s in key]))
        out = out + star_element(base, rep).scale(total // order)
    return out


def prop210_check(lam) -> dict:
    """pi_lam(x_{S,t}) has integral X-coordinates supported on nu dominating lam."""
    lam = even_partition(lam)
    n = lam.size // 2
    coords = x_coordinates(n)
    failures, checked = [], 0
    from .combinatorics import partitions_of

    for mu in partitions_of(lam.size):
        if not dominates(mu, lam):
            continue
        for S in semistandard_tableaux(mu, lam):
            for t in standard_tableaux(mu):
                img = pi_lambda(murphy_element(S, t), lam)
                c = coords.coordinates(img)
                checked += 1
                bad = [j for j, v in c.items()
                       if Fraction(v).denominator != 1 or not dominates(coords.basis[j].lam, lam)]
                if bad:
                    failures.append(f"S={S} t={t}")
    return {"check": "prop210", "lambda": str(lam), "pass": not failures,
            "detail": {"elements": checked, "failures": failures[:5]}}


# ---------------------------------------------------------------------------
# Lemma on y/h and the Jucys-Murphy eigenvector


def distinguished_diagram(lam) -> BrauerDiagram:
    """Join t_lam(i, 2j-1) to t_lam(i, 2j) along every row."""
    lam = even_partition(lam)
    t = column_tableau(lam)
    pairs = [(t[i, 2 * j - 1], t[i, 2 * j]) for i in range(1, len(lam) + 1) for j in range(1, lam[i - 1] // 2 + 1)]
    return BrauerDiagram.from_pairs(lam.size // 2, pairs)


@lru_cache(maxsize=None)
def eigen_vector(lam) -> LinearCombination:
    """X_lam * (w_lam h_lam)."""
    lam = even_partition(lam)
    xw = star_element(x_lambda_combination(lam), w_lambda(lam))
    return star_element(xw, h_element(lam))


def lemma27_check(lam, multiplier=None) -> dict:
    """X_lam*(w_lam y_lam') == multiplier * X_lam*(w_lam h_lam), and d has coefficient 1."""
    lam = even_partition(lam)
    mult = n_lambda(lam) if multiplier is None else multiplier
    xw = star_element(x_lambda_combination(lam), w_lambda(lam))
    lhs = star_element(xw, y_element(conjugate(lam)))
    rhs = eigen_vector(lam)
    identity_ok = lhs == rhs.scale(mult)
    coeff = rhs.terms.get(distinguished_diagram(lam), 0)
    return {"check": "lemma27", "lambda": str(lam), "pass": identity_ok and coeff == 1,
            "detail": {"multiplier": mult, "identity": identity_ok, "distinguished_coeff": coeff,
                       "content": coefficient_content(rhs), "n_lambda_printed": n_lambda_printed(lam)}}


def coefficient_content(v: LinearCombination) -> int:
    """gcd of the coefficients; 1 means v stays nonzero after any base change."""
    return reduce(gcd, (int(c) for _, c in v), 0)


def nonvanishing_check(lam) -> dict:
    """X_lam*(w_lam h_lam) has coprime integer coefficients."""
    lam = even_partition(lam)
    content = coefficient_content(eigen_vector(lam))
    return {"check": "lemma27_nonvanishing", "lambda": str(lam), "pass": content == 1,
            "detail": {"content": content}}


def jm_eigen_check(lam, a: int) -> dict:
    lam = even_partition(lam)
    k = lam.size
    if not 1 <= a <= k:
        raise ValueError(f"index {a} out of range 1..{k}")
    v = eigen_vector(lam)
    eig = residue(column_tableau(lam), a)
    ok = star_element(v, jm_element(a, k)) == v.scale(eig)
    return {"check": "jm_eigen", "lambda": str(lam), "a": a, "pass": ok, "detail": {"eigenvalue": eig}}


def cor26_check(lam) -> dict:
    """X_lam * s == X_lam for every Coxeter generator s of S_lam."""
    lam = even_partition(lam)
    x = x_lambda_combination(lam)
    bad = [str(s) for s in young_generators(lam) if star_element(x, s) != x]
    return {"check": "cor26", "lambda": str(lam), "pass": not bad, "detail": {"violations": bad}}


# ---------------------------------------------------------------------------
# filtration: closure and quotient characters


def closure_check(lam) -> dict:
    """Every basis element of M^lam, moved by any s_i, stays in M^lam."""
    lam = even_partition(lam)
    n = lam.size // 2
    coords = x_coordinates(n)
    module = filtration_module(lam)
    gens = [Permutation.simple(i, 2 * n) for i in range(1, 2 * n)]
    bad = []
    for b in module.basis:
        for s in gens:
            c = coords.coordinates(star_element(b.value, s))
            if any(not dominates(coords.basis[j].lam, lam) for j in c):
                bad.append(f"{b.label}*{s}")
    return {"check": "cor211", "lambda": str(lam), "pass": not bad,
            "detail": {"dimension": module.dimension, "violations": bad[:5]}}


def quotient_character(lam, w: Permutation):
    """Trace of w on M^lam / M^{>lam} in the images of the X_{lam,t}."""
    lam = even_partition(lam)
    coords = x_coordinates(lam.size // 2)
    total = 0
    for t in standard_tableaux(lam):
        j = coords.position[(lam, t)]
        total += coords.coordinate(star_element(coords.basis[j].value, w), j)
    return total


def character_check(n: int) -> dict:
    rows, ok = [], True
    for lam in two_partitions(n):
        for rho, rep in conjugacy_class_reps(2 * n):
            got = quotient_character(lam, rep)
            want = mn_character(lam, rho)
            if got != want:
                ok = False
                rows.append({"lambda": str(lam), "class": str(rho), "got": str(got), "want": want})
    return {"check": "thm214", "n": n, "pass": ok, "detail": {"mismatches": rows}}


def dimension_check(n: int) -> dict:
    bad = []
    for lam in two_partitions(n):
        diff = filtration_module(lam).dimension - filtration_module(lam, strict=True).dimension
        if diff != hook_dimension(lam):
            bad.append(str(lam))
    return {"check": "filtration_dims", "n": n, "pass": not bad, "detail": {"violations": bad}}


# ---------------------------------------------------------------------------
# the (6,2) versus (4,4) lattice example


def star_orbit(v: LinearCombination) -> list[LinearCombination]:
    """All distinct v * w, w in S_2n, by breadth-first search over s_i."""
    k = 2 * v.n
    gens = [Permutation.simple(i, k) for i in range(1, k)]
    seen = {v.key(): v}
    queue = deque([v])
    while queue:
        cur = queue.popleft()
        for s in gens:
            nxt = star_element(cur, s)
            key = nxt.key()
            if key not in seen:
                seen[key] = nxt
                queue.append(nxt)
    return [seen[k] for k in sorted(seen)]


def remark213_check() -> dict:
    n = 4
    order = {d: i for i, d in enumerate(enumerate_all(n))}
    orbit_elems = star_orbit(x_lambda_combination(Partition((4, 4))))
    lattice = [v.coordinates(order) for v in orbit_elems]
    target_elem = x_lambda_combination(Partition((6, 2)))
    target = target_elem.coordinates(order)
    integral = hermite_solve(lattice, target)
    rational = solve_in_span(lattice, target)
    return {"check": "remark213", "n": n, "pass": integral is None,
            "detail": {"orbit_size": len(orbit_elems), "target_terms": len(target_elem),
                       "integer_member": integral is not None, "rational_member": rational is not None}}
