"""Exact linear algebra for the quotient by the diagonal invariant.

The model ring is the exterior algebra on t_1..t_{n-1}, x_1..x_{n-1} modulo
the principal ideal of D = t_1 x_1 + ... + t_{n-1} x_{n-1}.  Everything is
computed bidegree by bidegree with sparse exact elimination; the classes of
the noncrossing partition vectors form the working basis.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, gcd
from typing import Iterable, Mapping

from .basisops import partition_vector
from .exterior import Monomial, Multivector, wedge
from .partitions import LabeledPartition, phi, phi_bidegree


def diagonal_element(n: int) -> Multivector:
    """D = t_1 x_1 + ... + t_{n-1} x_{n-1}, the quotient generator."""
    terms = {Monomial(1 << i, 1 << i): Fraction(1) for i in range(n - 1)}
    return Multivector(n, terms)


def monomials_of_bidegree(n: int, i: int, j: int) -> list[Monomial]:
    if not (0 <= i <= n - 1 and 0 <= j <= n - 1):
        return []
    out = []
    for tpos in combinations(range(n - 1), i):
        tmask = sum(1 << p for p in tpos)
        for xpos in combinations(range(n - 1), j):
            out.append(Monomial(tmask, sum(1 << p for p in xpos)))
    return out


def ideal_slice(n: int, i: int, j: int) -> list[Multivector]:
    """Spanning set of the (i, j) piece of the ideal: D wedge each (i-1, j-1) monomial."""
    d = diagonal_element(n)
    out = []
    for mono in monomials_of_bidegree(n, i - 1, j - 1):
        v = wedge(d, Multivector.from_monomial(n, mono))
        if not v.is_zero():
            out.append(v)
    return out


# -- sparse exact elimination --------------------------------------------------


def _axpy(target: dict, source: Mapping, factor: Fraction) -> None:
    for key, value in source.items():
        s = target.get(key, Fraction(0)) + factor * value
        if s:
            target[key] = s
        else:
            target.pop(key, None)


class ColumnEchelon:
    """Column echelon over exact rationals with original-column tracking.

    Pivot rows are chosen lexicographically largest (term order
    t_1 > x_1 > t_2 > ...), so pivots sit on leading terms.
    """

    def __init__(self, n: int):
        self.n = n
        self.pivots: dict[Monomial, tuple[dict[Monomial, Fraction], dict[int, Fraction]]] = {}
        self.ncols = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, vec: dict[Monomial, Fraction], combo: dict[int, Fraction] | None):
        while True:
            best = None
            best_key = -1
            for row in vec:
                if row in self.pivots:
                    key = row.lex_key(self.n)
                    if key > best_key:
                        best, best_key = row, key
            if best is None:
                return
            c = vec[best]
            pvec, pcombo = self.pivots[best]
            _axpy(vec, pvec, -c)
            if combo is not None:
                _axpy(combo, pcombo, -c)

    def add_column(self, column: Multivector) -> bool:
        """Insert a column; True if it increased the rank."""
        index = self.ncols
        self.ncols += 1
        vec = dict(column.terms)
        combo = {index: Fraction(1)}
        self._reduce(vec, combo)
        if not vec:
            return False
        pivot = max(vec, key=lambda m: m.lex_key(self.n))
        inv = 1 / vec[pivot]
        vec = {m: c * inv for m, c in vec.items()}
        combo = {j: c * inv for j, c in combo.items()}
        self.pivots[pivot] = (vec, combo)
        return True

    def solve(self, target: Multivector) -> dict[int, Fraction] | None:
        """Coefficients on the original columns reproducing the target, or None."""
        vec = dict(target.terms)
        coords: dict[int, Fraction] = {}
        while True:
            best = None
            best_key = -1
            for row in vec:
                if row in self.pivots:
                    key = row.lex_key(self.n)
                    if key > best_key:
                        best, best_key = row, key
            if best is None:
                break
            c = vec[best]
            pvec, pcombo = self.pivots[best]
            _axpy(vec, pvec, -c)
            _axpy(coords, pcombo, c)
        if vec:
            return None
        return coords


def column_rank(columns: Iterable[Multivector], n: int) -> int:
    """Rank of a sparse column family, fraction-free integer elimination."""
    pivots: dict[Monomial, dict[Monomial, int]] = {}
    for column in columns:
        vec: dict[Monomial, int] = {}
        scale = 1
        for mono, c in column.terms.items():
            scale = scale * c.denominator // gcd(scale, c.denominator)
        for mono, c in column.terms.items():
            vec[mono] = int(c * scale)
        while vec:
            best = max(vec, key=lambda m: m.lex_key(n))
            piv = pivots.get(best)
            if piv is None:
                g = 0
                for value in vec.values():
                    g = gcd(g, value)
                pivots[best] = {m: v // g for m, v in vec.items()}
                break
            a = piv[best]
            b = vec[best]
            new: dict[Monomial, int] = {}
            for m, v in vec.items():
                new[m] = a * v
            for m, v in piv.items():
                s = new.get(m, 0) - b * v
                if s:
                    new[m] = s
                else:
                    new.pop(m, None)
            g = 0
            for value in new.values():
                g = gcd(g, value)
            vec = {m: v // g for m, v in new.items()} if g else {}
    return len(pivots)


# -- dimensions ----------------------------------------------------------------


@lru_cache(maxsize=None)
def ideal_rank(n: int, i: int, j: int) -> int:
    return column_rank(ideal_slice(n, i, j), n)


def dimension(n: int, i: int, j: int) -> int:
    """Dimension of the (i, j) bidegree piece of the quotient, by exact rank."""
    if not (0 <= i <= n - 1 and 0 <= j <= n - 1):
        return 0
    return comb(n - 1, i) * comb(n - 1, j) - ideal_rank(n, i, j)


def bidegree_table(n: int) -> dict[tuple[int, int], int]:
    return {
        (i, j): dimension(n, i, j)
        for i in range(n)
        for j in range(n)
        if dimension(n, i, j)
    }


def narayana(n: int, k: int) -> int:
    return comb(n, k) * comb(n, k - 1) // n


# -- normal form in the partition basis -----------------------------------------


@lru_cache(maxsize=None)
def _factorization(n: int, i: int, j: int) -> tuple[tuple[LabeledPartition, ...], ColumnEchelon]:
    """Echelon of the partition-vector columns followed by the ideal slice."""
    pis = phi_bidegree(n, i, j)
    ech = ColumnEchelon(n)
    for pi in pis:
        if not ech.add_column(partition_vector(pi)):
            raise RuntimeError(
                f"partition vector column {pi} is dependent at bidegree ({i}, {j})"
            )
    for col in ideal_slice(n, i, j):
        ech.add_column(col)
    return pis, ech


def reduce_to_basis(f: Multivector) -> dict[LabeledPartition, Fraction]:
    """Unique coordinates of the class of f over the noncrossing partition basis."""
    coords: dict[LabeledPartition, Fraction] = {}
    for (i, j), part in f.homogeneous_parts().items():
        pis, ech = _factorization(f.n, i, j)
        solved = ech.solve(part)
        if solved is None:
            raise RuntimeError(
                f"element not in the column span at bidegree ({i}, {j}); "
                "this indicates a kernel bug"
            )
        for col, c in solved.items():
            if col < len(pis) and c:
                coords[pis[col]] = coords.get(pis[col], Fraction(0)) + c
    return {pi: c for pi, c in coords.items() if c}


def coords_vector(coords: Mapping[LabeledPartition, Fraction], n: int) -> Multivector:
    total = Multivector.zero(n)
    for pi, c in coords.items():
        total = total + partition_vector(pi).scale(c)
    return total


# -- verification reports --------------------------------------------------------


def expected_leading_monomial(pi: LabeledPartition) -> Monomial:
    tmask = 0
    xmask = 0
    for a, _ in pi.pairs:
        tmask |= 1 << (a - 1)
        xmask |= 1 << (a - 1)
    for i, label in pi.singletons:
        if label == "t":
            tmask |= 1 << (i - 1)
        else:
            xmask |= 1 << (i - 1)
    return Monomial(tmask, xmask)


def verify_basis(n: int) -> dict:
    """Check that the noncrossing partition vectors are a basis of the quotient.

    Dimension count by exact rank, independence of the vector columns modulo
    the ideal, per-class leading-term uniqueness, and the Narayana profile of
    the top antidiagonal.
    """
    witnesses: list[str] = []
    cells = []
    total_dim = 0
    g_independent = True
    for i in range(n):
        for j in range(n):
            monos = comb(n - 1, i) * comb(n - 1, j)
            rank = ideal_rank(n, i, j)
            dim = monos - rank
            pis = phi_bidegree(n, i, j)
            cell_ok = True
            if dim or pis:
                try:
                    _factorization(n, i, j)
                except RuntimeError as exc:
                    g_independent = False
                    cell_ok = False
                    witnesses.append(str(exc))
                cells.append(
                    {
                        "i": i,
                        "j": j,
                        "monomials": monos,
                        "ideal_rank": rank,
                        "dim": dim,
                        "indexed": len(pis),
                        "ok": cell_ok and dim == len(pis),
                    }
                )
                if dim != len(pis):
                    witnesses.append(
                        f"bidegree ({i},{j}): dim {dim} but {len(pis)} partitions"
                    )
            total_dim += dim

    count = len(phi(n))
    count_ok = count == total_dim

    leading_ok = True
    groups: dict[tuple, set[Monomial]] = {}
    for pi in phi(n):
        lead = partition_vector(pi).leading_monomial()
        expected = expected_leading_monomial(pi)
        if lead != expected:
            leading_ok = False
            witnesses.append(f"leading term of {pi} is {lead}, expected {expected}")
            continue
        key = (frozenset(v for p in pi.pairs for v in p), pi.singletons)
        seen = groups.setdefault(key, set())
        if lead in seen:
            leading_ok = False
            witnesses.append(f"duplicate leading term in class of {pi}")
        seen.add(lead)

    nar_rows = []
    nar_ok = True
    for k in range(1, n + 1):
        expected = narayana(n, k)
        dim = dimension(n, n - k, k - 1)
        nar_rows.append({"k": k, "dim": dim, "narayana": expected, "ok": dim == expected})
        if dim != expected:
            nar_ok = False
            witnesses.append(f"bidegree ({n-k},{k-1}): dim {dim} != Narayana {expected}")

    passed = count_ok and g_independent and leading_ok and nar_ok and all(
        c["ok"] for c in cells
    )
    return {
        "n": n,
        "indexed_count": count,
        "dim_total": total_dim,
        "count_matches_dimension": count_ok,
        "columns_independent": g_independent,
        "leading_terms_ok": leading_ok,
        "narayana_ok": nar_ok,
        "bidegrees": cells,
        "narayana": nar_rows,
        "witnesses": witnesses,
        "passed": passed,
    }


def injectivity_check(n: int) -> dict:
    """Per-bidegree rank of multiplication by D out of the quotient.

    The images of the basis classes are read modulo D wedge the previous
    ideal slice; below the middle antidiagonal the map is injective, on and
    above it the kernel absorbs exactly the dimension drop.
    """
    d = diagonal_element(n)
    rows = []
    all_ok = True
    for i in range(n):
        for j in range(n):
            dim = dimension(n, i, j)
            if dim == 0:
                continue
            if i == n - 1 or j == n - 1:
                img = [wedge(d, partition_vector(pi)) for pi in phi_bidegree(n, i, j)]
                ok = all(v.is_zero() for v in img)
                rows.append(
                    {
                        "i": i,
                        "j": j,
                        "dim": dim,
                        "rank": 0,
                        "kernel": dim,
                        "interior": False,
                        "ok": ok,
                    }
                )
                all_ok &= ok
                continue
            mod_cols = [
                wedge(d, col) for col in ideal_slice(n, i, j) if not wedge(d, col).is_zero()
            ]
            image_cols = [wedge(d, partition_vector(pi)) for pi in phi_bidegree(n, i, j)]
            rank_mod = column_rank(mod_cols, n)
            rank_joint = column_rank(mod_cols + image_cols, n)
            rank_map = rank_joint - rank_mod
            kernel = dim - rank_map
            interior = i + j < n - 1
            # interior: injective; on or above the top antidiagonal the image
            # falls inside the shifted ideal, so the map vanishes entirely
            ok = kernel == 0 if interior else rank_map == 0
            rows.append(
                {
                    "i": i,
                    "j": j,
                    "dim": dim,
                    "rank": rank_map,
                    "kernel": kernel,
                    "dim_drop": dim - dimension(n, i + 1, j + 1),
                    "interior": interior,
                    "ok": ok,
                }
            )
            all_ok &= ok
    return {"n": n, "bidegrees": rows, "passed": bool(all_ok)}
