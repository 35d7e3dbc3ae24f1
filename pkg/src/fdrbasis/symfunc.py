"""Schur-basis symmetric function arithmetic for the module structure.

Expansions are integer combinations of Schur functions of one fixed weight.
Products are built with Pieri rules (complete homogeneous and elementary
factors only), which covers every product this package needs.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping

from . import basisops, exterior
from .partitions import LabeledPartition, phi_class

IntPartition = tuple[int, ...]


def partitions_of(m: int, max_part: int | None = None) -> Iterator[IntPartition]:
    if m == 0:
        yield ()
        return
    cap = m if max_part is None else min(m, max_part)
    for first in range(cap, 0, -1):
        for rest in partitions_of(m - first, first):
            yield (first,) + rest


def is_partition(lam: Iterable[int]) -> bool:
    lam = tuple(lam)
    return all(v > 0 for v in lam) and all(a >= b for a, b in zip(lam, lam[1:]))


def normalize_shape(lam: Iterable[int]) -> IntPartition:
    """Strip trailing zeros and validate weak decrease."""
    lam = tuple(lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


def conjugate(lam: IntPartition) -> IntPartition:
    if not lam:
        return ()
    return tuple(sum(1 for v in lam if v > i) for i in range(lam[0]))


def dominates(lam: IntPartition, mu: IntPartition) -> bool:
    """lam >= mu in dominance order (same weight assumed)."""
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def hook_lengths(lam: IntPartition) -> list[int]:
    conj = conjugate(lam)
    return [
        lam[r] - c + conj[c] - r - 1
        for r in range(len(lam))
        for c in range(lam[r])
    ]


def hook_dim(lam: IntPartition) -> int:
    """Number of standard tableaux of the shape, by the hook length formula."""
    lam = normalize_shape(lam)
    total = sum(lam)
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(total) // prod


class SchurExpansion:
    """Integer combination of Schur functions, all of one weight."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[IntPartition, int] | None = None):
        clean: dict[IntPartition, int] = {}
        weight = None
        for lam, c in (terms or {}).items():
            lam = tuple(lam)
            if not is_partition(lam):
                raise ValueError(f"not a partition: {lam}")
            if c == 0:
                continue
            w = sum(lam)
            if weight is None:
                weight = w
            elif w != weight:
                raise ValueError("mixed weights in one expansion")
            clean[lam] = c
        self.terms = clean

    @classmethod
    def single(cls, lam: Iterable[int], coeff: int = 1) -> "SchurExpansion":
        return cls({tuple(lam): coeff})

    @classmethod
    def empty_weight(cls) -> "SchurExpansion":
        return cls({(): 1})

    def weight(self) -> int | None:
        for lam in self.terms:
            return sum(lam)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, SchurExpansion) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            s = terms.get(lam, 0) + c
            if s:
                terms[lam] = s
            else:
                terms.pop(lam, None)
        out = SchurExpansion()
        out.terms = terms
        return out

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + other.scale(-1)

    def scale(self, c: int) -> "SchurExpansion":
        out = SchurExpansion()
        if c:
            out.terms = {lam: v * c for lam, v in self.terms.items()}
        return out

    def dimension(self) -> int:
        return sum(c * hook_dim(lam) for lam, c in self.terms.items())

    def text(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for lam in sorted(self.terms, reverse=True):
            c = self.terms[lam]
            sign = "+" if c > 0 else "-"
            body = ",".join(str(v) for v in lam)
            chunks.append(f"{sign}{abs(c)} s[{body}]")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"SchurExpansion({self.text()!r})"


def _horizontal_strips(lam: IntPartition, r: int) -> list[IntPartition]:
    """All partitions obtained by adding a horizontal r-strip."""
    k = len(lam)
    results: list[IntPartition] = []
    acc: list[int] = []

    def rec(i: int, budget: int):
        if i == k + 1:
            if budget == 0:
                results.append(tuple(v for v in acc if v))
            return
        lo = lam[i] if i < k else 0
        hi = lo + budget if i == 0 else min(lam[i - 1], lo + budget)
        for v in range(lo, hi + 1):
            acc.append(v)
            rec(i + 1, budget - (v - lo))
            acc.pop()

    rec(0, r)
    return results


def _vertical_strips(lam: IntPartition, r: int) -> list[IntPartition]:
    return [conjugate(m) for m in _horizontal_strips(conjugate(lam), r)]


def pieri_h(expansion: SchurExpansion, r: int) -> SchurExpansion:
    """Multiply by the complete homogeneous function of degree r."""
    if r < 0:
        raise ValueError("Pieri degree must be nonnegative")
    terms: dict[IntPartition, int] = {}
    for lam, c in expansion.terms.items():
        for mu in _horizontal_strips(lam, r):
            terms[mu] = terms.get(mu, 0) + c
    return SchurExpansion(terms)


def pieri_e(expansion: SchurExpansion, r: int) -> SchurExpansion:
    """Multiply by the elementary symmetric function of degree r."""
    if r < 0:
        raise ValueError("Pieri degree must be nonnegative")
    terms: dict[IntPartition, int] = {}
    for lam, c in expansion.terms.items():
        for mu in _vertical_strips(lam, r):
            terms[mu] = terms.get(mu, 0) + c
    return SchurExpansion(terms)


@lru_cache(maxsize=None)
def h_expansion(m: int) -> SchurExpansion:
    return pieri_h(SchurExpansion.empty_weight(), m)


def two_row_schur(a: int, b: int) -> SchurExpansion:
    """s_(a,b) through the two-row determinantal identity h_a h_b - h_(a+1) h_(b-1)."""
    if a < b or b < 0:
        raise ValueError(f"invalid two-row shape ({a}, {b})")
    plus = pieri_h(h_expansion(a), b)
    if b == 0:
        return plus
    return plus - pieri_h(h_expansion(a + 1), b - 1)


def frobenius_class(n: int, k: int, x: int, y: int) -> SchurExpansion:
    """Schur expansion of the submodule with k pairs, x t-labels, y x-labels."""
    if min(k, x, y) < 0 or n - x - y - k - 1 < k:
        raise ValueError(f"parameters (n={n}, k={k}, x={x}, y={y}) out of range")
    exp = two_row_schur(n - x - y - k - 1, k)
    exp = pieri_e(exp, x)
    exp = pieri_e(exp, y)
    return exp


def frobenius_bigraded(n: int) -> dict[tuple[int, int], SchurExpansion]:
    """Bidegree-indexed Schur expansions of the quotient, summed over classes."""
    out: dict[tuple[int, int], SchurExpansion] = {}
    for i in range(n):
        for j in range(n):
            total = SchurExpansion()
            for k in range(0, min(i, j) + 1):
                x, y = i - k, j - k
                if n - x - y - k - 1 >= k:
                    total = total + frobenius_class(n, k, x, y)
            if not total.is_zero():
                out[(i, j)] = total
    return out


def frobenius_product_form(n: int) -> dict[tuple[int, int], SchurExpansion]:
    """The same table from the generating-function product.

    The unsigned table collects h_k h_m e_x e_y with k+x+y+m = n-1 at
    bidegree (k+x, k+y); the final answer subtracts the (i-1, j-1) entry,
    which is the coefficient-of-z truncation of the (1 - qt) prefactor.

    The table is cut at the module's support i+j <= n-1: past the top
    antidiagonal the two-row determinantal substitution runs over
    non-partition shapes whose straightened terms no longer cancel, so the
    raw truncation would carry spurious entries there (the module itself is
    zero in that range).
    """
    unsigned: dict[tuple[int, int], SchurExpansion] = {}
    for k in range(0, n):
        for x in range(0, n - k):
            for y in range(0, n - k - x):
                m = n - 1 - k - x - y
                if m < 0:
                    continue
                exp = pieri_h(h_expansion(k), m)
                exp = pieri_e(exp, x)
                exp = pieri_e(exp, y)
                key = (k + x, k + y)
                unsigned[key] = unsigned.get(key, SchurExpansion()) + exp
    out: dict[tuple[int, int], SchurExpansion] = {}
    for (i, j), exp in unsigned.items():
        if i + j > n - 1:
            continue
        prev = unsigned.get((i - 1, j - 1))
        total = exp - prev if prev is not None else exp
        if not total.is_zero():
            out[(i, j)] = total
    return out


# -- irreducibility detection by symmetrization ---------------------------------


def nested_pair_partition(n: int, k: int) -> LabeledPartition:
    """The singleton-free witness with k pairs nested around n-k-1, n-k."""
    pairs = [(n - 2 * k + j - 1, n - j) for j in range(1, k + 1)]
    n_block = list(range(1, n - 2 * k)) + [n]
    return LabeledPartition.make(n, n_block, pairs, ())


def dominance_kill_check(n: int, k: int) -> dict:
    """Symmetrization detects exactly the two-row shape (n-k-1, k).

    The unsigned Young symmetrizer of the shape keeps the witness vector
    alive, while every strictly dominating two-row shape annihilates the
    whole singleton-free class with k pairs.
    """
    if not 1 <= k <= (n - 1) // 2:
        raise ValueError(f"need 1 <= k <= (n-1)//2, got k={k} for n={n}")
    lam = (n - k - 1, k)
    pi0 = nested_pair_partition(n, k)
    v0 = basisops.partition_vector(pi0)
    image = exterior.symmetrize(lam, False, v0)
    pi0_alive = not image.is_zero()

    annihilated = []
    span = phi_class(n, pairs=k, theta=0, xi=0)
    for m in range(1, k + 1):
        mu = (n - m,) if m == 1 else (n - m, m - 1)
        killed = all(
            exterior.symmetrize(mu, False, basisops.partition_vector(pi)).is_zero()
            for pi in span
        )
        annihilated.append({"mu": list(mu), "ok": killed})

    passed = pi0_alive and all(row["ok"] for row in annihilated)
    return {
        "n": n,
        "k": k,
        "lambda": list(lam),
        "witness": pi0.serialize(),
        "witness_image_nonzero": pi0_alive,
        "dominating_shapes_annihilate": annihilated,
        "passed": passed,
    }


def multinomial(n: int, *parts: int) -> int:
    if sum(parts) > n:
        raise ValueError("parts exceed total")
    rest = n - sum(parts)
    result = factorial(n)
    for p in list(parts) + [rest]:
        result //= factorial(p)
    return result


def class_dimension_formula(n: int, k: int, x: int, y: int) -> int:
    """Induced-module dimension: multinomial times the two-row tableau count."""
    return multinomial(n - 1, x, y) * hook_dim((n - x - y - k - 1, k))
