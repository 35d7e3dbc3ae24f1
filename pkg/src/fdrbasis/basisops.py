"""Block operators, the partition-indexed vectors, and skein straightening.

Each block of a labeled partition acts on the exterior algebra; composing the
block operators on the top t-monomial yields the vector attached to the
partition.  Two rewrite identities on the operators let us expand the image
of any permuted vector over the noncrossing partitions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .exterior import (
    THETA,
    XI,
    Monomial,
    Multivector,
    Permutation,
    apply_perm,
    contract,
    wedge,
)
from .partitions import LabeledPartition, canonical_word

DEFAULT_MAX_REWRITES = 10**6


class RewriteLimitError(RuntimeError):
    """Straightening exceeded its rewrite budget without reaching a fixpoint."""


# -- block operators ----------------------------------------------------------


def apply_n_block(members: Iterable[int], f: Multivector) -> Multivector:
    """Contract away the t generators of the distinguished block, ascending.

    The smallest index is contracted first; this is the signed contraction by
    the ascending product of the block's t generators.
    """
    for i in sorted(members):
        f = contract(i, THETA, f)
    return f


def apply_pair(i: int, j: int, f: Multivector) -> Multivector:
    left = wedge(Multivector.generator(f.n, XI, i), contract(j, THETA, f))
    right = wedge(Multivector.generator(f.n, XI, j), contract(i, THETA, f))
    return left + right


def apply_singleton(i: int, label: str, f: Multivector) -> Multivector:
    if label == THETA:
        return f
    return wedge(Multivector.generator(f.n, XI, i), contract(i, THETA, f))


def block_operator(block: tuple, f: Multivector) -> Multivector:
    """Apply one tagged block (as produced by LabeledPartition.blocks)."""
    kind, data = block
    if kind == "n":
        return apply_n_block((v for v in data if v != f.n), f)
    if kind == "pair":
        return apply_pair(data[0], data[1], f)
    if kind == "single":
        return apply_singleton(data[0], data[1], f)
    raise ValueError(f"unknown block kind {kind!r}")


def top_monomial(n: int) -> Multivector:
    return Multivector.from_monomial(n, Monomial((1 << (n - 1)) - 1, 0))


def partition_vector(pi: LabeledPartition) -> Multivector:
    """Vector attached to a partition via block operators.

    The operator of the block containing n acts first on the top t-monomial;
    the pair and singleton operators follow (their order is immaterial, they
    commute).
    """
    f = apply_n_block((v for v in pi.n_block if v != pi.n), top_monomial(pi.n))
    for a, b in pi.pairs:
        f = apply_pair(a, b, f)
    for i, label in pi.singletons:
        f = apply_singleton(i, label, f)
    return f


def partition_vector_product(pi: LabeledPartition) -> Multivector:
    """Same vector built as an explicit product.

    Multiply the binomials t_i x_i - t_j x_j over the pairs (by increasing
    minimum), then the singleton generators in increasing order, and fix the
    global sign: the inversion count of the canonical word, together with the
    sign produced by contracting the n-block out of the top monomial (the
    latter is forced by the signed deletion convention).
    """
    n = pi.n
    _, word_sign = canonical_word(pi)
    members = [v for v in pi.n_block if v != n]
    shift = sum(members) - len(members) * (len(members) + 1) // 2
    sign = word_sign * (-1 if shift & 1 else 1)
    f = Multivector.one(n).scale(sign)
    for a, b in pi.pairs:
        binom = wedge(
            Multivector.generator(n, THETA, a), Multivector.generator(n, XI, a)
        ) - wedge(Multivector.generator(n, THETA, b), Multivector.generator(n, XI, b))
        f = wedge(f, binom)
    for i, label in pi.singletons:
        f = wedge(f, Multivector.generator(n, label, i))
    return f


# -- operator identity defects (zero when the identities hold) ----------------


def skein_defect(n: int, a: int, b: int, c: int, d: int, f: Multivector) -> Multivector:
    """tau_{ab} tau_{cd} + tau_{ac} tau_{bd} + tau_{ad} tau_{bc} applied to f."""
    if len({a, b, c, d}) != 4:
        raise ValueError("indices must be distinct")
    total = Multivector.zero(n)
    for (p, q), (r, s) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
        total = total + apply_pair(p, q, apply_pair(r, s, f))
    return total


def n_block_defect(
    n: int, pair: tuple[int, int], n_members: Iterable[int], f: Multivector
) -> Multivector:
    """The pair-against-n-block relation applied to f; zero iff it holds.

    With m elements of the big block strictly between the pair, the chain of
    replacement terms enters with the uniform sign (-1)^(m+1); the twist for
    even m is forced by the signed deletion convention.
    """
    a1, a2 = sorted(pair)
    members = sorted(n_members)
    between = [v for v in members if a1 < v < a2]
    if not between:
        raise ValueError("the blocks do not cross")
    twist = -1 if len(between) % 2 == 0 else 1
    total = apply_pair(a1, a2, apply_n_block(members, f))
    for new_pair, removed in _n_block_replacements(a1, a2, between):
        new_members = sorted((set(members) - set(removed)) | ({a1, a2} - set(new_pair)))
        term = apply_pair(new_pair[0], new_pair[1], apply_n_block(new_members, f))
        total = total + term.scale(twist)
    return total


def _n_block_replacements(
    a1: int, a2: int, between: list[int]
) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
    """Replacement (pair, removed-from-n-block) terms along the chain a1..a2."""
    chain = [a1] + between + [a2]
    out = []
    for u, v in zip(chain, chain[1:]):
        removed = tuple(w for w in (u, v) if w in between)
        out.append(((u, v), removed))
    return out


# -- rewriting on partition combinations ---------------------------------------

PartitionCombination = dict[LabeledPartition, Fraction]


def combination_is_zero(comb: Mapping[LabeledPartition, Fraction]) -> bool:
    return not comb


def serialize_combination(comb: Mapping[LabeledPartition, Fraction]) -> str:
    lines = []
    for pi in sorted(comb, key=lambda p: p.serialize()):
        c = comb[pi]
        coeff = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        lines.append(f"{coeff}\t{pi.serialize()}")
    return "\n".join(lines)


def parse_combination(text: str, n: int) -> PartitionCombination:
    comb: PartitionCombination = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        coeff, part = line.split("\t")
        pi = LabeledPartition.parse(part, n)
        comb[pi] = comb.get(pi, Fraction(0)) + Fraction(coeff)
    return {pi: c for pi, c in comb.items() if c}


def combination_vector(comb: Mapping[LabeledPartition, Fraction], n: int) -> Multivector:
    total = Multivector.zero(n)
    for pi, c in comb.items():
        total = total + partition_vector(pi).scale(c)
    return total


def _pair_pair_crossings(pi: LabeledPartition) -> list[tuple[int, tuple]]:
    out = []
    pairs = pi.pairs
    for idx1 in range(len(pairs)):
        for idx2 in range(idx1 + 1, len(pairs)):
            p, q = pairs[idx1], pairs[idx2]
            a, c = p
            b, d = q
            if a < b < c < d or b < a < d < c:
                out.append((min(a, b), ("pp", p, q)))
    return out


def _pair_n_block_crossings(pi: LabeledPartition) -> list[tuple[int, tuple]]:
    out = []
    inner = [v for v in pi.n_block if v != pi.n]
    for p in pi.pairs:
        a1, a2 = p
        if any(a1 < v < a2 for v in inner):
            out.append((a1, ("pn", p)))
    return out


def resolve_pair_crossing(
    pi: LabeledPartition, p: tuple[int, int], q: tuple[int, int]
) -> list[tuple[int, LabeledPartition]]:
    """Rewrite step for two crossing pairs: signed replacement partitions.

    The partition with pairs {a,c}, {b,d} (a<b<c<d) is replaced by minus the
    sum of the uncrossed splittings {a,b},{c,d} and {a,d},{b,c}.
    """
    p, q = tuple(sorted(p)), tuple(sorted(q))
    if p not in pi.pairs or q not in pi.pairs:
        raise ValueError(f"{p} and {q} must be pairs of the partition")
    a, b, c, d = sorted(p + q)
    if (a, c) != p and (a, c) != q:
        raise ValueError(f"pairs {p} and {q} do not cross")
    others = [r for r in pi.pairs if r not in (p, q)]
    return [
        (-1, LabeledPartition.make(pi.n, pi.n_block, others + [(a, b), (c, d)], pi.singletons)),
        (-1, LabeledPartition.make(pi.n, pi.n_block, others + [(a, d), (b, c)], pi.singletons)),
    ]


def resolve_n_block_crossing(
    pi: LabeledPartition, p: tuple[int, int]
) -> list[tuple[int, LabeledPartition]]:
    """Rewrite step for a pair crossing the block of n.

    The signed chain replacements carry the uniform multiplier (-1)^m, the
    parity of the number m of blocking elements (the displayed minus-the-sum
    form is the odd-m case).
    """
    p = tuple(sorted(p))
    if p not in pi.pairs:
        raise ValueError(f"{p} must be a pair of the partition")
    a1, a2 = p
    members = [v for v in pi.n_block if v != pi.n]
    between = [v for v in members if a1 < v < a2]
    if not between:
        raise ValueError(f"pair {p} does not cross the block of n")
    others = [r for r in pi.pairs if r != p]
    mult = 1 if len(between) % 2 == 0 else -1
    out = []
    for new_pair, removed in _n_block_replacements(a1, a2, between):
        new_members = sorted((set(members) - set(removed)) | ({a1, a2} - set(new_pair)))
        out.append(
            (
                mult,
                LabeledPartition.make(
                    pi.n, new_members + [pi.n], others + [new_pair], pi.singletons
                ),
            )
        )
    return out


def _first_crossing(pi: LabeledPartition) -> tuple | None:
    crossings = _pair_pair_crossings(pi) + _pair_n_block_crossings(pi)
    if not crossings:
        return None
    # smallest participating element first; pair-pair resolutions win ties
    crossings.sort(key=lambda kc: (kc[0], kc[1][0] != "pp", kc[1][1:]))
    return crossings[0][1]


def straighten(
    sigma: Permutation,
    pi: LabeledPartition,
    max_rewrites: int = DEFAULT_MAX_REWRITES,
) -> PartitionCombination:
    """Expand the permuted vector over noncrossing partitions.

    Returns coefficients c with sum(c[rho] * vector(rho)) equal to the action
    of sigma on vector(pi), every rho noncrossing.  Crossings are resolved to
    a fixpoint, smallest partition first, and within a partition the crossing
    with the smallest participating element, pair-pair before
    pair-against-n-block.
    """
    if not pi.is_noncrossing():
        raise ValueError("straightening starts from a noncrossing partition")
    start = pi.apply_perm(sigma)
    comb: PartitionCombination = {start: Fraction(action_sign(sigma, pi))}
    first_crossing: dict[LabeledPartition, tuple | None] = {
        start: _first_crossing(start)
    }
    keys: dict[LabeledPartition, str] = {start: start.serialize()}
    pending = {start} if first_crossing[start] else set()
    rewrites = 0
    while pending:
        rho = min(pending, key=keys.__getitem__)
        pending.discard(rho)
        if rho not in comb:
            continue
        crossing = first_crossing[rho]
        rewrites += 1
        if rewrites > max_rewrites:
            raise RewriteLimitError(f"straightening exceeded {max_rewrites} rewrites")
        coeff = comb.pop(rho)
        if crossing[0] == "pp":
            replacements = resolve_pair_crossing(rho, crossing[1], crossing[2])
        else:
            replacements = resolve_n_block_crossing(rho, crossing[1])
        for mult, new in replacements:
            s = comb.get(new, Fraction(0)) + mult * coeff
            if s:
                comb[new] = s
            else:
                comb.pop(new, None)
            if new not in keys:
                keys[new] = new.serialize()
                first_crossing[new] = _first_crossing(new)
            if new in comb and first_crossing[new]:
                pending.add(new)
            else:
                pending.discard(new)
    return comb


def block_sort_sign(sigma: Permutation, pi: LabeledPartition) -> int:
    """Sign of re-sorting the relabeled members of the block containing n.

    The contraction composite attached to that block is ordered ascending, so
    relabeling picks up the parity of the induced rearrangement.  Blocks with
    at most one member besides n always give +1.
    """
    members = [v for v in pi.n_block if v != pi.n]
    images = [sigma(v) for v in members]
    inv = sum(
        1
        for a in range(len(images))
        for b in range(a + 1, len(images))
        if images[a] > images[b]
    )
    return -1 if inv & 1 else 1


def action_sign(sigma: Permutation, pi: LabeledPartition) -> int:
    """The exact sign relating the permuted vector to the relabeled partition.

    sigma . vector(pi) = action_sign(sigma, pi) * vector(sigma . pi).  The
    classical statement uses sign(sigma) alone; the extra block-sorting
    factor is forced whenever the block of n has two or more other members
    (a nonzero scalar vector cannot change sign under a relabeling that
    fixes its partition).
    """
    return sigma.sign() * block_sort_sign(sigma, pi)


def equivariance_defect(sigma: Permutation, pi: LabeledPartition) -> Multivector:
    """sigma . vector(pi) minus its combinatorial image; zero when equivariant."""
    lhs = apply_perm(sigma, partition_vector(pi))
    rhs = partition_vector(pi.apply_perm(sigma)).scale(action_sign(sigma, pi))
    return lhs - rhs
