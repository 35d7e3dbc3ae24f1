"""Labeled set partitions whose blocks away from n have size at most two.

A partition of [n] in this family has one distinguished block containing n,
some disjoint pairs inside [n-1], and labeled singletons (label t or x).
The noncrossing ones index the combinatorial basis; statistics, the symmetric
group action, and the lattice-path / two-row-tableau bijections live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator

from .exterior import THETA, XI, Permutation

LABELS = (THETA, XI)

STEP_UP = "U"
STEP_DOWN = "D"
STEP_LEVEL_THETA = "HT"
STEP_LEVEL_XI = "HX"


def inversions(word: Iterable[int]) -> int:
    w = list(word)
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


@dataclass(frozen=True)
class LabeledPartition:
    n: int
    n_block: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    singletons: tuple[tuple[int, str], ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("partition parameter must be at least 2")
        if self.n not in self.n_block:
            raise ValueError(f"distinguished block {self.n_block} must contain {self.n}")
        if self.n_block != tuple(sorted(self.n_block)):
            raise ValueError("n-block must be sorted")
        seen = set(self.n_block)
        if len(seen) != len(self.n_block):
            raise ValueError("repeated element in n-block")
        for a, b in self.pairs:
            if not (1 <= a < b <= self.n - 1):
                raise ValueError(f"bad pair ({a}, {b})")
            if a in seen or b in seen:
                raise ValueError(f"element reused by pair ({a}, {b})")
            seen.update((a, b))
        if self.pairs != tuple(sorted(self.pairs)):
            raise ValueError("pairs must be sorted by minimum")
        for i, label in self.singletons:
            if label not in LABELS:
                raise ValueError(f"unknown singleton label {label!r}")
            if i in seen:
                raise ValueError(f"element {i} reused by singleton")
            seen.add(i)
        if self.singletons != tuple(sorted(self.singletons)):
            raise ValueError("singletons must be sorted")
        if seen != set(range(1, self.n + 1)):
            raise ValueError("blocks do not partition [n]")

    @classmethod
    def make(
        cls,
        n: int,
        n_block: Iterable[int],
        pairs: Iterable[Iterable[int]] = (),
        singletons: Iterable[tuple[int, str]] = (),
    ) -> "LabeledPartition":
        norm_pairs = tuple(sorted(tuple(sorted(p)) for p in pairs))
        return cls(n, tuple(sorted(n_block)), norm_pairs, tuple(sorted(singletons)))

    # -- statistics ---------------------------------------------------------

    @property
    def n_block_size(self) -> int:
        return len(self.n_block)

    @property
    def num_pairs(self) -> int:
        return len(self.pairs)

    @property
    def num_theta(self) -> int:
        return sum(1 for _, lab in self.singletons if lab == THETA)

    @property
    def num_xi(self) -> int:
        return sum(1 for _, lab in self.singletons if lab == XI)

    def bidegree(self) -> tuple[int, int]:
        return (self.num_pairs + self.num_theta, self.num_pairs + self.num_xi)

    def blocks(self) -> Iterator[tuple]:
        """Blocks as tagged tuples: ('n', members), ('pair', (a, b)), ('single', (i, label))."""
        yield ("n", self.n_block)
        for p in self.pairs:
            yield ("pair", p)
        for s in self.singletons:
            yield ("single", s)

    # -- crossing test ------------------------------------------------------

    def is_noncrossing(self) -> bool:
        """No a < b < c < d with a,c and b,d co-blocked in two distinct blocks."""
        blocks = [self.n_block] + [p for p in self.pairs]
        for b1, b2 in combinations(blocks, 2):
            if _blocks_cross(b1, b2):
                return False
        return True

    # -- serialization ------------------------------------------------------

    def serialize(self) -> str:
        chunks = []
        # every block tuple is sorted, so data[0] is the block minimum
        for kind, data in sorted(self.blocks(), key=lambda b: b[1][0]):
            if kind == "single":
                i, label = data
                chunks.append(f"{i}:{label}")
            else:
                chunks.append(",".join(str(v) for v in data))
        return "/".join(chunks)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "LabeledPartition":
        """Parse the block grammar, e.g. '1:t/2,5/3,4/6,8/7:x' (n = max element)."""
        raw_blocks = []
        for chunk in text.strip().split("/"):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError(f"empty block in {text!r}")
            label = None
            if ":" in chunk:
                chunk, suffix = chunk.rsplit(":", 1)
                label = suffix.strip()
                if label not in LABELS:
                    raise ValueError(f"unknown label {label!r} in {text!r}")
            members = tuple(sorted(int(v) for v in chunk.replace(",", " ").split()))
            raw_blocks.append((members, label))
        elements = [v for members, _ in raw_blocks for v in members]
        if not elements:
            raise ValueError(f"no blocks in {text!r}")
        top = max(elements)
        if n is None:
            n = top
        elif top > n:
            raise ValueError(f"element {top} exceeds n={n}")
        n_block = None
        pairs = []
        singletons = []
        for members, label in raw_blocks:
            if n in members:
                if label is not None:
                    raise ValueError("the block containing n takes no label")
                if n_block is not None:
                    raise ValueError("two blocks contain n")
                n_block = members
            elif len(members) == 2:
                if label is not None:
                    raise ValueError("pair blocks take no label")
                pairs.append(members)
            elif len(members) == 1:
                if label is None:
                    raise ValueError(f"singleton {members[0]} needs a :t or :x label")
                singletons.append((members[0], label))
            else:
                raise ValueError(f"block {members} away from n must have size <= 2")
        if n_block is None:
            raise ValueError(f"no block contains n={n}")
        return cls.make(n, n_block, pairs, singletons)

    def __str__(self) -> str:
        return self.serialize()

    # -- symmetric group action --------------------------------------------

    def apply_perm(self, sigma: Permutation) -> "LabeledPartition":
        """Relabel the elements of [n-1]; n stays fixed, labels travel."""
        if sigma.m != self.n - 1:
            raise ValueError(f"permutation of [{sigma.m}] cannot act on [{self.n}]")
        n_block = [self.n] + [sigma(v) for v in self.n_block if v != self.n]
        pairs = [(sigma(a), sigma(b)) for a, b in self.pairs]
        singles = [(sigma(i), lab) for i, lab in self.singletons]
        return LabeledPartition.make(self.n, n_block, pairs, singles)


def _blocks_cross(b1: tuple[int, ...], b2: tuple[int, ...]) -> bool:
    for a, c in combinations(b1, 2):
        for b in b2:
            if a < b < c:
                if any(d < a or d > c for d in b2):
                    return True
                break
    for a, c in combinations(b2, 2):
        for b in b1:
            if a < b < c:
                if any(d < a or d > c for d in b1):
                    return True
                break
    return False


def is_noncrossing(pi: LabeledPartition) -> bool:
    return pi.is_noncrossing()


def apply_perm_partition(sigma: Permutation, pi: LabeledPartition) -> LabeledPartition:
    return pi.apply_perm(sigma)


def canonical_word(pi: LabeledPartition) -> tuple[tuple[int, ...], int]:
    """Word listing pairs (increasing inside, by increasing minimum) then singles.

    Returns the word together with (-1)^inversions.
    """
    word = []
    for a, b in pi.pairs:
        word.extend((a, b))
    word.extend(i for i, _ in pi.singletons)
    sign = -1 if inversions(word) & 1 else 1
    return tuple(word), sign


# -- enumeration -------------------------------------------------------------


def _matchings(elements: tuple[int, ...]) -> Iterator[tuple[tuple[tuple[int, int], ...], tuple[int, ...]]]:
    """All (pair set, leftover singles) splittings of a sorted element tuple."""
    if not elements:
        yield (), ()
        return
    head, rest = elements[0], elements[1:]
    for pairs, singles in _matchings(rest):
        yield pairs, (head,) + singles
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1 :]
        for pairs, singles in _matchings(remaining):
            yield ((head, partner),) + pairs, singles


def enumerate_partitions(
    n: int,
    k: int | None = None,
    t: int | None = None,
    x: int | None = None,
    noncrossing_only: bool = True,
) -> list[LabeledPartition]:
    """Every partition matching the filters, sorted by canonical serialization.

    k filters on the size of the block containing n; t and x filter on the
    number of t-labeled and x-labeled singletons.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    ground = tuple(range(1, n))
    out = []
    for extra_size in range(0, n):
        if k is not None and extra_size != k - 1:
            continue
        for extra in combinations(ground, extra_size):
            rest = tuple(v for v in ground if v not in extra)
            for pairs, singles in _matchings(rest):
                ns = len(singles)
                if t is not None and x is not None and t + x != ns:
                    continue
                if t is not None:
                    if t > ns:
                        continue
                    theta_sets = combinations(singles, t)
                elif x is not None:
                    if x > ns:
                        continue
                    theta_sets = combinations(singles, ns - x)
                else:
                    theta_sets = None
                if theta_sets is None:
                    candidates = (
                        tuple(zip(singles, labs))
                        for labs in product(LABELS, repeat=ns)
                    )
                else:
                    candidates = (
                        tuple((i, THETA if i in chosen else XI) for i in singles)
                        for chosen in theta_sets
                    )
                for labeled in candidates:
                    pi = LabeledPartition.make(n, extra + (n,), pairs, labeled)
                    if noncrossing_only and not pi.is_noncrossing():
                        continue
                    out.append(pi)
    out.sort(key=lambda p: p.serialize())
    return out


@lru_cache(maxsize=None)
def phi(n: int) -> tuple[LabeledPartition, ...]:
    """The noncrossing class for parameter n, cached."""
    return tuple(enumerate_partitions(n, noncrossing_only=True))


@lru_cache(maxsize=None)
def psi(n: int) -> tuple[LabeledPartition, ...]:
    """The full labeled class for parameter n (crossings allowed), cached."""
    return tuple(enumerate_partitions(n, noncrossing_only=False))


def phi_bidegree(n: int, i: int, j: int) -> tuple[LabeledPartition, ...]:
    return tuple(p for p in phi(n) if p.bidegree() == (i, j))


def phi_class(n: int, pairs: int, theta: int, xi: int) -> tuple[LabeledPartition, ...]:
    """Noncrossing partitions with the given pair/singleton statistics."""
    return tuple(
        p
        for p in phi(n)
        if p.num_pairs == pairs and p.num_theta == theta and p.num_xi == xi
    )


def random_partition(n: int, rng, noncrossing: bool = False) -> LabeledPartition:
    pool = phi(n) if noncrossing else psi(n)
    return pool[rng.randrange(len(pool))]


# -- lattice-path bijection ---------------------------------------------------


@dataclass(frozen=True)
class MotzkinPath:
    """Length-n step sequence over U/D/HT/HX staying strictly above the axis.

    The first step is always U; step positions 1..n-1 start at the second step.
    """

    steps: tuple[str, ...]

    def __post_init__(self):
        if not self.steps or self.steps[0] != STEP_UP:
            raise ValueError("path must start with an up step")
        height = 0
        for s in self.steps:
            if s == STEP_UP:
                height += 1
            elif s == STEP_DOWN:
                height -= 1
            elif s not in (STEP_LEVEL_THETA, STEP_LEVEL_XI):
                raise ValueError(f"unknown step {s!r}")
            if height < 1:
                raise ValueError("path touches the axis after the start")

    @property
    def n(self) -> int:
        return len(self.steps)


def to_motzkin(pi: LabeledPartition) -> MotzkinPath:
    """Encode a noncrossing partition as a lattice path.

    Pairs become matched U-D steps, labeled singletons become level steps with
    the same label, and the block of n supplies the unmatched U steps (its
    witness is the unlabeled first step).
    """
    if not pi.is_noncrossing():
        raise ValueError("path encoding is defined on noncrossing partitions only")
    opens = {a for a, _ in pi.pairs}
    closes = {b for _, b in pi.pairs}
    singles = dict(pi.singletons)
    steps = [STEP_UP]
    for e in range(1, pi.n):
        if e in singles:
            steps.append(STEP_LEVEL_THETA if singles[e] == THETA else STEP_LEVEL_XI)
        elif e in opens:
            steps.append(STEP_UP)
        elif e in closes:
            steps.append(STEP_DOWN)
        else:
            steps.append(STEP_UP)
    return MotzkinPath(tuple(steps))


def from_motzkin(path: MotzkinPath) -> LabeledPartition:
    """Decode a path back to the partition; inverse of to_motzkin."""
    n = path.n
    stack: list[int] = []
    pairs = []
    singles = []
    for pos, step in enumerate(path.steps):
        if step == STEP_UP:
            stack.append(pos)
        elif step == STEP_DOWN:
            opener = stack.pop()
            if opener == 0:
                raise ValueError("the initial step can never be matched")
            pairs.append((opener, pos))
        elif step == STEP_LEVEL_THETA:
            singles.append((pos, THETA))
        else:
            singles.append((pos, XI))
    n_block = [n] + [pos for pos in stack if pos != 0]
    return LabeledPartition.make(n, n_block, pairs, singles)


def all_paths(n: int) -> list[MotzkinPath]:
    """Brute-force enumeration of valid paths of length n."""
    out = []
    for steps in product((STEP_UP, STEP_DOWN, STEP_LEVEL_THETA, STEP_LEVEL_XI), repeat=n):
        if steps[0] != STEP_UP:
            continue
        height = 0
        ok = True
        for s in steps:
            height += 1 if s == STEP_UP else -1 if s == STEP_DOWN else 0
            if height < 1:
                ok = False
                break
        if ok:
            out.append(MotzkinPath(steps))
    return out


# -- two-row tableau bijection ------------------------------------------------


@dataclass(frozen=True)
class TwoRowTableau:
    """Standard Young tableau with at most two rows, entries exactly 1..a+b."""

    row1: tuple[int, ...]
    row2: tuple[int, ...]

    def __post_init__(self):
        a, b = len(self.row1), len(self.row2)
        if a < b:
            raise ValueError("first row must be at least as long as the second")
        entries = sorted(self.row1 + self.row2)
        if entries != list(range(1, a + b + 1)):
            raise ValueError("entries must be exactly 1..a+b")
        for row in (self.row1, self.row2):
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError("rows must increase left to right")
        for i in range(b):
            if self.row1[i] >= self.row2[i]:
                raise ValueError("columns must increase top to bottom")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row1), len(self.row2))


def pairs_to_tableau(pi: LabeledPartition) -> TwoRowTableau:
    """Send a singleton-free noncrossing partition to a two-row tableau.

    The second row records the larger element of each pair.
    """
    if pi.singletons:
        raise ValueError("the tableau bijection needs a singleton-free partition")
    if not pi.is_noncrossing():
        raise ValueError("the tableau bijection needs a noncrossing partition")
    larger = sorted(b for _, b in pi.pairs)
    smaller = sorted(v for v in range(1, pi.n) if v not in set(larger))
    return TwoRowTableau(tuple(smaller), tuple(larger))


def tableau_to_pairs(tableau: TwoRowTableau, n: int) -> LabeledPartition:
    """Inverse of pairs_to_tableau: rebuild pairs greedily from the second row.

    Each second-row entry is paired with the largest smaller element not yet
    paired; everything left over joins the block of n.
    """
    if sum(tableau.shape) != n - 1:
        raise ValueError(f"tableau of shape {tableau.shape} does not fit n={n}")
    paired: set[int] = set()
    pairs = []
    for b in tableau.row2:
        partner = next(
            (v for v in range(b - 1, 0, -1) if v not in paired and v not in tableau.row2),
            None,
        )
        if partner is None:
            raise ValueError("tableau violates the ballot condition")
        pairs.append((partner, b))
        paired.update((partner, b))
    n_block = [n] + [v for v in range(1, n) if v not in paired and v not in set(tableau.row2)]
    return LabeledPartition.make(n, n_block, pairs, ())


def satisfies_ballot(subset: Iterable[int], n: int) -> bool:
    """|S intersect [m]| <= m/2 for every prefix [m] of [n-1]."""
    s = set(subset)
    count = 0
    for m in range(1, n):
        if m in s:
            count += 1
        if 2 * count > m:
            return False
    return True
