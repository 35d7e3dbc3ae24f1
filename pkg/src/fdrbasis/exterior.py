"""Exact exterior-algebra kernel over two families of anticommuting generators.

The ring for parameter ``n`` is generated by t_1..t_{n-1} and x_1..x_{n-1}
(two anticommuting families).  Monomials are written with all t factors first,
indices ascending, then all x factors ascending; every stored sign is relative
to that order.  Coefficients are exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator, Mapping, NamedTuple

THETA = "t"
XI = "x"

# Bitmask width cap for generator index sets; desk scale stays far below this.
MAX_AMBIENT = 16


class AmbientMismatchError(ValueError):
    """Two multivectors over different ambient parameters were combined."""


def _mask_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated generator index {i}")
        mask |= bit
    return mask


def _indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def merge_sign(left_mask: int, right_mask: int) -> int:
    """Sign of sorting the concatenation of two ascending runs into one.

    Counts pairs (a, b) with a in left, b in right, a > b.
    """
    sign = 1
    b = right_mask
    i = 0
    while b:
        if b & 1 and (left_mask >> (i + 1)).bit_count() & 1:
            sign = -sign
        b >>= 1
        i += 1
    return sign


class Monomial(NamedTuple):
    """Generator product encoded as two bitmasks (bit i-1 <-> index i)."""

    theta: int
    xi: int

    @classmethod
    def from_sets(cls, theta_set: Iterable[int] = (), xi_set: Iterable[int] = ()) -> "Monomial":
        return cls(_mask_from_indices(theta_set), _mask_from_indices(xi_set))

    def theta_indices(self) -> tuple[int, ...]:
        return _indices_from_mask(self.theta)

    def xi_indices(self) -> tuple[int, ...]:
        return _indices_from_mask(self.xi)

    def bidegree(self) -> tuple[int, int]:
        return (self.theta.bit_count(), self.xi.bit_count())

    def degree(self) -> int:
        return self.theta.bit_count() + self.xi.bit_count()

    def lex_key(self, n: int) -> int:
        """Integer key for the term order t_1 > x_1 > t_2 > x_2 > ...

        Larger key means lexicographically larger monomial (its earliest
        generator occurs earlier in the variable order).
        """
        key = 0
        for i in range(1, n):
            key <<= 2
            if self.theta >> (i - 1) & 1:
                key |= 2
            if self.xi >> (i - 1) & 1:
                key |= 1
        return key

    def text(self) -> str:
        parts = [f"t{i}" for i in self.theta_indices()]
        parts += [f"x{i}" for i in self.xi_indices()]
        return " ".join(parts)


def wedge_monomials(m1: Monomial, m2: Monomial) -> tuple[Monomial, int] | None:
    """Product of two monomials in canonical order, or None if it vanishes."""
    if m1.theta & m2.theta or m1.xi & m2.xi:
        return None
    sign = merge_sign(m1.theta, m2.theta) * merge_sign(m1.xi, m2.xi)
    # moving the second theta run past the first xi run
    if m2.theta.bit_count() & m1.xi.bit_count() & 1:
        sign = -sign
    return Monomial(m1.theta | m2.theta, m1.xi | m2.xi), sign


class Multivector:
    """Finite rational combination of monomials over a fixed ambient n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, Fraction] | None = None):
        if not 2 <= n <= MAX_AMBIENT:
            raise ValueError(f"ambient parameter must be in [2, {MAX_AMBIENT}], got {n}")
        self.n = n
        clean: dict[Monomial, Fraction] = {}
        if terms:
            limit = (1 << (n - 1)) - 1
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c == 0:
                    continue
                if mono.theta & ~limit or mono.xi & ~limit:
                    raise ValueError(f"monomial {mono} exceeds ambient {n}")
                clean[mono] = c
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> "Multivector":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Multivector":
        return cls(n, {Monomial(0, 0): Fraction(1)})

    @classmethod
    def generator(cls, n: int, family: str, i: int) -> "Multivector":
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for ambient {n}")
        if family == THETA:
            return cls(n, {Monomial(1 << (i - 1), 0): Fraction(1)})
        if family == XI:
            return cls(n, {Monomial(0, 1 << (i - 1)): Fraction(1)})
        raise ValueError(f"unknown generator family {family!r}")

    @classmethod
    def from_monomial(cls, n: int, mono: Monomial, coeff=1) -> "Multivector":
        return cls(n, {mono: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multivector)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, Fraction(0)) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        out = Multivector(self.n)
        out.terms = terms
        return out

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return self.scale(-1)

    def scale(self, c) -> "Multivector":
        c = Fraction(c)
        out = Multivector(self.n)
        if c:
            out.terms = {m: v * c for m, v in self.terms.items()}
        return out

    def _check(self, other: "Multivector") -> None:
        if self.n != other.n:
            raise AmbientMismatchError(f"ambient mismatch: {self.n} vs {other.n}")

    def homogeneous_parts(self) -> dict[tuple[int, int], "Multivector"]:
        parts: dict[tuple[int, int], dict[Monomial, Fraction]] = {}
        for mono, c in self.terms.items():
            parts.setdefault(mono.bidegree(), {})[mono] = c
        out = {}
        for bideg, terms in parts.items():
            mv = Multivector(self.n)
            mv.terms = terms
            out[bideg] = mv
        return out

    def leading_monomial(self) -> Monomial | None:
        if not self.terms:
            return None
        return max(self.terms, key=lambda m: m.lex_key(self.n))

    def __repr__(self) -> str:
        return f"Multivector(n={self.n}, {format_multivector(self)!r})"


def wedge(f: Multivector, g: Multivector) -> Multivector:
    """Exterior product, bilinear over the monomial products."""
    f._check(g)
    terms: dict[Monomial, Fraction] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            prod = wedge_monomials(m1, m2)
            if prod is None:
                continue
            mono, sign = prod
            s = terms.get(mono, Fraction(0)) + sign * c1 * c2
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
    out = Multivector(f.n)
    out.terms = terms
    return out


def wedge_all(factors: Iterable[Multivector]) -> Multivector:
    result = None
    for f in factors:
        result = f if result is None else wedge(result, f)
    if result is None:
        raise ValueError("empty product needs an explicit ambient; use Multivector.one")
    return result


def contract(i: int, family: str, f: Multivector) -> Multivector:
    """Delete one generator from each monomial, with the position sign.

    A generator at position j of the written monomial is removed with sign
    (-1)^(j-1); monomials not containing it are killed.  This signed deletion
    is adjoint to left multiplication by the generator.
    """
    if not 1 <= i <= f.n - 1:
        raise ValueError(f"index {i} out of range for ambient {f.n}")
    bit = 1 << (i - 1)
    terms: dict[Monomial, Fraction] = {}
    for mono, c in f.terms.items():
        if family == THETA:
            if not mono.theta & bit:
                continue
            before = (mono.theta & (bit - 1)).bit_count()
            new = Monomial(mono.theta ^ bit, mono.xi)
        elif family == XI:
            if not mono.xi & bit:
                continue
            before = mono.theta.bit_count() + (mono.xi & (bit - 1)).bit_count()
            new = Monomial(mono.theta, mono.xi ^ bit)
        else:
            raise ValueError(f"unknown generator family {family!r}")
        coeff = -c if before & 1 else c
        s = terms.get(new, Fraction(0)) + coeff
        if s:
            terms[new] = s
        else:
            terms.pop(new, None)
    out = Multivector(f.n)
    out.terms = terms
    return out


def inner_product(f: Multivector, g: Multivector) -> Fraction:
    """Bilinear form that makes the monomial basis orthonormal."""
    f._check(g)
    small, large = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    total = Fraction(0)
    for mono, c in small.items():
        other = large.get(mono)
        if other is not None:
            total += c * other
    return total


class Permutation:
    """Permutation of [m] stored as its one-line word (images of 1..m)."""

    __slots__ = ("word",)

    def __init__(self, word: Iterable[int]):
        w = tuple(word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation word: {w}")
        self.word = w

    @property
    def m(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(i) = self(other(i))."""
        if self.m != other.m:
            raise ValueError("size mismatch")
        return Permutation(self.word[other.word[i] - 1] for i in range(self.m))

    def inverse(self) -> "Permutation":
        inv = [0] * self.m
        for i, img in enumerate(self.word, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def sign(self) -> int:
        inv = sum(
            1
            for a in range(self.m)
            for b in range(a + 1, self.m)
            if self.word[a] > self.word[b]
        )
        return -1 if inv & 1 else 1

    def is_identity(self) -> bool:
        return all(self.word[i] == i + 1 for i in range(self.m))

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(1, m + 1))

    @classmethod
    def transposition(cls, m: int, i: int, j: int) -> "Permutation":
        w = list(range(1, m + 1))
        w[i - 1], w[j - 1] = j, i
        return cls(w)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], m: int) -> "Permutation":
        w = list(range(1, m + 1))
        for cycle in cycles:
            c = list(cycle)
            for a, b in zip(c, c[1:] + c[:1]):
                if not 1 <= a <= m:
                    raise ValueError(f"cycle entry {a} out of range for [{m}]")
                w[a - 1] = b
        return cls(w)

    @classmethod
    def parse(cls, text: str, m: int) -> "Permutation":
        """Parse either a one-line word like '2 1 3' or cycles like '(3 5 7 6)'."""
        text = text.strip()
        if not text:
            return cls.identity(m)
        if "(" in text:
            cycles = []
            for chunk in text.replace(")", ")\n").split("\n"):
                chunk = chunk.strip()
                if not chunk:
                    continue
                if not (chunk.startswith("(") and chunk.endswith(")")):
                    raise ValueError(f"malformed cycle notation: {text!r}")
                body = chunk[1:-1].replace(",", " ").split()
                if body:
                    cycles.append([int(v) for v in body])
            return cls.from_cycles(cycles, m)
        word = [int(v) for v in text.replace(",", " ").split()]
        if len(word) != m:
            raise ValueError(f"one-line word {word} has length {len(word)}, expected {m}")
        return cls(word)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __repr__(self) -> str:
        return f"Permutation({list(self.word)})"


def _sort_sign(values: tuple[int, ...]) -> int:
    inv = sum(
        1
        for a in range(len(values))
        for b in range(a + 1, len(values))
        if values[a] > values[b]
    )
    return -1 if inv & 1 else 1


def apply_perm(sigma: Permutation, f: Multivector) -> Multivector:
    """Relabel generator indices through sigma and re-sort to canonical order."""
    if sigma.m != f.n - 1:
        raise AmbientMismatchError(
            f"permutation of [{sigma.m}] cannot act on ambient {f.n}"
        )
    terms: dict[Monomial, Fraction] = {}
    for mono, c in f.terms.items():
        t_imgs = tuple(sigma(i) for i in mono.theta_indices())
        x_imgs = tuple(sigma(i) for i in mono.xi_indices())
        sign = _sort_sign(t_imgs) * _sort_sign(x_imgs)
        new = Monomial(_mask_from_indices(t_imgs), _mask_from_indices(x_imgs))
        s = terms.get(new, Fraction(0)) + sign * c
        if s:
            terms[new] = s
        else:
            terms.pop(new, None)
    out = Multivector(f.n)
    out.terms = terms
    return out


def young_subgroup(composition: Iterable[int]) -> Iterator[Permutation]:
    """All permutations of the Young subgroup on consecutive index blocks."""
    comp = [c for c in composition if c != 0]
    if any(c < 0 for c in comp):
        raise ValueError(f"composition parts must be positive: {comp}")
    m = sum(comp)
    blocks = []
    start = 1
    for c in comp:
        blocks.append(list(range(start, start + c)))
        start += c
    from itertools import product as iproduct

    for choice in iproduct(*(permutations(b) for b in blocks)):
        word = [0] * m
        for block, images in zip(blocks, choice):
            for pos, img in zip(block, images):
                word[pos - 1] = img
        yield Permutation(word)


def symmetrize(composition: Iterable[int], signed: bool, f: Multivector) -> Multivector:
    """Sum (or signed sum) of the Young-subgroup orbit of f."""
    comp = list(composition)
    if sum(comp) != f.n - 1:
        raise ValueError(
            f"composition {comp} must sum to {f.n - 1} for ambient {f.n}"
        )
    total = Multivector.zero(f.n)
    for w in young_subgroup(comp):
        img = apply_perm(w, f)
        if signed and w.sign() < 0:
            img = -img
        total = total + img
    return total


def substitute_from_2n(g: Multivector) -> Multivector:
    """Project a multivector on 2n generators into the 2(n-1)-generator model.

    The input lives in the ring with parameter n+1 (generator indices 1..n,
    with the x family read as the unprimed one); the image substitutes
    t_n -> -(t_1+...+t_{n-1}), x_i -> x_i - (1/n) * sum(x), x_n -> -(1/n) * sum(x)
    and lands in the ring with parameter n.
    """
    n = g.n - 1
    if n < 2:
        raise ValueError("substitution needs ambient at least 3")
    xsum = Multivector(n, {Monomial(0, 1 << (i - 1)): Fraction(1) for i in range(1, n)})
    theta_img = {i: Multivector.generator(n, THETA, i) for i in range(1, n)}
    theta_img[n] = Multivector(
        n, {Monomial(1 << (i - 1), 0): Fraction(-1) for i in range(1, n)}
    )
    xi_img = {
        i: Multivector.generator(n, XI, i) + xsum.scale(Fraction(-1, n))
        for i in range(1, n)
    }
    xi_img[n] = xsum.scale(Fraction(-1, n))

    total = Multivector.zero(n)
    for mono, c in g.terms.items():
        factors = [theta_img[i] for i in mono.theta_indices()]
        factors += [xi_img[i] for i in mono.xi_indices()]
        if factors:
            image = wedge_all(factors).scale(c)
        else:
            image = Multivector.one(n).scale(c)
        total = total + image
    return total


def format_multivector(f: Multivector) -> str:
    """Render as a signed sum of terms like '+2 t1 t3 x2' with exact coefficients."""
    if not f.terms:
        return "0"
    keyed = sorted(f.terms.items(), key=lambda kv: (kv[0].theta_indices(), kv[0].xi_indices()))
    chunks = []
    for mono, c in keyed:
        sign = "+" if c > 0 else "-"
        mag = abs(c)
        coeff = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        body = mono.text()
        chunks.append(f"{sign}{coeff} {body}".rstrip())
    return " ".join(chunks)


def parse_multivector(text: str, n: int) -> Multivector:
    """Inverse of format_multivector."""
    text = text.strip()
    if text in ("", "0"):
        return Multivector.zero(n)
    terms: dict[Monomial, Fraction] = {}
    coeff: Fraction | None = None
    theta: list[int] = []
    xi: list[int] = []

    def flush():
        nonlocal coeff, theta, xi
        if coeff is None:
            return
        mono = Monomial.from_sets(theta, xi)
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
        coeff, theta, xi = None, [], []

    for token in text.split():
        head = token[0]
        if head in "+-" or head.isdigit():
            flush()
            coeff = Fraction(token)
        elif head == THETA:
            theta.append(int(token[1:]))
        elif head == XI:
            xi.append(int(token[1:]))
        else:
            raise ValueError(f"unrecognised token {token!r}")
    flush()
    return Multivector(n, terms)
