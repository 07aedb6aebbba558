"""Combinatorial model of a 1-D granular medium with grains of length <= 2.

A word is written left to right into n bit cells.  A grain spanning
cells (j, j+1) takes the polarity of the first bit written into it, so
the recorded value at cell j+1 becomes a copy of the value at cell j.
Grains of length 1 never corrupt anything, and length-2 grains cannot
overlap, so the entire effect of a medium is captured by the set of
second cells of its length-2 grains: an *error vector* with no 1 in
position 1 and no two adjacent 1s.

Everything here is pure and deterministic.  Words pack their bits into
a Python int (leftmost bit = most significant) so the grain operator is
a couple of mask operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .config import WORD_LEN_MAX, get_caps
from .errors import CapExceeded, PreconditionError

# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Word:
    """A binary word of length n; position 1 is the leftmost bit."""

    n: int
    value: int

    def __post_init__(self):
        if not 1 <= self.n <= WORD_LEN_MAX:
            raise PreconditionError(f"word length {self.n} outside 1..{WORD_LEN_MAX}")
        if not 0 <= self.value < (1 << self.n):
            raise PreconditionError(f"value {self.value} does not fit in {self.n} bits")

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        if not text or any(c not in "01" for c in text):
            raise PreconditionError(f"not a 0/1 string: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Word":
        bits = list(bits)
        value = 0
        for b in bits:
            value = (value << 1) | (b & 1)
        return cls(len(bits), value)

    def bit(self, i: int) -> int:
        """Bit at 1-indexed position i (1 = leftmost)."""
        if not 1 <= i <= self.n:
            raise PreconditionError(f"position {i} outside 1..{self.n}")
        return (self.value >> (self.n - i)) & 1

    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.n - i)) & 1 for i in range(1, self.n + 1))

    def render(self) -> str:
        return format(self.value, f"0{self.n}b")

    def complement(self) -> "Word":
        return Word(self.n, self.value ^ ((1 << self.n) - 1))

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True, order=True)
class ErrorVector:
    """Support = second cells of the length-2 grains of some medium.

    Invariants: support is a sorted tuple within 2..n, position 1 is
    never in the support, and no two support indices are adjacent.
    """

    n: int
    support: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("length must be positive")
        prev = -2
        for j in self.support:
            if not 2 <= j <= self.n:
                raise PreconditionError(f"support index {j} outside 2..{self.n}")
            if j <= prev:
                raise PreconditionError("support must be strictly increasing")
            if j == prev + 1:
                raise PreconditionError(f"adjacent support indices {prev},{j}")
            prev = j

    @property
    def weight(self) -> int:
        return len(self.support)

    @property
    def mask(self) -> int:
        """Bit mask in Word packing (bit for position j sits at n-j)."""
        m = 0
        for j in self.support:
            m |= 1 << (self.n - j)
        return m

    @classmethod
    def parse(cls, text: str) -> "ErrorVector":
        """Parse the 'n:j1,j2,...' serialization."""
        head, sep, tail = text.strip().partition(":")
        if not sep:
            raise PreconditionError(f"missing ':' in error vector {text!r}")
        try:
            n = int(head)
            support = tuple(int(t) for t in tail.split(",") if t.strip())
        except ValueError as exc:
            raise PreconditionError(f"malformed error vector {text!r}") from exc
        return cls(n, support)

    def render(self) -> str:
        return f"{self.n}:" + ",".join(str(j) for j in self.support)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class GrainPattern:
    """Start cells of the length-2 grains of a medium with n cells."""

    n: int
    starts: tuple[int, ...]

    def __post_init__(self):
        prev = -2
        for j in self.starts:
            if not 1 <= j <= self.n - 1:
                raise PreconditionError(f"grain start {j} outside 1..{self.n - 1}")
            if j <= prev:
                raise PreconditionError("starts must be strictly increasing")
            if j == prev + 1:
                raise PreconditionError(f"overlapping grains at {prev},{j}")
            prev = j

    def to_error_vector(self) -> ErrorVector:
        return ErrorVector(self.n, tuple(j + 1 for j in self.starts))

    @classmethod
    def from_error_vector(cls, e: ErrorVector) -> "GrainPattern":
        return cls(e.n, tuple(j - 1 for j in e.support))


# ---------------------------------------------------------------------------
# the grain operator
# ---------------------------------------------------------------------------


def _apply_mask(value: int, mask: int) -> int:
    # position j copies position j-1, which sits one bit higher
    return (value & ~mask) | ((value >> 1) & mask)


def apply_grains(x: Word, e: ErrorVector) -> Word:
    """Record x on a medium whose length-2 grains are described by e.

    Every position in e's support is overwritten by its left neighbour;
    all other positions are untouched.  Applying the same pattern twice
    is idempotent, and position 1 is never altered.
    """
    if e.n != x.n:
        raise PreconditionError(f"length mismatch: word {x.n}, error vector {e.n}")
    return Word(x.n, _apply_mask(x.value, e.mask))


# ---------------------------------------------------------------------------
# enumeration of error vectors
# ---------------------------------------------------------------------------


def count_error_vectors(n: int, t: int) -> int:
    """Number of error vectors of length n and weight <= t, exactly.

    Placing i non-adjacent 1s in positions 2..n can be done in C(n-i, i)
    ways, so the count is sum_{i=0..t} C(n-i, i).  Terms with n-i < i
    vanish, which clamps t past floor((n-1)/2) automatically.
    """
    if n < 1 or t < 0:
        raise PreconditionError("need n >= 1 and t >= 0")
    return sum(math.comb(n - i, i) for i in range(0, t + 1) if n - i >= i)


def _iter_supports(n: int, t: int) -> Iterator[tuple[int, ...]]:
    """All valid supports in lexicographic order of the support tuple."""
    stack: list[int] = []

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        yield tuple(stack)
        if len(stack) == t:
            return
        for j in range(start, n + 1):
            stack.append(j)
            yield from rec(j + 2)
            stack.pop()

    yield from rec(2)


@lru_cache(maxsize=256)
def _support_masks(n: int, t: int) -> tuple[int, ...]:
    """Masks (Word packing) of all error vectors, enumeration order."""
    return tuple(
        sum(1 << (n - j) for j in supp) for supp in _iter_supports(n, t)
    )


def enumerate_error_vectors(n: int, t: int) -> list[ErrorVector]:
    """All error vectors of length n, weight <= t, support-lex order.

    t is clamped to floor(n/2), past which no new vectors exist (the
    densest support is {2, 4, ...}).
    """
    caps = get_caps()
    if n > caps.error_enum_n:
        raise CapExceeded(f"n={n} exceeds error_enum_n={caps.error_enum_n}")
    if n < 1 or t < 0:
        raise PreconditionError("need n >= 1 and t >= 0")
    t = min(t, n // 2)
    return [ErrorVector(n, supp) for supp in _iter_supports(n, t)]


# ---------------------------------------------------------------------------
# images, runs, confusability
# ---------------------------------------------------------------------------


def _check_image_cap(n: int) -> None:
    caps = get_caps()
    if n > caps.error_enum_n:
        raise CapExceeded(f"n={n} exceeds error_enum_n={caps.error_enum_n}")


def grain_image_list(x: Word, t: int) -> list[Word]:
    """Images of x under all grain patterns with <= t length-2 grains,
    de-duplicated, in first-occurrence (enumeration) order."""
    _check_image_cap(x.n)
    if t < 0:
        raise PreconditionError("t must be >= 0")
    t = min(t, x.n // 2)
    seen: set[int] = set()
    out: list[Word] = []
    v = x.value
    for mask in _support_masks(x.n, t):
        y = _apply_mask(v, mask)
        if y not in seen:
            seen.add(y)
            out.append(Word(x.n, y))
    return out


def grain_images(x: Word, t: int) -> frozenset[Word]:
    """The set of words reachable from x with at most t grain errors."""
    return frozenset(grain_image_list(x, t))


def run_count(x: Word) -> int:
    """Number of maximal runs of identical symbols in x."""
    if x.n == 1:
        return 1
    d = (x.value ^ (x.value >> 1)) & ((1 << (x.n - 1)) - 1)
    return d.bit_count() + 1


def derivative(x: Word) -> Word:
    """Successive-XOR word: bit i of the result is x_i xor x_{i+1}.

    Every length-(n-1) word has exactly two preimages (a word and its
    complement), and run_count(x) = weight(derivative(x)) + 1.
    """
    if x.n < 2:
        raise PreconditionError("derivative needs n >= 2")
    return Word(x.n - 1, (x.value ^ (x.value >> 1)) & ((1 << (x.n - 1)) - 1))


def confusable(x1: Word, x2: Word, t: int) -> bool:
    """True iff some medium with <= t length-2 grains per side records
    x1 and x2 identically (their image sets intersect)."""
    if x1.n != x2.n:
        raise PreconditionError(f"length mismatch: {x1.n} vs {x2.n}")
    if x1 == x2:
        return True
    # position 1 survives every grain pattern, so differing first bits
    # can never collide
    if x1.bit(1) != x2.bit(1):
        return False
    return bool(grain_images(x1, t) & grain_images(x2, t))


def image_count_lower_bound(r: int, t: int) -> int:
    """Worst-case lower bound on the image-set size of a word with r runs.

    1 + sum_{i=1..t} (1/i!) prod_{j=0..i-1} (r - 1 - 3j), each term
    counting placements of i grains across distinct run boundaries; a
    term whose product hits a non-positive factor contributes 0 (the
    count is only meaningful while boundaries remain).  The exact
    rational value is rounded up: the image count is an integer, so the
    ceiling is still a valid lower bound.
    """
    if r < 1 or t < 0:
        raise PreconditionError("need r >= 1 and t >= 0")
    total = Fraction(1)
    for i in range(1, t + 1):
        prod = 1
        for j in range(i):
            factor = r - 1 - 3 * j
            if factor <= 0:
                prod = 0
                break
            prod *= factor
        if prod:
            total += Fraction(prod, math.factorial(i))
    return math.ceil(total)


def grain_preimages(m: int, s: int) -> dict[Word, frozenset[Word]]:
    """For every y in {0,1}^m, the set of words x whose image set
    (budget s) contains y.  The union of these sets is all of {0,1}^m,
    since every word is its own image under the empty pattern."""
    caps = get_caps()
    if m > caps.preimage_m:
        raise CapExceeded(f"m={m} exceeds preimage_m={caps.preimage_m}")
    if m < 1 or s < 0:
        raise PreconditionError("need m >= 1 and s >= 0")
    masks = _support_masks(m, min(s, m // 2))
    pre: dict[int, set[int]] = {}
    for xv in range(1 << m):
        for mask in masks:
            pre.setdefault(_apply_mask(xv, mask), set()).add(xv)
    return {
        Word(m, y): frozenset(Word(m, x) for x in xs) for y, xs in pre.items()
    }
