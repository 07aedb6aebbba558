"""Confusability graph, exact maximum code sizes, and clique partitions.

The confusability graph on {0,1}^n joins two distinct words iff they are
t-confusable.  The largest t-grain-correcting code is exactly a maximum
independent set of this graph.  Clique partitions of the graph yield the
cardinality upper bounds evaluated in grainlab.bounds.

Internals work on raw word values (ints); the public types carry Words.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

from .config import get_caps
from .errors import CapExceeded, PreconditionError
from .model import Word, _apply_mask, _support_masks, grain_images


def _images_int(xv: int, masks: tuple[int, ...]) -> set[int]:
    return {_apply_mask(xv, m) for m in masks}


@dataclass
class ConfusabilityGraph:
    """Graph on {0,1}^n with edges between t-confusable words.

    Stored implicitly: per-vertex image sets plus the inverted preimage
    index.  Two vertices are adjacent iff they share an image, so
    adjacency is the union of the preimage lists of a vertex's images.
    (An explicit 2^n x 2^n structure would be hopeless at the cap.)
    """

    n: int
    t: int
    _images: list[set[int]] = field(repr=False)
    _preimages: dict[int, list[int]] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return 1 << self.n

    def neighbors(self, x: Word) -> frozenset[Word]:
        out: set[int] = set()
        for y in self._images[x.value]:
            out.update(self._preimages[y])
        out.discard(x.value)
        return frozenset(Word(self.n, v) for v in out)

    def degree(self, x: Word) -> int:
        return len(self.neighbors(x))

    def edge(self, x1: Word, x2: Word) -> bool:
        if x1.n != self.n or x2.n != self.n:
            raise PreconditionError("word length does not match graph")
        if x1 == x2:
            return False
        return bool(self._images[x1.value] & self._images[x2.value])

    def edges(self):
        """All edges as sorted Word pairs (deterministic order)."""
        for xv in range(self.vertex_count):
            seen: set[int] = set()
            for y in self._images[xv]:
                seen.update(self._preimages[y])
            for other in sorted(seen):
                if other > xv:
                    yield (Word(self.n, xv), Word(self.n, other))


def build_graph(n: int, t: int) -> ConfusabilityGraph:
    caps = get_caps()
    if n > caps.graph_n:
        raise CapExceeded(f"n={n} exceeds graph_n={caps.graph_n}")
    if n < 1 or t < 0:
        raise PreconditionError("need n >= 1 and t >= 0")
    masks = _support_masks(n, min(t, n // 2))
    images = [_images_int(xv, masks) for xv in range(1 << n)]
    preimages: dict[int, list[int]] = {}
    for xv, img in enumerate(images):
        for y in img:
            preimages.setdefault(y, []).append(xv)
    return ConfusabilityGraph(n, t, images, preimages)


# ---------------------------------------------------------------------------
# exact maximum code size (maximum independent set)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MaxCodeResult:
    n: int
    t: int
    size: int
    words: tuple[Word, ...]
    exact: bool  # False when the search hit its time limit


def _half_adjacency(n: int, t: int) -> list[int]:
    """Adjacency bitmasks of the subgraph on words with first bit 0.

    The first bit survives every grain pattern, so there are no edges
    between the two half-spaces, and complementing every bit is an
    isomorphism between the halves.  Solving one half therefore solves
    the whole graph.
    """
    masks = _support_masks(n, min(t, n // 2))
    half = 1 << (n - 1) if n > 1 else 1
    images = [_images_int(xv, masks) for xv in range(half)]
    pre: dict[int, list[int]] = {}
    for xv, img in enumerate(images):
        for y in img:
            pre.setdefault(y, []).append(xv)
    adj = [0] * half
    for xv, img in enumerate(images):
        m = 0
        for y in img:
            for other in pre[y]:
                m |= 1 << other
        adj[xv] = m & ~(1 << xv)
    return adj


def _greedy_independent(adj: list[int]) -> tuple[int, int]:
    """Initial solution: sweep vertices by ascending degree."""
    used = 0
    mask = 0
    count = 0
    for v in sorted(range(len(adj)), key=lambda v: adj[v].bit_count()):
        if not (used >> v) & 1:
            mask |= 1 << v
            count += 1
            used |= adj[v] | (1 << v)
    return count, mask

def _max_independent_set(
    adj: list[int], seed_count: int, seed_mask: int, deadline: float | None
) -> tuple[int, int, bool]:
    """Branch and bound via maximum clique in the complement graph,
    with a greedy-colouring bound (colour classes of the complement are
    cliques of the original graph, so #colours bounds the set size).
    Deterministic: vertices are ranked once by complement degree."""
    nv = len(adj)
    full = (1 << nv) - 1
    cadj = [(~adj[v]) & full & ~(1 << v) for v in range(nv)]
    order = sorted(range(nv), key=lambda v: -cadj[v].bit_count())
    best = [seed_count, seed_mask]
    timed_out = [False]

    def expand(size: int, chosen: int, candidates: int) -> None:
        if timed_out[0]:
            return
        if deadline is not None and time.monotonic() > deadline:
            timed_out[0] = True
            return
        # greedy colouring of the candidate set
        ranked: list[tuple[int, int]] = []
        classes: list[int] = []
        for v in order:
            if not (candidates >> v) & 1:
                continue
            for ci, cmask in enumerate(classes):
                if not (cadj[v] & cmask):
                    classes[ci] = cmask | (1 << v)
                    ranked.append((v, ci + 1))
                    break
            else:
                classes.append(1 << v)
                ranked.append((v, len(classes)))
        ranked.sort(key=lambda vc: vc[1])
        for v, colour in reversed(ranked):
            if size + colour <= best[0]:
                return
            if size + 1 > best[0]:
                best[0] = size + 1
                best[1] = chosen | (1 << v)
            rest = candidates & cadj[v]
            if rest:
                expand(size + 1, chosen | (1 << v), rest)
                if timed_out[0]:
                    return
            candidates &= ~(1 << v)

    expand(0, 0, full)
    return best[0], best[1], not timed_out[0]


def max_code_size(n: int, t: int, time_limit: float | None = None) -> MaxCodeResult:
    """Exact largest size of a length-n code correcting t grain errors,
    with a witness code attaining it.

    The search runs on the first-bit-0 half only: the halves are
    disconnected (the first bit survives every pattern) and complement
    equivariance makes them isomorphic, so the optimum is twice the
    half optimum and the witness mirrors by complementation.  With a
    time limit (seconds) the search may stop early; the result is then
    flagged exact=False and is only a lower bound.
    """
    caps = get_caps()
    cap = caps.exact_m_n if t < 2 else caps.exact_m_n_multi
    if n > cap:
        raise CapExceeded(f"n={n} exceeds exact-search cap {cap} (t={t})")
    if n < 1 or t < 0:
        raise PreconditionError("need n >= 1 and t >= 0")
    if time_limit is None and caps.exact_m_time_limit > 0:
        time_limit = caps.exact_m_time_limit
    if t == 0 or n == 1:
        words = tuple(Word(n, v) for v in range(1 << n))
        return MaxCodeResult(n, t, 1 << n, words, True)

    adj = _half_adjacency(n, t)
    seed_count, seed_mask = _greedy_independent(adj)
    deadline = time.monotonic() + time_limit if time_limit else None
    half_size, half_mask, exact = _max_independent_set(
        adj, seed_count, seed_mask, deadline
    )
    top = 1 << (n - 1)
    words: list[Word] = []
    for v in range(len(adj)):
        if (half_mask >> v) & 1:
            words.append(Word(n, v))
            words.append(Word(n, (v ^ (top - 1)) | top))  # complement word
    return MaxCodeResult(n, t, 2 * half_size, tuple(sorted(words)), exact)


# ---------------------------------------------------------------------------
# greedy clique partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CliquePartition:
    """Ordered partition of {0,1}^m into cliques of the confusability
    graph, each part generated as the surviving preimage set of its
    witness word."""

    m: int
    s: int
    parts: tuple[tuple[Word, ...], ...]
    witnesses: tuple[Word, ...]

    @property
    def size(self) -> int:
        return len(self.parts)

    def render(self) -> str:
        lines = []
        for k, (y, part) in enumerate(zip(self.witnesses, self.parts), start=1):
            members = " ".join(str(x) for x in part)
            lines.append(f"{k}: {y} : {members}")
        return "\n".join(lines)


def greedy_clique_partition(m: int, s: int) -> CliquePartition:
    """Cover {0,1}^m by preimage sets, largest-first.

    Repeatedly pick the word y whose surviving preimage set B(y) is
    largest (ties: numerically smallest y, which is the lexicographically
    smallest word), take that set as the next part, and delete its
    members from every other B.  Every part is a clique because all its
    members share the image y.  The part count upper-bounds the minimum
    clique-partition size.
    """
    caps = get_caps()
    if m > caps.partition_m:
        raise CapExceeded(f"m={m} exceeds partition_m={caps.partition_m}")
    if s > caps.partition_s:
        raise CapExceeded(f"s={s} exceeds partition_s={caps.partition_s}")
    if m < 1 or s < 0:
        raise PreconditionError("need m >= 1 and s >= 0")

    masks = _support_masks(m, min(s, m // 2))
    total = 1 << m
    images: list[list[int]] = [[] for _ in range(total)]
    buckets: list[set[int]] = [set() for _ in range(total)]
    for xv in range(total):
        img = _images_int(xv, masks)
        images[xv] = list(img)
        for y in img:
            buckets[y].add(xv)

    covered = 0
    parts: list[tuple[Word, ...]] = []
    witnesses: list[Word] = []
    while covered < total:
        best_y = -1
        best_size = 0
        for y in range(total):
            size = len(buckets[y])
            if size > best_size:
                best_size = size
                best_y = y
        part = sorted(buckets[best_y])
        covered += len(part)
        for xv in part:
            for y in images[xv]:
                buckets[y].discard(xv)
        parts.append(tuple(Word(m, xv) for xv in part))
        witnesses.append(Word(m, best_y))
    return CliquePartition(m, s, tuple(parts), tuple(witnesses))


def verify_clique_partition(partition: CliquePartition) -> bool:
    """Certificate check: disjointness, coverage of {0,1}^m, and the
    clique property of every part.

    A part whose members all contain the recorded witness (or any
    common word) in their image sets is certified at once; otherwise
    every pair gets the full confusability test (image-set overlap).
    """
    m, s = partition.m, partition.s
    seen: set[int] = set()
    for part in partition.parts:
        for x in part:
            if x.n != m or x.value in seen:
                return False
            seen.add(x.value)
    if len(seen) != (1 << m):
        return False

    witnesses = partition.witnesses or (None,) * len(partition.parts)
    for part, witness in zip(partition.parts, witnesses):
        if len(part) <= 1:
            continue
        image_sets = [grain_images(x, s) for x in part]
        if witness is not None and all(witness in im for im in image_sets):
            continue
        common = frozenset.intersection(*image_sets)
        if common:
            continue
        for i in range(len(part)):
            for j in range(i + 1, len(part)):
                if not (image_sets[i] & image_sets[j]):
                    return False
    return True


@lru_cache(maxsize=None)
def _partition_size(m: int, s: int) -> int:
    return greedy_clique_partition(m, s).size


def partition_size_table(
    m_values: tuple[int, ...] | range, s_values: tuple[int, ...] | range
) -> list[tuple[int, int, int]]:
    """Greedy partition sizes for every requested (m, s) with m >= 2s.

    Rows are (m, s, parts); the admissibility condition m >= 2s mirrors
    the shape of the published search table.
    """
    rows = []
    for s in s_values:
        for m in m_values:
            if s >= 1 and m >= 2 * s:
                rows.append((m, s, _partition_size(m, s)))
    return rows
