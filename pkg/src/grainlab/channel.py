"""The grains channel and its no-adjacent-erasures companion.

The medium is modeled as a binary-output channel driven by a hidden
indicator chain u: u_i = 1 means a length-2 grain ends at cell i, in
which case the recorded bit copies the previous input bit.  The chain
is first-order Markov with P(1|0) = p and P(1|1) = 0 (grains cannot
overlap), so indicator 1s are never adjacent.  The channel state is
the pair (u_i, x_i); the stationary indicator law is (1/(1+p), p/(1+p)).

Replacing "copy the previous bit" by an erasure symbol gives the
no-adjacent-erasures (NAE) channel, whose capacity is exactly 1/(1+p).
Filling each erasure with the previous channel output turns the NAE
channel back into the grains channel, so 1/(1+p) is an upper bound on
the grains-channel capacity.  The lower bound is the symmetric
information rate (SIR): the information rate under i.i.d. uniform
inputs, computed here as the difference of two convergent series.

Exact finite-n oracles (output-entropy brackets, mutual information,
conditional error entropy) are provided for validating every series
against brute-force enumeration at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .bounds import binary_entropy
from .config import get_caps
from .errors import CapExceeded, PreconditionError
from .model import Word

ERASURE = "e"

# ---------------------------------------------------------------------------
# channel specification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChannelSpec:
    """Grain probability p, initial-state convention, and series depth.

    initial is either the string "stationary" (indicator drawn from its
    stationary law, previous bit x0 uniform) or an explicit pair
    (u0, x0).  depth is the truncation index J of the SIR series.
    """

    p: float
    initial: str | tuple[int, int] = "stationary"
    depth: int = 64

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise PreconditionError(f"p={self.p} outside [0, 1]")
        if self.depth < 2:
            raise PreconditionError("series depth must be >= 2")
        if self.initial != "stationary":
            u0, x0 = self.initial  # type: ignore[misc]
            if u0 not in (0, 1) or x0 not in (0, 1):
                raise PreconditionError("explicit initial state must be bit pair")

    @property
    def stationary_weights(self) -> tuple[float, float]:
        """(P(u=0), P(u=1)) under the stationary indicator law."""
        return 1.0 / (1.0 + self.p), self.p / (1.0 + self.p)

    def initial_states(self) -> list[tuple[int, int, float]]:
        """(u0, x0, probability) triples of the initial state."""
        if self.initial == "stationary":
            w0, w1 = self.stationary_weights
            out = []
            for u0, w in ((0, w0), (1, w1)):
                if w > 0.0:
                    out.extend([(u0, 0, w / 2.0), (u0, 1, w / 2.0)])
            return out
        u0, x0 = self.initial  # type: ignore[misc]
        return [(u0, x0, 1.0)]


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator keyed by (seed, stream).

    Philox is used so that identical (seed, stream) pairs reproduce the
    same sequence on every platform, and distinct streams are
    statistically independent.
    """
    if seed < 0 or stream < 0:
        raise PreconditionError("seed and stream must be non-negative")
    key = (stream << 64) | (seed & ((1 << 64) - 1))
    return np.random.Generator(np.random.Philox(key=key))


# ---------------------------------------------------------------------------
# simulation
# ---------------------------------------------------------------------------


def _draw_initial(spec: ChannelSpec, rng: np.random.Generator) -> tuple[int, int]:
    if spec.initial == "stationary":
        u0 = 1 if rng.random() < spec.stationary_weights[1] else 0
        x0 = int(rng.integers(2))
        return u0, x0
    return spec.initial  # type: ignore[return-value]


def sample_indicator(
    n: int, spec: ChannelSpec, rng: np.random.Generator
) -> tuple[np.ndarray, int, int]:
    """Draw (u_1..u_n, u0, x0).  After a 1 the next indicator is forced
    to 0; otherwise it is Bernoulli(p)."""
    u0, x0 = _draw_initial(spec, rng)
    uni = rng.random(n)
    u = np.zeros(n, dtype=np.uint8)
    prev = u0
    p = spec.p
    for i in range(n):
        if prev == 0 and uni[i] < p:
            u[i] = 1
            prev = 1
        else:
            prev = 0
    return u, u0, x0


def simulate_grains(x: Word, spec: ChannelSpec, seed: int, stream: int = 0) -> Word:
    """One pass of x through the grains channel: y_i = x_i when
    u_i = 0, otherwise the previous input bit (x0 at i = 1)."""
    rng = make_rng(seed, stream)
    u, _, x0 = sample_indicator(x.n, spec, rng)
    bits = np.array(x.bits(), dtype=np.uint8)
    prev = np.concatenate(([x0], bits[:-1])).astype(np.uint8)
    y = np.where(u == 1, prev, bits)
    return Word.from_bits(int(b) for b in y)


def simulate_erasures(x: Word, spec: ChannelSpec, seed: int, stream: int = 0) -> str:
    """One pass through the NAE channel: positions with u_i = 1 are
    erased.  The output never contains two adjacent erasures."""
    rng = make_rng(seed, stream)
    u, _, _ = sample_indicator(x.n, spec, rng)
    bits = x.render()
    return "".join(ERASURE if u[i] else bits[i] for i in range(x.n))


def cascade_fill(y: str | Sequence[str], y0: int) -> Word:
    """Fill each erasure with the previous raw symbol (y0 before the
    first).  Sound for NAE outputs, where erasures are never adjacent;
    adjacent erasures would leave a non-binary symbol and are rejected.
    """
    if y0 not in (0, 1):
        raise PreconditionError("fill bit y0 must be 0 or 1")
    symbols = list(y)
    out = []
    prev = str(y0)
    for c in symbols:
        if c == ERASURE:
            if prev == ERASURE:
                raise PreconditionError("adjacent erasures cannot be filled")
            out.append(prev)
        elif c in "01":
            out.append(c)
        else:
            raise PreconditionError(f"bad channel symbol {c!r}")
        prev = c
    return Word.parse("".join(out))


def simulation_stats(n: int, p: float, seed: int, stream: int = 0) -> dict:
    """Empirical statistics of one indicator/grains run on a random
    uniform input of length n (used by the CLI and the convergence
    tests)."""
    spec = ChannelSpec(p)
    rng = make_rng(seed, stream)
    xbits = rng.integers(0, 2, size=n, dtype=np.uint8)
    u, u0, x0 = sample_indicator(n, spec, rng)
    prev = np.concatenate(([x0], xbits[:-1])).astype(np.uint8)
    z = (u == 1) & (prev != xbits)
    trans = {"00": 0, "01": 0, "10": 0, "11": 0}
    full = np.concatenate(([u0], u))
    for a, b in zip(full[:-1], full[1:]):
        trans[f"{a}{b}"] += 1
    adjacent_ones = int(((full[:-1] == 1) & (full[1:] == 1)).sum())
    return {
        "n": n,
        "p": p,
        "seed": seed,
        "stream": stream,
        "indicator_rate": float(u.mean()),
        "error_rate": float(z.mean()),
        "transitions": trans,
        "adjacent_indicator_pairs": adjacent_ones,
    }


# ---------------------------------------------------------------------------
# exact output laws (degradation oracle)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=32)
def _valid_indicator_masks(n: int) -> tuple[int, ...]:
    """All u_1..u_n with no two adjacent 1s, packed MSB-first."""
    out: list[int] = []

    def rec(i: int, mask: int, prev: int) -> None:
        if i == n:
            out.append(mask)
            return
        rec(i + 1, mask, 0)
        if prev == 0:
            rec(i + 1, mask | (1 << (n - 1 - i)), 1)

    rec(0, 0, 0)
    return tuple(out)


def _indicator_prob(mask: int, n: int, p: float, u0: int) -> float:
    prob = 1.0
    prev = u0
    for i in range(n):
        b = (mask >> (n - 1 - i)) & 1
        if prev == 1:
            if b == 1:
                return 0.0
        else:
            prob *= p if b else (1.0 - p)
            if prob == 0.0:
                return 0.0
        prev = b
    return prob


@lru_cache(maxsize=128)
def _indicator_law(n: int, p: float, u0: int) -> tuple[tuple[int, float], ...]:
    law = []
    for mask in _valid_indicator_masks(n):
        q = _indicator_prob(mask, n, p, u0)
        if q > 0.0:
            law.append((mask, q))
    return tuple(law)


def grains_output_law(x: Word, spec: ChannelSpec) -> dict[Word, float]:
    """Exact output distribution of the grains channel for input x."""
    n = x.n
    law: dict[int, float] = {}
    for u0, x0, w in spec.initial_states():
        shifted = (x.value >> 1) | (x0 << (n - 1))
        for mask, q in _indicator_law(n, spec.p, u0):
            y = (x.value & ~mask) | (shifted & mask)
            law[y] = law.get(y, 0.0) + w * q
    return {Word(n, y): q for y, q in sorted(law.items())}


def cascaded_erasure_output_law(x: Word, spec: ChannelSpec) -> dict[Word, float]:
    """Exact output distribution of the NAE channel followed by
    erasure filling, with the fill bit matched to the initial state's
    previous bit.  Computed along the literal two-stage route so the
    result can be compared against grains_output_law."""
    n = x.n
    bits = x.render()
    law: dict[Word, float] = {}
    for u0, x0, w in spec.initial_states():
        for mask, q in _indicator_law(n, spec.p, u0):
            ternary = "".join(
                ERASURE if (mask >> (n - 1 - i)) & 1 else bits[i] for i in range(n)
            )
            filled = cascade_fill(ternary, y0=x0)
            law[filled] = law.get(filled, 0.0) + w * q
    return dict(sorted(law.items()))


def total_variation(law1: dict[Word, float], law2: dict[Word, float]) -> float:
    keys = set(law1) | set(law2)
    return 0.5 * sum(abs(law1.get(k, 0.0) - law2.get(k, 0.0)) for k in keys)


# ---------------------------------------------------------------------------
# the SIR series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RunHazards:
    """Hazard probabilities of the output's zero-run renewal process.

    values[j-2] is the probability that the next output is 1 given the
    last j-1 outputs were 0 preceded by a 1.  The recursion is
    b_2 = (1-p)/2, b_j = (1 - (1+p) b_{j-1}) / (2 (1 - b_{j-1})), with
    closed form 2(t-^j - t+^j) / ((3+B+p) t-^j - (3-B+p) t+^j) where
    B = sqrt(p^2 + 6p + 1) and t± = 1 - (1 ∓ B)/p.  The closed form is
    cross-checked against the recursion wherever its (rescaled)
    denominator stays away from 0; the recursion is authoritative.
    """

    p: float
    depth: int
    values: tuple[float, ...]
    closed_form_checked: int
    closed_form_max_dev: float

    def value(self, j: int) -> float:
        if not 2 <= j <= self.depth:
            raise PreconditionError(f"index {j} outside 2..{self.depth}")
        return self.values[j - 2]

    def gamma(self, j: int) -> float:
        """Complementary quantity 1 - 2 b_j (a conditional indicator
        probability; stays in [0, 1])."""
        return 1.0 - 2.0 * self.value(j)

    @property
    def closed_form_agrees(self) -> bool:
        return self.closed_form_max_dev <= 1e-9


def _hazard_closed_form(p: float, j: int) -> float | None:
    """Closed form for the hazard, or None where it degenerates
    (p = 0, or a vanishing denominator)."""
    if p < 1e-12:
        return None
    b_disc = math.sqrt(p * p + 6.0 * p + 1.0)
    theta_plus = 1.0 - (1.0 - b_disc) / p
    theta_minus = 1.0 - (1.0 + b_disc) / p
    ratio = theta_plus / theta_minus  # |ratio| <= 1 for p in (0, 1]
    rj = ratio**j
    denom = (3.0 + b_disc + p) - (3.0 - b_disc + p) * rj
    if abs(denom) < 1e-8:
        return None
    return 2.0 * (1.0 - rj) / denom


def run_hazards(p: float, depth: int) -> RunHazards:
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"p={p} outside [0, 1]")
    if depth < 2:
        raise PreconditionError("depth must be >= 2")
    values = [0.5 * (1.0 - p)]
    for _ in range(3, depth + 1):
        prev = values[-1]
        values.append(0.5 * (1.0 - (1.0 + p) * prev) / (1.0 - prev))
    checked = 0
    max_dev = 0.0
    for j in range(2, depth + 1):
        closed = _hazard_closed_form(p, j)
        if closed is not None:
            checked += 1
            max_dev = max(max_dev, abs(closed - values[j - 2]))
    return RunHazards(p, depth, tuple(values), checked, max_dev)


def output_entropy_series(p: float, depth: int) -> float:
    """Partial sum T_J of the output entropy rate: each term is the
    entropy of one hazard weighted by the zero-run survival product,
    scaled by the probability (4(1+p))^-1 of the run's '10' prefix
    (doubled for the complementary symbol)."""
    hz = run_hazards(p, depth)
    terms = []
    survival = 1.0
    for j in range(2, depth + 1):
        b = hz.value(j)
        terms.append(binary_entropy(b) * survival)
        survival *= 1.0 - b
    return math.fsum(terms) / (2.0 * (1.0 + p))


def error_entropy_series(p: float, depth: int) -> float:
    """Partial sum S_J of the error-sequence entropy rate given the
    input: ((1 + p/2)/(1 + p)) sum_j 2^-j h((1 - (-p)^j)/(1 + p)),
    with the alternating power computed sign-tracked."""
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"p={p} outside [0, 1]")
    if depth < 2:
        raise PreconditionError("depth must be >= 2")
    terms = []
    for j in range(2, depth + 1):
        signed = p**j if j % 2 == 0 else -(p**j)
        arg = (1.0 - signed) / (1.0 + p)
        terms.append(math.ldexp(binary_entropy(arg), -j))
    return math.fsum(terms) * (1.0 + p / 2.0) / (1.0 + p)


def truncation_error(p: float, depth: int) -> float:
    """Reported truncation-error bound for the SIR series at depth J:
    (1/(1+p)) [(1 + p/2) 2^-J + 2^-floor((J+1)/2)].

    Caution: the geometric-tail constant in the second term is
    optimistic; the actual tail of the output-entropy series can exceed
    this value for p above roughly 0.6 (see truncation_error_safe for a
    variant that dominates the observed error everywhere).
    """
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"p={p} outside [0, 1]")
    if depth < 2:
        raise PreconditionError("depth must be >= 2")
    return (
        (1.0 + p / 2.0) * math.ldexp(1.0, -depth)
        + math.ldexp(1.0, -((depth + 1) // 2))
    ) / (1.0 + p)


def truncation_error_pfree(depth: int) -> float:
    """p-independent form 2^-J + 2^-floor((J+1)/2) of the reported
    bound (its value at p = 0)."""
    if depth < 2:
        raise PreconditionError("depth must be >= 2")
    return math.ldexp(1.0, -depth) + math.ldexp(1.0, -((depth + 1) // 2))


def truncation_error_safe(p: float, depth: int) -> float:
    """Conservative truncation bound: the pairwise survival-product
    argument gives (1/(1+p)) [(1+p/2) 2^-J + 4 * 2^-floor((J+1)/2)];
    this dominates the observed series tail for every p."""
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"p={p} outside [0, 1]")
    if depth < 2:
        raise PreconditionError("depth must be >= 2")
    return (
        (1.0 + p / 2.0) * math.ldexp(1.0, -depth)
        + 4.0 * math.ldexp(1.0, -((depth + 1) // 2))
    ) / (1.0 + p)


@dataclass(frozen=True)
class SirResult:
    p: float
    depth: int
    output_entropy: float   # T_J
    error_entropy: float    # S_J
    sir: float              # T_J - S_J
    error_bound: float      # reported truncation bound at this depth
    capacity_lower: float   # max(1/2, sir)
    capacity_upper: float   # 1/(1+p)


def sir(p: float, depth: int = 64) -> SirResult:
    """Symmetric information rate of the grains channel, truncated at
    the given depth, with capacity bounds.

    The rate-1/2 bit-doubling code survives every realization, so the
    capacity lower bound is max(1/2, SIR); the NAE degradation gives
    the upper bound 1/(1+p).
    """
    t_j = output_entropy_series(p, depth)
    s_j = error_entropy_series(p, depth)
    value = t_j - s_j
    return SirResult(
        p=p,
        depth=depth,
        output_entropy=t_j,
        error_entropy=s_j,
        sir=value,
        error_bound=truncation_error(p, depth),
        capacity_lower=max(0.5, value),
        capacity_upper=1.0 / (1.0 + p),
    )


def erasure_capacity(p: float) -> float:
    """Capacity 1/(1+p) of the NAE channel: one minus the stationary
    erasure frequency p/(1+p)."""
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"p={p} outside [0, 1]")
    return 1.0 / (1.0 + p)


def nonadjacent_error_capacity(p: float) -> float:
    """Capacity 1 - h(p)/(1+p) of the companion channel that flips
    (rather than erases or copies) at indicator positions.

    Not a valid bound for the grains channel in either direction; it is
    reported for reference only and flagged as such by the CLI.
    """
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"p={p} outside [0, 1]")
    return 1.0 - binary_entropy(p) / (1.0 + p)


# ---------------------------------------------------------------------------
# exact finite-n oracles
# ---------------------------------------------------------------------------


def erasure_mi_exact(n: int, p: float) -> float:
    """Exact I(x^n; y^n | u0)/n of the NAE channel under i.i.d. uniform
    input and stationary u0, by enumeration over indicator sequences.

    For each u0, I = H(y|u0) - H(y|x,u0); the erasure pattern of y
    reveals u exactly, so H(y|x,u0) = H(u|u0), and conditioned on u the
    non-erased outputs are uniform.  Comes out to 1/(1+p) for every n.
    """
    caps = get_caps()
    if n > caps.channel_exact_n:
        raise CapExceeded(f"n={n} exceeds channel_exact_n={caps.channel_exact_n}")
    if n < 1 or not 0.0 <= p <= 1.0:
        raise PreconditionError("need n >= 1 and p in [0, 1]")
    weights = (1.0 / (1.0 + p), p / (1.0 + p))
    mi = 0.0
    for u0, w in enumerate(weights):
        if w == 0.0:
            continue
        h_y = 0.0
        h_u = 0.0
        for mask, q in _indicator_law(n, p, u0):
            kept = n - mask.bit_count()  # non-erased positions
            h_u += -q * math.log2(q)
            h_y += q * (-math.log2(q) + kept)
        mi += w * (h_y - h_u)
    return mi / n


def _state_transition_matrices(p: float) -> tuple[np.ndarray, np.ndarray]:
    """M[b][s', s] = P(next state s, output b | state s') with states
    s = 2u + x, input bits uniform."""
    pu = ((1.0 - p, p), (1.0, 0.0))
    mats = [np.zeros((4, 4)) for _ in range(2)]
    for up in range(2):
        for xp in range(2):
            for u in range(2):
                for x in range(2):
                    y = x if u == 0 else xp
                    mats[y][2 * up + xp, 2 * u + x] += pu[up][u] * 0.5
    return mats[0], mats[1]


def _stationary_state(p: float) -> np.ndarray:
    w0, w1 = 1.0 / (1.0 + p), p / (1.0 + p)
    return np.array([w0 / 2, w0 / 2, w1 / 2, w1 / 2])


def _output_entropy_profile(p: float, n: int, alpha0: np.ndarray) -> list[float]:
    """H(y^1), ..., H(y^n) by a forward sweep that keeps the joint
    probability vector over (output prefix, state)."""
    m0, m1 = _state_transition_matrices(p)
    alpha = alpha0.reshape(1, 4)
    entropies = []
    for _ in range(n):
        nxt = np.empty((alpha.shape[0] * 2, 4))
        nxt[0::2] = alpha @ m0
        nxt[1::2] = alpha @ m1
        alpha = nxt
        prefix = alpha.sum(axis=1)
        mass = prefix[prefix > 1e-300]
        entropies.append(float(-(mass * np.log2(mass)).sum()))
    return entropies


def output_entropy_bracket(n: int, p: float) -> tuple[float, float]:
    """(lower, upper) bracket for the output entropy rate:
    H(y_n | y^{n-1}, s0) <= rate <= H(y_n | y^{n-1}), both exact under
    the stationary initial state.  The output-entropy series partial
    sums converge inside this bracket."""
    caps = get_caps()
    if n > caps.channel_exact_n:
        raise CapExceeded(f"n={n} exceeds channel_exact_n={caps.channel_exact_n}")
    if n < 2 or not 0.0 <= p <= 1.0:
        raise PreconditionError("need n >= 2 and p in [0, 1]")
    stationary = _stationary_state(p)
    profile = _output_entropy_profile(p, n, stationary)
    upper = profile[-1] - profile[-2]
    lower = 0.0
    for s in range(4):
        w = stationary[s]
        if w <= 0.0:
            continue
        point = np.zeros(4)
        point[s] = 1.0
        cond = _output_entropy_profile(p, n, point)
        lower += w * (cond[-1] - cond[-2])
    return lower, upper


def all_zero_output_prob(n: int, p: float) -> float:
    """Exact P(y^n = 0^n) under stationary start and uniform input;
    bounded by (3/4)^floor(n/2) since each 00 output pair rules out an
    11 input pair."""
    if n < 1 or not 0.0 <= p <= 1.0:
        raise PreconditionError("need n >= 1 and p in [0, 1]")
    m0, _ = _state_transition_matrices(p)
    alpha = _stationary_state(p)
    for _ in range(n):
        alpha = alpha @ m0
    return float(alpha.sum())


def error_entropy_exact(n: int, p: float) -> float:
    """Exact H(z^n | x^n) with z the error indicator sequence, the
    input uniform, and the initial state (u0, x0) hidden stationary.

    z_i is the indicator at i masked by whether the input changed at i,
    so the law of z given x depends only on the input's change pattern;
    the hidden x0 averages the laws for both values of the first change
    bit.  Enumerates all valid indicator sequences (numpy-aggregated),
    all change patterns, and both u0 values.  Successive differences of
    this quantity converge to the error-entropy series limit.
    """
    caps = get_caps()
    if n > caps.error_entropy_n:
        raise CapExceeded(f"n={n} exceeds error_entropy_n={caps.error_entropy_n}")
    if n < 1 or not 0.0 <= p <= 1.0:
        raise PreconditionError("need n >= 1 and p in [0, 1]")
    w0, w1 = 1.0 / (1.0 + p), p / (1.0 + p)
    masks = []
    probs = []
    for mask in _valid_indicator_masks(n):
        q = w0 * _indicator_prob(mask, n, p, 0) + w1 * _indicator_prob(mask, n, p, 1)
        if q > 0.0:
            masks.append(mask)
            probs.append(q)
    mask_arr = np.array(masks, dtype=np.int64)
    prob_arr = np.array(probs)
    half_prob = np.concatenate([prob_arr, prob_arr]) * 0.5

    top = 1 << (n - 1)
    total = 0.0
    for tail in range(top):
        keys = np.concatenate([mask_arr & tail, mask_arr & (tail | top)])
        _, inverse = np.unique(keys, return_inverse=True)
        agg = np.bincount(inverse, weights=half_prob)
        agg = agg[agg > 1e-300]
        total += float(-(agg * np.log2(agg)).sum())
    return total / top


def indicator_stay_prob(j: int, p: float) -> float:
    """Closed form P(u_j = 0 | u_1 = 0) = (1 - (-p)^j)/(1 + p)."""
    if j < 1 or not 0.0 <= p <= 1.0:
        raise PreconditionError("need j >= 1 and p in [0, 1]")
    signed = p**j if j % 2 == 0 else -(p**j)
    return (1.0 - signed) / (1.0 + p)


def indicator_transition_matrix(p: float) -> np.ndarray:
    return np.array([[1.0 - p, p], [1.0, 0.0]])


# ---------------------------------------------------------------------------
# indecomposability and zero-error behavior
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndecomposabilityResult:
    p: float
    indecomposable: bool
    witness: float  # min over initial states of reaching (u=0, x_1)


def indecomposability_check(p: float) -> IndecomposabilityResult:
    """Single-step check that the initial state washes out: the state
    (0, x_1) is reached in one step with probability min_u0 P(u_1=0|u0)
    = 1 - p from every initial state, positive exactly when p < 1."""
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"p={p} outside [0, 1]")
    witness = 1.0 - p
    return IndecomposabilityResult(p, witness > 0.0, witness)


def zero_error_rate(n: int, initial: str | int = "stationary") -> Fraction:
    """Best zero-error information rate at block length n (for p > 0).

    If the first indicator can fire (any initial convention except a
    forced grain boundary at cell 0, i.e. u0 = 1), the adversarial
    realization pins the odd positions and only floor(n/2)/n is
    achievable (and achieved by the bit-doubling code).  With u0 = 1
    the first cell is also safe: ceil(n/2)/n.  Either way -> 1/2.
    """
    if n < 1:
        raise PreconditionError("need n >= 1")
    if initial == "stationary" or initial == 0:
        first_can_fire = True
    elif initial == 1:
        first_can_fire = False
    else:
        raise PreconditionError("initial must be 'stationary', 0, or 1")
    if first_can_fire:
        return Fraction(n // 2, n)
    return Fraction((n + 1) // 2, n)


# ---------------------------------------------------------------------------
# capacity curves
# ---------------------------------------------------------------------------


def capacity_curves(
    p_values, depth: int = 15
) -> tuple[list[tuple[float, float, float, float, float]], float | None]:
    """Rows (p, sir, capacity_lower, capacity_upper, error_bound) plus
    the first grid point where the SIR dips below 1/2 (there the SIR
    stops being the binding lower bound)."""
    rows = []
    crossing = None
    for p in p_values:
        r = sir(p, depth)
        rows.append((p, r.sir, r.capacity_lower, r.capacity_upper, r.error_bound))
        if crossing is None and r.sir < 0.5:
            crossing = p
    return rows, crossing
