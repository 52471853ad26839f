"""Stability experiments: does a small L1 perturbation stay small in entropy?

The experimental ratio for a pair (p, p') with ||p - p'||_1 = delta is

    R = |S(p) - S(p')| / S_max(n),    S_max(n) = (lam + ln n)**sigma - lam**sigma

and an entropy functional is stable when R can be made uniformly small in n
by shrinking delta.  Two structured perturbation families probe the classic
danger zones:

  family A ("certainty side")     p  = (1, 0, ..., 0)
                                  p' = (1 - delta/2, delta/(2(n-1)), ...)
  family B ("uniform with hole")  p  = (0, 1/(n-1), ..., 1/(n-1))
                                  p' = (delta/2, (1-delta/2)/(n-1), ...)

Both have exact L1 distance delta.  Because each family is one head value
plus n-1 identical tail values, S(p) costs two generator calls regardless
of n, so sweeps run to n = 1e8 in constant time per row; the aggregated
path is cross-checked against explicit weight vectors in the tests.

The Renyi entropy ln(sum p_i**q)/(1-q) is included as a negative control:
for q < 1 its family-A ratio grows toward 1 with n at fixed delta.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DimensionMismatch,
    DomainError,
    EntropyParams,
    ProbDist,
    entropy,
    generator,
    make_dist,
    max_entropy,
)

# measured L1 must certify against the declared budget this tightly
L1_TOL = 1e-12


class Family(enum.Enum):
    CERTAINTY_A = "A"
    UNIFORM_B = "B"
    RANDOM_SEARCH = "RandomSearch"


@dataclass(frozen=True)
class PerturbPair:
    """A distribution and its perturbation, certified against an L1 budget.

    Structured families (A, B) assert ||p - p'||_1 == delta to within
    L1_TOL; RandomSearch pairs only promise ||p - p'||_1 <= delta + L1_TOL,
    and delta = 0 is legal there (the pair p' = p).
    """

    p: ProbDist
    p_prime: ProbDist
    delta: float
    family: Family

    def __post_init__(self):
        if self.p.n != self.p_prime.n:
            raise DimensionMismatch(
                f"p has {self.p.n} outcomes, p_prime has {self.p_prime.n}"
            )
        if not (0.0 <= self.delta <= 2.0):
            raise DomainError(f"delta must lie in [0, 2], got {self.delta!r}")
        l1 = self.l1_distance()
        if self.family is Family.RANDOM_SEARCH:
            if l1 > self.delta + L1_TOL:
                raise DomainError(
                    f"search pair exceeds its L1 budget: {l1!r} > {self.delta!r}"
                )
        elif abs(l1 - self.delta) > L1_TOL:
            raise DomainError(
                f"family {self.family.value} pair has L1 {l1!r}, declared {self.delta!r}"
            )

    def l1_distance(self) -> float:
        return float(np.abs(self.p.weights - self.p_prime.weights).sum())


@dataclass(frozen=True)
class StabilityRecord:
    """One measured row of a stability experiment."""

    family: str
    n: int
    delta: float
    sigma: float
    lam: float
    s_p: float
    s_p_prime: float
    ratio: float


def family_a_pair(n: int, delta: float) -> PerturbPair:
    """Perturbed certainty: all mass on one outcome vs. a delta/2 leak."""
    if n < 2:
        raise DomainError(f"family A needs n >= 2, got {n}")
    if not (0.0 < delta <= 1.0):
        raise DomainError(f"family A needs delta in (0, 1], got {delta!r}")
    w = np.zeros(n)
    w[0] = 1.0
    wp = np.full(n, delta / (2.0 * (n - 1)))
    wp[0] = 1.0 - delta / 2.0
    return PerturbPair(make_dist(w), make_dist(wp), delta, Family.CERTAINTY_A)


def family_b_pair(n: int, delta: float) -> PerturbPair:
    """Uniform with a hole vs. the hole partly filled from the tail."""
    if n < 3:
        raise DomainError(f"family B needs n >= 3, got {n}")
    if not (0.0 < delta <= 1.0):
        raise DomainError(f"family B needs delta in (0, 1], got {delta!r}")
    w = np.full(n, 1.0 / (n - 1))
    w[0] = 0.0
    wp = np.full(n, (1.0 - delta / 2.0) / (n - 1))
    wp[0] = delta / 2.0
    return PerturbPair(make_dist(w), make_dist(wp), delta, Family.UNIFORM_B)


def stability_ratio(pair: PerturbPair, params: EntropyParams) -> StabilityRecord:
    """Evaluate both entropies explicitly and normalize by S_max."""
    s_p = entropy(pair.p, params)
    s_pp = entropy(pair.p_prime, params)
    ratio = abs(s_p - s_pp) / max_entropy(pair.p.n, params)
    return StabilityRecord(
        family=pair.family.value,
        n=pair.p.n,
        delta=pair.delta,
        sigma=params.sigma,
        lam=params.lam,
        s_p=s_p,
        s_p_prime=s_pp,
        ratio=ratio,
    )


def renyi_entropy(p: ProbDist, q: float) -> float:
    """Renyi entropy ln(sum_i p_i**q) / (1 - q), q > 0, q != 1; zeros skipped."""
    if not (q > 0.0) or q == 1.0 or not math.isfinite(q):
        raise DomainError(f"Renyi order q must be positive and != 1, got {q!r}")
    w = p.weights
    w = w[w > 0.0]
    return float(np.log(np.sum(w**q)) / (1.0 - q))


def _family_entropies(
    family: Family, n: int, delta: float, params: EntropyParams
) -> tuple[float, float]:
    """(S(p), S(p')) for a structured family via head + aggregated tail.

    Each distribution is one head weight plus n-1 equal tail weights, so
    the sum collapses to head_term + (n-1) * tail_term: O(1) in n.
    delta = 0 is allowed here and gives S(p') identical to S(p).
    """
    if family is Family.CERTAINTY_A:
        if n < 2:
            raise DomainError(f"family A needs n >= 2, got {n}")
        s_p = generator(1.0, params) + (n - 1) * generator(0.0, params)
        s_pp = generator(1.0 - delta / 2.0, params) + (n - 1) * generator(
            delta / (2.0 * (n - 1)), params
        )
        return s_p, s_pp
    if family is Family.UNIFORM_B:
        if n < 3:
            raise DomainError(f"family B needs n >= 3, got {n}")
        s_p = generator(0.0, params) + (n - 1) * generator(1.0 / (n - 1), params)
        s_pp = generator(delta / 2.0, params) + (n - 1) * generator(
            (1.0 - delta / 2.0) / (n - 1), params
        )
        return s_p, s_pp
    raise DomainError(f"no aggregated form for family {family!r}")


def _family_renyi(family: Family, n: int, delta: float, q: float) -> tuple[float, float]:
    """(R(p), R(p')) for a structured family, aggregated the same way."""
    one_minus_q = 1.0 - q
    if family is Family.CERTAINTY_A:
        r_p = 0.0
        head = (1.0 - delta / 2.0) ** q
        tail_w = delta / (2.0 * (n - 1))
        tail = (n - 1) * tail_w**q if tail_w > 0.0 else 0.0
        r_pp = math.log(head + tail) / one_minus_q
        return r_p, r_pp
    if family is Family.UNIFORM_B:
        r_p = math.log((n - 1) * (1.0 / (n - 1)) ** q) / one_minus_q
        head_w = delta / 2.0
        head = head_w**q if head_w > 0.0 else 0.0
        tail = (n - 1) * ((1.0 - delta / 2.0) / (n - 1)) ** q
        r_pp = math.log(head + tail) / one_minus_q
        return r_p, r_pp
    raise DomainError(f"no aggregated form for family {family!r}")


def sweep(
    families,
    n_grid,
    delta: float,
    params: EntropyParams,
    control_q: float | None = None,
) -> list[StabilityRecord]:
    """Stability ratios over a grid of n for each structured family.

    families : iterable of Family or of their string values ("A", "B")
    n_grid   : nonempty, strictly ascending integers (family B needs n >= 3)
    delta    : L1 budget in [0, 1]; delta = 0 gives all-zero ratios
    control_q: if given, appends Renyi negative-control rows per family,
               labelled "<family>_renyi", normalized by ln n

    Rows are ordered by (family label, n).  Everything is evaluated
    through the aggregated O(1) path, so n up to 1e8 is fine.
    """
    fams = []
    for f in families:
        fams.append(f if isinstance(f, Family) else Family(str(f)))
    if not fams:
        raise DomainError("need at least one family")
    ns = [int(n) for n in n_grid]
    if not ns:
        raise DomainError("n_grid must be nonempty")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise DomainError(f"n_grid must be strictly ascending, got {ns}")
    if not (0.0 <= delta <= 1.0):
        raise DomainError(f"delta must lie in [0, 1], got {delta!r}")
    if control_q is not None and (not (control_q > 0.0) or control_q == 1.0):
        raise DomainError(f"control q must be positive and != 1, got {control_q!r}")

    records = []
    for fam in fams:
        for n in ns:
            s_p, s_pp = _family_entropies(fam, n, delta, params)
            ratio = abs(s_p - s_pp) / max_entropy(n, params)
            records.append(
                StabilityRecord(
                    family=fam.value,
                    n=n,
                    delta=delta,
                    sigma=params.sigma,
                    lam=params.lam,
                    s_p=s_p,
                    s_p_prime=s_pp,
                    ratio=ratio,
                )
            )
        if control_q is not None:
            for n in ns:
                r_p, r_pp = _family_renyi(fam, n, delta, control_q)
                records.append(
                    StabilityRecord(
                        family=f"{fam.value}_renyi",
                        n=n,
                        delta=delta,
                        sigma=params.sigma,
                        lam=params.lam,
                        s_p=r_p,
                        s_p_prime=r_pp,
                        ratio=abs(r_p - r_pp) / math.log(n),
                    )
                )
    records.sort(key=lambda r: (r.family, r.n))
    return records


def random_pair_search(
    n: int,
    delta: float,
    params: EntropyParams,
    iterations: int = 10_000,
    seed: int = 0,
) -> tuple[PerturbPair, StabilityRecord]:
    """Adversarial search for a high-ratio pair inside the L1 ball.

    Hill climb over mass-transfer moves of size eps = delta/10, cooled by
    half after iterations//5 consecutive non-improving steps.  The
    structured family pairs are seeded as starting candidates, so the
    returned ratio is never below theirs.  Deterministic for a given seed.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if not (0.0 <= delta <= 1.0):
        raise DomainError(f"delta must lie in [0, 1], got {delta!r}")
    if iterations < 0:
        raise DomainError(f"iterations must be >= 0, got {iterations}")
    rng = np.random.default_rng(seed)
    smax = max_entropy(n, params)

    def ratio_of(w: np.ndarray, wp: np.ndarray) -> float:
        return abs(
            entropy(make_dist(w), params) - entropy(make_dist(wp), params)
        ) / smax

    # candidate starts: structured families plus a random interior pair
    starts: list[tuple[np.ndarray, np.ndarray]] = []
    if delta > 0.0:
        pa = family_a_pair(n, delta)
        starts.append((pa.p.weights.copy(), pa.p_prime.weights.copy()))
        if n >= 3:
            pb = family_b_pair(n, delta)
            starts.append((pb.p.weights.copy(), pb.p_prime.weights.copy()))
    base = rng.standard_exponential(n)
    base /= base.sum()
    starts.append((base.copy(), base.copy()))

    best_w, best_wp = starts[0]
    best_ratio = ratio_of(best_w, best_wp)
    for w, wp in starts[1:]:
        r = ratio_of(w, wp)
        if r > best_ratio:
            best_ratio, best_w, best_wp = r, w, wp

    cur_w, cur_wp = best_w.copy(), best_wp.copy()
    cur_ratio = best_ratio
    eps = delta / 10.0
    stall_limit = max(1, iterations // 5)
    stall = 0
    for _ in range(iterations):
        # move mass within one side of the pair, keeping the other fixed
        side = rng.integers(0, 2)
        w = cur_w.copy()
        wp = cur_wp.copy()
        target = wp if side else w
        i, j = rng.choice(n, size=2, replace=False)
        amt = min(eps, target[i])
        target[i] -= amt
        target[j] += amt
        l1 = float(np.abs(w - wp).sum())
        if l1 > delta + 1e-13:
            stall += 1
        else:
            r = ratio_of(w, wp)
            if r > cur_ratio:
                cur_w, cur_wp, cur_ratio = w, wp, r
                stall = 0
            else:
                stall += 1
        if stall >= stall_limit:
            eps *= 0.5
            stall = 0
        if cur_ratio > best_ratio:
            best_ratio = cur_ratio
            best_w, best_wp = cur_w.copy(), cur_wp.copy()

    pair = PerturbPair(
        make_dist(best_w), make_dist(best_wp), delta, Family.RANDOM_SEARCH
    )
    s_p = entropy(pair.p, params)
    s_pp = entropy(pair.p_prime, params)
    record = StabilityRecord(
        family=Family.RANDOM_SEARCH.value,
        n=n,
        delta=delta,
        sigma=params.sigma,
        lam=params.lam,
        s_p=s_p,
        s_p_prime=s_pp,
        ratio=abs(s_p - s_pp) / smax,
    )
    return pair, record
