"""Seeded sampling of the Linial-Meshulam random complex Y_d(n, p).

Candidate d-faces are ranked in colexicographic order; each is included
independently with probability p.  For sparse p the sampler jumps between
included ranks with geometric gaps so runtime scales with the expected
face count, not the C(n, d+1) candidate count.  Everything is driven by
counter-based Philox streams keyed on (seed, ...) so trials are
order-independent and reproducible across platforms.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

import numpy as np
from numpy.random import Generator, Philox, SeedSequence

from .complexes import Complex

SPARSE_P_THRESHOLD = 0.01
ENUMERATION_LIMIT = 24  # max C(n, d+1) for exhaustive enumeration
_DENSE_CHUNK = 1 << 16


def p_from_alpha(n: int, alpha: float) -> float:
    """n^(-alpha), evaluated as exp(-alpha * ln n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.exp(-alpha * math.log(n))


def resolve_p(n: int, alpha: Optional[float] = None, p: Optional[float] = None) -> float:
    """Exactly one of alpha/p must be given; returns the face probability."""
    if (alpha is None) == (p is None):
        raise ValueError("exactly one of alpha and p must be supplied")
    value = p_from_alpha(n, alpha) if p is None else float(p)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"face probability {value} outside [0, 1]")
    return value


@dataclass(frozen=True)
class LMParams:
    n: int
    d: int
    p: float
    seed: int
    alpha: Optional[float] = None

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.n <= self.d:
            raise ValueError(f"need n >= d + 1, got n={self.n}, d={self.d}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.alpha is not None and self.p != p_from_alpha(self.n, self.alpha):
            raise ValueError("p does not equal n**(-alpha) at full precision")

    @classmethod
    def from_alpha(cls, n: int, d: int, alpha: float, seed: int) -> "LMParams":
        return cls(n=n, d=d, p=p_from_alpha(n, alpha), seed=seed, alpha=alpha)

    def candidate_count(self) -> int:
        return comb(self.n, self.d + 1)


def stream(*key: int) -> Generator:
    """A fresh Philox stream for an integer key tuple."""
    return Generator(Philox(SeedSequence([int(k) & 0xFFFFFFFFFFFFFFFF for k in key])))


def trial_seed_sequence(seed: int, trial: int) -> SeedSequence:
    return SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, int(trial)])


# -- colexicographic face ranking ---------------------------------------


def faces_colex(n: int, k: int) -> Iterator[tuple]:
    """All k-subsets of {0..n-1} in colexicographic rank order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, n):
        for rest in faces_colex(top, k - 1):
            yield rest + (top,)


def unrank_colex(rank: int, k: int) -> tuple:
    """The rank-th k-subset of the naturals (0-based) in colex order."""
    out = []
    r = rank
    for i in range(k, 0, -1):
        lo, hi = i - 1, i - 1
        while comb(hi + 1, i) <= r:
            hi = 2 * hi + 1
        # binary search for the largest v with comb(v, i) <= r
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if comb(mid, i) <= r:
                lo = mid
            else:
                hi = mid - 1
        out.append(lo)
        r -= comb(lo, i)
    return tuple(reversed(out))


def rank_colex(subset) -> int:
    s = sorted(subset)
    return sum(comb(v, i + 1) for i, v in enumerate(s))


# -- sampling ------------------------------------------------------------


def _sample_ranks_dense(rng: Generator, total: int, p: float) -> list:
    ranks: list = []
    offset = 0
    while offset < total:
        block = min(_DENSE_CHUNK, total - offset)
        u = rng.random(block)
        hits = np.nonzero(u < p)[0]
        ranks.extend((offset + int(h)) for h in hits)
        offset += block
    return ranks

def _sample_ranks_skip(rng: Generator, total: int, p: float) -> list:
    """Geometric index-skipping: one uniform per included face."""
    log_q = math.log1p(-p)
    ranks: list = []
    pos = 0
    batch = max(64, int(total * p * 1.25) + 16)
    while True:
        for u in rng.random(batch):
            gap = int(math.log1p(-u) / log_q)
            pos += gap
            if pos >= total:
                return ranks
            ranks.append(pos)
            pos += 1
        if pos >= total:
            return ranks


def sample_lm(params: LMParams, method: str = "auto") -> Complex:
    """Draw Y_d(n, p).  Identical params give an identical complex.

    ``method`` selects the internal path: 'dense' scans every candidate
    rank, 'skip' jumps by geometric gaps (the default for p < 0.01).  The
    two paths consume their streams differently, so they agree in
    distribution but not face-for-face on a shared seed.
    """
    n, d, p = params.n, params.d, params.p
    total = params.candidate_count()
    if method == "auto":
        method = "skip" if p < SPARSE_P_THRESHOLD else "dense"
    if p == 0.0:
        return Complex(n, d, [])
    if p == 1.0:
        faces = [tuple(v + 1 for v in f) for f in faces_colex(n, d + 1)]
        return Complex(n, d, faces)
    rng = stream(params.seed, n, d)
    if method == "dense":
        ranks = _sample_ranks_dense(rng, total, p)
    elif method == "skip":
        ranks = _sample_ranks_skip(rng, total, p)
    else:
        raise ValueError(f"unknown sampling method {method!r}")
    faces = [tuple(v + 1 for v in unrank_colex(r, d + 1)) for r in ranks]
    return Complex(n, d, faces)


def enumerate_complexes(n: int, d: int) -> Iterator[Complex]:
    """Every complex on (n, d), one per subset of candidate faces.

    Emitted in bitmask order over the colex face ranking: bit i of the
    mask controls the face of rank i.  Guarded to C(n, d+1) <= 24.
    """
    total = comb(n, d + 1)
    if total > ENUMERATION_LIMIT:
        raise ValueError(
            f"refusing to enumerate 2^{total} complexes (limit 2^{ENUMERATION_LIMIT})"
        )
    all_faces = [tuple(v + 1 for v in f) for f in faces_colex(n, d + 1)]
    for mask in range(1 << total):
        faces = [all_faces[i] for i in range(total) if mask >> i & 1]
        yield Complex(n, d, faces)


# -- degree law ----------------------------------------------------------


@dataclass(frozen=True)
class DegreeLawReport:
    n: int
    d: int
    p: float
    trials: int
    mean: float
    variance: float
    reference_mean: float
    reference_variance: float
    histogram: tuple

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "p": self.p,
            "trials": self.trials,
            "mean": self.mean,
            "variance": self.variance,
            "reference_mean": self.reference_mean,
            "reference_variance": self.reference_variance,
            "histogram": [list(pair) for pair in self.histogram],
        }


def degree_law_check(params: LMParams, trials: int) -> DegreeLawReport:
    """Pooled degree of the fixed (d-1)-simplex {1..d} over independent draws.

    The degree of a fixed center depends only on the n-d candidate faces
    containing it, so each trial samples exactly those indicators; the
    pooled law is identical to measuring degrees on full samples.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n, d, p = params.n, params.d, params.p
    m = n - d
    rng = Generator(Philox(SeedSequence([params.seed, 0xDE9])))
    degrees = np.zeros(trials, dtype=np.int64)
    block = max(1, min(trials, (1 << 22) // max(m, 1)))
    done = 0
    while done < trials:
        take = min(block, trials - done)
        u = rng.random((take, m))
        degrees[done : done + take] = (u < p).sum(axis=1)
        done += take
    values, counts = np.unique(degrees, return_counts=True)
    hist = tuple((int(v), int(c)) for v, c in zip(values, counts))
    return DegreeLawReport(
        n=n,
        d=d,
        p=p,
        trials=trials,
        mean=float(degrees.mean()),
        variance=float(degrees.var(ddof=1)) if trials > 1 else 0.0,
        reference_mean=m * p,
        reference_variance=m * p * (1.0 - p),
        histogram=hist,
    )


def sample_conditioned(
    params: LMParams,
    forced_faces,
    candidate_faces,
    rng: Generator,
) -> Complex:
    """Complex with ``forced_faces`` present and only ``candidate_faces`` random.

    Faces are independent, so forcing a set of faces in and restricting
    attention to the candidates that can influence a statistic yields the
    exact conditional law of that statistic.
    """
    candidates = list(candidate_faces)
    mask = rng.random(len(candidates)) < params.p
    faces = [f for f, keep in zip(candidates, mask) if keep]
    faces.extend(forced_faces)
    return Complex(params.n, params.d, faces)
