"""Monte Carlo and numerical verification harness.

Four statistical checks (named 4.2, 4.3, 5.1, 5.2 after the claims they
exercise), a log-scale evaluation of the labelled-collection counting
bound (5.3), a reconstruction phase-diagram experiment, and the
non-reconstructability collision search.

Conditioning strategy: where a check conditions on adjacencies, the
conditioned faces are forced into the sample and only the candidate faces
that can influence the measured statistic are drawn.  Faces are
independent, so this realizes the exact conditional law while keeping
trials cheap; the statistics themselves are computed by the complex-core
operations on the assembled complex, not by re-derived formulas.
"""

from __future__ import annotations

import math
import os
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb, lgamma, log
from typing import Optional

import numpy as np
from numpy.random import Generator, Philox, SeedSequence

from .complexes import Complex
from .reconstruction import extract_collection, reconstruct, verify_exact
from .sampler import LMParams, resolve_p, sample_lm

DEFAULT_SLACK = 10.0
DEFAULT_MEAN_RTOL = 0.05
DEFAULT_MIN_FREQUENCY = 0.99


@dataclass
class TailCheckReport:
    """Outcome of one statistical check.

    ``bound_value`` is recomputed from the parameters on every run;
    ``passed`` applies the check's default acceptance rule.  ``extras``
    carries per-check detail (histograms, case breakdowns).
    """

    which: str
    n: int
    d: int
    alpha: Optional[float]
    p: float
    trials: int
    conditioned_events: int
    seed: int
    tail_frequency: Optional[float] = None
    bound_value: Optional[float] = None
    slack: float = DEFAULT_SLACK
    passed: bool = True
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "which": self.which,
            "n": self.n,
            "d": self.d,
            "alpha": self.alpha,
            "p": self.p,
            "trials": self.trials,
            "conditioned_events": self.conditioned_events,
            "seed": self.seed,
            "tail_frequency": self.tail_frequency,
            "bound_value": self.bound_value,
            "slack": self.slack,
            "passed": self.passed,
            "extras": self.extras,
        }


def _rng(seed: int, tag: int) -> Generator:
    return Generator(Philox(SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, tag])))


def chernoff_upper(mean: float, delta: float) -> float:
    """exp(-delta^2 mean / (2 + delta)), the upper-tail bound at (1+delta)mean."""
    if delta <= 0:
        raise ValueError("upper-tail bound needs delta > 0")
    return math.exp(-delta * delta * mean / (2.0 + delta))


def _conditioned_complex(
    n: int, d: int, p: float, forced, candidates, rng: Generator
) -> Complex:
    mask = rng.random(len(candidates)) < p
    faces = [f for f, keep in zip(candidates, mask) if keep]
    faces.extend(forced)
    return Complex(n, d, faces)


# -- check 4.2: common-neighbour count of one adjacent pair -----------------


def check_lemma_4_2(
    n: int,
    d: int,
    alpha: Optional[float] = None,
    c: float = 0.1,
    trials: int = 1000,
    seed: int = 0,
    p: Optional[float] = None,
    slack: float = DEFAULT_SLACK,
    mean_rtol: float = DEFAULT_MEAN_RTOL,
) -> TailCheckReport:
    """Tail and law of W for a conditioned adjacent pair.

    Template pair: sigma1 = {1..d}, sigma2 = {1..d-1, d+1}, with their
    union forced present.  W - (d-1) is Binomial(n-d-1, p^2); the tail
    event is {W >= d-1 + n^c (n-d-1) p^2}.  The reference bound is the
    Chernoff expression at delta = n^c - 1, which requires c > 0; for
    c <= 0 the bound is vacuous and the tail comparison is skipped.
    """
    pv = resolve_p(n, alpha, p)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if alpha is not None and c <= 2 * alpha - 1:
        raise ValueError("need c > 2*alpha - 1 for a nontrivial tail bound")
    sigma1 = tuple(range(1, d + 1))
    sigma2 = tuple(range(1, d)) + (d + 1,)
    forced = [tuple(range(1, d + 2))]
    rest = [v for v in range(1, n + 1) if v > d + 1]
    candidates = [tuple(sorted(sigma1 + (v,))) for v in rest]
    candidates += [tuple(sorted(sigma2 + (v,))) for v in rest]
    rng = _rng(seed, 0x42)
    mean_ref = (n - d - 1) * pv * pv
    threshold = (n ** c) * mean_ref
    s_dprimes = np.zeros(trials, dtype=np.int64)
    for t in range(trials):
        x = _conditioned_complex(n, d, pv, forced, candidates, rng)
        stats = x.neighbour_pair_stats(sigma1, sigma2)
        if stats.s_prime != d - 1:
            raise AssertionError("structural invariant s_prime == d-1 violated")
        s_dprimes[t] = stats.s_dprime
    tail_freq = float((s_dprimes >= threshold).mean())
    delta = n ** c - 1.0
    bound = chernoff_upper(mean_ref, delta) if delta > 0 else None
    emp_mean = float(s_dprimes.mean())
    mean_ok = abs(emp_mean - mean_ref) <= mean_rtol * mean_ref if mean_ref > 0 else True
    tail_ok = True if bound is None else tail_freq <= slack * bound
    values, counts = np.unique(s_dprimes, return_counts=True)
    return TailCheckReport(
        which="4.2",
        n=n,
        d=d,
        alpha=alpha,
        p=pv,
        trials=trials,
        conditioned_events=trials,
        seed=seed,
        tail_frequency=tail_freq,
        bound_value=bound,
        slack=slack,
        passed=bool(mean_ok and tail_ok),
        extras={
            "c": c,
            "threshold_excess": threshold,
            "empirical_mean_excess": emp_mean,
            "reference_mean_excess": mean_ref,
            "empirical_variance_excess": float(s_dprimes.var(ddof=1)) if trials > 1 else 0.0,
            "reference_variance_excess": (n - d - 1) * pv * pv * (1 - pv * pv),
            "mean_ok": bool(mean_ok),
            "tail_ok": bool(tail_ok),
            "bound_vacuous": bound is None,
            "histogram_excess": {int(v): int(cn) for v, cn in zip(values, counts)},
        },
    )


# -- check 4.3: four-tuple statistics ---------------------------------------


def _four_tuple_template(n: int, d: int, case: str):
    """Template tuples and forced faces per intersection-size case.

    Case I needs all sigma_i sharing a common (d-2)-simplex core; II drops
    the shared core to size d-2 (needs d >= 2); III to <= d-3 (needs
    d >= 3).  The chain case shares sigma2 between the two edges.
    """
    if case == "I":
        k = tuple(range(1, d))
        v1, v2, v3, v4 = d, d + 1, d + 2, d + 3
        sigmas = [tuple(sorted(k + (v,))) for v in (v1, v2, v3, v4)]
        if n <= d + 3:
            raise ValueError("n too small for the case-I template")
    elif case == "II":
        if d < 2:
            raise ValueError("case II needs d >= 2")
        b = tuple(range(1, d - 1))
        k12 = tuple(sorted(b + (d - 1,)))
        k34 = tuple(sorted(b + (d,)))
        sigmas = [
            tuple(sorted(k12 + (d + 1,))),
            tuple(sorted(k12 + (d + 2,))),
            tuple(sorted(k34 + (d + 3,))),
            tuple(sorted(k34 + (d + 4,))),
        ]
        if n <= d + 4:
            raise ValueError("n too small for the case-II template")
    elif case == "III":
        if d < 3:
            raise ValueError("case III needs d >= 3")
        b = tuple(range(1, d - 2))
        k12 = tuple(sorted(b + (d - 2, d - 1)))
        k34 = tuple(sorted(b + (d, d + 1)))
        sigmas = [
            tuple(sorted(k12 + (d + 2,))),
            tuple(sorted(k12 + (d + 3,))),
            tuple(sorted(k34 + (d + 4,))),
            tuple(sorted(k34 + (d + 5,))),
        ]
        if n <= d + 5:
            raise ValueError("n too small for the case-III template")
    elif case == "chain":
        k = tuple(range(1, d))
        v1, v2, v3 = d, d + 1, d + 2
        s1, s2, s3 = (tuple(sorted(k + (v,))) for v in (v1, v2, v3))
        sigmas = [s1, s2, s2, s3]
        if n <= d + 2:
            raise ValueError("n too small for the chain template")
    else:
        raise ValueError(f"unknown case {case!r}")
    forced = [
        tuple(sorted(set(sigmas[0]) | set(sigmas[1]))),
        tuple(sorted(set(sigmas[2]) | set(sigmas[3]))),
    ]
    return sigmas, forced


def _relevant_candidates(n: int, d: int, sigmas, forced) -> list:
    """Every candidate coface of any template simplex, minus forced faces."""
    forced_set = set(forced)
    cands = set()
    for s in set(sigmas):
        sset = set(s)
        for v in range(1, n + 1):
            if v not in sset:
                f = tuple(sorted(s + (v,)))
                if f not in forced_set:
                    cands.add(f)
    return sorted(cands)


def check_lemma_4_3(
    n: int,
    d: int,
    alpha: Optional[float] = None,
    trials: int = 1000,
    seed: int = 0,
    p: Optional[float] = None,
    cases: Optional[tuple] = None,
    mean_rtol: float = DEFAULT_MEAN_RTOL,
) -> TailCheckReport:
    """Per-case statistics of (W, |S|, Z) for two conditioned adjacent pairs.

    Measured per case: frequency of {W - |S| - Z <= n p^2 / 2}, violations
    of the structural claims |S| <= 1 (case II) and |S| = 0 (case III),
    and for case I the law of W - |S| - Z - (d-1) against the reference
    mean (n-d-3) p^2 (1 - p^2).  Cases II/III are skipped when d is too
    small for their templates.
    """
    pv = resolve_p(n, alpha, p)
    if alpha is not None and alpha >= 0.5:
        raise ValueError("the event comparison needs 1 - 2*alpha > 0")
    if cases is None:
        cases = ("I",) + (("II",) if d >= 2 else ()) + (("III",) if d >= 3 else ()) + ("chain",)
    rng = _rng(seed, 0x43)
    case_results = {}
    overall_pass = True
    for case in cases:
        sigmas, forced = _four_tuple_template(n, d, case)
        candidates = _relevant_candidates(n, d, sigmas, forced)
        w_minus = np.zeros(trials, dtype=np.int64)
        s_values = np.zeros(trials, dtype=np.int64)
        z_values = np.zeros(trials, dtype=np.int64)
        for t in range(trials):
            x = _conditioned_complex(n, d, pv, forced, candidates, rng)
            fts = x.four_tuple_stats(*sigmas)
            pair = x.neighbour_pair_stats(sigmas[0], sigmas[1])
            w_minus[t] = pair.w - fts.s - fts.z
            s_values[t] = fts.s
            z_values[t] = fts.z
        event_freq = float((w_minus <= 0.5 * n * pv * pv).mean())
        result = {
            "event_frequency": event_freq,
            "mean_w_minus_s_minus_z": float(w_minus.mean()),
            "mean_s": float(s_values.mean()),
            "mean_z": float(z_values.mean()),
            "max_s": int(s_values.max()),
        }
        if case == "I":
            ref = (n - d - 3) * pv * pv * (1 - pv * pv)
            emp = float((w_minus - (d - 1)).mean())
            result["reference_mean_excess"] = ref
            result["empirical_mean_excess"] = emp
            result["mean_ok"] = bool(abs(emp - ref) <= mean_rtol * ref)
            overall_pass &= result["mean_ok"]
        elif case == "II":
            result["violations_s_le_1"] = int((s_values > 1).sum())
            overall_pass &= result["violations_s_le_1"] == 0
        elif case == "III":
            result["violations_s_eq_0"] = int((s_values != 0).sum())
            overall_pass &= result["violations_s_eq_0"] == 0
        elif case == "chain":
            ref = (n - d - 3) * pv * pv * (1 - pv)
            emp = float((w_minus - (d - 1)).mean())
            result["reference_mean_excess"] = ref
            result["empirical_mean_excess"] = emp
            result["mean_ok"] = bool(abs(emp - ref) <= mean_rtol * ref)
            overall_pass &= result["mean_ok"]
        case_results[case] = result
    return TailCheckReport(
        which="4.3",
        n=n,
        d=d,
        alpha=alpha,
        p=pv,
        trials=trials,
        conditioned_events=trials * len(case_results),
        seed=seed,
        passed=bool(overall_pass),
        extras={"cases": case_results},
    )


# -- checks 5.1 / 5.2: neighbourhood-collection membership and face count ---


@dataclass(frozen=True)
class ScriptSParams:
    """Threshold parameters for the bounded-collection set.

    q = (1+eps) p and t = (1+n^c) p; a collection is a member when every
    center has |D| < n q and |D*| < (d/2) n^2 q^2 t.
    """

    n: int
    d: int
    p: float
    epsilon: float
    c: float

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.c <= 0:
            raise ValueError("c must be positive")

    @property
    def q(self) -> float:
        return (1 + self.epsilon) * self.p

    @property
    def t(self) -> float:
        return (1 + self.n ** self.c) * self.p

    @property
    def degree_threshold(self) -> float:
        return self.n * self.q

    @property
    def dstar_threshold(self) -> float:
        return 0.5 * self.d * self.n * self.n * self.q * self.q * self.t


def prescribed_c(alpha: float) -> float:
    """c = (max{0, 3 alpha - 2} + 2 alpha - 1) / 2, the midpoint choice."""
    return 0.5 * (max(0.0, 3 * alpha - 2) + (2 * alpha - 1))


def membership_check(x: Complex, params: ScriptSParams):
    """Test every center of one complex against both thresholds."""
    deg_thr = params.degree_threshold
    dstar_thr = params.dstar_threshold
    index = x.coface_index()
    for center, dfaces in index.items():
        if len(dfaces) >= deg_thr:
            return False, ("degree", center, len(dfaces))
        roster = sorted(x.neighbours(center))
        cset = set(center)
        dstar = set()
        for i, a in enumerate(roster):
            sa = set(a)
            for b in roster[i + 1 :]:
                u = sa.union(b)
                if len(u) == x.d + 1 and not cset.issubset(u):
                    tt = tuple(sorted(u))
                    if tt in x.faces:
                        dstar.add(tt)
        if len(dstar) >= dstar_thr:
            return False, ("dstar", center, len(dstar))
    return True, None


def check_lemma_5_1(
    n: int,
    d: int,
    alpha: Optional[float] = None,
    epsilon: float = 0.1,
    c: Optional[float] = None,
    trials: int = 100,
    seed: int = 0,
    p: Optional[float] = None,
    min_frequency: float = DEFAULT_MIN_FREQUENCY,
) -> TailCheckReport:
    """Frequency of full collection membership over sampled complexes."""
    pv = resolve_p(n, alpha, p)
    if c is None:
        if alpha is None:
            raise ValueError("c must be given when alpha is not")
        c = prescribed_c(alpha)
    if alpha is not None and c <= 3 * alpha - 2:
        raise ValueError("need c > 3*alpha - 2")
    params = ScriptSParams(n=n, d=d, p=pv, epsilon=epsilon, c=c)
    passes = []
    first_violations = {}
    for t in range(trials):
        x = sample_lm(LMParams(n=n, d=d, p=pv, seed=seed + 7919 * t))
        ok, violation = membership_check(x, params)
        passes.append(ok)
        if not ok:
            kind = violation[0]
            first_violations[kind] = first_violations.get(kind, 0) + 1
    freq = sum(passes) / trials
    return TailCheckReport(
        which="5.1",
        n=n,
        d=d,
        alpha=alpha,
        p=pv,
        trials=trials,
        conditioned_events=trials,
        seed=seed,
        tail_frequency=freq,
        bound_value=None,
        passed=bool(freq >= min_frequency),
        extras={
            "epsilon": epsilon,
            "c": c,
            "degree_threshold": params.degree_threshold,
            "dstar_threshold": params.dstar_threshold,
            "min_frequency": min_frequency,
            "violations_by_kind": first_violations,
            "per_trial": [bool(b) for b in passes],
        },
    )


def check_lemma_5_2(
    n: int,
    d: int,
    alpha: Optional[float] = None,
    epsilon: float = 0.1,
    trials: int = 100,
    seed: int = 0,
    p: Optional[float] = None,
    min_frequency: float = DEFAULT_MIN_FREQUENCY,
) -> TailCheckReport:
    """Frequency of the face count landing within (1 +- eps) of its mean."""
    pv = resolve_p(n, alpha, p)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    mu = comb(n, d + 1) * pv
    counts = np.zeros(trials, dtype=np.int64)
    for t in range(trials):
        x = sample_lm(LMParams(n=n, d=d, p=pv, seed=seed + 104729 * t))
        counts[t] = len(x.faces)
    inside = np.abs(counts - mu) < epsilon * mu
    freq = float(inside.mean())
    reference = 1 - 2 * math.exp(-(epsilon ** 2) / 3 * mu) if mu > 0 else 0.0
    return TailCheckReport(
        which="5.2",
        n=n,
        d=d,
        alpha=alpha,
        p=pv,
        trials=trials,
        conditioned_events=trials,
        seed=seed,
        tail_frequency=freq,
        bound_value=reference,
        passed=bool(freq >= min_frequency),
        extras={
            "epsilon": epsilon,
            "expected_count": mu,
            "mean_count": float(counts.mean()),
            "min_frequency": min_frequency,
        },
    )


# -- count bound (5.3) -------------------------------------------------------


@dataclass(frozen=True)
class CountBoundEvaluation:
    """Log-scale evaluation of the collection-count / sample-count ratio.

    ``log10_bound`` uses the n^d prefactor of the ratio statement;
    ``log10_bound_relabelings`` uses the (n^d)! prefactor from the failure
    argument.  Component logs are natural-log scale.
    """

    n: int
    d: int
    alpha: float
    epsilon: float
    c: float
    log10_bound: float
    log10_bound_relabelings: float
    log_collection_count: float
    log_min_binomial: float
    exponent_collection_term: float
    exponent_sample_term: float
    valid: bool
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "alpha": self.alpha,
            "epsilon": self.epsilon,
            "c": self.c,
            "log10_bound": self.log10_bound,
            "log10_bound_relabelings": self.log10_bound_relabelings,
            "log_collection_count": self.log_collection_count,
            "log_min_binomial": self.log_min_binomial,
            "exponent_collection_term": self.exponent_collection_term,
            "exponent_sample_term": self.exponent_sample_term,
            "valid": self.valid,
            "note": self.note,
        }


def log_binomial(a: float, b: float) -> float:
    """ln C(a, b) for real a >= b >= 0 via log-gamma."""
    if b < 0 or b > a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    return lgamma(a + 1) - lgamma(b + 1) - lgamma(a - b + 1)


def evaluate_count_bound(
    n_grid,
    d: int,
    alpha: float,
    epsilon: float = 0.1,
    c: Optional[float] = None,
) -> list:
    """Evaluate the counting-ratio upper bound on a grid of n values.

    The collection count is bounded by
        (n q * (d/2) n^2 q^2 t * C(d C(nq, 2), (d/2) n^2 q^2 t)) ^ C(n, d)
    and the minimal sample count from below by
        (1 / ((1-eps) p)) ^ ((1-eps) C(n, d+1) p),
    both evaluated in log space with log-gamma; the ratio decays whenever
    c < 2 alpha - 1, which the prescribed c always satisfies.
    """
    if not 0.5 < alpha < 1.0:
        raise ValueError("the count bound regime requires 1/2 < alpha < 1")
    if c is None:
        c = prescribed_c(alpha)
    if not c < 2 * alpha - 1:
        raise ValueError("need c < 2*alpha - 1 for the ratio to decay")
    out = []
    for n in n_grid:
        if n < 10:
            raise ValueError("grid values must be >= 10")
        p = n ** (-alpha)
        q = (1 + epsilon) * p
        t = (1 + n ** c) * p
        nq = n * q
        dstar_thr = 0.5 * d * n * n * q * q * t
        pool = d * nq * (nq - 1) / 2.0
        valid = True
        note = ""
        if dstar_thr > pool or nq < 1.0:
            valid = False
            note = "thresholds exceed the available pool at this n; bound undefined"
            log_s = float("nan")
        else:
            per_center = log(nq) + log(dstar_thr) + log_binomial(pool, dstar_thr)
            log_s = comb(n, d) * per_center
        m_star = (1 - epsilon) * comb(n, d + 1) * p
        log_min_binom = m_star * log(1.0 / ((1 - epsilon) * p))
        log_nd = d * log(n)
        log_nd_factorial = lgamma(float(n) ** d + 1.0)
        ln10 = log(10.0)
        out.append(
            CountBoundEvaluation(
                n=n,
                d=d,
                alpha=alpha,
                epsilon=epsilon,
                c=c,
                log10_bound=(log_nd + log_s - log_min_binom) / ln10 if valid else float("nan"),
                log10_bound_relabelings=(log_nd_factorial + log_s - log_min_binom) / ln10
                if valid
                else float("nan"),
                log_collection_count=log_s,
                log_min_binomial=log_min_binom,
                exponent_collection_term=c - 3 * alpha + d + 2,
                exponent_sample_term=1 + d - alpha,
                valid=valid,
                note=note,
            )
        )
    return out


# -- phase experiment ---------------------------------------------------------


@dataclass(frozen=True)
class PhaseCell:
    n: int
    alpha: float
    trials: int
    successes: int
    ambiguous_trials: int
    trial_records: tuple

    @property
    def rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0


def reconstruction_trial(n: int, d: int, alpha: float, base_seed: int, trial: int) -> dict:
    """One sample -> extract -> reconstruct -> compare run."""
    params = LMParams.from_alpha(n, d, alpha, seed=base_seed)
    x = sample_lm(params)
    coll = extract_collection(x, scramble_seed=base_seed + 1)
    y, report = reconstruct(coll)
    ok = verify_exact(x, y)
    return {
        "trial": trial,
        "seed": base_seed,
        "success": bool(ok),
        "true_faces": len(x.faces),
        "declared": report.declared,
        "ambiguous_faces": len(report.ambiguous_faces),
    }


def worker_cap() -> int:
    raw = os.environ.get("LM_SHOTGUN_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_trials(jobs) -> list:
    """Run (args tuple) jobs, in parallel when LM_SHOTGUN_THREADS > 1.

    Per-trial seeds are explicit and results are ordered by trial index,
    so scheduling cannot change any report.
    """
    workers = min(worker_cap(), len(jobs))
    if workers <= 1:
        results = [reconstruction_trial(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(reconstruction_trial, *zip(*jobs)))
    return sorted(results, key=lambda r: r["trial"])


def phase_experiment(n_grid, alpha_grid, d: int, trials: int, seed: int) -> list:
    """Reconstruction success rates over an (n, alpha) grid.

    Success means the reconstructed complex equals the sampled one
    face-for-face; fingerprint collisions can only add faces, so equality
    is the right notion even at p = 1 where every fingerprint collides.
    Ambiguity counts are recorded alongside.
    """
    if not n_grid or not alpha_grid:
        raise ValueError("grids must be nonempty")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    cells = []
    for n in n_grid:
        for alpha in alpha_grid:
            alpha_bits = int.from_bytes(struct.pack("<d", float(alpha)), "little")
            cell_tag = (int(n) * 0x9E3779B1 ^ alpha_bits) & 0xFFFFFFFF
            jobs = [
                (n, d, alpha, (int(seed) ^ cell_tag) + 15485863 * t, t)
                for t in range(trials)
            ]
            records = _run_trials(jobs)
            successes = sum(r["success"] for r in records)
            ambiguous = sum(r["ambiguous_faces"] > 0 for r in records)
            cells.append(
                PhaseCell(
                    n=n,
                    alpha=alpha,
                    trials=trials,
                    successes=successes,
                    ambiguous_trials=ambiguous,
                    trial_records=tuple(records),
                )
            )
    return cells


def phase_csv(cells) -> str:
    lines = ["n,alpha,trials,successes,rate"]
    for cell in cells:
        lines.append(
            f"{cell.n},{cell.alpha},{cell.trials},{cell.successes},{cell.rate}"
        )
    return "\n".join(lines) + "\n"
