"""Stochastic acceptability analysis over the hierarchical sorting engine.

Imprecise inputs (weights known only by rank or interval, evaluations known
as distributions) are handled by Monte Carlo simulation: each iteration
draws one concrete instantiation, runs the sorting engine and tallies the
resulting categories.  Dividing the tallies by the iteration count gives
category acceptability indices, overall and per tree node.

Reproducibility
---------------
Every iteration derives its own random substream from the root seed and the
iteration index, so results depend only on (problem, seed, iterations) and
never on how iterations are distributed over processes.  Within an
iteration the sampling order is fixed: profiles, preference thresholds,
evaluations, then sibling-group weights in tree order.
"""

from __future__ import annotations

import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .errors import (
    SAMPLING,
    THRESHOLD,
    BoundaryViolation,
    InputError,
    SamplingError,
)
from .flows import BatchEngine, pref_param_arrays
from .fuzzy import TFN
from .hierarchy import WeightSpec
from .preference import SHAPES, PreferenceSpec

if TYPE_CHECKING:  # pragma: no cover
    from .model_io import Problem

#: Cap on rejection-sampling candidate draws.
MAX_ATTEMPTS = 1_000_000

#: Cap on retries when drawing a single scalar value into bounds.
VALUE_ATTEMPTS = 10_000

_MASK64 = (1 << 64) - 1

VALUE_KINDS = ("crisp", "fuzzy", "linguistic", "interval", "normal")


@dataclass(frozen=True)
class StochasticValue:
    """One input quantity, deterministic or distributional.

    ``crisp``, ``fuzzy`` and ``linguistic`` values are deterministic (a
    linguistic term is resolved to its fuzzy number when the problem is
    parsed).  ``interval`` draws uniformly from [lo, hi] and ``normal``
    draws from N(mean, sd), optionally truncated to [lo, hi].
    """

    kind: str
    value: float = 0.0
    tfn: TFN | None = None
    term: str | None = None
    lo: float = 0.0
    hi: float = 0.0
    mean: float = 0.0
    sd: float = 0.0

    @classmethod
    def crisp(cls, value: float) -> "StochasticValue":
        return cls("crisp", value=float(value))

    @classmethod
    def fuzzy(cls, tfn: TFN) -> "StochasticValue":
        return cls("fuzzy", tfn=tfn)

    @classmethod
    def linguistic(cls, term: str, tfn: TFN) -> "StochasticValue":
        return cls("linguistic", term=term, tfn=tfn)

    @classmethod
    def interval(cls, lo: float, hi: float) -> "StochasticValue":
        if hi < lo:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        return cls("interval", lo=float(lo), hi=float(hi))

    @classmethod
    def normal(cls, mean: float, sd: float, lo: float = -np.inf, hi: float = np.inf) -> "StochasticValue":
        if sd <= 0:
            raise ValueError(f"normal spread must be positive, got {sd}")
        return cls("normal", mean=float(mean), sd=float(sd), lo=float(lo), hi=float(hi))

    @property
    def is_deterministic(self) -> bool:
        return self.kind in ("crisp", "fuzzy", "linguistic")

    def resolved(self) -> TFN:
        """The fuzzy number of a deterministic value."""
        if self.kind == "crisp":
            return TFN(self.value)
        if self.kind in ("fuzzy", "linguistic"):
            return self.tfn
        raise InputError(SAMPLING, f"{self.kind} value has no deterministic resolution")


@dataclass(frozen=True)
class PreferenceModel:
    """Preference shape of one elementary criterion with possibly imprecise
    thresholds.  ``q`` and ``p`` default to crisp zero; ``s`` stays crisp."""

    shape: str = "usual"
    direction: str = "maximize"
    q: StochasticValue = StochasticValue.crisp(0.0)
    p: StochasticValue = StochasticValue.crisp(0.0)
    s: float = 0.0

    @property
    def is_deterministic(self) -> bool:
        return self.q.is_deterministic and self.p.is_deterministic

    def resolve(self, q: float, p: float) -> PreferenceSpec:
        return PreferenceSpec(shape=self.shape, q=q, p=p, s=self.s, direction=self.direction)

    def resolve_deterministic(self) -> PreferenceSpec:
        return self.resolve(self.q.resolved().m, self.p.resolved().m)


def iteration_rng(seed: int, index: int) -> np.random.Generator:
    """Independent generator for one iteration, derived from the root seed."""
    ss = np.random.SeedSequence(entropy=seed & _MASK64, spawn_key=(index,))
    return np.random.Generator(np.random.PCG64(ss))


# ---------------------------------------------------------------------------
# Weight samplers
# ---------------------------------------------------------------------------

def sample_weights_missing(n: int, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Uniform weights on the standard simplex.

    Sorts n-1 uniform draws and takes consecutive gaps, which distributes
    the weight vector uniformly over {w >= 0, sum w = 1}.  With ``size``
    the result is a (size, n) matrix of independent draws.
    """
    if n < 1:
        raise ValueError("need at least one weight")
    shape = (n - 1,) if size is None else (size, n - 1)
    u = rng.random(shape)
    u.sort(axis=-1)
    return np.diff(u, axis=-1, prepend=0.0, append=1.0)


def _rank_groups(ranks: Sequence[int]) -> list[np.ndarray]:
    """Member indices per rank, most important rank first."""
    by_rank: dict[int, list[int]] = {}
    for i, r in enumerate(ranks):
        by_rank.setdefault(r, []).append(i)
    return [np.array(by_rank[r], dtype=np.int64) for r in sorted(by_rank)]


def _apply_rank_order(sorted_desc: np.ndarray, groups: list[np.ndarray]) -> np.ndarray:
    """Assign descending simplex draws to criteria by rank group.

    A group of g criteria takes the next g sorted values; ties within the
    group all receive their arithmetic mean, so equally ranked criteria get
    exactly equal weights.
    """
    out = np.empty_like(sorted_desc)
    pos = 0
    for members in groups:
        g = len(members)
        out[..., members] = sorted_desc[..., pos : pos + g].mean(axis=-1, keepdims=True)
        pos += g
    return out


def _collect_simplex(n, rng, accept, need, max_attempts, describe):
    """Rejection-sample uniform simplex points until ``need`` rows pass."""
    rows = []
    got = 0
    attempts = 0
    while got < need:
        if attempts >= max_attempts:
            raise SamplingError(
                f"no admissible weight vector after {attempts} draws: {describe}"
            )
        batch = min(max(64, 2 * (need - got)), 8192, max_attempts - attempts)
        cand = sample_weights_missing(n, rng, size=batch)
        attempts += batch
        good = cand[accept(cand)]
        if len(good):
            rows.append(good[: need - got])
            got += len(rows[-1])
    return np.concatenate(rows, axis=0)


def sample_weights_ordinal(
    ranks: Sequence[int | None],
    rng: np.random.Generator,
    size: int | None = None,
    max_attempts: int = MAX_ATTEMPTS,
) -> np.ndarray:
    """Weights consistent with an importance ranking.

    A uniform simplex draw is sorted in decreasing order and handed out by
    rank (rank 1 gets the largest value).  Ties share the mean of their
    block of sorted values.  ``None`` ranks leave criteria unconstrained,
    which is handled by rejection: uniform draws are kept only when every
    ranked pair is ordered correctly, then ties are averaged.
    """
    ranks = list(ranks)
    n = len(ranks)
    if all(r is None for r in ranks):
        return sample_weights_missing(n, rng, size)
    if any(r is not None and (r != int(r) or r < 1) for r in ranks):
        raise ValueError(f"ranks must be integers >= 1 or None, got {ranks}")

    if None not in ranks:
        groups = _rank_groups(ranks)
        v = sample_weights_missing(n, rng, size)
        v = np.flip(np.sort(v, axis=-1), axis=-1)
        return _apply_rank_order(v, groups)

    # Partial ranking: rejection on the ordered pairs, then tie averaging.
    groups = _rank_groups([r for r in ranks if r is not None])
    ranked = np.array([i for i, r in enumerate(ranks) if r is not None], dtype=np.int64)
    member_groups = [ranked[g] for g in groups]

    def accept(cand: np.ndarray) -> np.ndarray:
        ok = np.ones(len(cand), dtype=bool)
        for better, worse in zip(member_groups, member_groups[1:]):
            ok &= cand[:, better].min(axis=-1) >= cand[:, worse].max(axis=-1)
        return ok

    need = 1 if size is None else size
    out = _collect_simplex(n, rng, accept, need, max_attempts, f"partial ranks {ranks}")
    for members in member_groups:
        out[:, members] = out[:, members].mean(axis=-1, keepdims=True)
    return out[0] if size is None else out


def sample_weights_interval(
    bounds: Sequence[Sequence[float]],
    rng: np.random.Generator,
    size: int | None = None,
    max_attempts: int = MAX_ATTEMPTS,
) -> np.ndarray:
    """Uniform simplex weights restricted to per-criterion [lo, hi] bounds."""
    lo = np.array([b[0] for b in bounds])
    hi = np.array([b[1] for b in bounds])

    def accept(cand: np.ndarray) -> np.ndarray:
        return ((cand >= lo) & (cand <= hi)).all(axis=-1)

    need = 1 if size is None else size
    out = _collect_simplex(
        len(bounds), rng, accept, need, max_attempts,
        f"bounds {[list(b) for b in bounds]}",
    )
    return out[0] if size is None else out


def sample_group_weights(spec: WeightSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    """One weight vector for a sibling group, honoring its specification."""
    if spec.kind == "deterministic":
        return np.array(spec.values)
    if spec.kind == "ordinal":
        return sample_weights_ordinal(spec.values, rng)
    if spec.kind == "interval":
        return sample_weights_interval(spec.values, rng)
    return sample_weights_missing(n, rng)


# ---------------------------------------------------------------------------
# Value, threshold and profile samplers
# ---------------------------------------------------------------------------

def sample_value(
    value: StochasticValue,
    rng: np.random.Generator,
    bounds: tuple[float, float] | None = None,
    max_attempts: int = VALUE_ATTEMPTS,
) -> TFN:
    """Draw one concrete evaluation.

    Deterministic kinds resolve without consuming randomness.  Stochastic
    kinds are redrawn until they land inside ``bounds`` (when given), which
    keeps sampled evaluations within the span of the limiting profiles.
    """
    if value.is_deterministic:
        return value.resolved()
    lo, hi = bounds if bounds is not None else (-np.inf, np.inf)
    if value.kind == "interval":
        vlo, vhi = max(value.lo, lo), min(value.hi, hi)
        if vlo > vhi:
            raise SamplingError(
                f"interval [{value.lo}, {value.hi}] cannot reach bounds [{lo}, {hi}]"
            )
        return TFN(float(rng.uniform(vlo, vhi)))
    # normal, truncated to the declared [lo, hi] intersected with bounds
    vlo, vhi = max(value.lo, lo), min(value.hi, hi)
    for _ in range(max_attempts):
        draw = float(rng.normal(value.mean, value.sd))
        if vlo <= draw <= vhi:
            return TFN(draw)
    raise SamplingError(
        f"normal({value.mean}, {value.sd}) produced no draw inside "
        f"[{vlo}, {vhi}] after {max_attempts} attempts"
    )


def sample_thresholds(
    q_spec: StochasticValue,
    p_spec: StochasticValue,
    rng: np.random.Generator,
    strict: bool = False,
    max_attempts: int = VALUE_ATTEMPTS,
) -> tuple[float, float]:
    """Draw an (indifference, preference) threshold pair with q <= p.

    Pairs violating the ordering are redrawn; ``strict`` additionally
    requires q < p, which the linear shape needs.
    """
    if q_spec.is_deterministic and p_spec.is_deterministic:
        q, p = q_spec.resolved().m, p_spec.resolved().m
        if q > p or (strict and q >= p):
            need = "q < p" if strict else "q <= p"
            raise InputError(THRESHOLD, f"thresholds must satisfy {need}, got q={q}, p={p}")
        return q, p
    for _ in range(max_attempts):
        q = sample_value(q_spec, rng).m
        p = sample_value(p_spec, rng).m
        if q < p or (q == p and not strict):
            return q, p
    raise SamplingError(
        f"no admissible threshold pair (q <= p) after {max_attempts} attempts"
    )


def _profile_column_ok(column: np.ndarray, maximize: bool) -> bool:
    """Dominance within one criterion: modes strictly ordered, supports
    non-overlapping, best profile first."""
    sign = 1.0 if maximize else -1.0
    for h in range(len(column) - 1):
        better, worse = column[h], column[h + 1]
        if sign * (better[0] - worse[0]) <= 0:
            return False
        if maximize:
            if better[0] - better[1] < worse[0] + worse[2]:
                return False
        elif worse[0] - worse[1] < better[0] + better[2]:
            return False
    return True


def sample_profiles(
    profile_specs: Sequence[Sequence[StochasticValue]],
    models: Sequence[PreferenceModel],
    rng: np.random.Generator,
    max_attempts: int = VALUE_ATTEMPTS,
) -> np.ndarray:
    """Draw the (k+1, n_el, 3) profile array, best profile first.

    Deterministic columns pass through; columns with stochastic entries are
    redrawn until successive profiles dominate each other.
    """
    c = len(profile_specs)
    n_el = len(profile_specs[0])
    out = np.empty((c, n_el, 3))
    for t in range(n_el):
        spec_col = [profile_specs[h][t] for h in range(c)]
        maximize = models[t].direction == "maximize"
        if all(v.is_deterministic for v in spec_col):
            for h, v in enumerate(spec_col):
                f = v.resolved()
                out[h, t] = (f.m, f.alpha, f.beta)
            continue
        for attempt in range(max_attempts):
            col = np.empty((c, 3))
            for h, v in enumerate(spec_col):
                f = sample_value(v, rng)
                col[h] = (f.m, f.alpha, f.beta)
            if _profile_column_ok(col, maximize):
                out[:, t] = col
                break
        else:
            raise SamplingError(
                f"no dominance-respecting profile draw on criterion {t} "
                f"after {max_attempts} attempts"
            )
    return out


# ---------------------------------------------------------------------------
# The simulation loop
# ---------------------------------------------------------------------------

@dataclass
class AcceptabilityResult:
    """Category acceptability indices from one analysis run.

    ``category_index[i, h]`` is the share of iterations assigning
    alternative i to category h+1 under the configured rule;
    ``node_index[r, i, h]`` is the same for the net-style assignment under
    tree node r (in depth-first ``node_paths`` order).  Whenever profile
    flows fail to bracket an alternative, that one tally cell (overall or
    per-node) is skipped and ``boundary_violations`` is incremented, so a
    row sums to less than one exactly when some of its draws went
    unbracketed.
    """

    categories: tuple[str, ...]
    alternatives: tuple[str, ...]
    category_index: np.ndarray
    node_paths: tuple[tuple[int, ...], ...]
    node_index: np.ndarray
    iterations: int
    seed: int
    rule: str
    defuzz: str
    boundary_violations: int = 0


class ProblemRuntime:
    """Precomputed sampling and evaluation state for one problem."""

    def __init__(self, problem: "Problem", rule: str, defuzz: str, seed: int, strict: bool):
        self.problem = problem
        self.rule = rule
        self.defuzz = defuzz
        self.seed = seed
        self.strict = strict
        tree = problem.tree
        self.tree = tree
        self.m = len(problem.alternative_names)
        self.c = len(problem.profile_specs)
        self.k = self.c - 1
        self.n_nodes = len(tree.nodes)
        self.engine = BatchEngine(tree, self.m, self.c)
        self.groups = [
            (np.array([tree.node_index[p] for p in g.members], dtype=np.int64), g.spec)
            for g in tree.sibling_groups()
        ]
        self.eval_specs = problem.evaluation_specs  # (m, n_el) StochasticValue
        self.profile_specs = problem.profile_specs  # (c, n_el) StochasticValue
        self.models = problem.preference_models

        self.data_deterministic = (
            all(v.is_deterministic for row in self.eval_specs for v in row)
            and all(v.is_deterministic for row in self.profile_specs for v in row)
            and all(mdl.is_deterministic for mdl in self.models)
        )
        self.static_components = None
        if self.data_deterministic:
            prefs = [mdl.resolve_deterministic() for mdl in self.models]
            self.static_components = self.engine.pref_components(
                pref_param_arrays(prefs),
                self._resolve_matrix(self.eval_specs),
                self._resolve_matrix(self.profile_specs),
                defuzz,
            )
        else:
            # q/p entries of stochastic slots are overwritten every iteration
            self.base_params = (
                np.array([SHAPES.index(mdl.shape) for mdl in self.models], dtype=np.int64),
                np.array([mdl.q.resolved().m if mdl.q.is_deterministic else 0.0
                          for mdl in self.models]),
                np.array([mdl.p.resolved().m if mdl.p.is_deterministic else 0.0
                          for mdl in self.models]),
                np.array([mdl.s for mdl in self.models]),
                np.array([mdl.direction == "maximize" for mdl in self.models]),
            )
            self.stochastic_threshold_slots = [
                t for t, mdl in enumerate(self.models) if not mdl.is_deterministic
            ]

    @staticmethod
    def _resolve_matrix(specs) -> np.ndarray:
        out = np.empty((len(specs), len(specs[0]), 3))
        for i, row in enumerate(specs):
            for j, v in enumerate(row):
                f = v.resolved()
                out[i, j] = (f.m, f.alpha, f.beta)
        return out

    def _sample_components(self, rng: np.random.Generator) -> np.ndarray:
        """Draw profiles, thresholds and evaluations for one iteration."""
        profiles = sample_profiles(self.profile_specs, self.models, rng)
        codes, q, p, s, maximize = self.base_params
        if self.stochastic_threshold_slots:
            q, p = q.copy(), p.copy()
            for t in self.stochastic_threshold_slots:
                mdl = self.models[t]
                q[t], p[t] = sample_thresholds(
                    mdl.q, mdl.p, rng, strict=(mdl.shape == "linear")
                )
        evals = np.empty((self.m, profiles.shape[1], 3))
        lo = (profiles[..., 0] - profiles[..., 1]).min(axis=0)
        hi = (profiles[..., 0] + profiles[..., 2]).max(axis=0)
        for i, row in enumerate(self.eval_specs):
            for t, v in enumerate(row):
                f = sample_value(v, rng, bounds=(lo[t], hi[t]))
                evals[i, t] = (f.m, f.alpha, f.beta)
        return self.engine.pref_components((codes, q, p, s, maximize), evals, profiles, self.defuzz)

    def simulate(self, start: int, count: int, chunk: int = 256):
        """Tally assignments for iterations [start, start + count)."""
        m, k, n_nodes = self.m, self.k, self.n_nodes
        cat_hits = np.zeros(m * k, dtype=np.int64)
        node_hits = np.zeros(n_nodes * m * k, dtype=np.int64)
        violations = 0
        node_ids = np.arange(n_nodes)[:, None, None]
        alt_ids = np.arange(m)
        for block in range(start, start + count, chunk):
            bs = min(chunk, start + count - block)
            w = np.empty((bs, self.n_nodes))
            if self.data_deterministic:
                components = self.static_components
            else:
                components = np.empty((bs,) + self.static_shape)
            for j in range(bs):
                rng = iteration_rng(self.seed, block + j)
                if not self.data_deterministic:
                    components[j] = self._sample_components(rng)
                for idx, spec in self.groups:
                    w[j, idx] = sample_group_weights(spec, len(idx), rng)
            values = self.engine.node_values(components, w)
            bf = self.engine.flows(values)
            self.engine.check_ordering(bf)

            cat, valid = self.engine.assign_overall(bf, self.rule)
            ncat, nvalid = self.engine.assign_nodes(bf)
            bad = int((~valid).sum() + (~nvalid).sum())
            if bad and self.strict:
                raise BoundaryViolation(
                    f"flow outside the profile span in iteration block "
                    f"starting at {block} (strict mode)"
                )
            violations += bad
            flat = alt_ids * k + (cat - 1)
            cat_hits += np.bincount(flat[valid], minlength=m * k)
            nflat = (node_ids * m + alt_ids) * k + (ncat - 1)
            node_hits += np.bincount(nflat[nvalid], minlength=n_nodes * m * k)
        return cat_hits, node_hits, violations

    @property
    def static_shape(self) -> tuple[int, int]:
        return (self.engine.n_pairs, self.tree.n_elementary)


_WORKER: dict = {}


def _init_worker(problem, rule, defuzz, seed, strict):
    _WORKER["state"] = ProblemRuntime(problem, rule, defuzz, seed, strict)


def _run_range(span):
    start, count = span
    return _WORKER["state"].simulate(start, count)


def run_smaa(
    problem: "Problem",
    iterations: int = 10_000,
    seed: int = 0,
    rule: str = "net",
    threads: int = 1,
    defuzz: str = "centroid",
    strict: bool = False,
) -> AcceptabilityResult:
    """Monte Carlo category acceptability analysis.

    Parameters
    ----------
    problem :
        A parsed sorting problem.
    iterations :
        Number of Monte Carlo draws.
    seed :
        Root seed; any Python integer, masked to 64 bits.
    rule :
        Assignment rule for the overall index: ``positive``, ``negative``
        or ``net``.  Per-node indices always use the net-style rule.
    threads :
        Worker processes.  Results are identical for any thread count.
    strict :
        Raise on the first boundary violation instead of recording it.
    """
    if iterations < 1:
        raise ValueError("need at least one iteration")
    if rule not in ("positive", "negative", "net"):
        raise ValueError(f"unknown assignment rule {rule!r}")
    state = ProblemRuntime(problem, rule, defuzz, seed, strict)
    m, k, n_nodes = state.m, state.k, state.n_nodes

    spans = _split(iterations, threads)
    if len(spans) == 1:
        parts = [state.simulate(*spans[0])]
    else:
        try:
            ctx = multiprocessing.get_context("fork")
            with ProcessPoolExecutor(
                max_workers=len(spans),
                mp_context=ctx,
                initializer=_init_worker,
                initargs=(problem, rule, defuzz, seed, strict),
            ) as pool:
                parts = list(pool.map(_run_range, spans))
        except ValueError:
            # no fork on this platform; fall back to in-process execution
            parts = [state.simulate(0, iterations)]

    cat_hits = np.zeros(m * k, dtype=np.int64)
    node_hits = np.zeros(n_nodes * m * k, dtype=np.int64)
    violations = 0
    for ch, nh, v in parts:
        cat_hits += ch
        node_hits += nh
        violations += v

    return AcceptabilityResult(
        categories=tuple(problem.categories),
        alternatives=tuple(problem.alternative_names),
        category_index=cat_hits.reshape(m, k) / iterations,
        node_paths=tuple(n.path for n in problem.tree.nodes),
        node_index=node_hits.reshape(n_nodes, m, k) / iterations,
        iterations=iterations,
        seed=seed,
        rule=rule,
        defuzz=defuzz,
        boundary_violations=violations,
    )


def _split(iterations: int, threads: int) -> list[tuple[int, int]]:
    """Contiguous iteration ranges, one per worker."""
    threads = max(1, min(threads, iterations))
    base, extra = divmod(iterations, threads)
    spans = []
    start = 0
    for i in range(threads):
        count = base + (1 if i < extra else 0)
        spans.append((start, count))
        start += count
    return spans


def deterministic_result(
    problem: "Problem",
    rule: str = "net",
    defuzz: str = "centroid",
    strict: bool = False,
) -> AcceptabilityResult:
    """Single engine run with all inputs fixed (zero-variance analysis).

    Requires deterministic weights, evaluations, profiles and thresholds;
    the result's indices are unit rows.
    """
    weights = problem.tree.deterministic_weights()
    state = ProblemRuntime(problem, rule, defuzz, seed=0, strict=strict)
    if not state.data_deterministic:
        raise InputError(
            SAMPLING,
            "deterministic run requires fully deterministic evaluations, "
            "profiles and thresholds",
        )
    w = np.array([[weights[n.path] for n in problem.tree.nodes]])
    values = state.engine.node_values(state.static_components, w)
    bf = state.engine.flows(values)
    state.engine.check_ordering(bf)
    cat, valid = state.engine.assign_overall(bf, rule)
    ncat, nvalid = state.engine.assign_nodes(bf)
    bad = int((~valid).sum() + (~nvalid).sum())
    if bad and strict:
        raise BoundaryViolation("flow outside the profile span (strict mode)")

    m, k, n_nodes = state.m, state.k, state.n_nodes
    category_index = np.zeros((m, k))
    for i in range(m):
        if valid[0, i]:
            category_index[i, cat[0, i] - 1] = 1.0
    node_index = np.zeros((n_nodes, m, k))
    for r in range(n_nodes):
        for i in range(m):
            if nvalid[r, 0, i]:
                node_index[r, i, ncat[r, 0, i] - 1] = 1.0
    return AcceptabilityResult(
        categories=tuple(problem.categories),
        alternatives=tuple(problem.alternative_names),
        category_index=category_index,
        node_paths=tuple(n.path for n in problem.tree.nodes),
        node_index=node_index,
        iterations=1,
        seed=0,
        rule=rule,
        defuzz=defuzz,
        boundary_violations=bad,
    )
