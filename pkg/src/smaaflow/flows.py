"""Hierarchical FlowSort: outranking, flows and category assignment.

Alternatives are sorted into ordered categories C_1 (best) through C_k by
comparing each alternative against k+1 limiting profiles r_1 (best) through
r_{k+1}.  Preference degrees on elementary criteria are aggregated bottom-up
through the criteria tree with the node weights, defuzzified at the root
into an outranking degree, and turned into positive, negative and net flows
within the reference set {r_1, ..., r_{k+1}, x}.  Flows of the profiles
bracket the flow of the alternative, which pins down its category.

Two implementations live here.  The module-level functions follow the
recursive definitions one pair at a time and are the readable reference
path.  :class:`BatchEngine` evaluates whole batches of weight vectors at
once over a fixed pair layout; the acceptability analysis loop runs on it.
Both must agree to floating-point accuracy, which the test suite checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .errors import (
    PROFILE_DOMINANCE,
    PROFILE_OVERLAP,
    SCHEMA,
    BoundaryViolation,
    InputError,
    InvariantError,
)
from .fuzzy import TFN
from .hierarchy import CriteriaTree
from .preference import SHAPES, PreferenceSpec, fuzzy_preference

#: Assignment rules: which flow brackets the alternative between profiles.
RULES = ("positive", "negative", "net")

#: Slack allowed when asserting that profile flows are ordered.
ORDERING_TOL = 1e-9


class FlowTriple(NamedTuple):
    plus: float
    minus: float
    net: float


@dataclass(frozen=True)
class FlowBundle:
    """Flows of one alternative and of the profiles in its reference set."""

    alternative: FlowTriple
    profiles: tuple[FlowTriple, ...]


@dataclass(frozen=True)
class Assignment:
    """Categories (1-based, 1 = best) under the three assignment rules."""

    by_positive: int
    by_negative: int
    by_net: int


@dataclass(frozen=True)
class SingleCriterionFlows:
    """Net flows restricted to one subtree of the criteria hierarchy."""

    net: float
    profile_net: tuple[float, ...]


class ProfileSet:
    """The k+1 limiting profiles, best first, per elementary criterion.

    ``levels[h][t]`` is the evaluation of profile r_{h+1} on the t-th
    elementary criterion in tree order.
    """

    def __init__(self, levels: Sequence[Sequence[TFN]]):
        rows = tuple(tuple(row) for row in levels)
        if len(rows) < 2:
            raise InputError(SCHEMA, "need at least two limiting profiles", "profiles")
        if len({len(row) for row in rows}) != 1:
            raise InputError(SCHEMA, "profile rows differ in length", "profiles")
        self.levels = rows

    @property
    def category_count(self) -> int:
        return len(self.levels) - 1

    @property
    def n_criteria(self) -> int:
        return len(self.levels[0])

    def validate(self, prefs: Sequence[PreferenceSpec]) -> None:
        """Check that successive profiles strictly dominate each other.

        Modes must be strictly ordered in the preference direction of every
        elementary criterion, and the supports of adjacent profiles may
        touch but not overlap.
        """
        if len(prefs) != self.n_criteria:
            raise InputError(SCHEMA, "profiles and preference specs differ in length")
        for t, spec in enumerate(prefs):
            sign = 1.0 if spec.direction == "maximize" else -1.0
            for h in range(self.category_count):
                better, worse = self.levels[h][t], self.levels[h + 1][t]
                if sign * (better.m - worse.m) <= 0:
                    raise InputError(
                        PROFILE_DOMINANCE,
                        f"profile {h + 1} does not dominate profile {h + 2} "
                        f"on criterion {t} ({better.m} vs {worse.m}, {spec.direction})",
                    )
                if sign > 0:
                    gap = better.support[0] - worse.support[1]
                else:
                    gap = worse.support[0] - better.support[1]
                if gap < 0:
                    raise InputError(
                        PROFILE_OVERLAP,
                        f"supports of profiles {h + 1} and {h + 2} overlap "
                        f"on criterion {t}",
                    )


def _check_vector(tree: CriteriaTree, name: str, values: Sequence) -> None:
    if len(values) != tree.n_elementary:
        raise InputError(
            SCHEMA,
            f"{name} has {len(values)} entries, tree has {tree.n_elementary} "
            "elementary criteria",
        )


def subtree_preference(
    tree: CriteriaTree,
    path: tuple[int, ...],
    weights: Mapping[tuple[int, ...], float],
    prefs: Sequence[PreferenceSpec],
    a: Sequence[TFN],
    b: Sequence[TFN],
) -> TFN:
    """Fuzzy preference of ``a`` over ``b`` aggregated within one subtree.

    For an elementary node this is the fuzzy preference degree on that
    criterion; for an internal node it is the weighted sum over children.
    The node's own weight is not applied.
    """
    node = tree.node(path)
    if node.is_elementary:
        slot = tree.elementary_index[path]
        return fuzzy_preference(prefs[slot], a[slot], b[slot])
    total = TFN(0.0)
    for child in node.children:
        total = total + weights[child.path] * subtree_preference(
            tree, child.path, weights, prefs, a, b
        )
    return total


def fuzzy_outranking(
    tree: CriteriaTree,
    weights: Mapping[tuple[int, ...], float],
    prefs: Sequence[PreferenceSpec],
    a: Sequence[TFN],
    b: Sequence[TFN],
) -> TFN:
    """Fuzzy aggregated preference of ``a`` over ``b`` across the whole tree."""
    _check_vector(tree, "evaluation vector", a)
    _check_vector(tree, "evaluation vector", b)
    _check_vector(tree, "preference list", prefs)
    total = TFN(0.0)
    for node in tree.first_level:
        total = total + weights[node.path] * subtree_preference(
            tree, node.path, weights, prefs, a, b
        )
    return total


def outranking_degree(
    tree: CriteriaTree,
    weights: Mapping[tuple[int, ...], float],
    prefs: Sequence[PreferenceSpec],
    a: Sequence[TFN],
    b: Sequence[TFN],
    defuzz: str = "centroid",
) -> float:
    """Crisp outranking degree pi(a, b), the defuzzified aggregate."""
    return fuzzy_outranking(tree, weights, prefs, a, b).defuzzify(defuzz)


def _pi_table(tree, weights, prefs, profiles, x, defuzz):
    """Outranking degrees between all distinct elements of {x} u profiles.

    Element 0 is the alternative, elements 1..k+1 the profiles best first.
    """
    elems = [tuple(x)] + [row for row in profiles.levels]
    n = len(elems)
    pi = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j:
                pi[i, j] = outranking_degree(tree, weights, prefs, elems[i], elems[j], defuzz)
    return pi


def _bundle_from_pi(pi: np.ndarray) -> FlowBundle:
    c = pi.shape[0] - 1  # number of profiles
    alt = FlowTriple(
        plus=float(pi[0, 1:].sum() / c),
        minus=float(pi[1:, 0].sum() / c),
        net=float((pi[0, 1:].sum() - pi[1:, 0].sum()) / c),
    )
    rows = []
    for h in range(1, c + 1):
        others = [j for j in range(1, c + 1) if j != h]
        plus = (pi[h, others].sum() + pi[h, 0]) / c
        minus = (pi[others, h].sum() + pi[0, h]) / c
        rows.append(FlowTriple(float(plus), float(minus), float(plus - minus)))
    return FlowBundle(alternative=alt, profiles=tuple(rows))


def flow_bundle(
    tree: CriteriaTree,
    weights: Mapping[tuple[int, ...], float],
    prefs: Sequence[PreferenceSpec],
    profiles: ProfileSet,
    x: Sequence[TFN],
    defuzz: str = "centroid",
) -> FlowBundle:
    """Flows of alternative ``x`` and of every profile, within the reference
    set R = {r_1, ..., r_{k+1}, x}.

    Each flow averages outranking degrees against the other members of R,
    so the normalizer is |R| - 1 = k + 1; the alternative is compared to the
    profiles only, each profile to its peers and to the alternative.
    """
    _check_vector(tree, "alternative", x)
    if profiles.n_criteria != tree.n_elementary:
        raise InputError(SCHEMA, "profiles and tree differ in elementary count")
    profiles.validate(prefs)
    pi = _pi_table(tree, weights, prefs, profiles, x, defuzz)
    return _bundle_from_pi(pi)


def alternative_flows(tree, weights, prefs, profiles, x, defuzz="centroid") -> FlowTriple:
    """Positive, negative and net flow of one alternative."""
    return flow_bundle(tree, weights, prefs, profiles, x, defuzz).alternative


def profile_flows(tree, weights, prefs, profiles, x, defuzz="centroid") -> tuple[FlowTriple, ...]:
    """Flows of every profile relative to alternative ``x``, best first."""
    return flow_bundle(tree, weights, prefs, profiles, x, defuzz).profiles


def _check_ordering(values: Sequence[float], decreasing: bool, what: str) -> None:
    for a, b in zip(values, values[1:]):
        drift = (b - a) if decreasing else (a - b)
        if drift > ORDERING_TOL:
            raise InvariantError(
                f"{what} of successive profiles are not "
                f"{'non-increasing' if decreasing else 'non-decreasing'}: {list(values)}"
            )


def _assign_net_pattern(alt: float, prof: Sequence[float], what: str) -> int:
    """Category via the bracketing rule shared by the positive and net rules.

    C_h requires prof[h-1] >= alt > prof[h]; an alternative whose flow ties a
    profile's flow lands in the upper category.
    """
    _check_ordering(prof, decreasing=True, what=what)
    if alt > prof[0] or alt <= prof[-1]:
        raise BoundaryViolation(
            f"{what} {alt} falls outside the profile span [{prof[-1]}, {prof[0]}]"
        )
    return 1 + sum(1 for v in prof[1:] if v >= alt)


def assign(bundle: FlowBundle, rule: str = "net") -> int:
    """Category of the bundled alternative under one assignment rule.

    Raises
    ------
    BoundaryViolation
        If the alternative's flow falls outside the span of the profile
        flows, i.e. the profiles do not bracket it.
    """
    if rule not in RULES:
        raise ValueError(f"unknown assignment rule {rule!r}")
    if rule == "negative":
        alt = bundle.alternative.minus
        prof = [t.minus for t in bundle.profiles]
        _check_ordering(prof, decreasing=False, what="negative flows")
        if alt <= prof[0] or alt > prof[-1]:
            raise BoundaryViolation(
                f"negative flow {alt} falls outside the profile span "
                f"({prof[0]}, {prof[-1]}]"
            )
        return sum(1 for v in prof[:-1] if v < alt)
    if rule == "positive":
        return _assign_net_pattern(
            bundle.alternative.plus, [t.plus for t in bundle.profiles], "positive flows"
        )
    return _assign_net_pattern(
        bundle.alternative.net, [t.net for t in bundle.profiles], "net flows"
    )


def assignments(bundle: FlowBundle) -> Assignment:
    """Categories under all three rules."""
    return Assignment(
        by_positive=assign(bundle, "positive"),
        by_negative=assign(bundle, "negative"),
        by_net=assign(bundle, "net"),
    )


def single_criterion_flows(
    tree: CriteriaTree,
    weights: Mapping[tuple[int, ...], float],
    prefs: Sequence[PreferenceSpec],
    profiles: ProfileSet,
    x: Sequence[TFN],
    path: tuple[int, ...],
    defuzz: str = "centroid",
) -> SingleCriterionFlows:
    """Net flows of ``x`` and the profiles under one subtree only.

    The subtree's aggregated preference degrees (without the node's own
    weight) replace the overall outranking degree in the net-flow formulas,
    which provides a per-criterion diagnostic at any level of the tree.
    """
    _check_vector(tree, "alternative", x)
    profiles.validate(prefs)
    c = len(profiles.levels)
    elems = [tuple(x)] + [row for row in profiles.levels]
    deg = np.zeros((c + 1, c + 1))
    for i in range(c + 1):
        for j in range(c + 1):
            if i != j:
                deg[i, j] = subtree_preference(
                    tree, path, weights, prefs, elems[i], elems[j]
                ).defuzzify(defuzz)
    net = float((deg[0, 1:].sum() - deg[1:, 0].sum()) / c)
    prof = []
    for h in range(1, c + 1):
        others = [j for j in range(1, c + 1) if j != h]
        val = (deg[h, others].sum() - deg[others, h].sum() + deg[h, 0] - deg[0, h]) / c
        prof.append(float(val))
    return SingleCriterionFlows(net=net, profile_net=tuple(prof))


def single_criterion_assignment(flows: SingleCriterionFlows) -> int:
    """Category suggested by one subtree's net flows."""
    return _assign_net_pattern(flows.net, flows.profile_net, "single-criterion net flows")


# ---------------------------------------------------------------------------
# Batched evaluation
# ---------------------------------------------------------------------------

def tfn_matrix(values: Sequence[TFN]) -> np.ndarray:
    """Stack fuzzy numbers into an (n, 3) array of (m, alpha, beta) rows."""
    return np.array([[v.m, v.alpha, v.beta] for v in values], dtype=float)


def pref_param_arrays(prefs: Sequence[PreferenceSpec]):
    """Split preference specs into the arrays the vectorized path consumes."""
    codes = np.array([SHAPES.index(p.shape) for p in prefs], dtype=np.int64)
    q = np.array([p.q for p in prefs])
    p_ = np.array([p.p for p in prefs])
    s = np.array([p.s for p in prefs])
    maximize = np.array([p.direction == "maximize" for p in prefs])
    return codes, q, p_, s, maximize


def shape_preference(codes, q, p, s, d):
    """Vectorized preference degrees; criteria vary along the last axis of ``d``."""
    out = np.zeros(d.shape)
    for code in range(len(SHAPES)):
        sel = codes == code
        if not sel.any():
            continue
        dv = d[..., sel]
        if code == 0:  # usual
            out[..., sel] = (dv > 0.0).astype(float)
        elif code == 1:  # u-shape
            out[..., sel] = (dv > q[sel]).astype(float)
        elif code == 2:  # v-shape
            out[..., sel] = np.clip(dv / p[sel], 0.0, 1.0)
        elif code == 3:  # level
            out[..., sel] = 0.5 * (dv > q[sel]) + 0.5 * (dv > p[sel])
        elif code == 4:  # linear
            out[..., sel] = np.clip((dv - q[sel]) / (p[sel] - q[sel]), 0.0, 1.0)
        else:  # gaussian
            out[..., sel] = np.where(
                dv > 0.0, 1.0 - np.exp(-(dv * dv) / (2.0 * s[sel] * s[sel])), 0.0
            )
    return out


@dataclass
class BatchFlows:
    """Flow arrays for a batch of weight vectors.

    Node axes cover every tree node plus, at index -1, the whole tree.
    ``node_alt_net`` is (nodes+1, batch, m); ``node_prof_net`` is
    (nodes+1, batch, m, k+1).  The positive/negative pairs exist for the
    root only, shaped (batch, m) and (batch, m, k+1).
    """

    node_alt_net: np.ndarray
    node_prof_net: np.ndarray
    alt_plus: np.ndarray
    alt_minus: np.ndarray
    prof_plus: np.ndarray
    prof_minus: np.ndarray


def net_style_bracket(alt: np.ndarray, prof: np.ndarray):
    """Vectorized bracketing for decreasing profile flows.

    Returns 1-based categories and a validity mask; invalid entries fall
    outside the profile span.
    """
    valid = (alt <= prof[..., 0]) & (alt > prof[..., -1])
    cat = 1 + (prof[..., 1:] >= alt[..., None]).sum(axis=-1)
    return cat, valid


def negative_bracket(alt: np.ndarray, prof: np.ndarray):
    """Vectorized bracketing for increasing negative flows."""
    valid = (alt > prof[..., 0]) & (alt <= prof[..., -1])
    cat = (prof[..., :-1] < alt[..., None]).sum(axis=-1)
    return cat, valid


class BatchEngine:
    """Evaluates flows for many weight vectors over a fixed pair layout.

    The layout covers all ordered profile pairs plus both orientations of
    every (alternative, profile) pair.  Because aggregation and
    defuzzification are linear in the three components of a fuzzy number,
    each elementary criterion contributes a single crisp component per pair;
    node values are then plain weighted sums, accumulated children-first.
    """

    def __init__(self, tree: CriteriaTree, n_alternatives: int, n_profiles: int):
        self.tree = tree
        self.m = n_alternatives
        self.c = n_profiles
        self.n_nodes = len(tree.nodes)
        self.root = self.n_nodes
        self.n_pairs = self.c * self.c + 2 * self.m * self.c
        self.elem_slot = np.array(
            [tree.elementary_index.get(n.path, -1) for n in tree.nodes], dtype=np.int64
        )
        self.children = [
            [tree.node_index[c.path] for c in n.children] for n in tree.nodes
        ]
        self.first_level = [tree.node_index[n.path] for n in tree.first_level]

    # -- pair components ---------------------------------------------------

    def pref_components(self, prefs, evals: np.ndarray, profiles: np.ndarray, defuzz: str):
        """Crisp per-pair contribution of each elementary criterion.

        Parameters
        ----------
        prefs :
            Either a sequence of :class:`PreferenceSpec` or the tuple from
            :func:`pref_param_arrays`.
        evals : (m, n_el, 3) array
        profiles : (c, n_el, 3) array

        Returns
        -------
        (n_pairs, n_el) array whose weighted column sums are defuzzified
        node-level preference degrees.
        """
        if not isinstance(prefs, tuple):
            prefs = pref_param_arrays(prefs)
        codes, q, p, s, maximize = prefs
        c, m = self.c, self.m
        a = np.concatenate(
            [
                np.repeat(profiles, c, axis=0),
                np.repeat(evals, c, axis=0),
                np.tile(profiles, (m, 1, 1)),
            ]
        )
        b = np.concatenate(
            [
                np.tile(profiles, (c, 1, 1)),
                np.tile(profiles, (m, 1, 1)),
                np.repeat(evals, c, axis=0),
            ]
        )
        d = np.where(maximize, a[..., 0] - b[..., 0], b[..., 0] - a[..., 0])
        s_left = np.where(maximize, a[..., 1] + b[..., 2], a[..., 2] + b[..., 1])
        s_right = np.where(maximize, a[..., 2] + b[..., 1], a[..., 1] + b[..., 2])
        p0 = shape_preference(codes, q, p, s, d)
        p_lo = shape_preference(codes, q, p, s, d - s_left)
        p_hi = shape_preference(codes, q, p, s, d + s_right)
        if defuzz == "centroid":
            return p0 + (p_hi + p_lo - 2.0 * p0) / 3.0
        if defuzz == "spread-sum":
            return p0 + (p_hi - p_lo) / 3.0
        raise ValueError(f"unknown defuzzification method {defuzz!r}")

    # -- node values and flows --------------------------------------------

    def node_values(self, components: np.ndarray, w: np.ndarray) -> np.ndarray:
        """Aggregate pair components into per-node values.

        ``components`` is (n_pairs, n_el) when shared across the batch or
        (batch, n_pairs, n_el) otherwise; ``w`` is (batch, n_nodes) holding
        every node's weight within its sibling group.  Returns
        (n_nodes+1, batch, n_pairs) with the whole-tree aggregate last.
        """
        batch = w.shape[0]
        values = np.empty((self.n_nodes + 1, batch, self.n_pairs))
        for idx in range(self.n_nodes - 1, -1, -1):
            slot = self.elem_slot[idx]
            if slot >= 0:
                # (n_pairs,) broadcasts over the batch in the shared case
                values[idx] = components[..., slot]
            else:
                kids = self.children[idx]
                acc = w[:, kids[0], None] * values[kids[0]]
                for k in kids[1:]:
                    acc += w[:, k, None] * values[k]
                values[idx] = acc
        acc = w[:, self.first_level[0], None] * values[self.first_level[0]]
        for k in self.first_level[1:]:
            acc += w[:, k, None] * values[k]
        values[self.root] = acc
        return values

    def flows(self, values: np.ndarray) -> BatchFlows:
        """Flows for every node and the root from the per-pair node values."""
        c, m = self.c, self.m
        v_pp = values[..., : c * c].reshape(values.shape[:-1] + (c, c))
        v_ap = values[..., c * c : c * c + m * c].reshape(values.shape[:-1] + (m, c))
        v_pa = values[..., c * c + m * c :].reshape(values.shape[:-1] + (m, c))
        diag = np.einsum("...hh->...h", v_pp)
        row = v_pp.sum(axis=-1) - diag  # sum over l != h of pi(r_h, r_l)
        col = v_pp.sum(axis=-2) - diag  # sum over l != h of pi(r_l, r_h)
        node_alt_net = (v_ap - v_pa).sum(axis=-1) / c
        node_prof_net = ((row - col)[..., None, :] + (v_pa - v_ap)) / c
        return BatchFlows(
            node_alt_net=node_alt_net,
            node_prof_net=node_prof_net,
            alt_plus=v_ap[self.root].sum(axis=-1) / c,
            alt_minus=v_pa[self.root].sum(axis=-1) / c,
            prof_plus=(row[self.root][..., None, :] + v_pa[self.root]) / c,
            prof_minus=(col[self.root][..., None, :] + v_ap[self.root]) / c,
        )

    def check_ordering(self, batch_flows: BatchFlows) -> None:
        """Assert the bracketing premise: profile flows ordered best to worst."""
        worst = np.diff(batch_flows.node_prof_net, axis=-1).max()
        if worst > ORDERING_TOL:
            raise InvariantError(
                f"net profile flows are not non-increasing (max increase {worst})"
            )
        if np.diff(batch_flows.prof_plus, axis=-1).max() > ORDERING_TOL:
            raise InvariantError("positive profile flows are not non-increasing")
        if np.diff(batch_flows.prof_minus, axis=-1).min() < -ORDERING_TOL:
            raise InvariantError("negative profile flows are not non-decreasing")

    def assign_overall(self, batch_flows: BatchFlows, rule: str):
        """Categories (batch, m) and validity mask under the requested rule."""
        if rule == "positive":
            return net_style_bracket(batch_flows.alt_plus, batch_flows.prof_plus)
        if rule == "negative":
            return negative_bracket(batch_flows.alt_minus, batch_flows.prof_minus)
        if rule == "net":
            return net_style_bracket(
                batch_flows.node_alt_net[self.root], batch_flows.node_prof_net[self.root]
            )
        raise ValueError(f"unknown assignment rule {rule!r}")

    def assign_nodes(self, batch_flows: BatchFlows):
        """Net-style categories (nodes, batch, m) for every real tree node."""
        return net_style_bracket(
            batch_flows.node_alt_net[: self.n_nodes],
            batch_flows.node_prof_net[: self.n_nodes],
        )
