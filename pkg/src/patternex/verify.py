"""Mechanical verification of the package's checkable inequalities.

Each claim is exercised over every instance inside an explicit parameter
range, with both sides computed exactly by the solvers and every
constructed witness re-checked.  A failed instance carries a replayable
counterexample (text dumps of the objects plus the seed); the harness
writes those out as files.  Reports contain only exact integers and
rationals, except the random-density check whose statistics are labeled
empirical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from . import fileio
from .constructions import (
    GeneratorConfig,
    analytic_expected_weight,
    blowup_graph,
    chain_patterns,
    corner_pad,
    cyclic_pad,
    default_density,
    random_avoider,
    satisfies_boundary_condition,
)
from .containment import hypergraph_contains, klazar_marcus_check
from .errors import ConsistencyError, InputError, PostconditionError
from .search import count_avoiders, ex_matrix, exe_hyper, exi_hyper, gex_graph
from .structures import (
    BinaryMatrix,
    OrderedHypergraph,
    PartsSpec,
    PermutationSpec,
    associated_hypergraph,
    associated_matrix,
    d_permutation_matrix,
    is_d_permutation_hypergraph,
    make_hypergraph,
    permutation_matrix,
)

CLAIM_NAMES = (
    "Lemma2",
    "Lemma3",
    "Lemma5",
    "Lemma6",
    "Thm7-recurrence",
    "Lemma8-density",
    "KlazarMarcus",
    "ExiExe",
)

CLAIM_SUMMARIES = {
    "Lemma2": "graph extremal value never exceeds the matrix extremal value "
    "for corner-anchored patterns",
    "Lemma3": "the interval blow-up of an extremal bipartite avoider keeps "
    "(t-1)*ex edges and stays an avoider",
    "Lemma5": "edge counts of uniform avoiders are bounded by the associated "
    "matrix extremal value when part boundaries are anchored",
    "Lemma6": "cyclic padding and chain growth produce permutation "
    "hypergraphs that contain their predecessors and anchor all "
    "part boundaries",
    "Thm7-recurrence": "avoider counts satisfy the interval-contraction "
    "recurrence, with both exponent variants measured",
    "Lemma8-density": "the deletion-repair generator always avoids and its "
    "mean weight meets the analytic target",
    "KlazarMarcus": "hypergraph containment agrees with associated-matrix "
    "containment on all partite instances",
    "ExiExe": "weight extremal values are bounded by (2kd-1)(k-1) times the "
    "edge extremal values",
}


@dataclass(frozen=True)
class InstanceResult:
    params: dict
    passed: bool
    payload: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CheckResult:
    claim: str
    parameters: dict
    instances: tuple[InstanceResult, ...]
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(inst.passed for inst in self.instances)

    @property
    def failures(self) -> list[InstanceResult]:
        return [inst for inst in self.instances if not inst.passed]


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]
    budget: int
    seed: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "budget": self.budget,
            "seed": self.seed,
            "overall_pass": self.passed,
            "checks": [
                {
                    "claim": c.claim,
                    "summary": CLAIM_SUMMARIES.get(c.claim, ""),
                    "parameters": c.parameters,
                    "passed": c.passed,
                    "notes": list(c.notes),
                    "instances": [
                        {
                            "params": dict(inst.params),
                            "passed": inst.passed,
                            "payload": dict(inst.payload),
                        }
                        for inst in c.instances
                    ],
                }
                for c in self.checks
            ],
        }

    def render_text(self) -> str:
        lines = [f"verification report (budget={self.budget}, seed={self.seed})", ""]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"[{status}] {c.claim}: {CLAIM_SUMMARIES.get(c.claim, '')}")
            lines.append(
                f"       parameters: {_fmt_dict(c.parameters)}; "
                f"instances: {len(c.instances)}"
            )
            for note in c.notes:
                lines.append(f"       note: {note}")
            for inst in c.failures:
                lines.append(f"       FAILED instance {_fmt_dict(inst.params)}")
                for key, value in sorted(inst.payload.items()):
                    if key != "objects":
                        lines.append(f"         {key}: {value}")
        lines.append("")
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"


def _fmt_dict(d: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in sorted(d.items()))


def _matrix_id(matrix: BinaryMatrix) -> str:
    shape = "x".join(str(n) for n in matrix.extents)
    cells = "".join("(" + ",".join(map(str, c)) + ")" for c in matrix.sorted_ones())
    return f"{shape}:{cells or 'empty'}"


def _hypergraph_id(h: OrderedHypergraph) -> str:
    edges = "".join("{" + ",".join(map(str, e)) + "}" for e in h.sorted_edges())
    return f"n={h.n}:{edges or 'empty'}"


# ---------------------------------------------------------------------------
# instance generators


def corner_anchored_patterns(weight_max: int = 3, extent_max: int = 3) -> list[BinaryMatrix]:
    """Every pattern with a 1-entry at (k_1, 1), weight and extents bounded."""
    out = []
    for k1 in range(1, extent_max + 1):
        for k2 in range(1, extent_max + 1):
            anchor = (k1, 1)
            cells = sorted(
                (i, j)
                for i in range(1, k1 + 1)
                for j in range(1, k2 + 1)
                if (i, j) != anchor
            )
            for extra_count in range(min(weight_max, len(cells) + 1)):
                for extra in combinations(cells, extra_count):
                    out.append(
                        BinaryMatrix((k1, k2), frozenset((anchor,) + extra))
                    )
    return out


def all_ordered_graphs(n: int) -> list[OrderedHypergraph]:
    pairs = list(combinations(range(1, n + 1), 2))
    out = []
    for size in range(len(pairs) + 1):
        for chosen in combinations(pairs, size):
            out.append(OrderedHypergraph(n, frozenset(chosen)))
    return out


def all_bipartite_graphs(part_size: int) -> list[OrderedHypergraph]:
    """All 2-partite graphs on [2n] whose edges cross the two parts."""
    n = part_size
    crossing = [(i, n + j) for i in range(1, n + 1) for j in range(1, n + 1)]
    out = []
    for size in range(len(crossing) + 1):
        for chosen in combinations(crossing, size):
            out.append(OrderedHypergraph(2 * n, frozenset(chosen)))
    return out


def permutation_hypergraphs(k: int, d: int = 2) -> list[OrderedHypergraph]:
    out = []
    for perms in product(permutations(range(1, k + 1)), repeat=d - 1):
        matrix = d_permutation_matrix(PermutationSpec(k, tuple(perms)))
        out.append(associated_hypergraph(matrix)[0])
    return sorted(set(out), key=lambda h: h.sorted_edges())


# ---------------------------------------------------------------------------
# claim checks


def check_doubling_upper_bound(
    n_max: int = 4, weight_max: int = 3, extent_max: int = 3
) -> CheckResult:
    """gex(Q, n) <= ex(P, n) for corner-anchored P with associated graph Q."""
    instances = []
    for pattern in corner_anchored_patterns(weight_max, extent_max):
        graph_pattern, _ = associated_hypergraph(pattern)
        for n in range(1, n_max + 1):
            ex_value = ex_matrix(pattern, n).value
            gex_value = gex_graph(graph_pattern, n).value
            passed = gex_value <= ex_value
            payload = {}
            if not passed:
                payload = {
                    "gex": gex_value,
                    "ex": ex_value,
                    "objects": {
                        "pattern": fileio.format_matrix(pattern),
                        "graph_pattern": fileio.format_hypergraph(graph_pattern),
                    },
                }
            instances.append(
                InstanceResult(
                    {"pattern": _matrix_id(pattern), "n": n, "gex": gex_value, "ex": ex_value},
                    passed,
                    payload,
                )
            )
    return CheckResult(
        "Lemma2",
        {"n_max": n_max, "weight_max": weight_max, "extent_max": extent_max},
        tuple(instances),
    )


def _blowup_patterns() -> list[BinaryMatrix]:
    return [corner_pad(permutation_matrix((1, 2))), permutation_matrix((2, 1))]


def check_interval_blowup(n: int = 2, t_values: tuple[int, ...] = (2, 3)) -> CheckResult:
    """Blow-ups of extremal bipartite avoiders have (t-1)*ex(P,n) edges and avoid."""
    instances = []
    for pattern in _blowup_patterns():
        cert = ex_matrix(pattern, n)
        bipartite, _ = associated_hypergraph(cert.witness)
        graph_pattern, _ = associated_hypergraph(pattern)
        base_ok = hypergraph_contains(bipartite, graph_pattern) is None
        for t in t_values:
            blown = blowup_graph(bipartite, t)
            count_ok = blown.edge_count == (t - 1) * cert.value
            avoid_ok = hypergraph_contains(blown, graph_pattern) is None
            exact_ok = True
            exact_value = None
            if n * t <= 4:
                exact_value = gex_graph(graph_pattern, n * t).value
                exact_ok = exact_value >= (t - 1) * cert.value
            passed = base_ok and count_ok and avoid_ok and exact_ok
            payload = {}
            if not passed:
                payload = {
                    "edges": blown.edge_count,
                    "expected_edges": (t - 1) * cert.value,
                    "base_avoids": base_ok,
                    "blowup_avoids": avoid_ok,
                    "objects": {
                        "pattern": fileio.format_matrix(pattern),
                        "bipartite_avoider": fileio.format_hypergraph(bipartite),
                        "blowup": fileio.format_hypergraph(blown),
                    },
                }
            params = {
                "pattern": _matrix_id(pattern),
                "n": n,
                "t": t,
                "edges": blown.edge_count,
                "ex": cert.value,
            }
            if exact_value is not None:
                params["gex_exact"] = exact_value
            instances.append(InstanceResult(params, passed, payload))
    return CheckResult("Lemma3", {"n": n, "t_values": list(t_values)}, tuple(instances))


def check_partite_edge_bound(n_max: int = 4) -> CheckResult:
    """Every uniform avoider of a boundary-anchored pattern respects the matrix bound.

    Exhaustive over all ordered graphs on [n] for the length-2 pattern
    whose single boundary pair is anchored.
    """
    anchored = make_hypergraph(4, [(1, 4), (2, 3)])
    assert satisfies_boundary_condition(anchored, 2)
    pattern = associated_matrix(anchored, PartsSpec.equal(2, 2))
    instances = []
    for n in range(1, n_max + 1):
        bound = ex_matrix(pattern, n).value
        avoiders = 0
        worst = -1
        bad = None
        for graph in all_ordered_graphs(n):
            if hypergraph_contains(graph, anchored) is None:
                avoiders += 1
                worst = max(worst, graph.edge_count)
                if graph.edge_count > bound and bad is None:
                    bad = graph
        passed = bad is None
        payload = {}
        if bad is not None:
            payload = {
                "bound": bound,
                "edges": bad.edge_count,
                "objects": {
                    "pattern": fileio.format_hypergraph(anchored),
                    "avoider": fileio.format_hypergraph(bad),
                },
            }
        instances.append(
            InstanceResult(
                {"n": n, "bound": bound, "avoiders": avoiders, "max_edges": worst},
                passed,
                payload,
            )
        )
    return CheckResult(
        "Lemma5",
        {"n_max": n_max, "pattern": _hypergraph_id(anchored)},
        tuple(instances),
    )


def check_padding_chain(
    dimensions: tuple[int, ...] = (2, 3), k_max: int = 3, extra_steps: int = 2
) -> CheckResult:
    """Cyclic padding plus chain growth, machine-verified step by step."""
    instances = []
    for d in dimensions:
        for k in range(1, k_max + 1):
            for perms in product(permutations(range(1, k + 1)), repeat=d - 1):
                spec = PermutationSpec(k, tuple(perms))
                base = associated_hypergraph(d_permutation_matrix(spec))[0]
                params = {"d": d, "k": k, "perms": str(perms)}
                try:
                    padded = cyclic_pad(base)
                    side = k + d - 1
                    ok = (
                        is_d_permutation_hypergraph(padded) == side
                        and hypergraph_contains(padded, base) is not None
                        and satisfies_boundary_condition(padded, d)
                    )
                    padded_matrix = associated_matrix(padded, PartsSpec.equal(d, side))
                    chain = chain_patterns(padded_matrix, side + extra_steps)
                    for prev, grown in zip(chain, chain[1:]):
                        grown_hyper = associated_hypergraph(grown)[0]
                        ok = ok and satisfies_boundary_condition(grown_hyper, d)
                        ok = ok and hypergraph_contains(
                            grown_hyper, associated_hypergraph(prev)[0]
                        ) is not None
                    payload = {}
                    if not ok:
                        payload = {
                            "objects": {
                                "base": fileio.format_hypergraph(base),
                                "padded": fileio.format_hypergraph(padded),
                            }
                        }
                    instances.append(InstanceResult(params, ok, payload))
                except (InputError, PostconditionError) as exc:
                    instances.append(
                        InstanceResult(
                            params,
                            False,
                            {
                                "error": str(exc),
                                "objects": {"base": fileio.format_hypergraph(base)},
                            },
                        )
                    )
    return CheckResult(
        "Lemma6",
        {"dimensions": list(dimensions), "k_max": k_max, "extra_steps": extra_steps},
        tuple(instances),
    )


def check_contraction_recurrence(
    n_values: tuple[int, ...] = (1, 2), t: int = 2
) -> CheckResult:
    """|M(H, t*n)| <= (2^t - 1)^exponent * |M(H, n)| for the single-edge pattern.

    Both exponent variants are computed: the weight-based one is the
    claim, the edge-based one (a smaller exponent, hence a stronger
    bound) is reported alongside.
    """
    pattern = make_hypergraph(2, [(1, 2)])
    instances = []
    for n in n_values:
        small = count_avoiders(pattern, n)
        large = count_avoiders(pattern, t * n)
        weight_value = exi_hyper(pattern, n).value
        edge_value = exe_hyper(pattern, n).value
        bound_weight = (2**t - 1) ** weight_value * small
        bound_edges = (2**t - 1) ** edge_value * small
        holds_weight = large <= bound_weight
        holds_edges = large <= bound_edges
        payload = {}
        if not holds_weight:
            payload = {
                "count_large": large,
                "bound_weight_variant": bound_weight,
                "objects": {"pattern": fileio.format_hypergraph(pattern)},
            }
        instances.append(
            InstanceResult(
                {
                    "n": n,
                    "t": t,
                    "count_n": small,
                    "count_tn": large,
                    "exi": weight_value,
                    "exe": edge_value,
                    "bound_weight_variant": bound_weight,
                    "bound_edge_variant": bound_edges,
                    "holds_weight_variant": holds_weight,
                    "holds_edge_variant": holds_edges,
                },
                holds_weight,
                payload,
            )
        )
    return CheckResult(
        "Thm7-recurrence",
        {"n_values": list(n_values), "t": t, "pattern": _hypergraph_id(pattern)},
        tuple(instances),
        notes=(
            "the edge-based exponent gives the smaller bound; both variants "
            "are reported per instance",
        ),
    )


def check_random_density(
    side: int = 8, trials: int = 100, seed: int = 0, threshold: float = 0.9
) -> CheckResult:
    """All repaired samples avoid, and the mean weight meets the analytic target."""
    pattern = BinaryMatrix((2, 2), frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}))
    p = default_density(pattern, side)
    config = GeneratorConfig(pattern=pattern, side=side, p=p, seed=seed, trials=trials)
    total_final = 0
    avoid_failures = 0
    for trial in range(trials):
        try:
            _, stats = random_avoider(config, trial)
            total_final += stats.final_weight
        except PostconditionError:
            avoid_failures += 1
    mean_final = total_final / trials
    target = analytic_expected_weight(pattern, side, p)
    passed = avoid_failures == 0 and mean_final >= threshold * target
    payload = {}
    if not passed:
        payload = {
            "avoid_failures": avoid_failures,
            "mean_final_weight": mean_final,
            "analytic_target": target,
            "seed": seed,
            "objects": {"pattern": fileio.format_matrix(pattern)},
        }
    instance = InstanceResult(
        {
            "side": side,
            "trials": trials,
            "seed": seed,
            "p": p,
            "mean_final_weight_empirical": mean_final,
            "analytic_target": target,
            "threshold": threshold,
        },
        passed,
        payload,
    )
    return CheckResult(
        "Lemma8-density",
        {"side": side, "trials": trials, "seed": seed, "threshold": threshold},
        (instance,),
        notes=("density statistics are empirical floating-point values",),
    )


def check_association_equivalence(n_max: int = 3) -> CheckResult:
    """Exhaustive agreement of the two containment routes on partite instances.

    Runs every ordered pair of 2-partite graphs with the same part size,
    the scope of the equivalence; with a smaller pattern only the
    matrix-to-hypergraph direction holds (the vertex injection may cross
    part boundaries), which the test suite covers separately.
    """
    instances = []
    for n in range(1, n_max + 1):
        graphs = all_bipartite_graphs(n)
        disagreement = None
        pairs = 0
        for host in graphs:
            for pat in graphs:
                pairs += 1
                try:
                    klazar_marcus_check(host, pat, 2)
                except ConsistencyError as exc:
                    if disagreement is None:
                        disagreement = (host, pat, str(exc))
        passed = disagreement is None
        payload = {}
        if disagreement is not None:
            host, pat, message = disagreement
            payload = {
                "error": message,
                "objects": {
                    "host": fileio.format_hypergraph(host),
                    "pattern": fileio.format_hypergraph(pat),
                },
            }
        instances.append(
            InstanceResult({"part_size": n, "pairs": pairs}, passed, payload)
        )
    return CheckResult(
        "KlazarMarcus",
        {"n_max": n_max},
        tuple(instances),
        notes=(
            "pairs share one part size; with unequal sizes the vertex "
            "injection may cross part boundaries and only the matrix-to-"
            "hypergraph direction holds",
        ),
    )


def check_weight_vs_edges(
    lengths: tuple[int, ...] = (2,), d: int = 2, n_max: int = 4
) -> CheckResult:
    """exi(H, n) <= (2kd - 1)(k - 1) * exe(H, n) for permutation hypergraphs."""
    instances = []
    for k in lengths:
        if k < 2:
            continue
        factor = (2 * k * d - 1) * (k - 1)
        for pat in permutation_hypergraphs(k, d):
            for n in range(1, n_max + 1):
                weight_value = exi_hyper(pat, n).value
                edge_value = exe_hyper(pat, n).value
                passed = weight_value <= factor * edge_value
                payload = {}
                if not passed:
                    payload = {
                        "exi": weight_value,
                        "exe": edge_value,
                        "factor": factor,
                        "objects": {"pattern": fileio.format_hypergraph(pat)},
                    }
                instances.append(
                    InstanceResult(
                        {
                            "pattern": _hypergraph_id(pat),
                            "k": k,
                            "n": n,
                            "exi": weight_value,
                            "exe": edge_value,
                            "factor": factor,
                        },
                        passed,
                        payload,
                    )
                )
    return CheckResult(
        "ExiExe",
        {"lengths": list(lengths), "d": d, "n_max": n_max},
        tuple(instances),
        notes=(
            "length-1 patterns are excluded: the factor (2kd-1)(k-1) vanishes "
            "there while the weight value does not",
        ),
    )


# ---------------------------------------------------------------------------
# harness entry point


def run_checks(
    claims: list[str] | None = None, budget: int = 4, seed: int = 0
) -> VerificationReport:
    """Run the selected claims (all by default) at the given size budget."""
    if budget < 1:
        raise InputError(f"budget must be >= 1, got {budget}")
    selected = list(CLAIM_NAMES) if claims is None else list(claims)
    for name in selected:
        if name not in CLAIM_NAMES:
            raise InputError(
                f"unknown claim {name!r}; available: {', '.join(CLAIM_NAMES)}"
            )
    runners = {
        "Lemma2": lambda: check_doubling_upper_bound(n_max=budget),
        "Lemma3": lambda: check_interval_blowup(
            n=2, t_values=tuple(range(2, max(budget, 3)))
        ),
        "Lemma5": lambda: check_partite_edge_bound(n_max=budget),
        "Lemma6": lambda: check_padding_chain(k_max=min(3, budget)),
        "Thm7-recurrence": lambda: check_contraction_recurrence(),
        "Lemma8-density": lambda: check_random_density(seed=seed),
        "KlazarMarcus": lambda: check_association_equivalence(n_max=min(budget, 3)),
        "ExiExe": lambda: check_weight_vs_edges(n_max=budget),
    }
    checks = tuple(runners[name]() for name in selected)
    return VerificationReport(checks, budget=budget, seed=seed)
