"""Exact extremal values by branch-and-bound, and exact avoider counting.

All solvers share the same canonical search order: decision variables
(cells or candidate edges) are enumerated lexicographically, the
include/1 branch is tried before the exclude/0 branch, and the incumbent
is updated only on strict improvement.  The first leaf reached is the
greedy lexicographic avoider, which seeds the pruning bound; the pruning
bound itself is the trivial one (current weight plus undecided
capacity).  This makes every certificate deterministic.

A returned :class:`SearchCertificate` is always re-checked through the
public containment API, independently of the solver's internal pruning
logic.  Counting uses exact integer arithmetic throughout.

Capacity limits are explicit arguments with hard errors; nothing is
silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .containment import (
    _hyper_embedding_search,
    _matrix_embedding_search,
    hypergraph_contains,
    matrix_contains,
)
from .errors import CapacityError, InputError, PostconditionError
from .structures import BinaryMatrix, Edge, OrderedHypergraph

DEFAULT_MAX_CELLS = 64
DEFAULT_MAX_GRAPH_CANDIDATES = 28
DEFAULT_MAX_HYPER_CANDIDATES = 20
COUNT_EXACT_MAX_N = 4


@dataclass(frozen=True)
class SearchCertificate:
    """An extremal value, a witness achieving it, and a re-check flag.

    ``verified`` is set only after the witness has passed an independent
    avoidance re-check and its weight has been compared to the value.
    """

    value: int
    witness: BinaryMatrix | OrderedHypergraph
    verified: bool


@dataclass(frozen=True)
class TableRow:
    n: int
    value: int
    witness_ref: str | None = None


@dataclass(frozen=True)
class ExtremalTable:
    """Rows of (n, value, witness reference) for one pattern.

    ``dimension`` is the pattern dimension (2 for graph kinds).  For the
    extremal kinds the values must be nondecreasing in n; avoider counts
    are exempt because adding isolated vertices can flip containment for
    patterns with trailing isolated vertices.
    """

    pattern_id: str
    kind: str  # ex | f | gex | exe | exi | count
    dimension: int
    rows: tuple[TableRow, ...]

    def __post_init__(self) -> None:
        ns = [r.n for r in self.rows]
        if ns != sorted(set(ns)):
            raise PostconditionError(f"table rows not strictly sorted by n: {ns}")
        if self.kind != "count":
            values = [r.value for r in self.rows]
            if any(values[i] > values[i + 1] for i in range(len(values) - 1)):
                raise PostconditionError(f"extremal values decreased: {values}")

    def ratio(self, row: TableRow) -> Fraction:
        """value / n."""
        return Fraction(row.value, row.n)

    def ratio_high_dim(self, row: TableRow) -> Fraction:
        """value / n^(d-1)."""
        return Fraction(row.value, row.n ** (self.dimension - 1))

    def primary_ratio(self, row: TableRow) -> Fraction | None:
        if self.kind == "count":
            return None
        if self.kind == "f":
            return self.ratio_high_dim(row)
        return self.ratio(row)

    def ratios_monotone(self) -> bool:
        """Descriptive: whether the primary ratio is nondecreasing across rows."""
        ratios = [self.primary_ratio(r) for r in self.rows]
        if any(r is None for r in ratios):
            return False
        return all(ratios[i] <= ratios[i + 1] for i in range(len(ratios) - 1))

    @property
    def limit_estimate(self) -> Fraction:
        """Running growth-rate estimate; see :func:`estimate_limit`."""
        return estimate_limit(self)


def estimate_limit(table: ExtremalTable) -> Fraction:
    """Running ratio value(n_max)/n_max; purely descriptive."""
    if not table.rows:
        raise InputError("cannot estimate a limit from an empty table")
    last = table.rows[-1]
    return Fraction(last.value, last.n)


def table_to_csv(table: ExtremalTable) -> str:
    """CSV with columns n, value, ratio, witness_file (ratio as exact p/q)."""
    lines = ["n,value,ratio,witness_file"]
    for r in table.rows:
        ratio = table.primary_ratio(r)
        lines.append(
            f"{r.n},{r.value},{'' if ratio is None else ratio},{r.witness_ref or ''}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# matrix solvers


def _solve_max_weight_2d(pattern: BinaryMatrix, n: int) -> tuple[int, frozenset]:
    """Branch-and-bound over the n x n cells in row-major order.

    The incremental containment check is anchored: in row-major decision
    order every new copy of the pattern must use the newly set cell as
    the image of the pattern's lexicographically greatest 1-entry, so the
    check pins that entry and scans precomputed column selections with a
    greedy row-subsequence match.
    """
    k1, k2 = pattern.extents
    pat_ones = pattern.sorted_ones()
    anchor = pat_ones[-1] if pat_ones else None

    bucket: dict[int, list[list[int]]] = {c: [] for c in range(1, n + 1)}
    if anchor is not None and k2 <= n and k1 <= n:
        ar, ac = anchor
        cols_by_row: list[list[int]] = [[] for _ in range(k1 + 1)]
        for i, j in pat_ones:
            cols_by_row[i].append(j)
        for colset in combinations(range(1, n + 1), k2):
            masks = []
            for i in range(1, ar + 1):
                m = 0
                for j in cols_by_row[i]:
                    m |= 1 << (colset[j - 1] - 1)
                masks.append(m)
            bucket[colset[ac - 1]].append(masks)

    def anchored(r: int, c: int, rowbits: list[int]) -> bool:
        if anchor is None:
            return False
        ar, ac = anchor
        if r < ar or c < ac or n - r < k1 - ar:
            return False
        for masks in bucket[c]:
            need = masks[ar - 1]
            if rowbits[r] & need != need:
                continue
            hr = 1
            ok = True
            for i in range(ar - 1):
                m = masks[i]
                while hr < r and (rowbits[hr] & m) != m:
                    hr += 1
                if hr >= r:
                    ok = False
                    break
                hr += 1
            if ok:
                return True
        return False

    cells = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
    total = len(cells)
    rowbits = [0] * (n + 1)
    ones: list[tuple[int, int]] = []
    best_value = -1
    best_ones: frozenset = frozenset()

    def dfs(idx: int, weight: int) -> None:
        nonlocal best_value, best_ones
        if weight + (total - idx) <= best_value:
            return
        if idx == total:
            best_value = weight
            best_ones = frozenset(ones)
            return
        r, c = cells[idx]
        bit = 1 << (c - 1)
        rowbits[r] |= bit
        if not anchored(r, c, rowbits):
            ones.append((r, c))
            dfs(idx + 1, weight + 1)
            ones.pop()
        rowbits[r] &= ~bit
        dfs(idx + 1, weight)

    dfs(0, 0)
    return best_value, best_ones


def _solve_max_weight_generic(pattern: BinaryMatrix, n: int) -> tuple[int, frozenset]:
    """Dimension-generic variant sharing the anchored-pin idea, for d-matrices."""
    d = pattern.d
    extents = (n,) * d
    pat_ones = pattern.sorted_ones()
    anchor = pat_ones[-1] if pat_ones else None

    def anchored(cell: tuple[int, ...], ones_set: set) -> bool:
        if anchor is None:
            return False
        for ax in range(d):
            if cell[ax] < anchor[ax] or n - cell[ax] < pattern.extents[ax] - anchor[ax]:
                return False
        pins = {ax: (anchor[ax], cell[ax]) for ax in range(d)}
        return (
            _matrix_embedding_search(extents, ones_set, pattern.extents, pat_ones, pins)
            is not None
        )

    cells = list(product(range(1, n + 1), repeat=d))
    total = len(cells)
    ones_set: set = set()
    ones: list = []
    best_value = -1
    best_ones: frozenset = frozenset()

    def dfs(idx: int, weight: int) -> None:
        nonlocal best_value, best_ones
        if weight + (total - idx) <= best_value:
            return
        if idx == total:
            best_value = weight
            best_ones = frozenset(ones)
            return
        cell = cells[idx]
        ones_set.add(cell)
        if not anchored(cell, ones_set):
            ones.append(cell)
            dfs(idx + 1, weight + 1)
            ones.pop()
        ones_set.discard(cell)
        dfs(idx + 1, weight)

    dfs(0, 0)
    return best_value, best_ones


def _certify_matrix(value: int, witness: BinaryMatrix, pattern: BinaryMatrix) -> SearchCertificate:
    if witness.weight != value:
        raise PostconditionError(
            f"witness weight {witness.weight} does not equal value {value}"
        )
    if matrix_contains(witness, pattern) is not None:
        raise PostconditionError("witness fails the avoidance re-check")
    return SearchCertificate(value, witness, True)


def _reject_if_unavoidable(pattern: BinaryMatrix, n: int) -> None:
    zero = BinaryMatrix((n,) * pattern.d, frozenset())
    if matrix_contains(zero, pattern) is not None:
        raise InputError(
            "pattern weight 0: every matrix of this size contains it, "
            "the extremal value is undefined"
        )


def ex_matrix(
    pattern: BinaryMatrix, n: int, *, max_cells: int = DEFAULT_MAX_CELLS
) -> SearchCertificate:
    """Maximum 1-entries of an n x n matrix avoiding the 2-dimensional pattern."""
    if pattern.d != 2:
        raise InputError(f"ex_matrix needs a 2-dimensional pattern, got d={pattern.d}")
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if n * n > max_cells:
        raise CapacityError(f"{n}x{n} exceeds the configured cell limit {max_cells}")
    _reject_if_unavoidable(pattern, n)
    value, ones = _solve_max_weight_2d(pattern, n)
    return _certify_matrix(value, BinaryMatrix((n, n), ones), pattern)


def f_multi(
    pattern: BinaryMatrix, d: int, n: int, *, max_cells: int = DEFAULT_MAX_CELLS
) -> SearchCertificate:
    """Maximum 1-entries of a side-length-n d-matrix avoiding the pattern."""
    if d != pattern.d:
        raise InputError(f"d={d} does not match pattern dimension {pattern.d}")
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if n**d > max_cells:
        raise CapacityError(f"side {n} in dimension {d} exceeds the cell limit {max_cells}")
    _reject_if_unavoidable(pattern, n)
    value, ones = _solve_max_weight_generic(pattern, n)
    return _certify_matrix(value, BinaryMatrix((n,) * d, ones), pattern)


# ---------------------------------------------------------------------------
# graph and hypergraph solvers


def _certify_hypergraph(
    value: int, witness: OrderedHypergraph, pattern: OrderedHypergraph, mode: str
) -> SearchCertificate:
    achieved = witness.edge_count if mode == "edges" else witness.weight
    if achieved != value:
        raise PostconditionError(f"witness achieves {achieved}, value is {value}")
    if hypergraph_contains(witness, pattern) is not None:
        raise PostconditionError("witness fails the avoidance re-check")
    return SearchCertificate(value, witness, True)


def _reject_unavoidable_hypergraph(pattern: OrderedHypergraph, n: int) -> None:
    if _hyper_embedding_search(n, [], pattern.n, pattern.sorted_edges()) is not None:
        raise InputError(
            "pattern with no edges is contained in every host on this many "
            "vertices, the extremal value is undefined"
        )


def _solve_max_hyper(
    n: int, candidates: list[Edge], pattern: OrderedHypergraph, mode: str
) -> tuple[int, list[Edge]]:
    """Shared include-first branch-and-bound over a fixed candidate edge list."""
    pat_edges = pattern.sorted_edges()
    pn = pattern.n
    total = len(candidates)
    gain = [len(e) if mode == "weight" else 1 for e in candidates]
    suffix = [0] * (total + 1)
    for i in range(total - 1, -1, -1):
        suffix[i] = suffix[i + 1] + gain[i]
    current: list[Edge] = []
    best = -1
    best_edges: list[Edge] = []

    def dfs(idx: int, score: int) -> None:
        nonlocal best, best_edges
        if score + suffix[idx] <= best:
            return
        if idx == total:
            best = score
            best_edges = list(current)
            return
        current.append(candidates[idx])
        if _hyper_embedding_search(n, current, pn, pat_edges) is None:
            dfs(idx + 1, score + gain[idx])
        current.pop()
        dfs(idx + 1, score)

    dfs(0, 0)
    return best, best_edges


def gex_graph(
    pattern: OrderedHypergraph,
    n: int,
    *,
    max_candidates: int = DEFAULT_MAX_GRAPH_CANDIDATES,
) -> SearchCertificate:
    """Maximum edges of an ordered graph on [n] avoiding the 2-uniform pattern."""
    if any(len(e) != 2 for e in pattern.edges):
        raise InputError("gex needs a 2-uniform pattern")
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    count = n * (n - 1) // 2
    if count > max_candidates:
        raise CapacityError(
            f"{count} candidate edges exceed the configured limit {max_candidates}"
        )
    _reject_unavoidable_hypergraph(pattern, n)
    candidates = [tuple(e) for e in combinations(range(1, n + 1), 2)]
    value, edges = _solve_max_hyper(n, candidates, pattern, "edges")
    witness = OrderedHypergraph(n, frozenset(edges))
    return _certify_hypergraph(value, witness, pattern, "edges")


def _hyper_candidates(n: int, cap: int) -> list[Edge]:
    cap = min(cap, n)
    out: list[Edge] = []
    for size in range(1, cap + 1):
        out.extend(combinations(range(1, n + 1), size))
    out.sort()
    return out


def _solve_hyper_extremal(
    pattern: OrderedHypergraph,
    n: int,
    mode: str,
    edge_cap: int | None,
    exact: bool,
    max_candidates: int,
) -> SearchCertificate:
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if exact:
        cap = n
    elif edge_cap is not None:
        if edge_cap < 1:
            raise InputError(f"edge size cap must be >= 1, got {edge_cap}")
        cap = edge_cap
    else:
        cap = max(pattern.n, 1)
    candidates = _hyper_candidates(n, cap)
    if len(candidates) > max_candidates:
        raise CapacityError(
            f"{len(candidates)} candidate edges exceed the configured limit "
            f"{max_candidates}; lower n or the edge size cap"
        )
    _reject_unavoidable_hypergraph(pattern, n)
    value, edges = _solve_max_hyper(n, candidates, pattern, mode)
    witness = OrderedHypergraph(n, frozenset(edges))
    return _certify_hypergraph(value, witness, pattern, mode)


def exe_hyper(
    pattern: OrderedHypergraph,
    n: int,
    *,
    edge_cap: int | None = None,
    exact: bool = False,
    max_candidates: int = DEFAULT_MAX_HYPER_CANDIDATES,
) -> SearchCertificate:
    """Maximum edge count of a hypergraph on [n] avoiding the pattern.

    Candidate edges are restricted to size <= cap (default: the pattern's
    vertex count), mirroring the edge-truncation reduction; pass
    ``exact=True`` to search the full edge universe on tiny n.
    """
    return _solve_hyper_extremal(pattern, n, "edges", edge_cap, exact, max_candidates)


def exi_hyper(
    pattern: OrderedHypergraph,
    n: int,
    *,
    edge_cap: int | None = None,
    exact: bool = False,
    max_candidates: int = DEFAULT_MAX_HYPER_CANDIDATES,
) -> SearchCertificate:
    """Maximum weight (sum of edge sizes) of a hypergraph on [n] avoiding the pattern.

    Same candidate-edge cap semantics as :func:`exe_hyper`; with a cap the
    value is the maximum over hosts whose edges respect the cap.
    """
    return _solve_hyper_extremal(pattern, n, "weight", edge_cap, exact, max_candidates)


def count_avoiders(
    pattern: OrderedHypergraph,
    n: int,
    *,
    edge_size_cap: int | None = None,
    max_candidates: int = DEFAULT_MAX_HYPER_CANDIDATES,
) -> int:
    """Exact number of hypergraphs on [n] avoiding the pattern.

    Without a cap the full edge universe is enumerated, which is limited
    to n <= 4; larger n must pass ``edge_size_cap`` (the count is then
    over hypergraphs whose edges respect the cap).  Enumeration prunes
    both ways: a branch that already contains the pattern contributes
    nothing, and a branch whose full completion still avoids contributes
    a power of two without further splitting.
    """
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    if edge_size_cap is None:
        if n > COUNT_EXACT_MAX_N:
            raise CapacityError(
                f"exact enumeration is limited to n <= {COUNT_EXACT_MAX_N}; "
                "pass edge_size_cap for larger n"
            )
        cap = max(n, 1)
    else:
        if edge_size_cap < 1:
            raise InputError(f"edge size cap must be >= 1, got {edge_size_cap}")
        cap = edge_size_cap
    candidates = _hyper_candidates(n, cap)
    if len(candidates) > max_candidates:
        raise CapacityError(
            f"{len(candidates)} candidate edges exceed the configured limit "
            f"{max_candidates}"
        )
    pat_edges = pattern.sorted_edges()
    pn = pattern.n

    def avoids(edge_list: list[Edge]) -> bool:
        return _hyper_embedding_search(n, edge_list, pn, pat_edges) is None

    if not avoids([]):
        return 0
    current: list[Edge] = []

    def walk(idx: int) -> int:
        rest = len(candidates) - idx
        if rest == 0:
            return 1
        if avoids(current + candidates[idx:]):
            return 1 << rest
        total = walk(idx + 1)
        current.append(candidates[idx])
        if avoids(current):
            total += walk(idx + 1)
        current.pop()
        return total

    return walk(0)
