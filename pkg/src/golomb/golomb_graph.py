"""The complete mixed graph on proper consecutive index intervals of [m].

Vertices are the intervals [a, b] with 1 <= a <= b <= m except [1, m]
itself, so there are m(m+1)/2 - 1 of them. Strict containment fixes an arc
U -> V; every remaining pair is an undirected edge. Two edges are coupled
whenever their endpoint pairs leave the same residual intervals after
removing the common block (equivalently, they lie on the same equal-sum
hyperplane), and an admissible orientation must direct coupled edges the
same way. Because the underlying graph is complete, an admissible acyclic
orientation is the same thing as a strict total order of the intervals
extending containment and respecting the coupling.

These orders index the cells the equal-sum hyperplanes cut the open
simplex into. That is what gives a non-negative gap vector its
multiplicity: the number of cell closures containing it, which is 1
exactly for Golomb rulers.

Enumeration runs in two stages. A depth-first search builds the order
bottom-up: placing an interval next fixes its relative order against
everything unplaced, each such decision fixes the shared direction of a
whole coupling class at once, additive implications between classes
propagate immediately, and the arcs this implies prune later placements.
The search is sound but its combinatorial rules are not known to be
complete, so every surviving order is then decided exactly: a fraction-free
simplex either produces a rational gap vector realizing the order (checked
against every inequality) or a Farkas certificate that none exists (also
checked). Without the propagation m = 6 (20 vertices, 107498 admissible
orders) is out of reach; with it the census runs in minutes.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from functools import lru_cache

from golomb.arrangement import golomb_hyperplanes
from golomb.config import resolve_budget
from golomb.errors import BudgetExceededError
from golomb.mixed_graphs import MixedGraph
from golomb.rulers import enumerate_golomb_rulers
from golomb.simplex import strict_cone_feasibility

Interval = tuple[int, int]

DEFAULT_M_BOUND = 6


def consecutive_subsets(m: int) -> tuple[Interval, ...]:
    """Proper consecutive subsets of [m] as (start, end) pairs, lexicographic."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return tuple(
        (a, b)
        for a in range(1, m + 1)
        for b in range(a, m + 1)
        if (a, b) != (1, m)
    )


def interval_label(interval: Interval) -> str:
    a, b = interval
    return "".join(str(i) for i in range(a, b + 1))


@dataclass(frozen=True)
class GolombOrientation:
    """A strict total order on the proper consecutive subsets of [m],
    smallest first; equivalently an admissible acyclic orientation of the
    complete mixed graph on those intervals."""

    m: int
    order: tuple[Interval, ...]

    def labels(self) -> tuple[str, ...]:
        return tuple(interval_label(iv) for iv in self.order)

    def __str__(self) -> str:
        return " < ".join(self.labels())


def _contains(big: Interval, small: Interval) -> bool:
    return big != small and big[0] <= small[0] and small[1] <= big[1]


def _residual_pair(p: Interval, q: Interval) -> tuple[Interval, Interval]:
    """(p minus q, q minus p) for distinct non-nested intervals; both
    residuals are intervals again."""
    (a1, b1), (a2, b2) = p, q
    if b1 < a2 or b2 < a1:
        return p, q
    if a1 < a2:
        return (a1, a2 - 1), (b1 + 1, b2)
    return (b2 + 1, b1), (a2, a1 - 1)


def build_golomb_graph(m: int) -> MixedGraph:
    """The complete mixed graph on consecutive_subsets(m): vertex i+1 is the
    i-th interval, arcs run along strict containment, everything else is an
    undirected edge."""
    ivs = consecutive_subsets(m)
    edges, arcs = [], []
    for i in range(len(ivs)):
        for j in range(i + 1, len(ivs)):
            if _contains(ivs[j], ivs[i]):
                arcs.append((i + 1, j + 1))
            elif _contains(ivs[i], ivs[j]):
                arcs.append((j + 1, i + 1))
            else:
                edges.append((i + 1, j + 1))
    return MixedGraph(len(ivs), tuple(edges), tuple(arcs))


@dataclass(frozen=True)
class _Tables:
    m: int
    intervals: tuple[Interval, ...]
    hyperplanes: tuple[tuple[int, ...], ...]
    hyper_sides: tuple[tuple[Interval, Interval], ...]
    incl_pred: tuple[int, ...]
    pair_info: tuple[tuple[tuple[int, int] | None, ...], ...]
    class_edges: tuple[tuple[tuple[int, int, int], ...], ...]
    # additive sign implications, keyed by one premise hyperplane:
    # (premise sign, other hyperplane, its sign, forced hyperplane, forced sign)
    sum_rules: tuple[tuple[tuple[int, int, int, int, int], ...], ...]

    @property
    def n(self) -> int:
        return len(self.intervals)


@lru_cache(maxsize=None)
def _tables(m: int) -> _Tables:
    ivs = consecutive_subsets(m)
    n = len(ivs)
    hypers = golomb_hyperplanes(m)
    hindex = {h: k for k, h in enumerate(hypers)}
    sides = []
    for h in hypers:
        pos = [i for i, x in enumerate(h, start=1) if x > 0]
        neg = [i for i, x in enumerate(h, start=1) if x < 0]
        sides.append(((pos[0], pos[-1]), (neg[0], neg[-1])))
    incl_pred = [0] * n
    pair_info: list[list[tuple[int, int] | None]] = [[None] * n for _ in range(n)]
    class_edges: list[list[tuple[int, int, int]]] = [[] for _ in hypers]
    for i in range(n):
        for j in range(i + 1, n):
            p, q = ivs[i], ivs[j]
            if _contains(q, p):
                incl_pred[j] |= 1 << i
            elif _contains(p, q):
                incl_pred[i] |= 1 << j
            else:
                u, v = _residual_pair(p, q)
                left, right = (u, v) if u[0] < v[0] else (v, u)
                vec = [0] * m
                for x in range(left[0], left[1] + 1):
                    vec[x - 1] = 1
                for x in range(right[0], right[1] + 1):
                    vec[x - 1] = -1
                k = hindex[tuple(vec)]
                # ordering i before j demands sum(z_u) < sum(z_v), which is
                # the negative side of the normal exactly when u is its
                # positive (left) block
                pol = -1 if u == left else 1
                pair_info[i][j] = (k, pol)
                pair_info[j][i] = (k, -pol)
                class_edges[k].append((i, j, pol))
    # Exact additions among signed normals force further signs: whenever
    # s1*h1 + s2*h2 = s3*h3, the sides sign(h1.z) = s1 and sign(h2.z) = s2
    # imply sign(h3.z) = s3. These cut the orders that are pairwise
    # consistent yet realized by no gap vector (weaker gaps summed against
    # larger ones), which transitivity alone cannot see.
    sum_rules: list[list[tuple[int, int, int, int, int]]] = [[] for _ in hypers]
    for k1 in range(len(hypers)):
        for k2 in range(k1 + 1, len(hypers)):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    total = tuple(
                        s1 * a + s2 * b for a, b in zip(hypers[k1], hypers[k2])
                    )
                    for s3, vec in ((1, total), (-1, tuple(-x for x in total))):
                        k3 = hindex.get(vec)
                        if k3 is not None:
                            sum_rules[k1].append((s1, k2, s2, k3, s3))
                            sum_rules[k2].append((s2, k1, s1, k3, s3))
    return _Tables(
        m=m,
        intervals=ivs,
        hyperplanes=hypers,
        hyper_sides=tuple(sides),
        incl_pred=tuple(incl_pred),
        pair_info=tuple(tuple(row) for row in pair_info),
        class_edges=tuple(tuple(c) for c in class_edges),
        sum_rules=tuple(tuple(r) for r in sum_rules),
    )


def _enumerate_orders(m: int, limit: int, prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Depth-first enumeration of admissible total orders as tuples of vertex
    indices, starting from a fixed placement prefix (empty for the full
    search). Deterministic: candidates are tried in index order."""
    tables = _tables(m)
    n = tables.n
    if n == 0:
        return [()]
    pair_info = tables.pair_info
    class_edges = tables.class_edges
    sum_rules = tables.sum_rules
    pred = list(tables.incl_pred)
    sigma = [0] * len(tables.hyperplanes)
    full = (1 << n) - 1
    placed = 0
    order: list[int] = []
    out: list[tuple[int, ...]] = []
    nodes = 0

    def try_place(v: int):
        """Place v next if every constraint allows it; returns an undo record
        (sign decisions applied and overwritten predecessor masks) or None.

        Ordering v before each unplaced u demands one sign per coupling
        class; every applied sign then propagates through the additive rules
        until a fixed point or a contradiction."""
        nonlocal placed
        unplaced = full & ~placed
        if pred[v] & unplaced & ~(1 << v):
            return None
        demanded: dict[int, int] = {}
        row = pair_info[v]
        mask = unplaced & ~(1 << v)
        while mask:
            low = mask & -mask
            mask ^= low
            info = row[low.bit_length() - 1]
            if info is None:
                continue
            k, pol = info
            cur = sigma[k]
            if cur == 0:
                prev = demanded.get(k)
                if prev is None:
                    demanded[k] = pol
                elif prev != pol:
                    return None
            elif cur != pol:
                return None
        trail: list[tuple[int, int]] = []
        applied: list[int] = []
        queue = list(demanded.items())
        ok = True
        while queue:
            k, s = queue.pop()
            cur = sigma[k]
            if cur == s:
                continue
            if cur == -s:
                ok = False
                break
            sigma[k] = s
            applied.append(k)
            for i, j, pol in class_edges[k]:
                dst = j if pol == s else i
                src = i if dst == j else j
                trail.append((dst, pred[dst]))
                pred[dst] |= 1 << src
            for s_need, k2, s2, k3, s3 in sum_rules[k]:
                if s == s_need and sigma[k2] == s2:
                    queue.append((k3, s3))
        if not ok:
            for dst, old in reversed(trail):
                pred[dst] = old
            for k in applied:
                sigma[k] = 0
            return None
        placed |= 1 << v
        order.append(v)
        return trail, tuple(applied)

    def unplace(v: int, record) -> None:
        nonlocal placed
        trail, keys = record
        order.pop()
        placed &= ~(1 << v)
        for dst, old in reversed(trail):
            pred[dst] = old
        for k in keys:
            sigma[k] = 0

    for v in prefix:
        if try_place(v) is None:
            return []

    def rec() -> None:
        nonlocal nodes
        if placed == full:
            out.append(tuple(order))
            return
        mask = full & ~placed
        while mask:
            low = mask & -mask
            mask ^= low
            v = low.bit_length() - 1
            nodes += 1
            if nodes > limit:
                raise BudgetExceededError(limit, "admissible orientation search")
            record = try_place(v)
            if record is None:
                continue
            rec()
            unplace(v, record)

    rec()
    return out


def _chain_rows(order: tuple[Interval, ...], m: int) -> list[tuple[int, ...]]:
    """Strict inequalities pinning down the cell of a total order: the
    smallest interval sum is positive and consecutive sums increase. The
    full order (hence every hyperplane side) follows by transitivity."""
    rows = []
    vec = [0] * m
    for i in range(order[0][0], order[0][1] + 1):
        vec[i - 1] = 1
    rows.append(tuple(vec))
    for prev, nxt in zip(order, order[1:]):
        vec = [0] * m
        for i in range(nxt[0], nxt[1] + 1):
            vec[i - 1] += 1
        for i in range(prev[0], prev[1] + 1):
            vec[i - 1] -= 1
        rows.append(tuple(vec))
    return rows


def _realizable(order: tuple[Interval, ...], m: int) -> bool:
    return bool(strict_cone_feasibility(_chain_rows(order, m)))


def _orders_worker(args) -> list[tuple[int, ...]]:
    m, limit, prefix = args
    tables = _tables(m)
    return [
        o
        for o in _enumerate_orders(m, limit, prefix)
        if _realizable(tuple(tables.intervals[v] for v in o), m)
    ]


def enumerate_constrained_orientations(
    m: int,
    *,
    budget: int | None = None,
    jobs: int = 1,
    bound: int = DEFAULT_M_BOUND,
) -> tuple[GolombOrientation, ...]:
    """All admissible total orders of the intervals, in a fixed depth-first
    order, each certified realizable by an exact feasibility check. Their
    number equals the number of cells of the subdivided simplex and so the
    number of combinatorially different Golomb rulers.

    jobs > 1 partitions on the first placement and concatenates in index
    order, so the output is identical for any degree of parallelism (the
    budget then applies per partition). The bound guards against m for which
    the census would be astronomically large.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > bound:
        raise ValueError(f"m={m} is above the enumeration bound {bound}; raise bound= to override")
    limit = resolve_budget(budget)
    tables = _tables(m)
    if tables.n == 0:
        return (GolombOrientation(m, ()),)
    if jobs > 1:
        tasks = [(m, limit, (v,)) for v in range(tables.n)]
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            chunks = pool.map(_orders_worker, tasks)
        orders = [o for chunk in chunks for o in chunk]
    else:
        orders = _orders_worker((m, limit, ()))
    return tuple(
        GolombOrientation(m, tuple(tables.intervals[v] for v in o)) for o in orders
    )


_REGION_CACHE: dict[int, tuple[tuple[GolombOrientation, ...], tuple[tuple[int, ...], ...]]] = {}


def _region_data(
    m: int, budget: int | None = None
) -> tuple[tuple[GolombOrientation, ...], tuple[tuple[int, ...], ...]]:
    """Orientations and their hyperplane sign rows (aligned with
    golomb_hyperplanes(m), -1 when the positive block comes first), computed
    once per m. An explicit budget is honored on the first computation."""
    cached = _REGION_CACHE.get(m)
    if cached is not None:
        return cached
    tables = _tables(m)
    orientations = enumerate_constrained_orientations(m, budget=budget)
    rows = []
    for o in orientations:
        pos = {iv: i for i, iv in enumerate(o.order)}
        rows.append(
            tuple(
                -1 if pos[left] < pos[right] else 1
                for left, right in tables.hyper_sides
            )
        )
    _REGION_CACHE[m] = (orientations, tuple(rows))
    return _REGION_CACHE[m]


def region_sign_vector(orientation: GolombOrientation) -> dict[tuple[int, ...], int]:
    """Map each canonical hyperplane normal to the strict side (-1 or +1 for
    normal . z negative or positive) of the cell this orientation describes."""
    tables = _tables(orientation.m)
    pos = {iv: i for i, iv in enumerate(orientation.order)}
    if len(pos) != tables.n or set(pos) != set(tables.intervals):
        raise ValueError("orientation does not rank every proper consecutive subset exactly once")
    return {
        h: (-1 if pos[left] < pos[right] else 1)
        for h, (left, right) in zip(tables.hyperplanes, tables.hyper_sides)
    }


def _point_signs(tables: _Tables, gaps) -> tuple[int, ...]:
    signs = []
    for h in tables.hyperplanes:
        d = sum(c * g for c, g in zip(h, gaps))
        signs.append(0 if d == 0 else (1 if d > 0 else -1))
    return tuple(signs)


def multiplicity(z, *, budget: int | None = None) -> int:
    """Number of admissible orientations all of whose weak inequalities hold
    at the non-negative gap vector z (cell closures containing z). Equals 1
    exactly when z is a Golomb ruler; ties put z on a hyperplane and into
    several closures."""
    gaps = tuple(z)
    m = len(gaps)
    if m < 1:
        raise ValueError("z needs at least one entry")
    if any(g < 0 for g in gaps):
        raise ValueError("entries must be non-negative")
    if not any(gaps):
        raise ValueError("the all-zero vector is not a ruler of positive length")
    tables = _tables(m)
    point = _point_signs(tables, gaps)
    _, rows = _region_data(m, budget)
    count = 0
    for row in rows:
        for p, s in zip(point, row):
            if p != 0 and p != s:
                break
        else:
            count += 1
    return count


def complement_orientation(orientation: GolombOrientation) -> GolombOrientation:
    """Image under gap reversal z_i -> z_{m+1-i}; an involution on the
    admissible orientations, fixed-point-free for m >= 2."""
    m = orientation.m
    return GolombOrientation(
        m, tuple((m + 1 - b, m + 1 - a) for a, b in orientation.order)
    )


def orientations_json_dict(m: int, *, budget: int | None = None, jobs: int = 1) -> dict:
    """{"m", "count", "orientations"} with each orientation as its label sequence."""
    orientations = enumerate_constrained_orientations(m, budget=budget, jobs=jobs)
    return {
        "m": m,
        "count": len(orientations),
        "orientations": [list(o.labels()) for o in orientations],
    }


@dataclass(frozen=True)
class RealizabilityReport:
    """Outcome of the witness sweep in check_realizability."""

    m: int
    total: int
    realized: int
    unrealized: tuple[GolombOrientation, ...]
    stray_sign_vectors: tuple[tuple[int, ...], ...]
    length_searched: int

    @property
    def ok(self) -> bool:
        return not self.unrealized and not self.stray_sign_vectors


def check_realizability(
    m: int, *, length_ceiling: int = 60, budget: int | None = None
) -> RealizabilityReport:
    """Witness every admissible orientation with an integer Golomb ruler whose
    strict sign pattern realizes its cell, sweeping lengths upward until all
    are seen or the ceiling is reached.

    Orientations left without a witness are reported, never dropped. A sign
    pattern seen on a ruler that matches no orientation would falsify the
    cell/orientation correspondence at this m and is reported as stray.
    """
    tables = _tables(m)
    orientations, sign_rows = _region_data(m, budget)
    by_signs = dict(zip(sign_rows, orientations))
    assert len(by_signs) == len(orientations), "sign vectors must be pairwise distinct"
    realized: set[tuple[int, ...]] = set()
    stray: set[tuple[int, ...]] = set()
    searched = 0
    for t in range(1, length_ceiling + 1):
        searched = t
        for gaps in enumerate_golomb_rulers(m, t, budget=budget):
            row = _point_signs(tables, gaps)
            if row in by_signs:
                realized.add(row)
            else:
                stray.add(row)
        if len(realized) == len(orientations) and not stray:
            break
    unrealized = tuple(o for row, o in by_signs.items() if row not in realized)
    return RealizabilityReport(
        m=m,
        total=len(orientations),
        realized=len(realized),
        unrealized=unrealized,
        stray_sign_vectors=tuple(sorted(stray)),
        length_searched=searched,
    )
