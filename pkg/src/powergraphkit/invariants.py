"""Exact metric, clique, coloring, and directed-path invariants.

Every solver here is exact: searches are branch-and-bound with admissible
bounds, budgets abort with BudgetExceeded instead of degrading to a guess,
and witnesses are deterministic (lexicographically smallest optimum under
the vertex order wherever the contract asks for a set).
"""

from dataclasses import dataclass

from . import numtheory
from .errors import (
    BudgetExceeded,
    DisconnectedGraphError,
    PathCapExceeded,
    PowerGraphKitError,
    SearchBudget,
)
from .groups import FiniteGroup
from .powergraph import (
    Digraph,
    Graph,
    PowerGraph,
    build_directed_power_graph,
    build_power_graph,
    iter_bits,
)

DEFAULT_SEARCH_BUDGET = 50_000_000
DEFAULT_PATH_CAP = 24


# -- distances ---------------------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[int]:
    """BFS distances from source; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = d
    return dist


@dataclass
class EccentricitySummary:
    eccentricities: list[int]
    radius: int
    diameter: int
    center: tuple[int, ...]


def eccentricities(g: Graph) -> EccentricitySummary:
    """Exact eccentricities by per-vertex BFS; rejects disconnected graphs.

    On a power graph of a nontrivial group the center must coincide with the
    degree-(n-1) vertices; a mismatch is an internal error, not a finding.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    ecc = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if min(dist) < 0:
            raise DisconnectedGraphError("eccentricities need a connected graph")
        ecc.append(max(dist))
    radius = min(ecc)
    summary = EccentricitySummary(
        eccentricities=ecc,
        radius=radius,
        diameter=max(ecc),
        center=tuple(v for v in range(g.n) if ecc[v] == radius),
    )
    if isinstance(g, PowerGraph) and g.n > 1:
        universal = tuple(v for v in range(g.n) if g.degree(v) == g.n - 1)
        if summary.center != universal:
            raise PowerGraphKitError(
                "power graph center does not match the degree-(n-1) vertex set"
            )
    return summary


# -- maximum clique -----------------------------------------------------------


def _twin_classes(g: Graph) -> list[list[int]]:
    """Vertex classes sharing a closed neighborhood (true twins), ordered by
    smallest member. Twins are pairwise adjacent and interchangeable, so a
    maximum clique is always a union of whole classes."""
    by_key: dict[int, list[int]] = {}
    for v in range(g.n):
        by_key.setdefault(g.adj[v] | (1 << v), []).append(v)
    return sorted(by_key.values(), key=lambda c: c[0])


def _weighted_color_bounds(adj: list[int], weights: list[int], pool: int):
    """Greedy coloring of `pool`; per position, the cumulative sum of each
    color class's maximum weight bounds any clique among the vertices
    colored so far (a clique meets every color class at most once)."""
    order: list[int] = []
    bounds: list[int] = []
    total = 0
    rest = pool
    while rest:
        cand = rest
        class_max = 0
        start = len(order)
        while cand:
            v = (cand & -cand).bit_length() - 1
            bit = 1 << v
            cand &= ~adj[v]
            cand ^= bit
            rest ^= bit
            order.append(v)
            if weights[v] > class_max:
                class_max = weights[v]
        total += class_max
        bounds.extend([total] * (len(order) - start))
    return order, bounds


def _greedy_weighted_clique(adj: list[int], weights: list[int], n: int) -> int:
    best = 0
    ranked = sorted(range(n), key=lambda v: (-(weights[v] * (adj[v].bit_count() + 1)), v))
    for start in ranked[:16]:
        weight = weights[start]
        pool = adj[start]
        while pool:
            v = max(iter_bits(pool), key=lambda u: weights[u])
            weight += weights[v]
            pool &= adj[v]
        best = max(best, weight)
    return best


def _weighted_clique_best(
    adj: list[int],
    weights: list[int],
    pool: int,
    budget: SearchBudget,
    seed: int = 0,
    target: int | None = None,
) -> int:
    """Exact maximum clique weight within `pool` (at least `seed`); with
    `target` set, the search stops as soon as some clique reaches it."""
    best = seed
    done = False

    def expand(rw: int, p: int) -> None:
        nonlocal best, done
        if done:
            return
        budget.spend()
        order, bounds = _weighted_color_bounds(adj, weights, p)
        for i in range(len(order) - 1, -1, -1):
            if done or rw + bounds[i] <= best:
                return
            v = order[i]
            p &= ~(1 << v)
            sub = p & adj[v]
            nw = rw + weights[v]
            if sub:
                expand(nw, sub)
            elif nw > best:
                best = nw
                if target is not None and best >= target:
                    done = True
                    return

    if pool:
        expand(0, pool)
    return best


def max_clique(g: Graph, budget: int | None = None) -> tuple[int, ...]:
    """Exact maximum clique; returns the lexicographically smallest optimal
    vertex set under the index order.

    The search runs on the true-twin quotient with class sizes as weights;
    because maximum cliques are unions of whole twin classes, the quotient
    solution expands back exactly, and greedy class selection in smallest-
    member order reproduces the lexicographically smallest witness.
    """
    if g.n == 0:
        return ()
    bud = SearchBudget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
    classes = _twin_classes(g)
    reps = [c[0] for c in classes]
    weights = [len(c) for c in classes]
    quotient = g.induced(reps)
    k = len(reps)
    full = (1 << k) - 1
    seed = max(_greedy_weighted_clique(quotient.adj, weights, k) - 1, 0)
    total = _weighted_clique_best(quotient.adj, weights, full, bud, seed=seed)
    chosen: list[int] = []
    pool = full
    need = total
    for ci in range(k):
        if need == 0:
            break
        if not (pool >> ci) & 1:
            continue
        w = weights[ci]
        if w > need:
            raise PowerGraphKitError("internal error: overweight class in clique pool")
        rest = pool & quotient.adj[ci]
        if w == need or (
            _weighted_clique_best(
                quotient.adj, weights, rest, bud, seed=need - w - 1, target=need - w
            )
            >= need - w
        ):
            chosen.append(ci)
            pool = rest
            need -= w
    if need != 0:
        raise PowerGraphKitError("internal error: clique reconstruction failed")
    out: list[int] = []
    for ci in chosen:
        out.extend(classes[ci])
    return tuple(sorted(out))


def independence_number(g: Graph, budget: int | None = None) -> tuple[int, ...]:
    """Exact maximum independent set (clique search on the complement)."""
    return max_clique(g.complement(), budget)


# -- coloring ------------------------------------------------------------------


def dsatur_greedy(g: Graph) -> list[int]:
    """Deterministic DSATUR greedy coloring (colors start at 0)."""
    n = g.n
    colors = [-1] * n
    forbid = [0] * n
    degrees = [g.degree(v) for v in range(n)]
    for _ in range(n):
        best_v = -1
        best_key = None
        for v in range(n):
            if colors[v] >= 0:
                continue
            key = (forbid[v].bit_count(), degrees[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                best_v = v
        c = 0
        used = forbid[best_v]
        while (used >> c) & 1:
            c += 1
        colors[best_v] = c
        for u in iter_bits(g.adj[best_v]):
            forbid[u] |= 1 << c
    return colors


def validate_coloring(g: Graph, colors: list[int]) -> bool:
    return all(
        colors[u] != colors[v]
        for u in range(g.n)
        for v in iter_bits(g.adj[u])
        if v > u
    )


def _normalize_colors(colors: list[int]) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return tuple(out)


def _dsatur_decision(g: Graph, k: int, budget: SearchBudget) -> list[int] | None:
    """Backtracking k-coloring with DSATUR vertex selection; None if no
    proper k-coloring exists."""
    n = g.n
    colors = [-1] * n
    forbid = [0] * n
    degrees = [g.degree(v) for v in range(n)]
    limit_mask = (1 << k) - 1

    def pick() -> int:
        best_v = -1
        best_key = None
        for v in range(n):
            if colors[v] >= 0:
                continue
            key = ((forbid[v] & limit_mask).bit_count(), degrees[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                best_v = v
        return best_v

    def assign(colored: int, max_used: int) -> bool:
        budget.spend()
        if colored == n:
            return True
        v = pick()
        avail = ~forbid[v] & ((1 << min(k, max_used + 2)) - 1)
        while avail:
            c = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            colors[v] = c
            touched = []
            for u in iter_bits(g.adj[v]):
                if colors[u] < 0 and not (forbid[u] >> c) & 1:
                    forbid[u] |= 1 << c
                    touched.append(u)
            if assign(colored + 1, max(max_used, c)):
                return True
            for u in touched:
                forbid[u] &= ~(1 << c)
            colors[v] = -1
        return False

    return list(colors) if assign(0, -1) else None


def chain_layer_coloring(group: FiniteGroup, vertex_mask: int | None = None) -> dict[int, int]:
    """Proper coloring of the power graph restricted to any vertex subset.

    Elements of one cyclic-subgroup class get a run of consecutive colors,
    offset below every present class that properly contains theirs; any two
    adjacent vertices are in comparable classes, so their runs are disjoint.
    The color count equals the heaviest present class chain, which is
    validated against the exact clique number by callers that use it.
    """
    n = group.order
    if vertex_mask is None:
        vertex_mask = (1 << n) - 1
    members: dict[int, list[int]] = {}
    for x in iter_bits(vertex_mask):
        members.setdefault(group.subgroup_masks[x], []).append(x)
    keys = sorted(members, key=lambda m: (-m.bit_count(), m))
    offsets: dict[int, int] = {}
    for m in keys:
        off = 0
        for other in keys:
            if other != m and m & ~other == 0:  # other strictly contains m
                off = max(off, offsets[other] + len(members[other]))
        offsets[m] = off
    coloring: dict[int, int] = {}
    for m in keys:
        for i, x in enumerate(sorted(members[m])):
            coloring[x] = offsets[m] + i
    return coloring


def chromatic_number(
    g: Graph,
    budget: int | None = None,
    *,
    group: FiniteGroup | None = None,
    vertex_mask: int | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number with a certificate coloring.

    Lower bound: exact clique number. Upper bounds: DSATUR greedy plus, for
    power graphs (or their class-structured induced subgraphs identified by
    `group`/`vertex_mask`), the chain-layer coloring. Any remaining gap is
    closed by DSATUR-ordered backtracking.
    """
    if g.n == 0:
        return 0, ()
    bud_total = budget if budget is not None else DEFAULT_SEARCH_BUDGET
    omega = len(max_clique(g, bud_total))
    candidates: list[list[int]] = [dsatur_greedy(g)]
    if group is None and isinstance(g, PowerGraph):
        group = g.group
    if group is not None:
        layered = chain_layer_coloring(group, vertex_mask)
        if len(layered) == g.n:
            if vertex_mask is None:
                colors = [layered[v] for v in range(g.n)]
            else:
                verts = list(iter_bits(vertex_mask))
                colors = [layered[v] for v in verts]
            if validate_coloring(g, colors):
                candidates.append(colors)
    best = min(candidates, key=lambda c: len(set(c)))
    best_k = len(set(best))
    if best_k == omega:
        return best_k, _normalize_colors(best)
    bud = SearchBudget(bud_total)
    for k in range(omega, best_k):
        found = _dsatur_decision(g, k, bud)
        if found is not None:
            return k, _normalize_colors(found)
    return best_k, _normalize_colors(best)


def chromatic_via_generator_peeling(group: FiniteGroup, budget: int | None = None) -> int:
    """Chromatic number of a cyclic group's power graph computed by peeling
    the generator clique, then recursively peeling whatever is universal in
    the remainder; the first stuck remainder is solved exactly."""
    if not group.is_cyclic():
        raise ValueError(f"{group.label!r} is not cyclic")
    n = group.order
    pg = build_power_graph(group)
    generators = _mask_of(x for x in range(n) if group.element_orders[x] == n)
    total = generators.bit_count()
    remaining = pg.full_mask & ~generators
    while remaining:
        universal = 0
        for v in iter_bits(remaining):
            if pg.adj[v] & remaining == remaining & ~(1 << v):
                universal |= 1 << v
        if universal:
            total += universal.bit_count()
            remaining &= ~universal
            continue
        verts = list(iter_bits(remaining))
        sub = pg.induced(verts)
        k, _ = chromatic_number(sub, budget, group=group, vertex_mask=remaining)
        return total + k
    return total


def _mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# -- directed paths ------------------------------------------------------------


def _tarjan_scc(out: list[int], verts_mask: int) -> tuple[dict[int, int], list[int]]:
    """Strongly connected components of the subgraph induced on verts_mask.

    Returns (component id per vertex, component sizes); ids are in reverse
    topological order of the condensation (sources get the largest ids).
    """
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    comp: dict[int, int] = {}
    sizes: list[int] = []
    stack: list[int] = []
    on_stack: set[int] = set()
    counter = [0]

    def strongconnect(v: int) -> None:
        work = [(v, iter_bits(out[v] & verts_mask))]
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on_stack.add(v)
        while work:
            node, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter_bits(out[w] & verts_mask)))
                    advanced = True
                    break
                if w in on_stack:
                    low[node] = min(low[node], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                cid = len(sizes)
                size = 0
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp[w] = cid
                    size += 1
                    if w == node:
                        break
                sizes.append(size)

    for v in iter_bits(verts_mask):
        if v not in index:
            strongconnect(v)
    return comp, sizes


def _scc_path_bound(out: list[int], start: int, unvisited: int) -> int:
    """Upper bound on how many new vertices a simple path from `start` can
    still visit: the heaviest path in the condensation DAG of the subgraph
    induced on the unvisited vertices plus `start`."""
    verts = unvisited | (1 << start)
    comp, sizes = _tarjan_scc(out, verts)
    k = len(sizes)
    weights = [0] * k
    for v in iter_bits(unvisited):
        weights[comp[v]] += 1
    dag: list[set[int]] = [set() for _ in range(k)]
    for v in iter_bits(verts):
        cv = comp[v]
        for w in iter_bits(out[v] & verts):
            cw = comp[w]
            if cw != cv:
                dag[cv].add(cw)
    memo = [-1] * k

    def longest(c: int) -> int:
        if memo[c] >= 0:
            return memo[c]
        best = 0
        for d in dag[c]:
            best = max(best, longest(d))
        memo[c] = weights[c] + best
        return memo[c]

    return longest(comp[start])


def longest_directed_path_bruteforce(
    dg: Digraph, cap: int = DEFAULT_PATH_CAP, budget: int | None = None
) -> tuple[int, ...]:
    """Exact longest simple directed path by exhaustive DFS.

    Pruning uses the condensation bound: a simple path can enter each
    strongly connected component at most once, so the heaviest component
    chain reachable from the current endpoint bounds any extension. The
    first optimal path found is returned (deterministic under the ascending
    vertex order). Graphs above `cap` vertices are refused.
    """
    n = dg.n
    if n > cap:
        raise PathCapExceeded(f"{n} vertices exceeds the longest-path cap {cap}")
    if n == 0:
        return ()
    out = dg.out
    bud = SearchBudget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
    best_len = 0
    best_path: tuple[int, ...] = ()
    path: list[int] = []
    full = (1 << n) - 1

    def dfs(v: int, visited: int) -> None:
        nonlocal best_len, best_path
        bud.spend()
        path.append(v)
        if len(path) > best_len:
            best_len = len(path)
            best_path = tuple(path)
        ext = out[v] & ~visited
        for w in iter_bits(ext):
            rest = ~(visited | (1 << w)) & full
            if len(path) + 1 + _scc_path_bound(out, w, rest) > best_len:
                dfs(w, visited | (1 << w))
            elif len(path) + 1 > best_len:
                best_len = len(path) + 1
                best_path = tuple(path) + (w,)
        path.pop()

    for v in range(n):
        if 1 + _scc_path_bound(out, v, full & ~(1 << v)) > best_len:
            dfs(v, 1 << v)
    return best_path


def construct_longest_path_cyclic(n: int) -> list[int]:
    """Longest directed path through the power graph of the cyclic group of
    order n: all generators, then the generators of the index-p subgroup for
    the smallest prime p, and so on down to the identity."""
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    seq: list[int] = []
    scale = 1
    m = n
    while m > 1:
        seq.extend(scale * k for k in range(1, m) if numtheory.gcd(k, m) == 1)
        p = numtheory.smallest_prime_factor(m)
        scale *= p
        m //= p
    seq.append(0)
    return seq


def clique_to_directed_path(dg: Digraph, clique) -> list[int]:
    """Arrange a clique of the undirected support into a directed path by
    incremental insertion: reuse a mutual edge if one exists, otherwise try
    prepending, appending, and finally the first splice point, which always
    exists inside a clique."""
    verts = sorted(set(clique))
    has = dg.has_edge
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if not has(u, v) and not has(v, u):
                raise ValueError(f"input is not a clique: {u} and {v} are not adjacent")
    if not verts:
        return []
    path = [verts[0]]
    for v in verts[1:]:
        slot = next(
            (i for i, u in enumerate(path) if has(u, v) and has(v, u)),
            None,
        )
        if slot is not None:
            path.insert(slot + 1, v)
            continue
        if has(v, path[0]):
            path.insert(0, v)
            continue
        if has(path[-1], v):
            path.append(v)
            continue
        for i in range(len(path) - 1):
            if has(path[i], v) and has(v, path[i + 1]):
                path.insert(i + 1, v)
                break
        else:
            raise PowerGraphKitError("internal error: clique insertion found no slot")
    return path


def general_group_clique_number(group: FiniteGroup) -> int:
    """Clique number of the power graph predicted from element orders alone:
    the largest chain sum over any element's order."""
    return max(numtheory.psi(o) for o in group.element_orders)


# -- composition-length partition ----------------------------------------------


@dataclass
class CompositionPartition:
    """Partition of an abelian group by the composition length of each
    element's cyclic subgroup (the exponent sum of its order)."""

    group_label: str
    blocks: dict[int, tuple[int, ...]]

    def max_index(self) -> int:
        return max(self.blocks)


def composition_partition(group: FiniteGroup) -> CompositionPartition:
    if not group.is_abelian:
        raise ValueError(
            f"composition length via exponent sums needs an abelian group; "
            f"{group.label!r} is not abelian"
        )
    blocks: dict[int, list[int]] = {}
    for x in range(group.order):
        blocks.setdefault(numtheory.big_omega(group.element_orders[x]), []).append(x)
    return CompositionPartition(
        group.label, {i: tuple(xs) for i, xs in sorted(blocks.items())}
    )


# -- report -----------------------------------------------------------------


@dataclass
class InvariantReport:
    spec: str
    order: int
    connected: bool
    complete: bool
    radius: int | None
    diameter: int | None
    center: list
    clique_number: int | None
    chromatic_number: int | None
    independence_number: int | None
    psi: int | None
    longest_directed_path: int | None
    notes: list[str]

    CSV_FIELDS = (
        "spec",
        "order",
        "connected",
        "complete",
        "radius",
        "diameter",
        "center_size",
        "clique_number",
        "chromatic_number",
        "independence_number",
        "psi",
        "longest_directed_path",
    )

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "order": self.order,
            "connected": self.connected,
            "complete": self.complete,
            "radius": self.radius,
            "diameter": self.diameter,
            "center": self.center,
            "clique_number": self.clique_number,
            "chromatic_number": self.chromatic_number,
            "independence_number": self.independence_number,
            "psi": self.psi,
            "longest_directed_path": self.longest_directed_path,
            "notes": self.notes,
        }

    def to_csv_row(self) -> list:
        return [
            self.spec,
            self.order,
            self.connected,
            self.complete,
            self.radius,
            self.diameter,
            len(self.center),
            self.clique_number,
            self.chromatic_number,
            self.independence_number,
            self.psi,
            self.longest_directed_path,
        ]


def build_invariant_report(
    group: FiniteGroup,
    *,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
    path_cap: int = DEFAULT_PATH_CAP,
) -> InvariantReport:
    pg = build_power_graph(group)
    dpg = build_directed_power_graph(group)
    notes: list[str] = []
    n = group.order

    connected = pg.is_connected()
    if not connected:
        raise PowerGraphKitError("power graphs of groups are connected by construction")
    summary = eccentricities(pg)

    clique = chrom = alpha = None
    try:
        clique = len(max_clique(pg, search_budget))
        chrom = chromatic_number(pg, search_budget)[0]
        alpha = len(independence_number(pg, search_budget))
    except BudgetExceeded:
        notes.append("clique/coloring search budget exhausted; values unknown")

    longest = None
    if n <= path_cap:
        try:
            longest = len(longest_directed_path_bruteforce(dpg, path_cap, search_budget))
        except BudgetExceeded:
            notes.append("longest-path budget exhausted; value unknown")
    else:
        notes.append(f"longest directed path skipped above the {path_cap}-vertex cap")

    labels = [group.labels[v] for v in summary.center]
    return InvariantReport(
        spec=group.label,
        order=n,
        connected=connected,
        complete=pg.edge_count() == n * (n - 1) // 2,
        radius=summary.radius,
        diameter=summary.diameter,
        center=[_jsonable(lab) for lab in labels],
        clique_number=clique,
        chromatic_number=chrom,
        independence_number=alpha,
        psi=numtheory.psi(n) if group.is_cyclic() else None,
        longest_directed_path=longest,
        notes=notes,
    )


def _jsonable(label):
    return list(label) if isinstance(label, tuple) else label
