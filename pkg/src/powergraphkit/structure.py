"""Structural classification: holes, anti-holes, chordality, simplicial
vertices, claws, Hamiltonicity, planarity, completeness.

Hole enumeration is exhaustive and canonical: every chordless cycle is
emitted exactly once, rotated so its smallest vertex comes first and
reflected so its second vertex is smaller than its last.
"""

import math
from dataclasses import dataclass

import networkx as nx

from . import numtheory
from .errors import BudgetExceeded, PowerGraphKitError, SearchBudget
from .groups import FiniteGroup, build_cyclic
from .powergraph import (
    CyclicClassGraph,
    Digraph,
    Graph,
    build_power_graph,
    iter_bits,
)

DEFAULT_SEARCH_BUDGET = 50_000_000
DEFAULT_HAMILTONIAN_BUDGET = 10_000_000


# -- chordless cycles ----------------------------------------------------------


def validate_hole(g: Graph, cycle, min_length: int = 4) -> bool:
    """True iff `cycle` is a chordless cycle of at least `min_length` distinct
    vertices: consecutive ones adjacent, all other pairs non-adjacent."""
    k = len(cycle)
    if k < min_length or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.has_edge(cycle[i], cycle[j])
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


def true_twin_representatives(g: Graph) -> list[int]:
    """One vertex per true-twin class (vertices sharing a closed
    neighborhood are mutually adjacent interchangeable twins)."""
    seen: dict[int, int] = {}
    reps = []
    for v in range(g.n):
        key = g.adj[v] | (1 << v)
        if key not in seen:
            seen[key] = v
            reps.append(v)
    return reps


def find_holes(
    g: Graph,
    max_length: int | None = None,
    parity: str | None = None,
    min_length: int = 4,
    limit: int | None = None,
    budget: int | None = None,
    reduce_twins: bool = False,
) -> list[tuple[int, ...]]:
    """Exhaustively enumerate chordless cycles of length >= min_length.

    `parity` restricts emission to "odd" or "even" lengths (the traversal is
    unchanged, so an empty result is still exhaustive); `max_length` bounds
    the cycle length; `limit` stops after that many witnesses. Budget
    exhaustion raises instead of returning a partial answer.

    With `reduce_twins` the search runs on one representative per true-twin
    class. A hole never holds two true twins (the second twin would chord to
    its partner's other cycle neighbour) and adjacency between twin classes
    is uniform, so holes of every length survive the reduction 1:1 up to
    twin substitution: existence, length, and parity questions are exact,
    and every returned cycle is still a genuine hole of `g`. Only the raw
    mode enumerates all twin-substituted variants.
    """
    if reduce_twins:
        verts = list(range(g.n))
        current = g
        while True:
            reps = true_twin_representatives(current)
            if len(reps) == current.n:
                break
            verts = [verts[i] for i in reps]
            current = current.induced(reps)
        found = find_holes(
            current,
            max_length=max_length,
            parity=parity,
            min_length=min_length,
            limit=limit,
            budget=budget,
        )
        return [tuple(verts[i] for i in hole) for hole in found]
    if parity not in (None, "odd", "even"):
        raise ValueError(f"parity must be None, 'odd' or 'even', not {parity!r}")
    if max_length is None:
        max_length = g.n
    if max_length < min_length:
        return []
    bud = SearchBudget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
    n = g.n
    # universal vertices have no non-neighbour, so they cannot lie on any
    # chordless cycle of length >= 4; drop them from the working adjacency
    allowed = g.full_mask & ~g.universal_mask()
    adj = [g.adj[v] & allowed for v in range(n)]
    results: list[tuple[int, ...]] = []
    parity_bit = {None: None, "odd": 1, "even": 0}[parity]

    def emit(cycle: list[int]) -> bool:
        k = len(cycle)
        if k >= min_length and (parity_bit is None or k % 2 == parity_bit):
            results.append(tuple(cycle))
            if limit is not None and len(results) >= limit:
                return True
        return False

    path: list[int] = []

    def dfs(s_adj: int, last: int, blocked: int, gt_mask: int) -> bool:
        # blocked: path vertices plus every neighbour of an interior vertex
        bud.spend()
        pool = adj[last] & gt_mask & ~blocked
        if len(path) + 1 >= 4:
            for w in iter_bits(pool & s_adj):
                if path[1] < w:
                    path.append(w)
                    done = emit(path)
                    path.pop()
                    if done:
                        return True
        if len(path) + 1 < max_length:
            extend = pool & ~s_adj
            new_blocked = blocked | adj[last]
            for w in iter_bits(extend):
                path.append(w)
                if dfs(s_adj, w, new_blocked | (1 << w), gt_mask):
                    return True
                path.pop()
        return False

    for s in iter_bits(allowed):
        gt_mask = allowed & ~((1 << (s + 1)) - 1)
        s_adj = adj[s]
        path.clear()
        path.append(s)
        stop = False
        for v1 in iter_bits(s_adj & gt_mask):
            path.append(v1)
            if dfs(s_adj, v1, (1 << s) | (1 << v1), gt_mask):
                stop = True
            path.pop()
            if stop:
                break
        path.pop()
        if stop:
            break
    return results


def find_anti_holes(
    g: Graph,
    max_length: int | None = None,
    parity: str | None = None,
    limit: int | None = None,
    budget: int | None = None,
    reduce_twins: bool = False,
) -> list[tuple[int, ...]]:
    """Chordless cycles of length >= 5 in the complement (anti-holes).

    Length-4 complements are disconnected pairs, not cycles, so anti-hole
    enumeration starts at 5.
    """
    return find_holes(
        g.complement(),
        max_length=max_length,
        parity=parity,
        min_length=5,
        limit=limit,
        budget=budget,
        reduce_twins=reduce_twins,
    )


def shortest_even_hole(g: Graph, budget: int | None = None) -> tuple[int, ...] | None:
    """Shortest even chordless cycle, or None if the graph has no even hole.

    Twin reduction preserves hole lengths, so searching representatives is
    exact here.
    """
    length = 4
    while length <= g.n:
        found = find_holes(
            g, max_length=length, parity="even", limit=1, budget=budget, reduce_twins=True
        )
        if found:
            return min(found, key=len)
        length += 2
    return None


# -- explicit even-hole constructions -------------------------------------------


def construct_even_hole_cyclic(primes, length: int) -> tuple[int, list[int]]:
    """Explicit hole of the requested even length in a cyclic group's power
    graph, together with the modulus it lives in.

    Length 4 takes two distinct primes p < q and lives in the cyclic group of
    order p^2 q^2 on vertices (p, p q^2, q, p^2 q). Length 2k >= 6 takes k
    distinct primes and alternates each prime with its product with the next,
    inside the cyclic group of squarefree order p_1 ... p_k. The returned
    witness is validated before being handed back.
    """
    primes = list(primes)
    if length % 2 or length < 4:
        raise ValueError(f"hole length must be even and >= 4, got {length}")
    if any(not numtheory.is_prime(p) for p in primes):
        raise ValueError(f"prime list {primes} contains a composite")
    if len(set(primes)) != len(primes):
        raise ValueError(f"prime list {primes} has repeats")
    if length == 4:
        if len(primes) != 2:
            raise ValueError("a 4-hole needs exactly two primes")
        p, q = primes
        modulus = p * p * q * q
        vertices = [p, p * q * q, q, p * p * q]
    else:
        if len(primes) != length // 2:
            raise ValueError(
                f"a {length}-hole needs exactly {length // 2} primes, got {len(primes)}"
            )
        modulus = math.prod(primes)
        vertices = []
        for i, p in enumerate(primes):
            vertices.append(p)
            vertices.append(p * primes[(i + 1) % len(primes)])
    graph = build_power_graph(build_cyclic(modulus))
    if not validate_hole(graph, vertices):
        raise PowerGraphKitError(
            f"constructed vertex list {vertices} is not a hole mod {modulus}"
        )
    return modulus, vertices


def verify_hole_prime_necessity(n: int, hole) -> bool:
    """For a hole of length L in the power graph of the cyclic group of
    order n, check that n has at least L/2 distinct prime factors."""
    return numtheory.distinct_prime_count(n) >= len(hole) // 2


def hole_out_vertex_orders(dg: Digraph, hole) -> list[dict]:
    """Classify each hole vertex as a local source (both incident cycle edges
    point outward) or local sink, with its element order and whether that
    order is a prime power.

    A mixed orientation would force a chord between the two neighbours, and a
    mutual edge would make them co-generators adjacent to the same vertices,
    so neither can occur inside a hole.
    """
    group = getattr(dg, "group", None)
    if group is None:
        raise ValueError("hole orientation analysis needs a directed power graph")
    k = len(hole)
    out = []
    for i, v in enumerate(hole):
        prev = hole[(i - 1) % k]
        nxt = hole[(i + 1) % k]
        to_prev = dg.has_edge(v, prev)
        from_prev = dg.has_edge(prev, v)
        to_next = dg.has_edge(v, nxt)
        from_next = dg.has_edge(nxt, v)
        if (to_prev and from_prev) or (to_next and from_next):
            raise PowerGraphKitError(f"mutual edge at hole vertex {v}")
        if to_prev and to_next:
            role = "source"
        elif from_prev and from_next:
            role = "sink"
        else:
            raise PowerGraphKitError(f"mixed orientation at hole vertex {v}")
        order = group.element_orders[v]
        out.append(
            {
                "vertex": v,
                "role": role,
                "order": order,
                "prime_power_order": numtheory.is_prime_power(order),
            }
        )
    return out


# -- chordality -----------------------------------------------------------------


@dataclass
class ChordalityResult:
    chordal: bool
    elimination_order: tuple[int, ...] | None
    hole: tuple[int, ...] | None


def _lexbfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS visit order with smallest-index tie-breaks."""
    n = g.n
    labels = [0] * n
    order = []
    unvisited = g.full_mask
    for step in range(n):
        best_v = -1
        best_label = -1
        for v in iter_bits(unvisited):
            if labels[v] > best_label:
                best_label = labels[v]
                best_v = v
        order.append(best_v)
        unvisited &= ~(1 << best_v)
        weight = 1 << (n - step)
        for u in iter_bits(g.adj[best_v] & unvisited):
            labels[u] |= weight
    return order


def _verify_elimination_order(g: Graph, elim: list[int]) -> bool:
    """Check that `elim` is a perfect elimination order: each vertex's later
    neighbours form a clique, tested via the earliest of them."""
    n = g.n
    pos = [0] * n
    for i, v in enumerate(elim):
        pos[v] = i
    remaining = g.full_mask
    for v in elim:
        remaining &= ~(1 << v)
        later = g.adj[v] & remaining
        if later:
            u = min(iter_bits(later), key=lambda w: pos[w])
            if later & ~g.adj[u] & ~(1 << u):
                return False
    return True


def is_chordal(g: Graph, budget: int | None = None) -> ChordalityResult:
    """LexBFS chordality recognition with a verified certificate either way:
    a perfect elimination order when chordal, a hole when not."""
    if g.n == 0:
        return ChordalityResult(True, (), None)
    elim = list(reversed(_lexbfs_order(g)))
    if _verify_elimination_order(g, elim):
        return ChordalityResult(True, tuple(elim), None)
    holes = find_holes(g, limit=1, budget=budget, reduce_twins=True)
    if not holes:
        raise PowerGraphKitError("elimination check failed but no hole was found")
    return ChordalityResult(False, None, holes[0])


# -- simplicial vertices ----------------------------------------------------------


def simplicial_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices whose neighbourhood induces a clique."""
    out = []
    for v in range(g.n):
        nb = g.adj[v]
        if all(not (nb & ~g.adj[u] & ~(1 << u)) for u in iter_bits(nb)):
            out.append(v)
    return tuple(out)


def simplicial_gcd_check(n: int, k: int, graph: Graph | None = None) -> bool:
    """For a vertex k of the power graph of the cyclic group of order n
    (n not a prime power), validate the implication
    "simplicial implies gcd(k, n) != 1". The converse is deliberately not
    asserted: gcd(6, 12) != 1 yet 6 is not simplicial mod 12."""
    if numtheory.is_prime_power(n):
        raise ValueError(f"n = {n} is a prime power; the implication is about composite shapes")
    if graph is None:
        graph = build_power_graph(build_cyclic(n))
    if k not in range(n):
        raise ValueError(f"vertex {k} out of range for modulus {n}")
    if k in simplicial_vertices(graph):
        return math.gcd(k, n) != 1
    return True


def class_parent_child_simplicial(gcc: CyclicClassGraph, class_idx: int) -> bool:
    """For a class other than the generator class and the identity class,
    the class vertex is simplicial in the undirected class graph exactly when
    it has one parent and one child in the covering relation; this returns
    the covering-relation side of that equivalence."""
    orders = gcc.subgroup_orders
    if orders[class_idx] == gcc.group.order and gcc.group.is_cyclic():
        raise ValueError("the generator class is excluded from the parent/child criterion")
    if orders[class_idx] == 1:
        raise ValueError("the identity class is excluded from the parent/child criterion")
    return len(gcc.parents(class_idx)) == 1 and len(gcc.children(class_idx)) == 1


# -- claws -------------------------------------------------------------------------


def is_claw_free(g: Graph) -> tuple[bool, tuple[int, int, int, int] | None]:
    """Exhaustive induced-star search; the witness is (center, leaf, leaf, leaf)."""
    for v in range(g.n):
        nb = g.adj[v]
        for x in iter_bits(nb):
            higher = nb & ~((1 << (x + 1)) - 1)
            for y in iter_bits(higher & ~g.adj[x]):
                rest = higher & ~g.adj[x] & ~g.adj[y] & ~((1 << (y + 1)) - 1)
                if rest:
                    z = (rest & -rest).bit_length() - 1
                    return False, (v, x, y, z)
    return True, None


# -- Hamiltonicity -------------------------------------------------------------------


def is_hamiltonian(
    g: Graph, budget: int | None = None
) -> tuple[bool, tuple[int, ...] | None]:
    """Exact Hamiltonian-cycle decision by backtracking with a degree prune.

    Graphs on fewer than three vertices are never Hamiltonian. Budget
    exhaustion raises BudgetExceeded rather than guessing.
    """
    n = g.n
    if n < 3:
        return False, None
    if not g.is_connected() or any(g.degree(v) < 2 for v in range(n)):
        return False, None
    bud = SearchBudget(budget if budget is not None else DEFAULT_HAMILTONIAN_BUDGET)
    full = g.full_mask
    adj = g.adj
    path = [0]

    def dfs(last: int, visited: int) -> bool:
        bud.spend()
        if visited == full:
            return bool(adj[last] & 1)
        remaining = full & ~visited
        # every remaining vertex still needs two usable connections among the
        # remaining vertices, the current endpoint, and the start
        usable = remaining | (1 << last) | 1
        for u in iter_bits(remaining):
            need = adj[u] & usable
            if need.bit_count() < 2:
                return False
        # fewest-onward-moves first keeps dense structured graphs tractable
        options = sorted(
            iter_bits(adj[last] & remaining),
            key=lambda w: ((adj[w] & remaining).bit_count(), w),
        )
        for w in options:
            path.append(w)
            if dfs(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    if dfs(0, 1):
        return True, tuple(path)
    return False, None


def hamiltonian_lift(gcc: CyclicClassGraph, class_cycle) -> list[int]:
    """Expand a Hamiltonian cycle of the class graph into a Hamiltonian cycle
    of the power graph by walking each class's elements consecutively (every
    class is a clique, and any two representatives of adjacent classes are
    adjacent)."""
    cycle = list(class_cycle)
    k = gcc.n
    if sorted(cycle) != list(range(k)) or k < 3:
        raise ValueError("input must visit every class exactly once")
    for i in range(k):
        if not gcc.undirected.has_edge(cycle[i], cycle[(i + 1) % k]):
            raise ValueError(
                f"classes {cycle[i]} and {cycle[(i + 1) % k]} are not adjacent"
            )
    element_cycle: list[int] = []
    for idx in cycle:
        element_cycle.extend(gcc.classes[idx])
    group = gcc.group
    m = len(element_cycle)
    for i in range(m):
        x = element_cycle[i]
        y = element_cycle[(i + 1) % m]
        if not (group.subgroup_leq(x, y) or group.subgroup_leq(y, x)):
            raise PowerGraphKitError("class expansion produced a non-edge")
    return element_cycle


# -- planarity and completeness ----------------------------------------------------


def is_planar(g: Graph) -> bool:
    """Exact planarity via the left-right criterion (networkx), after the
    |E| <= 3|V| - 6 counting shortcut for the dense non-planar case."""
    n = g.n
    m = g.edge_count()
    if n >= 3 and m > 3 * n - 6:
        return False
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    for u in range(n):
        for v in iter_bits(g.adj[u]):
            if v > u:
                nxg.add_edge(u, v)
    flag, _ = nx.check_planarity(nxg)
    return bool(flag)


def is_complete(g: Graph) -> bool:
    return g.edge_count() == g.n * (g.n - 1) // 2


# -- report ---------------------------------------------------------------------


@dataclass
class StructureReport:
    spec: str
    complete: bool
    chordal: bool | None
    hole_witness: list | None
    simplicial: list
    claw_free: bool
    claw_witness: list | None
    planar: bool
    hamiltonian: bool | None
    hamiltonian_cycle: list | None
    odd_hole: list | None
    anti_hole: list | None
    shortest_even_hole: list | None
    notes: list[str]

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "complete": self.complete,
            "chordal": self.chordal,
            "hole_witness": self.hole_witness,
            "simplicial": self.simplicial,
            "claw_free": self.claw_free,
            "claw_witness": self.claw_witness,
            "planar": self.planar,
            "hamiltonian": self.hamiltonian,
            "hamiltonian_cycle": self.hamiltonian_cycle,
            "odd_hole": self.odd_hole,
            "anti_hole": self.anti_hole,
            "shortest_even_hole": self.shortest_even_hole,
            "notes": self.notes,
        }


def build_structure_report(
    group: FiniteGroup,
    *,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
    hamiltonian_budget: int = DEFAULT_HAMILTONIAN_BUDGET,
) -> StructureReport:
    pg = build_power_graph(group)
    labels = group.labels
    notes: list[str] = []

    chordal_flag: bool | None
    hole_witness = None
    try:
        chordality = is_chordal(pg, search_budget)
        chordal_flag = chordality.chordal
        if chordality.hole:
            hole_witness = [_label(labels, v) for v in chordality.hole]
    except BudgetExceeded:
        chordal_flag = None
        notes.append("chordality witness budget exhausted; flag unknown")
    ham: bool | None
    cycle_labels = None
    try:
        ham, cycle = _hamiltonian_with_class_shortcut(group, pg, hamiltonian_budget)
        if cycle is not None:
            cycle_labels = [_label(labels, v) for v in cycle]
    except BudgetExceeded:
        ham = None
        notes.append("hamiltonicity budget exhausted; flag unknown")

    odd = anti = shortest = None
    try:
        odd_holes = find_holes(pg, parity="odd", limit=1, budget=search_budget, reduce_twins=True)
        odd = [_label(labels, v) for v in odd_holes[0]] if odd_holes else None
        antis = find_anti_holes(pg, limit=1, budget=search_budget, reduce_twins=True)
        anti = [_label(labels, v) for v in antis[0]] if antis else None
        even = shortest_even_hole(pg, budget=search_budget)
        shortest = [_label(labels, v) for v in even] if even else None
    except BudgetExceeded:
        notes.append("hole enumeration budget exhausted; witnesses unknown")

    claw_free, claw = is_claw_free(pg)
    return StructureReport(
        spec=group.label,
        complete=is_complete(pg),
        chordal=chordal_flag,
        hole_witness=hole_witness,
        simplicial=[_label(labels, v) for v in simplicial_vertices(pg)],
        claw_free=claw_free,
        claw_witness=[_label(labels, v) for v in claw] if claw else None,
        planar=is_planar(pg),
        hamiltonian=ham,
        hamiltonian_cycle=cycle_labels,
        odd_hole=odd,
        anti_hole=anti,
        shortest_even_hole=shortest,
        notes=notes,
    )


def _hamiltonian_with_class_shortcut(group, pg, budget):
    """Hamiltonicity with a cheap sufficient test first: a Hamiltonian cycle
    of the class graph expands to one of the power graph. Only when the class
    graph has none does the exact element-level search decide."""
    from .powergraph import build_cyclic_class_graph

    gcc = build_cyclic_class_graph(group)
    if gcc.n >= 3:
        try:
            ok, class_cycle = is_hamiltonian(gcc.undirected, budget)
        except BudgetExceeded:
            ok = False
        if ok:
            cycle = hamiltonian_lift(gcc, class_cycle)
            return True, tuple(cycle)
    return is_hamiltonian(pg, budget)


def _label(labels, v: int):
    lab = labels[v]
    return list(lab) if isinstance(lab, tuple) else lab
