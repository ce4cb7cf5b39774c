"""Spanning-tree counting and the identification / composition identities.

Counting methods (all exact, edge lengths ignored, self-loops ignored):

* matrix-tree cofactor with fraction-free determinant,
* deletion-contraction recursion,
* brute-force subset enumeration (the oracle, budget-guarded),
* expansion over the neighborhood of a deleted vertex.

On top of those sit the composite-graph product/sum formulas for graphs glued
at one, two, or three vertices, the quadratic identification identities, the
edge-deletion/contraction identities, and the per-edge square-sum expansion
of identified counts.

Conventions used by every formula evaluator: a graph with a single vertex
has exactly one spanning tree, and an "identification" of a vertex with
itself counts as zero.  The zero convention lives here, in the evaluators,
not in :meth:`Multigraph.identify` (where a singleton group is a no-op).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

from .exactnum import Matrix
from .graph import (
    EdgeId,
    GraphError,
    Multigraph,
    PreconditionError,
    VertexId,
    _vkey,
)
from .polyseq import morgan_voyce, w_poly


def count_matrix_tree(graph: Multigraph) -> int:
    """Number of spanning trees via a cofactor of the integer Laplacian.

    Parallel edges count with multiplicity; disconnected graphs give 0; a
    single-vertex graph gives 1.
    """
    if graph.n == 0:
        raise GraphError("graph has no vertices")
    order = graph.sorted_vertices()
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    rows = [[0] * n for _ in range(n)]
    for e in graph.edges():
        if e.is_loop():
            continue
        i, j = idx[e.u], idx[e.v]
        rows[i][j] -= 1
        rows[j][i] -= 1
        rows[i][i] += 1
        rows[j][j] += 1
    minor = Matrix(rows).drop(0, 0)
    det = minor.det()
    assert det.denominator == 1
    return int(det)


def count_deletion_contraction(graph: Multigraph) -> int:
    """Number of spanning trees by deletion-contraction recursion.

    Self-loops are stripped and bridges contracted first (a bridge sits in
    every spanning tree), then the recursion branches on an edge at a
    maximum-degree vertex.  No memoization; intended for desk-scale graphs.
    """
    if graph.n == 0:
        raise GraphError("graph has no vertices")
    g = graph
    loops = [e.id for e in g.edges() if e.is_loop()]
    if loops:
        g = g.delete_edges(loops)
    if not g.is_connected():
        return 0
    while True:
        bridge = next((e for e in g.edge_ids() if g.is_bridge(e)), None)
        if bridge is None:
            break
        g, _ = g.contract_edge(bridge)
        loops = [e.id for e in g.edges() if e.is_loop()]
        if loops:
            g = g.delete_edges(loops)
    if g.m == 0:
        return 1 if g.n == 1 else 0
    busiest = max(g.sorted_vertices(), key=lambda v: (g.degree(v), _vkey(v)))
    e = min(g.incident(busiest), key=_vkey)
    contracted, _ = g.contract_edge(e)
    return count_deletion_contraction(contracted) + count_deletion_contraction(
        g.delete_edge(e)
    )


def count_enumeration(graph: Multigraph, max_edges: int = 20) -> int:
    """Brute-force oracle: count (n-1)-subsets of non-loop edges that span."""
    if graph.n == 0:
        raise GraphError("graph has no vertices")
    edges = [e for e in graph.edges() if not e.is_loop()]
    if len(edges) > max_edges:
        raise PreconditionError(
            f"enumeration budget exceeded: {len(edges)} > {max_edges} edges"
        )
    order = graph.sorted_vertices()
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    if n == 1:
        return 1
    need = n - 1
    if len(edges) < need:
        return 0
    count = 0
    for subset in combinations(edges, need):
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        ok = True
        for e in subset:
            ra, rb = find(idx[e.u]), find(idx[e.v])
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        if ok:
            count += 1
    return count


def count_identified(graph: Multigraph, partition) -> int:
    """Spanning trees of the graph with the partition's groups identified."""
    g, _ = graph.identify(partition)
    return count_matrix_tree(g)


def identified_count(graph: Multigraph, *groups: Sequence[VertexId]) -> int:
    """Formula-level identified count t(G_{group, group, ...}).

    Groups are applied left to right.  A group whose members have already
    merged to a single point (including a group that lists one vertex twice)
    makes the whole count zero: it stands for an identification of a vertex
    with itself, which the formulas count as zero because the matching
    resistance factor vanishes.  Groups overlapping in a vertex merge
    transitively, as identification of the underlying points would."""
    current = graph
    renames = {v: v for v in graph.vertices()}
    for group in groups:
        members = tuple(group)
        if len(members) < 2:
            continue  # singleton group is a no-op
        mapped = {renames[m] for m in members}
        if len(mapped) < 2:
            return 0
        current, step = current.identify([tuple(mapped)])
        renames = {v: step[cur] for v, cur in renames.items()}
    return count_matrix_tree(current)


def contracted_count(graph: Multigraph, e: EdgeId) -> int:
    """t of the graph with edge e contracted; a self-loop counts as zero,
    matching the identified-count convention for coincident endpoints."""
    ed = graph.edge(e)
    if ed.is_loop():
        return 0
    g, _ = graph.contract_edge(e)
    return count_matrix_tree(g)


def resistance_from_trees(graph: Multigraph, p: VertexId, q: VertexId) -> Fraction:
    """r(p, q) = t(G with p, q identified) / t(G) on unit-length graphs."""
    _require_unit(graph)
    graph._require_vertex(p)
    graph._require_vertex(q)
    return Fraction(identified_count(graph, (p, q)), count_matrix_tree(graph))


def voltage_from_trees(
    graph: Multigraph, p: VertexId, q: VertexId, s: VertexId
) -> Fraction:
    """j_p(q, s) = (t(G_pq) + t(G_ps) - t(G_qs)) / (2 t(G)) on unit lengths."""
    _require_unit(graph)
    for v in (p, q, s):
        graph._require_vertex(v)
    num = (
        identified_count(graph, (p, q))
        + identified_count(graph, (p, s))
        - identified_count(graph, (q, s))
    )
    return Fraction(num, 2 * count_matrix_tree(graph))


def _require_unit(graph: Multigraph) -> None:
    if not graph.has_unit_lengths():
        raise PreconditionError("tree-count formulas need unit edge lengths")


def averaging_contractions(graph: Multigraph) -> Tuple[int, int]:
    """Contraction averaging: (n - 1) t(G) equals the sum over edges of the
    contracted counts.  Returns (t(G), residual); residual must be 0."""
    if not graph.is_connected():
        raise GraphError("graph must be connected")
    t = count_matrix_tree(graph)
    total = sum(contracted_count(graph, e) for e in graph.edge_ids())
    return t, (graph.n - 1) * t - total


def averaging_deletions(graph: Multigraph) -> Tuple[int, int]:
    """Deletion averaging on bridgeless graphs: g t(G) equals the sum over
    edges of t(G - e).  Returns (t(G), residual)."""
    if not graph.is_connected():
        raise GraphError("graph must be connected")
    if graph.bridges():
        raise PreconditionError("deletion averaging needs a bridgeless graph")
    t = count_matrix_tree(graph)
    total = sum(
        count_matrix_tree(graph.delete_edge(e)) for e in graph.edge_ids()
    )
    return t, graph.genus() * t - total


# -- composition formulas (pure integer arithmetic) -------------------------


def union_cut_vertex(t_parts: Sequence[int]) -> int:
    """Trees of a graph whose parts share a single cut vertex: the product."""
    parts = list(t_parts)
    if not parts:
        raise GraphError("need at least one part")
    out = 1
    for t in parts:
        out *= t
    return out


def union_two_vertices(t1: int, t1pq: int, t2: int, t2pq: int) -> int:
    """Trees of two graphs glued along two vertices p, q:
    t1 * t2pq + t2 * t1pq."""
    return t1 * t2pq + t2 * t1pq


def path_attachment(t1: int, t1pq: int, k: int) -> int:
    """Gluing a k-edge path across p, q: k * t1 + t1pq."""
    if k < 2:
        raise GraphError("path attachment needs k >= 2 edges")
    return k * t1 + t1pq


def union_k_banana(t_list: Sequence[int], tpq_list: Sequence[int]) -> int:
    """k graphs glued along the same two vertices:
    sum_i t_i * prod_{j != i} tpq_j (denominators cleared, all integer)."""
    ts, tpqs = list(t_list), list(tpq_list)
    if len(ts) != len(tpqs) or not ts:
        raise GraphError("need matching nonempty count lists")
    if any(t <= 0 for t in tpqs):
        raise GraphError("identified part counts must be positive")
    total = 0
    for i, t in enumerate(ts):
        prod = t
        for j, tpq in enumerate(tpqs):
            if j != i:
                prod *= tpq
        total += prod
    return total


def union_cycle_replacement(t_list: Sequence[int], t_st_list: Sequence[int]) -> int:
    """Cycle of parts, edge i replaced by a graph with terminal pair (s_i, t_i):
    sum_i t_st_i * prod_{j != i} t_j."""
    ts, tsts = list(t_list), list(t_st_list)
    if len(ts) != len(tsts) or not ts:
        raise GraphError("need matching nonempty count lists")
    if any(t <= 0 for t in ts):
        raise GraphError("part counts must be positive")
    total = 0
    for i, tst in enumerate(tsts):
        prod = tst
        for j, t in enumerate(ts):
            if j != i:
                prod *= t
        total += prod
    return total


def union_banana_of_paths(part_counts: Sequence[Sequence[Tuple[int, int]]]) -> int:
    """Banana of path-replaced branches.

    ``part_counts[i]`` lists, per segment j of branch i, the pair
    (t(G_ij), t(G_ij with its two terminals identified)).  Each branch is a
    chain of the segments; the branches are glued in parallel between two
    hubs.
    """
    if not part_counts:
        raise GraphError("need at least one branch")
    branch_t = []
    branch_tpq = []
    for segments in part_counts:
        segs = list(segments)
        if not segs:
            raise GraphError("branch with no segments")
        if any(t <= 0 for t, _ in segs):
            raise GraphError("segment counts must be positive")
        prod = 1
        for t, _ in segs:
            prod *= t
        chained = 0
        for j, (_, tst) in enumerate(segs):
            term = tst
            for jj, (t, _) in enumerate(segs):
                if jj != j:
                    term *= t
            chained += term
        branch_t.append(prod)
        branch_tpq.append(chained)
    return union_k_banana(branch_t, branch_tpq)


def banana_of_paths_uniform(k: int, n: int, t_h: int, t_h_st: int) -> int:
    """Closed form for k identical branches of n identical segments:
    k * n^(k-1) * t_h^((n-1)(k-1)+n) * t_h_st^(k-1)."""
    if k < 1 or n < 1:
        raise GraphError("need k >= 1 branches of n >= 1 segments")
    return k * n ** (k - 1) * t_h ** ((n - 1) * (k - 1) + n) * t_h_st ** (k - 1)


def union_three_vertices(
    t1: int,
    t2: int,
    a1: int,
    b1: int,
    c1: int,
    a2: int,
    b2: int,
    c2: int,
    t1pqs: int,
    t2pqs: int,
) -> int:
    """Trees of two graphs glued along three vertices p, q, s.

    a_i, b_i, c_i are the counts of part i with the pairs (p,s), (p,q), (q,s)
    identified.  The cross term is halved; the bracket is even whenever the
    inputs come from actual graphs, and this is asserted.
    """
    bracket = (
        a1 * (-a2 + b2 + c2) + b1 * (a2 - b2 + c2) + c1 * (a2 + b2 - c2)
    )
    if bracket % 2:
        raise GraphError("odd cross term: inconsistent part counts")
    return t1 * t2pqs + t2 * t1pqs + bracket // 2


def union_three_vertices_identical(t1: int, t1pqs: int) -> int:
    """Two copies of the same part glued along the same three vertices:
    the general formula collapses to 4 t1 t1pqs."""
    return 4 * t1 * t1pqs


# -- vertex deletion --------------------------------------------------------


class ExpansionTerm(NamedTuple):
    subset: tuple  # neighbor vertices identified together
    coefficient: int  # product of the edge multiplicities
    count: int  # trees of the reduced graph with the subset identified


def vertex_deletion_count(
    graph: Multigraph, u: VertexId
) -> Tuple[int, List[ExpansionTerm]]:
    """Expand t(G) over the deletion of a non-cut vertex u:

        t(G) = (sum a_i) t(H) + sum over subsets S of N(u), |S| >= 2,
               of (prod of the a_i in S) t(H with S identified),

    where H = G - u and a_i is the number of parallel edges from u to its
    i-th neighbor.  Returns the total and the term-by-term report.
    """
    graph._require_vertex(u)
    if graph.n < 2:
        raise PreconditionError("vertex deletion needs at least two vertices")
    h = graph.delete_vertex(u)
    if not h.is_connected():
        raise PreconditionError(f"{u!r} is a cut vertex")
    neighbors = graph.neighbors_with_multiplicity(u)
    t_h = count_matrix_tree(h)
    lead = ExpansionTerm((), sum(a for _, a in neighbors), t_h)
    terms = [lead]
    total = lead.coefficient * lead.count
    for size in range(2, len(neighbors) + 1):
        for subset in combinations(neighbors, size):
            coeff = 1
            for _, a in subset:
                coeff *= a
            vs = tuple(v for v, _ in subset)
            cnt = count_identified(h, [vs])
            terms.append(ExpansionTerm(vs, coeff, cnt))
            total += coeff * cnt
    return total, terms


def star_augmentation_count(
    graph: Multigraph, anchor: VertexId, targets: Sequence[Tuple[VertexId, int]]
) -> int:
    """Trees of the graph after adding a_i parallel edges from the anchor to
    each target vertex, computed by the subset expansion

        t(H) + sum over nonempty target subsets T of
               (prod of the a_i in T) t(H with T + anchor identified).
    """
    graph._require_vertex(anchor)
    tgt = list(targets)
    seen = {anchor}
    for v, a in tgt:
        graph._require_vertex(v)
        if v in seen:
            raise GraphError("star targets must be distinct, excluding anchor")
        seen.add(v)
        if a < 1:
            raise GraphError("edge multiplicities must be >= 1")
    total = count_matrix_tree(graph)
    for size in range(1, len(tgt) + 1):
        for subset in combinations(tgt, size):
            coeff = 1
            for _, a in subset:
                coeff *= a
            group = tuple(v for v, _ in subset) + (anchor,)
            total += coeff * count_identified(graph, [group])
    return total


def add_star_edges(
    graph: Multigraph, anchor: VertexId, targets: Sequence[Tuple[VertexId, int]]
) -> Multigraph:
    """Graph with a_i unit edges added from the anchor to each target."""
    graph._require_vertex(anchor)
    existing = {e.id for e in graph.edges()}
    new_edges = list(graph.edges())
    k = 0
    for v, a in targets:
        graph._require_vertex(v)
        for _ in range(a):
            k += 1
            eid = f"aug{k}"
            while eid in existing:
                k += 1
                eid = f"aug{k}"
            existing.add(eid)
            new_edges.append((eid, anchor, v, 1))
    return Multigraph(graph.vertices(), new_edges)


# -- quadratic identification identities ------------------------------------


def identification_quadratic(
    graph: Multigraph, p: VertexId, q: VertexId, s: VertexId, t: VertexId
) -> Fraction:
    """Residual of the two-pair identification identity

        t(G) t(G_{pq,st}) = t(G_st) t(G_pq)
                            - (t(G_ps) - t(G_qs) - t(G_pt) + t(G_qt))^2 / 4,

    exact zero for every vertex choice (coincident points included, via the
    zero convention).  Setting t = p yields the three-point identity."""
    for v in (p, q, s, t):
        graph._require_vertex(v)
    lhs = count_matrix_tree(graph) * identified_count(graph, (p, q), (s, t))
    bracket = (
        identified_count(graph, (p, s))
        - identified_count(graph, (q, s))
        - identified_count(graph, (p, t))
        + identified_count(graph, (q, t))
    )
    rhs = Fraction(
        4 * identified_count(graph, (s, t)) * identified_count(graph, (p, q))
        - bracket * bracket,
        4,
    )
    return lhs - rhs


def contraction_identity(
    graph: Multigraph, e: EdgeId, s: VertexId, t: VertexId
) -> Fraction:
    """Residual of the contracted-graph version of the quadratic identity,
    with the contracted edge's endpoints playing the role of the shorted
    pair; must be zero."""
    ed = graph.edge(e)
    for v in (s, t):
        graph._require_vertex(v)
    if ed.is_loop():
        contracted_st = 0
        contracted = 0
    else:
        g, ren = graph.contract_edge(e)
        contracted = count_matrix_tree(g)
        contracted_st = identified_count(g, (ren[s], ren[t]))
    bracket = (
        identified_count(graph, (ed.u, s))
        - identified_count(graph, (ed.v, s))
        - identified_count(graph, (ed.u, t))
        + identified_count(graph, (ed.v, t))
    )
    lhs = count_matrix_tree(graph) * contracted_st
    rhs = Fraction(
        4 * identified_count(graph, (s, t)) * contracted - bracket * bracket, 4
    )
    return lhs - rhs


def deletion_identity(
    graph: Multigraph, e: EdgeId, s: VertexId, t: VertexId
) -> Fraction:
    """Residual of the deleted-graph version (note the flipped sign on the
    square); holds for bridges as well since both deleted counts vanish."""
    ed = graph.edge(e)
    for v in (s, t):
        graph._require_vertex(v)
    g = graph.delete_edge(e)
    bracket = (
        identified_count(graph, (ed.u, s))
        - identified_count(graph, (ed.v, s))
        - identified_count(graph, (ed.u, t))
        + identified_count(graph, (ed.v, t))
    )
    lhs = count_matrix_tree(graph) * identified_count(g, (s, t))
    rhs = Fraction(
        4 * identified_count(graph, (s, t)) * count_matrix_tree(g)
        + bracket * bracket,
        4,
    )
    return lhs - rhs


def spanning_tree_euler(
    graph: Multigraph, s: VertexId, t: VertexId
) -> Tuple[Fraction, Fraction]:
    """Residuals of the per-edge square-sum expansion of t(G_st).

    Uniform form:   4 t(G) t(G_st) = sum over all edges of bracket_e^2.
    Bridge form:    t(G_st) = k t(G) + (sum over non-bridges) / (4 t(G)),
                    k = number of bridges separating s from t.

    bracket_e = t(G_{p_e s}) - t(G_{p_e t}) - t(G_{q_e s}) + t(G_{q_e t}).
    Returns (uniform residual, bridge-form residual); both must be zero."""
    for v in (s, t):
        graph._require_vertex(v)
    t_g = count_matrix_tree(graph)
    t_st = identified_count(graph, (s, t))
    full_sum = 0
    nonbridge_sum = 0
    k = 0
    for ed in graph.edges():
        bracket = (
            identified_count(graph, (ed.u, s))
            - identified_count(graph, (ed.u, t))
            - identified_count(graph, (ed.v, s))
            + identified_count(graph, (ed.v, t))
        )
        sq = bracket * bracket
        full_sum += sq
        if ed.is_loop() or not graph.is_bridge(ed.id):
            nonbridge_sum += sq
        elif s != t and _separates(graph, ed.id, s, t):
            k += 1
    uniform = Fraction(4 * t_g * t_st - full_sum)
    bridge_form = Fraction(4 * t_g * t_st - 4 * t_g * t_g * k - nonbridge_sum)
    return uniform, bridge_form


def _separates(graph: Multigraph, e: EdgeId, s: VertexId, t: VertexId) -> bool:
    comps = graph.delete_edge(e).connected_components()
    comp_s = next(c for c in comps if s in c)
    return t not in comp_s


# -- closed forms ------------------------------------------------------------


def closed_form(family: str, n: int, a: int = 1) -> int:
    """Closed-form spanning-tree counts for the standard families.

    path: 1 (n >= 2 vertices).  cycle: n (n >= 2).  banana: n parallel edges
    (n >= 1).  complete: n^(n-2) (n >= 1).  fan: a * B_{n-1}(a) for a path of
    n vertices plus an apex with a parallel spokes each (n >= 1).  wheel:
    a * W_{n-1}(a), same with a cycle (n >= 1).
    """
    if family in ("path", "cycle") and n < 2:
        raise GraphError(f"{family} needs n >= 2")
    if family in ("banana", "complete", "fan", "wheel") and n < 1:
        raise GraphError(f"{family} needs n >= 1")
    if a < 1:
        raise GraphError("multiplicity a must be >= 1")
    if family == "path":
        return 1
    if family == "cycle":
        return n
    if family == "banana":
        return n
    if family == "complete":
        return n ** (n - 2) if n >= 2 else 1
    if family == "fan":
        return a * morgan_voyce(n - 1)(a)
    if family == "wheel":
        return a * w_poly(n - 1)(a)
    raise GraphError(f"unknown family {family!r}")


# -- composite-graph builders ------------------------------------------------


def _relabeled_edges(graph: Multigraph, vmap: Dict, tag) -> Iterable[Tuple]:
    for ed in graph.edges():
        yield ((tag, ed.id), vmap[ed.u], vmap[ed.v], ed.length)


def union_at(
    g1: Multigraph,
    points1: Sequence[VertexId],
    g2: Multigraph,
    points2: Sequence[VertexId],
    tag="u2",
) -> Multigraph:
    """Glue g2 onto g1, matching points2[i] to points1[i]; other vertices of
    g2 are relabeled to stay disjoint."""
    if len(points1) != len(points2):
        raise GraphError("point lists must have equal length")
    for v in points1:
        g1._require_vertex(v)
    for v in points2:
        g2._require_vertex(v)
    vmap = {v: (tag, v) for v in g2.vertices()}
    for a, b in zip(points1, points2):
        vmap[b] = a
    edges = list(g1.edges()) + list(_relabeled_edges(g2, vmap, tag))
    return Multigraph(set(g1.vertices()) | set(vmap.values()), edges)


def chain_of(
    parts: Sequence[Tuple[Multigraph, VertexId, VertexId]], close: bool = False
) -> Multigraph:
    """Chain the parts end to end along their (s, t) terminal pairs; with
    ``close`` the last terminal wraps to the first, forming a ring."""
    k = len(parts)
    if k == 0:
        raise GraphError("need at least one part")
    hubs = [("hub", i) for i in range(k if close else k + 1)]
    vertices = set(hubs)
    edges = []
    for i, (g, s, t) in enumerate(parts):
        g._require_vertex(s)
        g._require_vertex(t)
        vmap = {v: (i, v) for v in g.vertices()}
        vmap[s] = hubs[i]
        vmap[t] = hubs[(i + 1) % len(hubs)] if close else hubs[i + 1]
        vertices |= set(vmap.values())
        edges.extend(_relabeled_edges(g, vmap, i))
    return Multigraph(vertices, edges)


def banana_of(parts: Sequence[Tuple[Multigraph, VertexId, VertexId]]) -> Multigraph:
    """Glue every part between the same two hubs, s ends to one, t ends to
    the other."""
    if not parts:
        raise GraphError("need at least one part")
    vertices = {("hub", 0), ("hub", 1)}
    edges = []
    for i, (g, s, t) in enumerate(parts):
        g._require_vertex(s)
        g._require_vertex(t)
        vmap = {v: (i, v) for v in g.vertices()}
        vmap[s] = ("hub", 0)
        vmap[t] = ("hub", 1)
        vertices |= set(vmap.values())
        edges.extend(_relabeled_edges(g, vmap, i))
    return Multigraph(vertices, edges)
