"""Random instances and the master identity suite.

Every law exposed by :mod:`resistnet` and :mod:`spantree` is registered here
under a short tag and evaluated as an exact residual on seeded random
multigraphs.  A report line carries the tag, a stable hash of the instance,
the sampled vertex/edge selection, the residual as an exact fraction, and a
pass flag.  Exact tags pass only on a residual of literal zero; the single
floating tag (the finite-difference derivative cross-check) uses a relative
tolerance of 1e-6.

Selections are sampled with replacement on purpose: coincident query points
exercise the degenerate conventions (zero resistance at equal points, zero
count for an identification of a vertex with itself).  Selections that
violate a hypothesis (a bridge where a non-bridge is required, equal
vertices where distinct ones are needed) are filtered out and counted, never
silently dropped.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from itertools import count as _counter
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Tuple

from . import resistnet, spantree
from .graph import Multigraph, path_graph
from .resistnet import Network

DERIVATIVE_REL_TOL = 1e-6


@dataclass(frozen=True)
class GraphGenSpec:
    """Shape of the random instances; generation is deterministic per seed."""

    n_min: int = 3
    n_max: int = 6
    m_min: int = 3
    m_max: int = 10
    parallel_prob: float = 0.25
    loop_prob: float = 0.15
    lengths: str = "small"  # "unit" | "small"
    seed: int = 0

    def __post_init__(self):
        if self.n_min < 2 or self.n_max < self.n_min:
            raise ValueError("vertex range must satisfy 2 <= n_min <= n_max")
        if self.m_max < self.n_min - 1:
            raise ValueError("edge range cannot even hold a spanning tree")
        if self.lengths not in ("unit", "small"):
            raise ValueError("lengths must be 'unit' or 'small'")


@dataclass(frozen=True)
class IdentityReport:
    tag: str
    graph_hash: str
    selection: str
    residual: Fraction
    passed: bool

    def line(self) -> str:
        flag = "pass" if self.passed else "FAIL"
        return f"{self.tag} {self.graph_hash} {self.selection} {self.residual} {flag}"


class SuiteResult(NamedTuple):
    reports: List[IdentityReport]
    skipped: Dict[str, int]

    def all_passed(self) -> bool:
        return all(r.passed for r in self.reports)


def _random_connected(
    rng: random.Random,
    n_min: int,
    n_max: int,
    m_min: int,
    m_max: int,
    parallel_prob: float,
    loop_prob: float,
    lengths: str,
) -> Multigraph:
    n = rng.randint(n_min, n_max)
    lo = max(m_min, n - 1)
    m = rng.randint(lo, max(m_max, lo))
    vs = [f"v{i}" for i in range(1, n + 1)]
    pairs: List[Tuple[str, str]] = []
    for i in range(1, n):
        pairs.append((vs[i], vs[rng.randrange(i)]))
    while len(pairs) < m:
        roll = rng.random()
        if roll < loop_prob:
            v = rng.choice(vs)
            pairs.append((v, v))
        elif roll < loop_prob + parallel_prob and pairs:
            u, v = rng.choice(pairs)
            pairs.append((u, v))
        elif n >= 2:
            u, v = rng.sample(vs, 2)
            pairs.append((u, v))
    edges = []
    for k, (u, v) in enumerate(pairs, start=1):
        if lengths == "unit":
            length = Fraction(1)
        else:
            length = Fraction(rng.randint(1, 4), rng.randint(1, 4))
        edges.append((f"e{k}", u, v, length))
    return Multigraph(vs, edges)


def generate(spec: GraphGenSpec, index: int = 0) -> Multigraph:
    """The index-th instance of the generation spec; identical on every rerun."""
    rng = random.Random(f"{spec.seed}:{index}")
    return _random_connected(
        rng,
        spec.n_min,
        spec.n_max,
        spec.m_min,
        spec.m_max,
        spec.parallel_prob,
        spec.loop_prob,
        spec.lengths,
    )


def generate_series_parallel(
    rng: random.Random, max_depth: int = 4
) -> Tuple[Multigraph, str, str]:
    """Random two-terminal series-parallel network; returns (graph, s, t).

    Built by recursive series/parallel composition of single edges, so the
    reduction rewrite system always collapses it.
    """
    fresh = _counter(2)

    def build(depth: int) -> List[Tuple[int, int, Fraction]]:
        if depth >= max_depth or rng.random() < 0.35:
            return [(0, 1, Fraction(rng.randint(1, 4), rng.randint(1, 3)))]
        a = build(depth + 1)
        b = build(depth + 1)
        if rng.random() < 0.5:
            mid = next(fresh)
            swap = {0: 0, 1: mid}
            a = [(swap.get(u, u), swap.get(v, v), L) for u, v, L in a]
            swap = {0: mid, 1: 1}
            b = [(swap.get(u, u), swap.get(v, v), L) for u, v, L in b]
        return a + b

    triples = build(0)
    return (
        Multigraph.from_edges((f"n{u}", f"n{v}", L) for u, v, L in triples),
        "n0",
        "n1",
    )


# -- selection helpers -------------------------------------------------------


def _vertex_tuples(rng, pool, k, samples, exhaustive):
    if exhaustive:
        yield from product(pool, repeat=k)
    else:
        for _ in range(samples):
            yield tuple(rng.choice(pool) for _ in range(k))


def _edge_vertex_tuples(rng, edge_pool, vertex_pool, k, samples, exhaustive):
    if exhaustive:
        yield from product(edge_pool, *([vertex_pool] * k))
    else:
        for _ in range(samples):
            yield (rng.choice(edge_pool),) + tuple(
                rng.choice(vertex_pool) for _ in range(k)
            )


Check = Tuple[str, Fraction, Optional[bool]]
Evaluator = Callable[[Multigraph, random.Random, int, bool], Tuple[List[Check], int]]


# -- resistance-side evaluators ----------------------------------------------


def _eval_magic(graph, rng, samples, exhaustive):
    net = Network(graph)
    out: List[Check] = []
    for p, q, s, t in _vertex_tuples(
        rng, graph.sorted_vertices(), 4, samples, exhaustive
    ):
        base = net.voltage(p, q, s) - net.voltage(p, q, t)
        alts = (
            net.voltage(t, q, s) - net.voltage(t, p, s),
            net.voltage(s, p, t) - net.voltage(s, q, t),
            net.voltage(q, p, t) - net.voltage(q, p, s),
        )
        residual = sum(abs(base - a) for a in alts)
        out.append((f"p={p},q={q},s={s},t={t}", residual, None))
    return out, 0


def _eval_shorting(graph, rng, samples, exhaustive):
    net = Network(graph)
    out: List[Check] = []
    skipped = 0
    for p, q, s, t in _vertex_tuples(
        rng, graph.sorted_vertices(), 4, samples, exhaustive
    ):
        if p == q:
            skipped += 1
            continue
        d = resistnet.shorting_delta(net, p, q, s, t)
        out.append(
            (f"p={p},q={q},s={s},t={t}", d.before - d.after - d.correction, None)
        )
    return out, skipped


def _eval_cutting(graph, rng, samples, exhaustive):
    net = Network(graph)
    out: List[Check] = []
    skipped = 0
    for e, s, t in _edge_vertex_tuples(
        rng, graph.edge_ids(), graph.sorted_vertices(), 2, samples, exhaustive
    ):
        if graph.is_bridge(e):
            skipped += 1
            continue
        d = resistnet.cutting_delta(net, e, s, t)
        out.append((f"e={e},s={s},t={t}", d.after - d.before - d.correction, None))
    return out, skipped


def _eval_monotonic1(graph, rng, samples, exhaustive):
    net = Network(graph)
    out: List[Check] = []
    for e, s, t in _edge_vertex_tuples(
        rng, graph.edge_ids(), graph.sorted_vertices(), 2, samples, exhaustive
    ):
        d = resistnet.contraction_delta(net, e, s, t)
        out.append((f"e={e},s={s},t={t}", d.before - d.after - d.correction, None))
    return out, 0


def _eval_monotonic2(graph, rng, samples, exhaustive):
    net = Network(graph)
    out: List[Check] = []
    for e, s, t in _edge_vertex_tuples(
        rng, graph.edge_ids(), graph.sorted_vertices(), 2, samples, exhaustive
    ):
        new_len = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        d = resistnet.edge_modification_delta(net, e, new_len, s, t)
        out.append(
            (
                f"e={e},len={new_len},s={s},t={t}",
                d.before - d.after - d.correction,
                None,
            )
        )
    return out, 0


def _eval_convex(graph, rng, samples, exhaustive):
    net = Network(graph)
    out: List[Check] = []
    skipped = 0
    for e, s, t in _edge_vertex_tuples(
        rng, graph.edge_ids(), graph.sorted_vertices(), 2, samples, exhaustive
    ):
        if graph.is_bridge(e):
            skipped += 1
            continue
        residual = resistnet.convex_combination_check(net, e, s, t)
        out.append((f"e={e},s={s},t={t}", residual, None))
    return out, skipped


def _eval_vol_transfer(graph, rng, samples, exhaustive):
    net = Network(graph)
    verts = graph.sorted_vertices()
    out: List[Check] = []
    skipped = 0
    for e, u, s, t in _edge_vertex_tuples(
        rng, graph.edge_ids(), verts, 3, samples, exhaustive
    ):
        if graph.is_bridge(e):
            skipped += 1
        else:
            out.append(
                (
                    f"cut:e={e},u={u},s={s},t={t}",
                    resistnet.voltage_transfer_cutting(net, e, u, s, t),
                    None,
                )
            )
            out.append(
                (
                    f"contract:e={e},u={u},s={s},t={t}",
                    resistnet.voltage_transfer_contraction(net, e, u, s, t),
                    None,
                )
            )
        p, q = rng.sample(verts, 2) if len(verts) >= 2 else (None, None)
        if p is None:
            skipped += 1
            continue
        out.append(
            (
                f"short:p={p},q={q},u={u},s={s},t={t}",
                resistnet.voltage_transfer_shorting(net, p, q, u, s, t),
                None,
            )
        )
        # the two degenerate placements: u = p, then t = p
        out.append(
            (
                f"short:p={p},q={q},u={p},s={s},t={t}",
                resistnet.voltage_transfer_shorting(net, p, q, p, s, t),
                None,
            )
        )
        out.append(
            (
                f"short:p={p},q={q},u={u},s={s},t={p}",
                resistnet.voltage_transfer_shorting(net, p, q, u, s, p),
                None,
            )
        )
    return out, skipped


def _eval_euler1(graph, rng, samples, exhaustive):
    net = Network(graph)
    out: List[Check] = []
    for s, t in _vertex_tuples(rng, graph.sorted_vertices(), 2, samples, exhaustive):
        terms = resistnet.euler_decomposition(net, s, t)
        total = sum((x.contribution for x in terms), Fraction(0))
        out.append((f"s={s},t={t}", net.resistance(s, t) - total, None))
    return out, 0


def _eval_euler2(graph, rng, samples, exhaustive):
    net = Network(graph)
    out: List[Check] = []
    for s, t in _vertex_tuples(rng, graph.sorted_vertices(), 2, samples, exhaustive):
        terms = resistnet.euler_decomposition_resistance_only(net, s, t)
        total = sum((x.contribution for x in terms), Fraction(0))
        out.append((f"s={s},t={t}", net.resistance(s, t) - total, None))
    return out, 0


def _eval_foster(graph, rng, samples, exhaustive):
    unit = graph.with_unit_lengths()
    net = Network(unit)
    total = sum(
        (net.resistance(ed.u, ed.v) for ed in unit.edges()), Fraction(0)
    )
    return [("all-edges", total - (unit.n - 1), None)], 0


def _eval_derivative(graph, rng, samples, exhaustive):
    net = Network(graph)
    out: List[Check] = []
    for e, s, t in _edge_vertex_tuples(
        rng, graph.edge_ids(), graph.sorted_vertices(), 2, samples, exhaustive
    ):
        exact = resistnet.resistance_derivative(net, e, s, t)
        if graph.is_bridge(e):
            # bridge clause: the derivative is exactly one or zero
            ok = exact in (0, 1)
            out.append((f"bridge:e={e},s={s},t={t}", Fraction(0 if ok else 1), ok))
            continue
        fd = resistnet.resistance_fd(graph, e, s, t)
        residual = Fraction(fd) - exact
        tol = DERIVATIVE_REL_TOL * max(1.0, abs(float(exact)))
        out.append((f"e={e},s={s},t={t}", residual, abs(float(residual)) <= tol))
    return out, 0


# -- spanning-tree-side evaluators -------------------------------------------


def _eval_tree_resistance(graph, rng, samples, exhaustive):
    unit = graph.with_unit_lengths()
    net = Network(unit)
    out: List[Check] = []
    for p, q in _vertex_tuples(rng, unit.sorted_vertices(), 2, samples, exhaustive):
        residual = net.resistance(p, q) - spantree.resistance_from_trees(unit, p, q)
        out.append((f"p={p},q={q}", residual, None))
    return out, 0


def _eval_tree_voltage(graph, rng, samples, exhaustive):
    unit = graph.with_unit_lengths()
    net = Network(unit)
    out: List[Check] = []
    for p, q, s in _vertex_tuples(rng, unit.sorted_vertices(), 3, samples, exhaustive):
        residual = net.voltage(p, q, s) - spantree.voltage_from_trees(unit, p, q, s)
        out.append((f"p={p},q={q},s={s}", residual, None))
    return out, 0


def _eval_averaging(graph, rng, samples, exhaustive):
    unit = graph.with_unit_lengths()
    out: List[Check] = []
    skipped = 0
    _, residual = spantree.averaging_contractions(unit)
    out.append(("contractions", Fraction(residual), None))
    if unit.bridges():
        skipped += 1
    else:
        _, residual = spantree.averaging_deletions(unit)
        out.append(("deletions", Fraction(residual), None))
    return out, skipped


def _eval_quadratic(graph, rng, samples, exhaustive):
    unit = graph.with_unit_lengths()
    out: List[Check] = []
    for p, q, s, t in _vertex_tuples(
        rng, unit.sorted_vertices(), 4, samples, exhaustive
    ):
        residual = spantree.identification_quadratic(unit, p, q, s, t)
        out.append((f"p={p},q={q},s={s},t={t}", residual, None))
    return out, 0


def _eval_contract_id(graph, rng, samples, exhaustive):
    unit = graph.with_unit_lengths()
    out: List[Check] = []
    for e, s, t in _edge_vertex_tuples(
        rng, unit.edge_ids(), unit.sorted_vertices(), 2, samples, exhaustive
    ):
        out.append(
            (f"e={e},s={s},t={t}", spantree.contraction_identity(unit, e, s, t), None)
        )
    return out, 0


def _eval_delete_id(graph, rng, samples, exhaustive):
    unit = graph.with_unit_lengths()
    out: List[Check] = []
    for e, s, t in _edge_vertex_tuples(
        rng, unit.edge_ids(), unit.sorted_vertices(), 2, samples, exhaustive
    ):
        out.append(
            (f"e={e},s={s},t={t}", spantree.deletion_identity(unit, e, s, t), None)
        )
    return out, 0


def _eval_span_euler(graph, rng, samples, exhaustive):
    unit = graph.with_unit_lengths()
    out: List[Check] = []
    for s, t in _vertex_tuples(rng, unit.sorted_vertices(), 2, samples, exhaustive):
        uniform, bridged = spantree.spanning_tree_euler(unit, s, t)
        out.append((f"uniform:s={s},t={t}", uniform, None))
        out.append((f"bridges:s={s},t={t}", bridged, None))
    return out, 0


def _eval_vertex_del(graph, rng, samples, exhaustive):
    unit = graph.with_unit_lengths()
    t_direct = spantree.count_matrix_tree(unit)
    out: List[Check] = []
    skipped = 0
    candidates = [
        u
        for u in unit.sorted_vertices()
        if unit.n >= 2 and unit.delete_vertex(u).is_connected()
    ]
    if not candidates:
        return out, 1
    chosen = candidates if exhaustive else candidates[: max(1, samples // 2)]
    for u in chosen:
        total, _ = spantree.vertex_deletion_count(unit, u)
        out.append((f"u={u}", Fraction(t_direct - total), None))
        neighbors = unit.neighbors_with_multiplicity(u)
        h = unit.delete_vertex(u)
        t_h = spantree.count_matrix_tree(h)
        if len(neighbors) == 2:
            (p, a), (q, b) = neighbors
            special = (a + b) * t_h + a * b * spantree.identified_count(h, (p, q))
            out.append((f"two-neighbor:u={u}", Fraction(t_direct - special), None))
        elif len(neighbors) == 3:
            (p, a), (q, b), (s, c) = neighbors
            special = (
                (a + b + c) * t_h
                + a * c * spantree.identified_count(h, (p, s))
                + a * b * spantree.identified_count(h, (p, q))
                + b * c * spantree.identified_count(h, (q, s))
                + a * b * c * spantree.identified_count(h, (p, q, s))
            )
            out.append((f"three-neighbor:u={u}", Fraction(t_direct - special), None))
        elif len(neighbors) == 4:
            mult = dict(neighbors)
            vs = [v for v, _ in neighbors]
            special = sum(mult.values()) * t_h
            for size in (2, 3, 4):
                for sub in combinations(vs, size):
                    coeff = 1
                    for v in sub:
                        coeff *= mult[v]
                    special += coeff * spantree.identified_count(h, sub)
            out.append((f"four-neighbor:u={u}", Fraction(t_direct - special), None))
    return out, skipped


def _eval_star_aug(graph, rng, samples, exhaustive):
    unit = graph.with_unit_lengths()
    verts = unit.sorted_vertices()
    out: List[Check] = []
    for _ in range(max(1, samples // 2)):
        anchor = rng.choice(verts)
        others = [v for v in verts if v != anchor]
        rng.shuffle(others)
        targets = [(v, rng.randint(1, 3)) for v in others[: rng.randint(1, min(3, len(others)))]]
        formula = spantree.star_augmentation_count(unit, anchor, targets)
        built = spantree.add_star_edges(unit, anchor, targets)
        direct = spantree.count_matrix_tree(built)
        sel = f"anchor={anchor},targets=" + ";".join(f"{v}x{a}" for v, a in targets)
        out.append((sel, Fraction(formula - direct), None))
    return out, 0


def _small_part(rng, n_min=3, n_max=4) -> Multigraph:
    return _random_connected(rng, n_min, n_max, n_min, n_max + 2, 0.2, 0.0, "unit")


def _eval_unions(graph, rng, samples, exhaustive):
    out: List[Check] = []

    def tcount(g):
        return spantree.count_matrix_tree(g)

    # one shared vertex: product rule
    g1, g2 = _small_part(rng), _small_part(rng)
    x1, x2 = rng.choice(g1.sorted_vertices()), rng.choice(g2.sorted_vertices())
    glued = spantree.union_at(g1, [x1], g2, [x2])
    out.append(
        ("cut-vertex", Fraction(tcount(glued) - tcount(g1) * tcount(g2)), None)
    )

    # two shared vertices: bilinear rule
    g1, g2 = _small_part(rng), _small_part(rng)
    p1, q1 = rng.sample(g1.sorted_vertices(), 2)
    p2, q2 = rng.sample(g2.sorted_vertices(), 2)
    glued = spantree.union_at(g1, [p1, q1], g2, [p2, q2])
    formula = spantree.union_two_vertices(
        tcount(g1),
        spantree.identified_count(g1, (p1, q1)),
        tcount(g2),
        spantree.identified_count(g2, (p2, q2)),
    )
    out.append(("two-vertex", Fraction(tcount(glued) - formula), None))

    # path glued across two vertices
    k = rng.randint(2, 4)
    path = path_graph(k + 1)
    glued = spantree.union_at(g1, [p1, q1], path, ["v1", f"v{k + 1}"])
    formula = spantree.path_attachment(
        tcount(g1), spantree.identified_count(g1, (p1, q1)), k
    )
    out.append(("path-attach", Fraction(tcount(glued) - formula), None))

    # k parts sharing the same two vertices
    kparts = [_small_part(rng) for _ in range(rng.randint(2, 3))]
    picks = [tuple(rng.sample(g.sorted_vertices(), 2)) for g in kparts]
    glued = spantree.banana_of(
        [(g, a, b) for g, (a, b) in zip(kparts, picks)]
    )
    formula = spantree.union_k_banana(
        [tcount(g) for g in kparts],
        [spantree.identified_count(g, ab) for g, ab in zip(kparts, picks)],
    )
    out.append(("k-banana", Fraction(tcount(glued) - formula), None))

    # ring of parts
    rparts = [_small_part(rng) for _ in range(rng.randint(2, 3))]
    rpicks = [tuple(rng.sample(g.sorted_vertices(), 2)) for g in rparts]
    glued = spantree.chain_of(
        [(g, a, b) for g, (a, b) in zip(rparts, rpicks)], close=True
    )
    formula = spantree.union_cycle_replacement(
        [tcount(g) for g in rparts],
        [spantree.identified_count(g, ab) for g, ab in zip(rparts, rpicks)],
    )
    out.append(("cycle-replace", Fraction(tcount(glued) - formula), None))

    # banana of path-replaced branches
    branches = []
    counts = []
    for _ in range(2):
        segs = [_small_part(rng) for _ in range(rng.randint(1, 2))]
        spicks = [tuple(rng.sample(g.sorted_vertices(), 2)) for g in segs]
        chain = spantree.chain_of(
            [(g, a, b) for g, (a, b) in zip(segs, spicks)]
        )
        branches.append((chain, ("hub", 0), ("hub", len(segs))))
        counts.append(
            [
                (tcount(g), spantree.identified_count(g, ab))
                for g, ab in zip(segs, spicks)
            ]
        )
    glued = spantree.banana_of(branches)
    formula = spantree.union_banana_of_paths(counts)
    out.append(("banana-of-paths", Fraction(tcount(glued) - formula), None))

    # three shared vertices
    g1 = _random_connected(rng, 4, 5, 5, 7, 0.2, 0.0, "unit")
    g2 = _random_connected(rng, 4, 5, 5, 7, 0.2, 0.0, "unit")
    p1, q1, s1 = rng.sample(g1.sorted_vertices(), 3)
    p2, q2, s2 = rng.sample(g2.sorted_vertices(), 3)
    glued = spantree.union_at(g1, [p1, q1, s1], g2, [p2, q2, s2])
    formula = spantree.union_three_vertices(
        tcount(g1),
        tcount(g2),
        spantree.identified_count(g1, (p1, s1)),
        spantree.identified_count(g1, (p1, q1)),
        spantree.identified_count(g1, (q1, s1)),
        spantree.identified_count(g2, (p2, s2)),
        spantree.identified_count(g2, (p2, q2)),
        spantree.identified_count(g2, (q2, s2)),
        spantree.identified_count(g1, (p1, q1, s1)),
        spantree.identified_count(g2, (p2, q2, s2)),
    )
    out.append(("three-vertex", Fraction(tcount(glued) - formula), None))
    return out, 0


REGISTRY: Dict[str, Evaluator] = {
    "magic": _eval_magic,
    "shorting": _eval_shorting,
    "cutting": _eval_cutting,
    "monotonic1": _eval_monotonic1,
    "monotonic2": _eval_monotonic2,
    "convex": _eval_convex,
    "vol-transfer": _eval_vol_transfer,
    "euler1": _eval_euler1,
    "euler2": _eval_euler2,
    "foster": _eval_foster,
    "derivative": _eval_derivative,
    "tree-resistance": _eval_tree_resistance,
    "tree-voltage": _eval_tree_voltage,
    "averaging": _eval_averaging,
    "quadratic": _eval_quadratic,
    "contract-id": _eval_contract_id,
    "delete-id": _eval_delete_id,
    "span-euler": _eval_span_euler,
    "vertex-del": _eval_vertex_del,
    "star-aug": _eval_star_aug,
    "unions": _eval_unions,
}

ALL_TAGS = tuple(sorted(REGISTRY))


def run_suite(
    spec: GraphGenSpec,
    tags: Iterable[str] = ALL_TAGS,
    instances: int = 20,
    samples: int = 6,
    exhaustive: bool = False,
) -> SuiteResult:
    """Evaluate the tagged identities on ``instances`` seeded random graphs.

    ``samples`` caps the vertex/edge selections per instance and tag;
    ``exhaustive`` enumerates every selection instead (sensible only for
    graphs of at most five vertices).  Reports come back in deterministic
    order; ``skipped`` counts selections filtered by a hypothesis.
    """
    tag_list = list(tags)
    unknown = [t for t in tag_list if t not in REGISTRY]
    if unknown:
        raise ValueError(f"unknown identity tags: {unknown}")
    reports: List[IdentityReport] = []
    skipped: Dict[str, int] = {t: 0 for t in tag_list}
    for index in range(instances):
        g = generate(spec, index)
        h = g.graph_hash()
        for tag in tag_list:
            rng = random.Random(f"{spec.seed}:{index}:{tag}")
            checks, skip = REGISTRY[tag](g, rng, samples, exhaustive)
            skipped[tag] += skip
            for selection, residual, passed in checks:
                if passed is None:
                    passed = residual == 0
                reports.append(
                    IdentityReport(tag, h, selection, Fraction(residual), passed)
                )
    return SuiteResult(reports, skipped)
