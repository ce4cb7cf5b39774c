"""Effective resistance and voltage via the exact Laplacian pseudo-inverse.

A :class:`Network` wraps a connected multigraph, viewing each edge of length
L as a resistor of L ohms.  Everything here is exact: the pseudo-inverse is
obtained from one rational matrix inversion through the rank-one correction

    Lplus = (L - J/n)^-1 + J/n,

so every identity evaluator below can report a residual that is literally
zero.  The only floating-point code is the finite-difference mirror used to
cross-check the derivative formula.

Derived quantities for a surgered graph (vertices identified, an edge deleted
or contracted, a length changed) are always computed by building the surgered
network and re-deriving its pseudo-inverse, never by trusting the identity
under test.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Dict, List, NamedTuple, Tuple

import numpy as np

from .exactnum import Matrix, SingularMatrixError, rational
from .graph import (
    DisconnectedError,
    EdgeId,
    Multigraph,
    PreconditionError,
    UnknownVertexError,
    VertexId,
)


def laplacian(graph: Multigraph) -> Matrix:
    """Discrete Laplacian: off-diagonal -(sum of 1/L over joining edges),
    diagonal chosen so rows sum to zero.  Self-loops contribute nothing.
    Vertices are taken in the graph's sorted order."""
    if not graph.is_connected():
        raise DisconnectedError("laplacian of a disconnected graph")
    order = graph.sorted_vertices()
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for e in graph.edges():
        if e.is_loop():
            continue
        c = 1 / e.length
        i, j = idx[e.u], idx[e.v]
        rows[i][j] -= c
        rows[j][i] -= c
        rows[i][i] += c
        rows[j][j] += c
    return Matrix(rows)


def pseudo_inverse(lap: Matrix) -> Matrix:
    """Moore-Penrose pseudo-inverse of a connected-graph Laplacian via the
    rank-one correction (L - J/n)^-1 + J/n."""
    n = lap.rows
    if n == 0:
        raise ValueError("empty matrix")
    j_over_n = Matrix.filled(n, n, Fraction(1, n))
    try:
        inner = (lap - j_over_n).inverse()
    except SingularMatrixError as exc:
        raise DisconnectedError(
            f"matrix is not a connected-graph laplacian (pivot {exc.pivot})"
        ) from exc
    return inner + j_over_n


class Network:
    """A connected multigraph with cached Laplacian and pseudo-inverse."""

    def __init__(self, graph: Multigraph):
        if not graph.is_connected():
            raise DisconnectedError("network graph must be connected")
        self.graph = graph

    @cached_property
    def _index(self) -> Dict[VertexId, int]:
        return {v: i for i, v in enumerate(self.graph.sorted_vertices())}

    @cached_property
    def laplacian(self) -> Matrix:
        return laplacian(self.graph)

    @cached_property
    def pseudo_inverse(self) -> Matrix:
        return pseudo_inverse(self.laplacian)

    def _i(self, v: VertexId) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def resistance(self, p: VertexId, q: VertexId) -> Fraction:
        """Effective resistance r(p, q) = l+pp - 2 l+pq + l+qq."""
        lp = self.pseudo_inverse
        i, j = self._i(p), self._i(q)
        return lp[i, i] - 2 * lp[i, j] + lp[j, j]

    def voltage(self, z: VertexId, x: VertexId, y: VertexId) -> Fraction:
        """Voltage j_z(x, y): potential at x, reference 0 at z, when unit
        current enters at y and exits at z.  Equals l+zz - l+zx - l+zy + l+xy."""
        lp = self.pseudo_inverse
        a, b, c = self._i(z), self._i(x), self._i(y)
        return lp[a, a] - lp[a, b] - lp[a, c] + lp[b, c]

    # -- derived networks --------------------------------------------------

    def shorted(self, p: VertexId, q: VertexId) -> Tuple["Network", Dict]:
        """Network with p and q identified, plus the vertex rename map."""
        g, renames = self.graph.identify([(p, q)])
        return Network(g), renames

    def deleted(self, e: EdgeId) -> "Network":
        """Network with the edge's interior removed (raises if that
        disconnects the graph)."""
        return Network(self.graph.delete_edge(e))

    def contracted(self, e: EdgeId) -> Tuple["Network", Dict]:
        g, renames = self.graph.contract_edge(e)
        return Network(g), renames

    def edge_resistance_without(self, e: EdgeId) -> Fraction:
        """R_e: resistance between the edge's endpoints after deleting it."""
        ed = self.graph.edge(e)
        return self.deleted(e).resistance(ed.u, ed.v)


class DeltaResult(NamedTuple):
    """Before/after resistances of a surgery plus the law's correction term.

    The law under test asserts before - after == correction (for cutting,
    after - before == correction); residuals are computed by the caller so
    both sides stay independent.
    """

    before: Fraction
    after: Fraction
    correction: Fraction


class EulerTerm(NamedTuple):
    edge: EdgeId
    kind: str  # "bridge-on-path" | "bridge-off-path" | "non-bridge"
    contribution: Fraction


def _edge_separates(graph: Multigraph, e: EdgeId, s: VertexId, t: VertexId) -> bool:
    """True iff s and t fall into different components of graph - e."""
    if s == t:
        return False
    comps = graph.delete_edge(e).connected_components()
    comp_s = next(c for c in comps if s in c)
    return t not in comp_s


def resistance_derivative(
    net: Network, e: EdgeId, s: VertexId, t: VertexId
) -> Fraction:
    """Exact partial derivative of r(s, t) with respect to the length of e.

    Bridge separating s and t: 1.  Bridge not separating (or any edge with
    s == t): 0.  Non-bridge: the squared voltage difference across the edge's
    endpoints in the deleted graph, divided by (L + R)^2.
    """
    ed = net.graph.edge(e)
    if net.graph.is_bridge(e):
        return Fraction(1 if _edge_separates(net.graph, e, s, t) else 0)
    deleted = net.deleted(e)
    diff = deleted.voltage(ed.u, ed.v, s) - deleted.voltage(ed.u, ed.v, t)
    big_r = deleted.resistance(ed.u, ed.v)
    return diff * diff / (ed.length + big_r) ** 2


def euler_decomposition(net: Network, s: VertexId, t: VertexId) -> List[EulerTerm]:
    """Split r(s, t) into one nonnegative term per edge.

    Bridges on every s-t path contribute their full length; other bridges
    contribute 0; a non-bridge edge e = (p, q) of length L contributes
    (j_p(q, s) - j_p(q, t))^2 / L, with voltages taken in the whole network.
    The contributions sum exactly to r(s, t).
    """
    net._i(s), net._i(t)
    terms = []
    for ed in net.graph.edges():
        if not ed.is_loop() and net.graph.is_bridge(ed.id):
            if _edge_separates(net.graph, ed.id, s, t):
                terms.append(EulerTerm(ed.id, "bridge-on-path", ed.length))
            else:
                terms.append(EulerTerm(ed.id, "bridge-off-path", Fraction(0)))
            continue
        diff = net.voltage(ed.u, ed.v, s) - net.voltage(ed.u, ed.v, t)
        terms.append(EulerTerm(ed.id, "non-bridge", diff * diff / ed.length))
    return terms


def euler_decomposition_resistance_only(
    net: Network, s: VertexId, t: VertexId
) -> List[EulerTerm]:
    """Alternative split of r(s, t) using resistances only, uniform over all
    edges:  each edge (p, q) of length L contributes
    (r(p,s) - r(q,s) - r(p,t) + r(q,t))^2 / (4 L)."""
    net._i(s), net._i(t)
    terms = []
    for ed in net.graph.edges():
        if not ed.is_loop() and net.graph.is_bridge(ed.id):
            kind = (
                "bridge-on-path"
                if _edge_separates(net.graph, ed.id, s, t)
                else "bridge-off-path"
            )
        else:
            kind = "non-bridge"
        diff = (
            net.resistance(ed.u, s)
            - net.resistance(ed.v, s)
            - net.resistance(ed.u, t)
            + net.resistance(ed.v, t)
        )
        terms.append(EulerTerm(ed.id, kind, diff * diff / (4 * ed.length)))
    return terms


def shorting_delta(
    net: Network, p: VertexId, q: VertexId, s: VertexId, t: VertexId
) -> DeltaResult:
    """Shorting law: identifying p and q drops r(s, t) by exactly
    (j_p(q,s) - j_p(q,t))^2 / r(p, q)."""
    if p == q:
        raise PreconditionError("shorting law needs two distinct vertices")
    before = net.resistance(s, t)
    shorted, ren = net.shorted(p, q)
    after = shorted.resistance(ren[s], ren[t])
    diff = net.voltage(p, q, s) - net.voltage(p, q, t)
    return DeltaResult(before, after, diff * diff / net.resistance(p, q))


def cutting_delta(
    net: Network, e: EdgeId, s: VertexId, t: VertexId
) -> DeltaResult:
    """Cutting law: deleting a non-bridge edge raises r(s, t) by exactly
    (j'_p(q,s) - j'_p(q,t))^2 / (L + R), primes taken in the cut graph."""
    ed = net.graph.edge(e)
    if net.graph.is_bridge(e):
        raise PreconditionError(
            "edge is a bridge; the cutting law needs a non-bridge edge"
        )
    deleted = net.deleted(e)
    before = net.resistance(s, t)
    after = deleted.resistance(s, t)
    big_r = deleted.resistance(ed.u, ed.v)
    diff = deleted.voltage(ed.u, ed.v, s) - deleted.voltage(ed.u, ed.v, t)
    return DeltaResult(before, after, diff * diff / (ed.length + big_r))


def contraction_delta(
    net: Network, e: EdgeId, s: VertexId, t: VertexId
) -> DeltaResult:
    """Monotonicity law for contraction: collapsing edge e drops r(s, t) by
    (L + R)/(L R) times the squared voltage difference across e; for a bridge
    the drop is L when e separates s from t and 0 otherwise."""
    ed = net.graph.edge(e)
    before = net.resistance(s, t)
    contracted, ren = net.contracted(e)
    after = contracted.resistance(ren[s], ren[t])
    if ed.is_loop():
        return DeltaResult(before, after, Fraction(0))
    if net.graph.is_bridge(e):
        corr = ed.length if _edge_separates(net.graph, e, s, t) else Fraction(0)
        return DeltaResult(before, after, corr)
    big_r = net.edge_resistance_without(e)
    diff = net.voltage(ed.u, ed.v, s) - net.voltage(ed.u, ed.v, t)
    corr = (ed.length + big_r) * diff * diff / (ed.length * big_r)
    return DeltaResult(before, after, corr)


def edge_modification_delta(
    net: Network, e: EdgeId, new_length, s: VertexId, t: VertexId
) -> DeltaResult:
    """Monotonicity law for re-lengthening: replacing L by L' changes r(s, t)
    by (L - L') / ((L + R)(L' + R)) times the squared cut-graph voltage
    difference; bridge cases give exactly L - L' or 0."""
    ed = net.graph.edge(e)
    new_len = rational(new_length)
    if new_len <= 0:
        raise PreconditionError("replacement length must be positive")
    before = net.resistance(s, t)
    after = Network(net.graph.with_length(e, new_len)).resistance(s, t)
    if ed.is_loop():
        return DeltaResult(before, after, Fraction(0))
    if net.graph.is_bridge(e):
        corr = (
            ed.length - new_len
            if _edge_separates(net.graph, e, s, t)
            else Fraction(0)
        )
        return DeltaResult(before, after, corr)
    deleted = net.deleted(e)
    big_r = deleted.resistance(ed.u, ed.v)
    diff = deleted.voltage(ed.u, ed.v, s) - deleted.voltage(ed.u, ed.v, t)
    corr = (ed.length - new_len) * diff * diff / (
        (ed.length + big_r) * (new_len + big_r)
    )
    return DeltaResult(before, after, corr)


def convex_combination_check(
    net: Network, e: EdgeId, s: VertexId, t: VertexId
) -> Fraction:
    """Residual of r(s,t) = L/(L+R) * r_cut(s,t) + R/(L+R) * r_contracted(s,t)
    for a non-bridge edge; must be zero."""
    ed = net.graph.edge(e)
    if net.graph.is_bridge(e):
        raise PreconditionError(
            "edge is a bridge; the combination law needs a non-bridge edge"
        )
    deleted = net.deleted(e)
    contracted, ren = net.contracted(e)
    big_r = deleted.resistance(ed.u, ed.v)
    mix = (
        ed.length * deleted.resistance(s, t)
        + big_r * contracted.resistance(ren[s], ren[t])
    ) / (ed.length + big_r)
    return net.resistance(s, t) - mix


def voltage_transfer_shorting(
    net: Network, p: VertexId, q: VertexId, u: VertexId, s: VertexId, t: VertexId
) -> Fraction:
    """Residual of the voltage transfer law under identification of p, q:

        j_u(t,s) = j'_u(t,s) + (j_p(q,u)-j_p(q,t)) (j_p(q,u)-j_p(q,s)) / r(p,q)

    with primes in the shorted network.  u = p recovers the product special
    case, t = p the difference special case."""
    if p == q:
        raise PreconditionError("voltage transfer needs two distinct vertices")
    shorted, ren = net.shorted(p, q)
    base = shorted.voltage(ren[u], ren[t], ren[s])
    d_t = net.voltage(p, q, u) - net.voltage(p, q, t)
    d_s = net.voltage(p, q, u) - net.voltage(p, q, s)
    return net.voltage(u, t, s) - base - d_t * d_s / net.resistance(p, q)


def voltage_transfer_cutting(
    net: Network, e: EdgeId, u: VertexId, s: VertexId, t: VertexId
) -> Fraction:
    """Residual of the voltage transfer law under deletion of a non-bridge
    edge; must be zero."""
    ed = net.graph.edge(e)
    if net.graph.is_bridge(e):
        raise PreconditionError(
            "edge is a bridge; voltage transfer needs a non-bridge edge"
        )
    deleted = net.deleted(e)
    big_r = deleted.resistance(ed.u, ed.v)
    d_t = deleted.voltage(ed.u, ed.v, u) - deleted.voltage(ed.u, ed.v, t)
    d_s = deleted.voltage(ed.u, ed.v, u) - deleted.voltage(ed.u, ed.v, s)
    return (
        net.voltage(u, t, s)
        - deleted.voltage(u, t, s)
        + d_t * d_s / (ed.length + big_r)
    )


def voltage_transfer_contraction(
    net: Network, e: EdgeId, u: VertexId, s: VertexId, t: VertexId
) -> Fraction:
    """Residual of the voltage transfer law under contraction of a non-bridge
    edge; must be zero.  A self-loop contracts to a deletion with no
    correction term."""
    ed = net.graph.edge(e)
    if not ed.is_loop() and net.graph.is_bridge(e):
        raise PreconditionError(
            "edge is a bridge; voltage transfer needs a non-bridge edge"
        )
    contracted, ren = net.contracted(e)
    base = contracted.voltage(ren[u], ren[t], ren[s])
    if ed.is_loop():
        return net.voltage(u, t, s) - base
    deleted = net.deleted(e)
    big_r = deleted.resistance(ed.u, ed.v)
    d_t = deleted.voltage(ed.u, ed.v, u) - deleted.voltage(ed.u, ed.v, t)
    d_s = deleted.voltage(ed.u, ed.v, u) - deleted.voltage(ed.u, ed.v, s)
    return (
        net.voltage(u, t, s)
        - base
        - ed.length * d_t * d_s / (big_r * (ed.length + big_r))
    )


# -- floating-point mirror -------------------------------------------------


def float_resistance(
    graph: Multigraph, p: VertexId, q: VertexId, length_override=None
) -> float:
    """Resistance computed with binary floats by the same rank-one-correction
    algorithm.  Used only to cross-check the exact derivative against central
    finite differences; ``length_override`` maps edge ids to float lengths."""
    order = graph.sorted_vertices()
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    lap = np.zeros((n, n))
    override = length_override or {}
    for ed in graph.edges():
        if ed.is_loop():
            continue
        length = override.get(ed.id, float(ed.length))
        c = 1.0 / length
        i, j = idx[ed.u], idx[ed.v]
        lap[i, j] -= c
        lap[j, i] -= c
        lap[i, i] += c
        lap[j, j] += c
    j_over_n = np.full((n, n), 1.0 / n)
    lplus = np.linalg.inv(lap - j_over_n) + j_over_n
    i, j = idx[p], idx[q]
    return lplus[i, i] - 2.0 * lplus[i, j] + lplus[j, j]


def resistance_fd(
    graph: Multigraph, e: EdgeId, s: VertexId, t: VertexId, h: float = 1e-6
) -> float:
    """Central finite-difference estimate of the derivative of r(s, t) with
    respect to the length of e, on the float mirror."""
    base = float(graph.length(e))
    hi = float_resistance(graph, s, t, {e: base + h})
    lo = float_resistance(graph, s, t, {e: base - h})
    return (hi - lo) / (2.0 * h)
