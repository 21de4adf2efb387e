"""Weyl group orbits of lambda + rho and normalized Weyl numerators.

Elements w are reached by left multiplication ``w -> s_i w``, which raises
the length exactly when the current pairing ``v_i = <w(lambda+rho), alpha_i^vee>``
is positive.  That step adds ``v_i >= 1`` to the offset degree, so pruning at
a degree bound never cuts off anything below it.  Since lambda + rho is
regular dominant, ``w -> w(lambda+rho)`` is injective and the offset vector
itself serves as the key for w.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanMatrix, dynkin_graph, is_positive_definite, rho_shift
from .errors import (
    CapExceeded,
    InvariantViolation,
    NodeCapExceeded,
    NonIntegralCoefficient,
    NotFiniteType,
)
from .series import TruncatedSeries, coefficient, neg_log


@dataclass(frozen=True)
class WeylOrbitNode:
    """Data attached to one Weyl group element w.

    ``offset`` is c(w) with ``lambda+rho - w(lambda+rho) = sum c_i alpha_i``;
    ``pairings`` are the coroot pairings of ``w(lambda+rho)``; ``support`` is the
    set of simple reflections occurring in a reduced word for w.
    """

    offset: tuple[int, ...]
    pairings: tuple[int, ...]
    length: int
    support: frozenset

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    @property
    def degree(self) -> int:
        return sum(self.offset)


def _check_pairings(A: CartanMatrix, a, node: WeylOrbitNode):
    l = A.rank
    for i in range(l):
        expect = a[i] - sum(A[i, j] * node.offset[j] for j in range(l))
        if node.pairings[i] != expect:
            raise InvariantViolation(f"pairing {i} of node {node.offset} is "
                                     f"{node.pairings[i]}, expected {expect}")


def _bfs(A: CartanMatrix, lam, bound: int | None, cap: int | None):
    a = rho_shift(lam)
    l = A.rank
    if len(a) != l:
        raise ValueError(f"weight {tuple(lam)} does not have rank {l}")
    root = WeylOrbitNode((0,) * l, a, 0, frozenset())
    seen = {root.offset: root}
    frontier = [root]
    while frontier:
        nxt = []
        for node in frontier:
            v = node.pairings
            for i in range(l):
                vi = v[i]
                if vi <= 0:
                    continue
                if bound is not None and node.degree + vi > bound:
                    continue
                c = list(node.offset)
                c[i] += vi
                c = tuple(c)
                old = seen.get(c)
                support = node.support | {i}
                if old is not None:
                    if old.length != node.length + 1 or old.support != support:
                        raise InvariantViolation(
                            f"offset {c} reached with length/support "
                            f"{node.length + 1}/{sorted(support)} and "
                            f"{old.length}/{sorted(old.support)}")
                    continue
                child = WeylOrbitNode(
                    c, tuple(v[j] - vi * A[j, i] for j in range(l)), node.length + 1, support)
                _check_pairings(A, a, child)
                seen[c] = child
                nxt.append(child)
                if cap is not None and len(seen) > cap:
                    raise NodeCapExceeded(f"more than {cap} Weyl group elements")
        frontier = nxt
    return list(seen.values())


def orbit_bfs(A: CartanMatrix, lam, D: int) -> list[WeylOrbitNode]:
    """Every w in W with ``deg c(w) <= D``, each exactly once, in BFS order."""
    if D < 0:
        raise ValueError("degree bound must be non-negative")
    return _bfs(A, lam, D, None)


def _series_from_nodes(l: int, D: int, nodes) -> TruncatedSeries:
    return TruncatedSeries(l, D, {n.offset: n.sign for n in nodes})


def numerator(A: CartanMatrix, lam, D: int) -> TruncatedSeries:
    """The normalized Weyl numerator U_lambda through degree D."""
    return _series_from_nodes(A.rank, D, orbit_bfs(A, lam, D))


def full_numerator(A: CartanMatrix, lam, node_cap: int = 10_000) -> TruncatedSeries:
    """U_lambda as an exact polynomial; only possible when W is finite."""
    nodes = _bfs(A, lam, None, node_cap)
    D = max(n.degree for n in nodes)
    return _series_from_nodes(A.rank, D, nodes)


@dataclass(frozen=True)
class Violation:
    offset: tuple[int, ...]
    clause: str
    message: str


def verify_loglem(A: CartanMatrix, lam, D: int | None,
                  node_cap: int = 10_000) -> list[Violation]:
    """Check the four support/offset properties on every non-identity node.

    (a) the support of c(w) is I(w); (b) ``c_i >= a_i`` on I(w); (c) equality
    when I(w) is independent in the Dynkin graph; (d) otherwise some strict
    inequality.  ``D=None`` enumerates the whole (finite) group.
    """
    a = rho_shift(lam)
    G = dynkin_graph(A)
    nodes = _bfs(A, lam, D, node_cap if D is None else None)
    bad = []
    for node in nodes:
        if node.length == 0:
            continue
        c, I = node.offset, node.support
        nonzero = frozenset(i for i, x in enumerate(c) if x)
        if nonzero != I:
            bad.append(Violation(c, "a", f"support {sorted(nonzero)} != I(w) {sorted(I)}"))
        low = [i for i in I if c[i] < a[i]]
        if low:
            bad.append(Violation(c, "b", f"c_i < a_i at {low}"))
        if G.is_independent(I):
            if any(c[i] != a[i] for i in I):
                bad.append(Violation(c, "c", "independent support but c != a on it"))
        elif not any(c[i] > a[i] for i in I):
            bad.append(Violation(c, "d", "connected support but no c_i > a_i"))
    return bad


def mult_sum_simple_roots(A: CartanMatrix) -> int:
    """Multiplicity of ``alpha_1 + ... + alpha_l``, read off ``-log U_0``."""
    l = A.rank
    L = neg_log(numerator(A, (0,) * l, l))
    c = coefficient(L, (1,) * l)
    if c.denominator != 1 or c < 0:
        raise NonIntegralCoefficient(f"coefficient of the all-ones monomial is {c}")
    return int(c)


def finite_positive_roots(A: CartanMatrix, cap: int = 10_000) -> set[tuple[int, ...]]:
    """Positive roots of a finite-type A, by closing the simple roots under reflections."""
    if not is_positive_definite(A):
        raise NotFiniteType("positive roots are only enumerated in finite type")
    l = A.rank
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    roots = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        for i in range(l):
            p = sum(A[i, j] * beta[j] for j in range(l))
            if p == 0:
                continue
            img = list(beta)
            img[i] -= p
            img = tuple(img)
            if min(img) >= 0 and any(img) and img not in roots:
                roots.add(img)
                queue.append(img)
                if len(roots) > cap:
                    raise CapExceeded(f"more than {cap} positive roots")
    return roots


def weyl_group_order(A: CartanMatrix, node_cap: int = 10_000) -> int:
    return len(_bfs(A, (0,) * A.rank, None, node_cap))


def denominator_product(A: CartanMatrix, cap: int = 10_000) -> TruncatedSeries:
    """``prod_{beta > 0} (1 - X^beta)`` for finite type, as an exact polynomial."""
    roots = finite_positive_roots(A, cap)
    l = A.rank
    D = sum(sum(b) for b in roots)
    out = TruncatedSeries.one(l, D)
    for b in sorted(roots):
        out = out * (TruncatedSeries.one(l, D) - TruncatedSeries.monomial(l, D, b))
    return out


__all__ = [
    "WeylOrbitNode", "Violation", "orbit_bfs", "numerator", "full_numerator",
    "verify_loglem", "mult_sum_simple_roots", "finite_positive_roots",
    "weyl_group_order", "denominator_product",
]
