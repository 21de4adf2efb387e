"""Characters, products of Weyl numerators, and factoring such products.

The factorization reads off ``-log P``: each factor U_lambda contributes
``c(G) * M^lambda`` plus regular monomials of strictly larger degree, so the
regular monomials of least degree in ``-log P`` are exactly the ``M^lambda`` of
the smallest factors.  Peel one, divide it out, repeat.
"""
from __future__ import annotations

from fractions import Fraction

from .cartan import CartanMatrix, deg_lambda, dominant_weight, dynkin_graph, is_indecomposable, m_lambda
from .cgraph import c_dc
from .errors import (
    BoundMismatch,
    DecomposableAlgebra,
    FactorCountMismatch,
    InvariantViolation,
    NotAProductOfNumerators,
    RankMismatch,
    TruncationInsufficient,
)
from .series import TruncatedSeries, div_by_unit, grlex_key, neg_log, neg_log_by_degree, regular_part
from .weyl import numerator


def sort_weights(weights) -> list[tuple[int, ...]]:
    return sorted((tuple(w) for w in weights), key=grlex_key)


def character(A: CartanMatrix, lam, D: int) -> TruncatedSeries:
    """Normalized character ``e^{-lambda} ch L(lambda) = U_lambda / U_0``."""
    return div_by_unit(numerator(A, lam, D), numerator(A, (0,) * A.rank, D))


def numerator_product(A: CartanMatrix, weights, D: int) -> TruncatedSeries:
    out = TruncatedSeries.one(A.rank, D)
    for lam in weights:
        out = out * numerator(A, dominant_weight(lam, A.rank), D)
    return out


def _leading_regular(P: TruncatedSeries):
    """Least-degree regular terms of ``-log P``, computed only as far as needed."""
    for _, level in neg_log_by_degree(P):
        found = sorted((e, c) for e, c in level.items() if all(e))
        if found:
            return found
    return []


def factorize_numerators(A: CartanMatrix, P: TruncatedSeries,
                         D: int | None = None) -> list[tuple[int, ...]]:
    """Recover the multiset of weights whose numerators multiply to P.

    ``D`` defaults to ``P.bound``; a smaller D truncates P first.  The answer
    is only accepted when the recovered degrees sum to at most D, so callers
    need ``D >= sum(deg_lambda(w) for w in factors)``.  Returns the weights in
    graded lexicographic order.
    """
    if not is_indecomposable(A):
        raise DecomposableAlgebra("factorization needs a connected Dynkin graph")
    if P.rank != A.rank:
        raise RankMismatch(f"series rank {P.rank} vs matrix rank {A.rank}")
    if D is None:
        D = P.bound
    if D > P.bound:
        raise BoundMismatch(f"series is only known through degree {P.bound}, asked for {D}")
    original = P = P.truncate(D)
    if P.constant_term != 1 or not P.is_integral():
        raise NotAProductOfNumerators("a numerator product has integer coefficients "
                                      "and constant term 1")
    cG = c_dc(dynkin_graph(A))
    found: list[tuple[int, ...]] = []
    used = 0
    # every factor has degree >= rank, so this bound is never the binding one
    for _ in range(D // A.rank + 1):
        if P.is_one():
            break
        leading = _leading_regular(P)
        if not leading:
            raise TruncationInsufficient(
                f"residual is not 1 but -log of it has no regular term through degree {D}")
        e, coef = leading[0]
        coef = Fraction(coef)
        if coef <= 0 or coef % cG:
            raise NotAProductOfNumerators(
                f"leading regular coefficient {coef} at {e} is not a positive multiple of {cG}")
        lam = tuple(x - 1 for x in e)
        used += sum(e)
        if used > D:
            # past this point the truncation no longer pins the factors down
            raise TruncationInsufficient(
                f"recovered factors have total degree above {D}; increase D")
        P = div_by_unit(P, numerator(A, lam, D))
        if not P.is_integral():
            raise NotAProductOfNumerators(f"U_{lam} does not divide the series")
        found.append(lam)
    else:
        if not P.is_one():
            raise TruncationInsufficient("iteration bound reached with a non-trivial residual")
    result = sort_weights(found)
    if numerator_product(A, result, D) != original:
        raise InvariantViolation("recovered factors do not multiply back to the input")
    return result


def factorize_tensor_character(A: CartanMatrix, chi: TruncatedSeries, n: int,
                               D: int | None = None) -> list[tuple[int, ...]]:
    """Factors of a product of n normalized characters, via ``chi * U_0^n``."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if D is None:
        D = chi.bound
    chi = chi.truncate(D)
    P = chi * numerator(A, (0,) * A.rank, D) ** n
    result = factorize_numerators(A, P, D)
    if len(result) != n:
        raise FactorCountMismatch(f"recovered {len(result)} factors, expected {n}")
    return result


def verify_prop1(A: CartanMatrix, lam, D: int | None = None):
    """Check the shape of ``(-log U_lambda)^#`` through degree D.

    Returns ``(coefficient at M^lambda, violations)``.  Besides minimality and
    uniqueness of ``M^lambda`` the coefficient is compared with ``c_dc`` of
    the Dynkin graph.
    """
    lam = dominant_weight(lam, A.rank)
    target = m_lambda(lam)
    d0 = deg_lambda(lam)
    if D is None:
        D = d0
    if D < d0:
        raise ValueError(f"need D >= deg(lambda) = {d0}, got {D}")
    L = regular_part(neg_log(numerator(A, lam, D)))
    problems = []
    for e, c in L.items():
        if sum(e) < d0:
            problems.append(f"regular term {e} (coefficient {c}) below degree {d0}")
        elif sum(e) == d0 and e != target:
            problems.append(f"extra regular term {e} (coefficient {c}) at degree {d0}")
    coef = Fraction(L.terms.get(target, 0))
    expected = c_dc(dynkin_graph(A))
    if coef != expected:
        problems.append(f"coefficient {coef} at {target} differs from c(G) = {expected}")
    return coef, problems
