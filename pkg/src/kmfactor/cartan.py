"""Generalized Cartan matrices, their graphs, and weight-level arithmetic.

Convention: ``a_ij = <alpha_j, alpha_i^vee>``, so applying the simple
reflection s_i to a weight with coroot pairings ``v`` gives pairings
``v_j - v_i * a_ji``.  A dominant weight is stored only through its coroot
pairings ``(m_1, ..., m_l)``; weights agreeing there are identified.
"""
from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .cgraph import DynkinGraph
from .errors import (
    AsymmetricZeroPattern,
    DecomposableMatrix,
    DiagonalNotTwo,
    GCMError,
    InvalidWeight,
    NotSquare,
    NotSymmetrizable,
    PositiveOffDiagonal,
)

Weight = tuple[int, ...]
Exponent = tuple[int, ...]


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    labels: tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i][j]

    def symmetrized(self) -> list[list[Fraction]]:
        """The symmetric matrix ``(d_i a_ij)``."""
        return [[self.symmetrizer[i] * a for a in row] for i, row in enumerate(self.entries)]

    def to_json(self) -> str:
        return json.dumps({"labels": list(self.labels), "matrix": [list(r) for r in self.entries]})


def validate_gcm(matrix, labels=None) -> CartanMatrix:
    """Check the GCM axioms and compute a symmetrizer with minimum entry 1."""
    rows = [list(r) for r in matrix]
    l = len(rows)
    if l < 1 or any(len(r) != l for r in rows):
        raise NotSquare(f"expected a square matrix, got row lengths {[len(r) for r in rows]}")
    for r in rows:
        for a in r:
            if isinstance(a, bool) or not isinstance(a, int):
                raise GCMError(f"non-integer entry {a!r}")
    for i in range(l):
        if rows[i][i] != 2:
            raise DiagonalNotTwo(f"a[{i}][{i}] = {rows[i][i]}")
    for i, j in itertools.permutations(range(l), 2):
        if rows[i][j] > 0:
            raise PositiveOffDiagonal(f"a[{i}][{j}] = {rows[i][j]}")
        if (rows[i][j] == 0) != (rows[j][i] == 0):
            raise AsymmetricZeroPattern(f"a[{i}][{j}] = {rows[i][j]} but a[{j}][{i}] = {rows[j][i]}")

    d: list[Fraction | None] = [None] * l
    for root in range(l):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(l):
                if j != i and rows[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * rows[i][j] / rows[j][i]
                    queue.append(j)
    for i, j in itertools.combinations(range(l), 2):
        if d[i] * rows[i][j] != d[j] * rows[j][i]:
            raise NotSymmetrizable(f"ratio around a cycle through {i},{j} is inconsistent")
    low = min(d)
    sym = tuple(x / low for x in d)

    if labels is None:
        labels = [str(i) for i in range(l)]
    labels = tuple(str(s) for s in labels)
    if len(labels) != l:
        raise GCMError(f"{len(labels)} labels for rank {l}")
    return CartanMatrix(tuple(tuple(r) for r in rows), sym, labels)


def parse_gcm(text: str) -> CartanMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GCMError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise GCMError('expected an object with a "matrix" key')
    matrix = obj["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise GCMError('"matrix" must be a list of rows')
    return validate_gcm(matrix, obj.get("labels"))


def load_gcm(path) -> CartanMatrix:
    return parse_gcm(Path(path).read_text(encoding="utf-8"))


def dynkin_graph(A: CartanMatrix) -> DynkinGraph:
    return DynkinGraph(A.rank, frozenset(
        (i, j) for i, j in itertools.combinations(range(A.rank), 2) if A[i, j] != 0))


def is_indecomposable(A: CartanMatrix) -> bool:
    return dynkin_graph(A).is_connected()


# -- exact linear algebra -----------------------------------------------------

def _det(M) -> Fraction:
    M = [[Fraction(x) for x in row] for row in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if M[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                for k in range(c, n):
                    M[r][k] -= f * M[c][k]
    return det


def _rank(M) -> int:
    M = [[Fraction(x) for x in row] for row in M]
    rows, cols = len(M), len(M[0]) if M else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c] / M[r][c]
                for k in range(c, cols):
                    M[i][k] -= f * M[r][k]
        r += 1
    return r


def _principal_minor(M, idx) -> Fraction:
    return _det([[M[i][j] for j in idx] for i in idx])


def leading_principal_minors(M) -> list[Fraction]:
    return [_principal_minor(M, range(k)) for k in range(1, len(M) + 1)]


def is_positive_definite(A: CartanMatrix) -> bool:
    """Sylvester's criterion on the symmetrized matrix."""
    return all(m > 0 for m in leading_principal_minors(A.symmetrized()))


def classify(A: CartanMatrix) -> str:
    """``'finite'``, ``'affine'`` or ``'indefinite'`` for an indecomposable GCM.

    Affine means the symmetrized matrix is positive semidefinite of corank 1;
    semidefiniteness is checked over all principal minors, since the leading
    ones alone do not decide it.
    """
    if not is_indecomposable(A):
        raise DecomposableMatrix("classification needs an indecomposable matrix")
    S = A.symmetrized()
    if is_positive_definite(A):
        return "finite"
    l = A.rank
    psd = all(_principal_minor(S, idx) >= 0
              for k in range(1, l + 1) for idx in itertools.combinations(range(l), k))
    if psd and _rank(S) == l - 1:
        return "affine"
    return "indefinite"


# -- weights ------------------------------------------------------------------

def dominant_weight(coords, rank: int | None = None) -> Weight:
    """Validate and freeze a vector of coroot pairings."""
    w = tuple(coords)
    for m in w:
        if isinstance(m, bool) or not isinstance(m, int) or m < 0:
            raise InvalidWeight(f"weight coordinates must be non-negative integers, got {w}")
    if rank is not None and len(w) != rank:
        raise InvalidWeight(f"weight {w} has length {len(w)}, expected rank {rank}")
    if not w:
        raise InvalidWeight("empty weight")
    return w


def rho_shift(lam) -> tuple[int, ...]:
    """Pairings of lambda + rho with the simple coroots."""
    return tuple(m + 1 for m in dominant_weight(lam))


def m_lambda(lam) -> Exponent:
    """Exponent vector of the regular monomial attached to ``lam``."""
    return rho_shift(lam)


def deg_lambda(lam) -> int:
    return sum(rho_shift(lam))


def is_regular(e) -> bool:
    return all(x >= 1 for x in e)


# -- a few standard matrices -----------------------------------------------

def _tridiagonal(n: int) -> list[list[int]]:
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


def type_a(n: int) -> CartanMatrix:
    return validate_gcm(_tridiagonal(n))


def type_b(n: int) -> CartanMatrix:
    """B_n with the short simple root last (``a_{n-1,n} = -2``)."""
    if n < 2:
        raise ValueError("B_n needs n >= 2")
    M = _tridiagonal(n)
    M[n - 2][n - 1] = -2
    return validate_gcm(M)


def type_c(n: int) -> CartanMatrix:
    if n < 2:
        raise ValueError("C_n needs n >= 2")
    M = _tridiagonal(n)
    M[n - 1][n - 2] = -2
    return validate_gcm(M)


def type_d(n: int) -> CartanMatrix:
    if n < 4:
        raise ValueError("D_n needs n >= 4")
    M = _tridiagonal(n)
    M[n - 2][n - 1] = M[n - 1][n - 2] = 0
    M[n - 3][n - 1] = M[n - 1][n - 3] = -1
    return validate_gcm(M)


def type_g2() -> CartanMatrix:
    return validate_gcm([[2, -1], [-3, 2]])


def affine_a(n: int) -> CartanMatrix:
    """A_n^(1): the (n+1)-cycle for n >= 2, ``[[2,-2],[-2,2]]`` for n = 1."""
    if n == 1:
        return validate_gcm([[2, -2], [-2, 2]])
    m = n + 1
    M = [[2 if i == j else (-1 if (i - j) % m in (1, m - 1) else 0) for j in range(m)]
         for i in range(m)]
    return validate_gcm(M)


def direct_sum(*mats: CartanMatrix) -> CartanMatrix:
    l = sum(A.rank for A in mats)
    M = [[0] * l for _ in range(l)]
    off = 0
    for A in mats:
        for i in range(A.rank):
            for j in range(A.rank):
                M[off + i][off + j] = A[i, j]
        off += A.rank
    return validate_gcm(M)
