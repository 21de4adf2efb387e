"""Exact truncated power series in ``X_1, ..., X_l``.

A :class:`TruncatedSeries` is an element of ``Q[[X]] / (monomials of degree > D)``
held as a sparse ``{exponent tuple: coefficient}`` map.  Coefficients are exact:
integral values are stored as ``int`` and everything else as a reduced
``Fraction``, which keeps integer-only work (Weyl numerators and their products)
on fast native integers.

Binary operations require equal rank and equal bound; nothing is silently
re-truncated.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import (
    BoundMismatch,
    ConstantTermNotOne,
    DegreeAboveBound,
    NonUnitDivisor,
    RankMismatch,
    SeriesFormatError,
)

HEADER = "# weyl-series v1"


def _coef(c):
    if isinstance(c, bool):
        raise TypeError("boolean coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _coef(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def _div(a, b):
    if b == 1:
        return a
    if b == -1:
        return -a
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return _coef(Fraction(a) / b)


def grlex_key(e: tuple[int, ...]):
    """Graded lexicographic order: total degree first, then exponents."""
    return (sum(e), e)


class TruncatedSeries:
    """An immutable truncated series; see the module docstring."""

    __slots__ = ("rank", "bound", "_terms")

    def __init__(self, rank: int, bound: int, terms=None, *, truncate: bool = False):
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive integer, got {rank!r}")
        if not isinstance(bound, int) or bound < 0:
            raise ValueError(f"bound must be a non-negative integer, got {bound!r}")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != rank or any(not isinstance(x, int) or x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for rank {rank}")
            if sum(e) > bound:
                if truncate:
                    continue
                raise DegreeAboveBound(f"term {e} has degree {sum(e)} > {bound}")
            c = _coef(c)
            if c:
                clean[e] = c
        self.rank = rank
        self.bound = bound
        self._terms = clean

    @classmethod
    def _raw(cls, rank, bound, terms):
        s = cls.__new__(cls)
        s.rank, s.bound, s._terms = rank, bound, terms
        return s

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, rank: int, bound: int) -> TruncatedSeries:
        return cls(rank, bound)

    @classmethod
    def one(cls, rank: int, bound: int) -> TruncatedSeries:
        return cls(rank, bound, {(0,) * rank: 1})

    @classmethod
    def monomial(cls, rank: int, bound: int, exps, coef=1) -> TruncatedSeries:
        return cls(rank, bound, {tuple(exps): coef}, truncate=True)

    @classmethod
    def variable(cls, rank: int, bound: int, i: int) -> TruncatedSeries:
        e = [0] * rank
        e[i] = 1
        return cls.monomial(rank, bound, e)

    # -- inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in graded lexicographic order."""
        return [(e, self._terms[e]) for e in sorted(self._terms, key=grlex_key)]

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.items())

    @property
    def constant_term(self):
        return Fraction(self._terms.get((0,) * self.rank, 0))

    def is_one(self) -> bool:
        return self._terms == {(0,) * self.rank: 1}

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def max_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.rank, self.bound, self._terms) == (other.rank, other.bound, other._terms)

    def __hash__(self):
        return hash((self.rank, self.bound, frozenset(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*X^{e}" for e, c in self.items()) or "0"
        return f"TruncatedSeries(rank={self.rank}, bound={self.bound}: {body})"

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")
        if self.bound != other.bound:
            raise BoundMismatch(f"bound {self.bound} vs {other.bound}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = _coef(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return TruncatedSeries._raw(self.rank, self.bound, out)

    def __neg__(self):
        return TruncatedSeries._raw(self.rank, self.bound, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> TruncatedSeries:
        c = _coef(c)
        if not c:
            return TruncatedSeries.zero(self.rank, self.bound)
        return TruncatedSeries._raw(self.rank, self.bound,
                                    {e: _coef(v * c) for e, v in self._terms.items()})

    def __mul__(self, other):
        self._check(other)
        D = self.bound
        a = sorted(self._terms.items(), key=lambda t: sum(t[0]))
        b = sorted(other._terms.items(), key=lambda t: sum(t[0]))
        bdeg = [sum(e) for e, _ in b]
        out: dict = {}
        for ea, ca in a:
            room = D - sum(ea)
            for (eb, cb), db in zip(b, bdeg):
                if db > room:
                    break
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        out = {e: _coef(c) for e, c in out.items() if c}
        return TruncatedSeries._raw(self.rank, D, out)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = TruncatedSeries.one(self.rank, self.bound)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def truncate(self, bound: int) -> TruncatedSeries:
        """Drop terms above ``bound``; ``bound`` may not exceed the current one."""
        if bound > self.bound:
            raise BoundMismatch(f"cannot raise the bound from {self.bound} to {bound}")
        return TruncatedSeries(self.rank, bound, self._terms, truncate=True)


# -- module-level functions -------------------------------------------------

def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f + g


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f * g


def _quotient_by_degree(f: TruncatedSeries, g: TruncatedSeries):
    """Yield ``(d, {e: h_e})`` for h = f / g, one total degree at a time.

    Each quotient term, once final, pushes its products with the
    non-constant part of g into the higher-degree buckets.
    """
    zero = (0,) * f.rank
    g0 = g._terms.get(zero, 0)
    if not g0:
        raise NonUnitDivisor("divisor has zero constant term")
    D = f.bound
    tail = sorted(((sum(t), t, c) for t, c in g._terms.items() if t != zero),
                  key=lambda x: x[0])
    buckets: list[dict] = [{} for _ in range(D + 1)]
    for e, c in f._terms.items():
        buckets[sum(e)][e] = c
    for d in range(D + 1):
        level = {}
        for e, acc in buckets[d].items():
            h = _div(acc, g0) if acc else 0
            if not h:
                continue
            level[e] = h
            for dt, t, c in tail:
                if d + dt > D:
                    break
                e2 = tuple(x + y for x, y in zip(e, t))
                bucket = buckets[d + dt]
                bucket[e2] = bucket.get(e2, 0) - h * c
        buckets[d] = None
        yield d, level


def div_by_unit(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """The unique h with ``h * g == f`` through degree D."""
    f._check(g)
    out = {}
    for _, level in _quotient_by_degree(f, g):
        out.update(level)
    return TruncatedSeries._raw(f.rank, f.bound, out)


def _euler(f: TruncatedSeries) -> TruncatedSeries:
    """Apply ``sum_i X_i d/dX_i``: scales each term by its total degree."""
    return TruncatedSeries._raw(f.rank, f.bound,
                                {e: c * sum(e) for e, c in f._terms.items() if sum(e)})


def neg_log_by_degree(f: TruncatedSeries):
    """Yield ``(d, {e: coefficient})`` of ``-log f`` degree by degree.

    Uses ``E(log f) = E(f) / f`` with E the Euler operator, so the whole
    logarithm costs one series division instead of D powers of ``1 - f``.
    """
    zero = (0,) * f.rank
    if f._terms.get(zero, 0) != 1:
        raise ConstantTermNotOne(f"constant term is {f.constant_term}, expected 1")
    for d, level in _quotient_by_degree(_euler(f), f):
        yield d, {e: _coef(Fraction(-q, d)) for e, q in level.items()} if d else {}


def neg_log(f: TruncatedSeries) -> TruncatedSeries:
    """``-log f = sum_{k>=1} (1 - f)^k / k`` through degree D."""
    out = {}
    for _, level in neg_log_by_degree(f):
        out.update(level)
    return TruncatedSeries._raw(f.rank, f.bound, out)


def regular_part(f: TruncatedSeries) -> TruncatedSeries:
    """Keep only monomials in which every variable occurs."""
    return TruncatedSeries._raw(f.rank, f.bound,
                                {e: c for e, c in f._terms.items() if all(e)})


def min_regular_monomials(f: TruncatedSeries) -> list[tuple[tuple[int, ...], Fraction]]:
    """Regular terms of least total degree, in graded lexicographic order."""
    regular = [(e, c) for e, c in f._terms.items() if all(e)]
    if not regular:
        return []
    low = min(sum(e) for e, _ in regular)
    return sorted(((e, Fraction(c)) for e, c in regular if sum(e) == low),
                  key=lambda t: t[0])


def coefficient(f: TruncatedSeries, e) -> Fraction:
    e = tuple(e)
    if len(e) != f.rank:
        raise RankMismatch(f"exponent {e} has length {len(e)}, series has rank {f.rank}")
    if sum(e) > f.bound:
        raise DegreeAboveBound(f"degree {sum(e)} exceeds bound {f.bound}")
    return Fraction(f._terms.get(e, 0))


# -- text format ----------------------------------------------------------------

def dumps(f: TruncatedSeries) -> str:
    lines = [HEADER, f"# rank={f.rank} degree={f.bound}"]
    for e, c in f.items():
        lines.append(" ".join(map(str, e)) + f" : {Fraction(c)}")
    return "\n".join(lines) + "\n"


def _parse_coef(tok: str) -> Fraction:
    num, slash, den = tok.partition("/")
    try:
        p = int(num)
        q = int(den) if slash else 1
    except ValueError as exc:
        raise SeriesFormatError(f"bad coefficient {tok!r}") from exc
    c = Fraction(p, q) if q else None
    if c is None or q <= 0 or (slash and q == 1) or str(c) != tok:
        raise SeriesFormatError(f"coefficient {tok!r} is not in lowest terms")
    if c == 0:
        raise SeriesFormatError("zero coefficient stored")
    return c


def loads(text: str) -> TruncatedSeries:
    if "\r" in text:
        raise SeriesFormatError("line endings must be LF")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2 or lines[0] != HEADER:
        raise SeriesFormatError(f"missing header {HEADER!r}")
    head = lines[1].split(" ")
    try:
        if len(head) != 3 or head[0] != "#" or not head[1].startswith("rank=") \
                or not head[2].startswith("degree="):
            raise ValueError
        rank = int(head[1][5:])
        bound = int(head[2][7:])
    except ValueError:
        raise SeriesFormatError(f"bad size line {lines[1]!r}") from None
    terms = {}
    prev = None
    for ln in lines[2:]:
        left, sep, right = ln.partition(" : ")
        if not sep:
            raise SeriesFormatError(f"bad term line {ln!r}")
        try:
            e = tuple(int(x) for x in left.split(" "))
        except ValueError:
            raise SeriesFormatError(f"bad exponent in {ln!r}") from None
        if len(e) != rank or any(x < 0 for x in e) or " ".join(map(str, e)) != left:
            raise SeriesFormatError(f"bad exponent vector in {ln!r}")
        if sum(e) > bound:
            raise SeriesFormatError(f"term {e} above degree {bound}")
        if prev is not None and grlex_key(e) <= grlex_key(prev):
            raise SeriesFormatError("terms not in strictly increasing graded order")
        terms[e] = _parse_coef(right)
        prev = e
    try:
        return TruncatedSeries(rank, bound, terms)
    except ValueError as exc:
        raise SeriesFormatError(str(exc)) from exc
