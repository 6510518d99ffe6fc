"""Embeddings of tableau crystals into Lusztig data for single-sink quivers.

For a tableau ``S`` of shape ``lambda`` and a quiver with sink ``r`` the
datum is assembled from three pieces:

1. the rows below ``r`` give the coordinates ``c_ij`` with ``r < i`` by
   counting letters (:func:`c_plus`);
2. the top ``r`` rows are split into the letters ``<= r`` and the rest,
   the small letters are complemented inside a ``r x d`` box, and inverse
   skew RSK peels the large letters off into a matrix ``M`` (the
   coordinates ``c_ij`` with ``i <= r < j``);
3. the rectified leftover tableau over the barred alphabet gives the
   coordinates with ``j <= r`` (:func:`c_minus_barred`).

:func:`large_tableau` runs these steps backwards, which yields transition
maps between different sinks.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .lusztig import LusztigDatum, Quiver, positive_roots
from .rsk import BiwordMatrix, skew_rsk, skew_rsk_inverse
from .tableaux import (
    BARRED,
    UNBARRED,
    Alphabet,
    Tableau,
    antinormalize,
    normalize_partition,
    rectify,
    sigma_complement,
)


def _require_normal(S: Tableau, kind: str) -> None:
    if S.shape.rotated or not S.shape.is_straight():
        raise ValueError("expected a normal tableau of straight shape")
    if S.alphabet.kind != kind:
        raise ValueError(f"expected a tableau over the {kind} alphabet")
    if len(S.shape.outer) > S.n:
        raise ValueError(f"shape {S.shape.outer} has more than {S.n} rows")
    S.validate()


def c_plus(S: Tableau) -> LusztigDatum:
    """``c_ij`` = number of ``j`` in row ``i``; a datum for the sink-1 quiver."""
    _require_normal(S, UNBARRED)
    n = S.n
    if n < 2:
        raise ValueError("need n >= 2")
    c = {}
    for i, row in enumerate(S.rows, start=1):
        for j, m in Counter(row).items():
            if j > i:
                c[(i, j)] = m
    return LusztigDatum.from_dict(Quiver(n, 1), c)


def c_minus_barred(T: Tableau) -> LusztigDatum:
    """``c_ij`` = number of ``i``-bar in row ``n-j+1``; a datum for the sink-(n-1) quiver."""
    _require_normal(T, BARRED)
    n = T.n
    if n < 2:
        raise ValueError("need n >= 2")
    c = {}
    for k, row in enumerate(T.rows, start=1):
        j = n - k + 1
        for x, m in Counter(row).items():
            if -x < j:
                c[(-x, j)] = m
    return LusztigDatum.from_dict(Quiver(n, n - 1), c)


def c_minus(S: Tableau, d: int | None = None) -> LusztigDatum:
    """Datum of ``S`` for the sink-(n-1) quiver: complement, rectify, count."""
    _require_normal(S, UNBARRED)
    d = _default_d(S, d)
    return c_minus_barred(rectify(sigma_complement(S, d)))


def _default_d(S: Tableau, d: int | None) -> int:
    lam1 = S.shape.outer[0] if S.shape.outer else 0
    if d is None:
        return lam1
    if d < lam1:
        raise ValueError(f"d={d} is smaller than the first row {lam1}")
    return d


@dataclass(frozen=True)
class EmbeddingContext:
    """Shape, quiver and box width used when cutting a tableau at the sink."""

    lam: tuple[int, ...]
    quiver: Quiver
    d: int

    def __post_init__(self):
        lam = normalize_partition(self.lam)
        object.__setattr__(self, "lam", lam)
        if len(lam) > self.quiver.n:
            raise ValueError(f"shape {lam} has more than {self.quiver.n} rows")
        if lam and self.d < lam[0]:
            raise ValueError(f"d={self.d} is smaller than the first row {lam[0]}")

    @classmethod
    def for_tableau(cls, S: Tableau, q: Quiver, d: int | None = None) -> "EmbeddingContext":
        return cls(S.shape.outer, q, _default_d(S, d))

    def part(self, k: int) -> int:
        """``lambda_k`` (1-indexed, zero beyond the length)."""
        return self.lam[k - 1] if k <= len(self.lam) else 0

    @property
    def eta(self) -> tuple[int, ...]:
        r = self.quiver.sink
        return normalize_partition(self.d - self.part(k) for k in range(r, 0, -1))

    @property
    def zeta(self) -> tuple[int, ...]:
        r, n = self.quiver.sink, self.quiver.n
        return normalize_partition(self.part(k) for k in range(r + 1, n + 1))


@dataclass(frozen=True)
class SplitTriple:
    s_plus: Tableau
    s_minus: Tableau
    m: BiwordMatrix
    # intermediates, kept for inspection
    p_prime: Tableau
    q: Tableau
    p: Tableau
    t: Tableau


def split_tableau(S: Tableau, ctx: EmbeddingContext) -> SplitTriple:
    """Cut ``S`` at row ``r`` and undo skew RSK on the top part."""
    _require_normal(S, UNBARRED)
    if S.shape.outer != ctx.lam:
        raise ValueError(f"shape {S.shape.outer} differs from the context shape {ctx.lam}")
    n, r, d = ctx.quiver.n, ctx.quiver.sink, ctx.d
    if S.n != n:
        raise ValueError(f"tableau alphabet has size {S.n}, quiver has n={n}")
    rows = [list(S.rows[k]) if k < len(S.rows) else [] for k in range(n)]
    s_plus = Tableau.normal(rows[r:], Alphabet(UNBARRED, n))
    small = [[x for x in row if x <= r] for row in rows[:r]]
    p_prime = Tableau.normal(small, Alphabet(UNBARRED, r))
    # large letters of row k sit in flipped row r-1-k, read right to left
    frows = [list(reversed(rows[k][len(small[k]):])) for k in range(r - 1, -1, -1)]
    outer = [d - len(small[k]) for k in range(r - 1, -1, -1)]
    inner = [d - len(rows[k]) for k in range(r - 1, -1, -1)]
    outer_n = normalize_partition(outer)
    frows = frows[:len(outer_n)]
    if any(frows[len(outer_n):]):
        raise AssertionError("large letters in an empty flipped row")
    q = Tableau.from_flipped(outer_n, inner, frows, Alphabet(UNBARRED, n))
    p = sigma_complement(p_prime, d)
    t, m = skew_rsk_inverse(p, q)
    s_minus = rectify(t)
    return SplitTriple(s_plus, s_minus, m, p_prime, q, p, t)


def _assemble(q: Quiver, s_plus: Tableau, s_minus: Tableau, m: BiwordMatrix) -> LusztigDatum:
    r = q.sink
    c: dict[tuple[int, int], int] = {}
    for (a, b), v in m.entries.items():
        c[(-a, b)] = v
    for k, row in enumerate(s_minus.rows, start=1):
        j = r - k + 1
        for x, v in Counter(row).items():
            if -x < j:
                c[(-x, j)] = v
    for k, row in enumerate(s_plus.rows, start=r + 1):
        for j, v in Counter(row).items():
            if j > k:
                c[(k, j)] = v
    return LusztigDatum.from_dict(q, c)


def embed_general(S: Tableau, q: Quiver, d: int | None = None) -> LusztigDatum:
    """The three-piece construction, used for every sink (no shortcuts)."""
    ctx = EmbeddingContext.for_tableau(S, q, d)
    sp = split_tableau(S, ctx)
    return _assemble(q, sp.s_plus, sp.s_minus, sp.m)


def embed(S: Tableau, q: Quiver, d: int | None = None) -> LusztigDatum:
    """Lusztig datum of ``S`` for the single-sink quiver ``q``.

    The result does not depend on ``d >= lambda_1``.  Sinks ``1`` and
    ``n-1`` use the counting formulas directly.
    """
    _require_normal(S, UNBARRED)
    if S.n != q.n:
        raise ValueError(f"tableau alphabet has size {S.n}, quiver has n={q.n}")
    d = _default_d(S, d)
    if q.sink == 1:
        return c_plus(S)
    if q.sink == q.n - 1:
        return c_minus(S, d)
    return embed_general(S, q, d)


# --------------------------------------------------------------------------
# inverse direction
# --------------------------------------------------------------------------

def large_shape(c: LusztigDatum) -> tuple[int, ...]:
    """``lambda_k = (n-k) * (sum(c) + 1)``: every row gap exceeds the total count."""
    gap = c.total() + 1
    return normalize_partition((c.n - k) * gap for k in range(1, c.n + 1))


def large_tableau(c: LusztigDatum) -> Tableau:
    """A tableau ``S`` of a large shape with ``embed(S, c.quiver) == c``.

    Rows are padded with their baseline letters, so that each row has far
    more baseline letters than counted ones.
    """
    n, r = c.n, c.quiver.sink
    lam = large_shape(c)
    ctx = EmbeddingContext(lam, c.quiver, lam[0] if lam else 0)
    d = ctx.d

    plus_rows = []
    for i in range(r + 1, n + 1):
        extra = [j for j in range(i + 1, n + 1) for _ in range(c[i, j])]
        plus_rows.append([i] * (ctx.part(i) - len(extra)) + extra)
    minus_rows = []
    for k in range(1, r + 1):
        j = r - k + 1
        extra = [-i for i in range(j - 1, 0, -1) for _ in range(c[i, j])]
        minus_rows.append([-j] * (d - ctx.part(j) - len(extra)) + extra)
    s_minus = Tableau.normal(minus_rows, Alphabet(BARRED, r)).validate()

    m = BiwordMatrix(Alphabet(BARRED, r), Alphabet(UNBARRED, n),
                     {(-i, j): c[i, j] for i in range(1, r + 1) for j in range(r + 1, n + 1)})
    t = antinormalize(s_minus)
    p, q = skew_rsk(t, m)
    p_prime = sigma_complement(p, d)
    qrows = q.flipped_rows()
    top = []
    for k in range(r):
        fr = r - 1 - k
        tail = list(reversed(qrows[fr])) if fr < len(qrows) else []
        head = list(p_prime.rows[k]) if k < len(p_prime.rows) else []
        top.append(head + tail)
    S = Tableau.normal(top + plus_rows, Alphabet(UNBARRED, n))
    if S.shape.outer != lam or not S.is_semistandard():
        raise AssertionError(f"reconstruction failed for {c}")
    return S


def transition(c: LusztigDatum, q2: Quiver) -> LusztigDatum:
    """Re-express ``c`` for the quiver ``q2`` through a large tableau."""
    if q2.n != c.n:
        raise ValueError(f"quiver {q2} has a different rank from the datum (n={c.n})")
    return embed(large_tableau(c), q2)


def embedding_weight_shift(lam, n: int) -> tuple[int, ...]:
    """``-lambda`` as a length-``n`` weight vector."""
    lam = normalize_partition(lam)
    return tuple(-(lam[k] if k < len(lam) else 0) for k in range(n))


__all__ = [
    "EmbeddingContext", "SplitTriple", "c_plus", "c_minus_barred", "c_minus",
    "split_tableau", "embed", "embed_general", "large_shape", "large_tableau",
    "transition", "embedding_weight_shift", "positive_roots",
]
