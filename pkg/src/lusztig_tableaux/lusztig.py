"""Lusztig data for single-sink quivers of type A and their crystal operators.

A datum is a table of nonnegative counts ``c[i, j]`` indexed by the positive
roots ``eps_i - eps_j`` (``1 <= i < j <= n``).  Kashiwara operators are
available by two independent routes:

* :func:`apply_direct` evaluates piecewise-linear scan formulas on the
  coordinates;
* :func:`apply_tensor` splits the datum into three factors, computes each
  factor's ``eps``/``phi`` from a word, and routes the operator with the
  tensor product rule.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .rsk import Biword, tau_transpose
from .tableaux import NEG_INF, lower_word, raise_word, word_stats


def positive_roots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


@dataclass(frozen=True)
class Quiver:
    """The type ``A_{n-1}`` quiver ``1 -> ... -> r <- ... <- n-1``."""

    n: int
    sink: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if not 1 <= self.sink <= self.n - 1:
            raise ValueError(f"sink {self.sink} out of range 1..{self.n - 1}")

    @property
    def indices(self) -> range:
        return range(1, self.n)

    def arrows(self) -> set[tuple[int, int]]:
        out = set()
        for v in range(1, self.n - 1):
            out.add((v, v + 1) if v + 1 <= self.sink else (v + 1, v))
        return out

    def reflected(self) -> "Quiver":
        return Quiver(self.n, self.n - self.sink)

    def __str__(self):
        return f"{self.n},{self.sink}"

    @classmethod
    def parse(cls, text: str) -> "Quiver":
        try:
            n, r = (int(x) for x in text.split(","))
        except ValueError:
            raise ValueError(f"quiver must be given as 'n,r', got {text!r}") from None
        return cls(n, r)


# --------------------------------------------------------------------------
# adapted reduced words
# --------------------------------------------------------------------------

def _sinks(arrows: set[tuple[int, int]], n: int) -> list[int]:
    sources = {s for s, _ in arrows}
    return [v for v in range(1, n) if v not in sources]


def _reflect_arrows(arrows: set[tuple[int, int]], v: int) -> set[tuple[int, int]]:
    return {(t, s) if v in (s, t) else (s, t) for s, t in arrows}


def adapted_word(q: Quiver) -> tuple[int, ...]:
    """A reduced word of the longest element adapted to ``q``.

    Repeatedly picks the smallest sink ``i`` of the current quiver for which
    ``s_i`` lengthens the permutation, then reflects the quiver at ``i``;
    backtracks if it gets stuck.
    """
    n = q.n
    N = n * (n - 1) // 2

    def search(arrows, perm, word):
        if len(word) == N:
            return word
        for v in _sinks(arrows, n):
            if perm[v - 1] < perm[v]:
                p = list(perm)
                p[v - 1], p[v] = p[v], p[v - 1]
                found = search(_reflect_arrows(arrows, v), p, word + [v])
                if found is not None:
                    return found
        return None

    word = search(q.arrows(), list(range(1, n + 1)), [])
    assert word is not None
    return tuple(word)


def check_adapted(word: Sequence[int], q: Quiver) -> None:
    """Raise ``ValueError`` unless ``word`` is a reduced word of ``w_0`` adapted to ``q``."""
    n = q.n
    if len(word) != n * (n - 1) // 2:
        raise ValueError("word has the wrong length for the longest element")
    arrows = q.arrows()
    perm = list(range(1, n + 1))
    for k, v in enumerate(word):
        if not 1 <= v <= n - 1:
            raise ValueError(f"letter {v} out of range")
        if v not in _sinks(arrows, n):
            raise ValueError(f"letter {v} at position {k + 1} is not a sink")
        if perm[v - 1] > perm[v]:
            raise ValueError(f"word is not reduced at position {k + 1}")
        perm[v - 1], perm[v] = perm[v], perm[v - 1]
        arrows = _reflect_arrows(arrows, v)


def root_order(word: Sequence[int]) -> list[tuple[int, int]]:
    """``beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})`` as pairs ``(i, j)``."""
    n = max(word) + 1 if word else 2
    perm = list(range(1, n + 1))  # perm[a-1] = w(a) for the prefix product w
    roots = []
    for v in word:
        a, b = perm[v - 1], perm[v]
        if a > b:
            raise ValueError("word is not reduced")
        roots.append((a, b))
        perm[v - 1], perm[v] = b, a
    return roots


# --------------------------------------------------------------------------
# data
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LusztigDatum:
    """Nonnegative counts on the positive roots, tied to a single-sink quiver."""

    quiver: Quiver
    counts: tuple[int, ...]
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        counts = tuple(int(x) for x in self.counts)
        n = self.quiver.n
        if len(counts) != n * (n - 1) // 2:
            raise ValueError("wrong number of coordinates")
        if any(x < 0 for x in counts):
            raise ValueError("Lusztig data are nonnegative")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "_hash", hash((self.quiver, counts)))

    def __hash__(self):
        return self._hash

    @classmethod
    def from_dict(cls, quiver: Quiver, c: Mapping[tuple[int, int], int]) -> "LusztigDatum":
        roots = positive_roots(quiver.n)
        for key in c:
            if key not in _root_index(quiver.n):
                raise ValueError(f"{key} is not a positive root for n={quiver.n}")
        return cls(quiver, tuple(c.get(rt, 0) for rt in roots))

    @classmethod
    def zero(cls, quiver: Quiver) -> "LusztigDatum":
        return cls(quiver, (0,) * (quiver.n * (quiver.n - 1) // 2))

    @property
    def n(self) -> int:
        return self.quiver.n

    def __getitem__(self, root: tuple[int, int]) -> int:
        idx = _root_index(self.quiver.n).get(root)
        return 0 if idx is None else self.counts[idx]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {rt: c for rt, c in zip(positive_roots(self.n), self.counts) if c}

    def total(self) -> int:
        return sum(self.counts)

    def with_quiver(self, quiver: Quiver) -> "LusztigDatum":
        return LusztigDatum(quiver, self.counts)

    def shifted(self, delta: Mapping[tuple[int, int], int]) -> "LusztigDatum":
        c = list(self.counts)
        index = _root_index(self.n)
        for rt, d in delta.items():
            c[index[rt]] += d
        return LusztigDatum(self.quiver, tuple(c))

    def weight(self) -> tuple[int, ...]:
        """``-sum c_ij (eps_i - eps_j)``."""
        wt = [0] * self.n
        for (i, j), c in zip(positive_roots(self.n), self.counts):
            wt[i - 1] -= c
            wt[j - 1] += c
        return tuple(wt)

    def by_word(self, word: Sequence[int] | None = None) -> tuple[int, ...]:
        """Coordinates in the order of the root order of ``word``."""
        word = adapted_word(self.quiver) if word is None else word
        return tuple(self[rt] for rt in root_order(word))

    def to_json(self) -> dict:
        return {"n": self.n, "sink": self.quiver.sink,
                "c": [[i, j, c] for (i, j), c in sorted(self.as_dict().items())]}

    @classmethod
    def from_json(cls, data: dict) -> "LusztigDatum":
        q = Quiver(int(data["n"]), int(data["sink"]))
        return cls.from_dict(q, {(int(i), int(j)): int(c) for i, j, c in data["c"]})

    def __str__(self):
        return f"c[{self.quiver}]" + str(self.as_dict())


_ROOT_INDEX_CACHE: dict[int, dict[tuple[int, int], int]] = {}


def _root_index(n: int) -> dict[tuple[int, int], int]:
    index = _ROOT_INDEX_CACHE.get(n)
    if index is None:
        index = {rt: k for k, rt in enumerate(positive_roots(n))}
        _ROOT_INDEX_CACHE[n] = index
    return index


def pairing(wt: Sequence[int], i: int) -> int:
    """``<wt, h_i>``."""
    return wt[i - 1] - wt[i]


def reflect(c: LusztigDatum) -> LusztigDatum:
    """Diagram automorphism ``(i, j) -> (n+1-j, n+1-i)``, sink ``r -> n-r``."""
    n = c.n
    return LusztigDatum.from_dict(c.quiver.reflected(),
                                  {(n + 1 - j, n + 1 - i): v for (i, j), v in c.as_dict().items()})


# --------------------------------------------------------------------------
# direct formulas
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class OperatorScan:
    sums: tuple[int, ...]
    max: int
    k0: int
    k1: int

    @classmethod
    def of(cls, sums: Sequence[int]) -> "OperatorScan":
        m = max(sums)
        k0 = sums.index(m) + 1
        k1 = len(sums) - sums[::-1].index(m)
        return cls(tuple(sums), m, k0, k1)


def scan_below_sink(c: LusztigDatum, i: int) -> tuple[OperatorScan, list[int]]:
    """Partial sums for an index ``i < r`` and the column touched at each step.

    The roots in rows ``i`` and ``i+1`` are visited in the columns
    ``r+1, ..., n`` and then ``r, r-1, ..., i+1``.
    """
    n, r = c.n, c.quiver.sink
    if not 1 <= i < r:
        raise ValueError(f"index {i} is not below the sink {r}")
    sums = [c[i, r + 1]]
    columns = [r + 1]
    for s in range(2, n - r + 1):
        sums.append(sums[-1] + c[i, r + s] - c[i + 1, r + s - 1])
        columns.append(r + s)
    sums.append(sums[-1] + c[i, r] - c[i + 1, n])
    columns.append(r)
    for s in range(1, r - i):
        sums.append(sums[-1] + c[i, r - s] - c[i + 1, r - s + 1])
        columns.append(r - s)
    return OperatorScan.of(sums), columns


def _apply_below_sink(c: LusztigDatum, i: int, raising: bool) -> LusztigDatum | None:
    scan, columns = scan_below_sink(c, i)
    if raising:
        if scan.max <= 0:
            return None
        col = columns[scan.k0 - 1]
        if col == i + 1:
            return c.shifted({(i, i + 1): -1})
        return c.shifted({(i, col): -1, (i + 1, col): 1})
    col = columns[scan.k1 - 1]
    if col == i + 1:
        return c.shifted({(i, i + 1): 1})
    return c.shifted({(i, col): 1, (i + 1, col): -1})


def scan_positive(c: LusztigDatum, i: int) -> OperatorScan:
    """Partial sums ``sum_{s<=k} (c_{s,i+1} - c_{s-1,i})`` for the sink-1 quiver."""
    sums = []
    acc = 0
    for k in range(1, i + 1):
        acc += c[k, i + 1] - (c[k - 1, i] if k > 1 else 0)
        sums.append(acc)
    return OperatorScan.of(sums)


def apply_positive(c: LusztigDatum, i: int, direction: str) -> LusztigDatum | None:
    """Operators of the one-direction quiver with sink 1."""
    scan = scan_positive(c, i)
    if direction == "raise":
        if scan.max <= 0:
            return None
        if scan.k0 < i:
            return c.shifted({(scan.k0, i): 1, (scan.k0, i + 1): -1})
        return c.shifted({(i, i + 1): -1})
    if scan.k1 < i:
        return c.shifted({(scan.k1, i): -1, (scan.k1, i + 1): 1})
    return c.shifted({(i, i + 1): 1})


def apply_extremal(c: LusztigDatum, i: int, direction: str) -> LusztigDatum | None:
    """Sink 1 directly, sink ``n-1`` through the diagram reflection."""
    r = c.quiver.sink
    if r == 1:
        return apply_positive(c, i, direction)
    if r == c.n - 1:
        out = apply_positive(reflect(c), c.n - i, direction)
        return None if out is None else reflect(out)
    raise ValueError("apply_extremal needs sink 1 or n-1")


def _check_direction(direction: str) -> bool:
    if direction not in ("raise", "lower"):
        raise ValueError(f"direction must be 'raise' or 'lower', not {direction!r}")
    return direction == "raise"


def _check_i(c: LusztigDatum, i: int) -> None:
    if not 1 <= i <= c.n - 1:
        raise ValueError(f"crystal index {i} out of range for n={c.n}")


def apply_general(c: LusztigDatum, i: int, direction: str) -> LusztigDatum | None:
    """Scan formulas for any sink: the first-coordinate rule at ``i = r``,
    the scan below the sink for ``i < r``, and its reflection for ``i > r``."""
    raising = _check_direction(direction)
    _check_i(c, i)
    r = c.quiver.sink
    if i == r:
        if raising:
            return c.shifted({(r, r + 1): -1}) if c[r, r + 1] > 0 else None
        return c.shifted({(r, r + 1): 1})
    if i < r:
        return _apply_below_sink(c, i, raising)
    out = _apply_below_sink(reflect(c), c.n - i, raising)
    return None if out is None else reflect(out)


def apply_direct(c: LusztigDatum, i: int, direction: str) -> LusztigDatum | None:
    """``e_i`` / ``f_i`` on ``B_Omega`` from closed formulas (``None`` is zero)."""
    _check_direction(direction)
    _check_i(c, i)
    if c.quiver.sink in (1, c.n - 1):
        return apply_extremal(c, i, direction)
    return apply_general(c, i, direction)


def epsilon_direct(c: LusztigDatum, i: int) -> int:
    _check_i(c, i)
    r = c.quiver.sink
    if r == 1:
        return max(scan_positive(c, i).max, 0)
    if r == c.n - 1:
        return max(scan_positive(reflect(c), c.n - i).max, 0)
    if i == r:
        return c[r, r + 1]
    if i < r:
        return max(scan_below_sink(c, i)[0].max, 0)
    return max(scan_below_sink(reflect(c), c.n - i)[0].max, 0)


@dataclass(frozen=True)
class CrystalStats:
    wt: tuple[int, ...]
    eps: dict
    phi: dict


def weight_and_stats(c: LusztigDatum, i: int | None = None) -> CrystalStats:
    """Weight together with ``eps_i`` and ``phi_i`` (all ``i`` if omitted)."""
    wt = c.weight()
    idx = list(c.quiver.indices) if i is None else [i]
    eps = {k: epsilon_direct(c, k) for k in idx}
    phi = {k: pairing(wt, k) + eps[k] for k in idx}
    return CrystalStats(wt, eps, phi)


# --------------------------------------------------------------------------
# three-factor decomposition
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class DatumSplit:
    """Restrictions of a datum to the roots ``(i<=r<j)``, ``(j<=r)`` and ``(r<i)``."""

    cJ: LusztigDatum
    cJ1: LusztigDatum
    cJ2: LusztigDatum


def root_block(i: int, j: int, r: int) -> str:
    if i <= r < j:
        return "J"
    return "J1" if j <= r else "J2"


def split(c: LusztigDatum) -> DatumSplit:
    r = c.quiver.sink
    parts: dict[str, dict] = {"J": {}, "J1": {}, "J2": {}}
    for rt, v in c.as_dict().items():
        parts[root_block(*rt, r)][rt] = v
    q = c.quiver
    return DatumSplit(LusztigDatum.from_dict(q, parts["J"]),
                      LusztigDatum.from_dict(q, parts["J1"]),
                      LusztigDatum.from_dict(q, parts["J2"]))


def merge(s: DatumSplit) -> LusztigDatum:
    q = s.cJ.quiver
    r = q.sink
    out: dict = {}
    for block, part in (("J", s.cJ), ("J1", s.cJ1), ("J2", s.cJ2)):
        if part.quiver != q:
            raise ValueError("split parts belong to different quivers")
        for rt, v in part.as_dict().items():
            if root_block(*rt, r) != block:
                raise ValueError(f"root {rt} does not belong to block {block}")
            out[rt] = v
    return LusztigDatum.from_dict(q, out)


# Factor crystals.  Each returns (eps, phi) for an index, and applies an
# operator returning a dict of coordinates or None.  Coordinates are kept as
# plain dicts keyed by root inside the tensor route.

class _NilradicalFactor:
    """The factor supported on roots ``(i <= r < j)``.

    Encoded by the matrix with ``m[i-bar, j] = c_ij``; indices below the sink
    act on the rearranged top word, indices above on the bottom word.
    """

    def __init__(self, c: dict, n: int, r: int):
        self.c, self.n, self.r = c, n, r
        pairs = Counter({(-i, j): v for (i, j), v in c.items()})
        self.biword = biword_of_pairs(pairs)
        self.tau = tau_transpose(self.biword)

    def weight_pairing(self, i: int) -> int:
        wt = _weight(self.c, self.n)
        return pairing(wt, i)

    def stats(self, i: int):
        r = self.r
        if i == r:
            e = self.c.get((r, r + 1), 0)
            return e, self.weight_pairing(i) + e
        if i < r:
            return word_stats(self.tau.top, i)
        return word_stats(self.biword.bottom, i)

    def apply(self, i: int, raising: bool) -> dict | None:
        r = self.r
        c = dict(self.c)
        if i == r:
            v = c.get((r, r + 1), 0) + (-1 if raising else 1)
            if v < 0:
                return None
            c[(r, r + 1)] = v
            return {k: x for k, x in c.items() if x}
        op = raise_word if raising else lower_word
        if i < r:
            top = op(self.tau.top, i)
            if top is None:
                return None
            pairs = zip(top, self.tau.bottom)
        else:
            bottom = op(self.biword.bottom, i)
            if bottom is None:
                return None
            pairs = zip(self.biword.top, bottom)
        out: Counter = Counter()
        for a, b in pairs:
            out[(-a, b)] += 1
        return dict(out)


class _LeviFactor:
    """A one-direction factor, encoded by ``M^-`` (below the sink) or ``M^+``.

    ``low``/``high`` bound the letters of the Levi block: indices ``low..high-1``.
    For the block below the sink (``low = 1, high = r``) the pairs are
    ``(r-j+1, i-bar)``; for the block above (``low = r+1, high = n``) they
    are ``(i, j)``.
    """

    def __init__(self, c: dict, n: int, low: int, high: int, below: bool):
        self.c, self.n, self.low, self.high, self.below = c, n, low, high, below
        if below:
            pairs = Counter({(high - j + 1, -i): v for (i, j), v in c.items()})
        else:
            pairs = Counter({(i, j): v for (i, j), v in c.items()})
        self.biword = biword_of_pairs(pairs)

    def in_range(self, i: int) -> bool:
        return self.low <= i < self.high

    def stats(self, i: int):
        if not self.in_range(i):
            return NEG_INF, NEG_INF
        e, _ = word_stats(self.biword.bottom, i)
        return e, pairing(_weight(self.c, self.n), i) + e

    def word_phi(self, i: int) -> int:
        return word_stats(self.biword.bottom, i)[1]

    def _to_counts(self, pairs) -> dict:
        out: Counter = Counter()
        hi = self.high
        for a, b in pairs:
            if self.below:
                i, j = -b, hi - a + 1
            else:
                i, j = a, b
            if i < j:  # projection onto the strictly upper part
                out[(i, j)] += 1
        return dict(out)

    def apply(self, i: int, raising: bool) -> dict | None:
        if not self.in_range(i):
            return None
        bottom = self.biword.bottom
        if raising:
            new = raise_word(bottom, i)
            if new is None:
                return None
            return self._to_counts(zip(self.biword.top, new))
        new = lower_word(bottom, i)
        if new is None:
            c = dict(self.c)
            c[(i, i + 1)] = c.get((i, i + 1), 0) + 1
            return c
        return self._to_counts(zip(self.biword.top, new))


def biword_of_pairs(pairs: Counter) -> Biword:
    ordered = sorted(pairs.elements(), key=lambda p: (p[0], -p[1]))
    return Biword(tuple(a for a, _ in ordered), tuple(b for _, b in ordered))


def _weight(c: Mapping[tuple[int, int], int], n: int) -> list[int]:
    wt = [0] * n
    for (i, j), v in c.items():
        wt[i - 1] -= v
        wt[j - 1] += v
    return wt


def tensor_stats(factors: Sequence[tuple[float, float, int]]) -> tuple[float, float]:
    """``(eps, phi)`` of ``b_1 (x) ... (x) b_k`` from ``(eps, phi, <wt, h_i>)``."""
    eps, phi, pair = factors[0]
    for e2, p2, w2 in factors[1:]:
        eps = max(eps, e2 - pair)
        phi = max(phi + w2, p2)
        pair += w2
    return eps, phi


def tensor_target(factors: Sequence[tuple[float, float, int]], raising: bool) -> int:
    """Which tensor factor the operator acts on (left-nested product rule)."""
    k = len(factors) - 1
    while k > 0:
        _, phi_left = tensor_stats(factors[:k])
        eps_right = factors[k][0]
        go_left = phi_left >= eps_right if raising else phi_left > eps_right
        if not go_left:
            return k
        k -= 1
    return 0


def _factors(c: LusztigDatum):
    n, r = c.n, c.quiver.sink
    s = split(c)
    factors = [_NilradicalFactor(s.cJ.as_dict(), n, r)]
    if r > 1:
        factors.append(_LeviFactor(s.cJ1.as_dict(), n, 1, r, below=True))
    if r < n - 1:
        factors.append(_LeviFactor(s.cJ2.as_dict(), n, r + 1, n, below=False))
    return factors


def _factor_triples(c: LusztigDatum, i: int, factors) -> list:
    triples = []
    for f in factors:
        e, p = f.stats(i)
        triples.append((e, p, pairing(_weight(f.c, c.n), i)))
    return triples


def tensor_epsilon(c: LusztigDatum, i: int) -> tuple[float, float]:
    """``(eps_i, phi_i)`` of the datum computed through the decomposition."""
    _check_i(c, i)
    factors = _factors(c)
    return tensor_stats(_factor_triples(c, i, factors))


def apply_tensor(c: LusztigDatum, i: int, direction: str) -> LusztigDatum | None:
    """``e_i`` / ``f_i`` through the decomposition into three factors."""
    raising = _check_direction(direction)
    _check_i(c, i)
    factors = _factors(c)
    triples = _factor_triples(c, i, factors)
    k = tensor_target(triples, raising)
    if triples[k][1] == NEG_INF:
        return None
    new = factors[k].apply(i, raising)
    if new is None:
        return None
    out: dict = {}
    for m, f in enumerate(factors):
        out.update(new if m == k else f.c)
    return LusztigDatum.from_dict(c.quiver, out)


def apply_on_nilradical(c: LusztigDatum, i: int, direction: str) -> LusztigDatum | None:
    """Operators on the subcrystal of data supported on ``(i <= r < j)``.

    Lowering returns ``None`` when the result would leave that support.
    """
    raising = _check_direction(direction)
    s = split(c)
    if s.cJ != c:
        raise ValueError("datum is not supported on the nilradical roots")
    new = _NilradicalFactor(c.as_dict(), c.n, c.quiver.sink).apply(i, raising)
    return None if new is None else LusztigDatum.from_dict(c.quiver, new)
