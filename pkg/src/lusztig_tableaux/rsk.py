"""Biwords, multiplicity matrices and the skew RSK correspondence.

The skew correspondence ``kappa`` takes a rotated tableau ``T`` of shape
``lambda^pi`` and a matrix ``M`` and column-inserts the rearranged top word of
``M`` into ``T``, recording the bottom letters in the new cells.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .tableaux import (
    Alphabet,
    Tableau,
    _column_insert,
    _column_uninsert,
    _require_rotated_straight,
    _rotated_from_cols,
    _rotated_to_cols,
    word_weight,
)


@dataclass(frozen=True)
class BiwordMatrix:
    """A finitely supported matrix of nonnegative counts indexed by letters."""

    row_alphabet: Alphabet
    col_alphabet: Alphabet
    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (a, b), m in dict(self.entries).items():
            if m < 0:
                raise ValueError(f"negative count at {(a, b)}")
            if a not in self.row_alphabet or b not in self.col_alphabet:
                raise ValueError(f"index {(a, b)} outside the alphabets")
            if m:
                clean[(a, b)] = int(m)
        object.__setattr__(self, "entries", clean)

    def __hash__(self):
        return hash((self.row_alphabet, self.col_alphabet, frozenset(self.entries.items())))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def row_weight(self) -> tuple[int, ...]:
        counts: Counter = Counter()
        for (a, _), m in self.entries.items():
            counts[a] += m
        return word_weight(counts.elements(), self.row_alphabet.n)

    def col_weight(self) -> tuple[int, ...]:
        counts: Counter = Counter()
        for (_, b), m in self.entries.items():
            counts[b] += m
        return word_weight(counts.elements(), self.col_alphabet.n)

    def to_rows(self) -> list[list[int]]:
        """Dense form, rows and columns in alphabet order."""
        return [[self[(a, b)] for b in self.col_alphabet.letters()]
                for a in self.row_alphabet.letters()]

    def to_json(self) -> dict:
        return {
            "rows": self.row_alphabet.to_json(),
            "cols": self.col_alphabet.to_json(),
            "entries": [[a, b, m] for (a, b), m in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BiwordMatrix":
        return cls(Alphabet.from_json(data["rows"]), Alphabet.from_json(data["cols"]),
                   {(int(a), int(b)): int(m) for a, b, m in data["entries"]})


@dataclass(frozen=True)
class Biword:
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError("biword rows have different lengths")

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.top, self.bottom))

    def is_sorted(self) -> bool:
        """Pairs increase in the order ``(a, b) < (c, d)`` iff ``a < c`` or
        ``a == c`` and ``b > d`` (ties allowed)."""
        keys = [(a, -b) for a, b in self.pairs()]
        return all(keys[k] <= keys[k + 1] for k in range(len(keys) - 1))


def _biword_from_pairs(pairs: Iterable[tuple[int, int]]) -> Biword:
    pairs = list(pairs)
    return Biword(tuple(a for a, _ in pairs), tuple(b for _, b in pairs))


def biword_of(M: BiwordMatrix) -> Biword:
    """The sorted biword whose multiplicity matrix is ``M``."""
    pairs = sorted(Counter(M.entries).elements(), key=lambda p: (p[0], -p[1]))
    return _biword_from_pairs(pairs)


def matrix_of(bw: Biword, row_alphabet: Alphabet, col_alphabet: Alphabet) -> BiwordMatrix:
    return BiwordMatrix(row_alphabet, col_alphabet, Counter(bw.pairs()))


def tau_transpose(bw: Biword) -> Biword:
    """``(a, b) -> (a^tau, b^tau)``.

    Rearranges the pairs so that ``(b^tau, a^tau)`` is sorted as a biword
    over ``B x A``: bottom letters increasing, top letters decreasing within
    ties.  The multiplicity matrix is unchanged, and applying the map to a
    sorted biword and then re-sorting returns the original.
    """
    pairs = sorted(bw.pairs(), key=lambda p: (p[1], -p[0]))
    return _biword_from_pairs(pairs)


def sort_biword(bw: Biword) -> Biword:
    return _biword_from_pairs(sorted(bw.pairs(), key=lambda p: (p[0], -p[1])))


# --------------------------------------------------------------------------
# skew RSK
# --------------------------------------------------------------------------

def skew_rsk(T: Tableau, M: BiwordMatrix) -> tuple[Tableau, Tableau]:
    """``kappa(T, M) = (P, Q)``.

    ``a^tau_r, ..., a^tau_1`` are column-inserted into ``T`` in that order and
    ``b^tau_k`` is written into the cell created by ``a^tau_k``.  ``P`` has
    rotated shape ``mu^pi`` and ``Q`` rotated skew shape ``(mu/lambda)^pi``.
    """
    _require_rotated_straight(T)
    if M.row_alphabet != T.alphabet:
        raise ValueError("matrix rows must use the tableau alphabet")
    lam = T.shape.outer
    tw = tau_transpose(biword_of(M))
    cols = _rotated_to_cols(T)
    recorded: dict[tuple[int, int], int] = {}
    for a, b in zip(reversed(tw.top), reversed(tw.bottom)):
        recorded[_column_insert(cols, -a)] = b
    P = _rotated_from_cols(cols, T.alphabet)
    mu = P.shape.outer
    frows = []
    for i in range(len(mu)):
        start = lam[i] if i < len(lam) else 0
        frows.append([recorded[(i, j)] for j in range(start, mu[i])])
    Q = Tableau.from_flipped(mu, lam, frows, M.col_alphabet)
    return P, Q


def skew_rsk_inverse(P: Tableau, Q: Tableau) -> tuple[Tableau, BiwordMatrix]:
    """``kappa^{-1}(P, Q) = (T, M)``.

    Cells of ``Q`` are emptied in the reverse of the insertion order: smallest
    entry first, and among equal entries the one farthest left in display
    (equal letters are created left-to-right in the flipped frame).
    """
    _require_rotated_straight(P)
    if not Q.shape.rotated:
        raise ValueError("Q must be a rotated skew tableau")
    if Q.shape.outer != P.shape.outer:
        raise ValueError(f"outer shape of Q {Q.shape.outer} differs from shape of P {P.shape.outer}")
    if not P.is_semistandard() or not Q.is_semistandard():
        raise ValueError("P and Q must be semistandard")
    cells = []
    for i, row in enumerate(Q.flipped_rows()):
        start = Q.shape.inner_at(i)
        for k, b in enumerate(row):
            cells.append((b, -(start + k), i))
    cells.sort()
    cols = _rotated_to_cols(P)
    pairs = []
    for b, negj, i in cells:
        j = -negj
        if j >= len(cols) or len(cols[j]) != i + 1:
            raise ValueError(f"recording cell {(i, j)} is not a corner of P")
        pairs.append((-_column_uninsert(cols, j), b))
    T = _rotated_from_cols(cols, P.alphabet)
    if T.shape.outer != Q.shape.inner:
        raise ValueError("inner shape of Q does not match the recovered tableau")
    return T, BiwordMatrix(P.alphabet, Q.alphabet, Counter(pairs))
