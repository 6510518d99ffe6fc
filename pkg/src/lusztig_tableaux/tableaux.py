"""Young tableaux over the alphabets [n] and [n-bar], word crystals and insertion.

Letters are plain integers.  An unbarred letter ``k`` is ``k`` and a barred
letter ``k-bar`` is ``-k``.  With this encoding the integer order agrees with
both alphabet orders (``1 < 2 < ... < n`` and ``n-bar < ... < 1-bar``), so every
comparison in this module is an ordinary integer comparison.

Rotated (antinormal) tableaux are stored in display order like normal ones, but
most algorithms work in the *flipped frame*: row index counted from the bottom,
column index counted from the right.  A rotated straight shape ``lambda^pi``
occupies the cells ``{(i, j) : j < lambda_i}`` of the flipped frame, and
negating its letters gives a normal semistandard tableau.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Sequence

NEG_INF = float("-inf")

UNBARRED = "unbarred"
BARRED = "barred"


# --------------------------------------------------------------------------
# partitions and shapes
# --------------------------------------------------------------------------

def normalize_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Return ``parts`` as a tuple with trailing zeros removed.

    Raises ``ValueError`` if the sequence is not a weakly decreasing sequence
    of nonnegative integers.
    """
    parts = tuple(int(p) for p in parts)
    for k, p in enumerate(parts):
        if p < 0:
            raise ValueError(f"negative part in partition {parts}")
        if k and parts[k - 1] < p:
            raise ValueError(f"partition {parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def pad(parts: Sequence[int], length: int) -> tuple[int, ...]:
    if len(parts) > length:
        raise ValueError(f"partition {tuple(parts)} has more than {length} parts")
    return tuple(parts) + (0,) * (length - len(parts))


def partitions_up_to(size: int, max_length: int) -> list[tuple[int, ...]]:
    """All partitions of ``0..size`` with at most ``max_length`` parts."""
    out = []

    def rec(remaining, max_part, prefix):
        out.append(tuple(prefix))
        if len(prefix) == max_length:
            return
        for p in range(min(remaining, max_part), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(size, size, [])
    return sorted(out, key=lambda p: (sum(p), [-x for x in p]))


@dataclass(frozen=True)
class Partition:
    """A partition with an upper bound on its number of parts."""

    parts: tuple[int, ...]
    n_bound: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "parts", normalize_partition(self.parts))
        if self.n_bound is not None and len(self.parts) > self.n_bound:
            raise ValueError(f"partition {self.parts} has more than {self.n_bound} parts")

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, k):
        return self.parts[k] if k < len(self.parts) else 0

    def __iter__(self):
        return iter(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def contains(self, other: "Partition") -> bool:
        return all(self[k] >= p for k, p in enumerate(other.parts))


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram ``outer/inner``, or its 180-degree rotation.

    Both partitions are stored without trailing zeros.  Display rows are the
    rows of ``outer`` (top to bottom for a normal shape, bottom to top for a
    rotated one); empty rows in the middle are kept so that row numbers are
    stable.
    """

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()
    rotated: bool = False

    def __post_init__(self):
        outer = normalize_partition(self.outer)
        inner = normalize_partition(self.inner)
        if len(inner) > len(outer) or any(inner[k] > outer[k] for k in range(len(inner))):
            raise ValueError(f"inner shape {inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    def inner_at(self, k: int) -> int:
        return self.inner[k] if k < len(self.inner) else 0

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def is_straight(self) -> bool:
        return not self.inner

    def row_spans(self) -> list[tuple[int, int]]:
        """``(first column, length)`` of each display row, top to bottom."""
        R = self.num_rows
        if not self.rotated:
            return [(self.inner_at(k), self.outer[k] - self.inner_at(k)) for k in range(R)]
        W = self.outer[0] if R else 0
        spans = []
        for k in range(R):
            u = R - 1 - k
            spans.append((W - self.outer[u], self.outer[u] - self.inner_at(u)))
        return spans


# --------------------------------------------------------------------------
# alphabets and letter crystals
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Alphabet:
    """``[n]`` (kind ``unbarred``) or ``[n-bar]`` (kind ``barred``)."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in (UNBARRED, BARRED):
            raise ValueError(f"unknown alphabet kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("alphabet size must be positive")

    @property
    def barred(self) -> bool:
        return self.kind == BARRED

    def letters(self) -> list[int]:
        """Letters in increasing order."""
        if self.barred:
            return list(range(-self.n, 0))
        return list(range(1, self.n + 1))

    def __contains__(self, x: int) -> bool:
        if self.barred:
            return -self.n <= x <= -1
        return 1 <= x <= self.n

    def opposite(self) -> "Alphabet":
        return Alphabet(UNBARRED if self.barred else BARRED, self.n)

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.n}

    @classmethod
    def from_json(cls, data: dict) -> "Alphabet":
        return cls(data["kind"], int(data["n"]))


def letter_weight_index(x: int) -> tuple[int, int]:
    """``(k, sign)`` with ``wt(x) = sign * eps_k``."""
    return (x, 1) if x > 0 else (-x, -1)


def letter_stats(x: int, i: int) -> tuple[int, int]:
    """``(eps_i, phi_i)`` of a single letter.

    Barred letters follow the dual crystal: ``eps_i(i-bar) = 1`` and
    ``phi_i((i+1)-bar) = 1``.
    """
    if x > 0:
        if x == i:
            return 0, 1
        if x == i + 1:
            return 1, 0
        return 0, 0
    if x == -i:
        return 1, 0
    if x == -(i + 1):
        return 0, 1
    return 0, 0


def _letter_raise(x: int, i: int) -> int:
    # i+1 -> i ; i-bar -> (i+1)-bar
    return i if x > 0 else -(i + 1)


def _letter_lower(x: int, i: int) -> int:
    # i -> i+1 ; (i+1)-bar -> i-bar
    return i + 1 if x > 0 else -i


# --------------------------------------------------------------------------
# word crystals (signature rule)
# --------------------------------------------------------------------------

def _signature(word: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions of the uncancelled ``-`` and ``+`` letters.

    A letter with ``eps_i = 1`` is a ``-`` and one with ``phi_i = 1`` is a
    ``+``; a ``+`` cancels against a later ``-``.  This is the iterated tensor
    product rule for ``w_1 (x) ... (x) w_r``.
    """
    minus: list[int] = []
    plus: list[int] = []
    for pos, x in enumerate(word):
        e, p = letter_stats(x, i)
        if e:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
        elif p:
            plus.append(pos)
    return minus, plus


def _check_index(i: int, n: int | None) -> None:
    if i < 1 or (n is not None and i > n - 1):
        raise ValueError(f"crystal index {i} out of range for n={n}")


def word_stats(word: Sequence[int], i: int, n: int | None = None) -> tuple[int, int]:
    """``(eps_i, phi_i)`` of a word."""
    _check_index(i, n)
    minus, plus = _signature(word, i)
    return len(minus), len(plus)


def raise_word(word: Sequence[int], i: int, n: int | None = None) -> tuple[int, ...] | None:
    _check_index(i, n)
    minus, _ = _signature(word, i)
    if not minus:
        return None
    pos = minus[-1]
    w = list(word)
    w[pos] = _letter_raise(w[pos], i)
    return tuple(w)


def lower_word(word: Sequence[int], i: int, n: int | None = None) -> tuple[int, ...] | None:
    _check_index(i, n)
    _, plus = _signature(word, i)
    if not plus:
        return None
    pos = plus[0]
    w = list(word)
    w[pos] = _letter_lower(w[pos], i)
    return tuple(w)


def word_apply(word: Sequence[int], i: int, direction: str, n: int | None = None):
    """Apply ``e_i`` (``direction='raise'``) or ``f_i`` (``'lower'``) to a word."""
    if direction == "raise":
        return raise_word(word, i, n)
    if direction == "lower":
        return lower_word(word, i, n)
    raise ValueError(f"direction must be 'raise' or 'lower', not {direction!r}")


def word_weight(word: Iterable[int], n: int) -> tuple[int, ...]:
    wt = [0] * n
    for x in word:
        k, s = letter_weight_index(x)
        wt[k - 1] += s
    return tuple(wt)


# --------------------------------------------------------------------------
# tableaux
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Tableau:
    """A filling of a (possibly rotated, possibly skew) diagram.

    ``rows`` lists the display rows top to bottom, each left to right.
    """

    shape: SkewShape
    alphabet: Alphabet
    rows: tuple[tuple[int, ...], ...]
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        spans = self.shape.row_spans()
        if len(rows) != len(spans) or any(len(r) != s[1] for r, s in zip(rows, spans)):
            raise ValueError(
                f"row lengths {[len(r) for r in rows]} do not match shape {self.shape}")
        object.__setattr__(self, "_hash", hash((self.shape, self.alphabet, rows)))

    def __hash__(self):
        return self._hash

    # -- constructors ------------------------------------------------------

    @classmethod
    def normal(cls, rows: Sequence[Sequence[int]], alphabet: Alphabet) -> "Tableau":
        rows = [tuple(r) for r in rows]
        while rows and not rows[-1]:
            rows.pop()
        return cls(SkewShape(tuple(len(r) for r in rows)), alphabet, tuple(rows))

    @classmethod
    def antinormal(cls, rows: Sequence[Sequence[int]], alphabet: Alphabet) -> "Tableau":
        """Rotated straight shape, rows given top to bottom (right-justified)."""
        rows = [tuple(r) for r in rows]
        while rows and not rows[0]:
            rows.pop(0)
        return cls(SkewShape(tuple(len(r) for r in reversed(rows)), (), True), alphabet, tuple(rows))

    @classmethod
    def from_flipped(cls, outer: Sequence[int], inner: Sequence[int],
                     frows: Sequence[Sequence[int]], alphabet: Alphabet) -> "Tableau":
        """Build a rotated tableau from flipped-frame rows.

        ``frows[i]`` holds the letters of flipped row ``i`` (from the bottom),
        ordered by flipped column (right to left in display).
        """
        shape = SkewShape(tuple(outer), tuple(inner), True)
        R = shape.num_rows
        frows = list(frows) + [()] * (R - len(frows))
        rows = tuple(tuple(reversed(frows[R - 1 - k])) for k in range(R))
        return cls(shape, alphabet, rows)

    def flipped_rows(self) -> list[tuple[int, ...]]:
        """Flipped-frame rows of a rotated tableau (see module docstring)."""
        if not self.shape.rotated:
            raise ValueError("flipped_rows is defined for rotated tableaux")
        R = self.shape.num_rows
        return [tuple(reversed(self.rows[R - 1 - i])) for i in range(R)]

    # -- basic data --------------------------------------------------------

    @property
    def n(self) -> int:
        return self.alphabet.n

    @property
    def rotated(self) -> bool:
        return self.shape.rotated

    def cells(self) -> dict[tuple[int, int], int]:
        """Display coordinates ``(row, column)`` -> letter."""
        out = {}
        for k, ((start, _), row) in enumerate(zip(self.shape.row_spans(), self.rows)):
            for c, x in enumerate(row):
                out[(k, start + c)] = x
        return out

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def weight(self) -> tuple[int, ...]:
        return word_weight(self.reading_word(), self.n)

    def is_semistandard(self) -> bool:
        cells = self.cells()
        for (k, c), x in cells.items():
            if x not in self.alphabet:
                return False
            right = cells.get((k, c + 1))
            if right is not None and right < x:
                return False
            below = cells.get((k + 1, c))
            if below is not None and below <= x:
                return False
        return True

    def validate(self) -> "Tableau":
        if not self.is_semistandard():
            raise ValueError(f"tableau is not semistandard: {self.rows}")
        return self

    def reading_word(self) -> tuple[int, ...]:
        """Rows top to bottom, each read right to left."""
        return tuple(x for row in self.rows for x in reversed(row))

    def with_reading_word(self, word: Sequence[int]) -> "Tableau":
        """Refill the same cells from a reading word."""
        rows = []
        pos = 0
        for row in self.rows:
            m = len(row)
            rows.append(tuple(reversed(word[pos:pos + m])))
            pos += m
        return Tableau(self.shape, self.alphabet, tuple(rows))

    # -- crystal -----------------------------------------------------------

    def stats(self, i: int) -> tuple[int, int]:
        return word_stats(self.reading_word(), i, self.n)

    def raise_(self, i: int) -> "Tableau | None":
        w = raise_word(self.reading_word(), i, self.n)
        return None if w is None else self.with_reading_word(w)

    def lower(self, i: int) -> "Tableau | None":
        w = lower_word(self.reading_word(), i, self.n)
        return None if w is None else self.with_reading_word(w)

    def apply(self, i: int, direction: str) -> "Tableau | None":
        w = word_apply(self.reading_word(), i, direction, self.n)
        return None if w is None else self.with_reading_word(w)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "alphabet": self.alphabet.to_json(),
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "rotated": self.shape.rotated,
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        alphabet = Alphabet.from_json(data["alphabet"])
        rows = [tuple(int(x) for x in r) for r in data["rows"]]
        if "outer" in data:
            shape = SkewShape(tuple(data["outer"]), tuple(data.get("inner", ())),
                              bool(data.get("rotated", False)))
            # empty rows beyond the shape (leading for rotated, trailing
            # otherwise) may be included
            drop = 0 if shape.rotated else -1
            while len(rows) > shape.num_rows and not rows[drop]:
                rows.pop(drop)
            return cls(shape, alphabet, tuple(rows)).validate()
        if data.get("rotated"):
            return cls.antinormal(rows, alphabet).validate()
        return cls.normal(rows, alphabet).validate()

    def __str__(self):
        def fmt(x):
            return f"{-x}~" if x < 0 else str(x)

        spans = self.shape.row_spans()
        lines = []
        for (start, _), row in zip(spans, self.rows):
            lines.append("   " * start + " ".join(f"{fmt(x):>2}" for x in row))
        return "\n".join(lines)


def highest_weight_tableau(shape: Sequence[int], alphabet: Alphabet) -> Tableau:
    """Row ``k`` filled with the ``k``-th smallest letter of the alphabet."""
    letters = alphabet.letters()
    lam = normalize_partition(shape)
    return Tableau.normal([[letters[k]] * p for k, p in enumerate(lam)], alphabet)


# --------------------------------------------------------------------------
# insertion, rectification
# --------------------------------------------------------------------------

def _rows_to_cols(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    width = len(rows[0]) if rows else 0
    return [[row[j] for row in rows if len(row) > j] for j in range(width)]


def _cols_to_rows(cols: Sequence[Sequence[int]]) -> list[list[int]]:
    height = len(cols[0]) if cols else 0
    return [[col[i] for col in cols if len(col) > i] for i in range(height)]


def _column_insert(cols: list[list[int]], x: int) -> tuple[int, int]:
    """Schensted column insertion into a normal tableau stored by columns.

    ``x`` bumps the smallest entry ``>= x`` of each column; it is appended
    when there is none.  Returns the new cell ``(row, column)``.
    """
    j = 0
    while True:
        if j == len(cols):
            cols.append([x])
            return 0, j
        col = cols[j]
        idx = bisect_left(col, x)
        if idx == len(col):
            col.append(x)
            return idx, j
        col[idx], x = x, col[idx]
        j += 1


def _column_uninsert(cols: list[list[int]], j: int) -> int:
    """Undo a column insertion whose new cell is the bottom of column ``j``."""
    y = cols[j].pop()
    if not cols[j]:
        if j != len(cols) - 1:
            raise ValueError("cell is not a corner")
        cols.pop()
    for jj in range(j - 1, -1, -1):
        col = cols[jj]
        idx = bisect_right(col, y) - 1
        if idx < 0:
            raise ValueError("reverse bumping failed")
        col[idx], y = y, col[idx]
    return y


def _row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Schensted row insertion; returns the new cell."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return i, 0
        row = rows[i]
        idx = bisect_right(row, x)
        if idx == len(row):
            row.append(x)
            return i, idx
        row[idx], x = x, row[idx]
        i += 1


def _rotated_to_cols(T: Tableau) -> list[list[int]]:
    """Columns of the negated flipped-frame tableau (a normal tableau)."""
    return _rows_to_cols([[-x for x in r] for r in T.flipped_rows()])


def _rotated_from_cols(cols: list[list[int]], alphabet: Alphabet) -> Tableau:
    frows = [[-x for x in r] for r in _cols_to_rows(cols)]
    return Tableau.from_flipped([len(r) for r in frows], (), frows, alphabet)


def _require_rotated_straight(T: Tableau) -> None:
    if not (T.shape.rotated and T.shape.is_straight()):
        raise ValueError("expected a rotated tableau of straight shape")


def column_insert(T: Tableau, a: int) -> Tableau:
    """``T <- a``: reverse column insertion into a rotated tableau.

    The letter enters the rightmost column and bumps upward/leftward; the
    result has one more cell, added at a corner of the rotated shape.
    """
    _require_rotated_straight(T)
    if a not in T.alphabet:
        raise ValueError(f"letter {a} not in {T.alphabet}")
    cols = _rotated_to_cols(T)
    _column_insert(cols, -a)
    return _rotated_from_cols(cols, T.alphabet)


def rectify(T: Tableau) -> Tableau:
    """The normal tableau Knuth equivalent to ``T``.

    Row-inserts the reading word of ``T`` backwards (that is, rows bottom to
    top, each left to right).
    """
    rows: list[list[int]] = []
    for x in reversed(T.reading_word()):
        _row_insert(rows, x)
    return Tableau.normal(rows, T.alphabet)


def antinormalize(S: Tableau) -> Tableau:
    """Inverse of :func:`rectify` on straight shapes.

    With ``w(S) = a_1 ... a_r`` this is ``((a_r <- a_{r-1}) <- ...) <- a_1``.
    """
    if S.shape.rotated or not S.shape.is_straight():
        raise ValueError("antinormalize expects a normal tableau of straight shape")
    cols: list[list[int]] = []
    for x in reversed(S.reading_word()):
        _column_insert(cols, -x)
    return _rotated_from_cols(cols, S.alphabet)


# --------------------------------------------------------------------------
# column complementation sigma^{-d}
# --------------------------------------------------------------------------

def sigma_complement(T: Tableau, d: int) -> Tableau:
    """Column-wise complement inside the ``n x d`` box, exchanging alphabets.

    A normal tableau of shape ``lambda`` goes to a rotated tableau of shape
    ``(d^n)/lambda``; a rotated straight tableau fitting the box goes back to
    a normal one.  The two directions are mutually inverse.
    """
    n = T.n
    target = T.alphabet.opposite()
    letters = target.letters()
    if not T.shape.rotated:
        if not T.shape.is_straight():
            raise ValueError("sigma_complement expects a straight shape")
        lam = T.shape.outer
        if len(lam) > n:
            raise ValueError(f"shape {lam} has more than {n} rows")
        if lam and d < lam[0]:
            raise ValueError(f"d={d} is smaller than the first row {lam[0]}")
        cols = _rows_to_cols(T.rows) + [[] for _ in range(d - (lam[0] if lam else 0))]
        # flipped frame: box column c -> flipped column d-1-c; the complement
        # column is bottom-justified, so its largest letter sits in flipped row 0
        fcols = []
        for c in range(d - 1, -1, -1):
            taken = {-x for x in cols[c]}
            comp = [x for x in letters if x not in taken]
            fcols.append(list(reversed(comp)))
        frows = _cols_to_rows_ragged(fcols)
        return Tableau.from_flipped([len(r) for r in frows], (), frows, target)
    _require_rotated_straight(T)
    nu = T.shape.outer
    if len(nu) > n:
        raise ValueError(f"rotated shape {nu} has more than {n} rows")
    if nu and d < nu[0]:
        raise ValueError(f"d={d} is smaller than the rotated width {nu[0]}")
    fcols = _rows_to_cols(T.flipped_rows())
    fcols += [[] for _ in range(d - len(fcols))]
    cols = []
    for c in range(d):
        taken = {-x for x in fcols[d - 1 - c]}
        cols.append([x for x in letters if x not in taken])
    rows = _cols_to_rows_ragged(cols)
    return Tableau.normal(rows, target)


def _cols_to_rows_ragged(cols: Sequence[Sequence[int]]) -> list[list[int]]:
    """Like ``_cols_to_rows`` but column lengths are given in any order."""
    height = max((len(c) for c in cols), default=0)
    rows = []
    for i in range(height):
        row = []
        for col in cols:
            if len(col) > i:
                row.append(col[i])
            else:
                break
        rows.append(row)
    return rows
