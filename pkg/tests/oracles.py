"""Independent reference implementations used only by the tests."""
from __future__ import annotations

from fractions import Fraction
from math import comb


def jdt_rectify(cells: dict[tuple[int, int], int]) -> list[list[int]]:
    """Rectify a filled skew diagram (``(row, col) -> letter``) by jeu de taquin.

    ``cells`` must form a skew shape in English coordinates.  Letters compare as
    integers.
    """
    cells = dict(cells)
    if not cells:
        return []
    rows = max(r for r, _ in cells) + 1
    outer = [max((c + 1 for (r, c) in cells if r == k), default=0) for k in range(rows)]
    inner = [min((c for (r, c) in cells if r == k), default=outer[k]) for k in range(rows)]
    while any(inner):
        # an inner corner: the last cell of some inner row with nothing inner below it
        k = max(r for r in range(rows) if inner[r] > 0 and (r + 1 == rows or inner[r + 1] < inner[r]))
        hole = (k, inner[k] - 1)
        inner[k] -= 1
        while True:
            r, c = hole
            below, right = cells.get((r + 1, c)), cells.get((r, c + 1))
            if below is None and right is None:
                break
            if right is None or (below is not None and below <= right):
                cells[hole] = below
                hole = (r + 1, c)
            else:
                cells[hole] = right
                hole = (r, c + 1)
            del cells[hole]
    out: list[list[int]] = []
    for (r, c), x in sorted(cells.items()):
        while len(out) <= r:
            out.append([])
        out[r].append(x)
    return out


def hook_content_count(shape, n: int) -> int:
    """Number of semistandard tableaux of ``shape`` with entries in ``1..n``."""
    shape = [p for p in shape if p]
    conj = [sum(1 for p in shape if p > c) for c in range(shape[0])] if shape else []
    num = Fraction(1)
    for r, p in enumerate(shape):
        for c in range(p):
            hook = (p - c) + (conj[c] - r) - 1
            num *= Fraction(n + c - r, hook)
    assert num.denominator == 1
    return int(num)


def count_data(n: int, depth: int) -> int:
    """Lusztig data with coordinate sum at most ``depth``."""
    N = n * (n - 1) // 2
    return comb(N + depth, N)


def _letter(x: int, i: int) -> tuple[int, int]:
    # (eps, phi) of a letter; negative integers are barred letters of the dual crystal
    if x == i or x == -(i + 1):
        return 0, 1
    if x == i + 1 or x == -i:
        return 1, 0
    return 0, 0


def word_stats_fold(word, i: int) -> tuple[int, int]:
    """(eps, phi) of ``w_1 (x) ... (x) w_r`` by folding the two-factor rule."""
    eps, phi = 0, 0
    for x in word:
        e2, p2 = _letter(x, i)
        pair = phi - eps
        eps, phi = max(eps, e2 - pair), max(phi + (p2 - e2), p2)
    return eps, phi


def word_lower_fold(word, i: int):
    """Lower by recursing on ``(w_1 ... w_{r-1}) (x) w_r``."""
    if not word:
        return None
    prefix, last = list(word[:-1]), word[-1]
    _, phi_left = word_stats_fold(prefix, i)
    eps_right, phi_right = _letter(last, i)
    if phi_left > eps_right:
        new = word_lower_fold(prefix, i)
        return None if new is None else tuple(new) + (last,)
    if phi_right == 0:
        return None
    return tuple(prefix) + ((i + 1) if last > 0 else -i,)


def word_raise_fold(word, i: int):
    if not word:
        return None
    prefix, last = list(word[:-1]), word[-1]
    _, phi_left = word_stats_fold(prefix, i)
    eps_right, _ = _letter(last, i)
    if phi_left >= eps_right:
        new = word_raise_fold(prefix, i)
        return None if new is None else tuple(new) + (last,)
    return tuple(prefix) + (i if last > 0 else -(i + 1),)


def is_semistandard_cells(cells: dict[tuple[int, int], int]) -> bool:
    for (r, c), x in cells.items():
        right, below = cells.get((r, c + 1)), cells.get((r + 1, c))
        if right is not None and right < x:
            return False
        if below is not None and below <= x:
            return False
    return True
