"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line (shown in the terminal summary and
printed immediately) with the measured runtime against its budget.
"""
import time

import pytest

from lusztig_tableaux.embedding import EmbeddingContext, c_minus, c_plus, embed, split_tableau
from lusztig_tableaux.lusztig import LusztigDatum, Quiver, positive_roots, split
from lusztig_tableaux.tableaux import UNBARRED, Alphabet, Tableau
from lusztig_tableaux.verify import suite_axioms, suite_embedding, suite_operators, suite_rsk, suite_transition

RESULTS: list[str] = []

S = Tableau.normal([[1, 1, 1, 2, 2, 3], [2, 3, 3, 5, 6], [4, 4, 4], [5, 5, 6], [6, 6]], Alphabet(UNBARRED, 6))


def record(number: int, title: str, ok: bool, seconds: float, budget: float, detail: str = "") -> None:
    status = "PASS" if ok and seconds < budget else "FAIL"
    line = f"[{number}] {status} {title} ({seconds:.2f}s, budget {budget:g}s){' ' + detail if detail else ''}"
    RESULTS.append(line)
    print(line)
    assert ok, detail
    assert seconds < budget, f"runtime {seconds:.2f}s exceeds {budget}s"


def full(c: LusztigDatum) -> dict:
    return {rt: c[rt] for rt in positive_roots(c.n)}


def expected(n: int, nonzero: dict) -> dict:
    return {rt: nonzero.get(rt, 0) for rt in positive_roots(n)}


def test_criterion_1_one_direction_example():
    t0 = time.perf_counter()
    got = full(c_plus(S))
    want = expected(6, {(1, 2): 2, (1, 3): 1, (2, 3): 2, (2, 5): 1, (2, 6): 1, (3, 4): 3,
                        (4, 5): 2, (4, 6): 1, (5, 6): 2})
    mismatches = [rt for rt in want if got[rt] != want[rt]]
    record(1, "c_plus golden example (15 coordinates)", len(want) == 15 and not mismatches,
           time.perf_counter() - t0, 1.0, f"mismatches={mismatches}")


def test_criterion_2_opposite_direction_example():
    t0 = time.perf_counter()
    want = expected(6, {(5, 6): 1, (4, 6): 1, (1, 6): 2, (4, 5): 1, (2, 5): 1, (3, 4): 2,
                        (2, 3): 1, (1, 3): 1})
    results = {d: c_minus(S, d) for d in (6, 7, 10)}
    ok = all(full(c) == want for c in results.values())
    ok = ok and len({repr(c.to_json()) for c in results.values()}) == 1
    record(2, "c_minus golden example, d in {6, 7, 10}", ok, time.perf_counter() - t0, 1.0)


def test_criterion_3_sink_three_example():
    t0 = time.perf_counter()
    q = Quiver(6, 3)
    sp = split_tableau(S, EmbeddingContext.for_tableau(S, q, 6))
    checks = {
        "S+": sp.s_plus.rows == ((5, 5, 6), (6, 6)),
        "S-": sp.s_minus.rows == ((-3, -2, -1), (-2,)),
        "M": [[sp.m[(-i, j)] for j in (4, 5, 6)] for i in (3, 2, 1)] == [[0, 1, 1], [1, 0, 0], [2, 0, 0]],
        "P": sp.p.shape.outer == (6, 3) and sp.p.rows == ((-3, -3, -2), (-3, -2, -2, -1, -1, -1)),
        "Q": sp.q.shape.outer == (6, 3) and sp.q.shape.inner == (3, 1) and sp.q.rows == ((5, 6), (4, 4, 4)),
    }
    parts = split(embed(S, q, 6))
    checks["cJ"] = full(parts.cJ) == expected(6, {(3, 5): 1, (3, 6): 1, (2, 4): 1, (1, 4): 2})
    checks["cJ1"] = full(parts.cJ1) == expected(6, {(2, 3): 1, (1, 3): 1})
    checks["cJ2"] = full(parts.cJ2) == expected(6, {(4, 5): 2, (4, 6): 1, (5, 6): 2})
    bad = [k for k, v in checks.items() if not v]
    record(3, "sink-3 golden example: split, (P, Q) and datum", not bad, time.perf_counter() - t0, 1.0,
           f"mismatched={bad}")


def _suite(number, title, suite, budget, minimum):
    res = suite()
    ok = res.passed and res.checked >= minimum
    record(number, title, ok, res.seconds, budget,
           f"checks={res.checked} failures={res.failed} {res.failures[:3]}")


def test_criterion_4_two_operator_routes():
    # 3^6 data x 3 sinks x 3 indices x 2 directions, plus 10^4 random cases
    _suite(4, "direct operators = tensor-route operators", suite_operators, 60, 3**6 * 3 * 3 * 2 + 10**4)


def test_criterion_5_embedding_is_crystal_embedding():
    _suite(5, "embedding of B(lambda) is a crystal embedding, n=4, |lambda|<=8, all sinks",
           suite_embedding, 120, 1)


def test_criterion_6_skew_rsk_bijection():
    _suite(6, "skew RSK round trips both ways", suite_rsk, 30, 2 * 10**4)


def test_criterion_7_transition_coherence():
    _suite(7, "transition identity, composition, weight, commutation", suite_transition, 60, 10**3)


def test_criterion_8_crystal_axioms():
    _suite(8, "crystal axioms and node counts", suite_axioms, 60, 1)
