"""Property suites shared by the ``verify`` command and the acceptance tests.

Each suite returns a :class:`SuiteResult`; ``failures`` holds a bounded
sample of counterexamples.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .crystalgraph import (
    DatumFamily,
    TableauFamily,
    check_axioms,
    check_morphism,
    highest_weight_graph,
    infinity_graph,
    semistandard_tableaux,
)
from .embedding import embed, embedding_weight_shift, transition
from .lusztig import LusztigDatum, Quiver, apply_direct, apply_tensor
from .rsk import BiwordMatrix, skew_rsk, skew_rsk_inverse
from .tableaux import (
    BARRED,
    UNBARRED,
    Alphabet,
    Tableau,
    antinormalize,
    partitions_up_to,
    rectify,
)

MAX_REPORTED = 10


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    failed: int = 0
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def fail(self, message: str) -> None:
        self.failed += 1
        if len(self.failures) < MAX_REPORTED:
            self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checks, {self.failed} failures, {self.seconds:.2f}s"


def _timed(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(name)
    t0 = time.perf_counter()
    body(res)
    res.seconds = time.perf_counter() - t0
    return res


# --------------------------------------------------------------------------
# random instances
# --------------------------------------------------------------------------

def random_datum(rng: random.Random, quiver: Quiver, max_entry: int) -> LusztigDatum:
    N = quiver.n * (quiver.n - 1) // 2
    return LusztigDatum(quiver, tuple(rng.randint(0, max_entry) for _ in range(N)))


def random_normal_tableau(rng: random.Random, alphabet: Alphabet, length: int) -> Tableau:
    word = [rng.choice(alphabet.letters()) for _ in range(length)]
    # rectify only reads the reading word, so any one-row carrier will do
    return rectify(Tableau.normal([word[::-1]], alphabet) if word else Tableau.normal([], alphabet))


def random_rotated_tableau(rng: random.Random, alphabet: Alphabet, length: int) -> Tableau:
    return antinormalize(random_normal_tableau(rng, alphabet, length))


def random_matrix(rng: random.Random, rows: Alphabet, cols: Alphabet, total: int) -> BiwordMatrix:
    entries: dict = {}
    for _ in range(total):
        key = (rng.choice(rows.letters()), rng.choice(cols.letters()))
        entries[key] = entries.get(key, 0) + 1
    return BiwordMatrix(rows, cols, entries)


def random_rotated_skew(rng: random.Random, outer, inner, alphabet: Alphabet) -> Tableau | None:
    """A random semistandard filling of the rotated skew shape, or ``None``
    if some column is taller than the alphabet."""
    outer = list(outer)
    inner = list(inner) + [0] * (len(outer) - len(inner))
    m = alphabet.n
    # fill the flipped frame as a normal skew tableau in 1..m, then reverse values
    height = {}
    for i in range(len(outer)):
        for j in range(inner[i], outer[i]):
            height[j] = height.get(j, 0) + 1
    if any(h > m for h in height.values()):
        return None
    fill: dict = {}
    for i in range(len(outer)):
        for j in range(inner[i], outer[i]):
            below = sum(1 for k in range(i + 1, len(outer)) if inner[k] <= j < outer[k])
            lo = max(fill.get((i, j - 1), 1), fill.get((i - 1, j), 0) + 1)
            hi = m - below
            fill[(i, j)] = rng.randint(lo, hi)
    frows = [[m + 1 - fill[(i, j)] for j in range(inner[i], outer[i])] for i in range(len(outer))]
    return Tableau.from_flipped(outer, inner, frows, alphabet)


# --------------------------------------------------------------------------
# suites
# --------------------------------------------------------------------------

def suite_operators(exhaustive_n: int = 4, max_entry: int = 2, samples: int = 10_000,
                max_n: int = 7, sample_entry: int = 4, seed: int = 0) -> SuiteResult:
    """Direct operators agree with the tensor-route operators."""

    def body(res: SuiteResult):
        n = exhaustive_n
        N = n * (n - 1) // 2
        for r in range(1, n):
            q = Quiver(n, r)
            for counts in itertools.product(range(max_entry + 1), repeat=N):
                c = LusztigDatum(q, counts)
                for i in range(1, n):
                    for d in ("raise", "lower"):
                        res.checked += 1
                        a, b = apply_direct(c, i, d), apply_tensor(c, i, d)
                        if a != b:
                            res.fail(f"{c} {d}_{i}: direct {a} tensor {b}")
        rng = random.Random(seed)
        for _ in range(samples):
            n = rng.randint(2, max_n)
            q = Quiver(n, rng.randint(1, n - 1))
            c = random_datum(rng, q, sample_entry)
            i = rng.randint(1, n - 1)
            d = rng.choice(("raise", "lower"))
            res.checked += 1
            a, b = apply_direct(c, i, d), apply_tensor(c, i, d)
            if a != b:
                res.fail(f"{c} {d}_{i}: direct {a} tensor {b}")

    return _timed("operators: direct = tensor route", body)


def suite_embedding(n: int = 4, max_size: int = 8) -> SuiteResult:
    """Embedding of every ``B(lambda)`` is a crystal embedding, for every sink."""

    def body(res: SuiteResult):
        fam = TableauFamily(n)
        for lam in partitions_up_to(max_size, n):
            g = highest_weight_graph(lam, n)
            shift = embedding_weight_shift(lam, n)
            for r in range(1, n):
                q = Quiver(n, r)
                res.checked += len(g)
                for v in check_morphism(g, fam, DatumFamily(q), lambda S, q=q: embed(S, q), shift):
                    res.fail(f"lambda={lam} sink={r}: {v}")

    return _timed("embedding: crystal embedding of B(lambda)", body)


def _remove_corners(rng: random.Random, mu, k: int) -> tuple[int, ...]:
    lam = list(mu)
    for _ in range(k):
        corners = [i for i in range(len(lam)) if lam[i] and (i + 1 == len(lam) or lam[i + 1] < lam[i])]
        if not corners:
            break
        lam[rng.choice(corners)] -= 1
    return tuple(lam)


def suite_rsk(samples: int = 10_000, max_alphabet: int = 5, max_insertions: int = 8,
              seed: int = 0) -> SuiteResult:
    """Skew RSK and its inverse are mutually inverse, ``samples`` times each way."""

    def body(res: SuiteResult):
        rng = random.Random(seed)
        for _ in range(samples):
            A = Alphabet(BARRED, rng.randint(1, max_alphabet))
            B = Alphabet(UNBARRED, rng.randint(1, max_alphabet))
            T = random_rotated_tableau(rng, A, rng.randint(0, 8))
            M = random_matrix(rng, A, B, rng.randint(0, max_insertions))
            res.checked += 1
            P, Q = skew_rsk(T, M)
            if skew_rsk_inverse(P, Q) != (T, M):
                res.fail(f"inverse(kappa) fails on T={T.rows} M={M.entries}")
        done = 0
        while done < samples:
            # an independently drawn pair: P of shape mu, Q filling mu/lambda
            A = Alphabet(BARRED, rng.randint(1, max_alphabet))
            B = Alphabet(UNBARRED, rng.randint(1, max_alphabet))
            P = random_rotated_tableau(rng, A, rng.randint(0, 12))
            mu = P.shape.outer
            lam = _remove_corners(rng, mu, rng.randint(0, max_insertions))
            Q = random_rotated_skew(rng, mu, lam, B)
            if Q is None:
                continue
            done += 1
            res.checked += 1
            try:
                back = skew_rsk(*skew_rsk_inverse(P, Q))
            except ValueError as exc:
                res.fail(f"inverse rejects P={P.rows} Q={Q.rows}: {exc}")
                continue
            if back != (P, Q):
                res.fail(f"kappa(inverse) fails on P={P.rows} Q={Q.rows}")

    return _timed("rsk round trips", body)


def suite_transition(samples: int = 1000, max_n: int = 5, max_entry: int = 3,
                     seed: int = 0) -> SuiteResult:
    """Identity, composition, weight and operator commutation of transitions,
    over every triple of sinks for each sampled datum."""

    def body(res: SuiteResult):
        rng = random.Random(seed)
        for _ in range(samples):
            n = rng.randint(2, max_n)
            quivers = [Quiver(n, r) for r in range(1, n)]
            q1 = rng.choice(quivers)
            c = random_datum(rng, q1, max_entry)
            i = rng.randint(1, n - 1)
            res.checked += 1
            if transition(c, q1) != c:
                res.fail(f"identity fails on {c}")
            direct = {q: transition(c, q) for q in quivers}
            moved = {d: apply_direct(c, i, d) for d in ("raise", "lower")}
            for q2, c2 in direct.items():
                if c2.weight() != c.weight():
                    res.fail(f"weight changes on {c} -> {q2}")
                for q3 in quivers:
                    if transition(c2, q3) != direct[q3]:
                        res.fail(f"composition {q1.sink}->{q2.sink}->{q3.sink} fails on {c}")
                for d, x in moved.items():
                    y = apply_direct(c2, i, d)
                    if (x is None) != (y is None) or (x is not None and transition(x, q2) != y):
                        res.fail(f"{d}_{i} does not commute with transition {q2} on {c}")

    return _timed("transition coherence", body)


def suite_axioms(n: int = 4, max_size: int = 8, depth: int = 4, max_rank: int = 4) -> SuiteResult:
    """Crystal axioms on ``B(lambda)`` and truncated ``B(infinity)`` graphs,
    plus node counts against direct enumeration."""

    def body(res: SuiteResult):
        fam = TableauFamily(n)
        for lam in partitions_up_to(max_size, n):
            g = highest_weight_graph(lam, n)
            res.checked += len(g)
            for v in check_axioms(g, fam):
                res.fail(f"lambda={lam}: {v}")
            expected = sum(1 for _ in semistandard_tableaux(lam, n))
            if expected != len(g):
                res.fail(f"lambda={lam}: {len(g)} nodes, {expected} tableaux")
        for m in range(2, max_rank + 1):
            for r in range(1, m):
                for route in ("direct", "tensor"):
                    q = Quiver(m, r)
                    g = infinity_graph(q, depth, route)
                    res.checked += len(g)
                    for v in check_axioms(g, DatumFamily(q, route)):
                        res.fail(f"B_inf {q} {route}: {v}")

    return _timed("crystal axioms", body)


SUITES = {
    "operators": suite_operators,
    "embedding": suite_embedding,
    "rsk": suite_rsk,
    "transition": suite_transition,
    "axioms": suite_axioms,
}


# older short names accepted by the command line
ALIASES = {"thm44": "operators", "thm54": "embedding"}


def run_suites(names) -> list[SuiteResult]:
    if "all" in names:
        names = list(SUITES)
    names = [ALIASES.get(x, x) for x in names]
    unknown = [x for x in names if x not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[x]() for x in names]
