"""Grid verification of the formula paths against the definitional oracles.

Four suites: oracle equivalence, multiplicativity, conservation and
fast-path agreement. Each returns a SuiteResult whose counterexample (if
any) is the first failure in canonical grid order, so output is identical
regardless of how many workers ran the sweep.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .counting import (
    CountQuery,
    brauer_count,
    global_count,
    linear_count,
    quadratic_count,
    yang_zhao_count,
)
from .oracle import oracle_global_count_dp
from .poly import IntPolynomial, LinearCoprime, SplitQuadratic, classify, exunit_set

__all__ = [
    "DEFAULT_POLYNOMIALS",
    "SuiteResult",
    "oracle_equivalence_suite",
    "multiplicativity_suite",
    "conservation_suite",
    "fast_path_suite",
    "yang_zhao_agreement",
    "run_all",
]

# The fixed polynomial family used by the default sweeps, as coefficient text.
DEFAULT_POLYNOMIALS = (
    "0,1",        # x
    "1,1",        # x + 1
    "3,2",        # 2x + 3
    "0,1,-1",     # x - x**2
    "1,0,1",      # x**2 + 1
    "1,1,1",      # x**2 + x + 1
    "1,1,0,1",    # x**3 + x + 1
    "1,5,6",      # 6x**2 + 5x + 1
)

EXCEPTIONAL_UNIT_POLY = "0,1,-1"


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    cases: int
    counterexample: dict | None

    @staticmethod
    def ok(name: str, cases: int) -> "SuiteResult":
        return SuiteResult(name, True, cases, None)

    @staticmethod
    def fail(name: str, cases: int, counterexample: dict) -> "SuiteResult":
        return SuiteResult(name, False, cases, counterexample)


def _mismatch(poly: str, k: int, c: int, n: int, lhs: int, rhs: int, compared: str) -> dict:
    return {"poly": poly, "k": k, "c": c, "n": n,
            "lhs": lhs, "rhs": rhs, "compared": compared}


def _oracle_equivalence_task(args: tuple[str, int, int, bool]) -> tuple[int, dict | None]:
    poly_text, k, n, fault = args
    f = IntPolynomial.parse(poly_text)
    cases = 0
    for c in range(n):
        formula = global_count(CountQuery(f, k, c, n)).value
        if fault and c == 0:
            formula += 1
        oracle = oracle_global_count_dp(CountQuery(f, k, c, n))
        cases += 1
        if formula != oracle:
            return cases, _mismatch(poly_text, k, c, n, formula, oracle,
                                    "global_count vs oracle_global_count_dp")
    return cases, None


def oracle_equivalence_suite(polys: Sequence[str], k_values: Sequence[int], n_max: int,
                             workers: int = 1, inject_fault: bool = False) -> SuiteResult:
    """global_count must equal the convolution oracle on the whole grid.

    inject_fault perturbs exactly one formula value (the first grid point);
    it exists so the harness can prove it would notice a wrong count.
    """
    tasks = [(poly, k, n, inject_fault and i == 0)
             for i, (poly, k, n) in enumerate(
                 (poly, k, n)
                 for poly in polys for k in k_values for n in range(1, n_max + 1))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_oracle_equivalence_task, tasks,
                                     chunksize=max(1, len(tasks) // (workers * 8) or 1)))
    else:
        outcomes = [_oracle_equivalence_task(t) for t in tasks]
    cases = sum(done for done, _ in outcomes)
    for _, counterexample in outcomes:
        if counterexample is not None:
            return SuiteResult.fail("oracle-equivalence", cases, counterexample)
    return SuiteResult.ok("oracle-equivalence", cases)


def _coprime_pairs(mn_max: int) -> list[tuple[int, int]]:
    pairs = []
    for m in range(2, mn_max // 2 + 1):
        if m * (m + 1) > mn_max:
            break
        for n in range(m + 1, mn_max // m + 1):
            if math.gcd(m, n) == 1:
                pairs.append((m, n))
    pairs.sort(key=lambda t: (t[0] * t[1], t[0]))
    return pairs


def multiplicativity_suite(polys: Sequence[str], k_values: Sequence[int],
                           mn_max: int = 2000, pair_count: int = 200,
                           seed: int = 0) -> SuiteResult:
    """N(m*n) == N(m) * N(n) for coprime m, n, with c reduced per factor.

    Pairs are a deterministic stride through the canonical enumeration of
    coprime pairs with m*n <= mn_max; the target residues are a fixed small
    set plus two samples drawn from the seeded generator.
    """
    all_pairs = _coprime_pairs(mn_max)
    step = max(1, len(all_pairs) // pair_count)
    pairs = all_pairs[::step][:pair_count]
    rng = random.Random(seed)
    cases = 0
    for m, n in pairs:
        mn = m * n
        targets = sorted({0, 1, m, n, mn - 1, rng.randrange(mn), rng.randrange(mn)})
        for poly in polys:
            f = IntPolynomial.parse(poly)
            for k in k_values:
                for c in targets:
                    whole = global_count(CountQuery(f, k, c, mn)).value
                    split = (global_count(CountQuery(f, k, c % m, m)).value
                             * global_count(CountQuery(f, k, c % n, n)).value)
                    cases += 1
                    if whole != split:
                        return SuiteResult.fail(
                            "multiplicativity", cases,
                            _mismatch(poly, k, c, mn, whole, split,
                                      f"global_count({mn}) vs product over {m} * {n}"))
    return SuiteResult.ok("multiplicativity", cases)


def conservation_suite(polys: Sequence[str], k_values: Sequence[int],
                       n_max: int) -> SuiteResult:
    """Summing the count over every target c must give |E_f(n)|**k."""
    cases = 0
    for poly in polys:
        f = IntPolynomial.parse(poly)
        for k in k_values:
            for n in range(1, n_max + 1):
                total = sum(global_count(CountQuery(f, k, c, n)).value
                            for c in range(n))
                expected = len(exunit_set(f, n)) ** k
                cases += 1
                if total != expected:
                    return SuiteResult.fail(
                        "conservation", cases,
                        _mismatch(poly, k, -1, n, total, expected,
                                  "sum over c of global_count vs |E|**k"))
    return SuiteResult.ok("conservation", cases)


def yang_zhao_agreement(k_values: Sequence[int], n_max: int) -> tuple[int, dict | None]:
    """yang_zhao_count against quadratic_count on f = x - x**2, all targets."""
    f = IntPolynomial.parse(EXCEPTIONAL_UNIT_POLY)
    cases = 0
    for k in k_values:
        for n in range(1, n_max + 1):
            for c in range(n):
                special = yang_zhao_count(k, c, n).value
                quad = quadratic_count(CountQuery(f, k, c, n)).value
                cases += 1
                if special != quad:
                    return cases, _mismatch(EXCEPTIONAL_UNIT_POLY, k, c, n, special, quad,
                                            "yang_zhao_count vs quadratic_count")
    return cases, None


def fast_path_suite(polys: Sequence[str], k_values: Sequence[int],
                    n_max: int) -> SuiteResult:
    """Every applicable fast path must reproduce the general count.

    Linear queries are also checked against the classical unit-sum count
    through the shift c -> a*c + k*b that turns f-exunits of a*x + b into
    plain units.
    """
    cases = 0
    for poly in polys:
        f = IntPolynomial.parse(poly)
        for k in k_values:
            for n in range(1, n_max + 1):
                form = classify(f, n)
                if isinstance(form, LinearCoprime):
                    for c in range(n):
                        fast = linear_count(CountQuery(f, k, c, n)).value
                        general = global_count(CountQuery(f, k, c, n)).value
                        classical = brauer_count(k, (form.a * c + k * form.b) % n, n).value
                        cases += 1
                        if not fast == general == classical:
                            return SuiteResult.fail(
                                "fast-path-agreement", cases,
                                _mismatch(poly, k, c, n, fast, general,
                                          "linear_count vs global_count vs brauer_count"))
                elif isinstance(form, SplitQuadratic):
                    for c in range(n):
                        fast = quadratic_count(CountQuery(f, k, c, n)).value
                        general = global_count(CountQuery(f, k, c, n)).value
                        cases += 1
                        if fast != general:
                            return SuiteResult.fail(
                                "fast-path-agreement", cases,
                                _mismatch(poly, k, c, n, fast, general,
                                          "quadratic_count vs global_count"))
    extra, counterexample = yang_zhao_agreement(k_values, n_max)
    cases += extra
    if counterexample is not None:
        return SuiteResult.fail("fast-path-agreement", cases, counterexample)
    return SuiteResult.ok("fast-path-agreement", cases)


def run_all(polys: Sequence[str] = DEFAULT_POLYNOMIALS,
            k_values: Sequence[int] = (2, 3),
            n_max: int = 30,
            seed: int = 0,
            workers: int = 1,
            inject_fault: bool = False) -> list[SuiteResult]:
    """Run the four suites over the grid and return their results."""
    mn_max = min(2000, max(4, n_max * n_max))
    return [
        oracle_equivalence_suite(polys, k_values, n_max,
                                 workers=workers, inject_fault=inject_fault),
        multiplicativity_suite(polys, k_values, mn_max=mn_max, seed=seed),
        conservation_suite(polys, k_values, n_max),
        fast_path_suite(polys, k_values, n_max),
    ]
