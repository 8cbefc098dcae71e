"""Closed-form counting of k-term exunit sums modulo n.

The number being computed is

    N(k, f, c, n) = #{(x_1, ..., x_k) in E_f(n)**k : x_1 + ... + x_k == c mod n}

where E_f(n) is the set of residues a with gcd(f(a), n) = 1. N is
multiplicative in n, so everything reduces to per-prime data. For a prime p
let R be the distinct root set of f mod p, r = |R|, and for the target
residue c let

    W = #{k-tuples drawn from R summing to c mod p}
    T = #{k-tuples avoiding R summing to c mod p}.

Expanding the additive character sum for T over an arbitrary root set gives
the exact integer identity

    T = ((p - r)**k + (-1)**k * (p*W - r**k)) / p

and the local obstruction count is M = p**(k-1) - T. The multiplicative
assembly, regrouped to avoid rational arithmetic, is

    N(n) = prod over p**e || n of  p**((e-1)*(k-1)) * (p**(k-1) - M).

On top of the general route there are dedicated evaluations for linear f
with unit leading coefficient, for quadratics split into integer linear
factors, for plain unit sums (Brauer's classical count) and for sums of
exceptional units (x and 1 - x both units).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .arith import factorize, is_prime, mod_inverse
from .errors import DomainError, FastPathInapplicableError, InvariantViolationError
from .poly import (
    DEFAULT_SCAN_CAP,
    IntPolynomial,
    LinearCoprime,
    SplitQuadratic,
    classify,
    root_set_mod_p,
)

__all__ = [
    "MAX_K",
    "CountQuery",
    "RootProfile",
    "LocalFactor",
    "CountReport",
    "root_composition_count",
    "count_avoiding_tuples",
    "local_count",
    "global_count",
    "linear_count",
    "quadratic_count",
    "brauer_count",
    "yang_zhao_count",
    "count",
]

# Binomial weights C(k, j) are exact big integers, but the j-loops are O(k),
# so k is kept to desk scale.
MAX_K = 10**6


@dataclass(frozen=True)
class CountQuery:
    """One counting instance: polynomial f, arity k >= 2, target c, modulus n."""

    f: IntPolynomial
    k: int
    c: int
    n: int

    def __post_init__(self) -> None:
        if not 2 <= self.k <= MAX_K:
            raise DomainError(f"k must be in [2, {MAX_K}]")
        if self.n < 1:
            raise DomainError("n must be >= 1")

    @property
    def c_reduced(self) -> int:
        return self.c % self.n


@dataclass(frozen=True)
class RootProfile:
    """Root data of f at one prime together with the derived local counts."""

    p: int
    roots: tuple[int, ...]
    root_count: int
    root_sum_count: int        # k-tuples drawn from the roots, summing to c
    avoiding_sum_count: int    # k-tuples avoiding every root, summing to c
    obstruction_count: int     # p**(k-1) - avoiding_sum_count


@dataclass(frozen=True)
class LocalFactor:
    """Per-prime record of a count: obstruction count and integer contribution."""

    p: int
    exponent: int
    obstruction_count: int
    contribution: int


@dataclass(frozen=True)
class CountReport:
    """An exact count plus how it was obtained.

    For the formula methods the value equals the product of the per-prime
    contributions (empty product for n = 1). Oracle-produced reports carry no
    per-prime breakdown.
    """

    value: int
    method: str
    per_prime: tuple[LocalFactor, ...]


def _validated_roots(roots: Sequence[int], p: int) -> tuple[int, ...]:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    reduced = tuple(x % p for x in roots)
    if len(set(reduced)) != len(reduced):
        raise DomainError("duplicate roots modulo p")
    return reduced


def root_composition_count(roots: Sequence[int], k: int, c: int, p: int) -> int:
    """Ordered k-tuples (repetition allowed) of the given residues summing to
    c mod p.

    Enumerates compositions j_1 + ... + j_r = k of the multiplicities and adds
    the multinomial coefficient k!/(j_1!...j_r!) whenever the weighted sum of
    roots lands on c. O(k**(r-1)) composition terms.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    reduced = _validated_roots(roots, p)
    if not reduced:
        return 0
    target = c % p
    last = len(reduced) - 1
    total = 0

    def descend(idx: int, remaining: int, acc: int, weight: int) -> None:
        nonlocal total
        if idx == last:
            if (acc + remaining * reduced[idx]) % p == target:
                total += weight
            return
        for j in range(remaining + 1):
            descend(idx + 1, remaining - j, (acc + j * reduced[idx]) % p,
                    weight * math.comb(remaining, j))

    descend(0, k, 0, 1)
    return total


def _avoiding_from_root_sum(p: int, r: int, k: int, w: int) -> int:
    numerator = (p - r) ** k + (-1) ** k * (p * w - r**k)
    t, rem = divmod(numerator, p)
    if rem:
        raise InvariantViolationError("avoiding-tuple count is not an integer")
    return t


def count_avoiding_tuples(p: int, roots: Sequence[int], k: int, c: int) -> int:
    """k-tuples over Z_p minus the given roots summing to c mod p.

    Evaluated through T = ((p - r)**k + (-1)**k * (p*W - r**k)) / p, which is
    always an exact integer; a nonzero remainder is a bug, never an input
    condition.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    reduced = _validated_roots(roots, p)
    if len(reduced) == p:
        return 0
    w = root_composition_count(reduced, k, c, p)
    return _avoiding_from_root_sum(p, len(reduced), k, w)


def _roots_for_prime(f: IntPolynomial, p: int, scan_cap: int) -> tuple[int, ...]:
    # Closed-form root extraction when f is coprime-linear or split-quadratic
    # against this prime; otherwise an exhaustive scan under the cap.
    form = classify(f, p)
    if isinstance(form, LinearCoprime):
        return ((-form.b) * mod_inverse(form.a, p) % p,)
    if isinstance(form, SplitQuadratic):
        x = form.a2 * mod_inverse(form.a1, p) % p
        y = form.b2 * mod_inverse(form.b1, p) % p
        return (x, y) if x < y else (y, x)
    return root_set_mod_p(f, p, scan_cap=scan_cap)


def local_count(f: IntPolynomial, k: int, c: int, p: int,
                scan_cap: int = DEFAULT_SCAN_CAP) -> RootProfile:
    """The local data of f at the prime p for arity k and target c.

    The obstruction count M is p**(k-1) - T; it is 0 when f has no root mod p
    and p**(k-1) when f vanishes identically mod p.
    """
    if k < 2:
        raise DomainError("k must be >= 2")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    roots = _roots_for_prime(f, p, scan_cap)
    r = len(roots)
    c %= p
    if r == p:
        w = p ** (k - 1)
        t = 0
    else:
        w = root_composition_count(roots, k, c, p)
        t = _avoiding_from_root_sum(p, r, k, w)
    return RootProfile(p, roots, r, w, t, p ** (k - 1) - t)


def _local_factor(p: int, e: int, k: int, unit: int) -> LocalFactor:
    # unit is the nu_p = 1 contribution p**(k-1) - M; range-check it before
    # scaling by the prime-power regrouping factor.
    bound = p ** (k - 1)
    if not 0 <= unit <= bound:
        raise InvariantViolationError("per-prime factor out of range")
    return LocalFactor(p, e, bound - unit, p ** ((e - 1) * (k - 1)) * unit)


def _assemble(method: str, factors: list[LocalFactor]) -> CountReport:
    value = 1
    for factor in factors:
        value *= factor.contribution
    return CountReport(value, method, tuple(factors))


def global_count(q: CountQuery, scan_cap: int = DEFAULT_SCAN_CAP) -> CountReport:
    """Exact N for any polynomial, via per-prime obstruction counts."""
    c = q.c_reduced
    factors = []
    for p, e in factorize(q.n):
        profile = local_count(q.f, q.k, c, p, scan_cap=scan_cap)
        unit = p ** (q.k - 1) - profile.obstruction_count
        factors.append(_local_factor(p, e, q.k, unit))
    return _assemble("general", factors)


def linear_count(q: CountQuery) -> CountReport:
    """N for f = a*x + b with gcd(a, n) = 1.

    Per prime the contribution is ((p-1)**k + (-1)**k * d_p) / p where d_p is
    p - 1 if p divides a*c + k*b and -1 otherwise; the division is exact and
    asserted, never rounded.
    """
    form = classify(q.f, q.n)
    if not isinstance(form, LinearCoprime):
        raise FastPathInapplicableError(
            "f is not linear with leading coefficient coprime to n")
    k = q.k
    c = q.c_reduced
    sign = (-1) ** k
    shifted_target = form.a * c + k * form.b
    factors = []
    for p, e in factorize(q.n):
        delta = p - 1 if shifted_target % p == 0 else -1
        numerator = (p - 1) ** k + sign * delta
        unit, rem = divmod(numerator, p)
        if rem:
            raise InvariantViolationError("linear per-prime factor is not an integer")
        factors.append(_local_factor(p, e, k, unit))
    return _assemble("linear", factors)


def _binomial_class_sum(k: int, coef: int, target: int, p: int) -> int:
    """Sum of C(k, j) over 0 <= j <= k with coef*j == target (mod p)."""
    total = 0
    binom = 1
    for j in range(k + 1):
        if (coef * j - target) % p == 0:
            total += binom
        binom = binom * (k - j) // (j + 1)
    return total


def quadratic_count(q: CountQuery) -> CountReport:
    """N for f = (a1*x - a2)(b1*x - b2) with a1, b1, a1*b2 - a2*b1 units mod n.

    Per prime the root pair is a2/a1 and b2/b1 (computable by modular inverse
    for any prime size, no scan), and the contribution is

        (-1)**k * (p * S + (2-p)**k - 2**k) / p

    with S the sum of C(k, j) over the class (a2*b1 - a1*b2)*j ==
    a1*b1*c - a1*b2*k (mod p). The division is exact and asserted.
    """
    form = classify(q.f, q.n)
    if not isinstance(form, SplitQuadratic):
        raise FastPathInapplicableError(
            "f does not split into integer linear factors that are unit-compatible with n")
    k = q.k
    c = q.c_reduced
    sign = (-1) ** k
    coef = form.a2 * form.b1 - form.a1 * form.b2
    target = form.a1 * form.b1 * c - form.a1 * form.b2 * k
    factors = []
    for p, e in factorize(q.n):
        s = _binomial_class_sum(k, coef % p, target % p, p)
        bracket = p * s + (2 - p) ** k - 2**k
        unit, rem = divmod(sign * bracket, p)
        if rem:
            raise InvariantViolationError("quadratic per-prime factor is not an integer")
        factors.append(_local_factor(p, e, k, unit))
    return _assemble("quadratic", factors)


def _check_k_n(k: int, n: int) -> None:
    if not 2 <= k <= MAX_K:
        raise DomainError(f"k must be in [2, {MAX_K}]")
    if n < 1:
        raise DomainError("n must be >= 1")


def brauer_count(k: int, c: int, n: int) -> CountReport:
    """Number of k-tuples of units mod n summing to c (the classical count).

    Evaluated per prime power from the closed form
    phi(n)**k / n * prod(1 - (-1)**(k-1)/(p-1)**(k-1)) over p | n dividing c
    times prod(1 - (-1)**k/(p-1)**k) over the remaining p | n, regrouped so
    every factor is an exact integer.
    """
    _check_k_n(k, n)
    c %= n
    factors = []
    for p, e in factorize(n):
        if c % p == 0:
            numerator = (p - 1) * ((p - 1) ** (k - 1) - (-1) ** (k - 1))
        else:
            numerator = (p - 1) ** k - (-1) ** k
        unit, rem = divmod(numerator, p)
        if rem:
            raise InvariantViolationError("unit-count per-prime factor is not an integer")
        factors.append(_local_factor(p, e, k, unit))
    return _assemble("brauer", factors)


def yang_zhao_count(k: int, c: int, n: int) -> CountReport:
    """Number of ways to write c mod n as a sum of k exceptional units
    (residues x with both x and 1 - x units).

    This is the split-quadratic evaluation specialised to f = x*(1-x), with
    the binomial class taken literally as j == c (mod p); its agreement with
    quadratic_count on f = x - x**2 is a tested identity, not an assumption.
    """
    _check_k_n(k, n)
    c %= n
    sign = (-1) ** k
    factors = []
    for p, e in factorize(n):
        s = _binomial_class_sum(k, 1, c % p, p)
        bracket = p * s + (2 - p) ** k - 2**k
        unit, rem = divmod(sign * bracket, p)
        if rem:
            raise InvariantViolationError("exceptional-unit per-prime factor is not an integer")
        factors.append(_local_factor(p, e, k, unit))
    return _assemble("yang_zhao", factors)


def count(q: CountQuery, method: str = "auto",
          scan_cap: int = DEFAULT_SCAN_CAP) -> CountReport:
    """Dispatch a query to the cheapest applicable formula.

    method "auto" picks the route from classify(f, n) and records which one
    ran; an explicitly requested fast path whose preconditions fail raises
    FastPathInapplicableError. All routes agree in value whenever their
    preconditions hold.
    """
    if method == "auto":
        form = classify(q.f, q.n)
        if isinstance(form, LinearCoprime):
            return linear_count(q)
        if isinstance(form, SplitQuadratic):
            return quadratic_count(q)
        return global_count(q, scan_cap=scan_cap)
    if method == "general":
        return global_count(q, scan_cap=scan_cap)
    if method == "linear":
        return linear_count(q)
    if method == "quadratic":
        return quadratic_count(q)
    raise DomainError(f"unknown method {method!r}")
