"""Elementary number theory over Z_m: factorization, totient, valuation, zero divisors.

All functions are pure and operate on plain integers or immutable
:class:`Modulus` values, so they are safe to call from any number of
workers concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd, isqrt

# Trial division stays tractable up to here; larger moduli are only reachable
# through Modulus.from_prime_power, which never factorizes.
FACTORIZATION_LIMIT = 10**12


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def _phi_from_factors(factors) -> int:
    phi = 1
    for p, e in factors:
        if e > 0:
            phi *= p ** (e - 1) * (p - 1)
    return phi


@dataclass(frozen=True)
class Modulus:
    """A modulus m >= 2 together with its prime factorization.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly
    increasing primes whose product reconstructs ``m``.
    """

    m: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got {self.m}")
        prod = 1
        last = 1
        for p, e in self.factors:
            if e < 1:
                raise ValueError(f"exponent must be >= 1, got {p}^{e}")
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p
            prod *= p**e
        if prod != self.m:
            raise ValueError(f"factorization {self.factors} does not multiply to {self.m}")

    @classmethod
    def from_prime_power(cls, p: int, n: int) -> "Modulus":
        """Build p**n directly, bypassing trial division (p may be large)."""
        if n < 1:
            raise ValueError(f"exponent must be >= 1, got {n}")
        return cls(p**n, ((p, n),))

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def phi(self) -> int:
        """Euler's totient of m."""
        return _phi_from_factors(self.factors)

    def zero_divisor_count(self) -> int:
        """|Z*(Z_m)| = m - 1 - phi(m), computed without enumeration."""
        return self.m - 1 - self.phi()

    @cached_property
    def _divisor_items(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        # every divisor of m with its exponent vector, sorted by value
        items = [(1, ())]
        for p, e in self.factors:
            nxt = []
            for d, exps in items:
                q = 1
                for k in range(e + 1):
                    nxt.append((d * q, exps + (k,)))
                    q *= p
            items = nxt
        return tuple(sorted(items))

    def divisors(self) -> list[int]:
        """All positive divisors of m, ascending."""
        return [d for d, _ in self._divisor_items]

    def proper_divisor_items(self) -> list[tuple[int, tuple[int, ...]]]:
        """Divisors d with 1 < d < m, paired with their exponent vectors."""
        return [(d, exps) for d, exps in self._divisor_items if 1 < d < self.m]

    def phi_of_quotient(self, exps: tuple[int, ...]) -> int:
        """phi(m / d) for the divisor d with exponent vector ``exps``."""
        return _phi_from_factors(
            [(p, e - x) for (p, e), x in zip(self.factors, exps)]
        )


def factorize(m: int, limit: int = FACTORIZATION_LIMIT) -> Modulus:
    """Factor m >= 2 by deterministic trial division up to sqrt(m)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if m > limit:
        raise ValueError(f"modulus {m} exceeds the factorization limit {limit}")
    factors = []
    rest = m
    for p in (2, 3):
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
    f = 5
    while f * f <= rest:
        for p in (f, f + 2):
            if rest % p == 0:
                e = 0
                while rest % p == 0:
                    rest //= p
                    e += 1
                factors.append((p, e))
        f += 6
    if rest > 1:
        factors.append((rest, 1))
    return Modulus(m, tuple(factors))


def euler_phi(m: int) -> int:
    """Count of integers in [1, m] coprime to m; phi(1) = 1."""
    if m < 1:
        raise ValueError(f"euler_phi requires m >= 1, got {m}")
    if m == 1:
        return 1
    return factorize(m).phi()


def valuation(x: int, p: int) -> int:
    """Largest k with p**k dividing x (x >= 1, p prime)."""
    if x < 1:
        raise ValueError(f"valuation requires x >= 1, got {x}")
    if not is_prime(p):
        raise ValueError(f"valuation requires a prime base, got {p}")
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def zero_divisors(mod: Modulus) -> list[int]:
    """Sorted nonzero zero divisors of Z_m: the x in [1, m-1] with gcd(x, m) > 1.

    Materializes a list of size m - 1 - phi(m); callers guarding memory
    should check :meth:`Modulus.zero_divisor_count` first.
    """
    m = mod.m
    return [x for x in range(2, m) if gcd(x, m) > 1]
