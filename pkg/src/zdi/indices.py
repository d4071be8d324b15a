"""Exact eccentricity-based indices over explicit or quotient graphs.

Three indices, all exact:

* eccentric connectivity: sum of deg(v) * e(v)
* augmented eccentric connectivity: sum of M(v) / e(v), M(v) the product
  of the neighbor degrees of v
* Ediz eccentric connectivity: sum of S(v) / e(v), S(v) the sum of the
  neighbor degrees of v

Augmented values grow multiplicatively, so M(v) is carried in factored
(base, exponent) form and only expanded below a bit threshold.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExpansionLimitError, UndefinedIndexError
from .zdg_graph import QuotientGraph, ZeroDivisorGraph

# Expand factored values only when every per-vertex M(v) stays below this
# many bits; beyond it a sum of powers has no usable normalized form.
EXPANSION_BIT_LIMIT = 10**6


def _fmt_scalar(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class PowerProduct:
    """Exact nonnegative value scalar * prod(base**exp), kept factored.

    Normalized: bases >= 2 strictly ascending, exponents >= 1; a zero base
    collapses the whole product to scalar 0.
    """

    scalar: Fraction
    terms: tuple[tuple[int, int], ...]

    @staticmethod
    def of(scalar, terms=()) -> "PowerProduct":
        scalar = Fraction(scalar)
        merged: dict[int, int] = {}
        zero = scalar == 0
        for base, exp in terms:
            if base < 0:
                raise ValueError(f"negative base {base} not supported")
            if exp < 0:
                raise ValueError(f"negative exponent {exp} not supported")
            if exp == 0 or base == 1:
                continue
            if base == 0:
                zero = True
                continue
            merged[base] = merged.get(base, 0) + exp
        if zero:
            return PowerProduct(Fraction(0), ())
        return PowerProduct(scalar, tuple(sorted(merged.items())))

    def bit_estimate(self) -> int:
        """Upper bound on the bit length of the expanded value."""
        bits = self.scalar.numerator.bit_length() + self.scalar.denominator.bit_length()
        for base, exp in self.terms:
            bits += exp * base.bit_length()
        return bits

    def bit_lower_bound(self) -> int:
        bits = 0
        for base, exp in self.terms:
            bits += exp * (base.bit_length() - 1)
        return bits

    def expandable(self, limit: int = EXPANSION_BIT_LIMIT) -> bool:
        return self.bit_estimate() <= limit

    def expand(self, limit: int = EXPANSION_BIT_LIMIT) -> Fraction:
        if not self.expandable(limit):
            raise ExpansionLimitError(
                f"factored value needs about {self.bit_estimate()} bits, limit is {limit}"
            )
        value = self.scalar
        for base, exp in self.terms:
            value *= base**exp
        return value

    def __str__(self):
        parts = [_fmt_scalar(self.scalar)]
        parts.extend(f"{base}^{exp}" for base, exp in self.terms)
        return " * ".join(parts)


@dataclass(frozen=True)
class PowerProductSum:
    """A sum of factored terms; the only faithful form for huge augmented values."""

    terms: tuple[PowerProduct, ...]

    @staticmethod
    def of(terms) -> "PowerProductSum":
        return PowerProductSum(tuple(terms))

    def expandable(self, limit: int = EXPANSION_BIT_LIMIT) -> bool:
        return all(t.expandable(limit) for t in self.terms)

    def expand(self, limit: int = EXPANSION_BIT_LIMIT) -> Fraction:
        total = Fraction(0)
        for t in self.terms:
            total += t.expand(limit)
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(str(t) for t in self.terms)


@dataclass(frozen=True)
class IndexValue:
    """A computed index value tagged with its kind and computation method."""

    kind: str  # eci | aeci | ediz
    value: object  # int | Fraction | PowerProductSum
    method: str  # explicit | quotient | class | paper


def _require_defined(eccs: dict, m: int):
    zeros = [v for v, e in eccs.items() if e == 0]
    if zeros:
        raise UndefinedIndexError(
            f"undefined: eccentricity 0 for vertex {zeros[0]} of Z_{m} "
            "(single-vertex graph)"
        )


def _quotient_profile(q: QuotientGraph, c) -> list[tuple[int, int]]:
    """(neighbor degree, multiplicity) pairs seen from one member of class c."""
    profile = []
    for d2 in q.cross_neighbors(c.divisor):
        other = q.class_for(d2)
        profile.append((other.degree, other.size))
    if c.self_closed and c.size >= 2:
        profile.append((c.degree, c.size - 1))
    return profile


def neighbor_stats(g: ZeroDivisorGraph | QuotientGraph, v: int) -> tuple[int, PowerProduct]:
    """S(v) and M(v): sum and factored product of the neighbor degrees of v."""
    if isinstance(g, QuotientGraph):
        profile = _quotient_profile(g, g.class_of(v))
        s = sum(deg * mult for deg, mult in profile)
        return s, PowerProduct.of(1, profile)
    degs = [len(nbrs) for nbrs in g._adj]
    i = g._index[v]
    counts = Counter(degs[u] for u in g._adj[i])
    s = sum(deg * mult for deg, mult in counts.items())
    return s, PowerProduct.of(1, sorted(counts.items()))


def eci(g: ZeroDivisorGraph | QuotientGraph) -> int:
    """Eccentric connectivity index; exact integer, 0 for empty and K_1."""
    if isinstance(g, QuotientGraph):
        return sum(c.size * c.degree * c.eccentricity for c in g.classes)
    ecc = g._ecc_by_index()
    return sum(len(nbrs) * e for nbrs, e in zip(g._adj, ecc))


def aeci(
    g: ZeroDivisorGraph | QuotientGraph,
    factored: bool = False,
    bit_limit: int = EXPANSION_BIT_LIMIT,
) -> Fraction | PowerProductSum:
    """Augmented eccentric connectivity index.

    Expanded to an exact rational when every per-vertex M(v) fits the bit
    threshold. The factored form is only available for quotient graphs,
    where one term per class suffices.
    """
    if isinstance(g, QuotientGraph):
        eccs = {c.divisor: c.eccentricity for c in g.classes}
        _require_defined(eccs, g.modulus.m)
        terms = [
            PowerProduct.of(Fraction(c.size, c.eccentricity), _quotient_profile(g, c))
            for c in g.classes
        ]
        total = PowerProductSum.of(terms)
        if factored:
            return total
        if not total.expandable(bit_limit):
            raise ExpansionLimitError(
                "per-class M(v) exceeds the expansion threshold; "
                "request the factored form"
            )
        return total.expand(bit_limit)
    if factored:
        raise ValueError("factored aeci requires a quotient graph")
    ecc = g._ecc_by_index()
    n = len(g.vertices)
    if n == 0:
        return Fraction(0)
    _require_defined(g.eccentricities(), g.modulus.m)
    degs = [len(nbrs) for nbrs in g._adj]
    buckets: dict[int, int] = {}
    for i in range(n):
        counts = Counter(degs[u] for u in g._adj[i])
        bits = sum(mult * deg.bit_length() for deg, mult in counts.items())
        if bits > bit_limit:
            raise ExpansionLimitError(
                f"M(v) for vertex {g.vertices[i]} needs about {bits} bits; "
                "use the quotient or class factored path"
            )
        m_v = 1
        for deg, mult in counts.items():
            m_v *= deg**mult
        buckets[ecc[i]] = buckets.get(ecc[i], 0) + m_v
    total = Fraction(0)
    for e, acc in sorted(buckets.items()):
        total += Fraction(acc, e)
    return total


def ediz(g: ZeroDivisorGraph | QuotientGraph) -> Fraction:
    """Ediz eccentric connectivity index; exact rational."""
    if isinstance(g, QuotientGraph):
        eccs = {c.divisor: c.eccentricity for c in g.classes}
        _require_defined(eccs, g.modulus.m)
        total = Fraction(0)
        for c in g.classes:
            s = sum(deg * mult for deg, mult in _quotient_profile(g, c))
            total += Fraction(c.size * s, c.eccentricity)
        return total
    ecc = g._ecc_by_index()
    n = len(g.vertices)
    if n == 0:
        return Fraction(0)
    _require_defined(g.eccentricities(), g.modulus.m)
    degs = [len(nbrs) for nbrs in g._adj]
    buckets: dict[int, int] = {}
    for i in range(n):
        s = sum(degs[u] for u in g._adj[i])
        buckets[ecc[i]] = buckets.get(ecc[i], 0) + s
    total = Fraction(0)
    for e, acc in sorted(buckets.items()):
        total += Fraction(acc, e)
    return total
