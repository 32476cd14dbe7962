"""Integer partition utilities: validation, enumeration, statistics.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the empty partition. Everything here is pure, so the
enumerations are cached and shared freely.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial


def as_partition(parts) -> tuple:
    """Validate *parts* as a partition and return it as a tuple."""
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"partition parts must be positive, got {lam}")
        if i > 0 and lam[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {lam}")
    return lam


def partition_from_composition(parts) -> tuple:
    """Sort a sequence of nonnegative integers into a partition, dropping zeros."""
    comp = [int(p) for p in parts]
    if any(p < 0 for p in comp):
        raise ValueError(f"composition entries must be nonnegative, got {parts}")
    return tuple(sorted((p for p in comp if p), reverse=True))


def conjugate(lam) -> tuple:
    """Transpose of the Young diagram."""
    lam = tuple(lam)
    if not lam:
        return ()
    out = []
    for i in range(lam[0]):
        out.append(sum(1 for p in lam if p > i))
    return tuple(out)


def intersect(lam, mu) -> tuple:
    """Componentwise minimum (intersection of Young diagrams)."""
    return tuple(min(a, b) for a, b in zip(lam, mu))


def is_subpartition(lam, mu) -> bool:
    """True when the diagram of lam fits inside the diagram of mu."""
    return intersect(lam, mu) == tuple(lam)


def durfee(mu) -> int:
    """Side of the largest square fitting in the diagram: max d with mu_d >= d."""
    d = 0
    for i, p in enumerate(mu, start=1):
        if p >= i:
            d = i
    return d


def multiplicities(lam) -> dict:
    """Mapping part value -> number of occurrences."""
    out: dict = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


@lru_cache(maxsize=None)
def z_value(lam) -> int:
    """Centralizer order: product over parts i of i^m_i * m_i!."""
    z = 1
    for i, m in multiplicities(lam).items():
        z *= i**m * factorial(m)
    return z


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    result, m = 1, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _partitions_of(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def partitions_of(n: int, max_part=None) -> list:
    """All partitions of n in canonical order (descending lexicographic).

    The optional ``max_part`` bounds the largest part.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    return list(_partitions_of(n, n if max_part is None else min(max_part, n)))


def partitions_up_to(n: int) -> list:
    """Partitions of 0..n in canonical order: ascending size, then descending lex."""
    out = []
    for m in range(n + 1):
        out.extend(_partitions_of(m, m))
    return out


def canonical_key(lam):
    """Sort key for canonical order: ascending size, descending lex within a size."""
    return (sum(lam), tuple(-p for p in lam))


def stable_pad(mu, n: int) -> tuple:
    """Prepend n - |mu| as a new largest part; requires n >= mu_1 + |mu|."""
    mu = tuple(mu)
    first = n - sum(mu)
    if mu and first < mu[0]:
        raise ValueError(f"cannot pad {mu} to size {n}: new part {first} < {mu[0]}")
    if first < 0:
        raise ValueError(f"cannot pad {mu} to size {n}")
    return (first,) + mu if first > 0 or mu else ()


def hat(mu) -> tuple:
    """Drop the first (largest) part."""
    return tuple(mu)[1:]


def parse_partition(text: str) -> tuple:
    """Parse "[3,2,1]" (brackets optional, "[]" or "" is the empty partition)."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return ()
    try:
        parts = [int(tok) for tok in s.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return as_partition(parts)


def format_partition(lam) -> str:
    """Canonical bracketed form, "[]" for the empty partition."""
    return "[" + ",".join(str(p) for p in lam) + "]"


# Multiset helpers on partition tuples (used by the symmetric function core).

def multiset_union(lam, mu) -> tuple:
    return tuple(sorted(lam + mu, reverse=True))


def multiset_diff(lam, mu) -> tuple:
    """Remove the parts of mu from lam; raises if mu is not contained."""
    remaining = list(lam)
    for p in mu:
        remaining.remove(p)
    return tuple(remaining)


@lru_cache(maxsize=None)
def submultisets(lam) -> tuple:
    """All sub-multisets of a partition, each as a partition tuple."""
    items = sorted(multiplicities(lam).items(), reverse=True)
    out = [()]
    for value, mult in items:
        out = [prefix + (value,) * k for prefix in out for k in range(mult + 1)]
    return tuple(tuple(sorted(s, reverse=True)) for s in out)
