"""Small prime utilities shared across the package."""
from __future__ import annotations

_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def _extend_to(count: int) -> None:
    n = _PRIMES[-1]
    while len(_PRIMES) < count:
        n += 2
        if all(n % p for p in _PRIMES if p * p <= n):
            _PRIMES.append(n)


def nth_prime(i: int) -> int:
    """0-indexed: nth_prime(0) == 2."""
    if i < 0:
        raise ValueError("prime index must be nonnegative")
    _extend_to(i + 1)
    return _PRIMES[i]


def odd_prime(i: int) -> int:
    """0-indexed odd primes: odd_prime(0) == 3, odd_prime(1) == 5, ..."""
    return nth_prime(i + 1)


def odd_prime_index(p: int) -> int:
    """Position of p in the odd primes 3, 5, 7, 11, ..."""
    i = 0
    while odd_prime(i) < p:
        i += 1
    if odd_prime(i) != p:
        raise ValueError(f"{p} is not an odd prime")
    return i


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError("need n >= 2")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1 if d == 2 else 2
    return n


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as a prime -> exponent map."""
    if n < 1:
        raise ValueError("need n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors_from_factorization(fact: dict[int, int]) -> list[int]:
    divs = [1]
    for p, e in fact.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def divisors_of(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    return divisors_from_factorization(factorize(n))


def merge_factorizations(*facts: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for fact in facts:
        for p, e in fact.items():
            out[p] = out.get(p, 0) + e
    return out
