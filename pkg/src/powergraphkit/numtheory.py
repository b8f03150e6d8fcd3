"""Elementary number theory: factorization, totient, and divisor-chain sums.

All functions take positive integers (n >= 1) and reject 0 or negatives.
Trial division is enough here: inputs are bounded by the group-order cap,
and arithmetic stays well inside 64 bits.
"""

import math

FERMAT_PRIMES = (3, 5, 17, 257, 65537)


def _require_positive(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"expected a positive integer, got {n!r}")
    return n


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs with primes ascending.

    factorize(1) == [].
    """
    _require_positive(n)
    out: list[tuple[int, int]] = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def divisors(n: int) -> list[int]:
    """All divisors of n in ascending order, including 1 and n."""
    _require_positive(n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient(n: int) -> int:
    """Euler's totient: the number of 1 <= k <= n with gcd(k, n) = 1."""
    _require_positive(n)
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def big_omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity; 0 for n = 1."""
    _require_positive(n)
    return sum(e for _, e in factorize(n))


def distinct_prime_count(n: int) -> int:
    """Number of distinct prime factors of n; 0 for n = 1."""
    return len(factorize(n))


def smallest_prime_factor(n: int) -> int:
    """Smallest prime dividing n; requires n >= 2."""
    _require_positive(n)
    if n < 2:
        raise ValueError("n = 1 has no prime factor")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1 if d == 2 else 2
    return n


def psi(n: int) -> int:
    """Totient sum along the divisor chain that divides out the smallest
    prime at every step:

        psi(1) = 1,   psi(n) = totient(n) + psi(n // p),  p = min prime of n.

    Equals both the clique number and the chromatic number of the power
    graph of the cyclic group of order n; smallest-prime-first is verified
    optimal against exhaustive chain enumeration in the test suite.
    """
    _require_positive(n)
    total = 0
    m = n
    while m > 1:
        total += totient(m)
        m //= smallest_prime_factor(m)
    return total + 1


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    _require_positive(n)
    if n < 2:
        return False
    return factorize(n) == [(n, 1)]


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) if n = p**k for a prime p and k >= 1, else None."""
    fac = factorize(n)
    if len(fac) == 1:
        return fac[0]
    return None


def is_prime_power(n: int) -> bool:
    """True iff n = p**k with p prime and k >= 1 (so 1 is not a prime power)."""
    return prime_power(n) is not None


def is_fermat_prime(p: int) -> bool:
    """True iff p is prime and p = 2**(2**t) + 1 for some t >= 0."""
    _require_positive(p)
    if p < 3 or not is_prime(p):
        return False
    m = p - 1
    # m must be a power of two whose exponent is itself a power of two
    if m & (m - 1):
        return False
    t = m.bit_length() - 1
    return t & (t - 1) == 0


def two_adic_valuation(n: int) -> int:
    """Largest f with 2**f dividing n."""
    _require_positive(n)
    return (n & -n).bit_length() - 1


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)
