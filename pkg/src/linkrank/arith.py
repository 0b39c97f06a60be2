"""Exact elementary number theory: Moebius function, divisor lists,
gcds of integer vectors and multinomial coefficients.

Everything here is plain integer arithmetic; no floats anywhere.
"""

from math import factorial, gcd

from .errors import InvalidInputError


def moebius(n):
    """Moebius mu(n): (-1)^k for a product of k distinct primes, else 0."""
    if n < 1:
        raise InvalidInputError(f"moebius(n) needs n >= 1, got {n}")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def divisors(n):
    """All positive divisors of n in increasing order."""
    if n < 1:
        raise InvalidInputError(f"divisors(n) needs n >= 1, got {n}")
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    small.extend(reversed(large))
    return small


def gcd_multi(values):
    """gcd of a nonempty list of nonnegative integers; all zeros give 0."""
    values = list(values)
    if not values:
        raise InvalidInputError("gcd_multi needs at least one value")
    g = 0
    for v in values:
        if v < 0:
            raise InvalidInputError(f"gcd_multi takes nonnegative integers, got {v}")
        g = gcd(g, v)
    return g


def multinomial(parts):
    """(sum parts)! / prod(part!) for nonnegative integer parts."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise InvalidInputError(f"multinomial takes nonnegative integers, got {parts}")
    result = factorial(sum(parts))
    for p in parts:
        result //= factorial(p)
    return result
