"""Elementary number theory used throughout the package.

Conventions
-----------
* ``eps`` is always the integer ``+1`` or ``-1``.
* For the prime ``ell = 2`` all multiplicative orders are taken modulo 4
  (the group ``(Z/4)^x``), and most callers additionally require the
  regime condition ``4 | (q - eps)``; see :class:`EllParams`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .errors import UnsupportedRegimeError

__all__ = [
    "is_prime",
    "factorize",
    "divisors",
    "valuation",
    "factorial_valuation",
    "multiplicative_order",
    "e_ell",
    "E_set",
    "d_of",
    "a_of",
    "cyclotomic_coeffs",
    "cyclotomic_eval",
    "PrimePower",
    "EllParams",
]


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (inputs here are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f <= isqrt(n):
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out: dict[int, int] = {}
    m = n
    for p in (2, 3):
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    f = 5
    while f <= isqrt(m):
        for p in (f, f + 2):
            while m % p == 0:
                out[p] = out.get(p, 0) + 1
                m //= p
        f += 6
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return dict(sorted(out.items()))


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n >= 1``, sorted ascending."""
    if n < 1:
        raise ValueError(f"divisors expects n >= 1, got {n}")
    out = [1]
    for p, k in factorize(n).items():
        out = [d * p**i for d in out for i in range(k + 1)]
    return sorted(out)


def mobius(n: int) -> int:
    """The Moebius function of ``n >= 1``."""
    fac = factorize(n)
    if any(k > 1 for k in fac.values()):
        return 0
    return (-1) ** len(fac)


def valuation(n: int, ell: int) -> int:
    """Largest ``v`` with ``ell**v | n`` (``n`` nonzero; sign ignored)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if ell < 2:
        raise ValueError(f"valuation base must be >= 2, got {ell}")
    m, v = abs(n), 0
    while m % ell == 0:
        m //= ell
        v += 1
    return v


def ellprime_part(n: int, ell: int) -> int:
    """The largest divisor of ``n`` coprime to ``ell`` (``n`` nonzero; sign ignored)."""
    return abs(n) // ell ** valuation(n, ell)


def factorial_valuation(n: int, ell: int) -> int:
    """``valuation(n!, ell)`` by Legendre's formula, for ``n >= 0``."""
    if n < 0:
        raise ValueError(f"factorial_valuation expects n >= 0, got {n}")
    if ell < 2:
        raise ValueError(f"valuation base must be >= 2, got {ell}")
    total, power = 0, ell
    while power <= n:
        total += n // power
        power *= ell
    return total


def multiplicative_order(a: int, m: int) -> int:
    """Order of ``a`` in ``(Z/m)^x``; requires ``m >= 2`` and ``gcd(a, m) == 1``."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    k, x = 1, a
    while x != 1:
        x = x * a % m
        k += 1
    return k


def e_ell(q: int, ell: int) -> int:
    """Order of ``q`` modulo ``ell`` (modulo 4 when ``ell == 2``)."""
    _check_ell(ell)
    modulus = 4 if ell == 2 else ell
    if gcd(q, modulus) != 1:
        raise ValueError(f"q={q} shares a factor with {modulus}")
    return multiplicative_order(q, modulus)


def E_set(e: int, ell: int, bound: int) -> list[int]:
    """The degrees ``e * ell**i`` up to ``bound`` (all powers of 2 when ``ell == 2``)."""
    _check_ell(ell)
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")
    out = []
    m = 1 if ell == 2 else e
    while m <= bound:
        out.append(m)
        m *= ell
    return out


def d_of(q: int, eps: int, ell: int) -> int:
    """Order of ``eps * q`` modulo ``ell`` (modulo 4 when ``ell == 2``)."""
    _check_eps(eps)
    _check_ell(ell)
    modulus = 4 if ell == 2 else ell
    return multiplicative_order(eps * q, modulus)


def a_of(q: int, eps: int, ell: int) -> int:
    """``valuation((eps*q)**d - 1, ell)`` where ``d = d_of(q, eps, ell)``."""
    d = d_of(q, eps, ell)
    return valuation((eps * q) ** d - 1, ell)


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    # x**n - 1 divided exactly by the product of all lower cyclotomic factors.
    remainder = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            remainder = _exact_div(remainder, list(cyclotomic_coeffs(d)))
    return tuple(remainder)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (coefficients constant-term first)."""
    num = num[:]
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1]:
            raise ArithmeticError("division is not exact")
        quot[i] = c // den[-1]
        for j, dc in enumerate(den):
            num[i + j] -= quot[i] * dc
    if any(num):
        raise ArithmeticError("division leaves a remainder")
    return quot


def cyclotomic_eval(n: int, x: int) -> int:
    """Value of the n-th cyclotomic polynomial at the integer ``x``."""
    acc = 0
    for c in reversed(cyclotomic_coeffs(n)):
        acc = acc * x + c
    return acc


def _check_eps(eps: int) -> None:
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps!r}")


def _check_ell(ell: int) -> None:
    if not is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")


@dataclass(frozen=True)
class PrimePower:
    """A prime power ``q = p**f``."""

    p: int
    f: int
    q: int

    @classmethod
    def from_q(cls, q: int) -> "PrimePower":
        if q < 2:
            raise ValueError(f"q must be >= 2, got {q}")
        fac = factorize(q)
        if len(fac) != 1:
            raise ValueError(f"q={q} is not a prime power")
        (p, f), = fac.items()
        return cls(p=p, f=f, q=q)


@dataclass(frozen=True)
class EllParams:
    """Validated parameter bundle ``(q, eps, ell)`` with derived orders.

    ``e`` is the order of ``q``, ``d`` the order of ``eps*q`` (both taken
    modulo ``ell``, or modulo 4 when ``ell == 2``), and ``a`` the
    ``ell``-adic valuation of ``(eps*q)**d - 1``.
    """

    q: int
    eps: int
    ell: int
    e: int
    d: int
    a: int

    @classmethod
    def compute(cls, q: int, eps: int, ell: int) -> "EllParams":
        _check_eps(eps)
        _check_ell(ell)
        PrimePower.from_q(q)
        if q % ell == 0:
            raise ValueError(f"ell={ell} must not divide q={q}")
        if ell == 2 and (q - eps) % 4 != 0:
            raise UnsupportedRegimeError(
                f"ell=2 requires 4 | (q - eps); got q={q}, eps={eps:+d}"
            )
        return cls(
            q=q,
            eps=eps,
            ell=ell,
            e=e_ell(q, ell),
            d=d_of(q, eps, ell),
            a=a_of(q, eps, ell),
        )
