"""Exact residue arithmetic mod p and small finite fields F_q.

Everything here is deterministic integer arithmetic: residues are ints in
[0, p), field elements are ints in [0, q) (digit-encoded polynomials when q
is a proper prime power), and all helpers are pure functions safe for
concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n == b:
            return True
        if n % b == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q = ch**k with ch prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    ch = q
    for d in range(2, math.isqrt(q) + 1):
        if q % d == 0:
            ch = d
            break
    k = 0
    m = q
    while m % ch == 0:
        m //= ch
        k += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return ch, k


# Shipped moduli for F_{ch^k}, k >= 2: the lexicographically smallest monic
# irreducible polynomial, as little-endian coefficients (c0, ..., c_{k-1}, 1).
IRREDUCIBLE_POLYS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 5): (1, 0, 0, 1, 0, 1),
    (2, 6): (1, 0, 0, 0, 0, 1, 1),
    (2, 7): (1, 0, 0, 0, 0, 0, 1, 1),
    (2, 8): (1, 0, 0, 0, 1, 1, 0, 1, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 0, 2, 1),
    (3, 4): (1, 0, 1, 1, 1),
    (3, 5): (1, 0, 0, 0, 2, 1),
    (5, 2): (1, 1, 1),
    (5, 3): (1, 0, 1, 1),
    (5, 4): (1, 0, 1, 1, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (1, 0, 1, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (1, 3, 1),
    (17, 2): (1, 1, 1),
    (19, 2): (1, 0, 1),
    (23, 2): (1, 0, 1),
}


class GF:
    """The field with q elements, q a prime power.

    Elements are ints in [0, q).  For prime q the representation is the
    residue itself; for q = ch**k an int encodes the coefficient vector of a
    polynomial in base ch (little-endian), reduced modulo the shipped
    irreducible polynomial.
    """

    def __init__(self, q: int):
        ch, k = factor_prime_power(q)
        self.q = q
        self.ch = ch
        self.deg = k
        self._generator: int | None = None
        if k > 1:
            try:
                self._modulus = IRREDUCIBLE_POLYS[(ch, k)]
            except KeyError:
                raise ValueError(
                    f"no shipped irreducible polynomial for GF({ch}^{k})"
                ) from None
        else:
            self._modulus = None

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))

    # -- encoding -------------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.deg):
            out.append(a % self.ch)
            a //= self.ch
        return out

    def _encode(self, digits: list[int]) -> int:
        a = 0
        for d in reversed(digits):
            a = a * self.ch + d
        return a

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of GF({self.q})")
        return a

    # -- arithmetic -----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.deg == 1:
            return (a + b) % self.q
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % self.ch for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.deg == 1:
            return -a % self.q
        return self._encode([-x % self.ch for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.deg == 1:
            return a * b % self.q
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.deg - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.ch
        # reduce: x^deg = -(c0 + ... + c_{deg-1} x^{deg-1})
        mod = self._modulus
        for top in range(len(prod) - 1, self.deg - 1, -1):
            c = prod[top]
            if c:
                prod[top] = 0
                for i in range(self.deg):
                    prod[top - self.deg + i] = (
                        prod[top - self.deg + i] - c * mod[i]
                    ) % self.ch
        return self._encode(prod[: self.deg])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 is not invertible in GF({self.q})")
        return self.pow(a, self.q - 2)

    def scalar(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        n %= self.ch
        return n  # digit vector (n, 0, ..., 0) encodes to n itself

    # -- multiplicative structure ----------------------------------------

    def order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def generator(self) -> int:
        """Smallest generator of the cyclic group GF(q)^*."""
        if self._generator is None:
            self._generator = next(
                a for a in range(1, self.q) if self.order(a) == self.q - 1
            )
        return self._generator

    def root_of_unity(self, p: int) -> int:
        """Smallest element of exact multiplicative order p (p prime, p | q-1)."""
        if (self.q - 1) % p != 0:
            raise ValueError(f"GF({self.q})^* has no subgroup of order {p}")
        for a in range(2, self.q):
            if self.pow(a, p) == 1:
                return a
        raise AssertionError("unreachable: mu_p is a subgroup of GF(q)^*")

    def units(self) -> range:
        return range(1, self.q)


@dataclass(frozen=True)
class PrimeCtx:
    """The ambient prime p (cover degree) with an optional sandbox field F_q.

    Requires p prime; when q is given it must be a prime power with
    q = 1 (mod p), which forces the characteristic away from p and puts the
    p-th roots of unity inside F_q.
    """

    p: int
    q: int | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.q is not None:
            factor_prime_power(self.q)  # raises unless q is a prime power
            if self.q % self.p == 0:
                raise ValueError(f"q = {self.q} is divisible by p = {self.p}")
            if (self.q - 1) % self.p != 0:
                raise ValueError(f"q = {self.q} is not 1 mod p = {self.p}")

    @property
    def gf(self) -> GF:
        if self.q is None:
            raise ValueError("this context has no sandbox field (q not set)")
        return _gf_cached(self.q)

    @property
    def zeta(self) -> int:
        """The fixed primitive p-th root of unity in F_q (smallest such)."""
        return self.gf.root_of_unity(self.p)


@lru_cache(maxsize=None)
def _gf_cached(q: int) -> GF:
    return GF(q)


def inv_mod_p(v: int, p: int) -> int:
    """The a in [1, p) with a*v = 1 (mod p); rejects v = 0 (mod p)."""
    if v % p == 0:
        raise ValueError(f"{v} is not a unit mod {p}")
    return pow(v, -1, p)


def dlog_mu_p(ctx: PrimeCtx, w: int, zeta: int | None = None) -> int:
    """Discrete logarithm in mu_p(F_q): the e in [0, p) with zeta**e = w.

    zeta defaults to the context's fixed root of unity; it must have exact
    order p, and w must satisfy w**p = 1.
    """
    gf, p = ctx.gf, ctx.p
    if zeta is None:
        zeta = ctx.zeta
    gf.check(zeta)
    gf.check(w)
    if zeta == 1 or gf.pow(zeta, p) != 1:
        raise ValueError(f"{zeta} does not have exact order {p} in GF({gf.q})")
    if w == 0 or gf.pow(w, p) != 1:
        raise ValueError(f"{w} is not a p-th root of unity in GF({gf.q})")
    x = 1
    for e in range(p):
        if x == w:
            return e
        x = gf.mul(x, zeta)
    raise AssertionError("unreachable: mu_p is cyclic generated by zeta")


def mobius_invert_by_support(H: Callable[[int], int], r: int) -> int:
    """Recover the exact-support count at size r from contained-support counts.

    H(k) must be the count for supports contained in a k-element set, for
    0 <= k <= r; the result is sum_k C(r,k) (-1)^(r-k) H(k).
    """
    if r < 0:
        raise ValueError("support size must be nonnegative")
    return sum((-1) ** (r - k) * math.comb(r, k) * H(k) for k in range(r + 1))


def unit_zero_sum_count(p: int, r: int) -> int:
    """Number of tuples in ((Z/p)^*)^r whose entries sum to 0 mod p."""
    if r < 0:
        raise ValueError("tuple length must be nonnegative")
    num = (p - 1) ** r + (-1) ** r * (p - 1)
    assert num % p == 0
    return num // p
