"""Exact integer arithmetic: divisor sums, representation counts rho_q(n),
classical and generalized Kloosterman sums, Ramanujan sums, and the structural
identities among them (Selberg identity, permutation symmetry).

All functions here are pure; memoized tables are built idempotently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

_SIEVE_LIMIT_MAX = 1 << 23  # hard cap on the smallest-prime-factor table
_TRIAL_LIMIT = 10**7        # factorization contract bound

_spf: np.ndarray | None = None


class FactorLimitError(ValueError):
    """Input exceeds the factorization contract (prime factors > 10^7)."""


def _ensure_spf(limit: int) -> np.ndarray:
    """Smallest-prime-factor table up to at least `limit` (grown on demand)."""
    global _spf
    if _spf is not None and len(_spf) > limit:
        return _spf
    size = 1 << max(16, (limit).bit_length())
    size = min(size, _SIEVE_LIMIT_MAX)
    if size <= limit:
        size = limit + 1
    spf = np.zeros(size, dtype=np.int64)
    spf[1] = 1
    for p in range(2, int(math.isqrt(size - 1)) + 1):
        if spf[p] == 0:
            spf[p * p::p][spf[p * p::p] == 0] = p
            spf[p] = p
    rest = np.nonzero(spf == 0)[0]
    spf[rest] = rest  # remaining entries are prime
    spf[0] = 0
    _spf = spf
    return spf


@dataclass(frozen=True)
class Factorization:
    """n = prod p^e with primes strictly increasing and e >= 1."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if e < 1 or p <= last:
                raise ValueError(f"invalid factorization of {self.n}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")


def factorize(n: int) -> Factorization:
    """Factor a positive integer by sieve lookup / trial division (wheel 2,3)."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    m = n
    out: list[tuple[int, int]] = []
    if m < _SIEVE_LIMIT_MAX:
        spf = _ensure_spf(m)
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        return Factorization(n, tuple(out))
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    p = 5
    step = 2  # alternates 5,7,11,13,... (wheel mod 6)
    while p * p <= m and p <= _TRIAL_LIMIT:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if m > 1:
        if m > _TRIAL_LIMIT * _TRIAL_LIMIT:
            raise FactorLimitError(f"cannot certify factorization of {n}")
        r = math.isqrt(m)
        if r * r == m:
            if r > _TRIAL_LIMIT:
                raise FactorLimitError(f"prime factor {r} exceeds contract")
            out.append((r, 2))
        else:
            if m > _TRIAL_LIMIT and math.isqrt(m) <= _TRIAL_LIMIT:
                # m is prime: all factors <= sqrt(m) were removed
                pass
            elif m > _TRIAL_LIMIT:
                raise FactorLimitError(f"prime factor {m} exceeds contract")
            out.append((m, 1))
    out.sort()
    return Factorization(n, tuple(out))


def divisors(n: int) -> list[int]:
    """Sorted divisors of n >= 1."""
    ds = [1]
    for p, e in factorize(n).factors:
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factorize(n).factors:
        out *= p ** (e - 1) * (p - 1)
    return out


def sigma_pow(s: complex, n: int) -> complex:
    """Divisor power sum sigma_s(n) = sum_{d|n} d^s, complex exponent allowed."""
    if n < 1:
        raise ValueError("sigma_pow requires n >= 1")
    total = 0j
    for d in divisors(n):
        total += cmath.exp(s * math.log(d)) if d > 1 else 1.0
    return total


# ---------------------------------------------------------------------------
# rho_q(n) = #{x mod 2q : x^2 = n mod 4q}
# ---------------------------------------------------------------------------

def rho_brute(q: int, n: int) -> int:
    """Exhaustive count over x in [0, 2q). Oracle for rho()."""
    if q < 1:
        raise ValueError("q >= 1 required")
    mod = 4 * q
    target = n % mod
    return sum(1 for x in range(2 * q) if (x * x) % mod == target)


def _count_sqrt_unit(u: int, p: int, e: int) -> int:
    """Solutions of y^2 = u (mod p^e) for p-unit u, e >= 1."""
    if p == 2:
        if e == 1:
            return 1
        if e == 2:
            return 2 if u % 4 == 1 else 0
        return 4 if u % 8 == 1 else 0
    return 2 if pow(u, (p - 1) // 2, p) == 1 else 0


def _count_sqrt_pp(n: int, p: int, e: int) -> int:
    """Solutions of x^2 = n (mod p^e)."""
    n %= p**e
    if n == 0:
        return p ** (e // 2)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    if v % 2 == 1:
        return 0
    c = _count_sqrt_unit(n, p, e - v)
    return p ** (v // 2) * c


def rho(q: int, n: int) -> int:
    """rho_q(n) via CRT on 4q with prime-power square counts (Hensel).

    Equals rho_brute(q, n) for all inputs; falls back to it for small q.
    """
    if q < 1:
        raise ValueError("q >= 1 required")
    if q < 64:
        return rho_brute(q, n)
    count = 1
    for p, e in factorize(4 * q).factors:
        count *= _count_sqrt_pp(n, p, e)
        if count == 0:
            return 0
    # solutions mod 4q come in pairs x, x+2q with equal squares
    return count // 2


@lru_cache(maxsize=512)
def _square_count_table(p: int, e: int) -> np.ndarray:
    """ct[m] = #{y mod p^e : y^2 = m mod p^e}, as an int32 array."""
    mod = p**e
    ct = np.zeros(mod, dtype=np.int32)
    y = np.arange(mod, dtype=np.int64)
    np.add.at(ct, (y * y) % mod, 1)
    return ct


def rho_vec(q: int, ns: np.ndarray) -> np.ndarray:
    """rho_q(n) for an int64 array of n, vectorized via CRT square tables."""
    mod = 4 * q
    m = np.mod(ns, mod)
    count = np.ones(len(m), dtype=np.int64)
    for p, e in factorize(mod).factors:
        ct = _square_count_table(p, e)
        count *= ct[np.mod(m, p**e)]
    return count // 2


# ---------------------------------------------------------------------------
# Kloosterman sums
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KloostermanValue:
    value: complex
    q: int
    arguments: tuple[int, ...]

    def __post_init__(self):
        if abs(self.value.imag) > 1e-9 * (1 + abs(self.value.real)):
            raise ValueError(
                f"Kloosterman sum not real: {self.value} (q={self.q})")

    @property
    def real(self) -> float:
        return self.value.real


@lru_cache(maxsize=4096)
def _phase_table(q: int) -> np.ndarray:
    """e(k/q) for k = 0..q-1; one trig table per modulus."""
    return np.exp(2j * np.pi * np.arange(q) / q)


def inverse_mod(a: int, q: int) -> int:
    """Inverse of a mod q (extended Euclid via pow)."""
    return pow(a, -1, q)


def kloosterman(n1: int, n2: int, q: int) -> KloostermanValue:
    """Classical S(n1, n2; q) = sum over units a of e((n1 a + n2 a^-1)/q)."""
    if q < 1:
        raise ValueError("q >= 1 required")
    if q == 1:
        return KloostermanValue(1 + 0j, 1, (n1, n2))
    ph = _phase_table(q)
    total = 0j
    for a in range(1, q):
        if math.gcd(a, q) != 1:
            continue
        ainv = pow(a, -1, q)
        total += ph[(n1 * a + n2 * ainv) % q]
    return KloostermanValue(total, q, (n1, n2))


def gen_kloosterman(m: int, n1: int, n2: int, q: int) -> KloostermanValue:
    """Generalized S(m, n1, n2; q) over pairs a,b in [1,q] with ab = m (mod q).

    Per residue a with g = gcd(a, q) and g | m, the b-solutions form an
    arithmetic progression of length g, whose phase sum is g when g | n2
    and 0 otherwise.
    """
    if q < 1:
        raise ValueError("q >= 1 required")
    if q == 1:
        return KloostermanValue(1 + 0j, 1, (m, n1, n2))
    ph = _phase_table(q)
    total = 0j
    for a in range(1, q + 1):
        g = math.gcd(a, q)
        if m % g or n2 % g:
            continue
        qg = q // g
        b0 = (m // g) * pow(a // g, -1, qg) % qg if qg > 1 else 0
        total += g * ph[(a * n1) % q] * ph[(b0 * n2) % q]
    return KloostermanValue(total, q, (m, n1, n2))


def gen_kloosterman_brute(m: int, n1: int, n2: int, q: int) -> complex:
    """O(q^2) direct double loop; oracle for q <= 10^3 only."""
    if q > 1000:
        raise ValueError("brute-force oracle restricted to q <= 1000")
    a = np.arange(1, q + 1)
    prod = np.mod(np.outer(a, a), q)
    ph = _phase_table(q)
    phase = np.outer(ph[np.mod(a * n1, q)], ph[np.mod(a * n2, q)])
    return complex(phase[prod == (m % q)].sum())


def ramanujan(n: int, q: int) -> float:
    """Ramanujan sum c_q(n) = S(0, n; q), real-valued."""
    if q < 1:
        raise ValueError("q >= 1 required")
    ph = _phase_table(q)
    total = 0j
    for a in range(q):
        if math.gcd(a, q) == 1:
            total += ph[(n * a) % q]
    assert abs(total.imag) <= 1e-9 * (1 + abs(total.real))
    return total.real


def selberg_residual(m: int, n1: int, n2: int, q: int) -> float:
    """|S(m,n1,n2;q) - sum_{d | (m,n1,q)} d S(1, m n1/d^2, n2; q/d)|."""
    lhs = gen_kloosterman(m, n1, n2, q).value
    g = math.gcd(math.gcd(m, n1), q)
    rhs = 0j
    for d in divisors(g):
        rhs += d * gen_kloosterman(1, (m * n1) // (d * d), n2, q // d).value
    return abs(lhs - rhs)


# ---------------------------------------------------------------------------
# Bulk rows used by the identity suite
# ---------------------------------------------------------------------------

def pair_count_row(l: int, q: int) -> np.ndarray:
    """H_q[c] = #{(a,b) mod q : ab = l^2, a+b = c}, for all residues c.

    Computed as rho_q(c^2 - 4 l^2): the substitution (a,b) -> roots of
    y^2 - cy + l^2 identifies pair counts with representation counts.
    """
    c = np.arange(q, dtype=np.int64)
    return rho_vec(q, c * c - 4 * l * l)


def pair_count_row_brute(l: int, q: int) -> np.ndarray:
    """Direct pair enumeration; oracle for q <= 300."""
    if q > 300:
        raise ValueError("oracle restricted to q <= 300")
    hist = np.zeros(q, dtype=np.int64)
    m = l * l
    for a in range(1, q + 1):
        for b in range(1, q + 1):
            if (a * b - m) % q == 0:
                hist[(a + b) % q] += 1
    return hist


def kloosterman_row(l: int, q: int) -> np.ndarray:
    """S(l^2, n, n; q) for all residues n mod q, via FFT of the pair counts.

    The row is real (pair counts are even in c) and periodic in n.
    """
    hist = pair_count_row(l, q)
    row = np.fft.fft(hist.astype(np.float64))
    assert np.max(np.abs(row.imag)) <= 1e-6 * (1 + np.max(np.abs(row.real)))
    return row.real
