"""Quantum-integer combinatorics over Z[A^{±1}].

Conventions (balanced variable 𝔮 = A^2, q-series variable q = A^4):

    [n]  = (𝔮^n - 𝔮^-n)/(𝔮 - 𝔮^-1)        {n} = 𝔮^n - 𝔮^-n
    [n]! = [n][n-1]...[1]                  {n}! analogous
    (x;q)_k = prod_{j=0}^{k-1} (1 - x q^j)     with (x;q)_0 = 1

The Pochhammer product runs j = 0..k-1 (so the q-binomial degenerates
correctly at k = 0); the balanced binomial [n i] equals {n}!/({i}!{n-i}!).
"""

from __future__ import annotations

import threading

from .errors import IndexOutOfRange, NotAdmissible
from .laurent import LaurentPoly

_ONE = LaurentPoly.one()
_ZERO = LaurentPoly.zero()


def brace(n: int) -> LaurentPoly:
    """{n} = 𝔮^n - 𝔮^-n; odd in n, zero at n = 0."""
    if n == 0:
        return _ZERO
    return LaurentPoly({2 * n: 1, -2 * n: -1})


def bracket(n: int) -> LaurentPoly:
    """[n] = {n}/{1}; [0] = 0, [1] = 1, odd in n."""
    if n == 0:
        return _ZERO
    return brace(n).exact_div(brace(1))


def framing_mu(i: int) -> LaurentPoly:
    """Twist-map eigenvalue on the i-th Chebyshev element: (-1)^i A^(i^2+2i)."""
    if i < 0:
        raise IndexOutOfRange("framing factor needs i >= 0")
    return LaurentPoly.monomial(i * (i + 2), -1 if i & 1 else 1)


def framing_mu_power(i: int, p: int) -> LaurentPoly:
    """mu_i^p for any integer p (mu_i is a unit monomial)."""
    if i < 0:
        raise IndexOutOfRange("framing factor needs i >= 0")
    return LaurentPoly.monomial(p * i * (i + 2), -1 if (i & 1) and (p & 1) else 1)


def half_twist_delta(c: int, a: int, b: int) -> LaurentPoly:
    """Scalar by which a half twist acts on strands a, b fused into c.

    delta(c;a,b) = (-1)^((a+b-c)/2) A^(-a-b+c-(a^2+b^2-c^2)/2) for an
    admissible triple; NotAdmissible otherwise.
    """
    if min(a, b, c) < 0 or (a + b + c) % 2 or not abs(a - b) <= c <= a + b:
        raise NotAdmissible(f"triple (a={a}, b={b}, c={c}) is not admissible")
    sign = -1 if ((a + b - c) // 2) & 1 else 1
    exponent = -a - b + c - (a * a + b * b - c * c) // 2
    return LaurentPoly.monomial(exponent, sign)


class QSymbolCache:
    """Per-instance memo tables for the factorial/Pochhammer symbols.

    Cached values are structurally equal to recomputed ones; correctness
    never depends on a hit.  ``max_index`` bounds the tables to guard
    against runaway indices.
    """

    def __init__(self, max_index: int = 4096) -> None:
        self.max_index = max_index
        self._brace_fact: list[LaurentPoly] = [_ONE]
        self._bracket_fact: list[LaurentPoly] = [_ONE]
        self._poch: dict[int, list[LaurentPoly]] = {}
        self._qbinom: dict[tuple[int, int], LaurentPoly] = {}
        self._qbinom_balanced: dict[tuple[int, int], LaurentPoly] = {}
        self._lock = threading.Lock()  # guards table growth for shared use

    def _check(self, n: int) -> None:
        if n > self.max_index:
            raise IndexOutOfRange(f"index {n} exceeds cache bound {self.max_index}")

    def brace_fact(self, n: int) -> LaurentPoly:
        """{n}! with {0}! = 1."""
        if n < 0:
            raise IndexOutOfRange("factorial needs n >= 0")
        self._check(n)
        table = self._brace_fact
        if len(table) <= n:
            with self._lock:
                while len(table) <= n:
                    table.append(table[-1] * brace(len(table)))
        return table[n]

    def bracket_fact(self, n: int) -> LaurentPoly:
        """[n]! with [0]! = 1."""
        if n < 0:
            raise IndexOutOfRange("factorial needs n >= 0")
        self._check(n)
        table = self._bracket_fact
        if len(table) <= n:
            with self._lock:
                while len(table) <= n:
                    table.append(table[-1] * bracket(len(table)))
        return table[n]

    def brace_fact_ratio(self, n: int, m: int) -> LaurentPoly:
        """{n}!/{m}! = {n}{n-1}...{m+1} for n >= m >= 0."""
        if not 0 <= m <= n:
            raise IndexOutOfRange(f"factorial ratio needs 0 <= m <= n, got {n}, {m}")
        self._check(n)
        out = _ONE
        for j in range(m + 1, n + 1):
            out = out * brace(j)
        return out

    def pochhammer(self, a: int, k: int) -> LaurentPoly:
        """(q^a; q)_k = prod_{j=0}^{k-1} (1 - q^(a+j))."""
        if k < 0:
            raise IndexOutOfRange("Pochhammer length must be >= 0")
        self._check(k)
        table = self._poch.setdefault(a, [_ONE])
        if len(table) <= k:
            with self._lock:
                while len(table) <= k:
                    j = len(table) - 1
                    factor = _ONE - LaurentPoly.monomial(4 * (a + j))
                    table.append(table[-1] * factor)
        return table[k]

    def pochhammer_ratio(self, a: int, k: int, j: int) -> LaurentPoly:
        """(q^a;q)_k / (q^a;q)_j = prod_{t=j}^{k-1} (1 - q^(a+t)) for k >= j."""
        if not 0 <= j <= k:
            raise IndexOutOfRange(f"Pochhammer ratio needs 0 <= j <= k, got {k}, {j}")
        self._check(k)
        out = _ONE
        for t in range(j, k):
            out = out * (_ONE - LaurentPoly.monomial(4 * (a + t)))
        return out

    def qbinom(self, n: int, i: int) -> LaurentPoly:
        """Gaussian binomial (q;q)_n/((q;q)_i (q;q)_{n-i}); 0 out of range."""
        if n < 0:
            raise IndexOutOfRange("q-binomial needs n >= 0")
        if i < 0 or i > n:
            return _ZERO
        key = (n, min(i, n - i))
        value = self._qbinom.get(key)
        if value is None:
            num = self.pochhammer(1, n)
            den = self.pochhammer(1, key[1]) * self.pochhammer(1, n - key[1])
            value = num.exact_div(den)
            self._qbinom[key] = value
        return value

    def qbinom_balanced(self, n: int, i: int) -> LaurentPoly:
        """Balanced binomial [n i] = {n}!/({i}!{n-i}!); 0 out of range."""
        if n < 0:
            raise IndexOutOfRange("balanced binomial needs n >= 0")
        if i < 0 or i > n:
            return _ZERO
        key = (n, min(i, n - i))
        value = self._qbinom_balanced.get(key)
        if value is None:
            num = self.brace_fact(n)
            den = self.brace_fact(key[1]) * self.brace_fact(n - key[1])
            value = num.exact_div(den)
            self._qbinom_balanced[key] = value
        return value

    def cyclo_block(self, N: int, k: int) -> LaurentPoly:
        """The cyclotomic expansion block {N+k}!/({N-1-k}!{N})."""
        if N < 1:
            raise IndexOutOfRange("color N must be >= 1")
        if not 0 <= k <= N - 1:
            raise IndexOutOfRange(f"cyclotomic block needs 0 <= k < N, got k={k}, N={N}")
        num = self.brace_fact(N + k)
        den = self.brace_fact(N - 1 - k) * brace(N)
        return num.exact_div(den)


def brace_fact(n: int, cache: QSymbolCache | None = None) -> LaurentPoly:
    return (cache or QSymbolCache()).brace_fact(n)


def bracket_fact(n: int, cache: QSymbolCache | None = None) -> LaurentPoly:
    return (cache or QSymbolCache()).bracket_fact(n)


def pochhammer(a: int, k: int, cache: QSymbolCache | None = None) -> LaurentPoly:
    return (cache or QSymbolCache()).pochhammer(a, k)


def qbinom(n: int, i: int, cache: QSymbolCache | None = None) -> LaurentPoly:
    return (cache or QSymbolCache()).qbinom(n, i)


def qbinom_balanced(n: int, i: int, cache: QSymbolCache | None = None) -> LaurentPoly:
    return (cache or QSymbolCache()).qbinom_balanced(n, i)


def cyclo_block(N: int, k: int, cache: QSymbolCache | None = None) -> LaurentPoly:
    return (cache or QSymbolCache()).cyclo_block(N, k)
