"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored as rational polynomials in zeta_n reduced modulo the
n-th cyclotomic polynomial, i.e. on the power basis
{1, zeta, ..., zeta^(phi(n)-1)}.  This basis gives a unique coefficient
vector per conductor; equality across conductors embeds both sides into
the least common conductor.  Coefficients are a common-denominator
integer map, so character-table arithmetic (algebraic integers) stays in
pure integer arithmetic.

No floating point is used anywhere; `approx_complex` exists for display
only and is clearly marked inexact.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "Cyclotomic", "root_of_unity", "rational", "integer", "zero", "one",
    "NotAnIntegerError",
]


class NotAnIntegerError(ValueError):
    """to_integer was called on a value that is not a rational integer."""


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending, monic, exact integers."""
    if n == 1:
        return (-1, 1)
    # divide x^n - 1 by the product of Phi_d over proper divisors d of n
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        assert c % den[dd] == 0
        q = c // den[dd]
        out[i - dd] = q
        for j, dc in enumerate(den):
            num[i - dd + j] -= q * dc
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row m-phi(n) expresses zeta_n^m on the power basis, for m in [phi, n)."""
    phi = _phi(n)
    poly = cyclotomic_polynomial(n)
    rows: list[tuple[int, ...]] = []
    # zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1})
    current = [-c for c in poly[:phi]]
    for _ in range(phi, n):
        rows.append(tuple(current))
        shifted = [0] + current[:-1]
        top = current[-1]
        if top:
            for i in range(phi):
                shifted[i] -= top * poly[i]
        current = shifted
    return tuple(rows)


def _reduce(n: int, terms: dict[int, int]) -> dict[int, int]:
    """Reduce an integer combination of zeta_n powers to the power basis."""
    phi = _phi(n)
    dense = [0] * phi
    pending: dict[int, int] = {}
    for e, c in terms.items():
        e %= n
        if e < phi:
            dense[e] += c
        else:
            pending[e] = pending.get(e, 0) + c
    if pending:
        rows = _reduction_rows(n)
        for e, c in pending.items():
            if c == 0:
                continue
            row = rows[e - phi]
            for i in range(phi):
                if row[i]:
                    dense[i] += c * row[i]
    return {i: c for i, c in enumerate(dense) if c}


class Cyclotomic:
    """An exact element of Q(zeta_n); immutable."""

    __slots__ = ("n", "num", "den", "_min_key")

    def __init__(self, n: int, num: dict[int, int], den: int = 1,
                 _reduced: bool = False):
        if n < 1 or den == 0:
            raise ValueError("invalid conductor or denominator")
        if not _reduced:
            num = _reduce(n, num)
        num = {e: c for e, c in num.items() if c}
        if den < 0:
            den = -den
            num = {e: -c for e, c in num.items()}
        g = den
        for c in num.values():
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = {e: c // g for e, c in num.items()}
        if not num:
            n, den = 1, 1
        elif set(num) == {0}:
            n = 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_min_key", None)

    def __setattr__(self, *a):
        raise AttributeError("Cyclotomic is immutable")

    # -- conversions ------------------------------------------------------

    def embed(self, m: int) -> "Cyclotomic":
        """The same value viewed in Q(zeta_m); requires n | m."""
        if m % self.n:
            raise ValueError(f"conductor {self.n} does not divide {m}")
        if m == self.n:
            return self
        k = m // self.n
        return Cyclotomic(m, {e * k: c for e, c in self.num.items()}, self.den)

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_rational(self) -> bool:
        return self.n == 1

    @property
    def is_integer(self) -> bool:
        return self.n == 1 and self.den == 1

    def to_fraction(self) -> Fraction:
        if self.n != 1:
            raise NotAnIntegerError(f"{self} is not rational")
        return Fraction(self.num.get(0, 0), self.den)

    def to_integer(self) -> int:
        if not self.is_integer:
            raise NotAnIntegerError(f"{self} is not a rational integer")
        return self.num.get(0, 0)

    # -- arithmetic ---------------------------------------------------------

    def _common(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic", int]:
        """Both values at a common conductor (zero may normalize to n=1)."""
        if self.n == other.n:
            return self, other, self.n
        m = self.n * other.n // gcd(self.n, other.n)
        return self.embed(m), other.embed(m), m

    def __add__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        a, b, m = self._common(other)
        num = {e: c * b.den for e, c in a.num.items()}
        for e, c in b.num.items():
            num[e] = num.get(e, 0) + c * a.den
        return Cyclotomic(m, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.n, {e: -c for e, c in self.num.items()},
                          self.den, _reduced=True)

    def __sub__(self, other) -> "Cyclotomic":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Cyclotomic":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        a, b, m = self._common(other)
        num: dict[int, int] = {}
        for e1, c1 in a.num.items():
            for e2, c2 in b.num.items():
                e = e1 + e2
                num[e] = num.get(e, 0) + c1 * c2
        return Cyclotomic(m, num, a.den * b.den)

    __rmul__ = __mul__

    def scale(self, q: Fraction | int) -> "Cyclotomic":
        q = Fraction(q)
        return Cyclotomic(self.n,
                          {e: c * q.numerator for e, c in self.num.items()},
                          self.den * q.denominator, _reduced=True)

    def galois(self, j: int) -> "Cyclotomic":
        """Apply the Galois automorphism zeta -> zeta^j (gcd(j, n) = 1)."""
        if gcd(j, self.n) != 1:
            raise ValueError(f"{j} is not coprime to the conductor {self.n}")
        return Cyclotomic(self.n,
                          {(e * j) % self.n: c for e, c in self.num.items()},
                          self.den)

    def conj(self) -> "Cyclotomic":
        """Complex conjugation: zeta^k -> zeta^(n-k)."""
        return self.galois(self.n - 1) if self.n > 1 else self

    # -- canonical form -----------------------------------------------------

    def _minimal(self) -> tuple[int, int, tuple[tuple[int, int], ...]]:
        """Canonical key (conductor, den, coeffs) at the least conductor."""
        if self._min_key is None:
            reduced = self.reduce_conductor()
            key = (reduced.n, reduced.den,
                   tuple(sorted(reduced.num.items())))
            object.__setattr__(self, "_min_key", key)
        return self._min_key

    def reduce_conductor(self) -> "Cyclotomic":
        """The same value written at its minimal conductor."""
        if self.n == 1:
            return self
        for m in _divisors(self.n):
            if m == self.n:
                return self
            coeffs = _rewrite(self.n, m, self.num)
            if coeffs is not None:
                return Cyclotomic(m, coeffs, self.den, _reduced=True)
        raise AssertionError("unreachable")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.n == other.n:
            return self.num == other.num and self.den == other.den
        a, b, _ = self._common(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self) -> int:
        return hash(self._minimal())

    # -- display ------------------------------------------------------------

    def e_string(self) -> str:
        """Canonical "E(n)^k" combination string at the minimal conductor."""
        v = self.reduce_conductor()
        if v.n == 1:
            return _frac_str(Fraction(v.num.get(0, 0), v.den))
        # prefer the single-term form c*E(n)^k when the value is a
        # rational multiple of a root of unity
        for k in range(1, v.n):
            t = v * root_of_unity(v.n, v.n - k)
            if t.is_rational:
                q = t.to_fraction()
                base = f"E({v.n})" if k == 1 else f"E({v.n})^{k}"
                if q == 1:
                    return base
                if q == -1:
                    return "-" + base
                return f"{_frac_str(q)}*{base}"
        parts = []
        for e, c in sorted(v.num.items()):
            q = Fraction(c, v.den)
            if e == 0:
                term = _frac_str(abs(q))
            else:
                base = f"E({v.n})" if e == 1 else f"E({v.n})^{e}"
                term = base if abs(q) == 1 else f"{_frac_str(abs(q))}*{base}"
            sign = "-" if q < 0 else "+"
            parts.append((sign, term))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            out += sign + term
        return out

    def approx_complex(self) -> complex:
        """Floating-point approximation; inexact, display only."""
        z = 0j
        for e, c in self.num.items():
            z += c * cmath.exp(2j * cmath.pi * e / self.n)
        return z / self.den

    def __repr__(self) -> str:
        return f"Cyclotomic({self.e_string()})"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _coerce(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, int):
        return Cyclotomic(1, {0: x}, 1, _reduced=True)
    if isinstance(x, Fraction):
        return Cyclotomic(1, {0: x.numerator}, x.denominator, _reduced=True)
    raise TypeError(f"cannot interpret {x!r} as a cyclotomic value")


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@lru_cache(maxsize=None)
def _embedding_solver(n: int, m: int):
    """Row-reduced system expressing Q(zeta_m) inside Q(zeta_n)'s basis.

    Returns a function mapping a length-phi(n) rational vector to the
    length-phi(m) coordinate vector over Q(zeta_m), or None if the vector
    is outside the subfield.
    """
    phi_n, phi_m = _phi(n), _phi(m)
    k = n // m
    cols = []
    for i in range(phi_m):
        reduced = _reduce(n, {i * k: 1})
        cols.append([Fraction(reduced.get(j, 0)) for j in range(phi_n)])

    def solve(vec: list[Fraction]):
        # Gaussian elimination on the augmented system cols * a = vec
        rows = [[cols[c][r] for c in range(phi_m)] + [vec[r]]
                for r in range(phi_n)]
        pivots = []
        r = 0
        for c in range(phi_m):
            pivot = next((i for i in range(r, phi_n) if rows[i][c]), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = rows[r][c]
            rows[r] = [x / inv for x in rows[r]]
            for i in range(phi_n):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        sol = [Fraction(0)] * phi_m
        for i, c in enumerate(pivots):
            sol[c] = rows[i][-1]
        # consistency: rows beyond the pivots must have zero RHS
        for i in range(r, phi_n):
            if rows[i][-1]:
                return None
        return sol

    return solve


def _rewrite(n: int, m: int, num: dict[int, int]) -> dict[int, int] | None:
    """Rewrite a power-basis numerator from conductor n to m | n, if possible."""
    solve = _embedding_solver(n, m)
    vec = [Fraction(num.get(j, 0)) for j in range(_phi(n))]
    sol = solve(vec)
    if sol is None:
        return None
    # solutions of an integer system with integer input stay integral here
    # because the target basis is a subset of an integral basis; still,
    # guard exactly:
    out = {}
    for e, q in enumerate(sol):
        if q:
            if q.denominator != 1:
                return None
            out[e] = q.numerator
    return out


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k as an exact value."""
    if n < 1:
        raise ValueError("conductor must be positive")
    return Cyclotomic(n, {k % n: 1})


def rational(q: Fraction | int) -> Cyclotomic:
    return _coerce(Fraction(q))


def integer(v: int) -> Cyclotomic:
    return _coerce(int(v))


zero = Cyclotomic(1, {}, 1, _reduced=True)
one = Cyclotomic(1, {0: 1}, 1, _reduced=True)
