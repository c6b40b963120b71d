"""Exact arithmetic in cyclotomic fields Q(zeta_n) with rational coefficients.

A value is stored as its canonical residue modulo the n-th cyclotomic
polynomial: a coefficient vector of length deg(Phi_n) = phi(n) over exact
rationals.  The normal form makes equality a coefficient comparison (after
lifting both operands to the lcm of their conductors).  No conductor
minimisation is performed and no multiplicative inverse is provided; the
only division is by a nonzero rational.
"""
from __future__ import annotations

import cmath
import re
import threading
from fractions import Fraction
from math import lcm

_ZERO = Fraction(0)
_ONE = Fraction(1)

_poly_cache: dict[int, tuple[int, ...]] = {}
_row_cache: dict[int, list[tuple[Fraction, ...]]] = {}
_cache_lock = threading.Lock()


class NotRationalError(ValueError):
    """Raised when a cyclotomic value with nonzero irrational part is
    coerced to a rational; carries the offending value."""

    def __init__(self, value: "Cyclo"):
        self.value = value
        super().__init__(f"not a rational number: {value}")


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, ascending coefficients
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        c = num[shift + len(den) - 1]
        if c % den[-1]:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        out[shift] = q
        if q:
            for i, d in enumerate(den):
                num[shift + i] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("nonzero remainder in polynomial division")
    return out


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending degree.  Phi_1 = x - 1."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    with _cache_lock:
        got = _poly_cache.get(n)
    if got is not None:
        return got
    # (x^n - 1) divided by the product of Phi_d over proper divisors d of n
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_div_exact(num, list(cyclotomic_polynomial(d)))
    poly = tuple(num)
    with _cache_lock:
        _poly_cache[n] = poly
    return poly


def degree(n: int) -> int:
    """deg Phi_n = phi(n)."""
    return len(cyclotomic_polynomial(n)) - 1


def _power_row(n: int, e: int) -> tuple[Fraction, ...]:
    # canonical residue of x^e modulo Phi_n, for e >= deg Phi_n
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    with _cache_lock:
        rows = _row_cache.setdefault(n, [])
        while len(rows) <= e - d:
            k = d + len(rows)
            if k == d:
                row = tuple(Fraction(-c) for c in phi[:d])
            else:
                prev = rows[-1]
                shifted = [_ZERO] + list(prev[: d - 1])
                top = prev[d - 1]
                if top:
                    head = rows[0]
                    shifted = [a + top * b for a, b in zip(shifted, head)]
                row = tuple(shifted)
            rows.append(row)
        return rows[e - d]


def _reduce(vec: list[Fraction], n: int) -> tuple[Fraction, ...]:
    # reduce a coefficient vector on powers of zeta_n to the canonical residue
    d = degree(n)
    out = list(vec[:d]) + [_ZERO] * max(0, d - len(vec))
    for e in range(d, len(vec)):
        c = vec[e]
        if not c:
            continue
        row = _power_row(n, e)
        for k in range(d):
            r = row[k]
            if r:
                out[k] += c * r
    return tuple(out)


class Cyclo:
    """An element of Q(zeta_conductor) in canonical residue form."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: tuple[Fraction, ...]):
        if len(coeffs) != degree(conductor):
            raise ValueError(
                f"expected {degree(conductor)} coefficients for conductor "
                f"{conductor}, got {len(coeffs)}"
            )
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo values are immutable")

    @staticmethod
    def rational(q) -> "Cyclo":
        return Cyclo(1, (Fraction(q),))

    @staticmethod
    def zero() -> "Cyclo":
        return _RAT_ZERO

    @staticmethod
    def one() -> "Cyclo":
        return _RAT_ONE

    # -- representation changes ------------------------------------------

    def _lifted(self, m: int) -> tuple[Fraction, ...]:
        # coefficient vector of self at conductor m (a multiple of conductor)
        n = self.conductor
        if m == n:
            return self.coeffs
        t = m // n
        vec = [_ZERO] * m
        for i, c in enumerate(self.coeffs):
            if c:
                vec[i * t] += c
        return _reduce(vec, m)

    def at_conductor(self, m: int) -> "Cyclo":
        """The same value expressed in Q(zeta_m); m must be a multiple of
        the current conductor."""
        if m % self.conductor:
            raise ValueError(f"{m} is not a multiple of conductor {self.conductor}")
        return Cyclo(m, self._lifted(m))

    # -- predicates and coercions ----------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotRationalError(self)
        return self.coeffs[0]

    def is_real(self) -> bool:
        return self == self.conj()

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Cyclo | None":
        if isinstance(other, Cyclo):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = lcm(self.conductor, o.conductor)
        a, b = self._lifted(m), o._lifted(m)
        return Cyclo(m, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.conductor == 1:
            q = o.coeffs[0]
            return Cyclo(self.conductor, tuple(c * q for c in self.coeffs))
        if self.conductor == 1:
            q = self.coeffs[0]
            return Cyclo(o.conductor, tuple(c * q for c in o.coeffs))
        m = lcm(self.conductor, o.conductor)
        a, b = self._lifted(m), o._lifted(m)
        prod = [_ZERO] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclo(m, _reduce(prod, m))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclo):
            other = other.to_rational()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        q = Fraction(other)
        if not q:
            raise ZeroDivisionError("division of a cyclotomic value by zero")
        return self * (1 / q)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = _RAT_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def conj(self) -> "Cyclo":
        """Complex conjugate: zeta -> zeta^(-1)."""
        n = self.conductor
        if n <= 2:
            return self
        vec = [_ZERO] * n
        for i, c in enumerate(self.coeffs):
            if c:
                vec[(n - i) % n] += c
        return Cyclo(n, _reduce(vec, n))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.conductor == o.conductor:
            return self.coeffs == o.coeffs
        m = lcm(self.conductor, o.conductor)
        return self._lifted(m) == o._lifted(m)

    __hash__ = None  # values at different conductors compare equal; no hashing

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        return format_cyclo(self)

    def __repr__(self) -> str:
        return f"<Cyclo {format_cyclo(self)}>"

    def approx(self) -> complex:
        """Debug-only floating approximation; never used in any verdict."""
        n = self.conductor
        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * i / n)
            for i, c in enumerate(self.coeffs)
            if c
        ) or complex(0)


_RAT_ZERO = Cyclo(1, (_ZERO,))
_RAT_ONE = Cyclo(1, (_ONE,))

_root_cache: dict[tuple[int, int], Cyclo] = {}


def cyclo_root(n: int, k: int = 1) -> Cyclo:
    """zeta_n^k as an exact value."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    k %= n
    key = (n, k)
    got = _root_cache.get(key)
    if got is not None:
        return got
    d = degree(n)
    if k < d:
        coeffs = tuple(_ONE if i == k else _ZERO for i in range(d))
        z = Cyclo(n, coeffs)
    else:
        z = Cyclo(n, _power_row(n, k))
    _root_cache[key] = z
    return z


def cyclo_conj(z: Cyclo) -> Cyclo:
    return z.conj()


def cyclo_to_rational(z: Cyclo) -> Fraction:
    return z.to_rational()


def cyclo_sum(values) -> Cyclo:
    out = _RAT_ZERO
    for v in values:
        out = out + v
    return out


# -- literal grammar -------------------------------------------------------
#
#   expr := ["-"] term (("+" | "-") term)*
#   term := rat | [rat "*"] "E(" int ")" ["^" int]
#   rat  := int ["/" int]
#
# E(n) denotes zeta_n.  format_cyclo emits the canonical residue with
# exponents ascending, so parse(format(z)) == z for every value.

_TOKEN = re.compile(r"\s*(E\(\d+\)|\d+|[+\-*/^])")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad cyclotomic literal at {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_cyclo(text: str) -> Cyclo:
    """Parse a cyclotomic literal such as '1/2', '-E(5)^2-E(5)^3' or '3*E(4)'."""
    toks = _tokenize(text)
    if not toks:
        raise ValueError("empty cyclotomic literal")
    pos = 0
    total = _RAT_ZERO

    def take_int() -> int:
        nonlocal pos
        if pos >= len(toks) or not toks[pos].isdigit():
            raise ValueError(f"expected integer in literal {text!r}")
        val = int(toks[pos])
        pos += 1
        return val

    while pos < len(toks):
        sign = 1
        while pos < len(toks) and toks[pos] in "+-":
            if toks[pos] == "-":
                sign = -sign
            pos += 1
        if pos >= len(toks):
            raise ValueError(f"dangling sign in literal {text!r}")
        coeff = _ONE
        root: Cyclo | None = None
        if toks[pos].isdigit():
            num = take_int()
            den = 1
            if pos < len(toks) and toks[pos] == "/":
                pos += 1
                den = take_int()
            coeff = Fraction(num, den)
            if pos < len(toks) and toks[pos] == "*":
                pos += 1
                if pos >= len(toks) or not toks[pos].startswith("E("):
                    raise ValueError(f"expected E(n) after '*' in {text!r}")
        if pos < len(toks) and toks[pos].startswith("E("):
            n = int(toks[pos][2:-1])
            pos += 1
            k = 1
            if pos < len(toks) and toks[pos] == "^":
                pos += 1
                k = take_int()
            root = cyclo_root(n, k)
        term = Cyclo.rational(sign * coeff)
        if root is not None:
            term = term * root
        total = total + term
    return total


def _format_rat(q: Fraction) -> str:
    return str(q)


def format_cyclo(z: Cyclo) -> str:
    """Canonical literal for a value: exponents ascending, '0' for zero."""
    n = z.conductor
    parts: list[str] = []
    for k, c in enumerate(z.coeffs):
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _format_rat(mag)
        elif mag == 1:
            body = f"E({n})" if k == 1 else f"E({n})^{k}"
        else:
            e = f"E({n})" if k == 1 else f"E({n})^{k}"
            body = f"{_format_rat(mag)}*{e}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"-{body}" if neg else f"+{body}")
    return "".join(parts) if parts else "0"
