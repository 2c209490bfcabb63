"""Exact scalars: rational functions in v with a polynomial dependence on a.

``RationalV`` is an element of Q(v) written as ``v^offset * num(v) / den(v)``
with integer-exponent canonical form: num has nonzero constant term (unless
zero), den is monic with nonzero constant term, gcd(num, den) = 1.

``LaurentScalar`` is a polynomial in ``a`` with ``RationalV`` coefficients;
this is where Ocneanu trace values live.  ``q`` abbreviates ``v^2``.
"""

from __future__ import annotations

import dataclasses

from gmpy2 import mpq

Poly = tuple  # dense coefficient tuple, index = exponent

_ZERO = mpq(0)
_ONE = mpq(1)


def _trim(c: list) -> Poly:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (_ZERO,)


def _padd(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return _trim([
        (f[i] if i < len(f) else _ZERO) + (g[i] if i < len(g) else _ZERO)
        for i in range(n)
    ])


def _pneg(f: Poly) -> Poly:
    return tuple(-c for c in f)


def _pmul(f: Poly, g: Poly) -> Poly:
    if f == (_ZERO,) or g == (_ZERO,):
        return (_ZERO,)
    out = [_ZERO] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b != 0:
                out[i + j] += a * b
    return _trim(out)


def _pdivmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if g == (_ZERO,):
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    q = [_ZERO] * max(1, len(f) - len(g) + 1)
    dg, lg = len(g) - 1, g[-1]
    while len(r) - 1 >= dg and any(c != 0 for c in r):
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dg:
            break
        c = r[-1] / lg
        k = len(r) - 1 - dg
        q[k] = c
        for i in range(len(g)):
            r[k + i] -= c * g[i]
        r.pop()
    return _trim(q), _trim(r)


def _pgcd(f: Poly, g: Poly) -> Poly:
    while g != (_ZERO,):
        f, g = g, _pdivmod(f, g)[1]
    if f == (_ZERO,):
        return (_ZERO,)
    return tuple(c / f[-1] for c in f)  # monic


@dataclasses.dataclass(frozen=True)
class RationalV:
    """v^offset * num/den in canonical form."""

    offset: int
    num: Poly
    den: Poly

    # -- constructors --------------------------------------------------------

    @staticmethod
    def make(num: Poly, den: Poly, offset: int = 0) -> "RationalV":
        num = _trim(list(num))
        den = _trim(list(den))
        if den == (_ZERO,):
            raise ZeroDivisionError("zero denominator")
        if num == (_ZERO,):
            return RV_ZERO
        # pull v-powers out of num and den into the offset
        i = next(k for k, c in enumerate(num) if c != 0)
        j = next(k for k, c in enumerate(den) if c != 0)
        num, den, offset = num[i:], den[j:], offset + i - j
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        lc = den[-1]
        num = tuple(c / lc for c in num)
        den = tuple(c / lc for c in den)
        return RationalV(offset, num, den)

    @staticmethod
    def from_int(k) -> "RationalV":
        return RationalV.make((mpq(k),), (_ONE,))

    @staticmethod
    def v_power(k: int) -> "RationalV":
        return RationalV.make((_ONE,), (_ONE,), k)

    # -- arithmetic ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num == (_ZERO,)

    def __add__(self, other: "RationalV") -> "RationalV":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        off = min(self.offset, other.offset)
        a = _pmul(_vshift(self.num, self.offset - off), other.den)
        b = _pmul(_vshift(other.num, other.offset - off), self.den)
        return RationalV.make(_padd(a, b), _pmul(self.den, other.den), off)

    def __neg__(self) -> "RationalV":
        return RationalV(self.offset, _pneg(self.num), self.den)

    def __sub__(self, other: "RationalV") -> "RationalV":
        return self + (-other)

    def __mul__(self, other: "RationalV") -> "RationalV":
        if self.is_zero() or other.is_zero():
            return RV_ZERO
        return RationalV.make(
            _pmul(self.num, other.num),
            _pmul(self.den, other.den),
            self.offset + other.offset,
        )

    def __truediv__(self, other: "RationalV") -> "RationalV":
        if other.is_zero():
            raise ZeroDivisionError
        return RationalV.make(
            _pmul(self.num, other.den),
            _pmul(self.den, other.num),
            self.offset - other.offset,
        )

    def inverse(self) -> "RationalV":
        return RV_ONE / self

    def series(self, lo: int, hi: int) -> dict[int, mpq]:
        """Power-series coefficients of v^e for lo <= e <= hi."""
        inv_len = hi - self.offset + 1
        if inv_len <= 0:
            return {}
        # invert den as a power series (den[0] != 0 by canonical form)
        inv = [_ZERO] * inv_len
        inv[0] = 1 / self.den[0]
        for k in range(1, inv_len):
            acc = _ZERO
            for i in range(1, min(k, len(self.den) - 1) + 1):
                acc += self.den[i] * inv[k - i]
            inv[k] = -acc / self.den[0]
        out = {}
        for i, c in enumerate(self.num):
            if c == 0:
                continue
            for k in range(inv_len - i):
                e = self.offset + i + k
                if lo <= e <= hi and inv[k] != 0:
                    out[e] = out.get(e, _ZERO) + c * inv[k]
        return {e: c for e, c in out.items() if c != 0}

    def __str__(self) -> str:
        def fmt(p: Poly, off: int) -> str:
            terms = []
            for e, c in enumerate(p):
                if c == 0:
                    continue
                ee = e + off
                if ee == 0:
                    terms.append(str(c))
                elif ee == 1:
                    terms.append(f"{c}*v" if c != 1 else "v")
                else:
                    terms.append(f"{c}*v^{ee}" if c != 1 else f"v^{ee}")
            return " + ".join(terms) if terms else "0"

        if self.den == (_ONE,):
            return fmt(self.num, self.offset)
        return f"({fmt(self.num, self.offset)})/({fmt(self.den, 0)})"


def _vshift(p: Poly, k: int) -> Poly:
    assert k >= 0
    return ((_ZERO,) * k + p) if k else p


RV_ZERO = RationalV(0, (_ZERO,), (_ONE,))
RV_ONE = RationalV(0, (_ONE,), (_ONE,))


@dataclasses.dataclass(frozen=True)
class LaurentScalar:
    """Laurent polynomial in a over Q(v).

    ``a_coeffs[i]`` is the coefficient of ``a^(a_offset + i)``.  Canonical
    form: first and last coefficients nonzero, except zero = ``((0,), 0)``.
    """

    a_coeffs: tuple[RationalV, ...]
    a_offset: int = 0

    @staticmethod
    def make(coeffs, offset: int = 0) -> "LaurentScalar":
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        while len(coeffs) > 1 and coeffs[0].is_zero():
            coeffs.pop(0)
            offset += 1
        if not coeffs or coeffs == [RV_ZERO]:
            return LaurentScalar((RV_ZERO,), 0)
        return LaurentScalar(tuple(coeffs), offset)

    @staticmethod
    def from_rational_v(r: RationalV) -> "LaurentScalar":
        return LaurentScalar.make((r,))

    @staticmethod
    def from_int(k) -> "LaurentScalar":
        return LaurentScalar.make((RationalV.from_int(k),))

    @staticmethod
    def v_power(k: int) -> "LaurentScalar":
        return LaurentScalar((RationalV.v_power(k),), 0)

    @staticmethod
    def a_power(k: int) -> "LaurentScalar":
        return LaurentScalar((RV_ONE,), k)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.a_coeffs)

    def a_coefficient(self, k: int) -> RationalV:
        i = k - self.a_offset
        if 0 <= i < len(self.a_coeffs):
            return self.a_coeffs[i]
        return RV_ZERO

    def a_degree(self) -> int:
        return self.a_offset + len(self.a_coeffs) - 1

    def a_support(self) -> range:
        return range(self.a_offset, self.a_offset + len(self.a_coeffs))

    def __add__(self, other: "LaurentScalar") -> "LaurentScalar":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.a_offset, other.a_offset)
        hi = max(self.a_degree(), other.a_degree())
        return LaurentScalar.make(
            (self.a_coefficient(k) + other.a_coefficient(k) for k in range(lo, hi + 1)),
            lo,
        )

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar(tuple(-c for c in self.a_coeffs), self.a_offset)

    def __sub__(self, other: "LaurentScalar") -> "LaurentScalar":
        return self + (-other)

    def __mul__(self, other: "LaurentScalar") -> "LaurentScalar":
        out = [RV_ZERO] * (len(self.a_coeffs) + len(other.a_coeffs) - 1)
        for i, x in enumerate(self.a_coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.a_coeffs):
                out[i + j] = out[i + j] + x * y
        return LaurentScalar.make(out, self.a_offset + other.a_offset)

    def __truediv__(self, other: "LaurentScalar") -> "LaurentScalar":
        if len(other.a_coeffs) != 1:
            raise ValueError("can only divide by a-monomial scalars")
        d = other.a_coeffs[0]
        return LaurentScalar.make(
            (c / d for c in self.a_coeffs), self.a_offset - other.a_offset
        )

    def __str__(self) -> str:
        terms = []
        for k, c in zip(self.a_support(), self.a_coeffs):
            if c.is_zero():
                continue
            if k == 0:
                terms.append(str(c))
            else:
                suffix = "a" if k == 1 else f"a^{k}"
                terms.append(f"({c})*{suffix}")
        return " + ".join(terms) if terms else "0"


ZERO = LaurentScalar.from_int(0)
ONE = LaurentScalar.from_int(1)
A = LaurentScalar.a_power(1)
V = LaurentScalar.v_power(1)
V_INV = LaurentScalar.v_power(-1)
Q = LaurentScalar.v_power(2)


def v_power(k: int) -> LaurentScalar:
    return LaurentScalar.v_power(k)


def q_power(k: int) -> LaurentScalar:
    return LaurentScalar.v_power(2 * k)


def markov_factor() -> LaurentScalar:
    """The trace multiplier (1+a)/(1-q) of a trivial stabilization."""
    return (ONE + A) / (ONE - Q)
