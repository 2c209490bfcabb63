"""Multivariate polynomials over Q with exact mpq coefficients.

A polynomial in ``nvars`` variables is a dict from exponent tuples to mpq,
wrapped in ``Poly``.  Generators carry degree 2 (the grading used for the
polynomial rings acting on Soergel bimodules), so the graded degree of a
monomial is twice its total exponent.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Iterable, Sequence

from gmpy2 import mpq

_ZERO = mpq(0)
_ONE = mpq(1)


@dataclasses.dataclass(frozen=True)
class Poly:
    """Polynomial: mapping exponent tuple -> nonzero mpq coefficient.

    >>> x, y = Poly.variable(0, 2), Poly.variable(1, 2)
    >>> str((x + y) * (x - y))
    'x1^2 - x2^2'
    """

    nvars: int
    terms: tuple  # sorted tuple of (exponents, coefficient)

    @staticmethod
    def make(nvars: int, coeffs: dict) -> "Poly":
        items = tuple(
            sorted(((e, c) for e, c in coeffs.items() if c != 0), reverse=True)
        )
        return Poly(nvars, items)

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly(nvars, ())

    @staticmethod
    def constant(nvars: int, c) -> "Poly":
        return Poly.make(nvars, {(0,) * nvars: mpq(c)})

    @staticmethod
    def one(nvars: int) -> "Poly":
        return Poly.constant(nvars, 1)

    @staticmethod
    def variable(i: int, nvars: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return Poly(nvars, ((tuple(e), _ONE),))

    @staticmethod
    def monomial(exponents: Sequence[int], c=1) -> "Poly":
        return Poly.make(len(exponents), {tuple(exponents): mpq(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: Sequence[int]):
        for e, c in self.terms:
            if e == tuple(exponents):
                return c
        return _ZERO

    def degree(self) -> int:
        """Graded degree (2 per exponent unit); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return 2 * max(sum(e) for e, _ in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e, _ in self.terms}) <= 1

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for e, c in other.terms:
            out[e] = out.get(e, _ZERO) + c
        return Poly.make(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, _ZERO) + c1 * c2
        return Poly.make(self.nvars, out)

    def scale(self, c) -> "Poly":
        c = mpq(c)
        if c == 0:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, tuple((e, c * x) for e, x in self.terms))

    def __pow__(self, k: int) -> "Poly":
        out = Poly.one(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Evaluate at polynomials (or at anything with *, +, scale)."""
        return evaluate(self, images, Poly.one(images[0].nvars))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.terms:
            vs = "*".join(
                f"x{i + 1}" + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e)
                if k
            )
            if not vs:
                bits.append(str(c))
            elif c == 1:
                bits.append(vs)
            elif c == -1:
                bits.append(f"-{vs}")
            else:
                bits.append(f"{c}*{vs}")
        return " + ".join(bits).replace("+ -", "- ")


def evaluate(f: Poly, images: Sequence, one):
    """f at commuting values (polynomials, matrices, ...).

    ``images[i]`` replaces the i-th variable; ``one`` is the multiplicative
    unit of the target.  Values must support ``*``, ``+`` and ``.scale``.
    """
    total = None
    for e, c in f.terms:
        term = one
        for i, k in enumerate(e):
            for _ in range(k):
                term = term * images[i]
        term = term.scale(c)
        total = term if total is None else total + term
    if total is None:
        return one.scale(0)
    return total


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples of graded degree ``degree`` (empty unless even >= 0).

    >>> monomials_of_degree(2, 4)
    [(0, 2), (1, 1), (2, 0)]
    """
    if degree < 0 or degree % 2:
        return []
    total = degree // 2
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for k in range(remaining + 1):
            rec(prefix + [k], remaining - k, slots - 1)

    if nvars == 0:
        return [()] if total == 0 else []
    rec([], total, nvars)
    return out


def elementary_symmetric(nvars: int, k: int) -> Poly:
    """e_k(x_1, ..., x_n).

    >>> str(elementary_symmetric(3, 2))
    'x1*x2 + x1*x3 + x2*x3'
    """
    out: dict = {}
    for subset in itertools.combinations(range(nvars), k):
        e = [0] * nvars
        for i in subset:
            e[i] = 1
        out[tuple(e)] = _ONE
    return Poly.make(nvars, out)


def complete_homogeneous(nvars: int, k: int) -> Poly:
    """h_k(x_1, ..., x_n): all monomials of exponent-degree k."""
    return Poly.make(
        nvars, {e: _ONE for e in monomials_of_degree(nvars, 2 * k)}
    )
