"""Iwahori-Hecke algebra H_n, Ocneanu trace, weights, and HOMFLY evaluation.

H_n is generated by t_1 .. t_{n-1} with braid relations and
``t_s^2 = (v - v^-1) t_s + 1``.  Elements are stored in the basis
``t_w, w in S_n``; coefficients are ``LaurentScalar``s.

The trace convention: Tr_1(1) = 1, so the first Markov factor (1+a)/(1-q)
appears when passing from H_1 to H_2.  The weight formula is stated in the
convention Tr_1(1) = (1+a)/(1-q); ``verify_weight_decomposition`` accounts
for the single global factor between the two.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Iterable, Sequence

from khr import braids
from khr.braids import BraidWord
from khr.scalars import (
    A,
    ONE,
    ZERO,
    LaurentScalar,
    RationalV,
    RV_ONE,
    RV_ZERO,
    markov_factor,
    q_power,
    v_power,
)

_Z = v_power(1) - v_power(-1)  # v - v^-1, the quadratic-relation constant


@dataclasses.dataclass
class HeckeElement:
    """Finite Q(v)[a]-combination of basis elements t_w, w in S_n."""

    n: int
    coords: dict[tuple[int, ...], LaurentScalar]

    @staticmethod
    def make(n: int, coords: dict) -> "HeckeElement":
        return HeckeElement(n, {w: c for w, c in coords.items() if not c.is_zero()})

    @staticmethod
    def unit(n: int) -> "HeckeElement":
        return HeckeElement(n, {braids.identity(n): ONE})

    @staticmethod
    def basis(n: int, w: Sequence[int]) -> "HeckeElement":
        return HeckeElement(n, {tuple(w): ONE})

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if self.n != other.n:
            raise ValueError("strand-count mismatch")
        coords = dict(self.coords)
        for w, c in other.coords.items():
            coords[w] = coords.get(w, ZERO) + c
        return HeckeElement.make(self.n, coords)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(LaurentScalar.from_int(-1))

    def scale(self, c: LaurentScalar) -> "HeckeElement":
        return HeckeElement.make(self.n, {w: x * c for w, x in self.coords.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    def times_generator(self, i: int) -> "HeckeElement":
        """Right multiplication by t_{s_i} (i is 1-based)."""
        coords: dict[tuple[int, ...], LaurentScalar] = {}

        def acc(w, c):
            if not c.is_zero():
                coords[w] = coords.get(w, ZERO) + c

        for w, c in self.coords.items():
            ws = braids.right_multiply(w, i)
            if braids.inversions(ws) > braids.inversions(w):
                acc(ws, c)
            else:
                acc(w, c * _Z)
                acc(ws, c)
        return HeckeElement.make(self.n, coords)

    def times_generator_inverse(self, i: int) -> "HeckeElement":
        """Right multiplication by t_{s_i}^{-1} = t_{s_i} - (v - v^-1)."""
        return self.times_generator(i) - self.scale(_Z)


def hecke_multiply(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    if x.n != y.n:
        raise ValueError("strand-count mismatch")
    out = HeckeElement(x.n, {})
    for w, c in y.coords.items():
        term = x
        for i in braids.reduced_word(w):
            term = term.times_generator(i)
        out = out + term.scale(c)
    return out


def braid_to_hecke(b: BraidWord) -> HeckeElement:
    """Image of the braid under sigma_i -> t_{s_i}."""
    x = HeckeElement.unit(b.strand_count)
    for a in b.letters:
        if a > 0:
            x = x.times_generator(a)
        else:
            x = x.times_generator_inverse(-a)
    return x


# -- Ocneanu trace -----------------------------------------------------------

_trace_cache: dict[tuple[int, ...], LaurentScalar] = {}


def _basis_trace(w: tuple[int, ...]) -> LaurentScalar:
    """Tr_n(t_w) by the Markov recursion through the tower H_{n-1} < H_n."""
    n = len(w)
    if n <= 1:
        return ONE
    cached = _trace_cache.get(w)
    if cached is not None:
        return cached
    p = w.index(n - 1)
    if p == n - 1:
        value = markov_factor() * _basis_trace(w[: n - 1])
    else:
        u, tail = braids.coset_normal_form(w)
        # t_w = t_u t_{n-1} t_{tail'}; by cyclicity and the Markov axiom,
        # Tr_n(t_w) = -v^-1 Tr_{n-1}(t_{tail'} t_u).
        rest = HeckeElement.basis(n - 1, u[: n - 1])
        lhs = HeckeElement.unit(n - 1)
        for i in tail[1:]:
            lhs = lhs.times_generator(i)
        value = v_power(-1) * LaurentScalar.from_int(-1) * ocneanu_trace(
            hecke_multiply(lhs, rest)
        )
    _trace_cache[w] = value
    return value


def ocneanu_trace(x: HeckeElement) -> LaurentScalar:
    total = ZERO
    for w, c in x.coords.items():
        total = total + c * _basis_trace(w)
    return total


def trace_coefficient(x: HeckeElement, k: int) -> LaurentScalar:
    """Coefficient of a^k in the Ocneanu trace, as an a-free scalar."""
    return LaurentScalar.from_rational_v(ocneanu_trace(x).a_coefficient(k))


# -- Young diagrams and weights ---------------------------------------------


def partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n, as weakly decreasing tuples."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(largest, remaining), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(n, n, [])
    return out


def conjugate(shape: Sequence[int]) -> tuple[int, ...]:
    if not shape:
        return ()
    return tuple(
        sum(1 for row in shape if row > i) for i in range(shape[0])
    )


def cells(shape: Sequence[int]) -> list[tuple[int, int]]:
    """Cells (i, j) with i the column and j the row index, both from 0."""
    return [(i, j) for j, row in enumerate(shape) for i in range(row)]


def content(cell: tuple[int, int]) -> int:
    i, j = cell
    return i - j


def hook_length(shape: Sequence[int], cell: tuple[int, int]) -> int:
    i, j = cell
    return (shape[j] - i) + (conjugate(shape)[i] - j) - 1


def n_prime(shape: Sequence[int]) -> int:
    """sum_i (i-1) lambda'_i over the rows of the transposed diagram."""
    return sum(i * col for i, col in enumerate(conjugate(shape)))


def weight(shape: Sequence[int]) -> LaurentScalar:
    """Weight W_lambda = q^{n'} prod (1 + a q^{-c}) / (1 - q^{h}).

    Stated in the trace convention with Tr_1(1) = (1+a)/(1-q): the single-box
    weight equals that value.
    """
    w = q_power(n_prime(shape))
    for cell in cells(shape):
        w = w * (ONE + A * q_power(-content(cell)))
        w = w / (ONE - q_power(hook_length(shape, cell)))
    return w


# -- seminormal representations ---------------------------------------------


def standard_tableaux(shape: tuple[int, ...]) -> list[dict[tuple[int, int], int]]:
    """All standard tableaux, as maps cell (i, j) -> entry in 1..n."""
    n = sum(shape)
    if n == 0:
        return [{}]
    out = []
    # remove the largest entry from a removable corner and recurse
    for j, row in enumerate(shape):
        if row and (j == len(shape) - 1 or shape[j + 1] < row):
            smaller = list(shape)
            smaller[j] -= 1
            while smaller and smaller[-1] == 0:
                smaller.pop()
            for tab in standard_tableaux(tuple(smaller)):
                tab = dict(tab)
                tab[(row - 1, j)] = n
                out.append(tab)
    out.sort(key=lambda tab: sorted(tab.items()))
    return out


def _entry_cell(tab: dict, entry: int) -> tuple[int, int]:
    for cell, e in tab.items():
        if e == entry:
            return cell
    raise KeyError(entry)


@dataclasses.dataclass
class SeminormalRep:
    """Matrices for t_{s_1} .. t_{s_{n-1}} on the standard tableaux of a shape."""

    shape: tuple[int, ...]
    basis: list[dict[tuple[int, int], int]]
    generator_matrices: dict[int, list[list[RationalV]]]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return sum(self.shape)


def _rv_q_power(k: int) -> RationalV:
    return RationalV.v_power(2 * k)


_RV_Z = RationalV.v_power(1) - RationalV.v_power(-1)


@functools.cache
def build_seminormal(shape: tuple[int, ...]) -> SeminormalRep:
    """Seminormal representation of H_n labeled by the diagram ``shape``.

    Labeling: the one-row diagram is the rank-one representation where every
    t_s acts by v.  Quadratic and braid relations are asserted at build time.
    """
    n = sum(shape)
    basis = standard_tableaux(shape)
    index = {tuple(sorted(t.items())): k for k, t in enumerate(basis)}
    dim = len(basis)
    mats = {}
    for i in range(1, n):
        m = [[RV_ZERO] * dim for _ in range(dim)]
        for k, tab in enumerate(basis):
            ci = _entry_cell(tab, i)
            cj = _entry_cell(tab, i + 1)
            if ci[1] == cj[1]:  # same row
                m[k][k] = m[k][k] + RationalV.v_power(1)
            elif ci[0] == cj[0]:  # same column
                m[k][k] = m[k][k] - RationalV.v_power(-1)
            else:
                swapped = dict(tab)
                swapped[ci], swapped[cj] = swapped[cj], swapped[ci]
                k2 = index[tuple(sorted(swapped.items()))]
                if k2 < k:
                    continue  # handled when we met the pair from the other side
                rho = content(cj) - content(ci)
                alpha = _RV_Z / (RV_ONE - _rv_q_power(-rho))
                delta = _RV_Z - alpha
                m[k][k] = alpha
                m[k2][k2] = delta
                m[k2][k] = RV_ONE  # column k: image of tab has coefficient 1 at k2
                m[k][k2] = alpha * delta + RV_ONE
        mats[i] = m
    rep = SeminormalRep(shape, basis, mats)
    _assert_hecke_relations(rep)
    return rep


def _mat_mul(a, b):
    dim = len(a)
    return [
        [
            sum((a[r][k] * b[k][c] for k in range(dim)), RV_ZERO)
            for c in range(dim)
        ]
        for r in range(dim)
    ]


def _mat_identity(dim):
    return [[RV_ONE if r == c else RV_ZERO for c in range(dim)] for r in range(dim)]


def _assert_hecke_relations(rep: SeminormalRep) -> None:
    dim = rep.dim
    for i, m in rep.generator_matrices.items():
        sq = _mat_mul(m, m)
        for r in range(dim):
            for c in range(dim):
                expect = _RV_Z * m[r][c] + (RV_ONE if r == c else RV_ZERO)
                assert sq[r][c] == expect, f"quadratic relation fails at s_{i}"
    gens = rep.generator_matrices
    for i in gens:
        for j in gens:
            if j <= i:
                continue
            if j == i + 1:
                lhs = _mat_mul(_mat_mul(gens[i], gens[j]), gens[i])
                rhs = _mat_mul(_mat_mul(gens[j], gens[i]), gens[j])
            else:
                lhs = _mat_mul(gens[i], gens[j])
                rhs = _mat_mul(gens[j], gens[i])
            assert lhs == rhs, f"braid relation fails at s_{i}, s_{j}"


def represent(rep: SeminormalRep, x: HeckeElement):
    """Matrix of x in the representation, over LaurentScalar entries."""
    if x.n != rep.n:
        raise ValueError("strand-count mismatch")
    dim = rep.dim
    total = [[ZERO] * dim for _ in range(dim)]
    for w, c in x.coords.items():
        m = _mat_identity(dim)
        for i in braids.reduced_word(w):
            m = _mat_mul(m, rep.generator_matrices[i])
        for r in range(dim):
            for col in range(dim):
                if not m[r][col].is_zero():
                    total[r][col] = total[r][col] + c * LaurentScalar.from_rational_v(
                        m[r][col]
                    )
    return total


def character(rep: SeminormalRep, x: HeckeElement) -> LaurentScalar:
    m = represent(rep, x)
    total = ZERO
    for k in range(rep.dim):
        total = total + m[k][k]
    return total


def verify_weight_decomposition(n: int) -> bool:
    """Check Tr_n = sum_lambda W_lambda Tr_lambda on the whole t_w basis.

    The weights are in the convention Tr_1(1) = (1+a)/(1-q); our trace uses
    Tr_1(1) = 1, so the comparison carries one global factor (1+a)/(1-q).
    """
    reps = [build_seminormal(shape) for shape in partitions(n)]
    factor = markov_factor()
    for w in itertools.permutations(range(n)):
        lhs = ocneanu_trace(HeckeElement.basis(n, w)) * factor
        rhs = ZERO
        for rep in reps:
            rhs = rhs + weight(rep.shape) * character(
                rep, HeckeElement.basis(n, w)
            )
        if lhs != rhs:
            return False
    return True


# -- Jucys-Murphy identities --------------------------------------------------


def jm_hecke_inverses(n: int) -> list[HeckeElement]:
    """Images of j_0^-1 .. j_{n-1}^-1 in H_n."""
    return [
        braid_to_hecke(braids.jucys_murphy_braid(k, n).inverse()) for k in range(n)
    ]


def elementary_symmetric(k: int, elements: Sequence[HeckeElement]) -> HeckeElement:
    """E_k of pairwise commuting Hecke elements."""
    n = elements[0].n
    if k == 0:
        return HeckeElement.unit(n)
    out = HeckeElement(n, {})
    for subset in itertools.combinations(elements, k):
        term = HeckeElement.unit(n)
        for e in subset:
            term = hecke_multiply(term, e)
        out = out + term
    return out


def jm_elementary_identity(x: HeckeElement, k: int) -> bool:
    """Tr^{(k)}(x) == Tr^{(0)}(x E_k(j_0^-1, ..., j_{n-1}^-1)), exactly.

    The identity lives in the convention Tr_1(1) = (1+a)/(1-q); rescaling
    by (1+a)/(1-q) mixes a-degrees, so both sides are taken there.
    """
    n = x.n
    factor = markov_factor()
    ek = elementary_symmetric(k, jm_hecke_inverses(n))
    lhs = (ocneanu_trace(x) * factor).a_coefficient(k)
    rhs = (ocneanu_trace(hecke_multiply(x, ek)) * factor).a_coefficient(0)
    return lhs == rhs


# -- HOMFLY -------------------------------------------------------------------


def homfly(b: BraidWord) -> LaurentScalar:
    """Normalized HOMFLY invariant of the braid closure.

    The raw trace is multiplied by mu_+^s mu_-^t with mu_+ = -v^-1,
    mu_- = a v^-1 (the two Markov stabilization factors of the trace),
    s = -(writhe + n - 1)/2 and t = (writhe - n + 1)/2.  This forces the
    one-strand and two-strand unknots to both evaluate to 1.  Defined when
    writhe + n is odd (always true for knots); otherwise half-integral
    powers of the framing variables would be needed and ValueError is raised.
    """
    w = b.writhe()
    n = b.strand_count
    if (w + n - 1) % 2 != 0:
        raise ValueError(
            "normalization needs writhe + strands odd "
            f"(got writhe {w} on {n} strands)"
        )
    s = -(w + n - 1) // 2
    t = (w - n + 1) // 2
    raw = ocneanu_trace(braid_to_hecke(b))
    value = raw * v_power(-s - t)  # mu_+^s mu_-^t contributes v^{-s-t}
    if s % 2 != 0:
        value = value * LaurentScalar.from_int(-1)
    return value * LaurentScalar.a_power(t)
