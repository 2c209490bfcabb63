"""Soergel bimodules over R = Q[x_1..x_n] with deg x_i = 2.

Every bimodule here is free as a *left* R-module, presented by the degrees of
a homogeneous basis and by n matrices over R giving the right action of each
variable (columns are images of basis vectors).  This is enough to build
Bott-Samelson products, split them into indecomposables by solving for
idempotents, and compute graded hom spaces exactly.

Grading: a shift (r) lowers all basis degrees by r, so B_s = R (x) R (1) has
basis degrees (-1, 1).
"""

from __future__ import annotations

import dataclasses
import itertools
from collections import Counter
from typing import Optional, Sequence

from gmpy2 import mpq

from khr import linalg
from khr.polynomials import Poly, monomials_of_degree

PolyMatrix = tuple  # tuple of row tuples of Poly


@dataclasses.dataclass(eq=False)
class GradedBimodule:
    """Graded R-bimodule, free over the left copy of R.

    ``action[j]`` is the matrix of right multiplication by x_{j+1}:
    ``e_c . x_{j+1} = sum_r action[j][r][c] e_r``.
    """

    n: int
    degrees: tuple[int, ...]
    action: tuple[PolyMatrix, ...]
    label: str = "?"
    shift: int = 0
    _monomials: dict = dataclasses.field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def shifted(self, r: int) -> "GradedBimodule":
        if r == 0:
            return self
        return GradedBimodule(
            self.n,
            tuple(d - r for d in self.degrees),
            self.action,
            self.label,
            self.shift + r,
            self._monomials,  # action matrices are unchanged by shifts
        )

    def graded_rank(self) -> Counter:
        return Counter(self.degrees)

    def __str__(self) -> str:
        return f"{self.label}({self.shift})" if self.shift else self.label


def polynomial_ring(n: int) -> GradedBimodule:
    action = tuple((( Poly.variable(j, n),),) for j in range(n))
    return GradedBimodule(n, (0,), action, label="R")


def b_gen(n: int, i: int) -> GradedBimodule:
    """The bimodule B_i = R (x)_{R^{s_i}} R (1), with basis 1(x)1, 1(x)x_{i+1}.

    Right action of x_{i+1} in this basis is [[0, -p], [1, e]] where
    e = x_i + x_{i+1} and p = x_i x_{i+1} (both central for s_i).
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    x = [Poly.variable(j, n) for j in range(n)]
    zero, one = Poly.zero(n), Poly.one(n)
    e = x[i - 1] + x[i]
    p = x[i - 1] * x[i]
    action = []
    for j in range(n):
        if j == i:  # x_{i+1}
            m = ((zero, -p), (one, e))
        elif j == i - 1:  # x_i acts as e - (action of x_{i+1})
            m = ((e, p), (-one, zero))
        else:
            m = ((x[j], zero), (zero, x[j]))
        action.append(m)
    return GradedBimodule(n, (-1, 1), tuple(action), label=f"B{i}")


# -- matrices over R ----------------------------------------------------------


def pmat_zero(rows: int, cols: int, n: int) -> PolyMatrix:
    z = Poly.zero(n)
    return tuple((z,) * cols for _ in range(rows))


def pmat_identity(rank: int, n: int) -> PolyMatrix:
    z, one = Poly.zero(n), Poly.one(n)
    return tuple(
        tuple(one if r == c else z for c in range(rank)) for r in range(rank)
    )


def pmat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    rows, mid, cols = len(a), len(b), len(b[0]) if b else 0
    n = a[0][0].nvars
    out = [[Poly.zero(n)] * cols for _ in range(rows)]
    for r in range(rows):
        arow = a[r]
        for k in range(mid):
            f = arow[k]
            if f.is_zero():
                continue
            brow = b[k]
            for c in range(cols):
                if not brow[c].is_zero():
                    out[r][c] = out[r][c] + f * brow[c]
    return tuple(tuple(row) for row in out)


def pmat_add(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def pmat_scale(a: PolyMatrix, c) -> PolyMatrix:
    return tuple(tuple(x.scale(c) for x in row) for row in a)


def pmat_is_zero(a: PolyMatrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def monomial_action(m: GradedBimodule, exponents: tuple[int, ...]) -> PolyMatrix:
    """Matrix of right multiplication by the monomial x^exponents."""
    cached = m._monomials.get(exponents)
    if cached is not None:
        return cached
    if all(e == 0 for e in exponents):
        out = pmat_identity(m.rank, m.n)
    else:
        j = next(k for k, e in enumerate(exponents) if e)
        smaller = list(exponents)
        smaller[j] -= 1
        out = pmat_mul(m.action[j], monomial_action(m, tuple(smaller)))
    m._monomials[exponents] = out
    return out


def poly_action(m: GradedBimodule, f: Poly) -> PolyMatrix:
    """Matrix of right multiplication by f in R."""
    out = pmat_zero(m.rank, m.rank, m.n)
    for e, c in f.terms:
        out = pmat_add(out, pmat_scale(monomial_action(m, e), c))
    return out


def tensor(m: GradedBimodule, n_mod: GradedBimodule, label: str = "") -> GradedBimodule:
    """Tensor product M (x)_R N.  Basis index (a, b) -> a * rank(N) + b."""
    if m.n != n_mod.n:
        raise ValueError("variable-count mismatch")
    n = m.n
    rm, rn = m.rank, n_mod.rank
    degrees = tuple(
        m.degrees[a] + n_mod.degrees[b] for a in range(rm) for b in range(rn)
    )
    action = []
    for j in range(n):
        out = [[Poly.zero(n)] * (rm * rn) for _ in range(rm * rn)]
        for c in range(rn):
            for b in range(rn):
                f = n_mod.action[j][c][b]
                if f.is_zero():
                    continue
                block = poly_action(m, f)
                for a2 in range(rm):
                    for a in range(rm):
                        if not block[a2][a].is_zero():
                            out[a2 * rn + c][a * rn + b] = (
                                out[a2 * rn + c][a * rn + b] + block[a2][a]
                            )
        action.append(tuple(tuple(row) for row in out))
    lbl = label or f"{m}*{n_mod}"
    return GradedBimodule(n, degrees, tuple(action), label=lbl)


def map_tensor(
    f: PolyMatrix,
    g: PolyMatrix,
    f_target: GradedBimodule,
    g_source_rank: int,
) -> PolyMatrix:
    """The map f (x) g on tensor products, in the basis convention of tensor().

    f: M -> M', g: N -> N'.  Entry [(a'', c), (a, b)] of f(x)g equals
    (poly_action(M', g[c][b]) . f)[a''][a]; the coefficient of g travels
    through the middle and acts on the right of M'.
    """
    rm2 = f_target.rank
    rm = len(f[0]) if f else 0
    rn2, rn = len(g), g_source_rank
    n = f_target.n
    out = [[Poly.zero(n)] * (rm * rn) for _ in range(rm2 * rn2)]
    for c in range(rn2):
        for b in range(rn):
            coeff = g[c][b]
            if coeff.is_zero():
                continue
            block = pmat_mul(poly_action(f_target, coeff), f)
            for a2 in range(rm2):
                for a in range(rm):
                    if not block[a2][a].is_zero():
                        out[a2 * rn2 + c][a * rn + b] = (
                            out[a2 * rn2 + c][a * rn + b] + block[a2][a]
                        )
    return tuple(tuple(row) for row in out)


# -- graded hom spaces --------------------------------------------------------


def hom_space(
    m: GradedBimodule, target: GradedBimodule, degree: int = 0
) -> list[PolyMatrix]:
    """Basis of bimodule maps M -> N raising internal degree by ``degree``.

    A map is a matrix P over R with P Y_j^M = Y_j^N P for all j; entry
    P[r][c] is homogeneous of degree M.degrees[c] - N.degrees[r] + degree.
    Left-linearity is built into the matrix description.
    """
    n = m.n
    rm, rn = m.rank, target.rank
    var_index: dict = {}
    slots: list[tuple[int, int, tuple[int, ...]]] = []
    for r in range(rn):
        for c in range(rm):
            d = m.degrees[c] - target.degrees[r] + degree
            for mono in monomials_of_degree(n, d):
                var_index[(r, c, mono)] = len(slots)
                slots.append((r, c, mono))
    if not slots:
        return []

    equations: dict = {}

    def add(eqkey, var, coeff):
        row = equations.setdefault(eqkey, {})
        row[var] = row.get(var, mpq(0)) + coeff
        if row[var] == 0:
            del row[var]

    for j in range(n):
        ym, yn = m.action[j], target.action[j]
        # sum_c P[r][c] ym[c][b] - sum_s yn[r][s] P[s][b] = 0 at (r, b)
        for (r, c, mono), var in var_index.items():
            pm = Poly.monomial(mono)
            for b in range(rm):
                f = ym[c][b]
                if not f.is_zero():
                    for e2, c2 in (pm * f).terms:
                        add((j, r, b, e2), var, c2)
            # this same variable appears as P[s][b] with s=r, b=c in the
            # second sum for every row r2 with yn[r2][r] nonzero
            for r2 in range(rn):
                g = yn[r2][r]
                if not g.is_zero():
                    for e2, c2 in (pm * g).terms:
                        add((j, r2, c, e2), var, -c2)

    basis = linalg.nullspace(list(equations.values()), len(slots))
    out = []
    for vec in basis:
        entries: dict = {}
        for idx, coeff in vec.items():
            r, c, mono = slots[idx]
            entries.setdefault((r, c), {})[mono] = coeff
        out.append(
            tuple(
                tuple(
                    Poly.make(n, entries.get((r, c), {})) for c in range(rm)
                )
                for r in range(rn)
            )
        )
    return out


def hom_dimensions(
    m: GradedBimodule, target: GradedBimodule, max_degree: int
) -> dict[int, int]:
    """dim of the hom space in each degree 0..max_degree (even degrees only)."""
    return {
        d: len(hom_space(m, target, d))
        for d in range(0, max_degree + 1)
        if (d + m.degrees[0] - target.degrees[0]) % 2 == 0
    }


# -- splitting off free direct summands ---------------------------------------


def _express_in_span(
    vec: Sequence[Poly],
    vec_degree: int,
    gens: list[tuple[tuple[Poly, ...], int]],
    n: int,
) -> Optional[list[Poly]]:
    """Write vec = sum r_k g_k with homogeneous r_k in R, or None.

    ``gens`` are (column vector, degree) pairs; ``vec`` is homogeneous of
    degree ``vec_degree`` relative to the same ambient degrees.
    """
    slots: list[tuple[int, tuple[int, ...]]] = []
    for k, (_, gdeg) in enumerate(gens):
        for mono in monomials_of_degree(n, vec_degree - gdeg):
            slots.append((k, mono))
    equations: dict = {}
    rhs_key: dict = {}
    for idx, (k, mono) in enumerate(slots):
        pm = Poly.monomial(mono)
        gvec = gens[k][0]
        for row, g in enumerate(gvec):
            if g.is_zero():
                continue
            for e2, c2 in (pm * g).terms:
                equations.setdefault((row, e2), {})[idx] = (
                    equations.setdefault((row, e2), {}).get(idx, mpq(0)) + c2
                )
    for row, f in enumerate(vec):
        for e2, c2 in f.terms:
            equations.setdefault((row, e2), {})
            rhs_key[(row, e2)] = c2
    keys = list(equations)
    rows = [equations[k] for k in keys]
    rhs = [rhs_key.get(k, mpq(0)) for k in keys]
    sol = linalg.solve(rows, rhs, len(slots))
    if sol is None:
        return None
    coeffs: list[dict] = [dict() for _ in gens]
    for idx, val in sol.items():
        k, mono = slots[idx]
        coeffs[k][mono] = val
    return [Poly.make(n, c) for c in coeffs]


def extract_free_image(
    m: GradedBimodule, idem: PolyMatrix, label: str = "?"
) -> tuple[GradedBimodule, PolyMatrix, PolyMatrix]:
    """Split the image of a degree-0 idempotent as (summand, incl, proj).

    The image of an idempotent endomorphism of a graded-free module is again
    graded-free; its basis is found greedily among the idempotent's columns.
    """
    n = m.n
    rank = m.rank
    cols = sorted(range(rank), key=lambda c: m.degrees[c])
    gens: list[tuple[tuple[Poly, ...], int]] = []
    for c in cols:
        vec = tuple(idem[r][c] for r in range(rank))
        if all(f.is_zero() for f in vec):
            continue
        if gens and _express_in_span(vec, m.degrees[c], gens, n) is not None:
            continue
        gens.append((vec, m.degrees[c]))
    degrees = tuple(d for _, d in gens)
    incl = tuple(
        tuple(gens[k][0][r] for k in range(len(gens))) for r in range(rank)
    )
    # right action in the generator basis
    action = []
    for j in range(n):
        col_action = []
        for k, (gvec, gdeg) in enumerate(gens):
            moved = tuple(
                sum(
                    (m.action[j][r][r2] * gvec[r2] for r2 in range(rank)
                     if not m.action[j][r][r2].is_zero() and not gvec[r2].is_zero()),
                    Poly.zero(n),
                )
                for r in range(rank)
            )
            coeffs = _express_in_span(moved, gdeg + 2, gens, n)
            assert coeffs is not None, "image not closed under right action"
            col_action.append(coeffs)
        action.append(
            tuple(
                tuple(col_action[k][k2] for k in range(len(gens)))
                for k2 in range(len(gens))
            )
        )
    summand = GradedBimodule(n, degrees, tuple(action), label=label)
    proj = _solve_projection(m, incl, idem, degrees)
    return summand, incl, proj


def _solve_projection(
    m: GradedBimodule,
    incl: PolyMatrix,
    idem: PolyMatrix,
    s_degrees: tuple[int, ...],
) -> PolyMatrix:
    """Solve incl . proj = idem for proj (unique since incl is split mono)."""
    n = m.n
    rank, srank = m.rank, len(s_degrees)
    slots: list[tuple[int, int, tuple[int, ...]]] = []
    for k in range(srank):
        for c in range(rank):
            for mono in monomials_of_degree(n, m.degrees[c] - s_degrees[k]):
                slots.append((k, c, mono))
    equations: dict = {}
    rhs_map: dict = {}
    for idx, (k, c, mono) in enumerate(slots):
        pm = Poly.monomial(mono)
        for r in range(rank):
            f = incl[r][k]
            if f.is_zero():
                continue
            for e2, c2 in (pm * f).terms:
                row = equations.setdefault((r, c, e2), {})
                row[idx] = row.get(idx, mpq(0)) + c2
    for r in range(rank):
        for c in range(rank):
            for e2, c2 in idem[r][c].terms:
                equations.setdefault((r, c, e2), {})
                rhs_map[(r, c, e2)] = c2
    keys = list(equations)
    sol = linalg.solve(
        [equations[k] for k in keys],
        [rhs_map.get(k, mpq(0)) for k in keys],
        len(slots),
    )
    assert sol is not None, "projection onto split summand must exist"
    entries: list[list[dict]] = [
        [dict() for _ in range(rank)] for _ in range(srank)
    ]
    for idx, val in sol.items():
        k, c, mono = slots[idx]
        entries[k][c][mono] = val
    return tuple(
        tuple(Poly.make(n, entries[k][c]) for c in range(rank))
        for k in range(srank)
    )


# -- the category of sums of shifted indecomposables --------------------------


class SoergelLibrary:
    """Indecomposable Soergel bimodules for a fixed n, discovered on demand.

    Starts from R and the B_i; products are split by searching for pairs of
    maps composing to a nonzero scalar (all indecomposables here have scalar
    degree-0 endomorphisms).  Anything that refuses to split further is
    registered as a new indecomposable.
    """

    def __init__(self, n: int):
        self.n = n
        self.indecomposables: list[GradedBimodule] = [polynomial_ring(n)]
        for i in range(1, n):
            self.indecomposables.append(b_gen(n, i))
        self._product_cache: dict = {}
        self._fresh = 0

    def register(self, m: GradedBimodule, label: str = "") -> GradedBimodule:
        if not label:
            self._fresh += 1
            label = f"X{self._fresh}"
        m.label = label
        self.indecomposables.append(m)
        return m

    def decompose(
        self, m: GradedBimodule
    ) -> list[tuple[GradedBimodule, PolyMatrix, PolyMatrix]]:
        """Split m into shifted indecomposables: list of (summand, incl, proj).

        incl/proj are maps summand -> m and m -> summand with
        proj . incl = id; the sum of incl . proj over all parts is id_m.
        """
        parts: list[tuple[GradedBimodule, PolyMatrix, PolyMatrix]] = []
        current = m
        incl_cur = pmat_identity(m.rank, m.n)
        proj_cur = pmat_identity(m.rank, m.n)
        while current.rank > 0:
            hit = self._find_summand(current)
            if hit is None:
                parts.append(
                    (self._normalize_remainder(current), incl_cur, proj_cur)
                )
                break
            summand, iota, pi = hit
            parts.append(
                (summand, pmat_mul(incl_cur, iota), pmat_mul(pi, proj_cur))
            )
            comp = pmat_scale(pmat_mul(iota, pi), mpq(-1))
            idem = pmat_add(pmat_identity(current.rank, self.n), comp)
            if pmat_is_zero(idem):
                break
            rest, incl_r, proj_r = extract_free_image(current, idem)
            incl_cur = pmat_mul(incl_cur, incl_r)
            proj_cur = pmat_mul(proj_r, proj_cur)
            current = rest
        return parts

    def _find_summand(self, current: GradedBimodule):
        degs = Counter(current.degrees)
        for base in sorted(self.indecomposables, key=lambda b: -b.rank):
            lo = max(base.degrees) - max(current.degrees)
            hi = min(base.degrees) - min(current.degrees)
            for s in range(lo, hi + 1):
                if (base.degrees[0] - s - current.degrees[0]) % 2:
                    continue
                shifted_degs = Counter(d - s for d in base.degrees)
                if any(degs[d] < k for d, k in shifted_degs.items()):
                    continue
                cand = base.shifted(s)
                inclusions = hom_space(cand, current, 0)
                if not inclusions:
                    continue
                projections = hom_space(current, cand, 0)
                for iota in inclusions:
                    for pi in projections:
                        comp = pmat_mul(pi, iota)
                        c = comp[0][0].coefficient((0,) * self.n)
                        if c == 0:
                            continue
                        # scalar-endomorphism check, then normalize
                        ident = pmat_scale(
                            pmat_identity(cand.rank, self.n), c
                        )
                        if comp != ident:
                            continue
                        return cand, iota, pmat_scale(pi, 1 / c)
        return None

    def _normalize_remainder(self, current: GradedBimodule) -> GradedBimodule:
        center = (min(current.degrees) + max(current.degrees)) // 2
        base = GradedBimodule(
            self.n,
            tuple(d + center for d in current.degrees),
            current.action,
        )
        self.register(base)
        return base.shifted(center)

    def product_parts(
        self, base_label: str, i: int
    ) -> list[tuple[GradedBimodule, PolyMatrix, PolyMatrix]]:
        """Cached decomposition of (indecomposable with this label) (x) B_i."""
        key = (base_label, i)
        if key not in self._product_cache:
            base = self.by_label(base_label)
            prod = tensor(base, b_gen(self.n, i))
            self._product_cache[key] = self.decompose(prod)
        return self._product_cache[key]

    def by_label(self, label: str) -> GradedBimodule:
        for m in self.indecomposables:
            if m.label == label:
                return m
        raise KeyError(label)


_libraries: dict[int, SoergelLibrary] = {}


def library(n: int) -> SoergelLibrary:
    if n not in _libraries:
        _libraries[n] = SoergelLibrary(n)
    return _libraries[n]


def bott_samelson(n: int, word: Sequence[int]) -> GradedBimodule:
    """B_{i_1} (x) B_{i_2} (x) ... for a word in 1..n-1."""
    out = polynomial_ring(n)
    for i in word:
        out = tensor(out, b_gen(n, i))
    return out


def regular_bimodule(n: int) -> GradedBimodule:
    """R (x)_{R^W} R, shifted by the length of the longest element.

    Free left basis: monomials y^a in the right variables with a_i <= n - i.
    Right multiplication is reduced modulo the relations e_k(y) = e_k(x)
    using the Groebner basis G_j = sum_i (-1)^i e_i(x) h_{j-i}(y_1..y_{n-j+1}),
    whose lex leading terms are the pure powers y_{n-j+1}^j.
    """
    from khr.polynomials import complete_homogeneous, elementary_symmetric

    length_w0 = n * (n - 1) // 2
    groebner: dict[int, dict[tuple[int, ...], Poly]] = {}
    for j in range(1, n + 1):
        g: dict[tuple[int, ...], Poly] = {}
        for i in range(j + 1):
            ex = elementary_symmetric(n, i).scale((-1) ** i)
            h = complete_homogeneous(n - j + 1, j - i)
            for ye, c in h.terms:
                ye = ye + (0,) * (j - 1)
                g[ye] = g.get(ye, Poly.zero(n)) + ex.scale(c)
        groebner[j] = {e: p for e, p in g.items() if not p.is_zero()}

    def reducible_var(exp: tuple[int, ...]) -> int | None:
        # largest k (lex priority, y_n > ... > y_1) with exp[k-1] > n - k
        for k in range(n, 0, -1):
            if exp[k - 1] >= n - k + 1:
                return k
        return None

    def straighten(element: dict[tuple[int, ...], Poly]) -> dict:
        work = {e: p for e, p in element.items() if not p.is_zero()}
        while True:
            target = None
            for e in work:
                if reducible_var(e) is not None:
                    # reduce the lex-largest reducible monomial first
                    key = tuple(reversed(e))
                    if target is None or key > tuple(reversed(target)):
                        target = e
            if target is None:
                return work
            k = reducible_var(target)
            j = n - k + 1
            coeff = work.pop(target)
            lead = [0] * n
            lead[k - 1] = j
            rest = tuple(a - b for a, b in zip(target, lead))
            for ye, xpoly in groebner[j].items():
                if ye == tuple(lead):
                    continue
                e2 = tuple(a + b for a, b in zip(rest, ye))
                delta = (coeff * xpoly).scale(-1)
                work[e2] = work.get(e2, Poly.zero(n)) + delta
            work = {e: p for e, p in work.items() if not p.is_zero()}

    basis = sorted(
        itertools.product(*[range(n - i + 1) for i in range(1, n + 1)])
    )
    index = {e: k for k, e in enumerate(basis)}
    degrees = tuple(2 * sum(e) - length_w0 for e in basis)
    action = []
    for j in range(n):
        cols = []
        for e in basis:
            bumped = list(e)
            bumped[j] += 1
            reduced = straighten({tuple(bumped): Poly.one(n)})
            col = [Poly.zero(n)] * len(basis)
            for e2, p in reduced.items():
                col[index[e2]] = p
            cols.append(col)
        action.append(
            tuple(tuple(cols[c][r] for c in range(len(basis))) for r in range(len(basis)))
        )
    return GradedBimodule(
        n, degrees, tuple(action), label="RxR", shift=0
    )


def b_w(n: int, perm: tuple[int, ...]) -> GradedBimodule:
    """The indecomposable bimodule labeled by a permutation.

    Built inductively: split B_{w'} (x) B_s and take the one summand that is
    not a shift of anything of smaller rank seen before.
    """
    from khr import braids

    lib = library(n)
    if perm == braids.identity(n):
        return lib.by_label("R")
    word = braids.reduced_word(perm)
    if len(word) == 1:
        return lib.by_label(f"B{word[0]}")
    label = "B_" + "".join(map(str, word))
    try:
        return lib.by_label(label)
    except KeyError:
        pass
    prev = b_w(n, braids.evaluate_word(word[:-1], n))
    before = {m.label for m in lib.indecomposables}
    parts = lib.product_parts(prev.label, word[-1])
    fresh = [p for p, _, _ in parts if p.label not in before]
    if fresh:
        found = fresh[0]
        base = lib.by_label(found.label)
        base.label = label
        return base
    # the top summand must be the one of maximal rank at shift 0
    tops = [p for p, _, _ in parts if p.shift == 0]
    tops.sort(key=lambda p: -p.rank)
    return lib.by_label(tops[0].label)
