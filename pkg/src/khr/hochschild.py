"""Hochschild cohomology of Soergel bimodules and triply graded tables.

HH^*(R, M) is computed from the Koszul complex of the commuting operators
A_p = (left multiplication by x_p) - (right multiplication by x_p) acting on
M; the exterior generators carry internal degree 2, so the Koszul-graded
degree j of a cochain in slot k is (degree in M) + 2k.

For a braid, the table HHH^{k,i,j} is the horizontal cohomology (in the
Rouquier direction i) of the vertical Hochschild cohomology: vertical and
horizontal differentials commute strictly because chain maps are bimodule
maps.  All dimensions are exact; the internal degree is truncated at a
configurable bound, exact degree by degree.
"""

from __future__ import annotations

import dataclasses
import itertools
import os
from typing import Optional, Sequence

from gmpy2 import mpq

from khr import braids, linalg
from khr.bimodules import GradedBimodule, PolyMatrix, b_w, library
from khr.braids import BraidWord
from khr.complexes import ChainComplex, rouquier_complex
from khr.polynomials import Poly, monomials_of_degree

DEFAULT_MAX_DEGREE = 12


def max_degree_default() -> int:
    return int(os.environ.get("KHR_MAX_DEGREE", DEFAULT_MAX_DEGREE))


def hochschild_operators(m: GradedBimodule) -> list[PolyMatrix]:
    """The commuting operators A_p = x_p . id - (right action of x_p)."""
    out = []
    for p in range(m.n):
        xp = Poly.variable(p, m.n)
        mat = tuple(
            tuple(
                (xp if r == c else Poly.zero(m.n)) - m.action[p][r][c]
                for c in range(m.rank)
            )
            for r in range(m.rank)
        )
        out.append(mat)
    return out


# -- coordinates for Koszul cochains -----------------------------------------


def _coords(
    mods: Sequence[GradedBimodule], k: int, t: int, n: int, ndir: int
) -> tuple[list, dict]:
    """Basis of Koszul slot k on the slice t = (module degree) - 2k.

    The differential sends module degree m to m + 2 and slot k to k + 1, so
    t is what it conserves.  A coordinate is (summand index, direction
    subset, basis index, monomial).
    """
    slots = []
    subsets = list(itertools.combinations(range(ndir), k))
    for si, m in enumerate(mods):
        for b, deg in enumerate(m.degrees):
            mono_deg = t + 2 * k - deg
            for mono in monomials_of_degree(n, mono_deg):
                for s in subsets:
                    slots.append((si, s, b, mono))
    return slots, {c: i for i, c in enumerate(slots)}


def _vertical_images(
    mods: Sequence[GradedBimodule],
    ops: Sequence[list[PolyMatrix]],
    k: int,
    d: int,
    n: int,
    ndir: int,
    coords_k: list,
    index_k1: dict,
) -> list[dict]:
    """Images of the slot-k basis under the Koszul differential, in slot k+1."""
    images = []
    for (si, s, b, mono) in coords_k:
        vec: dict = {}
        pm = Poly.monomial(mono)
        for p in range(ndir):
            if p in s:
                continue
            pos = sum(1 for q in s if q < p)
            sign = mpq(-1) if pos % 2 else mpq(1)
            t = tuple(sorted(s + (p,)))
            for r in range(mods[si].rank):
                f = ops[si][p][r][b]
                if f.is_zero():
                    continue
                for e, cf in (pm * f).terms:
                    idx = index_k1.get((si, t, r, e))
                    if idx is not None:
                        vec[idx] = vec.get(idx, mpq(0)) + sign * cf
        images.append({i: c for i, c in vec.items() if c != 0})
    return images


def _kernel_and_rank(images: list[dict], dim_source: int):
    rows: dict = {}
    for col, vec in enumerate(images):
        for r, c in vec.items():
            rows.setdefault(r, {})[col] = c
    kernel = linalg.nullspace(list(rows.values()), dim_source)
    rk = dim_source - len(kernel)
    return kernel, rk


def hochschild_dims(
    m: GradedBimodule, max_degree: Optional[int] = None, reduced: bool = False
) -> dict[tuple[int, int], int]:
    """dim HH^k(R, M) per (k, j) with j = (module degree) + 2k <= max_degree.

    ``reduced`` drops the last Koszul direction A_n (redundant on Soergel
    bimodules, where sum_p A_p = 0), giving the (n-1)-step complexes.
    """
    if max_degree is None:
        max_degree = max_degree_default()
    n = m.n
    ndir = n - 1 if reduced else n
    ops = [hochschild_operators(m)]
    mods = [m]
    out: dict[tuple[int, int], int] = {}
    lo = min(m.degrees) - 2 * ndir
    for t in range(lo, max_degree + 1):
        if (t - min(m.degrees)) % 2:
            continue
        ranks: dict[int, int] = {}
        kernels: dict[int, int] = {}
        for k in range(ndir + 1):
            if t + 4 * k > max_degree + 4 * ndir:
                break
            ck, _ = _coords(mods, k, t, n, ndir)
            _, idx_k1 = _coords(mods, k + 1, t, n, ndir)
            images = _vertical_images(mods, ops, k, t, n, ndir, ck, idx_k1)
            kernel, rk = _kernel_and_rank(images, len(ck))
            kernels[k] = len(kernel)
            ranks[k] = rk
        for k in kernels:
            dim = kernels[k] - ranks.get(k - 1, 0)
            j = t + 4 * k  # = module degree + 2k
            if dim and j <= max_degree:
                out[(k, j)] = dim
    return out


# -- the Koszul complex over B_{w0} ------------------------------------------


def koszul_soergel_complex(n: int, reduced: bool = True) -> ChainComplex:
    """K_S: the Koszul complex of the A_p acting on B_{w0}, levels -ndir..0."""
    bw0 = b_w(n, braids.longest_element(n))
    ops = hochschild_operators(bw0)
    ndir = n - 1 if reduced else n
    levels: dict[int, list[GradedBimodule]] = {}
    subsets: dict[int, list[tuple]] = {}
    for k in range(ndir + 1):
        subsets[k] = list(itertools.combinations(range(ndir), k))
        levels[-k] = [bw0.shifted(-2 * k) for _ in subsets[k]]
    diff: dict[int, dict] = {}
    for k in range(1, ndir + 1):
        comps: dict = {}
        for c, s in enumerate(subsets[k]):
            for p in s:
                t = tuple(q for q in s if q != p)
                r = subsets[k - 1].index(t)
                pos = sum(1 for q in s if q < p)
                sign = mpq(-1) if pos % 2 else mpq(1)
                comps[(r, c)] = tuple(
                    tuple(f.scale(sign) for f in row) for row in ops[p]
                )
        diff[-k] = comps
    return ChainComplex(n, levels, diff)


# -- decategorification and Markov moves --------------------------------------


def euler_bridge_check(b: BraidWord, max_degree: Optional[int] = None) -> bool:
    """Does the graded Euler characteristic of HHH match the Ocneanu trace?

    Compares sum of (-1)^i dim a^k v^(j-2k) against the trace of the braid's
    Hecke-algebra image, coefficientwise in a, as v-series on the window
    where the table is exact (v-exponent at most max_degree - 2k).
    """
    from khr import hecke, scalars

    if max_degree is None:
        max_degree = max_degree_default()
    tab = hhh(b, max_degree)
    euler: dict[tuple[int, int], int] = {}
    for (k, i, j), d in tab.entries.items():
        key = (k, j - 2 * k)
        euler[key] = euler.get(key, 0) + (-d if i % 2 else d)
    euler = {ke: c for ke, c in euler.items() if c}
    tr = hecke.ocneanu_trace(hecke.braid_to_hecke(b)) * scalars.markov_factor()
    lo = min([e for _, e in euler], default=0) - 2 * b.strand_count
    series: dict[tuple[int, int], int] = {}
    for k in tr.a_support():
        for e, c in tr.a_coefficient(k).series(lo, max_degree).items():
            if c:
                series[(k, e)] = c
    keys = set(euler) | set(series)
    return all(
        euler.get(ke, 0) == series.get(ke, 0)
        for ke in keys
        if ke[1] >= lo and ke[1] <= max_degree - 2 * ke[0]
    )


def _tables_match(
    t1: TriGradedTable, t2: TriGradedTable, shift: tuple[int, int, int]
) -> bool:
    """Equality of tables after shifting t1 by (dk, di, dj), on the overlap."""
    dk, di, dj = shift
    hi = min(t1.max_degree, t2.max_degree - dj)
    for (k, i, j), d in t1.entries.items():
        if j <= hi and t2.entries.get((k + dk, i + di, j + dj), 0) != d:
            return False
    for (k, i, j), d in t2.entries.items():
        if j - dj <= hi and t1.entries.get((k - dk, i - di, j - dj), 0) != d:
            return False
    return True


def stabilization_shift(
    positive: bool, max_degree: Optional[int] = None
) -> tuple[int, int, int]:
    """The table shift of one Markov stabilization, read off the unknot.

    Compares the empty one-strand braid against sigma_1^{+-1}: positive
    stabilization gives (0, 1, -1), negative gives (1, 0, 1).
    """
    if max_degree is None:
        max_degree = max_degree_default()
    t1 = hhh(BraidWord(1, ()), max_degree)
    t2 = hhh(BraidWord(2, (1 if positive else -1,)), max_degree)
    k1, i1, j1 = min(t1.entries)
    k2, i2, j2 = min(t2.entries)
    shift = (k2 - k1, i2 - i1, j2 - j1)
    if not _tables_match(t1, t2, shift):
        raise AssertionError("unknot stabilization tables do not align")
    return shift


def stabilize(b: BraidWord, positive: bool) -> BraidWord:
    """The Markov stabilization: same word on one more strand, times sigma_n^{+-1}."""
    n = b.strand_count
    return BraidWord(n + 1, b.letters + (n if positive else -n,))


def markov_invariance_check(
    b: BraidWord, max_degree: Optional[int] = None
) -> bool:
    """Is the HHH table stable under Markov moves on ``b``?

    Conjugation by each generator must preserve the table exactly;
    stabilization must shift it by the amount frozen from the unknot.
    """
    if max_degree is None:
        max_degree = max_degree_default()
    tab = hhh(b, max_degree)
    n = b.strand_count
    for g in range(1, n):
        conj = BraidWord(n, (g,) + b.letters + (-g,))
        if hhh(conj, max_degree).entries != tab.entries:
            return False
    for positive in (True, False):
        shift = stabilization_shift(positive, max_degree)
        if not _tables_match(tab, hhh(stabilize(b, positive), max_degree), shift):
            return False
    return True


# -- agreement between the two Hochschild routes ------------------------------


def hom_route_dims(
    m: GradedBimodule, max_line: Optional[int] = None
) -> dict[tuple[int, int], int]:
    """dims of H^k(Hom(K_S, M)), K_S over all n directions, per (k, line).

    For a fixed line j the slot-k cochains are Hom(B_w0, M) in degree j + 2k
    (the Koszul term B_w0(-2k) eats the 2k); precomposition with A_p raises
    the hom degree by 2, matching the next slot.
    """
    from khr.bimodules import hom_space, pmat_mul

    if max_line is None:
        max_line = max_degree_default()
    n = m.n
    ndir = n
    bw0 = b_w(n, braids.longest_element(n))
    ops = hochschild_operators(bw0)
    out: dict[tuple[int, int], int] = {}
    lo_h = min(m.degrees) - max(bw0.degrees)
    lo = lo_h - 2 * ndir
    hom_cache: dict[int, list] = {}

    def homs(h: int):
        if h not in hom_cache:
            hom_cache[h] = hom_space(bw0, m, h) if h >= lo_h else []
        return hom_cache[h]

    for j in range(lo, max_line + 1):
        if (j - lo) % 2:
            continue
        kernels: dict[int, int] = {}
        ranks: dict[int, int] = {}
        for k in range(ndir + 1):
            subsets = list(itertools.combinations(range(ndir), k))
            subsets1 = list(itertools.combinations(range(ndir), k + 1))
            basis = homs(j + 2 * k)
            dim_source = len(subsets) * len(basis)
            images: list[dict] = []
            # target coordinates: (subset T, matrix entry, monomial)
            target_index: dict = {}
            for si, s in enumerate(subsets):
                for phi in basis:
                    vec: dict = {}
                    for p in range(ndir):
                        if p in s:
                            continue
                        pos = sum(1 for q in s if q < p)
                        sign = mpq(-1) if pos % 2 else mpq(1)
                        t = tuple(sorted(s + (p,)))
                        ti = subsets1.index(t)
                        comp = pmat_mul(phi, ops[p])
                        for rr, row in enumerate(comp):
                            for cc, f in enumerate(row):
                                for e, cf in f.terms:
                                    key = (ti, rr, cc, e)
                                    idx = target_index.setdefault(
                                        key, len(target_index)
                                    )
                                    vec[idx] = vec.get(idx, mpq(0)) + sign * cf
                    images.append({i: c for i, c in vec.items() if c != 0})
            kernel, rk = _kernel_and_rank(images, dim_source)
            kernels[k] = len(kernel)
            ranks[k] = rk
        for k in range(ndir + 1):
            dim = kernels[k] - ranks.get(k - 1, 0)
            if dim:
                out[(k, j)] = dim
    return out


# -- triply graded tables -----------------------------------------------------


@dataclasses.dataclass(eq=False)
class TriGradedTable:
    """Dimensions of HHH^{k,i,j}: Hochschild degree, level, internal degree.

    Exact for every j <= max_degree; j = (module degree) + 2k as in
    ``hochschild_dims``.
    """

    strand_count: int
    max_degree: int
    entries: dict[tuple[int, int, int], int]

    def nonzero(self) -> list[tuple[tuple[int, int, int], int]]:
        return sorted(self.entries.items())

    def __str__(self) -> str:
        if not self.entries:
            return "(empty)"
        return "\n".join(
            f"k={k} i={i} j={j}: {d}" for (k, i, j), d in self.nonzero()
        )


def _rank_of(vecs: list[dict]) -> int:
    rows: dict = {}
    for col, v in enumerate(vecs):
        for r, c in v.items():
            rows.setdefault(r, {})[col] = c
    return linalg.rank(list(rows.values()))


def _horizontal_images(
    cx: ChainComplex, i: int, coords_i: list, index_next: dict
) -> list[dict]:
    """The level differential d_i on slot-k cochains, coordinate by coordinate.

    Subsets ride along unchanged: chain maps commute with the A_p, so the
    horizontal differential acts on the module factor only.
    """
    blocks = cx.differential.get(i, {})
    out = []
    for (si, s, b, mono) in coords_i:
        vec: dict = {}
        pm = Poly.monomial(mono)
        for (r, c), block in blocks.items():
            if c != si:
                continue
            for rr in range(len(block)):
                f = block[rr][b]
                if f.is_zero():
                    continue
                for e, cf in (pm * f).terms:
                    idx = index_next.get((r, s, rr, e))
                    if idx is not None:
                        vec[idx] = vec.get(idx, mpq(0)) + cf
        out.append({i2: c2 for i2, c2 in vec.items() if c2 != 0})
    return out


def _apply(images: list[dict], vectors: list[dict]) -> list[dict]:
    out = []
    for v in vectors:
        acc: dict = {}
        for src, c in v.items():
            for tgt, c2 in images[src].items():
                acc[tgt] = acc.get(tgt, mpq(0)) + c * c2
        out.append({t: c for t, c in acc.items() if c != 0})
    return out


def hhh(b: BraidWord, max_degree: Optional[int] = None) -> TriGradedTable:
    """Triply graded homology of the closure of ``b``, exact per degree.

    Vertical Hochschild cohomology of the minimized Rouquier complex, then
    cohomology of the induced horizontal differential.  The double complex
    splits over the conserved slice t = (module degree) - 2k, so each slice
    is finite-dimensional and handled by exact linear algebra.
    """
    if max_degree is None:
        max_degree = max_degree_default()
    n = b.strand_count
    ndir = n
    cx = rouquier_complex(b)
    lvls = sorted(cx.levels)
    ops = {
        i: [hochschild_operators(m) for m in cx.levels[i]] for i in lvls
    }
    all_degs = [d for i in lvls for m in cx.levels[i] for d in m.degrees]
    entries: dict[tuple[int, int, int], int] = {}
    for t in range(min(all_degs) - 2 * ndir, max_degree + 1):
        if (t - min(all_degs)) % 2:
            continue
        coords: dict = {}
        index: dict = {}
        kernels: dict = {}
        vimages: dict = {}
        vranks: dict = {}
        for i in lvls:
            mods = cx.levels[i]
            for k in range(ndir + 2):
                coords[(i, k)], index[(i, k)] = _coords(mods, k, t, n, ndir)
            for k in range(ndir + 1):
                images = _vertical_images(
                    mods, ops[i], k, t, n, ndir, coords[(i, k)],
                    index[(i, k + 1)],
                )
                kernel, rk = _kernel_and_rank(images, len(coords[(i, k)]))
                kernels[(i, k)] = kernel
                vimages[(i, k)] = images
                vranks[(i, k)] = rk
        for i in lvls:
            for k in range(ndir + 1):
                j = t + 4 * k
                if j > max_degree:
                    break
                z = kernels[(i, k)]
                if not z:
                    continue
                hz = _apply(
                    _horizontal_images(
                        cx, i, coords[(i, k)],
                        index.get((i + 1, k), {}),
                    ),
                    z,
                )
                b_next = vimages.get((i + 1, k - 1), [])
                rk_next = vranks.get((i + 1, k - 1), 0)
                out_rank = _rank_of(hz + [v for v in b_next if v]) - rk_next
                zprev = kernels.get((i - 1, k), [])
                hzprev = _apply(
                    _horizontal_images(
                        cx, i - 1, coords.get((i - 1, k), []),
                        index[(i, k)],
                    ),
                    zprev,
                ) if zprev else []
                b_here = vimages.get((i, k - 1), [])
                in_rank = _rank_of(hzprev + [v for v in b_here if v])
                dim = len(z) - out_rank - in_rank
                if dim:
                    entries[(k, i, j)] = dim
    return TriGradedTable(n, max_degree, entries)


def hh_agreement_check(
    m: GradedBimodule, max_degree: Optional[int] = None
) -> bool:
    """Do the Koszul route and the Hom(K_S, -) route agree on HH(M)?

    The gradings are related by j_hom = j - 4k + l(w0): the Hom route reads
    Hom(B_w0, -), which twists by the length of the longest element, and each
    Koszul slot contributes its 2k twice (once in K_S, once in the table
    convention j = module degree + 2k).
    """
    if max_degree is None:
        max_degree = max_degree_default()
    n = m.n
    length_w0 = n * (n - 1) // 2
    lhs = hochschild_dims(m, max_degree, reduced=False)
    rhs = hom_route_dims(m, max_degree + length_w0)
    lhs = {kd: v for kd, v in lhs.items() if kd[1] <= max_degree}
    rhs_mapped = {
        (k, j2 + 4 * k - length_w0): v for (k, j2), v in rhs.items()
    }
    rhs_mapped = {
        kd: v for kd, v in rhs_mapped.items() if kd[1] <= max_degree
    }
    return lhs == rhs_mapped
