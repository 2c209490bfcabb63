"""Complexes of Soergel bimodules and Rouquier complexes of braids.

A complex stores, per cohomological level, a list of shifted indecomposable
bimodules and the differential as a dict of polynomial-matrix components.
Crossings are tensored on one at a time; after each step every product
summand is split through the indecomposable library and the complex is
minimized by Gaussian elimination, which keeps ranks small.

Conventions: the positive crossing gives B_s -> R(1) in levels (0, 1); the
negative crossing gives R(-1) -> B_s in levels (-1, 0).  The Koszul sign
(-1)^i twists the second factor's differential.
"""

from __future__ import annotations

import dataclasses
import random
from collections import Counter

from gmpy2 import mpq

from khr import linalg
from khr.bimodules import (
    GradedBimodule,
    PolyMatrix,
    b_gen,
    hom_space,
    library,
    map_tensor,
    pmat_add,
    pmat_identity,
    pmat_is_zero,
    pmat_mul,
    pmat_scale,
    pmat_zero,
    polynomial_ring,
)
from khr.braids import BraidWord
from khr.polynomials import Poly


@dataclasses.dataclass(eq=False)
class ChainComplex:
    """Bounded complex; differential[i][(r, c)] maps levels[i][c] -> levels[i+1][r]."""

    n: int
    levels: dict[int, list[GradedBimodule]]
    differential: dict[int, dict[tuple[int, int], PolyMatrix]]

    def level_range(self) -> range:
        if not self.levels:
            return range(0)
        return range(min(self.levels), max(self.levels) + 1)

    def component(self, i: int, r: int, c: int) -> PolyMatrix:
        comp = self.differential.get(i, {}).get((r, c))
        if comp is None:
            src = self.levels[i][c]
            tgt = self.levels[i + 1][r]
            return pmat_zero(tgt.rank, src.rank, self.n)
        return comp

    def graded_ranks(self) -> dict[int, Counter]:
        return {
            i: Counter(d for m in mods for d in m.degrees)
            for i, mods in self.levels.items()
            if mods
        }

    def total_rank(self) -> int:
        return sum(m.rank for mods in self.levels.values() for m in mods)

    def validate(self) -> None:
        """Check d . d = 0 componentwise."""
        for i in self.level_range():
            if i + 2 not in self.levels:
                continue
            for c in range(len(self.levels.get(i, []))):
                for r in range(len(self.levels[i + 2])):
                    total = pmat_zero(
                        self.levels[i + 2][r].rank,
                        self.levels[i][c].rank,
                        self.n,
                    )
                    for k in range(len(self.levels.get(i + 1, []))):
                        a = self.differential.get(i + 1, {}).get((r, k))
                        b = self.differential.get(i, {}).get((k, c))
                        if a is not None and b is not None:
                            total = pmat_add(total, pmat_mul(a, b))
                    assert pmat_is_zero(total), f"d^2 != 0 at level {i}"

    def __str__(self) -> str:
        bits = []
        for i in sorted(self.levels):
            if self.levels[i]:
                bits.append(
                    f"[{i}] " + " + ".join(str(m) for m in self.levels[i])
                )
        return "  ->  ".join(bits) if bits else "0"


def unit_complex(n: int) -> ChainComplex:
    return ChainComplex(n, {0: [library(n).by_label("R")]}, {})


def _normalized_map(source, target, pivot_entry) -> PolyMatrix:
    maps = hom_space(source, target, 0)
    assert len(maps) == 1, "expected a one-dimensional hom space"
    m = maps[0]
    r, c = pivot_entry
    pivot = m[r][c].coefficient((0,) * source.n)
    assert pivot != 0
    return pmat_scale(m, 1 / pivot)


def counit_map(n: int, i: int) -> PolyMatrix:
    """B_i -> R(1), the multiplication map (1 (x) f maps to f)."""
    lib = library(n)
    return _normalized_map(lib.by_label(f"B{i}"), lib.by_label("R").shifted(1), (0, 0))


def unit_map(n: int, i: int) -> PolyMatrix:
    """R(-1) -> B_i, dual to the counit."""
    lib = library(n)
    return _normalized_map(lib.by_label("R").shifted(-1), lib.by_label(f"B{i}"), (1, 0))


def delta_complex(n: int, i: int) -> ChainComplex:
    """Rouquier complex of the positive crossing sigma_i."""
    lib = library(n)
    return ChainComplex(
        n,
        {0: [lib.by_label(f"B{i}")], 1: [lib.by_label("R").shifted(1)]},
        {0: {(0, 0): counit_map(n, i)}},
    )


def nabla_complex(n: int, i: int) -> ChainComplex:
    """Rouquier complex of the negative crossing sigma_i^{-1}."""
    lib = library(n)
    return ChainComplex(
        n,
        {-1: [lib.by_label("R").shifted(-1)], 0: [lib.by_label(f"B{i}")]},
        {-1: {(0, 0): unit_map(n, i)}},
    )


def tensor_with_crossing(cx: ChainComplex, i: int, positive: bool) -> ChainComplex:
    """cx (x) (crossing complex), with products split and the result minimized."""
    n = cx.n
    lib = library(n)
    bi = b_gen(n, i)
    # stage 1: raw tensor where the B_i-factor summands are not yet split
    levels: dict[int, list] = {}
    diff: dict[int, dict] = {}
    # entries of `levels`: ("prod", S, old_level, old_index) or ("ring", ...)
    ring_level_offset = 1 if positive else -1
    for lev, mods in cx.levels.items():
        for idx, s in enumerate(mods):
            levels.setdefault(lev, []).append(("prod", s, lev, idx))
            levels.setdefault(lev + ring_level_offset, []).append(
                ("ring", s, lev, idx)
            )
    index: dict = {}
    for lev, items in levels.items():
        for pos, item in enumerate(items):
            index[(item[0], item[2], item[3], lev)] = pos

    def add_component(lev, r_item, c_item, matrix):
        if pmat_is_zero(matrix):
            return
        r = index[(r_item[0], r_item[2], r_item[3], lev + 1)]
        c = index[(c_item[0], c_item[2], c_item[3], lev)]
        diff.setdefault(lev, {})[(r, c)] = matrix

    edge = counit_map(n, i) if positive else unit_map(n, i)
    for lev, comps in cx.differential.items():
        for (r, c), mat in comps.items():
            src = cx.levels[lev][c]
            tgt = cx.levels[lev + 1][r]
            # d (x) id on the product part
            add_component(
                lev,
                ("prod", tgt, lev + 1, r),
                ("prod", src, lev, c),
                map_tensor(mat, pmat_identity(2, n), tgt, 2),
            )
            # d (x) id on the ring part (shift does not change matrices)
            add_component(
                lev + ring_level_offset,
                ("ring", tgt, lev + 1, r),
                ("ring", src, lev, c),
                mat,
            )
    for lev, mods in cx.levels.items():
        for idx, s in enumerate(mods):
            sign = mpq(-1) if lev % 2 else mpq(1)
            vertical = pmat_scale(
                map_tensor(pmat_identity(s.rank, n), edge, s, 2 if positive else 1),
                sign,
            )
            if positive:  # S (x) B_i -> S(1)
                add_component(
                    lev, ("ring", s, lev, idx), ("prod", s, lev, idx), vertical
                )
            else:  # S(-1) -> S (x) B_i, placed one level down
                add_component(
                    lev - 1, ("prod", s, lev, idx), ("ring", s, lev, idx), vertical
                )

    # stage 2: split each product summand through the library
    out_levels: dict[int, list[GradedBimodule]] = {}
    incls: dict[int, list[tuple[int, PolyMatrix]]] = {}
    projs: dict[int, list[tuple[int, PolyMatrix]]] = {}
    for lev in sorted(levels):
        out_levels[lev] = []
        incls[lev] = []
        projs[lev] = []
        for pos, item in enumerate(levels[lev]):
            kind, s = item[0], item[1]
            if kind == "ring":
                out_levels[lev].append(s.shifted(ring_level_offset))
                ident = pmat_identity(s.rank, n)
                incls[lev].append((pos, ident))
                projs[lev].append((pos, ident))
            else:
                for part, incl, proj in lib.product_parts(s.label, i):
                    out_levels[lev].append(part.shifted(s.shift))
                    incls[lev].append((pos, incl))
                    projs[lev].append((pos, proj))
    out_diff: dict[int, dict] = {}
    for lev, comps in diff.items():
        if lev + 1 not in projs:
            continue
        for rr, (rpos, proj) in enumerate(projs[lev + 1]):
            for cc, (cpos, incl) in enumerate(incls[lev]):
                mat = comps.get((rpos, cpos))
                if mat is None:
                    continue
                piece = pmat_mul(proj, pmat_mul(mat, incl))
                if not pmat_is_zero(piece):
                    out_diff.setdefault(lev, {})[(rr, cc)] = piece
    result = ChainComplex(n, out_levels, out_diff)
    minimize(result)
    return result


def shift_complex(cx: ChainComplex, r: int) -> ChainComplex:
    """Internal shift (r) applied to every summand."""
    return ChainComplex(
        cx.n,
        {i: [m.shifted(r) for m in mods] for i, mods in cx.levels.items()},
        {i: dict(c) for i, c in cx.differential.items()},
    )


def translate_complex(cx: ChainComplex, t: int) -> ChainComplex:
    """Homological translation [t]: level i becomes level i - t."""
    sign = mpq(-1) if t % 2 else mpq(1)
    return ChainComplex(
        cx.n,
        {i - t: list(mods) for i, mods in cx.levels.items()},
        {
            i - t: {k: pmat_scale(m, sign) for k, m in comps.items()}
            for i, comps in cx.differential.items()
        },
    )


_pair_cache: dict = {}


def _split_product(left: GradedBimodule, right: GradedBimodule):
    """Cached decomposition of (left base) (x) (right base) by label pair."""
    n = left.n
    key = (n, left.label, right.label)
    if key not in _pair_cache:
        lib = library(n)
        base_l = lib.by_label(left.label)
        base_r = lib.by_label(right.label)
        from khr.bimodules import tensor

        _pair_cache[key] = lib.decompose(tensor(base_l, base_r))
    return _pair_cache[key]


def tensor_complexes(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """a (x) b with all product summands split; not minimized."""
    n = a.n
    levels: dict[int, list] = {}
    placement: dict = {}
    out_levels: dict[int, list[GradedBimodule]] = {}
    splits: dict = {}
    for i, mods_a in a.levels.items():
        for ai, s in enumerate(mods_a):
            for j, mods_b in b.levels.items():
                for bj, t in enumerate(mods_b):
                    lev = i + j
                    parts = _split_product(s, t)
                    start = len(out_levels.setdefault(lev, []))
                    for part, _, _ in parts:
                        out_levels[lev].append(part.shifted(s.shift + t.shift))
                    placement[(i, ai, j, bj)] = (lev, start, parts, s, t)
    out_diff: dict[int, dict] = {}

    def add(lev, r, c, mat):
        if pmat_is_zero(mat):
            return
        cur = out_diff.setdefault(lev, {}).get((r, c))
        out_diff[lev][(r, c)] = mat if cur is None else pmat_add(cur, mat)

    for (i, ai, j, bj), (lev, start, parts, s, t) in placement.items():
        # d_a (x) id
        for (r, c), mat in a.differential.get(i, {}).items():
            if c != ai:
                continue
            tgt = a.levels[i + 1][r]
            key2 = (i + 1, r, j, bj)
            lev2, start2, parts2, s2, t2 = placement[key2]
            big = map_tensor(mat, pmat_identity(t.rank, n), tgt, t.rank)
            for pi2, (p2, _, proj2) in enumerate(parts2):
                for pi1, (p1, incl1, _) in enumerate(parts):
                    piece = pmat_mul(proj2, pmat_mul(big, incl1))
                    add(lev, start2 + pi2, start + pi1, piece)
        # (-1)^i id (x) d_b
        sign = mpq(-1) if i % 2 else mpq(1)
        for (r, c), mat in b.differential.get(j, {}).items():
            if c != bj:
                continue
            tgt = b.levels[j + 1][r]
            key2 = (i, ai, j + 1, r)
            lev2, start2, parts2, s2, t2 = placement[key2]
            big = pmat_scale(
                map_tensor(pmat_identity(s.rank, n), mat, s, t.rank), sign
            )
            for pi2, (p2, _, proj2) in enumerate(parts2):
                for pi1, (p1, incl1, _) in enumerate(parts):
                    piece = pmat_mul(proj2, pmat_mul(big, incl1))
                    add(lev, start2 + pi2, start + pi1, piece)
    result = ChainComplex(n, {i: mods for i, mods in out_levels.items() if mods}, out_diff)
    return result


def cone(f_comps: dict[int, dict], x: ChainComplex, y: ChainComplex) -> ChainComplex:
    """Mapping cone of a chain map f: X -> Y given by per-level components.

    Cone level i is Y_i + X_{i+1}, with differential [[d_Y, f], [0, -d_X]].
    """
    n = x.n
    levels: dict[int, list[GradedBimodule]] = {}
    for i in set(y.levels) | {i - 1 for i in x.levels}:
        mods = list(y.levels.get(i, [])) + list(x.levels.get(i + 1, []))
        if mods:
            levels[i] = mods
    diff: dict[int, dict] = {}
    for i in levels:
        ny = len(y.levels.get(i, []))
        ny1 = len(y.levels.get(i + 1, []))
        comps: dict = {}
        for (r, c), m in y.differential.get(i, {}).items():
            comps[(r, c)] = m
        for (r, c), m in f_comps.get(i + 1, {}).items():
            comps[(r, ny + c)] = m
        for (r, c), m in x.differential.get(i + 1, {}).items():
            comps[(ny1 + r, ny + c)] = pmat_scale(m, mpq(-1))
        if comps:
            diff[i] = comps
    return ChainComplex(n, levels, diff)


def chain_maps(a: ChainComplex, b: ChainComplex):
    """All degree-0 chain maps a -> b, as per-level component dicts."""
    basis, slots = _chain_map_space(a, b)
    return [_assemble_chain_map(vec, slots, a, b) for vec in basis]


def hecke_classes(n: int):
    """Hecke-algebra class of every indecomposable label, computed inductively.

    [B_w] is read off from the split products: [B_{w'}][B_s] minus the
    classes of the lower summands.  Requires naming all cells via b_w.
    """
    import itertools as it

    from khr import braids, hecke
    from khr.bimodules import b_w
    from khr.scalars import v_power

    lib = library(n)
    classes: dict = {"R": hecke.HeckeElement.unit(n)}
    perms = sorted(it.permutations(range(n)), key=braids.inversions)
    for w in perms:
        if w == braids.identity(n):
            continue
        word = braids.reduced_word(w)
        mod = b_w(n, w)
        if mod.label in classes:
            continue
        if len(word) == 1:
            classes[mod.label] = hecke.HeckeElement.make(
                n,
                {
                    braids.evaluate_word(word, n): hecke.ONE,
                    braids.identity(n): v_power(-1),
                },
            )
            continue
        prev = b_w(n, braids.evaluate_word(word[:-1], n))
        bs = hecke.HeckeElement.make(
            n,
            {
                braids.evaluate_word((word[-1],), n): hecke.ONE,
                braids.identity(n): v_power(-1),
            },
        )
        total = hecke.hecke_multiply(classes[prev.label], bs)
        parts = lib.product_parts(prev.label, word[-1])
        top_seen = False
        for part, _, _ in parts:
            if part.label == mod.label and part.shift == 0 and not top_seen:
                top_seen = True
                continue
            total = total - classes[part.label].scale(v_power(-part.shift))
        classes[mod.label] = total
    return classes


def decategorify(cx: ChainComplex):
    """Alternating sum of summand classes in the Hecke algebra."""
    from khr import hecke
    from khr.scalars import LaurentScalar, v_power

    classes = hecke_classes(cx.n)
    total = hecke.HeckeElement(cx.n, {})
    for i, mods in cx.levels.items():
        sign = LaurentScalar.from_int(-1 if i % 2 else 1)
        for m in mods:
            total = total + classes[m.label].scale(v_power(-m.shift) * sign)
    return total


def rouquier_complex(b: BraidWord, check: bool = False) -> ChainComplex:
    """Minimized Rouquier complex of a braid word."""
    cx = unit_complex(b.strand_count)
    for a in b.letters:
        cx = tensor_with_crossing(cx, abs(a), a > 0)
        if check:
            cx.validate()
    return cx


# -- Gaussian elimination -----------------------------------------------------


def _constant_part(mat: PolyMatrix, n: int):
    zero = (0,) * n
    return [[mpq(f.coefficient(zero)) for f in row] for row in mat]


def pmat_inverse(mat: PolyMatrix, n: int) -> PolyMatrix | None:
    """Inverse of a square matrix over R whose scalar part is invertible.

    Writes mat = D + P with D scalar and P of positive degree; the Neumann
    series for (I + D^-1 P)^-1 terminates because entry degrees are bounded.
    """
    d0 = _constant_part(mat, n)
    dinv = linalg.invert_dense(d0)
    if dinv is None:
        return None
    dinv_poly = tuple(
        tuple(Poly.constant(n, v) for v in row) for row in dinv
    )
    zero_exp = (0,) * n
    p_part = tuple(
        tuple(
            Poly.make(n, {e: c for e, c in f.terms if e != zero_exp})
            for f in row
        )
        for row in mat
    )
    nilp = pmat_scale(pmat_mul(dinv_poly, p_part), mpq(-1))
    total = pmat_identity(len(mat), n)
    term = nilp
    guard = 0
    while not pmat_is_zero(term):
        total = pmat_add(total, term)
        term = pmat_mul(nilp, term)
        guard += 1
        assert guard < 200, "Neumann series failed to terminate"
    return pmat_mul(total, dinv_poly)


def minimize(cx: ChainComplex) -> ChainComplex:
    """Remove contractible pairs (Gaussian elimination) until none remain."""
    progress = True
    while progress:
        progress = False
        for lev in sorted(cx.levels):
            if lev not in cx.levels:
                continue
            comps = cx.differential.get(lev)
            if not comps or lev + 1 not in cx.levels:
                continue
            hit = None
            for (r, c), mat in comps.items():
                src = cx.levels[lev][c]
                tgt = cx.levels[lev + 1][r]
                if src.label != tgt.label or src.shift != tgt.shift:
                    continue
                inv = pmat_inverse(mat, cx.n)
                if inv is not None:
                    hit = (lev, r, c, inv)
                    break
            if hit is not None:
                _eliminate(cx, *hit)
                progress = True
    return cx


def _eliminate(cx: ChainComplex, lev: int, r0: int, c0: int, delta_inv: PolyMatrix):
    comps = cx.differential.get(lev, {})
    betas = {r: m for (r, c), m in comps.items() if c == c0 and r != r0}
    gammas = {c: m for (r, c), m in comps.items() if r == r0 and c != c0}
    for r, beta in betas.items():
        correction_left = pmat_mul(beta, delta_inv)
        for c, gamma in gammas.items():
            piece = pmat_scale(pmat_mul(correction_left, gamma), mpq(-1))
            old = comps.get((r, c))
            new = piece if old is None else pmat_add(old, piece)
            if pmat_is_zero(new):
                comps.pop((r, c), None)
            else:
                comps[(r, c)] = new
    _drop_summand(cx, lev, c0, incoming_level=lev - 1)
    _drop_summand(cx, lev + 1, r0, incoming_level=lev)


def _drop_summand(cx: ChainComplex, lev: int, idx: int, incoming_level: int):
    del cx.levels[lev][idx]

    def reindex(table: dict, source_side: bool):
        out = {}
        for (r, c), m in table.items():
            if source_side:
                if c == idx:
                    continue
                out[(r, c - 1 if c > idx else c)] = m
            else:
                if r == idx:
                    continue
                out[(r - 1 if r > idx else r, c)] = m
        return out

    if lev in cx.differential:
        cx.differential[lev] = reindex(cx.differential[lev], True)
        if not cx.differential[lev]:
            del cx.differential[lev]
    if incoming_level in cx.differential:
        cx.differential[incoming_level] = reindex(
            cx.differential[incoming_level], False
        )
        if not cx.differential[incoming_level]:
            del cx.differential[incoming_level]
    if not cx.levels[lev]:
        del cx.levels[lev]


# -- homotopy equivalence -----------------------------------------------------


def _chain_map_space(cx: ChainComplex, other: ChainComplex):
    """Basis of degree-0 chain maps cx -> other, as per-level component dicts.

    Components are expanded in hom_space bases; the commutation constraint
    f d = d f is a scalar linear system on the expansion coefficients.
    """
    slots = []  # (level, r, c, hom basis element)
    for lev in cx.level_range():
        for c, src in enumerate(cx.levels.get(lev, [])):
            for r, tgt in enumerate(other.levels.get(lev, [])):
                for h in hom_space(src, tgt, 0):
                    slots.append((lev, r, c, h))
    if not slots:
        return [], slots
    equations: dict = {}
    for vidx, (lev, r, c, h) in enumerate(slots):
        # term d_other . f at (lev, target r2 of other at lev+1, source c)
        for r2 in range(len(other.levels.get(lev + 1, []))):
            dmat = other.differential.get(lev, {}).get((r2, r))
            if dmat is None:
                continue
            prod = pmat_mul(dmat, h)
            _accumulate(equations, ("q", lev, r2, c), vidx, prod, mpq(1))
    for vidx, (lev, r, c, h) in enumerate(slots):
        # the same component also appears as f_{lev} . d_cx^{lev-1}
        for c2 in range(len(cx.levels.get(lev - 1, []))):
            dmat = cx.differential.get(lev - 1, {}).get((c, c2))
            if dmat is None:
                continue
            prod = pmat_mul(h, dmat)
            _accumulate(equations, ("q", lev - 1, r, c2), vidx, prod, mpq(-1))
    coeff_basis = linalg.nullspace(list(equations.values()), len(slots))
    return coeff_basis, slots


def _accumulate(equations, key_prefix, vidx, mat, sign):
    for rr, row in enumerate(mat):
        for cc, f in enumerate(row):
            for e, coef in f.terms:
                k = key_prefix + (rr, cc, e)
                row_d = equations.setdefault(k, {})
                row_d[vidx] = row_d.get(vidx, mpq(0)) + sign * coef
                if row_d[vidx] == 0:
                    del row_d[vidx]


def _assemble_chain_map(vec, slots, cx, other):
    comps: dict[int, dict] = {}
    for vidx, coeff in vec.items():
        lev, r, c, h = slots[vidx]
        addition = pmat_scale(h, coeff)
        cur = comps.setdefault(lev, {}).get((r, c))
        comps[lev][(r, c)] = addition if cur is None else pmat_add(cur, addition)
    return comps


def _is_chain_iso(comps, cx, other) -> bool:
    for lev in set(cx.levels) | set(other.levels):
        a = sum(m.rank for m in cx.levels.get(lev, []))
        b = sum(m.rank for m in other.levels.get(lev, []))
        if a != b:
            return False
        if a == 0:
            continue
        # graded Nakayama: invertible iff the scalar reduction is
        blocks = comps.get(lev, {})
        full = [[mpq(0)] * a for _ in range(b)]
        roff = 0
        for r, tgt in enumerate(other.levels.get(lev, [])):
            coff = 0
            for c, src in enumerate(cx.levels.get(lev, [])):
                mat = blocks.get((r, c))
                if mat is not None:
                    zero = (0,) * cx.n
                    for i in range(tgt.rank):
                        for j in range(src.rank):
                            if tgt.degrees[i] == src.degrees[j]:
                                full[roff + i][coff + j] = mpq(
                                    mat[i][j].coefficient(zero)
                                )
                coff += src.rank
            roff += tgt.rank
        if linalg.invert_dense(full) is None:
            return False
    return True


def complexes_equivalent(a: ChainComplex, b: ChainComplex, tries: int = 8) -> bool:
    """Homotopy equivalence test: minimize both, then look for a chain iso.

    Minimal complexes are homotopy equivalent iff isomorphic, and a generic
    element of the chain-map space between isomorphic minimal complexes is an
    isomorphism, so a few random combinations decide the question.
    """
    a = minimize(_copy(a))
    b = minimize(_copy(b))
    if a.graded_ranks() != b.graded_ranks():
        return False
    if a.total_rank() == 0:
        return True
    basis, slots = _chain_map_space(a, b)
    if not basis:
        return False
    rng = random.Random(7)
    for attempt in range(tries):
        vec: dict = {}
        for bvec in basis:
            weight = mpq(rng.randint(-5, 5)) if attempt else mpq(1)
            for k, v in bvec.items():
                vec[k] = vec.get(k, mpq(0)) + weight * v
        comps = _assemble_chain_map(vec, slots, a, b)
        if _is_chain_iso(comps, a, b):
            return True
    return False


def _copy(cx: ChainComplex) -> ChainComplex:
    return ChainComplex(
        cx.n,
        {i: list(mods) for i, mods in cx.levels.items()},
        {i: dict(c) for i, c in cx.differential.items()},
    )
