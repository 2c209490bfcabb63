"""Verification suites: trace identities cross-checked against the homological engine.

Two regression computations pin down the convolution of Rouquier complexes
with the Koszul complex K_S in ranks one and two (``verify_appendix_a1``,
``verify_appendix_a2``), and ``verify_all`` runs every suite and collects a
machine-readable report.

The rank-one computation is usually stated over one variable x with
s(x) = -x; in the two-variable realization used here the role of x is played
by the root x1 - x2 and y by its right action.
"""

from __future__ import annotations

import dataclasses
import time
from typing import Callable, Optional

from gmpy2 import mpq

from khr import hecke
from khr.bimodules import (
    GradedBimodule,
    PolyMatrix,
    library,
    pmat_add,
    pmat_is_zero,
    pmat_mul,
    pmat_scale,
)
from khr.braids import BraidWord
from khr.complexes import (
    ChainComplex,
    chain_maps,
    complexes_equivalent,
    cone,
    counit_map,
    delta_complex,
    minimize,
    nabla_complex,
    rouquier_complex,
    shift_complex,
    tensor_complexes,
    translate_complex,
    unit_complex,
)
from khr.hochschild import (
    euler_bridge_check,
    koszul_soergel_complex,
    markov_invariance_check,
    max_degree_default,
)
from khr.polynomials import Poly


@dataclasses.dataclass
class Check:
    name: str
    passed: bool
    seconds: float
    detail: str = ""

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def _run(checks: list[Check], name: str, thunk: Callable[[], bool], detail: str = ""):
    t0 = time.time()
    try:
        ok = bool(thunk())
    except Exception as exc:  # report, do not abort the suite
        checks.append(Check(name, False, time.time() - t0, f"error: {exc}"))
        return
    checks.append(Check(name, ok, time.time() - t0, detail))


def _root_plus(m: GradedBimodule) -> PolyMatrix:
    """Left plus right multiplication by the root x1 - x2 on ``m`` (n = 2)."""
    rho = Poly.variable(0, 2) - Poly.variable(1, 2)
    left = tuple(
        tuple(rho if r == c else Poly.zero(2) for c in range(m.rank))
        for r in range(m.rank)
    )
    right = tuple(
        tuple(m.action[0][r][c] - m.action[1][r][c] for c in range(m.rank))
        for r in range(m.rank)
    )
    return pmat_add(left, right)


def _is_chain_map(f_comps: dict, x: ChainComplex, y: ChainComplex) -> bool:
    """Does f d_X = d_Y f hold componentwise?"""
    for i in x.level_range():
        for c in range(len(x.levels.get(i, []))):
            for r in range(len(y.levels.get(i + 1, []))):
                total = None
                for k in range(len(y.levels.get(i, []))):
                    a = f_comps.get(i, {}).get((k, c))
                    d = y.differential.get(i, {}).get((r, k))
                    if a is not None and d is not None:
                        p = pmat_mul(d, a)
                        total = p if total is None else pmat_add(total, p)
                for k in range(len(x.levels.get(i + 1, []))):
                    d = x.differential.get(i, {}).get((k, c))
                    a = f_comps.get(i + 1, {}).get((r, k))
                    if a is not None and d is not None:
                        p = pmat_scale(pmat_mul(a, d), -1)
                        total = p if total is None else pmat_add(total, p)
                if total is not None and not pmat_is_zero(total):
                    return False
    return True


def _sum_maps(maps: list[dict]) -> dict:
    """Sum of chain maps given as per-level component dicts."""
    comps: dict = {}
    for m in maps:
        for lev, blocks in m.items():
            for rc, mat in blocks.items():
                cur = comps.setdefault(lev, {}).get(rc)
                comps[lev][rc] = mat if cur is None else pmat_add(cur, mat)
    return comps


# -- rank one -----------------------------------------------------------------


def verify_appendix_a1() -> list[Check]:
    """Rank-one regression: the convolution nabla_s (x) K_S and its triangle.

    Asserts the shape of K_S, identifies nabla_s K_S with the two-step
    complex B_s(-1) -> B_s(1) (differential minus left-plus-right root), checks
    the displayed square is a chain map (with two negative controls), that its
    cone is nabla_s(1), and the two convolutions back with Delta_s.
    """
    checks: list[Check] = []
    lib = library(2)
    b1 = lib.by_label("B1")
    ks = koszul_soergel_complex(2)
    _run(
        checks,
        "a1.koszul_shape",
        lambda: sorted(ks.levels) == [-1, 0]
        and [(m.label, m.shift) for m in ks.levels[-1]] == [("B1", -2)]
        and [(m.label, m.shift) for m in ks.levels[0]] == [("B1", 0)],
    )

    nk = minimize(tensor_complexes(nabla_complex(2, 1), ks))
    expected = ChainComplex(
        2,
        {-1: [b1.shifted(-1)], 0: [b1.shifted(1)]},
        {-1: {(0, 0): pmat_scale(_root_plus(b1), -1)}},
    )
    expected.validate()
    _run(checks, "a1.nabla_ks_shape", lambda: complexes_equivalent(nk, expected))

    # Delta_s[1](-1): B_s(-1) -> R in levels (-1, 0); the square has vertical
    # components the identity and 1 |-> x + y (x the root).
    top = translate_complex(shift_complex(delta_complex(2, 1), -1), 1)
    ident = tuple(
        tuple(Poly.one(2) if r == c else Poly.zero(2) for c in range(2))
        for r in range(2)
    )
    rho_plus = _root_plus(b1)
    f0 = tuple((row[0],) for row in rho_plus)  # 1 |-> rho (x) 1 + 1 (x) rho
    square = {-1: {(0, 0): ident}, 0: {(0, 0): f0}}
    _run(checks, "a1.square_chain_map", lambda: _is_chain_map(square, top, expected))
    bad = {-1: {(0, 0): ident}, 0: {(0, 0): pmat_scale(f0, -1)}}
    _run(
        checks,
        "a1.sign_flip_fails",
        lambda: not _is_chain_map(bad, top, expected),
        detail="negative control",
    )

    conek = minimize(cone(square, top, expected))
    nabla1 = shift_complex(nabla_complex(2, 1), 1)
    _run(checks, "a1.cone_is_nabla", lambda: complexes_equivalent(conek, nabla1))
    delta1 = shift_complex(delta_complex(2, 1), 1)
    _run(
        checks,
        "a1.wrong_target_fails",
        lambda: not complexes_equivalent(conek, delta1),
        detail="negative control",
    )

    # Convolving the two pieces back with Delta_s: H^0 = R(1), H^{-1} = Delta_s^2(-1).
    _run(
        checks,
        "a1.h0_is_r1",
        lambda: complexes_equivalent(
            minimize(tensor_complexes(delta_complex(2, 1), nabla1)),
            shift_complex(unit_complex(2), 1),
        ),
    )
    _run(
        checks,
        "a1.hm1_is_delta_squared",
        lambda: complexes_equivalent(
            minimize(
                tensor_complexes(
                    delta_complex(2, 1),
                    translate_complex(shift_complex(delta_complex(2, 1), -1), 1),
                )
            ),
            translate_complex(
                shift_complex(rouquier_complex(BraidWord(2, (1, 1))), -1), 1
            ),
        ),
    )
    return checks


# -- rank two -----------------------------------------------------------------


def verify_appendix_a2() -> list[Check]:
    """Rank-two regression: nabla_w0 (x) K_S, its cones, and the middle piece.

    The convolution is a three-step complex of copies of B_121; coning off
    Delta_w0[3](-1) and then the projection to nabla_w0(3) leaves the middle
    cohomology, an extension of the two displayed one-crossing convolutions
    nabla_2 Delta_1 Delta_2 and nabla_1 nabla_2 Delta_1.
    """
    checks: list[Check] = []
    ks = koszul_soergel_complex(3)
    _run(
        checks,
        "a2.koszul_shape",
        lambda: sorted(ks.levels) == [-2, -1, 0]
        and [m.shift for m in ks.levels[-2]] == [-4]
        and [m.shift for m in ks.levels[-1]] == [-2, -2]
        and all(m.rank == 6 for lev in ks.levels.values() for m in lev),
    )

    nab = rouquier_complex(BraidWord(3, (-1, -2, -1)))
    _run(
        checks,
        "a2.nabla_w0_shape",
        lambda: {
            i: sorted((m.rank, m.shift) for m in mods)
            for i, mods in nab.levels.items()
        }
        == {
            -3: [(1, -3)],
            -2: [(2, -2), (2, -2)],
            -1: [(4, -1), (4, -1)],
            0: [(6, 0)],
        },
    )

    nk = minimize(tensor_complexes(nab, ks))
    _run(
        checks,
        "a2.nabla_ks_shape",
        lambda: {
            i: sorted((m.rank, m.shift) for m in mods)
            for i, mods in nk.levels.items()
        }
        == {
            -2: [(6, -1)],
            -1: [(6, 1), (6, 1)],
            0: [(6, 3)],
        },
    )

    # cone off the bottom piece Delta_w0[2](-1), then the projection to
    # nabla_w0(3); what remains is the middle cohomology, an extension of the
    # two one-crossing convolutions with an extra internal shift (1)
    delta_w0 = rouquier_complex(BraidWord(3, (1, 2, 1)))
    top = translate_complex(shift_complex(delta_w0, -1), 2)
    bottom_maps = chain_maps(top, nk)
    _run(checks, "a2.bottom_map_unique", lambda: len(bottom_maps) == 1)
    c1 = minimize(cone(bottom_maps[0], top, nk)) if bottom_maps else nk
    nabla3 = shift_complex(nab, 3)
    proj = _sum_maps(chain_maps(c1, nabla3))
    c2 = minimize(cone(proj, c1, nabla3))

    v2d12 = minimize(rouquier_complex(BraidWord(3, (-2, 1, 2))))
    v12d1 = minimize(rouquier_complex(BraidWord(3, (-1, -2, 1))))
    sub = translate_complex(shift_complex(v2d12, 1), 2)
    quot = translate_complex(shift_complex(v12d1, 1), 2)
    _run(
        checks,
        "a2.middle_graded_ranks",
        lambda: c2.graded_ranks() == _combined_ranks(sub, quot),
    )
    _run(
        checks,
        "a2.middle_triangle_maps",
        lambda: bool(chain_maps(sub, c2)) and bool(chain_maps(c2, quot)),
    )

    _run(
        checks,
        "a2.h0_is_r3",
        lambda: complexes_equivalent(
            minimize(tensor_complexes(delta_w0, nabla3)),
            shift_complex(unit_complex(3), 3),
        ),
    )
    _run(
        checks,
        "a2.hm2_is_delta_w0_squared",
        lambda: complexes_equivalent(
            minimize(tensor_complexes(delta_w0, top)),
            translate_complex(
                shift_complex(
                    rouquier_complex(BraidWord(3, (1, 2, 1, 1, 2, 1))), -1
                ),
                2,
            ),
        ),
    )
    return checks


def _combined_ranks(a: ChainComplex, b: ChainComplex):
    from collections import Counter

    out: dict[int, Counter] = {}
    for cx in (a, b):
        for i, ctr in cx.graded_ranks().items():
            out[i] = out.get(i, Counter()) + ctr
    return out


# -- the full battery ---------------------------------------------------------


SUITES = ("weights", "jm", "euler", "markov", "a1", "a2")


def verify_all(
    max_degree: Optional[int] = None,
    skip: tuple[str, ...] = (),
    suites: Optional[tuple[str, ...]] = None,
) -> dict:
    """Run the verification suites; returns a JSON-ready report with timings.

    ``suites`` selects which suites run (default all); ``skip`` marks suites
    as skipped in the report instead of running them.
    """
    if max_degree is None:
        max_degree = max_degree_default()
    wanted = SUITES if suites is None else tuple(suites)
    checks: list[Check] = []

    def want(s: str) -> bool:
        if s not in wanted:
            return False
        if s in skip:
            checks.append(Check(s, True, 0.0, "skipped"))
            return False
        return True

    if want("weights"):
        for n in (2, 3, 4):
            _run(
                checks,
                f"trace.weights_n{n}",
                lambda n=n: hecke.verify_weight_decomposition(n),
            )
    if want("jm"):
        import itertools

        for n in (2, 3):
            for k in range(1, n):
                _run(
                    checks,
                    f"trace.jm_n{n}_k{k}",
                    lambda n=n, k=k: all(
                        hecke.jm_elementary_identity(
                            hecke.HeckeElement.basis(n, w), k
                        )
                        for w in itertools.permutations(range(n))
                    ),
                )
    if want("euler"):
        euler_suite = [
            BraidWord(1, ()),
            BraidWord(2, (1,)),
            BraidWord(2, (1, 1)),
            BraidWord(2, (1, 1, 1)),
            BraidWord(3, (1, 2)),
            BraidWord(3, (1, -2)),
        ]
        for b in euler_suite:
            word = "empty" if not b.letters else str(b).replace(" ", "_")
            _run(
                checks,
                f"euler.{word}_n{b.strand_count}",
                lambda b=b: euler_bridge_check(b, max_degree),
            )
    if want("markov"):
        for b in [BraidWord(2, (1, 1, 1)), BraidWord(3, (1, -2))]:
            _run(
                checks,
                f"markov.{str(b).replace(' ', '_')}_n{b.strand_count}",
                lambda b=b: markov_invariance_check(b, min(max_degree, 10)),
            )
    if want("a1"):
        checks.extend(verify_appendix_a1())
    if want("a2"):
        checks.extend(verify_appendix_a2())
    return {
        "passed": all(c.passed for c in checks),
        "checks": [c.as_dict() for c in checks],
    }
