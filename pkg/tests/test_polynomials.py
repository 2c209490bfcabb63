import random

from gmpy2 import mpq
from hypothesis import given, strategies as st

from khr import linalg
from khr.polynomials import (
    Poly,
    complete_homogeneous,
    elementary_symmetric,
    evaluate,
    monomials_of_degree,
)


def random_poly(rng, nvars=2, nterms=3, maxexp=2):
    coeffs = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, maxexp) for _ in range(nvars))
        coeffs[e] = mpq(rng.randint(-3, 3))
    return Poly.make(nvars, coeffs)


def test_poly_arithmetic():
    rng = random.Random(1)
    for _ in range(25):
        f, g, h = (random_poly(rng) for _ in range(3))
        assert (f + g) - g == f
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h


def test_degree_convention():
    x = Poly.variable(0, 2)
    assert x.degree() == 2
    assert (x * x).degree() == 4
    assert Poly.zero(2).degree() == -1
    assert Poly.one(3).degree() == 0


def test_homogeneity():
    x, y = Poly.variable(0, 2), Poly.variable(1, 2)
    assert (x * x + x * y).is_homogeneous()
    assert not (x + Poly.one(2)).is_homogeneous()


def test_substitute():
    x, y = Poly.variable(0, 2), Poly.variable(1, 2)
    f = x * x - y
    assert f.substitute([y, x]) == y * y - x


@given(st.integers(1, 4), st.integers(0, 4))
def test_monomials_of_degree_count(nvars, half_degree):
    from math import comb

    monos = monomials_of_degree(nvars, 2 * half_degree)
    assert len(monos) == comb(half_degree + nvars - 1, nvars - 1)
    assert all(sum(e) == half_degree for e in monos)
    assert monomials_of_degree(nvars, 2 * half_degree + 1) == []


def test_newton_identity():
    # e_1 h_1 = h_2 + e_2 in 3 variables
    n = 3
    e1, e2 = elementary_symmetric(n, 1), elementary_symmetric(n, 2)
    h1, h2 = complete_homogeneous(n, 1), complete_homogeneous(n, 2)
    assert e1 * h1 == h2 + e2


def test_evaluate_on_polynomials():
    x, y = Poly.variable(0, 2), Poly.variable(1, 2)
    f = elementary_symmetric(2, 2)  # x1 x2
    assert evaluate(f, [x + y, x - y], Poly.one(2)) == x * x - y * y


# -- exact sparse linear algebra ----------------------------------------------


def random_rows(rng, nrows, ncols, density=0.5):
    rows = []
    for _ in range(nrows):
        row = {
            c: mpq(rng.randint(-4, 4))
            for c in range(ncols)
            if rng.random() < density
        }
        rows.append({c: v for c, v in row.items() if v != 0})
    return rows


def test_rank_nullity():
    rng = random.Random(7)
    for _ in range(40):
        ncols = rng.randint(1, 6)
        rows = random_rows(rng, rng.randint(1, 6), ncols)
        r = linalg.rank(rows)
        kernel = linalg.nullspace(rows, ncols)
        assert r + len(kernel) == ncols
        for vec in kernel:
            for row in rows:
                s = sum(v * vec.get(c, mpq(0)) for c, v in row.items())
                assert s == 0


def test_solve_consistent_systems():
    rng = random.Random(8)
    for _ in range(40):
        ncols = rng.randint(1, 5)
        rows = random_rows(rng, rng.randint(1, 5), ncols)
        x = [mpq(rng.randint(-3, 3)) for _ in range(ncols)]
        rhs = [
            sum(v * x[c] for c, v in row.items()) if row else mpq(0)
            for row in rows
        ]
        sol = linalg.solve(rows, rhs, ncols)
        assert sol is not None
        for row, b in zip(rows, rhs):
            assert sum(v * sol.get(c, mpq(0)) for c, v in row.items()) == b


def test_solve_inconsistent():
    rows = [{0: mpq(1)}, {0: mpq(1)}]
    assert linalg.solve(rows, [mpq(1), mpq(2)], 1) is None


def test_invert_dense():
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = [[mpq(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        inv = linalg.invert_dense(m)
        if inv is None:
            assert linalg.rank(
                [{j: v for j, v in enumerate(row) if v != 0} for row in m]
            ) < n
        else:
            for i in range(n):
                for j in range(n):
                    s = sum(m[i][k] * inv[k][j] for k in range(n))
                    assert s == (1 if i == j else 0)
