from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import Scalars
from oracles import rank as oracle_rank
from skewcat.exactlin import (GF, QQ, FieldMismatchError, FieldSpec, Fp, Matrix, ShapeError,
                              infer_field, inverse, kernel_basis, rank, rref, solve)

FIELD_NAMES = ["QQ", "GF(2)", "GF(3)", "GF(5)"]


@st.composite
def matrices(draw, max_rows=5, max_cols=5, field_name=None):
    name = field_name or draw(st.sampled_from(FIELD_NAMES))
    f = FieldSpec.from_name(name)
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    entries = draw(st.lists(st.integers(-3, 3), min_size=r * c, max_size=r * c))
    return Matrix(f, r, c, entries)


def as_oracle(m: Matrix):
    s = Scalars(m.field.name)
    return [[s.parse(str(x)) for x in row] for row in m.to_rows()], s


# fields

def test_fp_arithmetic():
    a, b = Fp(3, 5), Fp(4, 5)
    assert a + b == 2
    assert a * b == 2
    assert a - b == 4
    assert a / b == Fp(2, 5)
    assert -a == 2
    assert a.inverse() * a == 1


def test_fp_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        Fp(0, 7).inverse()


def test_mixing_fields_raises():
    with pytest.raises(FieldMismatchError):
        Fp(1, 2) + Fp(1, 3)
    with pytest.raises(FieldMismatchError):
        Fp(1, 2) * Fraction(1, 2)
    with pytest.raises(FieldMismatchError):
        GF(2)(Fp(1, 3))
    with pytest.raises(FieldMismatchError):
        Matrix.identity(QQ, 2) + Matrix.identity(GF(2), 2)


def test_field_names_roundtrip():
    for name in FIELD_NAMES:
        assert FieldSpec.from_name(name).name == name
    with pytest.raises(ValueError):
        FieldSpec.from_name("GF(4)")


def test_parse_and_format():
    assert QQ.parse("-3/4") == Fraction(-3, 4)
    assert GF(3).parse("5") == 2
    assert QQ.format(Fraction(1, 2)) == "1/2"


def test_infer_field():
    assert infer_field([1, Fraction(1, 2)]) == QQ
    assert infer_field([Fp(1, 5), 2]) == GF(5)
    with pytest.raises(FieldMismatchError):
        infer_field([Fp(1, 5), Fp(1, 3)])


# matrices: worked examples

def test_rank_proportional_rows():
    assert rank(Matrix.from_rows([[1, 2], [2, 4]], QQ)) == 1


def test_rank_identity_pivots():
    r, pivots = rref(Matrix.identity(QQ, 3))
    assert rank(Matrix.identity(QQ, 3)) == 3
    assert list(pivots) == [0, 1, 2]
    assert r == Matrix.identity(QQ, 3)


def test_rank_equal_rows_gf2():
    assert rank(Matrix.from_rows([[1, 1], [1, 1]], GF(2))) == 1


def test_kernel_of_zero_is_everything():
    assert kernel_basis(Matrix.zeros(QQ, 2, 2)).cols == 2


def test_kernel_of_identity_is_empty():
    assert kernel_basis(Matrix.identity(QQ, 3)).cols == 0


def test_kernel_of_row_vector():
    m = Matrix.from_rows([[1, 1]], QQ)
    k = kernel_basis(m)
    assert k.cols == 1
    v = k.col(0)
    assert v[0] == -v[1] != 0
    assert (m @ k).is_zero()


def test_solve_identity_returns_rhs():
    rhs = Matrix.column(QQ, [3, Fraction(1, 7)])
    assert solve(Matrix.identity(QQ, 2), rhs) == rhs


def test_solve_inconsistent_is_none():
    assert solve(Matrix.from_rows([[1], [1]], QQ), Matrix.column(QQ, [1, 2])) is None


def test_solve_scalar_division():
    x = solve(Matrix.from_rows([[2]], QQ), Matrix.column(QQ, [1]))
    assert x[0, 0] == Fraction(1, 2)


def test_inverse_gf3():
    m = Matrix.from_rows([[1, 1], [0, 2]], GF(3))
    assert m @ inverse(m) == Matrix.identity(GF(3), 2)
    assert inverse(Matrix.from_rows([[1, 1], [1, 1]], GF(3))) is None


def test_shape_errors():
    with pytest.raises(ShapeError):
        Matrix.identity(QQ, 2) @ Matrix.identity(QQ, 3)
    with pytest.raises(ShapeError):
        Matrix(QQ, 2, 2, [1, 2, 3])


def test_matrix_is_immutable_value():
    m = Matrix.from_rows([[1, 2], [3, 4]], QQ)
    m2 = m.with_entry(0, 0, 5)
    assert m[0, 0] == 1 and m2[0, 0] == 5
    assert hash(m) == hash(Matrix.from_rows([[1, 2], [3, 4]], QQ))


# properties

@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).cols == m.cols


@given(matrices())
def test_rank_matches_sympy(m):
    rows, s = as_oracle(m)
    assert rank(m) == oracle_rank(rows, s)


@given(matrices())
def test_kernel_vectors_are_killed_and_independent(m):
    k = kernel_basis(m)
    assert (m @ k).is_zero()
    assert rank(k) == k.cols


@given(matrices())
def test_rref_idempotent(m):
    r, _ = rref(m)
    assert rref(r)[0] == r


@given(matrices(), st.data())
def test_solve_is_exact(m, data):
    x = Matrix(m.field, m.cols, 1, data.draw(st.lists(st.integers(-3, 3), min_size=m.cols, max_size=m.cols)))
    rhs = m @ x
    sol = solve(m, rhs)
    assert sol is not None
    assert m @ sol == rhs


@given(matrices(max_rows=4, max_cols=4))
def test_inverse_when_square(m):
    if m.rows != m.cols:
        return
    inv = inverse(m)
    assert (inv is not None) == (rank(m) == m.rows)
    if inv is not None:
        assert m @ inv == Matrix.identity(m.field, m.rows)
        assert inv @ m == Matrix.identity(m.field, m.rows)


@given(matrices(), matrices())
def test_transpose_reverses_products(a, b):
    if a.field != b.field or a.cols != b.rows:
        return
    assert (a @ b).transpose() == b.transpose() @ a.transpose()
