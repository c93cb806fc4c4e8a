"""Field arithmetic and exact elimination."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from courantalg.errors import DimensionMismatchError, FieldMismatchError
from courantalg.linalg import (
    GF,
    QQ,
    LinearMap,
    Matrix,
    coordinates_in_span,
    echelon_rows,
    field_from_string,
    is_zero_vector,
    reduce_mod_span,
    span_contains,
)

F2 = GF(2)
F5 = GF(5)


class TestFields:
    def test_rational_parse_and_format(self):
        assert QQ.parse("-3/4") == Fraction(-3, 4)
        assert QQ.parse("7") == Fraction(7)
        assert QQ.format(QQ.parse("2/4")) == "1/2"
        assert QQ.format(Fraction(-3)) == "-3"

    @pytest.mark.parametrize("bad", ["1/0", "1.5", "a", "", "3/-4", "1/2/3", "+ 1"])
    def test_rational_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            QQ.parse(bad)

    def test_prime_field_arithmetic(self):
        a, b = F5(3), F5(4)
        assert (a + b).value == 2
        assert (a * b).value == 2
        assert (a - b).value == 4
        assert (-a).value == 2
        assert (a / b).value == 2  # 3 * 4^-1 = 3 * 4 = 12 = 2
        assert (F5(1) / a).value == 2  # 3^-1 = 2

    def test_prime_field_parse(self):
        assert F5.parse("7").value == 2
        assert F5.parse("-1").value == 4
        assert F5.parse("1/2").value == 3
        with pytest.raises(ValueError):
            F5.parse("1/5")
        with pytest.raises(ValueError):
            F5.parse("x")
        assert F5.format(F5(-1)) == "4"

    def test_prime_field_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            F5(1) / F5(0)

    def test_field_mixing_rejected(self):
        with pytest.raises(FieldMismatchError):
            F5(1) + GF(7)(1)

    @pytest.mark.parametrize("p", [0, 1, 4, 6, 9, -3])
    def test_non_prime_characteristic_rejected(self, p):
        with pytest.raises(ValueError):
            GF(p)

    def test_field_from_string(self):
        assert field_from_string("Q") == QQ
        assert field_from_string("Fp:7") == GF(7)
        assert field_from_string("Fp:7").spec_string == "Fp:7"
        for bad in ("R", "Fp:8", "Fp:x", "q"):
            with pytest.raises(ValueError):
                field_from_string(bad)

    def test_field_equality(self):
        assert GF(5) == GF(5)
        assert GF(5) != GF(7)
        assert QQ != GF(5)


class TestMatrixBasics:
    def test_rank_identity(self):
        assert Matrix.identity(QQ, 3).rank() == 3

    def test_rank_proportional_rows(self):
        assert Matrix(QQ, [[1, 2], [2, 4]]).rank() == 1

    def test_rank_equal_rows_mod_2(self):
        assert Matrix(F2, [[1, 1], [1, 1]]).rank() == 1

    def test_kernel_identity_empty(self):
        assert Matrix.identity(QQ, 2).kernel_basis() == []

    def test_kernel_rank_one(self):
        [v] = Matrix(QQ, [[1, 2], [2, 4]]).kernel_basis()
        assert v == (Fraction(-2), Fraction(1))

    def test_kernel_zero_matrix(self):
        basis = Matrix.zeros(QQ, 2, 3).kernel_basis()
        assert basis == [
            (Fraction(1), Fraction(0), Fraction(0)),
            (Fraction(0), Fraction(1), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(1)),
        ]

    def test_solve_identity(self):
        m = Matrix.identity(QQ, 3)
        b = (Fraction(1), Fraction(-2), Fraction(5))
        assert m.solve(b) == b

    def test_solve_inconsistent(self):
        assert Matrix(QQ, [[1, 2], [2, 4]]).solve((1, 3)) is None

    def test_solve_particular(self):
        m = Matrix(QQ, [[1, 2], [2, 4]])
        x = m.solve((1, 2))
        assert x == (Fraction(1), Fraction(0))
        assert m.apply(x) == (Fraction(1), Fraction(2))

    def test_shapes_checked(self):
        with pytest.raises(DimensionMismatchError):
            Matrix(QQ, [[1, 2], [3]])
        with pytest.raises(DimensionMismatchError):
            Matrix(QQ, [[1]]) * Matrix(QQ, [[1, 2], [3, 4]])
        with pytest.raises(DimensionMismatchError):
            Matrix(QQ, [[1, 2]]).apply((1,))

    def test_empty_shapes(self):
        m = Matrix(QQ, [], nrows=0, ncols=3)
        assert m.rank() == 0
        assert len(m.kernel_basis()) == 3
        assert m.solve(()) == (Fraction(0),) * 3
        n = Matrix(QQ, [(), ()], nrows=2, ncols=0)
        assert n.rank() == 0
        assert n.kernel_basis() == []

    def test_product_against_hand_example(self):
        a = Matrix(QQ, [[1, 2], [3, 4]])
        b = Matrix(QQ, [[0, 1], [1, 0]])
        assert a * b == Matrix(QQ, [[2, 1], [4, 3]])
        assert a.scaled(2) == Matrix(QQ, [[2, 4], [6, 8]])
        assert 2 * a == a.scaled(2)

    def test_linear_map(self):
        f = LinearMap(Matrix(QQ, [[1, 1], [0, 1]]))
        g = LinearMap(Matrix(QQ, [[2, 0], [0, 3]]))
        assert f((1, 2)) == (Fraction(3), Fraction(2))
        assert f.compose(g).matrix == Matrix(QQ, [[2, 3], [0, 3]])
        assert LinearMap.identity(QQ, 2)((5, 7)) == (Fraction(5), Fraction(7))


fields_strategy = st.sampled_from([QQ, F2, F5])


@st.composite
def matrices(draw, field=None, max_dim=4):
    fld = field if field is not None else draw(fields_strategy)
    nrows = draw(st.integers(0, max_dim))
    ncols = draw(st.integers(0, max_dim))
    entries = [
        [fld(draw(st.integers(-4, 4))) for _ in range(ncols)] for _ in range(nrows)
    ]
    return Matrix(fld, entries, nrows=nrows, ncols=ncols)


class TestEliminationProperties:
    @given(matrices())
    @settings(max_examples=150, deadline=None)
    def test_rank_nullity(self, m):
        assert m.rank() + len(m.kernel_basis()) == m.ncols

    @given(matrices())
    @settings(max_examples=150, deadline=None)
    def test_kernel_vectors_annihilate(self, m):
        for v in m.kernel_basis():
            assert is_zero_vector(m.apply(v))

    @given(st.data())
    @settings(max_examples=150, deadline=None)
    def test_solve_substitutes(self, data):
        m = data.draw(matrices())
        x = tuple(m.field(data.draw(st.integers(-4, 4))) for _ in range(m.ncols))
        b = m.apply(x)
        solved = m.solve(b)
        assert solved is not None
        assert m.apply(solved) == b

    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_solve_absent_iff_outside_column_space(self, data_matrix):
        m = data_matrix
        ones = tuple(m.field.one for _ in range(m.nrows))
        solved = m.solve(ones)
        augmented = m.hstack(Matrix.from_columns(m.field, [ones], m.nrows))
        if solved is None:
            assert augmented.rank() == m.rank() + 1
        else:
            assert augmented.rank() == m.rank()

    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_rref_is_idempotent_and_deterministic(self, m):
        reduced, pivots = m.rref()
        again, pivots2 = reduced.rref()
        assert again == reduced
        assert pivots2 == pivots
        rebuilt = Matrix(m.field, m.entries, nrows=m.nrows, ncols=m.ncols)
        assert rebuilt.rref()[0] == reduced


class TestSpanHelpers:
    def test_echelon_rows_canonical(self):
        rows, pivots = echelon_rows(QQ, [(2, 4, 0), (1, 2, 1)], 3)
        assert pivots == (0, 2)
        assert rows == (
            (Fraction(1), Fraction(2), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(1)),
        )

    def test_reduce_and_membership(self):
        rows, pivots = echelon_rows(QQ, [(1, 0, 2), (0, 1, -1)], 3)
        assert span_contains((2, 3, 1), rows, pivots)
        assert not span_contains((0, 0, 1), rows, pivots)
        reduced = reduce_mod_span((2, 3, 1), rows, pivots)
        assert reduced == (Fraction(0),) * 3

    def test_coordinates_in_span(self):
        rows, pivots = echelon_rows(QQ, [(1, 0, 2), (0, 1, -1)], 3)
        assert coordinates_in_span((2, 3, 1), rows, pivots) == (Fraction(2), Fraction(3))
        assert coordinates_in_span((0, 0, 5), rows, pivots) is None

    def test_empty_span(self):
        rows, pivots = echelon_rows(QQ, [], 3)
        assert rows == () and pivots == ()
        assert not span_contains((1, 0, 0), rows, pivots)
