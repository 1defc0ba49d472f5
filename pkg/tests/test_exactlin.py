from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mulhopf.exactlin import (
    GF, QQ, UNIT, LinMap, NotInvertible, NotSurjective, NotWellDefined, SignatureMismatch,
    braiding, compose, identity, image_factorization, inverse, is_injective, is_surjective,
    kernel_basis, permute, rank, right_section, solve_through_epi, space, tensor, zero_map,
)

F7 = GF(7)
V2 = space("V", 2)
W3 = space("W", 3)


def scalars(field):
    if field is QQ:
        return st.fractions(min_value=-5, max_value=5, max_denominator=4).map(QQ)
    return st.integers(0, 6).map(F7)


@st.composite
def maps(draw, dom, cod, field=QQ):
    rows = [[draw(scalars(field)) for _ in range(dom.dim)] for _ in range(cod.dim)]
    return LinMap.from_rows(rows, dom, cod, field)


fields = st.sampled_from([QQ, F7])


# ------------------------------------------------------------------ scalars


def test_rational_canonical_form():
    assert QQ("6/4") == Fraction(3, 2)
    assert type(QQ("4/2")) is int
    assert QQ(Fraction(-2, -1)) == 2
    assert QQ.inv(QQ("-3/5")) == Fraction(-5, 3)


def test_prime_field_arithmetic():
    assert F7(15) == 1
    assert F7(-1) == 6
    assert F7.inv(3) == 5
    with pytest.raises(ValueError):
        GF(8)


def test_prime_field_compose_example():
    f = LinMap.from_rows([[3]], UNIT, UNIT, F7)
    g = LinMap.from_rows([[5]], UNIT, UNIT, F7)
    assert (g @ f).to_rows() == [[1]]


# -------------------------------------------------------------- signatures


def test_leftmost_major_basis_order():
    S = space("A", 2) * space("B", 3)
    assert [S.decode(i) for i in range(6)] == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
    assert all(S.encode(S.decode(i)) == i for i in range(6))
    assert UNIT.dim == 1 and (UNIT * V2) == V2


# ------------------------------------------------------------- composition


@given(maps(V2, V2))
def test_identity_is_neutral(M):
    assert identity(V2, QQ) @ M == M
    assert M @ identity(V2, QQ) == M


def test_compose_rejects_mismatched_dims():
    with pytest.raises(SignatureMismatch):
        compose(identity(V2, QQ), identity(W3, QQ))


@given(maps(W3, V2), maps(V2, W3), maps(V2, V2))
def test_compose_associative(f, g, h):
    assert (f @ g) @ h == f @ (g @ h)


# ------------------------------------------------------------------ tensor


def test_tensor_with_unit_factor():
    M = LinMap.from_rows([[1, 2], [3, 4]], V2, V2, QQ)
    assert tensor(identity(UNIT, QQ), M).to_rows() == M.to_rows()


def test_tensor_identity_counit_selects_columns():
    A = space("A", 2)
    e = LinMap.from_rows([[1, 0]], A, UNIT, QQ)
    assert tensor(identity(A, QQ), e).to_rows() == [[1, 0, 0, 0], [0, 0, 1, 0]]


@given(maps(V2, V2), maps(V2, V2), maps(V2, V2), maps(V2, V2))
def test_tensor_functorial(f, g, f2, g2):
    assert tensor(f, g) @ tensor(f2, g2) == tensor(f @ f2, g @ g2)


@given(maps(V2, V2), maps(W3, W3), maps(V2, V2))
def test_tensor_associative(f, g, h):
    assert tensor(tensor(f, g), h) == tensor(f, tensor(g, h))


# ---------------------------------------------------------------- braiding


def test_braiding_with_trivial_factor():
    c = braiding(space("X", 1), W3, QQ)
    assert c.to_rows() == identity(W3, QQ).to_rows()


def test_braiding_2x2_permutation():
    c = braiding(V2, V2, QQ)
    # 1-based rows of the ones, column by column: 1, 3, 2, 4
    assert [next(iter(col)) + 1 for col in c.cols] == [1, 3, 2, 4]
    assert c @ c == identity(V2 * V2, QQ)


@given(fields, st.integers(1, 3), st.integers(1, 3))
def test_braiding_self_inverse(F, a, b):
    A, B = space("A", a), space("B", b)
    assert braiding(B, A, F) @ braiding(A, B, F) == identity(A * B, F)


@given(maps(V2, V2), maps(W3, W3))
def test_braiding_natural(f, g):
    assert tensor(g, f) @ braiding(V2, W3, QQ) == braiding(V2, W3, QQ) @ tensor(f, g)


def test_permute_matches_braiding():
    assert permute(V2 * W3, (1, 0), QQ).to_rows() == braiding(V2, W3, QQ).to_rows()


# ------------------------------------------------------------- elimination


def test_kernel_of_zero_and_identity():
    assert len(kernel_basis(zero_map(V2, V2, QQ))) == 2
    assert kernel_basis(identity(V2, QQ)) == []


def test_kernel_rank_one():
    f = LinMap.from_rows([[1, 1], [1, 1]], V2, V2, QQ)
    assert kernel_basis(f) == [{0: -1, 1: 1}]
    assert f.apply({0: -1, 1: 1}) == {}


@given(fields.flatmap(lambda F: st.tuples(st.just(F), maps(space("X", 3), space("Y", 4), F))))
def test_kernel_vectors_are_killed(pair):
    F, f = pair
    ker = kernel_basis(f)
    assert all(f.apply(v) == {} for v in ker)
    assert len(ker) + rank(f) == f.dom.dim


@given(fields.flatmap(lambda F: st.tuples(st.just(F), maps(space("X", 4), space("Y", 3), F))))
def test_image_factorization_properties(pair):
    F, f = pair
    p, i = image_factorization(f)
    assert i @ p == f
    assert is_injective(i) and is_surjective(p)
    assert rank(p) == i.dom.dim == rank(f)


def test_image_factorization_examples():
    X = space("X", 4)
    p, i = image_factorization(zero_map(X, X, QQ))
    assert p.cod.dim == 0
    ones = LinMap.from_rows([[1] * 4] * 4, X, X, QQ)
    p, i = image_factorization(ones)
    assert i.to_rows() == [[1]] * 4
    p, i = image_factorization(identity(X, QQ))
    assert is_injective(p) and is_surjective(p)


def test_right_section_examples():
    A = space("A", 2)
    assert right_section(identity(A, QQ)) == identity(A, QQ)
    e = LinMap.from_rows([[1, 0]], A, UNIT, QQ)
    assert right_section(e).to_rows() == [[1], [0]]
    m = LinMap.from_rows([[1, 0, 0, 0], [0, 0, 0, 1]], A * A, A, QQ)
    assert right_section(m).to_rows() == [[1, 0], [0, 0], [0, 0], [0, 1]]
    with pytest.raises(NotSurjective):
        right_section(zero_map(A, A, QQ))


@given(fields.flatmap(lambda F: st.tuples(st.just(F), maps(space("X", 4), V2, F))))
def test_right_section_is_a_section(pair):
    F, f = pair
    if is_surjective(f):
        assert f @ right_section(f) == identity(V2, F)
    else:
        with pytest.raises(NotSurjective):
            right_section(f)


def test_solve_through_epi_examples():
    A = space("A", 2)
    m = LinMap.from_rows([[1, 0, 0, 0], [0, 0, 0, 1]], A * A, A, QQ)
    e = LinMap.from_rows([[1, 0]], A, UNIT, QQ)
    assert solve_through_epi(m, m) == identity(A, QQ)
    assert solve_through_epi(zero_map(A * A, UNIT, QQ), m).is_zero()
    assert solve_through_epi(e @ m, m) == e
    # the first coordinate of A⊗A is not constant on the fibres of m
    bad = LinMap.from_rows([[1, 1, 0, 0]], A * A, UNIT, QQ)
    with pytest.raises(NotWellDefined):
        solve_through_epi(bad, m)


@given(maps(space("X", 4), V2), maps(V2, W3))
def test_solve_through_epi_recovers_factor(epi, u):
    if is_surjective(epi):
        assert solve_through_epi(u @ epi, epi) == u


@given(fields.flatmap(lambda F: st.tuples(st.just(F), maps(W3, W3, F))))
def test_inverse(pair):
    F, f = pair
    if rank(f) == 3:
        g = inverse(f)
        assert g @ f == identity(W3, F) and f @ g == identity(W3, F)
    else:
        with pytest.raises(NotInvertible) as exc:
            inverse(f)
        assert f.apply(exc.value.witness) == {}


def test_prime_field_rank_differs_from_rationals():
    rows = [[1, 2], [3, 6 + 7]]
    assert rank(LinMap.from_rows(rows, V2, V2, QQ)) == 2
    assert rank(LinMap.from_rows(rows, V2, V2, F7)) == 1
