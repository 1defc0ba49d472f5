import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ALL_INSTANCES, SMALL_INSTANCES, build
from mulhopf.exactlin import (
    QQ, UNIT, LinMap, NotSurjective, NotWellDefined, identity, inverse, tensor, zero_map,
)
from mulhopf.hopf import check_hopf
from mulhopf.instances import inversion_matrix
from mulhopf.modules import (
    RegularModule, SemigroupModule, check_dual_module, check_module_morphism,
    check_regular_module, check_restrict, check_semigroup_module, check_tensor_module,
    dual_module, lift, lift_v2, lift_v3, regular_module, restrict, tensor_module,
    trivial_module,
)
from mulhopf.multipliers import bullet, identity_mm, sharp
from mulhopf.semigroups import opposite

ids = "-".join


def setup(key):
    T, B, R = build(*key)
    s, _ = check_hopf(B)
    return T, B, R, s


@pytest.mark.parametrize("key", ALL_INSTANCES, ids=ids)
def test_regular_module(key):
    _, B, R, _ = setup(key)
    M = regular_module(B)
    assert check_semigroup_module(B.semigroup, M).passed
    r = check_regular_module(B, R, lift(B, R, M))
    assert r.passed, r.failures


def test_zero_action_fails_surjectivity():
    _, B, _, _ = setup(("Z2", "function", "QQ"))
    M = SemigroupModule(B.A, zero_map(B.A * B.A, B.A, QQ))
    r = check_semigroup_module(B.semigroup, M)
    assert not r.get("module.surjective").passed
    assert not r.get("module.nondegenerate").passed
    # neither unital nor onto, so the equivalence still holds
    assert r.get("action_epi.a<=>d").passed


@pytest.mark.parametrize("key", ALL_INSTANCES, ids=ids)
def test_regular_lift_is_t2_and_t3(key):
    _, B, R, _ = setup(key)
    M = regular_module(B)
    assert lift_v2(B, M) == B.t2
    assert lift_v3(B, R, M) == R.t3


@pytest.mark.parametrize("key", SMALL_INSTANCES, ids=ids)
def test_trivial_module(key):
    _, B, R, _ = setup(key)
    triv = trivial_module(B)
    assert check_semigroup_module(B.semigroup, triv).passed
    one = identity(UNIT * B.A, B.field)
    assert lift_v2(B, triv) == one and lift_v3(B, R, triv) == one
    assert check_regular_module(B, R, lift(B, R, triv)).passed


def test_counit_is_a_module_map_to_trivial():
    _, B, _, _ = setup(("S3", "group", "QQ"))
    triv = trivial_module(B)
    assert check_module_morphism(B.semigroup, B.e, regular_module(B), triv).passed
    # the coefficient of the identity element is linear but not multiplicative
    coeff = LinMap.from_rows([[1, 0, 0, 0, 0, 0]], B.A, UNIT, QQ)
    assert not check_module_morphism(B.semigroup, coeff, regular_module(B), triv).passed


def test_identity_v3_fails_third_compatibility():
    _, B, R, _ = setup(("S3", "group", "QQ"))
    good = lift(B, R, regular_module(B))
    bad = RegularModule(good.base, good.v2, identity(B.A * B.A, QQ))
    r = check_regular_module(B, R, bad)
    assert not r.get("module_compatibility.3").passed
    assert not r.get("action_module.v3_roundtrip").passed


def test_opposite_action_has_no_v2_lift():
    _, B, _, _ = setup(("S3", "group", "QQ"))
    M = SemigroupModule(B.A, B.m @ B.c)
    assert not check_semigroup_module(B.semigroup, M).get("module.associativity").passed
    with pytest.raises(NotWellDefined):
        lift_v2(B, M)


@pytest.mark.parametrize("key", ALL_INSTANCES, ids=ids)
def test_restrict_along_identity(key):
    _, B, _, _ = setup(key)
    M = regular_module(B)
    i = identity_mm(B.semigroup)
    N = restrict(i, M)
    assert N.v == M.v
    assert check_restrict(i, M, N, B.semigroup).passed


def test_restrict_along_squaring():
    _, B, _, _ = setup(("Z3", "group", "QQ"))
    z = LinMap(B.A, B.A, QQ, [{(2 * g) % 3: 1} for g in range(3)])
    f = sharp(z, B.semigroup)
    M = regular_module(B)
    N = restrict(f, M)
    assert check_restrict(f, M, N, B.semigroup).passed
    # x·g acts as x·g²
    for x in range(3):
        for g in range(3):
            assert N.v.cols[x * 3 + g] == {(x + 2 * g) % 3: 1}


@pytest.mark.parametrize("key", ALL_INSTANCES, ids=ids)
def test_restrict_along_antipode(key):
    T, B, _, s = setup(key)
    M = regular_module(B)
    N = restrict(s.s, M)
    sbar = inversion_matrix(T, B.field, B.A)
    assert N.v == B.m @ tensor(B.one, sbar)
    assert check_restrict(s.s, M, N, opposite(B.semigroup)).passed


def test_restriction_is_pseudofunctorial():
    _, B, _, s = setup(("S3", "group", "QQ"))
    z = inversion_matrix(build("S3", "group", "QQ")[0], QQ, B.A)
    g = sharp(z, opposite(B.semigroup))
    M = regular_module(B)
    composite = bullet(s.s, g)
    assert restrict(composite, M).v == restrict(g, restrict(s.s, M)).v
    # s̄∘s̄ = 1, so restricting twice gives back the regular action
    assert restrict(composite, M).v == M.v


@pytest.mark.parametrize("key", SMALL_INSTANCES, ids=ids)
def test_tensor_module(key):
    _, B, _, _ = setup(key)
    M = regular_module(B)
    P = tensor_module(B, M, M)
    assert P.V.dim == B.A.dim ** 2
    assert check_tensor_module(B, M, M, P).passed


@pytest.mark.parametrize("key", ALL_INSTANCES, ids=ids)
def test_tensor_with_trivial_is_unchanged(key):
    _, B, _, _ = setup(key)
    M = regular_module(B)
    triv = trivial_module(B)
    assert tensor_module(B, M, triv).v.to_rows() == M.v.to_rows()
    assert tensor_module(B, triv, M).v.to_rows() == M.v.to_rows()


def test_regular_tensor_regular_over_function_algebra_is_pointwise():
    _, B, _, _ = setup(("Z2", "function", "QQ"))
    M = regular_module(B)
    P = tensor_module(B, M, M)
    # δ_x⊗δ_y acted on by δ_a is [x = y = a] δ_x⊗δ_y since Δδ_a = Σ δ_b⊗δ_{b⁻¹a}
    for x in range(2):
        for y in range(2):
            for a in range(2):
                col = P.v.cols[(x * 2 + y) * 2 + a]
                assert col == ({x * 2 + y: 1} if (x + y) % 2 == a else {})


def test_tensor_module_is_associative():
    _, B, _, _ = setup(("Z3", "group", "QQ"))
    M = regular_module(B)
    left = tensor_module(B, tensor_module(B, M, M), M)
    right = tensor_module(B, M, tensor_module(B, M, M))
    assert left.v.to_rows() == right.v.to_rows()


@pytest.mark.parametrize("key", SMALL_INSTANCES, ids=ids)
def test_dual_module(key):
    _, B, _, s = setup(key)
    M = regular_module(B)
    D, d = dual_module(B, s, M)
    assert check_dual_module(B, M, D, d).passed


def test_dual_of_regular_function_algebra_module_is_pointwise():
    _, B, _, s = setup(("Z2", "function", "QQ"))
    D, _ = dual_module(B, s, regular_module(B))
    assert D.v.to_rows() == B.m.to_rows()


def test_dual_of_regular_group_algebra_module_uses_inversion():
    _, B, _, s = setup(("Z3", "group", "QQ"))
    D, _ = dual_module(B, s, regular_module(B))
    # g_i*·g_j is the functional x ↦ g_i*(x g_j⁻¹), which is g_{i+j}*
    for i in range(3):
        for j in range(3):
            assert D.v.cols[i * 3 + j] == {(i + j) % 3: 1}


def test_dual_of_trivial_is_trivial():
    _, B, _, s = setup(("S3", "group", "QQ"))
    triv = trivial_module(B)
    D, d = dual_module(B, s, triv)
    assert D.V.dim == 1
    assert D.v.to_rows() == triv.v.to_rows()
    assert check_dual_module(B, triv, D, d).passed


def test_dual_of_non_surjective_action_raises():
    _, B, _, s = setup(("Z2", "function", "QQ"))
    M = SemigroupModule(B.A, zero_map(B.A * B.A, B.A, QQ))
    with pytest.raises(NotSurjective):
        dual_module(B, s, M)


@pytest.mark.parametrize("key", ALL_INSTANCES, ids=ids)
def test_action_epi_equivalence_on_unital_modules(key):
    _, B, _, _ = setup(key)
    for M in (regular_module(B), trivial_module(B),
              SemigroupModule(B.A, B.m.scale(0))):
        r = check_semigroup_module(B.semigroup, M)
        assert r.get("action_epi.a<=>d").passed


@st.composite
def unitriangular(draw, n):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
        for j in range(i + 1, n):
            rows[i][j] = draw(st.integers(-2, 2))
    return rows


@given(st.sampled_from(SMALL_INSTANCES).flatmap(
    lambda k: st.tuples(st.just(k), unitriangular(2 if k[0] == "Z2" else 3))))
def test_lift_is_unique_and_transports(arg):
    key, rows = arg
    _, B, R, _ = setup(key)
    g = LinMap.from_rows(rows, B.A, B.A, B.field)
    gi = inverse(g)
    M = regular_module(B)
    N = SemigroupModule(B.A, (g @ M.v @ tensor(gi, B.one)).relabel(dom=B.A * B.A, cod=B.A))
    assert check_semigroup_module(B.semigroup, N).passed
    # the lift is forced, so it is the conjugate of the regular one
    assert lift_v2(B, N) == tensor(g, B.one) @ B.t2 @ tensor(gi, B.one)
    assert lift_v3(B, R, N) == tensor(B.one, g) @ lift_v3(B, R, M) @ tensor(B.one, gi)
    assert check_regular_module(B, R, lift(B, R, N)).passed
