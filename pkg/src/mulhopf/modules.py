"""Right modules over non-degenerate semigroups and over (regular) multiplier bimonoids."""

from __future__ import annotations

from dataclasses import dataclass

from .comodules import standard_duality
from .exactlin import (
    UNIT, NotSurjective, braiding, cokernel_witness, identity, is_surjective, kernel_basis,
    right_adjunct, solve_through_epi, tensor,
)
from .report import CheckReport
from .semigroups import find_unit


@dataclass(frozen=True, eq=False)
class SemigroupModule:
    V: object
    v: object  # V⊗A -> V

    @property
    def field(self):
        return self.v.field


@dataclass(frozen=True, eq=False)
class RegularModule:
    base: SemigroupModule
    v2: object  # V⊗A -> V⊗A
    v3: object  # A⊗V -> A⊗V

    @property
    def V(self):
        return self.base.V

    @property
    def v(self):
        return self.base.v


def regular_module(B):
    return SemigroupModule(B.A, B.m)


def trivial_module(B):
    """I acted on through the counit."""
    return SemigroupModule(UNIT, B.e.relabel(dom=UNIT * B.A))


def check_semigroup_module(S, M):
    T = tensor
    F = S.field
    V, v = M.V, M.v
    iv, ia = identity(V, F), identity(S.A, F)
    r = CheckReport(field=F)
    r.equal("module.associativity", v @ T(v, ia), v @ T(iv, S.m))
    wit = cokernel_witness(v)
    r.holds("module.surjective", wit is None, "functional vanishing on the image of v", wit, V)
    # non-degeneracy with Y the base field: x ↦ v(x⊗-) is injective
    ker = kernel_basis(right_adjunct(v, S.dim))
    r.holds("module.nondegenerate", not ker, "action kills", ker[0] if ker else None, V)
    u = find_unit(S)
    if u is not None:
        unital = (v @ T(iv, u)).relabel(dom=V) == iv
        r.holds("action_epi.a<=>d", unital == (wit is None),
                "unitality and surjectivity of the action disagree")
    return r


def check_module_morphism(S, f, M, N):
    r = CheckReport(field=S.field)
    r.equal("module_morphism", N.v @ tensor(f, identity(S.A, S.field)), f @ M.v)
    return r


# ------------------------------------------------------- fusion-morphism lifts


def lift_v2(B, M):
    """The unique v2 with v2(v⊗1) = (v⊗1)(1⊗t2); NotWellDefined if none exists."""
    F = B.field
    epi = tensor(M.v, B.one)
    v2 = solve_through_epi(epi @ tensor(identity(M.V, F), B.t2), epi)
    VA = M.V * B.A
    return v2.relabel(dom=VA, cod=VA)


def lift_v3(B, R, M):
    """The unique v3 with v3(1⊗v)(1⊗c) = (1⊗v)(1⊗c)(t3⊗1) on A⊗A⊗V."""
    F = B.field
    V, A = M.V, B.A
    epi = tensor(B.one, M.v) @ tensor(B.one, braiding(A, V, F))
    v3 = solve_through_epi(epi @ tensor(R.t3, identity(V, F)), epi)
    AV = A * V
    return v3.relabel(dom=AV, cod=AV)


def lift(B, R, M):
    return RegularModule(M, lift_v2(B, M), lift_v3(B, R, M))


def check_regular_module(B, R, M):
    T = tensor
    F = B.field
    V, A = M.V, B.A
    iv, one, c = identity(V, F), B.one, B.c
    v2, v3, t2, t3 = M.v2, M.v3, B.t2, R.t3
    r = CheckReport(field=F)
    r.equal("t2_module", T(iv, t2) @ T(iv, c) @ T(v2, one) @ T(iv, c) @ T(v2, one),
            T(v2, one) @ T(iv, t2))
    r.equal("t3_module", T(t3, iv) @ T(c, iv) @ T(one, v3) @ T(c, iv) @ T(one, v3),
            T(one, v3) @ T(t3, iv))
    r.equal("module_compatibility.1", T(iv, t3) @ T(v2, one), T(v2, one) @ T(iv, t3))
    r.equal("module_compatibility.2", T(t2, iv) @ T(one, v3), T(one, v3) @ T(t2, iv))
    r.equal("module_compatibility.3", T(iv, B.e) @ v2,
            T(B.e, iv) @ v3 @ braiding(V, A, F))
    r.equal("module.v_from_v2", T(iv, B.e) @ v2, M.v.relabel(dom=V * A, cod=V))
    wit = cokernel_witness(T(B.e, iv) @ v3)
    r.holds("module.e1v3_surjective", wit is None, "functional vanishing on the image", wit, V)
    r.extend(check_semigroup_module(B.semigroup, M.base))
    r.equal("action_module.v2_roundtrip", lift_v2(B, M.base), v2)
    r.equal("action_module.v3_roundtrip", lift_v3(B, R, M.base), v3)
    return r


# ------------------------------------------------------------- change of base


def restrict(f, M):
    """f^*M for f: A ⇸ B and a non-degenerate B-module M: (f^*v)(v⊗1) = v(1⊗f2)."""
    F = f.field
    V, A = M.V, f.source
    iv = identity(V, F)
    epi = tensor(M.v, identity(A, F))
    w = solve_through_epi(M.v @ tensor(iv, f.f2), epi)
    return SemigroupModule(V, w.relabel(dom=V * A, cod=V))


def check_restrict(f, M, N, S):
    """The second defining square of N = f^*M and N's module laws over the source S."""
    F = f.field
    ib = identity(f.target.A, F)
    r = CheckReport(field=F)
    r.equal("restrict.1", N.v @ tensor(M.v, identity(f.source, F)),
            M.v @ tensor(identity(M.V, F), f.f2))
    r.equal("restrict.2", M.v @ tensor(identity(M.V, F), f.f1), M.v @ tensor(N.v, ib))
    r.extend(check_semigroup_module(S, N), "restrict.")
    return r


# ------------------------------------------------------------- monoidal structure


def tensor_module(B, M, N):
    """ψ = (v⊗1)(1⊗c)(1⊗w2) on V⊗W⊗A."""
    F = B.field
    V, W, A = M.V, N.V, B.A
    iv = identity(V, F)
    w2 = lift_v2(B, N)
    psi = tensor(M.v, identity(W, F)) @ tensor(iv, braiding(W, A, F)) @ tensor(iv, w2)
    return SemigroupModule(V * W, psi.relabel(dom=V * W * A, cod=V * W))


def check_tensor_module(B, M, N, P):
    """Both characterizations of the action ψ of P = M⊗N, plus P's module laws."""
    T = tensor
    F = B.field
    V, W, A = M.V, N.V, B.A
    iv, iw, one = identity(V, F), identity(W, F), B.one
    psi = P.v.relabel(dom=V * W * A)
    back = T(M.v, iw) @ T(iv, braiding(W, A, F))
    r = CheckReport(field=F)
    r.equal("psi_w", psi @ T(iv, N.v, one), back @ T(iv, N.v, one) @ T(iv, iw, B.t2))
    r.equal("psi_v", back @ T(psi, one), back @ T(iv, N.v, one) @ T(iv, iw, B.t1))
    for law, f in (("monoidal.d2_surjective", B.d2), ("monoidal.e_surjective", B.e)):
        r.holds(law, is_surjective(f), "not surjective")
    r.extend(check_semigroup_module(B.semigroup, P), "tensor.")
    return r


def dual_module(B, antipode, M):
    """The action v̄ on V̄ built from s^*v; NotSurjective when v̄ is not onto.

    Returns (module on V̄, the duality between V and V̄).
    """
    F = B.field
    V, A = M.V, B.A
    d = standard_duality(V, F)
    Vb = d.dual
    ivb = identity(Vb, F)
    sv = restrict(antipode.s, M).v
    vbar = (tensor(d.eps, ivb) @ tensor(ivb, sv, ivb)
            @ tensor(ivb, braiding(A, V, F), ivb) @ tensor(ivb, identity(A, F), d.eta))
    vbar = vbar.relabel(dom=Vb * A, cod=Vb)
    wit = cokernel_witness(vbar)
    if wit is not None:
        raise NotSurjective("dual action is not surjective", wit)
    return SemigroupModule(Vb, vbar), d


def check_dual_module(B, M, D, d):
    """η: I -> V V̄ and ε: V̄ V -> I are module maps for the tensor actions; snakes hold."""
    F = B.field
    S = B.semigroup
    V, Vb = d.obj, d.dual
    iv, ivb = identity(V, F), identity(Vb, F)
    triv = trivial_module(B)
    right = tensor_module(B, M, D)
    left = tensor_module(B, D, M)
    r = CheckReport(field=F)
    r.extend(check_semigroup_module(S, D), "dual.")
    r.extend(check_module_morphism(S, d.eta.relabel(cod=right.V), triv, right), "dual.eta.")
    r.extend(check_module_morphism(S, d.eps.relabel(dom=left.V), left, triv), "dual.eps.")
    r.equal("dual.snake.1", (tensor(iv, d.eps) @ tensor(d.eta, iv)).relabel(dom=V, cod=V), iv)
    r.equal("dual.snake.2", (tensor(d.eps, ivb) @ tensor(ivb, d.eta)).relabel(dom=Vb, cod=Vb),
            ivb)
    return r
