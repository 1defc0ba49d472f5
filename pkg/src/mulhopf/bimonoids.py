"""Multiplier bimonoids (A, t1, t2, e), regular structures (t3, t4) and morphisms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exactlin import (
    UNIT, braiding, cokernel_witness, identity, solve_left_leg,
    solve_right_leg, tensor,
)
from .multipliers import MMorphism, check_mmorphism, check_multiplicative
from .report import CheckReport
from .semigroups import (
    Semigroup, check_associative, check_nondegenerate, find_unit, tensor_semigroup,
    unit_semigroup,
)


@dataclass(frozen=True, eq=False)
class MultiplierBimonoid:
    A: object
    t1: object
    t2: object
    e: object
    name: str = ""

    @property
    def field(self):
        return self.e.field

    @cached_property
    def one(self):
        return identity(self.A, self.field)

    @cached_property
    def c(self):
        return braiding(self.A, self.A, self.field)

    @cached_property
    def m(self):
        A = self.A
        return (tensor(self.e, self.one) @ self.t1).relabel(dom=A * A, cod=A)

    @cached_property
    def semigroup(self):
        return Semigroup(self.A, self.m)

    @cached_property
    def d1(self):
        one, c, m = self.one, self.c, self.m
        return tensor(m, one) @ tensor(c, one) @ tensor(one, self.t1) @ tensor(c, one)

    @cached_property
    def d2(self):
        one, c, m = self.one, self.c, self.m
        return tensor(one, m) @ tensor(one, c) @ tensor(self.t2, one) @ tensor(one, c)

    @cached_property
    def d(self):
        """The comultiplication as an M-morphism A ⇸ A²."""
        S = self.semigroup
        return MMorphism(self.A, tensor_semigroup(S, S), self.d1, self.d2)

    @cached_property
    def counit(self):
        """e viewed as the M-morphism A ⇸ I."""
        A = self.A
        return MMorphism(A, unit_semigroup(self.field), self.e.relabel(dom=A * UNIT),
                         self.e.relabel(dom=UNIT * A))


@dataclass(frozen=True, eq=False)
class RegularStructure:
    t3: object
    t4: object


def induced_multiplication(B):
    return B.semigroup


def comultiplication(B):
    return B.d1, B.d2, B.d


def check_bimonoid(B, comultiplication_laws=True):
    """Every axiom, the derived laws and the standing properties of B."""
    T = tensor
    one, c, e, m, t1, t2 = B.one, B.c, B.e, B.m, B.t1, B.t2
    F = B.field
    r = CheckReport(field=F)

    r.equal("mbm_ax_1.fusion", T(one, t1) @ T(t1, one),
            T(t1, one) @ T(c, one) @ T(one, t1) @ T(c, one) @ T(one, t1))
    r.equal("mbm_ax_1.counit", T(one, e) @ t1, T(one, e))
    r.equal("mbm_ax_2.fusion", T(t2, one) @ T(one, t2),
            T(one, t2) @ T(one, c) @ T(t2, one) @ T(one, c) @ T(t2, one))
    r.equal("mbm_ax_2.counit", T(e, one) @ t2, T(e, one))
    r.equal("mbm_ax_compatibility.fusion", T(one, t1) @ T(t2, one), T(t2, one) @ T(one, t1))
    r.equal("mbm_ax_compatibility.multiplication", T(e, one) @ t1, T(one, e) @ t2)

    # derived laws, checked independently
    r.equal("e_multiplicative", e @ m, e @ T(one, e))
    r.equal("short_fusion.1", t1 @ T(m, one),
            T(m, one) @ T(c, one) @ T(one, t1) @ T(c, one) @ T(one, t1))
    r.equal("short_fusion.2", t2 @ T(one, m),
            T(one, m) @ T(one, c) @ T(t2, one) @ T(one, c) @ T(t2, one))
    r.equal("t_1_mod_map", T(one, m) @ T(t1, one), t1 @ T(one, m))
    r.equal("short_compatibility", T(one, m) @ T(t2, one), T(m, one) @ T(one, t1))
    r.extend(check_associative(B.semigroup), "m.")

    # standing properties
    r.extend(check_nondegenerate(B.semigroup), "m.")
    for law, f, sig in (("m.surjective", m, B.A), ("d1.surjective", B.d1, B.A * B.A),
                        ("d2.surjective", B.d2, B.A * B.A), ("e.surjective", e, UNIT)):
        wit = cokernel_witness(f)
        r.holds(law, wit is None, "functional vanishing on the image", wit, sig)

    if comultiplication_laws:
        r.extend(check_mmorphism(B.d), "d.")
        r.extend(check_multiplicative(B.d, B.semigroup), "d.")
    return r


def twist(B):
    """(A, c t2 c, c t1 c, e); its induced semigroup is the opposite of A."""
    c = B.c
    return MultiplierBimonoid(B.A, c @ B.t2 @ c, c @ B.t1 @ c, B.e,
                              name=f"twist({B.name})" if B.name else "")


def from_bimonoid(m, u, h, e, name=""):
    """Fusion maps t1 = (1⊗m)(h⊗1), t2 = (m⊗1)(1⊗h) of a unital bimonoid."""
    A = m.cod
    one = identity(A, m.field)
    t1 = tensor(one, m) @ tensor(h, one)
    t2 = tensor(m, one) @ tensor(one, h)
    A2 = A * A
    return MultiplierBimonoid(A, t1.relabel(dom=A2, cod=A2), t2.relabel(dom=A2, cod=A2),
                              e.relabel(dom=A, cod=UNIT), name=name)


def to_bimonoid(B):
    """(m, u, h, e) with h = t2(u⊗1), or None without a unit or dense structure."""
    u = find_unit(B.semigroup)
    if u is None:
        return None
    for f in (B.e, B.d1, B.d2):
        if cokernel_witness(f) is not None:
            return None
    h = (B.t2 @ tensor(u, B.one)).relabel(dom=B.A, cod=B.A * B.A)
    return B.m, u, h, B.e


def _regular_bimonoid(B, R):
    return MultiplierBimonoid(B.A, R.t3, R.t4, B.e, name=B.name + "[t3,t4]")


def check_regular(B, R):
    T = tensor
    one, c, e, m, t1, t2 = B.one, B.c, B.e, B.m, B.t1, B.t2
    t3, t4 = R.t3, R.t4
    r = CheckReport(field=B.field)
    r.equal("reg_mbm.1", T(e, one) @ t1, T(e, one) @ t3 @ c)
    r.equal("reg_mbm.2", T(one, m) @ T(c, one) @ T(one, t1), T(one, m) @ T(t3, one) @ T(c, one))
    r.equal("reg_mbm.3", T(t4, one) @ T(one, t1), T(one, t1) @ T(t4, one))
    r.equal("reg_mbm.4", T(m, one) @ T(one, c) @ T(t2, one), T(m, one) @ T(one, t4) @ T(one, c))
    r.equal("reg_mbm.5", T(one, t3) @ T(t2, one), T(t2, one) @ T(one, t3))
    r.extend(check_bimonoid(_regular_bimonoid(B, R), comultiplication_laws=False), "t3t4.")
    r.equal("t_2-3_compatibility.1", T(m, one) @ T(one, t3), T(one, m) @ T(one, c) @ T(t2, one))
    r.equal("t_2-3_compatibility.2", T(one, m) @ T(t4, one), T(m, one) @ T(c, one) @ T(one, t1))
    r.equal("t_3_mod_map", t3 @ T(one, m) @ T(one, c), T(one, m) @ T(one, c) @ T(t3, one))
    return r


def infer_regular(B):
    """The unique (t3, t4) making B regular, or None if B is not regular."""
    T = tensor
    one, c, m = B.one, B.c, B.m
    A, n = B.A, B.A.dim
    if not check_nondegenerate(B.semigroup).passed:
        return None
    # (m⊗1)(a⊗t3(y)) is prescribed for every a
    rhs3 = T(one, m) @ T(one, c) @ T(B.t2, one)
    t3 = solve_left_leg(T(m, one), n, rhs3)
    # (1⊗m)(t4(y)⊗x) is prescribed for every x
    rhs4 = T(m, one) @ T(c, one) @ T(one, B.t1)
    t4 = solve_right_leg(T(one, m), n, rhs4)
    if t3 is None or t4 is None:
        return None
    A2 = A * A
    R = RegularStructure(t3.relabel(dom=A2, cod=A2), t4.relabel(dom=A2, cod=A2))
    if not check_regular(B, R).passed:
        return None
    return R


def check_bimonoid_morphism(f, Bsrc, Btgt, Rsrc=None, Rtgt=None):
    """The morphism diagrams for f: Bsrc ⇸ Btgt (and the t3 diagram when both are regular)."""
    T = tensor
    F = f.field
    A, B = Bsrc.A, Btgt.A
    ia, ib = Bsrc.one, Btgt.one
    r = CheckReport(field=F)
    r.equal("mbm_morphism.1", Btgt.e @ f.f1, T(Bsrc.e, Btgt.e))
    mid_ab = T(ia, braiding(A, B, F), ib)  # A A B B -> A B A B
    r.equal("mbm_morphism.2", T(f.f1, f.f1) @ mid_ab @ T(Bsrc.t2, Btgt.t1),
            T(f.f1, ib) @ T(ia, Btgt.t1) @ T(ia, f.f1, ib))
    r.equal("mbm_morphism.3", Btgt.e @ f.f2, T(Btgt.e, Bsrc.e))
    mid_ba = T(ib, braiding(B, A, F), ia)  # B B A A -> B A B A
    r.equal("mbm_morphism.4", T(f.f2, f.f2) @ mid_ba @ T(Btgt.t2, Bsrc.t1),
            T(ib, f.f2) @ T(Btgt.t2, ia) @ T(ib, f.f2, ia))
    if Rsrc is not None and Rtgt is not None:
        lhs = T(f.f1, f.f1) @ mid_ab @ T(Rsrc.t3, Btgt.t1)
        rhs = (T(ib, f.f1) @ T(braiding(A, B, F), ib) @ T(ia, Btgt.t1) @ T(ia, f.f1, ib)
               @ T(Bsrc.c, ib, ib))
        r.equal("multiplier-bimonoid-t3", lhs, rhs)
    return r

