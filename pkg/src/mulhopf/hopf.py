"""Antipodes of multiplier Hopf monoids."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .bimonoids import check_bimonoid_morphism, twist
from .exactlin import (
    NotInvertible, braiding, format_vector, inverse, is_surjective, tensor,
)
from .multipliers import (
    Inconsistent, MMorphism, bullet, check_dense, check_mmorphism, check_multiplicative,
    extract_plain, identity_mm,
)
from .report import CheckReport, LawResult, Witness
from .semigroups import opposite


@dataclass(frozen=True, eq=False)
class Antipode:
    """s: A^op ⇸ A with s1 = (e⊗1)t1⁻¹ and s2 = (1⊗e)t2⁻¹."""

    s: MMorphism
    t1_inv: object
    t2_inv: object
    sbar: object = None
    sbar_prime: object = None

    @property
    def s1(self):
        return self.s.f1

    @property
    def s2(self):
        return self.s.f2


@dataclass(frozen=True, eq=False)
class PrimedAntipode:
    """s': A ⇸ A^op with s'1 = (e⊗1)t3⁻¹ and s'2 = (1⊗e)t4⁻¹."""

    s: MMorphism
    t3_inv: object
    t4_inv: object


def _invert(r, law, f, label):
    try:
        g = inverse(f)
    except NotInvertible as exc:
        vec = exc.witness or {}
        text = f"{label} kernel: {format_vector(f.dom, vec, f.field)}"
        r.add(LawResult(law, False, Witness(vector=vec, text=text)))
        return None
    r.add(LawResult(law, True))
    return g


def check_hopf(B):
    """(Antipode or None, report); None comes with a kernel witness for t1 or t2."""
    T = tensor
    one, e, t1, t2 = B.one, B.e, B.t1, B.t2
    A, A2 = B.A, B.A * B.A
    r = CheckReport(field=B.field)
    t1_inv = _invert(r, "hopf.t1_invertible", t1, "t1")
    t2_inv = _invert(r, "hopf.t2_invertible", t2, "t2")
    if t1_inv is None or t2_inv is None:
        return None, r
    s1 = (T(e, one) @ t1_inv).relabel(dom=A2, cod=A)
    s2 = (T(one, e) @ t2_inv).relabel(dom=A2, cod=A)
    s = MMorphism(A, B.semigroup, s1, s2)
    r.equal("hopf.thm.a", B.d1, t1 @ T(one, s1) @ T(t2, one))
    r.equal("hopf.thm.b", B.d2, t2 @ T(s2, one) @ T(one, t1))
    r.equal("s1t1e.1", s1 @ t1, T(e, one).relabel(cod=A))
    r.equal("s1t1e.2", s2 @ t2, T(one, e).relabel(cod=A))
    r.extend(check_mmorphism(s), "hopf.s.")
    r.extend(check_dense(s), "hopf.s.")
    r.extend(check_multiplicative(s, opposite(B.semigroup)), "hopf.s.")
    return Antipode(s, t1_inv, t2_inv), r


def check_remark_epi_chain(B, antipode):
    """Surjectivity of e ⇒ m ⇔ s1 ⇔ s2 ⇒ d1 ⇔ d2."""
    p = {
        "a": is_surjective(B.e), "b": is_surjective(B.m), "c": is_surjective(antipode.s1),
        "d": is_surjective(antipode.s2), "e": is_surjective(B.d1), "f": is_surjective(B.d2),
    }
    state = ", ".join(f"({k}) {'epi' if v else 'not epi'}" for k, v in p.items())
    r = CheckReport(field=B.field)
    r.holds("who_is_reg_epi.a=>b", not p["a"] or p["b"], state)
    r.holds("who_is_reg_epi.b<=>c", p["b"] == p["c"], state)
    r.holds("who_is_reg_epi.c<=>d", p["c"] == p["d"], state)
    r.holds("who_is_reg_epi.d=>e", not p["d"] or p["e"], state)
    r.holds("who_is_reg_epi.e<=>f", p["e"] == p["f"], state)
    return r


def check_antipode_is_morphism(B, antipode):
    """s is a morphism from the twisted bimonoid to B."""
    r = CheckReport(field=B.field)
    return r.extend(check_bimonoid_morphism(antipode.s, twist(B), B), "s_mbm_morphism.")


def compute_s_prime(B, R):
    """(s', report) for the antipode of (A, t3, t4, e); NotInvertible if t3 or t4 is singular."""
    T = tensor
    one, c, e, m = B.one, B.c, B.e, B.m
    A, A2 = B.A, B.A * B.A
    F = B.field
    t3_inv = inverse(R.t3)
    t4_inv = inverse(R.t4)
    sp1 = (T(e, one) @ t3_inv).relabel(dom=A2, cod=A)
    sp2 = (T(one, e) @ t4_inv).relabel(dom=A2, cod=A)
    sp = MMorphism(A, opposite(B.semigroup), sp1, sp2)
    r = CheckReport(field=F)
    r.equal("cor_s'.1", m @ T(sp1, one) @ T(c, one), m @ T(one, sp2) @ T(one, c))
    r.equal("cor_s'.2", B.d2, R.t3 @ T(one, sp1) @ T(R.t4, one) @ braiding(A2, A, F))
    r.equal("cor_s'.3", B.d1, R.t4 @ T(sp2, one) @ T(one, R.t3) @ braiding(A, A2, F))
    r.extend(check_mmorphism(sp), "s'.")
    r.extend(check_dense(sp), "s'.")
    r.extend(check_multiplicative(sp, B.semigroup), "s'.")
    return PrimedAntipode(sp, t3_inv, t4_inv), r


def check_s_inverse(B, R, s, s_prime):
    """s•s' = i, s'•s = i, and the t1/t3 compatibility identity."""
    T = tensor
    one, c, t1 = B.one, B.c, B.t1
    r = CheckReport(field=B.field)
    ss = bullet(s, s_prime)
    r.equal("s-inverse.s_bullet_s'", ss.f1, B.m)
    r.equal("s-inverse.s_bullet_s'.2", ss.f2, B.m)
    op = opposite(B.semigroup)
    ss2 = bullet(s_prime, s)
    r.equal("s-inverse.s'_bullet_s", ss2.f1, identity_mm(op).f1)
    r.equal("s-inverse.s'_bullet_s.2", ss2.f2, identity_mm(op).f2)
    r.equal("t1t3", T(R.t3, one) @ T(one, t1) @ T(c, one) @ T(one, t1),
            T(one, t1) @ T(R.t3, one) @ T(c, one))
    return r


def extract_sbar(B, s, s_prime):
    """(s̄, s̄', report) with s = s̄^# and s' = s̄'^#."""
    sbar = extract_plain(s)
    sbar_p = extract_plain(s_prime)
    if sbar is None or sbar_p is None:
        raise Inconsistent("antipode is not induced by a plain morphism")
    T = tensor
    one, c, e, m = B.one, B.c, B.e, B.m
    r = CheckReport(field=B.field)
    r.equal("reg_antipode.sbar_sbar'", sbar @ sbar_p, one)
    r.equal("reg_antipode.sbar'_sbar", sbar_p @ sbar, one)
    r.equal("reg_antipode.counit", e @ sbar, e)
    r.equal("reg_antipode.antimultiplicative", sbar @ m @ c, m @ T(sbar, sbar))
    r.equal("reg_antipode.fusion", T(sbar, sbar) @ c @ B.t2 @ c, B.t1 @ T(sbar, sbar))
    return sbar, sbar_p, r


def antipode_suite(B, R):
    """Every antipode check for a regular multiplier Hopf monoid.

    Returns (antipode with s̄ filled in or None, primed antipode or None, report).
    """
    antipode, r = check_hopf(B)
    if antipode is None:
        return None, None, r
    r.extend(check_remark_epi_chain(B, antipode))
    r.extend(check_antipode_is_morphism(B, antipode))
    if R is None:
        return antipode, None, r
    try:
        sp, rp = compute_s_prime(B, R)
    except NotInvertible as exc:
        vec = exc.witness or {}
        text = f"t3/t4 kernel: {format_vector(B.A * B.A, vec, B.field)}"
        r.add(LawResult("cor_s'.invertible", False, Witness(vector=vec, text=text)))
        return antipode, None, r
    r.extend(rp)
    r.extend(check_s_inverse(B, R, antipode.s, sp.s))
    sbar, sbar_p, rs = extract_sbar(B, antipode.s, sp.s)
    r.extend(rs)
    return replace(antipode, sbar=sbar, sbar_prime=sbar_p), sp, r
