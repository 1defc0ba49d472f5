"""M-morphisms f: A ⇸ B, given by f1: A⊗B -> B and f2: B⊗A -> B.

They stand in for maps into the multiplier monoid of a non-degenerate
semigroup B, which is never built as an object.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import (
    LinAlgError, LinMap, NotWellDefined, SignatureMismatch, braiding, cokernel_witness,
    identity, solve_left_leg, solve_right_leg, solve_through_epi, tensor,
)
from .report import CheckReport
from .semigroups import find_unit, opposite, tensor_semigroup


class Inconsistent(LinAlgError):
    pass


@dataclass(frozen=True, eq=False)
class MMorphism:
    source: object  # Signature of A
    target: object  # Semigroup B
    f1: LinMap
    f2: LinMap

    def __post_init__(self):
        n = self.source.dim * self.target.dim
        for comp in (self.f1, self.f2):
            if comp.dom.dim != n or comp.cod.dim != self.target.dim:
                raise SignatureMismatch("component shapes do not fit source and target")

    @property
    def field(self):
        return self.f1.field

    def __eq__(self, other):
        return (isinstance(other, MMorphism) and self.f1 == other.f1 and self.f2 == other.f2)

    __hash__ = None


def identity_mm(B):
    """The identity M-morphism i: B ⇸ B with both components m."""
    return MMorphism(B.A, B, B.m, B.m)


def check_mmorphism(f):
    B, A, F = f.target, f.source, f.field
    m = B.m
    ia, ib = identity(A, F), identity(B.A, F)
    r = CheckReport(field=F)
    r.equal("mM.1", m @ tensor(ib, f.f1), m @ tensor(f.f2, ib))
    r.equal("mM.2", f.f1 @ tensor(ia, m), m @ tensor(f.f1, ib))
    r.equal("mM.3", f.f2 @ tensor(m, ia), m @ tensor(ib, f.f2))
    return r


def check_multiplicative(f, src):
    """Both multiplicativity diagrams for f with source semigroup ``src``."""
    F = f.field
    ia, ib = identity(src.A, F), identity(f.target.A, F)
    r = CheckReport(field=F)
    r.equal("multiplicative.1", f.f1 @ tensor(ia, f.f1), f.f1 @ tensor(src.m, ib))
    r.equal("multiplicative.2", f.f2 @ tensor(f.f2, ia), f.f2 @ tensor(ib, src.m))
    return r


def check_dense(f):
    r = CheckReport(field=f.field)
    for law, comp in (("dense.1", f.f1), ("dense.2", f.f2)):
        wit = cokernel_witness(comp)
        r.holds(law, wit is None, "functional vanishing on the image", wit, f.target.A)
    return r


def bullet(g, f):
    """g•f for f: A ⇸ B and g: B ⇸ C with g dense and multiplicative."""
    if g.source.dim != f.target.dim:
        raise SignatureMismatch("target of f is not the source of g")
    if not check_dense(g).passed:
        raise NotWellDefined("bullet needs a dense left factor")
    F = f.field
    A, B, C = f.source, f.target.A, g.target.A
    ia, ic = identity(A, F), identity(C, F)
    try:
        h1 = solve_through_epi(g.f1 @ tensor(f.f1, ic), tensor(ia, g.f1))
        h2 = solve_through_epi(g.f2 @ tensor(ic, f.f2), tensor(g.f2, ia))
    except NotWellDefined as exc:
        raise NotWellDefined(f"bullet composite is not well defined: {exc}") from exc
    return MMorphism(A, g.target, h1.relabel(dom=A * C, cod=C), h2.relabel(dom=C * A, cod=C))


def sharp(z, B):
    """z^#: Z ⇸ B with components m(z⊗1) and m(1⊗z)."""
    ib = identity(B.A, z.field)
    return MMorphism(z.dom, B, B.m @ tensor(z, ib), B.m @ tensor(ib, z))


def circ(f, z):
    """f∘z: Z ⇸ B for a plain map z: Z -> A."""
    if z.cod.dim != f.source.dim:
        raise SignatureMismatch("codomain of z is not the source of f")
    ib = identity(f.target.A, f.field)
    return MMorphism(z.dom, f.target, f.f1 @ tensor(z, ib), f.f2 @ tensor(ib, z))


def op_mmorphism(f):
    """f^op: A ⇸ B^op."""
    F, A, B = f.field, f.source, f.target.A
    return MMorphism(A, opposite(f.target),
                     f.f2 @ braiding(A, B, F), f.f1 @ braiding(B, A, F))


def tensor_mmorphism(f, g):
    """fg: AB ⇸ CD for f: A ⇸ C and g: B ⇸ D."""
    F = f.field
    A, B = f.source, g.source
    C, D = f.target.A, g.target.A
    c1 = tensor(identity(A, F), braiding(B, C, F), identity(D, F))
    c2 = tensor(identity(C, F), braiding(D, A, F), identity(B, F))
    return MMorphism(A * B, tensor_semigroup(f.target, g.target),
                     tensor(f.f1, g.f1) @ c1, tensor(f.f2, g.f2) @ c2)


def complete_second(source, B, f1):
    """The unique f2 making (f1, f2) satisfy the first M-morphism diagram.

    Solves m(f2(b⊗a)⊗b') = m(b⊗f1(a⊗b')) using non-degeneracy; None if unsolvable.
    """
    F = B.field
    ib = identity(B.A, F)
    rhs = B.m @ tensor(ib, f1)  # on B⊗A⊗B
    f2 = solve_right_leg(B.m, B.dim, rhs)
    if f2 is None:
        return None
    return f2.relabel(dom=B.A * source, cod=B.A)


def complete_first(source, B, f2):
    """The unique f1 with m(b⊗f1(a⊗b')) = m(f2(b⊗a)⊗b')."""
    F = B.field
    ib = identity(B.A, F)
    rhs = B.m @ tensor(f2, ib)
    f1 = solve_left_leg(B.m, B.dim, rhs)
    if f1 is None:
        return None
    return f1.relabel(dom=source * B.A, cod=B.A)


def extract_plain(f):
    """The plain h: A -> B with f = h^#, or None when f is not inner."""
    B = f.target
    F = f.field
    ib = identity(B.A, F)
    u = find_unit(B)
    if u is not None:
        h = (f.f1 @ tensor(identity(f.source, F), u)).relabel(dom=f.source, cod=B.A)
        if B.m @ tensor(h, ib) != f.f1:
            return None
    else:
        h = solve_right_leg(B.m, B.dim, f.f1)
        if h is None:
            return None
        h = h.relabel(dom=f.source, cod=B.A)
    if B.m @ tensor(ib, h) != f.f2:
        raise Inconsistent("first component is inner but the second disagrees")
    return h


def check_lin_one_leg(f, A, B):
    """One-leg linearity of the first component of f: X ⇸ AB (A, B semigroups)."""
    F = f.field
    X = f.source
    ix, ia, ib = identity(X, F), identity(A.A, F), identity(B.A, F)
    r = CheckReport(field=F)
    lhs = f.f1 @ tensor(ix, A.m, ib)
    rhs = (tensor(A.m, ib) @ tensor(ia, braiding(B.A, A.A, F)) @ tensor(f.f1, ia)
           @ tensor(ix, ia, braiding(A.A, B.A, F)))
    r.equal("lin_one_leg.1", lhs, rhs)
    r.equal("lin_one_leg.2", f.f1 @ tensor(ix, ia, B.m), tensor(ia, B.m) @ tensor(f.f1, ib))
    return r
