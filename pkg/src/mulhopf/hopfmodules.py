"""Hopf modules, coinvariants and the comparison with free Hopf modules X⊗A."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .comodules import Comodule, check_comodule, check_comodule_morphism, coaction_inverse
from .exactlin import (
    LinMap, braiding, identity, image_factorization,
    inverse, is_injective, is_surjective, rank, right_section, solve_through_epi, space, tensor,
)
from .hopf import check_hopf
from .modules import (
    RegularModule, SemigroupModule, check_module_morphism, check_regular_module,
)
from .report import CheckReport
from .semigroups import find_unit


class PreconditionUnmet(Exception):
    """The input does not satisfy the hypotheses of the requested check."""


@dataclass(frozen=True, eq=False)
class HopfModule:
    comodule: Comodule
    module: RegularModule

    @property
    def V(self):
        return self.comodule.V

    @property
    def v(self):
        return self.module.v

    @property
    def v1(self):
        return self.comodule.v1

    @property
    def v3(self):
        return self.comodule.v3


@dataclass(frozen=True, eq=False)
class Coinvariants:
    Vc: object
    p: LinMap
    i: LinMap
    w: LinMap


def check_hopf_module(B, R, H):
    T = tensor
    F = B.field
    V, A = H.V, B.A
    iv, one = identity(V, F), B.one
    v, v1, v3 = H.v, H.v1, H.v3
    c_va, c_av = braiding(V, A, F), braiding(A, V, F)
    r = CheckReport(field=F)
    r.extend(check_comodule(B, R, H.comodule), "comodule.")
    r.extend(check_regular_module(B, R, H.module), "module.")
    a = r.equal("hopf_module.1", v1 @ T(v, one),
                T(v, one) @ T(c_av, one) @ T(one, v1) @ T(c_va, one) @ T(iv, B.t1))
    b = r.equal("hopf_module.3", v3 @ T(v, one),
                T(v, one) @ T(iv, R.t3) @ T(iv, B.c) @ T(v3, one) @ T(iv, B.c))
    r.holds("hopf_module.nd", a.passed == b.passed,
            "one Hopf compatibility holds and the other does not")
    return r


def free_hopf_module(B, R, X):
    """X⊗A with coactions 1⊗t1, 1⊗t3 and actions 1⊗t2, (c⊗1)(1⊗t3)(c⊗1)."""
    T = tensor
    F = B.field
    A = B.A
    ix, one = identity(X, F), B.one
    XA = X * A
    comod = Comodule(XA, T(ix, B.t1).relabel(dom=XA * A, cod=XA * A),
                     T(ix, R.t3).relabel(dom=XA * A, cod=XA * A))
    v = T(ix, B.m).relabel(dom=XA * A, cod=XA)
    v2 = T(ix, B.t2).relabel(dom=XA * A, cod=XA * A)
    v3 = T(braiding(X, A, F), one) @ T(ix, R.t3) @ T(braiding(A, X, F), one)
    v3 = v3.relabel(dom=A * XA, cod=A * XA)
    return HopfModule(comod, RegularModule(SemigroupModule(XA, v), v2, v3))


def transport(H, g, A):
    """The Hopf module structure carried along an isomorphism g: V -> W."""
    T = tensor
    F = g.field
    ginv = inverse(g)
    one = identity(A, F)
    W = g.cod
    WA, AW = W * A, A * W

    def conj(f, left):
        if left:
            return (T(one, g) @ f @ T(one, ginv)).relabel(dom=AW, cod=AW)
        return (T(g, one) @ f @ T(ginv, one)).relabel(dom=WA, cod=WA)

    comod = Comodule(W, conj(H.v1, False), conj(H.v3, False))
    v = (g @ H.v @ T(ginv, one)).relabel(dom=WA, cod=W)
    mod = RegularModule(SemigroupModule(W, v), conj(H.module.v2, False), conj(H.module.v3, True))
    return HopfModule(comod, mod)


# ------------------------------------------------------------- internal hom


@dataclass(frozen=True, eq=False)
class InternalHom:
    """[A,Y] realized as Y⊗A*: the basis vector (i, j) is the map sending a_j to y_i."""

    A: object
    Y: object
    sig: object
    eps: LinMap  # A⊗[A,Y] -> Y


def internal_hom(A, Y, field):
    n = A.dim
    Astar = space(f"{A}*" if len(A) else "I*", n)
    sig = Y * Astar
    dy = Y.dim

    def ev(col):
        k, rest = divmod(col, dy * n)
        i, j = divmod(rest, n)
        return {i: 1} if j == k else {}

    eps = LinMap.from_function(A * sig, Y, field, ev)
    return InternalHom(A, Y, sig, eps)


def hom_map(A, f):
    """[A,f] = f⊗1 in the Y⊗A* layout."""
    n = A.dim
    Astar = space(f"{A}*" if len(A) else "I*", n)
    return tensor(f, identity(Astar, f.field))


def hom_unit(A, Y, field):
    """η: Y -> [A, A⊗Y], y ↦ (a ↦ a⊗y)."""
    n, dy = A.dim, Y.dim
    target = internal_hom(A, A * Y, field).sig
    return LinMap.from_function(Y, target, field,
                                lambda i: {(j * dy + i) * n + j: 1 for j in range(n)})


def check_internal_hom(A, Y, field):
    """Both triangle identities of A⊗(-) ⊣ [A,-] at Y."""
    H = internal_hom(A, Y, field)
    r = CheckReport(field=field)
    lhs = internal_hom(A, A * Y, field).eps @ tensor(identity(A, field), hom_unit(A, Y, field))
    r.equal("internal_hom.triangle.1", lhs, identity(A * Y, field))
    rhs = hom_map(A, H.eps) @ hom_unit(A, H.sig, field)
    r.equal("internal_hom.triangle.2", rhs, identity(H.sig, field))
    return r


# -------------------------------------------------------------- coinvariants


def coinvariant_map(B, H, v1_inv):
    """w = [A,v][A,(v¹)⁻¹][A,c]η: V -> [A,V]."""
    F = B.field
    V, A = H.V, B.A
    eta = hom_unit(A, V, F)
    return (hom_map(A, H.v) @ hom_map(A, v1_inv) @ hom_map(A, braiding(A, V, F)) @ eta)


def coinvariants(B, H, antipode):
    v1_inv = coaction_inverse(H.comodule, antipode)
    w = coinvariant_map(B, H, v1_inv)
    p, i = image_factorization(w, label="Vc")
    return Coinvariants(p.cod, p, i, w)


def iso_pair(B, H, Cv):
    """(n, ñ) with n = ε∘c∘(i⊗1): V^c⊗A -> V and ñ∘v = (p⊗1)∘v¹."""
    F = B.field
    V, A = H.V, B.A
    ev = internal_hom(A, V, F).eps
    n = ev @ braiding(Cv.i.cod, A, F) @ tensor(Cv.i, B.one)
    ntilde = solve_through_epi(tensor(Cv.p, B.one) @ H.v1, H.v)
    return n.relabel(dom=Cv.Vc * A, cod=V), ntilde.relabel(dom=V, cod=Cv.Vc * A)


def check_coinvariants(B, H, Cv, n, ntilde):
    F = B.field
    r = CheckReport(field=F)
    r.equal("coinvariants.factorization", Cv.i @ Cv.p, Cv.w)
    r.holds("coinvariants.p_surjective", is_surjective(Cv.p), "p is not onto")
    r.holds("coinvariants.i_injective", is_injective(Cv.i), "i has a kernel")
    r.holds("coinvariants.i1_injective", is_injective(tensor(Cv.i, B.one)),
            "i⊗1 has a kernel")
    r.equal("theta.n_ntilde", n @ ntilde, identity(H.V, F))
    r.equal("theta.ntilde_n", ntilde @ n, identity(Cv.Vc * B.A, F))
    r.equal("theta.ntilde_v", ntilde @ H.v, tensor(Cv.p, B.one) @ H.v1)
    return r


def check_unital_splitting(B, H, Cv, u):
    """For a unital A: E = v(v¹)⁻¹(1⊗u) is idempotent of rank dim V^c and recovers w."""
    F = B.field
    V, A = H.V, B.A
    iv = identity(V, F)
    E = (H.v @ inverse(H.v1) @ tensor(iv, u)).relabel(dom=V, cod=V)
    r = CheckReport(field=F)
    r.equal("unital.idempotent", E @ E, E)
    r.holds("unital.rank", rank(E) == Cv.Vc.dim,
            f"rank of the idempotent {rank(E)} differs from dim V^c {Cv.Vc.dim}")
    w2 = hom_map(A, H.v) @ hom_map(A, braiding(A, V, F)) @ hom_unit(A, V, F) @ E
    r.equal("unital.w", w2, Cv.w)
    return r


# ----------------------------------------------------------- fundamental theorem


def _random_matrix(rng, dom, cod, field):
    rows = [[rng.randint(-3, 3) for _ in range(dom.dim)] for _ in range(cod.dim)]
    return LinMap.from_rows(rows, dom, cod, field)


def _random_unimodular(rng, dom, cod, field):
    """L∘U with unit diagonals, so the inverse stays integral."""
    n = dom.dim
    lower = [[1 if i == j else (rng.randint(-2, 2) if i > j else 0) for j in range(n)]
             for i in range(n)]
    upper = [[1 if i == j else (rng.randint(-2, 2) if i < j else 0) for j in range(n)]
             for i in range(n)]
    L = LinMap.from_rows(lower, cod, cod, field)
    U = LinMap.from_rows(upper, dom, cod, field)
    return L @ U


def _unit_iso(B, X, Cv):
    """θ: X -> (XA)^c with i∘θ = [A,c]η, the other mono through which w factors."""
    F = B.field
    A = B.A
    ex = tensor(identity(X, F), B.e).relabel(cod=X)
    theta = Cv.p @ right_section(ex)
    mono = hom_map(A, braiding(A, X, F)) @ hom_unit(A, X, F)
    return theta, mono


def fthm_check(B, R, seed=0):
    """Unit and counit of the comparison with (-)^c on a fixed battery of Hopf modules."""
    antipode, rh = check_hopf(B)
    if antipode is None:
        raise PreconditionUnmet("t1 not invertible" if not rh.get("hopf.t1_invertible").passed
                                else "t2 not invertible")
    if R is None:
        raise PreconditionUnmet("no regular structure")
    F = B.field
    A = B.A
    rng = random.Random(seed)
    u = find_unit(B.semigroup)
    r = CheckReport(field=F)
    r.extend(check_internal_hom(A, space("Y", 2), F))
    spaces = [space("X", k) for k in (0, 1, 2)] + [space("X", 1) * space("Y", 2)]
    built = {}
    for X in spaces:
        tag = f"fthm[{X}:{X.dim}]."
        H = free_hopf_module(B, R, X)
        r.extend(check_hopf_module(B, R, H), tag)
        Cv = coinvariants(B, H, antipode)
        n, nt = iso_pair(B, H, Cv)
        r.extend(check_coinvariants(B, H, Cv, n, nt), tag)
        r.holds(tag + "unit.dim", Cv.Vc.dim == X.dim,
                f"dim (XA)^c = {Cv.Vc.dim}, dim X = {X.dim}")
        theta, mono = _unit_iso(B, X, Cv)
        r.equal(tag + "unit.mono", Cv.i @ theta, mono)
        r.holds(tag + "unit.iso", Cv.Vc.dim == X.dim and is_injective(theta)
                and is_surjective(theta), "θ is not an isomorphism")
        if u is not None:
            r.extend(check_unital_splitting(B, H, Cv, u), tag)
        built[X] = (H, Cv, n, theta)

    # a Hopf module that is not literally free: X⊗A moved along a random isomorphism
    X2 = spaces[2]
    H2 = built[X2][0]
    g = _random_unimodular(rng, H2.V, space("W", H2.V.dim), F)
    Hg = transport(H2, g, A)
    r.extend(check_hopf_module(B, R, Hg), "fthm[transported].")
    Cg = coinvariants(B, Hg, antipode)
    ng, ntg = iso_pair(B, Hg, Cg)
    r.extend(check_coinvariants(B, Hg, Cg, ng, ntg), "fthm[transported].")
    r.holds("fthm[transported].unit.dim", Cg.Vc.dim == X2.dim, "coinvariants have wrong dim")

    # naturality along f⊗1 for random f: X -> Y
    for src, tgt in ((spaces[1], spaces[2]), (spaces[2], spaces[2]), (spaces[2], spaces[1])):
        tag = f"fthm.natural[{src.dim}->{tgt.dim}]."
        f = _random_matrix(rng, src, tgt, F)
        Hs, Cs, ns, ths = built[src]
        Ht, Ct, nt, tht = built[tgt]
        fa = tensor(f, B.one)
        r.extend(check_comodule_morphism(B, fa, Hs.comodule, Ht.comodule), tag)
        r.extend(check_module_morphism(B.semigroup, fa, Hs.module.base, Ht.module.base), tag)
        fc = solve_through_epi(Ct.p @ fa, Cs.p)
        r.equal(tag + "i_square", Ct.i @ fc, hom_map(A, fa) @ Cs.i)
        r.equal(tag + "counit_square", nt @ tensor(fc, B.one), fa @ ns)
        r.equal(tag + "unit_square", fc @ ths, tht @ f)
    # naturality along the transport isomorphism itself
    fc = solve_through_epi(Cg.p @ g, built[X2][1].p)
    r.equal("fthm.natural[transport].counit_square", ng @ tensor(fc, B.one), g @ built[X2][2])
    return r
