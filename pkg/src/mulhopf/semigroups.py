"""Non-unital semigroups A with multiplication m: A⊗A -> A."""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import (
    UNIT, LinMap, braiding, cokernel_witness, compose, identity, kernel_basis,
    left_adjunct, right_adjunct, solve, stack, tensor,
)
from .report import CheckReport


@dataclass(frozen=True, eq=False)
class Semigroup:
    A: object
    m: LinMap

    @property
    def field(self):
        return self.m.field

    @property
    def dim(self):
        return self.A.dim


@dataclass(frozen=True, eq=False)
class Monoid:
    base: Semigroup
    u: LinMap


def unit_semigroup(field):
    """The monoidal unit I with its canonical multiplication."""
    return Semigroup(UNIT, identity(UNIT, field).relabel(dom=UNIT * UNIT))


def check_associative(S):
    r = CheckReport(field=S.field)
    one = identity(S.A, S.field)
    r.equal("associativity", S.m @ tensor(S.m, one), S.m @ tensor(one, S.m))
    return r


def left_multiplications(S):
    """λ: a ↦ m(a⊗-) as a map A -> A*⊗A."""
    return right_adjunct(S.m, S.dim)


def right_multiplications(S):
    """ρ: a ↦ m(-⊗a) as a map A -> A*⊗A."""
    return left_adjunct(S.m, S.dim)


def check_nondegenerate(S):
    r = CheckReport(field=S.field)
    for law, mult in (("nondegenerate.left", left_multiplications(S)),
                      ("nondegenerate.right", right_multiplications(S))):
        ker = kernel_basis(mult)
        r.holds(law, not ker, "multiplication kills", ker[0] if ker else None, S.A)
    return r


def check_surjective(S):
    r = CheckReport(field=S.field)
    wit = cokernel_witness(S.m)
    r.holds("m_surjective", wit is None, "functional vanishing on the image of m", wit, S.A)
    return r


def opposite(S):
    return Semigroup(S.A, S.m @ braiding(S.A, S.A, S.field))


def tensor_semigroup(S, T):
    F = S.field
    mid = tensor(identity(S.A, F), braiding(T.A, S.A, F), identity(T.A, F))
    return Semigroup(S.A * T.A, tensor(S.m, T.m) @ mid)


def find_unit(S):
    """The unit u: I -> A if the multiplication has one, else None."""
    n = S.dim
    lam = left_multiplications(S)
    rho = right_multiplications(S)
    # identity of A in the (b, z) row layout of both adjuncts
    rhs_col = {}
    for b in range(n):
        rhs_col[b * n + b] = 1
        rhs_col[n * n + b * n + b] = 1
    system = stack(lam, rho)
    rhs = LinMap(UNIT, system.cod, S.field, [rhs_col])
    u = solve(system, rhs)
    if u is None:
        return None
    return u.relabel(dom=UNIT, cod=S.A)


def as_monoid(S):
    u = find_unit(S)
    return None if u is None else Monoid(S, u)


def unit_law(M):
    r = CheckReport(field=M.base.field)
    S = M.base
    one = identity(S.A, S.field)
    r.equal("unit.left", (S.m @ tensor(M.u, one)).relabel(dom=S.A), one)
    r.equal("unit.right", (S.m @ tensor(one, M.u)).relabel(dom=S.A), one)
    return r
