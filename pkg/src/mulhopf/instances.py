"""Concrete multiplier bimonoids.

Finite-dimensional builders take a monoid multiplication table.  The sparse
backend works with finitely supported functions on an infinite discrete
group, where the multiplication has no unit; it evaluates the fusion maps by
closed formulas on delta functions.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .bimonoids import RegularStructure, from_bimonoid
from .exactlin import UNIT, LinMap, braiding, identity, space, tensor
from .report import CheckReport, LawResult, Witness


class InvalidTable(ValueError):
    pass


@dataclass(frozen=True)
class FiniteMonoidTable:
    n: int
    mul: tuple
    id: int
    names: tuple = ()
    inverse: tuple | None = dc_field(default=None)

    def __post_init__(self):
        n = self.n
        mul = tuple(tuple(row) for row in self.mul)
        object.__setattr__(self, "mul", mul)
        if n < 1 or len(mul) != n or any(len(row) != n for row in mul):
            raise InvalidTable("table must be n×n with n ≥ 1")
        if any(not (0 <= x < n) for row in mul for x in row):
            raise InvalidTable("table entry out of range")
        if not 0 <= self.id < n:
            raise InvalidTable("identity out of range")
        for a in range(n):
            if mul[self.id][a] != a or mul[a][self.id] != a:
                raise InvalidTable(f"{self.id} is not a two-sided identity")
        for a, b, c in itertools.product(range(n), repeat=3):
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise InvalidTable(f"not associative at ({a}, {b}, {c})")
        names = tuple(self.names) if self.names else tuple(str(i) for i in range(n))
        if len(names) != n:
            raise InvalidTable("wrong number of element names")
        object.__setattr__(self, "names", names)
        inv = []
        for a in range(n):
            found = [b for b in range(n) if mul[a][b] == self.id and mul[b][a] == self.id]
            inv.append(found[0] if found else None)
        computed = None if None in inv else tuple(inv)
        if self.inverse is not None and tuple(self.inverse) != computed:
            raise InvalidTable("inverse table is inconsistent")
        object.__setattr__(self, "inverse", computed)

    @property
    def is_group(self):
        return self.inverse is not None


def cyclic_table(n):
    names = ["1", "g"] + [f"g{i}" for i in range(2, n)]
    return FiniteMonoidTable(n, [[(a + b) % n for b in range(n)] for a in range(n)], 0,
                             tuple(names[:n]))


def symmetric_table(k):
    """S_k in one-line notation, elements sorted, product (p·q)(i) = p(q(i))."""
    perms = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    names = ["".join(str(x + 1) for x in p) for p in perms]
    return FiniteMonoidTable(len(perms), mul, index[tuple(range(k))], tuple(names))


def idempotent_table():
    """The monoid {1, z} with z² = z."""
    return FiniteMonoidTable(2, [[0, 1], [1, 1]], 0, ("1", "z"))


def table_from_json(spec):
    if "cyclic" in spec:
        return cyclic_table(int(spec["cyclic"]))
    if "symmetric" in spec:
        return symmetric_table(int(spec["symmetric"]))
    if spec.get("monoid") == "idempotent":
        return idempotent_table()
    if "mul" in spec:
        return FiniteMonoidTable(len(spec["mul"]), spec["mul"], int(spec.get("identity", 0)),
                                 tuple(spec.get("names", ())))
    raise InvalidTable(f"unrecognised table description {spec!r}")


def _hopf_data(A, F, mul_fn, unit_vec, comul_fn, counit_fn):
    n = A.dim
    A2 = A * A
    m = LinMap.from_function(A2, A, F, lambda j: mul_fn(*divmod(j, n)))
    u = LinMap(UNIT, A, F, [unit_vec])
    h = LinMap.from_function(A, A2, F, comul_fn)
    e = LinMap.from_function(A, UNIT, F, counit_fn)
    return m, u, h, e


def _sweedler_regular(m, h):
    """t3(a⊗b) = a1⊗b a2 and t4(a⊗b) = b1 a⊗b2 for a unital bialgebra."""
    A = m.cod
    F = m.field
    one = identity(A, F)
    c = braiding(A, A, F)
    t3 = tensor(one, m) @ tensor(one, c) @ tensor(h, one)
    t4 = tensor(m, one) @ tensor(c, one) @ tensor(one, h)
    A2 = A * A
    return RegularStructure(t3.relabel(dom=A2, cod=A2), t4.relabel(dom=A2, cod=A2))


def function_algebra(T, field, name=None):
    """k^M: pointwise product, Δ(δ_g) = Σ_{xy=g} δ_x⊗δ_y, e = evaluation at 1.

    Returns (bimonoid, regular structure or None when M is not a group).
    """
    n = T.n
    A = space("A", n, [f"δ_{s}" for s in T.names])
    m, u, h, e = _hopf_data(
        A, field,
        lambda a, b: {a: 1} if a == b else {},
        {g: 1 for g in range(n)},
        lambda g: {x * n + y: 1 for x in range(n) for y in range(n) if T.mul[x][y] == g},
        lambda g: {0: 1} if g == T.id else {},
    )
    B = from_bimonoid(m, u, h, e, name=name or "function_algebra")
    R = _sweedler_regular(m, h) if T.is_group else None
    return B, R


def group_algebra(T, field, name=None):
    """kG: convolution product, Δ(g) = g⊗g, e(g) = 1."""
    if not T.is_group:
        raise InvalidTable("group algebra needs a group table")
    n = T.n
    A = space("A", n, list(T.names))
    m, u, h, e = _hopf_data(
        A, field,
        lambda a, b: {T.mul[a][b]: 1},
        {T.id: 1},
        lambda g: {g * n + g: 1},
        lambda g: {0: 1},
    )
    B = from_bimonoid(m, u, h, e, name=name or "group_algebra")
    return B, _sweedler_regular(m, h)


def inversion_matrix(T, field, A):
    """The permutation δ_g ↦ δ_{g⁻¹} (also g ↦ g⁻¹ on group algebras)."""
    return LinMap(A, A, field, [{T.inverse[g]: 1} for g in range(T.n)])


def regular_structures(B, R):
    """The regular comodule (A, t1, t3) and the regular module (A, m, v2, v3)."""
    from .comodules import Comodule
    from .modules import SemigroupModule, lift_v2, lift_v3, RegularModule
    C = Comodule(B.A, B.t1, R.t3)
    M = SemigroupModule(B.A, B.m)
    return C, RegularModule(M, lift_v2(B, M), lift_v3(B, R, M))


# ----------------------------------------------------------- sparse backend


class Integers:
    """ℤ under addition."""

    name = "integers"
    identity = 0

    def mul(self, a, b):
        return a + b

    def inv(self, a):
        return -a

    def key(self, a):
        return a

    def format(self, a):
        return str(a)

    def random(self, rng):
        return rng.randint(-40, 40)


class CyclicGroup:
    """ℤ/n, used for finite windows."""

    identity = 0

    def __init__(self, n):
        self.n = n
        self.name = f"cyclic{n}"

    def mul(self, a, b):
        return (a + b) % self.n

    def inv(self, a):
        return -a % self.n

    def key(self, a):
        return a

    def format(self, a):
        return str(a)

    def random(self, rng):
        return rng.randrange(self.n)

    def elements(self):
        return list(range(self.n))


class FreeGroup2:
    """The free group on a, b; elements are reduced words, capitals are inverses."""

    name = "free2"
    identity = ""

    def mul(self, u, v):
        out = list(u)
        for ch in v:
            if out and out[-1] == ch.swapcase():
                out.pop()
            else:
                out.append(ch)
        return "".join(out)

    def inv(self, u):
        return u[::-1].swapcase()

    def key(self, u):
        return (len(u), u)

    def format(self, u):
        return u or "e"

    def random(self, rng):
        word = ""
        for _ in range(rng.randint(0, 6)):
            word = self.mul(word, rng.choice("aAbB"))
        return word


class SymmetricGroup:
    """S_n on tuples in one-line notation, (p·q)(i) = p(q(i))."""

    def __init__(self, n):
        self.n = n
        self.name = f"symmetric{n}"
        self.identity = tuple(range(n))

    def mul(self, p, q):
        return tuple(p[i] for i in q)

    def inv(self, p):
        out = [0] * self.n
        for i, x in enumerate(p):
            out[x] = i
        return tuple(out)

    def key(self, p):
        return p

    def format(self, p):
        return "".join(str(x + 1) for x in p)

    def random(self, rng):
        p = list(range(self.n))
        rng.shuffle(p)
        return tuple(p)

    def elements(self):
        return sorted(itertools.permutations(range(self.n)))


class SparseElement:
    """A finitely supported function G -> k, stored without zeros."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {g: x for g, x in (terms or {}).items() if x}

    def __eq__(self, other):
        return isinstance(other, SparseElement) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"SparseElement({self.terms!r})"


class SparseTensor:
    """A finite sum of tensors of delta functions, keyed by tuples of group elements."""

    __slots__ = ("legs", "terms")

    def __init__(self, legs, terms):
        self.legs = legs
        self.terms = {k: x for k, x in terms.items() if x}

    @classmethod
    def pure(cls, *elements, norm=None):
        terms = {}
        for combo in itertools.product(*(e.terms.items() for e in elements)):
            key = tuple(g for g, _ in combo)
            coeff = 1
            for _, x in combo:
                coeff = coeff * x
            terms[key] = terms.get(key, 0) + coeff
        if norm is not None:
            terms = {k: norm(x) for k, x in terms.items()}
        return cls(len(elements), terms)

    def __eq__(self, other):
        return (isinstance(other, SparseTensor) and self.legs == other.legs
                and self.terms == other.terms)

    __hash__ = None

    def __repr__(self):
        return f"SparseTensor({self.legs}, {self.terms!r})"


class SparseFunctionAlgebra:
    """Finitely supported functions on a discrete group G with its fusion maps.

    All maps send tensors of deltas to tensors of deltas, so they are applied
    term by term.
    """

    def __init__(self, G, field):
        self.G = G
        self.field = field

    def delta(self, g, coeff=1):
        return SparseElement({g: self.field(coeff)})

    # one- and two-leg closed forms on basis keys
    def _t1(self, a, b):
        G = self.G
        return G.mul(a, G.inv(b)), b

    def _t1_inv(self, a, b):
        return self.G.mul(a, b), b

    def _t2(self, a, b):
        G = self.G
        return a, G.mul(G.inv(a), b)

    def _t2_inv(self, a, b):
        return a, self.G.mul(a, b)

    def _swap(self, a, b):
        return b, a

    def _on(self, T, fn, leg, width):
        norm = self.field.norm
        out = {}
        for key, x in T.terms.items():
            new = key[:leg] + tuple(fn(*key[leg:leg + width])) + key[leg + width:]
            out[new] = norm(out.get(new, 0) + x)
        return SparseTensor(T.legs, out)

    def apply_t1(self, T, leg=0):
        return self._on(T, self._t1, leg, 2)

    def apply_t1_inverse(self, T, leg=0):
        return self._on(T, self._t1_inv, leg, 2)

    def apply_t2(self, T, leg=0):
        return self._on(T, self._t2, leg, 2)

    def apply_t2_inverse(self, T, leg=0):
        return self._on(T, self._t2_inv, leg, 2)

    # the algebra is commutative, so t3 = t1 and t4 = t2
    apply_t3 = apply_t1
    apply_t4 = apply_t2

    def swap(self, T, leg=0):
        return self._on(T, self._swap, leg, 2)

    def apply_sbar(self, x):
        if isinstance(x, SparseElement):
            return SparseElement({self.G.inv(g): v for g, v in x.terms.items()})
        return self._on(x, lambda a: (self.G.inv(a),), 0, 1)

    def m(self, f, g):
        return SparseElement({k: self.field.norm(x * g.terms[k])
                              for k, x in f.terms.items() if k in g.terms})

    def apply_m(self, T, leg=0):
        """Pointwise multiplication of legs (leg, leg+1)."""
        norm = self.field.norm
        out = {}
        for key, x in T.terms.items():
            if key[leg] == key[leg + 1]:
                new = key[:leg + 1] + key[leg + 2:]
                out[new] = norm(out.get(new, 0) + x)
        return SparseTensor(T.legs - 1, out)

    def e(self, f):
        return f.terms.get(self.G.identity, 0)

    def apply_e(self, T, leg):
        ident = self.G.identity
        out = {}
        for key, x in T.terms.items():
            if key[leg] == ident:
                new = key[:leg] + key[leg + 1:]
                out[new] = self.field.norm(out.get(new, 0) + x)
        return SparseTensor(T.legs - 1, out)

    def tensor(self, *elements):
        return SparseTensor.pure(*elements, norm=self.field.norm)

    def apply_s1(self, T, leg=0):
        """s1(a⊗b) = s̄(a)·b."""
        G = self.G
        T = self._on(T, lambda a: (G.inv(a),), leg, 1)
        return self.apply_m(T, leg)

    def window(self, elements):
        """Matrices of the closed forms on span{δ_g : g in elements} (a finite subgroup)."""
        F = self.field
        G = self.G
        elements = list(elements)
        index = {g: i for i, g in enumerate(elements)}
        n = len(elements)
        for a, b in itertools.product(elements, repeat=2):
            if G.mul(a, b) not in index or G.inv(a) not in index:
                raise ValueError("window is not closed under the group operations")
        A = space("A", n, [f"δ_{G.format(g)}" for g in elements])
        A2 = A * A

        def pair_map(fn):
            def col(j):
                a, b = divmod(j, n)
                x, y = fn(elements[a], elements[b])
                return {index[x] * n + index[y]: 1}
            return LinMap.from_function(A2, A2, F, col)

        return {
            "t1": pair_map(self._t1),
            "t1_inverse": pair_map(self._t1_inv),
            "t2": pair_map(self._t2),
            "t2_inverse": pair_map(self._t2_inv),
            "m": LinMap.from_function(A2, A, F, lambda j: {j // n: 1} if j // n == j % n else {}),
            "e": LinMap.from_function(A, UNIT, F,
                                      lambda j: {0: 1} if elements[j] == G.identity else {}),
            "sbar": LinMap.from_function(A, A, F, lambda j: {index[G.inv(elements[j])]: 1}),
        }


def sparse_function_algebra(G, field):
    return SparseFunctionAlgebra(G, field)


def _random_element(S, rng, max_terms=1):
    k = rng.randint(1, max_terms)
    terms = {}
    for _ in range(k):
        g = S.G.random(rng)
        terms[g] = S.field.norm(terms.get(g, 0) + S.field(rng.randint(1, 9)))
    return SparseElement(terms)


def sparse_law_check(S, seed, samples=1000, max_terms=1):
    """Seeded random evaluations of the fusion maps' laws on the sparse backend.

    Each sample draws three elements (single deltas when max_terms is 1) and
    evaluates both sides of every law exactly.
    """
    rng = random.Random(seed)
    r = CheckReport(field=S.field)
    fails = {}
    t1, t2, sw = S.apply_t1, S.apply_t2, S.swap

    def record(law, ok, inputs):
        if not ok and law not in fails:
            fails[law] = inputs

    laws = ["sparse.mbm_ax_1.fusion", "sparse.mbm_ax_1.counit", "sparse.mbm_ax_2.fusion",
            "sparse.mbm_ax_2.counit", "sparse.mbm_ax_compatibility.fusion",
            "sparse.t1_inverse", "sparse.t2_inverse", "sparse.sbar_involution",
            "sparse.sbar_inversion", "sparse.s1t1e", "sparse.t_2-3_compatibility"]
    for _ in range(samples):
        a, b, x = (_random_element(S, rng, max_terms) for _ in range(3))
        P3 = S.tensor(a, b, x)
        P2 = S.tensor(a, b)
        label = (a, b, x)
        lhs = t1(t1(P3, 0), 1)
        rhs = t1(sw(t1(sw(t1(P3, 1), 0), 1), 0), 0)
        record(laws[0], lhs == rhs, label)
        record(laws[1], S.apply_e(t1(P2), 1) == S.apply_e(P2, 1), label)
        lhs = t2(t2(P3, 1), 0)
        rhs = t2(sw(t2(sw(t2(P3, 0), 1), 0), 1), 1)
        record(laws[2], lhs == rhs, label)
        record(laws[3], S.apply_e(t2(P2), 0) == S.apply_e(P2, 0), label)
        record(laws[4], t1(t2(P3, 0), 1) == t2(t1(P3, 1), 0), label)
        record(laws[5], S.apply_t1_inverse(t1(P2)) == P2 and t1(S.apply_t1_inverse(P2)) == P2,
               label)
        record(laws[6], S.apply_t2_inverse(t2(P2)) == P2 and t2(S.apply_t2_inverse(P2)) == P2,
               label)
        record(laws[7], S.apply_sbar(S.apply_sbar(a)) == a, label)
        expect = SparseElement({S.G.inv(g): v for g, v in a.terms.items()})
        record(laws[8], S.apply_sbar(a) == expect, label)
        # s1 t1 = e⊗1
        record(laws[9], S.apply_s1(t1(P2)) == S.apply_e(P2, 0), label)
        # (m⊗1)(1⊗t3) = (1⊗m)(1⊗c)(t2⊗1)
        record(laws[10], S.apply_m(S.apply_t3(P3, 1), 0) == S.apply_m(sw(t2(P3, 0), 1), 1), label)
    for law in laws:
        if law in fails:
            a, b, x = fails[law]
            r.add(LawResult(law, False, Witness(text=f"fails on {a}, {b}, {x} (seed {seed})")))
        else:
            r.add(LawResult(law, True))
    return r
