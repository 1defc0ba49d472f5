"""Exact scalars, tensor-factor signatures and sparse exact linear maps.

Matrices are stored column-wise as ``{row: scalar}`` dictionaries with no
stored zeros.  Every routine is exact; eliminations use the pivot rule
"leftmost column, then topmost row" so that sections and factorizations are
reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction


class LinAlgError(Exception):
    pass


class SignatureMismatch(LinAlgError):
    pass


class NotSurjective(LinAlgError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotInvertible(LinAlgError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotWellDefined(LinAlgError):
    pass


# ---------------------------------------------------------------- fields


class Rationals:
    """The field of rational numbers.

    Integral values are stored as ``int`` and the rest as ``Fraction``, so
    each value has exactly one representation.
    """

    kind = "rational"
    zero = 0
    one = 1

    def norm(self, x):
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def __call__(self, x):
        if isinstance(x, str):
            return self.norm(Fraction(x.strip()))
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return self.norm(x)
        raise TypeError(f"cannot coerce {x!r} to a rational")

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.norm(Fraction(1) / x)

    def format(self, x):
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The prime field F_p; elements are residues in [0, p)."""

    kind = "prime"
    zero = 0
    one = 1

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"{p!r} is not a prime")
        self.p = p

    def norm(self, x):
        return x % self.p

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, int):
            return x % self.p
        raise TypeError(f"cannot coerce {x!r} to F_{self.p}")

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def format(self, x):
        return str(x)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p):
    return PrimeField(p)


# ------------------------------------------------------------ signatures


@dataclass(frozen=True)
class Factor:
    label: str
    dim: int
    names: tuple | None = dc_field(default=None, compare=False, repr=False)

    def name(self, i):
        if self.names is not None:
            return self.names[i]
        return f"{self.label}{i}"


class Signature:
    """An ordered list of tensor factors; the empty list is the unit object I."""

    __slots__ = ("factors",)

    def __init__(self, factors=()):
        self.factors = tuple(factors)
        for f in self.factors:
            if f.dim < 0:
                raise ValueError("negative dimension")

    @property
    def dim(self):
        d = 1
        for f in self.factors:
            d *= f.dim
        return d

    @property
    def dims(self):
        return tuple(f.dim for f in self.factors)

    def __mul__(self, other):
        return Signature(self.factors + other.factors)

    def __pow__(self, k):
        return Signature(self.factors * k)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return Signature(self.factors[k])
        return Signature((self.factors[k],))

    def __eq__(self, other):
        return isinstance(other, Signature) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        if not self.factors:
            return "I"
        return "⊗".join(f.label for f in self.factors)

    def decode(self, idx):
        out = []
        for d in reversed(self.dims):
            idx, r = divmod(idx, d)
            out.append(r)
        return tuple(reversed(out))

    def encode(self, multi):
        idx = 0
        for d, i in zip(self.dims, multi):
            idx = idx * d + i
        return idx

    def basis_label(self, idx):
        if not self.factors:
            return "1"
        return "⊗".join(f.name(i) for f, i in zip(self.factors, self.decode(idx)))


UNIT = Signature()


def space(label, dim, names=None):
    if names is not None:
        names = tuple(names)
        if len(names) != dim:
            raise ValueError("wrong number of basis names")
    return Signature((Factor(label, dim, names),))


# -------------------------------------------------------------- LinMap


def _clean(vec, norm):
    out = {}
    for k, v in vec.items():
        v = norm(v)
        if v:
            out[k] = v
    return out


class LinMap:
    """An exact linear map dom -> cod stored as sparse columns."""

    __slots__ = ("dom", "cod", "field", "cols")

    def __init__(self, dom, cod, field, cols):
        cols = tuple(cols)
        if len(cols) != dom.dim:
            raise SignatureMismatch(f"{len(cols)} columns for domain of dim {dom.dim}")
        self.dom = dom
        self.cod = cod
        self.field = field
        self.cols = cols

    @classmethod
    def from_rows(cls, rows, dom, cod, field):
        rows = [list(r) for r in rows]
        if len(rows) != cod.dim or any(len(r) != dom.dim for r in rows):
            raise SignatureMismatch(f"matrix shape does not match {dom} -> {cod}")
        cols = [{} for _ in range(dom.dim)]
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                x = field(x)
                if x:
                    cols[j][i] = x
        return cls(dom, cod, field, cols)

    @classmethod
    def from_function(cls, dom, cod, field, fn):
        """Build column j from ``fn(j)``, a dict ``{row: scalar}``."""
        return cls(dom, cod, field, [_clean(fn(j), field.norm) for j in range(dom.dim)])

    @property
    def shape(self):
        return (self.cod.dim, self.dom.dim)

    def to_rows(self):
        rows = [[0] * self.dom.dim for _ in range(self.cod.dim)]
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                rows[i][j] = x
        return rows

    def entry(self, i, j):
        return self.cols[j].get(i, 0)

    def apply(self, vec):
        acc = {}
        cols = self.cols
        for k, a in vec.items():
            for i, b in cols[k].items():
                acc[i] = acc.get(i, 0) + a * b
        return _clean(acc, self.field.norm)

    def __matmul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.shape == other.shape and self.field == other.field
                and self.cols == other.cols)

    __hash__ = None

    def __add__(self, other):
        _check_same_shape(self, other)
        norm = self.field.norm
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            for i, x in b.items():
                c[i] = c.get(i, 0) + x
            cols.append(_clean(c, norm))
        return LinMap(self.dom, self.cod, self.field, cols)

    def scale(self, c):
        c = self.field(c)
        norm = self.field.norm
        return LinMap(self.dom, self.cod, self.field,
                      [_clean({i: c * x for i, x in col.items()}, norm) for col in self.cols])

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not any(self.cols)

    @property
    def T(self):
        cols = [{} for _ in range(self.cod.dim)]
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                cols[i][j] = x
        return LinMap(self.cod, self.dom, self.field, cols)

    def relabel(self, dom=None, cod=None):
        """The same matrix read between other signatures of equal dimension."""
        dom = self.dom if dom is None else dom
        cod = self.cod if cod is None else cod
        if dom.dim != self.dom.dim or cod.dim != self.cod.dim:
            raise SignatureMismatch("relabel must preserve dimensions")
        return LinMap(dom, cod, self.field, self.cols)

    def __repr__(self):
        return f"LinMap({self.dom} -> {self.cod}, {self.to_rows()})"


def _check_same_shape(f, g):
    if f.shape != g.shape or f.field != g.field:
        raise SignatureMismatch(f"shapes differ: {f.shape} vs {g.shape}")


def identity(sig, field):
    return LinMap(sig, sig, field, [{j: 1} for j in range(sig.dim)])


def zero_map(dom, cod, field):
    return LinMap(dom, cod, field, [{} for _ in range(dom.dim)])


def compose(g, f, *rest):
    """g∘f (and further right factors: compose(h, g, f) = h∘g∘f)."""
    if rest:
        return compose(g, compose(f, *rest))
    if f.cod.dim != g.dom.dim:
        raise SignatureMismatch(f"cannot compose {g.dom}({g.dom.dim}) after {f.cod}({f.cod.dim})")
    if f.field != g.field:
        raise SignatureMismatch("fields differ")
    gcols = g.cols
    norm = g.field.norm
    cols = []
    for col in f.cols:
        if len(col) == 1:
            (k, a), = col.items()
            if a == 1:
                cols.append(gcols[k])
                continue
        acc = {}
        for k, a in col.items():
            for i, b in gcols[k].items():
                acc[i] = acc.get(i, 0) + a * b
        cols.append(_clean(acc, norm))
    return LinMap(f.dom, g.cod, g.field, cols)


def _tensor2(f, g):
    if f.field != g.field:
        raise SignatureMismatch("fields differ")
    dg = g.cod.dim
    norm = f.field.norm
    cols = []
    for cf in f.cols:
        for cg in g.cols:
            col = {}
            for i1, a in cf.items():
                base = i1 * dg
                for i2, b in cg.items():
                    col[base + i2] = a * b
            # products of nonzero field elements are nonzero
            cols.append({k: norm(v) for k, v in col.items()})
    return LinMap(f.dom * g.dom, f.cod * g.cod, f.field, cols)


def tensor(*maps):
    """Kronecker product with the leftmost factor most significant."""
    if not maps:
        raise ValueError("tensor of no maps")
    out = maps[0]
    for g in maps[1:]:
        out = _tensor2(out, g)
    return out


def permute(sig, order, field):
    """The leg permutation sending factor order[k] of ``sig`` to position k."""
    order = tuple(order)
    if sorted(order) != list(range(len(sig))):
        raise ValueError(f"{order} is not a permutation of {len(sig)} legs")
    out_sig = Signature(sig.factors[k] for k in order)
    cols = []
    for multi in itertools.product(*(range(d) for d in sig.dims)):
        cols.append({out_sig.encode([multi[k] for k in order]): 1})
    return LinMap(sig, out_sig, field, cols)


def braiding(sa, sb, field):
    """The symmetry c: A⊗B -> B⊗A."""
    da, db = sa.dim, sb.dim
    cols = [{j * da + i: 1} for i in range(da) for j in range(db)]
    return LinMap(sa * sb, sb * sa, field, cols)


# ---------------------------------------------------------- elimination


def _reduce(rows, ncols, field, aug=None):
    """Gauss-Jordan elimination of sparse rows.

    Returns (rows, aug, pivots, used) where pivots lists (column, row) pairs
    in column order and used is the set of pivot rows.
    """
    norm = field.norm
    rows = [dict(r) for r in rows]
    aug = None if aug is None else [dict(r) for r in aug]
    where = {}
    for i, r in enumerate(rows):
        for c in r:
            where.setdefault(c, set()).add(i)
    used = set()
    pivots = []
    for col in range(ncols):
        holders = where.get(col)
        if not holders:
            continue
        cand = [i for i in holders if i not in used]
        if not cand:
            continue
        r = min(cand)
        used.add(r)
        prow = rows[r]
        inv = field.inv(prow[col])
        if inv != 1:
            for k in prow:
                prow[k] = norm(prow[k] * inv)
            if aug is not None:
                arow = aug[r]
                for k in arow:
                    arow[k] = norm(arow[k] * inv)
        for i in list(holders):
            if i == r:
                continue
            row = rows[i]
            a = -row[col]
            for k, v in prow.items():
                x = norm(row.get(k, 0) + a * v)
                if x:
                    if k not in row:
                        where.setdefault(k, set()).add(i)
                    row[k] = x
                elif k in row:
                    del row[k]
                    where[k].discard(i)
            if aug is not None:
                dst = aug[i]
                for k, v in aug[r].items():
                    x = norm(dst.get(k, 0) + a * v)
                    if x:
                        dst[k] = x
                    else:
                        dst.pop(k, None)
        pivots.append((col, r))
    return rows, aug, pivots, used


def _rows_of(f):
    rows = [{} for _ in range(f.cod.dim)]
    for j, col in enumerate(f.cols):
        for i, x in col.items():
            rows[i][j] = x
    return rows


def rank(f):
    # eliminating the columns as rows gives the same rank
    _, _, pivots, _ = _reduce(f.cols, f.cod.dim, f.field)
    return len(pivots)


def kernel_basis(f):
    """An exact basis of ker f, one vector per free column, as dicts."""
    rows, _, pivots, _ = _reduce(_rows_of(f), f.dom.dim, f.field)
    pivot_cols = {c: r for c, r in pivots}
    basis = []
    for k in range(f.dom.dim):
        if k in pivot_cols:
            continue
        vec = {k: 1}
        for c, r in pivots:
            x = rows[r].get(k)
            if x:
                vec[c] = f.field.norm(-x)
        basis.append(dict(sorted(vec.items())))
    return basis


def cokernel_witness(f):
    """A nonzero functional vanishing on the image of f, or None if f is onto."""
    ker = kernel_basis(f.T)
    return ker[0] if ker else None


def is_injective(f):
    return rank(f) == f.dom.dim


def is_surjective(f):
    return rank(f) == f.cod.dim


def image_factorization(f, label="im"):
    """Factor f = i∘p through its column space, pivot columns leftmost first."""
    rows, _, pivots, _ = _reduce(_rows_of(f), f.dom.dim, f.field)
    mid = space(label, len(pivots))
    i = LinMap(mid, f.cod, f.field, [f.cols[c] for c, _ in pivots])
    pcols = [{} for _ in range(f.dom.dim)]
    for t, (_, r) in enumerate(pivots):
        for j, x in rows[r].items():
            pcols[j][t] = x
    p = LinMap(f.dom, mid, f.field, pcols)
    return p, i


def solve(a, b):
    """A particular X with a∘X = b (free variables zero), or None."""
    if a.cod.dim != b.cod.dim:
        raise SignatureMismatch("right-hand side has the wrong height")
    rows, aug, pivots, used = _reduce(_rows_of(a), a.dom.dim, a.field, _rows_of(b))
    for i in range(len(rows)):
        if i not in used and aug[i]:
            return None
    cols = [{} for _ in range(b.dom.dim)]
    for c, r in pivots:
        for j, x in aug[r].items():
            cols[j][c] = x
    return LinMap(b.dom, a.dom, a.field, cols)


def right_section(f):
    """sigma with f∘sigma = 1, supported on the pivot columns of f."""
    sigma = solve(f, identity(f.cod, f.field))
    if sigma is None:
        raise NotSurjective(f"map {f.dom} -> {f.cod} is not surjective", cokernel_witness(f))
    return sigma


def solve_through_epi(target, epi):
    """The unique u with u∘epi = target."""
    u = compose(target, right_section(epi))
    if compose(u, epi) != target:
        raise NotWellDefined("target is not constant on the fibres of the epimorphism")
    return u


def inverse(f):
    if f.dom.dim != f.cod.dim:
        raise NotInvertible(f"non-square map {f.shape}")
    g = solve(f, identity(f.cod, f.field))
    if g is None:
        ker = kernel_basis(f)
        raise NotInvertible("map has a nontrivial kernel", ker[0] if ker else None)
    return g


def first_difference(lhs, rhs):
    """(column, lhs-rhs column) for the first differing column, or None."""
    _check_same_shape(lhs, rhs)
    norm = lhs.field.norm
    for j, (a, b) in enumerate(zip(lhs.cols, rhs.cols)):
        if a != b:
            diff = dict(a)
            for i, x in b.items():
                diff[i] = diff.get(i, 0) - x
            return j, dict(sorted(_clean(diff, norm).items()))
    return None


def format_vector(sig, vec, field):
    """Human-readable linear combination of basis labels."""
    if not vec:
        return "0"
    parts = []
    for k, x in sorted(vec.items()):
        lab = sig.basis_label(k)
        if x == 1:
            parts.append(lab)
        else:
            parts.append(f"{field.format(x)}·{lab}")
    return " + ".join(parts)


def stack(*maps):
    """Vertical concatenation: x ↦ (f(x), g(x), ...)."""
    dom = maps[0].dom
    if any(f.dom.dim != dom.dim for f in maps):
        raise SignatureMismatch("stacked maps need a common domain")
    offsets = []
    total = 0
    for f in maps:
        offsets.append(total)
        total += f.cod.dim
    cols = []
    for j in range(dom.dim):
        col = {}
        for off, f in zip(offsets, maps):
            for i, x in f.cols[j].items():
                col[off + i] = x
        cols.append(col)
    return LinMap(dom, space("stack", total), maps[0].field, cols)


def right_adjunct(k, n_right):
    """For k: Y⊗R -> Z (R of dim n_right), the map y ↦ (r ↦ k(y⊗r)).

    The result lands in R*⊗Z with rows indexed by (r, z).
    """
    dz = k.cod.dim
    dy, rem = divmod(k.dom.dim, n_right) if n_right else (0, 0)
    if rem or (n_right == 0 and k.dom.dim):
        raise SignatureMismatch("right leg does not divide the domain")
    cols = []
    for y in range(dy):
        col = {}
        for r in range(n_right):
            for z, x in k.cols[y * n_right + r].items():
                col[r * dz + z] = x
        cols.append(col)
    return LinMap(space("Y", dy), space("R*Z", n_right * dz), k.field, cols)


def left_adjunct(k, n_left):
    """For k: L⊗Y -> Z (L of dim n_left), the map y ↦ (l ↦ k(l⊗y))."""
    dz = k.cod.dim
    dy, rem = divmod(k.dom.dim, n_left) if n_left else (0, 0)
    if rem or (n_left == 0 and k.dom.dim):
        raise SignatureMismatch("left leg does not divide the domain")
    cols = []
    for y in range(dy):
        col = {}
        for l in range(n_left):
            for z, x in k.cols[l * dy + y].items():
                col[l * dz + z] = x
        cols.append(col)
    return LinMap(space("Y", dy), space("L*Z", n_left * dz), k.field, cols)


def solve_left_leg(k, n_left, target):
    """Solve k(l⊗X(y)) = target(l⊗y) for all l, where k: L⊗Y' -> Z and target: L⊗Y -> Z.

    Returns X: Y -> Y' or None when no solution exists.
    """
    x = solve(left_adjunct(k, n_left), left_adjunct(target, n_left))
    if x is None:
        return None
    ydom = target.dom[1:] if len(target.dom) > 1 else space("Y", x.dom.dim)
    ycod = k.dom[1:] if len(k.dom) > 1 else space("Y", x.cod.dim)
    if ydom.dim != x.dom.dim:
        ydom = space("Y", x.dom.dim)
    if ycod.dim != x.cod.dim:
        ycod = space("Y", x.cod.dim)
    return x.relabel(ydom, ycod)


def solve_right_leg(k, n_right, target):
    """Solve k(X(y)⊗r) = target(y⊗r) for all r; returns X or None."""
    x = solve(right_adjunct(k, n_right), right_adjunct(target, n_right))
    if x is None:
        return None
    ydom = target.dom[:-1] if len(target.dom) > 1 else space("Y", x.dom.dim)
    ycod = k.dom[:-1] if len(k.dom) > 1 else space("Y", x.cod.dim)
    if ydom.dim != x.dom.dim:
        ydom = space("Y", x.dom.dim)
    if ycod.dim != x.cod.dim:
        ycod = space("Y", x.cod.dim)
    return x.relabel(ydom, ycod)
