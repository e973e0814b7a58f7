"""Explicit algebra constructors: Matsuo algebras from 3-transposition data,
spin factors, split spin factors, the eight Norton-Sakuma algebras, double
axes and flip subalgebras."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra
from .errors import (
    AxialError,
    ConsistencyFailure,
    DegenerateParameters,
    InvalidGroup,
    NotAFlip,
    NotAnAxis,
    NotAnAxisCandidate,
    NotOrthogonal,
    UnknownCatalogEntry,
    Unsupported,
)
from .fields import QQ, FieldSpec
from .fusion import FusionLaw, law_J, law_M
from .linalg import Matrix, Subspace, is_zero_vec, vadd
from .perms import (
    Perm,
    conjugate,
    format_cycles,
    identity_perm,
    inverse,
    mul,
    perm_order,
)


# ---------------------------------------------------------------------------
# 3-transposition groups and Matsuo algebras


@dataclass(frozen=True)
class ThreeTranspositionGroup:
    """A normal generating set D of involutions with |cd| <= 3 for c,d in D."""

    degree: int
    transpositions: Tuple[Perm, ...]

    @classmethod
    def symmetric(cls, n: int) -> "ThreeTranspositionGroup":
        """S_n acting on n points, D = the transposition class."""
        if n < 2:
            raise InvalidGroup("need at least two points for transpositions")
        ident = list(identity_perm(n))
        ds = []
        for i in range(n):
            for j in range(i + 1, n):
                p = ident[:]
                p[i], p[j] = p[j], p[i]
                ds.append(tuple(p))
        return cls(degree=n, transpositions=tuple(ds))

    def validate(self):
        ds = self.transpositions
        if not ds:
            raise InvalidGroup("empty transposition set")
        dset = set(ds)
        if len(dset) != len(ds):
            raise InvalidGroup("repeated elements in the transposition set")
        ident = identity_perm(self.degree)
        for d in ds:
            if len(d) != self.degree:
                raise InvalidGroup("degree mismatch in transposition set")
            if d == ident or mul(d, d) != ident:
                raise InvalidGroup("transposition set contains a non-involution")
        for c in ds:
            for d in ds:
                if conjugate(c, d) not in dset:
                    raise InvalidGroup("set is not closed under conjugation")
                if perm_order(mul(c, d)) > 3:
                    raise InvalidGroup("product of two transpositions has order > 3")

    def names(self) -> Tuple[str, ...]:
        return tuple(format_cycles(d) for d in self.transpositions)


def matsuo(group: ThreeTranspositionGroup, eta, field: FieldSpec = QQ) -> Algebra:
    """Matsuo algebra: basis D, a.a = a, a.b = 0 when a,b commute, else
    (eta/2)(a + b - a^b); Gram 1 / 0 / eta/2 on the same three cases."""
    if field.characteristic == 2:
        raise Unsupported("Matsuo algebras need characteristic != 2")
    eta = field.coerce(eta)
    if eta == field.zero() or eta == field.one():
        raise DegenerateParameters("eta must avoid 0 and 1")
    group.validate()
    ds = group.transpositions
    index = {d: i for i, d in enumerate(ds)}
    n = len(ds)
    half_eta = eta / field.from_int(2)
    products: Dict[Tuple[int, int], Dict[int, object]] = {}
    gram = [[field.zero()] * n for _ in range(n)]
    for i in range(n):
        products[(i, i)] = {i: field.one()}
        gram[i][i] = field.one()
    for i in range(n):
        for j in range(i + 1, n):
            order = perm_order(mul(ds[i], ds[j]))
            if order == 2:
                continue
            k = index[conjugate(ds[i], ds[j])]
            products[(i, j)] = {i: half_eta, j: half_eta, k: -half_eta}
            gram[i][j] = half_eta
            gram[j][i] = half_eta
    names = group.names()
    axes = [
        (names[i], tuple(field.one() if t == i else field.zero() for t in range(n)))
        for i in range(n)
    ]
    return Algebra(
        field,
        names,
        products,
        axes=axes,
        law=law_J(field, eta),
        form=Matrix(field, gram),
    )


# ---------------------------------------------------------------------------
# Spin factors


@dataclass(frozen=True)
class SpinFactor:
    field: FieldSpec
    gram: Matrix
    algebra: Algebra

    def axis(self, u) -> Tuple:
        """Ambient vector (1 + u)/2 for u in V with b(u,u) = 2."""
        u = tuple(self.field.coerce(x) for x in u)
        m = self.gram.nrows
        if len(u) != m:
            raise AxialError("vector length does not match the quadratic space")
        norm = _sym_apply(self.gram, u, u)
        if norm != self.field.from_int(2):
            raise NotAnAxisCandidate("spin axis needs b(u,u) = 2")
        half = self.field.one() / self.field.from_int(2)
        return (half,) + tuple(half * x for x in u)


def _sym_apply(gram: Matrix, u, v):
    total = gram.field.zero()
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if vj:
                total = total + ui * gram.data[i][j] * vj
    return total


def _check_gram(field: FieldSpec, gram) -> Matrix:
    g = gram if isinstance(gram, Matrix) else Matrix(field, gram)
    if g.nrows != g.ncols:
        raise AxialError("gram matrix must be square")
    if g != g.transpose():
        raise AxialError("gram matrix must be symmetric")
    return g


def spin_factor(gram, field: FieldSpec = QQ) -> SpinFactor:
    """S(b) = F1 + V with uv = b(u,v)/2 * 1 and identity 1."""
    if field.characteristic == 2:
        raise Unsupported("spin factors need characteristic != 2")
    g = _check_gram(field, gram)
    m = g.nrows
    n = m + 1
    half = field.one() / field.from_int(2)
    products: Dict[Tuple[int, int], Dict[int, object]] = {(0, 0): {0: field.one()}}
    for k in range(m):
        products[(0, k + 1)] = {k + 1: field.one()}
        for l in range(k, m):
            c = half * g.data[k][l]
            if c:
                products[(k + 1, l + 1)] = {0: c}
    names = ["1"] + [f"v{k + 1}" for k in range(m)]
    alg = Algebra(field, names, products, law=law_J(field, half))
    sf = SpinFactor(field=field, gram=g, algebra=alg)
    axes = []
    two = field.from_int(2)
    for k in range(m):
        unit = tuple(field.one() if t == k else field.zero() for t in range(m))
        if _sym_apply(g, unit, unit) == two:
            axes.append((f"x+{k + 1}", sf.axis(unit)))
            axes.append((f"x-{k + 1}", sf.axis(tuple(-x for x in unit))))
    alg = alg.with_axes(axes)
    return SpinFactor(field=field, gram=g, algebra=alg)


# ---------------------------------------------------------------------------
# Split spin factors


@dataclass(frozen=True)
class SplitSpinFactor:
    field: FieldSpec
    gram: Matrix
    alpha: object
    algebra: Algebra

    def _check_unit(self, e) -> Tuple:
        e = tuple(self.field.coerce(x) for x in e)
        if len(e) != self.gram.nrows:
            raise AxialError("vector length does not match the quadratic space")
        if _sym_apply(self.gram, e, e) != self.field.one():
            raise NotAnAxisCandidate("idempotent families need b(e,e) = 1")
        return e

    def fam_a(self, e) -> Tuple:
        """(e + alpha z1 + (alpha+1) z2)/2 for unit-norm e."""
        e = self._check_unit(e)
        half = self.field.one() / self.field.from_int(2)
        al = self.alpha
        return (half * al, half * (al + self.field.one())) + tuple(half * x for x in e)

    def fam_b(self, e) -> Tuple:
        """(e + (2-alpha) z1 + (1-alpha) z2)/2 for unit-norm e."""
        e = self._check_unit(e)
        half = self.field.one() / self.field.from_int(2)
        al = self.alpha
        two = self.field.from_int(2)
        return (half * (two - al), half * (self.field.one() - al)) + tuple(half * x for x in e)


def split_spin_factor(gram, alpha, field: FieldSpec = QQ) -> SplitSpinFactor:
    """S(b, alpha) = Fz1 + Fz2 + E with z1 e = alpha e, z2 e = (1-alpha) e and
    ef = -b(e,f) z where z = (alpha-2) alpha z1 + (alpha-1)(alpha+1) z2."""
    if field.characteristic == 2:
        raise Unsupported("split spin factors need characteristic != 2")
    alpha = field.coerce(alpha)
    one, zero = field.one(), field.zero()
    two = field.from_int(2)
    if alpha in (zero, one, one / two):
        raise DegenerateParameters("alpha must avoid 0, 1/2 and 1")
    g = _check_gram(field, gram)
    m = g.nrows
    n = m + 2
    z_coef_1 = (alpha - two) * alpha
    z_coef_2 = (alpha - one) * (alpha + one)
    products: Dict[Tuple[int, int], Dict[int, object]] = {
        (0, 0): {0: one},
        (1, 1): {1: one},
    }
    for k in range(m):
        products[(0, k + 2)] = {k + 2: alpha}
        products[(1, k + 2)] = {k + 2: one - alpha}
        for l in range(k, m):
            b = g.data[k][l]
            if b:
                products[(k + 2, l + 2)] = {0: -b * z_coef_1, 1: -b * z_coef_2}
    names = ["z1", "z2"] + [f"e{k + 1}" for k in range(m)]
    law = law_M(field, alpha, one / two)
    alg = Algebra(field, names, products, law=law)
    ssf = SplitSpinFactor(field=field, gram=g, alpha=alpha, algebra=alg)
    z1 = alg.basis_vector(0)
    z2 = alg.basis_vector(1)
    if alg.mul(z1, z1) != z1 or alg.mul(z2, z2) != z2 or not is_zero_vec(alg.mul(z1, z2)):
        raise ConsistencyFailure("z1, z2 are not orthogonal idempotents")
    axes: List[Tuple[str, Tuple]] = [("z1", z1)]
    for k in range(m):
        unit = tuple(one if t == k else zero for t in range(m))
        if _sym_apply(g, unit, unit) == one:
            a = ssf.fam_a(unit)
            if alg.mul(a, a) != a:
                raise ConsistencyFailure("family (a) vector is not idempotent")
            axes.append((f"a:e{k + 1}", a))
            if m == 1:
                axes.append((f"a:-e{k + 1}", ssf.fam_a(tuple(-x for x in unit))))
    alg = alg.with_axes(axes)
    return SplitSpinFactor(field=field, gram=g, alpha=alpha, algebra=alg)


# ---------------------------------------------------------------------------
# Norton-Sakuma algebras

# Products and form values as printed, completed by the affine index maps
# i -> eps*i + c on Z/n with the rho-power elements held fixed.  The listed
# seeds for unprinted entries come from the embedded 2A / 3A subalgebras.
_NS_TABLE = {
    "2A": {
        "n": 2,
        "window": (0, 1),
        "extras": ("arho",),
        "products": [
            ("a0", "a0", {"a0": "1"}),
            ("arho", "arho", {"arho": "1"}),
            ("a0", "a1", {"a0": "1/8", "a1": "1/8", "arho": "-1/8"}),
            ("a0", "arho", {"a0": "1/8", "arho": "1/8", "a1": "-1/8"}),
        ],
        "gram": [
            ("a0", "a0", "1"),
            ("arho", "arho", "1"),
            ("a0", "a1", "1/8"),
            ("a0", "arho", "1/8"),
        ],
    },
    "2B": {
        "n": 2,
        "window": (0, 1),
        "extras": (),
        "products": [
            ("a0", "a0", {"a0": "1"}),
            ("a0", "a1", {}),
        ],
        "gram": [
            ("a0", "a0", "1"),
            ("a0", "a1", "0"),
        ],
    },
    "3A": {
        "n": 3,
        "window": (-1, 0, 1),
        "extras": ("urho",),
        "products": [
            ("a0", "a0", {"a0": "1"}),
            ("urho", "urho", {"urho": "1"}),
            ("a0", "a1", {"a0": "1/16", "a1": "1/16", "a-1": "1/32", "urho": "-135/2048"}),
            ("a0", "urho", {"a0": "2/9", "a1": "-1/9", "a-1": "-1/9", "urho": "5/32"}),
        ],
        "gram": [
            ("a0", "a0", "1"),
            ("a0", "a1", "13/256"),
            ("a0", "urho", "1/4"),
            ("urho", "urho", "8/5"),
        ],
    },
    "3C": {
        "n": 3,
        "window": (-1, 0, 1),
        "extras": (),
        "products": [
            ("a0", "a0", {"a0": "1"}),
            ("a0", "a1", {"a0": "1/64", "a1": "1/64", "a-1": "-1/64"}),
        ],
        "gram": [
            ("a0", "a0", "1"),
            ("a0", "a1", "1/64"),
        ],
    },
    "4A": {
        "n": 4,
        "window": (-1, 0, 1, 2),
        "extras": ("vrho",),
        "products": [
            ("a0", "a0", {"a0": "1"}),
            ("vrho", "vrho", {"vrho": "1"}),
            ("a0", "a1", {"a0": "3/64", "a1": "3/64", "a-1": "1/64", "a2": "1/64", "vrho": "-3/64"}),
            ("a0", "a2", {}),
            ("a0", "vrho", {"a0": "5/16", "a1": "-1/8", "a2": "-1/16", "a-1": "-1/8", "vrho": "3/16"}),
        ],
        "gram": [
            ("a0", "a0", "1"),
            ("a0", "a1", "1/32"),
            ("a0", "a2", "0"),
            ("a0", "vrho", "3/8"),
            ("vrho", "vrho", "2"),
        ],
    },
    "4B": {
        "n": 4,
        "window": (-1, 0, 1, 2),
        "extras": ("arho2",),
        "products": [
            ("a0", "a0", {"a0": "1"}),
            ("arho2", "arho2", {"arho2": "1"}),
            ("a0", "a1", {"a0": "1/64", "a1": "1/64", "a-1": "-1/64", "a2": "-1/64", "arho2": "1/64"}),
            ("a0", "a2", {"a0": "1/8", "a2": "1/8", "arho2": "-1/8"}),
            ("a0", "arho2", {"a0": "1/8", "arho2": "1/8", "a2": "-1/8"}),
        ],
        "gram": [
            ("a0", "a0", "1"),
            ("arho2", "arho2", "1"),
            ("a0", "a1", "1/64"),
            ("a0", "a2", "1/8"),
            ("a0", "arho2", "1/8"),
        ],
    },
    "5A": {
        "n": 5,
        "window": (-2, -1, 0, 1, 2),
        "extras": ("wrho",),
        "products": [
            ("a0", "a0", {"a0": "1"}),
            ("a0", "a1", {"a0": "3/128", "a1": "3/128", "a2": "-1/128", "a-1": "-1/128", "a-2": "-1/128", "wrho": "1"}),
            ("a0", "a2", {"a0": "3/128", "a2": "3/128", "a1": "-1/128", "a-1": "-1/128", "a-2": "-1/128", "wrho": "-1"}),
            ("a0", "wrho", {"a1": "7/4096", "a-1": "7/4096", "a2": "-7/4096", "a-2": "-7/4096", "wrho": "7/32"}),
            ("wrho", "wrho", {"a-2": "175/524288", "a-1": "175/524288", "a0": "175/524288", "a1": "175/524288", "a2": "175/524288"}),
        ],
        "gram": [
            ("a0", "a0", "1"),
            ("a0", "a1", "3/128"),
            ("a0", "a2", "3/128"),
            ("a0", "wrho", "0"),
            ("wrho", "wrho", "875/524288"),
        ],
    },
    "6A": {
        "n": 6,
        "window": (-2, -1, 0, 1, 2, 3),
        "extras": ("arho3", "urho2"),
        "products": [
            ("a0", "a0", {"a0": "1"}),
            ("arho3", "arho3", {"arho3": "1"}),
            ("urho2", "urho2", {"urho2": "1"}),
            ("a0", "a1", {"a0": "1/64", "a1": "1/64", "a-2": "-1/64", "a-1": "-1/64", "a2": "-1/64", "a3": "-1/64", "arho3": "1/64", "urho2": "45/2048"}),
            ("a0", "a2", {"a0": "1/16", "a2": "1/16", "a-2": "1/32", "urho2": "-135/2048"}),
            ("a0", "a3", {"a0": "1/8", "a3": "1/8", "arho3": "-1/8"}),
            ("a0", "urho2", {"a0": "2/9", "a2": "-1/9", "a-2": "-1/9", "urho2": "5/32"}),
            ("a0", "arho3", {"a0": "1/8", "arho3": "1/8", "a3": "-1/8"}),
            ("arho3", "urho2", {}),
        ],
        "gram": [
            ("a0", "a0", "1"),
            ("a0", "a1", "5/256"),
            ("a0", "a2", "13/256"),
            ("a0", "a3", "1/8"),
            ("a0", "arho3", "1/8"),
            ("a0", "urho2", "1/4"),
            ("arho3", "arho3", "1"),
            ("arho3", "urho2", "0"),
            ("urho2", "urho2", "8/5"),
        ],
    },
}

NORTON_SAKUMA_NAMES = tuple(sorted(_NS_TABLE))
NORTON_SAKUMA_DIMS = {
    "2A": 3, "2B": 2, "3A": 4, "3C": 3, "4A": 5, "4B": 5, "5A": 6, "6A": 8,
}


def _ns_symbol_key(sym: str, extras: Sequence[str]):
    if sym in extras:
        return (1, extras.index(sym))
    return (0, int(sym[1:]))


def _ns_apply(sym: str, eps: int, c: int, n: int, w0: int, extras) -> str:
    if sym in extras:
        return sym
    i = int(sym[1:])
    return f"a{((eps * i + c - w0) % n) + w0}"


def norton_sakuma(name: str, field: FieldSpec = QQ) -> Algebra:
    """One of the eight 2-generated algebras of Monster type (1/4, 1/32)."""
    key = name.strip().upper()
    if key not in _NS_TABLE:
        raise UnknownCatalogEntry(f"unknown Norton-Sakuma label {name!r}")
    if field.kind != "rational":
        raise Unsupported("Norton-Sakuma tables are defined over the rationals")
    spec = _NS_TABLE[key]
    n, window, extras = spec["n"], spec["window"], spec["extras"]
    w0 = window[0]
    symbols = [f"a{w}" for w in window] + list(extras)

    def pair(s: str, t: str) -> Tuple[str, str]:
        return tuple(sorted((s, t), key=lambda x: _ns_symbol_key(x, extras)))

    products: Dict[Tuple[str, str], Dict[str, object]] = {}
    gram: Dict[Tuple[str, str], object] = {}
    for eps in (1, -1):
        for c in range(n):
            for s, t, val in spec["products"]:
                kp = pair(_ns_apply(s, eps, c, n, w0, extras), _ns_apply(t, eps, c, n, w0, extras))
                img = {}
                for sym, coef in val.items():
                    img[_ns_apply(sym, eps, c, n, w0, extras)] = field.parse(coef)
                prev = products.get(kp)
                if prev is not None and prev != img:
                    raise ConsistencyFailure(f"{key}: inconsistent product at {kp}")
                products[kp] = img
            for s, t, coef in spec["gram"]:
                kp = pair(_ns_apply(s, eps, c, n, w0, extras), _ns_apply(t, eps, c, n, w0, extras))
                v = field.parse(coef)
                if kp in gram and gram[kp] != v:
                    raise ConsistencyFailure(f"{key}: inconsistent form value at {kp}")
                gram[kp] = v

    for x in range(len(symbols)):
        for y in range(x, len(symbols)):
            kp = pair(symbols[x], symbols[y])
            if kp not in products:
                raise ConsistencyFailure(f"{key}: product {kp} not determined by the table")
            if kp not in gram:
                raise ConsistencyFailure(f"{key}: form value {kp} not determined by the table")

    sym_index = {s: i for i, s in enumerate(symbols)}
    idx_products = {}
    for (s, t), val in products.items():
        idx_products[(sym_index[s], sym_index[t])] = {
            sym_index[u]: c for u, c in val.items()
        }
    gm = [[field.zero()] * len(symbols) for _ in range(len(symbols))]
    for (s, t), v in gram.items():
        gm[sym_index[s]][sym_index[t]] = v
        gm[sym_index[t]][sym_index[s]] = v

    axis_order = ["a0", "a1"] + [f"a{w}" for w in window if w not in (0, 1)]
    axes = []
    for s in axis_order:
        i = sym_index[s]
        axes.append(
            (s, tuple(field.one() if t == i else field.zero() for t in range(len(symbols))))
        )
    law = law_M(field, field.parse("1/4"), field.parse("1/32"))
    alg = Algebra(field, symbols, idx_products, axes=axes, law=law, form=Matrix(field, gm))
    if alg.dim != NORTON_SAKUMA_DIMS[key]:
        raise ConsistencyFailure(f"{key}: unexpected dimension {alg.dim}")
    return alg


# ---------------------------------------------------------------------------
# Double axes and flip subalgebras


def double_axis(m: Algebra, a, b) -> Tuple:
    """a + b for orthogonal axes; idempotent precisely because ab = 0."""
    a = m.coerce_vector(a)
    b = m.coerce_vector(b)
    if m.mul(a, a) != a or m.mul(b, b) != b:
        raise NotAnAxis("double axis summands must be idempotent")
    if not is_zero_vec(m.mul(a, b)):
        raise NotOrthogonal("double axis needs ab = 0")
    return vadd(a, b)


@dataclass(frozen=True)
class FlipSubalgebra:
    algebra: Algebra
    ambient: Algebra
    embed: Matrix
    sigma: Perm
    singles: Tuple[str, ...]
    doubles: Tuple[str, ...]
    extras: Tuple[str, ...]


def flip_subalgebra(
    group: ThreeTranspositionGroup,
    eta,
    sigma: Perm,
    field: FieldSpec = QQ,
) -> FlipSubalgebra:
    """Fixed single and double axes of an involutive diagram automorphism,
    generating a subalgebra of Monster type (2 eta, eta)."""
    ambient = matsuo(group, eta, field)
    eta = field.coerce(eta)
    ds = group.transpositions
    index = {d: i for i, d in enumerate(ds)}
    if len(sigma) != group.degree:
        raise NotAFlip("flip degree does not match the group")
    if mul(sigma, sigma) != identity_perm(group.degree):
        raise NotAFlip("flip must be an involution (or identity)")
    try:
        induced = tuple(index[conjugate(d, sigma)] for d in ds)
    except KeyError:
        raise NotAFlip("flip does not preserve the transposition set")
    # explicit diagram-automorphism verification: the commuting relation and
    # the triple map (c,d) -> c^d must both be preserved
    for i, c in enumerate(ds):
        for j, d in enumerate(ds):
            ci, dj = ds[induced[i]], ds[induced[j]]
            if perm_order(mul(c, d)) != perm_order(mul(ci, dj)):
                raise NotAFlip("flip does not preserve product orders on D")
            if induced[index[conjugate(c, d)]] != index[conjugate(ci, dj)]:
                raise NotAFlip("flip does not commute with the triple map")

    names = group.names()
    singles: List[Tuple[str, Tuple]] = []
    doubles: List[Tuple[str, Tuple]] = []
    extras: List[Tuple[str, Tuple]] = []
    seen = set()
    for i in range(len(ds)):
        if i in seen:
            continue
        j = induced[i]
        if j == i:
            singles.append((f"s:{names[i]}", ambient.basis_vector(i)))
            seen.add(i)
            continue
        seen.update((i, j))
        pair_name = f"{names[min(i, j)]}+{names[max(i, j)]}"
        if perm_order(mul(ds[i], ds[j])) == 2:
            doubles.append(
                (f"d:{pair_name}", double_axis(m=ambient, a=ambient.basis_vector(i), b=ambient.basis_vector(j)))
            )
        else:
            extras.append(
                (f"x:{pair_name}", vadd(ambient.basis_vector(i), ambient.basis_vector(j)))
            )

    gens = [v for _, v in singles] + [v for _, v in doubles]
    if not gens:
        raise NotAFlip("flip leaves no single or double axes to generate from")
    sub = ambient.subalgebra_gen(gens)
    law = law_M(field, field.from_int(2) * eta, eta)
    alg, embed = ambient.restrict(sub, axes=singles + doubles, law=law)
    return FlipSubalgebra(
        algebra=alg,
        ambient=ambient,
        embed=embed,
        sigma=sigma,
        singles=tuple(nm for nm, _ in singles),
        doubles=tuple(nm for nm, _ in doubles),
        extras=tuple(nm for nm, _ in extras),
    )
