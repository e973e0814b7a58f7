"""Axis verification, eigenspace decompositions, Miyamoto maps, axis-set
closure, Miyamoto groups and 2-generated axet classification."""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import Algebra
from .errors import (
    ClosureCapExceeded,
    ConsistencyFailure,
    InvalidGrading,
    NotAnAxis,
    NotPrimitive,
    NotSemisimple,
    NotTwoGenerated,
    Unsupported,
)
from .fusion import FusionLaw, Grading, is_symmetric, unique_adequate_grading
from .linalg import Matrix, Subspace, invert, kernel, solve_linear
from .perms import Perm, dimino, orbits_of

DEFAULT_AXIS_CAP = 10_000


def eigenspace(alg: Algebra, a, lam) -> Subspace:
    """A_lam(a) = { x : a x = lam x } as the kernel of ad_a - lam I."""
    lam = alg.field.coerce(lam)
    return kernel(alg.adjoint(a).minus_scalar_diag(lam))


def eigen_decomposition(alg: Algebra, a, law: FusionLaw):
    """Eigenspaces of ad_a at each law eigenvalue, in law element order."""
    ad = alg.adjoint(a)
    spaces = tuple(kernel(ad.minus_scalar_diag(lam)) for lam in law.elements)
    dims = tuple(s.dim for s in spaces)
    return dims, spaces


@dataclass(frozen=True)
class AxisReport:
    axis: Tuple
    law: FusionLaw
    is_idempotent: bool
    eigen_dims: Tuple[int, ...]
    eigenspaces: Tuple[Subspace, ...]
    is_semisimple: bool
    fusion_violations: Tuple[Tuple, ...]
    is_primitive: bool

    @property
    def passed(self) -> bool:
        return self.is_idempotent and self.is_semisimple and not self.fusion_violations

    def eigen_dim(self, lam) -> int:
        return self.eigen_dims[self.law.index_of(lam)]

    def describe(self) -> str:
        dims = ", ".join(
            f"{self.law.field.fmt(lam)}: {d}"
            for lam, d in zip(self.law.elements, self.eigen_dims)
        )
        status = "axis" if self.passed else "NOT an axis"
        prim = ", primitive" if self.is_primitive else ""
        return f"{status} ({dims}){prim}"


def check_axis(alg: Algebra, a, law: FusionLaw) -> AxisReport:
    """Full axis verification: idempotency, semisimple decomposition, fusion.

    Failures are recorded in the report, never raised.
    """
    a = alg.coerce_vector(a)
    is_idem = alg.mul(a, a) == a
    dims, spaces = eigen_decomposition(alg, a, law)
    semisimple = sum(dims) == alg.dim
    if semisimple:
        # independence cross-check: stacked eigenbases must have full rank
        stacked: List = []
        for s in spaces:
            stacked.extend(s.basis)
        if Subspace.from_vectors(alg.field, alg.dim, stacked).dim != alg.dim:
            semisimple = False

    violations = []
    sym = is_symmetric(law)
    target_cache: Dict[frozenset, Subspace] = {}

    def target(cell: frozenset) -> Subspace:
        got = target_cache.get(cell)
        if got is None:
            got = Subspace.zero(alg.field, alg.dim)
            for k in sorted(cell):
                got = got.sum(spaces[k])
            target_cache[cell] = got
        return got

    for i in range(law.size):
        j_start = i if sym else 0
        for j in range(j_start, law.size):
            cell = law.table[i][j]
            tgt = target(cell)
            for r, u in enumerate(spaces[i].basis):
                vs = spaces[j].basis
                for s_idx in range(r if (sym and i == j) else 0, len(vs)):
                    v = vs[s_idx]
                    if not tgt.contains(alg.mul(u, v)):
                        violations.append((law.elements[i], law.elements[j], u, v))

    primitive = is_idem and dims[law.one_index] == 1
    return AxisReport(
        axis=a,
        law=law,
        is_idempotent=is_idem,
        eigen_dims=dims,
        eigenspaces=spaces,
        is_semisimple=semisimple,
        fusion_violations=tuple(violations),
        is_primitive=primitive,
    )


@dataclass(frozen=True)
class AxialVerdict:
    """Outcome of verifying the defining property of an axial algebra:
    every designated axis obeys the fusion law, and together the axes
    generate the whole algebra.  Both legs are reported separately since
    either can fail on its own."""

    law: FusionLaw
    reports: Tuple[Tuple[str, AxisReport], ...]
    axes_pass: bool
    generated_dim: int
    dim: int

    @property
    def generates(self) -> bool:
        return self.generated_dim == self.dim

    @property
    def passed(self) -> bool:
        return self.axes_pass and self.generates

    def describe(self) -> str:
        if self.passed:
            return f"axial for {self.law.name}: {len(self.reports)} axes generate"
        bits = []
        if not self.axes_pass:
            bad = [n for n, r in self.reports if not r.passed]
            bits.append(f"axes failing the law: {', '.join(bad)}")
        if not self.generates:
            bits.append(f"axes generate dim {self.generated_dim} < {self.dim}")
        return "not axial: " + "; ".join(bits)


def is_axial(alg: Algebra, law: Optional[FusionLaw] = None) -> AxialVerdict:
    """Verify that alg with its designated axes is an axial algebra for law.

    Checks every designated axis with check_axis and then that the axes
    generate alg as an algebra.  A clean fusion check on each axis does not
    by itself make the algebra axial; the generation leg is part of the
    definition and is the one that fails for some degenerate parameters.
    """
    law = law if law is not None else alg.law
    if law is None:
        raise NotAnAxis("no fusion law given and none attached to the algebra")
    if not alg.axes:
        raise NotAnAxis("the algebra has no designated axes")
    reports = tuple((name, check_axis(alg, v, law)) for name, v in alg.axes)
    gen = alg.subalgebra_gen([v for _, v in alg.axes])
    return AxialVerdict(
        law=law,
        reports=reports,
        axes_pass=all(r.passed for _, r in reports),
        generated_dim=gen.dim,
        dim=alg.dim,
    )


def projection(alg: Algebra, a, v, law: Optional[FusionLaw] = None):
    """Scalar phi with the A_1(a)-component of v equal to phi * a."""
    law = law if law is not None else alg.law
    if law is None:
        raise Unsupported("projection needs a fusion law to enumerate eigenvalues")
    a = alg.coerce_vector(a)
    v = alg.coerce_vector(v)
    if alg.mul(a, a) != a:
        raise NotAnAxis("projection base vector is not idempotent")
    dims, spaces = eigen_decomposition(alg, a, law)
    if sum(dims) != alg.dim:
        raise NotSemisimple("adjoint eigenspaces do not span the algebra")
    if dims[law.one_index] != 1:
        raise NotPrimitive("1-eigenspace is not one-dimensional")
    cols: List[Sequence] = []
    offset_one = 0
    for t, s in enumerate(spaces):
        if t == law.one_index:
            offset_one = len(cols)
        cols.extend(s.basis)
    basis_mat = Matrix.from_columns(alg.field, [list(c) for c in cols])
    x, _ = solve_linear(basis_mat, v)
    if x is None:
        raise NotSemisimple("eigenbasis failed to express the vector")
    b1 = spaces[law.one_index].basis[0]
    k = next(i for i, ai in enumerate(a) if ai)
    return x[offset_one] * b1[k] / a[k]


@dataclass(frozen=True)
class MiyamotoMap:
    matrix: Matrix
    axis: Tuple
    law: FusionLaw
    grading: Grading

    def apply(self, v):
        return self.matrix.mul_vec(v)

    @property
    def is_identity(self) -> bool:
        return self.matrix == Matrix.identity(self.matrix.field, self.matrix.nrows)


def resolve_grading(law: FusionLaw, grading: Optional[Grading] = None) -> Grading:
    """Default to the unique adequate C2 grading, or all-plus when none exists."""
    if grading is None:
        found = unique_adequate_grading(law)
        if found is None:
            return Grading((1,) * law.size)
        return found
    if not grading.is_valid_for(law):
        raise InvalidGrading("sign map does not respect the fusion law")
    return grading


def miyamoto(
    alg: Algebra,
    a,
    law: Optional[FusionLaw] = None,
    grading: Optional[Grading] = None,
) -> MiyamotoMap:
    """Involutive automorphism: +1 on the plus eigenspaces, -1 on the minus ones."""
    law = law if law is not None else alg.law
    if law is None:
        raise Unsupported("miyamoto map needs a fusion law")
    if alg.field.characteristic == 2:
        raise Unsupported("no nontrivial C2 character in characteristic 2")
    report = check_axis(alg, a, law)
    if not report.passed:
        raise NotAnAxis(report.describe())
    grading = resolve_grading(law, grading)

    cols: List[Sequence] = []
    signs: List[int] = []
    for t, s in enumerate(report.eigenspaces):
        for b in s.basis:
            cols.append(list(b))
            signs.append(grading.signs[t])
    basis_mat = Matrix.from_columns(alg.field, cols)
    diag = Matrix(
        alg.field,
        [
            [alg.field.from_int(s) if r == c else alg.field.zero() for c, s in enumerate(signs)]
            for r in range(len(signs))
        ],
    )
    tau = basis_mat.matmul(diag).matmul(invert(basis_mat))

    ident = Matrix.identity(alg.field, alg.dim)
    if tau.matmul(tau) != ident:
        raise ConsistencyFailure("Miyamoto map does not square to the identity")
    tau_cols = [tau.column(j) for j in range(alg.dim)]
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            p = alg.basis_product(i, j)
            lhs = tau.mul_vec(p) if p is not None else alg.zero_vector()
            if lhs != alg.mul(tau_cols[i], tau_cols[j]):
                raise ConsistencyFailure("Miyamoto map is not an algebra automorphism")
    return MiyamotoMap(matrix=tau, axis=report.axis, law=law, grading=grading)


@dataclass(frozen=True)
class Axet:
    """A closed axis set with its Miyamoto data."""

    algebra: Algebra
    law: FusionLaw
    grading: Grading
    axes: Tuple[Tuple, ...]
    names: Tuple[str, ...]
    reports: Tuple[AxisReport, ...]
    tau_mats: Tuple[Matrix, ...]
    tau_perms: Tuple[Perm, ...]
    orbits: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.axes)


def close_axes(
    alg: Algebra,
    axes: Iterable,
    law: Optional[FusionLaw] = None,
    grading: Optional[Grading] = None,
    cap: Optional[int] = None,
    names: Optional[Sequence[str]] = None,
) -> Axet:
    """Close an axis set under all of its Miyamoto maps.

    Sweeps every map over every known axis until nothing new appears; each new
    image is re-verified as an axis before being admitted.
    """
    law = law if law is not None else alg.law
    if law is None:
        raise Unsupported("axis closure needs a fusion law")
    grading = resolve_grading(law, grading)
    limit = DEFAULT_AXIS_CAP if cap is None else cap

    vecs: List[Tuple] = []
    index: Dict[Tuple, int] = {}
    name_list: List[str] = []
    reports: List[AxisReport] = []
    mats: List[Matrix] = []

    def admit(v, name, seed: bool):
        rep = check_axis(alg, v, law)
        if not rep.passed:
            if seed:
                raise NotAnAxis(f"{name}: {rep.describe()}")
            raise ConsistencyFailure(
                f"Miyamoto image {name} failed axis verification: {rep.describe()}"
            )
        tau = miyamoto(alg, v, law, grading)
        index[v] = len(vecs)
        vecs.append(v)
        name_list.append(name)
        reports.append(rep)
        mats.append(tau.matrix)

    seed_list = [alg.coerce_vector(v) for v in axes]
    if names is not None and len(names) != len(seed_list):
        raise ValueError("names must match the seed axes")
    for k, v in enumerate(seed_list):
        if v in index:
            continue
        admit(v, names[k] if names is not None else f"x{len(vecs)}", seed=True)

    while True:
        new: List[Tuple] = []
        for mat in mats:
            for v in vecs:
                img = mat.mul_vec(v)
                if img not in index and img not in new:
                    new.append(img)
        if not new:
            break
        for img in new:
            if len(vecs) >= limit:
                raise ClosureCapExceeded(f"axis closure exceeded cap {limit}")
            admit(img, f"x{len(vecs)}", seed=False)

    perms: List[Perm] = []
    for i, mat in enumerate(mats):
        images = []
        for v in vecs:
            img = mat.mul_vec(v)
            j = index.get(img)
            if j is None:
                raise ConsistencyFailure("closed set is not permuted by a Miyamoto map")
            images.append(j)
        perms.append(tuple(images))
    # the matrix group acts faithfully on a closed axis set
    seen: Dict[Perm, Matrix] = {}
    for p, m in zip(perms, mats):
        if p in seen and seen[p] != m:
            raise ConsistencyFailure("distinct Miyamoto maps induce the same permutation")
        seen.setdefault(p, m)

    return Axet(
        algebra=alg,
        law=law,
        grading=grading,
        axes=tuple(vecs),
        names=tuple(name_list),
        reports=tuple(reports),
        tau_mats=tuple(mats),
        tau_perms=tuple(perms),
        orbits=orbits_of(perms, len(vecs)),
    )


@dataclass(frozen=True)
class GroupInfo:
    order: int
    generators: Tuple[Perm, ...]
    elements: Tuple[Perm, ...]


def miyamoto_group(axet: Axet, cap: Optional[int] = None) -> GroupInfo:
    """Permutation group generated by the tau maps on the closed axis set."""
    gens: List[Perm] = []
    for p in axet.tau_perms:
        if p not in gens:
            gens.append(p)
    elements = dimino(axet.size, gens, cap=cap)
    return GroupInfo(order=len(elements), generators=tuple(gens), elements=tuple(elements))


@dataclass(frozen=True)
class AxetShape:
    kind: str  # "X" or "X'"
    total: int
    k: Optional[int]
    skew: bool
    orbit_sizes: Tuple[int, ...]

    @property
    def label(self) -> str:
        if self.kind == "X":
            return f"X({self.total})"
        return f"X'({self.k}+{2 * self.k})"


def classify_2gen_axet(axet: Axet, generators: Tuple[int, int] = (0, 1)) -> AxetShape:
    """Orbit-shape classification of an axet regenerated by two of its axes."""
    i, j = generators
    n = axet.size
    if not (0 <= i < n and 0 <= j < n):
        raise NotTwoGenerated("generator indices out of range")
    reached = {i, j}
    while True:
        fresh = set()
        for s in reached:
            p = axet.tau_perms[s]
            for t in reached:
                if p[t] not in reached:
                    fresh.add(p[t])
        if not fresh:
            break
        reached |= fresh
    if len(reached) != n:
        raise NotTwoGenerated(
            f"axes {i},{j} regenerate only {len(reached)} of {n} axes"
        )
    sizes = tuple(sorted(len(o) for o in axet.orbits))
    if len(sizes) == 1:
        return AxetShape(kind="X", total=n, k=None, skew=False, orbit_sizes=sizes)
    if len(sizes) == 2:
        s, t = sizes
        if s == t:
            return AxetShape(kind="X", total=n, k=None, skew=False, orbit_sizes=sizes)
        if t == 2 * s:
            return AxetShape(kind="X'", total=n, k=s, skew=True, orbit_sizes=sizes)
    raise NotTwoGenerated(f"orbit sizes {sizes} do not match a 2-generated shape")
