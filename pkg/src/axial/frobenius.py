"""Frobenius forms: associativity solver, canonical normalization, radicals,
eigenspace orthogonality and projection graphs."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .algebra import Algebra, form_value
from .axes import Axet, AxisReport, eigen_decomposition
from .errors import ConsistencyFailure, NotPrimitive, NotSemisimple, Unsupported
from .fusion import FusionLaw
from .linalg import (
    EchelonAccumulator,
    Matrix,
    Subspace,
    invert,
    kernel,
    solve_linear,
)


def _flat_index(n: int, m: int, l: int) -> int:
    return m * n + l


def frobenius_solution_space(alg: Algebra) -> Subspace:
    """All bilinear forms with (u, vw) = (uv, w), as flat n^2 vectors.

    Only associativity is imposed; symmetry of the solutions is a theorem,
    not a constraint, and is checked downstream.
    """
    n = alg.dim
    acc = EchelonAccumulator(alg.field, n * n)
    zero = alg.field.zero()
    for i in range(n):
        for j in range(n):
            for l in range(n):
                row = [zero] * (n * n)
                right = alg.basis_product(j, l)
                if right is not None:
                    for m, c in enumerate(right):
                        if c:
                            row[_flat_index(n, i, m)] = row[_flat_index(n, i, m)] + c
                left = alg.basis_product(i, j)
                if left is not None:
                    for m, c in enumerate(left):
                        if c:
                            idx = _flat_index(n, m, l)
                            row[idx] = row[idx] - c
                if any(row):
                    acc.add_row(row)
    return acc.kernel()


def _gram_from_flat(alg: Algebra, flat) -> Matrix:
    n = alg.dim
    return Matrix(alg.field, [list(flat[m * n : (m + 1) * n]) for m in range(n)])


@dataclass(frozen=True)
class FrobeniusSolution:
    space: Subspace
    canonical: Optional[Matrix]
    ambiguous: bool
    axis_norms: Optional[Tuple]

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def has_form(self) -> bool:
        return self.space.dim > 0

    def basis_forms(self, alg: Algebra) -> Tuple[Matrix, ...]:
        return tuple(_gram_from_flat(alg, b) for b in self.space.basis)


def solve_frobenius(alg: Algebra) -> FrobeniusSolution:
    """Solution space plus a canonical pick normalized on the designated axes.

    Preference order: the unique form with every designated axis of norm 1;
    else a deterministic one normalized on the first axis (ambiguous flag set);
    else no canonical form.
    """
    space = frobenius_solution_space(alg)
    d = space.dim
    if d == 0:
        return FrobeniusSolution(space=space, canonical=None, ambiguous=False, axis_norms=None)
    grams = [_gram_from_flat(alg, b) for b in space.basis]
    axes = alg.axis_vectors()
    if not axes:
        return FrobeniusSolution(
            space=space, canonical=grams[0], ambiguous=d > 1, axis_norms=()
        )
    one = alg.field.one()
    norm_rows = [[form_value(g, a, a) for g in grams] for a in axes]
    coeffs = Matrix(alg.field, norm_rows)
    rhs = tuple(one for _ in axes)
    y, free = solve_linear(coeffs, rhs)
    ambiguous = False
    if y is None or free.dim > 0:
        ambiguous = True
        first = Matrix(alg.field, [norm_rows[0]])
        y, _ = solve_linear(first, (one,))
        if y is None:
            return FrobeniusSolution(space=space, canonical=None, ambiguous=True, axis_norms=None)
    combined = [alg.field.zero()] * (alg.dim * alg.dim)
    for coef, vec in zip(y, space.basis):
        if not coef:
            continue
        for t, val in enumerate(vec):
            if val:
                combined[t] = combined[t] + coef * val
    gram = _gram_from_flat(alg, combined)
    norms = tuple(form_value(gram, a, a) for a in axes)
    return FrobeniusSolution(space=space, canonical=gram, ambiguous=ambiguous, axis_norms=norms)


def is_symmetric_form(form: Matrix) -> bool:
    return form == form.transpose()


def form_radical(alg: Algebra, form: Matrix) -> Subspace:
    """Null space of the Gram matrix."""
    if form.nrows != alg.dim or form.ncols != alg.dim:
        raise Unsupported("Gram matrix size does not match the algebra")
    return kernel(form)


def radical(alg: Algebra, solution: Optional[FrobeniusSolution] = None) -> Subspace:
    """Radical relative to the designated axes, computed as the form radical.

    Valid only when a canonical Frobenius form exists and every designated
    axis has nonzero norm; outside that regime the maximal-ideal definition
    is not computed by other means.
    """
    if not alg.axes:
        raise Unsupported("radical needs designated axes")
    if solution is None:
        solution = solve_frobenius(alg)
    if solution.canonical is None:
        raise Unsupported("no canonical Frobenius form to take the radical of")
    if solution.axis_norms is None or any(not nrm for nrm in solution.axis_norms):
        raise Unsupported("a designated axis has zero norm; radical theorem does not apply")
    rad = form_radical(alg, solution.canonical)
    if not alg.is_ideal(rad):
        raise ConsistencyFailure("form radical failed the ideal closure check")
    return rad


def eigenspace_orthogonality_violations(
    alg: Algebra, form: Matrix, a, law: FusionLaw
) -> List[Tuple]:
    """Basis pairs from distinct eigenspaces of ad_a that are not orthogonal."""
    _, spaces = eigen_decomposition(alg, a, law)
    bad = []
    for i in range(law.size):
        for j in range(i + 1, law.size):
            for u in spaces[i].basis:
                for v in spaces[j].basis:
                    if form_value(form, u, v):
                        bad.append((law.elements[i], law.elements[j], u, v))
    return bad


def projection_functional(alg: Algebra, a, law: Optional[FusionLaw] = None) -> Tuple:
    """Row vector w with phi_a(v) = w . v for all v."""
    law = law if law is not None else alg.law
    if law is None:
        raise Unsupported("projection functional needs a fusion law")
    a = alg.coerce_vector(a)
    dims, spaces = eigen_decomposition(alg, a, law)
    if sum(dims) != alg.dim:
        raise NotSemisimple("adjoint eigenspaces do not span the algebra")
    if dims[law.one_index] != 1:
        raise NotPrimitive("1-eigenspace is not one-dimensional")
    cols: List = []
    offset_one = 0
    for t, s in enumerate(spaces):
        if t == law.one_index:
            offset_one = len(cols)
        cols.extend(list(b) for b in s.basis)
    basis_mat = Matrix.from_columns(alg.field, cols)
    inv = invert(basis_mat)
    b1 = spaces[law.one_index].basis[0]
    k = next(i for i, ai in enumerate(a) if ai)
    scale = b1[k] / a[k]
    return tuple(scale * x for x in inv.data[offset_one])


@dataclass(frozen=True)
class ProjectionGraph:
    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]  # (a, b) means phi_a(b) != 0

    def has_edge(self, a: int, b: int) -> bool:
        return (a, b) in set(self.edges)

    @property
    def is_symmetric(self) -> bool:
        es = set(self.edges)
        return all((b, a) in es for a, b in es)


def projection_graph(alg: Algebra, axet: Axet) -> ProjectionGraph:
    """Directed graph on axes with an edge a -> b when phi_a(b) is nonzero."""
    functionals = [projection_functional(alg, v, axet.law) for v in axet.axes]
    edges = []
    for ia, w in enumerate(functionals):
        for ib, v in enumerate(axet.axes):
            if ia == ib:
                continue
            val = None
            for wc, vc in zip(w, v):
                t = wc * vc
                val = t if val is None else val + t
            if val:
                edges.append((ia, ib))
    return ProjectionGraph(vertices=tuple(range(axet.size)), edges=tuple(edges))


def orbit_projection_graph(alg: Algebra, axet: Axet) -> ProjectionGraph:
    """Projection graph collapsed along Miyamoto orbits."""
    full = projection_graph(alg, axet)
    orbit_of = {}
    for oi, orbit in enumerate(axet.orbits):
        for v in orbit:
            orbit_of[v] = oi
    edges = sorted({(orbit_of[a], orbit_of[b]) for a, b in full.edges})
    return ProjectionGraph(vertices=tuple(range(len(axet.orbits))), edges=tuple(edges))
