"""Structure analyses: Seress lemma checks, non-annihilating graphs, sum
decompositions, spines and baric maps."""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple, Union

from .algebra import Algebra
from .axes import Axet, eigenspace
from .errors import Unsupported
from .fusion import FusionLaw, is_seress
from .linalg import Subspace, is_zero_vec


def _axis_list(alg: Algebra, axes: Union[Axet, Iterable]) -> Tuple[Tuple, ...]:
    if isinstance(axes, Axet):
        return axes.axes
    return tuple(alg.coerce_vector(v) for v in axes)


@dataclass(frozen=True)
class SeressCheck:
    ok: bool
    witness: Optional[Tuple] = None  # (x, y) with a(xy) != (ax)y


def seress_lemma_check(alg: Algebra, a, law: Optional[FusionLaw] = None) -> SeressCheck:
    """a(xy) = (ax)y for all x and all y in A_1(a) + A_0(a)."""
    law = law if law is not None else alg.law
    if law is None or not is_seress(law):
        raise Unsupported("Seress lemma needs a Seress fusion law")
    a = alg.coerce_vector(a)
    one_zero: List[Tuple] = []
    one_zero.extend(eigenspace(alg, a, law.field.one()).basis)
    one_zero.extend(eigenspace(alg, a, law.field.zero()).basis)
    for y in one_zero:
        for i in range(alg.dim):
            x = alg.basis_vector(i)
            lhs = alg.mul(a, alg.mul(x, y))
            rhs = alg.mul(alg.mul(a, x), y)
            if lhs != rhs:
                return SeressCheck(ok=False, witness=(x, y))
    return SeressCheck(ok=True)


@dataclass(frozen=True)
class UndirectedGraph:
    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]  # sorted pairs, no loops

    def components(self) -> Tuple[Tuple[int, ...], ...]:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        buckets = {}
        for v in self.vertices:
            buckets.setdefault(find(v), []).append(v)
        comps = [tuple(sorted(vs)) for vs in buckets.values()]
        return tuple(sorted(comps, key=lambda c: c[0]))


def non_annihilating_graph(alg: Algebra, axes: Union[Axet, Iterable]) -> UndirectedGraph:
    """Edge between distinct axes a, b whenever ab != 0."""
    vecs = _axis_list(alg, axes)
    edges = []
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if not is_zero_vec(alg.mul(vecs[i], vecs[j])):
                edges.append((i, j))
    return UndirectedGraph(vertices=tuple(range(len(vecs))), edges=tuple(edges))


@dataclass(frozen=True)
class SumDecomposition:
    components: Tuple[Tuple[int, ...], ...]
    subalgebras: Tuple[Subspace, ...]
    pairwise_zero: bool
    direct: bool

    @property
    def count(self) -> int:
        return len(self.components)


def sum_decomposition(alg: Algebra, axes: Union[Axet, Iterable]) -> SumDecomposition:
    """Subalgebras generated by the non-annihilating components, with the
    pairwise-product and directness verdicts reported, not assumed."""
    vecs = _axis_list(alg, axes)
    comps = non_annihilating_graph(alg, vecs).components()
    subs = tuple(alg.subalgebra_gen([vecs[i] for i in comp]) for comp in comps)
    pairwise_zero = True
    for i in range(len(subs)):
        for j in range(i + 1, len(subs)):
            for u in subs[i].basis:
                for v in subs[j].basis:
                    if not is_zero_vec(alg.mul(u, v)):
                        pairwise_zero = False
    total = Subspace.zero(alg.field, alg.dim)
    for s in subs:
        total = total.sum(s)
    direct = total.dim == sum(s.dim for s in subs)
    return SumDecomposition(
        components=comps, subalgebras=subs, pairwise_zero=pairwise_zero, direct=direct
    )


def spine(alg: Algebra, axes: Union[Axet, Iterable]) -> Subspace:
    """Smallest subspace containing the axes with a Q <= Q for each axis a."""
    vecs = _axis_list(alg, axes)
    span = Subspace.from_vectors(alg.field, alg.dim, list(vecs))
    while True:
        fresh = []
        for a in vecs:
            for row in span.basis:
                p = alg.mul(a, row)
                if not span.contains(p):
                    fresh.append(p)
        if not fresh:
            return span
        span = span.sum(Subspace.from_vectors(alg.field, alg.dim, fresh))


def is_slender(alg: Algebra, axes: Union[Axet, Iterable]) -> bool:
    return spine(alg, axes).dim == alg.dim


def baric_map_check(alg: Algebra, weights, require_nonzero: bool = True) -> bool:
    """Is v -> sum_k v_k w_k an algebra homomorphism to the base field?"""
    w = alg.coerce_vector(weights)
    if require_nonzero and not any(w):
        return False

    def lam(v):
        total = alg.field.zero()
        for vk, wk in zip(v, w):
            if vk and wk:
                total = total + vk * wk
        return total

    for i in range(alg.dim):
        for j in range(i, alg.dim):
            p = alg.basis_product(i, j)
            lhs = lam(p) if p is not None else alg.field.zero()
            if lhs != w[i] * w[j]:
                return False
    return True
