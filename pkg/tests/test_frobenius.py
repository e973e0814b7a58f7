"""Frobenius form solver, radicals and projection machinery."""

import pytest

from axial import (
    NORTON_SAKUMA_NAMES,
    QQ,
    Algebra,
    close_axes,
    form_radical,
    form_value,
    frobenius_solution_space,
    matsuo,
    norton_sakuma,
    projection_graph,
    radical,
    solve_frobenius,
    split_spin_factor,
)
from axial.catalog import ThreeTranspositionGroup
from axial.errors import Unsupported
from axial.frobenius import (
    eigenspace_orthogonality_violations,
    is_symmetric_form,
    projection_functional,
)
from axial.linalg import Matrix, vadd


def zero_product_pair():
    # two orthogonal idempotents; a + b is an axis of zero norm under the
    # canonical fallback, which must block the radical shortcut
    return Algebra(
        QQ,
        ("a", "b"),
        {(0, 0): (1, 0), (1, 1): (0, 1)},
        axes=[("a", (1, 0)), ("b", (0, 1)), ("ab", (1, 1))],
    )


class TestSolutionSpace:
    def test_dims_on_golden_algebras(self):
        for name in NORTON_SAKUMA_NAMES:
            alg = norton_sakuma(name)
            space = frobenius_solution_space(alg)
            assert space.dim == (2 if name == "2B" else 1), name

    def test_associativity_of_solutions(self):
        alg = norton_sakuma("4A")
        sol = solve_frobenius(alg)
        gram = sol.canonical
        for i in range(alg.dim):
            for j in range(alg.dim):
                for k in range(alg.dim):
                    u = alg.basis_vector(i)
                    v = alg.basis_vector(j)
                    w = alg.basis_vector(k)
                    assert form_value(gram, alg.mul(u, v), w) == form_value(
                        gram, u, alg.mul(v, w)
                    )

    def test_basis_forms_symmetric(self):
        alg = norton_sakuma("5A")
        sol = solve_frobenius(alg)
        forms = sol.basis_forms(alg)
        assert len(forms) == sol.dim
        for f in forms:
            assert is_symmetric_form(f)


class TestNormalisation:
    def test_axis_norms_one(self):
        alg = matsuo(ThreeTranspositionGroup.symmetric(3), QQ.parse("1/4"))
        sol = solve_frobenius(alg)
        assert not sol.ambiguous
        assert all(n == QQ.one() for n in sol.axis_norms)

    def test_inconsistent_norms_fall_back(self):
        alg = zero_product_pair()
        sol = solve_frobenius(alg)
        # (a+b, a+b) = 2 whenever both diagonal entries are 1, so the
        # all-axes system is unsolvable and only the first axis is pinned
        assert sol.ambiguous
        assert sol.canonical is not None
        assert sol.axis_norms == (QQ.one(), QQ.zero(), QQ.one())

    def test_unnormalisable_line(self):
        ss = split_spin_factor([[1, 0], [0, 1]], QQ.parse("-1")).algebra
        sol = solve_frobenius(ss)
        assert sol.dim == 1
        assert sol.canonical is None and sol.ambiguous


class TestRadical:
    def test_nondegenerate_radical_trivial(self):
        for name in ("2A", "3C", "6A"):
            alg = norton_sakuma(name)
            assert radical(alg, solve_frobenius(alg)).dim == 0

    def test_degenerate_matsuo(self):
        alg = matsuo(ThreeTranspositionGroup.symmetric(3), QQ.parse("-1"))
        rad = radical(alg, solve_frobenius(alg))
        assert rad.dim == 1
        assert rad.contains(
            vadd(vadd(alg.basis_vector(0), alg.basis_vector(1)), alg.basis_vector(2))
        )

    def test_zero_axis_norm_unsupported(self):
        alg = zero_product_pair()
        with pytest.raises(Unsupported):
            radical(alg, solve_frobenius(alg))

    def test_needs_axes(self):
        alg = zero_product_pair().with_axes([])
        with pytest.raises(Unsupported):
            radical(alg, solve_frobenius(alg))

    def test_needs_canonical_form(self):
        ss = split_spin_factor([[1, 0], [0, 1]], QQ.parse("-1")).algebra
        with pytest.raises(Unsupported):
            radical(ss, solve_frobenius(ss))

    def test_form_radical_of_degenerate_line(self):
        # the unique associative line still has a form radical, and it is
        # exactly the subalgebra the three axes generate
        ss = split_spin_factor([[1, 0], [0, 1]], QQ.parse("-1")).algebra
        form = solve_frobenius(ss).basis_forms(ss)[0]
        rad = form_radical(ss, form)
        assert rad.dim == 3
        assert ss.is_ideal(rad)
        gen = ss.subalgebra_gen(ss.axis_vectors())
        assert gen.dim == 3 and gen.is_subspace_of(rad)


class TestOrthogonality:
    def test_canonical_form_clean(self):
        alg = norton_sakuma("4B")
        sol = solve_frobenius(alg)
        for _, vec in alg.axes:
            assert eigenspace_orthogonality_violations(alg, sol.canonical, vec, alg.law) == []

    def test_identity_form_violates(self):
        alg = norton_sakuma("3A")
        ident = Matrix.identity(QQ, alg.dim)
        viols = eigenspace_orthogonality_violations(alg, ident, alg.axes[0][1], alg.law)
        assert viols
        lam, mu, u, v = viols[0]
        assert lam != mu
        assert form_value(ident, u, v) != QQ.zero()


class TestProjection:
    def test_functional_normalised_on_axis(self):
        alg = norton_sakuma("3A")
        a = alg.axes[0][1]
        phi = projection_functional(alg, a)
        value = sum(c * x for c, x in zip(phi, a))
        assert value == QQ.one()

    def test_functional_reads_form_entries(self):
        # phi_a(v) = (a, v) / (a, a) for the canonical form
        alg = norton_sakuma("3A")
        sol = solve_frobenius(alg)
        a = alg.axes[0][1]
        phi = projection_functional(alg, a)
        for i in range(alg.dim):
            e = alg.basis_vector(i)
            got = sum(c * x for c, x in zip(phi, e))
            want = form_value(sol.canonical, a, e) / form_value(sol.canonical, a, a)
            assert got == want

    def test_graph_symmetric_on_golden(self):
        alg = norton_sakuma("3A")
        axet = close_axes(alg, [alg.axes[0][1], alg.axes[1][1]])
        g = projection_graph(alg, axet)
        assert g.is_symmetric
        assert all((j, i) in g.edges for i, j in g.edges)
