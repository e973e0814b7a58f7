"""Structure probes: Seress identity, annihilation graph, spine, baric maps."""

import pytest

from axial import (
    QQ,
    baric_map_check,
    hw_periodic_quotient,
    is_slender,
    matsuo,
    non_annihilating_graph,
    norton_sakuma,
    seress_lemma_check,
    spine,
    split_spin_factor,
    sum_decomposition,
)
from axial.catalog import ThreeTranspositionGroup
from axial.errors import Unsupported
from axial.highwater import hw_quotient_weights


class TestSeress:
    def test_holds_on_golden_axes(self):
        alg = norton_sakuma("3A")
        for _, vec in alg.axes:
            chk = seress_lemma_check(alg, vec)
            assert chk.ok and chk.witness is None

    def test_requires_law(self):
        alg = norton_sakuma("3A").with_law(None)
        with pytest.raises(Unsupported):
            seress_lemma_check(alg, alg.axes[0][1])


class TestAnnihilationGraph:
    def test_zero_product_axes_disconnect(self):
        alg = norton_sakuma("2B")
        g = non_annihilating_graph(alg, alg.axis_vectors())
        assert g.components() == ((0,), (1,))

    def test_interacting_axes_connect(self):
        alg = norton_sakuma("4A")
        g = non_annihilating_graph(alg, alg.axis_vectors())
        assert g.components() == ((0, 1, 2, 3),)


class TestSumDecomposition:
    def test_connected_algebra_is_one_block(self):
        alg = norton_sakuma("3A")
        dec = sum_decomposition(alg, alg.axis_vectors())
        assert dec.count == 1
        assert dec.pairwise_zero and dec.direct
        assert dec.subalgebras[0].dim == alg.dim

    def test_split_algebra(self):
        alg = norton_sakuma("2B")
        dec = sum_decomposition(alg, alg.axis_vectors())
        assert dec.count == 2
        assert [s.dim for s in dec.subalgebras] == [1, 1]
        assert dec.pairwise_zero and dec.direct


class TestSpine:
    def test_generating_axes_make_slender(self):
        alg = norton_sakuma("5A")
        assert spine(alg, alg.axis_vectors()).dim == alg.dim
        assert is_slender(alg, alg.axis_vectors())

    def test_non_generating_axes_detected(self):
        ss = split_spin_factor([[1, 0], [0, 1]], QQ.parse("-1")).algebra
        sp = spine(ss, ss.axis_vectors())
        assert sp.dim == 3
        assert not is_slender(ss, ss.axis_vectors())
        # the spine is multiplication-closed, hence a subalgebra here
        assert ss.subalgebra_gen(sp.basis).dim == sp.dim


class TestBaric:
    def test_quotient_weights(self):
        alg = hw_periodic_quotient(4)
        assert baric_map_check(alg, hw_quotient_weights(alg))

    def test_matsuo_weight_one_map(self):
        # eta = 2 makes the all-ones weight vector multiplicative
        s3 = ThreeTranspositionGroup.symmetric(3)
        assert baric_map_check(matsuo(s3, QQ.parse("2")), (1, 1, 1))
        assert not baric_map_check(matsuo(s3, QQ.parse("1/4")), (1, 1, 1))

    def test_zero_map_rejected(self):
        s3 = ThreeTranspositionGroup.symmetric(3)
        alg = matsuo(s3, QQ.parse("2"))
        assert not baric_map_check(alg, (0, 0, 0))
        assert baric_map_check(alg, (0, 0, 0), require_nonzero=False)
