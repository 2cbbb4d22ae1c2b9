"""谱、幂等阵与 Hadamard 代数测试"""
import logging

import numpy as np
import pytest

from indubitable.core.config import resolve_tolerance
from indubitable.core.errors import PreconditionError
from indubitable.graph import complement, cycle, hypercube, parse_graph6, petersen
from indubitable.spectral import (
    algebra_closed,
    all_idempotents,
    entry_classes,
    exact_idempotent_check,
    hadamard_dim,
    hadamard_span_oracle,
    simplex_cosines,
    spectral_idempotent,
    spectrum,
    two_valued_decomposition,
)
from indubitable.tests.conftest import random_corpus

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class TestSpectrum:
    """特征值聚类"""

    def test_grid_spectrum(self, grid34):
        spec = spectrum(grid34)
        assert spec.as_table() == [(5, 1), (2, 2), (1, 3), (-2, 6)]
        assert spec.integral
        assert not spec.ambiguous
        logger.info(f"grid(3,4) 谱: {spec.as_table()}")

    def test_crown_spectrum(self, crown4):
        assert spectrum(crown4).as_table() == [(4, 1), (1, 4), (-1, 4), (-4, 1)]

    def test_cycle_irrational(self, c8):
        spec = spectrum(c8)
        assert spec.multiplicities == [1, 2, 2, 2, 1]
        assert spec.values[1] == pytest.approx(np.sqrt(2))
        assert spec[1].exact is None
        assert not spec.integral

    def test_class_lookup(self, petersen_graph):
        spec = spectrum(petersen_graph)
        assert spec.class_index(1.0) == 1
        assert spec.multiplicity_of(-2) == 4
        assert spec.class_index(0.5) is None
        with pytest.raises(PreconditionError):
            spec.require_index(0.5)

    def test_negative_tolerance(self):
        with pytest.raises(PreconditionError):
            resolve_tolerance(-1.0)


class TestIdempotent:
    """谱幂等阵"""

    def test_invariants(self, grid34):
        spec = spectrum(grid34)
        for E in all_idempotents(grid34, spec):
            assert np.allclose(E.matrix @ E.matrix, E.matrix, atol=1e-9)
            assert np.trace(E.matrix) == pytest.approx(E.rank)
        total = sum(E.matrix for E in all_idempotents(grid34, spec))
        assert np.allclose(total, np.eye(12), atol=1e-9)

    def test_exact_check(self, grid34):
        spec = spectrum(grid34)
        E = spectral_idempotent(grid34, 1, spec)
        assert E.exact is True
        assert exact_idempotent_check(grid34, spec, 3) is True

    def test_exact_check_skipped_for_irrational(self, c8):
        spec = spectrum(c8)
        assert exact_idempotent_check(c8, spec, 1) is None
        assert spectral_idempotent(c8, 1, spec).exact is None

    def test_perron_is_j_over_v(self, petersen_graph):
        E = spectral_idempotent(petersen_graph, 0)
        assert np.allclose(E.matrix, np.full((10, 10), 0.1))

    def test_index_out_of_range(self, c6):
        with pytest.raises(PreconditionError, match="越界"):
            spectral_idempotent(c6, 7)


class TestEntryClasses:
    """元素取值类与 Hadamard 维数"""

    def test_petersen_three_classes(self, petersen_graph):
        E = spectral_idempotent(petersen_graph, 1)
        classes = entry_classes(E)
        assert len(classes) == 3
        assert classes.values == pytest.approx((-1 / 6, 1 / 6, 0.5))

    def test_two_valued_cycle(self, c6):
        spec = spectrum(c6)
        E = spectral_idempotent(c6, spec.class_index(-2), spec)
        assert hadamard_dim(E) == 2
        dec = two_valued_decomposition(E, 6)
        assert dec.m == 1
        assert dec.theta0 == pytest.approx(1 / 6)
        assert dec.theta1 == pytest.approx(-1 / 6)
        assert dec.cells() == [[0, 2, 4], [1, 3, 5]]

    def test_not_two_valued(self, petersen_graph):
        E = spectral_idempotent(petersen_graph, 1)
        assert two_valued_decomposition(E) is None

    def test_perron_rejected(self, c6):
        with pytest.raises(PreconditionError, match="EJ"):
            two_valued_decomposition(spectral_idempotent(c6, 0))

    def test_simplex(self, grid34):
        spec = spectrum(grid34)
        E = spectral_idempotent(grid34, spec.class_index(2), spec)
        dec = two_valued_decomposition(E)
        cos = simplex_cosines(E, dec)
        assert cos.shape == (3, 3)
        assert np.allclose(cos[~np.eye(3, dtype=bool)], -0.5)

    @pytest.mark.parametrize(
        "graph",
        [petersen(), cycle(9), hypercube(4), complement(cycle(7))],
        ids=["petersen", "c9", "q4", "c7bar"],
    )
    def test_span_oracle_agrees(self, graph):
        spec = spectrum(graph)
        for idx in range(len(spec)):
            E = spectral_idempotent(graph, idx, spec, exact_check=False)
            dim = hadamard_dim(E)
            assert hadamard_span_oracle([E], dim) == dim

    def test_span_oracle_empty(self):
        assert hadamard_span_oracle([], 3) == 1

    def test_span_oracle_random_corpus(self):
        """100 张随机连通正则图（n ≤ 14）的每个幂等阵"""
        checked = 0
        for line_no, text in enumerate(random_corpus(100), 1):
            g = parse_graph6(text)
            spec = spectrum(g)
            for idx in range(len(spec)):
                E = spectral_idempotent(g, idx, spec, exact_check=False)
                dim = hadamard_dim(E)
                assert hadamard_span_oracle([E], dim) == dim, (line_no, idx, dim)
                checked += 1
        logger.info(f"span oracle 与 hadamard_dim 一致: {checked} 个幂等阵")

    def test_span_oracle_extra_powers(self):
        """max_power 超过不同元素数时秩不再增长"""
        for text in random_corpus(9, seed=500):
            g = parse_graph6(text)
            for E in all_idempotents(g):
                dim = hadamard_dim(E)
                assert hadamard_span_oracle([E], 40) == min(dim, 41)
                assert hadamard_span_oracle([E], dim + 5) == dim

    def test_span_oracle_truncated(self, petersen_graph):
        E = spectral_idempotent(petersen_graph, 1)
        assert hadamard_span_oracle([E], 1) == 2
        assert hadamard_span_oracle([E], 4) == 3


class TestAlgebraClosure:
    def test_srg_basis_closed(self, petersen_graph):
        n = 10
        A = petersen_graph.adj
        assert algebra_closed([np.eye(n), A, np.ones((n, n)) - np.eye(n) - A]) == (True, True)

    def test_cycle_basis_not_closed(self, c8):
        n = 8
        A = c8.adj
        product, entrywise = algebra_closed([np.eye(n), A, np.ones((n, n)) - np.eye(n) - A])
        assert not product
        assert entrywise
