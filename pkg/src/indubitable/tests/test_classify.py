"""分类：两个满划分、四特征值、二部五特征值、距离正则、三类方案"""
import logging

import numpy as np
import pytest

from indubitable.core.errors import PartitionError, PreconditionError
from indubitable.graph import (
    bipartite_double,
    complement,
    complete_multipartite,
    cycle,
    hypercube,
    permute,
)
from indubitable.schemes import (
    Verdict,
    bipartite_double_multipartite,
    classify_bipartite_five_eigenvalue,
    classify_drg_full_partition,
    classify_four_eigenvalue,
    grid_graph,
    identify_grid,
    three_class_detection,
    two_partition_analysis,
)
from indubitable.spectral import spectrum
from indubitable.tests.conftest import family, parallel_classes

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

IDENTITY_12 = tuple(range(12))


class TestTwoPartitions:
    """两个满划分：交集大小 ℓ，KK′ = ℓJ，块形式"""

    def test_c6(self, c6):
        spec = spectrum(c6)
        report = two_partition_analysis(c6, spec.class_index(-1), spec.class_index(-2), spec)
        assert report.ell == 1
        assert report.block_form_verified
        assert report.entrywise_identity is True
        assert (report.cell_intersection_sizes == 1).all()

    def test_c12(self):
        g = cycle(12)
        spec = spectrum(g)
        report = two_partition_analysis(g, spec.class_index(-1), spec.class_index(-2), spec)
        assert report.ell == 2
        assert report.block_form_verified
        assert report.entrywise_identity is None
        assert report.cell_intersection_sizes.shape == (3, 2)

    def test_grid_identity_ordering(self, grid34):
        spec = spectrum(grid34)
        report = two_partition_analysis(grid34, spec.class_index(1), spec.class_index(2), spec)
        assert report.ell == 1
        assert report.ordering == IDENTITY_12
        assert report.entrywise_identity

    def test_crown(self, crown4):
        spec = spectrum(crown4)
        report = two_partition_analysis(crown4, spec.class_index(-1), spec.class_index(-4), spec)
        assert report.ell == 1
        assert report.ordering == tuple(range(10))

    def test_missing_partition(self, grid34):
        spec = spectrum(grid34)
        assert two_partition_analysis(grid34, spec.class_index(1), spec.class_index(-2), spec) is None
        assert two_partition_analysis(grid34, 1, 1, spec) is None


class TestGridIdentification:
    def test_identity(self, grid34):
        assert identify_grid(grid34, 3, 4) == IDENTITY_12

    def test_shuffled(self, grid34):
        rng = np.random.default_rng(11)
        order = rng.permutation(12).tolist()
        shuffled = permute(grid34, order)
        ordering = identify_grid(shuffled, 3, 4)
        assert ordering is not None
        assert permute(shuffled, ordering) == grid_graph(3, 4)

    def test_wrong_shape(self, grid34, petersen_graph):
        assert identify_grid(grid34, 2, 6) is None
        assert identify_grid(petersen_graph, 2, 5) is None


class TestFourEigenvalue:
    """四个特征值：网格图或其补图"""

    def test_grid(self, grid34):
        c = classify_four_eigenvalue(grid34)
        assert c.verdict == Verdict.GRID
        assert c.ordering == IDENTITY_12
        assert c.witness["grid"] == [3, 4]
        assert c.witness["scheme_valencies"] == [1, 2, 3, 6]
        assert all(c.witness["conditions"].values())
        assert c.verify(grid34)
        logger.info(f"grid(3,4): {c.to_dict()['verdict']}")

    def test_crown_is_grid_complement(self, crown4):
        c = classify_four_eigenvalue(crown4)
        assert c.verdict == Verdict.GRID_COMPLEMENT
        assert c.ordering == tuple(range(10))
        assert c.target == complement(grid_graph(2, 5))

    def test_grid_complement(self, grid34_complement):
        c = classify_four_eigenvalue(grid34_complement)
        assert c.verdict == Verdict.GRID_COMPLEMENT
        assert c.ordering == IDENTITY_12

    def test_shuffled_grid(self, grid34):
        order = [5, 0, 11, 2, 7, 1, 9, 3, 10, 4, 8, 6]
        g = permute(grid34, order)
        c = classify_four_eigenvalue(g)
        assert c.verdict == Verdict.GRID
        assert permute(g, c.ordering) == grid34

    def test_cuboctahedron_unclassified(self, cuboctahedron):
        c = classify_four_eigenvalue(cuboctahedron)
        assert c.verdict == Verdict.UNCLASSIFIED
        assert not any(c.witness["conditions"].values())

    def test_wrong_eigenvalue_count(self, k222, petersen_graph):
        with pytest.raises(PreconditionError, match="4 个特征值"):
            classify_four_eigenvalue(k222)
        with pytest.raises(PreconditionError):
            classify_four_eigenvalue(petersen_graph)


class TestBipartiteFive:
    """二部、五个特征值：完全多部图的二部双图"""

    def test_double_k222(self, double_k222):
        c = classify_bipartite_five_eigenvalue(double_k222)
        assert c.verdict == Verdict.BIPARTITE_DOUBLE_MULTIPARTITE
        assert c.ordering == IDENTITY_12
        assert c.witness["eigenvalue"] == -2
        assert (c.witness["m"], c.witness["ell"], c.witness["k"]) == (2, 2, 4)
        assert c.target == bipartite_double_multipartite(3, 2)

    def test_double_k333(self):
        g = bipartite_double(complete_multipartite([3, 3, 3]))
        c = classify_bipartite_five_eigenvalue(g)
        assert c.verdict == Verdict.BIPARTITE_DOUBLE_MULTIPARTITE
        assert c.witness["eigenvalue"] == -3
        assert (c.witness["m"], c.witness["ell"], c.witness["k"]) == (2, 3, 6)

    def test_shuffled_double(self, double_k222):
        order = [3, 7, 0, 11, 5, 9, 1, 6, 10, 2, 8, 4]
        g = permute(double_k222, order)
        c = classify_bipartite_five_eigenvalue(g)
        assert c.verdict == Verdict.BIPARTITE_DOUBLE_MULTIPARTITE
        assert permute(g, c.ordering) == c.target

    def test_c8_unclassified(self, c8):
        assert classify_bipartite_five_eigenvalue(c8).verdict == Verdict.UNCLASSIFIED

    def test_requires_bipartite(self, petersen_graph):
        with pytest.raises(PreconditionError, match="二部"):
            classify_bipartite_five_eigenvalue(petersen_graph)

    def test_requires_five(self, crown4):
        with pytest.raises(PreconditionError, match="5 个特征值"):
            classify_bipartite_five_eigenvalue(crown4)


class TestDistanceRegular:
    """距离正则图的满划分只有三种情形"""

    def test_crown(self, crown4):
        c = classify_drg_full_partition(crown4)
        assert c.verdict == Verdict.BIPARTITE
        assert c.branches == (Verdict.BIPARTITE, Verdict.ANTIPODAL_COVER)
        assert c.witness["intersection_array"] == "(4,3,1; 1,3,4)"

    def test_cube(self):
        c = classify_drg_full_partition(hypercube(3))
        assert c.branches == (Verdict.BIPARTITE, Verdict.ANTIPODAL_COVER)

    def test_k44(self, k44):
        c = classify_drg_full_partition(k44)
        assert c.branches == (Verdict.BIPARTITE, Verdict.COMPLETE_MULTIPARTITE)

    def test_k222(self, k222):
        c = classify_drg_full_partition(k222)
        assert c.verdict == Verdict.COMPLETE_MULTIPARTITE
        assert c.branches == (Verdict.COMPLETE_MULTIPARTITE,)

    def test_petersen_none(self, petersen_graph):
        assert classify_drg_full_partition(petersen_graph).verdict == Verdict.UNCLASSIFIED

    def test_to_dict(self, crown4):
        data = classify_drg_full_partition(crown4).to_dict()
        assert data["verdict"] == "bipartite"
        assert data["branches"] == ["bipartite", "antipodal_cover"]

    def test_preconditions(self, grid34, c6):
        with pytest.raises(PreconditionError, match="不是距离正则图"):
            classify_drg_full_partition(grid34)
        with pytest.raises(PreconditionError, match="价"):
            classify_drg_full_partition(c6)


class TestThreeClass:
    """参数 (0, b) 的不可疑划分：满 ⇔ 生成 3 类结合方案"""

    def test_grid_complement_rows(self, grid34_complement):
        rows = [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11]]
        assert three_class_detection(grid34_complement, rows) is True

    def test_grid_complement_columns(self, grid34_complement):
        columns = [[0, 4, 8], [1, 5, 9], [2, 6, 10], [3, 7, 11]]
        assert three_class_detection(grid34_complement, columns) is True

    def test_cuboctahedron_not_full(self, cuboctahedron):
        assert three_class_detection(cuboctahedron, parallel_classes(3)) is False

    def test_cells_with_edges(self, grid34):
        with pytest.raises(PartitionError, match="a=3"):
            three_class_detection(grid34, [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11]])

    def test_requires_four(self, k222):
        with pytest.raises(PreconditionError):
            three_class_detection(k222, [[0, 1], [2, 3], [4, 5]])

    def test_not_indubitable(self, grid34_complement):
        with pytest.raises(PartitionError, match="不是不可疑划分"):
            three_class_detection(grid34_complement, [[0, 1], list(range(2, 12))])
