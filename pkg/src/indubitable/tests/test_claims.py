"""verify 子命令的结论检查"""
import logging

import pytest

from indubitable.analysis import CLAIMS, verify_claim
from indubitable.core.errors import PreconditionError
from indubitable.graph import cycle, hypercube, petersen
from indubitable.tests.conftest import family, parallel_classes, random_regular

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

GRID_ROWS = [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11]]


class TestClaims:
    """每条结论在正例上成立"""

    def test_registry(self):
        assert set(CLAIMS) == {
            "roundtrip",
            "two-valued",
            "bipartite",
            "no-zero",
            "constant-diagonal",
            "product-complete",
            "two-partitions",
            "four-eigenvalue",
            "bipartite-four",
            "bipartite-five",
            "drg",
            "three-class",
            "complement",
            "bipartite-mirror",
            "uniqueness",
        }

    @pytest.mark.parametrize("name", ["grid:3,4", "crown:4", "cycle:12", "petersen", "complete_multipartite:2,2,2"])
    def test_roundtrip(self, name):
        result = verify_claim("roundtrip", family(name))
        assert result.holds, result.details

    def test_two_valued(self, crown4, grid34):
        assert verify_claim("two-valued", crown4).holds
        assert verify_claim("two-valued", grid34).details == {"2": True, "1": True}

    def test_bipartite(self, c8):
        result = verify_claim("bipartite", c8)
        assert result.holds
        assert result.details["params"]

    def test_no_zero(self, c8):
        result = verify_claim("no-zero", c8)
        assert result.holds
        assert result.details["entry_classes"] == 3

    def test_no_zero_requires_zero(self):
        with pytest.raises(PreconditionError, match="0 不是特征值"):
            verify_claim("no-zero", hypercube(3))

    @pytest.mark.parametrize("seed", [5, 6])
    def test_constant_diagonal(self, seed, c6):
        assert verify_claim("constant-diagonal", c6).holds
        assert verify_claim("constant-diagonal", random_regular(3, 16, seed)).holds

    def test_product_complete(self):
        result = verify_claim("product-complete", cycle(4))
        assert result.holds
        assert result.details == {"order": 20, "eigenvalue": 1, "multiplicity": 4, "params": [2, 1]}

    def test_two_partitions(self, c6):
        result = verify_claim("two-partitions", cycle(12))
        assert result.holds
        assert [d["ell"] for d in result.details.values()] == [2]
        assert verify_claim("two-partitions", c6).holds

    def test_two_partitions_needs_two(self, petersen_graph):
        with pytest.raises(PreconditionError):
            verify_claim("two-partitions", petersen_graph)

    def test_four_eigenvalue(self, grid34, cuboctahedron):
        assert verify_claim("four-eigenvalue", grid34).holds
        assert not verify_claim("four-eigenvalue", cuboctahedron).holds

    def test_bipartite_four(self, crown4):
        result = verify_claim("bipartite-four", crown4)
        assert result.holds
        assert result.details == {"m": 4, "intersection_array": "(4,3,1; 1,3,4)"}

    def test_bipartite_five(self, double_k222, c8):
        assert verify_claim("bipartite-five", double_k222).holds
        assert not verify_claim("bipartite-five", c8).holds

    def test_drg(self, crown4):
        result = verify_claim("drg", crown4)
        assert result.details["branches"] == ["bipartite", "antipodal_cover"]

    def test_three_class(self, grid34_complement, cuboctahedron):
        assert verify_claim("three-class", grid34_complement, GRID_ROWS).details["full"] is True
        assert verify_claim("three-class", cuboctahedron, parallel_classes(3)).details["full"] is False

    def test_three_class_needs_partition(self, grid34_complement):
        with pytest.raises(PreconditionError, match="--partition"):
            verify_claim("three-class", grid34_complement)

    def test_complement(self, crown4):
        details = verify_claim("complement", crown4).details
        assert details["-1"]["params"] == [1, 1]
        assert details["-4"]["params"] == [4, 1]

    def test_bipartite_mirror(self, c8):
        assert verify_claim("bipartite-mirror", c8).holds

    def test_uniqueness(self, grid34):
        result = verify_claim("uniqueness", grid34, GRID_ROWS)
        assert result.holds
        assert result.details == {"eigenvalue": 2.0, "cells": 3}

    def test_unknown_claim(self):
        with pytest.raises(PreconditionError, match="未知 claim"):
            verify_claim("prop-xo", petersen())

    def test_to_dict(self, c8):
        data = verify_claim("bipartite-mirror", c8).to_dict()
        assert data == {"claim": "bipartite-mirror", "holds": True, "details": {}}
