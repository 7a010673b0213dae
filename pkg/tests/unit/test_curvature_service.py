"""
Unit tests for the curvature service.

This module tests the weight test, the standard corner weights, vertex
censuses and the isoperimetric check for k >= 3.
"""

import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from relpres.core.exceptions import MissingWeight, UnclassifiedFace, WrongShape
from relpres.core.models import VertexCase, random_map
from relpres.fixtures import predefined_diagrams as fx
from relpres.services import curvature_service


@pytest.mark.unit
class TestGaussBonnet:
    """Test the weight test on plain maps."""

    def test_tetrahedron_with_equal_weights(self):
        """Test the tetrahedron with every corner weighing 1/3."""
        surface = fx.tetrahedron()
        weights = {c: Fraction(1, 3) for c in range(surface.corner_count)}
        report = curvature_service.gauss_bonnet_report(surface, weights)
        assert report.euler == 2
        assert set(report.vertex_curvature.values()) == {Fraction(1)}
        assert set(report.face_curvature.values()) == {Fraction(0)}
        assert report.holds

    def test_missing_weight(self):
        surface = fx.tetrahedron()
        with pytest.raises(MissingWeight):
            curvature_service.gauss_bonnet_report(surface, {0: Fraction(1)})

    def test_to_dict(self):
        surface = fx.torus_square()
        report = curvature_service.gauss_bonnet_report(surface, {c: Fraction(1, 2) for c in range(4)})
        data = report.to_dict()
        assert data["euler"] == 0
        assert data["total"] == "0"
        assert data["holds"] is True

    @pytest.mark.property
    @given(
        st.lists(st.integers(1, 6), min_size=1, max_size=5),
        st.integers(0, 2 ** 16),
        st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=7), min_size=30, max_size=30),
    )
    def test_total_is_twice_euler(self, degrees, seed, values):
        """Test that any weighting of any map sums to 2 * chi."""
        if sum(degrees) % 2:
            degrees = degrees + [1]
        surface = random_map(degrees, seed)
        weights = {c: values[c % len(values)] for c in range(surface.corner_count)}
        report = curvature_service.gauss_bonnet_report(surface, weights)
        assert report.total == 2 * surface.euler_characteristic()


@pytest.mark.unit
class TestStandardWeights:
    """Test the standard corner weights."""

    def test_pillow_weights(self, pillow):
        """Test that only the stop corners of the large face weigh 0."""
        weights = curvature_service.standard_weights(pillow)
        assert [weights[d] for d in range(6)] == [1, 1, 0, 1, 1, 0]
        assert all(weights[d] == 1 for d in range(6, 12))

    def test_pillow_curvatures(self, pillow):
        weights = curvature_service.standard_weights(pillow)
        report = curvature_service.gauss_bonnet_report(pillow.surface, weights)
        stop_vertices = {pillow.surface.vertex_of(2), pillow.surface.vertex_of(5)}
        for v, k in report.vertex_curvature.items():
            assert k == (1 if v in stop_vertices else 0)
        assert report.face_curvature == {0: 0, 1: 2}
        assert report.holds

    def test_mirror_pillow_stop_vertices(self, mirror_pillow):
        """Test that the vertices of two stop corners carry K = 2."""
        weights = curvature_service.standard_weights(mirror_pillow)
        report = curvature_service.gauss_bonnet_report(mirror_pillow.surface, weights)
        surface = mirror_pillow.surface
        stop_vertices = {surface.vertex_of(2), surface.vertex_of(5)}
        for v, k in report.vertex_curvature.items():
            assert k == (2 if v in stop_vertices else 0)

    def test_nonspecial_digons_weigh_zero(self, two_digon_sphere):
        assert curvature_service.special_digons(two_digon_sphere) == {}
        weights = curvature_service.standard_weights(two_digon_sphere)
        assert set(weights.values()) == {Fraction(0)}

    def test_illegal_face(self):
        with pytest.raises(UnclassifiedFace):
            curvature_service.standard_weights(fx.torus_diagram())

    def test_rho_neighbours(self, two_digon_sphere):
        surface = two_digon_sphere.surface
        before, after = curvature_service.rho_neighbours(surface, 0)
        assert {before, after} == {3}

    @pytest.mark.parametrize("kind,k,expected", [
        ("exterior", 2, 2), ("large_pos", 3, -1), ("large_neg", 2, 0), ("digon", 5, 0),
    ])
    def test_expected_face_curvature(self, kind, k, expected):
        from relpres.core.models import FaceKind
        assert curvature_service.expected_face_curvature(FaceKind(kind), k) == expected


@pytest.mark.unit
class TestCensus:
    """Test per-vertex corner censuses."""

    def test_case_b_source(self, case_b_disk):
        """Test the interior source of the case-b disk."""
        weights = curvature_service.standard_weights(case_b_disk)
        census = curvature_service.vertex_census(case_b_disk, weights, 0)
        assert (census.n, census.l, census.p, census.x) == (0, 2, 0, 0)
        assert census.curvature == 0
        assert census.source_or_sink
        assert census.zero_case() == VertexCase.B

    def test_two_digon_census(self, two_digon_sphere):
        weights = curvature_service.standard_weights(two_digon_sphere)
        census = curvature_service.vertex_census(two_digon_sphere, weights, 0)
        assert census.curvature == 2
        assert census.zero_case() is None

    def test_curvature_report(self, case_b_disk):
        report = curvature_service.curvature_report(case_b_disk)
        assert report.ok
        assert report.values["census"]["0"] == {"n": 0, "l": 2, "p": 0, "x": 0, "K": 0}
        assert report.values["holds"] is True

    def test_pillow_report(self, pillow):
        report = curvature_service.curvature_report(pillow)
        assert report.ok
        assert report.values["faceCurvature"] == {"0": "0", "1": "2"}


@pytest.mark.unit
class TestInteriorAudit:
    """Test the interior curvature audit."""

    def test_pillow_has_no_interior_vertices(self, pillow):
        report = curvature_service.interior_curvature_audit(pillow)
        assert report.ok
        assert report.values["census"] == {}

    def test_mirror_pillow(self, mirror_pillow):
        """Test positive curvature and adjacent stops at the c vertices."""
        codes = curvature_service.interior_curvature_audit(mirror_pillow).codes()
        assert sorted(codes) == ["AdjacentStopCorners"] * 2 + ["PositiveInteriorCurvature"] * 2

    def test_two_digons(self, two_digon_sphere):
        report = curvature_service.interior_curvature_audit(two_digon_sphere)
        assert report.codes() == ["PositiveInteriorCurvature"] * 2
        assert "source or sink" in report.findings[0].message

    def test_case_b_disk(self, case_b_disk):
        report = curvature_service.interior_curvature_audit(case_b_disk)
        assert report.ok
        assert list(report.values["census"]) == ["0"]


@pytest.mark.unit
class TestIsoperimetric:
    """Test the k >= 3 isoperimetric check."""

    def test_pillow_k3(self, pillow_k3):
        report = curvature_service.isoperimetric_check_k3(pillow_k3)
        assert report.ok
        assert report.values["perimeter"] == 9
        assert report.values["largeFaces"] == 1
        assert report.values["lhs"] == 19
        assert report.values["rhs"] == 4

    def test_rejects_k2(self, pillow):
        with pytest.raises(WrongShape):
            curvature_service.isoperimetric_check_k3(pillow)

    def test_exterior_shape(self, pillow, mirror_pillow):
        assert curvature_service.exterior_shape(pillow) == (6, 1)
        with pytest.raises(WrongShape):
            curvature_service.exterior_shape(mirror_pillow)

    def test_values_can_fail(self):
        """Test that many large faces on a short boundary fail the inequality."""
        values = curvature_service.isoperimetric_k3_values(perimeter=3, large_faces=10, k=3)
        assert values["lhs"] == -2
        assert values["holds"] is False
