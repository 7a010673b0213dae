"""
Unit tests for the audit service.

This module tests the combined curvature audit, the no-digon check and the
full audit pipeline.
"""

import pytest

from relpres.core.exceptions import WrongShape
from relpres.core.models import Severity
from relpres.fixtures import predefined_diagrams as fx
from relpres.services import audit_service


@pytest.mark.unit
class TestCombinedAudit:
    """Test the combined curvature audit for k = 2."""

    def test_pillow(self, pillow):
        """Test the inequality sides and face terms of the pillow."""
        report = audit_service.combined_audit(pillow)
        assert report.ok
        assert report.findings == []
        values = report.values
        assert (values["D"], values["perimeter"], values["largeFaces"]) == (2, 6, 1)
        assert (values["lhs"], values["rhs"], values["holds"]) == (31, 6, True)
        assert values["kSigma"] == {"0": -1}
        assert values["vertexCases"] == {}

    def test_case_b_disk_warns_about_involutions(self, case_b_disk):
        """Test that a collision at a case-b vertex over Z2 is only a warning."""
        report = audit_service.combined_audit(case_b_disk)
        assert report.ok
        assert report.codes() == ["InvolutionHypothesisGap"]
        assert report.findings[0].severity == Severity.WARNING
        assert report.findings[0].location == "vertex 0"
        assert report.values["vertexCases"] == {"0": "b"}
        assert report.values["lhs"] == 40

    def test_case_b_disk_over_z3_fails(self, case_b_disk_z3):
        report = audit_service.combined_audit(case_b_disk_z3)
        assert not report.ok
        assert "ZeroCurvatureCollision" in report.codes()

    def test_sphere_is_wrong_shape(self, mirror_pillow):
        with pytest.raises(WrongShape):
            audit_service.combined_audit(mirror_pillow)

    @pytest.mark.parametrize("perimeter,large,expected", [(1, 10, -3), (2, 6, 6), (6, 1, 31)])
    def test_inequality_values(self, perimeter, large, expected):
        values = audit_service.combined_inequality_values(perimeter, large, k=2, m=0)
        assert values["lhs"] == expected
        assert values["holds"] is (expected >= 6)


@pytest.mark.unit
class TestNoDigonCheck:
    """Test the curvature bounds for digon-free diagrams."""

    def test_pillow(self, pillow):
        report = audit_service.no_digon_boundary_check(pillow)
        assert report.values["applicable"] is True
        assert report.ok

    def test_digons_not_applicable(self, two_digon_sphere):
        report = audit_service.no_digon_boundary_check(two_digon_sphere)
        assert report.values == {"applicable": False}

    def test_mirror_pillow(self, mirror_pillow):
        report = audit_service.no_digon_boundary_check(mirror_pillow)
        assert report.codes() == ["NoDigonCurvature"] * 2


@pytest.mark.unit
class TestFullAudit:
    """Test the audit pipeline."""

    def test_pillow_passes(self, pillow):
        """Test that every step runs and passes on the pillow."""
        reports = audit_service.full_audit(pillow)
        assert [r.name for r in reports] == [
            "diagram", "reducedness", "curvature", "interiorCurvature", "noDigon",
            "motion", "collisionStructure", "carCrash", "combined",
        ]
        assert all(r.ok for r in reports)
        assert audit_service.summarize(reports)["ok"] is True

    def test_pillow_k3_uses_k3_inequality(self, pillow_k3):
        reports = audit_service.full_audit(pillow_k3)
        assert reports[-1].name == "isoperimetric"
        assert reports[-1].values["lhs"] == 19

    def test_torus_stops_after_validation(self):
        """Test that illegal faces skip the curvature and motion steps."""
        reports = audit_service.full_audit(fx.torus_diagram())
        assert [r.name for r in reports] == ["diagram", "reducedness"]
        codes = reports[0].codes()
        assert {"NotSphere", "IllegalFace", "InteriorVertexNontrivial"} <= set(codes)
        assert audit_service.summarize(reports)["ok"] is False

    def test_sphere_skips_inequality(self, mirror_pillow):
        reports = audit_service.full_audit(mirror_pillow)
        assert reports[-1].name == "inequality"
        assert "skipped" in reports[-1].values

    def test_summarize(self, pillow):
        data = audit_service.summarize(audit_service.full_audit(pillow))
        assert data["combined"]["lhs"] == 31
        assert data["carCrash"]["holds"] is True
