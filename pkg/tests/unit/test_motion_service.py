"""
Unit tests for the motion service.

This module tests the standard motion, the motion conditions and the exact
collision enumeration on the fixture diagrams.
"""

import pytest
from fractions import Fraction

from relpres.core.exceptions import IllegalDiagram
from relpres.core.models import CarSchedule, MultipleMotion, Piece
from relpres.fixtures import predefined_diagrams as fx
from relpres.services import motion_service


def _replace_face_cars(motion, face, cars):
    faces = list(motion.cars)
    faces[face] = tuple(cars)
    return MultipleMotion(motion.period, motion.circle_length, tuple(faces))


@pytest.mark.unit
class TestStandardMotion:
    """Test building the standard motion."""

    def test_pillow_motion_shape(self, pillow):
        """Test T, L and the car layout of the pillow."""
        motion = motion_service.standard_motion(pillow)
        assert motion.period == 2
        assert motion.circle_length == 4
        assert motion.car_count(0) == 2
        assert motion.car_count(1) == 1
        assert [car.position(Fraction(0)) for car in motion.cars[0]] == [1, 4]

    def test_cars_close_up(self, pillow):
        motion = motion_service.standard_motion(pillow)
        for car in motion.cars[0]:
            assert car.start == 0
            assert car.end == 4
            assert car.advance() == 6

    def test_digon_cars(self, two_digon_sphere):
        motion = motion_service.standard_motion(two_digon_sphere)
        assert [motion.car_count(f) for f in range(2)] == [1, 1]
        assert motion.cars[0][0].pieces[0].vel == 1

    def test_illegal_face(self):
        with pytest.raises(IllegalDiagram):
            motion_service.standard_motion(fx.torus_diagram())

    def test_to_dict(self, pillow):
        data = motion_service.standard_motion(pillow).to_dict()
        assert data["period"] == "2"
        assert data["circleLength"] == "4"
        assert len(data["faces"]) == 2


@pytest.mark.unit
class TestHelpers:
    """Test corner lookup and dart runs."""

    def test_corner_at(self, pillow):
        surface = pillow.surface
        assert motion_service.corner_at(surface, 0, Fraction(1)) == 0
        assert motion_service.corner_at(surface, 0, Fraction(3)) == 2
        assert motion_service.corner_at(surface, 0, Fraction(0)) == 5

    def test_dart_runs(self, pillow):
        """Test splitting a moving piece into single-dart crossings."""
        piece = Piece(Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2))
        runs = motion_service.dart_runs(pillow.surface, 0, piece)
        assert [run.dart for run in runs] == [0, 1, 2]
        assert runs[0].t1 == Fraction(1, 4)
        assert runs[0].x0 == Fraction(1, 2)
        assert runs[2].t0 == Fraction(3, 4)
        assert runs[2].offset(Fraction(1)) == Fraction(1, 2)

    def test_stopped_piece_has_no_runs(self, pillow):
        piece = Piece(Fraction(0), Fraction(1), Fraction(3), Fraction(0))
        assert motion_service.dart_runs(pillow.surface, 0, piece) == []


@pytest.mark.unit
class TestValidateMotion:
    """Test the motion conditions."""

    def test_standard_motions_are_valid(self, pillow, two_digon_sphere):
        for diag in (pillow, two_digon_sphere):
            report = motion_service.validate_motion(motion_service.standard_motion(diag), diag)
            assert report.findings == []

    def test_missing_face(self, pillow):
        motion = motion_service.standard_motion(pillow)
        short = MultipleMotion(motion.period, motion.circle_length, motion.cars[:1])
        assert motion_service.validate_motion(short, pillow).codes() == ["NoCars"]

    def test_coverage(self, pillow):
        motion = motion_service.standard_motion(pillow)
        car = CarSchedule((Piece(Fraction(0), Fraction(3), Fraction(0), Fraction(2)),))
        bad = _replace_face_cars(motion, 0, [car])
        assert motion_service.validate_motion(bad, pillow).codes() == ["Coverage"]

    def test_stop_off_corner(self, pillow):
        """Test that a car may not wait at a (+-) corner."""
        motion = motion_service.standard_motion(pillow)
        car = CarSchedule((
            Piece(Fraction(0), Fraction(1), Fraction(1), Fraction(0)),
            Piece(Fraction(1), Fraction(4), Fraction(1), Fraction(2)),
        ))
        bad = _replace_face_cars(motion, 0, [car])
        assert motion_service.validate_motion(bad, pillow).codes() == ["StopOffCorner"]

    def test_decreasing(self, pillow):
        motion = motion_service.standard_motion(pillow)
        car = CarSchedule((
            Piece(Fraction(0), Fraction(1), Fraction(2), Fraction(-2)),
            Piece(Fraction(1), Fraction(4), Fraction(0), Fraction(2)),
        ))
        bad = _replace_face_cars(motion, 0, [car])
        assert "Decreasing" in motion_service.validate_motion(bad, pillow).codes()

    def test_shift_condition(self, pillow):
        """Test two cars that are not shifts of each other."""
        motion = motion_service.standard_motion(pillow)
        first = motion.cars[0][0]
        lazy = CarSchedule((
            Piece(Fraction(0), Fraction(3), Fraction(3), Fraction(0)),
            Piece(Fraction(3), Fraction(4), Fraction(3), Fraction(6)),
        ))
        bad = _replace_face_cars(motion, 0, [first, lazy])
        codes = motion_service.validate_motion(bad, pillow).codes()
        assert "ShiftCondition" in codes


@pytest.mark.unit
class TestCollisions:
    """Test the exact collision enumeration."""

    def test_pillow_collisions(self, pillow):
        """Test the three boundary collision points of the pillow."""
        collisions = motion_service.detect_collisions(pillow, motion_service.standard_motion(pillow))
        assert collisions.edge_points == {
            0: [Fraction(2, 9)], 1: [Fraction(16, 21)], 4: [Fraction(19, 21)],
        }
        assert collisions.cc_vertices == {}
        assert collisions.kprime_faces == {0: -1, 1: 0}
        assert collisions.kprime_edge(0) == 1
        assert collisions.kprime_edge(2) == 0
        assert collisions.constant == 2

    def test_two_digon_collisions(self, two_digon_sphere):
        """Test that the source and the sink collide at alternating integer times."""
        collisions = motion_service.detect_collisions(
            two_digon_sphere, motion_service.standard_motion(two_digon_sphere),
        )
        assert collisions.cc_vertices == {
            0: [(Fraction(1), Fraction(1)), (Fraction(3), Fraction(3))],
            1: [(Fraction(0), Fraction(0)), (Fraction(2), Fraction(2))],
        }
        assert collisions.edge_points == {}
        assert collisions.kprime_face_total == 0

    def test_case_b_source_collides(self, case_b_disk):
        collisions = motion_service.detect_collisions(case_b_disk, motion_service.standard_motion(case_b_disk))
        assert collisions.cc_vertices[0] == [(Fraction(1), Fraction(1)), (Fraction(3), Fraction(3))]

    def test_collision_report_to_dict(self, two_digon_sphere):
        collisions = motion_service.detect_collisions(
            two_digon_sphere, motion_service.standard_motion(two_digon_sphere),
        )
        data = collisions.to_dict()
        assert data["ccVertices"]["0"] == [["1", "1"], ["3", "3"]]
        assert data["D"] == 2


@pytest.mark.unit
class TestCollisionAudits:
    """Test the car crash inequality and the collision structure audit."""

    @pytest.mark.parametrize("name", ["pillow", "two-digon-sphere"])
    def test_car_crash_holds(self, name):
        diag = fx.get_diagram(name)
        collisions = motion_service.detect_collisions(diag, motion_service.standard_motion(diag))
        report = motion_service.car_crash_audit(diag, collisions)
        assert report.values == {"lhs": 2, "rhs": 2, "holds": True}
        assert report.ok

    def test_car_crash_failure(self, pillow):
        from relpres.core.models import CollisionReport
        report = motion_service.car_crash_audit(pillow, CollisionReport(kprime_faces={0: -1}))
        assert report.codes() == ["CarCrashFailure"]

    def test_pillow_collision_structure(self, pillow):
        motion = motion_service.standard_motion(pillow)
        collisions = motion_service.detect_collisions(pillow, motion)
        report = motion_service.collision_structure_audit(pillow, motion, collisions)
        assert report.ok
        assert report.values["boundaryBound"] == 2

    def test_boundary_bound(self, pillow):
        """Test that too many points on one boundary edge are flagged."""
        from relpres.core.models import CollisionReport
        motion = motion_service.standard_motion(pillow)
        crowded = CollisionReport(
            edge_points={0: [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]}, constant=2,
        )
        report = motion_service.collision_structure_audit(pillow, motion, crowded)
        assert report.codes() == ["BoundaryBound"]
        assert report.findings[0].location == "edge 0"
