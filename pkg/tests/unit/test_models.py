"""
Unit tests for the domain models.

This module tests groups, words, surface maps, diagrams, motions and reports.
"""

import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from relpres.core.exceptions import (
    CopyIndexOutOfRange,
    FacesNotPartition,
    NoIdentityAtZero,
    NonAssociative,
    OddDartTotal,
    ParseError,
    PreconditionViolated,
    ThetaHasFixedPoint,
    ThetaNotInvolution,
)
from relpres.core.models import (
    CarSchedule,
    CornerType,
    CurvatureReport,
    FaceKind,
    Finding,
    FPWord,
    Group,
    HowieDiagram,
    PhiPresentation,
    Piece,
    Report,
    Severity,
    Stable,
    Syllable,
    TWord,
    VertexCase,
    VertexCensus,
    build_map,
    fp_conjugacy,
    fp_reduce,
    free_reduce,
    random_map,
    sub_membership,
    tword_conjugacy,
    tword_cyclic_reduce,
)
from relpres.fixtures import predefined_diagrams as fx


@pytest.mark.unit
class TestEnums:
    """Test the enum helpers."""

    def test_corner_type_from_signs(self):
        """Test corner types built from traversal directions."""
        assert CornerType.from_signs(True, True) == CornerType.PLUS_PLUS
        assert CornerType.from_signs(False, False) == CornerType.MINUS_MINUS
        assert CornerType.from_signs(True, False) == CornerType.PLUS_MINUS
        assert CornerType.from_signs(False, True) == CornerType.MINUS_PLUS

    def test_stop_corners(self):
        """Test that only (++) and (--) are stop corners."""
        assert CornerType.PLUS_PLUS.is_stop
        assert CornerType.MINUS_MINUS.is_stop
        assert not CornerType.PLUS_MINUS.is_stop
        assert not CornerType.MINUS_PLUS.is_stop

    def test_large_face_kinds(self):
        assert FaceKind.LARGE_POS.is_large
        assert FaceKind.LARGE_NEG.is_large
        assert not FaceKind.DIGON.is_large
        assert not FaceKind.EXTERIOR.is_large


@pytest.mark.unit
class TestGroup:
    """Test the Group model."""

    def test_cyclic_group(self, z3):
        """Test multiplication, inverses and orders in Z3."""
        assert z3.order == 3
        assert z3.mul(1, 2) == 0
        assert z3.inv(1) == 2
        assert z3.power(1, 4) == 1
        assert z3.power(1, -1) == 2
        assert z3.element_order(1) == 3
        assert z3.orders() == {0: 1, 1: 3, 2: 3}

    def test_involutions(self, z2, z3, s3):
        """Test involution detection."""
        assert z2.involutions() == [1]
        assert z2.has_involution()
        assert z3.is_involution_free()
        assert len(s3.involutions()) == 3

    def test_min_nontrivial_order(self, z3, s3):
        assert z3.min_nontrivial_order() == 3
        assert s3.min_nontrivial_order() == 2
        assert Group.cyclic(1).min_nontrivial_order() is None

    def test_symmetric_group_is_nonabelian(self, s3):
        """Test that S3 has noncommuting elements and conjugate transpositions."""
        assert s3.order == 6
        assert any(s3.mul(a, b) != s3.mul(b, a) for a in range(6) for b in range(6))
        a, b = s3.involutions()[:2]
        assert s3.is_conjugate(a, b)

    def test_identity_not_at_zero(self):
        """Test that element 0 must be the identity."""
        with pytest.raises(NoIdentityAtZero):
            Group.from_table([[1, 0], [0, 1]])

    def test_non_associative_table(self):
        """Test that a Latin square with identity 0 but no associativity is rejected."""
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(NonAssociative):
            Group.from_table(table)

    def test_malformed_tables(self):
        """Test empty, ragged and out-of-range tables."""
        with pytest.raises(ParseError):
            Group.from_table([])
        with pytest.raises(ParseError):
            Group.from_table([[0, 1], [1]])
        with pytest.raises(ParseError):
            Group.from_table([[0, 2], [1, 0]])

    def test_to_dict(self, z2):
        assert z2.to_dict() == {"order": 2, "table": [[0, 1], [1, 0]]}


@pytest.mark.unit
class TestFreeProductWords:
    """Test words in free products of copies of G."""

    def test_reduce_merges_and_cancels(self, z3):
        """Test merging equal copies and dropping identities."""
        word = FPWord.of((0, 1), (0, 1), (1, 2), (1, 1), (0, 2))
        assert fp_reduce(word, z3) == FPWord.of((0, 1))
        assert fp_reduce(FPWord.of((0, 1), (0, 2)), z3).is_empty()
        assert fp_reduce(FPWord.of((2, 0)), z3).is_empty()

    def test_reduce_checks_copies(self, z3):
        """Test that undeclared copies are rejected."""
        with pytest.raises(CopyIndexOutOfRange):
            fp_reduce(FPWord.of((2, 1)), z3, copies=2)

    def test_inverse_and_shift(self, z3):
        word = FPWord.of((0, 1), (1, 1))
        assert word.inverse(z3) == FPWord.of((1, 2), (0, 2))
        assert word.shifted(1) == FPWord.of((1, 1), (2, 1))
        assert fp_reduce(word + word.inverse(z3), z3).is_empty()

    def test_sub_membership(self, z3):
        """Test membership in the factor spanned by a range of copies."""
        assert sub_membership(FPWord.of((0, 1), (1, 2)), z3, range(0, 2))
        assert not sub_membership(FPWord.of((0, 1), (2, 2)), z3, range(0, 2))
        assert sub_membership(FPWord(), z3, range(0, 0))

    def test_conjugacy(self, s3):
        """Test conjugacy of rotations and of single syllables."""
        a, b = s3.involutions()[:2]
        assert fp_conjugacy(FPWord.of((0, a)), FPWord.of((0, b)), s3)
        assert not fp_conjugacy(FPWord.of((0, a)), FPWord.of((1, b)), s3)
        u = FPWord.of((0, a), (1, a), (2, b))
        v = FPWord.of((2, b), (0, a), (1, a))
        assert fp_conjugacy(u, v, s3)

    def test_to_dict(self):
        assert FPWord.of((1, 2)).to_dict() == [{"copy": 1, "g": 2}]


@pytest.mark.unit
class TestStableWords:
    """Test words in H * <t>."""

    def test_parse(self, basic_word):
        """Test the compact parse form."""
        assert basic_word.t_count == 3
        assert basic_word.exponent_sum == 1
        assert basic_word.letters[1] == Stable(1)
        assert basic_word.letters[0] == Syllable(0, 1)

    def test_free_reduce(self, z3):
        word = TWord.parse([(0, 1), "t", "T", (0, 2), "t"])
        assert free_reduce(word, z3) == TWord.parse(["t"])

    def test_cyclic_reduce(self, z3):
        """Test that conjugating letters are stripped."""
        word = TWord.parse(["T", (0, 1), "t", "t"])
        form = tword_cyclic_reduce(word, z3)
        assert form.word == TWord.parse([(0, 1), "t"])
        assert form.exponent_sum == 1

    def test_conjugacy_of_rotations(self, z3, basic_word):
        rotated = TWord(basic_word.letters[2:] + basic_word.letters[:2])
        assert tword_conjugacy(basic_word, rotated, z3)
        assert not tword_conjugacy(basic_word, TWord.parse([(0, 1), "t"]), z3)

    def test_to_dict(self):
        """Test that copies other than 0 survive serialization."""
        word = TWord.parse([(0, 1), "T", (1, 2)])
        assert word.to_dict() == {"letters": [{"g": 1}, {"t": -1}, {"copy": 1, "g": 2}]}

    @pytest.mark.property
    @given(st.lists(st.one_of(st.sampled_from(["t", "T"]),
                              st.tuples(st.integers(0, 2), st.integers(0, 2))), max_size=20))
    def test_word_times_inverse_is_trivial(self, letters):
        """Test that w w^-1 freely reduces to the empty word."""
        group = Group.cyclic(3)
        word = TWord.parse(letters)
        assert free_reduce(word + word.inverse(group), group).is_empty()


@pytest.mark.unit
class TestPresentation:
    """Test the PhiPresentation model."""

    def test_basic_period(self, basic_presentation):
        """Test the relator period of c t b_0 t^-1 a_0 t."""
        g = FPWord.of((0, 1))
        assert basic_presentation.period_pairs() == [(1, g), (-1, g), (1, g)]
        assert basic_presentation.relator_period() == TWord.parse([(0, 1), "t", (0, 1), "T", (0, 1), "t"])
        assert len(basic_presentation.relator_pairs(1)) == 6

    def test_negative_relator_pairs(self, basic_presentation):
        """Test that R^-k reads the inverse signs in reverse."""
        signs = [sign for sign, _ in basic_presentation.relator_pairs(-1)]
        assert signs == [-1, 1, -1, -1, 1, -1]

    def test_phi_and_subgroups(self, digon_presentation):
        p = digon_presentation
        assert p.copies == 2
        assert p.in_p(FPWord.of((0, 1)))
        assert not p.in_p(FPWord.of((1, 1)))
        assert p.in_p_phi(FPWord.of((1, 1)))
        assert p.phi(FPWord.of((0, 2))) == FPWord.of((1, 2))

    def test_invalid_shapes(self, z3):
        """Test that k < 2 and mismatched blocks are rejected."""
        g = FPWord.of((0, 1))
        with pytest.raises(PreconditionViolated):
            PhiPresentation(base=z3, s=0, m=0, k=1, c=g, a=(g,), b=(g,))
        with pytest.raises(PreconditionViolated):
            PhiPresentation(base=z3, s=0, m=1, k=2, c=g, a=(g,), b=(g,))
        with pytest.raises(CopyIndexOutOfRange):
            PhiPresentation(base=z3, s=0, m=0, k=2, c=FPWord.of((1, 1)), a=(g,), b=(g,))


@pytest.mark.unit
class TestSurfaceMap:
    """Test the SurfaceMap model."""

    def test_tetrahedron(self):
        """Test the counts of a tetrahedron."""
        surface = fx.tetrahedron()
        assert (surface.vertex_count, surface.edge_count, surface.face_count) == (4, 6, 4)
        assert surface.euler_characteristic() == 2
        assert surface.is_sphere()

    def test_torus(self):
        surface = fx.torus_square()
        assert (surface.vertex_count, surface.edge_count, surface.face_count) == (1, 2, 1)
        assert surface.euler_characteristic() == 0
        assert not surface.is_sphere()

    def test_two_digon_vertices(self):
        """Test the rotation orbits of two glued digons."""
        surface = build_map(4, [2, 3, 0, 1], [[0, 1], [2, 3]])
        assert surface.vertices() == [(0, 3), (1, 2)]
        assert surface.edges() == [(0, 2), (1, 3)]
        assert surface.rho(0) == 3

    def test_theta_validation(self):
        """Test theta checks."""
        with pytest.raises(ThetaHasFixedPoint):
            build_map(2, [0, 1], [[0, 1]])
        with pytest.raises(ThetaNotInvolution):
            build_map(4, [1, 2, 3, 0], [[0, 1, 2, 3]])
        with pytest.raises(ThetaNotInvolution):
            build_map(2, [1], [[0, 1]])

    def test_faces_validation(self):
        with pytest.raises(FacesNotPartition):
            build_map(2, [1, 0], [[0]])
        with pytest.raises(FacesNotPartition):
            build_map(2, [1, 0], [[0, 1], [1]])

    def test_random_map_rejects_odd_total(self):
        with pytest.raises(OddDartTotal):
            random_map([3], seed=1)

    @pytest.mark.property
    @given(st.lists(st.integers(1, 6), min_size=1, max_size=5), st.integers(0, 2 ** 16))
    def test_random_map_counts(self, degrees, seed):
        """Test that every random pairing gives a valid map with E = darts / 2."""
        if sum(degrees) % 2:
            degrees = degrees + [1]
        surface = random_map(degrees, seed)
        assert surface.edge_count == sum(degrees) // 2
        assert sum(len(v) for v in surface.vertices()) == surface.corner_count
        assert surface.euler_characteristic() <= 2 * surface.components()


@pytest.mark.unit
class TestHowieDiagram:
    """Test the HowieDiagram model."""

    def test_pillow_shape(self, pillow):
        """Test the sphere made of one large face and the exterior face."""
        surface = pillow.surface
        assert (surface.vertex_count, surface.edge_count, surface.face_count) == (6, 6, 2)
        assert pillow.exterior_faces == frozenset({1})

    def test_signs(self, pillow):
        """Test that the large face reads the relator signs."""
        assert [pillow.sign(d) for d in range(6)] == [1, -1, 1, 1, -1, 1]
        assert all(pillow.sign(d) == -pillow.sign(pillow.surface.theta[d]) for d in range(12))

    def test_bad_edge_forward(self, pillow):
        """Test that a forward dart must belong to its edge."""
        with pytest.raises(ParseError):
            HowieDiagram(
                surface=pillow.surface,
                edge_forward=(5,) * 6,
                corner_labels=pillow.corner_labels,
                exterior_faces=frozenset(),
                exterior_vertices=frozenset(),
                presentation=pillow.presentation,
            )

    def test_label_rows_must_match(self, pillow):
        with pytest.raises(ParseError):
            HowieDiagram.from_face_labels(
                pillow.surface, pillow.edge_forward, [[FPWord()]], pillow.presentation,
            )

    def test_unknown_exterior_face(self, pillow):
        with pytest.raises(ParseError):
            HowieDiagram.from_face_labels(
                pillow.surface, pillow.edge_forward, pillow.face_labels_rows(),
                pillow.presentation, exterior_faces=[7],
            )

    def test_to_dict(self, two_digon_sphere):
        data = two_digon_sphere.to_dict()
        assert data["darts"] == 4
        assert data["edgeForward"] == [2, 1]
        assert data["cornerLabels"][0] == [[{"copy": 0, "g": 1}], [{"copy": 1, "g": 2}]]
        assert data["exteriorFaces"] == []


@pytest.mark.unit
class TestMotionModels:
    """Test pieces and car schedules."""

    def test_piece_position(self):
        piece = Piece(Fraction(0), Fraction(2), Fraction(1), Fraction(1, 2))
        assert piece.pos1 == 2
        assert piece.position(Fraction(1)) == Fraction(3, 2)

    def test_schedule(self):
        """Test lookup and advance of a two-piece schedule."""
        car = CarSchedule((
            Piece(Fraction(0), Fraction(1), Fraction(0), Fraction(1)),
            Piece(Fraction(1), Fraction(2), Fraction(1), Fraction(0)),
        ))
        assert car.start == 0
        assert car.end == 2
        assert car.position(Fraction(3, 2)) == 1
        assert car.advance() == 1


@pytest.mark.unit
class TestReports:
    """Test report and curvature models."""

    def test_report_ok_ignores_warnings(self):
        """Test that warnings do not fail a report."""
        report = Report("step")
        report.add(Finding.warning("Something", "just a note"))
        assert report.ok
        report.add(Finding.error("Broken", "bad", "face 1"))
        assert not report.ok
        assert report.codes() == ["Something", "Broken"]
        data = report.to_dict()
        assert data["ok"] is False
        assert data["findings"][1] == {"code": "Broken", "severity": "error", "message": "bad", "location": "face 1"}

    def test_finding_str(self):
        assert str(Finding.error("X", "msg", "edge 2")) == "X (edge 2): msg"
        assert Finding.error("X", "msg").severity == Severity.ERROR

    def test_curvature_report(self):
        report = CurvatureReport({0: Fraction(1), 1: Fraction(1)}, {0: Fraction(2)}, euler=2)
        assert report.total == 4
        assert report.holds
        assert report.to_dict()["total"] == "4"

    def test_vertex_census_cases(self):
        """Test the zero-curvature case table."""
        assert VertexCensus(0, 1, 1, 0).zero_case() == VertexCase.A
        assert VertexCensus(0, 2, 0, 0, True).zero_case() == VertexCase.B
        assert VertexCensus(1, 3, 0, 0).zero_case() == VertexCase.C
        assert VertexCensus(2, 4, 0, 0).zero_case() == VertexCase.D
        assert VertexCensus(0, 1, 0, 1).zero_case() is None
        assert VertexCensus(0, 0, 0, 0).curvature == 2
        assert VertexCensus(0, 0, 0, 0).to_dict() == {"n": 0, "l": 0, "p": 0, "x": 0, "K": 2}
