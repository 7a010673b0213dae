"""
Motion service for the relpres toolkit.

This module builds the standard multiple motion of a legal diagram, checks
the conditions of a motion with separated stops, and enumerates complete
collisions exactly over one time circle. All times and positions are
Fractions; nothing is sampled numerically.
"""

import logging
import math
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Set, Tuple

from ..core.exceptions import IllegalDiagram
from ..core.models import (
    CarSchedule,
    CollisionReport,
    FaceKind,
    Finding,
    HowieDiagram,
    MultipleMotion,
    Piece,
    Report,
    SurfaceMap,
)
from ..utils import format_rational, mod_circle
from . import diagram_service

logger = logging.getLogger(__name__)

Interval = Tuple[Fraction, Fraction]

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


class DartRun(NamedTuple):
    """A car crossing (part of) one dart: local offset x0 at time t0, growing at speed vel."""
    dart: int
    t0: Fraction
    t1: Fraction
    x0: Fraction
    vel: Fraction

    def offset(self, t: Fraction) -> Fraction:
        return self.x0 + self.vel * (t - self.t0)


def _pieces(rows: Sequence[Tuple[Fraction, Fraction, Fraction, Fraction]]) -> List[Piece]:
    return [Piece(Fraction(t0), Fraction(t1), Fraction(p), Fraction(v)) for t0, t1, p, v in rows]


def _repeat(template: List[Piece], start: Fraction, periods: int, period: Fraction,
            advance: Fraction) -> CarSchedule:
    """Tile one period of a schedule over ``periods`` periods."""
    pieces = []
    for q in range(periods):
        pieces.extend(piece.shifted(q * period, start + q * advance) for piece in template)
    return CarSchedule(tuple(pieces))


def _large_pos_template(m: int) -> List[Piece]:
    """One period of a car reading R^k, starting at its b_0 corner."""
    if m == 0:
        return _pieces([(0, 1, 0, 1), (1, Fraction(3, 2), 1, 2), (Fraction(3, 2), 2, 2, 2)])
    return _pieces([
        (0, 2 * m + 2, 0, 1),
        (2 * m + 2, 4 * m + 1, 2 * m + 2, 0),
        (4 * m + 1, 4 * m + 2, 2 * m + 2, 1),
    ])


def _large_neg_template(m: int) -> List[Piece]:
    """One period of a car reading R^-k, starting at its (+-) corner before c^-1."""
    if m == 0:
        return _pieces([(0, HALF, 0, 2), (HALF, 1, 1, 2), (1, 2, 2, 1)])
    return _pieces([
        (0, 1, 0, 1),
        (1, 2 * m, 1, 0),
        (2 * m, 4 * m + 2, 1, 1),
    ])


def _exterior_template(perimeter: int, period: Fraction) -> List[Piece]:
    """Run all but the last edge in the first quarter, then the last edge in the remaining time."""
    if perimeter == 1:
        return [Piece(Fraction(0), period, Fraction(0), 1 / period)]
    return [
        Piece(Fraction(0), QUARTER, Fraction(0), Fraction(4 * (perimeter - 1))),
        Piece(QUARTER, period, Fraction(perimeter - 1), 1 / (period - QUARTER)),
    ]


def standard_motion(diag: HowieDiagram) -> MultipleMotion:
    """
    Build the standard multiple motion of a legal diagram.

    Digon cars loop at unit speed and sit at their (+-) corner at even times.
    Each large face carries k cars, one per period of its label, stopping at
    (++) corners (positive faces) or (--) corners (negative faces). The
    exterior car runs the whole boundary but one edge in the first quarter of
    each period.

    Args:
        diag: A diagram whose interior faces all classify

    Returns:
        The motion with T = 4m + 2 and L = kT

    Raises:
        IllegalDiagram: On illegal interior faces or several exterior faces
    """
    if len(diag.exterior_faces) > 1:
        raise IllegalDiagram("the standard motion needs at most one exterior face")
    p = diag.presentation
    m, k = p.m, p.k
    period = Fraction(4 * m + 2)
    length = k * period
    step = Fraction(2 * m + 3)

    cars = []
    for f, darts in enumerate(diag.surface.faces):
        n = len(darts)
        kind, r, _ = diagram_service.match_face(diag, f)
        if kind == FaceKind.ILLEGAL:
            raise IllegalDiagram(f"face {f} is not a relator face")
        if kind == FaceKind.LARGE_POS:
            face_cars = tuple(
                _repeat(_large_pos_template(m), Fraction((r + 1 + j * (2 * m + 3)) % n), k, period, step)
                for j in range(k)
            )
        elif kind == FaceKind.LARGE_NEG:
            face_cars = tuple(
                _repeat(_large_neg_template(m), Fraction((r + 2 * m + 2 + j * (2 * m + 3)) % n), k, period, step)
                for j in range(k)
            )
        elif kind == FaceKind.DIGON:
            face_cars = (CarSchedule((Piece(Fraction(0), length, Fraction((r + 2) % 2), Fraction(1)),)),)
        else:
            face_cars = (_repeat(_exterior_template(n, period), Fraction(0), k, period, Fraction(n)),)
        cars.append(face_cars)
    logger.info("standard motion built: T=%s, L=%s, %d faces", period, length, len(cars))
    return MultipleMotion(period=period, circle_length=length, cars=tuple(cars))


def corner_at(surface: SurfaceMap, face: int, position: Fraction) -> int:
    """Corner id at an integer position of a face."""
    darts = surface.faces[face]
    return darts[(int(position) - 1) % len(darts)]


def dart_runs(surface: SurfaceMap, face: int, piece: Piece) -> List[DartRun]:
    """Split a moving piece into its crossings of single darts."""
    if piece.vel <= 0:
        return []
    darts = surface.faces[face]
    n = len(darts)
    runs = []
    q = math.floor(piece.pos0)
    end = piece.pos1
    while q < end:
        lo, hi = max(piece.pos0, Fraction(q)), min(end, Fraction(q + 1))
        if hi > lo:
            runs.append(DartRun(
                dart=darts[q % n],
                t0=piece.t0 + (lo - piece.pos0) / piece.vel,
                t1=piece.t0 + (hi - piece.pos0) / piece.vel,
                x0=lo - q,
                vel=piece.vel,
            ))
        q += 1
    return runs


def _merge(intervals: List[Interval], length: Fraction) -> List[Interval]:
    """Merge closed intervals on [0, L], identifying L with 0."""
    spans = list(intervals)
    spans.extend((Fraction(0), Fraction(0)) for a, b in intervals if b == length)
    spans = sorted(s for s in spans if s != (length, length))
    merged: List[Interval] = []
    for a, b in spans:
        if merged and a <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], b))
        else:
            merged.append((a, b))
    return merged


def _intersect(left: List[Interval], right: List[Interval]) -> List[Interval]:
    out = []
    for a0, a1 in left:
        for b0, b1 in right:
            lo, hi = max(a0, b0), min(a1, b1)
            if lo <= hi:
                out.append((lo, hi))
    return sorted(out)


def corner_occupancy(diag: HowieDiagram, motion: MultipleMotion) -> Dict[int, List[Interval]]:
    """
    Times at which each corner holds a car.

    Stops contribute intervals, passes contribute instants. Lists are merged
    and live on [0, L) with L identified with 0.
    """
    surface = diag.surface
    length = motion.circle_length
    raw: Dict[int, List[Interval]] = {c: [] for c in range(surface.corner_count)}
    for f, face_cars in enumerate(motion.cars):
        for car in face_cars:
            for piece in car.pieces:
                if piece.vel == 0:
                    if piece.pos0.denominator == 1:
                        raw[corner_at(surface, f, piece.pos0)].append((piece.t0, piece.t1))
                    continue
                q = math.ceil(piece.pos0)
                while q <= piece.pos1:
                    t = piece.t0 + (q - piece.pos0) / piece.vel
                    raw[corner_at(surface, f, Fraction(q))].append((t, t))
                    q += 1
    return {c: _merge(spans, length) for c, spans in raw.items()}


def _structure_findings(diag: HowieDiagram, motion: MultipleMotion) -> List[Finding]:
    surface = diag.surface
    findings: List[Finding] = []
    if len(motion.cars) != surface.face_count:
        return [Finding.error("NoCars", f"motion covers {len(motion.cars)} of {surface.face_count} faces")]
    length = motion.circle_length
    for f, face_cars in enumerate(motion.cars):
        n = len(surface.faces[f])
        if not face_cars:
            findings.append(Finding.error("NoCars", "face has no car", f"face {f}"))
        for j, car in enumerate(face_cars):
            where = f"face {f} car {j}"
            if not car.pieces or car.start != 0 or car.end != length:
                findings.append(Finding.error("Coverage", f"pieces do not span [0, {length}]", where))
                continue
            for i, piece in enumerate(car.pieces):
                if piece.vel < 0:
                    findings.append(Finding.error("Decreasing", f"piece {i} has velocity {piece.vel}", where))
                if piece.t1 < piece.t0:
                    findings.append(Finding.error("Discontinuous", f"piece {i} runs backwards in time", where))
                if i and (piece.t0 != car.pieces[i - 1].t1 or piece.pos0 != car.pieces[i - 1].pos1):
                    findings.append(Finding.error("Discontinuous", f"gap or jump before piece {i}", where))
                if piece.vel == 0 and piece.t1 > piece.t0:
                    if piece.pos0.denominator != 1:
                        findings.append(Finding.error("StopOffCorner", f"piece {i} stops inside a dart", where))
                    elif not diagram_service.corner_type(diag, corner_at(surface, f, piece.pos0)).is_stop:
                        findings.append(Finding.error("StopOffCorner", f"piece {i} stops at a non-stop corner", where))
            if (car.advance()) % n != 0:
                findings.append(Finding.error("Discontinuous", "end position does not close up", where))
    return findings


def _shift_times(left: CarSchedule, right: CarSchedule, period: Fraction, length: Fraction) -> List[Fraction]:
    points = {Fraction(0)}
    points.update(mod_circle(t, length) for t in right.breakpoints())
    points.update(mod_circle(t - period, length) for t in left.breakpoints())
    ordered = sorted(points)
    ordered.append(length)
    samples = set(ordered[:-1])
    samples.update((a + b) / 2 for a, b in zip(ordered, ordered[1:]))
    return sorted(samples)


def validate_motion(motion: MultipleMotion, diag: HowieDiagram) -> Report:
    """
    Check the four conditions of a multiple motion with separated stops.

    Args:
        motion: The motion
        diag: The diagram the cars run on; stop corners are its (++) and (--) corners

    Returns:
        Report with structural findings, SeparatedStops, ShiftCondition and
        ArcPartition findings
    """
    report = Report("motion")
    report.extend(_structure_findings(diag, motion))
    report.values.update({"period": format_rational(motion.period),
                          "circleLength": format_rational(motion.circle_length)})
    if not report.ok:
        return report

    surface = diag.surface
    period, length = motion.period, motion.circle_length
    occupancy = corner_occupancy(diag, motion)
    for v, orbit in enumerate(surface.vertices()):
        stops = [c for c in orbit if diagram_service.corner_type(diag, c).is_stop]
        if len(stops) == 1 and occupancy[stops[0]]:
            report.add(Finding.error("SeparatedStops", "the only stop corner is occupied", f"vertex {v}"))
        elif len(stops) >= 2:
            pairs = list(zip(stops, stops[1:] + stops[:1]))
            for c1, c2 in pairs[:1] if len(stops) == 2 else pairs:
                if _intersect(occupancy[c1], occupancy[c2]):
                    report.add(Finding.error(
                        "SeparatedStops", f"stop corners {c1} and {c2} occupied together", f"vertex {v}",
                    ))

    for f, face_cars in enumerate(motion.cars):
        n = len(surface.faces[f])
        d = len(face_cars)
        for j, car in enumerate(face_cars):
            successor = face_cars[(j + 1) % d]
            for t in _shift_times(car, successor, period, length):
                if (car.position(mod_circle(t + period, length)) - successor.position(t)) % n != 0:
                    report.add(Finding.error(
                        "ShiftCondition", f"car {j} at t + T differs from car {(j + 1) % d} at t = {t}", f"face {f}",
                    ))
                    break
        advances = [car.position(period) - car.position(Fraction(0)) for car in face_cars]
        if d == 1:
            arcs_ok = advances[0] > 0 and advances[0] % n == 0
        else:
            arcs_ok = sum(advances) == n and all(
                (face_cars[j].position(period) - face_cars[(j + 1) % d].position(Fraction(0))) % n == 0
                for j in range(d)
            )
        if not arcs_ok:
            report.add(Finding.error("ArcPartition", "car arcs over [0, T] do not partition the boundary", f"face {f}"))
    logger.info("motion validated: %d findings", len(report.findings))
    return report


def _edge_events(runs_a: List[DartRun], runs_b: List[DartRun]) -> List[Tuple[Fraction, Fraction]]:
    """(time, offset on the first dart) of every interior meeting of two opposite runs."""
    events = []
    for a in runs_a:
        for b in runs_b:
            lo, hi = max(a.t0, b.t0), min(a.t1, b.t1)
            if lo > hi:
                continue
            t = (1 - a.x0 - b.x0 + a.vel * a.t0 + b.vel * b.t0) / (a.vel + b.vel)
            if lo <= t <= hi:
                x = a.offset(t)
                if 0 < x < 1:
                    events.append((t, x))
    return events


def detect_collisions(diag: HowieDiagram, motion: MultipleMotion) -> CollisionReport:
    """
    Enumerate complete collisions over one time circle.

    An interior edge point at offset x on a dart collides when cars sit at x
    on the dart and at 1 - x on its partner simultaneously. A vertex collides
    when every one of its corners holds a car.

    Args:
        diag: The diagram
        motion: A valid motion on it

    Returns:
        CollisionReport with vertex intervals, distinct edge points on the
        forward dart, face terms 1 - d_D and the bound k(2m + 1)
    """
    surface = diag.surface
    length = motion.circle_length
    runs: Dict[int, List[DartRun]] = {d: [] for d in range(surface.dart_count)}
    for f, face_cars in enumerate(motion.cars):
        for car in face_cars:
            for piece in car.pieces:
                for run in dart_runs(surface, f, piece):
                    runs[run.dart].append(run)

    report = CollisionReport(constant=diag.presentation.k * (2 * diag.presentation.m + 1))
    for e, (d, partner) in enumerate(surface.edges()):
        points: Set[Fraction] = set()
        events: Set[Tuple[Fraction, Fraction]] = set()
        for t, x in _edge_events(runs[d], runs[partner]):
            x_forward = x if diag.is_forward(d) else 1 - x
            points.add(x_forward)
            events.add((mod_circle(t, length), x_forward))
            logger.debug("edge %d: collision at t=%s, x=%s", e, t, x_forward)
        if points:
            report.edge_points[e] = sorted(points)
            report.edge_events[e] = sorted(events)

    occupancy = corner_occupancy(diag, motion)
    for v, orbit in enumerate(surface.vertices()):
        common: Optional[List[Interval]] = None
        for corner in orbit:
            common = occupancy[corner] if common is None else _intersect(common, occupancy[corner])
            if not common:
                break
        if common:
            report.cc_vertices[v] = common

    for f, face_cars in enumerate(motion.cars):
        report.kprime_faces[f] = 1 - len(face_cars)
    return report


def car_crash_audit(diag: HowieDiagram, collisions: CollisionReport) -> Report:
    """
    Evaluate |cc vertices| + sum K'(e) + sum K'(D) >= chi.

    Returns:
        Report with both sides and a CarCrashFailure finding when the
        inequality fails
    """
    chi = diag.surface.euler_characteristic()
    lhs = len(collisions.cc_vertices) + collisions.kprime_edge_total + collisions.kprime_face_total
    report = Report("carCrash", values={"lhs": lhs, "rhs": chi, "holds": lhs >= chi})
    if lhs < chi:
        report.add(Finding.error("CarCrashFailure", f"{lhs} < chi = {chi}: too few complete collisions"))
    return report


def collision_structure_audit(diag: HowieDiagram, motion: MultipleMotion, collisions: CollisionReport) -> Report:
    """
    Audit the collision structure of the standard motion.

    Interior cars move along edge orientation exactly in odd unit time
    intervals; interior complete collisions happen only at sources and
    sinks, at integer times; every boundary edge carries at most k(2m + 1)
    collision points and interior edges none.

    Args:
        diag: The diagram
        motion: Its standard motion
        collisions: Output of detect_collisions

    Returns:
        Report with DirectionInvariant, CollisionOffSourceSink,
        CollisionNonInteger, BoundaryBound and InteriorEdgeCollision findings
    """
    report = Report("collisionStructure")
    surface = diag.surface
    for f, face_cars in enumerate(motion.cars):
        if not diag.is_interior_face(f):
            continue
        for j, car in enumerate(face_cars):
            for piece in car.pieces:
                for run in dart_runs(surface, f, piece):
                    unit = math.floor(run.t0)
                    if run.t1 > unit + 1 or diag.is_forward(run.dart) != (unit % 2 == 1):
                        report.add(Finding.error(
                            "DirectionInvariant",
                            f"dart {run.dart} crossed during [{run.t0}, {run.t1}]",
                            f"face {f} car {j}",
                        ))

    interior = set(diagram_service.interior_vertices(diag))
    for v, spans in sorted(collisions.cc_vertices.items()):
        if v not in interior:
            continue
        if not (diagram_service.is_source(diag, v) or diagram_service.is_sink(diag, v)):
            report.add(Finding.error("CollisionOffSourceSink", "complete collision at a mixed vertex", f"vertex {v}"))
        for t0, t1 in spans:
            if t0 != t1 or t0.denominator != 1:
                report.add(Finding.error(
                    "CollisionNonInteger", f"complete collision during [{t0}, {t1}]", f"vertex {v}",
                ))

    bound = collisions.constant
    for e, points in sorted(collisions.edge_points.items()):
        d, partner = surface.edges()[e]
        on_boundary = not (diag.is_interior_face(surface.face_of(d)) and diag.is_interior_face(surface.face_of(partner)))
        if not on_boundary:
            report.add(Finding.error("InteriorEdgeCollision", f"{len(points)} collision points", f"edge {e}"))
        elif bound is not None and len(points) > bound:
            report.add(Finding.error("BoundaryBound", f"{len(points)} points exceed {bound}", f"edge {e}"))
    report.values["boundaryBound"] = bound
    return report
