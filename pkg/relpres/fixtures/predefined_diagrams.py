"""
Predefined groups, presentations and diagrams.

These fixtures back the test suite, the ``relpres fixtures`` command and the
usage examples. Every diagram is built from polygon vertex cycles, a sign per
interior dart and corner labels listed face by face.
"""

from typing import Callable, Dict, List, Optional, Sequence

from ..core.models import (
    FPWord,
    Group,
    HowieDiagram,
    PhiPresentation,
    SurfaceMap,
    TWord,
    build_map,
    map_from_polygons,
)

G = 1  # generator of the cyclic groups


def z2() -> Group:
    return Group.cyclic(2)


def z3() -> Group:
    return Group.cyclic(3)


def s3() -> Group:
    return Group.symmetric3()


def z3_basic_presentation(k: int = 2) -> PhiPresentation:
    """s = 0, m = 0 with c = b_0 = a_0 = g over Z3: the rewrite of g t g t^-1 g t."""
    g = FPWord.of((0, G))
    source = TWord.parse([(0, G), "t", (0, G), "T", (0, G), "t"])
    return PhiPresentation(base=z3(), s=0, m=0, k=k, c=g, a=(g,), b=(g,), source=source)


def z2_basic_presentation(k: int = 2) -> PhiPresentation:
    g = FPWord.of((0, G))
    return PhiPresentation(base=z2(), s=0, m=0, k=k, c=g, a=(g,), b=(g,))


def z3_digon_presentation(k: int = 2) -> PhiPresentation:
    """s = 1, m = 0 over Z3: the rewrite of g t g t^-1 t^-1 g t t."""
    source = TWord.parse([(0, G), "t", (0, G), "T", "T", (0, G), "t", "t"])
    return PhiPresentation(
        base=z3(), s=1, m=0, k=k, c=FPWord(),
        a=(FPWord.of((1, G)),), b=(FPWord.of((1, G), (0, G)),), source=source,
    )


def edge_forward_from_signs(surface: SurfaceMap, signs: Dict[int, int]) -> List[int]:
    """
    Pick the forward dart of every edge from known dart signs.

    Args:
        surface: The map
        signs: Dart -> +1/-1 for at least one dart of every edge

    Returns:
        Forward dart per edge
    """
    forward = []
    for d, partner in surface.edges():
        if d in signs:
            forward.append(d if signs[d] > 0 else partner)
        else:
            forward.append(partner if signs[partner] > 0 else d)
    return forward


def _rows_from_pairs(surface: SurfaceMap, pairs_by_face: Dict[int, Sequence]) -> List[List[FPWord]]:
    return [
        [label for _, label in pairs_by_face[f]] if f in pairs_by_face else [FPWord()] * len(darts)
        for f, darts in enumerate(surface.faces)
    ]


def _signs_from_pairs(surface: SurfaceMap, pairs_by_face: Dict[int, Sequence]) -> Dict[int, int]:
    return {d: sign for f, pairs in pairs_by_face.items() for d, (sign, _) in zip(surface.faces[f], pairs)}


def pillow(k: int = 2, presentation: Optional[PhiPresentation] = None) -> HowieDiagram:
    """
    One large face glued to the exterior face along its whole boundary.

    The exterior face reads the large face backwards, so the map is a sphere
    with n = k(2m + 3) vertices, n edges and two faces.
    """
    p = presentation if presentation is not None else z3_basic_presentation(k)
    n = p.k * (2 * p.m + 3)
    surface = map_from_polygons([list(range(n)), [0] + list(range(n - 1, 0, -1))])
    pairs = {0: p.relator_pairs(1)}
    return HowieDiagram.from_face_labels(
        surface,
        edge_forward_from_signs(surface, _signs_from_pairs(surface, pairs)),
        _rows_from_pairs(surface, pairs),
        p,
        exterior_faces=[1],
    )


def mirror_pillow(k: int = 2) -> HowieDiagram:
    """A large face glued to its mirror image: legal, spherical and reducible."""
    p = z3_basic_presentation(k)
    n = p.k * (2 * p.m + 3)
    surface = map_from_polygons([list(range(n)), [0] + list(range(n - 1, 0, -1))])
    pairs = {0: p.relator_pairs(1), 1: p.relator_pairs(-1)}
    return HowieDiagram.from_face_labels(
        surface,
        edge_forward_from_signs(surface, _signs_from_pairs(surface, pairs)),
        _rows_from_pairs(surface, pairs),
        p,
    )


def two_digon_sphere() -> HowieDiagram:
    """
    Two digons sharing both edges.

    Both vertices are trivial; one is a source and one a sink. The digons are
    mirror images, so the diagram is neither reduced nor phi-reduced.
    """
    p = z3_digon_presentation()
    surface = build_map(4, [2, 3, 0, 1], [[0, 1], [2, 3]])
    x, y = FPWord.of((0, G)), FPWord.of((0, 2))
    rows = [
        [x, p.phi(x).inverse(p.base)],
        [p.phi(y).inverse(p.base), y],
    ]
    return HowieDiagram.from_face_labels(surface, [2, 1], rows, p)


def case_b_disk(group: Optional[Group] = None) -> HowieDiagram:
    """
    Two large faces meeting at an interior source, inside one exterior face.

    Over Z2 the source carries the trivial label a * a and its two large-face
    cars meet there at t = 1; over Z3 the same label is nontrivial.
    """
    group = group if group is not None else z2()
    g = FPWord.of((0, G))
    p = PhiPresentation(base=group, s=0, m=0, k=2, c=g, a=(g,), b=(g,))
    u, v, w, a3, a4, a5, b3, b4, b5 = range(9)
    surface = map_from_polygons([
        [u, v, w, a3, a4, a5],
        [w, v, u, b3, b4, b5],
        [w, b5, b4, b3, u, a5, a4, a3],
    ])
    pattern = [(-1, g), (1, g), (1, g)] * 2
    pairs = {0: pattern, 1: pattern}
    return HowieDiagram.from_face_labels(
        surface,
        edge_forward_from_signs(surface, _signs_from_pairs(surface, pairs)),
        _rows_from_pairs(surface, pairs),
        p,
        exterior_faces=[2],
    )


def torus_square() -> SurfaceMap:
    """One square with opposite sides glued: V = 1, E = 2, F = 1."""
    return build_map(4, [2, 3, 0, 1], [[0, 1, 2, 3]])


def torus_diagram() -> HowieDiagram:
    """The torus square with every corner labelled g: legal shape checks fail on purpose."""
    p = z3_basic_presentation()
    g = FPWord.of((0, G))
    return HowieDiagram.from_face_labels(torus_square(), [0, 1], [[g] * 4], p)


def tetrahedron() -> SurfaceMap:
    return map_from_polygons([(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])


DIAGRAMS: Dict[str, Callable[[], HowieDiagram]] = {
    "pillow": pillow,
    "pillow-k3": lambda: pillow(3),
    "mirror-pillow": mirror_pillow,
    "two-digon-sphere": two_digon_sphere,
    "case-b-disk": case_b_disk,
    "case-b-disk-z3": lambda: case_b_disk(z3()),
    "torus": torus_diagram,
}

DESCRIPTIONS: Dict[str, str] = {
    "pillow": "Z3, k=2: one large face inside the exterior face (passes every audit)",
    "pillow-k3": "Z3, k=3: the pillow for the k >= 3 inequality",
    "mirror-pillow": "Z3, k=2: a large face glued to its mirror (reducible pair)",
    "two-digon-sphere": "Z3, s=1: two digons on a sphere (digon pair, source and sink collisions)",
    "case-b-disk": "Z2, k=2: interior source hosting a complete collision (involution warning)",
    "case-b-disk-z3": "Z3, k=2: the same disk with a nontrivial interior vertex",
    "torus": "Z3: one square on a torus (not a sphere, illegal face)",
}


def get_diagram(name: str) -> HowieDiagram:
    """
    Build a named fixture diagram.

    Raises:
        KeyError: If the name is unknown
    """
    return DIAGRAMS[name]()


def get_fixture_names() -> List[str]:
    return sorted(DIAGRAMS)
