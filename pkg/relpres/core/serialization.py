"""
JSON file formats for the relpres toolkit.

This module reads and writes group, word, presentation, diagram and motion
files. Loaders translate every malformed input into ParseError so the CLI can
map it to a single exit code.
"""

import json
import logging
import os
from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Dict, Generator, List, Optional, Union

from ..utils import format_rational, parse_rational
from .exceptions import ParseError
from .models import (
    CarSchedule,
    FPWord,
    Group,
    HowieDiagram,
    MultipleMotion,
    PhiPresentation,
    Piece,
    Syllable,
    TWord,
    build_map,
)
from .models.words import Stable

logger = logging.getLogger(__name__)


@contextmanager
def parse_scope(what: str) -> Generator[None, None, None]:
    """
    Translate low-level lookup errors into ParseError.

    Args:
        what: Name of the object being parsed, used in the message
    """
    try:
        yield
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, IndexError, AttributeError) as e:
        raise ParseError(f"malformed {what}: {e!r}") from e


def load_json(path: str) -> Any:
    """
    Read a JSON document from disk.

    Args:
        path: File path

    Returns:
        The decoded document

    Raises:
        ParseError: If the file cannot be read or decoded
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}") from e


def dumps(data: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


def dump_json(data: Any, path: str) -> None:
    """Write a JSON document with a trailing newline."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(data) + "\n")
    logger.debug("wrote %s", path)


def group_from_dict(data: Dict[str, Any]) -> Group:
    """
    Build a Group from {"order": n, "table": [[...]]}.

    Raises:
        ParseError: If fields are missing or the order disagrees with the table
    """
    with parse_scope("group"):
        table = data["table"]
        if "order" in data and data["order"] != len(table):
            raise ParseError(f"group order {data['order']} does not match a table of {len(table)} rows")
        return Group.from_table(table)


def _element(item: Dict[str, Any]) -> int:
    value = item["g"]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"element index {value!r} is not an integer")
    return value


def _copy(item: Dict[str, Any]) -> int:
    value = item.get("copy", 0)
    if type(value) is not int:
        raise ParseError(f"copy index {value!r} is not an integer")
    return value


def fpword_from_list(items: List[Dict[str, Any]]) -> FPWord:
    """Build an FPWord from [{"copy": i, "g": idx}, ...]."""
    with parse_scope("syllable list"):
        return FPWord(tuple(Syllable(_copy(item), _element(item)) for item in items))


def tword_from_dict(data: Union[Dict[str, Any], List[Any]], group: Optional[Group] = None) -> TWord:
    """
    Build a TWord from {"letters": [{"g": idx} | {"t": 1} | {"t": -1}, ...]}.

    Args:
        data: Word document or bare letter list
        group: When given, every element index must lie in this group

    Raises:
        ParseError: On unknown letters, stable exponents other than +-1 or
            elements outside ``group``
    """
    with parse_scope("word"):
        items = data["letters"] if isinstance(data, dict) else data
        letters = []
        for item in items:
            if "t" in item:
                if type(item["t"]) is not int or item["t"] not in (1, -1):
                    raise ParseError(f"stable letter exponent {item['t']!r} is not +-1")
                letters.append(Stable(item["t"]))
            else:
                letters.append(Syllable(_copy(item), _element(item)))
        word = TWord(tuple(letters))
    if group is not None:
        _check_elements(word, group)
    return word


def _check_elements(word: Union[FPWord, TWord], group: Group) -> None:
    for letter in word:
        if isinstance(letter, Syllable) and not 0 <= letter.element < group.order:
            raise ParseError(f"element {letter.element} is not in a group of order {group.order}")


def resolve_group(ref: Any, base_dir: Optional[str] = None) -> Group:
    """Load a group given inline or as a path relative to ``base_dir``."""
    if isinstance(ref, dict):
        return group_from_dict(ref)
    if isinstance(ref, str):
        path = ref if os.path.isabs(ref) or base_dir is None else os.path.join(base_dir, ref)
        return group_from_dict(load_json(path))
    raise ParseError(f"group reference {ref!r} is neither a path nor an object")


def presentation_from_dict(data: Dict[str, Any], base_dir: Optional[str] = None,
                           group: Optional[Group] = None) -> PhiPresentation:
    """
    Build a PhiPresentation from its file representation.

    Args:
        data: Presentation document
        base_dir: Directory against which a group path is resolved
        group: Group to use when the document carries none

    Returns:
        The presentation
    """
    with parse_scope("presentation"):
        if "group" in data:
            group = resolve_group(data["group"], base_dir)
        if group is None:
            raise ParseError("presentation has no group")
        c = fpword_from_list(data["c"])
        a = tuple(fpword_from_list(x) for x in data["a"])
        b = tuple(fpword_from_list(x) for x in data["b"])
        for word in (c, *a, *b):
            _check_elements(word, group)
        source = tword_from_dict(data["source"], group) if "source" in data else None
        return PhiPresentation(
            base=group, s=int(data["s"]), m=int(data["m"]), k=int(data["k"]),
            c=c, a=a, b=b, source=source,
        )


def load_presentation(path: str) -> PhiPresentation:
    return presentation_from_dict(load_json(path), base_dir=os.path.dirname(path))


def diagram_from_dict(data: Dict[str, Any], presentation: PhiPresentation) -> HowieDiagram:
    """
    Build a HowieDiagram from its file representation.

    Args:
        data: Diagram document (map fields plus labels and markings)
        presentation: Presentation the labels live over

    Returns:
        The diagram
    """
    with parse_scope("diagram"):
        surface = build_map(int(data["darts"]), data["theta"], data["faces"])
        rows = [[fpword_from_list(word) for word in row] for row in data["cornerLabels"]]
        for row in rows:
            for word in row:
                _check_elements(word, presentation.base)
        return HowieDiagram.from_face_labels(
            surface,
            data["edgeForward"],
            rows,
            presentation,
            exterior_faces=data.get("exteriorFaces", []),
            exterior_vertices=data.get("exteriorVertices", []),
        )


def diagram_to_dict(diagram: HowieDiagram, presentation_ref: Optional[str] = None) -> Dict[str, Any]:
    data = diagram.to_dict()
    if presentation_ref is not None:
        data["presentation"] = presentation_ref
    return data


def motion_from_dict(data: Dict[str, Any]) -> MultipleMotion:
    """Build a MultipleMotion from {"period", "circleLength", "faces": [[[piece...]...]...]}."""
    with parse_scope("motion"):
        faces = []
        for face in data["faces"]:
            cars = []
            for car in face:
                pieces = tuple(
                    Piece(
                        parse_rational(p["t0"]),
                        parse_rational(p["t1"]),
                        parse_rational(p["pos0"]),
                        parse_rational(p["vel"]),
                    )
                    for p in car
                )
                cars.append(CarSchedule(pieces))
            faces.append(tuple(cars))
        return MultipleMotion(
            period=parse_rational(data["period"]),
            circle_length=parse_rational(data["circleLength"]),
            cars=tuple(faces),
        )


def rational_map(values: Dict[Any, Fraction]) -> Dict[str, str]:
    """Format a mapping of rationals with string keys for JSON output."""
    return {str(key): format_rational(value) for key, value in values.items()}
