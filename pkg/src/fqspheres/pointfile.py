"""Flat-file exchange format for point sets and sphere families.

The first significant line is a header::

    q=<odd prime> d=<dimension> kind=<points|spheres>

Every following non-empty line holds one object as space-separated
canonical residues: d values for a point, d+1 for a sphere with the
center first and the radius parameter last. ``#`` starts a comment
that runs to the end of the line; blank lines are skipped. Residues
must already lie in [0, q); out-of-range values are rejected rather
than reduced, so a file is either canonical or invalid.
"""

from __future__ import annotations

from pathlib import Path

from .errors import FileFormatError
from .field import make_field
from .geometry import Point, Sphere
from .incidence import PointSet, SphereFamily


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_header(line: str, lineno: int) -> tuple[int, int, str]:
    fields = {}
    for tok in line.split():
        key, sep, val = tok.partition("=")
        if not sep or key not in ("q", "d", "kind") or key in fields:
            raise FileFormatError(f"bad header token {tok!r} at line {lineno}")
        fields[key] = val
    if set(fields) != {"q", "d", "kind"}:
        raise FileFormatError(
            f"header must set q, d and kind exactly once (line {lineno})"
        )
    try:
        q = int(fields["q"])
        d = int(fields["d"])
    except ValueError:
        raise FileFormatError(f"q and d must be integers (line {lineno})") from None
    kind = fields["kind"]
    if kind not in ("points", "spheres"):
        raise FileFormatError(
            f"kind must be 'points' or 'spheres', got {kind!r} (line {lineno})"
        )
    if d < 1:
        raise FileFormatError(f"d must be at least 1 (line {lineno})")
    return q, d, kind


def read_set(path, expect_kind: str | None = None):
    """Read a PointSet or SphereFamily from ``path``.

    ``expect_kind`` of ``points`` or ``spheres`` turns a mismatched
    header into an error. Validation failures carry line numbers.
    """
    text = Path(path).read_text(encoding="utf-8")
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if header is None:
            header = _parse_header(line, lineno)
            continue
        rows.append((lineno, line))
    if header is None:
        raise FileFormatError(f"{path}: missing header line")
    q, d, kind = header
    if expect_kind is not None and kind != expect_kind:
        raise FileFormatError(f"{path}: expected kind={expect_kind}, found {kind}")
    try:
        field = make_field(q)
    except ValueError as exc:
        raise FileFormatError(f"{path}: {exc}") from None

    width = d if kind == "points" else d + 1
    seen = set()
    objects = []
    for lineno, line in rows:
        toks = line.split()
        if len(toks) != width:
            raise FileFormatError(
                f"expected {width} values at line {lineno}, got {len(toks)}"
            )
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise FileFormatError(
                f"non-integer coordinate at line {lineno}"
            ) from None
        for v in vals:
            if not 0 <= v < q:
                raise FileFormatError(
                    f"out-of-range coordinate {v} at line {lineno} (q={q})"
                )
        key = tuple(vals)
        if key in seen:
            raise FileFormatError(f"duplicate at line {lineno}")
        seen.add(key)
        if kind == "points":
            objects.append(Point(field, vals))
        else:
            objects.append(Sphere(Point(field, vals[:d]), vals[d]))
    if kind == "points":
        return PointSet(field, d, objects)
    return SphereFamily(field, d, objects)


def write_points(path, points: PointSet, comment: str | None = None) -> None:
    lines = [f"q={points.q} d={points.d} kind=points"]
    if comment:
        lines.insert(0, f"# {comment}")
    for p in points:
        lines.append(" ".join(str(c) for c in p.coords))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_spheres(path, spheres: SphereFamily, comment: str | None = None) -> None:
    lines = [f"q={spheres.q} d={spheres.d} kind=spheres"]
    if comment:
        lines.insert(0, f"# {comment}")
    for s in spheres:
        lines.append(" ".join(str(c) for c in s.center.coords) + f" {s.lam}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
