"""Reading and writing solution files and extension-spec files (JSON).

Solution file: an object with "elements" (label array) and exactly one of
  "left_action": {label: [image labels in elements order], ...}
      omitted labels act as the identity; the right action is the
      row-wise inverse (the left-action construction), or
  "map": [[x, y, z, t], ...]  giving r(x, y) = (z, t) by labels,
      one entry per ordered pair (general quadratic sets).
Unknown keys are rejected.

Extension-spec file: {"left": <solution>, "right": <solution>,
"y_on_x": {label: [image labels over left elements]}, "x_on_y": likewise};
omitted rows are identities.
"""
from __future__ import annotations

import json

from . import perms
from .core import QuadraticSet
from .errors import ParseError

_SOLUTION_KEYS = {"elements", "left_action", "map"}
_SPEC_KEYS = {"left", "right", "y_on_x", "x_on_y"}


def solution_from_obj(obj) -> QuadraticSet:
    if not isinstance(obj, dict):
        raise ParseError("solution must be a JSON object")
    unknown = set(obj) - _SOLUTION_KEYS
    if unknown:
        raise ParseError(f"unknown solution keys: {sorted(unknown)}")
    if "elements" not in obj:
        raise ParseError('solution needs an "elements" array')
    labels = obj["elements"]
    if not isinstance(labels, list) or not all(isinstance(l, str) for l in labels):
        raise ParseError('"elements" must be an array of strings')
    has_left = "left_action" in obj
    has_map = "map" in obj
    if has_left == has_map:
        raise ParseError('solution needs exactly one of "left_action" or "map"')
    try:
        if has_left:
            rows = obj["left_action"]
            if not isinstance(rows, dict):
                raise ParseError('"left_action" must be an object')
            return QuadraticSet.from_left_action(labels, rows)
        quads = obj["map"]
        if not isinstance(quads, list) or any(len(q) != 4 for q in quads):
            raise ParseError('"map" must be an array of 4-tuples')
        return QuadraticSet.from_map(labels, quads)
    except ParseError:
        raise
    except KeyError as exc:
        raise ParseError(f"unknown element label {exc.args[0]!r}") from exc
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def solution_to_obj(qs: QuadraticSet) -> dict:
    """Normalized JSON object; left_action form whenever it reproduces qs."""
    lri_form = all(perms.is_perm(row) for row in qs.left) and all(
        qs.right[y] == perms.inverse(qs.left[y]) for y in range(qs.n)
    )
    obj: dict = {"elements": list(qs.labels)}
    if lri_form:
        action = {}
        ident = perms.identity(qs.n)
        for x in range(qs.n):
            if qs.left[x] != ident:
                action[qs.labels[x]] = [qs.labels[v] for v in qs.left[x]]
        obj["left_action"] = action
    else:
        obj["map"] = [
            [qs.labels[x], qs.labels[y], qs.labels[z], qs.labels[t]]
            for x in range(qs.n)
            for y in range(qs.n)
            for z, t in (qs.r(x, y),)
        ]
    return obj


def dumps_solution(qs: QuadraticSet) -> str:
    return json.dumps(solution_to_obj(qs), indent=2) + "\n"


def loads_solution(text: str) -> QuadraticSet:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return solution_from_obj(obj)


def load_solution(path) -> QuadraticSet:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_solution(fh.read())


def save_solution(qs: QuadraticSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_solution(qs))


def extension_spec_from_obj(obj):
    from .extensions import ExtensionSpec

    if not isinstance(obj, dict):
        raise ParseError("extension spec must be a JSON object")
    unknown = set(obj) - _SPEC_KEYS
    if unknown:
        raise ParseError(f"unknown extension-spec keys: {sorted(unknown)}")
    for key in ("left", "right"):
        if key not in obj:
            raise ParseError(f'extension spec needs "{key}"')
    left = solution_from_obj(obj["left"])
    right = solution_from_obj(obj["right"])

    def rows_to_perms(rows, owner: QuadraticSet, target: QuadraticSet, key: str):
        out = {}
        if not isinstance(rows, dict):
            raise ParseError(f'"{key}" must be an object')
        for lab, images in rows.items():
            try:
                who = owner.index(lab)
            except KeyError:
                raise ParseError(f'"{key}" row for unknown label {lab!r}') from None
            try:
                row = tuple(target.index(img) for img in images)
            except KeyError as exc:
                raise ParseError(f'"{key}" image label {exc.args[0]}') from None
            if len(row) != target.n or not perms.is_perm(row):
                raise ParseError(f'"{key}" row for {lab!r} is not a bijection')
            out[who] = row
        return out

    y_on_x = rows_to_perms(obj.get("y_on_x", {}), right, left, "y_on_x")
    x_on_y = rows_to_perms(obj.get("x_on_y", {}), left, right, "x_on_y")
    return ExtensionSpec.from_partial(left, right, y_on_x, x_on_y)


def loads_extension_spec(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return extension_spec_from_obj(obj)


def load_extension_spec(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_extension_spec(fh.read())


def extension_spec_to_obj(spec) -> dict:
    left, right = spec.left_part, spec.right_part
    obj = {"left": solution_to_obj(left), "right": solution_to_obj(right)}
    y_on_x = {}
    for a in range(right.n):
        row = spec.y_on_x[a]
        if row != perms.identity(left.n):
            y_on_x[right.labels[a]] = [left.labels[v] for v in row]
    x_on_y = {}
    for x in range(left.n):
        row = spec.x_on_y[x]
        if row != perms.identity(right.n):
            x_on_y[left.labels[x]] = [right.labels[v] for v in row]
    obj["y_on_x"] = y_on_x
    obj["x_on_y"] = x_on_y
    return obj


def dumps_extension_spec(spec) -> str:
    return json.dumps(extension_spec_to_obj(spec), indent=2) + "\n"
