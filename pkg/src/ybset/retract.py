"""Retraction of symmetric sets, retraction towers and multipermutation level.

Two elements are identified when they have the same left translation row;
the induced actions on classes are computed from representatives and then
cross-checked against *every* representative pair, so a successful call
also certifies that the quotient is well defined.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .core import QuadraticSet, check_ybe
from .errors import IllDefinedAction, LevelOutOfRange, NotSymmetricSet

_BRACKET = re.compile(r"^\[(?P<base>.+)\](?:\^\((?P<level>\d+)\))?$")


def class_label(label: str) -> str:
    """Label of the class of an element: [a], then [a]^(2), [a]^(3), ..."""
    m = _BRACKET.match(label)
    if m is None:
        return f"[{label}]"
    base = m.group("base")
    level = int(m.group("level") or 1)
    return f"[{base}]^({level + 1})"


def _require_symmetric(qs: QuadraticSet) -> None:
    if not qs.is_nondegenerate():
        raise NotSymmetricSet("input is not nondegenerate")
    if not qs.is_involutive():
        raise NotSymmetricSet("input is not involutive")
    ok, witness = check_ybe(qs)
    if not ok:
        raise NotSymmetricSet(f"braid relation fails at triple {witness}")


@dataclass(frozen=True)
class Retraction:
    """Partition of X by equal left translation rows plus the induced set."""

    classes: tuple[tuple[int, ...], ...]
    class_map: tuple[int, ...]
    retracted: QuadraticSet


def left_row_classes(qs: QuadraticSet):
    """Classes of x ~ y iff the left rows agree, ordered by least element."""
    by_row: dict = {}
    for x in range(qs.n):
        by_row.setdefault(qs.left[x], []).append(x)
    classes = sorted((tuple(v) for v in by_row.values()), key=lambda c: c[0])
    class_map = [0] * qs.n
    for ci, cls in enumerate(classes):
        for x in cls:
            class_map[x] = ci
    return classes, tuple(class_map)


def retract(qs: QuadraticSet) -> Retraction:
    """One retraction step of a nondegenerate symmetric set."""
    _require_symmetric(qs)
    classes, class_map = left_row_classes(qs)
    m = len(classes)
    left = [[0] * m for _ in range(m)]
    right = [[0] * m for _ in range(m)]
    for ci, ca in enumerate(classes):
        for cj, cb in enumerate(classes):
            lvals = {class_map[qs.left[a][b]] for a in ca for b in cb}
            rvals = {class_map[qs.right[a][b]] for a in ca for b in cb}
            if len(lvals) != 1 or len(rvals) != 1:
                raise IllDefinedAction(
                    f"induced action on classes ({ci},{cj}) depends on representatives"
                )
            left[ci][cj] = lvals.pop()
            right[ci][cj] = rvals.pop()
    labels = tuple(class_label(qs.labels[cls[0]]) for cls in classes)
    retracted = QuadraticSet(labels, left, right)
    if not (retracted.is_nondegenerate() and retracted.is_involutive() and check_ybe(retracted)[0]):
        raise IllDefinedAction("retracted set is not a nondegenerate symmetric set")
    return Retraction(classes=classes, class_map=class_map, retracted=retracted)


@dataclass(frozen=True)
class RetractTower:
    """Iterated retractions: levels[0] is the input, levels[k+1] its retract.

    Iteration stops at a one-element level (mpl = number of steps) or as
    soon as the size stops shrinking, in which case every later retract
    is isomorphic and mpl is None.
    """

    levels: tuple[QuadraticSet, ...]
    steps: tuple[Retraction, ...]
    mpl: int | None

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(level.n for level in self.levels)

    def class_of(self, x: int, k: int) -> int:
        """Index of the image of x at level k of the tower."""
        if not 0 <= k <= len(self.steps):
            raise LevelOutOfRange(f"level {k} not in computed tower (0..{len(self.steps)})")
        for step in self.steps[:k]:
            x = step.class_map[x]
        return x


def tower(qs: QuadraticSet) -> RetractTower:
    _require_symmetric(qs)
    levels = [qs]
    steps = []
    # sizes strictly decrease or the tower has stabilized; |X| caps the depth
    while levels[-1].n > 1:
        step = retract(levels[-1])
        if step.retracted.n == levels[-1].n:
            return RetractTower(tuple(levels), tuple(steps), mpl=None)
        steps.append(step)
        levels.append(step.retracted)
    return RetractTower(tuple(levels), tuple(steps), mpl=len(steps))


def mpl(qs: QuadraticSet) -> int | None:
    """Multipermutation level: least m with a one-element m-th retract."""
    return tower(qs).mpl


def retract_orbit(qs: QuadraticSet, x: int, k: int) -> tuple[int, ...]:
    """Elements whose image at tower level k coincides with that of x."""
    if k < 1:
        raise LevelOutOfRange("level must be >= 1")
    tw = tower(qs)
    if k > len(tw.steps):
        raise LevelOutOfRange(f"level {k} exceeds tower depth {len(tw.steps)}")
    target = tw.class_of(x, k)
    return tuple(xi for xi in range(qs.n) if tw.class_of(xi, k) == target)


def retraction_is_representative_independent(qs: QuadraticSet) -> bool:
    """Independent sweep of the well-definedness of the induced actions."""
    classes, class_map = left_row_classes(qs)
    for ca in classes:
        for cb in classes:
            if len({class_map[qs.left[a][b]] for a in ca for b in cb}) != 1:
                return False
            if len({class_map[qs.right[a][b]] for a in ca for b in cb}) != 1:
                return False
    return True
