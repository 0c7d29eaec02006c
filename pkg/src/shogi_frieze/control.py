"""Neighborhood, region partition, control and the control-condition verdicts.

Everything here works on the quotient lattice Z^2 / <t> ("the cylinder").
Classes are identified with their canonical representatives; the coordinate
``cross(c, t)`` is constant on classes and measures position across the
cylinder, which gives exact tests for unbounded rays and unbounded empty
regions:

* a sliding ray parallel to t revisits a class (cycle) before it can run
  forever past occupied cells; a non-parallel ray drifts monotonically in
  ``cross`` and is provably free once it leaves the occupied band;
* an empty region is unbounded iff it reaches a class whose ``cross`` lies
  outside the occupied band (the half-plane beyond the band is one empty,
  connected, infinite region).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Optional

from .geometry import (ORTHO_DIRS, UNIT_DIRS, Vec, add, cross, is_unit,
                       reduce_cell, scale)
from .pattern import PatternError, PeriodicPattern, PlacedPiece
from .pieces import Moveset, Orientation, PieceKind, oriented_moveset


class RegionClass(enum.Enum):
    INSIDE = "inside"
    BASE = "base"
    OUTSIDE = "outside"


class Verdict(enum.Enum):
    COMPLETE = "complete"
    NEARLY_COMPLETE = "nearly_complete"
    FAILS = "fails"


class RayEvent(enum.Enum):
    BLOCKED_BY_ALLY = "blocked_by_ally"
    CAPTURE_ENEMY = "capture_enemy"
    FREE_INFINITE = "free_infinite"


MovesetOverrides = Optional[Mapping[PieceKind, Moveset]]


def _moveset_for(piece: PlacedPiece, overrides: MovesetOverrides) -> Moveset:
    if overrides is not None:
        base = overrides.get(piece.kind)
        if base is not None:
            return (base if piece.orientation is Orientation.UP
                    else base.rotated())
    return oriented_moveset(piece.kind, piece.orientation)


@dataclass(frozen=True)
class FreeLine:
    """An unbounded ray on the quotient: anchor class plus unit direction.

    The line's content is { reduce(anchor + k*dir) : k >= 1 }; its ``cross``
    coordinate moves by cross(dir, t) per step, never zero for free rays.
    """
    anchor: Vec
    direction: Vec


@dataclass(frozen=True)
class RayMarch:
    empty_classes: tuple[Vec, ...]
    event: RayEvent
    capture: Optional[Vec] = None
    free_line: Optional[FreeLine] = None


@dataclass(frozen=True)
class PeriodicCellSet:
    """A t-periodic cell set: finitely many classes plus free lines."""
    classes: frozenset[Vec]
    free_lines: tuple[FreeLine, ...]
    t: Vec

    def contains(self, cls: Vec) -> bool:
        if cls in self.classes:
            return True
        t = self.t
        q = cross(cls, t)
        for line in self.free_lines:
            qd = cross(line.direction, t)
            delta = q - cross(line.anchor, t)
            if qd == 0 or delta % qd != 0:
                continue
            k = delta // qd
            if k >= 1 and reduce_cell(
                    add(line.anchor, scale(line.direction, k)), t) == cls:
                return True
        return False

    def classes_in_band(self, qlo: int, qhi: int) -> frozenset[Vec]:
        """All member classes whose ``cross`` lies in [qlo, qhi]."""
        t = self.t
        out = {c for c in self.classes if qlo <= cross(c, t) <= qhi}
        for line in self.free_lines:
            qd = cross(line.direction, t)
            q = cross(line.anchor, t)
            k = 1
            while True:
                qk = q + k * qd
                if (qd > 0 and qk > qhi) or (qd < 0 and qk < qlo):
                    break
                if qlo <= qk <= qhi:
                    out.add(reduce_cell(
                        add(line.anchor, scale(line.direction, k)), t))
                k += 1
        return frozenset(out)


@dataclass(frozen=True)
class NccStatus:
    verdict: Verdict
    uncontrolled_class: Optional[RegionClass] = None
    witness: Optional[Vec] = None
    uncontrolled: frozenset[Vec] = frozenset()

    @property
    def satisfies(self) -> bool:
        """The nearly-complete predicate (complete counts as satisfied)."""
        return self.verdict is not Verdict.FAILS


def _occupied_band(p: PeriodicPattern) -> tuple[int, int]:
    qs = [cross(c, p.t) for c in p.cells()]
    return min(qs), max(qs)


def neighborhood(p: PeriodicPattern) -> frozenset[Vec]:
    """Classes of all squares adjacent to some occupied square."""
    t = p.t
    out = set()
    for c in p.cells():
        for d in UNIT_DIRS:
            out.add(reduce_cell(add(c, d), t))
    return frozenset(out)


def partition_neighborhood(p: PeriodicPattern) -> dict[Vec, RegionClass]:
    """Assign every neighborhood class to inside / base / outside.

    Inside cells are empty neighborhood cells whose 4-connected empty
    component on the plane is bounded.  The flood runs on plane cells with
    a class-to-lift memo: a component is unbounded iff it leaves the
    occupied ``cross`` band (the half-plane beyond it is empty, connected
    and infinite) or revisits a class at a different lift (the component
    winds around the quotient cylinder, so it is an infinite strip).
    """
    t = p.t
    occupied = p.class_map()
    nbhd = neighborhood(p)
    qlo, qhi = _occupied_band(p)

    result: dict[Vec, RegionClass] = {}
    component_bounded: dict[Vec, bool] = {}

    for cls in nbhd:
        if cls in occupied:
            result[cls] = RegionClass.BASE

    for cls in nbhd:
        if cls in result:
            continue
        if cls in component_bounded:
            result[cls] = (RegionClass.INSIDE if component_bounded[cls]
                           else RegionClass.OUTSIDE)
            continue
        lift: dict[Vec, Vec] = {}
        frontier = [cls]
        bounded = True
        while frontier and bounded:
            cur = frontier.pop()
            cur_cls = reduce_cell(cur, t)
            prev = lift.get(cur_cls)
            if prev is not None:
                if prev != cur:
                    bounded = False  # same class, different lift: winding
                continue
            lift[cur_cls] = cur
            if not (qlo <= cross(cur, t) <= qhi):
                bounded = False
                break
            for d in ORTHO_DIRS:
                nxt = add(cur, d)
                nxt_cls = reduce_cell(nxt, t)
                if nxt_cls in occupied:
                    continue
                prev = lift.get(nxt_cls)
                if prev is not None and prev != nxt:
                    bounded = False
                    break
                frontier.append(nxt)
        for c in lift:
            component_bounded[c] = bounded
        result[cls] = (RegionClass.INSIDE if bounded else RegionClass.OUTSIDE)

    return result


def ray_march(p: PeriodicPattern, origin: Vec, direction: Vec,
              origin_orientation: Orientation) -> RayMarch:
    """March a sliding ray from an occupied square, reducing to classes.

    Allies block exclusively, enemies are captured inclusively.  Free rays
    are detected exactly: a class revisit (only possible parallel to t) or
    monotone drift of ``cross`` past the occupied band.
    """
    if not is_unit(direction):
        raise PatternError(f"ray direction {direction} is not a unit vector")
    t = p.t
    occupied = p.class_map()
    qlo, qhi = _occupied_band(p)
    qd = cross(direction, t)

    empties: list[Vec] = []
    seen: set[Vec] = set()
    pos = origin
    while True:
        pos = add(pos, direction)
        cls = reduce_cell(pos, t)
        hit = occupied.get(cls)
        if hit is not None:
            if hit.orientation is origin_orientation:
                return RayMarch(tuple(empties), RayEvent.BLOCKED_BY_ALLY)
            return RayMarch(tuple(empties), RayEvent.CAPTURE_ENEMY,
                            capture=cls)
        q = cross(cls, t)
        if (qd > 0 and q > qhi) or (qd < 0 and q < qlo):
            return RayMarch(tuple(empties), RayEvent.FREE_INFINITE,
                            free_line=FreeLine(reduce_cell(origin, t),
                                               direction))
        if cls in seen:
            return RayMarch(tuple(empties), RayEvent.FREE_INFINITE,
                            free_line=FreeLine(reduce_cell(origin, t),
                                               direction))
        seen.add(cls)
        empties.append(cls)


def control_of_pattern(p: PeriodicPattern,
                       overrides: MovesetOverrides = None) -> PeriodicCellSet:
    """Classes (and free lines) of all squares the pattern's pieces can
    move to.  Step targets on ally squares are excluded; enemy squares are
    included for both steps and rides."""
    t = p.t
    occupied = p.class_map()
    classes: set[Vec] = set()
    free_lines: set[FreeLine] = set()

    for piece in p.pieces:
        m = _moveset_for(piece, overrides)
        for step in m.steps:
            cls = reduce_cell(add(piece.cell, step), t)
            hit = occupied.get(cls)
            if hit is not None and hit.orientation is piece.orientation:
                continue
            classes.add(cls)
        for ride in m.rides:
            res = ray_march(p, piece.cell, ride, piece.orientation)
            classes.update(res.empty_classes)
            if res.capture is not None:
                classes.add(res.capture)
            if res.free_line is not None:
                free_lines.add(res.free_line)

    return PeriodicCellSet(frozenset(classes),
                           tuple(sorted(free_lines,
                                        key=lambda f: (f.anchor, f.direction))),
                           t)


def ncc_status(p: PeriodicPattern,
               overrides: MovesetOverrides = None) -> NccStatus:
    """Verdict of the neighborhood control conditions.

    Complete: every neighborhood class is controlled.  Nearly complete:
    some neighborhood class is controlled and the uncontrolled set equals
    exactly one nonempty region (base, inside, or outside).  Anything else
    fails, with a witness cell.
    """
    nbhd = neighborhood(p)
    regions = partition_neighborhood(p)
    ctrl = control_of_pattern(p, overrides)
    return _verdict_from_parts(nbhd, regions, ctrl)


def _verdict_from_parts(nbhd: frozenset[Vec],
                        regions: Mapping[Vec, RegionClass],
                        ctrl: PeriodicCellSet) -> NccStatus:
    uncontrolled = frozenset(c for c in nbhd if not ctrl.contains(c))
    if not uncontrolled:
        return NccStatus(Verdict.COMPLETE, uncontrolled=uncontrolled)
    if len(uncontrolled) < len(nbhd):
        for region in RegionClass:
            cells = frozenset(c for c, r in regions.items() if r is region)
            if cells and cells == uncontrolled:
                return NccStatus(Verdict.NEARLY_COMPLETE,
                                 uncontrolled_class=region,
                                 uncontrolled=uncontrolled)
    return NccStatus(Verdict.FAILS, witness=min(uncontrolled),
                     uncontrolled=uncontrolled)
