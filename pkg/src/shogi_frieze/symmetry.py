"""Lattice isometries, symmetry detection and frieze-group classification.

The isometry alphabet is the one relevant to one-directional patterns with
an up/down piece alphabet: translations, 180-degree rotations, horizontal
and vertical reflections, and horizontal glide reflections.  Axis and
center coordinates live on the half-integer grid so integer cells map to
integer cells.

Reflections about diagonal axes are excluded: they would map up/down
pieces to sideways ones, which do not exist.  Consequently patterns whose
minimal translation is not horizontal can only carry translation and
rotation symmetry and always classify as p1 or p2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Iterable

from .geometry import Vec, add, canonical_sign, cross, dot, neg, reduce_cell
from .pattern import (PatternError, PeriodicPattern, PlacedPiece,
                      canonicalize, make_pattern)


class IsometryKind(enum.Enum):
    TRANSLATE = "translate"
    ROTATE180 = "rotate180"
    REFLECT_H = "reflect_h"
    REFLECT_V = "reflect_v"
    GLIDE_H = "glide_h"


_FLIPS_ORIENTATION = {
    IsometryKind.ROTATE180: True,
    IsometryKind.REFLECT_H: True,
    IsometryKind.GLIDE_H: True,
    IsometryKind.TRANSLATE: False,
    IsometryKind.REFLECT_V: False,
}


def _half(value: float, what: str) -> float:
    if round(2 * value) != 2 * value:
        raise PatternError(f"{what} must lie on the half-integer grid")
    return float(value)


@dataclass(frozen=True)
class Isometry:
    """One lattice isometry.  Parameters by kind:

    TRANSLATE: shift;  ROTATE180: center;  REFLECT_H: axis y = axis_y;
    REFLECT_V: axis x = axis_x;  GLIDE_H: axis y = axis_y plus a nonzero
    horizontal integer shift.
    """
    kind: IsometryKind
    shift: Vec = (0, 0)
    center: tuple[float, float] = (0.0, 0.0)
    axis_x: float = 0.0
    axis_y: float = 0.0

    @staticmethod
    def translate(v: Vec) -> "Isometry":
        return Isometry(IsometryKind.TRANSLATE, shift=v)

    @staticmethod
    def rotate180(center: tuple[float, float]) -> "Isometry":
        cx = _half(center[0], "rotation center x")
        cy = _half(center[1], "rotation center y")
        return Isometry(IsometryKind.ROTATE180, center=(cx, cy))

    @staticmethod
    def reflect_h(axis_y: float) -> "Isometry":
        return Isometry(IsometryKind.REFLECT_H,
                        axis_y=_half(axis_y, "mirror axis"))

    @staticmethod
    def reflect_v(axis_x: float) -> "Isometry":
        return Isometry(IsometryKind.REFLECT_V,
                        axis_x=_half(axis_x, "mirror axis"))

    @staticmethod
    def glide_h(axis_y: float, shift: Vec) -> "Isometry":
        if shift[1] != 0 or shift[0] == 0:
            raise PatternError("glide shift must be horizontal and nonzero")
        return Isometry(IsometryKind.GLIDE_H, shift=shift,
                        axis_y=_half(axis_y, "glide axis"))

    def map_cell(self, c: Vec) -> Vec:
        k = self.kind
        if k is IsometryKind.TRANSLATE:
            return add(c, self.shift)
        if k is IsometryKind.ROTATE180:
            return (int(2 * self.center[0] - c[0]),
                    int(2 * self.center[1] - c[1]))
        if k is IsometryKind.REFLECT_H:
            return (c[0], int(2 * self.axis_y - c[1]))
        if k is IsometryKind.REFLECT_V:
            return (int(2 * self.axis_x - c[0]), c[1])
        return (c[0] + self.shift[0], int(2 * self.axis_y - c[1]))

    def map_direction(self, d: Vec) -> Vec:
        """Linear part applied to a displacement (for decorations and t)."""
        k = self.kind
        if k is IsometryKind.TRANSLATE:
            return d
        if k is IsometryKind.ROTATE180:
            return neg(d)
        if k is IsometryKind.REFLECT_V:
            return (-d[0], d[1])
        return (d[0], -d[1])

    @property
    def flips_orientation(self) -> bool:
        return _FLIPS_ORIENTATION[self.kind]


class FriezeGroup(enum.Enum):
    P1 = "p1"
    P11G = "p11g"
    P1M1 = "p1m1"
    P11M = "p11m"
    P2 = "p2"
    P2MG = "p2mg"
    P2MM = "p2mm"

    @property
    def label(self) -> str:
        return self.value


def apply(sigma: Isometry, p: PeriodicPattern) -> PeriodicPattern:
    """Transform a pattern; orientations flip under rotation, horizontal
    reflection and glide; decorations follow the linear part."""
    pieces = []
    for piece in p.pieces:
        cell = sigma.map_cell(piece.cell)
        o = (piece.orientation.flipped if sigma.flips_orientation
             else piece.orientation)
        deco = (sigma.map_direction(piece.decoration)
                if piece.decoration is not None else None)
        pieces.append(PlacedPiece(cell, piece.kind, o, deco))
    return make_pattern(pieces, sigma.map_direction(p.t))


def is_symmetry(p: PeriodicPattern, sigma: Isometry) -> bool:
    p = canonicalize(p)
    return apply(sigma, p) == p


@dataclass(frozen=True)
class SymmetryFlags:
    h: bool
    v: bool
    g: bool
    r: bool
    witnesses: tuple[Isometry, ...]

    def of_kind(self, kind: IsometryKind) -> tuple[Isometry, ...]:
        return tuple(w for w in self.witnesses if w.kind is kind)


def _rotation_center_candidates(p: PeriodicPattern) -> Iterable[Isometry]:
    """Doubled centers u solve cross(u, t) = qmin + qmax (band preserved)
    with projection in [0, 2 t.t) (centers repeat every t/2)."""
    t = p.t
    qs = [cross(c, t) for c in p.cells()]
    target = min(qs) + max(qs)
    a, b = t
    g = math.gcd(a, b)
    # Solve ux*b - uy*a = target over the integers.
    if target % g != 0:
        return
    gg, x0, y0 = _egcd(b, -a)
    scale_fac = target // g
    u0 = (x0 * scale_fac, y0 * scale_fac)
    step = (a // g, b // g)
    tt2 = 2 * dot(t, t)
    # Slide u0 along the line so its projection falls in [0, tt2).
    k0 = -(dot(u0, t) * g) // dot(t, t)  # coarse start, then scan
    for k in range(k0 - 2 * g - 2, k0 + 2 * g + 2):
        u = (u0[0] + k * step[0], u0[1] + k * step[1])
        if 0 <= dot(u, t) < tt2:
            yield Isometry.rotate180((u[0] / 2, u[1] / 2))


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _egcd(b, a % b)
    return (g, y, x - (a // b) * y)


def detect_symmetries(p: PeriodicPattern) -> SymmetryFlags:
    """Presence of horizontal mirror, vertical mirror, nontrivial glide and
    180-degree rotation, with concrete witnesses.

    Mirror and glide candidates exist only for horizontal minimal t; the
    single horizontal axis and the rotation centers' y are forced by the
    occupied band, vertical axes and rotation centers repeat modulo t/2 and
    are enumerated across one period.
    """
    p = canonicalize(p)
    t = p.t
    witnesses: list[Isometry] = []
    h = v = g = r = False

    if t[1] == 0:
        T = t[0]
        ys = [c[1] for c in p.cells()]
        axis2 = min(ys) + max(ys)
        cand_h = Isometry.reflect_h(axis2 / 2)
        if is_symmetry(p, cand_h):
            h = True
            witnesses.append(cand_h)
        for ax2 in range(0, 2 * T):
            cand_v = Isometry.reflect_v(ax2 / 2)
            if is_symmetry(p, cand_v):
                v = True
                witnesses.append(cand_v)
        if T % 2 == 0 and not h:
            cand_g = Isometry.glide_h(axis2 / 2, (T // 2, 0))
            if is_symmetry(p, cand_g):
                g = True
                witnesses.append(cand_g)
        for cx2 in range(0, 2 * T):
            cand_r = Isometry.rotate180((cx2 / 2, axis2 / 2))
            if is_symmetry(p, cand_r):
                r = True
                witnesses.append(cand_r)
    else:
        for cand in _rotation_center_candidates(p):
            if is_symmetry(p, cand):
                r = True
                witnesses.append(cand)

    order = {IsometryKind.REFLECT_H: 0, IsometryKind.REFLECT_V: 1,
             IsometryKind.GLIDE_H: 2, IsometryKind.ROTATE180: 3}
    witnesses.sort(key=lambda w: (order[w.kind], w.axis_x, w.axis_y,
                                  w.center, w.shift))
    return SymmetryFlags(h, v, g, r, tuple(witnesses))


def classify_frieze(p: PeriodicPattern) -> FriezeGroup:
    """Decision table over the detected symmetry flags."""
    flags = detect_symmetries(p)
    h, v, g, r = flags.h, flags.v, flags.g, flags.r
    if h and v:
        if not r:
            raise AssertionError("h and v imply a rotation")
        return FriezeGroup.P2MM
    if h:
        if r:
            raise AssertionError("h with rotation implies v")
        return FriezeGroup.P11M
    if v and r:
        return FriezeGroup.P2MG
    if v:
        return FriezeGroup.P1M1
    if r:
        if g:
            raise AssertionError("rotation with glide implies v")
        return FriezeGroup.P2
    if g:
        return FriezeGroup.P11G
    return FriezeGroup.P1


_GROUPS_NEEDING_HORIZONTAL = {
    FriezeGroup.P11G, FriezeGroup.P1M1, FriezeGroup.P11M,
    FriezeGroup.P2MG, FriezeGroup.P2MM,
}


def generate_from_recipe(basic: Iterable[PlacedPiece], group: FriezeGroup,
                         period: Vec, *, axis_x: float = -0.5,
                         axis_y: float = -0.5,
                         center: tuple[float, float] = (-0.5, -0.5),
                         ) -> PeriodicPattern:
    """Close a basic motif under the group's generators.

    The returned pattern is canonical; if the basic motif carries accidental
    symmetry the classified group may be a proper supergroup of ``group``.
    """
    period = canonical_sign(period)
    if period == (0, 0):
        raise PatternError("zero period")
    if group in _GROUPS_NEEDING_HORIZONTAL and period[1] != 0:
        raise PatternError(f"{group.label} requires a horizontal period")

    gens: list[Isometry] = []
    if group in (FriezeGroup.P11G, FriezeGroup.P2MG):
        if period[0] % 2 != 0:
            raise PatternError(f"{group.label} requires an even period")
        gens.append(Isometry.glide_h(axis_y, (period[0] // 2, 0)))
    if group in (FriezeGroup.P1M1, FriezeGroup.P2MG, FriezeGroup.P2MM):
        gens.append(Isometry.reflect_v(axis_x))
    if group in (FriezeGroup.P11M, FriezeGroup.P2MM):
        gens.append(Isometry.reflect_h(axis_y))
    if group is FriezeGroup.P2:
        gens.append(Isometry.rotate180(center))

    by_class: dict[Vec, PlacedPiece] = {}

    def insert(piece: PlacedPiece) -> bool:
        cls = reduce_cell(piece.cell, period)
        moved = replace(piece, cell=cls)
        prev = by_class.get(cls)
        if prev is None:
            by_class[cls] = moved
            return True
        if prev.attrs() != moved.attrs():
            raise PatternError(f"recipe orbit collision in class {cls}")
        return False

    for piece in basic:
        insert(piece)

    changed = True
    rounds = 0
    while changed:
        changed = False
        rounds += 1
        if rounds > 64:
            raise PatternError("recipe closure did not stabilize")
        for sigma in gens:
            for piece in list(by_class.values()):
                cell = sigma.map_cell(piece.cell)
                o = (piece.orientation.flipped if sigma.flips_orientation
                     else piece.orientation)
                deco = (sigma.map_direction(piece.decoration)
                        if piece.decoration is not None else None)
                if insert(PlacedPiece(cell, piece.kind, o, deco)):
                    changed = True

    return make_pattern(by_class.values(), period)
