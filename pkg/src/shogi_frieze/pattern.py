"""Infinite one-directionally-periodic piece patterns.

A pattern is a finite motif of placed pieces plus a nonzero integer
translation vector t; the full pattern is the union of all t-translates.
Canonical form: every motif cell is the class representative produced by
``reduce_cell``, t has canonical sign and is minimal (no proper divisor of
t leaves the pattern invariant), and the motif tuple is sorted.

The module also defines the plain-text file format used by the CLI and the
committed crystal fixtures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .geometry import (Vec, add, canonical_sign, is_unit, neg, reduce_cell)
from .pieces import (KIND_LETTERS, Orientation, PieceKind, moveset,
                     register_custom_kind, _REGISTRY)


class PatternError(ValueError):
    pass


class InconsistentMotifError(PatternError):
    """Two motif pieces share a translation class but disagree."""


class ParseError(PatternError):
    pass


@dataclass(frozen=True, order=True)
class PlacedPiece:
    cell: Vec
    kind: PieceKind
    orientation: Orientation
    decoration: Optional[Vec] = None

    def __post_init__(self) -> None:
        if self.decoration is not None and not is_unit(self.decoration):
            raise PatternError(f"decoration {self.decoration} is not a unit vector")

    def attrs(self) -> tuple:
        return (self.kind, self.orientation, self.decoration)


def _sort_key(p: PlacedPiece):
    return (p.cell, p.kind.name, p.orientation.value,
            p.decoration is not None, p.decoration or (0, 0))


@dataclass(frozen=True)
class PeriodicPattern:
    pieces: tuple[PlacedPiece, ...]
    t: Vec

    def class_map(self) -> dict[Vec, PlacedPiece]:
        return {p.cell: p for p in self.pieces}

    def cells(self) -> tuple[Vec, ...]:
        return tuple(p.cell for p in self.pieces)

    def orientations(self) -> set[Orientation]:
        return {p.orientation for p in self.pieces}


def make_pattern(pieces: Iterable[PlacedPiece], t: Vec) -> PeriodicPattern:
    """Build and canonicalize a pattern from arbitrary piece placements."""
    return canonicalize(PeriodicPattern(tuple(pieces), t))


def _positive_divisors(n: int) -> list[int]:
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def canonicalize(p: PeriodicPattern) -> PeriodicPattern:
    """Reduce motif cells, fix t's sign, and shrink t to the minimal period."""
    if not p.pieces:
        raise PatternError("empty motif")
    t = canonical_sign(p.t)
    if t == (0, 0):
        raise PatternError("zero translation vector")

    def reduce_all(pieces, t):
        by_class: dict[Vec, PlacedPiece] = {}
        for piece in pieces:
            cell = reduce_cell(piece.cell, t)
            moved = replace(piece, cell=cell)
            prev = by_class.get(cell)
            if prev is None:
                by_class[cell] = moved
            elif prev.attrs() != moved.attrs():
                raise InconsistentMotifError(
                    f"conflicting pieces in class {cell}")
        return by_class

    by_class = reduce_all(p.pieces, t)

    g = math.gcd(abs(t[0]), abs(t[1]))
    for m in sorted(_positive_divisors(g), reverse=True):
        if m == 1:
            break
        v = (t[0] // m, t[1] // m)
        shifted_ok = all(
            (lambda r: r in by_class and by_class[r].attrs() == piece.attrs())
            (reduce_cell(add(cell, v), t))
            for cell, piece in by_class.items())
        if shifted_ok:
            t = v
            by_class = reduce_all(by_class.values(), t)
            break

    return PeriodicPattern(tuple(sorted(by_class.values(), key=_sort_key)), t)


def occupant(p: PeriodicPattern, cell: Vec) -> Optional[PlacedPiece]:
    """The piece at ``cell`` in the infinite pattern, if any."""
    hit = p.class_map().get(reduce_cell(cell, p.t))
    if hit is None:
        return None
    return replace(hit, cell=cell)


def dual(p: PeriodicPattern) -> PeriodicPattern:
    """Swap the two orientations; decorations rotate 180 degrees."""
    out = []
    for piece in p.pieces:
        deco = neg(piece.decoration) if piece.decoration is not None else None
        out.append(replace(piece, orientation=piece.orientation.flipped,
                           decoration=deco))
    return PeriodicPattern(tuple(sorted(out, key=_sort_key)), p.t)


# ---------------------------------------------------------------------------
# Kind-free forms

@dataclass(frozen=True)
class Form:
    """The shape of a pattern: cells with orientations and decorations but
    no piece kinds."""
    cells: tuple[tuple[Vec, Orientation, Optional[Vec]], ...]
    t: Vec

    def instantiate(self, kind: PieceKind) -> PeriodicPattern:
        return make_pattern(
            (PlacedPiece(c, kind, o, d) for c, o, d in self.cells), self.t)

    def instantiate_kinds(self, kinds: Iterable[PieceKind]) -> PeriodicPattern:
        ks = list(kinds)
        if len(ks) != len(self.cells):
            raise PatternError("one kind per form cell required")
        return make_pattern(
            (PlacedPiece(c, k, o, d)
             for (c, o, d), k in zip(self.cells, ks)), self.t)


def form_of(p: PeriodicPattern) -> Form:
    return Form(tuple((x.cell, x.orientation, x.decoration) for x in p.pieces),
                p.t)


# ---------------------------------------------------------------------------
# Text file format
#
#   # comment
#   period: 3 0
#   origin: 0 0
#   kind: C reverse-chariot steps= rides=(0,1);(0,-1)
#   grid:
#   .. K^ ..
#   K^ .. ..
#   decor: 1 1 ne
#
# Grid rows are listed top row first; `origin` gives the board coordinates
# of the bottom-left grid cell.  Cell tokens are `..` (empty) or a kind
# letter followed by `^` (Up) or `v` (Down).

_DECOR_NAMES = {
    "n": (0, 1), "ne": (1, 1), "e": (1, 0), "se": (1, -1),
    "s": (0, -1), "sw": (-1, -1), "w": (-1, 0), "nw": (-1, 1),
}
_DECOR_CODES = {v: k for k, v in _DECOR_NAMES.items()}

_LETTER_TO_KIND = {v: k for k, v in KIND_LETTERS.items()}
_CUSTOM_LETTER_POOL = "ACDEFHIJMOQTUVWXYZ"


def _parse_vec_list(text: str) -> list[Vec]:
    text = text.strip()
    if not text:
        return []
    out = []
    for item in text.split(";"):
        item = item.strip()
        if not (item.startswith("(") and item.endswith(")")):
            raise ParseError(f"bad displacement {item!r}")
        a, _, b = item[1:-1].partition(",")
        try:
            out.append((int(a), int(b)))
        except ValueError as exc:
            raise ParseError(f"bad displacement {item!r}") from exc
    return out


def _fmt_vec_list(vecs: Iterable[Vec]) -> str:
    return ";".join(f"({a},{b})" for a, b in sorted(vecs))


def parse(text: str) -> PeriodicPattern:
    period: Optional[Vec] = None
    origin: Vec = (0, 0)
    letters = dict(_LETTER_TO_KIND)
    grid_rows: list[list[str]] = []
    decors: list[tuple[Vec, Vec]] = []
    in_grid = False

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\n")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if in_grid and not any(stripped.startswith(h) for h in ("decor:",)):
            grid_rows.append(stripped.split(" "))
            continue
        if stripped.startswith("period:"):
            parts = stripped[len("period:"):].split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: bad period")
            period = (int(parts[0]), int(parts[1]))
        elif stripped.startswith("origin:"):
            parts = stripped[len("origin:"):].split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: bad origin")
            origin = (int(parts[0]), int(parts[1]))
        elif stripped.startswith("kind:"):
            parts = stripped[len("kind:"):].split()
            if len(parts) != 4 or not parts[2].startswith("steps=") \
                    or not parts[3].startswith("rides="):
                raise ParseError(f"line {lineno}: bad kind header")
            letter, name = parts[0], parts[1]
            if len(letter) != 1:
                raise ParseError(f"line {lineno}: kind letter must be one char")
            if letter in letters:
                raise ParseError(f"line {lineno}: letter {letter!r} taken")
            try:
                m = moveset(_parse_vec_list(parts[2][len("steps="):]),
                            _parse_vec_list(parts[3][len("rides="):]))
                letters[letter] = register_custom_kind(name, m)
            except ValueError as exc:
                raise ParseError(f"line {lineno}: {exc}") from exc
        elif stripped == "grid:":
            in_grid = True
        elif stripped.startswith("decor:"):
            parts = stripped[len("decor:"):].split()
            if len(parts) != 3 or parts[2] not in _DECOR_NAMES:
                raise ParseError(f"line {lineno}: bad decor line")
            decors.append(((int(parts[0]), int(parts[1])),
                           _DECOR_NAMES[parts[2]]))
        else:
            raise ParseError(f"line {lineno}: unrecognized line {stripped!r}")

    if period is None:
        raise ParseError("missing period header")
    if period == (0, 0):
        raise ParseError("zero period")
    if not grid_rows:
        raise ParseError("missing grid")

    pieces: dict[Vec, PlacedPiece] = {}
    height = len(grid_rows)
    for i, row in enumerate(grid_rows):
        y = origin[1] + (height - 1 - i)
        for j, token in enumerate(row):
            if token == "..":
                continue
            if len(token) != 2 or token[1] not in "^v":
                raise ParseError(f"bad cell token {token!r}")
            kind = letters.get(token[0])
            if kind is None:
                raise ParseError(f"unknown kind letter {token[0]!r}")
            o = Orientation.UP if token[1] == "^" else Orientation.DOWN
            cell = (origin[0] + j, y)
            pieces[cell] = PlacedPiece(cell, kind, o)

    for cell, d in decors:
        if cell not in pieces:
            raise ParseError(f"decor on empty cell {cell}")
        pieces[cell] = replace(pieces[cell], decoration=d)

    return make_pattern(pieces.values(), period)


def serialize(p: PeriodicPattern) -> str:
    """Canonical text form; byte-stable for golden tests (LF endings)."""
    p = canonicalize(p)
    xs = [c[0] for c in p.cells()]
    ys = [c[1] for c in p.cells()]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)

    custom = sorted({pc.kind.name for pc in p.pieces
                     if pc.kind not in KIND_LETTERS})
    letter_of = dict(KIND_LETTERS)
    assigned: dict[str, str] = {}
    pool = iter(_CUSTOM_LETTER_POOL)
    for name in custom:
        try:
            assigned[name] = next(pool)
        except StopIteration:
            raise PatternError("too many custom kinds to serialize") from None

    lines = [f"period: {p.t[0]} {p.t[1]}", f"origin: {x0} {y0}"]
    registered = _REGISTRY.names()
    for name in custom:
        m = registered[name]
        lines.append(f"kind: {assigned[name]} {name} "
                     f"steps={_fmt_vec_list(m.steps)} "
                     f"rides={_fmt_vec_list(m.rides)}")
    lines.append("grid:")
    by_cell = p.class_map()
    for y in range(y1, y0 - 1, -1):
        row = []
        for x in range(x0, x1 + 1):
            piece = by_cell.get((x, y))
            if piece is None:
                row.append("..")
            else:
                letter = (KIND_LETTERS.get(piece.kind)
                          or assigned[piece.kind.name])
                row.append(letter + ("^" if piece.orientation is Orientation.UP
                                     else "v"))
        lines.append(" ".join(row))
    for piece in p.pieces:
        if piece.decoration is not None:
            lines.append(f"decor: {piece.cell[0]} {piece.cell[1]} "
                         f"{_DECOR_CODES[piece.decoration]}")
    return "\n".join(lines) + "\n"
