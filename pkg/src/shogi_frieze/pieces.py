"""Piece kinds, orientations and movesets.

Movesets are given in the Up frame: single-square steps plus ride (sliding)
directions, each ride direction a unit chebyshev vector.  The Down frame is
the full 180-degree rotation of the Up frame.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .geometry import Vec, is_unit, neg


class Orientation(enum.Enum):
    UP = "up"
    DOWN = "down"

    @property
    def flipped(self) -> "Orientation":
        return Orientation.DOWN if self is Orientation.UP else Orientation.UP


class UnknownKindError(KeyError):
    """Raised when a moveset is requested for an unregistered kind."""


class MovesetError(ValueError):
    """Raised for malformed movesets (zero displacement, non-unit ride)."""


@dataclass(frozen=True, order=True)
class PieceKind:
    name: str

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"PieceKind({self.name!r})"


PAWN = PieceKind("pawn")
LANCE = PieceKind("lance")
KNIGHT = PieceKind("knight")
SILVER = PieceKind("silver")
GOLD = PieceKind("gold")
BISHOP = PieceKind("bishop")
ROOK = PieceKind("rook")
KING = PieceKind("king")

STANDARD_KINDS: tuple[PieceKind, ...] = (
    PAWN, LANCE, KNIGHT, SILVER, GOLD, BISHOP, ROOK, KING,
)

KIND_LETTERS = {
    PAWN: "P", LANCE: "L", KNIGHT: "N", SILVER: "S",
    GOLD: "G", BISHOP: "B", ROOK: "R", KING: "K",
}


@dataclass(frozen=True)
class Moveset:
    steps: frozenset[Vec]
    rides: frozenset[Vec]

    def __post_init__(self) -> None:
        if (0, 0) in self.steps or (0, 0) in self.rides:
            raise MovesetError("(0,0) is not a legal displacement")
        for d in self.rides:
            if not is_unit(d):
                raise MovesetError(f"ride direction {d} is not a unit vector")

    def rotated(self) -> "Moveset":
        """180-degree rotation: negate both components of every entry."""
        return Moveset(frozenset(neg(d) for d in self.steps),
                       frozenset(neg(d) for d in self.rides))


def moveset(steps: Iterable[Vec] = (), rides: Iterable[Vec] = ()) -> Moveset:
    return Moveset(frozenset(steps), frozenset(rides))


_KING_STEPS = frozenset(
    (dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0)
)

STANDARD_MOVESETS: dict[PieceKind, Moveset] = {
    PAWN: moveset(steps=[(0, 1)]),
    LANCE: moveset(rides=[(0, 1)]),
    KNIGHT: moveset(steps=[(-1, 2), (1, 2)]),
    SILVER: moveset(steps=[(0, 1), (1, 1), (-1, 1), (1, -1), (-1, -1)]),
    GOLD: moveset(steps=[(0, 1), (1, 1), (-1, 1), (1, 0), (-1, 0), (0, -1)]),
    BISHOP: moveset(rides=[(1, 1), (1, -1), (-1, 1), (-1, -1)]),
    ROOK: moveset(rides=[(1, 0), (-1, 0), (0, 1), (0, -1)]),
    KING: Moveset(_KING_STEPS, frozenset()),
}


class KindRegistry:
    """Custom kinds by unique name.  Registration is a setup-phase activity;
    patterns must not register new kinds once evaluation has started."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._custom: dict[str, Moveset] = {}

    def register(self, name: str, m: Moveset) -> PieceKind:
        with self._lock:
            if any(k.name == name for k in STANDARD_KINDS):
                raise ValueError(f"{name!r} is a standard kind")
            if name in self._custom:
                if self._custom[name] == m:
                    return PieceKind(name)
                raise ValueError(f"kind {name!r} already registered")
            self._custom[name] = m
        return PieceKind(name)

    def lookup(self, kind: PieceKind) -> Moveset:
        std = STANDARD_MOVESETS.get(kind)
        if std is not None:
            return std
        with self._lock:
            m = self._custom.get(kind.name)
        if m is None:
            raise UnknownKindError(f"unregistered kind {kind.name!r}")
        return m

    def clear(self) -> None:
        with self._lock:
            self._custom.clear()
        _oriented_cached.cache_clear()

    def names(self) -> dict[str, Moveset]:
        with self._lock:
            return dict(self._custom)


_REGISTRY = KindRegistry()


def register_custom_kind(name: str, m: Moveset) -> PieceKind:
    return _REGISTRY.register(name, m)


def clear_custom_kinds() -> None:
    """Test hook; drops all custom registrations."""
    _REGISTRY.clear()


def standard_moveset(kind: PieceKind) -> Moveset:
    """Up-frame moveset of a standard or registered custom kind."""
    return _REGISTRY.lookup(kind)


@lru_cache(maxsize=None)
def _oriented_cached(kind: PieceKind, o: Orientation) -> Moveset:
    m = standard_moveset(kind)
    return m if o is Orientation.UP else m.rotated()


def oriented_moveset(kind: PieceKind, o: Orientation) -> Moveset:
    return _oriented_cached(kind, o)


def has_horizontal_mirror_symmetry(m: Moveset) -> bool:
    """True iff negating dy everywhere reproduces the same moveset."""
    flip = lambda s: frozenset((dx, -dy) for dx, dy in s)
    return flip(m.steps) == m.steps and flip(m.rides) == m.rides


# Moveset variants used by the fragility experiments.

def reverse_chariot_moveset() -> Moveset:
    return moveset(rides=[(0, 1), (0, -1)])


def sideways_silver_moveset() -> Moveset:
    return Moveset(STANDARD_MOVESETS[SILVER].steps | {(1, 0), (-1, 0)},
                   frozenset())


def chess_knight_moveset() -> Moveset:
    return moveset(steps=[(1, 2), (-1, 2), (1, -2), (-1, -2),
                          (2, 1), (-2, 1), (2, -1), (-2, -1)])
