import random
from pathlib import Path

import pytest

from shogi_frieze import (KING, STANDARD_KINDS, Orientation, PlacedPiece,
                          make_pattern, parse)
from shogi_frieze.geometry import reduce_cell
from shogi_frieze.search import ROW_ORDER

UP, DOWN = Orientation.UP, Orientation.DOWN

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

FIXTURE_DIR = (Path(__file__).resolve().parent.parent
               / "src" / "shogi_frieze" / "fixtures" / "crystals")


def piece(cell, orientation=UP, kind=KING, decoration=None):
    return PlacedPiece(cell, kind, orientation, decoration)


def random_pattern(rng: random.Random, *, max_pieces=6, span=4, tmax=5,
                   kinds=STANDARD_KINDS, orientations=(UP, DOWN)):
    while True:
        t = (rng.randint(-tmax, tmax), rng.randint(-tmax, tmax))
        if t != (0, 0):
            break
    n = rng.randint(1, max_pieces)
    by_class = {}
    for _ in range(n):
        c = reduce_cell((rng.randint(-span, span), rng.randint(-span, span)), t)
        by_class[c] = PlacedPiece(c, rng.choice(kinds),
                                  rng.choice(orientations))
    return make_pattern(by_class.values(), t)


@pytest.fixture(scope="session")
def crystal_fixtures():
    out = {}
    for group in ROW_ORDER:
        text = (FIXTURE_DIR / f"{group.label}.pattern").read_text("utf-8")
        out[group] = parse(text)
    return out
