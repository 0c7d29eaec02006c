"""Committed crystal fixtures: one pattern file per frieze group."""

from importlib.resources import files
from pathlib import Path


def crystals_dir() -> Path:
    return Path(str(files("shogi_frieze") / "fixtures" / "crystals"))
