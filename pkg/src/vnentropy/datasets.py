"""Bundled example networks and name-or-path graph resolution."""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .graph import Graph, load_edge_list

__all__ = ["BUNDLED", "load_dataset", "resolve_graph"]

BUNDLED = ("karate", "florentine", "gift")

#: Environment variable naming a directory searched for <name>.edges files
#: before the bundled data.
DATA_DIR_VAR = "VNENTROPY_DATA_DIR"


def load_dataset(name: str) -> Graph:
    """Load a bundled dataset (or one shadowing it via the data-dir
    environment variable)."""
    override = os.environ.get(DATA_DIR_VAR)
    if override:
        candidate = Path(override) / f"{name}.edges"
        if candidate.is_file():
            return load_edge_list(candidate.read_text())
    if name not in BUNDLED:
        raise ValueError(f"unknown dataset {name!r}; bundled: {', '.join(BUNDLED)}")
    text = resources.files(__package__).joinpath(f"data/{name}.edges").read_text()
    return load_edge_list(text)


def resolve_graph(spec: str) -> Graph:
    """Interpret ``spec`` as a file path if one exists, otherwise as a
    dataset name."""
    path = Path(spec)
    if path.is_file():
        return load_edge_list(path.read_text())
    return load_dataset(spec)
