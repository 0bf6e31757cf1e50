"""File formats: configuration / coordinate / Euclidean / lattice JSON and
the plain-text 0/1 adjacency format.  Rationals travel as strings; floats
never appear in exact-mode files."""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Union

from .exact import Configuration, StructuralError, rational
from .lattice import LatticeGram, bundled_lattice
from .numerics import CoordinateSet

import numpy as np


class InputError(ValueError):
    """Malformed input file; the CLI reports these with exit code 2."""


def _load_json(path) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top-level JSON value must be an object")
    return doc


def configuration_to_dict(c: Configuration) -> dict:
    doc = {}
    if c.label is not None:
        doc["label"] = c.label
    if c.point_labels is not None:
        doc["labels"] = list(c.point_labels)
    doc["gram"] = [[str(x) for x in row] for row in c.gram.entries]
    return doc


def configuration_from_dict(doc: dict, where: str = "configuration") -> Configuration:
    if "gram" not in doc:
        raise InputError(f"{where}: missing 'gram' field")
    gram = doc["gram"]
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise InputError(f"{where}: 'gram' must be a list of rows")
    rows = []
    for i, row in enumerate(gram):
        out = []
        for j, x in enumerate(row):
            if isinstance(x, float):
                raise InputError(
                    f"{where}: gram[{i}][{j}] is a float; exact files carry "
                    f"rationals as strings"
                )
            try:
                out.append(rational(x))
            except StructuralError as exc:
                raise InputError(f"{where}: gram[{i}][{j}]: {exc}") from exc
        rows.append(out)
    labels = doc.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or not all(isinstance(s, str) for s in labels)
    ):
        raise InputError(f"{where}: 'labels' must be a list of strings")
    try:
        return Configuration.from_gram(
            rows,
            label=doc.get("label"),
            point_labels=tuple(labels) if labels is not None else None,
        )
    except StructuralError as exc:
        raise InputError(f"{where}: {exc}") from exc


def read_configuration(path) -> Configuration:
    return configuration_from_dict(_load_json(path), where=str(path))


def write_json(doc: dict, path=None) -> str:
    text = json.dumps(doc, indent=2) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def write_configuration(c: Configuration, path=None) -> str:
    return write_json(configuration_to_dict(c), path)


def read_coordinates(path) -> CoordinateSet:
    doc = _load_json(path)
    if "coords" not in doc:
        raise InputError(f"{path}: missing 'coords' field")
    try:
        pts = np.array(doc["coords"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: bad 'coords' array: {exc}") from exc
    if pts.ndim != 2:
        raise InputError(f"{path}: 'coords' must be a rectangular N x r array")
    return CoordinateSet(points=pts, label=doc.get("label"))


def write_coordinates(p: CoordinateSet, path=None) -> str:
    doc = {}
    if p.label is not None:
        doc["label"] = p.label
    doc["coords"] = [[float(x) for x in row] for row in p.points]
    return write_json(doc, path)


def load_point_input(path) -> Union[Configuration, CoordinateSet]:
    """Dispatch on file content: 'gram' (exact) or 'coords' (float)."""
    doc = _load_json(path)
    if "gram" in doc:
        return configuration_from_dict(doc, where=str(path))
    if "coords" in doc:
        try:
            pts = np.array(doc["coords"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise InputError(f"{path}: bad 'coords' array: {exc}") from exc
        if pts.ndim != 2:
            raise InputError(f"{path}: 'coords' must be a rectangular N x r array")
        return CoordinateSet(points=pts, label=doc.get("label"))
    raise InputError(f"{path}: expected a 'gram' or 'coords' field")


def read_euclidean(path) -> tuple[list, list, Fraction]:
    doc = _load_json(path)
    if "points" not in doc:
        raise InputError(f"{path}: missing 'points' field")
    try:
        points = [[rational(x) for x in row] for row in doc["points"]]
        period = None
        if doc.get("period") is not None:
            period = [[rational(x) for x in row] for row in doc["period"]]
        cutoff = rational(doc["cutoff"]) if doc.get("cutoff") is not None else None
    except (StructuralError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    return points, period, cutoff


def read_lattice(spec: str) -> LatticeGram:
    """A bundled lattice name (z2, d4, e8, k12, leech) or a JSON file path."""
    if not os.path.exists(spec):
        try:
            return bundled_lattice(spec)
        except StructuralError as exc:
            raise InputError(str(exc)) from exc
    doc = _load_json(spec)
    if "gram" not in doc:
        raise InputError(f"{spec}: missing 'gram' field")
    rows = []
    for i, row in enumerate(doc["gram"]):
        out = []
        for j, x in enumerate(row):
            if not isinstance(x, int):
                raise InputError(f"{spec}: gram[{i}][{j}] = {x!r} is not an integer")
            out.append(x)
        rows.append(tuple(out))
    try:
        return LatticeGram(entries=tuple(rows), label=doc.get("label"))
    except StructuralError as exc:
        raise InputError(f"{spec}: {exc}") from exc


def read_graph(path) -> tuple[tuple[int, ...], ...]:
    """Whitespace-separated 0/1 adjacency matrix, one row per line."""
    try:
        with open(path) as fh:
            lines = [line for line in fh.read().splitlines() if line.strip()]
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    rows = []
    for lineno, line in enumerate(lines, start=1):
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise InputError(f"{path}: line {lineno}: entries must be 0/1 integers")
    n = len(rows)
    for lineno, row in enumerate(rows, start=1):
        if len(row) != n:
            raise InputError(
                f"{path}: line {lineno}: {len(row)} entries for {n} rows"
            )
        if any(x not in (0, 1) for x in row):
            raise InputError(f"{path}: line {lineno}: entries must be 0/1")
    return tuple(rows)
