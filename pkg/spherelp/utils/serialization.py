"""Reading and writing the JSON and CSV artifacts.

JSON documents carry their run configuration under a ``"config"`` key; CSV
tables carry it as ``#``-prefixed comment lines ahead of the header row, which
gnuplot and ``pandas.read_csv(comment="#")`` both skip.
"""

import json
from collections.abc import Iterable, Mapping
from pathlib import Path
from typing import Any

import pandas as pd

from spherelp._types import DocumentFormatError


def read_json(path: str | Path) -> dict[str, Any]:
    """Load a JSON object from disk.

    Args:
    ----
        path (str | Path): File to read.

    Returns:
    -------
        dict[str, Any]: Parsed object.

    Raises:
    ------
        DocumentFormatError: If the file is missing, not JSON, or not an object.

    """
    try:
        text = Path(path).read_text(encoding="utf-8")
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as err:
        raise DocumentFormatError(f"Cannot read JSON document {path}: {err}") from err
    if not isinstance(doc, dict):
        raise DocumentFormatError(f"JSON document {path} is not an object.")
    return dict(doc)  # pyright: ignore[reportUnknownArgumentType]


def write_json(
    path: str | Path, doc: Mapping[str, Any], config: Mapping[str, Any] | None = None
) -> None:
    """Write a JSON object, embedding the run configuration.

    Args:
    ----
        path (str | Path): Destination file.
        doc (Mapping[str, Any]): Document body.
        config (Mapping[str, Any] | None): Run configuration stored under
            ``"config"``.

    """
    out = dict(doc)
    if config is not None:
        out["config"] = dict(config)
    Path(path).write_text(json.dumps(out, indent=2) + "\n", encoding="utf-8")


def comment_lines(config: Mapping[str, Any]) -> list[str]:
    """Render a configuration as ``# key: value`` lines.

    Args:
    ----
        config (Mapping[str, Any]): Run configuration.

    Returns:
    -------
        list[str]: One comment line per entry, without newlines.

    """
    return [f"# {key}: {json.dumps(value)}" for key, value in config.items()]


def write_csv(
    path: str | Path, frame: pd.DataFrame, config: Mapping[str, Any] | None = None
) -> None:
    """Write a table as CSV with the configuration as leading comments.

    Args:
    ----
        path (str | Path): Destination file.
        frame (pd.DataFrame): Table to write.
        config (Mapping[str, Any] | None): Run configuration.

    """
    header = "\n".join(comment_lines(config)) + "\n" if config else ""
    Path(path).write_text(header + frame.to_csv(index=False), encoding="utf-8")


def read_csv_tables(
    paths: Iterable[str | Path], required: Iterable[str] = ()
) -> pd.DataFrame:
    """Concatenate CSV tables, skipping ``#`` comment lines.

    Args:
    ----
        paths (Iterable[str | Path]): Files to read, in order.
        required (Iterable[str]): Columns every table must provide.

    Returns:
    -------
        pd.DataFrame: Rows of all tables in file order.

    Raises:
    ------
        DocumentFormatError: If a file cannot be parsed or lacks a column.

    """
    frames: list[pd.DataFrame] = []
    needed = list(required)
    for path in paths:
        try:
            frame = pd.read_csv(path, comment="#")
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as err:
            raise DocumentFormatError(f"Cannot read CSV table {path}: {err}") from err
        missing = [col for col in needed if col not in frame.columns]
        if missing:
            raise DocumentFormatError(f"CSV table {path} lacks columns {missing}.")
        frames.append(frame)
    if not frames:
        return pd.DataFrame(columns=needed)
    return pd.concat(frames, ignore_index=True)
