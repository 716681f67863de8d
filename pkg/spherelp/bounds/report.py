"""Human-readable and tabular density reports."""

from collections.abc import Sequence

import pandas as pd

from spherelp._types import DocumentFormatError, EmptyListError
from spherelp.bounds.density import DensityBound, sequence_bound

CSV_COLUMNS = ["n", "m", "sharp", "delta", "Delta", "flag"]

PER_M_NOTE = (
    "per-m: a single periodic function bounds only packings that are periodic "
    "under its lattice Λ_m."
)
LIMINF_NOTE = (
    "sequence-liminf: only the liminf over all m bounds every packing; the value "
    "shown is the empirical estimate over the supplied m."
)
LIMINF_CAVEAT = (
    "Caveat: the empirical liminf is the minimum over the supplied m. It is a "
    "safe upper bound only if the sharp ratios are eventually monotone in m."
)


def bounds_to_frame(bounds: Sequence[DensityBound]) -> pd.DataFrame:
    """Table with columns ``n,m,sharp,delta,Delta,flag``.

    Args:
    ----
        bounds (Sequence[DensityBound]): Bounds in output order.

    Returns:
    -------
        pd.DataFrame: One row per bound.

    """
    rows = [
        {
            "n": b.n,
            "m": b.m_label,
            "sharp": b.sharp,
            "delta": b.delta,
            "Delta": b.Delta,
            "flag": b.flag,
        }
        for b in bounds
    ]
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def format_report(bounds: Sequence[DensityBound]) -> str:
    """Fixed-width report block with the per-m and liminf notes.

    Args:
    ----
        bounds (Sequence[DensityBound]): Bounds in output order.

    Returns:
    -------
        str: Report text, newline terminated.

    """
    header = f"{'n':>2} {'m':>12} {'sharp':>12} {'delta':>12} {'Delta':>12}  flag"
    lines = [header, "-" * len(header)]
    for b in bounds:
        lines.append(
            f"{b.n:>2} {b.m_label:>12} {b.sharp:>12.6f} {b.delta:>12.6f} "
            f"{b.Delta:>12.6f}  {b.flag}"
        )
    flags = {b.flag for b in bounds}
    lines.append("")
    if "per-m" in flags:
        lines.append(PER_M_NOTE)
    if "sequence-liminf" in flags:
        lines.append(LIMINF_NOTE)
        lines.append(LIMINF_CAVEAT)
    return "\n".join(lines) + "\n"


def summarize_tables(frame: pd.DataFrame, source: str = "report") -> list[DensityBound]:
    """Per-m rows followed by a liminf row for every dimension with several m.

    Rows flagged ``sequence-liminf`` in the input are ignored, so reports can be
    fed back in. When a scale occurs twice the smaller ratio is kept.

    Args:
    ----
        frame (pd.DataFrame): Rows with at least ``n``, ``m`` and ``sharp``.
        source (str): Name recorded in the provenance.

    Returns:
    -------
        list[DensityBound]: Bounds ordered by dimension, per-m rows by m, each
        dimension with several m ending with its empirical liminf.

    Raises:
    ------
        EmptyListError: If no per-m rows remain.
        DocumentFormatError: If ``n`` or ``m`` is not an integer column.

    """
    rows = frame
    if "flag" in rows.columns:
        rows = rows[rows["flag"] != "sequence-liminf"]
    if rows.empty:
        raise EmptyListError("No per-m rows to summarise.")
    try:
        dims = rows["n"].astype(int)
        scales = rows["m"].astype(int)
        ratios = rows["sharp"].astype(float)
    except (TypeError, ValueError) as err:
        raise DocumentFormatError(f"Malformed report rows: {err}") from err
    merged = (
        pd.DataFrame({"n": dims, "m": scales, "sharp": ratios})
        .groupby(["n", "m"], as_index=False)["sharp"]
        .min()
        .sort_values(["n", "m"])
    )
    out: list[DensityBound] = []
    for n, group in merged.groupby("n", sort=True):
        pairs = list(zip(group["m"].tolist(), group["sharp"].tolist(), strict=True))
        out.extend(sequence_bound([pair], n=int(n), source=source) for pair in pairs)
        if len(pairs) > 1:
            out.append(sequence_bound(pairs, n=int(n), source=source))
    return out
