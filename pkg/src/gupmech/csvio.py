"""CSV surface: trajectory tables and event lists.

Headers are mandatory, encoding is UTF-8, line endings are LF, and
floats are written with repr() so a read-back is bit-exact.  Trajectory
columns are t, x1..xd, p1..pd, energy; event columns are t, x1[..x3].
"""

import csv
from typing import List, NamedTuple

import numpy as np

from .frames import Event


class CsvFormatError(ValueError):
    """Malformed CSV content; carries the 1-based row number."""

    def __init__(self, message, row):
        self.row = row
        super().__init__(f"row {row}: {message}")


class TrajectoryTable(NamedTuple):
    times: np.ndarray
    positions: np.ndarray
    momenta: np.ndarray
    energies: np.ndarray


def _axis_names(prefix, dim):
    return [f"{prefix}{i}" for i in range(1, dim + 1)]


def trajectory_header(dim: int) -> List[str]:
    return ["t"] + _axis_names("x", dim) + _axis_names("p", dim) + ["energy"]


def event_header(dim: int) -> List[str]:
    return ["t"] + _axis_names("x", dim)


def write_trajectory(path, trajectory) -> None:
    dim = trajectory.positions.shape[1]
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(trajectory_header(dim))
        for k in range(len(trajectory.times)):
            row = ([repr(float(trajectory.times[k]))]
                   + [repr(float(v)) for v in trajectory.positions[k]]
                   + [repr(float(v)) for v in trajectory.momenta[k]]
                   + [repr(float(trajectory.energies[k]))])
            writer.writerow(row)


def _parse_row(row, width, row_no):
    if len(row) != width:
        raise CsvFormatError(f"expected {width} columns, got {len(row)}", row_no)
    out = []
    for cell in row:
        try:
            out.append(float(cell))
        except ValueError:
            raise CsvFormatError(f"not a number: {cell!r}", row_no) from None
    return out


def _header_dim(header, builder, row_count):
    for dim in (1, 3):
        if header == builder(dim):
            return dim
    raise CsvFormatError(
        f"unrecognized header {','.join(header)!r}; "
        f"expected {','.join(builder(1))} or {','.join(builder(3))}",
        row_count)


def read_trajectory(path) -> TrajectoryTable:
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        rows = list(reader)
    if not rows:
        raise CsvFormatError("empty file", 1)
    dim = _header_dim(rows[0], trajectory_header, 1)
    width = 2 + 2 * dim
    data = [_parse_row(row, width, row_no)
            for row_no, row in enumerate(rows[1:], start=2)]
    table = np.asarray(data, dtype=float).reshape(len(data), width)
    return TrajectoryTable(
        times=table[:, 0],
        positions=table[:, 1:1 + dim],
        momenta=table[:, 1 + dim:1 + 2 * dim],
        energies=table[:, 1 + 2 * dim],
    )


def write_events(path, events) -> None:
    if not events:
        raise ValueError("no events to write")
    dim = events[0].dim
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(event_header(dim))
        for event in events:
            writer.writerow([repr(float(event.t))]
                            + [repr(float(v)) for v in event.x])


def read_events(path) -> List[Event]:
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        rows = list(reader)
    if not rows:
        raise CsvFormatError("empty file", 1)
    dim = _header_dim(rows[0], event_header, 1)
    events = []
    for row_no, row in enumerate(rows[1:], start=2):
        values = _parse_row(row, 1 + dim, row_no)
        events.append(Event.of(values[0], values[1:]))
    if not events:
        raise CsvFormatError("no event rows after the header", 2)
    return events
