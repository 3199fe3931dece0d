"""Reading and writing the ``score,label`` CSV format.

Header must be exactly ``score,label``.  Scores are decimal floats, labels
are ``0`` or ``1`` (1 = target).  UTF-8; LF or CRLF line endings.
"""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import IO, Iterable, Sequence

import numpy as np

from kroc.curves import LabeledSample
from kroc.errors import InvalidLabel, NonFiniteScore, ParseError

HEADER = ("score", "label")


def parse_sample(lines: Iterable[str], source: str = "<input>") -> LabeledSample:
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError(f"{source}: empty file, expected header 'score,label'") from None
    # tolerate a UTF-8 byte order mark and surrounding whitespace
    header = [h.strip().lstrip("﻿") for h in header]
    if tuple(header) != HEADER:
        raise ParseError(f"{source}: header must be 'score,label', got {','.join(header)!r}")

    scores: list[float] = []
    labels: list[int] = []
    for row in reader:
        line = reader.line_num
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 2:
            raise ParseError(f"{source}:{line}: expected 2 fields, got {len(row)}")
        raw_score, raw_label = row[0].strip(), row[1].strip()
        try:
            score = float(raw_score)
        except ValueError:
            raise ParseError(f"{source}:{line}: bad score {raw_score!r}") from None
        if not math.isfinite(score):
            raise NonFiniteScore(f"{source}:{line}: non-finite score {raw_score!r}")
        if raw_label not in ("0", "1"):
            raise InvalidLabel(f"{source}:{line}: label must be 0 or 1, got {raw_label!r}")
        scores.append(score)
        labels.append(int(raw_label))
    return LabeledSample(np.array(scores, dtype=np.float64), np.array(labels, dtype=np.int8))


def read_sample(path: str | Path) -> LabeledSample:
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_sample(fh, source=str(path))


def write_sample(sample: LabeledSample, fh: IO[str]) -> None:
    fh.write("score,label\n")
    buf = io.StringIO()
    for s, lab in zip(sample.scores.tolist(), sample.labels.tolist()):
        buf.write(f"{s!r},{lab}\n")
    fh.write(buf.getvalue())


def write_rows(fh: IO[str], header: Sequence[str], columns: Sequence[Sequence]) -> None:
    """Write equally long columns as CSV; floats use round-trip repr."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(header)
    for row in zip(*(np.asarray(c).tolist() for c in columns)):
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
