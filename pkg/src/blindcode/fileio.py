"""Text formats for matrices and candidate sets.

Matrix files hold one row per nonempty line as a string of '0'/'1'
characters; lines starting with '#' are comments.  Candidate sets are
JSON documents of the form ``{"n": int, "k": int, "codes": [[row, ...],
...]}`` where each code is a list of k row strings of length n.
"""

from __future__ import annotations

import json
from pathlib import Path

from .detect import CandidateSet
from .errors import FormatError
from .gf2 import BitMatrix, BitVector
from .linear_code import LinearCode


def parse_matrix(text: str, source: str = "<string>") -> BitMatrix:
    """Parse matrix text; errors carry the source name and line number."""
    rows: list[BitVector] = []
    width: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            row = BitVector.from_string(line)
        except ValueError as exc:
            raise FormatError(f"{source}:{lineno}: {exc}") from exc
        if width is None:
            width = row.length
        elif row.length != width:
            raise FormatError(
                f"{source}:{lineno}: row length {row.length} != {width}"
            )
        rows.append(row)
    if not rows:
        raise FormatError(f"{source}: no matrix rows found")
    return BitMatrix(tuple(rows))


def emit_matrix(matrix: BitMatrix) -> str:
    """Render a matrix in the row-per-line format; parse(emit(m)) == m."""
    return "\n".join(matrix.to_strings()) + "\n"


def load_matrix(path: str | Path) -> BitMatrix:
    return parse_matrix(Path(path).read_text(), source=str(path))


def parse_candidate_set(text: str, source: str = "<string>") -> CandidateSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError(f"{source}: expected a JSON object")
    try:
        n = doc["n"]
        k = doc["k"]
        code_rows = doc["codes"]
    except KeyError as exc:
        raise FormatError(f"{source}: missing key {exc}") from exc
    if not isinstance(n, int) or not isinstance(k, int):
        raise FormatError(f"{source}: 'n' and 'k' must be integers")
    if not isinstance(code_rows, list) or not code_rows:
        raise FormatError(f"{source}: 'codes' must be a nonempty list")

    codes = []
    for ci, rows in enumerate(code_rows):
        if not isinstance(rows, list) or len(rows) != k:
            raise FormatError(
                f"{source}: code {ci}: expected {k} row strings"
            )
        parsed = []
        for ri, row in enumerate(rows):
            if not isinstance(row, str):
                raise FormatError(f"{source}: code {ci}, row {ri}: not a string")
            try:
                vec = BitVector.from_string(row)
            except ValueError as exc:
                raise FormatError(f"{source}: code {ci}, row {ri}: {exc}") from exc
            if vec.length != n:
                raise FormatError(
                    f"{source}: code {ci}, row {ri}: length {vec.length} != n={n}"
                )
            parsed.append(vec)
        codes.append(LinearCode(BitMatrix(tuple(parsed))))
    return CandidateSet(tuple(codes))


def load_candidate_set(path: str | Path) -> CandidateSet:
    return parse_candidate_set(Path(path).read_text(), source=str(path))
