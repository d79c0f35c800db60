"""Exact linear algebra over GF(2) with bit-packed rows.

Vectors are stored as Python ints: bit ``j`` of a row word holds the
entry in column ``j``.  Matrices carry a label per column; the label
order fixes the canonical ordering used for every emitted set.  All
values are immutable and all operations are pure, so they can be shared
freely.  Gaussian elimination always pivots on the first nonzero entry,
which keeps every result deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ParseError, UnknownLabel

MAX_COLUMNS = 64


def _rank_of_words(words: list[int], width: int) -> int:
    """Rank of bit-packed vectors via plain Gaussian elimination."""
    work = [w for w in words if w]
    rank = 0
    for bit in range(width):
        pivot = None
        for i in range(rank, len(work)):
            if (work[i] >> bit) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and (work[i] >> bit) & 1:
                work[i] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


@dataclass(frozen=True)
class GF2Vector:
    """Fixed-length vector over GF(2); addition is entrywise XOR."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("vector length must be nonnegative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits do not fit the declared length")

    @classmethod
    def from_entries(cls, entries: Iterable[int]) -> "GF2Vector":
        bits = 0
        length = 0
        for entry in entries:
            if entry not in (0, 1):
                raise ValueError(f"{entry!r} is not a GF(2) entry")
            bits |= entry << length
            length += 1
        return cls(bits, length)

    @classmethod
    def zero(cls, length: int) -> "GF2Vector":
        return cls(0, length)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return (self[i] for i in range(self.length))

    def __xor__(self, other: "GF2Vector") -> "GF2Vector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return GF2Vector(self.bits ^ other.bits, self.length)

    # Over GF(2) addition and subtraction are both XOR.
    __add__ = __xor__
    __sub__ = __xor__

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_list(self) -> list[int]:
        return [self[i] for i in range(self.length)]


@dataclass(frozen=True)
class GF2Matrix:
    """Matrix over GF(2) whose columns are labeled.

    The column labels are opaque strings; their order at construction is
    the canonical ground-set order for everything derived from the
    matrix.
    """

    rows: tuple[GF2Vector, ...]
    col_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.col_labels) > MAX_COLUMNS:
            raise ValueError(f"at most {MAX_COLUMNS} columns are supported")
        if len(set(self.col_labels)) != len(self.col_labels):
            raise ValueError("column labels must be distinct")
        for row in self.rows:
            if row.length != len(self.col_labels):
                raise ValueError("all rows must match the number of columns")

    @classmethod
    def from_rows(
        cls, rows: Iterable[Iterable[int]], col_labels: Iterable[str]
    ) -> "GF2Matrix":
        labels = tuple(str(lab) for lab in col_labels)
        packed = tuple(GF2Vector.from_entries(row) for row in rows)
        return cls(packed, labels)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.col_labels)

    @cached_property
    def _col_index(self) -> dict[str, int]:
        return {lab: j for j, lab in enumerate(self.col_labels)}

    def column_index(self, label: str) -> int:
        try:
            return self._col_index[label]
        except KeyError:
            raise UnknownLabel(f"unknown column label {label!r}") from None

    def column(self, label: str) -> GF2Vector:
        j = self.column_index(label)
        bits = 0
        for i, row in enumerate(self.rows):
            bits |= ((row.bits >> j) & 1) << i
        return GF2Vector(bits, self.n_rows)

    def transpose(self) -> "GF2Matrix":
        labels = tuple(f"r{i}" for i in range(self.n_rows))
        rows = tuple(
            GF2Vector.from_entries(row.bits >> j & 1 for row in self.rows)
            for j in range(self.n_cols)
        )
        return GF2Matrix(rows, labels)


def rank(m: GF2Matrix) -> int:
    """Dimension of the row space of ``m`` over GF(2)."""
    return _rank_of_words([row.bits for row in m.rows], m.n_cols)


def _column_words(m: GF2Matrix, cols: Iterable[str]) -> list[int]:
    return [m.column(lab).bits for lab in sorted(set(cols), key=m.column_index)]


def columns_dependent(m: GF2Matrix, cols: Iterable[str]) -> bool:
    """True iff the selected columns are linearly dependent over GF(2)."""
    words = _column_words(m, cols)
    return _rank_of_words(words, m.n_rows) < len(words)


def column_sum(m: GF2Matrix, cols: Iterable[str]) -> GF2Vector:
    """Entrywise XOR of the selected columns (at least one required)."""
    words = _column_words(m, cols)
    if not words:
        raise ValueError("column_sum needs at least one column")
    bits = 0
    for w in words:
        bits ^= w
    return GF2Vector(bits, m.n_rows)


def format_matrix(m: GF2Matrix) -> str:
    """Serialize to the matrix text format.

    Line 1 holds the whitespace-separated column labels; each following
    line holds one row of space-separated 0/1 entries.
    """
    lines = [" ".join(m.col_labels)]
    for row in m.rows:
        lines.append(" ".join(str(b) for b in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, source: str = "<string>") -> GF2Matrix:
    """Parse the matrix text format; blank lines are ignored."""
    labels: tuple[str, ...] | None = None
    rows: list[GF2Vector] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if labels is None:
            labels = tuple(line.split())
            if len(set(labels)) != len(labels):
                raise ParseError(f"{source}:{lineno}: duplicate column labels")
            continue
        fields = line.split()
        if len(fields) != len(labels):
            raise ParseError(
                f"{source}:{lineno}: expected {len(labels)} entries, got {len(fields)}"
            )
        entries = []
        for field in fields:
            if field not in ("0", "1"):
                raise ParseError(f"{source}:{lineno}: entry {field!r} is not 0 or 1")
            entries.append(int(field))
        rows.append(GF2Vector.from_entries(entries))
    if labels is None:
        raise ParseError(f"{source}: empty matrix file")
    try:
        return GF2Matrix(tuple(rows), labels)
    except ValueError as exc:
        raise ParseError(f"{source}: {exc}") from exc
