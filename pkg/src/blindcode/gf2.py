"""Dense GF(2) vector/matrix arithmetic on int bitsets.

Vectors are packed into Python ints (coordinate ``i`` lives at bit ``i``),
so xor and ``int.bit_count`` do the heavy lifting.  All values are
immutable and every operation is a pure function.  Coordinates are
0-based throughout the API; 1-based numbering appears only in
command-line output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionMismatchError


@dataclass(frozen=True)
class BitVector:
    """A binary row vector of fixed length, packed into one int."""

    length: int
    value: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"vector length must be >= 1, got {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise ValueError("bits set beyond the declared length")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        acc = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit must be 0 or 1, got {b!r}")
            acc |= b << n
            n += 1
        return cls(n, acc)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a string of '0'/'1' characters, leftmost = coordinate 0."""
        return cls.from_bits(_char_bits(text))

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"coordinate {i} out of range for length {self.length}")
        return (self.value >> i) & 1

    def weight(self) -> int:
        """Number of nonzero coordinates."""
        return self.value.bit_count()

    def to_string(self) -> str:
        return "".join(str((self.value >> i) & 1) for i in range(self.length))

    def __iter__(self) -> Iterator[int]:
        return ((self.value >> i) & 1 for i in range(self.length))

    def __xor__(self, other: "BitVector") -> "BitVector":
        return xor_add(self, other)

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class BitMatrix:
    """A stack of equal-length BitVector rows."""

    rows: tuple[BitVector, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("matrix must have at least one row")
        n = self.rows[0].length
        if any(r.length != n for r in self.rows):
            raise DimensionMismatchError("all rows must share the same length")

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> "BitMatrix":
        return cls(tuple(BitVector.from_string(s) for s in lines))

    @classmethod
    def from_row_ints(cls, values: Iterable[int], n: int) -> "BitMatrix":
        return cls(tuple(BitVector(n, v) for v in values))

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return self.rows[0].length

    def row(self, i: int) -> BitVector:
        return self.rows[i]

    def row_ints(self) -> tuple[int, ...]:
        return tuple(r.value for r in self.rows)

    def to_strings(self) -> list[str]:
        return [r.to_string() for r in self.rows]


def _char_bits(text: str) -> Iterator[int]:
    for ch in text:
        if ch == "0":
            yield 0
        elif ch == "1":
            yield 1
        else:
            raise ValueError(f"invalid bit character {ch!r}")


def hamming_distance(a: BitVector, b: BitVector) -> int:
    """Number of coordinates where a and b differ."""
    if a.length != b.length:
        raise DimensionMismatchError(
            f"length mismatch: {a.length} vs {b.length}"
        )
    return (a.value ^ b.value).bit_count()


def xor_add(a: BitVector, b: BitVector) -> BitVector:
    """Componentwise sum modulo 2."""
    if a.length != b.length:
        raise DimensionMismatchError(
            f"length mismatch: {a.length} vs {b.length}"
        )
    return BitVector(a.length, a.value ^ b.value)


def vec_mat_mul(u: BitVector, m: BitMatrix) -> BitVector:
    """Row-vector by matrix product over GF(2).

    Returns the xor of the rows of ``m`` selected by the 1-bits of ``u``.
    """
    if u.length != m.num_rows:
        raise DimensionMismatchError(
            f"vector length {u.length} != row count {m.num_rows}"
        )
    acc = 0
    for i, row in enumerate(m.rows):
        if (u.value >> i) & 1:
            acc ^= row.value
    return BitVector(m.num_cols, acc)


def standard_basis(i: int, n: int) -> BitVector:
    """Unit vector with a 1 at coordinate ``i`` (0-based)."""
    if not 0 <= i < n:
        raise IndexError(f"coordinate {i} out of range for length {n}")
    return BitVector(n, 1 << i)


def rank(m: BitMatrix) -> int:
    """GF(2) row rank via Gaussian elimination."""
    return len(row_basis(m.row_ints()))


def select_independent_rows(m: BitMatrix) -> tuple[int, ...]:
    """Indices of a maximal independent row subset, greedily from the top.

    Scanning rows first-to-last makes the selection deterministic: a row
    is kept iff it is independent of all previously kept rows.
    """
    chosen: list[int] = []
    basis: dict[int, int] = {}
    for idx, v in enumerate(m.row_ints()):
        residue = _reduce_against(v, basis)
        if residue:
            basis[_low_bit(residue)] = residue
            chosen.append(idx)
    return tuple(chosen)


def _low_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def _reduce_against(x: int, basis: dict[int, int]) -> int:
    """Eliminate x against a pivot basis; 0 means x lies in its span."""
    while x:
        piv = _low_bit(x)
        if piv not in basis:
            return x
        x ^= basis[piv]
    return 0


def basis_insert(basis: dict[int, int], v: int) -> bool:
    """Add v to a pivot basis in place; False if it was already spanned."""
    residue = _reduce_against(v, basis)
    if not residue:
        return False
    basis[_low_bit(residue)] = residue
    return True


def row_basis(rows: Iterable[int]) -> dict[int, int]:
    """Build a fresh pivot basis (pivot column -> row value) for a row list."""
    basis: dict[int, int] = {}
    for v in rows:
        basis_insert(basis, v)
    return basis


def in_span(y: int, basis: dict[int, int]) -> bool:
    return _reduce_against(y, basis) == 0


def rref(m: BitMatrix) -> tuple[int, ...]:
    """Canonical reduced row echelon form, as nonzero row ints.

    Pivot columns are chosen smallest-index first and every pivot column
    is cleared in all other rows, so two matrices have equal row span iff
    their rref tuples compare equal.
    """
    work = list(m.row_ints())
    nrows = len(work)
    r = 0
    for col in range(m.num_cols):
        piv = next((i for i in range(r, nrows) if (work[i] >> col) & 1), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(nrows):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        r += 1
        if r == nrows:
            break
    return tuple(work[:r])
