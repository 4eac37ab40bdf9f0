"""Zero-distance code construction for low-rank observations.

When the observed words have rank at most the target dimension k, a
full-rank k x n generator containing every observation in its span can
be built in polynomial time: keep a maximal independent subset of the
observation rows, then pad with standard basis vectors (tried in index
order) until the rank reaches k.  The resulting code has summed distance
zero to the observations, which is globally minimal.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .errors import DimensionMismatchError, InfeasibleRankError
from .gf2 import BitMatrix
from .linear_code import LinearCode


@dataclass(frozen=True)
class AugmentedCode:
    """Result of the construction: the code plus which rows went into it.

    The generator's first rows are the observation rows listed in
    ``used_observation_rows`` (verbatim, in that order); the remaining
    rows are the standard basis vectors at ``used_basis_indices``.  All
    indices are 0-based.
    """

    code: LinearCode
    used_observation_rows: tuple[int, ...]
    used_basis_indices: tuple[int, ...]


def build_zero_distance_code(observations: BitMatrix, k: int) -> AugmentedCode:
    """Build a full-rank k x n code whose span contains every observation.

    Raises InfeasibleRankError when the observations have rank above k
    (no zero-distance code of dimension k exists then), and
    DimensionMismatchError when k exceeds the block length.
    """
    n = observations.num_cols
    if not 1 <= k <= n:
        raise DimensionMismatchError(
            f"target dimension {k} must lie in 1..{n}"
        )
    independent = gf2.select_independent_rows(observations)
    r = len(independent)
    if r > k:
        raise InfeasibleRankError(
            f"observation rank {r} exceeds target dimension {k}"
        )

    rows = [observations.row(i).value for i in independent]
    basis = gf2.row_basis(rows)
    used_basis: list[int] = []
    for i in range(n):
        if len(basis) == k:
            break
        if gf2.basis_insert(basis, 1 << i):
            rows.append(1 << i)
            used_basis.append(i)
    assert len(basis) == k, "basis vectors must always reach full rank"

    code = LinearCode(BitMatrix.from_row_ints(rows, n))
    return AugmentedCode(
        code=code,
        used_observation_rows=independent,
        used_basis_indices=tuple(used_basis),
    )
