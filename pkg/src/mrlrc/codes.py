"""Linear-code bridge: generator matrices, their matroids, MR/MDS certification.

Columns of a generator matrix index the ground set; the rank of a subset
is the rank of the corresponding column submatrix.  Deletion and
contraction of the matroid correspond to puncturing and shortening of the
code, which are implemented directly on the matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError, SizeRefusal
from .gf import Field, FieldSpec, mat_rank, nullspace, parse_field
from .matroid import Matroid
from .mr import MrParams
from .subsets import bits_of, full_mask, mask_of, popcount

_CODE_LIMIT = 24


@dataclass(frozen=True)
class GenMatrix:
    """k x n generator matrix over a finite field; entries are canonical ints."""

    field: FieldSpec
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        q = self.field.q
        for row in self.rows:
            if len(row) != self.n:
                raise ParameterError(f"row length {len(row)} does not match n={self.n}")
            for v in row:
                if not 0 <= v < q:
                    raise ParameterError(f"entry {v} outside GF({q})")

    @property
    def k(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def submatrix_columns(self, cols) -> list[list[int]]:
        return [[row[j] for j in cols] for row in self.rows]


def matrix_from_rows(field: FieldSpec, rows) -> GenMatrix:
    rows = tuple(tuple(int(v) for v in r) for r in rows)
    if not rows:
        raise ParameterError("generator matrix needs at least one row")
    return GenMatrix(field, len(rows[0]), rows)


class LinearMatroid(Matroid):
    """Column matroid of a generator matrix; ranks are memoized."""

    def __init__(self, gm: GenMatrix):
        self.gm = gm
        self.width = gm.n
        self.ground = full_mask(gm.n)
        self._field = Field(gm.field)
        self._cache: dict[int, int] = {0: 0}

    def rank(self, x: int) -> int:
        self._check_subset(x)
        r = self._cache.get(x)
        if r is None:
            cols = bits_of(x)
            r = mat_rank(self._field, self.gm.submatrix_columns(cols))
            self._cache[x] = r
        return r


def code_to_matroid(gm: GenMatrix) -> LinearMatroid:
    return LinearMatroid(gm)


def is_mds_code(gm: GenMatrix) -> bool:
    """True iff every k columns are linearly independent (and the rows are too)."""
    if gm.n > _CODE_LIMIT:
        raise SizeRefusal(f"MDS check enumerates C(n, k) column sets; limit is n <= {_CODE_LIMIT}")
    field = Field(gm.field)
    k = gm.k
    if mat_rank(field, [list(r) for r in gm.rows]) != k:
        return False
    for cols in combinations(range(gm.n), k):
        if mat_rank(field, gm.submatrix_columns(cols)) != k:
            return False
    return True


def is_mr_lrc(gm: GenMatrix, p: MrParams) -> bool:
    """Certify maximal recoverability with locality r for the given partition.

    (a) each repair set's columns span at most r dimensions (a local
    parity exists); (b) every k-subset containing no whole repair set has
    full column rank k.
    """
    if gm.n != p.n or gm.k != p.k:
        raise ParameterError(
            f"matrix is [{gm.n},{gm.k}], parameters ask for [{p.n},{p.k}]"
        )
    if gm.n > _CODE_LIMIT:
        raise SizeRefusal(f"MR check limited to n <= {_CODE_LIMIT}")
    field = Field(gm.field)
    for b in p.repair_sets:
        if mat_rank(field, gm.submatrix_columns(bits_of(b))) > p.r:
            return False
    for cols in combinations(range(p.n), p.k):
        mask = mask_of(cols)
        if any(mask & b == b for b in p.repair_sets):
            continue
        if mat_rank(field, gm.submatrix_columns(cols)) != p.k:
            return False
    return True


def puncture(gm: GenMatrix, x: int) -> GenMatrix:
    """Drop the columns in x (matroid deletion)."""
    if x & ~full_mask(gm.n):
        raise ParameterError("puncture columns outside [n]")
    keep = [j for j in range(gm.n) if not x >> j & 1]
    rows = tuple(tuple(row[j] for j in keep) for row in gm.rows)
    return GenMatrix(gm.field, len(keep), rows)


def shorten(gm: GenMatrix, x: int) -> GenMatrix:
    """Shorten at the columns in x (matroid contraction).

    Eliminates the x-columns: the rows that end up zero on all of x
    generate the codewords vanishing on x; restricting them to the other
    coordinates gives the shortened code of dimension k - rank(x).
    """
    if x & ~full_mask(gm.n):
        raise ParameterError("shorten columns outside [n]")
    field = Field(gm.field)
    rows = [list(r) for r in gm.rows]
    used: list[int] = []
    for col in bits_of(x):
        piv = None
        for i in range(len(rows)):
            if i not in used and rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        inv = field.inv(rows[piv][col])
        rows[piv] = [field.mul(inv, v) for v in rows[piv]]
        for i in range(len(rows)):
            if i != piv and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(rows[i], rows[piv])]
        used.append(piv)
    keep = [j for j in range(gm.n) if not x >> j & 1]
    new_rows = tuple(
        tuple(rows[i][j] for j in keep) for i in range(len(rows)) if i not in used
    )
    return GenMatrix(gm.field, len(keep), new_rows)


def shorten_then_puncture(gm: GenMatrix, contract_mask: int, delete_mask: int) -> GenMatrix:
    """Shorten at contract_mask, then puncture at delete_mask.

    delete_mask uses the original column labels; shortening renumbers the
    surviving columns densely, so the deletions are remapped before
    puncturing.
    """
    if contract_mask & delete_mask:
        raise ParameterError("contract and delete columns overlap")
    shortened = shorten(gm, contract_mask)
    survivors = [j for j in range(gm.n) if not contract_mask >> j & 1]
    remapped = 0
    for new_j, old_j in enumerate(survivors):
        if delete_mask >> old_j & 1:
            remapped |= 1 << new_j
    return puncture(shortened, remapped)


def search_mr_code(
    p: MrParams, field: FieldSpec, trials: int, seed: int
) -> GenMatrix | None:
    """Seeded random search for a certified MR generator matrix.

    Each trial builds a parity-check matrix with one all-ones local parity
    per repair set plus h uniformly random heavy rows, takes its
    nullspace, and certifies.  Trials use derived seeds "seed:index", so
    the result is deterministic and independent of scheduling.
    """
    f = Field(field)
    local_rows = []
    for b in p.repair_sets:
        row = [0] * p.n
        for j in bits_of(b):
            row[j] = 1
        local_rows.append(row)
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        heavy = [[rng.randrange(field.q) for _ in range(p.n)] for _ in range(p.h)]
        basis = nullspace(f, local_rows + heavy)
        if len(basis) != p.k:
            continue
        gm = GenMatrix(field, p.n, tuple(tuple(v) for v in basis))
        if is_mr_lrc(gm, p):
            return gm
    return None


def write_matrix(gm: GenMatrix) -> str:
    lines = [gm.field.to_text(), f"{gm.k} {gm.n}"]
    for row in gm.rows:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def read_matrix(text: str) -> GenMatrix:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if len(lines) < 2:
        raise ValueError("matrix file needs a field line and a dimension line")
    head = lines[0].split()
    if head[0] != "field":
        raise ValueError(f"expected 'field ...' on line 1, got {lines[0]!r}")
    spec_txt = head[1]
    modulus = None
    for tok in head[2:]:
        if tok.startswith("modulus="):
            modulus = int(tok.split("=", 1)[1])
        else:
            raise ValueError(f"unknown field option {tok!r}")
    if "^" in spec_txt:
        ptxt, mtxt = spec_txt.split("^", 1)
        field = FieldSpec(int(ptxt), int(mtxt), modulus)
    else:
        if modulus is not None:
            raise ValueError("prime fields take no modulus")
        field = FieldSpec(int(spec_txt))
    try:
        k, n = (int(v) for v in lines[1].split())
    except ValueError as exc:
        raise ValueError(f"bad dimension line {lines[1]!r}") from exc
    rows = []
    for ln in lines[2:]:
        rows.append(tuple(int(v) for v in ln.split()))
    if len(rows) != k:
        raise ValueError(f"expected {k} rows, found {len(rows)}")
    gm = GenMatrix(field, n, tuple(rows))
    return gm


__all__ = [
    "GenMatrix",
    "LinearMatroid",
    "code_to_matroid",
    "is_mds_code",
    "is_mr_lrc",
    "matrix_from_rows",
    "parse_field",
    "puncture",
    "read_matrix",
    "search_mr_code",
    "shorten",
    "shorten_then_puncture",
    "write_matrix",
]
