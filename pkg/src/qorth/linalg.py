"""Exact linear algebra over the scalar field.

Two tools live here. :class:`ScalarMatrix` is a sparse dict-of-rows matrix
used for R-matrices and projectors; ranks and reduced row echelon forms of
w-free matrices are delegated to sympy's ``DomainMatrix`` over Q(i)(r).
:class:`SemiEchelon` is an incremental sparse eliminator over the full field
that optionally records how each pivot row combines the input rows.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Hashable, Iterable, Mapping, Sequence
from typing import Any

from sympy.polys.matrices import DomainMatrix

from qorth.errors import AlgebraError, ShapeError
from qorth.scalar import ONE, RF, ZERO, Scalar

logger = logging.getLogger(__name__)

FIELD = RF.to_domain()

Row = dict[int, Scalar]


class ScalarMatrix:
    """Sparse rectangular matrix of Scalars, 0-based."""

    __slots__ = ("_rows", "ncols", "nrows")

    def __init__(
        self,
        nrows: int,
        ncols: int,
        rows: Mapping[int, Mapping[int, Scalar]] | None = None,
    ) -> None:
        self.nrows = nrows
        self.ncols = ncols
        self._rows: dict[int, Row] = {}
        for i, row in (rows or {}).items():
            clean = {j: v for j, v in row.items() if v}
            if clean:
                self._rows[i] = clean

    @classmethod
    def identity(cls, n: int) -> ScalarMatrix:
        return cls(n, n, {i: {i: ONE} for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> ScalarMatrix:
        return cls(nrows, nrows if ncols is None else ncols)

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[Scalar | int]]) -> ScalarMatrix:
        ncols = len(rows[0]) if rows else 0
        data = {
            i: {j: v if isinstance(v, Scalar) else Scalar(v) for j, v in enumerate(row)}
            for i, row in enumerate(rows)
        }
        return cls(len(rows), ncols, data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx: tuple[int, int]) -> Scalar:
        i, j = idx
        return self._rows.get(i, {}).get(j, ZERO)

    def row(self, i: int) -> Mapping[int, Scalar]:
        return self._rows.get(i, {})

    def items(self) -> Iterable[tuple[int, int, Scalar]]:
        for i in sorted(self._rows):
            row = self._rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def to_lists(self) -> list[list[Scalar]]:
        return [[self[i, j] for j in range(self.ncols)] for i in range(self.nrows)]

    def _same_shape(self, other: ScalarMatrix) -> None:
        if self.shape != other.shape:
            raise ShapeError(
                f"Shape mismatch {self.shape} vs {other.shape}", code="SHAPE_MISMATCH"
            )

    def __add__(self, other: ScalarMatrix) -> ScalarMatrix:
        self._same_shape(other)
        rows = {i: dict(r) for i, r in self._rows.items()}
        for i, r in other._rows.items():
            dst = rows.setdefault(i, {})
            for j, v in r.items():
                dst[j] = dst[j] + v if j in dst else v
        return ScalarMatrix(self.nrows, self.ncols, rows)

    def __neg__(self) -> ScalarMatrix:
        return self.scale(-ONE)

    def __sub__(self, other: ScalarMatrix) -> ScalarMatrix:
        return self + (-other)

    def scale(self, c: Scalar | int) -> ScalarMatrix:
        c = c if isinstance(c, Scalar) else Scalar(c)
        return ScalarMatrix(
            self.nrows,
            self.ncols,
            {i: {j: v * c for j, v in r.items()} for i, r in self._rows.items()},
        )

    def __matmul__(self, other: ScalarMatrix) -> ScalarMatrix:
        if self.ncols != other.nrows:
            raise ShapeError(
                f"Cannot multiply {self.shape} by {other.shape}", code="SHAPE_MISMATCH"
            )
        out: dict[int, Row] = {}
        for i, r in self._rows.items():
            acc: Row = {}
            for k, a in r.items():
                for j, b in other._rows.get(k, {}).items():
                    acc[j] = acc[j] + a * b if j in acc else a * b
            out[i] = acc
        return ScalarMatrix(self.nrows, other.ncols, out)

    def transpose(self) -> ScalarMatrix:
        out: dict[int, Row] = {}
        for i, r in self._rows.items():
            for j, v in r.items():
                out.setdefault(j, {})[i] = v
        return ScalarMatrix(self.ncols, self.nrows, out)

    def kron(self, other: ScalarMatrix) -> ScalarMatrix:
        out: dict[int, Row] = {}
        for i1, r1 in self._rows.items():
            for i2, r2 in other._rows.items():
                row = out.setdefault(i1 * other.nrows + i2, {})
                for j1, a in r1.items():
                    for j2, b in r2.items():
                        row[j1 * other.ncols + j2] = a * b
        return ScalarMatrix(self.nrows * other.nrows, self.ncols * other.ncols, out)

    def is_zero(self) -> bool:
        return not self._rows

    def is_lower_triangular(self) -> bool:
        return all(j <= i for i, r in self._rows.items() for j in r)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    __hash__ = None  # type: ignore[assignment]

    def to_domain_matrix(self) -> Any:
        """Convert to a sympy ``DomainMatrix`` over Q(i)(r); entries must be w-free."""
        data: dict[int, dict[int, Any]] = {}
        for i, r in self._rows.items():
            for j, v in r.items():
                if not v.is_rational_function:
                    raise AlgebraError(
                        "Entry involves w; sympy elimination needs Q(i)(r)"
                    )
                data.setdefault(i, {})[j] = v.part0
        return DomainMatrix(data, (self.nrows, self.ncols), FIELD)

    @classmethod
    def from_domain_matrix(cls, m: Any) -> ScalarMatrix:
        sdm = m.to_sparse().rep
        nrows, ncols = m.shape
        rows = {i: {j: Scalar(v) for j, v in r.items()} for i, r in sdm.items()}
        return cls(nrows, ncols, rows)

    def __repr__(self) -> str:
        return f"ScalarMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def rank(m: ScalarMatrix) -> int:
    """Exact rank. w-free matrices go through sympy; others through SemiEchelon."""
    try:
        dm = m.to_domain_matrix()
    except AlgebraError:
        ech: SemiEchelon = SemiEchelon()
        for i in range(m.nrows):
            ech.add(dict(m.row(i)))
        return ech.rank
    return int(dm.rank())


def rref(m: ScalarMatrix) -> tuple[ScalarMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns (w-free matrices only)."""
    reduced, pivots = m.to_domain_matrix().rref()
    return ScalarMatrix.from_domain_matrix(reduced), tuple(pivots)


class SemiEchelon:
    """Incremental sparse row reduction over the scalar field.

    Pivot rows are kept normalised (pivot entry 1) and are zero on the pivot
    columns of all earlier pivot rows, so a new row is reduced by walking the
    pivots in insertion order. The pivot of a reduced row is the column with
    the fewest nonzeros in ``column_counts`` (static Markowitz counts); ties
    go to the smallest ``column_key``.

    With ``track=True`` every pivot row carries its combination of the input
    tags, which :meth:`express` turns into a membership certificate.
    """

    def __init__(
        self,
        column_counts: Mapping[Hashable, int] | None = None,
        column_key: Callable[[Any], Any] | None = None,
        *,
        track: bool = False,
    ) -> None:
        self._counts = column_counts or {}
        self._key = column_key or (lambda c: c)
        self._track = track
        self._pivot_rows: list[dict[Any, Scalar]] = []
        self._pivot_cols: list[Any] = []
        self._pivot_index: dict[Any, int] = {}
        self._combos: list[dict[Any, Scalar]] = []

    @property
    def rank(self) -> int:
        return len(self._pivot_rows)

    @property
    def pivot_columns(self) -> list[Any]:
        return list(self._pivot_cols)

    def _choose_pivot(self, row: Mapping[Any, Scalar]) -> Any:
        return min(row, key=lambda c: (self._counts.get(c, 0), self._key(c)))

    def reduce(
        self, row: Mapping[Any, Scalar], combo: Mapping[Any, Scalar] | None = None
    ) -> tuple[dict[Any, Scalar], dict[Any, Scalar]]:
        """Reduce ``row`` against the stored pivots.

        Returns (remainder, combination).
        """
        vec = {c: v for c, v in row.items() if v}
        comb: dict[Any, Scalar] = dict(combo or {})
        while True:
            hits = [self._pivot_index[c] for c in vec if c in self._pivot_index]
            if not hits:
                return vec, comb
            k = min(hits)
            col = self._pivot_cols[k]
            factor = vec[col]
            for c, v in self._pivot_rows[k].items():
                nv = vec.get(c, ZERO) - factor * v
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
            if self._track:
                for t, v in self._combos[k].items():
                    nv = comb.get(t, ZERO) - factor * v
                    if nv:
                        comb[t] = nv
                    else:
                        comb.pop(t, None)

    def add(self, row: Mapping[Any, Scalar], tag: Hashable | None = None) -> bool:
        """Insert a row; returns False when it is dependent on the stored pivots."""
        combo = {tag: ONE} if self._track and tag is not None else {}
        vec, comb = self.reduce(row, combo)
        if not vec:
            return False
        col = self._choose_pivot(vec)
        inv = vec[col].inverse()
        vec = {c: v * inv for c, v in vec.items()}
        if self._track:
            comb = {t: v * inv for t, v in comb.items()}
        self._pivot_index[col] = len(self._pivot_rows)
        self._pivot_rows.append(vec)
        self._pivot_cols.append(col)
        self._combos.append(comb)
        return True

    def contains(self, row: Mapping[Any, Scalar]) -> bool:
        vec, _ = self.reduce(row)
        return not vec

    def express(self, row: Mapping[Any, Scalar]) -> dict[Any, Scalar] | None:
        """Coefficients c_t with row = sum c_t * input_t.

        None when ``row`` lies outside the span.
        """
        vec, comb = self.reduce(row)
        if vec:
            return None
        return {t: -v for t, v in comb.items()}
