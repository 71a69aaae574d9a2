"""Dense matrices over the Laurent ring."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .laurent import ONE, ZERO, LaurentPoly, PolyLike, as_poly, format_poly

__all__ = ["LambdaMatrix", "identity", "zeros", "mat_vec"]


@dataclass(frozen=True)
class LambdaMatrix:
    rows: int
    cols: int
    entries: tuple[LaurentPoly, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[PolyLike]]) -> "LambdaMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, tuple(as_poly(x) for r in rows for x in r))

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[LaurentPoly]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __add__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        self._check_shape(other)
        return LambdaMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        self._check_shape(other)
        return LambdaMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __matmul__(self, other: "LambdaMatrix") -> "LambdaMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                acc = ZERO
                for k, a in enumerate(row):
                    if a:
                        b = other[k, j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return LambdaMatrix(self.rows, other.cols, tuple(out))

    def transpose(self) -> "LambdaMatrix":
        return LambdaMatrix(
            self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))
        )

    def minor(self, drop_row: int, drop_col: int) -> "LambdaMatrix":
        rows = [
            [x for j, x in enumerate(r) if j != drop_col]
            for i, r in enumerate(self.to_rows())
            if i != drop_row
        ]
        return LambdaMatrix(self.rows - 1, self.cols - 1, tuple(x for r in rows for x in r))

    def _check_shape(self, other: "LambdaMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(format_poly(x) for x in r) + "]" for r in self.to_rows())


def identity(n: int) -> LambdaMatrix:
    return LambdaMatrix(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))


def zeros(rows: int, cols: int) -> LambdaMatrix:
    return LambdaMatrix(rows, cols, (ZERO,) * (rows * cols))


def mat_vec(a: LambdaMatrix, v: Iterable[LaurentPoly]) -> list[LaurentPoly]:
    v = list(v)
    if len(v) != a.cols:
        raise ValueError(f"vector of length {len(v)} against {a.cols} columns")
    out = []
    for i in range(a.rows):
        acc = ZERO
        for x, y in zip(a.row(i), v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out
